//! File formats, suites and report assembly for the `verma-lab` binary.
//!
//! Every suite returns a serializable document with a `passed` flag. All
//! randomness is keyed by `(seed, trial)`, and parallel work is collected in
//! input order, so a report is a pure function of its arguments.

pub mod fixtures;
pub mod render;
pub mod report;
pub mod suites;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Sets the rayon pool size from `VERMA_LAB_THREADS`, if present.
pub fn configure_threads() {
    if let Some(n) = std::env::var("VERMA_LAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Only fails if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}
