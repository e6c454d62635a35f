use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Per-trial generator, so trials can be replayed or run in any order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}
