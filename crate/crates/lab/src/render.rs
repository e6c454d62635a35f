//! Canonical text forms: integers as decimal strings, rationals as
//! `"num/den"`, matrices as `[row, col, "num/den"]` triplets.

use num_bigint::BigInt;
use serde::Serialize;
use verma_core::exactla::SparseMat;
use verma_core::Rational;

pub fn rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rationals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(rational).collect()
}

pub fn integer(x: &BigInt) -> String {
    x.to_string()
}

/// Integer rendering for values proven integral; anything else keeps its
/// denominator so a broken claim is visible rather than rounded.
pub fn integral(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        rational(x)
    }
}

pub fn integrals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(integral).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triplet(pub usize, pub usize, pub String);

pub fn triplets(m: &SparseMat<Rational>) -> Vec<Triplet> {
    m.triplets().map(|(r, c, x)| Triplet(r, c, rational(x))).collect()
}

/// A flat table for CSV output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use verma_core::exactla::rat;

    #[test]
    fn rational_forms() {
        assert_eq!(rational(&rat(-6, 4)), "-3/2");
        assert_eq!(rational(&rat(5, 1)), "5/1");
        assert_eq!(integral(&rat(5, 1)), "5");
        assert_eq!(integral(&rat(1, 2)), "1/2");
    }

    #[test]
    fn csv_quotes_and_crlf() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["x,y".into(), "1/2".into()]);
        assert_eq!(t.to_csv().unwrap(), "a,b\r\n\"x,y\",1/2\r\n");
    }
}
