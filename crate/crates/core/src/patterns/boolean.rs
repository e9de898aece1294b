//! Explicit truth tables for finite Boolean functions f: {0,1}^n -> {0,1}^m.
//!
//! Tables are the ground truth for oracle synthesis. They stay explicit at
//! the type level so they can be validated eagerly and serialized; a
//! predicate convenience constructor evaluates closures into tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct BooleanFunction {
    n: usize,
    m: usize,
    table: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    n: usize,
    m: usize,
    table: Vec<u64>,
}

impl TryFrom<RawTable> for BooleanFunction {
    type Error = Error;
    fn try_from(raw: RawTable) -> Result<Self> {
        BooleanFunction::new(raw.n, raw.m, raw.table)
    }
}

impl From<BooleanFunction> for RawTable {
    fn from(f: BooleanFunction) -> RawTable {
        RawTable {
            n: f.n,
            m: f.m,
            table: f.table,
        }
    }
}

impl BooleanFunction {
    pub fn new(n: usize, m: usize, table: Vec<u64>) -> Result<Self> {
        if n == 0 || n > 24 {
            return Err(Error::BadLayout {
                reason: format!("function input width {n} out of range 1..=24"),
            });
        }
        if m == 0 || m > 32 {
            return Err(Error::BadLayout {
                reason: format!("function output width {m} out of range 1..=32"),
            });
        }
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(Error::TableLength {
                len: table.len(),
                expected,
            });
        }
        let bound = 1u64 << m;
        for (index, &value) in table.iter().enumerate() {
            if value >= bound {
                return Err(Error::TableEntryRange { value, index, m });
            }
        }
        Ok(BooleanFunction { n, m, table })
    }

    /// Tabulate an arbitrary output function.
    pub fn from_fn(n: usize, m: usize, f: impl Fn(u64) -> u64) -> Result<Self> {
        let table = (0..1u64 << n).map(f).collect();
        Self::new(n, m, table)
    }

    /// Tabulate a predicate as an indicator function (m = 1).
    pub fn indicator(n: usize, pred: impl Fn(u64) -> bool) -> Result<Self> {
        Self::from_fn(n, 1, |x| u64::from(pred(x)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn domain_size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    pub fn evaluate(&self, x: u64) -> u64 {
        self.table[x as usize]
    }

    pub fn is_constant(&self) -> bool {
        self.table.iter().all(|&v| v == self.table[0])
    }

    /// Inputs mapped to 1. Only meaningful for indicator functions.
    pub fn preimage_of_one(&self) -> Result<Vec<u64>> {
        if self.m != 1 {
            return Err(Error::NotIndicator { m: self.m });
        }
        Ok((0..self.table.len() as u64)
            .filter(|&x| self.table[x as usize] == 1)
            .collect())
    }

    /// Parse the structured truth-table document `{"n":..,"m":..,"table":[..]}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_lengths_and_entries() {
        assert!(BooleanFunction::new(2, 1, vec![0, 1, 1]).is_err());
        assert!(matches!(
            BooleanFunction::new(1, 1, vec![0, 2]),
            Err(Error::TableEntryRange {
                value: 2,
                index: 1,
                m: 1
            })
        ));
        assert!(BooleanFunction::new(2, 2, vec![0, 1, 2, 3]).is_ok());
    }

    #[test]
    fn indicator_tabulates_predicate() {
        let f = BooleanFunction::indicator(3, |x| x == 5).unwrap();
        assert_eq!(f.evaluate(5), 1);
        assert_eq!(f.evaluate(4), 0);
        assert_eq!(f.preimage_of_one().unwrap(), vec![5]);
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let f = BooleanFunction::new(2, 1, vec![0, 1, 1, 0]).unwrap();
        let back = BooleanFunction::from_json_str(&f.to_json()).unwrap();
        assert_eq!(back, f);

        let bad = r#"{"n": 2, "m": 1, "table": [0, 1, 1]}"#;
        assert!(BooleanFunction::from_json_str(bad).is_err());
    }
}
