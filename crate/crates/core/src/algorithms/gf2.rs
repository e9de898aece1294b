//! GF(2) linear algebra for classical post-processing.

use crate::error::{Error, Result};

/// A system of parity constraints: each row is an n-bit mask r, constraining
/// solutions s to satisfy popcount(r & s) mod 2 = 0.
#[derive(Debug, Clone)]
pub struct Gf2System {
    width: usize,
    rows: Vec<u64>,
}

impl Gf2System {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 || width > 63 {
            return Err(Error::BadLayout {
                reason: format!("system width {width} out of range 1..=63"),
            });
        }
        Ok(Gf2System {
            width,
            rows: Vec::new(),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn push_row(&mut self, row: u64) -> Result<()> {
        if row >= 1u64 << self.width {
            return Err(Error::RowTooWide {
                row,
                width: self.width,
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        reduce(&self.rows, self.width).len()
    }
}

/// Every nonzero s with row . s = 0 for all rows, ascending. Enumeration is
/// guarded to widths of at most 20 bits.
pub fn gf2_nullspace(system: &Gf2System) -> Result<Vec<u64>> {
    let width = system.width;
    if width > 20 {
        return Err(Error::NullspaceTooWide { width });
    }
    let pivots = reduce(&system.rows, width);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(col, _)| col).collect();
    let free_cols: Vec<usize> = (0..width).filter(|c| !pivot_cols.contains(c)).collect();

    // one basis vector per free column: set that column, then fix each
    // pivot column from its reduced row
    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = 1u64 << fc;
        for &(col, row) in &pivots {
            if row >> fc & 1 == 1 {
                v |= 1 << col;
            }
        }
        basis.push(v);
    }

    let mut vectors = Vec::with_capacity((1usize << basis.len()) - 1);
    for combo in 1u64..1 << basis.len() {
        let mut v = 0;
        for (j, b) in basis.iter().enumerate() {
            if combo >> j & 1 == 1 {
                v ^= b;
            }
        }
        vectors.push(v);
    }
    vectors.sort_unstable();
    Ok(vectors)
}

/// Row-reduce to reduced echelon form; returns (pivot column, reduced row)
/// pairs. Pivot columns are scanned from the high bit down so printed
/// bitstrings reduce left to right.
fn reduce(rows: &[u64], width: usize) -> Vec<(usize, u64)> {
    let mut work: Vec<u64> = rows.to_vec();
    let mut is_pivot_row = vec![false; work.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in (0..width).rev() {
        let Some(pos) =
            (0..work.len()).find(|&i| !is_pivot_row[i] && work[i] >> col & 1 == 1)
        else {
            continue;
        };
        let pivot = work[pos];
        for (i, row) in work.iter_mut().enumerate() {
            if i != pos && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
        is_pivot_row[pos] = true;
        pivots.push((col, pos));
    }
    pivots
        .into_iter()
        .map(|(col, pos)| (col, work[pos]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(width: usize, rows: &[u64]) -> Gf2System {
        let mut s = Gf2System::new(width).unwrap();
        for &r in rows {
            s.push_row(r).unwrap();
        }
        s
    }

    // independent oracle: brute-force scan of all nonzero candidates
    fn brute_force(width: usize, rows: &[u64]) -> Vec<u64> {
        (1..1u64 << width)
            .filter(|&s| rows.iter().all(|&r| (r & s).count_ones() % 2 == 0))
            .collect()
    }

    #[test]
    fn single_parity_row() {
        let s = system(2, &[0b11]);
        assert_eq!(gf2_nullspace(&s).unwrap(), vec![0b11]);
        assert_eq!(brute_force(2, &[0b11]), vec![0b11]);
    }

    #[test]
    fn empty_system_constrains_nothing() {
        let s = system(2, &[]);
        assert_eq!(gf2_nullspace(&s).unwrap(), vec![0b01, 0b10, 0b11]);
    }

    #[test]
    fn full_rank_leaves_only_zero() {
        let s = system(2, &[0b01, 0b10]);
        assert_eq!(gf2_nullspace(&s).unwrap(), Vec::<u64>::new());
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn matches_brute_force_on_random_systems() {
        // deterministic pseudo-random rows
        let mut x: u64 = 0x2545F4914F6CDD1D;
        for width in 1..=6usize {
            for trial in 0..40 {
                let count = trial % 5;
                let mut rows = Vec::new();
                for _ in 0..count {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    rows.push(x & ((1 << width) - 1));
                }
                let s = system(width, &rows);
                assert_eq!(
                    gf2_nullspace(&s).unwrap(),
                    brute_force(width, &rows),
                    "width {width}, rows {rows:?}"
                );
            }
        }
    }

    #[test]
    fn width_guard() {
        let s = Gf2System::new(21).unwrap();
        assert!(matches!(
            gf2_nullspace(&s),
            Err(Error::NullspaceTooWide { width: 21 })
        ));
        let mut s = Gf2System::new(3).unwrap();
        assert!(matches!(
            s.push_row(0b1000),
            Err(Error::RowTooWide { .. })
        ));
    }
}
