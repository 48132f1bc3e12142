//! The arithmetic triangle of hypersolids sharing one common difference.
//!
//! Row `c` lists `S(v, d, c - v)` for `v = 0..=c`, so it begins with the
//! zero-dimensional value and ends with the `n = 0` zero. For `d = 0` the
//! rows are Pascal's triangle shifted down by two and padded with zeros.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{binomial, s, Nat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    d: u32,
    rows: Vec<Vec<Nat>>,
}

impl Triangle {
    /// Builds rows `0..=c_max` eagerly.
    pub fn build(d: u32, c_max: u32) -> Self {
        let rows = (0..=c_max)
            .map(|c| (0..=c).map(|v| s(v, d, c - v)).collect())
            .collect();
        Triangle { d, rows }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn c_max(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn rows(&self) -> &[Vec<Nat>] {
        &self.rows
    }

    pub fn row(&self, c: u32) -> Option<&[Nat]> {
        self.rows.get(c as usize).map(Vec::as_slice)
    }

    /// Entry at row `c`, position `v`, i.e. `S(v, d, c - v)`.
    pub fn entry(&self, c: u32, v: u32) -> Option<&Nat> {
        self.row(c).and_then(|row| row.get(v as usize))
    }

    /// Sum of row `c` by literal addition.
    pub fn literal_row_sum(&self, c: u32) -> Option<Nat> {
        self.row(c).map(|row| row.iter().sum())
    }
}

/// Closed-form row sum: `0` for `c < 2`, otherwise `(d + 1) 2^(c - 2)`.
pub fn row_sum(d: u32, c: u32) -> Nat {
    if c < 2 {
        return Nat::zero();
    }
    (Nat::from(d) + 1u32) << (c - 2) as usize
}

/// `sum_{r=0..=v} S(r, d, n)`, which equals `S(v, d, n + 1)` for `n >= 2`.
pub fn compile_row(d: u32, n: u32, v: u32) -> Nat {
    (0..=v).map(|r| s(r, d, n)).sum()
}

/// A line `m * v + n = k` through the triangle; `m = 2` is slope one half.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalSpec {
    pub d: u32,
    pub m: u32,
    pub k: u32,
}

impl DiagonalSpec {
    pub fn new(d: u32, m: u32, k: u32) -> Self {
        DiagonalSpec { d, m, k }
    }

    fn check(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::range("m", self.m, "m >= 2"));
        }
        if self.k < 2 {
            return Err(Error::range("k", self.k, "k >= 2"));
        }
        Ok(())
    }
}

/// Sum of `S(v, d, n)` over all `v, n >= 0` with `m * v + n = k`.
pub fn diagonal_sum(spec: DiagonalSpec) -> Result<Nat> {
    spec.check()?;
    let DiagonalSpec { d, m, k } = spec;
    Ok((0..=k / m).map(|v| s(v, d, k - m * v)).sum())
}

/// Diagonal sums `a_0, a_1, ...` with `a_i = diagonal_sum(d, m, i + 2)`.
///
/// For `m = 2` this is the Fibonacci-like sequence seeded `d, d + 1`.
pub fn recurrence_sequence(d: u32, m: u32, count: u32) -> Result<Vec<Nat>> {
    if count < 2 {
        return Err(Error::range("count", count, "count >= 2"));
    }
    (0..count)
        .map(|i| diagonal_sum(DiagonalSpec::new(d, m, i + 2)))
        .collect()
}

/// Whether entry `(c, v)` of the `d = 0` triangle equals `C(c - 2, v - 1)`.
pub fn pascal_entry_check(c: u32, v: u32) -> bool {
    if v > c {
        return false;
    }
    s(v, 0, c - v) == binomial(c as i64 - 2, v as i64 - 1)
}

/// Seeds `d, d + 1` continued by `a_i = a_{i-1} + a_{i-2}`.
pub fn fibonacci_like(d: u32, count: usize) -> Vec<Nat> {
    let mut out: Vec<Nat> = Vec::with_capacity(count);
    for i in 0..count {
        let next = match i {
            0 => Nat::from(d),
            1 => Nat::from(d) + Nat::one(),
            _ => &out[i - 1] + &out[i - 2],
        };
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nats(values: &[u64]) -> Vec<Nat> {
        values.iter().map(|&x| Nat::from(x)).collect()
    }

    #[test]
    fn rows_have_expected_shape() {
        let t = Triangle::build(1, 4);
        assert_eq!(t.row(4).unwrap(), nats(&[1, 3, 3, 1, 0]).as_slice());
        assert_eq!(
            Triangle::build(0, 4).row(4).unwrap(),
            nats(&[0, 1, 2, 1, 0]).as_slice()
        );
        for d in 0..5 {
            let t = Triangle::build(d, 12);
            assert_eq!(t.row(0).unwrap(), nats(&[0]).as_slice());
            assert_eq!(t.c_max(), 12);
            for c in 0..=12 {
                let row = t.row(c).unwrap();
                assert_eq!(row.len(), c as usize + 1);
                assert!(row.last().unwrap().is_zero());
            }
        }
        assert!(Triangle::build(3, 2).entry(3, 0).is_none());
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(row_sum(1, 4), Nat::from(8u32));
        assert_eq!(row_sum(3, 2), Nat::from(4u32));
        let entries = [s(0, 3, 2), s(1, 3, 1), s(2, 3, 0)];
        assert_eq!(entries.iter().sum::<Nat>(), Nat::from(4u32));
        for d in 0..10 {
            assert!(row_sum(d, 0).is_zero());
            assert!(row_sum(d, 1).is_zero());
        }
    }

    #[test]
    fn row_sum_matches_literal_addition() {
        for d in 0..=8 {
            let t = Triangle::build(d, 24);
            for c in 0..=24 {
                assert_eq!(t.literal_row_sum(c).unwrap(), row_sum(d, c), "d={d} c={c}");
            }
        }
    }

    #[test]
    fn compile_row_examples() {
        assert_eq!(compile_row(1, 2, 2), Nat::from(6u32));
        assert_eq!(compile_row(1, 2, 2), s(2, 1, 3));
        assert_eq!(compile_row(2, 3, 3), Nat::from(30u32));
        assert_eq!(compile_row(2, 3, 3), s(3, 2, 4));
        for d in 0..5 {
            for n in 0..8 {
                assert_eq!(compile_row(d, n, 0), s(0, d, n));
            }
        }
        for d in 0..=8 {
            for n in 2..=12 {
                for v in 0..=8 {
                    assert_eq!(compile_row(d, n, v), s(v, d, n + 1));
                }
            }
            // ranks 0 and 1 do not compile: the monad has no predecessor row
            for v in 1..=8 {
                assert_ne!(compile_row(d, 0, v), s(v, d, 1));
                if d > 0 {
                    assert_ne!(compile_row(d, 1, v), s(v, d, 2));
                }
            }
        }
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(
            diagonal_sum(DiagonalSpec::new(2, 2, 5)).unwrap(),
            Nat::from(8u32)
        );
        for d in 0..10 {
            assert_eq!(
                diagonal_sum(DiagonalSpec::new(d, 2, 2)).unwrap(),
                Nat::from(d)
            );
        }
        // S(v, 0, 8 - 2v) for v = 0..=4 is 0, 1, 4, 3, 0
        let brute: Nat = (0..=4).map(|v| s(v, 0, 8 - 2 * v)).sum();
        assert_eq!(brute, Nat::from(8u32));
        assert_eq!(
            diagonal_sum(DiagonalSpec::new(0, 2, 8)).unwrap(),
            Nat::from(8u32)
        );
    }

    #[test]
    fn diagonal_preconditions() {
        assert!(diagonal_sum(DiagonalSpec::new(1, 1, 5)).is_err());
        assert!(diagonal_sum(DiagonalSpec::new(1, 2, 1)).is_err());
        assert!(recurrence_sequence(1, 2, 1).is_err());
        assert!(recurrence_sequence(1, 0, 4).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            recurrence_sequence(1, 2, 6).unwrap(),
            nats(&[1, 2, 3, 5, 8, 13])
        );
        assert_eq!(
            recurrence_sequence(0, 2, 7).unwrap(),
            nats(&[0, 1, 1, 2, 3, 5, 8])
        );
        assert_eq!(
            recurrence_sequence(0, 3, 9).unwrap(),
            nats(&[0, 0, 1, 1, 1, 2, 3, 4, 6])
        );
        for d in 0..=6 {
            assert_eq!(
                recurrence_sequence(d, 2, 29).unwrap(),
                fibonacci_like(d, 29)
            );
        }
    }

    #[test]
    fn pascal_examples() {
        assert!(pascal_entry_check(4, 2));
        assert!(pascal_entry_check(10, 5));
        assert_eq!(s(5, 0, 5), Nat::from(70u32));
        for c in 0..=22 {
            assert!(pascal_entry_check(c, 0));
            for v in 0..=c {
                assert!(pascal_entry_check(c, v), "c={c} v={v}");
            }
        }
        assert!(!pascal_entry_check(3, 4));
    }
}
