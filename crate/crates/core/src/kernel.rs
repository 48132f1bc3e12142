//! Exact evaluation of hypersolid numbers `S(v, d, n)`.
//!
//! `S(v, d, n)` is the `n`th figurate number in `v` dimensions generated by
//! the arithmetic progression `1, 1 + d, 1 + 2d, ...`. It is evaluated either
//! by the binomial closed form
//!
//! ```text
//! S(v, d, n) = C(v + n - 2, v - 1) + d * C(v + n - 2, v)
//! ```
//!
//! or by repeatedly prefix-summing ("compiling") the one-dimensional
//! sequence `S(1, d, r) = 1 + (r - 1) d`. Binomials with a negative upper
//! index, a negative lower index, or a lower index above the upper one are
//! zero, which makes the closed form total over all `v, d, n >= 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer. Every S-number is a `Nat`.
pub type Nat = BigUint;

/// Coordinates `(v, d, n)` of one hypersolid number: dimension, common
/// difference and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexTriple {
    pub v: u32,
    pub d: u32,
    pub n: u32,
}

impl IndexTriple {
    pub const fn new(v: u32, d: u32, n: u32) -> Self {
        IndexTriple { v, d, n }
    }

    /// Total weight `v + d + n`.
    pub fn weight(&self) -> u64 {
        self.v as u64 + self.d as u64 + self.n as u64
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{},{})", self.v, self.d, self.n)
    }
}

impl From<(u32, u32, u32)> for IndexTriple {
    fn from((v, d, n): (u32, u32, u32)) -> Self {
        IndexTriple { v, d, n }
    }
}

/// How to evaluate an S-number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMethod {
    /// The binomial closed form.
    #[default]
    Closed,
    /// Iterated prefix sums starting from the one-dimensional row.
    Summation,
}

impl FromStr for EvalMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "closed" => Ok(EvalMethod::Closed),
            "summation" => Ok(EvalMethod::Summation),
            other => Err(format!("unknown evaluation method `{other}`")),
        }
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalMethod::Closed => "closed",
            EvalMethod::Summation => "summation",
        })
    }
}

/// Binomial coefficient `C(upper, lower)`, zero outside `0 <= lower <= upper`.
///
/// Uses the running product `prod (upper - i) / (i + 1)`; every partial
/// product is itself a binomial so each division is exact.
pub fn binomial(upper: i64, lower: i64) -> Nat {
    if upper < 0 || lower < 0 || lower > upper {
        return Nat::zero();
    }
    let k = lower.min(upper - lower) as u64;
    let top = upper as u64;
    let mut acc = Nat::one();
    for i in 0..k {
        acc *= top - i;
        acc /= i + 1;
    }
    acc
}

/// Permutation coefficient `P(upper, lower) = upper! / (upper - lower)!`,
/// zero outside `0 <= lower <= upper`.
pub fn permutation(upper: i64, lower: i64) -> Nat {
    if upper < 0 || lower < 0 || lower > upper {
        return Nat::zero();
    }
    let top = upper as u64;
    (0..lower as u64).fold(Nat::one(), |acc, i| acc * (top - i))
}

/// The `r`th term `1 + (r - 1) d` of the progression with difference `d`.
pub fn gnomon_term(d: u32, r: u32) -> Result<Nat> {
    if r == 0 {
        return Err(Error::range("r", r, "r >= 1"));
    }
    Ok(Nat::one() + Nat::from(d) * (r - 1))
}

/// Polygonal number `p(d, n) = n (2 + (n - 1) d) / 2`.
pub fn polygonal(d: u32, n: u32) -> Nat {
    if n == 0 {
        return Nat::zero();
    }
    let n_big = Nat::from(n);
    let factor = Nat::from(2u32) + Nat::from(d) * (n - 1);
    n_big * factor / 2u32
}

/// Pyramidal number `P(d, n) = n (n + 1) (3 + (n - 1) d) / 6`.
pub fn pyramidal(d: u32, n: u32) -> Nat {
    if n == 0 {
        return Nat::zero();
    }
    let n_big = Nat::from(n);
    let factor = Nat::from(3u32) + Nat::from(d) * (n - 1);
    &n_big * (&n_big + 1u32) * factor / 6u32
}

/// Four-dimensional solid number `n (n + 1) (n + 2) (4 + (n - 1) d) / 24`.
pub fn hyper4(d: u32, n: u32) -> Nat {
    if n == 0 {
        return Nat::zero();
    }
    let n_big = Nat::from(n);
    let factor = Nat::from(4u32) + Nat::from(d) * (n - 1);
    &n_big * (&n_big + 1u32) * (&n_big + 2u32) * factor / 24u32
}

/// Evaluates `S(v, d, n)` with the requested method.
pub fn hypersolid(t: IndexTriple, method: EvalMethod) -> Nat {
    match method {
        EvalMethod::Closed => closed_form(t),
        EvalMethod::Summation => compiled(t),
    }
}

/// Shorthand for the closed-form evaluation.
pub fn s(v: u32, d: u32, n: u32) -> Nat {
    closed_form(IndexTriple::new(v, d, n))
}

fn closed_form(IndexTriple { v, d, n }: IndexTriple) -> Nat {
    let upper = v as i64 + n as i64 - 2;
    let mut value = binomial(upper, v as i64 - 1);
    if d != 0 {
        value += binomial(upper, v as i64) * d;
    }
    value
}

fn compiled(IndexTriple { v, d, n }: IndexTriple) -> Nat {
    if v == 0 {
        return if n >= 2 { Nat::from(d) } else { Nat::zero() };
    }
    // row[r] = S(1, d, r) for r = 0..=n
    let mut row: Vec<Nat> = (0..=n)
        .map(|r| {
            if r == 0 {
                Nat::zero()
            } else {
                Nat::one() + Nat::from(d) * (r - 1)
            }
        })
        .collect();
    for _ in 1..v {
        let mut running = Nat::zero();
        for cell in row.iter_mut() {
            running += &*cell;
            cell.clone_from(&running);
        }
    }
    row.pop().unwrap_or_default()
}

/// The n-gnomon `S(v - 1, d, n)`, so that `S(v,d,n) = S(v,d,n-1) + gnomon`.
///
/// Undefined at `v = 1, n = 1`: the monad `S(1,d,1) = 1` does not arise
/// from the zero-dimensional `S(0,d,1) = 0`.
pub fn n_gnomon(t: IndexTriple) -> Result<Nat> {
    check_dimension_step(t)?;
    Ok(s(t.v - 1, t.d, t.n))
}

fn check_dimension_step(t: IndexTriple) -> Result<()> {
    if t.v == 0 {
        return Err(Error::range("v", t.v, "v >= 1"));
    }
    if t.n == 0 {
        return Err(Error::range("n", t.n, "n >= 1"));
    }
    if t.v == 1 && t.n == 1 {
        return Err(Error::range("(v, n)", "(1, 1)", "v >= 2 or n >= 2"));
    }
    Ok(())
}

/// The d-gnomon `S(v, 1, n - 1)`, so that `S(v,d,n) = S(v,d-1,n) + gnomon`.
///
/// Undefined at `v = 0, n = 2`, where `S(0,d,2) = d` steps by 1 while
/// `S(0,1,1) = 0`.
pub fn d_gnomon(t: IndexTriple) -> Result<Nat> {
    if t.d == 0 {
        return Err(Error::range("d", t.d, "d >= 1"));
    }
    if t.n == 0 {
        return Err(Error::range("n", t.n, "n >= 1"));
    }
    if t.v == 0 && t.n == 2 {
        return Err(Error::range("(v, n)", "(0, 2)", "v >= 1 or n != 2"));
    }
    Ok(s(t.v, 1, t.n - 1))
}

/// The v-gnomon `S(v, d, n - 1)`, so that `S(v,d,n) - S(v-1,d,n) = gnomon`.
///
/// Same domain as [`n_gnomon`]; the two are one identity read two ways.
pub fn v_gnomon(t: IndexTriple) -> Result<Nat> {
    check_dimension_step(t)?;
    Ok(s(t.v, t.d, t.n - 1))
}
