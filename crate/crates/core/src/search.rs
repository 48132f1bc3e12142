//! Inverse problems: which hypersolid numbers equal a given integer.
//!
//! For fixed `v` and `n` the value `S(v, d, n) = base + d * slope` is affine
//! in `d`, with `base = C(v + n - 2, v - 1)` and `slope = C(v + n - 2, v)`.
//! A representation search therefore walks `(v, n)` pairs and solves for
//! `d` by one exact division instead of scanning `d`.

use std::ops::RangeInclusive;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{binomial, s, IndexTriple, Nat};

/// Unique rank `n >= 1` with `S(v, d, n) = value`, if there is one.
///
/// Requires a strictly increasing sequence: `v >= 2`, or `v = 1` with `d >= 1`.
pub fn rank_of(value: &Nat, v: u32, d: u32) -> Result<Option<u32>> {
    if v == 0 || (v == 1 && d == 0) {
        return Err(Error::range("v", v, "v >= 2, or v = 1 with d >= 1"));
    }
    if value.is_zero() {
        return Err(Error::range("value", 0, "value >= 1"));
    }
    // S(v, d, n) >= n, so the answer lies in [1, value]
    let mut lo: u64 = 1;
    let mut hi: u64 = value.to_u64().unwrap_or(u64::MAX).min(u32::MAX as u64);
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match s(v, d, mid as u32).cmp(value) {
            std::cmp::Ordering::Equal => return Ok(Some(mid as u32)),
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid - 1,
        }
    }
    Ok(None)
}

/// `[S(v, d, n) for n in n_from..=n_to]`.
pub fn sequence_slice(v: u32, d: u32, n_from: u32, n_to: u32) -> Result<Vec<Nat>> {
    if n_from > n_to {
        return Err(Error::range("n_from", n_from, "n_from <= n_to"));
    }
    Ok((n_from..=n_to).map(|n| s(v, d, n)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationQuery {
    #[serde(with = "crate::serde_nat")]
    pub target: Nat,
    pub v_range: RangeInclusive<u32>,
    pub d_range: RangeInclusive<u32>,
    pub n_min: u32,
    pub n_max: Option<u32>,
}

impl RepresentationQuery {
    /// Default box: `v in [2, 8]`, `d in [0, target]`, `n >= 3`.
    pub fn new(target: Nat) -> Self {
        let d_max = target.to_u32().unwrap_or(u32::MAX);
        RepresentationQuery {
            target,
            v_range: 2..=8,
            d_range: 0..=d_max,
            n_min: 3,
            n_max: None,
        }
    }

    pub fn v_range(mut self, range: RangeInclusive<u32>) -> Self {
        self.v_range = range;
        self
    }

    pub fn d_range(mut self, range: RangeInclusive<u32>) -> Self {
        self.d_range = range;
        self
    }

    pub fn n_min(mut self, n_min: u32) -> Self {
        self.n_min = n_min;
        self
    }

    pub fn n_max(mut self, n_max: Option<u32>) -> Self {
        self.n_max = n_max;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationHit {
    pub triple: IndexTriple,
    #[serde(with = "crate::serde_nat")]
    pub value: Nat,
}

/// Every `(v, d, n)` in the query box with `S(v, d, n) = target`, in
/// lexicographic order.
pub fn representations(q: &RepresentationQuery) -> Result<Vec<RepresentationHit>> {
    if q.target.is_zero() {
        return Err(Error::range("target", 0, "target >= 1"));
    }
    let d_lo = *q.d_range.start();
    // Without a rank cap the walk over n only terminates when the smallest
    // value in the box grows without bound.
    if q.n_max.is_none() && q.v_range.start() <= q.v_range.end() {
        let v_lo = *q.v_range.start();
        if v_lo == 0 || (v_lo == 1 && d_lo == 0) {
            return Err(Error::range(
                "n_max",
                "unbounded",
                "a rank cap when v < 2 (or v = 1 with d = 0) is searched",
            ));
        }
    }

    let mut hits = Vec::new();
    for v in q.v_range.clone() {
        let mut per_v = Vec::new();
        let mut n = q.n_min;
        loop {
            if q.n_max.is_some_and(|cap| n > cap) {
                break;
            }
            let upper = v as i64 + n as i64 - 2;
            let base = binomial(upper, v as i64 - 1);
            let slope = binomial(upper, v as i64);
            let smallest = &base + &slope * d_lo;
            // base and slope are both nondecreasing in n
            if smallest > q.target {
                break;
            }
            if q.target >= base {
                let rest = &q.target - &base;
                if slope.is_zero() {
                    if rest.is_zero() {
                        per_v.extend(q.d_range.clone().map(|d| IndexTriple::new(v, d, n)));
                    }
                } else {
                    let (d, rem) = rest.div_rem(&slope);
                    if rem.is_zero() {
                        if let Some(d) = d.to_u32().filter(|d| q.d_range.contains(d)) {
                            per_v.push(IndexTriple::new(v, d, n));
                        }
                    }
                }
            }
            if n == u32::MAX {
                break;
            }
            n += 1;
        }
        per_v.sort();
        hits.extend(per_v.into_iter().map(|triple| RepresentationHit {
            triple,
            value: q.target.clone(),
        }));
    }
    Ok(hits)
}

/// Convenience wrapper: the target's representations in the default box.
pub fn representations_of(target: u64) -> Result<Vec<RepresentationHit>> {
    representations(&RepresentationQuery::new(Nat::from(target)))
}
