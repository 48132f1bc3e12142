//! Sums of hypersolid numbers whose coordinates add up to a fixed weight
//! `s = v + d + n`, optionally with one coordinate pinned.
//!
//! Every report carries two independent answers: the closed form, when one
//! applies, and a brute-force enumeration over all weight-`s` triples. The
//! "multitude" of a query is how many of those triples have a nonzero value.

mod lemmas;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{binomial, s as eval, IndexTriple, Nat};

pub use lemmas::{lemma_check, Bindings, LemmaId};

/// Which coordinate, if any, is held fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase", tag = "axis", content = "value")]
pub enum Fixed {
    #[default]
    None,
    V(u32),
    D(u32),
    N(u32),
}

impl Fixed {
    fn value(&self) -> Option<u32> {
        match *self {
            Fixed::None => None,
            Fixed::V(x) | Fixed::D(x) | Fixed::N(x) => Some(x),
        }
    }

    fn admits(&self, t: &IndexTriple) -> bool {
        match *self {
            Fixed::None => true,
            Fixed::V(v) => t.v == v,
            Fixed::D(d) => t.d == d,
            Fixed::N(n) => t.n == n,
        }
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixed::None => f.write_str("none"),
            Fixed::V(x) => write!(f, "v={x}"),
            Fixed::D(x) => write!(f, "d={x}"),
            Fixed::N(x) => write!(f, "n={x}"),
        }
    }
}

impl FromStr for Fixed {
    type Err = String;

    /// Parses `none`, `v=3`, `d=0`, `n=4`.
    fn from_str(text: &str) -> std::result::Result<Self, Self::Err> {
        let text = text.trim();
        if text == "none" {
            return Ok(Fixed::None);
        }
        let (axis, value) = text
            .split_once('=')
            .ok_or_else(|| format!("expected `v=<k>`, `d=<k>`, `n=<k>` or `none`, got `{text}`"))?;
        let value: u32 = value
            .trim()
            .parse()
            .map_err(|e| format!("bad coordinate value `{value}`: {e}"))?;
        match axis.trim() {
            "v" => Ok(Fixed::V(value)),
            "d" => Ok(Fixed::D(value)),
            "n" => Ok(Fixed::N(value)),
            other => Err(format!("unknown coordinate `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumQuery {
    pub s: u32,
    pub fixed: Fixed,
}

impl SumQuery {
    pub fn new(s: u32, fixed: Fixed) -> Result<Self> {
        if let Some(value) = fixed.value() {
            if value > s {
                let param = match fixed {
                    Fixed::V(_) => "v",
                    Fixed::D(_) => "d",
                    _ => "n",
                };
                return Err(Error::range(param, value, "fixed coordinate <= s"));
            }
        }
        Ok(SumQuery { s, fixed })
    }
}

/// One contributing S-number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub triple: IndexTriple,
    #[serde(with = "crate::serde_nat")]
    pub value: Nat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumReport {
    pub query: SumQuery,
    /// `None` where no closed form applies to the query.
    #[serde(with = "crate::serde_nat::option")]
    pub formula_sum: Option<Nat>,
    #[serde(with = "crate::serde_nat")]
    pub enumerated_sum: Nat,
    pub formula_multitude: Option<u64>,
    pub enumerated_multitude: u64,
    /// Nonzero contributors, present when requested.
    pub triples: Option<Vec<Term>>,
    pub consistent: bool,
}

impl SumReport {
    fn assemble(query: SumQuery, formula: Option<(Nat, u64)>, list: bool) -> Self {
        let nonzero: Vec<Term> = enumerate_where(query.s, query.fixed)
            .into_iter()
            .filter(|term| !term.value.is_zero())
            .collect();
        let enumerated_sum: Nat = nonzero.iter().map(|t| &t.value).sum();
        let enumerated_multitude = nonzero.len() as u64;
        let (formula_sum, formula_multitude) = match formula {
            Some((sum, count)) => (Some(sum), Some(count)),
            None => (None, None),
        };
        let consistent = formula_sum.as_ref() == Some(&enumerated_sum)
            && formula_multitude == Some(enumerated_multitude);
        SumReport {
            query,
            formula_sum,
            enumerated_sum,
            formula_multitude,
            enumerated_multitude,
            triples: list.then_some(nonzero),
            consistent,
        }
    }

    /// Whether a closed form applies to this query.
    pub fn has_closed_form(&self) -> bool {
        self.formula_sum.is_some()
    }

    /// Consistent, or no closed form to contradict the enumeration.
    pub fn verified(&self) -> bool {
        self.consistent || !self.has_closed_form()
    }
}

/// All `C(s + 2, 2)` triples of weight `s` with their values, in
/// lexicographic `(v, d, n)` order.
pub fn enumerate_triples(s: u32) -> Vec<(IndexTriple, Nat)> {
    enumerate_where(s, Fixed::None)
        .into_iter()
        .map(|term| (term.triple, term.value))
        .collect()
}

fn enumerate_where(s: u32, fixed: Fixed) -> Vec<Term> {
    let mut out = Vec::new();
    for v in 0..=s {
        if matches!(fixed, Fixed::V(x) if x != v) {
            continue;
        }
        for d in 0..=s - v {
            let triple = IndexTriple::new(v, d, s - v - d);
            if fixed.admits(&triple) {
                out.push(Term {
                    triple,
                    value: eval(triple.v, triple.d, triple.n),
                });
            }
        }
    }
    out
}

/// Sum and multitude with `s` and `v` fixed.
pub fn sum_fixed_sv(s: u32, v: u32, list: bool) -> Result<SumReport> {
    let query = SumQuery::new(s, Fixed::V(v))?;
    let (s, v) = (s as i64, v as i64);
    let formula = if v == 0 {
        (binomial(s - 1, 2), (s - 2).max(0) as u64)
    } else {
        (binomial(s - 1, v) + binomial(s - 1, v + 2), (s - v) as u64)
    };
    Ok(SumReport::assemble(query, Some(formula), list))
}

/// Sum and multitude with `s` and `d` fixed. No closed form for `d >= s - 1`.
pub fn sum_fixed_sd(s: u32, d: u32, list: bool) -> Result<SumReport> {
    let query = SumQuery::new(s, Fixed::D(d))?;
    let formula = (s >= 2 && d <= s - 2).then(|| {
        let sum = (Nat::from(d) + 1u32) << (s - d - 2) as usize;
        let count = if d == 0 { s - 1 } else { s - d };
        (sum, count as u64)
    });
    Ok(SumReport::assemble(query, formula, list))
}

/// Sum and multitude with `s` and `n` fixed. No closed form for `n = s >= 2`.
pub fn sum_fixed_sn(s: u32, n: u32, list: bool) -> Result<SumReport> {
    let query = SumQuery::new(s, Fixed::N(n))?;
    let formula = match n {
        0 => Some((Nat::zero(), 0)),
        1 => Some((Nat::from(s - 1), (s - 1) as u64)),
        _ if n < s => Some((binomial(s as i64 - 1, n as i64) * 2u32, (s - n + 1) as u64)),
        _ => None,
    };
    Ok(SumReport::assemble(query, formula, list))
}

/// Sum and multitude over every triple of weight `s`; closed form for `s >= 2`.
pub fn sum_fixed_s(s: u32, list: bool) -> SumReport {
    let query = SumQuery {
        s,
        fixed: Fixed::None,
    };
    let formula = (s >= 2).then(|| {
        let sum = (Nat::from(1u32) << s as usize) - (s + 1);
        let count = s as u64 * (s as u64 + 1) / 2 - 2;
        (sum, count)
    });
    SumReport::assemble(query, formula, list)
}

/// Dispatches on the query's fixed coordinate.
pub fn sum_report(query: SumQuery, list: bool) -> Result<SumReport> {
    match query.fixed {
        Fixed::None => Ok(sum_fixed_s(query.s, list)),
        Fixed::V(v) => sum_fixed_sv(query.s, v, list),
        Fixed::D(d) => sum_fixed_sd(query.s, d, list),
        Fixed::N(n) => sum_fixed_sn(query.s, n, list),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(x: u64) -> Nat {
        Nat::from(x)
    }

    #[test]
    fn enumeration_counts() {
        let two = enumerate_triples(2);
        assert_eq!(two.len(), 6);
        let nonzero: Vec<_> = two.iter().filter(|(_, v)| !v.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].0, IndexTriple::new(1, 0, 1));
        assert_eq!(nonzero[0].1, nat(1));

        assert_eq!(
            enumerate_triples(0),
            vec![(IndexTriple::new(0, 0, 0), nat(0))]
        );

        for s in 0..20u32 {
            let all = enumerate_triples(s);
            assert_eq!(all.len() as u32, (s + 1) * (s + 2) / 2);
            assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(all.iter().all(|(t, _)| t.weight() == s as u64));
        }
    }

    #[test]
    fn six_weight_listing() {
        let expected = [
            ((0, 1, 5), 1),
            ((0, 2, 4), 2),
            ((0, 3, 3), 3),
            ((0, 4, 2), 4),
            ((1, 0, 5), 1),
            ((1, 1, 4), 4),
            ((1, 2, 3), 5),
            ((1, 3, 2), 4),
            ((1, 4, 1), 1),
            ((2, 0, 4), 4),
            ((2, 1, 3), 6),
            ((2, 2, 2), 4),
            ((2, 3, 1), 1),
            ((3, 0, 3), 6),
            ((3, 1, 2), 4),
            ((3, 2, 1), 1),
            ((4, 0, 2), 4),
            ((4, 1, 1), 1),
            ((5, 0, 1), 1),
        ];
        let got: Vec<_> = enumerate_triples(6)
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        assert_eq!(enumerate_triples(6).len(), 28);
        assert_eq!(got.len(), expected.len());
        for ((triple, value), (coords, want)) in got.iter().zip(expected) {
            assert_eq!(*triple, IndexTriple::from(coords));
            assert_eq!(*value, nat(want));
        }
    }

    #[test]
    fn fixed_v_examples() {
        let r = sum_fixed_sv(10, 2, false).unwrap();
        assert_eq!(
            (r.formula_sum.clone(), r.formula_multitude),
            (Some(nat(162)), Some(8))
        );
        assert!(r.consistent);
        let r = sum_fixed_sv(11, 2, false).unwrap();
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(255), 9)
        );
        assert!(r.consistent);
        let addends = [1u64, 10, 30, 60, 95, 126, 140, 120, 45];
        let r = sum_fixed_sv(12, 3, true).unwrap();
        assert_eq!(r.enumerated_sum, nat(addends.iter().sum()));
        assert_eq!(r.formula_sum, Some(nat(627)));
        assert_eq!(r.enumerated_multitude, 9);
        assert!(r.consistent);
        // listed by increasing d, i.e. the printed addends in reverse
        let values: Vec<Nat> = r.triples.unwrap().into_iter().map(|t| t.value).collect();
        assert_eq!(
            values,
            addends.iter().rev().map(|&x| nat(x)).collect::<Vec<_>>()
        );
        let r = sum_fixed_sv(6, 0, false).unwrap();
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(10), 4)
        );
        assert!(r.consistent);
    }

    #[test]
    fn fixed_v_small_weights() {
        for s in 0..2 {
            let r = sum_fixed_sv(s, 0, false).unwrap();
            assert_eq!(r.formula_multitude, Some(0));
            assert!(r.consistent);
        }
    }

    #[test]
    fn fixed_d_examples() {
        let r = sum_fixed_sd(6, 1, false).unwrap();
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(16), 5)
        );
        assert!(r.consistent);
        let r = sum_fixed_sd(6, 0, false).unwrap();
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(16), 5)
        );
        assert!(r.consistent);
        for s in 0..12u32 {
            for d in [s, s.saturating_sub(1)] {
                let r = sum_fixed_sd(s, d, false).unwrap();
                assert!(!r.has_closed_form());
                assert!(r.enumerated_sum.is_zero());
                assert_eq!(r.enumerated_multitude, 0);
                assert!(r.verified());
                assert!(!r.consistent);
            }
        }
    }

    #[test]
    fn fixed_n_examples() {
        let r = sum_fixed_sn(6, 2, true).unwrap();
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(20), 5)
        );
        assert!(r.triples.unwrap().iter().all(|t| t.value == nat(4)));
        assert!(r.consistent);
        let r = sum_fixed_sn(9, 4, false).unwrap();
        assert_eq!(r.enumerated_sum, nat(5 + 13 + 22 + 30 + 35 + 35));
        assert_eq!(r.formula_sum, Some(nat(140)));
        for s in 1..20 {
            let r = sum_fixed_sn(s, 1, false).unwrap();
            assert_eq!(r.enumerated_sum, nat(s as u64 - 1));
            assert!(r.consistent);
        }
        let table6 = [0u64, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715];
        for (s, half) in (4..=14).zip(table6) {
            let r = sum_fixed_sn(s, 4, false).unwrap();
            assert_eq!(r.enumerated_sum, nat(2 * half), "s={s}");
        }
        assert!(!sum_fixed_sn(4, 4, false).unwrap().has_closed_form());
    }

    #[test]
    fn whole_weight_examples() {
        let r = sum_fixed_s(6, false);
        assert_eq!(
            (r.formula_sum.clone(), r.formula_multitude),
            (Some(nat(57)), Some(19))
        );
        assert!(r.consistent);
        let r = sum_fixed_s(2, false);
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(1), 1)
        );
        assert!(r.consistent);
        let r = sum_fixed_s(10, false);
        assert_eq!(
            (r.enumerated_sum.clone(), r.enumerated_multitude),
            (nat(1013), 53)
        );
        assert!(r.consistent);
        assert!(!sum_fixed_s(1, false).has_closed_form());
    }

    #[test]
    fn out_of_range_coordinates() {
        assert!(sum_fixed_sv(3, 4, false).is_err());
        assert!(sum_fixed_sd(3, 4, false).is_err());
        assert!(sum_fixed_sn(3, 4, false).is_err());
        assert!(SumQuery::new(2, Fixed::N(3)).is_err());
    }

    #[test]
    fn zero_census() {
        for s in 2..30u32 {
            let zeros = enumerate_triples(s)
                .iter()
                .filter(|(_, v)| v.is_zero())
                .count();
            assert_eq!(zeros as u32, s + 3);
        }
    }

    #[test]
    fn fixed_parsing() {
        assert_eq!("v=2".parse::<Fixed>().unwrap(), Fixed::V(2));
        assert_eq!(" n = 4 ".parse::<Fixed>().unwrap(), Fixed::N(4));
        assert_eq!("none".parse::<Fixed>().unwrap(), Fixed::None);
        assert!("x=1".parse::<Fixed>().is_err());
        assert!("d=-1".parse::<Fixed>().is_err());
        assert!("d".parse::<Fixed>().is_err());
        assert_eq!(Fixed::D(3).to_string(), "d=3");
    }
}
