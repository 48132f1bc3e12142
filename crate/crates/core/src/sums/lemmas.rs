//! The auxiliary summation identities used to derive the closed forms,
//! each checkable at concrete parameter values with exact arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::kernel::{binomial, permutation, Nat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    /// `sum_{r=1..n} r = n (n + 1) / 2`
    SumR,
    /// `sum_{r=1..n} r^2 = n (n + 1) (2n + 1) / 6`
    SumR2,
    /// `sum_{r=1..n} r^3 = (n (n + 1) / 2)^2`
    SumR3,
    /// `sum_{j=m..M} C(j, m) = C(M + 1, m + 1)`
    HockeyStick,
    /// `sum_{i=0..m} C(M + i, i) = C(M + m + 1, m)`
    DiagonalStick,
    /// `sum_{i=0..M} C(M, i) = 2^M`
    RowPower,
    /// `sum_{j=1..M-m} j C(M - j, m) = C(M + 1, m + 2)` for `M > m`
    WeightedStick,
    /// `P(M + 1, m) = m! + m sum_{j=m..M} P(j, m - 1)` for `m <= M`
    PermutationLadder,
    /// `sum_{r=0..R} 2^r = 2^(R + 1) - 1`
    Geometric,
    /// `sum_{r=0..R} r 2^r = 2 + (R - 1) 2^(R + 1)`
    WeightedGeometric,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::SumR,
        LemmaId::SumR2,
        LemmaId::SumR3,
        LemmaId::HockeyStick,
        LemmaId::DiagonalStick,
        LemmaId::RowPower,
        LemmaId::WeightedStick,
        LemmaId::PermutationLadder,
        LemmaId::Geometric,
        LemmaId::WeightedGeometric,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::SumR => "sum_r",
            LemmaId::SumR2 => "sum_r2",
            LemmaId::SumR3 => "sum_r3",
            LemmaId::HockeyStick => "hockey_stick",
            LemmaId::DiagonalStick => "diagonal_stick",
            LemmaId::RowPower => "row_power",
            LemmaId::WeightedStick => "weighted_stick",
            LemmaId::PermutationLadder => "permutation_ladder",
            LemmaId::Geometric => "geometric",
            LemmaId::WeightedGeometric => "weighted_geometric",
        }
    }

    /// Names of the variables the identity is stated over.
    pub fn params(&self) -> &'static [&'static str] {
        match self {
            LemmaId::SumR | LemmaId::SumR2 | LemmaId::SumR3 => &["n"],
            LemmaId::RowPower => &["M"],
            LemmaId::Geometric | LemmaId::WeightedGeometric => &["R"],
            LemmaId::HockeyStick
            | LemmaId::DiagonalStick
            | LemmaId::WeightedStick
            | LemmaId::PermutationLadder => &["M", "m"],
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown lemma `{s}`"))
    }
}

/// Values for the bound variables of an identity, e.g. `M=4,m=1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings(BTreeMap<String, u64>);

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: u64) -> Self {
        self.0.insert(name.to_owned(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<u64> {
        self.0.get(name).copied()
    }
}

impl FromStr for Bindings {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut out = Bindings::new();
        for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| format!("expected name=value, got `{pair}`"))?;
            let value = value
                .trim()
                .parse()
                .map_err(|e| format!("bad value for `{name}`: {e}"))?;
            out.0.insert(name.trim().to_owned(), value);
        }
        Ok(out)
    }
}

fn fetch(id: LemmaId, params: &Bindings, name: &str) -> Result<u64> {
    params.get(name).ok_or_else(|| Error::LemmaDomain {
        lemma: id.name(),
        reason: format!("missing parameter `{name}`"),
    })
}

fn nat(x: u64) -> Nat {
    Nat::from(x)
}

/// Evaluates both sides of identity `id` at `params`, returning whether they
/// agree.
pub fn lemma_check(id: LemmaId, params: &Bindings) -> Result<bool> {
    let (lhs, rhs) = sides(id, params)?;
    Ok(lhs == rhs)
}

/// Both sides of the identity, exactly.
pub fn sides(id: LemmaId, params: &Bindings) -> Result<(BigInt, BigInt)> {
    let pair = |l: Nat, r: Nat| (BigInt::from(l), BigInt::from(r));
    Ok(match id {
        LemmaId::SumR => {
            let n = fetch(id, params, "n")?;
            pair((1..=n).map(nat).sum(), nat(n) * (n + 1) / 2u32)
        }
        LemmaId::SumR2 => {
            let n = fetch(id, params, "n")?;
            pair(
                (1..=n).map(|r| nat(r) * r).sum(),
                nat(n) * (n + 1) * (2 * n + 1) / 6u32,
            )
        }
        LemmaId::SumR3 => {
            let n = fetch(id, params, "n")?;
            let half = nat(n) * (n + 1) / 2u32;
            pair((1..=n).map(|r| nat(r) * r * r).sum(), &half * &half)
        }
        LemmaId::HockeyStick => {
            let (big, small) = upper_lower(id, params)?;
            if small > big {
                return Err(domain(id, "requires m <= M"));
            }
            let lhs = (small..=big).map(|j| binomial(j, small)).sum();
            pair(lhs, binomial(big + 1, small + 1))
        }
        LemmaId::DiagonalStick => {
            let (big, small) = upper_lower(id, params)?;
            let lhs = (0..=small).map(|i| binomial(big + i, i)).sum();
            pair(lhs, binomial(big + small + 1, small))
        }
        LemmaId::RowPower => {
            let big = fetch(id, params, "M")? as i64;
            let lhs = (0..=big).map(|i| binomial(big, i)).sum();
            pair(lhs, Nat::one() << big as usize)
        }
        LemmaId::WeightedStick => {
            let (big, small) = upper_lower(id, params)?;
            if big <= small {
                return Err(domain(id, "requires M > m"));
            }
            let lhs = (1..=big - small)
                .map(|j| binomial(big - j, small) * j as u64)
                .sum();
            pair(lhs, binomial(big + 1, small + 2))
        }
        LemmaId::PermutationLadder => {
            let (big, small) = upper_lower(id, params)?;
            if small > big {
                return Err(domain(id, "requires m <= M"));
            }
            let ladder: Nat = (small..=big).map(|j| permutation(j, small - 1)).sum();
            let rhs = permutation(small, small) + ladder * small as u64;
            pair(permutation(big + 1, small), rhs)
        }
        LemmaId::Geometric => {
            let r = fetch(id, params, "R")?;
            let lhs = (0..=r).map(|i| Nat::one() << i as usize).sum();
            pair(lhs, (Nat::one() << (r + 1) as usize) - 1u32)
        }
        LemmaId::WeightedGeometric => {
            let r = fetch(id, params, "R")?;
            let lhs: Nat = (0..=r).map(|i| nat(i) << i as usize).sum();
            let power = BigInt::one() << (r + 1) as usize;
            let rhs = BigInt::from(2) + (BigInt::from(r) - 1) * power;
            (BigInt::from(lhs), rhs)
        }
    })
}

fn upper_lower(id: LemmaId, params: &Bindings) -> Result<(i64, i64)> {
    Ok((
        fetch(id, params, "M")? as i64,
        fetch(id, params, "m")? as i64,
    ))
}

fn domain(id: LemmaId, reason: &str) -> Error {
    Error::LemmaDomain {
        lemma: id.name(),
        reason: reason.to_owned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(pairs: &[(&str, u64)]) -> Bindings {
        pairs
            .iter()
            .fold(Bindings::new(), |b, &(k, v)| b.with(k, v))
    }

    #[test]
    fn worked_examples() {
        let (l, r) = sides(LemmaId::WeightedStick, &at(&[("M", 4), ("m", 1)])).unwrap();
        assert_eq!((l, r), (BigInt::from(10), BigInt::from(10)));
        let (l, r) = sides(LemmaId::PermutationLadder, &at(&[("M", 3), ("m", 2)])).unwrap();
        assert_eq!((l, r), (BigInt::from(12), BigInt::from(12)));
        let (l, r) = sides(LemmaId::WeightedGeometric, &at(&[("R", 2)])).unwrap();
        assert_eq!((l, r), (BigInt::from(10), BigInt::from(10)));
        let (l, r) = sides(LemmaId::RowPower, &at(&[("M", 3)])).unwrap();
        assert_eq!((l, r), (BigInt::from(8), BigInt::from(8)));
    }

    #[test]
    fn domain_errors() {
        let e = lemma_check(LemmaId::WeightedStick, &at(&[("M", 2), ("m", 2)]));
        assert!(matches!(
            e,
            Err(Error::LemmaDomain {
                lemma: "weighted_stick",
                ..
            })
        ));
        assert!(lemma_check(LemmaId::PermutationLadder, &at(&[("M", 2), ("m", 3)])).is_err());
        assert!(lemma_check(LemmaId::HockeyStick, &at(&[("M", 2), ("m", 3)])).is_err());
        assert!(lemma_check(LemmaId::SumR, &at(&[("M", 2)])).is_err());
    }

    #[test]
    fn all_identities_hold_on_grid() {
        for id in LemmaId::ALL {
            for big in 0..=30u64 {
                let ok = match id.params() {
                    ["M", "m"] => (0..=big)
                        .filter(|&m| id != LemmaId::WeightedStick || big > m)
                        .all(|m| lemma_check(id, &at(&[("M", big), ("m", m)])).unwrap()),
                    [name] => lemma_check(id, &at(&[(name, big)])).unwrap(),
                    _ => unreachable!(),
                };
                assert!(ok, "{id} failed at {big}");
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "M=4, m=1".parse::<Bindings>().unwrap(),
            at(&[("M", 4), ("m", 1)])
        );
        assert!("M4".parse::<Bindings>().is_err());
        assert_eq!(
            "hockey_stick".parse::<LemmaId>().unwrap(),
            LemmaId::HockeyStick
        );
        assert!("nope".parse::<LemmaId>().is_err());
    }
}
