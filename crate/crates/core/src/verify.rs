//! Exhaustive invariant sweeps over bounded grids.
//!
//! Each suite expands into a list of independent checks. Checks may run on a
//! thread pool; failures are always reported in case order, so the output
//! does not depend on the number of jobs.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::kernel::{d_gnomon, hypersolid, n_gnomon, s, v_gnomon, EvalMethod, IndexTriple, Nat};
use crate::sums::{
    enumerate_triples, lemma_check, sum_fixed_s, sum_fixed_sd, sum_fixed_sn, sum_fixed_sv,
    Bindings, LemmaId, SumReport,
};
use crate::triangle::{
    compile_row, diagonal_sum, fibonacci_like, pascal_entry_check, row_sum, DiagonalSpec, Triangle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Oracle,
    Gnomons,
    Corollaries,
    Theorems,
    Lemmas,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Oracle,
        Suite::Gnomons,
        Suite::Corollaries,
        Suite::Theorems,
        Suite::Lemmas,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Gnomons => "gnomons",
            Suite::Corollaries => "corollaries",
            Suite::Theorems => "theorems",
            Suite::Lemmas => "lemmas",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Grid bounds for the sweeps. All ranges start at zero unless noted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub v_max: u32,
    pub d_max: u32,
    pub n_max: u32,
    /// Deepest triangle row for the corollary checks.
    pub c_max: u32,
    /// Last diagonal index for the recurrence checks (from 2).
    pub k_max: u32,
    /// Largest total weight for the theorem checks (from 2).
    pub s_max: u32,
    /// Largest upper index for the lemma identities.
    pub lemma_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            v_max: 8,
            d_max: 10,
            n_max: 12,
            c_max: 24,
            k_max: 30,
            s_max: 40,
            lemma_max: 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Check = Box<dyn Fn() -> Option<Failure> + Send + Sync>;

fn expect_eq(case: String, expected: Nat, actual: Nat) -> Option<Failure> {
    (expected != actual).then(|| Failure {
        case,
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

fn expect(case: String, holds: bool) -> Option<Failure> {
    (!holds).then(|| Failure {
        case,
        expected: "true".into(),
        actual: "false".into(),
    })
}

fn grid(b: &Bounds) -> impl Iterator<Item = IndexTriple> {
    let (vm, dm, nm) = (b.v_max, b.d_max, b.n_max);
    (0..=vm).flat_map(move |v| {
        (0..=dm).flat_map(move |d| (0..=nm).map(move |n| IndexTriple::new(v, d, n)))
    })
}

fn oracle_checks(b: &Bounds) -> Vec<Check> {
    grid(b)
        .map(|t| -> Check {
            Box::new(move || {
                expect_eq(
                    format!("closed vs summation {t}"),
                    hypersolid(t, EvalMethod::Summation),
                    hypersolid(t, EvalMethod::Closed),
                )
            })
        })
        .collect()
}

fn gnomon_checks(b: &Bounds) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    for t in grid(b) {
        let IndexTriple { v, d, n } = t;
        if v >= 1 && n >= 1 && (v, n) != (1, 1) {
            checks.push(Box::new(move || {
                let rebuilt = s(v, d, n - 1) + n_gnomon(t).ok()?;
                expect_eq(format!("n-gnomon {t}"), s(v, d, n), rebuilt)
            }));
            checks.push(Box::new(move || {
                let rebuilt = s(v - 1, d, n) + v_gnomon(t).ok()?;
                expect_eq(format!("v-gnomon {t}"), s(v, d, n), rebuilt)
            }));
        }
        if d >= 1 && n >= 1 && (v, n) != (0, 2) {
            checks.push(Box::new(move || {
                let rebuilt = s(v, d - 1, n) + d_gnomon(t).ok()?;
                expect_eq(format!("d-gnomon {t}"), s(v, d, n), rebuilt)
            }));
        }
    }
    checks
}

fn corollary_checks(b: &Bounds) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    let Bounds {
        v_max,
        d_max,
        n_max,
        c_max,
        k_max,
        ..
    } = *b;
    for d in 0..=d_max {
        // adjacency, column compilation and row sums share one triangle
        checks.push(Box::new(move || {
            let t = Triangle::build(d, c_max);
            for c in 3..=c_max {
                for v in 1..c {
                    let sum = t.entry(c - 1, v)? + t.entry(c - 1, v - 1)?;
                    if let Some(f) = expect_eq(
                        format!("adjacency d={d} c={c} v={v}"),
                        t.entry(c, v)?.clone(),
                        sum,
                    ) {
                        return Some(f);
                    }
                }
            }
            // compilation starts from the one-dimensional row
            for v in 1..c_max {
                let mut running = Nat::zero();
                for n in 1..=c_max - v - 1 {
                    running += t.entry(v + n, v)?;
                    let next = t.entry(v + 1 + n, v + 1)?.clone();
                    if let Some(f) = expect_eq(
                        format!("column compilation d={d} v={v} n={n}"),
                        next,
                        running.clone(),
                    ) {
                        return Some(f);
                    }
                }
            }
            for c in 0..=c_max {
                let literal = t.literal_row_sum(c)?;
                if let Some(f) = expect_eq(format!("row sum d={d} c={c}"), literal, row_sum(d, c)) {
                    return Some(f);
                }
                if c >= 3 {
                    let doubled = row_sum(d, c - 1) * 2u32;
                    if let Some(f) =
                        expect_eq(format!("row doubling d={d} c={c}"), doubled, row_sum(d, c))
                    {
                        return Some(f);
                    }
                    let earlier: Nat = (2..c).map(|j| row_sum(d, j)).sum();
                    let less = row_sum(d, c) - (d + 1);
                    if let Some(f) = expect_eq(format!("row prefix d={d} c={c}"), earlier, less) {
                        return Some(f);
                    }
                }
            }
            None
        }));
        // n = 0, 1 sit below the region where the row compiles upward
        for n in 2..=n_max {
            for v in 0..=v_max {
                checks.push(Box::new(move || {
                    expect_eq(
                        format!("compile_row d={d} n={n} v={v}"),
                        s(v, d, n + 1),
                        compile_row(d, n, v),
                    )
                }));
            }
        }
    }
    for d in 0..=d_max {
        checks.push(Box::new(move || {
            let expected = fibonacci_like(d, (k_max - 1) as usize);
            for (k, want) in (2..=k_max).zip(expected) {
                let got = diagonal_sum(DiagonalSpec::new(d, 2, k)).ok()?;
                if let Some(f) = expect_eq(format!("fibonacci diagonal d={d} k={k}"), want, got) {
                    return Some(f);
                }
            }
            None
        }));
        for m in 2..=4u32 {
            checks.push(Box::new(move || {
                let seq: Vec<Nat> = (2..=k_max)
                    .map(|k| diagonal_sum(DiagonalSpec::new(d, m, k)))
                    .collect::<Result<_, _>>()
                    .ok()?;
                for i in m as usize..seq.len() {
                    let sum = &seq[i - 1] + &seq[i - m as usize];
                    if let Some(f) = expect_eq(
                        format!("order-{m} recurrence d={d} k={}", i + 2),
                        seq[i].clone(),
                        sum,
                    ) {
                        return Some(f);
                    }
                }
                None
            }));
        }
    }
    for c in 0..=c_max {
        checks.push(Box::new(move || {
            (0..=c)
                .find(|&v| !pascal_entry_check(c, v))
                .and_then(|v| expect(format!("pascal c={c} v={v}"), false))
        }));
    }
    checks
}

fn report_failure(label: String, r: &SumReport) -> Option<Failure> {
    (!r.verified()).then(|| Failure {
        case: label,
        expected: format!(
            "sum {} multitude {}",
            r.formula_sum
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default(),
            r.formula_multitude
                .map(|m| m.to_string())
                .unwrap_or_default()
        ),
        actual: format!(
            "sum {} multitude {}",
            r.enumerated_sum, r.enumerated_multitude
        ),
    })
}

fn theorem_checks(b: &Bounds) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    for s in 2..=b.s_max {
        for x in 0..=s {
            checks.push(Box::new(move || {
                report_failure(
                    format!("fixed-v sum s={s} v={x}"),
                    &sum_fixed_sv(s, x, false).ok()?,
                )
            }));
            checks.push(Box::new(move || {
                report_failure(
                    format!("fixed-d sum s={s} d={x}"),
                    &sum_fixed_sd(s, x, false).ok()?,
                )
            }));
            checks.push(Box::new(move || {
                report_failure(
                    format!("fixed-n sum s={s} n={x}"),
                    &sum_fixed_sn(s, x, false).ok()?,
                )
            }));
        }
        checks.push(Box::new(move || {
            let whole = sum_fixed_s(s, false);
            if let Some(f) = report_failure(format!("total sum s={s}"), &whole) {
                return Some(f);
            }
            let by_v: Nat = (0..=s)
                .map(|x| sum_fixed_sv(s, x, false).map(|r| r.enumerated_sum))
                .sum::<Result<_, _>>()
                .ok()?;
            let by_d: Nat = (0..=s)
                .map(|x| sum_fixed_sd(s, x, false).map(|r| r.enumerated_sum))
                .sum::<Result<_, _>>()
                .ok()?;
            let by_n: Nat = (0..=s)
                .map(|x| sum_fixed_sn(s, x, false).map(|r| r.enumerated_sum))
                .sum::<Result<_, _>>()
                .ok()?;
            for (axis, total) in [("v", by_v), ("d", by_d), ("n", by_n)] {
                if let Some(f) = expect_eq(
                    format!("cross-theorem s={s} by {axis}"),
                    whole.enumerated_sum.clone(),
                    total,
                ) {
                    return Some(f);
                }
            }
            let zeros = enumerate_triples(s)
                .iter()
                .filter(|(_, v)| v.is_zero())
                .count();
            expect_eq(
                format!("zero census s={s}"),
                Nat::from(s + 3),
                Nat::from(zeros),
            )
        }));
    }
    checks
}

fn lemma_checks(b: &Bounds) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    let top = b.lemma_max as u64;
    for id in LemmaId::ALL {
        for big in 0..=top {
            match id.params() {
                [name] => {
                    let name = *name;
                    checks.push(Box::new(move || {
                        let holds =
                            lemma_check(id, &Bindings::new().with(name, big)).unwrap_or(false);
                        expect(format!("{id} {name}={big}"), holds)
                    }));
                }
                _ => {
                    for small in 0..=big {
                        if id == LemmaId::WeightedStick && small == big {
                            continue;
                        }
                        checks.push(Box::new(move || {
                            let params = Bindings::new().with("M", big).with("m", small);
                            let holds = lemma_check(id, &params).unwrap_or(false);
                            expect(format!("{id} M={big} m={small}"), holds)
                        }));
                    }
                }
            }
        }
    }
    checks
}

fn checks_for(suite: Suite, bounds: &Bounds) -> Vec<Check> {
    match suite {
        Suite::Oracle => oracle_checks(bounds),
        Suite::Gnomons => gnomon_checks(bounds),
        Suite::Corollaries => corollary_checks(bounds),
        Suite::Theorems => theorem_checks(bounds),
        Suite::Lemmas => lemma_checks(bounds),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn run_one(suite: Suite, bounds: &Bounds, jobs: usize) -> VerifyOutcome {
    let checks = checks_for(suite, bounds);
    let failures: Vec<Failure> = if jobs <= 1 {
        checks.iter().filter_map(|check| check()).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| checks.par_iter().filter_map(|check| check()).collect())
    };
    VerifyOutcome {
        suite: suite.name().to_owned(),
        cases_run: checks.len(),
        failures,
    }
}

/// Runs a suite (or every suite for [`Suite::All`]) with `jobs` workers.
pub fn run(suite: Suite, bounds: &Bounds, jobs: usize) -> Vec<VerifyOutcome> {
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .map(|&s| run_one(s, bounds, jobs))
            .collect(),
        other => vec![run_one(other, bounds, jobs)],
    }
}
