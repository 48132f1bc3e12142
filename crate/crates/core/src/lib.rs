//! Exact multidimensional figurate numbers.
//!
//! `S(v, d, n)` is the `n`th figurate ("hypersolid") number in `v`
//! dimensions built from the arithmetic progression with first term 1 and
//! common difference `d`. Polygonal numbers are `v = 2`, pyramidal numbers
//! `v = 3`. All values are arbitrary-precision integers.
//!
//! ```
//! use hypersolid::{hypersolid, EvalMethod, IndexTriple};
//!
//! let t = IndexTriple::new(4, 1, 10);
//! assert_eq!(hypersolid(t, EvalMethod::Closed).to_string(), "715");
//! assert_eq!(hypersolid(t, EvalMethod::Closed), hypersolid(t, EvalMethod::Summation));
//! ```

pub mod error;
pub mod kernel;
pub mod search;
mod serde_nat;
pub mod sums;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::{
    binomial, d_gnomon, gnomon_term, hyper4, hypersolid, n_gnomon, permutation, polygonal,
    pyramidal, s, v_gnomon, EvalMethod, IndexTriple, Nat,
};
pub use search::{
    rank_of, representations, representations_of, sequence_slice, RepresentationHit,
    RepresentationQuery,
};
pub use sums::{
    enumerate_triples, lemma_check, sum_fixed_s, sum_fixed_sd, sum_fixed_sn, sum_fixed_sv,
    sum_report, Bindings, Fixed, LemmaId, SumQuery, SumReport, Term,
};
pub use triangle::{
    compile_row, diagonal_sum, pascal_entry_check, recurrence_sequence, row_sum, DiagonalSpec,
    Triangle,
};
pub use verify::{Bounds, Failure, Suite, VerifyOutcome};
