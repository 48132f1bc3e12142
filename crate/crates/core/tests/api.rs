use hypersolid::{
    hypersolid, representations_of, sum_report, triangle::fibonacci_like, EvalMethod, Fixed,
    IndexTriple, Nat, SumQuery, Triangle,
};
use serde_json::Value;

#[test]
fn polygonal_shorthands_match_general_form() {
    for d in 0..8 {
        for n in 0..15 {
            assert_eq!(hypersolid::polygonal(d, n), hypersolid::s(2, d, n));
            assert_eq!(hypersolid::pyramidal(d, n), hypersolid::s(3, d, n));
            assert_eq!(hypersolid::hyper4(d, n), hypersolid::s(4, d, n));
        }
    }
}

#[test]
fn report_serializes_big_numbers_as_strings() {
    let report = sum_report(SumQuery::new(60, Fixed::None).unwrap(), false).unwrap();
    let json: Value = serde_json::to_value(&report).unwrap();
    assert_eq!(json["formula_sum"], "1152921504606846915");
    assert_eq!(json["enumerated_sum"], json["formula_sum"]);
    assert_eq!(json["formula_multitude"], 1828);
    assert_eq!(json["query"]["fixed"]["axis"], "none");
    assert!(json["triples"].is_null());
}

#[test]
fn no_closed_form_is_not_a_contradiction() {
    let report = sum_report(SumQuery::new(7, Fixed::N(7)).unwrap(), true).unwrap();
    assert!(!report.has_closed_form());
    assert!(!report.consistent);
    assert!(report.verified());
    assert_eq!(
        report.enumerated_multitude,
        report.triples.unwrap().len() as u64
    );
}

#[test]
fn triangle_diagonals_are_fibonacci() {
    let d = 3;
    let tri = Triangle::build(d, 14);
    let diagonals: Vec<Nat> = (2..=14u32)
        .map(|k| {
            (0..=k / 2)
                .filter_map(|v| tri.entry(k - v, v).cloned())
                .sum()
        })
        .collect();
    assert_eq!(diagonals, fibonacci_like(d, 13));
}

#[test]
fn every_representation_evaluates_to_its_target() {
    for target in [1u64, 36, 120, 715, 9999] {
        for hit in representations_of(target).unwrap() {
            assert_eq!(hit.value, Nat::from(target));
            assert_eq!(hypersolid(hit.triple, EvalMethod::Summation), hit.value);
        }
    }
}

#[test]
fn triple_round_trip() {
    let t: IndexTriple = (4, 1, 10).into();
    assert_eq!(t.to_string(), "S(4,1,10)");
    assert_eq!(t.weight(), 15);
    assert_eq!(
        serde_json::to_string(&t).unwrap(),
        r#"{"v":4,"d":1,"n":10}"#
    );
}
