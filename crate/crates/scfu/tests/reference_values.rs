//! Antipodes and structure maps on small keys, frozen from Takeuchi's
//! alternating sum and compared with the closed forms.

use scfu::algebra::{coproduct, product, takeuchi_antipode, Basis, FriendlyOrder, HopfElement};
use scfu::closedform::{antipode_chi_single_arc, antipode_kappa, antipode_p_friendly, antipode_p_q};
use scfu::combinatorics::{ArcSet, LinearOrder};
use scfu::notation::{parse_arcs, parse_order};

fn el(basis: Basis, order: &str, arcs: &str) -> HopfElement {
    HopfElement::basis_element(basis, parse_order(order).unwrap(), parse_arcs(arcs).unwrap()).unwrap()
}

fn key(order: &str, arcs: &str) -> (LinearOrder, ArcSet) {
    (parse_order(order).unwrap(), parse_arcs(arcs).unwrap())
}

#[test]
fn pq_on_three_arcless() {
    let frozen = "-Pq[3 2 1 | ]";
    assert_eq!(takeuchi_antipode(&el(Basis::Pq, "1 2 3", "")).unwrap().to_string(), frozen);
    let (o, a) = key("1 2 3", "");
    assert_eq!(antipode_p_q(&o, &a).unwrap().to_string(), frozen);
}

#[test]
fn inclusion_p_with_one_arc() {
    let frozen = "Pinc[1 2 3 | 1-2] - Pinc[1 3 2 | 1-2] + Pinc[3 1 2 | 1-2]";
    let b = Basis::Friendly(FriendlyOrder::ArcInclusion);
    assert_eq!(takeuchi_antipode(&el(b, "1 3 2", "1-2")).unwrap().to_string(), frozen);
    let (o, a) = key("1 3 2", "1-2");
    assert_eq!(antipode_p_friendly(&o, &a, FriendlyOrder::ArcInclusion).unwrap().to_string(), frozen);
}

#[test]
fn refinement_p_with_one_arc() {
    let frozen = "Pref[2 1 3 | 2-1] - Pref[2 3 1 | 2-1] + Pref[3 2 1 | 2-1]";
    let b = Basis::Friendly(FriendlyOrder::Refinement);
    assert_eq!(takeuchi_antipode(&el(b, "2 3 1", "2-1")).unwrap().to_string(), frozen);
    let (o, a) = key("2 3 1", "2-1");
    assert_eq!(antipode_p_friendly(&o, &a, FriendlyOrder::Refinement).unwrap().to_string(), frozen);
}

#[test]
fn kappa_with_one_arc() {
    let frozen = "K[1 2 3 | 1-2,2-3] + K[1 2 3 | 2-3] - K[2 1 3 | 2-3] + K[2 3 1 | 2-3] + K[2 3 1 | 2-3,3-1]";
    assert_eq!(takeuchi_antipode(&el(Basis::Kappa, "2 1 3", "2-3")).unwrap().to_string(), frozen);
    let (o, a) = key("2 1 3", "2-3");
    assert_eq!(antipode_kappa(&o, &a).unwrap().to_string(), frozen);
}

#[test]
fn chi_single_arc_on_three() {
    let frozen = "-(q^2 - 3*q + 2)*X[1 2 3 | ] + (q - 1)*X[1 2 3 | 1-2] - X[1 2 3 | 1-3] + (q - 1)*X[1 2 3 | 2-3] \
                  - (q^2 - q)*X[1 3 2 | ] + q*X[1 3 2 | 1-3] - (q^2 - q)*X[2 1 3 | ] + q*X[2 1 3 | 1-3] \
                  - (q^2 - 2*q + 1)*X[2 3 1 | ] + (q - 1)*X[2 3 1 | 2-3] - (q^2 - 2*q + 1)*X[3 1 2 | ] \
                  + (q - 1)*X[3 1 2 | 1-2] - (q^2 - q)*X[3 2 1 | ]";
    assert_eq!(takeuchi_antipode(&el(Basis::Chi, "1 2 3", "1-3")).unwrap().to_string(), frozen);
    assert_eq!(antipode_chi_single_arc(&LinearOrder::identity(3)).unwrap().to_string(), frozen);
}

#[test]
fn structure_maps() {
    let x = el(Basis::Pq, "1 2 3", "1-3");
    let i = parse_order("1 3").unwrap().ground();
    let j = parse_order("2").unwrap().ground();
    assert_eq!(coproduct(&x, &i, &j).unwrap().to_string(), "Pq[1 3 | 1-3] (x) Pq[2 | ]");
    let p = product(&el(Basis::Kappa, "2", ""), &el(Basis::Kappa, "3 1", "3-1")).unwrap();
    assert_eq!(p.to_string(), "K[2 3 1 | 2-3,3-1] + K[2 3 1 | 3-1]");
}
