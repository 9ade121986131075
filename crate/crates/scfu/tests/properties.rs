use proptest::prelude::*;
use proptest::sample::Index;

use scfu::algebra::{antipode_via_kappa, convert, coproduct, product, Basis, HopfElement, Key};
use scfu::closedform::antipode_p_q;
use scfu::combinatorics::enumerate::enumerate_arcsets;
use scfu::combinatorics::{standardize, Label, LabelSet, LinearOrder};
use scfu::notation::{element_from_json, element_to_json, parse_arcs, parse_order};
use scfu::ribbon::{ribbon_lhs, ribbon_rhs};
use scfu::verify::ALL_BASES;
use scfu::{IntPoly, RationalQ};

fn order_of(labels: Vec<u8>) -> LinearOrder {
    LinearOrder::new(labels.into_iter().map(Label)).unwrap()
}

/// A random order on {lo, …, lo+n−1}.
fn order_strategy(lo: u8, n: std::ops::RangeInclusive<u8>) -> impl Strategy<Value = LinearOrder> {
    n.prop_flat_map(move |n| Just((lo..lo + n).collect::<Vec<u8>>()).prop_shuffle()).prop_map(order_of)
}

fn key_strategy(lo: u8, n: std::ops::RangeInclusive<u8>) -> impl Strategy<Value = Key> {
    (order_strategy(lo, n), any::<Index>()).prop_map(|(o, i)| {
        let all = enumerate_arcsets(&o);
        Key::new(o, i.get(&all).clone()).unwrap()
    })
}

fn basis_strategy() -> impl Strategy<Value = Basis> {
    prop::sample::select(ALL_BASES.to_vec())
}

fn small_rational() -> impl Strategy<Value = RationalQ> {
    (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-2i64..=2, 0..3), 0i32..3).prop_map(|(num, den, shift)| {
        let n = RationalQ::from_poly(IntPoly::from_i64(&num));
        let mut d = IntPoly::from_i64(&den);
        if d.is_zero() {
            d = IntPoly::one();
        }
        let d = &d * &IntPoly::monomial(1, shift as usize);
        n.checked_div(&RationalQ::from_poly(d)).unwrap()
    })
}

fn split(ground: &LabelSet, mask: u32) -> (LabelSet, LabelSet) {
    let i: LabelSet = ground.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, l)| l).collect();
    (i, ground.difference(&i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_ring_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn coefficient_render_parse(a in small_rational()) {
        prop_assert_eq!(RationalQ::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn text_notation_round_trip(k in key_strategy(1, 1..=7)) {
        prop_assert_eq!(parse_order(&k.order.to_string()).unwrap(), k.order.clone());
        prop_assert_eq!(parse_arcs(&k.arcs.to_string()).unwrap(), k.arcs.clone());
    }

    #[test]
    fn json_round_trip(b in basis_strategy(), keys in prop::collection::vec(key_strategy(1, 3..=3), 1..5), c in small_rational()) {
        let ground = keys[0].order.ground();
        let terms = keys.into_iter().enumerate().map(|(i, k)| (k, c.scale(i as i64 + 1)));
        let x = HopfElement::from_terms(b, ground, terms).unwrap();
        let s = element_to_json(&x);
        let y = element_from_json(&s).unwrap();
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(element_to_json(&y), s);
    }

    #[test]
    fn cocommutative(b in basis_strategy(), k in key_strategy(1, 1..=5), mask in any::<u32>()) {
        let x = HopfElement::basis_element(b, k.order.clone(), k.arcs.clone()).unwrap();
        let (i, j) = split(&x.ground(), mask);
        prop_assert_eq!(coproduct(&x, &i, &j).unwrap(), coproduct(&x, &j, &i).unwrap().swap());
    }

    #[test]
    fn antipode_is_an_involution(b in basis_strategy(), k in key_strategy(1, 1..=5)) {
        let x = HopfElement::basis_element(b, k.order.clone(), k.arcs.clone()).unwrap();
        prop_assert_eq!(antipode_via_kappa(&antipode_via_kappa(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn conversion_round_trip(b in basis_strategy(), c in basis_strategy(), k in key_strategy(1, 1..=5)) {
        let x = HopfElement::basis_element(b, k.order.clone(), k.arcs.clone()).unwrap();
        prop_assert_eq!(convert(&convert(&x, c).unwrap(), b).unwrap(), x);
    }

    #[test]
    fn antipode_commutes_with_conversion(b in basis_strategy(), c in basis_strategy(), k in key_strategy(1, 1..=4)) {
        let x = HopfElement::basis_element(b, k.order.clone(), k.arcs.clone()).unwrap();
        let lhs = convert(&antipode_via_kappa(&x).unwrap(), c).unwrap();
        let rhs = antipode_via_kappa(&convert(&x, c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compatibility(b in basis_strategy(), kx in key_strategy(1, 1..=2), ky in key_strategy(3, 1..=2), mask in any::<u32>()) {
        let x = HopfElement::basis_element(b, kx.order.clone(), kx.arcs.clone()).unwrap();
        let y = HopfElement::basis_element(b, ky.order.clone(), ky.arcs.clone()).unwrap();
        let xy = product(&x, &y).unwrap();
        let (i, j) = split(&xy.ground(), mask);
        let lhs = coproduct(&xy, &i, &j).unwrap();
        let dx = coproduct(&x, &i.intersection(&x.ground()), &j.intersection(&x.ground())).unwrap();
        let dy = coproduct(&y, &i.intersection(&y.ground()), &j.intersection(&y.ground())).unwrap();
        let mut expect = std::collections::BTreeMap::new();
        for (a, ca) in dx.terms() {
            for (bk, cb) in dy.terms() {
                let l = product(&HopfElement::basis_element(b, a[0].order.clone(), a[0].arcs.clone()).unwrap(),
                                 &HopfElement::basis_element(b, bk[0].order.clone(), bk[0].arcs.clone()).unwrap()).unwrap();
                let r = product(&HopfElement::basis_element(b, a[1].order.clone(), a[1].arcs.clone()).unwrap(),
                                &HopfElement::basis_element(b, bk[1].order.clone(), bk[1].arcs.clone()).unwrap()).unwrap();
                for (lk, lc) in l.terms() {
                    for (rk, rc) in r.terms() {
                        let e = expect.entry(vec![lk.clone(), rk.clone()]).or_insert_with(RationalQ::zero);
                        *e = &*e + &(&(ca * cb) * &(lc * rc));
                    }
                }
            }
        }
        expect.retain(|_, c| !c.is_zero());
        prop_assert_eq!(lhs.terms(), &expect);
    }

    #[test]
    fn pq_closed_form_at_six(k in key_strategy(1, 6..=6)) {
        let px = HopfElement::basis_element(Basis::Pq, k.order.clone(), k.arcs.clone()).unwrap();
        prop_assert_eq!(antipode_p_q(&k.order, &k.arcs).unwrap(), antipode_via_kappa(&px).unwrap());
    }

    #[test]
    fn standardization_is_relabelling_invariant(k in key_strategy(1, 1..=6), shift in 1u8..20) {
        let moved_order = k.order.relabel(|l| Label(l.0 + shift));
        let moved_arcs = k.arcs.relabel(|l| Label(l.0 + shift));
        prop_assert_eq!(standardize(&moved_order, &moved_arcs).unwrap(), standardize(&k.order, &k.arcs).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ribbon_identity_at_eight(phi in order_strategy(1, 8..=8), tau in order_strategy(1, 8..=8)) {
        prop_assert_eq!(ribbon_lhs(&phi, &tau).unwrap(), ribbon_rhs(&phi, &tau).unwrap());
    }
}
