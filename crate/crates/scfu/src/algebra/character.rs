use crate::coeff::RationalQ;
use crate::combinatorics::arcs::{dim_with, nst_with};
use crate::combinatorics::order::Positions;
use crate::combinatorics::{ArcSet, LinearOrder};
use crate::error::Result;

/// χ^λ evaluated on the superclass μ, both in S^φ.
pub fn supercharacter_value(order: &LinearOrder, lambda: &ArcSet, mu: &ArcSet) -> Result<RationalQ> {
    lambda.validate(order)?;
    mu.validate(order)?;
    Ok(value_with(&order.positions(), lambda, mu))
}

pub(crate) fn value_with(pos: &Positions, lambda: &ArcSet, mu: &ArcSet) -> RationalQ {
    for a in lambda.arcs() {
        let (i, k) = (pos.at(a.left), pos.at(a.right));
        for b in mu.arcs() {
            let (j, l) = (pos.at(b.left), pos.at(b.right));
            if (j == i && l < k) || (l == k && j > i) {
                return RationalQ::zero();
            }
        }
    }
    let common = lambda.intersection(mu).len();
    let only = lambda.len() - common;
    let exp = dim_with(pos, lambda) as i32 - lambda.len() as i32 - nst_with(pos, lambda, mu) as i32;
    let sign = if common % 2 == 0 { 1 } else { -1 };
    let t = RationalQ::t().pow(only as i32).expect("nonnegative power");
    &RationalQ::monomial(sign, exp) * &t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(order: &[u8], l: &[(u8, u8)], m: &[(u8, u8)]) -> String {
        supercharacter_value(&LinearOrder::from_u8(order), &ArcSet::from_pairs(l), &ArcSet::from_pairs(m)).unwrap().to_string()
    }

    #[test]
    fn small_values() {
        assert_eq!(v(&[1, 2, 3], &[], &[(1, 3)]), "1");
        assert_eq!(v(&[1, 2], &[(1, 2)], &[]), "q - 1");
        assert_eq!(v(&[1, 2], &[(1, 2)], &[(1, 2)]), "-1");
        assert_eq!(v(&[1, 2, 3], &[(1, 3)], &[(1, 2)]), "0");
        assert_eq!(v(&[1, 2, 3], &[(1, 3)], &[(2, 3)]), "0");
        // χ^{1-3}(1) = q^{dim-1}(q-1) = q(q-1)
        assert_eq!(v(&[1, 2, 3], &[(1, 3)], &[]), "q^2 - q");
        // nested superclass lowers the power of q
        assert_eq!(v(&[1, 2, 3, 4], &[(1, 4)], &[(2, 3)]), "q^2 - q");
    }

    #[test]
    fn depends_only_on_positions() {
        let a = v(&[1, 2, 3, 4], &[(1, 4), (2, 3)], &[(2, 3)]);
        let b = v(&[4, 2, 9, 1], &[(4, 1), (2, 9)], &[(2, 9)]);
        assert_eq!(a, b);
    }
}
