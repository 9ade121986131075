use super::arcs::ArcSet;
use super::order::{LinearOrder, Positions};
use crate::error::{Result, ScfError};

/// Outcome of [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Atomic,
    Decomposable,
    Incompatible,
}

fn check_same_ground(a: &LinearOrder, b: &LinearOrder) -> Result<()> {
    if a.len() != b.len() || a.ground() != b.ground() {
        return Err(ScfError::GroundMismatch);
    }
    Ok(())
}

/// Maximal runs of τ that increase with respect to φ.
pub fn rising_factorization(tau: &LinearOrder, phi: &LinearOrder) -> Result<Vec<LinearOrder>> {
    check_same_ground(tau, phi)?;
    Ok(run_bounds(tau, &phi.positions())
        .into_iter()
        .map(|(s, e)| LinearOrder::from_vec_unchecked(tau.labels()[s..e].iter().copied().collect()))
        .collect())
}

/// Half-open position intervals of the rising runs of τ relative to `reference`.
pub(crate) fn run_bounds(tau: &LinearOrder, reference: &Positions) -> Vec<(usize, usize)> {
    let s = tau.labels();
    let mut out = Vec::new();
    let mut start = 0;
    for p in 1..s.len() {
        if reference.at(s[p]) < reference.at(s[p - 1]) {
            out.push((start, p));
            start = p;
        }
    }
    if !s.is_empty() {
        out.push((start, s.len()));
    }
    out
}

pub(crate) fn run_count(tau: &LinearOrder, reference: &Positions) -> usize {
    let s = tau.labels();
    if s.is_empty() {
        return 0;
    }
    1 + s.windows(2).filter(|w| reference.at(w[1]) < reference.at(w[0])).count()
}

/// Number of maximal rising runs of τ with respect to φ.
pub fn num_runs(tau: &LinearOrder, phi: &LinearOrder) -> Result<usize> {
    check_same_ground(tau, phi)?;
    Ok(run_count(tau, &phi.positions()))
}

/// Number of descents of τ with respect to φ, one less than the run count.
pub fn descents(tau: &LinearOrder, phi: &LinearOrder) -> Result<usize> {
    Ok(num_runs(tau, phi)?.saturating_sub(1))
}

/// Half-open position intervals of the atomic factors of (φ,λ), given λ as position pairs.
pub(crate) fn atomic_bounds(n: usize, arcs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    // bridged[g] is true when some arc spans the gap between positions g and g+1
    let mut bridged = [false; 256];
    for &(i, k) in arcs {
        for g in bridged.iter_mut().take(k).skip(i) {
            *g = true;
        }
    }
    let mut out = Vec::new();
    let mut start = 0;
    for g in 0..n.saturating_sub(1) {
        if !bridged[g] {
            out.push((start, g + 1));
            start = g + 1;
        }
    }
    if n > 0 {
        out.push((start, n));
    }
    out
}

pub(crate) fn atomic_count_with(order: &LinearOrder, pos: &Positions, lambda: &ArcSet) -> usize {
    atomic_bounds(order.len(), &lambda.position_pairs(pos)).len()
}

/// The unique factorization of (φ,λ) into atomic pairs.
pub fn atomic_factorization(order: &LinearOrder, lambda: &ArcSet) -> Result<Vec<(LinearOrder, ArcSet)>> {
    lambda.validate(order)?;
    let pos = order.positions();
    Ok(atomic_bounds(order.len(), &lambda.position_pairs(&pos))
        .into_iter()
        .map(|(s, e)| {
            let sub = LinearOrder::from_vec_unchecked(order.labels()[s..e].iter().copied().collect());
            let arcs = lambda.restrict(&sub.ground());
            (sub, arcs)
        })
        .collect())
}

/// Whether (φ,λ) admits no splitting into a nontrivial concatenation.
pub fn is_atomic(order: &LinearOrder, lambda: &ArcSet) -> Result<bool> {
    lambda.validate(order)?;
    Ok(!order.is_empty() && atomic_count_with(order, &order.positions(), lambda) == 1)
}

/// Classify λ ∈ S^τ relative to φ.
pub fn classify(tau: &LinearOrder, lambda: &ArcSet, phi: &LinearOrder) -> Result<Classification> {
    lambda.validate(tau)?;
    check_same_ground(tau, phi)?;
    Ok(classify_with(tau, &tau.positions(), lambda, &phi.positions()))
}

pub(crate) fn classify_with(tau: &LinearOrder, tau_pos: &Positions, lambda: &ArcSet, phi_pos: &Positions) -> Classification {
    if !lambda.valid_with(phi_pos) {
        return Classification::Incompatible;
    }
    if is_run_atomic(tau, tau_pos, lambda, phi_pos) {
        Classification::Atomic
    } else {
        Classification::Decomposable
    }
}

/// Whether the rising runs of τ relative to φ split λ into atomic pieces.
pub(crate) fn is_run_atomic(tau: &LinearOrder, tau_pos: &Positions, lambda: &ArcSet, phi_pos: &Positions) -> bool {
    let runs = run_bounds(tau, phi_pos);
    let pairs = lambda.position_pairs(tau_pos);
    let block_of = |p: usize| runs.iter().position(|&(s, e)| s <= p && p < e).unwrap();
    if pairs.iter().any(|&(i, k)| block_of(i) != block_of(k)) {
        return false;
    }
    runs.iter().all(|&(s, e)| {
        let local: Vec<(usize, usize)> =
            pairs.iter().filter(|&&(i, _)| s <= i && i < e).map(|&(i, k)| (i - s, k - s)).collect();
        atomic_bounds(e - s, &local).len() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn runs_as_vecs(tau: &[u8], phi: &LinearOrder) -> Vec<Vec<u8>> {
        rising_factorization(&LinearOrder::from_u8(tau), phi)
            .unwrap()
            .into_iter()
            .map(|o| o.labels().iter().map(|l| l.0).collect())
            .collect()
    }

    #[test]
    fn rising_runs() {
        let e9 = LinearOrder::identity(9);
        assert_eq!(
            runs_as_vecs(&[6, 1, 4, 9, 2, 5, 3, 7, 8], &e9),
            vec![vec![6], vec![1, 4, 9], vec![2, 5], vec![3, 7, 8]]
        );
        let tau = LinearOrder::from_u8(&[6, 1, 4, 9, 2, 5, 3, 7, 8]);
        assert_eq!(num_runs(&tau, &e9).unwrap(), 4);
        assert_eq!(descents(&tau, &e9).unwrap(), 3);
        assert_eq!(num_runs(&tau, &tau).unwrap(), 1);
        assert_eq!(num_runs(&tau.reversed(), &tau).unwrap(), 9);
        let (t21, t12) = (LinearOrder::from_u8(&[2, 1]), LinearOrder::identity(2));
        assert_eq!((num_runs(&t21, &t12).unwrap(), descents(&t21, &t12).unwrap()), (2, 1));
        assert!(num_runs(&t21, &LinearOrder::identity(3)).is_err());
    }

    #[test]
    fn atomic_examples() {
        let e2 = LinearOrder::identity(2);
        assert_eq!(atomic_factorization(&e2, &ArcSet::from_pairs(&[(1, 2)])).unwrap().len(), 1);
        assert_eq!(atomic_factorization(&e2, &ArcSet::empty()).unwrap().len(), 2);
        assert_eq!(atomic_factorization(&LinearOrder::identity(5), &ArcSet::from_pairs(&[(1, 2), (2, 5)])).unwrap().len(), 1);
        let f = atomic_factorization(&LinearOrder::identity(5), &ArcSet::from_pairs(&[(1, 2), (2, 4)])).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[1].0, LinearOrder::from_u8(&[5]));
    }

    #[test]
    fn classification_example() {
        let tau = LinearOrder::from_u8(&[6, 1, 4, 9, 2, 5, 3, 7, 8]);
        let lam = ArcSet::from_pairs(&[(1, 9), (9, 2), (3, 8), (6, 4)]);
        let c = |phi: &[u8]| classify(&tau, &lam, &LinearOrder::from_u8(phi)).unwrap();
        assert_eq!(c(&[3, 7, 8, 5, 6, 1, 4, 9, 2]), Classification::Atomic);
        assert_eq!(c(&[6, 1, 4, 9, 2, 5, 3, 7, 8]), Classification::Decomposable);
        assert_eq!(c(&[1, 2, 3, 4, 5, 6, 7, 8, 9]), Classification::Incompatible);
    }
}
