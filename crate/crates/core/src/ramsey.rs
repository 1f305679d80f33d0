//! Ramsey number bounds and the clique / independent-set dichotomy search.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Ramsey arguments must be positive, got ({0}, {1})")]
pub struct ZeroRamseyArgument(pub usize, pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyKind {
    /// The established value of `R(s, t)`.
    ExactKnown,
    /// A proven upper bound; the true value may be smaller.
    DerivedUpper,
}

/// An upper bound on `R(s, t)`: every graph on `bound` vertices has a clique
/// of size `s` or an independent set of size `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyValue {
    pub s: usize,
    pub t: usize,
    #[serde(with = "crate::serde_big")]
    pub bound: BigUint,
    pub kind: RamseyKind,
}

/// Established two-color Ramsey numbers with `3 ≤ s ≤ t`.
const KNOWN: &[(usize, usize, u32)] = &[
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (3, 6, 18),
    (3, 7, 23),
    (3, 8, 28),
    (3, 9, 36),
    (4, 4, 18),
    (4, 5, 25),
];

fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `R(s, t)` from the table of known values, otherwise the Erdős–Szekeres
/// bound `C(s + t - 2, s - 1)`.
pub fn ramsey_upper(s: usize, t: usize) -> Result<RamseyValue, ZeroRamseyArgument> {
    if s == 0 || t == 0 {
        return Err(ZeroRamseyArgument(s, t));
    }
    let (lo, hi) = (s.min(t), s.max(t));
    let exact = match lo {
        1 => Some(BigUint::one()),
        2 => Some(BigUint::from(hi)),
        _ => KNOWN
            .iter()
            .find(|&&(a, b, _)| (a, b) == (lo, hi))
            .map(|&(_, _, r)| BigUint::from(r)),
    };
    let (bound, kind) = match exact {
        Some(b) => (b, RamseyKind::ExactKnown),
        None => (binomial(s + t - 2, s - 1), RamseyKind::DerivedUpper),
    };
    Ok(RamseyValue { s, t, bound, kind })
}

/// Erdős–Szekeres bound alone, ignoring the table.
pub fn ramsey_binomial(s: usize, t: usize) -> Result<BigUint, ZeroRamseyArgument> {
    if s == 0 || t == 0 {
        return Err(ZeroRamseyArgument(s, t));
    }
    Ok(binomial(s + t - 2, s - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum RamseyOutcome {
    Clique(VertexSet),
    Independent(VertexSet),
    NotFound,
}

fn find_homogeneous(
    pool: &[usize],
    size: usize,
    related: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    fn go(
        picked: &mut Vec<usize>,
        cands: &[usize],
        size: usize,
        related: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if picked.len() == size {
            return true;
        }
        for (i, &v) in cands.iter().enumerate() {
            if picked.len() + cands.len() - i < size {
                break;
            }
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| related(v, w)).collect();
            picked.push(v);
            if go(picked, &next, size, related) {
                return true;
            }
            picked.pop();
        }
        false
    }
    let mut picked = Vec::with_capacity(size);
    go(&mut picked, pool, size, related).then_some(picked)
}

/// Lowest-id clique of exactly `size` vertices inside `pool`.
pub fn find_clique(g: &Graph, pool: &VertexSet, size: usize) -> Option<VertexSet> {
    find_homogeneous(&pool.to_vec(), size, &|u, v| g.has_edge(u, v)).map(VertexSet::from_iter)
}

/// Lowest-id independent set of exactly `size` vertices inside `pool`.
pub fn find_independent(g: &Graph, pool: &VertexSet, size: usize) -> Option<VertexSet> {
    find_homogeneous(&pool.to_vec(), size, &|u, v| !g.has_edge(u, v)).map(VertexSet::from_iter)
}

/// Searches `pool` for an `s`-clique, then for an independent `t`-set.
/// One of the two always exists once `|pool| ≥ R(s, t)`.
pub fn ramsey_witness(g: &Graph, pool: &VertexSet, s: usize, t: usize) -> RamseyOutcome {
    if let Some(c) = find_clique(g, pool, s) {
        RamseyOutcome::Clique(c)
    } else if let Some(i) = find_independent(g, pool, t) {
        RamseyOutcome::Independent(i)
    } else {
        RamseyOutcome::NotFound
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn upper(s: usize, t: usize) -> (u64, RamseyKind) {
        let r = ramsey_upper(s, t).unwrap();
        (r.bound.try_into().unwrap(), r.kind)
    }

    #[test]
    fn table_values() {
        assert_eq!(upper(2, 2), (2, RamseyKind::ExactKnown));
        assert_eq!(upper(3, 3), (6, RamseyKind::ExactKnown));
        assert_eq!(upper(1, 17), (1, RamseyKind::ExactKnown));
        assert_eq!(upper(17, 1), (1, RamseyKind::ExactKnown));
        assert_eq!(upper(2, 9), (9, RamseyKind::ExactKnown));
        assert_eq!(upper(4, 3), (9, RamseyKind::ExactKnown));
        assert_eq!(upper(5, 3), (14, RamseyKind::ExactKnown));
        assert_eq!(upper(4, 4), (18, RamseyKind::ExactKnown));
        // C(8, 4) = 70 ≥ R(5,5)
        assert_eq!(upper(5, 5), (70, RamseyKind::DerivedUpper));
        assert_eq!(upper(3, 11), (66, RamseyKind::DerivedUpper));
        assert_eq!(ramsey_upper(0, 3), Err(ZeroRamseyArgument(0, 3)));
    }

    #[test]
    fn bound_dominates_arguments_and_is_symmetric() {
        for s in 1..12 {
            for t in 1..12 {
                let a = ramsey_upper(s, t).unwrap();
                let b = ramsey_upper(t, s).unwrap();
                assert_eq!(a.bound, b.bound);
                // R(1, t) = 1 is the only case below max(s, t)
                if s.min(t) > 1 {
                    assert!(a.bound >= BigUint::from(s.max(t)));
                }
                assert!(a.bound <= ramsey_binomial(s, t).unwrap());
            }
        }
    }

    #[test]
    fn binomial_is_arbitrary_precision() {
        let big = ramsey_binomial(60, 60).unwrap();
        assert!(big.bits() > 64);
    }

    #[test]
    fn witness_examples() {
        let c5 = gen_cycle(5).unwrap();
        assert_eq!(ramsey_witness(&c5, &VertexSet::full(5), 3, 3), RamseyOutcome::NotFound);
        let e4 = gen_empty(4);
        assert_eq!(
            ramsey_witness(&e4, &VertexSet::full(4), 2, 4),
            RamseyOutcome::Independent(VertexSet::full(4))
        );
        let k5 = gen_k_star(3).unwrap();
        assert_eq!(
            ramsey_witness(&k5, &VertexSet::full(6), 3, 3),
            RamseyOutcome::Clique([0, 1, 2].into())
        );
        let p3 = gen_path(3).unwrap();
        assert_eq!(
            ramsey_witness(&p3, &[0, 1, 2].into(), 1, 5),
            RamseyOutcome::Clique([0].into())
        );
    }
}
