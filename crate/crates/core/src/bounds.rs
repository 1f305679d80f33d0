//! The per-layer bound functions `g` and `f` and the total bound
//! `1 + Σ_{i=2}^{m-2} f(i)` for connected `{K*_k, S*_ℓ, P_m}`-free graphs.
//!
//! `g(1) = 1` and `g(i) = R(k, (ℓ - 1) g(i - 1) + 1) - 1`; `f(i) = R(k, ℓ) g(i)`.
//! Every Ramsey number is replaced by an upper bound. The arguments only need
//! a size at which the clique / independent-set dichotomy is forced, so larger
//! values give weaker but still valid bounds.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::ramsey::{ramsey_upper, RamseyKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("parameters k, l, m and the layer index must be positive")]
    ZeroParameter,
    #[error("f is defined for layers i >= 2, got {0}")]
    LayerTooShallow(usize),
}

/// Where Ramsey bounds come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseySource {
    /// Known exact values where available, binomial bound elsewhere.
    Table,
    /// The binomial bound `C(s + t - 2, s - 1)` everywhere.
    Binomial,
}

fn binomial_big(s: usize, t: &BigUint) -> BigUint {
    // C(s + t - 2, s - 1) = Π_{j=1}^{s-1} (t - 1 + j) / j
    let base = t - BigUint::one();
    let mut acc = BigUint::one();
    for j in 1..s {
        acc *= &base + j;
        acc /= j;
    }
    acc
}

impl RamseySource {
    /// Upper bound on `R(s, t)` with an arbitrary-precision second argument.
    pub fn bound(self, s: usize, t: &BigUint) -> (BigUint, RamseyKind) {
        debug_assert!(s >= 1 && !t.is_zero());
        match (self, t.to_usize()) {
            (RamseySource::Table, Some(t)) => {
                let r = ramsey_upper(s, t).expect("positive arguments");
                (r.bound, r.kind)
            }
            (RamseySource::Table, None) if s <= 2 => {
                let exact = if s == 1 { BigUint::one() } else { t.clone() };
                (exact, RamseyKind::ExactKnown)
            }
            _ => (binomial_big(s, t), RamseyKind::DerivedUpper),
        }
    }
}

/// Values of `g` and `f` for fixed `(k, ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub k: usize,
    pub l: usize,
    pub source: RamseySource,
    /// `R(k, ℓ)` bound used by `f`.
    #[serde(with = "crate::serde_big")]
    pub ramsey_kl: BigUint,
    /// `g[i - 1] = g(i)` for `i = 1..=depth`.
    #[serde(with = "crate::serde_big::vec")]
    pub g: Vec<BigUint>,
    /// Whether every Ramsey value used so far is exact.
    pub exact: bool,
}

impl BoundTable {
    pub fn new(k: usize, l: usize, source: RamseySource) -> Result<Self, BoundError> {
        if k == 0 || l == 0 {
            return Err(BoundError::ZeroParameter);
        }
        let (ramsey_kl, kind) = source.bound(k, &BigUint::from(l));
        Ok(BoundTable {
            k,
            l,
            source,
            ramsey_kl,
            g: vec![BigUint::one()],
            exact: kind == RamseyKind::ExactKnown,
        })
    }

    fn extend_to(&mut self, i: usize) {
        while self.g.len() < i {
            let prev = self.g.last().expect("g(1) is seeded");
            let t = prev * (self.l - 1) + 1u32;
            let (r, kind) = self.source.bound(self.k, &t);
            self.exact &= kind == RamseyKind::ExactKnown;
            self.g.push(r - 1u32);
        }
    }

    pub fn g(&mut self, i: usize) -> Result<BigUint, BoundError> {
        if i == 0 {
            return Err(BoundError::ZeroParameter);
        }
        self.extend_to(i);
        Ok(self.g[i - 1].clone())
    }

    pub fn f(&mut self, i: usize) -> Result<BigUint, BoundError> {
        if i < 2 {
            return Err(BoundError::LayerTooShallow(i));
        }
        let g = self.g(i)?;
        Ok(&self.ramsey_kl * g)
    }

    /// Largest `|X₀|` the layer argument allows: `(R(k, ℓ) - 1) g(i)`.
    pub fn residual_limit(&mut self, i: usize) -> Result<BigUint, BoundError> {
        let g = self.g(i)?;
        Ok((&self.ramsey_kl - 1u32) * g)
    }

    /// `1 + Σ_{i=2}^{m-2} f(i)`.
    pub fn total(&mut self, m: usize) -> Result<BigUint, BoundError> {
        if m == 0 {
            return Err(BoundError::ZeroParameter);
        }
        let mut sum = BigUint::one();
        for i in 2..=m.saturating_sub(2) {
            sum += self.f(i)?;
        }
        Ok(sum)
    }
}

pub fn g_value(k: usize, l: usize, i: usize) -> Result<BigUint, BoundError> {
    BoundTable::new(k, l, RamseySource::Table)?.g(i)
}

pub fn f_value(k: usize, l: usize, i: usize) -> Result<BigUint, BoundError> {
    BoundTable::new(k, l, RamseySource::Table)?.f(i)
}

pub fn theorem_bound(k: usize, l: usize, m: usize) -> Result<BigUint, BoundError> {
    BoundTable::new(k, l, RamseySource::Table)?.total(m)
}
