//! Exact enumeration of lattice vectors of bounded norm in a definite lattice.
//!
//! The form is written as a sum of squares
//! `Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2` with rational `d_i > 0`,
//! and coordinates are enumerated from the last one down (Fincke-Pohst). Each
//! coordinate range is decided by an exact rational comparison, so the search
//! is complete: no vector of norm within the bound is missed.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedSub, Signed, Zero};

use super::gram::{checked_ratio_add, checked_ratio_mul, Definiteness, IntegerLattice, Rational};
use crate::error::{Error, Result};

/// Maximum number of search-tree nodes visited before giving up.
pub const SHORT_VECTOR_NODE_BUDGET: u64 = 50_000_000;

/// Result of a short-vector search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVectors {
    pub count: u64,
    /// Present only when requested.
    pub vectors: Option<Vec<Vec<i64>>>,
}

struct Decomposition {
    /// `d_i` on the diagonal, `mu_ij` above it.
    q: Vec<Vec<Rational>>,
}

fn sub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn decompose(l: &IntegerLattice) -> Result<Decomposition> {
    let sign = match l.definiteness()? {
        Definiteness::Positive => 1,
        Definiteness::Negative => -1,
        Definiteness::Other => {
            return Err(Error::Unsupported("short vector enumeration needs a definite lattice".into()));
        }
    };
    let n = l.rank();
    let g = l.gram();
    let mut q: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Ratio::from_integer(i128::from(g[(i, j)]) * sign)).collect())
        .collect();
    for i in 0..n {
        let d = q[i][i];
        if !d.is_positive() {
            return Err(Error::Internal("non-positive pivot in a definite form".into()));
        }
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j].checked_div(&d).ok_or(Error::Overflow)?;
        }
        for k in i + 1..n {
            for m in k..n {
                let t = checked_ratio_mul(&q[k][i], &q[i][m])?;
                q[k][m] = sub(&q[k][m], &t)?;
            }
        }
    }
    Ok(Decomposition { q })
}

struct Search<'a, F> {
    lattice: &'a IntegerLattice,
    dec: &'a Decomposition,
    bound: Rational,
    x: Vec<i64>,
    nodes: u64,
    visit: F,
}

impl<F: FnMut(&[i64], i128) -> ControlFlow<()>> Search<'_, F> {
    /// Enumerates coordinate `i` given `x_{i+1..n}` and the partial sum `used`.
    fn level(&mut self, i: usize, used: Rational) -> Result<ControlFlow<()>> {
        let n = self.x.len();
        let mut center = Rational::zero();
        for j in i + 1..n {
            let t = checked_ratio_mul(&self.dec.q[i][j], &Ratio::from_integer(i128::from(self.x[j])))?;
            center = sub(&center, &t)?;
        }
        let d = self.dec.q[i][i];
        let start = center.floor().to_integer();
        // walk down from floor(center), then up from floor(center) + 1
        for dir in [-1i128, 1] {
            let mut xi = if dir < 0 { start } else { start + 1 };
            loop {
                self.nodes += 1;
                if self.nodes > SHORT_VECTOR_NODE_BUDGET {
                    return Err(Error::ResourceLimit("short vector search exceeded its node budget".into()));
                }
                let diff = sub(&Ratio::from_integer(xi), &center)?;
                let term = checked_ratio_mul(&d, &checked_ratio_mul(&diff, &diff)?)?;
                let total = checked_ratio_add(&used, &term)?;
                if total > self.bound {
                    break;
                }
                self.x[i] = i64::try_from(xi).map_err(|_| Error::Overflow)?;
                let flow = if i == 0 {
                    self.leaf()?
                } else {
                    self.level(i - 1, total)?
                };
                if flow.is_break() {
                    return Ok(flow);
                }
                xi += dir;
            }
        }
        self.x[i] = 0;
        Ok(ControlFlow::Continue(()))
    }

    fn leaf(&mut self) -> Result<ControlFlow<()>> {
        if self.x.iter().all(|&c| c == 0) {
            return Ok(ControlFlow::Continue(()));
        }
        // recompute with the integer gram so the reported norm is independent
        // of the rational decomposition
        let norm = self.lattice.raw_product(&self.x, &self.x)?;
        Ok((self.visit)(&self.x, norm))
    }
}

/// Calls `visit` with every nonzero vector `x` with `|x . x| <= max_abs_norm`,
/// together with its norm. Stops early when `visit` breaks.
pub fn for_each_short_vector<F>(l: &IntegerLattice, max_abs_norm: u64, visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[i64], i128) -> ControlFlow<()>,
{
    let dec = decompose(l)?;
    let n = l.rank();
    let mut s = Search {
        lattice: l,
        dec: &dec,
        bound: Ratio::from_integer(i128::from(max_abs_norm)),
        x: vec![0; n],
        nodes: 0,
        visit,
    };
    s.level(n - 1, Rational::zero())
}

/// Counts the nonzero vectors of norm exactly `target_norm`.
pub fn short_vectors(l: &IntegerLattice, target_norm: i64, collect: bool) -> Result<ShortVectors> {
    let mut count = 0u64;
    let mut vectors = collect.then(Vec::new);
    if target_norm != 0 {
        let target = i128::from(target_norm);
        let flow = for_each_short_vector(l, target_norm.unsigned_abs(), |x, norm| {
            if norm == target {
                count += 1;
                if let Some(vs) = vectors.as_mut() {
                    vs.push(x.to_vec());
                }
            }
            ControlFlow::Continue(())
        })?;
        debug_assert!(flow.is_continue());
    } else {
        // nonzero vectors of a definite lattice never have norm 0
        decompose(l)?;
    }
    Ok(ShortVectors { count, vectors })
}

/// First vector (in search order) of norm exactly `target_norm`.
pub fn find_vector_of_norm(l: &IntegerLattice, target_norm: i64) -> Result<Option<Vec<i64>>> {
    if target_norm == 0 {
        decompose(l)?;
        return Ok(None);
    }
    let target = i128::from(target_norm);
    let mut found = None;
    let _ = for_each_short_vector(l, target_norm.unsigned_abs(), |x, norm| {
        if norm == target {
            found = Some(x.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
