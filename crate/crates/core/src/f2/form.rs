use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::space::{parity, SymplecticSpace};
use super::vector::{low_mask, F2Vector};
use crate::error::{invalid, Error, Result};

/// Largest genus for which operations enumerate all `2^{2g}` vectors or forms.
pub const ENUMERATION_CAP_G: usize = 12;

pub(crate) fn check_enumerable(g: usize) -> Result<()> {
    if g > ENUMERATION_CAP_G {
        return Err(Error::ResourceLimit(alloc::format!(
            "enumeration over 2^(2g) objects refused for g = {g} > {ENUMERATION_CAP_G}"
        )));
    }
    Ok(())
}

/// A quadratic form `q: V -> F2` whose polarity is the pairing of its space:
/// `q(x + y) = q(x) + q(y) + <x, y>`.
///
/// Only the values `q(b_i)` on the coordinate basis are stored; every other
/// value follows from the polarization expansion in [`QuadraticForm::eval`].
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    space: Arc<SymplecticSpace>,
    values: u64,
}

impl QuadraticForm {
    pub fn new(space: Arc<SymplecticSpace>, basis_values: F2Vector) -> Result<Self> {
        space.check(basis_values)?;
        Ok(Self {
            space,
            values: basis_values.bits(),
        })
    }

    pub(crate) fn from_bits_unchecked(space: Arc<SymplecticSpace>, values: u64) -> Self {
        debug_assert_eq!(values & !low_mask(space.dim()), 0);
        Self { space, values }
    }

    pub fn space(&self) -> &Arc<SymplecticSpace> {
        &self.space
    }

    /// The values `q(b_i)` on the coordinate basis.
    pub fn basis_values(&self) -> F2Vector {
        F2Vector::new_unchecked(self.space.dim(), self.values)
    }

    /// `q(sum c_i b_i) = sum c_i q(b_i) + sum_{i<j} c_i c_j <b_i, b_j>`.
    pub fn eval(&self, x: F2Vector) -> Result<bool> {
        self.space.check(x)?;
        Ok(self.eval_bits(x.bits()))
    }

    #[inline]
    pub(crate) fn eval_bits(&self, x: u64) -> bool {
        let rows = self.space.rows();
        let mut cross = 0u64;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // terms j > i only
            cross ^= rows[i] & rest;
        }
        parity(self.values & x) ^ parity(cross)
    }

    /// The torsor action `q -> q + <., v>`.
    pub fn translate(&self, v: F2Vector) -> Result<Self> {
        self.space.check(v)?;
        Ok(Self {
            space: Arc::clone(&self.space),
            values: self.values ^ self.space.pairing_vector(v.bits()),
        })
    }

    /// `sum_i q(e_i) q(f_i)` over the canonical symplectic basis of the space.
    pub fn arf(&self) -> bool {
        self.arf_unchecked(self.space.symplectic_basis())
    }

    /// Arf invariant computed in a caller-supplied symplectic basis
    /// `(e_1..e_g, f_1..f_g)`.
    pub fn arf_in_basis(&self, basis: &[F2Vector]) -> Result<bool> {
        if !self.space.is_symplectic_basis(basis) {
            return Err(invalid("not a symplectic basis of the form's space"));
        }
        Ok(self.arf_unchecked(basis))
    }

    fn arf_unchecked(&self, basis: &[F2Vector]) -> bool {
        let (es, fs) = basis.split_at(basis.len() / 2);
        es.iter()
            .zip(fs)
            .fold(false, |acc, (e, f)| acc ^ (self.eval_bits(e.bits()) & self.eval_bits(f.bits())))
    }

    /// Number of vectors `x` with `q(x) = 0`, by enumeration.
    ///
    /// Equals `2^{2g-1} + 2^{g-1}` exactly when the form is even, which gives
    /// an Arf oracle that does not depend on any choice of basis.
    pub fn zero_count(&self) -> Result<u64> {
        check_enumerable(self.space.half_dim())?;
        let n = self.space.dim();
        Ok((0..1u64 << n).filter(|&x| !self.eval_bits(x)).count() as u64)
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm(g={}, values={})", self.space.half_dim(), self.basis_values())
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.basis_values(), f)
    }
}

/// All `2^{2g}` forms on `space`, ordered lexicographically by the sequence
/// `(q(b_0), q(b_1), ...)` with `q(b_0)` most significant.
pub fn enumerate_forms(space: &Arc<SymplecticSpace>) -> Result<impl Iterator<Item = QuadraticForm>> {
    check_enumerable(space.half_dim())?;
    let n = space.dim();
    let space = Arc::clone(space);
    Ok((0..1u64 << n).map(move |k| {
        let values = if n == 0 { 0 } else { k.reverse_bits() >> (64 - n) };
        QuadraticForm::from_bits_unchecked(Arc::clone(&space), values)
    }))
}

/// A subspace of a symplectic space, given by an independent spanning list.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: Arc<SymplecticSpace>,
    basis: Vec<F2Vector>,
}

impl Subspace {
    /// Fails if the vectors are not linearly independent.
    pub fn new(ambient: Arc<SymplecticSpace>, basis: Vec<F2Vector>) -> Result<Self> {
        for &v in &basis {
            ambient.check(v)?;
        }
        if f2_rank(basis.iter().map(|v| v.bits())) != basis.len() {
            return Err(invalid("subspace basis is linearly dependent"));
        }
        Ok(Self { ambient, basis })
    }

    pub fn basis(&self) -> &[F2Vector] {
        &self.basis
    }

    pub fn ambient(&self) -> &Arc<SymplecticSpace> {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The ambient pairing restricted to this subspace, in the coordinates of
    /// its basis. Fails unless the restriction is nondegenerate.
    pub fn restricted_space(&self) -> Result<SymplecticSpace> {
        let rows = self
            .basis
            .iter()
            .map(|u| {
                self.basis.iter().enumerate().fold(0u64, |acc, (j, w)| {
                    acc | (u64::from(self.ambient.pair_bits(u.bits(), w.bits())) << j)
                })
            })
            .collect();
        SymplecticSpace::from_rows(rows)
    }

    /// Restriction of an ambient form to this subspace.
    pub fn restrict(&self, q: &QuadraticForm) -> Result<QuadraticForm> {
        if q.space() != &self.ambient && **q.space() != *self.ambient {
            return Err(invalid("form lives on a different space"));
        }
        let space = Arc::new(self.restricted_space()?);
        let values = self
            .basis
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, u)| acc | (u64::from(q.eval_bits(u.bits())) << i));
        Ok(QuadraticForm::from_bits_unchecked(space, values))
    }
}

/// Rank over F2 of a family of bit masks.
pub(crate) fn f2_rank(vectors: impl IntoIterator<Item = u64>) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for mut v in vectors {
        for &p in &pivots {
            v = v.min(v ^ p);
        }
        if v != 0 {
            pivots.push(v);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// Splitting `V = Sigma (+) Sigma^perp` along a hyperbolic pair.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub sigma: Subspace,
    pub sigma_perp: Subspace,
    pub q_sigma: QuadraticForm,
    pub q_perp: QuadraticForm,
}

/// Splits the space of `q` along the plane spanned by `eta, eps` (which must
/// pair to 1) and restricts `q` to both summands.
pub fn decompose_and_restrict(q: &QuadraticForm, eta: F2Vector, eps: F2Vector) -> Result<Decomposition> {
    let ambient = Arc::clone(q.space());
    if !ambient.pair(eta, eps)? {
        return Err(Error::NotHyperbolicPair);
    }
    let n = ambient.dim();
    let mut perp_basis: Vec<F2Vector> = Vec::with_capacity(n.saturating_sub(2));
    let mut pivots: Vec<u64> = Vec::new();
    for i in 0..n {
        let w = 1u64 << i;
        let mut p = w;
        if ambient.pair_bits(w, eps.bits()) {
            p ^= eta.bits();
        }
        if ambient.pair_bits(w, eta.bits()) {
            p ^= eps.bits();
        }
        let mut reduced = p;
        for &piv in &pivots {
            reduced = reduced.min(reduced ^ piv);
        }
        if reduced != 0 {
            pivots.push(reduced);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
            perp_basis.push(F2Vector::new_unchecked(n, p));
        }
    }
    if perp_basis.len() + 2 != n {
        return Err(Error::Internal("orthogonal complement has wrong dimension".into()));
    }
    let sigma = Subspace::new(Arc::clone(&ambient), alloc::vec![eta, eps])?;
    let sigma_perp = Subspace::new(ambient, perp_basis)?;
    let q_sigma = sigma.restrict(q)?;
    let q_perp = sigma_perp.restrict(q)?;
    Ok(Decomposition {
        sigma,
        sigma_perp,
        q_sigma,
        q_perp,
    })
}
