use alloc::vec::Vec;

use super::vector::{low_mask, F2Vector, MAX_DIM};
use crate::error::{invalid, Error, Result};

#[inline]
pub(crate) fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

/// A nondegenerate alternating form on `F2^{2g}`, given by its Gram matrix in a
/// fixed coordinate basis `b_0, ..., b_{2g-1}`.
///
/// The space caches the symplectic basis produced by the lowest-index rule, so
/// Arf invariants of forms on it cost `O(g)` form evaluations.
#[derive(Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    half_dim: usize,
    /// `rows[i]` bit `j` is `<b_i, b_j>`.
    rows: Vec<u64>,
    basis: Vec<F2Vector>,
}

impl SymplecticSpace {
    /// The hyperbolic model: basis `e_1..e_g, f_1..f_g` with `<e_i, f_i> = 1`
    /// and every other pairing of basis vectors zero.
    pub fn standard(g: usize) -> Result<Self> {
        if g == 0 || 2 * g > MAX_DIM {
            return Err(invalid("genus must satisfy 1 <= g <= 32"));
        }
        let rows = (0..2 * g)
            .map(|i| if i < g { 1u64 << (i + g) } else { 1u64 << (i - g) })
            .collect();
        Self::from_rows(rows)
    }

    /// Builds a space from row masks of its Gram matrix.
    ///
    /// The matrix must be square of even size, symmetric and alternating;
    /// a degenerate matrix is rejected with [`Error::NoSymplecticBasis`].
    /// The zero-dimensional space (no rows) is allowed.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let dim = rows.len();
        if dim > MAX_DIM {
            return Err(invalid("dimension exceeds the 64-coordinate cap"));
        }
        if dim % 2 != 0 {
            return Err(invalid("a symplectic space has even dimension"));
        }
        let mask = low_mask(dim);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(invalid("gram row has bits beyond the dimension"));
            }
            if (row >> i) & 1 == 1 {
                return Err(Error::NoSymplecticBasis);
            }
            for (j, &other) in rows.iter().enumerate() {
                if (row >> j) & 1 != (other >> i) & 1 {
                    return Err(invalid("gram matrix is not symmetric"));
                }
            }
        }
        let mut space = Self {
            half_dim: dim / 2,
            rows,
            basis: Vec::new(),
        };
        let units: Vec<F2Vector> = (0..dim)
            .map(|i| F2Vector::new_unchecked(dim, 1 << i))
            .collect();
        space.basis = space.symplectic_basis_from(&units)?;
        Ok(space)
    }

    /// Builds a space from a 0/1 Gram matrix.
    pub fn from_gram(gram: &[Vec<u8>]) -> Result<Self> {
        let n = gram.len();
        let mut rows = Vec::with_capacity(n);
        for row in gram {
            if row.len() != n {
                return Err(invalid("gram matrix is not square"));
            }
            rows.push(F2Vector::from_coords(row)?.bits());
        }
        Self::from_rows(rows)
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn dim(&self) -> usize {
        2 * self.half_dim
    }

    /// Gram matrix as 0/1 entries.
    pub fn gram(&self) -> Vec<Vec<u8>> {
        let n = self.dim();
        self.rows
            .iter()
            .map(|&r| (0..n).map(|j| ((r >> j) & 1) as u8).collect())
            .collect()
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn check(&self, x: F2Vector) -> Result<()> {
        if x.len() != self.dim() {
            return Err(invalid("vector dimension does not match the space"));
        }
        Ok(())
    }

    /// `<x, y>`, i.e. `x^T G y` over F2.
    pub fn pair(&self, x: F2Vector, y: F2Vector) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.pair_bits(x.bits(), y.bits()))
    }

    #[inline]
    pub(crate) fn pair_bits(&self, mut x: u64, y: u64) -> bool {
        let mut acc = 0u64;
        while x != 0 {
            let i = x.trailing_zeros() as usize;
            acc ^= self.rows[i] & y;
            x &= x - 1;
        }
        parity(acc)
    }

    /// The vector `G y`, whose `i`-th coordinate is `<b_i, y>`.
    #[inline]
    pub(crate) fn pairing_vector(&self, y: u64) -> u64 {
        let mut out = 0u64;
        for (i, &row) in self.rows.iter().enumerate() {
            if parity(row & y) {
                out |= 1 << i;
            }
        }
        out
    }

    /// The canonical symplectic basis `(e_1..e_g, f_1..f_g)` obtained from the
    /// coordinate basis by the lowest-index rule.
    pub fn symplectic_basis(&self) -> &[F2Vector] {
        &self.basis
    }

    /// Symplectic reduction of an arbitrary spanning sequence.
    ///
    /// Repeatedly takes the first nonzero vector `e` of the working list, the
    /// first vector `f` in the list with `<e, f> = 1`, removes both and
    /// replaces every remaining `w` by its projection
    /// `w + <w, f> e + <w, e> f` onto the orthogonal complement of `span(e, f)`.
    /// Returns `(e_1..e_g, f_1..f_g)`. Fails with [`Error::NoSymplecticBasis`]
    /// when the sequence does not span a nondegenerate space of full dimension.
    pub fn symplectic_basis_from(&self, spanning: &[F2Vector]) -> Result<Vec<F2Vector>> {
        for &v in spanning {
            self.check(v)?;
        }
        let dim = self.dim();
        let mut work: Vec<u64> = spanning.iter().map(|v| v.bits()).filter(|&b| b != 0).collect();
        let mut es = Vec::with_capacity(self.half_dim);
        let mut fs = Vec::with_capacity(self.half_dim);
        while let Some(&e) = work.first() {
            let j = work
                .iter()
                .position(|&w| self.pair_bits(e, w))
                .ok_or(Error::NoSymplecticBasis)?;
            let f = work[j];
            work.remove(j);
            work.remove(0);
            for w in work.iter_mut() {
                let (we, wf) = (self.pair_bits(*w, e), self.pair_bits(*w, f));
                if wf {
                    *w ^= e;
                }
                if we {
                    *w ^= f;
                }
            }
            work.retain(|&w| w != 0);
            es.push(F2Vector::new_unchecked(dim, e));
            fs.push(F2Vector::new_unchecked(dim, f));
        }
        if es.len() != self.half_dim {
            return Err(Error::NoSymplecticBasis);
        }
        es.extend(fs);
        Ok(es)
    }

    /// Checks `<e_i, f_j> = delta_ij` and `<e_i, e_j> = <f_i, f_j> = 0`.
    pub fn is_symplectic_basis(&self, basis: &[F2Vector]) -> bool {
        let g = self.half_dim;
        if basis.len() != 2 * g || basis.iter().any(|v| v.len() != self.dim()) {
            return false;
        }
        (0..2 * g).all(|i| {
            (0..2 * g).all(|j| {
                let expected = (i < g && j == i + g) || (i >= g && i == j + g);
                self.pair_bits(basis[i].bits(), basis[j].bits()) == expected
            })
        })
    }
}

impl core::fmt::Debug for SymplecticSpace {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SymplecticSpace")
            .field("g", &self.half_dim)
            .field("gram", &self.gram())
            .finish()
    }
}
