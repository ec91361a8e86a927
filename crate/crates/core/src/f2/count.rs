use alloc::sync::Arc;
use alloc::vec::Vec;

use super::form::{check_enumerable, enumerate_forms};
use super::space::SymplecticSpace;
use super::vector::F2Vector;
use crate::error::{invalid, Error, Result};

/// Number of even and odd forms on the standard space of genus `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArfCounts {
    pub even: u64,
    pub odd: u64,
}

/// Counts forms on the standard genus-`g` space by Arf invariant, by
/// exhaustive enumeration.
pub fn count_forms_by_arf(g: usize) -> Result<ArfCounts> {
    check_enumerable(g)?;
    let space = Arc::new(SymplecticSpace::standard(g)?);
    let odd = enumerate_forms(&space)?.filter(|q| q.arf()).count() as u64;
    Ok(ArfCounts {
        even: (1u64 << (2 * g)) - odd,
        odd,
    })
}

/// Odd forms vanishing at a fixed nonzero vector, and their orbits under
/// translation by that vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecialThetaCount {
    /// `#{q : q(eta) = 0, arf(q) = 1}`.
    pub solutions: u64,
    /// Number of orbits `{q, q + <., eta>}`; each has size exactly 2.
    pub vanishing_thetanulls: u64,
}

/// [`count_special_theta_in`] on the standard genus-`g` space.
pub fn count_special_theta(g: usize, eta: F2Vector) -> Result<SpecialThetaCount> {
    check_enumerable(g)?;
    let space = Arc::new(SymplecticSpace::standard(g)?);
    count_special_theta_in(&space, eta)
}

/// Enumerates the odd forms with `q(eta) = 0` and groups them into orbits of
/// `q -> q + <., eta>`.
///
/// The orbit structure is checked, not assumed: every solution's partner must
/// be distinct from it and again a solution, otherwise an
/// [`Error::Internal`] is returned.
pub fn count_special_theta_in(space: &Arc<SymplecticSpace>, eta: F2Vector) -> Result<SpecialThetaCount> {
    space.check(eta)?;
    if eta.is_zero() {
        return Err(invalid("eta must be nonzero"));
    }
    let solutions: Vec<u64> = enumerate_forms(space)?
        .filter(|q| q.arf() && !q.eval_bits(eta.bits()))
        .map(|q| q.basis_values().bits())
        .collect();
    let mut sorted = solutions.clone();
    sorted.sort_unstable();
    let shift = space.pairing_vector(eta.bits());
    let mut orbits = 0u64;
    for &values in &solutions {
        let partner = values ^ shift;
        if partner == values {
            return Err(Error::Internal("translation by eta fixed a form".into()));
        }
        if sorted.binary_search(&partner).is_err() {
            return Err(Error::Internal("translation by eta left the solution set".into()));
        }
        if partner > values {
            orbits += 1;
        }
    }
    if 2 * orbits != solutions.len() as u64 {
        return Err(Error::Internal("solutions do not split into orbits of size 2".into()));
    }
    Ok(SpecialThetaCount {
        solutions: solutions.len() as u64,
        vanishing_thetanulls: orbits,
    })
}
