//! Brill-Noether and Prym-Brill-Noether numerology.
//!
//! Arguments are `u32` and results `i128`, so no expression here can overflow.

use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::lattice;

/// Arguments of the Brill-Noether number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BnInput {
    pub g: u32,
    pub r: u32,
    pub d: u32,
}

fn rho_i(g: i128, r: i128, d: i128) -> i128 {
    g - (r + 1) * (g - d + r)
}

/// `rho(g, r, d) = g - (r + 1)(g - d + r)`.
pub fn rho(input: BnInput) -> i128 {
    rho_i(input.g.into(), input.r.into(), input.d.into())
}

/// `rho(2g - 1, r, d)`: the Brill-Noether number on the étale double cover.
pub fn rho_on_cover(g: u32, r: u32, d: u32) -> i128 {
    rho_i(2 * i128::from(g) - 1, r.into(), d.into())
}

fn binom2(r: i128) -> i128 {
    // r(r + 1) is always even
    r * (r + 1) / 2
}

/// The numbers attached to `(g, r)` for an étale double cover of a genus-`g` curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrymRecord {
    pub g: u32,
    pub r: u32,
    /// `g - 1 - C(r + 1, 2)`.
    pub rho_minus: i128,
    /// `rho_tilde - rho_minus`.
    pub rho_plus: i128,
    /// `rho(2g - 1, r, 2g - 2)`.
    pub rho_tilde: i128,
    /// `rho_minus > max(-1, rho_tilde)`.
    pub cond_prym_bound: bool,
    /// `-r <= rho_tilde < r`.
    pub cond_rho_window: bool,
}

pub fn prym_numbers(g: u32, r: u32) -> PrymRecord {
    let (gi, ri) = (i128::from(g), i128::from(r));
    let rho_minus = gi - 1 - binom2(ri);
    let rho_tilde = rho_i(2 * gi - 1, ri, 2 * gi - 2);
    PrymRecord {
        g,
        r,
        rho_minus,
        rho_plus: rho_tilde - rho_minus,
        rho_tilde,
        cond_prym_bound: rho_minus > rho_tilde.max(-1),
        cond_rho_window: -ri <= rho_tilde && rho_tilde < ri,
    }
}

/// `W^r_d` of the cover of a general Prym curve is empty when
/// `rho(2g - 1, r, d) < -r`.
pub fn schwarz_forced_empty(g: u32, r: u32, d: u32) -> bool {
    rho_on_cover(g, r, d) < -i128::from(r)
}

/// `V^r(C, eta)` is nonempty when `rho^-(g, r) >= 0`.
pub fn bertram_nonempty(g: u32, r: u32) -> bool {
    prym_numbers(g, r).rho_minus >= 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gonality {
    pub gonality: u32,
    pub clifford_index: u32,
}

/// Gonality of the cover of a general Prym curve: `g + 1` for odd `g`, `g`
/// for even `g`; Clifford index is gonality minus two.
pub fn expected_gonality(g: u32) -> Result<Gonality> {
    if g < 2 {
        return Err(invalid("gonality values need g >= 2"));
    }
    let gonality = if g % 2 == 1 { g + 1 } else { g };
    Ok(Gonality {
        gonality,
        clifford_index: gonality - 2,
    })
}

/// A double cover of a genus-`base_genus` curve branched at `branch_count` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverNumerics {
    pub base_genus: i64,
    pub branch_count: i64,
    pub cover_genus: i64,
}

/// Riemann-Hurwitz for a double cover: `2g - 1 + b/2`.
pub fn hurwitz_cover_genus(g: i64, b: i64) -> Result<i64> {
    if g < 1 {
        return Err(invalid("base genus must be at least 1"));
    }
    if b < 0 || b % 2 != 0 {
        return Err(invalid("a double cover has an even, nonnegative branch count"));
    }
    g.checked_mul(2)
        .and_then(|x| x.checked_sub(1))
        .and_then(|x| x.checked_add(b / 2))
        .ok_or(Error::Overflow)
}

/// Prym-Brill-Noether data of the class `A|C~` on a standard Nikulin surface of genus `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardNikulinRecord {
    pub h: u32,
    /// `floor(h / 2)`, cross-checked against `chi(A) - 1` on the lattice side.
    pub r: u32,
    pub rho_minus: i128,
    /// The line bundle `A|C~` violates Welters' dimension count.
    pub fails_welters: bool,
    /// A general Prym curve of genus `h` lies on a Nikulin surface.
    pub on_nikulin_general: bool,
}

/// `-(h-1)(h-7)/8` for odd `h`, `-(h-2)(h-4)/8` for even `h`, with the
/// divisibility by 8 checked rather than assumed.
pub fn standard_nikulin_rho_minus_closed(h: u32) -> Result<i128> {
    let hi = i128::from(h);
    let numerator = if h % 2 == 1 { (hi - 1) * (hi - 7) } else { (hi - 2) * (hi - 4) };
    if numerator % 8 != 0 {
        return Err(Error::Internal(alloc::format!("closed form for h = {h} is not integral")));
    }
    Ok(-numerator / 8)
}

/// `h <= 7` and `h != 6`.
pub fn on_nikulin_general(h: u32) -> bool {
    h <= 7 && h != 6
}

fn standard_record(h: u32) -> Result<StandardNikulinRecord> {
    if h < 2 {
        return Err(invalid("standard Nikulin numerics need h >= 2"));
    }
    let r = h / 2;
    let rho_minus = prym_numbers(h, r).rho_minus;
    let closed = standard_nikulin_rho_minus_closed(h)?;
    if rho_minus != closed {
        return Err(Error::Internal(alloc::format!(
            "rho^-({h}, {r}) = {rho_minus} but the closed form gives {closed}"
        )));
    }
    Ok(StandardNikulinRecord {
        h,
        r,
        rho_minus,
        fails_welters: rho_minus < 0,
        on_nikulin_general: on_nikulin_general(h),
    })
}

/// Numerics for a standard Nikulin surface of genus `h`, including the
/// cross-check `floor(h/2) = chi(A) - 1` against the lattice model.
pub fn standard_nikulin_numerics(h: u32) -> Result<StandardNikulinRecord> {
    let rec = standard_record(h)?;
    let lattice_r = lattice::pic_tilde_class(i64::from(h))?.r;
    if lattice_r != i64::from(rec.r) {
        return Err(Error::Internal(alloc::format!(
            "floor(h/2) = {} but chi(A) - 1 = {lattice_r}",
            rec.r
        )));
    }
    Ok(rec)
}

/// Same as [`standard_nikulin_numerics`] without the lattice cross-check; cheap
/// enough for long sweeps.
pub fn standard_nikulin_numerics_unchecked(h: u32) -> Result<StandardNikulinRecord> {
    standard_record(h)
}

/// Covers `pi^{-1}(D) -> D` for smooth `D` in `|R1|` and `|R2|` on a
/// non-standard Nikulin surface of odd genus `h`.
///
/// Classes with negative self-intersection contain no smooth curve and are
/// left out, so `h = 3` yields a single entry.
pub fn cover_numerics_nonstandard(h: u32) -> Result<Vec<CoverNumerics>> {
    let classes = lattice::nonstandard_classes(i64::from(h))?;
    let expected = (i64::from(h) + 1) / 2;
    let mut out = Vec::with_capacity(2);
    for class in [&classes.r1, &classes.r2] {
        if !class.is_effective() {
            continue;
        }
        let cover_genus = hurwitz_cover_genus(class.genus, class.branch)?;
        if cover_genus != expected {
            return Err(Error::Internal(alloc::format!(
                "cover genus {cover_genus} differs from (h + 1)/2 = {expected}"
            )));
        }
        out.push(CoverNumerics {
            base_genus: class.genus,
            branch_count: class.branch,
            cover_genus,
        });
    }
    Ok(out)
}

/// `3g - 3 - C(r + 1, 2)`.
pub fn spin_locus_expected_dim(g: u32, r: u32) -> i128 {
    3 * i128::from(g) - 3 - binom2(r.into())
}

/// Odd `g <= max_g` for which `-r <= rho(2g - 1, r, 2g - 2) < 0` has no
/// solution `r >= 1`.
pub fn odd_genera_without_negative_window(max_g: u32) -> Vec<u32> {
    (1..=max_g)
        .step_by(2)
        .filter(|&g| {
            let mut r = 1u32;
            loop {
                let t = prym_numbers(g, r).rho_tilde;
                if t < -i128::from(r) {
                    // rho_tilde + r decreases in r from here on
                    break true;
                }
                if t < 0 {
                    break false;
                }
                r += 1;
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_examples() {
        for g in 1..20 {
            for d in 0..30 {
                assert_eq!(rho(BnInput { g, r: 0, d }), i128::from(d));
            }
        }
        assert_eq!(rho(BnInput { g: 7, r: 1, d: 6 }), 3);
        assert_eq!(rho(BnInput { g: 11, r: 1, d: 6 }), -1);
    }

    #[test]
    fn prym_examples() {
        let p = prym_numbers(5, 0);
        assert_eq!((p.rho_minus, p.rho_plus), (4, 4));
        let p = prym_numbers(7, 3);
        assert_eq!((p.rho_minus, p.rho_tilde, p.rho_plus, p.cond_rho_window), (0, -3, -3, true));
        assert_eq!(prym_numbers(11, 5).rho_minus, -5);
    }

    #[test]
    fn schwarz_and_bertram() {
        assert!(schwarz_forced_empty(3, 1, 2));
        assert!(!schwarz_forced_empty(3, 1, 3));
        assert!(bertram_nonempty(9, 0));
        assert!(bertram_nonempty(7, 3));
        assert!(!bertram_nonempty(6, 3));
    }

    #[test]
    fn gonality_values() {
        assert_eq!(expected_gonality(5).unwrap(), Gonality { gonality: 6, clifford_index: 4 });
        assert_eq!(expected_gonality(6).unwrap(), Gonality { gonality: 6, clifford_index: 4 });
        assert!(expected_gonality(1).is_err());
    }

    #[test]
    fn hurwitz_values() {
        assert_eq!(hurwitz_cover_genus(4, 0).unwrap(), 7);
        assert_eq!(hurwitz_cover_genus(2, 2).unwrap(), 4);
        assert_eq!(hurwitz_cover_genus(1, 6).unwrap(), 4);
        assert!(hurwitz_cover_genus(2, 3).is_err());
        assert!(hurwitz_cover_genus(0, 2).is_err());
    }

    #[test]
    fn standard_nikulin_examples() {
        let r = standard_nikulin_numerics(6).unwrap();
        assert_eq!((r.r, r.rho_minus, r.fails_welters), (3, -1, true));
        let r = standard_nikulin_numerics(7).unwrap();
        assert_eq!((r.r, r.rho_minus, r.fails_welters), (3, 0, false));
        let r = standard_nikulin_numerics(12).unwrap();
        assert_eq!((r.r, r.rho_minus), (6, -10));
        assert!(standard_nikulin_numerics(1).is_err());
    }

    #[test]
    fn nonstandard_covers() {
        let c = |b, n, g| CoverNumerics {
            base_genus: b,
            branch_count: n,
            cover_genus: g,
        };
        assert_eq!(cover_numerics_nonstandard(7).unwrap(), [c(2, 2, 4), c(1, 6, 4)]);
        assert_eq!(cover_numerics_nonstandard(9).unwrap(), [c(2, 4, 5), c(2, 4, 5)]);
        assert_eq!(cover_numerics_nonstandard(11).unwrap(), [c(3, 2, 6), c(2, 6, 6)]);
        assert_eq!(cover_numerics_nonstandard(3).unwrap(), [c(1, 2, 2)]);
        assert!(matches!(cover_numerics_nonstandard(8), Err(Error::NonStandardForcesOdd(8))));
    }

    #[test]
    fn spin_dims() {
        assert_eq!(spin_locus_expected_dim(4, 0), 9);
        assert_eq!(spin_locus_expected_dim(4, 1), 8);
        assert_eq!(spin_locus_expected_dim(3, 2), 3);
    }
}
