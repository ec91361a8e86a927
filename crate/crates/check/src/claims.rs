//! The claim registry and its executor.

use std::sync::Arc;
use std::time::Instant;

use nikulin_core::bn::{
    bertram_nonempty, cover_numerics_nonstandard, expected_gonality, hurwitz_cover_genus,
    odd_genera_without_negative_window, on_nikulin_general, prym_numbers, rho, rho_on_cover, schwarz_forced_empty,
    spin_locus_expected_dim, standard_nikulin_numerics, standard_nikulin_numerics_unchecked, BnInput,
};
use nikulin_core::f2::{
    count_forms_by_arf, count_special_theta, count_special_theta_in, decompose_and_restrict, enumerate_forms,
    F2Vector, QuadraticForm, SymplecticSpace,
};
use nikulin_core::lattice::{
    e8_minus2, half_class, lambda_h, nikulin_lattice, nonstandard_classes, pic_tilde_class, short_vectors,
    Definiteness, IntegerLattice, NonStandardCase, Rational, RationalClass,
};
use nikulin_core::Error as CoreError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{ClaimReport, ClaimResult, Status};
use crate::{CheckError, Value};

type CoreResult<T> = Result<T, CoreError>;

/// Largest genus accepted for the F2 sweeps (the enumeration cap).
pub const MAX_GENUS_CAP: usize = nikulin_core::f2::ENUMERATION_CAP_G;
/// Largest `h` accepted for the lattice sweeps.
pub const MAX_H_CAP: u32 = 10_000;

/// Topic locators used as `paper_location`, with the item each one stands for.
/// Every locator is referenced by at least one claim.
pub const PAPER_MAP: &[(&str, &str)] = &[
    ("brill-noether/rho", "Brill-Noether number rho(g, r, d)"),
    ("prym/rho-minus", "Prym-Brill-Noether number and the non-emptiness predicate"),
    ("prym/rho-plus", "rho-plus, rho on the cover and the two equivalent range conditions"),
    ("theta/weil-pairing", "symplectic form on the 2-torsion of the Jacobian"),
    ("theta/polarity", "theta-forms are quadratic forms polar to the pairing"),
    ("theta/arf", "Arf invariant as the parity of a theta-characteristic"),
    ("theta/counts", "numbers of even, odd and all theta-characteristics"),
    ("theta/torsor", "2-torsion acting simply transitively on theta-characteristics"),
    ("theta/spin-dimension", "expected dimension of the spin loci"),
    ("theta/beauville-splitting", "plane and orthogonal complement splitting, Arf additivity"),
    ("theta/beauville-counts", "Beauville counts of odd forms and vanishing thetanulls"),
    ("covers/schwarz", "emptiness predicate for linear series on the cover"),
    ("covers/gonality", "gonality and Clifford index of a general cover"),
    ("covers/even-pencil", "degree-g pencils on the cover"),
    ("covers/ramified", "ramified double covers with 2n branch points"),
    ("nikulin/surface", "eight disjoint nodes with 2-divisible sum"),
    ("nikulin/lattice", "Nikulin lattice and Lambda_h"),
    ("nikulin/nonstandard-glue", "non-standard glue classes R1, R2 and their genera"),
    ("nikulin/standard-cover-pic", "Picard lattice of the K3 cover, standard case"),
    ("nikulin/nonstandard-cover-pic", "Picard lattice of the K3 cover, non-standard case"),
    ("nikulin/branch-relations", "branch counts of the curves in |R1|, |R2|"),
    ("nikulin/cover-genus", "genus (h + 1)/2 of the covers of curves in |R1|, |R2|"),
    ("nikulin/welters-failure", "standard case: r, A^2, chi(A) and the rho-minus closed forms"),
    ("nikulin/general-range", "range of genera where a general Prym curve lies on a Nikulin surface"),
    ("nikulin/ramified-covers", "genera and branch counts realised by non-standard surfaces"),
];

/// Sweep bounds and selection for a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_g: usize,
    pub max_h: u32,
    pub filter_prefix: Option<String>,
    pub fail_fast: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_g: 6,
            max_h: 100,
            filter_prefix: None,
            fail_fast: false,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CheckError> {
        if !(1..=MAX_GENUS_CAP).contains(&self.max_g) {
            return Err(CheckError::Usage(format!("max genus must be in 1..={MAX_GENUS_CAP}, got {}", self.max_g)));
        }
        if !(2..=MAX_H_CAP).contains(&self.max_h) {
            return Err(CheckError::Usage(format!("max h must be in 2..={MAX_H_CAP}, got {}", self.max_h)));
        }
        if let Some(p) = &self.filter_prefix {
            if p.is_empty() || p.chars().any(char::is_whitespace) {
                return Err(CheckError::Usage(format!("invalid filter prefix {p:?}")));
            }
        }
        Ok(())
    }
}

/// What a claim produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Computed(Value),
    /// The instance lies outside the configured sweep bounds.
    Skipped(String),
}

type Compute = Box<dyn Fn(&Config) -> CoreResult<Outcome> + Send + Sync>;

/// One checkable assertion.
pub struct Claim {
    pub id: String,
    pub description: String,
    pub paper_location: &'static str,
    pub expected: Value,
    pub note: Option<&'static str>,
    compute: Compute,
}

impl Claim {
    pub fn evaluate(&self, config: &Config) -> CoreResult<Outcome> {
        (self.compute)(config)
    }
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("paper_location", &self.paper_location)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

struct Registry(Vec<Claim>);

impl Registry {
    fn add<F>(&mut self, id: impl Into<String>, location: &'static str, description: impl Into<String>, expected: impl Into<Value>, compute: F) -> &mut Claim
    where
        F: Fn(&Config) -> CoreResult<Outcome> + Send + Sync + 'static,
    {
        debug_assert!(PAPER_MAP.iter().any(|(l, _)| *l == location), "{location}");
        self.0.push(Claim {
            id: id.into(),
            description: description.into(),
            paper_location: location,
            expected: expected.into(),
            note: None,
            compute: Box::new(compute),
        });
        self.0.last_mut().unwrap()
    }
}

fn done(v: impl Into<Value>) -> CoreResult<Outcome> {
    Ok(Outcome::Computed(v.into()))
}

fn at_genus(c: &Config, g: usize, f: impl FnOnce() -> CoreResult<Value>) -> CoreResult<Outcome> {
    if c.max_g < g {
        return Ok(Outcome::Skipped(format!("max genus {} is below g = {g}", c.max_g)));
    }
    f().map(Outcome::Computed)
}

fn at_h(c: &Config, h: u32, f: impl FnOnce() -> CoreResult<Value>) -> CoreResult<Outcome> {
    if c.max_h < h {
        return Ok(Outcome::Skipped(format!("max h {} is below h = {h}", c.max_h)));
    }
    f().map(Outcome::Computed)
}

/// Number of items for which `ok` is false.
fn violations<T>(items: impl IntoIterator<Item = T>, mut ok: impl FnMut(T) -> CoreResult<bool>) -> CoreResult<Value> {
    let mut bad = 0u64;
    for x in items {
        if !ok(x)? {
            bad += 1;
        }
    }
    Ok(bad.into())
}

fn space(g: usize) -> CoreResult<Arc<SymplecticSpace>> {
    SymplecticSpace::standard(g).map(Arc::new)
}

fn vectors(n: usize) -> CoreResult<Vec<F2Vector>> {
    Ok(F2Vector::all(n)?.collect())
}

fn forms(s: &Arc<SymplecticSpace>) -> CoreResult<Vec<QuadraticForm>> {
    Ok(enumerate_forms(s)?.collect())
}

fn rat_i64(r: Rational) -> Value {
    if r.is_integer() {
        Value::from(*r.numer())
    } else {
        Value::Text(format!("{}/{}", r.numer(), r.denom()))
    }
}

/// Random symplectic basis: random vectors followed by the standard basis, so
/// the sequence always spans, then the symplectic Gram-Schmidt of the space.
fn random_symplectic_basis(s: &SymplecticSpace, rng: &mut ChaCha8Rng) -> CoreResult<Vec<F2Vector>> {
    let n = s.dim();
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seq = Vec::with_capacity(2 * n);
    for _ in 0..n {
        seq.push(F2Vector::from_bits(n, rng.gen::<u64>() & mask)?);
    }
    for i in 0..n {
        seq.push(F2Vector::unit(n, i)?);
    }
    s.symplectic_basis_from(&seq)
}

fn f2_claims(r: &mut Registry) {
    r.add(
        "f2.pairing.nondegenerate",
        "theta/weil-pairing",
        "the standard pairing on F2^{2g} is alternating and nondegenerate and e_i, f_i is a symplectic basis, g = 1..max_genus (violations)",
        0,
        |c| {
            done(violations(1..=c.max_g, |g| {
                let s = space(g)?;
                let rebuilt = SymplecticSpace::from_gram(&s.gram()).is_ok();
                let mut standard = Vec::new();
                for i in 0..2 * g {
                    standard.push(F2Vector::unit(2 * g, i)?);
                }
                Ok(rebuilt && s.is_symplectic_basis(&standard))
            })?)
        },
    );
    r.add(
        "f2.pairing.bilinear",
        "theta/weil-pairing",
        "the pairing is bilinear, symmetric and alternating on all triples, g = 1..min(3, max_genus) (violations)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(3) {
                let s = space(g)?;
                let vs = vectors(2 * g)?;
                for &x in &vs {
                    bad += u64::from(s.pair(x, x)?);
                    for &y in &vs {
                        bad += u64::from(s.pair(x, y)? != s.pair(y, x)?);
                        for &z in &vs {
                            bad += u64::from(s.pair(x + y, z)? != (s.pair(x, z)? ^ s.pair(y, z)?));
                        }
                    }
                }
            }
            done(bad)
        },
    );
    r.add(
        "f2.polarity.exhaustive",
        "theta/polarity",
        "q(x + y) = q(x) + q(y) + <x, y> for every form and every pair x, y, g = 1..min(3, max_genus) (violations)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(3) {
                let s = space(g)?;
                let vs = vectors(2 * g)?;
                for q in forms(&s)? {
                    for &x in &vs {
                        for &y in &vs {
                            bad += u64::from(q.eval(x + y)? != (q.eval(x)? ^ q.eval(y)? ^ s.pair(x, y)?));
                        }
                    }
                }
            }
            done(bad)
        },
    );
    for g in 1..=6usize {
        let even = (1u64 << (g - 1)) * ((1u64 << g) + 1);
        let odd = (1u64 << (g - 1)) * ((1u64 << g) - 1);
        r.add(
            format!("f2.count.g{g}"),
            "theta/counts",
            format!("(even, odd) forms on F2^{}: 2^(g-1)(2^g + 1) and 2^(g-1)(2^g - 1) by enumeration", 2 * g),
            (even, odd),
            move |c| {
                at_genus(c, g, || {
                    let k = count_forms_by_arf(g)?;
                    Ok((k.even, k.odd).into())
                })
            },
        );
    }
    r.add(
        "f2.count.total",
        "theta/counts",
        "even + odd forms = 2^(2g), g = 1..min(6, max_genus) (violations)",
        0,
        |c| {
            done(violations(1..=c.max_g.min(6), |g| {
                let k = count_forms_by_arf(g)?;
                Ok(k.even + k.odd == 1u64 << (2 * g))
            })?)
        },
    );
    r.add(
        "f2.arf.zero_count",
        "theta/arf",
        "arf(q) = 0 exactly when q has 2^(2g-1) + 2^(g-1) zeros, g = 1..min(4, max_genus) (violations)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(4) {
                let even_zeros = (1u64 << (2 * g - 1)) + (1u64 << (g - 1));
                for q in forms(&space(g)?)? {
                    bad += u64::from((q.zero_count()? == even_zeros) == q.arf());
                }
            }
            done(bad)
        },
    );
    r.add(
        "f2.arf.basis_independence",
        "theta/arf",
        "the Arf invariant is the same in 100 seeded random symplectic bases, every form, g = 1..min(5, max_genus) (violations)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(5) {
                let s = space(g)?;
                let all = forms(&s)?;
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + g as u64);
                for _ in 0..100 {
                    let basis = random_symplectic_basis(&s, &mut rng)?;
                    for q in &all {
                        bad += u64::from(q.arf_in_basis(&basis)? != q.arf());
                    }
                }
            }
            done(bad)
        },
    );
    r.add(
        "f2.torsor.translate_arf",
        "theta/torsor",
        "arf(q + <., v>) = arf(q) + q(v) for every form and every v, g = 1..min(3, max_genus) (violations)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(3) {
                let s = space(g)?;
                for q in forms(&s)? {
                    for v in vectors(2 * g)? {
                        bad += u64::from(q.translate(v)?.arf() != (q.arf() ^ q.eval(v)?));
                    }
                }
            }
            done(bad)
        },
    );
    r.add(
        "f2.torsor.simply_transitive",
        "theta/torsor",
        "translation by F2^{2g} is free and transitive on forms, g = 1..min(3, max_genus) (violating forms)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(3) {
                let s = space(g)?;
                let all = forms(&s)?;
                for q in &all {
                    let mut orbit = Vec::new();
                    for v in vectors(2 * g)? {
                        orbit.push(q.translate(v)?.basis_values().bits());
                    }
                    orbit.sort_unstable();
                    orbit.dedup();
                    bad += u64::from(orbit.len() != all.len());
                }
            }
            done(bad)
        },
    );
    for g in 2..=6usize {
        let solutions = (1u64 << (g - 1)) * ((1u64 << (g - 1)) - 1);
        let nulls = (1u64 << (g - 2)) * ((1u64 << (g - 1)) - 1);
        r.add(
            format!("f2.beauville.g{g}"),
            "theta/beauville-counts",
            format!("odd forms with q(eta) = 0 on F2^{}, eta = e_1: 2^(g-1)(2^(g-1) - 1)", 2 * g),
            solutions,
            move |c| at_genus(c, g, || Ok(count_special_theta(g, F2Vector::unit(2 * g, 0)?)?.solutions.into())),
        );
        r.add(
            format!("f2.thetanull.g{g}"),
            "theta/beauville-counts",
            format!("pairs {{q, q + <., eta>}} of such forms on F2^{}: 2^(g-2)(2^(g-1) - 1)", 2 * g),
            nulls,
            move |c| {
                at_genus(c, g, || {
                    Ok(count_special_theta(g, F2Vector::unit(2 * g, 0)?)?.vanishing_thetanulls.into())
                })
            },
        );
    }
    r.add(
        "f2.beauville.eta_independent",
        "theta/beauville-counts",
        "both Beauville counts are the same for every nonzero eta, g = 2..min(4, max_genus) (violating eta)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 2..=c.max_g.min(4) {
                let s = space(g)?;
                let reference = count_special_theta_in(&s, F2Vector::unit(2 * g, 0)?)?;
                for eta in vectors(2 * g)?.into_iter().filter(|v| !v.is_zero()) {
                    bad += u64::from(count_special_theta_in(&s, eta)? != reference);
                }
            }
            done(bad)
        },
    );
    r.add(
        "f2.beauville.arf_additive",
        "theta/beauville-splitting",
        "for <eta, eps> = 1: V = Sigma + Sigma-perp, arf(q) = arf(q|Sigma) + arf(q|Sigma-perp) and arf(q|Sigma) = q(eta)q(eps), g = 1..min(3, max_genus) (violations)",
        0,
        |c| {
            let mut bad = 0u64;
            for g in 1..=c.max_g.min(3) {
                let s = space(g)?;
                let vs = vectors(2 * g)?;
                let all = forms(&s)?;
                for &eta in &vs {
                    for &eps in &vs {
                        if !s.pair(eta, eps)? {
                            continue;
                        }
                        for q in &all {
                            let d = decompose_and_restrict(q, eta, eps)?;
                            let ok = d.sigma_perp.dim() == 2 * g - 2
                                && q.arf() == (d.q_sigma.arf() ^ d.q_perp.arf())
                                && d.q_sigma.arf() == (q.eval(eta)? & q.eval(eps)?);
                            bad += u64::from(!ok);
                        }
                    }
                }
            }
            done(bad)
        },
    );
}

fn bn_claims(r: &mut Registry) {
    r.add("bn.rho.r0", "brill-noether/rho", "rho(g, 0, d) = d for g = 1..50, d = 0..100 (violations)", 0, |_| {
        done(violations((1..=50u32).flat_map(|g| (0..=100u32).map(move |d| (g, d))), |(g, d)| {
            Ok(rho(BnInput { g, r: 0, d }) == i128::from(d))
        })?)
    });
    r.add("bn.rho.g7r1d6", "brill-noether/rho", "rho(7, 1, 6)", 3, |_| done(rho(BnInput { g: 7, r: 1, d: 6 })));
    r.add(
        "bn.prym.tilde_identity",
        "prym/rho-plus",
        "rho(2g-1, r, 2g-2) = 2g - 1 - (r + 1)^2 on 2 <= g <= 500, 0 <= r <= 50 (violations)",
        0,
        |_| {
            done(violations(grid(), |(g, r)| {
                let (gi, ri) = (i128::from(g), i128::from(r));
                Ok(prym_numbers(g, r).rho_tilde == 2 * gi - 1 - (ri + 1) * (ri + 1)
                    && rho_on_cover(g, r, 2 * g - 2) == prym_numbers(g, r).rho_tilde)
            })?)
        },
    );
    r.add(
        "bn.prym.decomposition",
        "prym/rho-plus",
        "rho-tilde = rho-plus + rho-minus on 2 <= g <= 500, 0 <= r <= 50 (violations)",
        0,
        |_| {
            done(violations(grid(), |(g, r)| {
                let p = prym_numbers(g, r);
                Ok(p.rho_plus + p.rho_minus == p.rho_tilde)
            })?)
        },
    );
    r.add(
        "bn.prym.conditions_equivalent",
        "prym/rho-plus",
        "rho-minus > max(-1, rho-tilde) holds exactly when -r <= rho-tilde < r, on 2 <= g <= 500, 0 <= r <= 50 (violations)",
        0,
        |_| {
            done(violations(grid(), |(g, r)| {
                let p = prym_numbers(g, r);
                Ok(p.cond_prym_bound == p.cond_rho_window)
            })?)
        },
    );
    r.add(
        "bn.prym.g7r3",
        "prym/rho-plus",
        "(rho-minus, rho-tilde, rho-plus, window condition) at g = 7, r = 3",
        (0, -3, -3, true),
        |_| {
            let p = prym_numbers(7, 3);
            done((p.rho_minus, p.rho_tilde, p.rho_plus, p.cond_rho_window))
        },
    );
    r.add("bn.prym.g11r5", "prym/rho-minus", "rho-minus(11, 5)", -5, |_| done(prym_numbers(11, 5).rho_minus));
    r.add(
        "bn.prym.r0",
        "prym/rho-minus",
        "rho-minus(g, 0) = rho-plus(g, 0) = g - 1 for g = 2..500 (violations)",
        0,
        |_| {
            done(violations(2..=500u32, |g| {
                let p = prym_numbers(g, 0);
                Ok(p.rho_minus == i128::from(g) - 1 && p.rho_plus == p.rho_minus)
            })?)
        },
    );
    r.add(
        "bn.bertram.g7r3",
        "prym/rho-minus",
        "non-emptiness predicate rho-minus >= 0 at (g, r) = (7, 3) and (6, 3)",
        (true, false),
        |_| done((bertram_nonempty(7, 3), bertram_nonempty(6, 3))),
    );
    r.add(
        "bn.schwarz.g3r1",
        "covers/schwarz",
        "emptiness predicate rho(2g-1, r, d) < -r at g = 3, r = 1, d = 2 and d = 3",
        (true, false),
        |_| done((schwarz_forced_empty(3, 1, 2), schwarz_forced_empty(3, 1, 3))),
    );
    r.add("bn.gonality.g5", "covers/gonality", "(gonality, Clifford index) of a general cover, g = 5", (6, 4), |_| {
        let x = expected_gonality(5)?;
        done((x.gonality, x.clifford_index))
    });
    r.add("bn.gonality.g6", "covers/gonality", "(gonality, Clifford index) of a general cover, g = 6", (6, 4), |_| {
        let x = expected_gonality(6)?;
        done((x.gonality, x.clifford_index))
    });
    r.add(
        "bn.gonality.schwarz_consistent",
        "covers/gonality",
        "a pencil of the expected gonality degree is never excluded by the emptiness predicate, g = 2..50 (violations)",
        0,
        |_| {
            done(violations(2..=50u32, |g| Ok(!schwarz_forced_empty(g, 1, expected_gonality(g)?.gonality)))?)
        },
    );
    r.add(
        "bn.pencil.even_genus",
        "covers/even-pencil",
        "rho(2g-1, 1, g) = -1 and the pencil is not excluded, g = 2..500 (violations)",
        0,
        |_| done(violations(2..=500u32, |g| Ok(rho_on_cover(g, 1, g) == -1 && !schwarz_forced_empty(g, 1, g)))?),
    );
    r.add("bn.pencil.g6", "covers/even-pencil", "rho(11, 1, 6)", -1, |_| done(rho_on_cover(6, 1, 6)));
    r.add("bn.hurwitz.etale", "prym/rho-plus", "an etale double cover of a genus-g curve has genus 2g - 1, g = 1..500 (violations)", 0, |_| {
        done(violations(1..=500i64, |g| Ok(hurwitz_cover_genus(g, 0)? == 2 * g - 1))?)
    });
    r.add(
        "bn.hurwitz.ramified",
        "covers/ramified",
        "cover genus 2g - 1 + b/2 at (g, b) = (4, 0), (2, 2), (1, 6)",
        (7, 4, 4),
        |_| done((hurwitz_cover_genus(4, 0)?, hurwitz_cover_genus(2, 2)?, hurwitz_cover_genus(1, 6)?)),
    );
    r.add(
        "bn.spin.divisor",
        "theta/spin-dimension",
        "3g - 3 - C(r+1, 2) equals 3g - 3 at r = 0 and 3g - 4 at r = 1, g = 2..500 (violations)",
        0,
        |_| {
            done(violations(2..=500u32, |g| {
                let g3 = 3 * i128::from(g);
                Ok(spin_locus_expected_dim(g, 0) == g3 - 3 && spin_locus_expected_dim(g, 1) == g3 - 4)
            })?)
        },
    );
    r.add("bn.spin.g3r2", "theta/spin-dimension", "expected spin locus dimension at g = 3, r = 2", 3, |_| {
        done(spin_locus_expected_dim(3, 2))
    });
    for (h, expected) in [(6u32, (3i64, -1i64, true)), (7, (3, 0, false)), (12, (6, -10, true))] {
        r.add(
            format!("bn.welters.h{h}"),
            "nikulin/welters-failure",
            format!("(r, rho-minus(h, r), fails) for the standard Nikulin cover, h = {h}"),
            expected,
            move |c| {
                at_h(c, h, || {
                    let x = standard_nikulin_numerics(h)?;
                    Ok((x.r, x.rho_minus, x.fails_welters).into())
                })
            },
        );
    }
    r.add(
        "bn.welters.closed_forms",
        "nikulin/welters-failure",
        "rho-minus(h, floor(h/2)) equals -(h-1)(h-7)/8 (h odd) and -(h-2)(h-4)/8 (h even), with 8 | numerator, h = 2..10000 (violations)",
        0,
        |_| {
            done(violations(2..=10_000u32, |h| {
                let x = standard_nikulin_numerics_unchecked(h)?;
                let hi = i128::from(h);
                let num = if h % 2 == 1 { (hi - 1) * (hi - 7) } else { (hi - 2) * (hi - 4) };
                Ok(num % 8 == 0 && x.rho_minus == -num / 8 && x.r == h / 2)
            })?)
        },
    );
    r.add(
        "bn.welters.failure_region",
        "nikulin/welters-failure",
        "h in 2..12 where rho-minus(h, floor(h/2)) < 0",
        vec![6u32, 8, 9, 10, 11, 12],
        |c| {
            at_h(c, 12, || {
                let mut out = Vec::new();
                for h in 2..=12u32 {
                    if standard_nikulin_numerics(h)?.fails_welters {
                        out.push(h);
                    }
                }
                Ok(out.into())
            })
        },
    );
    r.add(
        "bn.welters.boundary",
        "nikulin/general-range",
        "rho-minus < 0 exactly outside the range h <= 7, h != 6, h = 2..max_h (violations)",
        0,
        |c| {
            done(violations(2..=c.max_h, |h| {
                let x = standard_nikulin_numerics_unchecked(h)?;
                Ok(x.fails_welters == !on_nikulin_general(h) && x.on_nikulin_general == (h <= 7 && h != 6))
            })?)
        },
    );
    r.add(
        "bn.welters.r_lattice",
        "nikulin/welters-failure",
        "r = floor(h/2) agrees with chi(A) - 1 on the lattice side, h = 2..min(200, max_h) (violations)",
        0,
        |c| {
            done(violations(2..=c.max_h.min(200), |h| {
                Ok(i64::from(standard_nikulin_numerics(h)?.r) == pic_tilde_class(i64::from(h))?.r)
            })?)
        },
    );
    let covers: [(u32, Vec<(i64, i64, i64)>); 3] = [
        (7, vec![(2, 2, 4), (1, 6, 4)]),
        (9, vec![(2, 4, 5), (2, 4, 5)]),
        (11, vec![(3, 2, 6), (2, 6, 6)]),
    ];
    for (h, expected) in covers {
        r.add(
            format!("bn.covers.h{h}"),
            "nikulin/ramified-covers",
            format!("(base genus, branch points, cover genus) of curves in |R1|, |R2|, h = {h}"),
            expected,
            move |c| {
                at_h(c, h, || {
                    let list: Vec<Value> = cover_numerics_nonstandard(h)?
                        .into_iter()
                        .map(|x| (x.base_genus, x.branch_count, x.cover_genus).into())
                        .collect();
                    Ok(Value::List(list))
                })
            },
        );
    }
    r.add(
        "bn.covers.hurwitz",
        "nikulin/cover-genus",
        "every non-standard cover has 2g - 1 + b/2 = (h + 1)/2, odd h = 3..max_h (violations)",
        0,
        |c| {
            done(violations((3..=c.max_h).step_by(2), |h| {
                let list = cover_numerics_nonstandard(h)?;
                Ok(!list.is_empty()
                    && list.iter().all(|x| {
                        x.cover_genus == i64::from(h + 1) / 2
                            && 2 * x.base_genus - 1 + x.branch_count / 2 == x.cover_genus
                    }))
            })?)
        },
    );
    r.add(
        "bn.covers.realized",
        "nikulin/ramified-covers",
        "every (g, n) with 2 <= g <= (max_h - 3)/4 and n = 1, 2, 3 is a (base genus, branch/2) of some odd h <= max_h (unrealized pairs)",
        0,
        |c| {
            let top = (i64::from(c.max_h) - 3) / 4;
            if top < 2 {
                return Ok(Outcome::Skipped(format!("max h {} leaves no genus >= 2", c.max_h)));
            }
            let mut seen = std::collections::BTreeSet::new();
            for h in (3..=c.max_h).step_by(2) {
                for x in cover_numerics_nonstandard(h)? {
                    seen.insert((x.base_genus, x.branch_count / 2));
                }
            }
            done(violations((2..=top).flat_map(|g| (1..=3).map(move |n| (g, n))), |p| Ok(seen.contains(&p)))?)
        },
    );
    r.add(
        "bn.question.odd_genera",
        "prym/rho-plus",
        "odd g <= 99 with no r >= 1 such that -r <= rho(2g-1, r, 2g-2) < 0",
        vec![
            1u32, 3, 5, 9, 13, 15, 19, 21, 25, 27, 33, 35, 41, 43, 45, 51, 53, 55, 61, 63, 65, 73, 75, 77, 85, 87, 89, 91, 99,
        ],
        |_| done(odd_genera_without_negative_window(99)),
    )
    .note = Some("informational: the question behind this sweep is open; expected list frozen from an independent brute force");
}

fn grid() -> impl Iterator<Item = (u32, u32)> {
    (2..=500u32).flat_map(|g| (0..=50u32).map(move |r| (g, r)))
}

fn lambda_class_norm(l: &IntegerLattice, class: &RationalClass) -> CoreResult<Value> {
    Ok(rat_i64(l.norm(class)?))
}

fn lattice_claims(r: &mut Registry) {
    r.add(
        "lattice.nikulin.nodes",
        "nikulin/surface",
        "(nodes N1..N8 of norm -2, nonzero pairings among them, N1 + ... + N8 = 2M) in the Nikulin lattice",
        (8, 0, true),
        |_| {
            let n = nikulin_lattice()?;
            let mut nodes = Vec::new();
            for i in 0..7 {
                nodes.push(n.basis_class(&format!("N{}", i + 1))?);
            }
            let mut n8 = vec![-1i64; 7];
            n8.push(2);
            nodes.push(RationalClass::integral(n8));
            let mut minus2 = 0;
            let mut nonzero = 0;
            for (i, a) in nodes.iter().enumerate() {
                minus2 += i64::from(n.norm(a)? == Rational::from_integer(-2));
                for b in &nodes[i + 1..] {
                    nonzero += i64::from(n.inner(a, b)? != Rational::from_integer(0));
                }
            }
            let mut sum = vec![0i64; 8];
            for a in &nodes {
                for (s, x) in sum.iter_mut().zip(a.numerators()) {
                    *s += x;
                }
            }
            done((minus2, nonzero, sum == [0, 0, 0, 0, 0, 0, 0, 2]))
        },
    );
    r.add("lattice.nikulin.disc", "nikulin/lattice", "|discriminant group| of the Nikulin lattice", 64, |_| {
        done(nikulin_lattice()?.discriminant_group()?.group_order)
    });
    r.add(
        "lattice.nikulin.divisors",
        "nikulin/lattice",
        "Smith divisors of the Nikulin Gram matrix",
        vec![1i64, 1, 2, 2, 2, 2, 2, 2],
        |_| done(nikulin_lattice()?.discriminant_group()?.elementary_divisors),
    );
    r.add(
        "lattice.nikulin.even_negative",
        "nikulin/lattice",
        "(even, negative definite) for the Nikulin lattice",
        (true, true),
        |_| {
            let n = nikulin_lattice()?;
            done((n.is_even(), n.definiteness()? == Definiteness::Negative))
        },
    );
    r.add("lattice.lambda.disc.h5", "nikulin/lattice", "|disc(Lambda_h)| at h = 5", 512, |c| {
        at_h(c, 5, || Ok(lambda_h(5)?.discriminant_group()?.group_order.into()))
    });
    r.add(
        "lattice.lambda.disc",
        "nikulin/lattice",
        "|disc(Lambda_h)| = 128(h - 1), h = 2..min(20, max_h) (violations)",
        0,
        |c| {
            done(violations(2..=i64::from(c.max_h.min(20)), |h| {
                Ok(lambda_h(h)?.discriminant_group()?.group_order == 128 * (h as u128 - 1))
            })?)
        },
    );
    r.add(
        "lattice.lambda.even",
        "nikulin/lattice",
        "Lambda_h is even with H.M = 0 and H^2 = 2h - 2, h = 2..max_h (violations)",
        0,
        |c| {
            done(violations(2..=i64::from(c.max_h), |h| {
                let l = lambda_h(h)?;
                let hc = l.basis_class("H")?;
                Ok(l.is_even()
                    && l.inner(&hc, &l.basis_class("M")?)? == Rational::from_integer(0)
                    && l.norm(&hc)? == Rational::from_integer(i128::from(2 * h - 2)))
            })?)
        },
    );
    r.add(
        "lattice.glue.two_node",
        "nikulin/nonstandard-glue",
        "(H - N1 - N2)/2 glues to Lambda_h exactly when h = 3 mod 4, h = 2..max_h (violations)",
        0,
        |c| {
            let two = half_class([1, 1, 0, 0, 0, 0, 0, 0])?;
            done(violations(2..=i64::from(c.max_h), |h| Ok(lambda_h(h)?.glue_check(&two)? == (h % 4 == 3)))?)
        },
    );
    r.add(
        "lattice.glue.four_node",
        "nikulin/nonstandard-glue",
        "(H - N1 - N2 - N3 - N4)/2 glues to Lambda_h exactly when h = 1 mod 4, h = 2..max_h (violations)",
        0,
        |c| {
            let four = half_class([1, 1, 1, 1, 0, 0, 0, 0])?;
            done(violations(2..=i64::from(c.max_h), |h| Ok(lambda_h(h)?.glue_check(&four)? == (h % 4 == 1)))?)
        },
    );
    for (h, expected) in [(7u32, (true, false)), (8, (false, false)), (9, (false, true))] {
        r.add(
            format!("lattice.glue.h{h}"),
            "nikulin/nonstandard-glue",
            format!("(two-node class glues, four-node class glues) at h = {h}"),
            expected,
            move |c| {
                at_h(c, h, || {
                    let l = lambda_h(i64::from(h))?;
                    let two = l.glue_check(&half_class([1, 1, 0, 0, 0, 0, 0, 0])?)?;
                    let four = l.glue_check(&half_class([1, 1, 1, 1, 0, 0, 0, 0])?)?;
                    Ok((two, four).into())
                })
            },
        );
    }
    r.add(
        "lattice.nonstandard.even_rejected",
        "nikulin/nonstandard-glue",
        "even h never admits non-standard glue data (error raised), h = 2..max_h (violations)",
        0,
        |c| {
            done(violations((2..=i64::from(c.max_h)).step_by(2), |h| {
                Ok(matches!(nonstandard_classes(h), Err(CoreError::NonStandardForcesOdd(x)) if x == h))
            })?)
        },
    );
    r.add("lattice.genus.h7", "nikulin/nonstandard-glue", "(g(R1), g(R2)) at h = 7", (2, 1), |c| {
        at_h(c, 7, || {
            let x = nonstandard_classes(7)?;
            Ok((x.r1.genus, x.r2.genus).into())
        })
    });
    r.add("lattice.genus.h9", "nikulin/nonstandard-glue", "(g(R1), g(R2)) at h = 9", (2, 2), |c| {
        at_h(c, 9, || {
            let x = nonstandard_classes(9)?;
            Ok((x.r1.genus, x.r2.genus).into())
        })
    });
    r.add(
        "lattice.genus.formulas",
        "nikulin/nonstandard-glue",
        "g(R1), g(R2) are (h+1)/4, (h-3)/4 for h = 3 mod 4 and both (h-1)/4 for h = 1 mod 4, odd h = 3..max_h (violations)",
        0,
        |c| {
            done(violations((3..=i64::from(c.max_h)).step_by(2), |h| {
                let x = nonstandard_classes(h)?;
                Ok(match x.case {
                    NonStandardCase::ThreeMod4 => (x.r1.genus, x.r2.genus) == ((h + 1) / 4, (h - 3) / 4),
                    NonStandardCase::OneMod4 => (x.r1.genus, x.r2.genus) == ((h - 1) / 4, (h - 1) / 4),
                })
            })?)
        },
    );
    r.add(
        "lattice.branch.h3mod4",
        "nikulin/branch-relations",
        "(R1.(N1 + ... + N8), R2.(N1 + ... + N8)) at h = 7: branch points of the induced double covers",
        (2, 6),
        |c| {
            at_h(c, 7, || {
                let x = nonstandard_classes(7)?;
                Ok((x.r1.branch, x.r2.branch).into())
            })
        },
    );
    r.add(
        "lattice.branch.h1mod4",
        "nikulin/branch-relations",
        "(R1.(N1 + ... + N8), R2.(N1 + ... + N8)) at h = 9",
        (4, 4),
        |c| {
            at_h(c, 9, || {
                let x = nonstandard_classes(9)?;
                Ok((x.r1.branch, x.r2.branch).into())
            })
        },
    );
    r.add(
        "lattice.rawRM.h3mod4",
        "nikulin/branch-relations",
        "(R1.M, R2.M) at h = 7 with M = (N1 + ... + N8)/2",
        (1, 3),
        |c| {
            at_h(c, 7, || {
                let x = nonstandard_classes(7)?;
                Ok((rat_i64(x.r1.m_product), rat_i64(x.r2.m_product)).into())
            })
        },
    )
    .note = Some(
        "raw products with M itself; reading M as the branch divisor N1 + ... + N8 gives 2 and 6, reported as lattice.branch.h3mod4",
    );
    r.add("lattice.rawRM.h1mod4", "nikulin/branch-relations", "(R1.M, R2.M) at h = 9", (2, 2), |c| {
        at_h(c, 9, || {
            let x = nonstandard_classes(9)?;
            Ok((rat_i64(x.r1.m_product), rat_i64(x.r2.m_product)).into())
        })
    })
    .note = Some("raw products with M itself; the branch divisor gives 4 and 4, see lattice.branch.h1mod4");
    r.add(
        "lattice.branch.sweep",
        "nikulin/branch-relations",
        "branch counts equal the node counts of the glue classes (2, 6 or 4, 4) and R.(2M), odd h = 3..max_h (violations)",
        0,
        |c| {
            done(violations((3..=i64::from(c.max_h)).step_by(2), |h| {
                let x = nonstandard_classes(h)?;
                let expected = match x.case {
                    NonStandardCase::ThreeMod4 => (2, 6),
                    NonStandardCase::OneMod4 => (4, 4),
                };
                let two = Rational::from_integer(2);
                Ok((x.r1.branch, x.r2.branch) == expected
                    && x.r1.m_product * two == Rational::from_integer(x.r1.branch.into())
                    && x.r2.m_product * two == Rational::from_integer(x.r2.branch.into()))
            })?)
        },
    );
    r.add(
        "lattice.overlattice.h7",
        "nikulin/nonstandard-glue",
        "|disc| of Lambda_7 extended by R1",
        192,
        |c| {
            at_h(c, 7, || {
                let x = nonstandard_classes(7)?;
                Ok(lambda_h(7)?.overlattice(&x.r1.class, "R1")?.discriminant_group()?.group_order.into())
            })
        },
    );
    r.add(
        "lattice.overlattice.sweep",
        "nikulin/nonstandard-glue",
        "extending Lambda_h by R1 gives an even lattice with discriminant 128(h-1)/4, odd h = 3..max_h (violations)",
        0,
        |c| {
            done(violations((3..=i64::from(c.max_h)).step_by(2), |h| {
                let x = nonstandard_classes(h)?;
                let glued = lambda_h(h)?.overlattice(&x.r1.class, "R1")?;
                Ok(glued.is_even() && glued.discriminant_group()?.group_order * 4 == 128 * (h as u128 - 1))
            })?)
        },
    );
    r.add("lattice.e8m2.disc", "nikulin/standard-cover-pic", "|disc(E8(-2))|", 256, |_| {
        done(e8_minus2()?.discriminant_group()?.group_order)
    });
    r.add(
        "lattice.e8m2.even_negative",
        "nikulin/standard-cover-pic",
        "(even, negative definite) for E8(-2)",
        (true, true),
        |_| {
            let e = e8_minus2()?;
            done((e.is_even(), e.definiteness()? == Definiteness::Negative))
        },
    );
    r.add("lattice.e8m2.roots", "nikulin/standard-cover-pic", "vectors of norm -4 in E8(-2)", 240, |_| {
        done(short_vectors(&e8_minus2()?, -4, false)?.count)
    });
    r.add("lattice.e8m2.norm8", "nikulin/standard-cover-pic", "vectors of norm -8 in E8(-2)", 2160, |_| {
        done(short_vectors(&e8_minus2()?, -8, false)?.count)
    });
    r.add("lattice.e8m2.norm2", "nikulin/standard-cover-pic", "vectors of norm -2 in E8(-2)", 0, |_| {
        done(short_vectors(&e8_minus2()?, -2, false)?.count)
    });
    for (h, expected) in [(6u32, (-4i64, 4i64, 4i64, 3i64)), (7, (-8, 4, 4, 3))] {
        r.add(
            format!("lattice.pictilde.h{h}"),
            "nikulin/standard-cover-pic",
            format!("(v^2, A^2, chi(A), r) for A = (H~ + v)/2 at h = {h}"),
            expected,
            move |c| {
                at_h(c, h, || {
                    let p = pic_tilde_class(i64::from(h))?;
                    Ok((p.required_v_norm, p.a_norm, p.chi, p.r).into())
                })
            },
        );
    }
    r.add(
        "lattice.pictilde.disc.h7",
        "nikulin/standard-cover-pic",
        "|disc| of Z H~ + E8(-2) extended by (H~ + v)/2 at h = 7",
        1536,
        |c| at_h(c, 7, || Ok(pic_tilde_class(7)?.disc_order.into())),
    );
    r.add(
        "lattice.pictilde.parity",
        "nikulin/standard-cover-pic",
        "(H~ + v)/2 glues, A^2 = (4h - 4 + v^2)/4 is even and |disc| = 256(h - 1), h = 2..min(200, max_h) (violations)",
        0,
        |c| {
            done(violations(2..=i64::from(c.max_h.min(200)), |h| {
                let p = pic_tilde_class(h)?;
                Ok(p.a_norm % 2 == 0 && p.disc_order == 256 * (h as u128 - 1))
            })?)
        },
    );
    r.add(
        "lattice.nonstandard_pic.h7",
        "nikulin/nonstandard-cover-pic",
        "(genus of R~, |disc|) for Z R~ + E8(-2) with g(R~) the cover genus, h = 7",
        (4, 1536),
        |c| at_h(c, 7, || nonstandard_pic(7).map(|(g, d)| (g, d).into())),
    );
    r.add(
        "lattice.nonstandard_pic.sweep",
        "nikulin/nonstandard-cover-pic",
        "both glue curves give the same cover genus (h + 1)/2, matching g(R~) in Z R~ + E8(-2), odd h = 3..max_h (violations)",
        0,
        |c| {
            done(violations((3..=c.max_h).step_by(2), |h| {
                let (g, disc) = nonstandard_pic(h)?;
                let covers = cover_numerics_nonstandard(h)?;
                Ok(covers.iter().all(|x| x.cover_genus == g) && disc == 256 * (u128::from(h) - 1))
            })?)
        },
    );
    r.add(
        "lattice.class.h7",
        "nikulin/nonstandard-glue",
        "(R1^2, R2^2) at h = 7",
        (2, 0),
        |c| {
            at_h(c, 7, || {
                let l = lambda_h(7)?;
                let x = nonstandard_classes(7)?;
                Ok((lambda_class_norm(&l, &x.r1.class)?, lambda_class_norm(&l, &x.r2.class)?).into())
            })
        },
    );
}

/// Genus of `R~` and `|disc|` of `Z R~ (+) E8(-2)`, where `R~` carries the
/// cover genus `(h + 1)/2` of the first glue curve.
fn nonstandard_pic(h: u32) -> CoreResult<(i64, u128)> {
    let cover = cover_numerics_nonstandard(h)?
        .first()
        .map(|x| x.cover_genus)
        .ok_or_else(|| CoreError::Internal(format!("no effective glue class at h = {h}")))?;
    let rt = IntegerLattice::from_gram(&[vec![2 * cover - 2]], &["Rt"])?;
    let l = rt.direct_sum(&e8_minus2()?);
    let genus = l.genus_and_euler(&l.basis_class("Rt")?)?.genus;
    Ok((genus, l.discriminant_group()?.group_order))
}

/// The full catalogue, sorted by id.
pub fn builtin_claims() -> Vec<Claim> {
    let mut r = Registry(Vec::new());
    f2_claims(&mut r);
    bn_claims(&mut r);
    lattice_claims(&mut r);
    let mut claims = r.0;
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

/// Runs the built-in catalogue.
pub fn run_claims(config: &Config) -> Result<ClaimReport, CheckError> {
    run_claim_set(builtin_claims(), config)
}

/// Runs `claims` under `config`; the report is ordered by id.
pub fn run_claim_set(mut claims: Vec<Claim>, config: &Config) -> Result<ClaimReport, CheckError> {
    config.validate()?;
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(p) = &config.filter_prefix {
        claims.retain(|c| c.id.starts_with(p.as_str()));
        if claims.is_empty() {
            return Err(CheckError::Usage(format!("filter {p:?} matches no claim")));
        }
    }
    let mut results = Vec::with_capacity(claims.len());
    let mut stopped = false;
    for claim in &claims {
        let expected = claim.expected.to_string();
        let mut result = ClaimResult {
            id: claim.id.clone(),
            description: claim.description.clone(),
            paper_location: claim.paper_location.to_string(),
            computed: String::new(),
            expected,
            status: Status::Skipped,
            runtime_ms: 0,
            note: claim.note.map(str::to_string),
        };
        if stopped {
            result.note = Some("not run: an earlier claim failed under --fail-fast".into());
            results.push(result);
            continue;
        }
        let start = Instant::now();
        let outcome = claim.evaluate(config);
        result.runtime_ms = start.elapsed().as_millis();
        match outcome {
            Ok(Outcome::Computed(v)) => {
                result.computed = v.to_string();
                result.status = if result.computed == result.expected { Status::Pass } else { Status::Fail };
            }
            Ok(Outcome::Skipped(why)) => {
                result.note = Some(match result.note {
                    Some(n) => format!("{why}; {n}"),
                    None => why,
                });
            }
            Err(e) => {
                result.computed = format!("error: {e}");
                result.status = Status::Fail;
            }
        }
        stopped = config.fail_fast && result.status == Status::Fail;
        results.push(result);
    }
    Ok(ClaimReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        claims: results,
    })
}

/// Replaces the expected value of claim `id`; unknown ids are a usage error.
pub fn override_expected(claims: &mut [Claim], id: &str, value: &str) -> Result<(), CheckError> {
    let claim = claims
        .iter_mut()
        .find(|c| c.id == id)
        .ok_or_else(|| CheckError::Usage(format!("no claim with id {id:?}")))?;
    claim.expected = Value::Text(value.to_string());
    Ok(())
}
