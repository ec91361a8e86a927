//! The concrete lattices attached to a Nikulin surface of genus `h`:
//! the Nikulin lattice `N`, `Lambda_h = Z H (+) N`, `E8(-2)`, the non-standard
//! glue classes and the index-two class `(H~ + v) / 2` on the K3 cover.

use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use super::gram::{exact_div, to_i64, IntegerLattice, Rational, RationalClass};
use super::matrix::{add, mul, sub};
use super::short::find_vector_of_norm;
use crate::error::{invalid, Error, Result};

/// Labels of `N` in the basis `(N1..N7, M)`.
pub const NIKULIN_LABELS: [&str; 8] = ["N1", "N2", "N3", "N4", "N5", "N6", "N7", "M"];

/// Labels of `Lambda_h` in the basis `(H, N1..N7, M)`.
pub const LAMBDA_LABELS: [&str; 9] = ["H", "N1", "N2", "N3", "N4", "N5", "N6", "N7", "M"];

const E8_EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)];

/// Gram matrix of `N` in the basis `(N1..N7, M)` with `M = (N1 + ... + N8) / 2`:
/// `Ni^2 = -2`, `Ni . Nj = 0`, `Ni . M = -1`, `M^2 = -4`.
fn nikulin_gram() -> Vec<Vec<i64>> {
    (0..8)
        .map(|i| {
            (0..8)
                .map(|j| match (i, j) {
                    (7, 7) => -4,
                    (7, _) | (_, 7) => -1,
                    _ if i == j => -2,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Coordinates in `(N1..N7, M)` of `sum a_i N_i` for `i = 1..8`, using
/// `N8 = 2M - N1 - ... - N7`.
fn node_coordinates(nodes: &[i64; 8]) -> Result<[i64; 8]> {
    let mut out = [0i64; 8];
    for i in 0..7 {
        out[i] = sub(nodes[i], nodes[7])?;
    }
    out[7] = mul(2, nodes[7])?;
    Ok(out)
}

/// The Nikulin lattice, with a construction-time check that the derived class
/// `N8 = 2M - (N1 + ... + N7)` is a `(-2)`-class orthogonal to `N1..N7`.
pub fn nikulin_lattice() -> Result<IntegerLattice> {
    let n = IntegerLattice::from_gram(&nikulin_gram(), &NIKULIN_LABELS)?;
    let mut n8 = [0i64; 8];
    n8[7] = 1;
    let n8 = RationalClass::integral(node_coordinates(&n8)?.to_vec());
    if n.norm(&n8)? != Rational::from_integer(-2) {
        return Err(Error::Internal("N8 is not a (-2)-class".into()));
    }
    for j in 0..7 {
        let mut e = alloc::vec![0; 8];
        e[j] = 1;
        if n.inner(&n8, &RationalClass::integral(e))? != Rational::from_integer(0) {
            return Err(Error::Internal("N8 meets another node".into()));
        }
    }
    Ok(n)
}

/// `Lambda_h = Z H (+) N` with `H^2 = 2(h - 1)`.
pub fn lambda_h(h: i64) -> Result<IntegerLattice> {
    if h < 2 {
        return Err(invalid("Lambda_h needs h >= 2"));
    }
    let h2 = mul(2, sub(h, 1)?)?;
    let polarization = IntegerLattice::from_gram(&[alloc::vec![h2]], &["H"])?;
    Ok(polarization.direct_sum(&nikulin_lattice()?))
}

/// `(aH + sum_{i=1..8} a_i N_i + b M) / den` in the basis of `Lambda_h`.
pub fn lambda_class(h_coeff: i64, nodes: [i64; 8], m_coeff: i64, den: i64) -> Result<RationalClass> {
    let mut coords = Vec::with_capacity(9);
    coords.push(h_coeff);
    let nc = node_coordinates(&nodes)?;
    coords.extend_from_slice(&nc[..7]);
    coords.push(add(nc[7], m_coeff)?);
    RationalClass::new(coords, den)
}

/// The Cartan matrix of `E8` (Bourbaki numbering).
pub fn e8_cartan() -> Vec<Vec<i64>> {
    let mut c = alloc::vec![alloc::vec![0i64; 8]; 8];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &E8_EDGES {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

/// `E8(-2)`: the `E8` root lattice with its form scaled by `-2`.
pub fn e8_minus2() -> Result<IntegerLattice> {
    let gram: Vec<Vec<i64>> = e8_cartan()
        .iter()
        .map(|row| row.iter().map(|&x| -2 * x).collect())
        .collect();
    IntegerLattice::from_gram(&gram, &["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"])
}

/// Residue class of an odd genus `h` modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonStandardCase {
    ThreeMod4,
    OneMod4,
}

impl NonStandardCase {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ThreeMod4 => "3mod4",
            Self::OneMod4 => "1mod4",
        }
    }
}

/// Numerics of one glue class `R = (H - sum N_i) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueClassData {
    pub class: RationalClass,
    pub norm: i64,
    pub genus: i64,
    /// `R . (N1 + ... + N8)`: the number of branch points of the induced
    /// double cover of a curve in `|R|`.
    pub branch: i64,
    /// `R . M` as a raw intersection number; half of `branch`.
    pub m_product: Rational,
}

impl GlueClassData {
    /// `|R|` contains a smooth curve when `R^2 >= 0`.
    pub fn is_effective(&self) -> bool {
        self.norm >= 0
    }
}

/// The two index-two glue classes of a non-standard Nikulin surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonStandardClasses {
    pub h: i64,
    pub case: NonStandardCase,
    pub r1: GlueClassData,
    pub r2: GlueClassData,
}

/// Node sets `(R1, R2)` of the two glue classes: `(H - sum_{i in R} N_i) / 2`.
pub fn glue_node_sets(case: NonStandardCase) -> ([i64; 8], [i64; 8]) {
    match case {
        NonStandardCase::ThreeMod4 => ([1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 1, 1]),
        NonStandardCase::OneMod4 => ([1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]),
    }
}

/// `(H - sum_{i in nodes} N_i) / 2` in `Lambda_h` coordinates.
pub fn half_class(nodes: [i64; 8]) -> Result<RationalClass> {
    lambda_class(1, nodes.map(|a| -a), 0, 2)
}

fn glue_data(lattice: &IntegerLattice, nodes: [i64; 8]) -> Result<GlueClassData> {
    let class = half_class(nodes)?;
    if !lattice.glue_check(&class)? {
        return Err(Error::Internal(alloc::format!("glue class {:?} does not glue", class.numerators())));
    }
    let norm = to_i64(&lattice.norm(&class)?)?;
    let genus = lattice.genus_and_euler(&class)?.genus;
    let branch_divisor = lambda_class(0, [1; 8], 0, 1)?;
    let branch = to_i64(&lattice.inner(&class, &branch_divisor)?)?;
    let m_product = lattice.inner(&class, &lattice.basis_class("M")?)?;
    Ok(GlueClassData {
        class,
        norm,
        genus,
        branch,
        m_product,
    })
}

/// Glue classes `R1, R2` of a non-standard Nikulin surface of genus `h`.
///
/// `h` must be odd (an even genus never admits an index-two overlattice);
/// both classes are certified with [`IntegerLattice::glue_check`].
pub fn nonstandard_classes(h: i64) -> Result<NonStandardClasses> {
    if h.is_even() {
        return Err(Error::NonStandardForcesOdd(h));
    }
    if h < 3 {
        return Err(invalid("non-standard Nikulin data needs h >= 3"));
    }
    let case = if h.mod_floor(&4) == 3 {
        NonStandardCase::ThreeMod4
    } else {
        NonStandardCase::OneMod4
    };
    let lattice = lambda_h(h)?;
    let (n1, n2) = glue_node_sets(case);
    Ok(NonStandardClasses {
        h,
        case,
        r1: glue_data(&lattice, n1)?,
        r2: glue_data(&lattice, n2)?,
    })
}

/// Index-two class `A = (H~ + v) / 2` in `Pic` of the K3 double cover of a
/// standard Nikulin surface of genus `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicTildeClass {
    pub h: i64,
    /// `H~^2 = 4h - 4`.
    pub h_tilde_norm: i64,
    /// `v^2`: `-4` for even `h`, `-8` for odd `h`.
    pub required_v_norm: i64,
    /// A vector of `E8(-2)` with the required norm, in the `a1..a8` basis.
    pub witness_v: Vec<i64>,
    pub a_norm: i64,
    pub chi: i64,
    /// `chi(A) - 1`.
    pub r: i64,
    /// `|disc|` of `Z H~ (+) E8(-2) + Z A`.
    pub disc_order: u128,
}

/// Builds `Z H~ (+) E8(-2)`, finds `v` by short-vector search, certifies that
/// `(H~ + v) / 2` glues, and evaluates `A^2`, `chi(A)` and `r`.
///
/// `A^2` being odd would contradict the parity rule for `v^2`; it is reported
/// as [`Error::Internal`].
pub fn pic_tilde_class(h: i64) -> Result<PicTildeClass> {
    if h < 2 {
        return Err(invalid("pic_tilde_class needs h >= 2"));
    }
    let h_tilde_norm = sub(mul(4, h)?, 4)?;
    let required_v_norm = if h.is_even() { -4 } else { -8 };
    let e8 = e8_minus2()?;
    let witness_v = find_vector_of_norm(&e8, required_v_norm)?
        .ok_or_else(|| Error::Internal(alloc::format!("E8(-2) has no vector of norm {required_v_norm}")))?;
    let ht = IntegerLattice::from_gram(&[alloc::vec![h_tilde_norm]], &["Ht"])?;
    let lattice = ht.direct_sum(&e8);
    let mut numerators = alloc::vec![1i64];
    numerators.extend_from_slice(&witness_v);
    let a = RationalClass::new(numerators, 2)?;
    if !lattice.glue_check(&a)? {
        return Err(Error::Internal("(H~ + v)/2 does not glue".into()));
    }
    let a_sq = lattice.norm(&a)?;
    let expected = exact_div(i128::from(h_tilde_norm) + i128::from(required_v_norm), 4)?;
    if a_sq != Rational::from_integer(expected) {
        return Err(Error::Internal("A^2 differs from (H~^2 + v^2) / 4".into()));
    }
    let a_norm = to_i64(&a_sq)?;
    if a_norm.is_odd() {
        return Err(Error::Internal("A^2 is odd".into()));
    }
    let chi = lattice.genus_and_euler(&a)?.chi;
    let disc_order = lattice.overlattice(&a, "A")?.discriminant_group()?.group_order;
    Ok(PicTildeClass {
        h,
        h_tilde_norm,
        required_v_norm,
        witness_v,
        a_norm,
        chi,
        r: chi - 1,
        disc_order,
    })
}

/// Human-readable form of a class in `Lambda_h`, e.g. `(H - N1 - N2)/2`.
pub fn describe_class(labels: &[String], class: &RationalClass) -> String {
    let mut s = String::new();
    for (label, &c) in labels.iter().zip(class.numerators()) {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push(' ');
            s.push_str(sign);
            s.push(' ');
        }
        if c.abs() != 1 {
            s.push_str(&alloc::format!("{}", c.abs()));
        }
        s.push_str(label);
    }
    if s.is_empty() {
        s.push('0');
    }
    if class.denominator() == 1 {
        s
    } else {
        alloc::format!("({s})/{}", class.denominator())
    }
}
