use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Zero};

use super::matrix::{smith_normal_form, IntMatrix};
use crate::error::{invalid, Error, Result};

/// Exact rational numbers used for intersection products of half-integral classes.
pub type Rational = Ratio<i128>;

/// A lattice `Z^n` with a symmetric integral bilinear form, and names for the
/// basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    gram: IntMatrix,
    labels: Vec<String>,
    even: bool,
}

/// A class `numerators / denominator` in `L (x) Q`, with denominator 1 or 2.
///
/// A denominator of 2 is kept only when some numerator is odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalClass {
    numerators: Vec<i64>,
    denominator: i64,
}

impl RationalClass {
    pub fn new(numerators: Vec<i64>, denominator: i64) -> Result<Self> {
        match denominator {
            1 => Ok(Self {
                numerators,
                denominator: 1,
            }),
            2 if numerators.iter().all(|n| n.is_even()) => Ok(Self {
                numerators: numerators.iter().map(|n| n / 2).collect(),
                denominator: 1,
            }),
            2 => Ok(Self {
                numerators,
                denominator: 2,
            }),
            _ => Err(invalid("class denominator must be 1 or 2")),
        }
    }

    pub fn integral(numerators: Vec<i64>) -> Self {
        Self {
            numerators,
            denominator: 1,
        }
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn rank(&self) -> usize {
        self.numerators.len()
    }
}

/// Elementary divisors of the Gram matrix and the order of `L^* / L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantData {
    pub elementary_divisors: Vec<i64>,
    pub group_order: u128,
}

/// Sign pattern of the leading principal minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    Positive,
    Negative,
    Other,
}

/// Genus and Euler characteristic of the line bundle attached to a curve
/// class on a K3 surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveNumerics {
    pub genus: i64,
    pub chi: i64,
}

impl IntegerLattice {
    /// Validates a symmetric integer Gram matrix. `labels` may be empty, in
    /// which case basis vectors are named `b0, b1, ...`.
    pub fn from_gram(gram: &[Vec<i64>], labels: &[&str]) -> Result<Self> {
        let gram = IntMatrix::from_rows(gram)?;
        if !gram.is_square() {
            return Err(invalid("gram matrix is not square"));
        }
        if !gram.is_symmetric() {
            return Err(invalid("gram matrix is not symmetric"));
        }
        let n = gram.rows();
        if gram.rows() == 0 {
            return Err(invalid("lattice rank must be positive"));
        }
        let labels: Vec<String> = if labels.is_empty() {
            (0..n).map(|i| alloc::format!("b{i}")).collect()
        } else if labels.len() == n {
            labels.iter().map(|s| s.to_string()).collect()
        } else {
            return Err(invalid("label count does not match rank"));
        };
        let even = gram.diagonal().iter().all(|d| d.is_even());
        Ok(Self { gram, labels, even })
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coordinate vector of the basis element with this label.
    pub fn basis_class(&self, label: &str) -> Result<RationalClass> {
        let i = self
            .label_index(label)
            .ok_or_else(|| invalid(alloc::format!("no basis vector labelled {label}")))?;
        let mut v = alloc::vec![0; self.rank()];
        v[i] = 1;
        Ok(RationalClass::integral(v))
    }

    fn check(&self, c: &RationalClass) -> Result<()> {
        if c.rank() != self.rank() {
            return Err(invalid("class length does not match lattice rank"));
        }
        Ok(())
    }

    /// Integer `u^T G v` on numerator vectors.
    pub(crate) fn raw_product(&self, u: &[i64], v: &[i64]) -> Result<i128> {
        let n = self.rank();
        let mut acc = 0i128;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            let mut row = 0i128;
            for j in 0..n {
                let t = i128::from(self.gram[(i, j)])
                    .checked_mul(i128::from(v[j]))
                    .ok_or(Error::Overflow)?;
                row = row.checked_add(t).ok_or(Error::Overflow)?;
            }
            acc = row
                .checked_mul(i128::from(u[i]))
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Exact intersection product.
    pub fn inner(&self, u: &RationalClass, v: &RationalClass) -> Result<Rational> {
        self.check(u)?;
        self.check(v)?;
        let num = self.raw_product(&u.numerators, &v.numerators)?;
        let den = i128::from(u.denominator * v.denominator);
        Ok(Ratio::new(num, den))
    }

    pub fn norm(&self, v: &RationalClass) -> Result<Rational> {
        self.inner(v, v)
    }

    /// `genus = 1 + v^2 / 2`, `chi = 2 + v^2 / 2`; the norm must be an even integer.
    pub fn genus_and_euler(&self, v: &RationalClass) -> Result<CurveNumerics> {
        let n = self.norm(v)?;
        if !n.is_integer() || n.to_integer().is_odd() {
            return Err(Error::NotACurveClass(alloc::format!("self-intersection {n} is not an even integer")));
        }
        let half = i64::try_from(n.to_integer() / 2).map_err(|_| Error::Overflow)?;
        Ok(CurveNumerics {
            genus: half.checked_add(1).ok_or(Error::Overflow)?,
            chi: half.checked_add(2).ok_or(Error::Overflow)?,
        })
    }

    pub fn determinant(&self) -> Result<i128> {
        self.gram.determinant()
    }

    /// Elementary divisors of the Gram matrix (absolute values, ones kept) and
    /// `|det|` as the group order.
    pub fn discriminant_group(&self) -> Result<DiscriminantData> {
        let snf = smith_normal_form(&self.gram)?;
        let divisors = snf.divisors();
        if divisors.contains(&0) {
            return Err(Error::DegenerateLattice);
        }
        let mut order = 1u128;
        for d in &divisors {
            order = order.checked_mul(u128::from(d.unsigned_abs())).ok_or(Error::Overflow)?;
        }
        if order != self.determinant()?.unsigned_abs() {
            return Err(Error::Internal("Smith divisors disagree with the determinant".into()));
        }
        Ok(DiscriminantData {
            elementary_divisors: divisors,
            group_order: order,
        })
    }

    /// Leading-principal-minor test.
    pub fn definiteness(&self) -> Result<Definiteness> {
        let mut pos = true;
        let mut neg = true;
        for k in 1..=self.rank() {
            let m = self.gram.leading_block(k).determinant()?;
            pos &= m > 0;
            // sign of the k-th minor of a negative definite form is (-1)^k
            neg &= if k % 2 == 0 { m > 0 } else { m < 0 };
        }
        Ok(match (pos, neg) {
            (true, _) => Definiteness::Positive,
            (_, true) => Definiteness::Negative,
            _ => Definiteness::Other,
        })
    }

    /// Whether adjoining the half-integral class `c` yields an even integral
    /// overlattice: `c . b` is an integer for every basis vector `b`, and
    /// `c . c` is an even integer.
    pub fn glue_check(&self, c: &RationalClass) -> Result<bool> {
        self.check(c)?;
        if c.denominator != 2 {
            return Err(invalid("glue candidates must have denominator exactly 2"));
        }
        for i in 0..self.rank() {
            let mut e = alloc::vec![0; self.rank()];
            e[i] = 1;
            if !self.inner(c, &RationalClass::integral(e))?.is_integer() {
                return Ok(false);
            }
        }
        let n = self.norm(c)?;
        Ok(n.is_integer() && n.to_integer().is_even())
    }

    /// The overlattice `L + Z c` for a glue class `c`, re-based to an integral
    /// Gram matrix. The basis vector at the first odd numerator of `c` is
    /// replaced by `c` reduced modulo `L`, and gets the label `glue_label`.
    pub fn overlattice(&self, c: &RationalClass, glue_label: &str) -> Result<IntegerLattice> {
        if !self.glue_check(c)? {
            return Err(invalid("class does not glue to an even overlattice"));
        }
        let reduced: Vec<i64> = c.numerators.iter().map(|n| n.rem_euclid(2)).collect();
        let k = reduced.iter().position(|&n| n == 1).ok_or_else(|| Error::Internal("glue class is integral".into()))?;
        // rows in units of 1/2
        let n = self.rank();
        let basis: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                if i == k {
                    reduced.clone()
                } else {
                    let mut e = alloc::vec![0; n];
                    e[i] = 2;
                    e
                }
            })
            .collect();
        let mut gram = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = self.raw_product(&basis[i], &basis[j])?;
                if p % 4 != 0 {
                    return Err(Error::Internal("re-based gram is not integral".into()));
                }
                gram[i][j] = i64::try_from(p / 4).map_err(|_| Error::Overflow)?;
            }
        }
        let mut labels: Vec<&str> = self.labels.iter().map(String::as_str).collect();
        labels[k] = glue_label;
        IntegerLattice::from_gram(&gram, &labels)
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &IntegerLattice) -> IntegerLattice {
        let (a, b) = (self.rank(), other.rank());
        let mut g = IntMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                g[(i, j)] = self.gram[(i, j)];
            }
        }
        for i in 0..b {
            for j in 0..b {
                g[(a + i, a + j)] = other.gram[(i, j)];
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        IntegerLattice {
            gram: g,
            labels,
            even: self.even && other.even,
        }
    }
}

/// `a / b` as an exact integer, or an internal error if `b` does not divide `a`.
pub(crate) fn exact_div(a: i128, b: i128) -> Result<i128> {
    if b.is_zero() || a % b != 0 {
        return Err(Error::Internal(alloc::format!("{a} is not divisible by {b}")));
    }
    Ok(a / b)
}

pub(crate) fn to_i64(r: &Rational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Internal(alloc::format!("expected an integer, got {r}")));
    }
    i64::try_from(r.to_integer()).map_err(|_| Error::Overflow)
}

pub(crate) fn checked_ratio_add(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_ratio_mul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rank_one_minus_two() {
        let l = IntegerLattice::from_gram(&[vec![-2]], &["N"]).unwrap();
        assert_eq!(l.rank(), 1);
        assert!(l.is_even());
        assert_eq!(l.definiteness().unwrap(), Definiteness::Negative);
    }

    #[test]
    fn rejects_bad_gram() {
        assert!(IntegerLattice::from_gram(&[vec![2, 1], vec![0, 2]], &[]).is_err());
        assert!(IntegerLattice::from_gram(&[vec![2, 1]], &[]).is_err());
        assert!(IntegerLattice::from_gram(&[vec![2]], &["a", "b"]).is_err());
    }

    #[test]
    fn class_normalises_denominator() {
        let c = RationalClass::new(vec![2, 4], 2).unwrap();
        assert_eq!((c.numerators(), c.denominator()), (&[1, 2][..], 1));
        assert!(RationalClass::new(vec![1], 3).is_err());
    }

    #[test]
    fn unimodular_discriminant_is_trivial() {
        let hyperbolic = IntegerLattice::from_gram(&[vec![0, 1], vec![1, 0]], &[]).unwrap();
        let d = hyperbolic.discriminant_group().unwrap();
        assert_eq!(d.group_order, 1);
        assert_eq!(d.elementary_divisors, [1, 1]);
        assert_eq!(hyperbolic.definiteness().unwrap(), Definiteness::Other);
    }

    #[test]
    fn singular_lattice_has_no_discriminant() {
        let l = IntegerLattice::from_gram(&[vec![2, 2], vec![2, 2]], &[]).unwrap();
        assert_eq!(l.discriminant_group().unwrap_err(), Error::DegenerateLattice);
    }

    #[test]
    fn odd_norm_is_not_a_curve() {
        let l = IntegerLattice::from_gram(&[vec![1]], &[]).unwrap();
        assert!(matches!(
            l.genus_and_euler(&RationalClass::integral(vec![1])),
            Err(Error::NotACurveClass(_))
        ));
    }
}
