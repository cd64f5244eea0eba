//! Exact rational linear algebra.
//!
//! Every quantity in this crate is a rational number once long roots are
//! normalized to squared length 2, so vectors and matrices here are built on
//! [`BigRational`] and never round. Coordinates of a [`RationalVector`] are
//! always taken in the simple-root basis of whatever root system is in play.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    // Ratio::from_str panics on a zero denominator in some versions
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().parse::<BigInt>().map(|d| d.is_zero()).unwrap_or(false) {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
    }
    Rational::from_str(s).map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
}

/// Serde adapter that writes a rational as the string `"p/q"` (or `"p"`).
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

/// A point of the ambient space, in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| int(c)).collect())
    }

    /// Parses a comma separated list such as `"1/2,0,-3"`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(RationalVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Sum of the coordinates. For a root this is its height.
    pub fn height(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Plain coordinate dot product (no Gram matrix).
    pub fn coord_dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }

    pub fn sum<'a>(dim: usize, items: impl IntoIterator<Item = &'a RationalVector>) -> Self {
        let mut acc = Self::zero(dim);
        for v in items {
            acc += v;
        }
        acc
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [Rational] {
        &mut self.0
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<'a> Add<&'a RationalVector> for &'a RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a RationalVector> for &'a RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

impl AddAssign<&RationalVector> for RationalVector {
    fn add_assign(&mut self, rhs: &RationalVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&RationalVector> for RationalVector {
    fn sub_assign(&mut self, rhs: &RationalVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct VecVisitor;
        impl<'de> Visitor<'de> for VecVisitor {
            type Value = RationalVector;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of \"p/q\" strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
                let mut coords = Vec::new();
                while let Some(text) = seq.next_element::<String>()? {
                    coords.push(parse_rational(&text).map_err(de::Error::custom)?);
                }
                Ok(RationalVector(coords))
            }
        }
        d.deserialize_seq(VecVisitor)
    }
}

/// Square rational matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0) });
        }
        Ok(RationalMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        RationalMatrix { rows: (0..n).map(|i| RationalVector::unit(n, i).into_coords()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn mul_vec(&self, x: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), x.dim());
        RationalVector::new(
            self.rows
                .iter()
                .map(|row| row.iter().zip(x.coords()).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    /// `xᵀ M y`
    pub fn bilinear(&self, x: &RationalVector, y: &RationalVector) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for (j, yj) in y.coords().iter().enumerate() {
                if !yj.is_zero() {
                    row += &self.rows[i][j] * yj;
                }
            }
            acc += xi * row;
        }
        acc
    }

    /// Positive definiteness via leading principal minors (Sylvester).
    pub fn is_positive_definite(&self) -> bool {
        (1..=self.dim()).all(|k| {
            let minor = RationalMatrix { rows: self.rows[..k].iter().map(|r| r[..k].to_vec()).collect() };
            determinant(&minor).is_positive()
        })
    }
}

fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Integer rows `[M | b]` with each row scaled by the lcm of its denominators.
fn integer_rows(m: &RationalMatrix, rhs: Option<&RationalVector>) -> Vec<Vec<BigInt>> {
    m.rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full: Vec<&Rational> = row.iter().collect();
            if let Some(b) = rhs {
                full.push(&b[i]);
            }
            let l = lcm_of_denominators(full.iter().copied());
            full.iter().map(|v| (*v * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Bareiss forward elimination in place on the first `n` columns. Returns
/// the sign of the row permutation, or `None` if a zero pivot column shows
/// up (the leading block is singular).
fn bareiss_forward(a: &mut [Vec<BigInt>], n: usize) -> Option<i32> {
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !a[r][k].is_zero())?;
        if pivot_row != k {
            a.swap(pivot_row, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..a[i].len() {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Some(sign)
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(m: &RationalMatrix) -> Rational {
    let n = m.dim();
    if n == 0 {
        return Rational::one();
    }
    let mut a = integer_rows(m, None);
    let scale = m.rows.iter().fold(BigInt::one(), |acc, row| acc * lcm_of_denominators(row.iter()));
    match bareiss_forward(&mut a, n) {
        None => Rational::zero(),
        Some(sign) => Rational::new(&a[n - 1][n - 1] * BigInt::from(sign), scale),
    }
}

/// Solves `G x = b` exactly.
///
/// Rows are cleared to integers, reduced by Bareiss elimination (every
/// intermediate entry stays an integer), then back-substituted in rationals.
pub fn solve_linear(g: &RationalMatrix, b: &RationalVector) -> Result<RationalVector> {
    let n = g.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    let mut a = integer_rows(g, Some(b));
    bareiss_forward(&mut a, n).ok_or(Error::SingularMatrix)?;
    if n > 0 && a[n - 1][n - 1].is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(a[i][n].clone());
        for j in (i + 1)..n {
            acc -= Rational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(a[i][i].clone());
    }
    Ok(RationalVector::new(x))
}

/// Rank of a list of vectors (rows), exact.
#[allow(clippy::needless_range_loop)]
pub fn rank(vectors: &[RationalVector]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let cols = first.dim();
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in (r + 1)..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for j in c..cols {
                let delta = &f * &rows[r][j];
                rows[i][j] -= delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Primitive integer representative of the line through `v`, with the first
/// nonzero coordinate positive. Two nonzero vectors span the same line iff
/// their canonical normals agree.
pub fn canonical_normal(v: &RationalVector) -> Result<RationalVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let l = lcm_of_denominators(v.coords());
    let ints: Vec<BigInt> = v.coords().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let lead_negative = ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    let g = if lead_negative { -g } else { g };
    Ok(RationalVector::new(ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()))
}
