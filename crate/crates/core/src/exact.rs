//! Exact arithmetic in the real quadratic field Q(√2).
//!
//! Every coordinate that appears in the dual 24-cell diagram lives in
//! Q(√2), so all geometry up to the framing trace is carried out without
//! rounding. Values are stored as `a + b·√2` with `a`, `b` arbitrary
//! precision rationals; `num_rational` keeps both in lowest terms with a
//! positive denominator, which makes structural equality the field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero in Q(√2)")]
    DivisionByZero,
}

/// An element `a + b·√2` of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt2 {
    a: BigRational,
    b: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

fn signum(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn zero() -> Self {
        QSqrt2::default()
    }

    pub fn one() -> Self {
        QSqrt2::from_integer(1)
    }

    pub fn sqrt2() -> Self {
        QSqrt2 {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        QSqrt2::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QSqrt2 {
            a,
            b: BigRational::zero(),
        }
    }

    /// `n/d + (m/e)·√2` from machine integers; handy for literals.
    pub fn from_parts(n: i64, d: i64, m: i64, e: i64) -> Self {
        QSqrt2 {
            a: ratio(n, d),
            b: ratio(m, e),
        }
    }

    /// `1/√2`, stored in its rationalized form `(1/2)·√2`.
    pub fn inv_sqrt2() -> Self {
        QSqrt2::from_parts(0, 1, 1, 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate `a - b·√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² - 2b²`, the product with the conjugate.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    /// Sign under the real embedding √2 ≈ 1.41421.
    pub fn sign(&self) -> i32 {
        let sa = signum(&self.a);
        let sb = signum(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the term with the larger square wins. a² = 2b² is
        // impossible for nonzero rationals.
        if signum(&self.norm()) > 0 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn invert(&self) -> Result<Self, ExactError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(QSqrt2 {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Exact square root when it exists in Q(√2).
    pub fn sqrt(&self) -> Option<Self> {
        match self.sign() {
            -1 => return None,
            0 => return Some(QSqrt2::zero()),
            _ => {}
        }
        let two = BigRational::from_integer(2.into());
        let mut candidates = Vec::new();
        if self.b.is_zero() {
            if let Some(c) = rational_sqrt(&self.a) {
                candidates.push(QSqrt2::from_rational(c));
            }
            if let Some(d) = rational_sqrt(&(&self.a / &two)) {
                candidates.push(QSqrt2::new(BigRational::zero(), d));
            }
        } else if let Some(s) = rational_sqrt(&self.norm()) {
            for c_sq in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
                if let Some(c) = rational_sqrt(&c_sq) {
                    if c.is_zero() {
                        continue;
                    }
                    let d = &self.b / (&two * &c);
                    candidates.push(QSqrt2::new(c, d));
                }
            }
        }
        candidates
            .into_iter()
            .map(|y| if y.sign() < 0 { -y } else { y })
            .find(|y| &(y * y) == self)
    }

    /// Nearest-double approximation. When `a` and `b` have opposite signs the
    /// value is rewritten as `(a² - 2b²) / (a - b√2)` so no cancellation
    /// occurs.
    pub fn to_f64(&self) -> f64 {
        let sqrt2 = std::f64::consts::SQRT_2;
        let af = self.a.to_f64().unwrap_or(f64::NAN);
        let bf = self.b.to_f64().unwrap_or(f64::NAN);
        if signum(&self.a) * signum(&self.b) >= 0 {
            af + bf * sqrt2
        } else {
            let n = self.norm().to_f64().unwrap_or(f64::NAN);
            n / (af - bf * sqrt2)
        }
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl From<i64> for QSqrt2 {
    fn from(n: i64) -> Self {
        QSqrt2::from_integer(n)
    }
}

impl From<BigRational> for QSqrt2 {
    fn from(a: BigRational) -> Self {
        QSqrt2::from_rational(a)
    }
}

fn fmt_rational(f: &mut fmt::Formatter<'_>, x: &BigRational) -> fmt::Result {
    if x.is_integer() {
        write!(f, "{}", x.numer())
    } else {
        write!(f, "{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.a.is_zero() {
            fmt_rational(f, &self.a)?;
        }
        if self.b.is_zero() {
            return Ok(());
        }
        if self.b.is_negative() {
            write!(f, "-")?;
        } else if !self.a.is_zero() {
            write!(f, "+")?;
        }
        let mag = self.b.abs();
        let n = mag.numer();
        if !n.is_one() {
            write!(f, "{n}")?;
        }
        write!(f, "√2")?;
        if !mag.denom().is_one() {
            write!(f, "/{}", mag.denom())?;
        }
        Ok(())
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

impl Add<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        let two = BigRational::from_integer(2.into());
        QSqrt2 {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

/// Panics on a zero divisor; use [`QSqrt2::invert`] for the fallible form.
impl Div<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QSqrt2) -> QSqrt2 {
        self * &rhs.invert().expect("division by zero in Q(√2)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { (&self).$m(&rhs) }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 { (&self).$m(rhs) }
        }
        impl $tr<QSqrt2> for &QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

/// A fixed-length vector over Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactVec<const N: usize>(pub [QSqrt2; N]);

pub type Vec3E = ExactVec<3>;
pub type Vec4E = ExactVec<4>;

impl<const N: usize> ExactVec<N> {
    pub fn zero() -> Self {
        ExactVec(std::array::from_fn(|_| QSqrt2::zero()))
    }

    pub fn from_integers(v: [i64; N]) -> Self {
        ExactVec(v.map(QSqrt2::from_integer))
    }

    pub fn components(&self) -> &[QSqrt2; N] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> QSqrt2 {
        self.0
            .iter()
            .zip(&other.0)
            .fold(QSqrt2::zero(), |acc, (x, y)| acc + x * y)
    }

    pub fn norm_sq(&self) -> QSqrt2 {
        self.dot(self)
    }

    pub fn scale(&self, s: &QSqrt2) -> Self {
        ExactVec(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(QSqrt2::is_zero)
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> QSqrt2 {
        self.0
            .iter()
            .map(QSqrt2::abs)
            .max()
            .unwrap_or_else(QSqrt2::zero)
    }

    pub fn to_f64(&self) -> [f64; N] {
        std::array::from_fn(|i| self.0[i].to_f64())
    }
}

impl Vec3E {
    pub fn cross(&self, o: &Self) -> Self {
        let [a, b, c] = &self.0;
        let [x, y, z] = &o.0;
        ExactVec([b * z - c * y, c * x - a * z, a * y - b * x])
    }
}

impl<const N: usize> Index<usize> for ExactVec<N> {
    type Output = QSqrt2;
    fn index(&self, i: usize) -> &QSqrt2 {
        &self.0[i]
    }
}

impl<const N: usize> Add<&ExactVec<N>> for &ExactVec<N> {
    type Output = ExactVec<N>;
    fn add(self, rhs: &ExactVec<N>) -> ExactVec<N> {
        ExactVec(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<const N: usize> Sub<&ExactVec<N>> for &ExactVec<N> {
    type Output = ExactVec<N>;
    fn sub(self, rhs: &ExactVec<N>) -> ExactVec<N> {
        ExactVec(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl<const N: usize> Neg for &ExactVec<N> {
    type Output = ExactVec<N>;
    fn neg(self) -> ExactVec<N> {
        ExactVec(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl<const N: usize> fmt::Display for ExactVec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
