//! Field backends.
//!
//! Every algorithm in the crate is generic over [`Field`]. Four concrete
//! backends implement it:
//!
//! | backend              | type                 | exact |
//! |----------------------|----------------------|-------|
//! | exact rational       | [`Rational`]         | yes   |
//! | Gaussian rational    | [`GaussianRational`] | yes   |
//! | real float           | `f64`                | no    |
//! | complex float        | [`Complex64`]        | no    |
//!
//! Mixing backends inside one computation is a type error; conversion
//! between them goes through [`crate::scalar::Scalar::promote`] or the
//! explicit `From` embeddings.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
pub use num_complex::Complex64;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub type Rational = BigRational;
pub type GaussianRational = Complex<BigRational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    ExactRational,
    GaussianRational,
    RealFloat,
    ComplexFloat,
}

impl Backend {
    pub fn is_exact(self) -> bool {
        matches!(self, Backend::ExactRational | Backend::GaussianRational)
    }

    /// Position in the promotion chain rational -> Gaussian -> complex float.
    /// Real float sits beside the chain: it promotes to complex float only.
    pub(crate) fn can_promote_to(self, target: Backend) -> bool {
        use Backend::*;
        matches!(
            (self, target),
            (ExactRational, ExactRational | GaussianRational | RealFloat | ComplexFloat)
                | (GaussianRational, GaussianRational | ComplexFloat)
                | (RealFloat, RealFloat | ComplexFloat)
                | (ComplexFloat, ComplexFloat)
        )
    }
}

/// The field contract shared by all backends.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Absolute value as a double; may be `inf` for huge exact values.
    fn magnitude(&self) -> f64;
    /// A square root inside the field. Exact backends return `None` unless the
    /// value is a perfect square of a field element; real float returns `None`
    /// for negative input.
    fn sqrt(&self) -> Option<Self>;
    fn to_complex64(&self) -> Complex64;
    fn render(&self) -> String;

    fn is_exact() -> bool {
        Self::BACKEND.is_exact()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// `self^e` with the convention `x^0 = 1` for every `x`, including zero.
    fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// `(-1)^e` as a field element.
    fn sign_pow(e: u64) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

/// Fields containing a square root of -1.
pub trait ComplexField: Field {
    fn i() -> Self;
}

/// Floating-point backends, used by adaptive evaluation.
pub trait FloatField: Field + Copy {
    fn from_f64(v: f64) -> Self;
    fn abs(&self) -> f64;
    fn is_finite(&self) -> bool;
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Field for BigRational {
    const BACKEND: Backend = Backend::ExactRational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Field for GaussianRational {
    const BACKEND: Backend = Backend::GaussianRational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(<BigRational as Field>::from_i64(v), Zero::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(<BigRational as Field>::from_ratio(num, den), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn magnitude(&self) -> f64 {
        self.to_complex64().norm()
    }
    fn sqrt(&self) -> Option<Self> {
        // (a + bi)^2 = re + im i  with  a^2 = (re + |z|)/2,  b = im / (2a).
        if Zero::is_zero(&self.im) {
            return match rational_sqrt(&self.re) {
                Some(r) => Some(Complex::new(r, Zero::zero())),
                None => rational_sqrt(&-self.re.clone()).map(|r| Complex::new(Zero::zero(), r)),
            };
        }
        let modulus = rational_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let two = <BigRational as Field>::from_i64(2);
        let a = rational_sqrt(&((&self.re + &modulus) / &two))?;
        let b = &self.im / (&two * &a);
        Some(Complex::new(a, b))
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn render(&self) -> String {
        if Zero::is_zero(&self.im) {
            self.re.to_string()
        } else if self.im.is_negative() {
            format!("{} - {}i", self.re, -self.im.clone())
        } else {
            format!("{} + {}i", self.re, self.im)
        }
    }
}

impl ComplexField for GaussianRational {
    fn i() -> Self {
        Complex::new(Zero::zero(), One::one())
    }
}

impl Field for f64 {
    const BACKEND: Backend = Backend::RealFloat;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> f64 {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(f64::sqrt(*self))
        }
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
    fn render(&self) -> String {
        format!("{self:e}")
    }
    fn pow(&self, e: u64) -> Self {
        if e <= i32::MAX as u64 {
            self.powi(e as i32)
        } else {
            self.powf(e as f64)
        }
    }
}

impl FloatField for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn abs(&self) -> f64 {
        f64::abs(*self)
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Field for Complex64 {
    const BACKEND: Backend = Backend::ComplexFloat;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn sqrt(&self) -> Option<Self> {
        Some(Complex64::sqrt(*self))
    }
    fn to_complex64(&self) -> Complex64 {
        *self
    }
    fn render(&self) -> String {
        if self.im == 0.0 {
            format!("{:e}", self.re)
        } else {
            format!("{:e}{:+e}i", self.re, self.im)
        }
    }
}

impl ComplexField for Complex64 {
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
}

impl FloatField for Complex64 {
    fn from_f64(v: f64) -> Self {
        Complex64::new(v, 0.0)
    }
    fn abs(&self) -> f64 {
        self.norm()
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Embedding of the rationals into another exact field.
pub fn rational_to_gaussian(r: &Rational) -> GaussianRational {
    Complex::new(r.clone(), Zero::zero())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn pow_zero_exponent_is_one_even_for_zero_base() {
        assert_eq!(<Rational as Field>::zero().pow(0), <Rational as Field>::one());
        assert_eq!(0.0f64.pow(0), 1.0);
        assert_eq!(q(2, 3).pow(3), q(8, 27));
    }

    #[test]
    fn exact_sqrt_only_on_perfect_squares() {
        assert_eq!(Field::sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(Field::sqrt(&q(2, 1)), None);
        assert_eq!(Field::sqrt(&q(-1, 1)), None);
        let z = GaussianRational::new(q(3, 1), q(4, 1));
        let r = Field::sqrt(&z).unwrap();
        assert_eq!(r.clone() * r, z);
        let minus_four = GaussianRational::from_i64(-4);
        let r = Field::sqrt(&minus_four).unwrap();
        assert_eq!(r.clone() * r, minus_four);
    }

    #[test]
    fn gaussian_i_squares_to_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * i, -<GaussianRational as Field>::one());
    }

    #[test]
    fn render_gaussian() {
        let z = GaussianRational::new(q(1, 2), q(-3, 1));
        assert_eq!(z.render(), "1/2 - 3i");
    }
}
