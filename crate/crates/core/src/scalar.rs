//! A run-time tagged scalar, for front ends that pick the backend from user
//! input. Arithmetic between different backends is rejected; promotion is
//! always explicit.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Backend, Complex64, Field, GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(GaussianRational),
    Real(f64),
    Complex(Complex64),
}

macro_rules! binop {
    ($name:ident, $op:tt) => {
        pub fn $name(&self, rhs: &Scalar) -> Result<Scalar> {
            use Scalar::*;
            Ok(match (self, rhs) {
                (Rational(a), Rational(b)) => Rational(a.clone() $op b.clone()),
                (Gaussian(a), Gaussian(b)) => Gaussian(a.clone() $op b.clone()),
                (Real(a), Real(b)) => Real(*a $op *b),
                (Complex(a), Complex(b)) => Complex(*a $op *b),
                _ => {
                    return Err(Error::BackendMismatch {
                        left: self.backend(),
                        right: rhs.backend(),
                    })
                }
            })
        }
    };
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::ExactRational,
            Scalar::Gaussian(_) => Backend::GaussianRational,
            Scalar::Real(_) => Backend::RealFloat,
            Scalar::Complex(_) => Backend::ComplexFloat,
        }
    }

    binop!(try_add, +);
    binop!(try_sub, -);
    binop!(try_mul, *);

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() && rhs.backend().is_exact() {
            return Err(Error::DivisionByZeroValue("scalar division"));
        }
        use Scalar::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a / b),
            (Gaussian(a), Gaussian(b)) => Gaussian(a / b),
            (Real(a), Real(b)) => Real(a / b),
            (Complex(a), Complex(b)) => Complex(a / b),
            _ => {
                return Err(Error::BackendMismatch {
                    left: self.backend(),
                    right: rhs.backend(),
                })
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => Zero::is_zero(a),
            Scalar::Gaussian(a) => Field::is_zero(a),
            Scalar::Real(a) => *a == 0.0,
            Scalar::Complex(a) => Field::is_zero(a),
        }
    }

    /// Move the value into `target`, which must sit later in the promotion
    /// chain (rational -> Gaussian -> complex float; rational/real -> real/complex float).
    pub fn promote(&self, target: Backend) -> Result<Scalar> {
        if !self.backend().can_promote_to(target) {
            return Err(Error::InvalidPromotion {
                from: self.backend(),
                to: target,
            });
        }
        Ok(match (self, target) {
            (s, t) if s.backend() == t => s.clone(),
            (Scalar::Rational(r), Backend::GaussianRational) => {
                Scalar::Gaussian(Complex::new(r.clone(), Zero::zero()))
            }
            (Scalar::Rational(r), Backend::RealFloat) => {
                Scalar::Real(crate::field::rational_to_f64(r))
            }
            (s, Backend::ComplexFloat) => Scalar::Complex(s.to_complex64()),
            _ => unreachable!("promotion table covers every allowed pair"),
        })
    }

    pub fn to_complex64(&self) -> Complex64 {
        match self {
            Scalar::Rational(a) => a.to_complex64(),
            Scalar::Gaussian(a) => a.to_complex64(),
            Scalar::Real(a) => a.to_complex64(),
            Scalar::Complex(a) => *a,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Scalar::Real(v) => Some(*v),
            Scalar::Rational(r) => Some(crate::field::rational_to_f64(r)),
            _ => None,
        }
    }

    /// Parse `"p/q"`, an integer, or a decimal. With `exact` the value becomes
    /// a [`Rational`] (decimals are converted exactly, e.g. `0.25 -> 1/4`);
    /// otherwise a real float.
    pub fn parse(text: &str, exact: bool) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::InvalidArgument(format!("cannot parse number {text:?}"));
        if exact {
            parse_rational(text).map(Scalar::Rational).ok_or_else(bad)
        } else if let Some((n, d)) = text.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| bad())?;
            let d: f64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            Ok(Scalar::Real(n / d))
        } else {
            text.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(Scalar::Real)
                .ok_or_else(bad)
        }
    }
}

fn parse_rational(text: &str) -> Option<Rational> {
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Ok(n) = text.parse::<BigInt>() {
        return Some(Rational::from_integer(n));
    }
    // Plain decimals: "-1.25" -> -125/100.
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = body.split_once('.')?;
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(Rational::new(digits * sign, den))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{a}"),
            Scalar::Gaussian(a) => write!(f, "{}", a.render()),
            Scalar::Real(a) => write!(f, "{a}"),
            Scalar::Complex(a) => write!(f, "{}", a.render()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_backend_arithmetic_is_rejected() {
        let a = Scalar::parse("1/2", true).unwrap();
        let b = Scalar::parse("0.5", false).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::BackendMismatch { .. })));
        let promoted = a.promote(Backend::RealFloat).unwrap();
        assert_eq!(promoted.try_add(&b).unwrap(), Scalar::Real(1.0));
    }

    #[test]
    fn promotion_is_one_way() {
        let z = Scalar::Real(1.5);
        assert!(matches!(
            z.promote(Backend::ExactRational),
            Err(Error::InvalidPromotion { .. })
        ));
        let g = Scalar::parse("3", true).unwrap().promote(Backend::GaussianRational).unwrap();
        assert_eq!(g.backend(), Backend::GaussianRational);
        assert_eq!(g.promote(Backend::ComplexFloat).unwrap(), Scalar::Complex(Complex64::new(3.0, 0.0)));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Scalar::parse("-2", true).unwrap().to_string(), "-2");
        assert_eq!(Scalar::parse("6/4", true).unwrap().to_string(), "3/2");
        assert_eq!(Scalar::parse("-0.25", true).unwrap().to_string(), "-1/4");
        assert_eq!(Scalar::parse("1/4", false).unwrap(), Scalar::Real(0.25));
        assert!(Scalar::parse("abc", false).is_err());
        assert!(Scalar::parse("1/0", true).is_err());
    }

    #[test]
    fn exact_division_by_zero_is_an_error() {
        let a = Scalar::parse("1", true).unwrap();
        let z = Scalar::parse("0", true).unwrap();
        assert!(a.try_div(&z).is_err());
    }
}
