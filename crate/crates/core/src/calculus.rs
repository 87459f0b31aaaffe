//! Lucas derivative and Lucas integral, on series and on black-box functions.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lucas::{LucasParams, SeqCache};
use crate::series::{Series, Series2};

/// Below this magnitude a float argument counts as the origin.
pub const ORIGIN_CUTOFF: f64 = 1e-9;
/// Step of the symmetric difference used at the origin.
pub const ORIGIN_STEP: f64 = 1e-6;
/// Hard cap on the number of nodes visited by [`lucas_integral`].
pub const MAX_INTEGRAL_TERMS: usize = 1_000_000;

/// A function the calculus operators can evaluate.
pub trait RealFn<F> {
    fn eval(&self, x: &F) -> F;
}

impl<F, T> RealFn<F> for T
where
    T: Fn(&F) -> F,
{
    fn eval(&self, x: &F) -> F {
        self(x)
    }
}

/// A polynomial `c_0 + c_1 x + ...`, constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F> {
    pub coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        Polynomial { coeffs }
    }

    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient-level Lucas derivative `c_n x^n -> c_n {n} x^(n-1)`.
    pub fn lucas_derivative(&self, cache: &SeqCache<F>) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial { coeffs: vec![F::zero()] };
        }
        Polynomial {
            coeffs: (1..self.coeffs.len())
                .map(|n| self.coeffs[n].clone() * cache.u(n))
                .collect(),
        }
    }

    /// `x -> p(c x)`.
    pub fn dilate(&self, c: &F) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a.clone() * c.pow(n as u64))
                .collect(),
        }
    }

    pub fn to_series(&self, order: usize) -> Series<F> {
        Series::from_fn(order, |n| self.coeffs.get(n).cloned().unwrap_or_else(F::zero))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial { coeffs }
    }
}

impl<F: Field> RealFn<F> for Polynomial<F> {
    fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }
}

/// `(f(phi x) - f(phi' x)) / ((phi - phi') x)`.
///
/// Float backends switch to a symmetric difference quotient with step
/// [`ORIGIN_STEP`] when `|x| < ORIGIN_CUTOFF`; exact backends reject `x = 0`.
pub fn lucas_derivative_fn<F: Field>(
    f: &impl RealFn<F>,
    x: &F,
    params: &LucasParams<F>,
) -> Result<F> {
    let (phi, phi_prime) = params.roots()?;
    if F::is_exact() {
        if x.is_zero() {
            return Err(Error::DivisionByZeroValue("Lucas derivative at the origin"));
        }
    } else if x.magnitude() < ORIGIN_CUTOFF {
        let h = F::from_ratio(1, 1_000_000);
        return Ok((f.eval(&h) - f.eval(&-h.clone())) / (F::from_i64(2) * h));
    }
    let num = f.eval(&(phi.clone() * x.clone())) - f.eval(&(phi_prime.clone() * x.clone()));
    let den = (phi.clone() - phi_prime.clone()) * x.clone();
    if den.is_zero() {
        return Err(Error::DivisionByZeroValue("Lucas derivative with repeated root"));
    }
    Ok(num / den)
}

/// Power rule on coefficients; the result has order `N - 1` (order 0 stays 0).
pub fn lucas_derivative_series<F: Field>(f: &Series<F>, cache: &SeqCache<F>) -> Series<F> {
    if f.order() == 0 {
        return Series::zero(0);
    }
    Series::from_fn(f.order() - 1, |n| f.coeff(n + 1) * cache.u(n + 1))
}

/// Inverse power rule `a_n z^n -> a_n z^(n+1) / {n+1}`; the result has order `N + 1`.
pub fn antiderivative_series<F: Field>(f: &Series<F>, cache: &SeqCache<F>) -> Result<Series<F>> {
    Series::try_from_fn(f.order() + 1, |n| {
        if n == 0 {
            return Ok(F::zero());
        }
        let d = cache.u(n);
        if d.is_zero() {
            return Err(Error::VanishingFactor(n));
        }
        Ok(f.coeff(n - 1) / d)
    })
}

/// Partial Lucas derivative in `x`.
pub fn lucas_derivative_x<F: Field>(f: &Series2<F>, cache: &SeqCache<F>) -> Series2<F> {
    let order = f.order().saturating_sub(1);
    Series2::from_fn(order, |j, k| f.coeff(j + 1, k) * cache.u(j + 1))
}

/// Partial Lucas derivative in `y`.
pub fn lucas_derivative_y<F: Field>(f: &Series2<F>, cache: &SeqCache<F>) -> Series2<F> {
    lucas_derivative_x(&f.swap(), cache).swap()
}

/// Partial antiderivative in `x`, zero on `x = 0`.
pub fn antiderivative_x<F: Field>(f: &Series2<F>, cache: &SeqCache<F>) -> Result<Series2<F>> {
    Series2::try_from_fn(f.order() + 1, |j, k| {
        if j == 0 {
            return Ok(F::zero());
        }
        let d = cache.u(j);
        if d.is_zero() {
            return Err(Error::VanishingFactor(j));
        }
        Ok(f.coeff(j - 1, k) / d)
    })
}

/// Partial antiderivative in `y`, zero on `y = 0`.
pub fn antiderivative_y<F: Field>(f: &Series2<F>, cache: &SeqCache<F>) -> Result<Series2<F>> {
    Ok(antiderivative_x(&f.swap(), cache)?.swap())
}

/// `(lead, other)` with `|other / lead| < 1`.
fn node_family(params: &LucasParams<f64>) -> Result<(f64, f64)> {
    let (&phi, &phi_prime) = params.roots()?;
    if (phi_prime / phi).abs() < 1.0 {
        Ok((phi, phi_prime))
    } else if (phi / phi_prime).abs() < 1.0 {
        Ok((phi_prime, phi))
    } else {
        Err(Error::NonContractingNodes {
            ratio: (phi_prime / phi).abs(),
        })
    }
}

/// Indefinite Lucas integral from the origin, by the contracting node family.
fn node_sum(f: &impl RealFn<f64>, x: f64, params: &LucasParams<f64>, eps: f64) -> Result<f64> {
    let (lead, other) = node_family(params)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let ratio = other / lead;
    let tail_factor = ratio.abs() / (1.0 - ratio.abs());
    let weight0 = (lead - other) * x / lead;
    let mut node = x / lead;
    let mut weight = weight0;
    let mut sum = 0.0;
    let mut scale = 0.0f64;
    let mut quiet = 0;
    for _ in 0..MAX_INTEGRAL_TERMS {
        let term = weight * f.eval(&node);
        if !term.is_finite() {
            break;
        }
        sum += term;
        scale = scale.max(sum.abs()).max(term.abs());
        if term.abs() * tail_factor <= eps * scale.max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
        node *= ratio;
        weight *= ratio;
    }
    Err(Error::NonConvergent {
        terms: MAX_INTEGRAL_TERMS,
    })
}

/// `int_a^b f(x) d_{s,t} x` as a difference of two node sums.
pub fn lucas_integral(
    f: &impl RealFn<f64>,
    a: f64,
    b: f64,
    params: &LucasParams<f64>,
    eps: f64,
) -> Result<f64> {
    if a == b {
        node_family(params)?;
        return Ok(0.0);
    }
    Ok(node_sum(f, b, params, eps)? - node_sum(f, a, params, eps)?)
}

/// `int_a^b (Df)(x) g(phi' x) - ([f g]_a^b - int_a^b f(phi x) (Dg)(x))`.
pub fn integration_by_parts_residual(
    f: &Polynomial<f64>,
    g: &Polynomial<f64>,
    a: f64,
    b: f64,
    params: &LucasParams<f64>,
    eps: f64,
) -> Result<f64> {
    let (&phi, &phi_prime) = params.roots()?;
    let cache = SeqCache::new(params.clone());
    let df = f.lucas_derivative(&cache);
    let dg = g.lucas_derivative(&cache);
    let g_low = g.dilate(&phi_prime);
    let f_high = f.dilate(&phi);
    let lhs = lucas_integral(&df.mul(&g_low), a, b, params, eps)?;
    let boundary = f.eval(&b) * g.eval(&b) - f.eval(&a) * g.eval(&a);
    let rhs = boundary - lucas_integral(&f_high.mul(&dg), a, b, params, eps)?;
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn fib() -> LucasParams<f64> {
        LucasParams::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn derivative_of_powers() {
        let sq = |x: &f64| x * x;
        assert!((lucas_derivative_fn(&sq, &3.0, &fib()).unwrap() - 3.0).abs() < 1e-12);
        let pell = LucasParams::new(2.0, 1.0).unwrap();
        let p5 = |x: &f64| x.powi(5);
        assert!((lucas_derivative_fn(&p5, &1.0, &pell).unwrap() - 29.0).abs() < 1e-10);
        let c = |_: &f64| 4.0;
        assert_eq!(lucas_derivative_fn(&c, &0.7, &fib()).unwrap(), 0.0);
        let near = lucas_derivative_fn(&|x: &f64| 2.0 * x + 1.0, &0.0, &fib()).unwrap();
        assert!((near - 2.0).abs() < 1e-9);
    }

    #[test]
    fn series_power_rule() {
        let cache = SeqCache::new(LucasParams::new(Rational::from_i64(1), Rational::from_i64(1)).unwrap());
        let one = Rational::from_i64(1);
        let f = Series::new(vec![one.clone(), one.clone(), one.clone()]);
        let d = lucas_derivative_series(&f, &cache);
        assert_eq!(d.coeffs(), &[one.clone(), one.clone()]);
        let cube = Series::monomial(3, one.clone(), 3);
        let anti = antiderivative_series(&cube, &cache).unwrap();
        assert_eq!(anti.coeff(4), Rational::from_ratio(1, 3));
        assert_eq!(lucas_derivative_series(&anti, &cache).coeffs(), cube.coeffs());
    }

    #[test]
    fn integral_of_low_powers() {
        let x = |x: &f64| *x;
        assert!((lucas_integral(&x, 0.0, 1.0, &fib(), 1e-15).unwrap() - 1.0).abs() < 1e-10);
        let x3 = |x: &f64| x.powi(3);
        assert!((lucas_integral(&x3, 0.0, 1.0, &fib(), 1e-15).unwrap() - 1.0 / 3.0).abs() < 1e-10);
        assert_eq!(lucas_integral(&x3, 0.4, 0.4, &fib(), 1e-15).unwrap(), 0.0);
    }

    #[test]
    fn integral_picks_the_other_family() {
        // roots -3 and 1/2: only |phi/phi'| < 1 contracts
        let p = LucasParams::from_roots(0.5, -3.0).unwrap();
        let cache = SeqCache::new(p.clone());
        let x2 = |x: &f64| x * x;
        let got = lucas_integral(&x2, 0.0, 1.0, &p, 1e-15).unwrap();
        assert!((got - 1.0 / cache.u(3)).abs() < 1e-10);
    }

    #[test]
    fn non_contracting_nodes() {
        let p = LucasParams::new(2.0, -1.0).unwrap();
        let r = lucas_integral(&|x: &f64| *x, 0.0, 1.0, &p, 1e-15);
        assert!(matches!(r, Err(Error::NonContractingNodes { .. })));
    }

    #[test]
    fn parts_formula() {
        let x = Polynomial::new(vec![0.0, 1.0]);
        let r = integration_by_parts_residual(&x, &x, 0.0, 1.0, &fib(), 1e-15).unwrap();
        assert!(r.abs() < 1e-9);
        let f = Polynomial::new(vec![0.0, 0.0, 1.0]);
        let g = Polynomial::new(vec![0.0, 0.0, 0.0, 1.0]);
        let r = integration_by_parts_residual(&f, &g, 0.0, 0.5, &fib(), 1e-15).unwrap();
        assert!(r.abs() < 1e-9);
    }
}
