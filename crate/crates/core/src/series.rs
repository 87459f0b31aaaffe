//! Truncated formal power series in one and two variables.

use crate::error::{Error, Result};
use crate::field::Field;

/// `a_0 + a_1 z + ... + a_N z^N`, everything above `z^N` discarded.
///
/// Equality compares coefficients up to the smaller of the two orders.
#[derive(Debug, Clone)]
pub struct Series<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Series<F> {
    /// Series from its coefficient list; `coeffs` must be non-empty.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least a constant term");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> F) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn try_from_fn(order: usize, mut f: impl FnMut(usize) -> Result<F>) -> Result<Self> {
        let coeffs = (0..=order).map(&mut f).collect::<Result<Vec<F>>>()?;
        Ok(Series { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| F::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(F::one(), order)
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c z^n`, or zero if `n > order`.
    pub fn monomial(n: usize, c: F, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `z^n`; zero above the order.
    pub fn coeff(&self, n: usize) -> F {
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    pub fn set_coeff(&mut self, n: usize, c: F) {
        if n <= self.order() {
            self.coeffs[n] = c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order, |n| self.coeff(n))
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(Self::from_fn(self.order(), |n| {
            self.coeffs[n].clone() + rhs.coeffs[n].clone()
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(Self::from_fn(self.order(), |n| {
            self.coeffs[n].clone() - rhs.coeffs[n].clone()
        }))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| {
            (0..=n).fold(F::zero(), |acc, k| {
                acc + self.coeffs[k].clone() * rhs.coeffs[n - k].clone()
            })
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_fn(self.order(), |n| c.clone() * self.coeffs[n].clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |n| -self.coeffs[n].clone())
    }

    /// `f(z) -> f(cz)`.
    pub fn dilate(&self, c: &F) -> Self {
        let mut power = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * power.clone());
            power = power * c.clone();
        }
        Series { coeffs: out }
    }

    /// `z^shift f(z)`, truncated at the same order.
    pub fn shift_up(&self, shift: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n >= shift {
                self.coeffs[n - shift].clone()
            } else {
                F::zero()
            }
        })
    }

    /// `g` with `f g = 1 + O(z^(N+1))`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0].inv().ok_or(Error::NonUnitConstantTerm)?;
        let mut g: Vec<F> = Vec::with_capacity(self.coeffs.len());
        g.push(a0.clone());
        for n in 1..=self.order() {
            let acc = (1..=n).fold(F::zero(), |acc, k| {
                acc + self.coeffs[k].clone() * g[n - k].clone()
            });
            g.push(-(acc * a0.clone()));
        }
        Ok(Series { coeffs: g })
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval_at(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// Keep only the even (`odd = false`) or odd powers.
    pub fn parity_part(&self, odd: bool) -> Self {
        Self::from_fn(self.order(), |n| {
            if (n % 2 == 1) == odd {
                self.coeffs[n].clone()
            } else {
                F::zero()
            }
        })
    }

    /// First index on the common order where the coefficients differ.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<usize> {
        let order = self.order().min(rhs.order());
        (0..=order).find(|&n| self.coeffs[n] != rhs.coeffs[n])
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Series<G> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<F: Field> PartialEq for Series<F> {
    fn eq(&self, rhs: &Self) -> bool {
        self.first_mismatch(rhs).is_none()
    }
}

/// Bivariate truncated series `sum F[j,k] x^j y^k` over `j + k <= N`.
///
/// Coefficients live in a dense triangle ordered by total degree.
#[derive(Debug, Clone)]
pub struct Series2<F> {
    order: usize,
    coeffs: Vec<F>,
}

fn tri_index(j: usize, k: usize) -> usize {
    let d = j + k;
    d * (d + 1) / 2 + k
}

impl<F: Field> Series2<F> {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut coeffs = Vec::with_capacity((order + 1) * (order + 2) / 2);
        for d in 0..=order {
            for k in 0..=d {
                coeffs.push(f(d - k, k));
            }
        }
        Series2 { order, coeffs }
    }

    pub fn try_from_fn(
        order: usize,
        mut f: impl FnMut(usize, usize) -> Result<F>,
    ) -> Result<Self> {
        let mut coeffs = Vec::with_capacity((order + 1) * (order + 2) / 2);
        for d in 0..=order {
            for k in 0..=d {
                coeffs.push(f(d - k, k)?);
            }
        }
        Ok(Series2 { order, coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| F::zero())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^j y^k`; zero outside the triangle.
    pub fn coeff(&self, j: usize, k: usize) -> F {
        if j + k > self.order {
            F::zero()
        } else {
            self.coeffs[tri_index(j, k)].clone()
        }
    }

    pub fn set_coeff(&mut self, j: usize, k: usize, c: F) {
        if j + k <= self.order {
            self.coeffs[tri_index(j, k)] = c;
        }
    }

    /// `f(x)` as a bivariate series.
    pub fn from_x(f: &Series<F>, order: usize) -> Self {
        Self::from_fn(order, |j, k| if k == 0 { f.coeff(j) } else { F::zero() })
    }

    /// `g(y)` as a bivariate series.
    pub fn from_y(g: &Series<F>, order: usize) -> Self {
        Self::from_fn(order, |j, k| if j == 0 { g.coeff(k) } else { F::zero() })
    }

    /// `f(x) g(y)`, truncated at the smaller order.
    pub fn outer(f: &Series<F>, g: &Series<F>) -> Self {
        let order = f.order().min(g.order());
        Self::from_fn(order, |j, k| f.coeff(j) * g.coeff(k))
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(Series2 {
            order: self.order,
            coeffs: zip_with(&self.coeffs, &rhs.coeffs, |a, b| a + b),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(Series2 {
            order: self.order,
            coeffs: zip_with(&self.coeffs, &rhs.coeffs, |a, b| a - b),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |j, k| {
            let mut acc = F::zero();
            for a in 0..=j {
                for b in 0..=k {
                    acc = acc + self.coeff(a, b) * rhs.coeff(j - a, k - b);
                }
            }
            acc
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| c.clone() * a.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// `F(x, y) -> F(a x, b y)`.
    pub fn dilate(&self, a: &F, b: &F) -> Self {
        Self::from_fn(self.order, |j, k| {
            a.pow(j as u64) * b.pow(k as u64) * self.coeff(j, k)
        })
    }

    /// `F(x, y) -> F(y, x)`.
    pub fn swap(&self) -> Self {
        Self::from_fn(self.order, |j, k| self.coeff(k, j))
    }

    /// The univariate series of `F(z, c z)`.
    pub fn substitute_diagonal(&self, c: &F) -> Series<F> {
        Series::from_fn(self.order, |n| {
            (0..=n).fold(F::zero(), |acc, k| {
                acc + self.coeff(n - k, k) * c.pow(k as u64)
            })
        })
    }

    pub fn eval_at(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero();
        for d in 0..=self.order {
            for k in 0..=d {
                acc = acc + self.coeff(d - k, k) * x.pow((d - k) as u64) * y.pow(k as u64);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// First `(j, k)` on the common order where the coefficients differ.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<(usize, usize)> {
        let order = self.order.min(rhs.order);
        for d in 0..=order {
            for k in 0..=d {
                if self.coeff(d - k, k) != rhs.coeff(d - k, k) {
                    return Some((d - k, k));
                }
            }
        }
        None
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Series2<G> {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<F: Field> PartialEq for Series2<F> {
    fn eq(&self, rhs: &Self) -> bool {
        self.first_mismatch(rhs).is_none()
    }
}

fn zip_with<F: Field>(a: &[F], b: &[F], f: impl Fn(F, F) -> F) -> Vec<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| f(x.clone(), y.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Complex64, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn poly(c: &[i64]) -> Series<Rational> {
        Series::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn product_of_conjugates() {
        let a = poly(&[1, 1, 0, 0, 0]);
        let b = poly(&[1, -1, 0, 0, 0]);
        assert_eq!(a.mul(&b).coeffs(), poly(&[1, 0, -1, 0, 0]).coeffs());
    }

    #[test]
    fn scale_and_dilate() {
        let f = poly(&[1, 1, 1]);
        assert_eq!(f.scale(&q(3)).coeffs(), poly(&[3, 3, 3]).coeffs());
        assert_eq!(f.dilate(&q(2)).coeffs(), poly(&[1, 2, 4]).coeffs());
        assert_eq!(f.dilate(&q(1)).coeffs(), f.coeffs());
    }

    #[test]
    fn order_mismatch_on_add() {
        let a = poly(&[1, 2]);
        let b = poly(&[1, 2, 3]);
        assert_eq!(a.add(&b).unwrap_err(), Error::OrderMismatch { left: 1, right: 2 });
        assert_eq!(a.mul(&b).order(), 1);
    }

    #[test]
    fn geometric_reciprocal() {
        let f = poly(&[1, -1, 0, 0]);
        assert_eq!(f.reciprocal().unwrap().coeffs(), poly(&[1, 1, 1, 1]).coeffs());
        assert_eq!(
            poly(&[0, 1, 0]).reciprocal().unwrap_err(),
            Error::NonUnitConstantTerm
        );
    }

    #[test]
    fn horner() {
        let f = Series::new(vec![q(1), q(1), Rational::from_ratio(1, 2)]);
        assert_eq!(f.eval_at(&q(0)), q(1));
        assert_eq!(f.eval_at(&q(1)), Rational::from_ratio(5, 2));
    }

    #[test]
    fn diagonal_substitution() {
        let x_plus_y = Series2::from_fn(3, |j, k| if j + k == 1 { q(1) } else { q(0) });
        assert!(x_plus_y.substitute_diagonal(&q(-1)).is_zero());
        let xy = Series2::from_fn(3, |j, k| if (j, k) == (1, 1) { q(1) } else { q(0) });
        assert_eq!(xy.substitute_diagonal(&q(1)).coeffs(), poly(&[0, 0, 1, 0]).coeffs());
    }

    #[test]
    fn bivariate_storage_triangle() {
        let f = Series2::from_fn(4, |j, k| q((10 * j + k) as i64));
        assert_eq!(f.coeff(3, 1), q(31));
        assert_eq!(f.coeff(0, 4), q(4));
        assert_eq!(f.coeff(3, 2), q(0));
        assert_eq!(f.swap().coeff(1, 3), q(31));
    }

    #[test]
    fn bivariate_outer_and_eval() {
        let f = poly(&[1, 2, 3]);
        let g = poly(&[4, 5, 6]);
        let fg = Series2::outer(&f, &g);
        assert_eq!(fg.coeff(1, 1), q(10));
        assert_eq!(fg.coeff(2, 1), q(0));
        let x = Rational::from_ratio(1, 3);
        assert_eq!(
            Series2::from_x(&f, 2).eval_at(&x, &q(7)),
            f.eval_at(&x)
        );
    }

    #[test]
    fn reciprocal_in_floats() {
        let f = Series::new(vec![Complex64::new(2.0, 1.0), Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0)]);
        let p = f.mul(&f.reciprocal().unwrap());
        assert!((p.coeff(0) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(p.coeff(1).norm() < 1e-15 && p.coeff(2).norm() < 1e-15);
    }
}
