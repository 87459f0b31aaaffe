//! (u,v)-deformed Lucasnomial powers, the deformed zero, the product form
//! and u-deformed multinomial numbers.

use crate::error::Result;
use crate::field::Field;
use crate::lucas::{tri, LucasParams, SeqCache};
use crate::series::Series2;

/// Coefficients of `(x (+)_{u,v} y)^(n)` in the basis `x^(n-k) y^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformedBinomial<F> {
    pub n: usize,
    pub u: F,
    pub v: F,
    /// `c_k = {n choose k} u^C(n-k,2) v^C(k,2)`.
    pub coeffs: Vec<F>,
}

impl<F: Field> DeformedBinomial<F> {
    pub fn new(n: usize, u: F, v: F, cache: &SeqCache<F>) -> Result<Self> {
        let row = cache.row(n)?;
        let coeffs = row
            .into_iter()
            .enumerate()
            .map(|(k, c)| c * u.pow(tri(n - k)) * v.pow(tri(k)))
            .collect();
        Ok(DeformedBinomial { n, u, v, coeffs })
    }

    /// `sum_k c_k x^(n-k) y^k`.
    pub fn value(&self, x: &F, y: &F) -> F {
        self.coeffs.iter().enumerate().fold(F::zero(), |acc, (k, c)| {
            acc + c.clone() * x.pow((self.n - k) as u64) * y.pow(k as u64)
        })
    }

    /// The `(-)` variant: `y -> -y`.
    pub fn minus_value(&self, x: &F, y: &F) -> F {
        self.value(x, &-y.clone())
    }

    /// Homogeneous degree-`n` slice as a bivariate series of order `order`.
    pub fn to_series2(&self, order: usize) -> Series2<F> {
        Series2::from_fn(order, |j, k| {
            if j + k == self.n {
                self.coeffs[k].clone()
            } else {
                F::zero()
            }
        })
    }
}

/// `(x (+)_{u,v} y)^(n)` at a point.
pub fn deformed_power_value<F: Field>(
    n: usize,
    x: &F,
    y: &F,
    u: &F,
    v: &F,
    cache: &SeqCache<F>,
) -> Result<F> {
    Ok(DeformedBinomial::new(n, u.clone(), v.clone(), cache)?.value(x, y))
}

/// `prod_{k=0}^{n-1} (phi^k x + phi'^k y)`.
pub fn phi_product_power<F: Field>(n: usize, x: &F, y: &F, params: &LucasParams<F>) -> Result<F> {
    let (phi, phi_prime) = params.roots()?;
    let mut acc = F::one();
    let (mut a, mut b) = (F::one(), F::one());
    for _ in 0..n {
        acc = acc * (a.clone() * x.clone() + b.clone() * y.clone());
        a = a * phi.clone();
        b = b * phi_prime.clone();
    }
    Ok(acc)
}

/// Coefficients of the product form, expanded factor by factor.
pub fn phi_product_coeffs<F: Field>(n: usize, params: &LucasParams<F>) -> Result<Vec<F>> {
    let (phi, phi_prime) = params.roots()?;
    // poly[k] is the coefficient of x^(m-k) y^k after m factors.
    let mut poly = vec![F::one()];
    for m in 0..n {
        let a = phi.pow(m as u64);
        let b = phi_prime.pow(m as u64);
        let mut next = vec![F::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] = next[k].clone() + a.clone() * c.clone();
            next[k + 1] = next[k + 1].clone() + b.clone() * c.clone();
        }
        poly = next;
    }
    Ok(poly)
}

/// `0_{u,v}^(n) = sum_k (-1)^k {n choose k} u^C(n-k,2) v^C(k,2)`.
pub fn deformed_zero<F: Field>(n: usize, u: &F, v: &F, cache: &SeqCache<F>) -> Result<F> {
    let b = DeformedBinomial::new(n, u.clone(), v.clone(), cache)?;
    Ok(b.minus_value(&F::one(), &F::one()))
}

/// The numbers `m_(u_1..u_m)^(n)` for `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultinomialNumber<F> {
    pub us: Vec<F>,
    pub values: Vec<F>,
}

impl<F: Field> MultinomialNumber<F> {
    /// Direct composition sum for every `n <= max_n`.
    pub fn new(us: &[F], max_n: usize, cache: &SeqCache<F>) -> Result<Self> {
        let values = (0..=max_n)
            .map(|n| multinomial_number(us, n, cache))
            .collect::<Result<Vec<F>>>()?;
        Ok(MultinomialNumber {
            us: us.to_vec(),
            values,
        })
    }

    pub fn arity(&self) -> usize {
        self.us.len()
    }

    pub fn get(&self, n: usize) -> Option<&F> {
        self.values.get(n)
    }
}

/// `sum_{k_1+...+k_m=n} ({n}! / prod {k_i}!) prod u_i^C(k_i,2)`.
///
/// An empty weight list is the special one: `1` for `n = 0`, else `0`.
pub fn multinomial_number<F: Field>(us: &[F], n: usize, cache: &SeqCache<F>) -> Result<F> {
    if us.is_empty() {
        return Ok(if n == 0 { F::one() } else { F::zero() });
    }
    let top = cache.factorial(n)?;
    let weights: Vec<Vec<F>> = us
        .iter()
        .map(|u| {
            (0..=n)
                .map(|k| Ok(u.pow(tri(k)) / cache.factorial(k)?))
                .collect::<Result<Vec<F>>>()
        })
        .collect::<Result<_>>()?;
    // Convolve the per-part weight polynomials.
    let mut acc = weights[0].clone();
    for w in &weights[1..] {
        let mut next = vec![F::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in w.iter().enumerate().take(n + 1 - i) {
                next[i + j] = next[i + j].clone() + a.clone() * b.clone();
            }
        }
        acc = next;
    }
    Ok(top * acc[n].clone())
}

/// The same numbers by repeated deformed addition
/// `(m+1)^(n) = sum_k {n choose k} m^(n-k) u_(m+1)^C(k,2)`.
pub fn multinomial_inductive<F: Field>(us: &[F], max_n: usize, cache: &SeqCache<F>) -> Result<Vec<F>> {
    let Some((first, rest)) = us.split_first() else {
        return Ok((0..=max_n)
            .map(|n| if n == 0 { F::one() } else { F::zero() })
            .collect());
    };
    let mut values: Vec<F> = (0..=max_n).map(|n| first.pow(tri(n))).collect();
    for u in rest {
        let mut next = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let row = cache.row(n)?;
            let mut acc = F::zero();
            for (k, c) in row.into_iter().enumerate() {
                acc = acc + c * values[n - k].clone() * u.pow(tri(k));
            }
            next.push(acc);
        }
        values = next;
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn cache(s: i64, t: i64) -> SeqCache<Rational> {
        SeqCache::new(LucasParams::new(q(s, 1), q(t, 1)).unwrap())
    }

    #[test]
    fn low_rows() {
        let c = cache(3, 5);
        let (u, v) = (q(2, 3), q(-7, 2));
        let b0 = DeformedBinomial::new(0, u.clone(), v.clone(), &c).unwrap();
        assert_eq!(b0.coeffs, vec![q(1, 1)]);
        let b2 = DeformedBinomial::new(2, u.clone(), v.clone(), &c).unwrap();
        assert_eq!(b2.coeffs, vec![u.clone(), q(3, 1), v.clone()]);
        let b = DeformedBinomial::new(2, q(2, 1), q(3, 1), &cache(1, 1)).unwrap();
        assert_eq!(b.value(&q(1, 1), &q(1, 1)), q(6, 1));
    }

    #[test]
    fn spot_values() {
        let c = cache(1, 1);
        let (u, v) = (q(1, 2), q(5, 1));
        assert_eq!(
            deformed_power_value(1, &q(2, 1), &q(5, 1), &u, &v, &c).unwrap(),
            q(7, 1)
        );
        assert_eq!(
            deformed_power_value(3, &q(1, 1), &q(0, 1), &u, &v, &c).unwrap(),
            u.pow(3)
        );
        // fibonomial row 4 is 1 3 6 3 1
        let one = q(1, 1);
        assert_eq!(
            deformed_power_value(4, &one, &one, &one, &one, &c).unwrap(),
            q(14, 1)
        );
    }

    #[test]
    fn zero_limits_keep_linear_terms() {
        let c = cache(2, 1);
        let z = q(0, 1);
        let b = DeformedBinomial::new(3, z.clone(), z.clone(), &c).unwrap();
        assert!(b.coeffs.iter().all(|c| c == &z));
        let b1 = DeformedBinomial::new(1, z.clone(), z.clone(), &c).unwrap();
        assert_eq!(b1.coeffs, vec![q(1, 1), q(1, 1)]);
    }

    #[test]
    fn product_form() {
        let p = LucasParams::from_roots(q(2, 1), q(-1, 1)).unwrap();
        let one = q(1, 1);
        assert_eq!(phi_product_power(0, &one, &one, &p).unwrap(), one);
        assert_eq!(phi_product_power(1, &q(3, 1), &q(4, 1), &p).unwrap(), q(7, 1));
        assert_eq!(phi_product_power(3, &one, &one, &p).unwrap(), q(10, 1));
        let c = SeqCache::new(p.clone());
        let (phi, phi_p) = (q(2, 1), q(-1, 1));
        assert_eq!(
            deformed_power_value(3, &one, &one, &phi, &phi_p, &c).unwrap(),
            q(10, 1)
        );
        let b = DeformedBinomial::new(5, phi, phi_p, &c).unwrap();
        assert_eq!(b.coeffs, phi_product_coeffs(5, &p).unwrap());
    }

    #[test]
    fn deformed_zero_values() {
        let c = cache(3, 2);
        let (u, v) = (q(4, 1), q(-1, 3));
        assert_eq!(deformed_zero(1, &u, &v, &c).unwrap(), q(0, 1));
        assert_eq!(deformed_zero(2, &u, &v, &c).unwrap(), u.clone() - q(3, 1) + v.clone());
        let p = LucasParams::from_roots(q(3, 2), q(-1, 4)).unwrap();
        let c = SeqCache::new(p);
        for n in 1..8 {
            assert_eq!(deformed_zero(n, &q(3, 2), &q(-1, 4), &c).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn multinomial_small_cases() {
        let c = cache(2, 3);
        let (u1, u2) = (q(5, 1), q(-2, 7));
        let us = [u1.clone(), u2.clone()];
        assert_eq!(multinomial_number(&us, 0, &c).unwrap(), q(1, 1));
        assert_eq!(multinomial_number(&us, 2, &c).unwrap(), u1.clone() + q(2, 1) + u2);
        assert_eq!(multinomial_number(std::slice::from_ref(&u1), 4, &c).unwrap(), u1.pow(6));
        let direct = MultinomialNumber::new(&[q(1, 2), q(3, 1), q(-1, 1)], 6, &c).unwrap();
        let inductive = multinomial_inductive(&[q(1, 2), q(3, 1), q(-1, 1)], 6, &c).unwrap();
        assert_eq!(direct.values, inductive);
        assert_eq!(direct.arity(), 3);
    }
}
