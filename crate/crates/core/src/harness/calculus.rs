//! Lucas derivative rules and the Lucas integral.

use super::binomial::roots_of;
use super::compare::{close, exact, series, Verdict};
use super::{CheckKind::*, IdentityRecord, Sampler::*, Trial, INTEGRAL_TOL};
use crate::calculus::{
    antiderivative_series, integration_by_parts_residual, lucas_derivative_series, lucas_integral, Polynomial, RealFn,
};
use crate::error::Result;
use crate::field::{Field, Rational};
use crate::lucas::SeqCache;
use crate::series::Series;

type Q = Rational;

pub(super) fn records() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord::new(
            "calc-linearity",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D(a f + g) = a Df + Dg",
            |t| {
                let c = t.roots()?;
                let a = t.q("a");
                let (f, g) = (random_series(t), random_series(t));
                let lhs = lucas_derivative_series(&f.scale(&a).add(&g)?, &c);
                let rhs = lucas_derivative_series(&f, &c)
                    .scale(&a)
                    .add(&lucas_derivative_series(&g, &c))?;
                Ok(series(&lhs, &rhs))
            },
        ),
        IdentityRecord::new(
            "calc-power-rule",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D^k x^n = {n}!/{n-k}! x^(n-k)",
            |t| {
                let c = t.roots()?;
                let n = t.index("n", 0, t.order);
                let k = t.index("k", 0, n);
                let mut p = Polynomial::<Q>::monomial(n);
                for _ in 0..k {
                    p = p.lucas_derivative(&c);
                }
                let expected = c.factorial(n)? / c.factorial(n - k)?;
                Ok(Verdict::all([
                    exact(&Q::from_i64(p.degree() as i64), &Q::from_i64((n - k) as i64)),
                    exact(&p.coeffs[n - k], &expected),
                ]))
            },
        ),
        IdentityRecord::new(
            "calc-inverse",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D int f d_{s,t}x = f",
            |t| {
                let c = t.roots()?;
                let f = random_series(t);
                let back = lucas_derivative_series(&antiderivative_series(&f, &c)?, &c);
                Ok(series(&back, &f))
            },
        ),
        IdentityRecord::new(
            "calc-product-rule-1",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D(fg)(x) = f(phi x) Dg(x) + g(phi' x) Df(x)",
            |t| product_rule(t, false),
        ),
        IdentityRecord::new(
            "calc-product-rule-2",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D(fg)(x) = f(phi' x) Dg(x) + g(phi x) Df(x)",
            |t| product_rule(t, true),
        ),
        IdentityRecord::new(
            "calc-quotient-rule-1",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D(f/g)(x) = (g(phi x) Df(x) - f(phi x) Dg(x)) / (g(phi x) g(phi' x))",
            |t| quotient_rule(t, false),
        )
        .guard("g(0) != 0"),
        IdentityRecord::new(
            "calc-quotient-rule-2",
            "calculus",
            SeriesExact,
            RationalRoots,
            "D(f/g)(x) = (g(phi' x) Df(x) - f(phi' x) Dg(x)) / (g(phi x) g(phi' x))",
            |t| quotient_rule(t, true),
        )
        .guard("g(0) != 0"),
        IdentityRecord::new(
            "calc-fundamental",
            "calculus",
            NumericResidual,
            Float,
            "int_a^b f(x) d_{s,t}x = F(b) - F(a), DF = f",
            |t| {
                let c = t.float_roots()?;
                let f = random_polynomial(t, "f");
                let (a, b) = interval(t);
                let mut coeffs = vec![0.0];
                for (n, a_n) in f.coeffs.iter().enumerate() {
                    coeffs.push(a_n / c.u(n + 1));
                }
                let big_f = Polynomial::new(coeffs);
                let lhs = lucas_integral(&f, a, b, c.params(), 1e-15)?;
                Ok(close(lhs, big_f.eval(&b) - big_f.eval(&a), INTEGRAL_TOL))
            },
        )
        .tol(INTEGRAL_TOL)
        .guard("0 <= a < b <= 1"),
        IdentityRecord::new(
            "calc-parts",
            "calculus",
            NumericResidual,
            Float,
            "int_a^b Df(x) g(phi' x) d_{s,t}x = [f g]_a^b - int_a^b f(phi x) Dg(x) d_{s,t}x",
            |t| {
                let c = t.float_roots()?;
                let (f, g) = (random_polynomial(t, "f"), random_polynomial(t, "g"));
                let (a, b) = interval(t);
                let residual = integration_by_parts_residual(&f, &g, a, b, c.params(), 1e-15)?;
                Ok(close(residual, 0.0, INTEGRAL_TOL))
            },
        )
        .tol(INTEGRAL_TOL)
        .guard("0 <= a < b <= 1"),
    ]
}

/// A series with every coefficient drawn from the rational pool.
fn random_series(t: &mut Trial) -> Series<Q> {
    let order = t.order;
    Series::from_fn(order, |_| t.q("coeff"))
}

/// Degree 0..=5, coefficients in `[-1, 1]`.
fn random_polynomial(t: &mut Trial, name: &str) -> Polynomial<f64> {
    let degree = t.index(&format!("deg {name}"), 0, 5);
    Polynomial::new((0..=degree).map(|n| t.uniform(&format!("{name}{n}"), -1.0, 1.0)).collect())
}

fn interval(t: &mut Trial) -> (f64, f64) {
    let a = t.uniform("a", 0.0, 1.0);
    let b = t.uniform("b", 0.0, 1.0);
    (a.min(b), a.max(b))
}

/// `f(phi x)` and `f(phi' x)`, in the order the second rule reads them.
fn dilations(c: &SeqCache<Q>, f: &Series<Q>, swap: bool) -> (Series<Q>, Series<Q>) {
    let (phi, phi_p) = roots_of(c);
    let (a, b) = if swap { (phi_p, phi) } else { (phi, phi_p) };
    (f.dilate(&a), f.dilate(&b))
}

fn product_rule(t: &mut Trial, swap: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (f, g) = (random_series(t), random_series(t));
    let lhs = lucas_derivative_series(&f.mul(&g), &c);
    let (f_first, _) = dilations(&c, &f, swap);
    let (_, g_second) = dilations(&c, &g, swap);
    let rhs = f_first
        .mul(&lucas_derivative_series(&g, &c))
        .add(&g_second.mul(&lucas_derivative_series(&f, &c)))?;
    Ok(series(&lhs, &rhs))
}

fn quotient_rule(t: &mut Trial, swap: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (f, g) = (random_series(t), random_series(t));
    let lhs = lucas_derivative_series(&f.mul(&g.reciprocal()?), &c);
    let (g_hi, g_lo) = dilations(&c, &g, false);
    // the first rule evaluates the numerator at phi x, the second at phi' x
    let at = if swap { &g_lo } else { &g_hi };
    let f_at = if swap { dilations(&c, &f, false).1 } else { dilations(&c, &f, false).0 };
    let numerator = at
        .mul(&lucas_derivative_series(&f, &c))
        .sub(&f_at.mul(&lucas_derivative_series(&g, &c)))?;
    let rhs = numerator.mul(&g_hi.mul(&g_lo).reciprocal()?);
    Ok(series(&lhs, &rhs))
}
