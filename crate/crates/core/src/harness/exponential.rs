//! Exponential families and the Euler-type formulas.

use super::binomial::roots_of;
use super::compare::{close, series, series2, Verdict};
use super::{CheckKind::*, IdentityRecord, Sampler::*, Trial, INTEGRAL_TOL};
use crate::calculus::{antiderivative_series, antiderivative_x, antiderivative_y, lucas_derivative_series, lucas_derivative_x, lucas_derivative_y, lucas_integral};
use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational};
use crate::functions::{binomial_fn_series2, deformed_zero_series, fn_series, fn_value, multinomial_series, FnKind, DEFAULT_EPS};
use crate::lucas::{tri, SeqCache};
use crate::series::{Series, Series2};

type Q = Rational;
type G = GaussianRational;

pub(super) fn records() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord::new(
            "exp-pantograph-ode",
            "exp",
            SeriesExact,
            RationalRoots,
            "D exp(z,u) = exp(uz,u)",
            |t| {
                let c = t.roots()?;
                let u = t.q("u");
                let e = fn_series(FnKind::Exp, &u, &c, t.order)?;
                Ok(series(&lucas_derivative_series(&e, &c), &e.dilate(&u)))
            },
        ),
        IdentityRecord::new(
            "exp-dk",
            "exp",
            SeriesExact,
            RationalRoots,
            "D^k exp(az,u) = a^k u^C(k,2) exp(a u^k z, u)",
            |t| {
                let c = t.roots()?;
                let (u, a) = (t.q("u"), t.q("a"));
                let k = t.index("k", 0, 5);
                let e = fn_series(FnKind::Exp, &u, &c, t.order)?;
                let mut lhs = e.dilate(&a);
                for _ in 0..k {
                    lhs = lucas_derivative_series(&lhs, &c);
                }
                let rhs = e
                    .dilate(&(a.clone() * Field::pow(&u, k as u64)))
                    .scale(&(Field::pow(&a, k as u64) * Field::pow(&u, tri(k))));
                Ok(series(&lhs, &rhs))
            },
        ),
        IdentityRecord::new(
            "exp-antiderivative",
            "exp",
            SeriesExact,
            RationalRoots,
            "int exp(x,u) d_{s,t}x = u exp(x/u,u) + const",
            |t| {
                let c = t.roots()?;
                let u = t.q("u");
                let e = fn_series(FnKind::Exp, &u, &c, t.order)?;
                let lhs = antiderivative_series(&e, &c)?;
                let rhs = drop_constant(&e.dilate(&u.inv().unwrap()).scale(&u));
                Ok(series(&lhs, &rhs))
            },
        ),
        IdentityRecord::new(
            "exp-product",
            "exp",
            BivariateExact,
            RationalRoots,
            "exp(x (+)_{u,v} y) = exp(x,u) exp(y,v)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                let lhs = binomial_fn_series2(FnKind::Exp, &u, &v, &c, t.order2)?;
                Ok(series2(&lhs, &outer(FnKind::Exp, &u, FnKind::Exp, &v, &c, t.order2)?))
            },
        ),
        IdentityRecord::new(
            "exp-product-phi",
            "exp",
            BivariateExact,
            RationalRoots,
            "sum_n prod_{k<n}(phi^k x + phi'^k y) / {n}! = Exp(x) Exp'(y)",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                let order = t.order2;
                let mut lhs = Series2::zero(order);
                for n in 0..=order {
                    let f = c.factorial(n)?;
                    for (k, a) in crate::binomial::phi_product_coeffs(n, c.params())?.into_iter().enumerate() {
                        lhs.set_coeff(n - k, k, a / f.clone());
                    }
                }
                Ok(series2(&lhs, &outer(FnKind::Exp, &phi, FnKind::Exp, &phi_p, &c, order)?))
            },
        ),
        IdentityRecord::new(
            "exp-recip-pair",
            "exp",
            SeriesExact,
            RationalRoots,
            "Exp(z) Exp'(-z) = 1",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                let a = fn_series(FnKind::Exp, &phi, &c, t.order)?;
                let b = fn_series(FnKind::Exp, &phi_p, &c, t.order)?.dilate(&-Q::one());
                Ok(series(&a.mul(&b), &Series::one(t.order)))
            },
        ),
        IdentityRecord::new(
            "exp-recip-general",
            "exp",
            SeriesExact,
            RationalRoots,
            "exp(-x,u) = exp(0_{u,v} x) / exp(x,v)",
            |t| recip_general(t, false),
        )
        .guard("u != v")
        .refuted(),
        IdentityRecord::new(
            "exp-recip-general-corrected",
            "exp",
            SeriesExact,
            RationalRoots,
            "exp(x,u) exp(-x,v) = exp(0_{u,v} x)",
            |t| recip_general(t, true),
        ),
        IdentityRecord::new(
            "exp-binom-deriv-1",
            "exp",
            BivariateExact,
            RationalRoots,
            "D_x exp(ax (+)_{u,v} c) = a exp(aux (+)_{u,v} c)",
            |t| exp_binom(t, 1),
        ),
        IdentityRecord::new(
            "exp-binom-int-2",
            "exp",
            BivariateExact,
            RationalRoots,
            "int exp(ax (+)_{u,v} c) d_{s,t}x = (u/a) exp((a/u)x (+)_{u,v} c) + const",
            |t| exp_binom(t, 2),
        ),
        IdentityRecord::new(
            "exp-binom-deriv-3",
            "exp",
            BivariateExact,
            RationalRoots,
            "D_x exp(a (+)_{u,v} cx) = c exp(a (+)_{u,v} cvx)",
            |t| exp_binom(t, 3),
        ),
        IdentityRecord::new(
            "exp-binom-int-4",
            "exp",
            BivariateExact,
            RationalRoots,
            "int exp(a (+)_{u,v} cx) d_{s,t}x = (v/c) exp(a (+)_{u,v} (c/v)x) + const",
            |t| exp_binom(t, 4),
        ),
        IdentityRecord::new(
            "exp-alpha-beta-functional",
            "exp",
            SeriesExact,
            RationalRoots,
            "D exp((alpha (+)_{u,v} beta)x) = alpha exp((alpha u (+)_{u,v} beta phi)x) + beta exp((alpha phi' (+)_{u,v} beta v)x)",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                let (u, v, al, be) = (t.q("u"), t.q("v"), t.q("alpha"), t.q("beta"));
                let g = |a: &Q, b: &Q| pair_product(&u, a, &v, b, &c, t.order);
                let lhs = lucas_derivative_series(&g(&al, &be)?, &c);
                let rhs = g(&(al.clone() * u.clone()), &(be.clone() * phi))?
                    .scale(&al)
                    .add(&g(&(al.clone() * phi_p), &(be.clone() * v.clone()))?.scale(&be))?;
                Ok(series(&lhs, &rhs))
            },
        ),
        IdentityRecord::new(
            "exp-alpha-beta-proportional",
            "exp",
            SeriesExact,
            RationalRoots,
            "f(x) = exp((alpha (+) beta)x) solves D f(x) = alpha f(phi x) + beta f(phi' x)",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                let (al, be) = (t.q("alpha"), t.q("beta"));
                let f = pair_product(&phi, &al, &phi_p, &be, &c, t.order)?;
                let rhs = f.dilate(&phi).scale(&al).add(&f.dilate(&phi_p).scale(&be))?;
                Ok(series(&lucas_derivative_series(&f, &c), &rhs))
            },
        ),
        IdentityRecord::new(
            "exp-alpha-beta-integral",
            "exp",
            NumericResidual,
            Float,
            "int exp((alpha (+) beta)x) d_{s,t}x = alpha phi' / (alpha phi' + beta phi) exp((alpha/phi (+) beta/phi')x) + const",
            |t| alpha_beta_integral(t, false),
        )
        .tol(INTEGRAL_TOL)
        .guard("alpha phi' + beta phi != 0")
        .refuted(),
        IdentityRecord::new(
            "exp-alpha-beta-integral-corrected",
            "exp",
            NumericResidual,
            Float,
            "int exp((alpha (+) beta)x) d_{s,t}x = phi phi' / (alpha phi' + beta phi) exp((alpha/phi (+) beta/phi')x) + const",
            |t| alpha_beta_integral(t, true),
        )
        .tol(INTEGRAL_TOL)
        .guard("alpha phi' + beta phi != 0"),
        IdentityRecord::new(
            "exp-multinomial-product",
            "exp",
            SeriesExact,
            RationalRoots,
            "prod_{k=1..n} exp(x,u_k) = exp(n_u x)",
            |t| {
                let c = t.roots()?;
                let m = t.index("n", 1, 4);
                let us: Vec<Q> = (0..m).map(|i| t.q(&format!("u{}", i + 1))).collect();
                let mut prod = Series::one(t.order);
                for u in &us {
                    prod = prod.mul(&fn_series(FnKind::Exp, u, &c, t.order)?);
                }
                Ok(series(&prod, &multinomial_series(crate::functions::Shape::Exp, &us, &c, t.order)?))
            },
        ),
        IdentityRecord::new(
            "euler-i",
            "euler",
            SeriesExact,
            Gaussian,
            "exp(ix,u) = cos(x,u) + i sin(x,u)",
            |t| {
                let c = t.gaussian_roots()?;
                let u = t.g("u");
                let i = G::i();
                let lhs = fn_series(FnKind::Exp, &u, &c, t.order)?.dilate(&i);
                Ok(series(&lhs, &cos_plus_sin(&u, &i, &c, t.order)?))
            },
        ),
        IdentityRecord::new(
            "euler-neg",
            "euler",
            SeriesExact,
            RationalRoots,
            "exp(z,-u) = cos(z,u) + sin(z,u)",
            |t| {
                let c = t.roots()?;
                let u = t.q("u");
                let lhs = fn_series(FnKind::Exp, &-u.clone(), &c, t.order)?;
                Ok(series(&lhs, &cos_plus_sin(&u, &Q::one(), &c, t.order)?))
            },
        ),
        IdentityRecord::new(
            "exp-x-plus-iy-1",
            "euler",
            BivariateExact,
            Gaussian,
            "exp(x (+)_{u,v} iy) = exp(x,u) (cos(y,v) + i sin(y,v))",
            |t| {
                let c = t.gaussian_roots()?;
                let (u, v) = (t.g("u"), t.g("v"));
                let (i, one) = (G::i(), G::one());
                let lhs = binomial_fn_series2(FnKind::Exp, &u, &v, &c, t.order2)?.dilate(&one, &i);
                let rhs = Series2::outer(
                    &fn_series(FnKind::Exp, &u, &c, t.order2)?,
                    &cos_plus_sin(&v, &i, &c, t.order2)?,
                );
                Ok(series2(&lhs, &rhs))
            },
        ),
        IdentityRecord::new(
            "exp-x-plus-iy-2",
            "euler",
            BivariateExact,
            RationalRoots,
            "exp(x (+)_{u,-v} y) = exp(x,u) (cos(y,v) + sin(y,v))",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                let lhs = binomial_fn_series2(FnKind::Exp, &u, &-v.clone(), &c, t.order2)?;
                let rhs = Series2::outer(
                    &fn_series(FnKind::Exp, &u, &c, t.order2)?,
                    &cos_plus_sin(&v, &Q::one(), &c, t.order2)?,
                );
                Ok(series2(&lhs, &rhs))
            },
        ),
        IdentityRecord::new(
            "rep-sin",
            "euler",
            SeriesExact,
            Gaussian,
            "sin(x,u) = (exp(ix,u) - exp(-ix,u)) / 2i",
            |t| {
                let c = t.gaussian_roots()?;
                let u = t.g("u");
                let i = G::i();
                let e = fn_series(FnKind::Exp, &u, &c, t.order)?;
                let rhs = e.dilate(&i).sub(&e.dilate(&-i.clone()))?.scale(&Field::inv(&(G::from_i64(2) * i)).unwrap());
                Ok(series(&fn_series(FnKind::Sin, &u, &c, t.order)?, &rhs))
            },
        ),
        IdentityRecord::new(
            "rep-sin-real",
            "euler",
            SeriesExact,
            RationalRoots,
            "sin(x,u) = (exp(x,-u) - exp(-x,-u)) / 2",
            |t| {
                let c = t.roots()?;
                let u = t.q("u");
                let e = fn_series(FnKind::Exp, &-u.clone(), &c, t.order)?;
                let rhs = e.sub(&e.dilate(&-Q::one()))?.scale(&Q::from_ratio(1, 2));
                Ok(series(&fn_series(FnKind::Sin, &u, &c, t.order)?, &rhs))
            },
        ),
        IdentityRecord::new(
            "rep-cos",
            "euler",
            SeriesExact,
            Gaussian,
            "cos(x,u) = (exp(ix,u) + exp(-ix,u)) / 2",
            |t| {
                let c = t.gaussian_roots()?;
                let u = t.g("u");
                let i = G::i();
                let e = fn_series(FnKind::Exp, &u, &c, t.order)?;
                let rhs = e.dilate(&i).add(&e.dilate(&-i))?.scale(&G::from_ratio(1, 2));
                Ok(series(&fn_series(FnKind::Cos, &u, &c, t.order)?, &rhs))
            },
        ),
        IdentityRecord::new(
            "rep-cos-real",
            "euler",
            SeriesExact,
            RationalRoots,
            "cos(x,u) = (exp(x,u) + exp(-x,u)) / 2",
            |t| rep_cos_real(t, false),
        )
        .refuted(),
        IdentityRecord::new(
            "rep-cos-real-corrected",
            "euler",
            SeriesExact,
            RationalRoots,
            "cos(x,u) = (exp(x,-u) + exp(-x,-u)) / 2",
            |t| rep_cos_real(t, true),
        ),
        IdentityRecord::new(
            "rep-sin-binom",
            "euler",
            BivariateExact,
            Gaussian,
            "sin(x (+)_{u,v} y) = (exp(ix (+)_{u,v} iy) - exp((-ix) (+)_{u,v} (-iy))) / 2i",
            |t| rep_binom(t, FnKind::Sin),
        ),
        IdentityRecord::new(
            "rep-cos-binom",
            "euler",
            BivariateExact,
            Gaussian,
            "cos(x (+)_{u,v} y) = (exp(ix (+)_{u,v} iy) + exp((-ix) (+)_{u,v} (-iy))) / 2",
            |t| rep_binom(t, FnKind::Cos),
        ),
        IdentityRecord::new(
            "exp-binom-neg-uv",
            "euler",
            BivariateExact,
            RationalRoots,
            "exp(x (+)_{-u,-v} y) = cos(x (-)_{u,v} y) + sin(x (+)_{u,v} y)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                let n = t.order2;
                let one = Q::one();
                let lhs = binomial_fn_series2(FnKind::Exp, &-u.clone(), &-v.clone(), &c, n)?;
                let cos = binomial_fn_series2(FnKind::Cos, &u, &v, &c, n)?.dilate(&one, &-one.clone());
                let sin = binomial_fn_series2(FnKind::Sin, &u, &v, &c, n)?;
                Ok(series2(&lhs, &cos.add(&sin)?))
            },
        ),
    ]
}

/// `f` with its constant coefficient removed.
pub(super) fn drop_constant<F: Field>(f: &Series<F>) -> Series<F> {
    let mut out = f.clone();
    out.set_coeff(0, F::zero());
    out
}

/// `F(x, y) - F(0, y)`.
fn drop_x_slice<F: Field>(f: &Series2<F>) -> Series2<F> {
    Series2::from_fn(f.order(), |j, k| if j == 0 { F::zero() } else { f.coeff(j, k) })
}

/// `f(x, u) g(y, v)` for two basic kinds.
pub(super) fn outer<F: Field>(
    f: FnKind,
    u: &F,
    g: FnKind,
    v: &F,
    c: &SeqCache<F>,
    order: usize,
) -> Result<Series2<F>> {
    Ok(Series2::outer(&fn_series(f, u, c, order)?, &fn_series(g, v, c, order)?))
}

/// `cos(z,u) + w sin(z,u)`.
pub(super) fn cos_plus_sin<F: Field>(u: &F, w: &F, c: &SeqCache<F>, order: usize) -> Result<Series<F>> {
    fn_series(FnKind::Cos, u, c, order)?.add(&fn_series(FnKind::Sin, u, c, order)?.scale(w))
}

/// `exp(a x, u) exp(b x, v)`, i.e. `exp((a (+)_{u,v} b) x)`.
fn pair_product<F: Field>(u: &F, a: &F, v: &F, b: &F, c: &SeqCache<F>, order: usize) -> Result<Series<F>> {
    Ok(fn_series(FnKind::Exp, u, c, order)?
        .dilate(a)
        .mul(&fn_series(FnKind::Exp, v, c, order)?.dilate(b)))
}

fn recip_general(t: &mut Trial, corrected: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    if !corrected {
        // both sides agree when u = v
        t.require(u != v)?;
    }
    let minus = -Q::one();
    let eu = fn_series(FnKind::Exp, &u, &c, t.order)?;
    let ev = fn_series(FnKind::Exp, &v, &c, t.order)?;
    let lhs = if corrected {
        eu.mul(&ev.dilate(&minus))
    } else {
        eu.dilate(&minus).mul(&ev)
    };
    let rhs = deformed_zero_series(crate::functions::Shape::Exp, &u, &v, &c, t.order)?;
    Ok(series(&lhs, &rhs))
}

fn exp_binom(t: &mut Trial, item: u8) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let a = t.q(if item <= 2 { "a" } else { "c" });
    let one = Q::one();
    // one order of headroom so derivatives and antiderivatives still cover order2
    let e = binomial_fn_series2(FnKind::Exp, &u, &v, &c, t.order2 + 1)?;
    match item {
        1 => {
            let lhs = lucas_derivative_x(&e.dilate(&a, &one), &c);
            Ok(series2(&lhs, &e.dilate(&(a.clone() * u.clone()), &one).scale(&a)))
        }
        2 => {
            let lhs = antiderivative_x(&e.dilate(&a, &one), &c)?;
            let rhs = e.dilate(&(a.clone() / u.clone()), &one).scale(&(u.clone() / a.clone()));
            Ok(series2(&lhs, &drop_x_slice(&rhs)))
        }
        3 => {
            let lhs = lucas_derivative_y(&e.dilate(&one, &a), &c);
            Ok(series2(&lhs, &e.dilate(&one, &(a.clone() * v.clone())).scale(&a)))
        }
        _ => {
            let lhs = antiderivative_y(&e.dilate(&one, &a), &c)?;
            let rhs = e.dilate(&one, &(a.clone() / v.clone())).scale(&(v.clone() / a.clone()));
            Ok(series2(&lhs, &drop_x_slice(&rhs.swap()).swap()))
        }
    }
}

fn alpha_beta_integral(t: &mut Trial, corrected: bool) -> Result<Verdict> {
    let c = t.float_roots()?;
    let (phi, phi_p) = roots_of(&c);
    let al = t.uniform("alpha", -1.0, 1.0);
    let be = t.uniform("beta", -1.0, 1.0);
    let b = t.uniform("b", 0.1, 0.5);
    let den = al * phi_p + be * phi;
    t.require(den.abs() > 1e-2)?;
    let exp = |z: f64, u: f64| fn_value(FnKind::Exp, z, u, &c, DEFAULT_EPS).map(|e| e.value);
    let integrand = |x: &f64| match (exp(al * x, phi), exp(be * x, phi_p)) {
        (Ok(p), Ok(q)) => p * q,
        _ => f64::NAN,
    };
    let lhs = lucas_integral(&integrand, 0.0, b, c.params(), DEFAULT_EPS)?;
    let antiderivative = exp(al * b / phi, phi)? * exp(be * b / phi_p, phi_p)? - 1.0;
    let constant = if corrected { phi * phi_p } else { al * phi_p } / den;
    if !lhs.is_finite() {
        return Err(Error::NonConvergent { terms: 0 });
    }
    Ok(close(lhs, constant * antiderivative, INTEGRAL_TOL))
}

fn rep_cos_real(t: &mut Trial, corrected: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let u = t.q("u");
    let w = if corrected { -u.clone() } else { u.clone() };
    let e = fn_series(FnKind::Exp, &w, &c, t.order)?;
    let rhs = e.add(&e.dilate(&-Q::one()))?.scale(&Q::from_ratio(1, 2));
    Ok(series(&fn_series(FnKind::Cos, &u, &c, t.order)?, &rhs))
}

fn rep_binom(t: &mut Trial, kind: FnKind) -> Result<Verdict> {
    let c = t.gaussian_roots()?;
    let (u, v) = (t.g("u"), t.g("v"));
    let i = G::i();
    let n = t.order2;
    let e = binomial_fn_series2(FnKind::Exp, &u, &v, &c, n)?;
    let plus = e.dilate(&i, &i);
    let minus = e.dilate(&-i.clone(), &-i.clone());
    let rhs = if kind == FnKind::Sin {
        plus.sub(&minus)?.scale(&Field::inv(&(G::from_i64(2) * i)).unwrap())
    } else {
        plus.add(&minus)?.scale(&G::from_ratio(1, 2))
    };
    Ok(series2(&binomial_fn_series2(kind, &u, &v, &c, n)?, &rhs))
}
