//! Trigonometric identities: derivatives, parity, addition, double angle and
//! the Pythagorean family.

use super::binomial::roots_of;
use super::compare::{close, series, series2, Verdict};
use super::exponential::outer;
use super::{CheckKind::*, IdentityRecord, Sampler::*, Trial, NUMERIC_TOL};
use crate::calculus::{lucas_derivative_fn, lucas_derivative_series};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::functions::{
    binomial_fn_series2, binomial_fn_value, deformed_zero_series, fn_series, fn_value, multinomial_fn_value,
    multinomial_series, tilde_fn_value, FnKind, Shape, DEFAULT_EPS,
};
use crate::lucas::SeqCache;
use crate::series::Series;

type Q = Rational;

pub(super) fn records() -> Vec<IdentityRecord> {
    let mut out = vec![
        IdentityRecord::new(
            "trig-deriv-1",
            "trig",
            SeriesExact,
            RationalRoots,
            "D sin(x,u) = cos(ux,u)",
            |t| {
                let (c, u) = (t.roots()?, t.q("u"));
                let lhs = lucas_derivative_series(&fn_series(FnKind::Sin, &u, &c, t.order)?, &c);
                Ok(series(&lhs, &fn_series(FnKind::Cos, &u, &c, t.order)?.dilate(&u)))
            },
        ),
        IdentityRecord::new(
            "trig-deriv-2",
            "trig",
            SeriesExact,
            RationalRoots,
            "D cos(x,u) = -sin(ux,u)",
            |t| {
                let (c, u) = (t.roots()?, t.q("u"));
                let lhs = lucas_derivative_series(&fn_series(FnKind::Cos, &u, &c, t.order)?, &c);
                Ok(series(&lhs, &fn_series(FnKind::Sin, &u, &c, t.order)?.dilate(&u).neg()))
            },
        ),
        IdentityRecord::new(
            "trig-deriv-3",
            "trig",
            NumericResidual,
            Float,
            "D tan(x,u) = cos(ux,u)/cos(phi x,u) + tan(phi' x,u) sin(ux,u)/cos(phi x,u)",
            |t| trig_derivative(t, FnKind::Tan),
        ),
        IdentityRecord::new(
            "trig-deriv-4",
            "trig",
            NumericResidual,
            Float,
            "D cot(x,u) = -sin(ux,u)/sin(phi x,u) - cot(phi' x,u) cos(ux,u)/sin(phi x,u)",
            |t| trig_derivative(t, FnKind::Cot),
        )
        .guard("x != 0"),
        IdentityRecord::new(
            "trig-deriv-5",
            "trig",
            NumericResidual,
            Float,
            "D sec(x,u) = sin(ux,u) / (cos(phi x,u) cos(phi' x,u))",
            |t| trig_derivative(t, FnKind::Sec),
        ),
        IdentityRecord::new(
            "trig-deriv-6",
            "trig",
            NumericResidual,
            Float,
            "D csc(x,u) = -cos(ux,u) / (sin(phi x,u) sin(phi' x,u))",
            |t| trig_derivative(t, FnKind::Csc),
        )
        .guard("x != 0"),
        IdentityRecord::new(
            "trig-deriv2-1",
            "trig",
            SeriesExact,
            RationalRoots,
            "D^2 sin(x,u) = -u sin(u^2 x,u)",
            |t| second_derivative(t, FnKind::Sin),
        ),
        IdentityRecord::new(
            "trig-deriv2-2",
            "trig",
            SeriesExact,
            RationalRoots,
            "D^2 cos(x,u) = -u cos(u^2 x,u)",
            |t| second_derivative(t, FnKind::Cos),
        ),
    ];
    let parity: [(&'static str, &'static str, super::RunFn); 4] = [
        ("parity-sin", "sin(-z,u) = -sin(z,u)", |t| parity_series(t, FnKind::Sin, true)),
        ("parity-cos", "cos(-z,u) = cos(z,u)", |t| parity_series(t, FnKind::Cos, false)),
        ("parity-tan", "tan(-z,u) = -tan(z,u)", |t| parity_series(t, FnKind::Tan, true)),
        ("parity-sec", "sec(-z,u) = sec(z,u)", |t| parity_series(t, FnKind::Sec, false)),
    ];
    for (id, anchor, run) in parity {
        out.push(IdentityRecord::new(id, "trig", SeriesExact, RationalRoots, anchor, run));
    }
    out.extend([
        IdentityRecord::new(
            "parity-csc",
            "trig",
            NumericResidual,
            Float,
            "csc(-z,u) = -csc(z,u)",
            |t| parity_numeric(t, FnKind::Csc, true),
        )
        .guard("z != 0"),
        IdentityRecord::new(
            "parity-cot",
            "trig",
            NumericResidual,
            Float,
            "cot(-z,u) = cot(z,u)",
            |t| parity_numeric(t, FnKind::Cot, false),
        )
        .guard("z != 0")
        .refuted(),
        IdentityRecord::new(
            "parity-cot-odd",
            "trig",
            NumericResidual,
            Float,
            "cot(-z,u) = -cot(z,u)",
            |t| parity_numeric(t, FnKind::Cot, true),
        )
        .guard("z != 0"),
        IdentityRecord::new(
            "add-sin-plus",
            "trig",
            BivariateExact,
            RationalRoots,
            "sin(x (+)_{u,v} y) = sin(x,u) cos(y,v) + cos(x,u) sin(y,v)",
            |t| addition(t, FnKind::Sin, false),
        ),
        IdentityRecord::new(
            "add-sin-minus",
            "trig",
            BivariateExact,
            RationalRoots,
            "sin(x (-)_{u,v} y) = sin(x,u) cos(y,v) - cos(x,u) sin(y,v)",
            |t| addition(t, FnKind::Sin, true),
        ),
        IdentityRecord::new(
            "add-cos-plus",
            "trig",
            BivariateExact,
            RationalRoots,
            "cos(x (+)_{u,v} y) = cos(x,u) cos(y,v) - sin(x,u) sin(y,v)",
            |t| addition(t, FnKind::Cos, false),
        ),
        IdentityRecord::new(
            "add-cos-minus",
            "trig",
            BivariateExact,
            RationalRoots,
            "cos(x (-)_{u,v} y) = cos(x,u) cos(y,v) + sin(x,u) sin(y,v)",
            |t| addition(t, FnKind::Cos, true),
        ),
        IdentityRecord::new(
            "add-tan-plus",
            "trig",
            NumericResidual,
            Float,
            "tan(x (+)_{u,v} y) = (tan(x,u) + tan(y,v)) / (1 - tan(x,u) tan(y,v))",
            |t| tan_addition(t, false),
        ),
        IdentityRecord::new(
            "add-tan-minus",
            "trig",
            NumericResidual,
            Float,
            "tan(x (-)_{u,v} y) = (tan(x,u) - tan(y,v)) / (1 + tan(x,u) tan(y,v))",
            |t| tan_addition(t, true),
        ),
        IdentityRecord::new(
            "coro4-1",
            "trig",
            SeriesExact,
            RationalRoots,
            "sin(x,u) cos(x,v) - cos(x,u) sin(x,v) = sin(0_{u,v} x)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                let n = t.order;
                let lhs = cross(&u, &v, &c, n, FnKind::Sin, FnKind::Cos)?
                    .sub(&cross(&u, &v, &c, n, FnKind::Cos, FnKind::Sin)?)?;
                let zero = deformed_zero_series(Shape::Sin, &u, &v, &c, n)?;
                // the same series as sin(x (-)_{u,v} x)
                let diagonal = binomial_fn_series2(FnKind::Sin, &u, &v, &c, t.order2)?
                    .substitute_diagonal(&-Q::one());
                Ok(Verdict::all([series(&lhs, &zero), series(&diagonal, &zero)]))
            },
        ),
        IdentityRecord::new(
            "coro4-2",
            "trig",
            SeriesExact,
            RationalRoots,
            "Sin(x) Cos'(x) - Cos(x) Sin'(x) = 0",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                let n = t.order;
                let lhs = cross(&phi, &phi_p, &c, n, FnKind::Sin, FnKind::Cos)?
                    .sub(&cross(&phi, &phi_p, &c, n, FnKind::Cos, FnKind::Sin)?)?;
                Ok(series(&lhs, &Series::zero(n)))
            },
        ),
        IdentityRecord::new(
            "double-angle-1",
            "trig",
            SeriesExact,
            RationalRoots,
            "sin(2_{u,v} x) = sin(x,u) cos(x,v) + cos(x,u) sin(x,v)",
            |t| double_angle(t, FnKind::Sin, false),
        ),
        IdentityRecord::new(
            "double-angle-2",
            "trig",
            SeriesExact,
            RationalRoots,
            "sin(2_{u,u} x) = 2 sin(x,u) cos(x,u)",
            |t| double_angle(t, FnKind::Sin, true),
        ),
        IdentityRecord::new(
            "double-angle-3",
            "trig",
            SeriesExact,
            RationalRoots,
            "cos(2_{u,v} x) = cos(x,u) cos(x,v) - sin(x,u) sin(x,v)",
            |t| double_angle(t, FnKind::Cos, false),
        ),
        IdentityRecord::new(
            "double-angle-4",
            "trig",
            SeriesExact,
            RationalRoots,
            "cos(2_{u,u} x) = cos^2(x,u) - sin^2(x,u)",
            |t| double_angle(t, FnKind::Cos, true),
        ),
        IdentityRecord::new(
            "double-angle-5",
            "trig",
            NumericResidual,
            Float,
            "tan(2_{u,v} x) = (tan(x,u) + tan(x,v)) / (1 - tan(x,u) tan(x,v))",
            |t| double_tan(t, false),
        ),
        IdentityRecord::new(
            "double-angle-6",
            "trig",
            NumericResidual,
            Float,
            "tan(2_{u,u} x) = 2 tan(x,u) / (1 - tan^2(x,u))",
            |t| double_tan(t, true),
        ),
        IdentityRecord::new(
            "pytha-1",
            "pythagorean",
            SeriesExact,
            RationalRoots,
            "sin(x,u) sin(x,v) + cos(x,u) cos(x,v) = cos(0_{u,v} x)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                pythagoras(&u, &v, &c, t.order)
            },
        ),
        IdentityRecord::new(
            "pytha-2",
            "pythagorean",
            SeriesExact,
            RationalRoots,
            "sin^2(x,u) + cos^2(x,u) = cos(0_{u,u} x)",
            |t| {
                let c = t.roots()?;
                let u = t.q("u");
                pythagoras(&u, &u, &c, t.order)
            },
        ),
        IdentityRecord::new(
            "pytha-3",
            "pythagorean",
            SeriesExact,
            RationalRoots,
            "Sin(x) Sin'(x) + Cos(x) Cos'(x) = 1",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                let n = t.order;
                let lhs = cross(&phi, &phi_p, &c, n, FnKind::Sin, FnKind::Sin)?
                    .add(&cross(&phi, &phi_p, &c, n, FnKind::Cos, FnKind::Cos)?)?;
                Ok(series(&lhs, &Series::one(n)))
            },
        ),
        IdentityRecord::new(
            "tilde-pytha-1",
            "pythagorean",
            NumericResidual,
            Float,
            "tsin^2(x,u) + tcos^2(x,u) = 1",
            |t| tilde(t, 1),
        )
        .guard("cos(0_{u,u} x) > 0"),
        IdentityRecord::new(
            "tilde-pytha-2",
            "pythagorean",
            NumericResidual,
            Float,
            "ttan^2(x,u) + 1 = tsec^2(x,u)",
            |t| tilde(t, 2),
        )
        .guard("cos(0_{u,u} x) > 0"),
        IdentityRecord::new(
            "tilde-pytha-3",
            "pythagorean",
            NumericResidual,
            Float,
            "1 + tcot^2(x,u) = tcsc^2(x,u)",
            |t| tilde(t, 3),
        )
        .guard("cos(0_{u,u} x) > 0, x != 0"),
    ]);
    out
}

/// A float parameter `u` bounded away from zero.
pub(super) fn float_u(t: &mut Trial, name: &str) -> Result<f64> {
    let u = t.uniform(name, -1.0, 1.0);
    t.require(u.abs() >= 0.05)?;
    Ok(u)
}

pub(super) fn value(kind: FnKind, x: f64, u: f64, c: &SeqCache<f64>) -> Result<f64> {
    Ok(fn_value(kind, x, u, c, DEFAULT_EPS)?.value)
}

/// `f(x,u) g(x,v)`.
fn cross(u: &Q, v: &Q, c: &SeqCache<Q>, n: usize, f: FnKind, g: FnKind) -> Result<Series<Q>> {
    Ok(fn_series(f, u, c, n)?.mul(&fn_series(g, v, c, n)?))
}

fn trig_derivative(t: &mut Trial, kind: FnKind) -> Result<Verdict> {
    let c = t.float_roots()?;
    let u = float_u(t, "u")?;
    let x = t.uniform("x", 0.1, 0.5);
    let (phi, phi_p) = roots_of(&c);
    let f = |z: &f64| value(kind, *z, u, &c).unwrap_or(f64::NAN);
    let lhs = lucas_derivative_fn(&f, &x, c.params())?;
    if !lhs.is_finite() {
        return Err(Error::DivisionByZeroValue("sampled near a pole"));
    }
    let v = |k: FnKind, z: f64| value(k, z, u, &c);
    let rhs = match kind {
        FnKind::Tan => {
            (v(FnKind::Cos, u * x)? + v(FnKind::Tan, phi_p * x)? * v(FnKind::Sin, u * x)?) / v(FnKind::Cos, phi * x)?
        }
        FnKind::Cot => {
            -(v(FnKind::Sin, u * x)? + v(FnKind::Cot, phi_p * x)? * v(FnKind::Cos, u * x)?) / v(FnKind::Sin, phi * x)?
        }
        FnKind::Sec => v(FnKind::Sin, u * x)? / (v(FnKind::Cos, phi * x)? * v(FnKind::Cos, phi_p * x)?),
        _ => -v(FnKind::Cos, u * x)? / (v(FnKind::Sin, phi * x)? * v(FnKind::Sin, phi_p * x)?),
    };
    Ok(close(lhs, rhs, NUMERIC_TOL))
}

fn second_derivative(t: &mut Trial, kind: FnKind) -> Result<Verdict> {
    let c = t.roots()?;
    let u = t.q("u");
    let f = fn_series(kind, &u, &c, t.order)?;
    let lhs = lucas_derivative_series(&lucas_derivative_series(&f, &c), &c);
    let rhs = f.dilate(&(u.clone() * u.clone())).scale(&-u.clone());
    Ok(series(&lhs, &rhs))
}

fn parity_series(t: &mut Trial, kind: FnKind, odd: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let u = t.q("u");
    let f = fn_series(kind, &u, &c, t.order)?;
    let rhs = if odd { f.neg() } else { f.clone() };
    Ok(series(&f.dilate(&-Q::one()), &rhs))
}

fn parity_numeric(t: &mut Trial, kind: FnKind, odd: bool) -> Result<Verdict> {
    let c = t.float_roots()?;
    let u = float_u(t, "u")?;
    let z = t.uniform("z", 0.1, 0.5);
    let z = if t.coin() { z } else { -z };
    let lhs = value(kind, -z, u, &c)?;
    let f = value(kind, z, u, &c)?;
    Ok(close(lhs, if odd { -f } else { f }, NUMERIC_TOL))
}

fn addition(t: &mut Trial, kind: FnKind, minus: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let n = t.order2;
    let one = Q::one();
    let mut lhs = binomial_fn_series2(kind, &u, &v, &c, n)?;
    if minus {
        lhs = lhs.dilate(&one, &-one.clone());
    }
    let (sc, cs, ss, cc) = (
        outer(FnKind::Sin, &u, FnKind::Cos, &v, &c, n)?,
        outer(FnKind::Cos, &u, FnKind::Sin, &v, &c, n)?,
        outer(FnKind::Sin, &u, FnKind::Sin, &v, &c, n)?,
        outer(FnKind::Cos, &u, FnKind::Cos, &v, &c, n)?,
    );
    let rhs = match (kind, minus) {
        (FnKind::Sin, false) => sc.add(&cs)?,
        (FnKind::Sin, true) => sc.sub(&cs)?,
        (_, false) => cc.sub(&ss)?,
        (_, true) => cc.add(&ss)?,
    };
    Ok(series2(&lhs, &rhs))
}

fn tan_addition(t: &mut Trial, minus: bool) -> Result<Verdict> {
    let c = t.float_roots()?;
    let (u, v) = (float_u(t, "u")?, float_u(t, "v")?);
    let (x, y) = (t.small("x"), t.small("y"));
    let signed_y = if minus { -y } else { y };
    let lhs = binomial_fn_value(FnKind::Tan, x, signed_y, u, v, &c, DEFAULT_EPS)?.value;
    let (a, b) = (value(FnKind::Tan, x, u, &c)?, value(FnKind::Tan, y, v, &c)?);
    let rhs = if minus { (a - b) / (1.0 + a * b) } else { (a + b) / (1.0 - a * b) };
    Ok(close(lhs, rhs, NUMERIC_TOL))
}

fn double_angle(t: &mut Trial, kind: FnKind, same: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let u = t.q("u");
    let v = if same { u.clone() } else { t.q("v") };
    let n = t.order;
    let shape = if kind == FnKind::Sin { Shape::Sin } else { Shape::Cos };
    let lhs = multinomial_series(shape, &[u.clone(), v.clone()], &c, n)?;
    let rhs = if kind == FnKind::Sin {
        let sc = cross(&u, &v, &c, n, FnKind::Sin, FnKind::Cos)?;
        if same {
            sc.scale(&Q::from_i64(2))
        } else {
            sc.add(&cross(&u, &v, &c, n, FnKind::Cos, FnKind::Sin)?)?
        }
    } else {
        cross(&u, &v, &c, n, FnKind::Cos, FnKind::Cos)?.sub(&cross(&u, &v, &c, n, FnKind::Sin, FnKind::Sin)?)?
    };
    Ok(series(&lhs, &rhs))
}

fn double_tan(t: &mut Trial, same: bool) -> Result<Verdict> {
    let c = t.float_roots()?;
    let u = float_u(t, "u")?;
    let v = if same { u } else { float_u(t, "v")? };
    let x = t.small("x");
    let lhs = multinomial_fn_value(FnKind::Tan, &[u, v], x, &c, DEFAULT_EPS)?.value;
    let (a, b) = (value(FnKind::Tan, x, u, &c)?, value(FnKind::Tan, x, v, &c)?);
    let rhs = if same { 2.0 * a / (1.0 - a * a) } else { (a + b) / (1.0 - a * b) };
    Ok(close(lhs, rhs, NUMERIC_TOL))
}

fn pythagoras(u: &Q, v: &Q, c: &SeqCache<Q>, n: usize) -> Result<Verdict> {
    let lhs = cross(u, v, c, n, FnKind::Sin, FnKind::Sin)?.add(&cross(u, v, c, n, FnKind::Cos, FnKind::Cos)?)?;
    Ok(series(&lhs, &deformed_zero_series(Shape::Cos, u, v, c, n)?))
}

fn tilde(t: &mut Trial, item: u8) -> Result<Verdict> {
    let c = t.float_roots()?;
    let u = float_u(t, "u")?;
    let x = t.small("x");
    if item == 3 {
        t.require(x.abs() >= 0.05)?;
    }
    let w = |k: FnKind| tilde_fn_value(k, x, u, &c, DEFAULT_EPS);
    let (lhs, rhs) = match item {
        1 => (w(FnKind::Sin)?.powi(2) + w(FnKind::Cos)?.powi(2), 1.0),
        2 => (w(FnKind::Tan)?.powi(2) + 1.0, w(FnKind::Sec)?.powi(2)),
        _ => (1.0 + w(FnKind::Cot)?.powi(2), w(FnKind::Csc)?.powi(2)),
    };
    Ok(close(lhs, rhs, NUMERIC_TOL))
}
