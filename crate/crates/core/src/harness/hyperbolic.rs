//! Hyperbolic families, their bridge to the trigonometric ones and the
//! addition formulas.

use super::compare::{close, series, series2, Verdict};
use super::exponential::outer;
use super::trig::{float_u, value};
use super::{CheckKind::*, IdentityRecord, Sampler::*, Trial, NUMERIC_TOL};
use crate::error::Result;
use crate::field::{Field, GaussianRational, Rational};
use crate::functions::{binomial_fn_series2, binomial_fn_value, fn_series, FnKind, DEFAULT_EPS};

type Q = Rational;
type G = GaussianRational;

pub(super) fn records() -> Vec<IdentityRecord> {
    let bridges: [(&'static str, &'static str, super::RunFn, bool); 6] = [
        ("hyp-bridge-1", "sin(ix,u) = i sinh(x,u)", |t| bridge_i(t, FnKind::Sin, FnKind::Sinh), true),
        ("hyp-bridge-2", "sin(x,-u) = sinh(x,u)", |t| bridge_neg(t, FnKind::Sin, FnKind::Sinh), false),
        ("hyp-bridge-3", "cos(ix,u) = cosh(x,u)", |t| bridge_i(t, FnKind::Cos, FnKind::Cosh), true),
        ("hyp-bridge-4", "cos(x,-u) = cosh(x,u)", |t| bridge_neg(t, FnKind::Cos, FnKind::Cosh), false),
        ("hyp-bridge-5", "tan(ix,u) = i tanh(x,u)", |t| bridge_i(t, FnKind::Tan, FnKind::Tanh), true),
        ("hyp-bridge-6", "tan(x,-u) = tanh(x,u)", |t| bridge_neg(t, FnKind::Tan, FnKind::Tanh), false),
    ];
    let mut out = Vec::new();
    for (id, anchor, run, imaginary) in bridges {
        let sampler = if imaginary { Gaussian } else { RationalRoots };
        out.push(IdentityRecord::new(id, "hyperbolic", SeriesExact, sampler, anchor, run));
    }
    let bivariate: [(&'static str, &'static str, super::RunFn); 6] = [
        (
            "hyp-binom-bridge-1",
            "sin(x (+)_{-u,-v} y) = sinh(x (+)_{u,v} y)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                let n = t.order2;
                let lhs = binomial_fn_series2(FnKind::Sin, &-u.clone(), &-v.clone(), &c, n)?;
                Ok(series2(&lhs, &binomial_fn_series2(FnKind::Sinh, &u, &v, &c, n)?))
            },
        ),
        (
            "hyp-binom-bridge-2",
            "cos(x (+)_{-u,-v} y) = cosh(x (-)_{u,v} y)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                let n = t.order2;
                let lhs = binomial_fn_series2(FnKind::Cos, &-u.clone(), &-v.clone(), &c, n)?;
                let rhs = binomial_fn_series2(FnKind::Cosh, &u, &v, &c, n)?.dilate(&Q::one(), &-Q::one());
                Ok(series2(&lhs, &rhs))
            },
        ),
        (
            "hyp-add-1",
            "sinh(x (+)_{u,v} y) = sinh(x,u) cosh(y,v) + cosh(x,u) sinh(y,v)",
            |t| addition(t, FnKind::Sinh, false),
        ),
        (
            "hyp-add-2",
            "sinh(x (-)_{u,v} y) = sinh(x,u) cosh(y,v) - cosh(x,u) sinh(y,v)",
            |t| addition(t, FnKind::Sinh, true),
        ),
        (
            "hyp-add-3",
            "cosh(x (+)_{u,v} y) = cosh(x,u) cosh(y,v) + sinh(x,u) sinh(y,v)",
            |t| addition(t, FnKind::Cosh, false),
        ),
        (
            "hyp-add-4",
            "cosh(x (-)_{u,v} y) = cosh(x,u) cosh(y,v) - sinh(x,u) sinh(y,v)",
            |t| addition(t, FnKind::Cosh, true),
        ),
    ];
    for (id, anchor, run) in bivariate {
        out.push(IdentityRecord::new(id, "hyperbolic", BivariateExact, RationalRoots, anchor, run));
    }
    out.push(
        IdentityRecord::new(
            "tanh-add-1",
            "hyperbolic",
            NumericResidual,
            Float,
            "tanh(x (+)_{u,v} y) = (tanh(x,u) + tanh(y,v)) / (1 + tanh(x,u) tanh(y,v))",
            |t| tanh_addition(t, false),
        )
        .tol(NUMERIC_TOL),
    );
    out.push(
        IdentityRecord::new(
            "tanh-add-2",
            "hyperbolic",
            NumericResidual,
            Float,
            "tanh(x (-)_{u,v} y) = (tanh(x,u) - tanh(y,v)) / (1 - tanh(x,u) tanh(y,v))",
            |t| tanh_addition(t, true),
        )
        .tol(NUMERIC_TOL),
    );
    out
}

/// `trig(ix,u) = i^p hyp(x,u)`, `p = 1` for the odd kinds.
fn bridge_i(t: &mut Trial, trig: FnKind, hyp: FnKind) -> Result<Verdict> {
    let c = t.gaussian_roots()?;
    let u = t.g("u");
    let i = G::i();
    let lhs = fn_series(trig, &u, &c, t.order)?.dilate(&i);
    let rhs = fn_series(hyp, &u, &c, t.order)?;
    let rhs = if trig == FnKind::Cos { rhs } else { rhs.scale(&i) };
    Ok(series(&lhs, &rhs))
}

fn bridge_neg(t: &mut Trial, trig: FnKind, hyp: FnKind) -> Result<Verdict> {
    let c = t.roots()?;
    let u = t.q("u");
    let lhs = fn_series(trig, &-u.clone(), &c, t.order)?;
    Ok(series(&lhs, &fn_series(hyp, &u, &c, t.order)?))
}

fn addition(t: &mut Trial, kind: FnKind, minus: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let n = t.order2;
    let mut lhs = binomial_fn_series2(kind, &u, &v, &c, n)?;
    if minus {
        lhs = lhs.dilate(&Q::one(), &-Q::one());
    }
    let (sh, ch) = (FnKind::Sinh, FnKind::Cosh);
    let (first, second) = if kind == FnKind::Sinh {
        (outer(sh, &u, ch, &v, &c, n)?, outer(ch, &u, sh, &v, &c, n)?)
    } else {
        (outer(ch, &u, ch, &v, &c, n)?, outer(sh, &u, sh, &v, &c, n)?)
    };
    let rhs = if minus { first.sub(&second)? } else { first.add(&second)? };
    Ok(series2(&lhs, &rhs))
}

fn tanh_addition(t: &mut Trial, minus: bool) -> Result<Verdict> {
    let c = t.float_roots()?;
    let (u, v) = (float_u(t, "u")?, float_u(t, "v")?);
    let (x, y) = (t.small("x"), t.small("y"));
    let y_arg = if minus { -y } else { y };
    let lhs = binomial_fn_value(FnKind::Tanh, x, y_arg, u, v, &c, DEFAULT_EPS)?.value;
    let (a, b) = (value(FnKind::Tanh, x, u, &c)?, value(FnKind::Tanh, y, v, &c)?);
    let rhs = if minus { (a - b) / (1.0 - a * b) } else { (a + b) / (1.0 + a * b) };
    Ok(close(lhs, rhs, NUMERIC_TOL))
}
