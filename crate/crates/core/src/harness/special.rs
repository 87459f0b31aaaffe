//! Multinomial functions, the first sine zero and periodicity.

use super::compare::{close, series, series2, Verdict};
use super::trig::{float_u, value};
use super::{CheckKind::*, IdentityRecord, Sampler::*, Trial, ROOT_TOL};
use crate::binomial::multinomial_inductive;
use crate::error::Result;
use crate::field::{Field, GaussianRational, Rational};
use crate::functions::{
    deformed_zero_fn_value, find_pi_u, fn_series, multinomial_fn_value, multinomial_series,
    umbral_binomial_value, umbral_series2, BlockWeights, FnKind, PiUOptions, Shape, DEFAULT_EPS,
};
use crate::lucas::{tri, SeqCache};
use crate::series::{Series, Series2};

type Q = Rational;
type G = GaussianRational;

pub(super) fn records() -> Vec<IdentityRecord> {
    let mut out = vec![IdentityRecord::new(
        "multi-euler",
        "multinomial",
        SeriesExact,
        Gaussian,
        "exp(k_u ix) = cos(k_u x) + i sin(k_u x)",
        |t| {
            let c = t.gaussian_roots()?;
            let k = t.index("k", 1, 3);
            let us: Vec<G> = (0..k).map(|j| t.g(&format!("u{}", j + 1))).collect();
            let n = t.order;
            let i = G::i();
            let lhs = multinomial_series(Shape::Exp, &us, &c, n)?.dilate(&i);
            let rhs = multinomial_series(Shape::Cos, &us, &c, n)?
                .add(&multinomial_series(Shape::Sin, &us, &c, n)?.scale(&i))?;
            Ok(series(&lhs, &rhs))
        },
    )];
    let n1: [(&'static str, &'static str, super::RunFn); 4] = [
        (
            "multi-add-n1-1",
            "sin(n_u x (+)_{1,u} y) = sin(n_u x) cos(y,u) + cos(n_u x) sin(y,u)",
            |t| multi_addition(t, FnKind::Sin, false, false),
        ),
        (
            "multi-add-n1-2",
            "sin(n_u x (-)_{1,u} y) = sin(n_u x) cos(y,u) - cos(n_u x) sin(y,u)",
            |t| multi_addition(t, FnKind::Sin, true, false),
        ),
        (
            "multi-add-n1-3",
            "cos(n_u x (+)_{1,u} y) = cos(n_u x) cos(y,u) - sin(n_u x) sin(y,u)",
            |t| multi_addition(t, FnKind::Cos, false, false),
        ),
        (
            "multi-add-n1-4",
            "cos(n_u x (-)_{1,u} y) = cos(n_u x) cos(y,u) + sin(n_u x) sin(y,u)",
            |t| multi_addition(t, FnKind::Cos, true, false),
        ),
    ];
    let nm: [(&'static str, &'static str, super::RunFn); 4] = [
        (
            "multi-add-nm-1",
            "sin(n_u x (+)_{1,1} m_u y) = sin(n_u x) cos(m_u y) + cos(n_u x) sin(m_u y)",
            |t| multi_addition(t, FnKind::Sin, false, true),
        ),
        (
            "multi-add-nm-2",
            "sin(n_u x (-)_{1,1} m_u y) = sin(n_u x) cos(m_u y) - cos(n_u x) sin(m_u y)",
            |t| multi_addition(t, FnKind::Sin, true, true),
        ),
        (
            "multi-add-nm-3",
            "cos(n_u x (+)_{1,1} m_u y) = cos(n_u x) cos(m_u y) - sin(n_u x) sin(m_u y)",
            |t| multi_addition(t, FnKind::Cos, false, true),
        ),
        (
            "multi-add-nm-4",
            "cos(n_u x (-)_{1,1} m_u y) = cos(n_u x) cos(m_u y) + sin(n_u x) sin(m_u y)",
            |t| multi_addition(t, FnKind::Cos, true, true),
        ),
    ];
    for (id, anchor, run) in n1.into_iter().chain(nm) {
        out.push(IdentityRecord::new(
            id,
            "multinomial",
            BivariateExact,
            RationalRoots,
            anchor,
            run,
        ));
    }
    let piu: [(&'static str, &'static str, super::RunFn, bool); 10] = [
        (
            "piu-special-1",
            "sin(n_u pi_u) = 0",
            |t| special(t, 1),
            false,
        ),
        (
            "piu-special-2",
            "cos(n_u pi_u) = +-cos^(n/2)(0_{u,u} pi_u)",
            |t| special(t, 2),
            false,
        ),
        (
            "piu-special-3",
            "tan(n_u pi_u) = 0",
            |t| special(t, 3),
            false,
        ),
        (
            "periodic-1",
            "sin(n_u pi_u (+)_{1,v} x) = cos^(n/2)(0_{u,u} pi_u) sin(x,v)",
            |t| periodic(t, FnKind::Sin, false),
            true,
        ),
        (
            "periodic-1-corrected",
            "sin(n_u pi_u (+)_{1,v} x) = cos^n(pi_u,u) sin(x,v)",
            |t| periodic(t, FnKind::Sin, true),
            false,
        ),
        (
            "periodic-2",
            "cos(n_u pi_u (+)_{1,v} x) = cos^(n/2)(0_{u,u} pi_u) cos(x,v)",
            |t| periodic(t, FnKind::Cos, false),
            true,
        ),
        (
            "periodic-2-corrected",
            "cos(n_u pi_u (+)_{1,v} x) = cos^n(pi_u,u) cos(x,v)",
            |t| periodic(t, FnKind::Cos, true),
            false,
        ),
        (
            "periodic-3",
            "tan(n_u pi_u (+)_{1,v} x) = tan(x,v)",
            |t| periodic(t, FnKind::Tan, true),
            false,
        ),
        (
            "periodic-4",
            "cot(n_u pi_u (+)_{1,v} x) = cot(x,v)",
            |t| periodic(t, FnKind::Cot, true),
            false,
        ),
        (
            "piu-pythagoras",
            "cos^2(pi_u,u) = cos(0_{u,u} pi_u)",
            |t| special(t, 4),
            false,
        ),
    ];
    for (id, anchor, run, refuted) in piu {
        let r = IdentityRecord::new(id, "piu", NumericResidual, PiU, anchor, run)
            .tol(ROOT_TOL)
            .guard("pi_u found below 10, cos(0_{u,u} pi_u) != 0");
        out.push(if refuted { r.refuted() } else { r });
    }
    out
}

/// The multinomial weights of `(u, ..., u)`, `n` copies, up to `order`.
fn weights<F: Field>(u: &F, n: usize, c: &SeqCache<F>, order: usize) -> Result<Vec<F>> {
    multinomial_inductive(&vec![u.clone(); n], order, c)
}

fn multi_addition(t: &mut Trial, kind: FnKind, minus: bool, both: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let u = t.q("u");
    let n = t.index("n", 1, 3);
    let order = t.order2;
    let a = weights(&u, n, &c, order)?;
    let (b, right_sin, right_cos): (Vec<Q>, Series<Q>, Series<Q>) = if both {
        let m = t.index("m", 1, 3);
        let b = weights(&u, m, &c, order)?;
        let us = vec![u.clone(); m];
        (
            b,
            multinomial_series(Shape::Sin, &us, &c, order)?,
            multinomial_series(Shape::Cos, &us, &c, order)?,
        )
    } else {
        (
            (0..=order).map(|k| Field::pow(&u, tri(k))).collect(),
            fn_series(FnKind::Sin, &u, &c, order)?,
            fn_series(FnKind::Cos, &u, &c, order)?,
        )
    };
    let shape = if kind == FnKind::Sin {
        Shape::Sin
    } else {
        Shape::Cos
    };
    let mut lhs = umbral_series2(shape, &a, &b, &c, order)?;
    if minus {
        lhs = lhs.dilate(&Q::one(), &-Q::one());
    }
    let us = vec![u.clone(); n];
    let left_sin = multinomial_series(Shape::Sin, &us, &c, order)?;
    let left_cos = multinomial_series(Shape::Cos, &us, &c, order)?;
    let sc = Series2::outer(&left_sin, &right_cos);
    let cs = Series2::outer(&left_cos, &right_sin);
    let cc = Series2::outer(&left_cos, &right_cos);
    let ss = Series2::outer(&left_sin, &right_sin);
    let rhs = match (kind, minus) {
        (FnKind::Sin, false) => sc.add(&cs)?,
        (FnKind::Sin, true) => sc.sub(&cs)?,
        (_, false) => cc.sub(&ss)?,
        (_, true) => cc.add(&ss)?,
    };
    Ok(series2(&lhs, &rhs))
}

struct RootDraw {
    cache: SeqCache<f64>,
    u: f64,
    pi: f64,
    /// `cos(0_{u,u} pi_u)`.
    norm: f64,
}

fn draw_root(t: &mut Trial) -> Result<RootDraw> {
    let cache = t.float_roots()?;
    let u = t.uniform("u", 0.3, 1.0);
    let pi = find_pi_u(&cache, u, &PiUOptions::default())?.value;
    t.record("pi_u", pi);
    let norm = deformed_zero_fn_value(FnKind::Cos, u, u, pi, &cache, DEFAULT_EPS)?.value;
    t.require(norm.abs() > 1e-6)?;
    Ok(RootDraw { cache, u, pi, norm })
}

fn special(t: &mut Trial, item: u8) -> Result<Verdict> {
    let d = draw_root(t)?;
    let n = t.index("n", 1, 4);
    let us = vec![d.u; n];
    let multi =
        |k: FnKind| multinomial_fn_value(k, &us, d.pi, &d.cache, DEFAULT_EPS).map(|e| e.value);
    match item {
        1 => {
            let direct = multi(FnKind::Sin)?;
            // the same value through the addition formula, (n-1)_u pi (+)_{1,u} pi
            let mut a =
                BlockWeights::new(|len| multinomial_inductive(&vec![d.u; n - 1], len, &d.cache));
            let via_addition = umbral_binomial_value(
                Shape::Sin,
                d.pi,
                d.pi,
                &mut |j| a.get(j),
                &mut |k| Ok(d.u.powi(tri(k) as i32)),
                &d.cache,
                DEFAULT_EPS,
            )?
            .value;
            Ok(Verdict::all([
                close(direct, 0.0, ROOT_TOL),
                close(via_addition, 0.0, ROOT_TOL),
            ]))
        }
        2 => Ok(close(
            multi(FnKind::Cos)?.abs(),
            d.norm.abs().powf(n as f64 / 2.0),
            ROOT_TOL,
        )),
        3 => Ok(close(multi(FnKind::Tan)?, 0.0, ROOT_TOL)),
        _ => Ok(close(
            value(FnKind::Cos, d.pi, d.u, &d.cache)?.powi(2),
            d.norm,
            ROOT_TOL,
        )),
    }
}

fn periodic(t: &mut Trial, kind: FnKind, corrected: bool) -> Result<Verdict> {
    let d = draw_root(t)?;
    let first = t.index("n", 1, 4);
    let v = float_u(t, "v")?;
    let x = t.small("x");
    if kind == FnKind::Cot {
        t.require(x.abs() >= 0.05)?;
    }
    // both parities of n in every draw
    let check = |n: usize| -> Result<Verdict> {
        let basic = |shape: Shape| -> Result<f64> {
            let mut a =
                BlockWeights::new(|len| multinomial_inductive(&vec![d.u; n], len, &d.cache));
            Ok(umbral_binomial_value(
                shape,
                d.pi,
                x,
                &mut |j| a.get(j),
                &mut |k| Ok(v.powi(tri(k) as i32)),
                &d.cache,
                DEFAULT_EPS,
            )?
            .value)
        };
        let factor = if corrected {
            value(FnKind::Cos, d.pi, d.u, &d.cache)?.powi(n as i32)
        } else {
            d.norm.powf(n as f64 / 2.0)
        };
        let (lhs, rhs) = match kind {
            FnKind::Sin => (
                basic(Shape::Sin)?,
                factor * value(FnKind::Sin, x, v, &d.cache)?,
            ),
            FnKind::Cos => (
                basic(Shape::Cos)?,
                factor * value(FnKind::Cos, x, v, &d.cache)?,
            ),
            FnKind::Tan => (
                basic(Shape::Sin)? / basic(Shape::Cos)?,
                value(FnKind::Tan, x, v, &d.cache)?,
            ),
            _ => (
                basic(Shape::Cos)? / basic(Shape::Sin)?,
                value(FnKind::Cot, x, v, &d.cache)?,
            ),
        };
        Ok(close(lhs, rhs, ROOT_TOL))
    };
    Ok(Verdict::all([check(first)?, check(first + 1)?]))
}
