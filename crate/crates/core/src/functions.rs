//! Lucas-Pantograph exponential, trigonometric and hyperbolic functions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::binomial::{deformed_zero, multinomial_inductive, DeformedBinomial};
use crate::error::{Error, Result};
use crate::field::{Field, FloatField};
use crate::lucas::{tri, SeqCache};
use crate::series::{Series, Series2};

/// Default relative tolerance of adaptive evaluation.
pub const DEFAULT_EPS: f64 = 1e-15;
/// Consecutive small in-parity terms needed to stop.
const QUIET_TERMS: usize = 3;
/// Consecutive growing in-parity terms that signal divergence.
const GROWTH_TERMS: usize = 8;
/// Hard cap on the number of series terms visited.
pub const MAX_TERMS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FnKind {
    Exp,
    Sin,
    Cos,
    Tan,
    Cot,
    Sec,
    Csc,
    Sinh,
    Cosh,
    Tanh,
    Coth,
    Sech,
    Csch,
}

impl FnKind {
    pub const ALL: [FnKind; 13] = [
        FnKind::Exp,
        FnKind::Sin,
        FnKind::Cos,
        FnKind::Tan,
        FnKind::Cot,
        FnKind::Sec,
        FnKind::Csc,
        FnKind::Sinh,
        FnKind::Cosh,
        FnKind::Tanh,
        FnKind::Coth,
        FnKind::Sech,
        FnKind::Csch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FnKind::Exp => "exp",
            FnKind::Sin => "sin",
            FnKind::Cos => "cos",
            FnKind::Tan => "tan",
            FnKind::Cot => "cot",
            FnKind::Sec => "sec",
            FnKind::Csc => "csc",
            FnKind::Sinh => "sinh",
            FnKind::Cosh => "cosh",
            FnKind::Tanh => "tanh",
            FnKind::Coth => "coth",
            FnKind::Sech => "sech",
            FnKind::Csch => "csch",
        }
    }

    /// Kinds with a pole at the origin have no power series.
    pub fn has_series(self) -> bool {
        !matches!(self, FnKind::Cot | FnKind::Csc | FnKind::Coth | FnKind::Csch)
    }

    fn shape(self) -> Option<Shape> {
        match self {
            FnKind::Exp => Some(Shape::Exp),
            FnKind::Sin => Some(Shape::Sin),
            FnKind::Cos => Some(Shape::Cos),
            FnKind::Sinh => Some(Shape::Sinh),
            FnKind::Cosh => Some(Shape::Cosh),
            _ => None,
        }
    }
}

impl fmt::Display for FnKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FnKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FnKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown function kind {s:?}")))
    }
}

/// Sign and parity pattern of the five basic series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Exp,
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl Shape {
    /// `Some(+1 | -1)` for the powers the shape keeps, `None` for the others.
    pub fn sign(self, n: usize) -> Option<i64> {
        let odd = n % 2 == 1;
        match self {
            Shape::Exp => Some(1),
            Shape::Sin if odd => Some(if (n / 2).is_multiple_of(2) { 1 } else { -1 }),
            Shape::Cos if !odd => Some(if (n / 2).is_multiple_of(2) { 1 } else { -1 }),
            Shape::Sinh if odd => Some(1),
            Shape::Cosh if !odd => Some(1),
            _ => None,
        }
    }

    pub fn kind(self) -> FnKind {
        match self {
            Shape::Exp => FnKind::Exp,
            Shape::Sin => FnKind::Sin,
            Shape::Cos => FnKind::Cos,
            Shape::Sinh => FnKind::Sinh,
            Shape::Cosh => FnKind::Cosh,
        }
    }
}

/// `sum_n sign(n) w(n) z^n / {n}!`.
pub fn weighted_series<F: Field>(
    shape: Shape,
    mut weight: impl FnMut(usize) -> Result<F>,
    cache: &SeqCache<F>,
    order: usize,
) -> Result<Series<F>> {
    Series::try_from_fn(order, |n| match shape.sign(n) {
        None => Ok(F::zero()),
        Some(sign) => Ok(F::from_i64(sign) * weight(n)? / cache.factorial(n)?),
    })
}

/// Power series of the function family `kind` with parameter `u`.
pub fn fn_series<F: Field>(kind: FnKind, u: &F, cache: &SeqCache<F>, order: usize) -> Result<Series<F>> {
    let base = |shape: Shape| weighted_series(shape, |n| Ok(u.pow(tri(n))), cache, order);
    if let Some(shape) = kind.shape() {
        return base(shape);
    }
    match kind {
        FnKind::Tan => Ok(base(Shape::Sin)?.mul(&base(Shape::Cos)?.reciprocal()?)),
        FnKind::Sec => base(Shape::Cos)?.reciprocal(),
        FnKind::Tanh => Ok(base(Shape::Sinh)?.mul(&base(Shape::Cosh)?.reciprocal()?)),
        FnKind::Sech => base(Shape::Cosh)?.reciprocal(),
        other => Err(Error::PoleAtOrigin(other.name())),
    }
}

/// Series with the deformed zero `0_{u,v}^(n)` as weights, i.e. `f(0_{u,v} z)`.
pub fn deformed_zero_series<F: Field>(
    shape: Shape,
    u: &F,
    v: &F,
    cache: &SeqCache<F>,
    order: usize,
) -> Result<Series<F>> {
    weighted_series(shape, |n| deformed_zero(n, u, v, cache), cache, order)
}

/// Series with multinomial weights `m_(u_1..u_m)^(n)`, i.e. `f(m_u z)`.
pub fn multinomial_series<F: Field>(
    shape: Shape,
    us: &[F],
    cache: &SeqCache<F>,
    order: usize,
) -> Result<Series<F>> {
    let weights = multinomial_inductive(us, order, cache)?;
    weighted_series(shape, |n| Ok(weights[n].clone()), cache, order)
}

/// `sum_n sign(n) (x (+)_{u,v} y)^(n) / {n}!` as a bivariate series.
pub fn binomial_fn_series2<F: Field>(
    kind: FnKind,
    u: &F,
    v: &F,
    cache: &SeqCache<F>,
    order: usize,
) -> Result<Series2<F>> {
    let shape = kind.shape().ok_or(Error::UnsupportedKind(kind.name()))?;
    let mut out = Series2::zero(order);
    for n in 0..=order {
        let Some(sign) = shape.sign(n) else { continue };
        let scale = F::from_i64(sign) / cache.factorial(n)?;
        let b = DeformedBinomial::new(n, u.clone(), v.clone(), cache)?;
        for (k, c) in b.coeffs.into_iter().enumerate() {
            out.set_coeff(n - k, k, scale.clone() * c);
        }
    }
    Ok(out)
}

/// Bivariate umbral series `sum_N sign(N) sum_k {N choose k} A(N-k) B(k) x^(N-k) y^k / {N}!`
/// with weight tables `a`, `b` of length at least `order + 1`.
pub fn umbral_series2<F: Field>(
    shape: Shape,
    a: &[F],
    b: &[F],
    cache: &SeqCache<F>,
    order: usize,
) -> Result<Series2<F>> {
    if a.len() <= order || b.len() <= order {
        return Err(Error::InvalidArgument("weight table shorter than the order".into()));
    }
    let mut out = Series2::zero(order);
    for n in 0..=order {
        let Some(sign) = shape.sign(n) else { continue };
        let scale = F::from_i64(sign) / cache.factorial(n)?;
        for (k, c) in cache.row(n)?.into_iter().enumerate() {
            out.set_coeff(n - k, k, scale.clone() * c * a[n - k].clone() * b[k].clone());
        }
    }
    Ok(out)
}

/// An adaptively truncated value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation<F> {
    pub value: F,
    /// Number of series terms visited.
    pub terms: usize,
}

/// `sum_n sign(n) w(n) x^n / {n}!`, truncated once three consecutive kept
/// terms fall below `eps` times the largest partial sum seen.
pub fn adaptive_weighted_sum<F: FloatField>(
    shape: Shape,
    x: F,
    mut weight: impl FnMut(usize) -> Result<F>,
    cache: &SeqCache<F>,
    eps: f64,
) -> Result<Evaluation<F>> {
    // base = x^n / {n}!
    let mut base = F::one();
    let mut sum = F::zero();
    let mut scale = 0.0f64;
    let mut quiet = 0;
    let mut growing = 0;
    let mut last: Option<f64> = None;
    for n in 0..MAX_TERMS {
        if n > 0 {
            let d = cache.u(n);
            if d.is_zero() {
                return Err(Error::VanishingFactor(n));
            }
            base = base * x / d;
        }
        let Some(sign) = shape.sign(n) else { continue };
        let term = F::from_i64(sign) * weight(n)? * base;
        if !term.is_finite() {
            return Err(Error::SeriesDiverging { terms: n + 1 });
        }
        sum = sum + term;
        scale = scale.max(sum.abs());
        let size = term.abs();
        if size <= eps * scale.max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                return Ok(Evaluation { value: sum, terms: n + 1 });
            }
        } else {
            quiet = 0;
        }
        match last {
            Some(prev) if size > prev && size > 0.0 => {
                growing += 1;
                if growing >= GROWTH_TERMS {
                    return Err(Error::SeriesDiverging { terms: n + 1 });
                }
            }
            _ => growing = 0,
        }
        last = Some(size);
    }
    Err(Error::SeriesDiverging { terms: MAX_TERMS })
}

fn quotient<F: FloatField>(
    num: Evaluation<F>,
    den: Evaluation<F>,
    what: &'static str,
) -> Result<Evaluation<F>> {
    if den.value.is_zero() {
        return Err(Error::DivisionByZeroValue(what));
    }
    let value = num.value / den.value;
    if !value.is_finite() {
        return Err(Error::DivisionByZeroValue(what));
    }
    Ok(Evaluation {
        value,
        terms: num.terms + den.terms,
    })
}

fn one<F: FloatField>() -> Evaluation<F> {
    Evaluation { value: F::one(), terms: 0 }
}

/// Combine the basic values into any kind: quotients for tan/cot/..., the
/// basic value itself otherwise.
fn combine<F: FloatField>(kind: FnKind, mut basic: impl FnMut(Shape) -> Result<Evaluation<F>>) -> Result<Evaluation<F>> {
    if let Some(shape) = kind.shape() {
        return basic(shape);
    }
    let name = kind.name();
    match kind {
        FnKind::Tan => quotient(basic(Shape::Sin)?, basic(Shape::Cos)?, name),
        FnKind::Cot => quotient(basic(Shape::Cos)?, basic(Shape::Sin)?, name),
        FnKind::Sec => quotient(one(), basic(Shape::Cos)?, name),
        FnKind::Csc => quotient(one(), basic(Shape::Sin)?, name),
        FnKind::Tanh => quotient(basic(Shape::Sinh)?, basic(Shape::Cosh)?, name),
        FnKind::Coth => quotient(basic(Shape::Cosh)?, basic(Shape::Sinh)?, name),
        FnKind::Sech => quotient(one(), basic(Shape::Cosh)?, name),
        FnKind::Csch => quotient(one(), basic(Shape::Sinh)?, name),
        _ => unreachable!("basic kinds handled above"),
    }
}

/// `kind(x, u)` by adaptive truncation.
pub fn fn_value<F: FloatField>(kind: FnKind, x: F, u: F, cache: &SeqCache<F>, eps: f64) -> Result<Evaluation<F>> {
    combine(kind, |shape| {
        // u^C(n,2) built incrementally alongside the sum
        let mut w = F::one();
        let mut next = 0usize;
        adaptive_weighted_sum(
            shape,
            x,
            |n| {
                while next < n {
                    next += 1;
                    w = w * u.pow(next as u64 - 1);
                }
                Ok(w)
            },
            cache,
            eps,
        )
    })
}

/// Weights computed in blocks, regrown when the adaptive sum asks for more.
pub(crate) struct BlockWeights<F, G> {
    values: Vec<F>,
    make: G,
}

impl<F: Clone, G: FnMut(usize) -> Result<Vec<F>>> BlockWeights<F, G> {
    pub(crate) fn new(make: G) -> Self {
        BlockWeights { values: Vec::new(), make }
    }

    pub(crate) fn get(&mut self, n: usize) -> Result<F> {
        if n >= self.values.len() {
            let len = (2 * n).max(32);
            self.values = (self.make)(len)?;
        }
        Ok(self.values[n].clone())
    }
}

/// `kind(m_(u_1..u_m) x)`, weights `m^(n)` in place of `u^C(n,2)`.
pub fn multinomial_fn_value<F: FloatField>(
    kind: FnKind,
    us: &[F],
    x: F,
    cache: &SeqCache<F>,
    eps: f64,
) -> Result<Evaluation<F>> {
    combine(kind, |shape| {
        let mut weights = BlockWeights::new(|len| multinomial_inductive(us, len, cache));
        adaptive_weighted_sum(shape, x, |n| weights.get(n), cache, eps)
    })
}

/// `kind(0_{u,v} x)`, weights `0_{u,v}^(n)`.
pub fn deformed_zero_fn_value<F: FloatField>(
    kind: FnKind,
    u: F,
    v: F,
    x: F,
    cache: &SeqCache<F>,
    eps: f64,
) -> Result<Evaluation<F>> {
    combine(kind, |shape| {
        adaptive_weighted_sum(shape, x, |n| deformed_zero(n, &u, &v, cache), cache, eps)
    })
}

/// Umbral binomial sum
/// `sum_N sign(N) sum_k {N choose k} A(N-k) B(k) x^(N-k) y^k / {N}!`,
/// where `A` and `B` are weight sequences standing in for the powers of
/// the two arguments. With `A(j) = u^C(j,2)`, `B(k) = v^C(k,2)` this is
/// `f(x (+)_{u,v} y)`.
#[allow(clippy::too_many_arguments)]
pub fn umbral_binomial_value<F: FloatField>(
    shape: Shape,
    x: F,
    y: F,
    a: &mut dyn FnMut(usize) -> Result<F>,
    b: &mut dyn FnMut(usize) -> Result<F>,
    cache: &SeqCache<F>,
    eps: f64,
) -> Result<Evaluation<F>> {
    let mut a_vals: Vec<F> = Vec::new();
    let mut b_vals: Vec<F> = Vec::new();
    let mut scale = 0.0f64;
    let mut sum = F::zero();
    let mut quiet = 0;
    let mut growing = 0;
    let mut last: Option<f64> = None;
    for n in 0..MAX_TERMS {
        a_vals.push(a(n)?);
        b_vals.push(b(n)?);
        let Some(sign) = shape.sign(n) else { continue };
        let row = cache.row(n)?;
        let mut inner = F::zero();
        for (k, c) in row.into_iter().enumerate() {
            inner = inner
                + c * a_vals[n - k] * b_vals[k] * x.pow((n - k) as u64) * y.pow(k as u64);
        }
        let term = F::from_i64(sign) * inner / cache.factorial(n)?;
        if !term.is_finite() {
            return Err(Error::SeriesDiverging { terms: n + 1 });
        }
        sum = sum + term;
        scale = scale.max(sum.abs());
        let size = term.abs();
        if size <= eps * scale.max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                return Ok(Evaluation { value: sum, terms: n + 1 });
            }
        } else {
            quiet = 0;
        }
        match last {
            Some(prev) if size > prev && size > 0.0 => {
                growing += 1;
                if growing >= GROWTH_TERMS {
                    return Err(Error::SeriesDiverging { terms: n + 1 });
                }
            }
            _ => growing = 0,
        }
        last = Some(size);
    }
    Err(Error::SeriesDiverging { terms: MAX_TERMS })
}

/// `kind(x (+)_{u,v} y)` at a point; tan-like kinds divide the basic values.
#[allow(clippy::too_many_arguments)]
pub fn binomial_fn_value<F: FloatField>(
    kind: FnKind,
    x: F,
    y: F,
    u: F,
    v: F,
    cache: &SeqCache<F>,
    eps: f64,
) -> Result<Evaluation<F>> {
    combine(kind, |shape| {
        umbral_binomial_value(
            shape,
            x,
            y,
            &mut |j| Ok(u.pow(tri(j))),
            &mut |k| Ok(v.pow(tri(k))),
            cache,
            eps,
        )
    })
}

/// The tilde functions, normalised by `N = cos(0_{u,u} x)`:
/// sin and cos are divided by `sqrt(N)`, sec and csc multiplied, tan and cot
/// unchanged.
pub fn tilde_fn_value(kind: FnKind, x: f64, u: f64, cache: &SeqCache<f64>, eps: f64) -> Result<f64> {
    let norm = deformed_zero_fn_value(FnKind::Cos, u, u, x, cache, eps)?.value;
    if norm <= 0.0 {
        return Err(Error::NegativeNormalizer(norm));
    }
    let root = norm.sqrt();
    let value = fn_value(kind, x, u, cache, eps)?.value;
    match kind {
        FnKind::Sin | FnKind::Cos => Ok(value / root),
        FnKind::Sec | FnKind::Csc => Ok(value * root),
        FnKind::Tan | FnKind::Cot => Ok(value),
        other => Err(Error::UnsupportedKind(other.name())),
    }
}

/// Scan and bisection settings for [`find_pi_u`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiUOptions {
    pub step: f64,
    pub x_max: f64,
    /// Bisection stops once the bracket is narrower than this.
    pub width: f64,
    pub eps: f64,
}

impl Default for PiUOptions {
    fn default() -> Self {
        PiUOptions {
            step: 0.05,
            x_max: 10.0,
            width: 1e-13,
            eps: DEFAULT_EPS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PiU {
    pub s: f64,
    pub t: f64,
    pub u: f64,
    pub value: f64,
    /// `|sin(value, u)|`.
    pub residual: f64,
}

/// First positive zero of `sin(x, u)`: scan for a sign change, then bisect.
pub fn find_pi_u(cache: &SeqCache<f64>, u: f64, opts: &PiUOptions) -> Result<PiU> {
    let no_root = Error::NoRootFound { x_max: opts.x_max };
    if !(opts.step > 0.0 && opts.x_max > 0.0) {
        return Err(Error::InvalidArgument("scan step and range must be positive".into()));
    }
    let sin = |x: f64| fn_value(FnKind::Sin, x, u, cache, opts.eps).map(|e| e.value);
    let mut lo = 0.0;
    let mut f_lo = f64::NAN;
    let mut bracket = None;
    let steps = (opts.x_max / opts.step).round() as usize;
    for i in 1..=steps {
        let x = (i as f64 * opts.step).min(opts.x_max);
        let fx = match sin(x) {
            Ok(v) => v,
            Err(_) => return Err(no_root),
        };
        if fx == 0.0 {
            bracket = Some((x, x));
            break;
        }
        if i > 1 && fx.signum() != f_lo.signum() {
            bracket = Some((lo, x));
            break;
        }
        lo = x;
        f_lo = fx;
    }
    let (mut a, mut b) = bracket.ok_or(no_root)?;
    let mut f_a = if a == b { 0.0 } else { f_lo };
    while b - a >= opts.width {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let f_mid = sin(mid)?;
        if f_mid == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if f_mid.signum() == f_a.signum() {
            a = mid;
            f_a = f_mid;
        } else {
            b = mid;
        }
    }
    // keep whichever end has the smaller residual
    let (ra, rb) = (sin(a)?.abs(), sin(b)?.abs());
    let (value, residual) = if ra <= rb { (a, ra) } else { (b, rb) };
    let params = cache.params();
    Ok(PiU {
        s: *params.s(),
        t: *params.t(),
        u,
        value,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::lucas::LucasParams;

    fn fcache(s: f64, t: f64) -> SeqCache<f64> {
        SeqCache::new(LucasParams::new(s, t).unwrap())
    }

    #[test]
    fn exp_series_coefficients() {
        let p = LucasParams::new(Rational::from_i64(1), Rational::from_i64(1)).unwrap();
        let c = SeqCache::new(p);
        let u = Rational::from_ratio(3, 5);
        let e = fn_series(FnKind::Exp, &u, &c, 6).unwrap();
        assert_eq!(e.coeff(0), Rational::from_i64(1));
        assert_eq!(e.coeff(3), u.pow(3) / Rational::from_i64(2));
        let zero = Rational::from_i64(0);
        let e0 = fn_series(FnKind::Exp, &zero, &c, 6).unwrap();
        assert_eq!(e0.coeffs()[..3], [Rational::from_i64(1), Rational::from_i64(1), zero.clone()]);
        assert!(e0.coeffs()[2..].iter().all(|a| a == &zero));
        let c0 = fn_series(FnKind::Cos, &zero, &c, 6).unwrap();
        assert_eq!(c0.coeff(0), Rational::from_i64(1));
        assert!(c0.coeffs()[1..].iter().all(|a| a == &zero));
        assert_eq!(
            fn_series(FnKind::Cot, &u, &c, 4).unwrap_err(),
            Error::PoleAtOrigin("cot")
        );
    }

    #[test]
    fn values_at_origin() {
        let c = fcache(1.0, 1.0);
        assert_eq!(fn_value(FnKind::Sin, 0.0, 0.7, &c, DEFAULT_EPS).unwrap().value, 0.0);
        assert_eq!(fn_value(FnKind::Cos, 0.0, 0.7, &c, DEFAULT_EPS).unwrap().value, 1.0);
        assert!(matches!(
            fn_value(FnKind::Cot, 0.0, 0.7, &c, DEFAULT_EPS),
            Err(Error::DivisionByZeroValue(_))
        ));
    }

    #[test]
    fn exp_matches_brute_force_sum() {
        let c = fcache(1.0, 1.0);
        let got = fn_value(FnKind::Exp, 1.0, 1.0, &c, DEFAULT_EPS).unwrap();
        let mut fact = 1.0;
        let mut direct = 1.0;
        for n in 1..50 {
            fact *= c.u(n);
            direct += 1.0 / fact;
        }
        assert!((got.value - direct).abs() < 1e-12);
    }

    #[test]
    fn divergence_is_reported() {
        let c = fcache(1.0, 1.0);
        let r = fn_value(FnKind::Exp, 1.0, 3.0, &c, DEFAULT_EPS);
        assert!(matches!(r, Err(Error::SeriesDiverging { .. })));
    }

    #[test]
    fn pi_u_fibonacci() {
        let c = fcache(1.0, 1.0);
        let p = find_pi_u(&c, 1.0, &PiUOptions::default()).unwrap();
        assert!(p.value > 1.5 && p.value < 1.6, "{}", p.value);
        assert!(p.residual < 1e-10);
    }

    #[test]
    fn tilde_pythagoras() {
        let c = fcache(1.0, 1.0);
        for &x in &[0.0, 0.1, -0.3, 0.5] {
            let s = tilde_fn_value(FnKind::Sin, x, 0.5, &c, DEFAULT_EPS).unwrap();
            let k = tilde_fn_value(FnKind::Cos, x, 0.5, &c, DEFAULT_EPS).unwrap();
            assert!((s * s + k * k - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for k in FnKind::ALL {
            assert_eq!(k.name().parse::<FnKind>().unwrap(), k);
        }
        assert!("log".parse::<FnKind>().is_err());
    }
}
