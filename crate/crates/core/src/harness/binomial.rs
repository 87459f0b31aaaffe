//! Lucas sequences, Lucasnomials and the deformed binomial.

use super::compare::{exact, series2, Verdict};
use super::{CheckKind::*, IdentityRecord, Sampler::*, Trial};
use crate::binomial::{multinomial_inductive, multinomial_number, phi_product_coeffs, deformed_zero, DeformedBinomial};
use crate::calculus::{lucas_derivative_x, lucas_derivative_y};
use crate::error::Result;
use crate::field::{Field, Rational};
use crate::lucas::{binet, binom2, lucas_u, lucas_v, tri, SeqCache};
use crate::series::Series2;

type Q = Rational;

pub(super) fn records() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord::new(
            "pascal-1",
            "lucas",
            SeriesExact,
            RationalRoots,
            "{n+1 choose k} = phi^k {n choose k} + phi'^(n+1-k) {n choose k-1}",
            |t| pascal(t, false),
        )
        .guard("1 <= k <= n"),
        IdentityRecord::new(
            "pascal-2",
            "lucas",
            SeriesExact,
            RationalRoots,
            "{n+1 choose k} = phi'^k {n choose k} + phi^(n+1-k) {n choose k-1}",
            |t| pascal(t, true),
        )
        .guard("1 <= k <= n"),
        IdentityRecord::new(
            "binet-recurrence",
            "lucas",
            SeriesExact,
            RationalRoots,
            "{n} = (phi^n - phi'^n) / (phi - phi')",
            binet_recurrence,
        ),
        IdentityRecord::new(
            "companion-roots",
            "lucas",
            SeriesExact,
            RationalRoots,
            "<n> = phi^n + phi'^n",
            companion_roots,
        ),
        IdentityRecord::new(
            "lucasnomial-symmetry",
            "lucas",
            SeriesExact,
            RationalRoots,
            "{n choose k} = {n choose n-k}, {n choose k} = {n}! / ({k}! {n-k}!)",
            lucasnomial_symmetry,
        ),
        IdentityRecord::new(
            "binom2-sum",
            "lucas",
            SeriesExact,
            RationalRoots,
            "C(n+k,2) = C(n,2) + C(k,2) + nk",
            |t| {
                let (n, k) = int_pair(t);
                Ok(exact(
                    &Q::from_i64(binom2(n + k)),
                    &Q::from_i64(binom2(n) + binom2(k) + n * k),
                ))
            },
        ),
        IdentityRecord::new(
            "binom2-difference",
            "lucas",
            SeriesExact,
            RationalRoots,
            "C(n-k,2) = C(n,2) + C(k,2) + k(1-n)",
            |t| {
                let (n, k) = int_pair(t);
                Ok(exact(
                    &Q::from_i64(binom2(n - k)),
                    &Q::from_i64(binom2(n) + binom2(k) + k * (1 - n)),
                ))
            },
        ),
        IdentityRecord::new(
            "binom-example-rows",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x(+)y)^(2) = ux^2 + {2}xy + vy^2, ..., (x(+)y)^(4) = u^6x^4 + {4}u^3x^3y + {3}<2>uvx^2y^2 + {4}v^3xy^3 + v^6y^4",
            example_rows,
        ),
        IdentityRecord::new(
            "binom-neg-even",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x (+)_{-u,-v} y)^(2n) = (-1)^n (x (-)_{u,v} y)^(2n)",
            |t| binom_neg(t, false),
        ),
        IdentityRecord::new(
            "binom-neg-odd",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x (+)_{-u,-v} y)^(2n+1) = (-1)^n (x (+)_{u,v} y)^(2n+1)",
            |t| binom_neg(t, true),
        ),
        IdentityRecord::new(
            "binom-props-1",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x(+)y)^(n+1) = x (ux (+) phi y)^(n) + y (phi' x (+) vy)^(n)",
            |t| binom_split(t, false),
        ),
        IdentityRecord::new(
            "binom-props-2",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x(+)y)^(n+1) = x (ux (+) phi' y)^(n) + y (phi x (+) vy)^(n)",
            |t| binom_split(t, true),
        ),
        IdentityRecord::new(
            "binom-props-3",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x (+)_{au,av} y)^(n) = a^C(n,2) (x (+)_{u,v} y)^(n)",
            binom_scale_params,
        )
        .guard("a != 1")
        .refuted(),
        IdentityRecord::new(
            "binom-props-4",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x (+)_{u,v} y)^(n) = (y (+)_{v,u} x)^(n)",
            |t| {
                let c = t.roots()?;
                let (u, v) = (t.q("u"), t.q("v"));
                every_degree(t.order2, |n| {
                    Ok(series2(
                        &db(n, &u, &v, &c)?,
                        &db(n, &v, &u, &c)?.swap(),
                    ))
                })
            },
        ),
        IdentityRecord::new(
            "binom-props-5",
            "binomial",
            BivariateExact,
            RationalRoots,
            "z^n (x(+)y)^(n) = (zx (+) zy)^(n)",
            |t| {
                let c = t.roots()?;
                let (u, v, z) = (t.q("u"), t.q("v"), t.q("z"));
                every_degree(t.order2, |n| {
                    let b = db(n, &u, &v, &c)?;
                    Ok(series2(&b.scale(&Field::pow(&z, n as u64)), &b.dilate(&z, &z)))
                })
            },
        ),
        IdentityRecord::new(
            "binom-props-6",
            "binomial",
            SeriesExact,
            RationalRoots,
            "(x (+)_{u,v} 0)^(alpha) = u^C(alpha,2) x^alpha",
            |t| binom_axis(t, false),
        )
        .guard("alpha a natural number"),
        IdentityRecord::new(
            "binom-props-7",
            "binomial",
            SeriesExact,
            RationalRoots,
            "(0 (+)_{u,v} y)^(alpha) = v^C(alpha,2) y^alpha",
            |t| binom_axis(t, true),
        )
        .guard("alpha a natural number"),
        IdentityRecord::new(
            "binom-derivative-1",
            "binomial",
            BivariateExact,
            RationalRoots,
            "D (x (+)_{u,v} a)^(n) = {n} (ux (+)_{u,v} a)^(n-1)",
            |t| binom_derivative(t, 1),
        ),
        IdentityRecord::new(
            "binom-derivative-2",
            "binomial",
            BivariateExact,
            RationalRoots,
            "D (a (+)_{u,v} x)^(n) = {n} (a (+)_{u,v} vx)^(n-1)",
            |t| binom_derivative(t, 2),
        ),
        IdentityRecord::new(
            "binom-derivative-3",
            "binomial",
            BivariateExact,
            RationalRoots,
            "D (a (-)_{u,v} x)^(n) = -{n} (a (-)_{u,v} vx)^(n-1)",
            |t| binom_derivative(t, 3),
        ),
        IdentityRecord::new(
            "binom-phi-product",
            "binomial",
            BivariateExact,
            RationalRoots,
            "(x (+)_{phi,phi'} y)^(n) = prod_{k<n} (phi^k x + phi'^k y)",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                every_degree(t.order2, |n| {
                    let lhs = DeformedBinomial::new(n, phi.clone(), phi_p.clone(), &c)?.coeffs;
                    let rhs = phi_product_coeffs(n, c.params())?;
                    Ok(Verdict::all(lhs.iter().zip(&rhs).map(|(a, b)| exact(a, b))))
                })
            },
        ),
        IdentityRecord::new(
            "deformed-zero-phi",
            "binomial",
            SeriesExact,
            RationalRoots,
            "0_{phi,phi'}^(n) = 0 for n >= 1",
            |t| {
                let c = t.roots()?;
                let (phi, phi_p) = roots_of(&c);
                every_degree(t.order, |n| {
                    if n == 0 {
                        return Ok(Verdict::Pass);
                    }
                    Ok(exact(&deformed_zero(n, &phi, &phi_p, &c)?, &Q::zero()))
                })
            },
        ),
        IdentityRecord::new(
            "multinomial-composition",
            "binomial",
            SeriesExact,
            RationalRoots,
            "(m+1)_u^(n) = ((m)_u (+)_{1,u_(m+1)} 1)^(n) = sum over k_1+...+k_(m+1)=n of {n}!/prod {k_i}! prod u_i^C(k_i,2)",
            |t| {
                let c = t.roots()?;
                let m = t.index("m", 1, 4);
                let us: Vec<Q> = (0..m).map(|i| t.q(&format!("u{}", i + 1))).collect();
                let inductive = multinomial_inductive(&us, t.order, &c)?;
                every_degree(t.order, |n| Ok(exact(&multinomial_number(&us, n, &c)?, &inductive[n])))
            },
        ),
    ]
}

pub(super) fn roots_of<F: Field>(c: &SeqCache<F>) -> (F, F) {
    let (a, b) = c.params().roots().expect("sampled roots are stored");
    (a.clone(), b.clone())
}

/// The homogeneous polynomial `(x (+)_{u,v} y)^(n)` as a bivariate series of order `n`.
pub(super) fn db<F: Field>(n: usize, u: &F, v: &F, c: &SeqCache<F>) -> Result<Series2<F>> {
    Ok(DeformedBinomial::new(n, u.clone(), v.clone(), c)?.to_series2(n))
}

/// Check `check(n)` for `n = 0..=max`; the first failure wins.
pub(super) fn every_degree(max: usize, mut check: impl FnMut(usize) -> Result<Verdict>) -> Result<Verdict> {
    for n in 0..=max {
        let v = check(n)?;
        if !v.is_pass() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn monomial2<F: Field>(j: usize, k: usize, order: usize) -> Series2<F> {
    Series2::from_fn(order, |a, b| if (a, b) == (j, k) { F::one() } else { F::zero() })
}

fn int_pair(t: &mut Trial) -> (i64, i64) {
    let n = t.index("n", 0, 40) as i64 - 20;
    let k = t.index("k", 0, 40) as i64 - 20;
    (n, k)
}

fn pascal(t: &mut Trial, swapped: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (mut a, mut b) = roots_of(&c);
    if swapped {
        std::mem::swap(&mut a, &mut b);
    }
    for n in 2..t.order {
        for k in 1..n {
            let lhs = c.lucasnomial(n + 1, k)?;
            let rhs = Field::pow(&a, k as u64) * c.lucasnomial(n, k)?
                + Field::pow(&b, (n + 1 - k) as u64) * c.lucasnomial(n, k - 1)?;
            let v = exact(&lhs, &rhs);
            if !v.is_pass() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Pass)
}

fn binet_recurrence(t: &mut Trial) -> Result<Verdict> {
    let c = t.roots()?;
    every_degree(2 * t.order, |n| Ok(exact(&binet(n, c.params())?, &lucas_u(n, c.params()))))
}

fn companion_roots(t: &mut Trial) -> Result<Verdict> {
    let c = t.roots()?;
    let (phi, phi_p) = roots_of(&c);
    every_degree(2 * t.order, |n| {
        Ok(exact(
            &lucas_v(n, c.params()),
            &(Field::pow(&phi, n as u64) + Field::pow(&phi_p, n as u64)),
        ))
    })
}

fn lucasnomial_symmetry(t: &mut Trial) -> Result<Verdict> {
    let c = t.roots()?;
    every_degree(t.order, |n| {
        let row = c.row(n)?;
        Ok(Verdict::all((0..=n).map(|k| {
            let by_factorials = c.factorial(n).unwrap() / (c.factorial(k).unwrap() * c.factorial(n - k).unwrap());
            Verdict::all([exact(&row[k], &row[n - k]), exact(&row[k], &by_factorials)])
        })))
    })
}

fn example_rows(t: &mut Trial) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let b = |n| DeformedBinomial::new(n, u.clone(), v.clone(), &c).map(|d| d.coeffs);
    let (u2, u3, u4) = (c.u(2), c.u(3), c.u(4));
    let rows: [Vec<Q>; 5] = [
        vec![Q::one()],
        vec![Q::one(), Q::one()],
        vec![u.clone(), u2, v.clone()],
        vec![Field::pow(&u, 3), u3.clone() * u.clone(), u3.clone() * v.clone(), Field::pow(&v, 3)],
        vec![
            Field::pow(&u, 6),
            u4.clone() * Field::pow(&u, 3),
            u3 * c.v(2) * u.clone() * v.clone(),
            u4 * Field::pow(&v, 3),
            Field::pow(&v, 6),
        ],
    ];
    every_degree(4, |n| {
        let got = b(n)?;
        Ok(Verdict::all(got.iter().zip(&rows[n]).map(|(a, e)| exact(a, e))))
    })
}

fn binom_neg(t: &mut Trial, odd: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let one = Q::one();
    every_degree(t.order2 / 2, |n| {
        let deg = if odd { 2 * n + 1 } else { 2 * n };
        let lhs = db(deg, &-u.clone(), &-v.clone(), &c)?;
        let base = db(deg, &u, &v, &c)?;
        let base = if odd { base } else { base.dilate(&one, &-one.clone()) };
        Ok(series2(&lhs, &base.scale(&Q::sign_pow(n as u64))))
    })
}

fn binom_split(t: &mut Trial, swapped: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let (mut a, mut b) = roots_of(&c);
    if swapped {
        std::mem::swap(&mut a, &mut b);
    }
    every_degree(t.order2 - 1, |n| {
        let order = n + 1;
        let lhs = DeformedBinomial::new(n + 1, u.clone(), v.clone(), &c)?.to_series2(order);
        let base = DeformedBinomial::new(n, u.clone(), v.clone(), &c)?.to_series2(order);
        let left = monomial2(1, 0, order).mul(&base.dilate(&u, &a));
        let right = monomial2(0, 1, order).mul(&base.dilate(&b, &v));
        Ok(series2(&lhs, &left.add(&right)?))
    })
}

fn binom_scale_params(t: &mut Trial) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v, a) = (t.q("u"), t.q("v"), t.q("a"));
    // a = 1 makes the display trivially true
    t.require(a != Q::one())?;
    every_degree(t.order2, |n| {
        let lhs = db(n, &(a.clone() * u.clone()), &(a.clone() * v.clone()), &c)?;
        let rhs = db(n, &u, &v, &c)?.scale(&Field::pow(&a, tri(n)));
        Ok(series2(&lhs, &rhs))
    })
}

fn binom_axis(t: &mut Trial, y_axis: bool) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v, z) = (t.q("u"), t.q("v"), t.q("point"));
    let zero = Q::zero();
    every_degree(t.order, |alpha| {
        let b = DeformedBinomial::new(alpha, u.clone(), v.clone(), &c)?;
        let (lhs, w) = if y_axis {
            (b.value(&zero, &z), &v)
        } else {
            (b.value(&z, &zero), &u)
        };
        Ok(exact(&lhs, &(Field::pow(w, tri(alpha)) * Field::pow(&z, alpha as u64))))
    })
}

fn binom_derivative(t: &mut Trial, item: u8) -> Result<Verdict> {
    let c = t.roots()?;
    let (u, v) = (t.q("u"), t.q("v"));
    let one = Q::one();
    let minus = -Q::one();
    every_degree(t.order2, |n| {
        if n == 0 {
            return Ok(Verdict::Pass);
        }
        let cur = db(n, &u, &v, &c)?;
        let prev = db(n - 1, &u, &v, &c)?;
        let scale = c.u(n);
        // x is the first variable in item 1 and the second in items 2 and 3
        let (lhs, rhs) = match item {
            1 => (lucas_derivative_x(&cur, &c), prev.dilate(&u, &one).scale(&scale)),
            2 => (lucas_derivative_y(&cur, &c), prev.dilate(&one, &v).scale(&scale)),
            _ => (
                lucas_derivative_y(&cur.dilate(&one, &minus), &c),
                prev.dilate(&one, &(minus.clone() * v.clone())).scale(&-scale),
            ),
        };
        Ok(series2(&lhs, &rhs))
    })
}
