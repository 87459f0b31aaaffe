//! Worked values checked against independently computed references.

use lucas_pantograph::binomial::{deformed_power_value, deformed_zero, multinomial_number, phi_product_power};
use lucas_pantograph::calculus::{antiderivative_series, integration_by_parts_residual, lucas_integral, Polynomial};
use lucas_pantograph::field::{Field, GaussianRational, Rational};
use lucas_pantograph::functions::{
    binomial_fn_series2, deformed_zero_fn_value, deformed_zero_series, find_pi_u, fn_series, fn_value,
    multinomial_fn_value, tilde_fn_value, FnKind, PiUOptions, Shape,
};
use lucas_pantograph::lucas::{LucasParams, SeqCache};
use lucas_pantograph::series::Series;

type Q = Rational;
type G = GaussianRational;

fn q(n: i64, d: i64) -> Q {
    Q::from_ratio(n, d)
}

fn exact(s: i64, t: i64) -> SeqCache<Q> {
    SeqCache::new(LucasParams::new(q(s, 1), q(t, 1)).unwrap())
}

fn float(s: f64, t: f64) -> SeqCache<f64> {
    SeqCache::new(LucasParams::new(s, t).unwrap())
}

#[test]
fn exp_coefficients() {
    let c = exact(1, 1);
    let u = q(3, 5);
    let exp = fn_series(FnKind::Exp, &u, &c, 6).unwrap();
    // C(3,2) = 3 and {3}! = 1*1*2
    assert_eq!(exp.coeff(3), Field::pow(&u, 3) / q(2, 1));
    let flat = fn_series(FnKind::Exp, &Q::zero(), &c, 6).unwrap();
    assert_eq!(flat, Series::new(vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]));
}

#[test]
fn dilation_by_i_on_exp() {
    let c = SeqCache::new(LucasParams::new(G::from_i64(1), G::from_i64(1)).unwrap());
    let u = G::new(q(1, 2), q(-2, 3));
    let dilated = fn_series(FnKind::Exp, &u, &c, 10).unwrap().dilate(&G::i());
    let mut ipow = G::one();
    for n in 0..=10usize {
        let tri = (n * n.saturating_sub(1) / 2) as u64;
        let direct = ipow.clone() * Field::pow(&u, tri) / c.factorial(n).unwrap();
        assert_eq!(dilated.coeff(n), direct, "n = {n}");
        ipow *= G::i();
    }
}

#[test]
fn secant_series_against_values() {
    let c = float(1.0, 1.0);
    let x = 0.3;
    let sec = fn_series(FnKind::Sec, &0.8, &c, 40).unwrap().eval_at(&x);
    let cos = fn_value(FnKind::Cos, x, 0.8, &c, 1e-15).unwrap().value;
    assert!((sec - 1.0 / cos).abs() < 1e-12, "{sec} vs {}", 1.0 / cos);
}

#[test]
fn cos_diagonal_is_the_deformed_zero_cosine() {
    let c = exact(3, -2);
    let (u, v) = (q(2, 3), q(-5, 4));
    let diag = binomial_fn_series2(FnKind::Cos, &u, &v, &c, 10).unwrap().substitute_diagonal(&q(-1, 1));
    assert_eq!(diag, deformed_zero_series(Shape::Cos, &u, &v, &c, 10).unwrap());
}

#[test]
fn deformed_powers() {
    let c = exact(1, 1);
    let one = Q::one();
    // Fibonacci row 4 of the lucasnomials is 1 3 6 3 1
    let direct: Q = (0..=4).map(|k| c.lucasnomial(4, k).unwrap()).fold(Q::zero(), |a, b| a + b);
    assert_eq!(direct, q(1 + 3 + 6 + 3 + 1, 1));
    assert_eq!(deformed_power_value(4, &one, &one, &one, &one, &c).unwrap(), direct);
    let (u, v) = (q(2, 1), q(3, 1));
    assert_eq!(deformed_power_value(2, &one, &one, &u, &v, &c).unwrap(), q(6, 1));
    assert_eq!(deformed_power_value(3, &one, &Q::zero(), &u, &v, &c).unwrap(), q(8, 1));
}

#[test]
fn phi_product_against_deformed_sum() {
    let params = LucasParams::from_roots(q(2, 1), q(-1, 1)).unwrap();
    let c = SeqCache::new(params.clone());
    let one = Q::one();
    assert_eq!(phi_product_power(3, &one, &one, &params).unwrap(), q(10, 1));
    let (phi, phi_prime) = params.roots().unwrap();
    assert_eq!(deformed_power_value(3, &one, &one, phi, phi_prime, &c).unwrap(), q(10, 1));
}

#[test]
fn deformed_zeros() {
    let c = exact(5, -3);
    let (u, v) = (q(7, 2), q(-1, 3));
    assert_eq!(deformed_zero(2, &u, &v, &c).unwrap(), u.clone() - q(5, 1) + v.clone());
    let params = LucasParams::from_roots(q(3, 2), q(-4, 5)).unwrap();
    let c = SeqCache::new(params.clone());
    let (phi, phi_prime) = params.roots().unwrap();
    for n in 1..8 {
        assert!(deformed_zero(n, phi, phi_prime, &c).unwrap().is_zero(), "n = {n}");
    }
    let sin = deformed_zero_series(Shape::Sin, phi, phi_prime, &c, 12).unwrap();
    assert!(sin.is_zero());
}

#[test]
fn multinomial_numbers() {
    let c = exact(2, 3);
    let us = [q(4, 3), q(-2, 5)];
    assert_eq!(multinomial_number(&us, 2, &c).unwrap(), us[0].clone() + q(2, 1) + us[1].clone());
    let single = [q(3, 1)];
    for n in 0..6usize {
        let tri = (n * n.saturating_sub(1) / 2) as u64;
        assert_eq!(multinomial_number(&single, n, &c).unwrap(), Field::pow(&single[0], tri));
    }
}

#[test]
fn multinomial_exp_is_a_product_of_values() {
    let c = float(1.0, 1.0);
    let (x, us) = (0.4, [0.6, -0.3, 0.9]);
    let joint = multinomial_fn_value(FnKind::Exp, &us, x, &c, 1e-15).unwrap().value;
    let product: f64 = us.iter().map(|&u| fn_value(FnKind::Exp, x, u, &c, 1e-15).unwrap().value).product();
    assert!((joint - product).abs() < 1e-10 * product.abs(), "{joint} vs {product}");
}

#[test]
fn deformed_zero_functions() {
    let c = float(1.3, 0.7);
    let (phi, phi_prime) = {
        let (a, b) = c.params().roots().unwrap();
        (*a, *b)
    };
    // the exact value is 0, so the relative stopping rule only closes
    // once the rounding noise has decayed; that needs small x
    for x in [0.05, 0.1, 0.2] {
        let s = deformed_zero_fn_value(FnKind::Sin, phi, phi_prime, x, &c, 1e-15).unwrap().value;
        assert!(s.abs() < 1e-12, "x = {x}: {s}");
    }
    let c = float(1.0, 1.0);
    let x = 0.4;
    let sin = fn_value(FnKind::Sin, x, 1.0, &c, 1e-15).unwrap().value;
    let cos = fn_value(FnKind::Cos, x, 1.0, &c, 1e-15).unwrap().value;
    let zero_cos = deformed_zero_fn_value(FnKind::Cos, 1.0, 1.0, x, &c, 1e-15).unwrap().value;
    assert!((zero_cos - (sin * sin + cos * cos)).abs() < 1e-10);
}

#[test]
fn tilde_tangent_and_secant() {
    let c = float(1.0, 1.0);
    let (x, u) = (0.3, 0.5);
    let tan = tilde_fn_value(FnKind::Tan, x, u, &c, 1e-15).unwrap();
    let sec = tilde_fn_value(FnKind::Sec, x, u, &c, 1e-15).unwrap();
    assert!((tan * tan + 1.0 - sec * sec).abs() < 1e-10);
}

#[test]
fn pi_u_roots() {
    for (s, t, lo, hi) in [(1.0, 1.0, 1.5, 1.6), (2.0, 1.0, 0.0, 10.0)] {
        let c = float(s, t);
        let root = find_pi_u(&c, 1.0, &PiUOptions::default()).unwrap();
        assert!(root.value > lo && root.value < hi, "({s}, {t}): {}", root.value);
        assert!(root.residual < 1e-10);
        // the sine changes sign across the root
        let step = 1e-6;
        let before = fn_value(FnKind::Sin, root.value - step, 1.0, &c, 1e-15).unwrap().value;
        let after = fn_value(FnKind::Sin, root.value + step, 1.0, &c, 1e-15).unwrap().value;
        assert!(before * after < 0.0);
    }
}

#[test]
fn antiderivative_of_a_cube() {
    let c = exact(1, 1);
    let cube = Series::monomial(3, Q::one(), 6);
    assert_eq!(antiderivative_series(&cube, &c).unwrap(), Series::monomial(4, q(1, 3), 6));
    assert_eq!(antiderivative_series(&Series::one(3), &c).unwrap(), Series::monomial(1, Q::one(), 3));
}

#[test]
fn integrals_and_parts() {
    let p = LucasParams::new(1.0, 1.0).unwrap();
    let x = Polynomial::monomial(1);
    let cube = Polynomial::monomial(3);
    assert!((lucas_integral(&x, 0.0, 1.0, &p, 1e-15).unwrap() - 1.0).abs() < 1e-10);
    assert!((lucas_integral(&cube, 0.0, 1.0, &p, 1e-15).unwrap() - 1.0 / 3.0).abs() < 1e-10);
    let square = Polynomial::monomial(2);
    assert!(integration_by_parts_residual(&x, &x, 0.0, 1.0, &p, 1e-15).unwrap().abs() < 1e-9);
    assert!(integration_by_parts_residual(&square, &cube, 0.0, 0.5, &p, 1e-15).unwrap().abs() < 1e-9);
    let constant = Polynomial::new(vec![2.5]);
    assert!(integration_by_parts_residual(&constant, &cube, 0.0, 0.5, &p, 1e-15).unwrap().abs() < 1e-12);
}
