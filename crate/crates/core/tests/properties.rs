use lucas_pantograph::binomial::{multinomial_inductive, multinomial_number, DeformedBinomial};
use lucas_pantograph::calculus::{antiderivative_series, lucas_derivative_series};
use lucas_pantograph::field::{Field, GaussianRational, Rational};
use lucas_pantograph::lucas::{binet, lucas_u, lucasnomial, LucasParams, SeqCache};
use lucas_pantograph::series::{Series, Series2};
use proptest::prelude::*;

type Q = Rational;
type G = GaussianRational;

fn rational() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Q::from_ratio(n, d))
}

fn nonzero() -> impl Strategy<Value = Q> {
    rational().prop_filter("non-zero", |q| !q.is_zero())
}

fn gaussian() -> impl Strategy<Value = G> {
    (rational(), rational()).prop_map(|(re, im)| G::new(re, im))
}

fn series(order: usize) -> impl Strategy<Value = Series<Q>> {
    prop::collection::vec(rational(), order + 1).prop_map(Series::new)
}

fn series2(order: usize) -> impl Strategy<Value = Series2<Q>> {
    let len = (order + 1) * (order + 2) / 2;
    prop::collection::vec(rational(), len).prop_map(move |v| {
        let mut it = v.into_iter();
        Series2::from_fn(order, |_, _| it.next().unwrap())
    })
}

fn params() -> impl Strategy<Value = LucasParams<Q>> {
    (nonzero(), nonzero()).prop_map(|(s, t)| LucasParams::new(s, t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        if let Some(inv) = Field::inv(&a) {
            prop_assert_eq!(a.clone() * inv, Q::one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn gaussian_field_laws(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() - c.clone()), a.clone() * b.clone() - a.clone() * c.clone());
        if let Some(inv) = Field::inv(&a) {
            prop_assert_eq!(a * inv, G::one());
        }
    }

    #[test]
    fn pow_adds_exponents(a in nonzero(), m in 0u64..8, n in 0u64..8) {
        prop_assert_eq!(Field::pow(&a, m) * Field::pow(&a, n), Field::pow(&a, m + n));
    }

    #[test]
    fn series_ring_axioms(f in series(6), g in series(6), h in series(6)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()), f.mul(&g).add(&f.mul(&h)).unwrap());
        prop_assert_eq!(f.mul(&Series::one(6)), f.clone());
    }

    #[test]
    fn series_product_is_convolution(f in series(8), g in series(8)) {
        let p = f.mul(&g);
        for n in 0..=8 {
            let mut acc = Q::zero();
            for k in 0..=n {
                acc += f.coeff(k) * g.coeff(n - k);
            }
            prop_assert_eq!(p.coeff(n), acc);
        }
    }

    #[test]
    fn reciprocal_inverts_units(f in series(6)) {
        prop_assume!(!f.coeff(0).is_zero());
        prop_assert_eq!(f.mul(&f.reciprocal().unwrap()), Series::one(6));
    }

    #[test]
    fn dilations_compose(f in series(7), a in rational(), b in rational()) {
        prop_assert_eq!(f.dilate(&a).dilate(&b), f.dilate(&(a * b)));
    }

    #[test]
    fn dilation_is_a_ring_map(f in series(6), g in series(6), a in rational()) {
        prop_assert_eq!(f.mul(&g).dilate(&a), f.dilate(&a).mul(&g.dilate(&a)));
    }

    #[test]
    fn diagonal_substitution_commutes_with_products(f in series2(5), g in series2(5), c in rational()) {
        let lhs = f.mul(&g).substitute_diagonal(&c);
        let rhs = f.substitute_diagonal(&c).mul(&g.substitute_diagonal(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bivariate_dilations_compose(f in series2(5), a in rational(), b in rational(), c in rational(), d in rational()) {
        prop_assert_eq!(f.dilate(&a, &b).dilate(&c, &d), f.dilate(&(a * c), &(b * d)));
        prop_assert_eq!(f.swap().swap(), f);
    }

    #[test]
    fn lucasnomials_are_symmetric(p in params(), n in 0usize..10, k in 0usize..10) {
        prop_assume!(k <= n);
        match (lucasnomial(n, k, &p), lucasnomial(n, n - k, &p)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }

    #[test]
    fn binet_matches_the_recurrence(p in params(), n in 0usize..16) {
        if let Ok(closed) = binet(n, &p) {
            prop_assert_eq!(closed, lucas_u(n, &p));
        }
    }

    #[test]
    fn derivative_inverts_antiderivative(p in params(), f in series(8)) {
        let cache = SeqCache::new(p);
        prop_assume!(cache.first_zero_factorial_index().is_none_or(|i| i > 9));
        let back = lucas_derivative_series(&antiderivative_series(&f, &cache).unwrap(), &cache);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn derivative_is_linear(p in params(), f in series(6), g in series(6), a in rational()) {
        let cache = SeqCache::new(p);
        let lhs = lucas_derivative_series(&f.scale(&a).add(&g).unwrap(), &cache);
        let rhs = lucas_derivative_series(&f, &cache).scale(&a).add(&lucas_derivative_series(&g, &cache)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn deformed_binomial_is_symmetric_under_swap(p in params(), n in 0usize..8, u in nonzero(), v in nonzero(), x in rational(), y in rational()) {
        let cache = SeqCache::new(p);
        prop_assume!(cache.first_zero_factorial_index().is_none_or(|i| i > n));
        let a = DeformedBinomial::new(n, u.clone(), v.clone(), &cache).unwrap();
        let b = DeformedBinomial::new(n, v, u, &cache).unwrap();
        prop_assert_eq!(a.value(&x, &y), b.value(&y, &x));
    }

    #[test]
    fn multinomial_numbers_agree(p in params(), us in prop::collection::vec(nonzero(), 1..4), n in 0usize..7) {
        let cache = SeqCache::new(p);
        prop_assume!(cache.first_zero_factorial_index().is_none_or(|i| i > n));
        let direct = multinomial_number(&us, n, &cache).unwrap();
        let inductive = multinomial_inductive(&us, n, &cache).unwrap();
        prop_assert_eq!(direct, inductive[n].clone());
    }
}
