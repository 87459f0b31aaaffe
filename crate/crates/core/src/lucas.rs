//! Lucas parameters, the sequences `{n}` and `<n>`, Lucastorials and
//! Lucasnomial coefficients.

use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::field::Field;

/// Relative cutoff below which a float discriminant counts as zero.
pub const DEGENERATE_DISC_RTOL: f64 = 1e-12;

/// The pair `(s, t)` of the recurrence `{n+2} = s{n+1} + t{n}`, with the
/// roots `phi`, `phi'` of `x^2 - s x - t` when the backend can represent them.
#[derive(Debug, Clone, PartialEq)]
pub struct LucasParams<F> {
    s: F,
    t: F,
    disc: F,
    roots: Option<(F, F)>,
}

impl<F: Field> LucasParams<F> {
    /// Build from `(s, t)`. In exact backends the roots exist only when
    /// `s^2 + 4t` is a perfect square.
    pub fn new(s: F, t: F) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroParameter("s"));
        }
        if t.is_zero() {
            return Err(Error::ZeroParameter("t"));
        }
        let disc = s.clone() * s.clone() + F::from_i64(4) * t.clone();
        let two = F::from_i64(2);
        let roots = disc.sqrt().map(|root| {
            (
                (s.clone() + root.clone()) / two.clone(),
                (s.clone() - root) / two.clone(),
            )
        });
        Ok(LucasParams { s, t, disc, roots })
    }

    /// Build from the two roots: `s = phi + phi'`, `t = -phi phi'`.
    pub fn from_roots(phi: F, phi_prime: F) -> Result<Self> {
        let s = phi.clone() + phi_prime.clone();
        let t = -(phi.clone() * phi_prime.clone());
        if s.is_zero() {
            return Err(Error::ZeroParameter("s"));
        }
        if t.is_zero() {
            return Err(Error::ZeroParameter("t"));
        }
        let disc = s.clone() * s.clone() + F::from_i64(4) * t.clone();
        Ok(LucasParams {
            s,
            t,
            disc,
            roots: Some((phi, phi_prime)),
        })
    }

    pub fn s(&self) -> &F {
        &self.s
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    /// `s^2 + 4t`.
    pub fn disc(&self) -> &F {
        &self.disc
    }

    pub fn roots(&self) -> Result<(&F, &F)> {
        self.roots
            .as_ref()
            .map(|(a, b)| (a, b))
            .ok_or(Error::RootsUnavailable)
    }

    pub fn phi(&self) -> Result<&F> {
        self.roots().map(|r| r.0)
    }

    pub fn phi_prime(&self) -> Result<&F> {
        self.roots().map(|r| r.1)
    }

    /// Repeated root `phi = phi'`: exact zero discriminant, or a float one
    /// below `1e-12 * max(|s|^2, 4|t|)`.
    pub fn is_degenerate(&self) -> bool {
        if F::is_exact() {
            self.disc.is_zero()
        } else {
            let scale = (self.s.magnitude().powi(2)).max(4.0 * self.t.magnitude());
            self.disc.magnitude() < DEGENERATE_DISC_RTOL * scale
        }
    }
}

/// `{n}` by the three-term recurrence from `{0} = 0`, `{1} = 1`.
pub fn lucas_u<F: Field>(n: usize, params: &LucasParams<F>) -> F {
    run_recurrence(n, F::zero(), F::one(), params)
}

/// `<n>` by the same recurrence from `<0> = 2`, `<1> = s`.
pub fn lucas_v<F: Field>(n: usize, params: &LucasParams<F>) -> F {
    run_recurrence(n, F::from_i64(2), params.s().clone(), params)
}

fn run_recurrence<F: Field>(n: usize, a0: F, a1: F, params: &LucasParams<F>) -> F {
    let (mut a, mut b) = (a0, a1);
    for _ in 0..n {
        let next = params.s().clone() * b.clone() + params.t().clone() * a;
        a = b;
        b = next;
    }
    a
}

/// Closed form for `{n}`: `(phi^n - phi'^n)/(phi - phi')`, or `n (s/2)^(n-1)`
/// when the roots coincide.
pub fn binet<F: Field>(n: usize, params: &LucasParams<F>) -> Result<F> {
    if n == 0 {
        return Ok(F::zero());
    }
    if params.is_degenerate() {
        let half_s = params.s().clone() / F::from_i64(2);
        return Ok(F::from_i64(n as i64) * half_s.pow(n as u64 - 1));
    }
    let (phi, phi_prime) = params.roots()?;
    let num = phi.pow(n as u64) - phi_prime.pow(n as u64);
    Ok(num / (phi.clone() - phi_prime.clone()))
}

/// `{n}! = {1}{2}...{n}`.
pub fn lucastorial<F: Field>(n: usize, params: &LucasParams<F>) -> Result<F> {
    let mut acc = F::one();
    let (mut a, mut b) = (F::zero(), F::one());
    for k in 1..=n {
        if b.is_zero() {
            return Err(Error::VanishingFactor(k));
        }
        acc = acc * b.clone();
        let next = params.s().clone() * b.clone() + params.t().clone() * a;
        a = b;
        b = next;
    }
    Ok(acc)
}

/// `{n choose k}` as the telescoped product `prod_{j=1..k} {n-k+j}/{j}`.
pub fn lucasnomial<F: Field>(n: usize, k: usize, params: &LucasParams<F>) -> Result<F> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let k = k.min(n - k);
    let values: Vec<F> = (0..=n).map(|j| lucas_u(j, params)).collect();
    telescoped(&values, n, k)
}

fn telescoped<F: Field>(u: &[F], n: usize, k: usize) -> Result<F> {
    let mut acc = F::one();
    for j in 1..=k {
        if u[j].is_zero() {
            return Err(Error::DivisionByZeroFactor(j));
        }
        acc = acc * u[n - k + j].clone() / u[j].clone();
    }
    Ok(acc)
}

/// `n(n-1)/2` on all integers.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `binom2` for non-negative indices.
pub(crate) fn tri(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

#[derive(Debug)]
struct Tables<F> {
    u: Vec<F>,
    v: Vec<F>,
    factorials: Vec<F>,
    first_zero: Option<usize>,
    rows: Vec<Option<Vec<F>>>,
}

/// Memoised `{n}`, `<n>`, `{n}!` and Lucasnomial rows for one parameter point.
///
/// Tables grow on demand behind a lock, so a shared `&SeqCache` can be used
/// from several threads.
#[derive(Debug)]
pub struct SeqCache<F: Field> {
    params: LucasParams<F>,
    tables: RwLock<Tables<F>>,
}

impl<F: Field> Clone for SeqCache<F> {
    fn clone(&self) -> Self {
        let t = self.tables.read().expect("sequence cache lock poisoned");
        SeqCache {
            params: self.params.clone(),
            tables: RwLock::new(Tables {
                u: t.u.clone(),
                v: t.v.clone(),
                factorials: t.factorials.clone(),
                first_zero: t.first_zero,
                rows: t.rows.clone(),
            }),
        }
    }
}

impl<F: Field> SeqCache<F> {
    pub fn new(params: LucasParams<F>) -> Self {
        let tables = Tables {
            u: vec![F::zero(), F::one()],
            v: vec![F::from_i64(2), params.s().clone()],
            factorials: vec![F::one(), F::one()],
            first_zero: None,
            rows: Vec::new(),
        };
        SeqCache {
            params,
            tables: RwLock::new(tables),
        }
    }

    /// Cache pre-filled up to index `n`.
    pub fn with_len(params: LucasParams<F>, n: usize) -> Self {
        let cache = Self::new(params);
        cache.ensure(n);
        cache
    }

    pub fn params(&self) -> &LucasParams<F> {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.tables.read().expect("sequence cache lock poisoned").u.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ensure(&self, n: usize) {
        if self.len() > n {
            return;
        }
        let mut t = self.tables.write().expect("sequence cache lock poisoned");
        let (s, tt) = (self.params.s().clone(), self.params.t().clone());
        while t.u.len() <= n {
            let m = t.u.len();
            let u_next = s.clone() * t.u[m - 1].clone() + tt.clone() * t.u[m - 2].clone();
            let v_next = s.clone() * t.v[m - 1].clone() + tt.clone() * t.v[m - 2].clone();
            if u_next.is_zero() && t.first_zero.is_none() {
                t.first_zero = Some(m);
            }
            let fact = t.factorials[m - 1].clone() * u_next.clone();
            t.u.push(u_next);
            t.v.push(v_next);
            t.factorials.push(fact);
        }
    }

    pub fn u(&self, n: usize) -> F {
        self.ensure(n);
        self.tables.read().expect("sequence cache lock poisoned").u[n].clone()
    }

    pub fn v(&self, n: usize) -> F {
        self.ensure(n);
        self.tables.read().expect("sequence cache lock poisoned").v[n].clone()
    }

    /// Least `n >= 1` with `{n} = 0` among the cached indices.
    pub fn first_zero_factorial_index(&self) -> Option<usize> {
        self.tables.read().expect("sequence cache lock poisoned").first_zero
    }

    pub fn factorial(&self, n: usize) -> Result<F> {
        self.ensure(n);
        let t = self.tables.read().expect("sequence cache lock poisoned");
        match t.first_zero {
            Some(k) if k <= n => Err(Error::VanishingFactor(k)),
            _ => Ok(t.factorials[n].clone()),
        }
    }

    /// `{n choose k}`; rows are memoised.
    pub fn lucasnomial(&self, n: usize, k: usize) -> Result<F> {
        if k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        self.row(n).map(|row| row[k].clone())
    }

    /// The full row `{n choose 0}, ..., {n choose n}`.
    pub fn row(&self, n: usize) -> Result<Vec<F>> {
        {
            let t = self.tables.read().expect("sequence cache lock poisoned");
            if let Some(Some(row)) = t.rows.get(n) {
                return Ok(row.clone());
            }
        }
        self.ensure(n);
        let u: Vec<F> = {
            let t = self.tables.read().expect("sequence cache lock poisoned");
            t.u[..=n].to_vec()
        };
        let mut row: Vec<F> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if 2 * k > n {
                let mirror = row[n - k].clone();
                row.push(mirror);
            } else if k == 0 {
                row.push(F::one());
            } else {
                // {n choose k} = {n choose k-1} * {n-k+1} / {k}
                if u[k].is_zero() {
                    return Err(Error::DivisionByZeroFactor(k));
                }
                let prev: F = row[k - 1].clone();
                row.push(prev * u[n - k + 1].clone() / u[k].clone());
            }
        }
        let mut t = self.tables.write().expect("sequence cache lock poisoned");
        if t.rows.len() <= n {
            t.rows.resize(n + 1, None);
        }
        t.rows[n] = Some(row.clone());
        Ok(row)
    }
}
