use crate::field::Field;
use crate::series::{Series, Series2};

/// Outcome of one parameter draw.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Pass,
    Fail { lhs: String, rhs: String, delta: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    /// The first failing verdict, or `Pass`.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts
            .into_iter()
            .find(|v| !v.is_pass())
            .unwrap_or(Verdict::Pass)
    }
}

pub fn exact<F: Field>(lhs: &F, rhs: &F) -> Verdict {
    if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail {
            lhs: lhs.render(),
            rhs: rhs.render(),
            delta: (lhs.clone() - rhs.clone()).render(),
        }
    }
}

/// Coefficient-wise equality over the common order.
pub fn series<F: Field>(lhs: &Series<F>, rhs: &Series<F>) -> Verdict {
    match lhs.first_mismatch(rhs) {
        None => Verdict::Pass,
        Some(n) => Verdict::Fail {
            lhs: format!("[z^{n}] {}", lhs.coeff(n).render()),
            rhs: format!("[z^{n}] {}", rhs.coeff(n).render()),
            delta: (lhs.coeff(n) - rhs.coeff(n)).render(),
        },
    }
}

pub fn series2<F: Field>(lhs: &Series2<F>, rhs: &Series2<F>) -> Verdict {
    match lhs.first_mismatch(rhs) {
        None => Verdict::Pass,
        Some((j, k)) => Verdict::Fail {
            lhs: format!("[x^{j} y^{k}] {}", lhs.coeff(j, k).render()),
            rhs: format!("[x^{j} y^{k}] {}", rhs.coeff(j, k).render()),
            delta: (lhs.coeff(j, k) - rhs.coeff(j, k)).render(),
        },
    }
}

/// `|lhs - rhs| <= tol * max(1, |rhs|)`.
pub fn close(lhs: f64, rhs: f64, tol: f64) -> Verdict {
    let delta = (lhs - rhs).abs();
    if delta <= tol * rhs.abs().max(1.0) {
        Verdict::Pass
    } else {
        Verdict::Fail {
            lhs: format!("{lhs:e}"),
            rhs: format!("{rhs:e}"),
            delta: format!("{delta:e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn verdicts() {
        assert!(close(1.0, 1.0 + 1e-12, 1e-10).is_pass());
        assert!(!close(1.0, 1.1, 1e-10).is_pass());
        let a = Series::new(vec![Rational::from_i64(1), Rational::from_i64(2)]);
        let b = Series::new(vec![Rational::from_i64(1), Rational::from_i64(3)]);
        match series(&a, &b) {
            Verdict::Fail { delta, .. } => assert_eq!(delta, "-1"),
            Verdict::Pass => panic!("expected a mismatch"),
        }
        assert_eq!(Verdict::all([Verdict::Pass, exact(&a.coeff(1), &b.coeff(1))]), exact(&a.coeff(1), &b.coeff(1)));
    }
}
