//! Closed-form bounds on `mis_k`, `mis_{<=k}` and `mis`, evaluated exactly
//! when all exponents are integers and in the natural-log domain otherwise.

mod curves;
mod entropy;
mod two_sum;

pub use curves::{curve_csv, curve_export, CurveRow};
pub use entropy::{
    binary_entropy, binomial_tail, entropy_tail_check, solve_eps_delta, theorem1_exponent,
    EpsDelta, TailCheck, EPS_ENTROPY_MAX,
};
pub use two_sum::{
    default_witness_grid, two_sum, two_sum_first_term_ln, two_sum_second_term_ln, two_sum_witness,
    TwoSum, TwoSumWitness,
};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A bound value: an exact rational when every exponent is an integer,
/// otherwise its natural logarithm.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactBound {
    Exact(BigRational),
    Log(f64),
}

impl ExactBound {
    pub fn ln(&self) -> f64 {
        match self {
            ExactBound::Exact(r) => ln_rational(r),
            ExactBound::Log(l) => *l,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactBound::Exact(r) => r.to_f64().unwrap_or_else(|| ln_rational(r).exp()),
            ExactBound::Log(l) => l.exp(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactBound::Exact(r) => Some(r),
            ExactBound::Log(_) => None,
        }
    }

    /// `count <= self`, decided exactly on the rational path.
    pub fn admits(&self, count: u64) -> bool {
        match self {
            ExactBound::Exact(r) => BigRational::from_integer(BigInt::from(count)) <= *r,
            ExactBound::Log(l) => {
                count == 0 || (count as f64).ln() <= *l + 1e-12 * l.abs().max(1.0)
            }
        }
    }

    /// `count == self`; only meaningful on the rational path.
    pub fn attained_by(&self, count: u64) -> bool {
        match self {
            ExactBound::Exact(r) => BigRational::from_integer(BigInt::from(count)) == *r,
            ExactBound::Log(_) => false,
        }
    }
}

impl Serialize for ExactBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        if let ExactBound::Exact(r) = self {
            m.serialize_entry("exact", &rational_string(r))?;
        }
        m.serialize_entry("ln", &crate::report::round_sig(self.ln()))?;
        m.serialize_entry("value", &crate::report::round_sig(self.to_f64()))?;
        m.end()
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational; `-inf` for zero.
pub fn ln_rational(r: &BigRational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    assert!(r.is_positive(), "logarithm of a negative rational");
    ln_biguint(r.numer().magnitude()) - ln_biguint(r.denom().magnitude())
}

/// `base^exp` for an integer, possibly negative, exponent.
pub fn rational_pow(base: u32, exp: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(base), exp.unsigned_abs() as usize);
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")))
    } else {
        Ok(())
    }
}

/// `3^(n/3)`.
pub fn moon_moser(n: usize) -> ExactBound {
    if n.is_multiple_of(3) {
        ExactBound::Exact(rational_pow(3, (n / 3) as i64))
    } else {
        ExactBound::Log(n as f64 / 3.0 * 3f64.ln())
    }
}

/// `3^(4k-n) 4^(n-3k)`, bounding `mis_{<=k}`.
pub fn eppstein(n: usize, k: usize) -> Result<ExactBound> {
    check_nk(n, k)?;
    Ok(ExactBound::Exact(eppstein_rational(n as i64, k as i64)))
}

pub(crate) fn eppstein_rational(n: i64, k: i64) -> BigRational {
    rational_pow(3, 4 * k - n) * rational_pow(4, n - 3 * k)
}

/// `ln` of the Eppstein expression for real arguments.
pub fn eppstein_ln(n: f64, k: f64) -> f64 {
    (4.0 * k - n) * 3f64.ln() + (n - 3.0 * k) * 4f64.ln()
}

/// `4^(5k-n) 5^(n-4k)`, bounding `mis_k`.
pub fn nielsen(n: usize, k: usize) -> Result<ExactBound> {
    check_nk(n, k)?;
    let (n, k) = (n as i64, k as i64);
    Ok(ExactBound::Exact(
        rational_pow(4, 5 * k - n) * rational_pow(5, n - 4 * k),
    ))
}

pub fn nielsen_ln(n: f64, k: f64) -> f64 {
    (5.0 * k - n) * 4f64.ln() + (n - 4.0 * k) * 5f64.ln()
}

/// `ln` of `(4-η)^((5-η)k-n) (5-η)^(n-(4-η)k)` for real `n`, `k`.
pub fn corollary1_ln(n: f64, k: f64, eta: f64) -> f64 {
    ((5.0 - eta) * k - n) * (4.0 - eta).ln() + (n - (4.0 - eta) * k) * (5.0 - eta).ln()
}

fn check_eta(eta: f64, upper_inclusive: bool) -> Result<()> {
    let ok = eta >= 0.0
        && if upper_inclusive {
            eta <= 1.0
        } else {
            eta < 1.0
        };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("eta = {eta}")))
    }
}

/// The η-interpolated bound on `mis_k` for K4-free graphs. η = 0 gives the
/// Nielsen expression and η = 1 the Eppstein expression.
pub fn corollary1(n: usize, k: usize, eta: f64) -> Result<ExactBound> {
    check_nk(n, k)?;
    check_eta(eta, true)?;
    Ok(ExactBound::Log(corollary1_ln(n as f64, k as f64, eta)))
}

/// Relative residual of `T1 + T2 = RHS`, where `T1` is the bound for
/// `(n - 1, k)` and `T2` for `(n - (5 - η), k - 1)`.
pub fn corollary1_induction_identity(n: f64, k: f64, eta: f64) -> Result<f64> {
    check_eta(eta, true)?;
    let rhs = corollary1_ln(n, k, eta);
    let t1 = corollary1_ln(n - 1.0, k, eta) - rhs;
    let t2 = corollary1_ln(n - (5.0 - eta), k - 1.0, eta) - rhs;
    Ok((t1.exp() + t2.exp() - 1.0).abs())
}

/// The two growth conditions for the summands of the bipartite-subgraph
/// estimate: `c1 > 0` makes the first sum increase in `k`, `c2 < 0` makes
/// the second decrease.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Monotonicity {
    pub c1: f64,
    pub c2: f64,
}

pub fn monotonicity_conditions(eta: f64) -> Result<Monotonicity> {
    check_eta(eta, true)?;
    let (l3, l4) = (3f64.ln(), 4f64.ln());
    Ok(Monotonicity {
        c1: (5.0 - eta) * (4.0 - eta).ln() - (4.0 - eta) * (5.0 - eta).ln() + 5.0 * l3 - 4.0 * l4,
        c2: 4.0 * l3 - 3.0 * l4 - l3 / 3.0,
    })
}

/// Relative difference of two positive quantities given by their logs.
pub fn rel_diff_ln(a: f64, b: f64) -> f64 {
    (a - b).exp_m1().abs()
}
