//! Binary entropy, the binomial-tail estimate, and the exponent that closes
//! the `mis_k <= (4 - δ)^(n/4)` argument.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::ln_biguint;
use crate::error::{Error, Result};

/// Largest ε for which `12ε / (1 + ε) <= 1/2`, the range of the tail estimate.
pub const EPS_ENTROPY_MAX: f64 = 1.0 / 23.0;

/// `h(α) = -α log2 α - (1-α) log2 (1-α)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy(alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::OutOfRange(format!("alpha = {alpha}")));
    }
    let term = |p: f64| if p == 0.0 { 0.0 } else { -p * p.log2() };
    Ok(term(alpha) + term(1.0 - alpha))
}

/// `Σ_{s=0}^{s_max} C(N, s)`.
pub fn binomial_tail(n: u32, s_max: u32) -> BigUint {
    let mut c = BigUint::one();
    let mut sum = BigUint::zero();
    for s in 0..=s_max.min(n) {
        sum += &c;
        c = c * (n - s) / (s + 1);
    }
    sum
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailCheck {
    pub n: u32,
    pub alpha: f64,
    pub tail: String,
    pub log2_tail: f64,
    pub entropy_bound_log2: f64,
    pub holds: bool,
}

/// Compares `Σ_{s <= floor(αN)} C(N, s)` with `2^(h(α) N)`.
pub fn entropy_tail_check(n: u32, alpha: f64) -> Result<TailCheck> {
    if !(0.0..=0.5).contains(&alpha) {
        return Err(Error::OutOfRange(format!("alpha = {alpha}")));
    }
    let s_max = (alpha * n as f64).floor() as u32;
    let tail = binomial_tail(n, s_max);
    let log2_tail = ln_biguint(&tail) / std::f64::consts::LN_2;
    let entropy_bound_log2 = binary_entropy(alpha)? * n as f64;
    Ok(TailCheck {
        n,
        alpha,
        tail: tail.to_string(),
        log2_tail,
        entropy_bound_log2,
        holds: log2_tail <= entropy_bound_log2 + 1e-12,
    })
}

/// `f(ε) = 1 + h(12ε/(1+ε))(1+ε)/2 + 35ε - (1 - log2(3)/2)(1 - 112ε)/37`,
/// the per-`n/4` exponent of base 4 in the final count.
pub fn theorem1_exponent(eps: f64) -> Result<f64> {
    if !(0.0..1.0 / 12.0).contains(&eps) {
        return Err(Error::OutOfRange(format!(
            "epsilon = {eps} not in [0, 1/12)"
        )));
    }
    let h = binary_entropy(12.0 * eps / (1.0 + eps))?;
    Ok(1.0 + h * (1.0 + eps) / 2.0 + 35.0 * eps
        - (1.0 - 3f64.log2() / 2.0) * (1.0 - 112.0 * eps) / 37.0)
}

/// An admissible `(ε, δ)` pair: `f(ε) < 1 - margin` and `δ = 4 - 4^f(ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsDelta {
    pub margin: f64,
    pub eps: f64,
    pub f_at_eps: f64,
    pub delta: f64,
    /// Upper end of the final bisection bracket, where `f >= 1 - margin`.
    pub eps_upper: f64,
}

/// Bisects for the largest ε with `f(ε) <= 1 - margin` and returns the lower
/// end of the final bracket.
pub fn solve_eps_delta(margin: f64) -> Result<EpsDelta> {
    let target = 1.0 - margin;
    let f0 = theorem1_exponent(0.0)?;
    if !(margin >= 0.0 && f0 < target) {
        return Err(Error::OutOfRange(format!(
            "margin {margin} leaves no room: f(0) = {f0}"
        )));
    }
    let (mut lo, mut hi) = (0.0, EPS_ENTROPY_MAX);
    if theorem1_exponent(hi)? <= target {
        lo = hi;
    } else {
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if theorem1_exponent(mid)? <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    let f = theorem1_exponent(lo)?;
    Ok(EpsDelta {
        margin,
        eps: lo,
        f_at_eps: f,
        delta: 4.0 - 4f64.powf(f),
        eps_upper: hi,
    })
}
