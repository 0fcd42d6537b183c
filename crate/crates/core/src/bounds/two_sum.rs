//! The two-sum estimate for maximal induced bipartite subgraphs: count pairs
//! `(A, B)` by `k = |A|`, bounding the options for `A` by a `mis_k` bound and
//! the options for `B` either by the Eppstein bound on `n - k` vertices
//! (first sum, `k <= p`) or by `3^((n-k)/3)` (second sum, `k > p`).

use serde::Serialize;

use super::{corollary1_ln, eppstein_ln};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoSum {
    pub n: usize,
    pub p_cut: usize,
    pub eta: f64,
    /// `ln` of the first and second sums; `-inf` for an empty sum.
    pub mibs1_ln: f64,
    pub mibs2_ln: f64,
    pub max_term1_ln: f64,
    pub argmax1: usize,
    pub max_term2_ln: f64,
    pub argmax2: Option<usize>,
    pub terms1_ln: Vec<f64>,
    pub terms2_ln: Vec<f64>,
}

impl TwoSum {
    pub fn total_ln(&self) -> f64 {
        log_sum_exp(&[self.mibs1_ln, self.mibs2_ln])
    }
}

/// `ln` of the `k`-th summand of the first sum. The options for `A` use the
/// η-bound when `η > 0` and `k <= (1 + eps_split) n / 4` (all `k` when no
/// split is given), and the Eppstein bound otherwise.
pub fn two_sum_first_term_ln(n: usize, k: usize, eta: f64, eps_split: Option<f64>) -> f64 {
    let (nf, kf) = (n as f64, k as f64);
    let use_eta = eta > 0.0 && eps_split.is_none_or(|e| kf <= (1.0 + e) * nf / 4.0);
    let a = if use_eta {
        corollary1_ln(nf, kf, eta)
    } else {
        eppstein_ln(nf, kf)
    };
    a + eppstein_ln(nf - kf, kf)
}

/// `ln` of the second-sum summand `3^(4k-n) 4^(n-3k) 3^((n-k)/3)` for real `k`.
pub fn two_sum_second_term_ln(n: f64, k: f64) -> f64 {
    eppstein_ln(n, k) + (n - k) / 3.0 * 3f64.ln()
}

pub fn two_sum(n: usize, p_cut: usize, eta: f64, eps_split: Option<f64>) -> Result<TwoSum> {
    if p_cut > n {
        return Err(Error::OutOfRange(format!("p = {p_cut} exceeds n = {n}")));
    }
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::OutOfRange(format!("eta = {eta}")));
    }
    let terms1: Vec<f64> = (0..=p_cut)
        .map(|k| two_sum_first_term_ln(n, k, eta, eps_split))
        .collect();
    let terms2: Vec<f64> = (p_cut + 1..=n)
        .map(|k| two_sum_second_term_ln(n as f64, k as f64))
        .collect();
    let (argmax1, max1) = argmax(&terms1).expect("first sum has the k = 0 term");
    let second = argmax(&terms2);
    Ok(TwoSum {
        n,
        p_cut,
        eta,
        mibs1_ln: log_sum_exp(&terms1),
        mibs2_ln: log_sum_exp(&terms2),
        max_term1_ln: max1,
        argmax1,
        max_term2_ln: second.map_or(f64::NEG_INFINITY, |(_, v)| v),
        argmax2: second.map(|(i, _)| p_cut + 1 + i),
        terms1_ln: terms1,
        terms2_ln: terms2,
    })
}

/// A grid-searched `(η, ξ)` for the two-sum estimate with cutoff
/// `p = ⌊(1 + ξ) n / 4⌋`, the η-bound applied up to that cutoff.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoSumWitness {
    pub n: usize,
    pub eta: f64,
    pub xi: f64,
    pub p_cut: usize,
    pub mibs1_ln: f64,
    pub mibs2_ln: f64,
    /// `(n/4) ln 12`.
    pub target_ln: f64,
    /// `max(mibs1, mibs2) / 12^{n/4}` in log domain.
    pub excess_ln: f64,
    pub both_below: bool,
}

/// Minimizes the larger of the two sums over the `etas × xis` grid.
pub fn two_sum_witness(n: usize, etas: &[f64], xis: &[f64]) -> Result<TwoSumWitness> {
    let target_ln = n as f64 / 4.0 * 12f64.ln();
    let mut best: Option<TwoSumWitness> = None;
    for &eta in etas {
        for &xi in xis {
            if xi.is_nan() || xi < 0.0 {
                return Err(Error::OutOfRange(format!("xi = {xi}")));
            }
            let p_cut = (((1.0 + xi) * n as f64 / 4.0).floor() as usize).min(n);
            let s = two_sum(n, p_cut, eta, Some(xi))?;
            let excess_ln = s.mibs1_ln.max(s.mibs2_ln) - target_ln;
            if best.as_ref().is_none_or(|b| excess_ln < b.excess_ln) {
                best = Some(TwoSumWitness {
                    n,
                    eta,
                    xi,
                    p_cut,
                    mibs1_ln: s.mibs1_ln,
                    mibs2_ln: s.mibs2_ln,
                    target_ln,
                    excess_ln,
                    both_below: s.mibs1_ln < target_ln && s.mibs2_ln < target_ln,
                });
            }
        }
    }
    best.ok_or_else(|| Error::OutOfRange("empty (eta, xi) grid".into()))
}

/// The default search grid: `η ∈ {0.01, ..., 0.99}`, `ξ ∈ {0, 0.01, ..., 1}`.
pub fn default_witness_grid() -> (Vec<f64>, Vec<f64>) {
    let etas = (1..100).map(|i| i as f64 / 100.0).collect();
    let xis = (0..=100).map(|i| i as f64 / 100.0).collect();
    (etas, xis)
}

fn argmax(xs: &[f64]) -> Option<(usize, f64)> {
    xs.iter()
        .copied()
        .enumerate()
        .fold(None, |best, (i, x)| match best {
            Some((_, b)) if b >= x => best,
            _ => Some((i, x)),
        })
}

pub(crate) fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::rel_diff_ln;

    #[test]
    fn empty_graph() {
        let s = two_sum(0, 0, 0.0, None).unwrap();
        assert_eq!(s.mibs1_ln, 0.0);
        assert_eq!(s.mibs2_ln, f64::NEG_INFINITY);
        assert_eq!(s.argmax2, None);
    }

    #[test]
    fn classic_cut_at_quarter() {
        let n = 40;
        let s = two_sum(n, n / 4, 0.0, None).unwrap();
        let target = 10.0 * 12f64.ln();
        assert_eq!(s.argmax1, 10);
        assert!(rel_diff_ln(s.max_term1_ln, target) < 1e-9);
        assert_eq!(s.argmax2, Some(11));
        assert!(s.max_term2_ln < target);
        assert!(rel_diff_ln(two_sum_second_term_ln(40.0, 10.0), target) < 1e-9);
    }

    #[test]
    fn term_monotonicity_at_eta_zero() {
        for n in [1usize, 7, 40, 123, 200] {
            let s = two_sum(n, n, 0.0, None).unwrap();
            assert!(s.terms1_ln.windows(2).all(|w| w[1] >= w[0]));
            let t: Vec<f64> = (0..=n)
                .map(|k| two_sum_second_term_ln(n as f64, k as f64))
                .collect();
            assert!(t.windows(2).all(|w| w[1] <= w[0]));
        }
    }

    #[test]
    fn rejects_bad_cut() {
        assert!(two_sum(4, 5, 0.0, None).is_err());
    }
}
