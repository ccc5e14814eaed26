//! Empirical probes around the fractional Helly statement and the
//! colorful-clique hypotheses.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graded::{graded, GradedOptions, ParameterKind};
use crate::helly::colorful_profile;
use crate::intersection::{
    intersecting_tuple_fraction, max_depth_fraction, max_kwise_clique, Sampler, TupleFraction,
};
use crate::set_system::SetSystem;

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub n: usize,
    pub s: usize,
    /// Fraction of intersecting `s`-tuples.
    pub alpha: TupleFraction,
    /// Fraction of members through the deepest point.
    pub beta_emp: Ratio<u64>,
    pub deepest_point: usize,
    pub k: usize,
    /// Size of the largest k-wise clique found, over `n`.
    pub clique_fraction: Ratio<u64>,
    pub clique_exact: bool,
}

pub fn probe_fractional_helly(
    system: &SetSystem,
    s: usize,
    k: usize,
    sampler: Sampler,
    exact_limit: usize,
) -> Result<ProbeReport> {
    let n = system.len();
    if s > n {
        return Err(Error::Input(format!(
            "tuple size {s} exceeds family size {n}"
        )));
    }
    let alpha = intersecting_tuple_fraction(system, s, sampler)?;
    let (deepest_point, beta_emp) = max_depth_fraction(system)?;
    let clique = max_kwise_clique(system, k, exact_limit)?;
    Ok(ProbeReport {
        n,
        s,
        alpha,
        beta_emp,
        deepest_point,
        k,
        clique_fraction: Ratio::new(clique.members.len() as u64, n as u64),
        clique_exact: clique.exact,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulCliqueReport {
    pub k: usize,
    pub m: usize,
    /// `ch^(mk)`
    pub colorful_helly: usize,
    /// `h^(m)`
    pub helly: usize,
    pub holds: bool,
}

/// Evaluates whether `ch^(mk) <= m` and `h^(m) <= k`. Graded values at a
/// level above the family size equal the value at the family size.
pub fn check_colorful_clique_hypotheses(
    system: &SetSystem,
    k: usize,
    m: usize,
    guard: usize,
) -> Result<ColorfulCliqueReport> {
    if k < 2 || m < k {
        return Err(Error::Input(format!(
            "need m >= k >= 2, got k = {k}, m = {m}"
        )));
    }
    let n = system.len();
    let (colorful_helly, helly) = if n == 0 {
        (1, 1)
    } else {
        let ch = *colorful_profile(system, (m * k).min(n), guard)?
            .last()
            .expect("n > 0");
        let h = graded(
            system,
            ParameterKind::Helly,
            m.min(n),
            GradedOptions::default(),
        )?
        .value(m.min(n));
        (ch, h)
    };
    Ok(ColorfulCliqueReport {
        k,
        m,
        colorful_helly,
        helly,
        holds: colorful_helly <= m && helly <= k,
    })
}
