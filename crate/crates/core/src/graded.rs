//! Graded parameters: the supremum of a parameter over all subfamilies with
//! at most `t` members.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bits::{k_subsets, Subfamily};
use crate::error::{Error, Result};
use crate::helly::{colorful_profile, minimal_empty_sizes};
use crate::radon::{radon_number_within, RadonResult};
use crate::set_system::SetSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParameterKind {
    Radon,
    Helly,
    ColorfulHelly,
}

impl ParameterKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParameterKind::Radon => "radon",
            ParameterKind::Helly => "helly",
            ParameterKind::ColorfulHelly => "colorful-helly",
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParameterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "radon" => Ok(ParameterKind::Radon),
            "helly" => Ok(ParameterKind::Helly),
            "colorful-helly" => Ok(ParameterKind::ColorfulHelly),
            other => Err(Error::Input(format!("unknown parameter kind `{other}`"))),
        }
    }
}

/// Values of a graded parameter for `t = 1..=t_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedProfile {
    pub kind: ParameterKind,
    values: Vec<usize>,
}

impl GradedProfile {
    pub fn new(kind: ParameterKind, values: Vec<usize>) -> Self {
        GradedProfile { kind, values }
    }

    /// Value at `t` (1-based).
    pub fn value(&self, t: usize) -> usize {
        self.values[t - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn t_max(&self) -> usize {
        self.values.len()
    }
}

/// Options for graded computations.
#[derive(Clone, Copy, Debug)]
pub struct GradedOptions {
    pub colorful_guard: usize,
}

impl Default for GradedOptions {
    fn default() -> Self {
        GradedOptions {
            colorful_guard: crate::helly::DEFAULT_COLORFUL_GUARD,
        }
    }
}

/// Graded Radon profile with, for each `t`, the subfamily and point set
/// witnessing the maximum.
pub fn graded_radon_detailed(
    system: &SetSystem,
    t_max: usize,
) -> Result<Vec<(usize, Subfamily, RadonResult)>> {
    check_t_max(system, t_max)?;
    let n = system.len();
    let mut out = Vec::with_capacity(t_max);
    let mut best: Option<(Subfamily, RadonResult)> = None;
    for t in 1..=t_max {
        let masks: Vec<u64> = k_subsets(n, t).collect();
        let results = masks
            .par_iter()
            .map(|&m| radon_number_within(system, Subfamily(m)).map(|r| (Subfamily(m), r)))
            .collect::<Result<Vec<_>>>()?;
        for (mask, r) in results {
            // Strict improvement keeps the first maximiser in mask order.
            if best.as_ref().is_none_or(|(_, b)| r.radon > b.radon) {
                best = Some((mask, r));
            }
        }
        let (mask, r) = best.clone().expect("t >= 1 has at least one subfamily");
        out.push((r.radon, mask, r));
    }
    Ok(out)
}

fn check_t_max(system: &SetSystem, t_max: usize) -> Result<()> {
    system.check_mask_capacity()?;
    if t_max > system.len() {
        return Err(Error::Input(format!(
            "t_max = {t_max} exceeds the family size {}",
            system.len()
        )));
    }
    Ok(())
}

/// The graded profile of `kind` for `t = 1..=t_max`.
pub fn graded(
    system: &SetSystem,
    kind: ParameterKind,
    t_max: usize,
    options: GradedOptions,
) -> Result<GradedProfile> {
    check_t_max(system, t_max)?;
    let values = match kind {
        ParameterKind::Radon => graded_radon_detailed(system, t_max)?
            .into_iter()
            .map(|(v, _, _)| v)
            .collect(),
        ParameterKind::Helly => {
            let present = minimal_empty_sizes(system, system.full_mask()?, t_max)?;
            let mut values = Vec::with_capacity(t_max);
            let mut cur = 1;
            for (size, &p) in present.iter().enumerate().skip(1) {
                if p {
                    cur = cur.max(size);
                }
                values.push(cur);
            }
            values
        }
        ParameterKind::ColorfulHelly => colorful_profile(system, t_max, options.colorful_guard)?,
    };
    Ok(GradedProfile::new(kind, values))
}
