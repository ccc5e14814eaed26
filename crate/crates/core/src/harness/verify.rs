//! Exhaustive and seeded checks of the graded-parameter relations.

use rayon::prelude::*;

use crate::error::Result;
use crate::graded::{graded, graded_radon_detailed, GradedOptions, ParameterKind};
use crate::harness::corpus::CorpusSpec;
use crate::radon::find_radon_partition;
use crate::set_system::{Partition2, PointSet, SetSystem};

/// Largest `t` examined on corpus members.
pub const CORPUS_T_MAX: usize = 6;

/// A corpus member violating a property, with enough context to replay it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Position of the system in the corpus.
    pub index: usize,
    pub system: SetSystem,
    pub t: usize,
    pub detail: String,
    pub witness: Option<PointSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub property: &'static str,
    pub systems: usize,
    pub checked: usize,
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail(Box<Counterexample>),
}

fn run(
    property: &'static str,
    systems: Vec<SetSystem>,
    check: impl Fn(usize, &SetSystem) -> Result<Outcome> + Sync,
) -> Result<VerifyReport> {
    let outcomes = systems
        .par_iter()
        .enumerate()
        .map(|(i, s)| check(i, s))
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport {
        property,
        systems: systems.len(),
        checked: 0,
        skipped: 0,
        counterexample: None,
    };
    for o in outcomes {
        match o {
            Outcome::Pass => report.checked += 1,
            Outcome::Skip => report.skipped += 1,
            Outcome::Fail(c) => {
                report.checked += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(*c);
                }
            }
        }
    }
    Ok(report)
}

fn t_max_for(system: &SetSystem) -> usize {
    system.len().min(CORPUS_T_MAX)
}

/// Checks `rad^(t) <= bound(t)` for `t = 1..=min(6, n)` on every member.
pub fn verify_radon_bound_with(
    corpus: &CorpusSpec,
    bound: impl Fn(usize) -> usize + Sync,
) -> Result<VerifyReport> {
    run("radon-bound", corpus.systems()?, |index, system| {
        for (idx, (value, _, witness)) in graded_radon_detailed(system, t_max_for(system))?
            .into_iter()
            .enumerate()
        {
            let t = idx + 1;
            if value > bound(t) {
                return Ok(Outcome::Fail(Box::new(Counterexample {
                    index,
                    system: system.clone(),
                    t,
                    detail: format!("rad^({t}) = {value} > {}", bound(t)),
                    witness: Some(witness.witness),
                })));
            }
        }
        Ok(Outcome::Pass)
    })
}

/// `rad^(t) <= t + 1` on the corpus.
pub fn verify_radon_bound(corpus: &CorpusSpec) -> Result<VerifyReport> {
    verify_radon_bound_with(corpus, |t| t + 1)
}

/// `h^(t) <= rad^(t) - 1` on corpus members whose members share no point.
pub fn verify_levi(corpus: &CorpusSpec) -> Result<VerifyReport> {
    run("levi", corpus.systems()?, |index, system| {
        if system.intersects(system.full_mask()?) {
            return Ok(Outcome::Skip);
        }
        let t_max = t_max_for(system);
        let helly = graded(
            system,
            ParameterKind::Helly,
            t_max,
            GradedOptions::default(),
        )?;
        let radon = graded_radon_detailed(system, t_max)?;
        for t in 1..=t_max {
            let (r, _, ref w) = radon[t - 1];
            if helly.value(t) + 1 > r {
                return Ok(Outcome::Fail(Box::new(Counterexample {
                    index,
                    system: system.clone(),
                    t,
                    detail: format!("h^({t}) = {} > rad^({t}) - 1 = {}", helly.value(t), r - 1),
                    witness: Some(w.witness.clone()),
                })));
            }
        }
        Ok(Outcome::Pass)
    })
}

/// A graded Helly profile breaking the growth law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HellyLawViolation {
    /// `value(t) > t`.
    AboveT { t: usize, value: usize },
    /// `value(t) < value(t - 1)`.
    Decrease { t: usize },
    /// `value(t) > value(t - 1)` but `value(t) != t`.
    JumpWithoutEquality { t: usize, value: usize },
    /// `value(t) < t` for every `t > t0`, yet the profile moves after `t0`.
    NotStationary { t0: usize },
}

/// Checks a graded Helly profile `values[t - 1]`, `t = 1..`, against the
/// growth law: it rises only onto the diagonal, and once it stays strictly
/// below the diagonal after `t0` it is constant from `t0` on. The value at
/// `t = 0` is taken to be 1.
pub fn check_helly_growth_law(values: &[usize]) -> std::result::Result<(), HellyLawViolation> {
    let at = |t: usize| if t == 0 { 1 } else { values[t - 1] };
    let n = values.len();
    for t in 1..=n {
        let v = at(t);
        if v > t {
            return Err(HellyLawViolation::AboveT { t, value: v });
        }
        if v < at(t - 1) {
            return Err(HellyLawViolation::Decrease { t });
        }
        if v > at(t - 1) && v != t {
            return Err(HellyLawViolation::JumpWithoutEquality { t, value: v });
        }
    }
    for t0 in 1..=n {
        if (t0 + 1..=n).all(|t| at(t) < t) && (t0..=n).any(|t| at(t) != at(t0)) {
            return Err(HellyLawViolation::NotStationary { t0 });
        }
    }
    Ok(())
}

pub fn verify_helly_growth_systems(systems: Vec<SetSystem>) -> Result<VerifyReport> {
    run("helly-growth", systems, |index, system| {
        let t_max = system.len();
        let profile = graded(
            system,
            ParameterKind::Helly,
            t_max,
            GradedOptions::default(),
        )?;
        match check_helly_growth_law(profile.values()) {
            Ok(()) => Ok(Outcome::Pass),
            Err(v) => Ok(Outcome::Fail(Box::new(Counterexample {
                index,
                system: system.clone(),
                t: match v {
                    HellyLawViolation::AboveT { t, .. }
                    | HellyLawViolation::Decrease { t }
                    | HellyLawViolation::JumpWithoutEquality { t, .. } => t,
                    HellyLawViolation::NotStationary { t0 } => t0,
                },
                detail: format!("{v:?} in profile {:?}", profile.values()),
                witness: None,
            }))),
        }
    })
}

/// The growth law on the full graded Helly profile of every corpus member.
pub fn verify_helly_growth(corpus: &CorpusSpec) -> Result<VerifyReport> {
    verify_helly_growth_systems(corpus.systems()?)
}

/// Outcome of the minimal non-partitionability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalVerdict {
    Minimal,
    /// The point set already has a Radon partition under the whole family.
    NotNonpartitionable(Partition2),
    /// Members whose deletion still leaves the point set without a Radon
    /// partition.
    NotMinimal(Vec<usize>),
}

pub fn verify_minimal_nonpartitionable(
    system: &SetSystem,
    points: &PointSet,
) -> Result<MinimalVerdict> {
    let full = system.full_mask()?;
    if let Some(p) = find_radon_partition(system, full, points)? {
        return Ok(MinimalVerdict::NotNonpartitionable(p));
    }
    let redundant: Vec<usize> = (0..system.len())
        .into_par_iter()
        .map(|i| find_radon_partition(system, full.without(i), points).map(|p| (i, p.is_none())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(i, still_separated)| still_separated.then_some(i))
        .collect();
    if redundant.is_empty() {
        Ok(MinimalVerdict::Minimal)
    } else {
        Ok(MinimalVerdict::NotMinimal(redundant))
    }
}
