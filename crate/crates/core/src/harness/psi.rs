//! The gate function `Ψ_{d,b}` over plug-in tables for `r(·, d)` and `m(·)`.
//!
//! ```text
//! Ψ(t) = b - 1   if t <= r(b)
//!        b       if r(b) < t <= m(r(b)) * r(b)
//!        S(t)    if t > m(r(b)) * r(b),   S(t) = max { b' : t >= r(b' + 1) }
//! ```
//!
//! The first two cases overlap at `t = r(b)`; that point takes `b - 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::homology::{shatter_profile, CubicalSetSystem};

/// A finite non-decreasing map with positive values. Lookups outside the
/// listed keys fail rather than extrapolate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlugTable {
    name: String,
    entries: BTreeMap<u64, u64>,
}

impl PlugTable {
    pub fn new(
        name: impl Into<String>,
        entries: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        let name = name.into();
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if map.insert(k, v).is_some() {
                return Err(Error::Input(format!("table {name}: duplicate key {k}")));
            }
        }
        let mut prev: Option<u64> = None;
        for (&k, &v) in &map {
            if v == 0 {
                return Err(Error::Input(format!(
                    "table {name}: {name}({k}) must be positive"
                )));
            }
            if prev.is_some_and(|p| v < p) {
                return Err(Error::Input(format!(
                    "table {name}: values must be non-decreasing at key {k}"
                )));
            }
            prev = Some(v);
        }
        Ok(PlugTable { name, entries: map })
    }

    pub fn get(&self, key: u64) -> Result<u64> {
        self.entries.get(&key).copied().ok_or_else(|| {
            Error::Range(format!(
                "table {} has no entry {}({key})",
                self.name, self.name
            ))
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }
}

/// Plug-in tables `b ↦ r(b, d)` and `x ↦ m(x)` for one dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTables {
    pub d: usize,
    pub r: PlugTable,
    pub m: PlugTable,
}

impl PsiTables {
    pub fn new(d: usize, r: PlugTable, m: PlugTable) -> Self {
        PsiTables { d, r, m }
    }
}

/// `S(t) = max { b' >= 0 : t >= r(b' + 1) }`, `None` when even `r(1) > t`.
pub fn s_inverse(tables: &PsiTables, t: u64) -> Result<Option<u64>> {
    let mut best = None;
    let mut b = 0u64;
    loop {
        let r = tables.r.get(b + 1)?;
        if r > t {
            return Ok(best);
        }
        best = Some(b);
        b += 1;
    }
}

pub fn psi_eval(tables: &PsiTables, b: u64, t: u64) -> Result<u64> {
    if b == 0 {
        return Err(Error::Input(
            "Ψ_{d,b} needs b >= 1 (its first case takes the value b - 1)".into(),
        ));
    }
    let rb = tables.r.get(b)?;
    if t <= rb {
        return Ok(b - 1);
    }
    let mr = tables.m.get(rb)?;
    let upper = mr
        .checked_mul(rb)
        .ok_or_else(|| Error::Range("m(r(b)) * r(b) overflows".into()))?;
    if t <= upper {
        return Ok(b);
    }
    // t > upper >= r(b), so b' = b - 1 qualifies and the set is nonempty.
    Ok(s_inverse(tables, t)?.expect("r(b) <= t"))
}

/// Outcome of comparing `φ^(h)` with `Ψ_{d,b}` on `t = 1..=t_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPsiReport {
    /// `(t, φ(t), Ψ(t))` for every checked `t`.
    pub rows: Vec<(usize, usize, u64)>,
    pub first_violation: Option<usize>,
}

impl PhiPsiReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

pub fn check_phi_below_psi(
    system: &CubicalSetSystem,
    h: usize,
    tables: &PsiTables,
    b: u64,
    t_max: usize,
) -> Result<PhiPsiReport> {
    let profile = shatter_profile(system, h, t_max)?;
    let mut rows = Vec::with_capacity(t_max);
    let mut first_violation = None;
    for t in 1..=t_max {
        let phi = profile.values[t];
        let psi = psi_eval(tables, b, t as u64)?;
        if first_violation.is_none() && phi as u64 > psi {
            first_violation = Some(t);
        }
        rows.push((t, phi, psi));
    }
    Ok(PhiPsiReport {
        rows,
        first_violation,
    })
}
