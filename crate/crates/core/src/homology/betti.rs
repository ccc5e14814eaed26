//! Reduced Z2 Betti numbers of intersections and the homological shatter
//! function.

use rayon::prelude::*;

use crate::bits::{k_subsets, Subfamily};
use crate::error::{Error, Result};
use crate::homology::cubical::{build_complex, CubicalSetSystem};

/// Reduced Betti numbers `β̃_0..β̃_h`. The empty space reports zeros with
/// `empty` set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub reduced: Vec<usize>,
    pub empty: bool,
}

impl BettiVector {
    /// `max_{i <= h} β̃_i`.
    pub fn max(&self) -> usize {
        self.reduced.iter().copied().max().unwrap_or(0)
    }
}

/// Reduced Betti numbers up to degree `h` of the intersection of the members
/// in `mask` (the full grid for the empty mask).
pub fn betti(system: &CubicalSetSystem, mask: Subfamily, h: usize) -> Result<BettiVector> {
    let d = system.dims().len();
    if h > d {
        return Err(Error::Input(format!(
            "degree {h} exceeds grid dimension {d}"
        )));
    }
    if let Some(i) = mask.members().find(|&i| i >= system.len()) {
        return Err(Error::Input(format!("member {i} not in family")));
    }
    let cells = system.intersection(mask);
    if cells.none() {
        return Ok(BettiVector {
            reduced: vec![0; h + 1],
            empty: true,
        });
    }
    let complex = build_complex(&cells, system.dims())?;
    let mut b = complex.betti_numbers();
    b[0] -= 1;
    b.truncate(h + 1);
    Ok(BettiVector {
        reduced: b,
        empty: false,
    })
}

/// The homological shatter function up to `t_max`, with a per-degree
/// breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterProfile {
    pub h: usize,
    /// `values[t]` for `t = 0..=t_max`.
    pub values: Vec<usize>,
    /// `per_degree[t][i]`: max of `β̃_i` over subfamilies of size at most `t`.
    pub per_degree: Vec<Vec<usize>>,
}

pub fn shatter_profile(
    system: &CubicalSetSystem,
    h: usize,
    t_max: usize,
) -> Result<ShatterProfile> {
    let d = system.dims().len();
    if h > d {
        return Err(Error::Input(format!(
            "degree {h} exceeds grid dimension {d}"
        )));
    }
    let n = system.len();
    if t_max > n {
        return Err(Error::Input(format!("t = {t_max} exceeds family size {n}")));
    }
    if n > 63 {
        return Err(Error::Size(format!(
            "shatter enumeration supports at most 63 members, family has {n}"
        )));
    }
    let mut per_degree: Vec<Vec<usize>> = Vec::with_capacity(t_max + 1);
    let mut running = vec![0usize; h + 1];
    for size in 0..=t_max {
        let masks: Vec<u64> = k_subsets(n, size).collect();
        let level = masks
            .par_iter()
            .map(|&m| betti(system, Subfamily(m), h).map(|b| b.reduced))
            .try_reduce(
                || vec![0usize; h + 1],
                |a, b| Ok(a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect()),
            )?;
        for (r, l) in running.iter_mut().zip(&level) {
            *r = (*r).max(*l);
        }
        per_degree.push(running.clone());
    }
    let values = per_degree
        .iter()
        .map(|v| v.iter().copied().max().unwrap_or(0))
        .collect();
    Ok(ShatterProfile {
        h,
        values,
        per_degree,
    })
}

/// `φ^(h)(t)`: the largest `β̃_i`, `i <= h`, over intersections of at most
/// `t` members.
pub fn shatter_value(system: &CubicalSetSystem, h: usize, t: usize) -> Result<usize> {
    Ok(shatter_profile(system, h, t)?.values[t])
}
