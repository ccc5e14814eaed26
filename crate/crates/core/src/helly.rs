//! Helly and colorful Helly numbers.

use crate::bits::{Bits, Subfamily};
use crate::error::{Error, Result};
use crate::radon::RadonContext;
use crate::set_system::{Coloring, SetSystem};

/// Default cap on the number of members enumerated by colorful-Helly
/// computations.
pub const DEFAULT_COLORFUL_GUARD: usize = 10;

/// Largest family for which the `2^n` intersection table is built.
pub const MAX_TABLE_MEMBERS: usize = 20;

/// `table[mask]` is true iff the members in `mask` share a ground element.
pub(crate) fn intersection_table(system: &SetSystem) -> Result<Vec<bool>> {
    let n = system.len();
    if n > MAX_TABLE_MEMBERS {
        return Err(Error::size(format!(
            "intersection table needs at most {MAX_TABLE_MEMBERS} members, family has {n}"
        )));
    }
    let mut table = vec![false; 1 << n];
    for s in system.signatures()? {
        table[s as usize] = true;
    }
    // Downward closure: a subfamily intersects iff it sits under a signature.
    for b in 0..n {
        let bit = 1usize << b;
        for mask in 0..(1usize << n) {
            if mask & bit == 0 && table[mask | bit] {
                table[mask] = true;
            }
        }
    }
    Ok(table)
}

/// Sizes of inclusion-minimal subfamilies of `active` with empty
/// intersection, up to `size_cap`: `present[s]` is true iff one of size `s`
/// exists.
pub(crate) fn minimal_empty_sizes(
    system: &SetSystem,
    active: Subfamily,
    size_cap: usize,
) -> Result<Vec<bool>> {
    let mut present = vec![false; size_cap + 1];
    if system.ground_size() == 0 {
        // The empty subfamily already has empty intersection.
        present[0] = true;
        return Ok(present);
    }
    let ctx = RadonContext::new(system, active)?;
    let members: Vec<usize> = active.members().filter(|&i| i < system.len()).collect();

    // Walk intersecting subfamilies in increasing member order; a minimal
    // empty subfamily H is reached as (H minus its largest member) + largest.
    // Every member of a subset of a minimal empty subfamily has a private
    // witness class, so non-independent branches are cut.
    fn dfs(
        ctx: &RadonContext,
        members: &[usize],
        start: usize,
        current: u64,
        size: usize,
        cap: usize,
        present: &mut [bool],
    ) {
        if size >= cap {
            return;
        }
        for (idx, &v) in members.iter().enumerate().skip(start) {
            let next = current | (1 << v);
            if ctx.covered(next) {
                if !ctx.independent(next) {
                    continue;
                }
                dfs(ctx, members, idx + 1, next, size + 1, cap, present);
            } else {
                let minimal = Subfamily(current)
                    .members()
                    .all(|g| ctx.covered(next & !(1 << g)));
                if minimal {
                    present[size + 1] = true;
                }
            }
        }
    }
    dfs(&ctx, &members, 0, 0, 0, size_cap, &mut present);
    Ok(present)
}

/// Helly number of the subfamily `active`: the largest size of an
/// inclusion-minimal subfamily with empty intersection, and at least 1.
pub fn helly_number_within(system: &SetSystem, active: Subfamily) -> Result<usize> {
    let present = minimal_empty_sizes(system, active, active.len())?;
    Ok(present.iter().rposition(|&p| p).unwrap_or(0).max(1))
}

pub fn helly_number(system: &SetSystem) -> Result<usize> {
    helly_number_within(system, system.full_mask()?)
}

/// Outcome of the colorful-Helly implication for one coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorfulVerdict {
    /// Some colorful tuple has empty intersection.
    HypothesisFails,
    /// Every colorful tuple meets and some color class has a common point.
    ConclusionHolds,
    /// Every colorful tuple meets but no color class has a common point.
    Counterexample,
}

/// Evaluates the colorful-Helly implication on the members colored by
/// `coloring`.
pub fn colorful_check(system: &SetSystem, coloring: &Coloring) -> Result<ColorfulVerdict> {
    system.check_mask_capacity()?;
    if let Some(&(m, _)) = coloring
        .assignment()
        .iter()
        .find(|(m, _)| *m >= system.len())
    {
        return Err(Error::input(format!("colored member {m} not in family")));
    }
    let classes = coloring.classes();

    fn transversal_fails(system: &SetSystem, classes: &[Subfamily], acc: &Bits) -> bool {
        match classes.split_first() {
            None => false,
            Some((class, rest)) => class.members().any(|i| {
                let mut next = acc.clone();
                next.intersect_with(system.set(i));
                next.none() || transversal_fails(system, rest, &next)
            }),
        }
    }
    if transversal_fails(system, &classes, &Bits::ones(system.ground_size())) {
        return Ok(ColorfulVerdict::HypothesisFails);
    }
    if classes.iter().any(|&c| system.intersects(c)) {
        Ok(ColorfulVerdict::ConclusionHolds)
    } else {
        Ok(ColorfulVerdict::Counterexample)
    }
}

/// `bad[G]` has bit `m` set iff some partition of exactly the members `G`
/// into `m` color classes is a colorful-Helly counterexample. Only
/// subfamilies with at most `size_cap` members are enumerated.
fn counterexample_colors(table: &[bool], n: usize, size_cap: usize) -> Vec<u64> {
    let mut bad = vec![0u64; 1 << n];
    let mut blocks: Vec<u64> = Vec::new();

    fn all_transversals_meet(table: &[bool], blocks: &[u64], acc: u64) -> bool {
        match blocks.split_first() {
            None => true,
            Some((&b, rest)) => Subfamily(b).members().all(|i| {
                let next = acc | (1 << i);
                table[next as usize] && all_transversals_meet(table, rest, next)
            }),
        }
    }

    fn assign(table: &[bool], members: &[usize], blocks: &mut Vec<u64>, out: &mut u64) {
        match members.split_first() {
            None => {
                if blocks.iter().all(|&b| !table[b as usize])
                    && all_transversals_meet(table, blocks, 0)
                {
                    *out |= 1 << blocks.len();
                }
            }
            Some((&v, rest)) => {
                for j in 0..blocks.len() {
                    blocks[j] |= 1 << v;
                    assign(table, rest, blocks, out);
                    blocks[j] &= !(1 << v);
                }
                blocks.push(1 << v);
                assign(table, rest, blocks, out);
                blocks.pop();
            }
        }
    }

    for g in crate::bits::subsets_up_to(n, size_cap) {
        // A counterexample needs at least one non-intersecting class of size 2.
        if g.count_ones() < 2 || table[g as usize] {
            continue;
        }
        let members: Vec<usize> = Subfamily(g).members().collect();
        let mut out = 0u64;
        assign(table, &members, &mut blocks, &mut out);
        bad[g as usize] = out;
    }
    bad
}

fn lowest_good_color_count(bad: u64) -> usize {
    // bit 0 is never set; the answer is the lowest clear bit above it.
    (!(bad | 1)).trailing_zeros() as usize
}

/// Colorful Helly numbers of every subfamily of size `min(t, n)` reduced to
/// their maximum, for each `t` in `1..=t_max`. Returns one value per `t`.
pub(crate) fn colorful_profile(
    system: &SetSystem,
    t_max: usize,
    guard: usize,
) -> Result<Vec<usize>> {
    let n = system.len();
    let cap = t_max.min(n);
    if cap > guard {
        return Err(Error::size(format!(
            "colorful-Helly enumeration over subfamilies of {cap} members exceeds the guard of {guard}"
        )));
    }
    let table = intersection_table(system)?;
    let mut bad = counterexample_colors(&table, n, cap);
    // Accumulate over submasks so bad[F] covers every G ⊆ F.
    for b in 0..n {
        let bit = 1usize << b;
        for mask in 0..(1usize << n) {
            if mask & bit != 0 {
                bad[mask] |= bad[mask ^ bit];
            }
        }
    }
    let mut per_size = vec![1usize; cap + 1];
    for (s, slot) in per_size.iter_mut().enumerate() {
        *slot = crate::bits::k_subsets(n, s)
            .map(|f| lowest_good_color_count(bad[f as usize]))
            .max()
            .unwrap_or(1);
    }
    Ok((1..=t_max).map(|t| per_size[t.min(cap)]).collect())
}

/// Smallest number of colors `m` such that no surjective `m`-coloring of any
/// subfamily is a counterexample to the colorful-Helly implication.
pub fn colorful_helly_number(system: &SetSystem, guard: usize) -> Result<usize> {
    let n = system.len();
    if n > guard {
        return Err(Error::size(format!(
            "family of {n} members exceeds the colorful-Helly guard of {guard}"
        )));
    }
    if n == 0 {
        return Ok(1);
    }
    Ok(*colorful_profile(system, n, guard)?.last().expect("n > 0"))
}
