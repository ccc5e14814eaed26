//! Radon partitions and the Radon number.
//!
//! Everything here works on membership signatures: an element `x` lies in
//! `hull(P)` iff every active member containing `P` also contains `x`, i.e.
//! iff `M(P) ⊆ sig(x)` where `M(P)` is the mask of active members containing
//! all of `P`. Two hulls meet iff `M(P0) | M(P1)` fits under some signature.
//!
//! Splits of a point sequence `p_0..p_{r-1}` are enumerated with `p_0` always
//! in block 0; the block-1 position masks are visited in increasing numeric
//! order. This is the fixed order behind every "first partition" result.

use crate::bits::Subfamily;
use crate::error::{Error, Result};
use crate::set_system::{Partition2, PointSet, SetSystem};

/// Signatures of a system restricted to an active subfamily.
pub(crate) struct RadonContext {
    /// Restricted signature of each ground element.
    pub sig: Vec<u64>,
    /// One representative ground element per distinct signature, in order of
    /// first occurrence.
    pub class_reps: Vec<usize>,
    /// Distinct signatures, aligned with `class_reps`.
    pub class_sigs: Vec<u64>,
    /// Signatures not strictly contained in another one.
    maximal: Vec<u64>,
}

impl RadonContext {
    pub fn new(system: &SetSystem, active: Subfamily) -> Result<Self> {
        let full = system.signatures()?;
        let sig: Vec<u64> = full.iter().map(|s| s & active.0).collect();
        let mut seen = std::collections::HashSet::new();
        let mut class_reps = Vec::new();
        let mut distinct = Vec::new();
        for (x, &s) in sig.iter().enumerate() {
            if seen.insert(s) {
                class_reps.push(x);
                distinct.push(s);
            }
        }
        // A strict superset has more bits, so scanning by decreasing popcount
        // only compares against maximal signatures of larger popcount.
        let mut by_weight = distinct.clone();
        by_weight.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
        let mut maximal: Vec<u64> = Vec::new();
        let mut heavier = 0;
        for (i, &s) in by_weight.iter().enumerate() {
            if i > 0 && s.count_ones() < by_weight[i - 1].count_ones() {
                heavier = maximal.len();
            }
            if !maximal[..heavier].iter().any(|&o| s & !o == 0) {
                maximal.push(s);
            }
        }
        Ok(RadonContext {
            sig,
            class_reps,
            class_sigs: distinct,
            maximal,
        })
    }

    /// Whether some ground element lies in every member of `mask`.
    #[inline]
    pub fn covered(&self, mask: u64) -> bool {
        self.maximal.iter().any(|&s| mask & !s == 0)
    }

    /// First split (in the canonical order) of the points with the given
    /// signatures whose hulls meet, as a block-1 position mask.
    pub fn first_radon_split(&self, sigs: &[u64]) -> Option<u64> {
        let r = sigs.len();
        if r < 2 {
            return None;
        }
        debug_assert!(r < 64);
        let half = 1u64 << (r - 1);
        (1..half).map(|j| j << 1).find(|&b1| {
            let (mut a, mut b) = (u64::MAX, u64::MAX);
            for (pos, &s) in sigs.iter().enumerate() {
                if (b1 >> pos) & 1 == 1 {
                    b &= s;
                } else {
                    a &= s;
                }
            }
            self.covered(a | b)
        })
    }

    /// Whether every member of `mask` has a private witness: a class lying
    /// in all other members of `mask` but not in that one.
    pub fn independent(&self, mask: u64) -> bool {
        Subfamily(mask).members().all(|g| {
            let others = mask & !(1 << g);
            self.class_sigs
                .iter()
                .any(|&s| others & !s == 0 && (s >> g) & 1 == 0)
        })
    }

    pub fn is_partitionable(&self, sigs: &[u64]) -> bool {
        self.first_radon_split(sigs).is_some()
    }

    /// Largest non-partitionable set of distinct classes, lexicographically
    /// first among those of maximal size (class indices).
    pub fn largest_nonpartitionable(&self) -> Vec<usize> {
        let q = self.class_reps.len();
        let class_sig = &self.class_sigs;
        let mut best: Vec<usize> = Vec::new();
        let mut stack_classes = Vec::new();
        let mut stack_sigs = Vec::new();
        fn dfs(
            ctx: &RadonContext,
            class_sig: &[u64],
            start: usize,
            classes: &mut Vec<usize>,
            sigs: &mut Vec<u64>,
            best: &mut Vec<usize>,
        ) {
            if classes.len() > best.len() {
                *best = classes.clone();
            }
            // Non-partitionable sets of distinct classes cannot exceed the
            // remaining supply.
            for c in start..class_sig.len() {
                if classes.len() + (class_sig.len() - c) <= best.len() {
                    break;
                }
                sigs.push(class_sig[c]);
                if !ctx.is_partitionable(sigs) {
                    classes.push(c);
                    dfs(ctx, class_sig, c + 1, classes, sigs, best);
                    classes.pop();
                }
                sigs.pop();
            }
        }
        if q > 0 {
            dfs(
                self,
                class_sig,
                0,
                &mut stack_classes,
                &mut stack_sigs,
                &mut best,
            );
        }
        best
    }
}

fn point_sigs(ctx: &RadonContext, system: &SetSystem, points: &PointSet) -> Result<Vec<u64>> {
    points
        .elements()
        .iter()
        .map(|&p| system.check_point(p).map(|_| ctx.sig[p]))
        .collect()
}

/// Whether the hulls of the two blocks share a ground element.
pub fn is_radon_partition(system: &SetSystem, active: Subfamily, p: &Partition2) -> Result<bool> {
    let ctx = RadonContext::new(system, active)?;
    let and = |ps: &PointSet| -> Result<u64> {
        Ok(point_sigs(&ctx, system, ps)?
            .into_iter()
            .fold(u64::MAX, |m, s| m & s))
    };
    let a = and(p.block0())?;
    let b = and(p.block1())?;
    Ok(ctx.covered((a | b) & active.0))
}

/// The first Radon partition of `points` in canonical split order, if any.
pub fn find_radon_partition(
    system: &SetSystem,
    active: Subfamily,
    points: &PointSet,
) -> Result<Option<Partition2>> {
    if points.len() < 2 {
        return Err(Error::input("a Radon partition needs at least two points"));
    }
    if points.len() > 63 {
        return Err(Error::size("point sets are limited to 63 points"));
    }
    let ctx = RadonContext::new(system, active)?;
    let sigs = point_sigs(&ctx, system, points)?;
    ctx.first_radon_split(&sigs)
        .map(|b1| Partition2::from_positions(points, b1))
        .transpose()
}

/// Radon number together with a witness: a largest point set admitting no
/// Radon partition (its size is the Radon number minus one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadonResult {
    pub radon: usize,
    pub witness: PointSet,
}

/// Radon number of the subfamily `active`.
pub fn radon_number_within(system: &SetSystem, active: Subfamily) -> Result<RadonResult> {
    if system.ground_size() == 0 {
        return Err(Error::input("Radon number needs a nonempty ground set"));
    }
    let ctx = RadonContext::new(system, active)?;
    let best = ctx.largest_nonpartitionable();
    let witness = PointSet::new(best.iter().map(|&c| ctx.class_reps[c]).collect());
    Ok(RadonResult {
        radon: (best.len() + 1).max(2),
        witness,
    })
}

/// Smallest `r ≥ 2` such that every point multiset of size `r` admits a
/// Radon partition.
pub fn radon_number(system: &SetSystem) -> Result<usize> {
    Ok(radon_number_within(system, system.full_mask()?)?.radon)
}
