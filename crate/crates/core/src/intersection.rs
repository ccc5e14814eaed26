//! Intersection-pattern statistics: intersecting tuple fractions, depth, and
//! k-wise cliques.

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::{binomial, Bits, Subfamily};
use crate::error::{Error, Result};
use crate::set_system::SetSystem;

/// Visits every subfamily with at most `max_size` members and nonempty
/// intersection, in depth-first order over increasing member indices. The
/// empty subfamily is not visited.
pub fn for_each_intersecting(
    system: &SetSystem,
    max_size: usize,
    mut visit: impl FnMut(Subfamily, usize),
) -> Result<()> {
    system.check_mask_capacity()?;
    fn dfs(
        system: &SetSystem,
        start: usize,
        mask: u64,
        size: usize,
        acc: &Bits,
        max_size: usize,
        visit: &mut dyn FnMut(Subfamily, usize),
    ) {
        if size == max_size {
            return;
        }
        for v in start..system.len() {
            let mut next = acc.clone();
            next.intersect_with(system.set(v));
            if !next.none() {
                let m = mask | (1 << v);
                visit(Subfamily(m), size + 1);
                dfs(system, v + 1, m, size + 1, &next, max_size, visit);
            }
        }
    }
    dfs(
        system,
        0,
        0,
        0,
        &Bits::ones(system.ground_size()),
        max_size,
        &mut visit,
    );
    Ok(())
}

/// Exact count of `s`-member subfamilies with nonempty intersection.
pub fn count_intersecting(system: &SetSystem, s: usize) -> Result<u64> {
    if s == 0 {
        return Ok(u64::from(system.ground_size() > 0));
    }
    let mut count = 0u64;
    for_each_intersecting(system, s, |_, size| {
        if size == s {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Fraction of intersecting `s`-tuples: exact or estimated by sampling.
#[derive(Clone, Debug, PartialEq)]
pub enum TupleFraction {
    Exact(Ratio<u64>),
    Sampled { hits: u64, samples: u64 },
}

impl TupleFraction {
    pub fn as_f64(&self) -> f64 {
        match self {
            TupleFraction::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            TupleFraction::Sampled { hits, samples } => *hits as f64 / *samples as f64,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, TupleFraction::Exact(_))
    }
}

/// How `intersecting_tuple_fraction` evaluates: exactly when the number of
/// tuples is within `budget`, otherwise by drawing `budget` uniform tuples.
#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    pub budget: u64,
    pub seed: u64,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler {
            budget: 100_000,
            seed: 1,
        }
    }
}

pub fn intersecting_tuple_fraction(
    system: &SetSystem,
    s: usize,
    sampler: Sampler,
) -> Result<TupleFraction> {
    let n = system.len();
    if s > n {
        return Err(Error::Input(format!(
            "tuple size {s} exceeds family size {n}"
        )));
    }
    let total = binomial(n as u64, s as u64);
    if total <= sampler.budget as u128 {
        let hits = count_intersecting(system, s)?;
        return Ok(TupleFraction::Exact(Ratio::new(hits, total as u64)));
    }
    if sampler.budget == 0 {
        return Err(Error::Input("sampling budget must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sampler.seed);
    let mut hits = 0;
    for _ in 0..sampler.budget {
        let picked = rand::seq::index::sample(&mut rng, n, s);
        let mut acc = Bits::ones(system.ground_size());
        for i in picked.iter() {
            acc.intersect_with(system.set(i));
        }
        if !acc.none() {
            hits += 1;
        }
    }
    Ok(TupleFraction::Sampled {
        hits,
        samples: sampler.budget,
    })
}

/// The ground element lying in the most members (lowest index on ties) and
/// the fraction of members containing it.
pub fn max_depth_fraction(system: &SetSystem) -> Result<(usize, Ratio<u64>)> {
    if system.is_empty() {
        return Err(Error::Input(
            "depth fraction of an empty family is undefined".into(),
        ));
    }
    if system.ground_size() == 0 {
        return Err(Error::Input(
            "depth fraction needs a nonempty ground set".into(),
        ));
    }
    let mut depth = vec![0u64; system.ground_size()];
    for s in system.sets() {
        for x in s.iter() {
            depth[x] += 1;
        }
    }
    let (x, &d) = depth
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("nonempty ground");
    Ok((x, Ratio::new(d, system.len() as u64)))
}

/// Result of a k-wise clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCliqueResult {
    pub members: Subfamily,
    /// False when the greedy heuristic produced the answer.
    pub exact: bool,
}

pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Largest subfamily in which every at-most-`k` members share a point.
///
/// Exact branch and bound for families of at most `exact_limit` members (and
/// at most 20, the intersection-table limit); a greedy lower bound otherwise.
pub fn max_kwise_clique(system: &SetSystem, k: usize, exact_limit: usize) -> Result<KCliqueResult> {
    if k < 2 {
        return Err(Error::Input("k-wise cliques need k >= 2".into()));
    }
    system.check_mask_capacity()?;
    let n = system.len();
    if n <= exact_limit.min(crate::helly::MAX_TABLE_MEMBERS) {
        let table = crate::helly::intersection_table(system)?;
        Ok(KCliqueResult {
            members: exact_clique(&table, n, k),
            exact: true,
        })
    } else {
        Ok(KCliqueResult {
            members: greedy_clique(system, k),
            exact: false,
        })
    }
}

/// Whether adding `v` to the clique `clique` keeps every at-most-`k` subset
/// intersecting.
fn extends(table: &[bool], clique: u64, v: usize, k: usize) -> bool {
    let mut ok = true;
    for t in crate::bits::submasks(clique) {
        if (t.count_ones() as usize) < k && !table[(t | (1 << v)) as usize] {
            ok = false;
            break;
        }
    }
    ok
}

fn exact_clique(table: &[bool], n: usize, k: usize) -> Subfamily {
    let candidates: Vec<usize> = (0..n).filter(|&v| table[1 << v]).collect();
    let mut best = 0;
    search_kwise(&mut best, table, k, 0, &candidates);
    Subfamily(best)
}

/// Candidates are kept pairwise intersecting with the clique; `extends`
/// enforces the full k-wise condition.
fn search_kwise(best: &mut u64, table: &[bool], k: usize, clique: u64, candidates: &[usize]) {
    if clique.count_ones() > best.count_ones() {
        *best = clique;
    }
    for (i, &v) in candidates.iter().enumerate() {
        let rest = &candidates[i + 1..];
        if clique.count_ones() as usize + 1 + rest.len() <= best.count_ones() as usize {
            return;
        }
        if !extends(table, clique, v, k) {
            continue;
        }
        let next = clique | (1 << v);
        let filtered: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&w| table[((1u64 << v) | (1u64 << w)) as usize])
            .collect();
        search_kwise(best, table, k, next, &filtered);
    }
}

fn greedy_clique(system: &SetSystem, k: usize) -> Subfamily {
    let n = system.len();
    if n == 0 || system.ground_size() == 0 {
        return Subfamily::EMPTY;
    }
    // Seed with the members through the deepest point: they form a clique.
    let (x, _) = max_depth_fraction(system).expect("nonempty family and ground");
    let mut clique = Subfamily::from_members((0..n).filter(|&i| system.set(i).contains(x)));
    let degree: Vec<usize> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && system.set(i).intersects(system.set(j)))
                .count()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).filter(|&i| !clique.contains(i)).collect();
    order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
    for v in order {
        if kwise_extends(system, clique, v, k) {
            clique = clique.with(v);
        }
    }
    clique
}

fn kwise_extends(system: &SetSystem, clique: Subfamily, v: usize, k: usize) -> bool {
    fn rec(system: &SetSystem, members: &[usize], acc: &Bits, left: usize) -> bool {
        if acc.none() {
            return false;
        }
        if left == 0 {
            return true;
        }
        members.iter().enumerate().all(|(i, &m)| {
            let mut next = acc.clone();
            next.intersect_with(system.set(m));
            rec(system, &members[i + 1..], &next, left - 1)
        })
    }
    let members: Vec<usize> = clique.members().collect();
    rec(system, &members, system.set(v), k - 1)
}
