//! Definition-level oracles shared by the integration tests. Everything here
//! works on plain `Vec<bool>` data and brute force, independent of the
//! library's bit tricks and pruning.
#![allow(dead_code)]

use convexlab_core::{CubicalSetSystem, SetSystem};
use petgraph::unionfind::UnionFind;
use proptest::prelude::*;

#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub sets: Vec<Vec<bool>>,
}

pub fn plain(system: &SetSystem) -> Plain {
    Plain {
        n: system.ground_size(),
        sets: system
            .sets()
            .iter()
            .map(|s| (0..system.ground_size()).map(|x| s.contains(x)).collect())
            .collect(),
    }
}

pub fn to_system(n: usize, sets: &[Vec<bool>]) -> SetSystem {
    let bits = sets
        .iter()
        .map(|s| convexlab_core::Bits::from_bools(s))
        .collect();
    SetSystem::new(n, bits).unwrap()
}

/// Intersection of the listed members; the whole ground set for none.
pub fn meet(p: &Plain, members: &[usize]) -> Vec<bool> {
    (0..p.n)
        .map(|x| members.iter().all(|&i| p.sets[i][x]))
        .collect()
}

pub fn nonempty(v: &[bool]) -> bool {
    v.iter().any(|&b| b)
}

/// Intersection of the active members containing every point.
pub fn naive_hull(p: &Plain, active: &[usize], points: &[usize]) -> Vec<bool> {
    let containing: Vec<usize> = active
        .iter()
        .copied()
        .filter(|&i| points.iter().all(|&x| p.sets[i][x]))
        .collect();
    meet(p, &containing)
}

pub fn naive_is_partition(p: &Plain, active: &[usize], b0: &[usize], b1: &[usize]) -> bool {
    let h0 = naive_hull(p, active, b0);
    let h1 = naive_hull(p, active, b1);
    h0.iter().zip(&h1).any(|(a, b)| *a && *b)
}

/// Whether some split of the multiset into two nonempty parts has meeting
/// hulls.
pub fn naive_partitionable(p: &Plain, active: &[usize], points: &[usize]) -> bool {
    let r = points.len();
    (1..(1u64 << r) - 1).any(|mask| {
        let mut b0 = Vec::new();
        let mut b1 = Vec::new();
        for (i, &x) in points.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                b1.push(x);
            } else {
                b0.push(x);
            }
        }
        naive_is_partition(p, active, &b0, &b1)
    })
}

/// All multisets of size `r` over `0..n`, as non-decreasing sequences.
pub fn multisets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(n, r, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, 0, &mut Vec::new(), &mut out);
    out
}

/// Smallest `r >= 2` such that every `r`-multiset has a Radon partition.
pub fn naive_radon(p: &Plain, active: &[usize]) -> usize {
    (2..)
        .find(|&r| {
            multisets(p.n, r)
                .iter()
                .all(|s| naive_partitionable(p, active, s))
        })
        .unwrap()
}

pub fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0..1u64 << items.len())
        .map(|m| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| (m >> i) & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Smallest `h >= 1` such that, for every subfamily, `h`-wise intersection
/// implies a common point.
pub fn naive_helly(p: &Plain, active: &[usize]) -> usize {
    let groups = subsets(active);
    (1..)
        .find(|&h| {
            groups.iter().all(|g| {
                let hwise = subsets(g)
                    .iter()
                    .filter(|s| s.len() <= h)
                    .all(|s| nonempty(&meet(p, s)));
                !hwise || nonempty(&meet(p, g))
            })
        })
        .unwrap()
}

/// Every surjective map of `len` items onto `0..m`.
pub fn surjections(len: usize, m: usize) -> Vec<Vec<usize>> {
    let total = m.checked_pow(len as u32).unwrap();
    (0..total)
        .map(|mut code| {
            (0..len)
                .map(|_| {
                    let c = code % m;
                    code /= m;
                    c
                })
                .collect::<Vec<usize>>()
        })
        .filter(|c| (0..m).all(|k| c.contains(&k)))
        .collect()
}

/// Evaluates the colorful implication for one coloring of `group`:
/// `None` when some colorful tuple misses, else whether a class has a
/// common point.
pub fn naive_colorful_outcome(
    p: &Plain,
    group: &[usize],
    colors: &[usize],
    m: usize,
) -> Option<bool> {
    let classes: Vec<Vec<usize>> = (0..m)
        .map(|c| {
            group
                .iter()
                .zip(colors)
                .filter(|(_, &k)| k == c)
                .map(|(&g, _)| g)
                .collect()
        })
        .collect();
    let mut tuple = Vec::with_capacity(m);
    fn all_tuples(p: &Plain, classes: &[Vec<usize>], tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == classes.len() {
            return nonempty(&meet(p, tuple));
        }
        for &g in &classes[tuple.len()] {
            tuple.push(g);
            let ok = all_tuples(p, classes, tuple);
            tuple.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if !all_tuples(p, &classes, &mut tuple) {
        return None;
    }
    Some(classes.iter().any(|c| nonempty(&meet(p, c))))
}

/// Smallest `m >= 1` with no counterexample coloring.
pub fn naive_colorful(p: &Plain, active: &[usize]) -> usize {
    let groups = subsets(active);
    (1..)
        .find(|&m| {
            groups.iter().filter(|g| g.len() >= m).all(|g| {
                surjections(g.len(), m)
                    .iter()
                    .all(|c| naive_colorful_outcome(p, g, c, m) != Some(false))
            })
        })
        .unwrap()
}

pub enum Kind {
    Radon,
    Helly,
    Colorful,
}

/// Graded value at `t`: the maximum over subfamilies of size at most `t`.
pub fn naive_graded(p: &Plain, kind: &Kind, t: usize) -> usize {
    let all: Vec<usize> = (0..p.sets.len()).collect();
    subsets(&all)
        .iter()
        .filter(|g| g.len() <= t)
        .map(|g| match kind {
            Kind::Radon => naive_radon(p, g),
            Kind::Helly => naive_helly(p, g),
            Kind::Colorful => naive_colorful(p, g),
        })
        .max()
        .unwrap()
}

/// Rank over GF(2) by textbook elimination on a row-of-bools matrix.
pub fn naive_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Connected components of a set of top cells, cells joined when their
/// closures share any point.
pub fn components(dims: &[usize], cells: &[bool]) -> usize {
    let total: usize = dims.iter().product();
    let coords = |mut i: usize| {
        let mut c = vec![0; dims.len()];
        for a in (0..dims.len()).rev() {
            c[a] = i % dims[a];
            i /= dims[a];
        }
        c
    };
    let index = |c: &[isize]| -> Option<usize> {
        let mut i = 0;
        for (a, &x) in c.iter().enumerate() {
            if x < 0 || x as usize >= dims[a] {
                return None;
            }
            i = i * dims[a] + x as usize;
        }
        Some(i)
    };
    let mut uf = UnionFind::<usize>::new(total);
    let offsets: Vec<Vec<isize>> = (0..3usize.pow(dims.len() as u32))
        .map(|mut code| {
            (0..dims.len())
                .map(|_| {
                    let o = (code % 3) as isize - 1;
                    code /= 3;
                    o
                })
                .collect()
        })
        .collect();
    for i in (0..total).filter(|&i| cells[i]) {
        let c = coords(i);
        for o in &offsets {
            let nb: Vec<isize> = c.iter().zip(o).map(|(&x, &d)| x as isize + d).collect();
            if let Some(j) = index(&nb) {
                if cells[j] {
                    uf.union(i, j);
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..total)
        .filter(|&i| cells[i])
        .map(|i| uf.find(i))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

pub fn cubical_cells(system: &CubicalSetSystem, i: usize) -> Vec<bool> {
    (0..system.cell_count())
        .map(|c| system.sets()[i].contains(c))
        .collect()
}

/// Small abstract systems: ground 1..=4, up to 4 members.
pub fn small_system() -> impl Strategy<Value = SetSystem> {
    (1..=4usize, 0..=4usize).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), m)
            .prop_map(move |sets| to_system(n, &sets))
    })
}
