use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::homology::CubicalSetSystem;
use crate::set_system::SetSystem;

/// Parameters of a random family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// Each membership bit is an independent fair coin.
    Abstract { ground: usize, members: usize },
    /// Cell ranges on a `1 × length` grid; all contain `common_cell` if set.
    Intervals {
        members: usize,
        length: usize,
        common_cell: Option<usize>,
    },
    /// Axis-aligned cell rectangles on a `side × side` grid.
    Boxes { members: usize, side: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratedSystem {
    Abstract(SetSystem),
    Cubical(CubicalSetSystem),
}

fn range(rng: &mut ChaCha8Rng, lo_max: usize, hi_min: usize, hi_max: usize) -> (usize, usize) {
    let a = rng.gen_range(0..=lo_max);
    let b = rng.gen_range(hi_min.max(a)..=hi_max);
    (a, b)
}

/// Deterministic for a fixed `(kind, seed)`.
pub fn gen_random(kind: RandomKind, seed: u64) -> Result<GeneratedSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        RandomKind::Abstract { ground, members } => {
            let sets = (0..members)
                .map(|_| {
                    let bools: Vec<bool> = (0..ground).map(|_| rng.gen_bool(0.5)).collect();
                    Bits::from_bools(&bools)
                })
                .collect();
            Ok(GeneratedSystem::Abstract(SetSystem::new(ground, sets)?))
        }
        RandomKind::Intervals {
            members,
            length,
            common_cell,
        } => {
            if length == 0 {
                return Err(Error::Input("interval grid length must be positive".into()));
            }
            if common_cell.is_some_and(|c| c >= length) {
                return Err(Error::Input("common cell outside the grid".into()));
            }
            let sets = (0..members)
                .map(|_| {
                    let (a, b) = match common_cell {
                        Some(c) => range(&mut rng, c, c, length - 1),
                        None => range(&mut rng, length - 1, 0, length - 1),
                    };
                    Bits::from_indices(length, a..=b)
                })
                .collect();
            Ok(GeneratedSystem::Cubical(CubicalSetSystem::new(
                vec![1, length],
                sets,
            )?))
        }
        RandomKind::Boxes { members, side } => {
            if side == 0 {
                return Err(Error::Input("box grid side must be positive".into()));
            }
            let sets = (0..members)
                .map(|_| {
                    let (r0, r1) = range(&mut rng, side - 1, 0, side - 1);
                    let (c0, c1) = range(&mut rng, side - 1, 0, side - 1);
                    Bits::from_indices(
                        side * side,
                        (r0..=r1).flat_map(|r| (c0..=c1).map(move |c| r * side + c)),
                    )
                })
                .collect();
            Ok(GeneratedSystem::Cubical(CubicalSetSystem::new(
                vec![side, side],
                sets,
            )?))
        }
    }
}

/// A random abstract system with `1..=max_ground` elements and
/// `0..=max_members` members, for property corpora.
pub fn random_small_system(
    rng: &mut ChaCha8Rng,
    max_ground: usize,
    max_members: usize,
) -> SetSystem {
    let ground = rng.gen_range(1..=max_ground);
    let members = rng.gen_range(0..=max_members);
    let sets = (0..members)
        .map(|_| {
            let bools: Vec<bool> = (0..ground).map(|_| rng.gen_bool(0.5)).collect();
            Bits::from_bools(&bools)
        })
        .collect();
    SetSystem::new(ground, sets).expect("lengths match")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        for kind in [
            RandomKind::Abstract {
                ground: 6,
                members: 4,
            },
            RandomKind::Intervals {
                members: 5,
                length: 12,
                common_cell: None,
            },
            RandomKind::Boxes {
                members: 5,
                side: 8,
            },
        ] {
            assert_eq!(gen_random(kind, 3).unwrap(), gen_random(kind, 3).unwrap());
        }
    }

    #[test]
    fn intervals_share_common_cell() {
        let kind = RandomKind::Intervals {
            members: 10,
            length: 20,
            common_cell: Some(7),
        };
        let GeneratedSystem::Cubical(s) = gen_random(kind, 11).unwrap() else {
            panic!("intervals are cellular");
        };
        assert!(s.sets().iter().all(|b| b.contains(7)));
        assert!(gen_random(
            RandomKind::Intervals {
                members: 1,
                length: 3,
                common_cell: Some(3)
            },
            0
        )
        .is_err());
    }
}
