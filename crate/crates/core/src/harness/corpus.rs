//! Corpora of small set systems for property verification.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::{k_subsets, Bits};
use crate::error::{Error, Result};
use crate::generators::random_small_system;
use crate::set_system::SetSystem;

/// Ground-size and member-count limits of random corpora.
pub const RANDOM_MAX_GROUND: usize = 10;
pub const RANDOM_MAX_MEMBERS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    /// Every system with `1..=max_ground` elements and at most `max_members`
    /// distinct members.
    Exhaustive {
        max_ground: usize,
        max_members: usize,
    },
    /// `count` systems drawn from one seeded stream.
    Random { count: usize, seed: u64 },
}

impl CorpusSpec {
    pub fn systems(&self) -> Result<Vec<SetSystem>> {
        match *self {
            CorpusSpec::Exhaustive {
                max_ground,
                max_members,
            } => {
                if max_ground > 4 {
                    return Err(Error::Size(format!(
                        "exhaustive corpora support ground sizes up to 4, got {max_ground}"
                    )));
                }
                let mut out = Vec::new();
                for g in 1..=max_ground {
                    let universe = 1usize << g;
                    let all: Vec<Bits> = (0..universe)
                        .map(|m| Bits::from_indices(g, (0..g).filter(|&x| (m >> x) & 1 == 1)))
                        .collect();
                    for size in 0..=max_members.min(universe) {
                        for pick in k_subsets(universe, size) {
                            let sets = (0..universe)
                                .filter(|&i| (pick >> i) & 1 == 1)
                                .map(|i| all[i].clone())
                                .collect();
                            out.push(SetSystem::new(g, sets)?);
                        }
                    }
                }
                Ok(out)
            }
            CorpusSpec::Random { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok((0..count)
                    .map(|_| random_small_system(&mut rng, RANDOM_MAX_GROUND, RANDOM_MAX_MEMBERS))
                    .collect())
            }
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Input(format!(
                "corpus `{s}`: expected exhaustive:G,M or random:N:SEED"
            ))
        };
        if let Some(rest) = s.strip_prefix("exhaustive:") {
            let (g, m) = rest.split_once(',').ok_or_else(bad)?;
            Ok(CorpusSpec::Exhaustive {
                max_ground: g.trim().parse().map_err(|_| bad())?,
                max_members: m.trim().parse().map_err(|_| bad())?,
            })
        } else if let Some(rest) = s.strip_prefix("random:") {
            let (n, seed) = rest.split_once(':').ok_or_else(bad)?;
            Ok(CorpusSpec::Random {
                count: n.trim().parse().map_err(|_| bad())?,
                seed: seed.trim().parse().map_err(|_| bad())?,
            })
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Exhaustive {
                max_ground,
                max_members,
            } => write!(f, "exhaustive:{max_ground},{max_members}"),
            CorpusSpec::Random { count, seed } => write!(f, "random:{count}:{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        let c = CorpusSpec::Exhaustive {
            max_ground: 3,
            max_members: 3,
        };
        // per ground g: sum_{j<=3} C(2^g, j)
        let expected = (1 + 2 + 1) + (1 + 4 + 6 + 4) + (1 + 8 + 28 + 56);
        assert_eq!(c.systems().unwrap().len(), expected);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["exhaustive:3,3", "random:1000:7"] {
            assert_eq!(s.parse::<CorpusSpec>().unwrap().to_string(), s);
        }
        assert!("exhaustive:3".parse::<CorpusSpec>().is_err());
        assert!("nope".parse::<CorpusSpec>().is_err());
    }

    #[test]
    fn random_is_seeded() {
        let c = CorpusSpec::Random { count: 20, seed: 5 };
        let a = c.systems().unwrap();
        assert_eq!(a, c.systems().unwrap());
        assert!(a
            .iter()
            .all(|s| s.ground_size() <= 10 && s.len() <= 6 && s.ground_size() >= 1));
    }
}
