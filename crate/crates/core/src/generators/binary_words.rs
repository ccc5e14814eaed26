use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::set_system::{PointSet, SetSystem};

/// Word length `2^(k-1) - 1` of the construction for `k` points.
pub fn word_length(k: usize) -> usize {
    (1 << (k - 1)) - 1
}

/// Letter `i` (1-based) of the word with ground index `word` and length
/// `len`; the first letter is the most significant bit.
pub fn letter(word: usize, i: usize, len: usize) -> usize {
    (word >> (len - i)) & 1
}

pub fn word_string(word: usize, len: usize) -> String {
    (1..=len)
        .map(|i| if letter(word, i, len) == 1 { '1' } else { '0' })
        .collect()
}

/// Words of length `L = 2^(k-1) - 1` with the half-spaces `F_i^δ` (letter `i`
/// equals `δ`), and the point set `p_1..p_k`.
///
/// The 2-partitions of `{1..k}` are enumerated with block 0 holding element
/// 1; partition `ℓ` (0-based) puts element `j >= 2` in block 0 iff bit
/// `k - j` of `ℓ` is set. Letter `ℓ + 1` of `p_j` is 0 for block-0 membership
/// and 1 otherwise. Members are ordered `F_1^0, F_1^1, F_2^0, ...` and named
/// `F{i}_{δ}`.
pub fn gen_binary_words(k: usize) -> Result<(SetSystem, PointSet)> {
    if !(2..=5).contains(&k) {
        return Err(Error::Size(format!(
            "binary-word construction supports 2 <= k <= 5, got {k}"
        )));
    }
    let len = word_length(k);
    let ground = 1usize << len;
    let mut sets = Vec::with_capacity(2 * len);
    let mut names = Vec::with_capacity(2 * len);
    for i in 1..=len {
        for delta in 0..2 {
            sets.push(Bits::from_indices(
                ground,
                (0..ground).filter(|&w| letter(w, i, len) == delta),
            ));
            names.push(format!("F{i}_{delta}"));
        }
    }
    let points = (1..=k)
        .map(|j| {
            if j == 1 {
                return 0;
            }
            (0..len).fold(0usize, |w, l| {
                let in_block0 = (l >> (k - j)) & 1 == 1;
                (w << 1) | usize::from(!in_block0)
            })
        })
        .collect();
    Ok((
        SetSystem::with_names(ground, sets, names)?,
        PointSet::new(points),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_words() {
        let (s, p) = gen_binary_words(3).unwrap();
        assert_eq!(s.ground_size(), 8);
        assert_eq!(s.len(), 6);
        let words: Vec<String> = p.elements().iter().map(|&w| word_string(w, 3)).collect();
        assert_eq!(words, vec!["000", "110", "101"]);
    }

    #[test]
    fn k4_sizes() {
        let (s, p) = gen_binary_words(4).unwrap();
        assert_eq!((s.len(), s.ground_size(), p.len()), (14, 128, 4));
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(gen_binary_words(1), Err(Error::Size(_))));
        assert!(matches!(gen_binary_words(6), Err(Error::Size(_))));
    }
}
