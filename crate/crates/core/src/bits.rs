//! Bit-packed sets: fixed-length ground-element vectors and subfamily masks.

use std::fmt;

const WORD: usize = 64;

/// A fixed-length bit vector, one bit per ground element (or grid cell).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: vec![u64::MAX; len.div_ceil(WORD)],
        };
        b.clear_tail();
        b
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::zeros(len);
        for i in indices {
            b.insert(i);
        }
        b
    }

    pub fn from_bools(bools: &[bool]) -> Self {
        Bits::from_indices(
            bools.len(),
            bools.iter().enumerate().filter(|(_, &v)| v).map(|(i, _)| i),
        )
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when no bit is set.
    pub fn none(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Renders as a `0`/`1` string, element 0 first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({})", self.to_bitstring())
    }
}

/// A subset of family members, bit `i` standing for member `i`.
///
/// Families analysed through masks are limited to 64 members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subfamily(pub u64);

pub const MAX_MASK_MEMBERS: usize = 64;

impl Subfamily {
    pub const EMPTY: Subfamily = Subfamily(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_MASK_MEMBERS);
        if n == 64 {
            Subfamily(u64::MAX)
        } else {
            Subfamily((1u64 << n) - 1)
        }
    }

    pub fn from_members(members: impl IntoIterator<Item = usize>) -> Self {
        Subfamily(members.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn single(i: usize) -> Self {
        Subfamily(1 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        Subfamily(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subfamily(self.0 & !(1 << i))
    }

    pub fn is_subset(self, other: Subfamily) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let mut w = self.0;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let tz = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(tz)
        })
    }
}

impl fmt::Debug for Subfamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// All `k`-element subsets of `{0..n}` as masks, in increasing numeric order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "k_subsets supports at most 63 elements");
    let limit = 1u64 << n;
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n2 = (((r ^ cur) >> 2) / c) | r;
            (n2 < limit).then_some(n2)
        };
        Some(cur)
    })
}

/// Subsets of `{0..n}` with at most `k` elements, grouped by size then
/// increasing numerically.
pub fn subsets_up_to(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0..=k.min(n)).flat_map(move |j| k_subsets(n, j))
}

/// Iterates the submasks of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & mask) };
        Some(c)
    })
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let v: Vec<u64> = k_subsets(n, k).collect();
                assert_eq!(v.len() as u128, binomial(n as u64, k as u64));
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                assert!(v.iter().all(|m| m.count_ones() as usize == k));
            }
        }
    }

    #[test]
    fn submask_enumeration() {
        assert_eq!(
            submasks(0b101).collect::<Vec<_>>(),
            vec![0b101, 0b100, 0b001, 0]
        );
        assert_eq!(submasks(0).count(), 1);
    }

    #[test]
    fn bits_ops() {
        let mut a = Bits::from_indices(70, [0, 5, 64, 69]);
        assert_eq!(a.count(), 4);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 5, 64, 69]);
        let b = Bits::from_indices(70, [5, 69]);
        assert!(b.is_subset(&a));
        a.intersect_with(&b);
        assert_eq!(a, b);
        assert_eq!(Bits::ones(70).count(), 70);
        assert_eq!(Bits::from_indices(3, [0, 2]).to_bitstring(), "101");
    }
}
