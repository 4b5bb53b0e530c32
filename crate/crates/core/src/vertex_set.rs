use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A finite set of dense vertex indices stored as a bitset.
///
/// Sets over indices below 128 live inline; larger indices spill to the heap.
/// Trailing zero words are always trimmed, so equality and hashing are
/// structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(index: usize) -> Self {
        let mut set = Self::new();
        set.insert(index);
        set
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn insert(&mut self, index: usize) -> bool {
        let (word, bit) = (index / 64, index % 64);
        if self.words.len() <= word {
            self.words.resize(word + 1, 0);
        }
        let was = self.words[word] & (1 << bit) != 0;
        self.words[word] |= 1 << bit;
        !was
    }

    pub fn remove(&mut self, index: usize) -> bool {
        let (word, bit) = (index / 64, index % 64);
        if word >= self.words.len() {
            return false;
        }
        let was = self.words[word] & (1 << bit) != 0;
        self.words[word] &= !(1 << bit);
        self.trim();
        was
    }

    pub fn contains(&self, index: usize) -> bool {
        let (word, bit) = (index / 64, index % 64);
        self.words.get(word).is_some_and(|w| w & (1 << bit) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        out.trim();
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        let mut out = Self { words };
        out.trim();
        out
    }

    /// Size of the intersection, without allocating.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, the empty set included, in no particular order.
    ///
    /// Panics if the set has more than 30 elements.
    pub fn subsets(&self) -> Box<dyn Iterator<Item = VertexSet> + '_> {
        assert!(self.len() <= 30, "subset enumeration of a {}-set", self.len());
        if self.words.len() <= 1 {
            // Walk the submasks of the single word directly.
            let full = self.words.first().copied().unwrap_or(0);
            let mut next = Some(full);
            return Box::new(std::iter::from_fn(move || {
                let mask = next?;
                next = (mask != 0).then(|| (mask - 1) & full);
                Some(Self::from_word(mask))
            }));
        }
        let members = self.to_vec();
        Box::new((0u32..1 << members.len()).map(move |mask| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect()
        }))
    }

    /// The bits when every index is below 64.
    pub(crate) fn single_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub(crate) fn from_word(word: u64) -> Self {
        let mut words = SmallVec::new();
        if word != 0 {
            words.push(word);
        }
        Self { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::new();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

/// Lexicographic order on the sorted index lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.single_word(), other.single_word()) {
            (Some(a), Some(b)) => lex_word_cmp(a, b),
            _ => self.iter().cmp(other.iter()),
        }
    }
}

/// Lexicographic comparison of the sorted bit positions of two words.
fn lex_word_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    // The lists agree below the lowest differing bit `d`. The side holding `d`
    // is smaller unless the other side has run out of elements.
    let d = diff.trailing_zeros();
    let a_holds = a >> d & 1 == 1;
    let other = if a_holds { b } else { a };
    let other_continues = other >> d != 0;
    if a_holds == other_continues {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the ascending list of indices.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wide_indices_spill_and_trim() {
        let mut s = VertexSet::from_iter([3, 200]);
        assert_eq!(s.len(), 2);
        assert!(s.contains(200));
        s.remove(200);
        assert_eq!(s, VertexSet::singleton(3));
    }

    #[test]
    fn lexicographic_order() {
        let a: VertexSet = [0, 2].into_iter().collect();
        let b: VertexSet = [1].into_iter().collect();
        let c: VertexSet = [0, 1, 5].into_iter().collect();
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..20),
            b in proptest::collection::btree_set(0usize..150, 0..20),
        ) {
            let sa: VertexSet = a.iter().copied().collect();
            let sb: VertexSet = b.iter().copied().collect();
            prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.difference(&sb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.intersection_len(&sb), a.intersection(&b).count());
            prop_assert_eq!(sa.cmp(&sb), sa.to_vec().cmp(&sb.to_vec()));
        }

        #[test]
        fn subsets_of_narrow_and_wide_sets(a in proptest::collection::btree_set(0usize..100, 0..8)) {
            let set: VertexSet = a.iter().copied().collect();
            let mut subsets: Vec<Vec<usize>> = set.subsets().map(|s| s.to_vec()).collect();
            subsets.sort();
            subsets.dedup();
            prop_assert_eq!(subsets.len(), 1 << a.len());
            prop_assert!(set.subsets().all(|s| s.is_subset(&set)));
        }
    }
}
