//! Raw monomials `a(j) = a_{j_1} ⋯ a_{j_m}` in the generators of `Â_N`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported rank. Configurations are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

/// The number `N` of generators (equivalently, of positions on the circle).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if (3..=MAX_RANK).contains(&n) {
            Ok(Rank(n))
        } else {
            Err(Error::InvalidRank(n))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// `i + 1 mod n`.
    #[inline]
    pub fn succ(self, i: usize) -> usize {
        if i + 1 == self.0 {
            0
        } else {
            i + 1
        }
    }

    /// `i - 1 mod n`.
    #[inline]
    pub fn pred(self, i: usize) -> usize {
        if i == 0 {
            self.0 - 1
        } else {
            i - 1
        }
    }

    /// Reduces an arbitrary integer modulo `n`.
    #[inline]
    pub fn reduce(self, i: i64) -> usize {
        i.rem_euclid(self.0 as i64) as usize
    }

    /// True when `a_i` and `a_j` commute, i.e. `i - j ≢ ±1 (mod n)`.
    #[inline]
    pub fn commute(self, i: usize, j: usize) -> bool {
        self.succ(i) != j && self.pred(i) != j
    }

    pub(crate) fn check_index(self, index: usize) -> Result<usize> {
        if index < self.0 {
            Ok(index)
        } else {
            Err(Error::IndexOutOfRange { index, rank: self.0 })
        }
    }

    pub(crate) fn check_same(self, other: Rank) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.0, other.0))
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An ordered product of generators. `letters[0]` is the leftmost factor; the
/// rightmost factor acts first on configurations. The empty word is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    rank: Rank,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(rank: Rank, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            rank.check_index(l)?;
        }
        Ok(Word { rank, letters })
    }

    /// The identity monomial.
    pub fn one(rank: Rank) -> Self {
        Word { rank, letters: Vec::new() }
    }

    pub fn generator(rank: Rank, i: usize) -> Result<Self> {
        Word::new(rank, vec![i])
    }

    pub(crate) fn from_raw(rank: Rank, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| l < rank.get()));
        Word { rank, letters }
    }

    /// Parses whitespace- or comma-separated decimal indices.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let letters = parse_indices(text)?;
        Word::new(rank, letters)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Decides whether the monomial is nonzero: between any two neighbouring
    /// occurrences of `a_i` there must be exactly one `a_{i+1}` and exactly one
    /// `a_{i-1}`.
    pub fn is_nonzero(&self) -> bool {
        let n = self.rank.get();
        let mut seen = vec![false; n];
        // occurrences of i+1 resp. i-1 since the last occurrence of i
        let mut above = vec![0u32; n];
        let mut below = vec![0u32; n];
        for &x in &self.letters {
            if seen[x] && (above[x] != 1 || below[x] != 1) {
                return false;
            }
            seen[x] = true;
            above[x] = 0;
            below[x] = 0;
            above[self.rank.pred(x)] += 1;
            below[self.rank.succ(x)] += 1;
        }
        true
    }

    /// Equality in `Â_N` of two nonzero monomials: same letter counts and, for
    /// every `i`, the same interleaving of the occurrences of `i` and `i+1`.
    pub fn commutation_equal(&self, other: &Word) -> Result<bool> {
        self.rank.check_same(other.rank)?;
        if !self.is_nonzero() || !other.is_nonzero() {
            return Err(Error::ZeroMonomial);
        }
        if self.len() != other.len() {
            return Ok(false);
        }
        let n = self.rank.get();
        let project = |w: &Word, i: usize| -> Vec<bool> {
            let j = self.rank.succ(i);
            w.letters.iter().filter(|&&x| x == i || x == j).map(|&x| x == i).collect()
        };
        Ok((0..n).all(|i| project(self, i) == project(other, i)))
    }

    /// The `ℤ^N`-degree: component `i` counts the occurrences of `a_i`.
    pub fn zn_degree(&self) -> Vec<usize> {
        let mut deg = vec![0; self.rank.get()];
        for &x in &self.letters {
            deg[x] += 1;
        }
        deg
    }

    /// The juxtaposition `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.rank.check_same(other.rank)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters })
    }

    /// All words obtained by swapping one adjacent pair of commuting letters.
    pub fn commutation_moves(&self) -> impl Iterator<Item = Word> + '_ {
        (1..self.letters.len()).filter_map(move |p| {
            let (a, b) = (self.letters[p - 1], self.letters[p]);
            if a != b && self.rank.commute(a, b) {
                let mut letters = self.letters.clone();
                letters.swap(p - 1, p);
                Some(Word { rank: self.rank, letters })
            } else {
                None
            }
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_indices(f, &self.letters, " ")
    }
}

pub(crate) fn write_indices(f: &mut fmt::Formatter<'_>, items: &[usize], sep: &str) -> fmt::Result {
    for (p, x) in items.iter().enumerate() {
        if p > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_indices(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(alloc::format!("invalid index {t:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::{BTreeSet, VecDeque};

    fn w(n: usize, letters: &[usize]) -> Word {
        Word::new(Rank::new(n).unwrap(), letters.to_vec()).unwrap()
    }

    /// Saturates the commutation class and looks for `a_i a_i` or
    /// `a_i a_{i±1} a_i` as a contiguous factor.
    fn zero_by_rewriting(word: &Word) -> bool {
        let rank = word.rank();
        let has_pattern = |l: &[usize]| {
            l.windows(2).any(|p| p[0] == p[1]) || l.windows(3).any(|p| p[0] == p[2] && !rank.commute(p[0], p[1]))
        };
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.clone());
        queue.push_back(word.clone());
        while let Some(cur) = queue.pop_front() {
            if has_pattern(cur.letters()) {
                return true;
            }
            for next in cur.commutation_moves() {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        false
    }

    #[test]
    fn rank_bounds() {
        assert_eq!(Rank::new(2), Err(Error::InvalidRank(2)));
        assert!(Rank::new(3).is_ok());
        assert!(Rank::new(65).is_err());
    }

    #[test]
    fn word_rejects_bad_index() {
        let r = Rank::new(4).unwrap();
        assert_eq!(Word::new(r, vec![0, 4]), Err(Error::IndexOutOfRange { index: 4, rank: 4 }));
    }

    #[test]
    fn nonzero_examples() {
        assert!(!w(5, &[2, 2]).is_nonzero());
        assert!(!w(3, &[0, 1, 0]).is_nonzero());
        assert!(w(8, &[0, 7, 4, 3, 2, 1, 5, 6]).is_nonzero());
        assert!(!w(4, &[0, 2, 0]).is_nonzero());
        assert!(w(3, &[]).is_nonzero());
    }

    #[test]
    fn nonzero_agrees_with_rewriting_closure() {
        for n in [3, 4] {
            let rank = Rank::new(n).unwrap();
            for word in crate::search::all_words(rank, 8) {
                assert_eq!(word.is_nonzero(), !zero_by_rewriting(&word), "mismatch for {word} (n={n})");
            }
        }
    }

    #[test]
    fn commutation_equal_examples() {
        assert!(w(5, &[0, 2]).commutation_equal(&w(5, &[2, 0])).unwrap());
        assert!(!w(3, &[0, 1]).commutation_equal(&w(3, &[1, 0])).unwrap());
        let x = w(6, &[0, 2, 4, 1, 3, 5]);
        assert!(x.commutation_equal(&x).unwrap());
        assert_eq!(w(5, &[1, 1]).commutation_equal(&w(5, &[1])), Err(Error::ZeroMonomial));
        assert_eq!(w(5, &[1]).commutation_equal(&w(4, &[1])), Err(Error::RankMismatch(5, 4)));
    }

    #[test]
    fn commutation_equal_matches_class_saturation() {
        let rank = Rank::new(4).unwrap();
        let words: Vec<Word> = crate::search::nonzero_words(rank, 5).filter(|w| w.len() == 5).collect();
        for a in &words {
            let mut class = BTreeSet::new();
            let mut queue = VecDeque::from([a.clone()]);
            class.insert(a.clone());
            while let Some(cur) = queue.pop_front() {
                for next in cur.commutation_moves() {
                    if class.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            for b in &words {
                assert_eq!(a.commutation_equal(b).unwrap(), class.contains(b));
            }
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(w(3, &[]).zn_degree(), vec![0, 0, 0]);
        assert_eq!(w(8, &[0, 7, 4, 3, 2, 1, 5, 6]).zn_degree(), vec![1; 8]);
        assert_eq!(w(3, &[0, 2, 1, 0, 2, 1]).zn_degree(), vec![2, 2, 2]);
    }

    #[test]
    fn concat_examples() {
        let e = w(4, &[]);
        let x = w(4, &[3, 1]);
        assert_eq!(e.concat(&x).unwrap(), x);
        assert_eq!(w(4, &[0]).concat(&w(4, &[1])).unwrap(), w(4, &[0, 1]));
        assert_eq!(w(4, &[1, 2]).concat(&w(4, &[0])).unwrap(), w(4, &[1, 2, 0]));
        assert!(w(4, &[1]).concat(&w(5, &[1])).is_err());
    }

    #[test]
    fn parse_and_display() {
        let r = Rank::new(7).unwrap();
        let word = Word::parse(r, "6 4 2,1  3").unwrap();
        assert_eq!(word.letters(), &[6, 4, 2, 1, 3]);
        assert_eq!(alloc::format!("{word}"), "6 4 2 1 3");
        assert!(Word::parse(r, "1 x").is_err());
        assert!(Word::parse(r, "").unwrap().is_empty());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word_strategy() -> impl Strategy<Value = Word> {
            (3usize..7).prop_flat_map(|n| {
                proptest::collection::vec(0..n, 0..12).prop_map(move |l| Word::new(Rank::new(n).unwrap(), l).unwrap())
            })
        }

        proptest! {
            #[test]
            fn nonzero_invariant_under_commutation(word in word_strategy()) {
                for moved in word.commutation_moves() {
                    prop_assert_eq!(moved.is_nonzero(), word.is_nonzero());
                    if word.is_nonzero() {
                        prop_assert!(moved.commutation_equal(&word).unwrap());
                    }
                }
            }

            #[test]
            fn degree_is_additive(a in word_strategy(), tail in proptest::collection::vec(0usize..3, 0..6)) {
                let b = Word::new(a.rank(), tail).unwrap();
                let ab = a.concat(&b).unwrap();
                let sum: Vec<usize> = a.zn_degree().iter().zip(b.zn_degree()).map(|(x, y)| x + y).collect();
                prop_assert_eq!(ab.zn_degree(), sum);
                prop_assert_eq!(ab.zn_degree().iter().sum::<usize>(), ab.len());
            }

            #[test]
            fn commutation_equal_compatible_with_concat(a in word_strategy(), tail in proptest::collection::vec(0usize..3, 0..5)) {
                let b = Word::new(a.rank(), tail).unwrap();
                if let Some(a2) = a.commutation_moves().next() {
                    let left = a.concat(&b).unwrap();
                    let left2 = a2.concat(&b).unwrap();
                    if left.is_nonzero() {
                        prop_assert!(left.commutation_equal(&left2).unwrap());
                    }
                    let right = b.concat(&a).unwrap();
                    let right2 = b.concat(&a2).unwrap();
                    if right.is_nonzero() {
                        prop_assert!(right.commutation_equal(&right2).unwrap());
                    }
                }
            }
        }
    }
}
