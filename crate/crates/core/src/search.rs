//! Exhaustive enumeration of words and canonical monomials.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::normal_form::{normalize, NormalForm};
use crate::word::{Rank, Word};

/// Every word of length `0..=max_len`, shortest first, lexicographic within a
/// length.
pub fn all_words(rank: Rank, max_len: usize) -> impl Iterator<Item = Word> {
    let n = rank.get();
    (0..=max_len).flat_map(move |len| {
        let mut digits = vec![0usize; len];
        let mut done = false;
        core::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Word::from_raw(rank, digits.clone());
            // odometer increment, last letter fastest
            done = true;
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < n {
                    done = false;
                    break;
                }
                *d = 0;
            }
            Some(out)
        })
    })
}

/// Every nonzero word of length `0..=max_len`. Zero prefixes are pruned, so
/// this is much cheaper than filtering [`all_words`].
pub fn nonzero_words(rank: Rank, max_len: usize) -> impl Iterator<Item = Word> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::<usize>::new()];
    while let Some(letters) = stack.pop() {
        if letters.len() < max_len {
            for i in (0..rank.get()).rev() {
                let mut next = letters.clone();
                next.push(i);
                if Word::from_raw(rank, next.clone()).is_nonzero() {
                    stack.push(next);
                }
            }
        }
        out.push(Word::from_raw(rank, letters));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter()
}

/// All nonzero canonical monomials of length `<= max_len` (including `1`) in
/// the subalgebra generated by `generators`.
///
/// Every nonzero monomial is a nonzero monomial times a generator, so a
/// breadth-first search by right multiplication reaches all of them.
pub fn canonical_monomials(rank: Rank, max_len: usize, generators: &[usize]) -> BTreeSet<NormalForm> {
    let mut found = BTreeSet::new();
    let one = NormalForm::One(rank);
    found.insert(one.clone());
    let mut frontier = vec![one];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for nf in &frontier {
            let base = nf.canonical_word().expect("frontier holds nonzero forms");
            for &g in generators {
                let mut letters = base.letters().to_vec();
                letters.push(g);
                let product = normalize(&Word::from_raw(rank, letters));
                if !product.is_zero() && found.insert(product.clone()) {
                    next.push(product);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_counts() {
        let r = Rank::new(3).unwrap();
        assert_eq!(all_words(r, 3).count(), 1 + 3 + 9 + 27);
        let brute = all_words(r, 6).filter(|w| w.is_nonzero()).count();
        assert_eq!(nonzero_words(r, 6).count(), brute);
    }

    #[test]
    fn bfs_covers_normalized_words() {
        let r = Rank::new(4).unwrap();
        let from_words: BTreeSet<NormalForm> = nonzero_words(r, 6).map(|w| normalize(&w)).collect();
        assert_eq!(canonical_monomials(r, 6, &[0, 1, 2, 3]), from_words);
    }
}
