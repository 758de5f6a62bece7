//! The unital embeddings `ε_m: Â_N → Â_{N+1}` that subdivide the edge between
//! sites `m` and `m + 1`: `a_m ↦ a_{m+1} a_m`, later generators shift up by one.

use alloc::vec::Vec;

use crate::config::Config;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::word::{Rank, Word};

fn target(m: usize, rank: Rank) -> Result<Rank> {
    if m >= rank.get() {
        return Err(Error::EmbeddingOutOfRange { m, rank: rank.get() });
    }
    Rank::new(rank.get() + 1)
}

/// Letterwise image of `w`, without normalization.
pub fn embed_word(m: usize, w: &Word) -> Result<Word> {
    let big = target(m, w.rank())?;
    let mut letters = Vec::with_capacity(w.len() + 1);
    for &i in w.letters() {
        match i.cmp(&m) {
            core::cmp::Ordering::Less => letters.push(i),
            core::cmp::Ordering::Equal => letters.extend([m + 1, m]),
            core::cmp::Ordering::Greater => letters.push(i + 1),
        }
    }
    Word::new(big, letters)
}

/// Termwise image of `e`, renormalized in the larger algebra.
pub fn embed_element(m: usize, e: &Element) -> Result<Element> {
    let big = target(m, e.rank())?;
    let words = e.terms().map(|(w, c)| Ok((embed_word(m, &w)?, c))).collect::<Result<Vec<_>>>()?;
    Element::from_words(big, words.iter().map(|(w, c)| (w, *c)))
}

/// The matching relabelling of configurations: sites `<= m` stay, later
/// sites shift up by one.
pub fn embed_config(m: usize, c: &Config) -> Result<Config> {
    let big = target(m, c.rank())?;
    Config::from_labels(big, c.labels().into_iter().map(|x| if x <= m { x } else { x + 1 }))
}

/// The defining relations involving `a_m`, whose images must vanish: `a_m²`,
/// and the two braid-type relations on either side of `m`, in both orders.
pub fn relation_words(m: usize, rank: Rank) -> Result<Vec<Word>> {
    target(m, rank)?;
    let (p, s) = (rank.pred(m), rank.succ(m));
    [vec_of(m, m, None), vec_of(s, m, Some(s)), vec_of(p, m, Some(p)), vec_of(m, s, Some(m)), vec_of(m, p, Some(m))]
        .into_iter()
        .map(|l| Word::new(rank, l))
        .collect()
}

fn vec_of(a: usize, b: usize, c: Option<usize>) -> Vec<usize> {
    let mut v = alloc::vec![a, b];
    v.extend(c);
    v
}
