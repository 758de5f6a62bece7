//! Canonical block decomposition of nonzero monomials.
//!
//! A nonzero word is rewritten, using commutation moves only, as
//! `a(j^(m)) ⋯ a(j^(1)) a(j^(0))`. Block `j^(0)` collects the letters `a_i` that
//! have no `a_{i-1}` to their right; the remaining blocks are obtained by
//! recursing on what is left. Each block is finally ordered clockwise starting
//! from `î + t`, where `î` is the largest index missing from `j^(0)` whose
//! predecessor is present.
//!
//! Reading each block index `t` as a time step, the letters form *strands*
//! `i, i+1, i+2, …` that start in `j^(0)`. The triple
//! `ψ = (I_in, I_out, ℓ)` of strand starts, strand ends and the number of `a_0`
//! factors determines the normal form uniquely.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{parse_indices, write_indices, Rank, Word};

/// Blocks of a normal form; `block(0)` is the rightmost factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blocks {
    rank: Rank,
    blocks: Vec<Vec<usize>>,
}

impl Blocks {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `Block^(t)`; `t = 0` is the rightmost block.
    pub fn block(&self, t: usize) -> &[usize] {
        &self.blocks[t]
    }

    /// Blocks in algebraic (left-to-right) order, `Block^(m)` first.
    pub fn left_to_right(&self) -> impl Iterator<Item = &[usize]> {
        self.blocks.iter().rev().map(|b| b.as_slice())
    }
}

/// The canonical form of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormalForm {
    Zero(Rank),
    One(Rank),
    Blocks(Blocks),
}

/// A maximal chain `start, start+1, …` running through consecutive blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strand {
    pub start: usize,
    /// Number of blocks traversed, at least 1.
    pub length: usize,
    /// `start + length - 1 mod n`.
    pub end: usize,
}

/// The invariant `ψ = (I_in, I_out, ℓ)` of a normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsiKey {
    pub i_in: BTreeSet<usize>,
    pub i_out: BTreeSet<usize>,
    pub ell: usize,
}

/// A normal form with its indices lifted from `ℤ/n` to `ℤ`, after shifting all
/// indices so that the smallest element of `Block^(0)` is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSequence {
    rank: Rank,
    shift: usize,
    blocks: Vec<Vec<i64>>,
    strands: Vec<(i64, i64)>,
}

impl IntegralSequence {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// The amount subtracted from every index before lifting.
    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Lifted `Block^(t)`, same internal order as the modular block.
    pub fn block(&self, t: usize) -> &[i64] {
        &self.blocks[t]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Strand data `(i_r, n_r)`: the r-th strand is `[i_r, …, i_r + n_r]`,
    /// ordered by `i_r`.
    pub fn strands(&self) -> &[(i64, i64)] {
        &self.strands
    }

    /// Strand ends strictly increase and the last end is below the first end
    /// plus `n`.
    pub fn satisfies_end_inequalities(&self) -> bool {
        let ends: Vec<i64> = self.strands.iter().map(|&(i, len)| i + len).collect();
        let n = self.rank.get() as i64;
        ends.windows(2).all(|p| p[0] < p[1]) && ends.last().is_some_and(|&last| last < ends[0] + n)
    }

    /// Reduces modulo `n` and undoes the shift.
    pub fn reduce(&self) -> NormalForm {
        let blocks =
            self.blocks.iter().map(|b| b.iter().map(|&x| self.rank.reduce(x + self.shift as i64)).collect()).collect();
        NormalForm::Blocks(Blocks { rank: self.rank, blocks })
    }
}

impl fmt::Display for IntegralSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks.iter().rev() {
            f.write_str("(")?;
            for (p, x) in b.iter().enumerate() {
                if p > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Runs the block algorithm on `w`.
pub fn normalize(w: &Word) -> NormalForm {
    let rank = w.rank();
    if !w.is_nonzero() {
        return NormalForm::Zero(rank);
    }
    if w.is_empty() {
        return NormalForm::One(rank);
    }
    let n = rank.get();
    let mut remaining: Vec<usize> = w.letters().to_vec();
    let mut blocks = Vec::new();
    let mut seen = vec![false; n];
    let mut selected = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        // a letter i is selected when no i-1 occurs to its right
        seen.iter_mut().for_each(|s| *s = false);
        selected.clear();
        selected.resize(remaining.len(), false);
        for p in (0..remaining.len()).rev() {
            let x = remaining[p];
            selected[p] = !seen[rank.pred(x)];
            seen[x] = true;
        }
        let mut block = Vec::new();
        let mut rest = Vec::with_capacity(remaining.len());
        for (p, &x) in remaining.iter().enumerate() {
            if selected[p] {
                block.push(x);
            } else {
                rest.push(x);
            }
        }
        blocks.push(block);
        remaining = rest;
    }
    sort_blocks(rank, &mut blocks);
    NormalForm::Blocks(Blocks { rank, blocks })
}

/// Orders `Block^(t)` increasingly in the clockwise order starting at `î + t`.
fn sort_blocks(rank: Rank, blocks: &mut [Vec<usize>]) {
    let n = rank.get();
    let mut present = vec![false; n];
    for &x in &blocks[0] {
        present[x] = true;
    }
    let hat = (0..n)
        .rev()
        .find(|&i| !present[i] && present[rank.pred(i)])
        .expect("block 0 is a nonempty proper subset of the indices");
    for (t, block) in blocks.iter_mut().enumerate() {
        let start = (hat + t) % n;
        block.sort_by_key(|&x| (x + n - start) % n);
    }
}

/// Builds the normal form whose strands run over the integer intervals
/// `[start, end]` (generator indices before reduction mod `n`).
pub(crate) fn from_strands(rank: Rank, strands: &[(i64, i64)]) -> NormalForm {
    let longest = strands.iter().map(|&(s, e)| (e - s + 1).max(0) as usize).max().unwrap_or(0);
    if longest == 0 {
        return NormalForm::One(rank);
    }
    let mut blocks: Vec<Vec<usize>> = (0..longest)
        .map(|t| strands.iter().filter(|&&(s, e)| s + t as i64 <= e).map(|&(s, _)| rank.reduce(s + t as i64)).collect())
        .collect();
    sort_blocks(rank, &mut blocks);
    NormalForm::Blocks(Blocks { rank, blocks })
}

impl NormalForm {
    pub fn of(w: &Word) -> NormalForm {
        normalize(w)
    }

    pub fn rank(&self) -> Rank {
        match self {
            NormalForm::Zero(r) | NormalForm::One(r) => *r,
            NormalForm::Blocks(b) => b.rank,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NormalForm::Zero(_))
    }

    pub fn blocks(&self) -> Option<&Blocks> {
        match self {
            NormalForm::Blocks(b) => Some(b),
            _ => None,
        }
    }

    fn require_blocks(&self) -> Result<&Blocks> {
        self.blocks().ok_or(Error::NoBlocks)
    }

    /// Concatenation of the blocks, left to right; the empty word for `One`.
    pub fn canonical_word(&self) -> Result<Word> {
        match self {
            NormalForm::Zero(_) => Err(Error::ZeroMonomial),
            NormalForm::One(r) => Ok(Word::one(*r)),
            NormalForm::Blocks(b) => {
                let letters = b.left_to_right().flatten().copied().collect();
                Ok(Word::from_raw(b.rank, letters))
            }
        }
    }

    /// One strand per element of `Block^(0)`, sorted by start index.
    pub fn strands(&self) -> Result<Vec<Strand>> {
        let b = self.require_blocks()?;
        let rank = b.rank;
        let n = rank.get();
        let sets: Vec<Vec<bool>> = b
            .blocks
            .iter()
            .map(|blk| {
                let mut s = vec![false; n];
                blk.iter().for_each(|&x| s[x] = true);
                s
            })
            .collect();
        let mut starts = b.blocks[0].clone();
        starts.sort_unstable();
        Ok(starts
            .into_iter()
            .map(|start| {
                let mut length = 1;
                let mut cur = start;
                while length < sets.len() && sets[length][rank.succ(cur)] {
                    cur = rank.succ(cur);
                    length += 1;
                }
                Strand { start, length, end: cur }
            })
            .collect())
    }

    /// `ψ = (I_in, I_out, ℓ)`: strand starts, strand ends and the number of
    /// `a_0` factors.
    pub fn psi(&self) -> Result<PsiKey> {
        let b = self.require_blocks()?;
        let strands = self.strands()?;
        Ok(PsiKey {
            i_in: strands.iter().map(|s| s.start).collect(),
            i_out: strands.iter().map(|s| s.end).collect(),
            ell: b.blocks.iter().flatten().filter(|&&x| x == 0).count(),
        })
    }

    /// Lifts the blocks to integers after shifting `min(Block^(0))` to 0.
    pub fn integral_lift(&self) -> Result<IntegralSequence> {
        let b = self.require_blocks()?;
        let rank = b.rank;
        let strands = self.strands()?;
        let shift = strands[0].start;
        // lifted strand start, keyed by the shifted start residue
        let lifted: Vec<(usize, i64, i64)> = strands
            .iter()
            .map(|s| {
                let i = rank.reduce(s.start as i64 - shift as i64) as i64;
                (s.start, i, s.length as i64 - 1)
            })
            .collect();
        let blocks = b
            .blocks
            .iter()
            .enumerate()
            .map(|(t, blk)| {
                blk.iter()
                    .map(|&x| {
                        let origin = rank.reduce(x as i64 - t as i64);
                        let &(_, i, _) =
                            lifted.iter().find(|&&(s, _, _)| s == origin).expect("every block entry lies on a strand");
                        i + t as i64
                    })
                    .collect()
            })
            .collect();
        let mut strand_data: Vec<(i64, i64)> = lifted.iter().map(|&(_, i, len)| (i, len)).collect();
        strand_data.sort_unstable();
        Ok(IntegralSequence { rank, shift, blocks, strands: strand_data })
    }

    /// Parses `"(6 2)(4 5 1)…"`, `"0"` or `"1"`. The blocks must already be in
    /// normal form.
    pub fn parse(rank: Rank, text: &str) -> Result<NormalForm> {
        let text = text.trim();
        match text {
            "0" => return Ok(NormalForm::Zero(rank)),
            "1" => return Ok(NormalForm::One(rank)),
            _ => {}
        }
        let mut blocks = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed block list {text:?}")))?;
            let indices = parse_indices(body.0)?;
            for &i in &indices {
                rank.check_index(i)?;
            }
            blocks.push(indices);
            rest = body.1.trim_start();
        }
        if blocks.is_empty() {
            return Err(Error::Parse(format!("empty normal form {text:?}")));
        }
        blocks.reverse();
        let nf = NormalForm::Blocks(Blocks { rank, blocks });
        let word = nf.canonical_word()?;
        if normalize(&word) != nf {
            return Err(Error::Parse(format!("{text:?} is not in normal form")));
        }
        Ok(nf)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Zero(_) => f.write_str("0"),
            NormalForm::One(_) => f.write_str("1"),
            NormalForm::Blocks(b) => {
                for blk in b.left_to_right() {
                    f.write_str("(")?;
                    write_indices(f, blk, " ")?;
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// Recovers the unique normal form with the given `ψ`-key, or reports that
/// the key is not attained.
///
/// Indices are shifted so that `min(I_in)` becomes 0. In the shifted picture
/// the integer strand ends `E_1 < … < E_k < E_1 + n` are `n·ℓ_r + d_r` with
/// `ℓ_r ∈ {t, t+1}`, and `1 + Σ ℓ_r` counts the shifted zeros. The count of
/// original zeros differs from that by a correction depending only on the
/// shifted in/out sets, so the strand ends follow from the key alone. The
/// candidate is then checked against `ψ`.
pub fn reconstruct(key: &PsiKey, rank: Rank) -> Result<NormalForm> {
    let k = key.i_in.len();
    if k != key.i_out.len() {
        return Err(Error::InvalidKey { i_in: k, i_out: key.i_out.len() });
    }
    for &i in key.i_in.iter().chain(key.i_out.iter()) {
        rank.check_index(i)?;
    }
    if k == 0 {
        return Err(Error::NotInImage);
    }
    let n = rank.get() as i64;
    let shift = *key.i_in.first().expect("k >= 1") as i64;
    let starts: Vec<i64> = key.i_in.iter().map(|&x| x as i64 - shift).collect();
    let mut ends_mod: Vec<i64> = key.i_out.iter().map(|&x| (x as i64 - shift).rem_euclid(n)).collect();
    ends_mod.sort_unstable();

    // original zeros are the shifted indices congruent to c = -shift
    let c = (-shift).rem_euclid(n);
    let below = ends_mod.iter().filter(|&&d| d < c).count() as i64;
    let starts_upto = starts.iter().filter(|&&i| i <= c).count() as i64;
    let shifted_zeros = key.ell as i64 + 1 + below - starts_upto;
    if shifted_zeros < 1 {
        return Err(Error::NotInImage);
    }

    let k_i = k as i64;
    let laps = (shifted_zeros - 1) / k_i;
    let s = k_i - (shifted_zeros - 1 - k_i * laps);
    // d_{s+1} < … < d_k < d_1 < … < d_s
    let ends: Vec<i64> = (1..=k_i)
        .map(|r| {
            if r <= s {
                n * laps + ends_mod[(k_i - s + r - 1) as usize]
            } else {
                n * (laps + 1) + ends_mod[(r - s - 1) as usize]
            }
        })
        .collect();
    if starts.iter().zip(&ends).any(|(&i, &e)| e < i) {
        return Err(Error::NotInImage);
    }
    let strands: Vec<(i64, i64)> = starts.iter().zip(&ends).map(|(&i, &e)| (i + shift, e + shift)).collect();
    let candidate = from_strands(rank, &strands);
    let word = candidate.canonical_word()?;
    if normalize(&word) == candidate && candidate.psi().as_ref() == Ok(key) {
        Ok(candidate)
    } else {
        Err(Error::NotInImage)
    }
}
