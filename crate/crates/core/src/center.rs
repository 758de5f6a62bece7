//! Projector monomials, the central generators `t_k`, the `e_IJ` monomials
//! and the monomial basis `{1} ∪ {p_k^ℓ e_IJ}`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::config::Config;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::fock::act_letters_signed;
use crate::normal_form::{from_strands, normalize};
use crate::search::canonical_monomials;
use crate::word::{Rank, Word};

/// Label `(k, ℓ, I, J)` of the basis monomial `p_k^ℓ · e_IJ`, which moves the
/// configuration `J` to `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    pub k: usize,
    pub ell: usize,
    pub i_out: Config,
    pub i_in: Config,
}

impl BasisLabel {
    /// Parses `k=2 l=1 I=(0,2) J=(0,1)`.
    pub fn parse(rank: Rank, text: &str) -> Result<BasisLabel> {
        let bad = || Error::Parse(format!("invalid basis label {text:?}"));
        let mut fields = [None; 4];
        for tok in text.split_whitespace() {
            let (name, value) = tok.split_once('=').ok_or_else(bad)?;
            let slot = ["k", "l", "I", "J"].iter().position(|&f| f == name).ok_or_else(bad)?;
            fields[slot] = Some(value);
        }
        let [Some(k), Some(l), Some(i), Some(j)] = fields else {
            return Err(bad());
        };
        let label = BasisLabel {
            k: k.parse().map_err(|_| bad())?,
            ell: l.parse().map_err(|_| bad())?,
            i_out: Config::parse_labels(rank, i)?,
            i_in: Config::parse_labels(rank, j)?,
        };
        if label.i_out.len() != label.k || label.i_in.len() != label.k {
            return Err(bad());
        }
        Ok(label)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} l={} I={} J={}", self.k, self.ell, self.i_out.to_label_list(), self.i_in.to_label_list())
    }
}

fn check_particles(c: &Config) -> Result<()> {
    let n = c.rank().get();
    if c.is_empty() || c.len() >= n {
        return Err(Error::ParticleCountOutOfRange { k: c.len(), rank: n });
    }
    Ok(())
}

/// Indices `g` (into the sorted labels) of particles whose clockwise
/// neighbour site is free.
pub fn gaps(i: &Config) -> Vec<usize> {
    let n = i.rank().get();
    let labels = i.labels();
    (0..labels.len()).filter(|&g| !labels.contains(&((labels[g] + 1) % n))).collect()
}

/// The projector monomial `a(Î)`, using the gap after the last particle when
/// there is one and the first gap otherwise.
pub fn projector_monomial(i: &Config) -> Result<Word> {
    let gs = gaps(i);
    let last = i.len().wrapping_sub(1);
    let gap = if gs.contains(&last) { Some(last) } else { gs.first().copied() };
    projector_monomial_with_gap(i, gap.ok_or(Error::NoGap)?)
}

/// `a(Î)` for an explicit gap: every particle moves to the site of the next
/// one. The descending runs carry each particle up to just before its
/// successor, the final factor makes the last hop, starting at the gap.
pub fn projector_monomial_with_gap(i: &Config, gap: usize) -> Result<Word> {
    check_particles(i)?;
    if !gaps(i).contains(&gap) {
        return Err(Error::NoGap);
    }
    let rank = i.rank();
    let n = rank.get();
    let l = i.labels();
    let k = l.len();
    let mut letters = Vec::with_capacity(n);
    let mut run = |from: usize, to: usize| {
        // from-1, from-2, …, to+1 (mod n)
        let mut x = rank.pred(from);
        while x != to {
            letters.push(x);
            x = rank.pred(x);
        }
    };
    run(l[0], l[k - 1]);
    for s in 0..k - 1 {
        run(l[s + 1], l[s]);
    }
    letters.extend(l[gap + 1..].iter().chain(&l[..=gap]));
    Ok(Word::from_raw(rank, letters))
}

/// `Σ_{|I|=k} a(Î)` without sign.
pub fn projector_sum(k: usize, rank: Rank) -> Result<Element> {
    if k == 0 || k >= rank.get() {
        return Err(Error::ParticleCountOutOfRange { k, rank: rank.get() });
    }
    let words = Config::all_with(rank, k).iter().map(projector_monomial).collect::<Result<Vec<_>>>()?;
    Element::from_words(rank, words.iter().map(|w| (w, 1)))
}

/// The central generator `t_k = (-1)^{k-1} Σ_{|I|=k} a(Î)`.
pub fn central_generator(k: usize, rank: Rank) -> Result<Element> {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    Ok(projector_sum(k, rank)?.scale(sign))
}

/// One admissible routing of the particles of `J` onto `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routing {
    /// integer destinations, one per sorted particle of `J`
    pub ends: Vec<i64>,
    /// number of passages through site 0, i.e. the power of `q`
    pub crossings: usize,
    pub word: Word,
}

/// All order-preserving routings `J → I` in which every particle moves at
/// least one step and that give a nonzero monomial, by increasing number of
/// full turns.
pub fn e_word_candidates(i: &Config, j: &Config) -> Result<Vec<Routing>> {
    i.rank().check_same(j.rank())?;
    if i.len() != j.len() {
        return Err(Error::SizeMismatch(i.len(), j.len()));
    }
    check_particles(i)?;
    let rank = i.rank();
    let n = rank.get() as i64;
    let k = i.len();
    let js: Vec<i64> = j.labels().iter().map(|&x| x as i64).collect();
    let is: Vec<i64> = i.labels().iter().map(|&x| x as i64).collect();
    // the lifts of I above j_1, enough for two full turns of choices
    let lifts: Vec<i64> =
        (0..4).flat_map(|t| is.iter().map(move |&x| x + n * t)).filter(|&x| x > js[0]).take(3 * k).collect();
    let mut out = Vec::new();
    for p in 0..2 * k {
        let ends = &lifts[p..p + k];
        if js.iter().zip(ends).any(|(&s, &e)| e <= s) {
            continue;
        }
        let strands: Vec<(i64, i64)> = js.iter().zip(ends).map(|(&s, &e)| (s, e - 1)).collect();
        let crossings = strands.iter().map(|&(s, e)| (e.div_euclid(n) - (s - 1).div_euclid(n)) as usize).sum();
        let Ok(word) = from_strands(rank, &strands).canonical_word() else {
            continue;
        };
        let moves = act_letters_signed(word.letters(), *j).is_some_and(|(_, _, img)| img == *i);
        if moves && normalize(&word).canonical_word().as_ref() == Ok(&word) {
            out.push(Routing { ends: ends.to_vec(), crossings, word });
        }
    }
    Ok(out)
}

/// The monomial `e_IJ`: moves `J` to `I`, every particle at least one step,
/// with the least power of `q`. For `I = J` this is `a(Î)`.
pub fn e_word(i: &Config, j: &Config) -> Result<Word> {
    if i == j {
        return projector_monomial(i);
    }
    e_word_candidates(i, j)?.into_iter().min_by_key(|r| r.crossings).map(|r| r.word).ok_or(Error::NotInImage)
}

/// The canonical word of `p_k^ℓ · e_IJ`.
pub fn basis_word(label: &BasisLabel) -> Result<Word> {
    let e = e_word(&label.i_out, &label.i_in)?;
    let p = projector_monomial(&label.i_out)?;
    let mut letters = Vec::new();
    for _ in 0..label.ell {
        letters.extend_from_slice(p.letters());
    }
    letters.extend_from_slice(e.letters());
    normalize(&Word::from_raw(e.rank(), letters)).canonical_word()
}

/// The basis label of a nonzero, non-unit monomial.
///
/// `J` is the input set of the normal form (the smallest configuration the
/// word acts on), `I` and the power of `q` are read off its action on `v(J)`.
pub fn factorize(w: &Word) -> Result<BasisLabel> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let nf = normalize(w);
    if nf.is_zero() {
        return Err(Error::ZeroMonomial);
    }
    let key = nf.psi()?;
    let rank = w.rank();
    let j = Config::from_labels(rank, key.i_in.iter().copied())?;
    let (_, power, i) = act_letters_signed(w.letters(), j).ok_or(Error::NotInImage)?;
    let minimal = e_word(&i, &j)?.letters().iter().filter(|&&x| x == 0).count();
    let ell = (power as usize).checked_sub(minimal).ok_or(Error::NotInImage)?;
    let label = BasisLabel { k: j.len(), ell, i_out: i, i_in: j };
    if normalize(&basis_word(&label)?) != nf {
        return Err(Error::NotInImage);
    }
    Ok(label)
}

/// All labels with `1 <= k < n` and `ℓ <= ell_max`, ordered by `k`, `ℓ`, `I`,
/// `J`, each with its canonical word.
pub fn enumerate_basis(rank: Rank, ell_max: usize) -> Result<Vec<(BasisLabel, Word)>> {
    let mut out = Vec::new();
    for k in 1..rank.get() {
        let configs = Config::all_with(rank, k);
        for ell in 0..=ell_max {
            for i in &configs {
                for j in &configs {
                    let label = BasisLabel { k, ell, i_out: *i, i_in: *j };
                    out.push((label, basis_word(&label)?));
                }
            }
        }
    }
    Ok(out)
}

/// Number of nonzero monomials (including 1) generated by `a_1, …, a_{n-1}`.
pub fn fntl_dimension(rank: Rank) -> usize {
    let generators: Vec<usize> = (1..rank.get()).collect();
    // the longest nonzero word in the finite part has length n(n-1)/2
    canonical_monomials(rank, rank.get() * rank.get(), &generators).len()
}
