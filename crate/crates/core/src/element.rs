//! Integer linear combinations of canonical monomials.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::center::central_generator;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::fock::act_letters_signed;
use crate::normal_form::{normalize, NormalForm};
use crate::qpoly::QPoly;
use crate::word::{parse_indices, Rank, Word};

/// `Σ c_w · w` over canonical words `w`; the empty word is the unit.
///
/// Keys are always canonical words, so structural equality is equality in
/// the algebra. Coefficient arithmetic panics on `i64` overflow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    rank: Rank,
    terms: BTreeMap<Vec<usize>, i64>,
}

fn checked(c: Option<i64>) -> i64 {
    c.expect("coefficient overflow")
}

impl Element {
    pub fn zero(rank: Rank) -> Self {
        Element { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: Rank) -> Self {
        Element::monomial(&Word::one(rank))
    }

    pub fn generator(rank: Rank, i: usize) -> Result<Self> {
        Ok(Element::monomial(&Word::generator(rank, i)?))
    }

    /// The monomial `w` (zero if `w` vanishes).
    pub fn monomial(w: &Word) -> Self {
        let mut e = Element::zero(w.rank());
        e.add_word(w, 1);
        e
    }

    /// `Σ c · w` from arbitrary (not necessarily canonical) words.
    pub fn from_words<'a>(rank: Rank, terms: impl IntoIterator<Item = (&'a Word, i64)>) -> Result<Self> {
        let mut e = Element::zero(rank);
        for (w, c) in terms {
            rank.check_same(w.rank())?;
            e.add_word(w, c);
        }
        Ok(e)
    }

    fn add_canonical(&mut self, key: Vec<usize>, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot = checked(slot.checked_add(c));
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    fn add_word(&mut self, w: &Word, c: i64) {
        if let Ok(canon) = normalize(w).canonical_word() {
            self.add_canonical(canon.into_letters(), c);
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `(canonical word, coefficient)` pairs in key order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, i64)> + '_ {
        self.terms.iter().map(|(k, &c)| (Word::from_raw(self.rank, k.clone()), c))
    }

    /// The coefficient of the monomial `w`.
    pub fn coeff(&self, w: &Word) -> i64 {
        match normalize(w).canonical_word() {
            Ok(canon) if w.rank() == self.rank => self.terms.get(canon.letters()).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.rank.check_same(other.rank)?;
        let mut out = self.clone();
        for (k, &c) in &other.terms {
            out.add_canonical(k.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Element {
        let mut out = Element::zero(self.rank);
        for (k, &x) in &self.terms {
            out.add_canonical(k.clone(), checked(x.checked_mul(c)));
        }
        out
    }

    /// Product: concatenate and renormalize every pair of terms.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.rank.check_same(other.rank)?;
        let mut out = Element::zero(self.rank);
        let mut letters = Vec::new();
        for (k1, &c1) in &self.terms {
            for (k2, &c2) in &other.terms {
                letters.clear();
                letters.extend_from_slice(k1);
                letters.extend_from_slice(k2);
                let w = Word::from_raw(self.rank, core::mem::take(&mut letters));
                out.add_word(&w, checked(c1.checked_mul(c2)));
                letters = w.into_letters();
            }
        }
        Ok(out)
    }

    pub fn pow(&self, m: u32) -> Element {
        (0..m).fold(Element::one(self.rank), |acc, _| acc.mul(self).expect("same rank"))
    }

    /// Whether `e` commutes with every generator.
    pub fn is_central(&self) -> bool {
        (0..self.rank.get()).all(|i| {
            let g = Element::generator(self.rank, i).expect("index in range");
            self.mul(&g).expect("same rank") == g.mul(self).expect("same rank")
        })
    }

    /// The scalars `p_1, …, p_{n-1}` by which a central element acts on the
    /// `k`-particle configurations.
    ///
    /// Read off one configuration per `k` and checked against all others.
    pub fn central_character(&self) -> Result<Vec<QPoly>> {
        let mut out = Vec::new();
        for k in 1..self.rank.get() {
            let mut scalar: Option<QPoly> = None;
            for c in Config::all_with(self.rank, k) {
                let mut diag = QPoly::zero();
                let mut off_diagonal = BTreeMap::<Config, QPoly>::new();
                for (key, &coef) in &self.terms {
                    if let Some((s, e, img)) = act_letters_signed(key, c) {
                        let term = QPoly::monomial(checked(s.checked_mul(coef)), e);
                        if img == c {
                            diag = &diag + &term;
                        } else {
                            let slot = off_diagonal.entry(img).or_default();
                            *slot = &*slot + &term;
                        }
                    }
                }
                if off_diagonal.values().any(|p| !p.is_zero()) {
                    return Err(Error::NotCentral);
                }
                match &scalar {
                    None => scalar = Some(diag),
                    Some(s) if *s == diag => {}
                    Some(_) => return Err(Error::NotCentral),
                }
            }
            out.push(scalar.unwrap_or_default());
        }
        Ok(out)
    }

    /// `Σ_k p_k(t_k)` for polynomials `p_1, …, p_{n-1}` without constant term.
    pub fn from_central_polynomials(rank: Rank, polys: &[QPoly]) -> Result<Element> {
        if polys.len() != rank.get() - 1 {
            return Err(Error::SizeMismatch(polys.len(), rank.get() - 1));
        }
        let mut out = Element::zero(rank);
        for (idx, p) in polys.iter().enumerate() {
            if p.coeff(0) != 0 {
                return Err(Error::NonzeroConstantTerm);
            }
            let t = central_generator(idx + 1, rank)?;
            for (e, c) in p.terms() {
                out = out.add(&t.pow(e).scale(c))?;
            }
        }
        Ok(out)
    }

    /// Parses `"0"` or terms like `+1·[2 1 0] -3·[0]`; `[]` is the unit.
    pub fn parse(rank: Rank, text: &str) -> Result<Element> {
        let text = text.trim();
        let mut e = Element::zero(rank);
        if text == "0" {
            return Ok(e);
        }
        let bad = || Error::Parse(format!("invalid element {text:?}"));
        let mut rest = text;
        while !rest.trim().is_empty() {
            let (head, tail) = rest.split_once(']').ok_or_else(bad)?;
            let (coef, letters) = head.split_once('[').ok_or_else(bad)?;
            let coef = coef.trim().trim_end_matches(['·', '*']).trim();
            let c: i64 = coef.trim_start_matches('+').parse().map_err(|_| bad())?;
            let w = Word::new(rank, parse_indices(letters)?)?;
            e.add_word(&w, c);
            rest = tail;
        }
        Ok(e)
    }

    /// Terms in display order: by degree, then by the `ψ`-key, then by word.
    pub fn sorted_terms(&self) -> Vec<(Word, i64)> {
        let mut terms: Vec<_> = self
            .terms()
            .map(|(w, c)| {
                let key = match normalize(&w) {
                    NormalForm::Blocks(_) => {
                        let psi = normalize(&w).psi().expect("nonzero monomial");
                        (psi.i_in.into_iter().collect::<Vec<_>>(), psi.i_out.into_iter().collect(), psi.ell)
                    }
                    _ => (Vec::new(), Vec::new(), 0),
                };
                ((w.len(), key), w, c)
            })
            .collect();
        terms.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        terms.into_iter().map(|(_, w, c)| (w, c)).collect()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (p, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if p > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c:+}·[{w}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{matrix_block, RepMatrix};
    use alloc::string::ToString;
    use alloc::vec;
    use rand::{Rng, SeedableRng};

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn gen(n: usize, i: usize) -> Element {
        Element::generator(rank(n), i).unwrap()
    }

    pub(crate) fn random_element(rng: &mut impl Rng, r: Rank, terms: usize, max_len: usize) -> Element {
        let mut e = Element::zero(r);
        for _ in 0..terms {
            let len = rng.gen_range(0..=max_len);
            let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..r.get())).collect();
            let w = Word::new(r, letters).unwrap();
            e = e.add(&Element::monomial(&w).scale(rng.gen_range(-2..=2))).unwrap();
        }
        e
    }

    #[test]
    fn linear_structure() {
        let r = rank(4);
        let e = gen(4, 1).add(&gen(4, 3).scale(2)).unwrap();
        assert_eq!(e.add(&Element::zero(r)).unwrap(), e);
        assert!(e.add(&e.scale(-1)).unwrap().is_zero());
        let two = gen(4, 1).scale(2);
        assert_eq!(two.len(), 1);
        assert_eq!(two.coeff(&Word::generator(r, 1).unwrap()), 2);
        assert_eq!(e.add(&gen(3, 0)), Err(Error::RankMismatch(4, 3)));
    }

    #[test]
    fn products() {
        let a01 = gen(3, 0).mul(&gen(3, 1)).unwrap();
        let a10 = gen(3, 1).mul(&gen(3, 0)).unwrap();
        assert!(!a01.is_zero() && !a10.is_zero());
        assert_ne!(a01, a10);
        assert!(gen(3, 1).mul(&gen(3, 1)).unwrap().is_zero());
        // commuting letters give the same canonical key
        let r = rank(5);
        assert_eq!(
            Element::monomial(&Word::new(r, vec![0, 2]).unwrap()),
            Element::monomial(&Word::new(r, vec![2, 0]).unwrap())
        );
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for n in 3..=5 {
            let r = rank(n);
            for _ in 0..30 {
                let x = random_element(&mut rng, r, 3, 5);
                let y = random_element(&mut rng, r, 3, 5);
                let z = random_element(&mut rng, r, 3, 5);
                let lhs = x.mul(&y).unwrap().mul(&z).unwrap();
                let rhs = x.mul(&y.mul(&z).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(x.mul(&Element::one(r)).unwrap(), x);
                assert_eq!(Element::one(r).mul(&x).unwrap(), x);
                let dist = x.mul(&y.add(&z).unwrap()).unwrap();
                assert_eq!(dist, x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn representation_is_multiplicative() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for n in 3..=5 {
            let r = rank(n);
            for _ in 0..20 {
                let x = random_element(&mut rng, r, 3, 6);
                let y = random_element(&mut rng, r, 3, 6);
                for k in 0..=n {
                    let prod: RepMatrix = matrix_block(&x.mul(&y).unwrap(), k).unwrap();
                    let blocks = matrix_block(&x, k).unwrap().mul(&matrix_block(&y, k).unwrap()).unwrap();
                    assert_eq!(prod, blocks);
                }
            }
        }
    }

    #[test]
    fn centrality() {
        assert!(Element::one(rank(4)).is_central());
        assert!(!gen(4, 0).is_central());
        assert!(Element::zero(rank(3)).is_central());
    }

    #[test]
    fn characters() {
        let r = rank(4);
        assert_eq!(Element::one(r).central_character().unwrap(), vec![QPoly::one(); 3]);
        assert_eq!(gen(4, 0).central_character(), Err(Error::NotCentral));

        let t1 = central_generator(1, r).unwrap();
        let t2 = central_generator(2, r).unwrap();
        let c = t1.add(&t2.pow(2)).unwrap();
        assert_eq!(c.central_character().unwrap(), vec![QPoly::q(), QPoly::monomial(1, 2), QPoly::zero()]);
        // oracle: compare whole blocks with scalar matrices
        for (k, p) in [(1, QPoly::q()), (2, QPoly::monomial(1, 2)), (3, QPoly::zero())] {
            let m = matrix_block(&c, k).unwrap();
            let mut expected = RepMatrix::zero(r, k).unwrap();
            for cfg in Config::all_with(r, k) {
                expected.add_entry(cfg, cfg, &p).unwrap();
            }
            assert_eq!(m, expected);
        }
    }

    #[test]
    fn central_polynomials_round_trip() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for n in 3..=4 {
            let r = rank(n);
            for _ in 0..10 {
                let polys: Vec<QPoly> =
                    (1..n).map(|_| QPoly::from_terms((1..=2).map(|e| (e, rng.gen_range(-2..=2))))).collect();
                let c = Element::from_central_polynomials(r, &polys).unwrap();
                assert!(c.is_central());
                assert_eq!(c.central_character().unwrap(), polys);
                // every monomial of a central element uses every generator
                for (w, _) in c.terms() {
                    let deg = w.zn_degree();
                    assert!(deg.iter().all(|&d| d > 0), "{w}");
                }
            }
        }
        assert_eq!(
            Element::from_central_polynomials(rank(3), &[QPoly::one(), QPoly::zero()]),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn text_round_trip() {
        let r = rank(3);
        let t1 = central_generator(1, r).unwrap();
        assert_eq!(t1.to_string(), "+1·[2 1 0] +1·[0 2 1] +1·[1 0 2]");
        assert_eq!(Element::parse(r, &t1.to_string()).unwrap(), t1);
        let mixed = Element::one(r).add(&gen(3, 2).scale(-3)).unwrap();
        assert_eq!(mixed.to_string(), "+1·[] -3·[2]");
        assert_eq!(Element::parse(r, &mixed.to_string()).unwrap(), mixed);
        assert_eq!(Element::zero(r).to_string(), "0");
        assert_eq!(Element::parse(r, "0").unwrap(), Element::zero(r));
        assert!(Element::parse(r, "+1·[5]").is_err());
        assert!(Element::parse(r, "1 0").is_err());
    }
}
