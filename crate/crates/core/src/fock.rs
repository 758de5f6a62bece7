//! The representation on particle configurations.
//!
//! `a_j` (`1 <= j < n`) moves a particle from position `j` to `j + 1` if that
//! site is free. `a_0` moves the particle at position `n` (circle site 0) to
//! position 1 and picks up the scalar `(-1)^{k-1} q`, `k` being the number of
//! particles: the moved vector is re-sorted to the front of the wedge.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::config::Config;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg::{RowReducer, SparseRow};
use crate::qpoly::QPoly;
use crate::word::{Rank, Word};

/// `(sign, q-exponent, image)`; the scalar is `sign · q^exp`.
pub(crate) type SignedImage = (i64, u32, Config);

pub(crate) fn act_generator_signed(j: usize, c: Config) -> Option<SignedImage> {
    let n = c.rank().get();
    if j == 0 {
        if c.contains(n) && !c.contains(1) {
            let sign = if c.len() % 2 == 1 { 1 } else { -1 };
            return Some((sign, 1, c.without(n).with(1)));
        }
        None
    } else if j < n && c.contains(j) && !c.contains(j + 1) {
        Some((1, 0, c.without(j).with(j + 1)))
    } else {
        None
    }
}

/// Applies `letters` right to left.
pub(crate) fn act_letters_signed(letters: &[usize], c: Config) -> Option<SignedImage> {
    letters.iter().rev().try_fold((1, 0, c), |(sign, exp, cur), &j| {
        let (s, e, next) = act_generator_signed(j, cur)?;
        Some((sign * s, exp + e, next))
    })
}

/// The action of one generator; `None` means the image is zero.
pub fn act_generator(j: usize, c: &Config) -> Result<Option<(QPoly, Config)>> {
    c.rank().check_index(j)?;
    Ok(act_generator_signed(j, *c).map(|(s, e, img)| (QPoly::monomial(s, e), img)))
}

/// The action of a monomial (rightmost letter first).
pub fn act_word(w: &Word, c: &Config) -> Result<Option<(QPoly, Config)>> {
    w.rank().check_same(c.rank())?;
    Ok(act_letters_signed(w.letters(), *c).map(|(s, e, img)| (QPoly::monomial(s, e), img)))
}

/// A finite `ℤ[q]`-combination of configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    rank: Rank,
    terms: BTreeMap<Config, QPoly>,
}

impl FockVector {
    pub fn zero(rank: Rank) -> Self {
        FockVector { rank, terms: BTreeMap::new() }
    }

    /// The basis vector `v(c)`.
    pub fn basis(c: Config) -> Self {
        let mut v = FockVector::zero(c.rank());
        v.add_term(c, &QPoly::one());
        v
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Config, &QPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &Config) -> QPoly {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, c: Config, p: &QPoly) {
        let sum = &self.coeff(&c) + p;
        if sum.is_zero() {
            self.terms.remove(&c);
        } else {
            self.terms.insert(c, sum);
        }
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (p, (c, poly)) in self.terms().enumerate() {
            if p > 0 {
                f.write_str(" + ")?;
            }
            if poly.terms().count() > 1 {
                write!(f, "({poly}) · {c}")?;
            } else {
                write!(f, "{poly} · {c}")?;
            }
        }
        Ok(())
    }
}

/// Linear extension of [`act_word`].
pub fn act_element(e: &Element, v: &FockVector) -> Result<FockVector> {
    e.rank().check_same(v.rank())?;
    let mut out = FockVector::zero(v.rank());
    for (word, coef) in e.terms() {
        for (c, poly) in v.terms() {
            if let Some((s, exp, img)) = act_letters_signed(word.letters(), *c) {
                out.add_term(img, &poly.shift(exp).scale(s * coef));
            }
        }
    }
    Ok(out)
}

/// The action on the `k`-particle summand, as a sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    rank: Rank,
    k: usize,
    /// `(row, col) -> entry`; row is the output configuration
    entries: BTreeMap<(Config, Config), QPoly>,
}

impl RepMatrix {
    pub fn zero(rank: Rank, k: usize) -> Result<Self> {
        if k > rank.get() {
            return Err(Error::ParticleCountOutOfRange { k, rank: rank.get() });
        }
        Ok(RepMatrix { rank, k, entries: BTreeMap::new() })
    }

    pub fn identity(rank: Rank, k: usize) -> Result<Self> {
        let mut m = RepMatrix::zero(rank, k)?;
        for c in Config::all_with(rank, k) {
            m.add_entry(c, c, &QPoly::one())?;
        }
        Ok(m)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dimension(&self) -> usize {
        Config::all_with(self.rank, self.k).len()
    }

    /// Nonzero entries as `((row, col), value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(Config, Config), &QPoly)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: &Config, col: &Config) -> QPoly {
        self.entries.get(&(*row, *col)).cloned().unwrap_or_default()
    }

    pub fn add_entry(&mut self, row: Config, col: Config, p: &QPoly) -> Result<()> {
        for c in [row, col] {
            self.rank.check_same(c.rank())?;
            if c.len() != self.k {
                return Err(Error::SizeMismatch(c.len(), self.k));
            }
        }
        let sum = &self.get(&row, &col) + p;
        if sum.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), sum);
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &RepMatrix) -> Result<RepMatrix> {
        self.rank.check_same(rhs.rank)?;
        if self.k != rhs.k {
            return Err(Error::SizeMismatch(self.k, rhs.k));
        }
        let mut by_row: BTreeMap<Config, Vec<(Config, &QPoly)>> = BTreeMap::new();
        for ((r, c), p) in &rhs.entries {
            by_row.entry(*r).or_default().push((*c, p));
        }
        let mut out = RepMatrix::zero(self.rank, self.k)?;
        for ((r, m), p) in &self.entries {
            for (c, p2) in by_row.get(m).into_iter().flatten() {
                out.add_entry(*r, *c, &(p * *p2))?;
            }
        }
        Ok(out)
    }
}

impl RepMatrix {
    /// Parses the text form written by `Display`.
    pub fn parse(text: &str) -> Result<RepMatrix> {
        let bad = |what: &str| Error::Parse(alloc::format!("invalid matrix {what}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("header"))?;
        let mut fields = [None; 3];
        for tok in header.split_whitespace() {
            let (name, value) = tok.split_once('=').ok_or_else(|| bad("header"))?;
            let slot = ["n", "k", "nnz"].iter().position(|&f| f == name).ok_or_else(|| bad("header"))?;
            fields[slot] = Some(value.parse::<usize>().map_err(|_| bad("header"))?);
        }
        let [Some(n), Some(k), Some(nnz)] = fields else {
            return Err(bad("header"));
        };
        let rank = Rank::new(n)?;
        let mut m = RepMatrix::zero(rank, k)?;
        for line in lines {
            let (cells, poly) = line.split_once(" : ").ok_or_else(|| bad("entry"))?;
            let (row, col) = cells.split_once("<-").ok_or_else(|| bad("entry"))?;
            m.add_entry(Config::parse_labels(rank, row)?, Config::parse_labels(rank, col)?, &QPoly::parse(poly)?)?;
        }
        if m.nnz() != nnz {
            return Err(bad("entry count"));
        }
        Ok(m)
    }
}

impl fmt::Display for RepMatrix {
    /// One line per nonzero entry: `row <- col : poly`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines: Vec<_> = self.entries.iter().map(|((r, c), p)| (r.labels(), c.labels(), r, c, p)).collect();
        lines.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        writeln!(f, "n={} k={} nnz={}", self.rank, self.k, self.entries.len())?;
        for (_, _, r, c, p) in lines {
            writeln!(f, "{r} <- {c} : {p}")?;
        }
        Ok(())
    }
}

/// The `k`-particle block of `e`.
pub fn matrix_block(e: &Element, k: usize) -> Result<RepMatrix> {
    let rank = e.rank();
    let mut m = RepMatrix::zero(rank, k)?;
    for col in Config::all_with(rank, k) {
        for (word, coef) in e.terms() {
            if let Some((s, exp, row)) = act_letters_signed(word.letters(), col) {
                m.add_entry(row, col, &QPoly::monomial(s * coef, exp))?;
            }
        }
    }
    Ok(m)
}

/// Dimension of the commutant of all generator matrices on the `k`-particle
/// block, with `q` specialised to `q_value`.
///
/// Solves `X A_j = A_j X` for the `d²` entries of `X`. Every generator matrix
/// has at most one nonzero entry per row and per column, so each equation has
/// at most two terms and the sparse elimination stays cheap.
pub fn endomorphism_dimension(rank: Rank, k: usize, q_value: &BigRational) -> Result<usize> {
    if k == 0 || k >= rank.get() {
        return Err(Error::ParticleCountOutOfRange { k, rank: rank.get() });
    }
    let configs = Config::all_with(rank, k);
    let d = configs.len();
    let index: BTreeMap<Config, usize> = configs.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let var = |r: usize, c: usize| r * d + c;
    let mut reducer = RowReducer::new();
    for j in 0..rank.get() {
        // A[row][col] as sparse per-column and per-row lists
        let mut by_col: Vec<Vec<(usize, BigRational)>> = alloc::vec![Vec::new(); d];
        let mut by_row: Vec<Vec<(usize, BigRational)>> = alloc::vec![Vec::new(); d];
        for (col, c) in configs.iter().enumerate() {
            if let Some((s, e, img)) = act_generator_signed(j, *c) {
                let val = QPoly::monomial(s, e).eval(q_value);
                if !val.is_zero() {
                    let row = index[&img];
                    by_col[col].push((row, val.clone()));
                    by_row[row].push((col, val));
                }
            }
        }
        #[allow(clippy::needless_range_loop)]
        for r in 0..d {
            for c in 0..d {
                // (XA)[r][c] - (AX)[r][c]
                let mut eq = SparseRow::new();
                for (m, a) in &by_col[c] {
                    *eq.entry(var(r, *m)).or_insert_with(BigRational::zero) += a;
                }
                for (m, a) in &by_row[r] {
                    *eq.entry(var(*m, c)).or_insert_with(BigRational::zero) -= a;
                }
                reducer.insert(eq);
            }
        }
    }
    Ok(d * d - reducer.rank())
}

/// Coordinate key of one cell of the full representation: `(k, row, col, q-exponent)`.
pub type CellKey = (usize, Config, Config, u32);

/// The entries of blocks `1..n` of `e`, one integer per (cell, power of q).
pub fn representation_coordinates(e: &Element) -> Result<BTreeMap<CellKey, i64>> {
    let mut out = BTreeMap::new();
    for k in 1..e.rank().get() {
        for ((row, col), p) in matrix_block(e, k)?.entries() {
            for (exp, c) in p.terms() {
                out.insert((k, *row, *col, exp), c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::central_generator;
    use crate::linalg::tests_support::dense_rank;
    use alloc::string::ToString;
    use alloc::vec;
    use num_traits::One;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn cfg(n: usize, positions: &[usize]) -> Config {
        Config::from_positions(rank(n), positions.iter().copied()).unwrap()
    }

    fn word(n: usize, letters: &[usize]) -> Word {
        Word::new(rank(n), letters.to_vec()).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(act_generator(0, &cfg(8, &[5, 8])).unwrap(), Some((QPoly::monomial(-1, 1), cfg(8, &[1, 5]))));
        assert_eq!(act_generator(6, &cfg(8, &[1, 5, 6])).unwrap(), Some((QPoly::one(), cfg(8, &[1, 5, 7]))));
        assert_eq!(act_generator(2, &cfg(5, &[1, 4])).unwrap(), None);
        assert_eq!(act_generator(2, &cfg(5, &[2, 3])).unwrap(), None);
        assert!(act_generator(5, &cfg(5, &[2])).is_err());
    }

    #[test]
    fn word_examples() {
        // site 0 is stored as position 8
        assert_eq!(
            act_word(&word(8, &[3, 2, 5]), &cfg(8, &[8, 1, 2, 5])).unwrap(),
            Some((QPoly::one(), cfg(8, &[8, 1, 4, 6])))
        );
        assert_eq!(
            act_word(&word(8, &[7, 1, 6]), &cfg(8, &[1, 5, 6])).unwrap(),
            Some((QPoly::one(), cfg(8, &[2, 5, 8])))
        );
        assert_eq!(
            act_word(&word(8, &[0, 7, 4, 3, 2, 1, 5, 6]), &cfg(8, &[1, 5, 6])).unwrap(),
            Some((QPoly::q(), cfg(8, &[1, 5, 6])))
        );
        let c = cfg(3, &[2]);
        assert_eq!(act_word(&Word::one(rank(3)), &c).unwrap(), Some((QPoly::one(), c)));
    }

    #[test]
    fn particle_count_preserved_and_relations_annihilate() {
        for n in 3..=6 {
            let r = rank(n);
            for k in 0..=n {
                for c in Config::all_with(r, k) {
                    for i in 0..n {
                        if let Some((_, _, img)) = act_generator_signed(i, c) {
                            assert_eq!(img.len(), k);
                        }
                        let (ip, is) = (r.pred(i), r.succ(i));
                        assert!(act_letters_signed(&[i, i], c).is_none());
                        assert!(act_letters_signed(&[i, is, i], c).is_none());
                        assert!(act_letters_signed(&[i, ip, i], c).is_none());
                        for j in 0..n {
                            if r.commute(i, j) {
                                assert_eq!(act_letters_signed(&[i, j], c), act_letters_signed(&[j, i], c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn element_action() {
        let r = rank(3);
        let e = Element::generator(r, 0).unwrap().add(&Element::generator(r, 1).unwrap()).unwrap();
        let v = act_element(&e, &FockVector::basis(cfg(3, &[3]))).unwrap();
        let mut expected = FockVector::zero(r);
        expected.add_term(cfg(3, &[1]), &QPoly::q());
        assert_eq!(v, expected);
        assert_eq!(v.to_string(), "+1·q^1 · (1)");

        let t1 = central_generator(1, r).unwrap();
        let v = act_element(&t1, &FockVector::basis(cfg(3, &[2]))).unwrap();
        assert_eq!(v.coeff(&cfg(3, &[2])), QPoly::q());
        assert_eq!(act_element(&Element::one(r), &v).unwrap(), v);
    }

    #[test]
    fn matrix_text_round_trip() {
        let r = rank(4);
        let e = Element::parse(r, "+1·[3 2 1 0] -2·[0] +1·[1 2] +3·[]").unwrap();
        for k in 0..=4 {
            let m = matrix_block(&e, k).unwrap();
            assert_eq!(RepMatrix::parse(&m.to_string()).unwrap(), m);
        }
        assert!(RepMatrix::parse("n=4 k=1 nnz=2\n(1) <- (0) : +1·q^0").is_err());
        assert!(RepMatrix::parse("").is_err());
    }

    #[test]
    fn matrix_block_examples() {
        let r = rank(3);
        let t1 = central_generator(1, r).unwrap();
        let m = matrix_block(&t1, 1).unwrap();
        let mut expected = RepMatrix::identity(r, 1).unwrap();
        expected = {
            let mut scaled = RepMatrix::zero(r, 1).unwrap();
            for ((row, col), p) in expected.entries() {
                scaled.add_entry(*row, *col, &(p * &QPoly::q())).unwrap();
            }
            scaled
        };
        assert_eq!(m, expected);

        let a1 = matrix_block(&Element::generator(r, 1).unwrap(), 1).unwrap();
        assert_eq!(a1.nnz(), 1);
        assert_eq!(a1.get(&cfg(3, &[2]), &cfg(3, &[1])), QPoly::one());

        // a word with two strands needs two particles
        let two = Element::monomial(&word(4, &[0, 2]));
        assert_eq!(matrix_block(&two, 1).unwrap().nnz(), 0);
        assert!(matrix_block(&two, 5).is_err());
    }

    /// Builds the commutant equations densely and takes the nullity.
    fn dense_commutant_dimension(n: usize, k: usize, q_value: &BigRational) -> usize {
        let r = rank(n);
        let configs = Config::all_with(r, k);
        let d = configs.len();
        let mut rows = Vec::new();
        for j in 0..n {
            let mut a = vec![vec![BigRational::zero(); d]; d];
            for (col, c) in configs.iter().enumerate() {
                for (row, c2) in configs.iter().enumerate() {
                    if let Some((p, img)) = act_generator(j, c).unwrap() {
                        if img == *c2 {
                            a[row][col] = p.eval(q_value);
                        }
                    }
                }
            }
            for rr in 0..d {
                for cc in 0..d {
                    let mut eq = vec![BigRational::zero(); d * d];
                    for m in 0..d {
                        eq[rr * d + m] += &a[m][cc];
                        eq[m * d + cc] -= &a[rr][m];
                    }
                    rows.push(eq);
                }
            }
        }
        d * d - dense_rank(rows)
    }

    #[test]
    fn endomorphism_dimension_matches_dense_solve() {
        let zero = BigRational::zero();
        let one = BigRational::one();
        for (n, k) in [(3, 1), (3, 2), (4, 1), (4, 2), (5, 2)] {
            for qv in [&zero, &one] {
                assert_eq!(
                    endomorphism_dimension(rank(n), k, qv).unwrap(),
                    dense_commutant_dimension(n, k, qv),
                    "n={n} k={k} q={qv}"
                );
            }
        }
        assert!(endomorphism_dimension(rank(4), 0, &zero).is_err());
        assert!(endomorphism_dimension(rank(4), 4, &zero).is_err());
    }

    #[test]
    fn simple_at_q_one() {
        let one = BigRational::one();
        for k in 1..4 {
            assert_eq!(endomorphism_dimension(rank(4), k, &one).unwrap(), 1);
        }
    }

    #[test]
    fn monomial_block_has_single_entry() {
        for n in 3..=4 {
            for w in crate::search::nonzero_words(rank(n), 7).filter(|w| !w.is_empty()) {
                let nf = crate::normal_form::normalize(&w);
                let key = nf.psi().unwrap();
                let k = key.i_in.len();
                let m = matrix_block(&Element::monomial(&w), k).unwrap();
                assert_eq!(m.nnz(), 1, "{w}");
                let (_, p) = m.entries().next().unwrap();
                assert_eq!(p.as_signed_power().map(|x| x.1), Some(key.ell as u32), "{w}");
                if k > 1 {
                    assert_eq!(matrix_block(&Element::monomial(&w), k - 1).unwrap().nnz(), 0);
                }
            }
        }
    }
}
