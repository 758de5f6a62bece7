//! Property suites over all small cases, shared by `antl verify` and the
//! acceptance tests. Every check returns `Err(description)` on the first
//! counterexample.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use antl_core::center::{
    basis_word, central_generator, e_word_candidates, enumerate_basis, factorize, fntl_dimension, projector_monomial,
};
use antl_core::embed::{embed_config, embed_element, embed_word, relation_words};
use antl_core::fock::{matrix_block, representation_coordinates};
use antl_core::linalg::{Interner, RowReducer};
use antl_core::normal_form::{normalize, reconstruct};
use antl_core::search::{canonical_monomials, nonzero_words};
use antl_core::{BasisLabel, Config, Element, NormalForm, QPoly, Rank, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core_err(e: antl_core::Error) -> String {
    e.to_string()
}

/// A sum of a few random monomials with small coefficients.
pub fn random_element(rng: &mut impl Rng, rank: Rank, terms: usize, max_len: usize) -> Element {
    let mut e = Element::zero(rank);
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rank.get())).collect();
        let w = Word::new(rank, letters).expect("indices in range");
        e = e.add(&Element::monomial(&w).scale(rng.gen_range(-2..=2))).expect("same rank");
    }
    e
}

fn proper_configs(rank: Rank) -> impl Iterator<Item = Config> {
    (1..rank.get()).flat_map(move |k| Config::all_with(rank, k))
}

fn all_configs(rank: Rank) -> impl Iterator<Item = Config> {
    (0..=rank.get()).flat_map(move |k| Config::all_with(rank, k))
}

/// The defining relations are zero in the algebra and in the representation,
/// and commuting generators act compatibly.
pub fn relations(rank: Rank) -> Outcome {
    let n = rank.get();
    for i in 0..n {
        let s = rank.succ(i);
        for letters in [vec![i, i], vec![i, s, i], vec![s, i, s]] {
            let w = Word::new(rank, letters).map_err(core_err)?;
            ensure(!w.is_nonzero() && normalize(&w).is_zero(), || format!("[{w}] is not zero"))?;
            let e = Element::monomial(&w);
            for k in 0..=n {
                let m = matrix_block(&e, k).map_err(core_err)?;
                let raw = all_configs(rank)
                    .filter(|c| c.len() == k)
                    .any(|c| antl_core::fock::act_word(&w, &c).ok().flatten().is_some());
                ensure(m.nnz() == 0 && !raw, || format!("[{w}] acts nontrivially on {k} particles"))?;
            }
        }
        for j in 0..n {
            if rank.commute(i, j) {
                let a = Word::new(rank, vec![i, j]).map_err(core_err)?;
                let b = Word::new(rank, vec![j, i]).map_err(core_err)?;
                ensure(normalize(&a) == normalize(&b), || format!("[{a}] and [{b}] differ"))?;
                for c in all_configs(rank) {
                    let x = antl_core::fock::act_word(&a, &c).map_err(core_err)?;
                    let y = antl_core::fock::act_word(&b, &c).map_err(core_err)?;
                    ensure(x == y, || format!("[{a}] and [{b}] act differently on {c}"))?;
                }
            }
        }
    }
    Ok(())
}

/// `a(Î)` fixes `I` with scalar `(-1)^{k-1} q` and kills every other configuration.
pub fn projector_action(rank: Rank) -> Outcome {
    for i in proper_configs(rank) {
        let w = projector_monomial(&i).map_err(core_err)?;
        let sign = if i.len() % 2 == 1 { 1 } else { -1 };
        for c in all_configs(rank) {
            let got = antl_core::fock::act_word(&w, &c).map_err(core_err)?;
            let expected = (c == i).then(|| (QPoly::monomial(sign, 1), i));
            ensure(got == expected, || format!("a({i}) = [{w}] on {c} gives {got:?}"))?;
        }
    }
    Ok(())
}

/// Centrality, orthogonality, non-nilpotence up to `max_power`, and the
/// central character of each `t_k`.
pub fn central_generators(rank: Rank, max_power: u32) -> Outcome {
    let n = rank.get();
    let ts: Vec<Element> = (1..n).map(|k| central_generator(k, rank)).collect::<Result<_, _>>().map_err(core_err)?;
    for (a, ta) in ts.iter().enumerate() {
        ensure(ta.is_central(), || format!("t_{} is not central", a + 1))?;
        let chi = ta.central_character().map_err(core_err)?;
        let expected: Vec<QPoly> = (0..n - 1).map(|b| if a == b { QPoly::q() } else { QPoly::zero() }).collect();
        ensure(chi == expected, || format!("t_{} has character {chi:?}", a + 1))?;
        for (b, tb) in ts.iter().enumerate() {
            if a != b {
                let p = ta.mul(tb).map_err(core_err)?;
                ensure(p.is_zero(), || format!("t_{} t_{} = {p}", a + 1, b + 1))?;
            }
        }
        let mut power = ta.clone();
        for m in 1..=max_power {
            ensure(!power.is_zero(), || format!("t_{}^{m} = 0", a + 1))?;
            power = power.mul(ta).map_err(core_err)?;
        }
    }
    Ok(())
}

/// `normalize` is constant along commutation moves, `ψ` is injective on the
/// normal forms of nonzero words of length `<= max_len`, and `reconstruct`
/// inverts it.
pub fn normal_forms(rank: Rank, max_len: usize) -> Outcome {
    let mut by_key: BTreeMap<_, NormalForm> = BTreeMap::new();
    for w in nonzero_words(rank, max_len).filter(|w| !w.is_empty()) {
        let nf = normalize(&w);
        for moved in w.commutation_moves() {
            ensure(normalize(&moved) == nf, || format!("[{w}] and [{moved}] normalize differently"))?;
        }
        let lift = nf.integral_lift().map_err(core_err)?;
        ensure(lift.satisfies_end_inequalities(), || format!("lift of [{w}] violates the end inequalities"))?;
        let key = nf.psi().map_err(core_err)?;
        let back = reconstruct(&key, rank).map_err(|e| format!("reconstruct of [{w}]: {e}"))?;
        ensure(back == nf, || format!("reconstruct of [{w}] gives {back}"))?;
        if let Some(other) = by_key.insert(key, nf.clone()) {
            ensure(other == nf, || format!("psi collision: {other} and {nf}"))?;
        }
    }
    Ok(())
}

/// Distinct canonical monomials of length `<= max_len`, together with the
/// identity, have linearly independent representation matrices.
pub fn faithfulness(rank: Rank, max_len: usize) -> Outcome {
    let all: Vec<usize> = (0..rank.get()).collect();
    let monomials = canonical_monomials(rank, max_len, &all);
    let mut columns = Interner::new();
    let mut reducer = RowReducer::new();
    for nf in &monomials {
        let w = nf.canonical_word().map_err(core_err)?;
        let coords = representation_coordinates(&Element::monomial(&w)).map_err(core_err)?;
        let row: Vec<(usize, i64)> = coords.into_iter().map(|(key, c)| (columns.id(key), c)).collect();
        ensure(reducer.insert_integer(row), || format!("the matrices of [{w}] depend on earlier monomials"))?;
    }
    ensure(reducer.rank() == monomials.len(), || "rank deficit".into())
}

/// Matrix blocks of products are products of matrix blocks.
pub fn representation_homomorphism(rank: Rank, pairs: usize, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..pairs {
        let x = random_element(&mut rng, rank, 3, 2 * rank.get());
        let y = random_element(&mut rng, rank, 3, 2 * rank.get());
        let xy = x.mul(&y).map_err(core_err)?;
        for k in 0..=rank.get() {
            let lhs = matrix_block(&xy, k).map_err(core_err)?;
            let rhs = matrix_block(&x, k).and_then(|m| m.mul(&matrix_block(&y, k)?)).map_err(core_err)?;
            ensure(lhs == rhs, || format!("block {k} of ({x})·({y}) is not multiplicative"))?;
        }
    }
    Ok(())
}

/// `factorize` inverts `enumerate_basis`.
pub fn basis_round_trip(rank: Rank, ell_max: usize) -> Outcome {
    let basis = enumerate_basis(rank, ell_max).map_err(core_err)?;
    let mut seen = BTreeSet::new();
    for (label, w) in &basis {
        ensure(seen.insert(normalize(w)), || format!("{label} repeats the word [{w}]"))?;
        let back = factorize(w).map_err(|e| format!("factorize [{w}]: {e}"))?;
        ensure(back == *label, || format!("[{w}] factorizes as {back}, expected {label}"))?;
    }
    Ok(())
}

/// The basis words are exactly the monomials whose power of `q` exceeds the
/// least one attained for the same `(J, I)` by at most `ell_max`.
///
/// The grouping uses only the representation: `J` is the smallest
/// configuration the monomial acts on, `I` its image and `q^L` the scalar.
pub fn basis_coverage(rank: Rank, ell_max: usize) -> Outcome {
    let n = rank.get();
    // generous: every strand of e_IJ is shorter than two turns of the circle,
    // and each factor of p_k adds one more turn
    let max_len = (ell_max + 2 * n) * n;
    let all: Vec<usize> = (0..n).collect();
    let mut groups: BTreeMap<(Config, Config), BTreeMap<u32, NormalForm>> = BTreeMap::new();
    for nf in canonical_monomials(rank, max_len, &all) {
        if matches!(nf, NormalForm::One(_)) {
            continue;
        }
        let w = nf.canonical_word().map_err(core_err)?;
        let e = Element::monomial(&w);
        let (k, m) = (1..n)
            .map(|k| (k, matrix_block(&e, k)))
            .find(|(_, m)| m.as_ref().map_or(true, |m| m.nnz() > 0))
            .ok_or_else(|| format!("[{w}] acts by zero on all proper blocks"))?;
        let m = m.map_err(core_err)?;
        ensure(m.nnz() == 1, || format!("[{w}] has {} entries on {k} particles", m.nnz()))?;
        let ((i, j), p) = m.entries().next().expect("one entry");
        let (_, power) = p.as_signed_power().ok_or_else(|| format!("[{w}] has entry {p}"))?;
        let clash = groups.entry((*j, *i)).or_default().insert(power, nf.clone());
        ensure(clash.is_none(), || format!("two monomials send {j} to q^{power}·{i}"))?;
    }
    let mut reachable = BTreeSet::new();
    for ((j, i), by_power) in &groups {
        let powers: Vec<u32> = by_power.keys().copied().collect();
        let lowest = powers[0];
        ensure(powers.iter().enumerate().all(|(p, &e)| e == lowest + p as u32), || {
            format!("q-powers from {j} to {i} are not consecutive: {powers:?}")
        })?;
        for (&e, nf) in by_power {
            if (e - lowest) as usize <= ell_max {
                reachable.insert(nf.clone());
            }
        }
    }
    let enumerated: BTreeSet<NormalForm> =
        enumerate_basis(rank, ell_max).map_err(core_err)?.iter().map(|(_, w)| normalize(w)).collect();
    ensure(enumerated == reachable, || {
        format!("{} enumerated vs {} reachable monomials", enumerated.len(), reachable.len())
    })
}

/// Every nonzero word of length `<= max_len` factorizes over the basis.
pub fn factorization(rank: Rank, max_len: usize) -> Outcome {
    for nf in canonical_monomials(rank, max_len, &(0..rank.get()).collect::<Vec<_>>()) {
        if let NormalForm::Blocks(_) = nf {
            let w = nf.canonical_word().map_err(core_err)?;
            let label = factorize(&w).map_err(|e| format!("factorize [{w}]: {e}"))?;
            let back = basis_word(&label).map_err(core_err)?;
            ensure(normalize(&back) == nf, || format!("{label} does not rebuild [{w}]"))?;
        }
    }
    Ok(())
}

/// The minimal routing `J → I` is unique.
pub fn e_word_uniqueness(rank: Rank) -> Outcome {
    for i in proper_configs(rank) {
        for j in Config::all_with(rank, i.len()) {
            let cands = e_word_candidates(&i, &j).map_err(core_err)?;
            let best = cands.iter().map(|r| r.crossings).min().ok_or_else(|| format!("no routing {j} -> {i}"))?;
            let ties = cands.iter().filter(|r| r.crossings == best).count();
            ensure(ties == 1, || format!("{ties} minimal routings {j} -> {i}"))?;
        }
    }
    Ok(())
}

pub fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

pub fn finite_dimension(rank: Rank) -> Outcome {
    let (got, want) = (fntl_dimension(rank), catalan(rank.get()));
    ensure(got == want, || format!("finite part has dimension {got}, expected {want}"))
}

/// The images of the relations involving `a_m` (and of all others) vanish.
pub fn embedding_relations(rank: Rank) -> Outcome {
    for m in 0..rank.get() {
        for w in relation_words(m, rank).map_err(core_err)? {
            let image = embed_word(m, &w).map_err(core_err)?;
            ensure(normalize(&image).is_zero(), || format!("eps_{m}([{w}]) = [{image}] is nonzero"))?;
        }
    }
    Ok(())
}

pub fn embedding_multiplicative(rank: Rank, pairs: usize, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for m in 0..rank.get() {
        ensure(embed_element(m, &Element::one(rank)).map_err(core_err)?.to_string() == "+1·[]", || {
            format!("eps_{m} is not unital")
        })?;
        for _ in 0..pairs {
            let x = random_element(&mut rng, rank, 3, 2 * rank.get());
            let y = random_element(&mut rng, rank, 3, 2 * rank.get());
            let lhs = embed_element(m, &x.mul(&y).map_err(core_err)?).map_err(core_err)?;
            let rhs = embed_element(m, &x).and_then(|a| a.mul(&embed_element(m, &y)?)).map_err(core_err)?;
            ensure(lhs == rhs, || format!("eps_{m} is not multiplicative on ({x})·({y})"))?;
        }
    }
    Ok(())
}

/// Distinct canonical monomials of length `<= max_len` have distinct, nonzero images.
pub fn embedding_injective(rank: Rank, max_len: usize) -> Outcome {
    let all: Vec<usize> = (0..rank.get()).collect();
    let monomials = canonical_monomials(rank, max_len, &all);
    for m in 0..rank.get() {
        let mut images = BTreeSet::new();
        for nf in &monomials {
            let image = normalize(&embed_word(m, &nf.canonical_word().map_err(core_err)?).map_err(core_err)?);
            ensure(!image.is_zero(), || format!("eps_{m} kills {nf}"))?;
            ensure(images.insert(image), || format!("eps_{m} identifies {nf} with another monomial"))?;
        }
    }
    Ok(())
}

/// Basis words map to basis words with relabelled configurations.
pub fn embedding_basis(rank: Rank, ell_max: usize) -> Outcome {
    for m in 0..rank.get() {
        for (label, w) in enumerate_basis(rank, ell_max).map_err(core_err)? {
            let image = embed_word(m, &w).map_err(core_err)?;
            let expected = BasisLabel {
                i_out: embed_config(m, &label.i_out).map_err(core_err)?,
                i_in: embed_config(m, &label.i_in).map_err(core_err)?,
                ..label
            };
            let got = factorize(&image).map_err(core_err)?;
            ensure(got == expected, || format!("eps_{m}({label}) is {got}, expected {expected}"))?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Center,
    Faithfulness,
    Psi,
    Basis,
    Embeddings,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Relations, Suite::Center, Suite::Faithfulness, Suite::Psi, Suite::Basis, Suite::Embeddings];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Center => "center",
            Suite::Faithfulness => "faithfulness",
            Suite::Psi => "psi",
            Suite::Basis => "basis",
            Suite::Embeddings => "embeddings",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub outcome: Outcome,
}

/// Enumeration limits for the suites.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub max_len: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_len: 8, samples: 50, seed: 1 }
    }
}

type NamedCheck = (&'static str, Box<dyn Fn() -> Outcome>);

pub fn run(suite: Suite, rank: Rank, b: Bounds) -> Vec<Check> {
    let checks: Vec<NamedCheck> = match suite {
        Suite::Relations => vec![("defining relations", Box::new(move || relations(rank)))],
        Suite::Center => vec![
            ("projector action", Box::new(move || projector_action(rank))),
            ("central generators", Box::new(move || central_generators(rank, 5))),
        ],
        Suite::Faithfulness => vec![
            ("linear independence", Box::new(move || faithfulness(rank, b.max_len))),
            ("homomorphism", Box::new(move || representation_homomorphism(rank, b.samples, b.seed))),
        ],
        Suite::Psi => vec![("normal forms and psi", Box::new(move || normal_forms(rank, b.max_len)))],
        Suite::Basis => vec![
            ("e-word uniqueness", Box::new(move || e_word_uniqueness(rank))),
            ("basis round trip", Box::new(move || basis_round_trip(rank, 1))),
            ("basis coverage", Box::new(move || basis_coverage(rank, 1))),
            ("factorization", Box::new(move || factorization(rank, b.max_len))),
            ("finite dimension", Box::new(move || finite_dimension(rank))),
        ],
        Suite::Embeddings => vec![
            ("relation images", Box::new(move || embedding_relations(rank))),
            ("multiplicative", Box::new(move || embedding_multiplicative(rank, b.samples, b.seed))),
            ("injective", Box::new(move || embedding_injective(rank, b.max_len.min(6)))),
            ("basis to basis", Box::new(move || embedding_basis(rank, 1))),
        ],
    };
    checks.into_iter().map(|(name, f)| Check { suite, name, outcome: f() }).collect()
}
