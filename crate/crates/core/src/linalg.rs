//! Exact sparse Gaussian elimination over `ℚ`.

use alloc::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A sparse row: column index to nonzero value.
pub type SparseRow = BTreeMap<usize, BigRational>;

/// Incremental row echelon form.
///
/// Pivot rows are stored normalized (leading coefficient 1) and keyed by their
/// leading column. Inserting a row eliminates its leading entry against the
/// pivots until it either becomes zero or acquires a fresh leading column.
#[derive(Debug, Default, Clone)]
pub struct RowReducer {
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` when it was independent of the earlier rows.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, lead_val)) = row.iter().next() {
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let factor = lead_val.clone();
                    for (&c, v) in pivot {
                        let entry = row.entry(c).or_insert_with(BigRational::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / lead_val;
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    /// Convenience wrapper for rows with integer entries.
    pub fn insert_integer(&mut self, row: impl IntoIterator<Item = (usize, i64)>) -> bool {
        let mut sparse = SparseRow::new();
        for (c, v) in row {
            let e = sparse.entry(c).or_insert_with(BigRational::zero);
            *e += BigRational::from_integer(v.into());
        }
        self.insert(sparse)
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut r = RowReducer::new();
    rows.into_iter().for_each(|row| {
        r.insert(row);
    });
    r.rank()
}

/// Assigns consecutive column indices to arbitrary ordered keys.
#[derive(Debug, Clone)]
pub struct Interner<K: Ord> {
    ids: BTreeMap<K, usize>,
}

impl<K: Ord> Default for Interner<K> {
    fn default() -> Self {
        Interner { ids: BTreeMap::new() }
    }
}

impl<K: Ord> Interner<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn id(&mut self, key: K) -> usize {
        let next = self.ids.len();
        *self.ids.entry(key).or_insert(next)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}


#[cfg(test)]
mod tests {
    use super::tests_support::dense_rank;
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use rand::{Rng, SeedableRng};

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn small_examples() {
        let mut r = RowReducer::new();
        assert!(r.insert_integer([(0, 1), (1, 2)]));
        assert!(r.insert_integer([(0, 2), (1, 3)]));
        assert!(!r.insert_integer([(0, 5), (1, 7)]));
        assert!(!r.insert_integer([]));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn agrees_with_dense_elimination() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let dense: Vec<Vec<BigRational>> = (0..rows)
                .map(|_| (0..cols).map(|_| if rng.gen_bool(0.5) { q(0) } else { q(rng.gen_range(-3..4)) }).collect())
                .collect();
            let sparse = dense
                .iter()
                .map(|row| row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect());
            assert_eq!(rank(sparse), dense_rank(dense.clone()));
        }
    }

    #[test]
    fn interner_is_stable() {
        let mut i = Interner::new();
        assert_eq!(i.id(vec![3]), 0);
        assert_eq!(i.id(vec![1]), 1);
        assert_eq!(i.id(vec![3]), 0);
        assert_eq!(i.len(), 2);
    }
}
