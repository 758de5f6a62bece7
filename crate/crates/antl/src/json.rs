//! JSON encodings. Keys and entries are sorted so output is byte-stable.

use antl_core::center::BasisLabel;
use antl_core::{Config, Element, NormalForm, QPoly, Rank, RepMatrix, Word};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixEntry {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
    /// `[exponent, coefficient]` pairs, increasing exponent
    pub poly: Vec<(u32, i64)>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<MatrixEntry>,
}

pub fn poly_terms(p: &QPoly) -> Vec<(u32, i64)> {
    p.terms().collect()
}

pub fn matrix_to_json(m: &RepMatrix) -> MatrixJson {
    let mut entries: Vec<MatrixEntry> =
        m.entries().map(|((r, c), p)| MatrixEntry { row: r.labels(), col: c.labels(), poly: poly_terms(p) }).collect();
    entries.sort_by(|a, b| (&a.row, &a.col).cmp(&(&b.row, &b.col)));
    MatrixJson { n: m.rank().get(), k: m.k(), entries }
}

pub fn matrix_from_json(j: &MatrixJson) -> antl_core::Result<RepMatrix> {
    let rank = Rank::new(j.n)?;
    let mut m = RepMatrix::zero(rank, j.k)?;
    for e in &j.entries {
        let row = Config::from_labels(rank, e.row.iter().copied())?;
        let col = Config::from_labels(rank, e.col.iter().copied())?;
        m.add_entry(row, col, &QPoly::from_terms(e.poly.iter().copied()))?;
    }
    Ok(m)
}

pub fn word(w: &Word) -> Value {
    json!(w.letters())
}

pub fn normal_form(nf: &NormalForm) -> Value {
    let blocks: Vec<Vec<usize>> =
        nf.blocks().map(|b| b.left_to_right().map(|blk| blk.to_vec()).collect()).unwrap_or_default();
    let psi = nf.psi().ok().map(|k| {
        json!({
            "i_in": k.i_in.iter().collect::<Vec<_>>(),
            "i_out": k.i_out.iter().collect::<Vec<_>>(),
            "ell": k.ell,
        })
    });
    json!({
        "n": nf.rank().get(),
        "text": nf.to_string(),
        "zero": nf.is_zero(),
        "blocks": blocks,
        "word": nf.canonical_word().ok().map(|w| w.letters().to_vec()),
        "psi": psi,
    })
}

pub fn element(e: &Element) -> Value {
    let terms: Vec<Value> = e.sorted_terms().iter().map(|(w, c)| json!({"word": w.letters(), "coef": c})).collect();
    json!({"n": e.rank().get(), "text": e.to_string(), "terms": terms})
}

pub fn label(l: &BasisLabel) -> Value {
    json!({
        "k": l.k,
        "ell": l.ell,
        "i_out": l.i_out.labels(),
        "i_in": l.i_in.labels(),
        "text": l.to_string(),
    })
}

pub fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}
