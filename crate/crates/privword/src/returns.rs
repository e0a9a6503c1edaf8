//! Complete return (closed) factors and the C-poor characterizations.
//!
//! A factor is a complete return factor when it is ε, a single letter, or a
//! complete first return to some nonempty word; ε and the letters are counted
//! by convention. Every word has at least |w| + 1 of them, and the words
//! attaining the minimum (the C-poor words) are exactly those whose complete
//! return factors are all privileged.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::privileged::priv_flags;
use crate::words::{occurrences_slice, prefix_function, FactorSet, Word};

/// Closed-factor inventory of one word.
#[derive(Debug, Clone)]
pub struct ClosedFactorReport {
    pub word: Word,
    pub closed_factors: FactorSet,
    pub count: usize,
    pub is_c_poor: bool,
}

/// Whether `x` is ε, a letter, or a complete first return to some nonempty
/// word. Only the longest proper border needs testing: occurrence counts are
/// monotone nonincreasing in border length and every border occurs at least
/// twice, so the longest border attains the minimum count.
pub(crate) fn is_closed_slice(x: &[u8]) -> bool {
    if x.len() <= 1 {
        return true;
    }
    let b = *prefix_function(x).last().unwrap();
    b > 0 && occurrences_slice(&x[..b], x).len() == 2
}

/// All complete return factors of `w`, their count and the C-poor verdict.
pub fn complete_return_factors(w: &Word) -> ClosedFactorReport {
    let mut closed = FactorSet::new(Arc::clone(w.alphabet()));
    closed.insert_slice(&[]);
    let s = w.symbols();
    for start in 0..s.len() {
        for end in start + 1..=s.len() {
            let f = &s[start..end];
            if is_closed_slice(f) {
                closed.insert_slice(f);
            }
        }
    }
    let count = closed.len();
    ClosedFactorReport { word: w.clone(), closed_factors: closed, count, is_c_poor: count == w.len() + 1 }
}

/// Whether `w` attains the minimum number |w| + 1 of complete return factors.
pub fn is_c_poor(w: &Word) -> bool {
    complete_return_factors(w).count == w.len() + 1
}

/// C-poor test via two-letter returns: `w` is C-poor iff no factor is a
/// complete first return to xy for distinct letters x and y. On failure the
/// canonically smallest violating factor is returned.
pub fn c_poor_via_xy(w: &Word) -> (bool, Option<Word>) {
    let s = w.symbols();
    let mut witness: Option<Word> = None;
    for start in 0..s.len() {
        // returns to xy with x != y cannot overlap, so they have length >= 4
        for end in start + 4..=s.len() {
            let f = &s[start..end];
            if f[0] != f[1] && f.ends_with(&f[..2]) && occurrences_slice(&f[..2], f).len() == 2 {
                let cand = w.subword(f);
                if witness.as_ref().is_none_or(|best| cand < *best) {
                    witness = Some(cand);
                }
            }
        }
    }
    (witness.is_none(), witness)
}

/// Binary-only C-poor test: `w` is C-poor iff some conjugate of `w` is of the
/// form 0^a 1^b.
pub fn binary_c_poor_via_conjugate(w: &Word) -> Result<bool> {
    if w.alphabet().size() > 2 {
        return Err(Error::NotBinary);
    }
    let s = w.symbols();
    if s.len() <= 1 {
        return Ok(true);
    }
    let sorted_form = (0..s.len()).any(|i| {
        (0..s.len() - 1).all(|k| s[(i + k) % s.len()] <= s[(i + k + 1) % s.len()])
    });
    Ok(sorted_form)
}

/// Whether every complete return factor of `w` is privileged (equivalent to
/// C-poorness).
pub fn all_returns_privileged(w: &Word) -> bool {
    complete_return_factors(w)
        .closed_factors
        .iter()
        .all(|f| f.len() <= 1 || *priv_flags(f.symbols()).last().unwrap())
}
