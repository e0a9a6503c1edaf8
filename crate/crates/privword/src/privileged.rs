//! Deciding privilegedness, enumerating privileged factors and the
//! privileged complexity function A_n.
//!
//! A word is privileged if it is empty, a single letter, or a complete first
//! return to a shorter privileged word. The decider below leans on two facts:
//! the longest proper privileged prefix of a privileged word is its longest
//! proper privileged border, and every border of a privileged word is itself
//! privileged. So a word of length ≥ 2 is privileged iff its longest
//! privileged proper border is nonempty and occurs in it exactly twice.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::profile::{ComplexityProfile, ProfileKind};
use crate::words::{occurrences_slice, prefix_function, FactorSet, Word};

/// Privileged flags for every prefix of `w`, plus the longest privileged
/// proper border of each prefix, computed in one left-to-right pass.
#[derive(Debug, Clone)]
pub struct PrivilegedPrefixTable {
    word: Word,
    is_priv: Vec<bool>,
    longest_priv_border: Vec<usize>,
}

impl PrivilegedPrefixTable {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `flags()[l]` tells whether the prefix of length l is privileged,
    /// for l = 0..=|w|.
    pub fn flags(&self) -> &[bool] {
        &self.is_priv
    }

    pub fn is_privileged_prefix(&self, len: usize) -> bool {
        self.is_priv[len]
    }

    /// Length of the longest privileged proper border of the prefix of
    /// length l (0 when only ε qualifies).
    pub fn longest_privileged_border(&self, len: usize) -> usize {
        self.longest_priv_border[len]
    }
}

/// Single pass over `s` maintaining, for every border candidate, its
/// occurrence count in the scanned prefix. `flags[l]` is the privileged
/// flag of `s[..l]`. Worst case O(n · chain-depth).
pub(crate) fn priv_flags(s: &[u8]) -> Vec<bool> {
    priv_flags_with_borders(s).0
}

pub(crate) fn priv_flags_with_borders(s: &[u8]) -> (Vec<bool>, Vec<usize>) {
    let n = s.len();
    let mut is_priv = vec![false; n + 1];
    let mut border = vec![0usize; n + 1];
    is_priv[0] = true;
    if n == 0 {
        return (is_priv, border);
    }
    let pi = prefix_function(s);
    // occ[v] = occurrences of the prefix of length v in the scanned prefix
    let mut occ = vec![0usize; n + 1];
    for j in 1..=n {
        // every border of s[..j] (including j itself) ends at position j
        let mut v = j;
        while v > 0 {
            occ[v] += 1;
            v = pi[v - 1];
        }
        if j == 1 {
            is_priv[1] = true;
            continue;
        }
        // longest privileged proper border; occurrence counts are monotone
        // nonincreasing in border length, so testing it alone suffices
        let mut b = pi[j - 1];
        while b > 0 && !is_priv[b] {
            b = pi[b - 1];
        }
        border[j] = b;
        is_priv[j] = b > 0 && occ[b] == 2;
    }
    (is_priv, border)
}

/// Whether `w` is privileged.
pub fn is_privileged(w: &Word) -> bool {
    let s = w.symbols();
    if s.len() <= 1 {
        return true;
    }
    *priv_flags(s).last().unwrap()
}

/// Privileged flags (and longest privileged borders) of every prefix of `w`.
pub fn privileged_prefix_table(w: &Word) -> PrivilegedPrefixTable {
    let (is_priv, longest_priv_border) = priv_flags_with_borders(w.symbols());
    PrivilegedPrefixTable { word: w.clone(), is_priv, longest_priv_border }
}

/// All distinct privileged factors of `w`, including ε. Every word has
/// exactly |w| + 1 of them.
pub fn privileged_factors(w: &Word) -> FactorSet {
    let mut fs = FactorSet::new(Arc::clone(w.alphabet()));
    fs.insert_slice(&[]);
    let s = w.symbols();
    for start in 0..s.len() {
        let flags = priv_flags(&s[start..]);
        for (len, &flag) in flags.iter().enumerate().skip(1) {
            if flag {
                fs.insert_slice(&s[start..start + len]);
            }
        }
    }
    fs
}

/// The unique privileged factor introduced at position `i` of `w`: the
/// longest privileged suffix of `w[1,i]` that is unioccurrent in `w[1,i]`.
pub fn introduced_privileged_factor(w: &Word, i: usize) -> Result<Word> {
    if i < 1 || i > w.len() {
        return Err(Error::PositionOutOfRange { pos: i, len: w.len() });
    }
    let prefix = &w.symbols()[..i];
    for len in (1..=i).rev() {
        let u = &prefix[i - len..];
        if *priv_flags(u).last().unwrap() && occurrences_slice(u, prefix).len() == 1 {
            return Ok(w.subword(u));
        }
    }
    unreachable!("every position introduces exactly one new privileged factor");
}

/// The privileged complexity profile A_n(w) for n = 0..=n_max.
pub fn privileged_complexity(w: &Word, n_max: usize) -> ComplexityProfile {
    let counts = crate::qcomplexity::count_per_length(w.symbols(), n_max, |f| {
        f.len() <= 1 || *priv_flags(f).last().unwrap()
    });
    ComplexityProfile::exact_rows(ProfileKind::Privileged, counts)
}
