//! Slow reference implementations and exhaustive small-word corpora.
//!
//! These transcribe the defining recursions literally and scan occurrences
//! quadratically, sharing nothing with the fast paths; they exist purely as
//! independent ground truth for the test suites.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{Alphabet, FactorSet, Word};

fn scan_occurrence_count(u: &[u8], w: &[u8]) -> usize {
    if u.is_empty() || u.len() > w.len() {
        return 0;
    }
    (0..=w.len() - u.len()).filter(|&i| &w[i..i + u.len()] == u).count()
}

fn scan_is_cfr(x: &[u8], u: &[u8]) -> bool {
    x.starts_with(u) && x.ends_with(u) && scan_occurrence_count(u, x) == 2
}

pub(crate) fn naive_priv_slice(s: &[u8]) -> bool {
    let n = s.len();
    // memoized over the prefixes; every candidate return word is a prefix
    let mut memo = vec![false; n + 1];
    memo[0] = true;
    for l in 1..=n {
        memo[l] = l == 1 || (1..l).any(|k| memo[k] && scan_is_cfr(&s[..l], &s[..k]));
    }
    memo[n]
}

/// Literal transcription of the recursive definition: `w` is privileged if it
/// is empty, a letter, or a complete first return to a shorter privileged word.
pub fn naive_is_privileged(w: &Word) -> bool {
    naive_priv_slice(w.symbols())
}

/// Literal closed-factor test: some nonempty border occurs exactly twice.
/// All borders are tried, not just the longest.
pub fn naive_closed(w: &Word) -> bool {
    let s = w.symbols();
    if s.len() <= 1 {
        return true;
    }
    (1..s.len()).any(|b| s[..b] == s[s.len() - b..] && scan_occurrence_count(&s[..b], s) == 2)
}

/// All distinct factors of `w` (including ε) passing `pred`, by direct
/// quadratic enumeration.
pub fn naive_factor_filter(w: &Word, pred: impl Fn(&Word) -> bool) -> FactorSet {
    let mut fs = FactorSet::new(Arc::clone(w.alphabet()));
    let s = w.symbols();
    let eps = Word::empty(Arc::clone(w.alphabet()));
    if pred(&eps) {
        fs.insert_slice(&[]);
    }
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            let f = w.subword(&s[i..j]);
            if pred(&f) {
                fs.insert(&f);
            }
        }
    }
    fs
}

pub const DEFAULT_CORPUS_BUDGET: u128 = 1 << 22;

/// Deterministic enumeration of every word over `alphabet` up to `max_len`,
/// in length-then-lexicographic order.
#[derive(Debug, Clone)]
pub struct Corpus {
    alphabet: Arc<Alphabet>,
    max_len: usize,
    total: u128,
}

impl Corpus {
    /// Exact number of words enumerated, Σ_{k ≤ max_len} |A|^k.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn iter(&self) -> CorpusIter {
        CorpusIter { corpus: self.clone(), len: 0, odometer: Vec::new(), done: false }
    }
}

impl IntoIterator for Corpus {
    type Item = Word;
    type IntoIter = CorpusIter;

    fn into_iter(self) -> CorpusIter {
        self.iter()
    }
}

pub struct CorpusIter {
    corpus: Corpus,
    len: usize,
    odometer: Vec<u8>,
    done: bool,
}

impl Iterator for CorpusIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word =
            Word::from_symbols(Arc::clone(&self.corpus.alphabet), self.odometer.clone()).unwrap();
        // advance the odometer; on overflow move to the next length
        let base = self.corpus.alphabet.size() as u8;
        let mut i = self.len;
        loop {
            if i == 0 {
                self.len += 1;
                if self.len > self.corpus.max_len {
                    self.done = true;
                } else {
                    self.odometer = vec![0; self.len];
                }
                break;
            }
            i -= 1;
            if self.odometer[i] + 1 < base {
                self.odometer[i] += 1;
                self.odometer[i + 1..].fill(0);
                break;
            }
        }
        Some(word)
    }
}

/// Enumerates all words over `alphabet` of length ≤ `max_len`, refusing
/// corpora larger than [`DEFAULT_CORPUS_BUDGET`] words.
pub fn exhaustive_words(alphabet: &Arc<Alphabet>, max_len: usize) -> Result<Corpus> {
    exhaustive_words_with_budget(alphabet, max_len, DEFAULT_CORPUS_BUDGET)
}

pub fn exhaustive_words_with_budget(
    alphabet: &Arc<Alphabet>,
    max_len: usize,
    budget: u128,
) -> Result<Corpus> {
    let base = alphabet.size() as u128;
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..=max_len {
        total += pow;
        if total > budget {
            return Err(Error::CorpusBudgetExceeded { words: total, budget });
        }
        pow = pow.saturating_mul(base);
    }
    Ok(Corpus { alphabet: Arc::clone(alphabet), max_len, total })
}
