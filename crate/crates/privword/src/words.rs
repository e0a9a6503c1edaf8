//! Finite words over a small ordered alphabet and the factor primitives
//! everything else builds on: occurrences, borders, complete first returns,
//! reversal, conjugates and factor sets.
//!
//! Symbols are stored as `u8` indices into an [`Alphabet`]; textual I/O maps
//! single characters to symbols. Positions are 1-based throughout, matching
//! the usual `w[i,j]` convention for factors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of distinct symbols. The order is total and fixed; it is
/// used for canonical output ordering everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub fn new(chars: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = BTreeSet::new();
        for &c in &chars {
            if !seen.insert(c) {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Arc::new(Alphabet { chars }))
    }

    pub fn binary() -> Arc<Self> {
        Alphabet::new(['0', '1']).unwrap()
    }

    pub fn ternary() -> Arc<Self> {
        Alphabet::new(['0', '1', '2']).unwrap()
    }

    /// The sorted set of characters occurring in `text`.
    pub fn infer(text: &str) -> Result<Arc<Self>> {
        let chars: BTreeSet<char> = text.chars().collect();
        Alphabet::new(chars)
    }

    pub fn size(&self) -> usize {
        self.chars.len()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn char_of(&self, symbol: u8) -> char {
        self.chars[symbol as usize]
    }

    pub fn symbol_of(&self, c: char) -> Option<u8> {
        self.chars.iter().position(|&x| x == c).map(|i| i as u8)
    }
}

/// An immutable finite sequence of symbols over an [`Alphabet`].
///
/// The empty word is valid. Words order shortlex (by length, then by symbol
/// order), which is the canonical listing order for factor sets.
#[derive(Debug, Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    symbols: Vec<u8>,
}

impl Word {
    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Word { alphabet, symbols: Vec::new() }
    }

    pub fn from_symbols(alphabet: Arc<Alphabet>, symbols: Vec<u8>) -> Result<Self> {
        let size = alphabet.size();
        if let Some(&bad) = symbols.iter().find(|&&s| (s as usize) >= size) {
            return Err(Error::SymbolIndexOutOfRange { index: bad, size });
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn from_text(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            match alphabet.symbol_of(c) {
                Some(s) => symbols.push(s),
                None => return Err(Error::SymbolNotInAlphabet(c)),
            }
        }
        Ok(Word { alphabet: Arc::clone(alphabet), symbols })
    }

    /// Parses `text` over its own inferred alphabet (the sorted set of
    /// characters occurring in it). Empty input is rejected here because no
    /// alphabet can be inferred; use [`Word::empty`] for explicit ε.
    pub fn parse(text: &str) -> Result<Self> {
        let alphabet = Alphabet::infer(text)?;
        Word::from_text(text, &alphabet)
    }

    /// Re-encodes this word over another alphabet containing the same characters.
    pub fn recode(&self, alphabet: &Arc<Alphabet>) -> Result<Self> {
        Word::from_text(&self.to_string(), alphabet)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Number of occurrences of a single symbol, |w|_a.
    pub fn count_symbol(&self, symbol: u8) -> usize {
        self.symbols.iter().filter(|&&s| s == symbol).count()
    }

    /// The factor `w[i,j]` with 1-based inclusive endpoints.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i < 1 || j > self.len() || i > j + 1 {
            return Err(Error::PositionOutOfRange { pos: j, len: self.len() });
        }
        Ok(self.subword(&self.symbols[i - 1..j]))
    }

    pub(crate) fn subword(&self, symbols: &[u8]) -> Word {
        Word { alphabet: Arc::clone(&self.alphabet), symbols: symbols.to_vec() }
    }

    fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.same_alphabet(other) && self.symbols == other.symbols
    }
}

impl Eq for Word {}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
            .then_with(|| self.alphabet.chars().cmp(other.alphabet.chars()))
    }
}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.char_of(s))?;
        }
        Ok(())
    }
}

/// A deduplicated set of distinct factors, queryable by length and iterated
/// in canonical (length, then symbol) order.
#[derive(Debug, Clone)]
pub struct FactorSet {
    alphabet: Arc<Alphabet>,
    by_len: BTreeMap<usize, BTreeSet<Vec<u8>>>,
}

impl FactorSet {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        FactorSet { alphabet, by_len: BTreeMap::new() }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn insert_slice(&mut self, symbols: &[u8]) -> bool {
        self.by_len.entry(symbols.len()).or_default().insert(symbols.to_vec())
    }

    pub fn insert(&mut self, word: &Word) -> bool {
        self.insert_slice(word.symbols())
    }

    pub fn contains_slice(&self, symbols: &[u8]) -> bool {
        self.by_len.get(&symbols.len()).is_some_and(|s| s.contains(symbols))
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.contains_slice(word.symbols())
    }

    /// Total number of distinct factors stored.
    pub fn len(&self) -> usize {
        self.by_len.values().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_len.values().all(|s| s.is_empty())
    }

    pub fn count_of_length(&self, n: usize) -> usize {
        self.by_len.get(&n).map_or(0, |s| s.len())
    }

    pub fn of_length(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        self.by_len
            .get(&n)
            .into_iter()
            .flatten()
            .map(|symbols| Word { alphabet: Arc::clone(&self.alphabet), symbols: symbols.clone() })
    }

    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        self.by_len
            .values()
            .flatten()
            .map(|symbols| Word { alphabet: Arc::clone(&self.alphabet), symbols: symbols.clone() })
    }
}

impl PartialEq for FactorSet {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.by_len == other.by_len
    }
}

impl Eq for FactorSet {}

// ---------------------------------------------------------------------------
// slice-level primitives
// ---------------------------------------------------------------------------

/// Classical prefix function: `pi[i]` is the length of the longest proper
/// border of `s[..=i]`.
pub(crate) fn prefix_function(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// All (overlapping) occurrence start positions of `pattern` in `text`,
/// 1-based ascending. `pattern` must be nonempty.
pub(crate) fn occurrences_slice(pattern: &[u8], text: &[u8]) -> Vec<usize> {
    debug_assert!(!pattern.is_empty());
    let m = pattern.len();
    let pi = prefix_function(pattern);
    let mut out = Vec::new();
    let mut q = 0usize;
    for (i, &c) in text.iter().enumerate() {
        while q > 0 && (q == m || pattern[q] != c) {
            q = pi[q - 1];
        }
        if pattern[q] == c {
            q += 1;
        }
        if q == m {
            out.push(i + 2 - m);
            q = pi[q - 1];
        }
    }
    out
}

pub(crate) fn is_palindrome_slice(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// `x` is a complete first return to `u`: it starts and ends with `u` and
/// contains exactly two occurrences of `u`.
pub(crate) fn is_cfr_slice(x: &[u8], u: &[u8]) -> bool {
    debug_assert!(!u.is_empty());
    x.len() >= u.len()
        && x.starts_with(u)
        && x.ends_with(u)
        && occurrences_slice(u, x).len() == 2
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// All (overlapping) occurrence start positions of `pattern` in `text`,
/// 1-based ascending. The empty pattern is rejected; occurrence of ε is
/// handled separately by callers.
pub fn occurrences(pattern: &Word, text: &Word) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if !pattern.same_alphabet(text) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(occurrences_slice(pattern.symbols(), text.symbols()))
}

/// All proper border lengths of `w`, ascending. This is exactly the failure
/// function chain of `w`: 0 is listed for every nonempty word, |w| never is.
pub fn border_lengths(w: &Word) -> Vec<usize> {
    let s = w.symbols();
    if s.is_empty() {
        return Vec::new();
    }
    let pi = prefix_function(s);
    let mut out = vec![0usize];
    let mut b = pi[s.len() - 1];
    while b > 0 {
        out.push(b);
        b = pi[b - 1];
    }
    out.sort_unstable();
    out
}

/// Whether `x` is a complete first return to `u`.
pub fn is_complete_first_return(x: &Word, u: &Word) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if !x.same_alphabet(u) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(is_cfr_slice(x.symbols(), u.symbols()))
}

/// The mirror image of `w`.
pub fn reverse(w: &Word) -> Word {
    let mut symbols = w.symbols().to_vec();
    symbols.reverse();
    Word { alphabet: Arc::clone(w.alphabet()), symbols }
}

/// Whether `w` reads the same in both directions; ε is a palindrome.
pub fn is_palindrome(w: &Word) -> bool {
    is_palindrome_slice(w.symbols())
}

/// The set of conjugates (rotations) of `w`, deduplicated. conjugates(ε) = {ε}.
pub fn conjugates(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let s = w.symbols();
    if s.is_empty() {
        out.insert(w.clone());
        return out;
    }
    for i in 0..s.len() {
        let mut rot = Vec::with_capacity(s.len());
        rot.extend_from_slice(&s[i..]);
        rot.extend_from_slice(&s[..i]);
        out.insert(Word { alphabet: Arc::clone(w.alphabet()), symbols: rot });
    }
    out
}

/// The set of distinct factors of `w` of length `n`. For n = 0 this is {ε};
/// for n > |w| it is empty.
pub fn factors_of_length(w: &Word, n: usize) -> FactorSet {
    let mut fs = FactorSet::new(Arc::clone(w.alphabet()));
    let s = w.symbols();
    if n == 0 {
        fs.insert_slice(&[]);
        return fs;
    }
    if n > s.len() {
        return fs;
    }
    for window in s.windows(n) {
        fs.insert_slice(window);
    }
    fs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bw(text: &str) -> Word {
        Word::from_text(text, &Alphabet::binary()).unwrap()
    }

    fn naive_occurrences(u: &[u8], w: &[u8]) -> Vec<usize> {
        (0..w.len().saturating_sub(u.len() - 1))
            .filter(|&i| &w[i..i + u.len()] == u)
            .map(|i| i + 1)
            .collect()
    }

    #[test]
    fn occurrences_examples() {
        assert_eq!(occurrences(&bw("00"), &bw("000")).unwrap(), vec![1, 2]);
        assert_eq!(occurrences(&bw("0"), &bw("0110")).unwrap(), vec![1, 4]);
        assert_eq!(occurrences(&bw("110"), &bw("110110")).unwrap(), vec![1, 4]);
        assert_eq!(
            occurrences(&Word::empty(Alphabet::binary()), &bw("0")),
            Err(Error::EmptyPattern)
        );
    }

    #[test]
    fn occurrences_rejects_mixed_alphabets() {
        let t = Word::from_text("0", &Alphabet::ternary()).unwrap();
        assert_eq!(occurrences(&t, &bw("000")), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn border_examples() {
        assert_eq!(border_lengths(&bw("000")), vec![0, 1, 2]);
        assert_eq!(border_lengths(&bw("0110")), vec![0, 1]);
        assert_eq!(border_lengths(&bw("01")), vec![0]);
        assert_eq!(border_lengths(&Word::empty(Alphabet::binary())), Vec::<usize>::new());
    }

    #[test]
    fn complete_first_return_examples() {
        assert!(is_complete_first_return(&bw("000"), &bw("00")).unwrap());
        assert!(is_complete_first_return(&bw("0110"), &bw("0")).unwrap());
        assert!(!is_complete_first_return(&bw("010"), &bw("1")).unwrap());
        assert!(is_complete_first_return(&bw("00"), &Word::empty(Alphabet::binary())).is_err());
    }

    #[test]
    fn palindrome_examples() {
        assert!(is_palindrome(&bw("010")));
        assert!(!is_palindrome(&bw("00101100")));
        assert!(is_palindrome(&Word::empty(Alphabet::binary())));
        assert_eq!(reverse(&bw("011")), bw("110"));
    }

    #[test]
    fn conjugates_examples() {
        let set = conjugates(&bw("01"));
        assert_eq!(set.len(), 2);
        assert!(set.contains(&bw("01")) && set.contains(&bw("10")));
        assert_eq!(conjugates(&bw("00")).len(), 1);
        let set = conjugates(&bw("0011"));
        let expect: BTreeSet<Word> =
            ["0011", "0110", "1100", "1001"].iter().map(|t| bw(t)).collect();
        assert_eq!(set, expect);
        let eps = Word::empty(Alphabet::binary());
        assert_eq!(conjugates(&eps).len(), 1);
    }

    #[test]
    fn factors_of_length_examples() {
        let fs = factors_of_length(&bw("0110"), 2);
        let got: Vec<String> = fs.iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["01", "10", "11"]);
        assert_eq!(factors_of_length(&bw("0110"), 0).len(), 1);
        assert_eq!(factors_of_length(&bw("000"), 3).len(), 1);
        assert_eq!(factors_of_length(&bw("000"), 4).len(), 0);
    }

    #[test]
    fn word_text_round_trip() {
        let a = Alphabet::ternary();
        let w = Word::from_text("0120", &a).unwrap();
        assert_eq!(w.to_string(), "0120");
        assert_eq!(w.len(), 4);
        assert!(Word::from_text("013", &a).is_err());
        assert!(Alphabet::new(['0', '0']).is_err());
    }

    #[test]
    fn recode_across_alphabets() {
        // declared order matters: over "10" the symbol indices flip
        let flipped = Alphabet::new(['1', '0']).unwrap();
        let w = Word::from_text("0110", &flipped).unwrap();
        assert_eq!(w.symbols(), &[1, 0, 0, 1]);
        let standard = w.recode(&Alphabet::binary()).unwrap();
        assert_eq!(standard.symbols(), &[0, 1, 1, 0]);
        assert_eq!(standard.to_string(), "0110");
        assert!(w.recode(&Alphabet::new(['a', 'b']).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn occurrences_match_naive_scan(
            w in proptest::collection::vec(0u8..2, 0..14),
            u in proptest::collection::vec(0u8..2, 1..5),
        ) {
            prop_assert_eq!(occurrences_slice(&u, &w), naive_occurrences(&u, &w));
        }

        #[test]
        fn borders_are_direct_prefix_suffix_matches(
            w in proptest::collection::vec(0u8..3, 0..20),
        ) {
            let word = Word::from_symbols(Alphabet::ternary(), w.clone()).unwrap();
            let direct: Vec<usize> = (0..w.len())
                .filter(|&l| w[..l] == w[w.len() - l..])
                .collect();
            prop_assert_eq!(border_lengths(&word), direct);
        }

        #[test]
        fn factor_count_bound(
            w in proptest::collection::vec(0u8..2, 0..24),
            n in 0usize..25,
        ) {
            let word = Word::from_symbols(Alphabet::binary(), w.clone()).unwrap();
            let count = factors_of_length(&word, n).len();
            if n <= w.len() {
                let bound = (w.len() - n + 1).min(1usize << n.min(20));
                prop_assert!(count <= bound);
            } else {
                prop_assert_eq!(count, 0);
            }
        }

        #[test]
        fn cfr_implies_border(
            x in proptest::collection::vec(0u8..2, 1..14),
            l in 1usize..5,
        ) {
            prop_assume!(l <= x.len());
            let u = &x[..l];
            if is_cfr_slice(&x, u) {
                prop_assert!(x.ends_with(u));
            }
        }
    }
}
