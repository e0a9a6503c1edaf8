//! Palindromic factors, richness tests, and the bridge between richness and
//! the privileged/palindromic factor sets.
//!
//! A word is rich if it has the maximum possible number |w| + 1 of distinct
//! palindromic factors. Three independently computable tests are provided:
//! the count itself, the complete-first-return characterization, and set
//! equality of privileged and palindromic factors.

use std::sync::Arc;

use crate::privileged::privileged_factors;
use crate::profile::{ComplexityProfile, ProfileKind};
use crate::words::{is_palindrome_slice, occurrences_slice, FactorSet, Word};

/// Richness summary for one word, as reported by the analyzer.
#[derive(Debug, Clone)]
pub struct RichnessReport {
    pub word: Word,
    pub palindrome_count: usize,
    pub is_rich: bool,
    pub pri_equals_pal: bool,
    /// A factor witnessing failure: a complete first return to a palindrome
    /// that is not itself a palindrome, or an element of the symmetric
    /// difference of the privileged and palindromic factor sets.
    pub witness: Option<Word>,
}

/// Maximal palindromic radius around every center of `s` (2|s|−1 centers:
/// odd centers at each position, even centers between positions).
fn center_radii(s: &[u8]) -> (Vec<usize>, Vec<usize>) {
    let n = s.len();
    let mut odd = vec![0usize; n];
    let mut even = vec![0usize; n];
    // plain expansion; quadratic worst case, fine at desk scale
    for c in 0..n {
        let mut r = 0usize;
        while c >= r && c + r < n && s[c - r] == s[c + r] {
            r += 1;
        }
        odd[c] = r; // palindrome lengths 1, 3, .., 2r-1
        let mut r = 0usize;
        while c > r && c + r < n && s[c - r - 1] == s[c + r] {
            r += 1;
        }
        even[c] = r; // palindrome lengths 2, 4, .., 2r
    }
    (odd, even)
}

/// Length of the longest palindromic suffix of `s` (0 for ε).
pub(crate) fn longest_palindromic_suffix(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (odd, even) = center_radii(s);
    let mut best = 1;
    for c in 0..n {
        if c + odd[c] == n && odd[c] > 0 {
            best = best.max(2 * odd[c] - 1);
        }
        if c + even[c] == n && even[c] > 0 {
            best = best.max(2 * even[c]);
        }
    }
    best
}

/// All distinct palindromic factors of `w`, including ε.
pub fn palindromic_factors(w: &Word) -> FactorSet {
    let mut fs = FactorSet::new(Arc::clone(w.alphabet()));
    fs.insert_slice(&[]);
    let s = w.symbols();
    let (odd, even) = center_radii(s);
    for c in 0..s.len() {
        for r in 1..=odd[c] {
            fs.insert_slice(&s[c + 1 - r..c + r]);
        }
        for r in 1..=even[c] {
            fs.insert_slice(&s[c - r..c + r]);
        }
    }
    fs
}

/// The palindromic complexity profile P_n(w) for n = 0..=n_max.
pub fn palindromic_complexity(w: &Word, n_max: usize) -> ComplexityProfile {
    let counts = crate::qcomplexity::count_per_length(w.symbols(), n_max, is_palindrome_slice);
    ComplexityProfile::exact_rows(ProfileKind::Palindromic, counts)
}

/// Whether `w` has exactly |w| + 1 distinct palindromic factors.
pub fn is_rich(w: &Word) -> bool {
    palindromic_factors(w).len() == w.len() + 1
}

/// Richness via complete first returns: `w` is rich iff every factor that is
/// a complete first return to a palindrome is itself a palindrome. On failure
/// the shortest violating factor is returned.
pub fn rich_via_returns(w: &Word) -> (bool, Option<Word>) {
    let s = w.symbols();
    let mut witness: Option<Word> = None;
    for p in palindromic_factors(w).iter() {
        if p.is_empty() {
            continue;
        }
        let occ = occurrences_slice(p.symbols(), s);
        for pair in occ.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let ret = &s[a - 1..b - 1 + p.len()];
            if !is_palindrome_slice(ret) {
                let cand = w.subword(ret);
                if witness.as_ref().is_none_or(|best| cand < *best) {
                    witness = Some(cand);
                }
            }
        }
    }
    (witness.is_none(), witness)
}

/// Set equality of the privileged and palindromic factor sets, which holds
/// exactly for rich words.
pub fn pri_equals_pal(w: &Word) -> bool {
    privileged_factors(w) == palindromic_factors(w)
}

/// Runs all richness tests on `w` and assembles the report.
pub fn richness_report(w: &Word) -> RichnessReport {
    let pal = palindromic_factors(w);
    let pri = privileged_factors(w);
    let palindrome_count = pal.len();
    let is_rich = palindrome_count == w.len() + 1;
    let pri_equals_pal = pri == pal;
    let witness = if is_rich {
        None
    } else {
        rich_via_returns(w).1.or_else(|| {
            pri.iter().find(|f| !pal.contains(f)).or_else(|| pal.iter().find(|f| !pri.contains(f)))
        })
    };
    RichnessReport { word: w.clone(), palindrome_count, is_rich, pri_equals_pal, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{is_palindrome, Alphabet};

    fn bw(text: &str) -> Word {
        Word::from_text(text, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn palindromic_factor_examples() {
        assert_eq!(palindromic_factors(&Word::parse("0120").unwrap()).len(), 4);
        let fs = palindromic_factors(&bw("000"));
        let got: Vec<String> = fs.iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["", "0", "00", "000"]);
        assert!(palindromic_factors(&bw("11010011")).len() < 9);
    }

    #[test]
    fn complexity_examples() {
        let p = palindromic_complexity(&bw("010"), 3);
        assert_eq!(p.counts, vec![1, 2, 0, 1]);
        let p = palindromic_complexity(&bw("0110"), 4);
        assert_eq!(p.counts, vec![1, 2, 1, 0, 1]);
        assert_eq!(palindromic_complexity(&bw("0"), 0).counts, vec![1]);
    }

    #[test]
    fn richness_examples() {
        assert!(!is_rich(&Word::parse("0120").unwrap()));
        assert!(!is_rich(&bw("11010011")));
        assert!(is_rich(&bw("000")));
        assert!(is_rich(&Word::empty(Alphabet::binary())));
    }

    #[test]
    fn returns_characterization() {
        let (ok, witness) = rich_via_returns(&bw("11010011"));
        assert!(!ok);
        let witness = witness.unwrap();
        assert!(!is_palindrome(&witness));
        // the witness is a complete first return to one of its borders
        let s = witness.symbols();
        assert!(crate::returns::is_closed_slice(s));

        assert_eq!(rich_via_returns(&bw("010010")), (true, None));
        assert_eq!(rich_via_returns(&bw("0")), (true, None));
    }

    #[test]
    fn pri_pal_bridge() {
        assert!(!pri_equals_pal(&Word::parse("0120").unwrap()));
        assert!(pri_equals_pal(&bw("00")));
        assert!(pri_equals_pal(&bw("010010")));
        let report = richness_report(&Word::parse("0120").unwrap());
        assert!(!report.is_rich && !report.pri_equals_pal);
        assert_eq!(report.palindrome_count, 4);
        assert!(report.witness.is_some());
    }

    #[test]
    fn longest_pal_suffix() {
        assert_eq!(longest_palindromic_suffix(b"\x00\x01\x00\x00"), 2);
        assert_eq!(longest_palindromic_suffix(b"\x00\x01"), 1);
        assert_eq!(longest_palindromic_suffix(b""), 0);
        assert_eq!(longest_palindromic_suffix(b"\x00\x01\x00"), 3);
    }
}
