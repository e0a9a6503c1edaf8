//! The Q-property framework: generic per-length complexity of factors
//! satisfying a pluggable predicate, vanishing indices, the periodic-tail
//! classifier, and the per-length property battery (Rch/Spe/Bal/Rev) used by
//! the Sturmian characterization.
//!
//! A Q-property holds for ε and every letter, guarantees a qualifying factor
//! ending at every position, and never lets one position introduce two
//! qualifying factors. Palindromes, privileged words and letter powers all
//! have it; [`validate_q_axioms`] checks the axioms empirically over a corpus
//! rather than assuming them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::generators;
use crate::privileged::priv_flags;
use crate::profile::{ComplexityProfile, ProfileKind};
use crate::words::{is_palindrome_slice, occurrences_slice, Word};

type SharedPredicate = Arc<dyn Fn(&[u8]) -> bool + Send + Sync>;

/// A named predicate on words, pluggable into the complexity engine.
#[derive(Clone)]
pub struct QProperty {
    name: String,
    pred: SharedPredicate,
}

impl fmt::Debug for QProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QProperty").field("name", &self.name).finish()
    }
}

impl QProperty {
    /// A custom property over symbol slices. The predicate must hold for ε
    /// and single symbols to satisfy the Q axioms; this is not enforced here,
    /// run [`validate_q_axioms`] to check.
    pub fn new(name: impl Into<String>, pred: impl Fn(&[u8]) -> bool + Send + Sync + 'static) -> Self {
        QProperty { name: name.into(), pred: Arc::new(pred) }
    }

    pub fn palindrome() -> Self {
        QProperty::new("palindrome", is_palindrome_slice)
    }

    pub fn privileged() -> Self {
        QProperty::new("privileged", |s| s.len() <= 1 || *priv_flags(s).last().unwrap())
    }

    pub fn letter_power() -> Self {
        QProperty::new("letter-power", |s| s.windows(2).all(|p| p[0] == p[1]))
    }

    /// Built-in properties addressable by name from the CLI.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "palindrome" => Some(QProperty::palindrome()),
            "privileged" => Some(QProperty::privileged()),
            "letter-power" => Some(QProperty::letter_power()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn holds(&self, w: &Word) -> bool {
        (self.pred)(w.symbols())
    }

    pub(crate) fn holds_slice(&self, s: &[u8]) -> bool {
        (self.pred)(s)
    }

    pub fn profile_kind(&self) -> ProfileKind {
        match self.name.as_str() {
            "privileged" => ProfileKind::Privileged,
            "palindrome" => ProfileKind::Palindromic,
            _ => ProfileKind::GenericQ,
        }
    }
}

/// Number of distinct length-`n` factors of `s` satisfying `pred`.
pub(crate) fn count_distinct_for_length(s: &[u8], n: usize, pred: impl Fn(&[u8]) -> bool) -> usize {
    if n == 0 {
        return usize::from(pred(&[]));
    }
    if n > s.len() {
        return 0;
    }
    let set: HashSet<&[u8]> = s.windows(n).collect();
    set.into_iter().filter(|f| pred(f)).count()
}

pub(crate) fn count_per_length(s: &[u8], n_max: usize, pred: impl Fn(&[u8]) -> bool) -> Vec<usize> {
    (0..=n_max).map(|n| count_distinct_for_length(s, n, &pred)).collect()
}

/// The profile H^Q_n(w) for n = 0..=n_max.
pub fn q_complexity(w: &Word, q: &QProperty, n_max: usize) -> ComplexityProfile {
    let counts = count_per_length(w.symbols(), n_max, |f| q.holds_slice(f));
    ComplexityProfile::exact_rows(q.profile_kind(), counts)
}

/// The factor complexity profile C_n(w) for n = 0..=n_max.
pub fn factor_complexity(w: &Word, n_max: usize) -> ComplexityProfile {
    let counts = count_per_length(w.symbols(), n_max, |_| true);
    ComplexityProfile::exact_rows(ProfileKind::Factor, counts)
}

/// All n ≤ n_max with H^Q_n(w) = 0, ascending.
pub fn vanishing_indices(w: &Word, q: &QProperty, n_max: usize) -> Vec<usize> {
    q_complexity(w, q, n_max)
        .counts
        .iter()
        .enumerate()
        .filter_map(|(n, &c)| (c == 0).then_some(n))
        .collect()
}

/// First failure found when checking the three Q axioms positionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QAxiomViolation {
    /// The property fails on ε or on a single letter.
    BaseCase { word: Word },
    /// No qualifying factor ends at this position.
    NoFactorAtPosition { word: Word, position: usize },
    /// Two distinct qualifying factors are introduced at one position.
    TwoIntroduced { word: Word, position: usize, shorter: Word, longer: Word },
}

/// Checks the Q axioms on every word of the corpus, returning the first
/// violation, or `None` when all axioms hold throughout.
pub fn validate_q_axioms(
    q: &QProperty,
    corpus: impl IntoIterator<Item = Word>,
) -> Option<QAxiomViolation> {
    for w in corpus {
        if !q.holds_slice(&[]) {
            return Some(QAxiomViolation::BaseCase { word: Word::empty(Arc::clone(w.alphabet())) });
        }
        for sym in 0..w.alphabet().size() as u8 {
            if !q.holds_slice(&[sym]) {
                return Some(QAxiomViolation::BaseCase { word: w.subword(&[sym]) });
            }
        }
        let s = w.symbols();
        for i in 1..=s.len() {
            let mut introduced: Vec<&[u8]> = Vec::new();
            let mut any_ends_here = false;
            for l in 1..=i {
                let u = &s[i - l..i];
                if !q.holds_slice(u) {
                    continue;
                }
                any_ends_here = true;
                if occurrences_slice(u, &s[..i]).len() == 1 {
                    introduced.push(u);
                }
            }
            if !any_ends_here {
                return Some(QAxiomViolation::NoFactorAtPosition { word: w.clone(), position: i });
            }
            if introduced.len() > 1 {
                return Some(QAxiomViolation::TwoIntroduced {
                    word: w.clone(),
                    position: i,
                    shorter: w.subword(introduced[0]),
                    longer: w.subword(introduced[1]),
                });
            }
        }
    }
    None
}

/// Outcome of the periodic-tail classification for H^Q_n(u v^ω).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailClass {
    /// H^Q_n = 1 for all n past some bound.
    EventuallyOne,
    /// H^Q_n = 0 for infinitely many n.
    InfinitelyManyZeros,
    /// The vanishing-index pattern did not stabilize within the horizon.
    Undecided,
}

/// How many consecutive v-blocks must repeat the same vanishing-offset
/// pattern before the classifier commits to a verdict.
const STABLE_BLOCKS: usize = 4;

/// Classifies the tail of H^Q_n(u v^ω) by the dichotomy for ultimately
/// periodic words: either infinitely many vanishing indices, or eventually
/// exactly one qualifying factor per length.
///
/// Every factor of u v^ω of length n occurs inside the prefix of length
/// |u| + |v| + n − 1, so the profile computed here is exact for the infinite
/// word. The verdict tracks vanishing offsets per v-block and commits once
/// the pattern repeats over four consecutive blocks; the bound
/// at which stabilization must occur is not known in advance, so `horizon`
/// (in v-blocks) is a heuristic and `Undecided` is a legal outcome.
pub fn classify_periodic_tail(
    u: &Word,
    v: &Word,
    q: &QProperty,
    horizon: usize,
) -> Result<TailClass> {
    if v.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if horizon < STABLE_BLOCKS {
        return Ok(TailClass::Undecided);
    }
    let r = v.len();
    let head = u.len();
    let n_star = head + horizon * r;
    let text = generators::periodic_prefix(u, v, head + r + n_star)?;
    let s = text.symbols();

    let mut zero_patterns: Vec<BTreeSet<usize>> = Vec::with_capacity(STABLE_BLOCKS);
    let mut all_ones = true;
    for m in horizon - STABLE_BLOCKS + 1..=horizon {
        let mut zeros = BTreeSet::new();
        for offset in 1..=r {
            let n = head + (m - 1) * r + offset;
            let count = count_distinct_for_length(s, n, |f| q.holds_slice(f));
            if count == 0 {
                zeros.insert(offset);
            }
            if count != 1 {
                all_ones = false;
            }
        }
        zero_patterns.push(zeros);
    }
    let stable = zero_patterns.windows(2).all(|p| p[0] == p[1]);
    if !stable {
        return Ok(TailClass::Undecided);
    }
    if zero_patterns[0].is_empty() {
        if all_ones {
            Ok(TailClass::EventuallyOne)
        } else {
            Ok(TailClass::Undecided)
        }
    } else {
        Ok(TailClass::InfinitelyManyZeros)
    }
}

/// Per-length flags: Rch (privileged set equals palindromic set), Spe (unique
/// right special factor of this length), Bal (balance, binary words only) and
/// Rev (closure of the factor set under reversal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyFlags {
    pub n: usize,
    pub rch: bool,
    pub spe: bool,
    /// `None` when the word is not binary; balance is a binary notion.
    pub bal: Option<bool>,
    pub rev: bool,
}

/// Computes all four flags at length `n` over the factor set of `w`.
pub fn property_flags(w: &Word, n: usize) -> PropertyFlags {
    let s = w.symbols();
    let factors: BTreeSet<&[u8]> = if n == 0 {
        std::iter::once(&s[..0]).collect()
    } else if n > s.len() {
        BTreeSet::new()
    } else {
        s.windows(n).collect()
    };

    let priv_set: BTreeSet<&[u8]> = factors
        .iter()
        .copied()
        .filter(|f| f.len() <= 1 || *priv_flags(f).last().unwrap())
        .collect();
    let pal_set: BTreeSet<&[u8]> =
        factors.iter().copied().filter(|f| is_palindrome_slice(f)).collect();
    let rch = priv_set == pal_set;

    let mut extensions: HashMap<&[u8], BTreeSet<u8>> = HashMap::new();
    if n < s.len() {
        for window in s.windows(n + 1) {
            extensions.entry(&window[..n]).or_default().insert(window[n]);
        }
    }
    let spe = extensions.values().filter(|ext| ext.len() >= 2).count() == 1;

    let bal = if w.alphabet().size() <= 2 {
        let ones: Vec<usize> =
            factors.iter().map(|f| f.iter().filter(|&&c| c == 1).count()).collect();
        let balanced = match (ones.iter().min(), ones.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        };
        Some(balanced)
    } else {
        None
    };

    let rev = factors.iter().all(|f| {
        let mut r = f.to_vec();
        r.reverse();
        factors.contains(r.as_slice())
    });

    PropertyFlags { n, rch, spe, bal, rev }
}

/// Balance flag alone, erroring on non-binary input.
pub fn is_balanced_at(w: &Word, n: usize) -> Result<bool> {
    if w.alphabet().size() > 2 {
        return Err(Error::NotBinary);
    }
    Ok(property_flags(w, n).bal.unwrap())
}

/// The minimal witness that a binary factor set is unbalanced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbalancedPair {
    /// The palindromic core x.
    pub x: Word,
    /// The two factors 0x0 and 1x1.
    pub pair: [Word; 2],
}

/// Finds the minimal pair (0x0, 1x1) of factors of `w`, if its factor set is
/// unbalanced. The minimal pair is unique and its core is a palindrome.
pub fn find_minimal_unbalanced_pair(w: &Word) -> Result<Option<UnbalancedPair>> {
    if w.alphabet().size() > 2 {
        return Err(Error::NotBinary);
    }
    let s = w.symbols();
    for m in 2..=s.len() {
        let factors: BTreeSet<&[u8]> = s.windows(m).collect();
        for f in &factors {
            if f[0] == 0 && f[m - 1] == 0 {
                let mut other = f.to_vec();
                other[0] = 1;
                other[m - 1] = 1;
                if factors.contains(other.as_slice()) {
                    let x = w.subword(&f[1..m - 1]);
                    debug_assert!(is_palindrome_slice(x.symbols()));
                    return Ok(Some(UnbalancedPair {
                        x,
                        pair: [w.subword(f), w.subword(&other)],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff the profile alternates `even_value`/`odd_value` over its valid
/// range (which must reach at least n = 1).
pub fn matches_alternating(profile: &ComplexityProfile, even_value: usize, odd_value: usize) -> bool {
    if profile.valid_to < 1 {
        return false;
    }
    profile.counts[..=profile.valid_to]
        .iter()
        .enumerate()
        .all(|(n, &c)| c == if n % 2 == 0 { even_value } else { odd_value })
}

/// Whether a privileged profile matches the Sturmian signature 1/2.
pub fn jsp_check(profile: &ComplexityProfile) -> bool {
    matches_alternating(profile, 1, 2)
}

/// Whether a palindromic profile matches the Sturmian signature 1/2.
pub fn ppal_check(profile: &ComplexityProfile) -> bool {
    matches_alternating(profile, 1, 2)
}
