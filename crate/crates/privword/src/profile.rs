//! Per-length counts of distinct factors satisfying some property, together
//! with exactness bookkeeping for profiles of generated infinite words.

/// Which counting function a profile carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    /// Factor complexity C_n: all distinct factors of length n.
    Factor,
    /// Palindromic complexity P_n.
    Palindromic,
    /// Privileged complexity A_n.
    Privileged,
    /// H^Q_n for some other named property.
    GenericQ,
}

impl ProfileKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProfileKind::Factor => "factor",
            ProfileKind::Palindromic => "palindromic",
            ProfileKind::Privileged => "privileged",
            ProfileKind::GenericQ => "generic-Q",
        }
    }

    pub fn parse(s: &str) -> Option<ProfileKind> {
        match s {
            "factor" => Some(ProfileKind::Factor),
            "palindromic" => Some(ProfileKind::Palindromic),
            "privileged" => Some(ProfileKind::Privileged),
            "generic-Q" => Some(ProfileKind::GenericQ),
            _ => None,
        }
    }
}

/// Counts per length n = 0..=n_max. For finite words every row is exact; for
/// profiles of generated prefixes a row is exact only once it has survived
/// the prefix-doubling stabilization rule, and `valid_to` is the largest n
/// such that every row up to n is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub kind: ProfileKind,
    pub counts: Vec<usize>,
    pub exact: Vec<bool>,
    pub valid_to: usize,
}

impl ComplexityProfile {
    /// A profile of a finite word: every row is exact by construction.
    pub fn exact_rows(kind: ProfileKind, counts: Vec<usize>) -> Self {
        let n_max = counts.len().saturating_sub(1);
        let exact = vec![true; counts.len()];
        ComplexityProfile { kind, counts, exact, valid_to: n_max }
    }

    pub fn from_rows(kind: ProfileKind, counts: Vec<usize>, exact: Vec<bool>) -> Self {
        assert_eq!(counts.len(), exact.len());
        let valid_to = exact
            .iter()
            .take_while(|&&e| e)
            .count()
            .saturating_sub(1);
        ComplexityProfile { kind, counts, exact, valid_to }
    }

    pub fn n_max(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn count(&self, n: usize) -> Option<usize> {
        self.counts.get(n).copied()
    }

    pub fn is_exact(&self, n: usize) -> bool {
        self.exact.get(n).copied().unwrap_or(false)
    }

    /// Sum of all counts (total number of distinct qualifying factors).
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}
