//! Profiles of generated infinite words through finite prefixes.
//!
//! A length-n row of a profile is only trustworthy once the prefix is long
//! enough to have revealed every length-n factor. Two guards are combined:
//! a cushion rule (the prefix must be at least `cushion`·n symbols) and
//! empirical stabilization (the row must be unchanged across
//! `stable_rounds` consecutive prefix doublings). Rows that pass both are
//! marked exact; the rest are reported but flagged inexact.

use rayon::prelude::*;

use crate::error::Result;
use crate::generators::WordSource;
use crate::profile::{ComplexityProfile, ProfileKind};
use crate::qcomplexity::{count_distinct_for_length, QProperty};
use crate::words::Word;

/// What to count per length.
#[derive(Debug, Clone)]
pub enum Statistic {
    /// All distinct factors (factor complexity C_n).
    Factor,
    /// Distinct factors with the given property (H^Q_n).
    Q(QProperty),
}

impl Statistic {
    pub fn kind(&self) -> ProfileKind {
        match self {
            Statistic::Factor => ProfileKind::Factor,
            Statistic::Q(q) => q.profile_kind(),
        }
    }

    /// Parses `factor` or a built-in property name.
    pub fn parse(name: &str) -> Option<Statistic> {
        if name == "factor" {
            return Some(Statistic::Factor);
        }
        QProperty::by_name(name).map(Statistic::Q)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ProfilerOptions {
    /// Minimum prefix-length-to-n ratio for a row to be reported exact.
    pub cushion: usize,
    /// Hard cap on the prefix length, in symbols.
    pub max_prefix: usize,
    /// Number of consecutive unchanged doublings required per row.
    pub stable_rounds: usize,
}

impl Default for ProfilerOptions {
    fn default() -> Self {
        ProfilerOptions { cushion: 64, max_prefix: 1 << 22, stable_rounds: 2 }
    }
}

fn counts_of_prefix(text: &[u8], n_max: usize, stat: &Statistic) -> Vec<usize> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| match stat {
            Statistic::Factor => count_distinct_for_length(text, n, |_| true),
            Statistic::Q(q) => {
                count_distinct_for_length(text, n, |f| QProperty::holds_slice(q, f))
            }
        })
        .collect()
}

/// Profile of a finite word; every row is exact.
pub fn profile_word(w: &Word, stat: &Statistic, n_max: usize) -> ComplexityProfile {
    let counts = counts_of_prefix(w.symbols(), n_max, stat);
    ComplexityProfile::exact_rows(stat.kind(), counts)
}

/// Profile of a generated source with automatic prefix sizing: start at
/// `cushion`·n_max symbols, double until every row has been stable for
/// `stable_rounds` consecutive doublings or the cap is reached.
pub fn profile_source(
    source: &WordSource,
    stat: &Statistic,
    n_max: usize,
    opts: &ProfilerOptions,
) -> Result<ComplexityProfile> {
    let start = n_max
        .saturating_mul(opts.cushion.max(1))
        .max(n_max + 1)
        .max(64)
        .min(opts.max_prefix.max(n_max + 1));
    let mut len = start;
    let mut prefix = source.prefix(len)?;
    let mut counts = counts_of_prefix(prefix.symbols(), n_max, stat);
    let mut stability = vec![0usize; n_max + 1];

    while stability.iter().any(|&s| s < opts.stable_rounds) && len < opts.max_prefix {
        len = len.saturating_mul(2).min(opts.max_prefix);
        prefix = source.prefix(len)?;
        let next = counts_of_prefix(prefix.symbols(), n_max, stat);
        for n in 0..=n_max {
            if next[n] == counts[n] {
                stability[n] += 1;
            } else {
                stability[n] = 0;
            }
        }
        counts = next;
    }

    let exact: Vec<bool> = (0..=n_max)
        .map(|n| stability[n] >= opts.stable_rounds && len >= opts.cushion.max(1).saturating_mul(n))
        .collect();
    Ok(ComplexityProfile::from_rows(stat.kind(), counts, exact))
}

/// Maximal runs [a, b] ⊆ [from, to] of consecutive zero rows. Only rows
/// marked exact participate; an inexact row terminates any open run.
pub fn scan_zero_runs(profile: &ComplexityProfile, from: usize, to: usize) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut open: Option<usize> = None;
    for n in from..=to.min(profile.n_max()) {
        let zero = profile.is_exact(n) && profile.counts[n] == 0;
        match (zero, open) {
            (true, None) => open = Some(n),
            (false, Some(a)) => {
                runs.push((a, n - 1));
                open = None;
            }
            _ => {}
        }
    }
    if let Some(a) = open {
        runs.push((a, to.min(profile.n_max())));
    }
    runs
}

/// Even-length privileged counts of the Thue-Morse word up to `n_max`,
/// prefix auto-sized.
pub fn thue_morse_even_table(n_max: usize, opts: &ProfilerOptions) -> Result<Vec<(usize, usize)>> {
    let profile = profile_source(
        &WordSource::thue_morse(),
        &Statistic::Q(QProperty::privileged()),
        n_max,
        opts,
    )?;
    Ok((2..=n_max).step_by(2).map(|n| (n, profile.counts[n])).collect())
}
