//! Table, CSV and JSON rendering of profiles, analyzer reports, and gap
//! scans, plus the parsers that make profile output round-trippable.

use serde::{Deserialize, Serialize};

use privword::{ComplexityProfile, ProfileKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Serialized form of a profile: `{name, kind, valid_to, counts, exact}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub name: String,
    pub kind: String,
    pub valid_to: usize,
    pub counts: Vec<usize>,
    pub exact: Vec<bool>,
}

impl ProfileDoc {
    pub fn new(name: &str, profile: &ComplexityProfile) -> Self {
        ProfileDoc {
            name: name.to_string(),
            kind: profile.kind.as_str().to_string(),
            valid_to: profile.valid_to,
            counts: profile.counts.clone(),
            exact: profile.exact.clone(),
        }
    }

    pub fn to_profile(&self) -> Option<ComplexityProfile> {
        let kind = ProfileKind::parse(&self.kind)?;
        if self.counts.len() != self.exact.len() {
            return None;
        }
        Some(ComplexityProfile::from_rows(kind, self.counts.clone(), self.exact.clone()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Option<Self> {
        serde_json::from_str(text).ok()
    }

    /// CSV schema: `n,count,exact`, one row per length.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count,exact\n");
        for (n, (&count, &exact)) in self.counts.iter().zip(self.exact.iter()).enumerate() {
            out.push_str(&format!("{n},{count},{exact}\n"));
        }
        out
    }

    /// Parses rows back; name and kind are not part of the CSV schema.
    pub fn rows_from_csv(text: &str) -> Option<(Vec<usize>, Vec<bool>)> {
        let mut lines = text.lines();
        if lines.next()? != "n,count,exact" {
            return None;
        }
        let mut counts = Vec::new();
        let mut exact = Vec::new();
        for (expect_n, line) in lines.enumerate() {
            let mut parts = line.split(',');
            let n: usize = parts.next()?.parse().ok()?;
            if n != expect_n {
                return None;
            }
            counts.push(parts.next()?.parse().ok()?);
            exact.push(parts.next()?.parse().ok()?);
            if parts.next().is_some() {
                return None;
            }
        }
        Some((counts, exact))
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "# {} ({} profile), valid to n = {}\n{:>5}  {:>8}  exact\n",
            self.name, self.kind, self.valid_to, "n", "count"
        );
        for (n, (&count, &exact)) in self.counts.iter().zip(self.exact.iter()).enumerate() {
            out.push_str(&format!(
                "{n:>5}  {count:>8}  {}\n",
                if exact { "yes" } else { "no" }
            ));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Analyzer report for one word.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalyzeDoc {
    pub word: String,
    pub length: usize,
    pub privileged_count: usize,
    pub palindromic_count: usize,
    pub closed_count: usize,
    pub is_rich: bool,
    pub pri_equals_pal: bool,
    pub is_c_poor: bool,
    pub counting_law_ok: bool,
    pub witness: Option<String>,
}

impl AnalyzeDoc {
    pub fn to_table(&self, eps_token: &str) -> String {
        let display = |s: &str| if s.is_empty() { eps_token.to_string() } else { s.to_string() };
        let mut out = String::new();
        out.push_str(&format!("word            {}\n", display(&self.word)));
        out.push_str(&format!("length          {}\n", self.length));
        out.push_str(&format!("privileged      {}\n", self.privileged_count));
        out.push_str(&format!("palindromic     {}\n", self.palindromic_count));
        out.push_str(&format!("closed          {}\n", self.closed_count));
        out.push_str(&format!("is_rich         {}\n", self.is_rich));
        out.push_str(&format!("pri_equals_pal  {}\n", self.pri_equals_pal));
        out.push_str(&format!("is_c_poor       {}\n", self.is_c_poor));
        out.push_str(&format!(
            "counting_law    {}\n",
            if self.counting_law_ok { "ok" } else { "VIOLATED" }
        ));
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness         {}\n", display(w)));
        }
        out
    }

    pub fn to_csv(&self, eps_token: &str) -> String {
        let display = |s: &str| if s.is_empty() { eps_token.to_string() } else { s.to_string() };
        let mut out = String::from("key,value\n");
        out.push_str(&format!("word,{}\n", display(&self.word)));
        out.push_str(&format!("length,{}\n", self.length));
        out.push_str(&format!("privileged,{}\n", self.privileged_count));
        out.push_str(&format!("palindromic,{}\n", self.palindromic_count));
        out.push_str(&format!("closed,{}\n", self.closed_count));
        out.push_str(&format!("is_rich,{}\n", self.is_rich));
        out.push_str(&format!("pri_equals_pal,{}\n", self.pri_equals_pal));
        out.push_str(&format!("is_c_poor,{}\n", self.is_c_poor));
        out.push_str(&format!("counting_law_ok,{}\n", self.counting_law_ok));
        out.push_str(&format!(
            "witness,{}\n",
            self.witness.as_deref().map(display).unwrap_or_default()
        ));
        out
    }
}

/// Gap-scan result document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GapsDoc {
    pub name: String,
    pub kind: String,
    pub from: usize,
    pub to: usize,
    pub runs: Vec<(usize, usize)>,
}

impl GapsDoc {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).unwrap(),
            Format::Csv => {
                let mut out = String::from("from,to\n");
                for &(a, b) in &self.runs {
                    out.push_str(&format!("{a},{b}\n"));
                }
                out
            }
            Format::Table => {
                let mut out = format!(
                    "# zero runs of the {} profile of {} in [{}, {}]\n",
                    self.kind, self.name, self.from, self.to
                );
                if self.runs.is_empty() {
                    out.push_str("(none)\n");
                }
                for &(a, b) in &self.runs {
                    out.push_str(&format!("{a}..{b}\n"));
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use privword::ProfileKind;

    #[test]
    fn profile_round_trips() {
        let profile = ComplexityProfile::from_rows(
            ProfileKind::Privileged,
            vec![1, 2, 1, 2, 0],
            vec![true, true, true, false, false],
        );
        let doc = ProfileDoc::new("tm", &profile);

        let back = ProfileDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_profile().unwrap(), profile);

        let (counts, exact) = ProfileDoc::rows_from_csv(&doc.to_csv()).unwrap();
        assert_eq!(counts, profile.counts);
        assert_eq!(exact, profile.exact);
    }

    #[test]
    fn csv_rejects_malformed_rows() {
        assert!(ProfileDoc::rows_from_csv("nope\n0,1,true\n").is_none());
        assert!(ProfileDoc::rows_from_csv("n,count,exact\n1,1,true\n").is_none());
        assert!(ProfileDoc::rows_from_csv("n,count,exact\n0,x,true\n").is_none());
    }
}
