//! Prefix generators for the infinite words under study: morphic fixed
//! points (Thue-Morse, the three-letter α word), characteristic Sturmian
//! words from continued-fraction directives, episturmian words from letter
//! directives via iterated palindromic closure, and ultimately periodic
//! words u v^ω.
//!
//! All constructions are exact integer recursions; there is no floating
//! point anywhere, so prefixes are bit-reproducible. Directives for infinite
//! words are supplied as eventually periodic descriptions (preperiod plus
//! period).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::palindromes::longest_palindromic_suffix;
use crate::words::{Alphabet, Word};

/// A non-erasing morphism given by one image per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismSpec {
    alphabet: Arc<Alphabet>,
    images: Vec<Vec<u8>>,
}

impl MorphismSpec {
    /// Builds a morphism from `(letter, image)` pairs covering the alphabet.
    pub fn new(alphabet: Arc<Alphabet>, images: &[(char, &str)]) -> Result<Self> {
        let mut table: Vec<Option<Vec<u8>>> = vec![None; alphabet.size()];
        for &(letter, image) in images {
            let sym = alphabet.symbol_of(letter).ok_or(Error::SymbolNotInAlphabet(letter))?;
            let image = Word::from_text(image, &alphabet)?;
            if image.is_empty() {
                return Err(Error::EmptyPattern);
            }
            table[sym as usize] = Some(image.symbols().to_vec());
        }
        let images = table
            .into_iter()
            .enumerate()
            .map(|(sym, img)| {
                img.ok_or_else(|| Error::SymbolNotInAlphabet(alphabet.char_of(sym as u8)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MorphismSpec { alphabet, images })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn image(&self, symbol: u8) -> &[u8] {
        &self.images[symbol as usize]
    }

    /// Prolongable from `seed`: the image of the seed starts with the seed
    /// and is longer than one letter.
    pub fn is_prolongable_from(&self, seed: u8) -> bool {
        let img = &self.images[seed as usize];
        img.len() >= 2 && img[0] == seed
    }

    pub fn apply(&self, s: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(s.len() * 2);
        for &c in s {
            out.extend_from_slice(&self.images[c as usize]);
        }
        out
    }
}

/// The length-`n` prefix of the fixed point of `spec` iterated from `seed`.
pub fn morphic_prefix(spec: &MorphismSpec, seed: char, n: usize) -> Result<Word> {
    let sym = spec.alphabet.symbol_of(seed).ok_or(Error::SymbolNotInAlphabet(seed))?;
    if !spec.is_prolongable_from(sym) {
        return Err(Error::NotProlongable(seed));
    }
    // f^k(seed) is a strict prefix of f^{k+1}(seed); iterate until long enough
    let mut s = vec![sym];
    while s.len() < n {
        s = spec.apply(&s);
    }
    s.truncate(n);
    Word::from_symbols(Arc::clone(&spec.alphabet), s)
}

/// The Thue-Morse morphism 0 ↦ 01, 1 ↦ 10.
pub fn thue_morse_morphism() -> MorphismSpec {
    MorphismSpec::new(Alphabet::binary(), &[('0', "01"), ('1', "10")]).unwrap()
}

/// Prefix of the Thue-Morse word t.
pub fn thue_morse_prefix(n: usize) -> Word {
    morphic_prefix(&thue_morse_morphism(), '0', n).unwrap()
}

/// The three-letter morphism a ↦ c, b ↦ ca, c ↦ caba, prolongable only from c.
pub fn alpha_morphism() -> MorphismSpec {
    let alphabet = Alphabet::new(['a', 'b', 'c']).unwrap();
    MorphismSpec::new(alphabet, &[('a', "c"), ('b', "ca"), ('c', "caba")]).unwrap()
}

/// Prefix of the fixed point of the α morphism (seed c).
pub fn alpha_fixed_point_prefix(n: usize) -> Word {
    morphic_prefix(&alpha_morphism(), 'c', n).unwrap()
}

/// An eventually periodic sequence of positive integers d_1, d_2, ...
/// A description with an empty period is finite and can only generate
/// prefixes reachable by the listed entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directive {
    pre: Vec<u32>,
    period: Vec<u32>,
}

impl Directive {
    pub fn new(pre: Vec<u32>, period: Vec<u32>) -> Result<Self> {
        if pre.is_empty() && period.is_empty() {
            return Err(Error::EmptyDirective);
        }
        if pre.iter().chain(period.iter()).any(|&d| d == 0) {
            return Err(Error::ZeroDirectiveEntry);
        }
        Ok(Directive { pre, period })
    }

    /// A purely periodic directive.
    pub fn periodic(period: Vec<u32>) -> Result<Self> {
        Directive::new(Vec::new(), period)
    }

    fn get(&self, i: usize) -> Option<u32> {
        if i < self.pre.len() {
            Some(self.pre[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.pre.len()) % self.period.len()])
        }
    }

    /// Parses `"2;1"` as preperiod 2 with period 1, and `"1,2"` (no
    /// semicolon) as the purely periodic directive 1,2,1,2,...
    pub fn parse(text: &str) -> Result<Self> {
        fn ints(part: &str) -> Result<Vec<u32>> {
            part.split(',')
                .filter(|p| !p.is_empty())
                .map(|p| p.trim().parse::<u32>().map_err(|_| Error::BadSourceSpec(p.to_string())))
                .collect()
        }
        match text.split_once(';') {
            Some((pre, period)) => Directive::new(ints(pre)?, ints(period)?),
            None => Directive::periodic(ints(text)?),
        }
    }
}

impl std::fmt::Display for Directive {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |xs: &[u32]| xs.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        if self.pre.is_empty() {
            write!(f, "{}", join(&self.period))
        } else {
            write!(f, "{};{}", join(&self.pre), join(&self.period))
        }
    }
}

/// Prefix of the characteristic Sturmian word with continued-fraction
/// directive d: s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2}.
pub fn standard_sturmian_prefix(directive: &Directive, n: usize) -> Result<Word> {
    let alphabet = Alphabet::binary();
    let mut prev: Vec<u8> = vec![1];
    let mut cur: Vec<u8> = vec![0];
    let mut i = 0usize;
    while cur.len() < n {
        let d = directive
            .get(i)
            .ok_or(Error::PrefixUnreachable { need: n, reached: cur.len() })?;
        let mut next = Vec::with_capacity(cur.len() * d as usize + prev.len());
        for _ in 0..d {
            next.extend_from_slice(&cur);
        }
        next.extend_from_slice(&prev);
        prev = cur;
        cur = next;
        i += 1;
    }
    cur.truncate(n);
    Word::from_symbols(alphabet, cur)
}

/// Prefix of the Fibonacci word (all-ones directive).
pub fn fibonacci_prefix(n: usize) -> Word {
    standard_sturmian_prefix(&Directive::periodic(vec![1]).unwrap(), n).unwrap()
}

/// An eventually periodic directive of letters for the episturmian
/// construction. For periodic directives A-strictness is enforced: every
/// letter of the directive's alphabet must occur in the period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterDirective {
    alphabet: Arc<Alphabet>,
    pre: Vec<u8>,
    period: Vec<u8>,
}

impl LetterDirective {
    pub fn new(pre: &str, period: &str) -> Result<Self> {
        if pre.is_empty() && period.is_empty() {
            return Err(Error::EmptyDirective);
        }
        let alphabet = Alphabet::infer(&format!("{pre}{period}"))?;
        let pre_w = Word::from_text(pre, &alphabet)?;
        let period_w = Word::from_text(period, &alphabet)?;
        if !period_w.is_empty() {
            for sym in 0..alphabet.size() as u8 {
                if !period_w.symbols().contains(&sym) {
                    return Err(Error::LetterNotRecurrent(alphabet.char_of(sym)));
                }
            }
        }
        Ok(LetterDirective {
            alphabet,
            pre: pre_w.symbols().to_vec(),
            period: period_w.symbols().to_vec(),
        })
    }

    /// A purely periodic letter directive, e.g. `"abc"` for the Tribonacci word.
    pub fn periodic(period: &str) -> Result<Self> {
        LetterDirective::new("", period)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn get(&self, i: usize) -> Option<u8> {
        if i < self.pre.len() {
            Some(self.pre[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.pre.len()) % self.period.len()])
        }
    }
}

impl std::fmt::Display for LetterDirective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let render = |sym: &[u8]| sym.iter().map(|&s| self.alphabet.char_of(s)).collect::<String>();
        if self.pre.is_empty() {
            write!(f, "{}", render(&self.period))
        } else {
            write!(f, "{};{}", render(&self.pre), render(&self.period))
        }
    }
}

/// Shortest palindrome having `s` as a prefix.
fn palindromic_closure(s: &[u8]) -> Vec<u8> {
    let suffix = longest_palindromic_suffix(s);
    let mut out = s.to_vec();
    out.extend(s[..s.len() - suffix].iter().rev());
    out
}

/// Prefix of the episturmian word directed by the letter sequence, built by
/// iterated palindromic closure: u_{k+1} is the shortest palindrome with
/// prefix u_k x_{k+1}.
pub fn episturmian_prefix(directive: &LetterDirective, n: usize) -> Result<Word> {
    let mut u: Vec<u8> = Vec::new();
    let mut i = 0usize;
    while u.len() < n {
        let x = directive
            .get(i)
            .ok_or(Error::PrefixUnreachable { need: n, reached: u.len() })?;
        u.push(x);
        u = palindromic_closure(&u);
        i += 1;
    }
    u.truncate(n);
    Word::from_symbols(Arc::clone(&directive.alphabet), u)
}

/// The length-`n` prefix of u v^ω.
pub fn periodic_prefix(u: &Word, v: &Word, n: usize) -> Result<Word> {
    if v.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let mut s = Vec::with_capacity(n);
    s.extend_from_slice(u.symbols());
    while s.len() < n {
        s.extend_from_slice(v.symbols());
    }
    s.truncate(n);
    Word::from_symbols(Arc::clone(u.alphabet()), s)
}

/// A named generator of arbitrarily long prefixes of one infinite word.
/// Prefixes are coherent: `prefix(n)` is a prefix of `prefix(m)` for n ≤ m.
#[derive(Debug, Clone)]
pub enum WordSource {
    Morphic { spec: MorphismSpec, seed: char, label: String },
    Standard { directive: Directive, label: String },
    Episturmian { directive: LetterDirective },
    Periodic { head: Word, cycle: Word },
}

impl WordSource {
    pub fn thue_morse() -> Self {
        WordSource::Morphic { spec: thue_morse_morphism(), seed: '0', label: "tm".into() }
    }

    pub fn fibonacci() -> Self {
        WordSource::Standard {
            directive: Directive::periodic(vec![1]).unwrap(),
            label: "fibonacci".into(),
        }
    }

    pub fn alpha() -> Self {
        WordSource::Morphic { spec: alpha_morphism(), seed: 'c', label: "alpha".into() }
    }

    pub fn standard(directive: Directive) -> Self {
        let label = format!("standard:{directive}");
        WordSource::Standard { directive, label }
    }

    pub fn episturmian(directive: LetterDirective) -> Self {
        WordSource::Episturmian { directive }
    }

    pub fn periodic(head: Word, cycle: Word) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if head.alphabet() != cycle.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(WordSource::Periodic { head, cycle })
    }

    /// Parses a source name: `tm`, `fibonacci`, `alpha`,
    /// `standard:<d1,d2,...>`, `episturmian:<letters>`, `periodic:<u>,<v>`.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "tm" => return Ok(WordSource::thue_morse()),
            "fibonacci" => return Ok(WordSource::fibonacci()),
            "alpha" => return Ok(WordSource::alpha()),
            _ => {}
        }
        if let Some(spec) = text.strip_prefix("standard:") {
            return Ok(WordSource::standard(Directive::parse(spec)?));
        }
        if let Some(spec) = text.strip_prefix("episturmian:") {
            let directive = match spec.split_once(';') {
                Some((pre, period)) => LetterDirective::new(pre, period)?,
                None => LetterDirective::periodic(spec)?,
            };
            return Ok(WordSource::episturmian(directive));
        }
        if let Some(spec) = text.strip_prefix("periodic:") {
            let (u, v) = spec.split_once(',').ok_or_else(|| Error::BadSourceSpec(text.into()))?;
            let alphabet = Alphabet::infer(&format!("{u}{v}"))?;
            let head = Word::from_text(u, &alphabet)?;
            let cycle = Word::from_text(v, &alphabet)?;
            return WordSource::periodic(head, cycle);
        }
        Err(Error::BadSourceSpec(text.into()))
    }

    pub fn name(&self) -> String {
        match self {
            WordSource::Morphic { label, .. } => label.clone(),
            WordSource::Standard { label, .. } => label.clone(),
            WordSource::Episturmian { directive } => format!("episturmian:{directive}"),
            WordSource::Periodic { head, cycle } => format!("periodic:{head},{cycle}"),
        }
    }

    pub fn alphabet(&self) -> Arc<Alphabet> {
        match self {
            WordSource::Morphic { spec, .. } => Arc::clone(spec.alphabet()),
            WordSource::Standard { .. } => Alphabet::binary(),
            WordSource::Episturmian { directive } => Arc::clone(directive.alphabet()),
            WordSource::Periodic { head, .. } => Arc::clone(head.alphabet()),
        }
    }

    pub fn prefix(&self, n: usize) -> Result<Word> {
        match self {
            WordSource::Morphic { spec, seed, .. } => morphic_prefix(spec, *seed, n),
            WordSource::Standard { directive, .. } => standard_sturmian_prefix(directive, n),
            WordSource::Episturmian { directive } => episturmian_prefix(directive, n),
            WordSource::Periodic { head, cycle } => periodic_prefix(head, cycle, n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(text: &str) -> Word {
        Word::from_text(text, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn morphic_examples() {
        assert_eq!(thue_morse_prefix(8).to_string(), "01101001");
        assert_eq!(thue_morse_prefix(4).to_string(), "0110");
        assert_eq!(thue_morse_prefix(0).to_string(), "");
        let fib = MorphismSpec::new(Alphabet::binary(), &[('0', "01"), ('1', "0")]).unwrap();
        assert_eq!(morphic_prefix(&fib, '0', 8).unwrap().to_string(), "01001010");
        assert_eq!(alpha_fixed_point_prefix(4).to_string(), "caba");
        assert_eq!(
            morphic_prefix(&alpha_morphism(), 'a', 5),
            Err(Error::NotProlongable('a'))
        );
    }

    #[test]
    fn standard_examples() {
        assert_eq!(fibonacci_prefix(13).to_string(), "0100101001001");
        assert_eq!(fibonacci_prefix(1).to_string(), "0");
        let d = Directive::parse("2;1").unwrap();
        assert_eq!(standard_sturmian_prefix(&d, 8).unwrap().to_string(), "00100010");
        assert!(Directive::new(vec![], vec![]).is_err());
        assert!(Directive::new(vec![0], vec![1]).is_err());
        let finite = Directive::new(vec![1, 1], vec![]).unwrap();
        assert!(standard_sturmian_prefix(&finite, 100).is_err());
    }

    #[test]
    fn episturmian_examples() {
        let abc = LetterDirective::periodic("abc").unwrap();
        assert_eq!(episturmian_prefix(&abc, 7).unwrap().to_string(), "abacaba");
        let single = LetterDirective::periodic("a").unwrap();
        assert_eq!(episturmian_prefix(&single, 5).unwrap().to_string(), "aaaaa");
        // binary directive reproduces the Fibonacci word up to renaming
        let ab = LetterDirective::periodic("ab").unwrap();
        let epi = episturmian_prefix(&ab, 13).unwrap().to_string();
        let renamed: String =
            epi.chars().map(|c| if c == 'a' { '0' } else { '1' }).collect();
        assert_eq!(renamed, fibonacci_prefix(13).to_string());
        assert!(LetterDirective::new("c", "ab").is_err());
    }

    #[test]
    fn periodic_examples() {
        let eps = Word::empty(Alphabet::binary());
        assert_eq!(periodic_prefix(&eps, &bw("0001"), 9).unwrap().to_string(), "000100010");
        assert_eq!(periodic_prefix(&bw("1"), &bw("0"), 4).unwrap().to_string(), "1000");
        assert_eq!(periodic_prefix(&eps, &bw("01"), 5).unwrap().to_string(), "01010");
        assert!(periodic_prefix(&eps, &eps, 3).is_err());
    }

    #[test]
    fn source_parsing_and_names() {
        for name in ["tm", "fibonacci", "alpha", "standard:2;1", "episturmian:abc", "periodic:1,0"]
        {
            let src = WordSource::parse(name).unwrap();
            assert_eq!(src.name(), name);
            src.prefix(16).unwrap();
        }
        assert!(WordSource::parse("nope").is_err());
        assert!(WordSource::parse("periodic:01").is_err());
    }

    #[test]
    fn prefix_coherence() {
        let sources = [
            WordSource::thue_morse(),
            WordSource::fibonacci(),
            WordSource::alpha(),
            WordSource::parse("standard:1,2").unwrap(),
            WordSource::parse("episturmian:abc").unwrap(),
            WordSource::parse("periodic:1,0010").unwrap(),
        ];
        for src in &sources {
            let long = src.prefix(1 << 10).unwrap();
            for n in [0usize, 1, 2, 3, 64, 511, 1023] {
                let short = src.prefix(n).unwrap();
                assert_eq!(short.symbols(), &long.symbols()[..n], "{}", src.name());
            }
        }
    }
}
