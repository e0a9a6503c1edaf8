//! Privileged words and their relatives: palindromic richness, complete
//! return (closed) factors, and per-length complexity profiles of finite
//! words and generated infinite words.
//!
//! A word is *privileged* when it is empty, a single letter, or a complete
//! first return to a shorter privileged word (a word starting and ending
//! with it and containing it exactly twice). Every word of length n has
//! exactly n + 1 distinct privileged factors, which makes the privileged
//! complexity function A_n a sharp probe of word structure: an infinite
//! binary word is Sturmian exactly when A_n alternates 1 (even n) / 2
//! (odd n).
//!
//! ```
//! use privword::privileged::{is_privileged, privileged_factors};
//! use privword::words::Word;
//!
//! let w = Word::parse("00101100").unwrap();
//! assert!(is_privileged(&w));
//! assert_eq!(privileged_factors(&w).len(), w.len() + 1);
//! ```
//!
//! The [`generators`] module produces exact prefixes of the Thue-Morse
//! word, characteristic Sturmian words from continued-fraction directives,
//! episturmian words from letter directives, and ultimately periodic words;
//! [`profiler`] turns those into complexity profiles with honest exactness
//! markers. The [`oracle`] module carries deliberately naive reference
//! implementations used as independent ground truth by the test suites.

pub mod error;
pub mod generators;
pub mod oracle;
pub mod palindromes;
pub mod privileged;
pub mod profile;
pub mod profiler;
pub mod qcomplexity;
pub mod returns;
pub mod words;

pub use error::{Error, Result};
pub use profile::{ComplexityProfile, ProfileKind};
pub use words::{Alphabet, FactorSet, Word};
