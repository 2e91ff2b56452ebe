//! Alphabet-table collation for lemma headings.
//!
//! A table lists letters (or digraphs) in rank order, one rank per line;
//! several space-separated letters on a line share that rank. Lines
//! starting with `strip ` name combining marks (`U+0301` or `0301`) removed
//! after canonical decomposition. Lemmas starting with a Latin letter
//! (grammatical labels such as `pass.`) collate after all native ones.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::sigla::Language;

pub const DEFAULT_SLAVONIC: &str = include_str!("../data/collation-slavonic.txt");
pub const DEFAULT_GREEK: &str = include_str!("../data/collation-greek.txt");

const SPACE_RANK: u32 = 0;
const UNKNOWN_BASE: u32 = 0x0100_0000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollationError {
    #[error("line {line}: invalid code point `{token}`")]
    CodePoint { line: usize, token: String },
    #[error("collation table lists no letters")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollationTable {
    ranks: HashMap<String, u32>,
    /// Longest letter length in chars, for greedy digraph matching.
    longest: usize,
    strip: BTreeSet<char>,
}

fn parse_code_point(token: &str) -> Option<char> {
    let hex = token.strip_prefix("U+").or_else(|| token.strip_prefix("u+")).unwrap_or(token);
    u32::from_str_radix(hex, 16).ok().and_then(char::from_u32)
}

impl CollationTable {
    pub fn parse(text: &str) -> Result<CollationTable, CollationError> {
        let mut ranks = HashMap::new();
        let mut strip = BTreeSet::new();
        let mut rank = SPACE_RANK;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(points) = line.strip_prefix("strip ") {
                for token in points.split_whitespace() {
                    let c = parse_code_point(token).ok_or_else(|| CollationError::CodePoint {
                        line: line_no,
                        token: token.to_string(),
                    })?;
                    strip.insert(c);
                }
                continue;
            }
            rank += 1;
            for letter in line.split_whitespace() {
                let letter: String = letter.nfd().collect::<String>().to_lowercase();
                ranks.entry(letter).or_insert(rank);
            }
        }
        if ranks.is_empty() {
            return Err(CollationError::Empty);
        }
        let longest = ranks.keys().map(|k| k.chars().count()).max().unwrap_or(1);
        Ok(CollationTable { ranks, longest, strip })
    }

    pub fn default_for(language: Language) -> CollationTable {
        let text = match language {
            Language::Slavonic => DEFAULT_SLAVONIC,
            Language::Greek => DEFAULT_GREEK,
        };
        CollationTable::parse(text).expect("shipped collation tables parse")
    }

    fn normalize(&self, text: &str) -> Vec<char> {
        text.to_lowercase().nfd().filter(|c| !self.strip.contains(c)).collect()
    }

    /// Sort key for a lemma: a section marker (native before Latin)
    /// followed by one weight per letter.
    pub fn key(&self, lemma: &str) -> Vec<u32> {
        let chars = self.normalize(lemma);
        let latin = chars.first().is_some_and(|c| c.is_ascii_alphabetic());
        let mut key = vec![u32::from(latin)];
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_whitespace() {
                key.push(SPACE_RANK);
                i += 1;
                continue;
            }
            let mut matched = false;
            for len in (1..=self.longest.min(chars.len() - i)).rev() {
                let candidate: String = chars[i..i + len].iter().collect();
                if let Some(&rank) = self.ranks.get(&candidate) {
                    key.push(rank);
                    i += len;
                    matched = true;
                    break;
                }
            }
            if !matched {
                key.push(UNKNOWN_BASE + chars[i] as u32);
                i += 1;
            }
        }
        key
    }
}

/// Sort key for a lemma in the given table.
pub fn collate_key(lemma: &str, table: &CollationTable) -> Vec<u32> {
    table.key(lemma)
}

/// A collation key paired with the original text, so that distinct
/// spellings with equal weights stay distinct and ordered.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortKey {
    pub weights: Vec<u32>,
    pub text: String,
}

impl SortKey {
    pub fn new(text: &str, table: &CollationTable) -> SortKey {
        SortKey {
            weights: table.key(text),
            text: text.to_string(),
        }
    }
}

/// The collation tables for both languages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collations {
    pub slavonic: CollationTable,
    pub greek: CollationTable,
}

impl Default for Collations {
    fn default() -> Self {
        Collations {
            slavonic: CollationTable::default_for(Language::Slavonic),
            greek: CollationTable::default_for(Language::Greek),
        }
    }
}

impl Collations {
    pub fn get(&self, language: Language) -> &CollationTable {
        match language {
            Language::Slavonic => &self.slavonic,
            Language::Greek => &self.greek,
        }
    }

    pub fn swapped(&self) -> Collations {
        Collations {
            slavonic: self.greek.clone(),
            greek: self.slavonic.clone(),
        }
    }

    pub fn compare(&self, language: Language, a: &str, b: &str) -> Ordering {
        let t = self.get(language);
        SortKey::new(a, t).cmp(&SortKey::new(b, t))
    }
}
