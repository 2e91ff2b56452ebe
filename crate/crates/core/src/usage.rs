//! Word usages and the alternatives recorded alongside them.

use crate::sigla::{Language, Sigla};
use crate::table::OMISSION;

/// Which witnesses attest a usage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Source {
    pub sigla: Sigla,
    pub is_main: bool,
}

impl Source {
    pub fn main(siglum: &str) -> Self {
        Source {
            sigla: Sigla::single(siglum),
            is_main: true,
        }
    }

    pub fn variant(sigla: Sigla) -> Self {
        Source { sigla, is_main: false }
    }
}

/// Another reading at the same locus, on the same language side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltReading {
    pub surface: String,
    /// Lemma first, then sublemmas.
    pub chain: Vec<String>,
    pub sigla: Sigla,
}

impl AltReading {
    /// The deepest level of the chain, used in cross-references.
    pub fn most_specific(&self) -> &str {
        self.chain.last().map(String::as_str).unwrap_or("")
    }
}

/// The main reading (when the usage itself is a variant) and the other
/// variant readings at the locus, in cell order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Alternative {
    pub main: Option<AltReading>,
    pub var: Vec<AltReading>,
}

impl Alternative {
    pub fn is_empty(&self) -> bool {
        self.main.is_none() && self.var.is_empty()
    }
}

/// Identifies a reading in the input: record index and reading slot
/// (0 for the main text, n for the n-th variant reading).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub record: usize,
    pub reading: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Usage {
    /// Surface wording as written.
    pub word: String,
    /// Lemma level. For a phrase this is the member lemmas joined with " & ".
    pub lemma: String,
    pub sublemmas: Vec<String>,
    pub language: Language,
    pub repetition: Option<u32>,
    pub source: Source,
    pub alternatives: Alternative,
    /// Member lemmas of a multi-word phrase.
    pub decomposition: Option<Vec<String>>,
    /// A grammatical label or a word carrying only grammatical value.
    pub grammatical: bool,
    pub occurrence: Occurrence,
}

impl Usage {
    /// Lemma followed by its sublemmas.
    pub fn chain(&self) -> Vec<&str> {
        std::iter::once(self.lemma.as_str())
            .chain(self.sublemmas.iter().map(String::as_str))
            .collect()
    }

    pub fn most_specific(&self) -> &str {
        self.sublemmas.last().unwrap_or(&self.lemma)
    }

    pub fn is_omission(&self) -> bool {
        self.lemma == OMISSION && self.word == OMISSION
    }

    /// Heading used when this usage is shown as a counterpart: the chain
    /// from the most specific level down to the lemma joined by " → ";
    /// grammatical material is written inline instead (`быти gramm.`).
    pub fn label(&self) -> String {
        if self.grammatical {
            return self.chain().join(" ");
        }
        let mut parts: Vec<&str> = self.sublemmas.iter().rev().map(String::as_str).collect();
        parts.push(&self.lemma);
        parts.join(" → ")
    }

    /// Surface text with sigla appended for variant readings.
    pub fn attested_word(&self) -> String {
        if self.source.is_main {
            self.word.clone()
        } else {
            format!("{} {}", self.word, self.source.sigla)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn usage(lemma: &str, subs: &[&str], grammatical: bool) -> Usage {
        Usage {
            word: "w".into(),
            lemma: lemma.into(),
            sublemmas: subs.iter().map(|s| s.to_string()).collect(),
            language: Language::Greek,
            repetition: None,
            source: Source::main("Cr"),
            alternatives: Alternative::default(),
            decomposition: None,
            grammatical,
            occurrence: Occurrence { record: 0, reading: 0 },
        }
    }

    #[test]
    fn labels() {
        assert_eq!(usage("παρά", &["παρά + Acc."], false).label(), "παρά + Acc. → παρά");
        assert_eq!(usage("νομοθετέω", &[], false).label(), "νομοθετέω");
        assert_eq!(usage("быти", &["gramm."], true).label(), "быти gramm.");
        assert_eq!(usage("pass.", &[], true).label(), "pass.");
    }
}
