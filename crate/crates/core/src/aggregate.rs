//! Aggregation into the nested sorted structure
//! lemma → (sublemma → (sublemma₂ → (sublemma₃ →))) counterpart blocks → alignments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::adapt::AdaptedRow;
use crate::address::Address;
use crate::collation::{Collations, SortKey};
use crate::sigla::Language;
use crate::usage::{Occurrence, Usage};

pub use crate::usage::{AltReading, Alternative, Source};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alignment {
    pub source_usage: Usage,
    pub target_usage: Usage,
    pub address: Address,
    pub biblical_quote: bool,
}

impl Alignment {
    fn from_row(row: &AdaptedRow) -> Alignment {
        let target_language = row.indexed_usage.language.other();
        Alignment {
            target_usage: row
                .counterpart
                .to_usage(target_language, row.indexed_usage.repetition),
            source_usage: row.indexed_usage.clone(),
            address: row.address.clone(),
            biblical_quote: row.biblical_quote,
        }
    }

    fn order_key(&self) -> (&Address, Occurrence, Occurrence) {
        (&self.address, self.source_usage.occurrence, self.target_usage.occurrence)
    }
}

/// Occurrence counts split by main text and variants.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Counts {
    pub main: usize,
    pub variant: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.main + self.variant
    }
}

impl fmt::Display for Counts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.main, self.variant) {
            (m, 0) => write!(f, "({m})"),
            (0, v) => write!(f, "({v}^{{var}})"),
            (m, v) => write!(f, "({m} + {v}^{{var}})"),
        }
    }
}

/// Alignments sharing the same counterpart heading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterpartBlock {
    pub label: String,
    pub alignments: Vec<Alignment>,
}

impl CounterpartBlock {
    /// Counts the counterpart occurrences of this block by their source.
    pub fn count(&self) -> Counts {
        let mut counts = Counts::default();
        for a in &self.alignments {
            if a.target_usage.source.is_main {
                counts.main += 1;
            } else {
                counts.variant += 1;
            }
        }
        counts
    }
}

/// One lemma or sublemma level.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Node {
    pub heading: String,
    pub blocks: BTreeMap<SortKey, CounterpartBlock>,
    pub children: BTreeMap<SortKey, Node>,
}

impl Node {
    fn new(heading: &str) -> Node {
        Node {
            heading: heading.to_string(),
            ..Node::default()
        }
    }

    /// All alignments below this node, depth first.
    pub fn alignments(&self) -> Vec<&Alignment> {
        let mut out: Vec<&Alignment> = self.blocks.values().flat_map(|b| b.alignments.iter()).collect();
        for child in self.children.values() {
            out.extend(child.alignments());
        }
        out
    }

    /// Distinct indexed occurrences below this node, split by source. One
    /// word aligned to several counterpart readings counts once.
    pub fn count(&self) -> Counts {
        let mut main = BTreeSet::new();
        let mut variant = BTreeSet::new();
        for a in self.alignments() {
            let set = if a.source_usage.source.is_main { &mut main } else { &mut variant };
            set.insert(a.source_usage.occurrence);
        }
        Counts {
            main: main.len(),
            variant: variant.len(),
        }
    }

    fn sort(&mut self) {
        for block in self.blocks.values_mut() {
            block.alignments.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        }
        for child in self.children.values_mut() {
            child.sort();
        }
    }
}

/// Counts for a lemma node or a counterpart block.
pub fn count(node: &Node) -> Counts {
    node.count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Index {
    /// Language of the headings.
    pub language: Language,
    pub lemmas: BTreeMap<SortKey, Node>,
}

impl Index {
    pub fn new(language: Language) -> Index {
        Index {
            language,
            lemmas: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }

    pub fn lemma(&self, heading: &str) -> Option<&Node> {
        self.lemmas.values().find(|n| n.heading == heading)
    }

    pub fn alignment_count(&self) -> usize {
        self.lemmas.values().map(|n| n.alignments().len()).sum()
    }
}

/// Files each adapted row under its lemma path and counterpart heading.
/// The result does not depend on the order of `rows`.
pub fn aggregate(rows: &[AdaptedRow], language: Language, collations: &Collations) -> Index {
    let own = collations.get(language);
    let other = collations.get(language.other());
    let mut index = Index::new(language);
    for row in rows {
        let alignment = Alignment::from_row(row);
        let usage = &alignment.source_usage;
        let mut node = index
            .lemmas
            .entry(SortKey::new(&usage.lemma, own))
            .or_insert_with(|| Node::new(&usage.lemma));
        for sub in &usage.sublemmas {
            node = node
                .children
                .entry(SortKey::new(sub, own))
                .or_insert_with(|| Node::new(sub));
        }
        let label = alignment.target_usage.label();
        node.blocks
            .entry(SortKey::new(&label, other))
            .or_insert_with(|| CounterpartBlock {
                label: label.clone(),
                alignments: Vec::new(),
            })
            .alignments
            .push(alignment);
    }
    for node in index.lemmas.values_mut() {
        node.sort();
    }
    index
}
