//! Rendering of an index into the verification list and the publication
//! index.

use crate::adapt::Direction;
use crate::aggregate::{Alignment, CounterpartBlock, Counts, Index, Node};
use crate::sigla::Language;
use crate::usage::{AltReading, Usage};

use super::punct::*;
use super::{Block, Document, Run, Style};

fn quote_style(quote: bool) -> Style {
    Style {
        superscript: false,
        bold_italic: quote,
    }
}

fn counts_runs(block: &mut Block, counts: Counts) {
    block.push(Run::plain("("));
    if counts.main > 0 || counts.variant == 0 {
        block.push(Run::plain(counts.main.to_string()));
    }
    if counts.variant > 0 {
        if counts.main > 0 {
            block.push(Run::plain(" + "));
        }
        block.push(Run::plain(counts.variant.to_string()));
        block.push(Run::superscript(VARIANT_MARK));
    }
    block.push(Run::plain(")"));
}

fn by_language(alignment: &Alignment) -> [&Usage; 2] {
    if alignment.source_usage.language == Language::Slavonic {
        [&alignment.source_usage, &alignment.target_usage]
    } else {
        [&alignment.target_usage, &alignment.source_usage]
    }
}

/// Witnesses of the variant readings involved, Slavonic first.
fn attestation(alignment: &Alignment) -> String {
    by_language(alignment)
        .iter()
        .filter(|u| !u.source.is_main)
        .map(|u| u.source.sigla.to_string())
        .collect::<Vec<_>>()
        .join(WITNESS_SEPARATOR)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    List,
    Index,
}

fn alt_text(alt: &AltReading, kind: Kind) -> &str {
    match kind {
        Kind::List => &alt.surface,
        Kind::Index => alt.most_specific(),
    }
}

/// Address, attestation and cross-references to the other readings at the
/// locus.
fn reference(block: &mut Block, alignment: &Alignment, kind: Kind) {
    let quote = kind == Kind::Index && alignment.biblical_quote;
    block.push(Run::styled(alignment.address.to_string(), quote_style(quote)));
    block.push(Run::superscript(attestation(alignment)));
    let mut first = true;
    for usage in by_language(alignment) {
        let alts = &usage.alternatives;
        if let Some(main) = &alts.main {
            block.push(Run::plain(if first { CROSS_REF } else { " " }));
            first = false;
            block.push(Run::plain(format!("{} {}", alt_text(main, kind), main.sigla)));
        }
        if !alts.var.is_empty() {
            block.push(Run::plain(if first { CROSS_REF } else { " " }));
            first = false;
            block.push(Run::plain("["));
            for (i, var) in alts.var.iter().enumerate() {
                if i > 0 {
                    block.push(Run::plain(BRACKET_SEPARATOR));
                }
                match kind {
                    Kind::List => block.push(Run::plain(format!("{} {}", var.surface, var.sigla))),
                    Kind::Index => {
                        block.push(Run::plain(var.most_specific()));
                        block.push(Run::superscript(var.sigla.to_string()));
                    }
                }
            }
            block.push(Run::plain("]"));
        }
    }
}

fn list_line(depth: usize, label: &str, alignment: &Alignment) -> Block {
    let mut block = Block::new(depth);
    block.push(Run::plain(format!("{label}{LABEL_END}")));
    let text = format!(
        "{}{TEXT_SEPARATOR}{}",
        alignment.source_usage.attested_word(),
        alignment.target_usage.attested_word()
    );
    block.push(Run::styled(text, quote_style(alignment.biblical_quote)));
    block.push(Run::plain(" ("));
    reference(&mut block, alignment, Kind::List);
    block.push(Run::plain(")"));
    block
}

fn list_node(doc: &mut Document, node: &Node, level: usize) {
    let mut heading = Block::new(level);
    if level == 0 {
        heading.push(Run::plain(node.heading.as_str()));
    } else {
        heading.push(Run::plain(format!("{} {}", DEPTH_MARK.repeat(level), node.heading)));
    }
    doc.blocks.push(heading);
    for block in node.blocks.values() {
        for alignment in &block.alignments {
            doc.blocks.push(list_line(level + 1, &block.label, alignment));
        }
    }
    for child in node.children.values() {
        list_node(doc, child, level + 1);
    }
}

/// The verification list: every alignment on its own line with both
/// surface texts.
pub fn render_list(index: &Index, direction: Direction) -> Document {
    debug_assert!(index.is_empty() || index.language == direction.indexed());
    let mut doc = Document::default();
    for node in index.lemmas.values() {
        list_node(&mut doc, node, 0);
    }
    doc
}

fn index_block(depth: usize, block: &CounterpartBlock) -> Block {
    let mut out = Block::new(depth);
    out.push(Run::plain(format!("{BULLET}{} ", block.label)));
    counts_runs(&mut out, block.count());
    out.push(Run::plain(LABEL_END));
    for (i, alignment) in block.alignments.iter().enumerate() {
        if i > 0 {
            out.push(Run::plain(REF_SEPARATOR));
        }
        reference(&mut out, alignment, Kind::Index);
    }
    out
}

fn index_node(doc: &mut Document, node: &Node, level: usize) {
    let mut heading = Block::new(level);
    heading.push(Run::plain(format!("{} ", node.heading)));
    counts_runs(&mut heading, node.count());
    doc.blocks.push(heading);
    for block in node.blocks.values() {
        doc.blocks.push(index_block(level + 1, block));
    }
    for child in node.children.values() {
        index_node(doc, child, level + 1);
    }
}

/// The publication index: counts and address lists per counterpart.
pub fn render_index(index: &Index, direction: Direction) -> Document {
    debug_assert!(index.is_empty() || index.language == direction.indexed());
    let mut doc = Document::default();
    for node in index.lemmas.values() {
        index_node(&mut doc, node, 0);
    }
    doc
}
