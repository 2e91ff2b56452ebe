//! Styled document model shared by both output kinds, and its plain-text
//! serialization.

mod render;
mod wordxml;

pub use render::{render_index, render_list};
pub use wordxml::{serialize_wordxml, write_wordxml};

use std::fmt;
use std::str::FromStr;

/// Punctuation used in rendered entries.
pub mod punct {
    pub const BULLET: &str = "• ";
    pub const CROSS_REF: &str = " » ";
    pub const REF_SEPARATOR: &str = "; ";
    pub const BRACKET_SEPARATOR: &str = ", ";
    pub const TEXT_SEPARATOR: &str = "/";
    pub const LABEL_END: &str = ": ";
    pub const DEPTH_MARK: &str = "|";
    pub const WITNESS_SEPARATOR: &str = "-";
    pub const VARIANT_MARK: &str = "var";
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Style {
    pub superscript: bool,
    /// Biblical quotation.
    pub bold_italic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub text: String,
    pub style: Style,
}

impl Run {
    pub fn plain(text: impl Into<String>) -> Run {
        Run {
            text: text.into(),
            style: Style::default(),
        }
    }

    pub fn superscript(text: impl Into<String>) -> Run {
        Run {
            text: text.into(),
            style: Style {
                superscript: true,
                bold_italic: false,
            },
        }
    }

    pub fn styled(text: impl Into<String>, style: Style) -> Run {
        Run {
            text: text.into(),
            style,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Block {
    pub depth: usize,
    pub runs: Vec<Run>,
}

impl Block {
    pub fn new(depth: usize) -> Block {
        Block { depth, runs: Vec::new() }
    }

    /// Appends a run, merging it into the previous one when styles match.
    pub fn push(&mut self, run: Run) {
        if run.text.is_empty() {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.style == run.style => last.text.push_str(&run.text),
            _ => self.runs.push(run),
        }
    }

    pub fn text(&self) -> String {
        self.runs.iter().map(|r| r.text.as_str()).collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub blocks: Vec<Block>,
}

impl Document {
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Plain,
    WordXml,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Plain => "txt",
            Format::WordXml => "xml",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "wordxml" => Ok(Format::WordXml),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Plain => "plain",
            Format::WordXml => "wordxml",
        })
    }
}

/// Renders a run with its markup: `^{…}` for superscript, `**…**` for
/// biblical quotations.
pub fn plain_run(run: &Run) -> String {
    let mut text = run.text.clone();
    if run.style.superscript {
        text = format!("^{{{text}}}");
    }
    if run.style.bold_italic {
        text = format!("**{text}**");
    }
    text
}

/// One tab per depth level, LF line endings.
pub fn serialize_plain(doc: &Document) -> String {
    let mut out = String::new();
    for block in &doc.blocks {
        for _ in 0..block.depth {
            out.push('\t');
        }
        for run in &block.runs {
            out.push_str(&plain_run(run));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_serializes_to_nothing() {
        assert_eq!(serialize_plain(&Document::default()), "");
    }

    #[test]
    fn superscript_markup() {
        let mut block = Block::new(0);
        block.push(Run::superscript("var"));
        let doc = Document { blocks: vec![block] };
        assert_eq!(serialize_plain(&doc), "^{var}\n");
    }

    #[test]
    fn depth_and_styles() {
        let mut block = Block::new(2);
        block.push(Run::plain("a"));
        block.push(Run::plain("b"));
        block.push(Run::styled(
            "q",
            Style {
                superscript: false,
                bold_italic: true,
            },
        ));
        assert_eq!(block.runs.len(), 2);
        let doc = Document { blocks: vec![block] };
        assert_eq!(serialize_plain(&doc), "\t\tab**q**\n");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("plain".parse::<Format>(), Ok(Format::Plain));
        assert_eq!("wordxml".parse::<Format>(), Ok(Format::WordXml));
        assert!("docx".parse::<Format>().is_err());
    }
}
