//! Text locators of the form `sermon/[witness]page column line[rep]`, with
//! optional line spans (`10/59a12-13`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Witness sigla in the order used to sort prefixed addresses.
const WITNESS_ORDER: [&str; 4] = ["S", "W", "G", "H"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AddressError {
    #[error("empty address")]
    Empty,
    #[error("invalid {component} in address `{text}`")]
    Component { component: &'static str, text: String },
    #[error("span end `{end}` does not follow start `{start}`")]
    SpanOrder { start: String, end: String },
}

fn component_err(component: &'static str, text: &str) -> AddressError {
    AddressError::Component {
        component,
        text: text.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Address {
    pub sermon: u32,
    pub witness_prefix: Option<String>,
    pub page: u32,
    /// `a`..=`d`
    pub column: char,
    pub line: u32,
    /// Counter for the n-th repetition of a word on the same line; the first
    /// occurrence is unmarked so this is always >= 2.
    pub repetition: Option<u32>,
    pub span_end: Option<Box<Address>>,
}

impl Address {
    pub fn point(sermon: u32, page: u32, column: char, line: u32) -> Self {
        Address {
            sermon,
            witness_prefix: None,
            page,
            column,
            line,
            repetition: None,
            span_end: None,
        }
    }

    pub fn with_witness(mut self, witness: &str) -> Self {
        self.witness_prefix = Some(witness.to_string());
        self
    }

    /// The start position, without any span.
    pub fn start(&self) -> Address {
        Address {
            span_end: None,
            ..self.clone()
        }
    }

    /// The last position covered: the span end or the address itself.
    pub fn end(&self) -> Address {
        match &self.span_end {
            Some(end) => (**end).clone(),
            None => self.start(),
        }
    }

    pub fn is_span(&self) -> bool {
        self.span_end.is_some()
    }

    /// Smallest address covering every input; collapses to a point when all
    /// inputs coincide.
    pub fn covering<'a, I>(addresses: I) -> Option<Address>
    where
        I: IntoIterator<Item = &'a Address>,
    {
        let mut start: Option<Address> = None;
        let mut end: Option<Address> = None;
        for a in addresses {
            let s = a.start();
            let e = a.end();
            if start.as_ref().is_none_or(|cur| position_cmp(&s, cur).is_lt()) {
                start = Some(s);
            }
            if end.as_ref().is_none_or(|cur| position_cmp(&e, cur).is_gt()) {
                end = Some(e);
            }
        }
        let mut start = start?;
        let end = end?;
        if position_cmp(&end, &start).is_gt() {
            start.span_end = Some(Box::new(end));
        }
        Some(start)
    }

    /// True when the span leaves the page it starts on.
    pub fn crosses_page(&self) -> bool {
        match &self.span_end {
            Some(end) => {
                end.sermon != self.sermon
                    || end.witness_prefix != self.witness_prefix
                    || end.page != self.page
            }
            None => false,
        }
    }
}

fn witness_rank(w: &Option<String>) -> (u8, usize, String) {
    match w {
        None => (0, 0, String::new()),
        Some(s) => match WITNESS_ORDER.iter().position(|k| k == s) {
            Some(i) => (1, i, String::new()),
            None => (1, WITNESS_ORDER.len(), s.clone()),
        },
    }
}

/// Compares two positions ignoring spans.
fn position_cmp(a: &Address, b: &Address) -> Ordering {
    a.sermon
        .cmp(&b.sermon)
        .then_with(|| witness_rank(&a.witness_prefix).cmp(&witness_rank(&b.witness_prefix)))
        .then_with(|| a.page.cmp(&b.page))
        .then_with(|| a.column.cmp(&b.column))
        .then_with(|| a.line.cmp(&b.line))
        .then_with(|| a.repetition.unwrap_or(1).cmp(&b.repetition.unwrap_or(1)))
}

impl Ord for Address {
    fn cmp(&self, other: &Self) -> Ordering {
        position_cmp(self, other).then_with(|| match (&self.span_end, &other.span_end) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b),
        })
    }
}

impl PartialOrd for Address {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total document order on addresses.
pub fn compare(a: &Address, b: &Address) -> Ordering {
    a.cmp(b)
}

fn fmt_line(f: &mut fmt::Formatter<'_>, a: &Address) -> fmt::Result {
    write!(f, "{}", a.line)?;
    if let Some(rep) = a.repetition {
        write!(f, "[{rep}]")?;
    }
    Ok(())
}

fn fmt_page(f: &mut fmt::Formatter<'_>, a: &Address) -> fmt::Result {
    if let Some(w) = &a.witness_prefix {
        f.write_str(w)?;
    }
    write!(f, "{}{}", a.page, a.column)?;
    fmt_line(f, a)
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/", self.sermon)?;
        fmt_page(f, self)?;
        if let Some(end) = &self.span_end {
            f.write_str("-")?;
            let lost_witness = end.witness_prefix.is_none() && self.witness_prefix.is_some();
            if end.sermon != self.sermon || lost_witness {
                write!(f, "{}/", end.sermon)?;
                fmt_page(f, end)?;
            } else if end.witness_prefix != self.witness_prefix || end.page != self.page {
                fmt_page(f, end)?;
            } else if end.column != self.column {
                write!(f, "{}", end.column)?;
                fmt_line(f, end)?;
            } else {
                fmt_line(f, end)?;
            }
        }
        Ok(())
    }
}

/// Renders an address in the canonical grammar.
pub fn format(a: &Address) -> String {
    a.to_string()
}

struct Cursor<'a> {
    text: &'a str,
    rest: &'a str,
}

impl<'a> Cursor<'a> {
    fn digits(&mut self, component: &'static str) -> Result<u32, AddressError> {
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest.len());
        let (num, rest) = self.rest.split_at(end);
        let value: u32 = num.parse().map_err(|_| component_err(component, self.text))?;
        if value == 0 {
            return Err(component_err(component, self.text));
        }
        self.rest = rest;
        Ok(value)
    }

    fn letters(&mut self) -> &'a str {
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest.len());
        let (w, rest) = self.rest.split_at(end);
        self.rest = rest;
        w
    }

    fn column(&mut self) -> Result<char, AddressError> {
        match self.rest.chars().next() {
            Some(c @ 'a'..='d') => {
                self.rest = &self.rest[1..];
                Ok(c)
            }
            _ => Err(component_err("column", self.text)),
        }
    }

    fn line_and_rep(&mut self) -> Result<(u32, Option<u32>), AddressError> {
        let line = self.digits("line")?;
        let rep = if let Some(inner) = self.rest.strip_prefix('[') {
            let close = inner
                .find(']')
                .ok_or_else(|| component_err("repetition", self.text))?;
            let n: u32 = inner[..close]
                .parse()
                .map_err(|_| component_err("repetition", self.text))?;
            if n < 2 {
                return Err(component_err("repetition", self.text));
            }
            self.rest = &inner[close + 1..];
            Some(n)
        } else {
            None
        };
        Ok((line, rep))
    }

    /// `[witness] page column line [rep]`
    fn page_part(&mut self, sermon: u32) -> Result<Address, AddressError> {
        let witness = self.letters();
        let page = self.digits("page")?;
        let column = self.column()?;
        let (line, repetition) = self.line_and_rep()?;
        Ok(Address {
            sermon,
            witness_prefix: (!witness.is_empty()).then(|| witness.to_string()),
            page,
            column,
            line,
            repetition,
            span_end: None,
        })
    }
}

fn parse_point(text: &str, whole: &str) -> Result<Address, AddressError> {
    let (sermon, rest) = text
        .split_once('/')
        .ok_or_else(|| component_err("sermon", whole))?;
    let mut cur = Cursor { text: whole, rest: sermon };
    let sermon = cur.digits("sermon")?;
    if !cur.rest.is_empty() {
        return Err(component_err("sermon", whole));
    }
    let mut cur = Cursor { text: whole, rest };
    let a = cur.page_part(sermon)?;
    if !cur.rest.is_empty() {
        return Err(component_err("line", whole));
    }
    Ok(a)
}

fn parse_end(start: &Address, text: &str, whole: &str) -> Result<Address, AddressError> {
    if text.contains('/') {
        return parse_point(text, whole);
    }
    let mut cur = Cursor { text: whole, rest: text };
    let end = if text.starts_with(|c: char| c.is_ascii_digit()) {
        // line only, or page + column + line
        let digits_end = text.find(|c: char| !c.is_ascii_digit()).unwrap_or(text.len());
        if text[digits_end..].starts_with(|c: char| ('a'..='d').contains(&c)) {
            let mut a = cur.page_part(start.sermon)?;
            a.witness_prefix = start.witness_prefix.clone();
            a
        } else {
            let (line, repetition) = cur.line_and_rep()?;
            Address {
                line,
                repetition,
                span_end: None,
                ..start.clone()
            }
        }
    } else if text.starts_with(|c: char| ('a'..='d').contains(&c))
        && text[1..].starts_with(|c: char| c.is_ascii_digit())
    {
        let column = cur.column()?;
        let (line, repetition) = cur.line_and_rep()?;
        Address {
            column,
            line,
            repetition,
            span_end: None,
            ..start.clone()
        }
    } else {
        cur.page_part(start.sermon)?
    };
    if !cur.rest.is_empty() {
        return Err(component_err("span end", whole));
    }
    Ok(end)
}

/// Parses `sermon "/" [witness] page column line ["[" rep "]"] ["-" end]`.
pub fn parse_address(text: &str) -> Result<Address, AddressError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(AddressError::Empty);
    }
    let (start_text, end_text) = match text.split_once('-') {
        Some((s, e)) => (s, Some(e)),
        None => (text, None),
    };
    let mut start = parse_point(start_text, text)?;
    if let Some(end_text) = end_text {
        let end = parse_end(&start, end_text, text)?;
        if position_cmp(&end, &start).is_le() {
            return Err(AddressError::SpanOrder {
                start: start.to_string(),
                end: end_text.to_string(),
            });
        }
        start.span_end = Some(Box::new(end));
    }
    Ok(start)
}

impl FromStr for Address {
    type Err = AddressError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_address(s)
    }
}
