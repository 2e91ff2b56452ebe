//! Adaptation: turns the table into direction-specific rows, each holding
//! everything one dictionary entry needs. Phrase groups, grammatical-value
//! rows, omissions and variant combinations are resolved here so that the
//! aggregation step only has to file rows away.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::address::Address;
use crate::sigla::{Language, Sigla, SiglaConfig};
use crate::table::{Record, Row, SideCells, Table, OMISSION};
use crate::usage::{AltReading, Alternative, Occurrence, Source, Usage};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    SlavonicToGreek,
    GreekToSlavonic,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::SlavonicToGreek, Direction::GreekToSlavonic];

    /// The side whose lemmas head the entries.
    pub fn indexed(self) -> Language {
        match self {
            Direction::SlavonicToGreek => Language::Slavonic,
            Direction::GreekToSlavonic => Language::Greek,
        }
    }

    pub fn counterpart(self) -> Language {
        self.indexed().other()
    }

    /// Short code used in output file names.
    pub fn code(self) -> &'static str {
        match self {
            Direction::SlavonicToGreek => "slgr",
            Direction::GreekToSlavonic => "grsl",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "slgr" => Ok(Direction::SlavonicToGreek),
            "grsl" => Ok(Direction::GreekToSlavonic),
            other => Err(format!("unknown direction `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdaptError {
    #[error("line {line}: unparsable address `{text}`")]
    Address { line: usize, text: String },
    #[error("line {line}: gramm. row has no grammatical label")]
    MissingLabel { line: usize },
}

/// A run of consecutive rows joined on one side, or a single ungrouped row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowGroup {
    pub side: Language,
    /// Record indices.
    pub rows: Vec<usize>,
}

/// Rows that must be adapted together: the union of overlapping groups of
/// both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub rows: Vec<usize>,
}

/// The other side of an alignment as seen from the indexed word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CounterpartRef {
    /// Most specific sublemma first, ending at the lemma level.
    pub lemma_chain: Vec<String>,
    pub decomposition: Option<Vec<String>>,
    pub surface: String,
    pub sigla: Sigla,
    pub is_main: bool,
    pub grammatical: bool,
    pub alternatives: Alternative,
    pub occurrence: Occurrence,
}

impl CounterpartRef {
    fn omitted(siglum: &str, occurrence: Occurrence) -> Self {
        CounterpartRef {
            lemma_chain: vec![OMISSION.to_string()],
            decomposition: None,
            surface: OMISSION.to_string(),
            sigla: Sigla::single(siglum),
            is_main: true,
            grammatical: false,
            alternatives: Alternative::default(),
            occurrence,
        }
    }

    pub fn to_usage(&self, language: Language, repetition: Option<u32>) -> Usage {
        let mut levels = self.lemma_chain.iter().rev();
        let lemma = levels.next().cloned().unwrap_or_default();
        Usage {
            word: self.surface.clone(),
            lemma,
            sublemmas: levels.cloned().collect(),
            language,
            repetition,
            source: Source {
                sigla: self.sigla.clone(),
                is_main: self.is_main,
            },
            alternatives: self.alternatives.clone(),
            decomposition: self.decomposition.clone(),
            grammatical: self.grammatical,
            occurrence: self.occurrence,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdaptedRow {
    pub indexed_usage: Usage,
    pub counterpart: CounterpartRef,
    pub address: Address,
    pub biblical_quote: bool,
}

/// Finds phrase groups on both sides. Blank records always end a group.
pub fn group_rows(table: &Table) -> Vec<RowGroup> {
    let mut groups = Vec::new();
    for side in [Language::Slavonic, Language::Greek] {
        let mut current: Vec<usize> = Vec::new();
        let flush = |current: &mut Vec<usize>, groups: &mut Vec<RowGroup>| {
            if !current.is_empty() {
                groups.push(RowGroup {
                    side,
                    rows: std::mem::take(current),
                });
            }
        };
        for (i, record) in table.records.iter().enumerate() {
            match record {
                Record::Blank { .. } => flush(&mut current, &mut groups),
                Record::Row(row) if row.flags.group(side) => current.push(i),
                Record::Row(_) => {
                    flush(&mut current, &mut groups);
                    groups.push(RowGroup { side, rows: vec![i] });
                }
            }
        }
        flush(&mut current, &mut groups);
    }
    groups.sort_by_key(|g| (g.rows[0], g.side));
    groups
}

/// Merges overlapping groups of both sides into adaptation units.
pub fn units(table: &Table) -> Vec<Unit> {
    let mut spans: Vec<(usize, usize)> = group_rows(table)
        .iter()
        .map(|g| (g.rows[0], *g.rows.last().unwrap()))
        .collect();
    spans.sort();
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for (start, end) in spans {
        match merged.last_mut() {
            Some((_, last_end)) if start <= *last_end => *last_end = (*last_end).max(end),
            _ => merged.push((start, end)),
        }
    }
    merged
        .into_iter()
        .map(|(start, end)| Unit {
            rows: (start..=end).collect(),
        })
        .collect()
}

/// Adapts the whole table for one direction.
pub fn adapt(table: &Table, direction: Direction, config: &SiglaConfig) -> Result<Vec<AdaptedRow>, AdaptError> {
    let mut out = Vec::new();
    for unit in units(table) {
        out.extend(expand_variants(table, &unit, direction, config)?);
    }
    Ok(out)
}

fn main_siglum<'a>(row: &'a Row, language: Language, config: &'a SiglaConfig) -> &'a str {
    let side = config.side(language);
    match &row.address.as_ref().and_then(|a| a.witness_prefix.as_deref()) {
        Some(prefix) if side.knows(prefix) => prefix,
        _ => side.main(),
    }
}

fn joined_words(rows: &[(usize, &Row)], language: Language) -> String {
    rows.iter()
        .map(|(_, r)| r.side(language))
        .filter(|c| c.has_word())
        .map(|c| c.word.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

fn is_member(cells: &SideCells) -> bool {
    cells.has_word() && !cells.lemma.is_empty()
}

/// A grammatical label sits in a lemma column whose word cell is empty,
/// on a row where the other side carries `gramm.`.
fn is_label(row: &Row, language: Language) -> bool {
    let cells = row.side(language);
    row.side(language.other()).is_gramm() && cells.word.is_empty() && !cells.lemma.is_empty()
}

/// Sublemmas shared by a phrase: taken from the first lexical member that
/// has any.
fn phrase_sublemmas(rows: &[(usize, &Row)], language: Language) -> Vec<String> {
    rows.iter()
        .map(|(_, r)| r.side(language))
        .filter(|c| is_member(c) && !c.is_gramm())
        .map(SideCells::sublemma_chain)
        .find(|chain| !chain.is_empty())
        .unwrap_or_default()
}

/// A candidate reading on one side of a unit.
#[derive(Clone)]
struct Reading {
    chain: Vec<String>,
    decomposition: Option<Vec<String>>,
    surface: String,
    sigla: Sigla,
    is_main: bool,
    occurrence: Occurrence,
    alternatives: Alternative,
}

impl Reading {
    fn alt(&self) -> AltReading {
        AltReading {
            surface: self.surface.clone(),
            chain: self.chain.clone(),
            sigla: self.sigla.clone(),
        }
    }

    fn into_usage(self, language: Language, repetition: Option<u32>) -> Usage {
        let mut chain = self.chain.into_iter();
        Usage {
            word: self.surface,
            lemma: chain.next().unwrap_or_default(),
            sublemmas: chain.collect(),
            language,
            repetition,
            source: Source {
                sigla: self.sigla,
                is_main: self.is_main,
            },
            alternatives: self.alternatives,
            decomposition: self.decomposition,
            grammatical: false,
            occurrence: self.occurrence,
        }
    }

    fn into_counterpart(self) -> CounterpartRef {
        let mut lemma_chain = self.chain;
        lemma_chain.reverse();
        CounterpartRef {
            lemma_chain,
            decomposition: self.decomposition,
            surface: self.surface,
            sigla: self.sigla,
            is_main: self.is_main,
            grammatical: false,
            alternatives: self.alternatives,
            occurrence: self.occurrence,
        }
    }
}

/// Fills in the alternatives of each reading from the others in the list.
fn cross_reference(readings: &mut [Reading]) {
    let alts: Vec<(bool, AltReading)> = readings.iter().map(|r| (r.is_main, r.alt())).collect();
    for (i, reading) in readings.iter_mut().enumerate() {
        let others = alts.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, a)| a);
        let mut alternatives = Alternative::default();
        for (is_main, alt) in others {
            if *is_main {
                if !reading.is_main {
                    alternatives.main = Some(alt.clone());
                }
            } else {
                alternatives.var.push(alt.clone());
            }
        }
        reading.alternatives = alternatives;
    }
}

/// Counterpart readings of a unit: the main phrase or word, then every
/// lemmatised variant reading.
fn counterpart_readings(rows: &[(usize, &Row)], language: Language, config: &SiglaConfig) -> Vec<Reading> {
    let mut readings = Vec::new();
    let members: Vec<&(usize, &Row)> = rows
        .iter()
        .filter(|(_, r)| is_member(r.side(language)) && !r.side(language).is_gramm())
        .collect();
    if let Some((first, first_row)) = members.first() {
        let (chain, decomposition) = if members.len() == 1 {
            let cells = first_row.side(language);
            let mut chain = vec![cells.lemma.clone()];
            chain.extend(cells.sublemma_chain());
            (chain, None)
        } else {
            let lemmas: Vec<String> = members.iter().map(|(_, r)| r.side(language).lemma.clone()).collect();
            let mut chain = vec![lemmas.join(" & ")];
            chain.extend(phrase_sublemmas(rows, language));
            (chain, Some(lemmas))
        };
        readings.push(Reading {
            chain,
            decomposition,
            surface: joined_words(rows, language),
            sigla: Sigla::single(main_siglum(first_row, language, config)),
            is_main: true,
            occurrence: Occurrence {
                record: *first,
                reading: 0,
            },
            alternatives: Alternative::default(),
        });
    }
    for (record, row) in rows {
        for (i, v) in row.side(language).variants.iter().enumerate() {
            if v.is_lemmatised() {
                readings.push(Reading {
                    chain: v.lemma_chain(),
                    decomposition: None,
                    surface: v.form.to_string(),
                    sigla: v.sigla.clone(),
                    is_main: false,
                    occurrence: Occurrence {
                        record: *record,
                        reading: i + 1,
                    },
                    alternatives: Alternative::default(),
                });
            }
        }
    }
    cross_reference(&mut readings);
    readings
}

/// Adapts one unit. Each lemmatised reading on the indexed side is paired
/// with counterpart readings: a reading pairs with the other side's main
/// reading when there is one and with every other-side reading otherwise;
/// the resulting pair set is the union of both sides' view.
pub fn expand_variants(
    table: &Table,
    unit: &Unit,
    direction: Direction,
    config: &SiglaConfig,
) -> Result<Vec<AdaptedRow>, AdaptError> {
    let x = direction.indexed();
    let y = direction.counterpart();
    let rows: Vec<(usize, &Row)> = unit
        .rows
        .iter()
        .filter_map(|&i| table.records[i].as_row().map(|r| (i, r)))
        .collect();
    let mut addresses = Vec::with_capacity(rows.len());
    for (_, row) in &rows {
        let address = row.address.as_ref().ok_or_else(|| AdaptError::Address {
            line: row.line,
            text: row.address_text.clone(),
        })?;
        addresses.push(address);
    }
    let Some(address) = Address::covering(addresses.iter().copied()) else {
        return Ok(Vec::new());
    };
    let biblical_quote = rows.iter().any(|(_, r)| r.flags.biblical_quote);
    let x_surface = joined_words(&rows, x);
    let y_surface = joined_words(&rows, y);
    let x_phrase_subs = phrase_sublemmas(&rows, x);
    let y_readings = counterpart_readings(&rows, y, config);
    let y_has_main = y_readings.iter().any(|r| r.is_main);

    let mut out = Vec::new();
    for &(record, row) in &rows {
        let cells = row.side(x);
        let repetition = row.address.as_ref().and_then(|a| a.repetition);
        let x_main_sig = main_siglum(row, x, config);
        let y_main_sig = main_siglum(row, y, config);
        let here = Occurrence { record, reading: 0 };

        if is_label(row, x) {
            // pseudo-lemma: the label heads an entry pointing back at the
            // word that carries the grammatical value
            let other = row.side(y);
            let mut chain = vec![other.lemma.clone()];
            chain.extend(other.sublemma_chain());
            chain.reverse();
            let indexed = Usage {
                word: x_surface.clone(),
                lemma: cells.lemma.clone(),
                sublemmas: Vec::new(),
                language: x,
                repetition,
                source: Source::main(x_main_sig),
                alternatives: Alternative::default(),
                decomposition: None,
                grammatical: true,
                occurrence: here,
            };
            out.push(AdaptedRow {
                indexed_usage: indexed,
                counterpart: CounterpartRef {
                    lemma_chain: chain,
                    decomposition: None,
                    surface: y_surface.clone(),
                    sigla: Sigla::single(y_main_sig),
                    is_main: true,
                    grammatical: true,
                    alternatives: Alternative::default(),
                    occurrence: here,
                },
                address: address.clone(),
                biblical_quote,
            });
            continue;
        }

        let member = is_member(cells);
        let mut x_readings = Vec::new();
        if member {
            let mut chain = vec![cells.lemma.clone()];
            let own = cells.sublemma_chain();
            chain.extend(if own.is_empty() { x_phrase_subs.clone() } else { own });
            x_readings.push(Reading {
                chain,
                decomposition: None,
                surface: x_surface.clone(),
                sigla: Sigla::single(x_main_sig),
                is_main: true,
                occurrence: here,
                alternatives: Alternative::default(),
            });
        }
        for (i, v) in cells.variants.iter().enumerate() {
            if v.is_lemmatised() {
                x_readings.push(Reading {
                    chain: v.lemma_chain(),
                    decomposition: None,
                    surface: v.form.to_string(),
                    sigla: v.sigla.clone(),
                    is_main: false,
                    occurrence: Occurrence { record, reading: i + 1 },
                    alternatives: Alternative::default(),
                });
            }
        }
        cross_reference(&mut x_readings);
        // the main reading's cross-reference shows the word as written on
        // its own row rather than the whole phrase
        for r in x_readings.iter_mut() {
            if let Some(main) = r.alternatives.main.as_mut() {
                main.surface = cells.word.clone();
            }
        }

        for reading in x_readings {
            let x_is_main = reading.is_main;
            let usage = reading.into_usage(x, repetition);
            if x_is_main && cells.is_gramm() {
                let label = &row.side(y).lemma;
                if label.is_empty() {
                    return Err(AdaptError::MissingLabel { line: row.line });
                }
                out.push(AdaptedRow {
                    indexed_usage: Usage { grammatical: true, ..usage },
                    counterpart: CounterpartRef {
                        lemma_chain: vec![label.clone()],
                        decomposition: None,
                        surface: y_surface.clone(),
                        sigla: Sigla::single(y_main_sig),
                        is_main: true,
                        grammatical: true,
                        alternatives: Alternative::default(),
                        occurrence: here,
                    },
                    address: address.clone(),
                    biblical_quote,
                });
                continue;
            }
            if y_readings.is_empty() {
                out.push(AdaptedRow {
                    indexed_usage: usage,
                    counterpart: CounterpartRef::omitted(y_main_sig, here),
                    address: address.clone(),
                    biblical_quote,
                });
                continue;
            }
            for y_reading in &y_readings {
                let paired = y_reading.is_main || !y_has_main || x_is_main || !member;
                if !paired {
                    continue;
                }
                let counterpart = y_reading.clone().into_counterpart();
                out.push(AdaptedRow {
                    indexed_usage: usage.clone(),
                    counterpart,
                    address: address.clone(),
                    biblical_quote,
                });
            }
        }
    }
    Ok(out)
}
