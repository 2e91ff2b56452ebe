//! The annotation table: a 20-column TSV (columns A..T) with an optional
//! 21st field of style flags. Blank records separate adjacent phrase groups.

use std::fmt;

use thiserror::Error;

use crate::address::{parse_address, Address};
use crate::sigla::{Language, SideConfig, Sigla, SiglaConfig};

pub const FIELD_COUNT: usize = 20;
/// Omission in a main-text word column.
pub const OMISSION: &str = "om.";
/// Omission inside a variant cell.
pub const OMITTED_FORM: &str = "Ø";
/// First-sublemma marker for a word with a purely grammatical value.
pub const GRAMM: &str = "gramm.";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct StyleFlags {
    pub slav_group: bool,
    pub greek_group: bool,
    pub biblical_quote: bool,
}

impl StyleFlags {
    pub fn group(&self, side: Language) -> bool {
        match side {
            Language::Slavonic => self.slav_group,
            Language::Greek => self.greek_group,
        }
    }

    fn parse(field: &str) -> Result<StyleFlags, String> {
        let mut flags = StyleFlags::default();
        for token in field.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            match token {
                "sg" => flags.slav_group = true,
                "gg" => flags.greek_group = true,
                "bq" => flags.biblical_quote = true,
                other => return Err(other.to_string()),
            }
        }
        Ok(flags)
    }

    fn serialize(&self) -> String {
        let mut tokens = Vec::new();
        if self.slav_group {
            tokens.push("sg");
        }
        if self.greek_group {
            tokens.push("gg");
        }
        if self.biblical_quote {
            tokens.push("bq");
        }
        tokens.join(";")
    }

    fn is_empty(&self) -> bool {
        *self == StyleFlags::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Form {
    Word(String),
    Omitted,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Word(w) => f.write_str(w),
            Form::Omitted => f.write_str(OMITTED_FORM),
        }
    }
}

/// One witness group's reading in a variant cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariantReading {
    pub form: Form,
    pub sigla: Sigla,
    /// Lemma, first and second sublemma (empty when absent).
    pub lemmas: [String; 3],
}

impl VariantReading {
    pub fn is_omitted(&self) -> bool {
        self.form == Form::Omitted
    }

    /// Lemma followed by its sublemmas, stopping at the first empty slot.
    pub fn lemma_chain(&self) -> Vec<String> {
        self.lemmas.iter().take_while(|l| !l.is_empty()).cloned().collect()
    }

    pub fn is_lemmatised(&self) -> bool {
        !self.is_omitted() && !self.lemmas[0].is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariantError {
    #[error("unknown siglum {0}")]
    UnknownSiglum(String),
    #[error("reading `{0}` has no sigla")]
    MissingSigla(String),
    #[error("sigla {0} without a reading")]
    OrphanSigla(String),
    #[error("lemma cell has {parts} part(s) for {readings} reading(s)")]
    LemmaCount { parts: usize, readings: usize },
    #[error("lemma part `{0}` matches no reading by sigla")]
    LemmaSigla(String),
}

/// The cells of one language side of a row.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SideCells {
    pub word: String,
    pub lemma: String,
    pub sublemmas: [String; 3],
    pub variant_word: String,
    pub variant_lemmas: [String; 3],
    pub variants: Vec<VariantReading>,
}

impl SideCells {
    pub fn is_omission(&self) -> bool {
        self.word == OMISSION
    }

    /// A main-text word that is neither empty nor an omission.
    pub fn has_word(&self) -> bool {
        !self.word.is_empty() && !self.is_omission()
    }

    pub fn is_gramm(&self) -> bool {
        self.sublemmas[0] == GRAMM
    }

    pub fn sublemma_chain(&self) -> Vec<String> {
        self.sublemmas.iter().take_while(|s| !s.is_empty()).cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// 1-based line number in the input.
    pub line: usize,
    pub address_text: String,
    pub address: Option<Address>,
    /// Carried for the annotators; not consumed.
    pub context: String,
    pub slav: SideCells,
    pub greek: SideCells,
    pub flags: StyleFlags,
}

impl Row {
    pub fn side(&self, language: Language) -> &SideCells {
        match language {
            Language::Slavonic => &self.slav,
            Language::Greek => &self.greek,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Record {
    Row(Row),
    /// Group separator.
    Blank { line: usize },
}

impl Record {
    pub fn as_row(&self) -> Option<&Row> {
        match self {
            Record::Row(r) => Some(r),
            Record::Blank { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub row: usize,
    pub column: Option<char>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let column = self.column.map_or_else(|| "-".to_string(), |c| c.to_string());
        write!(f, "{}\t{}\t{}\t{}", self.severity, self.row, column, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl Diagnostics {
    pub fn push(&mut self, severity: Severity, row: usize, column: Option<char>, message: impl Into<String>) {
        self.0.push(Diagnostic {
            severity,
            row,
            column,
            message: message.into(),
        });
    }

    pub fn error(&mut self, row: usize, column: Option<char>, message: impl Into<String>) {
        self.push(Severity::Error, row, column, message);
    }

    pub fn warning(&mut self, row: usize, column: Option<char>, message: impl Into<String>) {
        self.push(Severity::Warning, row, column, message);
    }

    /// Stable sort by (row, column).
    pub fn sort(&mut self) {
        self.0.sort_by_key(|d| (d.row, d.column));
    }

    pub fn has_errors(&self) -> bool {
        self.0.iter().any(|d| d.severity == Severity::Error)
    }

    pub fn has_warnings(&self) -> bool {
        self.0.iter().any(|d| d.severity == Severity::Warning)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Diagnostic> {
        self.0.iter()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub records: Vec<Record>,
    /// Problems found while reading the input.
    pub diagnostics: Diagnostics,
}

impl Table {
    pub fn rows(&self) -> impl Iterator<Item = &Row> {
        self.records.iter().filter_map(Record::as_row)
    }

    /// Exchanges the two language sides, including their group flags.
    pub fn swap_sides(&self) -> Table {
        let records = self
            .records
            .iter()
            .map(|r| match r {
                Record::Row(row) => Record::Row(Row {
                    slav: row.greek.clone(),
                    greek: row.slav.clone(),
                    flags: StyleFlags {
                        slav_group: row.flags.greek_group,
                        greek_group: row.flags.slav_group,
                        biblical_quote: row.flags.biblical_quote,
                    },
                    ..row.clone()
                }),
                blank => blank.clone(),
            })
            .collect();
        Table {
            records,
            diagnostics: self.diagnostics.clone(),
        }
    }
}

/// Column letters of one side's cells.
#[derive(Debug, Clone, Copy)]
pub struct Columns {
    pub variant_word: char,
    pub variant_lemmas: [char; 3],
    pub word: char,
    pub lemma: char,
    pub sublemmas: [char; 3],
}

pub const SLAVONIC_COLUMNS: Columns = Columns {
    variant_word: 'A',
    variant_lemmas: ['B', 'C', 'D'],
    word: 'F',
    lemma: 'H',
    sublemmas: ['I', 'J', 'K'],
};

pub const GREEK_COLUMNS: Columns = Columns {
    variant_word: 'Q',
    variant_lemmas: ['R', 'S', 'T'],
    word: 'L',
    lemma: 'M',
    sublemmas: ['N', 'O', 'P'],
};

pub fn columns(language: Language) -> Columns {
    match language {
        Language::Slavonic => SLAVONIC_COLUMNS,
        Language::Greek => GREEK_COLUMNS,
    }
}

const FLAGS_COLUMN: char = 'U';
const ADDRESS_COLUMN: char = 'E';

fn col_index(letter: char) -> usize {
    (letter as u8 - b'A') as usize
}

fn looks_like_siglum(token: &str) -> bool {
    token.chars().next().is_some_and(|c| c.is_ascii_uppercase())
        && token.chars().all(|c| c.is_ascii_alphabetic())
}

/// Parses a variant word cell: `reading SIGLA ( ["/"] reading SIGLA )*`,
/// with `Ø` standing for an omission. Lemmas are attached separately.
pub fn parse_variant_cell(
    cell: &str,
    side: Language,
    config: &SiglaConfig,
) -> Result<Vec<VariantReading>, VariantError> {
    let side_cfg = config.side(side);
    let spaced = cell.replace('/', " / ");
    let mut readings = Vec::new();
    let mut words: Vec<&str> = Vec::new();
    for token in spaced.split_whitespace() {
        if token == "/" {
            if !words.is_empty() {
                return Err(dangling(&words, side_cfg));
            }
            continue;
        }
        if let Some(sigla) = side_cfg.segment(token) {
            if words.is_empty() {
                return Err(VariantError::OrphanSigla(sigla.to_string()));
            }
            let form = if words == [OMITTED_FORM] {
                Form::Omitted
            } else {
                Form::Word(words.join(" "))
            };
            readings.push(VariantReading {
                form,
                sigla,
                lemmas: Default::default(),
            });
            words.clear();
        } else {
            words.push(token);
        }
    }
    if !words.is_empty() {
        return Err(dangling(&words, side_cfg));
    }
    Ok(readings)
}

fn dangling(words: &[&str], side_cfg: &SideConfig) -> VariantError {
    match words.last() {
        Some(last) if looks_like_siglum(last) && !side_cfg.knows(last) => {
            VariantError::UnknownSiglum(last.to_string())
        }
        _ => VariantError::MissingSigla(words.join(" ")),
    }
}

/// Attaches the `/`-separated lemma cells to already parsed readings.
/// Parts may carry trailing sigla, in which case they are matched by sigla;
/// otherwise they are matched by position. Returns warnings.
pub fn attach_variant_lemmas(
    readings: &mut [VariantReading],
    cells: [&str; 3],
    side_cfg: &SideConfig,
) -> Result<Vec<String>, VariantError> {
    let mut warnings = Vec::new();
    for (slot, cell) in cells.iter().enumerate() {
        if cell.trim().is_empty() {
            continue;
        }
        let parts: Vec<(String, Option<Sigla>)> = cell
            .split('/')
            .map(|part| {
                let part = part.trim();
                match part.rsplit_once(char::is_whitespace) {
                    Some((text, last)) => match side_cfg.segment(last) {
                        Some(sigla) => (text.trim().to_string(), Some(sigla)),
                        None => (part.to_string(), None),
                    },
                    None => (part.to_string(), None),
                }
            })
            .collect();
        if parts.iter().any(|(_, s)| s.is_some()) {
            for (text, sigla) in parts {
                let target = sigla
                    .as_ref()
                    .and_then(|s| readings.iter_mut().find(|r| &r.sigla == s))
                    .ok_or_else(|| VariantError::LemmaSigla(text.clone()))?;
                if target.is_omitted() {
                    warnings.push(format!("lemmatised variant `{text}` ignored: reading is omitted"));
                } else {
                    target.lemmas[slot] = text;
                }
            }
            continue;
        }
        let present = readings.iter().filter(|r| !r.is_omitted()).count();
        if parts.len() == present {
            for (reading, (text, _)) in readings.iter_mut().filter(|r| !r.is_omitted()).zip(parts) {
                reading.lemmas[slot] = text;
            }
        } else if parts.len() == readings.len() {
            for (reading, (text, _)) in readings.iter_mut().zip(parts) {
                if reading.is_omitted() {
                    if !text.is_empty() {
                        warnings.push(format!("lemmatised variant `{text}` ignored: reading is omitted"));
                    }
                } else {
                    reading.lemmas[slot] = text;
                }
            }
        } else {
            return Err(VariantError::LemmaCount {
                parts: parts.len(),
                readings: present,
            });
        }
    }
    Ok(warnings)
}

fn side_cells(fields: &[&str], cols: Columns) -> SideCells {
    let get = |c: char| fields[col_index(c)].trim().to_string();
    SideCells {
        word: get(cols.word),
        lemma: get(cols.lemma),
        sublemmas: cols.sublemmas.map(get),
        variant_word: get(cols.variant_word),
        variant_lemmas: cols.variant_lemmas.map(get),
        variants: Vec::new(),
    }
}

/// Reads the TSV dialect. Malformed records are reported and skipped.
pub fn parse_table(input: &str, config: &SiglaConfig) -> Table {
    let mut table = Table::default();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() {
            table.records.push(Record::Blank { line });
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != FIELD_COUNT && fields.len() != FIELD_COUNT + 1 {
            table.diagnostics.error(
                line,
                None,
                format!("field count {} ≠ {FIELD_COUNT}", fields.len()),
            );
            continue;
        }
        let flags = match StyleFlags::parse(fields.get(FIELD_COUNT).copied().unwrap_or("")) {
            Ok(flags) => flags,
            Err(token) => {
                table
                    .diagnostics
                    .error(line, Some(FLAGS_COLUMN), format!("invalid flag token `{token}`"));
                continue;
            }
        };
        let address_text = fields[col_index(ADDRESS_COLUMN)].trim().to_string();
        let mut row = Row {
            line,
            address: parse_address(&address_text).ok(),
            address_text,
            context: fields[col_index('G')].to_string(),
            slav: side_cells(&fields, SLAVONIC_COLUMNS),
            greek: side_cells(&fields, GREEK_COLUMNS),
            flags,
        };
        for language in [Language::Slavonic, Language::Greek] {
            let cols = columns(language);
            let cells = match language {
                Language::Slavonic => &mut row.slav,
                Language::Greek => &mut row.greek,
            };
            let parsed = parse_variant_cell(&cells.variant_word, language, config)
                .map_err(|e| (cols.variant_word, e))
                .and_then(|mut readings| {
                let lemma_cells = [
                    cells.variant_lemmas[0].as_str(),
                    cells.variant_lemmas[1].as_str(),
                    cells.variant_lemmas[2].as_str(),
                ];
                let warnings = attach_variant_lemmas(&mut readings, lemma_cells, config.side(language))
                    .map_err(|e| (cols.variant_lemmas[0], e))?;
                Ok((readings, warnings))
            });
            match parsed {
                Ok((readings, warnings)) => {
                    cells.variants = readings;
                    for w in warnings {
                        table.diagnostics.warning(line, Some(cols.variant_lemmas[0]), w);
                    }
                }
                Err((col, e)) => table.diagnostics.error(line, Some(col), e.to_string()),
            }
        }
        table.records.push(Record::Row(row));
    }
    table.diagnostics.sort();
    table
}

/// Writes a table back in the TSV dialect.
pub fn serialize_table(table: &Table) -> String {
    let mut out = String::new();
    for record in &table.records {
        match record {
            Record::Blank { .. } => {}
            Record::Row(row) => {
                let mut fields = vec![String::new(); FIELD_COUNT];
                for (cells, cols) in [(&row.slav, SLAVONIC_COLUMNS), (&row.greek, GREEK_COLUMNS)] {
                    fields[col_index(cols.word)] = cells.word.clone();
                    fields[col_index(cols.lemma)] = cells.lemma.clone();
                    fields[col_index(cols.variant_word)] = cells.variant_word.clone();
                    for k in 0..3 {
                        fields[col_index(cols.sublemmas[k])] = cells.sublemmas[k].clone();
                        fields[col_index(cols.variant_lemmas[k])] = cells.variant_lemmas[k].clone();
                    }
                }
                fields[col_index(ADDRESS_COLUMN)] = row.address_text.clone();
                fields[col_index('G')] = row.context.clone();
                if !row.flags.is_empty() {
                    fields.push(row.flags.serialize());
                }
                out.push_str(&fields.join("\t"));
            }
        }
        out.push('\n');
    }
    out
}
