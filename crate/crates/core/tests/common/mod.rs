//! Shared helpers for integration tests: a seeded generator of valid
//! annotation tables and a few plain-text helpers.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const FIELDS: usize = 20;

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn row(cells: &[(char, &str)], flags: &str) -> String {
    let mut fields = vec![String::new(); FIELDS];
    for (col, text) in cells {
        fields[(*col as u8 - b'A') as usize] = text.to_string();
    }
    if !flags.is_empty() {
        fields.push(flags.to_string());
    }
    fields.join("\t")
}

const SLAV_WORDS: &[(&str, &str)] = &[
    ("слово", "слово"),
    ("бога", "богъ"),
    ("дати", "дати"),
    ("закона", "законъ"),
    ("въ", "въ"),
    ("оу", "оу praep."),
    ("жизнь", "жизнь"),
    ("добро", "добро"),
    ("имоуща", "имѣти"),
    ("рече", "рещи"),
    ("ѥсть", "быти"),
    ("ѧзꙑкъ", "ѧзꙑкъ"),
    ("ѣсти", "ѣсти"),
    ("ѹмъ", "ѹмъ"),
    ("чловѣкъ", "чловѣкъ"),
    ("свѧтꙑи", "свѧтъ"),
    ("ѳеѡдоръ", "ѳеѡдоръ"),
    ("иночѧдꙑи", "иночѧдъ"),
    ("ѥдиночѧдꙑи", "ѥдиночѧдъ"),
    ("ѥдинородьнꙑи", "ѥдинородьнъ"),
];

const GREEK_WORDS: &[(&str, &str)] = &[
    ("λόγος", "λόγος"),
    ("θεοῦ", "θεός"),
    ("νόμον", "νόμος"),
    ("δοῦναι", "δίδωμι"),
    ("ἐν", "ἐν"),
    ("παρ'", "παρά"),
    ("ζωή", "ζωή"),
    ("εὐημερίας", "εὐημερία"),
    ("ἀπολαύοντας", "ἀπολαύω"),
    ("εἶπεν", "λέγω"),
    ("ἐστί", "εἰμί"),
    ("ἅγιος", "ἅγιος"),
    ("ἄνθρωπος", "ἄνθρωπος"),
    ("ψυχῆς", "ψυχή"),
    ("ᾠδή", "ᾠδή"),
    ("ῥῆμα", "ῥῆμα"),
    ("μονογενής", "μονογενής"),
    ("ὦ", "ὦ"),
    ("σοφίας", "σοφία"),
    ("χάριν", "χάρις"),
];

const SLAV_SUBS: &[&str] = &["+ Loc.", "+ Gen.", "прѣд.", "образъ", "ѧвѣ"];
const GREEK_SUBS: &[&str] = &["+ Acc.", "+ Dat.", "μέσ.", "τρόπος", "ἁπλῶς"];
const LABELS: &[&str] = &["pass.", "med.", "fut.", "inf."];

/// Columns of one side in the table.
#[derive(Clone, Copy)]
struct Cols {
    variant_word: usize,
    variant_lemmas: [usize; 3],
    word: usize,
    lemma: usize,
    sublemmas: [usize; 3],
    words: &'static [(&'static str, &'static str)],
    subs: &'static [&'static str],
    main: &'static str,
    others: &'static [&'static str],
    flag: &'static str,
}

const SLAV: Cols = Cols {
    variant_word: 0,
    variant_lemmas: [1, 2, 3],
    word: 5,
    lemma: 7,
    sublemmas: [8, 9, 10],
    words: SLAV_WORDS,
    subs: SLAV_SUBS,
    main: "S",
    others: &["W", "G", "H"],
    flag: "sg",
};

const GREEK: Cols = Cols {
    variant_word: 16,
    variant_lemmas: [17, 18, 19],
    word: 11,
    lemma: 12,
    sublemmas: [13, 14, 15],
    words: GREEK_WORDS,
    subs: GREEK_SUBS,
    main: "Cr",
    others: &["C", "Cs", "M", "Ch"],
    flag: "gg",
};

#[derive(Clone, Default)]
struct GenRow {
    fields: Vec<String>,
    flags: Vec<&'static str>,
    witness: Option<&'static str>,
}

impl GenRow {
    fn new() -> GenRow {
        GenRow {
            fields: vec![String::new(); FIELDS],
            flags: Vec::new(),
            witness: None,
        }
    }

    fn set(&mut self, index: usize, text: impl Into<String>) {
        self.fields[index] = text.into();
    }
}

/// Knobs for the generator.
#[derive(Clone, Copy, Debug)]
pub struct GenOptions {
    pub max_rows: usize,
    pub gramm: bool,
    pub variants: bool,
    pub biblical_quotes: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            max_rows: 50,
            gramm: true,
            variants: true,
            biblical_quotes: true,
        }
    }
}

struct Gen<'a> {
    rng: &'a mut ChaCha8Rng,
    opts: GenOptions,
}

impl Gen<'_> {
    fn word(&mut self, cols: Cols) -> (&'static str, &'static str) {
        *cols.words.choose(self.rng).unwrap()
    }

    fn sublemmas(&mut self, lemma: &str, cols: Cols) -> Vec<String> {
        let depth = *[0, 0, 1, 1, 2, 3].choose(self.rng).unwrap();
        (0..depth)
            .map(|k| format!("{lemma} {}", cols.subs[(k + self.rng.gen_range(0..cols.subs.len())) % cols.subs.len()]))
            .collect()
    }

    fn fill_word(&mut self, row: &mut GenRow, cols: Cols, subs: bool) -> String {
        let (word, lemma) = self.word(cols);
        row.set(cols.word, word);
        row.set(cols.lemma, lemma);
        if subs {
            for (k, s) in self.sublemmas(lemma, cols).into_iter().enumerate() {
                row.set(cols.sublemmas[k], s);
            }
        }
        lemma.to_string()
    }

    /// A variant cell with one or two readings on disjoint witness sets.
    fn fill_variants(&mut self, row: &mut GenRow, cols: Cols) {
        if !self.opts.variants || !self.rng.gen_bool(0.35) {
            return;
        }
        let prefix = row.witness.filter(|w| cols.others.contains(w));
        let mut witnesses: Vec<&str> = cols.others.iter().copied().filter(|w| Some(*w) != prefix).collect();
        if prefix.is_some() {
            // with a witness prefix the default main becomes a variant witness
            witnesses.push(cols.main);
        }
        witnesses.shuffle(self.rng);
        let readings = self.rng.gen_range(1..=2.min(witnesses.len()));
        let mut cell = Vec::new();
        let mut lemmas = Vec::new();
        let mut subs = Vec::new();
        let with_subs = self.rng.gen_bool(0.3);
        let mut taken = 0;
        for i in 0..readings {
            let remaining = witnesses.len() - taken - (readings - i - 1);
            let n = self.rng.gen_range(1..=remaining.min(2));
            let mut sigla: Vec<&str> = witnesses[taken..taken + n].to_vec();
            taken += n;
            let order: Vec<&str> = [cols.main].into_iter().chain(cols.others.iter().copied()).collect();
            sigla.sort_by_key(|s| order.iter().position(|o| o == s));
            let sigla = sigla.concat();
            if self.rng.gen_bool(0.15) {
                cell.push(format!("Ø {sigla}"));
            } else {
                let (word, lemma) = self.word(cols);
                cell.push(format!("{word} {sigla}"));
                lemmas.push(lemma.to_string());
                subs.push(format!("{lemma} {}", cols.subs.choose(self.rng).unwrap()));
            }
        }
        row.set(cols.variant_word, cell.join(" / "));
        if !lemmas.is_empty() {
            row.set(cols.variant_lemmas[0], lemmas.join(" / "));
            if with_subs {
                row.set(cols.variant_lemmas[1], subs.join(" / "));
            }
        }
    }

    /// One word on each side, or an omission on one of them.
    fn one_to_one(&mut self) -> Vec<GenRow> {
        let mut row = GenRow::new();
        if self.rng.gen_bool(0.1) {
            row.witness = Some("W");
        }
        let omit = self.rng.gen_range(0..8);
        for (k, cols) in [SLAV, GREEK].into_iter().enumerate() {
            if omit == k {
                row.set(cols.word, "om.");
            } else {
                self.fill_word(&mut row, cols, true);
            }
            self.fill_variants(&mut row, cols);
        }
        vec![row]
    }

    /// A phrase of `n` rows on `grouped` against `m` words on the other side.
    fn phrase(&mut self, grouped: Cols, other: Cols, n: usize, m: usize) -> Vec<GenRow> {
        let mut rows: Vec<GenRow> = (0..n).map(|_| GenRow::new()).collect();
        let shared_subs = self.rng.gen_bool(0.5);
        for (i, row) in rows.iter_mut().enumerate() {
            let lemma = self.fill_word(row, grouped, i == 0 || !shared_subs);
            if i == 0 && shared_subs {
                row.set(grouped.sublemmas[0], format!("{lemma} {}", grouped.subs[0]));
            }
            row.flags.push(grouped.flag);
            self.fill_variants(row, grouped);
        }
        let start = if m == 1 { self.rng.gen_range(0..n) } else { 0 };
        for (i, row) in rows.iter_mut().enumerate().skip(start).take(m) {
            self.fill_word(row, other, i == start);
            if m > 1 {
                row.flags.push(other.flag);
            }
            self.fill_variants(row, other);
        }
        rows
    }

    /// A word with a purely grammatical value on `side`, labelled on the
    /// other side.
    fn gramm(&mut self, side: Cols, other: Cols) -> Vec<GenRow> {
        let mut first = GenRow::new();
        self.fill_word(&mut first, side, false);
        self.fill_word(&mut first, other, true);
        first.flags.push(side.flag);
        let mut second = GenRow::new();
        let (word, lemma) = self.word(side);
        second.set(side.word, word);
        second.set(side.lemma, lemma);
        second.set(side.sublemmas[0], "gramm.");
        second.set(other.lemma, *LABELS.choose(self.rng).unwrap());
        second.flags.push(side.flag);
        let mut rows = vec![first, second];
        if self.rng.gen_bool(0.5) {
            rows.reverse();
        }
        rows
    }

    fn unit(&mut self) -> Vec<GenRow> {
        let choice = self.rng.gen_range(0..10);
        match choice {
            0..=4 => self.one_to_one(),
            5 => {
                let n = self.rng.gen_range(2..=3);
                self.phrase(SLAV, GREEK, n, 1)
            }
            6 => {
                let n = self.rng.gen_range(2..=3);
                self.phrase(GREEK, SLAV, n, 1)
            }
            7 => {
                let n = self.rng.gen_range(2..=4);
                let m = self.rng.gen_range(2..=n);
                if self.rng.gen_bool(0.5) {
                    self.phrase(SLAV, GREEK, n, m)
                } else {
                    self.phrase(GREEK, SLAV, n, m)
                }
            }
            _ if self.opts.gramm => {
                if self.rng.gen_bool(0.5) {
                    self.gramm(SLAV, GREEK)
                } else {
                    self.gramm(GREEK, SLAV)
                }
            }
            _ => self.one_to_one(),
        }
    }
}

/// Tracks the running address so that phrases never cross a page.
struct Locus {
    page: u32,
    column: u8,
    line: u32,
}

const LINES_PER_COLUMN: u32 = 30;

impl Locus {
    fn reserve(&mut self, rows: u32) {
        if self.line + rows > LINES_PER_COLUMN + 1 {
            self.line = 1;
            if self.column == b'd' {
                self.column = b'a';
                self.page += 1;
            } else {
                self.column += 1;
            }
        }
    }

    fn next(&mut self, witness: Option<&str>) -> String {
        let text = format!(
            "1/{}{}{}{}",
            witness.unwrap_or(""),
            self.page,
            self.column as char,
            self.line
        );
        self.line += 1;
        text
    }
}

/// Generates a valid table in the TSV dialect with at most
/// `opts.max_rows` rows.
pub fn generate_table(rng: &mut ChaCha8Rng, opts: GenOptions) -> String {
    let mut gen = Gen { rng, opts };
    let mut out: Vec<String> = Vec::new();
    let mut locus = Locus {
        page: 1,
        column: b'a',
        line: 1,
    };
    let target = gen.rng.gen_range(1..=opts.max_rows);
    let mut count = 0;
    let mut last_grouped = false;
    while count < target {
        let rows = gen.unit();
        if count + rows.len() > opts.max_rows {
            break;
        }
        let grouped = rows.iter().any(|r| !r.flags.is_empty());
        // adjacent groups must be separated; elsewhere a blank is optional
        let separate = grouped && last_grouped;
        if separate || ((grouped || last_grouped) && !out.is_empty() && gen.rng.gen_bool(0.8)) {
            out.push(String::new());
        }
        last_grouped = grouped;
        locus.reserve(rows.len() as u32);
        let quote = opts.biblical_quotes && gen.rng.gen_bool(0.1);
        for mut row in rows {
            let address = locus.next(row.witness);
            row.set(4, address);
            if quote {
                row.flags.push("bq");
            }
            let mut fields = row.fields.clone();
            if !row.flags.is_empty() {
                fields.push(row.flags.join(";"));
            }
            out.push(fields.join("\t"));
            count += 1;
        }
    }
    let mut text = out.join("\n");
    text.push('\n');
    text
}

/// Counts main-text indexed usages straight from the TSV text: words that
/// are present, not omitted and lemmatised, plus grammatical labels.
pub fn count_indexed_main(tsv: &str, slavonic: bool) -> usize {
    let (word, lemma, other_sub) = if slavonic { (5, 7, 13) } else { (11, 12, 8) };
    tsv.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split('\t').collect::<Vec<_>>())
        .filter(|f| {
            let w = f[word].trim();
            let has_lemma = !f[lemma].trim().is_empty();
            let lexical = !w.is_empty() && w != "om." && has_lemma;
            let label = w.is_empty() && has_lemma && f[other_sub].trim() == "gramm.";
            lexical || label
        })
        .count()
}

/// Splits rendered plain text into (depth, text) lines.
pub fn plain_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .map(|l| {
            let body = l.trim_start_matches('\t');
            (l.len() - body.len(), body)
        })
        .collect()
}
