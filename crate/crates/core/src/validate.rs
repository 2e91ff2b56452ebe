//! Checks of annotation conventions that the reader alone cannot catch.

use crate::adapt::{group_rows, units};
use crate::address::Address;
use crate::sigla::{Language, SiglaConfig};
use crate::table::{columns, Diagnostics, Row, Table, GRAMM};

fn check_side(diags: &mut Diagnostics, row: &Row, language: Language, config: &SiglaConfig) {
    let cells = row.side(language);
    let other = row.side(language.other());
    let cols = columns(language);
    let line = row.line;

    let is_label = other.is_gramm() && cells.word.is_empty();
    if cells.has_word() && cells.lemma.is_empty() {
        diags.error(line, Some(cols.lemma), format!("word `{}` has no lemma", cells.word));
    }
    if cells.is_omission() && !cells.lemma.is_empty() {
        diags.error(line, Some(cols.lemma), "omitted word carries a lemma");
    }
    if cells.word.is_empty() && !cells.lemma.is_empty() && !is_label {
        diags.error(line, Some(cols.word), "lemma without a word");
    }
    if cells.word.is_empty() && cells.lemma.is_empty() && cells.sublemmas.iter().any(|s| !s.is_empty()) {
        diags.error(line, Some(cols.sublemmas[0]), "sublemma without a lemma");
    }
    if let Some(gap) = (1..3).find(|&k| !cells.sublemmas[k].is_empty() && cells.sublemmas[k - 1].is_empty()) {
        diags.error(line, Some(cols.sublemmas[gap]), "sublemma follows an empty level");
    }
    if let Some(k) = (1..3).find(|&k| cells.sublemmas[k] == GRAMM) {
        diags.error(line, Some(cols.sublemmas[k]), "gramm. must be the first sublemma");
    }
    if cells.is_gramm() {
        if !cells.has_word() {
            diags.error(line, Some(cols.sublemmas[0]), "gramm. without a word");
        }
        if other.lemma.is_empty() {
            diags.error(line, Some(columns(language.other()).lemma), "gramm. row has no grammatical label");
        } else if other.has_word() {
            diags.error(
                line,
                Some(columns(language.other()).word),
                "grammatical label row carries a word",
            );
        }
        if !row.flags.group(language) {
            diags.error(line, Some(cols.sublemmas[0]), "gramm. row outside a phrase group");
        }
        if !cells.sublemmas[1].is_empty() {
            diags.warning(line, Some(cols.sublemmas[1]), "sublemmas below gramm. are ignored");
        }
    }
    if row.flags.group(language) && !cells.has_word() {
        diags.error(line, Some('U'), format!("{language} group flag on a row without a {language} word"));
    }

    for (k, lemma_col) in cols.variant_lemmas.iter().enumerate() {
        if cells.variant_word.is_empty() && !cells.variant_lemmas[k].is_empty() {
            diags.error(line, Some(*lemma_col), "variant lemma without a variant reading");
        }
    }
    let main = config.side(language).main();
    let own_main = row
        .address
        .as_ref()
        .and_then(|a| a.witness_prefix.as_deref())
        .filter(|p| config.side(language).knows(p))
        .unwrap_or(main);
    for reading in &cells.variants {
        if reading.sigla.contains(own_main) {
            diags.error(
                line,
                Some(cols.variant_word),
                format!("variant attributed to the main witness {own_main}"),
            );
        }
        if !reading.is_lemmatised() && !reading.is_omitted() && !cells.variant_lemmas[0].is_empty() {
            diags.warning(line, Some(cols.variant_lemmas[0]), format!("variant `{}` has no lemma", reading.form));
        }
        let chain = &reading.lemmas;
        if !chain[2].is_empty() && chain[1].is_empty() {
            diags.error(line, Some(cols.variant_lemmas[2]), "sublemma follows an empty level");
        }
    }
}

/// Validates a parsed table. Reader diagnostics are included; the result is
/// sorted by row and column.
pub fn validate(table: &Table, config: &SiglaConfig) -> Diagnostics {
    let mut diags = table.diagnostics.clone();
    let groups = group_rows(table);
    let in_run = |side: Language, record: usize| {
        groups
            .iter()
            .any(|g| g.side == side && g.rows.len() > 1 && g.rows.contains(&record))
    };
    for (i, record) in table.records.iter().enumerate() {
        let Some(row) = record.as_row() else { continue };
        if row.address.is_none() {
            diags.error(row.line, Some('E'), format!("unparsable address `{}`", row.address_text));
        }
        if row.flags.slav_group
            && row.flags.greek_group
            && !(in_run(Language::Slavonic, i) && in_run(Language::Greek, i))
        {
            diags.warning(row.line, Some('U'), "both group flags outside an n:m phrase");
        }
        for language in [Language::Slavonic, Language::Greek] {
            check_side(&mut diags, row, language, config);
        }
    }
    for group in &groups {
        if group.rows.len() == 1 {
            if let Some(row) = table.records[group.rows[0]].as_row() {
                if row.flags.group(group.side) {
                    let flag = match group.side {
                        Language::Slavonic => "sg",
                        Language::Greek => "gg",
                    };
                    diags.warning(row.line, Some('U'), format!("{flag} flag on a single-row group"));
                }
            }
        }
    }
    for unit in units(table) {
        let rows: Vec<&Row> = unit.rows.iter().filter_map(|&i| table.records[i].as_row()).collect();
        let addresses: Vec<&Address> = rows.iter().filter_map(|r| r.address.as_ref()).collect();
        if addresses.len() == rows.len() && rows.len() > 1 {
            if let Some(span) = Address::covering(addresses.iter().copied()) {
                if span.crosses_page() {
                    diags.warning(rows[0].line, Some('E'), format!("phrase spans a page break: {span}"));
                }
            }
        }
    }
    diags.sort();
    diags
}
