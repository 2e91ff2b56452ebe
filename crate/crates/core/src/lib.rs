//! Compiles annotated bilingual word-alignment tables (Slavonic and Greek)
//! into verification lists and publication indices.
//!
//! The pipeline is `parse_table` → `validate` → `adapt` → `aggregate` →
//! `render_list` / `render_index` → `serialize_plain` / `serialize_wordxml`.

pub mod adapt;
pub mod address;
pub mod aggregate;
pub mod cli;
pub mod collation;
pub mod export;
pub mod sigla;
pub mod table;
pub mod usage;
pub mod validate;

pub use adapt::{adapt, AdaptError, AdaptedRow, Direction};
pub use address::{parse_address, Address, AddressError};
pub use aggregate::{aggregate, Alignment, Counts, Index, Node};
pub use collation::{CollationTable, Collations};
pub use export::{render_index, render_list, serialize_plain, serialize_wordxml, Document, Format};
pub use sigla::{Language, SiglaConfig};
pub use table::{parse_table, serialize_table, Diagnostic, Diagnostics, Severity, Table};
pub use validate::validate;
