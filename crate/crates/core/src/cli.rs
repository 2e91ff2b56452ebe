//! The pipeline behind the command line: parse, validate, adapt, aggregate,
//! render and write, for each requested tool and direction.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::adapt::{adapt, Direction};
use crate::aggregate::aggregate;
use crate::collation::{CollationTable, Collations};
use crate::export::{render_index, render_list, serialize_plain, serialize_wordxml, Document, Format};
use crate::sigla::{Language, SiglaConfig};
use crate::table::{parse_table, Diagnostics, Table};
use crate::validate::validate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tool {
    /// Verification lists.
    Integrate,
    /// Publication indices.
    Generate,
}

impl Tool {
    pub const BOTH: [Tool; 2] = [Tool::Integrate, Tool::Generate];

    fn kind(self) -> &'static str {
        match self {
            Tool::Integrate => "list",
            Tool::Generate => "index",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub out_dir: PathBuf,
    pub tools: Vec<Tool>,
    pub directions: Vec<Direction>,
    pub formats: Vec<Format>,
    pub collation_slav: Option<PathBuf>,
    pub collation_greek: Option<PathBuf>,
    pub sigla: Option<PathBuf>,
    /// Treat warnings as errors.
    pub strict: bool,
}

impl RunConfig {
    /// Both tools, both directions, plain output.
    pub fn new(input: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            input: input.into(),
            out_dir: out_dir.into(),
            tools: Tool::BOTH.to_vec(),
            directions: Direction::BOTH.to_vec(),
            formats: vec![Format::Plain],
            collation_slav: None,
            collation_greek: None,
            sigla: None,
            strict: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}: {message}", path.display())]
    Config { path: PathBuf, message: String },
    #[error("nothing to do: {0}")]
    Empty(&'static str),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    pub exit_code: i32,
    pub files: Vec<PathBuf>,
    pub diagnostics: Diagnostics,
}

fn read(path: &Path) -> Result<String, RunError> {
    fs::read_to_string(path).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_collation(path: Option<&Path>, language: Language) -> Result<CollationTable, RunError> {
    match path {
        None => Ok(CollationTable::default_for(language)),
        Some(path) => CollationTable::parse(&read(path)?).map_err(|e| RunError::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        }),
    }
}

fn load_sigla(path: Option<&Path>) -> Result<SiglaConfig, RunError> {
    match path {
        None => Ok(SiglaConfig::default()),
        Some(path) => SiglaConfig::parse(&read(path)?).map_err(|e| RunError::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        }),
    }
}

/// One rendered document waiting to be written.
struct Output {
    tool: Tool,
    direction: Direction,
    doc: Document,
}

fn render_direction(
    table: &Table,
    direction: Direction,
    tools: &[Tool],
    sigla: &SiglaConfig,
    collations: &Collations,
) -> Result<Vec<Output>, String> {
    let rows = adapt(table, direction, sigla).map_err(|e| e.to_string())?;
    let index = aggregate(&rows, direction.indexed(), collations);
    Ok(tools
        .iter()
        .map(|&tool| Output {
            tool,
            direction,
            doc: match tool {
                Tool::Integrate => render_list(&index, direction),
                Tool::Generate => render_index(&index, direction),
            },
        })
        .collect())
}

/// File name for one output: `{stem}.{list|index}.{slgr|grsl}.{txt|xml}`.
pub fn output_name(stem: &str, tool: Tool, direction: Direction, format: Format) -> String {
    format!("{stem}.{}.{}.{}", tool.kind(), direction.code(), format.extension())
}

fn dedup<T: PartialEq + Copy>(items: &[T]) -> Vec<T> {
    let mut out = Vec::new();
    for &item in items {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

/// Runs the pipeline. Validation problems are reported in the returned
/// diagnostics with exit code 1 and no files written; I/O and configuration
/// problems are returned as errors.
pub fn run(config: &RunConfig) -> Result<RunReport, RunError> {
    let tools = dedup(&config.tools);
    let directions = dedup(&config.directions);
    let formats = dedup(&config.formats);
    if tools.is_empty() {
        return Err(RunError::Empty("no tool selected"));
    }
    if directions.is_empty() {
        return Err(RunError::Empty("no direction selected"));
    }
    if formats.is_empty() {
        return Err(RunError::Empty("no format selected"));
    }

    let sigla = load_sigla(config.sigla.as_deref())?;
    let collations = Collations {
        slavonic: load_collation(config.collation_slav.as_deref(), Language::Slavonic)?,
        greek: load_collation(config.collation_greek.as_deref(), Language::Greek)?,
    };
    let input = read(&config.input)?;
    let table = parse_table(&input, &sigla);
    let mut diagnostics = validate(&table, &sigla);
    let invalid = |d: &Diagnostics| d.has_errors() || (config.strict && d.has_warnings());
    if invalid(&diagnostics) {
        return Ok(RunReport {
            exit_code: EXIT_INVALID,
            files: Vec::new(),
            diagnostics,
        });
    }

    let results: Vec<Result<Vec<Output>, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = directions
            .iter()
            .map(|&direction| {
                let (table, tools, sigla, collations) = (&table, &tools, &sigla, &collations);
                scope.spawn(move || render_direction(table, direction, tools, sigla, collations))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("rendering thread panicked"))
            .collect()
    });
    let mut outputs = Vec::new();
    for result in results {
        match result {
            Ok(o) => outputs.extend(o),
            Err(message) => diagnostics.error(0, None, message),
        }
    }
    if diagnostics.has_errors() {
        diagnostics.sort();
        return Ok(RunReport {
            exit_code: EXIT_INVALID,
            files: Vec::new(),
            diagnostics,
        });
    }

    let stem = config
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    fs::create_dir_all(&config.out_dir).map_err(|source| RunError::Io {
        path: config.out_dir.clone(),
        source,
    })?;
    let mut files = Vec::new();
    for output in &outputs {
        for &format in &formats {
            let path = config
                .out_dir
                .join(output_name(&stem, output.tool, output.direction, format));
            let bytes = match format {
                Format::Plain => serialize_plain(&output.doc).into_bytes(),
                Format::WordXml => serialize_wordxml(&output.doc),
            };
            fs::write(&path, bytes).map_err(|source| RunError::Io {
                path: path.clone(),
                source,
            })?;
            files.push(path);
        }
    }
    Ok(RunReport {
        exit_code: EXIT_OK,
        files,
        diagnostics,
    })
}
