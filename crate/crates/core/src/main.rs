use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use bilex::cli::{run, RunConfig, Tool, EXIT_IO};
use bilex::{Direction, Format};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ToolArg {
    Integrate,
    Generate,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Slgr,
    Grsl,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Wordxml,
}

/// Build verification lists and publication indices from a Slavonic-Greek
/// alignment table.
#[derive(Debug, Parser)]
#[command(name = "bilex", version)]
struct Args {
    /// Annotation table (tab-separated, columns A..T plus optional flags)
    input: PathBuf,
    /// `integrate` writes lists, `generate` writes indices
    #[arg(long, value_enum, default_value = "both")]
    tool: ToolArg,
    #[arg(long, value_enum, default_value = "both")]
    direction: DirectionArg,
    /// Comma-separated output formats
    #[arg(long, value_enum, value_delimiter = ',', default_value = "plain")]
    format: Vec<FormatArg>,
    /// Slavonic alphabet table
    #[arg(long)]
    collation_slav: Option<PathBuf>,
    /// Greek alphabet table
    #[arg(long)]
    collation_greek: Option<PathBuf>,
    /// Witness sigla per language, main witness first
    #[arg(long)]
    sigla: Option<PathBuf>,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Treat warnings as errors
    #[arg(long)]
    strict: bool,
}

impl Args {
    fn into_config(self) -> RunConfig {
        let tools = match self.tool {
            ToolArg::Integrate => vec![Tool::Integrate],
            ToolArg::Generate => vec![Tool::Generate],
            ToolArg::Both => Tool::BOTH.to_vec(),
        };
        let directions = match self.direction {
            DirectionArg::Slgr => vec![Direction::SlavonicToGreek],
            DirectionArg::Grsl => vec![Direction::GreekToSlavonic],
            DirectionArg::Both => Direction::BOTH.to_vec(),
        };
        let formats = self
            .format
            .iter()
            .map(|f| match f {
                FormatArg::Plain => Format::Plain,
                FormatArg::Wordxml => Format::WordXml,
            })
            .collect();
        RunConfig {
            input: self.input,
            out_dir: self.out,
            tools,
            directions,
            formats,
            collation_slav: self.collation_slav,
            collation_greek: self.collation_greek,
            sigla: self.sigla,
            strict: self.strict,
        }
    }
}

fn main() -> ExitCode {
    let config = Args::parse().into_config();
    match run(&config) {
        Ok(report) => {
            eprint!("{}", report.diagnostics);
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error\t-\t-\t{e}");
            ExitCode::from(EXIT_IO as u8)
        }
    }
}
