use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use egpkit::Limits;
use egpkit_cli::commands::{self, Output, PreorderArg};
use egpkit_cli::doc::Document;
use egpkit_cli::{family, CliError, Result};

#[derive(Parser)]
#[command(
    name = "egpkit",
    version,
    about = "Faces, coproducts and invariants of extended submodular functions"
)]
struct Cli {
    /// Output format; `gen` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Raise or lower the size caps for exponential enumerations (at most 20).
    #[arg(long, global = true, env = "EGPKIT_MAX_N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Report finiteness, submodularity, modularity, components and pre(z).
    Check { input: Option<PathBuf> },
    /// The preorder whose down-sets are the finite-valued sets.
    Pre { input: Option<PathBuf> },
    /// The face lattice and f-vector.
    Faces { input: Option<PathBuf> },
    /// The minimal faces.
    MinFaces { input: Option<PathBuf> },
    /// The conforming preorder of the face selected by a compatible preorder.
    #[command(group(ArgGroup::new("p").required(true).args(["preorder", "relations"])))]
    Closure {
        input: Option<PathBuf>,
        /// A preorder document.
        #[arg(long)]
        preorder: Option<PathBuf>,
        /// Inline relations such as `a<b,c=d`.
        #[arg(long)]
        relations: Option<String>,
    },
    /// Glue conforming preorders of the restriction and corestriction at a down-set.
    Glue {
        input: Option<PathBuf>,
        /// The down-set, e.g. `a,b`.
        #[arg(long)]
        split: String,
        /// Relations on the split (empty for none).
        #[arg(long, default_value = "")]
        left: String,
        /// Relations on the complement (empty for none).
        #[arg(long, default_value = "")]
        right: String,
    },
    /// The polynomial invariant, in the power and binomial bases.
    Chi { input: Option<PathBuf> },
    /// Ehrhart polynomials of the order polytope of a preorder document.
    Ehrhart { input: Option<PathBuf> },
    /// The external coproduct at a split, or summed over all splits.
    Coproduct {
        input: Option<PathBuf>,
        #[arg(long)]
        split: Option<String>,
    },
    /// The internal coproduct.
    Delta { input: Option<PathBuf> },
    /// The morphism to modular functions.
    Phi { input: Option<PathBuf> },
    /// Forests of a building set, given as a graph (`a-b,b-c`, `path:4`) or `sets:a,b;b,c`.
    Bforests { building: String },
    /// Generate a function from a named family.
    #[command(after_help = family::FAMILIES)]
    Gen {
        family: String,
        #[arg(default_value = "")]
        params: String,
    },
    /// Run brute-force cross-checks on a document, or on the built-in corpus
    /// when no path is given (use `-` for standard input).
    Oracle { input: Option<PathBuf> },
}

fn read_text(path: Option<&PathBuf>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "standard input".into(),
                    source,
                })?;
        }
    }
    Ok(text)
}

fn read_doc(path: Option<&PathBuf>) -> Result<Document> {
    Document::parse(&read_text(path)?)
}

fn run(cli: &Cli, limits: &Limits) -> Result<Output> {
    use Command::*;
    match &cli.command {
        Check { input } => commands::check(&read_doc(input.as_ref())?, limits),
        Pre { input } => commands::pre(&read_doc(input.as_ref())?, limits),
        Faces { input } => commands::faces(&read_doc(input.as_ref())?, limits),
        MinFaces { input } => commands::minimal_faces(&read_doc(input.as_ref())?, limits),
        Closure {
            input,
            preorder,
            relations,
        } => {
            let z = read_doc(input.as_ref())?;
            match (preorder, relations) {
                (Some(path), _) => {
                    let p = read_doc(Some(path))?;
                    commands::closure(&z, PreorderArg::Document(&p), limits)
                }
                (None, Some(r)) => commands::closure(&z, PreorderArg::Inline(r), limits),
                (None, None) => unreachable!("clap requires one of them"),
            }
        }
        Glue {
            input,
            split,
            left,
            right,
        } => commands::glue(
            &read_doc(input.as_ref())?,
            split,
            PreorderArg::Inline(left),
            PreorderArg::Inline(right),
            limits,
        ),
        Chi { input } => commands::chi(&read_doc(input.as_ref())?, limits),
        Ehrhart { input } => commands::ehrhart(&read_doc(input.as_ref())?, limits),
        Coproduct { input, split } => {
            commands::coproduct(&read_doc(input.as_ref())?, split.as_deref(), limits)
        }
        Delta { input } => commands::delta(&read_doc(input.as_ref())?, limits),
        Phi { input } => commands::phi(&read_doc(input.as_ref())?, limits),
        Bforests { building } => commands::bforests(building, limits),
        Gen { family, params } => commands::generate(family, params, limits),
        Oracle { input } => match input {
            Some(_) => commands::oracle(Some(&read_doc(input.as_ref())?), limits),
            None => commands::oracle(None, limits),
        },
    }
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for cap errors, so usage errors exit with 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let limits = cli.max_n.map(Limits::with_max_n).unwrap_or_default();
    let format = cli.format.unwrap_or(match cli.command {
        Command::Gen { .. } => Format::Json,
        _ => Format::Text,
    });
    match run(&cli, &limits) {
        Ok(out) => {
            let rendered = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&out.json).expect("json output") + "\n"
                }
                Format::Text => out.text,
            };
            let mut stdout = std::io::stdout().lock();
            // A closed pipe downstream is not an error worth reporting.
            let _ = stdout.write_all(rendered.as_bytes());
            let _ = stdout.flush();
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("egpkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
