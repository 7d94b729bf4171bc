//! `chern`: curvature of cyclic words and Chern numbers of shellings.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use circle_chern::crosscheck::{self, CrosscheckConfig};
use circle_chern::format::{BaseDocument, FibrationFile, ShellingDocument};
use circle_chern::{
    curv_by_sections, curv_mnev, curv_triangles, product_shelling, CyclicAlphabet3, CyclicWord,
    Error, Execution, Orientations,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chern",
    version,
    about = "Exact curvature and Chern numbers of circle-bundle shellings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curvature of a three-letter cyclic word.
    Curv {
        /// Word, e.g. `bcabbccacb`, or space separated names `"v1 v2 v1 ..."`.
        word: String,
        /// Three letters in cyclic order, e.g. `abc` or `"v1 v2 v3"`.
        alphabet: String,
        #[arg(long, value_enum, default_value_t = Method::Triangles)]
        method: Method,
    },
    /// Check a shelling file.
    Validate { file: PathBuf },
    /// Print the curvature of every oriented 2-simplex.
    Cochain { file: PathBuf },
    /// Chern number of a shelling over a closed oriented surface.
    Chern { file: PathBuf },
    /// Product shelling with an r-vertex fiber over a base complex file.
    Product {
        base: PathBuf,
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shelling induced by a fibration file.
    Extract {
        fibration: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Randomized agreement suite.
    Crosscheck {
        count: usize,
        max_len: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Mnev,
    Triangles,
    Sections,
    All,
}

/// Exit status 1 for semantic failures, 2 for usage and parse errors.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn semantic(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidShelling(_)
            | Error::NotClosedOrientedSurface(_)
            | Error::MalformedFibration(_)
            | Error::UnknownSimplex(_)
            | Error::InvalidVertexOrder
            | Error::Overflow => Failure::semantic(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::semantic(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_word(s: &str) -> Result<CyclicWord, Error> {
    if s.split_whitespace().count() > 1 {
        CyclicWord::from_names(s)
    } else {
        CyclicWord::from_compact(s.trim())
    }
}

fn curv(word: &str, alphabet: &str, method: Method) -> Result<(), Failure> {
    let word = parse_word(word)?;
    let alphabet = CyclicAlphabet3::parse(alphabet)?;
    let exec = Execution::default();
    match method {
        Method::Mnev => println!("{}", curv_mnev(&word, &alphabet, 0)?),
        Method::Triangles => println!("{}", curv_triangles(&word, &alphabet)?),
        Method::Sections => println!("{}", curv_by_sections(&word, &alphabet, exec)?),
        Method::All => {
            let values = [
                ("mnev", curv_mnev(&word, &alphabet, 0)?),
                ("triangles", curv_triangles(&word, &alphabet)?),
                ("sections", curv_by_sections(&word, &alphabet, exec)?),
            ];
            for (name, v) in &values {
                println!("{name} {v}");
            }
            if values.iter().any(|(_, v)| *v != values[0].1) {
                return Err(Failure::semantic(format!("methods disagree on {word}")));
            }
        }
    }
    Ok(())
}

fn load_shelling(path: &Path) -> Result<ShellingDocument, Failure> {
    Ok(ShellingDocument::from_json(&read(path)?)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let exec = Execution::default();
    match cli.command {
        Command::Curv {
            word,
            alphabet,
            method,
        } => curv(&word, &alphabet, method),
        Command::Validate { file } => {
            let doc = load_shelling(&file)?;
            let report = doc.shelling.validate();
            println!("{report}");
            if report.is_valid() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: String::new(),
                })
            }
        }
        Command::Cochain { file } => {
            let doc = load_shelling(&file)?;
            let cochain = doc.shelling.curvature_cochain(&doc.orientations, exec)?;
            for (simplex, value) in cochain.iter() {
                println!("{simplex} -> {value}");
            }
            Ok(())
        }
        Command::Chern { file } => {
            let doc = load_shelling(&file)?;
            println!("{}", doc.shelling.chern_number(&doc.orientations, exec)?);
            Ok(())
        }
        Command::Product { base, r, output } => {
            let base = BaseDocument::from_json(&read(&base)?)?;
            let shelling = product_shelling(&base.complex, r, &base.vertex_order)?;
            let doc = ShellingDocument {
                shelling,
                orientations: base.orientations,
                vertex_order: base.vertex_order,
            };
            write_output(output.as_deref(), &doc.to_json())
        }
        Command::Extract { fibration, output } => {
            let description = FibrationFile::from_json(&read(&fibration)?)?.to_description()?;
            let shelling = description.extract_shelling()?;
            let doc = ShellingDocument {
                vertex_order: description.base().vertices().into_iter().collect(),
                shelling,
                orientations: Orientations::new(),
            };
            write_output(output.as_deref(), &doc.to_json())
        }
        Command::Crosscheck {
            count,
            max_len,
            seed,
        } => {
            if max_len < crosscheck::MIN_MAX_LEN {
                return Err(Failure::usage(format!(
                    "max_len must be at least {}",
                    crosscheck::MIN_MAX_LEN
                )));
            }
            let report = crosscheck::run(
                CrosscheckConfig {
                    count,
                    max_len,
                    seed,
                },
                exec,
            )?;
            println!("{report}");
            if report.is_ok() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: String::new(),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
