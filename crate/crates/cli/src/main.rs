use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use klein_cli::commands::{self, to_pretty};
use klein_cli::outcome::{emit_report, Format};
use klein_cli::verify::run_suite;
use klein_core::group::{Ambient, Group};
use klein_core::orbits::Locus;
use klein_core::Error;

#[derive(Parser)]
#[command(name = "klein336", version, about = "Klein's reflection group G336 acting on C^3/Lambda")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group tables.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Fixed locus of one element.
    Fixed(FixedArgs),
    /// Stabilizer of a torus point.
    Stabilizer(PointArgs),
    /// Orbit of a torus point.
    Orbit(PointArgs),
    /// Orbit records of a torsion locus.
    Classify {
        #[arg(long)]
        locus: Locus,
        #[arg(long = "in", default_value = "G")]
        ambient: Ambient,
    },
    /// Singular locus of the quotient.
    Singularities {
        #[arg(long, default_value = "G")]
        quotient: Ambient,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Element table.
    Build {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Conjugacy classes.
    Classes {
        #[arg(long = "in", default_value = "G")]
        ambient: Ambient,
    },
    /// Conjugacy classes of subgroups of H.
    Subgroups,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FixedArgs {
    /// Named element, its negative (`--element=-g7`) or a numeric id.
    #[arg(long)]
    element: Option<String>,
    /// Matrix `[a, b, c]; [d, e, f]; [g, h, i]` with entries in Q(w).
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Args)]
struct PointArgs {
    /// Registry name or `[n1/d1,...,n6/d6]` in eps-coordinates.
    #[arg(long)]
    point: String,
    #[arg(long = "in", default_value = "G")]
    ambient: Ambient,
}

enum Failure {
    Input(Error),
    Internal(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnknownName(_)
            | Error::NotInGroup
            | Error::NonIntegral { .. }
            | Error::DivisionByZero
            | Error::IdentityElement => Failure::Input(e),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let group = Group::get();
    let text = match cli.command {
        Command::Group(GroupCommand::Build { json }) => {
            let table = to_pretty(&commands::group_build(group));
            match json {
                Some(path) => {
                    write_file(&path, table.as_bytes())?;
                    format!("{} elements written to {}\n", group.len(), path.display())
                }
                None => table,
            }
        }
        Command::Group(GroupCommand::Classes { ambient }) => to_pretty(&commands::group_classes(group, ambient)),
        Command::Group(GroupCommand::Subgroups) => to_pretty(&commands::group_subgroups(group)),
        Command::Fixed(FixedArgs { element, matrix }) => {
            let id = match (element, matrix) {
                (Some(e), _) => commands::resolve_element(group, &e)?,
                (None, Some(m)) => commands::resolve_matrix(group, &m)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            to_pretty(&commands::fixed(group, id)?)
        }
        Command::Stabilizer(p) => {
            let u = commands::resolve_point(&p.point)?;
            to_pretty(&commands::stabilizer_of(group, &u, p.ambient)?)
        }
        Command::Orbit(p) => {
            let u = commands::resolve_point(&p.point)?;
            to_pretty(&commands::orbit_of(group, &u, p.ambient))
        }
        Command::Classify { locus, ambient } => to_pretty(&commands::classify(group, locus, ambient)?),
        Command::Singularities { quotient, seed } => to_pretty(&commands::singularities(group, quotient, seed)?),
        Command::Verify { json, tsv } => {
            let outcomes = run_suite(group, 0);
            if let Some(path) = json {
                write_file(&path, &emit_report(&outcomes, Format::Json))?;
            }
            if let Some(path) = tsv {
                write_file(&path, &emit_report(&outcomes, Format::Tsv))?;
            }
            let mut s = String::new();
            for o in &outcomes {
                s.push_str(&format!("{:<11} {}\n", o.status.as_str().to_uppercase(), o.name));
                if o.status.is_fail() {
                    s.push_str(&format!("    expected: {}\n    actual:   {}\n", o.expected, o.actual));
                }
            }
            out.write_all(s.as_bytes()).map_err(|e| Failure::Internal(e.to_string()))?;
            return if outcomes.iter().any(|o| o.status.is_fail()) { Err(Failure::Verification) } else { Ok(()) };
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(cli, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}
