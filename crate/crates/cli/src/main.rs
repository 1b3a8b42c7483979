//! `tannakin`: inspect groups, build quotients and run verification suites.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3 violated
//! precondition (a non-normal subgroup).

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use tannakin_core::group::{subgroup_generated, FiniteGroup, GroupSpec};
use tannakin_core::quotient::QuotientCtx;
use tannakin_core::fixtures::NamedRep;
use tannakin_core::rep::RepObject;
use tannakin_core::verify::{self, Suite};
use tannakin_core::Error;

const FIXTURE_DIR_VAR: &str = "TANNAKIN_FIXTURE_DIR";

#[derive(Parser)]
#[command(name = "tannakin", version, about = "Exact quotients of Rep(G) by normal subgroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, conjugacy classes and normal subgroups of a group file.
    Group {
        file: PathBuf,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Hom dimensions in T and in the quotient, T^q membership and the
    /// Hom_Q(qX, qY) = (Hom(X, Y)^H) checks, as JSON.
    Quotient {
        #[arg(long)]
        group: PathBuf,
        /// Comma-separated element indices or labels; the subgroup they
        /// generate is used.
        #[arg(long)]
        subgroup: String,
        /// JSON list of `{"name": ..., "rep": ...}`; defaults to the unit,
        /// sign, standard, permutation and regular representations.
        #[arg(long)]
        objects: Option<PathBuf>,
    },
    /// Run a verification suite over the built-in fixtures.
    Verify {
        suite: String,
        #[arg(long)]
        fixture: Option<String>,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotNormal | Error::NotContained(..) => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn fixture_dir() -> Option<PathBuf> {
    std::env::var_os(FIXTURE_DIR_VAR).map(PathBuf::from)
}

/// `path` as given, or relative to the fixture directory if it does not
/// exist and is relative.
fn resolve(path: &Path) -> PathBuf {
    if !path.exists() && path.is_relative() {
        if let Some(dir) = fixture_dir() {
            let candidate = dir.join(path);
            if candidate.exists() {
                return candidate;
            }
        }
    }
    path.to_path_buf()
}

fn read(path: &Path) -> Result<String, Failure> {
    let p = resolve(path);
    fs::read_to_string(&p).map_err(|e| input_error(format!("{}: {e}", p.display())))
}

fn load_group(path: &Path) -> Result<Arc<FiniteGroup>, Failure> {
    let spec = GroupSpec::from_json(&read(path)?)?;
    Ok(Arc::new(spec.build()?))
}

fn parse_elements(g: &FiniteGroup, list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            g.find_label(t)
                .or_else(|| t.parse::<usize>().ok().filter(|&i| i < g.order()))
                .ok_or_else(|| input_error(format!("no element {t:?} in a group of order {}", g.order())))
        })
        .collect()
}

fn load_objects(g: &Arc<FiniteGroup>, path: &Path) -> Result<Vec<(String, RepObject)>, Failure> {
    let list: Vec<NamedRep> = serde_json::from_str(&read(path)?).map_err(Error::from)?;
    let mut seen = BTreeSet::new();
    list.into_iter()
        .map(|o| {
            if !seen.insert(o.name.clone()) {
                return Err(input_error(format!("object {:?} listed twice", o.name)));
            }
            let x = o.rep.build(g).map_err(|e| input_error(format!("object {:?}: {e}", o.name)))?;
            Ok((o.name, x))
        })
        .collect()
}

fn cmd_group(file: &Path, json: bool) -> Result<bool, Failure> {
    let g = load_group(file)?;
    let s = verify::group_summary(&g);
    if json {
        println!("{}", serde_json::to_string_pretty(&s).expect("summary serializes"));
    } else {
        println!("order: {}", s.order);
        println!("conjugacy classes: {}", s.conjugacy_classes);
        println!("abelian: {}", s.abelian);
        println!("generators: {}", s.generators.join(" "));
        println!("normal subgroups: {}", s.normal_subgroups.len());
        for h in &s.normal_subgroups {
            println!("  order {:>3}: {{{}}}", h.len(), h.join(", "));
        }
    }
    Ok(true)
}

fn cmd_quotient(group: &Path, subgroup: &str, objects: Option<&Path>) -> Result<bool, Failure> {
    let g = load_group(group)?;
    let h = subgroup_generated(&g, &parse_elements(&g, subgroup)?)?;
    let q = QuotientCtx::new(&h).map_err(|e| match e {
        Error::NotNormal => Failure {
            code: 3,
            message: format!("subgroup {} is not normal; the quotient by H requires H to be normal in G", h.label()),
        },
        other => other.into(),
    })?;
    let objs = match objects {
        Some(p) => load_objects(&g, p)?,
        None => verify::default_objects(&g),
    };
    let report = verify::quotient_report(&q, &objs)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(report.passed)
}

fn cmd_verify(suite: &str, fixture: Option<&str>, json: Option<&Path>) -> Result<bool, Failure> {
    let suite: Suite = suite.parse()?;
    let report = verify::run_suite_in(suite, fixture, fixture_dir().as_deref())?;
    println!("{report}");
    eprintln!("wall time: {:.3?}", report.wall_time);
    if let Some(path) = json {
        fs::write(path, report.to_json() + "\n").map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Group { file, json } => cmd_group(file, *json),
        Command::Quotient { group, subgroup, objects } => cmd_quotient(group, subgroup, objects.as_deref()),
        Command::Verify { suite, fixture, json } => cmd_verify(suite, fixture.as_deref(), json.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
