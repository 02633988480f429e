mod records;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use thomforge::algebra::{format_rational, parse_rational, Rational};
use thomforge::chern::{parse_monomial_map, infer_weights, specialize, GermSignature};
use thomforge::database::{Database, EntryKind, SingularityKey};
use thomforge::invariants::{
    chi_image_global, count_all, count_stable, enriques_invariants, izumiya_marar_real, mu_discriminant,
    mu_image, mu_image2, IntersectionNumbers,
};
use thomforge::restriction::{SolveOutcome, SolverJob};
use thomforge::{Error, ErrorCategory};

use records::{BatchLine, JobRecord, ResultRecord};

#[derive(Parser)]
#[command(name = "thomforge", version, about = "Exact Thom polynomial calculus for weighted-homogeneous map germs")]
struct Cli {
    /// Database file (defaults to $THOMFORGE_DB, then the bundled table)
    #[arg(long, global = true)]
    db: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count stable singularities in a generic perturbation
    Count {
        #[command(flatten)]
        germ: GermArgs,
        /// Singularity type, e.g. A3, A1A2, A0^3
        #[arg(long = "type", conflicts_with = "all")]
        kind: Option<String>,
        /// Every tabulated type of codimension m
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Image or discriminant Milnor numbers
    Milnor {
        #[arg(long, value_enum)]
        kind: MilnorKind,
        #[command(flatten)]
        germ: GermArgs,
        #[arg(long)]
        json: bool,
    },
    /// Inspect the polynomial database
    Tp {
        #[command(subcommand)]
        action: TpAction,
    },
    /// Run a restriction-method solver job
    Solve {
        #[arg(long)]
        job: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Global Euler characteristic formulas
    Global {
        #[command(subcommand)]
        formula: GlobalFormula,
    },
    /// Evaluate one JSON job per line
    Batch {
        #[arg(long)]
        jsonl: PathBuf,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Args, Clone)]
struct GermArgs {
    /// Source weights, e.g. 2,9,16
    #[arg(long, value_delimiter = ',', requires = "degrees", conflicts_with = "map")]
    weights: Option<Vec<String>>,
    /// Target degrees, e.g. 18,11,16
    #[arg(long, value_delimiter = ',', requires = "weights")]
    degrees: Option<Vec<String>>,
    /// Monomial map, e.g. "x^2+y^2+x*z, x*y, z"
    #[arg(long)]
    map: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MilnorKind {
    Image,
    Image2,
    Discriminant,
}

impl MilnorKind {
    fn invariant(self) -> &'static str {
        match self {
            MilnorKind::Image => "mu_image",
            MilnorKind::Image2 => "mu_image2",
            MilnorKind::Discriminant => "mu_discriminant",
        }
    }
}

#[derive(Subcommand)]
enum TpAction {
    /// Print a database entry
    Show {
        key: String,
        #[arg(long, default_value_t = 0)]
        kappa: u32,
        #[arg(long, default_value = "tp_source")]
        kind: String,
        #[arg(long)]
        json: bool,
    },
    /// Specialize an entry at a germ
    Eval {
        key: String,
        #[arg(long)]
        kappa: Option<u32>,
        #[arg(long, default_value = "tp_source")]
        kind: String,
        /// Expansion order in the torus variable
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        germ: GermArgs,
    },
    /// Run every structural check on the database
    Validate,
}

#[derive(Subcommand)]
enum GlobalFormula {
    /// Chern numbers and image Euler characteristic of a surface in P^3
    Enriques {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        delta: i64,
        #[arg(long = "C")]
        c: i64,
        #[arg(long = "T")]
        t: i64,
    },
    /// Euler characteristic of the image of a real closed surface
    IzumiyaMarar {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long = "C")]
        c: i64,
        #[arg(long = "T")]
        t: i64,
    },
    /// Image Euler characteristic from eight intersection numbers (JSON file)
    ChiImage {
        #[arg(long)]
        intersections: PathBuf,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
    Solve(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) => category_code(e.category()),
            Failure::Usage(_) => 2,
            Failure::Solve(_) => 5,
            Failure::Checks => 1,
        }
    }
}

pub(crate) fn category_code(c: ErrorCategory) -> u8 {
    match c {
        ErrorCategory::Parse => 2,
        ErrorCategory::Precondition => 3,
        ErrorCategory::UnknownKey => 4,
        ErrorCategory::Internal => 1,
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn load_db(path: &Option<PathBuf>) -> CliResult<Database> {
    Ok(match path {
        Some(p) => Database::from_path(p)?,
        None => Database::from_env()?,
    })
}

fn parse_list(items: &[String]) -> CliResult<Vec<Rational>> {
    items
        .iter()
        .map(|s| parse_rational(s).map_err(Failure::from))
        .collect()
}

fn germ_signature(g: &GermArgs) -> CliResult<GermSignature> {
    match (&g.weights, &g.degrees, &g.map) {
        (Some(w), Some(d), None) => Ok(GermSignature::from_rationals(&parse_list(w)?, &parse_list(d)?)?),
        (None, None, Some(m)) => Ok(infer_weights(&parse_monomial_map(m)?)?),
        _ => Err(Failure::Usage("give either --weights with --degrees, or --map".into())),
    }
}

fn print_warnings(r: &ResultRecord) {
    for w in &r.warnings {
        eprintln!("warning: {w}");
    }
}

fn emit(records: &[ResultRecord], json: bool, labelled: bool) {
    for r in records {
        print_warnings(r);
        if json {
            println!("{}", serde_json::to_string(r).expect("serializable"));
        } else if labelled {
            println!("{}: {}", r.invariant, r.value);
        } else {
            println!("{}", r.value);
        }
    }
}

/// Evaluates one named invariant; `all` expands to every applicable type.
pub(crate) fn evaluate(db: &Database, sig: &GermSignature, invariant: &str) -> thomforge::Result<Vec<ResultRecord>> {
    let one = |name: &str, r| vec![ResultRecord::new(sig, name, r)];
    Ok(match invariant {
        "mu_image" => one(invariant, mu_image(db, sig)?),
        "mu_image2" => one(invariant, mu_image2(db, sig)?),
        "mu_discriminant" => one(invariant, mu_discriminant(db, sig)?),
        "all" => count_all(db, sig)?
            .into_iter()
            .map(|(k, r)| ResultRecord::new(sig, &k.name, r))
            .collect(),
        name => {
            let key = SingularityKey::new(name, sig.kappa(), EntryKind::TpSource);
            one(&key.name, count_stable(db, sig, &key)?)
        }
    })
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Count { germ, kind, all, json } => {
            let db = load_db(&cli.db)?;
            let sig = germ_signature(&germ)?;
            let invariant = match (kind, all) {
                (Some(k), false) => k,
                (None, true) => "all".to_string(),
                _ => return Err(Failure::Usage("give --type or --all".into())),
            };
            let records = evaluate(&db, &sig, &invariant)?;
            emit(&records, json, all);
        }
        Command::Milnor { kind, germ, json } => {
            let db = load_db(&cli.db)?;
            let sig = germ_signature(&germ)?;
            emit(&evaluate(&db, &sig, kind.invariant())?, json, false);
        }
        Command::Tp { action } => run_tp(&cli.db, action)?,
        Command::Solve { job, json } => {
            let text = std::fs::read_to_string(&job)
                .map_err(|e| Failure::Usage(format!("{}: {e}", job.display())))?;
            let outcome = SolverJob::from_json(&text)?.solve()?;
            if json {
                println!("{}", records::solve_json(&outcome));
            } else {
                println!("{outcome}");
            }
            if !matches!(outcome, SolveOutcome::Unique { .. }) {
                return Err(Failure::Solve("no unique solution".into()));
            }
        }
        Command::Global { formula } => run_global(formula)?,
        Command::Batch { jsonl, jobs } => {
            let db = load_db(&cli.db)?;
            let text = std::fs::read_to_string(&jsonl)
                .map_err(|e| Failure::Usage(format!("{}: {e}", jsonl.display())))?;
            let lines: Vec<(usize, &str)> = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| (i + 1, l))
                .collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let out: Vec<String> = pool.install(|| {
                lines
                    .par_iter()
                    .map(|&(n, line)| batch_line(&db, n, line))
                    .collect()
            });
            for line in out {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn batch_line(db: &Database, n: usize, line: &str) -> String {
    let result = JobRecord::parse(line).and_then(|job| {
        let sig = job.signature()?;
        evaluate(db, &sig, &job.invariant)
    });
    let out = match result {
        Ok(mut records) if records.len() == 1 => BatchLine::Result(records.remove(0)),
        Ok(records) => BatchLine::Many { results: records },
        Err(e) => BatchLine::error(n, &e),
    };
    serde_json::to_string(&out).expect("serializable")
}

fn run_tp(db: &Option<PathBuf>, action: TpAction) -> CliResult<()> {
    let db = load_db(db)?;
    match action {
        TpAction::Show { key, kappa, kind, json } => {
            let kind: EntryKind = kind.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let e = db.lookup(&key, kappa, kind)?;
            if json {
                println!("{}", records::entry_json(e));
            } else {
                println!("{}", e.polynomial);
            }
        }
        TpAction::Eval { key, kappa, kind, order, germ } => {
            let sig = germ_signature(&germ)?;
            let kind: EntryKind = kind.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let e = db.lookup(&key, kappa.unwrap_or(sig.kappa()), kind)?;
            let top = e.polynomial.max_degree().unwrap_or(0);
            let order = order.unwrap_or(match e.polynomial.truncation() {
                Some(t) => t.min(top.max(e.max_valid_degree)),
                None => top,
            });
            if !kind.is_exact() && order > e.max_valid_degree {
                return Err(Error::BeyondValidity {
                    key: e.key.to_string(),
                    requested: order,
                    max: e.max_valid_degree,
                }
                .into());
            }
            println!("{}", specialize(&e.polynomial, &sig, order)?);
        }
        TpAction::Validate => {
            let report = db.validate_all();
            for c in &report.checks {
                let status = if c.passed { "ok  " } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("{status} {} {}", c.subject, c.check);
                } else {
                    println!("{status} {} {}: {}", c.subject, c.check, c.detail);
                }
            }
            if !report.all_passed() {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn run_global(formula: GlobalFormula) -> CliResult<()> {
    match formula {
        GlobalFormula::Enriques { d, delta, c, t } => {
            let r = enriques_invariants(d, delta, c, t)?;
            println!("c1^2 = {}", format_rational(&r.c1_sq));
            println!("c2 = {}", format_rational(&r.c2));
            println!("chi = {}", format_rational(&r.chi));
        }
        GlobalFormula::IzumiyaMarar { chi, c, t } => {
            println!("{}", izumiya_marar_real(chi, c, t)?);
        }
        GlobalFormula::ChiImage { intersections } => {
            let text = std::fs::read_to_string(&intersections)
                .map_err(|e| Failure::Usage(format!("{}: {e}", intersections.display())))?;
            let x: IntersectionNumbers = records::parse_intersections(&text)?;
            println!("{}", format_rational(&chi_image_global(&x)));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Solve(m) => eprintln!("{m}"),
                Failure::Checks => eprintln!("database validation failed"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
