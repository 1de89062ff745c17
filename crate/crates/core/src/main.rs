use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use srsq::complex::named::NamedComplex;
use srsq::complex::{SimplicialComplex, VertexSet};
use srsq::criteria::{self, CONDITION3_BOUND};
use srsq::homology::{self, FieldSpec};
use srsq::ideal::{self, Monomial, MonomialIdeal};
use srsq::reproduce::{self, ReproOptions};
use srsq::takayama::{self, DEFAULT_BUDGET};
use srsq::Error;

#[derive(Parser)]
#[command(name = "srsq", version, about = "Stanley-Reisner ideals, symbolic squares and Cohen-Macaulay tests")]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named complex as JSON.
    Generate(GenerateArgs),
    /// Transform a complex read from stdin.
    Complex {
        #[command(subcommand)]
        op: ComplexOp,
    },
    /// Monomial ideal operations on JSON from stdin.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Run a criterion on a complex read from stdin.
    Check(CheckArgs),
    /// Run the full example battery.
    ReproducePaper {
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Audit random pure complexes.
    Explore {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value = "Q,F2")]
        fields: String,
        #[arg(long)]
        budget: Option<u64>,
        /// Directory receiving one JSON file per counterexample candidate.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    /// `cycle`, `path`, `cross`, `cross-stellar`, `rp2`, `phantom-pentagon`,
    /// `four-path`, `conjecture-graph`, `disjoint-pentagons`; `name:param` works too.
    name: String,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Subcommand)]
enum ComplexOp {
    /// Link of a face, renumbered over its own vertices.
    Link {
        #[arg(long, value_delimiter = ',')]
        face: Vec<usize>,
    },
    /// Star of a face.
    Star {
        #[arg(long, value_delimiter = ',')]
        face: Vec<usize>,
    },
    Skeleton {
        #[arg(long)]
        k: isize,
    },
    /// Join with the complex in `--other`.
    Join {
        #[arg(long)]
        other: PathBuf,
    },
    /// Stellar subdivision on a face; the new vertex is n + 1.
    Stellar {
        #[arg(long, value_delimiter = ',')]
        face: Vec<usize>,
    },
    Core,
    /// Restriction to a vertex set.
    Restrict {
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<usize>,
    },
    Cone,
    Fvector,
}

#[derive(Subcommand)]
enum IdealOp {
    /// Stanley-Reisner ideal of a complex.
    Sr,
    /// Complex of (the radical of) an ideal.
    Complex,
    Power {
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Symbolic power of a squarefree ideal or of a complex's ideal.
    Symbolic {
        #[arg(long, default_value_t = 2)]
        l: u32,
    },
    Intersect {
        #[arg(long)]
        other: PathBuf,
    },
    Equals {
        #[arg(long)]
        other: PathBuf,
    },
    /// Decide I^(2) = I^2 by special triangles, cross-checked directly.
    EqualsSym2,
    Triangles,
    Contains {
        #[arg(long, value_delimiter = ',')]
        monomial: Vec<u32>,
    },
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    what: CheckKind,
    #[arg(long, default_value = "Q,F2")]
    fields: String,
    #[arg(long)]
    budget: Option<u64>,
    /// Vertex bound for the non-face triple check.
    #[arg(long, default_value_t = CONDITION3_BOUND)]
    bound: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Homology,
    Cm,
    Gorenstein,
    LocallyGorenstein,
    S2,
    Depth2,
    Depth,
    CmSquare,
    CmSymbolicSquare,
    Condition3,
    Audit,
}

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

enum Failure {
    Lib(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read_stdin() -> CliResult<Value> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(input_error)?;
    serde_json::from_str(&s).map_err(|e| input_error(format!("stdin: {e}")))
}

fn read_file(path: &PathBuf) -> CliResult<Value> {
    let s = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&s).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn as_complex(v: Value) -> CliResult<SimplicialComplex> {
    serde_json::from_value(v).map_err(|e| input_error(format!("expected a complex: {e}")))
}

/// Accepts either an ideal or a complex (taking its Stanley-Reisner ideal).
fn as_ideal(v: Value) -> CliResult<MonomialIdeal> {
    if v.get("facets").is_some() {
        return Ok(ideal::stanley_reisner(&as_complex(v)?));
    }
    serde_json::from_value(v).map_err(|e| input_error(format!("expected an ideal: {e}")))
}

fn print<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn budget(flag: Option<u64>) -> CliResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("SRSQ_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| input_error(format!("SRSQ_BUDGET={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn face(vertices: &[usize]) -> VertexSet {
    vertices.iter().copied().collect()
}

fn generate(args: GenerateArgs) -> CliResult<()> {
    let param = args.d.or(args.n).or(args.k).or(args.m).or(args.r);
    let spec = match (args.name.contains(':'), param) {
        (false, Some(p)) => format!("{}:{p}", args.name),
        _ => args.name,
    };
    let named: NamedComplex = spec.parse()?;
    print(&named.build()?);
    Ok(())
}

fn complex_op(op: ComplexOp) -> CliResult<()> {
    let c = as_complex(read_stdin()?)?;
    match op {
        ComplexOp::Link { face: f } => {
            let link = c.link(face(&f))?;
            print(&json!({ "complex": link.complex, "labels": link.labels }));
        }
        ComplexOp::Star { face: f } => print(&c.star(face(&f))?),
        ComplexOp::Skeleton { k } => print(&c.skeleton(k)?),
        ComplexOp::Join { other } => print(&c.join(&as_complex(read_file(&other)?)?)?),
        ComplexOp::Stellar { face: f } => print(&c.stellar_subdivision(face(&f))?),
        ComplexOp::Core => {
            let core = c.core();
            print(&json!({ "complex": core.complex, "labels": core.labels }));
        }
        ComplexOp::Restrict { vertices } => print(&c.restrict(face(&vertices))?),
        ComplexOp::Cone => print(&c.cone()?),
        ComplexOp::Fvector => print(&c.f_vector()),
    }
    Ok(())
}

fn ideal_op(op: IdealOp) -> CliResult<()> {
    let input = read_stdin()?;
    match op {
        IdealOp::Sr => print(&ideal::stanley_reisner(&as_complex(input)?)),
        IdealOp::Complex => print(&ideal::complex_of_ideal(&as_ideal(input)?.radical())?),
        IdealOp::Power { k } => print(&as_ideal(input)?.power(k)),
        IdealOp::Symbolic { l } => print(&ideal::symbolic_power_of_ideal(&as_ideal(input)?, l)?),
        IdealOp::Intersect { other } => {
            print(&as_ideal(input)?.intersect(&as_ideal(read_file(&other)?)?)?)
        }
        IdealOp::Equals { other } => {
            print(&json!({ "equal": as_ideal(input)? == as_ideal(read_file(&other)?)? }))
        }
        IdealOp::EqualsSym2 => {
            let i = as_ideal(input)?;
            let verdict = ideal::symbolic2_equals_square(&i)?;
            let direct = ideal::symbolic_power_of_ideal(&i, 2)? == i.power(2);
            print(&json!({
                "equal": verdict.equal,
                "certificate": verdict.certificate,
                "direct_comparison": direct,
            }));
        }
        IdealOp::Triangles => print(&ideal::special_triangles(&as_ideal(input)?)?),
        IdealOp::Contains { monomial } => {
            let i = as_ideal(input)?;
            print(&json!({ "contains": i.contains(&Monomial::new(monomial))? }));
        }
    }
    Ok(())
}

fn per_field<T: Serialize>(fields: &[FieldSpec], f: impl Fn(FieldSpec) -> CliResult<T>) -> CliResult<()> {
    let out = fields.iter().map(|&k| f(k)).collect::<CliResult<Vec<T>>>()?;
    print(&out);
    Ok(())
}

fn check(args: CheckArgs) -> CliResult<ExitCode> {
    let fields = FieldSpec::parse_list(&args.fields)?;
    let budget = budget(args.budget)?;
    let c = as_complex(read_stdin()?)?;
    match args.what {
        CheckKind::Homology => per_field(&fields, |k| Ok(homology::reduced_homology(&c, k)))?,
        CheckKind::Cm => per_field(&fields, |k| Ok(homology::is_cohen_macaulay(&c, k)))?,
        CheckKind::Gorenstein => per_field(&fields, |k| Ok(homology::is_gorenstein(&c, k)))?,
        CheckKind::LocallyGorenstein => {
            per_field(&fields, |k| Ok(homology::is_locally_gorenstein(&c, k)))?
        }
        CheckKind::S2 => print(&criteria::s2_criterion(&c)?),
        CheckKind::Depth2 => print(&criteria::depth2_criterion(&c)?),
        CheckKind::Depth => per_field(&fields, |k| {
            Ok(takayama::depth_via_takayama(&ideal::stanley_reisner(&c), k, budget)?)
        })?,
        CheckKind::CmSquare => {
            per_field(&fields, |k| Ok(takayama::cm_square_with_fallback(&c, k, budget)?))?
        }
        CheckKind::CmSymbolicSquare => {
            per_field(&fields, |k| Ok(takayama::is_cm_symbolic_square(&c, k, budget)?))?
        }
        CheckKind::Condition3 => print(&criteria::condition3_check(&c, args.bound)?),
        CheckKind::Audit => {
            let report = criteria::paper_audit(&c, &fields, budget, args.bound)?;
            print(&report);
            if !report.violations().is_empty() {
                return Ok(ExitCode::from(EXIT_VIOLATION));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn explore(
    seed: u64,
    count: usize,
    n_max: usize,
    fields: &str,
    budget_flag: Option<u64>,
    out_dir: Option<PathBuf>,
) -> CliResult<ExitCode> {
    let fields = FieldSpec::parse_list(fields)?;
    let reports = criteria::explore_random(seed, count, n_max, &fields, budget(budget_flag)?)?;
    let flagged: Vec<&criteria::AuditReport> =
        reports.iter().filter(|r| !r.violations().is_empty()).collect();
    if let Some(dir) = &out_dir {
        fs::create_dir_all(dir).map_err(input_error)?;
        for (k, r) in flagged.iter().enumerate() {
            let path = dir.join(format!("candidate-{seed}-{k}.json"));
            let body = serde_json::to_string_pretty(r).expect("serializable");
            fs::write(&path, body).map_err(input_error)?;
        }
    }
    let cm_squares = reports.iter().filter(|r| r.cm_square()).count();
    print(&json!({
        "seed": seed,
        "requested": count,
        "audited": reports.len(),
        "cm_squares": cm_squares,
        "violations": flagged.iter().map(|r| json!({
            "complex": r.complex,
            "violated": r.violations().iter().map(|v| v.name.clone()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    }));
    Ok(if flagged.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Generate(args) => generate(args)?,
        Command::Complex { op } => complex_op(op)?,
        Command::Ideal { op } => ideal_op(op)?,
        Command::Check(args) => return check(args),
        Command::ReproducePaper { format, seed, budget: b } => {
            let opts = ReproOptions {
                budget: budget(b)?,
                seed,
                ..ReproOptions::default()
            };
            let report = reproduce::run(&opts)?;
            match format {
                Format::Md => print!("{}", report.to_markdown()),
                Format::Json => print(&report),
            }
            return Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Explore {
            seed,
            count,
            n_max,
            fields,
            budget: b,
            out_dir,
        } => return explore(seed, count, n_max, &fields, b, out_dir),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("srsq: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Lib(e @ Error::BudgetExceeded { .. })) => {
            eprintln!("srsq: {e} (raise --budget or SRSQ_BUDGET)");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("srsq: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("srsq: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
