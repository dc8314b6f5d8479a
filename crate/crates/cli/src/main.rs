mod docs;
mod emit;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use two2one_core::lowdeg::{check_lemma, Lemma};
use two2one_core::polyring::text::parse_sparse;
use two2one_core::search::{
    compare_with_table, count_curve_points, search, Dedupe, FieldDesc, SearchOptions, Shape, TableId, LONG_RUN_MAX_N,
    SPARSE_MAX_N,
};
use two2one_core::two2one::{
    family_instances, is_two_to_one, make_family, preimage_histogram, verify_resultant_identity,
};
use two2one_core::{make_field, Error, Fe, FieldCtx};

use docs::{CheckDoc, FamilyDoc, Instance, PointsDoc, TablesDoc};
use emit::{emit, Emit, Format};

#[derive(Parser, Debug)]
#[command(name = "two2one", version, about = "Verify, construct and search for 2-to-1 polynomials over GF(2^n)")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "TWO2ONE_FORMAT", default_value = "text")]
    format: Format,
    /// Worker threads for the parallel engines (default: available parallelism)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Extension degree
    #[arg(long)]
    n: u32,
    /// Defining polynomial as hex bits, e.g. 0x25 for x^5+x^2+1 (default: least irreducible)
    #[arg(long, value_parser = parse_modulus)]
    modulus: Option<u64>,
}

impl FieldArgs {
    fn ctx(&self) -> Result<FieldCtx, Error> {
        make_field(self.n, self.modulus)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Preimage histogram and 2-to-1 verdict of a polynomial, e.g. "x^3+0x2*x"
    Check {
        poly: String,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Construct a family member and verify every instance
    Family {
        /// Family id, e.g. tri_I, quad_05, bin_glynn1, deg5_t1_row_03
        id: String,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Exhaustive search over one template
    Search {
        #[arg(long)]
        shape: Shape,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "qm")]
        dedupe: Dedupe,
        /// Allow n = 7 for the sparse shapes
        #[arg(long)]
        long: bool,
        /// Keep classes containing linearized polynomials
        #[arg(long)]
        include_linearized: bool,
    },
    /// Run the searches behind a reference table and compare
    Tables {
        /// I, II or III
        #[arg(long)]
        which: TableId,
        /// Largest n for tables II and III
        #[arg(long, default_value_t = SPARSE_MAX_N)]
        n_max: u32,
        /// Allow n = 7
        #[arg(long)]
        long: bool,
    },
    /// Compare a resultant with its closed form for every non-degenerate a
    Resultant {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        theorem: u8,
        #[arg(long)]
        n: u32,
    },
    /// Affine points of the curve attached to a normalized quintic
    CountPoints {
        #[arg(long)]
        a3: Fe,
        #[arg(long)]
        a2: Fe,
        #[arg(long)]
        a1: Fe,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Exhaustive check of a low-degree criterion against root scans
    Lemma {
        /// 2.4 (quadratic), 2.5 (cubic) or 2.6 (quartic)
        #[arg(long)]
        which: Lemma,
        #[command(flatten)]
        field: FieldArgs,
    },
}

fn parse_modulus(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).ok_or("modulus must be 0x-prefixed hex")?;
    u64::from_str_radix(digits, 16).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let hint = match e {
            Error::LongRunRequired { .. } => " (pass --long)",
            Error::DegreeOutOfRange(_) | Error::ModulusDegree { .. } | Error::ReducibleModulus { .. } => {
                " (check --n and --modulus)"
            }
            _ => "",
        };
        Failure::Usage(format!("{e}{hint}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Emits the document; `Ok(false)` means a mathematical mismatch.
type Outcome = Result<bool, Failure>;

fn finish<T: Emit>(format: Format, doc: &T, ok: bool) -> Outcome {
    emit(format, doc)?;
    Ok(ok)
}

fn in_field(ctx: &FieldCtx, x: Fe) -> Result<Fe, Error> {
    ctx.elem(x.bits() as u64)
}

fn run_check(format: Format, poly: &str, field: &FieldArgs) -> Outcome {
    let ctx = field.ctx()?;
    let f = parse_sparse(poly)?;
    for t in f.terms() {
        in_field(&ctx, t.coeff)?;
    }
    let histogram = preimage_histogram(&ctx, &f)?.summary();
    finish(format, &CheckDoc { field: FieldDesc::of(&ctx), poly: f, histogram }, true)
}

fn run_family(format: Format, id: &str, field: &FieldArgs) -> Outcome {
    let ctx = field.ctx()?;
    let id = id.parse()?;
    make_family(id, &ctx)?;
    let instances = family_instances(id, &ctx)?
        .into_iter()
        .map(|poly| Ok(Instance { two_to_one: is_two_to_one(&ctx, &poly)?, poly }))
        .collect::<Result<Vec<_>, Error>>()?;
    let verified = instances.iter().all(|i| i.two_to_one);
    let doc = FamilyDoc { family: id.to_string(), field: FieldDesc::of(&ctx), instances, verified };
    finish(format, &doc, verified)
}

fn run_search(format: Format, shape: Shape, field: &FieldArgs, opts: SearchOptions) -> Outcome {
    let ctx = field.ctx()?;
    let report = search(&ctx, shape, opts)?;
    if let Some(ms) = report.elapsed_ms {
        eprintln!("{shape} search over {ctx}: {ms} ms");
    }
    let report = if format == Format::Json { report } else { report.without_timing() };
    finish(format, &report, true)
}

fn table_degrees(table: TableId, n_max: u32, long: bool) -> Result<Vec<u32>, Failure> {
    if table == TableId::I {
        return Ok(vec![3]);
    }
    if !(3..=LONG_RUN_MAX_N).contains(&n_max) {
        return Err(Failure::Usage(format!("--n-max must be in 3..={LONG_RUN_MAX_N}, got {n_max}")));
    }
    if n_max > SPARSE_MAX_N && !long {
        return Err(Failure::Usage(format!("--n-max {n_max} needs the long-run flag (pass --long)")));
    }
    Ok((3..=n_max).collect())
}

fn run_tables(format: Format, table: TableId, n_max: u32, long: bool) -> Outcome {
    let dedupe = if table == TableId::I { Dedupe::None } else { Dedupe::Qm };
    let opts = SearchOptions { dedupe, long_run: long, include_linearized: false };
    let mut diffs = Vec::new();
    for n in table_degrees(table, n_max, long)? {
        let ctx = make_field(n, None)?;
        let start = Instant::now();
        let report = search(&ctx, table.shape(), opts)?;
        eprintln!("table {table}: {} search over {ctx}: {} ms", table.shape(), start.elapsed().as_millis());
        diffs.push(compare_with_table(&report, table)?);
    }
    let empty = diffs.iter().all(|d| d.is_empty());
    finish(format, &TablesDoc { table, diffs, empty }, empty)
}

fn run_resultant(format: Format, theorem: u8, n: u32) -> Outcome {
    let ctx = make_field(n, None)?;
    let check = verify_resultant_identity(theorem, &ctx)?;
    let ok = check.passed();
    finish(format, &check, ok)
}

fn run_count_points(format: Format, a: [Fe; 3], field: &FieldArgs) -> Outcome {
    let ctx = field.ctx()?;
    let [a3, a2, a1] = [in_field(&ctx, a[0])?, in_field(&ctx, a[1])?, in_field(&ctx, a[2])?];
    let count = count_curve_points(&ctx, a3, a2, a1)?;
    let ok = count.consistent();
    finish(format, &PointsDoc { field: FieldDesc::of(&ctx), a3, a2, a1, count }, ok)
}

fn run_lemma(format: Format, lemma: Lemma, field: &FieldArgs) -> Outcome {
    let ctx = field.ctx()?;
    let check = check_lemma(&ctx, lemma)?;
    let ok = check.passed();
    finish(format, &check, ok)
}

fn run(cli: Cli) -> Outcome {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {w} workers: {e}")))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Check { poly, field } => run_check(format, &poly, &field),
        Command::Family { id, field } => run_family(format, &id, &field),
        Command::Search { shape, field, dedupe, long, include_linearized } => {
            run_search(format, shape, &field, SearchOptions { dedupe, long_run: long, include_linearized })
        }
        Command::Tables { which, n_max, long } => run_tables(format, which, n_max, long),
        Command::Resultant { theorem, n } => run_resultant(format, theorem, n),
        Command::CountPoints { a3, a2, a1, field } => run_count_points(format, [a3, a2, a1], &field),
        Command::Lemma { which, field } => run_lemma(format, which, &field),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
