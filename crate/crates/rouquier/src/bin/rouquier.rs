//! Command-line front end: hyperplane reports, block partitions, a/A tables
//! and the verification suites, with deterministic JSON or plain text on
//! stdout. Exit codes: 2 for invalid input, 1 for failed verification or an
//! internal invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rouquier::ariki_koike;
use rouquier::descent::{blocks_for_group, ContainedHyperplanes, GroupBlocks, GroupParams, Route};
use rouquier::rank2::{self, Rank2Spec};
use rouquier::report::{group_desc, rank2_desc, AaRow, Report, VerifySummary, WeightsEcho};
use rouquier::verify::{run_suite, Suite, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "rouquier",
    about = "Rouquier block partitions of cyclotomic Hecke algebras for G(de,e,r)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the essential hyperplanes of a family.
    Hyperplanes(HyperplanesArgs),
    /// Compute the Rouquier block partition for a group and weight system.
    Blocks(BlocksArgs),
    /// Tabulate the a/A invariants for the rank-2 family or its descents.
    Aa(AaArgs),
    /// Run the property suites against their independent oracles.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Ak,
    Rank2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HyperplanesArgs {
    /// Which family: `ak` for G(d,1,r), `rank2` for G(2d,2,2).
    #[arg(long, value_enum)]
    family: Family,
    /// The parameter d of the family.
    #[arg(long)]
    d: usize,
    /// The rank r (required for the ak family).
    #[arg(long)]
    r: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BlocksArgs {
    /// Compute for G(de,e,r): the parameter de.
    #[arg(long)]
    de: Option<usize>,
    /// Compute for G(de,e,r): the divisor e.
    #[arg(long)]
    e: Option<usize>,
    /// Compute for G(de,e,r): the rank r.
    #[arg(long)]
    r: Option<u32>,
    /// Weight exponents m_0,...,m_(d-1) with d = de/e.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    m: Option<Vec<i64>>,
    /// Weight exponent n.
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Direct rank-2 mode: `--family rank2` with --d/--a/--b/--c.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Rank-2 mode: the parameter d of G(2d,2,2).
    #[arg(long)]
    d: Option<usize>,
    /// Rank-2 mode: exponents a_0,a_1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    a: Option<Vec<i64>>,
    /// Rank-2 mode: exponents b_0,b_1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    b: Option<Vec<i64>>,
    /// Rank-2 mode: exponents c_0,...,c_(d-1).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    c: Option<Vec<i64>>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct AaArgs {
    /// The parameter d of G(2d,2,2).
    #[arg(long)]
    d: usize,
    /// Exponents a_0,a_1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    a: Vec<i64>,
    /// Exponents b_0,b_1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    b: Vec<i64>,
    /// Exponents c_0,...,c_(d-1).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    c: Vec<i64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Bound on the d-type parameters.
    #[arg(long, default_value_t = 4)]
    max_d: usize,
    /// Bound on the rank r.
    #[arg(long, default_value_t = 4)]
    max_r: u32,
    /// RNG seed for the randomised sweeps.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

fn invalid(field: &str, message: &str) -> ExitCode {
    eprintln!("error: invalid `{field}`: {message}");
    ExitCode::from(2)
}

fn internal(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(1)
}

fn emit(report: &Report, output: &OutputArgs) -> ExitCode {
    let body = match output.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &output.out {
        None => {
            print!("{body}");
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, body) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => internal(format!("cannot write {}: {err}", path.display())),
        },
    }
}

/// Emit, then fail with exit code 1 when a verification failed.
fn emit_verify(report: &Report, output: &OutputArgs, all_passed: bool) -> ExitCode {
    let body = match output.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    if let Some(path) = &output.out {
        if let Err(err) = std::fs::write(path, body) {
            return internal(format!("cannot write {}: {err}", path.display()));
        }
    } else {
        print!("{body}");
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_hyperplanes(args: HyperplanesArgs) -> ExitCode {
    let mut report = Report::new("hyperplanes");
    match args.family {
        Family::Ak => {
            let Some(r) = args.r else {
                return invalid("r", "the ak family needs a rank");
            };
            if args.d < 1 || r < 1 {
                return invalid("d", "need d >= 1 and r >= 1");
            }
            report.group = Some(group_desc(args.d, 1, r));
            report.hyperplanes = Some(
                ariki_koike::enumerate_hyperplanes(args.d, r)
                    .iter()
                    .map(|h| h.to_string())
                    .collect(),
            );
        }
        Family::Rank2 => {
            if args.d < 1 {
                return invalid("d", "need d >= 1");
            }
            report.group = Some(rank2_desc(args.d));
            report.hyperplanes = Some(
                rank2::hyperplanes(args.d)
                    .iter()
                    .map(|h| h.to_string())
                    .collect(),
            );
        }
    }
    emit(&report, &args.output)
}

fn run_blocks(args: BlocksArgs) -> ExitCode {
    if args.family == Some(Family::Rank2) {
        let Some(d) = args.d else {
            return invalid("d", "rank-2 mode needs --d");
        };
        let (Some(a), Some(b), Some(c)) = (&args.a, &args.b, &args.c) else {
            return invalid("a/b/c", "rank-2 mode needs --a, --b and --c");
        };
        if a.len() != 2 {
            return invalid("a", "expected exactly two comma-separated integers");
        }
        if b.len() != 2 {
            return invalid("b", "expected exactly two comma-separated integers");
        }
        let spec = match Rank2Spec::new(d, [a[0], a[1]], [b[0], b[1]], c.clone()) {
            Ok(spec) => spec,
            Err(err) => return invalid("c", &err.to_string()),
        };
        let contained = rank2::hyperplanes_containing(&spec);
        let blocks = rank2::blocks(&spec).map_labels(|l| rouquier::descent::CharLabel::Rank2(*l));
        let aa = rank2::labels(d)
            .into_iter()
            .map(|l| rouquier::descent::AaEntry {
                label: rouquier::descent::CharLabel::Rank2(l),
                a: rank2::a_value(l, &spec),
                big_a: rank2::big_a_value(l, &spec),
            })
            .collect();
        let g = GroupBlocks {
            params: GroupParams {
                de: 2 * d,
                e: 2,
                r: 2,
            },
            route: Route::Rank2Direct { d },
            blocks,
            hyperplanes: ContainedHyperplanes::Rank2(contained),
            aa: Some(aa),
        };
        let mut report = Report::new("blocks").with_group_blocks(&g);
        report.group = Some(rank2_desc(d));
        report.weights = Some(WeightsEcho {
            m: None,
            n: None,
            a: Some(a.clone()),
            b: Some(b.clone()),
            c: Some(c.clone()),
        });
        return emit(&report, &args.output);
    }

    let (Some(de), Some(e), Some(r)) = (args.de, args.e, args.r) else {
        return invalid("de/e/r", "need --de, --e and --r (or --family rank2)");
    };
    let Some(m) = &args.m else {
        return invalid("m", "need d = de/e comma-separated integers");
    };
    let n = args.n.unwrap_or(0);
    let params = match GroupParams::new(de, e, r) {
        Ok(p) => p,
        Err(err) => return invalid("de/e/r", &err.to_string()),
    };
    if m.len() != params.d() {
        return invalid(
            "m",
            &format!("expected {} integers, got {}", params.d(), m.len()),
        );
    }
    let g = match blocks_for_group(params, m, n) {
        Ok(g) => g,
        Err(err) => return internal(err),
    };
    let mut report = Report::new("blocks").with_group_blocks(&g);
    report.group = Some(group_desc(de, e, r));
    report.weights = Some(WeightsEcho {
        m: Some(m.clone()),
        n: Some(n),
        a: None,
        b: None,
        c: None,
    });
    emit(&report, &args.output)
}

fn run_aa(args: AaArgs) -> ExitCode {
    if args.a.len() != 2 {
        return invalid("a", "expected exactly two comma-separated integers");
    }
    if args.b.len() != 2 {
        return invalid("b", "expected exactly two comma-separated integers");
    }
    let spec = match Rank2Spec::new(args.d, [args.a[0], args.a[1]], [args.b[0], args.b[1]], args.c.clone()) {
        Ok(spec) => spec,
        Err(err) => return invalid("c", &err.to_string()),
    };
    let mut report = Report::new("aa");
    report.group = Some(rank2_desc(args.d));
    report.weights = Some(WeightsEcho {
        m: None,
        n: None,
        a: Some(args.a.clone()),
        b: Some(args.b.clone()),
        c: Some(args.c.clone()),
    });
    report.aa = Some(
        rank2::labels(args.d)
            .into_iter()
            .map(|l| {
                let a = rank2::a_value(l, &spec);
                let big_a = rank2::big_a_value(l, &spec);
                AaRow {
                    label: l.to_string(),
                    a: a.to_string(),
                    big_a: big_a.to_string(),
                    a_plus_a: (a + big_a).to_string(),
                }
            })
            .collect(),
    );
    emit(&report, &args.output)
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let Some(suite) = Suite::parse(&args.suite) else {
        return invalid(
            "suite",
            "expected one of: all, combinatorics, cyclotomic, schur, ariki-koike, rank2, descent",
        );
    };
    let cfg = VerifyConfig {
        max_d: args.max_d,
        max_r: args.max_r,
        seed: args.seed,
    };
    let checks = run_suite(suite, &cfg);
    let mut report = Report::new("verify");
    report.verify = Some(VerifySummary::from_checks(
        cfg.seed, cfg.max_d, cfg.max_r, &checks,
    ));
    let all_passed = checks.iter().all(|c| c.passed);
    emit_verify(&report, &args.output, all_passed)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Hyperplanes(args) => run_hyperplanes(args),
        Command::Blocks(args) => run_blocks(args),
        Command::Aa(args) => run_aa(args),
        Command::Verify(args) => run_verify(args),
    }
}
