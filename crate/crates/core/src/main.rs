use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use symdyck::numbers::{
    hoggatt_neg1_closed_table, hoggatt_table, narayana_table, q_catalan, symmetric_narayana_row,
    QBinomialTable,
};
use symdyck::paths::{
    count_u_dp, count_u_enumeration, count_u_recurrence, enumerate_dyck, enumerate_symmetric_dyck,
    valley_count, GgTable,
};
use symdyck::table::{render_sequence, TableFormat, TriangleTable};
use symdyck::verify::{run_suite_with, Mutation, SuiteConfig};
use symdyck::{Path, Step};

/// Exhaustive modes refuse larger `n` without `--force`.
const ENUM_GUARD: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "symdyck",
    version,
    about = "Dyck paths, valleys and q-Narayana numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a number triangle or sequence.
    Table(TableArgs),
    /// List Dyck or symmetric Dyck paths.
    Enum(EnumArgs),
    /// Run the identity sweep and print a report.
    Verify(VerifyArgs),
    /// Time enumeration, dynamic program and closed form for u(n, k).
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Hoggatt,
    #[value(name = "hoggatt-neg1")]
    HoggattNeg1,
    Narayana,
    U,
    #[value(name = "q-narayana")]
    QNarayana,
    #[value(name = "q-catalan")]
    QCatalan,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Tsv,
    Bfile,
    Pretty,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Tsv => TableFormat::Tsv,
            Format::Bfile => TableFormat::Bfile,
            Format::Pretty => TableFormat::Pretty,
        }
    }
}

#[derive(Args, Debug)]
struct TableArgs {
    family: Family,
    /// Last row to print.
    n: usize,
    #[arg(default_value = "tsv")]
    format: Format,
}

#[derive(Args, Debug)]
struct EnumArgs {
    /// Semi-length.
    n: usize,
    /// Only symmetric Dyck paths.
    #[arg(long)]
    symmetric: bool,
    /// Only paths with exactly this many valleys.
    #[arg(long)]
    valleys: Option<usize>,
    /// Draw each path below its word.
    #[arg(long)]
    render: bool,
    /// Print counts by number of valleys instead of the paths.
    #[arg(long)]
    distribution: bool,
    /// Allow n above the enumeration guard.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Tsv,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 14)]
    max_enum: usize,
    #[arg(long, default_value_t = 200)]
    max_dp: usize,
    /// Bound for identities between expanded q-polynomials [default: min(max-dp, 60)].
    #[arg(long)]
    max_poly: Option<usize>,
    /// Bound for closed-form sums [default: max(max-dp, 500)].
    #[arg(long)]
    max_closed: Option<usize>,
    /// Golden b-file for the u-triangle.
    #[arg(long)]
    golden: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Perturb one kernel: narayana:N:K:+D, closed:N:K:+D or g:N:J:K:+D.
    #[arg(long)]
    mutation: Option<Mutation>,
    /// Allow max-enum above the enumeration guard.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    /// Largest n timed by exhaustive enumeration.
    #[arg(long, default_value_t = 14)]
    enum_max: usize,
    /// Largest n timed by the dynamic program.
    #[arg(long, default_value_t = 200)]
    dp_max: usize,
    /// Allow enum-max above the enumeration guard.
    #[arg(long)]
    force: bool,
}

fn subcommand_usage(subcommand: Option<&str>) -> String {
    let mut cmd = Cli::command();
    cmd.build();
    match subcommand.and_then(|name| cmd.find_subcommand_mut(name)) {
        Some(sub) => sub
            .clone()
            .bin_name(format!("symdyck {}", sub.get_name()))
            .render_usage(),
        None => cmd.render_usage(),
    }
    .to_string()
}

fn usage_error(subcommand: &str, kind: ErrorKind, message: impl std::fmt::Display) -> ! {
    let mut cmd = Cli::command();
    cmd.build();
    let mut sub = cmd
        .find_subcommand_mut(subcommand)
        .expect("known subcommand")
        .clone()
        .bin_name(format!("symdyck {subcommand}"));
    sub.error(kind, message).exit()
}

/// Parses the command line; every usage error prints a usage line on stderr
/// and exits with status 2.
fn parse_cli() -> Cli {
    let args: Vec<String> = std::env::args().collect();
    match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.render().to_string();
            eprint!("{rendered}");
            if !rendered.contains("Usage:") {
                eprintln!();
                eprintln!("{}", subcommand_usage(args.get(1).map(String::as_str)));
            }
            std::process::exit(2);
        }
    }
}

fn main() -> ExitCode {
    let cli = parse_cli();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Table(args) => cmd_table(&args, &mut out),
        Command::Enum(args) => cmd_enum(&args, &mut out),
        Command::Verify(args) => cmd_verify(&args, &mut out),
        Command::Bench(args) => cmd_bench(&args, &mut out),
    };
    match result.and_then(|code| out.flush().map(|()| code)) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_table(args: &TableArgs, out: &mut impl Write) -> io::Result<ExitCode> {
    let n = args.n;
    let format = TableFormat::from(args.format);
    let text = match args.family {
        Family::Hoggatt => hoggatt_table(n as i64).render(format),
        Family::HoggattNeg1 => hoggatt_neg1_closed_table(n as i64).render(format),
        Family::Narayana => narayana_table(n as i64).render(format),
        Family::U => count_u_recurrence(n).render(format),
        Family::QNarayana => {
            let binomials = QBinomialTable::new(n as i64 + 1);
            let table = TriangleTable::from_fn(1, n, |n, k| {
                binomials
                    .q_narayana(n as i64, k as i64)
                    .expect("q-Narayana division is exact")
            });
            table.render(format)
        }
        Family::QCatalan => {
            let values: Vec<_> = (0..=n as i64)
                .map(|i| q_catalan(i).expect("q-Catalan division is exact"))
                .collect();
            render_sequence(0, &values, format)
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_enum(args: &EnumArgs, out: &mut impl Write) -> io::Result<ExitCode> {
    let n = args.n;
    if n == 0 {
        usage_error("enum", ErrorKind::ValueValidation, "n must be at least 1");
    }
    if n > ENUM_GUARD && !args.force {
        usage_error(
            "enum",
            ErrorKind::ValueValidation,
            symdyck::Error::GuardExceeded {
                n: n as u64,
                cap: ENUM_GUARD as u64,
            },
        );
    }

    let mut by_valleys = vec![0u64; n.max(1)];
    let mut count = 0u64;
    let mut emit = |word: &[Step], out: &mut dyn Write| -> io::Result<()> {
        let k = valley_count(word);
        if args.valleys.is_some_and(|v| v != k) {
            return Ok(());
        }
        count += 1;
        by_valleys[k] += 1;
        if !args.distribution {
            let path = Path::new(word.to_vec());
            writeln!(out, "{path}")?;
            if args.render {
                write!(out, "{}", path.render_ascii())?;
                writeln!(out)?;
            }
        }
        Ok(())
    };

    if args.symmetric {
        let mut it = enumerate_symmetric_dyck(n);
        while let Some(w) = it.next_word() {
            emit(w, out)?;
        }
    } else {
        let mut it = enumerate_dyck(n);
        while let Some(w) = it.next_word() {
            emit(w, out)?;
        }
    }

    if args.distribution {
        for (k, c) in by_valleys.iter().enumerate() {
            if args.valleys.is_none_or(|v| v == k) {
                writeln!(out, "{k}\t{c}")?;
            }
        }
    }
    writeln!(out, "count {count}")?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> io::Result<ExitCode> {
    if args.max_enum == 0 || args.max_dp == 0 {
        usage_error(
            "verify",
            ErrorKind::ValueValidation,
            "--max-enum and --max-dp must be at least 1",
        );
    }
    if args.max_enum > args.max_dp {
        usage_error(
            "verify",
            ErrorKind::ArgumentConflict,
            "--max-enum must not exceed --max-dp",
        );
    }
    if args.max_enum > ENUM_GUARD && !args.force {
        usage_error(
            "verify",
            ErrorKind::ValueValidation,
            symdyck::Error::GuardExceeded {
                n: args.max_enum as u64,
                cap: ENUM_GUARD as u64,
            },
        );
    }
    let mut config = SuiteConfig::new(args.max_enum, args.max_dp);
    if let Some(p) = args.max_poly {
        config.max_poly = p;
    }
    config.max_closed = args
        .max_closed
        .unwrap_or(args.max_dp.max(symdyck::verify::DEFAULT_MAX_CLOSED));
    if let Some(g) = &args.golden {
        config.golden = g.clone();
    }
    config.mutation = args.mutation;

    let report = run_suite_with(&config);
    let text = match args.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Tsv => report.to_tsv(),
    };
    out.write_all(text.as_bytes())?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// `sum_k (k + 1) u(n, k)` reduced mod the Mersenne prime `2^61 - 1`.
fn checksum(row: &[BigInt]) -> u64 {
    let modulus = BigInt::from((1u64 << 61) - 1);
    let total: BigInt = row.iter().enumerate().map(|(k, v)| v * (k + 1)).sum();
    (total % &modulus)
        .to_u64()
        .expect("reduced checksum fits in u64")
}

fn cmd_bench(args: &BenchArgs, out: &mut impl Write) -> io::Result<ExitCode> {
    if args.from == 0 && args.from <= args.to {
        usage_error(
            "bench",
            ErrorKind::ValueValidation,
            "--from must be at least 1",
        );
    }
    if args.enum_max > ENUM_GUARD && !args.force {
        usage_error(
            "bench",
            ErrorKind::ValueValidation,
            symdyck::Error::GuardExceeded {
                n: args.enum_max as u64,
                cap: ENUM_GUARD as u64,
            },
        );
    }
    writeln!(out, "n,method,nanoseconds,checksum")?;
    for n in args.from..=args.to {
        let mut sums = Vec::new();
        if n <= args.enum_max {
            let start = Instant::now();
            let row = count_u_enumeration(n);
            let ns = start.elapsed().as_nanos();
            sums.push(("enumeration", ns, checksum(&row)));
        }
        if n <= args.dp_max {
            let start = Instant::now();
            let table = GgTable::build(n);
            let row = count_u_dp(n, &table);
            let ns = start.elapsed().as_nanos();
            sums.push(("dp", ns, checksum(&row)));
        }
        let start = Instant::now();
        let row = symmetric_narayana_row(n as i64);
        let ns = start.elapsed().as_nanos();
        sums.push(("closed", ns, checksum(&row)));

        for (method, ns, sum) in &sums {
            writeln!(out, "{n},{method},{ns},{sum}")?;
        }
        if sums.windows(2).any(|w| w[0].2 != w[1].2) {
            eprintln!("error: checksums disagree at n = {n}");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}
