//! `qglf`: exact factorization counts in `GL_n(F_q)` from the command line.
//!
//! One subcommand per reproducible artifact: closed-form coefficients,
//! count tables (by any computation path or all of them), a cross-path
//! verification driver, growth-ratio sweeps, the expected genus, the
//! fixed-space census, and raw brute-force tables.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 enumeration budget exceeded.

mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use qglf::coeffs::{b_multi, b_two, growth_ratio_sweep, m_q, p_g_polynomial, reflection_count};
use qglf::exact::{Domain, NumericQ, SymbolicQ};
use qglf::genfun::{a_table, expected_genus, fulman_series, TablePath};
use qglf::glnq::{find_regular_elliptic, GlError};
use qglf::oracle::{brute_count_gl, OracleConfig, OracleError};
use qglf::table::CountTable;

use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "qglf",
    version,
    about = "Exact factorization counts in GL_n(F_q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form coefficients: M-sums, two- and k-factor coefficients,
    /// reflection counts, genus polynomials
    Coeff(CoeffArgs),
    /// Count table of factorizations by fixed space dimensions
    Table(TableArgs),
    /// Compare every computation path cell by cell
    Verify(VerifyArgs),
    /// Growth-ratio sweep for fixed-genus factorization counts
    Asympt(AsymptArgs),
    /// Expected genus of a uniformly random two-factor factorization
    ExpectedGenus(ExpectedGenusArgs),
    /// Census of GL_n(F_q) by fixed space dimension
    Fulman(FulmanArgs),
    /// Raw brute-force count table over an enumerated group
    Oracle(OracleArgs),
}

/// `q`: either a concrete integer or the formal variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum QArg {
    Sym,
    Num(u64),
}

impl std::str::FromStr for QArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sym" {
            return Ok(QArg::Sym);
        }
        s.parse::<u64>()
            .map(QArg::Num)
            .map_err(|_| format!("expected a positive integer or \"sym\", got {:?}", s))
    }
}

impl fmt::Display for QArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QArg::Sym => write!(f, "sym"),
            QArg::Num(q) => write!(f, "{}", q),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoeffKind {
    /// Alternating M-sum M^m_{r_1..r_k}(q)
    Mq,
    /// Two-factor coefficient b_{t,u}(q)
    B2,
    /// k-factor coefficient b_{p_1..p_k}(q)
    Bk,
    /// Reflection factorization count t_q(n, l)
    Tq,
    /// Genus polynomial P_g(x, y, z, q)
    Pg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Charsum,
    Oracle,
    All,
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long, value_enum)]
    kind: CoeffKind,
    /// Formal ("sym") or integer q
    #[arg(long, default_value = "sym")]
    q: QArg,
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated index vector, e.g. "1,1"
    #[arg(long)]
    rs: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    /// Comma-separated index vector for the k-factor coefficient
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    q: QArg,
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    #[arg(long, env = "QGLF_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Prime q (the oracle path enumerates the group)
    #[arg(long)]
    q: u64,
    #[arg(long, env = "QGLF_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct AsymptArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    q: u64,
    /// Smallest rank in the sweep (default 2g + 2)
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ExpectedGenusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "sym")]
    q: QArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct FulmanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "sym")]
    q: QArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u64,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Use a Singer cycle (full multiplicative order) as the fixed element
    #[arg(long)]
    singer: bool,
    #[arg(long, env = "QGLF_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn require_prime(q: u64) -> Result<()> {
    if q < 2
        || (2..q)
            .take_while(|d| d * d <= q)
            .any(|d| q.is_multiple_of(d))
    {
        return Err(usage(format!("q = {} must be a prime for this command", q)));
    }
    Ok(())
}

fn parse_vec(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad index vector component {:?}", part)))
        })
        .collect()
}

/// Render a rational as a decimal integer when possible, else `p/q`.
fn rational_str(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Evaluate a coefficient formula in the domain selected by `q`.
fn in_domain(q: QArg, f: impl Fn(&SymbolicQ) -> qglf::exact::QRational) -> String {
    match q {
        QArg::Sym => f(&SymbolicQ).to_string(),
        QArg::Num(q) => {
            let dom = NumericQ::new(q);
            let sym = f(&SymbolicQ);
            let v = dom.from_qrational(&sym).expect("denominator nonzero at q");
            rational_str(&v)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(agreement) => {
            if agreement {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(classify(&e))
        }
    }
}

fn classify(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    if let Some(oe) = e.downcast_ref::<OracleError>() {
        return match oe {
            OracleError::BudgetExceeded { .. } | OracleError::Enumeration(_) => 3,
            OracleError::NotRegularElliptic => 1,
        };
    }
    if e.downcast_ref::<GlError>().is_some() {
        return 3;
    }
    1
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Coeff(args) => cmd_coeff(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Asympt(args) => cmd_asympt(args),
        Command::ExpectedGenus(args) => cmd_expected_genus(args),
        Command::Fulman(args) => cmd_fulman(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn cmd_coeff(args: CoeffArgs) -> Result<bool> {
    let mut report = Report::new("coeff");
    report.param("q", args.q);
    let value = match args.kind {
        CoeffKind::Mq => {
            report.param("kind", "mq");
            let m = args
                .m
                .ok_or_else(|| usage("--m is required for --kind mq"))?;
            let rs = parse_vec(args.rs.as_deref().unwrap_or(""))?;
            report.param("m", m).param(
                "rs",
                rs.iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let rs: Vec<i64> = rs.iter().map(|&r| r as i64).collect();
            in_domain(args.q, |dom| m_q(dom, m as i64, &rs))
        }
        CoeffKind::B2 => {
            report.param("kind", "b2");
            let (n, t, u) = match (args.n, args.t, args.u) {
                (Some(n), Some(t), Some(u)) => (n, t, u),
                _ => return Err(usage("--n, --t, --u are required for --kind b2")),
            };
            report.param("n", n).param("t", t).param("u", u);
            in_domain(args.q, |dom| b_two(dom, n as i64, t as i64, u as i64))
        }
        CoeffKind::Bk => {
            report.param("kind", "bk");
            let n = args
                .n
                .ok_or_else(|| usage("--n is required for --kind bk"))?;
            let p = parse_vec(
                args.p
                    .as_deref()
                    .ok_or_else(|| usage("--p is required for --kind bk"))?,
            )?;
            report.param("n", n).param(
                "p",
                p.iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let p: Vec<i64> = p.iter().map(|&r| r as i64).collect();
            in_domain(args.q, |dom| b_multi(dom, n as i64, &p))
        }
        CoeffKind::Tq => {
            report.param("kind", "tq");
            let (n, l) = match (args.n, args.l) {
                (Some(n), Some(l)) => (n, l),
                _ => return Err(usage("--n and --l are required for --kind tq")),
            };
            report.param("n", n).param("l", l);
            in_domain(args.q, |dom| reflection_count(dom, n as i64, l as i64))
        }
        CoeffKind::Pg => {
            report.param("kind", "pg");
            if args.q != QArg::Sym {
                return Err(usage("--kind pg is symbolic; use --q sym"));
            }
            let g = args
                .g
                .ok_or_else(|| usage("--g is required for --kind pg"))?;
            report.param("g", g);
            p_g_polynomial(g as i64)
                .map_err(|e| usage(e.to_string()))?
                .to_string()
        }
    };
    report.push(vec![], value);
    print!("{}", report.render(args.format));
    Ok(true)
}

/// One computation path: its name and rendered cell values.
type PathTable = (&'static str, BTreeMap<Vec<usize>, String>);
/// A merged row: dims, consensus value, per-path values, per-cell agreement.
type MergedRow = (Vec<usize>, String, BTreeMap<String, String>, bool);

/// Count tables for each requested path, rendered as decimal strings.
fn table_paths(
    n: usize,
    k: usize,
    q: QArg,
    method: Method,
    cfg: &OracleConfig,
) -> Result<Vec<PathTable>> {
    let mut out = Vec::new();
    let render_int = |t: &CountTable<BigInt>| -> BTreeMap<Vec<usize>, String> {
        t.iter().map(|(d, v)| (d.clone(), v.to_string())).collect()
    };
    let numeric_table = |path: TablePath, q: u64| -> BTreeMap<Vec<usize>, String> {
        let dom = NumericQ::new(q);
        render_int(
            &a_table(&dom, n, k, path)
                .to_integer()
                .expect("integer counts"),
        )
    };
    let symbolic_table = |path: TablePath| -> BTreeMap<Vec<usize>, String> {
        a_table(&SymbolicQ, n, k, path)
            .iter()
            .map(|(d, v)| (d.clone(), v.to_string()))
            .collect()
    };
    let want = |m: Method| method == m || method == Method::All;
    match q {
        QArg::Sym => {
            if method == Method::Oracle {
                return Err(usage("the oracle path needs a prime --q, not sym"));
            }
            if want(Method::Closed) {
                out.push(("closed", symbolic_table(TablePath::ClosedForm)));
            }
            if want(Method::Charsum) {
                out.push(("charsum", symbolic_table(TablePath::CharSum)));
            }
        }
        QArg::Num(qv) => {
            require_prime(qv)?;
            if want(Method::Closed) {
                out.push(("closed", numeric_table(TablePath::ClosedForm, qv)));
            }
            if want(Method::Charsum) {
                out.push(("charsum", numeric_table(TablePath::CharSum, qv)));
            }
            if want(Method::Oracle) {
                let c = find_regular_elliptic(n, qv, false);
                let t = brute_count_gl(n, qv, k, &c, cfg)?;
                out.push(("oracle", render_int(&t)));
            }
        }
    }
    Ok(out)
}

/// Union of cells across paths with per-cell agreement.
fn merge_paths(paths: &[PathTable]) -> (Vec<MergedRow>, bool) {
    let mut dims: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for (_, t) in paths {
        dims.extend(t.keys().cloned());
    }
    let mut rows = Vec::new();
    let mut all_agree = true;
    for d in dims {
        let mut cell = BTreeMap::new();
        for (name, t) in paths {
            cell.insert(
                name.to_string(),
                t.get(&d).cloned().unwrap_or_else(|| "0".to_string()),
            );
        }
        let mut values = cell.values();
        let first = values.next().cloned().unwrap_or_default();
        let agree = values.all(|v| *v == first);
        all_agree &= agree;
        rows.push((d, first, cell, agree));
    }
    (rows, all_agree)
}

fn cmd_table(args: TableArgs) -> Result<bool> {
    if args.k < 2 {
        return Err(usage("--k must be at least 2"));
    }
    let cfg = OracleConfig {
        budget: args.budget,
        threads: args.threads,
    };
    let paths = table_paths(args.n, args.k, args.q, args.method, &cfg)?;
    let single = paths.len() == 1;
    let (rows, agreement) = merge_paths(&paths);
    let mut report = Report::new("table");
    report
        .param("n", args.n)
        .param("k", args.k)
        .param("q", args.q)
        .param(
            "method",
            match args.method {
                Method::Closed => "closed",
                Method::Charsum => "charsum",
                Method::Oracle => "oracle",
                Method::All => "all",
            },
        )
        .param("threads", args.threads)
        .param("budget", args.budget);
    report.agreement = agreement;
    for (dims, value, cell, _) in rows {
        if single {
            report.push(dims, value);
        } else {
            report.push_with_paths(dims, value, cell);
        }
    }
    print!("{}", report.render(args.format));
    Ok(agreement)
}

fn cmd_verify(args: VerifyArgs) -> Result<bool> {
    if args.k < 2 {
        return Err(usage("--k must be at least 2"));
    }
    require_prime(args.q)?;
    let cfg = OracleConfig {
        budget: args.budget,
        threads: args.threads,
    };
    let paths = table_paths(args.n, args.k, QArg::Num(args.q), Method::All, &cfg)?;
    let (rows, agreement) = merge_paths(&paths);
    let mut report = Report::new("verify");
    report
        .param("n", args.n)
        .param("k", args.k)
        .param("q", args.q)
        .param("threads", args.threads)
        .param("budget", args.budget);
    report.agreement = agreement;
    for (dims, _, cell, agree) in rows {
        report.push_with_paths(dims, if agree { "PASS" } else { "FAIL" }.to_string(), cell);
    }
    print!("{}", report.render(args.format));
    Ok(agreement)
}

fn cmd_asympt(args: AsymptArgs) -> Result<bool> {
    require_prime(args.q)?;
    let g = args.g as i64;
    let lo = args.n_min.map(|n| n as i64).unwrap_or(2 * g + 2);
    if lo <= g {
        return Err(usage("--n-min must exceed --g"));
    }
    if (args.n_max as i64) < lo {
        return Err(usage("--n-max must be at least the sweep start"));
    }
    let sweep =
        growth_ratio_sweep(g, args.q, lo, args.n_max as i64).map_err(|e| usage(e.to_string()))?;
    let mut report = Report::new("asympt");
    report
        .param("g", args.g)
        .param("q", args.q)
        .param("n-min", lo)
        .param("n-max", args.n_max);
    for row in &sweep {
        let mut paths = BTreeMap::new();
        paths.insert("count".to_string(), row.count.to_string());
        paths.insert("decimal".to_string(), row.decimal.clone());
        report.push_with_paths(
            vec![row.n as usize],
            rational_str(&row.ratio_squared),
            paths,
        );
    }
    print!("{}", report.render(args.format));
    Ok(true)
}

fn cmd_expected_genus(args: ExpectedGenusArgs) -> Result<bool> {
    let mut report = Report::new("expected-genus");
    report.param("n", args.n).param("q", args.q);
    let value = match args.q {
        QArg::Sym => expected_genus(&SymbolicQ, args.n).to_string(),
        QArg::Num(q) => rational_str(&expected_genus(&NumericQ::new(q), args.n)),
    };
    report.push(vec![], value);
    print!("{}", report.render(args.format));
    Ok(true)
}

fn cmd_fulman(args: FulmanArgs) -> Result<bool> {
    let mut report = Report::new("fulman");
    report.param("n", args.n).param("q", args.q);
    match args.q {
        QArg::Sym => {
            for (r, v) in fulman_series(&SymbolicQ, args.n).iter().enumerate() {
                report.push(vec![r], v.to_string());
            }
        }
        QArg::Num(q) => {
            for (r, v) in fulman_series(&NumericQ::new(q), args.n).iter().enumerate() {
                report.push(vec![r], rational_str(v));
            }
        }
    }
    print!("{}", report.render(args.format));
    Ok(true)
}

fn cmd_oracle(args: OracleArgs) -> Result<bool> {
    if args.k < 2 {
        return Err(usage("--k must be at least 2"));
    }
    require_prime(args.q)?;
    let cfg = OracleConfig {
        budget: args.budget,
        threads: args.threads,
    };
    let c = find_regular_elliptic(args.n, args.q, args.singer);
    let t = brute_count_gl(args.n, args.q, args.k, &c, &cfg)?;
    let mut report = Report::new("oracle");
    report
        .param("n", args.n)
        .param("k", args.k)
        .param("q", args.q)
        .param("singer", args.singer)
        .param("threads", args.threads)
        .param("budget", args.budget)
        .param("total", t.total());
    for (dims, v) in t.iter() {
        report.push(dims.clone(), v.to_string());
    }
    print!("{}", report.render(args.format));
    Ok(true)
}
