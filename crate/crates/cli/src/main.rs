//! Command-line front end: one subcommand per counting operation, plain or
//! JSON output, everything exact.
//!
//! Exit codes: 0 success, 1 domain/capacity error, 2 usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use combinat::asymptotics::{
    binet_sweep, derangement_ratio, log_factorial, stirling_approx_log,
};
use combinat::binomials::{binomial, multinomial, multiset_count, pascal_triangle};
use combinat::exactnum::{factorial, Nat, Rat};
use combinat::expand::multinomial_expand;
use combinat::inclexcl::{ie_union, sieve, sylvester};
use combinat::mapscount::{
    count_derangements, count_functions, count_injections, count_permutations,
    count_surjections, stirling2,
};
use combinat::oracle::{self, MapKind};
use combinat::{Measure, Poly, SetFamily};

#[derive(Parser)]
#[command(name = "combinat", version, about = "Exact enumerative combinatorics calculator")]
struct Cli {
    /// Emit the result as JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// n!
    Fact { n: u64 },
    /// Binomial coefficient C(n, k); zero outside 0..=n.
    Binom {
        n: u64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Pascal's triangle rows 0..=MAX, built from the additive recurrence.
    Pascal {
        #[arg(long)]
        max: u64,
    },
    /// Multinomial coefficient of n over comma-separated parts.
    Multinom {
        n: u64,
        #[arg(allow_hyphen_values = true)]
        parts: String,
    },
    /// Number of size-n multisets over m distinct elements.
    Multiset { m: u64, n: u64 },
    /// Number of functions from an m-set to an n-set.
    Func { m: u64, n: u64 },
    /// Number of injections from an m-set into an n-set.
    Inj { m: u64, n: u64 },
    /// Number of permutations of an n-set.
    Perm { n: u64 },
    /// Number of surjections from an n-set onto a p-set.
    Surj { n: u64, p: u64 },
    /// Stirling number of the second kind: partitions of n into p blocks.
    Stirling2 { n: u64, p: u64 },
    /// Number of derangements of an n-set.
    Derange { n: u64 },
    /// Expand (a1 + ... + am)^n; optionally evaluate at a point.
    Expand {
        /// Number of variables m (2 gives the binomial expansion).
        #[arg(long, default_value_t = 2)]
        vars: u64,
        /// Exponent n.
        #[arg(long)]
        power: u64,
        /// Comma-separated point to evaluate at instead of printing terms.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Weighted inclusion-exclusion over a JSON set family.
    Ie {
        #[command(subcommand)]
        op: IeOp,
    },
    /// Floating-point approximation reports.
    Approx {
        #[command(subcommand)]
        op: ApproxOp,
    },
    /// Verification sweeps.
    Check {
        #[command(subcommand)]
        op: CheckOp,
    },
    /// Brute-force enumeration spot checks.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand)]
enum IeOp {
    /// Measure of the union of the family's sets.
    Union {
        #[arg(long)]
        family: PathBuf,
    },
    /// Measure of the elements lying in none of the sets.
    Sylvester {
        #[arg(long)]
        family: PathBuf,
    },
    /// Measure of the elements lying in exactly p of the sets.
    Sieve {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum ApproxOp {
    /// Stirling's approximation report at one n: log-factorial, the
    /// approximation, their gap lambda, and the derangement ratio.
    Stirling { n: u64 },
}

#[derive(Subcommand)]
enum CheckOp {
    /// Verify 1/(12n+1) < lambda_n < 1/(12n) strictly, with margin above the
    /// rounding budget, for every n up to MAX. The default covers the
    /// verified range; past n ~ 5314 the true upper margin, which shrinks
    /// like 1/(360 n^3), provably falls below the budget.
    Binet {
        #[arg(long, default_value_t = 5000)]
        max: u64,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Count size-k subsets of an n-set by exhaustive bitmask scan.
    Subsets {
        n: u64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Count maps from an m-set to an n-set satisfying KIND by generating
    /// all of them.
    Maps {
        m: u64,
        n: u64,
        kind: OracleMapKind,
    },
    /// Count partitions of an n-set into p blocks by enumeration.
    Partitions { n: u64, p: u64 },
    /// Union measure computed directly from the family.
    Union {
        #[arg(long)]
        family: PathBuf,
    },
    /// Exactly-p measure computed directly from element multiplicities.
    Exactly {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMapKind {
    All,
    Injective,
    Surjective,
    Bijective,
    Derangement,
}

impl From<OracleMapKind> for MapKind {
    fn from(kind: OracleMapKind) -> MapKind {
        match kind {
            OracleMapKind::All => MapKind::All,
            OracleMapKind::Injective => MapKind::Injective,
            OracleMapKind::Surjective => MapKind::Surjective,
            OracleMapKind::Bijective => MapKind::Bijective,
            OracleMapKind::Derangement => MapKind::Derangement,
        }
    }
}

/// Failures split by exit code: usage problems exit 2, domain and capacity
/// problems exit 1.
enum CliError {
    Usage(String),
    Domain(String),
}

impl From<combinat::Error> for CliError {
    fn from(err: combinat::Error) -> CliError {
        CliError::Domain(err.to_string())
    }
}

struct Output {
    plain: String,
    json: serde_json::Value,
}

impl Output {
    fn nat(value: Nat) -> Output {
        let s = value.to_string();
        Output {
            json: json!({ "value": s }),
            plain: s,
        }
    }

    fn rat(value: Rat) -> Output {
        let s = value.to_string();
        Output {
            json: json!({ "value": s }),
            plain: s,
        }
    }
}

/// On-disk family format: universe size, member lists, optional weights
/// ("p/q" or integer strings, one per element, default all 1).
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    universe: usize,
    sets: Vec<Vec<usize>>,
    weights: Option<Vec<String>>,
}

fn load_family(path: &PathBuf) -> Result<(SetFamily, Measure), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: FamilyFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad family JSON in {}: {e}", path.display())))?;

    for (si, set) in file.sets.iter().enumerate() {
        for &idx in set {
            if idx >= file.universe {
                return Err(CliError::Usage(format!(
                    "set {si} contains index {idx}, universe size is {}",
                    file.universe
                )));
            }
        }
    }
    let weights = match &file.weights {
        None => vec![Rat::one(); file.universe],
        Some(strings) => {
            if strings.len() != file.universe {
                return Err(CliError::Usage(format!(
                    "{} weights given for a universe of {}",
                    strings.len(),
                    file.universe
                )));
            }
            let mut out = Vec::with_capacity(strings.len());
            for (i, s) in strings.iter().enumerate() {
                let w = Rat::from_str(s)
                    .map_err(|e| CliError::Usage(format!("weight {i}: {e}")))?;
                if w.is_negative() {
                    return Err(CliError::Usage(format!("weight {i} is negative: {s}")));
                }
                out.push(w);
            }
            out
        }
    };

    let family = SetFamily::from_index_sets(file.universe, &file.sets)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let measure = Measure::new(weights).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((family, measure))
}

fn parse_i64_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("not an integer: {piece:?}")))
        })
        .collect()
}

fn parse_nat_list(text: &str) -> Result<Vec<Nat>, CliError> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<Nat>()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn poly_output(poly: &Poly) -> Output {
    let terms: Vec<serde_json::Value> = poly
        .terms()
        .map(|(mono, coeff)| {
            json!({
                "coefficient": coeff.to_string(),
                "exponents": mono.exponents(),
            })
        })
        .collect();
    Output {
        plain: poly.to_string(),
        json: json!({
            "variables": poly.variable_count(),
            "terms": terms,
        }),
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Fact { n } => Ok(Output::nat(factorial(n))),
        Command::Binom { n, k } => Ok(Output::nat(binomial(n, k))),
        Command::Pascal { max } => {
            let rows = pascal_triangle(max);
            let rendered: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.iter().map(Nat::to_string).collect())
                .collect();
            Ok(Output {
                plain: rendered
                    .iter()
                    .map(|row| row.join(" "))
                    .collect::<Vec<_>>()
                    .join("\n"),
                json: json!({ "rows": rendered }),
            })
        }
        Command::Multinom { n, parts } => {
            let ks = parse_i64_list(&parts)?;
            if ks.is_empty() {
                return Err(CliError::Usage("at least one part is required".into()));
            }
            Ok(Output::nat(multinomial(n, &ks)))
        }
        Command::Multiset { m, n } => {
            if m == 0 {
                return Err(CliError::Usage("multiset needs m >= 1 elements".into()));
            }
            Ok(Output::nat(multiset_count(m, n)))
        }
        Command::Func { m, n } => Ok(Output::nat(count_functions(m, n))),
        Command::Inj { m, n } => Ok(Output::nat(count_injections(m, n))),
        Command::Perm { n } => Ok(Output::nat(count_permutations(n))),
        Command::Surj { n, p } => Ok(Output::nat(count_surjections(n, p))),
        Command::Stirling2 { n, p } => Ok(Output::nat(stirling2(n, p))),
        Command::Derange { n } => Ok(Output::nat(count_derangements(n))),
        Command::Expand { vars, power, eval } => {
            if vars == 0 {
                return Err(CliError::Usage("expansion needs at least one variable".into()));
            }
            let poly = multinomial_expand(vars, power);
            match eval {
                None => Ok(poly_output(&poly)),
                Some(point_text) => {
                    let point = parse_nat_list(&point_text)?;
                    let value = poly.evaluate(&point)?;
                    Ok(Output::nat(value))
                }
            }
        }
        Command::Ie { op } => {
            let value = match op {
                IeOp::Union { family } => {
                    let (fam, m) = load_family(&family)?;
                    ie_union(&fam, &m)?
                }
                IeOp::Sylvester { family } => {
                    let (fam, m) = load_family(&family)?;
                    sylvester(&fam, &m)?
                }
                IeOp::Sieve { family, p } => {
                    let (fam, m) = load_family(&family)?;
                    sieve(&fam, &m, p)?
                }
            };
            Ok(Output::rat(value))
        }
        Command::Approx { op } => match op {
            ApproxOp::Stirling { n } => {
                if n == 0 {
                    return Err(CliError::Usage("stirling report needs n >= 1".into()));
                }
                let lf = log_factorial(n);
                let sa = stirling_approx_log(n);
                let lambda = binet_report_lambda(n);
                let ratio = (n <= 170).then(|| derangement_ratio(n));
                let mut plain = format!(
                    "n = {n}\nlog_factorial = {lf}\nstirling_approx_log = {sa}\nlambda = {lambda}"
                );
                if let Some(r) = ratio {
                    plain.push_str(&format!("\nderangement_ratio = {r}"));
                }
                Ok(Output {
                    plain,
                    json: json!({
                        "n": n,
                        "log_factorial": lf,
                        "stirling_approx_log": sa,
                        "lambda": lambda,
                        "derangement_ratio": ratio,
                    }),
                })
            }
        },
        Command::Check { op } => match op {
            CheckOp::Binet { max } => {
                if max == 0 || max > 1_000_000 {
                    return Err(CliError::Usage(
                        "binet check range must satisfy 1 <= max <= 1000000".into(),
                    ));
                }
                let reports = binet_sweep(max);
                let mut min_lower = f64::INFINITY;
                let mut min_upper = f64::INFINITY;
                let mut worst_n = 0u64;
                for rep in &reports {
                    if !(rep.lower < rep.lambda_n && rep.lambda_n < rep.upper) {
                        return Err(CliError::Domain(format!(
                            "Binet bounds violated at n = {}: lambda = {} outside ({}, {})",
                            rep.n, rep.lambda_n, rep.lower, rep.upper
                        )));
                    }
                    if !rep.strict_with_margin {
                        return Err(CliError::Domain(format!(
                            "Binet margin below the rounding budget at n = {}: \
                             lambda = {}, bounds = ({}, {})",
                            rep.n, rep.lambda_n, rep.lower, rep.upper
                        )));
                    }
                    let lower_margin = rep.lambda_n - rep.lower;
                    let upper_margin = rep.upper - rep.lambda_n;
                    min_lower = min_lower.min(lower_margin);
                    if upper_margin < min_upper {
                        min_upper = upper_margin;
                        worst_n = rep.n;
                    }
                }
                Ok(Output {
                    plain: format!(
                        "ok: 1/(12n+1) < lambda_n < 1/(12n) strictly with margin for n = 1..={max} \
                         (tightest upper margin {min_upper:e} at n = {worst_n})"
                    ),
                    json: json!({
                        "max": max,
                        "all_strict_with_margin": true,
                        "min_lower_margin": min_lower,
                        "min_upper_margin": min_upper,
                        "tightest_n": worst_n,
                    }),
                })
            }
        },
        Command::Oracle { op } => match op {
            OracleOp::Subsets { n, k } => Ok(Output::nat(oracle::enum_subsets_k(n, k)?)),
            OracleOp::Maps { m, n, kind } => {
                Ok(Output::nat(oracle::enum_maps(m, n, kind.into())?))
            }
            OracleOp::Partitions { n, p } => Ok(Output::nat(oracle::enum_partitions(n, p)?)),
            OracleOp::Union { family } => {
                let (fam, m) = load_family(&family)?;
                Ok(Output::rat(oracle::direct_union_measure(&fam, &m)?))
            }
            OracleOp::Exactly { family, p } => {
                let (fam, m) = load_family(&family)?;
                Ok(Output::rat(oracle::direct_exactly_p_measure(&fam, &m, p)?))
            }
        },
    }
}

fn binet_report_lambda(n: u64) -> f64 {
    combinat::asymptotics::binet_report(n).lambda_n
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            if cli.json {
                println!("{}", output.json);
            } else {
                println!("{}", output.plain);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
