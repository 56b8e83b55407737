//! Command-line front end. Every successful invocation prints one JSON
//! record (or a table / report in the requested format); failures print a
//! machine-readable error object. Exit codes: 0 success, 1 usage error,
//! 2 verification mismatch, 3 budget refusal.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use triquot_core::psl2::{self, Conjugation};
use triquot_core::tables::{self, NumPat, TableId, TableRow};
use triquot_core::weil::{self, ClassicalFamily};
use triquot_core::{ladder, rigidity, root_system, torus, DynkinType, Error, HyperbolicTriple};

/// Environment variable overriding the torus enumeration budget
/// (maximum number of torus points one delta computation may visit).
const ENUM_BUDGET_VAR: &str = "TRIQUOT_ENUM_BUDGET";
/// Environment variable overriding the PSL2 field-size budget.
const Q_BUDGET_VAR: &str = "TRIQUOT_Q_BUDGET";

#[derive(Parser)]
#[command(
    name = "triquot",
    about = "Exact rigidity and saturation computations for hyperbolic triangle groups",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjArg {
    Inner,
    Adjoint,
}

#[derive(Subcommand)]
enum Command {
    /// dim H^1 at the principal point, with the vanishing-case flag
    H1 {
        dynkin: String,
        a: u64,
        b: u64,
        c: u64,
    },
    /// delta_m by torus-torsion enumeration
    Delta { dynkin: String, m: u64 },
    /// Reducible / Rigid / Nonrigid classification of a triple
    Classify {
        dynkin: String,
        a: u64,
        b: u64,
        c: u64,
    },
    /// Full saturation verdict with the ladder trace
    Saturation {
        dynkin: String,
        a: u64,
        b: u64,
        c: u64,
    },
    /// Regenerate one of the four exception tables
    Table {
        #[arg(long)]
        which: u8,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 50)]
        rank_cap: u32,
    },
    /// Regenerate all tables and diff them against fixture files
    Verify {
        #[arg(long)]
        fixtures: PathBuf,
        #[arg(long, default_value_t = 50)]
        rank_cap: u32,
    },
    /// Count generating pairs of PSL2(q) with prescribed order constraints
    Epi {
        /// Triple as a,b,c
        #[arg(long)]
        triple: String,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = ConjArg::Inner)]
        conj: ConjArg,
        /// Require exact orders instead of order divisibility
        #[arg(long, default_value_t = false)]
        strict_orders: bool,
    },
    /// One cell of the deviation table (exact rational)
    Deviation {
        /// A, B, C, BC, D (family suprema) or E_6, E_7, E_8, F_4, G_2 (sums)
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            emit_error("usage", &e.to_string());
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(Outcome::Record(command, result)) => {
            let record = json!({ "command": command, "result": result });
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("serializable")
            );
            0
        }
        Ok(Outcome::Raw(text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            let code = exit_code(&e);
            emit_error(error_token(&e), &e.to_string());
            code
        }
    }
}

enum Outcome {
    /// JSON record with the echoed command.
    Record(String, Value),
    /// Preformatted output and an explicit exit code (tables, reports).
    Raw(String, i32),
}

fn emit_error(code: &str, message: &str) {
    let record = json!({ "error": { "code": code, "message": message } });
    println!(
        "{}",
        serde_json::to_string_pretty(&record).expect("serializable")
    );
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn error_token(e: &Error) -> &'static str {
    match e {
        Error::BudgetExceeded { .. } => "budget",
        Error::UnsupportedField { .. } => "unsupported-field",
        Error::RankCapTooSmall { .. } => "rank-cap",
        Error::NotHyperbolic { .. } => "not-hyperbolic",
        Error::InadmissibleType { .. } | Error::BadTypeSyntax { .. } => "bad-type",
        _ => "usage",
    }
}

fn env_budget(var: &str, default: u64) -> Result<u64, Error> {
    match std::env::var(var) {
        Ok(s) => s.parse().map_err(|_| Error::BadTableRow {
            line: format!("{var}={s}"),
            reason: "budget must be a nonnegative integer".into(),
        }),
        Err(_) => Ok(default),
    }
}

fn parse_type(s: &str) -> Result<DynkinType, Error> {
    s.parse()
}

fn parse_triple(a: u64, b: u64, c: u64) -> Result<HyperbolicTriple, Error> {
    ladder::validate_triple(a, b, c)
}

fn num_pat_json(p: &NumPat) -> Value {
    match p {
        NumPat::Exact(n) => json!(n),
        other => json!(other.to_string()),
    }
}

fn row_json(row: &TableRow) -> Value {
    json!({
        "family": row.family.to_string(),
        "ranks": row.ranks.to_string(),
        "a": num_pat_json(&row.a),
        "b": num_pat_json(&row.b),
        "c": num_pat_json(&row.c),
        "provenance": row.provenance,
    })
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::H1 { dynkin, a, b, c } => {
            let d = parse_type(&dynkin)?;
            let t = parse_triple(a, b, c)?;
            let fixed: Vec<u64> = t
                .entries()
                .iter()
                .map(|&n| weil::principal_fixed_count(d, n))
                .collect();
            let h1 = weil::principal_h1(d, t);
            let case = weil::exceptional_case(d, t);
            Ok(Outcome::Record(
                format!("h1 {d} {} {} {}", t.a(), t.b(), t.c()),
                json!({
                    "dynkin": d,
                    "triple": t,
                    "dimension": root_system::dimension(d),
                    "fixed_counts": fixed,
                    "h1": h1,
                    "exceptional": case.is_some(),
                    "vanishing_case": case.map(|c| c.to_string()),
                }),
            ))
        }
        Command::Delta { dynkin, m } => {
            let d = parse_type(&dynkin)?;
            let budget = env_budget(ENUM_BUDGET_VAR, torus::DEFAULT_ENUM_BUDGET)?;
            let res = torus::delta(d, m, budget)?;
            Ok(Outcome::Record(
                format!("delta {d} {m}"),
                json!({
                    "dynkin": d,
                    "rank": d.rank(),
                    "dimension": root_system::dimension(d),
                    "m": res.m,
                    "delta": res.delta,
                    "centralizer_dim_min": res.centralizer_dim_min,
                    "witness": res.witness.coords,
                }),
            ))
        }
        Command::Classify { dynkin, a, b, c } => {
            let d = parse_type(&dynkin)?;
            let t = parse_triple(a, b, c)?;
            let budget = env_budget(ENUM_BUDGET_VAR, torus::DEFAULT_ENUM_BUDGET)?;
            let cls = rigidity::classify(d, t, budget)?;
            Ok(Outcome::Record(
                format!("classify {d} {} {} {}", t.a(), t.b(), t.c()),
                json!({
                    "dynkin": d,
                    "triple": t,
                    "kind": cls.kind.to_string(),
                    "deltas": cls.deltas,
                    "delta_sum": cls.delta_sum(),
                    "threshold": cls.threshold,
                }),
            ))
        }
        Command::Saturation { dynkin, a, b, c } => {
            let d = parse_type(&dynkin)?;
            let t = parse_triple(a, b, c)?;
            let verdict = ladder::saturation(d, t);
            Ok(Outcome::Record(
                format!("saturation {d} {} {} {}", t.a(), t.b(), t.c()),
                serde_json::to_value(&verdict).expect("serializable"),
            ))
        }
        Command::Table {
            which,
            format,
            rank_cap,
        } => {
            let id = TableId::from_u8(which).ok_or(Error::BadTableRow {
                line: format!("--which {which}"),
                reason: "table number must be 1, 2, 3 or 4".into(),
            })?;
            let rows = tables::generate(id, rank_cap)?;
            let text = match format {
                Format::Csv => tables::encode_rows(&rows),
                Format::Md => tables::render_markdown(&rows),
                Format::Json => {
                    let record = json!({
                        "command": format!("table --which {which} --rank-cap {rank_cap}"),
                        "result": rows.iter().map(row_json).collect::<Vec<_>>(),
                    });
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&record).expect("serializable")
                    )
                }
            };
            Ok(Outcome::Raw(text, 0))
        }
        Command::Verify { fixtures, rank_cap } => {
            let report = tables::verify_fixtures(&fixtures, rank_cap)?;
            let code = if report.ok { 0 } else { 2 };
            Ok(Outcome::Raw(report.render(), code))
        }
        Command::Epi {
            triple,
            q,
            conj,
            strict_orders,
        } => {
            let parts: Vec<&str> = triple.split(',').collect();
            let parse_entry = |s: &str| -> Result<u64, Error> {
                s.trim().parse().map_err(|_| Error::BadTableRow {
                    line: triple.clone(),
                    reason: "--triple expects a,b,c".into(),
                })
            };
            if parts.len() != 3 {
                return Err(Error::BadTableRow {
                    line: triple.clone(),
                    reason: "--triple expects a,b,c".into(),
                });
            }
            let t = parse_triple(
                parse_entry(parts[0])?,
                parse_entry(parts[1])?,
                parse_entry(parts[2])?,
            )?;
            let conjugation = match conj {
                ConjArg::Inner => Conjugation::Inner,
                ConjArg::Adjoint => Conjugation::Adjoint,
            };
            let q_budget = env_budget(Q_BUDGET_VAR, psl2::DEFAULT_Q_BUDGET)?;
            let count = psl2::epi_count(t, q, conjugation, strict_orders, q_budget)?;
            Ok(Outcome::Record(
                format!(
                    "epi --triple {},{},{} --q {q} --conj {conjugation}",
                    t.a(),
                    t.b(),
                    t.c()
                ),
                serde_json::to_value(&count).expect("serializable"),
            ))
        }
        Command::Deviation { family, n } => {
            let (value, kind, label) = match family.as_str() {
                "A" => (
                    weil::family_deviation_sup(ClassicalFamily::A, n)?,
                    "supremum",
                    "A".to_string(),
                ),
                "B" | "C" | "BC" | "B/C" => (
                    weil::family_deviation_sup(ClassicalFamily::BC, n)?,
                    "supremum",
                    "B/C".to_string(),
                ),
                "D" => (
                    weil::family_deviation_sup(ClassicalFamily::D, n)?,
                    "supremum",
                    "D".to_string(),
                ),
                other => {
                    let d = parse_type(other)?;
                    if !matches!(
                        d.family(),
                        triquot_core::Family::E | triquot_core::Family::F | triquot_core::Family::G
                    ) {
                        return Err(Error::BadTableRow {
                            line: format!("--family {other}"),
                            reason:
                                "expected A, B, C, D or an exceptional type E_6/E_7/E_8/F_4/G_2"
                                    .into(),
                        });
                    }
                    if !(2..=7).contains(&n) {
                        return Err(Error::ModulusOutOfRange { n });
                    }
                    (weil::deviation_sum(d, n), "sum", d.to_string())
                }
            };
            Ok(Outcome::Record(
                format!("deviation --family {label} --n {n}"),
                json!({ "family": label, "n": n, "kind": kind, "value": value }),
            ))
        }
    }
}
