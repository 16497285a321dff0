//! `abcocycle`: command-line front end for the abelian-cocycles library.

use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use abelian_cocycles::algebra::invariant_factors;
use abelian_cocycles::braiding::{braiding_exists, bruteforce_braidings, enumerate_braidings, ThreeCocycleParams};
use abelian_cocycles::cocycle::{
    cohomology_order_bruteforce, cohomology_order_closed, enumerate_representatives, eval_cocycle, is_cocycle,
    representative_count, CochainTable, CocycleSpec,
};
use abelian_cocycles::dw::{dw_bruteforce, dw_closed, turaev_check, TwoCocycleParams};
use abelian_cocycles::resolution::{verify_chain_map_f, verify_chain_map_g, BarSymbol};
use abelian_cocycles::{Budget, Error, FiniteAbelianGroup, Phase};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Number, Value};

#[derive(Parser)]
#[command(name = "abcocycle", version, about = "Explicit cocycles on finite abelian groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Phase evaluations allowed in one brute-force sum.
    #[arg(long, global = true)]
    max_phase_evals: Option<u64>,

    /// Entries allowed in one integer coboundary matrix.
    #[arg(long, global = true)]
    max_matrix_entries: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant-factor operations.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Closed-form cocycles.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Order of H^k(G, k*).
    Cohomology {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: usize,
        /// Also compute the order from the bar complex and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Chain map checks.
    #[command(subcommand)]
    Chainmap(ChainmapCmd),
    /// Braidings on Vec_G^ω for a 3-cocycle.
    Braidings {
        #[command(flatten)]
        group: GroupArg,
        /// Degree-3 parameters: inline JSON or a file path.
        #[arg(long)]
        params: String,
        /// Also run the exhaustive search and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Dijkgraaf-Witten invariant of the n-torus.
    Dw {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        torus_dim: usize,
        /// Degree-n parameters: inline JSON or a file path.
        #[arg(long)]
        params: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Projective representation dimensions for a 2-cocycle.
    Projrep {
        #[command(flatten)]
        group: GroupArg,
        /// Degree-2 parameters: inline JSON or a file path.
        #[arg(long)]
        params2: String,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Rewrite a product of cyclic groups in invariant-factor form.
    Normalize { moduli: String },
}

#[derive(Subcommand)]
enum CocycleCmd {
    /// Every representative of a degree.
    List {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: usize,
        /// Refuse to list more representatives than this.
        #[arg(long, default_value_t = 10_000)]
        max_count: u64,
    },
    /// Evaluate a cocycle at one tuple, e.g. `--args "1,0|0,1"`.
    Eval {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        params: String,
        #[arg(long)]
        args: String,
    },
    /// Check the cocycle identity on every tuple.
    Verify {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        params: String,
    },
}

#[derive(Subcommand)]
enum ChainmapCmd {
    Verify {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum)]
        direction: Dir,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Invariant factors m_1|m_2|..., comma separated.
    #[arg(long)]
    group: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    F,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Closed,
    Both,
}

enum Failure {
    /// Exit 1: a checked identity does not hold.
    Verification(Value),
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<Value, Failure>;

fn parse_moduli(s: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Failure::Usage(format!("bad modulus {t:?} in {s:?}"))))
        .collect()
}

fn parse_group(g: &GroupArg) -> Result<FiniteAbelianGroup, Failure> {
    let moduli = parse_moduli(&g.group)?;
    FiniteAbelianGroup::new(moduli).map_err(|e| match e {
        Error::DivisibilityViolation(..) => {
            Failure::Usage(format!("{e}; run `abcocycle group normalize {}` first", g.group))
        }
        e => Failure::Lib(e),
    })
}

/// Inline JSON when it starts with `{`, a file path otherwise.
fn load_json(arg: &str) -> Result<Value, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

fn load_spec(arg: &str, group: &FiniteAbelianGroup, degree: Option<usize>) -> Result<CocycleSpec, Failure> {
    Ok(CocycleSpec::from_json(&load_json(arg)?, Some(group), degree)?)
}

fn big(n: impl Display) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn phase_json(p: &Phase) -> Value {
    json!({"num": p.num(), "den": p.den()})
}

fn run(cli: &Cli) -> Outcome {
    let mut budget = Budget::default();
    if let Some(v) = cli.max_phase_evals {
        budget.max_phase_evals = v;
    }
    if let Some(v) = cli.max_matrix_entries {
        budget.max_matrix_entries = v;
    }
    match &cli.command {
        Command::Group(GroupCmd::Normalize { moduli }) => {
            let moduli = parse_moduli(moduli)?;
            if let Some(&m) = moduli.iter().find(|&&m| m == 0) {
                return Err(Error::InvalidModulus(m).into());
            }
            Ok(json!({"invariant_factors": invariant_factors(&moduli)}))
        }
        Command::Cocycle(CocycleCmd::List {
            group,
            degree,
            max_count,
        }) => {
            let g = parse_group(group)?;
            let count = representative_count(&g, *degree);
            if count > BigUint::from(*max_count) {
                return Err(Error::BudgetExceeded {
                    what: "listed representatives",
                    needed: count.to_string(),
                    limit: *max_count,
                }
                .into());
            }
            let reps: Vec<Value> = enumerate_representatives(&g, *degree).map(|s| s.to_json()).collect();
            Ok(json!({"count": big(count), "representatives": reps}))
        }
        Command::Cocycle(CocycleCmd::Eval { group, params, args }) => {
            let g = parse_group(group)?;
            let spec = load_spec(params, &g, None)?;
            let sym: BarSymbol = args.parse()?;
            let value = eval_cocycle(&spec, sym.entries())?;
            Ok(json!({"args": sym.to_string(), "value": phase_json(&value)}))
        }
        Command::Cocycle(CocycleCmd::Verify { group, params }) => {
            let g = parse_group(group)?;
            let spec = load_spec(params, &g, None)?;
            let table = CochainTable::from_spec(&spec, &budget)?;
            let ok = is_cocycle(&table, &budget)?;
            let out = json!({
                "degree": spec.degree(),
                "is_cocycle": ok,
                "normalized": table.is_normalized(),
            });
            if ok && table.is_normalized() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Cohomology {
            group,
            degree,
            brute_force,
        } => {
            let g = parse_group(group)?;
            let closed = cohomology_order_closed(&g, *degree);
            let factors: Map<String, Value> = closed
                .factor_map()
                .into_iter()
                .map(|(m, e)| (m.to_string(), json!(e)))
                .collect();
            let mut out = json!({"order": big(&closed.order), "factors": factors});
            if *brute_force {
                let brute = cohomology_order_bruteforce(&g, *degree, &budget)?;
                let agrees = brute == closed.order;
                out["brute_force_order"] = big(&brute);
                out["agrees"] = json!(agrees);
                if !agrees {
                    return Err(Failure::Verification(out));
                }
            }
            Ok(out)
        }
        Command::Chainmap(ChainmapCmd::Verify {
            group,
            direction,
            max_degree,
        }) => {
            let g = parse_group(group)?;
            let report = match direction {
                Dir::F => verify_chain_map_f(&g, *max_degree)?,
                Dir::G => verify_chain_map_g(&g, *max_degree)?,
            };
            let out = serde_json::to_value(&report).expect("report serializes");
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Braidings {
            group,
            params,
            brute_force,
        } => {
            let g = parse_group(group)?;
            let spec = load_spec(params, &g, Some(3))?;
            let p = ThreeCocycleParams::from_spec(&spec)?;
            let exists = braiding_exists(&g, &p);
            let found = enumerate_braidings(&g, &p, &budget)?;
            let generators: Vec<Value> = found
                .iter()
                .map(|b| Value::Array(b.generators.r.iter().flatten().map(phase_json).collect()))
                .collect();
            let mut out = json!({
                "exists": exists.exists,
                "reason": exists.reason,
                "generators": generators,
                "count": found.len(),
            });
            let mut ok = exists.exists == !found.is_empty();
            if *brute_force {
                let mut a: Vec<Vec<Phase>> = found.iter().map(|b| b.table.values().to_vec()).collect();
                let mut b: Vec<Vec<Phase>> = bruteforce_braidings(&g, &p, &budget)?
                    .iter()
                    .map(|t| t.values().to_vec())
                    .collect();
                a.sort();
                b.sort();
                out["brute_force_count"] = json!(b.len());
                out["agrees"] = json!(a == b);
                ok &= a == b;
            }
            if ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Dw {
            group,
            torus_dim,
            params,
            method,
        } => {
            let g = parse_group(group)?;
            if *torus_dim == 0 {
                return Err(Failure::Usage("torus dimension must be positive".into()));
            }
            let spec = load_spec(params, &g, Some(*torus_dim))?;
            let brute = match method {
                Method::Brute | Method::Both => Some(dw_bruteforce(&g, &spec, *torus_dim, &budget)?),
                Method::Closed => None,
            };
            let closed = match method {
                Method::Closed | Method::Both => Some(dw_closed(&g, &spec, *torus_dim, &budget)?),
                Method::Brute => None,
            };
            let agrees = match (&brute, &closed) {
                (Some(b), Some(c)) => b.value == c.value,
                _ => true,
            };
            let value = brute.as_ref().or(closed.as_ref()).expect("one method ran").value.clone();
            let name = match method {
                Method::Brute => "brute",
                Method::Closed => "closed",
                Method::Both => "both",
            };
            let out = json!({"value": value.to_string(), "method": name, "agrees": agrees});
            if agrees {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Projrep { group, params2 } => {
            let g = parse_group(group)?;
            let spec = load_spec(params2, &g, Some(2))?;
            let p = TwoCocycleParams::from_spec(&spec)?;
            let report = turaev_check(&g, &p, &budget)?;
            let out = json!({
                "g0": big(&report.snf_g0),
                "dim": big(&report.dim),
                "turaev_z_t2": big(&report.dw_t2),
            });
            if report.holds() {
                Ok(out)
            } else {
                Err(Failure::Verification(json!({
                    "g0": big(&report.snf_g0),
                    "dim": big(&report.dim),
                    "turaev_z_t2": big(&report.dw_t2),
                    "regular_count": report.regular_count,
                })))
            }
        }
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(v).expect("value serializes"),
        Format::Table => match v {
            Value::Object(map) => map
                .iter()
                .map(|(k, x)| format!("{k:<20} {}", serde_json::to_string(x).expect("value serializes")))
                .collect::<Vec<_>>()
                .join("\n"),
            other => serde_json::to_string(other).expect("value serializes"),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            println!("{}", render(&v, cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            println!("{}", render(&v, cli.format));
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                Error::NonIntegral(_) | Error::NonSquare(_) | Error::NotACocycle => 1,
                _ => 2,
            })
        }
    }
}
