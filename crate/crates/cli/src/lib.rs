//! `hsi`: command-line access to homological shift ideals.
//!
//! Subcommand to library mapping:
//!
//! | subcommand             | operation                                   |
//! |------------------------|---------------------------------------------|
//! | `support`              | `supp(I)`                                   |
//! | `to-monomial`          | multidegree to monomial                     |
//! | `to-multidegree`       | monomial to multidegree                     |
//! | `bounding-multidegree` | `deg(I)`                                    |
//! | `shifts`               | i-th multigraded shifts                     |
//! | `hs`                   | `HS_i(I)`                                   |
//! | `socle`                | `soc(I)`                                    |
//! | `betti`                | all multigraded Betti numbers               |
//! | `check ...`            | linear resolution / quotients / polymatroidal, optionally homological |
//! | `admissible-order`     | an admissible order of `G(I)`               |
//! | `is-admissible-order`  | validate a given order                      |
//!
//! Exit status: 0 true/success, 1 false, 2 search budget exceeded,
//! 64 usage error, 65 malformed input, 70 internal invariant violation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hsi_core::text::{format_monomial, parse_ideal_file, parse_monomial, parse_monomial_list};
use hsi_core::{
    admissible_order, betti_table, check, check_homological, is_admissible_order, CheckOptions,
    Error, FieldChoice, LinearQuotientsAlgorithm, Monomial, MonomialIdeal, Outcome, PropertyReport,
    SearchBudget, SearchOutcome, ShiftProperty, Witness,
};

pub const EXIT_FALSE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

/// Environment variable overriding the search budget.
pub const BUDGET_ENV: &str = "HSI_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "hsi",
    version,
    about = "Homological shift ideals of monomial ideals"
)]
struct Cli {
    /// Ideal file (`ring:` and `gens:` lines)
    #[arg(long, global = true)]
    ideal: Option<PathBuf>,
    /// Coefficient field: `q` or `p:<prime>`
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldChoice,
    /// Emit a JSON object `{command, input, result}`
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators of HS_i(I)
    Hs {
        #[arg(long, allow_hyphen_values = true)]
        index: isize,
    },
    /// The i-th multigraded shifts
    Shifts {
        #[arg(long, allow_hyphen_values = true)]
        index: isize,
    },
    /// The socle monomials
    Socle,
    /// All (i, multidegree, beta) triples
    Betti,
    /// Decide a property of I (or of every HS_i(I) with --homological)
    Check {
        property: PropertyArg,
        #[arg(long)]
        homological: bool,
        #[arg(long, value_enum, default_value = "direct")]
        algorithm: AlgorithmArg,
    },
    /// An admissible order of G(I), or `none`
    AdmissibleOrder,
    /// Variables in supp(I)
    Support,
    /// deg(I)
    BoundingMultidegree,
    /// The monomial with the given multidegree
    ToMonomial {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        multidegree: Vec<i64>,
        /// Space-separated variable names, instead of --ideal
        #[arg(long)]
        ring: Option<String>,
    },
    /// The multidegree of a monomial
    ToMultidegree {
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Whether the listed monomials form an admissible order of G(I)
    IsAdmissibleOrder {
        #[arg(long)]
        order_file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PropertyArg {
    LinearResolution,
    LinearQuotients,
    Polymatroidal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Direct,
    Dual,
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    if s == "q" {
        return Ok(FieldChoice::Rationals);
    }
    let p = s
        .strip_prefix("p:")
        .ok_or_else(|| format!("expected `q` or `p:<prime>`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("invalid prime `{p}`"))?;
    FieldChoice::prime(p).map_err(|e| e.to_string())
}

/// Failure of a command, carrying its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// What a command produced: text lines, a JSON result, and an exit status.
struct Output {
    lines: Vec<String>,
    result: Value,
    code: i32,
}

impl Output {
    fn ok(lines: Vec<String>, result: Value) -> Self {
        Output {
            lines,
            result,
            code: 0,
        }
    }
}

struct Context {
    variables: Vec<String>,
    ideal: MonomialIdeal,
    source: Option<String>,
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_ideal(path: Option<&PathBuf>, err: &mut dyn Write) -> Result<Context, Failure> {
    let path = path.ok_or_else(|| usage("this command needs --ideal <file>"))?;
    let doc = parse_ideal_file(&read(path)?)?;
    if doc.redundant > 0 {
        let _ = writeln!(
            err,
            "warning: {} redundant generator(s) dropped from {}",
            doc.redundant,
            path.display()
        );
    }
    Ok(Context {
        variables: doc.variables,
        ideal: doc.ideal,
        source: Some(path.display().to_string()),
    })
}

fn load_ring(
    ring: Option<&String>,
    ideal: Option<&PathBuf>,
    err: &mut dyn Write,
) -> Result<Context, Failure> {
    match ring {
        Some(names) => {
            let variables: Vec<String> = names.split_whitespace().map(str::to_string).collect();
            if variables.is_empty() {
                return Err(usage("--ring needs at least one variable"));
            }
            Ok(Context {
                ideal: MonomialIdeal::zero(variables.len()),
                variables,
                source: None,
            })
        }
        None => load_ideal(ideal, err),
    }
}

fn search_budget() -> Result<SearchBudget, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse::<u64>().map(SearchBudget).map_err(|_| {
            usage(format!(
                "{BUDGET_ENV} must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(SearchBudget::default()),
    }
}

fn monomial_lines(ms: &[Monomial], vars: &[String]) -> (Vec<String>, Value) {
    let lines: Vec<String> = ms.iter().map(|m| format_monomial(m, vars)).collect();
    let value = json!(lines);
    (lines, value)
}

fn multidegree_string(m: &Monomial) -> String {
    m.exponents()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn report_output(report: &PropertyReport, vars: &[String]) -> Output {
    let verdict = report.outcome.to_string();
    let mut result = json!({ "verdict": verdict });
    match &report.witness {
        Some(Witness::Order(order)) => {
            result["admissible_order"] = monomial_lines(order.as_slice(), vars).1;
        }
        Some(Witness::Index(i)) => {
            result["index"] = json!(i);
        }
        None => {}
    }
    Output {
        lines: vec![verdict],
        result,
        code: match report.outcome {
            Outcome::Holds => 0,
            Outcome::Fails => EXIT_FALSE,
            Outcome::BudgetExceeded => EXIT_BUDGET,
        },
    }
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(String, Value, Output), Failure> {
    let field = cli.field;
    let mut input = json!({ "field": field.to_string() });
    let (name, ctx, output) = match &cli.command {
        Command::ToMonomial { multidegree, ring } => {
            let ctx = load_ring(ring.as_ref(), cli.ideal.as_ref(), err)?;
            let m = Monomial::from_multidegree(ctx.variables.len(), multidegree)?;
            input["multidegree"] = json!(multidegree);
            let s = format_monomial(&m, &ctx.variables);
            ("to-monomial", ctx, Output::ok(vec![s.clone()], json!(s)))
        }
        Command::ToMultidegree { monomial, ring } => {
            let ctx = load_ring(ring.as_ref(), cli.ideal.as_ref(), err)?;
            let m = parse_monomial(monomial, &ctx.variables)?;
            input["monomial"] = json!(monomial);
            let out = Output::ok(vec![multidegree_string(&m)], json!(m.multidegree()));
            ("to-multidegree", ctx, out)
        }
        command => {
            let ctx = load_ideal(cli.ideal.as_ref(), err)?;
            let vars = &ctx.variables;
            let ideal = &ctx.ideal;
            let (name, out) = match command {
                Command::Hs { index } => {
                    input["index"] = json!(index);
                    let table = betti_table(ideal, field);
                    let hs = hsi_core::shifts::shift_ideal_from_table(&table, *index);
                    let (lines, v) = monomial_lines(hs.generators(), vars);
                    ("hs", Output::ok(lines, v))
                }
                Command::Shifts { index } => {
                    input["index"] = json!(index);
                    let shifts = betti_table(ideal, field).shifts(*index);
                    let (lines, v) = monomial_lines(&shifts, vars);
                    ("shifts", Output::ok(lines, v))
                }
                Command::Socle => {
                    if ideal.is_zero() || ideal.is_unit() {
                        return Err(
                            Error::Domain("socle needs a proper nonzero ideal".into()).into()
                        );
                    }
                    let soc = hsi_core::shifts::socle_from_table(&betti_table(ideal, field))?;
                    let (lines, v) = monomial_lines(&soc, vars);
                    ("socle", Output::ok(lines, v))
                }
                Command::Betti => {
                    let table = betti_table(ideal, field);
                    let mut lines = Vec::new();
                    let mut rows = Vec::new();
                    for (i, a, b) in table.iter() {
                        lines.push(format!("{i} {} {b}", multidegree_string(a)));
                        rows.push(json!({
                            "index": i,
                            "multidegree": a.multidegree(),
                            "monomial": format_monomial(a, vars),
                            "beta": b,
                        }));
                    }
                    ("betti", Output::ok(lines, json!(rows)))
                }
                Command::Check {
                    property,
                    homological,
                    algorithm,
                } => {
                    let property = match property {
                        PropertyArg::LinearResolution => ShiftProperty::LinearResolution,
                        PropertyArg::LinearQuotients => ShiftProperty::LinearQuotients,
                        PropertyArg::Polymatroidal => ShiftProperty::Polymatroidal,
                    };
                    let options = CheckOptions {
                        field,
                        budget: search_budget()?,
                        algorithm: match algorithm {
                            AlgorithmArg::Direct => LinearQuotientsAlgorithm::Direct,
                            AlgorithmArg::Dual => LinearQuotientsAlgorithm::DualShelling,
                        },
                    };
                    input["property"] = json!(format!("{property:?}"));
                    input["homological"] = json!(homological);
                    input["algorithm"] = json!(format!("{:?}", options.algorithm));
                    let report = if *homological {
                        check_homological(ideal, property, &options)?
                    } else {
                        check(ideal, property, &options)?
                    };
                    ("check", report_output(&report, vars))
                }
                Command::AdmissibleOrder => match admissible_order(ideal, search_budget()?)? {
                    SearchOutcome::Found(order) => {
                        let (lines, v) = monomial_lines(order.as_slice(), vars);
                        ("admissible-order", Output::ok(lines, v))
                    }
                    SearchOutcome::NotFound => (
                        "admissible-order",
                        Output {
                            lines: vec!["none".into()],
                            result: Value::Null,
                            code: EXIT_FALSE,
                        },
                    ),
                    SearchOutcome::BudgetExceeded => (
                        "admissible-order",
                        Output {
                            lines: vec!["budget-exceeded".into()],
                            result: json!("budget-exceeded"),
                            code: EXIT_BUDGET,
                        },
                    ),
                },
                Command::Support => {
                    let names: Vec<String> = ideal
                        .support()
                        .into_iter()
                        .map(|i| vars[i].clone())
                        .collect();
                    ("support", Output::ok(vec![names.join(" ")], json!(names)))
                }
                Command::BoundingMultidegree => {
                    let bound = ideal.bounding_multidegree()?;
                    let s = bound
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    ("bounding-multidegree", Output::ok(vec![s], json!(bound)))
                }
                Command::IsAdmissibleOrder { order_file } => {
                    let order = parse_monomial_list(&read(order_file)?, vars)?;
                    input["order"] = monomial_lines(&order, vars).1;
                    let ok = is_admissible_order(ideal, &order)?;
                    (
                        "is-admissible-order",
                        Output {
                            lines: vec![ok.to_string()],
                            result: json!(ok),
                            code: if ok { 0 } else { EXIT_FALSE },
                        },
                    )
                }
                Command::ToMonomial { .. } | Command::ToMultidegree { .. } => unreachable!(),
            };
            (name, ctx, out)
        }
    };
    input["ring"] = json!(ctx.variables);
    if let Some(src) = &ctx.source {
        input["ideal"] = json!(src);
        input["generators"] = monomial_lines(ctx.ideal.generators(), &ctx.variables).1;
    }
    Ok((name.to_string(), input, output))
}

/// Runs the CLI on `argv` (including the program name) and returns the exit status.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli, err) {
        Ok((command, input, output)) => {
            if cli.json {
                let doc = json!({ "command": command, "input": input, "result": output.result });
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&doc).expect("serializable")
                );
            } else {
                for line in &output.lines {
                    let _ = writeln!(out, "{line}");
                }
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
