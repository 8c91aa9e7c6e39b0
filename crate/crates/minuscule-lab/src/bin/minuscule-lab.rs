//! Command-line front end: enumerate minuscule weights, print Dynkin
//! polynomials with all cross-checks, run the verification suites, and emit
//! the adapted-real-form tables.
//!
//! Exit codes: 0 all good, 1 verification failures, 2 usage or input error.
//! Output is byte-stable for fixed arguments; timestamps are opt-in.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use minuscule_lab::minuscule::ratio_value_at_minus_one;
use minuscule_lab::realforms::{
    appendix_tables, complex_algebra_name, instantiate_tables, RowFamily, TableRowDto,
};
use minuscule_lab::rootsys::{Family, RootSystem, SimpleType, Weight};
use minuscule_lab::verify;
use minuscule_lab::weyl::NodePermutation;

#[derive(Parser)]
#[command(
    name = "minuscule-lab",
    version,
    about = "Exact computations around minuscule weight orbits, Dynkin polynomials and adapted real forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the minuscule fundamental weights of a simple type.
    ListMinuscule {
        #[command(flatten)]
        type_args: TypeArgs,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Dynkin polynomial data for one minuscule weight, all routes
    /// cross-checked.
    Dynkin {
        #[command(flatten)]
        type_args: TypeArgs,
        /// Node index (1-based, Bourbaki numbering).
        #[arg(long)]
        node: usize,
        /// Additionally evaluate the Dynkin polynomial at this integer.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
        /// Render exponents as Unicode superscripts (default is ASCII).
        #[arg(long)]
        unicode: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest rank in the type sweep.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
        /// Prefix the output with a generation timestamp (off by default so
        /// identical runs emit identical bytes).
        #[arg(long)]
        timestamps: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the adapted-real-form tables.
    Tables {
        #[arg(long, value_enum)]
        format: TableFormat,
        /// Instantiate the parameterised rows at a concrete value, e.g.
        /// "n=2".
        #[arg(long)]
        instantiate: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct TypeArgs {
    /// Family letter: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Identities,
    Tables,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Md,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::ListMinuscule { type_args, format } => {
            let rs = root_system(&type_args)?;
            let nodes = rs.list_minuscule();
            let text = match format {
                TextOrJson::Text => {
                    let list = if nodes.is_empty() {
                        "none".to_string()
                    } else {
                        nodes
                            .iter()
                            .map(|n| (n + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    format!("type: {}\nminuscule nodes: {}\n", rs.stype(), list)
                }
                TextOrJson::Json => {
                    let value = serde_json::json!({
                        "schema": "1",
                        "type": rs.stype().to_string(),
                        "minuscule_nodes": nodes.iter().map(|n| n + 1).collect::<Vec<_>>(),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Dynkin {
            type_args,
            node,
            eval,
            unicode,
            format,
            out,
        } => {
            let rs = root_system(&type_args)?;
            if node == 0 || node > rs.rank() {
                return Err(format!(
                    "node {node} out of range 1..={} for {}",
                    rs.rank(),
                    rs.stype()
                ));
            }
            let lambda =
                Weight::fundamental(rs.stype().clone(), node - 1).map_err(|e| e.to_string())?;
            if !rs.is_minuscule(&lambda).map_err(|e| e.to_string())? {
                return Err(format!(
                    "node {node} of {} is not minuscule: a minuscule weight pairs to 0 or 1 \
                     with every positive coroot",
                    rs.stype()
                ));
            }
            let text = dynkin_output(&rs, &lambda, node, eval, unicode, format)?;
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_rank,
            format,
            timestamps,
            out,
        } => {
            if max_rank < 1 {
                return Err("max-rank must be at least 1".to_string());
            }
            let report = match suite {
                Suite::Identities => verify::suite_identities(max_rank),
                Suite::Tables => verify::suite_tables(max_rank),
                Suite::All => verify::suite_all(max_rank),
            };
            let mut text = match format {
                TextOrJson::Text => report.to_text(),
                TextOrJson::Json => report.to_json(),
            };
            if timestamps {
                let now = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                text = match format {
                    TextOrJson::Text => format!("generated: {now}\n{text}"),
                    TextOrJson::Json => {
                        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
                        v["generated"] = serde_json::json!(now);
                        format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                    }
                };
            }
            emit(&text, out.as_deref())?;
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Tables {
            format,
            instantiate,
            out,
        } => {
            let n = match &instantiate {
                None => None,
                Some(s) => Some(parse_instantiate(s)?),
            };
            let text = match format {
                TableFormat::Md => tables_markdown(n),
                TableFormat::Json => tables_json(n),
            };
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn root_system(args: &TypeArgs) -> Result<RootSystem, String> {
    let family: Family = args
        .family
        .parse()
        .map_err(|_| format!("invalid type: {}", args.family))?;
    let t = SimpleType::new(family, args.rank).map_err(|e| e.to_string())?;
    Ok(RootSystem::simple(t))
}

fn dynkin_output(
    rs: &RootSystem,
    lambda: &Weight,
    node: usize,
    eval: Option<i64>,
    unicode: bool,
    format: TextOrJson,
) -> Result<String, String> {
    let err = |e: minuscule_lab::Error| e.to_string();

    let graded = rs.graded_orbit(lambda).map_err(err)?;
    let d = graded.rank_generating_function();
    let product = rs.dynkin_product(lambda).map_err(err)?;
    let product_poly = product.to_polynomial().map_err(err)?;
    let even = rs.dynkin_even(lambda).map_err(err)?;
    let degrees = rs.degrees_poincare(lambda).map_err(err)?;
    let fixed = rs
        .fixed_weight_count(lambda, &NodePermutation::identity(rs.rank()))
        .map_err(err)?;
    let free = rs.freeness_split(lambda).map_err(err)?;

    // Cross-assertions before anything is printed.
    assert_eq!(product_poly, d, "product and sum routes agree");
    assert_eq!(
        degrees.full.to_polynomial().map_err(err)?,
        d,
        "degree-multiset route agrees"
    );
    let d_minus_one = d.eval_i64(-1);
    assert_eq!(
        num_bigint::BigInt::from(fixed),
        d_minus_one,
        "fixed count is D(-1)"
    );
    assert_eq!(even.eval_i64(1), d_minus_one, "D_ev(1) = D(-1)");
    assert_eq!(
        ratio_value_at_minus_one(&product).map_err(err)?,
        d_minus_one,
        "safe ratio evaluation agrees"
    );

    let d_one = d.eval_i64(1);
    let evaluated = eval.map(|x| (x, d.eval_i64(x)));

    match format {
        TextOrJson::Text => {
            let mut s = String::new();
            s.push_str(&format!("type: {}, node: {}\n", rs.stype(), node));
            s.push_str(&format!("orbit size: {}\n", graded.len()));
            s.push_str(&format!("top degree: {}\n", graded.top_degree()));
            s.push_str(&format!("D(q)    = {}\n", d.render(unicode)));
            s.push_str(&format!("product = {}\n", product));
            s.push_str(&format!("degrees = {}\n", degrees.full));
            s.push_str(&format!("D_ev(q) = {}\n", even.render(unicode)));
            s.push_str(&format!(
                "D(1) = {d_one}, D(-1) = {d_minus_one}, D_ev(1) = {}\n",
                even.eval_i64(1)
            ));
            s.push_str(&format!("fixed weights under w0: {fixed}\n"));
            s.push_str(&format!("free (split class): {free}\n"));
            if let Some((x, v)) = evaluated {
                s.push_str(&format!("D({x}) = {v}\n"));
            }
            Ok(s)
        }
        TextOrJson::Json => {
            let mut value = serde_json::json!({
                "schema": "1",
                "type": rs.stype().to_string(),
                "node": node,
                "orbit_size": graded.len(),
                "top_degree": graded.top_degree(),
                "dynkin": d.render(unicode),
                "dynkin_product": product.to_string(),
                "dynkin_degrees": degrees.full.to_string(),
                "dynkin_even": even.render(unicode),
                "value_at_one": d_one.to_string(),
                "value_at_minus_one": d_minus_one.to_string(),
                "fixed_weights": fixed,
                "free_split": free,
            });
            if let Some((x, v)) = evaluated {
                value["eval_at"] = serde_json::json!(x);
                value["eval_value"] = serde_json::json!(v.to_string());
            }
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&value).unwrap()
            ))
        }
    }
}

fn parse_instantiate(s: &str) -> Result<usize, String> {
    let rest = s
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| format!("expected n=<integer>, got {s}"))?;
    let n: usize = rest
        .parse()
        .map_err(|_| format!("expected n=<integer>, got {s}"))?;
    if n < 2 {
        return Err("instantiation requires n >= 2".to_string());
    }
    Ok(n)
}

fn table_captions() -> [(u8, &'static str); 2] {
    [
        (1, "inner to a split real form"),
        (2, "not inner to a split real form"),
    ]
}

fn tables_markdown(n: Option<usize>) -> String {
    let mut out = String::new();
    out.push_str("# Adapted real forms\n");
    for (table, caption) in table_captions() {
        out.push_str(&format!("\n## Table {table}: {caption}\n\n"));
        match n {
            None => {
                out.push_str("| g_dual | levi | real form | levi fixed form | satake |\n");
                out.push_str("|---|---|---|---|---|\n");
                for family in appendix_tables() {
                    if family.table() != table {
                        continue;
                    }
                    let [_, g, levi, form, fixed, satake] = family.symbolic();
                    out.push_str(&format!("| {g} | {levi} | {form} | {fixed} | {satake} |\n"));
                }
            }
            Some(n) => {
                out.push_str(
                    "| g_dual | node | levi | real form | levi fixed form | satake | quasi-compact |\n",
                );
                out.push_str("|---|---|---|---|---|---|---|\n");
                for family in appendix_tables() {
                    if family.table() != table {
                        continue;
                    }
                    let rows = match family {
                        RowFamily::E6 | RowFamily::E7 => family.instantiate(2),
                        _ => family.instantiate(n),
                    };
                    for row in rows {
                        out.push_str(&format!(
                            "| {} | {} | {} | {} | {} | {} | {} |\n",
                            complex_algebra_name(&minuscule_lab::SemisimpleType::simple(
                                row.dual_type
                            )),
                            row.node + 1,
                            row.levi_display.clone(),
                            row.real_form,
                            row.levi_fixed_form,
                            row.satake.render(Some(row.node)),
                            row.quasi_compact
                        ));
                    }
                }
            }
        }
    }
    out
}

fn tables_json(n: Option<usize>) -> String {
    let tables: Vec<serde_json::Value> = table_captions()
        .into_iter()
        .map(|(table, caption)| {
            let rows: Vec<serde_json::Value> = match n {
                None => appendix_tables()
                    .into_iter()
                    .filter(|f| f.table() == table)
                    .map(|f| {
                        let [_, g, levi, form, fixed, satake] = f.symbolic();
                        serde_json::json!({
                            "g_dual": g,
                            "levi": levi,
                            "real_form": form,
                            "levi_fixed_form": fixed,
                            "satake": satake,
                        })
                    })
                    .collect(),
                Some(n) => instantiate_tables(n..=n)
                    .iter()
                    .filter(|r| r.table == table)
                    .map(|r| serde_json::to_value(TableRowDto::from(r)).unwrap())
                    .collect(),
            };
            serde_json::json!({
                "table": table,
                "caption": caption,
                "rows": rows,
            })
        })
        .collect();
    let value = serde_json::json!({
        "schema": "1",
        "mode": if n.is_some() { "instantiated" } else { "symbolic" },
        "tables": tables,
    });
    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            f.write_all(text.as_bytes())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}
