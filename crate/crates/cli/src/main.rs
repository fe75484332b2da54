//! Command-line surface: compute the exact objects, run the verification
//! suite, emit text or JSON.
//!
//! Exit codes: 0 success (or all checks pass), 1 a verification check
//! found a counterexample, 2 invalid input.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sylsum_core::poly::{RootSet, UniPoly};
use sylsum_core::scalar::{Field, Fp61, Rat};
use sylsum_core::schur::{schur_eval, Partition};
use sylsum_core::subres::{
    bezout_cofactors_det, cofactors_exchange_form, cofactors_from_roots, resultant, sres,
};
use sylsum_core::sylvester::syl_double;
use sylsum_core::syminterp::sym_interpolate;
use sylsum_core::verify::{check_double_sum_table, gen_instance, run_suite, Instance, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "sylsum",
    about = "Exact Sylvester double sums, subresultants, Bézout cofactors, \
             symmetric interpolation and Schur evaluations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldChoice {
    /// Arbitrary-precision rationals (canonical answers).
    Rational,
    /// The word-sized prime field with modulus 2^61 - 1 (fast runs).
    Prime,
}

/// Either two root lists or two ascending coefficient lists.
#[derive(Args)]
struct PolyPair {
    /// Roots of f, comma-separated rationals.
    #[arg(long = "A", value_name = "r1,r2,..", allow_hyphen_values = true, conflicts_with_all = ["f", "g"])]
    a: Option<String>,
    /// Roots of g, comma-separated rationals.
    #[arg(
        long = "B",
        value_name = "r1,r2,..",
        allow_hyphen_values = true,
        requires = "a"
    )]
    b: Option<String>,
    /// Coefficients of f, ascending powers.
    #[arg(
        long,
        value_name = "c0,c1,..",
        allow_hyphen_values = true,
        requires = "g"
    )]
    f: Option<String>,
    /// Coefficients of g, ascending powers.
    #[arg(
        long,
        value_name = "c0,c1,..",
        allow_hyphen_values = true,
        requires = "f"
    )]
    g: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Subresultant Sres_d(f, g).
    Sres {
        #[command(flatten)]
        pair: PolyPair,
        #[arg(short, long)]
        d: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Resultant Res(f, g).
    Res {
        #[command(flatten)]
        pair: PolyPair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sylvester double sum Syl_{p,q}(A, B).
    Sylsum {
        #[arg(long = "A", value_name = "r1,r2,..", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "B", value_name = "r1,r2,..", allow_hyphen_values = true)]
        b: String,
        #[arg(short, long)]
        p: usize,
        #[arg(short, long)]
        q: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bézout cofactors F_k, G_k (all three constructions for root input,
    /// the determinantal one for coefficient input).
    Cofactors {
        #[command(flatten)]
        pair: PolyPair,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Schur polynomial s_lambda evaluated at a point.
    Schur {
        /// Partition, weakly decreasing, comma-separated.
        #[arg(long, value_name = "l1,l2,..")]
        lambda: String,
        /// Evaluation point, one value per partition part.
        #[arg(long, value_name = "x1,x2,..", allow_hyphen_values = true)]
        points: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Symmetric Lagrange interpolation over node tuples of B.
    Interp {
        #[arg(long = "B", value_name = "r1,r2,..", allow_hyphen_values = true)]
        b: String,
        /// Per-variable degree bound (basis subsets have this size).
        #[arg(short, long)]
        d: usize,
        /// JSON object mapping node-subset bitmasks (decimal, bit i =
        /// i-th element of B) to rational values.
        #[arg(long, value_name = "JSON")]
        values: String,
        /// Optionally evaluate the interpolant at a tuple.
        #[arg(long, value_name = "t1,t2,..", allow_hyphen_values = true)]
        eval: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the identity-verification suite on generated instances.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Instances per (m, n) size.
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        /// Base seed; everything is reproducible from it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Roots are drawn from [-range, range].
        #[arg(long, default_value_t = 50)]
        range: i64,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldChoice,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the full double-sum case table for one instance.
    ShowTable {
        #[arg(long = "A", value_name = "r1,r2,..", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long = "B", value_name = "r1,r2,..", allow_hyphen_values = true)]
        b: Option<String>,
        /// Generate roots instead of passing them: |A|.
        #[arg(long, requires = "n", conflicts_with = "a")]
        m: Option<usize>,
        /// Generate roots instead of passing them: |B|.
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        range: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_scalar_list(text: &str) -> Result<Vec<Rat>, String> {
    text.split(',')
        .map(|part| Rat::parse(part).map_err(|e| e.to_string()))
        .collect()
}

fn parse_roots(text: &str) -> Result<RootSet<Rat>, String> {
    RootSet::new(parse_scalar_list(text)?).map_err(|e| e.to_string())
}

fn parse_poly(text: &str) -> Result<UniPoly<Rat>, String> {
    Ok(UniPoly::from_coeffs(parse_scalar_list(text)?))
}

/// Resolve a root/coefficient pair to (f, g, roots-if-given).
#[allow(clippy::type_complexity)]
fn resolve_pair(
    pair: &PolyPair,
) -> Result<
    (
        UniPoly<Rat>,
        UniPoly<Rat>,
        Option<(RootSet<Rat>, RootSet<Rat>)>,
    ),
    String,
> {
    match (&pair.a, &pair.b, &pair.f, &pair.g) {
        (Some(a), Some(b), None, None) => {
            let a = parse_roots(a)?;
            let b = parse_roots(b)?;
            let (f, g) = (a.poly(), b.poly());
            Ok((f, g, Some((a, b))))
        }
        (None, None, Some(f), Some(g)) => Ok((parse_poly(f)?, parse_poly(g)?, None)),
        _ => Err("pass either --A and --B (roots) or --f and --g (coefficients)".into()),
    }
}

fn print_poly(p: &UniPoly<Rat>, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Sres { pair, d, format } => {
            let (f, g, _) = resolve_pair(&pair)?;
            let s = sres(&f, &g, d).map_err(|e| e.to_string())?;
            print_poly(&s, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Res { pair, format } => {
            let (f, g, _) = resolve_pair(&pair)?;
            let r = resultant(&f, &g).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{r}"),
                Format::Json => println!("{}", json!({ "value": r.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sylsum { a, b, p, q, format } => {
            let a = parse_roots(&a)?;
            let b = parse_roots(&b)?;
            let s = syl_double(&a, &b, p, q).map_err(|e| e.to_string())?;
            print_poly(&s, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cofactors { pair, k, format } => {
            let (f, g, root_sets) = resolve_pair(&pair)?;
            let det = bezout_cofactors_det(&f, &g, k).map_err(|e| e.to_string())?;
            let mut forms = vec![("det", det)];
            if let Some((a, b)) = &root_sets {
                forms.push((
                    "roots",
                    cofactors_from_roots(a, b, k).map_err(|e| e.to_string())?,
                ));
                forms.push((
                    "exchange",
                    cofactors_exchange_form(a, b, k).map_err(|e| e.to_string())?,
                ));
            }
            match format {
                Format::Text => {
                    for (name, (fk, gk)) in &forms {
                        println!("{name}: F_{k} = {fk}");
                        println!("{name}: G_{k} = {gk}");
                    }
                }
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    for (name, (fk, gk)) in &forms {
                        obj.insert(
                            (*name).to_string(),
                            json!({ "F": fk.to_json(), "G": gk.to_json() }),
                        );
                    }
                    println!("{}", serde_json::Value::Object(obj));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Schur {
            lambda,
            points,
            format,
        } => {
            let parts = lambda
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let lambda = Partition::new(parts).map_err(|e| e.to_string())?;
            let xs = parse_scalar_list(&points)?;
            let value = schur_eval(&lambda, &xs).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!("{}", json!({ "value": value.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Interp {
            b,
            d,
            values,
            eval,
            format,
        } => {
            let b = parse_roots(&b)?;
            let raw: serde_json::Value =
                serde_json::from_str(&values).map_err(|e| format!("values: {e}"))?;
            let obj = raw
                .as_object()
                .ok_or("values must be a JSON object of mask -> rational")?;
            let mut map = BTreeMap::new();
            for (key, val) in obj {
                let mask: u64 = key.parse().map_err(|_| "mask keys must be decimal")?;
                let s = val.as_str().ok_or("values must be rational strings")?;
                map.insert(mask, Rat::parse(s).map_err(|e| e.to_string())?);
            }
            let h = sym_interpolate(&b, d, &map).map_err(|e| e.to_string())?;
            let evaluated = match &eval {
                Some(point) => {
                    let point = parse_scalar_list(point)?;
                    Some(h.eval(&point).map_err(|e| e.to_string())?)
                }
                None => None,
            };
            match format {
                Format::Text => {
                    for (mask, c) in h.coeffs() {
                        println!("c[{mask:#b}] = {c}");
                    }
                    if let Some(v) = evaluated {
                        println!("value = {v}");
                    }
                }
                Format::Json => {
                    let mut out = h.to_json();
                    if let Some(v) = evaluated {
                        out["value"] = json!(v.to_string());
                    }
                    println!("{out}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_m,
            max_n,
            seeds,
            seed,
            range,
            field,
            format,
        } => {
            if max_m == 0 || max_n == 0 || seeds == 0 {
                return Err("max-m, max-n and seeds must be at least 1".into());
            }
            let needed = (max_m + max_n) as i64;
            if 2 * range + 1 < needed {
                return Err(format!(
                    "range {range} too small for {needed} pairwise distinct roots"
                ));
            }
            let cfg = SuiteConfig {
                max_m,
                max_n,
                seeds_per_size: seeds,
                base_seed: seed,
                root_range: range,
                disjoint: true,
            };
            match field {
                FieldChoice::Rational => emit_suite(run_suite::<Rat>(&cfg), format),
                FieldChoice::Prime => emit_suite(run_suite::<Fp61>(&cfg), format),
            }
        }
        Command::ShowTable {
            a,
            b,
            m,
            n,
            seed,
            range,
            format,
        } => {
            let inst: Instance<Rat> = match (a, b, m, n) {
                (Some(a), Some(b), None, None) => {
                    Instance::from_roots(parse_roots(&a)?, parse_roots(&b)?, range)
                }
                (None, None, Some(m), Some(n)) => {
                    gen_instance(seed, m, n, range, true).map_err(|e| e.to_string())?
                }
                _ => return Err("pass --A and --B, or --m and --n".into()),
            };
            let (branches, checks) = check_double_sum_table(&inst);
            let all_pass = branches.iter().all(|r| r.pass) && checks.iter().all(|r| r.pass);
            match format {
                Format::Text => {
                    println!(
                        "A = {{{}}}, B = {{{}}}",
                        inst.a
                            .elems()
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(", "),
                        inst.b
                            .elems()
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    for r in &branches {
                        println!(
                            "p={} q={} d={} k={} [{}] {} = {}",
                            r.p,
                            r.q,
                            r.d,
                            r.k,
                            r.branch,
                            if r.pass { "ok" } else { "MISMATCH" },
                            r.computed
                        );
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = branches.iter().map(|r| r.to_json()).collect();
                    println!("{}", json!({ "pass": all_pass, "rows": rows }));
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit_suite<K: Field>(
    report: sylsum_core::verify::SuiteReport<K>,
    format: Format,
) -> Result<ExitCode, String> {
    let all_pass = report.all_pass();
    match format {
        Format::Text => {
            let (bad_branches, bad_checks) = report.failures();
            for r in &bad_branches {
                println!(
                    "FAIL table: seed={} m={} n={} p={} q={} branch={} expected={} computed={}",
                    r.seed, r.m, r.n, r.p, r.q, r.branch, r.expected, r.computed
                );
            }
            for r in &bad_checks {
                println!(
                    "FAIL {}: seed={} m={} n={} {} expected={} computed={}",
                    r.name, r.seed, r.m, r.n, r.context, r.expected, r.computed
                );
            }
            println!(
                "{}: {} checks ({} table rows), all exact",
                if all_pass { "ok" } else { "FAILED" },
                report.total(),
                report.branches.len()
            );
        }
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
