use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dissection::diagram::{enumerate, SweepOrder};
use dissection::dual::{lie_bracket, prelie_circ};
use dissection::hopf::{antipode_diagram, coproduct_diagram};
use dissection::json::{algebra_to_json, dual_to_json, tensor_to_json};
use dissection::morphism::phi;
use dissection::poly::parse_rational;
use dissection::primitives::{cofree_reference, primitive_dimension};
use dissection::{DissectionDiagram, DualElement, Forest, LinComb, Rational, TensorElement};

mod cache;
mod suites;

#[derive(Parser)]
#[command(name = "dissection", version, about = "Exact computations with dissection diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Either a rational value for `x` or the symbolic default.
#[derive(clap::Args, Clone)]
struct XArgs {
    /// Evaluate coefficients at this rational, e.g. `-1` or `5/2`.
    #[arg(long, value_parser = parse_rational, conflicts_with = "symbolic", allow_hyphen_values = true)]
    x: Option<Rational>,
    /// Keep coefficients as polynomials in x (the default).
    #[arg(long)]
    symbolic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the diagrams of a degree, or count them.
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Coproduct of a diagram, e.g. `coproduct "D{3: 0-1,0-2,2-3}"`.
    Coproduct {
        diagram: DissectionDiagram,
        #[command(flatten)]
        x: XArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Antipode of a diagram.
    Antipode {
        diagram: DissectionDiagram,
        #[command(flatten)]
        x: XArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Pre-Lie product `Z_A ∘ Z_B` in the dual.
    Prelie {
        left: DissectionDiagram,
        right: DissectionDiagram,
        #[command(flatten)]
        x: XArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lie bracket `[Z_A, Z_B]` in the dual.
    Bracket {
        left: DissectionDiagram,
        right: DissectionDiagram,
        #[command(flatten)]
        x: XArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Image of a rooted forest, written like `[[][]]` or `[[]] []`.
    Phi {
        #[arg(long)]
        tree: Forest,
        #[command(flatten)]
        x: XArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimensions of the primitive spaces at a rational x, as CSV.
    PrimDims {
        /// Single degree; otherwise all degrees up to `--max-degree`.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, env = "DISSECTION_CACHE")]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Run verification suites.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: suites::Suite,
        /// Largest degree for the exhaustive loops.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Sweep chords clockwise instead; the morphism suite must then fail.
        #[arg(long)]
        reversed_sweep: bool,
    },
}

const ENUMERATE_LIMIT: usize = 8;
const PRIM_LIMIT: usize = 5;

fn specialize<K: Ord + Clone>(a: &LinComb<K>, x: &XArgs) -> LinComb<K> {
    match &x.x {
        Some(v) => a.specialize(v),
        None => a.clone(),
    }
}

fn tensor_text(t: &TensorElement) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = t
        .iter()
        .map(|((l, r), c)| if *c == dissection::Poly::one() { format!("{l} ⊗ {r}") } else { format!("({c}) {l} ⊗ {r}") })
        .collect();
    terms.join(" + ")
}

fn emit_dual(a: &DualElement, format: Format) -> Result<()> {
    match format {
        Format::Text => println!("{a}"),
        Format::Json => println!("{}", dual_to_json(a)),
        Format::Csv => bail!("csv output is only available for prim-dims and enumerate"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { degree, count_only, format, force } => {
            if degree > ENUMERATE_LIMIT && !force {
                bail!("degree {degree} exceeds {ENUMERATE_LIMIT}; pass --force to enumerate anyway");
            }
            let all = enumerate(degree);
            match (count_only, format) {
                (true, Format::Json) => println!("{{\"degree\":{degree},\"count\":{}}}", all.len()),
                (true, _) => println!("{}", all.len()),
                (false, Format::Json) => {
                    let names: Vec<String> = all.iter().map(ToString::to_string).collect();
                    println!("{}", serde_json::to_string(&names)?);
                }
                (false, _) => all.iter().for_each(|d| println!("{d}")),
            }
        }
        Command::Coproduct { diagram, x, format } => {
            let t = specialize(&coproduct_diagram(&diagram), &x);
            match format {
                Format::Text => println!("{}", tensor_text(&t)),
                Format::Json => println!("{}", tensor_to_json(&t)),
                Format::Csv => bail!("csv output is only available for prim-dims and enumerate"),
            }
        }
        Command::Antipode { diagram, x, format } => {
            let s = specialize(&antipode_diagram(&diagram), &x);
            match format {
                Format::Text => println!("{s}"),
                Format::Json => println!("{}", algebra_to_json(&s)),
                Format::Csv => bail!("csv output is only available for prim-dims and enumerate"),
            }
        }
        Command::Prelie { left, right, x, format } => {
            let r = DualElement::from_linear(&prelie_circ(&left, &right));
            emit_dual(&DualElement(specialize(&r.0, &x)), format)?;
        }
        Command::Bracket { left, right, x, format } => {
            let r = lie_bracket(&DualElement::diagram(&left), &DualElement::diagram(&right));
            emit_dual(&DualElement(specialize(&r.0, &x)), format)?;
        }
        Command::Phi { tree, x, format } => {
            emit_dual(&DualElement(specialize(&phi(&tree).0, &x)), format)?;
        }
        Command::PrimDims { degree, max_degree, x, format, cache_dir, force } => {
            let degrees: Vec<usize> = match degree {
                Some(n) => vec![n],
                None => (1..=max_degree).collect(),
            };
            if let Some(&n) = degrees.iter().find(|&&n| n > PRIM_LIMIT) {
                if !force {
                    bail!("degree {n} exceeds {PRIM_LIMIT}; pass --force to compute it anyway");
                }
            }
            let cache = cache_dir.map(cache::Cache::new);
            let mut rows = Vec::new();
            for n in degrees.into_iter().filter(|&n| n >= 1) {
                let key = format!("prim-dims|{n}|{x}");
                let dim = match cache.as_ref().and_then(|c| c.get(&key)) {
                    Some(v) => v.as_u64().context("corrupt cache entry")? as usize,
                    None => {
                        let v = primitive_dimension(n, &x);
                        if let Some(c) = &cache {
                            c.put(&key, &serde_json::json!(v))?;
                        }
                        v
                    }
                };
                let reference = cofree_reference(n);
                rows.push((n, dim, reference.clone(), reference == dim.into()));
            }
            match format {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(n, d, r, m)| serde_json::json!({"degree": n, "x": x.to_string(), "dimension": d, "cofree_reference": r.to_string(), "match": m}))
                        .collect();
                    println!("{}", serde_json::to_string(&v)?);
                }
                _ => {
                    println!("degree,x,dimension,cofree_reference,match");
                    for (n, d, r, m) in rows {
                        println!("{n},{x},{d},{r},{m}");
                    }
                }
            }
        }
        Command::Check { suite, max_degree, reversed_sweep } => {
            let order = if reversed_sweep { SweepOrder::Reversed } else { SweepOrder::Standard };
            let mut ok = true;
            for (name, outcome) in suites::run(suite, max_degree, order) {
                match outcome {
                    Ok(()) => println!("PASS {name}"),
                    Err(why) => {
                        ok = false;
                        println!("FAIL {name}: {why}");
                    }
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
