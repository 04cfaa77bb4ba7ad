//! Batch command-line surface over the knotdet library.
//!
//! Every subcommand prints one JSON document to stdout of the shape
//! `{"status": "ok" | "infeasible" | "invalid-input", "payload": …,
//! "transcript": […]}` and reports diagnostics on stderr. Exit codes: 0 ok,
//! 1 infeasible, 2 invalid input.

use clap::{Parser, Subcommand, ValueEnum};
use knotdet::census::{self, SchubertForm};
use knotdet::diagrams::{self, DetMethod, DiagramError, LinkDiagram};
use knotdet::numtheory::{self, ChiralityVerdict};
use knotdet::plangraph::{self, LoadedGraph};
use knotdet::realize::{self, RealizeError};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "knotdet", version, about = "Knot determinants, two-square representations, and self-dual graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Goeritz,
    States,
    Trees,
    All,
}

impl From<MethodArg> for DetMethod {
    fn from(m: MethodArg) -> DetMethod {
        match m {
            MethodArg::Goeritz => DetMethod::Goeritz,
            MethodArg::States => DetMethod::States,
            MethodArg::Trees => DetMethod::Trees,
            MethodArg::All => DetMethod::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Two-square decompositions and representation counts of N
    Twosquares {
        n: u64,
        /// restrict the decomposition list to coprime pairs
        #[arg(long)]
        coprime: bool,
    },
    /// Realize N as the determinant of an achiral knot diagram
    Realize {
        n: u64,
        /// demand a rational (two-bridge) achiral knot
        #[arg(long, conflicts_with = "square")]
        rational: bool,
        /// demand a prime alternating achiral knot for a square N
        #[arg(long)]
        square: bool,
    },
    /// Determinant of a diagram file by one or all methods
    Det {
        /// diagram JSON file ({"crossings":[{"id":..,"arcs":[..]},…]})
        #[arg(long)]
        pd: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Rational knot census for a given determinant
    Census {
        #[arg(long)]
        det: u64,
        /// only achiral classes
        #[arg(long)]
        achiral: bool,
        /// list class representatives (default reports counts only)
        #[arg(long, conflicts_with = "count")]
        list: bool,
        #[arg(long)]
        count: bool,
        /// emit the list as CSV rows `p,q,achiral` instead of JSON
        #[arg(long, requires = "list")]
        csv: bool,
    },
    /// Self-dual graph realization, or a self-duality report for a file
    Selfdual {
        /// realize this odd sum of two squares as a spanning-tree count
        n: Option<u64>,
        /// check a graph JSON file instead
        #[arg(long, conflicts_with = "n")]
        check: Option<PathBuf>,
    },
    /// Alexander polynomial of the two-bridge knot S(P, Q)
    Alex { p: u64, q: u64 },
    /// Determinant-based chirality filter
    Chirality {
        #[arg(long)]
        det: u64,
        /// signed determinant Δ(−1), when known
        #[arg(long)]
        signed: Option<i64>,
    },
    /// Crowell and achiral determinant bounds for a diagram file
    Bounds {
        #[arg(long)]
        pd: PathBuf,
    },
}

enum Outcome {
    Ok(Value, Vec<String>),
    Infeasible(String, Value),
    Invalid(String),
}

fn emit(outcome: Outcome) -> ExitCode {
    match outcome {
        Outcome::Ok(payload, transcript) => {
            let doc = json!({
                "status": "ok",
                "payload": payload,
                "transcript": transcript,
            });
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Outcome::Infeasible(reason, payload) => {
            let doc = json!({
                "status": "infeasible",
                "payload": payload,
                "transcript": [reason.clone()],
            });
            println!("{doc}");
            eprintln!("infeasible: {reason}");
            ExitCode::from(1)
        }
        Outcome::Invalid(reason) => {
            let doc = json!({
                "status": "invalid-input",
                "payload": null,
                "transcript": [reason.clone()],
            });
            println!("{doc}");
            eprintln!("invalid input: {reason}");
            ExitCode::from(2)
        }
    }
}

fn load_diagram(path: &PathBuf) -> Result<LinkDiagram, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    diagrams::diagram_from_json(&text)
}

fn realize_outcome(result: Result<realize::RealizationCertificate, RealizeError>) -> Outcome {
    match result {
        Ok(cert) => {
            let transcript: Vec<String> = cert
                .transcript
                .iter()
                .map(|(m, v)| format!("det[{m}] = {v}"))
                .chain(std::iter::once(format!(
                    "all methods equal target {}",
                    cert.target
                )))
                .collect();
            Outcome::Ok(cert.to_json(), transcript)
        }
        Err(
            e @ (RealizeError::NotSumOfTwoSquares { .. }
            | RealizeError::NoCoprimeDecomposition { .. }
            | RealizeError::ExcludedValue { .. }),
        ) => Outcome::Infeasible(e.to_string(), Value::Null),
        Err(e) => Outcome::Invalid(e.to_string()),
    }
}

fn diagram_error_outcome(e: DiagramError) -> Outcome {
    match e {
        DiagramError::StateBudget { .. } => Outcome::Infeasible(e.to_string(), Value::Null),
        other => Outcome::Invalid(other.to_string()),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Twosquares { n, coprime } => {
            if n == 0 {
                return Outcome::Invalid("n must be positive".into());
            }
            let decs: Vec<Value> = numtheory::two_square_decompositions(n)
                .into_iter()
                .filter(|d| !coprime || d.is_coprime())
                .map(|d| json!([d.a, d.b]))
                .collect();
            Outcome::Ok(
                json!({
                    "n": n,
                    "decompositions": decs,
                    "r2": numtheory::r2(n),
                    "r2_0": numtheory::r2_0(n),
                }),
                vec![],
            )
        }
        Command::Realize { n, rational, square } => {
            if square {
                realize_outcome(realize::realize_square_prime_alternating(n))
            } else if rational {
                realize_outcome(realize::realize_achiral_rational(n))
            } else {
                realize_outcome(realize::realize_achiral(n))
            }
        }
        Command::Det { pd, method } => {
            let diagram = match load_diagram(&pd) {
                Ok(d) => d,
                Err(e) => return Outcome::Invalid(e),
            };
            let method = DetMethod::from(method);
            if matches!(method, DetMethod::All) {
                match diagrams::det_transcript(&diagram) {
                    Ok(values) => {
                        let transcript =
                            values.iter().map(|(m, v)| format!("det[{m}] = {v}")).collect();
                        let methods: serde_json::Map<String, Value> = values
                            .iter()
                            .map(|&(m, v)| (m.to_string(), v.into()))
                            .collect();
                        Outcome::Ok(
                            json!({
                                "determinant": values[0].1,
                                "methods": methods,
                                "crossings": diagram.crossing_number(),
                            }),
                            transcript,
                        )
                    }
                    Err(e) => diagram_error_outcome(e),
                }
            } else {
                match diagram.det(method) {
                    Ok(v) => Outcome::Ok(
                        json!({
                            "determinant": v,
                            "crossings": diagram.crossing_number(),
                        }),
                        vec![format!("det = {v}")],
                    ),
                    Err(e) => diagram_error_outcome(e),
                }
            }
        }
        Command::Census {
            det,
            achiral,
            list,
            count,
            csv,
        } => {
            let _ = count;
            if det < 3 || det % 2 == 0 {
                return Outcome::Invalid("census requires an odd determinant > 1".into());
            }
            let classes: Vec<(SchubertForm, bool)> = census::census_classes(det)
                .into_iter()
                .filter(|&(_, a)| !achiral || a)
                .collect();
            if list && csv {
                // raw CSV rows to stdout, no JSON envelope
                println!("p,q,achiral");
                for (form, is_achiral) in &classes {
                    println!("{},{},{}", form.p(), form.q(), is_achiral);
                }
                return Outcome::Ok(Value::Null, vec![]);
            }
            let mut payload = serde_json::Map::new();
            payload.insert("det".into(), det.into());
            payload.insert("count".into(), classes.len().into());
            payload.insert(
                "count_achiral".into(),
                census::count_achiral_rational(det).into(),
            );
            payload.insert(
                "count_chiral_twice".into(),
                census::count_rational_chiral_twice(det).into(),
            );
            payload.insert("km_upper_bound".into(), census::km_upper_bound(det).into());
            if list {
                let rows: Vec<Value> = classes
                    .iter()
                    .map(|(f, a)| json!({"p": f.p(), "q": f.q(), "achiral": a}))
                    .collect();
                payload.insert("classes".into(), rows.into());
            }
            Outcome::Ok(Value::Object(payload), vec![])
        }
        Command::Selfdual { n: Some(n), check: None } => match plangraph::realize_selfdual(n) {
            Ok(graph) => {
                let trees = graph.spanning_tree_count();
                let self_dual = graph.is_self_dual();
                let transcript = vec![
                    format!("spanning trees = {trees}"),
                    format!("self-dual (abstract) = {self_dual:?}"),
                ];
                Outcome::Ok(
                    json!({
                        "n": n,
                        "graph": serde_json::from_str::<Value>(
                            &plangraph::graph_to_json(&graph)
                        ).expect("graph json"),
                        "spanning_trees": trees.to_string(),
                        "self_dual": self_dual.ok(),
                        "self_dual_strict": graph.is_self_dual_strict(),
                        "bound_check": plangraph::selfdual_tree_bound_check(&graph).ok(),
                    }),
                    transcript,
                )
            }
            Err(e @ plangraph::PlanGraphError::NotSumOfTwoSquares(..)) => {
                Outcome::Infeasible(e.to_string(), Value::Null)
            }
            Err(e) => Outcome::Invalid(e.to_string()),
        },
        Command::Selfdual { n: None, check: Some(path) } => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => return Outcome::Invalid(format!("{}: {e}", path.display())),
            };
            match plangraph::graph_from_json(&text) {
                Ok(LoadedGraph::Embedded(g)) => Outcome::Ok(
                    json!({
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                        "spanning_trees": g.spanning_tree_count().to_string(),
                        "self_dual": g.is_self_dual().ok(),
                        "self_dual_strict": g.is_self_dual_strict(),
                        "has_cut_vertex": g.has_cut_vertex(),
                        "bound_check": plangraph::selfdual_tree_bound_check(&g).ok(),
                    }),
                    vec![],
                ),
                Ok(LoadedGraph::Abstract(m)) => Outcome::Ok(
                    json!({
                        "vertices": m.vertices,
                        "edges": m.edges.len(),
                        "spanning_trees": m.spanning_tree_count().to_string(),
                        "self_dual": Value::Null,
                        "has_cut_vertex": m.has_cut_vertex(),
                        "note": "rotations absent: embedding-level checks unavailable",
                    }),
                    vec![],
                ),
                Err(e) => Outcome::Invalid(e),
            }
        }
        Command::Selfdual { .. } => {
            Outcome::Invalid("selfdual needs either N or --check FILE".into())
        }
        Command::Alex { p, q } => {
            let form = match SchubertForm::new(p, q) {
                Ok(f) => f,
                Err(e) => return Outcome::Invalid(e.to_string()),
            };
            let expansion = knotdet::alexander::even_expansion(form);
            let poly = knotdet::alexander::alexander_of_expansion(&expansion);
            let lead = poly.leading_coefficient();
            let sq = numtheory::isqrt(lead.unsigned_abs());
            Outcome::Ok(
                json!({
                    "p": p,
                    "q": q,
                    "polynomial": poly.to_text(),
                    "even_expansion": expansion.entries(),
                    "genus": expansion.genus(),
                    "leading_coefficient": lead,
                    "leading_is_square": sq * sq == lead.unsigned_abs(),
                    "achiral": census::is_achiral_rational(form),
                    "determinant": poly.eval(-1).unsigned_abs(),
                }),
                vec![
                    format!("Δ(1) = {}", poly.eval(1)),
                    format!("|Δ(−1)| = {}", poly.eval(-1).unsigned_abs()),
                ],
            )
        }
        Command::Chirality { det, signed } => match numtheory::chirality_filter(det, signed) {
            Ok(ChiralityVerdict::ChiralCertified(reason)) => Outcome::Ok(
                json!({
                    "det": det,
                    "verdict": "chiral-certified",
                    "reason": format!("{reason:?}"),
                }),
                vec![],
            ),
            Ok(ChiralityVerdict::Inconclusive) => Outcome::Ok(
                json!({"det": det, "verdict": "inconclusive"}),
                vec![],
            ),
            Err(e) => Outcome::Invalid(e.to_string()),
        },
        Command::Bounds { pd } => {
            let diagram = match load_diagram(&pd) {
                Ok(d) => d,
                Err(e) => return Outcome::Invalid(e),
            };
            let crowell = realize::crowell_bound_check(&diagram);
            let achiral = realize::achiral_bound_check(&diagram);
            let det = match diagram.det(DetMethod::Goeritz) {
                Ok(v) => v,
                Err(e) => return diagram_error_outcome(e),
            };
            let c = diagram.crossing_number() as i128;
            Outcome::Ok(
                json!({
                    "crossings": diagram.crossing_number(),
                    "determinant": det,
                    "crowell": {
                        "holds": crowell.as_ref().ok(),
                        "bound": if diagram.is_torus_two_pattern() { c } else { (2 * c - 3).max(c) },
                        "note": crowell.err().map(|e| e.to_string()),
                    },
                    "achiral_quadratic": {
                        "holds": achiral.as_ref().ok(),
                        "bound": (c / 2) * (c / 2 - 3),
                        "note": achiral.err().map(|e| e.to_string()),
                    },
                }),
                vec![],
            )
        }
    }
}

fn main() -> ExitCode {
    emit(run(Cli::parse().command))
}
