//! Command-line front end and the claim reproduction harness.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::ehrhart::{ehrhart_from_fvector, format_polynomial, interpolate_ehrhart, EhrhartPolynomial};
use crate::graphs::{enumerate_ld, enumerate_ld_3reg, graph_isomorphic, star, Graph};
use crate::io::{classification_json, parse_points, parse_quiver, FiberJson, IdealJson, IoError, PolynomialJson, PolytopeJson, QuiverJson, TriangulationJson};
use crate::polytopes::{equivalent, is_compressed, LatticePolytope};
use crate::quivers::{flow_polytope, tighten, Bounds, Weight};
use crate::subdivision::{cell_set_p, cells, classify_compressed, weights_w, weights_w_reduced};
use crate::toric::{binomial_moves, disconnected_cubic_fiber, generated_in_degree, initial_ideal_from_nonfaces, Binomial, Monomial};
use crate::triangulation::{certify_regular, minimal_nonfaces, pulling_triangulation, subdivide_and_triangulate, try_pulling_triangulation};

pub const CLAIMS: [&str; 11] = [
    "all-3dim",
    "3-cells",
    "4-cells",
    "all-4dim",
    "triangulation-4cells",
    "triangulation-new-4cells",
    "ehrhart",
    "quadratic-generation",
    "birkhoff-not-quadratic",
    "grobner-weights",
    "nonflow-example",
];

#[derive(Parser, Debug)]
#[command(name = "flowtope", about = "Flow polytopes of quivers: cells, classification, triangulations, Ehrhart polynomials, toric ideals")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args, Debug)]
struct PolytopeSource {
    /// Quiver JSON, or a point table / polytope JSON.
    input: Option<PathBuf>,
    /// Point table fixing the index order.
    #[arg(long)]
    points: Option<PathBuf>,
    /// A built-in point table by name, e.g. "V.b(4)".
    #[arg(long)]
    table: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tighten an acyclic quiver and report dimension and facets.
    Tighten { quiver: PathBuf },
    /// Lattice points and facets of a flow polytope.
    Points { quiver: PathBuf },
    /// Full-dimensional unit-box cells of a flow polytope.
    Cells { quiver: PathBuf },
    /// Weights W(Γ) on Γ* for a graph in `u -- v` text format.
    Weights {
        graph: PathBuf,
        /// Keep one weight per automorphism orbit.
        #[arg(long)]
        reduced: bool,
    },
    /// Prime compressed flow polytopes of dimension d up to equivalence.
    Classify {
        #[arg(long)]
        dim: usize,
    },
    /// Pulling triangulation with cells, non-faces and regularity heights.
    Triangulate {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long, value_delimiter = ',')]
        pull: Vec<usize>,
        /// For quiver input: pull each cell of the unit-box subdivision.
        #[arg(long)]
        subdivide: bool,
    },
    /// Minimal non-faces of a pulling triangulation.
    Nonfaces {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long, value_delimiter = ',')]
        pull: Vec<usize>,
    },
    /// Ehrhart polynomial by dilate counting.
    Ehrhart {
        #[command(flatten)]
        source: PolytopeSource,
        /// Also derive it from the f-vector of this pulling triangulation.
        #[arg(long, value_delimiter = ',')]
        pull: Option<Vec<usize>>,
    },
    /// Degree-of-generation verdicts and the initial ideal of a pulling triangulation.
    Ideal {
        #[command(flatten)]
        source: PolytopeSource,
        #[arg(long, value_delimiter = ',')]
        pull: Vec<usize>,
        /// Also list the binomial moves of degree ≤ this.
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        degree: Option<u8>,
    },
    /// Lattice equivalence of two polytopes.
    Equiv { first: PathBuf, second: PathBuf },
    /// Prime graphs of cycle rank d with minimum valency 3.
    Graphs {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        three_regular: bool,
    },
    /// Check a claim of the paper (or all of them).
    Reproduce {
        claim: Option<String>,
        #[arg(long)]
        table: Option<String>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String, String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Json(_) | IoError::Schema(_) => Failure::Usage(e.to_string()),
            IoError::Quiver(_) => Failure::Domain("quiver".into(), e.to_string()),
            IoError::Polytope(_) => Failure::Domain("polytope".into(), e.to_string()),
            IoError::Graph(_) => Failure::Domain("graph".into(), e.to_string()),
        }
    }
}

fn domain(kind: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Domain(kind.into(), e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Output as JSON plus an optional text rendering.
struct Output {
    json: Value,
    text: Option<String>,
    ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text: Some(text), ok: true }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Run with `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let (code, json, text) = match dispatch(cli.command) {
        Ok(o) => (if o.ok { 0 } else { 1 }, o.json, o.text),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(Failure::Domain(kind, msg)) => {
            let j = json!({"error": kind, "message": msg});
            let t = format!("error ({kind}): {msg}\n");
            (1, j, Some(t))
        }
    };
    let rendered = match (cli.format, text) {
        (Format::Text, Some(t)) => t,
        _ => serde_json::to_string_pretty(&json).expect("json") + "\n",
    };
    let _ = out.write_all(rendered.as_bytes());
    code
}

fn load_polytope(src: &PolytopeSource) -> Result<LatticePolytope, Failure> {
    if let Some(name) = &src.table {
        return catalog::table_polytope(name).ok_or_else(|| Failure::Usage(format!("unknown table {name:?}")));
    }
    if let Some(path) = &src.points {
        return Ok(parse_points(&read(path)?)?);
    }
    let path = src.input.as_ref().ok_or_else(|| Failure::Usage("no input polytope given".into()))?;
    let text = read(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed JSON: {e}")))?;
    if v.get("arrows").is_some() {
        let (q, w, b) = parse_quiver(&text)?;
        flow_polytope(&q, &w, &b).map_err(|e| domain("quiver", e))
    } else {
        Ok(parse_points(&text)?)
    }
}

fn polytope_text(p: &LatticePolytope) -> String {
    let mut s = format!("dim {} in Z^{}; {} points, {} facets\n", p.dim(), p.ambient_dim(), p.points().len(), p.facets().len());
    for (i, x) in p.points().iter().enumerate() {
        s += &format!("  v{i:<3} {x:?}\n");
    }
    for f in p.facets() {
        s += &format!("  facet {:?} . x >= {}\n", f.normal, f.offset);
    }
    s
}

fn sets_text(sets: &[Vec<usize>]) -> String {
    sets.iter()
        .map(|c| format!("<{}>", c.iter().map(|i| format!("v{i}")).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn weights_json(ws: &[Weight]) -> Value {
    to_value(&ws)
}

fn graph_name(g: &Graph) -> String {
    for (d, list) in [(3, catalog::graphs_dim3()), (4, catalog::graphs_dim4())] {
        if crate::graphs::chi(g) == d {
            if let Some((name, _)) = list.iter().find(|(_, h)| graph_isomorphic(g, h)) {
                return format!("{name}({d})");
            }
        }
    }
    g.to_text().trim_end().replace('\n', "; ")
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Tighten { quiver } => {
            let (q, w, b) = parse_quiver(&read(&quiver)?)?;
            if b != Bounds::default() {
                return Err(domain("quiver", "tighten takes quivers without arrow bounds"));
            }
            let (tq, tw) = tighten(&q, &w).map_err(|e| domain("quiver", e))?;
            let p = flow_polytope(&tq, &tw, &Bounds::default()).map_err(|e| domain("quiver", e))?;
            let json = json!({
                "quiver": to_value(&QuiverJson::new(&tq, &tw, &Bounds::default())),
                "dim": p.dim(),
                "facets": p.facets().len(),
                "arrows": tq.arrows().len(),
            });
            let text = format!(
                "tight quiver: {} vertices, {} arrows; polytope dim {}, {} facets\n",
                tq.vertices().len(),
                tq.arrows().len(),
                p.dim(),
                p.facets().len()
            );
            Ok(Output::new(json, text))
        }
        Command::Points { quiver } => {
            let (q, w, b) = parse_quiver(&read(&quiver)?)?;
            let p = flow_polytope(&q, &w, &b).map_err(|e| domain("quiver", e))?;
            Ok(Output::new(to_value(&PolytopeJson::new(&p)), polytope_text(&p)))
        }
        Command::Cells { quiver } => {
            let (q, w, b) = parse_quiver(&read(&quiver)?)?;
            if b != Bounds::default() {
                return Err(domain("quiver", "cells takes quivers without arrow bounds"));
            }
            let cs = cells(&q, &w).map_err(|e| domain("quiver", e))?;
            let json = Value::Array(
                cs.iter().map(|c| json!({"k": to_value(&c.k), "polytope": to_value(&PolytopeJson::new(&c.polytope))})).collect(),
            );
            let mut text = format!("{} cells\n", cs.len());
            for c in &cs {
                text += &format!("k = {:?}: {} points\n", c.k, c.polytope.points().len());
            }
            Ok(Output::new(json, text))
        }
        Command::Weights { graph, reduced } => {
            let g = Graph::parse_text(&read(&graph)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let ws = if reduced { weights_w_reduced(&g) } else { weights_w(&g) };
            let text = ws.iter().map(|w| crate::io::weight_label(w) + "\n").collect();
            Ok(Output::new(weights_json(&ws), text))
        }
        Command::Classify { dim } => {
            let classes = classify_compressed(dim).map_err(|e| domain("classification", e))?;
            let names: Vec<&str> = match dim {
                3 => catalog::CLASSES_DIM3.to_vec(),
                4 => catalog::CLASSES_DIM4.to_vec(),
                _ => vec![],
            };
            let report = classification_json(&classes, |i, c| {
                names
                    .iter()
                    .find(|n| equivalent(&c.polytope, &catalog::table_polytope(n).unwrap()).is_some())
                    .map(|n| n.to_string())
                    .unwrap_or_else(|| format!("C{i}"))
            });
            let report: Vec<_> = report
                .into_iter()
                .zip(&classes)
                .map(|(mut r, c)| {
                    for (pj, p) in r.provenance.iter_mut().zip(&c.provenance) {
                        pj.graph = graph_name(&p.graph);
                    }
                    r
                })
                .collect();
            let mut text = format!("{} classes\n", report.len());
            for r in &report {
                text += &format!(
                    "{:<10} points {:>2}  facets {:>2}  volume {:>2}  from {} weights\n",
                    r.class_id,
                    r.fingerprint.points,
                    r.facets,
                    r.fingerprint.normalized_volume,
                    r.provenance.len()
                );
            }
            Ok(Output::new(to_value(&report), text))
        }
        Command::Triangulate { source, pull, subdivide } => {
            let t = if subdivide {
                let path = source.input.as_ref().ok_or_else(|| Failure::Usage("--subdivide needs a quiver".into()))?;
                let (q, w, _) = parse_quiver(&read(path)?)?;
                subdivide_and_triangulate(&q, &w, &pull).map_err(|e| domain("triangulation", e))?
            } else {
                let p = load_polytope(&source)?;
                try_pulling_triangulation(&p, &pull).map_err(|e| domain("triangulation", e))?
            };
            let heights = certify_regular(&t);
            let tj = TriangulationJson::new(&t, heights.as_ref());
            let text = format!(
                "cells: {}\nnon-faces: {}\nunimodular: {}\nregular: {}\n",
                sets_text(&tj.cells),
                sets_text(&tj.nonfaces),
                tj.unimodular,
                heights.is_some()
            );
            Ok(Output::new(to_value(&tj), text))
        }
        Command::Nonfaces { source, pull } => {
            let p = load_polytope(&source)?;
            let t = try_pulling_triangulation(&p, &pull).map_err(|e| domain("triangulation", e))?;
            let nf: Vec<Vec<usize>> = minimal_nonfaces(&t).into_iter().map(|f| f.0).collect();
            let text = sets_text(&nf) + "\n";
            Ok(Output::new(json!({ "nonfaces": nf }), text))
        }
        Command::Ehrhart { source, pull } => {
            let p = load_polytope(&source)?;
            let l = interpolate_ehrhart(&p);
            if let Some(order) = pull {
                let t = try_pulling_triangulation(&p, &order).map_err(|e| domain("triangulation", e))?;
                let f = ehrhart_from_fvector(&t).map_err(|e| domain("triangulation", e))?;
                if f != l {
                    return Err(domain("ehrhart", "f-vector formula disagrees with dilate counting"));
                }
            }
            let pj = PolynomialJson::new(&l);
            let d = l.degree();
            let binom = pj
                .binomial_form
                .iter()
                .map(|t| format!("{}*C(n+{},{})", t.coeff, t.shift, d))
                .collect::<Vec<_>>()
                .join(" + ");
            let text = format!("L(n) = {}\n     = {}\n", format_polynomial(&l), binom);
            Ok(Output::new(to_value(&pj), text))
        }
        Command::Ideal { source, pull, degree } => {
            let p = load_polytope(&source)?;
            let witness = disconnected_cubic_fiber(&p, 2);
            let t = try_pulling_triangulation(&p, &pull).map_err(|e| domain("triangulation", e))?;
            let ii = initial_ideal_from_nonfaces(&t).map_err(|e| domain("ideal", e))?;
            let report = IdealJson {
                quadratic_generated: witness.is_none(),
                cubic_generated: generated_in_degree(&p, 3),
                initial_ideal: ii.iter().map(|m| m.0.clone()).collect(),
                witness_fiber: witness.as_ref().map(|f| FiberJson::new(&p, f)),
            };
            let mut json = to_value(&report);
            let mut text = format!(
                "quadratically generated: {} (conditional on cubic generation of flow polytope ideals)\ninitial ideal: {}\n",
                report.quadratic_generated,
                ii.iter().map(Monomial::to_text).collect::<Vec<_>>().join(", ")
            );
            if let Some(w) = &report.witness_fiber {
                text += &format!("disconnected cubic fiber at {:?}: {}\n", w.sum, sets_text(&w.monomials));
            }
            if let Some(g) = degree {
                let moves = binomial_moves(&p, g as usize);
                json["moves"] = Value::Array(moves.iter().map(|b| json!({"plus": b.plus.0, "minus": b.minus.0})).collect());
                text += &format!("moves of degree <= {g}: {}\n", moves.iter().map(Binomial::to_text).collect::<Vec<_>>().join(", "));
            }
            Ok(Output::new(json, text))
        }
        Command::Equiv { first, second } => {
            let a = parse_points(&read(&first)?)?;
            let b = parse_points(&read(&second)?)?;
            let m = equivalent(&a, &b);
            let json = json!({
                "equivalent": m.is_some(),
                "map": m.as_ref().map(|m| json!({
                    "linear": m.linear.to_i64_rows(),
                    "translation": m.translation.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                })),
            });
            let text = format!("equivalent: {}\n", m.is_some());
            Ok(Output::new(json, text))
        }
        Command::Graphs { dim, three_regular } => {
            if dim == 0 || dim > 4 {
                return Err(domain("graphs", "unsupported dimension"));
            }
            let gs = if three_regular { enumerate_ld_3reg(dim) } else { enumerate_ld(dim, 2 * dim.saturating_sub(1).max(1)) };
            let json = Value::Array(gs.iter().map(|g| Value::String(g.to_text())).collect());
            let text = gs.iter().enumerate().map(|(i, g)| format!("# graph {i}\n{}", g.to_text())).collect();
            Ok(Output::new(json, text))
        }
        Command::Reproduce { claim, table } => {
            let id = claim.or(table);
            let ids: Vec<&str> = match id.as_deref() {
                None | Some("all") => CLAIMS.to_vec(),
                Some(c) if CLAIMS.contains(&c) => vec![CLAIMS.iter().copied().find(|x| *x == c).unwrap()],
                Some(c) => return Err(Failure::Usage(format!("unknown claim {c:?}; known: {}", CLAIMS.join(", ")))),
            };
            let reports: Vec<ClaimReport> = ids.iter().map(|c| reproduce(c)).collect();
            let ok = reports.iter().all(|r| r.pass);
            let mut text = String::new();
            for r in &reports {
                for c in &r.checks {
                    text += &format!("{} {}: {}{}\n", if c.pass { "PASS" } else { "FAIL" }, r.claim, c.name, if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) });
                }
                text += &format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.claim);
            }
            let json = if reports.len() == 1 { to_value(&reports[0]) } else { to_value(&reports) };
            Ok(Output { json, text: Some(text), ok })
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn sorted_sets(v: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    v.iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        })
        .collect()
}

/// Names of the tables equivalent to each polytope (`?` if none).
fn identify(found: &[LatticePolytope], names: &[&str]) -> Vec<String> {
    found
        .iter()
        .map(|p| {
            names
                .iter()
                .find(|n| equivalent(p, &catalog::table_polytope(n).unwrap()).is_some())
                .map(|n| n.to_string())
                .unwrap_or_else(|| "?".into())
        })
        .collect()
}

fn same_set(found: &[String], expected: &[&str]) -> bool {
    let f: BTreeSet<&str> = found.iter().map(String::as_str).collect();
    let e: BTreeSet<&str> = expected.iter().copied().collect();
    found.len() == expected.len() && f == e
}

fn family_checks(dim: usize, labels: &[&str]) -> Vec<Check> {
    let names = if dim == 3 { catalog::CLASSES_DIM3.to_vec() } else { catalog::CLASSES_DIM4.to_vec() };
    catalog::cell_families()
        .into_iter()
        .filter(|(d, l, _)| *d == dim && labels.contains(l))
        .map(|(_, label, expected)| {
            let g = catalog::named_graph(dim, label).unwrap();
            let found = identify(&cell_set_p(&g), &names);
            check(format!("P(Γ_{label})"), same_set(&found, &expected), format!("found {}", found.join(" ")))
        })
        .collect()
}

fn classification_checks(dim: usize) -> Vec<Check> {
    let names = if dim == 3 { catalog::CLASSES_DIM3.to_vec() } else { catalog::CLASSES_DIM4.to_vec() };
    let classes = match classify_compressed(dim) {
        Ok(c) => c,
        Err(e) => return vec![check("classify", false, e.to_string())],
    };
    let polys: Vec<LatticePolytope> = classes.iter().map(|c| c.polytope.clone()).collect();
    let found = identify(&polys, &names);
    let mut out = vec![check(
        format!("{} classes", names.len()),
        same_set(&found, &names),
        format!("found {}: {}", found.len(), found.join(" ")),
    )];
    for (c, name) in classes.iter().zip(&found) {
        let shape = (c.fingerprint.n_points, c.fingerprint.n_facets);
        let expected = match dim {
            4 => catalog::expected_shape_dim4(name),
            _ => catalog::table_polytope(name).map(|t| (t.points().len(), t.facets().len())),
        };
        out.push(check(format!("{name} (points, facets)"), Some(shape) == expected && is_compressed(&c.polytope), format!("{shape:?}")));
    }
    out
}

fn triangulation_checks(claims: Vec<catalog::TriangulationClaim>) -> Vec<Check> {
    claims
        .into_iter()
        .map(|c| {
            let p = catalog::table_polytope(c.polytope).unwrap();
            let t = pulling_triangulation(&p, &c.pull);
            let nf: Vec<Vec<usize>> = minimal_nonfaces(&t).into_iter().map(|f| f.0).collect();
            let cells_ok = sorted_sets(t.maximal_cells()) == sorted_sets(&c.cells);
            let nf_ok = sorted_sets(&nf) == sorted_sets(&c.nonfaces);
            let regular = certify_regular(&t).is_some();
            check(
                format!("({}) {} pull {:?}", c.item, c.polytope, c.pull),
                cells_ok && nf_ok && regular,
                format!("cells {}, non-faces {}", sets_text(t.maximal_cells()), sets_text(&nf)),
            )
        })
        .collect()
}

fn ehrhart_checks() -> Vec<Check> {
    catalog::ehrhart_table()
        .into_iter()
        .map(|r| {
            let p = catalog::table_polytope(r.polytope).unwrap();
            let expected = EhrhartPolynomial::from_scaled(&r.numerators, r.denominator);
            let l = interpolate_ehrhart(&p);
            let t = pulling_triangulation(&p, &catalog::pull_order(r.polytope).unwrap());
            let from_f = ehrhart_from_fvector(&t).ok();
            let mut h = l.h_star();
            while h.last() == Some(&0) {
                h.pop();
            }
            check(
                r.polytope,
                l == expected && from_f.as_ref() == Some(&expected) && h == r.h_star,
                format!("{} h* {:?}", format_polynomial(&l), h),
            )
        })
        .collect()
}

fn quadratic_checks() -> Vec<Check> {
    catalog::all_classes()
        .into_iter()
        .map(|name| {
            let p = catalog::table_polytope(name).unwrap();
            let birkhoff = name == "V.b(4)";
            let quad = generated_in_degree(&p, 2);
            let cubic = generated_in_degree(&p, 3);
            let t = pulling_triangulation(&p, &catalog::pull_order(name).unwrap());
            let degs: Vec<usize> = initial_ideal_from_nonfaces(&t).map(|ii| ii.iter().map(Monomial::degree).collect()).unwrap_or_default();
            let max = degs.iter().copied().max().unwrap_or(0);
            let ok = quad != birkhoff && cubic && if birkhoff { max == 3 } else { max <= 2 };
            check(name, ok, format!("quadratic {quad}, initial ideal degrees ≤ {max}"))
        })
        .collect()
}

fn birkhoff_checks() -> Vec<Check> {
    let p = catalog::table_polytope("V.b(4)").unwrap();
    let expected = vec![Binomial::new(Monomial(vec![1, 3, 4]), Monomial(vec![0, 2, 5]))];
    let moves2 = binomial_moves(&p, 2);
    let moves3 = binomial_moves(&p, 3);
    let t = pulling_triangulation(&p, &[0]);
    let ii = initial_ideal_from_nonfaces(&t).unwrap_or_default();
    vec![
        check("not quadratically generated", !generated_in_degree(&p, 2), ""),
        check("no quadratic moves", moves2.is_empty(), format!("{}", moves2.len())),
        check(
            "cubic moves",
            moves3 == expected,
            moves3.iter().map(Binomial::to_text).collect::<Vec<_>>().join(", "),
        ),
        check("initial ideal at pull v0", ii == vec![Monomial(vec![1, 3, 4])], ii.iter().map(Monomial::to_text).collect::<Vec<_>>().join(", ")),
    ]
}

/// Deterministic weights on `Γ_V*` around `θ_{V.b}`: translates along the
/// sink arrows on either side, and translates that also move an arrow on the
/// `−1` side.
pub fn birkhoff_weight_samples() -> Vec<Weight> {
    let g = catalog::named_graph(4, "V").unwrap();
    let (_, base) = catalog::labeled_weight(4, "V.b").unwrap();
    let q = star(&g);
    let arrows = q.arrows().to_vec();
    let mut out = Vec::new();
    let patterns: [&[(usize, i64)]; 6] = [&[], &[(0, 1)], &[(0, 1), (4, 1)], &[(1, 2)], &[(0, 1), (1, 1), (2, 1)], &[(8, 1), (3, 1)]];
    for swap in [false, true] {
        let theta0: Weight = if swap {
            base.iter().map(|(v, t)| (v.clone(), if v.starts_with('b') { -1 } else if v.starts_with('t') { -2 } else { *t })).collect()
        } else {
            base.clone()
        };
        let two_side = if swap { 't' } else { 'b' };
        let one_side = if swap { 'b' } else { 't' };
        let side_arrows = |c: char| -> Vec<&crate::quivers::Arrow> { arrows.iter().filter(|a| a.tail.starts_with(c)).collect() };
        for pat in patterns {
            for extra in [None, Some(0usize), Some(5)] {
                let mut k = std::collections::BTreeMap::new();
                for &(i, v) in pat {
                    k.insert(side_arrows(two_side)[i].id.clone(), v);
                }
                if let Some(j) = extra {
                    k.insert(side_arrows(one_side)[j].id.clone(), 1);
                }
                let om = crate::quivers::omega(&q, &k).expect("omega");
                out.push(crate::quivers::add_weights(&theta0, &om));
            }
        }
    }
    out
}

/// Whether `θ` on `Γ_V*` is `θ_{V.b} + ω_k` with `k ≥ 0` vanishing on the
/// arrows out of the `−1` side, for one of the two choices of side.
pub fn is_birkhoff_translate(theta: &Weight) -> bool {
    let g = catalog::named_graph(4, "V").unwrap();
    ['b', 't'].iter().any(|&one| {
        let ones: Vec<&String> = g.vertices().iter().filter(|v| v.starts_with(one)).collect();
        let twos: Vec<&String> = g.vertices().iter().filter(|v| !v.starts_with(one)).collect();
        ones.iter().all(|v| theta.get(*v) == Some(&-1))
            && g.edges().iter().all(|e| theta.get(&crate::graphs::sink_id(&e.id)).is_some_and(|t| *t >= 1))
            && twos.iter().all(|w| {
                let excess: i64 = g
                    .edges()
                    .iter()
                    .filter(|e| &e.u == *w || &e.v == *w)
                    .map(|e| theta[&crate::graphs::sink_id(&e.id)] - 1)
                    .sum();
                theta.get(*w) == Some(&(-2 - excess))
            })
    })
}

fn grobner_weight_checks() -> Vec<Check> {
    let g = catalog::named_graph(4, "V").unwrap();
    let q = star(&g);
    let vb = catalog::table_polytope("V.b(4)").unwrap();
    birkhoff_weight_samples()
        .into_iter()
        .map(|w| {
            let member = is_birkhoff_translate(&w);
            let equiv = flow_polytope(&q, &w, &Bounds::default()).map(|p| equivalent(&p, &vb).is_some()).unwrap_or(false);
            check(crate::io::weight_label(&w), member == equiv, format!("translate {member}, equivalent {equiv}"))
        })
        .collect()
}

fn nonflow_checks() -> Vec<Check> {
    let p = catalog::table_polytope("nonflow").unwrap();
    let mut out = vec![check(
        "compressed, dim 4, 7 points, 9 facets",
        is_compressed(&p) && p.dim() == 4 && p.points().len() == 7 && p.facets().len() == 9,
        format!("dim {}, {} points, {} facets", p.dim(), p.points().len(), p.facets().len()),
    )];
    for name in catalog::CLASSES_DIM4 {
        let t = catalog::table_polytope(name).unwrap();
        out.push(check(format!("not equivalent to {name}"), equivalent(&p, &t).is_none(), ""));
    }
    out
}

/// Verdict for one claim id.
pub fn reproduce(claim: &str) -> ClaimReport {
    let checks = match claim {
        "all-3dim" => classification_checks(3),
        "3-cells" => family_checks(3, &["I", "II", "III", "IV"]),
        "4-cells" => family_checks(4, &["I", "II", "III", "IV", "V"]),
        "all-4dim" => {
            let mut c = classification_checks(4);
            c.extend(family_checks(4, &["VI", "VII", "VIII", "IX", "X"]));
            c
        }
        "triangulation-4cells" => triangulation_checks(catalog::triangulation_claims()),
        "triangulation-new-4cells" => triangulation_checks(catalog::new_triangulation_claims()),
        "ehrhart" => ehrhart_checks(),
        "quadratic-generation" => quadratic_checks(),
        "birkhoff-not-quadratic" => birkhoff_checks(),
        "grobner-weights" => grobner_weight_checks(),
        "nonflow-example" => nonflow_checks(),
        other => vec![check("known claim", false, format!("unknown claim {other}"))],
    };
    ClaimReport { claim: claim.into(), pass: !checks.is_empty() && checks.iter().all(|c| c.pass), checks }
}
