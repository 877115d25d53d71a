//! `coxlink` — chord diagrams to Coxeter-link data from the shell.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
//! 3 non-realizable, 4 inconclusive (budget or iteration cap),
//! 5 internal theorem violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coxlink::chord::{coxeter_order, ChordDiagram, SimpleGraph};
use coxlink::doc::{DiagramDocument, GraphDocument};
use coxlink::realize::{
    brute_force_realize, find_isomorphism, obstruction_check, realize_complete,
    realize_complete_bipartite, realize_cycle, realize_tree, RealizeOutcome,
};
use coxlink::report::{analyze, coxeter_orbits, lehmer_scan, AnalysisReport};
use coxlink::spectra::DEFAULT_TOL;
use coxlink::svg::render_system;

#[derive(Parser)]
#[command(name = "coxlink", version, about = "Chord diagrams and their Coxeter links")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Tree,
    Cycle,
    Complete,
    Bipartite,
    Star,
    Brute,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline on a diagram document: forms, monodromy, Coxeter
    /// element, char poly, classification, Mahler measure, Lehmer gate.
    Analyze {
        path: PathBuf,
        /// Numerical tolerance for the root finder.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Fail (exit 2) unless the system is Coxeter-type.
        #[arg(long)]
        require_coxeter: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write an SVG rendering to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Realize a graph document as a chord diagram.
    Realize {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Matching-enumeration cap for the brute-force search.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write an SVG rendering to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Enumerate Coxeter-type orderings of a diagram up to sink/source
    /// orbits.
    Orderings {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan all diagrams up to a chord count, asserting the Lehmer gate.
    LehmerScan {
        max_chords: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render a diagram document as SVG.
    Render {
        path: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<coxlink::Error> for Failure {
    fn from(e: coxlink::Error) -> Self {
        use coxlink::Error;
        let code = match &e {
            Error::Parse { .. } | Error::Io(_) => 1,
            Error::BudgetExceeded(_) | Error::RootFinder { .. } => 4,
            Error::TheoremViolation(_) => 5,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Analyze { path, tol, require_coxeter, format, svg } => {
            let doc = DiagramDocument::parse(&read(&path)?)?;
            let system = doc.to_system()?;
            let mut report = analyze(&system, tol)?;
            report.name = doc.name.clone();
            if require_coxeter && !report.coxeter_type {
                return Err(Failure::new(2, "input system is not Coxeter-type"));
            }
            if let Some(svg_path) = svg {
                write_svg(&svg_path, &render_system(&system, doc.name.as_deref()))?;
            }
            match format {
                Format::Machine => println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| Failure::new(5, e.to_string()))?
                ),
                Format::Text => print_report(&report),
            }
            Ok(())
        }
        Cmd::Realize { path, method, budget, format, svg } => {
            let gdoc = GraphDocument::parse(&read(&path)?)?;
            let g = gdoc.to_graph()?;
            let diagram = realize_graph(&g, method, budget)?;
            let iso = find_isomorphism(&diagram.incidence_graph(), &g).ok_or_else(|| {
                Failure::new(5, "realization does not match the input graph")
            })?;
            let system = coxeter_order(&diagram);
            let out = DiagramDocument::from_system(&system, gdoc.name.clone());
            if let Some(svg_path) = svg {
                write_svg(&svg_path, &render_system(&system, gdoc.name.as_deref()))?;
            }
            match format {
                Format::Machine => {
                    let v = serde_json::json!({
                        "document": out.emit(),
                        "chords": out.chords,
                        "vertex_to_chord": iso,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                Format::Text => print!("{}", out.emit()),
            }
            Ok(())
        }
        Cmd::Orderings { path, format } => {
            let doc = DiagramDocument::parse(&read(&path)?)?;
            let diagram = doc.to_system()?.diagram().clone();
            let orbits = coxeter_orbits(&diagram)?;
            match format {
                Format::Machine => {
                    let v: Vec<_> = orbits
                        .iter()
                        .map(|o| {
                            serde_json::json!({
                                "members": o.members,
                                "chords": o.system.diagram().chords(),
                                "orientations": o.system.orientations(),
                                "char_poly": o.char_poly.coeffs_i64(),
                                "char_poly_canonical": o.char_poly.canonical().coeffs_i64(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                Format::Text => {
                    println!(
                        "{} Coxeter-type ordering orbit(s) on {} chords",
                        orbits.len(),
                        diagram.n()
                    );
                    for (i, o) in orbits.iter().enumerate() {
                        println!("orbit {} ({} directed diagram(s)):", i + 1, o.members);
                        let arrows: Vec<String> = o
                            .system
                            .orientations()
                            .iter()
                            .map(|(t, h)| format!("{t}->{h}"))
                            .collect();
                        println!("  representative order: {}", arrows.join(", "));
                        println!("  char poly: {}", o.char_poly);
                        println!("  canonical: {}", o.char_poly.canonical());
                    }
                }
            }
            Ok(())
        }
        Cmd::LehmerScan { max_chords, tol, format } => {
            let s = lehmer_scan(max_chords, tol)?;
            match format {
                Format::Machine => {
                    let entries: Vec<_> = s
                        .entries
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "char_poly": e.char_poly.coeffs_i64(),
                                "mahler_measure": e.mahler_measure,
                                "gate": format!("{:?}", e.gate).to_lowercase(),
                                "orbit_count": e.orbit_count,
                                "witness_chords": e.witness.diagram().chords(),
                                "witness_orientations": e.witness.orientations(),
                            })
                        })
                        .collect();
                    let v = serde_json::json!({
                        "max_chords": s.max_chords,
                        "diagrams_scanned": s.diagrams_scanned,
                        "orbits_scanned": s.orbits_scanned,
                        "tol": tol,
                        "entries": entries,
                        "minimal_nontrivial": s.minimal_nontrivial,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                Format::Text => {
                    println!(
                        "scanned {} diagram(s), {} ordering orbit(s), up to {} chords (tol {:e})",
                        s.diagrams_scanned, s.orbits_scanned, s.max_chords, tol
                    );
                    println!("{} distinct characteristic polynomial(s):", s.entries.len());
                    println!("{:>10}  {:>7}  {:>6}  poly", "mu", "gate", "orbits");
                    for e in &s.entries {
                        println!(
                            "{:>10}  {:>7}  {:>6}  {}",
                            sig6(e.mahler_measure),
                            format!("{:?}", e.gate).to_lowercase(),
                            e.orbit_count,
                            e.char_poly
                        );
                    }
                    match s.minimal_nontrivial {
                        None => println!("no measure above 1 found"),
                        Some(i) => {
                            let e = &s.entries[i];
                            println!(
                                "minimal nontrivial measure: {} from {} (witness chords {:?})",
                                sig6(e.mahler_measure),
                                e.char_poly,
                                e.witness.diagram().chords()
                            );
                        }
                    }
                }
            }
            Ok(())
        }
        Cmd::Render { path, svg } => {
            let doc = DiagramDocument::parse(&read(&path)?)?;
            let system = doc.to_system()?;
            let rendered = render_system(&system, doc.name.as_deref());
            match svg {
                Some(p) => write_svg(&p, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(())
        }
    }
}

fn write_svg(path: &Path, content: &str) -> Result<(), Failure> {
    fs::write(path, content).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}

/// Dispatches a realization method, validating explicit method choices
/// against the shape of the graph.
fn realize_graph(g: &SimpleGraph, method: Method, budget: u64) -> Result<ChordDiagram, Failure> {
    let n = g.vertex_count();
    match method {
        Method::Auto => {
            if g.is_tree() {
                return Ok(realize_tree(g)?.0);
            }
            if let Some(d) = recognized_family(g)? {
                return Ok(d);
            }
            if let Some(w) = obstruction_check(g) {
                return Err(Failure::new(
                    3,
                    format!(
                        "non-realizable: independent triple {:?} on induced cycle {:?} with apex {}",
                        w.triple, w.cycle, w.apex
                    ),
                ));
            }
            brute(g, budget)
        }
        Method::Tree => Ok(realize_tree(g)?.0),
        Method::Cycle => {
            if !is_cycle(g) {
                return Err(Failure::new(2, "graph is not a cycle"));
            }
            Ok(realize_cycle(n)?)
        }
        Method::Complete => {
            if g.edge_count() != n * (n - 1) / 2 {
                return Err(Failure::new(2, "graph is not complete"));
            }
            Ok(realize_complete(n)?)
        }
        Method::Bipartite => match bipartition(g) {
            Some((p, q)) => Ok(realize_complete_bipartite(p, q)?),
            None => Err(Failure::new(2, "graph is not complete bipartite")),
        },
        Method::Star => {
            let branch_vertices =
                (0..n).filter(|&v| g.degree(v) >= 3).count();
            if !g.is_tree() || branch_vertices > 1 {
                return Err(Failure::new(2, "graph is not a star of paths"));
            }
            Ok(realize_tree(g)?.0)
        }
        Method::Brute => brute(g, budget),
    }
}

fn brute(g: &SimpleGraph, budget: u64) -> Result<ChordDiagram, Failure> {
    match brute_force_realize(g, Some(budget)) {
        RealizeOutcome::Found(d) => Ok(d),
        RealizeOutcome::NotRealizable => {
            Err(Failure::new(3, "non-realizable (exhaustive search)"))
        }
        RealizeOutcome::Inconclusive => Err(Failure::new(
            4,
            format!("inconclusive: matching budget {budget} exhausted"),
        )),
    }
}

fn is_cycle(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    n >= 3 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)
}

/// `Some((p, q))` iff the graph is complete bipartite with nonempty
/// classes of those sizes.
fn bipartition(g: &SimpleGraph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let mut color = vec![None; n];
    color[0] = Some(false);
    let mut queue = vec![0usize];
    while let Some(v) = queue.pop() {
        for w in g.neighbors(v) {
            match color[w] {
                None => {
                    color[w] = Some(!color[v].unwrap());
                    queue.push(w);
                }
                Some(c) if c == color[v].unwrap() => return None,
                Some(_) => {}
            }
        }
    }
    let p = color.iter().filter(|c| **c == Some(false)).count();
    let q = n - p;
    (p > 0 && q > 0 && g.edge_count() == p * q).then_some((p, q))
}

fn recognized_family(g: &SimpleGraph) -> Result<Option<ChordDiagram>, Failure> {
    let n = g.vertex_count();
    if is_cycle(g) {
        return Ok(Some(realize_cycle(n)?));
    }
    if n >= 1 && g.edge_count() == n * (n - 1) / 2 {
        return Ok(Some(realize_complete(n)?));
    }
    if let Some((p, q)) = bipartition(g) {
        // trees are handled earlier, so this is a genuine K_{p,q}
        return Ok(Some(realize_complete_bipartite(p, q)?));
    }
    Ok(None)
}

fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".into();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (5 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

fn print_report(r: &AnalysisReport) {
    if let Some(name) = &r.name {
        println!("name: {name}");
    }
    println!("chords: {}", r.n);
    let arrows: Vec<String> = r
        .orientations
        .iter()
        .map(|(t, h)| format!("{t}->{h}"))
        .collect();
    println!("system: {}", arrows.join(", "));
    println!("coxeter type: {}", if r.coxeter_type { "yes" } else { "no" });
    for (label, m) in [
        ("adjacency A", &r.adjacency),
        ("bilinear form B", &r.bilinear_form),
        ("seifert M", &r.seifert),
        ("monodromy h*", &r.monodromy),
        ("coxeter element c", &r.coxeter_element),
    ] {
        println!("{label}:");
        print_matrix(m);
    }
    println!("char poly: {}", r.char_poly_display);
    println!(
        "canonical: {}",
        coxlink::IntPolynomial::from_i64(&r.char_poly_canonical)
    );
    println!("classification: {:?}", r.classification);
    println!("mahler measure: {} (tol {:e})", sig6(r.mahler_measure), r.tol);
    println!("spectral radius: {}", sig6(r.spectral_radius));
    println!("lehmer gate: {:?}", r.lehmer_gate);
    match r.monodromy_equals_minus_coxeter {
        Some(true) => println!("h* = -c: verified"),
        Some(false) => println!("h* = -c: FAILED"),
        None => println!("h* = -c: skipped (not Coxeter-type)"),
    }
}

fn print_matrix(rows: &[Vec<i64>]) {
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}
