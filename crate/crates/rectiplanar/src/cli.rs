//! Command-line front end: input parsing, mode dispatch and verdict output.
//!
//! Two input formats are accepted. Plain text has one edge `u v` per line
//! (blank lines and `#` comments are skipped). Structured input is a JSON
//! object:
//!
//! ```json
//! {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]],
//!  "rotation": [[0,3],[1,0],[2,1],[3,2]],
//!  "outer_face": [[0,1],[1,2],[2,3],[3,0]],
//!  "chi": [1], "ell": [[0, 1, 90]]}
//! ```
//!
//! `rotation` lists edge ids clockwise around each vertex. `outer_face` is a
//! list of directed edges; in each component the face containing its first
//! listed edge is the outer one. Faces are numbered in order of their
//! smallest dart, dart `2e` running from the first to the second endpoint of
//! edge `e`. An `ell` entry `[v, f, degrees]` bounds the angle of `v` in face
//! `f` from below.

use crate::angle::Angle;
use crate::drawing::{export_svg, realize, validate_geometry, Drawing};
use crate::embedding::{Dart, EmbeddingError, PlaneEmbedding};
use crate::fixed::{test_2con_fixed, test_fixed, test_outerplane, FixedError, LowerBoundMap};
use crate::graph::{block_cut_tree, EdgeId, Graph, GraphError, Vertex};
use crate::oracle::{ladder, oracle_fixed, oracle_variable, random_outerplanar, Constraints, OracleError, Rooted};
use crate::rectirep::RectilinearRepresentation;
use crate::variable::{all_edge_labels, test_2con_rooted, test_variable, vertex_labels, ChiSet, EdgeLabels, VariableError};
use clap::{Parser, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

/// Which decision procedure a job runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// The embedding given in the input.
    Fixed,
    /// The outerplane embedding.
    Outerplane,
    /// Any embedding.
    Variable,
    /// Exhaustive search; uses the input embedding when there is one.
    Oracle,
    /// Timing table on ladders and random graphs.
    Bench,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Fixed => "fixed",
            Mode::Outerplane => "outerplane",
            Mode::Variable => "variable",
            Mode::Oracle => "oracle",
            Mode::Bench => "bench",
        }
    }
}

/// One invocation of the tool.
#[derive(Clone, Debug, Parser)]
#[command(name = "rectiplanar", version, about = "Rectilinear planarity testing for outerplanar graphs")]
pub struct JobConfig {
    #[arg(long, value_enum, default_value = "variable")]
    pub mode: Mode,
    /// Input graph; standard input when absent.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out_svg: Option<PathBuf>,
    /// Verdict record; standard output when absent.
    #[arg(long)]
    pub out_json: Option<PathBuf>,
    /// Comma-separated degree-2 vertices limited to 90/270 degree angles.
    #[arg(long, value_delimiter = ',')]
    pub chi: Option<Vec<Vertex>>,
    /// Comma-separated lower bounds `vertex:face:degrees`.
    #[arg(long, value_delimiter = ',')]
    pub ell: Option<Vec<String>>,
    /// Outer edge whose end angles are prescribed by --mu and --nu.
    #[arg(long)]
    pub root_edge: Option<EdgeId>,
    /// Inner angle sum in degrees at the first endpoint of the root edge.
    #[arg(long)]
    pub mu: Option<u32>,
    /// Inner angle sum in degrees at the second endpoint of the root edge.
    #[arg(long)]
    pub nu: Option<u32>,
    /// Seed for the random graphs of bench mode.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Vertex cap: oracle instance limit, largest bench size.
    #[arg(long)]
    pub cap: Option<usize>,
    /// SVG pixels per grid unit.
    #[arg(long, default_value_t = 40)]
    pub scale: u32,
}

impl JobConfig {
    /// A configuration with defaults for everything but the mode.
    pub fn new(mode: Mode) -> Self {
        JobConfig::parse_from(["rectiplanar", "--mode", mode.name()])
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {locus}: {message}")]
    ParseError { locus: String, message: String },
    #[error("rotation inconsistent: {0}")]
    RotationInconsistent(String),
    #[error("lower bound {degrees} at vertex {vertex} is not one of 90, 180, 270, 360")]
    EllOutOfRange { vertex: Vertex, degrees: u32 },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Fixed(#[from] FixedError),
    #[error(transparent)]
    Variable(#[from] VariableError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<EmbeddingError> for CliError {
    fn from(e: EmbeddingError) -> Self {
        CliError::RotationInconsistent(e.to_string())
    }
}

fn parse_error(locus: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::ParseError { locus: locus.into(), message: message.into() }
}

/// A parsed input graph with its optional embedding and side conditions.
#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub graph: Graph,
    pub embedding: Option<PlaneEmbedding>,
    pub chi: Option<ChiSet>,
    pub ell: Option<LowerBoundMap>,
    /// Per component, the dart whose face is the outer face.
    outer_darts: Vec<Dart>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    rotation: Option<Vec<Vec<EdgeId>>>,
    outer_face: Option<Vec<(Vertex, Vertex)>>,
    chi: Option<Vec<Vertex>>,
    ell: Option<Vec<(Vertex, usize, u32)>>,
}

/// Parses edge-list text or a structured JSON object.
pub fn parse_input(bytes: &[u8]) -> Result<ParsedInput, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_error(format!("byte {}", e.valid_up_to()), "not UTF-8"))?;
    if text.trim_start().starts_with('{') {
        let raw: RawInput = serde_json::from_str(text)
            .map_err(|e| parse_error(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        from_raw(raw)
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<ParsedInput, CliError> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ids: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = ids.as_slice() else {
            return Err(parse_error(format!("line {}", i + 1), "expected two vertex ids"));
        };
        let id = |s: &str| s.parse::<Vertex>().map_err(|e| parse_error(format!("line {}", i + 1), e.to_string()));
        edges.push((id(u)?, id(v)?));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let graph = Graph::new(n, &edges)?;
    Ok(ParsedInput { graph, embedding: None, chi: None, ell: None, outer_darts: Vec::new() })
}

fn from_raw(raw: RawInput) -> Result<ParsedInput, CliError> {
    let graph = Graph::new(raw.n, &raw.edges)?;
    let mut embedding = None;
    let mut outer_darts = Vec::new();
    match (raw.rotation, raw.outer_face) {
        (None, None) => {}
        (Some(rotation), walk) => {
            if rotation.len() != graph.vertex_count() {
                return Err(CliError::RotationInconsistent(format!(
                    "{} rotations for {} vertices",
                    rotation.len(),
                    graph.vertex_count()
                )));
            }
            let emb = PlaneEmbedding::new(&graph, rotation, 0)?;
            let walk = walk.unwrap_or_default();
            let (emb, darts) = choose_outer(emb, &walk)?;
            embedding = Some(emb);
            outer_darts = darts;
        }
        (None, Some(_)) => return Err(parse_error("outer_face", "needs a rotation")),
    }
    let chi = raw.chi.map(ChiSet::new);
    let ell = match raw.ell {
        None => None,
        Some(entries) => {
            let emb = embedding.as_ref().ok_or_else(|| parse_error("ell", "needs a rotation"))?;
            Some(lower_bounds(emb, &entries)?)
        }
    };
    Ok(ParsedInput { graph, embedding, chi, ell, outer_darts })
}

// per component, the first listed dart picks the outer face; all its darts must share it
fn choose_outer(emb: PlaneEmbedding, walk: &[(Vertex, Vertex)]) -> Result<(PlaneEmbedding, Vec<Dart>), CliError> {
    let g = emb.graph().clone();
    let comps = g.components();
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut chosen: Vec<Option<Dart>> = vec![None; comps.len()];
    for (i, &(u, v)) in walk.iter().enumerate() {
        let e = g
            .edge_between(u, v)
            .ok_or_else(|| parse_error(format!("outer_face[{i}]"), format!("no edge {u}-{v}")))?;
        let d = Dart::leaving(&g, e, u);
        match chosen[comp_of[u]] {
            None => chosen[comp_of[u]] = Some(d),
            Some(first) if emb.face_of(first) != emb.face_of(d) => {
                return Err(CliError::RotationInconsistent(format!("outer_face edge {u}-{v} lies on another face")));
            }
            Some(_) => {}
        }
    }
    let mut darts = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        match chosen[i] {
            Some(d) => darts.push(d),
            None if g.incident(c[0]).is_empty() => darts.push(Dart(usize::MAX)),
            None => {
                return Err(parse_error("outer_face", format!("no outer edge given for the component of vertex {}", c[0])))
            }
        }
    }
    let emb = match darts.iter().find(|d| d.0 != usize::MAX) {
        Some(&d) => emb.with_outer_face(emb.face_of(d))?,
        None => emb,
    };
    Ok((emb, darts))
}

fn lower_bounds(emb: &PlaneEmbedding, entries: &[(Vertex, usize, u32)]) -> Result<LowerBoundMap, CliError> {
    let mut ell = LowerBoundMap::uniform(emb, Angle::RIGHT);
    for (i, &(v, f, deg)) in entries.iter().enumerate() {
        let a = Angle::from_degrees(deg)
            .filter(|a| a.quarters() >= 1)
            .ok_or(CliError::EllOutOfRange { vertex: v, degrees: deg })?;
        if v >= emb.graph().vertex_count() {
            return Err(parse_error(format!("ell[{i}]"), format!("no vertex {v}")));
        }
        let d = emb
            .in_darts(v)
            .find(|&d| emb.face_of(d) == f)
            .ok_or_else(|| parse_error(format!("ell[{i}]"), format!("vertex {v} is not on face {f}")))?;
        ell.set(d, a);
    }
    Ok(ell)
}

fn parse_ell_flag(emb: &PlaneEmbedding, items: &[String]) -> Result<LowerBoundMap, CliError> {
    let entries = items
        .iter()
        .map(|s| {
            let parts: Vec<&str> = s.split(':').collect();
            let nums: Result<Vec<u64>, _> = parts.iter().map(|p| p.trim().parse::<u64>()).collect();
            match nums.as_deref() {
                Ok([v, f, d]) => Ok((*v as usize, *f as usize, *d as u32)),
                _ => Err(parse_error(format!("--ell {s}"), "expected vertex:face:degrees")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    lower_bounds(emb, &entries)
}

impl ParsedInput {
    /// The structured form of this input; parsing it gives the same input.
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "n": self.graph.vertex_count(),
            "edges": self.graph.edges(),
        });
        if let Some(emb) = &self.embedding {
            obj["rotation"] = json!(emb.rotations());
            let walk: Vec<(Vertex, Vertex)> = self
                .outer_darts
                .iter()
                .filter(|d| d.0 != usize::MAX)
                .flat_map(|&d| emb.face(emb.face_of(d)).iter().map(|&x| (emb.tail(x), emb.head(x))))
                .collect();
            obj["outer_face"] = json!(walk);
            if let Some(ell) = &self.ell {
                let entries: Vec<(Vertex, usize, u32)> = (0..emb.dart_count())
                    .map(Dart)
                    .filter(|&d| ell.get(d) != Angle::RIGHT)
                    .map(|d| (emb.head(d), emb.face_of(d), ell.get(d).degrees()))
                    .collect();
                obj["ell"] = json!(entries);
            }
        }
        if let Some(chi) = &self.chi {
            obj["chi"] = json!(chi.as_slice());
        }
        obj
    }
}

/// One connected component with local ids.
struct Component {
    graph: Graph,
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
    embedding: Option<PlaneEmbedding>,
}

fn components(input: &ParsedInput) -> Result<Vec<Component>, CliError> {
    let g = &input.graph;
    let mut out = Vec::new();
    for (i, vs) in g.components().into_iter().enumerate() {
        let (graph, vertices, edges) = g.induced_subgraph(&vs);
        let embedding = match &input.embedding {
            None => None,
            Some(emb) if edges.is_empty() => Some(PlaneEmbedding::new(&graph, vec![Vec::new(); graph.vertex_count()], 0)?),
            Some(emb) => {
                let r = emb.restrict(&edges)?;
                let d = input.outer_darts[i];
                let local = Dart(2 * r.local_edge[d.edge()] + (d.0 & 1));
                Some(r.embedding.with_outer_face(r.embedding.face_of(local))?)
            }
        };
        out.push(Component { graph, vertices, edges, embedding });
    }
    Ok(out)
}

fn degrees(a: Angle) -> u32 {
    a.degrees()
}

fn rep_json(rep: &RectilinearRepresentation, vertices: &[Vertex], edges: &[EdgeId]) -> Value {
    let e = &rep.embedding;
    let rotation: Vec<Value> = (0..e.graph().vertex_count())
        .map(|v| json!([vertices[v], e.rotation(v).iter().map(|&x| edges[x]).collect::<Vec<_>>()]))
        .collect();
    let outer: Vec<(Vertex, Vertex)> = e
        .face(e.outer_face())
        .iter()
        .map(|&d| (vertices[e.tail(d)], vertices[e.head(d)]))
        .collect();
    let angles: Vec<(Vertex, Vertex, u32)> = (0..e.dart_count())
        .map(Dart)
        .map(|d| (vertices[e.tail(d)], vertices[e.head(d)], degrees(rep.angle(d))))
        .collect();
    json!({ "rotation": rotation, "outer_face": outer, "angles": angles })
}

fn labels_json(g: &Graph, labels: &EdgeLabels) -> Value {
    let edges: Vec<Value> = (0..g.edge_count())
        .filter_map(|e| {
            labels.get(e).map(|set| {
                let pairs: Vec<(u32, u32)> = set.iter().map(|(a, b)| (degrees(a), degrees(b))).collect();
                json!({ "edge": e, "endpoints": g.endpoints(e), "pairs": pairs })
            })
        })
        .collect();
    let vertices: Vec<Value> = vertex_labels(g, labels)
        .into_iter()
        .enumerate()
        .filter_map(|(v, s)| s.map(|s| json!({ "vertex": v, "gamma": s.iter().map(degrees).collect::<Vec<_>>() })))
        .collect();
    json!({ "edges": edges, "vertices": vertices, "sets_computed": labels.stats.sets_computed })
}

/// What a job found, before it is written out.
pub struct Outcome {
    pub feasible: bool,
    pub record: Value,
    pub drawing: Option<Drawing>,
}

fn angle_arg(name: &str, deg: Option<u32>) -> Result<Angle, CliError> {
    let deg = deg.ok_or_else(|| CliError::Usage(format!("--root-edge needs --{name}")))?;
    Angle::from_degrees(deg)
        .filter(|a| (1..=3).contains(&a.quarters()))
        .ok_or_else(|| CliError::Usage(format!("--{name} must be 90, 180 or 270")))
}

/// Runs every mode except bench on a parsed input.
pub fn evaluate(cfg: &JobConfig, mut input: ParsedInput) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let g = input.graph.clone();

    if let Some(chi) = &cfg.chi {
        input.chi = Some(ChiSet::new(chi.clone()));
    }
    if let Some(items) = &cfg.ell {
        let emb = input.embedding.as_ref().ok_or_else(|| CliError::Usage("--ell needs an input rotation".into()))?;
        input.ell = Some(parse_ell_flag(emb, items)?);
    }
    let rooted = match cfg.root_edge {
        None if cfg.mu.is_some() || cfg.nu.is_some() => {
            return Err(CliError::Usage("--mu and --nu need --root-edge".into()));
        }
        None => None,
        Some(edge) if edge >= g.edge_count() => return Err(CliError::Usage(format!("no edge {edge}"))),
        Some(edge) => Some(Rooted { edge, mu: angle_arg("mu", cfg.mu)?, nu: angle_arg("nu", cfg.nu)? }),
    };
    let constrained = input.chi.is_some() || rooted.is_some();
    match cfg.mode {
        Mode::Fixed | Mode::Outerplane if constrained => {
            return Err(CliError::Usage("--chi and --root-edge apply to variable and oracle modes".into()));
        }
        Mode::Outerplane | Mode::Variable if input.ell.is_some() => {
            return Err(CliError::Usage("lower bounds apply to fixed and oracle modes".into()));
        }
        Mode::Fixed if input.embedding.is_none() => {
            return Err(CliError::Usage("fixed mode needs a rotation in the input".into()));
        }
        _ => {}
    }
    if (constrained || input.ell.is_some()) && !g.is_connected() {
        return Err(CliError::Usage("side conditions need a connected graph".into()));
    }

    let mut record = json!({ "format": 1, "mode": cfg.mode.name(), "n": g.vertex_count(), "m": g.edge_count() });
    if !g.check_degree_bound() {
        let v = (0..g.vertex_count()).find(|&v| g.degree(v) > 4).expect("some vertex exceeds degree 4");
        eprintln!("vertex {v} has degree {}; rectilinear drawings need degree at most 4", g.degree(v));
        record["feasible"] = json!(false);
        record["reason"] = json!(format!("vertex {v} has degree {}", g.degree(v)));
        return Ok(Outcome { feasible: false, record, drawing: None });
    }

    let comps = components(&input)?;
    let mut comp_records = Vec::new();
    let mut parts = Vec::new();
    let mut feasible = true;
    for c in &comps {
        let rep = decide(cfg, &input, c, rooted)?;
        feasible &= rep.is_some();
        comp_records.push(json!({
            "vertices": c.vertices,
            "feasible": rep.is_some(),
            "representation": rep.as_ref().map(|r| rep_json(r, &c.vertices, &c.edges)),
        }));
        parts.push(rep);
    }
    record["feasible"] = json!(feasible);
    record["components"] = json!(comp_records);
    if cfg.mode == Mode::Variable && g.vertex_count() >= 3 {
        let chi = input.chi.clone().unwrap_or_default();
        if let Ok(labels) = all_edge_labels(&g, &chi) {
            record["labels"] = labels_json(&g, &labels);
        }
    }

    let drawing = if feasible { Some(draw_bands(&g, &comps, &parts)?) } else { None };
    record["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    Ok(Outcome { feasible, record, drawing })
}

fn decide(
    cfg: &JobConfig,
    input: &ParsedInput,
    c: &Component,
    rooted: Option<Rooted>,
) -> Result<Option<RectilinearRepresentation>, CliError> {
    let g = &c.graph;
    let chi = input.chi.clone().unwrap_or_default();
    let cap = cfg.cap.unwrap_or(crate::oracle::DEFAULT_CAP);
    Ok(match cfg.mode {
        Mode::Fixed => {
            let emb = c.embedding.as_ref().expect("checked above");
            match &input.ell {
                None => test_fixed(emb)?,
                Some(ell) => {
                    let single = g.edge_count() > 1 && block_cut_tree(g)?.blocks.len() == 1;
                    if !single {
                        return Err(CliError::Usage("lower bounds in fixed mode need a 2-connected graph".into()));
                    }
                    test_2con_fixed(emb, ell)?
                }
            }
        }
        Mode::Outerplane => test_outerplane(g)?,
        Mode::Variable => match rooted {
            Some(r) => test_2con_rooted(g, r.edge, &chi, r.mu, r.nu)?,
            None if input.chi.is_some() => {
                let labels = all_edge_labels(g, &chi)?;
                let first = labels.outer_edges().find_map(|(e, s)| s.iter().next().map(|p| (e, p)));
                match first {
                    Some((e, (mu, nu))) => test_2con_rooted(g, e, &chi, mu, nu)?,
                    None => None,
                }
            }
            None => test_variable(g)?,
        },
        Mode::Oracle => {
            let cons = Constraints {
                ell: input.ell.as_ref().map(|l| l.as_slice().to_vec()),
                chi: chi.as_slice().to_vec(),
                rooted,
            };
            match &c.embedding {
                Some(emb) => oracle_fixed(emb, &cons, cap)?.witness,
                None => oracle_variable(g, &cons.chi, rooted, cap)?.witness,
            }
        }
        Mode::Bench => unreachable!("bench mode has no input"),
    })
}

// components stacked bottom to top, two units apart
fn draw_bands(
    g: &Graph,
    comps: &[Component],
    reps: &[Option<RectilinearRepresentation>],
) -> Result<Drawing, CliError> {
    let mut coords = vec![(0, 0); g.vertex_count()];
    let mut base = 0;
    for (c, rep) in comps.iter().zip(reps) {
        let rep = rep.as_ref().expect("all components feasible");
        let d = realize(rep).map_err(|e| CliError::Usage(format!("drawing failed: {e}")))?;
        debug_assert!(validate_geometry(&d, rep));
        let top = d.bounding_box().map_or(0, |(_, hi)| hi.1);
        for (local, &v) in c.vertices.iter().enumerate() {
            let (x, y) = d.coords[local];
            coords[v] = (x, y + base);
        }
        base += top + 2;
    }
    Ok(Drawing { coords, edges: g.edges().to_vec() })
}

/// Times the variable test on ladders and on seeded random graphs of sizes
/// 10^3, 10^4, ... up to `cap`; returns the printed table.
pub fn bench(cap: usize, seed: u64) -> String {
    let mut out = String::from("family      n          m          ms        sets      drawable\n");
    let mut points = Vec::new();
    let mut n = 1000;
    while n <= cap {
        let g = ladder(n / 2 - 1);
        let t = Instant::now();
        let verdict = answer(test_variable(&g));
        let ms = t.elapsed().as_secs_f64() * 1e3;
        let sets = all_edge_labels(&g, &ChiSet::default()).map_or(0, |l| l.stats.sets_computed);
        out += &format!("ladder      {:<10} {:<10} {:<9.1} {sets:<9} {verdict}\n", g.vertex_count(), g.edge_count(), ms);
        points.push((g.vertex_count() as f64, ms));

        let r = random_outerplanar(n, 4, seed);
        let t = Instant::now();
        let verdict = answer(test_variable(&r));
        let ms = t.elapsed().as_secs_f64() * 1e3;
        out += &format!("random      {:<10} {:<10} {:<9.1} {:<9} {verdict}\n", r.vertex_count(), r.edge_count(), ms, "-");
        n *= 10;
    }
    if points.len() >= 2 {
        out += &format!("ladder log-log slope: {:.3}\n", loglog_slope(&points));
    }
    out
}

fn answer(r: Result<Option<RectilinearRepresentation>, VariableError>) -> String {
    match r {
        Ok(Some(_)) => "yes".into(),
        Ok(None) => "no".into(),
        Err(e) => format!("error: {e}"),
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.max(1e-9).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Runs a job and returns the process exit code: 0 feasible, 1 infeasible,
/// 2 input error.
pub fn run(cfg: &JobConfig) -> i32 {
    match run_inner(cfg) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn run_inner(cfg: &JobConfig) -> Result<bool, CliError> {
    if cfg.mode == Mode::Bench {
        print!("{}", bench(cfg.cap.unwrap_or(1_000_000), cfg.seed));
        return Ok(true);
    }
    let bytes = match &cfg.input {
        Some(p) => std::fs::read(p)?,
        None => {
            let mut buf = Vec::new();
            std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)?;
            buf
        }
    };
    let outcome = evaluate(cfg, parse_input(&bytes)?)?;
    let text = serde_json::to_string_pretty(&outcome.record).expect("json values serialize");
    match &cfg.out_json {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => println!("{text}"),
    }
    if let (Some(p), Some(d)) = (&cfg.out_svg, &outcome.drawing) {
        std::fs::write(p, export_svg(d, cfg.scale))?;
    }
    Ok(outcome.feasible)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "0 1\n1 2\n2 3\n3 0\n";
    const C4_JSON: &str = r#"{"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]],
        "rotation": [[3,0],[0,1],[1,2],[2,3]], "outer_face": [[0,1]]}"#;

    fn eval(mode: Mode, text: &str) -> Outcome {
        evaluate(&JobConfig::new(mode), parse_input(text.as_bytes()).unwrap()).unwrap()
    }

    #[test]
    fn edge_list_and_structured_c4() {
        let p = parse_input(C4.as_bytes()).unwrap();
        assert_eq!(p.graph.edges(), &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(p.embedding.is_none());
        let s = parse_input(C4_JSON.as_bytes()).unwrap();
        assert_eq!(s.graph, p.graph);
        let emb = s.embedding.unwrap();
        assert_eq!(emb.rotation(0), &[3, 0]);
        assert!(emb.face(emb.outer_face()).contains(&Dart(0)));
    }

    #[test]
    fn input_errors() {
        let bad_ell = r#"{"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]],
            "rotation": [[3,0],[0,1],[1,2],[2,3]], "outer_face": [[0,1]], "ell": [[0, 0, 45]]}"#;
        assert!(matches!(parse_input(bad_ell.as_bytes()), Err(CliError::EllOutOfRange { degrees: 45, .. })));
        let bad_rot = r#"{"n": 3, "edges": [[0,1],[1,2]], "rotation": [[0],[0],[1]]}"#;
        assert!(matches!(parse_input(bad_rot.as_bytes()), Err(CliError::RotationInconsistent(_))));
        assert!(matches!(parse_input(b"0 1\n1\n"), Err(CliError::ParseError { .. })));
        assert!(matches!(parse_input(b"{\"n\": 2, \"edges\": [[0,1]],}"), Err(CliError::ParseError { .. })));
    }

    #[test]
    fn structured_input_round_trips() {
        let text = r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,0],[2,4]],
            "rotation": [[3,0],[0,1],[1,4,2],[2,3],[4]], "outer_face": [[1,0]],
            "chi": [0], "ell": [[1, 0, 180]]}"#;
        let once = parse_input(text.as_bytes()).unwrap().to_json();
        let twice = parse_input(once.to_string().as_bytes()).unwrap().to_json();
        assert_eq!(once, twice);
    }

    #[test]
    fn verdicts() {
        let c4 = eval(Mode::Variable, C4);
        assert!(c4.feasible);
        assert_eq!(c4.record["format"], 1);
        assert!(c4.record["labels"]["edges"].as_array().is_some_and(|a| a.len() == 4));
        let mut pts = c4.drawing.unwrap().coords;
        pts.sort();
        assert_eq!(pts, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert!(!eval(Mode::Variable, "0 1\n1 2\n2 0\n").feasible);
        assert!(eval(Mode::Fixed, C4_JSON).feasible);
        assert!(eval(Mode::Oracle, C4_JSON).feasible);
        assert!(!eval(Mode::Oracle, "0 1\n1 2\n2 0\n").feasible);
    }

    #[test]
    fn components_are_drawn_in_bands() {
        let out = eval(Mode::Variable, "0 1\n1 2\n2 3\n3 0\n4 5\n6 7\n7 8\n");
        assert!(out.feasible);
        assert_eq!(out.record["components"].as_array().unwrap().len(), 3);
        let d = out.drawing.unwrap();
        let band = |vs: &[usize]| {
            let ys: Vec<i64> = vs.iter().map(|&v| d.coords[v].1).collect();
            (*ys.iter().min().unwrap(), *ys.iter().max().unwrap())
        };
        let (a, b, c) = (band(&[0, 1, 2, 3]), band(&[4, 5]), band(&[6, 7, 8]));
        assert!(a.1 < b.0 && b.1 < c.0);
        assert!(!eval(Mode::Variable, "0 1\n1 2\n2 0\n3 4\n").feasible);
    }

    #[test]
    fn degree_five_is_infeasible() {
        let out = eval(Mode::Variable, "0 1\n0 2\n0 3\n0 4\n0 5\n");
        assert!(!out.feasible);
        assert!(out.record["reason"].is_string());
    }

    #[test]
    fn rooted_and_chi_options() {
        let mut cfg = JobConfig::new(Mode::Variable);
        cfg.root_edge = Some(0);
        cfg.mu = Some(270);
        cfg.nu = Some(90);
        let p = parse_input(C4.as_bytes()).unwrap();
        assert!(!evaluate(&cfg, p.clone()).unwrap().feasible);
        cfg.mu = Some(90);
        assert!(evaluate(&cfg, p.clone()).unwrap().feasible);
        let mut cfg = JobConfig::new(Mode::Outerplane);
        cfg.chi = Some(vec![1]);
        assert!(matches!(evaluate(&cfg, p), Err(CliError::Usage(_))));
    }

    #[test]
    fn slope_of_a_line() {
        let pts: Vec<(f64, f64)> = [1e3, 1e4, 1e5].iter().map(|&x| (x, 3.0 * x)).collect();
        assert!((loglog_slope(&pts) - 1.0).abs() < 1e-9);
    }
}
