//! The line-based document formats for chord diagrams and graphs.
//!
//! A diagram document:
//!
//! ```text
//! version 1
//! type diagram
//! name pentagon
//! points 10
//! chord 0 3
//! chord 2 5
//! chord 4 7
//! chord 6 9
//! chord 8 1
//! order 1 2 3 4 5
//! ```
//!
//! `chord t h` lists tail then head; list position is the chord order
//! unless an explicit 1-based `order` permutation overrides it. Graph
//! documents use `vertices n` and `edge a b` lines instead. `#` starts
//! a comment; blank lines are ignored.

use crate::chord::{ChordDiagram, ChordSystem, SimpleGraph};
use crate::error::Error;
use crate::Result;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDocument {
    pub version: u32,
    pub name: Option<String>,
    pub points: usize,
    /// `(tail, head)` per chord, in order.
    pub chords: Vec<(usize, usize)>,
    /// Optional 1-based rank per chord.
    pub order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub version: u32,
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Key/value lines surviving comment stripping, with line numbers.
fn meaningful_lines(text: &str) -> Vec<(usize, Vec<String>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let fields: Vec<String> = body.split_whitespace().map(str::to_owned).collect();
            (!fields.is_empty()).then_some((i + 1, fields))
        })
        .collect()
}

fn parse_usize(line: usize, s: &str, what: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| parse_err(line, format!("{what} must be a non-negative integer, got {s:?}")))
}

struct Header {
    rest: Vec<(usize, Vec<String>)>,
}

fn parse_header(text: &str, want_kind: &str) -> Result<Header> {
    let mut lines = meaningful_lines(text).into_iter();
    let (ln, fields) = lines.next().ok_or_else(|| parse_err(1, "empty document"))?;
    if fields[0] != "version" || fields.len() != 2 {
        return Err(parse_err(ln, "expected `version <n>` on the first line"));
    }
    let version = parse_usize(ln, &fields[1], "version")? as u32;
    if version != FORMAT_VERSION {
        return Err(parse_err(ln, format!("unsupported version {version}")));
    }
    let (ln, fields) = lines
        .next()
        .ok_or_else(|| parse_err(ln, "missing `type` line"))?;
    if fields[0] != "type" || fields.len() != 2 {
        return Err(parse_err(ln, "expected `type diagram` or `type graph`"));
    }
    if fields[1] != want_kind {
        return Err(parse_err(ln, format!("expected type {want_kind}, got {}", fields[1])));
    }
    Ok(Header { rest: lines.collect() })
}

impl DiagramDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let header = parse_header(text, "diagram")?;
        let mut name = None;
        let mut points = None;
        let mut chords = Vec::new();
        let mut order = None;
        let mut last_line = 2;
        for (ln, fields) in header.rest {
            last_line = ln;
            match fields[0].as_str() {
                "name" => {
                    if fields.len() < 2 {
                        return Err(parse_err(ln, "`name` needs a value"));
                    }
                    name = Some(fields[1..].join(" "));
                }
                "points" => {
                    if fields.len() != 2 {
                        return Err(parse_err(ln, "expected `points <2n>`"));
                    }
                    points = Some(parse_usize(ln, &fields[1], "points")?);
                }
                "chord" => {
                    if fields.len() != 3 {
                        return Err(parse_err(ln, "expected `chord <tail> <head>`"));
                    }
                    if points.is_none() {
                        return Err(parse_err(ln, "`points` must precede chord lines"));
                    }
                    let t = parse_usize(ln, &fields[1], "tail")?;
                    let h = parse_usize(ln, &fields[2], "head")?;
                    chords.push((t, h));
                }
                "order" => {
                    let ranks: Vec<usize> = fields[1..]
                        .iter()
                        .map(|s| parse_usize(ln, s, "rank"))
                        .collect::<Result<_>>()?;
                    if ranks.len() != chords.len() {
                        return Err(parse_err(
                            ln,
                            format!("order lists {} ranks for {} chords", ranks.len(), chords.len()),
                        ));
                    }
                    order = Some(ranks);
                }
                other => return Err(parse_err(ln, format!("unknown key {other:?}"))),
            }
        }
        let points =
            points.ok_or_else(|| parse_err(last_line, "missing `points` line"))?;
        if chords.len() * 2 != points {
            return Err(parse_err(
                last_line,
                format!("{} chords do not cover {points} points", chords.len()),
            ));
        }
        Ok(Self { version: FORMAT_VERSION, name, points, chords, order })
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("version {}\n", self.version));
        out.push_str("type diagram\n");
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        out.push_str(&format!("points {}\n", self.points));
        for &(t, h) in &self.chords {
            out.push_str(&format!("chord {t} {h}\n"));
        }
        if let Some(order) = &self.order {
            out.push_str("order");
            for r in order {
                out.push_str(&format!(" {r}"));
            }
            out.push('\n');
        }
        out
    }

    /// Validates the document into a chord system. Matching and
    /// permutation failures surface as validation errors.
    pub fn to_system(&self) -> Result<ChordSystem> {
        let diagram = ChordDiagram::new(self.chords.clone())?;
        match &self.order {
            None => ChordSystem::new(diagram, self.chords.clone()),
            Some(order) => {
                let n = self.chords.len();
                let mut ranks = Vec::with_capacity(n);
                for &r in order {
                    if r == 0 || r > n {
                        return Err(Error::Validation(format!(
                            "rank {r} outside 1..={n}"
                        )));
                    }
                    ranks.push(r - 1);
                }
                ChordSystem::with_order(diagram, self.chords.clone(), &ranks)
            }
        }
    }

    /// Snapshot of a system: chords listed in order, no order override.
    pub fn from_system(s: &ChordSystem, name: Option<String>) -> Self {
        Self {
            version: FORMAT_VERSION,
            name,
            points: s.diagram().points(),
            chords: s.orientations().to_vec(),
            order: None,
        }
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let header = parse_header(text, "graph")?;
        let mut name = None;
        let mut vertices = None;
        let mut edges = Vec::new();
        let mut last_line = 2;
        for (ln, fields) in header.rest {
            last_line = ln;
            match fields[0].as_str() {
                "name" => {
                    if fields.len() < 2 {
                        return Err(parse_err(ln, "`name` needs a value"));
                    }
                    name = Some(fields[1..].join(" "));
                }
                "vertices" => {
                    if fields.len() != 2 {
                        return Err(parse_err(ln, "expected `vertices <n>`"));
                    }
                    vertices = Some(parse_usize(ln, &fields[1], "vertices")?);
                }
                "edge" => {
                    if fields.len() != 3 {
                        return Err(parse_err(ln, "expected `edge <a> <b>`"));
                    }
                    let a = parse_usize(ln, &fields[1], "endpoint")?;
                    let b = parse_usize(ln, &fields[2], "endpoint")?;
                    edges.push((a, b));
                }
                other => return Err(parse_err(ln, format!("unknown key {other:?}"))),
            }
        }
        let vertices =
            vertices.ok_or_else(|| parse_err(last_line, "missing `vertices` line"))?;
        Ok(Self { version: FORMAT_VERSION, name, vertices, edges })
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("version {}\n", self.version));
        out.push_str("type graph\n");
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        out.push_str(&format!("vertices {}\n", self.vertices));
        for &(a, b) in &self.edges {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::new(self.vertices, &self.edges)
    }

    pub fn from_graph(g: &SimpleGraph, name: Option<String>) -> Self {
        Self {
            version: FORMAT_VERSION,
            name,
            vertices: g.vertex_count(),
            edges: g.edges(),
        }
    }
}
