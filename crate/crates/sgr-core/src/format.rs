//! Plain-text serialization of cell graphs.
//!
//! The format is line oriented:
//!
//! ```text
//! sgr 1
//! n 8
//! subdominant 0 4
//! vertex 1
//! edge 1 2 1 label 3
//! ray 1 1
//! rot 1 e1.h r1
//! anchor 1 sector 0
//! ```
//!
//! `edge <id> <tail> <head> label <j>` records a directed edge, `ray <id>
//! <vertex>` a ray at a vertex, `rot <vertex> <darts...>` the full
//! counterclockwise rotation with darts written `e<id>.t`, `e<id>.h` or
//! `r<id>`, and exactly one `anchor <ray> sector <k>` line pins the sector
//! assignment. Parsing is order independent apart from the three header
//! lines; serialization emits everything sorted by id.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::frame::{FrameError, SectorFrame};
use crate::graph::{CellGraph, Dart, Edge, EdgeId, RayId, StructureIssue, VertexId};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {issue}")]
    BadFrame { line: usize, issue: FrameError },
    #[error("line {line}: duplicate declaration of {what}")]
    Duplicate { line: usize, what: String },
    #[error("line {line}: rotation for unknown vertex {vertex}")]
    RotUnknownVertex { line: usize, vertex: u32 },
    #[error("line {line}: second anchor line")]
    SecondAnchor { line: usize },
    #[error("missing header line `sgr 1`")]
    MissingHeader,
    #[error("unsupported format version {0}")]
    BadVersion(String),
    #[error("missing `n` line")]
    MissingN,
    #[error("missing `subdominant` line")]
    MissingSubdominant,
    #[error("missing anchor line")]
    MissingAnchor,
    #[error("vertex {0} has no rot line")]
    MissingRotation(u32),
    #[error("{0}")]
    Structure(#[from] StructureIssue),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_id(tok: &str, line: usize, what: &str) -> Result<u32, ParseError> {
    tok.parse::<u32>()
        .map_err(|_| syntax(line, format!("expected {what} id, got `{tok}`")))
}

fn parse_dart(tok: &str, line: usize) -> Result<Dart, ParseError> {
    if let Some(rest) = tok.strip_prefix('e') {
        if let Some(id) = rest.strip_suffix(".t") {
            return Ok(Dart::EdgeTail(EdgeId(parse_id(id, line, "edge")?)));
        }
        if let Some(id) = rest.strip_suffix(".h") {
            return Ok(Dart::EdgeHead(EdgeId(parse_id(id, line, "edge")?)));
        }
    }
    if let Some(rest) = tok.strip_prefix('r') {
        if let Ok(id) = rest.parse::<u32>() {
            return Ok(Dart::Ray(RayId(id)));
        }
    }
    Err(syntax(line, format!("malformed dart `{tok}`")))
}

/// Parses the text form of a graph, reporting the first problem found with
/// its line number.
pub fn from_text(text: &str) -> Result<CellGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("sgr") {
        return Err(ParseError::MissingHeader);
    }
    match toks.next() {
        Some("1") => {}
        Some(v) => return Err(ParseError::BadVersion(v.to_string())),
        None => return Err(syntax(line, "missing version")),
    }

    let mut n: Option<usize> = None;
    let mut subdominant: Option<(usize, Vec<usize>)> = None;
    let mut vertices: Vec<u32> = Vec::new();
    let mut edges: BTreeMap<EdgeId, Edge> = BTreeMap::new();
    let mut rays: BTreeMap<RayId, VertexId> = BTreeMap::new();
    let mut rots: BTreeMap<VertexId, Vec<Dart>> = BTreeMap::new();
    let mut anchor: Option<(RayId, usize)> = None;

    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let kw = toks.next().expect("nonempty line");
        match kw {
            "n" => {
                if n.is_some() {
                    return Err(ParseError::Duplicate {
                        line,
                        what: "n".into(),
                    });
                }
                let val = toks
                    .next()
                    .ok_or_else(|| syntax(line, "n needs a value"))?
                    .parse::<usize>()
                    .map_err(|_| syntax(line, "n must be an integer"))?;
                n = Some(val);
            }
            "subdominant" => {
                if subdominant.is_some() {
                    return Err(ParseError::Duplicate {
                        line,
                        what: "subdominant".into(),
                    });
                }
                let mut set = Vec::new();
                for t in toks.by_ref() {
                    set.push(
                        t.parse::<usize>()
                            .map_err(|_| syntax(line, format!("bad sector `{t}`")))?,
                    );
                }
                subdominant = Some((line, set));
            }
            "vertex" => {
                let id = parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "vertex needs an id"))?,
                    line,
                    "vertex",
                )?;
                if vertices.contains(&id) {
                    return Err(ParseError::Duplicate {
                        line,
                        what: format!("vertex {id}"),
                    });
                }
                vertices.push(id);
            }
            "edge" => {
                let id = EdgeId(parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "edge needs an id"))?,
                    line,
                    "edge",
                )?);
                let tail = VertexId(parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "edge needs a tail"))?,
                    line,
                    "vertex",
                )?);
                let head = VertexId(parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "edge needs a head"))?,
                    line,
                    "vertex",
                )?);
                if toks.next() != Some("label") {
                    return Err(syntax(line, "expected `label`"));
                }
                let label = toks
                    .next()
                    .ok_or_else(|| syntax(line, "label needs a value"))?
                    .parse::<usize>()
                    .map_err(|_| syntax(line, "label must be an integer"))?;
                if edges.insert(id, Edge { label, tail, head }).is_some() {
                    return Err(ParseError::Duplicate {
                        line,
                        what: format!("edge {id}"),
                    });
                }
            }
            "ray" => {
                let id = RayId(parse_id(
                    toks.next().ok_or_else(|| syntax(line, "ray needs an id"))?,
                    line,
                    "ray",
                )?);
                let owner = VertexId(parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "ray needs a vertex"))?,
                    line,
                    "vertex",
                )?);
                if rays.insert(id, owner).is_some() {
                    return Err(ParseError::Duplicate {
                        line,
                        what: format!("ray {id}"),
                    });
                }
            }
            "rot" => {
                let vid = parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "rot needs a vertex"))?,
                    line,
                    "vertex",
                )?;
                if !vertices.contains(&vid) {
                    return Err(ParseError::RotUnknownVertex { line, vertex: vid });
                }
                let v = VertexId(vid);
                let mut rot = Vec::new();
                for t in toks.by_ref() {
                    rot.push(parse_dart(t, line)?);
                }
                if rots.insert(v, rot).is_some() {
                    return Err(ParseError::Duplicate {
                        line,
                        what: format!("rot {vid}"),
                    });
                }
            }
            "anchor" => {
                if anchor.is_some() {
                    return Err(ParseError::SecondAnchor { line });
                }
                let ray = RayId(parse_id(
                    toks.next()
                        .ok_or_else(|| syntax(line, "anchor needs a ray"))?,
                    line,
                    "ray",
                )?);
                if toks.next() != Some("sector") {
                    return Err(syntax(line, "expected `sector`"));
                }
                let sector = toks
                    .next()
                    .ok_or_else(|| syntax(line, "sector needs a value"))?
                    .parse::<usize>()
                    .map_err(|_| syntax(line, "sector must be an integer"))?;
                anchor = Some((ray, sector));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(syntax(line, format!("trailing token `{extra}`")));
        }
    }

    let n = n.ok_or(ParseError::MissingN)?;
    let (sub_line, sub) = subdominant.ok_or(ParseError::MissingSubdominant)?;
    let frame = SectorFrame::new(n, &sub).map_err(|issue| ParseError::BadFrame {
        line: sub_line,
        issue,
    })?;
    let anchor = anchor.ok_or(ParseError::MissingAnchor)?;
    for &vid in &vertices {
        if !rots.contains_key(&VertexId(vid)) {
            return Err(ParseError::MissingRotation(vid));
        }
    }

    Ok(CellGraph::from_parts(frame, rots, edges, rays, anchor)?)
}

/// Serializes a graph; lines are grouped by kind and sorted by id, so equal
/// graphs with equal ids produce byte-identical text.
#[must_use]
pub fn to_text(g: &CellGraph) -> String {
    let mut out = String::new();
    out.push_str("sgr 1\n");
    out.push_str(&format!("n {}\n", g.frame().n()));
    out.push_str("subdominant");
    for s in g.frame().subdominant() {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    for v in g.vertex_ids() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for e in g.edge_ids() {
        let edge = g.edge(e);
        out.push_str(&format!(
            "edge {e} {} {} label {}\n",
            edge.tail, edge.head, edge.label
        ));
    }
    for r in g.ray_ids() {
        out.push_str(&format!("ray {r} {}\n", g.ray_owner(r)));
    }
    for v in g.vertex_ids() {
        out.push_str(&format!("rot {v}"));
        for d in g.rotation(v) {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
    }
    let (ray, sector) = g.anchor();
    out.push_str(&format!("anchor {ray} sector {sector}\n"));
    out
}
