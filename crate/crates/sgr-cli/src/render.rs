//! Graph drawings: a DOT tree view and a radial SVG sketch.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::f64::consts::TAU;
use std::fmt::Write;

use sgr_core::{
    center_type, CellGraph, Dart, EdgeId, FaceData, FaceError, SectorFrame, TreeView, VertexId,
};

/// DOT source for an undirected tree view. Vertices keep their ids, edges
/// show their labels, and tooltips name the face on each side of the edge.
pub fn dot_tree(g: &CellGraph) -> Result<String, FaceError> {
    let faces = FaceData::compute(g)?;
    let frame = g.frame();
    let mut lines = Vec::new();
    lines.push("graph cells {".to_string());
    let subdominant = frame
        .subdominant()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    lines.push(format!(
        "  label=\"n={} subdominant {}\";",
        frame.n(),
        subdominant
    ));
    lines.push("  node [shape=circle];".to_string());
    let mut vertices: Vec<VertexId> = g.vertex_ids().collect();
    vertices.sort();
    for v in vertices {
        let rays = g
            .rotation(v)
            .iter()
            .filter(|d| matches!(d, Dart::Ray(_)))
            .count();
        if rays == 0 {
            lines.push(format!("  v{v};"));
        } else {
            let plural = if rays == 1 { "" } else { "s" };
            lines.push(format!("  v{v} [xlabel=\"{rays} ray{plural}\"];"));
        }
    }
    let mut edges: Vec<EdgeId> = g.edge_ids().collect();
    edges.sort();
    for e in edges {
        let edge = g.edge(e);
        let (left, right) = faces.edge_flanks(e);
        lines.push(format!(
            "  v{} -- v{} [label=\"{}\", tooltip=\"left {}, right {}\"];",
            edge.tail,
            edge.head,
            edge.label,
            face_note(frame, left),
            face_note(frame, right),
        ));
    }
    lines.push("}".to_string());
    let mut out = lines.join("\n");
    out.push('\n');
    Ok(out)
}

fn face_note(frame: &SectorFrame, flank: Option<usize>) -> String {
    match flank {
        None => "bounded".to_string(),
        Some(s) if frame.is_subdominant(s) => format!("sector {s} subdominant"),
        Some(s) => format!("sector {s} dominant"),
    }
}

/// Radial SVG sketch: the center of symmetry sits at the origin, arms leave
/// it along their label directions, rays are dashed stubs, and the sector
/// names ring the rim with subdominant ones grayed.
pub fn radial_svg(g: &CellGraph) -> Result<String, FaceError> {
    let faces = FaceData::compute(g)?;
    let frame = g.frame();
    let n = frame.n();
    let step = 80.0;
    let stub = 0.45 * step;
    let pos = place_vertices(g, step);

    let mut reach: f64 = step;
    for &(x, y) in pos.values() {
        reach = reach.max(x.hypot(y) + stub);
    }
    let rim = reach + 0.5 * step;
    let half = rim + 30.0;

    let mut body = String::new();

    let mut groups: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    let mut edge_ids: Vec<EdgeId> = g.edge_ids().collect();
    edge_ids.sort();
    for e in edge_ids {
        let edge = g.edge(e);
        let key = if edge.tail <= edge.head {
            (edge.tail, edge.head)
        } else {
            (edge.head, edge.tail)
        };
        groups.entry(key).or_default().push(e);
    }
    for ((a, b), group) in &groups {
        let (x1, y1) = pos[a];
        let (x2, y2) = pos[b];
        let len = (x2 - x1).hypot(y2 - y1).max(1.0);
        let (px, py) = (-(y2 - y1) / len, (x2 - x1) / len);
        for (i, &e) in group.iter().enumerate() {
            let off = if group.len() > 1 {
                if i == 0 {
                    6.0
                } else {
                    -6.0
                }
            } else {
                0.0
            };
            let (ax, ay) = (x1 + off * px, y1 + off * py);
            let (bx, by) = (x2 + off * px, y2 + off * py);
            let _ = writeln!(
                body,
                "  <line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\"/>"
            );
            let shift = if off < 0.0 { off - 9.0 } else { off + 9.0 };
            let lx = (x1 + x2) / 2.0 + shift * px;
            let ly = (y1 + y2) / 2.0 + shift * py;
            let _ = writeln!(
                body,
                "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" dy=\"3.5\">{}</text>",
                g.edge(e).label
            );
        }
    }

    let mut ray_ids: Vec<_> = g.ray_ids().collect();
    ray_ids.sort();
    for r in ray_ids {
        let (x, y) = pos[&g.ray_owner(r)];
        let (cw, _) = faces.ray_flanks(r);
        let theta = TAU * (cw as f64 + 1.0) / n as f64;
        let (ex, ey) = (x + stub * theta.cos(), y + stub * theta.sin());
        let _ = writeln!(
            body,
            "  <line class=\"ray\" x1=\"{x:.2}\" y1=\"{y:.2}\" x2=\"{ex:.2}\" y2=\"{ey:.2}\"/>"
        );
    }

    let mut vertex_ids: Vec<_> = g.vertex_ids().collect();
    vertex_ids.sort();
    for v in vertex_ids {
        let (x, y) = pos[&v];
        let _ = writeln!(body, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"10\"/>");
        let _ = writeln!(
            body,
            "  <text class=\"id\" x=\"{x:.2}\" y=\"{y:.2}\" dy=\"3.5\">{v}</text>"
        );
    }

    for j in 0..n {
        let theta = TAU * (j as f64 + 0.5) / n as f64;
        let (x, y) = (rim * theta.cos(), rim * theta.sin());
        let class = if frame.is_subdominant(j) {
            " class=\"sub\""
        } else {
            ""
        };
        let _ = writeln!(
            body,
            "  <text{class} x=\"{x:.2}\" y=\"{y:.2}\" dy=\"3.5\">{j}</text>"
        );
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.2} {:.2} {:.2} {:.2}\">",
        -half,
        -half,
        2.0 * half,
        2.0 * half
    );
    out.push_str(concat!(
        "  <style>\n",
        "    line { stroke: #333; stroke-width: 1.5; }\n",
        "    line.ray { stroke-dasharray: 4 3; stroke-width: 1; }\n",
        "    circle { fill: #fff; stroke: #333; stroke-width: 1.5; }\n",
        "    text { font: 11px sans-serif; fill: #111; text-anchor: middle; }\n",
        "    text.sub { fill: #999; }\n",
        "  </style>\n",
    ));
    out.push_str(&body);
    out.push_str("</svg>\n");
    Ok(out)
}

/// Breadth-first placement outward from the center of symmetry. Arms leave
/// the roots along their label directions; deeper fans spread around the
/// heading that reached their parent.
fn place_vertices(g: &CellGraph, step: f64) -> BTreeMap<VertexId, (f64, f64)> {
    let n = g.frame().n() as f64;
    let tree = TreeView::build(g);
    let mut pos: BTreeMap<VertexId, (f64, f64)> = BTreeMap::new();
    let mut heading: BTreeMap<VertexId, f64> = BTreeMap::new();
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut queue: VecDeque<(VertexId, usize)> = VecDeque::new();

    let roots = center_type(g)
        .map(|ct| ct.roots())
        .filter(|roots| roots.iter().all(|v| g.contains_vertex(*v)));
    match roots.as_deref() {
        Some([a, b]) => {
            let label = tree
                .links(*a)
                .iter()
                .find(|l| l.other == *b)
                .map_or(0, |l| g.edge(l.edges[0]).label);
            let theta = TAU * label as f64 / n;
            let (dx, dy) = (theta.cos(), theta.sin());
            pos.insert(*a, (-0.45 * step * dx, -0.45 * step * dy));
            pos.insert(*b, (0.45 * step * dx, 0.45 * step * dy));
            heading.insert(*a, theta + TAU / 2.0);
            heading.insert(*b, theta);
            seen.insert(*a);
            seen.insert(*b);
            queue.push_back((*a, 0));
            queue.push_back((*b, 0));
        }
        _ => {
            let root = match roots.as_deref() {
                Some([v]) => *v,
                _ => g.vertex_ids().min().expect("graph has a vertex"),
            };
            pos.insert(root, (0.0, 0.0));
            heading.insert(root, 0.0);
            seen.insert(root);
            queue.push_back((root, 0));
        }
    }

    while let Some((v, depth)) = queue.pop_front() {
        let (vx, vy) = pos[&v];
        let mut links: Vec<_> = tree
            .links(v)
            .iter()
            .filter(|l| !seen.contains(&l.other))
            .collect();
        links.sort_by_key(|l| (g.edge(l.edges[0]).label, l.other));
        let fan = links.len();
        for (i, link) in links.iter().enumerate() {
            let angle = if depth == 0 {
                TAU * g.edge(link.edges[0]).label as f64 / n
            } else {
                heading[&v] + (i as f64 - (fan as f64 - 1.0) / 2.0) * 0.9 / depth as f64
            };
            pos.insert(
                link.other,
                (vx + step * angle.cos(), vy + step * angle.sin()),
            );
            heading.insert(link.other, angle);
            seen.insert(link.other);
            queue.push_back((link.other, depth + 1));
        }
    }
    pos
}
