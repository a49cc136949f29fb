//! Gathering a graph into ivy form.
//!
//! While some branching vertex sits away from the roots, pick a farthest
//! one that is not the top of a stem structure and look at its tree link
//! toward the nearest root. An edge directed toward the root names a
//! forward move; an edge directed away names the inverse move of the
//! previous dominant label. Either way the junction of the chosen label
//! sits at the picked vertex and the move carries its whole branch one
//! step rootward, so the root metric drops by at least two per move.

use std::collections::BTreeSet;

use sgr_braid::{even_action_sq, ActionLog, Step};
use sgr_core::{
    canonicalize, center_type, is_ivy, j_junction, root_metric, validate, CellGraph, FaceData,
    StructureKind, TreeView, VertexId,
};

use crate::NormalizeError;

/// Gathers `g` into ivy form, returning the canonical result and the log
/// of the moves taken. The input must validate and be centrally symmetric.
pub fn to_ivy(g: &CellGraph) -> Result<(CellGraph, ActionLog), NormalizeError> {
    let mut log = ActionLog::new();
    let out = gather_into(g, &mut log)?;
    Ok((out, log))
}

pub(crate) fn gather_into(g: &CellGraph, log: &mut ActionLog) -> Result<CellGraph, NormalizeError> {
    let report = validate(g);
    if !report.ok() || report.symmetric != Some(true) {
        return Err(NormalizeError::BadInput);
    }
    let mut cur = canonicalize(g)?.graph;
    let initial = root_metric(&cur).ok_or(NormalizeError::BadInput)?;
    let cap = (initial / 2) as usize;
    let mut steps = 0usize;

    while !is_ivy(&cur) {
        if steps >= cap {
            return Err(NormalizeError::Stalled {
                detail: format!("gathering exceeded {cap} moves for initial metric {initial}"),
            });
        }
        let metric = root_metric(&cur).ok_or(NormalizeError::BadInput)?;
        let (j, inverse) = pick_move(&cur)?;
        let next = even_action_sq(&cur, j, inverse)?;
        let after = root_metric(&next).ok_or(NormalizeError::BadInput)?;
        if after + 2 > metric {
            return Err(NormalizeError::Stalled {
                detail: format!("move at label {j} left the root metric at {after}, was {metric}"),
            });
        }
        log.record(Step::Even { j, inverse }, &next)?;
        cur = next;
        steps += 1;
    }
    Ok(cur)
}

/// Chooses the next gathering move on a canonical, non-ivy graph.
fn pick_move(cur: &CellGraph) -> Result<(usize, bool), NormalizeError> {
    let frame = cur.frame();
    let faces = FaceData::compute(cur)?;
    let center = center_type(cur).ok_or(NormalizeError::BadInput)?;
    let roots: BTreeSet<VertexId> = center.roots().into_iter().collect();
    let tree = TreeView::build(cur);

    // Stem tops carry branching that ivy form keeps, so they never drive
    // a move; everything else branching off-root does.
    let mut stem_tops: BTreeSet<VertexId> = BTreeSet::new();
    for j in frame.dominant_labels() {
        let junction = j_junction(cur, &faces, j).map_err(|e| NormalizeError::Stalled {
            detail: format!("junction scan failed: {e}"),
        })?;
        if let Some(junction) = junction {
            if junction.kind == StructureKind::Y {
                if let Some(top) = junction.y_top {
                    stem_tops.insert(top);
                }
            }
        }
    }

    let root_list: Vec<VertexId> = roots.iter().copied().collect();
    let dist = tree.distances_from(&root_list);
    let parents = tree.parents_from(&root_list);

    let mut picked: Option<(usize, VertexId)> = None;
    for v in cur.vertex_ids() {
        if roots.contains(&v) || stem_tops.contains(&v) || tree.t_degree(v) < 3 {
            continue;
        }
        let d = dist[&v];
        if picked.map_or(true, |(best, _)| d > best) {
            picked = Some((d, v));
        }
    }
    let Some((_, u)) = picked else {
        return Err(NormalizeError::Stalled {
            detail: "graph is not in ivy form but has no movable branch vertex".into(),
        });
    };

    let toward_root = parents[&u];
    let link = tree
        .links(u)
        .iter()
        .find(|l| l.other == toward_root)
        .ok_or_else(|| NormalizeError::Stalled {
            detail: "branch vertex has no link toward its root".into(),
        })?;

    let forward = link
        .edges
        .iter()
        .find(|&&e| cur.edge(e).tail == u && cur.edge(e).head == toward_root);
    let (j, inverse) = match forward {
        Some(&e) => (cur.edge(e).label, false),
        None => {
            let &e = link.edges.first().expect("tree link has an edge");
            (frame.prev_dominant(cur.edge(e).label), true)
        }
    };

    j_junction(cur, &faces, j)
        .map_err(|e| NormalizeError::Stalled {
            detail: format!("junction scan failed: {e}"),
        })?
        .ok_or_else(|| NormalizeError::Stalled {
            detail: format!("chosen label {j} has no junction"),
        })?;
    Ok((j, inverse))
}
