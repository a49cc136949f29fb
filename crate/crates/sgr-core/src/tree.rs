//! The underlying tree of a cell graph: parallel edge pairs collapsed to a
//! single undirected link, rays kept as degree contributions.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{CellGraph, EdgeId, VertexId};

/// One collapsed link of the tree view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLink {
    pub other: VertexId,
    /// The parallel group realizing the link: one or two edges.
    pub edges: Vec<EdgeId>,
}

/// Undirected simple view of the graph with parallel pairs collapsed.
#[derive(Debug, Clone)]
pub struct TreeView {
    adj: BTreeMap<VertexId, Vec<TreeLink>>,
    rays_at: BTreeMap<VertexId, usize>,
}

impl TreeView {
    #[must_use]
    pub fn build(g: &CellGraph) -> TreeView {
        let mut groups: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
        for e in g.edge_ids() {
            let edge = g.edge(e);
            let key = if edge.tail <= edge.head {
                (edge.tail, edge.head)
            } else {
                (edge.head, edge.tail)
            };
            groups.entry(key).or_default().push(e);
        }
        let mut adj: BTreeMap<VertexId, Vec<TreeLink>> = BTreeMap::new();
        for v in g.vertex_ids() {
            adj.insert(v, Vec::new());
        }
        for ((a, b), edges) in groups {
            adj.get_mut(&a).expect("endpoint").push(TreeLink {
                other: b,
                edges: edges.clone(),
            });
            adj.get_mut(&b)
                .expect("endpoint")
                .push(TreeLink { other: a, edges });
        }
        let mut rays_at: BTreeMap<VertexId, usize> = BTreeMap::new();
        for r in g.ray_ids() {
            *rays_at.entry(g.ray_owner(r)).or_insert(0) += 1;
        }
        TreeView { adj, rays_at }
    }

    #[must_use]
    pub fn links(&self, v: VertexId) -> &[TreeLink] {
        &self.adj[&v]
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[must_use]
    pub fn link_count(&self) -> usize {
        self.adj.values().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Degree in the tree view plus the number of rays at the vertex. A
    /// vertex is a branching point when this is at least 3.
    #[must_use]
    pub fn t_degree(&self, v: VertexId) -> usize {
        self.adj[&v].len() + self.rays_at.get(&v).copied().unwrap_or(0)
    }

    #[must_use]
    pub fn ray_count_at(&self, v: VertexId) -> usize {
        self.rays_at.get(&v).copied().unwrap_or(0)
    }

    /// True when the view is a single connected tree.
    #[must_use]
    pub fn is_tree(&self) -> bool {
        if self.adj.is_empty() {
            return false;
        }
        self.link_count() == self.vertex_count() - 1
            && self.reachable_from_first() == self.vertex_count()
    }

    fn reachable_from_first(&self) -> usize {
        let Some(&start) = self.adj.keys().next() else {
            return 0;
        };
        let mut seen: BTreeMap<VertexId, ()> = BTreeMap::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start, ());
        while let Some(v) = queue.pop_front() {
            for link in &self.adj[&v] {
                if seen.insert(link.other, ()).is_none() {
                    queue.push_back(link.other);
                }
            }
        }
        seen.len()
    }

    /// BFS distances from a set of source vertices.
    #[must_use]
    pub fn distances_from(&self, sources: &[VertexId]) -> BTreeMap<VertexId, usize> {
        let mut dist: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            dist.insert(s, 0);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for link in &self.adj[&v] {
                if !dist.contains_key(&link.other) {
                    dist.insert(link.other, d + 1);
                    queue.push_back(link.other);
                }
            }
        }
        dist
    }

    /// BFS parents with respect to the given sources; sources map to
    /// themselves. Ties are resolved by BFS order, which is deterministic
    /// because adjacency lists are built from ordered maps.
    #[must_use]
    pub fn parents_from(&self, sources: &[VertexId]) -> BTreeMap<VertexId, VertexId> {
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            parent.insert(s, s);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for link in &self.adj[&v] {
                if !parent.contains_key(&link.other) {
                    parent.insert(link.other, v);
                    queue.push_back(link.other);
                }
            }
        }
        parent
    }
}
