//! Partition of a corpus into connected components under the squared
//! generators: one generator per half-turn pair of dominant labels, applied
//! in both directions from every member. Images that outgrow the vertex
//! budget are counted but not followed; images inside the budget must land
//! back in the corpus, so a miss is evidence the enumeration is incomplete.

use std::collections::BTreeMap;

use thiserror::Error;

use sgr_braid::{even_action_sq, ActionError};
use sgr_core::canonical::CanonicalError;
use sgr_normalize::{component_invariant, ComponentInvariant};

use crate::enumerate::Corpus;

/// One connected component of the move graph restricted to the corpus.
#[derive(Debug, Clone)]
pub struct OrbitClass {
    pub invariant: ComponentInvariant,
    /// Corpus indices, ascending; the first is the smallest member.
    pub members: Vec<usize>,
}

impl OrbitClass {
    #[must_use]
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// The full partition, classes ordered by invariant.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub classes: Vec<OrbitClass>,
    /// Moves whose image outgrew the budget and was not followed.
    pub boundary_moves: usize,
    /// Moves whose image stayed in the corpus.
    pub interior_moves: usize,
}

#[derive(Debug, Error)]
pub enum OrbitError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(
        "image of corpus graph {index} under E_{label}^{{{sign}2}} stays within \
         the vertex budget but is not in the corpus"
    )]
    MissingImage {
        index: usize,
        label: usize,
        sign: char,
    },
    #[error("corpus graph {index} has no component invariant")]
    NoInvariant { index: usize },
    #[error("one component contains graphs {a} and {b} with different invariants")]
    InvariantClash { a: usize, b: usize },
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Connects corpus members by the squared generators and groups the
/// components, checking that each carries a single invariant.
pub fn orbit_partition(corpus: &Corpus) -> Result<OrbitReport, OrbitError> {
    let frame = &corpus.frame;
    let generators: Vec<usize> = frame
        .dominant_labels()
        .into_iter()
        .filter(|&j| j < frame.nu())
        .collect();

    let mut uf = UnionFind::new(corpus.len());
    let mut boundary_moves = 0;
    let mut interior_moves = 0;
    for (i, g) in corpus.graphs().iter().enumerate() {
        for &j in &generators {
            for inverse in [false, true] {
                let image = even_action_sq(g, j, inverse)?;
                if image.vertex_count() > corpus.max_vertices {
                    boundary_moves += 1;
                    continue;
                }
                let Some(k) = corpus.position(&image)? else {
                    return Err(OrbitError::MissingImage {
                        index: i,
                        label: j,
                        sign: if inverse { '-' } else { '+' },
                    });
                };
                interior_moves += 1;
                uf.union(i, k);
            }
        }
    }

    let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..corpus.len() {
        grouped.entry(uf.find(i)).or_default().push(i);
    }

    let mut classes = Vec::with_capacity(grouped.len());
    for members in grouped.into_values() {
        let first = members[0];
        let invariant = component_invariant(&corpus.graphs()[first])
            .ok_or(OrbitError::NoInvariant { index: first })?;
        for &m in &members[1..] {
            let other = component_invariant(&corpus.graphs()[m])
                .ok_or(OrbitError::NoInvariant { index: m })?;
            if other != invariant {
                return Err(OrbitError::InvariantClash { a: first, b: m });
            }
        }
        classes.push(OrbitClass { invariant, members });
    }
    classes.sort_by(|a, b| (&a.invariant, a.members[0]).cmp(&(&b.invariant, b.members[0])));

    Ok(OrbitReport {
        classes,
        boundary_moves,
        interior_moves,
    })
}
