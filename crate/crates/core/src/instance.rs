//! Rooted instances and their separations.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::connectivity::{split_components, subsets_of_size};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A graph with four distinct nominated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedInstance {
    graph: Graph,
    roots: [Vertex; 4],
}

impl RootedInstance {
    pub fn new(graph: Graph, roots: [Vertex; 4]) -> Result<Self> {
        let distinct: BTreeSet<Vertex> = roots.iter().copied().collect();
        if distinct.len() != 4 {
            return Err(Error::invalid("roots must be four distinct vertices"));
        }
        if let Some(r) = roots.iter().find(|r| !graph.contains(**r)) {
            return Err(Error::invalid(format!("root {r} is not a vertex of the graph")));
        }
        Ok(RootedInstance { graph, roots })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> [Vertex; 4] {
        self.roots
    }

    pub fn root_set(&self) -> VertexSet {
        self.roots.iter().copied().collect()
    }

    pub fn is_root(&self, v: Vertex) -> bool {
        self.roots.contains(&v)
    }
}

/// A vertex separation `(left, right)`: every vertex lies in one side, both
/// sides have a private vertex, and no edge joins the private parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub left: VertexSet,
    pub right: VertexSet,
    pub separator: VertexSet,
    pub order: usize,
    /// Nominated vertices in `left` and in `right`; separator roots count twice.
    pub root_split: (usize, usize),
}

impl Separation {
    fn new(left: VertexSet, right: VertexSet, roots: &VertexSet) -> Self {
        let separator: VertexSet = left.intersection(&right).copied().collect();
        let s = left.intersection(roots).count();
        let t = right.intersection(roots).count();
        let (left, right, root_split) = if s < t || (s == t && left <= right) {
            (left, right, (s, t))
        } else {
            (right, left, (t, s))
        };
        Separation {
            order: separator.len(),
            separator,
            left,
            right,
            root_split,
        }
    }

    fn sort_key(&self) -> (usize, usize, std::cmp::Reverse<usize>, VertexSet, VertexSet) {
        let (s, t) = self.root_split;
        (
            self.order,
            s + t - 4,
            std::cmp::Reverse(t - s),
            self.left.clone(),
            self.right.clone(),
        )
    }

    /// Checks the defining conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let all: VertexSet = self.left.union(&self.right).copied().collect();
        let lp: VertexSet = self.left.difference(&self.right).copied().collect();
        let rp: VertexSet = self.right.difference(&self.left).copied().collect();
        all == g.vertex_set()
            && !lp.is_empty()
            && !rp.is_empty()
            && lp.iter().all(|&u| g.neighbors(u).all(|w| !rp.contains(&w)))
    }
}

/// Every separator of size `k` together with the components it leaves.
pub fn separators_of_order(g: &Graph, k: usize) -> Vec<(VertexSet, Vec<VertexSet>)> {
    let vs: Vec<Vertex> = g.vertices().collect();
    subsets_of_size(&vs, k)
        .into_iter()
        .filter_map(|s| {
            let sep: VertexSet = s.into_iter().collect();
            split_components(g, &sep).map(|c| (sep, c))
        })
        .collect()
}

/// All separations of order at most `max_order` (which must be at most 3).
///
/// Sorted by order, then by the number of roots inside the separator, then
/// by decreasing root imbalance. For order one this gives
/// `(0,4), (1,3), (2,2), (1,4), (2,3)`.
pub fn enumerate_separations(inst: &RootedInstance, max_order: usize) -> Result<Vec<Separation>> {
    if max_order > 3 {
        return Err(Error::invalid("separation order is limited to 3"));
    }
    let g = inst.graph();
    let roots = inst.root_set();
    let mut seen: BTreeSet<(VertexSet, VertexSet)> = BTreeSet::new();
    let mut out = Vec::new();
    for k in 0..=max_order {
        for (sep, comps) in separators_of_order(g, k) {
            let m = comps.len();
            // Component 0 always goes left, so each unordered split appears once.
            for mask in 0u64..(1 << (m - 1)) {
                let mut left = sep.clone();
                let mut right = sep.clone();
                left.extend(comps[0].iter().copied());
                for (i, c) in comps.iter().enumerate().skip(1) {
                    if mask >> (i - 1) & 1 == 1 {
                        left.extend(c.iter().copied());
                    } else {
                        right.extend(c.iter().copied());
                    }
                }
                if right.len() == sep.len() {
                    continue;
                }
                let s = Separation::new(left, right, &roots);
                if seen.insert((s.left.clone(), s.right.clone())) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by_key(|s| s.sort_key());
    Ok(out)
}
