//! Dense bitmask view of a small graph, for the exhaustive searches.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex, VertexSet};

pub(crate) type Mask = u64;

#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    pub verts: Vec<Vertex>,
    pub index: BTreeMap<Vertex, usize>,
    pub adj: Vec<Mask>,
}

impl BitGraph {
    /// Panics above 64 vertices; callers guard the size first.
    pub fn new(g: &Graph) -> Self {
        let verts: Vec<Vertex> = g.vertices().collect();
        assert!(verts.len() <= 64, "bitmask graphs hold at most 64 vertices");
        let index: BTreeMap<Vertex, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = verts
            .iter()
            .map(|&v| g.neighbors(v).fold(0, |m, w| m | 1 << index[&w]))
            .collect();
        BitGraph { verts, index, adj }
    }

    pub fn bit(&self, v: Vertex) -> Mask {
        1 << self.index[&v]
    }

    pub fn neighbourhood(&self, mut set: Mask) -> Mask {
        let mut out = 0;
        while set != 0 {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            out |= self.adj[i];
        }
        out
    }

    /// Vertices reachable from `start` inside `allowed` (`start` must be in it).
    pub fn reach(&self, start: Mask, allowed: Mask) -> Mask {
        let mut seen = start & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.neighbourhood(frontier) & allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn connected(&self, set: Mask) -> bool {
        set != 0 && self.reach(set & set.wrapping_neg(), set) == set
    }

    pub fn to_set(&self, mut m: Mask) -> VertexSet {
        let mut out = VertexSet::new();
        while m != 0 {
            out.insert(self.verts[m.trailing_zeros() as usize]);
            m &= m - 1;
        }
        out
    }

    /// Shortest path from `s` to `t` inside `allowed`, as bit indices.
    pub fn path(&self, s: usize, t: usize, allowed: Mask) -> Option<Vec<Vertex>> {
        let mut parent = vec![usize::MAX; self.verts.len()];
        parent[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                let mut p = vec![self.verts[t]];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    p.push(self.verts[cur]);
                }
                p.reverse();
                return Some(p);
            }
            let mut n = self.adj[x] & allowed;
            while n != 0 {
                let y = n.trailing_zeros() as usize;
                n &= n - 1;
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}
