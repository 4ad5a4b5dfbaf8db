//! Simple undirected graphs with stable vertex identifiers.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An opaque vertex identifier. Identifiers are never renumbered by graph
/// operations, so witnesses and certificates always refer to input vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Vertex {
    fn from(v: u32) -> Self {
        Vertex(v)
    }
}

pub type VertexSet = BTreeSet<Vertex>;

/// Unordered edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }
}

/// A finite simple undirected graph.
///
/// Adjacency is kept symmetric and irreflexive by every mutating method.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl From<RawGraph> for Graph {
    fn from(raw: RawGraph) -> Self {
        let mut g = Graph::with_vertices(raw.vertices);
        for Edge(u, v) in raw.edges {
            if u != v {
                g.add_edge(u, v);
            }
        }
        g
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            vertices: g.vertices().collect(),
            edges: g.edges().collect(),
        }
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list over `u32` labels.
    pub fn from_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(Vertex(u), Vertex(v));
        }
        g
    }

    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vs: I) -> Self {
        let mut g = Graph::new();
        for v in vs {
            g.add_vertex(v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds the edge `uv`, creating missing endpoints. Loops are ignored.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        if u == v {
            self.add_vertex(u);
            return;
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if let Some(n) = self.adj.get_mut(&u) {
            n.remove(&v);
        }
        if let Some(n) = self.adj.get_mut(&v) {
            n.remove(&u);
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(ns) = self.adj.remove(&v) {
            for n in ns {
                if let Some(m) = self.adj.get_mut(&n) {
                    m.remove(&v);
                }
            }
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> &VertexSet {
        static EMPTY: VertexSet = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, |n| n.len())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u..).map(move |&v| Edge(u, v)))
    }

    /// Smallest identifier not used by any vertex.
    pub fn fresh_vertex(&self) -> Vertex {
        self.adj
            .keys()
            .next_back()
            .map_or(Vertex(0), |v| Vertex(v.0 + 1))
    }

    /// Subgraph induced by `keep`.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if let Some(ns) = self.adj.get(&v) {
                g.adj
                    .insert(v, ns.iter().filter(|n| keep.contains(n)).copied().collect());
            }
        }
        g
    }

    /// Graph with the vertices of `drop` deleted.
    pub fn without(&self, drop: &VertexSet) -> Graph {
        let keep: VertexSet = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    /// Contracts the edge `uv`; `u` survives and inherits the neighbours of `v`.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!("cannot contract non-edge {u}{v}")));
        }
        Ok(self.merge_vertices(u, v))
    }

    /// Identifies `v` into `u` whether or not they are adjacent.
    pub(crate) fn merge_vertices(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        let vn: Vec<Vertex> = g.neighbors(v).collect();
        g.remove_vertex(v);
        for n in vn {
            if n != u {
                g.add_edge(u, n);
            }
        }
        g
    }

    /// `true` when every vertex of `self` is a vertex of `other` and every edge of
    /// `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices().all(|v| other.contains(v))
            && self.edges().all(|Edge(u, v)| other.has_edge(u, v))
    }

    /// `true` when `self` is a spanning subgraph of `other`.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count() && self.is_subgraph_of(other)
    }

    /// Connected components, each as a vertex set, in order of smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.reachable_from(v, &VertexSet::new());
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_from(&self, start: Vertex, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new();
        if !self.contains(start) || blocked.contains(&start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if !blocked.contains(&y) && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.reachable_from(v, &VertexSet::new()).len() == self.vertex_count(),
        }
    }

    /// `true` when the subgraph induced by `set` is non-empty and connected.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let Some(&first) = set.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::from([first]);
        let mut stack = vec![first];
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if set.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Shortest path from `s` to `t` avoiding `blocked` (endpoints excluded from the check).
    pub fn shortest_path(&self, s: Vertex, t: Vertex, blocked: &VertexSet) -> Option<Vec<Vertex>> {
        if !self.contains(s) || !self.contains(t) {
            return None;
        }
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        parent.insert(s, s);
        while let Some(x) = queue.pop_front() {
            if x == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.neighbors(x) {
                if (y == t || !blocked.contains(&y)) && !parent.contains_key(&y) {
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Shortest path from `s` to any vertex of `targets`, staying inside `allowed`.
    pub(crate) fn path_within(
        &self,
        s: Vertex,
        targets: &VertexSet,
        allowed: &VertexSet,
    ) -> Option<Vec<Vertex>> {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        parent.insert(s, s);
        while let Some(x) = queue.pop_front() {
            if targets.contains(&x) {
                let mut path = vec![x];
                let mut cur = x;
                while cur != s {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.neighbors(x) {
                if allowed.contains(&y) && !parent.contains_key(&y) {
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Relabels vertices through `map`; vertices missing from `map` keep their id.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Graph {
        let f = |v: Vertex| *map.get(&v).unwrap_or(&v);
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(f(v));
        }
        for Edge(u, v) in self.edges() {
            g.add_edge(f(u), f(v));
        }
        g
    }

    /// Checks that `walk` is a path (distinct vertices, consecutive ones adjacent).
    pub fn is_path(&self, walk: &[Vertex]) -> bool {
        if walk.is_empty() || !walk.iter().all(|&v| self.contains(v)) {
            return false;
        }
        let distinct: VertexSet = walk.iter().copied().collect();
        distinct.len() == walk.len() && walk.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Checks that `cycle` (closing edge implied) is a cycle of length at least 3.
    pub fn is_cycle(&self, cycle: &[Vertex]) -> bool {
        cycle.len() >= 3
            && self.is_path(cycle)
            && self.has_edge(cycle[cycle.len() - 1], cycle[0])
    }
}

/// Sorted triple of pairwise distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle(pub [Vertex; 3]);

impl Triangle {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        t.sort();
        Triangle(t)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn vertices(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn is_in(&self, g: &Graph) -> bool {
        let [a, b, c] = self.0;
        a != b && b != c && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// All triangles of `g`, sorted.
pub fn triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for a in g.vertices() {
        for b in g.neighbor_set(a).range(a..).skip_while(|&&b| b == a) {
            for c in g.neighbor_set(*b).range(*b..).skip_while(|&&c| c == *b) {
                if g.has_edge(a, *c) {
                    out.push(Triangle([a, *b, *c]));
                }
            }
        }
    }
    out
}

/// Common constructions used throughout the tests and the book.
pub mod named {
    use super::*;

    pub fn complete(n: u32) -> Graph {
        let mut g = Graph::with_vertices((0..n).map(Vertex));
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(Vertex(u), Vertex(v));
            }
        }
        g
    }

    pub fn cycle(n: u32) -> Graph {
        Graph::from_edges((0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: u32) -> Graph {
        let mut g = Graph::with_vertices((0..n).map(Vertex));
        for i in 1..n {
            g.add_edge(Vertex(i - 1), Vertex(i));
        }
        g
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: u32, n: u32) -> Graph {
        let mut g = Graph::new();
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(Vertex(u), Vertex(v));
            }
        }
        g
    }

    /// `K_{2,2,2}`: vertex `i` is opposite vertex `i + 3`.
    pub fn octahedron() -> Graph {
        let mut g = complete(6);
        for i in 0..3 {
            g.remove_edge(Vertex(i), Vertex(i + 3));
        }
        g
    }

    /// Wheel with hub `0` and rim `1..=n`.
    pub fn wheel(n: u32) -> Graph {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_edge(Vertex(0), Vertex(i));
            g.add_edge(Vertex(i), Vertex(i % n + 1));
        }
        g
    }

    /// Cube graph: vertices `0..8` as 3-bit strings, edges between Hamming neighbours.
    pub fn cube() -> Graph {
        let mut g = Graph::new();
        for u in 0..8u32 {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    g.add_edge(Vertex(u), Vertex(v));
                }
            }
        }
        g
    }

    /// Square antiprism: top square `0..4`, bottom square `4..8`.
    pub fn square_antiprism() -> Graph {
        let mut g = Graph::new();
        for i in 0..4 {
            g.add_edge(Vertex(i), Vertex((i + 1) % 4));
            g.add_edge(Vertex(4 + i), Vertex(4 + (i + 1) % 4));
            g.add_edge(Vertex(i), Vertex(4 + i));
            g.add_edge(Vertex(i), Vertex(4 + (i + 1) % 4));
        }
        g
    }
}
