//! Two disjoint paths, or a planar certificate that they cannot exist.

use serde::{Deserialize, Serialize};

use crate::bits::{BitGraph, Mask};
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle, Vertex, VertexSet};
use crate::minors::{verify_witness, MinorWitness};
use crate::obstructions::{check_web, embed_web, Obstruction, ObstructionFault, PlusGraph, Shape};
use crate::planarity::PlanarEmbedding;

/// An `s1 t1`-path and an `s2 t2`-path with no common vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linkage {
    pub path1: Vec<Vertex>,
    pub path2: Vec<Vertex>,
}

impl Linkage {
    pub fn verify(&self, g: &Graph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> bool {
        let ends = |p: &[Vertex], s, t| p.first() == Some(&s) && p.last() == Some(&t);
        let on1: VertexSet = self.path1.iter().copied().collect();
        ends(&self.path1, s1, t1)
            && ends(&self.path2, s2, t2)
            && g.is_path(&self.path1)
            && g.is_path(&self.path2)
            && self.path2.iter().all(|v| !on1.contains(v))
    }
}

/// A graph containing the input as a spanning subgraph, built on a planar
/// base whose outer face is `outer` in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebCertificate {
    pub plus: PlusGraph,
    pub embedding: PlanarEmbedding,
    pub outer: [Vertex; 4],
}

impl WebCertificate {
    /// Web structure alone, without reference to an input graph.
    pub fn check_structure(&self) -> Result<(), ObstructionFault> {
        self.plus.check()?;
        check_web(&self.plus.base, self.outer, &self.embedding)
    }

    /// Reads the certificate as a class-D obstruction with the terminals
    /// nominated.
    pub fn into_obstruction(self) -> Result<Obstruction> {
        let mut nominated = self.outer;
        nominated.sort();
        let ob = Obstruction {
            plus: self.plus,
            nominated,
            shape: Shape::D {
                outer: self.outer,
                embedding: self.embedding,
            },
        };
        ob.check_structure().map_err(|f| Error::internal(f.to_string()))?;
        Ok(ob)
    }
}

/// Checks a web certificate against `g` and the terminal order.
pub fn verify_web(g: &Graph, outer: [Vertex; 4], cert: &WebCertificate) -> bool {
    cert.outer == outer && cert.check_structure().is_ok() && g.is_spanning_subgraph_of(&cert.plus.full())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkageOutcome {
    Linkage(Linkage),
    Web(WebCertificate),
}

fn terminals(g: &Graph, ts: [Vertex; 4]) -> Result<()> {
    let distinct: VertexSet = ts.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(Error::invalid("terminals must be distinct"));
    }
    if let Some(v) = ts.iter().find(|v| !g.contains(**v)) {
        return Err(Error::invalid(format!("terminal {v} is not in the graph")));
    }
    if g.vertex_count() > 64 {
        return Err(Error::ResourceLimit(format!(
            "linkage search holds at most 64 vertices, got {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

struct Search<'a> {
    bg: &'a BitGraph,
    all: Mask,
    t1: usize,
    s2: usize,
    t2: usize,
}

impl Search<'_> {
    /// Extends the induced path `path`; `closed` holds the path and the
    /// neighbours of all but its last vertex.
    fn extend(&self, path: &mut Vec<usize>, used: Mask, closed: Mask) -> Option<Vec<Vertex>> {
        let end = *path.last().expect("path starts at s1");
        let free = self.all & !used;
        if self.bg.reach(1 << self.s2, free) & (1 << self.t2) == 0 {
            return None;
        }
        if end == self.t1 {
            return self.bg.path(self.s2, self.t2, free);
        }
        let forbidden = (1 << self.s2) | (1 << self.t2);
        let open = self.all & !closed & !forbidden;
        if self.bg.reach(1 << end, open | 1 << end) & (1 << self.t1) == 0 {
            return None;
        }
        let mut next = self.bg.adj[end] & open;
        // Reaching t1 directly is always at least as good as a detour.
        if next & (1 << self.t1) != 0 {
            next = 1 << self.t1;
        }
        let closed = closed | self.bg.adj[end];
        while next != 0 {
            let y = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(y);
            if let Some(p2) = self.extend(path, used | 1 << y, closed | 1 << y) {
                return Some(p2);
            }
            path.pop();
        }
        None
    }
}

fn search(g: &Graph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> Option<Linkage> {
    let bg = BitGraph::new(g);
    let s = Search {
        bg: &bg,
        all: if bg.verts.len() == 64 { Mask::MAX } else { (1 << bg.verts.len()) - 1 },
        t1: bg.index[&t1],
        s2: bg.index[&s2],
        t2: bg.index[&t2],
    };
    let start = bg.index[&s1];
    let mut path = vec![start];
    let path2 = s.extend(&mut path, 1 << start, 1 << start)?;
    Some(Linkage {
        path1: path.into_iter().map(|i| bg.verts[i]).collect(),
        path2,
    })
}

/// Searches for an `(s1 t1, s2 t2)`-linkage only.
pub fn has_linkage(g: &Graph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> Result<Option<Linkage>> {
    terminals(g, [s1, t1, s2, t2])?;
    Ok(search(g, s1, t1, s2, t2))
}

/// Either a linkage, or a web certificate with outer face `(s1, s2, t1, t2)`.
pub fn find_linkage(g: &Graph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> Result<LinkageOutcome> {
    terminals(g, [s1, t1, s2, t2])?;
    if let Some(l) = search(g, s1, t1, s2, t2) {
        return Ok(LinkageOutcome::Linkage(l));
    }
    let outer = [s1, s2, t1, t2];
    let non_edges = non_edges(g);
    for order in [false, true] {
        let mut h = g.clone();
        let mut candidates = non_edges.clone();
        if order {
            candidates.reverse();
        }
        for (u, v) in candidates {
            h.add_edge(u, v);
            if search(&h, s1, t1, s2, t2).is_some() {
                h.remove_edge(u, v);
            }
        }
        if let Some(cert) = recognise_web(&h, outer) {
            if verify_web(g, outer, &cert) {
                return Ok(LinkageOutcome::Web(cert));
            }
        }
    }
    Err(Error::internal("no linkage, yet the saturated graph is not a web"))
}

fn non_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|&x| set.iter().all(|&y| x == y || g.has_edge(x, y)))
}

/// Reads a linkage-free graph with no addable edge as a web: the simplicial
/// non-terminals form the cliques, the rest must be a web core.
fn recognise_web(h: &Graph, outer: [Vertex; 4]) -> Option<WebCertificate> {
    let terms: VertexSet = outer.iter().copied().collect();
    let xs: VertexSet = h
        .vertices()
        .filter(|v| !terms.contains(v) && is_clique(h, h.neighbor_set(*v)))
        .collect();
    let mut plus = PlusGraph::new(h.without(&xs));
    for comp in h.induced(&xs).components() {
        let attach: VertexSet = comp
            .iter()
            .flat_map(|&x| h.neighbors(x))
            .filter(|y| !comp.contains(y))
            .collect();
        if attach.len() != 3 {
            return None;
        }
        let a: Vec<Vertex> = attach.into_iter().collect();
        let t = Triangle::new(a[0], a[1], a[2]);
        if !t.is_in(&plus.base) {
            return None;
        }
        plus.attach(t, comp);
    }
    let mut core = plus.base.vertex_set();
    crate::obstructions::absorb_separating(&mut plus, &mut core, outer)?;
    let embedding = embed_web(&plus.base, outer)?;
    let cert = WebCertificate { plus, embedding, outer };
    cert.check_structure().is_ok().then_some(cert)
}

/// An `(a c, b d)`-linkage routed inside `A ∪ C` and `B ∪ D` of a rooted
/// `K4`-minor with roots `[a, b, c, d]`.
pub fn linkage_from_witness(g: &Graph, roots: [Vertex; 4], w: &MinorWitness) -> Result<Linkage> {
    if !verify_witness(g, &roots, w) {
        return Err(Error::invalid("witness does not verify"));
    }
    let [a, b, c, d] = roots;
    let route = |x: Vertex, y: Vertex| -> Result<Vec<Vertex>> {
        let mut within: VertexSet = w.branch(x).cloned().unwrap_or_default();
        within.extend(w.branch(y).cloned().unwrap_or_default());
        g.induced(&within)
            .shortest_path(x, y, &VertexSet::new())
            .ok_or_else(|| Error::internal("branch sets are not connected"))
    };
    Ok(Linkage {
        path1: route(a, c)?,
        path2: route(b, d)?,
    })
}

/// Every `(s1 t1, s2 t2)`-linkage question on `g` answered by brute force
/// over vertex subsets; only for small test graphs.
#[doc(hidden)]
pub fn brute_force_linkage(g: &Graph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> bool {
    let bg = BitGraph::new(g);
    let n = bg.verts.len();
    let (a, b, c, d) = (bg.bit(s1), bg.bit(t1), bg.bit(s2), bg.bit(t2));
    let all: Mask = (1 << n) - 1;
    (0..=all).any(|p: Mask| {
        p & (a | b) == (a | b)
            && p & (c | d) == 0
            && bg.reach(a, p) & b != 0
            && bg.reach(c, all & !p) & d != 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn v(x: u32) -> Vertex {
        Vertex(x)
    }

    #[test]
    fn k4_links_by_edges() {
        let g = complete(4);
        match find_linkage(&g, v(0), v(1), v(2), v(3)).unwrap() {
            LinkageOutcome::Linkage(l) => {
                assert_eq!(l.path1, vec![v(0), v(1)]);
                assert_eq!(l.path2, vec![v(2), v(3)]);
            }
            other => panic!("expected a linkage, got {other:?}"),
        }
    }

    #[test]
    fn crossing_pairs_on_a_square() {
        // s1=0, s2=1, t1=2, t2=3 around the cycle.
        let g = cycle(4);
        match find_linkage(&g, v(0), v(2), v(1), v(3)).unwrap() {
            LinkageOutcome::Web(cert) => {
                assert!(verify_web(&g, [v(0), v(1), v(2), v(3)], &cert));
                assert!(cert.plus.cliques.is_empty());
            }
            other => panic!("expected a web, got {other:?}"),
        }
    }

    #[test]
    fn k23_links_through_the_other_side() {
        let g = complete_bipartite(3, 2);
        let LinkageOutcome::Linkage(l) = find_linkage(&g, v(0), v(1), v(2), v(3)).unwrap() else {
            panic!("expected a linkage");
        };
        assert_eq!(l.path1, vec![v(0), v(4), v(1)]);
        assert_eq!(l.path2, vec![v(2), v(3)]);
    }

    #[test]
    fn terminals_must_differ() {
        let g = complete(4);
        assert!(matches!(find_linkage(&g, v(0), v(0), v(2), v(3)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn web_with_an_attachment() {
        // Wheel with a pendant triangle hung on hub-rim triangle 0,1,2.
        let mut g = wheel(4);
        g.add_edge(v(5), v(0));
        g.add_edge(v(5), v(1));
        let outer = [v(1), v(2), v(3), v(4)];
        let LinkageOutcome::Web(cert) = find_linkage(&g, v(1), v(3), v(2), v(4)).unwrap() else {
            panic!("expected a web");
        };
        assert!(verify_web(&g, outer, &cert));
        assert!(!cert.plus.base.contains(v(5)));
    }

    #[test]
    fn witness_routes_inside_branch_sets() {
        let g = complete(4);
        let w = MinorWitness::singletons(&[v(0), v(1), v(2), v(3)]);
        let l = linkage_from_witness(&g, [v(0), v(1), v(2), v(3)], &w).unwrap();
        assert_eq!(l.path1, vec![v(0), v(2)]);
        assert_eq!(l.path2, vec![v(1), v(3)]);
    }
}
