//! From a cycle through the roots and a crossing linkage to a rooted minor.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::linkage::Linkage;
use crate::minors::{check_witness, MinorWitness};

/// The current minor: each vertex stands for a connected bag of the input.
struct State {
    cycle: Vec<Vertex>,
    p: Vec<Vertex>,
    q: Vec<Vertex>,
    bags: BTreeMap<Vertex, VertexSet>,
    roots: [Vertex; 4],
}

/// Replaces `gone` by `keep`; a walk that now meets `keep` twice is cut short.
fn merge_path(walk: &mut Vec<Vertex>, keep: Vertex, gone: Vertex) {
    for x in walk.iter_mut() {
        if *x == gone {
            *x = keep;
        }
    }
    if let (Some(i), Some(j)) = (
        walk.iter().position(|&x| x == keep),
        walk.iter().rposition(|&x| x == keep),
    ) {
        walk.drain(i + 1..=j);
    }
}

/// As [`merge_path`] for a cycle, keeping the part that holds every root.
fn merge_cycle(cycle: &mut Vec<Vertex>, keep: Vertex, gone: Vertex, roots: &[Vertex; 4]) -> Result<()> {
    for x in cycle.iter_mut() {
        if *x == gone {
            *x = keep;
        }
    }
    let hits: Vec<usize> = (0..cycle.len()).filter(|&i| cycle[i] == keep).collect();
    if hits.len() == 2 {
        let (i, j) = (hits[0], hits[1]);
        let inner: Vec<Vertex> = cycle[i..j].to_vec();
        let outer: Vec<Vertex> = cycle[j..].iter().chain(cycle[..i].iter()).copied().collect();
        let has_all = |c: &[Vertex]| roots.iter().all(|r| c.contains(r));
        *cycle = if has_all(&inner) {
            inner
        } else if has_all(&outer) {
            outer
        } else {
            return Err(Error::internal("contraction split the roots over two cycles"));
        };
    }
    Ok(())
}

impl State {
    fn edges(&self) -> Vec<Edge> {
        let n = self.cycle.len();
        let mut es: Vec<Edge> = (0..n).map(|i| Edge::new(self.cycle[i], self.cycle[(i + 1) % n])).collect();
        for path in [&self.p, &self.q] {
            es.extend(path.windows(2).map(|w| Edge::new(w[0], w[1])));
        }
        es.sort();
        es.dedup();
        es
    }

    fn graph(&self) -> Graph {
        let mut g = Graph::new();
        for e in self.edges() {
            g.add_edge(e.0, e.1);
        }
        g
    }

    fn is_root(&self, v: Vertex) -> bool {
        self.roots.contains(&v)
    }

    /// Contracts edge `xy`, keeping a root if there is one and else `keep`.
    fn contract(&mut self, x: Vertex, y: Vertex, keep: Vertex) -> Result<()> {
        let (keep, gone) = if self.is_root(y) { (y, x) } else if self.is_root(x) { (x, y) } else if keep == x { (x, y) } else { (y, x) };
        let bag = self.bags.remove(&gone).unwrap_or_default();
        self.bags.entry(keep).or_default().extend(bag);
        merge_cycle(&mut self.cycle, keep, gone, &self.roots)?;
        merge_path(&mut self.p, keep, gone);
        merge_path(&mut self.q, keep, gone);
        Ok(())
    }

    fn witness(&self, sets: [VertexSet; 4]) -> MinorWitness {
        let mut out = BTreeMap::new();
        for (r, s) in self.roots.iter().zip(sets) {
            let bag: VertexSet = s.iter().flat_map(|x| self.bags[x].iter().copied()).collect();
            out.insert(*r, bag);
        }
        MinorWitness::new(out)
    }

    /// Positions of the cycle from `d` through `a` to `b`.
    fn near_a(&self) -> VertexSet {
        let [a, b, _, d] = self.roots;
        let n = self.cycle.len();
        let ia = self.cycle.iter().position(|&x| x == a).expect("a is on the cycle");
        let mut out = VertexSet::from([a]);
        for step in [1, n - 1] {
            let stop = if step == 1 { b } else { d };
            let mut i = ia;
            loop {
                i = (i + step) % n;
                out.insert(self.cycle[i]);
                if self.cycle[i] == stop {
                    break;
                }
            }
        }
        out
    }

    /// One reduction step; `Some` once the four labelled parts are found.
    fn step(&mut self, g: &Graph) -> Result<Option<MinorWitness>> {
        let h = self.graph();
        let [a, _, c, _] = self.roots;
        if h.vertex_count() == 4 {
            let sets = self.roots.map(|r| VertexSet::from([r]));
            return Ok(Some(self.witness(sets)));
        }
        if let Some(v) = h.vertices().find(|&v| h.degree(v) <= 2) {
            // Contract along the path through v, so P and Q stay disjoint.
            let along: Vec<Vertex> = [&self.p, &self.q]
                .into_iter()
                .flat_map(|path| path.windows(2).filter_map(|e| if e[0] == v { Some(e[1]) } else if e[1] == v { Some(e[0]) } else { None }))
                .collect();
            let candidates: Vec<Vertex> = if along.is_empty() { h.neighbors(v).collect() } else { along };
            let w = candidates
                .into_iter()
                .min_by_key(|&w| (self.is_root(w), w))
                .filter(|&w| !(self.is_root(v) && self.is_root(w)))
                .ok_or_else(|| Error::internal("degree-two vertex between two roots"))?;
            self.contract(v, w, w)?;
            return Ok(None);
        }
        let on_p: VertexSet = self.p.iter().copied().collect();
        let on_q: VertexSet = self.q.iter().copied().collect();
        let n = self.cycle.len();
        let same = (0..n)
            .map(|i| (self.cycle[i], self.cycle[(i + 1) % n]))
            .filter(|&(x, y)| (on_p.contains(&x) && on_p.contains(&y)) || (on_q.contains(&x) && on_q.contains(&y)))
            .min_by_key(|&(x, y)| (x.min(y), x.max(y)));
        if let Some((x, y)) = same {
            self.contract(x, y, x.min(y))?;
            return Ok(None);
        }
        let v = self.p[1];
        let near = self.near_a();
        if near.contains(&v) {
            self.contract(a, v, a)?;
            return Ok(None);
        }
        let w = self.p[self.p.len() - 2];
        // By symmetry the arcs around c play the same part.
        if !near.contains(&w) {
            self.contract(c, w, c)?;
            return Ok(None);
        }
        // Colours alternate: split P and Q into labelled subpaths.
        for i in 1..self.p.len() {
            for j in 1..self.q.len() {
                let sets = [
                    self.p[..i].iter().copied().collect::<VertexSet>(),
                    self.q[..j].iter().copied().collect(),
                    self.p[i..].iter().copied().collect(),
                    self.q[j..].iter().copied().collect(),
                ];
                let w = self.witness(sets);
                if check_witness(g, &self.roots, &w).is_ok() {
                    return Ok(Some(w));
                }
            }
        }
        Err(Error::internal("no labelling of the alternating paths gives a minor"))
    }
}

/// Rooted minor from a cycle `cycle` meeting the roots in the order
/// `a, b, c, d` and an `(a c, b d)`-linkage.
pub fn cycle_linkage_to_minor(g: &Graph, cycle: &[Vertex], roots: [Vertex; 4], l: &Linkage) -> Result<MinorWitness> {
    cycle_linkage_steps(g, cycle, roots, l).map(|(w, _)| w)
}

/// As [`cycle_linkage_to_minor`], also counting the reduction steps taken.
pub fn cycle_linkage_steps(
    g: &Graph,
    cycle: &[Vertex],
    roots: [Vertex; 4],
    l: &Linkage,
) -> Result<(MinorWitness, usize)> {
    let [a, b, c, d] = roots;
    if !g.is_cycle(cycle) {
        return Err(Error::invalid("not a cycle of the graph"));
    }
    let pos: Vec<usize> = roots
        .iter()
        .map(|r| cycle.iter().position(|x| x == r))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::invalid("a root is missing from the cycle"))?;
    let n = cycle.len();
    let forward = (0..4).all(|i| (pos[(i + 1) % 4] + n - pos[i]) % n < (pos[(i + 2) % 4] + n - pos[i]) % n);
    let backward = (0..4).all(|i| (pos[i] + n - pos[(i + 1) % 4]) % n < (pos[i] + n - pos[(i + 2) % 4]) % n);
    if !forward && !backward {
        return Err(Error::invalid("the cycle does not meet the roots in order"));
    }
    if !l.verify(g, a, c, b, d) {
        return Err(Error::invalid("not an (ac, bd)-linkage"));
    }
    let mut state = State {
        cycle: cycle.to_vec(),
        p: l.path1.clone(),
        q: l.path2.clone(),
        bags: BTreeMap::new(),
        roots,
    };
    for e in state.edges() {
        for x in [e.0, e.1] {
            state.bags.entry(x).or_insert_with(|| VertexSet::from([x]));
        }
    }
    // Each step removes a vertex, so the loop is bounded.
    for steps in 1..=g.vertex_count() + 1 {
        if let Some(w) = state.step(g)? {
            return check_witness(g, &roots, &w)
                .map(|_| (w, steps))
                .map_err(|f| Error::internal(format!("lemma construction failed: {f}")));
        }
    }
    Err(Error::internal("reduction did not terminate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn v(x: u32) -> Vertex {
        Vertex(x)
    }

    #[test]
    fn k4_gives_singletons() {
        let g = complete(4);
        let l = Linkage {
            path1: vec![v(0), v(2)],
            path2: vec![v(1), v(3)],
        };
        let w = cycle_linkage_to_minor(&g, &[v(0), v(1), v(2), v(3)], [v(0), v(1), v(2), v(3)], &l).unwrap();
        assert_eq!(w, MinorWitness::singletons(&[v(0), v(1), v(2), v(3)]));
    }

    #[test]
    fn square_with_two_paths() {
        // a=0 b=1 c=2 d=3, p=4 on a-c, q=5 on b-d.
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 5), (5, 3)]);
        let l = Linkage {
            path1: vec![v(0), v(4), v(2)],
            path2: vec![v(1), v(5), v(3)],
        };
        let roots = [v(0), v(1), v(2), v(3)];
        let w = cycle_linkage_to_minor(&g, &roots, roots, &l).unwrap();
        assert!(crate::minors::verify_witness(&g, &roots, &w));
    }

    #[test]
    fn eight_cycle_with_chords() {
        // Cycle 0..8 with a=0, b=2, c=4, d=6.
        let g = Graph::from_edges([
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0),
            (0, 3), (3, 7), (7, 4), (2, 5), (5, 1), (1, 6),
        ]);
        let roots = [v(0), v(2), v(4), v(6)];
        let l = Linkage {
            path1: vec![v(0), v(3), v(7), v(4)],
            path2: vec![v(2), v(5), v(1), v(6)],
        };
        assert!(l.verify(&g, v(0), v(4), v(2), v(6)));
        let cyc: Vec<Vertex> = (0..8).map(v).collect();
        let w = cycle_linkage_to_minor(&g, &cyc, roots, &l).unwrap();
        assert!(crate::minors::verify_witness(&g, &roots, &w));
    }

    #[test]
    fn wrong_order_is_rejected() {
        let g = complete(4);
        let l = Linkage {
            path1: vec![v(0), v(2)],
            path2: vec![v(1), v(3)],
        };
        let err = cycle_linkage_to_minor(&g, &[v(0), v(2), v(1), v(3)], [v(0), v(1), v(2), v(3)], &l);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }
}
