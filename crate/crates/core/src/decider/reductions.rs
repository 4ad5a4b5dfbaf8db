//! Smaller instances that answer the same question.

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{RootedInstance, Separation};
use crate::minors::MinorWitness;
use crate::obstructions::PlusGraph;

/// The base of `pg`; rooted minors of `pg.full()` and of the base coincide.
pub fn reduce_plus(pg: &PlusGraph, roots: [Vertex; 4]) -> Result<Graph> {
    if let Some(r) = roots.iter().find(|r| !pg.base.contains(**r)) {
        return Err(Error::invalid(format!("root {r} is not a base vertex")));
    }
    Ok(pg.base.clone())
}

/// The two sides of a `(2,2)`-separation of order two, each with the cut
/// pair joined and nominated.
pub fn split_22_separation(inst: &RootedInstance, sep: &Separation) -> Result<(RootedInstance, RootedInstance)> {
    let g = inst.graph();
    if !is_k_connected(g, 2) {
        return Err(Error::invalid("graph is not 2-connected"));
    }
    let roots = inst.roots();
    let cut: Vec<Vertex> = sep.separator.iter().copied().collect();
    let side = |s: &VertexSet| -> Vec<Vertex> { roots.iter().copied().filter(|r| s.contains(r)).collect() };
    let (l, r) = (side(&sep.left), side(&sep.right));
    if cut.len() != 2 || l.len() != 2 || r.len() != 2 || cut.iter().any(|c| inst.is_root(*c)) {
        return Err(Error::invalid("not a (2,2)-separation of order two"));
    }
    let (u, v) = (cut[0], cut[1]);
    let mut union = sep.left.clone();
    union.extend(sep.right.iter().copied());
    if union != g.vertex_set() || sep.left.intersection(&sep.right).count() != 2 {
        return Err(Error::invalid("separation does not cover the graph"));
    }
    let half = |keep: &VertexSet, rs: [Vertex; 4]| {
        let mut h = g.induced(keep);
        h.add_edge(u, v);
        RootedInstance::new(h, rs)
    };
    Ok((half(&sep.left, [l[0], l[1], u, v])?, half(&sep.right, [u, v, r[0], r[1]])?))
}

/// Two roots sharing the neighbourhood `{u, v}` of non-roots, folded away.
#[derive(Clone, Debug)]
pub struct EarReduction {
    pub instance: RootedInstance,
    pub a: Vertex,
    pub b: Vertex,
    pub u: Vertex,
    pub v: Vertex,
}

impl EarReduction {
    /// A minor of the reduced instance, pulled back by contracting `au`, `bv`.
    pub fn lift(&self, w: &MinorWitness) -> MinorWitness {
        let mut sets = w.branch_sets.clone();
        let mut su = sets.remove(&self.u).unwrap_or_default();
        let mut sv = sets.remove(&self.v).unwrap_or_default();
        su.insert(self.a);
        sv.insert(self.b);
        sets.insert(self.a, su);
        sets.insert(self.b, sv);
        MinorWitness::new(sets)
    }
}

pub fn reduce_ear(inst: &RootedInstance) -> Option<EarReduction> {
    let g = inst.graph();
    let roots = inst.roots();
    for (i, &a) in roots.iter().enumerate() {
        for &b in &roots[i + 1..] {
            let na = g.neighbor_set(a);
            if na.len() != 2 || na != g.neighbor_set(b) || na.iter().any(|x| inst.is_root(*x)) {
                continue;
            }
            let (u, v) = {
                let mut it = na.iter().copied();
                (it.next().unwrap(), it.next().unwrap())
            };
            let mut h = g.without(&VertexSet::from([a, b]));
            h.add_edge(u, v);
            let rs = roots.map(|r| if r == a { u } else if r == b { v } else { r });
            let instance = RootedInstance::new(h, rs).ok()?;
            return Some(EarReduction { instance, a, b, u, v });
        }
    }
    None
}
