//! Branch-set witnesses, the exhaustive oracle and the rooted-K3 dichotomy.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{BitGraph, Mask};
use crate::connectivity::blocks;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Environment variable that overrides the oracle's vertex limit.
pub const ORACLE_LIMIT_VAR: &str = "ROOTED_K4_ORACLE_MAX";
pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Branch sets keyed by their root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    #[serde(with = "branch_list")]
    pub branch_sets: BTreeMap<Vertex, VertexSet>,
}

// A list of pairs, since integer map keys do not survive tagged enums.
mod branch_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        root: Vertex,
        branch: VertexSet,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vertex, VertexSet>, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<Entry> = m.iter().map(|(&root, b)| Entry { root, branch: b.clone() }).collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vertex, VertexSet>, D::Error> {
        Ok(Vec::<Entry>::deserialize(d)?.into_iter().map(|e| (e.root, e.branch)).collect())
    }
}

impl MinorWitness {
    pub fn new(branch_sets: BTreeMap<Vertex, VertexSet>) -> Self {
        MinorWitness { branch_sets }
    }

    pub fn singletons(roots: &[Vertex]) -> Self {
        MinorWitness::new(roots.iter().map(|&r| (r, VertexSet::from([r]))).collect())
    }

    pub fn roots(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.branch_sets.keys().copied()
    }

    pub fn branch(&self, root: Vertex) -> Option<&VertexSet> {
        self.branch_sets.get(&root)
    }

    /// The root whose branch set holds `v`.
    pub fn owner(&self, v: Vertex) -> Option<Vertex> {
        self.branch_sets
            .iter()
            .find(|(_, s)| s.contains(&v))
            .map(|(&r, _)| r)
    }
}

/// Why a witness fails to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessFault {
    RootsDiffer,
    RootOutsideBranch(Vertex),
    UnknownVertex(Vertex),
    Overlap(Vertex),
    Disconnected(Vertex),
    NotAdjacent(Vertex, Vertex),
}

impl fmt::Display for WitnessFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessFault::RootsDiffer => write!(f, "branch sets are not keyed by the roots"),
            WitnessFault::RootOutsideBranch(r) => write!(f, "root {r} is not in its branch set"),
            WitnessFault::UnknownVertex(v) => write!(f, "vertex {v} is not in the graph"),
            WitnessFault::Overlap(v) => write!(f, "vertex {v} lies in two branch sets"),
            WitnessFault::Disconnected(r) => write!(f, "branch set of {r} is disconnected"),
            WitnessFault::NotAdjacent(r, s) => write!(f, "branch sets of {r} and {s} do not touch"),
        }
    }
}

/// Checks every witness condition and reports the first violated one.
pub fn check_witness(g: &Graph, roots: &[Vertex], w: &MinorWitness) -> Result<(), WitnessFault> {
    let keys: VertexSet = w.roots().collect();
    if keys.len() != roots.len() || roots.iter().any(|r| !keys.contains(r)) {
        return Err(WitnessFault::RootsDiffer);
    }
    let mut seen = VertexSet::new();
    for (&r, set) in &w.branch_sets {
        if !set.contains(&r) {
            return Err(WitnessFault::RootOutsideBranch(r));
        }
        for &v in set {
            if !g.contains(v) {
                return Err(WitnessFault::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(WitnessFault::Overlap(v));
            }
        }
        if !g.induces_connected(set) {
            return Err(WitnessFault::Disconnected(r));
        }
    }
    let sets: Vec<(&Vertex, &VertexSet)> = w.branch_sets.iter().collect();
    for (i, (r, x)) in sets.iter().enumerate() {
        for (s, y) in &sets[i + 1..] {
            if !x.iter().any(|&u| g.neighbors(u).any(|n| y.contains(&n))) {
                return Err(WitnessFault::NotAdjacent(**r, **s));
            }
        }
    }
    Ok(())
}

pub fn verify_witness(g: &Graph, roots: &[Vertex], w: &MinorWitness) -> bool {
    check_witness(g, roots, w).is_ok()
}

/// The oracle's vertex limit, read from [`ORACLE_LIMIT_VAR`] when set.
pub fn oracle_limit() -> usize {
    std::env::var(ORACLE_LIMIT_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

/// Exhaustive search for a minor rooted at `roots` (three or four of them),
/// within the limit from [`oracle_limit`].
pub fn oracle_rooted_minor(g: &Graph, roots: &[Vertex]) -> Result<Option<MinorWitness>> {
    oracle_with_limit(g, roots, oracle_limit())
}

pub fn oracle_with_limit(g: &Graph, roots: &[Vertex], limit: usize) -> Result<Option<MinorWitness>> {
    if !(3..=4).contains(&roots.len()) {
        return Err(Error::invalid("the oracle takes three or four roots"));
    }
    let distinct: VertexSet = roots.iter().copied().collect();
    if distinct.len() != roots.len() || roots.iter().any(|&r| !g.contains(r)) {
        return Err(Error::invalid("roots must be distinct vertices of the graph"));
    }
    let n = g.vertex_count();
    if n > limit.min(64) {
        return Err(Error::ResourceLimit(format!(
            "oracle limited to {} vertices, graph has {n}",
            limit.min(64)
        )));
    }
    let bg = BitGraph::new(g);
    let root_bits: Vec<Mask> = roots.iter().map(|&r| bg.bit(r)).collect();
    let root_mask: Mask = root_bits.iter().fold(0, |a, b| a | b);
    // Free vertices in breadth-first order from the roots, so pruning bites early.
    let mut order = Vec::new();
    let mut seen = root_mask;
    let mut queue: VecDeque<usize> = (0..n).filter(|i| root_mask >> i & 1 == 1).collect();
    while let Some(x) = queue.pop_front() {
        let mut nb = bg.adj[x] & !seen;
        while nb != 0 {
            let y = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= 1 << y;
            order.push(y);
            queue.push_back(y);
        }
    }
    // Vertices unreachable from every root can never help.
    let mut search = Search {
        bg: &bg,
        order,
        sets: root_bits,
    };
    let free = search.order.iter().fold(0, |m, &i| m | 1 << i);
    if !search.run(0, free) {
        return Ok(None);
    }
    let w = MinorWitness::new(
        roots
            .iter()
            .zip(&search.sets)
            .map(|(&r, &m)| (r, bg.to_set(m)))
            .collect(),
    );
    debug_assert!(verify_witness(g, roots, &w));
    Ok(Some(w))
}

struct Search<'a> {
    bg: &'a BitGraph,
    order: Vec<usize>,
    sets: Vec<Mask>,
}

impl Search<'_> {
    fn complete(&self) -> bool {
        let k = self.sets.len();
        (0..k).all(|i| self.bg.connected(self.sets[i]))
            && (0..k).all(|i| {
                let n = self.bg.neighbourhood(self.sets[i]);
                (i + 1..k).all(|j| n & self.sets[j] != 0)
            })
    }

    fn feasible(&self, free: Mask) -> bool {
        let k = self.sets.len();
        let grown: Vec<Mask> = self.sets.iter().map(|&s| s | free).collect();
        for i in 0..k {
            let s = self.sets[i];
            if self.bg.reach(s & s.wrapping_neg(), grown[i]) & s != s {
                return false;
            }
        }
        (0..k).all(|i| {
            let n = self.bg.neighbourhood(grown[i]);
            (i + 1..k).all(|j| n & grown[j] != 0)
        })
    }

    /// `free` holds the vertices not yet decided.
    fn run(&mut self, depth: usize, free: Mask) -> bool {
        if self.complete() {
            return true;
        }
        if depth == self.order.len() || !self.feasible(free) {
            return false;
        }
        let v = self.order[depth];
        let rest = free & !(1 << v);
        for i in 0..self.sets.len() {
            // Only join a branch set the vertex touches or could reach later.
            if self.bg.adj[v] & (self.sets[i] | rest) == 0 {
                continue;
            }
            self.sets[i] |= 1 << v;
            if self.run(depth + 1, rest) {
                return true;
            }
            self.sets[i] &= !(1 << v);
        }
        self.run(depth + 1, rest)
    }
}

/// Certifies that no rooted K3-minor exists: every component of `G - apex`
/// holds at most one of the roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K3Certificate {
    pub apex: Vertex,
}

pub fn verify_k3_certificate(g: &Graph, roots: [Vertex; 3], cert: &K3Certificate) -> bool {
    if !g.contains(cert.apex) {
        return false;
    }
    let blocked = VertexSet::from([cert.apex]);
    roots.iter().enumerate().all(|(i, &r)| {
        r == cert.apex || {
            let comp = g.reachable_from(r, &blocked);
            roots[i + 1..].iter().all(|s| !comp.contains(s))
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum K3Outcome {
    Witness(MinorWitness),
    Apex(K3Certificate),
}

/// Either a minor rooted at `a, b, c` or an apex certificate.
pub fn rooted_k3(g: &Graph, a: Vertex, b: Vertex, c: Vertex) -> Result<K3Outcome> {
    let roots = [a, b, c];
    if a == b || b == c || a == c {
        return Err(Error::invalid("rooted K3 needs three distinct roots"));
    }
    if let Some(r) = roots.iter().find(|r| !g.contains(**r)) {
        return Err(Error::invalid(format!("root {r} is not a vertex of the graph")));
    }
    if let Some(apex) = g
        .vertices()
        .map(|v| K3Certificate { apex: v })
        .find(|cert| verify_k3_certificate(g, roots, cert))
    {
        return Ok(K3Outcome::Apex(apex));
    }
    let w = k3_from_block(g, roots)?;
    if !verify_witness(g, &roots, &w) {
        return Err(Error::internal("rooted K3 construction failed to verify"));
    }
    Ok(K3Outcome::Witness(w))
}

/// With no apex, some block meets three distinct root projections; a cycle
/// through two of them and a two-path fan from the third give the minor.
fn k3_from_block(g: &Graph, roots: [Vertex; 3]) -> Result<MinorWitness> {
    for block in blocks(g).into_iter().filter(|b| b.len() >= 3) {
        let Some(proj) = project(g, &block, roots) else {
            continue;
        };
        let h = g.induced(&block);
        let [x, y, z] = [proj[0].0, proj[1].0, proj[2].0];
        let Some(mut sets) = k3_in_biconnected(&h, x, y, z) else {
            continue;
        };
        for (set, (_, path)) in sets.iter_mut().zip(proj) {
            set.extend(path);
        }
        return Ok(MinorWitness::new(roots.into_iter().zip(sets).collect()));
    }
    Err(Error::internal("no block carries three root projections"))
}

/// For each root, the block vertex it hangs from and a path to it that avoids
/// the rest of the block. `None` unless the three projections are distinct.
fn project(g: &Graph, block: &VertexSet, roots: [Vertex; 3]) -> Option<[(Vertex, Vec<Vertex>); 3]> {
    let mut out = Vec::with_capacity(3);
    for r in roots {
        if block.contains(&r) {
            out.push((r, vec![r]));
            continue;
        }
        let hit = block.iter().find_map(|&w| {
            let mut blocked = block.clone();
            blocked.remove(&w);
            g.shortest_path(r, w, &blocked).map(|p| (w, p))
        })?;
        out.push(hit);
    }
    let [p, q, s]: [(Vertex, Vec<Vertex>); 3] = out.try_into().ok()?;
    (p.0 != q.0 && q.0 != s.0 && p.0 != s.0).then_some([p, q, s])
}

fn k3_in_biconnected(h: &Graph, x: Vertex, y: Vertex, z: Vertex) -> Option<[VertexSet; 3]> {
    let cyc = cycle_through_pair(h, x, y)?;
    let len = cyc.len();
    let pos = |v: Vertex| cyc.iter().position(|&c| c == v);
    let iy = pos(y)?;
    if let Some(iz) = pos(z) {
        // Cut the cycle into three arcs, one starting at each root.
        let mut cuts = [(0, x), (iy, y), (iz, z)];
        cuts.sort();
        let mut sets: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        for k in 0..3 {
            let (from, owner) = cuts[k];
            let to = if k == 2 { len } else { cuts[k + 1].0 };
            sets.insert(owner, cyc[from..to].iter().copied().collect());
        }
        return Some([sets.remove(&x)?, sets.remove(&y)?, sets.remove(&z)?]);
    }
    let on_cycle: VertexSet = cyc.iter().copied().collect();
    let fan = crate::connectivity::disjoint_paths_to_set(h, z, &on_cycle);
    if fan.len() < 2 {
        return None;
    }
    let (p, q) = (pos(*fan[0].last()?)?, pos(*fan[1].last()?)?);
    // X = cyc[0..=i] plus cyc[j..], Y = cyc[i+1..j]; x sits at index 0.
    for i in 0..iy {
        for j in iy + 1..=len {
            let in_x = |k: usize| k <= i || k >= j;
            if in_x(p) != in_x(q) {
                let xs: VertexSet = (0..len).filter(|&k| in_x(k)).map(|k| cyc[k]).collect();
                let ys: VertexSet = (0..len).filter(|&k| !in_x(k)).map(|k| cyc[k]).collect();
                let zs: VertexSet = fan[0]
                    .iter()
                    .chain(&fan[1])
                    .copied()
                    .filter(|v| !on_cycle.contains(v))
                    .collect();
                return Some([xs, ys, zs]);
            }
        }
    }
    None
}

/// A cycle through `x` and `y` in a 2-connected graph, starting at `x`.
fn cycle_through_pair(h: &Graph, x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    let paths = crate::connectivity::disjoint_paths_to_set(
        &{
            // Two internally disjoint x-y paths: fan from x to the neighbours of y.
            let mut g = h.clone();
            g.remove_vertex(y);
            g
        },
        x,
        &h.neighbor_set(y).iter().copied().filter(|&n| n != x).collect(),
    );
    let mut routes: Vec<Vec<Vertex>> = paths.into_iter().take(2).collect();
    if h.has_edge(x, y) && routes.len() == 1 {
        routes.push(vec![x]);
    }
    if routes.len() < 2 {
        return None;
    }
    let mut cyc = routes[0].clone();
    cyc.push(y);
    cyc.extend(routes[1].iter().skip(1).rev());
    Some(cyc)
}
