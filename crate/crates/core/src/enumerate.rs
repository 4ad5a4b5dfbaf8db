//! Isomorphism-free generation of small graph families.
//!
//! General graphs are compared by a canonical adjacency code found by colour
//! refinement plus a search over the remaining symmetries. Embedded
//! 3-connected planar graphs use a cheaper traversal code of the rotation
//! system, which is canonical because their embedding is unique up to mirror.

use std::collections::{BTreeMap, BTreeSet};

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planarity::planar_embed;

/// Largest order [`canonical_form`] accepts.
pub const MAX_CANONICAL: usize = 11;

fn refine(g: &Graph, vs: &[Vertex]) -> Vec<usize> {
    let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut colour: Vec<usize> = vs.iter().map(|&v| g.degree(v)).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = vs
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut ns: Vec<usize> = g.neighbors(v).map(|w| colour[index[&w]]).collect();
                ns.sort();
                (colour[i], ns)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sig
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(r, s)| (s, r))
            .collect();
        let next: Vec<usize> = sig.iter().map(|s| ranks[s]).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = ranks.len();
        colour = next;
        if after == before {
            return colour;
        }
    }
}

fn code(g: &Graph, order: &[Vertex]) -> u64 {
    let mut bits = 0u64;
    let mut k = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

fn next_permutation(xs: &mut [Vertex]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("a larger element exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Canonical adjacency code and the ordering that attains it. Two graphs are
/// isomorphic exactly when their codes agree.
pub fn canonical_form(g: &Graph) -> Result<(u64, Vec<Vertex>)> {
    let vs: Vec<Vertex> = g.vertices().collect();
    if vs.len() > MAX_CANONICAL {
        return Err(Error::ResourceLimit(format!("canonical form limited to {MAX_CANONICAL} vertices")));
    }
    let colour = refine(g, &vs);
    let mut cells: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (i, &v) in vs.iter().enumerate() {
        cells.entry(colour[i]).or_default().push(v);
    }
    let mut cells: Vec<Vec<Vertex>> = cells.into_values().collect();
    let mut best: Option<(u64, Vec<Vertex>)> = None;
    loop {
        let order: Vec<Vertex> = cells.iter().flatten().copied().collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, order));
        }
        // Odometer over the cells' permutations.
        let mut k = 0;
        loop {
            if k == cells.len() {
                return Ok(best.expect("at least one ordering"));
            }
            if next_permutation(&mut cells[k]) {
                break;
            }
            cells[k].sort();
            k += 1;
        }
    }
}

fn canonical_copy(g: &Graph) -> Result<(u64, Graph)> {
    let (c, order) = canonical_form(g)?;
    let map = order.iter().enumerate().map(|(i, &v)| (v, Vertex(i as u32))).collect();
    Ok((c, g.relabel(&map)))
}

/// All connected graphs on `n` vertices up to isomorphism, labelled `0..n`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<u64, Graph> = BTreeMap::from([(0, Graph::with_vertices([Vertex(0)]))]);
    for m in 1..n {
        let mut next = BTreeMap::new();
        // Every connected graph has a vertex whose deletion keeps it connected.
        for g in level.values() {
            for mask in 1u32..1 << m {
                let mut h = g.clone();
                let x = Vertex(m as u32);
                h.add_vertex(x);
                for i in (0..m).filter(|i| mask >> i & 1 == 1) {
                    h.add_edge(x, Vertex(i as u32));
                }
                let (c, h) = canonical_copy(&h)?;
                next.entry(c).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

type Rotation = BTreeMap<Vertex, Vec<Vertex>>;

fn rotation_of(g: &Graph) -> Result<Rotation> {
    planar_embed(g)
        .embedding()
        .map(|e| e.rotation)
        .ok_or_else(|| Error::invalid("graph is not planar"))
}

/// Breadth-first code of a rotation system from the dart `u -> v`.
fn traversal(rot: &Rotation, u: Vertex, v: Vertex, mirror: bool) -> (Vec<u32>, Vec<Vertex>) {
    let mut number: BTreeMap<Vertex, u32> = BTreeMap::from([(u, 0)]);
    let mut order = vec![(u, v)];
    let mut out = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let (x, from) = order[i];
        let mut ring = rot[&x].clone();
        if mirror {
            ring.reverse();
        }
        let start = ring.iter().position(|&y| y == from).expect("dart has a reverse");
        ring.rotate_left(start);
        for y in ring {
            let next = number.len() as u32;
            let k = *number.entry(y).or_insert_with(|| {
                order.push((y, x));
                next
            });
            out.push(k);
        }
        out.push(u32::MAX);
        i += 1;
    }
    (out, order.into_iter().map(|(x, _)| x).collect())
}

/// Canonical code of a connected graph embedded by `rot`; for 3-connected
/// planar graphs it decides isomorphism.
fn embedded_form(rot: &Rotation) -> (Vec<u32>, Vec<Vertex>) {
    let mut best: Option<(Vec<u32>, Vec<Vertex>)> = None;
    for (&u, ring) in rot {
        for &v in ring {
            for mirror in [false, true] {
                let t = traversal(rot, u, v, mirror);
                if best.as_ref().is_none_or(|b| t.0 < b.0) {
                    best = Some(t);
                }
            }
        }
    }
    best.expect("graph has an edge")
}

fn embedded_copy(g: &Graph, rot: &Rotation) -> (Vec<u32>, Graph, Rotation) {
    let (c, order) = embedded_form(rot);
    let map: BTreeMap<Vertex, Vertex> = order.iter().enumerate().map(|(i, &v)| (v, Vertex(i as u32))).collect();
    let rot = rot
        .iter()
        .map(|(v, ring)| (map[v], ring.iter().map(|w| map[w]).collect()))
        .collect();
    (c, g.relabel(&map), rot)
}

/// Maximal planar graphs on `n ≥ 4` vertices up to isomorphism.
pub fn triangulations(n: usize) -> Result<Vec<Graph>> {
    if n < 4 {
        return Err(Error::invalid("triangulations are enumerated from four vertices"));
    }
    let mut seed = crate::graph::named::complete(4);
    for k in 4..n as u32 {
        // Stack a vertex into the face 0 1 2, which stays a face.
        for i in [0, 1, k - 1] {
            seed.add_edge(Vertex(k), Vertex(i));
        }
    }
    // Flips connect all triangulations with the same number of vertices.
    let mut seen: BTreeMap<Vec<u32>, Graph> = BTreeMap::new();
    let (c, g, _) = embedded_copy(&seed, &rotation_of(&seed)?);
    seen.insert(c, g.clone());
    let mut todo = vec![g];
    while let Some(g) = todo.pop() {
        let emb = planar_embed(&g).embedding().ok_or_else(|| Error::internal("flip left the plane"))?;
        let faces = emb.faces();
        for e in g.edges() {
            let apexes: Vec<Vertex> = faces
                .iter()
                .filter(|f| f.contains(&e.0) && f.contains(&e.1))
                .flat_map(|f| f.iter().copied().filter(|&x| x != e.0 && x != e.1))
                .collect();
            let [x, y] = apexes[..] else { continue };
            if g.has_edge(x, y) {
                continue;
            }
            let mut h = g.clone();
            h.remove_edge(e.0, e.1);
            h.add_edge(x, y);
            let (c, h, _) = embedded_copy(&h, &rotation_of(&h)?);
            if !seen.contains_key(&c) {
                seen.insert(c, h.clone());
                todo.push(h);
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// 3-connected planar graphs on `n ≥ 4` vertices up to isomorphism.
pub fn three_connected_planar(n: usize) -> Result<Vec<Graph>> {
    // Each one is a spanning subgraph of a triangulation, and every graph in
    // between is 3-connected too.
    let mut seen: BTreeMap<Vec<u32>, Graph> = BTreeMap::new();
    let mut todo: Vec<(Graph, Rotation)> = Vec::new();
    for t in triangulations(n)? {
        let (c, g, rot) = embedded_copy(&t, &rotation_of(&t)?);
        seen.insert(c, g.clone());
        todo.push((g, rot));
    }
    while let Some((g, rot)) = todo.pop() {
        for e in g.edges().collect::<Vec<_>>() {
            let mut h = g.clone();
            h.remove_edge(e.0, e.1);
            if !is_k_connected(&h, 3) {
                continue;
            }
            let mut r = rot.clone();
            for (a, b) in [(e.0, e.1), (e.1, e.0)] {
                r.get_mut(&a).expect("endpoint").retain(|&x| x != b);
            }
            let (c, h, r) = embedded_copy(&h, &r);
            if !seen.contains_key(&c) {
                seen.insert(c, h.clone());
                todo.push((h, r));
            }
        }
    }
    Ok(seen.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let b = Graph::from_edges([(5, 7), (7, 9), (9, 8), (8, 5), (7, 8)]);
        assert_eq!(canonical_form(&a).unwrap().0, canonical_form(&b).unwrap().0);
        assert_ne!(canonical_form(&a).unwrap().0, canonical_form(&cycle(4)).unwrap().0);
    }

    #[test]
    fn small_planar_counts() {
        let t: Vec<usize> = (4..=8).map(|n| triangulations(n).unwrap().len()).collect();
        assert_eq!(t, vec![1, 1, 2, 5, 14]);
        let p: Vec<usize> = (4..=7).map(|n| three_connected_planar(n).unwrap().len()).collect();
        assert_eq!(p, vec![1, 2, 7, 34]);
    }
}
