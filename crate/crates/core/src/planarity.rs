//! Planarity testing that produces a rotation system.
//!
//! Each block is embedded with the path-addition method of Demoucron,
//! Malgrange and Pertuiset; block embeddings are then glued at cut vertices,
//! which is always possible without crossings.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::connectivity::blocks;
use crate::graph::{Edge, Graph, Vertex, VertexSet};

/// A combinatorial embedding: for each vertex the cyclic (clockwise) order of
/// its neighbours. Faces are traced by the rule `(u, v) -> (v, succ_v(u))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawEmbedding", into = "RawEmbedding")]
pub struct PlanarEmbedding {
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
    pub outer_face: usize,
    faces: Vec<Vec<Vertex>>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawEmbedding {
    // A list rather than a map: integer map keys do not survive tagged enums.
    rotation: Vec<(Vertex, Vec<Vertex>)>,
    outer_face: usize,
}

impl From<RawEmbedding> for PlanarEmbedding {
    fn from(raw: RawEmbedding) -> Self {
        let mut e = PlanarEmbedding::from_rotation(raw.rotation.into_iter().collect());
        e.outer_face = raw.outer_face;
        e
    }
}

impl From<PlanarEmbedding> for RawEmbedding {
    fn from(e: PlanarEmbedding) -> Self {
        RawEmbedding {
            rotation: e.rotation.into_iter().collect(),
            outer_face: e.outer_face,
        }
    }
}

impl PlanarEmbedding {
    /// Builds an embedding from a rotation system. A rotation that is not
    /// symmetric yields no faces, and then fails [`PlanarEmbedding::is_valid_for`].
    pub fn from_rotation(rotation: BTreeMap<Vertex, Vec<Vertex>>) -> Self {
        let faces = trace_faces(&rotation).unwrap_or_default();
        PlanarEmbedding {
            rotation,
            outer_face: 0,
            faces,
        }
    }

    /// Face walks. Isolated vertices contribute a one-vertex face.
    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    /// The outer face walk; empty when `outer_face` is out of range.
    pub fn outer(&self) -> &[Vertex] {
        self.faces.get(self.outer_face).map_or(&[], |f| f.as_slice())
    }

    /// Index of the first face whose vertex set contains `set`.
    pub fn face_containing(&self, set: &VertexSet) -> Option<usize> {
        self.faces.iter().position(|f| set.iter().all(|v| f.contains(v)))
    }

    pub fn with_outer_face(mut self, idx: usize) -> Self {
        assert!(idx < self.faces.len());
        self.outer_face = idx;
        self
    }

    /// Checks that the rotation system describes `g` and that each component
    /// satisfies Euler's relation `V - E + F = 2`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.vertex_count() || self.outer_face >= self.faces.len() {
            return false;
        }
        for v in g.vertices() {
            let Some(rot) = self.rotation.get(&v) else {
                return false;
            };
            let as_set: VertexSet = rot.iter().copied().collect();
            if as_set.len() != rot.len() || &as_set != g.neighbor_set(v) {
                return false;
            }
        }
        for comp in g.components() {
            let v = comp.len() as i64;
            let e = comp.iter().map(|&x| g.degree(x)).sum::<usize>() as i64 / 2;
            let f = self
                .faces
                .iter()
                .filter(|face| comp.contains(&face[0]))
                .count() as i64;
            if v - e + f != 2 {
                return false;
            }
        }
        true
    }
}

fn successor(rotation: &BTreeMap<Vertex, Vec<Vertex>>, v: Vertex, u: Vertex) -> Option<Vertex> {
    let rot = rotation.get(&v)?;
    let i = rot.iter().position(|&x| x == u)?;
    Some(rot[(i + 1) % rot.len()])
}

/// Traces all faces of a rotation system, in a deterministic order; `None`
/// when some dart has no reverse.
pub fn trace_faces(rotation: &BTreeMap<Vertex, Vec<Vertex>>) -> Option<Vec<Vec<Vertex>>> {
    let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (&u, nbrs) in rotation {
        if nbrs.is_empty() {
            faces.push(vec![u]);
            continue;
        }
        for &v in nbrs {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                face.push(a);
                let c = successor(rotation, b, a)?;
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    Some(faces)
}

/// Outcome of [`planar_embed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    NonPlanar,
}

impl Planarity {
    pub fn embedding(self) -> Option<PlanarEmbedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar => None,
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Embeds `g` in the plane or reports that it is non-planar.
pub fn planar_embed(g: &Graph) -> Planarity {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Planarity::NonPlanar;
    }
    let mut rotation: BTreeMap<Vertex, Vec<Vertex>> =
        g.vertices().map(|v| (v, Vec::new())).collect();
    for block in blocks(g) {
        if block.len() <= 2 {
            if let [a, b] = block.iter().copied().collect::<Vec<_>>()[..] {
                rotation.get_mut(&a).unwrap().push(b);
                rotation.get_mut(&b).unwrap().push(a);
            }
            continue;
        }
        let Some(rot) = embed_biconnected(&g.induced(&block)) else {
            return Planarity::NonPlanar;
        };
        for (v, order) in rot {
            rotation.get_mut(&v).unwrap().extend(order);
        }
    }
    Planarity::Planar(PlanarEmbedding::from_rotation(rotation))
}

struct Fragment {
    attachments: VertexSet,
    /// Interior vertices; empty for a single chord.
    interior: VertexSet,
}

/// Path-addition embedding of a 2-connected graph with at least three vertices.
fn embed_biconnected(g: &Graph) -> Option<BTreeMap<Vertex, Vec<Vertex>>> {
    let first = g.edges().next()?;
    let mut cycle = {
        let mut h = g.clone();
        h.remove_edge(first.0, first.1);
        h.shortest_path(first.0, first.1, &VertexSet::new())?
    };
    let mut embedded: BTreeSet<Edge> = BTreeSet::new();
    for w in cycle.windows(2) {
        embedded.insert(Edge::new(w[0], w[1]));
    }
    embedded.insert(first);
    let mut in_h: VertexSet = cycle.iter().copied().collect();
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), {
        cycle.reverse();
        cycle
    }];
    let total = g.edge_count();

    while embedded.len() < total {
        let fragments = fragments(g, &in_h, &embedded);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice?;
        let path = fragment_path(g, &fragments[fi]);
        for w in path.windows(2) {
            embedded.insert(Edge::new(w[0], w[1]));
        }
        in_h.extend(path.iter().copied());
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    let mut rotation = BTreeMap::new();
    for (v, map) in succ {
        let start = *map.keys().next().unwrap();
        let mut order = vec![start];
        let mut cur = map[&start];
        while cur != start {
            order.push(cur);
            cur = map[&cur];
        }
        if order.len() != g.degree(v) {
            return None;
        }
        rotation.insert(v, order);
    }
    Some(rotation)
}

fn fragments(g: &Graph, in_h: &VertexSet, embedded: &BTreeSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for e in g.edges() {
        if in_h.contains(&e.0) && in_h.contains(&e.1) && !embedded.contains(&e) {
            out.push(Fragment {
                attachments: VertexSet::from([e.0, e.1]),
                interior: VertexSet::new(),
            });
        }
    }
    for comp in g.without(in_h).components() {
        let attachments = comp
            .iter()
            .flat_map(|&v| g.neighbors(v))
            .filter(|v| in_h.contains(v))
            .collect();
        out.push(Fragment {
            attachments,
            interior: comp,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(g: &Graph, frag: &Fragment) -> Vec<Vertex> {
    let atts: Vec<Vertex> = frag.attachments.iter().copied().collect();
    if frag.interior.is_empty() {
        return atts;
    }
    let x = atts[0];
    let others: VertexSet = atts[1..].iter().copied().collect();
    // Interior vertices adjacent to some other attachment.
    let targets: VertexSet = frag
        .interior
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).any(|w| others.contains(&w)))
        .collect();
    let starts: Vec<Vertex> = g.neighbors(x).filter(|v| frag.interior.contains(v)).collect();
    let mut best: Option<Vec<Vertex>> = None;
    for s in starts {
        if let Some(p) = g.path_within(s, &targets, &frag.interior) {
            if best.as_ref().map_or(true, |b| p.len() < b.len()) {
                best = Some(p);
            }
        }
    }
    let inner = best.expect("fragment of a 2-connected graph has two attachments");
    let end = *inner.last().unwrap();
    let y = g.neighbors(end).find(|w| others.contains(w)).unwrap();
    let mut path = vec![x];
    path.extend(inner);
    path.push(y);
    path
}

fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let x = path[0];
    let y = *path.last().unwrap();
    let i = face.iter().position(|&v| v == x).unwrap();
    let rotated: Vec<Vertex> = face[i..].iter().chain(&face[..i]).copied().collect();
    let k = rotated.iter().position(|&v| v == y).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1: Vec<Vertex> = rotated[..=k].to_vec();
    f1.extend(interior.iter().rev());
    let mut f2 = vec![x];
    f2.extend(interior);
    f2.push(y);
    f2.extend(&rotated[k + 1..]);
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn faces_of(g: &Graph) -> Vec<Vec<Vertex>> {
        let e = planar_embed(g).embedding().expect("planar");
        assert!(e.is_valid_for(g));
        e.faces().to_vec()
    }

    #[test]
    fn k4_has_four_triangles() {
        let f = faces_of(&complete(4));
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|x| x.len() == 3));
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        assert!(!planar_embed(&complete(5)).is_planar());
        assert!(!planar_embed(&complete_bipartite(3, 3)).is_planar());
    }

    #[test]
    fn octahedron_has_eight_triangles() {
        let f = faces_of(&octahedron());
        assert_eq!(f.len(), 8);
        assert!(f.iter().all(|x| x.len() == 3));
    }

    #[test]
    fn antiprism_faces() {
        let f = faces_of(&square_antiprism());
        let mut sizes: Vec<usize> = f.iter().map(|x| x.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 3, 3, 3, 3, 4, 4]);
    }

    #[test]
    fn disconnected_and_trees() {
        let mut g = path(4);
        g.add_edge(Vertex(10), Vertex(11));
        g.add_vertex(Vertex(20));
        let f = faces_of(&g);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn bowtie_glues_blocks() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(faces_of(&g).len(), 3);
    }
}
