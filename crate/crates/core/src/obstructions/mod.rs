//! Clique-augmented graphs and the six obstruction classes.

mod surgery;
mod web;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{triangles, Edge, Graph, Triangle, Vertex, VertexSet};
use crate::planarity::PlanarEmbedding;

pub use surgery::{
    absorb_component, attach_clique, graft_pendant_root, insert_outerface_vertex, join_at_cut_pair,
    replace_root, replace_type3,
};
pub use web::{check_web, embed_web};
pub(crate) use web::absorb_separating;

/// A base graph `H` with a clique `X_T` hung on some of its triangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlusGraph {
    pub base: Graph,
    #[serde(with = "clique_list")]
    pub cliques: BTreeMap<Triangle, VertexSet>,
}

/// JSON object keys must be strings, so cliques travel as a list.
mod clique_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        triangle: Triangle,
        clique: VertexSet,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Triangle, VertexSet>, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = m
            .iter()
            .map(|(&triangle, clique)| Entry { triangle, clique: clique.clone() })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Triangle, VertexSet>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.triangle, e.clique)).collect())
    }
}

impl PlusGraph {
    pub fn new(base: Graph) -> Self {
        PlusGraph {
            base,
            cliques: BTreeMap::new(),
        }
    }

    /// `H` plus each `X_T` as a clique joined to `T`.
    pub fn full(&self) -> Graph {
        let mut g = self.base.clone();
        for (t, xs) in &self.cliques {
            let xs: Vec<Vertex> = xs.iter().copied().collect();
            for (i, &x) in xs.iter().enumerate() {
                g.add_vertex(x);
                for &y in &xs[i + 1..] {
                    g.add_edge(x, y);
                }
                for &z in &t.0 {
                    g.add_edge(x, z);
                }
            }
        }
        g
    }

    pub fn clique_vertices(&self) -> VertexSet {
        self.cliques.values().flatten().copied().collect()
    }

    /// Every vertex of the full graph.
    pub fn vertex_set(&self) -> VertexSet {
        let mut s = self.base.vertex_set();
        s.extend(self.clique_vertices());
        s
    }

    /// The triangle whose clique holds `x`.
    pub fn clique_of(&self, x: Vertex) -> Option<Triangle> {
        self.cliques
            .iter()
            .find(|(_, xs)| xs.contains(&x))
            .map(|(&t, _)| t)
    }

    pub fn attach(&mut self, t: Triangle, xs: impl IntoIterator<Item = Vertex>) {
        self.cliques.entry(t).or_default().extend(xs);
    }

    pub(crate) fn drop_empty(&mut self) {
        self.cliques.retain(|_, xs| !xs.is_empty());
    }

    /// A triangle `T` with `set` inside `T ∪ X_T`; the smallest one when
    /// several work.
    pub fn covering_triangle(&self, set: &VertexSet) -> Option<Triangle> {
        if let Some(t) = set.iter().find_map(|&x| self.clique_of(x)) {
            let xs = &self.cliques[&t];
            return set
                .iter()
                .all(|v| t.contains(*v) || xs.contains(v))
                .then_some(t);
        }
        triangles(&self.base)
            .into_iter()
            .find(|t| set.iter().all(|&v| t.contains(v)))
    }

    /// Moves `region` (base vertices) into `X_t`, together with every clique
    /// hanging on a triangle that meets the region.
    pub(crate) fn absorb_region(&mut self, t: Triangle, region: &VertexSet) {
        let stale: Vec<Triangle> = self
            .cliques
            .keys()
            .filter(|k| k.0.iter().any(|v| region.contains(v)))
            .copied()
            .collect();
        let mut moved: VertexSet = region.clone();
        for k in stale {
            moved.extend(self.cliques.remove(&k).unwrap_or_default());
        }
        for &v in region {
            self.base.remove_vertex(v);
        }
        self.attach(t, moved);
    }

    /// Renames a base vertex, keeping triangle keys consistent.
    pub(crate) fn rename(&mut self, from: Vertex, to: Vertex) {
        let map = BTreeMap::from([(from, to)]);
        self.base = self.base.relabel(&map);
        let old = std::mem::take(&mut self.cliques);
        for (t, xs) in old {
            let [a, b, c] = t.0.map(|v| if v == from { to } else { v });
            self.attach(Triangle::new(a, b, c), xs);
        }
    }

    /// Internal invariants of the clique map.
    pub fn check(&self) -> Result<(), ObstructionFault> {
        let mut seen = VertexSet::new();
        for (t, xs) in &self.cliques {
            if !t.is_in(&self.base) {
                return Err(ObstructionFault::StaleTriangle(*t));
            }
            for &x in xs {
                if self.base.contains(x) {
                    return Err(ObstructionFault::CliqueMeetsBase(x));
                }
                if !seen.insert(x) {
                    return Err(ObstructionFault::CliqueOverlap(x));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Class {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Class {
    pub const ALL: [Class; 6] = [Class::A, Class::B, Class::C, Class::D, Class::E, Class::F];
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Class::A),
            "B" => Ok(Class::B),
            "C" => Ok(Class::C),
            "D" => Ok(Class::D),
            "E" => Ok(Class::E),
            "F" => Ok(Class::F),
            other => Err(Error::invalid(format!("unknown obstruction class {other:?}"))),
        }
    }
}

/// The class together with its named vertices. For `E` and `F` the outer
/// quadrilateral is `(p, q, r, s)`; the embedding covers the planar core only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum Shape {
    /// `p` nominated of degree four, `q` its unnominated partner.
    A { p: Vertex, q: Vertex },
    B { p: Vertex, q: Vertex },
    /// Triangle `uvw`; two nominated vertices on `uv`, two on `vw`.
    C { u: Vertex, v: Vertex, w: Vertex },
    D { outer: [Vertex; 4], embedding: PlanarEmbedding },
    /// `p, q` nominated; the ears are adjacent to `r` and `s`.
    E { outer: [Vertex; 4], ears: [Vertex; 2], embedding: PlanarEmbedding },
    F {
        outer: [Vertex; 4],
        ears_pq: [Vertex; 2],
        ears_rs: [Vertex; 2],
        embedding: PlanarEmbedding,
    },
}

impl Shape {
    pub fn class(&self) -> Class {
        match self {
            Shape::A { .. } => Class::A,
            Shape::B { .. } => Class::B,
            Shape::C { .. } => Class::C,
            Shape::D { .. } => Class::D,
            Shape::E { .. } => Class::E,
            Shape::F { .. } => Class::F,
        }
    }

    pub fn outer(&self) -> Option<[Vertex; 4]> {
        match self {
            Shape::D { outer, .. } | Shape::E { outer, .. } | Shape::F { outer, .. } => Some(*outer),
            _ => None,
        }
    }

    pub fn embedding(&self) -> Option<&PlanarEmbedding> {
        match self {
            Shape::D { embedding, .. } | Shape::E { embedding, .. } | Shape::F { embedding, .. } => {
                Some(embedding)
            }
            _ => None,
        }
    }
}

/// A graph in one of the six classes, with its nominated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub plus: PlusGraph,
    pub nominated: [Vertex; 4],
    pub shape: Shape,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexType {
    Type1,
    Type2,
    Type3,
}

/// Why an obstruction certificate is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionFault {
    NominatedMismatch,
    NominatedOutsideBase(Vertex),
    StaleTriangle(Triangle),
    CliqueOverlap(Vertex),
    CliqueMeetsBase(Vertex),
    NotSpanning,
    BaseShape(String),
    Web(String),
}

impl fmt::Display for ObstructionFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionFault::NominatedMismatch => write!(f, "nominated vertices differ from the roots"),
            ObstructionFault::NominatedOutsideBase(v) => write!(f, "nominated vertex {v} is not in the base"),
            ObstructionFault::StaleTriangle(t) => write!(f, "clique key {t} is not a triangle of the base"),
            ObstructionFault::CliqueOverlap(v) => write!(f, "vertex {v} is in two cliques"),
            ObstructionFault::CliqueMeetsBase(v) => write!(f, "clique vertex {v} is also in the base"),
            ObstructionFault::NotSpanning => write!(f, "graph is not a spanning subgraph of the obstruction"),
            ObstructionFault::BaseShape(s) => write!(f, "base graph: {s}"),
            ObstructionFault::Web(s) => write!(f, "web: {s}"),
        }
    }
}

fn shape_fault(msg: impl Into<String>) -> ObstructionFault {
    ObstructionFault::BaseShape(msg.into())
}

fn edge_set(g: &Graph) -> std::collections::BTreeSet<Edge> {
    g.edges().collect()
}

fn expect_edges(base: &Graph, want: &[(Vertex, Vertex)]) -> Result<(), ObstructionFault> {
    let want: std::collections::BTreeSet<Edge> = want.iter().map(|&(a, b)| Edge::new(a, b)).collect();
    if edge_set(base) == want {
        Ok(())
    } else {
        Err(shape_fault("edge set does not match the class"))
    }
}

fn set_of(vs: &[Vertex]) -> VertexSet {
    vs.iter().copied().collect()
}

impl Obstruction {
    pub fn class(&self) -> Class {
        self.shape.class()
    }

    pub fn nominated_set(&self) -> VertexSet {
        set_of(&self.nominated)
    }

    pub fn is_nominated(&self, v: Vertex) -> bool {
        self.nominated.contains(&v)
    }

    pub fn full(&self) -> Graph {
        self.plus.full()
    }

    pub fn base(&self) -> &Graph {
        &self.plus.base
    }

    /// The same obstruction with every vertex renamed by `map`.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Obstruction> {
        let vs = self.plus.vertex_set();
        if let Some(v) = vs.iter().find(|v| !map.contains_key(v)) {
            return Err(Error::invalid(format!("relabelling misses vertex {v}")));
        }
        if vs.iter().map(|v| map[v]).collect::<VertexSet>().len() != vs.len() {
            return Err(Error::invalid("relabelling is not injective"));
        }
        let mut plus = PlusGraph::new(self.plus.base.relabel(map));
        for (t, xs) in &self.plus.cliques {
            let [a, b, c] = t.0.map(|x| map[&x]);
            plus.attach(Triangle::new(a, b, c), xs.iter().map(|x| map[x]));
        }
        Obstruction::detect(plus, self.nominated.map(|x| map[&x]))
    }

    /// The planar core of a `D`, `E` or `F` obstruction: the base without ears.
    pub fn core(&self) -> Option<Graph> {
        match &self.shape {
            Shape::D { .. } => Some(self.plus.base.clone()),
            Shape::E { ears, .. } => Some(self.plus.base.without(&set_of(ears))),
            Shape::F { ears_pq, ears_rs, .. } => {
                Some(self.plus.base.without(&set_of(&[ears_pq[0], ears_pq[1], ears_rs[0], ears_rs[1]])))
            }
            _ => None,
        }
    }

    /// Checks the class predicate and the clique invariants.
    pub fn check_structure(&self) -> Result<(), ObstructionFault> {
        self.plus.check()?;
        let nom = self.nominated_set();
        if nom.len() != 4 {
            return Err(ObstructionFault::NominatedMismatch);
        }
        if let Some(&v) = nom.iter().find(|v| !self.plus.base.contains(**v)) {
            return Err(ObstructionFault::NominatedOutsideBase(v));
        }
        let base = &self.plus.base;
        let others_of = |x: Vertex| -> Vec<Vertex> { nom.iter().copied().filter(|&y| y != x).collect() };
        match &self.shape {
            Shape::A { p, q } => {
                if !nom.contains(p) || nom.contains(q) {
                    return Err(shape_fault("class A needs p nominated and q not"));
                }
                let mut vs = nom.clone();
                vs.insert(*q);
                if base.vertex_set() != vs {
                    return Err(shape_fault("class A base has extra vertices"));
                }
                let mut want = vec![(*p, *q)];
                for x in others_of(*p) {
                    want.push((*p, x));
                    want.push((*q, x));
                }
                expect_edges(base, &want)
            }
            Shape::B { p, q } => {
                if p == q || nom.contains(p) || nom.contains(q) {
                    return Err(shape_fault("class B needs two unnominated centres"));
                }
                let mut vs = nom.clone();
                vs.extend([*p, *q]);
                if base.vertex_set() != vs {
                    return Err(shape_fault("class B base has extra vertices"));
                }
                let mut want = vec![(*p, *q)];
                for &x in &nom {
                    want.push((*p, x));
                    want.push((*q, x));
                }
                expect_edges(base, &want)
            }
            Shape::C { u, v, w } => {
                let tri = set_of(&[*u, *v, *w]);
                if tri.len() != 3 || tri.iter().any(|x| nom.contains(x)) {
                    return Err(shape_fault("class C needs an unnominated triangle"));
                }
                let mut vs = nom.clone();
                vs.extend(tri.iter().copied());
                if base.vertex_set() != vs {
                    return Err(shape_fault("class C base has extra vertices"));
                }
                let on_uv: Vec<Vertex> = nom
                    .iter()
                    .copied()
                    .filter(|&x| base.neighbor_set(x) == &set_of(&[*u, *v]))
                    .collect();
                let on_vw: Vec<Vertex> = nom
                    .iter()
                    .copied()
                    .filter(|&x| base.neighbor_set(x) == &set_of(&[*v, *w]))
                    .collect();
                if on_uv.len() != 2 || on_vw.len() != 2 {
                    return Err(shape_fault("class C needs two ears on uv and two on vw"));
                }
                let mut want = vec![(*u, *v), (*v, *w), (*u, *w)];
                for x in on_uv {
                    want.extend([(x, *u), (x, *v)]);
                }
                for x in on_vw {
                    want.extend([(x, *v), (x, *w)]);
                }
                expect_edges(base, &want)
            }
            Shape::D { outer, embedding } => {
                if set_of(outer) != nom {
                    return Err(shape_fault("class D outer face must be the nominated vertices"));
                }
                check_web(base, *outer, embedding)
            }
            Shape::E { outer, ears, embedding } => {
                let [p, q, r, s] = *outer;
                if set_of(&[p, q, ears[0], ears[1]]) != nom {
                    return Err(shape_fault("class E nominates p, q and the two ears"));
                }
                let rs = set_of(&[r, s]);
                if ears.iter().any(|&e| base.neighbor_set(e) != &rs) {
                    return Err(shape_fault("class E ears must be adjacent to exactly r and s"));
                }
                check_web(&base.without(&set_of(ears)), *outer, embedding)
            }
            Shape::F { outer, ears_pq, ears_rs, embedding } => {
                let [p, q, r, s] = *outer;
                let ears = set_of(&[ears_pq[0], ears_pq[1], ears_rs[0], ears_rs[1]]);
                if ears != nom {
                    return Err(shape_fault("class F nominates exactly the four ears"));
                }
                let pq = set_of(&[p, q]);
                let rs = set_of(&[r, s]);
                if ears_pq.iter().any(|&e| base.neighbor_set(e) != &pq)
                    || ears_rs.iter().any(|&e| base.neighbor_set(e) != &rs)
                {
                    return Err(shape_fault("class F ears must be adjacent to exactly pq or rs"));
                }
                check_web(&base.without(&ears), *outer, embedding)
            }
        }
    }

    /// The type of nominated vertex `x`.
    pub fn classify_vertex(&self, x: Vertex) -> Result<VertexType> {
        if !self.is_nominated(x) {
            return Err(Error::invalid(format!("{x} is not nominated")));
        }
        let adjacent_to_nominated = self
            .plus
            .base
            .neighbors(x)
            .any(|y| self.is_nominated(y));
        Ok(match self.class() {
            Class::D | Class::E if adjacent_to_nominated => VertexType::Type1,
            Class::A if self.plus.base.degree(x) == 4 => VertexType::Type2,
            _ => VertexType::Type3,
        })
    }

    /// The two neighbours of `x` on the outer quadrilateral.
    pub fn outer_neighbours(&self, x: Vertex) -> Option<(Vertex, Vertex)> {
        let outer = self.shape.outer()?;
        let i = outer.iter().position(|&y| y == x)?;
        Some((outer[(i + 3) % 4], outer[(i + 1) % 4]))
    }

    /// Recognises the class of `plus` with the given nominated vertices,
    /// first absorbing enclosed parts of a planar core into cliques.
    pub fn detect(mut plus: PlusGraph, nominated: [Vertex; 4]) -> Result<Obstruction> {
        plus.drop_empty();
        let mut nominated = nominated;
        nominated.sort();
        let nom = set_of(&nominated);
        let base = plus.base.clone();
        let non_nom: Vec<Vertex> = base.vertices().filter(|v| !nom.contains(v)).collect();
        let nbrs = |x: Vertex| base.neighbor_set(x).clone();
        let mut candidates: Vec<Shape> = Vec::new();
        // A and B: every nominated vertex but the hub hangs on one edge pq.
        if base.vertex_count() == 5 && non_nom.len() == 1 {
            let q = non_nom[0];
            for &p in &nominated {
                candidates.push(Shape::A { p, q });
            }
        }
        if base.vertex_count() == 6 && non_nom.len() == 2 {
            candidates.push(Shape::B { p: non_nom[0], q: non_nom[1] });
        }
        if base.vertex_count() == 7 && non_nom.len() == 3 {
            for &v in &non_nom {
                let rest: Vec<Vertex> = non_nom.iter().copied().filter(|&x| x != v).collect();
                candidates.push(Shape::C { u: rest[0], v, w: rest[1] });
            }
        }
        for c in candidates {
            let ob = Obstruction {
                plus: plus.clone(),
                nominated,
                shape: c,
            };
            if ob.check_structure().is_ok() {
                return Ok(ob);
            }
        }
        // Ears: nominated vertices of degree two on an unnominated edge.
        let is_ear = |x: Vertex| {
            let n = nbrs(x);
            n.len() == 2 && n.iter().all(|y| !nom.contains(y)) && {
                let v: Vec<Vertex> = n.into_iter().collect();
                base.has_edge(v[0], v[1])
            }
        };
        let ears: Vec<Vertex> = nominated.iter().copied().filter(|&x| is_ear(x)).collect();
        let pair = |xs: &[Vertex]| -> Option<[Vertex; 2]> {
            let n: Vec<Vertex> = nbrs(xs[0]).into_iter().collect();
            (n.len() == 2).then(|| [n[0], n[1]])
        };
        let mut webs: Vec<(Shape, VertexSet)> = Vec::new();
        match ears.len() {
            2 if nbrs(ears[0]) == nbrs(ears[1]) => {
                let [r, s] = pair(&ears).expect("ear has two neighbours");
                let pq: Vec<Vertex> = nominated.iter().copied().filter(|x| !ears.contains(x)).collect();
                let (p, q) = (pq[0], pq[1]);
                for outer in [[p, q, r, s], [p, q, s, r]] {
                    webs.push((
                        Shape::E {
                            outer,
                            ears: [ears[0], ears[1]],
                            embedding: PlanarEmbedding::from_rotation(BTreeMap::new()),
                        },
                        set_of(&ears),
                    ));
                }
            }
            4 => {
                let first = nbrs(ears[0]);
                let (g1, g2): (Vec<Vertex>, Vec<Vertex>) = ears.iter().partition(|&&x| nbrs(x) == first);
                if g1.len() == 2 && g2.len() == 2 && nbrs(g2[0]) == nbrs(g2[1]) {
                    let [p, q] = pair(&g1).expect("ear has two neighbours");
                    let [r, s] = pair(&g2).expect("ear has two neighbours");
                    for outer in [[p, q, r, s], [p, q, s, r]] {
                        webs.push((
                            Shape::F {
                                outer,
                                ears_pq: [g1[0], g1[1]],
                                ears_rs: [g2[0], g2[1]],
                                embedding: PlanarEmbedding::from_rotation(BTreeMap::new()),
                            },
                            set_of(&ears),
                        ));
                    }
                }
            }
            _ => {}
        }
        let [a, b, c, d] = nominated;
        for outer in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
            webs.push((
                Shape::D {
                    outer,
                    embedding: PlanarEmbedding::from_rotation(BTreeMap::new()),
                },
                VertexSet::new(),
            ));
        }
        for (shape, ear_set) in webs {
            let outer = shape.outer().expect("web shapes have an outer face");
            if !(0..4).all(|i| base.has_edge(outer[i], outer[(i + 1) % 4])) {
                continue;
            }
            let mut p2 = plus.clone();
            let mut core: VertexSet = base.vertex_set().difference(&ear_set).copied().collect();
            if web::absorb_separating(&mut p2, &mut core, outer).is_none() {
                continue;
            }
            let core_graph = p2.base.induced(&core);
            let Some(embedding) = embed_web(&core_graph, outer) else {
                continue;
            };
            let shape = match shape {
                Shape::D { outer, .. } => Shape::D { outer, embedding },
                Shape::E { outer, ears, .. } => Shape::E { outer, ears, embedding },
                Shape::F { outer, ears_pq, ears_rs, .. } => Shape::F {
                    outer,
                    ears_pq,
                    ears_rs,
                    embedding,
                },
                other => other,
            };
            p2.drop_empty();
            let ob = Obstruction {
                plus: p2,
                nominated,
                shape,
            };
            if ob.check_structure().is_ok() {
                return Ok(ob);
            }
        }
        Err(Error::internal(format!(
            "base graph with {} vertices matches no obstruction class",
            base.vertex_count()
        )))
    }
}

/// Checks `ob` as a certificate that `g` with `roots` has no rooted minor.
pub fn check_obstruction(g: &Graph, roots: &[Vertex], ob: &Obstruction) -> Result<(), ObstructionFault> {
    if set_of(roots) != ob.nominated_set() || roots.len() != 4 {
        return Err(ObstructionFault::NominatedMismatch);
    }
    ob.check_structure()?;
    if !g.is_spanning_subgraph_of(&ob.full()) {
        return Err(ObstructionFault::NotSpanning);
    }
    Ok(())
}

pub fn verify_obstruction(g: &Graph, roots: &[Vertex], ob: &Obstruction) -> bool {
    check_obstruction(g, roots, ob).is_ok()
}

/// Parameters for [`build_class`]. Web classes take their planar core and
/// outer quadrilateral; the others use fixed small bases with ids `0..`.
#[derive(Clone, Debug)]
pub enum ClassSpec {
    A,
    B,
    C,
    D { core: Graph, outer: [Vertex; 4] },
    E { core: Graph, outer: [Vertex; 4] },
    F { core: Graph, outer: [Vertex; 4] },
}

/// Builds an obstruction, giving the triangle `T` a clique of
/// `clique_sizes[T]` fresh vertices.
pub fn build_class(spec: ClassSpec, clique_sizes: &BTreeMap<Triangle, usize>) -> Result<Obstruction> {
    let v = Vertex;
    let (base, nominated) = match spec {
        ClassSpec::A => (
            Graph::from_edges([(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]),
            [v(0), v(2), v(3), v(4)],
        ),
        ClassSpec::B => {
            let mut edges = vec![(0, 1)];
            for x in 2..6 {
                edges.extend([(0, x), (1, x)]);
            }
            (Graph::from_edges(edges), [v(2), v(3), v(4), v(5)])
        }
        ClassSpec::C => (
            Graph::from_edges([
                (0, 1), (1, 2), (0, 2),
                (3, 0), (3, 1), (4, 0), (4, 1),
                (5, 1), (5, 2), (6, 1), (6, 2),
            ]),
            [v(3), v(4), v(5), v(6)],
        ),
        ClassSpec::D { core, outer } => {
            check_spec_web(&core, outer)?;
            (core, outer)
        }
        ClassSpec::E { core, outer } => {
            check_spec_web(&core, outer)?;
            let [p, q, r, s] = outer;
            let mut base = core;
            let e1 = base.fresh_vertex();
            let e2 = Vertex(e1.0 + 1);
            for e in [e1, e2] {
                base.add_edge(e, r);
                base.add_edge(e, s);
            }
            (base, [p, q, e1, e2])
        }
        ClassSpec::F { core, outer } => {
            check_spec_web(&core, outer)?;
            let [p, q, r, s] = outer;
            let mut base = core;
            let e = base.fresh_vertex().0;
            let ears = [v(e), v(e + 1), v(e + 2), v(e + 3)];
            for (i, &x) in ears.iter().enumerate() {
                let (y, z) = if i < 2 { (p, q) } else { (r, s) };
                base.add_edge(x, y);
                base.add_edge(x, z);
            }
            (base, ears)
        }
    };
    let mut plus = PlusGraph::new(base);
    let mut next = plus.base.fresh_vertex().0;
    for (&t, &k) in clique_sizes {
        if !t.is_in(&plus.base) {
            return Err(Error::invalid(format!("clique key {t} is not a triangle of the base")));
        }
        plus.attach(t, (next..next + k as u32).map(Vertex));
        next += k as u32;
    }
    let ob = Obstruction::detect(plus, nominated)?;
    Ok(ob)
}

fn check_spec_web(core: &Graph, outer: [Vertex; 4]) -> Result<()> {
    let emb = embed_web(core, outer)
        .ok_or_else(|| Error::invalid("core is not planar with the stated outer quadrilateral"))?;
    check_web(core, outer, &emb).map_err(|f| Error::invalid(f.to_string()))
}
