//! Certificate surgery: growing an obstruction for a smaller graph into one
//! for the graph it came from.

use crate::error::{Error, Result};
use crate::graph::{Triangle, Vertex, VertexSet};

use super::{Class, Obstruction, PlusGraph, Shape, VertexType};

fn require(cond: bool, clause: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(clause.to_string()))
    }
}

fn require_fresh(ob: &Obstruction, vs: &VertexSet, what: &str) -> Result<()> {
    let used = ob.plus.vertex_set();
    match vs.iter().find(|v| used.contains(v)) {
        Some(v) => Err(Error::invalid(format!("{what} vertex {v} already in the obstruction"))),
        None => Ok(()),
    }
}

/// A bare square web gains a diagonal, so that surgery can triangulate
/// around it.
fn triangulated(ob: &Obstruction) -> Result<Obstruction> {
    match &ob.shape {
        Shape::D { outer, .. } if ob.plus.base.edge_count() == 4 => {
            let mut plus = ob.plus.clone();
            plus.base.add_edge(outer[0], outer[2]);
            Obstruction::detect(plus, ob.nominated)
        }
        _ => Ok(ob.clone()),
    }
}

fn swap_nominated(ob: &Obstruction, old: Vertex, new: Vertex) -> [Vertex; 4] {
    ob.nominated.map(|x| if x == old { new } else { x })
}

/// Adds `s` to the clique on `t`.
pub fn attach_clique(ob: &Obstruction, t: Triangle, s: &VertexSet) -> Result<Obstruction> {
    require(t.is_in(&ob.plus.base), "clique key must be a triangle of the base")?;
    require_fresh(ob, s, "clique")?;
    let mut plus = ob.plus.clone();
    plus.attach(t, s.iter().copied());
    Obstruction::detect(plus, ob.nominated)
}

/// Adds `s` to the clique of a triangle `T` with `anchor ⊆ T ∪ X_T`.
pub fn absorb_component(ob: &Obstruction, anchor: &VertexSet, s: &VertexSet) -> Result<Obstruction> {
    let t = ob
        .plus
        .covering_triangle(anchor)
        .ok_or_else(|| Error::invalid("no triangle covers the anchor vertices"))?;
    attach_clique(ob, t, s)
}

/// Type-1 root `u` gives way to a new root `a` placed in the outer face,
/// adjacent to `u` and its two outer neighbours; `extra` hangs on `a x u`.
pub fn insert_outerface_vertex(ob: &Obstruction, u: Vertex, a: Vertex, extra: &VertexSet) -> Result<Obstruction> {
    let ob = &triangulated(ob)?;
    require(ob.classify_vertex(u)? == VertexType::Type1, "u must be type-1")?;
    require_fresh(ob, &VertexSet::from([a]), "new root")?;
    require_fresh(ob, extra, "absorbed")?;
    require(!extra.contains(&a), "absorbed set must not contain the new root")?;
    let (x, y) = ob.outer_neighbours(u).expect("type-1 vertices lie on the outer face");
    let mut plus = ob.plus.clone();
    for z in [x, u, y] {
        plus.base.add_edge(a, z);
    }
    plus.attach(Triangle::new(a, x, u), extra.iter().copied());
    Obstruction::detect(plus, swap_nominated(ob, u, a))
}

/// Type-3 root `u`, in the unique triangle `u x y`, is deleted from the base
/// and replaced by a new root `a` adjacent to `x, y`; `u` and `extra` join
/// the clique on `a x y`.
pub fn replace_type3(ob: &Obstruction, u: Vertex, a: Vertex, extra: &VertexSet) -> Result<Obstruction> {
    require(ob.classify_vertex(u)? == VertexType::Type3, "u must be type-3")?;
    require(ob.plus.base.degree(u) == 2, "type-3 vertex must have degree two")?;
    require_fresh(ob, &VertexSet::from([a]), "new root")?;
    require_fresh(ob, extra, "absorbed")?;
    require(!extra.contains(&a), "absorbed set must not contain the new root")?;
    let nbrs: Vec<Vertex> = ob.plus.base.neighbors(u).collect();
    let t = Triangle::new(a, nbrs[0], nbrs[1]);
    let mut plus = ob.plus.clone();
    plus.rename(u, a);
    require(t.is_in(&plus.base), "type-3 vertex must lie in a triangle")?;
    plus.attach(t, std::iter::once(u).chain(extra.iter().copied()));
    Obstruction::detect(plus, swap_nominated(ob, u, a))
}

/// Replaces root `u` by a new root `a` whose side of a cut vertex `u` is
/// `extra ∪ {a}`; dispatches on the type of `u`.
pub fn replace_root(ob: &Obstruction, u: Vertex, a: Vertex, extra: &VertexSet) -> Result<Obstruction> {
    match ob.classify_vertex(u)? {
        VertexType::Type1 => insert_outerface_vertex(ob, u, a, extra),
        VertexType::Type3 => replace_type3(ob, u, a, extra),
        VertexType::Type2 => {
            let Shape::A { q, .. } = ob.shape else {
                return Err(Error::internal("type-2 vertex outside class A"));
            };
            require_fresh(ob, &VertexSet::from([a]), "new root")?;
            require_fresh(ob, extra, "absorbed")?;
            let mut plus = ob.plus.clone();
            plus.base.add_edge(a, u);
            plus.base.add_edge(a, q);
            plus.attach(Triangle::new(a, u, q), extra.iter().copied());
            Obstruction::detect(plus, swap_nominated(ob, u, a))
        }
    }
}

/// Root `u`, adjacent to root `b`, gives way to a new root `a` whose side of
/// the cut pair `{u, b}` is `extra ∪ {a}`.
pub fn graft_pendant_root(
    ob: &Obstruction,
    u: Vertex,
    b: Vertex,
    a: Vertex,
    extra: &VertexSet,
) -> Result<Obstruction> {
    let ob = &triangulated(ob)?;
    require(ob.is_nominated(b), "b must be nominated")?;
    require(ob.plus.base.has_edge(u, b), "u and b must be adjacent in the base")?;
    require_fresh(ob, &VertexSet::from([a]), "new root")?;
    require_fresh(ob, extra, "absorbed")?;
    require(!extra.contains(&a), "absorbed set must not contain the new root")?;
    let mut plus = ob.plus.clone();
    match ob.classify_vertex(u)? {
        VertexType::Type1 => {
            let (x, y) = ob.outer_neighbours(u).expect("type-1 vertices lie on the outer face");
            if x == b || y == b {
                let other = if x == b { y } else { x };
                for z in [u, b, other] {
                    plus.base.add_edge(a, z);
                }
            } else {
                // ub is a diagonal, so the base is K4 minus the other pair.
                require(ob.class() == Class::D && ob.plus.base.vertex_count() == 4, "diagonal ub needs a four-vertex web")?;
                plus.base.add_edge(a, u);
                plus.base.add_edge(a, b);
            }
            plus.attach(Triangle::new(a, u, b), extra.iter().copied());
            Obstruction::detect(plus, swap_nominated(ob, u, a))
        }
        VertexType::Type2 => {
            plus.base.add_edge(a, u);
            plus.base.add_edge(a, b);
            plus.attach(Triangle::new(a, u, b), extra.iter().copied());
            Obstruction::detect(plus, swap_nominated(ob, u, a))
        }
        VertexType::Type3 => replace_type3(ob, u, a, extra),
    }
}

/// How one side of a cut pair `{u, v}` meets the pair.
#[derive(Clone, Copy, Debug)]
enum Side {
    /// A four-vertex web with diagonal `uv`; the other two roots hang on it.
    Ear,
    /// Class A with hub `h ∈ {u, v}`, `h2` the other, `q` the partner.
    Hub { h: Vertex, h2: Vertex, q: Vertex },
    /// `uv` on the outer face of a web; `nu`, `nv` the outer neighbours.
    Outer { nu: Vertex, nv: Vertex },
}

fn side(ob: &Obstruction, u: Vertex, v: Vertex) -> Result<Side> {
    require(ob.is_nominated(u) && ob.is_nominated(v), "u and v must be nominated")?;
    require(ob.plus.base.has_edge(u, v), "u and v must be adjacent")?;
    match &ob.shape {
        Shape::A { p, q } => {
            let (h, h2) = if *p == u { (u, v) } else { (v, u) };
            require(*p == h, "in class A one of u, v is the hub")?;
            Ok(Side::Hub { h, h2, q: *q })
        }
        Shape::D { .. } | Shape::E { .. } => {
            let (a, b) = ob.outer_neighbours(u).expect("web shapes have an outer face");
            if a == v || b == v {
                let nu = if a == v { b } else { a };
                let (c, d) = ob.outer_neighbours(v).expect("web shapes have an outer face");
                let nv = if c == u { d } else { c };
                Ok(Side::Outer { nu, nv })
            } else {
                require(ob.class() == Class::D && ob.plus.base.vertex_count() == 4, "diagonal uv needs a four-vertex web")?;
                Ok(Side::Ear)
            }
        }
        _ => Err(Error::invalid("join needs sides of class A, D or E")),
    }
}

/// Glues `ob1` (roots `u, v` and two more) to `ob2` (roots `u, v` and two
/// more) along `u, v`, which stop being roots. Apart from `u, v` the two
/// obstructions must use disjoint vertices.
pub fn join_at_cut_pair(ob1: &Obstruction, ob2: &Obstruction, u: Vertex, v: Vertex) -> Result<Obstruction> {
    require(u != v, "u and v must differ")?;
    let (ob1, ob2) = (&triangulated(ob1)?, &triangulated(ob2)?);
    let s1 = side(ob1, u, v)?;
    let s2 = side(ob2, u, v)?;
    let v1 = ob1.plus.vertex_set();
    let v2 = ob2.plus.vertex_set();
    require(
        v1.intersection(&v2).copied().collect::<VertexSet>() == VertexSet::from([u, v]),
        "sides may share only u and v",
    )?;
    let mut plus = PlusGraph::new(ob1.plus.base.clone());
    for (a, b) in ob2.plus.base.edges().map(|e| (e.0, e.1)) {
        plus.base.add_edge(a, b);
    }
    for w in ob2.plus.base.vertices() {
        plus.base.add_vertex(w);
    }
    for (&t, xs) in ob1.plus.cliques.iter().chain(ob2.plus.cliques.iter()) {
        plus.attach(t, xs.iter().copied());
    }
    let gray = |plus: &mut PlusGraph, ((a, b), (c, d)): ((Vertex, Vertex), (Vertex, Vertex))| {
        plus.base.add_edge(a, c);
        plus.base.add_edge(b, d);
    };
    match (s1, s2) {
        (Side::Ear, _) | (_, Side::Ear) => {}
        (Side::Outer { nu: a, nv: b }, Side::Outer { nu: c, nv: d }) => gray(&mut plus, ((a, b), (c, d))),
        (Side::Hub { h2, q, .. }, Side::Outer { nu, nv }) | (Side::Outer { nu, nv }, Side::Hub { h2, q, .. }) => {
            let n = if h2 == u { nu } else { nv };
            plus.base.add_edge(q, n);
        }
        (Side::Hub { h: h1, h2, q: q1 }, Side::Hub { h: hb, q: q2, .. }) => {
            if h1 == hb {
                plus.base.add_edge(q1, q2);
                plus.absorb_region(Triangle::new(h1, q1, q2), &VertexSet::from([h2]));
            }
        }
    }
    let nominated: Vec<Vertex> = ob1
        .nominated
        .iter()
        .chain(ob2.nominated.iter())
        .copied()
        .filter(|&x| x != u && x != v)
        .collect();
    require(nominated.len() == 4, "each side needs two roots besides u and v")?;
    Obstruction::detect(plus, [nominated[0], nominated[1], nominated[2], nominated[3]])
}
