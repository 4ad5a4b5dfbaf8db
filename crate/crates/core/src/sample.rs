//! Random webs and obstructions under a vertex budget.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{named, triangles, Graph, Triangle, Vertex};
use crate::obstructions::{build_class, check_web, embed_web, Class, ClassSpec, Obstruction, PlusGraph};
use crate::planarity::planar_embed;

/// Fewest vertices an obstruction of each class can have.
pub fn minimum_size(class: Class) -> usize {
    match class {
        Class::A => 5,
        Class::B => 6,
        Class::C => 7,
        Class::D => 4,
        Class::E => 6,
        Class::F => 8,
    }
}

fn random_flips(g: &mut Graph, flips: usize, rng: &mut impl Rng) {
    for _ in 0..flips {
        let Some(emb) = planar_embed(g).embedding() else { return };
        let edges: Vec<_> = g.edges().collect();
        let e = *edges.choose(rng).expect("triangulations have edges");
        let apexes: Vec<Vertex> = emb
            .faces()
            .iter()
            .filter(|f| f.contains(&e.0) && f.contains(&e.1))
            .flat_map(|f| f.iter().copied().filter(|&x| x != e.0 && x != e.1))
            .collect();
        if let [x, y] = apexes[..] {
            if !g.has_edge(x, y) {
                g.remove_edge(e.0, e.1);
                g.add_edge(x, y);
            }
        }
    }
}

/// A web core on `k ≥ 4` vertices and its outer quadrilateral.
pub fn sample_web(k: usize, rng: &mut impl Rng) -> Result<(Graph, [Vertex; 4])> {
    if k < 4 {
        return Err(Error::invalid("a web has at least four vertices"));
    }
    let v = Vertex;
    if k == 4 && rng.gen_bool(0.5) {
        return Ok((named::cycle(4), [v(0), v(1), v(2), v(3)]));
    }
    // Remove a degree-four vertex from a random triangulation; keep the
    // result when every triangle left is a face.
    for _ in 0..1000 {
        let mut t = named::complete(4);
        for x in 4..=k as u32 {
            for y in [0, 1, x - 1] {
                t.add_edge(v(x), v(y));
            }
        }
        random_flips(&mut t, 4 * k, rng);
        let fours: Vec<Vertex> = t.vertices().filter(|&x| t.degree(x) == 4).collect();
        let Some(&o) = fours.choose(rng) else { continue };
        let emb = planar_embed(&t).embedding().ok_or_else(|| Error::internal("flip left the plane"))?;
        let ring = &emb.rotation[&o];
        let outer = [ring[0], ring[1], ring[2], ring[3]];
        let mut core = t.clone();
        core.remove_vertex(o);
        if let Some(e) = embed_web(&core, outer) {
            if check_web(&core, outer, &e).is_ok() {
                return Ok((core, outer));
            }
        }
    }
    Err(Error::internal("no web found after many attempts"))
}

/// A random obstruction of `class` with at most `budget` vertices in its
/// full graph.
pub fn sample_obstruction(class: Class, budget: usize, rng: &mut impl Rng) -> Result<Obstruction> {
    let min = minimum_size(class);
    if budget < min {
        return Err(Error::ResourceLimit(format!("class {class} needs at least {min} vertices")));
    }
    let ears = match class {
        Class::E => 2,
        Class::F => 4,
        _ => 0,
    };
    let spec = match class {
        Class::A => ClassSpec::A,
        Class::B => ClassSpec::B,
        Class::C => ClassSpec::C,
        _ => {
            let k = rng.gen_range(4..=budget - ears);
            let (core, outer) = sample_web(k, rng)?;
            match class {
                Class::D => ClassSpec::D { core, outer },
                Class::E => ClassSpec::E { core, outer },
                _ => ClassSpec::F { core, outer },
            }
        }
    };
    let bare = build_class(spec.clone(), &BTreeMap::new())?;
    let spare = budget - bare.base().vertex_count();
    let ts: Vec<Triangle> = triangles(bare.base());
    let mut sizes: BTreeMap<Triangle, usize> = BTreeMap::new();
    if !ts.is_empty() {
        for _ in 0..rng.gen_range(0..=spare) {
            *sizes.entry(*ts.choose(rng).expect("nonempty")).or_default() += 1;
        }
    }
    build_class(spec, &sizes)
}

/// `G(n, p)` resampled until connected.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let mut g = Graph::with_vertices((0..n as u32).map(Vertex));
        for i in 0..n as u32 {
            for j in i + 1..n as u32 {
                if rng.gen_bool(p) {
                    g.add_edge(Vertex(i), Vertex(j));
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// Four distinct vertices of `g`, in random order.
pub fn random_roots(g: &Graph, rng: &mut impl Rng) -> [Vertex; 4] {
    let vs: Vec<Vertex> = g.vertices().collect();
    let pick: Vec<Vertex> = vs.choose_multiple(rng, 4).copied().collect();
    [pick[0], pick[1], pick[2], pick[3]]
}

/// A random base on `n` vertices with up to `extra` clique vertices hung on
/// its triangles.
pub fn random_plus_graph(n: usize, extra: usize, rng: &mut impl Rng) -> PlusGraph {
    let p = rng.gen_range(0.3..0.8);
    let base = random_connected_graph(n, p, rng);
    let ts = triangles(&base);
    let mut plus = PlusGraph::new(base);
    let mut next = n as u32;
    if !ts.is_empty() {
        for _ in 0..rng.gen_range(0..=extra) {
            plus.attach(*ts.choose(rng).expect("nonempty"), [Vertex(next)]);
            next += 1;
        }
    }
    plus
}

/// Two random connected graphs glued along the pair `{u, v} = {0, 1}`, with
/// two roots private to each side. Not necessarily 2-connected.
pub fn random_two_sum(left: usize, right: usize, rng: &mut impl Rng) -> (Graph, [Vertex; 4]) {
    assert!(left >= 4 && right >= 4, "each side needs two private vertices");
    let p = rng.gen_range(0.3..0.8);
    let g1 = random_connected_graph(left, p, rng);
    let g2 = random_connected_graph(right, p, rng);
    // Right side vertex i becomes i for i < 2 and left + i - 2 otherwise.
    let shift = |x: Vertex| if x.0 < 2 { x } else { Vertex(x.0 + left as u32 - 2) };
    let mut g = g1;
    for e in g2.edges() {
        g.add_edge(shift(e.0), shift(e.1));
    }
    g.remove_edge(Vertex(0), Vertex(1));
    let l: Vec<Vertex> = (2..left as u32).map(Vertex).collect();
    let r: Vec<Vertex> = (left as u32..(left + right) as u32 - 2).map(Vertex).collect();
    let a: Vec<Vertex> = l.choose_multiple(rng, 2).copied().collect();
    let c: Vec<Vertex> = r.choose_multiple(rng, 2).copied().collect();
    (g, [a[0], a[1], c[0], c[1]])
}

/// A random graph with two extra roots `a, b` whose only neighbours are the
/// non-roots `u = 0, v = 1`; the other two roots are random.
pub fn random_ear_instance(n: usize, rng: &mut impl Rng) -> (Graph, [Vertex; 4]) {
    assert!(n >= 4, "need u, v and two more roots");
    let p = rng.gen_range(0.3..0.8);
    let mut g = random_connected_graph(n, p, rng);
    let (a, b) = (Vertex(n as u32), Vertex(n as u32 + 1));
    for x in [a, b] {
        g.add_edge(x, Vertex(0));
        g.add_edge(x, Vertex(1));
    }
    let rest: Vec<Vertex> = (2..n as u32).map(Vertex).collect();
    let cd: Vec<Vertex> = rest.choose_multiple(rng, 2).copied().collect();
    (g, [a, b, cd[0], cd[1]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_respect_budget_and_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for class in Class::ALL {
            for _ in 0..10 {
                let ob = sample_obstruction(class, 10, &mut rng).unwrap();
                assert_eq!(ob.class(), class);
                assert!(ob.full().vertex_count() <= 10);
            }
        }
    }

    #[test]
    fn budget_below_minimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(sample_obstruction(Class::F, 7, &mut rng), Err(Error::ResourceLimit(_))));
    }
}
