use super::*;
use crate::graph::named::*;
use crate::minors::oracle_rooted_minor;
use crate::obstructions::Class;

fn v(x: u32) -> Vertex {
    Vertex(x)
}

fn run(g: &Graph, roots: [u32; 4]) -> Decision {
    let inst = RootedInstance::new(g.clone(), roots.map(v)).unwrap();
    decide(&inst).unwrap_or_else(|e| panic!("{e} on {:?} roots {roots:?}", g.edges().collect::<Vec<_>>()))
}

fn agrees(g: &Graph, roots: [u32; 4]) {
    let d = run(g, roots);
    let oracle = oracle_rooted_minor(g, &roots.map(v)).unwrap().is_some();
    assert_eq!(d.is_yes(), oracle, "{:?} roots {roots:?} trace {:?}", g.edges().collect::<Vec<_>>(), d.trace);
}

#[test]
fn k4_is_yes_with_singletons() {
    let d = run(&complete(4), [0, 1, 2, 3]);
    assert_eq!(d.witness(), Some(&MinorWitness::singletons(&[v(0), v(1), v(2), v(3)])));
}

#[test]
fn k23_is_no() {
    let g = complete_bipartite(3, 2);
    let d = run(&g, [0, 1, 2, 3]);
    assert!(!d.is_yes());
}

#[test]
fn antiprism_face_is_a_web() {
    let g = square_antiprism();
    let d = run(&g, [0, 1, 2, 3]);
    assert_eq!(d.obstruction().map(|o| o.class()), Some(Class::D));
}

#[test]
fn cube_face_and_tetrahedron() {
    let g = cube();
    for roots in [[0, 1, 2, 3], [0, 3, 5, 6], [0, 1, 3, 7]] {
        agrees(&g, roots);
    }
}

#[test]
fn all_graphs_on_six_vertices() {
    let pairs: Vec<(u32, u32)> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    let n = 6;
    // A stride of seven keeps the test quick but spread out.
    for mask in (0u32..1 << pairs.len()).step_by(7) {
        let mut g = Graph::with_vertices((0..n).map(v));
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(v(i), v(j));
            }
        }
        if !g.is_connected() {
            continue;
        }
        for roots in [[0, 1, 2, 3], [0, 2, 4, 5], [1, 3, 4, 5]] {
            agrees(&g, roots);
        }
    }
}

#[test]
fn decisions_round_trip_through_json() {
    for (g, roots) in [(complete(4), [0, 1, 2, 3]), (complete_bipartite(3, 2), [0, 1, 2, 3])] {
        let d = run(&g, roots);
        let text = serde_json::to_string(&d).unwrap();
        let back: Decision = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
    }
}
