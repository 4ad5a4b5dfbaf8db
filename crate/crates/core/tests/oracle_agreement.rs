//! Exhaustive agreement between `decide` and the brute-force oracle.

use rooted_k4::connectivity::subsets_of_size;
use rooted_k4::enumerate::connected_graphs;
use rooted_k4::obstructions::verify_obstruction;
use rooted_k4::{decide, oracle_rooted_minor, verify_witness, RootedInstance, Vertex};

#[test]
fn every_connected_graph_up_to_seven_vertices() {
    let mut checked = 0;
    for n in 4..=7 {
        for g in connected_graphs(n).unwrap() {
            let vs: Vec<Vertex> = g.vertices().collect();
            for r in subsets_of_size(&vs, 4) {
                let roots = [r[0], r[1], r[2], r[3]];
                let inst = RootedInstance::new(g.clone(), roots).unwrap();
                let d = decide(&inst).unwrap_or_else(|e| panic!("{e}: {} roots {roots:?}", rooted_k4::graph6::encode(&g)));
                let oracle = oracle_rooted_minor(&g, &roots).unwrap();
                assert_eq!(d.is_yes(), oracle.is_some(), "{} roots {roots:?}", rooted_k4::graph6::encode(&g));
                match (d.witness(), d.obstruction()) {
                    (Some(w), _) => assert!(verify_witness(&g, &roots, w)),
                    (_, Some(ob)) => assert!(verify_obstruction(&g, &roots, ob)),
                    _ => unreachable!(),
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 30_000);
}
