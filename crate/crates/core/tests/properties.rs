//! Property tests for the invariants of each module.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rooted_k4::connectivity::{find_cycle_through, is_k_connected, menger_fan};
use rooted_k4::decider::{cycle_linkage_to_minor, decide_3connected, decide_4connected, reduce_ear};
use rooted_k4::linkage::{brute_force_linkage, find_linkage, verify_web, LinkageOutcome};
use rooted_k4::minors::{oracle_with_limit, verify_k3_certificate};
use rooted_k4::obstructions::{verify_obstruction, Class, Obstruction, PlusGraph, VertexType};
use rooted_k4::planarity::planar_embed;
use rooted_k4::sample::{random_connected_graph, random_roots, sample_obstruction};
use rooted_k4::*;

fn v(x: u32) -> Vertex {
    Vertex(x)
}

/// A graph on `n ∈ lo..=hi` vertices from a list of edge coin flips.
fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::with_vertices((0..n as u32).map(Vertex));
            let mut k = 0;
            for j in 1..n as u32 {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(v(i), v(j));
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graphs(lo, hi).prop_filter("connected", |g| g.is_connected())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Whether every vertex can be sent onto one of `k` connected, nonempty parts
/// with an edge between the parts of each pair in `need`.
fn has_spanning_minor(g: &Graph, k: usize, need: &[(usize, usize)]) -> bool {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    if n < k {
        return false;
    }
    let mut part = vec![0usize; n];
    loop {
        let sets: Vec<VertexSet> = (0..k)
            .map(|p| (0..n).filter(|&i| part[i] == p).map(|i| vs[i]).collect())
            .collect();
        let ok = sets.iter().all(|s| !s.is_empty() && g.induces_connected(s))
            && need.iter().all(|&(a, b)| {
                sets[a].iter().any(|&x| g.neighbors(x).any(|y| sets[b].contains(&y)))
            });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            part[i] += 1;
            if part[i] < k {
                break;
            }
            part[i] = 0;
            i += 1;
        }
    }
}

/// Planarity by the excluded minors; valid for connected graphs.
fn kuratowski_planar(g: &Graph) -> bool {
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    !has_spanning_minor(g, 5, &k5) && !has_spanning_minor(g, 6, &k33)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn contraction_keeps_graphs_simple(g in graphs(2, 9), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let mut g = g;
        for p in picks {
            let edges: Vec<Edge> = g.edges().collect();
            if edges.is_empty() {
                break;
            }
            let e = edges[p.index(edges.len())];
            let before = g.vertex_count();
            g = g.contract_edge(e.0, e.1).unwrap();
            prop_assert_eq!(g.vertex_count(), before - 1);
            // The first-named endpoint survives.
            prop_assert!(g.contains(e.0) && !g.contains(e.1));
            for x in g.vertices() {
                prop_assert!(!g.has_edge(x, x));
                for y in g.neighbors(x) {
                    prop_assert!(g.has_edge(y, x));
                }
            }
        }
    }

    #[test]
    fn separations_match_a_bipartition_scan(g in graphs(4, 7), seed in any::<u64>()) {
        let roots = random_roots(&g, &mut rng(seed));
        let inst = RootedInstance::new(g.clone(), roots).unwrap();
        let got: BTreeSet<(VertexSet, VertexSet)> = enumerate_separations(&inst, 3)
            .unwrap()
            .into_iter()
            .map(|s| (s.left, s.right))
            .collect();
        let vs: Vec<Vertex> = g.vertices().collect();
        let mut want = BTreeSet::new();
        for code in 0..3usize.pow(vs.len() as u32) {
            let (mut l, mut r, mut c) = (VertexSet::new(), VertexSet::new(), code);
            for &x in &vs {
                if c % 3 != 1 { l.insert(x); }
                if c % 3 != 0 { r.insert(x); }
                c /= 3;
            }
            let lp: VertexSet = l.difference(&r).copied().collect();
            let rp: VertexSet = r.difference(&l).copied().collect();
            if l.intersection(&r).count() > 3 || lp.is_empty() || rp.is_empty() {
                continue;
            }
            if lp.iter().any(|&x| g.neighbors(x).any(|y| rp.contains(&y))) {
                continue;
            }
            // Orient as the library does: fewer roots on the left.
            let rs = inst.root_set();
            let (s, t) = (l.intersection(&rs).count(), r.intersection(&rs).count());
            want.insert(if s < t || (s == t && l <= r) { (l, r) } else { (r, l) });
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn planarity_matches_euler_and_kuratowski(g in connected(5, 8)) {
        let planar = planar_embed(&g).is_planar();
        if g.edge_count() > 3 * g.vertex_count() - 6 {
            prop_assert!(!planar);
        }
        prop_assert_eq!(planar, kuratowski_planar(&g));
        if let Some(e) = planar_embed(&g).embedding() {
            prop_assert!(e.is_valid_for(&g));
        }
    }

    #[test]
    fn returned_paths_and_cycles_live_in_the_graph(g in connected(4, 9), seed in any::<u64>()) {
        let roots = random_roots(&g, &mut rng(seed));
        let s: VertexSet = roots.iter().copied().collect();
        if let Some(c) = find_cycle_through(&g, &s).unwrap() {
            prop_assert!(g.is_cycle(&c));
            prop_assert!(roots.iter().all(|r| c.contains(r)));
        }
        if let Some(p) = g.shortest_path(roots[0], roots[1], &VertexSet::new()) {
            prop_assert!(g.is_path(&p));
        }
        let three: VertexSet = roots[..3].iter().copied().collect();
        if let (Some(c), true) = (find_cycle_through(&g, &three).unwrap(), is_k_connected(&g, 3)) {
            if !c.contains(&roots[3]) {
                for p in menger_fan(&g, roots[3], &c).unwrap() {
                    prop_assert!(g.is_path(&p));
                    prop_assert!(p[..p.len() - 1].iter().all(|x| !c.contains(x)));
                }
            }
        }
    }

    #[test]
    fn rooted_k3_dichotomy(g in connected(3, 8), seed in any::<u64>()) {
        let r = random_roots(&Graph::with_vertices(g.vertices().chain([v(100)])), &mut rng(seed));
        let t: Vec<Vertex> = r.iter().copied().filter(|x| g.contains(*x)).take(3).collect();
        prop_assume!(t.len() == 3);
        let oracle = oracle_with_limit(&g, &t, 12).unwrap();
        match rooted_k3(&g, t[0], t[1], t[2]).unwrap() {
            K3Outcome::Witness(w) => {
                prop_assert!(oracle.is_some());
                prop_assert!(verify_witness(&g, &t, &w));
            }
            K3Outcome::Apex(c) => {
                prop_assert!(oracle.is_none());
                prop_assert!(verify_k3_certificate(&g, [t[0], t[1], t[2]], &c));
            }
        }
    }

    #[test]
    fn adding_edges_keeps_minors(g in connected(4, 8), seed in any::<u64>(), adds in prop::collection::vec((0u32..8, 0u32..8), 1..6)) {
        let roots = random_roots(&g, &mut rng(seed));
        let mut g = g;
        let mut had = oracle_rooted_minor(&g, &roots).unwrap().is_some();
        for (x, y) in adds {
            if x == y || !g.contains(v(x)) || !g.contains(v(y)) {
                continue;
            }
            g.add_edge(v(x), v(y));
            let now = oracle_rooted_minor(&g, &roots).unwrap();
            prop_assert!(!had || now.is_some());
            if let Some(w) = &now {
                prop_assert!(verify_witness(&g, &roots, w));
            }
            had = now.is_some();
        }
    }

    #[test]
    fn linkage_outcome_matches_brute_force(g in graphs(4, 7), seed in any::<u64>()) {
        let [s1, t1, s2, t2] = random_roots(&g, &mut rng(seed));
        let brute = brute_force_linkage(&g, s1, t1, s2, t2);
        match find_linkage(&g, s1, t1, s2, t2).unwrap() {
            LinkageOutcome::Linkage(l) => {
                prop_assert!(brute);
                prop_assert!(l.verify(&g, s1, t1, s2, t2));
            }
            LinkageOutcome::Web(cert) => {
                prop_assert!(!brute);
                prop_assert!(verify_web(&g, [s1, s2, t1, t2], &cert));
            }
        }
    }

    #[test]
    fn web_certificates_exclude_linkages(g in connected(6, 9), seed in any::<u64>()) {
        let [s1, t1, s2, t2] = random_roots(&g, &mut rng(seed));
        if let LinkageOutcome::Web(cert) = find_linkage(&g, s1, t1, s2, t2).unwrap() {
            prop_assert!(!brute_force_linkage(&g, s1, t1, s2, t2));
            prop_assert!(!brute_force_linkage(&cert.plus.full(), s1, t1, s2, t2));
        }
    }

    #[test]
    fn sampled_obstructions_are_sound(seed in any::<u64>(), c in 0usize..6) {
        let class = Class::ALL[c];
        let ob = sample_obstruction(class, 10, &mut rng(seed)).unwrap();
        let g = ob.full();
        prop_assert!(verify_obstruction(&g, &ob.nominated, &ob));
        prop_assert!(oracle_rooted_minor(&g, &ob.nominated).unwrap().is_none());
        for &x in &ob.nominated {
            let t = ob.classify_vertex(x).unwrap();
            let expect = match class {
                _ if t == VertexType::Type2 => class == Class::A,
                Class::D | Class::E => true,
                _ => t == VertexType::Type3,
            };
            prop_assert!(expect, "{} vertex {} typed {:?}", class, x, t);
        }
    }

    #[test]
    fn adding_edges_never_loses_a_decided_minor(g in connected(4, 9), seed in any::<u64>(), adds in prop::collection::vec((0u32..9, 0u32..9), 1..5)) {
        let roots = random_roots(&g, &mut rng(seed));
        let mut g = g;
        let mut had = decide(&RootedInstance::new(g.clone(), roots).unwrap()).unwrap().is_yes();
        for (x, y) in adds {
            if x == y || !g.contains(v(x)) || !g.contains(v(y)) {
                continue;
            }
            g.add_edge(v(x), v(y));
            let now = decide(&RootedInstance::new(g.clone(), roots).unwrap()).unwrap().is_yes();
            prop_assert!(!had || now);
            had = now;
        }
    }

    #[test]
    fn connected_fast_paths_agree(g in connected(5, 8), seed in any::<u64>()) {
        prop_assume!(is_k_connected(&g, 3));
        let roots = random_roots(&g, &mut rng(seed));
        let inst = RootedInstance::new(g.clone(), roots).unwrap();
        let oracle = oracle_rooted_minor(&g, &roots).unwrap().is_some();
        prop_assert_eq!(decide(&inst).unwrap().is_yes(), oracle);
        prop_assert_eq!(decide_3connected(&inst).unwrap().is_yes(), oracle);
        if is_k_connected(&g, 4) {
            prop_assert_eq!(decide_4connected(&inst).unwrap().is_yes(), oracle);
        } else {
            prop_assert!(decide_4connected(&inst).is_err());
        }
    }

    #[test]
    fn cycle_lemma_always_builds_a_minor(n in 5usize..=9, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_connected_graph(n, 0.5, &mut r);
        let roots = random_roots(&g, &mut r);
        let s: VertexSet = roots.iter().copied().collect();
        let Some(c) = find_cycle_through(&g, &s).unwrap() else { return Ok(()) };
        let order: Vec<Vertex> = c.iter().copied().filter(|x| s.contains(x)).collect();
        let [a, b, cc, d] = [order[0], order[1], order[2], order[3]];
        if let LinkageOutcome::Linkage(l) = find_linkage(&g, a, cc, b, d).unwrap() {
            let w = cycle_linkage_to_minor(&g, &c, [a, b, cc, d], &l).unwrap();
            prop_assert!(verify_witness(&g, &[a, b, cc, d], &w));
        }
    }
}

fn reduced_class(ob: &Obstruction) -> (Class, Graph) {
    let inst = RootedInstance::new(ob.full(), ob.nominated).unwrap();
    let red = reduce_ear(&inst).expect("two nominated ears");
    let g = red.instance.graph().clone();
    let class = Obstruction::detect(PlusGraph::new(g.clone()), red.instance.roots()).unwrap().class();
    (class, g)
}

#[test]
fn ear_reduction_cascade() {
    use rooted_k4::obstructions::{build_class, ClassSpec};
    let none = BTreeMap::new();
    let wheel = rooted_k4::graph::named::wheel(4);
    let outer = [v(1), v(2), v(3), v(4)];
    let f = build_class(ClassSpec::F { core: wheel.clone(), outer }, &none).unwrap();
    assert_eq!(reduced_class(&f).0, Class::E);
    let e = build_class(ClassSpec::E { core: wheel, outer }, &none).unwrap();
    assert_eq!(reduced_class(&e).0, Class::D);
    let (class, g) = reduced_class(&build_class(ClassSpec::B, &none).unwrap());
    assert_eq!((class, g.vertex_count(), g.edge_count()), (Class::D, 4, 5));
    assert_eq!(reduced_class(&build_class(ClassSpec::C, &none).unwrap()).0, Class::A);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn separations_come_sorted(g in connected(5, 8), seed in any::<u64>()) {
        let roots = random_roots(&g, &mut rng(seed));
        let inst = RootedInstance::new(g, roots).unwrap();
        let seps = enumerate_separations(&inst, 3).unwrap();
        let key = |s: &Separation| {
            let in_sep = s.separator.iter().filter(|x| inst.is_root(**x)).count();
            let (l, r) = s.root_split;
            (s.order, in_sep, std::cmp::Reverse(r - l))
        };
        for w in seps.windows(2) {
            prop_assert!(key(&w[0]) <= key(&w[1]));
        }
        for s in &seps {
            prop_assert!(s.root_split.0 <= s.root_split.1);
            prop_assert_eq!(s.separator.len(), s.order);
        }
    }

    #[test]
    fn obstructions_survive_json_and_relabelling(seed in any::<u64>(), c in 0usize..6, shift in 1u32..50) {
        let ob = sample_obstruction(Class::ALL[c], 10, &mut rng(seed)).unwrap();
        let back: Obstruction = serde_json::from_str(&serde_json::to_string(&ob).unwrap()).unwrap();
        prop_assert_eq!(&back, &ob);
        let map: BTreeMap<Vertex, Vertex> = ob.plus.vertex_set().into_iter().map(|x| (x, v(x.0 + shift))).collect();
        let moved = ob.relabel(&map).unwrap();
        prop_assert_eq!(moved.class(), ob.class());
        prop_assert!(verify_obstruction(&moved.full(), &moved.nominated, &moved));
    }
}
