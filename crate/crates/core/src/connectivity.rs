//! Cut vertices, blocks, vertex connectivity, Menger fans and cycles through
//! prescribed vertices.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};

/// All `k`-element subsets of `items`, in lexicographic order.
pub fn subsets_of_size(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    fn go(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Articulation points of `g`.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let mut cuts = VertexSet::new();
    // A vertex is a cut vertex iff it lies in at least two blocks.
    let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
    for block in blocks(g) {
        for v in block {
            *count.entry(v).or_default() += 1;
        }
    }
    for (v, c) in count {
        if c >= 2 {
            cuts.insert(v);
        }
    }
    cuts
}

/// Biconnected components (blocks) as vertex sets. Isolated vertices form
/// singleton blocks; bridges form two-vertex blocks.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    struct State<'a> {
        g: &'a Graph,
        disc: BTreeMap<Vertex, usize>,
        low: BTreeMap<Vertex, usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<VertexSet>,
    }

    fn dfs(st: &mut State<'_>, u: Vertex, parent: Option<Vertex>) {
        st.time += 1;
        st.disc.insert(u, st.time);
        st.low.insert(u, st.time);
        let ns: Vec<Vertex> = st.g.neighbors(u).collect();
        for w in ns {
            if Some(w) == parent {
                continue;
            }
            if let Some(&dw) = st.disc.get(&w) {
                if dw < st.disc[&u] {
                    st.stack.push(Edge(u, w));
                    let lu = st.low[&u].min(dw);
                    st.low.insert(u, lu);
                }
            } else {
                st.stack.push(Edge(u, w));
                dfs(st, w, Some(u));
                let lu = st.low[&u].min(st.low[&w]);
                st.low.insert(u, lu);
                if st.low[&w] >= st.disc[&u] {
                    let mut block = VertexSet::new();
                    while let Some(Edge(x, y)) = st.stack.pop() {
                        block.insert(x);
                        block.insert(y);
                        if (x, y) == (u, w) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            }
        }
    }

    let mut st = State {
        g,
        disc: BTreeMap::new(),
        low: BTreeMap::new(),
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in g.vertices() {
        if !st.disc.contains_key(&v) {
            if g.degree(v) == 0 {
                st.disc.insert(v, 0);
                st.out.push(VertexSet::from([v]));
            } else {
                dfs(&mut st, v, None);
            }
        }
    }
    st.out
}

/// Components of `g - sep`, or `None` when `g - sep` is connected (or empty).
pub fn split_components(g: &Graph, sep: &VertexSet) -> Option<Vec<VertexSet>> {
    let comps = g.without(sep).components();
    (comps.len() >= 2).then_some(comps)
}

/// Vertex connectivity: the least `k` such that deleting some `k` vertices
/// disconnects `g` or leaves a single vertex.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let vs: Vec<Vertex> = g.vertices().collect();
    for k in 1..n.saturating_sub(1) {
        for s in subsets_of_size(&vs, k) {
            let sep: VertexSet = s.into_iter().collect();
            if split_components(g, &sep).is_some() {
                return k;
            }
        }
    }
    n - 1
}

/// `true` when `g` has more than `k` vertices and no separator of size `< k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    let vs: Vec<Vertex> = g.vertices().collect();
    (1..k).all(|size| {
        subsets_of_size(&vs, size)
            .into_iter()
            .all(|s| split_components(g, &s.into_iter().collect()).is_none())
    })
}

/// Maximum set of paths from `source` to `targets` that share only `source`,
/// each meeting `targets` exactly at its last vertex. Unit vertex capacities.
pub fn disjoint_paths_to_set(g: &Graph, source: Vertex, targets: &VertexSet) -> Vec<Vec<Vertex>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let Some(&si) = index.get(&source) else {
        return Vec::new();
    };
    // Vertex x is split into x_in = 2i and x_out = 2i + 1.
    let n = verts.len();
    let sink = 2 * n;
    let size = 2 * n + 1;
    let mut cap = vec![vec![0i32; size]; size];
    for (i, &v) in verts.iter().enumerate() {
        cap[2 * i][2 * i + 1] = if v == source { n as i32 } else { 1 };
        if targets.contains(&v) {
            cap[2 * i + 1][sink] = 1;
        } else {
            for w in g.neighbors(v) {
                cap[2 * i + 1][2 * index[&w]] = 1;
            }
        }
    }
    let original = cap.clone();
    let start = 2 * si;
    loop {
        let mut prev: Vec<Option<usize>> = vec![None; size];
        prev[start] = Some(start);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if prev[y].is_none() && cap[x][y] > 0 {
                    prev[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        if prev[sink].is_none() {
            break;
        }
        let mut y = sink;
        while y != start {
            let x = prev[y].unwrap();
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
    }
    // Flow on an original arc is its lost capacity.
    let mut flow = vec![vec![0i32; size]; size];
    for x in 0..size {
        for y in 0..size {
            if original[x][y] > 0 && cap[x][y] < original[x][y] {
                flow[x][y] = original[x][y] - cap[x][y];
            }
        }
    }
    let mut paths = Vec::new();
    loop {
        let mut path = vec![source];
        let mut node = 2 * si + 1;
        let mut reached = false;
        while let Some(y) = (0..size).find(|&y| flow[node][y] > 0) {
            flow[node][y] -= 1;
            if y == sink {
                reached = true;
                break;
            }
            path.push(verts[y / 2]);
            flow[y][y + 1] -= 1;
            node = y + 1;
        }
        if !reached {
            break;
        }
        paths.push(path);
    }
    paths
}

/// Three paths from `v` to the cycle `cycle`, pairwise meeting only at `v`,
/// each meeting the cycle only at its final vertex.
pub fn menger_fan(g: &Graph, v: Vertex, cycle: &[Vertex]) -> Result<[Vec<Vertex>; 3]> {
    if cycle.contains(&v) {
        return Err(Error::invalid(format!("{v} lies on the cycle")));
    }
    let targets: VertexSet = cycle.iter().copied().collect();
    let paths = disjoint_paths_to_set(g, v, &targets);
    if paths.len() < 3 {
        return Err(Error::ConnectivityViolation(format!(
            "only {} disjoint paths from {v} to the cycle",
            paths.len()
        )));
    }
    let mut it = paths.into_iter();
    Ok([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()])
}

/// A cycle through every vertex of `s` (`|s|` must be 3 or 4), found by pruned
/// depth-first search, or `None` when no such cycle exists.
pub fn find_cycle_through(g: &Graph, s: &VertexSet) -> Result<Option<Vec<Vertex>>> {
    if !(3..=4).contains(&s.len()) {
        return Err(Error::invalid(format!(
            "cycle search needs 3 or 4 vertices, got {}",
            s.len()
        )));
    }
    if !s.iter().all(|&v| g.contains(v) && g.degree(v) >= 2) {
        return Ok(None);
    }
    // All of s must share a block.
    let Some(block) = blocks(g).into_iter().find(|b| s.is_subset(b)) else {
        return Ok(None);
    };
    let h = g.induced(&block);
    let start = *s.iter().next().unwrap();
    let mut path = vec![start];
    let mut on_path = VertexSet::from([start]);
    Ok(cycle_dfs(&h, s, start, &mut path, &mut on_path))
}

fn cycle_dfs(
    g: &Graph,
    s: &VertexSet,
    start: Vertex,
    path: &mut Vec<Vertex>,
    on_path: &mut VertexSet,
) -> Option<Vec<Vertex>> {
    let cur = *path.last().unwrap();
    let missing: Vec<Vertex> = s.iter().copied().filter(|v| !on_path.contains(v)).collect();
    if missing.is_empty() && path.len() >= 3 && g.has_edge(cur, start) {
        return Some(path.clone());
    }
    // Prune: every missing vertex and the start must stay reachable from cur.
    let mut blocked = on_path.clone();
    blocked.remove(&cur);
    blocked.remove(&start);
    let reach = g.reachable_from(cur, &blocked);
    if !missing.iter().all(|m| reach.contains(m)) {
        return None;
    }
    let ns: Vec<Vertex> = g.neighbors(cur).collect();
    for w in ns {
        if on_path.contains(&w) {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        if let Some(c) = cycle_dfs(g, s, start, path, on_path) {
            return Some(c);
        }
        path.pop();
        on_path.remove(&w);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(vs: &[u32]) -> VertexSet {
        vs.iter().map(|&v| Vertex(v)).collect()
    }

    /// Brute-force connectivity by scanning every vertex subset.
    fn brute_connectivity(g: &Graph) -> usize {
        let vs: Vec<Vertex> = g.vertices().collect();
        let n = vs.len();
        let mut best = n.saturating_sub(1);
        for mask in 0u32..(1 << n) {
            let sep: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
            if sep.len() < best && g.without(&sep).components().len() >= 2 {
                best = sep.len();
            }
        }
        best
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(connectivity(&complete(4)), 3);
        assert_eq!(connectivity(&complete_bipartite(2, 3)), 2);
        assert_eq!(brute_connectivity(&complete_bipartite(2, 3)), 2);
        assert_eq!(connectivity(&octahedron()), 4);
        assert_eq!(connectivity(&cube()), 3);
        assert!(is_k_connected(&octahedron(), 4));
        assert!(!is_k_connected(&cube(), 4));
    }

    #[test]
    fn path_has_middle_cut_vertex() {
        assert_eq!(cut_vertices(&path(3)), set(&[1]));
        assert!(cut_vertices(&cycle(5)).is_empty());
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let mut bs = blocks(&g);
        bs.sort();
        assert_eq!(bs, vec![set(&[0, 1, 2]), set(&[2, 3, 4])]);
    }

    #[test]
    fn cycle_through_c4() {
        let c = find_cycle_through(&cycle(4), &set(&[0, 1, 2, 3])).unwrap().unwrap();
        assert_eq!(c.len(), 4);
        assert!(cycle(4).is_cycle(&c));
    }

    #[test]
    fn star_leaves_have_no_cycle() {
        let star = Graph::from_edges([(0, 1), (0, 2), (0, 3)]);
        assert_eq!(find_cycle_through(&star, &set(&[1, 2, 3])).unwrap(), None);
    }

    #[test]
    fn octahedron_every_quadruple() {
        let g = octahedron();
        let vs: Vec<Vertex> = g.vertices().collect();
        for s in subsets_of_size(&vs, 4) {
            let s: VertexSet = s.into_iter().collect();
            let c = find_cycle_through(&g, &s).unwrap().unwrap();
            assert!(g.is_cycle(&c));
            assert!(s.iter().all(|v| c.contains(v)));
        }
    }

    #[test]
    fn cycle_size_guard() {
        assert!(find_cycle_through(&cycle(4), &set(&[0, 1])).is_err());
    }

    #[test]
    fn wheel_fan_is_spokes() {
        let g = wheel(4);
        let rim = [Vertex(1), Vertex(2), Vertex(3), Vertex(4)];
        let fan = menger_fan(&g, Vertex(0), &rim).unwrap();
        for p in &fan {
            assert_eq!(p.len(), 2);
        }
    }

    #[test]
    fn k5_fan_is_direct() {
        let g = complete(5);
        let fan = menger_fan(&g, Vertex(4), &[Vertex(0), Vertex(1), Vertex(2)]).unwrap();
        assert!(fan.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn octahedron_fan_is_disjoint() {
        let g = octahedron();
        // Triangle 1,2,3 avoids vertex 0 (opposite of 3).
        let tri = [Vertex(1), Vertex(2), Vertex(3)];
        let fan = menger_fan(&g, Vertex(0), &tri).unwrap();
        let mut seen = VertexSet::new();
        let mut ends = VertexSet::new();
        for p in &fan {
            assert!(g.is_path(p));
            for (i, &x) in p.iter().enumerate().skip(1) {
                assert!(seen.insert(x));
                assert_eq!(tri.contains(&x), i == p.len() - 1);
            }
            ends.insert(*p.last().unwrap());
        }
        assert_eq!(ends.len(), 3);
    }

    #[test]
    fn fan_fails_below_three_connected() {
        let g = cycle(5);
        assert!(matches!(
            menger_fan(&g, Vertex(2), &[Vertex(2), Vertex(3), Vertex(1)]),
            Err(Error::InvalidArgument(_))
        ));
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 1)]);
        assert!(matches!(
            menger_fan(&g, Vertex(0), &[Vertex(1), Vertex(2), Vertex(3)]),
            Err(Error::ConnectivityViolation(_))
        ));
    }
}
