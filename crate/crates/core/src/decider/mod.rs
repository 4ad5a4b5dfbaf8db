//! The decision procedure: a rooted minor or an obstruction, always verified.

mod connected;
mod cycle;
mod reductions;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::subsets_of_size;
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle, Vertex, VertexSet};
use crate::instance::{enumerate_separations, RootedInstance, Separation};
use crate::linkage::{find_linkage, LinkageOutcome};
use crate::minors::{check_witness, rooted_k3, K3Outcome, MinorWitness};
use crate::obstructions::{
    absorb_component, check_obstruction, graft_pendant_root, replace_root, Obstruction, PlusGraph,
};

pub use connected::{decide_3connected, decide_3connected_planar, decide_4connected};
pub use cycle::{cycle_linkage_steps, cycle_linkage_to_minor};
pub use reductions::{reduce_ear, reduce_plus, split_22_separation, EarReduction};

/// Recursion guard; real inputs stay far below it.
pub const MAX_DEPTH: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Yes { witness: MinorWitness },
    No { obstruction: Obstruction },
}

/// A verified answer together with the proof cases that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self.verdict, Verdict::Yes { .. })
    }

    pub fn witness(&self) -> Option<&MinorWitness> {
        match &self.verdict {
            Verdict::Yes { witness } => Some(witness),
            Verdict::No { .. } => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match &self.verdict {
            Verdict::No { obstruction } => Some(obstruction),
            Verdict::Yes { .. } => None,
        }
    }
}

pub(crate) struct Ctx {
    pub trace: Vec<String>,
    next: u32,
    depth: usize,
}

impl Ctx {
    pub fn new(g: &Graph) -> Self {
        Ctx {
            trace: Vec::new(),
            next: g.fresh_vertex().0,
            depth: 0,
        }
    }

    /// A vertex id never used by the input or any earlier step.
    fn fresh(&mut self) -> Vertex {
        let v = Vertex(self.next);
        self.next += 1;
        v
    }

    pub fn note(&mut self, label: impl Into<String>) {
        self.trace.push(label.into());
    }
}

/// Checks a verdict against the graph it answers.
pub(crate) fn check_verdict(g: &Graph, roots: [Vertex; 4], v: &Verdict) -> Result<()> {
    match v {
        Verdict::Yes { witness } => check_witness(g, &roots, witness)
            .map_err(|f| Error::internal(format!("witness fails verification: {f}"))),
        Verdict::No { obstruction } => check_obstruction(g, &roots, obstruction)
            .map_err(|f| Error::internal(format!("obstruction fails verification: {f}"))),
    }
}

/// Re-checks a decision against its instance; `Err` names the fault.
pub fn check_decision(inst: &RootedInstance, d: &Decision) -> Result<()> {
    check_verdict(inst.graph(), inst.roots(), &d.verdict)
}

/// Decides whether the instance has a rooted `K4`-minor.
pub fn decide(inst: &RootedInstance) -> Result<Decision> {
    let g = inst.graph();
    let mut ctx = Ctx::new(g);
    let verdict = solve(&mut ctx, g, inst.roots())?;
    Ok(Decision {
        verdict,
        trace: ctx.trace,
    })
}

pub(crate) fn yes(witness: MinorWitness) -> Verdict {
    Verdict::Yes { witness }
}

pub(crate) fn no(obstruction: Obstruction) -> Verdict {
    Verdict::No { obstruction }
}

pub(crate) fn solve(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4]) -> Result<Verdict> {
    if ctx.depth >= MAX_DEPTH {
        return Err(Error::ResourceLimit(format!("recursion deeper than {MAX_DEPTH}")));
    }
    ctx.depth += 1;
    let out = solve_cases(ctx, g, roots);
    ctx.depth -= 1;
    let v = out?;
    check_verdict(g, roots, &v)?;
    Ok(v)
}

/// `K4` minus the edge `xy` on the four roots, with the given cliques.
fn k4_minus(roots: [Vertex; 4], x: Vertex, y: Vertex, cliques: &[([Vertex; 3], &VertexSet)]) -> Result<Obstruction> {
    let mut base = Graph::with_vertices(roots);
    for (i, &p) in roots.iter().enumerate() {
        for &q in &roots[i + 1..] {
            if (p, q) != (x, y) && (q, p) != (x, y) {
                base.add_edge(p, q);
            }
        }
    }
    let mut plus = PlusGraph::new(base);
    for ([a, b, c], xs) in cliques {
        plus.attach(Triangle::new(*a, *b, *c), xs.iter().copied());
    }
    Obstruction::detect(plus, roots)
}

fn minus(a: &VertexSet, drop: &[Vertex]) -> VertexSet {
    a.iter().copied().filter(|v| !drop.contains(v)).collect()
}

fn roots_in(set: &VertexSet, roots: &[Vertex; 4]) -> Vec<Vertex> {
    roots.iter().copied().filter(|r| set.contains(r)).collect()
}

fn rekey(w: &MinorWitness, from: Vertex, to: Vertex, extra: &VertexSet) -> MinorWitness {
    let mut sets: BTreeMap<Vertex, VertexSet> = w.branch_sets.clone();
    let mut s = sets.remove(&from).unwrap_or_default();
    s.extend(extra.iter().copied());
    sets.insert(to, s);
    MinorWitness::new(sets)
}

/// Adds `extra` to the branch set holding `x`, if any.
fn grow_owner(w: &MinorWitness, x: Vertex, extra: &VertexSet) -> Option<MinorWitness> {
    let r = w.owner(x)?;
    Some(rekey(w, r, r, extra))
}

fn swap_root(roots: [Vertex; 4], from: Vertex, to: Vertex) -> [Vertex; 4] {
    roots.map(|r| if r == from { to } else { r })
}

fn with_edge(g: &Graph, keep: &VertexSet, u: Vertex, v: Vertex) -> Graph {
    let mut h = g.induced(keep);
    h.add_edge(u, v);
    h
}

fn solve_cases(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4]) -> Result<Verdict> {
    if g.vertex_count() == 4 {
        return base_case(ctx, g, roots);
    }
    let inst = RootedInstance::new(g.clone(), roots)?;
    let seps = enumerate_separations(&inst, 2)?;
    if let Some(s) = seps.iter().find(|s| s.order == 0) {
        return order0(ctx, g, roots, s);
    }
    if let Some(s) = seps.iter().find(|s| s.order == 1) {
        return order1(ctx, g, roots, s);
    }
    let two: Vec<&Separation> = seps.iter().filter(|s| s.order == 2).collect();
    let find = |splits: &[(usize, usize)]| two.iter().copied().find(|s| splits.contains(&s.root_split));
    if let Some(s) = find(&[(0, 4), (1, 4), (2, 4)]) {
        return order2_contract(ctx, g, roots, s);
    }
    if let Some(s) = find(&[(2, 3)]) {
        return order2_23(ctx, g, roots, s);
    }
    if let Some(s) = find(&[(3, 3)]) {
        ctx.note("sep(3,3)-order2");
        ctx.note("certificate-without-search");
        let [b, c]: [Vertex; 2] = s.separator.iter().copied().collect::<Vec<_>>().try_into().expect("order two");
        let a = roots_in(&minus(&s.left, &[b, c]), &roots)[0];
        let d = roots_in(&minus(&s.right, &[b, c]), &roots)[0];
        let ob = k4_minus(
            roots,
            a,
            d,
            &[([a, b, c], &minus(&s.left, &[a, b, c])), ([b, c, d], &minus(&s.right, &[b, c, d]))],
        )?;
        return Ok(no(ob));
    }
    if let Some(s) = find(&[(2, 2)]) {
        return order2_22(ctx, g, roots, s);
    }
    if let Some(v) = order3_absorb(ctx, g, roots)? {
        return Ok(v);
    }
    let ears: Vec<&Separation> = two.iter().copied().filter(|s| s.root_split == (1, 3)).collect();
    let is_k3 = |s: &Separation| {
        let uv: Vec<Vertex> = s.separator.iter().copied().collect();
        s.left.len() == 3 && g.has_edge(uv[0], uv[1])
    };
    if let Some(s) = ears.iter().find(|s| !is_k3(s)) {
        return order2_13(ctx, g, roots, s);
    }
    if let Some(s) = ears.first() {
        return k3_ear(ctx, g, roots, s);
    }
    connected::solve_3connected(ctx, g, roots)
}

fn base_case(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4]) -> Result<Verdict> {
    let missing = roots
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| roots[i + 1..].iter().map(move |&y| (x, y)))
        .find(|&(x, y)| !g.has_edge(x, y));
    match missing {
        None => {
            ctx.note("base-k4");
            Ok(yes(MinorWitness::singletons(&roots)))
        }
        Some((x, y)) => {
            ctx.note("base-k4-minus-edge");
            Ok(no(k4_minus(roots, x, y, &[])?))
        }
    }
}

fn order0(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    let (sl, tr) = s.root_split;
    ctx.note(format!("sep({sl},{tr})-order0"));
    match s.root_split {
        (0, 4) => match solve(ctx, &g.induced(&s.right), roots)? {
            Verdict::No { obstruction } => {
                let anchor = VertexSet::from([roots[0]]);
                Ok(no(absorb_component(&obstruction, &anchor, &s.left)?))
            }
            v => Ok(v),
        },
        (1, 3) => {
            let a = roots_in(&s.left, &roots)[0];
            let r = roots_in(&s.right, &roots);
            let (b, c, d) = (r[0], r[1], r[2]);
            let ob = k4_minus(
                roots,
                a,
                d,
                &[([a, b, c], &minus(&s.left, &[a])), ([b, c, d], &minus(&s.right, &[b, c, d]))],
            )?;
            Ok(no(ob))
        }
        (2, 2) => {
            let l = roots_in(&s.left, &roots);
            let r = roots_in(&s.right, &roots);
            let (a, b, c, d) = (l[0], l[1], r[0], r[1]);
            let ob = k4_minus(
                roots,
                a,
                c,
                &[([a, b, d], &minus(&s.left, &[a, b])), ([b, c, d], &minus(&s.right, &[c, d]))],
            )?;
            Ok(no(ob))
        }
        other => Err(Error::internal(format!("unexpected order-0 split {other:?}"))),
    }
}

fn order1(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    let (sl, tr) = s.root_split;
    ctx.note(format!("sep({sl},{tr})-order1"));
    let u = *s.separator.iter().next().expect("order one");
    match s.root_split {
        (0, 4) | (1, 4) => match solve(ctx, &g.induced(&s.right), roots)? {
            Verdict::No { obstruction } => {
                let extra = minus(&s.left, &[u]);
                Ok(no(absorb_component(&obstruction, &VertexSet::from([u]), &extra)?))
            }
            v => Ok(v),
        },
        (1, 3) => {
            let a = roots_in(&s.left, &roots)[0];
            match solve(ctx, &g.induced(&s.right), swap_root(roots, a, u))? {
                Verdict::Yes { witness } => Ok(yes(rekey(&witness, u, a, &s.left))),
                Verdict::No { obstruction } => Ok(no(replace_root(&obstruction, u, a, &minus(&s.left, &[a, u]))?)),
            }
        }
        (2, 2) => {
            let l = roots_in(&s.left, &roots);
            let r = roots_in(&s.right, &roots);
            let (a, b, c, d) = (l[0], l[1], r[0], r[1]);
            let mut base = Graph::from_edges([]);
            for (x, y) in [(a, b), (b, c), (c, d), (d, a)] {
                base.add_edge(x, y);
            }
            for x in [a, b, c, d] {
                base.add_edge(u, x);
            }
            let mut plus = PlusGraph::new(base);
            plus.attach(Triangle::new(a, b, u), minus(&s.left, &[a, b, u]));
            plus.attach(Triangle::new(c, d, u), minus(&s.right, &[c, d, u]));
            Ok(no(Obstruction::detect(plus, roots)?))
        }
        (2, 3) => {
            ctx.note("certificate-without-search");
            let b = u;
            let a = roots_in(&minus(&s.left, &[b]), &roots)[0];
            let r = roots_in(&minus(&s.right, &[b]), &roots);
            let (c, d) = (r[0], r[1]);
            let ob = k4_minus(
                roots,
                a,
                d,
                &[([a, b, c], &minus(&s.left, &[a, b])), ([b, c, d], &minus(&s.right, &[b, c, d]))],
            )?;
            Ok(no(ob))
        }
        other => Err(Error::internal(format!("unexpected order-1 split {other:?}"))),
    }
}

fn pair(sep: &VertexSet) -> (Vertex, Vertex) {
    let v: Vec<Vertex> = sep.iter().copied().collect();
    (v[0], v[1])
}

fn order2_contract(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    let (sl, tr) = s.root_split;
    ctx.note(format!("sep({sl},{tr})-order2"));
    let (u, v) = pair(&s.separator);
    let private = minus(&s.left, &[u, v]);
    match solve(ctx, &with_edge(g, &s.right, u, v), roots)? {
        Verdict::Yes { witness } => {
            let w = grow_owner(&witness, u, &private)
                .or_else(|| grow_owner(&witness, v, &private))
                .unwrap_or(witness);
            Ok(yes(w))
        }
        Verdict::No { obstruction } => Ok(no(absorb_component(&obstruction, &VertexSet::from([u, v]), &private)?)),
    }
}

fn order2_23(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    ctx.note("sep(2,3)-order2");
    let b = roots_in(&s.separator, &roots)[0];
    let u = *s.separator.iter().find(|&&x| x != b).expect("order two");
    let a = roots_in(&minus(&s.left, &[b]), &roots)[0];
    match solve(ctx, &with_edge(g, &s.right, u, b), swap_root(roots, a, u))? {
        Verdict::Yes { witness } => Ok(yes(rekey(&witness, u, a, &minus(&s.left, &[b])))),
        Verdict::No { obstruction } => Ok(no(graft_pendant_root(&obstruction, u, b, a, &minus(&s.left, &[a, b, u]))?)),
    }
}

/// Lifts a witness of `side + uv` (roots `ends` on the far side replaced by
/// `u, v`) through the other side `far` of a cut pair.
fn lift_through(g: &Graph, w: &MinorWitness, far: &VertexSet, (u, v): (Vertex, Vertex), ends: [Vertex; 2], fresh: Vertex) -> Result<MinorWitness> {
    let mut h = g.induced(far);
    for e in ends {
        h.add_edge(fresh, e);
    }
    let paths = crate::connectivity::disjoint_paths_to_set(&h, fresh, &VertexSet::from([u, v]));
    if paths.len() < 2 {
        return Err(Error::internal("cut pair is not linked to the far roots"));
    }
    let mut sets = w.branch_sets.clone();
    let mut owner: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for p in &paths {
        let (start, end) = (p[1], *p.last().expect("nonempty"));
        let mut set = sets.remove(&end).unwrap_or_default();
        set.extend(p[1..].iter().copied());
        for &x in &set {
            owner.insert(x, start);
        }
        sets.insert(start, set);
    }
    // Spread over the rest of the far side so the two new parts touch.
    let mut frontier: Vec<Vertex> = owner.keys().copied().filter(|x| far.contains(x)).collect();
    while let Some(x) = frontier.pop() {
        let o = owner[&x];
        for y in g.neighbors(x) {
            if far.contains(&y) && !owner.contains_key(&y) && w.owner(y).is_none() {
                owner.insert(y, o);
                sets.get_mut(&o).expect("owner has a set").insert(y);
                frontier.insert(0, y);
            }
        }
    }
    Ok(MinorWitness::new(sets))
}

fn order2_22(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    ctx.note("sep(2,2)-order2");
    let (u, v) = pair(&s.separator);
    let l = roots_in(&s.left, &roots);
    let r = roots_in(&s.right, &roots);
    let (g1, g2) = (with_edge(g, &s.left, u, v), with_edge(g, &s.right, u, v));
    let ob1 = match solve(ctx, &g1, [l[0], l[1], u, v])? {
        Verdict::Yes { witness } => {
            let z = ctx.fresh();
            return Ok(yes(lift_through(g, &witness, &s.right, (u, v), [r[0], r[1]], z)?));
        }
        Verdict::No { obstruction } => obstruction,
    };
    let ob2 = match solve(ctx, &g2, [u, v, r[0], r[1]])? {
        Verdict::Yes { witness } => {
            let z = ctx.fresh();
            return Ok(yes(lift_through(g, &witness, &s.left, (u, v), [l[0], l[1]], z)?));
        }
        Verdict::No { obstruction } => obstruction,
    };
    Ok(no(crate::obstructions::join_at_cut_pair(&ob1, &ob2, u, v)?))
}

fn order3_absorb(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4]) -> Result<Option<Verdict>> {
    let vs: Vec<Vertex> = g.vertices().collect();
    for sep in subsets_of_size(&vs, 3) {
        let sep_set: VertexSet = sep.iter().copied().collect();
        let Some(comps) = crate::connectivity::split_components(g, &sep_set) else {
            continue;
        };
        let private: VertexSet = comps
            .into_iter()
            .filter(|c| roots.iter().all(|r| !c.contains(r)))
            .flatten()
            .collect();
        if private.len() < 2 {
            continue;
        }
        ctx.note("order3-absorb");
        let (x, y, z) = (sep[0], sep[1], sep[2]);
        let mut side = sep_set.clone();
        side.extend(private.iter().copied());
        let k3 = match rooted_k3(&g.induced(&side), x, y, z)? {
            K3Outcome::Witness(w) => w,
            K3Outcome::Apex(_) => return Err(Error::internal("root-free side of an order-3 separation has no rooted K3")),
        };
        let mut rest = g.without(&private);
        for (p, q) in [(x, y), (y, z), (x, z)] {
            rest.add_edge(p, q);
        }
        return match solve(ctx, &rest, roots)? {
            Verdict::Yes { witness } => {
                let mut w = witness;
                for t in [x, y, z] {
                    if let Some(grown) = grow_owner(&w, t, k3.branch(t).expect("rooted at the separator")) {
                        w = grown;
                    }
                }
                Ok(Some(yes(w)))
            }
            Verdict::No { obstruction } => Ok(Some(no(absorb_component(&obstruction, &sep_set, &private)?))),
        };
    }
    Ok(None)
}

fn order2_13(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    ctx.note("sep(1,3)-order2");
    let (u, v) = pair(&s.separator);
    let a = roots_in(&s.left, &roots)[0];
    let a2 = ctx.fresh();
    let mut h = with_edge(g, &s.right, u, v);
    h.add_edge(a2, u);
    h.add_edge(a2, v);
    match solve(ctx, &h, swap_root(roots, a, a2))? {
        Verdict::Yes { witness } => {
            let set = witness.branch(a2).cloned().unwrap_or_default();
            let (u, v) = if set.contains(&u) {
                (u, v)
            } else if set.contains(&v) {
                (v, u)
            } else {
                return Err(Error::internal("degree-two root set misses both neighbours"));
            };
            let _ = u;
            let mut grown: VertexSet = minus(&set, &[a2]);
            grown.extend(minus(&s.left, &[v]));
            let mut sets = witness.branch_sets.clone();
            sets.remove(&a2);
            sets.insert(a, grown);
            Ok(yes(MinorWitness::new(sets)))
        }
        Verdict::No { obstruction } => {
            let t = obstruction
                .plus
                .covering_triangle(&VertexSet::from([a2, u, v]))
                .filter(|t| t.contains(a2))
                .ok_or_else(|| Error::internal("new root shares no triangle with the cut pair"))?;
            let mut plus = obstruction.plus.clone();
            plus.rename(a2, a);
            let [p, q, r] = t.0.map(|x| if x == a2 { a } else { x });
            plus.attach(Triangle::new(p, q, r), minus(&s.left, &[a, u, v]));
            Ok(no(Obstruction::detect(plus, roots)?))
        }
    }
}

fn k3_ear(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], s: &Separation) -> Result<Verdict> {
    ctx.note("sep(1,3)-order2-k3");
    let (u, v) = pair(&s.separator);
    let a = roots_in(&s.left, &roots)[0];
    let gu = g.contract_edge(u, a)?;
    if let Verdict::Yes { witness } = solve(ctx, &gu, swap_root(roots, a, u))? {
        return Ok(yes(rekey(&witness, u, a, &VertexSet::from([a]))));
    }
    for p in [v, u] {
        if let Some(w) = connected::star_route(ctx, g, roots, a, p)? {
            ctx.note("k3-ear-gstar");
            return Ok(yes(w));
        }
    }
    let [r0, r1, r2, r3] = roots;
    for [w, x, y, z] in [[r0, r1, r2, r3], [r0, r1, r3, r2], [r0, r2, r1, r3]] {
        if let LinkageOutcome::Web(cert) = find_linkage(g, w, y, x, z)? {
            ctx.note("k3-ear-web");
            return Ok(no(cert.into_obstruction()?));
        }
    }
    ctx.note("k3-ear-gv");
    let gv = g.contract_edge(v, a)?;
    match solve(ctx, &gv, swap_root(roots, a, v))? {
        Verdict::Yes { witness } => Ok(yes(rekey(&witness, v, a, &VertexSet::from([a])))),
        Verdict::No { .. } => Err(Error::internal("both contractions of the ear are minor-free, yet all linkages exist")),
    }
}

#[cfg(test)]
mod tests;
