//! The well-connected cases: a cycle through the roots, a fan, or a web.

use crate::connectivity::{find_cycle_through, is_k_connected, menger_fan};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::RootedInstance;
use crate::linkage::{find_linkage, LinkageOutcome};
use crate::minors::{check_witness, MinorWitness};
use crate::planarity::planar_embed;

use super::{check_verdict, cycle_linkage_to_minor, no, yes, Ctx, Decision, Verdict};

/// `cycle` rotated to start at `first`.
fn rotated(cycle: &[Vertex], first: Vertex) -> Vec<Vertex> {
    let i = cycle.iter().position(|&x| x == first).expect("vertex on cycle");
    cycle[i..].iter().chain(&cycle[..i]).copied().collect()
}

pub(crate) fn solve_3connected(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4]) -> Result<Verdict> {
    ctx.note(if is_k_connected(g, 4) { "4con" } else { "3con" });
    let all: VertexSet = roots.iter().copied().collect();
    if let Some(cycle) = find_cycle_through(g, &all)? {
        let mut order: Vec<Vertex> = cycle.iter().copied().filter(|x| all.contains(x)).collect();
        let first = order.iter().position(|&x| x == roots[0]).expect("root on cycle");
        order.rotate_left(first);
        let [w, x, y, z] = [order[0], order[1], order[2], order[3]];
        return match find_linkage(g, w, y, x, z)? {
            LinkageOutcome::Linkage(l) => {
                ctx.note("lemma-cycle");
                Ok(yes(cycle_linkage_to_minor(g, &cycle, [w, x, y, z], &l)?))
            }
            LinkageOutcome::Web(cert) => {
                ctx.note("linkage-web");
                Ok(no(cert.into_obstruction()?))
            }
        };
    }
    ctx.note("3con-fan");
    let [a, b, c, d] = roots;
    let three: VertexSet = [a, b, c].into_iter().collect();
    let cycle = find_cycle_through(g, &three)?
        .ok_or_else(|| Error::ConnectivityViolation("no cycle through three roots".into()))?;
    let mut cycle = rotated(&cycle, a);
    let pos = |cy: &[Vertex], v: Vertex| cy.iter().position(|&x| x == v).expect("root on cycle");
    if pos(&cycle, b) > pos(&cycle, c) {
        cycle[1..].reverse();
    }
    let (pb, pc, n) = (pos(&cycle, b), pos(&cycle, c), cycle.len());
    let fan = menger_fan(g, d, &cycle)?;
    let mut ends: Vec<usize> = fan.iter().map(|p| pos(&cycle, *p.last().expect("nonempty"))).collect();
    ends.sort();
    // With no cycle through all four roots, each open arc holds one end.
    let [x1, x2, x3] = [ends[0], ends[1], ends[2]];
    if !(0 < x1 && x1 < pb && pb < x2 && x2 < pc && pc < x3 && x3 < n) {
        return Err(Error::internal("fan ends do not split the three arcs"));
    }
    let arc = |lo: usize, hi: usize| -> VertexSet { (lo..=hi).map(|i| cycle[i % n]).collect() };
    let mut dset: VertexSet = fan.iter().flat_map(|p| p[..p.len() - 1].iter().copied()).collect();
    dset.insert(d);
    let sets = [
        (a, arc(x3 + 1, x1 + n).into_iter().collect::<VertexSet>()),
        (b, arc(x1 + 1, x2)),
        (c, arc(x2 + 1, x3)),
        (d, dset),
    ];
    let w = MinorWitness::new(sets.into_iter().collect());
    Ok(yes(w))
}

/// Deletes the degree-two roots, moves each onto a neighbour (`a` onto `p`)
/// and decides the rest as a 3-connected planar instance.
pub(crate) fn star_route(ctx: &mut Ctx, g: &Graph, roots: [Vertex; 4], a: Vertex, p: Vertex) -> Result<Option<MinorWitness>> {
    let s: VertexSet = roots.iter().copied().filter(|&r| g.degree(r) == 2).collect();
    if !s.contains(&a) || s.contains(&p) {
        return Ok(None);
    }
    let star = g.without(&s);
    let mut moved: Vec<Vertex> = Vec::new();
    for &x in &roots {
        let target = if x == a {
            Some(p)
        } else if !s.contains(&x) {
            Some(x)
        } else {
            let mut nbrs: Vec<Vertex> = g
                .neighbors(x)
                .filter(|y| !s.contains(y) && !moved.contains(y) && *y != p)
                .collect();
            nbrs.sort_by_key(|y| (roots.contains(y), *y));
            nbrs.first().copied()
        };
        match target {
            Some(t) if !moved.contains(&t) => moved.push(t),
            _ => return Ok(None),
        }
    }
    if !is_k_connected(&star, 3) || !planar_embed(&star).is_planar() {
        return Ok(None);
    }
    let sub = [moved[0], moved[1], moved[2], moved[3]];
    let Verdict::Yes { witness } = super::solve(ctx, &star, sub)? else {
        return Ok(None);
    };
    let sets = roots
        .iter()
        .zip(sub)
        .map(|(&x, t)| {
            let mut set = witness.branch(t).cloned().unwrap_or_default();
            if s.contains(&x) {
                set.insert(x);
            }
            (x, set)
        })
        .collect();
    let w = MinorWitness::new(sets);
    check_witness(g, &roots, &w).map_err(|f| Error::internal(format!("lift from the reduced graph failed: {f}")))?;
    Ok(Some(w))
}

fn run(inst: &RootedInstance) -> Result<Decision> {
    let g = inst.graph();
    let roots = inst.roots();
    let mut ctx = Ctx::new(g);
    let verdict = solve_3connected(&mut ctx, g, roots)?;
    check_verdict(g, roots, &verdict)?;
    Ok(Decision {
        verdict,
        trace: ctx.trace,
    })
}

/// Decides a 4-connected instance.
pub fn decide_4connected(inst: &RootedInstance) -> Result<Decision> {
    if !is_k_connected(inst.graph(), 4) {
        return Err(Error::invalid("graph is not 4-connected"));
    }
    run(inst)
}

/// Decides a 3-connected instance.
pub fn decide_3connected(inst: &RootedInstance) -> Result<Decision> {
    if !is_k_connected(inst.graph(), 3) {
        return Err(Error::invalid("graph is not 3-connected"));
    }
    run(inst)
}

/// Decides a 3-connected planar instance, where the answer is NO exactly
/// when the roots share a face.
pub fn decide_3connected_planar(inst: &RootedInstance) -> Result<Decision> {
    let g = inst.graph();
    let Some(embedding) = planar_embed(g).embedding() else {
        return Err(Error::invalid("graph is not planar"));
    };
    let mut d = decide_3connected(inst)?;
    let cofacial = embedding.face_containing(&inst.root_set()).is_some();
    if cofacial == d.is_yes() {
        return Err(Error::internal("verdict disagrees with the common-face test"));
    }
    d.trace.push(if cofacial { "planar-common-face" } else { "planar-no-common-face" }.into());
    Ok(d)
}
