//! Webs: planar cores with a quadrilateral outer face whose inner faces and
//! triangles coincide.

use std::collections::BTreeMap;

use crate::graph::{triangles, Graph, Triangle, Vertex, VertexSet};
use crate::planarity::{planar_embed, PlanarEmbedding};

use super::{ObstructionFault, PlusGraph};

fn fault(msg: impl Into<String>) -> ObstructionFault {
    ObstructionFault::Web(msg.into())
}

fn is_bare_square(core: &Graph, outer: [Vertex; 4]) -> bool {
    core.vertex_count() == 4
        && core.edge_count() == 4
        && (0..4).all(|i| core.has_edge(outer[i], outer[(i + 1) % 4]))
}

/// `true` when `walk` is the cycle `outer` up to rotation and reflection.
pub(crate) fn same_cycle(walk: &[Vertex], outer: &[Vertex]) -> bool {
    let n = outer.len();
    if walk.len() != n {
        return false;
    }
    let Some(start) = walk.iter().position(|&v| v == outer[0]) else {
        return false;
    };
    let fwd = (0..n).all(|i| walk[(start + i) % n] == outer[i]);
    let back = (0..n).all(|i| walk[(start + n - i) % n] == outer[i]);
    fwd || back
}

/// The core with an extra vertex joined to the outer quadrilateral.
fn capped(core: &Graph, outer: [Vertex; 4]) -> (Graph, Vertex) {
    let mut g = core.clone();
    let o = g.fresh_vertex();
    for x in outer {
        g.add_edge(o, x);
    }
    (g, o)
}

/// Embedding of a capped core when it is a triangulation.
fn capped_triangulation(core: &Graph, outer: [Vertex; 4]) -> Option<(Graph, Vertex, PlanarEmbedding)> {
    if outer.iter().any(|&x| !core.contains(x)) || !core.is_connected() {
        return None;
    }
    let (g, o) = capped(core, outer);
    let emb = planar_embed(&g).embedding()?;
    let n = g.vertex_count();
    let triangulated = n >= 4
        && g.edge_count() == 3 * n - 6
        && emb.faces().iter().all(|f| f.len() == 3);
    triangulated.then_some((g, o, emb))
}

/// Embeds a web core so that `outer` bounds the outer face, or `None` when
/// the core is not a web on that quadrilateral. Separating triangles are
/// tolerated here; [`check_web`] rejects them.
pub fn embed_web(core: &Graph, outer: [Vertex; 4]) -> Option<PlanarEmbedding> {
    if is_bare_square(core, outer) {
        let rotation = (0..4)
            .map(|i| (outer[i], vec![outer[(i + 3) % 4], outer[(i + 1) % 4]]))
            .collect();
        let emb = PlanarEmbedding::from_rotation(rotation);
        let idx = emb.faces().iter().position(|f| same_cycle(f, &outer))?;
        return Some(emb.with_outer_face(idx));
    }
    let (_, o, emb) = capped_triangulation(core, outer)?;
    let rotation: BTreeMap<Vertex, Vec<Vertex>> = emb
        .rotation
        .iter()
        .filter(|(&v, _)| v != o)
        .map(|(&v, rot)| (v, rot.iter().copied().filter(|&w| w != o).collect()))
        .collect();
    let emb = PlanarEmbedding::from_rotation(rotation);
    let idx = emb.faces().iter().position(|f| same_cycle(f, &outer))?;
    Some(emb.with_outer_face(idx))
}

/// Checks the web predicate for `core` with outer quadrilateral `outer`
/// against the supplied embedding.
pub fn check_web(core: &Graph, outer: [Vertex; 4], emb: &PlanarEmbedding) -> Result<(), ObstructionFault> {
    let distinct: VertexSet = outer.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(fault("outer face needs four distinct vertices"));
    }
    if !core.is_connected() {
        return Err(fault("core is disconnected"));
    }
    if !emb.is_valid_for(core) {
        return Err(fault("embedding does not describe the core"));
    }
    if !same_cycle(emb.outer(), &outer) {
        return Err(fault("outer face differs from the stated quadrilateral"));
    }
    if is_bare_square(core, outer) {
        return Ok(());
    }
    let mut face_triples = std::collections::BTreeSet::new();
    for (i, f) in emb.faces().iter().enumerate() {
        if i == emb.outer_face {
            continue;
        }
        if f.len() != 3 {
            return Err(fault(format!("inner face of length {}", f.len())));
        }
        face_triples.insert(Triangle::new(f[0], f[1], f[2]));
    }
    if let Some(t) = triangles(core).into_iter().find(|t| !face_triples.contains(t)) {
        return Err(fault(format!("triangle {t} is not a face")));
    }
    Ok(())
}

/// Triangles of `core` that separate some vertices from the outer face,
/// with the vertices they enclose. `None` when the capped core is not a
/// triangulation.
pub(crate) fn separating_triangles(core: &Graph, outer: [Vertex; 4]) -> Option<Vec<(Triangle, VertexSet)>> {
    if is_bare_square(core, outer) {
        return Some(Vec::new());
    }
    let (g, o, emb) = capped_triangulation(core, outer)?;
    let faces: std::collections::BTreeSet<Triangle> = emb
        .faces()
        .iter()
        .map(|f| Triangle::new(f[0], f[1], f[2]))
        .collect();
    let mut out = Vec::new();
    for t in triangles(core) {
        if faces.contains(&t) {
            continue;
        }
        let tv = t.vertices();
        let outside = g.reachable_from(o, &tv);
        let inside: VertexSet = g
            .vertices()
            .filter(|v| !tv.contains(v) && !outside.contains(v))
            .collect();
        if !inside.is_empty() {
            out.push((t, inside));
        }
    }
    Some(out)
}

/// Moves everything enclosed by a separating triangle of the core into that
/// triangle's clique, until none remain. `core` names the base vertices that
/// form the planar part. Returns `None` if the core is not a web even after
/// absorption would be possible.
pub(crate) fn absorb_separating(
    plus: &mut PlusGraph,
    core: &mut VertexSet,
    outer: [Vertex; 4],
) -> Option<()> {
    loop {
        let g = plus.base.induced(core);
        let seps = separating_triangles(&g, outer)?;
        let Some((t, inside)) = seps.into_iter().max_by_key(|(t, s)| (s.len(), std::cmp::Reverse(*t)))
        else {
            return Some(());
        };
        plus.absorb_region(t, &inside);
        for v in &inside {
            core.remove(v);
        }
    }
}
