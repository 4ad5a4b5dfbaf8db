//! Graphviz drawings of a decided instance. Presentation only.

use std::fmt::Write;

use rooted_k4::decider::Verdict;

use crate::io::InstanceFile;

const COLOURS: [&str; 4] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3"];

/// Branch sets are coloured; for an obstruction, clique vertices are grey,
/// edges outside the base are dashed and roots are doubled circles.
pub fn to_dot(file: &InstanceFile, verdict: &Verdict) -> String {
    let g = file.instance.graph();
    let roots = file.instance.roots();
    let mut out = String::from("graph instance {\n  node [style=filled, fillcolor=white];\n");
    for v in g.vertices() {
        let mut attrs = vec![format!("label=\"{}\"", file.name(v).replace('"', "\\\""))];
        if roots.contains(&v) {
            attrs.push("shape=doublecircle".into());
        }
        match verdict {
            Verdict::Yes { witness } => {
                if let Some(i) = witness.roots().position(|r| Some(r) == witness.owner(v)) {
                    attrs.push(format!("fillcolor=\"{}\"", COLOURS[i % 4]));
                }
            }
            Verdict::No { obstruction } => {
                if obstruction.plus.clique_of(v).is_some() {
                    attrs.push("fillcolor=lightgrey".into());
                }
            }
        }
        writeln!(out, "  v{} [{}];", v.0, attrs.join(", ")).unwrap();
    }
    for e in g.edges() {
        let dashed = match verdict {
            Verdict::No { obstruction } => !obstruction.base().has_edge(e.0, e.1),
            Verdict::Yes { .. } => false,
        };
        let style = if dashed { " [style=dashed]" } else { "" };
        writeln!(out, "  v{} -- v{}{style};", e.0 .0, e.1 .0).unwrap();
    }
    out.push_str("}\n");
    out
}
