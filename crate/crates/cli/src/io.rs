//! The plain-text instance format.
//!
//! ```text
//! # a comment
//! roots: a b c d
//! vertex: e
//! a b
//! ```
//!
//! Every other line is one edge. Vertices get identifiers in order of first
//! appearance on `vertex:` and edge lines.

use std::collections::BTreeMap;
use std::fmt::Write;

use rooted_k4::{Graph, RootedInstance, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid roots: {0}")]
    Roots(String),
}

/// A rooted instance together with the names of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub names: Vec<String>,
    pub instance: RootedInstance,
}

impl InstanceFile {
    /// Names each vertex by its identifier.
    pub fn from_instance(instance: RootedInstance) -> Self {
        let g = instance.graph();
        let map: BTreeMap<Vertex, Vertex> = g.vertices().enumerate().map(|(i, v)| (v, Vertex(i as u32))).collect();
        let names = g.vertices().map(|v| v.to_string()).collect();
        let roots = instance.roots().map(|r| map[&r]);
        let instance = RootedInstance::new(g.relabel(&map), roots).expect("relabelling keeps the instance valid");
        InstanceFile { names, instance }
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.0 as usize]
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name).map(|i| Vertex(i as u32))
    }
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain([(line.len(), ' ')]) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut ids: BTreeMap<String, Vertex> = BTreeMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut g = Graph::new();
    let mut roots: Option<(usize, Vec<String>)> = None;
    let mut id = |name: &str, names: &mut Vec<String>| -> Vertex {
        *ids.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            Vertex(names.len() as u32 - 1)
        })
    };
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, first)) = toks.first() else { continue };
        let syntax = |column: usize, message: &str| ParseError::Syntax {
            line: line_no,
            column,
            message: message.to_string(),
        };
        match first {
            "roots:" => {
                if roots.is_some() {
                    return Err(syntax(col, "second roots line"));
                }
                roots = Some((line_no, toks[1..].iter().map(|t| t.1.to_string()).collect()));
            }
            "vertex:" => {
                if toks.len() < 2 {
                    return Err(syntax(col, "vertex line names no vertex"));
                }
                for &(_, t) in &toks[1..] {
                    let v = id(t, &mut names);
                    g.add_vertex(v);
                }
            }
            _ if first.ends_with(':') => return Err(syntax(col, &format!("unknown directive {first}"))),
            _ => match toks[..] {
                [(_, a), (cb, b)] => {
                    if a == b {
                        return Err(syntax(cb, "self-loop"));
                    }
                    let (u, v) = (id(a, &mut names), id(b, &mut names));
                    g.add_edge(u, v);
                }
                [_] => return Err(syntax(col + first.len(), "edge line needs two endpoints")),
                _ => return Err(syntax(toks[2].0, "edge line has more than two tokens")),
            },
        }
    }
    let Some((line, root_names)) = roots else {
        return Err(ParseError::Roots("no roots line".into()));
    };
    if root_names.len() != 4 {
        return Err(ParseError::Roots(format!("line {line}: expected 4 roots, found {}", root_names.len())));
    }
    let mut rs = Vec::new();
    for r in &root_names {
        match ids.get(r) {
            Some(&v) if !rs.contains(&v) => rs.push(v),
            Some(_) => return Err(ParseError::Roots(format!("root {r} repeated"))),
            None => return Err(ParseError::Roots(format!("root {r} is not a vertex"))),
        }
    }
    let instance = RootedInstance::new(g, [rs[0], rs[1], rs[2], rs[3]]).map_err(|e| ParseError::Roots(e.to_string()))?;
    Ok(InstanceFile { names, instance })
}

/// Prints `file` so that [`parse_instance`] reads it back unchanged.
pub fn print_instance(file: &InstanceFile) -> String {
    let g = file.instance.graph();
    let mut out = String::new();
    let roots: Vec<&str> = file.instance.roots().iter().map(|&r| file.name(r)).collect();
    writeln!(out, "roots: {}", roots.join(" ")).unwrap();
    let all: Vec<&str> = g.vertices().map(|v| file.name(v)).collect();
    writeln!(out, "vertex: {}", all.join(" ")).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", file.name(e.0), file.name(e.1)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names_and_comments() {
        let f = parse_instance("# K4\nroots: a b c d\na b\na c # diagonal\na d\nb c\nb d\nc d\n").unwrap();
        assert_eq!(f.names, vec!["a", "b", "c", "d"]);
        assert_eq!(f.instance.graph().edge_count(), 6);
    }

    #[test]
    fn isolated_roots_need_a_vertex_line() {
        let err = parse_instance("roots: a b c d\na b\nb c\n").unwrap_err();
        assert!(matches!(err, ParseError::Roots(_)));
        assert!(parse_instance("roots: a b c d\nvertex: d\na b\nb c\n").is_ok());
    }

    #[test]
    fn reports_positions() {
        let err = parse_instance("roots: a b c d\na b c\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                line: 2,
                column: 5,
                message: "edge line has more than two tokens".into()
            }
        );
        let err = parse_instance("roots: a b c\na b\n").unwrap_err();
        assert!(matches!(err, ParseError::Roots(_)));
    }

    #[test]
    fn print_then_parse() {
        let f = parse_instance("roots: x y z w\nvertex: q\ny x\nz w\nx z\n").unwrap();
        assert_eq!(parse_instance(&print_instance(&f)).unwrap(), f);
    }
}
