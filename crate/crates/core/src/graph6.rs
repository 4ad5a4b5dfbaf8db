//! The graph6 exchange format for small graphs.
//!
//! Vertices are written as `0..n` in increasing identifier order, so decoding
//! an encoded graph gives back a relabelled copy.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// The graph with its vertices renamed `0..n` in increasing order.
pub fn normalised(g: &Graph) -> Graph {
    let map: BTreeMap<Vertex, Vertex> = g.vertices().enumerate().map(|(i, v)| (v, Vertex(i as u32))).collect();
    g.relabel(&map)
}

pub fn encode(g: &Graph) -> String {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(vs[i], vs[j]));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::invalid("graph6 text has a byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::invalid("empty graph6 line")),
        [126, 126, ..] => return Err(Error::invalid("graph6 sizes above 258047 are not supported")),
        [126, a, b, c, rest @ ..] => ((((*a - 63) as usize) << 12) | (((*b - 63) as usize) << 6) | (*c - 63) as usize, rest),
        [126, ..] => return Err(Error::invalid("truncated graph6 size")),
        [x, rest @ ..] => ((*x - 63) as usize, rest),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != need {
        return Err(Error::invalid(format!("graph6 body has {} bytes, expected {need}", body.len())));
    }
    let mut g = Graph::with_vertices((0..n as u32).map(Vertex));
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(Vertex(i as u32), Vertex(j as u32));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Decodes one graph per non-empty line.
pub fn decode_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode).collect()
}
