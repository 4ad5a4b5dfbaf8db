//! Cross-checking `decide` against the oracle over many instances.

use std::collections::BTreeMap;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rooted_k4::connectivity::subsets_of_size;
use rooted_k4::decider::check_decision;
use rooted_k4::graph6::encode;
use rooted_k4::minors::oracle_limit;
use rooted_k4::sample::random_connected_graph;
use rooted_k4::{decide, oracle_rooted_minor, Error, Graph, RootedInstance, Vertex};

/// Order-independent tallies of a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub graphs: usize,
    pub instances: usize,
    pub yes: usize,
    pub no: usize,
    pub disagreements: Vec<String>,
    pub failures: Vec<String>,
    pub cases: BTreeMap<String, usize>,
}

impl SweepReport {
    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.graphs += other.graphs;
        self.instances += other.instances;
        self.yes += other.yes;
        self.no += other.no;
        self.disagreements.extend(other.disagreements);
        self.failures.extend(other.failures);
        for (k, n) in other.cases {
            *self.cases.entry(k).or_default() += n;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graphs {}", self.graphs).unwrap();
        writeln!(out, "instances {}", self.instances).unwrap();
        writeln!(out, "yes {}", self.yes).unwrap();
        writeln!(out, "no {}", self.no).unwrap();
        writeln!(out, "disagreements {}", self.disagreements.len()).unwrap();
        writeln!(out, "failures {}", self.failures.len()).unwrap();
        for (k, n) in &self.cases {
            writeln!(out, "case {k} {n}").unwrap();
        }
        let mut bad: Vec<&String> = self.disagreements.iter().chain(&self.failures).collect();
        bad.sort();
        for line in bad {
            writeln!(out, "! {line}").unwrap();
        }
        out
    }
}

fn one_graph(g: &Graph) -> SweepReport {
    let mut rep = SweepReport {
        graphs: 1,
        ..SweepReport::default()
    };
    let vs: Vec<Vertex> = g.vertices().collect();
    let code = encode(g);
    for r in subsets_of_size(&vs, 4) {
        let roots = [r[0], r[1], r[2], r[3]];
        rep.instances += 1;
        let tag = format!("{code} {}", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        let inst = RootedInstance::new(g.clone(), roots).expect("roots are vertices");
        let d = match decide(&inst) {
            Ok(d) => d,
            Err(e) => {
                rep.failures.push(format!("{tag}: {e}"));
                continue;
            }
        };
        if let Err(e) = check_decision(&inst, &d) {
            rep.failures.push(format!("{tag}: {e}"));
        }
        match oracle_rooted_minor(g, &roots) {
            Ok(w) if w.is_some() != d.is_yes() => rep.disagreements.push(tag),
            Ok(_) => {}
            Err(e) => rep.failures.push(format!("{tag}: oracle {e}")),
        }
        if d.is_yes() {
            rep.yes += 1;
        } else {
            rep.no += 1;
        }
        for l in d.trace {
            *rep.cases.entry(l).or_default() += 1;
        }
    }
    rep
}

/// Decides every 4-subset of roots of every graph and compares with the
/// oracle.
pub fn sweep(graphs: &[Graph]) -> Result<SweepReport, Error> {
    let limit = oracle_limit();
    if let Some(g) = graphs.iter().find(|g| g.vertex_count() > limit) {
        return Err(Error::ResourceLimit(format!(
            "graph with {} vertices exceeds the oracle limit {limit}",
            g.vertex_count()
        )));
    }
    let mut rep = graphs
        .par_iter()
        .map(one_graph)
        .reduce(SweepReport::default, SweepReport::merge);
    rep.disagreements.sort();
    rep.failures.sort();
    Ok(rep)
}

/// `count` random connected graphs with between four and `max_n` vertices.
pub fn random_graphs(max_n: usize, count: usize, seed: u64) -> Result<Vec<Graph>, Error> {
    if max_n < 4 {
        return Err(Error::InvalidArgument("random sweeps need at least four vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let n = rng.gen_range(4..=max_n);
            let p = rng.gen_range(0.25..0.75);
            random_connected_graph(n, p, &mut rng)
        })
        .collect())
}
