//! Sampled obstructions as instance files with their certificates.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rooted_k4::decider::{Decision, Verdict};
use rooted_k4::obstructions::{verify_obstruction, Class};
use rooted_k4::sample::sample_obstruction;
use rooted_k4::{oracle_rooted_minor, Error, RootedInstance, Vertex};

use crate::document::CertificateDocument;
use crate::io::InstanceFile;
use crate::CliError;

/// Full graphs up to this size are also confirmed by the oracle.
pub const ORACLE_CHECK_MAX: usize = 10;

#[derive(Clone, Debug)]
pub struct AtlasEntry {
    pub instance: InstanceFile,
    pub certificate: CertificateDocument,
}

pub fn atlas(class: Class, budget: usize, count: usize, seed: u64) -> Result<Vec<AtlasEntry>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let ob = sample_obstruction(class, budget, &mut rng)?;
        let map: BTreeMap<Vertex, Vertex> = ob
            .plus
            .vertex_set()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, Vertex(i as u32)))
            .collect();
        let ob = ob.relabel(&map)?;
        let g = ob.full();
        let instance = InstanceFile::from_instance(RootedInstance::new(g.clone(), ob.nominated)?);
        if !verify_obstruction(&g, &ob.nominated, &ob) {
            return Err(Error::Internal("sampled obstruction fails verification".into()).into());
        }
        if g.vertex_count() <= ORACLE_CHECK_MAX && oracle_rooted_minor(&g, &ob.nominated)?.is_some() {
            return Err(Error::Internal("sampled obstruction has a rooted minor".into()).into());
        }
        let decision = Decision {
            verdict: Verdict::No { obstruction: ob },
            trace: vec![format!("atlas-class-{class}")],
        };
        let certificate = CertificateDocument::new(&instance, decision);
        out.push(AtlasEntry { instance, certificate });
    }
    Ok(out)
}
