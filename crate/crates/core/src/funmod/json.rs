use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FunMod;
use crate::error::{Error, Result};
use crate::exactla::FpMatrix;
use crate::gammaalg::BasedAlgebra;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct FunModJson {
    pub algebra: String,
    pub spaces: BTreeMap<String, usize>,
    #[serde(default)]
    pub actions: BTreeMap<String, Vec<Vec<u32>>>,
}

/// Zero-dimensional spaces and zero actions are omitted.
pub fn funmod_to_json(m: &FunMod) -> FunModJson {
    let alg = m.alg();
    let spaces =
        alg.vertices().iter().zip(m.dims()).filter(|(_, &d)| d > 0).map(|(v, &d)| (v.clone(), d)).collect();
    let actions = alg
        .basis()
        .iter()
        .zip(m.actions())
        .filter(|(_, a)| !a.is_zero())
        .map(|(b, a)| (b.label.clone(), a.to_rows()))
        .collect();
    FunModJson { algebra: alg.id().to_string(), spaces, actions }
}

pub fn funmod_from_json(alg: &Arc<BasedAlgebra>, j: &FunModJson) -> Result<FunMod> {
    if j.algebra != alg.id() {
        return Err(Error::Schema(format!("module over {}, expected {}", j.algebra, alg.id())));
    }
    let p = alg.p();
    let mut dims = vec![0usize; alg.n_vertices()];
    for (name, &d) in &j.spaces {
        let v = alg
            .vertices()
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::Schema(format!("unknown vertex {name}")))?;
        dims[v] = d;
    }
    let mut actions: Vec<FpMatrix> =
        alg.basis().iter().map(|b| FpMatrix::zeros(p, dims[b.src], dims[b.tgt])).collect();
    for (label, rows) in &j.actions {
        let i = alg
            .basis()
            .iter()
            .position(|b| &b.label == label)
            .ok_or_else(|| Error::Schema(format!("unknown basis element {label}")))?;
        let b = alg.element(i);
        let (r, c) = (dims[b.src], dims[b.tgt]);
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension(format!("action of {label} must be {r}x{c}")));
        }
        let data: Vec<u32> = rows.iter().flatten().map(|&x| x % p).collect();
        actions[i] = FpMatrix::new(p, r, c, data)?;
    }
    for &e in alg.idempotents() {
        let b = alg.element(e);
        if !j.actions.contains_key(&b.label) {
            actions[e] = FpMatrix::identity(p, dims[b.src]);
        }
    }
    FunMod::new(alg.clone(), dims, actions)
}

pub fn funmod_to_string(m: &FunMod) -> String {
    serde_json::to_string_pretty(&funmod_to_json(m)).expect("serializable")
}

pub fn funmod_from_str(alg: &Arc<BasedAlgebra>, s: &str) -> Result<FunMod> {
    funmod_from_json(alg, &serde_json::from_str(s)?)
}
