//! Full-embedding checks for the arrow functor `D ↦ D ⋆ H`.
//!
//! For a pair `(D1, D2)` the map `h ↦ h ⋆ H` from digraph homomorphisms to
//! slice homomorphisms is checked to be injective and onto: every lift is a
//! slice morphism, lifts are pairwise distinct, and the two hom-sets have the
//! same size.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arrow::{arrow_morphism, arrow_slice, ArrowSlice};
use crate::digraphs::isolated_free_upto;
use crate::error::{Error, Result};
use crate::gadget::{verify_gadget_exhaustive, Gadget, Verdict};
use crate::graph::Digraph;
use crate::hom::{digraph_homs, slice_homs};
use crate::io::DigraphDoc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingViolation {
    pub source: DigraphDoc,
    pub target: DigraphDoc,
    pub digraph_homs: usize,
    pub slice_homs: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub pairs_checked: usize,
    pub digraph_homs: usize,
    pub slice_homs: usize,
    pub verdict: Verdict,
    pub violation: Option<EmbeddingViolation>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub(crate) struct PairOutcome {
    pub digraph_homs: usize,
    pub slice_homs: usize,
    pub violation: Option<String>,
}

pub(crate) fn check_pair(s1: &ArrowSlice, s2: &ArrowSlice) -> Result<PairOutcome> {
    let targets: HashSet<Vec<usize>> = slice_homs(&s1.object, &s2.object)?
        .map(|m| m.images().to_vec())
        .collect();
    let mut lifts = HashSet::new();
    let mut count = 0;
    let mut violation = None;
    for h in digraph_homs(s1.arrow.digraph(), s2.arrow.digraph()) {
        count += 1;
        let lift = match arrow_morphism(s1, s2, h.images()) {
            Ok(m) => m,
            Err(err) => {
                violation.get_or_insert(format!("lift is not a slice morphism: {err}"));
                continue;
            }
        };
        if !targets.contains(lift.images()) {
            violation.get_or_insert_with(|| "lift missing from the slice hom-set".to_string());
        }
        if !lifts.insert(lift.images().to_vec()) {
            violation.get_or_insert_with(|| "two homomorphisms share a lift".to_string());
        }
    }
    if violation.is_none() && count != targets.len() {
        violation = Some("slice morphism that is not a lift".to_string());
    }
    Ok(PairOutcome {
        digraph_homs: count,
        slice_homs: targets.len(),
        violation,
    })
}

fn sweep(products: &[ArrowSlice], pairs: &[(usize, usize)]) -> Result<EmbeddingReport> {
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| check_pair(&products[i], &products[j]))
        .collect::<Result<_>>()?;
    let mut report = EmbeddingReport {
        pairs_checked: 0,
        digraph_homs: 0,
        slice_homs: 0,
        verdict: Verdict::Pass,
        violation: None,
    };
    for (o, &(i, j)) in outcomes.into_iter().zip(pairs) {
        report.pairs_checked += 1;
        report.digraph_homs += o.digraph_homs;
        report.slice_homs += o.slice_homs;
        if let (Some(reason), None) = (o.violation, &report.violation) {
            report.verdict = Verdict::Fail;
            report.violation = Some(EmbeddingViolation {
                source: products[i].arrow.digraph().into(),
                target: products[j].arrow.digraph().into(),
                digraph_homs: o.digraph_homs,
                slice_homs: o.slice_homs,
                reason,
            });
        }
    }
    Ok(report)
}

/// Verifies the gadget up to `max_n` vertices, then checks every ordered
/// pair of isolated-point-free digraphs of that size.
pub fn full_embedding_check(gadget: &Gadget, max_n: usize) -> Result<EmbeddingReport> {
    if !verify_gadget_exhaustive(gadget, max_n)?.passed() {
        return Err(Error::GadgetNotVerified);
    }
    let digraphs = isolated_free_upto(max_n)?;
    let products = digraphs
        .iter()
        .map(|d| arrow_slice(d, gadget))
        .collect::<Result<Vec<_>>>()?;
    let n = products.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    log::info!("embed-check: {} ordered pairs", pairs.len());
    sweep(&products, &pairs)
}

/// Checks the given pairs without verifying the gadget first.
pub fn check_pairs(gadget: &Gadget, pairs: &[(Digraph, Digraph)]) -> Result<EmbeddingReport> {
    let mut products = Vec::with_capacity(2 * pairs.len());
    for (d1, d2) in pairs {
        products.push(arrow_slice(d1, gadget)?);
        products.push(arrow_slice(d2, gadget)?);
    }
    let index: Vec<(usize, usize)> = (0..pairs.len()).map(|i| (2 * i, 2 * i + 1)).collect();
    sweep(&products, &index)
}
