//! Homomorphism search between graphs, slice objects, and digraphs.
//!
//! Slice homomorphisms are found by treating each fibre of the structure map
//! as a vertex colour: a carrier vertex may only go to target vertices with
//! the same colour.

use std::num::NonZeroUsize;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::morphism::{Morphism, SliceMorphism, SliceObject, VertexMap};
use crate::search::{Problem, Relation, Solutions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exists,
    Count,
    Enumerate,
}

/// How much of a solution stream to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub mode: SearchMode,
    pub max_solutions: Option<NonZeroUsize>,
}

impl SearchBudget {
    pub fn exists() -> Self {
        SearchBudget {
            mode: SearchMode::Exists,
            max_solutions: None,
        }
    }

    pub fn count() -> Self {
        SearchBudget {
            mode: SearchMode::Count,
            max_solutions: None,
        }
    }

    pub fn enumerate() -> Self {
        SearchBudget {
            mode: SearchMode::Enumerate,
            max_solutions: None,
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.max_solutions = NonZeroUsize::new(limit);
        self
    }

    fn limit(&self) -> Option<usize> {
        let cap = self.max_solutions.map(NonZeroUsize::get);
        match self.mode {
            SearchMode::Exists => Some(cap.unwrap_or(1).min(1)),
            _ => cap,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::enumerate()
    }
}

/// Stream of homomorphisms, truncated according to a [`SearchBudget`].
pub struct HomStream {
    inner: Solutions,
    remaining: Option<usize>,
    domain: std::sync::Arc<[String]>,
    codomain: std::sync::Arc<[String]>,
}

impl HomStream {
    fn new(
        inner: Solutions,
        budget: SearchBudget,
        domain: &std::sync::Arc<[String]>,
        codomain: &std::sync::Arc<[String]>,
    ) -> Self {
        HomStream {
            inner,
            remaining: budget.limit(),
            domain: domain.clone(),
            codomain: codomain.clone(),
        }
    }
}

impl Iterator for HomStream {
    type Item = Morphism;

    fn next(&mut self) -> Option<Morphism> {
        if let Some(left) = self.remaining.as_mut() {
            if *left == 0 {
                return None;
            }
            *left -= 1;
        }
        let images = self.inner.next()?;
        Some(Morphism::trusted(&self.domain, &self.codomain, images))
    }
}

/// Stream of slice morphisms.
pub struct SliceHomStream(HomStream);

impl Iterator for SliceHomStream {
    type Item = SliceMorphism;

    fn next(&mut self) -> Option<SliceMorphism> {
        self.0.next().map(SliceMorphism::trusted)
    }
}

/// All homomorphisms `a -> b` extending `pins`.
///
/// Pins naming vertices outside `a` or `b` are errors; contradictory pins
/// simply give an empty stream.
pub fn enumerate_homs(a: &Graph, b: &Graph, pins: &VertexMap, budget: SearchBudget) -> Result<HomStream> {
    let mut problem = Problem::new(Relation::from_graph(a), Relation::from_graph(b));
    for (x, t) in pins {
        let x = a.require(x)?;
        let t = b.vertex(t).ok_or_else(|| Error::ImageOutOfRange(t.clone()))?;
        problem.pin(x, t);
    }
    Ok(HomStream::new(
        problem.solutions(),
        budget,
        a.shared_names(),
        b.shared_names(),
    ))
}

pub fn homs(a: &Graph, b: &Graph) -> HomStream {
    enumerate_homs(a, b, &VertexMap::new(), SearchBudget::enumerate()).expect("no pins")
}

pub fn hom_exists(a: &Graph, b: &Graph) -> bool {
    homs(a, b).next().is_some()
}

fn fibres(object: &SliceObject) -> Vec<FixedBitSet> {
    let n = object.carrier().vertex_count();
    let mut out = vec![FixedBitSet::with_capacity(n); object.base().vertex_count()];
    for v in object.carrier().vertices() {
        out[object.color(v)].insert(v);
    }
    out
}

/// All slice morphisms `x -> y` over a common base.
pub fn enumerate_slice_homs(x: &SliceObject, y: &SliceObject, budget: SearchBudget) -> Result<SliceHomStream> {
    if x.base() != y.base() {
        return Err(Error::BaseMismatch);
    }
    let mut problem = Problem::new(Relation::from_graph(x.carrier()), Relation::from_graph(y.carrier()));
    let classes = fibres(y);
    for v in x.carrier().vertices() {
        problem.restrict(v, &classes[x.color(v)]);
    }
    Ok(SliceHomStream(HomStream::new(
        problem.solutions(),
        budget,
        x.carrier().shared_names(),
        y.carrier().shared_names(),
    )))
}

pub fn slice_homs(x: &SliceObject, y: &SliceObject) -> Result<SliceHomStream> {
    enumerate_slice_homs(x, y, SearchBudget::enumerate())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EndoVerdict {
    Rigid,
    AutomorphismsOnly,
    HasProperEndomorphism,
}

impl std::fmt::Display for EndoVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Summary of an endomorphism monoid.
///
/// A proper endomorphism is one that is not an automorphism; on finite
/// objects that is exactly a non-bijective vertex map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoReport {
    pub verdict: EndoVerdict,
    pub witness: Option<Morphism>,
    pub endo_count: usize,
    pub auto_count: usize,
}

fn summarize(endos: impl Iterator<Item = Morphism>) -> EndoReport {
    let mut endo_count = 0;
    let mut auto_count = 0;
    let mut witness = None;
    for e in endos {
        endo_count += 1;
        if e.is_bijective() {
            auto_count += 1;
        } else if witness.is_none() {
            witness = Some(e);
        }
    }
    let verdict = if endo_count == 1 {
        EndoVerdict::Rigid
    } else if endo_count > auto_count {
        EndoVerdict::HasProperEndomorphism
    } else {
        EndoVerdict::AutomorphismsOnly
    };
    EndoReport {
        verdict,
        witness,
        endo_count,
        auto_count,
    }
}

/// Enumerates `End(x)` in the slice category.
pub fn classify_endomorphisms(x: &SliceObject) -> EndoReport {
    let endos = slice_homs(x, x).expect("same base");
    summarize(endos.map(|m| m.morphism().clone()))
}

/// Enumerates `End(g)` in the category of graphs.
pub fn classify_graph_endomorphisms(g: &Graph) -> EndoReport {
    summarize(homs(g, g))
}

/// An injective homomorphism `pattern -> host` (non-induced subgraph), if any.
pub fn contains_subgraph(pattern: &Graph, host: &Graph) -> Option<Morphism> {
    let problem = Problem::new(Relation::from_graph(pattern), Relation::from_graph(host)).injective();
    problem
        .solutions()
        .next()
        .map(|images| Morphism::trusted(pattern.shared_names(), host.shared_names(), images))
}

/// All arc-preserving maps `d1 -> d2`.
pub fn enumerate_digraph_homs(d1: &Digraph, d2: &Digraph, budget: SearchBudget) -> HomStream {
    let problem = Problem::new(Relation::from_digraph(d1), Relation::from_digraph(d2));
    HomStream::new(problem.solutions(), budget, d1.shared_names(), d2.shared_names())
}

pub fn digraph_homs(d1: &Digraph, d2: &Digraph) -> HomStream {
    enumerate_digraph_homs(d1, d2, SearchBudget::enumerate())
}
