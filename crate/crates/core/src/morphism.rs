//! Validated vertex maps: graph and digraph homomorphisms, objects of the
//! slice category `Gra/G`, and the commuting-triangle morphisms between them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexId};

/// A vertex map by name, as it appears in documents.
pub type VertexMap = BTreeMap<String, String>;

/// A total vertex map that has been checked to preserve edges (or arcs).
///
/// Only constructors that validate are public, so holding a `Morphism` is the
/// certificate. Domain and codomain vertex names travel with the map.
#[derive(Clone)]
pub struct Morphism {
    images: Vec<VertexId>,
    domain: Arc<[String]>,
    codomain: Arc<[String]>,
}

/// Outcome of checking a total, in-range vertex map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomCheck {
    Homomorphism,
    /// The first edge, in lexicographic order, whose image is not an edge.
    Violation {
        edge: (String, String),
    },
}

impl HomCheck {
    pub fn is_homomorphism(&self) -> bool {
        matches!(self, HomCheck::Homomorphism)
    }
}

fn check_range(len: usize, images: &[VertexId], domain: &[String], codomain_len: usize) -> Result<()> {
    if images.len() < len {
        return Err(Error::NotTotal(domain[images.len()].clone()));
    }
    if let Some(&bad) = images.iter().find(|&&t| t >= codomain_len) {
        return Err(Error::ImageOutOfRange(format!("#{bad}")));
    }
    Ok(())
}

/// Checks an index-level map from `a` to `b`.
pub fn check_images(a: &Graph, b: &Graph, images: &[VertexId]) -> Result<HomCheck> {
    if images.len() > a.vertex_count() {
        return Err(Error::ImageOutOfRange(format!("#{}", images.len())));
    }
    check_range(a.vertex_count(), images, a.names(), b.vertex_count())?;
    for &(u, v) in a.edges() {
        if !b.has_edge(images[u], images[v]) {
            return Ok(HomCheck::Violation {
                edge: (a.name(u).to_string(), a.name(v).to_string()),
            });
        }
    }
    Ok(HomCheck::Homomorphism)
}

fn resolve(a: &Graph, b: &Graph, map: &VertexMap) -> Result<Vec<VertexId>> {
    if let Some(extra) = map.keys().find(|k| a.vertex(k).is_none()) {
        return Err(Error::UnknownVertex(extra.clone()));
    }
    a.names()
        .iter()
        .map(|x| {
            let image = map.get(x).ok_or_else(|| Error::NotTotal(x.clone()))?;
            b.vertex(image).ok_or_else(|| Error::ImageOutOfRange(image.clone()))
        })
        .collect()
}

/// Decides whether a named vertex map is a homomorphism `a -> b`.
///
/// A map that is not total on `a`, names vertices outside `a`, or has images
/// outside `b` is an error, distinct from a negative answer.
pub fn is_homomorphism(map: &VertexMap, a: &Graph, b: &Graph) -> Result<HomCheck> {
    let images = resolve(a, b, map)?;
    check_images(a, b, &images)
}

impl Morphism {
    pub fn new(domain: &Graph, codomain: &Graph, images: Vec<VertexId>) -> Result<Self> {
        match check_images(domain, codomain, &images)? {
            HomCheck::Homomorphism => Ok(Self::trusted(domain.shared_names(), codomain.shared_names(), images)),
            HomCheck::Violation { edge } => Err(Error::NotHomomorphism(edge.0, edge.1)),
        }
    }

    pub fn from_map(domain: &Graph, codomain: &Graph, map: &VertexMap) -> Result<Self> {
        let images = resolve(domain, codomain, map)?;
        Self::new(domain, codomain, images)
    }

    /// An arc-preserving map between digraphs.
    pub fn digraph(domain: &Digraph, codomain: &Digraph, images: Vec<VertexId>) -> Result<Self> {
        if images.len() > domain.vertex_count() {
            return Err(Error::ImageOutOfRange(format!("#{}", images.len())));
        }
        check_range(domain.vertex_count(), &images, domain.names(), codomain.vertex_count())?;
        for &(u, v) in domain.arcs() {
            if !codomain.has_arc(images[u], images[v]) {
                return Err(Error::NotDigraphHomomorphism(
                    domain.name(u).to_string(),
                    domain.name(v).to_string(),
                ));
            }
        }
        Ok(Self::trusted(domain.shared_names(), codomain.shared_names(), images))
    }

    pub fn digraph_from_map(domain: &Digraph, codomain: &Digraph, map: &VertexMap) -> Result<Self> {
        if let Some(extra) = map.keys().find(|k| domain.vertex(k).is_none()) {
            return Err(Error::UnknownVertex(extra.clone()));
        }
        let images = domain
            .names()
            .iter()
            .map(|x| {
                let image = map.get(x).ok_or_else(|| Error::NotTotal(x.clone()))?;
                codomain
                    .vertex(image)
                    .ok_or_else(|| Error::ImageOutOfRange(image.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::digraph(domain, codomain, images)
    }

    pub fn identity(graph: &Graph) -> Self {
        Self::trusted(graph.shared_names(), graph.shared_names(), graph.vertices().collect())
    }

    pub(crate) fn trusted(domain: &Arc<[String]>, codomain: &Arc<[String]>, images: Vec<VertexId>) -> Self {
        Morphism {
            images,
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
        }
    }

    pub fn images(&self) -> &[VertexId] {
        &self.images
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.images[v]
    }

    pub fn domain_names(&self) -> &[String] {
        &self.domain
    }

    pub fn codomain_names(&self) -> &[String] {
        &self.codomain
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.codomain.len()];
        self.images.iter().all(|&t| !std::mem::replace(&mut hit[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.len()];
        for &t in &self.images {
            hit[t] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.images.len() == self.codomain.len() && self.is_injective()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if !(Arc::ptr_eq(&self.codomain, &next.domain) || self.codomain == next.domain) {
            return Err(Error::IncompatibleComposition);
        }
        let images = self.images.iter().map(|&t| next.images[t]).collect();
        Ok(Self::trusted(&self.domain, &next.codomain, images))
    }

    pub fn to_map(&self) -> VertexMap {
        self.images
            .iter()
            .enumerate()
            .map(|(v, &t)| (self.domain[v].clone(), self.codomain[t].clone()))
            .collect()
    }

    /// Vertices of the codomain hit by the map, sorted.
    pub fn image_set(&self) -> Vec<VertexId> {
        let mut out = self.images.clone();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && self.domain == other.domain && self.codomain == other.codomain
    }
}

impl Eq for Morphism {}

impl std::hash::Hash for Morphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.images
                    .iter()
                    .enumerate()
                    .map(|(v, &t)| (&self.domain[v], &self.codomain[t])),
            )
            .finish()
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.images.len()))?;
        for (v, &t) in self.images.iter().enumerate() {
            map.serialize_entry(&self.domain[v], &self.codomain[t])?;
        }
        map.end()
    }
}

/// An object `(H, f)` of `Gra/G`: a carrier graph with a homomorphism to the
/// base graph.
#[derive(Clone, PartialEq, Eq)]
pub struct SliceObject {
    carrier: Graph,
    base: Graph,
    structure: Morphism,
}

impl SliceObject {
    pub fn new(carrier: Graph, base: Graph, colors: Vec<VertexId>) -> Result<Self> {
        let structure = Morphism::new(&carrier, &base, colors)?;
        Ok(SliceObject {
            carrier,
            base,
            structure,
        })
    }

    pub fn from_map(carrier: Graph, base: Graph, map: &VertexMap) -> Result<Self> {
        let structure = Morphism::from_map(&carrier, &base, map)?;
        Ok(SliceObject {
            carrier,
            base,
            structure,
        })
    }

    pub fn carrier(&self) -> &Graph {
        &self.carrier
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn structure_map(&self) -> &Morphism {
        &self.structure
    }

    /// Base vertex under the carrier vertex `v`.
    pub fn color(&self, v: VertexId) -> VertexId {
        self.structure.apply(v)
    }

    pub fn colors(&self) -> &[VertexId] {
        self.structure.images()
    }

    /// Restriction to a set of carrier vertices (the induced subgraph).
    pub fn restrict(&self, keep: &[VertexId]) -> SliceObject {
        let carrier = self.carrier.induced(keep);
        let colors = carrier
            .names()
            .iter()
            .map(|n| self.color(self.carrier.vertex(n).expect("restricted vertex")))
            .collect();
        let structure = Morphism::trusted(carrier.shared_names(), self.base.shared_names(), colors);
        SliceObject {
            carrier,
            base: self.base.clone(),
            structure,
        }
    }
}

impl fmt::Debug for SliceObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SliceObject")
            .field("carrier", &self.carrier)
            .field("base", &self.base)
            .field("map", &self.structure)
            .finish()
    }
}

/// A carrier homomorphism `ψ` with `g ∘ ψ = f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SliceMorphism {
    map: Morphism,
}

impl SliceMorphism {
    pub fn new(source: &SliceObject, target: &SliceObject, images: Vec<VertexId>) -> Result<Self> {
        if source.base != target.base {
            return Err(Error::BaseMismatch);
        }
        let map = Morphism::new(&source.carrier, &target.carrier, images)?;
        Self::from_morphism(source, target, map)
    }

    pub fn from_map(source: &SliceObject, target: &SliceObject, map: &VertexMap) -> Result<Self> {
        if source.base != target.base {
            return Err(Error::BaseMismatch);
        }
        let map = Morphism::from_map(&source.carrier, &target.carrier, map)?;
        Self::from_morphism(source, target, map)
    }

    fn from_morphism(source: &SliceObject, target: &SliceObject, map: Morphism) -> Result<Self> {
        for v in source.carrier.vertices() {
            if target.color(map.apply(v)) != source.color(v) {
                return Err(Error::NotCommuting(source.carrier.name(v).to_string()));
            }
        }
        Ok(SliceMorphism { map })
    }

    pub(crate) fn trusted(map: Morphism) -> Self {
        SliceMorphism { map }
    }

    pub fn identity(object: &SliceObject) -> Self {
        SliceMorphism {
            map: Morphism::identity(&object.carrier),
        }
    }

    pub fn morphism(&self) -> &Morphism {
        &self.map
    }

    pub fn images(&self) -> &[VertexId] {
        self.map.images()
    }

    pub fn then(&self, next: &SliceMorphism) -> Result<SliceMorphism> {
        Ok(SliceMorphism {
            map: self.map.then(&next.map)?,
        })
    }

    pub fn is_automorphism(&self) -> bool {
        self.map.is_bijective()
    }
}

impl fmt::Debug for SliceMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.map.fmt(f)
    }
}

impl Serialize for SliceMorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.map.serialize(serializer)
    }
}
