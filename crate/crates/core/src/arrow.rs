//! The arrow construction `D ⋆ (H, a, b)`: one copy of the gadget graph `H`
//! glued along every arc `(u, v)` of a digraph `D`, with `a` identified with
//! `u` and `b` with `v`.
//!
//! Vertex ids in the product: every vertex of `D` keeps its name, and the
//! copy of a gadget vertex `w ∉ {a, b}` attached to arc `(u, v)` is named
//! `"(u,v)::w"`. Antiparallel arcs get two disjoint interiors sharing only
//! `u` and `v`; a loop `(u, u)` sends both `a` and `b` to `u`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gadget::Gadget;
use crate::graph::{Digraph, Graph, VertexId};
use crate::morphism::{Morphism, SliceMorphism, SliceObject};

/// Product vertex id of the copy of `w` on arc `(u, v)`.
pub fn interior_id(u: &str, v: &str, w: &str) -> String {
    format!("({u},{v})::{w}")
}

/// The product graph together with the bookkeeping needed for `φ` and `h ⋆ H`.
#[derive(Debug, Clone)]
pub struct ArrowResult {
    digraph: Digraph,
    gadget: Graph,
    a: VertexId,
    b: VertexId,
    product: Graph,
    base_embedding: Vec<VertexId>,
    /// `(arc index, gadget vertex) -> product vertex`, gadget vertex ∉ {a, b}.
    interior: HashMap<(usize, VertexId), VertexId>,
}

impl ArrowResult {
    pub fn product(&self) -> &Graph {
        &self.product
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn gadget(&self) -> &Graph {
        &self.gadget
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    /// Product vertex of the digraph vertex `x`.
    pub fn base_vertex(&self, x: VertexId) -> VertexId {
        self.base_embedding[x]
    }

    /// Product vertex of gadget vertex `w` (not `a` or `b`) on arc number `arc`.
    pub fn interior_vertex(&self, arc: usize, w: VertexId) -> Option<VertexId> {
        self.interior.get(&(arc, w)).copied()
    }

    fn arc_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.digraph.arcs().binary_search(&(u, v)).ok()
    }

    fn copy_images(&self, arc: usize) -> Vec<VertexId> {
        let (u, v) = self.digraph.arcs()[arc];
        self.gadget
            .vertices()
            .map(|w| {
                if w == self.a {
                    self.base_embedding[u]
                } else if w == self.b {
                    self.base_embedding[v]
                } else {
                    self.interior[&(arc, w)]
                }
            })
            .collect()
    }

    /// `φ_(u,v)`: the copy of `H` glued along the arc `(u, v)`.
    pub fn phi(&self, u: VertexId, v: VertexId) -> Result<Morphism> {
        let arc = self
            .arc_index(u, v)
            .ok_or_else(|| Error::UnknownArc(self.digraph.name(u).into(), self.digraph.name(v).into()))?;
        Morphism::new(&self.gadget, &self.product, self.copy_images(arc))
    }

    pub fn phi_by_name(&self, u: &str, v: &str) -> Result<Morphism> {
        let iu = self.digraph.require(u)?;
        let iv = self.digraph.require(v)?;
        self.phi(iu, iv)
    }

    /// All copies `φ_e`, in arc order.
    pub fn phis(&self) -> Vec<Morphism> {
        (0..self.digraph.arc_count())
            .map(|arc| {
                Morphism::trusted(
                    self.gadget.shared_names(),
                    self.product.shared_names(),
                    self.copy_images(arc),
                )
            })
            .collect()
    }

    /// `h ⋆ H` as a plain vertex map into `target`'s product; `h` must already
    /// be known to be a digraph homomorphism.
    fn lift(&self, target: &ArrowResult, h: &Morphism) -> Vec<VertexId> {
        let mut images = vec![usize::MAX; self.product.vertex_count()];
        for x in self.digraph.vertices() {
            images[self.base_embedding[x]] = target.base_embedding[h.apply(x)];
        }
        for (&(arc, w), &p) in &self.interior {
            let (u, v) = self.digraph.arcs()[arc];
            let image_arc = target
                .arc_index(h.apply(u), h.apply(v))
                .expect("homomorphisms map arcs to arcs");
            images[p] = target.interior[&(image_arc, w)];
        }
        images
    }
}

/// Builds `D ⋆ (H, a, b)`.
pub fn arrow_graph(d: &Digraph, h: &Graph, a: &str, b: &str) -> Result<ArrowResult> {
    let ia = h.require(a)?;
    let ib = h.require(b)?;
    if ia == ib {
        return Err(Error::DistinguishedEqual(a.to_string()));
    }
    let interior_vertices: Vec<VertexId> = h.vertices().filter(|&w| w != ia && w != ib).collect();

    let mut names: Vec<String> = d.names().to_vec();
    for &(u, v) in d.arcs() {
        for &w in &interior_vertices {
            names.push(interior_id(d.name(u), d.name(v), h.name(w)));
        }
    }
    let expected = names.len();
    names.sort();
    names.dedup();
    if names.len() != expected {
        let clash = d.names().iter().find(|x| x.contains("::")).cloned().unwrap_or_default();
        return Err(Error::IdCollision(clash));
    }
    let names: Arc<[String]> = names.into();
    let position = |name: &str| names.binary_search_by(|x| x.as_str().cmp(name)).expect("listed");

    let base_embedding: Vec<VertexId> = d.names().iter().map(|x| position(x)).collect();
    let mut interior = HashMap::new();
    let mut pairs = Vec::new();
    for (arc, &(u, v)) in d.arcs().iter().enumerate() {
        let copy = |w: VertexId| {
            if w == ia {
                base_embedding[u]
            } else if w == ib {
                base_embedding[v]
            } else {
                position(&interior_id(d.name(u), d.name(v), h.name(w)))
            }
        };
        for &w in &interior_vertices {
            interior.insert((arc, w), copy(w));
        }
        for &(s, t) in h.edges() {
            let (x, y) = (copy(s), copy(t));
            if x == y {
                // Only an edge {a, b} on a loop arc collapses.
                return Err(Error::Loop(names[x].clone()));
            }
            pairs.push((x, y));
        }
    }
    Ok(ArrowResult {
        digraph: d.clone(),
        gadget: h.clone(),
        a: ia,
        b: ib,
        product: Graph::from_indexed(names, pairs),
        base_embedding,
        interior,
    })
}

/// The product as an object over the gadget's base, with `f_D` sending every
/// digraph vertex to `f(a)` and every interior copy of `w` to `f(w)`.
#[derive(Debug, Clone)]
pub struct ArrowSlice {
    pub arrow: ArrowResult,
    pub object: SliceObject,
}

impl ArrowSlice {
    /// `φ_(u,v)` as a slice morphism from the gadget.
    pub fn phi(&self, gadget: &Gadget, u: VertexId, v: VertexId) -> Result<SliceMorphism> {
        let map = self.arrow.phi(u, v)?;
        SliceMorphism::new(gadget.slice(), &self.object, map.images().to_vec())
    }

    pub fn phis(&self) -> Vec<SliceMorphism> {
        self.arrow.phis().into_iter().map(SliceMorphism::trusted).collect()
    }
}

pub fn arrow_slice(d: &Digraph, gadget: &Gadget) -> Result<ArrowSlice> {
    let h = gadget.slice().carrier();
    let arrow = arrow_graph(d, h, h.name(gadget.a()), h.name(gadget.b()))?;
    let f = gadget.slice().structure_map();
    let mut colors = vec![f.apply(gadget.a()); arrow.product.vertex_count()];
    for (&(_, w), &p) in &arrow.interior {
        colors[p] = f.apply(w);
    }
    // SliceObject::new re-checks that f_D is a homomorphism.
    let object = SliceObject::new(arrow.product.clone(), gadget.slice().base().clone(), colors)?;
    Ok(ArrowSlice { arrow, object })
}

/// `h ⋆ H : F(D1) -> F(D2)` for a digraph homomorphism `h: D1 -> D2` given
/// as images of `D1`'s vertices.
pub fn arrow_morphism(source: &ArrowSlice, target: &ArrowSlice, h: &[VertexId]) -> Result<SliceMorphism> {
    let h = Morphism::digraph(source.arrow.digraph(), target.arrow.digraph(), h.to_vec())?;
    let images = source.arrow.lift(&target.arrow, &h);
    SliceMorphism::new(&source.object, &target.object, images)
}
