//! Gadgets for the slice arrow construction, the built-in gadgets for the
//! bases `C3`, `C4`, `P4` and `Y`, the graphs `G_k`, and bounded verifiers.
//!
//! A gadget `(H, f, a, b)` is an object of `Gra/G` with two non-adjacent
//! vertices that `f` sends to the same base vertex. The condition checked by
//! [`verify_gadget`] is that the only slice morphisms from the gadget into
//! `D ⋆ H` are the copies `φ_e`, one per arc `e` of `D`. Verification is
//! exhaustive only up to the digraph size it is given.

use std::collections::{BTreeMap, HashSet};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrow::{arrow_graph, arrow_slice};
use crate::digraphs::{digraphs_with, enumerate_digraphs, DigraphFilter};
use crate::error::{Error, Result};
use crate::graph::{build_cycle, build_path, Digraph, Graph, VertexId};
use crate::hom::{homs, slice_homs};
use crate::io::{DigraphDoc, GraphDoc};
use crate::morphism::{is_homomorphism, HomCheck, Morphism, SliceObject, VertexMap};

/// A validated gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    slice: SliceObject,
    a: VertexId,
    b: VertexId,
}

impl Gadget {
    pub fn new(slice: SliceObject, a: &str, b: &str) -> Result<Self> {
        let h = slice.carrier();
        let ia = h.require(a)?;
        let ib = h.require(b)?;
        if ia == ib {
            return Err(Error::DistinguishedEqual(a.to_string()));
        }
        let (fa, fb) = (slice.color(ia), slice.color(ib));
        if fa != fb {
            return Err(Error::UnbalancedGadget {
                a: a.to_string(),
                b: b.to_string(),
                fa: slice.base().name(fa).to_string(),
                fb: slice.base().name(fb).to_string(),
            });
        }
        // f(a) = f(b) already rules this out on a loopless base.
        if h.has_edge(ia, ib) {
            return Err(Error::AdjacentDistinguished(a.to_string(), b.to_string()));
        }
        Ok(Gadget { slice, a: ia, b: ib })
    }

    pub fn slice(&self) -> &SliceObject {
        &self.slice
    }

    pub fn carrier(&self) -> &Graph {
        self.slice.carrier()
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }

    pub fn a_name(&self) -> &str {
        self.carrier().name(self.a)
    }

    pub fn b_name(&self) -> &str {
        self.carrier().name(self.b)
    }

    pub fn to_candidate(&self) -> GadgetCandidate {
        GadgetCandidate {
            carrier: self.carrier().into(),
            base: self.slice.base().into(),
            map: self.slice.structure_map().to_map(),
            a: self.a_name().to_string(),
            b: self.b_name().to_string(),
        }
    }
}

/// An unvalidated gadget document: `{"carrier", "base", "map", "a", "b"}`.
///
/// This is also the JSON form of [`Gadget`]. Verifiers accept candidates so
/// that a broken structure map shows up as a failed verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GadgetCandidate {
    pub carrier: GraphDoc,
    pub base: GraphDoc,
    pub map: VertexMap,
    pub a: String,
    pub b: String,
}

impl GadgetCandidate {
    pub fn validate(&self) -> Result<Gadget> {
        let carrier = Graph::try_from(self.carrier.clone())?;
        let base = Graph::try_from(self.base.clone())?;
        let slice = SliceObject::from_map(carrier, base, &self.map)?;
        Gadget::new(slice, &self.a, &self.b)
    }

    /// Same candidate with one carrier vertex recoloured.
    pub fn with_color(&self, vertex: &str, color: &str) -> GadgetCandidate {
        let mut out = self.clone();
        out.map.insert(vertex.to_string(), color.to_string());
        out
    }
}

impl Serialize for Gadget {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_candidate().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gadget {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GadgetCandidate::deserialize(d)?
            .validate()
            .map_err(serde::de::Error::custom)
    }
}

/// Bases with a built-in gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BuiltinBase {
    C3,
    C4,
    P4,
    Y,
}

impl BuiltinBase {
    pub const ALL: [BuiltinBase; 4] = [BuiltinBase::C3, BuiltinBase::C4, BuiltinBase::P4, BuiltinBase::Y];

    /// The base graph with vertices named by the integers `0, 1, ...`.
    pub fn base_graph(self) -> Graph {
        let numbered = |g: Graph| g.relabel(|x| x[1..].to_string()).expect("distinct");
        match self {
            BuiltinBase::C3 => numbered(build_cycle(3).expect("n >= 3")),
            BuiltinBase::C4 => numbered(build_cycle(4).expect("n >= 3")),
            BuiltinBase::P4 => numbered(build_path(4)),
            BuiltinBase::Y => {
                Graph::new(["0", "1", "2", "3"], [("0", "1"), ("1", "2"), ("1", "3")]).expect("static graph")
            }
        }
    }

    /// Colours of the carrier path `a, b, c, ...` in order.
    fn colors(self) -> &'static [u8] {
        match self {
            BuiltinBase::C3 => &[0, 1, 2, 0],
            BuiltinBase::C4 => &[0, 1, 2, 3, 0],
            BuiltinBase::P4 => &[0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1, 0],
            BuiltinBase::Y => &[0, 1, 2, 1, 3, 1, 0],
        }
    }
}

impl FromStr for BuiltinBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c3" => Ok(BuiltinBase::C3),
            "c4" => Ok(BuiltinBase::C4),
            "p4" => Ok(BuiltinBase::P4),
            "y" => Ok(BuiltinBase::Y),
            _ => Err(Error::UnknownGadget(s.to_string())),
        }
    }
}

fn letter(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

/// A path `a, b, c, ...` with `n` edges.
pub(crate) fn letter_path(n: usize) -> Graph {
    build_path(n)
        .relabel(|x| letter(x[1..].parse().expect("numbered")))
        .expect("distinct letters")
}

/// The gadget used for `base`: a path carrier coloured along the base, with
/// its two ends distinguished.
pub fn builtin_gadget(base: BuiltinBase) -> Gadget {
    let colors = base.colors();
    let carrier = letter_path(colors.len() - 1);
    let base_graph = base.base_graph();
    let images = colors
        .iter()
        .map(|c| base_graph.vertex(&c.to_string()).expect("colour"))
        .collect();
    let slice = SliceObject::new(carrier, base_graph, images).expect("built-in structure map");
    let last = letter(colors.len() - 1);
    Gadget::new(slice, "a", &last).expect("built-in gadget")
}

/// `G_k` with its distinguished vertices and a homomorphism to `C_{2k-1}`.
#[derive(Debug, Clone)]
pub struct GkGraph {
    pub graph: Graph,
    pub a: String,
    pub b: String,
    pub odd_cycle: Graph,
    pub hom_to_odd_cycle: Morphism,
}

impl GkGraph {
    /// `(G_k, hom)` as a gadget over `C_{2k-1}`.
    pub fn gadget(&self) -> Result<Gadget> {
        let slice = SliceObject::new(
            self.graph.clone(),
            self.odd_cycle.clone(),
            self.hom_to_odd_cycle.images().to_vec(),
        )?;
        Gadget::new(slice, &self.a, &self.b)
    }
}

/// Anchor vertices of the `G_k` drawing with their labels; `None` marks `a`
/// and `b`, which are labelled `k`.
const GK_ANCHORS: [(&str, Option<usize>); 13] = [
    ("A", Some(0)),
    ("B", None),
    ("C", Some(1)),
    ("D", Some(1)),
    ("E", Some(1)),
    ("F", Some(0)),
    ("H", Some(0)),
    ("I", Some(1)),
    ("K", None),
    ("L", Some(0)),
    ("M", None),
    ("N", Some(1)),
    ("P", Some(0)),
];

const GK_SOLID: [(&str, &str); 9] = [
    ("A", "E"),
    ("E", "F"),
    ("F", "D"),
    ("H", "D"),
    ("C", "H"),
    ("A", "I"),
    ("L", "D"),
    ("N", "P"),
    ("P", "C"),
];

const GK_DOTTED: [(&str, &str); 6] = [("A", "B"), ("B", "C"), ("I", "K"), ("K", "L"), ("L", "M"), ("M", "N")];

/// Builds `G_k`: the dotted pairs of the drawing become paths of length `k`
/// (interior vertices `"X-Y.i"`), `a = K` and `b = M`.
///
/// The labelled homomorphism goes to the cycle on `0..2k-2`. Along a dotted
/// path between labels `0` and `k` the colours count up by one; between `k`
/// and `1` they go the long way round, `k, k+1, ..., 2k-2, 0, 1`.
pub fn build_gk(k: usize) -> Result<GkGraph> {
    if k < 2 {
        return Err(Error::GkTooSmall(k));
    }
    let modulus = 2 * k - 1;
    let label: BTreeMap<&str, usize> = GK_ANCHORS.iter().map(|&(name, l)| (name, l.unwrap_or(k))).collect();
    let mut vertices: Vec<String> = GK_ANCHORS.iter().map(|(n, _)| n.to_string()).collect();
    let mut edges: Vec<(String, String)> = GK_SOLID.iter().map(|&(u, v)| (u.into(), v.into())).collect();
    let mut colour: BTreeMap<String, usize> = label.iter().map(|(n, &l)| (n.to_string(), l)).collect();

    for &(from, to) in &GK_DOTTED {
        let (start, end) = (label[from], label[to]);
        let step: isize = match (start, end) {
            (0, e) if e == k => 1,
            (s, 0) if s == k => -1,
            (s, 1) if s == k => 1,
            (1, e) if e == k => -1,
            _ => unreachable!("dotted paths join k with 0 or 1"),
        };
        let mut prev = from.to_string();
        for i in 1..k {
            let name = format!("{from}-{to}.{i}");
            let c = (start as isize + step * i as isize).rem_euclid(modulus as isize) as usize;
            colour.insert(name.clone(), c);
            vertices.push(name.clone());
            edges.push((prev, name.clone()));
            prev = name;
        }
        edges.push((prev, to.to_string()));
    }

    let graph = Graph::new(vertices, edges)?;
    let odd_cycle = build_cycle(modulus)?.relabel(|x| x[1..].to_string())?;
    let map: VertexMap = colour.into_iter().map(|(v, c)| (v, c.to_string())).collect();
    let hom_to_odd_cycle = Morphism::from_map(&graph, &odd_cycle, &map)?;
    Ok(GkGraph {
        graph,
        a: "K".into(),
        b: "M".into(),
        odd_cycle,
        hom_to_odd_cycle,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Why a gadget failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GadgetFailure {
    /// The candidate is not a gadget at all (e.g. its structure map breaks an edge).
    InvalidGadget { reason: String },
    /// A slice morphism into `D ⋆ H` that is not a copy `φ_e`.
    ExtraMorphism { digraph: DigraphDoc, morphism: VertexMap },
    /// A copy `φ_e` that the search did not return.
    MissingCopy { digraph: DigraphDoc, arc: [String; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetReport {
    pub digraphs_checked: usize,
    pub max_size: usize,
    pub verdict: Verdict,
    /// Slice morphisms seen over all checked digraphs.
    pub morphisms_found: usize,
    pub counterexample: Option<GadgetFailure>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn invalid(reason: String) -> Self {
        GadgetReport {
            digraphs_checked: 0,
            max_size: 0,
            verdict: Verdict::Fail,
            morphisms_found: 0,
            counterexample: Some(GadgetFailure::InvalidGadget { reason }),
        }
    }
}

struct SingleCheck {
    morphisms: usize,
    failure: Option<GadgetFailure>,
}

fn check_one(gadget: &Gadget, d: &Digraph) -> Result<SingleCheck> {
    let product = arrow_slice(d, gadget)?;
    let copies = product.phis();
    let expected: HashSet<&[VertexId]> = copies.iter().map(|m| m.images()).collect();
    let mut seen = HashSet::new();
    let mut morphisms = 0;
    for m in slice_homs(gadget.slice(), &product.object)? {
        morphisms += 1;
        if !expected.contains(m.images()) {
            return Ok(SingleCheck {
                morphisms,
                failure: Some(GadgetFailure::ExtraMorphism {
                    digraph: d.into(),
                    morphism: m.morphism().to_map(),
                }),
            });
        }
        seen.insert(m.images().to_vec());
    }
    for (copy, &(u, v)) in copies.iter().zip(d.arcs()) {
        if !seen.contains(copy.images()) {
            return Ok(SingleCheck {
                morphisms,
                failure: Some(GadgetFailure::MissingCopy {
                    digraph: d.into(),
                    arc: [d.name(u).to_string(), d.name(v).to_string()],
                }),
            });
        }
    }
    Ok(SingleCheck {
        morphisms,
        failure: None,
    })
}

/// Checks the gadget condition for one isolated-point-free digraph.
pub fn verify_gadget(gadget: &Gadget, d: &Digraph) -> Result<GadgetReport> {
    if let Some(&x) = d.isolated_points().first() {
        return Err(Error::IsolatedPoint(d.name(x).to_string()));
    }
    let check = check_one(gadget, d)?;
    Ok(GadgetReport {
        digraphs_checked: 1,
        max_size: d.vertex_count(),
        verdict: if check.failure.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        morphisms_found: check.morphisms,
        counterexample: check.failure,
    })
}

/// Checks the gadget condition for every labeled isolated-point-free digraph
/// with `1..=max_n` vertices. The first counterexample in enumeration order
/// is reported.
pub fn verify_gadget_exhaustive(gadget: &Gadget, max_n: usize) -> Result<GadgetReport> {
    let mut checked = 0;
    let mut morphisms = 0;
    for n in 1..=max_n {
        let batch: Vec<Digraph> = enumerate_digraphs(n, true)?.collect();
        log::info!("verify-gadget: {} digraphs on {n} vertices", batch.len());
        let results: Vec<SingleCheck> = batch.par_iter().map(|d| check_one(gadget, d)).collect::<Result<_>>()?;
        for r in results {
            checked += 1;
            morphisms += r.morphisms;
            if r.failure.is_some() {
                return Ok(GadgetReport {
                    digraphs_checked: checked,
                    max_size: max_n,
                    verdict: Verdict::Fail,
                    morphisms_found: morphisms,
                    counterexample: r.failure,
                });
            }
        }
    }
    Ok(GadgetReport {
        digraphs_checked: checked,
        max_size: max_n,
        verdict: Verdict::Pass,
        morphisms_found: morphisms,
        counterexample: None,
    })
}

/// Like [`verify_gadget_exhaustive`], but an invalid candidate is a failed
/// verdict rather than an error.
pub fn verify_candidate_exhaustive(candidate: &GadgetCandidate, max_n: usize) -> Result<GadgetReport> {
    match candidate.validate() {
        Ok(gadget) => verify_gadget_exhaustive(&gadget, max_n),
        Err(err @ (Error::DigraphCap { .. } | Error::EmptyDigraphSize)) => Err(err),
        Err(err) => {
            let mut report = GadgetReport::invalid(err.to_string());
            report.max_size = max_n;
            Ok(report)
        }
    }
}

pub fn verify_candidate(candidate: &GadgetCandidate, d: &Digraph) -> Result<GadgetReport> {
    match candidate.validate() {
        Ok(gadget) => verify_gadget(&gadget, d),
        Err(err) => {
            let mut report = GadgetReport::invalid(err.to_string());
            report.max_size = d.vertex_count();
            Ok(report)
        }
    }
}

/// Which digraphs the strong-replacement check quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReplacementRegime {
    /// Loopless digraphs only.
    #[default]
    Irreflexive,
    /// Loops allowed, but no isolated points.
    IsolatedFree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplacementReport {
    pub holds: bool,
    pub homomorphisms_checked: usize,
    /// A homomorphism `H -> D ⋆ H` whose image lies in no single copy.
    pub witness: Option<VertexMap>,
    /// The digraph `D` the witness lives over.
    pub digraph: Option<DigraphDoc>,
}

/// Whether every homomorphism `H -> D ⋆ H` has its image inside one copy
/// `φ_e[H]`.
pub fn check_strong_replacement(
    h: &Graph,
    a: &str,
    b: &str,
    d: &Digraph,
    regime: ReplacementRegime,
) -> Result<ReplacementReport> {
    match regime {
        ReplacementRegime::Irreflexive => {
            if let Some(&x) = d.loops().first() {
                return Err(Error::ReflexiveDigraph(d.name(x).to_string()));
            }
        }
        ReplacementRegime::IsolatedFree => {
            if let Some(&x) = d.isolated_points().first() {
                return Err(Error::IsolatedPoint(d.name(x).to_string()));
            }
        }
    }
    let product = arrow_graph(d, h, a, b)?;
    let copies: Vec<HashSet<VertexId>> = product
        .phis()
        .iter()
        .map(|m| m.images().iter().copied().collect())
        .collect();
    let mut checked = 0;
    for m in homs(h, product.product()) {
        checked += 1;
        let inside = copies.iter().any(|copy| m.images().iter().all(|t| copy.contains(t)));
        if !inside {
            return Ok(ReplacementReport {
                holds: false,
                homomorphisms_checked: checked,
                witness: Some(m.to_map()),
                digraph: Some(d.into()),
            });
        }
    }
    Ok(ReplacementReport {
        holds: true,
        homomorphisms_checked: checked,
        witness: None,
        digraph: None,
    })
}

/// Runs [`check_strong_replacement`] over every digraph with `1..=max_n`
/// vertices admitted by the regime; stops at the first failure.
pub fn check_strong_replacement_upto(
    h: &Graph,
    a: &str,
    b: &str,
    max_n: usize,
    regime: ReplacementRegime,
) -> Result<(usize, ReplacementReport)> {
    let filter = match regime {
        ReplacementRegime::Irreflexive => DigraphFilter {
            require_no_isolated: false,
            irreflexive_only: true,
            ..DigraphFilter::default()
        },
        ReplacementRegime::IsolatedFree => DigraphFilter::default(),
    };
    let mut digraphs = 0;
    let mut total = 0;
    for n in 1..=max_n {
        for d in digraphs_with(n, filter)? {
            digraphs += 1;
            let report = check_strong_replacement(h, a, b, &d, regime)?;
            total += report.homomorphisms_checked;
            if !report.holds {
                return Ok((digraphs, report));
            }
        }
    }
    Ok((
        digraphs,
        ReplacementReport {
            holds: true,
            homomorphisms_checked: total,
            witness: None,
            digraph: None,
        },
    ))
}

/// Every single-vertex recolouring of `gadget`'s structure map.
pub fn single_recolourings(gadget: &Gadget) -> Vec<GadgetCandidate> {
    let base = gadget.slice().base();
    let candidate = gadget.to_candidate();
    let mut out = Vec::new();
    for v in gadget.carrier().vertices() {
        for c in base.vertices() {
            if c != gadget.slice().color(v) {
                out.push(candidate.with_color(gadget.carrier().name(v), base.name(c)));
            }
        }
    }
    out
}

/// Is `map` a homomorphism from the candidate's carrier to its base?
pub fn candidate_structure_check(candidate: &GadgetCandidate) -> Result<HomCheck> {
    let carrier = Graph::try_from(candidate.carrier.clone())?;
    let base = Graph::try_from(candidate.base.clone())?;
    is_homomorphism(&candidate.map, &carrier, &base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colour_of(g: &Gadget, v: &str) -> String {
        let s = g.slice();
        s.base().name(s.color(s.carrier().vertex(v).unwrap())).to_string()
    }

    #[test]
    fn builtin_colourings() {
        let c3 = builtin_gadget(BuiltinBase::C3);
        assert_eq!(colour_of(&c3, "a"), "0");
        assert_eq!(colour_of(&c3, "d"), "0");
        assert_eq!((c3.a_name(), c3.b_name()), ("a", "d"));

        let p4 = builtin_gadget(BuiltinBase::P4);
        assert_eq!(colour_of(&p4, "g"), "4");
        let fours = p4
            .slice()
            .colors()
            .iter()
            .filter(|&&c| p4.slice().base().name(c) == "4")
            .count();
        assert_eq!(fours, 1);
        assert_eq!(p4.b_name(), "m");

        let y = builtin_gadget(BuiltinBase::Y);
        assert_eq!(colour_of(&y, "c"), "2");
        assert_eq!(colour_of(&y, "e"), "3");
        assert_eq!(y.b_name(), "g");

        let c4 = builtin_gadget(BuiltinBase::C4);
        assert_eq!(c4.carrier().vertex_count(), 5);
        assert_eq!(c4.b_name(), "e");
    }

    #[test]
    fn gadget_invariants_are_enforced() {
        let c3 = builtin_gadget(BuiltinBase::C3);
        let moved = c3.to_candidate().with_color("b", "0");
        assert!(matches!(moved.validate(), Err(Error::NotHomomorphism(..))));
        let mut same = c3.to_candidate();
        same.b = "a".into();
        assert!(matches!(same.validate(), Err(Error::DistinguishedEqual(_))));
        let mut unbalanced = c3.to_candidate();
        unbalanced.b = "c".into();
        assert!(matches!(unbalanced.validate(), Err(Error::UnbalancedGadget { .. })));
    }

    #[test]
    fn gadget_json_round_trip() {
        let g = builtin_gadget(BuiltinBase::Y);
        let text = serde_json::to_string(&g).unwrap();
        let back: Gadget = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn c3_gadget_on_small_digraphs() {
        let g = builtin_gadget(BuiltinBase::C3);
        let arc = Digraph::new(["u", "v"], [("u", "v")]).unwrap();
        let two = Digraph::new(["u", "v"], [("u", "v"), ("v", "u")]).unwrap();
        let lp = Digraph::new(["u"], [("u", "u")]).unwrap();
        for (d, count) in [(&arc, 1), (&two, 2), (&lp, 1)] {
            let report = verify_gadget(&g, d).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.morphisms_found, count);
        }
        let isolated = Digraph::new(["u", "v", "w"], [("u", "v")]).unwrap();
        assert_eq!(
            verify_gadget(&g, &isolated).err(),
            Some(Error::IsolatedPoint("w".into()))
        );
    }

    #[test]
    fn c3_exhaustive_up_to_two() {
        let report = verify_gadget_exhaustive(&builtin_gadget(BuiltinBase::C3), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.digraphs_checked, 14);
    }

    #[test]
    fn broken_structure_map_fails() {
        let broken = builtin_gadget(BuiltinBase::C3).to_candidate().with_color("c", "1");
        let report = verify_candidate_exhaustive(&broken, 2).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(matches!(
            report.counterexample,
            Some(GadgetFailure::InvalidGadget { .. })
        ));
    }

    #[test]
    fn palindromic_colouring_admits_reversal() {
        // a..e coloured 0,1,2,1,0 over C4: reversing the path is a second copy.
        let c4 = builtin_gadget(BuiltinBase::C4).to_candidate().with_color("d", "1");
        let report = verify_candidate_exhaustive(&c4, 1).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(matches!(
            report.counterexample,
            Some(GadgetFailure::ExtraMorphism { .. })
        ));
    }

    #[test]
    fn gk_labels() {
        for k in 2..=5 {
            let gk = build_gk(k).unwrap();
            let a = gk.graph.vertex(&gk.a).unwrap();
            let b = gk.graph.vertex(&gk.b).unwrap();
            assert_eq!(gk.odd_cycle.name(gk.hom_to_odd_cycle.apply(a)), k.to_string());
            assert_eq!(gk.odd_cycle.name(gk.hom_to_odd_cycle.apply(b)), k.to_string());
            assert_eq!(gk.graph.vertex_count(), 13 + 6 * (k - 1));
            assert_eq!(gk.graph.edge_count(), 9 + 6 * k);
            assert!(gk.gadget().is_ok());
        }
        assert_eq!(build_gk(1).err(), Some(Error::GkTooSmall(1)));
    }

    #[test]
    fn gk_two_maps_to_triangle() {
        let gk = build_gk(2).unwrap();
        assert_eq!(gk.odd_cycle.vertex_count(), 3);
        let check = crate::morphism::check_images(&gk.graph, &gk.odd_cycle, gk.hom_to_odd_cycle.images()).unwrap();
        assert!(check.is_homomorphism());
    }

    #[test]
    fn strong_replacement_examples() {
        let arc = Digraph::new(["u", "v"], [("u", "v")]).unwrap();
        let path2 = Digraph::new(["u", "v", "w"], [("u", "v"), ("v", "w")]).unwrap();
        let k2 = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        // Every image of an edge is an edge, and every edge is a copy of K2.
        let k2_report = check_strong_replacement(&k2, "a", "b", &path2, ReplacementRegime::Irreflexive).unwrap();
        assert!(k2_report.holds);

        let p2 = letter_path(2);
        let crossing = check_strong_replacement(&p2, "a", "c", &path2, ReplacementRegime::Irreflexive).unwrap();
        assert!(!crossing.holds);
        let w = crossing.witness.unwrap();
        assert_eq!(w["b"], "v");

        let pair = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        let vacuous = check_strong_replacement(&pair, "a", "b", &arc, ReplacementRegime::Irreflexive);
        // Two isolated vertices map anywhere, e.g. both onto `u`, which is in the copy.
        assert!(vacuous.unwrap().holds);

        let lp = Digraph::new(["u"], [("u", "u")]).unwrap();
        assert!(matches!(
            check_strong_replacement(&p2, "a", "c", &lp, ReplacementRegime::Irreflexive),
            Err(Error::ReflexiveDigraph(_))
        ));
        assert!(check_strong_replacement(&p2, "a", "c", &lp, ReplacementRegime::IsolatedFree).is_ok());
    }
}
