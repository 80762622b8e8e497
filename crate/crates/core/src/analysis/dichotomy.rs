//! Rigid-or-proper-endomorphism verdicts over non-universal bases.
//!
//! Each component is retracted onto a path; a proper retraction is already a
//! proper endomorphism. If every component is its own retract, two components
//! whose images are nested inside the same base path still give one, by
//! mapping one into the other and fixing everything else. Otherwise the
//! object is rigid.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{labeled_graphs, Graph, VertexId};
use crate::hom::{classify_endomorphisms, enumerate_slice_homs, homs, EndoVerdict, SearchBudget};
use crate::morphism::{SliceMorphism, SliceObject};

use super::retract::{compare_pieces, path_layout, retract_piece, Direction, Piece};

/// Carriers up to this size have a constructive `Rigid` verdict re-checked
/// by searching for a second endomorphism.
pub const CROSS_CHECK_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EndoSource {
    /// A component retracts properly onto a path inside it.
    ComponentRetraction { component: Vec<String> },
    /// One component maps into another with a comparable image.
    ComparableComponents { from: Vec<String>, into: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum SliceVerdict {
    Rigid,
    ProperEndo { source: EndoSource, witness: SliceMorphism },
}

impl SliceVerdict {
    pub fn is_rigid(&self) -> bool {
        matches!(self, SliceVerdict::Rigid)
    }

    fn label(&self) -> &'static str {
        match self {
            SliceVerdict::Rigid => "Rigid",
            SliceVerdict::ProperEndo { .. } => "ProperEndo",
        }
    }
}

fn names(g: &Graph, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

fn constructive(x: &SliceObject) -> Result<SliceVerdict> {
    let layout = path_layout(x.base())?;
    let g = x.carrier();
    let pos: Vec<usize> = g.vertices().map(|v| layout[x.color(v)].1).collect();
    let components = g.components();
    let pieces: Vec<Piece<'_>> = components
        .iter()
        .map(|comp| Piece {
            graph: g,
            vertices: comp,
            pos: &pos,
        })
        .collect();
    for piece in &pieces {
        let r = retract_piece(*piece)?;
        if !r.is_identity() {
            let witness = SliceMorphism::new(x, x, r.images).map_err(|e| Error::RetractionInvalid(e.to_string()))?;
            return Ok(SliceVerdict::ProperEndo {
                source: EndoSource::ComponentRetraction {
                    component: names(g, piece.vertices),
                },
                witness,
            });
        }
    }
    let base_component = |piece: &Piece<'_>| layout[x.color(piece.vertices[0])].0;
    for (i, a) in pieces.iter().enumerate() {
        for (j, b) in pieces.iter().enumerate() {
            if i == j || base_component(a) != base_component(b) {
                continue;
            }
            let (alo, ahi) = a.span();
            let (blo, bhi) = b.span();
            if alo < blo || ahi > bhi {
                continue;
            }
            let cmp = compare_pieces(*a, *b)?;
            let (from, into) = match cmp.direction {
                Direction::Forward => (a, b),
                Direction::Backward => (b, a),
            };
            let mut images: Vec<VertexId> = g.vertices().collect();
            for (s, t) in cmp.images {
                images[s] = t;
            }
            let witness = SliceMorphism::new(x, x, images)?;
            return Ok(SliceVerdict::ProperEndo {
                source: EndoSource::ComparableComponents {
                    from: names(g, from.vertices),
                    into: names(g, into.vertices),
                },
                witness,
            });
        }
    }
    Ok(SliceVerdict::Rigid)
}

/// Classifies an object over a base that is a disjoint union of short paths.
///
/// A `Rigid` verdict on a carrier with at most [`CROSS_CHECK_LIMIT`]
/// vertices is confirmed by search; a `ProperEndo` witness is a validated
/// non-injective slice endomorphism.
pub fn classify_slice_object(x: &SliceObject) -> Result<SliceVerdict> {
    let verdict = constructive(x)?;
    match &verdict {
        SliceVerdict::Rigid if x.carrier().vertex_count() <= CROSS_CHECK_LIMIT => {
            let endos = enumerate_slice_homs(x, x, SearchBudget::enumerate().with_limit(2))?.count();
            if endos != 1 {
                return Err(Error::CrossCheck {
                    constructive: "Rigid".into(),
                    brute_force: format!("at least {endos} endomorphisms"),
                });
            }
        }
        SliceVerdict::ProperEndo { witness, .. } if witness.is_automorphism() => {
            return Err(Error::CrossCheck {
                constructive: "ProperEndo".into(),
                brute_force: "witness is an automorphism".into(),
            });
        }
        _ => {}
    }
    Ok(verdict)
}

/// Compares the constructive verdict with a full enumeration of `End(x)`.
/// Also fails if the monoid is a nontrivial group, which the dichotomy rules
/// out.
pub fn cross_check(x: &SliceObject) -> Result<SliceVerdict> {
    let verdict = classify_slice_object(x)?;
    let report = classify_endomorphisms(x);
    let agrees = matches!(
        (&verdict, report.verdict),
        (SliceVerdict::Rigid, EndoVerdict::Rigid)
            | (SliceVerdict::ProperEndo { .. }, EndoVerdict::HasProperEndomorphism)
    );
    if agrees {
        Ok(verdict)
    } else {
        Err(Error::CrossCheck {
            constructive: verdict.label().into(),
            brute_force: report.verdict.to_string(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomyException {
    pub object: SliceObject,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomyReport {
    pub max_carrier: usize,
    pub connected_only: bool,
    pub instances: usize,
    pub rigid: usize,
    pub proper: usize,
    pub exceptions: usize,
    pub first_exception: Option<DichotomyException>,
}

impl DichotomyReport {
    pub fn passed(&self) -> bool {
        self.exceptions == 0
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    rigid: usize,
    proper: usize,
    exceptions: usize,
    first: Option<DichotomyException>,
}

impl Tally {
    fn record(mut self, x: &SliceObject) -> Self {
        self.instances += 1;
        match cross_check(x) {
            Ok(SliceVerdict::Rigid) => self.rigid += 1,
            Ok(SliceVerdict::ProperEndo { .. }) => self.proper += 1,
            Err(err) => {
                self.exceptions += 1;
                if self.first.is_none() {
                    self.first = Some(DichotomyException {
                        object: x.clone(),
                        reason: err.to_string(),
                    });
                }
            }
        }
        self
    }

    fn merge(mut self, other: Tally) -> Self {
        self.instances += other.instances;
        self.rigid += other.rigid;
        self.proper += other.proper;
        self.exceptions += other.exceptions;
        self.first = self.first.or(other.first);
        self
    }
}

/// Runs [`cross_check`] on every object over `base` whose carrier is a
/// labeled graph with `1..=max_carrier` vertices, under every structure map.
pub fn dichotomy_sweep(base: &Graph, max_carrier: usize, connected_only: bool) -> Result<DichotomyReport> {
    path_layout(base)?;
    let mut total = Tally::default();
    for n in 1..=max_carrier {
        let carriers: Vec<Graph> = labeled_graphs(n)
            .filter(|g| !connected_only || g.is_connected())
            .collect();
        log::info!("dichotomy: {} carriers on {n} vertices", carriers.len());
        let tally = carriers
            .par_iter()
            .map(|g| {
                homs(g, base).fold(Tally::default(), |t, f| {
                    let x = SliceObject::new(g.clone(), base.clone(), f.images().to_vec())
                        .expect("enumerated maps are homomorphisms");
                    t.record(&x)
                })
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(tally);
    }
    Ok(DichotomyReport {
        max_carrier,
        connected_only,
        instances: total.instances,
        rigid: total.rigid,
        proper: total.proper,
        exceptions: total.exceptions,
        first_exception: total.first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path};

    fn p3() -> Graph {
        build_path(3).relabel(|x| x[1..].to_string()).unwrap()
    }

    #[test]
    fn identity_is_rigid() {
        let x = SliceObject::new(p3(), p3(), vec![0, 1, 2, 3]).unwrap();
        assert_eq!(cross_check(&x).unwrap(), SliceVerdict::Rigid);
    }

    #[test]
    fn twin_components_fold() {
        let two = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        let x = SliceObject::new(two, p3(), vec![1, 2, 1, 2]).unwrap();
        match cross_check(&x).unwrap() {
            SliceVerdict::ProperEndo { source, witness } => {
                assert_eq!(
                    source,
                    EndoSource::ComparableComponents {
                        from: vec!["a".into(), "b".into()],
                        into: vec!["c".into(), "d".into()]
                    }
                );
                assert!(!witness.is_automorphism());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn incomparable_rigid_components() {
        let two = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        // {0,1} and {2,3}: neither image contains the other.
        let x = SliceObject::new(two, p3(), vec![0, 1, 2, 3]).unwrap();
        assert_eq!(cross_check(&x).unwrap(), SliceVerdict::Rigid);
    }

    #[test]
    fn universal_base_is_refused() {
        let c3 = build_cycle(3).unwrap();
        let x = SliceObject::new(c3.clone(), c3, vec![0, 1, 2]).unwrap();
        assert_eq!(classify_slice_object(&x), Err(Error::UniversalBase("C3".into())));
    }

    #[test]
    fn small_sweep_has_no_exceptions() {
        let report = dichotomy_sweep(&p3(), 4, false).unwrap();
        assert!(report.passed(), "{:?}", report.first_exception);
        assert_eq!(report.instances, report.rigid + report.proper);
    }

    #[test]
    fn union_base() {
        let base = crate::graph::disjoint_union(&[build_path(1), build_path(2)]);
        let report = dichotomy_sweep(&base, 3, false).unwrap();
        assert!(report.passed(), "{:?}", report.first_exception);
    }
}
