//! Retractions of connected slice objects over short paths.
//!
//! A connected object whose image spans at most two edges of a path retracts
//! onto a colour-isomorphic copy of that image. One whose image is a full
//! `P3` retracts onto a shortest path `u_0..u_k` from colour `0` to colour
//! `3`: every `x` goes to the `u_i` of its colour with `|τ(x) − i|` minimal,
//! where `τ` is the distance to colour `0`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::morphism::{SliceMorphism, SliceObject};

use super::classify::{classify_slice_base, BaseClassification};

/// Where each base vertex sits: `(component, offset along the path)`.
pub(crate) fn path_layout(base: &Graph) -> Result<Vec<(usize, usize)>> {
    match classify_slice_base(base) {
        BaseClassification::Universal { pattern, .. } => Err(Error::UniversalBase(pattern.to_string())),
        BaseClassification::NotUniversal { components } => {
            let mut layout = vec![(0, 0); base.vertex_count()];
            for (c, comp) in components.iter().enumerate() {
                for (i, name) in comp.iter().enumerate() {
                    layout[base.require(name)?] = (c, i);
                }
            }
            Ok(layout)
        }
    }
}

/// A connected piece of a carrier together with the offset of each vertex's
/// colour along its base path.
#[derive(Clone, Copy)]
pub(crate) struct Piece<'a> {
    pub graph: &'a Graph,
    pub vertices: &'a [VertexId],
    /// Indexed by carrier vertex.
    pub pos: &'a [usize],
}

impl Piece<'_> {
    pub fn span(&self) -> (usize, usize) {
        let lo = self.vertices.iter().map(|&v| self.pos[v]).min().unwrap_or(0);
        let hi = self.vertices.iter().map(|&v| self.pos[v]).max().unwrap_or(0);
        (lo, hi)
    }

    fn at(&self, p: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied().filter(move |&v| self.pos[v] == p)
    }

    /// Lexicographically least shortest path from offset `lo` to offset `hi`.
    fn least_path(&self, lo: usize, hi: usize) -> Vec<VertexId> {
        let targets: Vec<VertexId> = self.at(hi).collect();
        let sigma = self.graph.distances_from(&targets);
        let start = self
            .at(lo)
            .filter_map(|v| sigma[v].map(|d| (d, v)))
            .min()
            .map(|(_, v)| v)
            .expect("piece is connected and covers both offsets");
        let mut path = vec![start];
        let mut current = start;
        while let Some(d) = sigma[current].filter(|&d| d > 0) {
            current = self
                .graph
                .neighbors(current)
                .iter()
                .copied()
                .find(|&y| sigma[y] == Some(d - 1))
                .expect("BFS layers are connected");
            path.push(current);
        }
        path
    }
}

pub(crate) struct PieceRetraction {
    pub path: Vec<VertexId>,
    /// Distance to the lowest offset, for vertices of the piece.
    pub tau: Vec<Option<usize>>,
    /// Image of every carrier vertex; identity outside the piece.
    pub images: Vec<VertexId>,
}

impl PieceRetraction {
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }
}

pub(crate) fn retract_piece(piece: Piece<'_>) -> Result<PieceRetraction> {
    let g = piece.graph;
    let (lo, hi) = piece.span();
    let path = piece.least_path(lo, hi);
    let bottom: Vec<VertexId> = piece.at(lo).collect();
    let tau = g.distances_from(&bottom);
    let mut images: Vec<VertexId> = g.vertices().collect();
    let k = path.len() - 1;
    for &x in piece.vertices {
        let c = piece.pos[x] - lo;
        images[x] = if hi - lo <= 2 {
            path[c]
        } else if c == 0 {
            path[0]
        } else if c == 3 {
            path[k]
        } else {
            let t = tau[x].expect("piece is connected");
            let mut best: Vec<usize> = Vec::new();
            let mut best_gap = usize::MAX;
            for i in (1..k).filter(|i| i % 2 == c % 2) {
                let gap = t.abs_diff(i);
                if gap < best_gap {
                    best_gap = gap;
                    best.clear();
                }
                if gap == best_gap {
                    best.push(i);
                }
            }
            if best.len() > 1 {
                return Err(Error::RetractionTie {
                    vertex: g.name(x).to_string(),
                    first: g.name(path[best[0]]).to_string(),
                    second: g.name(path[best[1]]).to_string(),
                });
            }
            path[best[0]]
        };
    }
    Ok(PieceRetraction { path, tau, images })
}

/// Offsets `0..=ky` of a long `(*)`-path folded onto a shorter one `0..=kx`.
fn fold(i: usize, kx: usize, ky: usize) -> usize {
    if i == ky {
        kx
    } else if i <= kx - 2 {
        i
    } else if (i - (kx - 2)).is_multiple_of(2) {
        kx - 2
    } else {
        kx - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// The first object maps into the second.
    Forward,
    /// The second object maps into the first.
    Backward,
}

/// A slice morphism between two pieces; `images` sends every vertex of the
/// source piece to a vertex of the target piece.
pub(crate) struct PieceComparison {
    pub direction: Direction,
    pub images: Vec<(VertexId, VertexId)>,
}

/// `a`'s span must be inside `b`'s.
pub(crate) fn compare_pieces(a: Piece<'_>, b: Piece<'_>) -> Result<PieceComparison> {
    let (alo, ahi) = a.span();
    let (blo, bhi) = b.span();
    if alo < blo || ahi > bhi {
        return Err(Error::ImageNotContained);
    }
    if ahi - alo <= 2 {
        let copy = b.least_path(alo, ahi);
        let images = a.vertices.iter().map(|&x| (x, copy[a.pos[x] - alo])).collect();
        return Ok(PieceComparison {
            direction: Direction::Forward,
            images,
        });
    }
    let ra = retract_piece(a)?;
    let rb = retract_piece(b)?;
    let (ka, kb) = (ra.path.len() - 1, rb.path.len() - 1);
    // A longer (*)-path folds onto a shorter one; never the other way round.
    let (direction, src, src_r, dst_r, ks, kd) = if kb >= ka {
        (Direction::Backward, b, &rb, &ra, kb, ka)
    } else {
        (Direction::Forward, a, &ra, &rb, ka, kb)
    };
    let mut offset = vec![usize::MAX; src.graph.vertex_count()];
    for (i, &u) in src_r.path.iter().enumerate() {
        offset[u] = i;
    }
    let images = src
        .vertices
        .iter()
        .map(|&x| (x, dst_r.path[fold(offset[src_r.images[x]], kd, ks)]))
        .collect();
    Ok(PieceComparison { direction, images })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidPathCertificate {
    pub path_vertices: Vec<String>,
    pub colors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RetractionPlan {
    pub path_vertices: Vec<String>,
    pub tau: BTreeMap<String, usize>,
    pub retraction: SliceMorphism,
    /// Number of edges of the base path.
    pub base_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Retraction {
    /// The carrier is its own retract; `End = {id}`.
    RigidPath(RigidPathCertificate),
    /// A proper idempotent endomorphism onto `path_vertices`.
    Retract(RetractionPlan),
}

struct Connected {
    pos: Vec<usize>,
    vertices: Vec<VertexId>,
}

/// Checks that `x` is connected over a single short path and returns the
/// offset of every carrier vertex.
fn connected_over_path(x: &SliceObject) -> Result<Connected> {
    let base = x.base();
    let layout = path_layout(base).map_err(|_| Error::NotShortPath)?;
    if base.vertex_count() == 0 || !base.is_connected() {
        return Err(Error::NotShortPath);
    }
    let carrier = x.carrier();
    if carrier.vertex_count() == 0 || !carrier.is_connected() {
        return Err(Error::Disconnected);
    }
    let pos = carrier.vertices().map(|v| layout[x.color(v)].1).collect();
    Ok(Connected {
        pos,
        vertices: carrier.vertices().collect(),
    })
}

/// Retracts a connected object with surjective structure map onto a minimal
/// path, or certifies that the carrier already is one.
pub fn retract_slice_to_path(x: &SliceObject) -> Result<Retraction> {
    let c = connected_over_path(x)?;
    let base = x.base();
    let mut hit = vec![false; base.vertex_count()];
    for &col in x.colors() {
        hit[col] = true;
    }
    if let Some(miss) = hit.iter().position(|&h| !h) {
        return Err(Error::NotSurjective(base.name(miss).to_string()));
    }
    let carrier = x.carrier();
    let piece = Piece {
        graph: carrier,
        vertices: &c.vertices,
        pos: &c.pos,
    };
    let r = retract_piece(piece)?;
    let path_vertices: Vec<String> = r.path.iter().map(|&v| carrier.name(v).to_string()).collect();
    if r.is_identity() {
        let colors = r.path.iter().map(|&v| base.name(x.color(v)).to_string()).collect();
        return Ok(Retraction::RigidPath(RigidPathCertificate { path_vertices, colors }));
    }
    let retraction = SliceMorphism::new(x, x, r.images.clone()).map_err(|e| Error::RetractionInvalid(e.to_string()))?;
    let tau = carrier
        .vertices()
        .filter_map(|v| r.tau[v].map(|t| (carrier.name(v).to_string(), t)))
        .collect();
    Ok(Retraction::Retract(RetractionPlan {
        path_vertices,
        tau,
        retraction,
        base_length: base.vertex_count() - 1,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub direction: Direction,
    pub morphism: SliceMorphism,
}

/// For connected `x`, `y` over the same non-universal base with the image of
/// `x` inside the image of `y`, a slice morphism between them in some
/// direction.
pub fn compare_components(x: &SliceObject, y: &SliceObject) -> Result<Comparison> {
    if x.base() != y.base() {
        return Err(Error::BaseMismatch);
    }
    let layout = path_layout(x.base())?;
    let prepare = |s: &SliceObject| -> Result<(Vec<VertexId>, Vec<usize>, usize)> {
        let g = s.carrier();
        if g.vertex_count() == 0 || !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let pos = g.vertices().map(|v| layout[s.color(v)].1).collect();
        Ok((g.vertices().collect(), pos, layout[s.color(0)].0))
    };
    let (xv, xpos, xc) = prepare(x)?;
    let (yv, ypos, yc) = prepare(y)?;
    if xc != yc {
        return Err(Error::ImagesInDifferentComponents);
    }
    let px = Piece {
        graph: x.carrier(),
        vertices: &xv,
        pos: &xpos,
    };
    let py = Piece {
        graph: y.carrier(),
        vertices: &yv,
        pos: &ypos,
    };
    let cmp = compare_pieces(px, py)?;
    let mut images = vec![0; cmp.images.len()];
    for (s, t) in cmp.images {
        images[s] = t;
    }
    let morphism = match cmp.direction {
        Direction::Forward => SliceMorphism::new(x, y, images)?,
        Direction::Backward => SliceMorphism::new(y, x, images)?,
    };
    Ok(Comparison {
        direction: cmp.direction,
        morphism,
    })
}
