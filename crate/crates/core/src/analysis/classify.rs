//! Classification of base graphs.
//!
//! `Gra/G` is algebraically universal exactly when `G` contains `C3`, `C4`,
//! `P4` or `Y` as a (not necessarily induced) subgraph; otherwise every
//! component of `G` is a path with at most three edges. The cone category
//! `Gra → G` is universal exactly when `G` has an odd cycle.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_cycle, build_path, build_star, Graph, VertexId};
use crate::hom::contains_subgraph;
use crate::morphism::Morphism;

/// The four minimal obstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pattern {
    C3,
    C4,
    P4,
    Y,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::C3, Pattern::C4, Pattern::P4, Pattern::Y];

    pub fn graph(self) -> Graph {
        match self {
            Pattern::C3 => build_cycle(3).expect("n >= 3"),
            Pattern::C4 => build_cycle(4).expect("n >= 3"),
            Pattern::P4 => build_path(4),
            Pattern::Y => build_star(3),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum BaseClassification {
    /// `embedding` is an injective homomorphism from [`Pattern::graph`].
    Universal { pattern: Pattern, embedding: Morphism },
    /// Each component as its vertex sequence along the path.
    NotUniversal { components: Vec<Vec<String>> },
}

impl BaseClassification {
    pub fn is_universal(&self) -> bool {
        matches!(self, BaseClassification::Universal { .. })
    }

    /// Re-checks the witness against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            BaseClassification::Universal { pattern, embedding } => {
                let again = Morphism::new(&pattern.graph(), g, embedding.images().to_vec())?;
                if !again.is_injective() {
                    return Err(Error::Parse(format!("{pattern} witness is not injective")));
                }
                Ok(())
            }
            BaseClassification::NotUniversal { components } => {
                let mut covered = BTreeSet::new();
                let mut path_edges = BTreeSet::new();
                for comp in components {
                    if comp.is_empty() || comp.len() > 4 {
                        return Err(Error::Parse("component is not a short path".into()));
                    }
                    let ids = comp.iter().map(|x| g.require(x)).collect::<Result<Vec<_>>>()?;
                    for &v in &ids {
                        if !covered.insert(v) {
                            return Err(Error::Parse(format!("`{}` listed twice", g.name(v))));
                        }
                    }
                    for w in ids.windows(2) {
                        if !g.has_edge(w[0], w[1]) {
                            return Err(Error::Parse("consecutive vertices are not adjacent".into()));
                        }
                        path_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
                    }
                }
                if covered.len() != g.vertex_count() || path_edges.len() != g.edge_count() {
                    return Err(Error::Parse("decomposition does not cover the graph".into()));
                }
                Ok(())
            }
        }
    }
}

/// Walks a component of maximum degree two, starting from an endpoint (or
/// the least vertex, for a cycle) and stepping to the smaller neighbour first.
fn walk(g: &Graph, comp: &[VertexId]) -> Vec<VertexId> {
    let start = comp.iter().copied().find(|&v| g.degree(v) <= 1).unwrap_or(comp[0]);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut current = start;
    loop {
        let next = g.neighbors(current).iter().copied().find(|&y| y != prev && y != start);
        match next {
            Some(y) => {
                order.push(y);
                prev = current;
                current = y;
            }
            None => break,
        }
    }
    order
}

fn embed(pattern: Pattern, g: &Graph, images: Vec<VertexId>) -> BaseClassification {
    let embedding = Morphism::new(&pattern.graph(), g, images).expect("structural witness is a subgraph");
    BaseClassification::Universal { pattern, embedding }
}

/// Linear-time structural classification of `G` as a slice base.
pub fn classify_slice_base(g: &Graph) -> BaseClassification {
    if let Some(center) = g.vertices().find(|&v| g.degree(v) >= 3) {
        let leaves = &g.neighbors(center)[..3];
        return embed(Pattern::Y, g, vec![center, leaves[0], leaves[1], leaves[2]]);
    }
    let mut components = Vec::new();
    for comp in g.components() {
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let order = walk(g, &comp);
        if edges == comp.len() {
            return match comp.len() {
                3 => embed(Pattern::C3, g, order),
                4 => embed(Pattern::C4, g, order),
                _ => embed(Pattern::P4, g, order[..5].to_vec()),
            };
        }
        if comp.len() >= 5 {
            return embed(Pattern::P4, g, order[..5].to_vec());
        }
        components.push(order.iter().map(|&v| g.name(v).to_string()).collect());
    }
    BaseClassification::NotUniversal { components }
}

/// The same question answered by subgraph search for each obstruction.
pub fn universal_by_subgraph_search(g: &Graph) -> Option<Pattern> {
    Pattern::ALL
        .into_iter()
        .find(|p| contains_subgraph(&p.graph(), g).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum ConeClassification {
    /// An odd cycle, listed in order around the cycle.
    Universal { odd_cycle: Vec<String> },
    /// A proper 2-colouring.
    NotUniversal { parts: [Vec<String>; 2] },
}

impl ConeClassification {
    pub fn is_universal(&self) -> bool {
        matches!(self, ConeClassification::Universal { .. })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            ConeClassification::Universal { odd_cycle } => {
                let ids = odd_cycle.iter().map(|x| g.require(x)).collect::<Result<Vec<_>>>()?;
                let distinct: BTreeSet<_> = ids.iter().collect();
                let closed = (0..ids.len()).all(|i| g.has_edge(ids[i], ids[(i + 1) % ids.len()]));
                if ids.len() % 2 == 1 && ids.len() >= 3 && distinct.len() == ids.len() && closed {
                    Ok(())
                } else {
                    Err(Error::Parse("not an odd cycle".into()))
                }
            }
            ConeClassification::NotUniversal { parts } => {
                let mut side = vec![None; g.vertex_count()];
                for (s, part) in parts.iter().enumerate() {
                    for x in part {
                        side[g.require(x)?] = Some(s);
                    }
                }
                let complete = side.iter().all(Option::is_some);
                let proper = g.edges().iter().all(|&(u, v)| side[u] != side[v]);
                if complete && proper {
                    Ok(())
                } else {
                    Err(Error::Parse("not a bipartition".into()))
                }
            }
        }
    }
}

/// Breadth-first 2-colouring; a monochromatic edge closes an odd cycle
/// through the BFS tree.
pub fn classify_cone_base(g: &Graph) -> ConeClassification {
    let n = g.vertex_count();
    let mut side: Vec<Option<usize>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in g.vertices() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if side[y].is_none() {
                    side[y] = side[x].map(|s| 1 - s);
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    if let Some(&(x, y)) = g.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
        let (mut left, mut right) = (vec![x], vec![y]);
        let (mut p, mut q) = (x, y);
        while depth[p] > depth[q] {
            p = parent[p];
            left.push(p);
        }
        while depth[q] > depth[p] {
            q = parent[q];
            right.push(q);
        }
        while p != q {
            p = parent[p];
            q = parent[q];
            left.push(p);
            right.push(q);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        return ConeClassification::Universal {
            odd_cycle: left.iter().map(|&v| g.name(v).to_string()).collect(),
        };
    }
    let part = |s: usize| {
        g.vertices()
            .filter(|&v| side[v] == Some(s))
            .map(|v| g.name(v).to_string())
            .collect()
    };
    ConeClassification::NotUniversal {
        parts: [part(0), part(1)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    #[test]
    fn named_bases() {
        let c3 = build_cycle(3).unwrap();
        let r = classify_slice_base(&c3);
        assert!(matches!(
            r,
            BaseClassification::Universal {
                pattern: Pattern::C3,
                ..
            }
        ));
        r.validate(&c3).unwrap();

        let p3 = build_path(3);
        let r = classify_slice_base(&p3);
        assert_eq!(
            r,
            BaseClassification::NotUniversal {
                components: vec![vec!["v0".into(), "v1".into(), "v2".into(), "v3".into()]]
            }
        );
        r.validate(&p3).unwrap();

        let empty = Graph::empty();
        assert_eq!(
            classify_slice_base(&empty),
            BaseClassification::NotUniversal { components: vec![] }
        );

        let y = build_star(3);
        assert!(matches!(
            classify_slice_base(&y),
            BaseClassification::Universal {
                pattern: Pattern::Y,
                ..
            }
        ));
    }

    #[test]
    fn long_cycles_and_paths_contain_p4() {
        for g in [
            build_cycle(5).unwrap(),
            build_cycle(8).unwrap(),
            build_path(4),
            build_path(9),
        ] {
            let r = classify_slice_base(&g);
            assert!(matches!(
                r,
                BaseClassification::Universal {
                    pattern: Pattern::P4,
                    ..
                }
            ));
            r.validate(&g).unwrap();
        }
    }

    #[test]
    fn unions_of_short_paths() {
        let g = disjoint_union(&[build_path(3), build_path(0), build_path(2)]);
        let r = classify_slice_base(&g);
        assert!(!r.is_universal());
        r.validate(&g).unwrap();
        assert_eq!(universal_by_subgraph_search(&g), None);
    }

    #[test]
    fn cone_examples() {
        let c5 = build_cycle(5).unwrap();
        let r = classify_cone_base(&c5);
        match &r {
            ConeClassification::Universal { odd_cycle } => assert_eq!(odd_cycle.len(), 5),
            other => panic!("{other:?}"),
        }
        r.validate(&c5).unwrap();

        let p3 = build_path(3);
        let r = classify_cone_base(&p3);
        assert!(!r.is_universal());
        r.validate(&p3).unwrap();

        let mixed = disjoint_union(&[build_cycle(6).unwrap(), build_cycle(3).unwrap()]);
        let r = classify_cone_base(&mixed);
        match &r {
            ConeClassification::Universal { odd_cycle } => {
                assert_eq!(odd_cycle.len(), 3);
                assert!(odd_cycle.iter().all(|v| v.starts_with("1/")));
            }
            other => panic!("{other:?}"),
        }
        r.validate(&mixed).unwrap();
    }
}
