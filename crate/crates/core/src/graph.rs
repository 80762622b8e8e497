//! Finite simple graphs and binary relations over string-named vertices.
//!
//! Vertices are kept sorted lexicographically by name and addressed by their
//! position in that order, so every iteration over vertices, edges, or arcs is
//! deterministic.
//!
//! Naming convention for the standard families: `P_n` is the path with `n`
//! *edges* (so `n + 1` vertices), `C_n` is the cycle on `n` vertices, and the
//! star `K_{1,k}` has one center and `k` leaves. `build_star(3)` is the graph
//! usually drawn as a `Y`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Position of a vertex in its graph's lexicographic vertex order.
pub type VertexId = usize;

fn sorted_names<I, S>(vertices: I) -> (Arc<[String]>, HashMap<String, VertexId>)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let set: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
    let names: Arc<[String]> = set.into_iter().collect();
    let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
    (names, index)
}

/// A finite simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    names: Arc<[String]>,
    index: HashMap<String, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    /// Builds a graph from vertex names and unordered edges.
    ///
    /// Duplicate vertices and edges (in either orientation) collapse; loops
    /// and edges naming unknown vertices are rejected.
    pub fn new<V, S, E, T, U>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, U)>,
        T: AsRef<str>,
        U: AsRef<str>,
    {
        let (names, index) = sorted_names(vertices);
        let mut pairs = Vec::new();
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let iu = *index.get(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let iv = *index.get(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            if iu == iv {
                return Err(Error::Loop(u.to_string()));
            }
            pairs.push((iu, iv));
        }
        Ok(Self::assemble(names, index, pairs))
    }

    /// Builds a graph whose vertices are already sorted and indexed.
    /// Callers guarantee endpoints are in range and distinct.
    pub(crate) fn from_indexed(names: Arc<[String]>, pairs: Vec<(VertexId, VertexId)>) -> Self {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        Self::assemble(names, index, pairs)
    }

    fn assemble(names: Arc<[String]>, index: HashMap<String, VertexId>, pairs: Vec<(VertexId, VertexId)>) -> Self {
        let mut edges: Vec<(VertexId, VertexId)> = pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); names.len()];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            names,
            index,
            adjacency,
            edges,
        }
    }

    pub fn empty() -> Self {
        Self::from_indexed(Arc::from(Vec::<String>::new()), Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn shared_names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<VertexId> {
        self.vertex(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.names.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (short, other) = if self.adjacency[u].len() <= self.adjacency[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[short].binary_search(&other).is_ok()
    }

    /// Connected components, each sorted, listed by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from a set of sources; `None` for unreachable.
    pub fn distances_from(&self, sources: &[VertexId]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// The subgraph induced on `keep`, with vertex names preserved.
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let mut keep: Vec<VertexId> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let names: Arc<[String]> = keep.iter().map(|&v| self.names[v].clone()).collect();
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| position[u] != usize::MAX && position[v] != usize::MAX)
            .map(|&(u, v)| (position[u], position[v]))
            .collect();
        Graph::from_indexed(names, pairs)
    }

    /// Renames every vertex; fails if two vertices receive the same name.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<Graph> {
        let renamed: Vec<String> = self.names.iter().map(|n| rename(n)).collect();
        let distinct: BTreeSet<&String> = renamed.iter().collect();
        if distinct.len() != renamed.len() {
            let mut seen = BTreeSet::new();
            let dup = renamed.iter().find(|n| !seen.insert(*n)).cloned();
            return Err(Error::IdCollision(dup.unwrap_or_default()));
        }
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(u, v)| (renamed[u].clone(), renamed[v].clone()))
            .collect();
        Graph::new(renamed, edges)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|&(u, v)| (self.name(u), self.name(v))).collect();
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

/// A finite set with an arbitrary binary relation on it. Loops and
/// antiparallel arcs are allowed.
#[derive(Clone)]
pub struct Digraph {
    names: Arc<[String]>,
    index: HashMap<String, VertexId>,
    arcs: Vec<(VertexId, VertexId)>,
    successors: Vec<Vec<VertexId>>,
    predecessors: Vec<Vec<VertexId>>,
}

impl Digraph {
    pub fn new<V, S, E, T, U>(vertices: V, arcs: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, U)>,
        T: AsRef<str>,
        U: AsRef<str>,
    {
        let (names, index) = sorted_names(vertices);
        let mut pairs = Vec::new();
        for (u, v) in arcs {
            let (u, v) = (u.as_ref(), v.as_ref());
            let iu = *index.get(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let iv = *index.get(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            pairs.push((iu, iv));
        }
        Ok(Self::assemble(names, index, pairs))
    }

    pub(crate) fn from_indexed(names: Arc<[String]>, pairs: Vec<(VertexId, VertexId)>) -> Self {
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        Self::assemble(names, index, pairs)
    }

    fn assemble(names: Arc<[String]>, index: HashMap<String, VertexId>, mut arcs: Vec<(VertexId, VertexId)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        let mut successors = vec![Vec::new(); names.len()];
        let mut predecessors = vec![Vec::new(); names.len()];
        for &(u, v) in &arcs {
            successors[u].push(v);
            predecessors[v].push(u);
        }
        for list in predecessors.iter_mut() {
            list.sort_unstable();
        }
        Digraph {
            names,
            index,
            arcs,
            successors,
            predecessors,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn shared_names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<VertexId> {
        self.vertex(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.names.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.successors[u].binary_search(&v).is_ok()
    }

    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.successors[v]
    }

    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.predecessors[v]
    }

    /// An isolated point occurs in no arc.
    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.successors[v].is_empty() && self.predecessors[v].is_empty()
    }

    pub fn isolated_points(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.is_isolated(v)).collect()
    }

    pub fn has_isolated_point(&self) -> bool {
        self.vertices().any(|v| self.is_isolated(v))
    }

    pub fn loops(&self) -> Vec<VertexId> {
        self.arcs.iter().filter(|(u, v)| u == v).map(|&(u, _)| u).collect()
    }

    pub fn is_irreflexive(&self) -> bool {
        self.arcs.iter().all(|(u, v)| u != v)
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<(&str, &str)> = self.arcs.iter().map(|&(u, v)| (self.name(u), self.name(v))).collect();
        f.debug_struct("Digraph")
            .field("vertices", &self.names)
            .field("arcs", &arcs)
            .finish()
    }
}

fn numbered(count: usize) -> Vec<String> {
    (0..count).map(|i| format!("v{i}")).collect()
}

fn numbered_graph(count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let labels = numbered(count);
    let pairs: Vec<(String, String)> = edges
        .into_iter()
        .map(|(u, v)| (labels[u].clone(), labels[v].clone()))
        .collect();
    Graph::new(labels, pairs).expect("numbered families are simple graphs")
}

/// The path `P_n` with `n` edges on vertices `v0..vn`.
pub fn build_path(n: usize) -> Graph {
    numbered_graph(n + 1, (0..n).map(|i| (i, i + 1)))
}

/// The cycle `C_n` on vertices `v0..v(n-1)`.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Ok(numbered_graph(n, (0..n).map(|i| (i, (i + 1) % n))))
}

/// The star `K_{1,k}`: center `v0`, leaves `v1..vk`.
pub fn build_star(k: usize) -> Graph {
    numbered_graph(k + 1, (1..=k).map(|i| (0, i)))
}

/// The complete graph `K_n` on `v0..v(n-1)`.
pub fn build_complete(n: usize) -> Graph {
    numbered_graph(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Disjoint union; vertex `x` of part `i` becomes `"{i}/{x}"`.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        vertices.extend(part.names().iter().map(|x| format!("{i}/{x}")));
        edges.extend(
            part.edges()
                .iter()
                .map(|&(u, v)| (format!("{i}/{}", part.name(u)), format!("{i}/{}", part.name(v)))),
        );
    }
    Graph::new(vertices, edges).expect("namespaced parts cannot collide")
}

/// Every labeled graph on `v0..v(n-1)`, ordered by edge bitmask over the
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let names: Arc<[String]> = numbered(n).into();
    assert!(pairs.len() < 64, "too many vertices for exhaustive enumeration");
    (0u64..1 << pairs.len()).map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_indexed(names.clone(), chosen)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_counts_edges_not_vertices() {
        let p0 = build_path(0);
        assert_eq!((p0.vertex_count(), p0.edge_count()), (1, 0));
        let p3 = build_path(3);
        assert_eq!((p3.vertex_count(), p3.edge_count()), (4, 3));
        let p12 = build_path(12);
        assert_eq!((p12.vertex_count(), p12.edge_count()), (13, 12));
    }

    #[test]
    fn cycles() {
        let c3 = build_cycle(3).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));
        let c4 = build_cycle(4).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert_eq!(build_cycle(2), Err(Error::CycleTooShort(2)));
    }

    #[test]
    fn stars() {
        let y = build_star(3);
        assert_eq!((y.vertex_count(), y.edge_count()), (4, 3));
        let degrees: Vec<usize> = y.vertices().map(|v| y.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 1);
        assert_eq!(build_star(0).vertex_count(), 1);
        assert_eq!(build_star(1).edge_count(), 1);
    }

    #[test]
    fn unions_add_counts() {
        let p3 = build_path(3);
        let u = disjoint_union(&[p3.clone(), p3]);
        assert_eq!((u.vertex_count(), u.edge_count()), (8, 6));
        let empty = disjoint_union(&[]);
        assert_eq!((empty.vertex_count(), empty.edge_count()), (0, 0));
        let mixed = disjoint_union(&[build_cycle(3).unwrap(), build_star(3)]);
        assert_eq!((mixed.vertex_count(), mixed.edge_count()), (7, 6));
    }

    #[test]
    fn rejects_loops_and_unknown_endpoints() {
        assert_eq!(Graph::new(["x"], [("x", "x")]), Err(Error::Loop("x".into())));
        assert_eq!(Graph::new(["x"], [("x", "y")]), Err(Error::UnknownVertex("y".into())));
    }

    #[test]
    fn edges_are_sets() {
        let g = Graph::new(["a", "b"], [("a", "b"), ("b", "a"), ("a", "b")]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn digraph_isolation() {
        let d = Digraph::new(["u", "v", "w"], [("u", "v")]).unwrap();
        assert!(!d.is_isolated(0));
        assert!(d.is_isolated(2));
        assert_eq!(d.isolated_points(), vec![2]);
        let l = Digraph::new(["u"], [("u", "u")]).unwrap();
        assert!(!l.has_isolated_point());
        assert!(!l.is_irreflexive());
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(labeled_graphs(0).count(), 1);
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graphs(5).count(), 1024);
        // Connected labeled graphs on 4 vertices: 38.
        assert_eq!(labeled_graphs(4).filter(|g| g.is_connected()).count(), 38);
    }

    #[test]
    fn components_sorted_by_least_vertex() {
        let g = Graph::new(["a", "b", "c", "d"], [("a", "c"), ("b", "d")]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1, 3]]);
    }
}
