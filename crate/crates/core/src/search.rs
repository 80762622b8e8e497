//! Backtracking search for relation-preserving vertex maps.
//!
//! Variables are the source vertices, visited in a fixed order (descending
//! degree, ties by vertex order). Each level keeps one candidate bitset per
//! variable; assigning a variable intersects the domains of its unassigned
//! neighbours with the matching neighbourhood of the chosen target, so a full
//! assignment that survives is a homomorphism. Candidates are tried in
//! ascending order, which makes the solution stream lexicographic with
//! respect to the variable order.

use fixedbitset::FixedBitSet;

use crate::graph::{Digraph, Graph, VertexId};

/// A binary relation prepared for search: successor and predecessor sets as
/// bitsets and as lists.
pub(crate) struct Relation {
    succ: Vec<FixedBitSet>,
    pred: Vec<FixedBitSet>,
    succ_list: Vec<Vec<VertexId>>,
    pred_list: Vec<Vec<VertexId>>,
    loops: FixedBitSet,
}

impl Relation {
    fn with_pairs(n: usize, pairs: impl Iterator<Item = (VertexId, VertexId)>) -> Self {
        let mut succ = vec![FixedBitSet::with_capacity(n); n];
        let mut pred = vec![FixedBitSet::with_capacity(n); n];
        let mut loops = FixedBitSet::with_capacity(n);
        for (u, v) in pairs {
            succ[u].insert(v);
            pred[v].insert(u);
            if u == v {
                loops.insert(u);
            }
        }
        let succ_list = succ.iter().map(|s| s.ones().collect()).collect();
        let pred_list = pred.iter().map(|s| s.ones().collect()).collect();
        Relation {
            succ,
            pred,
            succ_list,
            pred_list,
            loops,
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        Self::with_pairs(g.vertex_count(), g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]))
    }

    pub(crate) fn from_digraph(d: &Digraph) -> Self {
        Self::with_pairs(d.vertex_count(), d.arcs().iter().copied())
    }

    fn len(&self) -> usize {
        self.succ.len()
    }
}

/// One search instance. `domains[x]` are the admissible targets of `x` before
/// any propagation (colour classes, pins).
pub(crate) struct Problem {
    source: Relation,
    target: Relation,
    domains: Vec<FixedBitSet>,
    injective: bool,
}

impl Problem {
    pub(crate) fn new(source: Relation, target: Relation) -> Self {
        let n = target.len();
        let mut full = FixedBitSet::with_capacity(n);
        full.insert_range(..);
        let domains = vec![full; source.len()];
        Problem {
            source,
            target,
            domains,
            injective: false,
        }
    }

    pub(crate) fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    /// Restricts `x` to the given targets.
    pub(crate) fn restrict(&mut self, x: VertexId, allowed: &FixedBitSet) {
        self.domains[x].intersect_with(allowed);
    }

    pub(crate) fn pin(&mut self, x: VertexId, t: VertexId) {
        let keep = self.domains[x].contains(t);
        self.domains[x].clear();
        if keep {
            self.domains[x].insert(t);
        }
    }

    pub(crate) fn solutions(self) -> Solutions {
        Solutions::new(self)
    }
}

struct Frame {
    domains: Vec<FixedBitSet>,
    cursor: usize,
}

/// Lazy stream of solutions as image vectors indexed by source vertex.
pub(crate) struct Solutions {
    problem: Problem,
    order: Vec<VertexId>,
    position: Vec<usize>,
    frames: Vec<Frame>,
    assignment: Vec<VertexId>,
    finished: bool,
}

impl Solutions {
    fn new(mut problem: Problem) -> Self {
        let n = problem.source.len();
        let mut order: Vec<VertexId> = (0..n).collect();
        let degree = |x: VertexId| problem.source.succ_list[x].len() + problem.source.pred_list[x].len();
        order.sort_by(|&x, &y| degree(y).cmp(&degree(x)).then(x.cmp(&y)));
        let mut position = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        for x in 0..n {
            if problem.source.loops.contains(x) {
                let loops = problem.target.loops.clone();
                problem.domains[x].intersect_with(&loops);
            }
        }
        let dead = problem.domains.iter().any(|d| d.is_clear());
        let frames = if dead || n == 0 {
            Vec::new()
        } else {
            vec![Frame {
                domains: problem.domains.clone(),
                cursor: 0,
            }]
        };
        Solutions {
            problem,
            order,
            position,
            frames,
            assignment: vec![0; n],
            // The empty map is the single solution on an empty source.
            finished: dead && n > 0,
        }
    }
}

impl Iterator for Solutions {
    type Item = Vec<VertexId>;

    fn next(&mut self) -> Option<Vec<VertexId>> {
        if self.finished {
            return None;
        }
        let n = self.order.len();
        if n == 0 {
            self.finished = true;
            return Some(Vec::new());
        }
        while !self.frames.is_empty() {
            let depth = self.frames.len() - 1;
            let frame = &mut self.frames[depth];
            let var = self.order[depth];
            let Some(t) = frame.domains[var].ones().find(|&t| t >= frame.cursor) else {
                self.frames.pop();
                continue;
            };
            frame.cursor = t + 1;
            self.assignment[var] = t;
            if depth + 1 == n {
                return Some(self.assignment.clone());
            }
            let mut domains = frame.domains.clone();
            let src = &self.problem.source;
            let tgt = &self.problem.target;
            let mut alive = true;
            for &y in &src.succ_list[var] {
                if self.position[y] > depth {
                    domains[y].intersect_with(&tgt.succ[t]);
                    alive &= !domains[y].is_clear();
                }
            }
            for &y in &src.pred_list[var] {
                if self.position[y] > depth {
                    domains[y].intersect_with(&tgt.pred[t]);
                    alive &= !domains[y].is_clear();
                }
            }
            if alive && self.problem.injective {
                for &y in &self.order[depth + 1..] {
                    domains[y].set(t, false);
                    alive &= !domains[y].is_clear();
                }
            }
            if alive {
                self.frames.push(Frame { domains, cursor: 0 });
            }
        }
        self.finished = true;
        None
    }
}
