//! Exhaustive enumeration of small labeled digraphs (binary relations).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Largest vertex count `enumerate_digraphs` accepts by default.
pub const DEFAULT_DIGRAPH_CAP: usize = 4;

/// Which relations to produce on a fixed vertex set `v0..v(n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigraphFilter {
    pub require_no_isolated: bool,
    pub irreflexive_only: bool,
    /// Keep only the lexicographically least relation of each isomorphism class.
    pub canonical_only: bool,
    pub cap: usize,
}

impl Default for DigraphFilter {
    fn default() -> Self {
        DigraphFilter {
            require_no_isolated: true,
            irreflexive_only: false,
            canonical_only: false,
            cap: DEFAULT_DIGRAPH_CAP,
        }
    }
}

impl DigraphFilter {
    pub fn all() -> Self {
        DigraphFilter {
            require_no_isolated: false,
            ..Self::default()
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Stream of relations on `v0..v(n-1)`, in increasing order of the relation
/// bitmask (bit `n*u + v` set iff `(u, v)` is an arc).
pub struct DigraphStream {
    n: usize,
    next_mask: u64,
    end: u64,
    filter: DigraphFilter,
    names: Arc<[String]>,
    perms: Vec<Vec<usize>>,
}

impl DigraphStream {
    fn accepts(&self, mask: u64) -> bool {
        let n = self.n;
        let arc = |u: usize, v: usize| mask >> (n * u + v) & 1 == 1;
        if self.filter.irreflexive_only && (0..n).any(|u| arc(u, u)) {
            return false;
        }
        if self.filter.require_no_isolated && (0..n).any(|x| (0..n).all(|y| !arc(x, y) && !arc(y, x))) {
            return false;
        }
        if self.filter.canonical_only {
            for p in &self.perms {
                let mut image = 0u64;
                for u in 0..n {
                    for v in 0..n {
                        if arc(u, v) {
                            image |= 1 << (n * p[u] + p[v]);
                        }
                    }
                }
                if image < mask {
                    return false;
                }
            }
        }
        true
    }

    fn build(&self, mask: u64) -> Digraph {
        let n = self.n;
        let pairs = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| mask >> (n * u + v) & 1 == 1)
            .collect();
        Digraph::from_indexed(self.names.clone(), pairs)
    }
}

impl Iterator for DigraphStream {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.accepts(mask) {
                return Some(self.build(mask));
            }
        }
        None
    }
}

/// All digraphs on `v0..v(n-1)` passing `filter`.
pub fn digraphs_with(n: usize, filter: DigraphFilter) -> Result<DigraphStream> {
    if n == 0 {
        return Err(Error::EmptyDigraphSize);
    }
    if n > filter.cap || n * n >= 64 {
        return Err(Error::DigraphCap { n, cap: filter.cap });
    }
    let names: Arc<[String]> = (0..n).map(|i| format!("v{i}")).collect();
    let perms = if filter.canonical_only {
        permutations(n)
    } else {
        Vec::new()
    };
    Ok(DigraphStream {
        n,
        next_mask: 0,
        end: 1 << (n * n),
        filter,
        names,
        perms,
    })
}

/// All `2^(n²)` labeled relations on `n` points, optionally only those
/// without isolated points, under the default cap.
pub fn enumerate_digraphs(n: usize, require_no_isolated: bool) -> Result<DigraphStream> {
    digraphs_with(
        n,
        DigraphFilter {
            require_no_isolated,
            ..DigraphFilter::default()
        },
    )
}

/// Every isolated-point-free digraph with `1..=max_n` vertices.
pub fn isolated_free_upto(max_n: usize) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_digraphs(n, true)?);
    }
    Ok(out)
}
