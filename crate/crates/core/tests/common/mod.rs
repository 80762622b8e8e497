//! Brute-force oracles and random generators shared by the integration tests.
//! Nothing here uses the search engine.

#![allow(dead_code)]

use graslice::{build_path, Digraph, Graph, SliceObject};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every map `a -> b` as an image vector, in lexicographic order.
pub fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 {
        1
    } else {
        m.checked_pow(n as u32).unwrap_or(0)
    };
    (0..total).map(move |mut code| {
        let mut images = vec![0; n];
        for slot in images.iter_mut().rev() {
            *slot = code % m.max(1);
            code /= m.max(1);
        }
        images
    })
}

pub fn brute_homs(a: &Graph, b: &Graph) -> Vec<Vec<usize>> {
    all_maps(a.vertex_count(), b.vertex_count())
        .filter(|f| a.edges().iter().all(|&(u, v)| b.has_edge(f[u], f[v])))
        .collect()
}

pub fn brute_digraph_homs(a: &Digraph, b: &Digraph) -> Vec<Vec<usize>> {
    all_maps(a.vertex_count(), b.vertex_count())
        .filter(|f| a.arcs().iter().all(|&(u, v)| b.has_arc(f[u], f[v])))
        .collect()
}

pub fn brute_slice_homs(x: &SliceObject, y: &SliceObject) -> Vec<Vec<usize>> {
    brute_homs(x.carrier(), y.carrier())
        .into_iter()
        .filter(|f| (0..f.len()).all(|v| y.color(f[v]) == x.color(v)))
        .collect()
}

/// Whether `pattern` is a (not necessarily induced) subgraph of `host`, by
/// trying every injective placement.
pub fn brute_contains(pattern: &Graph, host: &Graph) -> bool {
    fn place(p: &Graph, h: &Graph, images: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let next = images.len();
        if next == p.vertex_count() {
            return p.edges().iter().all(|&(u, v)| h.has_edge(images[u], images[v]));
        }
        for t in 0..h.vertex_count() {
            if !used[t] {
                used[t] = true;
                images.push(t);
                if place(p, h, images, used) {
                    return true;
                }
                images.pop();
                used[t] = false;
            }
        }
        false
    }
    place(pattern, host, &mut Vec::new(), &mut vec![false; host.vertex_count()])
}

pub fn p3_base() -> Graph {
    build_path(3).relabel(|x| x[1..].to_string()).unwrap()
}

pub fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let names = numbered(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Graph::new(names, edges).unwrap()
}

/// A uniformly random relation on `n` points with no isolated point.
pub fn random_isolated_free<R: Rng>(rng: &mut R, n: usize) -> Digraph {
    let names = numbered(n);
    loop {
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if rng.gen_bool(0.5) {
                    arcs.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        let d = Digraph::new(names.clone(), arcs).unwrap();
        if !d.has_isolated_point() {
            return d;
        }
    }
}

/// A random object over `P3`: random colours, then random edges between
/// vertices whose colours are adjacent.
pub fn random_p3_object<R: Rng>(rng: &mut R, n: usize, p: f64) -> SliceObject {
    let names = numbered(n);
    let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if colors[i].abs_diff(colors[j]) == 1 && rng.gen_bool(p) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    let carrier = Graph::new(names.clone(), edges).unwrap();
    // Carrier vertex order is by name; `x10` sorts before `x2`.
    let by_index: Vec<usize> = carrier
        .names()
        .iter()
        .map(|s| colors[s[1..].parse::<usize>().unwrap()])
        .collect();
    SliceObject::new(carrier, p3_base(), by_index).unwrap()
}

/// A random connected object over `P3` whose structure map is onto.
pub fn random_connected_onto_p3<R: Rng>(rng: &mut R, max_n: usize) -> SliceObject {
    loop {
        let n = rng.gen_range(4..=max_n);
        let mut colors: Vec<usize> = (0..4).chain((4..n).map(|_| rng.gen_range(0..4))).collect();
        colors.shuffle(rng);
        let p = rng.gen_range(0.3..0.9);
        let names = numbered(n);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if colors[i].abs_diff(colors[j]) == 1 && rng.gen_bool(p) {
                    edges.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        let carrier = Graph::new(names, edges).unwrap();
        if !carrier.is_connected() {
            continue;
        }
        let by_index = carrier
            .names()
            .iter()
            .map(|s| colors[s[1..].parse::<usize>().unwrap()])
            .collect();
        return SliceObject::new(carrier, p3_base(), by_index).unwrap();
    }
}

pub fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

/// Slice homomorphisms by trying every colour-preserving map; far smaller
/// than all maps when colour classes are small.
pub fn brute_coloured_homs(x: &SliceObject, y: &SliceObject) -> Vec<Vec<usize>> {
    let classes: Vec<Vec<usize>> = x
        .carrier()
        .vertices()
        .map(|v| y.carrier().vertices().filter(|&t| y.color(t) == x.color(v)).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(classes.len());
    fn go(x: &Graph, y: &Graph, classes: &[Vec<usize>], images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if images.len() == classes.len() {
            if x.edges().iter().all(|&(u, v)| y.has_edge(images[u], images[v])) {
                out.push(images.clone());
            }
            return;
        }
        for &t in &classes[images.len()] {
            images.push(t);
            go(x, y, classes, images, out);
            images.pop();
        }
    }
    go(x.carrier(), y.carrier(), &classes, &mut images, &mut out);
    out
}
