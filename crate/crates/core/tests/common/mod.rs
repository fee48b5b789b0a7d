//! Naive oracles shared by the brute-force suites.
#![allow(dead_code)]

use ordram::coloring::Color;
use ordram::graph::OrderedGraph;
use ordram::solver::BinaryMatrix;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64) -> OrderedGraph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    OrderedGraph::new(n, edges).unwrap()
}

/// Increasing `k`-tuples of `1..=n` in lex order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn naive_embedding(host: &OrderedGraph, pattern: &OrderedGraph) -> Option<Vec<usize>> {
    tuples(host.n(), pattern.n()).into_iter().find(|t| {
        pattern
            .edges()
            .iter()
            .all(|&(a, b)| host.has_edge(t[a - 1], t[b - 1]))
    })
}

/// Every coloring of `K_n` in `colors` colors, stopping at the first one
/// that avoids all demands.
pub fn naive_avoiding(demands: &[(OrderedGraph, Color)], colors: usize, n: usize) -> bool {
    let edges = pairs(n);
    let index = |a: usize, b: usize| edges.iter().position(|&e| e == (a, b)).unwrap();
    // each copy as a list of edge indices, with its color
    let mut copies: Vec<(Color, Vec<usize>)> = Vec::new();
    for (p, c) in demands {
        for t in tuples(n, p.n()) {
            let ids = p
                .edges()
                .iter()
                .map(|&(a, b)| index(t[a - 1], t[b - 1]))
                .collect();
            copies.push((*c, ids));
        }
    }
    let mut col = vec![1 as Color; edges.len()];
    loop {
        if copies
            .iter()
            .all(|(c, ids)| !ids.iter().all(|&e| col[e] == *c))
        {
            return true;
        }
        let mut k = 0;
        while k < col.len() && col[k] == colors {
            col[k] = 1;
            k += 1;
        }
        if k == col.len() {
            return false;
        }
        col[k] += 1;
    }
}

pub fn naive_interval_chromatic(g: &OrderedGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    for cuts in 0u32..1 << (n - 1) {
        // bit v-1 set: a new interval starts at vertex v + 1
        let part = |v: usize| (cuts & ((1u32 << (v - 1)) - 1)).count_ones();
        if g.edges().iter().all(|&(a, b)| part(a) != part(b)) {
            best = best.min(cuts.count_ones() as usize + 1);
        }
    }
    best
}

pub fn naive_matrix_contains(host: &BinaryMatrix, pattern: &BinaryMatrix) -> bool {
    if pattern.rows > host.rows || pattern.cols > host.cols {
        return false;
    }
    tuples(host.rows, pattern.rows).iter().any(|rows| {
        tuples(host.cols, pattern.cols).iter().any(|cols| {
            (0..pattern.rows).all(|i| {
                (0..pattern.cols).all(|j| !pattern.get(i, j) || host.get(rows[i] - 1, cols[j] - 1))
            })
        })
    })
}

/// `(s-1)m + (r-1)n - (r-1)(s-1)` when the host has at least `r - 1` rows and
/// `s - 1` columns; below that the pattern cannot fit and every cell is a one.
pub fn minimalist_value(r: usize, s: usize, m: usize, n: usize) -> usize {
    if m + 1 >= r && n + 1 >= s {
        (s - 1) * m + (r - 1) * n - (r - 1) * (s - 1)
    } else {
        m * n
    }
}
