//! Ordered graphs on the vertex set `1..=n`.
//!
//! Vertex identity is position: the total order is index order, so two
//! ordered graphs are isomorphic exactly when they are equal.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered graph with vertices `1..=n` and edges `(i, j)`, `i < j`.
///
/// Edges are kept sorted in ascending lexicographic order without duplicates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl OrderedGraph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation and duplicates are merged; loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid("edges", format!("loop at vertex {a}")));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == 0 || j > n {
                return Err(Error::invalid(
                    "edges",
                    format!("edge ({a}, {b}) outside vertex range 1..={n}"),
                ));
            }
            list.push((i, j));
        }
        list.sort_unstable();
        list.dedup();
        Ok(OrderedGraph { n, edges: list })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        OrderedGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Neighbors of `v` that precede it, ascending.
    pub fn left_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(_, j)| j == v)
            .map(|&(i, _)| i)
            .collect()
    }

    /// Neighbors of `v` that follow it, ascending.
    pub fn right_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(i, _)| i == v)
            .map(|&(_, j)| j)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// Adjacency lists indexed by vertex (index 0 unused).
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The subgraph induced by the interval `start..=end`, relabeled to
    /// `1..=end-start+1`. An empty range yields the empty graph on 0 vertices.
    pub fn induced_interval(&self, start: usize, end: usize) -> OrderedGraph {
        if start > end {
            return OrderedGraph::empty(0);
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| i >= start && j <= end)
            .map(|&(i, j)| (i - start + 1, j - start + 1))
            .collect();
        OrderedGraph {
            n: end - start + 1,
            edges,
        }
    }

    /// Bit-row adjacency for word-parallel candidate filtering.
    pub fn bit_rows(&self) -> BitRows {
        let mut rows = BitRows::new(self.n);
        for &(i, j) in &self.edges {
            rows.set(i - 1, j - 1);
            rows.set(j - 1, i - 1);
        }
        rows
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph(n={}, {:?})", self.n, self.edges)
    }
}

/// Square bit matrix over `0..n`, one row of `u64` words per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRows {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1u64 << (col % 64);
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }
}
