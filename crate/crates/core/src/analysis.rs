//! Structural parameters of ordered graphs: edge lengths, bandwidth,
//! interval chromatic number, degeneracy and (k, q)-decomposability.

use std::collections::HashMap;

use crate::graph::OrderedGraph;

/// Lengths `j - i` of all edges, in edge order.
pub fn edge_lengths(g: &OrderedGraph) -> Vec<usize> {
    g.edges().iter().map(|&(i, j)| j - i).collect()
}

/// Maximum edge length; 0 for edgeless graphs.
pub fn bandwidth(g: &OrderedGraph) -> usize {
    edge_lengths(g).into_iter().max().unwrap_or(0)
}

/// Minimum number of consecutive intervals partitioning the vertices with no
/// edge inside an interval.
///
/// Left-greedy sweep: an interval is extended until the next vertex has a
/// left neighbor inside it. Returns 0 for the graph on zero vertices.
pub fn interval_chromatic_number(g: &OrderedGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let adj = g.adjacency_lists();
    let mut count = 1;
    let mut start = 1;
    for v in 2..=g.n() {
        if adj[v].iter().any(|&u| u >= start && u < v) {
            count += 1;
            start = v;
        }
    }
    count
}

/// Degeneracy together with a witness order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub k: usize,
    /// Vertices (1-based) in an order where each has at most `k` earlier neighbors.
    pub order: Vec<usize>,
}

/// Minimum-degree elimination. Ties go to the smallest vertex index.
pub fn degeneracy(g: &OrderedGraph) -> Degeneracy {
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut degree: Vec<usize> = (0..=n).map(|v| adj[v].len()).collect();
    let mut removed = vec![false; n + 1];
    let mut removal = Vec::with_capacity(n);
    let mut k = 0;
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        k = k.max(degree[v]);
        removed[v] = true;
        removal.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    removal.reverse();
    Degeneracy { k, order: removal }
}

/// Largest number of earlier neighbors of any vertex when `order` is replayed.
pub fn max_back_degree(g: &OrderedGraph, order: &[usize]) -> usize {
    let adj = g.adjacency_lists();
    let mut rank = vec![usize::MAX; g.n() + 1];
    for (pos, &v) in order.iter().enumerate() {
        rank[v] = pos;
    }
    order
        .iter()
        .map(|&v| adj[v].iter().filter(|&&u| rank[u] < rank[v]).count())
        .max()
        .unwrap_or(0)
}

/// Recursive interval split certifying (k, q)-decomposability. Vertex
/// ranges are 1-based and inclusive, in the coordinates of the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    /// At most `k` vertices, or no vertices at all.
    Leaf { start: usize, end: usize },
    Split {
        start: usize,
        end: usize,
        /// The separating interval `I`.
        middle: (usize, usize),
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

/// Decides (k, q)-decomposability, returning a witness tree on success.
///
/// Exhaustive over separating intervals, memoized on the vertex interval
/// being decomposed.
pub fn is_decomposable(g: &OrderedGraph, k: usize, q: usize) -> Option<DecompositionTree> {
    assert!(k >= 1 && q >= 2, "need k >= 1 and q >= 2");
    let mut solver = Decomposer {
        k,
        q,
        adj: g.adjacency_lists(),
        memo: HashMap::new(),
    };
    solver.solve(1, g.n())
}

struct Decomposer {
    k: usize,
    q: usize,
    adj: Vec<Vec<usize>>,
    memo: HashMap<(usize, usize), Option<DecompositionTree>>,
}

impl Decomposer {
    fn solve(&mut self, start: usize, end: usize) -> Option<DecompositionTree> {
        let size = if start > end { 0 } else { end - start + 1 };
        if size <= self.k {
            return Some(DecompositionTree::Leaf { start, end });
        }
        if let Some(hit) = self.memo.get(&(start, end)) {
            return hit.clone();
        }
        let result = self.search(start, end, size);
        self.memo.insert((start, end), result.clone());
        result
    }

    fn search(&mut self, start: usize, end: usize, size: usize) -> Option<DecompositionTree> {
        // |side| * q <= size * (q - 1)
        let q = self.q;
        let fits = |side: usize| side * q <= size * (q - 1);
        for x in start..=end {
            let left_len = x - start;
            if !fits(left_len) {
                break;
            }
            for y in x..=(x + self.k - 1).min(end) {
                let right_len = end - y;
                if !fits(right_len) || self.crosses(start, x, y, end) {
                    continue;
                }
                let left = self.solve(start, x - 1);
                let Some(left) = left else { continue };
                let right = self.solve(y + 1, end);
                let Some(right) = right else { continue };
                return Some(DecompositionTree::Split {
                    start,
                    end,
                    middle: (x, y),
                    left: Box::new(left),
                    right: Box::new(right),
                });
            }
        }
        None
    }

    /// Whether some edge joins `start..x` (exclusive of x) with `y+1..=end`.
    fn crosses(&self, start: usize, x: usize, y: usize, end: usize) -> bool {
        (start..x).any(|u| self.adj[u].iter().any(|&v| v > y && v <= end))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{build_scheme, SchemeSpec};

    fn scheme(spec: SchemeSpec) -> OrderedGraph {
        build_scheme(&spec).unwrap()
    }

    #[test]
    fn bandwidths() {
        assert_eq!(bandwidth(&scheme(SchemeSpec::MonotonePath(5))), 1);
        assert_eq!(bandwidth(&scheme(SchemeSpec::MonotoneCycle(5))), 4);
        assert_eq!(bandwidth(&scheme(SchemeSpec::AlternatingPath(5))), 4);
        assert_eq!(bandwidth(&OrderedGraph::empty(3)), 0);
    }

    #[test]
    fn interval_chromatic_examples() {
        assert_eq!(
            interval_chromatic_number(&scheme(SchemeSpec::AlternatingPath(7))),
            2
        );
        assert_eq!(
            interval_chromatic_number(&scheme(SchemeSpec::MonotonePath(4))),
            4
        );
        assert_eq!(interval_chromatic_number(&OrderedGraph::empty(6)), 1);
    }

    #[test]
    fn degeneracy_examples() {
        let matching = scheme(SchemeSpec::MatchingShift(8));
        assert_eq!(degeneracy(&matching).k, 1);
        assert_eq!(degeneracy(&scheme(SchemeSpec::Complete(5))).k, 4);
        let cycle = scheme(SchemeSpec::MonotoneCycle(6));
        let d = degeneracy(&cycle);
        assert_eq!(d.k, 2);
        assert!(max_back_degree(&cycle, &d.order) <= 2);
    }

    #[test]
    fn small_bandwidth_is_decomposable() {
        let g = scheme(SchemeSpec::MonotonePath(9));
        assert!(is_decomposable(&g, 1, 2).is_some());
        let g = scheme(SchemeSpec::MonotoneCycle(7));
        assert!(is_decomposable(&g, 6, 2).is_some());
    }

    #[test]
    fn triangle_is_not_one_two_decomposable() {
        assert!(is_decomposable(&scheme(SchemeSpec::Complete(3)), 1, 2).is_none());
    }

    #[test]
    fn clique_with_empty_left_side_splits() {
        // I = {1, 2}, I_L empty, I_R = {3, 4} with |I_R| <= 4/2.
        let tree = is_decomposable(&scheme(SchemeSpec::Complete(4)), 2, 2).unwrap();
        match tree {
            DecompositionTree::Split { middle, .. } => assert_eq!(middle, (1, 2)),
            DecompositionTree::Leaf { .. } => panic!("expected a split"),
        }
    }

    #[test]
    fn small_graphs_are_leaves() {
        let tree = is_decomposable(&scheme(SchemeSpec::Complete(3)), 3, 2).unwrap();
        assert_eq!(tree, DecompositionTree::Leaf { start: 1, end: 3 });
    }
}
