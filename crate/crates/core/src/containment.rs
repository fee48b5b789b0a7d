//! Order-preserving subgraph containment.
//!
//! The generic search walks pattern vertices left to right and filters host
//! candidates with word-parallel ANDs over bit-row adjacency, so the first
//! embedding found is the lexicographically least one. Monotone paths and
//! cycles get dedicated dynamic programs.

use crate::coloring::{Color, EdgeColoring};
use crate::error::Result;
use crate::graph::{BitRows, OrderedGraph};

/// Strictly increasing map from pattern vertices `1..=r` to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding(Vec<usize>);

impl Embedding {
    pub fn new(images: Vec<usize>) -> Self {
        Embedding(images)
    }

    /// Host vertex of each pattern vertex, 1-based.
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    /// Checks the embedding invariants against a host graph.
    pub fn is_valid(&self, host: &OrderedGraph, pattern: &OrderedGraph) -> bool {
        self.0.len() == pattern.n()
            && self.0.windows(2).all(|w| w[0] < w[1])
            && self.0.iter().all(|&x| x >= 1 && x <= host.n())
            && pattern
                .edges()
                .iter()
                .all(|&(i, j)| host.has_edge(self.image(i), self.image(j)))
    }

    /// Checks the embedding invariants inside one color class of a coloring.
    pub fn is_valid_in_color(
        &self,
        coloring: &EdgeColoring,
        pattern: &OrderedGraph,
        color: Color,
    ) -> bool {
        self.0.len() == pattern.n()
            && self.0.windows(2).all(|w| w[0] < w[1])
            && self.0.iter().all(|&x| x >= 1 && x <= coloring.n())
            && pattern
                .edges()
                .iter()
                .all(|&(i, j)| coloring.color(self.image(i), self.image(j)) == color)
    }
}

/// Lexicographically least embedding of `pattern` into `host`, if any.
pub fn find_embedding(host: &OrderedGraph, pattern: &OrderedGraph) -> Option<Embedding> {
    let found = find_in_rows(&host.bit_rows(), pattern);
    debug_assert!(found.as_ref().is_none_or(|e| e.is_valid(host, pattern)));
    found
}

/// Lexicographically least embedding of `pattern` into the class of `color`.
pub fn find_monochromatic(
    coloring: &EdgeColoring,
    pattern: &OrderedGraph,
    color: Color,
) -> Result<Option<Embedding>> {
    let rows = coloring.class_rows(color)?;
    let found = find_in_rows(&rows, pattern);
    debug_assert!(found
        .as_ref()
        .is_none_or(|e| e.is_valid_in_color(coloring, pattern, color)));
    Ok(found)
}

/// Embedding search over a precomputed bit-row host.
pub fn find_in_rows(rows: &BitRows, pattern: &OrderedGraph) -> Option<Embedding> {
    let r = pattern.n();
    if r > rows.n() {
        return None;
    }
    let mut left = vec![Vec::new(); r];
    for &(i, j) in pattern.edges() {
        left[j - 1].push(i - 1);
    }
    let mut matcher = Matcher {
        rows,
        left,
        images: vec![0; r],
        cand: vec![0; r * rows.words()],
    };
    if matcher.extend(0) {
        Some(Embedding(matcher.images.iter().map(|&x| x + 1).collect()))
    } else {
        None
    }
}

struct Matcher<'a> {
    rows: &'a BitRows,
    left: Vec<Vec<usize>>,
    images: Vec<usize>,
    cand: Vec<u64>,
}

impl Matcher<'_> {
    fn extend(&mut self, p: usize) -> bool {
        let r = self.images.len();
        if p == r {
            return true;
        }
        let n = self.rows.n();
        let words = self.rows.words();
        let lo = if p == 0 { 0 } else { self.images[p - 1] + 1 };
        // leave room for the remaining pattern vertices
        let hi = n - (r - p);
        if lo > hi {
            return false;
        }
        let base = p * words;
        for w in 0..words {
            self.cand[base + w] = range_word(w, lo, hi);
        }
        for &q in &self.left[p] {
            let row = self.rows.row(self.images[q]);
            for w in 0..words {
                self.cand[base + w] &= row[w];
            }
        }
        for w in lo / 64..=hi / 64 {
            let mut bits = self.cand[base + w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                self.images[p] = w * 64 + b;
                if self.extend(p + 1) {
                    return true;
                }
                bits &= bits - 1;
            }
        }
        false
    }
}

/// Bits of word `w` that fall in the inclusive range `lo..=hi`.
fn range_word(w: usize, lo: usize, hi: usize) -> u64 {
    let start = w * 64;
    let end = start + 63;
    if hi < start || lo > end {
        return 0;
    }
    let from = lo.max(start) - start;
    let to = hi.min(end) - start;
    let upper = if to == 63 {
        u64::MAX
    } else {
        (1u64 << (to + 1)) - 1
    };
    upper & !((1u64 << from) - 1)
}

/// Vertex count of the longest monotone path in `color`; 0 on the empty host.
pub fn longest_monotone_path(coloring: &EdgeColoring, color: Color) -> Result<usize> {
    coloring.check_color(color)?;
    let n = coloring.n();
    let mut ending = vec![1usize; n + 1];
    let mut best = usize::from(n > 0);
    for v in 2..=n {
        for u in 1..v {
            if coloring.color(u, v) == color {
                ending[v] = ending[v].max(ending[u] + 1);
            }
        }
        best = best.max(ending[v]);
    }
    Ok(best)
}

/// Vertex count of the longest monotone cycle in `color`.
///
/// Maximizes, over closing pairs `(u, v)` of the color, the longest monotone
/// path from `u` to `v` inside the class. A lone edge counts as the
/// degenerate 2-cycle; 0 means the class is empty.
pub fn longest_monotone_cycle(coloring: &EdgeColoring, color: Color) -> Result<usize> {
    coloring.check_color(color)?;
    let n = coloring.n();
    let mut best = 0;
    let mut from = vec![0usize; n + 1];
    for u in 1..=n {
        from.iter_mut().for_each(|x| *x = 0);
        from[u] = 1;
        for v in u + 1..=n {
            for x in u..v {
                if from[x] > 0 && coloring.color(x, v) == color {
                    from[v] = from[v].max(from[x] + 1);
                }
            }
            if coloring.color(u, v) == color {
                best = best.max(from[v]);
            }
        }
    }
    Ok(best)
}

/// A pattern that must not appear in a given color.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Demand {
    pub pattern: OrderedGraph,
    pub color: Color,
}

impl Demand {
    pub fn new(pattern: OrderedGraph, color: Color) -> Self {
        Demand { pattern, color }
    }
}

/// Outcome of checking a coloring against demands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Avoidance {
    Avoids,
    /// Index of the first violated demand and the least embedding realizing it.
    Violation {
        demand: usize,
        embedding: Embedding,
    },
}

impl Avoidance {
    pub fn is_avoiding(&self) -> bool {
        matches!(self, Avoidance::Avoids)
    }
}

/// Whether `coloring` avoids every demanded pattern in its color.
pub fn avoids(coloring: &EdgeColoring, demands: &[Demand]) -> Result<Avoidance> {
    for d in demands {
        coloring.check_color(d.color)?;
    }
    for (idx, d) in demands.iter().enumerate() {
        if let Some(embedding) = find_monochromatic(coloring, &d.pattern, d.color)? {
            return Ok(Avoidance::Violation {
                demand: idx,
                embedding,
            });
        }
    }
    Ok(Avoidance::Avoids)
}
