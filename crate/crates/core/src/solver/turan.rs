//! Extremal numbers of 0/1 matrices by exhaustive search.

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Largest host matrix, in cells, that the search accepts.
pub const TURAN_MAX_CELLS: usize = 25;

/// A small 0/1 matrix with rows stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Bit `j` of `data[i]` is entry `(i, j)`, 0-based.
    pub data: Vec<u32>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i] >> j & 1 == 1
    }

    pub fn ones(&self) -> usize {
        self.data.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Whether `pattern` appears in `self` on some increasing rows and columns.
    pub fn contains(&self, pattern: &BinaryMatrix) -> bool {
        if pattern.rows > self.rows || pattern.cols > self.cols {
            return false;
        }
        let mut cols = vec![0; pattern.cols];
        self.contains_cols(pattern, 0, 0, &mut cols)
    }

    fn contains_cols(
        &self,
        pattern: &BinaryMatrix,
        next: usize,
        from: usize,
        cols: &mut [usize],
    ) -> bool {
        if next == pattern.cols {
            return self.rows_match(pattern, cols);
        }
        let room = pattern.cols - next;
        for c in from..=self.cols - room {
            cols[next] = c;
            if self.contains_cols(pattern, next + 1, c + 1, cols) {
                return true;
            }
        }
        false
    }

    /// Greedy row matching for a fixed column choice.
    fn rows_match(&self, pattern: &BinaryMatrix, cols: &[usize]) -> bool {
        let mut i = 0;
        for a in 0..pattern.rows {
            let need: u32 = cols
                .iter()
                .enumerate()
                .filter(|&(b, _)| pattern.get(a, b))
                .fold(0, |m, (_, &c)| m | 1 << c);
            while i < self.rows && self.data[i] & need != need {
                i += 1;
            }
            if i == self.rows {
                return false;
            }
            i += 1;
        }
        true
    }
}

/// The bipartite adjacency matrix of a pattern with interval chromatic
/// number 2: rows are the left interval, columns the right one.
pub fn pattern_matrix(pattern: &OrderedGraph) -> Result<BinaryMatrix> {
    if pattern.edge_count() == 0 {
        return Err(Error::invalid("pattern", "pattern has no edges"));
    }
    if (1..=pattern.n()).any(|v| pattern.degree(v) == 0) {
        return Err(Error::invalid("pattern", "pattern has isolated vertices"));
    }
    let split = pattern
        .edges()
        .iter()
        .map(|&(i, _)| i)
        .max()
        .expect("edges");
    if pattern.edges().iter().any(|&(_, j)| j <= split) {
        return Err(Error::invalid(
            "pattern",
            "interval chromatic number is not 2",
        ));
    }
    let cols = pattern.n() - split;
    if cols > 32 {
        return Err(Error::Envelope("pattern matrix wider than 32".into()));
    }
    let mut m = BinaryMatrix::zeros(split, cols);
    for &(i, j) in pattern.edges() {
        m.data[i - 1] |= 1 << (j - split - 1);
    }
    Ok(m)
}

/// Maximum number of ones in an `m x n` 0/1 matrix avoiding the matrix of
/// `pattern`.
pub fn turan_bipartite(pattern: &OrderedGraph, m: usize, n: usize) -> Result<usize> {
    if m * n > TURAN_MAX_CELLS {
        return Err(Error::Envelope(format!(
            "m * n = {} exceeds {TURAN_MAX_CELLS}",
            m * n
        )));
    }
    let forbidden = pattern_matrix(pattern)?;
    let mut search = Extremal {
        forbidden,
        host: BinaryMatrix::zeros(m, n),
        best: 0,
    };
    search.run(0, 0);
    Ok(search.best)
}

struct Extremal {
    forbidden: BinaryMatrix,
    host: BinaryMatrix,
    best: usize,
}

impl Extremal {
    fn run(&mut self, cell: usize, count: usize) {
        let total = self.host.rows * self.host.cols;
        if count + (total - cell) <= self.best {
            return;
        }
        if cell == total {
            self.best = count;
            return;
        }
        let (i, j) = (cell / self.host.cols, cell % self.host.cols);
        // containment is monotone, so a matrix with the pattern never recovers
        self.host.data[i] |= 1 << j;
        if !self.host.contains(&self.forbidden) {
            self.run(cell + 1, count + 1);
        }
        self.host.data[i] &= !(1 << j);
        self.run(cell + 1, count);
    }
}
