//! Edge colorings of the ordered complete graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BitRows, OrderedGraph};

/// Color index, 1-based.
pub type Color = usize;

/// A total coloring of the pairs of `K_N` with colors `1..=c`.
///
/// Colors are stored in ascending lexicographic pair order, which is also the
/// serialization order of the `.oc` format.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: usize,
    data: Vec<u8>,
}

/// Index of the pair `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let a = i - 1;
    a * (2 * n - a - 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl EdgeColoring {
    /// Every pair gets `fill`.
    pub fn uniform(n: usize, colors: usize, fill: Color) -> Result<Self> {
        check_palette(colors)?;
        if fill == 0 || fill > colors {
            return Err(Error::ColorOutOfRange {
                color: fill,
                colors,
            });
        }
        Ok(EdgeColoring {
            n,
            colors,
            data: vec![fill as u8; pair_count(n)],
        })
    }

    /// Colors each pair `(i, j)`, `i < j`, by `f(i, j)`.
    pub fn from_fn(
        n: usize,
        colors: usize,
        mut f: impl FnMut(usize, usize) -> Color,
    ) -> Result<Self> {
        check_palette(colors)?;
        let mut data = Vec::with_capacity(pair_count(n));
        for i in 1..=n {
            for j in i + 1..=n {
                let col = f(i, j);
                if col == 0 || col > colors {
                    return Err(Error::ColorOutOfRange { color: col, colors });
                }
                data.push(col as u8);
            }
        }
        Ok(EdgeColoring { n, colors, data })
    }

    /// Builds from colors listed in lexicographic pair order.
    pub fn from_lex(n: usize, colors: usize, data: Vec<u8>) -> Result<Self> {
        check_palette(colors)?;
        if data.len() != pair_count(n) {
            return Err(Error::invalid(
                "data",
                format!("expected {} pair colors, got {}", pair_count(n), data.len()),
            ));
        }
        if let Some(&bad) = data.iter().find(|&&c| c == 0 || c as usize > colors) {
            return Err(Error::ColorOutOfRange {
                color: bad as usize,
                colors,
            });
        }
        Ok(EdgeColoring { n, colors, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    /// Color of the pair `{a, b}`, `a != b`, in either orientation.
    #[inline]
    pub fn color(&self, a: usize, b: usize) -> Color {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.data[pair_index(self.n, i, j)] as Color
    }

    pub fn set(&mut self, a: usize, b: usize, col: Color) {
        assert!(col >= 1 && col <= self.colors, "color out of range");
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.data[pair_index(self.n, i, j)] = col as u8;
    }

    /// Pair colors in lexicographic order.
    pub fn lex_colors(&self) -> &[u8] {
        &self.data
    }

    /// The graph formed by the pairs of one color.
    pub fn color_class(&self, col: Color) -> Result<OrderedGraph> {
        self.check_color(col)?;
        let mut edges = Vec::new();
        let mut idx = 0;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.data[idx] as usize == col {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        OrderedGraph::new(self.n, edges)
    }

    /// Bit-row adjacency of one color class.
    pub fn class_rows(&self, col: Color) -> Result<BitRows> {
        self.check_color(col)?;
        let mut rows = BitRows::new(self.n);
        let mut idx = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.data[idx] as usize == col {
                    rows.set(i, j);
                    rows.set(j, i);
                }
                idx += 1;
            }
        }
        Ok(rows)
    }

    pub fn check_color(&self, col: Color) -> Result<()> {
        if col == 0 || col > self.colors {
            Err(Error::ColorOutOfRange {
                color: col,
                colors: self.colors,
            })
        } else {
            Ok(())
        }
    }

    /// The coloring induced on the vertex interval `start..=end`, relabeled from 1.
    pub fn restrict(&self, start: usize, end: usize) -> EdgeColoring {
        assert!(start >= 1 && end <= self.n && start <= end + 1);
        let n = end + 1 - start;
        let mut data = Vec::with_capacity(pair_count(n));
        for i in start..=end {
            for j in i + 1..=end {
                data.push(self.color(i, j) as u8);
            }
        }
        EdgeColoring {
            n,
            colors: self.colors,
            data,
        }
    }
}

fn check_palette(colors: usize) -> Result<()> {
    if colors == 0 || colors > u8::MAX as usize {
        Err(Error::invalid("colors", "need 1..=255 colors"))
    } else {
        Ok(())
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(n={}, c={}, ", self.n, self.colors)?;
        for &c in &self.data {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
