//! Named ordering schemes: families of ordered graphs with a fixed rule for
//! placing their vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// The three orderings of the 4-cycle up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum C4Ordering {
    /// The monotone cycle `1-2-3-4-1`.
    A,
    /// `1-3-2-4-1`: the ordered complete bipartite graph with parts `{1,2}`, `{3,4}`.
    B,
    /// `1-2-4-3-1`: first and last vertex both adjacent to the two middle ones.
    C,
}

/// Symbolic description of an ordered-graph family member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SchemeSpec {
    /// Path on consecutive vertices.
    MonotonePath(usize),
    /// Path `v1 v2 .. vn` placed as odd-indexed vertices ascending, then
    /// even-indexed vertices descending.
    AlternatingPath(usize),
    /// Monotone path plus the edge between the first and last vertex.
    MonotoneCycle(usize),
    /// Star with `right - 1` leaves after the center and `left - 1` before it.
    Star {
        right: usize,
        left: usize,
    },
    C4(C4Ordering),
    /// Perfect matching `{(i, n/2 + i)}`: every edge crosses every other.
    MatchingShift(usize),
    /// Perfect matching `{(i, n + 1 - i)}`: edges nest.
    MatchingNest(usize),
    Complete(usize),
    /// Complete multipartite graph whose parts are consecutive intervals of
    /// the given sizes, in order.
    CompleteMultipartite(Vec<usize>),
}

impl SchemeSpec {
    /// Checks parameter ranges, naming the offending field on failure.
    pub fn validate(&self) -> Result<()> {
        match self {
            SchemeSpec::MonotonePath(n) | SchemeSpec::Complete(n) if *n < 1 => {
                Err(Error::invalid("n", "need n >= 1"))
            }
            SchemeSpec::AlternatingPath(n) if *n < 1 => Err(Error::invalid("n", "need n >= 1")),
            SchemeSpec::MonotoneCycle(n) if *n < 3 => {
                Err(Error::invalid("n", "cycles need n >= 3"))
            }
            SchemeSpec::Star { right, .. } if *right < 1 => {
                Err(Error::invalid("right", "star parameters must be >= 1"))
            }
            SchemeSpec::Star { left, .. } if *left < 1 => {
                Err(Error::invalid("left", "star parameters must be >= 1"))
            }
            SchemeSpec::MatchingShift(n) | SchemeSpec::MatchingNest(n) if *n < 2 || n % 2 != 0 => {
                Err(Error::invalid("n", "matchings need an even n >= 2"))
            }
            SchemeSpec::CompleteMultipartite(parts) if parts.is_empty() => {
                Err(Error::invalid("parts", "need at least one part"))
            }
            SchemeSpec::CompleteMultipartite(parts) if parts.contains(&0) => {
                Err(Error::invalid("parts", "part sizes must be >= 1"))
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the member graph (assumes valid parameters).
    pub fn vertex_count(&self) -> usize {
        match self {
            SchemeSpec::MonotonePath(n)
            | SchemeSpec::AlternatingPath(n)
            | SchemeSpec::MonotoneCycle(n)
            | SchemeSpec::MatchingShift(n)
            | SchemeSpec::MatchingNest(n)
            | SchemeSpec::Complete(n) => *n,
            SchemeSpec::Star { right, left } => right + left - 1,
            SchemeSpec::C4(_) => 4,
            SchemeSpec::CompleteMultipartite(parts) => parts.iter().sum(),
        }
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeSpec::MonotonePath(n) => write!(f, "mon-path:{n}"),
            SchemeSpec::AlternatingPath(n) => write!(f, "alt-path:{n}"),
            SchemeSpec::MonotoneCycle(n) => write!(f, "mon-cycle:{n}"),
            SchemeSpec::Star { right, left } => write!(f, "star:{right},{left}"),
            SchemeSpec::C4(o) => write!(f, "c4:{o:?}"),
            SchemeSpec::MatchingShift(n) => write!(f, "match-shift:{n}"),
            SchemeSpec::MatchingNest(n) => write!(f, "match-nest:{n}"),
            SchemeSpec::Complete(n) => write!(f, "complete:{n}"),
            SchemeSpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
        }
    }
}

/// A scheme whose member equals `g`, if any. Families are tried in a fixed
/// order, so graphs in several families get the first name.
pub fn identify(g: &OrderedGraph) -> Option<SchemeSpec> {
    let n = g.n();
    let mut candidates = vec![
        SchemeSpec::MonotonePath(n),
        SchemeSpec::Complete(n),
        SchemeSpec::AlternatingPath(n),
        SchemeSpec::MonotoneCycle(n),
    ];
    if n == 4 {
        candidates.extend([C4Ordering::A, C4Ordering::B, C4Ordering::C].map(SchemeSpec::C4));
    }
    candidates.extend((1..=n).map(|left| SchemeSpec::Star {
        right: n + 1 - left,
        left,
    }));
    candidates.extend([SchemeSpec::MatchingShift(n), SchemeSpec::MatchingNest(n)]);
    candidates
        .into_iter()
        .find(|spec| spec.validate().is_ok() && build_scheme(spec).is_ok_and(|h| h == *g))
}

/// Position of path vertex `v_k` (1-based) in the alternating order on `n` vertices.
fn alternating_position(n: usize, k: usize) -> usize {
    if k % 2 == 1 {
        k.div_ceil(2)
    } else {
        n - k / 2 + 1
    }
}

/// Builds the canonical ordered graph of a scheme member.
pub fn build_scheme(spec: &SchemeSpec) -> Result<OrderedGraph> {
    spec.validate()?;
    let edges: Vec<(usize, usize)> = match spec {
        SchemeSpec::MonotonePath(n) => (1..*n).map(|i| (i, i + 1)).collect(),
        SchemeSpec::AlternatingPath(n) => (1..*n)
            .map(|k| (alternating_position(*n, k), alternating_position(*n, k + 1)))
            .collect(),
        SchemeSpec::MonotoneCycle(n) => (1..*n)
            .map(|i| (i, i + 1))
            .chain(std::iter::once((1, *n)))
            .collect(),
        SchemeSpec::Star { right, left } => {
            let center = *left;
            (1..center)
                .map(|i| (i, center))
                .chain((center + 1..center + right).map(|j| (center, j)))
                .collect()
        }
        SchemeSpec::C4(C4Ordering::A) => vec![(1, 2), (2, 3), (3, 4), (1, 4)],
        SchemeSpec::C4(C4Ordering::B) => vec![(1, 3), (1, 4), (2, 3), (2, 4)],
        SchemeSpec::C4(C4Ordering::C) => vec![(1, 2), (1, 3), (2, 4), (3, 4)],
        SchemeSpec::MatchingShift(n) => (1..=n / 2).map(|i| (i, n / 2 + i)).collect(),
        SchemeSpec::MatchingNest(n) => (1..=n / 2).map(|i| (i, n + 1 - i)).collect(),
        SchemeSpec::Complete(n) => (1..=*n)
            .flat_map(|i| (i + 1..=*n).map(move |j| (i, j)))
            .collect(),
        SchemeSpec::CompleteMultipartite(parts) => {
            let mut part_of = Vec::new();
            for (idx, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(idx).take(size));
            }
            let n = part_of.len();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if part_of[i] != part_of[j] {
                        edges.push((i + 1, j + 1));
                    }
                }
            }
            edges
        }
    };
    OrderedGraph::new(spec.vertex_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identify_names() {
        let g = build_scheme(&SchemeSpec::C4(C4Ordering::B)).unwrap();
        assert_eq!(identify(&g), Some(SchemeSpec::C4(C4Ordering::B)));
        let s = build_scheme(&SchemeSpec::Star { right: 2, left: 3 }).unwrap();
        assert_eq!(identify(&s), Some(SchemeSpec::Star { right: 2, left: 3 }));
        assert_eq!(identify(&OrderedGraph::new(3, [(1, 3)]).unwrap()), None);
    }

    #[test]
    fn monotone_path_three() {
        let g = build_scheme(&SchemeSpec::MonotonePath(3)).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn alternating_path_five_by_hand() {
        // v1 v3 v5 v4 v2 occupy positions 1..5; path edges v1v2 v2v3 v3v4 v4v5.
        let g = build_scheme(&SchemeSpec::AlternatingPath(5)).unwrap();
        assert_eq!(g.edges(), &[(1, 5), (2, 4), (2, 5), (3, 4)]);
    }

    #[test]
    fn alternating_path_even() {
        // v1 v3 v4 v2
        let g = build_scheme(&SchemeSpec::AlternatingPath(4)).unwrap();
        assert_eq!(g.edges(), &[(1, 4), (2, 3), (2, 4)]);
    }

    #[test]
    fn monotone_cycle_four_is_c4_a() {
        let g = build_scheme(&SchemeSpec::MonotoneCycle(4)).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(g, build_scheme(&SchemeSpec::C4(C4Ordering::A)).unwrap());
    }

    #[test]
    fn star_places_center_after_left_leaves() {
        let g = build_scheme(&SchemeSpec::Star { right: 3, left: 2 }).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn matchings() {
        let shift = build_scheme(&SchemeSpec::MatchingShift(6)).unwrap();
        assert_eq!(shift.edges(), &[(1, 4), (2, 5), (3, 6)]);
        let nest = build_scheme(&SchemeSpec::MatchingNest(6)).unwrap();
        assert_eq!(nest.edges(), &[(1, 6), (2, 5), (3, 4)]);
    }

    #[test]
    fn multipartite_blocks() {
        let g = build_scheme(&SchemeSpec::CompleteMultipartite(vec![2, 1])).unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 3)]);
    }

    #[test]
    fn invalid_parameters_name_the_field() {
        let err = build_scheme(&SchemeSpec::MonotoneCycle(2)).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { field: "n", .. }));
        let err = build_scheme(&SchemeSpec::Star { right: 0, left: 2 }).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidParameter { field: "right", .. }
        ));
        assert!(build_scheme(&SchemeSpec::MatchingNest(5)).is_err());
    }

    #[test]
    fn path_families_have_n_minus_one_edges() {
        for n in 2..20 {
            let mon = build_scheme(&SchemeSpec::MonotonePath(n)).unwrap();
            let alt = build_scheme(&SchemeSpec::AlternatingPath(n)).unwrap();
            assert_eq!(mon.edge_count(), n - 1);
            assert_eq!(alt.edge_count(), n - 1);
            assert!(mon.edges().iter().all(|&(i, j)| j - i == 1));
        }
    }
}
