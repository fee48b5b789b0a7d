use super::CertifiedColoring;
use crate::coloring::EdgeColoring;
use crate::containment::Demand;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::scheme::{build_scheme, SchemeSpec};

const RED: usize = 1;
const BLUE: usize = 2;

/// Two-coloring of `K_N`, `N = 2rs - 3r - 3s + 5`, with no red monotone cycle
/// on `r` or more vertices and no blue one on `s` or more.
///
/// The vertices are cut into `2r - 3` consecutive intervals of sizes `s - 1`
/// and `s - 2`; pairs inside an interval are blue and pairs across intervals
/// compare the positions of their endpoints inside their intervals.
pub fn monotone_cycle_construction(r: usize, s: usize) -> Result<CertifiedColoring> {
    if r < 2 {
        return Err(Error::invalid("r", "need r >= 2"));
    }
    if s < 2 {
        return Err(Error::invalid("s", "need s >= 2"));
    }
    let sizes = interval_sizes(r, s);
    // (interval, 1-based index inside it) for each vertex
    let mut place = Vec::new();
    for (idx, &size) in sizes.iter().enumerate() {
        place.extend((1..=size).map(|k| (idx, k)));
    }
    let n = place.len();
    debug_assert_eq!(n + 3 * r + 3 * s, 2 * r * s + 5);
    let coloring = EdgeColoring::from_fn(n, 2, |a, b| {
        let ((i, k), (j, l)) = (place[a - 1], place[b - 1]);
        if i == j {
            return BLUE;
        }
        let near = j - i <= r - 2;
        let blue = match (near, sizes[i] <= sizes[j], sizes[i] < sizes[j]) {
            (true, true, _) => k < l,
            (true, false, _) => k <= l,
            (false, _, true) => k >= l,
            (false, _, false) => k > l,
        };
        if blue {
            BLUE
        } else {
            RED
        }
    })?;
    Ok(CertifiedColoring {
        coloring,
        avoided: vec![Demand::new(cycle(r)?, RED), Demand::new(cycle(s)?, BLUE)],
        provenance: format!("monotone-cycle({r},{s})"),
    })
}

/// Sizes of the `2r - 3` intervals, left to right.
fn interval_sizes(r: usize, s: usize) -> Vec<usize> {
    let count = 2 * r - 3;
    let (outer, outer_size, inner_size) = if r % 2 == 1 {
        ((r - 1) / 2, s - 1, s - 2)
    } else {
        ((r - 2) / 2, s - 2, s - 1)
    };
    (0..count)
        .map(|idx| {
            if idx < outer || idx >= count - outer {
                outer_size
            } else {
                inner_size
            }
        })
        .collect()
}

/// Monotone cycle on `len` vertices; a 2-cycle is a single edge.
fn cycle(len: usize) -> Result<OrderedGraph> {
    if len == 2 {
        build_scheme(&SchemeSpec::MonotonePath(2))
    } else {
        build_scheme(&SchemeSpec::MonotoneCycle(len))
    }
}
