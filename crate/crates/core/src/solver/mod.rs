//! Exact ordered Ramsey numbers of small instances.

mod cdcl;
mod clauses;
mod search;
mod turan;

pub use search::{
    exists_avoiding, exists_avoiding_in, Budget, Engine, SearchOutcome, SearchReport, SearchStats,
    MAX_VERTICES,
};
pub use turan::{pattern_matrix, turan_bipartite, BinaryMatrix, TURAN_MAX_CELLS};

use std::time::{Duration, Instant};

use crate::analysis::{degeneracy, interval_chromatic_number};
use crate::bounds::{
    alt_path_bounds, degenerate_upper, monotone_cycles_exact, monotone_paths_exact,
    path_vs_clique_exact, stars_multicolor_exact, stars_pair_exact, union_bound_lower, BoundValue,
};
use crate::coloring::EdgeColoring;
use crate::constructions::{
    alternating_parity, monotone_cycle_construction, monotone_path_grid, star_coloring,
    CertifiedColoring,
};
use crate::containment::{avoids, Demand};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::scheme::{build_scheme, SchemeSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyStatus {
    Exact(usize),
    /// `lo <= R`, and `R <= hi` when `hi` is known.
    Bounds {
        lo: usize,
        hi: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyResult {
    pub demands: Vec<Demand>,
    pub colors: usize,
    pub status: RamseyStatus,
    /// Avoiding coloring on `R - 1` vertices (or on `lo - 1` for bounds).
    pub witness: Option<CertifiedColoring>,
    pub stats: SearchStats,
}

impl RamseyResult {
    pub fn lower(&self) -> usize {
        match self.status {
            RamseyStatus::Exact(v) => v,
            RamseyStatus::Bounds { lo, .. } => lo,
        }
    }
}

/// Smallest `N` such that every coloring of `K_N` contains some demanded
/// pattern in its color.
///
/// The scan starts above the largest verified witness from the known
/// constructions (or at `start` if that is larger) and moves up on `Found`
/// and down on `NoneExists` until the two meet.
pub fn ramsey_number(
    demands: &[Demand],
    start: Option<usize>,
    budget: &Budget,
) -> Result<RamseyResult> {
    if demands.is_empty() {
        return Err(Error::invalid("demands", "need at least one demand"));
    }
    let colors = demands.iter().map(|d| d.color).max().unwrap_or(0);
    let begin = Instant::now();
    let mut nodes = 0u64;
    let mut witness = known_witness(demands, colors)?;
    let mut found = witness.as_ref().map(|w| w.coloring.n());
    let mut refuted: Option<usize> = None;
    let mut n = start.unwrap_or(1).max(found.map_or(1, |f| f + 1)).max(1);

    let status = loop {
        if refuted == Some(found.map_or(1, |f| f + 1)) {
            break RamseyStatus::Exact(refuted.expect("set"));
        }
        if n > budget.max_n.unwrap_or(MAX_VERTICES).min(MAX_VERTICES) {
            break bounds(found, refuted);
        }
        let remaining = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(nodes)),
            max_time: budget.max_time.map(|t| {
                t.saturating_sub(begin.elapsed())
                    .max(Duration::from_nanos(1))
            }),
            threads: budget.threads,
            engine: budget.engine,
            max_n: budget.max_n,
        };
        if remaining.max_nodes == Some(0) {
            break bounds(found, refuted);
        }
        let report = exists_avoiding_in(demands, colors, n, &remaining)?;
        nodes += report.stats.nodes;
        match report.outcome {
            SearchOutcome::Found(coloring) => {
                found = Some(n);
                witness = Some(CertifiedColoring {
                    coloring,
                    avoided: demands.to_vec(),
                    provenance: format!("search({n})"),
                });
                n += 1;
            }
            SearchOutcome::NoneExists => {
                refuted = Some(n);
                n = n.saturating_sub(1);
                if n == 0 || found == Some(n) {
                    continue;
                }
            }
            SearchOutcome::BudgetExhausted => break bounds(found, refuted),
        }
    };
    Ok(RamseyResult {
        demands: demands.to_vec(),
        colors,
        status,
        witness,
        stats: SearchStats {
            nodes,
            elapsed: begin.elapsed(),
        },
    })
}

fn bounds(found: Option<usize>, refuted: Option<usize>) -> RamseyStatus {
    RamseyStatus::Bounds {
        lo: found.map_or(1, |f| f + 1),
        hi: refuted,
    }
}

/// Largest verified avoiding coloring among the explicit constructions whose
/// demand shape matches.
pub fn known_witness(demands: &[Demand], colors: usize) -> Result<Option<CertifiedColoring>> {
    let mut per_color: Vec<Vec<&OrderedGraph>> = vec![Vec::new(); colors];
    for d in demands {
        if d.color == 0 || d.color > colors {
            return Err(Error::ColorOutOfRange {
                color: d.color,
                colors,
            });
        }
        per_color[d.color - 1].push(&d.pattern);
    }
    if per_color.iter().any(|p| p.len() != 1) {
        return Ok(None);
    }
    let single: Vec<&OrderedGraph> = per_color.into_iter().map(|p| p[0]).collect();
    let mut candidates = Vec::new();

    let paths: Option<Vec<usize>> = single
        .iter()
        .map(|p| matches_family(p, SchemeSpec::MonotonePath).filter(|&r| r >= 2))
        .collect();
    if let Some(r) = paths {
        candidates.push(monotone_path_grid(&r)?);
    }
    let stars: Option<Vec<usize>> = single
        .iter()
        .map(|p| matches_family(p, |n| SchemeSpec::Star { right: n, left: 1 }).filter(|&r| r >= 2))
        .collect();
    if let Some(r) = stars {
        candidates.push(star_coloring(&r)?);
    }
    if colors == 2 {
        let cycles: Option<Vec<usize>> = single
            .iter()
            .map(|p| {
                if p.n() == 2 && p.edge_count() == 1 {
                    Some(2)
                } else {
                    matches_family(p, SchemeSpec::MonotoneCycle)
                }
            })
            .collect();
        if let Some(c) = cycles {
            candidates.push(monotone_cycle_construction(c[0], c[1])?);
        }
        let alt = matches_family(single[0], SchemeSpec::AlternatingPath);
        if let Some(n) = alt.filter(|&n| n >= 3) {
            if single[1] == single[0] {
                candidates.push(alternating_parity(n)?);
            }
        }
    }
    let mut best: Option<CertifiedColoring> = None;
    for cand in candidates {
        if cand.coloring.n() > MAX_VERTICES || cand.coloring.colors() != colors {
            continue;
        }
        if !avoids(&cand.coloring, demands)?.is_avoiding() {
            continue;
        }
        if best
            .as_ref()
            .is_none_or(|b| cand.coloring.n() > b.coloring.n())
        {
            best = Some(CertifiedColoring {
                avoided: demands.to_vec(),
                ..cand
            });
        }
    }
    Ok(best)
}

/// Oracle values whose family matches the demand list: one demand per color.
pub fn known_bounds(demands: &[Demand]) -> Vec<BoundValue> {
    let colors = demands.iter().map(|d| d.color).max().unwrap_or(0);
    let mut per_color: Vec<Vec<&OrderedGraph>> = vec![Vec::new(); colors];
    for d in demands {
        if d.color >= 1 {
            per_color[d.color - 1].push(&d.pattern);
        }
    }
    if colors == 0 || per_color.iter().any(|p| p.len() != 1) {
        return Vec::new();
    }
    let single: Vec<&OrderedGraph> = per_color.into_iter().map(|p| p[0]).collect();
    let mut out = Vec::new();
    let all = |f: &dyn Fn(&OrderedGraph) -> Option<u64>| -> Option<Vec<u64>> {
        single.iter().map(|p| f(p)).collect()
    };
    let path = |p: &OrderedGraph| matches_family(p, SchemeSpec::MonotonePath).map(|n| n as u64);
    if let Some(r) = all(&path) {
        out.extend(monotone_paths_exact(&r));
    }
    let right_star = |p: &OrderedGraph| {
        matches_family(p, |n| SchemeSpec::Star { right: n, left: 1 }).map(|n| n as u64)
    };
    if let Some(r) = all(&right_star) {
        out.extend(stars_multicolor_exact(&r));
    }
    if colors == 2 {
        let (a, b) = (single[0], single[1]);
        if let (Some((r1, s1)), Some((r2, s2))) = (star_params(a), star_params(b)) {
            out.extend(stars_pair_exact(r1, s1, r2, s2));
        }
        let cycle = |p: &OrderedGraph| {
            if p.n() == 2 && p.edge_count() == 1 {
                Some(2)
            } else {
                matches_family(p, SchemeSpec::MonotoneCycle).map(|n| n as u64)
            }
        };
        if let (Some(r), Some(s)) = (cycle(a), cycle(b)) {
            out.extend(monotone_cycles_exact(r, s));
        }
        let clique = |p: &OrderedGraph| matches_family(p, SchemeSpec::Complete).map(|n| n as u64);
        for (x, y) in [(a, b), (b, a)] {
            if let (Some(r), Some(s)) = (path(x), clique(y)) {
                out.extend(path_vs_clique_exact(r, s));
                break;
            }
        }
        if a == b {
            if let Some(n) = matches_family(a, SchemeSpec::AlternatingPath).filter(|&n| n >= 2) {
                if let Ok(alt) = alt_path_bounds(n as u64) {
                    out.extend([alt.lower, alt.upper, alt.upper_sharp, alt.conjectured]);
                }
            }
        }
    }
    let first = single[0];
    if colors >= 2 && first.edge_count() >= 1 && single.iter().all(|p| *p == first) {
        out.extend(union_bound_lower(
            first.n() as u64,
            first.edge_count() as u64,
            colors as u64,
        ));
        if colors == 2 {
            let k = degeneracy(first).k as u64;
            let p = interval_chromatic_number(first) as u64;
            out.extend(degenerate_upper(k, p, first.n() as u64));
        }
    }
    out
}

/// `(r, s)` when `p` is the star `S_{r,s}`.
fn star_params(p: &OrderedGraph) -> Option<(u64, u64)> {
    (1..=p.n()).find_map(|left| {
        let spec = SchemeSpec::Star {
            right: p.n() + 1 - left,
            left,
        };
        (build_scheme(&spec).ok()? == *p).then_some(((p.n() + 1 - left) as u64, left as u64))
    })
}

/// The size `n` when `p` equals the family member on `p.n()` vertices.
fn matches_family(p: &OrderedGraph, family: impl Fn(usize) -> SchemeSpec) -> Option<usize> {
    let spec = family(p.n());
    spec.validate().ok()?;
    (build_scheme(&spec).ok()? == *p).then_some(p.n())
}

/// The avoiding coloring of the witness, or an error if it does not avoid.
pub fn verify_witness(witness: &CertifiedColoring) -> Result<EdgeColoring> {
    match witness.verify()? {
        crate::containment::Avoidance::Avoids => Ok(witness.coloring.clone()),
        crate::containment::Avoidance::Violation { demand, embedding } => {
            Err(Error::Precondition(format!(
                "witness contains demand {} at {:?}",
                demand + 1,
                embedding.images()
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(spec: SchemeSpec) -> Vec<Demand> {
        let p = build_scheme(&spec).unwrap();
        vec![Demand::new(p.clone(), 1), Demand::new(p, 2)]
    }

    #[test]
    fn monotone_paths_three() {
        let r = ramsey_number(
            &both(SchemeSpec::MonotonePath(3)),
            None,
            &Budget::unlimited(),
        )
        .unwrap();
        assert_eq!(r.status, RamseyStatus::Exact(5));
        assert_eq!(r.witness.unwrap().coloring.n(), 4);
    }

    #[test]
    fn triangle_is_six() {
        let r = ramsey_number(&both(SchemeSpec::Complete(3)), None, &Budget::unlimited()).unwrap();
        assert_eq!(r.status, RamseyStatus::Exact(6));
    }

    #[test]
    fn start_above_value_steps_down() {
        let r = ramsey_number(
            &both(SchemeSpec::Complete(3)),
            Some(9),
            &Budget::unlimited(),
        )
        .unwrap();
        assert_eq!(r.status, RamseyStatus::Exact(6));
    }

    #[test]
    fn single_vertex_pattern_is_one() {
        let d = vec![Demand::new(OrderedGraph::empty(1), 1)];
        let r = ramsey_number(&d, None, &Budget::unlimited()).unwrap();
        assert_eq!(r.status, RamseyStatus::Exact(1));
        assert!(r.witness.is_none());
    }

    #[test]
    fn budget_gives_bounds() {
        let d = both(SchemeSpec::AlternatingPath(5));
        let r = ramsey_number(&d, None, &Budget::nodes(5)).unwrap();
        match r.status {
            RamseyStatus::Bounds { lo, hi } => {
                assert_eq!(lo, 8);
                assert!(hi.is_none_or(|h| lo <= h));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bounds_by_family() {
        let kinds = |d: &[Demand]| {
            known_bounds(d)
                .iter()
                .map(|b| (b.kind, b.to_u64()))
                .collect::<Vec<_>>()
        };
        let k = kinds(&both(SchemeSpec::MonotoneCycle(4)));
        assert!(k.contains(&(crate::bounds::BoundKind::Exact, Some(14))));
        let d = vec![
            Demand::new(build_scheme(&SchemeSpec::MonotonePath(3)).unwrap(), 1),
            Demand::new(build_scheme(&SchemeSpec::Complete(3)).unwrap(), 2),
        ];
        assert!(kinds(&d).contains(&(crate::bounds::BoundKind::Exact, Some(5))));
        let s = vec![
            Demand::new(
                build_scheme(&SchemeSpec::Star { right: 1, left: 3 }).unwrap(),
                1,
            ),
            Demand::new(
                build_scheme(&SchemeSpec::Star { right: 3, left: 1 }).unwrap(),
                2,
            ),
        ];
        assert!(kinds(&s).contains(&(crate::bounds::BoundKind::Exact, Some(5))));
    }

    #[test]
    fn seeds_are_verified() {
        let d = both(SchemeSpec::MonotoneCycle(4));
        let w = known_witness(&d, 2).unwrap().unwrap();
        assert_eq!(w.coloring.n(), 13);
        assert!(verify_witness(&w).is_ok());
    }
}
