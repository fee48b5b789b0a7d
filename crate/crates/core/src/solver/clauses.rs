//! Clause form of the avoidance problem.
//!
//! Variable `x(e, c)` says pair `e` may take color `c`. Each pair needs some
//! color, and each potential copy of a demand forbids all of its pairs taking
//! the demanded color. Any model gives a coloring by taking the first allowed
//! color of each pair.

use std::collections::HashSet;
use std::time::Instant;

use super::cdcl::{lit, Limits, SatResult, Solver};
use super::search::{Budget, SearchOutcome};
use crate::coloring::{Color, EdgeColoring};
use crate::containment::Demand;

/// Literal total above which the clause engine declines.
pub(crate) const MAX_LITERALS: u128 = 40_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Literals needed for the copy clauses of `demands` on `n` vertices.
pub(crate) fn literal_count(demands: &[Demand], n: usize) -> u128 {
    demands
        .iter()
        .filter(|d| d.pattern.n() <= n)
        .map(|d| binomial(n, d.pattern.n()).saturating_mul(d.pattern.edge_count() as u128))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Runs the clause engine; `None` when the instance is too large for it.
pub(crate) fn run_clauses(
    demands: &[Demand],
    colors: usize,
    n: usize,
    symmetric: bool,
    budget: &Budget,
    start: Instant,
) -> Option<(SearchOutcome, u64)> {
    if literal_count(demands, n) > MAX_LITERALS {
        return None;
    }
    let pairs = n * (n - 1) / 2;
    let mut index = vec![vec![0usize; n]; n];
    let mut e = 0;
    for u in 0..n {
        for v in u + 1..n {
            index[u][v] = e;
            e += 1;
        }
    }
    let var = |e: usize, col: usize| e * colors + col - 1;
    let mut solver = Solver::new(pairs * colors);
    for e in 0..pairs {
        solver.add_clause((1..=colors).map(|c| lit(var(e, c), false)).collect());
    }
    if symmetric && n >= 2 {
        solver.add_clause(vec![lit(var(index[0][1], 1), false)]);
        if n >= 3 && colors >= 3 {
            solver.add_clause(vec![
                lit(var(index[0][2], 1), false),
                lit(var(index[0][2], 2), false),
            ]);
        }
    }
    for d in demands {
        let p = &d.pattern;
        let k = p.n();
        if k > n || p.edge_count() == 0 {
            continue;
        }
        let isolated = (1..=k).any(|v| p.degree(v) == 0);
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let mut clause: Vec<u32> = p
                .edges()
                .iter()
                .map(|&(i, j)| lit(var(index[pick[i - 1]][pick[j - 1]], d.color), true))
                .collect();
            if isolated {
                clause.sort_unstable();
                if seen.insert(clause.clone()) {
                    solver.add_clause(clause);
                }
            } else {
                solver.add_clause(clause);
            }
            if !next_subset(&mut pick, n) {
                break;
            }
        }
    }
    let limits = Limits {
        max_steps: budget.max_nodes,
        deadline: budget.max_time.map(|t| start + t),
    };
    let result = solver.solve(&limits);
    let steps = solver.steps;
    let outcome = match result {
        SatResult::Unsat => SearchOutcome::NoneExists,
        SatResult::Unknown => SearchOutcome::BudgetExhausted,
        SatResult::Sat(model) => {
            let mut coloring = EdgeColoring::uniform(n, colors, 1).expect("valid palette");
            for u in 0..n {
                for v in u + 1..n {
                    let e = index[u][v];
                    let col = (1..=colors)
                        .find(|&c| model[var(e, c)])
                        .expect("every pair has a color");
                    coloring.set(u + 1, v + 1, col as Color);
                }
            }
            SearchOutcome::Found(coloring)
        }
    };
    Some((outcome, steps))
}

/// Next `k`-subset of `0..n` in lex order.
fn next_subset(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
