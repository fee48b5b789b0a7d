//! Blue copy of a degenerate pattern or a red complete bipartite graph.
//!
//! The host is split into `n` intervals of length `floor(N / n)`, one per
//! pattern vertex. Pattern vertices are placed in a degeneracy order; before
//! each placement the candidates of the vertex being placed are tested
//! against every later neighbor, and either `t` of them have few blue
//! neighbors there (which yields a red `K_{t,t}`) or the vertex is placed on
//! the first candidate that survives all tests.

use crate::analysis::degeneracy;
use crate::coloring::{Color, EdgeColoring};
use crate::containment::Embedding;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

pub const RED: Color = 1;
pub const BLUE: Color = 2;

/// Red `K_{t,t}` with every left vertex before every right vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicliqueWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BicliqueWitness {
    pub fn is_valid(&self, host: &EdgeColoring, t: usize) -> bool {
        let in_range = |v: &usize| (1..=host.n()).contains(v);
        self.left.len() == t
            && self.right.len() == t
            && self.left.windows(2).all(|w| w[0] < w[1])
            && self.right.windows(2).all(|w| w[0] < w[1])
            && self.left.iter().all(in_range)
            && self.right.iter().all(in_range)
            && match (self.left.last(), self.right.first()) {
                (Some(a), Some(b)) => a < b,
                _ => true,
            }
            && self
                .left
                .iter()
                .all(|&a| self.right.iter().all(|&b| host.color(a, b) == RED))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedOutcome {
    BlueEmbedding(Embedding),
    RedBiclique(BicliqueWitness),
}

/// Candidate count of one vertex at the moment it was placed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    /// Pattern vertex, 1-based.
    pub vertex: usize,
    /// `|U(w)|` before the survival tests.
    pub candidates: usize,
    /// Candidates left after the tests.
    pub survivors: usize,
    /// How many times `U(w)` was cut down by earlier placements.
    pub shrinks: usize,
}

impl Placement {
    /// `|U(w)| >= (N/n) t^-k - n t` and `(N/n) t^-k - n t >= 0`, in integers.
    pub fn meets_ledger(&self, big_n: usize, n: usize, t: usize, k: usize) -> bool {
        let tk = (t as i128).pow(k as u32);
        let slack = big_n as i128 - (n as i128).pow(2) * tk * t as i128;
        slack >= 0 && self.candidates as i128 * n as i128 * tk >= slack && self.survivors > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedReport {
    pub outcome: EmbedOutcome,
    pub t: usize,
    /// Interval length `floor(N / n)`.
    pub interval: usize,
    /// Placements in the order they happened.
    pub placements: Vec<Placement>,
}

impl EmbedReport {
    /// Validity of the outcome against `host` and `pattern`.
    pub fn is_valid(&self, host: &EdgeColoring, pattern: &OrderedGraph) -> bool {
        match &self.outcome {
            EmbedOutcome::BlueEmbedding(h) => {
                h.is_valid_in_color(host, pattern, BLUE)
                    && h.images().iter().enumerate().all(|(i, &x)| {
                        let lo = i * self.interval + 1;
                        (lo..lo + self.interval).contains(&x)
                    })
            }
            EmbedOutcome::RedBiclique(w) => w.is_valid(host, self.t),
        }
    }
}

/// Largest `t` with `n^2 t^(k+1) <= N`.
pub fn biclique_size(big_n: usize, n: usize, k: usize) -> usize {
    let fits = |t: usize| {
        (t as u128)
            .checked_pow(k as u32 + 1)
            .and_then(|p| p.checked_mul((n as u128).pow(2)))
            .is_some_and(|x| x <= big_n as u128)
    };
    let mut t = 0;
    while fits(t + 1) {
        t += 1;
    }
    t
}

/// Runs the placement procedure on a red/blue host.
pub fn embed_or_biclique(
    host: &EdgeColoring,
    pattern: &OrderedGraph,
    k: usize,
) -> Result<EmbedReport> {
    let big_n = host.n();
    let n = pattern.n();
    if host.colors() != 2 {
        return Err(Error::Precondition("host must be 2-colored".into()));
    }
    if k == 0 {
        return Err(Error::invalid("k", "need k >= 1"));
    }
    if n == 0 || big_n < n * n {
        return Err(Error::Precondition(format!(
            "need N >= n^2, got N = {big_n}, n = {n}"
        )));
    }
    let deg = degeneracy(pattern);
    if deg.k > k {
        return Err(Error::Precondition(format!(
            "pattern is {}-degenerate, more than k = {k}",
            deg.k
        )));
    }
    let t = biclique_size(big_n, n, k);
    let len = big_n / n;
    let mut rank = vec![0; n + 1];
    for (pos, &v) in deg.order.iter().enumerate() {
        rank[v] = pos;
    }
    let adj = pattern.adjacency_lists();
    let mut cand: Vec<Vec<usize>> = (0..=n)
        .map(|v| {
            if v == 0 {
                Vec::new()
            } else {
                ((v - 1) * len + 1..=v * len).collect()
            }
        })
        .collect();
    let mut shrinks = vec![0; n + 1];
    let mut image = vec![0; n + 1];
    let mut placements = Vec::with_capacity(n);
    let blue_in =
        |x: usize, set: &[usize]| set.iter().filter(|&&y| host.color(x, y) == BLUE).count();

    for &w in &deg.order {
        let mut later: Vec<usize> = adj[w]
            .iter()
            .copied()
            .filter(|&u| rank[u] > rank[w])
            .collect();
        later.sort_by_key(|&u| rank[u]);
        let mut alive = vec![true; cand[w].len()];
        for &u in &later {
            let threshold = cand[u].len() / t;
            let bad: Vec<usize> = (0..cand[w].len())
                .filter(|&i| blue_in(cand[w][i], &cand[u]) < threshold)
                .collect();
            if bad.len() >= t {
                let side: Vec<usize> = bad[..t].iter().map(|&i| cand[w][i]).collect();
                let other: Vec<usize> = cand[u]
                    .iter()
                    .copied()
                    .filter(|&y| side.iter().all(|&x| host.color(x, y) == RED))
                    .take(t)
                    .collect();
                assert_eq!(other.len(), t, "trimmed side keeps t vertices");
                let (left, right) = if w < u { (side, other) } else { (other, side) };
                return Ok(EmbedReport {
                    outcome: EmbedOutcome::RedBiclique(BicliqueWitness { left, right }),
                    t,
                    interval: len,
                    placements,
                });
            }
            for i in bad {
                alive[i] = false;
            }
        }
        let survivors = alive.iter().filter(|&&a| a).count();
        let placement = Placement {
            vertex: w,
            candidates: cand[w].len(),
            survivors,
            shrinks: shrinks[w],
        };
        placements.push(placement);
        debug_assert!(placement.meets_ledger(big_n, n, t, k));
        let Some(first) = alive.iter().position(|&a| a) else {
            return Err(Error::Precondition(format!(
                "no candidate survives for pattern vertex {w}"
            )));
        };
        let h = cand[w][first];
        image[w] = h;
        for &u in &later {
            cand[u].retain(|&y| host.color(h, y) == BLUE);
            shrinks[u] += 1;
        }
    }
    Ok(EmbedReport {
        outcome: EmbedOutcome::BlueEmbedding(Embedding::new(image[1..].to_vec())),
        t,
        interval: len,
        placements,
    })
}
