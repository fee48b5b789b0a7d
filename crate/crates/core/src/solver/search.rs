//! Search for colorings that avoid a set of demands.
//!
//! Two engines: clause learning over copy clauses (see `clauses`), and the
//! branch-and-prune below, used when the clause set would be too large or
//! when asked for explicitly.
//!
//! Pairs are colored in the order `(1,2), (1,3), (2,3), (1,4), ..`, so every
//! prefix is a complete coloring of the first few vertices plus some pairs
//! ending at the next vertex. After coloring `(u, v)` only copies that use
//! this pair can be new, and those map the last non-isolated pattern vertex
//! to `v` and one of its left neighbors to `u`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use super::clauses::{literal_count, run_clauses, MAX_LITERALS};
use crate::coloring::{Color, EdgeColoring};
use crate::containment::{avoids, Demand};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Largest host the search handles (one machine word per adjacency row).
pub const MAX_VERTICES: usize = 64;

/// Limits for one search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Worker threads for the branch engine; 1 gives a deterministic search.
    pub threads: usize,
    pub engine: Engine,
    /// Largest `N` that [`super::ramsey_number`] tries.
    pub max_n: Option<usize>,
}

/// Which search runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// Clause learning when the clause set fits, else branch-and-prune.
    #[default]
    Auto,
    Clauses,
    Branch,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: None,
            max_time: None,
            threads: 1,
            engine: Engine::Auto,
            max_n: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            ..Budget::default()
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.max_time = Some(limit);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = Some(max_n);
        self
    }

    pub fn with_engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    NoneExists,
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

/// Searches for a coloring of `K_n` that avoids every demand, with the
/// palette `1..=c` where `c` is the largest demanded color.
pub fn exists_avoiding(demands: &[Demand], n: usize, budget: &Budget) -> Result<SearchReport> {
    let colors = demands.iter().map(|d| d.color).max().unwrap_or(0);
    exists_avoiding_in(demands, colors, n, budget)
}

/// Like [`exists_avoiding`] with an explicit palette size.
pub fn exists_avoiding_in(
    demands: &[Demand],
    colors: usize,
    n: usize,
    budget: &Budget,
) -> Result<SearchReport> {
    let start = Instant::now();
    let problem = Problem::compile(demands, colors, n)?;
    let clauses = || run_clauses(demands, problem.colors, n, problem.symmetric, budget, start);
    let outcome = match problem.shortcut() {
        Some(outcome) => (outcome, 0),
        None => match budget.engine {
            Engine::Clauses => clauses().ok_or_else(|| {
                Error::Envelope(format!("copy clauses exceed {MAX_LITERALS} literals"))
            })?,
            Engine::Auto if literal_count(demands, n) <= MAX_LITERALS => {
                clauses().expect("within the literal limit")
            }
            _ if budget.threads > 1 => problem.run_parallel(budget, start),
            _ => problem.run_serial(budget, start),
        },
    };
    let (outcome, nodes) = outcome;
    if let SearchOutcome::Found(coloring) = &outcome {
        let check = avoids(coloring, demands)?;
        assert!(
            check.is_avoiding(),
            "search returned a non-avoiding coloring"
        );
    }
    Ok(SearchReport {
        outcome,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

/// A demand prepared for anchored checks.
#[derive(Clone, Debug)]
enum Check {
    /// Monotone path on this many vertices.
    Path(usize),
    Anchored(Anchored),
}

#[derive(Clone, Debug)]
struct Anchored {
    /// Last non-isolated pattern vertex, 0-based.
    last: usize,
    /// Isolated pattern vertices after `last`.
    trailing: usize,
    /// Left neighbors of each pattern vertex up to `last`, 0-based.
    left: Vec<Vec<usize>>,
    /// Pattern vertices adjacent to `last`, as a bitmask.
    last_left: u64,
}

#[derive(Clone, Debug)]
struct Problem {
    n: usize,
    colors: usize,
    /// Checks per color, index `color - 1`.
    checks: Vec<Vec<Check>>,
    /// Some edgeless pattern fits, so every coloring contains it.
    hopeless: bool,
    /// Colors are interchangeable.
    symmetric: bool,
    edges: Vec<(usize, usize)>,
}

impl Problem {
    fn compile(demands: &[Demand], colors: usize, n: usize) -> Result<Problem> {
        if demands.is_empty() {
            return Err(Error::invalid("demands", "need at least one demand"));
        }
        if n == 0 {
            return Err(Error::invalid("n", "need n >= 1"));
        }
        if n > MAX_VERTICES {
            return Err(Error::Envelope(format!(
                "search handles at most {MAX_VERTICES} vertices"
            )));
        }
        if colors == 0 || colors > u8::MAX as usize {
            return Err(Error::invalid("colors", "need 1..=255 colors"));
        }
        for d in demands {
            if d.color == 0 || d.color > colors {
                return Err(Error::ColorOutOfRange {
                    color: d.color,
                    colors,
                });
            }
            if d.pattern.n() == 0 {
                return Err(Error::invalid("demands", "patterns must be nonempty"));
            }
        }
        let mut checks = vec![Vec::new(); colors];
        let mut hopeless = false;
        for d in demands {
            let p = &d.pattern;
            if p.n() > n {
                continue;
            }
            if p.edge_count() == 0 {
                hopeless = true;
                continue;
            }
            checks[d.color - 1].push(compile_pattern(p));
        }
        let symmetric = colors > 1 && {
            let mut per_color: Vec<Vec<&[(usize, usize)]>> = vec![Vec::new(); colors];
            let mut sizes: Vec<Vec<usize>> = vec![Vec::new(); colors];
            for d in demands {
                per_color[d.color - 1].push(d.pattern.edges());
                sizes[d.color - 1].push(d.pattern.n());
            }
            let mut keys: Vec<Vec<(usize, &[(usize, usize)])>> = (0..colors)
                .map(|c| {
                    let mut k: Vec<_> = sizes[c]
                        .iter()
                        .copied()
                        .zip(per_color[c].iter().copied())
                        .collect();
                    k.sort();
                    k
                })
                .collect();
            let first = keys.remove(0);
            keys.iter().all(|k| *k == first)
        };
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for v in 1..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Ok(Problem {
            n,
            colors,
            checks,
            hopeless,
            symmetric,
            edges,
        })
    }

    /// Outcomes decided without search.
    fn shortcut(&self) -> Option<SearchOutcome> {
        if self.hopeless {
            return Some(SearchOutcome::NoneExists);
        }
        let free = self.checks.iter().position(|c| c.is_empty())?;
        Some(SearchOutcome::Found(
            EdgeColoring::uniform(self.n, self.colors, free + 1).expect("valid palette"),
        ))
    }

    fn run_serial(&self, budget: &Budget, start: Instant) -> (SearchOutcome, u64) {
        let stop = AtomicBool::new(false);
        let shared = AtomicU64::new(0);
        let mut s = Search::new(self, budget, start, &stop, &shared);
        let flow = s.dfs(0);
        let nodes = s.flush();
        (self.finish(flow, &s), nodes)
    }

    fn finish(&self, flow: Flow, s: &Search<'_>) -> SearchOutcome {
        match flow {
            Flow::Found => SearchOutcome::Found(s.coloring()),
            Flow::Exhausted => SearchOutcome::NoneExists,
            Flow::Abort => SearchOutcome::BudgetExhausted,
        }
    }

    /// Splits the tree at a fixed depth and hands the subtrees to workers.
    fn run_parallel(&self, budget: &Budget, start: Instant) -> (SearchOutcome, u64) {
        let stop = AtomicBool::new(false);
        let shared = AtomicU64::new(0);
        let target = budget.threads * 8;
        let mut depth = 0;
        let mut prefixes = vec![Vec::new()];
        {
            let mut s = Search::new(self, budget, start, &stop, &shared);
            while prefixes.len() < target && depth < self.edges.len() {
                depth += 1;
                let mut next = Vec::new();
                s.collect_prefixes(0, depth, &mut Vec::new(), &mut next);
                prefixes = next;
                if prefixes.is_empty() {
                    break;
                }
            }
            s.flush();
        }
        if prefixes.is_empty() {
            return (SearchOutcome::NoneExists, shared.load(Ordering::Relaxed));
        }
        if stop.load(Ordering::Relaxed) {
            return (
                SearchOutcome::BudgetExhausted,
                shared.load(Ordering::Relaxed),
            );
        }
        let cursor = AtomicUsize::new(0);
        let completed = AtomicUsize::new(0);
        let found: Mutex<Option<(usize, EdgeColoring)>> = Mutex::new(None);
        std::thread::scope(|scope| {
            for _ in 0..budget.threads {
                scope.spawn(|| {
                    let mut s = Search::new(self, budget, start, &stop, &shared);
                    while !stop.load(Ordering::Relaxed) {
                        let idx = cursor.fetch_add(1, Ordering::Relaxed);
                        let Some(prefix) = prefixes.get(idx) else {
                            break;
                        };
                        s.reset();
                        for (e, &col) in prefix.iter().enumerate() {
                            s.apply(e, col);
                        }
                        match s.dfs(prefix.len()) {
                            Flow::Found => {
                                let mut slot = found.lock().expect("unpoisoned");
                                if slot.as_ref().is_none_or(|(best, _)| idx < *best) {
                                    *slot = Some((idx, s.coloring()));
                                }
                                stop.store(true, Ordering::Relaxed);
                            }
                            Flow::Exhausted => {
                                completed.fetch_add(1, Ordering::Relaxed);
                            }
                            Flow::Abort => break,
                        }
                    }
                    s.flush();
                });
            }
        });
        let nodes = shared.load(Ordering::Relaxed);
        if let Some((_, coloring)) = found.into_inner().expect("unpoisoned") {
            (SearchOutcome::Found(coloring), nodes)
        } else if completed.load(Ordering::Relaxed) == prefixes.len() {
            (SearchOutcome::NoneExists, nodes)
        } else {
            (SearchOutcome::BudgetExhausted, nodes)
        }
    }
}

fn compile_pattern(p: &OrderedGraph) -> Check {
    let n = p.n();
    if p.edge_count() == n - 1 && (1..n).all(|i| p.has_edge(i, i + 1)) {
        return Check::Path(n);
    }
    let last = p
        .edges()
        .iter()
        .map(|&(_, j)| j)
        .max()
        .expect("pattern has an edge")
        - 1;
    let mut left = vec![Vec::new(); last + 1];
    for &(i, j) in p.edges() {
        left[j - 1].push(i - 1);
    }
    let last_left = left[last].iter().fold(0u64, |m, &i| m | 1 << i);
    Check::Anchored(Anchored {
        last,
        trailing: n - 1 - last,
        left,
        last_left,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct Search<'a> {
    problem: &'a Problem,
    /// Adjacency rows per color: `adj[(color - 1) * n + v]`.
    adj: Vec<u64>,
    /// Longest monotone path ending at each vertex, per color.
    ending: Vec<u32>,
    assign: Vec<u8>,
    max_used: usize,
    nodes: u64,
    unflushed: u64,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    stop: &'a AtomicBool,
    shared: &'a AtomicU64,
}

const FLUSH_EVERY: u64 = 4096;

impl<'a> Search<'a> {
    fn new(
        problem: &'a Problem,
        budget: &Budget,
        start: Instant,
        stop: &'a AtomicBool,
        shared: &'a AtomicU64,
    ) -> Self {
        let n = problem.n;
        Search {
            problem,
            adj: vec![0; problem.colors * n],
            ending: vec![1; problem.colors * n],
            assign: vec![0; problem.edges.len()],
            max_used: 0,
            nodes: 0,
            unflushed: 0,
            deadline: budget.max_time.map(|t| start + t),
            node_limit: budget.max_nodes,
            stop,
            shared,
        }
    }

    fn reset(&mut self) {
        self.adj.iter_mut().for_each(|x| *x = 0);
        self.ending.iter_mut().for_each(|x| *x = 1);
        self.assign.iter_mut().for_each(|x| *x = 0);
        self.max_used = 0;
    }

    fn flush(&mut self) -> u64 {
        self.shared.fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
        self.shared.load(Ordering::Relaxed)
    }

    /// Counts a node; false when the budget or a peer says stop.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= FLUSH_EVERY {
            let total = self.flush();
            if self.node_limit.is_some_and(|m| total >= m)
                || self.deadline.is_some_and(|d| Instant::now() >= d)
            {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        if let Some(limit) = self.node_limit {
            if self.nodes >= limit {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.stop.load(Ordering::Relaxed)
    }

    fn coloring(&self) -> EdgeColoring {
        let n = self.problem.n;
        let mut c = EdgeColoring::uniform(n, self.problem.colors, 1).expect("valid palette");
        for (e, &(u, v)) in self.problem.edges.iter().enumerate() {
            c.set(u + 1, v + 1, self.assign[e] as Color);
        }
        c
    }

    /// Records color `col` on edge `e`; returns the previous path length at `v`.
    fn apply(&mut self, e: usize, col: usize) -> u32 {
        let n = self.problem.n;
        let (u, v) = self.problem.edges[e];
        let base = (col - 1) * n;
        self.adj[base + u] |= 1 << v;
        self.adj[base + v] |= 1 << u;
        let old = self.ending[base + v];
        self.ending[base + v] = old.max(self.ending[base + u] + 1);
        self.assign[e] = col as u8;
        self.max_used = self.max_used.max(col);
        old
    }

    fn undo(&mut self, e: usize, col: usize, old: u32) {
        let n = self.problem.n;
        let (u, v) = self.problem.edges[e];
        let base = (col - 1) * n;
        self.adj[base + u] &= !(1 << v);
        self.adj[base + v] &= !(1 << u);
        self.ending[base + v] = old;
        self.assign[e] = 0;
    }

    fn palette_limit(&self) -> usize {
        if self.problem.symmetric {
            self.problem.colors.min(self.max_used + 1)
        } else {
            self.problem.colors
        }
    }

    fn dfs(&mut self, e: usize) -> Flow {
        if e == self.problem.edges.len() {
            return Flow::Found;
        }
        let limit = self.palette_limit();
        for col in 1..=limit {
            if !self.tick() {
                return Flow::Abort;
            }
            let prev_max = self.max_used;
            let old = self.apply(e, col);
            if !self.violated(e, col) {
                match self.dfs(e + 1) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            self.undo(e, col, old);
            self.max_used = prev_max;
        }
        Flow::Exhausted
    }

    /// Enumerates consistent assignments of the first `depth` edges.
    fn collect_prefixes(
        &mut self,
        e: usize,
        depth: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if e == depth {
            out.push(prefix.clone());
            return;
        }
        for col in 1..=self.palette_limit() {
            self.tick();
            let prev_max = self.max_used;
            let old = self.apply(e, col);
            if !self.violated(e, col) {
                prefix.push(col);
                self.collect_prefixes(e + 1, depth, prefix, out);
                prefix.pop();
            }
            self.undo(e, col, old);
            self.max_used = prev_max;
        }
    }

    /// Whether the pair just colored completes a forbidden copy.
    fn violated(&self, e: usize, col: usize) -> bool {
        let n = self.problem.n;
        let (u, v) = self.problem.edges[e];
        let base = (col - 1) * n;
        let rows = &self.adj[base..base + n];
        self.problem.checks[col - 1]
            .iter()
            .any(|check| match check {
                Check::Path(len) => self.ending[base + v] as usize >= *len,
                Check::Anchored(a) => anchored_hit(a, rows, n, u, v),
            })
    }
}

/// Whether some copy maps `a.last` to `v` and a neighbor of it to `u`.
fn anchored_hit(a: &Anchored, rows: &[u64], n: usize, u: usize, v: usize) -> bool {
    if n - 1 - v < a.trailing || v < a.last {
        return false;
    }
    let mut images = [0usize; MAX_VERTICES];
    let mut anchors = a.last_left;
    while anchors != 0 {
        let p = anchors.trailing_zeros() as usize;
        anchors &= anchors - 1;
        // p and the vertices between it and `last` must fit
        if p > u || a.last - 1 - p > v - 1 - u {
            continue;
        }
        if extend(a, rows, 0, p, u, v, &mut images) {
            return true;
        }
    }
    false
}

fn extend(
    a: &Anchored,
    rows: &[u64],
    p: usize,
    anchor: usize,
    u: usize,
    v: usize,
    images: &mut [usize; MAX_VERTICES],
) -> bool {
    if p == a.last {
        return true;
    }
    let lo = if p == 0 { 0 } else { images[p - 1] + 1 };
    let hi = if p < anchor {
        u - (anchor - p)
    } else if p == anchor {
        u
    } else {
        v - (a.last - p)
    };
    if lo > hi || (p > anchor && hi <= u) {
        return false;
    }
    let mut cand = if p == anchor {
        if lo > u {
            return false;
        }
        1u64 << u
    } else {
        let lo = if p > anchor { lo.max(u + 1) } else { lo };
        if lo > hi {
            return false;
        }
        span(lo, hi)
    };
    if a.last_left >> p & 1 == 1 {
        cand &= rows[v];
    }
    for &q in &a.left[p] {
        cand &= rows[images[q]];
    }
    while cand != 0 {
        let x = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        images[p] = x;
        if extend(a, rows, p + 1, anchor, u, v, images) {
            return true;
        }
    }
    false
}

/// Bits `lo..=hi`, `hi < 64`.
#[inline]
fn span(lo: usize, hi: usize) -> u64 {
    let upper = if hi == 63 {
        u64::MAX
    } else {
        (1u64 << (hi + 1)) - 1
    };
    upper & !((1u64 << lo) - 1)
}
