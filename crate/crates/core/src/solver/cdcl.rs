//! A small conflict-driven clause-learning search over boolean clauses.
//!
//! Two watched literals, first-UIP learning, activity-ordered decisions with
//! phase saving, Luby restarts and periodic removal of learned clauses with a
//! high literal-block distance.

use std::time::Instant;

/// Literal `2 * var + negated`.
pub(crate) type Lit = u32;

pub(crate) fn lit(var: usize, negated: bool) -> Lit {
    (var as u32) << 1 | negated as u32
}

fn var(l: Lit) -> usize {
    (l >> 1) as usize
}

const FALSE: u8 = 0;
const TRUE: u8 = 1;
const UNDEF: u8 = 2;
const NO_REASON: u32 = u32::MAX;

#[derive(Debug)]
pub(crate) enum SatResult {
    Sat(Vec<bool>),
    Unsat,
    Unknown,
}

pub(crate) struct Limits {
    pub max_steps: Option<u64>,
    pub deadline: Option<Instant>,
}

struct Clause {
    lits: Vec<Lit>,
    learnt: bool,
    lbd: u32,
    deleted: bool,
}

pub(crate) struct Solver {
    clauses: Vec<Clause>,
    watches: Vec<Vec<u32>>,
    assigns: Vec<u8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    heap: Heap,
    polarity: Vec<bool>,
    seen: Vec<bool>,
    unsat: bool,
    learnt_count: usize,
    pub steps: u64,
}

impl Solver {
    pub(crate) fn new(num_vars: usize) -> Self {
        Solver {
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * num_vars],
            assigns: vec![UNDEF; num_vars],
            level: vec![0; num_vars],
            reason: vec![NO_REASON; num_vars],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; num_vars],
            var_inc: 1.0,
            heap: Heap::new(num_vars),
            polarity: vec![true; num_vars],
            seen: vec![false; num_vars],
            unsat: false,
            learnt_count: 0,
            steps: 0,
        }
    }

    fn value(&self, l: Lit) -> u8 {
        let a = self.assigns[var(l)];
        if a == UNDEF {
            UNDEF
        } else {
            a ^ (l & 1) as u8
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    /// Adds an original clause; must be called before [`Solver::solve`].
    pub(crate) fn add_clause(&mut self, mut lits: Vec<Lit>) {
        if self.unsat {
            return;
        }
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] ^ 1 == w[1]) {
            return;
        }
        lits.retain(|&l| self.value(l) != FALSE);
        if lits.iter().any(|&l| self.value(l) == TRUE) {
            return;
        }
        match lits.len() {
            0 => self.unsat = true,
            1 => {
                self.enqueue(lits[0], NO_REASON);
                if self.propagate().is_some() {
                    self.unsat = true;
                }
            }
            _ => {
                self.attach(Clause {
                    lits,
                    learnt: false,
                    lbd: 0,
                    deleted: false,
                });
            }
        }
    }

    fn attach(&mut self, c: Clause) -> u32 {
        let idx = self.clauses.len() as u32;
        self.watches[c.lits[0] as usize].push(idx);
        self.watches[c.lits[1] as usize].push(idx);
        if c.learnt {
            self.learnt_count += 1;
        }
        self.clauses.push(c);
        idx
    }

    fn enqueue(&mut self, l: Lit, reason: u32) {
        let v = var(l);
        self.assigns[v] = TRUE ^ (l & 1) as u8;
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn propagate(&mut self) -> Option<u32> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = p ^ 1;
            let mut ws = std::mem::take(&mut self.watches[false_lit as usize]);
            let mut i = 0;
            let mut j = 0;
            let mut conflict = None;
            while i < ws.len() {
                let ci = ws[i];
                i += 1;
                let clause = &mut self.clauses[ci as usize];
                if clause.deleted {
                    continue;
                }
                let lits = &mut clause.lits;
                if lits[0] == false_lit {
                    lits.swap(0, 1);
                }
                let first = lits[0];
                let first_value = {
                    let a = self.assigns[var(first)];
                    if a == UNDEF {
                        UNDEF
                    } else {
                        a ^ (first & 1) as u8
                    }
                };
                if first_value == TRUE {
                    ws[j] = ci;
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..lits.len() {
                    let l = lits[k];
                    let a = self.assigns[var(l)];
                    if a == UNDEF || a ^ (l & 1) as u8 == TRUE {
                        lits.swap(1, k);
                        self.watches[lits[1] as usize].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = ci;
                j += 1;
                if first_value == FALSE {
                    conflict = Some(ci);
                    while i < ws.len() {
                        ws[j] = ws[i];
                        j += 1;
                        i += 1;
                    }
                } else {
                    self.enqueue(first, ci);
                }
            }
            ws.truncate(j);
            self.watches[false_lit as usize] = ws;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap.increased(v, &self.activity);
    }

    /// First-UIP learned clause and the level to return to.
    fn analyze(&mut self, mut confl: u32) -> (Vec<Lit>, u32) {
        let mut learnt: Vec<Lit> = vec![0];
        let mut path = 0;
        let mut p: Option<Lit> = None;
        let mut idx = self.trail.len();
        let current = self.decision_level();
        loop {
            let lits = self.clauses[confl as usize].lits.clone();
            let skip = usize::from(p.is_some());
            for &q in &lits[skip..] {
                let v = var(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump(v);
                    if self.level[v] >= current {
                        path += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[var(self.trail[idx])] {
                    break;
                }
            }
            let lit_p = self.trail[idx];
            p = Some(lit_p);
            self.seen[var(lit_p)] = false;
            path -= 1;
            if path == 0 {
                break;
            }
            confl = self.reason[var(lit_p)];
        }
        learnt[0] = p.expect("conflict at a positive level") ^ 1;
        for &l in &learnt[1..] {
            self.seen[var(l)] = false;
        }
        let mut back = 0;
        if learnt.len() > 1 {
            let mut best = 1;
            for k in 2..learnt.len() {
                if self.level[var(learnt[k])] > self.level[var(learnt[best])] {
                    best = k;
                }
            }
            learnt.swap(1, best);
            back = self.level[var(learnt[1])];
        }
        (learnt, back)
    }

    fn cancel_until(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let keep = self.trail_lim[level as usize];
        for k in (keep..self.trail.len()).rev() {
            let l = self.trail[k];
            let v = var(l);
            self.assigns[v] = UNDEF;
            self.reason[v] = NO_REASON;
            self.polarity[v] = l & 1 == 1;
            self.heap.insert(v, &self.activity);
        }
        self.trail.truncate(keep);
        self.trail_lim.truncate(level as usize);
        self.qhead = keep;
    }

    fn lbd(&mut self, lits: &[Lit]) -> u32 {
        let mut levels: Vec<u32> = lits.iter().map(|&l| self.level[var(l)]).collect();
        levels.sort_unstable();
        levels.dedup();
        levels.len() as u32
    }

    fn locked(&self, ci: usize) -> bool {
        let first = self.clauses[ci].lits[0];
        self.reason[var(first)] == ci as u32 && self.value(first) == TRUE
    }

    fn reduce_learnts(&mut self) {
        let mut candidates: Vec<usize> = (0..self.clauses.len())
            .filter(|&ci| {
                let c = &self.clauses[ci];
                c.learnt && !c.deleted && c.lbd > 2
            })
            .filter(|&ci| !self.locked(ci))
            .collect();
        candidates.sort_by_key(|&ci| std::cmp::Reverse(self.clauses[ci].lbd));
        for &ci in &candidates[..candidates.len() / 2] {
            let c = &mut self.clauses[ci];
            c.deleted = true;
            c.lits = Vec::new();
            self.learnt_count -= 1;
        }
        for w in &mut self.watches {
            w.clear();
        }
        for (ci, c) in self.clauses.iter().enumerate() {
            if !c.deleted {
                self.watches[c.lits[0] as usize].push(ci as u32);
                self.watches[c.lits[1] as usize].push(ci as u32);
            }
        }
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.heap.pop_max(&self.activity) {
            if self.assigns[v] == UNDEF {
                return Some(lit(v, self.polarity[v]));
            }
        }
        None
    }

    pub(crate) fn solve(&mut self, limits: &Limits) -> SatResult {
        if self.unsat || self.propagate().is_some() {
            return SatResult::Unsat;
        }
        for v in 0..self.assigns.len() {
            self.heap.insert(v, &self.activity);
        }
        let mut restart = 0u32;
        let mut budget = 100 * luby(restart);
        let mut since_restart = 0u64;
        let mut max_learnts = (self.clauses.len() / 3).max(5000);
        loop {
            self.steps += 1;
            if limits.max_steps.is_some_and(|m| self.steps > m)
                || (self.steps % 256 == 0 && limits.deadline.is_some_and(|d| Instant::now() >= d))
            {
                return SatResult::Unknown;
            }
            if let Some(confl) = self.propagate() {
                if self.decision_level() == 0 {
                    return SatResult::Unsat;
                }
                since_restart += 1;
                let (learnt, back) = self.analyze(confl);
                self.cancel_until(back);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let lbd = self.lbd(&learnt);
                    let first = learnt[0];
                    let ci = self.attach(Clause {
                        lits: learnt,
                        learnt: true,
                        lbd,
                        deleted: false,
                    });
                    self.enqueue(first, ci);
                }
                self.var_inc /= 0.95;
            } else {
                if since_restart >= budget {
                    restart += 1;
                    budget = 100 * luby(restart);
                    since_restart = 0;
                    self.cancel_until(0);
                    continue;
                }
                if self.learnt_count >= max_learnts + self.trail.len() {
                    self.reduce_learnts();
                    max_learnts += max_learnts / 10;
                }
                match self.pick_branch() {
                    None => {
                        return SatResult::Sat(self.assigns.iter().map(|&a| a == TRUE).collect())
                    }
                    Some(l) => {
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(l, NO_REASON);
                    }
                }
            }
        }
    }
}

/// The Luby restart sequence 1, 1, 2, 1, 1, 2, 4, ..
fn luby(i: u32) -> u64 {
    let mut size = 1u64;
    let mut seq = 0u32;
    while size < i as u64 + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    let mut x = i as u64;
    while size - 1 != x {
        size = (size - 1) >> 1;
        seq -= 1;
        x %= size;
    }
    1 << seq
}

/// Max-heap of variables keyed by activity.
struct Heap {
    items: Vec<usize>,
    index: Vec<usize>,
}

const ABSENT: usize = usize::MAX;

impl Heap {
    fn new(n: usize) -> Self {
        Heap {
            items: Vec::with_capacity(n),
            index: vec![ABSENT; n],
        }
    }

    fn insert(&mut self, v: usize, act: &[f64]) {
        if self.index[v] != ABSENT {
            return;
        }
        self.index[v] = self.items.len();
        self.items.push(v);
        self.up(self.items.len() - 1, act);
    }

    fn increased(&mut self, v: usize, act: &[f64]) {
        if self.index[v] != ABSENT {
            self.up(self.index[v], act);
        }
    }

    fn pop_max(&mut self, act: &[f64]) -> Option<usize> {
        let top = *self.items.first()?;
        let last = self.items.pop().expect("nonempty");
        self.index[top] = ABSENT;
        if !self.items.is_empty() {
            self.items[0] = last;
            self.index[last] = 0;
            self.down(0, act);
        }
        Some(top)
    }

    fn up(&mut self, mut i: usize, act: &[f64]) {
        let v = self.items[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            let pv = self.items[parent];
            if act[pv] >= act[v] {
                break;
            }
            self.items[i] = pv;
            self.index[pv] = i;
            i = parent;
        }
        self.items[i] = v;
        self.index[v] = i;
    }

    fn down(&mut self, mut i: usize, act: &[f64]) {
        let v = self.items[i];
        loop {
            let left = 2 * i + 1;
            if left >= self.items.len() {
                break;
            }
            let right = left + 1;
            let child =
                if right < self.items.len() && act[self.items[right]] > act[self.items[left]] {
                    right
                } else {
                    left
                };
            let cv = self.items[child];
            if act[cv] <= act[v] {
                break;
            }
            self.items[i] = cv;
            self.index[cv] = i;
            i = child;
        }
        self.items[i] = v;
        self.index[v] = i;
    }
}
