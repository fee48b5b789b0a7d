use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::CertifiedColoring;
use crate::coloring::EdgeColoring;
use crate::containment::{avoids, Avoidance, Demand};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::scheme::{build_scheme, SchemeSpec};

/// Largest host the construction will materialize.
const MAX_HOST: usize = 4096;
/// Largest matching the construction will materialize.
const MAX_PATTERN: usize = 1 << 20;

/// The two-coloring of `K_5` whose color classes are both pentagons.
pub fn pentagon() -> EdgeColoring {
    EdgeColoring::from_fn(5, 2, |i, j| if matches!(j - i, 1 | 4) { 1 } else { 2 })
        .expect("two colors")
}

/// Sizes of one level of the matching recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingParams {
    pub r: usize,
    /// Vertex count of the base coloring.
    pub base: usize,
    /// Vertex count of the building block.
    pub t: usize,
    pub k: usize,
    /// Vertex count of the matching.
    pub n_k: usize,
    /// Vertex count of the host coloring.
    pub big_n_k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingConstruction {
    pub matching: OrderedGraph,
    pub coloring: CertifiedColoring,
    pub params: MatchingParams,
}

/// Builds the level-`k` matching and a coloring of `K_{R^k}` avoiding it in
/// both colors, from a base two-coloring of `K_R` with no monochromatic `K_r`.
///
/// The base is checked, not trusted.
pub fn matching_construction(
    r: usize,
    k: usize,
    base: &EdgeColoring,
) -> Result<MatchingConstruction> {
    if r < 3 {
        return Err(Error::invalid("r", "need r >= 3"));
    }
    if k < 1 {
        return Err(Error::invalid("k", "need k >= 1"));
    }
    if base.colors() != 2 {
        return Err(Error::invalid("base", "base coloring must use two colors"));
    }
    let clique = build_scheme(&SchemeSpec::Complete(r))?;
    let check = avoids(
        base,
        &[Demand::new(clique.clone(), 1), Demand::new(clique, 2)],
    )?;
    if let Avoidance::Violation { embedding, .. } = check {
        return Err(Error::Precondition(format!(
            "base coloring has a monochromatic K_{r} on {:?}",
            embedding.images()
        )));
    }
    let big_r = base.n();
    let big_n_k = u32::try_from(k)
        .ok()
        .and_then(|e| big_r.checked_pow(e))
        .filter(|&n| n <= MAX_HOST)
        .ok_or_else(|| Error::Envelope(format!("host R^k exceeds {MAX_HOST} vertices")))?;

    let block = block_matching(r, big_r);
    let t = block.n();
    let mut matching = block.clone();
    for _ in 1..k {
        let n_next = (r - 1) * matching.n() + t;
        if n_next > MAX_PATTERN {
            return Err(Error::Envelope(format!(
                "matching exceeds {MAX_PATTERN} vertices"
            )));
        }
        matching = step_matching(r, big_r, &block, &matching)?;
    }

    let mut coloring = base.clone();
    for _ in 1..k {
        coloring = step_coloring(base, &coloring)?;
    }
    debug_assert_eq!(coloring.n(), big_n_k);

    let params = MatchingParams {
        r,
        base: big_r,
        t,
        k,
        n_k: matching.n(),
        big_n_k,
    };
    let avoided = vec![
        Demand::new(matching.clone(), 1),
        Demand::new(matching.clone(), 2),
    ];
    Ok(MatchingConstruction {
        matching,
        coloring: CertifiedColoring {
            coloring,
            avoided,
            provenance: format!("matching({r},{k},R={big_r})"),
        },
        params,
    })
}

/// The building block on `r(r-1)R` vertices: `r` blocks of `(r-1)R`
/// vertices, with `R` shifted copies of a split `K_r` between them.
fn block_matching(r: usize, big_r: usize) -> OrderedGraph {
    let span = r * big_r;
    // raw vertices 1..=r*span; the isolated ones are l_i + i + a r
    let isolated = |v: usize| {
        let i = (v - 1) / span + 1;
        let local = v - (i - 1) * span;
        local % r == i % r
    };
    let mut label = vec![0usize; r * span + 1];
    let mut next = 0;
    for v in 1..=r * span {
        if !isolated(v) {
            next += 1;
            label[v] = next;
        }
    }
    let mut edges = Vec::with_capacity(r * (r - 1) / 2 * big_r);
    for i in 1..=r {
        for j in i + 1..=r {
            for a in 0..big_r {
                let x = (i - 1) * span + j + a * r;
                let y = (j - 1) * span + i + a * r;
                edges.push((label[x], label[y]));
            }
        }
    }
    OrderedGraph::new(next, edges).expect("block matching is well formed")
}

/// Interleaves the `r` blocks of the building block with `r - 1` copies of
/// the previous level: `J_1 L_1 J_2 .. L_{r-1} J_r`.
fn step_matching(
    r: usize,
    big_r: usize,
    block: &OrderedGraph,
    prev: &OrderedGraph,
) -> Result<OrderedGraph> {
    let chunk = (r - 1) * big_r;
    let m = prev.n();
    // position of building-block vertex v in the new layout
    let place_block = |v: usize| {
        let idx = (v - 1) / chunk;
        v + idx * m
    };
    let mut edges: Vec<(usize, usize)> = block
        .edges()
        .iter()
        .map(|&(x, y)| (place_block(x), place_block(y)))
        .collect();
    for copy in 0..r - 1 {
        let offset = (copy + 1) * chunk + copy * m;
        edges.extend(prev.edges().iter().map(|&(x, y)| (x + offset, y + offset)));
    }
    OrderedGraph::new((r - 1) * m + block.n(), edges)
}

/// `R` consecutive copies of `prev`, cross pairs colored by `base` on block
/// indices.
fn step_coloring(base: &EdgeColoring, prev: &EdgeColoring) -> Result<EdgeColoring> {
    let size = prev.n();
    EdgeColoring::from_fn(base.n() * size, 2, |a, b| {
        let (ba, bb) = ((a - 1) / size, (b - 1) / size);
        if ba == bb {
            prev.color(a - ba * size, b - bb * size)
        } else {
            base.color(ba + 1, bb + 1)
        }
    })
}

/// Parameters of the asymptotic matching lower bound for one `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchingLbParams {
    /// `log2(R) / r`.
    pub c: f64,
    /// `floor(log_r R) - 2`, when at least 1.
    pub k: Option<u32>,
    pub n: Option<BigUint>,
    pub big_n: Option<BigUint>,
    /// `log2 N - log2(n)^2 / (5 log2 log2 n)`, when applicable.
    pub margin: Option<f64>,
    pub inequality_holds: bool,
}

impl MatchingLbParams {
    pub fn applicable(&self) -> bool {
        self.k.is_some()
    }
}

/// Evaluates the sizes `n = n_k`, `N = R^k` and the inequality
/// `log2 N > log2(n)^2 / (5 log2 log2 n)` for the level `k = floor(log_r R) - 2`.
pub fn matching_lb_params(r: usize, big_r: &BigUint) -> Result<MatchingLbParams> {
    if r < 3 {
        return Err(Error::invalid("r", "need r >= 3"));
    }
    if *big_r < BigUint::from(2u32) {
        return Err(Error::invalid("R", "need R >= 2"));
    }
    let c = log2_big(big_r) / r as f64;
    let rb = BigUint::from(r);
    // largest e with r^e <= R
    let mut e = 0u32;
    let mut power = BigUint::one();
    while &power * &rb <= *big_r {
        power *= &rb;
        e += 1;
    }
    let not_applicable = MatchingLbParams {
        c,
        k: None,
        n: None,
        big_n: None,
        margin: None,
        inequality_holds: false,
    };
    if e < 3 {
        return Ok(not_applicable);
    }
    let k = e - 2;
    let t = BigUint::from(r * (r - 1)) * big_r;
    // n_k = t (1 + (r-1) + .. + (r-1)^(k-1))
    let mut geometric = BigUint::zero();
    let mut term = BigUint::one();
    for _ in 0..k {
        geometric += &term;
        term *= BigUint::from(r - 1);
    }
    let n = t * geometric;
    let big_n = big_r.pow(k);
    let log_n = log2_big(&n);
    let margin = log2_big(&big_n) - log_n * log_n / (5.0 * log_n.log2());
    Ok(MatchingLbParams {
        c,
        k: Some(k),
        n: Some(n),
        big_n: Some(big_n),
        margin: Some(margin),
        inequality_holds: margin > 0.0,
    })
}

/// `log2` of a positive big integer, accurate to double precision.
pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("small value").log2();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().expect("53-bit value");
    top.log2() + shift as f64
}
