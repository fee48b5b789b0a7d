//! Closed-form values and bounds for ordered Ramsey numbers.
//!
//! Integer formulas use exact big-integer arithmetic; floors and ceilings of
//! square roots go through integer square roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Exact,
    Lower,
    Upper,
    Conjectured,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "exact",
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Conjectured => "conjectured",
        })
    }
}

/// Nonnegative integer or `+inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Finite(BigUint),
    Infinite,
}

impl ExtInt {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::Infinite => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.finite().and_then(|v| v.to_u64())
    }
}

impl From<u64> for ExtInt {
    fn from(v: u64) -> Self {
        ExtInt::Finite(BigUint::from(v))
    }
}

impl From<BigUint> for ExtInt {
    fn from(v: BigUint) -> Self {
        ExtInt::Finite(v)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
            (ExtInt::Finite(_), ExtInt::Infinite) => Ordering::Less,
            (ExtInt::Infinite, ExtInt::Finite(_)) => Ordering::Greater,
            (ExtInt::Infinite, ExtInt::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Infinite => f.write_str("inf"),
        }
    }
}

/// A value with what it is known to be.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub value: ExtInt,
    /// The unrounded value, for formulas that are not integral.
    pub real: Option<f64>,
    /// Formula the value comes from.
    pub source: String,
    /// Depends on a constant supplied by the caller.
    pub parameterized: bool,
}

impl BoundValue {
    fn new(kind: BoundKind, value: impl Into<ExtInt>, source: impl Into<String>) -> Self {
        BoundValue {
            kind,
            value: value.into(),
            real: None,
            source: source.into(),
            parameterized: false,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    /// Whether `v` is consistent with this bound.
    pub fn admits(&self, v: u64) -> bool {
        let v = ExtInt::from(v);
        match self.kind {
            BoundKind::Exact => self.value == v,
            BoundKind::Lower => self.value <= v,
            BoundKind::Upper => v <= self.value,
            BoundKind::Conjectured => true,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.value)?;
        if let Some(r) = self.real {
            write!(f, " (~{r:.4})")?;
        }
        write!(f, " [{}]", self.source)
    }
}

fn check_min(field: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        Err(Error::invalid(field, format!("need {field} >= {min}")))
    } else {
        Ok(())
    }
}

fn check_all(field: &'static str, values: &[u64], min: u64) -> Result<()> {
    if values.is_empty() {
        return Err(Error::invalid(field, "need at least one value"));
    }
    values.iter().try_for_each(|&v| check_min(field, v, min))
}

/// Smallest `s` with `s * s >= x`.
fn ceil_sqrt(x: &BigUint) -> BigUint {
    let s = x.sqrt();
    if &s * &s == *x {
        s
    } else {
        s + 1u32
    }
}

/// Monotone paths on `r_1, .., r_c` vertices: `1 + prod(r_i - 1)`.
pub fn monotone_paths_exact(r: &[u64]) -> Result<BoundValue> {
    check_all("r", r, 1)?;
    let product = r
        .iter()
        .fold(BigUint::one(), |acc, &x| acc * BigUint::from(x - 1));
    Ok(BoundValue::new(
        BoundKind::Exact,
        product + 1u32,
        "monotone paths: 1 + prod(r_i - 1)",
    ))
}

/// Stars with all leaves on one side, `r_i - 1` leaves in color `i`:
/// `2(1 - c) + sum r_i`.
pub fn stars_multicolor_exact(r: &[u64]) -> Result<BoundValue> {
    check_all("r", r, 1)?;
    if r.contains(&1) {
        // a single vertex is always present
        return Ok(BoundValue::new(
            BoundKind::Exact,
            1u64,
            "one-sided stars: a single-vertex star",
        ));
    }
    let sum: u64 = r.iter().sum();
    let c = r.len() as u64;
    Ok(BoundValue::new(
        BoundKind::Exact,
        sum + 2 - 2 * c,
        "one-sided stars: 2(1 - c) + sum r_i",
    ))
}

/// Leaf counts of an ordered star: `left` leaves before the center and
/// `right` after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Leaves {
    left: u64,
    right: u64,
}

impl Leaves {
    fn mirror(self) -> Self {
        Leaves {
            left: self.right,
            right: self.left,
        }
    }
}

/// `floor((-1 + sqrt(1 + 8ab)) / 2)`.
fn star_root(a: u64, b: u64) -> BigUint {
    let x = BigUint::from(1u32) + BigUint::from(8u32) * BigUint::from(a) * BigUint::from(b);
    // x >= 1, so isqrt(x) >= 1
    (x.sqrt() - 1u32) / 2u32
}

/// Two stars with `x` and `y` leaves on opposite sides.
fn opposite_one_sided(x: u64, y: u64) -> BigUint {
    star_root(x - 1, y - 1) + BigUint::from(x + y)
}

fn star_pair(a: Leaves, b: Leaves) -> BigUint {
    let total = |s: Leaves| s.left + s.right;
    if total(a) == 0 || total(b) == 0 {
        return BigUint::one();
    }
    let one_sided = |s: Leaves| s.left == 0 || s.right == 0;
    match (one_sided(a), one_sided(b)) {
        (true, true) => {
            let same_side = (a.left > 0) == (b.left > 0);
            if same_side {
                BigUint::from(total(a) + total(b))
            } else {
                opposite_one_sided(total(a), total(b))
            }
        }
        (true, false) => {
            // normalize so that the one-sided star has its leaves on the left
            let (a, b) = if a.left > 0 {
                (a, b)
            } else {
                (a.mirror(), b.mirror())
            };
            opposite_one_sided(a.left, b.right) + BigUint::from(a.left + b.left) - 1u32
        }
        (false, true) => star_pair(b, a),
        (false, false) => {
            let right_part = Leaves {
                left: 0,
                right: a.right,
            };
            let left_part = Leaves {
                left: a.left,
                right: 0,
            };
            star_pair(right_part, b) + star_pair(left_part, b) - 1u32
        }
    }
}

/// Exact value for a pair of ordered stars `S_{r1,s1}` and `S_{r2,s2}`,
/// where `S_{r,s}` has `r - 1` leaves right of the center and `s - 1` left.
pub fn stars_pair_exact(r1: u64, s1: u64, r2: u64, s2: u64) -> Result<BoundValue> {
    for (field, v) in [("r1", r1), ("s1", s1), ("r2", r2), ("s2", s2)] {
        check_min(field, v, 1)?;
    }
    let a = Leaves {
        left: s1 - 1,
        right: r1 - 1,
    };
    let b = Leaves {
        left: s2 - 1,
        right: r2 - 1,
    };
    Ok(BoundValue::new(
        BoundKind::Exact,
        star_pair(a, b),
        "star pairs: floor((-1 + sqrt(1 + 8(r1-2)(r2-2)))/2) + r1 + r2 - 2 with the reduction rules",
    ))
}

/// Monotone cycles on `r` (color 1) and `s` (color 2) vertices:
/// `2rs - 3r - 3s + 6`. A 2-cycle is a single edge.
pub fn monotone_cycles_exact(r: u64, s: u64) -> Result<BoundValue> {
    check_min("r", r, 2)?;
    check_min("s", s, 2)?;
    Ok(BoundValue::new(
        BoundKind::Exact,
        2 * r * s + 6 - 3 * r - 3 * s,
        "monotone cycles: 2rs - 3r - 3s + 6",
    ))
}

/// Geometric and convex Ramsey number of the `n`-cycle: `2(n-2)(n-1) + 2`.
pub fn geometric_cycle_exact(n: u64) -> Result<BoundValue> {
    check_min("n", n, 3)?;
    Ok(BoundValue::new(
        BoundKind::Exact,
        2 * (n - 2) * (n - 1) + 2,
        "geometric cycles: 2(n-2)(n-1) + 2",
    ))
}

/// Monotone path on `r` vertices against a clique on `s`: `(r-1)(s-1) + 1`.
pub fn path_vs_clique_exact(r: u64, s: u64) -> Result<BoundValue> {
    check_min("r", r, 1)?;
    check_min("s", s, 1)?;
    Ok(BoundValue::new(
        BoundKind::Exact,
        (r - 1) * (s - 1) + 1,
        "path vs clique: (r-1)(s-1) + 1",
    ))
}

/// Bounds for the alternating path on `n` vertices in two colors.
#[derive(Clone, Debug, PartialEq)]
pub struct AltPathBounds {
    pub lower: BoundValue,
    /// `ceil((4n - 3 + sqrt(8n^2 - 8n - 7)) / 2)`.
    pub upper: BoundValue,
    /// `floor((4n - 5 + sqrt(8n^2 - 8n - 7)) / 2) + 1`, the sharper form the
    /// counting argument actually yields.
    pub upper_sharp: BoundValue,
    /// `floor((n - 2)(1 + sqrt 5) / 2) + n`.
    pub conjectured: BoundValue,
}

pub fn alt_path_bounds(n: u64) -> Result<AltPathBounds> {
    check_min("n", n, 2)?;
    let disc = BigUint::from(8 * n * n - 8 * n - 7);
    let upper = (BigUint::from(4 * n - 3) + ceil_sqrt(&disc) + 1u32) / 2u32;
    let upper_sharp = (BigUint::from(4 * n - 5) + disc.sqrt()) / 2u32 + 1u32;
    let m = n - 2;
    let golden = (BigUint::from(m) + BigUint::from(5 * m * m).sqrt()) / 2u32 + n;
    let real_upper = (4.0 * n as f64 - 3.0 + ((8 * n * n - 8 * n - 7) as f64).sqrt()) / 2.0;
    Ok(AltPathBounds {
        lower: BoundValue::new(BoundKind::Lower, 2 * n - 2, "alternating path: 2n - 2"),
        upper: BoundValue {
            real: Some(real_upper),
            ..BoundValue::new(
                BoundKind::Upper,
                upper,
                "alternating path: (4n - 3 + sqrt(8n^2 - 8n - 7))/2",
            )
        },
        upper_sharp: BoundValue::new(
            BoundKind::Upper,
            upper_sharp,
            "alternating path: floor((4n - 5 + sqrt(8n^2 - 8n - 7))/2) + 1",
        ),
        conjectured: BoundValue::new(
            BoundKind::Conjectured,
            golden,
            "alternating path: floor((n - 2) phi) + n",
        ),
    })
}

/// Random-coloring lower bound for a graph with `n` vertices and `m` edges
/// in `c` colors: `(2 pi n)^(1/n) (n/e) c^((m-1)/n)`, rounded up.
pub fn probabilistic_lower(n: u64, m: u64, c: u64) -> Result<BoundValue> {
    check_min("n", n, 1)?;
    check_min("m", m, 1)?;
    check_min("c", c, 2)?;
    let nf = n as f64;
    let log_value = (2.0 * std::f64::consts::PI * nf).ln() / nf
        + (nf / std::f64::consts::E).ln()
        + (m - 1) as f64 / nf * (c as f64).ln();
    let value = log_value.exp();
    if !value.is_finite() || value > 1e300 {
        return Err(Error::Envelope("probabilistic bound overflows".into()));
    }
    let rounded = value.ceil();
    let finite = if rounded < 2f64.powi(63) {
        BigUint::from(rounded as u64)
    } else {
        float_to_big(rounded)
    };
    Ok(BoundValue {
        real: Some(value),
        ..BoundValue::new(
            BoundKind::Lower,
            finite,
            "random coloring: (2 pi n)^(1/n) (n/e) c^((m-1)/n)",
        )
    })
}

/// The union bound before any approximation: the largest `N` with
/// `C(N, n) < c^(m-1)` has an avoiding coloring, so `R >= N + 1`.
pub fn union_bound_lower(n: u64, m: u64, c: u64) -> Result<BoundValue> {
    check_min("n", n, 1)?;
    check_min("m", m, 1)?;
    check_min("c", c, 2)?;
    let exp = u32::try_from(m - 1).map_err(|_| Error::invalid("m", "too many edges"))?;
    if (m - 1) * 64 - (c.leading_zeros() as u64) * (m - 1) > MAX_EXPONENT {
        return Err(Error::Envelope("union bound too large".into()));
    }
    let target = BigUint::from(c).pow(exp);
    let below = |big_n: &BigUint| binomial(big_n.clone(), BigUint::from(n)) < target;
    // C(N, n) is increasing in N >= n, and zero below n
    let mut lo = BigUint::from(n.saturating_sub(1));
    if below(&BigUint::from(n)) {
        let mut hi = BigUint::from(n.max(1));
        while below(&hi) {
            lo = hi.clone();
            hi <<= 1;
        }
        while &hi - &lo > BigUint::one() {
            let mid = (&lo + &hi) >> 1;
            if below(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    Ok(BoundValue::new(
        BoundKind::Lower,
        lo + 1u32,
        "union bound: 1 + max N with C(N, n) < c^(m-1)",
    ))
}

fn float_to_big(x: f64) -> BigUint {
    let bits = x.to_bits();
    let exponent = ((bits >> 52) & 0x7ff) as i64 - 1075;
    let mantissa = (bits & ((1 << 52) - 1)) | (1 << 52);
    if exponent >= 0 {
        BigUint::from(mantissa) << exponent as u64
    } else {
        BigUint::from(mantissa >> (-exponent) as u64)
    }
}

/// Blow-up lower bound `(d-1)^(c-1) (r-1) + 1`.
pub fn star_blowup_lower(d: u64, c: u64, r: u64) -> Result<BoundValue> {
    check_min("d", d, 3)?;
    check_min("c", c, 1)?;
    check_min("r", r, 2)?;
    let exp = u32::try_from(c - 1).map_err(|_| Error::invalid("c", "too many colors"))?;
    let value = BigUint::from(d - 1).pow(exp) * BigUint::from(r - 1) + 1u32;
    Ok(BoundValue::new(
        BoundKind::Lower,
        value,
        "recursive blow-up: (d-1)^(c-1) (r-1) + 1",
    ))
}

/// Smallest `e >= 0` with `q^e >= x (q-1)^e`, i.e. `ceil(log_{q/(q-1)} x)`.
pub fn ceil_log_ratio(q: u64, x: u64) -> Result<u64> {
    check_min("q", q, 2)?;
    check_min("x", x, 1)?;
    let (qb, pb, xb) = (BigUint::from(q), BigUint::from(q - 1), BigUint::from(x));
    let mut e = 0;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    while num < &xb * &den {
        num *= &qb;
        den *= &pb;
        e += 1;
    }
    Ok(e)
}

/// Largest power-of-two exponent the decomposable bounds will materialize.
const MAX_EXPONENT: u64 = 1 << 24;

/// `C_k 2^(64k (ceil(log_{q/(q-1)} r) + ceil(log_{q/(q-1)} s)))` for
/// `(k, q)`-decomposable graphs on `r` and `s` vertices.
pub fn decomposable_upper(k: u64, q: u64, r: u64, s: u64, c_k: &BigUint) -> Result<BoundValue> {
    check_min("k", k, 1)?;
    check_min("q", q, 2)?;
    check_min("r", r, 1)?;
    check_min("s", s, 1)?;
    if c_k.is_zero() {
        return Err(Error::invalid("c_k", "need C_k > 0"));
    }
    let exponent = 64 * k * (ceil_log_ratio(q, r)? + ceil_log_ratio(q, s)?);
    power_bound(
        exponent,
        c_k,
        "decomposable: C_k 2^(64k(ceil(log_{q/(q-1)} r) + ceil(log_{q/(q-1)} s)))",
    )
}

/// `C_k 2^(256k ceil(log2 n))` for graphs with bandwidth at most `k`.
pub fn bandwidth_upper(k: u64, n: u64, c_k: &BigUint) -> Result<BoundValue> {
    check_min("k", k, 1)?;
    check_min("n", n, 1)?;
    if c_k.is_zero() {
        return Err(Error::invalid("c_k", "need C_k > 0"));
    }
    let log = ceil_log_ratio(2, n)?;
    power_bound(256 * k * log, c_k, "bandwidth: C_k 2^(256k ceil(log2 n))")
}

fn power_bound(exponent: u64, c_k: &BigUint, source: &str) -> Result<BoundValue> {
    if exponent > MAX_EXPONENT {
        return Err(Error::Envelope(format!(
            "exponent {exponent} exceeds {MAX_EXPONENT}"
        )));
    }
    Ok(BoundValue {
        parameterized: true,
        ..BoundValue::new(BoundKind::Upper, c_k << exponent, source)
    })
}

/// `n^((1 + 2/k)(k+1)^ceil(log2 p) - 2/k)` for `k`-degenerate graphs on `n`
/// vertices with interval chromatic number `p`.
pub fn degenerate_upper(k: u64, p: u64, n: u64) -> Result<BoundValue> {
    check_min("k", k, 1)?;
    check_min("p", p, 1)?;
    check_min("n", n, 1)?;
    let exponent = degenerate_exponent(k, p)?;
    let e = exponent
        .to_u32()
        .filter(|_| BigUint::from(n).bits() * exponent.to_u64().unwrap_or(u64::MAX) <= MAX_EXPONENT)
        .ok_or_else(|| Error::Envelope("degenerate bound too large".into()))?;
    Ok(BoundValue::new(
        BoundKind::Upper,
        BigUint::from(n).pow(e),
        "degenerate: n^((1 + 2/k)(k+1)^ceil(log2 p) - 2/k)",
    ))
}

/// The integer `((k+2)(k+1)^L - 2) / k`, `L = ceil(log2 p)`.
pub fn degenerate_exponent(k: u64, p: u64) -> Result<BigUint> {
    check_min("k", k, 1)?;
    check_min("p", p, 1)?;
    let l = ceil_log_ratio(2, p)?;
    let l = u32::try_from(l).map_err(|_| Error::Envelope("p too large".into()))?;
    let top = BigUint::from(k + 2) * BigUint::from(k + 1).pow(l) - 2u32;
    debug_assert!((&top % k).is_zero());
    Ok(top / k)
}

/// Number of `d`-dimensional `n x .. x n` arrays with entries in
/// `0..=max_entry`, weakly decreasing along every axis.
pub fn partition_count(d: u32, n: u64, max_entry: u64) -> Result<BigUint> {
    check_min("d", d as u64, 1)?;
    match d {
        1 => Ok(binomial(BigUint::from(n + max_entry), BigUint::from(n))),
        2 => plane_partitions(n, max_entry),
        _ => Err(Error::Envelope(format!(
            "partition counts are implemented for d <= 2, got d = {d}"
        ))),
    }
}

/// Row-by-row transfer over weakly decreasing rows: the next row must be
/// dominated entrywise by the previous one.
fn plane_partitions(n: u64, max_entry: u64) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::one());
    }
    let rows = line_partitions(n as usize, max_entry);
    if rows.len() > 20_000 {
        return Err(Error::Envelope(format!(
            "{} candidate rows exceed the enumeration envelope",
            rows.len()
        )));
    }
    let mut counts = vec![BigUint::one(); rows.len()];
    for _ in 1..n {
        let next: Vec<BigUint> = rows
            .iter()
            .map(|row| {
                rows.iter()
                    .zip(&counts)
                    .filter(|(prev, _)| prev.iter().zip(row).all(|(a, b)| a >= b))
                    .fold(BigUint::zero(), |acc, (_, c)| acc + c)
            })
            .collect();
        counts = next;
    }
    Ok(counts.into_iter().sum())
}

fn line_partitions(len: usize, max_entry: u64) -> Vec<Vec<u64>> {
    fn go(len: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            go(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_entry, &mut Vec::new(), &mut out);
    out
}

/// Monotone 3-uniform hyperpaths on `n` vertices in `c` colors:
/// `P_{c-1}(n-2) + 1`.
pub fn hyperpath_exact(n: u64, c: u64) -> Result<BoundValue> {
    check_min("n", n, 2)?;
    check_min("c", c, 2)?;
    let d = u32::try_from(c - 1).map_err(|_| Error::invalid("c", "too many colors"))?;
    let count = partition_count(d, n - 2, n - 2)?;
    Ok(BoundValue::new(
        BoundKind::Exact,
        count + 1u32,
        "monotone hyperpaths: P_{c-1}(n-2) + 1",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(b: BoundValue) -> u64 {
        b.to_u64().unwrap()
    }

    #[test]
    fn union_bound_small_cases() {
        assert_eq!(v(union_bound_lower(2, 1, 2).unwrap()), 2);
        assert_eq!(v(union_bound_lower(3, 3, 2).unwrap()), 4);
        // C(9,4) = 126 < 2^7 = 128 <= C(10,4)
        assert_eq!(v(union_bound_lower(4, 8, 2).unwrap()), 10);
        assert_eq!(v(union_bound_lower(1, 1, 3).unwrap()), 1);
        // the Stirling form overshoots for one edge
        assert_eq!(v(probabilistic_lower(2, 1, 2).unwrap()), 3);
    }

    #[test]
    fn monotone_paths() {
        assert_eq!(v(monotone_paths_exact(&[3, 3]).unwrap()), 5);
        assert_eq!(v(monotone_paths_exact(&[2, 7]).unwrap()), 7);
        assert_eq!(v(monotone_paths_exact(&[3, 3, 3]).unwrap()), 9);
        assert!(monotone_paths_exact(&[]).is_err());
    }

    #[test]
    fn stars() {
        assert_eq!(v(stars_multicolor_exact(&[2, 2]).unwrap()), 2);
        assert_eq!(v(stars_multicolor_exact(&[4, 4]).unwrap()), 6);
        assert_eq!(v(stars_multicolor_exact(&[1, 9]).unwrap()), 1);
        assert_eq!(v(stars_pair_exact(1, 3, 3, 1).unwrap()), 5);
        assert_eq!(v(stars_pair_exact(3, 1, 1, 3).unwrap()), 5);
        // a single edge against anything: the other star's vertex count
        assert_eq!(v(stars_pair_exact(2, 1, 3, 4).unwrap()), 6);
        assert_eq!(v(stars_pair_exact(1, 1, 5, 5).unwrap()), 1);
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(v(monotone_cycles_exact(3, 3).unwrap()), 6);
        assert_eq!(v(monotone_cycles_exact(4, 4).unwrap()), 14);
        assert_eq!(v(monotone_cycles_exact(2, 5).unwrap()), 5);
        assert_eq!(v(geometric_cycle_exact(3).unwrap()), 6);
        assert_eq!(v(path_vs_clique_exact(3, 3).unwrap()), 5);
        assert_eq!(v(path_vs_clique_exact(4, 3).unwrap()), 7);
        assert_eq!(v(path_vs_clique_exact(2, 6).unwrap()), 6);
    }

    #[test]
    fn alternating_path_values() {
        let b = alt_path_bounds(7).unwrap();
        assert_eq!(v(b.lower), 12);
        assert_eq!(v(b.conjectured), 15);
        assert_eq!(v(alt_path_bounds(8).unwrap().conjectured), 17);
        assert_eq!(v(alt_path_bounds(3).unwrap().lower), 4);
        let b = alt_path_bounds(4).unwrap();
        assert_eq!(v(b.upper), 12);
        assert_eq!(v(b.upper_sharp), 11);
    }

    #[test]
    fn probabilistic() {
        let b = probabilistic_lower(4, 6, 2).unwrap();
        assert_eq!(v(b.clone()), 8);
        assert!((b.real.unwrap() - 7.835).abs() < 0.01);
    }

    #[test]
    fn blowup_lower() {
        assert_eq!(v(star_blowup_lower(3, 4, 3).unwrap()), 17);
        assert_eq!(v(star_blowup_lower(5, 1, 7).unwrap()), 7);
    }

    #[test]
    fn decomposable_exponents() {
        let one = BigUint::one();
        let b = decomposable_upper(1, 2, 2, 2, &one).unwrap();
        assert_eq!(b.value, ExtInt::Finite(BigUint::one() << 128u32));
        assert!(b.parameterized);
        assert_eq!(ceil_log_ratio(3, 1).unwrap(), 0);
        assert_eq!(ceil_log_ratio(3, 2).unwrap(), 2);
        assert_eq!(ceil_log_ratio(2, 5).unwrap(), 3);
    }

    #[test]
    fn degenerate() {
        assert_eq!(degenerate_exponent(1, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(degenerate_exponent(3, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(degenerate_exponent(2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(v(degenerate_upper(1, 2, 4).unwrap()), 256);
        assert_eq!(v(degenerate_upper(5, 1, 9).unwrap()), 9);
    }

    #[test]
    fn partitions() {
        assert_eq!(partition_count(1, 3, 3).unwrap(), BigUint::from(20u32));
        assert_eq!(partition_count(1, 1, 1).unwrap(), BigUint::from(2u32));
        assert!(partition_count(3, 2, 2).is_err());
        assert_eq!(v(hyperpath_exact(3, 2).unwrap()), 3);
    }

    #[test]
    fn ext_int_order() {
        assert!(ExtInt::from(5) < ExtInt::Infinite);
        assert!(ExtInt::from(5) > ExtInt::from(4));
    }
}
