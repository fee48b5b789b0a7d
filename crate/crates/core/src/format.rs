//! Text formats: `.og` graphs, `.oc` colorings, pattern specs and demand
//! digests.
//!
//! `.og`: `og <n> <m>` then `m` lines `<i> <j>`, `i < j`, ascending.
//! `.oc`: `oc <N> <c>` then `C(N,2)` lines `<i> <j> <color>`, ascending.
//! Parsers are strict: no blank lines, no extra fields, no reordering. A
//! missing final newline is the only tolerated deviation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::coloring::{pair_count, Color, EdgeColoring};
use crate::containment::Demand;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::scheme::{build_scheme, C4Ordering, SchemeSpec};

pub fn write_og(g: &OrderedGraph) -> String {
    let mut out = format!("og {} {}\n", g.n(), g.edge_count());
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

pub fn write_oc(c: &EdgeColoring) -> String {
    let mut out = String::with_capacity(16 + 12 * pair_count(c.n()));
    let _ = writeln!(out, "oc {} {}", c.n(), c.colors());
    let n = c.n();
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let _ = writeln!(out, "{i} {j} {}", c.lex_colors()[k]);
            k += 1;
        }
    }
    out
}

/// Lines of `text`, 1-based, rejecting blank lines and carriage returns.
fn lines(text: &str) -> Result<Vec<(usize, &str)>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(Error::parse(1, "empty input"));
    }
    body.split('\n')
        .enumerate()
        .map(|(k, line)| {
            if line.is_empty() {
                Err(Error::parse(k + 1, "blank line"))
            } else if line.contains('\r') {
                Err(Error::parse(k + 1, "carriage return"))
            } else {
                Ok((k + 1, line))
            }
        })
        .collect()
}

/// Exactly `count` unsigned fields separated by single spaces.
fn fields(line: usize, text: &str, count: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = text.split(' ').collect();
    if parts.len() != count {
        return Err(Error::parse(
            line,
            format!("expected {count} fields, got {}", parts.len()),
        ));
    }
    parts
        .iter()
        .map(|p| {
            if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(
                    line,
                    format!("not an unsigned integer: {p:?}"),
                ));
            }
            p.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("integer out of range: {p}")))
        })
        .collect()
}

fn header<'a>(line: usize, text: &'a str, tag: &str) -> Result<&'a str> {
    text.strip_prefix(tag)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| Error::parse(line, format!("header must start with `{tag} `")))
}

pub fn parse_og(text: &str) -> Result<OrderedGraph> {
    let lines = lines(text)?;
    let (l0, h) = lines[0];
    let hv = fields(l0, header(l0, h, "og")?, 2)?;
    let (n, m) = (hv[0], hv[1]);
    if n == 0 {
        return Err(Error::parse(l0, "n must be >= 1"));
    }
    if lines.len() != m + 1 {
        return Err(Error::parse(
            lines.len(),
            format!("expected {m} edge lines, got {}", lines.len() - 1),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    let mut prev: Option<(usize, usize)> = None;
    for &(ln, line) in &lines[1..] {
        let v = fields(ln, line, 2)?;
        let (i, j) = (v[0], v[1]);
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::parse(ln, format!("need 1 <= i < j <= {n}")));
        }
        if prev.is_some_and(|p| p >= (i, j)) {
            return Err(Error::parse(ln, "edges must be strictly ascending"));
        }
        prev = Some((i, j));
        edges.push((i, j));
    }
    OrderedGraph::new(n, edges)
}

pub fn parse_oc(text: &str) -> Result<EdgeColoring> {
    let lines = lines(text)?;
    let (l0, h) = lines[0];
    let hv = fields(l0, header(l0, h, "oc")?, 2)?;
    let (n, c) = (hv[0], hv[1]);
    if c == 0 || c > u8::MAX as usize {
        return Err(Error::parse(l0, "c must be in 1..=255"));
    }
    let pairs = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| Error::parse(l0, "N too large"))?;
    if lines.len() != pairs + 1 {
        return Err(Error::parse(
            lines.len(),
            format!("expected {pairs} pair lines, got {}", lines.len() - 1),
        ));
    }
    let mut data = Vec::with_capacity(pairs);
    let mut it = lines[1..].iter();
    for i in 1..=n {
        for j in i + 1..=n {
            let &(ln, line) = it.next().expect("count checked");
            let v = fields(ln, line, 3)?;
            if (v[0], v[1]) != (i, j) {
                return Err(Error::parse(ln, format!("expected pair {i} {j}")));
            }
            if v[2] == 0 || v[2] > c {
                return Err(Error::parse(ln, format!("color must be in 1..={c}")));
            }
            data.push(v[2] as u8);
        }
    }
    EdgeColoring::from_lex(n, c, data)
}

/// A pattern named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Scheme(SchemeSpec),
    /// An `.og` file, read by the caller.
    File(PathBuf),
}

impl PatternSpec {
    /// Builds the graph; `read` supplies file contents.
    pub fn resolve(&self, read: impl FnOnce(&PathBuf) -> Result<String>) -> Result<OrderedGraph> {
        match self {
            PatternSpec::Scheme(s) => build_scheme(s),
            PatternSpec::File(p) => parse_og(&read(p)?),
        }
    }
}

fn number(field: &'static str, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::invalid(field, format!("not an unsigned integer: {s:?}")))
}

fn numbers(field: &'static str, s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| number(field, x)).collect()
}

impl FromStr for SchemeSpec {
    type Err = Error;

    /// `mon-path:5`, `alt-path:6`, `mon-cycle:4`, `star:3,2`, `c4:B`,
    /// `match-shift:6`, `match-nest:6`, `complete:3`, `multipartite:2,3`.
    fn from_str(s: &str) -> Result<SchemeSpec> {
        let (name, args) = s.split_once(':').ok_or_else(|| {
            Error::invalid("pattern", format!("expected <family>:<args>, got {s:?}"))
        })?;
        let spec = match name {
            "mon-path" => SchemeSpec::MonotonePath(number("n", args)?),
            "alt-path" => SchemeSpec::AlternatingPath(number("n", args)?),
            "mon-cycle" => SchemeSpec::MonotoneCycle(number("n", args)?),
            "match-shift" => SchemeSpec::MatchingShift(number("n", args)?),
            "match-nest" => SchemeSpec::MatchingNest(number("n", args)?),
            "complete" => SchemeSpec::Complete(number("n", args)?),
            "multipartite" => SchemeSpec::CompleteMultipartite(numbers("parts", args)?),
            "star" => match numbers("star", args)?.as_slice() {
                &[right, left] => SchemeSpec::Star { right, left },
                _ => return Err(Error::invalid("star", "expected star:<r>,<s>")),
            },
            "c4" => SchemeSpec::C4(match args {
                "A" => C4Ordering::A,
                "B" => C4Ordering::B,
                "C" => C4Ordering::C,
                _ => return Err(Error::invalid("c4", "ordering must be A, B or C")),
            }),
            _ => {
                return Err(Error::invalid(
                    "pattern",
                    format!("unknown family {name:?}"),
                ))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<PatternSpec> {
        match s.strip_prefix("file:") {
            Some("") => Err(Error::invalid("pattern", "empty file path")),
            Some(path) => Ok(PatternSpec::File(PathBuf::from(path))),
            None => Ok(PatternSpec::Scheme(s.parse()?)),
        }
    }
}

/// `<pattern-spec>:<color>`, split at the last colon.
pub fn parse_demand_spec(s: &str) -> Result<(PatternSpec, Color)> {
    let (pattern, color) = s
        .rsplit_once(':')
        .ok_or_else(|| Error::invalid("avoid", format!("expected <pattern>:<color>, got {s:?}")))?;
    let color = number("color", color)?;
    if color == 0 {
        return Err(Error::invalid("color", "colors are 1-based"));
    }
    Ok((pattern.parse()?, color))
}

/// Order-independent text form of a demand list: one
/// `c<color>/n<n>/<i>-<j>.<i>-<j>..` token per demand, sorted, joined by `+`.
pub fn demand_digest(demands: &[Demand]) -> String {
    let mut tokens: Vec<String> = demands
        .iter()
        .map(|d| {
            let edges: Vec<String> = d
                .pattern
                .edges()
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect();
            format!("c{}/n{}/{}", d.color, d.pattern.n(), edges.join("."))
        })
        .collect();
    tokens.sort();
    tokens.dedup();
    tokens.join("+")
}

/// Inverse of [`demand_digest`].
pub fn parse_digest(digest: &str) -> Result<Vec<Demand>> {
    let bad = |msg: &str| Error::invalid("digest", format!("{msg}: {digest:?}"));
    digest
        .split('+')
        .map(|token| {
            let mut parts = token.splitn(3, '/');
            let color = parts
                .next()
                .and_then(|c| c.strip_prefix('c'))
                .and_then(|c| c.parse::<usize>().ok())
                .filter(|&c| c >= 1)
                .ok_or_else(|| bad("bad color"))?;
            let n = parts
                .next()
                .and_then(|c| c.strip_prefix('n'))
                .and_then(|c| c.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| bad("bad vertex count"))?;
            let edges = parts.next().ok_or_else(|| bad("missing edges"))?;
            let edges = if edges.is_empty() {
                Vec::new()
            } else {
                edges
                    .split('.')
                    .map(|e| {
                        let (i, j) = e.split_once('-').ok_or_else(|| bad("bad edge"))?;
                        Ok((
                            i.parse().map_err(|_| bad("bad edge"))?,
                            j.parse().map_err(|_| bad("bad edge"))?,
                        ))
                    })
                    .collect::<Result<Vec<(usize, usize)>>>()?
            };
            Ok(Demand::new(OrderedGraph::new(n, edges)?, color))
        })
        .collect()
}

/// Hex SHA-256 of `text`.
pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn og_round_trip() {
        let g = build_scheme(&SchemeSpec::AlternatingPath(5)).unwrap();
        let text = write_og(&g);
        assert_eq!(text, "og 5 4\n1 5\n2 4\n2 5\n3 4\n");
        assert_eq!(parse_og(&text).unwrap(), g);
        assert_eq!(parse_og(text.trim_end()).unwrap(), g);
    }

    #[test]
    fn og_rejects_sloppy_input() {
        for bad in [
            "og 3 1\n2 1\n",
            "og 3 2\n1 3\n1 2\n",
            "og 3 1\n1 2\n\n",
            "og 3 1\n1  2\n",
            "og 3 2\n1 2\n",
            "og 0 0\n",
            "og 3 1\n1 4\n",
            "oc 3 1\n1 2\n",
            "og 3 1\r\n1 2\n",
            "",
        ] {
            assert!(parse_og(bad).is_err(), "{bad:?}");
        }
        match parse_og("og 3 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn oc_round_trip_and_errors() {
        let c = EdgeColoring::from_lex(3, 2, vec![1, 2, 2]).unwrap();
        let text = write_oc(&c);
        assert_eq!(text, "oc 3 2\n1 2 1\n1 3 2\n2 3 2\n");
        assert_eq!(parse_oc(&text).unwrap(), c);
        assert!(parse_oc("oc 3 2\n1 2 1\n2 3 2\n1 3 2\n").is_err());
        assert!(parse_oc("oc 3 2\n1 2 1\n1 3 3\n2 3 2\n").is_err());
        assert_eq!(parse_oc("oc 1 2\n").unwrap().n(), 1);
    }

    #[test]
    fn pattern_language() {
        assert_eq!(
            "star:3,2".parse::<SchemeSpec>().unwrap(),
            SchemeSpec::Star { right: 3, left: 2 }
        );
        for s in [
            "mon-path:5",
            "alt-path:6",
            "mon-cycle:4",
            "c4:B",
            "match-nest:6",
            "multipartite:2,3",
        ] {
            let spec: SchemeSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("mon-cycle:2".parse::<SchemeSpec>().is_err());
        assert!("c4:D".parse::<SchemeSpec>().is_err());
        assert!("blob:3".parse::<SchemeSpec>().is_err());
        assert_eq!(
            "file:a/b.og".parse::<PatternSpec>().unwrap(),
            PatternSpec::File("a/b.og".into())
        );
        let (p, c) = parse_demand_spec("star:3,2:1").unwrap();
        assert_eq!(c, 1);
        assert_eq!(
            p,
            PatternSpec::Scheme(SchemeSpec::Star { right: 3, left: 2 })
        );
        assert!(parse_demand_spec("mon-path:3").is_err());
        assert!(parse_demand_spec("mon-path:3:0").is_err());
    }

    #[test]
    fn digest_ignores_order() {
        let p = build_scheme(&SchemeSpec::MonotonePath(3)).unwrap();
        let q = build_scheme(&SchemeSpec::Complete(3)).unwrap();
        let a = [Demand::new(p.clone(), 1), Demand::new(q.clone(), 2)];
        let b = [Demand::new(q, 2), Demand::new(p, 1)];
        assert_eq!(demand_digest(&a), demand_digest(&b));
        assert_eq!(demand_digest(&a), "c1/n3/1-2.2-3+c2/n3/1-2.1-3.2-3");
        assert!(!demand_digest(&a).contains(' '));
        let back = parse_digest(&demand_digest(&a)).unwrap();
        assert_eq!(demand_digest(&back), demand_digest(&a));
        assert_eq!(
            parse_digest("c1/n3/").unwrap()[0].pattern,
            OrderedGraph::empty(3)
        );
        assert!(parse_digest("c0/n3/").is_err());
        assert!(parse_digest("c1/n3/1-4").is_err());
        assert_eq!(sha256_hex("abc").len(), 64);
        assert!(sha256_hex("abc").starts_with("ba7816bf"));
    }
}
