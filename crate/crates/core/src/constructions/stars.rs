use super::paths::join;
use super::CertifiedColoring;
use crate::coloring::EdgeColoring;
use crate::containment::Demand;
use crate::error::{Error, Result};
use crate::scheme::{build_scheme, SchemeSpec};

/// Coloring of `K_N`, `N = 1 + sum(r_i - 2)`, in which every vertex has at
/// most `r_i - 2` right neighbors of color `i`.
///
/// The right neighbors of each vertex are split into consecutive blocks of
/// sizes `r_1 - 2, r_2 - 2, ..`; block `i` gets color `i`. The certified
/// demands are the stars whose center precedes its `r_i - 1` leaves.
pub fn star_coloring(sizes: &[usize]) -> Result<CertifiedColoring> {
    if sizes.is_empty() {
        return Err(Error::invalid("sizes", "need at least one color"));
    }
    if sizes.iter().any(|&r| r < 2) {
        return Err(Error::invalid("sizes", "star sizes must be >= 2"));
    }
    let n = 1 + sizes.iter().map(|r| r - 2).sum::<usize>();
    // block boundaries: offset d = j - i falls in block t when
    // prefix[t] < d <= prefix[t + 1]
    let mut prefix = vec![0];
    for &r in sizes {
        prefix.push(prefix.last().unwrap() + r - 2);
    }
    let coloring = EdgeColoring::from_fn(n, sizes.len(), |i, j| {
        let d = j - i;
        1 + (0..sizes.len())
            .find(|&t| d <= prefix[t + 1])
            .expect("offset within total block size")
    })?;
    let avoided = sizes
        .iter()
        .enumerate()
        .map(|(idx, &r)| {
            let star = build_scheme(&SchemeSpec::Star { right: r, left: 1 })?;
            Ok(Demand::new(star, idx + 1))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CertifiedColoring {
        coloring,
        avoided,
        provenance: format!("star({})", join(sizes)),
    })
}

/// Recursive blow-up coloring on `(d-1)^(c-1) (r-1)` vertices.
///
/// Level 1 is a clique of size `r - 1` in color 1. Level `l` places `d - 1`
/// consecutive copies of level `l - 1` and colors every pair between
/// different copies with color `l`. Color `l >= 2` then induces a disjoint
/// union of complete `(d-1)`-partite interval graphs, which contain no
/// monotone path on `d` vertices; color 1 lives in cliques of size `r - 1`.
pub fn star_blowup(d: usize, c: usize, r: usize) -> Result<CertifiedColoring> {
    if d < 3 {
        return Err(Error::invalid("d", "need d >= 3"));
    }
    if c < 1 {
        return Err(Error::invalid("c", "need c >= 1"));
    }
    if r < 2 {
        return Err(Error::invalid("r", "need r >= 2"));
    }
    let exp = u32::try_from(c - 1).map_err(|_| Error::invalid("c", "too many colors"))?;
    let n = (d - 1)
        .checked_pow(exp)
        .and_then(|p| p.checked_mul(r - 1))
        .ok_or_else(|| Error::invalid("c", "construction too large"))?;
    // block[l] = size of a level-l copy, for l = 1..=c
    let mut block = vec![0, r - 1];
    for _ in 2..=c {
        let last = *block.last().unwrap();
        block.push(last * (d - 1));
    }
    let coloring = EdgeColoring::from_fn(n, c, |i, j| {
        let (a, b) = (i - 1, j - 1);
        (2..=c)
            .rev()
            .find(|&level| a / block[level - 1] != b / block[level - 1])
            .unwrap_or(1)
    })?;
    let mut avoided = vec![Demand::new(build_scheme(&SchemeSpec::MonotonePath(r))?, 1)];
    for level in 2..=c {
        avoided.push(Demand::new(
            build_scheme(&SchemeSpec::MonotonePath(d))?,
            level,
        ));
    }
    Ok(CertifiedColoring {
        coloring,
        avoided,
        provenance: format!("star-blowup({d},{c},{r})"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::find_monochromatic;

    #[test]
    fn trivial_star_coloring() {
        let cert = star_coloring(&[2, 2]).unwrap();
        assert_eq!(cert.coloring.n(), 1);
        assert!(cert.verify().unwrap().is_avoiding());
    }

    #[test]
    fn small_star_colorings() {
        let cert = star_coloring(&[3, 3]).unwrap();
        assert_eq!(cert.coloring.n(), 3);
        assert!(cert.verify().unwrap().is_avoiding());
        assert_eq!(star_coloring(&[4, 4]).unwrap().coloring.n(), 5);
        let cert = star_coloring(&[3, 5, 4]).unwrap();
        assert_eq!(cert.coloring.n(), 1 + 1 + 3 + 2);
        assert!(cert.verify().unwrap().is_avoiding());
    }

    #[test]
    fn right_degree_per_color_bounded() {
        let sizes = [4, 3, 6];
        let cert = star_coloring(&sizes).unwrap();
        let c = &cert.coloring;
        for v in 1..=c.n() {
            for (idx, &r) in sizes.iter().enumerate() {
                let deg = (v + 1..=c.n())
                    .filter(|&u| c.color(v, u) == idx + 1)
                    .count();
                assert!(deg <= r - 2);
            }
        }
    }

    #[test]
    fn blowup_single_color() {
        let cert = star_blowup(3, 1, 4).unwrap();
        assert_eq!(cert.coloring.n(), 3);
        assert!(cert.coloring.lex_colors().iter().all(|&x| x == 1));
        assert!(cert.verify().unwrap().is_avoiding());
    }

    #[test]
    fn blowup_two_colors_by_triples() {
        let cert = star_blowup(3, 2, 3).unwrap();
        let c = &cert.coloring;
        assert_eq!(c.n(), 4);
        for a in 1..=4 {
            for b in a + 1..=4 {
                for e in b + 1..=4 {
                    assert!(!(c.color(a, b) == 2 && c.color(b, e) == 2));
                }
            }
        }
        assert!(cert.verify().unwrap().is_avoiding());
    }

    #[test]
    fn blowup_four_colors_layout() {
        let r = 3;
        let cert = star_blowup(3, 4, r).unwrap();
        let c = &cert.coloring;
        assert_eq!(c.n(), 8 * (r - 1));
        // top level: halves of size 4(r-1), cross pairs colored 4
        let half = 4 * (r - 1);
        assert_eq!(c.color(1, half + 1), 4);
        assert_eq!(c.color(1, half), 3);
        assert_eq!(c.color(1, 2), 1);
        assert_eq!(c.color(1, r), 2);
        assert!(cert.verify().unwrap().is_avoiding());
        let p3 = build_scheme(&SchemeSpec::MonotonePath(3)).unwrap();
        assert!(find_monochromatic(c, &p3, 1).unwrap().is_none());
        let p2 = build_scheme(&SchemeSpec::MonotonePath(2)).unwrap();
        assert!(find_monochromatic(c, &p2, 4).unwrap().is_some());
    }
}
