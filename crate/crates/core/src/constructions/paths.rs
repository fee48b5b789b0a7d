use super::CertifiedColoring;
use crate::coloring::EdgeColoring;
use crate::containment::Demand;
use crate::error::{Error, Result};
use crate::scheme::{build_scheme, SchemeSpec};

/// Mixed-radix grid coloring avoiding a monotone path on `r_i` vertices in
/// every color `i`.
///
/// Vertices are the tuples `(a_1, .., a_c)`, `1 <= a_i <= r_i - 1`, in
/// lexicographic order; a pair gets the first coordinate where its endpoints
/// differ. A path in color `i` fixes coordinates before `i` and strictly
/// increases coordinate `i`, so it has at most `r_i - 1` vertices.
pub fn monotone_path_grid(lengths: &[usize]) -> Result<CertifiedColoring> {
    if lengths.is_empty() {
        return Err(Error::invalid("lengths", "need at least one color"));
    }
    if lengths.iter().any(|&r| r < 2) {
        return Err(Error::invalid("lengths", "path lengths must be >= 2"));
    }
    let radices: Vec<usize> = lengths.iter().map(|r| r - 1).collect();
    let n: usize = radices.iter().product();
    // digits[v] = tuple of vertex v (0-based digits, most significant first)
    let digits: Vec<Vec<usize>> = (0..n)
        .map(|mut v| {
            let mut d = vec![0; radices.len()];
            for (slot, &radix) in d.iter_mut().zip(&radices).rev() {
                *slot = v % radix;
                v /= radix;
            }
            d
        })
        .collect();
    let coloring = EdgeColoring::from_fn(n, lengths.len(), |i, j| {
        let (a, b) = (&digits[i - 1], &digits[j - 1]);
        1 + (0..a.len())
            .find(|&t| a[t] != b[t])
            .expect("distinct tuples")
    })?;
    let avoided = lengths
        .iter()
        .enumerate()
        .map(|(idx, &r)| {
            Ok(Demand::new(
                build_scheme(&SchemeSpec::MonotonePath(r))?,
                idx + 1,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CertifiedColoring {
        coloring,
        avoided,
        provenance: format!("monotone-path-grid({})", join(lengths)),
    })
}

/// Distance-parity coloring of `K_{2n-3}`: a pair is color 1 when its
/// distance is even and color 2 otherwise. Avoids the alternating path on
/// `n` vertices in both colors.
pub fn alternating_parity(n: usize) -> Result<CertifiedColoring> {
    if n < 3 {
        return Err(Error::invalid("n", "need n >= 3"));
    }
    let size = 2 * n - 3;
    let coloring = EdgeColoring::from_fn(size, 2, |i, j| if (j - i) % 2 == 0 { 1 } else { 2 })?;
    let path = build_scheme(&SchemeSpec::AlternatingPath(n))?;
    Ok(CertifiedColoring {
        coloring,
        avoided: vec![Demand::new(path.clone(), 1), Demand::new(path, 2)],
        provenance: format!("alt-parity({n})"),
    })
}

pub(crate) fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::longest_monotone_path;
    use crate::graph::OrderedGraph;

    /// Brute force over all increasing triples.
    fn has_mono_triple(c: &EdgeColoring, color: usize) -> bool {
        let n = c.n();
        (1..=n).any(|a| {
            (a + 1..=n)
                .any(|b| (b + 1..=n).any(|d| c.color(a, b) == color && c.color(b, d) == color))
        })
    }

    #[test]
    fn grid_three_three() {
        let cert = monotone_path_grid(&[3, 3]).unwrap();
        assert_eq!(cert.coloring.n(), 4);
        assert!(!has_mono_triple(&cert.coloring, 1));
        assert!(!has_mono_triple(&cert.coloring, 2));
        assert!(cert.verify().unwrap().is_avoiding());
    }

    #[test]
    fn grid_degenerate_radix() {
        let cert = monotone_path_grid(&[2, 5]).unwrap();
        assert_eq!(cert.coloring.n(), 4);
        assert!(cert.coloring.lex_colors().iter().all(|&c| c == 2));
        assert!(cert.verify().unwrap().is_avoiding());
        assert_eq!(
            cert.avoided[0].pattern,
            OrderedGraph::new(2, [(1, 2)]).unwrap()
        );
    }

    #[test]
    fn grid_four_four_longest_paths() {
        let cert = monotone_path_grid(&[4, 4]).unwrap();
        assert_eq!(cert.coloring.n(), 9);
        for color in 1..=2 {
            assert_eq!(longest_monotone_path(&cert.coloring, color).unwrap(), 3);
        }
    }

    #[test]
    fn parity_sizes() {
        assert_eq!(alternating_parity(3).unwrap().coloring.n(), 3);
        assert_eq!(alternating_parity(4).unwrap().coloring.n(), 5);
        let cert = alternating_parity(5).unwrap();
        assert_eq!(cert.coloring.n(), 7);
        assert!(cert.verify().unwrap().is_avoiding());
        assert!(alternating_parity(2).is_err());
    }

    #[test]
    fn parity_is_swap_symmetric_under_shift() {
        // Both classes are distance-parity graphs: color(i, j) depends only on j - i.
        let c = alternating_parity(7).unwrap().coloring;
        let n = c.n();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..=n - (j - i) {
                    assert_eq!(c.color(i, j), c.color(k, k + j - i));
                }
                if j + 1 <= n {
                    assert_ne!(c.color(i, j), c.color(i, j + 1));
                }
            }
        }
    }
}
