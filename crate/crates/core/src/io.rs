//! Text formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `0 ≤ u < v < n`.
//!
//! Weighting: first line `n`, then one line `i j re im` per nonzero
//! upper-triangle entry (`i < j`).
//!
//! Spectrum: eigenvalues one per line, descending.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{HermitianWeighting, Spectrum};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn fields<const N: usize>(line: usize, text: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    parts
        .try_into()
        .map_err(|p: Vec<&str>| parse_err(line, format!("expected {N} fields, found {}", p.len())))
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| parse_err(line, format!("invalid number {s:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header \"n m\""))?;
    let [n, m] = fields::<2>(hl, header)?;
    let (n, m): (usize, usize) = (number(hl, n)?, number(hl, m)?);
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = hl;
    for (ln, l) in lines {
        last_line = ln;
        let [u, v] = fields::<2>(ln, l)?;
        let (u, v): (usize, usize) = (number(ln, u)?, number(ln, v)?);
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range for n = {n}")));
        }
        if u >= v {
            return Err(parse_err(ln, format!("expected u < v, got {u} {v}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(ln, format!("repeated edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(last_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn write_weighting(w: &HermitianWeighting) -> String {
    let mut out = format!("{}\n", w.n());
    for (i, j, z) in w.upper_entries() {
        out.push_str(&format!("{i} {j} {:?} {:?}\n", z.re, z.im));
    }
    out
}

/// Parses a weighting file. With `host`, entries must lie on its edges;
/// without, the host is the support graph of the entries.
pub fn parse_weighting(text: &str, host: Option<&Graph>) -> Result<HermitianWeighting> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header \"n\""))?;
    let [n] = fields::<1>(hl, header)?;
    let n: usize = number(hl, n)?;
    if let Some(g) = host {
        if g.n() != n {
            return Err(parse_err(hl, format!("weighting has n = {n} but the graph has {}", g.n())));
        }
    }
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (ln, l) in lines {
        let [i, j, re, im] = fields::<4>(ln, l)?;
        let (i, j): (usize, usize) = (number(ln, i)?, number(ln, j)?);
        let z = Complex64::new(number(ln, re)?, number(ln, im)?);
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(parse_err(ln, "non-finite weight"));
        }
        if i >= j || j >= n {
            return Err(parse_err(ln, format!("expected 0 <= i < j < {n}, got {i} {j}")));
        }
        if !seen.insert((i, j)) {
            return Err(parse_err(ln, format!("repeated entry {i} {j}")));
        }
        if let Some(g) = host {
            if z != Complex64::ZERO && !g.has_edge(i, j) {
                return Err(parse_err(ln, format!("entry {i} {j} is not an edge of the graph")));
            }
        }
        entries.push((i, j, z, ln));
    }
    let g = match host {
        Some(g) => g.clone(),
        None => Graph::from_edges(
            n,
            entries.iter().filter(|e| e.2 != Complex64::ZERO).map(|&(i, j, _, _)| (i, j)),
        )?,
    };
    let mut w = HermitianWeighting::zero(g);
    for (i, j, z, ln) in entries {
        w.set(i, j, z).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(w)
}

fn format_eigenvalue(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

pub fn write_spectrum_csv(spec: &Spectrum) -> String {
    spec.eigenvalues.iter().map(|&x| format_eigenvalue(x) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, paley, polarity};
    use crate::spectral::{random_weighting, WeightLaw};
    use proptest::prelude::*;

    #[test]
    fn edge_list_format() {
        let text = write_edge_list(&cycle(4).unwrap());
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), cycle(4).unwrap());
        let p = write_edge_list(&paley(17).unwrap());
        assert!(p.starts_with("17 68\n"));
        let q = write_edge_list(&polarity(2).unwrap());
        assert!(q.starts_with("7 9\n"));
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let cases = [
            ("3 1\n0 3\n", 2),
            ("3 2\n0 1\n", 2),
            ("3 1\n1 0\n", 2),
            ("3 2\n0 1\n\n0 1\n", 4),
            ("3\n", 1),
            ("3 1\n0 x\n", 2),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn weighting_format() {
        let w = random_weighting(&cycle(5).unwrap(), 3, WeightLaw::GaussianComplex);
        let text = write_weighting(&w);
        assert!(text.starts_with("5\n0 1 "));
        assert_eq!(parse_weighting(&text, Some(w.host())).unwrap(), w);
        assert_eq!(parse_weighting(&text, None).unwrap(), w);
    }

    #[test]
    fn weighting_errors() {
        let g = cycle(5).unwrap();
        assert!(matches!(parse_weighting("5\n0 2 1 0\n", Some(&g)), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_weighting("4\n", Some(&g)), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_weighting("5\n1 0 1 0\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_weighting("5\n0 1 nan 0\n", None), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn spectrum_csv() {
        let w = HermitianWeighting::unweighted(cycle(5).unwrap());
        let csv = write_spectrum_csv(&w.spectrum().unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "2.000000000000");
        let zero = HermitianWeighting::zero(Graph::empty(3));
        assert_eq!(write_spectrum_csv(&zero.spectrum().unwrap()), "0.000000000000\n".repeat(3));
    }

    proptest! {
        #[test]
        fn weighting_text_round_trips(n in 2usize..12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = crate::graph::gnp(n, p, seed).unwrap();
            let w = random_weighting(&g, seed, WeightLaw::GaussianComplex);
            prop_assert_eq!(parse_weighting(&write_weighting(&w), Some(&g)).unwrap(), w);
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
