//! Text file formats.
//!
//! Polygon file: first line `n`, then `n` lines `<num>/<den> <num>/<den>`
//! in CCW order. Rationals are written in reduced form with an explicit
//! denominator, so write-then-read reproduces values exactly.
//!
//! Visibility-graph file: first line `n`, then `n` lines of space-separated
//! CCW neighbor indices.
//!
//! Measurements file: `n` lines of comma-separated decimal radians (no
//! header; `n` is the line count).
//!
//! Labeled-digraph file: first line the node count, then one line per node
//! of `label:target` pairs in slot order. Labels are serialized per
//! variant: `b3`, `lb4,2`, `at3;0110`, and `g<text>` for generic tokens.

use crate::geom::{
    AngleMeasurement, OrderedAngleMeasurements, RationalPoint, SimplePolygon, VisibilityGraph,
};
use crate::graph::{Label, LabeledDigraph};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn parse_count(lines: &[&str]) -> Result<usize, FormatError> {
    let first = lines
        .first()
        .ok_or_else(|| FormatError::new(1, "empty file"))?;
    first
        .trim()
        .parse::<usize>()
        .map_err(|_| FormatError::new(1, format!("expected a count, got {first:?}")))
}

fn parse_rational(tok: &str, line: usize) -> Result<BigRational, FormatError> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let num = BigInt::from_str(num.trim())
        .map_err(|_| FormatError::new(line, format!("bad numerator in {tok:?}")))?;
    let den = BigInt::from_str(den.trim())
        .map_err(|_| FormatError::new(line, format!("bad denominator in {tok:?}")))?;
    if den == BigInt::from(0) {
        return Err(FormatError::new(line, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}/1", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serializes a polygon; vertices are written in reduced `num/den` form.
pub fn write_polygon(polygon: &SimplePolygon) -> String {
    let mut out = format!("{}\n", polygon.len());
    for v in polygon.vertices() {
        let _ = writeln!(out, "{} {}", rational_str(&v.x), rational_str(&v.y));
    }
    out
}

/// Parses and validates a polygon file.
pub fn read_polygon(text: &str) -> Result<SimplePolygon, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    let n = parse_count(&lines)?;
    if lines.len() < n + 1 {
        return Err(FormatError::new(
            lines.len(),
            format!("expected {n} vertex lines"),
        ));
    }
    let mut vertices = Vec::with_capacity(n);
    for (idx, line) in lines[1..n + 1].iter().enumerate() {
        let lineno = idx + 2;
        let mut toks = line.split_whitespace();
        let (Some(xs), Some(ys)) = (toks.next(), toks.next()) else {
            return Err(FormatError::new(lineno, "expected two coordinates"));
        };
        if toks.next().is_some() {
            return Err(FormatError::new(lineno, "trailing tokens"));
        }
        vertices.push(RationalPoint::new(
            parse_rational(xs, lineno)?,
            parse_rational(ys, lineno)?,
        ));
    }
    SimplePolygon::new(vertices).map_err(|e| FormatError::new(1, e.to_string()))
}

pub fn write_visibility_graph(g: &VisibilityGraph) -> String {
    let mut out = format!("{}\n", g.len());
    for i in 0..g.len() {
        let row: Vec<String> = g.incident(i).iter().map(|j| j.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn read_visibility_graph(text: &str) -> Result<VisibilityGraph, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    let n = parse_count(&lines)?;
    if lines.len() < n + 1 {
        return Err(FormatError::new(
            lines.len(),
            format!("expected {n} adjacency lines"),
        ));
    }
    let mut incident = Vec::with_capacity(n);
    for (idx, line) in lines[1..n + 1].iter().enumerate() {
        let lineno = idx + 2;
        let row: Result<Vec<usize>, _> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| FormatError::new(lineno, format!("bad index {t:?}")))
            })
            .collect();
        incident.push(row?);
    }
    VisibilityGraph::from_incident(incident).map_err(|e| FormatError::new(1, e.to_string()))
}

/// Measurements are written with `f64`'s shortest round-trip formatting.
pub fn write_measurements(m: &OrderedAngleMeasurements) -> String {
    let mut out = String::new();
    for mv in m.iter() {
        let row: Vec<String> = mv.angles().iter().map(|a| a.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn read_measurements(text: &str) -> Result<OrderedAngleMeasurements, FormatError> {
    let mut per_vertex = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let angles: Result<Vec<f64>, _> = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| FormatError::new(idx + 1, format!("bad angle {t:?}")))
            })
            .collect();
        per_vertex.push(AngleMeasurement::new(angles?));
    }
    if per_vertex.is_empty() {
        return Err(FormatError::new(1, "empty file"));
    }
    Ok(OrderedAngleMeasurements::new(per_vertex))
}

pub fn write_labeled_digraph(g: &LabeledDigraph) -> String {
    let mut out = format!("{}\n", g.len());
    for i in 0..g.len() {
        let row: Vec<String> = g
            .arcs(i)
            .iter()
            .map(|(label, target)| format!("{label}:{target}"))
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn read_labeled_digraph(text: &str) -> Result<LabeledDigraph, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    let n = parse_count(&lines)?;
    if lines.len() < n + 1 {
        return Err(FormatError::new(
            lines.len(),
            format!("expected {n} arc lines"),
        ));
    }
    let mut arcs = Vec::with_capacity(n);
    for (idx, line) in lines[1..n + 1].iter().enumerate() {
        let lineno = idx + 2;
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let (label, target) = tok.rsplit_once(':').ok_or_else(|| {
                FormatError::new(lineno, format!("expected label:target, got {tok:?}"))
            })?;
            let label = Label::parse(label)
                .ok_or_else(|| FormatError::new(lineno, format!("bad label {label:?}")))?;
            let target = target
                .parse::<usize>()
                .map_err(|_| FormatError::new(lineno, format!("bad target {target:?}")))?;
            row.push((label, target));
        }
        arcs.push(row);
    }
    LabeledDigraph::new(arcs).map_err(|e| FormatError::new(1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fix_p5() -> SimplePolygon {
        SimplePolygon::new(vec![
            RationalPoint::from_ints(0, 0),
            RationalPoint::from_ints(4, 0),
            RationalPoint::from_ints(4, 2),
            RationalPoint::from_fractions(2, 1, 6, 5),
            RationalPoint::from_ints(0, 2),
        ])
        .unwrap()
    }

    #[test]
    fn polygon_round_trip_is_lossless() {
        let p = fix_p5();
        let text = write_polygon(&p);
        assert!(text.contains("2/1 6/5"));
        let back = read_polygon(&text).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn polygon_parse_accepts_bare_integers() {
        let p = read_polygon("3\n0 0\n2 0\n1 3\n").unwrap();
        assert_eq!(p.vertex(2), &RationalPoint::from_ints(1, 3));
    }

    #[test]
    fn polygon_parse_rejects_garbage() {
        assert!(read_polygon("").is_err());
        assert!(read_polygon("3\n0 0\n1 x\n0 1\n").is_err());
        assert!(read_polygon("4\n0 0\n1 1\n1 0\n0 1\n").is_err()); // bow-tie
    }

    #[test]
    fn visibility_graph_round_trip() {
        let g = VisibilityGraph::build(&fix_p5()).unwrap();
        let text = write_visibility_graph(&g);
        assert_eq!(read_visibility_graph(&text).unwrap(), g);
    }

    #[test]
    fn visibility_graph_rejects_asymmetric_lists() {
        // 0 lists 2 but 2 does not list 0.
        let bad = "4\n1 2 3\n2 0\n3 1\n0 2\n";
        assert!(read_visibility_graph(bad).is_err());
    }

    #[test]
    fn measurements_round_trip() {
        use crate::geom::measure;
        let p = fix_p5();
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        let text = write_measurements(&m);
        let back = read_measurements(&text).unwrap();
        assert_eq!(m, back, "shortest round-trip float formatting is exact");
    }
}
