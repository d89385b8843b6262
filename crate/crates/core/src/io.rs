//! Plain-text file formats.
//!
//! Hypergraph files carry one edge per line as whitespace-separated
//! non-negative integers. `#` starts a comment, blank lines are skipped, and
//! an optional `vertices: a b c` line declares vertices not covered by any
//! edge. The serializer emits canonical form, so parse-serialize round trips
//! are byte-stable.
//!
//! Coloring files carry `vertex color` pairs, one per line, same comment and
//! blank-line rules.

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

fn bad(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut declared: Vec<u32> = Vec::new();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line_no = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            for token in rest.split_whitespace() {
                declared.push(parse_vertex(token, line_no)?);
            }
            continue;
        }
        let edge = content
            .split_whitespace()
            .map(|token| parse_vertex(token, line_no))
            .collect::<Result<Vec<u32>, _>>()?;
        edges.push(edge);
    }
    Ok(Hypergraph::from_parts(declared, edges).expect("parsed edges are non-empty"))
}

fn parse_vertex(token: &str, line: usize) -> Result<u32, ParseError> {
    token.parse::<u32>().map_err(|_| {
        bad(
            line,
            format!("expected a non-negative integer, got {token:?}"),
        )
    })
}

/// Canonical text form: a `vertices:` header only when isolated vertices
/// exist, then one edge per line in canonical edge order.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let covered: BTreeSet<u32> = h.edge_list().into_iter().flatten().collect();
    let isolated: Vec<String> = h
        .vertices()
        .iter()
        .filter(|v| !covered.contains(v))
        .map(|v| v.to_string())
        .collect();

    let mut out = String::new();
    if !isolated.is_empty() {
        out.push_str("vertices: ");
        out.push_str(&isolated.join(" "));
        out.push('\n');
    }
    for edge in h.edge_list() {
        let tokens: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut coloring = Coloring::new();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    for (number, raw) in text.lines().enumerate() {
        let line_no = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [vertex, color] = tokens.as_slice() else {
            return Err(bad(
                line_no,
                format!("expected \"vertex color\", got {} tokens", tokens.len()),
            ));
        };
        let vertex = parse_vertex(vertex, line_no)?;
        let color = parse_vertex(color, line_no)?;
        if color == 0 {
            return Err(bad(line_no, "colors are 1-based; 0 is not a color"));
        }
        if !seen.insert(vertex) {
            return Err(bad(line_no, format!("vertex {vertex} colored twice")));
        }
        coloring.set(vertex, color);
    }
    Ok(coloring)
}

pub fn serialize_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (vertex, color) in coloring.iter() {
        out.push_str(&format!("{vertex} {color}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_blanks_and_header() {
        let text = "# an instance\n\nvertices: 9 10\n1 2 3  # trailing note\n3 2 1\n2 4\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.vertices(), &[1, 2, 3, 4, 9, 10]);
        assert_eq!(h.edge_list(), vec![vec![2, 4], vec![1, 2, 3]]);
    }

    #[test]
    fn parse_error_carries_line_number() {
        let err = parse_hypergraph("1 2\nx 3\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_hypergraph("1 2\n\n# c\n1 -4\n").unwrap_err();
        assert_eq!(err.line, 4);
    }

    #[test]
    fn serializer_emits_header_only_for_isolated_vertices() {
        let h = Hypergraph::from_parts(vec![7], vec![vec![1, 2]]).unwrap();
        assert_eq!(serialize_hypergraph(&h), "vertices: 7\n1 2\n");
        let h = Hypergraph::from_edges(vec![vec![1, 2]]).unwrap();
        assert_eq!(serialize_hypergraph(&h), "1 2\n");
    }

    #[test]
    fn coloring_round_trip_and_errors() {
        let c = parse_coloring("1 2\n2 1\n# done\n").unwrap();
        assert_eq!(serialize_coloring(&c), "1 2\n2 1\n");

        assert_eq!(parse_coloring("1 2 3\n").unwrap_err().line, 1);
        assert_eq!(parse_coloring("1 2\n1 3\n").unwrap_err().line, 2);
        assert_eq!(parse_coloring("5 0\n").unwrap_err().line, 1);
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (
            proptest::collection::vec(proptest::collection::btree_set(0u32..30, 1..6), 0..8),
            proptest::collection::btree_set(0u32..40, 0..4),
        )
            .prop_map(|(edges, extra)| Hypergraph::from_parts(extra, edges).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(h in arb_hypergraph()) {
            let text = serialize_hypergraph(&h);
            let parsed = parse_hypergraph(&text).unwrap();
            prop_assert_eq!(&parsed, &h);
            prop_assert_eq!(serialize_hypergraph(&parsed), text);
        }

        #[test]
        fn coloring_round_trip(pairs in proptest::collection::btree_map(0u32..50, 1u32..9, 0..10)) {
            let c: Coloring = pairs.into_iter().collect();
            let text = serialize_coloring(&c);
            prop_assert_eq!(parse_coloring(&text).unwrap(), c);
        }

        #[test]
        fn parsers_never_panic_on_junk(text in "\\PC*") {
            let _ = parse_hypergraph(&text);
            let _ = parse_coloring(&text);
        }
    }
}
