//! graph6 encoding: one printable line per graph, header byte `n + 63` for
//! `n <= 62`, then the upper triangle of the adjacency matrix read column
//! by column, packed big-endian six bits per byte, each byte offset by 63.

use super::Graph;
use crate::{Error, Result};

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Parse a single graph6 line. The optional `>>graph6<<` prefix emitted by
/// some tools is accepted; surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let mut base = text.len() - text.trim_start().len();
    let mut body = trimmed;
    if let Some(rest) = body.strip_prefix(">>graph6<<") {
        base += ">>graph6<<".len();
        body = rest;
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(base, "empty input"));
    }

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte {b} outside graph6 range [63,126]")));
        }
    }

    let header = bytes[0];
    if header == 126 {
        // Multi-byte vertex counts encode n > 62.
        return Err(g6_err(base, "vertex counts above 62 are not supported"));
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(g6_err(base, "graph6 encodes at least one vertex"));
    }

    let bits = n * (n - 1) / 2;
    let payload = bits.div_ceil(6);
    if bytes.len() < 1 + payload {
        return Err(g6_err(
            base + bytes.len(),
            format!("truncated: need {payload} payload bytes for n = {n}, got {}", bytes.len() - 1),
        ));
    }
    if bytes.len() > 1 + payload {
        return Err(g6_err(base + 1 + payload, "trailing bytes after graph payload"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit / 6] - 63;
            let set = byte >> (5 - bit % 6) & 1 == 1;
            if set {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }

    // Padding bits below the last used position must be zero.
    if !bits.is_multiple_of(6) {
        let last = bytes[1 + payload - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(base + payload, "nonzero padding bits"));
        }
    }

    Ok(g)
}

/// Encode into the canonical graph6 line for the graph's own vertex order.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Error::precondition(format!(
            "graph6 output limited to 62 vertices, graph has {n}"
        )));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn k4_from_spec_string() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(encode_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(encode_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn four_cycle_hand_packed() {
        // bits 101101 -> 45, byte 45 + 63 = 108 = 'l'
        let g = parse_graph6("Cl").unwrap();
        assert_eq!(g, families::cycle(4));
    }

    #[test]
    fn byte_offsets_in_errors() {
        let err = parse_graph6("C ").unwrap_err();
        match err {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 1),
            other => panic!("unexpected error {other:?}"),
        }
        // Trailing garbage after a complete payload.
        let err = parse_graph6("C~~").unwrap_err();
        match err {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn truncated_and_oversize_rejected() {
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("~??").is_err()); // n > 62 header
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn optional_header_prefix() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn roundtrip_named_graphs() {
        for g in [
            families::path(5),
            families::cycle(6),
            families::hypercube(3),
            families::petersen(),
            families::complete_bipartite(3, 3),
            families::star(4),
        ] {
            let s = encode_graph6(&g).unwrap();
            let back = parse_graph6(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(encode_graph6(&back).unwrap(), s);
        }
    }
}
