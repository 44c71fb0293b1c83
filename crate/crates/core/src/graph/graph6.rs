//! graph6 decoding and encoding (McKay's `formats.txt`).

use crate::error::ParseError;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are stripped. No validation is performed.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let trimmed = line.trim_end();
    let lead = trimmed.len() - trimmed.trim_start().len();
    let mut body = trimmed.trim_start();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadCharacter {
                offset: base + i,
                byte: b,
            });
        }
    }
    let (n, header_len) = decode_size(bytes, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(ParseError::Truncated {
            offset: base + bytes.len(),
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(ParseError::TrailingData {
            offset: base + header_len + expected,
            extra: data.len() - expected,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(ParseError::NonZeroPadding {
                offset: base + header_len + expected - 1,
            });
        }
    }
    Ok(Graph::from_edges(n, edges))
}

fn decode_size(bytes: &[u8], base: usize) -> Result<(usize, usize), ParseError> {
    let v = |b: u8| (b - 63) as usize;
    if bytes[0] != 126 {
        return Ok((v(bytes[0]), 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(ParseError::BadHeader { offset: base });
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | v(b));
        if n <= 258047 {
            return Err(ParseError::BadHeader { offset: base });
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(ParseError::BadHeader { offset: base });
    }
    let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | v(b));
    if n < 63 {
        return Err(ParseError::BadHeader { offset: base });
    }
    Ok((n, 4))
}

/// Canonical graph6 encoding (no header prefix).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.is_adjacent(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    #[test]
    fn decodes_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn decodes_four_cycle() {
        let g = parse_graph6("Cl\n").unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn decodes_single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn header_prefix_is_stripped() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn petersen_round_trip() {
        let p = families::petersen();
        let s = encode_graph6(&p);
        assert_eq!(parse_graph6(&s).unwrap().adjacency(), p.adjacency());
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(
            parse_graph6("not-graph6").unwrap_err(),
            ParseError::BadCharacter {
                offset: 3,
                byte: b'-'
            }
        );
        assert!(matches!(
            parse_graph6("C").unwrap_err(),
            ParseError::Truncated { expected: 1, found: 0, .. }
        ));
        assert!(matches!(
            parse_graph6("Cll").unwrap_err(),
            ParseError::TrailingData { offset: 2, extra: 1 }
        ));
        assert!(matches!(
            parse_graph6("~?").unwrap_err(),
            ParseError::BadHeader { offset: 0 }
        ));
        assert_eq!(parse_graph6("   ").unwrap_err(), ParseError::Empty);
    }

    #[test]
    fn long_header() {
        let g = families::cycle(100);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap().adjacency(), g.adjacency());
    }

    proptest! {
        #[test]
        fn encode_then_parse_is_identity(n in 0usize..40, seed in any::<u64>()) {
            let mut state = seed;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges);
            let s = encode_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(encode_graph6(&back), s);
        }
    }
}
