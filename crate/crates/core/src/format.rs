//! Interchange formats: the graph6 text codec and DOT export.
//!
//! graph6 packs the upper adjacency triangle, column by column, into 6-bit
//! groups offset by 63 into printable ASCII. The emitter always produces the
//! canonical (shortest) form without a header; the parser additionally
//! accepts the optional `>>graph6<<` header, a trailing newline, and
//! non-minimal size prefixes. Parse errors carry the byte offset into the
//! original input.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Parses a single graph6 value.
pub fn parse_graph6(input: &str) -> Result<Graph> {
    let bytes = input.as_bytes();
    let mut pos = 0;
    if bytes.len() >= HEADER.len() && &bytes[..HEADER.len()] == HEADER.as_bytes() {
        pos = HEADER.len();
    }
    let mut end = bytes.len();
    while end > pos && (bytes[end - 1] == b'\n' || bytes[end - 1] == b'\r') {
        end -= 1;
    }
    let data = &bytes[pos..end];
    if data.is_empty() {
        return Err(Error::Graph6 {
            offset: pos,
            reason: "empty input, expected a size prefix".into(),
        });
    }

    let sixbit = |offset: usize| -> Result<u64> {
        let b = data[offset - pos];
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                offset,
                reason: format!("byte {b:#04x} outside the printable range 63..=126"),
            });
        }
        Ok(u64::from(b - 63))
    };

    // Size prefix: one byte below 126, or '~' + 3 bytes, or '~~' + 6 bytes.
    let (n, at) = if data[0] == 126 {
        let (count, skip) = if data.len() > 1 && data[1] == 126 {
            (6, pos + 2)
        } else {
            (3, pos + 1)
        };
        if data.len() < (skip - pos) + count {
            return Err(Error::Graph6 {
                offset: pos + data.len(),
                reason: "truncated size prefix".into(),
            });
        }
        let mut n: u64 = 0;
        for o in skip..skip + count {
            n = n << 6 | sixbit(o)?;
        }
        (n as usize, skip + count)
    } else {
        (sixbit(pos)? as usize, pos + 1)
    };

    let bit_count = n * (n.saturating_sub(1)) / 2;
    let needed = bit_count.div_ceil(6);
    let have = (pos + data.len()).saturating_sub(at);
    if have < needed {
        return Err(Error::Graph6 {
            offset: pos + data.len(),
            reason: format!("truncated: need {needed} data bytes for n={n}, found {have}"),
        });
    }
    // Validate the data bytes in stream order before complaining about
    // anything that follows them.
    for offset in at..at + needed {
        sixbit(offset)?;
    }
    if have > needed {
        return Err(Error::Graph6 {
            offset: at + needed,
            reason: format!("unexpected trailing byte after {needed} data bytes"),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let offset = at + bit / 6;
            if sixbit(offset)? >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
            if bit == bit_count {
                break 'cols;
            }
        }
    }
    // Padding bits of the last group must be zero.
    while bit < needed * 6 {
        let offset = at + bit / 6;
        if sixbit(offset)? >> (5 - bit % 6) & 1 == 1 {
            return Err(Error::Graph6 {
                offset,
                reason: "nonzero padding bit".into(),
            });
        }
        bit += 1;
    }
    Ok(g)
}

/// Emits the canonical graph6 form (shortest size prefix, no header).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Emits Graphviz DOT: one node line per vertex (with its display label) and
/// one line per edge, both in ascending id order.
pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let label = g.label(v).replace('\\', "\\\\").replace('"', "\\\"");
        out.push_str(&format!("  v{} [label=\"{}\"];\n", v + 1, label));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{} -- v{};\n", u + 1, v + 1));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph};

    #[test]
    fn k4_is_c_tilde() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(emit_graph6(&path_graph(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap(), path_graph(1).unwrap());
    }

    #[test]
    fn empty_graph_is_question_mark() {
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn known_small_encodings() {
        assert_eq!(emit_graph6(&path_graph(4).unwrap()), "Ch");
        assert_eq!(parse_graph6("Ch").unwrap(), path_graph(4).unwrap());
    }

    #[test]
    fn header_and_newline_tolerated() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), k4);
        assert_eq!(parse_graph6("C~\r\n").unwrap(), k4);
    }

    #[test]
    fn long_size_prefix_roundtrip() {
        let g = Graph::from_edges(63, &[(0, 62), (10, 20)]).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn error_offsets_are_exact() {
        // Byte 1 is outside the printable range.
        match parse_graph6("C\x20~").unwrap_err() {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 1),
            e => panic!("unexpected error {e:?}"),
        }
        // Truncated: K_4 needs one data byte.
        match parse_graph6("C").unwrap_err() {
            Error::Graph6 { offset, reason } => {
                assert_eq!(offset, 1);
                assert!(reason.contains("truncated"));
            }
            e => panic!("unexpected error {e:?}"),
        }
        // Trailing junk after a complete value.
        match parse_graph6("C~~").unwrap_err() {
            Error::Graph6 { offset, reason } => {
                assert_eq!(offset, 2);
                assert!(reason.contains("trailing"));
            }
            e => panic!("unexpected error {e:?}"),
        }
        // Header shifts every offset.
        match parse_graph6(">>graph6<<C").unwrap_err() {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 11),
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn nonzero_padding_rejected() {
        // P_3 uses bits 101 + padding 000 -> 'g'. Flip a padding bit: 101001 -> 'h'
        // is a valid encoding of a different bit pattern, so craft n=3 with
        // padding bit set: bits 101 111 -> 0b101111 = 47 -> byte 47+63=110 'n'.
        match parse_graph6("Bn").unwrap_err() {
            Error::Graph6 { offset, reason } => {
                assert_eq!(offset, 1);
                assert!(reason.contains("padding"));
            }
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn dot_output_shape() {
        let dot = emit_dot(&path_graph(3).unwrap());
        let expected = "graph {\n  v1 [label=\"1\"];\n  v2 [label=\"2\"];\n  v3 [label=\"3\"];\n  v1 -- v2;\n  v2 -- v3;\n}\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn dot_uses_attached_labels() {
        let g = path_graph(2)
            .unwrap()
            .with_labels(vec!["{1,2}".into(), "{1,3}".into()])
            .unwrap();
        let dot = emit_dot(&g);
        assert!(dot.contains("v1 [label=\"{1,2}\"];"));
        assert!(dot.contains("v1 -- v2;"));
    }
}
