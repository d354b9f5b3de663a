//! graph6 codec and DOT emission.
//!
//! The graph6 surface is deliberately narrow: one graph per line, one-byte
//! order header (so order at most 62), no `>>graph6<<` preamble, no sparse6.
//! Encoding is canonical byte-for-byte: `decode ∘ encode` is the identity on
//! graphs and `encode ∘ decode` is the identity on valid lines.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Largest order encodable with the one-byte graph6 header.
pub const MAX_GRAPH6_ORDER: usize = 62;

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::capacity(format!(
            "graph6 one-byte header supports order <= {MAX_GRAPH6_ORDER}, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + (n * (n.max(1) - 1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    // column-major upper triangle, six bits per byte, MSB first
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(63 + acc);
    }
    Ok(out)
}

/// Decodes one graph6 line. `text` must be exactly the encoding: no
/// newline, no `>>graph6<<` header.
pub fn decode_graph6(text: &[u8]) -> Result<Graph> {
    if text.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            msg: "empty input".into(),
        });
    }
    if text.starts_with(b">>graph6<<") {
        return Err(Error::Parse {
            offset: 0,
            msg: ">>graph6<< header is not accepted".into(),
        });
    }
    for (i, &b) in text.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset: i,
                msg: format!("byte {b:#04x} outside graph6 range [63,126]"),
            });
        }
    }
    let header = text[0];
    if header == 126 {
        return Err(Error::Parse {
            offset: 0,
            msg: "multi-byte order headers are not supported (order must be <= 62)".into(),
        });
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if text.len() != expect {
        return Err(Error::Parse {
            offset: text.len().min(expect),
            msg: format!(
                "expected {expect} bytes for order {n}, got {}",
                text.len()
            ),
        });
    }
    let mut b = GraphBuilder::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = text[1 + bit / 6];
            let val = (byte - 63) >> (5 - bit % 6) & 1;
            if val == 1 {
                b.add_edge(i, j);
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = text[text.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse {
                offset: text.len() - 1,
                msg: "nonzero padding bits".into(),
            });
        }
    }
    Ok(b.build())
}

/// Emits an undirected DOT description with vertex indices as labels.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset produced by [`to_dot`]: bare node statements and
/// `u -- v;` edge statements inside a `graph { ... }` block.
pub fn from_dot(text: &str) -> Result<Graph> {
    let mut max_vertex: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut offset = 0usize;
    let mut seen_open = false;
    for line in text.lines() {
        let trimmed = line.trim();
        let line_offset = offset;
        offset += line.len() + 1;
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("graph") && trimmed.ends_with('{') {
            seen_open = true;
            continue;
        }
        if trimmed == "}" {
            continue;
        }
        let stmt = trimmed.strip_suffix(';').ok_or(Error::Parse {
            offset: line_offset,
            msg: format!("statement without ';': {trimmed:?}"),
        })?;
        if let Some((a, b)) = stmt.split_once("--") {
            let u: usize = a.trim().parse().map_err(|_| Error::Parse {
                offset: line_offset,
                msg: format!("bad vertex index {:?}", a.trim()),
            })?;
            let v: usize = b.trim().parse().map_err(|_| Error::Parse {
                offset: line_offset,
                msg: format!("bad vertex index {:?}", b.trim()),
            })?;
            max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u).max(v)));
            edges.push((u, v));
        } else {
            let v: usize = stmt.trim().parse().map_err(|_| Error::Parse {
                offset: line_offset,
                msg: format!("bad node statement {stmt:?}"),
            })?;
            max_vertex = Some(max_vertex.map_or(v, |m| m.max(v)));
        }
    }
    if !seen_open {
        return Err(Error::Parse {
            offset: 0,
            msg: "missing 'graph {' header".into(),
        });
    }
    let order = max_vertex.map_or(0, |m| m + 1);
    let mut b = GraphBuilder::new(order);
    for (u, v) in edges {
        b.add_edge(u, v);
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named;
    use crate::graph::disjoint_union;

    #[test]
    fn known_encodings() {
        // single vertex
        let g = Graph::edgeless(1);
        assert_eq!(encode_graph6(&g).unwrap(), b"@");
        // K_2: one edge bit, 100000 -> 32 -> '_'
        let k2 = named::clique(2).unwrap();
        assert_eq!(encode_graph6(&k2).unwrap(), b"A_");
        // K_3: bits 111000 -> 56 -> 'w'
        let k3 = named::clique(3).unwrap();
        assert_eq!(encode_graph6(&k3).unwrap(), b"Bw");
        // edgeless on 5 vertices: header 'D', two zero payload bytes
        assert_eq!(encode_graph6(&Graph::edgeless(5)).unwrap(), b"D??");
    }

    #[test]
    fn known_decodings() {
        assert_eq!(decode_graph6(b"@").unwrap(), Graph::edgeless(1));
        assert_eq!(decode_graph6(b"A_").unwrap(), named::clique(2).unwrap());
        assert_eq!(decode_graph6(b"Bw").unwrap(), named::clique(3).unwrap());
    }

    #[test]
    fn decode_rejects_bad_input() {
        assert!(matches!(
            decode_graph6(b"A"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6(b"A_\n"),
            Err(Error::Parse { offset: 2, .. })
        ));
        // nonzero padding: K_2 payload with a stray low bit (32|1 = '`')
        assert!(matches!(
            decode_graph6(&[65, 63 + 33]),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(decode_graph6(b">>graph6<<A_").is_err());
        assert!(decode_graph6(b"").is_err());
        assert!(decode_graph6(b"~??").is_err());
    }

    #[test]
    fn encode_rejects_large_order() {
        let g = Graph::edgeless(63);
        assert!(matches!(encode_graph6(&g), Err(Error::Capacity(_))));
        assert!(encode_graph6(&Graph::edgeless(62)).is_ok());
    }

    #[test]
    fn dot_roundtrip() {
        let g = disjoint_union([&named::wheel(5).unwrap(), &Graph::edgeless(2)]);
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph {"));
        assert_eq!(from_dot(&dot).unwrap(), g);
        // isolated vertices survive
        let e = Graph::edgeless(3);
        assert_eq!(from_dot(&to_dot(&e)).unwrap(), e);
    }
}
