//! graph6 codec: header-less ASCII encoding of simple undirected graphs by
//! upper-triangle bit packing. Short form for n <= 62, the 4-byte long form
//! for n in {63, 64}. Parse errors carry the byte offset of the offending
//! byte.

use super::{Graph, GraphError};
use thiserror::Error;

/// The interchange format is capped at 64 vertices even though in-memory
/// graphs may be larger.
pub const GRAPH6_MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed header at byte {offset}: {reason}")]
    BadHeader { offset: usize, reason: String },
    #[error("vertex count {n} exceeds {GRAPH6_MAX_VERTICES} (header ends at byte {offset})")]
    TooLarge { n: usize, offset: usize },
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    BadByte { byte: u8, offset: usize },
    #[error("truncated bit vector: need {expected} payload bytes, found {found} (offset {offset})")]
    Truncated { expected: usize, found: usize, offset: usize },
    #[error("trailing data at byte {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    BadPadding { offset: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph; errors when the order exceeds the format cap.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n, offset: 0 });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let nbits = n * (n - 1) / 2;
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if nbits % 6 != 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a single graph6 line.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = parse_order(bytes)?;
    if n > GRAPH6_MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n, offset: pos });
    }
    if n == 0 {
        return Err(Graph6Error::BadHeader { offset: 0, reason: "graph6 order must be at least 1".into() });
    }
    let nbits = n * (n - 1) / 2;
    let payload = nbits.div_ceil(6);
    if bytes.len() - pos < payload {
        return Err(Graph6Error::Truncated { expected: payload, found: bytes.len() - pos, offset: bytes.len() });
    }
    if bytes.len() - pos > payload {
        return Err(Graph6Error::TrailingData { offset: pos + payload });
    }
    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for _ in 0..payload {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { byte: b, offset: pos });
        }
        let val = b - 63;
        for t in (0..6).rev() {
            let bit = (val >> t) & 1;
            if bit_index < nbits {
                let (i, j) = pairs.next().unwrap();
                if bit == 1 {
                    g.add_edge_mut(i, j)?;
                }
            } else if bit == 1 {
                return Err(Graph6Error::BadPadding { offset: pos });
            }
            bit_index += 1;
        }
        pos += 1;
    }
    Ok(g)
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let b0 = bytes[0];
    if b0 == 126 {
        // Long form: '~' then three 6-bit groups; '~~' starts the 8-byte
        // form whose orders are far beyond the cap.
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::TooLarge { n: usize::MAX, offset: 1 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: bytes.len(), reason: "long-form header needs 4 bytes".into() });
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::BadHeader { offset: 1 + k, reason: format!("byte {b:#04x} out of range") });
            }
            n = (n << 6) | (b - 63) as usize;
        }
        Ok((n, 4))
    } else if (63..=125).contains(&b0) {
        Ok(((b0 - 63) as usize, 1))
    } else {
        Err(Graph6Error::BadHeader { offset: 0, reason: format!("byte {b0:#04x} out of range") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, is_isomorphic};

    #[test]
    fn single_vertex() {
        let g = from_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(to_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn c5_round_trip_isomorphic() {
        let c5 = Graph::cycle(5).unwrap();
        let s = to_graph6(&c5).unwrap();
        let back = from_graph6(&s).unwrap();
        assert!(is_isomorphic(&c5, &back));
        assert_eq!(classify(&back).shortest_odd_cycle, Some(5));
    }

    #[test]
    fn known_encodings() {
        // 5 vertices, edges {02, 04, 13, 34} encodes as "DQc"; K4 is "C~".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        assert_eq!(from_graph6("C~").unwrap().m(), 6);
    }

    #[test]
    fn long_form_63_and_64() {
        for n in [63usize, 64] {
            let g = Graph::path(n).unwrap();
            let s = to_graph6(&g).unwrap();
            assert_eq!(s.as_bytes()[0], 126);
            let back = from_graph6(&s).unwrap();
            assert_eq!(back.n(), n);
            assert_eq!(back.m(), n - 1);
            assert_eq!(to_graph6(&back).unwrap(), s);
        }
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        match from_graph6("\x1f") {
            Err(Graph6Error::BadHeader { offset: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        // n = 65 via long form (~ + 3 bytes): over the cap.
        let s = format!("~{}{}{}", (63u8) as char, (64u8) as char, (64u8) as char);
        match from_graph6(&s) {
            Err(Graph6Error::TooLarge { n: 65, offset: 4 }) => {}
            other => panic!("{other:?}"),
        }
        // Truncated payload of C5.
        let full = to_graph6(&Graph::cycle(5).unwrap()).unwrap();
        match from_graph6(&full[..full.len() - 1]) {
            Err(Graph6Error::Truncated { .. }) => {}
            other => panic!("{other:?}"),
        }
        // Trailing garbage.
        match from_graph6(&format!("{full}A")) {
            Err(Graph6Error::TrailingData { .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
