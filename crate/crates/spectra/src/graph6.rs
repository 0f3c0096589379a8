//! graph6 codec.
//!
//! The format packs the upper adjacency triangle in column-major order
//! (pairs `(0,1), (0,2), (1,2), (0,3), ...`) into big-endian 6-bit groups,
//! each stored as `value + 63`, zero-padded to a byte boundary. The vertex
//! count is a single byte `n + 63` for `n <= 62`, `~` plus three bytes for
//! `n <= 258047`, and `~~` plus six bytes up to `2^36 - 1`.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte offset {offset}: byte {byte:#04x} outside the graph6 range [63, 126]")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte offset {offset}: truncated vertex-count header")]
    TruncatedHeader { offset: usize },
    #[error("byte offset {offset}: body holds {found} bytes, encoding for n = {n} needs {expected}")]
    BodyLength { offset: usize, n: u64, expected: u64, found: usize },
    #[error("byte offset {offset}: nonzero padding bits in final byte")]
    NonzeroPadding { offset: usize },
    #[error("vertex count {n} exceeds this build's addressable size")]
    Unrepresentable { n: u64 },
}

const OFFSET: u8 = 63;
const LONG_PREFIX: u8 = 126;

/// Decodes one graph6 string. Errors carry the byte offset they were
/// detected at.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, body_start) = parse_order(bytes)?;
    let n_usize =
        usize::try_from(n).map_err(|_| Graph6Error::Unrepresentable { n: n as u64 })?;

    let bits: u128 = n * (n.saturating_sub(1)) as u128 / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - body_start;
    if found as u128 != expected {
        return Err(Graph6Error::BodyLength {
            offset: body_start,
            n: n as u64,
            expected: expected.try_into().unwrap_or(u64::MAX),
            found,
        });
    }

    let mut edges = Vec::new();
    let mut bit_index: u128 = 0;
    let mut pair_iter = upper_triangle_pairs(n_usize);
    for (k, &b) in bytes[body_start..].iter().enumerate() {
        let offset = body_start + k;
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
        let group = b - OFFSET;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if bit_index < bits {
                let (i, j) = pair_iter.next().expect("pair iterator matches bit count");
                if bit == 1 {
                    edges.push((i, j));
                }
            } else if bit != 0 {
                return Err(Graph6Error::NonzeroPadding { offset });
            }
            bit_index += 1;
        }
    }
    // Column-major pair order is not lexicographic; sort before building.
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n_usize, edges))
}

/// Encodes a graph as graph6; `parse_graph6` reconstructs it exactly.
pub fn encode_graph6(g: &Graph) -> String {
    let mut out = Vec::new();
    let n = g.n() as u64;
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG_PREFIX);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        assert!(n < (1u64 << 36), "graph6 encodes at most 2^36 - 1 vertices");
        out.push(LONG_PREFIX);
        out.push(LONG_PREFIX);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for (i, j) in upper_triangle_pairs(g.n()) {
        group = (group << 1) | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(group + OFFSET);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

fn parse_order(bytes: &[u8]) -> Result<(u128, usize), Graph6Error> {
    let check = |offset: usize| -> Result<u64, Graph6Error> {
        let b = *bytes.get(offset).ok_or(Graph6Error::TruncatedHeader { offset })?;
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
        Ok((b - OFFSET) as u64)
    };
    if bytes[0] != LONG_PREFIX {
        let n = check(0)?;
        return Ok((n as u128, 1));
    }
    if bytes.len() >= 2 && bytes[1] == LONG_PREFIX {
        let mut n = 0u64;
        for offset in 2..8 {
            n = (n << 6) | check(offset)?;
        }
        Ok((n as u128, 8))
    } else {
        let mut n = 0u64;
        for offset in 1..4 {
            n = (n << 6) | check(offset)?;
        }
        Ok((n as u128, 4))
    }
}

/// Upper-triangle pairs in graph6 column-major order:
/// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`
pub fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn parses_single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn parses_empty_five_vertex_graph() {
        // n = 5 needs ceil(10/6) = 2 body bytes; "D??" is the empty graph.
        let g = parse_graph6("D??").unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
    }

    #[test]
    fn rejects_short_body() {
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::BodyLength { offset: 1, n: 5, expected: 2, found: 1 })
        );
    }

    #[test]
    fn rejects_long_body() {
        assert_eq!(
            parse_graph6("D???"),
            Err(Graph6Error::BodyLength { offset: 1, n: 5, expected: 2, found: 3 })
        );
    }

    #[test]
    fn rejects_byte_out_of_range() {
        assert_eq!(
            parse_graph6("C "),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
    }

    #[test]
    fn rejects_nonzero_padding() {
        // n = 2 uses one bit; 'O' = 0b010000 sets a padding bit.
        assert_eq!(parse_graph6("AO"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(parse_graph6("A_").unwrap().m(), 1);
    }

    #[test]
    fn encodes_known_strings() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode_graph6(&k4), "C~");
        let k1 = Graph::from_edge_list(1, []).unwrap();
        assert_eq!(encode_graph6(&k1), "@");
        let k13 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(encode_graph6(&k13), "Cs");
        let c5 = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(encode_graph6(&c5), "Dhc");
    }

    #[test]
    fn long_form_order_round_trips() {
        let g = Graph::from_edge_list(63, [(0, 62), (10, 20)]).unwrap();
        let enc = encode_graph6(&g);
        assert_eq!(&enc[..1], "~");
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn rejects_truncated_long_header() {
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::TruncatedHeader { offset: 2 }));
    }
}
