//! graph6 codec.
//!
//! Vertex count `N(n)` is one byte `n + 63` for `n < 63`, otherwise `126` followed by
//! three 6-bit groups (big-endian) for `n <= 258047`. The body packs the upper triangle
//! column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, into 6-bit groups, zero-padded,
//! each group written as `value + 63`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &[u8] = b">>graph6<<";

/// Largest order representable with the 4-byte size prefix.
pub const MAX_ORDER: usize = 258_047;

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Graph6(msg.into()))
}

fn body_len(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Decodes a single graph6 record. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return err(format!(
            "byte {} at offset {} outside [63, 126]",
            bytes[pos], pos
        ));
    }
    let (n, body) = match bytes {
        [] => return err("empty record"),
        [126, 126, ..] => return err("orders above 258047 are not supported"),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return err("truncated size prefix");
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return err("non-canonical size prefix");
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let expected = body_len(n);
    if body.len() < expected {
        return err(format!(
            "truncated record: expected {expected} body bytes, found {}",
            body.len()
        ));
    }
    if body.len() > expected {
        return err(format!(
            "trailing data: expected {expected} body bytes, found {}",
            body.len()
        ));
    }

    let mut adj = vec![Vec::new(); n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if group & (1 << (5 - k % 6)) != 0 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - 63) & mask != 0 {
            return err("nonzero padding bits");
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

/// Encodes `g` as a graph6 record (no header, no newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return err(format!("order {n} exceeds {MAX_ORDER}"));
    }
    Ok(encode_unbounded(g))
}

/// graph6 encoding that also uses the 8-byte size prefix for orders above [`MAX_ORDER`].
pub(crate) fn encode_unbounded(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + body_len(n));
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= MAX_ORDER {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_codec() {
        assert_eq!(parse_graph6(b"Bw").unwrap(), triangle());
        assert_eq!(parse_graph6(b">>graph6<<Bw").unwrap(), triangle());
        assert_eq!(parse_graph6(b"Bw\n").unwrap(), triangle());
        assert_eq!(emit_graph6(&triangle()).unwrap(), "Bw");
    }

    #[test]
    fn small_orders() {
        assert_eq!(emit_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(b"?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn known_encoding() {
        // five vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6(b"DQc").unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_graph6(b"B\x1f"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"Bww"), Err(Error::Graph6(_))));
        // padding bit set: 'B' + 0b111111 + 63
        assert!(matches!(parse_graph6(b"B~"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"~~??????"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::Graph6(_))));
    }

    #[test]
    fn long_prefix() {
        let n = 70;
        let g = Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let text = emit_graph6(&g).unwrap();
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }
}
