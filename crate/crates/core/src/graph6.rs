//! graph6 text encoding, short form (`n <= 62`).
//!
//! Byte 0 is `n + 63`. The upper triangle of the adjacency matrix is read
//! column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits
//! per byte most-significant first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_SHORT_ORDER: usize = 62;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::invalid(format!(
            "graph6 short form holds at most {MAX_SHORT_ORDER} vertices, got {n}"
        )));
    }
    let mut bytes = Vec::with_capacity(1 + payload_len(n));
    bytes.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

/// Parses one graph6 line. Surrounding whitespace is ignored; an optional
/// `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 { offset, reason: reason.to_string() };

    let &first = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, "byte outside 63..126"));
    }
    if first == 126 {
        return Err(err(0, "long-form order (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let need = payload_len(n);
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside 63..126"));
        }
    }
    if bytes.len() < 1 + need {
        return Err(err(bytes.len(), &format!("truncated payload: expected {need} byte(s)")));
    }
    if bytes.len() > 1 + need {
        return Err(err(1 + need, "trailing bytes after payload"));
    }

    let payload = &bytes[1..];
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
