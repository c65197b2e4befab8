//! graph6 encoding, short form only (`n <= 62`).
//!
//! One byte `n + 63` for the order, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian six bits per byte, each byte offset by 63, zero padded.

use super::{FormatError, Graph};

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 short form holds at most 62 vertices");
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + OFFSET) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

/// Parses one graph6 line (surrounding whitespace ignored). Errors carry
/// line number 1; callers reading files rewrite it.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim().as_bytes();
    let err = |m: String| FormatError::new(1, m);
    let (&first, body) = bytes.split_first().ok_or_else(|| err("empty graph6 string".into()))?;
    if let Some(&bad) = bytes.iter().find(|b| !(OFFSET..=126).contains(*b)) {
        return Err(err(format!("byte {bad:#04x} outside the graph6 range 63..=126")));
    }
    if first == 126 {
        return Err(err("graph6 long form (n > 62) is not supported".into()));
    }
    let n = (first - OFFSET) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(err(format!(
            "graph6 for n={n} needs {want} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::discrete(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}
