//! graph6 encoding as published with nauty (`formats.txt`).

use super::bits::AdjMatrix;
use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

pub(super) fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
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
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

pub(super) fn decode(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6("byte outside 63..=126".into()));
    }
    let (n, mut pos) = match bytes {
        [] => return Err(GraphError::Graph6("empty string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(GraphError::Graph6("truncated size field".into()));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6("truncated size field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bit_len = n * n.saturating_sub(1) / 2;
    let expected = pos + bit_len.div_ceil(6);
    if bytes.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} bytes for {n} vertices, found {}",
            bytes.len()
        )));
    }
    let mut m = AdjMatrix::new(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k == bit_len {
                break 'outer;
            }
            let byte = bytes[pos] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                m.set(i, j);
            }
            k += 1;
            if k % 6 == 0 {
                pos += 1;
            }
        }
    }
    Ok(m.to_graph())
}
