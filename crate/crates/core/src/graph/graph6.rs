//! graph6 codec (the nauty/Brendan McKay interchange format).
//!
//! Header `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order, six bits per printable byte (value + 63), zero padded.

use super::{Graph, Pair};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: usize = (1 << 36) - 1;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        assert!(n <= LARGE_MAX, "graph too large for graph6");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Returns `(n, header_len)`.
fn decode_n(bytes: &[u8]) -> Result<(usize, usize)> {
    let six = |b: u8| -> usize { (b - 63) as usize };
    match bytes {
        [] => Err(malformed("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte size header"));
            }
            let n = rest[..6].iter().fold(0, |acc, &b| acc << 6 | six(b));
            if n <= MEDIUM_MAX {
                return Err(malformed("non-minimal size header"));
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte size header"));
            }
            let n = rest[..3].iter().fold(0, |acc, &b| acc << 6 | six(b));
            if n <= SMALL_MAX {
                return Err(malformed("non-minimal size header"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((six(*b), 1)),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for hi in 1..n {
        for lo in 0..hi {
            acc = acc << 1 | g.has_edge(lo, hi) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.first() {
        if b == b':' || b == b';' {
            return Err(malformed("sparse6 input is not supported"));
        }
        if b == b'&' {
            return Err(malformed("digraph6 input is not supported"));
        }
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!("byte {pos} outside the printable range 63..=126")));
    }
    let (n, start) = decode_n(bytes)?;
    let body = &bytes[start..];
    let total = n * n.saturating_sub(1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for (i, &b) in body.iter().enumerate() {
        let value = b - 63;
        for k in 0..6 {
            let set = value >> (5 - k) & 1 == 1;
            let idx = i * 6 + k;
            if idx >= total {
                if set {
                    return Err(malformed("non-zero padding bits"));
                }
                continue;
            }
            if set {
                edges.push(Pair::from_index(idx));
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, total);
    Ok(Graph::from_checked(n, edges.into_iter().collect()))
}
