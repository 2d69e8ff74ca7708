//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedEdgeList(msg.into())
}

fn parse_line(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| malformed(format!("line {lineno}: missing {what}")))?;
        tok.parse()
            .map_err(|_| malformed(format!("line {lineno}: {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(malformed(format!("line {lineno}: trailing fields")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines.next().ok_or_else(|| malformed("missing `n m` header"))?;
    let (n, m) = parse_line(header, lineno)?;
    let pairs = lines
        .map(|(i, l)| parse_line(l, i))
        .collect::<Result<Vec<_>>>()?;
    if pairs.len() != m {
        return Err(malformed(format!(
            "header announces {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::new_strict(n, pairs)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for p in g.edges().iter() {
        out.push_str(&format!("{} {}\n", p.lo(), p.hi()));
    }
    out
}
