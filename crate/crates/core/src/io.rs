//! graph6 and plain edge-list formats.
//!
//! graph6: one size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (x01, x02, x12, x03, ...), six bits per
//! byte, each byte offset by 63, zero padded. Only `n <= 64` is accepted.

use crate::bits::{bit, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

/// Encodes `g` as canonical graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

pub fn emit_graph6_string(g: &Graph) -> String {
    String::from_utf8(emit_graph6(g)).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = text.len();
    while end > start && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let body = &text[start..end];
    let at = |i: usize| start + i;

    if body.is_empty() {
        return Err(Error::at_byte(at(0), "empty graph6 record"));
    }
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::at_byte(
            at(i),
            format!("byte {:#04x} outside 63..=126", body[i]),
        ));
    }

    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        return Err(Error::capacity("vertex count", MAX_VERTICES, 258_048));
    } else {
        if body.len() < 4 {
            return Err(Error::at_byte(at(body.len()), "truncated size field"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(Error::at_byte(
                at(0),
                format!("non-canonical size field for n={n}"),
            ));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", MAX_VERTICES, n));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(Error::at_byte(
            at(body.len()),
            format!("truncated adjacency data: {have} of {need} bytes"),
        ));
    }
    if have > need {
        return Err(Error::at_byte(
            at(pos + need),
            "trailing bytes after adjacency data",
        ));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    let data = &body[pos..];
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::at_byte(at(pos + need - 1), "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    Graph::from_adjacency(&adj)
}

/// Parses a whitespace-separated edge list. Lines hold `u v` with 0-based
/// vertex indices; `#` starts a comment; the first content line may be
/// `n <count>` to fix the vertex count. Duplicate edges are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_vertex: Option<usize> = None;
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_content {
                return Err(Error::at_line(
                    line_no,
                    "vertex count header must come first",
                ));
            }
            seen_content = true;
            if tokens.len() != 2 {
                return Err(Error::at_line(line_no, "expected `n <count>`"));
            }
            let count = parse_index(tokens[1], line_no)?;
            if count > MAX_VERTICES {
                return Err(Error::at_line(
                    line_no,
                    format!("vertex count {count} exceeds {MAX_VERTICES}"),
                ));
            }
            declared = Some(count);
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(Error::at_line(
                line_no,
                format!("expected `u v`, got {line:?}"),
            ));
        }
        let u = parse_index(tokens[0], line_no)?;
        let v = parse_index(tokens[1], line_no)?;
        let limit = declared.unwrap_or(MAX_VERTICES);
        for x in [u, v] {
            if x >= limit {
                return Err(Error::at_line(
                    line_no,
                    format!("vertex {x} out of range (limit {limit})"),
                ));
            }
        }
        if u == v {
            return Err(Error::at_line(line_no, format!("loop at vertex {u}")));
        }
        max_vertex = Some(max_vertex.map_or(u.max(v), |m: usize| m.max(u).max(v)));
        edges.push((u, v));
    }

    let n = declared.unwrap_or_else(|| max_vertex.map_or(0, |m| m + 1));
    Graph::from_edges(n, edges)
}

fn parse_index(token: &str, line_no: usize) -> Result<usize> {
    if token.starts_with('-') {
        return Err(Error::at_line(line_no, format!("negative index {token}")));
    }
    token
        .parse::<usize>()
        .map_err(|_| Error::at_line(line_no, format!("not a vertex index: {token:?}")))
}

/// Writes `g` as an edge list with an `n` header.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
