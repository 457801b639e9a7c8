//! graph6 and plain edge-list text encodings.
//!
//! graph6: `N(n)` followed by the upper triangle `x(0,1) x(0,2) x(1,2) x(0,3) ...`
//! (column order), packed six bits per byte, each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: unexpected byte 0x{byte:02x}")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: input ends early ({expected} data bytes expected)")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: {extra} trailing bytes")]
    Trailing { offset: usize, extra: usize },
    #[error("byte {offset}: nonzero padding bits")]
    Padding { offset: usize },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line ending are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadByte {
                offset: base + i,
                byte: b,
            });
        }
    }
    let (n, header_len) = decode_order(bytes, base)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let data_len = pairs.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < data_len {
        return Err(ParseError::Truncated {
            offset: base + bytes.len(),
            expected: data_len,
        });
    }
    if data.len() > data_len {
        return Err(ParseError::Trailing {
            offset: base + header_len + data_len,
            extra: data.len() - data_len,
        });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = data[data_len - 1] - 63;
        let used = pairs % 6;
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(ParseError::Padding {
                offset: base + header_len + data_len - 1,
            });
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize), ParseError> {
    let word = |from: usize, count: usize| -> Result<usize, ParseError> {
        if bytes.len() < from + count {
            return Err(ParseError::Truncated {
                offset: base + bytes.len(),
                expected: count,
            });
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    if bytes[0] != 126 {
        Ok(((bytes[0] - 63) as usize, 1))
    } else if bytes.len() > 1 && bytes[1] == 126 {
        Ok((word(2, 6)?, 8))
    } else {
        Ok((word(1, 3)?, 4))
    }
}

/// Encodes `g` as graph6 without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 0-based ids. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let [n, m] = parse_pair(hline, header)?;
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for (line, body) in lines {
        let [u, v] = parse_pair(line, body)?;
        g.add_edge(u, v).map_err(|e| ParseError::EdgeList {
            line,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(ParseError::EdgeList {
            line: hline,
            message: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], ParseError> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    let bad = |message: String| ParseError::EdgeList { line, message };
    if fields.len() != 2 {
        return Err(bad(format!("expected two integers, got {:?}", body)));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| bad(format!("not a non-negative integer: {s:?}")))
    };
    Ok([num(fields[0])?, num(fields[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
