//! Graph serialization: graph6, edge lists, and JSON.
//!
//! graph6 is the standard ASCII encoding: a header byte `n + 63` for
//! `n ≤ 62` (the `'~'`-prefixed extended header above that), then the upper
//! triangle of the adjacency matrix read column by column, packed big-endian
//! into 6-bit groups, each emitted as `group + 63`. Parsing is strict —
//! out-of-range bytes, truncated or oversized payloads, and nonzero padding
//! bits are all rejected with the offending byte offset. The optional
//! `>>graph6<<` prefix is accepted on input and never emitted.
//!
//! The edge list format is line-oriented UTF-8: one `u v` pair per line,
//! `#` starts a comment line, and an optional leading `n=<count>` line
//! declares the vertex count (needed for isolated vertices). Serialization
//! always emits the `n=` line so every graph round-trips label-exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_N};

/// Wire formats understood by [`parse_graph`] and [`serialize_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edgelist,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "graph6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::Edgelist),
            "json" => Ok(Format::Json),
            other => Err(Error::Invalid(format!("unknown format '{other}'"))),
        }
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => from_graph6(text),
        Format::Edgelist => from_edgelist(text),
        Format::Json => from_json(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Edgelist => to_edgelist(g),
        Format::Json => to_json(g),
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    const PREFIX: &[u8] = b">>graph6<<";
    let (data, base) = if text.starts_with(PREFIX) {
        (&text[PREFIX.len()..], PREFIX.len())
    } else {
        (text, 0)
    };
    // Tolerate one trailing line terminator.
    let data = data
        .strip_suffix(b"\r\n")
        .or_else(|| data.strip_suffix(b"\n"))
        .unwrap_or(data);

    if data.is_empty() {
        return Err(parse_err(base, "empty graph6 input"));
    }

    // Header: n ≤ 62 in one byte, else '~' + 3 bytes (18 bits), else
    // '~~' + 6 bytes (36 bits). Anything above MAX_N is rejected after
    // decoding, so oversized headers still get a precise error.
    let sextet = |i: usize| -> Result<u64> {
        let b = *data
            .get(i)
            .ok_or_else(|| parse_err(base + data.len(), "truncated graph6 header"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte {b} outside graph6 range 63..=126")));
        }
        Ok(u64::from(b - 63))
    };

    let (n, header_len) = if data[0] != b'~' {
        (sextet(0)?, 1)
    } else if data.get(1) != Some(&b'~') {
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        (n, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(i)?;
        }
        (n, 8)
    };
    let n = usize::try_from(n).expect("fits: at most 36 bits");
    if n > MAX_N {
        return Err(Error::TooManyVertices { n, max: MAX_N });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &data[header_len..];
    if body.len() < need {
        return Err(parse_err(
            base + data.len(),
            format!("truncated graph6 body: need {need} bytes, have {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(parse_err(base + header_len + need, "trailing bytes after graph6 body"));
    }

    let bit = |i: usize| -> Result<bool> {
        let b = body[i / 6];
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                base + header_len + i / 6,
                format!("byte {b} outside graph6 range 63..=126"),
            ));
        }
        Ok((b - 63) >> (5 - i % 6) & 1 == 1)
    };

    let mut g = Graph::new(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k)? {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    for pad in bits..need * 6 {
        if bit(pad)? {
            return Err(parse_err(
                base + header_len + pad / 6,
                "nonzero padding bits in final graph6 byte",
            ));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // MAX_N keeps us inside the 3-byte extended header.
        out.push(b'~');
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("all bytes are printable ASCII")
}

// ---------------------------------------------------------------------------
// edge list
// ---------------------------------------------------------------------------

pub fn from_edgelist(text: &[u8]) -> Result<Graph> {
    let s = std::str::from_utf8(text)
        .map_err(|e| parse_err(e.valid_up_to(), "edge list is not valid UTF-8"))?;

    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut offset = 0;
    let mut saw_content = false;
    for line in s.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        if !saw_content {
            saw_content = true;
            if let Some(rest) = body.strip_prefix("n=") {
                let n: usize = rest.trim().parse().map_err(|_| {
                    parse_err(line_start, format!("bad vertex count in '{body}'"))
                })?;
                if n > MAX_N {
                    return Err(Error::TooManyVertices { n, max: MAX_N });
                }
                declared_n = Some(n);
                continue;
            }
        }
        let mut tokens = body.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(parse_err(
                    line_start,
                    format!("expected 'u v' on edge list line, got '{body}'"),
                ))
            }
        };
        let parse_vertex = |tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| parse_err(line_start, format!("bad vertex number '{tok}'")))
        };
        let (u, v) = (parse_vertex(a)?, parse_vertex(b)?);
        if u == v {
            return Err(Error::Invalid(format!("self-loop '{u} {v}' in edge list")));
        }
        if edges.iter().any(|&(x, y)| (x, y) == (u.min(v), u.max(v))) {
            return Err(Error::Invalid(format!("duplicate edge '{u} {v}' in edge list")));
        }
        edges.push((u.min(v), u.max(v)));
    }

    let n = match declared_n {
        Some(n) => {
            if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
                return Err(Error::VertexOutOfRange { v: u.max(v), n });
            }
            n
        }
        None => edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0),
    };
    Graph::from_edges(n, &edges)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn from_json(text: &[u8]) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_slice(text)?;
    if doc.n > MAX_N {
        return Err(Error::TooManyVertices { n: doc.n, max: MAX_N });
    }
    for &(u, v) in &doc.edges {
        let worst = u.max(v);
        if worst >= doc.n {
            return Err(Error::VertexOutOfRange { v: worst, n: doc.n });
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop [{u}, {v}] in JSON edges")));
        }
    }
    let edges: Vec<(usize, usize)> =
        doc.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    Graph::from_edges(doc.n, &edges)
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson { n: g.n(), edges: g.edges() };
    serde_json::to_string(&doc).expect("serialization of plain data cannot fail")
}
