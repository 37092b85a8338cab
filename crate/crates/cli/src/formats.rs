//! Reading and writing graphs as DIMACS, plain edge lists and graph6.

use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use p5gem::Graph;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Graph(#[from] p5gem::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dimacs,
    Edgelist,
    Graph6,
}

impl Format {
    /// Guesses the format from a file extension, defaulting to an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs") => Format::Dimacs,
            Some("g6" | "graph6") => Format::Graph6,
            _ => Format::Edgelist,
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::Edgelist => parse_edgelist(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => write_dimacs(g),
        Format::Edgelist => write_edgelist(g),
        Format::Graph6 => write_graph6(g) + "\n",
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn number<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} {tok:?}")))
}

/// `p edge n m` followed by `e u v` lines with 1-based vertices; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut declared = 0usize;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => return Err(syntax(line, format!("unsupported problem type {other:?}"))),
                }
                n = Some(number::<usize>(toks.next(), line, "vertex count")?);
                declared = number(toks.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| syntax(line, "edge before the problem line"))?;
                let u: usize = number(toks.next(), line, "endpoint")?;
                let v: usize = number(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(line, format!("endpoint outside 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| syntax(0, "no problem line"))?;
    if edges.len() != declared {
        return Err(syntax(0, format!("problem line declares {declared} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges)?)
}

/// `n m` header followed by `m` lines `u v` with 0-based vertices; `#` starts a comment.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = rows.next().ok_or_else(|| syntax(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    let n: usize = number(toks.next(), line, "vertex count")?;
    let m: usize = number(toks.next(), line, "edge count")?;
    if toks.next().is_some() {
        return Err(syntax(line, "header must be `n m`"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, row) in rows {
        let mut toks = row.split_whitespace();
        let u: usize = number(toks.next(), line, "endpoint")?;
        let v: usize = number(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(syntax(line, "expected two endpoints"));
        }
        if u >= n || v >= n {
            return Err(syntax(line, format!("endpoint outside 0..{n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(syntax(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6("characters must lie in the printable range 63..=126".into()));
    }
    let digit = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(ParseError::Graph6("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (rest[..6].iter().fold(0, |a, &b| a << 6 | digit(b)), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (rest[..3].iter().fold(0, |a, &b| a << 6 | digit(b)), &rest[3..]),
        [126, ..] => return Err(ParseError::Graph6("truncated size field".into())),
        [b, rest @ ..] => (digit(*b), rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(ParseError::Graph6(format!("expected {} data bytes for n = {n}, found {}", pairs.div_ceil(6), body.len())));
    }
    let bit = |k: usize| digit(body[k / 6]) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out += &format!("e {} {}\n", u + 1, v + 1);
    }
    out
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out += &format!("{u} {v}\n");
    }
    out
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8]
    } else if n <= 258_047 {
        vec![63, (n >> 12 & 63) as u8, (n >> 6 & 63) as u8, (n & 63) as u8]
    } else {
        let mut v = vec![63, 63];
        v.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
        v
    };
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}
