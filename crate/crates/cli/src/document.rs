//! Trace documents and coloring files.

use anyhow::{bail, Context};
use p5gem::solver::ReductionTrace;
use p5gem::{Coloring, Graph};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub n: usize,
    pub m: usize,
    pub degree_histogram: Vec<usize>,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        Self { n: g.n(), m: g.edge_count(), degree_histogram: g.degree_histogram() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub schema_version: u32,
    pub fingerprint: Fingerprint,
    pub palette: u32,
    pub trace: ReductionTrace,
}

impl TraceDocument {
    pub fn new(g: &Graph, trace: ReductionTrace) -> Self {
        Self { schema_version: SCHEMA_VERSION, fingerprint: Fingerprint::of(g), palette: trace.palette, trace }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace documents always serialize")
    }

    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        let doc: TraceDocument = serde_json::from_str(text).context("malformed trace document")?;
        if doc.schema_version != SCHEMA_VERSION {
            bail!("unsupported trace schema version {} (expected {SCHEMA_VERSION})", doc.schema_version);
        }
        Ok(doc)
    }

    pub fn check_graph(&self, g: &Graph) -> anyhow::Result<()> {
        let actual = Fingerprint::of(g);
        if actual != self.fingerprint {
            bail!("trace was recorded for a different graph ({:?}, got {:?})", self.fingerprint, actual);
        }
        Ok(())
    }
}

/// `palette K` followed by one `vertex color` line per vertex.
pub fn write_coloring(c: &Coloring) -> String {
    let mut out = format!("palette {}\n", c.palette);
    for (v, col) in c.colors.iter().enumerate() {
        out += &format!("{v} {col}\n");
    }
    out
}

/// Reads the format written by [`write_coloring`]; the palette line is optional
/// and defaults to the largest color used. `#` starts a comment.
pub fn parse_coloring(text: &str, n: usize) -> anyhow::Result<Coloring> {
    let mut colors = vec![0u32; n];
    let mut palette = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let bad = || format!("coloring line {}: {raw:?}", i + 1);
        match toks.as_slice() {
            ["palette", k] => palette = Some(k.parse().with_context(bad)?),
            [v, c] => {
                let v: usize = v.parse().with_context(bad)?;
                let c: u32 = c.parse().with_context(bad)?;
                if v >= n {
                    bail!("{}: vertex outside 0..{n}", bad());
                }
                if colors[v] != 0 {
                    bail!("{}: vertex colored twice", bad());
                }
                colors[v] = c;
            }
            _ => bail!("{}", bad()),
        }
    }
    let palette = palette.unwrap_or_else(|| colors.iter().copied().max().unwrap_or(0));
    Ok(Coloring { colors, palette })
}
