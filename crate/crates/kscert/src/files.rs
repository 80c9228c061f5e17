//! Text formats for vectors, octad catalogs, hypergraphs, and proofs.
//!
//! All formats are line oriented; blank lines and lines starting with '#'
//! are ignored when reading. Writers emit deterministic output.

use std::fmt;
use std::fmt::Write as _;

use crate::engine::{ContextHypergraph, EngineError};
use crate::linalg::{ExactVector, Projector};
use crate::state_proof::StateSpecificProof;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    /// A line failed to parse; carries the 1-based line number and content.
    BadLine { line: usize, content: String },
    /// A count header disagreed with the following lines.
    CountMismatch { expected: usize, found: usize },
    /// An index referenced a missing entry.
    IndexOutOfRange { line: usize, index: usize },
    /// Hypergraph reconstruction failed.
    Engine(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::BadLine { line, content } => {
                write!(f, "line {line}: cannot parse {content:?}")
            }
            FormatError::CountMismatch { expected, found } => {
                write!(f, "count mismatch: header says {expected}, found {found}")
            }
            FormatError::IndexOutOfRange { line, index } => {
                write!(f, "line {line}: index {index} out of range")
            }
            FormatError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// One vector per line, components space separated.
pub fn write_vectors(rays: &[ExactVector], header: &str) -> String {
    let mut out = String::new();
    if !header.is_empty() {
        for line in header.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    for r in rays {
        let _ = writeln!(out, "{r}");
    }
    out
}

/// Parses a vector file; canonicalizes every line.
pub fn parse_vectors(text: &str) -> Result<Vec<ExactVector>, FormatError> {
    content_lines(text)
        .map(|(n, l)| {
            l.parse().map_err(|_| FormatError::BadLine {
                line: n,
                content: l.to_string(),
            })
        })
        .collect()
}

/// Catalog format: a `rays N` header with N vector lines establishing the
/// index mapping, then an `octads M` header with M lines of space
/// separated ray indices.
pub fn write_catalog(rays: &[ExactVector], octads: &[Vec<usize>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rays {}", rays.len());
    for r in rays {
        let _ = writeln!(out, "{r}");
    }
    let _ = writeln!(out, "octads {}", octads.len());
    for o in octads {
        let line: Vec<String> = o.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parses the catalog format back into rays and octad index lists.
pub fn parse_catalog(text: &str) -> Result<(Vec<ExactVector>, Vec<Vec<usize>>), FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or(FormatError::CountMismatch {
        expected: 1,
        found: 0,
    })?;
    let ray_count: usize = header
        .strip_prefix("rays ")
        .and_then(|s| s.parse().ok())
        .ok_or(FormatError::BadLine {
            line: n,
            content: header.to_string(),
        })?;
    let mut rays = Vec::with_capacity(ray_count);
    for _ in 0..ray_count {
        let (n, l) = lines.next().ok_or(FormatError::CountMismatch {
            expected: ray_count,
            found: rays.len(),
        })?;
        rays.push(l.parse().map_err(|_| FormatError::BadLine {
            line: n,
            content: l.to_string(),
        })?);
    }
    let (n, header) = lines.next().ok_or(FormatError::CountMismatch {
        expected: 1,
        found: 0,
    })?;
    let octad_count: usize = header
        .strip_prefix("octads ")
        .and_then(|s| s.parse().ok())
        .ok_or(FormatError::BadLine {
            line: n,
            content: header.to_string(),
        })?;
    let mut octads = Vec::with_capacity(octad_count);
    for _ in 0..octad_count {
        let (n, l) = lines.next().ok_or(FormatError::CountMismatch {
            expected: octad_count,
            found: octads.len(),
        })?;
        let ids: Vec<usize> = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| FormatError::BadLine {
                    line: n,
                    content: l.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        for &i in &ids {
            if i >= rays.len() {
                return Err(FormatError::IndexOutOfRange { line: n, index: i });
            }
        }
        octads.push(ids);
    }
    Ok((rays, octads))
}

/// Hypergraph exchange format: projector definitions (rank and the span
/// vectors separated by ';'), then one context per line as projector
/// indices.
pub fn write_hypergraph(h: &ContextHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "projectors {}", h.projector_count());
    for p in h.projectors() {
        let span: Vec<String> = p.span().iter().map(ExactVector::to_string).collect();
        let _ = writeln!(out, "rank {} : {}", p.rank(), span.join(" ; "));
    }
    let _ = writeln!(out, "contexts {}", h.context_count());
    for c in h.contexts() {
        let line: Vec<String> = c.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parses the hypergraph exchange format. Contexts are re-validated as
/// resolutions of identity.
pub fn parse_hypergraph(text: &str) -> Result<ContextHypergraph, FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or(FormatError::CountMismatch {
        expected: 1,
        found: 0,
    })?;
    let proj_count: usize = header
        .strip_prefix("projectors ")
        .and_then(|s| s.parse().ok())
        .ok_or(FormatError::BadLine {
            line: n,
            content: header.to_string(),
        })?;
    let mut projectors: Vec<Projector> = Vec::with_capacity(proj_count);
    for _ in 0..proj_count {
        let (n, l) = lines.next().ok_or(FormatError::CountMismatch {
            expected: proj_count,
            found: projectors.len(),
        })?;
        let bad = || FormatError::BadLine {
            line: n,
            content: l.to_string(),
        };
        let rest = l.strip_prefix("rank ").ok_or_else(bad)?;
        let (rank_str, span_str) = rest.split_once(':').ok_or_else(bad)?;
        let rank: usize = rank_str.trim().parse().map_err(|_| bad())?;
        let span: Vec<ExactVector> = span_str
            .split(';')
            .map(|v| v.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if span.len() != rank {
            return Err(bad());
        }
        projectors.push(Projector::new(span).map_err(|e| FormatError::Engine(e.to_string()))?);
    }
    let (n, header) = lines.next().ok_or(FormatError::CountMismatch {
        expected: 1,
        found: 0,
    })?;
    let ctx_count: usize = header
        .strip_prefix("contexts ")
        .and_then(|s| s.parse().ok())
        .ok_or(FormatError::BadLine {
            line: n,
            content: header.to_string(),
        })?;
    let mut contexts = Vec::with_capacity(ctx_count);
    for _ in 0..ctx_count {
        let (n, l) = lines.next().ok_or(FormatError::CountMismatch {
            expected: ctx_count,
            found: contexts.len(),
        })?;
        let ids: Vec<usize> = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| FormatError::BadLine {
                    line: n,
                    content: l.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        for &i in &ids {
            if i >= projectors.len() {
                return Err(FormatError::IndexOutOfRange { line: n, index: i });
            }
        }
        contexts.push(ids);
    }
    ContextHypergraph::from_projector_table(projectors, contexts)
        .map_err(|e: EngineError| FormatError::Engine(e.to_string()))
}

/// Proof format: the state line, an indexed ray table, then one line per
/// context listing signed ray indices like `+0 -5 +7 +12`.
pub fn write_proof(proof: &StateSpecificProof) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "state {}", proof.state());
    let rays: Vec<ExactVector> = proof.ray_multiplicities().into_keys().collect();
    let _ = writeln!(out, "rays {}", rays.len());
    for r in &rays {
        let _ = writeln!(out, "{r}");
    }
    let _ = writeln!(out, "contexts {}", proof.contexts().len());
    for ctx in proof.contexts() {
        let entries: Vec<String> = ctx
            .rays()
            .iter()
            .zip(ctx.signs())
            .map(|(r, &s)| {
                let idx = rays.binary_search(r).expect("proof ray is in the table");
                format!("{}{}", if s > 0 { '+' } else { '-' }, idx)
            })
            .collect();
        let _ = writeln!(out, "{}", entries.join(" "));
    }
    out
}
