//! Orthogonality graph over a ray set, octad enumeration, symmetry
//! statistics, and the excluded-quadruple census.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::engine::{is_valid_certificate, ContextHypergraph, EngineError, ParityCertificate};
use crate::linalg::{ExactVector, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// Two input vectors denote the same ray.
    DuplicateRay(String),
    /// The bitmask graph supports at most 64 vertices.
    TooManyVertices(usize),
    /// Underlying exact-arithmetic failure.
    Linalg(LinalgError),
    /// Hypergraph-level failure while grading quadruples.
    Engine(EngineError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::DuplicateRay(s) => write!(f, "duplicate ray [{s}]"),
            CatalogError::TooManyVertices(n) => {
                write!(f, "graph supports at most 64 vertices, got {n}")
            }
            CatalogError::Linalg(e) => write!(f, "{e}"),
            CatalogError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<LinalgError> for CatalogError {
    fn from(e: LinalgError) -> Self {
        CatalogError::Linalg(e)
    }
}

impl From<EngineError> for CatalogError {
    fn from(e: EngineError) -> Self {
        CatalogError::Engine(e)
    }
}

/// Vertices are canonical rays; two vertices are adjacent exactly when
/// their inner product is zero. Adjacency is stored as one u64 bitmask
/// per vertex.
#[derive(Debug, Clone)]
pub struct OrthogonalityGraph {
    rays: Vec<ExactVector>,
    adj: Vec<u64>,
}

/// Builds the graph, rejecting duplicate rays.
pub fn build_graph(rays: Vec<ExactVector>) -> Result<OrthogonalityGraph, CatalogError> {
    let n = rays.len();
    if n > 64 {
        return Err(CatalogError::TooManyVertices(n));
    }
    let mut seen = BTreeSet::new();
    for r in &rays {
        if !seen.insert(r.clone()) {
            return Err(CatalogError::DuplicateRay(r.to_string()));
        }
    }
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if rays[i].inner(&rays[j])? == 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(OrthogonalityGraph { rays, adj })
}

impl OrthogonalityGraph {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn rays(&self) -> &[ExactVector] {
        &self.rays
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && (self.adj[i] >> j) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn neighbors_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }
}

/// All octads of a graph, each stored as sorted vertex indices, with the
/// per-vertex membership lists.
#[derive(Debug, Clone)]
pub struct OctadCatalog {
    octads: Vec<Vec<usize>>,
    membership: Vec<Vec<usize>>,
}

impl OctadCatalog {
    pub fn octads(&self) -> &[Vec<usize>] {
        &self.octads
    }

    pub fn membership(&self) -> &[Vec<usize>] {
        &self.membership
    }

    pub fn len(&self) -> usize {
        self.octads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.octads.is_empty()
    }

    pub fn contains(&self, octad: &[usize]) -> bool {
        let mut key: Vec<usize> = octad.to_vec();
        key.sort_unstable();
        self.octads.binary_search(&key).is_ok()
    }

    pub fn position(&self, octad: &[usize]) -> Option<usize> {
        let mut key: Vec<usize> = octad.to_vec();
        key.sort_unstable();
        self.octads.binary_search(&key).ok()
    }
}

/// Enumerates every clique whose size equals the ray dimension (octads in
/// dimension 8) by bitmask backtracking over ascending vertices. Output is
/// lexicographically sorted and independent of input order beyond the
/// vertex indexing itself.
pub fn enumerate_octads(graph: &OrthogonalityGraph) -> OctadCatalog {
    let size = graph
        .rays()
        .first()
        .map(ExactVector::dim)
        .unwrap_or(0);
    let n = graph.len();
    let mut octads = Vec::new();
    let mut clique = Vec::new();
    let all: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    descend(graph, size, all, &mut clique, &mut octads);
    let mut membership = vec![Vec::new(); n];
    for (oi, o) in octads.iter().enumerate() {
        for &v in o {
            membership[v].push(oi);
        }
    }
    OctadCatalog { octads, membership }
}

fn descend(
    graph: &OrthogonalityGraph,
    size: usize,
    cand: u64,
    clique: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if clique.len() == size {
        out.push(clique.clone());
        return;
    }
    // not enough candidates left to finish a clique
    if clique.len() + (cand.count_ones() as usize) < size {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        clique.push(v);
        // only extend upward, intersected with v's neighborhood
        let higher = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
        descend(graph, size, rest & graph.neighbors_mask(v) & higher, clique, out);
        clique.pop();
    }
}

/// Independent octad oracle: plain recursive extension over sorted
/// vertices, testing orthogonality with `inner` directly. Shares no code
/// with the bitmask enumerator or the graph adjacency.
pub fn naive_octads(rays: &[ExactVector]) -> Result<Vec<Vec<usize>>, CatalogError> {
    let size = rays.first().map(ExactVector::dim).unwrap_or(0);
    let mut out = Vec::new();
    let mut acc = Vec::new();
    naive_extend(rays, size, 0, &mut acc, &mut out)?;
    Ok(out)
}

fn naive_extend(
    rays: &[ExactVector],
    size: usize,
    from: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), CatalogError> {
    if acc.len() == size {
        out.push(acc.clone());
        return Ok(());
    }
    for v in from..rays.len() {
        let mut ok = true;
        for &u in acc.iter() {
            if rays[u].inner(&rays[v])? != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            acc.push(v);
            naive_extend(rays, size, v + 1, acc, out)?;
            acc.pop();
        }
    }
    Ok(())
}

/// Aggregate orthogonality statistics of a ray set partitioned into
/// defining blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryStats {
    /// Shared vertex degree, when every vertex has the same one.
    pub uniform_degree: Option<usize>,
    /// Shared (own-block, sorted other-block) neighbor split, when uniform.
    pub uniform_split: Option<(usize, Vec<usize>)>,
    /// Unordered ray pairs with inner product 0.
    pub orthogonal_pairs: usize,
    /// Unordered ray pairs with |inner| = 2.
    pub half_angle_pairs: usize,
    /// Unordered ray pairs in neither class.
    pub other_pairs: usize,
}

/// Computes degrees, the per-block degree decomposition, and the angle
/// census over all unordered pairs.
pub fn symmetry_stats(
    graph: &OrthogonalityGraph,
    blocks: &[Vec<usize>],
) -> Result<SymmetryStats, CatalogError> {
    let n = graph.len();
    let mut block_of = vec![usize::MAX; n];
    for (bi, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = bi;
        }
    }
    let mut degrees = BTreeSet::new();
    let mut splits = BTreeSet::new();
    for i in 0..n {
        degrees.insert(graph.degree(i));
        let mut counts = vec![0usize; blocks.len()];
        for j in 0..n {
            if graph.adjacent(i, j) {
                counts[block_of[j]] += 1;
            }
        }
        let own = counts[block_of[i]];
        let mut others: Vec<usize> = counts
            .iter()
            .enumerate()
            .filter(|(bi, _)| *bi != block_of[i])
            .map(|(_, &c)| c)
            .collect();
        others.sort_unstable();
        splits.insert((own, others));
    }
    let mut orthogonal_pairs = 0;
    let mut half_angle_pairs = 0;
    let mut other_pairs = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            match graph.rays()[i].inner(&graph.rays()[j])?.abs() {
                0 => orthogonal_pairs += 1,
                2 => half_angle_pairs += 1,
                _ => other_pairs += 1,
            }
        }
    }
    Ok(SymmetryStats {
        uniform_degree: (degrees.len() == 1).then(|| *degrees.iter().next().expect("nonempty")),
        uniform_split: (splits.len() == 1)
            .then(|| splits.iter().next().expect("nonempty").clone()),
        orthogonal_pairs,
        half_angle_pairs,
        other_pairs,
    })
}

/// Four excluded vertices together with the octads avoiding all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleSelection {
    /// The excluded vertex indices, ascending.
    pub excluded: [usize; 4],
    /// Catalog indices of the octads containing none of the four.
    pub retained_octads: Vec<usize>,
    /// Whether the four vertices lie in four different defining blocks.
    pub distinct_blocks: bool,
    /// Whether the retained octads form a valid parity certificate.
    pub certificate_valid: bool,
}

impl QuadrupleSelection {
    /// Selections meeting the full conjunction: distinct defining blocks
    /// and a valid retained-octad parity certificate.
    pub fn is_certificate_grade(&self) -> bool {
        self.distinct_blocks && self.certificate_valid
    }
}

/// Counts of mutually orthogonal quadruples under successively stronger
/// property conjunctions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleCensus {
    /// Mutually orthogonal 4-subsets.
    pub orthogonal: usize,
    /// ... additionally lying in four distinct defining blocks.
    pub orthogonal_distinct_blocks: usize,
    /// ... instead retaining exactly 11 octads (the selections below).
    pub selections: Vec<QuadrupleSelection>,
    /// Selections that are certificate grade.
    pub certificate_grade: usize,
}

/// Enumerates every mutually orthogonal 4-subset whose retained octads
/// number exactly 11, grading each selection by the distinct-block and
/// certificate-validity properties, and counting the weaker conjunctions.
///
/// The hypergraph `h` must carry the catalog's octads as its contexts in
/// catalog order (see [`ContextHypergraph::from_ray_contexts`]).
pub fn enumerate_quadruples(
    graph: &OrthogonalityGraph,
    catalog: &OctadCatalog,
    blocks: &[Vec<usize>],
    h: &ContextHypergraph,
) -> Result<QuadrupleCensus, CatalogError> {
    let n = graph.len();
    let mut block_of = vec![usize::MAX; n];
    for (bi, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = bi;
        }
    }
    let octad_masks: Vec<u64> = catalog
        .octads()
        .iter()
        .map(|o| o.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();

    let mut orthogonal = 0usize;
    let mut distinct = 0usize;
    let mut selections = Vec::new();
    let mut grade = 0usize;
    for a in 0..n {
        for b in (a + 1)..n {
            if !graph.adjacent(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if !(graph.adjacent(a, c) && graph.adjacent(b, c)) {
                    continue;
                }
                for d in (c + 1)..n {
                    if !(graph.adjacent(a, d) && graph.adjacent(b, d) && graph.adjacent(c, d)) {
                        continue;
                    }
                    orthogonal += 1;
                    let quad_mask = (1u64 << a) | (1 << b) | (1 << c) | (1 << d);
                    let blocks_hit: BTreeSet<usize> =
                        [a, b, c, d].iter().map(|&v| block_of[v]).collect();
                    let distinct_blocks = blocks_hit.len() == 4;
                    if distinct_blocks {
                        distinct += 1;
                    }
                    let retained: Vec<usize> = octad_masks
                        .iter()
                        .enumerate()
                        .filter(|(_, &m)| m & quad_mask == 0)
                        .map(|(i, _)| i)
                        .collect();
                    if retained.len() != 11 {
                        continue;
                    }
                    let cert = ParityCertificate::new(retained.clone());
                    let certificate_valid = is_valid_certificate(h, &cert);
                    if distinct_blocks && certificate_valid {
                        grade += 1;
                    }
                    selections.push(QuadrupleSelection {
                        excluded: [a, b, c, d],
                        retained_octads: retained,
                        distinct_blocks,
                        certificate_valid,
                    });
                }
            }
        }
    }
    Ok(QuadrupleCensus {
        orthogonal,
        orthogonal_distinct_blocks: distinct,
        selections,
        certificate_grade: grade,
    })
}

/// Per-vertex octad membership counts as a histogram.
pub fn membership_histogram(catalog: &OctadCatalog) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for m in catalog.membership() {
        *h.entry(m.len()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray(s: &str) -> ExactVector {
        s.parse().unwrap()
    }

    #[test]
    fn build_graph_rejects_duplicate_rays() {
        let rays = vec![ray("2 0 0 0 0 0 0 0"), ray("-1 0 0 0 0 0 0 0")];
        assert!(matches!(
            build_graph(rays),
            Err(CatalogError::DuplicateRay(_))
        ));
    }

    #[test]
    fn four_dimensional_toy_catalog() {
        let rays: Vec<ExactVector> = [
            "2 0 0 0", "0 2 0 0", "0 0 2 0", "0 0 0 2", "1 1 1 1", "1 1 -1 -1", "1 -1 1 -1",
            "1 -1 -1 1",
        ]
        .iter()
        .map(|s| ray(s))
        .collect();
        let g = build_graph(rays.clone()).unwrap();
        let catalog = enumerate_octads(&g);
        // standard basis, the Hadamard basis, and the mixed completions
        assert!(catalog.contains(&[0, 1, 2, 3]));
        assert!(catalog.contains(&[4, 5, 6, 7]));
        let naive = naive_octads(&rays).unwrap();
        assert_eq!(catalog.octads(), naive.as_slice());
    }

    #[test]
    fn enumeration_is_input_order_insensitive_as_sets() {
        let rays: Vec<ExactVector> = [
            "2 0 0 0", "0 2 0 0", "0 0 2 0", "0 0 0 2", "1 1 1 1", "1 1 -1 -1", "1 -1 1 -1",
            "1 -1 -1 1",
        ]
        .iter()
        .map(|s| ray(s))
        .collect();
        let g1 = build_graph(rays.clone()).unwrap();
        let c1 = enumerate_octads(&g1);
        let mut rev = rays.clone();
        rev.reverse();
        let g2 = build_graph(rev.clone()).unwrap();
        let c2 = enumerate_octads(&g2);
        let as_sets = |cat: &OctadCatalog, rs: &[ExactVector]| -> BTreeSet<BTreeSet<ExactVector>> {
            cat.octads()
                .iter()
                .map(|o| o.iter().map(|&v| rs[v].clone()).collect())
                .collect()
        };
        assert_eq!(as_sets(&c1, &rays), as_sets(&c2, &rev));
    }
}
