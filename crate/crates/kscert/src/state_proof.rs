//! State-specific reduction of a parity certificate and verification of
//! the resulting proof.
//!
//! Given a pure state ray, every certificate context is cut down to the
//! members not orthogonal to the state (and not the state itself); each
//! surviving context expands twice the state exactly as a signed integer
//! combination of its members. An odd number of surviving contexts with
//! all-even member multiplicities rules out a noncontextual assignment
//! exactly as in the state-independent case.

use std::collections::BTreeMap;
use std::fmt;

use crate::engine::{search_assignment, ContextHypergraph, EngineError};
use crate::linalg::{Context, ExactVector, LinalgError, Projector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofError {
    /// A kept member's expansion coefficient was not +1 or -1.
    CoefficientNotUnit { context: usize, ray: String },
    /// A surviving context's kept members do not expand twice the state.
    SpanExcludesState { context: usize },
    /// No context survived the reduction.
    EmptyReduction,
    /// Underlying exact-arithmetic failure.
    Linalg(LinalgError),
    /// Hypergraph-level failure during verification.
    Engine(EngineError),
}

impl fmt::Display for ProofError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofError::CoefficientNotUnit { context, ray } => {
                write!(f, "context {context}: ray [{ray}] has a non-unit expansion coefficient")
            }
            ProofError::SpanExcludesState { context } => {
                write!(f, "context {context}: kept members do not span the state")
            }
            ProofError::EmptyReduction => write!(f, "no context survives the reduction"),
            ProofError::Linalg(e) => write!(f, "{e}"),
            ProofError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ProofError {}

impl From<LinalgError> for ProofError {
    fn from(e: LinalgError) -> Self {
        ProofError::Linalg(e)
    }
}

impl From<EngineError> for ProofError {
    fn from(e: EngineError) -> Self {
        ProofError::Engine(e)
    }
}

/// One surviving context: rays sorted canonically with aligned expansion
/// signs, plus the index of the source context it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofContext {
    rays: Vec<ExactVector>,
    signs: Vec<i8>,
    source: usize,
}

impl ProofContext {
    pub fn rays(&self) -> &[ExactVector] {
        &self.rays
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// The (ray, sign) entries as a comparison-friendly set.
    pub fn signed_set(&self) -> Vec<(ExactVector, i8)> {
        self.rays
            .iter()
            .cloned()
            .zip(self.signs.iter().copied())
            .collect()
    }
}

/// A state ray together with the surviving signed contexts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpecificProof {
    state: ExactVector,
    contexts: Vec<ProofContext>,
}

impl StateSpecificProof {
    pub fn state(&self) -> &ExactVector {
        &self.state
    }

    pub fn contexts(&self) -> &[ProofContext] {
        &self.contexts
    }

    /// Occurrence counts of each distinct ray across the contexts.
    pub fn ray_multiplicities(&self) -> BTreeMap<ExactVector, usize> {
        let mut m = BTreeMap::new();
        for c in &self.contexts {
            for r in c.rays() {
                *m.entry(r.clone()).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn distinct_ray_count(&self) -> usize {
        self.ray_multiplicities().len()
    }

    /// (context count, distinct ray count).
    pub fn shape(&self) -> (usize, usize) {
        (self.contexts.len(), self.distinct_ray_count())
    }

    /// The reduced contexts as a partial hypergraph over rank-1 projectors.
    pub fn hypergraph(&self) -> Result<ContextHypergraph, EngineError> {
        let contexts: Vec<Context> = self
            .contexts
            .iter()
            .map(|c| Context::new(c.rays().iter().cloned().map(Projector::ray).collect()))
            .collect();
        ContextHypergraph::from_partial_contexts(&contexts)
    }
}

/// Reduces certificate contexts by a known pure state.
///
/// Per context, members equal to the state or orthogonal to it are
/// discarded; contexts losing every member are dropped. Each kept member
/// carries the coefficient inner(member, state)/2, which must land in
/// {+1, -1}, and the kept members must satisfy the exact identity
/// 2*state = sum of sign_i * member_i.
pub fn reduce_by_state(
    contexts: &[Vec<ExactVector>],
    state: &ExactVector,
) -> Result<StateSpecificProof, ProofError> {
    let dim = state.dim();
    let mut out = Vec::new();
    for (ci, ctx) in contexts.iter().enumerate() {
        let mut kept: Vec<(ExactVector, i8)> = Vec::new();
        for v in ctx {
            if v == state {
                continue;
            }
            let ip = v.inner(state)?;
            if ip == 0 {
                continue;
            }
            if ip.abs() != 2 {
                return Err(ProofError::CoefficientNotUnit {
                    context: ci,
                    ray: v.to_string(),
                });
            }
            kept.push((v.clone(), (ip / 2) as i8));
        }
        if kept.is_empty() {
            continue;
        }
        let mut acc = vec![0i64; dim];
        for (v, s) in &kept {
            for (a, &x) in acc.iter_mut().zip(v.components()) {
                *a += i64::from(*s) * x;
            }
        }
        let target: Vec<i64> = state.components().iter().map(|&x| 2 * x).collect();
        if acc != target {
            return Err(ProofError::SpanExcludesState { context: ci });
        }
        kept.sort_by(|a, b| a.0.cmp(&b.0));
        out.push(ProofContext {
            rays: kept.iter().map(|(v, _)| v.clone()).collect(),
            signs: kept.iter().map(|(_, s)| *s).collect(),
            source: ci,
        });
    }
    if out.is_empty() {
        return Err(ProofError::EmptyReduction);
    }
    Ok(StateSpecificProof {
        state: state.clone(),
        contexts: out,
    })
}

/// Reason codes for a failed proof verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofDefect {
    EvenContextCount(usize),
    NonOrthogonalContext(usize),
    ContextContainsIneligibleRay(usize),
    BrokenExpansion(usize),
    OddRayMultiplicity(String),
    AssignmentExists,
    Structural(String),
}

impl fmt::Display for ProofDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofDefect::EvenContextCount(n) => write!(f, "context count {n} is even"),
            ProofDefect::NonOrthogonalContext(i) => {
                write!(f, "context {i} is not mutually orthogonal")
            }
            ProofDefect::ContextContainsIneligibleRay(i) => {
                write!(f, "context {i} contains the state or a ray orthogonal to it")
            }
            ProofDefect::BrokenExpansion(i) => {
                write!(f, "context {i} does not expand twice the state with its signs")
            }
            ProofDefect::OddRayMultiplicity(r) => {
                write!(f, "ray [{r}] appears an odd number of times")
            }
            ProofDefect::AssignmentExists => {
                write!(f, "a noncontextual assignment satisfies the reduced contexts")
            }
            ProofDefect::Structural(s) => write!(f, "{s}"),
        }
    }
}

/// Verification verdict with the complete defect list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofVerdict {
    pub defects: Vec<ProofDefect>,
}

impl ProofVerdict {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Checks every proof invariant and then delegates unsatisfiability to the
/// assignment search on the reduced hypergraph. Never errors; every
/// violation is reported as a defect.
pub fn verify_proof(proof: &StateSpecificProof) -> ProofVerdict {
    let mut defects = Vec::new();
    let state = proof.state();
    if proof.contexts().len().is_multiple_of(2) {
        defects.push(ProofDefect::EvenContextCount(proof.contexts().len()));
    }
    for (i, ctx) in proof.contexts().iter().enumerate() {
        let rays = ctx.rays();
        let mut orthogonal = true;
        'pairs: for a in 0..rays.len() {
            for b in (a + 1)..rays.len() {
                match rays[a].inner(&rays[b]) {
                    Ok(0) => {}
                    Ok(_) => {
                        orthogonal = false;
                        break 'pairs;
                    }
                    Err(e) => {
                        defects.push(ProofDefect::Structural(e.to_string()));
                        return ProofVerdict { defects };
                    }
                }
            }
        }
        if !orthogonal {
            defects.push(ProofDefect::NonOrthogonalContext(i));
        }
        let mut eligible = true;
        for v in rays {
            match v.inner(state) {
                Ok(0) => eligible = false,
                Ok(_) if v == state => eligible = false,
                Ok(_) => {}
                Err(e) => {
                    defects.push(ProofDefect::Structural(e.to_string()));
                    return ProofVerdict { defects };
                }
            }
        }
        if !eligible {
            defects.push(ProofDefect::ContextContainsIneligibleRay(i));
        }
        let mut acc = vec![0i64; state.dim()];
        for (v, &s) in rays.iter().zip(ctx.signs()) {
            for (a, &x) in acc.iter_mut().zip(v.components()) {
                *a += i64::from(s) * x;
            }
        }
        let target: Vec<i64> = state.components().iter().map(|&x| 2 * x).collect();
        if acc != target {
            defects.push(ProofDefect::BrokenExpansion(i));
        }
    }
    for (ray, mult) in proof.ray_multiplicities() {
        if mult % 2 != 0 {
            defects.push(ProofDefect::OddRayMultiplicity(ray.to_string()));
        }
    }
    match proof.hypergraph() {
        Ok(h) => {
            if search_assignment(&h).is_some() {
                defects.push(ProofDefect::AssignmentExists);
            }
        }
        Err(e) => defects.push(ProofDefect::Structural(e.to_string())),
    }
    ProofVerdict { defects }
}

/// Shape census of reductions by every covered state of several
/// certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSurvey {
    /// Certificates surveyed.
    pub certificates: usize,
    /// Total (certificate, state) reductions performed.
    pub reductions: usize,
    /// Reductions that passed full verification.
    pub valid: usize,
    /// Histogram of (context count, distinct ray count) shapes.
    pub shape_counts: BTreeMap<(usize, usize), usize>,
}

/// Reduces every certificate by each of its covered states and verifies
/// each resulting proof.
pub fn orbit_survey(
    rays: &[ExactVector],
    certificates: &[Vec<Vec<usize>>],
) -> Result<OrbitSurvey, ProofError> {
    let mut survey = OrbitSurvey {
        certificates: certificates.len(),
        reductions: 0,
        valid: 0,
        shape_counts: BTreeMap::new(),
    };
    for cert in certificates {
        let contexts: Vec<Vec<ExactVector>> = cert
            .iter()
            .map(|ctx| ctx.iter().map(|&v| rays[v].clone()).collect())
            .collect();
        let mut covered: Vec<usize> = cert.iter().flatten().copied().collect();
        covered.sort_unstable();
        covered.dedup();
        for &s in &covered {
            let proof = reduce_by_state(&contexts, &rays[s])?;
            survey.reductions += 1;
            if verify_proof(&proof).passed() {
                survey.valid += 1;
            }
            *survey.shape_counts.entry(proof.shape()).or_insert(0) += 1;
        }
    }
    Ok(survey)
}
