//! Exact integer/rational linear algebra over small dimensions.
//!
//! Everything here is exact: vectors have integer components, projection
//! matrices are rational with a single reduced denominator, and equality
//! means structural equality of reduced forms. No floating point anywhere.

use std::fmt;
use std::str::FromStr;

/// Errors from vector and projector construction or comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// A vector had no nonzero component (or no components at all).
    ZeroVector,
    /// Two operands had different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// An operation required the norm-2 convention (squared norm 4).
    NonCanonicalNorm { norm_sq: i64 },
    /// A projector span contained a non-orthogonal pair.
    NonOrthogonalSpan,
    /// A vector component string could not be parsed.
    BadVectorLiteral(String),
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::ZeroVector => write!(f, "vector has no nonzero component"),
            LinalgError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            LinalgError::NonCanonicalNorm { norm_sq } => {
                write!(f, "vector is not in the norm-2 convention (squared norm {norm_sq}, expected 4)")
            }
            LinalgError::NonOrthogonalSpan => write!(f, "projector span is not mutually orthogonal"),
            LinalgError::BadVectorLiteral(s) => write!(f, "cannot parse vector literal {s:?}"),
        }
    }
}

impl std::error::Error for LinalgError {}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An integer-component vector standing for a ray (its sign class).
///
/// Construction canonicalizes: components are divided by their gcd, a
/// dimension-8 unit vector is rescaled so the squared norm is exactly 4,
/// and the first nonzero component is made positive. Two vectors that
/// differ by a nonzero rational scale therefore compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactVector {
    components: Vec<i64>,
}

impl ExactVector {
    /// Canonicalizes `components` into a ray representative.
    pub fn new(components: Vec<i64>) -> Result<Self, LinalgError> {
        let mut c = components;
        let g = c.iter().fold(0, |acc, &x| gcd(acc, x));
        if g == 0 {
            return Err(LinalgError::ZeroVector);
        }
        for x in &mut c {
            *x /= g;
        }
        // dimension-8 convention: every ray is written with squared norm 4
        if c.len() == 8 && c.iter().map(|x| x * x).sum::<i64>() == 1 {
            for x in &mut c {
                *x *= 2;
            }
        }
        if c.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            for x in &mut c {
                *x = -*x;
            }
        }
        Ok(ExactVector { components: c })
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[i64] {
        &self.components
    }

    pub fn norm_sq(&self) -> i64 {
        self.components.iter().map(|x| x * x).sum()
    }

    /// Exact integer dot product. Symmetric; errors on dimension mismatch.
    pub fn inner(&self, other: &ExactVector) -> Result<i64, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn is_orthogonal_to(&self, other: &ExactVector) -> Result<bool, LinalgError> {
        Ok(self.inner(other)? == 0)
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for ExactVector {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, LinalgError> {
        let components: Vec<i64> = s
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| LinalgError::BadVectorLiteral(s.to_string()))?;
        if components.is_empty() {
            return Err(LinalgError::BadVectorLiteral(s.to_string()));
        }
        ExactVector::new(components)
    }
}

/// Classification of the angle between two norm-2 rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleClass {
    /// Inner product 0.
    Orthogonal,
    /// |inner| = 2, i.e. cosine +-1/2 (a 60 or 120 degree angle).
    HalfAngle,
    /// Anything else (in particular a vector against itself, |inner| = 4).
    Other,
}

/// Classifies the angle between two canonical norm-2 vectors.
///
/// Both inputs must have squared norm exactly 4.
pub fn angle_class(u: &ExactVector, v: &ExactVector) -> Result<AngleClass, LinalgError> {
    for w in [u, v] {
        let n = w.norm_sq();
        if n != 4 {
            return Err(LinalgError::NonCanonicalNorm { norm_sq: n });
        }
    }
    Ok(match u.inner(v)?.abs() {
        0 => AngleClass::Orthogonal,
        2 => AngleClass::HalfAngle,
        _ => AngleClass::Other,
    })
}

/// A rational matrix stored as an integer matrix with one positive reduced
/// denominator. This is the canonical representation used for projector
/// equality and hashing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectionMatrix {
    dim: usize,
    num: Vec<i64>,
    den: i64,
}

impl ProjectionMatrix {
    pub fn zero(dim: usize) -> Self {
        ProjectionMatrix {
            dim,
            num: vec![0; dim * dim],
            den: 1,
        }
    }

    /// Sum of v v^T / |v|^2 over the span vectors.
    pub fn from_span(span: &[ExactVector]) -> Self {
        assert!(!span.is_empty());
        let dim = span[0].dim();
        let mut den = 1i64;
        for v in span {
            den = den / gcd(den, v.norm_sq()) * v.norm_sq();
        }
        let mut num = vec![0i64; dim * dim];
        for v in span {
            let scale = den / v.norm_sq();
            let c = v.components();
            for i in 0..dim {
                for j in 0..dim {
                    num[i * dim + j] += scale * c[i] * c[j];
                }
            }
        }
        let mut m = ProjectionMatrix { dim, num, den };
        m.reduce();
        m
    }

    fn reduce(&mut self) {
        let g = self.num.iter().fold(self.den, |acc, &x| gcd(acc, x));
        if g > 1 {
            for x in &mut self.num {
                *x /= g;
            }
            self.den /= g;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add(&self, other: &ProjectionMatrix) -> ProjectionMatrix {
        assert_eq!(self.dim, other.dim);
        let den = self.den / gcd(self.den, other.den) * other.den;
        let (ls, rs) = (den / self.den, den / other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| ls * a + rs * b)
            .collect();
        let mut m = ProjectionMatrix {
            dim: self.dim,
            num,
            den,
        };
        m.reduce();
        m
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let want = if i == j { self.den } else { 0 };
                if self.num[i * self.dim + j] != want {
                    return false;
                }
            }
        }
        true
    }
}

/// A projection operator given by an orthogonal integer span.
///
/// Equality and hashing go through the exact rational projection matrix,
/// so two projectors are equal exactly when they project onto the same
/// subspace, regardless of how the span was listed or signed.
#[derive(Debug, Clone)]
pub struct Projector {
    span: Vec<ExactVector>,
    matrix: ProjectionMatrix,
}

impl Projector {
    /// Builds a projector from a mutually orthogonal, nonempty span.
    pub fn new(span: Vec<ExactVector>) -> Result<Self, LinalgError> {
        if span.is_empty() {
            return Err(LinalgError::ZeroVector);
        }
        let dim = span[0].dim();
        for v in &span {
            if v.dim() != dim {
                return Err(LinalgError::DimensionMismatch {
                    left: dim,
                    right: v.dim(),
                });
            }
        }
        for i in 0..span.len() {
            for j in (i + 1)..span.len() {
                if span[i].inner(&span[j])? != 0 {
                    return Err(LinalgError::NonOrthogonalSpan);
                }
            }
        }
        let mut span = span;
        span.sort();
        let matrix = ProjectionMatrix::from_span(&span);
        Ok(Projector { span, matrix })
    }

    /// Rank-1 projector onto a single ray.
    pub fn ray(v: ExactVector) -> Self {
        Projector::new(vec![v]).expect("single nonzero vector always spans a projector")
    }

    /// Rank-2 projector onto the plane of two orthogonal rays.
    pub fn plane(u: ExactVector, v: ExactVector) -> Result<Self, LinalgError> {
        Projector::new(vec![u, v])
    }

    pub fn rank(&self) -> usize {
        self.span.len()
    }

    pub fn dim(&self) -> usize {
        self.span[0].dim()
    }

    pub fn span(&self) -> &[ExactVector] {
        &self.span
    }

    pub fn matrix(&self) -> &ProjectionMatrix {
        &self.matrix
    }

    /// True when every span vector of `self` is orthogonal to every span
    /// vector of `other`.
    pub fn is_orthogonal_to(&self, other: &Projector) -> Result<bool, LinalgError> {
        for u in &self.span {
            for v in &other.span {
                if u.inner(v)? != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl PartialEq for Projector {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for Projector {}

impl std::hash::Hash for Projector {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

/// A list of projectors intended as a resolution of identity.
///
/// The type itself does not enforce validity; [`is_resolution_of_identity`]
/// answers it exactly, returning `false` on malformed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    members: Vec<Projector>,
}

impl Context {
    pub fn new(members: Vec<Projector>) -> Self {
        Context { members }
    }

    pub fn members(&self) -> &[Projector] {
        &self.members
    }

    pub fn rank_sum(&self) -> usize {
        self.members.iter().map(Projector::rank).sum()
    }
}

/// True iff the exact rational sum of the member projection matrices is the
/// identity. For rank-1 members this is equivalent to "the spans form an
/// orthogonal basis"; mutual orthogonality of the members follows for free.
pub fn is_resolution_of_identity(context: &Context) -> bool {
    let members = context.members();
    let Some(first) = members.first() else {
        return false;
    };
    let dim = first.dim();
    if members.iter().any(|p| p.dim() != dim) {
        return false;
    }
    let mut sum = ProjectionMatrix::zero(dim);
    for p in members {
        sum = sum.add(p.matrix());
    }
    sum.is_identity()
}
