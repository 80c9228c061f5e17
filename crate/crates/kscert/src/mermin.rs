//! Commuting sets of real Pauli words and their joint eigenbases.
//!
//! The construction starts from the n-qubit family of words that are Z on
//! every qubit except an even number of X substitutions. For n = 3 these are
//! the four operators ZZZ, ZXX, XZX, XXZ: they pairwise commute, their
//! product is minus the identity, and each one extends to a complete
//! commuting set whose joint eigenbasis is an orthogonal octad in R^8.

use std::fmt;
use std::str::FromStr;

use crate::linalg::{Context, ExactVector, Projector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MerminError {
    /// Words in one operation had different qubit counts.
    LengthMismatch { left: usize, right: usize },
    /// An operator set must contain at least one word.
    EmptySet,
    /// Two words of an operator set anticommute.
    NonCommutingPair { left: String, right: String },
    /// The product of the set is not plus or minus the identity.
    ProductNotScalar,
    /// A joint eigenspace has dimension greater than one.
    IncompleteSet,
    /// The construction needs at least two qubits.
    QubitCountTooSmall(usize),
    /// A word literal contained a character outside {I, X, Z} or no letters.
    BadWordLiteral(String),
}

impl fmt::Display for MerminError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MerminError::LengthMismatch { left, right } => {
                write!(f, "word length mismatch: {left} vs {right}")
            }
            MerminError::EmptySet => write!(f, "operator set is empty"),
            MerminError::NonCommutingPair { left, right } => {
                write!(f, "words {left} and {right} do not commute")
            }
            MerminError::ProductNotScalar => {
                write!(f, "product of the set is not proportional to the identity")
            }
            MerminError::IncompleteSet => {
                write!(f, "set is not complete: some joint eigenspace has dimension > 1")
            }
            MerminError::QubitCountTooSmall(n) => {
                write!(f, "need at least 2 qubits, got {n}")
            }
            MerminError::BadWordLiteral(s) => write!(f, "cannot parse Pauli word {s:?}"),
        }
    }
}

impl std::error::Error for MerminError {}

/// Single-qubit symbol of a real Pauli word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    I,
    X,
    Z,
}

/// A signed tensor product of {I, X, Z} single-qubit operators.
///
/// All words here are real and square to the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliWord {
    sign: i8,
    letters: Vec<Axis>,
}

impl PauliWord {
    pub fn new(sign: i8, letters: Vec<Axis>) -> Self {
        assert!(sign == 1 || sign == -1);
        assert!(!letters.is_empty());
        PauliWord { sign, letters }
    }

    pub fn positive(letters: Vec<Axis>) -> Self {
        PauliWord::new(1, letters)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn letters(&self) -> &[Axis] {
        &self.letters
    }

    pub fn qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.letters.len()
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        for l in &self.letters {
            let c = match l {
                Axis::I => 'I',
                Axis::X => 'X',
                Axis::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliWord {
    type Err = MerminError;

    fn from_str(s: &str) -> Result<Self, MerminError> {
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let letters: Vec<Axis> = body
            .chars()
            .map(|c| match c {
                'I' => Ok(Axis::I),
                'X' => Ok(Axis::X),
                'Z' => Ok(Axis::Z),
                _ => Err(MerminError::BadWordLiteral(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        if letters.is_empty() {
            return Err(MerminError::BadWordLiteral(s.to_string()));
        }
        Ok(PauliWord::new(sign, letters))
    }
}

/// Dense integer matrix, row-major. Entries of realized Pauli words are in
/// {0, +-1}; products stay well inside i64 for the dimensions used here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        IntMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut data = vec![0i64; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        IntMatrix { dim: d, data }
    }

    pub fn scale(&self, s: i64) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| s * x).collect(),
        }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        IntMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Returns Some(+1) for the identity, Some(-1) for minus the identity,
    /// None otherwise.
    pub fn identity_sign(&self) -> Option<i8> {
        for s in [1i64, -1] {
            let mut ok = true;
            'rows: for i in 0..self.dim {
                for j in 0..self.dim {
                    let want = if i == j { s } else { 0 };
                    if self.data[i * self.dim + j] != want {
                        ok = false;
                        break 'rows;
                    }
                }
            }
            if ok {
                return Some(s as i8);
            }
        }
        None
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.data[i * self.dim + j] * v[j]).sum())
            .collect()
    }

    fn column(&self, j: usize) -> Vec<i64> {
        (0..self.dim).map(|i| self.data[i * self.dim + j]).collect()
    }

    /// Exact rank by fraction-free elimination (computed in i128).
    pub fn rank(&self) -> usize {
        let d = self.dim;
        let mut m: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..d {
            let Some(p) = (row..d).find(|&r| m[r * d + col] != 0) else {
                continue;
            };
            for j in 0..d {
                m.swap(row * d + j, p * d + j);
            }
            for r in (row + 1)..d {
                let (a, b) = (m[r * d + col], m[row * d + col]);
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    m[r * d + j] = m[r * d + j] * b - m[row * d + j] * a;
                }
            }
            rank += 1;
            row += 1;
            if row == d {
                break;
            }
        }
        rank
    }
}

/// Kronecker-product realization of a word as an exact integer matrix.
///
/// Qubit 1 is the most significant bit of the component index, so the
/// basis order is 000, 001, ..., 111.
pub fn realize(word: &PauliWord) -> IntMatrix {
    let mut dim = 1usize;
    let mut data = vec![word.sign as i64];
    for l in word.letters() {
        let single: [[i64; 2]; 2] = match l {
            Axis::I => [[1, 0], [0, 1]],
            Axis::X => [[0, 1], [1, 0]],
            Axis::Z => [[1, 0], [0, -1]],
        };
        let nd = dim * 2;
        let mut next = vec![0i64; nd * nd];
        for i in 0..dim {
            for j in 0..dim {
                let a = data[i * dim + j];
                if a == 0 {
                    continue;
                }
                for (bi, srow) in single.iter().enumerate() {
                    for (bj, &s) in srow.iter().enumerate() {
                        next[(i * 2 + bi) * nd + (j * 2 + bj)] = a * s;
                    }
                }
            }
        }
        dim = nd;
        data = next;
    }
    IntMatrix { dim, data }
}

/// Commutation by the parity rule: two real words commute iff the number of
/// positions where one has X and the other Z is even. Agreement with the
/// matrix realizations is pinned by tests.
pub fn commutes(a: &PauliWord, b: &PauliWord) -> Result<bool, MerminError> {
    if a.qubits() != b.qubits() {
        return Err(MerminError::LengthMismatch {
            left: a.qubits(),
            right: b.qubits(),
        });
    }
    let clashes = a
        .letters()
        .iter()
        .zip(b.letters())
        .filter(|(x, y)| {
            matches!((x, y), (Axis::X, Axis::Z) | (Axis::Z, Axis::X))
        })
        .count();
    Ok(clashes % 2 == 0)
}

/// A set of mutually commuting words. Commutation is a construction
/// invariant; building a set with an anticommuting pair fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSet {
    words: Vec<PauliWord>,
}

impl OperatorSet {
    pub fn new(words: Vec<PauliWord>) -> Result<Self, MerminError> {
        if words.is_empty() {
            return Err(MerminError::EmptySet);
        }
        for i in 0..words.len() {
            for j in (i + 1)..words.len() {
                if !commutes(&words[i], &words[j])? {
                    return Err(MerminError::NonCommutingPair {
                        left: words[i].to_string(),
                        right: words[j].to_string(),
                    });
                }
            }
        }
        Ok(OperatorSet { words })
    }

    pub fn words(&self) -> &[PauliWord] {
        &self.words
    }

    pub fn qubits(&self) -> usize {
        self.words[0].qubits()
    }

    pub fn dim(&self) -> usize {
        self.words[0].dim()
    }
}

/// Sign of the product of the set's realizations, in word order.
///
/// Errors when the product is not proportional to the identity.
pub fn product_sign(set: &OperatorSet) -> Result<i8, MerminError> {
    let mut product = IntMatrix::identity(set.dim());
    for w in set.words() {
        product = product.mul(&realize(w));
    }
    product.identity_sign().ok_or(MerminError::ProductNotScalar)
}

/// Per-word eigenvalues (+1 or -1) labelling one joint eigenvector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EigenLabel {
    signs: Vec<i8>,
}

impl EigenLabel {
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

impl fmt::Display for EigenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", if *s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// Joint eigenbasis of a complete commuting set.
///
/// Walks the tree of sign patterns, maintaining the exact integer product
/// of (I + sign * M) factors and pruning vanished branches. Every surviving
/// leaf must have rank 1; its nonzero columns are the eigenvector. Output
/// is in lexicographic label order with +1 before -1.
pub fn joint_eigenbasis(
    set: &OperatorSet,
) -> Result<Vec<(ExactVector, EigenLabel)>, MerminError> {
    let mats: Vec<IntMatrix> = set.words().iter().map(realize).collect();
    let dim = set.dim();
    let mut out = Vec::new();
    let mut signs = Vec::new();
    descend(
        &mats,
        IntMatrix::identity(dim),
        &mut signs,
        &mut out,
    )?;
    debug_assert_eq!(out.len(), dim);
    Ok(out)
}

fn descend(
    mats: &[IntMatrix],
    acc: IntMatrix,
    signs: &mut Vec<i8>,
    out: &mut Vec<(ExactVector, EigenLabel)>,
) -> Result<(), MerminError> {
    let depth = signs.len();
    if depth == mats.len() {
        if acc.rank() != 1 {
            return Err(MerminError::IncompleteSet);
        }
        let col = (0..acc.dim())
            .map(|j| acc.column(j))
            .find(|c| c.iter().any(|&x| x != 0))
            .expect("nonzero matrix has a nonzero column");
        let ray = ExactVector::new(col).expect("nonzero column");
        out.push((
            ray,
            EigenLabel {
                signs: signs.clone(),
            },
        ));
        return Ok(());
    }
    let m = &mats[depth];
    for s in [1i8, -1] {
        let next = acc.mul(&IntMatrix::identity(m.dim()).add(&m.scale(s as i64)));
        if next.is_zero() {
            continue;
        }
        signs.push(s);
        descend(mats, next, signs, out)?;
        signs.pop();
    }
    Ok(())
}

/// The n-qubit word family: Z everywhere with an even number of X
/// substitutions, ordered by ascending X-pattern (qubit 1 most
/// significant). For n = 3 this is ZZZ, ZXX, XZX, XXZ.
pub fn mermin_words(n: usize) -> Result<Vec<PauliWord>, MerminError> {
    if n < 2 {
        return Err(MerminError::QubitCountTooSmall(n));
    }
    let mut words = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let letters = (0..n)
            .map(|q| {
                if (mask >> (n - 1 - q)) & 1 == 1 {
                    Axis::X
                } else {
                    Axis::Z
                }
            })
            .collect();
        words.push(PauliWord::positive(letters));
    }
    Ok(words)
}

/// The complete commuting set of single-qubit factors of one word.
pub fn factor_set(word: &PauliWord) -> OperatorSet {
    let n = word.qubits();
    let words = word
        .letters()
        .iter()
        .enumerate()
        .map(|(q, &l)| {
            let letters = (0..n).map(|i| if i == q { l } else { Axis::I }).collect();
            PauliWord::positive(letters)
        })
        .collect();
    OperatorSet::new(words).expect("single-qubit factors on distinct qubits commute")
}

/// One defining basis: the commuting set together with its labelled
/// joint eigenbasis.
#[derive(Debug, Clone)]
pub struct JointBasis {
    set: OperatorSet,
    states: Vec<(ExactVector, EigenLabel)>,
}

impl JointBasis {
    pub fn set(&self) -> &OperatorSet {
        &self.set
    }

    pub fn states(&self) -> &[(ExactVector, EigenLabel)] {
        &self.states
    }

    pub fn rays(&self) -> impl Iterator<Item = &ExactVector> {
        self.states.iter().map(|(v, _)| v)
    }

    /// The basis as a context of rank-1 projectors.
    pub fn context(&self) -> Context {
        Context::new(
            self.states
                .iter()
                .map(|(v, _)| Projector::ray(v.clone()))
                .collect(),
        )
    }
}

/// Builds the defining bases for n qubits: the factor set of each family
/// word, then the joint basis of the words themselves. For n = 3 this
/// yields exactly 5 octads covering 40 distinct rays.
pub fn generate_defining_octads(n: usize) -> Result<Vec<JointBasis>, MerminError> {
    let words = mermin_words(n)?;
    let mut sets: Vec<OperatorSet> = words.iter().map(factor_set).collect();
    sets.push(OperatorSet::new(words)?);
    sets.into_iter()
        .map(|set| {
            let states = joint_eigenbasis(&set)?;
            Ok(JointBasis { set, states })
        })
        .collect()
}

/// Outcome of the operator-level hidden-variable check for n qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorModelCensus {
    /// Sign of the quantum product of the family, when it is +-identity.
    pub quantum_sign: Option<i8>,
    /// Number of +-1 assignments to the 2n sigma-factors whose induced
    /// word values multiply to -1.
    pub assignments_with_product_minus: usize,
    /// Total assignments examined (4^n).
    pub assignments_total: usize,
}

impl FactorModelCensus {
    /// True when the quantum product sign is -1 while no classical factor
    /// assignment can reproduce it.
    pub fn contradiction(&self) -> bool {
        self.quantum_sign == Some(-1) && self.assignments_with_product_minus == 0
    }
}

/// Brute force over all sign assignments to the sigma-factors.
///
/// Each of the 2n factors (one Z and one X per qubit) gets a value in
/// {+1, -1}; each family word inherits the product of its factor values.
pub fn factor_model_census(n: usize) -> Result<FactorModelCensus, MerminError> {
    let words = mermin_words(n)?;
    assert!(n <= 8, "census is exponential in 2n");
    let quantum_sign = product_sign(&OperatorSet::new(words.clone())?).ok();
    let mut minus = 0usize;
    let total = 1usize << (2 * n);
    for bits in 0..total {
        // bit q: value of sigma_{q,z}; bit n+q: value of sigma_{q,x}
        let value = |idx: usize| if (bits >> idx) & 1 == 1 { -1i64 } else { 1 };
        let mut product = 1i64;
        for w in &words {
            let mut wv = 1i64;
            for (q, l) in w.letters().iter().enumerate() {
                wv *= match l {
                    Axis::Z => value(q),
                    Axis::X => value(n + q),
                    Axis::I => 1,
                };
            }
            product *= wv;
        }
        if product == -1 {
            minus += 1;
        }
    }
    Ok(FactorModelCensus {
        quantum_sign,
        assignments_with_product_minus: minus,
        assignments_total: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> PauliWord {
        s.parse().unwrap()
    }

    #[test]
    fn realize_z_on_first_qubit_flips_index_100() {
        let m = realize(&word("ZII"));
        // basis index 100 (binary) = component 4
        assert_eq!(m.entry(4, 4), -1);
        assert_eq!(m.entry(0, 0), 1);
        let mut e4 = vec![0i64; 8];
        e4[4] = 1;
        let out = m.apply(&e4);
        assert_eq!(out, vec![0, 0, 0, 0, -1, 0, 0, 0]);
    }

    #[test]
    fn realize_identity_word() {
        assert_eq!(realize(&word("III")), IntMatrix::identity(8));
    }

    #[test]
    fn realize_xxz_entry_000_110() {
        let m = realize(&word("XXZ"));
        assert_eq!(m.entry(0b000, 0b110), 1);
    }

    #[test]
    fn commutes_examples() {
        assert!(commutes(&word("ZZZ"), &word("ZXX")).unwrap());
        assert!(commutes(&word("ZZZ"), &word("XXZ")).unwrap());
        assert!(!commutes(&word("ZII"), &word("XII")).unwrap());
        assert!(matches!(
            commutes(&word("ZZ"), &word("ZZZ")),
            Err(MerminError::LengthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn parity_rule_agrees_with_matrix_realizations() {
        let words = mermin_words(3).unwrap();
        let mut all: Vec<PauliWord> = words.clone();
        for w in &words {
            all.extend(factor_set(w).words().iter().cloned());
        }
        for a in &all {
            for b in &all {
                let ma = realize(a);
                let mb = realize(b);
                let matrix_commutes = ma.mul(&mb) == mb.mul(&ma);
                assert_eq!(commutes(a, b).unwrap(), matrix_commutes, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn product_sign_of_the_four_words_is_minus_one() {
        let set = OperatorSet::new(mermin_words(3).unwrap()).unwrap();
        assert_eq!(product_sign(&set).unwrap(), -1);
    }

    #[test]
    fn product_sign_of_a_repeated_word_is_plus_one() {
        let set = OperatorSet::new(vec![word("ZZZ"), word("ZZZ")]).unwrap();
        assert_eq!(product_sign(&set).unwrap(), 1);
    }

    #[test]
    fn product_sign_rejects_non_scalar_product() {
        let set = OperatorSet::new(vec![word("ZII"), word("IXI")]).unwrap();
        assert_eq!(product_sign(&set), Err(MerminError::ProductNotScalar));
    }

    #[test]
    fn operator_set_rejects_anticommuting_words() {
        assert!(matches!(
            OperatorSet::new(vec![word("ZII"), word("XII")]),
            Err(MerminError::NonCommutingPair { .. })
        ));
    }

    #[test]
    fn eigenbasis_of_z_factors_is_the_standard_basis() {
        let set = factor_set(&word("ZZZ"));
        let basis = joint_eigenbasis(&set).unwrap();
        assert_eq!(basis.len(), 8);
        // label order: +++ first, so 2 0 0 0 0 0 0 0 leads
        assert_eq!(basis[0].0.components(), &[2, 0, 0, 0, 0, 0, 0, 0]);
        let rays: Vec<&ExactVector> = basis.iter().map(|(v, _)| v).collect();
        for (i, (_, label)) in basis.iter().enumerate() {
            // component index of the single support = label pattern read as bits
            let support = rays[i]
                .components()
                .iter()
                .position(|&x| x != 0)
                .unwrap();
            let expect: usize = label
                .signs()
                .iter()
                .fold(0, |acc, &s| (acc << 1) | usize::from(s < 0));
            assert_eq!(support, expect);
        }
    }

    #[test]
    fn eigenbasis_of_xxz_factors_contains_10101010() {
        let set = factor_set(&word("XXZ"));
        let basis = joint_eigenbasis(&set).unwrap();
        let target: ExactVector = "1 0 1 0 1 0 1 0".parse().unwrap();
        assert!(basis.iter().any(|(v, _)| *v == target));
    }

    #[test]
    fn eigenbasis_of_the_words_contains_the_ghz_type_ray() {
        let set = OperatorSet::new(mermin_words(3).unwrap()).unwrap();
        let basis = joint_eigenbasis(&set).unwrap();
        let target: ExactVector = "1 0 0 1 0 1 -1 0".parse().unwrap();
        assert!(basis.iter().any(|(v, _)| *v == target));
    }

    #[test]
    fn eigenbasis_rejects_incomplete_sets() {
        let set = OperatorSet::new(vec![word("ZII"), word("IXI")]).unwrap();
        assert_eq!(joint_eigenbasis(&set), Err(MerminError::IncompleteSet));
    }

    #[test]
    fn eigen_equation_holds_exactly_for_every_defining_basis() {
        for basis in generate_defining_octads(3).unwrap() {
            let mats: Vec<IntMatrix> = basis.set().words().iter().map(realize).collect();
            for (v, label) in basis.states() {
                for (m, &s) in mats.iter().zip(label.signs()) {
                    let lhs = m.apply(v.components());
                    let rhs: Vec<i64> =
                        v.components().iter().map(|&x| i64::from(s) * x).collect();
                    assert_eq!(lhs, rhs, "word eigenvalue mismatch for {v}");
                }
            }
        }
    }

    #[test]
    fn defining_octads_for_three_qubits() {
        let bases = generate_defining_octads(3).unwrap();
        assert_eq!(bases.len(), 5);
        let mut all: Vec<ExactVector> = bases
            .iter()
            .flat_map(|b| b.rays().cloned())
            .collect();
        all.sort();
        let before = all.len();
        all.dedup();
        assert_eq!(before, 40);
        assert_eq!(all.len(), 40, "the five octads are pairwise disjoint");
        // first four blocks use entries {0, +-1, +-2}; block five has four
        // +-1 entries in every ray
        for b in &bases[..4] {
            for v in b.rays() {
                assert!(v.components().iter().all(|x| x.abs() <= 2));
            }
        }
        for v in bases[4].rays() {
            assert_eq!(v.components().iter().filter(|x| x.abs() == 1).count(), 4);
        }
    }

    #[test]
    fn qubit_count_below_two_is_rejected() {
        assert_eq!(
            generate_defining_octads(1).unwrap_err(),
            MerminError::QubitCountTooSmall(1)
        );
    }

    #[test]
    fn two_qubit_family_builds_three_bases() {
        let bases = generate_defining_octads(2).unwrap();
        assert_eq!(bases.len(), 3);
        let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
        rays.sort();
        rays.dedup();
        assert_eq!(rays.len(), 12);
    }

    #[test]
    fn factor_census_three_qubits_has_no_classical_model() {
        let census = factor_model_census(3).unwrap();
        assert_eq!(census.quantum_sign, Some(-1));
        assert_eq!(census.assignments_total, 64);
        assert_eq!(census.assignments_with_product_minus, 0);
        assert!(census.contradiction());
    }

    #[test]
    fn factor_census_four_qubits_has_no_contradiction() {
        let census = factor_model_census(4).unwrap();
        assert_eq!(census.quantum_sign, Some(1));
        assert_eq!(census.assignments_with_product_minus, 0);
        assert!(!census.contradiction());
    }

    #[test]
    fn word_parsing_round_trip() {
        assert_eq!(word("-ZXX").to_string(), "-ZXX");
        assert_eq!(word("ZXX").sign(), 1);
        assert!("ZYX".parse::<PauliWord>().is_err());
        assert!("".parse::<PauliWord>().is_err());
    }
}
