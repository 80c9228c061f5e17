//! Frozen reference data for the three-qubit configuration.
//!
//! These constants pin the expected outputs of the construction: the 40
//! canonical rays, the five defining octads, the 11-octad parity
//! certificate, the corrected excluded quadruple, the plane construction
//! lines for the rank-2 merge, and the reference state with its seven
//! expansion identities. Golden tests and the verification pipeline
//! compare computed results against them; every value here was derived
//! independently and cross-checked for internal consistency (orthogonality,
//! resolution of identity, expansion identities, multiplicity parity).

use crate::engine::PlaneSpec;
use crate::linalg::ExactVector;

/// The 40 canonical rays, sorted canonically.
pub const REFERENCE_RAYS: [&str; 40] = [
    "0 0 0 0 0 0 0 2",
    "0 0 0 0 0 0 2 0",
    "0 0 0 0 0 2 0 0",
    "0 0 0 0 1 -1 -1 1",
    "0 0 0 0 1 -1 1 -1",
    "0 0 0 0 1 1 -1 -1",
    "0 0 0 0 1 1 1 1",
    "0 0 0 0 2 0 0 0",
    "0 0 0 2 0 0 0 0",
    "0 0 1 -1 0 0 -1 1",
    "0 0 1 -1 0 0 1 -1",
    "0 0 1 1 0 0 -1 -1",
    "0 0 1 1 0 0 1 1",
    "0 0 2 0 0 0 0 0",
    "0 1 -1 0 -1 0 0 -1",
    "0 1 -1 0 1 0 0 1",
    "0 1 0 -1 0 -1 0 1",
    "0 1 0 -1 0 1 0 -1",
    "0 1 0 1 0 -1 0 -1",
    "0 1 0 1 0 1 0 1",
    "0 1 1 0 -1 0 0 1",
    "0 1 1 0 1 0 0 -1",
    "0 2 0 0 0 0 0 0",
    "1 -1 -1 1 0 0 0 0",
    "1 -1 0 0 -1 1 0 0",
    "1 -1 0 0 1 -1 0 0",
    "1 -1 1 -1 0 0 0 0",
    "1 0 -1 0 -1 0 1 0",
    "1 0 -1 0 1 0 -1 0",
    "1 0 0 -1 0 -1 -1 0",
    "1 0 0 -1 0 1 1 0",
    "1 0 0 1 0 -1 1 0",
    "1 0 0 1 0 1 -1 0",
    "1 0 1 0 -1 0 -1 0",
    "1 0 1 0 1 0 1 0",
    "1 1 -1 -1 0 0 0 0",
    "1 1 0 0 -1 -1 0 0",
    "1 1 0 0 1 1 0 0",
    "1 1 1 1 0 0 0 0",
    "2 0 0 0 0 0 0 0",
];

/// The five defining octads as ray sets (each sorted canonically), in
/// generation order: the factor basis of each family word, then the joint
/// basis of the words themselves.
pub const DEFINING_BLOCKS: [[&str; 8]; 5] = [
    [
        "0 0 0 0 0 0 0 2",
        "0 0 0 0 0 0 2 0",
        "0 0 0 0 0 2 0 0",
        "0 0 0 0 2 0 0 0",
        "0 0 0 2 0 0 0 0",
        "0 0 2 0 0 0 0 0",
        "0 2 0 0 0 0 0 0",
        "2 0 0 0 0 0 0 0",
    ],
    [
        "0 0 0 0 1 -1 -1 1",
        "0 0 0 0 1 -1 1 -1",
        "0 0 0 0 1 1 -1 -1",
        "0 0 0 0 1 1 1 1",
        "1 -1 -1 1 0 0 0 0",
        "1 -1 1 -1 0 0 0 0",
        "1 1 -1 -1 0 0 0 0",
        "1 1 1 1 0 0 0 0",
    ],
    [
        "0 0 1 -1 0 0 -1 1",
        "0 0 1 -1 0 0 1 -1",
        "0 0 1 1 0 0 -1 -1",
        "0 0 1 1 0 0 1 1",
        "1 -1 0 0 -1 1 0 0",
        "1 -1 0 0 1 -1 0 0",
        "1 1 0 0 -1 -1 0 0",
        "1 1 0 0 1 1 0 0",
    ],
    [
        "0 1 0 -1 0 -1 0 1",
        "0 1 0 -1 0 1 0 -1",
        "0 1 0 1 0 -1 0 -1",
        "0 1 0 1 0 1 0 1",
        "1 0 -1 0 -1 0 1 0",
        "1 0 -1 0 1 0 -1 0",
        "1 0 1 0 -1 0 -1 0",
        "1 0 1 0 1 0 1 0",
    ],
    [
        "0 1 -1 0 -1 0 0 -1",
        "0 1 -1 0 1 0 0 1",
        "0 1 1 0 -1 0 0 1",
        "0 1 1 0 1 0 0 -1",
        "1 0 0 -1 0 -1 -1 0",
        "1 0 0 -1 0 1 1 0",
        "1 0 0 1 0 -1 1 0",
        "1 0 0 1 0 1 -1 0",
    ],
];

/// The eleven certificate octads, in source column order, each sorted
/// canonically. Every non-excluded ray appears in either two or four of
/// them; together they form the parity certificate.
pub const CERTIFICATE_COLUMNS: [[&str; 8]; 11] = [
    [
        "0 0 0 0 0 0 0 2",
        "0 0 0 0 2 0 0 0",
        "0 0 2 0 0 0 0 0",
        "0 2 0 0 0 0 0 0",
        "1 0 0 -1 0 -1 -1 0",
        "1 0 0 -1 0 1 1 0",
        "1 0 0 1 0 -1 1 0",
        "1 0 0 1 0 1 -1 0",
    ],
    [
        "0 0 0 0 1 -1 1 -1",
        "0 0 0 0 1 1 -1 -1",
        "0 1 -1 0 -1 0 0 -1",
        "0 1 -1 0 1 0 0 1",
        "1 -1 -1 1 0 0 0 0",
        "1 0 0 -1 0 -1 -1 0",
        "1 0 0 -1 0 1 1 0",
        "1 1 1 1 0 0 0 0",
    ],
    [
        "0 0 1 -1 0 0 -1 1",
        "0 0 1 1 0 0 1 1",
        "0 1 -1 0 1 0 0 1",
        "0 1 1 0 1 0 0 -1",
        "1 -1 0 0 1 -1 0 0",
        "1 0 0 -1 0 1 1 0",
        "1 0 0 1 0 1 -1 0",
        "1 1 0 0 -1 -1 0 0",
    ],
    [
        "0 1 -1 0 1 0 0 1",
        "0 1 0 -1 0 1 0 -1",
        "0 1 0 1 0 -1 0 -1",
        "0 1 1 0 -1 0 0 1",
        "1 0 -1 0 -1 0 1 0",
        "1 0 0 -1 0 -1 -1 0",
        "1 0 0 1 0 1 -1 0",
        "1 0 1 0 1 0 1 0",
    ],
    [
        "0 1 -1 0 -1 0 0 -1",
        "0 1 -1 0 1 0 0 1",
        "0 1 1 0 -1 0 0 1",
        "0 1 1 0 1 0 0 -1",
        "1 0 0 -1 0 -1 -1 0",
        "1 0 0 -1 0 1 1 0",
        "1 0 0 1 0 -1 1 0",
        "1 0 0 1 0 1 -1 0",
    ],
    [
        "0 0 0 0 0 0 0 2",
        "0 0 0 0 0 0 2 0",
        "0 0 0 0 0 2 0 0",
        "0 0 0 0 2 0 0 0",
        "1 -1 -1 1 0 0 0 0",
        "1 -1 1 -1 0 0 0 0",
        "1 1 -1 -1 0 0 0 0",
        "1 1 1 1 0 0 0 0",
    ],
    [
        "0 0 0 0 0 0 0 2",
        "0 0 0 0 0 0 2 0",
        "0 0 0 2 0 0 0 0",
        "0 0 2 0 0 0 0 0",
        "1 -1 0 0 -1 1 0 0",
        "1 -1 0 0 1 -1 0 0",
        "1 1 0 0 -1 -1 0 0",
        "1 1 0 0 1 1 0 0",
    ],
    [
        "0 0 0 0 0 0 0 2",
        "0 0 0 0 0 2 0 0",
        "0 0 0 2 0 0 0 0",
        "0 2 0 0 0 0 0 0",
        "1 0 -1 0 -1 0 1 0",
        "1 0 -1 0 1 0 -1 0",
        "1 0 1 0 -1 0 -1 0",
        "1 0 1 0 1 0 1 0",
    ],
    [
        "0 0 0 0 1 -1 -1 1",
        "0 0 0 0 1 -1 1 -1",
        "0 0 1 1 0 0 -1 -1",
        "0 0 1 1 0 0 1 1",
        "1 -1 -1 1 0 0 0 0",
        "1 -1 1 -1 0 0 0 0",
        "1 1 0 0 -1 -1 0 0",
        "1 1 0 0 1 1 0 0",
    ],
    [
        "0 0 0 0 1 -1 -1 1",
        "0 0 0 0 1 1 -1 -1",
        "0 1 0 1 0 -1 0 -1",
        "0 1 0 1 0 1 0 1",
        "1 -1 -1 1 0 0 0 0",
        "1 0 1 0 -1 0 -1 0",
        "1 0 1 0 1 0 1 0",
        "1 1 -1 -1 0 0 0 0",
    ],
    [
        "0 0 1 -1 0 0 -1 1",
        "0 0 1 1 0 0 -1 -1",
        "0 1 0 -1 0 1 0 -1",
        "0 1 0 1 0 1 0 1",
        "1 -1 0 0 -1 1 0 0",
        "1 0 -1 0 1 0 -1 0",
        "1 0 1 0 1 0 1 0",
        "1 1 0 0 -1 -1 0 0",
    ],
];

/// The four mutually orthogonal rays excluded by the certificate: they
/// lie in four different defining octads and appear in none of the eleven
/// certificate columns.
pub const EXCLUDED_QUADRUPLE: [&str; 4] = [
    "2 0 0 0 0 0 0 0",
    "0 0 0 0 1 1 1 1",
    "0 0 1 -1 0 0 1 -1",
    "0 1 0 -1 0 -1 0 1",
];

/// The plane construction: six lines of mutually orthogonal rays; each
/// consecutive pair spans one of the 14 rank-2 planes.
pub const PLANE_LINES: [&[&str]; 6] = [
    &["0 2 0 0 0 0 0 0", "0 0 0 0 0 0 0 2", "0 0 0 0 0 0 2 0"],
    &["1 1 1 1 0 0 0 0", "1 -1 -1 1 0 0 0 0", "0 0 0 0 1 -1 -1 1"],
    &["1 -1 0 0 1 -1 0 0", "1 1 0 0 -1 -1 0 0", "0 0 1 1 0 0 -1 -1"],
    &["1 0 -1 0 -1 0 1 0", "1 0 1 0 1 0 1 0", "0 1 0 1 0 1 0 1"],
    &[
        "1 0 0 1 0 -1 1 0",
        "1 0 0 1 0 1 -1 0",
        "0 1 -1 0 1 0 0 1",
        "0 -1 1 0 1 0 0 1",
    ],
    &[
        "0 -1 -1 0 -1 0 0 1",
        "1 0 0 -1 0 1 1 0",
        "1 0 0 -1 0 -1 -1 0",
        "0 1 1 0 -1 0 0 1",
    ],
];

/// The reference pure state used by the 13-ray state-specific proof.
pub const STATE_RAY: &str = "1 0 0 -1 0 -1 -1 0";

/// The seven expansion identities of twice the reference state, one per
/// surviving certificate column (in column order): each entry is a signed
/// ray, and the signed rays of one group sum exactly to twice the state.
pub const STATE_EXPANSIONS: [[(i8, &str); 4]; 7] = [
    [
        (1, "0 0 1 -1 0 0 -1 1"),
        (-1, "0 0 1 1 0 0 1 1"),
        (1, "1 -1 0 0 1 -1 0 0"),
        (1, "1 1 0 0 -1 -1 0 0"),
    ],
    [
        (-1, "0 0 0 0 0 0 2 0"),
        (-1, "0 0 0 0 0 2 0 0"),
        (1, "1 -1 1 -1 0 0 0 0"),
        (1, "1 1 -1 -1 0 0 0 0"),
    ],
    [
        (-1, "0 0 0 0 0 0 2 0"),
        (-1, "0 0 0 2 0 0 0 0"),
        (1, "1 -1 0 0 1 -1 0 0"),
        (1, "1 1 0 0 -1 -1 0 0"),
    ],
    [
        (-1, "0 0 0 0 0 2 0 0"),
        (-1, "0 0 0 2 0 0 0 0"),
        (1, "1 0 -1 0 1 0 -1 0"),
        (1, "1 0 1 0 -1 0 -1 0"),
    ],
    [
        (1, "0 0 0 0 1 -1 -1 1"),
        (-1, "0 0 1 1 0 0 1 1"),
        (1, "1 -1 1 -1 0 0 0 0"),
        (1, "1 1 0 0 -1 -1 0 0"),
    ],
    [
        (1, "0 0 0 0 1 -1 -1 1"),
        (-1, "0 1 0 1 0 1 0 1"),
        (1, "1 0 1 0 -1 0 -1 0"),
        (1, "1 1 -1 -1 0 0 0 0"),
    ],
    [
        (1, "0 0 1 -1 0 0 -1 1"),
        (-1, "0 1 0 1 0 1 0 1"),
        (1, "1 0 -1 0 1 0 -1 0"),
        (1, "1 1 0 0 -1 -1 0 0"),
    ],
];

fn parse(s: &str) -> ExactVector {
    s.parse().expect("reference literals parse")
}

/// The 40 canonical rays, parsed, in canonical order.
pub fn reference_rays() -> Vec<ExactVector> {
    REFERENCE_RAYS.iter().map(|s| parse(s)).collect()
}

/// The five defining blocks as parsed ray lists.
pub fn defining_blocks() -> Vec<Vec<ExactVector>> {
    DEFINING_BLOCKS
        .iter()
        .map(|b| b.iter().map(|s| parse(s)).collect())
        .collect()
}

/// The eleven certificate octads as parsed ray lists, column order.
pub fn certificate_columns() -> Vec<Vec<ExactVector>> {
    CERTIFICATE_COLUMNS
        .iter()
        .map(|c| c.iter().map(|s| parse(s)).collect())
        .collect()
}

/// The corrected excluded quadruple, parsed.
pub fn excluded_quadruple() -> Vec<ExactVector> {
    EXCLUDED_QUADRUPLE.iter().map(|s| parse(s)).collect()
}

/// The plane construction lines as a validated [`PlaneSpec`].
pub fn plane_spec() -> PlaneSpec {
    let lines = PLANE_LINES
        .iter()
        .map(|line| line.iter().map(|s| parse(s)).collect())
        .collect();
    PlaneSpec::new(lines).expect("reference plane lines are mutually orthogonal")
}

/// The reference state ray.
pub fn state_ray() -> ExactVector {
    parse(STATE_RAY)
}

/// The seven expansion identities as signed parsed rays, each group
/// sorted canonically by ray.
pub fn state_expansions() -> Vec<Vec<(ExactVector, i8)>> {
    STATE_EXPANSIONS
        .iter()
        .map(|group| {
            let mut g: Vec<(ExactVector, i8)> =
                group.iter().map(|(s, r)| (parse(r), *s)).collect();
            g.sort_by(|a, b| a.0.cmp(&b.0));
            g
        })
        .collect()
}
