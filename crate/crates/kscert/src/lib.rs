//! Exact-arithmetic construction and verification of Kochen-Specker
//! parity certificates in real 8-dimensional space.
//!
//! Starting from the four commuting three-qubit operators ZZZ, ZXX, XZX,
//! XXZ (whose product is minus the identity), the crate builds their five
//! joint eigenbases -- 40 integer rays forming five orthogonal octads --
//! and then mechanically verifies the combinatorics that rule out
//! noncontextual value assignments:
//!
//! - all 25 orthogonal octads of the 40-ray set and its symmetry counts,
//! - the 11-octad parity certificate (odd context count, every ray covered
//!   an even number of times) and the exhaustive assignment search,
//! - the census of excluded quadruples and their retained-octad selections,
//! - the merge of co-occurring ray pairs into 14 rank-2 planes, giving a
//!   30-projector variant of the same contradiction,
//! - the 13-ray state-specific proof carried by seven exact expansion
//!   identities.
//!
//! Everything is integer or small-denominator rational arithmetic; there
//! is no floating point and no tolerance anywhere. All values are
//! immutable after construction and every operation is a pure function.
//!
//! The `examples/` directory exercises each capability end to end; the
//! `kscert` binary wraps the same library calls behind subcommands, and
//! [`report::run_verification`] reruns the complete claim suite.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod engine;
pub mod files;
pub mod gf2;
pub mod linalg;
pub mod mermin;
pub mod reference;
pub mod report;
pub mod rng;
pub mod state_proof;

pub use catalog::{build_graph, enumerate_octads, OctadCatalog, OrthogonalityGraph};
pub use engine::{
    find_parity_certificates, is_valid_certificate, merge_to_planes, search_assignment,
    Assignment, ContextHypergraph, ParityCertificate, PlaneSpec,
};
pub use linalg::{angle_class, is_resolution_of_identity, AngleClass, Context, ExactVector, Projector};
pub use mermin::{
    commutes, generate_defining_octads, joint_eigenbasis, product_sign, realize, EigenLabel,
    OperatorSet, PauliWord,
};
pub use report::{run_verification, Report, VerifyOptions};
pub use state_proof::{reduce_by_state, verify_proof, StateSpecificProof};
