//! Property tests for the exact-arithmetic invariants.

use proptest::prelude::*;

use kscert::catalog::{build_graph, enumerate_octads};
use kscert::engine::{search_assignment, ContextHypergraph};
use kscert::linalg::{is_resolution_of_identity, Context, ExactVector, Projector};
use kscert::mermin::generate_defining_octads;
use kscert::reference;

fn raw_vector() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 8).prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
}

proptest! {
    #[test]
    fn canonical_form_is_scale_and_sign_invariant(c in raw_vector(), k in -6i64..=6) {
        prop_assume!(k != 0);
        let base = ExactVector::new(c.clone()).unwrap();
        let scaled: Vec<i64> = c.iter().map(|&x| k * x).collect();
        prop_assert_eq!(ExactVector::new(scaled).unwrap(), base);
    }

    #[test]
    fn inner_product_is_symmetric(a in raw_vector(), b in raw_vector()) {
        let u = ExactVector::new(a).unwrap();
        let v = ExactVector::new(b).unwrap();
        prop_assert_eq!(u.inner(&v).unwrap(), v.inner(&u).unwrap());
    }

    #[test]
    fn vector_text_round_trips(c in raw_vector()) {
        let v = ExactVector::new(c).unwrap();
        let back: ExactVector = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn projector_equality_survives_permutation_and_sign_flips(
        column in 0usize..11,
        take in 2usize..=4,
        seed in any::<u64>(),
        flips in prop::collection::vec(any::<bool>(), 4),
    ) {
        // sub-spans of one certificate octad are mutually orthogonal
        let octad = &reference::certificate_columns()[column];
        let span: Vec<ExactVector> = octad[..take].to_vec();
        let reference_projector = Projector::new(span.clone()).unwrap();
        let mut shuffled: Vec<ExactVector> = span
            .iter()
            .zip(&flips)
            .map(|(v, &flip)| {
                if flip {
                    let negated: Vec<i64> = v.components().iter().map(|&x| -x).collect();
                    ExactVector::new(negated).unwrap()
                } else {
                    v.clone()
                }
            })
            .collect();
        // deterministic pseudo-shuffle driven by the seed
        let mut s = seed;
        for i in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(Projector::new(shuffled).unwrap(), reference_projector);
    }
}

#[test]
fn every_catalog_octad_resolves_the_identity_exactly() {
    let bases = generate_defining_octads(3).unwrap();
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let catalog = enumerate_octads(&build_graph(rays.clone()).unwrap());
    assert_eq!(catalog.len(), 25);
    for octad in catalog.octads() {
        let ctx = Context::new(
            octad
                .iter()
                .map(|&v| Projector::ray(rays[v].clone()))
                .collect(),
        );
        assert!(is_resolution_of_identity(&ctx));
    }
}

#[test]
fn search_on_any_single_octad_selects_exactly_one_member() {
    let bases = generate_defining_octads(3).unwrap();
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let catalog = enumerate_octads(&build_graph(rays.clone()).unwrap());
    let h = ContextHypergraph::from_ray_contexts(&rays, catalog.octads()).unwrap();
    for i in 0..h.context_count() {
        let single = h.restrict(&[i]).unwrap();
        let a = search_assignment(&single).expect("single context is satisfiable");
        let ones = h.contexts()[i]
            .iter()
            .filter(|&&p| a.values()[p])
            .count();
        assert_eq!(ones, 1);
    }
}

#[test]
fn every_sampled_valid_certificate_is_unsatisfiable() {
    use kscert::engine::{find_parity_certificates, is_valid_certificate};

    let bases = generate_defining_octads(3).unwrap();
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let catalog = enumerate_octads(&build_graph(rays.clone()).unwrap());
    let h = ContextHypergraph::from_ray_contexts(&rays, catalog.octads()).unwrap();
    let certificates = find_parity_certificates(&h, 15).unwrap();
    assert_eq!(certificates.len(), 1024, "sizes 11, 13, 15: 320 + 640 + 64");
    // soundness on a spread of 20: a valid certificate leaves no assignment
    for cert in certificates.iter().step_by(certificates.len() / 20).take(20) {
        assert!(is_valid_certificate(&h, cert));
        let restricted = h.restrict(cert.context_indices()).unwrap();
        assert!(search_assignment(&restricted).is_none());
    }
}

#[test]
fn inner_products_over_the_forty_rays_take_three_values() {
    let rays = reference::reference_rays();
    for (i, u) in rays.iter().enumerate() {
        for v in &rays[i..] {
            let ip = u.inner(v).unwrap().abs();
            if u == v {
                assert_eq!(ip, 4);
            } else {
                assert!(ip == 0 || ip == 2, "unexpected inner {ip}");
            }
        }
    }
}
