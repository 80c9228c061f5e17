//! The parity contradiction: the 11 certificate octads cover each of
//! their 36 rays either twice or four times, so the per-context sum rule
//! (exactly one 1 per octad) cannot be met -- 11 is odd, the multiplicity
//! sum is even. The exhaustive search and the GF(2) kernel enumeration
//! confirm it independently.

use kscert::catalog::{build_graph, enumerate_octads};
use kscert::engine::{
    find_parity_certificates, is_valid_certificate, search_assignment, ContextHypergraph,
    ParityCertificate,
};
use kscert::linalg::ExactVector;
use kscert::mermin::generate_defining_octads;
use kscert::reference;

fn main() {
    let bases = generate_defining_octads(3).expect("three-qubit construction");
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let graph = build_graph(rays.clone()).expect("distinct rays");
    let catalog = enumerate_octads(&graph);
    let h = ContextHypergraph::from_ray_contexts(&rays, catalog.octads()).expect("valid octads");

    let columns: Vec<usize> = reference::certificate_columns()
        .iter()
        .map(|col| {
            let ids: Vec<usize> = col
                .iter()
                .map(|v| rays.binary_search(v).unwrap())
                .collect();
            catalog.position(&ids).expect("column catalogued")
        })
        .collect();
    let cert = ParityCertificate::new(columns.clone());
    println!(
        "certificate of {} contexts: valid = {}",
        cert.len(),
        is_valid_certificate(&h, &cert)
    );
    let mults = cert.multiplicities(&h);
    let twice = mults.values().filter(|&&m| m == 2).count();
    let four = mults.values().filter(|&&m| m == 4).count();
    println!("covered rays: {} ({} twice, {} four times)", mults.len(), twice, four);

    let restricted = h.restrict(&columns).expect("columns in range");
    println!(
        "search on the 11 certificate octads: {}",
        search_assignment(&restricted).map_or("none", |_| "assignment found")
    );
    println!(
        "search on all 25 octads:             {}",
        search_assignment(&h).map_or("none", |_| "assignment found")
    );

    let all = find_parity_certificates(&h, 11).expect("kernel enumeration");
    println!("\nparity certificates with at most 11 contexts: {}", all.len());
    println!(
        "the column certificate is among them: {}",
        all.contains(&cert)
    );
}
