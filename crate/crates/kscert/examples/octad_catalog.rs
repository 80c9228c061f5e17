//! Builds the orthogonality graph on the 40 rays and enumerates all of
//! its octads, printing the symmetry statistics along the way: every ray
//! is orthogonal to 23 others (7 in its own defining octad, 4 in each of
//! the other four) and makes a 60 or 120 degree angle with the remaining
//! 16.

use kscert::catalog::{build_graph, enumerate_octads, membership_histogram, symmetry_stats};
use kscert::linalg::ExactVector;
use kscert::mermin::generate_defining_octads;

fn main() {
    let bases = generate_defining_octads(3).expect("three-qubit construction");
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let blocks: Vec<Vec<usize>> = bases
        .iter()
        .map(|b| {
            b.rays()
                .map(|v| rays.binary_search(v).expect("catalogued"))
                .collect()
        })
        .collect();

    let graph = build_graph(rays.clone()).expect("distinct rays");
    let stats = symmetry_stats(&graph, &blocks).expect("consistent instance");
    println!("rays: {}", rays.len());
    println!("uniform degree: {:?}", stats.uniform_degree);
    println!("neighbor split (own octad, others): {:?}", stats.uniform_split);
    println!(
        "pairs orthogonal / 60-120 degrees / other: {} / {} / {}",
        stats.orthogonal_pairs, stats.half_angle_pairs, stats.other_pairs
    );

    let catalog = enumerate_octads(&graph);
    println!("\noctads found: {}", catalog.len());
    println!("membership histogram (octads per ray): {:?}", membership_histogram(&catalog));
    println!("\nfirst three octads by ray index:");
    for octad in catalog.octads().iter().take(3) {
        let names: Vec<String> = octad.iter().map(|&v| format!("[{}]", rays[v])).collect();
        println!("  {}", names.join(" "));
    }
}
