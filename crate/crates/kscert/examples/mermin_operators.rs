//! The commuting operator family and the sign contradiction at the
//! operator level: the four three-qubit words pairwise commute, their
//! product is minus the identity, and no +-1 assignment to the six
//! single-qubit factors can reproduce that sign.

use kscert::mermin::{commutes, factor_model_census, mermin_words, product_sign, OperatorSet};

fn main() {
    let words = mermin_words(3).expect("three qubits");
    println!("word family:");
    for w in &words {
        println!("  {w}");
    }

    println!("\ncommutation table:");
    for a in &words {
        let row: Vec<&str> = words
            .iter()
            .map(|b| {
                if commutes(a, b).expect("equal length") {
                    "yes"
                } else {
                    "no"
                }
            })
            .collect();
        println!("  {a}: {}", row.join(" "));
    }

    let set = OperatorSet::new(words).expect("family commutes");
    let sign = product_sign(&set).expect("product is +-identity");
    println!("\nproduct of the four words = {sign} * identity");

    let census = factor_model_census(3).expect("three qubits");
    println!(
        "factor assignments reproducing that sign: {} of {}",
        census.assignments_with_product_minus, census.assignments_total
    );
    println!(
        "operator-level contradiction: {}",
        if census.contradiction() { "yes" } else { "no" }
    );
}
