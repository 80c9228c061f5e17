//! The 13-ray state-specific proof: reducing the 11 certificate octads
//! by a known pure state leaves 7 contexts of four rays each, and twice
//! the state expands exactly over every context. Odd context count plus
//! even ray multiplicities rules out a noncontextual assignment for a
//! system prepared in that state.

use kscert::reference;
use kscert::state_proof::{reduce_by_state, verify_proof};

fn main() {
    let state = reference::state_ray();
    let columns = reference::certificate_columns();
    let proof = reduce_by_state(&columns, &state).expect("reduction succeeds");

    println!("state: [{state}]");
    println!(
        "surviving contexts: {}, distinct rays: {}",
        proof.contexts().len(),
        proof.distinct_ray_count()
    );
    println!("\nexpansion identities (2 * state = signed sum):");
    for ctx in proof.contexts() {
        let terms: Vec<String> = ctx
            .rays()
            .iter()
            .zip(ctx.signs())
            .map(|(r, &s)| format!("{} [{r}]", if s > 0 { "+" } else { "-" }))
            .collect();
        println!("  {}", terms.join(" "));
    }

    println!("\nray multiplicities:");
    for (ray, mult) in proof.ray_multiplicities() {
        println!("  {mult} x [{ray}]");
    }

    let verdict = verify_proof(&proof);
    println!(
        "\nverdict: {}",
        if verdict.passed() { "pass" } else { "fail" }
    );
    for d in &verdict.defects {
        println!("defect: {d}");
    }
}
