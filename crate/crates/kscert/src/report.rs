//! The full verification pipeline and its report.
//!
//! Every claim the artifact makes is recomputed from scratch (the
//! construction is cheap) and compared against a frozen expected value;
//! the report carries one entry per claim with a stable identifier.
//! Output is deterministic: rerunning with identical options produces a
//! byte-identical report.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::{
    build_graph, enumerate_octads, enumerate_quadruples, membership_histogram, naive_octads,
    symmetry_stats,
};
use crate::engine::{
    brute_force_certificates, find_parity_certificates, is_valid_certificate, merge_to_planes,
    search_assignment, ContextHypergraph, ParityCertificate,
};
use crate::linalg::ExactVector;
use crate::mermin::{
    commutes, factor_model_census, generate_defining_octads, mermin_words, product_sign,
    OperatorSet,
};
use crate::reference;
use crate::rng::SplitMix64;
use crate::state_proof::{orbit_survey, reduce_by_state, verify_proof};

/// One verified claim: stable id, what was expected, what was computed.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub title: String,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub sections: Vec<Section>,
    pub claims_total: usize,
    pub claims_passed: usize,
    pub passed: bool,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.passed
    }

    pub fn claims(&self) -> impl Iterator<Item = &Claim> {
        self.sections.iter().flat_map(|s| s.claims.iter())
    }

    /// Plain-text table, one line per claim.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verification report");
        let _ = writeln!(out, "===================");
        for section in &self.sections {
            let _ = writeln!(out);
            let _ = writeln!(out, "{}", section.title);
            for c in &section.claims {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "  {status} {:<5} {:<52} expected: {:<24} computed: {}",
                    c.id, c.description, c.expected, c.computed
                );
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "summary: {}/{} claims passed{}",
            self.claims_passed,
            self.claims_total,
            if self.passed { "" } else { " -- FAILURES PRESENT" }
        );
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Options for the verification run.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Diagnostic: drop this certificate column (1-based, 1..=11) before
    /// the certificate, merge, and state-proof stages. Parity then breaks
    /// by construction and the affected claims fail.
    pub drop_column: Option<usize>,
}

struct SectionBuilder {
    title: &'static str,
    claims: Vec<Claim>,
}

impl SectionBuilder {
    fn new(title: &'static str) -> Self {
        SectionBuilder {
            title,
            claims: Vec::new(),
        }
    }

    fn claim<T: PartialEq + std::fmt::Display>(
        &mut self,
        id: &str,
        description: &str,
        expected: T,
        computed: T,
    ) {
        self.claims.push(Claim {
            id: id.to_string(),
            description: description.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            passed: expected == computed,
        });
    }

    fn claim_true(&mut self, id: &str, description: &str, computed: bool) {
        self.claim(id, description, true, computed);
    }

    fn claim_failed(&mut self, id: &str, description: &str, expected: &str, error: &str) {
        self.claims.push(Claim {
            id: id.to_string(),
            description: description.to_string(),
            expected: expected.to_string(),
            computed: format!("error: {error}"),
            passed: false,
        });
    }

    fn finish(self) -> Section {
        Section {
            title: self.title.to_string(),
            claims: self.claims,
        }
    }
}

/// Runs the complete verification pipeline, regenerating everything from
/// the operator construction.
pub fn run_verification(opts: &VerifyOptions) -> Report {
    let mut sections = Vec::new();

    // -- construction ------------------------------------------------------
    let bases = generate_defining_octads(3).expect("three-qubit construction succeeds");
    let mut rays: Vec<ExactVector> = bases.iter().flat_map(|b| b.rays().cloned()).collect();
    rays.sort();
    rays.dedup();
    let ray_index = |v: &ExactVector| -> Option<usize> { rays.binary_search(v).ok() };
    let blocks: Vec<Vec<usize>> = bases
        .iter()
        .map(|b| {
            b.rays()
                .map(|v| ray_index(v).expect("block ray is catalogued"))
                .collect()
        })
        .collect();

    let mut s = SectionBuilder::new("construction");
    s.claim("1.1", "distinct canonical rays", 40, rays.len());
    s.claim("1.2", "defining octads", 5, bases.len());
    let total_block_slots: usize = blocks.iter().map(Vec::len).sum();
    s.claim_true(
        "1.3",
        "defining octads pairwise disjoint",
        total_block_slots == rays.len(),
    );
    let reference_blocks = reference::defining_blocks();
    let blocks_match = bases.len() == reference_blocks.len()
        && bases.iter().zip(&reference_blocks).all(|(b, r)| {
            let mut got: Vec<ExactVector> = b.rays().cloned().collect();
            got.sort();
            got == *r
        });
    s.claim_true("1.4", "defining octads match reference blocks", blocks_match);
    s.claim_true("1.5", "ray list matches reference", rays == reference::reference_rays());
    sections.push(s.finish());

    // -- operator algebra --------------------------------------------------
    let mut s = SectionBuilder::new("operator algebra");
    let words = mermin_words(3).expect("three qubits");
    let mut all_commute = true;
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            all_commute &= commutes(&words[i], &words[j]).expect("equal lengths");
        }
    }
    s.claim_true("2.1", "family words pairwise commute", all_commute);
    let sign = OperatorSet::new(words)
        .and_then(|set| product_sign(&set))
        .map(i64::from);
    s.claim(
        "2.2",
        "product sign of the four words",
        "-1".to_string(),
        sign.map_or_else(|e| format!("error: {e}"), |v| v.to_string()),
    );
    sections.push(s.finish());

    // -- symmetry statistics ------------------------------------------------
    let graph = build_graph(rays.clone()).expect("distinct rays");
    let stats = symmetry_stats(&graph, &blocks).expect("consistent dimensions");
    let mut s = SectionBuilder::new("symmetry statistics");
    s.claim(
        "3.1",
        "uniform vertex degree",
        "23".to_string(),
        stats
            .uniform_degree
            .map_or_else(|| "non-uniform".to_string(), |d| d.to_string()),
    );
    s.claim(
        "3.2",
        "neighbor split own/other blocks",
        "7+4+4+4+4".to_string(),
        stats.uniform_split.map_or_else(
            || "non-uniform".to_string(),
            |(own, others)| {
                let mut parts = vec![own.to_string()];
                parts.extend(others.iter().map(usize::to_string));
                parts.join("+")
            },
        ),
    );
    s.claim(
        "3.3",
        "pair census orthogonal/half-angle/other",
        "460/320/0".to_string(),
        format!(
            "{}/{}/{}",
            stats.orthogonal_pairs, stats.half_angle_pairs, stats.other_pairs
        ),
    );
    sections.push(s.finish());

    // -- octad catalog -------------------------------------------------------
    let catalog = enumerate_octads(&graph);
    let mut s = SectionBuilder::new("octad catalog");
    s.claim("4.1", "octad count", 25, catalog.len());
    let membership = membership_histogram(&catalog);
    s.claim(
        "4.2",
        "octad membership per ray",
        "{5: 40}".to_string(),
        format!("{membership:?}"),
    );
    let defining_in = blocks.iter().all(|b| catalog.contains(b));
    s.claim_true("4.3", "catalog contains the defining octads", defining_in);
    let column_indices: Vec<Option<usize>> = reference::certificate_columns()
        .iter()
        .map(|col| {
            let ids: Option<Vec<usize>> = col.iter().map(&ray_index).collect();
            ids.and_then(|ids| catalog.position(&ids))
        })
        .collect();
    s.claim_true(
        "4.4",
        "catalog contains the certificate columns",
        column_indices.iter().all(Option::is_some),
    );
    sections.push(s.finish());

    let h25 = ContextHypergraph::from_ray_contexts(&rays, catalog.octads())
        .expect("catalog octads resolve identity");

    // -- quadruple census ----------------------------------------------------
    let census = enumerate_quadruples(&graph, &catalog, &blocks, &h25)
        .expect("census over the catalogued instance");
    let mut s = SectionBuilder::new("quadruple census");
    s.claim("5.1", "mutually orthogonal quadruples", 2990, census.orthogonal);
    s.claim(
        "5.2",
        "orthogonal quadruples in distinct blocks",
        320,
        census.orthogonal_distinct_blocks,
    );
    s.claim(
        "5.3",
        "selections retaining exactly 11 octads",
        1280,
        census.selections.len(),
    );
    s.claim(
        "5.4",
        "certificate-grade selections",
        320,
        census.certificate_grade,
    );
    let reference_selection = {
        let quad: Option<Vec<usize>> = reference::excluded_quadruple()
            .iter()
            .map(&ray_index)
            .collect();
        let cols: Option<BTreeSet<usize>> = column_indices.iter().copied().collect();
        match (quad, cols) {
            (Some(mut q), Some(cols)) => {
                q.sort_unstable();
                census
                    .selections
                    .iter()
                    .find(|sel| sel.excluded.to_vec() == q)
                    .is_some_and(|sel| {
                        sel.is_certificate_grade()
                            && sel.retained_octads.iter().copied().collect::<BTreeSet<_>>()
                                == cols
                    })
            }
            _ => false,
        }
    };
    s.claim_true(
        "5.5",
        "reference quadruple retains the certificate columns",
        reference_selection,
    );
    sections.push(s.finish());

    // -- parity certificate ----------------------------------------------------
    let mut cert_columns: Vec<usize> = column_indices.iter().map(|c| c.unwrap_or(0)).collect();
    if let Some(k) = opts.drop_column {
        assert!((1..=cert_columns.len()).contains(&k), "column is 1-based");
        cert_columns.remove(k - 1);
    }
    let cert = ParityCertificate::new(cert_columns.clone());
    let mut s = SectionBuilder::new("parity certificate");
    s.claim_true(
        "6.1",
        "certificate is odd with even multiplicities",
        is_valid_certificate(&h25, &cert),
    );
    let t0 = Instant::now();
    let h_cert = h25.restrict(&cert_columns).expect("columns in range");
    let cert_search = search_assignment(&h_cert);
    let full_search = search_assignment(&h25);
    let elapsed = t0.elapsed();
    s.claim(
        "6.2",
        "assignment search on the certificate contexts",
        "none".to_string(),
        cert_search.map_or_else(|| "none".to_string(), |_| "assignment found".to_string()),
    );
    s.claim(
        "6.3",
        "assignment search on all 25 octads",
        "none".to_string(),
        full_search.map_or_else(|| "none".to_string(), |_| "assignment found".to_string()),
    );
    let h_defining = h25
        .restrict(&blocks.iter().map(|b| catalog.position(b).expect("defining octads catalogued")).collect::<Vec<_>>())
        .expect("in range");
    let defining_search = search_assignment(&h_defining);
    s.claim(
        "6.4",
        "assignment search on the five defining octads",
        "assignment found".to_string(),
        defining_search.map_or_else(|| "none".to_string(), |_| "assignment found".to_string()),
    );
    s.claim_true(
        "6.5",
        "exhaustive searches complete within ten seconds",
        elapsed.as_secs() < 10,
    );
    match find_parity_certificates(&h25, 11) {
        Ok(found) => {
            s.claim("6.6", "kernel certificates of at most 11 contexts", 320, found.len());
            s.claim_true(
                "6.7",
                "kernel certificates include the column certificate",
                found.contains(&cert),
            );
            let kernel_sets: BTreeSet<Vec<usize>> = found
                .iter()
                .map(|c| c.context_indices().to_vec())
                .collect();
            let selection_sets: BTreeSet<Vec<usize>> = census
                .selections
                .iter()
                .filter(|sel| sel.is_certificate_grade())
                .map(|sel| {
                    let mut v = sel.retained_octads.clone();
                    v.sort_unstable();
                    v
                })
                .collect();
            s.claim_true(
                "6.8",
                "certificate-grade selections biject with kernel certificates",
                kernel_sets == selection_sets,
            );
        }
        Err(e) => {
            s.claim_failed("6.6", "kernel certificates of at most 11 contexts", "320", &e.to_string());
        }
    }
    sections.push(s.finish());

    // -- rank-2 merge ------------------------------------------------------------
    let mut s = SectionBuilder::new("rank-2 merge");
    match merge_to_planes(&h_cert, &reference::plane_spec()) {
        Ok(merged) => {
            s.claim("7.1", "merged projector count", 30, merged.projector_count());
            let hist = merged.rank_histogram();
            s.claim(
                "7.2",
                "merged rank histogram",
                "{1: 16, 2: 14}".to_string(),
                format!("{hist:?}"),
            );
            s.claim_true("7.3", "merged contexts resolve the identity", true);
            let all_contexts: Vec<usize> = (0..merged.context_count()).collect();
            s.claim_true(
                "7.4",
                "merged certificate is odd with even multiplicities",
                is_valid_certificate(&merged, &ParityCertificate::new(all_contexts)),
            );
            s.claim(
                "7.5",
                "assignment search on the merged contexts",
                "none".to_string(),
                search_assignment(&merged)
                    .map_or_else(|| "none".to_string(), |_| "assignment found".to_string()),
            );
            let mut sizes: Vec<usize> = merged.contexts().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            s.claim(
                "7.6",
                "merged context sizes",
                "[4, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6]".to_string(),
                format!("{sizes:?}"),
            );
        }
        Err(e) => {
            let msg = e.to_string();
            s.claim_failed("7.1", "merged projector count", "30", &msg);
            s.claim_failed("7.2", "merged rank histogram", "{1: 16, 2: 14}", &msg);
            s.claim_failed("7.3", "merged contexts resolve the identity", "true", &msg);
            s.claim_failed("7.4", "merged certificate is odd with even multiplicities", "true", &msg);
            s.claim_failed("7.5", "assignment search on the merged contexts", "none", &msg);
            s.claim_failed("7.6", "merged context sizes", "[4, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6]", &msg);
        }
    }
    sections.push(s.finish());

    // -- state-specific proof ------------------------------------------------------
    let mut s = SectionBuilder::new("state-specific proof");
    let state = reference::state_ray();
    let cert_ray_contexts: Vec<Vec<ExactVector>> = cert_columns
        .iter()
        .map(|&c| catalog.octads()[c].iter().map(|&v| rays[v].clone()).collect())
        .collect();
    match reduce_by_state(&cert_ray_contexts, &state) {
        Ok(proof) => {
            s.claim("8.1", "surviving contexts", 7, proof.contexts().len());
            s.claim("8.2", "distinct rays in the proof", 13, proof.distinct_ray_count());
            let mut got: Vec<Vec<(ExactVector, i8)>> = proof
                .contexts()
                .iter()
                .map(|c| c.signed_set())
                .collect();
            got.sort();
            let mut want = reference::state_expansions();
            want.sort();
            s.claim_true("8.3", "signed expansions match the reference identities", got == want);
            s.claim_true(
                "8.4",
                "every proof ray appears twice or four times",
                proof
                    .ray_multiplicities()
                    .values()
                    .all(|&m| m == 2 || m == 4),
            );
            let verdict = verify_proof(&proof);
            s.claim(
                "8.5",
                "proof verification (including search)",
                "pass".to_string(),
                if verdict.passed() {
                    "pass".to_string()
                } else {
                    format!("defects: {}", verdict.defects.len())
                },
            );
            s.claim(
                "8.6",
                "proof size over dimension",
                "13/8".to_string(),
                format!("{}/8", proof.distinct_ray_count()),
            );
        }
        Err(e) => {
            let msg = e.to_string();
            s.claim_failed("8.1", "surviving contexts", "7", &msg);
            s.claim_failed("8.2", "distinct rays in the proof", "13", &msg);
            s.claim_failed("8.3", "signed expansions match the reference identities", "true", &msg);
            s.claim_failed("8.4", "every proof ray appears twice or four times", "true", &msg);
            s.claim_failed("8.5", "proof verification (including search)", "pass", &msg);
            s.claim_failed("8.6", "proof size over dimension", "13/8", &msg);
        }
    }
    // orbit survey over a deterministic sample of certificate-grade selections
    let sample: Vec<Vec<Vec<usize>>> = census
        .selections
        .iter()
        .filter(|sel| sel.is_certificate_grade())
        .step_by(16)
        .map(|sel| {
            sel.retained_octads
                .iter()
                .map(|&o| catalog.octads()[o].clone())
                .collect()
        })
        .collect();
    match orbit_survey(&rays, &sample) {
        Ok(survey) => {
            s.claim(
                "8.7",
                "orbit survey over 20 sampled certificates",
                "720 reductions, all valid, shapes {(7, 13): 160, (9, 14): 240, (9, 15): 320}"
                    .to_string(),
                format!(
                    "{} reductions, {} shapes {:?}",
                    survey.reductions,
                    if survey.valid == survey.reductions {
                        "all valid,".to_string()
                    } else {
                        format!("only {} valid,", survey.valid)
                    },
                    survey.shape_counts
                ),
            );
        }
        Err(e) => s.claim_failed(
            "8.7",
            "orbit survey over 20 sampled certificates",
            "720 reductions, all valid",
            &e.to_string(),
        ),
    }
    sections.push(s.finish());

    // -- oracle equivalence ------------------------------------------------------
    let mut s = SectionBuilder::new("oracle equivalence");
    let naive_full = naive_octads(&rays).expect("consistent dimensions");
    s.claim_true(
        "9.1",
        "naive clique oracle matches the enumerator (full instance)",
        naive_full.as_slice() == catalog.octads(),
    );
    let mut rng = SplitMix64::new(0x6f63746164);
    let mut sub_ok = true;
    for _ in 0..10 {
        let size = 20 + rng.below(20);
        let chosen = rng.choose(rays.len(), size);
        let sub_rays: Vec<ExactVector> = chosen.iter().map(|&i| rays[i].clone()).collect();
        let sub_graph = build_graph(sub_rays.clone()).expect("distinct subset");
        let fast = enumerate_octads(&sub_graph);
        let slow = naive_octads(&sub_rays).expect("consistent dimensions");
        sub_ok &= fast.octads() == slow.as_slice();
    }
    s.claim_true(
        "9.2",
        "naive clique oracle matches on 10 random sub-instances",
        sub_ok,
    );
    let mut gf2_ok = true;
    for _ in 0..10 {
        let chosen = rng.choose(h25.context_count(), 10);
        let sub = h25.restrict(&chosen).expect("in range");
        let fast = find_parity_certificates(&sub, 7).expect("small instance");
        let slow = brute_force_certificates(&sub, 7);
        gf2_ok &= fast == slow;
    }
    s.claim_true(
        "9.3",
        "kernel certificates match brute force on 10 sub-hypergraphs",
        gf2_ok,
    );
    sections.push(s.finish());

    // -- operator contradiction ------------------------------------------------------
    let mut s = SectionBuilder::new("operator contradiction");
    match factor_model_census(3) {
        Ok(census) => {
            s.claim(
                "10.1",
                "factor assignments reproducing the product sign",
                "0 of 64".to_string(),
                format!(
                    "{} of {}",
                    census.assignments_with_product_minus, census.assignments_total
                ),
            );
            s.claim_true(
                "10.2",
                "operator-level contradiction holds",
                census.contradiction(),
            );
        }
        Err(e) => {
            s.claim_failed("10.1", "factor assignments reproducing the product sign", "0 of 64", &e.to_string());
        }
    }
    sections.push(s.finish());

    let claims_total = sections.iter().map(|s| s.claims.len()).sum();
    let claims_passed = sections
        .iter()
        .flat_map(|s| s.claims.iter())
        .filter(|c| c.passed)
        .count();
    Report {
        passed: claims_passed == claims_total,
        sections,
        claims_total,
        claims_passed,
    }
}
