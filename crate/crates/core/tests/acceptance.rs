//! Acceptance suite: every headline claim at its pinned parameters, one
//! pass/fail line per criterion. All checks are exact.
//!
//! Run with `cargo test -p antibch --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use num_bigint::BigUint;

use antibch::code::{self, bch};
use antibch::design;
use antibch::field::Tower;
use antibch::verify::{self, all_pass, CheckResult, RunCfg};
use antibch::weight;

fn report(criterion: &str, results: &[CheckResult]) {
    let pass = all_pass(results);
    println!(
        "criterion {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    for r in results {
        assert!(r.pass, "{criterion}: {} ({})", r.name, r.details);
    }
}

fn cfg(threads: usize) -> RunCfg {
    RunCfg {
        seed: 0,
        samples: 100,
        threads,
        u0: None,
    }
}

#[test]
fn criterion_1_parameters_theorem() {
    // dimension q - 2δ + 3 and minimum distance exactly δ + 1
    let mut results = Vec::new();
    for (p, a, m) in [(2u64, 1usize, 2usize), (2, 1, 3), (3, 1, 2), (2, 2, 2)] {
        let tower = Tower::new(p, a, m).unwrap();
        results.extend(verify::verify_params(&tower, &cfg(2)).unwrap());
    }
    report("1 (parameters theorem)", &results);
}

#[test]
fn criterion_2_dual_theorem() {
    // dual of bch(9,10,3,1) is [10,4,6]_9 and almost MDS, exhaustively
    let tower = Tower::new(3, 1, 2).unwrap();
    let results = verify::verify_dual_params(&tower, &cfg(2)).unwrap();
    report("2 (dual theorem)", &results);
}

#[test]
fn criterion_3_q25_low_weight_coefficient() {
    // A_6(bch(25,26,5,1)) = 3120 = (q-1) · 130 scanned blocks, plus the
    // published weight-18 counting identity
    let tower = Tower::new(5, 1, 2).unwrap();
    let results = verify::verify_design(&tower, &cfg(4)).unwrap();
    assert!(results.iter().any(|r| r.name.contains("A_6 = 3120")));
    assert!(results.iter().any(|r| r.name.contains("1645800")));
    report("3 (q=25 low-weight coefficient)", &results);
}

#[test]
fn criterion_4_witt_design_from_code() {
    // support design = 3-(δ^m+1, δ+1, 1) Steiner system, isomorphic to the
    // orbit design under the g0 bridge
    let mut results = Vec::new();
    for (p, a, m) in [(2u64, 1usize, 2usize), (3, 1, 2), (2, 2, 2)] {
        let tower = Tower::new(p, a, m).unwrap();
        results.extend(verify::verify_design(&tower, &cfg(2)).unwrap());
        results.extend(verify::verify_design_iso(&tower, &cfg(2)).unwrap());
    }
    report("4 (Witt design from code)", &results);
}

#[test]
fn criterion_5_p_rank_theorem() {
    let mut results = Vec::new();
    for (p, a, m) in [(2u64, 1usize, 2usize), (3, 1, 2), (2, 2, 2), (5, 1, 2)] {
        let tower = Tower::new(p, a, m).unwrap();
        results.extend(verify::verify_p_rank(&tower, &cfg(1)).unwrap());
    }
    report("5 (p-rank theorem)", &results);
}

#[test]
fn criterion_6_classification_theorem() {
    let mut results = Vec::new();
    for (p, m, h) in [(2u64, 2usize, 1usize), (2, 2, 2), (3, 1, 1), (3, 2, 1)] {
        results.extend(verify::verify_classification(p, m, h).unwrap());
    }
    report("6 (classification theorem)", &results);
}

#[test]
fn criterion_7_automorphism_theorem() {
    // 100 random monomial automorphisms on both sides, sharply 3-transitive
    // induced permutation group of order 720
    let tower = Tower::new(3, 1, 2).unwrap();
    let results = verify::verify_automorphism(&tower, &cfg(1)).unwrap();
    assert!(results.iter().any(|r| r.name.contains("order 720")));
    report("7 (automorphism theorem)", &results);
}

#[test]
fn criterion_8_lemma_suite() {
    let results = verify::verify_lemmas(&cfg(1)).unwrap();
    assert_eq!(results.len(), 6);
    report("8 (lemma suite)", &results);
}

#[test]
fn criterion_9_macwilliams_consistency() {
    // transform of the exhaustive dual distribution equals the exhaustive
    // primary distribution over 9^6 = 531441 codewords
    let tower = Tower::new(3, 1, 2).unwrap();
    let results = verify::verify_macwilliams(&tower, &cfg(2)).unwrap();
    assert!(results.iter().any(|r| r.name.contains("531441")));
    report("9 (MacWilliams consistency)", &results);
}

#[test]
fn supporting_check_block_codeword_count_identity() {
    // A_{δ+1} = (q-1)·b holds with the enumerated distribution at q = 9
    let tower = Tower::new(3, 1, 2).unwrap();
    let f = tower.field();
    let c = bch(&tower, 3, 1).unwrap();
    let support = design::support_design(&tower, &c, 3, 4, 1).unwrap();
    let dist = weight::weight_distribution_exhaustive(f, &c, 2).unwrap();
    assert_eq!(
        dist.counts()[4],
        BigUint::from(8u32 * support.block_count() as u32)
    );
    // and the support blocks each carry a codeword of the code
    let hits = weight::scan_weight_supports(&tower, 3, 4, 1).unwrap();
    for (supp, basis) in hits {
        let mut word = vec![f.zero(); 10];
        for (i, &j) in supp.iter().enumerate() {
            word[j] = basis[0][i];
        }
        assert!(code::contains(f, &c, &word).unwrap());
    }
}
