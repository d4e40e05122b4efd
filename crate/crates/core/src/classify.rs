//! Classification of the cyclic codes of length p^m + 1 over GF(p^h) that
//! are invariant under the stabilizer permutation action (equivalently,
//! under PGL(2, p^m)): exactly the four trivial codes.
//!
//! The rotation u ↦ β·u sits in the verified generating set, so any
//! invariant code is cyclic and the search over cyclic codes is exhaustive
//! for invariant codes.

use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::cyclotomy;
use crate::error::{Error, Result};
use crate::field::{Field, Tower};
use crate::linalg::{self};
use crate::moebius;

/// True iff the column-permuted generator matrix spans the same row space.
pub fn is_perm_invariant(field: &Field, code: &CyclicCode, perm: &[usize]) -> bool {
    assert_eq!(
        perm.len() as u64,
        code.n(),
        "permutation acts on n coordinates"
    );
    let g = code.generator_matrix(field);
    let gp = g.permute_cols(perm);
    linalg::rank(field, &g.stacked(&gp)) == code.dimension()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedCode {
    pub name: String,
    pub defining_set: Vec<u64>,
    pub dimension: usize,
}

/// A candidate that failed, with the index of the generator permutation
/// witnessing the failure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailureWitness {
    pub defining_set: Vec<u64>,
    pub witness_generator: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub p: u64,
    pub m: usize,
    pub h: usize,
    pub q: u64,
    pub n: u64,
    pub candidates_tested: usize,
    pub invariant_codes: Vec<NamedCode>,
    pub failures: Vec<FailureWitness>,
}

impl ClassificationReport {
    /// The four expected invariant codes, by defining set.
    pub fn matches_trivial_list(&self) -> bool {
        if self.invariant_codes.len() != 4 {
            return false;
        }
        let n = self.n;
        let expected: [(&str, Vec<u64>); 4] = [
            ("zero", vec![]),
            ("repetition", vec![0]),
            ("even-like dual", (1..n).collect()),
            ("whole space", (0..n).collect()),
        ];
        expected.iter().all(|(name, set)| {
            self.invariant_codes
                .iter()
                .any(|c| c.name == *name && &c.defining_set == set)
        })
    }
}

fn name_for(defining_set: &[u64], n: u64) -> String {
    if defining_set.is_empty() {
        "zero".into()
    } else if defining_set == [0] {
        "repetition".into()
    } else if defining_set.len() as u64 == n {
        "whole space".into()
    } else if defining_set.len() as u64 == n - 1 && !defining_set.contains(&0) {
        "even-like dual".into()
    } else {
        "nontrivial".into()
    }
}

/// Test every r-invariant defining set (r = p^h) mod p^m + 1 for
/// invariance under the verified stabilizer generating set; report the
/// invariant codes with names and the failures with witnesses.
pub fn classify(p: u64, m: usize, h: usize) -> Result<ClassificationReport> {
    if h == 0 || (2 * m) % h != 0 {
        return Err(Error::InvalidParameter(format!(
            "scalar degree {h} must divide 2m = {} to fit the ambient tower",
            2 * m
        )));
    }
    let tower = Tower::new(p, 1, m)?;
    let field = tower.field();
    let q = tower.q();
    let n = q + 1;
    let r = p.pow(h as u32) % n;
    let group = moebius::stabilizer_group(&tower)?;
    let perms = group.generator_perms();
    let mut invariant_codes = Vec::new();
    let mut failures = Vec::new();
    let mut candidates_tested = 0usize;
    for defining_set in cyclotomy::all_invariant_sets(r, n)? {
        candidates_tested += 1;
        let code = CyclicCode::from_defining_set(field, h, tower.beta(), n, defining_set.clone())?;
        let witness = perms
            .iter()
            .position(|perm| !is_perm_invariant(field, &code, perm));
        let set_vec: Vec<u64> = defining_set.into_iter().collect();
        match witness {
            None => invariant_codes.push(NamedCode {
                name: name_for(&set_vec, n),
                defining_set: set_vec,
                dimension: code.dimension(),
            }),
            Some(i) => failures.push(FailureWitness {
                defining_set: set_vec,
                witness_generator: i,
            }),
        }
    }
    Ok(ClassificationReport {
        p,
        m,
        h,
        q,
        n,
        candidates_tested,
        invariant_codes,
        failures,
    })
}
