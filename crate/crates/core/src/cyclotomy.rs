//! r-cyclotomic cosets mod n, r-invariant subsets of Z_n, and their
//! representative systems — the combinatorial skeleton of
//! cyclicity-defining sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Enumerating unions of cosets is capped at 2^24 sets.
const ENUMERATION_GUARD: usize = 24;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_base(r: u64, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    if gcd(r % n, n) != 1 {
        return Err(Error::InvalidParameter(format!(
            "gcd({r}, {n}) != 1: multiplication by r is not invertible mod n"
        )));
    }
    Ok(())
}

/// The orbit of e under multiplication by r mod n, sorted ascending.
pub fn coset_of(e: u64, r: u64, n: u64) -> Result<Vec<u64>> {
    check_base(r, n)?;
    let start = e % n;
    let mut coset = vec![start];
    let mut x = start * r % n;
    while x != start {
        coset.push(x);
        x = x * r % n;
    }
    coset.sort_unstable();
    Ok(coset)
}

/// The full partition of Z_n into r-cyclotomic cosets, ordered by minimum.
#[derive(Debug, Clone)]
pub struct CosetSystem {
    n: u64,
    r: u64,
    cosets: Vec<Vec<u64>>,
}

impl CosetSystem {
    pub fn new(r: u64, n: u64) -> Result<CosetSystem> {
        check_base(r, n)?;
        let mut seen = vec![false; n as usize];
        let mut cosets = Vec::new();
        for e in 0..n {
            if seen[e as usize] {
                continue;
            }
            let coset = coset_of(e, r, n)?;
            for &x in &coset {
                seen[x as usize] = true;
            }
            cosets.push(coset);
        }
        Ok(CosetSystem {
            n,
            r: r % n,
            cosets,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }
}

/// True iff {r·e mod n : e ∈ E} = E.
pub fn is_invariant(set: &BTreeSet<u64>, r: u64, n: u64) -> Result<bool> {
    check_base(r, n)?;
    if set.iter().any(|&e| e >= n) {
        return Err(Error::InvalidParameter("set element out of Z_n".into()));
    }
    let mapped: BTreeSet<u64> = set.iter().map(|&e| e * r % n).collect();
    Ok(mapped == *set)
}

/// Minimal elements of the constituent cosets of an invariant set, ascending.
/// Asking for representatives of a non-invariant set is an error.
pub fn representatives(set: &BTreeSet<u64>, r: u64, n: u64) -> Result<Vec<u64>> {
    if !is_invariant(set, r, n)? {
        return Err(Error::NotInvariant { r, n });
    }
    let mut reps = Vec::new();
    let mut covered: BTreeSet<u64> = BTreeSet::new();
    for &e in set {
        if covered.contains(&e) {
            continue;
        }
        let coset = coset_of(e, r, n)?;
        reps.push(coset[0]);
        covered.extend(coset);
    }
    Ok(reps)
}

/// All 2^(#cosets) r-invariant subsets of Z_n, in characteristic-vector
/// order over the min-sorted cosets: ∅ first, Z_n last.
pub fn all_invariant_sets(r: u64, n: u64) -> Result<impl Iterator<Item = BTreeSet<u64>>> {
    let system = CosetSystem::new(r, n)?;
    let t = system.coset_count();
    if t > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{t} cosets would enumerate 2^{t} invariant sets"
        )));
    }
    let cosets = system.cosets;
    Ok((0u64..1 << t).map(move |mask| {
        let mut set = BTreeSet::new();
        for (i, coset) in cosets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.extend(coset.iter().copied());
            }
        }
        set
    }))
}
