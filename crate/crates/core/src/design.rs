//! Incidence structures: support designs from codes, orbit designs from
//! group actions, t-design and Steiner verification, isomorphism under an
//! explicit point bijection, and p-ranks of incidence matrices.

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{Field, Tower};
use crate::linalg::{self, Mat};
use crate::moebius::{self, ProjPoint};
use crate::weight;

/// Points with display labels, plus deduplicated sorted blocks of point
/// indices. Blocks are stored sorted and the block list sorted
/// lexicographically, so set equality is direct comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    labels: Vec<String>,
    blocks: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn new(
        v: usize,
        labels: Vec<String>,
        mut blocks: Vec<Vec<usize>>,
    ) -> Result<IncidenceStructure> {
        if labels.len() != v {
            return Err(Error::InvalidParameter("label count != point count".into()));
        }
        for b in &mut blocks {
            if b.iter().any(|&i| i >= v) {
                return Err(Error::InvalidParameter("block point out of range".into()));
            }
            b.sort_unstable();
            b.dedup();
        }
        blocks.sort();
        blocks.dedup();
        Ok(IncidenceStructure { v, labels, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Uniform block size, if there is one.
    pub fn block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    /// Plain-text 0/1 incidence matrix, one block per row.
    pub fn incidence_matrix_text(&self) -> String {
        let mut out = String::with_capacity(self.blocks.len() * (self.v + 1));
        for b in &self.blocks {
            let mut row = vec![b'0'; self.v];
            for &i in b {
                row[i] = b'1';
            }
            out.push_str(std::str::from_utf8(&row).unwrap());
            out.push('\n');
        }
        out
    }
}

/// Verified design parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignCertificate {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u64,
    pub steiner: bool,
}

/// Count, for every t-subset of points, the blocks containing it; a
/// certificate is returned iff the count is a positive constant.
pub fn verify_t_design(design: &IncidenceStructure, t: usize) -> Option<DesignCertificate> {
    let k = design.block_size()?;
    if t > k || t == 0 || design.blocks.is_empty() {
        return None;
    }
    let mut coverage: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut chooser = vec![0usize; t];
    for b in &design.blocks {
        // all t-subsets of b
        for (i, c) in chooser.iter_mut().enumerate() {
            *c = i;
        }
        loop {
            let subset: Vec<usize> = chooser.iter().map(|&i| b[i]).collect();
            *coverage.entry(subset).or_insert(0) += 1;
            // next combination of indices into b
            let mut pos = t;
            while pos > 0 {
                pos -= 1;
                if chooser[pos] < b.len() - (t - pos) {
                    chooser[pos] += 1;
                    for j in pos + 1..t {
                        chooser[j] = chooser[j - 1] + 1;
                    }
                    break;
                }
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }
    let total_subsets = binom(design.v as u64, t as u64);
    if coverage.len() as u64 != total_subsets {
        return None; // some t-subset is uncovered
    }
    let lambda = *coverage.values().next()?;
    if coverage.values().any(|&c| c != lambda) {
        return None;
    }
    Some(DesignCertificate {
        t,
        v: design.v,
        k,
        lambda,
        steiner: lambda == 1 && t >= 2,
    })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    num_integer::binomial(n, k.min(n - k))
}

fn u_labels(tower: &Tower) -> Vec<String> {
    tower
        .u_group()
        .iter()
        .map(|u| u.val().to_string())
        .collect()
}

/// Blocks are the supports of the weight-w codewords, found by full
/// codeword enumeration. Points are U_{q+1} in the β^j order.
pub fn support_design_enumerated(
    tower: &Tower,
    code: &CyclicCode,
    w: usize,
    threads: usize,
) -> Result<IncidenceStructure> {
    let field = tower.field();
    let k = code.dimension();
    let s = field.subfield(code.scalar_degree())?.size();
    let total = s
        .checked_pow(k as u32)
        .filter(|&t| t <= (1 << 26))
        .ok_or_else(|| {
            Error::GuardExceeded(format!("{s}^{k} codewords exceed the enumeration limit"))
        })?;
    let _ = threads;
    let gen = code.generator_matrix(field);
    let scalars = field.subfield_elements(&field.subfield(code.scalar_degree())?);
    let mut blocks: HashSet<Vec<usize>> = HashSet::new();
    let mut digits = vec![0usize; k];
    for _ in 0..total {
        let msg: Vec<_> = digits.iter().map(|&i| scalars[i]).collect();
        let word = gen.vec_mul(field, &msg);
        let support: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(_, x)| x.val() != 0)
            .map(|(j, _)| j)
            .collect();
        if support.len() == w {
            blocks.insert(support);
        }
        let mut pos = 0;
        while pos < k {
            digits[pos] += 1;
            if digits[pos] < scalars.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }
    IncidenceStructure::new(
        tower.n() as usize,
        u_labels(tower),
        blocks.into_iter().collect(),
    )
}

/// Blocks are the supports of weight-w codewords of bch(q, q+1, δ, 1),
/// found by scanning all w-subsets for nonzero solutions of M_(δ,w)·x = 0.
/// Valid when w is the minimum weight: then every solution has full
/// support and each block carries a 1-dimensional solution space.
pub fn support_design_scanned(
    tower: &Tower,
    delta: u64,
    w: usize,
    threads: usize,
) -> Result<IncidenceStructure> {
    let hits = weight::scan_weight_supports(tower, delta, w, threads)?;
    let mut blocks = Vec::with_capacity(hits.len());
    for (support, basis) in hits {
        assert_eq!(
            basis.len(),
            1,
            "each minimum-weight support carries a 1-dimensional solution space"
        );
        assert!(
            basis[0].iter().all(|x| x.val() != 0),
            "minimum-weight solutions have full support"
        );
        blocks.push(support);
    }
    IncidenceStructure::new(tower.n() as usize, u_labels(tower), blocks)
}

/// Support design of the weight-w codewords of a BCH code, choosing full
/// enumeration when feasible and the support scan otherwise.
pub fn support_design(
    tower: &Tower,
    code: &CyclicCode,
    delta: u64,
    w: usize,
    threads: usize,
) -> Result<IncidenceStructure> {
    let s = tower.field().subfield(code.scalar_degree())?.size();
    let enumerable = s
        .checked_pow(code.dimension() as u32)
        .is_some_and(|t| t <= (1 << 22));
    if enumerable {
        support_design_enumerated(tower, code, w, threads)
    } else {
        support_design_scanned(tower, delta, w, threads)
    }
}

/// The orbit design (PG(1,q), Orb_B) with base block B = PG(1,δ), under
/// the PGL(2,q) action. Points are PG(1,q) in the canonical order
/// (subfield elements ascending, then ∞).
pub fn orbit_design(tower: &Tower, threads: usize) -> Result<IncidenceStructure> {
    let _ = threads;
    let field = tower.field();
    let sub_q = tower.sub_q();
    let group = moebius::pgl_group(field, sub_q.degree())?;
    let points = group.points();
    let index_of: HashMap<ProjPoint, usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    // base block: PG(1, δ) ⊂ PG(1, q)
    let sub_delta = tower.sub_delta();
    let mut base: Vec<usize> = field
        .subfield_elements(&sub_delta)
        .into_iter()
        .map(|x| index_of[&ProjPoint::Finite(x)])
        .collect();
    base.push(index_of[&ProjPoint::Infinity]);
    base.sort_unstable();
    // orbit closure under the generator permutations
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(base.clone());
    queue.push_back(base);
    while let Some(block) = queue.pop_front() {
        for perm in group.generator_perms() {
            let mut img: Vec<usize> = block.iter().map(|&i| perm[i]).collect();
            img.sort_unstable();
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let delta = tower.delta();
    let q = tower.q();
    let expected = (q + 1) * q * (q - 1) / ((delta + 1) * delta * (delta - 1));
    assert_eq!(
        seen.len() as u64,
        expected,
        "orbit length must be |PGL(2,q)| / |PGL(2,δ)|"
    );
    let labels = points
        .iter()
        .map(|p| match p {
            ProjPoint::Finite(x) => x.val().to_string(),
            ProjPoint::Infinity => "inf".to_string(),
        })
        .collect();
    IncidenceStructure::new(points.len(), labels, seen.into_iter().collect())
}

/// λ = (C(k,t)·|G|) / (C(v,t)·|Stab_B|), as an exact rational.
pub fn lambda_formula(t: u64, v: u64, k: u64, group_order: u64, stab_order: u64) -> Ratio<u64> {
    Ratio::new(binom(k, t) * group_order, binom(v, t) * stab_order)
}

/// True iff mapping every block of d1 through the point bijection yields
/// exactly the block set of d2.
pub fn isomorphic_via(
    d1: &IncidenceStructure,
    d2: &IncidenceStructure,
    bijection: &[usize],
) -> Result<bool> {
    if d1.v != d2.v || bijection.len() != d1.v {
        return Err(Error::InvalidParameter("point-count mismatch".into()));
    }
    let mut seen = vec![false; d1.v];
    for &i in bijection {
        if i >= d1.v || seen[i] {
            return Err(Error::InvalidParameter("not a bijection".into()));
        }
        seen[i] = true;
    }
    let mut mapped: Vec<Vec<usize>> = d1
        .blocks
        .iter()
        .map(|b| {
            let mut img: Vec<usize> = b.iter().map(|&i| bijection[i]).collect();
            img.sort_unstable();
            img
        })
        .collect();
    mapped.sort();
    Ok(mapped == d2.blocks)
}

/// Rank over GF(p) of the blocks×points 0/1 incidence matrix.
pub fn p_rank(design: &IncidenceStructure, p: u64) -> Result<usize> {
    let field = Field::from_params(p, 1)?;
    let one = field.one();
    let mut m = Mat::zeros(&field, design.blocks.len(), design.v);
    for (i, b) in design.blocks.iter().enumerate() {
        for &j in b {
            m.set(i, j, one);
        }
    }
    Ok(linalg::rank(&field, &m))
}

/// All k-subsets of v points: the complete k-uniform design.
pub fn complete_design(v: usize, k: usize) -> Result<IncidenceStructure> {
    if k == 0 || k > v {
        return Err(Error::InvalidParameter("block size out of range".into()));
    }
    let mut blocks = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        blocks.push(subset.clone());
        // next lexicographic k-subset
        let mut pos = k;
        loop {
            if pos == 0 {
                let labels = (0..v).map(|i| i.to_string()).collect();
                return IncidenceStructure::new(v, labels, blocks);
            }
            pos -= 1;
            if subset[pos] < v - (k - pos) {
                subset[pos] += 1;
                for j in pos + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// JSON record for a verified design.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DesignRecord {
    pub v: usize,
    pub t: usize,
    pub k: usize,
    pub lambda: u64,
    pub blocks: Vec<Vec<usize>>,
}

pub fn design_record(design: &IncidenceStructure, cert: &DesignCertificate) -> DesignRecord {
    DesignRecord {
        v: design.v(),
        t: cert.t,
        k: cert.k,
        lambda: cert.lambda,
        blocks: design.blocks().to_vec(),
    }
}
