//! Weight distributions and minimum-distance certification: exhaustive and
//! trace-parameterized enumeration kernels, the structured support matrix
//! M_(δ,ℓ), explicit minimum-weight codewords, and the MacWilliams
//! transform in exact big-integer arithmetic.
//!
//! Enumeration kernels split their index space into disjoint contiguous
//! ranges per thread; partial counts merge by vector addition, so results
//! are identical for every thread count.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{Signed, Zero};

use crate::code::{self, CyclicCode};
use crate::error::{Error, Result};
use crate::field::{Elem, Field, SubfieldHandle, Tower};
use crate::linalg::{self, Mat};

/// Exhaustive enumeration is capped at 2^26 codewords.
const EXHAUSTIVE_GUARD: u64 = 1 << 26;
/// Trace-parameterized enumeration is capped at 2^28 coefficient tuples.
const TRACE_GUARD: u64 = 1 << 28;
/// Support scans are capped at 10^7 candidate supports.
const SUPPORT_GUARD: u64 = 10_000_000;

/// Exact codeword counts by Hamming weight, A_0..A_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> WeightDistribution {
        WeightDistribution { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest i > 0 with A_i != 0.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }

    /// Decimal strings, the JSON interchange form for large counts.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_str_radix(10)).collect()
    }
}

fn split_ranges(total: u64, threads: usize) -> Vec<(u64, u64)> {
    let t = threads.max(1) as u64;
    let chunk = total / t;
    let rem = total % t;
    let mut out = Vec::new();
    let mut start = 0;
    for i in 0..t {
        let len = chunk + if i < rem { 1 } else { 0 };
        if len > 0 {
            out.push((start, start + len));
        }
        start += len;
    }
    out
}

/// Exact weight distribution of the row space of a generator matrix, by
/// iterating all |scalars|^k messages. Message index ranges are chunked
/// across threads; an incremental odometer reuses suffix sums so each word
/// costs O(n) instead of O(k·n).
pub fn exhaustive_weights(
    field: &Field,
    gen: &Mat,
    scalars: &SubfieldHandle,
    threads: usize,
) -> Result<WeightDistribution> {
    let k = gen.rows();
    let n = gen.cols();
    let s = scalars.size();
    let total = s
        .checked_pow(k as u32)
        .filter(|&t| t <= EXHAUSTIVE_GUARD)
        .ok_or_else(|| {
            Error::GuardExceeded(format!("{s}^{k} codewords exceed the exhaustive limit"))
        })?;
    let scalar_elems = field.subfield_elements(scalars);
    // scaled_rows[i][v] = row i of gen scaled by scalar v
    let scaled_rows: Vec<Vec<Vec<Elem>>> = (0..k)
        .map(|i| {
            scalar_elems
                .iter()
                .map(|&v| gen.row(i).iter().map(|&x| field.mul(x, v)).collect())
                .collect()
        })
        .collect();
    let ranges = split_ranges(total, threads);
    let mut partials: Vec<Vec<u64>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                let scaled_rows = &scaled_rows;
                scope.spawn(move || {
                    let mut counts = vec![0u64; n + 1];
                    if k == 0 {
                        if lo == 0 {
                            counts[0] = 1;
                        }
                        return counts;
                    }
                    // digits of lo in base s, least significant first
                    let mut digits = vec![0usize; k];
                    let mut idx = lo;
                    for d in digits.iter_mut() {
                        *d = (idx % s) as usize;
                        idx /= s;
                    }
                    // suffix[i] = Σ_{j >= i} scaled_rows[j][digits[j]]
                    let mut suffix = vec![vec![field.zero(); n]; k + 1];
                    for i in (0..k).rev() {
                        for col in 0..n {
                            suffix[i][col] =
                                field.add(suffix[i + 1][col], scaled_rows[i][digits[i]][col]);
                        }
                    }
                    let mut remaining = hi - lo;
                    loop {
                        let w = suffix[0].iter().filter(|x| x.val() != 0).count();
                        counts[w] += 1;
                        remaining -= 1;
                        if remaining == 0 {
                            break;
                        }
                        // odometer step: bump the lowest digit, carry upward,
                        // then rebuild the suffix sums below the carry point
                        let mut pos = 0;
                        loop {
                            digits[pos] += 1;
                            if digits[pos] < s as usize {
                                break;
                            }
                            digits[pos] = 0;
                            pos += 1;
                        }
                        for i in (0..=pos).rev() {
                            for col in 0..n {
                                suffix[i][col] =
                                    field.add(suffix[i + 1][col], scaled_rows[i][digits[i]][col]);
                            }
                        }
                    }
                    counts
                })
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("enumeration thread panicked"));
        }
    });
    let mut counts = vec![BigUint::zero(); n + 1];
    for part in partials {
        for (i, c) in part.into_iter().enumerate() {
            counts[i] += c;
        }
    }
    Ok(WeightDistribution::new(counts))
}

/// Weight distribution of a cyclic code by full message enumeration.
pub fn weight_distribution_exhaustive(
    field: &Field,
    code: &CyclicCode,
    threads: usize,
) -> Result<WeightDistribution> {
    let gen = code.generator_matrix(field);
    let scalars = field.subfield(code.scalar_degree())?;
    exhaustive_weights(field, &gen, &scalars, threads)
}

/// Weight distribution of the dual of bch(q, q+1, δ, 1) through its trace
/// parameterization: every dual codeword is (Tr(Σ aᵢ uⁱ))_u for a unique
/// a ∈ GF(q²)^(δ-1), so weights are q+1 minus the zero counts of f.
pub fn weight_distribution_trace(
    tower: &Tower,
    delta: u64,
    threads: usize,
) -> Result<WeightDistribution> {
    let field = tower.field();
    let q = tower.q();
    let q2 = field.size();
    let dim = (delta - 1) as usize;
    let total = q2
        .checked_pow(dim as u32)
        .filter(|&t| t <= TRACE_GUARD)
        .ok_or_else(|| {
            Error::GuardExceeded(format!(
                "{q2}^{dim} coefficient tuples exceed the trace enumeration limit"
            ))
        })?;
    let n = (q + 1) as usize;
    // u_pows[j][i] = (β^j)^(i+1); trace_is_zero[v] for every ambient value
    let u_pows: Vec<Vec<Elem>> = tower
        .u_group()
        .iter()
        .map(|&u| (1..=dim as u64).map(|i| field.pow(u, i)).collect())
        .collect();
    let sub_q = tower.sub_q();
    let trace_is_zero: Vec<bool> = (0..field.size())
        .map(|v| field.trace_to(field.elem(v).unwrap(), &sub_q).val() == 0)
        .collect();
    let ranges = split_ranges(total, threads);
    let mut partials: Vec<Vec<u64>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                let u_pows = &u_pows;
                let trace_is_zero = &trace_is_zero;
                scope.spawn(move || {
                    let mut counts = vec![0u64; n + 1];
                    for idx in lo..hi {
                        let mut rest = idx;
                        let mut coeffs = [field.zero(); 8];
                        for c in coeffs.iter_mut().take(dim) {
                            *c = field.elem(rest % q2).unwrap();
                            rest /= q2;
                        }
                        let mut zeros = 0usize;
                        for pows in u_pows {
                            let mut acc = field.zero();
                            for i in 0..dim {
                                acc = field.add(acc, field.mul(coeffs[i], pows[i]));
                            }
                            if trace_is_zero[acc.val() as usize] {
                                zeros += 1;
                            }
                        }
                        counts[n - zeros] += 1;
                    }
                    counts
                })
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("enumeration thread panicked"));
        }
    });
    let mut counts = vec![BigUint::zero(); n + 1];
    for part in partials {
        for (i, c) in part.into_iter().enumerate() {
            counts[i] += c;
        }
    }
    Ok(WeightDistribution::new(counts))
}

// ---------------------------------------------------------------------------
// The support matrix M_(δ,ℓ) and weight-w search
// ---------------------------------------------------------------------------

/// M_(δ,ℓ): rows are the exponents -(δ-1)..-1, +1..+(δ-1) (2(δ-1) rows,
/// exponent 0 excluded), columns the chosen points of U_{q+1}.
pub fn support_matrix(tower: &Tower, delta: u64, points: &[Elem]) -> Mat {
    let field = tower.field();
    let d = delta as i64;
    let exponents: Vec<i64> = (-(d - 1)..0).chain(1..d).collect();
    let mut m = Mat::zeros(field, exponents.len(), points.len());
    for (r, &e) in exponents.iter().enumerate() {
        for (c, &u) in points.iter().enumerate() {
            m.set(r, c, field.pow_signed(u, e).expect("points are units"));
        }
    }
    m
}

/// Expand a GF(q²) system into a GF(q) system over the basis {1, θ} with
/// θ = β: each row z = z₀ + θz₁ becomes the two rows z₀ and z₁.
pub fn expand_over_subfield(tower: &Tower, m: &Mat) -> Mat {
    let field = tower.field();
    let e = tower.sub_q().degree();
    let theta = tower.beta();
    let theta_diff = field.sub(theta, field.frobenius(theta, e));
    let diff_inv = field
        .inv(theta_diff)
        .expect("theta generates GF(q²) over GF(q)");
    let mut out = Mat::zeros(field, 2 * m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let z = m.get(i, j);
            let z1 = field.mul(field.sub(z, field.frobenius(z, e)), diff_inv);
            let z0 = field.sub(z, field.mul(theta, z1));
            debug_assert!(field.is_in_subfield(z0, &tower.sub_q()));
            debug_assert!(field.is_in_subfield(z1, &tower.sub_q()));
            out.set(2 * i, j, z0);
            out.set(2 * i + 1, j, z1);
        }
    }
    out
}

/// GF(q)-nullspace basis of M_(δ,ℓ) on the given support points.
pub fn support_solutions(tower: &Tower, delta: u64, points: &[Elem]) -> Vec<Vec<Elem>> {
    let m = support_matrix(tower, delta, points);
    let expanded = expand_over_subfield(tower, &m);
    linalg::nullspace(tower.field(), &expanded)
}

fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    binomial(n, k.min(n - k))
}

/// First support (colex order) and solution of M·x = 0 with full support,
/// yielding a codeword of bch(q, q+1, δ, 1) of weight exactly w; `None`
/// when no weight-w codeword exists.
pub fn exists_word_of_weight(tower: &Tower, delta: u64, w: usize) -> Result<Option<Vec<Elem>>> {
    let field = tower.field();
    let n = tower.n() as usize;
    if w == 0 || w > n {
        return Err(Error::InvalidParameter(format!("weight {w} out of range")));
    }
    if binom_u64(n as u64, w as u64) > SUPPORT_GUARD {
        return Err(Error::GuardExceeded(format!(
            "C({n},{w}) supports exceed the scan limit"
        )));
    }
    let u = tower.u_group();
    let mut subset: Vec<usize> = (0..w).collect();
    loop {
        let points: Vec<Elem> = subset.iter().map(|&j| u[j]).collect();
        for sol in support_solutions(tower, delta, &points) {
            if sol.iter().all(|x| x.val() != 0) {
                let mut word = vec![field.zero(); n];
                for (i, &j) in subset.iter().enumerate() {
                    word[j] = sol[i];
                }
                debug_assert!({
                    let c = code::bch(tower, delta, 1)?;
                    code::contains(field, &c, &word)?
                });
                return Ok(Some(word));
            }
        }
        if !next_colex(&mut subset, n) {
            return Ok(None);
        }
    }
}

/// Advance a sorted index subset to its colex successor inside 0..n.
fn next_colex(subset: &mut [usize], n: usize) -> bool {
    let w = subset.len();
    for i in 0..w {
        let cap = if i + 1 < w { subset[i + 1] } else { n };
        if subset[i] + 1 < cap {
            subset[i] += 1;
            for (j, slot) in subset.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// Subset of given rank in colex order (combinatorial number system).
fn unrank_colex(mut rank: u64, w: usize) -> Vec<usize> {
    let mut out = vec![0usize; w];
    for i in (0..w).rev() {
        // largest a with C(a, i+1) <= rank
        let mut a = i;
        while binom_u64(a as u64 + 1, i as u64 + 1) <= rank {
            a += 1;
        }
        out[i] = a;
        rank -= binom_u64(a as u64, i as u64 + 1);
    }
    out
}

/// A support (point indices in β^j order) with the GF(q)-nullspace basis
/// of its expanded M_(δ,·) system.
pub type SupportHit = (Vec<usize>, Vec<Vec<Elem>>);

/// All w-supports carrying a codeword, each with its GF(q)-nullspace basis,
/// scanned over every w-subset of U_{q+1} in colex order. Chunked across
/// threads by colex rank; output order is deterministic.
pub fn scan_weight_supports(
    tower: &Tower,
    delta: u64,
    w: usize,
    threads: usize,
) -> Result<Vec<SupportHit>> {
    let n = tower.n() as usize;
    if w == 0 || w > n {
        return Err(Error::InvalidParameter(format!("weight {w} out of range")));
    }
    let total = binom_u64(n as u64, w as u64);
    if total > SUPPORT_GUARD {
        return Err(Error::GuardExceeded(format!(
            "C({n},{w}) supports exceed the scan limit"
        )));
    }
    let u = tower.u_group();
    let ranges = split_ranges(total, threads);
    let mut found: Vec<Vec<SupportHit>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut subset = unrank_colex(lo, w);
                    for _ in lo..hi {
                        let points: Vec<Elem> = subset.iter().map(|&j| u[j]).collect();
                        let sols = support_solutions(tower, delta, &points);
                        if !sols.is_empty() {
                            out.push((subset.clone(), sols));
                        }
                        next_colex(&mut subset, n);
                    }
                    out
                })
            })
            .collect();
        for h in handles {
            found.push(h.join().expect("scan thread panicked"));
        }
    });
    Ok(found.into_iter().flatten().collect())
}

/// The explicit weight-(δ+1) codeword parameterized by u₀ ∈ U_{q+1} \ {±1}:
/// support {(c + u₀^q)/(c + u₀) : c ∈ GF(δ)} ∪ {1}, values
/// (c + u₀)^((q+1)(δ-1)) and 1 at position 1.
pub fn explicit_min_word(tower: &Tower, delta: u64, u0: Elem) -> Result<Vec<Elem>> {
    let field = tower.field();
    let one = field.one();
    if !tower.is_norm_one(u0) || u0 == one || u0 == field.neg(one) {
        return Err(Error::Degenerate(
            "u0 must lie in U_{q+1} minus {1, -1}".into(),
        ));
    }
    let q = tower.q();
    let exp = (q + 1) * (delta - 1);
    let e = tower.sub_q().degree();
    let u0q = field.frobenius(u0, e);
    let sub_q = tower.sub_q();
    let mut word = vec![field.zero(); tower.n() as usize];
    for c in field.subfield_elements(&tower.sub_delta()) {
        let den = field.add(c, u0);
        debug_assert!(den.val() != 0, "u0 not in GF(delta), so c + u0 != 0");
        let uc = field.div(field.add(c, u0q), den).expect("nonzero");
        let ac = field.pow(den, exp);
        debug_assert!(field.is_in_subfield(ac, &sub_q) && ac.val() != 0);
        let j = tower.u_index(uc).expect("support point lies in U_{q+1}");
        assert!(word[j].val() == 0, "support points must be distinct");
        word[j] = ac;
    }
    let j_one = tower.u_index(one).expect("1 is in U_{q+1}");
    assert!(word[j_one].val() == 0, "support points must be distinct");
    word[j_one] = one;
    debug_assert_eq!(code::hamming_weight(&word) as u64, delta + 1);
    Ok(word)
}

// ---------------------------------------------------------------------------
// MacWilliams transform
// ---------------------------------------------------------------------------

fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// Exact dual weight distribution via the MacWilliams identity:
/// A'_j = q^{-k} Σ_i A_i K_j(i) with the Krawtchouk polynomials
/// K_j(i) = Σ_s (-1)^s C(i,s) C(n-i, j-s) (q-1)^(j-s).
pub fn macwilliams(
    dist: &WeightDistribution,
    n: usize,
    k: usize,
    q: u64,
) -> Result<WeightDistribution> {
    if dist.counts.len() != n + 1 {
        return Err(Error::InvalidParameter(
            "distribution length mismatch".into(),
        ));
    }
    let qk = BigUint::from(q).pow(k as u32);
    if dist.total() != qk {
        return Err(Error::InvalidParameter(format!(
            "inconsistent distribution: total != {q}^{k}"
        )));
    }
    let qm1 = BigInt::from(q - 1);
    let qk = BigInt::from(qk);
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n as u64 {
        let mut acc = BigInt::zero();
        for i in 0..=n as u64 {
            let ai = BigInt::from(dist.counts[i as usize].clone());
            if ai.is_zero() {
                continue;
            }
            let mut kji = BigInt::zero();
            for s in 0..=j {
                let term = big_binomial(i, s)
                    * big_binomial(n as u64 - i, j - s)
                    * qm1.pow((j - s) as u32);
                if s % 2 == 0 {
                    kji += term;
                } else {
                    kji -= term;
                }
            }
            acc += ai * kji;
        }
        let (quot, rem) = num_integer::Integer::div_rem(&acc, &qk);
        if !rem.is_zero() || quot.is_negative() {
            return Err(Error::InvalidParameter(
                "transform is not a nonnegative integer vector; input is not a code distribution"
                    .into(),
            ));
        }
        out.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightDistribution::new(out))
}
