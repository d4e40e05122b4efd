//! Cyclic and BCH codes over a subfield of the tower: generator and check
//! polynomials, duals via reciprocal check polynomials, cyclicity-defining
//! sets, lifting, trace-representation codewords, coordinate scaling, and
//! the LCD test.
//!
//! Coordinate convention: position j of every codeword is indexed by γ^j,
//! with γ the deterministic norm-one generator β when n = q+1.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cyclotomy;
use crate::error::{Error, Result};
use crate::field::{Elem, Field, Tower};
use crate::linalg::{self, Mat};
use crate::poly::{self, Poly};

/// A cyclic code of length n, identified by its root-exponent set S
/// (the generator vanishes exactly at {γ^s : s ∈ S}) and the equivalent
/// cyclicity-defining set E = {e : -e mod n ∉ S} with |E| = dimension.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    n: u64,
    scalar_degree: usize,
    gamma: Elem,
    root_exponents: BTreeSet<u64>,
    defining_set: BTreeSet<u64>,
    generator: Poly,
    dimension: usize,
}

impl CyclicCode {
    /// Build from the root-exponent set of the generator polynomial.
    /// S must be closed under multiplication by the scalar field size.
    pub fn from_root_exponents(
        field: &Field,
        scalar_degree: usize,
        gamma: Elem,
        n: u64,
        roots: BTreeSet<u64>,
    ) -> Result<CyclicCode> {
        let sub = field.subfield(scalar_degree)?;
        if field.multiplicative_order(gamma)? != n {
            return Err(Error::InvalidParameter(format!(
                "gamma must be a primitive {n}-th root of unity"
            )));
        }
        if roots.iter().any(|&s| s >= n) {
            return Err(Error::InvalidParameter("root exponent out of Z_n".into()));
        }
        let r = sub.size() % n;
        if !cyclotomy::is_invariant(&roots, r, n)? {
            return Err(Error::NotInvariant { r, n });
        }
        let root_elems: Vec<Elem> = roots.iter().map(|&s| field.pow(gamma, s)).collect();
        let generator = Poly::from_roots(field, &root_elems);
        // Closure under ×(scalar size) puts the coefficients in the subfield.
        debug_assert!(generator
            .coeffs()
            .iter()
            .all(|&c| field.is_in_subfield(c, &sub)));
        let defining_set: BTreeSet<u64> = (0..n)
            .filter(|&e| !roots.contains(&((n - e) % n)))
            .collect();
        let dimension = defining_set.len();
        debug_assert_eq!(dimension as u64, n - roots.len() as u64);
        Ok(CyclicCode {
            n,
            scalar_degree,
            gamma,
            root_exponents: roots,
            defining_set,
            generator,
            dimension,
        })
    }

    /// Build from the cyclicity-defining set E; dimension = |E|.
    pub fn from_defining_set(
        field: &Field,
        scalar_degree: usize,
        gamma: Elem,
        n: u64,
        defining_set: BTreeSet<u64>,
    ) -> Result<CyclicCode> {
        if defining_set.iter().any(|&e| e >= n) {
            return Err(Error::InvalidParameter(
                "defining set element out of Z_n".into(),
            ));
        }
        let roots: BTreeSet<u64> = (0..n)
            .filter(|&s| !defining_set.contains(&((n - s) % n)))
            .collect();
        let code = Self::from_root_exponents(field, scalar_degree, gamma, n, roots)?;
        debug_assert_eq!(code.defining_set, defining_set);
        Ok(code)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Degree over GF(p) of the scalar field.
    pub fn scalar_degree(&self) -> usize {
        self.scalar_degree
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn root_exponents(&self) -> &BTreeSet<u64> {
        &self.root_exponents
    }

    pub fn defining_set(&self) -> &BTreeSet<u64> {
        &self.defining_set
    }

    /// Generator matrix: k cyclic shifts of the generator polynomial.
    pub fn generator_matrix(&self, field: &Field) -> Mat {
        let n = self.n as usize;
        let mut m = Mat::zeros(field, self.dimension, n);
        for i in 0..self.dimension {
            for (j, &c) in self.generator.coeffs().iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        m
    }
}

/// The narrow-sense (h = 1) or general-offset antiprimitive BCH code
/// C_(q, q+1, δ, h): generator is the lcm of the minimal polynomials of
/// β^h, ..., β^(h+δ-2) over GF(q).
pub fn bch(tower: &Tower, delta: u64, h: i64) -> Result<CyclicCode> {
    let q = tower.q();
    let n = tower.n();
    if delta < 2 || delta > n {
        return Err(Error::InvalidParameter(format!(
            "designed distance {delta} outside 2..={n}"
        )));
    }
    let mut roots: BTreeSet<u64> = BTreeSet::new();
    for i in 0..delta - 1 {
        let e = (h + i as i64).rem_euclid(n as i64) as u64;
        roots.extend(cyclotomy::coset_of(e, q % n, n)?);
    }
    let code = CyclicCode::from_root_exponents(
        tower.field(),
        tower.sub_q().degree(),
        tower.beta(),
        n,
        roots,
    )?;
    // Cross-check against the lcm-of-minimal-polynomials definition.
    debug_assert_eq!(code.generator(), &bch_generator_by_lcm(tower, delta, h));
    Ok(code)
}

fn bch_generator_by_lcm(tower: &Tower, delta: u64, h: i64) -> Poly {
    let field = tower.field();
    let sub_q = tower.sub_q();
    let n = tower.n();
    let mut g = Poly::one(field);
    for i in 0..delta - 1 {
        let e = (h + i as i64).rem_euclid(n as i64) as u64;
        let mp = poly::minimal_polynomial(field, field.pow(tower.beta(), e), &sub_q);
        g = poly::lcm(field, &g, &mp);
    }
    g
}

/// Dual code: generator is the monic reciprocal of the check polynomial
/// h(x) = (x^n - 1)/g(x).
pub fn dual(field: &Field, code: &CyclicCode) -> CyclicCode {
    let n = code.n;
    // x^n - 1
    let mut xn1 = vec![field.zero(); n as usize + 1];
    xn1[0] = field.neg(field.one());
    xn1[n as usize] = field.one();
    let xn1 = Poly::new(xn1);
    let (check, rem) = poly::divmod(field, &xn1, code.generator()).expect("generator divides");
    debug_assert!(rem.is_zero());
    let dual_gen = check.reciprocal().monic(field);
    // Root exponents of the dual: negatives of the non-roots of g.
    let roots: BTreeSet<u64> = (0..n)
        .filter(|&s| !code.root_exponents.contains(&s))
        .map(|s| (n - s) % n)
        .collect();
    let dual_code =
        CyclicCode::from_root_exponents(field, code.scalar_degree, code.gamma, n, roots)
            .expect("dual root set is invariant");
    debug_assert_eq!(dual_code.generator(), &dual_gen);
    debug_assert_eq!(dual_code.dimension + code.dimension, n as usize);
    dual_code
}

/// Membership by root evaluation: Σ_j w_j γ^(j·s) = 0 for every root
/// exponent s of the generator.
pub fn contains(field: &Field, code: &CyclicCode, word: &[Elem]) -> Result<bool> {
    if word.len() as u64 != code.n {
        return Err(Error::InvalidParameter(format!(
            "word length {} != code length {}",
            word.len(),
            code.n
        )));
    }
    for &s in &code.root_exponents {
        let gs = field.pow(code.gamma, s);
        let mut acc = field.zero();
        let mut pw = field.one();
        for &w in word {
            acc = field.add(acc, field.mul(w, pw));
            pw = field.mul(pw, gs);
        }
        if acc.val() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lift to scalars in GF(q^ell): same defining set, same generator, same
/// dimension; only the scalar field grows.
pub fn lift(field: &Field, code: &CyclicCode, ell: usize) -> Result<CyclicCode> {
    if ell == 0 {
        return Err(Error::InvalidParameter(
            "lift degree must be positive".into(),
        ));
    }
    let new_degree = code.scalar_degree * ell;
    if field.degree() % new_degree != 0 {
        return Err(Error::InvalidParameter(format!(
            "lifted scalars GF(p^{new_degree}) exceed the ambient field"
        )));
    }
    let mut lifted = code.clone();
    lifted.scalar_degree = new_degree;
    Ok(lifted)
}

/// The dual-code parameterization: w_u = Tr_{q²/q}(Σ_i a_i u^i) at every
/// u = β^j. Lands in the dual of bch(q, q+1, δ, 1) by Delsarte's theorem.
pub fn trace_codeword(tower: &Tower, delta: u64, coeffs: &[Elem]) -> Result<Vec<Elem>> {
    if coeffs.len() as u64 != delta - 1 {
        return Err(Error::InvalidParameter(format!(
            "expected {} coefficients, got {}",
            delta - 1,
            coeffs.len()
        )));
    }
    let field = tower.field();
    let sub_q = tower.sub_q();
    let word: Vec<Elem> = tower
        .u_group()
        .iter()
        .map(|&u| {
            let mut acc = field.zero();
            let mut pw = field.one();
            for &a in coeffs {
                pw = field.mul(pw, u);
                acc = field.add(acc, field.mul(a, pw));
            }
            field.trace_to(acc, &sub_q)
        })
        .collect();
    #[cfg(debug_assertions)]
    {
        let d = dual(field, &bch(tower, delta, 1)?);
        debug_assert!(contains(field, &d, &word)?);
    }
    Ok(word)
}

/// A plain linear code handle, as produced by coordinate scaling.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: Mat,
}

impl LinearCode {
    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }
}

/// The coordinatewise-scaled code a·C. All scale entries must be nonzero.
pub fn scale(field: &Field, code: &CyclicCode, a: &[Elem]) -> Result<LinearCode> {
    if a.len() as u64 != code.n {
        return Err(Error::InvalidParameter(
            "scale vector length mismatch".into(),
        ));
    }
    if a.iter().any(|x| x.val() == 0) {
        return Err(Error::InvalidParameter(
            "scale entries must be nonzero".into(),
        ));
    }
    Ok(LinearCode {
        generator: code.generator_matrix(field).scale_cols(field, a),
    })
}

/// Verify (a·C)^⊥ = a^{-1}·C^⊥ by row-space equality of the two generator
/// matrices.
pub fn scale_duality_holds(field: &Field, code: &CyclicCode, a: &[Elem]) -> Result<bool> {
    let scaled = scale(field, code, a)?;
    // dual of a·C: nullspace basis of its generator matrix
    let lhs_rows = linalg::nullspace(field, scaled.generator());
    let lhs = Mat::from_rows(field, &lhs_rows);
    // a^{-1}·C^⊥
    let a_inv: Vec<Elem> = a
        .iter()
        .map(|&x| field.inv(x).expect("nonzero"))
        .collect::<Vec<_>>();
    let rhs = scale(field, &dual(field, code), &a_inv)?;
    Ok(linalg::row_spaces_equal(field, &lhs, rhs.generator()))
}

/// LCD test: C ∩ C^⊥ = {0} iff the stacked generator matrices of C and
/// C^⊥ have rank n.
pub fn is_lcd(field: &Field, code: &CyclicCode) -> bool {
    let g = code.generator_matrix(field);
    let gd = dual(field, code).generator_matrix(field);
    linalg::rank(field, &g.stacked(&gd)) == code.n as usize
}

pub fn hamming_weight(word: &[Elem]) -> usize {
    word.iter().filter(|x| x.val() != 0).count()
}

/// JSON descriptor for a constructed BCH code.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub q: u64,
    pub n: u64,
    pub delta: u64,
    pub h: i64,
    pub dimension: usize,
    pub generator: Vec<u64>,
    pub defining_set: Vec<u64>,
}

pub fn descriptor(tower: &Tower, code: &CyclicCode, delta: u64, h: i64) -> CodeDescriptor {
    CodeDescriptor {
        q: tower.q(),
        n: code.n(),
        delta,
        h,
        dimension: code.dimension(),
        generator: code.generator().serialize_vals(),
        defining_set: code.defining_set().iter().copied().collect(),
    }
}
