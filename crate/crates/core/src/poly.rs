//! Univariate polynomials over a tower field: ring arithmetic, minimal
//! polynomials, interpolation on U_{q+1}, elementary symmetric polynomials,
//! and the one-deleted-row generalized Vandermonde determinant.

use crate::error::{Error, Result};
use crate::field::{Elem, Field, SubfieldHandle};

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
/// The zero polynomial is the empty vector; its degree is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(coeffs: Vec<Elem>) -> Poly {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly {
            coeffs: vec![field.one()],
        }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    /// x - r
    pub fn linear_root(field: &Field, r: Elem) -> Poly {
        Poly {
            coeffs: vec![field.neg(r), field.one()],
        }
    }

    /// Monic product Π (x - r) over the given roots.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Poly {
        let mut acc = Poly::one(field);
        for &r in roots {
            acc = mul(field, &acc, &Poly::linear_root(field, r));
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.val() == 0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` marks the zero polynomial ("minus infinity").
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, field: &Field) -> Elem {
        self.coeffs.get(i).copied().unwrap_or_else(|| field.zero())
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn monic(&self, field: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let li = field.inv(l).expect("leading coefficient is nonzero");
                Poly {
                    coeffs: self.coeffs.iter().map(|&c| field.mul(c, li)).collect(),
                }
            }
        }
    }

    /// Coefficients reversed: x^deg · f(1/x).
    pub fn reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    pub fn serialize_vals(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.val()).collect()
    }

    pub fn from_vals(field: &Field, vals: &[u64]) -> Result<Poly> {
        let coeffs = vals
            .iter()
            .map(|&v| field.elem(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

pub fn add(field: &Field, a: &Poly, b: &Poly) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| field.add(a.coeff(i, field), b.coeff(i, field)))
        .collect();
    Poly::new(coeffs)
}

pub fn sub(field: &Field, a: &Poly, b: &Poly) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| field.sub(a.coeff(i, field), b.coeff(i, field)))
        .collect();
    Poly::new(coeffs)
}

pub fn mul(field: &Field, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut coeffs = vec![field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x.val() == 0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            coeffs[i + j] = field.add(coeffs[i + j], field.mul(x, y));
        }
    }
    Poly::new(coeffs)
}

/// Quotient and remainder; error on division by the zero polynomial.
pub fn divmod(field: &Field, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let db = match b.degree() {
        None => return Err(Error::DivisionByZero),
        Some(d) => d,
    };
    let mut rem = a.coeffs.clone();
    if rem.len() <= db {
        return Ok((Poly::zero(), a.clone()));
    }
    let lead_inv = field.inv(b.leading().unwrap()).expect("nonzero leading");
    let mut quot = vec![field.zero(); rem.len() - db];
    let mut top = rem.len();
    while top > db {
        let c = field.mul(rem[top - 1], lead_inv);
        quot[top - 1 - db] = c;
        if c.val() != 0 {
            for i in 0..=db {
                let idx = top - 1 - db + i;
                rem[idx] = field.sub(rem[idx], field.mul(c, b.coeffs[i]));
            }
        }
        top -= 1;
    }
    Ok((Poly::new(quot), Poly::new(rem)))
}

/// Monic gcd; gcd(f, 0) = monic(f).
pub fn gcd(field: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = divmod(field, &x, &y).expect("y is nonzero");
        x = y;
        y = r;
    }
    x.monic(field)
}

/// Monic lcm via a·b / gcd(a,b); lcm with the zero polynomial is zero.
pub fn lcm(field: &Field, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(field, a, b);
    let (q, r) = divmod(field, &mul(field, a, b), &g).expect("gcd is nonzero");
    debug_assert!(r.is_zero());
    q.monic(field)
}

/// Minimal polynomial of x over the subfield: monic product over the orbit
/// of x under Frobenius^sub_degree. Coefficients land in the subfield.
pub fn minimal_polynomial(field: &Field, x: Elem, sub: &SubfieldHandle) -> Poly {
    let mut orbit = vec![x];
    let mut y = field.frobenius(x, sub.degree());
    while y != x {
        orbit.push(y);
        y = field.frobenius(y, sub.degree());
    }
    let mp = Poly::from_roots(field, &orbit);
    debug_assert!(mp.coeffs().iter().all(|&c| field.is_in_subfield(c, sub)));
    debug_assert_eq!(mp.eval(field, x), field.zero());
    mp
}

/// Coefficients (a_0, ..., a_{n-1}) of the unique polynomial expansion of a
/// function on U_n given by values in the order of `u_order`:
/// a_i = Σ_u f(u)·u^{-i}. Note n ≡ 1 mod p here, so no scaling divisor exists.
///
/// `u_order` must list all of U_n (distinct n-th roots of unity); `values[j]`
/// is f(u_order[j]).
pub fn interpolate_on_un(field: &Field, u_order: &[Elem], values: &[Elem]) -> Result<Vec<Elem>> {
    let n = u_order.len() as u64;
    if values.len() != u_order.len() {
        return Err(Error::InvalidParameter(format!(
            "value map is incomplete: {} values for {} points",
            values.len(),
            u_order.len()
        )));
    }
    {
        let mut seen = std::collections::HashSet::new();
        for &u in u_order {
            if field.pow(u, n).val() != 1 || !seen.insert(u.val()) {
                return Err(Error::InvalidParameter(
                    "points must be the distinct n-th roots of unity".into(),
                ));
            }
        }
    }
    // n ≡ 1 mod p is what makes Σ_u u^0 = n = 1; assert it once.
    assert_eq!(
        n % field.characteristic(),
        1,
        "interpolation on U_n requires n ≡ 1 mod p"
    );
    let mut coeffs = Vec::with_capacity(u_order.len());
    for i in 0..u_order.len() {
        let mut acc = field.zero();
        for (j, &u) in u_order.iter().enumerate() {
            let ui = field.pow_signed(u, -(i as i64)).expect("u is nonzero");
            acc = field.add(acc, field.mul(values[j], ui));
        }
        coeffs.push(acc);
    }
    Ok(coeffs)
}

/// Evaluate Σ a_i u^i at every point of `u_order`.
pub fn eval_expansion(field: &Field, coeffs: &[Elem], u_order: &[Elem]) -> Vec<Elem> {
    u_order
        .iter()
        .map(|&u| {
            let mut acc = field.zero();
            for &c in coeffs.iter().rev() {
                acc = field.add(field.mul(acc, u), c);
            }
            acc
        })
        .collect()
}

/// σ_ℓ(points) via coefficient extraction from Π (1 + u_i t).
pub fn elementary_symmetric(field: &Field, ell: usize, points: &[Elem]) -> Result<Elem> {
    let n = points.len();
    if ell > n {
        return Err(Error::InvalidParameter(format!(
            "sigma_{ell} undefined on {n} points"
        )));
    }
    let mut e = vec![field.zero(); n + 1];
    e[0] = field.one();
    for (k, &u) in points.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            e[j] = field.add(e[j], field.mul(u, e[j - 1]));
        }
    }
    Ok(e[ell])
}

/// The generalized Vandermonde determinant with the degree-ℓ row deleted,
/// evaluated through its closed form (Π_{j<i} (u_i - u_j)) · σ_{n-ℓ}.
pub fn deleted_row_vandermonde(field: &Field, ell: usize, points: &[Elem]) -> Result<Elem> {
    let n = points.len();
    if ell > n {
        return Err(Error::InvalidParameter(format!(
            "row index {ell} out of range for {n} points"
        )));
    }
    for i in 0..n {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(Error::Degenerate("repeated interpolation point".into()));
            }
        }
    }
    let mut prod = field.one();
    for i in 0..n {
        for j in 0..i {
            prod = field.mul(prod, field.sub(points[i], points[j]));
        }
    }
    let sigma = elementary_symmetric(field, n - ell, points)?;
    Ok(field.mul(prod, sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Tower;
    use crate::linalg::{determinant, Mat};

    fn gf9() -> Field {
        Field::from_params(3, 2).unwrap()
    }

    #[test]
    fn ring_basics() {
        let f = gf9();
        let one = Poly::one(&f);
        let xm1 = Poly::linear_root(&f, f.one());
        let xp1 = Poly::linear_root(&f, f.neg(f.one()));
        // lcm(x-1, x+1) = x² - 1
        let l = lcm(&f, &xm1, &xp1);
        let x2m1 = Poly::new(vec![f.neg(f.one()), f.zero(), f.one()]);
        assert_eq!(l, x2m1);
        // divmod((x²-1), (x-1)) = (x+1, 0)
        let (q, r) = divmod(&f, &x2m1, &xm1).unwrap();
        assert_eq!(q, xp1);
        assert!(r.is_zero());
        // gcd(f, 0) = monic(f)
        let two = f.elem(2).unwrap();
        let g = Poly::new(vec![two, two]);
        assert_eq!(gcd(&f, &g, &Poly::zero()), g.monic(&f));
        assert!(divmod(&f, &one, &Poly::zero()).is_err());
    }

    #[test]
    fn gcd_times_lcm_is_monic_product() {
        let f = gf9();
        let mut s = 7u64;
        let mut rnd_poly = |deg: usize| {
            let coeffs = (0..=deg)
                .map(|_| {
                    s = s
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    f.elem(s % 9).unwrap()
                })
                .collect();
            Poly::new(coeffs)
        };
        for _ in 0..50 {
            let a = rnd_poly(4);
            let b = rnd_poly(3);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let lhs = mul(&f, &gcd(&f, &a, &b), &lcm(&f, &a, &b));
            assert_eq!(lhs.monic(&f), mul(&f, &a, &b).monic(&f));
        }
    }

    #[test]
    fn evaluation_cases() {
        let f = Field::from_params(3, 1).unwrap();
        let poly = Poly::new(vec![f.one(), f.zero(), f.one()]); // x² + 1
        assert_eq!(poly.eval(&f, f.one()).val(), 2);
        assert_eq!(Poly::zero().eval(&f, f.one()), f.zero());
        // agreement with term-by-term power sums
        let f9 = gf9();
        let mut s = 3u64;
        for _ in 0..50 {
            s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            let x = f9.elem(s % 9).unwrap();
            let coeffs: Vec<Elem> = (0..5)
                .map(|i| f9.elem((s >> (3 * i)) % 9).unwrap())
                .collect();
            let p = Poly::new(coeffs.clone());
            let mut naive = f9.zero();
            for (i, &c) in coeffs.iter().enumerate() {
                naive = f9.add(naive, f9.mul(c, f9.pow(x, i as u64)));
            }
            assert_eq!(p.eval(&f9, x), naive);
        }
    }

    #[test]
    fn minimal_polynomial_of_one_and_of_beta() {
        let t = Tower::new(3, 1, 2).unwrap(); // q = 9
        let f = t.field();
        let sub_q = t.sub_q();
        let mp1 = minimal_polynomial(f, f.one(), &sub_q);
        assert_eq!(mp1, Poly::linear_root(f, f.one()));
        // degree 2, shape x² - (β + β^q)x + 1
        let beta = t.beta();
        let mp = minimal_polynomial(f, beta, &sub_q);
        assert_eq!(mp.degree(), Some(2));
        let bq = f.frobenius(beta, t.sub_q().degree());
        let expect = Poly::new(vec![f.one(), f.neg(f.add(beta, bq)), f.one()]);
        assert_eq!(mp, expect);
        // vanishing at x and at every Frobenius conjugate of x
        let mut s = 11u64;
        for _ in 0..100 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            let x = f.elem(s % f.size()).unwrap();
            let mp = minimal_polynomial(f, x, &sub_q);
            assert_eq!(mp.eval(f, x), f.zero());
            let conj = f.frobenius(x, sub_q.degree());
            assert_eq!(minimal_polynomial(f, conj, &sub_q), mp);
        }
    }

    #[test]
    fn interpolation_on_u10() {
        let t = Tower::new(3, 1, 2).unwrap();
        let f = t.field();
        let u = t.u_group();
        // constant function
        let c = f.elem(5).unwrap();
        let coeffs = interpolate_on_un(f, u, &vec![c; u.len()]).unwrap();
        assert_eq!(coeffs[0], c);
        assert!(coeffs[1..].iter().all(|a| a.val() == 0));
        // monomial u^e
        for e in 0..u.len() {
            let vals: Vec<Elem> = u.iter().map(|&x| f.pow(x, e as u64)).collect();
            let coeffs = interpolate_on_un(f, u, &vals).unwrap();
            for (i, a) in coeffs.iter().enumerate() {
                assert_eq!(a.val() != 0, i == e);
            }
        }
        // roundtrip on arbitrary value vectors
        let mut s = 5u64;
        for _ in 0..20 {
            let vals: Vec<Elem> = (0..u.len())
                .map(|_| {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                    f.elem(s % f.size()).unwrap()
                })
                .collect();
            let coeffs = interpolate_on_un(f, u, &vals).unwrap();
            assert_eq!(eval_expansion(f, &coeffs, u), vals);
        }
        // incomplete map
        assert!(interpolate_on_un(f, u, &[c; 3]).is_err());
    }

    #[test]
    fn interpolation_is_a_bijection_for_q4_and_q9() {
        for (p, m) in [(2, 2), (3, 2)] {
            let t = Tower::new(p, 1, m).unwrap();
            let f = t.field();
            let u = t.u_group();
            let n = u.len();
            // matrix of the map values -> coefficients has full rank
            let mut mat = Mat::zeros(f, n, n);
            for (i, row) in (0..n).enumerate() {
                for (j, &x) in u.iter().enumerate() {
                    mat.set(row, j, f.pow_signed(x, -(i as i64)).unwrap());
                }
            }
            assert_eq!(crate::linalg::rank(f, &mat), n);
        }
    }

    #[test]
    fn elementary_symmetric_against_subset_sums() {
        let t = Tower::new(3, 1, 2).unwrap();
        let f = t.field();
        let pts: Vec<Elem> = t.u_group().iter().copied().take(6).collect();
        assert_eq!(elementary_symmetric(f, 0, &pts).unwrap(), f.one());
        let mut prod = f.one();
        for &x in &pts {
            prod = f.mul(prod, x);
        }
        assert_eq!(elementary_symmetric(f, pts.len(), &pts).unwrap(), prod);
        // brute-force subset enumeration
        for ell in 0..=pts.len() {
            let mut acc = f.zero();
            for mask in 0u32..1 << pts.len() {
                if mask.count_ones() as usize != ell {
                    continue;
                }
                let mut term = f.one();
                for (i, &x) in pts.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        term = f.mul(term, x);
                    }
                }
                acc = f.add(acc, term);
            }
            assert_eq!(elementary_symmetric(f, ell, &pts).unwrap(), acc);
        }
        assert!(elementary_symmetric(f, 7, &pts).is_err());
    }

    /// Direct determinant of the generalized Vandermonde matrix with the
    /// degree-ℓ row removed: rows are exponents {0..n} \ {ℓ}.
    fn vandermonde_det_oracle(f: &Field, ell: usize, pts: &[Elem]) -> Elem {
        let n = pts.len();
        let mut mat = Mat::zeros(f, n, n);
        let mut r = 0;
        for e in 0..=n {
            if e == ell {
                continue;
            }
            for (j, &x) in pts.iter().enumerate() {
                mat.set(r, j, f.pow(x, e as u64));
            }
            r += 1;
        }
        determinant(f, &mat).unwrap()
    }

    #[test]
    fn deleted_row_vandermonde_cases() {
        let t = Tower::new(3, 1, 2).unwrap();
        let f = t.field();
        let u = t.u_group();
        // n = 2, ℓ = 1: (v-u)(u+v)
        let (a, b) = (u[1], u[2]);
        let expect = f.mul(f.sub(b, a), f.add(a, b));
        assert_eq!(deleted_row_vandermonde(f, 1, &[a, b]).unwrap(), expect);
        // ℓ = n reduces to the ordinary Vandermonde determinant
        let pts = [u[1], u[3], u[4]];
        let mut vd = f.one();
        for i in 0..3 {
            for j in 0..i {
                vd = f.mul(vd, f.sub(pts[i], pts[j]));
            }
        }
        assert_eq!(deleted_row_vandermonde(f, 3, &pts).unwrap(), vd);
        // repeated points rejected
        assert!(deleted_row_vandermonde(f, 1, &[a, a]).is_err());
    }

    #[test]
    fn deleted_row_vandermonde_matches_determinant_exhaustively_on_u10() {
        // identity over all 4-subsets of U_10 inside GF(81), all row choices
        let t = Tower::new(3, 1, 2).unwrap();
        let f = t.field();
        let u = t.u_group();
        for a in 0..u.len() {
            for b in a + 1..u.len() {
                for c in b + 1..u.len() {
                    for d in c + 1..u.len() {
                        let pts = [u[a], u[b], u[c], u[d]];
                        for ell in 0..=4 {
                            assert_eq!(
                                deleted_row_vandermonde(f, ell, &pts).unwrap(),
                                vandermonde_det_oracle(f, ell, &pts)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deleted_row_vandermonde_matches_determinant_random_n_up_to_6() {
        let f = Field::from_params(3, 4).unwrap();
        let mut s = 13u64;
        for n in 2..=6usize {
            for _ in 0..20 {
                let mut pts = Vec::new();
                while pts.len() < n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                    let x = f.elem(s % f.size()).unwrap();
                    if !pts.contains(&x) {
                        pts.push(x);
                    }
                }
                for ell in 0..=n {
                    assert_eq!(
                        deleted_row_vandermonde(&f, ell, &pts).unwrap(),
                        vandermonde_det_oracle(&f, ell, &pts)
                    );
                }
            }
        }
    }
}
