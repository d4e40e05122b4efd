//! Finite fields GF(p^d) with the subfield tower GF(p) ⊂ GF(δ) ⊂ GF(q) ⊂ GF(q²).
//!
//! A single ambient field hosts the whole tower; subfields are the fixed sets
//! of powers of the Frobenius map, so no embedding bookkeeping is needed.
//! Elements serialize as the integer Σ coeffs[i]·p^i (little-endian base p).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fields at or below this size get log/antilog tables for O(1) mul/inv.
const TABLE_LIMIT: u64 = 1 << 20;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over GF(p), used to validate moduli and as the
// arithmetic fallback for fields too large for tables. Coefficients are
// little-endian, reduced mod p.
// ---------------------------------------------------------------------------

mod gfp {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    fn mod_inv(a: u64, p: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    /// Remainder of a by monic-or-not b (b nonzero).
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = mod_inv(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            if c != 0 {
                for i in 0..=db {
                    let idx = dr - db + i;
                    r[idx] = (r[idx] + p - c * b[i] % p) % p;
                }
            }
            trim(&mut r);
            if r.len() <= db {
                break;
            }
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        if let Some(&lead) = x.last() {
            let inv = mod_inv(lead, p);
            for c in &mut x {
                *c = *c * inv % p;
            }
        }
        x
    }

    /// x^(p^k) mod f, computed by k successive p-th powers.
    pub fn x_pth_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
        let mut g = vec![0, 1]; // x
        for _ in 0..k {
            g = pow_mod(&g, p, f, p);
        }
        g
    }

    pub fn pow_mod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, f, p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), f, p);
            }
            b = rem(&mul(&b, &b, p), f, p);
            exp >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

/// Specification of GF(p^degree): characteristic, degree, and the monic
/// irreducible modulus polynomial (little-endian coefficients over GF(p)).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub degree: usize,
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    /// The canonical spec for GF(p^d): the lexicographically smallest monic
    /// irreducible polynomial whose root generates the multiplicative group
    /// (a primitive polynomial), scanned in coefficient order.
    pub fn canonical(p: u64, degree: usize) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        let low_count = checked_pow(p, degree as u32)
            .ok_or_else(|| Error::InvalidParameter("field size overflows u64".into()))?;
        for k in 0..low_count {
            let mut modulus = digits(k, p, degree);
            modulus.push(1);
            if is_irreducible(&modulus, p) && root_is_primitive(&modulus, p) {
                return Ok(FieldSpec { p, degree, modulus });
            }
        }
        unreachable!("a primitive polynomial exists for every prime power")
    }

    /// A spec with an explicitly chosen monic irreducible modulus.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) {
            return Err(Error::InvalidParameter(
                "modulus must be monic of positive degree".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter(
                "modulus coefficients must be reduced mod p".into(),
            ));
        }
        let degree = modulus.len() - 1;
        checked_pow(p, degree as u32)
            .ok_or_else(|| Error::InvalidParameter("field size overflows u64".into()))?;
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter(
                "modulus is reducible over GF(p)".into(),
            ));
        }
        Ok(FieldSpec { p, degree, modulus })
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    fn hash_id(&self) -> u32 {
        // FNV-1a over (p, degree, modulus); same spec => same id, so elements
        // of two Field instances built from one spec interoperate.
        let mut h: u32 = 0x811c9dc5;
        let mut eat = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u32;
                h = h.wrapping_mul(0x01000193);
            }
        };
        eat(self.p);
        eat(self.degree as u64);
        for &c in &self.modulus {
            eat(c);
        }
        h
    }
}

fn digits(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for o in out.iter_mut() {
        *o = k % p;
        k /= p;
    }
    out
}

/// Irreducibility over GF(p) for monic f: no factor of degree < deg f,
/// detected by gcd(f, x^(p^i) - x) = 1 for every i < deg f.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let d = modulus.len() - 1;
    if modulus[0] == 0 {
        // x divides f
        return d == 1;
    }
    if d == 1 {
        return true;
    }
    for i in 1..d {
        let xpi = gfp::x_pth_power(modulus, p, i);
        let diff = gfp::sub(&xpi, &[0, 1], p);
        let g = gfp::gcd(modulus, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Whether the residue class of x generates the multiplicative group.
fn root_is_primitive(modulus: &[u64], p: u64) -> bool {
    let d = modulus.len() - 1;
    let order = p.pow(d as u32) - 1;
    if order == 1 {
        return modulus[0] != 0; // GF(2): need root 1, i.e. modulus x+1
    }
    // root of x + c is -c; degree >= 2 uses the class of x itself
    let root: Vec<u64> = if d == 1 {
        let r = (p - modulus[0]) % p;
        if r == 0 {
            return false;
        }
        vec![r]
    } else {
        vec![0, 1]
    };
    for ell in prime_factors(order) {
        let e = gfp::pow_mod(&root, order / ell, modulus, p);
        if e == vec![1] {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Field and elements
// ---------------------------------------------------------------------------

/// An element of a specific field, identified by its serialized value.
/// The `fid` tag ties it to the spec that produced it; operations on
/// elements from mismatched specs panic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    fid: u32,
    val: u64,
}

impl Elem {
    pub fn val(self) -> u64 {
        self.val
    }
}

/// Arithmetic context for GF(p^d). Immutable after construction; all
/// operations are pure, so `&Field` may be shared freely across threads.
pub struct Field {
    spec: FieldSpec,
    id: u32,
    size: u64,
    generator_val: u64,
    /// antilog[i] = g^i for i in 0..size-1 (table mode only)
    antilog: Vec<u64>,
    /// log[v] = i with g^i = v; log[0] is a sentinel (table mode only)
    log: Vec<u32>,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let size = spec.size();
        Self::build(spec, size <= TABLE_LIMIT)
    }

    pub fn from_params(p: u64, degree: usize) -> Result<Field> {
        Field::new(FieldSpec::canonical(p, degree)?)
    }

    /// Table-free construction, for sizes beyond the table limit and for
    /// cross-checking the two arithmetic paths against each other.
    pub fn new_without_tables(spec: FieldSpec) -> Result<Field> {
        Self::build(spec, false)
    }

    fn build(spec: FieldSpec, with_tables: bool) -> Result<Field> {
        let size = spec.size();
        let id = spec.hash_id();
        let mut field = Field {
            spec,
            id,
            size,
            generator_val: 0,
            antilog: Vec::new(),
            log: Vec::new(),
        };
        field.generator_val = field.find_generator()?;
        if with_tables {
            let n = (size - 1) as usize;
            let mut antilog = vec![0u64; n];
            let mut log = vec![u32::MAX; size as usize];
            let mut acc = 1u64;
            for (i, slot) in antilog.iter_mut().enumerate() {
                *slot = acc;
                log[acc as usize] = i as u32;
                acc = field.raw_mul(acc, field.generator_val);
            }
            debug_assert_eq!(acc, 1, "generator order must be size-1");
            field.antilog = antilog;
            field.log = log;
        }
        Ok(field)
    }

    fn find_generator(&self) -> Result<u64> {
        let order = self.size - 1;
        if order == 1 {
            return Ok(1);
        }
        let factors = prime_factors(order);
        // The root of a canonical (primitive) modulus is x itself; start there
        // so canonical fields always designate it.
        let root = if self.spec.degree == 1 {
            (self.spec.p - self.spec.modulus[0]) % self.spec.p
        } else {
            self.spec.p // serialization of the polynomial "x"
        };
        let mut candidates: Vec<u64> = Vec::with_capacity(self.size as usize);
        candidates.push(root);
        candidates.extend((2..self.size).filter(|&v| v != root));
        for cand in candidates {
            if cand == 0 {
                continue;
            }
            let primitive = factors
                .iter()
                .all(|&ell| self.raw_pow(cand, order / ell) != 1);
            if primitive {
                return Ok(cand);
            }
        }
        Err(Error::InvalidParameter(
            "no multiplicative generator found (modulus not irreducible?)".into(),
        ))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> usize {
        self.spec.degree
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// The designated multiplicative generator (the modulus root for
    /// canonical specs).
    pub fn generator(&self) -> Elem {
        self.make(self.generator_val)
    }

    pub fn zero(&self) -> Elem {
        self.make(0)
    }

    pub fn one(&self) -> Elem {
        self.make(1)
    }

    pub fn elem(&self, val: u64) -> Result<Elem> {
        if val >= self.size {
            return Err(Error::InvalidParameter(format!(
                "{val} is not a valid element of a field of size {}",
                self.size
            )));
        }
        Ok(self.make(val))
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() != self.spec.degree || coeffs.iter().any(|&c| c >= self.spec.p) {
            return Err(Error::InvalidParameter(
                "coefficient vector has wrong length or unreduced entries".into(),
            ));
        }
        let mut val = 0u64;
        for &c in coeffs.iter().rev() {
            val = val * self.spec.p + c;
        }
        Ok(self.make(val))
    }

    pub fn coeffs(&self, x: Elem) -> Vec<u64> {
        self.check(x);
        digits(x.val, self.spec.p, self.spec.degree)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(|v| self.make(v))
    }

    fn make(&self, val: u64) -> Elem {
        Elem { fid: self.id, val }
    }

    #[inline]
    fn check(&self, x: Elem) {
        assert!(
            x.fid == self.id && x.val < self.size,
            "element does not belong to this field"
        );
    }

    // --- raw arithmetic on serialized values -------------------------------

    fn raw_add(&self, a: u64, b: u64) -> u64 {
        let p = self.spec.p;
        if p == 2 {
            return a ^ b;
        }
        let mut out = 0u64;
        let mut pw = 1u64;
        let (mut x, mut y) = (a, b);
        while x > 0 || y > 0 {
            out += (x % p + y % p) % p * pw;
            x /= p;
            y /= p;
            pw *= p;
        }
        out
    }

    fn raw_neg(&self, a: u64) -> u64 {
        let p = self.spec.p;
        if p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut pw = 1u64;
        let mut x = a;
        while x > 0 {
            out += (p - x % p) % p * pw;
            x /= p;
            pw *= p;
        }
        out
    }

    fn raw_mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let p = self.spec.p;
        let av = digits(a, p, self.spec.degree);
        let bv = digits(b, p, self.spec.degree);
        let prod = gfp::mul(&av, &bv, p);
        let red = gfp::rem(&prod, &self.spec.modulus, p);
        let mut val = 0u64;
        for &c in red.iter().rev() {
            val = val * p + c;
        }
        val
    }

    fn raw_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn raw_inv(&self, a: u64) -> u64 {
        // a^(size-2); only called with a != 0
        self.raw_pow(a, self.size - 2)
    }

    // --- public arithmetic --------------------------------------------------

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.check(x);
        self.check(y);
        self.make(self.raw_add(x.val, y.val))
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.check(x);
        self.make(self.raw_neg(x.val))
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.check(x);
        self.check(y);
        if x.val == 0 || y.val == 0 {
            return self.make(0);
        }
        if self.antilog.is_empty() {
            return self.make(self.raw_mul(x.val, y.val));
        }
        let n = self.size - 1;
        let i = (self.log[x.val as usize] as u64 + self.log[y.val as usize] as u64) % n;
        self.make(self.antilog[i as usize])
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        self.check(x);
        if x.val == 0 {
            return Err(Error::NotInvertible);
        }
        if self.antilog.is_empty() {
            return Ok(self.make(self.raw_inv(x.val)));
        }
        let n = self.size - 1;
        let i = (n - self.log[x.val as usize] as u64) % n;
        Ok(self.make(self.antilog[i as usize]))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        self.check(x);
        if x.val == 0 {
            return if e == 0 { self.one() } else { self.zero() };
        }
        if self.antilog.is_empty() {
            return self.make(self.raw_pow(x.val, e % (self.size - 1)));
        }
        let n = self.size - 1;
        let i = (self.log[x.val as usize] as u128 * (e % n) as u128 % n as u128) as usize;
        self.make(self.antilog[i])
    }

    /// x^e for signed e; negative exponents invert first (error on x = 0).
    pub fn pow_signed(&self, x: Elem, e: i64) -> Result<Elem> {
        if e >= 0 {
            return Ok(self.pow(x, e as u64));
        }
        let xi = self.inv(x)?;
        Ok(self.pow(xi, e.unsigned_abs()))
    }

    /// x^(p^e), the e-th power of the Frobenius map.
    pub fn frobenius(&self, x: Elem, e: usize) -> Elem {
        self.check(x);
        if x.val == 0 {
            return x;
        }
        let n = self.size - 1;
        // p^e mod n by square-and-multiply in u128
        let mut exp = 1u128;
        let mut base = self.spec.p as u128 % n as u128;
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                exp = exp * base % n as u128;
            }
            base = base * base % n as u128;
            k >>= 1;
        }
        self.pow(x, exp as u64)
    }

    pub fn multiplicative_order(&self, x: Elem) -> Result<u64> {
        self.check(x);
        if x.val == 0 {
            return Err(Error::NotInvertible);
        }
        let mut order = self.size - 1;
        for ell in prime_factors(self.size - 1) {
            while order % ell == 0 && self.pow(x, order / ell).val == 1 {
                order /= ell;
            }
        }
        Ok(order)
    }

    // --- subfields ----------------------------------------------------------

    pub fn subfield(&self, sub_degree: usize) -> Result<SubfieldHandle> {
        if sub_degree == 0 || self.spec.degree % sub_degree != 0 {
            return Err(Error::InvalidParameter(format!(
                "{} does not divide the ambient degree {}",
                sub_degree, self.spec.degree
            )));
        }
        Ok(SubfieldHandle {
            degree: sub_degree,
            size: self.spec.p.pow(sub_degree as u32),
        })
    }

    /// x lies in the subfield iff it is fixed by Frobenius^sub_degree.
    pub fn is_in_subfield(&self, x: Elem, sub: &SubfieldHandle) -> bool {
        self.frobenius(x, sub.degree) == x
    }

    /// Relative trace Σ x^(p^(e·i)) down to the subfield of degree e.
    pub fn trace_to(&self, x: Elem, sub: &SubfieldHandle) -> Elem {
        self.check(x);
        let steps = self.spec.degree / sub.degree;
        let mut acc = self.zero();
        let mut term = x;
        for _ in 0..steps {
            acc = self.add(acc, term);
            term = self.frobenius(term, sub.degree);
        }
        debug_assert!(self.is_in_subfield(acc, sub));
        acc
    }

    /// Relative norm x^((p^d - 1)/(p^e - 1)) down to the subfield of degree e.
    pub fn norm_to(&self, x: Elem, sub: &SubfieldHandle) -> Elem {
        self.check(x);
        if x.val == 0 {
            return x;
        }
        let exp = (self.size - 1) / (sub.size - 1);
        let out = self.pow(x, exp);
        debug_assert!(self.is_in_subfield(out, sub));
        out
    }

    /// All elements of the subfield, ascending by serialization.
    pub fn subfield_elements(&self, sub: &SubfieldHandle) -> Vec<Elem> {
        let mut out = vec![self.zero()];
        if sub.size > 1 {
            let step = (self.size - 1) / (sub.size - 1);
            let g = self.generator();
            let mut acc = self.one();
            let gs = self.pow(g, step);
            for _ in 0..sub.size - 1 {
                out.push(acc);
                acc = self.mul(acc, gs);
            }
        }
        out.sort();
        out.dedup();
        debug_assert_eq!(out.len(), sub.size as usize);
        out
    }
}

/// A subfield of the ambient field, identified by its degree over GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubfieldHandle {
    degree: usize,
    size: u64,
}

impl SubfieldHandle {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.size
    }
}

// ---------------------------------------------------------------------------
// Tower
// ---------------------------------------------------------------------------

/// The tower GF(p) ⊂ GF(δ) ⊂ GF(q) ⊂ GF(q²) with δ = p^a and q = δ^m,
/// hosted in the single ambient field GF(p^(2am)), together with the
/// norm-one subgroup U_{q+1} = {β^j} and its coordinate order.
pub struct Tower {
    field: Field,
    p: u64,
    a: usize,
    m: usize,
    beta: Elem,
    u_group: Vec<Elem>,
    u_index: HashMap<u64, usize>,
}

impl Tower {
    pub fn new(p: u64, a: usize, m: usize) -> Result<Tower> {
        if a == 0 || m == 0 {
            return Err(Error::InvalidParameter(
                "tower exponents must be positive".into(),
            ));
        }
        let field = Field::from_params(p, 2 * a * m)?;
        Self::over(field, p, a, m)
    }

    fn over(field: Field, p: u64, a: usize, m: usize) -> Result<Tower> {
        let q = p.pow((a * m) as u32);
        // beta = g^((q²-1)/(q+1)) has order exactly q+1 because g is a
        // generator of the ambient multiplicative group.
        let beta = field.pow(field.generator(), (field.size() - 1) / (q + 1));
        let mut u_group = Vec::with_capacity(q as usize + 1);
        let mut u_index = HashMap::new();
        let mut acc = field.one();
        for j in 0..=q {
            u_group.push(acc);
            u_index.insert(acc.val(), j as usize);
            acc = field.mul(acc, beta);
        }
        debug_assert_eq!(acc, field.one());
        Ok(Tower {
            field,
            p,
            a,
            m,
            beta,
            u_group,
            u_index,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn delta(&self) -> u64 {
        self.p.pow(self.a as u32)
    }

    pub fn q(&self) -> u64 {
        self.p.pow((self.a * self.m) as u32)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Code length q + 1 = |U_{q+1}|.
    pub fn n(&self) -> u64 {
        self.q() + 1
    }

    pub fn sub_delta(&self) -> SubfieldHandle {
        self.field.subfield(self.a).expect("delta divides ambient")
    }

    pub fn sub_q(&self) -> SubfieldHandle {
        self.field
            .subfield(self.a * self.m)
            .expect("q divides ambient")
    }

    /// The generator β of U_{q+1}; multiplicative order exactly q+1.
    pub fn beta(&self) -> Elem {
        self.beta
    }

    /// U_{q+1} in coordinate order: position j holds β^j.
    pub fn u_group(&self) -> &[Elem] {
        &self.u_group
    }

    /// Coordinate index j with β^j = u.
    pub fn u_index(&self, u: Elem) -> Option<usize> {
        self.u_index.get(&u.val()).copied()
    }

    pub fn is_norm_one(&self, u: Elem) -> bool {
        self.u_index(u).is_some()
    }

    /// Default u₀: the smallest-serialized element of U_{q+1} \ {1, -1}.
    pub fn canonical_u0(&self) -> Elem {
        let one = self.field.one();
        let minus_one = self.field.neg(one);
        self.u_group
            .iter()
            .copied()
            .filter(|&u| u != one && u != minus_one)
            .min()
            .expect("U_{q+1} has an element besides ±1 for q >= 3")
    }
}
