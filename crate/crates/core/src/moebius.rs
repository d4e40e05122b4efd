//! PGL(2, q²) acting on PG(1, q²) and on the norm-one group U_{q+1}:
//! the setwise stabilizer of U_{q+1}, the Hilbert-90 bridge from PG(1, q),
//! sharp 3-transitivity witnesses, monomial automorphisms of the BCH codes,
//! and the ∘ action on trace polynomials.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::code;
use crate::error::{Error, Result};
use crate::field::{Elem, Field, Tower};

/// A point of the projective line: a field element or ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(Elem),
    Infinity,
}

impl ProjPoint {
    pub fn finite(self) -> Option<Elem> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }
}

/// An element of PGL(2, ·) in canonical scalar-normalized form: the first
/// nonzero entry of (a, b, c, d) equals 1, so group equality is
/// componentwise equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjMap {
    a: Elem,
    b: Elem,
    c: Elem,
    d: Elem,
}

impl ProjMap {
    pub fn new(field: &Field, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<ProjMap> {
        let det = field.sub(field.mul(a, d), field.mul(b, c));
        if det.val() == 0 {
            return Err(Error::Degenerate(
                "projective map must be invertible".into(),
            ));
        }
        Ok(Self::normalized(field, a, b, c, d))
    }

    fn normalized(field: &Field, a: Elem, b: Elem, c: Elem, d: Elem) -> ProjMap {
        let lead = [a, b, c, d]
            .into_iter()
            .find(|e| e.val() != 0)
            .expect("nonzero matrix");
        let s = field.inv(lead).expect("nonzero");
        ProjMap {
            a: field.mul(a, s),
            b: field.mul(b, s),
            c: field.mul(c, s),
            d: field.mul(d, s),
        }
    }

    pub fn identity(field: &Field) -> ProjMap {
        ProjMap {
            a: field.one(),
            b: field.zero(),
            c: field.zero(),
            d: field.one(),
        }
    }

    pub fn entries(&self) -> (Elem, Elem, Elem, Elem) {
        (self.a, self.b, self.c, self.d)
    }

    /// Matrix product self·other, so that apply(self, apply(other, x)) =
    /// apply(self.compose(other), x).
    pub fn compose(&self, field: &Field, other: &ProjMap) -> ProjMap {
        let a = field.add(field.mul(self.a, other.a), field.mul(self.b, other.c));
        let b = field.add(field.mul(self.a, other.b), field.mul(self.b, other.d));
        let c = field.add(field.mul(self.c, other.a), field.mul(self.d, other.c));
        let d = field.add(field.mul(self.c, other.b), field.mul(self.d, other.d));
        Self::normalized(field, a, b, c, d)
    }

    /// Projective inverse via the adjugate.
    pub fn inverse(&self, field: &Field) -> ProjMap {
        Self::normalized(field, self.d, field.neg(self.b), field.neg(self.c), self.a)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a.val(), "b": self.b.val(), "c": self.c.val(), "d": self.d.val(),
        })
    }
}

/// Linear fractional action x ↦ (ax + b)/(cx + d), with -d/c ↦ ∞ and
/// ∞ ↦ a/c (∞ ↦ ∞ when c = 0).
pub fn apply(field: &Field, g: &ProjMap, x: ProjPoint) -> ProjPoint {
    match x {
        ProjPoint::Infinity => {
            if g.c.val() == 0 {
                ProjPoint::Infinity
            } else {
                ProjPoint::Finite(field.div(g.a, g.c).expect("c nonzero"))
            }
        }
        ProjPoint::Finite(x) => {
            let den = field.add(field.mul(g.c, x), g.d);
            if den.val() == 0 {
                ProjPoint::Infinity
            } else {
                let num = field.add(field.mul(g.a, x), g.b);
                ProjPoint::Finite(field.div(num, den).expect("den nonzero"))
            }
        }
    }
}

/// The unique map taking ∞ ↦ a, 0 ↦ b, 1 ↦ c for distinct points.
/// Uniqueness is asserted by comparing the closed-form construction with an
/// independent cross-ratio-based one.
pub fn transitivity_witness(
    field: &Field,
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
) -> Result<ProjMap> {
    if a == b || b == c || a == c {
        return Err(Error::Degenerate(
            "witness needs three distinct points".into(),
        ));
    }
    use ProjPoint::*;
    let one = field.one();
    let g = match (a, b, c) {
        (Finite(a), Finite(b), Finite(c)) => ProjMap::new(
            field,
            field.mul(a, field.sub(b, c)),
            field.mul(b, field.sub(c, a)),
            field.sub(b, c),
            field.sub(c, a),
        )?,
        (Infinity, Finite(b), Finite(c)) => {
            ProjMap::new(field, field.sub(c, b), b, field.zero(), one)?
        }
        (Finite(a), Infinity, Finite(c)) => {
            ProjMap::new(field, a, field.sub(c, a), one, field.zero())?
        }
        (Finite(a), Finite(b), Infinity) => {
            ProjMap::new(field, a, field.neg(b), one, field.neg(one))?
        }
        _ => unreachable!("at most one of three distinct points is ∞"),
    };
    // Independent route: invert the cross-ratio map sending (a,b,c) ↦ (∞,0,1).
    let r = match (a, b, c) {
        (Finite(a), Finite(b), Finite(c)) => ProjMap::new(
            field,
            field.sub(c, a),
            field.neg(field.mul(b, field.sub(c, a))),
            field.sub(c, b),
            field.neg(field.mul(a, field.sub(c, b))),
        )?,
        (Infinity, Finite(b), Finite(c)) => {
            ProjMap::new(field, one, field.neg(b), field.zero(), field.sub(c, b))?
        }
        (Finite(a), Infinity, Finite(c)) => {
            ProjMap::new(field, field.zero(), field.sub(c, a), one, field.neg(a))?
        }
        (Finite(a), Finite(b), Infinity) => {
            ProjMap::new(field, one, field.neg(b), one, field.neg(a))?
        }
        _ => unreachable!(),
    };
    assert_eq!(g, r.inverse(field), "the two witness constructions agree");
    Ok(g)
}

/// The stabilizer element [[d^q, c^q], [c, d]]; degenerate when
/// c^(q+1) = d^(q+1).
pub fn stab_element(tower: &Tower, c: Elem, d: Elem) -> Result<ProjMap> {
    let field = tower.field();
    let e = tower.sub_q().degree();
    let cq = field.frobenius(c, e);
    let dq = field.frobenius(d, e);
    ProjMap::new(field, dq, cq, c, d)
        .map_err(|_| Error::Degenerate("stabilizer element needs c^(q+1) != d^(q+1)".into()))
}

/// The (c, d) with g scalar-equivalent to [[d^q, c^q], [c, d]], if any.
/// The smallest-serialized scalar multiple is chosen, so the result is
/// deterministic.
pub fn stab_parameters(tower: &Tower, g: &ProjMap) -> Option<(Elem, Elem)> {
    let field = tower.field();
    let e = tower.sub_q().degree();
    for lv in 1..field.size() {
        let lam = field.elem(lv).expect("in range");
        let (a, b, c, d) = (
            field.mul(g.a, lam),
            field.mul(g.b, lam),
            field.mul(g.c, lam),
            field.mul(g.d, lam),
        );
        if field.frobenius(d, e) == a && field.frobenius(c, e) == b {
            return Some((c, d));
        }
    }
    None
}

/// Membership in Stab_{U_{q+1}}: scalar-equivalence to some
/// [[d^q, c^q], [c, d]].
pub fn in_stabilizer(tower: &Tower, g: &ProjMap) -> bool {
    stab_parameters(tower, g).is_some()
}

/// The Hilbert-90 bridge x ↦ (u₀x + 1)/(x + u₀), a bijection
/// PG(1, q) → U_{q+1} with ∞ ↦ u₀. Needs u₀ ∈ U_{q+1} \ {±1}.
pub fn bridge(tower: &Tower, u0: Elem) -> Result<ProjMap> {
    let field = tower.field();
    let one = field.one();
    if !tower.is_norm_one(u0) || u0 == one || u0 == field.neg(one) {
        return Err(Error::Degenerate(
            "bridge base point must lie in U_{q+1} minus {1, -1}".into(),
        ));
    }
    ProjMap::new(field, u0, one, one, u0)
}

/// PG(1, sub) in the canonical order: subfield elements ascending by
/// serialization, then ∞.
pub fn pg1_points(field: &Field, sub: &crate::field::SubfieldHandle) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = field
        .subfield_elements(sub)
        .into_iter()
        .map(ProjPoint::Finite)
        .collect();
    pts.push(ProjPoint::Infinity);
    pts
}

/// For the PG(1,q)-indexed point order, the image indices in the β^j
/// order of U_{q+1} under the bridge. A verified bijection.
pub fn bridge_bijection(tower: &Tower, u0: Elem) -> Result<Vec<usize>> {
    let field = tower.field();
    let g0 = bridge(tower, u0)?;
    let pts = pg1_points(field, &tower.sub_q());
    let mut out = Vec::with_capacity(pts.len());
    let mut seen = HashSet::new();
    for &x in &pts {
        let img = apply(field, &g0, x)
            .finite()
            .expect("bridge image is never infinite");
        let j = tower.u_index(img).expect("bridge image lies in U_{q+1}");
        assert!(seen.insert(j), "bridge must be injective");
        out.push(j);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Group closures
// ---------------------------------------------------------------------------

/// A finite subgroup of PGL(2, q²) together with its action on a fixed
/// point list.
pub struct ProjGroup {
    generators: Vec<ProjMap>,
    elements: Vec<ProjMap>,
    points: Vec<ProjPoint>,
    point_index: HashMap<ProjPoint, usize>,
    gen_perms: Vec<Vec<usize>>,
}

impl ProjGroup {
    fn close(
        field: &Field,
        generators: Vec<ProjMap>,
        points: Vec<ProjPoint>,
        cap: usize,
    ) -> Result<ProjGroup> {
        let mut elements = Vec::new();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        let id = ProjMap::identity(field);
        seen.insert(id);
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            elements.push(g);
            if elements.len() > cap {
                return Err(Error::GuardExceeded(format!(
                    "group closure exceeded {cap} elements"
                )));
            }
            for gen in &generators {
                let next = gen.compose(field, &g);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let point_index: HashMap<ProjPoint, usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let gen_perms = generators
            .iter()
            .map(|g| Self::perm(field, g, &points, &point_index))
            .collect();
        Ok(ProjGroup {
            generators,
            elements,
            points,
            point_index,
            gen_perms,
        })
    }

    fn perm(
        field: &Field,
        g: &ProjMap,
        points: &[ProjPoint],
        index: &HashMap<ProjPoint, usize>,
    ) -> Vec<usize> {
        points
            .iter()
            .map(|&p| {
                *index
                    .get(&apply(field, g, p))
                    .expect("the group must preserve the point set")
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMap] {
        &self.elements
    }

    pub fn generators(&self) -> &[ProjMap] {
        &self.generators
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Generator permutations in the point order of `points()`.
    pub fn generator_perms(&self) -> &[Vec<usize>] {
        &self.gen_perms
    }

    pub fn perm_of(&self, field: &Field, g: &ProjMap) -> Vec<usize> {
        Self::perm(field, g, &self.points, &self.point_index)
    }

    /// Orbit of an ordered triple of point indices under the generators.
    pub fn triple_orbit_size(&self, triple: [usize; 3]) -> usize {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(triple);
        queue.push_back(triple);
        while let Some(t) = queue.pop_front() {
            for p in &self.gen_perms {
                let img = [p[t[0]], p[t[1]], p[t[2]]];
                if seen.insert(img) {
                    queue.push_back(img);
                }
            }
        }
        seen.len()
    }
}

/// Stab_{U_{q+1}} generated by a verified two-element set: the rotation
/// stab_element(0, d₀) with d₀^(q-1) of order q+1, and the first
/// stab_element(1, t) whose closure reaches the full order (q+1)q(q-1).
pub fn stabilizer_group(tower: &Tower) -> Result<ProjGroup> {
    let field = tower.field();
    let q = tower.q();
    let target = ((q + 1) * q * (q - 1)) as usize;
    let points: Vec<ProjPoint> = tower
        .u_group()
        .iter()
        .map(|&u| ProjPoint::Finite(u))
        .collect();
    // d0 = ambient generator: d0^(q-1) generates U_{q+1}
    let d0 = field.generator();
    debug_assert_eq!(
        field.multiplicative_order(field.pow(d0, q - 1)).unwrap(),
        q + 1
    );
    let rotation = stab_element(tower, field.zero(), d0)?;
    for tv in 0..field.size() {
        let t = field.elem(tv).expect("in range");
        let Ok(second) = stab_element(tower, field.one(), t) else {
            continue;
        };
        let group = ProjGroup::close(field, vec![rotation, second], points.clone(), target)?;
        if group.order() == target {
            return Ok(group);
        }
    }
    Err(Error::Degenerate(
        "no second generator reaches the full stabilizer".into(),
    ))
}

/// PGL(2, s) over the subfield of the given degree, acting on PG(1, s) in
/// the pg1_points order. Closure size is verified to be (s+1)s(s-1).
pub fn pgl_group(field: &Field, sub_degree: usize) -> Result<ProjGroup> {
    let sub = field.subfield(sub_degree)?;
    let s = sub.size();
    let target = ((s + 1) * s * (s - 1)) as usize;
    let points = pg1_points(field, &sub);
    let one = field.one();
    let translation = ProjMap::new(field, one, one, field.zero(), one)?;
    let inversion = ProjMap::new(field, field.zero(), one, one, field.zero())?;
    let mut gens = vec![translation, inversion];
    if s > 2 {
        // multiplicative generator of the subfield
        let lambda = field.pow(field.generator(), (field.size() - 1) / (s - 1));
        debug_assert_eq!(field.multiplicative_order(lambda).unwrap(), s - 1);
        gens.push(ProjMap::new(
            field,
            lambda,
            field.zero(),
            field.zero(),
            one,
        )?);
    }
    let group = ProjGroup::close(field, gens, points, target)?;
    if group.order() != target {
        return Err(Error::Degenerate(format!(
            "PGL(2,{s}) closure has wrong order {}",
            group.order()
        )));
    }
    Ok(group)
}

// ---------------------------------------------------------------------------
// Monomial automorphism action and the ∘ representation
// ---------------------------------------------------------------------------

/// The group element of G_δ (or G_δ^⊥) parameterized by literal (c, d):
/// output at u is (cu + d)^(∓(q+1)(δ-1)) · w at M(u), where
/// M = [[d^q, c^q], [c, d]] is the inverse of the permutation part.
/// The exponent sign is − for the BCH code itself and + for its dual.
pub fn monomial_action_cd(
    tower: &Tower,
    delta: u64,
    c: Elem,
    d: Elem,
    word: &[Elem],
    dual: bool,
) -> Result<Vec<Elem>> {
    let field = tower.field();
    let q = tower.q();
    if word.len() as u64 != q + 1 {
        return Err(Error::InvalidParameter("word length must be q+1".into()));
    }
    let m = stab_element(tower, c, d)?;
    let exp = ((q + 1) * (delta - 1)) as i64 * if dual { 1 } else { -1 };
    let mut out = Vec::with_capacity(word.len());
    for &u in tower.u_group() {
        let pre = apply(field, &m, ProjPoint::Finite(u))
            .finite()
            .expect("stabilizer preserves U_{q+1}");
        let j = tower.u_index(pre).expect("image stays in U_{q+1}");
        let base = field.add(field.mul(c, u), d);
        let scale = field.pow_signed(base, exp)?;
        debug_assert!(field.is_in_subfield(scale, &tower.sub_q()));
        out.push(field.mul(scale, word[j]));
    }
    Ok(out)
}

/// As `monomial_action_cd`, but taking the permutation part itself; errors
/// when g is not in the stabilizer. The recovered (c, d) is a fixed scalar
/// representative, which changes the scale vector only by a constant in
/// GF(q)*.
pub fn monomial_action(
    tower: &Tower,
    delta: u64,
    g: &ProjMap,
    word: &[Elem],
    dual: bool,
) -> Result<Vec<Elem>> {
    let m = g.inverse(tower.field());
    let (c, d) = stab_parameters(tower, &m)
        .ok_or_else(|| Error::Degenerate("map is not in the stabilizer of U_{q+1}".into()))?;
    monomial_action_cd(tower, delta, c, d, word, dual)
}

/// The ∘ action on 𝒫(δ, q) for the lifted stabilizer element A with
/// A⁻¹ = [[d^q, c^q], [c, d]] (literal entries):
/// (A ∘ f)(u) = (cu+d)^((q+1)(δ-1)) f(A⁻¹u), where f = Tr_{q²/q}(Σ aᵢ uⁱ)
/// is given by its coefficients a₁..a_{δ-1}. Returns the value vector on
/// U_{q+1}; it lies again in 𝒫(δ, q), i.e. in the dual BCH code.
pub fn circ_action_cd(
    tower: &Tower,
    delta: u64,
    c: Elem,
    d: Elem,
    coeffs: &[Elem],
) -> Result<Vec<Elem>> {
    let field = tower.field();
    let q = tower.q();
    if coeffs.len() as u64 != delta - 1 {
        return Err(Error::InvalidParameter(format!(
            "expected {} coefficients",
            delta - 1
        )));
    }
    let m = stab_element(tower, c, d)?;
    let sub_q = tower.sub_q();
    let exp = (q + 1) * (delta - 1);
    let f_at = |x: Elem| {
        let mut acc = field.zero();
        let mut pw = field.one();
        for &a in coeffs {
            pw = field.mul(pw, x);
            acc = field.add(acc, field.mul(a, pw));
        }
        field.trace_to(acc, &sub_q)
    };
    let mut out = Vec::with_capacity(q as usize + 1);
    for &u in tower.u_group() {
        let img = apply(field, &m, ProjPoint::Finite(u))
            .finite()
            .expect("stabilizer preserves U_{q+1}");
        let scale = field.pow(field.add(field.mul(c, u), d), exp);
        out.push(field.mul(scale, f_at(img)));
    }
    #[cfg(debug_assertions)]
    {
        let code = code::bch(tower, delta, 1).expect("bch parameters valid");
        let dual = code::dual(field, &code);
        debug_assert!(code::contains(field, &dual, &out).unwrap());
    }
    Ok(out)
}

/// As `circ_action_cd`, with the stabilizer element given projectively.
pub fn circ_action(
    tower: &Tower,
    delta: u64,
    a_map: &ProjMap,
    coeffs: &[Elem],
) -> Result<Vec<Elem>> {
    let m = a_map.inverse(tower.field());
    let (c, d) = stab_parameters(tower, &m)
        .ok_or_else(|| Error::Degenerate("map is not in the stabilizer of U_{q+1}".into()))?;
    circ_action_cd(tower, delta, c, d, coeffs)
}

/// The (c, d) pair of the product A₁A₂ of two lifted stabilizer elements
/// given by their literal pairs: (A₁A₂)⁻¹ = A₂⁻¹A₁⁻¹ = M₂M₁, and the pair
/// is the bottom row of that matrix product.
pub fn stab_lift_product(
    tower: &Tower,
    (c1, d1): (Elem, Elem),
    (c2, d2): (Elem, Elem),
) -> (Elem, Elem) {
    let field = tower.field();
    let e = tower.sub_q().degree();
    let c = field.add(field.mul(c2, field.frobenius(d1, e)), field.mul(d2, c1));
    let d = field.add(field.mul(c2, field.frobenius(c1, e)), field.mul(d2, d1));
    (c, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{bch, contains, dual};

    fn tower93() -> Tower {
        Tower::new(3, 1, 2).unwrap()
    }

    fn next(s: &mut u64) -> u64 {
        *s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
        *s
    }

    fn rnd_map(f: &Field, s: &mut u64) -> ProjMap {
        loop {
            let elems: Vec<Elem> = (0..4)
                .map(|_| f.elem(next(s) % f.size()).unwrap())
                .collect();
            if let Ok(g) = ProjMap::new(f, elems[0], elems[1], elems[2], elems[3]) {
                return g;
            }
        }
    }

    fn rnd_cd(t: &Tower, s: &mut u64) -> (Elem, Elem) {
        loop {
            let c = t.field().elem(next(s) % t.field().size()).unwrap();
            let d = t.field().elem(next(s) % t.field().size()).unwrap();
            if stab_element(t, c, d).is_ok() {
                return (c, d);
            }
        }
    }

    #[test]
    fn apply_conventions_and_left_action_law() {
        let t = tower93();
        let f = t.field();
        let id = ProjMap::identity(f);
        for x in f.elements().take(10) {
            assert_eq!(apply(f, &id, ProjPoint::Finite(x)), ProjPoint::Finite(x));
        }
        assert_eq!(apply(f, &id, ProjPoint::Infinity), ProjPoint::Infinity);
        // left action on random triples over GF(81)
        let mut s = 41u64;
        for _ in 0..500 {
            let g1 = rnd_map(f, &mut s);
            let g2 = rnd_map(f, &mut s);
            let x = if next(&mut s) % 10 == 0 {
                ProjPoint::Infinity
            } else {
                ProjPoint::Finite(f.elem(next(&mut s) % f.size()).unwrap())
            };
            assert_eq!(
                apply(f, &g1, apply(f, &g2, x)),
                apply(f, &g1.compose(f, &g2), x)
            );
        }
    }

    #[test]
    fn witness_maps_the_three_base_points() {
        let t = tower93();
        let f = t.field();
        let pts: Vec<ProjPoint> = f
            .elements()
            .take(5)
            .map(ProjPoint::Finite)
            .chain([ProjPoint::Infinity])
            .collect();
        for &a in &pts {
            for &b in &pts {
                for &c in &pts {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let g = transitivity_witness(f, a, b, c).unwrap();
                    assert_eq!(apply(f, &g, ProjPoint::Infinity), a);
                    assert_eq!(apply(f, &g, ProjPoint::Finite(f.zero())), b);
                    assert_eq!(apply(f, &g, ProjPoint::Finite(f.one())), c);
                }
            }
        }
        let x = ProjPoint::Finite(f.one());
        assert!(transitivity_witness(f, x, x, ProjPoint::Infinity).is_err());
    }

    #[test]
    fn witness_count_is_group_order_at_q4() {
        // distinct maps over all ordered triples of PG(1,4): 60 = |PGL(2,4)|
        let f = Field::from_params(2, 2).unwrap();
        let pts: Vec<ProjPoint> = f
            .elements()
            .map(ProjPoint::Finite)
            .chain([ProjPoint::Infinity])
            .collect();
        let mut maps = HashSet::new();
        for &a in &pts {
            for &b in &pts {
                for &c in &pts {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    maps.insert(transitivity_witness(&f, a, b, c).unwrap());
                }
            }
        }
        assert_eq!(maps.len(), 60);
    }

    #[test]
    fn stab_elements_preserve_u_and_identity_case() {
        let t = tower93();
        let f = t.field();
        let id = stab_element(&t, f.zero(), f.one()).unwrap();
        assert_eq!(id, ProjMap::identity(f));
        let mut s = 9u64;
        let mut count = 0;
        while count < 50 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            let c = f.elem(s % f.size()).unwrap();
            let d = f.elem((s >> 17) % f.size()).unwrap();
            let Ok(g) = stab_element(&t, c, d) else {
                continue;
            };
            count += 1;
            for &u in t.u_group() {
                let img = apply(f, &g, ProjPoint::Finite(u)).finite().unwrap();
                assert!(t.is_norm_one(img));
            }
            assert!(in_stabilizer(&t, &g));
            let (rc, rd) = stab_parameters(&t, &g).unwrap();
            assert_eq!(stab_element(&t, rc, rd).unwrap(), g);
        }
        // degenerate pair rejected: c = d = 1
        assert!(stab_element(&t, f.one(), f.one()).is_err());
        // a map moving U off itself is not in the stabilizer
        let translation = ProjMap::new(f, f.one(), f.one(), f.zero(), f.one()).unwrap();
        assert!(!in_stabilizer(&t, &translation));
    }

    #[test]
    fn stabilizer_closure_orders() {
        for (p, a, m, expect) in [(2u64, 1usize, 2usize, 60), (5, 1, 1, 120), (3, 1, 2, 720)] {
            let t = Tower::new(p, a, m).unwrap();
            let g = stabilizer_group(&t).unwrap();
            assert_eq!(g.order(), expect, "q = {}", t.q());
        }
    }

    #[test]
    fn stabilizer_is_sharply_3_transitive_at_q4() {
        let t = Tower::new(2, 1, 2).unwrap();
        let f = t.field();
        let g = stabilizer_group(&t).unwrap();
        assert_eq!(g.order(), 60);
        // every ordered distinct triple is hit by exactly one element
        let mut images: HashMap<[usize; 3], usize> = HashMap::new();
        let base: Vec<ProjPoint> = t.u_group().iter().map(|&u| ProjPoint::Finite(u)).collect();
        for el in g.elements() {
            let img = [
                t.u_index(apply(f, el, base[0]).finite().unwrap()).unwrap(),
                t.u_index(apply(f, el, base[1]).finite().unwrap()).unwrap(),
                t.u_index(apply(f, el, base[2]).finite().unwrap()).unwrap(),
            ];
            *images.entry(img).or_insert(0) += 1;
        }
        assert_eq!(images.len(), 60);
        assert!(images.values().all(|&c| c == 1));
        // and the triple orbit fills all ordered triples: 5·4·3 = 60
        assert_eq!(g.triple_orbit_size([0, 1, 2]), 60);
    }

    #[test]
    fn pgl_closure_orders() {
        let t = tower93();
        let g = pgl_group(t.field(), 2).unwrap(); // PGL(2,9) on PG(1,9)
        assert_eq!(g.order(), 720);
        assert_eq!(g.points().len(), 10);
        let f4 = Field::from_params(2, 4).unwrap();
        assert_eq!(pgl_group(&f4, 2).unwrap().order(), 60); // PGL(2,4)
    }

    #[test]
    fn projmap_json_uses_the_normalized_form() {
        let t = tower93();
        let f = t.field();
        let two = f.elem(2).unwrap();
        // [[2, 0], [0, 1]] normalizes by its first nonzero entry
        let g = ProjMap::new(f, two, f.zero(), f.zero(), f.one()).unwrap();
        let json = g.to_json();
        assert_eq!(json["a"], 1);
        assert_eq!(json["d"], f.inv(two).unwrap().val());
    }

    #[test]
    fn bridge_is_a_bijection_with_the_stated_conventions() {
        let t = tower93();
        let f = t.field();
        let u0 = t.canonical_u0();
        let g0 = bridge(&t, u0).unwrap();
        assert_eq!(apply(f, &g0, ProjPoint::Infinity), ProjPoint::Finite(u0));
        // x = 0 ↦ 1/u0 = u0^q
        let at0 = apply(f, &g0, ProjPoint::Finite(f.zero())).finite().unwrap();
        assert_eq!(at0, f.inv(u0).unwrap());
        assert_eq!(at0, f.frobenius(u0, t.sub_q().degree()));
        let bij = bridge_bijection(&t, u0).unwrap();
        let distinct: HashSet<usize> = bij.iter().copied().collect();
        assert_eq!(distinct.len(), 10);
        assert!(bridge(&t, f.one()).is_err());
    }

    #[test]
    fn monomial_action_preserves_membership_and_weight() {
        let t = tower93();
        let f = t.field();
        let c3 = bch(&t, 3, 1).unwrap();
        let d3 = dual(f, &c3);
        let gmat = c3.generator_matrix(f);
        let id = ProjMap::identity(f);
        let mut s = 77u64;
        let qsub = f.subfield_elements(&t.sub_q());
        for trial in 0..100 {
            // random codeword of the primary code
            let msg: Vec<Elem> = (0..c3.dimension())
                .map(|_| qsub[(next(&mut s) % 9) as usize])
                .collect();
            let w = gmat.vec_mul(f, &msg);
            let (c, d) = rnd_cd(&t, &mut s);
            let g = stab_element(&t, c, d).unwrap().inverse(f);
            if trial == 0 {
                assert_eq!(monomial_action(&t, 3, &id, &w, false).unwrap(), w);
            }
            let moved = monomial_action(&t, 3, &g, &w, false).unwrap();
            assert!(contains(f, &c3, &moved).unwrap());
            assert_eq!(code::hamming_weight(&moved), code::hamming_weight(&w));
            let moved_cd = monomial_action_cd(&t, 3, c, d, &w, false).unwrap();
            assert!(contains(f, &c3, &moved_cd).unwrap());
            // dual side
            let coeffs = vec![
                f.elem(next(&mut s) % f.size()).unwrap(),
                f.elem(next(&mut s) % f.size()).unwrap(),
            ];
            let wd = code::trace_codeword(&t, 3, &coeffs).unwrap();
            let movedd = monomial_action_cd(&t, 3, c, d, &wd, true).unwrap();
            assert!(contains(f, &d3, &movedd).unwrap());
        }
    }

    #[test]
    fn circ_action_is_a_representation() {
        let t = tower93();
        let f = t.field();
        let delta = 3u64;
        let mut s = 5u64;
        for _ in 0..100 {
            let coeffs = vec![
                f.elem(next(&mut s) % f.size()).unwrap(),
                f.elem(next(&mut s) % f.size()).unwrap(),
            ];
            // E ∘ f = f, with E the identity lift (c, d) = (0, 1)
            let vals = circ_action_cd(&t, delta, f.zero(), f.one(), &coeffs).unwrap();
            let direct = code::trace_codeword(&t, delta, &coeffs).unwrap();
            assert_eq!(vals, direct);
            // (A1·A2) ∘ f = A1 ∘ (A2 ∘ f), with literal lifts tracked: feed
            // the interpolated coefficients of A2 ∘ f back through A1.
            let cd1 = rnd_cd(&t, &mut s);
            let cd2 = rnd_cd(&t, &mut s);
            let cd12 = stab_lift_product(&t, cd1, cd2);
            let composed = circ_action_cd(&t, delta, cd12.0, cd12.1, &coeffs).unwrap();
            let inner = circ_action_cd(&t, delta, cd2.0, cd2.1, &coeffs).unwrap();
            let inner_coeffs = crate::poly::interpolate_on_un(f, t.u_group(), &inner).unwrap();
            // 𝒫(δ,q) expansions live on exponents 1..δ-1 and their
            // conjugates q+1-i; the a₁..a_{δ-1} block determines f.
            let a_part: Vec<Elem> = inner_coeffs[1..delta as usize].to_vec();
            let outer = circ_action_cd(&t, delta, cd1.0, cd1.1, &a_part).unwrap();
            assert_eq!(composed, outer);
            // linearity over GF(q)
            let scalars = f.subfield_elements(&t.sub_q());
            let a = scalars[(next(&mut s) % 9) as usize];
            let b = scalars[(next(&mut s) % 9) as usize];
            let coeffs2 = vec![
                f.elem(next(&mut s) % f.size()).unwrap(),
                f.elem(next(&mut s) % f.size()).unwrap(),
            ];
            let (gc, gd) = rnd_cd(&t, &mut s);
            let lhs_coeffs: Vec<Elem> = (0..2)
                .map(|i| f.add(f.mul(a, coeffs[i]), f.mul(b, coeffs2[i])))
                .collect();
            let lhs = circ_action_cd(&t, delta, gc, gd, &lhs_coeffs).unwrap();
            let r1 = circ_action_cd(&t, delta, gc, gd, &coeffs).unwrap();
            let r2 = circ_action_cd(&t, delta, gc, gd, &coeffs2).unwrap();
            let rhs: Vec<Elem> = (0..r1.len())
                .map(|i| f.add(f.mul(a, r1[i]), f.mul(b, r2[i])))
                .collect();
            assert_eq!(lhs, rhs);
        }
    }
}
