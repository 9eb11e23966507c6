//! Sparse multivariate polynomials over ℤ or a small finite field.
//!
//! The variable set is fixed: a1, a2, a3, a4, a6, u, v, r, s, t, lam, mu, in
//! that (lexicographic) order. Terms live in a `BTreeMap` keyed by exponent
//! vectors, zero coefficients are never stored, and the base ring is a
//! runtime tag, so equality of canonical forms is structural equality.
//!
//! `v` is a formal companion for `u`: the ring itself is free, and the
//! localization relation u·v = 1 is imposed only by the explicit
//! [`MultiPoly::reduce_uv`] rewrite (substitution applies it as its final
//! normalization step).

use std::collections::BTreeMap;
use std::fmt;

use super::field::{Field, FieldElement};

/// The fixed variable set, in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A1,
    A2,
    A3,
    A4,
    A6,
    U,
    V,
    R,
    S,
    T,
    Lam,
    Mu,
}

/// All variables, index-aligned with exponent vectors.
pub const VARS: [Var; 12] = [
    Var::A1,
    Var::A2,
    Var::A3,
    Var::A4,
    Var::A6,
    Var::U,
    Var::V,
    Var::R,
    Var::S,
    Var::T,
    Var::Lam,
    Var::Mu,
];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::A3 => "a3",
            Var::A4 => "a4",
            Var::A6 => "a6",
            Var::U => "u",
            Var::V => "v",
            Var::R => "r",
            Var::S => "s",
            Var::T => "t",
            Var::Lam => "lam",
            Var::Mu => "mu",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        VARS.iter().copied().find(|v| v.name() == name)
    }

    fn index(self) -> usize {
        VARS.iter().position(|&v| v == self).unwrap()
    }
}

/// Exponent vector, index-aligned with [`VARS`]; derived `Ord` is exactly
/// lexicographic order on the fixed variable list.
type Exps = [u8; 12];

/// The base ring of a polynomial: ℤ or one of the supported finite fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Int,
    Fq(Field),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Int => write!(f, "Z"),
            RingTag::Fq(field) => write!(f, "{field}"),
        }
    }
}

/// A coefficient in the tagged base ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scalar {
    Int(i64),
    Fq(FieldElement),
}

impl Scalar {
    fn ring(&self) -> RingTag {
        match self {
            Scalar::Int(_) => RingTag::Int,
            Scalar::Fq(x) => RingTag::Fq(x.field()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => *n == 0,
            Scalar::Fq(x) => x.is_zero(),
        }
    }

    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Fq(a), Scalar::Fq(b)) => Scalar::Fq(a + b),
            _ => panic!("scalars from different base rings"),
        }
    }

    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Fq(a), Scalar::Fq(b)) => Scalar::Fq(a * b),
            _ => panic!("scalars from different base rings"),
        }
    }

    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Fq(a) => Scalar::Fq(-a),
        }
    }
}

/// A sparse polynomial in the fixed variable set over a tagged base ring.
///
/// Canonical form: no zero coefficients are stored, so `==` decides
/// polynomial identity. Binary operations panic when the base rings differ;
/// that is a caller bug, unlike data-dependent failures which return errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: RingTag,
    terms: BTreeMap<Exps, Scalar>,
}

/// Errors from polynomial operations with data-dependent failure modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Substitution bindings use a different base ring than the polynomial.
    RingMismatch,
    /// Evaluation target field does not contain the coefficient ring.
    NoEmbedding,
    /// An exponent left the supported range (degree ≤ 255 per variable).
    DegreeOverflow,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::RingMismatch => write!(f, "polynomials over different base rings"),
            PolyError::NoEmbedding => write!(f, "coefficients do not embed into the target field"),
            PolyError::DegreeOverflow => write!(f, "per-variable degree exceeds 255"),
        }
    }
}

impl std::error::Error for PolyError {}

impl MultiPoly {
    pub fn zero(ring: RingTag) -> MultiPoly {
        MultiPoly { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: RingTag) -> MultiPoly {
        MultiPoly::constant_int(ring, 1)
    }

    /// The constant polynomial with the image of `n` as coefficient.
    pub fn constant_int(ring: RingTag, n: i64) -> MultiPoly {
        let c = match ring {
            RingTag::Int => Scalar::Int(n),
            RingTag::Fq(f) => Scalar::Fq(f.from_int(n)),
        };
        MultiPoly::from_terms(ring, vec![([0u8; 12], c)])
    }

    /// The constant polynomial with a field coefficient.
    pub fn constant_fq(c: FieldElement) -> MultiPoly {
        MultiPoly::from_terms(RingTag::Fq(c.field()), vec![([0u8; 12], Scalar::Fq(c))])
    }

    /// The polynomial consisting of the single variable `v`.
    pub fn var(ring: RingTag, v: Var) -> MultiPoly {
        MultiPoly::monomial(ring, v, 1, 1)
    }

    /// c·v^e as a polynomial.
    pub fn monomial(ring: RingTag, v: Var, e: u8, c: i64) -> MultiPoly {
        let mut exps = [0u8; 12];
        exps[v.index()] = e;
        let c = match ring {
            RingTag::Int => Scalar::Int(c),
            RingTag::Fq(f) => Scalar::Fq(f.from_int(c)),
        };
        MultiPoly::from_terms(ring, vec![(exps, c)])
    }

    fn from_terms(ring: RingTag, terms: Vec<(Exps, Scalar)>) -> MultiPoly {
        let mut map: BTreeMap<Exps, Scalar> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(c.ring(), ring, "scalar outside the polynomial's base ring");
            let entry = map.entry(exps).or_insert_with(|| match ring {
                RingTag::Int => Scalar::Int(0),
                RingTag::Fq(f) => Scalar::Fq(f.zero()),
            });
            *entry = entry.add(c);
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly { ring, terms: map }
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the constant term.
    pub fn constant_term(&self) -> Scalar {
        self.terms.get(&[0u8; 12]).copied().unwrap_or(match self.ring {
            RingTag::Int => Scalar::Int(0),
            RingTag::Fq(f) => Scalar::Fq(f.zero()),
        })
    }

    /// True if the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e == &[0u8; 12])
    }

    /// Total degree in one variable.
    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent vector over all terms — the largest
    /// monomial dividing the polynomial. All zero for the zero polynomial.
    pub fn monomial_content(&self) -> Exps {
        let mut content = match self.terms.keys().next() {
            None => return [0; 12],
            Some(e) => *e,
        };
        for e in self.terms.keys() {
            for i in 0..12 {
                content[i] = content[i].min(e[i]);
            }
        }
        content
    }

    /// Divides every term by the given monomial; panics if any term is
    /// not divisible by it.
    pub fn divide_by_monomial(&self, m: &Exps) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut q = [0u8; 12];
                for i in 0..12 {
                    q[i] = e[i].checked_sub(m[i]).expect("term not divisible by monomial");
                }
                (q, *c)
            })
            .collect();
        MultiPoly { ring: self.ring, terms }
    }

    /// The coefficient of v^e: every term carrying exactly that power of
    /// v, with the power of v stripped off.
    pub fn coeff_of(&self, v: Var, e: u8) -> MultiPoly {
        let idx = v.index();
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            if exps[idx] == e {
                let mut stripped = *exps;
                stripped[idx] = 0;
                terms.insert(stripped, *c);
            }
        }
        MultiPoly { ring: self.ring, terms }
    }

    fn check_same_ring(&self, other: &MultiPoly) {
        assert_eq!(self.ring, other.ring, "polynomials over different base rings");
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        self.check_same_ring(rhs);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            match terms.get_mut(e) {
                Some(existing) => {
                    *existing = existing.add(*c);
                    if existing.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(*e, *c);
                }
            }
        }
        MultiPoly { ring: self.ring, terms }
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    /// Free-ring product; no u·v reduction (see [`MultiPoly::reduce_uv`]).
    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        self.check_same_ring(rhs);
        let mut terms: BTreeMap<Exps, Scalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0u8; 12];
                for i in 0..12 {
                    e[i] = ea[i].checked_add(eb[i]).expect("per-variable degree exceeds 255");
                }
                let c = ca.mul(*cb);
                match terms.get_mut(&e) {
                    Some(existing) => {
                        *existing = existing.add(c);
                        if existing.is_zero() {
                            terms.remove(&e);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            terms.insert(e, c);
                        }
                    }
                }
            }
        }
        MultiPoly { ring: self.ring, terms }
    }

    pub fn pow(&self, e: u8) -> MultiPoly {
        let mut acc = MultiPoly::one(self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales by an integer constant.
    pub fn scale_int(&self, n: i64) -> MultiPoly {
        self.mul(&MultiPoly::constant_int(self.ring, n))
    }

    /// Imposes the localization relation u·v = 1 by cancelling min(e_u, e_v)
    /// from every term. This is the only place the relation enters; raw
    /// arithmetic treats u and v as independent variables.
    pub fn reduce_uv(&self) -> MultiPoly {
        let ui = Var::U.index();
        let vi = Var::V.index();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m = e[ui].min(e[vi]);
                let mut e2 = *e;
                e2[ui] -= m;
                e2[vi] -= m;
                (e2, *c)
            })
            .collect();
        MultiPoly::from_terms(self.ring, terms)
    }

    /// Substitutes polynomials for variables; unbound variables stay fixed.
    /// The result is normalized by [`MultiPoly::reduce_uv`]. All bindings
    /// must share the polynomial's base ring.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly>) -> Result<MultiPoly, PolyError> {
        for b in bindings.values() {
            if b.ring != self.ring {
                return Err(PolyError::RingMismatch);
            }
        }
        let mut acc = MultiPoly::zero(self.ring);
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::from_terms(self.ring, vec![([0u8; 12], *c)]);
            // Unbound variables contribute a single monomial factor.
            let mut fixed = [0u8; 12];
            for (i, &v) in VARS.iter().enumerate() {
                if exps[i] == 0 {
                    continue;
                }
                match bindings.get(&v) {
                    Some(b) => term = term.mul(&b.pow(exps[i])),
                    None => fixed[i] = exps[i],
                }
            }
            if fixed != [0u8; 12] {
                term = term.mul(&MultiPoly { ring: self.ring, terms: [(fixed, match self.ring {
                    RingTag::Int => Scalar::Int(1),
                    RingTag::Fq(f) => Scalar::Fq(f.one()),
                })].into_iter().collect() });
            }
            acc = acc.add(&term);
        }
        Ok(acc.reduce_uv())
    }

    /// Evaluates at field points, embedding coefficients into `target`:
    /// ℤ-coefficients reduce mod p, and 𝔽_p-coefficients embed into 𝔽_{p^k}.
    /// Every variable occurring in the polynomial must be assigned.
    pub fn eval_fq(
        &self,
        target: Field,
        assignments: &BTreeMap<Var, FieldElement>,
    ) -> Result<FieldElement, PolyError> {
        let embed = |c: &Scalar| -> Result<FieldElement, PolyError> {
            match c {
                Scalar::Int(n) => Ok(target.from_int(*n)),
                Scalar::Fq(x) => {
                    if x.field() == target {
                        Ok(*x)
                    } else if x.field().characteristic() == target.characteristic()
                        && x.field().degree() == 1
                    {
                        Ok(target.from_int(x.c0() as i64))
                    } else {
                        Err(PolyError::NoEmbedding)
                    }
                }
            }
        };
        let mut acc = target.zero();
        for (exps, c) in &self.terms {
            let mut term = embed(c)?;
            for (i, &v) in VARS.iter().enumerate() {
                if exps[i] > 0 {
                    let x = assignments.get(&v).ok_or(PolyError::NoEmbedding)?;
                    assert_eq!(x.field(), target, "assignment outside the target field");
                    term = term * x.pow(exps[i] as i64);
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let (sign, mag) = match c {
                Scalar::Int(n) => (*n < 0, Scalar::Int(n.abs())),
                Scalar::Fq(x) => (false, Scalar::Fq(*x)),
            };
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = VARS
                .iter()
                .enumerate()
                .filter(|(i, _)| exps[*i] > 0)
                .map(|(i, v)| {
                    if exps[i] == 1 {
                        v.name().to_string()
                    } else {
                        format!("{}^{}", v.name(), exps[i])
                    }
                })
                .collect();
            let coeff = match mag {
                Scalar::Int(n) => n.to_string(),
                Scalar::Fq(x) => {
                    if x.c1() != 0 && x.c0() != 0 {
                        format!("({x})")
                    } else {
                        x.to_string()
                    }
                }
            };
            let coeff_is_one = coeff == "1";
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff_is_one {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn var(v: Var) -> MultiPoly {
        MultiPoly::var(RingTag::Int, v)
    }

    fn random_poly(rng: &mut ChaCha8Rng, ring: RingTag) -> MultiPoly {
        let mut acc = MultiPoly::zero(ring);
        for _ in 0..rng.gen_range(0..5) {
            let v = VARS[rng.gen_range(0..VARS.len())];
            let e = rng.gen_range(0..3);
            let c = rng.gen_range(-6..7);
            acc = acc.add(&MultiPoly::monomial(ring, v, e, c));
        }
        acc
    }

    #[test]
    fn canonical_form_drops_zero_coefficients() {
        let p = var(Var::A1).sub(&var(Var::A1));
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
        assert_eq!(p, MultiPoly::zero(RingTag::Int));
    }

    #[test]
    fn binomial_square() {
        // (a1 + a2)² = a1² + 2 a1 a2 + a2².
        let sum = var(Var::A1).add(&var(Var::A2));
        let sq = sum.mul(&sum);
        let expected = MultiPoly::monomial(RingTag::Int, Var::A1, 2, 1)
            .add(&var(Var::A1).mul(&var(Var::A2)).scale_int(2))
            .add(&MultiPoly::monomial(RingTag::Int, Var::A2, 2, 1));
        assert_eq!(sq, expected);
    }

    #[test]
    fn ring_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for ring in [RingTag::Int, RingTag::Fq(Field::F4), RingTag::Fq(Field::F3)] {
            for _ in 0..1000 {
                let a = random_poly(&mut rng, ring);
                let b = random_poly(&mut rng, ring);
                let c = random_poly(&mut rng, ring);
                assert_eq!(a.add(&b), b.add(&a));
                assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.sub(&a), MultiPoly::zero(ring));
                assert_eq!(a.mul(&MultiPoly::one(ring)), a);
            }
        }
    }

    #[test]
    fn uv_reduction_only_on_request() {
        let uv = var(Var::U).mul(&var(Var::V));
        assert_ne!(uv, MultiPoly::one(RingTag::Int));
        assert_eq!(uv.reduce_uv(), MultiPoly::one(RingTag::Int));
        // u²v → u.
        let u2v = MultiPoly::monomial(RingTag::Int, Var::U, 2, 1).mul(&var(Var::V));
        assert_eq!(u2v.reduce_uv(), var(Var::U));
    }

    #[test]
    fn substitution_applies_uv_reduction() {
        // p = u·v substituted with the identity binding reduces to 1.
        let uv = var(Var::U).mul(&var(Var::V));
        let out = uv.substitute(&BTreeMap::new()).unwrap();
        assert_eq!(out, MultiPoly::one(RingTag::Int));
    }

    #[test]
    fn substitution_expands_composites() {
        // lam ↦ mu − 1 in lam² + 1 gives mu² − 2 mu + 2.
        let p = MultiPoly::monomial(RingTag::Int, Var::Lam, 2, 1)
            .add(&MultiPoly::one(RingTag::Int));
        let mut b = BTreeMap::new();
        b.insert(
            Var::Lam,
            var(Var::Mu).sub(&MultiPoly::one(RingTag::Int)),
        );
        let out = p.substitute(&b).unwrap();
        let expected = MultiPoly::monomial(RingTag::Int, Var::Mu, 2, 1)
            .add(&MultiPoly::monomial(RingTag::Int, Var::Mu, 1, -2))
            .add(&MultiPoly::constant_int(RingTag::Int, 2));
        assert_eq!(out, expected);
    }

    #[test]
    fn substitution_ring_mismatch_is_an_error() {
        let p = var(Var::A1);
        let mut b = BTreeMap::new();
        b.insert(Var::A1, MultiPoly::one(RingTag::Fq(Field::F3)));
        assert_eq!(p.substitute(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn field_coefficients_reduce_mod_p() {
        // 3·mu = 0 over F3.
        let p = MultiPoly::monomial(RingTag::Fq(Field::F3), Var::Mu, 1, 3);
        assert!(p.is_zero());
    }

    #[test]
    fn eval_embeds_prime_field_into_extension() {
        // lam² + lam over F3, evaluated at lam = w ∈ F9.
        let ring = RingTag::Fq(Field::F3);
        let p = MultiPoly::monomial(ring, Var::Lam, 2, 1).add(&MultiPoly::var(ring, Var::Lam));
        let w = Field::F9.gen();
        let mut assign = BTreeMap::new();
        assign.insert(Var::Lam, w);
        // w² = −1 in F9, so the value is w − 1.
        assert_eq!(
            p.eval_fq(Field::F9, &assign).unwrap(),
            w - Field::F9.one()
        );
    }

    #[test]
    fn display_leads_with_highest_term() {
        // Display walks terms in descending lex order, so a1 prints before mu
        // and higher powers print before lower ones.
        let p = MultiPoly::monomial(RingTag::Int, Var::Mu, 1, 1).add(&var(Var::A1));
        assert_eq!(p.to_string(), "a1 + mu");
        let q = MultiPoly::var(RingTag::Int, Var::Lam);
        let q = q.mul(&q).sub(&q);
        assert_eq!(q.to_string(), "lam^2 - lam");
    }

    #[test]
    #[should_panic(expected = "different base rings")]
    fn mixing_rings_panics() {
        let _ = MultiPoly::one(RingTag::Int).add(&MultiPoly::one(RingTag::Fq(Field::F2)));
    }
}
