//! The coordinate-change group with coordinates (u, r, s, t): group law,
//! inverses, the substitution action on Weierstrass models, the scaling
//! factor on the invariant differential, and the induced action on units
//! β·Δ^m of the parameter space of smooth models.
//!
//! An element (u, r, s, t) renames coordinates by x′ = u²x + r,
//! y′ = u³y + su²x + t. New curve coefficients are always produced by
//! substituting the inverse expressions into the defining polynomial and
//! renormalizing — never by transcribed coefficient formulas — so the
//! covariance identities checked in the tests are genuine consequences of
//! the machinery.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::{Field, FieldElement};
use crate::algebra::multipoly::{MultiPoly, RingTag, Var};
use crate::ring::Ring;
use crate::weierstrass::WeierstrassCurve;

/// Errors from transform construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformError {
    /// The scaling coordinate u is not invertible in its ring.
    NonUnitScale,
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::NonUnitScale => {
                write!(f, "the scaling coordinate u must be a unit")
            }
        }
    }
}

impl std::error::Error for TransformError {}

/// A coordinate change (u, r, s, t) with u invertible. The inverse of u is
/// stored alongside so symbolic rings (where u is the variable `u` and its
/// inverse the companion variable `v`) need no division.
#[derive(Debug, Clone, PartialEq)]
pub struct Transform<R: Ring> {
    pub u: R,
    pub u_inv: R,
    pub r: R,
    pub s: R,
    pub t: R,
}

impl<R: Ring> Transform<R> {
    /// Builds a transform, checking that `u_inv` really inverts `u`.
    pub fn new(u: R, u_inv: R, r: R, s: R, t: R) -> Transform<R> {
        assert!(
            u.mul_ref(&u_inv) == u.one_like(),
            "u_inv does not invert u"
        );
        Transform { u, u_inv, r, s, t }
    }

    /// The identity (1, 0, 0, 0) in the same ring as `sample`.
    pub fn identity_like(sample: &R) -> Transform<R> {
        let one = sample.one_like();
        let zero = sample.zero_like();
        Transform { u: one.clone(), u_inv: one, r: zero.clone(), s: zero.clone(), t: zero }
    }

    /// Whether this is (1, 0, 0, 0).
    pub fn is_identity(&self) -> bool {
        self.u == self.u.one_like()
            && self.r.is_zero()
            && self.s.is_zero()
            && self.t.is_zero()
    }

    /// The transform performing `first` and then `second`:
    ///
    ///   (u₁u₂, u₂²r₁ + r₂, u₂s₁ + s₂, u₂³t₁ + u₂²r₁s₂ + t₂).
    ///
    /// With this product, applying transforms in sequence satisfies the
    /// right-action law apply(apply(c, g₁), g₂) = apply(c, compose(g₁, g₂)).
    pub fn compose(first: &Transform<R>, second: &Transform<R>) -> Transform<R> {
        let u2 = &second.u;
        let u2_sq = u2.mul_ref(u2);
        let u2_cube = u2_sq.mul_ref(u2);
        Transform {
            u: first.u.mul_ref(u2),
            u_inv: first.u_inv.mul_ref(&second.u_inv),
            r: u2_sq.mul_ref(&first.r).add_ref(&second.r),
            s: u2.mul_ref(&first.s).add_ref(&second.s),
            t: u2_cube
                .mul_ref(&first.t)
                .add_ref(&u2_sq.mul_ref(&first.r).mul_ref(&second.s))
                .add_ref(&second.t),
        }
    }

    /// The group inverse (u⁻¹, −u⁻²r, −u⁻¹s, u⁻³(rs − t)).
    pub fn invert(&self) -> Transform<R> {
        let vi = &self.u_inv;
        let vi_sq = vi.mul_ref(vi);
        let vi_cube = vi_sq.mul_ref(vi);
        Transform {
            u: self.u_inv.clone(),
            u_inv: self.u.clone(),
            r: vi_sq.mul_ref(&self.r).neg_ref(),
            s: vi.mul_ref(&self.s).neg_ref(),
            t: vi_cube.mul_ref(&self.r.mul_ref(&self.s).sub_ref(&self.t)),
        }
    }

    /// The factor by which the invariant differential dx/(2y + a₁x + a₃)
    /// rescales, namely u⁻¹.
    pub fn differential_factor(&self) -> R {
        self.u_inv.clone()
    }

    /// Rewrites a curve in the primed coordinates x′ = u²x + r,
    /// y′ = u³y + su²x + t. The defining polynomial is evaluated on the
    /// inverse substitution x = u⁻²(x′ − r), y = u⁻³(y′ − sx′ + sr − t),
    /// rescaled by u⁶, and the standard coefficients are read off. The
    /// shape assertions are unreachable for genuine transforms.
    pub fn apply(&self, c: &WeierstrassCurve<R>) -> WeierstrassCurve<R> {
        let v = &self.u_inv;
        let v2 = v.mul_ref(v);
        let v3 = v2.mul_ref(v);
        // x = v²·x′ − v²·r
        let x_image = XyPoly::from_terms([
            ((1, 0), v2.clone()),
            ((0, 0), v2.mul_ref(&self.r).neg_ref()),
        ]);
        // y = v³·y′ − v³s·x′ + v³(sr − t)
        let y_image = XyPoly::from_terms([
            ((0, 1), v3.clone()),
            ((1, 0), v3.mul_ref(&self.s).neg_ref()),
            ((0, 0), v3.mul_ref(&self.s.mul_ref(&self.r).sub_ref(&self.t))),
        ]);

        let f = weierstrass_polynomial(c);
        let mut g: XyPoly<R> = XyPoly::zero();
        for ((i, j), coeff) in &f.terms {
            let mut term = XyPoly::from_terms([((0, 0), coeff.clone())]);
            for _ in 0..*i {
                term = term.mul(&x_image);
            }
            for _ in 0..*j {
                term = term.mul(&y_image);
            }
            g = g.add(&term);
        }
        let u6 = self.u.pow_u(6);
        g = g.scale(&u6);

        let one = self.u.one_like();
        let coeff = |key: (u8, u8)| -> R {
            g.terms.get(&key).cloned().unwrap_or_else(|| one.zero_like())
        };
        assert!(
            coeff((0, 2)) == one,
            "renormalization failed: y′² coefficient is not 1"
        );
        assert!(
            coeff((3, 0)) == one.neg_ref(),
            "renormalization failed: x′³ coefficient is not -1"
        );
        for (key, val) in &g.terms {
            let expected = matches!(
                key,
                (0, 2) | (3, 0) | (1, 1) | (0, 1) | (2, 0) | (1, 0) | (0, 0)
            );
            assert!(
                expected || val.is_zero(),
                "renormalization failed: unexpected monomial x^{}y^{}",
                key.0,
                key.1
            );
        }
        WeierstrassCurve::new(
            coeff((1, 1)),
            coeff((2, 0)).neg_ref(),
            coeff((0, 1)),
            coeff((1, 0)).neg_ref(),
            coeff((0, 0)).neg_ref(),
        )
    }
}

impl Transform<FieldElement> {
    /// Builds a transform from field elements; u = 0 is rejected.
    pub fn from_elements(
        u: FieldElement,
        r: FieldElement,
        s: FieldElement,
        t: FieldElement,
    ) -> Result<Transform<FieldElement>, TransformError> {
        let u_inv = u.inv().map_err(|_| TransformError::NonUnitScale)?;
        Ok(Transform { u, u_inv, r, s, t })
    }

    /// Builds a transform over `field` from integer data.
    pub fn over_field(
        field: Field,
        urst: [i64; 4],
    ) -> Result<Transform<FieldElement>, TransformError> {
        Transform::from_elements(
            field.from_int(urst[0]),
            field.from_int(urst[1]),
            field.from_int(urst[2]),
            field.from_int(urst[3]),
        )
    }
}

impl Transform<MultiPoly> {
    /// The fully generic transform: u, r, s, t are indeterminates and u⁻¹
    /// is the companion variable v, tied to u by the u·v → 1 rewrite.
    pub fn generic_symbolic(ring: RingTag) -> Transform<MultiPoly> {
        Transform {
            u: MultiPoly::var(ring, Var::U),
            u_inv: MultiPoly::var(ring, Var::V),
            r: MultiPoly::var(ring, Var::R),
            s: MultiPoly::var(ring, Var::S),
            t: MultiPoly::var(ring, Var::T),
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Transform<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.u, self.r, self.s, self.t)
    }
}

/// Polynomials in the curve coordinates x, y with coefficients in R, keyed
/// by (x-degree, y-degree). Just big enough for cubic substitution work.
#[derive(Debug, Clone, PartialEq)]
struct XyPoly<R: Ring> {
    terms: BTreeMap<(u8, u8), R>,
}

impl<R: Ring> XyPoly<R> {
    fn zero() -> XyPoly<R> {
        XyPoly { terms: BTreeMap::new() }
    }

    fn from_terms<I: IntoIterator<Item = ((u8, u8), R)>>(iter: I) -> XyPoly<R> {
        let mut p = XyPoly::zero();
        for (key, val) in iter {
            p.insert_add(key, val);
        }
        p
    }

    fn insert_add(&mut self, key: (u8, u8), val: R) {
        if val.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, val);
            }
            Some(old) => {
                let sum = old.add_ref(&val);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
    }

    fn add(&self, rhs: &XyPoly<R>) -> XyPoly<R> {
        let mut out = self.clone();
        for (key, val) in &rhs.terms {
            out.insert_add(*key, val.clone());
        }
        out
    }

    fn mul(&self, rhs: &XyPoly<R>) -> XyPoly<R> {
        let mut out = XyPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.insert_add((i1 + i2, j1 + j2), c1.mul_ref(c2));
            }
        }
        out
    }

    fn scale(&self, c: &R) -> XyPoly<R> {
        let mut out = XyPoly::zero();
        for (key, val) in &self.terms {
            out.insert_add(*key, val.mul_ref(c));
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The defining polynomial y² + a₁xy + a₃y − x³ − a₂x² − a₄x − a₆.
fn weierstrass_polynomial<R: Ring>(c: &WeierstrassCurve<R>) -> XyPoly<R> {
    let one = c.a1.one_like();
    XyPoly::from_terms([
        ((0, 2), one.clone()),
        ((1, 1), c.a1.clone()),
        ((0, 1), c.a3.clone()),
        ((3, 0), one.neg_ref()),
        ((2, 0), c.a2.neg_ref()),
        ((1, 0), c.a4.neg_ref()),
        ((0, 0), c.a6.neg_ref()),
    ])
}

/// A unit β·Δ^m on the parameter space of smooth models, recorded by its
/// scalar part and Δ-exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitOnU {
    pub beta: FieldElement,
    pub weight: i64,
}

impl Transform<FieldElement> {
    /// The action (u,r,s,t)·(β·Δ^m) = β·u^{12m}·Δ^m.
    pub fn act_on_unit(&self, w: &UnitOnU) -> UnitOnU {
        UnitOnU { beta: w.beta * self.u.pow(12 * w.weight), weight: w.weight }
    }
}

/// The character χ₀^m of the coordinate-change group, valued u^m on
/// (u, r, s, t). Every character of the group is of this form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Character {
    pub exponent: i64,
}

impl Character {
    pub fn value(&self, g: &Transform<FieldElement>) -> FieldElement {
        g.u.pow(self.exponent)
    }

    /// Whether the character is the action on some unit Δ^m: true exactly
    /// when the exponent is divisible by 12, with m = exponent/12 as the
    /// witness.
    pub fn trivializable(&self) -> Option<i64> {
        if self.exponent % 12 == 0 {
            Some(self.exponent / 12)
        } else {
            None
        }
    }
}

/// Outcome of the exhaustive kernel-generation check over a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelReport {
    /// Elements reached by closing the three one-parameter families under
    /// composition.
    pub reached: usize,
    /// Size of the full kernel of χ₀, namely q³.
    pub expected: usize,
    /// Whether every reached element (1,r,s,t) equals the product
    /// (1,r,0,0)·(1,0,s,0)·(1,0,0,t−rs).
    pub decomposition_consistent: bool,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.reached == self.expected && self.decomposition_consistent
    }
}

/// Closes {(1,r,0,0)}, {(1,0,s,0)}, {(1,0,0,t)} under composition and
/// compares the reach against the kernel of χ₀, which is all of
/// {(1,r,s,t)} — q³ elements over 𝔽_q.
pub fn kernel_generation_check(field: Field) -> KernelReport {
    let q = field.order();
    let zero = field.zero();
    let mut generators = Vec::new();
    for x in field.elements() {
        generators.push(Transform::from_elements(field.one(), x, zero, zero).unwrap());
        generators.push(Transform::from_elements(field.one(), zero, x, zero).unwrap());
        generators.push(Transform::from_elements(field.one(), zero, zero, x).unwrap());
    }

    let key = |g: &Transform<FieldElement>| (g.r, g.s, g.t);
    let mut seen: BTreeSet<_> = BTreeSet::new();
    let mut frontier: Vec<Transform<FieldElement>> = Vec::new();
    for g in &generators {
        if seen.insert(key(g)) {
            frontier.push(g.clone());
        }
    }
    let mut all: Vec<Transform<FieldElement>> = frontier.clone();
    while let Some(g) = frontier.pop() {
        for h in &generators {
            let gh = Transform::compose(&g, h);
            debug_assert!(gh.u.is_one());
            if seen.insert(key(&gh)) {
                frontier.push(gh.clone());
                all.push(gh);
            }
        }
    }

    let mut decomposition_consistent = true;
    for g in &all {
        let jr = Transform::from_elements(field.one(), g.r, zero, zero).unwrap();
        let js = Transform::from_elements(field.one(), zero, g.s, zero).unwrap();
        let jt =
            Transform::from_elements(field.one(), zero, zero, g.t - g.r * g.s).unwrap();
        let rebuilt = Transform::compose(&Transform::compose(&jr, &js), &jt);
        if rebuilt != *g {
            decomposition_consistent = false;
        }
    }

    let q = q as usize;
    KernelReport { reached: all.len(), expected: q * q * q, decomposition_consistent }
}

/// Δ(apply(c, g)) = u¹²·Δ(c) as an exact identity in the symbolic ring.
pub fn delta_covariance_holds() -> bool {
    let c = WeierstrassCurve::generic_symbolic(RingTag::Int);
    let g = Transform::generic_symbolic(RingTag::Int);
    let lhs = g.apply(&c).discriminant();
    let rhs = g.u.pow_u(12).mul(&c.discriminant());
    lhs == rhs
}

/// c₄(apply(c, g)) = u⁴·c₄(c) as an exact identity in the symbolic ring.
pub fn c4_covariance_holds() -> bool {
    let c = WeierstrassCurve::generic_symbolic(RingTag::Int);
    let g = Transform::generic_symbolic(RingTag::Int);
    let lhs = g.apply(&c).c4();
    let rhs = g.u.pow_u(4).mul(&c.c4());
    lhs == rhs
}

/// j(apply(c, g)) = j(c) by cross-multiplied fraction equality:
/// c₄′³·Δ = c₄³·Δ′ symbolically.
pub fn j_invariance_holds() -> bool {
    let c = WeierstrassCurve::generic_symbolic(RingTag::Int);
    let g = Transform::generic_symbolic(RingTag::Int);
    let c2 = g.apply(&c);
    c2.c4().pow_u(3).mul(&c.discriminant()) == c.c4().pow_u(3).mul(&c2.discriminant())
}

/// The invariant differential rescales by exactly u⁻¹: symbolically,
/// 2y′ + a₁′x′ + a₃′ (written in the old coordinates) equals
/// u³·(2y + a₁x + a₃), so dx′/(2y′ + a₁′x′ + a₃′) = u⁻¹·dx/(2y + a₁x + a₃)
/// once dx′ = u²dx is taken into account.
pub fn differential_covariance_holds() -> bool {
    let ring = RingTag::Int;
    let c = WeierstrassCurve::generic_symbolic(ring);
    let g = Transform::generic_symbolic(ring);
    let c2 = g.apply(&c);

    let u = MultiPoly::var(ring, Var::U);
    let u2 = u.mul(&u);
    let u3 = u2.mul(&u);
    // x′ = u²x + r and y′ = u³y + su²x + t as polynomials in the old x, y.
    let x_new = XyPoly::from_terms([((1, 0), u2.clone()), ((0, 0), g.r.clone())]);
    let y_new = XyPoly::from_terms([
        ((0, 1), u3.clone()),
        ((1, 0), g.s.mul(&u2)),
        ((0, 0), g.t.clone()),
    ]);

    let two = MultiPoly::constant_int(ring, 2);
    let lhs = y_new
        .scale(&two)
        .add(&x_new.scale(&c2.a1))
        .add(&XyPoly::from_terms([((0, 0), c2.a3.clone())]));
    let rhs = XyPoly::from_terms([
        ((0, 1), two.mul(&u3)),
        ((1, 0), c.a1.mul(&u3)),
        ((0, 0), c.a3.mul(&u3)),
    ]);
    lhs.add(&rhs.scale(&MultiPoly::constant_int(ring, -1))).is_zero()
}

/// Δ·π¹² is coordinate-free: the Δ-factor u¹² and the twelfth power of the
/// differential factor u⁻¹ cancel exactly under the u·v → 1 rewrite.
pub fn delta_pi_invariance_holds() -> bool {
    let c = WeierstrassCurve::generic_symbolic(RingTag::Int);
    let g = Transform::generic_symbolic(RingTag::Int);
    let delta_factor_times_pi_factor_12 =
        g.u.pow_u(12).mul_ref(&g.differential_factor().pow_u(12));
    let one = MultiPoly::one(RingTag::Int);
    // Also check the full products: Δ′·(u⁻¹)¹² = Δ.
    let transported = g.apply(&c).discriminant().mul_ref(&g.differential_factor().pow_u(12));
    delta_factor_times_pi_factor_12 == one && transported == c.discriminant()
}

/// The translation decomposition (1,r,0,0)·(1,0,s,0)·(1,0,0,t−rs) =
/// (1,r,s,t) with symbolic r, s, t.
pub fn decomposition_identity_holds() -> bool {
    let ring = RingTag::Int;
    let one = MultiPoly::one(ring);
    let zero = MultiPoly::zero(ring);
    let r = MultiPoly::var(ring, Var::R);
    let s = MultiPoly::var(ring, Var::S);
    let t = MultiPoly::var(ring, Var::T);
    let jr = Transform::new(one.clone(), one.clone(), r.clone(), zero.clone(), zero.clone());
    let js = Transform::new(one.clone(), one.clone(), zero.clone(), s.clone(), zero.clone());
    let jt = Transform::new(
        one.clone(),
        one.clone(),
        zero.clone(),
        zero.clone(),
        t.sub(&r.mul(&s)),
    );
    let product = Transform::compose(&Transform::compose(&jr, &js), &jt);
    product == Transform::new(one.clone(), one, r, s, t)
}

/// Draws a uniform transform over `field` (u nonzero) from `rng`.
fn random_transform(field: Field, rng: &mut ChaCha8Rng) -> Transform<FieldElement> {
    let elements: Vec<_> = field.elements().collect();
    let q = elements.len();
    let u = elements[rng.gen_range(1..q)];
    let r = elements[rng.gen_range(0..q)];
    let s = elements[rng.gen_range(0..q)];
    let t = elements[rng.gen_range(0..q)];
    Transform::from_elements(u, r, s, t).unwrap()
}

/// Compares the two bracketings of g₁g₂g₃ on seeded random triples.
pub fn associativity_check(field: Field, samples: u32, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let g1 = random_transform(field, &mut rng);
        let g2 = random_transform(field, &mut rng);
        let g3 = random_transform(field, &mut rng);
        let left = Transform::compose(&Transform::compose(&g1, &g2), &g3);
        let right = Transform::compose(&g1, &Transform::compose(&g2, &g3));
        if left != right {
            return false;
        }
    }
    true
}

/// Checks the right-action law apply(apply(c,g₁),g₂) = apply(c, g₁g₂) on
/// seeded random curves and transform pairs.
pub fn action_axiom_check(field: Field, samples: u32, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<_> = field.elements().collect();
    let q = elements.len();
    for _ in 0..samples {
        let c = WeierstrassCurve::new(
            elements[rng.gen_range(0..q)],
            elements[rng.gen_range(0..q)],
            elements[rng.gen_range(0..q)],
            elements[rng.gen_range(0..q)],
            elements[rng.gen_range(0..q)],
        );
        let g1 = random_transform(field, &mut rng);
        let g2 = random_transform(field, &mut rng);
        let sequential = g2.apply(&g1.apply(&c));
        let composed = Transform::compose(&g1, &g2).apply(&c);
        if sequential != composed {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_transform() -> Transform<MultiPoly> {
        Transform::generic_symbolic(RingTag::Int)
    }

    fn sym_curve() -> WeierstrassCurve<MultiPoly> {
        WeierstrassCurve::generic_symbolic(RingTag::Int)
    }

    #[test]
    fn identity_is_neutral() {
        let g = sym_transform();
        let e = Transform::identity_like(&g.u);
        assert_eq!(Transform::compose(&e, &g), g);
        assert_eq!(Transform::compose(&g, &e), g);
        assert!(e.is_identity());
    }

    #[test]
    fn decomposition_identity() {
        assert!(decomposition_identity_holds());
    }

    #[test]
    fn associativity_on_seeded_triples() {
        assert!(associativity_check(Field::F7, 1000, 0));
    }

    #[test]
    fn inverse_cancels_both_ways_symbolically() {
        let g = sym_transform();
        let e = Transform::identity_like(&g.u);
        assert_eq!(Transform::compose(&g, &g.invert()), e);
        assert_eq!(Transform::compose(&g.invert(), &g), e);
    }

    #[test]
    fn inverse_cancels_on_random_field_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = Transform::identity_like(&Field::F13.one());
        for _ in 0..100 {
            let g = random_transform(Field::F13, &mut rng);
            let h = g.invert();
            assert_eq!(Transform::compose(&g, &h), e);
            assert_eq!(Transform::compose(&h, &g), e);
        }
    }

    #[test]
    fn inverse_of_diagonal() {
        let g = Transform::over_field(Field::F13, [5, 0, 0, 0]).unwrap();
        let expected = Transform::over_field(Field::F13, [8, 0, 0, 0]).unwrap();
        assert_eq!(g.invert(), expected); // 5·8 = 40 ≡ 1 (mod 13)
    }

    #[test]
    fn group_axioms_exhaustive_over_f2_and_f3() {
        for field in [Field::F2, Field::F3] {
            let mut all = Vec::new();
            for u in field.elements().filter(|x| !x.is_zero()) {
                for r in field.elements() {
                    for s in field.elements() {
                        for t in field.elements() {
                            all.push(Transform::from_elements(u, r, s, t).unwrap());
                        }
                    }
                }
            }
            let e = Transform::identity_like(&field.one());
            for g in &all {
                assert_eq!(Transform::compose(g, &g.invert()), e);
                for h in &all {
                    let gh = Transform::compose(g, h);
                    for k in &all {
                        // Associativity; |G(𝔽₂)| = 8, |G(𝔽₃)| = 54.
                        assert_eq!(
                            Transform::compose(&gh, k),
                            Transform::compose(g, &Transform::compose(h, k)),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn applying_the_identity_fixes_every_curve() {
        let c = sym_curve();
        let e = Transform::identity_like(&c.a1);
        assert_eq!(e.apply(&c), c);
    }

    #[test]
    fn transformed_coefficients_have_the_expected_leading_form() {
        // a₁′ = ua₁ − 2s emerges from the substitution machinery.
        let c = sym_curve();
        let g = sym_transform();
        let moved = g.apply(&c);
        let ring = RingTag::Int;
        let expected_a1 = g.u.mul(&c.a1).sub(&MultiPoly::var(ring, Var::S).scale_int(2));
        assert_eq!(moved.a1, expected_a1);
    }

    #[test]
    fn discriminant_covariance() {
        assert!(delta_covariance_holds());
    }

    #[test]
    fn c4_covariance() {
        assert!(c4_covariance_holds());
    }

    #[test]
    fn j_is_invariant() {
        assert!(j_invariance_holds());
    }

    #[test]
    fn differential_rescales_by_u_inverse() {
        assert!(differential_covariance_holds());
        // Unipotent transforms fix the differential.
        let ring = RingTag::Int;
        let one = MultiPoly::one(ring);
        let g = Transform::new(
            one.clone(),
            one.clone(),
            MultiPoly::var(ring, Var::R),
            MultiPoly::var(ring, Var::S),
            MultiPoly::var(ring, Var::T),
        );
        assert_eq!(g.differential_factor(), one);
        // The diagonal transform rescales it by u⁻¹ = v.
        let d = sym_transform();
        assert_eq!(d.differential_factor(), MultiPoly::var(ring, Var::V));
    }

    #[test]
    fn delta_pi_twelfth_power_is_coordinate_free() {
        assert!(delta_pi_invariance_holds());
    }

    #[test]
    fn action_axiom_on_random_data() {
        assert!(action_axiom_check(Field::F7, 200, 0));
    }

    #[test]
    fn round_trip_through_a_transform_restores_the_curve() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let elements: Vec<_> = Field::F5.elements().collect();
        for _ in 0..50 {
            let c = WeierstrassCurve::new(
                elements[rng.gen_range(0..5)],
                elements[rng.gen_range(0..5)],
                elements[rng.gen_range(0..5)],
                elements[rng.gen_range(0..5)],
                elements[rng.gen_range(0..5)],
            );
            let g = random_transform(Field::F5, &mut rng);
            assert_eq!(g.invert().apply(&g.apply(&c)), c);
        }
    }

    #[test]
    fn unit_action_examples() {
        let f = Field::F13;
        let g = Transform::over_field(f, [2, 5, 7, 11]).unwrap();
        // Weight 0: fixed by everything.
        let w0 = UnitOnU { beta: f.from_int(3), weight: 0 };
        assert_eq!(g.act_on_unit(&w0), w0);
        // Weight 1: β picks up u¹².
        let w1 = UnitOnU { beta: f.one(), weight: 1 };
        assert_eq!(
            g.act_on_unit(&w1),
            UnitOnU { beta: f.from_int(2).pow(12), weight: 1 }
        );
        // Negative weight: u⁻¹² appears instead.
        let wm = UnitOnU { beta: f.one(), weight: -1 };
        assert_eq!(
            g.act_on_unit(&wm),
            UnitOnU { beta: f.from_int(2).pow(-12), weight: -1 }
        );
    }

    #[test]
    fn unit_action_is_compatible_with_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let g1 = random_transform(Field::F13, &mut rng);
            let g2 = random_transform(Field::F13, &mut rng);
            let w = UnitOnU {
                beta: Field::F13.from_int(rng.gen_range(1..13)),
                weight: rng.gen_range(-3..4),
            };
            let sequential = g2.act_on_unit(&g1.act_on_unit(&w));
            let composed = Transform::compose(&g1, &g2).act_on_unit(&w);
            assert_eq!(sequential, composed);
        }
    }

    #[test]
    fn character_triviality_criterion() {
        assert_eq!(Character { exponent: 0 }.trivializable(), Some(0));
        assert_eq!(Character { exponent: 12 }.trivializable(), Some(1));
        assert_eq!(Character { exponent: 24 }.trivializable(), Some(2));
        assert_eq!(Character { exponent: -12 }.trivializable(), Some(-1));
        assert_eq!(Character { exponent: 1 }.trivializable(), None);
        assert_eq!(Character { exponent: 13 }.trivializable(), None);
        assert_eq!(Character { exponent: 6 }.trivializable(), None);
    }

    #[test]
    fn trivializable_characters_match_a_unit_action() {
        // χ₀^{12m}(g) equals the factor act_on_unit(g, Δ^m) multiplies β by.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for m in -2..3i64 {
            let chi = Character { exponent: 12 * m };
            assert_eq!(chi.trivializable(), Some(m));
            for _ in 0..50 {
                let g = random_transform(Field::F13, &mut rng);
                let w = UnitOnU { beta: Field::F13.one(), weight: m };
                assert_eq!(g.act_on_unit(&w).beta, chi.value(&g));
            }
        }
    }

    #[test]
    fn kernel_generation_over_small_fields() {
        for (field, size) in [(Field::F2, 8), (Field::F3, 27), (Field::F7, 343)] {
            let report = kernel_generation_check(field);
            assert_eq!(report.reached, size);
            assert_eq!(report.expected, size);
            assert!(report.decomposition_consistent);
            assert!(report.passed());
        }
    }

    #[test]
    #[should_panic(expected = "u_inv does not invert u")]
    fn mismatched_inverse_is_rejected() {
        let _ = Transform::new(2i64, 2i64, 0, 0, 0);
    }
}
