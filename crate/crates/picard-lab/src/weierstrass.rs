//! Weierstrass models y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ and their
//! standard invariants b₂, b₄, b₆, b₈, c₄, c₆, Δ, j over any exact
//! coefficient ring.

use std::fmt;

use crate::algebra::field::{Field, FieldElement};
use crate::algebra::multipoly::{MultiPoly, RingTag, Var};
use crate::ring::{Fraction, Ring};

/// Fiber type of a plane Weierstrass cubic, decided by (Δ, c₄).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Δ ≠ 0: nonsingular.
    Smooth,
    /// Δ = 0, c₄ ≠ 0: one node (distinct tangent directions).
    Nodal,
    /// Δ = 0, c₄ = 0: one cusp (a doubled tangent direction).
    Cuspidal,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveKind::Smooth => "smooth",
            CurveKind::Nodal => "nodal",
            CurveKind::Cuspidal => "cuspidal",
        };
        write!(f, "{s}")
    }
}

/// A Weierstrass model, stored by its five coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassCurve<R: Ring> {
    pub a1: R,
    pub a2: R,
    pub a3: R,
    pub a4: R,
    pub a6: R,
}

impl<R: Ring> WeierstrassCurve<R> {
    pub fn new(a1: R, a2: R, a3: R, a4: R, a6: R) -> WeierstrassCurve<R> {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// b₂ = a₁² + 4a₂.
    pub fn b2(&self) -> R {
        self.a1.mul_ref(&self.a1).add_ref(&self.a2.scale_int(4))
    }

    /// b₄ = a₁a₃ + 2a₄.
    pub fn b4(&self) -> R {
        self.a1.mul_ref(&self.a3).add_ref(&self.a4.scale_int(2))
    }

    /// b₆ = a₃² + 4a₆.
    pub fn b6(&self) -> R {
        self.a3.mul_ref(&self.a3).add_ref(&self.a6.scale_int(4))
    }

    /// b₈ = a₁²a₆ + 4a₂a₆ − a₁a₃a₄ + a₂a₃² − a₄².
    pub fn b8(&self) -> R {
        let a1a1 = self.a1.mul_ref(&self.a1);
        a1a1.mul_ref(&self.a6)
            .add_ref(&self.a2.mul_ref(&self.a6).scale_int(4))
            .sub_ref(&self.a1.mul_ref(&self.a3).mul_ref(&self.a4))
            .add_ref(&self.a2.mul_ref(&self.a3).mul_ref(&self.a3))
            .sub_ref(&self.a4.mul_ref(&self.a4))
    }

    /// (b₂, b₄, b₆, b₈) in one call.
    pub fn b_invariants(&self) -> (R, R, R, R) {
        (self.b2(), self.b4(), self.b6(), self.b8())
    }

    /// c₄ = b₂² − 24b₄.
    pub fn c4(&self) -> R {
        let b2 = self.b2();
        b2.mul_ref(&b2).sub_ref(&self.b4().scale_int(24))
    }

    /// c₆ = −b₂³ + 36b₂b₄ − 216b₆.
    pub fn c6(&self) -> R {
        let b2 = self.b2();
        b2.pow_u(3)
            .neg_ref()
            .add_ref(&b2.mul_ref(&self.b4()).scale_int(36))
            .sub_ref(&self.b6().scale_int(216))
    }

    /// Δ = −b₂²b₈ − 8b₄³ − 27b₆² + 9b₂b₄b₆.
    pub fn discriminant(&self) -> R {
        let (b2, b4, b6, b8) = self.b_invariants();
        b2.mul_ref(&b2)
            .mul_ref(&b8)
            .neg_ref()
            .sub_ref(&b4.pow_u(3).scale_int(8))
            .sub_ref(&b6.mul_ref(&b6).scale_int(27))
            .add_ref(&b2.mul_ref(&b4).mul_ref(&b6).scale_int(9))
    }
}

impl WeierstrassCurve<FieldElement> {
    /// Fiber type from (Δ, c₄). Defined over a field only: the nodal/cuspidal
    /// split is a statement about tangent directions over the closure.
    pub fn classify(&self) -> CurveKind {
        if !Ring::is_zero(&self.discriminant()) {
            CurveKind::Smooth
        } else if !Ring::is_zero(&self.c4()) {
            CurveKind::Nodal
        } else {
            CurveKind::Cuspidal
        }
    }
    /// Builds a curve over `field` from integer coefficient data.
    pub fn over_field(field: Field, a: [i64; 5]) -> WeierstrassCurve<FieldElement> {
        WeierstrassCurve::new(
            field.from_int(a[0]),
            field.from_int(a[1]),
            field.from_int(a[2]),
            field.from_int(a[3]),
            field.from_int(a[4]),
        )
    }

    /// j = c₄³/Δ; `None` when the curve is singular.
    pub fn j_invariant(&self) -> Option<FieldElement> {
        let delta = self.discriminant();
        if delta.is_zero() {
            return None;
        }
        Some(self.c4().pow(3) * delta.inv().expect("nonzero"))
    }
}

impl WeierstrassCurve<MultiPoly> {
    /// The fully generic model: each coefficient is its own indeterminate.
    pub fn generic_symbolic(ring: RingTag) -> WeierstrassCurve<MultiPoly> {
        WeierstrassCurve::new(
            MultiPoly::var(ring, Var::A1),
            MultiPoly::var(ring, Var::A2),
            MultiPoly::var(ring, Var::A3),
            MultiPoly::var(ring, Var::A4),
            MultiPoly::var(ring, Var::A6),
        )
    }

    /// j = c₄³/Δ as a fraction of polynomials; `None` when Δ = 0 identically.
    pub fn j_fraction(&self) -> Option<Fraction> {
        let delta = self.discriminant();
        if delta.is_zero() {
            return None;
        }
        Some(Fraction::new(self.c4().pow_u(3), delta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// y² = x³ + x, the order-4 automorphism example.
    fn quartic_anchor() -> WeierstrassCurve<i64> {
        WeierstrassCurve::new(0, 0, 0, 1, 0)
    }

    /// y² + y = x³, the order-6 automorphism example.
    fn sextic_anchor() -> WeierstrassCurve<i64> {
        WeierstrassCurve::new(0, 0, 1, 0, 0)
    }

    #[test]
    fn quartic_anchor_invariants() {
        let e = quartic_anchor();
        assert_eq!(e.b_invariants(), (0, 2, 0, -1));
        assert_eq!(e.discriminant(), -64);
        assert_eq!(e.c4(), -48);
        // j = c₄³/Δ = 1728, checked without leaving ℤ.
        assert_eq!(e.c4().pow(3), 1728 * e.discriminant());
    }

    #[test]
    fn sextic_anchor_invariants() {
        let e = sextic_anchor();
        assert_eq!(e.b_invariants(), (0, 0, 1, 0));
        assert_eq!(e.discriminant(), -27);
        assert_eq!(e.c4(), 0);
    }

    #[test]
    fn j_values_over_small_fields() {
        let e = WeierstrassCurve::over_field(Field::F13, [0, 0, 0, 1, 0]);
        assert_eq!(e.j_invariant(), Some(Field::F13.from_int(1728)));
        // 1728 ≡ 12 (mod 13), so this is the nonzero residue class.
        assert_eq!(Field::F13.from_int(1728), Field::F13.from_int(12));

        let e = WeierstrassCurve::over_field(Field::F7, [0, 0, 1, 0, 0]);
        assert_eq!(e.j_invariant(), Some(Field::F7.zero()));

        let singular = WeierstrassCurve::over_field(Field::F5, [0, 0, 0, 0, 0]);
        assert_eq!(singular.j_invariant(), None);
    }

    #[test]
    fn b8_is_determined_by_the_other_b_invariants() {
        // 4b₈ = b₂b₆ − b₄² as an identity in ℤ[a₁, a₂, a₃, a₄, a₆].
        let e = WeierstrassCurve::generic_symbolic(RingTag::Int);
        let (b2, b4, b6, b8) = e.b_invariants();
        assert_eq!(b8.scale_int(4), b2.mul(&b6).sub(&b4.mul(&b4)));
    }

    #[test]
    fn c_invariants_and_discriminant_satisfy_the_1728_relation() {
        // c₄³ − c₆² = 1728Δ, again as a polynomial identity; this exercises
        // every invariant formula at once.
        let e = WeierstrassCurve::generic_symbolic(RingTag::Int);
        let lhs = e.c4().pow_u(3).sub(&e.c6().mul(&e.c6()));
        assert_eq!(lhs, e.discriminant().scale_int(1728));
    }

    #[test]
    fn c4_collapses_in_characteristic_two() {
        let e = WeierstrassCurve::generic_symbolic(RingTag::Fq(Field::F2));
        let a1_fourth = MultiPoly::monomial(RingTag::Fq(Field::F2), Var::A1, 4, 1);
        assert_eq!(e.c4(), a1_fourth);
    }

    #[test]
    fn c4_collapses_in_characteristic_three() {
        // Over F₃, c₄ = (a₁² + a₂)², and the inner square matters: the
        // polynomial (a₁ + a₂)² is a different function (e.g. at a₁ = 2,
        // a₂ = 1 the two evaluate to 1 and 0).
        let ring = RingTag::Fq(Field::F3);
        let e = WeierstrassCurve::generic_symbolic(ring);
        let a1 = MultiPoly::var(ring, Var::A1);
        let a2 = MultiPoly::var(ring, Var::A2);
        let correct = a1.mul(&a1).add(&a2).pow(2);
        assert_eq!(e.c4(), correct);

        let lookalike = a1.add(&a2).pow(2);
        assert_ne!(correct, lookalike);
        use std::collections::BTreeMap;
        let mut at = BTreeMap::new();
        at.insert(Var::A1, Field::F3.from_int(2));
        at.insert(Var::A2, Field::F3.from_int(1));
        assert_eq!(correct.eval_fq(Field::F3, &at).unwrap(), Field::F3.one());
        assert_eq!(lookalike.eval_fq(Field::F3, &at).unwrap(), Field::F3.zero());
    }

    #[test]
    fn classification_triple() {
        // Smooth, nodal, cuspidal — one of each over 𝔽₅.
        let smooth = WeierstrassCurve::over_field(Field::F5, [0, 0, 0, 1, 0]);
        assert_eq!(smooth.classify(), CurveKind::Smooth);
        let node = WeierstrassCurve::over_field(Field::F5, [0, 1, 0, 0, 0]); // y² = x³ + x²
        assert_eq!(node.classify(), CurveKind::Nodal);
        assert!(node.discriminant().is_zero());
        let cusp = WeierstrassCurve::over_field(Field::F5, [0, 0, 0, 0, 0]); // y² = x³
        assert_eq!(cusp.classify(), CurveKind::Cuspidal);
    }

    #[test]
    fn invariants_commute_with_reduction_mod_p() {
        // Δ and c₄ of an integer curve reduce correctly modulo p.
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..200 {
            let a: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-9..10));
            let c = WeierstrassCurve::new(a[0], a[1], a[2], a[3], a[4]);
            for field in [Field::F2, Field::F3, Field::F5, Field::F7, Field::F13] {
                let cp = WeierstrassCurve::over_field(field, a);
                assert_eq!(cp.discriminant(), field.from_int(c.discriminant()));
                assert_eq!(cp.c4(), field.from_int(c.c4()));
            }
        }
    }

    #[test]
    fn nodal_versus_cuspidal_matches_the_tangent_cone() {
        // Any curve with a₃ = a₄ = a₆ = 0 is singular at the origin, where
        // the lowest-degree part of the defining polynomial is the binary
        // quadric y² + a₁xy − a₂x². That quadric has distinct roots exactly
        // when its discriminant a₁² + 4a₂ is nonzero in characteristic ≠ 2,
        // and exactly when a₁ ≠ 0 in characteristic 2 (separability). The
        // (Δ, c₄) classification must agree with this independent criterion
        // for every coefficient choice.
        for field in [Field::F2, Field::F3, Field::F4, Field::F5, Field::F7, Field::F9] {
            for a1 in field.elements() {
                for a2 in field.elements() {
                    let e = WeierstrassCurve::new(
                        a1,
                        a2,
                        field.zero(),
                        field.zero(),
                        field.zero(),
                    );
                    assert!(e.discriminant().is_zero());
                    let tangent_cone_split = if field.characteristic() == 2 {
                        !a1.is_zero()
                    } else {
                        !(a1 * a1 + field.from_int(4) * a2).is_zero()
                    };
                    let expected =
                        if tangent_cone_split { CurveKind::Nodal } else { CurveKind::Cuspidal };
                    assert_eq!(e.classify(), expected, "a1={a1} a2={a2} over {field:?}");
                }
            }
        }
    }

    #[test]
    fn j_fraction_of_the_generic_curve_exists() {
        let e = WeierstrassCurve::generic_symbolic(RingTag::Int);
        let j = e.j_fraction().unwrap();
        assert_eq!(*j.num(), e.c4().pow_u(3));
        assert_eq!(*j.den(), e.discriminant());
    }
}
