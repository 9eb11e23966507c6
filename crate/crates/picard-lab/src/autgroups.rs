//! Automorphism groups of elliptic curves over finite fields, realized as
//! subgroups of the coordinate-change group, together with the character
//! of their action on the invariant differential and the (χ₄, χ₆)
//! bookkeeping in ℤ/4 × ℤ/6.

use std::fmt;

use crate::algebra::field::{Field, FieldElement};
use crate::groups::FiniteGroup;
use crate::ring::Ring;
use crate::transform::Transform;
use crate::weierstrass::WeierstrassCurve;

/// Errors from automorphism-group computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutError {
    /// The curve has Δ = 0, so it is not elliptic.
    SingularCurve,
    /// The group is not cyclic, so a single character exponent is undefined.
    NonCyclic,
    /// The cyclic order has no pinned generator convention (never reached
    /// for orders arising over the supported fields).
    UnpinnedOrder(usize),
    /// χ₄ and χ₆ values disagree mod 2, so no element of ℤ/12 matches.
    IncompatiblePair(u8, u8),
}

impl fmt::Display for AutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutError::SingularCurve => write!(f, "curve is singular (Δ = 0)"),
            AutError::NonCyclic => write!(f, "automorphism group is not cyclic"),
            AutError::UnpinnedOrder(n) => {
                write!(f, "no pinned generator convention for cyclic order {n}")
            }
            AutError::IncompatiblePair(a, b) => {
                write!(f, "χ₄ = {a} and χ₆ = {b} disagree mod 2")
            }
        }
    }
}

impl std::error::Error for AutError {}

/// The automorphism group of an elliptic curve: every coordinate change
/// fixing the equation, with its multiplication table.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    curve: WeierstrassCurve<FieldElement>,
    group: FiniteGroup<Transform<FieldElement>>,
}

impl AutomorphismGroup {
    pub fn curve(&self) -> &WeierstrassCurve<FieldElement> {
        &self.curve
    }

    pub fn group(&self) -> &FiniteGroup<Transform<FieldElement>> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn contains(&self, g: &Transform<FieldElement>) -> bool {
        self.group.elements().iter().any(|h| h == g)
    }

    /// Re-verifies the defining property element by element.
    pub fn all_fix_curve(&self) -> bool {
        self.group.elements().iter().all(|g| g.apply(&self.curve) == self.curve)
    }
}

fn transform_key(g: &Transform<FieldElement>) -> (u8, u8, u8, u8) {
    (g.u.code(), g.r.code(), g.s.code(), g.t.code())
}

/// Finds every (u, r, s, t) with apply(c, g) = c by a staged scan: the
/// a₁-comparison prunes (u, s) pairs (r- and t-translations cannot change
/// a₁), the a₂-comparison then prunes r (t-translations cannot change a₂),
/// and only survivors reach the full q-fold t-loop — so the search does
/// q²-ish work instead of q⁴. All filtering goes through `apply`; no
/// coefficient formulas are transcribed.
pub fn enumerate_automorphisms(
    c: &WeierstrassCurve<FieldElement>,
) -> Result<AutomorphismGroup, AutError> {
    if Ring::is_zero(&c.discriminant()) {
        return Err(AutError::SingularCurve);
    }
    let field = c.a1.field();
    let zero = field.zero();
    let one = field.one();

    let mut elements = Vec::new();
    for u in field.elements().filter(|x| !x.is_zero()) {
        for s in field.elements() {
            let g_us = Transform::from_elements(u, zero, s, zero).expect("u is nonzero");
            let c1 = g_us.apply(c);
            if c1.a1 != c.a1 {
                continue;
            }
            for r in field.elements() {
                let g_r = Transform::from_elements(one, r, zero, zero).unwrap();
                let c2 = g_r.apply(&c1);
                if c2.a2 != c.a2 {
                    continue;
                }
                for t in field.elements() {
                    let g_t = Transform::from_elements(one, zero, zero, t).unwrap();
                    if g_t.apply(&c2) == *c {
                        // (u,0,s,0) then (1,r,0,0) then (1,0,0,t) composes
                        // to exactly (u, r, s, t).
                        elements.push(Transform::from_elements(u, r, s, t).unwrap());
                    }
                }
            }
        }
    }

    let identity_index = elements
        .iter()
        .position(Transform::is_identity)
        .expect("identity always fixes the curve");
    let group =
        FiniteGroup::from_elements(elements, identity_index, Transform::compose, transform_key);
    Ok(AutomorphismGroup { curve: c.clone(), group })
}

/// Discrete logarithm base `zeta` within its cyclic span; panics if `x` is
/// outside (callers pass values known to be roots of unity of the order).
fn dlog(zeta: FieldElement, order: usize, x: FieldElement) -> usize {
    let mut acc = zeta.field().one();
    for e in 0..order {
        if acc == x {
            return e;
        }
        acc = acc * zeta;
    }
    panic!("value is not a power of the chosen root");
}

/// The smallest-code element of exact multiplicative order n.
fn pinned_root(field: Field, n: usize) -> FieldElement {
    field
        .elements()
        .filter(|x| !x.is_zero())
        .find(|x| x.multiplicative_order() as usize == n)
        .unwrap_or_else(|| panic!("no element of order {n} in the field"))
}

/// The exponent e ∈ ℤ/n by which the pinned generator of a cyclic
/// automorphism group acts on the invariant differential: the generator's
/// differential factor equals ζ^e for the pinned primitive n-th root ζ.
///
/// Generator conventions (the displayed actions, as transforms):
/// - n = 2: the involution (the unique nonidentity element); ζ = −1.
/// - n = 4: (ζ₄⁻¹, 0, 0, 0), i.e. (x, y) ↦ (ζ₄²x, ζ₄y), with ζ₄ the
///   smallest-code element of order 4.
/// - n = 6: the composite of the order-3 element (ζ₃², 0, 0, 0), i.e.
///   (x, y) ↦ (ζ₃x, y), and the order-2 element with u = −1 fixing the
///   curve; ζ₆ = −ζ₃ per the μ₂ × μ₃ factor decomposition.
///
/// Any other generator choice would negate the exponent; the convention is
/// pinned so "exponent 1" is a meaningful assertion.
pub fn differential_character(a: &AutomorphismGroup) -> Result<usize, AutError> {
    let group = a.group();
    if group.cyclic_generator().is_none() {
        return Err(AutError::NonCyclic);
    }
    let n = group.order();
    if n == 1 {
        return Ok(0);
    }
    let field = a.curve().a1.field();
    let zero = field.zero();

    let (zeta, generator) = match n {
        2 => {
            let g = group
                .elements()
                .iter()
                .find(|g| !g.is_identity())
                .expect("order-2 group has a nonidentity element")
                .clone();
            (field.from_int(-1), g)
        }
        4 => {
            let zeta4 = pinned_root(field, 4);
            let g = Transform::from_elements(
                zeta4.inv().expect("root of unity"),
                zero,
                zero,
                zero,
            )
            .unwrap();
            assert!(a.contains(&g), "pinned order-4 generator does not fix the curve");
            (zeta4, g)
        }
        6 => {
            let zeta3 = pinned_root(field, 3);
            let g3 = Transform::from_elements(zeta3 * zeta3, zero, zero, zero).unwrap();
            assert!(a.contains(&g3), "pinned order-3 element does not fix the curve");
            let g2 = group
                .elements()
                .iter()
                .find(|g| g.u == field.from_int(-1) && a.contains(g))
                .expect("order-6 group contains an element with u = -1")
                .clone();
            (-zeta3, Transform::compose(&g3, &g2))
        }
        other => return Err(AutError::UnpinnedOrder(other)),
    };
    assert!(a.contains(&generator), "pinned generator is not an automorphism");
    Ok(dlog(zeta, n, generator.differential_factor()))
}

/// A compatible pair of character values (χ₄, χ₆) ∈ ℤ/4 × ℤ/6 — compatible
/// meaning equal mod 2, which carves out the fiber product ℤ/12.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiPair {
    pub chi4: u8,
    pub chi6: u8,
}

impl ChiPair {
    /// Validates mod-2 compatibility.
    pub fn new(chi4: u8, chi6: u8) -> Result<ChiPair, AutError> {
        assert!(chi4 < 4 && chi6 < 6, "values out of range");
        if chi4 % 2 != chi6 % 2 {
            return Err(AutError::IncompatiblePair(chi4, chi6));
        }
        Ok(ChiPair { chi4, chi6 })
    }

    /// The pair attached to the i-th power of the differential line:
    /// (i mod 4, i mod 6), always compatible.
    pub fn of_power(i: i64) -> ChiPair {
        ChiPair { chi4: i.rem_euclid(4) as u8, chi6: i.rem_euclid(6) as u8 }
    }

    /// The unique k ∈ ℤ/12 reducing to (χ₄, χ₆), found by direct scan.
    pub fn to_z12(&self) -> u8 {
        for k in 0..12u8 {
            if k % 4 == self.chi4 && k % 6 == self.chi6 {
                return k;
            }
        }
        unreachable!("compatible pairs always lift to ℤ/12");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic_anchor() -> WeierstrassCurve<FieldElement> {
        WeierstrassCurve::over_field(Field::F13, [0, 0, 0, 1, 0])
    }

    fn sextic_anchor() -> WeierstrassCurve<FieldElement> {
        WeierstrassCurve::over_field(Field::F7, [0, 0, 1, 0, 0])
    }

    #[test]
    fn quartic_anchor_has_cyclic_group_of_order_4() {
        let a = enumerate_automorphisms(&quartic_anchor()).unwrap();
        assert_eq!(a.order(), 4);
        assert!(a.group().is_associative());
        assert!(a.group().cyclic_generator().is_some());
        assert!(a.all_fix_curve());
        // Every element is diagonal: (u, 0, 0, 0) with u⁴ = 1.
        for g in a.group().elements() {
            assert!(g.r.is_zero() && g.s.is_zero() && g.t.is_zero());
            assert!(g.u.pow(4).is_one());
        }
        assert_eq!(differential_character(&a), Ok(1));
    }

    #[test]
    fn sextic_anchor_has_cyclic_group_of_order_6() {
        let a = enumerate_automorphisms(&sextic_anchor()).unwrap();
        assert_eq!(a.order(), 6);
        assert!(a.group().is_associative());
        assert!(a.group().cyclic_generator().is_some());
        assert!(a.all_fix_curve());
        assert_eq!(differential_character(&a), Ok(1));
    }

    #[test]
    fn sextic_anchor_contains_the_displayed_factor_elements() {
        // μ₆ = μ₂ × μ₃: the order-3 element (x, y) ↦ (ζ₃x, y) is the
        // transform (ζ₃², 0, 0, 0) = (4, 0, 0, 0) over 𝔽₇, and the order-2
        // element (x, y) ↦ (x, −y−1) is (−1, 0, 0, −1) = (6, 0, 0, 6).
        let a = enumerate_automorphisms(&sextic_anchor()).unwrap();
        let g3 = Transform::over_field(Field::F7, [4, 0, 0, 0]).unwrap();
        let g2 = Transform::over_field(Field::F7, [6, 0, 0, 6]).unwrap();
        assert!(a.contains(&g3));
        assert!(a.contains(&g2));
        // Their composite (3, 0, 0, 6) generates the whole group.
        let g = Transform::compose(&g3, &g2);
        assert_eq!(g, Transform::over_field(Field::F7, [3, 0, 0, 6]).unwrap());
        let idx = a
            .group()
            .elements()
            .iter()
            .position(|h| *h == g)
            .expect("composite is an automorphism");
        assert_eq!(a.group().element_order(idx), 6);
    }

    #[test]
    fn generic_j_curve_has_only_the_involution() {
        // y² = x³ + x + 1 over 𝔽₁₃ has j ∉ {0, 1728}.
        let c = WeierstrassCurve::over_field(Field::F13, [0, 0, 0, 1, 1]);
        let j = c.j_invariant().unwrap();
        assert!(!j.is_zero() && j != Field::F13.from_int(1728));
        let a = enumerate_automorphisms(&c).unwrap();
        assert_eq!(a.order(), 2);
        assert_eq!(differential_character(&a), Ok(1));
    }

    #[test]
    fn singular_curve_is_rejected() {
        let c = WeierstrassCurve::over_field(Field::F13, [0, 0, 0, 0, 0]);
        assert_eq!(
            enumerate_automorphisms(&c).unwrap_err(),
            AutError::SingularCurve
        );
    }

    #[test]
    fn characteristic_3_j_zero_curve_is_larger_and_non_cyclic() {
        // Over 𝔽₉ the curve y² = x³ + x has c₄ = 0, hence j = 0, and picks
        // up extra automorphisms with r ≠ 0: order 12, nonabelian.
        let c = WeierstrassCurve::over_field(Field::F9, [0, 0, 0, 1, 0]);
        assert!(c.j_invariant().unwrap().is_zero());
        let a = enumerate_automorphisms(&c).unwrap();
        assert_eq!(a.order(), 12);
        assert!(a.group().cyclic_generator().is_none());
        assert_eq!(differential_character(&a), Err(AutError::NonCyclic));
    }

    #[test]
    fn orders_over_fields_coprime_to_six_are_2_4_or_6() {
        // All smooth y² = x³ + a₄x + a₆ over 𝔽₅ — 20 elliptic members.
        for a4 in Field::F5.elements() {
            for a6 in Field::F5.elements() {
                let c = WeierstrassCurve::new(
                    Field::F5.zero(),
                    Field::F5.zero(),
                    Field::F5.zero(),
                    a4,
                    a6,
                );
                let Ok(a) = enumerate_automorphisms(&c) else { continue };
                assert!(24 % a.order() == 0);
                assert!(matches!(a.order(), 2 | 4 | 6), "order {} at a4={a4} a6={a6}", a.order());
            }
        }
    }

    #[test]
    fn chi_pair_examples() {
        assert_eq!(ChiPair::of_power(1), ChiPair { chi4: 1, chi6: 1 });
        assert_eq!(ChiPair::of_power(1).to_z12(), 1);
        assert_eq!(ChiPair::of_power(12).to_z12(), 0);
        assert_eq!(ChiPair::of_power(6), ChiPair { chi4: 2, chi6: 0 });
        assert_eq!(ChiPair::of_power(6).to_z12(), 6);
        assert_eq!(ChiPair::new(1, 3).unwrap().to_z12(), 9);
        assert_eq!(ChiPair::new(1, 2), Err(AutError::IncompatiblePair(1, 2)));
    }

    #[test]
    fn chi_pair_respects_addition_and_matches_the_characters() {
        let e4 = differential_character(&enumerate_automorphisms(&quartic_anchor()).unwrap())
            .unwrap() as i64;
        let e6 = differential_character(&enumerate_automorphisms(&sextic_anchor()).unwrap())
            .unwrap() as i64;
        for i in 0..24i64 {
            let pair = ChiPair::of_power(i);
            // The pair is exactly (i·e₄ mod 4, i·e₆ mod 6).
            assert_eq!(pair.chi4 as i64, (i * e4).rem_euclid(4));
            assert_eq!(pair.chi6 as i64, (i * e6).rem_euclid(6));
            assert_eq!(pair.chi4 % 2, pair.chi6 % 2);
            for j in 0..24i64 {
                assert_eq!(
                    ChiPair::of_power(i + j).to_z12(),
                    (ChiPair::of_power(i).to_z12() + ChiPair::of_power(j).to_z12()) % 12
                );
            }
        }
        // i ↦ to_z12(i) hits all of ℤ/12: λ is a generator.
        let image: std::collections::BTreeSet<u8> =
            (0..12).map(|i| ChiPair::of_power(i).to_z12()).collect();
        assert_eq!(image.len(), 12);
    }
}
