//! The Hesse cubic family X³ + Y³ + Z³ = μXYZ in characteristic 2: its
//! flexes, the flex-based change of coordinates to a Weierstrass model
//! over 𝔽₂(μ), and the three-torsion points over 𝔽₄.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::field::Field;
use crate::algebra::multipoly::{MultiPoly, RingTag, Var};
use crate::ring::{Fraction, Ring};
use crate::weierstrass::WeierstrassCurve;

/// Errors from the Hesse-family constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HesseError {
    /// The chosen base point does not meet its tangent with multiplicity 3.
    NotAFlex,
}

impl fmt::Display for HesseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HesseError::NotAFlex => write!(f, "chosen point is not an inflection point"),
        }
    }
}

impl std::error::Error for HesseError {}

/// Trivariate polynomial in (X, Y, Z) with coefficients in R, keyed by
/// exponent triple. Carries a zero of R so coefficients can be looked up.
#[derive(Debug, Clone, PartialEq)]
struct TriPoly<R: Ring> {
    terms: BTreeMap<(u8, u8, u8), R>,
    zero: R,
}

impl<R: Ring> TriPoly<R> {
    fn new(zero: R) -> TriPoly<R> {
        debug_assert!(zero.is_zero());
        TriPoly { terms: BTreeMap::new(), zero }
    }

    fn from_terms(zero: R, terms: Vec<((u8, u8, u8), R)>) -> TriPoly<R> {
        let mut p = TriPoly::new(zero);
        for (k, c) in terms {
            p.insert_add(k, c);
        }
        p
    }

    fn insert_add(&mut self, key: (u8, u8, u8), c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let sum = old.add_ref(&c);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn coeff(&self, key: (u8, u8, u8)) -> R {
        self.terms.get(&key).cloned().unwrap_or_else(|| self.zero.clone())
    }

    fn add(&self, rhs: &TriPoly<R>) -> TriPoly<R> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    fn scale(&self, c: &R) -> TriPoly<R> {
        let mut out = TriPoly::new(self.zero.clone());
        for (k, v) in &self.terms {
            out.insert_add(*k, v.mul_ref(c));
        }
        out
    }

    fn mul(&self, rhs: &TriPoly<R>) -> TriPoly<R> {
        let mut out = TriPoly::new(self.zero.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.insert_add((a.0 + b.0, a.1 + b.1, a.2 + b.2), ca.mul_ref(cb));
            }
        }
        out
    }

    fn pow(&self, e: u8) -> TriPoly<R> {
        let mut out = TriPoly::from_terms(self.zero.clone(), vec![((0, 0, 0), self.zero.one_like())]);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative along axis 0, 1, or 2.
    fn partial(&self, axis: usize) -> TriPoly<R> {
        let mut out = TriPoly::new(self.zero.clone());
        for (k, c) in &self.terms {
            let e = [k.0, k.1, k.2][axis];
            if e == 0 {
                continue;
            }
            let mut lowered = [k.0, k.1, k.2];
            lowered[axis] -= 1;
            out.insert_add(
                (lowered[0], lowered[1], lowered[2]),
                c.scale_int(e as i64),
            );
        }
        out
    }

    fn eval(&self, p: &[R; 3]) -> R {
        let mut acc = self.zero.clone();
        for (k, c) in &self.terms {
            let term = c
                .mul_ref(&p[0].pow_u(k.0 as u32))
                .mul_ref(&p[1].pow_u(k.1 as u32))
                .mul_ref(&p[2].pow_u(k.2 as u32));
            acc = acc.add_ref(&term);
        }
        acc
    }

    /// Substitutes each variable by the linear form given in its row:
    /// Xᵢ ↦ rows[i][0]·X + rows[i][1]·Y + rows[i][2]·Z.
    fn substitute_linear(&self, rows: &[[R; 3]; 3]) -> TriPoly<R> {
        let lin: Vec<TriPoly<R>> = rows
            .iter()
            .map(|row| {
                TriPoly::from_terms(
                    self.zero.clone(),
                    vec![
                        ((1, 0, 0), row[0].clone()),
                        ((0, 1, 0), row[1].clone()),
                        ((0, 0, 1), row[2].clone()),
                    ],
                )
            })
            .collect();
        let mut out = TriPoly::new(self.zero.clone());
        for (k, c) in &self.terms {
            let term = lin[0].pow(k.0).mul(&lin[1].pow(k.1)).mul(&lin[2].pow(k.2)).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Determinant of the matrix of second partials.
    fn hessian_det(&self) -> TriPoly<R> {
        let h = |i: usize, j: usize| self.partial(i).partial(j);
        let minor = |a: TriPoly<R>, b: TriPoly<R>, c: TriPoly<R>, d: TriPoly<R>| {
            a.mul(&d).add(&b.mul(&c).scale(&self.zero.one_like().neg_ref()))
        };
        let m00 = minor(h(1, 1), h(1, 2), h(2, 1), h(2, 2));
        let m01 = minor(h(1, 0), h(1, 2), h(2, 0), h(2, 2));
        let m02 = minor(h(1, 0), h(1, 1), h(2, 0), h(2, 1));
        h(0, 0)
            .mul(&m00)
            .add(&h(0, 1).mul(&m01).scale(&self.zero.one_like().neg_ref()))
            .add(&h(0, 2).mul(&m02))
    }
}

/// μ as a polynomial over the given field.
fn mu_poly(field: Field) -> MultiPoly {
    MultiPoly::var(RingTag::Fq(field), Var::Mu)
}

/// The Hesse cubic X³ + Y³ + Z³ − μXYZ with coefficients in 𝔽_q[μ].
fn hesse_cubic(field: Field) -> TriPoly<MultiPoly> {
    let ring = RingTag::Fq(field);
    let zero = MultiPoly::zero(ring);
    let one = MultiPoly::one(ring);
    TriPoly::from_terms(
        zero,
        vec![
            ((3, 0, 0), one.clone()),
            ((0, 3, 0), one.clone()),
            ((0, 0, 3), one),
            ((1, 1, 1), mu_poly(field).neg()),
        ],
    )
}

fn const_int(field: Field, n: i64) -> MultiPoly {
    MultiPoly::one(RingTag::Fq(field)).scale_int(n)
}

/// Whether two projective triples are proportional (all 2×2 minors zero).
fn proportional(p: &[MultiPoly; 3], q: &[MultiPoly; 3]) -> bool {
    let minor = |i: usize, j: usize| p[i].mul(&q[j]).sub(&p[j].mul(&q[i]));
    minor(0, 1).is_zero() && minor(0, 2).is_zero() && minor(1, 2).is_zero()
}

/// Whether p is an inflection point of f with tangent direction toward q:
/// the restriction of f to the line through p and q must be a nonzero
/// multiple of t³, i.e. contact of multiplicity exactly 3 at p.
fn triple_contact(f: &TriPoly<MultiPoly>, p: &[MultiPoly; 3], q: &[MultiPoly; 3]) -> bool {
    assert!(!proportional(p, q), "line needs two distinct points");
    let ring = p[0].ring();
    let s = MultiPoly::var(ring, Var::S);
    let t = MultiPoly::var(ring, Var::T);
    let line = [
        s.mul(&p[0]).add(&t.mul(&q[0])),
        s.mul(&p[1]).add(&t.mul(&q[1])),
        s.mul(&p[2]).add(&t.mul(&q[2])),
    ];
    let restricted = f.eval(&line);
    let coeff_st = |sd: u8, td: u8| restricted.coeff_of(Var::S, sd).coeff_of(Var::T, td);
    coeff_st(3, 0).is_zero()
        && coeff_st(2, 1).is_zero()
        && coeff_st(1, 2).is_zero()
        && !coeff_st(0, 3).is_zero()
}

/// Transforms the Hesse cubic over 𝔽₂ to a Weierstrass model over 𝔽₂(μ)
/// by sending the flex [1:1:0] to [0:1:0] and its tangent X + Y + μZ = 0
/// to the line Z = 0. The inverse coordinate change (X, Y, Z) =
/// (X̃+Ỹ, Ỹ, μ⁻¹(X̃+Z̃)) is applied after scaling by μ to stay inside
/// polynomial arithmetic; the final renormalization dividing by the x³
/// coefficient happens in the fraction field.
pub fn hesse_curve_to_weierstrass() -> Result<WeierstrassCurve<Fraction>, HesseError> {
    let field = Field::F2;
    let ring = RingTag::Fq(field);
    let zero = MultiPoly::zero(ring);
    let one = MultiPoly::one(ring);
    let mu = mu_poly(field);

    let f = hesse_cubic(field);
    let flex = [one.clone(), one.clone(), zero.clone()];
    // A second point on the tangent line X + Y + μZ = 0.
    let along = [mu.clone(), zero.clone(), one.clone()];
    if !triple_contact(&f, &flex, &along) {
        return Err(HesseError::NotAFlex);
    }

    // (X, Y, Z) = (μ(X̃+Ỹ), μỸ, X̃+Z̃) — the inverse change scaled by μ.
    let g = f.substitute_linear(&[
        [mu.clone(), mu.clone(), zero.clone()],
        [zero.clone(), mu.clone(), zero.clone()],
        [one.clone(), zero.clone(), one.clone()],
    ]);

    // g must now be q·(Y²Z + h₁XYZ + h₃YZ² + cX³ + e₂X²Z + e₄XZ² + e₆Z³)
    // in characteristic 2, with q the Y²Z coefficient.
    let q = g.coeff((0, 2, 1));
    assert!(!q.is_zero(), "flex did not land on Y²Z");
    let allowed = [
        (0, 2, 1),
        (1, 1, 1),
        (0, 1, 2),
        (3, 0, 0),
        (2, 0, 1),
        (1, 0, 2),
        (0, 0, 3),
    ];
    for (k, c) in &g.terms {
        assert!(
            allowed.contains(k) || c.is_zero(),
            "unexpected monomial {k:?} after the flex change"
        );
    }
    let part = |k: (u8, u8, u8)| Fraction::new(g.coeff(k), q.clone());
    let h1 = part((1, 1, 1));
    let h3 = part((0, 1, 2));
    let c = part((3, 0, 0));
    let e2 = part((2, 0, 1));
    let e4 = part((1, 0, 2));
    let e6 = part((0, 0, 3));

    // y² + h₁xy + h₃y = cx³ + e₂x² + e₄x + e₆ renormalizes by (cx, cy) to
    // a₁ = h₁, a₂ = e₂, a₃ = ch₃, a₄ = ce₄, a₆ = c²e₆.
    Ok(WeierstrassCurve::new(
        h1,
        e2,
        c.mul_ref(&h3),
        c.mul_ref(&e4),
        c.mul_ref(&c).mul_ref(&e6),
    ))
}

/// Outcome of the three-torsion verification over 𝔽₄.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionPointsReport {
    /// [1:0:−1] lies on the cubic for symbolic μ.
    pub first_on_curve: bool,
    /// [−1:ω:0] lies on the cubic for symbolic μ.
    pub second_on_curve: bool,
    /// The Hessian determinant vanishes at both points.
    pub hessian_vanishes_at_both: bool,
    /// In characteristic 2 the Hessian of this cubic is identically zero,
    /// which is why the flex property is certified separately below.
    pub hessian_vanishes_identically: bool,
    /// Both points have multiplicity-3 contact with their tangent lines.
    pub both_are_flexes: bool,
}

impl TorsionPointsReport {
    pub fn passed(&self) -> bool {
        self.first_on_curve
            && self.second_on_curve
            && self.hessian_vanishes_at_both
            && self.both_are_flexes
    }
}

/// Verifies that [1:0:−1] and [−1:ω:0] are three-torsion points of the
/// Hesse cubic over 𝔽₄: both lie on the curve for symbolic μ and both are
/// inflection points (torsion relative to the flex at the identity).
pub fn hesse_torsion_points_check() -> TorsionPointsReport {
    let field = Field::F4;
    let ring = RingTag::Fq(field);
    let zero = MultiPoly::zero(ring);
    let one = MultiPoly::one(ring);
    let mu = mu_poly(field);
    let omega = MultiPoly::constant_fq(field.gen());
    let f = hesse_cubic(field);

    // In characteristic 2, −1 = 1 and −ω = ω.
    let p1 = [one.clone(), zero.clone(), const_int(field, -1)];
    let p2 = [const_int(field, -1), omega.clone(), zero.clone()];
    let first_on_curve = f.eval(&p1).is_zero();
    let second_on_curve = f.eval(&p2).is_zero();

    let hess = f.hessian_det();
    let hessian_vanishes_identically = hess.is_zero();
    let hessian_vanishes_at_both = hess.eval(&p1).is_zero() && hess.eval(&p2).is_zero();

    // Tangent directions computed from the gradients: at p1 the tangent is
    // X + μY + Z = 0, at p2 it is X + ω²Y + μωZ = 0.
    let q1 = [zero.clone(), one.clone(), mu.clone()];
    let q2 = [mu.mul(&omega), zero.clone(), one.clone()];
    let grad = |p: &[MultiPoly; 3]| {
        [f.partial(0).eval(p), f.partial(1).eval(p), f.partial(2).eval(p)]
    };
    let on_tangent = |g: &[MultiPoly; 3], q: &[MultiPoly; 3]| {
        g[0].mul(&q[0]).add(&g[1].mul(&q[1])).add(&g[2].mul(&q[2])).is_zero()
    };
    let g1 = grad(&p1);
    let g2 = grad(&p2);
    let both_are_flexes = on_tangent(&g1, &q1)
        && on_tangent(&g2, &q2)
        && triple_contact(&f, &p1, &q1)
        && triple_contact(&f, &p2, &q2);

    TorsionPointsReport {
        first_on_curve,
        second_on_curve,
        hessian_vanishes_at_both,
        hessian_vanishes_identically,
        both_are_flexes,
    }
}
