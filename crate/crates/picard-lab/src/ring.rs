//! A minimal commutative-ring interface shared by curve and transform code.
//!
//! The same covariance and substitution machinery runs over ℤ, a finite
//! field, the symbolic polynomial ring, or a fraction ring. Because some of
//! those carry runtime context (a field tag, a base-ring tag), constants are
//! produced "like" an existing element rather than from thin air.

use std::fmt;

use crate::algebra::field::FieldElement;
use crate::algebra::multipoly::{MultiPoly, RingTag};

/// Commutative ring operations, parameterized by a sample element so that
/// runtime-tagged rings can produce constants of the right kind.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    /// The additive identity in the same ring as `self`.
    fn zero_like(&self) -> Self;
    /// The multiplicative identity in the same ring as `self`.
    fn one_like(&self) -> Self;
    /// The image of an integer in the same ring as `self`.
    #[allow(clippy::wrong_self_convention)] // self is the ring witness
    fn from_int_like(&self, n: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Ring product. For the symbolic polynomial ring this includes the
    /// u·v → 1 rewrite, so generic consumers always work in the
    /// localization; the free product stays available as an inherent method.
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    /// Small non-negative power.
    fn pow_u(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Convenience: n·x for small integers (covariance formulas use 2, 3, …).
    fn scale_int(&self, n: i64) -> Self {
        self.mul_ref(&self.from_int_like(n))
    }
}

impl Ring for i64 {
    fn zero_like(&self) -> i64 {
        0
    }
    fn one_like(&self) -> i64 {
        1
    }
    fn from_int_like(&self, n: i64) -> i64 {
        n
    }
    fn add_ref(&self, rhs: &i64) -> i64 {
        self + rhs
    }
    fn neg_ref(&self) -> i64 {
        -self
    }
    fn mul_ref(&self, rhs: &i64) -> i64 {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Ring for FieldElement {
    fn zero_like(&self) -> FieldElement {
        self.field().zero()
    }
    fn one_like(&self) -> FieldElement {
        self.field().one()
    }
    fn from_int_like(&self, n: i64) -> FieldElement {
        self.field().from_int(n)
    }
    fn add_ref(&self, rhs: &FieldElement) -> FieldElement {
        *self + *rhs
    }
    fn neg_ref(&self) -> FieldElement {
        -*self
    }
    fn mul_ref(&self, rhs: &FieldElement) -> FieldElement {
        *self * *rhs
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(*self)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> MultiPoly {
        MultiPoly::zero(self.ring())
    }
    fn one_like(&self) -> MultiPoly {
        MultiPoly::one(self.ring())
    }
    fn from_int_like(&self, n: i64) -> MultiPoly {
        MultiPoly::constant_int(self.ring(), n)
    }
    fn add_ref(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(rhs)
    }
    fn neg_ref(&self) -> MultiPoly {
        self.neg()
    }
    /// Free product followed by the explicit u·v → 1 rewrite: generic
    /// consumers of `Ring` work in the localization where u is a unit.
    fn mul_ref(&self, rhs: &MultiPoly) -> MultiPoly {
        self.mul(rhs).reduce_uv()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

/// A fraction num/den of polynomials with nonzero denominator. Equality is
/// decided by cross-multiplication, so no gcd normalization is needed; the
/// denominators that actually occur are powers of μ and of μ³ − 1.
#[derive(Debug, Clone)]
pub struct Fraction {
    num: MultiPoly,
    den: MultiPoly,
}

impl Fraction {
    /// Builds num/den; panics on a zero denominator (callers construct
    /// denominators from known-nonzero polynomials). Zero numerators reset
    /// the denominator to 1 and shared monomial factors are cancelled —
    /// enough normalization to keep exponents bounded through long
    /// invariant computations without needing polynomial gcds.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Fraction {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.ring(), den.ring(), "fraction parts over different rings");
        if num.is_zero() {
            let one = MultiPoly::one(den.ring());
            return Fraction { num, den: one };
        }
        let cn = num.monomial_content();
        let cd = den.monomial_content();
        let mut shared = [0u8; 12];
        let mut trivial = true;
        for i in 0..12 {
            shared[i] = cn[i].min(cd[i]);
            trivial &= shared[i] == 0;
        }
        if trivial {
            Fraction { num, den }
        } else {
            Fraction {
                num: num.divide_by_monomial(&shared),
                den: den.divide_by_monomial(&shared),
            }
        }
    }

    /// The polynomial `p` viewed as p/1.
    pub fn from_poly(p: MultiPoly) -> Fraction {
        let one = MultiPoly::one(p.ring());
        Fraction { num: p, den: one }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn ring(&self) -> RingTag {
        self.num.ring()
    }

    /// The reciprocal; errors on zero.
    pub fn inv(&self) -> Option<Fraction> {
        if self.num.is_zero() {
            return None;
        }
        Some(Fraction { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, rhs: &Fraction) -> Option<Fraction> {
        Some(self.mul_ref(&rhs.inv()?))
    }
}

impl PartialEq for Fraction {
    /// a/b = c/d ⟺ a·d = c·b (valid over an integral domain).
    fn eq(&self, other: &Fraction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for Fraction {
    fn zero_like(&self) -> Fraction {
        Fraction::from_poly(MultiPoly::zero(self.ring()))
    }
    fn one_like(&self) -> Fraction {
        Fraction::from_poly(MultiPoly::one(self.ring()))
    }
    fn from_int_like(&self, n: i64) -> Fraction {
        Fraction::from_poly(MultiPoly::constant_int(self.ring(), n))
    }
    fn add_ref(&self, rhs: &Fraction) -> Fraction {
        Fraction::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn neg_ref(&self) -> Fraction {
        Fraction { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul_ref(&self, rhs: &Fraction) -> Fraction {
        Fraction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MultiPoly::one(self.den.ring()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
