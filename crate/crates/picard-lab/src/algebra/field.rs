//! Arithmetic in the small finite fields 𝔽_{p^k} used throughout the crate.
//!
//! Supported parameters are p ∈ {2, 3, 5, 7, 13} and k ∈ {1, 2}, so every
//! field has at most 169 elements and every law can be checked by exhaustive
//! enumeration. Degree-2 fields use pinned defining polynomials (see
//! [`Field::defining_poly`]), so elements have a canonical coordinate form
//! c0 + c1·w and equality is plain coordinate equality.
//!
//! All arithmetic is table-driven: the first operation in a given field
//! builds its addition/multiplication/inverse tables once, after which every
//! operation is a lookup. This keeps the row reductions in the cocycle
//! solver cheap without any special-casing.

use std::fmt;
use std::sync::OnceLock;

/// Errors arising from field construction or division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The requested (p, k) pair is outside the supported set.
    UnsupportedParameters { p: u8, k: u8 },
    /// Multiplicative inverse of zero was requested.
    ZeroInverse,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::UnsupportedParameters { p, k } => {
                write!(f, "unsupported field parameters p={p}, k={k}")
            }
            FieldError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
        }
    }
}

impl std::error::Error for FieldError {}

/// A field descriptor: characteristic `p` and extension degree `k`.
///
/// `Field` is a lightweight copyable tag; two elements interoperate only if
/// their tags are equal. The degree-2 generator is always printed `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    p: u8,
    k: u8,
}

/// The ten supported (p, k) pairs, in table-registry order.
const SUPPORTED: [(u8, u8); 10] = [
    (2, 1),
    (3, 1),
    (5, 1),
    (7, 1),
    (13, 1),
    (2, 2),
    (3, 2),
    (5, 2),
    (7, 2),
    (13, 2),
];

impl Field {
    pub const F2: Field = Field { p: 2, k: 1 };
    pub const F3: Field = Field { p: 3, k: 1 };
    pub const F4: Field = Field { p: 2, k: 2 };
    pub const F5: Field = Field { p: 5, k: 1 };
    pub const F7: Field = Field { p: 7, k: 1 };
    pub const F9: Field = Field { p: 3, k: 2 };
    pub const F13: Field = Field { p: 13, k: 1 };

    /// Builds a field descriptor, rejecting parameters outside the supported
    /// set.
    pub fn new(p: u8, k: u8) -> Result<Field, FieldError> {
        if SUPPORTED.contains(&(p, k)) {
            Ok(Field { p, k })
        } else {
            Err(FieldError::UnsupportedParameters { p, k })
        }
    }

    /// The characteristic p.
    pub fn characteristic(self) -> u8 {
        self.p
    }

    /// The extension degree k.
    pub fn degree(self) -> u8 {
        self.k
    }

    /// The number of elements p^k.
    pub fn order(self) -> u16 {
        let p = self.p as u16;
        if self.k == 1 { p } else { p * p }
    }

    /// Coefficients (c1, c0) of the pinned defining polynomial w² + c1·w + c0
    /// for the degree-2 extension: w² + w + 1 over 𝔽₂, w² + 1 over 𝔽₃, and
    /// w² − n for the smallest quadratic non-residue n over 𝔽₅, 𝔽₇, 𝔽₁₃.
    fn defining_poly(self) -> (u8, u8) {
        debug_assert_eq!(self.k, 2);
        match self.p {
            2 => (1, 1),
            3 => (0, 1),
            5 => (0, 3),  // w² = 2
            7 => (0, 4),  // w² = 3
            13 => (0, 11), // w² = 2
            _ => unreachable!("unsupported degree-2 field"),
        }
    }

    /// The element with coordinates c0 + c1·w (inputs reduced mod p).
    /// For prime fields c1 must reduce to zero.
    pub fn element(self, c0: i64, c1: i64) -> FieldElement {
        let p = self.p as i64;
        let r0 = c0.rem_euclid(p) as u8;
        let r1 = c1.rem_euclid(p) as u8;
        assert!(
            self.k == 2 || r1 == 0,
            "degree-1 field has no generator component"
        );
        FieldElement {
            field: self,
            code: r0 + r1 * self.p,
        }
    }

    /// The image of an integer under ℤ → 𝔽_{p^k}.
    pub fn from_int(self, n: i64) -> FieldElement {
        self.element(n, 0)
    }

    pub fn zero(self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_int(1)
    }

    /// The degree-2 generator w. Panics on prime fields.
    pub fn gen(self) -> FieldElement {
        assert_eq!(self.k, 2, "prime field has no extension generator");
        self.element(0, 1)
    }

    /// Iterates over all p^k elements in code order (0, 1, …, p−1, w, 1+w, …).
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(move |code| FieldElement {
            field: self,
            code: code as u8,
        })
    }

    /// The element with the given table code. Internal: codes are an
    /// implementation detail of the table registry.
    #[allow(clippy::wrong_self_convention)] // the field is the factory, like from_int
    pub(crate) fn from_code(self, code: u8) -> FieldElement {
        debug_assert!((code as u16) < self.order());
        FieldElement { field: self, code }
    }

    fn registry_index(self) -> usize {
        SUPPORTED
            .iter()
            .position(|&(p, k)| (p, k) == (self.p, self.k))
            .expect("field constructed through validated paths")
    }

    pub(crate) fn tables(self) -> &'static FieldTables {
        static REGISTRY: [OnceLock<FieldTables>; 10] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        REGISTRY[self.registry_index()].get_or_init(|| FieldTables::build(self))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.order())
    }
}

/// Precomputed operation tables for one field; built once on first use.
pub(crate) struct FieldTables {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    /// inv[0] is unused filler; division checks for zero first.
    inv: Vec<u8>,
}

impl FieldTables {
    fn build(field: Field) -> FieldTables {
        let q = field.order() as usize;
        let p = field.p as u16;
        let coords = |code: usize| -> (u16, u16) { (code as u16 % p, code as u16 / p) };
        let code = |c0: u16, c1: u16| -> u8 { (c0 % p + (c1 % p) * p) as u8 };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let (a0, a1) = coords(a);
            neg[a] = code(p - a0 % p, p - a1 % p);
            for b in 0..q {
                let (b0, b1) = coords(b);
                add[a * q + b] = code(a0 + b0, a1 + b1);
                // (a0 + a1 w)(b0 + b1 w) with w² = −c1 w − c0.
                let (c1, c0) = if field.k == 2 {
                    let (d1, d0) = field.defining_poly();
                    (d1 as u16, d0 as u16)
                } else {
                    (0, 0)
                };
                let w2_coeff = a1 * b1 % p; // multiplies w²
                let lin = (a0 * b1 + a1 * b0) % p;
                let constant = (a0 * b0 + w2_coeff * (p - c0 % p)) % p;
                let linear = (lin + w2_coeff * (p - c1 % p)) % p;
                mul[a * q + b] = code(constant, linear);
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            let found = (1..q).find(|&b| mul[a * q + b] == 1);
            inv[a] = found.expect("every nonzero element of a finite field is invertible") as u8;
        }
        FieldTables { q, add, mul, neg, inv }
    }

    #[inline]
    pub(crate) fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub(crate) fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub(crate) fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub(crate) fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    #[inline]
    pub(crate) fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
}

/// An element of one of the supported finite fields.
///
/// Elements are `Copy` and carry their field tag; binary operations panic if
/// the tags differ (mixing fields is a caller bug, not a data condition).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: Field,
    code: u8,
}

impl FieldElement {
    pub fn field(self) -> Field {
        self.field
    }

    /// Coordinate c0 of c0 + c1·w.
    pub fn c0(self) -> u8 {
        self.code % self.field.p
    }

    /// Coordinate c1 of c0 + c1·w (always 0 in prime fields).
    pub fn c1(self) -> u8 {
        self.code / self.field.p
    }

    /// The table code c0 + p·c1; stable, used as a canonical sort key.
    pub(crate) fn code(self) -> u8 {
        self.code
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }

    pub fn is_one(self) -> bool {
        self.code == 1
    }

    fn check_same_field(self, other: FieldElement) {
        assert_eq!(
            self.field, other.field,
            "field elements from different fields"
        );
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(FieldElement {
            field: self.field,
            code: self.field.tables().inv(self.code),
        })
    }

    /// Raises to an integer power; negative exponents invert first.
    /// Panics if the base is zero and the exponent negative.
    pub fn pow(self, e: i64) -> FieldElement {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self
        };
        let mut acc = self.field.one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base;
        }
        acc
    }

    /// The p-power Frobenius x ↦ x^p (ω-conjugation on 𝔽₄, identity on
    /// prime fields).
    pub fn frobenius(self) -> FieldElement {
        self.pow(self.field.p as i64)
    }

    /// Multiplicative order; panics on zero.
    pub fn multiplicative_order(self) -> u32 {
        assert!(!self.is_zero(), "zero has no multiplicative order");
        let mut acc = self;
        let mut n = 1;
        while !acc.is_one() {
            acc = acc * self;
            n += 1;
        }
        n
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement {
            field: self.field,
            code: self.field.tables().add(self.code, rhs.code),
        }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement {
            field: self.field,
            code: self.field.tables().sub(self.code, rhs.code),
        }
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement {
            field: self.field,
            code: self.field.tables().mul(self.code, rhs.code),
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field,
            code: self.field.tables().neg(self.code),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c0, c1) = (self.c0(), self.c1());
        match (c0, c1) {
            (_, 0) => write!(f, "{c0}"),
            (0, 1) => write!(f, "w"),
            (0, _) => write!(f, "{c1}w"),
            (_, 1) => write!(f, "w+{c0}"),
            (_, _) => write!(f, "{c1}w+{c0}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The seven fields named by the check suites.
    fn named_fields() -> Vec<Field> {
        vec![
            Field::F2,
            Field::F3,
            Field::F4,
            Field::F5,
            Field::F7,
            Field::F9,
            Field::F13,
        ]
    }

    /// All ten supported fields, including the unnamed degree-2 ones.
    fn all_fields() -> Vec<Field> {
        SUPPORTED.iter().map(|&(p, k)| Field::new(p, k).unwrap()).collect()
    }

    #[test]
    fn rejects_unsupported_parameters() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(11, 1).is_err());
        assert!(Field::new(2, 3).is_err());
        assert!(Field::new(0, 1).is_err());
    }

    #[test]
    fn orders_match_parameters() {
        assert_eq!(Field::F2.order(), 2);
        assert_eq!(Field::F4.order(), 4);
        assert_eq!(Field::F9.order(), 9);
        assert_eq!(Field::F13.order(), 13);
        assert_eq!(Field::new(13, 2).unwrap().order(), 169);
    }

    #[test]
    fn additive_group_axioms_exhaustive() {
        for f in all_fields() {
            let zero = f.zero();
            for a in f.elements() {
                assert_eq!(a + zero, a);
                assert_eq!(a + (-a), zero);
                for b in f.elements() {
                    assert_eq!(a + b, b + a);
                    for c in f.elements() {
                        assert_eq!((a + b) + c, a + (b + c));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_axioms_exhaustive() {
        for f in all_fields() {
            let one = f.one();
            for a in f.elements() {
                assert_eq!(a * one, a);
                for b in f.elements() {
                    assert_eq!(a * b, b * a);
                    for c in f.elements() {
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_exhaustive() {
        for f in all_fields() {
            assert_eq!(f.zero().inv(), Err(FieldError::ZeroInverse));
            for a in f.elements().filter(|a| !a.is_zero()) {
                assert_eq!(a * a.inv().unwrap(), f.one());
            }
        }
    }

    #[test]
    fn defining_polynomials_hold() {
        // w² + w + 1 = 0 in F4.
        let w = Field::F4.gen();
        assert_eq!(w * w + w + Field::F4.one(), Field::F4.zero());
        // w² + 1 = 0 in F9.
        let i = Field::F9.gen();
        assert_eq!(i * i + Field::F9.one(), Field::F9.zero());
        // w² = 2 in F25 and F169, w² = 3 in F49.
        let w25 = Field::new(5, 2).unwrap().gen();
        assert_eq!(w25 * w25, Field::new(5, 2).unwrap().from_int(2));
        let w49 = Field::new(7, 2).unwrap().gen();
        assert_eq!(w49 * w49, Field::new(7, 2).unwrap().from_int(3));
        let w169 = Field::new(13, 2).unwrap().gen();
        assert_eq!(w169 * w169, Field::new(13, 2).unwrap().from_int(2));
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        for f in named_fields() {
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
                    assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
                }
                // Frobenius squared is the identity on degree ≤ 2 fields.
                assert_eq!(a.frobenius().frobenius(), a);
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let a = Field::F13.from_int(2);
        assert_eq!(a.pow(12), Field::F13.one());
        assert_eq!(a.pow(-1), a.inv().unwrap());
        assert_eq!(a.pow(-3) * a.pow(3), Field::F13.one());
        assert_eq!(a.pow(0), Field::F13.one());
    }

    #[test]
    fn from_int_reduces_mod_p() {
        assert_eq!(Field::F7.from_int(-1), Field::F7.from_int(6));
        assert_eq!(Field::F7.from_int(7), Field::F7.zero());
        assert_eq!(Field::F4.from_int(3), Field::F4.one());
    }

    #[test]
    fn multiplicative_orders() {
        // 5² = −1 in F13, so 5 has order 4.
        assert_eq!(Field::F13.from_int(5).multiplicative_order(), 4);
        // 3 generates F7^×.
        assert_eq!(Field::F7.from_int(3).multiplicative_order(), 6);
        // ω has order 3 in F4.
        assert_eq!(Field::F4.gen().multiplicative_order(), 3);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Field::F4.gen().to_string(), "w");
        assert_eq!((Field::F4.gen() + Field::F4.one()).to_string(), "w+1");
        assert_eq!(Field::F9.element(2, 2).to_string(), "2w+2");
        assert_eq!(Field::F13.from_int(11).to_string(), "11");
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = Field::F7.one() + Field::F13.one();
    }
}
