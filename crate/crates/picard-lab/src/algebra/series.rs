//! Truncated power series k[μ]/(μ^N) over a small finite field.
//!
//! A series stores exactly N coefficients (its precision); every operation
//! silently truncates back to precision N, mirroring arithmetic in the
//! quotient ring. Binary operations panic when fields or precisions differ;
//! inversion and substitution report data-dependent failures as errors.

use std::fmt;

use super::field::{Field, FieldElement};

/// Errors from series operations with data-dependent failure modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion requires a unit (nonzero constant term).
    NotAUnit,
    /// Substitution requires the inner series to have valuation ≥ 1.
    ValuationTooSmall,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NotAUnit => write!(f, "series has zero constant term, not a unit"),
            SeriesError::ValuationTooSmall => {
                write!(f, "substitution requires valuation at least 1")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// An element of k[μ]/(μ^N): coefficients c\[0\] + c\[1\]μ + … + c\[N−1\]μ^{N−1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl TruncatedSeries {
    /// The zero series at precision `n` (n ≥ 1).
    pub fn zero(field: Field, n: usize) -> TruncatedSeries {
        assert!(n >= 1, "precision must be at least 1");
        TruncatedSeries { field, coeffs: vec![field.zero(); n] }
    }

    pub fn one(field: Field, n: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(field, 0, n)
    }

    /// The truncation of μ to precision `n` (the zero series when n = 1).
    pub fn mu(field: Field, n: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(field, 1, n)
    }

    /// The truncation of μ^j to precision `n`.
    pub fn monomial(field: Field, j: usize, n: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(field, n);
        if j < n {
            s.coeffs[j] = field.one();
        }
        s
    }

    /// Builds a series from integer coefficients (reduced into the field),
    /// truncating or zero-padding to precision `n`.
    pub fn from_ints(field: Field, coeffs: &[i64], n: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(field, n);
        for (i, &c) in coeffs.iter().take(n).enumerate() {
            s.coeffs[i] = field.from_int(c);
        }
        s
    }

    /// Builds a series from field coefficients, truncating or padding to `n`.
    pub fn from_coeffs(field: Field, coeffs: &[FieldElement], n: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(field, n);
        for (i, &c) in coeffs.iter().take(n).enumerate() {
            assert_eq!(c.field(), field, "coefficient outside the base field");
            s.coeffs[i] = c;
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The precision N.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of μ^i (i < N).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Replaces the coefficient of μ^i.
    pub fn with_coeff(mut self, i: usize, c: FieldElement) -> TruncatedSeries {
        assert_eq!(c.field(), self.field);
        self.coeffs[i] = c;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The index of the first nonzero coefficient; N for the zero series.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// True when the constant term is nonzero.
    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    fn check_compatible(&self, other: &TruncatedSeries) {
        assert_eq!(self.field, other.field, "series over different fields");
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "series at different precisions"
        );
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs);
        TruncatedSeries {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs);
        TruncatedSeries {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&a| -a).collect(),
        }
    }

    /// Product in k[μ]/(μ^N): plain convolution with silent truncation.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_compatible(rhs);
        let n = self.coeffs.len();
        let mut out = TruncatedSeries::zero(self.field, n);
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out.coeffs[i + j] = out.coeffs[i + j] + self.coeffs[i] * rhs.coeffs[j];
            }
        }
        out
    }

    pub fn scale(&self, c: FieldElement) -> TruncatedSeries {
        assert_eq!(c.field(), self.field);
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.field, self.coeffs.len());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse of a unit, via the standard recurrence
    /// b₀ = a₀⁻¹, b_n = −a₀⁻¹ Σ_{i=1..n} a_i b_{n−i}.
    pub fn invert(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.is_unit() {
            return Err(SeriesError::NotAUnit);
        }
        let n = self.coeffs.len();
        let a0_inv = self.coeffs[0].inv().expect("unit constant term");
        let mut b = TruncatedSeries::zero(self.field, n);
        b.coeffs[0] = a0_inv;
        for m in 1..n {
            let mut acc = self.field.zero();
            for i in 1..=m {
                acc = acc + self.coeffs[i] * b.coeffs[m - i];
            }
            b.coeffs[m] = -(a0_inv * acc);
        }
        Ok(b)
    }

    /// Composition f(g(μ)) truncated to precision N; requires val(g) ≥ 1 so
    /// the result is well defined in the quotient. Evaluated by Horner's
    /// scheme from the top coefficient down.
    pub fn substitute(&self, g: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_compatible(g);
        if g.valuation() < 1 {
            return Err(SeriesError::ValuationTooSmall);
        }
        let n = self.coeffs.len();
        let mut acc = TruncatedSeries::zero(self.field, n);
        for i in (0..n).rev() {
            acc = acc.mul(g);
            acc.coeffs[0] = acc.coeffs[0] + self.coeffs[i];
        }
        Ok(acc)
    }

    /// Applies the p-power Frobenius to every coefficient.
    pub fn frobenius_coeffs(&self) -> TruncatedSeries {
        TruncatedSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c.frobenius()).collect(),
        }
    }

    /// Canonical byte key (coefficient codes); used to identify substitution
    /// maps when closing group actions.
    pub(crate) fn key(&self) -> Vec<u8> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            let needs_parens = cs.contains('+') || cs.contains('w');
            if i == 0 {
                write!(f, "{cs}")?;
            } else {
                if !c.is_one() {
                    if needs_parens {
                        write!(f, "({cs})*")?;
                    } else {
                        write!(f, "{cs}*")?;
                    }
                }
                if i == 1 {
                    write!(f, "mu")?;
                } else {
                    write!(f, "mu^{i}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(mu^{})", self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_inverts_one_minus_mu() {
        // (1 + μ + μ² + …)(1 − μ) = 1 over F3 at N = 8.
        let f = Field::F3;
        let geom = TruncatedSeries::from_ints(f, &[1, 1, 1, 1, 1, 1, 1, 1], 8);
        let one_minus_mu = TruncatedSeries::from_ints(f, &[1, -1], 8);
        assert_eq!(geom.mul(&one_minus_mu), TruncatedSeries::one(f, 8));
        // And invert() reproduces the geometric series.
        assert_eq!(one_minus_mu.invert().unwrap(), geom);
    }

    #[test]
    fn invert_over_f2() {
        // (1 − μ)⁻¹ = 1 + μ + μ² + … over F2 at N = 6.
        let f = Field::F2;
        let s = TruncatedSeries::from_ints(f, &[1, 1], 6);
        assert_eq!(
            s.invert().unwrap(),
            TruncatedSeries::from_ints(f, &[1, 1, 1, 1, 1, 1], 6)
        );
    }

    #[test]
    fn invert_requires_unit() {
        let s = TruncatedSeries::mu(Field::F3, 4);
        assert_eq!(s.invert(), Err(SeriesError::NotAUnit));
    }

    #[test]
    fn invert_roundtrip_exhaustive_small() {
        // Every unit of F3[μ]/μ³ satisfies s·s⁻¹ = 1.
        let f = Field::F3;
        for c0 in 1..3 {
            for c1 in 0..3 {
                for c2 in 0..3 {
                    let s = TruncatedSeries::from_ints(f, &[c0, c1, c2], 3);
                    assert_eq!(s.mul(&s.invert().unwrap()), TruncatedSeries::one(f, 3));
                }
            }
        }
    }

    #[test]
    fn substitute_identity_fixes_everything() {
        let f = Field::F7;
        let mu = TruncatedSeries::mu(f, 5);
        for a in 0..7 {
            let s = TruncatedSeries::from_ints(f, &[3, a, 1, 0, 2], 5);
            assert_eq!(s.substitute(&mu).unwrap(), s);
        }
    }

    #[test]
    fn substitute_into_geometric_shift() {
        // f = μ, g = μ(1 + μ + μ² + …) over F3 at N = 5 gives μ + μ² + μ³ + μ⁴.
        let f = Field::F3;
        let geom = TruncatedSeries::from_ints(f, &[1, 1, 1, 1, 1], 5);
        let g = TruncatedSeries::mu(f, 5).mul(&geom);
        let out = TruncatedSeries::mu(f, 5).substitute(&g).unwrap();
        assert_eq!(out, TruncatedSeries::from_ints(f, &[0, 1, 1, 1, 1], 5));
    }

    #[test]
    fn substitute_requires_positive_valuation() {
        let f = Field::F3;
        let s = TruncatedSeries::mu(f, 4);
        let g = TruncatedSeries::one(f, 4);
        assert_eq!(s.substitute(&g), Err(SeriesError::ValuationTooSmall));
    }

    #[test]
    fn substitution_is_associative() {
        // (f∘g)∘h = f∘(g∘h) for substitution series.
        let f = Field::F4;
        let w = Field::F4.gen();
        let n = 9;
        let a = TruncatedSeries::zero(f, n)
            .with_coeff(1, w)
            .with_coeff(3, f.one());
        let b = TruncatedSeries::zero(f, n)
            .with_coeff(1, f.one())
            .with_coeff(2, w);
        let c = TruncatedSeries::zero(f, n)
            .with_coeff(1, w + f.one())
            .with_coeff(4, w);
        let lhs = a.substitute(&b).unwrap().substitute(&c).unwrap();
        let rhs = a.substitute(&b.substitute(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn valuation_of_products() {
        let f = Field::F5;
        let a = TruncatedSeries::monomial(f, 2, 6);
        let b = TruncatedSeries::monomial(f, 3, 6);
        assert_eq!(a.valuation(), 2);
        assert_eq!(a.mul(&b).valuation(), 5);
        // Truncation caps the valuation at N.
        assert_eq!(a.mul(&a).mul(&a).valuation(), 6);
        assert_eq!(TruncatedSeries::zero(f, 6).valuation(), 6);
    }

    #[test]
    fn truncation_is_silent() {
        // μ³·μ³ = 0 at N = 5.
        let f = Field::F2;
        let s = TruncatedSeries::monomial(f, 3, 5);
        assert!(s.mul(&s).is_zero());
    }

    #[test]
    #[should_panic(expected = "different precisions")]
    fn precision_mismatch_panics() {
        let _ = TruncatedSeries::one(Field::F3, 4).add(&TruncatedSeries::one(Field::F3, 5));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn field_mismatch_panics() {
        let _ = TruncatedSeries::one(Field::F3, 4).add(&TruncatedSeries::one(Field::F5, 4));
    }

    #[test]
    fn display_format() {
        let s = TruncatedSeries::from_ints(Field::F3, &[1, 0, 2], 4);
        assert_eq!(s.to_string(), "1 + 2*mu^2 + O(mu^4)");
    }
}
