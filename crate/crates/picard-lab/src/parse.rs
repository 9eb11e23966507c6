//! Total plain-text parsers for the CLI's curve and transform formats.
//!
//! Curves read as `a1,a2,a3,a4,a6@ring` and coordinate changes as
//! `u,r,s,t@ring`, with ring ∈ {Z, F2, F3, F4, F5, F7, F9, F13, sym}.
//! Over a field, an element is a signed sum of terms `n`, `w`, or `nw`,
//! where `w` is the extension-field generator (𝔽₄ and 𝔽₉ only). The
//! symbolic ring accepts one integer or one of the named indeterminates
//! a1, a2, a3, a4, a6, u, r, s, t per slot. Every function is total:
//! arbitrary input yields `Ok` or a [`ParseError`], never a panic.

use std::error::Error;
use std::fmt;

use crate::algebra::field::{Field, FieldElement};
use crate::algebra::multipoly::{MultiPoly, RingTag, Var};
use crate::transform::Transform;
use crate::weierstrass::WeierstrassCurve;

/// Coefficient domain named after the `@` in a spec string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingSpec {
    /// The integers.
    Int,
    /// One of the supported finite fields.
    Fq(Field),
    /// The symbolic polynomial ring over ℤ.
    Sym,
}

/// A curve in whichever ring its spec string named.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedCurve {
    Int(WeierstrassCurve<i64>),
    Fq(WeierstrassCurve<FieldElement>),
    Sym(WeierstrassCurve<MultiPoly>),
}

/// A coordinate change in whichever ring its spec string named.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedTransform {
    Int(Transform<i64>),
    Fq(Transform<FieldElement>),
    Sym(Transform<MultiPoly>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// The spec has no `@ring` suffix.
    MissingRing,
    UnknownRing(String),
    WrongArity { expected: usize, got: usize },
    BadElement(String),
    /// The scale slot must be invertible: nonzero in a field, ±1 over ℤ,
    /// and literally `u` or ±1 symbolically.
    NonUnitScale(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingRing => {
                write!(f, "missing '@ring' suffix (e.g. '0,0,0,1,0@Z')")
            }
            ParseError::UnknownRing(r) => write!(
                f,
                "unknown ring '{r}' (expected Z, F2, F3, F4, F5, F7, F9, F13, or sym)"
            ),
            ParseError::WrongArity { expected, got } => {
                write!(f, "expected {expected} comma-separated entries, got {got}")
            }
            ParseError::BadElement(e) => write!(f, "unreadable element '{e}'"),
            ParseError::NonUnitScale(u) => write!(f, "scale entry '{u}' is not a unit"),
        }
    }
}

impl Error for ParseError {}

/// Reads a ring name (the part after `@`).
pub fn parse_ring(text: &str) -> Result<RingSpec, ParseError> {
    match text.trim() {
        "Z" => Ok(RingSpec::Int),
        "sym" => Ok(RingSpec::Sym),
        "F2" => Ok(RingSpec::Fq(Field::F2)),
        "F3" => Ok(RingSpec::Fq(Field::F3)),
        "F4" => Ok(RingSpec::Fq(Field::F4)),
        "F5" => Ok(RingSpec::Fq(Field::F5)),
        "F7" => Ok(RingSpec::Fq(Field::F7)),
        "F9" => Ok(RingSpec::Fq(Field::F9)),
        "F13" => Ok(RingSpec::Fq(Field::F13)),
        other => Err(ParseError::UnknownRing(other.to_string())),
    }
}

/// Splits `head@ring` and checks the comma arity of the head.
fn split_spec(text: &str, expected: usize) -> Result<(Vec<&str>, RingSpec), ParseError> {
    let mut halves = text.splitn(2, '@');
    let head = halves.next().unwrap_or("");
    let ring = parse_ring(halves.next().ok_or(ParseError::MissingRing)?)?;
    let parts: Vec<&str> = head.split(',').collect();
    if parts.len() != expected {
        return Err(ParseError::WrongArity { expected, got: parts.len() });
    }
    Ok((parts, ring))
}

fn parse_i64(text: &str) -> Result<i64, ParseError> {
    text.trim().parse().map_err(|_| ParseError::BadElement(text.to_string()))
}

/// One signed term of a field element: `n`, `w`, or `nw`.
fn parse_field_term(field: Field, term: &str) -> Result<FieldElement, ParseError> {
    let bad = || ParseError::BadElement(term.to_string());
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, term.strip_prefix('+').unwrap_or(term)),
    };
    let (digits, has_gen) = match body.strip_suffix('w') {
        Some(head) => (head, true),
        None => (body, false),
    };
    let scalar: i64 = if digits.is_empty() {
        if has_gen {
            1
        } else {
            return Err(bad());
        }
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let mut value = field.from_int(sign * scalar);
    if has_gen {
        if field.characteristic() as u16 == field.order() {
            return Err(bad());
        }
        value = value * field.gen();
    }
    Ok(value)
}

/// A field element as a signed sum of terms, e.g. `1+2w` or `-w`.
fn parse_field_element(field: Field, text: &str) -> Result<FieldElement, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError::BadElement(text.to_string()));
    }
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i != 0 {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);
    let mut total = field.zero();
    for term in &terms {
        total = total + parse_field_term(field, term)?;
    }
    Ok(total)
}

/// A symbolic slot: an integer constant or a named indeterminate.
fn parse_sym_element(text: &str) -> Result<MultiPoly, ParseError> {
    let var = |v| Ok(MultiPoly::var(RingTag::Int, v));
    match text.trim() {
        "a1" => var(Var::A1),
        "a2" => var(Var::A2),
        "a3" => var(Var::A3),
        "a4" => var(Var::A4),
        "a6" => var(Var::A6),
        "u" => var(Var::U),
        "r" => var(Var::R),
        "s" => var(Var::S),
        "t" => var(Var::T),
        other => Ok(MultiPoly::constant_int(RingTag::Int, parse_i64(other)?)),
    }
}

/// Reads a curve spec `a1,a2,a3,a4,a6@ring`.
pub fn parse_curve(text: &str) -> Result<ParsedCurve, ParseError> {
    let (parts, ring) = split_spec(text, 5)?;
    match ring {
        RingSpec::Int => {
            let mut a = [0i64; 5];
            for (slot, part) in a.iter_mut().zip(&parts) {
                *slot = parse_i64(part)?;
            }
            Ok(ParsedCurve::Int(WeierstrassCurve::new(a[0], a[1], a[2], a[3], a[4])))
        }
        RingSpec::Fq(field) => {
            let mut a = [field.zero(); 5];
            for (slot, part) in a.iter_mut().zip(&parts) {
                *slot = parse_field_element(field, part)?;
            }
            Ok(ParsedCurve::Fq(WeierstrassCurve::new(a[0], a[1], a[2], a[3], a[4])))
        }
        RingSpec::Sym => {
            let mut a = Vec::with_capacity(5);
            for part in &parts {
                a.push(parse_sym_element(part)?);
            }
            let a6 = a.pop().unwrap();
            let a4 = a.pop().unwrap();
            let a3 = a.pop().unwrap();
            let a2 = a.pop().unwrap();
            let a1 = a.pop().unwrap();
            Ok(ParsedCurve::Sym(WeierstrassCurve::new(a1, a2, a3, a4, a6)))
        }
    }
}

/// Reads a transform spec `u,r,s,t@ring`, rejecting non-invertible scales.
pub fn parse_transform(text: &str) -> Result<ParsedTransform, ParseError> {
    let (parts, ring) = split_spec(text, 4)?;
    match ring {
        RingSpec::Int => {
            let u = parse_i64(parts[0])?;
            if u != 1 && u != -1 {
                return Err(ParseError::NonUnitScale(parts[0].trim().to_string()));
            }
            let r = parse_i64(parts[1])?;
            let s = parse_i64(parts[2])?;
            let t = parse_i64(parts[3])?;
            Ok(ParsedTransform::Int(Transform::new(u, u, r, s, t)))
        }
        RingSpec::Fq(field) => {
            let u = parse_field_element(field, parts[0])?;
            let r = parse_field_element(field, parts[1])?;
            let s = parse_field_element(field, parts[2])?;
            let t = parse_field_element(field, parts[3])?;
            Transform::from_elements(u, r, s, t)
                .map(ParsedTransform::Fq)
                .map_err(|_| ParseError::NonUnitScale(parts[0].trim().to_string()))
        }
        RingSpec::Sym => {
            let u = parse_sym_element(parts[0])?;
            let r = parse_sym_element(parts[1])?;
            let s = parse_sym_element(parts[2])?;
            let t = parse_sym_element(parts[3])?;
            let generic_u = MultiPoly::var(RingTag::Int, Var::U);
            let one = MultiPoly::constant_int(RingTag::Int, 1);
            let minus_one = MultiPoly::constant_int(RingTag::Int, -1);
            // u·u⁻¹ = 1 must hold: the companion v serves the generic u,
            // and ±1 invert themselves; anything else is rejected.
            let u_inv = if u == generic_u {
                MultiPoly::var(RingTag::Int, Var::V)
            } else if u == one || u == minus_one {
                u.clone()
            } else {
                return Err(ParseError::NonUnitScale(parts[0].trim().to_string()));
            };
            Ok(ParsedTransform::Sym(Transform { u, u_inv, r, s, t }))
        }
    }
}
