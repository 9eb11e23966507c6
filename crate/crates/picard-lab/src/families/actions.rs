//! Finite-group actions on truncated power-series rings by coefficient
//! conjugation followed by substitution, plus the exact Möbius-map model
//! of the GL₂(𝔽₃) action used to cross-check well-definedness.
//!
//! The composition convention throughout is the right-action law: acting
//! by στ is acting by σ and then by τ, so the substitution series satisfy
//! s_{στ} = conj_τ(s_σ) ∘ s_τ and the conjugation flags add.

use std::fmt;

use crate::algebra::field::{Field, FieldElement};
use crate::algebra::series::TruncatedSeries;
use crate::groups::{FiniteGroup, Mat2};

/// Errors from constructing or validating a series action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    /// The closure of the generators has the wrong number of elements.
    WrongOrder { expected: usize, got: usize },
    /// Recombining elements i and j disagrees with the stored product —
    /// the generator assignment does not extend to the group.
    InconsistentPair(usize, usize),
    /// A substitution series is not of the form (unit)·μ + higher terms.
    NotNormalized(usize),
    /// A defining relation of the group fails as substitution maps.
    RelationFailed(&'static str),
    /// A series expected to be invariant moves under a generator.
    InvariantNotFixed(&'static str),
}

impl fmt::Display for ActionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionError::WrongOrder { expected, got } => {
                write!(f, "generators close to {got} elements, expected {expected}")
            }
            ActionError::InconsistentPair(i, j) => {
                write!(f, "the action is not well defined on the pair ({i}, {j})")
            }
            ActionError::NotNormalized(i) => {
                write!(f, "substitution series of element {i} is not unit·μ + O(μ²)")
            }
            ActionError::RelationFailed(rel) => write!(f, "group relation {rel} fails"),
            ActionError::InvariantNotFixed(what) => write!(f, "{what} is not fixed"),
        }
    }
}

impl std::error::Error for ActionError {}

/// One group element of a series action: an identity tag for group
/// bookkeeping (matrix entries or a series fingerprint), the substitution
/// series, and whether the element conjugates the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionElement {
    tag: Vec<u8>,
    pub series: TruncatedSeries,
    pub conj: bool,
}

/// s_g with the conjugation of h applied, then composed with s_h — the
/// series of the product gh under the right-action law.
fn combined_series(g: &ActionElement, h: &ActionElement) -> TruncatedSeries {
    let base = if h.conj { g.series.frobenius_coeffs() } else { g.series.clone() };
    base.substitute(&h.series).expect("substitution series have valuation >= 1")
}

/// A finite group acting on 𝔽_q[μ]/μ^N by conjugate-then-substitute.
#[derive(Debug, Clone)]
pub struct SeriesAction {
    field: Field,
    precision: usize,
    group: FiniteGroup<ActionElement>,
    generators: Vec<usize>,
}

impl SeriesAction {
    /// Closes the generators, locates them in the element list, and
    /// verifies the action is well defined on every pair of elements.
    fn build(
        field: Field,
        precision: usize,
        identity: ActionElement,
        generators: Vec<ActionElement>,
        mul: impl Fn(&ActionElement, &ActionElement) -> ActionElement,
        expected_order: usize,
    ) -> Result<SeriesAction, ActionError> {
        let group = FiniteGroup::closure(identity, &generators, &mul, |e| e.tag.clone());
        if group.order() != expected_order {
            return Err(ActionError::WrongOrder { expected: expected_order, got: group.order() });
        }
        let generator_indices: Vec<usize> = generators
            .iter()
            .map(|g| {
                group
                    .elements()
                    .iter()
                    .position(|e| e.tag == g.tag)
                    .expect("generators appear in their own closure")
            })
            .collect();
        let action =
            SeriesAction { field, precision, group, generators: generator_indices };
        for i in 0..action.order() {
            let el = action.group.element(i);
            if !el.series.coeff(0).is_zero()
                || (precision >= 2 && el.series.coeff(1).is_zero())
            {
                return Err(ActionError::NotNormalized(i));
            }
        }
        if let Some((i, j)) = action.first_inconsistent_pair(&mul) {
            return Err(ActionError::InconsistentPair(i, j));
        }
        Ok(action)
    }

    /// Recombines every pair and compares against the stored product;
    /// `None` means the generator assignment extends consistently.
    fn first_inconsistent_pair(
        &self,
        mul: &impl Fn(&ActionElement, &ActionElement) -> ActionElement,
    ) -> Option<(usize, usize)> {
        for i in 0..self.order() {
            for j in 0..self.order() {
                let product = mul(self.group.element(i), self.group.element(j));
                let stored = self.group.element(self.group.multiply(i, j));
                if product.series != stored.series || product.conj != stored.conj {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup<ActionElement> {
        &self.group
    }

    /// Index of the k-th generator in the element list.
    pub fn generator(&self, k: usize) -> usize {
        self.generators[k]
    }

    pub fn identity_index(&self) -> usize {
        self.group.identity()
    }

    pub fn multiply(&self, i: usize, j: usize) -> usize {
        self.group.multiply(i, j)
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.group.inverse(i)
    }

    /// f^g for the i-th element: conjugate coefficients, then substitute.
    pub fn apply(&self, f: &TruncatedSeries, i: usize) -> TruncatedSeries {
        let el = self.group.element(i);
        let base = if el.conj { f.frobenius_coeffs() } else { f.clone() };
        base.substitute(&el.series).expect("action series have valuation >= 1")
    }

    /// Whether every element fixes f.
    pub fn fixes(&self, f: &TruncatedSeries) -> bool {
        (0..self.order()).all(|i| self.apply(f, i) == *f)
    }

    pub(crate) fn element_tag(&self, i: usize) -> &[u8] {
        &self.group.element(i).tag
    }
}

/// The S₃ action on 𝔽₃[μ]/μ^N generated by α: μ ↦ −μ and
/// β: μ ↦ μ/(1−μ); verifies the S₃ relations and that the series
/// j̃ = μ⁶/(μ²−1)² is fixed.
pub fn s3_action(n: usize) -> Result<SeriesAction, ActionError> {
    assert!(n >= 6, "precision must be at least 6");
    let field = Field::F3;
    let mu = TruncatedSeries::mu(field, n);
    let one = TruncatedSeries::one(field, n);

    let tagged = |series: TruncatedSeries| ActionElement {
        tag: series.key(),
        series,
        conj: false,
    };
    let alpha = tagged(mu.neg());
    let beta = tagged(mu.mul(&one.sub(&mu).invert().expect("1 - mu is a unit")));
    let identity = tagged(mu.clone());
    let mul = |a: &ActionElement, b: &ActionElement| {
        let series = combined_series(a, b);
        ActionElement { tag: series.key(), series, conj: false }
    };

    let action = SeriesAction::build(field, n, identity, vec![alpha, beta], mul, 6)?;

    let e = action.identity_index();
    let a = action.generator(0);
    let b = action.generator(1);
    if action.multiply(a, a) != e {
        return Err(ActionError::RelationFailed("α² = e"));
    }
    if action.group().power(b, 3) != e {
        return Err(ActionError::RelationFailed("β³ = e"));
    }
    let ab = action.multiply(a, b);
    if action.multiply(ab, ab) != e {
        return Err(ActionError::RelationFailed("(αβ)² = e"));
    }

    let denom = mu.mul(&mu).sub(&one);
    let j_tilde = mu.pow(6).mul(&denom.mul(&denom).invert().expect("unit constant term"));
    if !action.fixes(&j_tilde) {
        return Err(ActionError::InvariantNotFixed("μ⁶/(μ²−1)²"));
    }
    Ok(action)
}

fn mat_tag(m: &Mat2) -> Vec<u8> {
    m.0.to_vec()
}

fn tag_mat(tag: &[u8]) -> Mat2 {
    Mat2([tag[0], tag[1], tag[2], tag[3]])
}

/// The SL₂(𝔽₃) action on 𝔽₄[μ]/μ^N generated by α = [[1,0],[−1,1]]
/// acting as μ ↦ ωμ and β = [[0,−1],[1,0]] acting as μ ↦ μ/(μ−1).
/// Elements are tagged by their matrices, so the group has 24 elements
/// even though the action factors through the ±1 quotient: β² = −1 acts
/// as the identity substitution.
pub fn sl2f3_series_action(n: usize) -> Result<SeriesAction, ActionError> {
    assert!(n >= 12, "precision must be at least 12");
    let field = Field::F4;
    let omega = field.gen();
    let mu = TruncatedSeries::mu(field, n);
    let one = TruncatedSeries::one(field, n);

    let alpha = ActionElement {
        tag: mat_tag(&Mat2::new(1, 0, -1, 1)),
        series: mu.scale(omega),
        conj: false,
    };
    let beta = ActionElement {
        tag: mat_tag(&Mat2::new(0, -1, 1, 0)),
        series: mu.mul(&mu.sub(&one).invert().expect("mu - 1 is a unit")),
        conj: false,
    };
    let identity = ActionElement { tag: mat_tag(&Mat2::IDENTITY), series: mu.clone(), conj: false };
    let mul = |a: &ActionElement, b: &ActionElement| ActionElement {
        tag: mat_tag(&tag_mat(&a.tag).mul(&tag_mat(&b.tag))),
        series: combined_series(a, b),
        conj: false,
    };

    let action = SeriesAction::build(field, n, identity, vec![alpha, beta], mul, 24)?;

    let e = action.identity_index();
    let a = action.generator(0);
    let b = action.generator(1);
    if action.group().power(a, 3) != e {
        return Err(ActionError::RelationFailed("α³ = e"));
    }
    let b2 = action.multiply(b, b);
    if b2 == e || action.multiply(b2, b2) != e {
        return Err(ActionError::RelationFailed("β has order 4"));
    }
    if action.group().element(b2).series != mu {
        return Err(ActionError::RelationFailed("β² acts as the identity substitution"));
    }
    Ok(action)
}

/// The same order-6 action as [`s3_action`] but with the generators listed
/// in the other order, so the closure enumerates the elements differently.
/// Used to check that canonical-form outputs do not depend on enumeration.
#[cfg(test)]
pub(crate) fn s3_action_generators_swapped(n: usize) -> SeriesAction {
    assert!(n >= 6, "precision must be at least 6");
    let field = Field::F3;
    let mu = TruncatedSeries::mu(field, n);
    let one = TruncatedSeries::one(field, n);
    let tagged = |series: TruncatedSeries| ActionElement { tag: series.key(), series, conj: false };
    let alpha = tagged(mu.neg());
    let beta = tagged(mu.mul(&one.sub(&mu).invert().expect("1 - mu is a unit")));
    let identity = tagged(mu);
    let mul = |a: &ActionElement, b: &ActionElement| {
        let series = combined_series(a, b);
        ActionElement { tag: series.key(), series, conj: false }
    };
    SeriesAction::build(field, n, identity, vec![beta, alpha], mul, 6)
        .expect("same closure as s3_action")
}

/// ℤ/2 acting trivially on 𝔽₂[μ]/μ^N: both elements substitute μ itself.
pub fn z2_trivial_action(n: usize) -> SeriesAction {
    let field = Field::F2;
    let mu = TruncatedSeries::mu(field, n);
    let identity = ActionElement { tag: vec![0], series: mu.clone(), conj: false };
    let sigma = ActionElement { tag: vec![1], series: mu, conj: false };
    let mul = |a: &ActionElement, b: &ActionElement| ActionElement {
        tag: vec![a.tag[0] ^ b.tag[0]],
        series: combined_series(a, b),
        conj: false,
    };
    SeriesAction::build(field, n, identity, vec![sigma], mul, 2)
        .expect("the trivial action is consistent")
}

/// A Möbius map μ ↦ (aμ + b)/(cμ + d) over a finite field, stored
/// projectively normalized: the first nonzero entry of (a, b, c, d) is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuMap {
    m: [FieldElement; 4],
}

impl MuMap {
    pub fn new(m: [FieldElement; 4]) -> MuMap {
        let det = m[0] * m[3] - m[1] * m[2];
        assert!(!det.is_zero(), "Möbius matrix must be invertible");
        let scale = m
            .iter()
            .find(|x| !x.is_zero())
            .expect("invertible matrix is nonzero")
            .inv()
            .unwrap();
        MuMap { m: [m[0] * scale, m[1] * scale, m[2] * scale, m[3] * scale] }
    }

    pub fn identity(field: Field) -> MuMap {
        MuMap::new([field.one(), field.zero(), field.zero(), field.one()])
    }

    /// Entrywise Frobenius (ω-conjugation over 𝔽₄).
    pub fn frobenius(&self) -> MuMap {
        MuMap::new([
            self.m[0].frobenius(),
            self.m[1].frobenius(),
            self.m[2].frobenius(),
            self.m[3].frobenius(),
        ])
    }

    /// Matrix product; composing maps so that `first` is substituted into
    /// by `second`'s output — (first·second)(μ) = first(second(μ)).
    pub fn matmul(first: &MuMap, second: &MuMap) -> MuMap {
        let a = first.m;
        let b = second.m;
        MuMap::new([
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ])
    }

    /// Expands the map as a substitution series to precision n; requires
    /// b = 0 (the map fixes μ = 0) and d ≠ 0.
    pub fn to_series(&self, n: usize) -> TruncatedSeries {
        assert!(self.m[1].is_zero(), "map must fix the origin");
        assert!(!self.m[3].is_zero(), "denominator must be a unit at the origin");
        let field = self.m[0].field();
        let mu = TruncatedSeries::mu(field, n);
        let num = mu.scale(self.m[0]);
        let den = mu.scale(self.m[2]).add(&TruncatedSeries::one(field, n).scale(self.m[3]));
        num.mul(&den.invert().expect("nonzero constant term"))
    }
}

/// Outcome of the GL₂(𝔽₃) Möbius-action well-definedness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoebiusActionReport {
    /// Size of the closure of the three generator matrices (want 48).
    pub closure_order: usize,
    /// First element pair where recombination disagrees, if any.
    pub offending_pair: Option<(usize, usize)>,
    /// Elements whose conjugation flag is off (they fix ω).
    pub omega_fixing_count: usize,
    /// Elements of matrix determinant 1.
    pub det_one_count: usize,
    /// The two subsets above coincide elementwise.
    pub omega_fixing_is_det_one: bool,
    /// diag(1, −1) is assigned the identity map on μ with conjugation on.
    pub diagonal_conjugates_and_fixes_mu: bool,
}

impl MoebiusActionReport {
    pub fn passed(&self) -> bool {
        self.closure_order == 48
            && self.offending_pair.is_none()
            && self.omega_fixing_count == 24
            && self.det_one_count == 24
            && self.omega_fixing_is_det_one
            && self.diagonal_conjugates_and_fixes_mu
    }
}

/// Builds GL₂(𝔽₃) from the three displayed generators, assigns each the
/// displayed (Möbius map over 𝔽₄, ω-conjugation) pair, extends along
/// products, and checks the extension is a genuine right action on all
/// 48² pairs; also compares the ω-fixing subgroup with the determinant-1
/// subgroup.
pub fn gl2f3_action_check() -> MoebiusActionReport {
    let field = Field::F4;
    let omega = field.gen();
    let one = field.one();
    let zero = field.zero();

    type Labeled = (Mat2, MuMap, bool);
    // (μ, ω) ↦ (ωμ, ω), (μ/(μ−1), ω), and (μ, ω²) respectively.
    let generators: Vec<Labeled> = vec![
        (Mat2::new(1, 0, -1, 1), MuMap::new([omega, zero, zero, one]), false),
        (Mat2::new(0, -1, 1, 0), MuMap::new([one, zero, one, -one]), false),
        (Mat2::new(1, 0, 0, -1), MuMap::identity(field), true),
    ];
    let identity: Labeled = (Mat2::IDENTITY, MuMap::identity(field), false);
    let mul = |a: &Labeled, b: &Labeled| -> Labeled {
        let mapped = if b.2 { a.1.frobenius() } else { a.1 };
        (a.0.mul(&b.0), MuMap::matmul(&mapped, &b.1), a.2 ^ b.2)
    };

    let group = FiniteGroup::closure(identity, &generators, &mul, |e| e.0 .0);
    let n = group.order();

    let mut offending_pair = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let product = mul(group.element(i), group.element(j));
            let stored = group.element(group.multiply(i, j));
            if product != *stored {
                offending_pair = Some((i, j));
                break 'outer;
            }
        }
    }

    let omega_fixing_count = group.elements().iter().filter(|e| !e.2).count();
    let det_one_count = group.elements().iter().filter(|e| e.0.det() == 1).count();
    let omega_fixing_is_det_one =
        group.elements().iter().all(|e| (e.0.det() == 1) == !e.2);

    let diagonal = group
        .elements()
        .iter()
        .find(|e| e.0 == Mat2::new(1, 0, 0, -1))
        .expect("diag(1,-1) is a generator");
    let diagonal_conjugates_and_fixes_mu =
        diagonal.1 == MuMap::identity(field) && diagonal.2;

    MoebiusActionReport {
        closure_order: n,
        offending_pair,
        omega_fixing_count,
        det_one_count,
        omega_fixing_is_det_one,
        diagonal_conjugates_and_fixes_mu,
    }
}
