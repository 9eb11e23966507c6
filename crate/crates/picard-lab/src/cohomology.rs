//! First group cohomology of series actions, by explicit row reduction.
//!
//! A 1-cocycle for a finite group G acting on R = 𝔽_q[μ]/(μ^N) assigns a
//! series ξ_σ to every σ ∈ G subject to ξ_{στ} = ξ_σ^τ + ξ_τ; a coboundary
//! is σ ↦ g^σ − g for a single g ∈ R. Both are 𝔽_q-linear conditions on
//! finitely many coefficients, so Z¹, B¹, and H¹ = Z¹/B¹ all come out of
//! kernel and echelon computations. Unknowns are laid out in tag order, so
//! the bases are canonical: two runs that enumerate the group differently
//! produce identical output.
//!
//! The module also packages two joint-congruence eliminations (the only
//! low-degree series fixed by both generators of the order-6 action over
//! 𝔽₃, and of the order-24 action over 𝔽₄, is zero), each solved by row
//! reduction and re-checked by brute-force substitution, plus an analysis
//! of cocycle values at the square of the order-4 generator.

use crate::algebra::field::Field;
use crate::algebra::linalg::{codes, echelon_basis, kernel, LinearBasis};
use crate::algebra::series::TruncatedSeries;
use crate::families::actions::{s3_action, sl2f3_series_action, SeriesAction};

/// A 1-cocycle: one series per group element, indexed like the action's
/// element list.
#[derive(Debug, Clone, PartialEq)]
pub struct Cocycle {
    values: Vec<TruncatedSeries>,
}

impl Cocycle {
    /// The value ξ_σ at the element with index `i`.
    pub fn value(&self, i: usize) -> &TruncatedSeries {
        &self.values[i]
    }

    pub fn values(&self) -> &[TruncatedSeries] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Re-verifies ξ_{στ} = ξ_σ^τ + ξ_τ on every pair, using only series
    /// arithmetic — independent of the linear solver that produced the
    /// cocycle.
    pub fn satisfies_cocycle_identity(&self, action: &SeriesAction) -> bool {
        (0..action.order()).all(|s| {
            (0..action.order()).all(|t| {
                let lhs = &self.values[action.multiply(s, t)];
                let rhs = action.apply(&self.values[s], t).add(&self.values[t]);
                *lhs == rhs
            })
        })
    }
}

/// The coboundary σ ↦ g^σ − g of a single series.
pub fn coboundary_of(action: &SeriesAction, g: &TruncatedSeries) -> Cocycle {
    Cocycle {
        values: (0..action.order()).map(|i| action.apply(g, i).sub(g)).collect(),
    }
}

/// The σ-conjugation tables are only additive maps when no element
/// conjugates coefficients, which is what the code-level linear algebra
/// needs; every action shipped here satisfies this.
fn assert_coefficient_linear(action: &SeriesAction) {
    for i in 0..action.order() {
        assert!(
            !action.group().element(i).conj,
            "cocycle systems need a coefficient-linear action"
        );
    }
}

/// Element indices sorted by tag: a stable order independent of how the
/// closure happened to enumerate the group.
fn canonical_order(action: &SeriesAction) -> Vec<usize> {
    let mut order: Vec<usize> = (0..action.order()).collect();
    order.sort_by(|&i, &j| action.element_tag(i).cmp(action.element_tag(j)));
    order
}

/// (μ^k)^σ for k = 0..N: the action of one element on the monomial basis.
fn monomial_images(action: &SeriesAction, element: usize) -> Vec<TruncatedSeries> {
    let field = action.field();
    let n = action.precision();
    (0..n)
        .map(|k| action.apply(&TruncatedSeries::monomial(field, k, n), element))
        .collect()
}

/// Rows of the congruence "g^σ = g" in the coefficients of
/// g = Σ_{k ≥ lo} a_k μ^k: one row per target coefficient.
fn congruence_rows(action: &SeriesAction, element: usize, lo: usize) -> Vec<Vec<u8>> {
    let field = action.field();
    let n = action.precision();
    let images = monomial_images(action, element);
    let mut rows = Vec::with_capacity(n);
    for c in 0..n {
        let mut row = vec![field.zero(); n - lo];
        for k in lo..n {
            let mut a = images[k].coeff(c);
            if k == c {
                a = a - field.one();
            }
            row[k - lo] = a;
        }
        rows.push(codes(&row));
    }
    rows
}

/// Builds a series whose coefficient of μ^(lo+k) is the k-th code.
fn series_from_codes_at(field: Field, row: &[u8], lo: usize, n: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(field, n);
    for (k, &c) in row.iter().enumerate() {
        s = s.with_coeff(lo + k, field.from_code(c));
    }
    s
}

/// Coefficient codes of a cocycle in the canonical (tag-sorted) layout.
fn flatten(action: &SeriesAction, order: &[usize], cocycle: &Cocycle) -> Vec<u8> {
    let n = action.precision();
    let mut row = Vec::with_capacity(order.len() * n);
    for &i in order {
        for c in 0..n {
            row.push(cocycle.values[i].coeff(c).code());
        }
    }
    row
}

/// Inverse of [`flatten`].
fn unflatten(action: &SeriesAction, order: &[usize], row: &[u8]) -> Cocycle {
    let field = action.field();
    let n = action.precision();
    let mut values = vec![TruncatedSeries::zero(field, n); action.order()];
    for (s, &i) in order.iter().enumerate() {
        values[i] = series_from_codes_at(field, &row[s * n..(s + 1) * n], 0, n);
    }
    Cocycle { values }
}

/// Basis of the cocycle space Z¹, as the kernel of the relation system
/// over all pairs (σ, τ), in canonical free-column form.
pub fn cocycle_space(action: &SeriesAction) -> Vec<Cocycle> {
    assert_coefficient_linear(action);
    let field = action.field();
    let n = action.precision();
    let g = action.order();
    let order = canonical_order(action);
    let mut slot = vec![0usize; g];
    for (s, &i) in order.iter().enumerate() {
        slot[i] = s;
    }
    let width = g * n;

    let images: Vec<Vec<TruncatedSeries>> =
        (0..g).map(|t| monomial_images(action, t)).collect();

    let mut constraints = LinearBasis::new(field, width);
    let mut row = vec![field.zero(); width];
    for s in 0..g {
        for t in 0..g {
            let st = action.multiply(s, t);
            for c in 0..n {
                for x in row.iter_mut() {
                    *x = field.zero();
                }
                // Coefficient of μ^c in ξ_{στ} − ξ_σ^τ − ξ_τ.
                let col = slot[st] * n + c;
                row[col] = row[col] + field.one();
                for (k, image) in images[t].iter().enumerate() {
                    let a = image.coeff(c);
                    if !a.is_zero() {
                        let col = slot[s] * n + k;
                        row[col] = row[col] - a;
                    }
                }
                let col = slot[t] * n + c;
                row[col] = row[col] - field.one();
                constraints.insert(codes(&row));
            }
        }
    }
    constraints.normalize();
    constraints
        .kernel_basis()
        .into_iter()
        .map(|v| unflatten(action, &order, &v))
        .collect()
}

/// Basis of the coboundary space B¹: reduced echelon form of the images
/// of the monomial basis under g ↦ (σ ↦ g^σ − g).
pub fn coboundaries(action: &SeriesAction) -> Vec<Cocycle> {
    assert_coefficient_linear(action);
    let field = action.field();
    let n = action.precision();
    let order = canonical_order(action);
    let width = action.order() * n;
    let mut vectors = Vec::with_capacity(n);
    for k in 0..n {
        let g = TruncatedSeries::monomial(field, k, n);
        let mut row = vec![field.zero(); width];
        for (s, &i) in order.iter().enumerate() {
            let diff = action.apply(&g, i).sub(&g);
            for c in 0..n {
                row[s * n + c] = diff.coeff(c);
            }
        }
        vectors.push(codes(&row));
    }
    let basis = echelon_basis(field, width, &vectors);
    basis.rows().iter().map(|v| unflatten(action, &order, v)).collect()
}

/// Basis of the invariants R^G, as the joint kernel of g ↦ g^σ − g over
/// every element σ.
pub fn fixed_subspace(action: &SeriesAction) -> Vec<TruncatedSeries> {
    assert_coefficient_linear(action);
    let field = action.field();
    let n = action.precision();
    let mut constraints = Vec::new();
    for i in 0..action.order() {
        constraints.extend(congruence_rows(action, i, 0));
    }
    kernel(field, n, &constraints)
        .into_iter()
        .map(|v| series_from_codes_at(field, &v, 0, n))
        .collect()
}

/// Dimensions and canonical representatives for H¹ = Z¹/B¹.
#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub precision: usize,
    pub dim_z1: usize,
    pub dim_b1: usize,
    /// Dimension of the invariant subspace R^G (the kernel of the
    /// coboundary map, so `dim_b1 + dim_fixed` must equal `precision`).
    pub dim_fixed: usize,
    pub dim_h1: usize,
    /// One cocycle per H¹ basis class: the Z¹ basis reduced against the
    /// B¹ echelon basis, thinned to an independent set.
    pub representatives: Vec<Cocycle>,
}

impl CohomologyReport {
    /// Rank-nullity for the coboundary map R → B¹.
    pub fn rank_nullity_consistent(&self) -> bool {
        self.dim_b1 + self.dim_fixed == self.precision
    }
}

/// Computes Z¹, B¹, the invariants, and canonical H¹ representatives.
pub fn h1(action: &SeriesAction) -> CohomologyReport {
    let field = action.field();
    let n = action.precision();
    let order = canonical_order(action);
    let width = action.order() * n;

    let z = cocycle_space(action);
    let b = coboundaries(action);
    let fixed = fixed_subspace(action);

    let b_flat: Vec<Vec<u8>> = b.iter().map(|c| flatten(action, &order, c)).collect();
    let b_basis = echelon_basis(field, width, &b_flat);
    let mut quotient = LinearBasis::new(field, width);
    let mut representatives = Vec::new();
    for zc in &z {
        let reduced = b_basis.reduce_vector(&flatten(action, &order, zc));
        if quotient.insert(reduced.clone()) {
            representatives.push(unflatten(action, &order, &reduced));
        }
    }
    assert_eq!(
        representatives.len() + b.len(),
        z.len(),
        "coboundaries must embed into the cocycle space"
    );
    CohomologyReport {
        precision: n,
        dim_z1: z.len(),
        dim_b1: b.len(),
        dim_fixed: fixed.len(),
        dim_h1: representatives.len(),
        representatives,
    }
}

/// Dual-route elimination for the order-6 action over 𝔽₃ at precision 6:
/// the joint congruence system on g = a₁μ + ⋯ + a₅μ⁵ is solved by row
/// reduction and re-counted by substituting all 3⁵ candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationReport {
    /// Dimension of the joint kernel found by row reduction.
    pub kernel_dimension: usize,
    /// Candidates (out of q⁵, zero included) surviving direct substitution
    /// of both generator congruences.
    pub brute_force_survivors: usize,
    /// Kernel size matches the survivor count and every kernel basis
    /// vector passes the direct check.
    pub routes_agree: bool,
}

impl EliminationReport {
    /// Both routes found that only the zero series survives.
    pub fn passed(&self) -> bool {
        self.kernel_dimension == 0 && self.brute_force_survivors == 1 && self.routes_agree
    }
}

/// Expands `code` in base q into the coefficients of μ^lo .. μ^(n−1).
fn decode_candidate(field: Field, mut code: usize, lo: usize, n: usize) -> TruncatedSeries {
    let q = field.order() as usize;
    let mut s = TruncatedSeries::zero(field, n);
    for k in lo..n {
        s = s.with_coeff(k, field.from_code((code % q) as u8));
        code /= q;
    }
    s
}

/// Solves the joint generator congruences of the order-6 action over 𝔽₃
/// in degrees 1..5 both by row reduction and by brute force.
pub fn elimination_check_char3() -> EliminationReport {
    let action = s3_action(6).expect("order-6 action builds at precision 6");
    let field = action.field();
    let n = action.precision();
    let a = action.generator(0);
    let b = action.generator(1);

    let mut constraints = congruence_rows(&action, a, 1);
    constraints.extend(congruence_rows(&action, b, 1));
    let kernel_vectors = kernel(field, n - 1, &constraints);

    let q = field.order() as usize;
    let mut survivors = 0usize;
    for code in 0..q.pow((n - 1) as u32) {
        let g = decode_candidate(field, code, 1, n);
        if action.apply(&g, a) == g && action.apply(&g, b) == g {
            survivors += 1;
        }
    }

    let kernel_confirmed = kernel_vectors.iter().all(|v| {
        let g = series_from_codes_at(field, v, 1, n);
        action.apply(&g, a) == g && action.apply(&g, b) == g
    });
    let routes_agree =
        kernel_confirmed && q.pow(kernel_vectors.len() as u32) == survivors;

    EliminationReport {
        kernel_dimension: kernel_vectors.len(),
        brute_force_survivors: survivors,
        routes_agree,
    }
}

/// Dual-route elimination for the order-24 action over 𝔽₄ at precision 12.
/// The scaling generator (μ ↦ ωμ) is handled first: its congruence alone
/// must cut the degree-1..11 coefficients down to span{μ³, μ⁶, μ⁹}. The
/// Möbius generator (μ ↦ μ/(μ−1)) then finishes the elimination, with the
/// brute force staged inside the scaling kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Char2EliminationReport {
    pub scaling_kernel_dimension: usize,
    /// The scaling kernel is exactly span{μ³, μ⁶, μ⁹}.
    pub scaling_kernel_is_cube_span: bool,
    pub joint_kernel_dimension: usize,
    /// Survivors of the Möbius congruence among the q³ staged candidates.
    pub brute_force_survivors: usize,
    /// In the Möbius congruence, the μ⁴ coefficient moves μ³ but leaves
    /// μ⁶ and μ⁹ alone, so that single row already pins the μ³ coordinate.
    pub mu4_row_eliminates_cube: bool,
    pub routes_agree: bool,
}

impl Char2EliminationReport {
    pub fn passed(&self) -> bool {
        self.scaling_kernel_dimension == 3
            && self.scaling_kernel_is_cube_span
            && self.joint_kernel_dimension == 0
            && self.brute_force_survivors == 1
            && self.mu4_row_eliminates_cube
            && self.routes_agree
    }
}

/// Runs the staged elimination for the order-24 action over 𝔽₄.
pub fn elimination_check_char2() -> Char2EliminationReport {
    let action = sl2f3_series_action(12).expect("order-24 action builds at precision 12");
    let field = action.field();
    let n = action.precision();
    let a = action.generator(0);
    let b = action.generator(1);

    let scaling_rows = congruence_rows(&action, a, 1);
    let scaling_kernel = kernel(field, n - 1, &scaling_rows);
    let expected: Vec<Vec<u8>> = [3usize, 6, 9]
        .iter()
        .map(|&j| {
            let mut v = vec![0u8; n - 1];
            v[j - 1] = 1;
            v
        })
        .collect();
    let scaling_kernel_is_cube_span = echelon_basis(field, n - 1, &scaling_kernel).rows()
        == echelon_basis(field, n - 1, &expected).rows();

    let mut joint_rows = scaling_rows;
    joint_rows.extend(congruence_rows(&action, b, 1));
    let joint_kernel = kernel(field, n - 1, &joint_rows);

    // Brute force staged inside the scaling kernel: all q³ candidates.
    let mut survivors = 0usize;
    for x3 in field.elements() {
        for x6 in field.elements() {
            for x9 in field.elements() {
                let g = TruncatedSeries::zero(field, n)
                    .with_coeff(3, x3)
                    .with_coeff(6, x6)
                    .with_coeff(9, x9);
                assert!(
                    action.apply(&g, a) == g,
                    "staged candidates satisfy the scaling congruence"
                );
                if action.apply(&g, b) == g {
                    survivors += 1;
                }
            }
        }
    }

    let images = monomial_images(&action, b);
    let moved = |k: usize| images[k].sub(&TruncatedSeries::monomial(field, k, n));
    let mu4_row_eliminates_cube = !moved(3).coeff(4).is_zero()
        && moved(6).coeff(4).is_zero()
        && moved(9).coeff(4).is_zero();

    let q = field.order() as usize;
    let routes_agree = q.pow(joint_kernel.len() as u32) == survivors;

    Char2EliminationReport {
        scaling_kernel_dimension: scaling_kernel.len(),
        scaling_kernel_is_cube_span,
        joint_kernel_dimension: joint_kernel.len(),
        brute_force_survivors: survivors,
        mu4_row_eliminates_cube,
        routes_agree,
    }
}

/// Behaviour of cocycle values at the square of the order-4 generator of
/// the order-24 action, across a full Z¹ basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiBeta2Report {
    pub precision: usize,
    pub basis_size: usize,
    /// Every basis cocycle satisfies the cocycle identity on all pairs.
    pub identities_reverified: bool,
    /// ξ_{β²} = ξ_β^β + ξ_β holds and the value is fixed by every element.
    pub beta_square_values_invariant: bool,
    /// Every ξ_{β²} vanishes to order at least 2.
    pub valuations_at_least_two: bool,
}

impl XiBeta2Report {
    pub fn passed(&self) -> bool {
        self.identities_reverified
            && self.beta_square_values_invariant
            && self.valuations_at_least_two
    }
}

/// Solves for the full cocycle space of the order-24 action at precision
/// `n` and checks every basis cocycle's value at β².
pub fn xi_beta2_analysis(n: usize) -> XiBeta2Report {
    let action = sl2f3_series_action(n).expect("order-24 action builds");
    let z = cocycle_space(&action);
    let b = action.generator(1);
    let b2 = action.multiply(b, b);

    let mut identities_reverified = true;
    let mut beta_square_values_invariant = true;
    let mut valuations_at_least_two = true;
    for xi in &z {
        identities_reverified &= xi.satisfies_cocycle_identity(&action);
        let value = xi.value(b2);
        beta_square_values_invariant &= *value
            == action.apply(xi.value(b), b).add(xi.value(b))
            && action.fixes(value);
        valuations_at_least_two &= value.valuation() >= 2;
    }
    XiBeta2Report {
        precision: n,
        basis_size: z.len(),
        identities_reverified,
        beta_square_values_invariant,
        valuations_at_least_two,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::actions::{s3_action_generators_swapped, z2_trivial_action};

    #[test]
    fn trivial_action_on_constants_has_one_dimensional_h1() {
        // Precision 1 leaves only the constants, acted on trivially, so
        // cocycles are homomorphisms ℤ/2 → 𝔽₂ and nothing cobounds.
        let action = z2_trivial_action(1);
        let report = h1(&action);
        assert_eq!(report.precision, 1);
        assert_eq!(report.dim_z1, 1);
        assert_eq!(report.dim_b1, 0);
        assert_eq!(report.dim_fixed, 1);
        assert_eq!(report.dim_h1, 1);
        assert!(report.rank_nullity_consistent());

        let rep = &report.representatives[0];
        assert!(rep.satisfies_cocycle_identity(&action));
        assert!(rep.value(action.identity_index()).is_zero());
        let other = 1 - action.identity_index();
        assert_eq!(*rep.value(other), TruncatedSeries::one(Field::F2, 1));
    }

    #[test]
    fn trivial_action_h1_grows_with_precision() {
        // With a trivial action every map σ ↦ ξ_σ with ξ_e = 0 and
        // 2ξ_σ = 0 is a cocycle, and no nonzero coboundary exists.
        let report = h1(&z2_trivial_action(3));
        assert_eq!(report.dim_z1, 3);
        assert_eq!(report.dim_b1, 0);
        assert_eq!(report.dim_h1, 3);
        assert!(report.rank_nullity_consistent());
    }

    #[test]
    fn coboundaries_satisfy_the_cocycle_identity() {
        let action = s3_action(6).unwrap();
        for b in coboundaries(&action) {
            assert!(b.satisfies_cocycle_identity(&action));
            assert!(b.value(action.identity_index()).is_zero());
        }
    }

    #[test]
    fn coboundary_of_a_dense_series_lies_in_the_coboundary_span() {
        let action = s3_action(8).unwrap();
        let field = action.field();
        let g = TruncatedSeries::from_ints(field, &[0, 1, 2, 0, 1, 1, 2, 1], 8);
        let cb = coboundary_of(&action, &g);
        assert!(cb.satisfies_cocycle_identity(&action));

        let order = canonical_order(&action);
        let width = action.order() * action.precision();
        let b_flat: Vec<Vec<u8>> = coboundaries(&action)
            .iter()
            .map(|c| flatten(&action, &order, c))
            .collect();
        let basis = echelon_basis(field, width, &b_flat);
        assert!(basis.contains(&flatten(&action, &order, &cb)));
    }

    #[test]
    fn order_6_action_cocycle_basis_passes_independent_reverification() {
        let action = s3_action(6).unwrap();
        let z = cocycle_space(&action);
        assert!(!z.is_empty());
        for xi in &z {
            assert!(xi.satisfies_cocycle_identity(&action));
            assert!(xi.value(action.identity_index()).is_zero());
        }
    }

    #[test]
    fn order_6_action_report_is_consistent() {
        let report = h1(&s3_action(6).unwrap());
        assert!(report.rank_nullity_consistent());
        assert_eq!(report.dim_h1, report.dim_z1 - report.dim_b1);
        for rep in &report.representatives {
            assert!(!rep.is_zero());
        }
    }

    #[test]
    fn h1_output_does_not_depend_on_group_enumeration() {
        // Same group, same action, generators fed to the closure in the
        // opposite order: the canonical serializations must agree.
        let first = s3_action(8).unwrap();
        let second = s3_action_generators_swapped(8);

        let serialize = |action: &SeriesAction, cs: &[Cocycle]| -> Vec<Vec<u8>> {
            let order = canonical_order(action);
            cs.iter().map(|c| flatten(action, &order, c)).collect()
        };

        let z1 = serialize(&first, &cocycle_space(&first));
        let z2 = serialize(&second, &cocycle_space(&second));
        assert_eq!(z1, z2);

        let b1 = serialize(&first, &coboundaries(&first));
        let b2 = serialize(&second, &coboundaries(&second));
        assert_eq!(b1, b2);

        let r1 = h1(&first);
        let r2 = h1(&second);
        assert_eq!(r1.dim_h1, r2.dim_h1);
        assert_eq!(serialize(&first, &r1.representatives), serialize(&second, &r2.representatives));
    }

    #[test]
    fn char3_elimination_leaves_only_zero() {
        let report = elimination_check_char3();
        assert_eq!(report.kernel_dimension, 0);
        assert_eq!(report.brute_force_survivors, 1);
        assert!(report.routes_agree);
        assert!(report.passed());
    }

    #[test]
    fn char3_example_mu_fails_the_negation_congruence() {
        // g = μ is the smallest candidate ruled out: μ ↦ −μ moves it.
        let action = s3_action(6).unwrap();
        let mu = TruncatedSeries::mu(action.field(), 6);
        assert_ne!(action.apply(&mu, action.generator(0)), mu);
    }

    #[test]
    fn char2_elimination_is_staged_and_leaves_only_zero() {
        let report = elimination_check_char2();
        assert_eq!(report.scaling_kernel_dimension, 3);
        assert!(report.scaling_kernel_is_cube_span);
        assert_eq!(report.joint_kernel_dimension, 0);
        assert_eq!(report.brute_force_survivors, 1);
        assert!(report.mu4_row_eliminates_cube);
        assert!(report.routes_agree);
        assert!(report.passed());
    }

    #[test]
    fn moebius_congruence_of_mu_has_valuation_two_tail() {
        // (μ)^β − μ = μ/(μ−1) − μ = μ² + μ³ + ⋯ over 𝔽₄: the displayed
        // obstruction tail starts in degree exactly 2.
        let action = sl2f3_series_action(12).unwrap();
        let field = action.field();
        let mu = TruncatedSeries::mu(field, 12);
        let diff = action.apply(&mu, action.generator(1)).sub(&mu);
        assert_eq!(diff.valuation(), 2);
        let expected =
            TruncatedSeries::from_ints(field, &[0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], 12);
        assert_eq!(diff, expected);
    }

    #[test]
    fn order_24_action_h1_dimensions_at_precision_24() {
        // Frozen values from a full run of the solver. These depend on the
        // truncation order: at precision 12 the same action has
        // dim Z¹ = 12, dim B¹ = 11, dim H¹ = 1. The invariant subspace at
        // precision 24 is two-dimensional — the constants plus an invariant
        // of valuation 12 — matching dim B¹ = 24 − 2 by rank-nullity.
        let report = h1(&sl2f3_series_action(24).unwrap());
        assert_eq!(report.dim_z1, 24);
        assert_eq!(report.dim_b1, 22);
        assert_eq!(report.dim_fixed, 2);
        assert_eq!(report.dim_h1, 2);
        assert!(report.rank_nullity_consistent());
        assert!(report.dim_h1 > 0);

        assert_eq!(fixed_valuation_jumps(&sl2f3_series_action(24).unwrap()), vec![0, 12]);
    }

    /// Pivot columns of the echelonized invariant subspace: the degrees
    /// where its valuation filtration jumps.
    fn fixed_valuation_jumps(action: &SeriesAction) -> Vec<usize> {
        let rows: Vec<Vec<u8>> = fixed_subspace(action)
            .iter()
            .map(|f| f.coeffs().iter().map(|c| c.code()).collect())
            .collect();
        echelon_basis(action.field(), action.precision(), &rows).pivots().to_vec()
    }

    #[test]
    fn order_6_action_h1_vanishes_at_precision_24() {
        // Frozen values: over 𝔽₃ the order-6 action has four invariants up
        // to degree 23 (valuations 0, 6, 12, 18) and no cohomology.
        let report = h1(&s3_action(24).unwrap());
        assert_eq!(report.dim_z1, 20);
        assert_eq!(report.dim_b1, 20);
        assert_eq!(report.dim_fixed, 4);
        assert_eq!(report.dim_h1, 0);
        assert!(report.rank_nullity_consistent());

        assert_eq!(fixed_valuation_jumps(&s3_action(24).unwrap()), vec![0, 6, 12, 18]);
    }

    #[test]
    fn order_24_action_beta_square_analysis_at_minimum_precision() {
        let report = xi_beta2_analysis(12);
        assert!(report.identities_reverified);
        assert!(report.beta_square_values_invariant);
        assert!(report.valuations_at_least_two);
        assert!(report.passed());
    }
}
