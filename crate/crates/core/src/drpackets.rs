//! The end-to-end packet pipeline for the rank-two odd spin similitude
//! group: component groups of tame regular discrete parameters, inner
//! form classes by two independent routes, fixed-point tables with
//! reductive-quotient labels, and the dual-torus elements that feed the
//! centralizer computations.
//!
//! Everything happens on the rank-2 adjoint apartment (coordinates
//! `e₁*, e₂*`) and, for subsystem identification, inside the rank-3
//! ambient character/cocharacter lattices of the split group.

use crate::affweyl::{
    alcove_containing, alcove_interior_point, base_so5, fixed_point, generated_group,
    omega_decompose, same_alcove, stabilizer_reflections, subsystem_at, AffineWeylElement,
    ApartmentPoint,
};
use crate::lattice::{quotient_torsion, FinAbGroup, FreeLattice, IMat, LatticeMap};
use crate::rootdatum::{build_preset, identify_based_datum, positive_roots, GroupLabel};
use std::fmt;
use thiserror::Error;

/// Errors from the packet pipeline.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrError {
    /// Two supposedly-equivalent computations disagreed; this is a
    /// correctness tripwire, never an expected state.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    /// Input data violates a documented side condition.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
}

/// The two shapes of tame regular discrete parameters in rank two: an
/// irreducible four-dimensional parameter, or a direct sum of two
/// two-dimensional ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TRDKind {
    Irreducible,
    SplitPair,
}

/// A tame regular discrete parameter shape: the kind together with the
/// finite Weyl element `w` acting on the adjoint dual lattice
/// `X_ad∨ = ℤe₁* ⊕ ℤe₂*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TRDShape {
    pub kind: TRDKind,
    /// Matrix of `w` on `X_ad∨` (columns are images of basis vectors).
    pub w_ad: IMat,
}

impl TRDShape {
    pub fn new(kind: TRDKind) -> Self {
        let w_ad = match kind {
            // Coxeter element: w·e₁* = e₂*, w·e₂* = −e₁*.
            TRDKind::Irreducible => IMat::from_rows(&[vec![0, -1], vec![1, 0]]),
            // w·e₁* = −e₁*, w·e₂* = −e₂*.
            TRDKind::SplitPair => IMat::from_rows(&[vec![-1, 0], vec![0, -1]]),
        };
        TRDShape { kind, w_ad }
    }

    /// Stored cocharacter representatives of the component-group
    /// classes, in table order.
    pub fn class_representatives(&self) -> Vec<Vec<i128>> {
        match self.kind {
            TRDKind::Irreducible => vec![vec![0, 0], vec![1, 0]],
            TRDKind::SplitPair => {
                vec![vec![0, 0], vec![1, 1], vec![1, 0], vec![0, 1]]
            }
        }
    }

    /// Sign tuple naming the character of the component group attached
    /// to a class representative.
    pub fn character_label(&self, rep: &[i128]) -> String {
        let sign = |x: i128| if x % 2 == 0 { "1" } else { "-1" };
        match self.kind {
            TRDKind::Irreducible => format!("({})", sign(rep[0] + rep[1])),
            TRDKind::SplitPair => format!("({},{})", sign(rep[0]), sign(rep[1])),
        }
    }
}

/// Component group of the parameter: torsion of `X_ad∨ / (1 − w)X_ad∨`.
pub fn component_group(shape: &TRDShape) -> FinAbGroup {
    let l = FreeLattice::new(vec!["e1*".into(), "e2*".into()]);
    let mut m = IMat::identity(2);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] -= shape.w_ad[(i, j)];
        }
    }
    quotient_torsion(&l, &LatticeMap::new(l.clone(), l.clone(), m))
}

/// Inner-form class of a cocharacter: its image in the torsion of
/// `X_ad∨ / ℤΦ_ad∨` with `Φ_ad∨` spanned by `e₁* − e₂*` and `2e₂*`.
/// Returns `+1` for the trivial class, `−1` otherwise.
pub fn kottwitz_class(lambda: &[i128]) -> i8 {
    assert_eq!(lambda.len(), 2, "cocharacter must live on the rank-2 adjoint lattice");
    let l = FreeLattice::new(vec!["e1*".into(), "e2*".into()]);
    let m = IMat::from_cols(&[vec![1, -1], vec![0, 2]]);
    let g = quotient_torsion(&l, &LatticeMap::new(l.clone(), l.clone(), m));
    debug_assert_eq!(g.invariant_factors, vec![2], "coroot-lattice quotient must be Z/2");
    let code = g.class_of(lambda).expect("adjoint quotient has no free part");
    if code.iter().all(|&c| c == 0) {
        1
    } else {
        -1
    }
}

/// Inner-form class of a stored representative by the alcove-walk
/// route: form `σ_λ = t_λ·w`, take its fixed point `x`, pick the alcove
/// `C_λ` whose closure contains `x` (shortest gallery from the
/// fundamental alcove), find the unique isotropy-group element `w_λ`
/// with `w_λ·C_λ = σ_λ·C_λ`, and read the alcove-stabilizer component
/// of `y_λ = w_λ⁻¹·σ_λ`. Must agree with [`kottwitz_class`].
pub fn u_lambda_via_omega(shape: &TRDShape, lambda: &[i128]) -> Result<i8, DrError> {
    let (ctx, pi) = base_so5();
    let sigma = AffineWeylElement::new(shape.w_ad.clone(), lambda.to_vec());
    let x = fixed_point(&sigma)
        .map_err(|e| DrError::InternalInconsistency(format!("σ_λ must be elliptic: {e}")))?;
    let g = alcove_containing(&ctx, &pi, &x)
        .map_err(|e| DrError::InternalInconsistency(format!("alcove search failed: {e}")))?;
    let isotropy = generated_group(&stabilizer_reflections(&ctx, &x))
        .map_err(|e| DrError::InternalInconsistency(format!("isotropy group diverged: {e}")))?;
    let p = g
        .act(&alcove_interior_point(&ctx, &pi).unwrap())
        .expect("rank-2 interior point");
    let target = sigma.act(&p).unwrap();
    let mut w_lambda = None;
    for w in &isotropy {
        if same_alcove(&ctx, &w.act(&p).unwrap(), &target) {
            if w_lambda.is_some() {
                return Err(DrError::InternalInconsistency(
                    "isotropy element moving C_λ to σ_λ·C_λ is not unique".into(),
                ));
            }
            w_lambda = Some(w.clone());
        }
    }
    let w_lambda = w_lambda.ok_or_else(|| {
        DrError::InternalInconsistency("no isotropy element moves C_λ to σ_λ·C_λ".into())
    })?;
    let y = w_lambda.inverse().compose(&sigma);
    let (omega, _) = omega_decompose(&ctx, &pi, &y)
        .map_err(|e| DrError::InternalInconsistency(format!("decomposition failed: {e}")))?;
    let sign = if omega.is_identity() { 1 } else { -1 };
    if sign != kottwitz_class(lambda) {
        return Err(DrError::InternalInconsistency(format!(
            "alcove route gave {sign} but the lattice route gave {} for λ = {lambda:?}",
            kottwitz_class(lambda)
        )));
    }
    Ok(sign)
}

/// A reductive-quotient label together with its form decorations: an
/// optional twist (a nontrivial diagram automorphism in the Frobenius)
/// and an optional torus-quotient presentation for the rank-deficient
/// case, displayed as `(²GSpin₂×GSpin₃)/GL₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormLabel {
    pub base: GroupLabel,
    pub twisted: bool,
    pub torus_quotient: bool,
}

impl fmt::Display for FormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.torus_quotient {
            let t = if self.twisted { "^2" } else { "" };
            write!(f, "({t}GSpin_2xGSpin_3)/GL1")
        } else if self.twisted {
            write!(f, "^2{}", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

/// One row of the packet table.
#[derive(Debug, Clone)]
pub struct PacketRow {
    /// Sign tuple of the component-group character, e.g. `(-1,1)`.
    pub rho_label: String,
    /// Stored cocharacter representative of the class.
    pub rho_rep: Vec<i128>,
    /// Fixed point of `σ_λ` on the adjoint apartment.
    pub x_lambda: ApartmentPoint,
    /// Positive roots taking integer values at `x_λ`.
    pub subsystem: Vec<Vec<i128>>,
    /// Inner-form class sign.
    pub u_class: i8,
    /// Identified reductive quotient with form decorations.
    pub quotient_label: FormLabel,
    /// The inner form the row belongs to.
    pub inner_form_label: String,
}

impl PacketRow {
    /// The reductive quotient as a finite-field group, e.g. `^2GSpin_4(f)`.
    pub fn quotient_over_residue_field(&self) -> String {
        format!("{}(f)", self.quotient_label)
    }
}

/// Positive roots of the rank-2 adjoint system in table order, as
/// functionals on the adjoint apartment.
fn adjoint_positive_roots() -> Vec<Vec<i128>> {
    vec![vec![1, -1], vec![0, 1], vec![1, 0], vec![1, 1]]
}

/// Lift an adjoint root to the rank-3 ambient character lattice
/// (`e₀, e₁, e₂` coordinates) with its similitude-corrected coroot.
fn lift_root(a: &[i128]) -> (Vec<i128>, Vec<i128>) {
    let chi = vec![0, a[0], a[1]];
    let coroot = match (a[0].abs(), a[1].abs()) {
        // Long roots ±e₁∓e₂: coroot has no central part.
        (1, 1) if a[0] == -a[1] => vec![0, a[0], a[1]],
        // Long roots ±(e₁+e₂): coroot e₁*+e₂*−e₀* (sign-adjusted).
        (1, 1) => vec![-a[0], a[0], a[1]],
        // Short roots ±e₁, ±e₂: coroot 2e_i* − e₀* (sign-adjusted).
        _ => {
            let s = a[0] + a[1]; // ±1
            vec![-s, 2 * a[0], 2 * a[1]]
        }
    };
    (chi, coroot)
}

/// Indecomposable elements of a set of positive roots.
fn simple_of_positive(pos: &[Vec<i128>]) -> Vec<Vec<i128>> {
    pos.iter()
        .filter(|a| {
            !pos.iter().any(|b| {
                pos.iter().any(|c| {
                    b.iter().zip(c.iter()).map(|(x, y)| x + y).collect::<Vec<_>>() == **a
                })
            })
        })
        .cloned()
        .collect()
}

/// Reflection of the adjoint lattice in an adjoint root.
fn adjoint_reflection(a: &[i128]) -> IMat {
    // Adjoint coroots: e_i−e_j ↦ e_i*−e_j*, e_i+e_j ↦ e_i*+e_j*, e_i ↦ 2e_i*.
    let av: Vec<i128> = if a.iter().all(|&x| x.abs() == 1) {
        a.to_vec()
    } else {
        a.iter().map(|&x| 2 * x).collect()
    };
    let mut m = IMat::identity(2);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] -= av[i] * a[j];
        }
    }
    m
}

/// Whether `w` lies in the subgroup of `GL(X_ad∨)` generated by the
/// reflections of the given adjoint roots.
fn in_subsystem_weyl_group(w: &IMat, sub_pos: &[Vec<i128>]) -> bool {
    let gens: Vec<AffineWeylElement> = sub_pos
        .iter()
        .map(|a| AffineWeylElement::new(adjoint_reflection(a), vec![0, 0]))
        .collect();
    let group = generated_group(&gens).expect("subsystem Weyl group is finite");
    group.iter().any(|g| &g.finite == w)
}

/// The full packet table for a shape: one row per component-group
/// class, with fixed points, facet subsystems, inner-form signs, and
/// identified reductive-quotient labels.
pub fn packet_table(shape: &TRDShape) -> Result<Vec<PacketRow>, DrError> {
    let group = component_group(shape);
    let reps = shape.class_representatives();
    assert_eq!(
        group.order() as usize,
        reps.len(),
        "packet size must equal the component-group order"
    );
    let ambient = build_preset(GroupLabel::GSpinOdd(2)).expect("catalog preset");
    debug_assert_eq!(
        positive_roots(&ambient)
            .iter()
            .map(|r| vec![r[1], r[2]])
            .collect::<Vec<_>>(),
        adjoint_positive_roots(),
        "ambient positive roots must project to the adjoint table order"
    );
    let mut rows = Vec::new();
    for rep in &reps {
        let sigma = AffineWeylElement::new(shape.w_ad.clone(), rep.clone());
        let x = fixed_point(&sigma)
            .map_err(|e| DrError::InternalInconsistency(format!("σ_λ must be elliptic: {e}")))?;
        let subsystem = subsystem_at(&x, &adjoint_positive_roots());
        let u = u_lambda_via_omega(shape, rep)?;
        let simple = simple_of_positive(&subsystem);
        let (sub_roots, sub_coroots): (Vec<_>, Vec<_>) =
            simple.iter().map(|a| lift_root(a)).unzip();
        let base = identify_based_datum(&ambient, &sub_roots, &sub_coroots)
            .map_err(|e| DrError::InternalInconsistency(format!("identification failed: {e}")))?;
        let twisted = !in_subsystem_weyl_group(&shape.w_ad, &subsystem);
        let torus_quotient = simple.len() < 2;
        let inner_form_label =
            if u == 1 { "GSpin_5(k)".to_string() } else { "GSpin_{4,1}(k)".to_string() };
        rows.push(PacketRow {
            rho_label: shape.character_label(rep),
            rho_rep: rep.clone(),
            x_lambda: x,
            subsystem,
            u_class: u,
            quotient_label: FormLabel { base, twisted, torus_quotient },
            inner_form_label,
        });
    }
    Ok(rows)
}

/// A diagonal element of the dual torus in `GL₄` over a finite field,
/// recorded as exponents of a fixed generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTorusElement {
    pub q: u64,
    /// Modulus of the exponents: `q⁴ − 1` (irreducible case, exponents
    /// in `F_{q⁴}^×`) or `q² − 1` (split case, exponents in `F_{q²}^×`).
    pub modulus: u64,
    /// Four diagonal exponents.
    pub entries: Vec<u64>,
    /// Human-readable diagonal pattern.
    pub pattern: String,
}

/// Build and validate the dual-torus element for a shape.
///
/// - `Irreducible`: one exponent `a` of `τ ∈ F_{q⁴}^×`; requires
///   `τ ∉ F_{q²}` (i.e. `q² + 1 ∤ a`); diagonal `(τ, τ^q, τ^{q³}, τ^{q²})`.
/// - `SplitPair`: exponents `a₁, a₂` of `τ₁, τ₂ ∈ F_{q²}^×`; requires
///   `τᵢ ∉ F_q`, equal norms to `F_q`, `τ₁ ≠ τ₂` and `τ₁ ≠ τ₂^q`;
///   diagonal `(τ₁, τ₂, τ₂^q, τ₁^q)`, or `(τ₂, τ₁, τ₁^q, τ₂^q)` when
///   `swapped` is set.
pub fn dual_torus_element(
    shape: &TRDShape,
    swapped: bool,
    q: u64,
    exps: &[u64],
) -> Result<DualTorusElement, DrError> {
    match shape.kind {
        TRDKind::Irreducible => {
            if exps.len() != 1 {
                return Err(DrError::ConstraintViolation(
                    "irreducible case takes exactly one exponent".into(),
                ));
            }
            let modulus = q * q * q * q - 1;
            let a = exps[0] % modulus;
            if a % (q * q + 1) == 0 {
                return Err(DrError::ConstraintViolation(
                    "τ must lie outside F_{q²} (exponent divisible by q²+1)".into(),
                ));
            }
            let entries =
                vec![a, a * q % modulus, a * q % modulus * q % modulus * q % modulus, a * q % modulus * q % modulus];
            Ok(DualTorusElement {
                q,
                modulus,
                entries,
                pattern: "diag(τ, τ^q, τ^{q³}, τ^{q²})".into(),
            })
        }
        TRDKind::SplitPair => {
            if exps.len() != 2 {
                return Err(DrError::ConstraintViolation(
                    "split case takes exactly two exponents".into(),
                ));
            }
            let modulus = q * q - 1;
            let a1 = exps[0] % modulus;
            let a2 = exps[1] % modulus;
            for (i, a) in [a1, a2].into_iter().enumerate() {
                if a % (q + 1) == 0 {
                    return Err(DrError::ConstraintViolation(format!(
                        "τ{} must lie outside F_q (exponent divisible by q+1)",
                        i + 1
                    )));
                }
            }
            if (q + 1) * a1 % modulus != (q + 1) * a2 % modulus {
                return Err(DrError::ConstraintViolation(
                    "τ₁ and τ₂ must have equal norms to F_q".into(),
                ));
            }
            if a1 == a2 {
                return Err(DrError::ConstraintViolation("τ₁ must differ from τ₂".into()));
            }
            if a1 == a2 * q % modulus {
                return Err(DrError::ConstraintViolation("τ₁ must differ from τ₂^q".into()));
            }
            let (entries, pattern) = if swapped {
                (
                    vec![a2, a1, a1 * q % modulus, a2 * q % modulus],
                    "diag(τ₂, τ₁, τ₁^q, τ₂^q)".to_string(),
                )
            } else {
                (
                    vec![a1, a2, a2 * q % modulus, a1 * q % modulus],
                    "diag(τ₁, τ₂, τ₂^q, τ₁^q)".to_string(),
                )
            };
            Ok(DualTorusElement { q, modulus, entries, pattern })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Q;

    fn qpt(v: &[(i128, i128)]) -> ApartmentPoint {
        ApartmentPoint::new(v.iter().map(|&(n, d)| Q::new(n, d)).collect())
    }

    #[test]
    fn component_groups() {
        let g = component_group(&TRDShape::new(TRDKind::Irreducible));
        assert_eq!(g.invariant_factors, vec![2]);
        // 0 and e₁* hit the two classes.
        assert_ne!(g.class_of(&[0, 0]), g.class_of(&[1, 0]));
        // e₁* and e₂* agree in the quotient.
        assert_eq!(g.class_of(&[1, 0]), g.class_of(&[0, 1]));

        let g = component_group(&TRDShape::new(TRDKind::SplitPair));
        assert_eq!(g.invariant_factors, vec![2, 2]);
        let reps = TRDShape::new(TRDKind::SplitPair).class_representatives();
        let codes: Vec<_> = reps.iter().map(|r| g.class_of(r).unwrap()).collect();
        let mut unique = codes.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), 4, "representatives must hit all four classes");
    }

    #[test]
    fn kottwitz_class_examples() {
        assert_eq!(kottwitz_class(&[0, 0]), 1);
        assert_eq!(kottwitz_class(&[1, 0]), -1);
        assert_eq!(kottwitz_class(&[1, 1]), 1);
        assert_eq!(kottwitz_class(&[0, 1]), -1);
    }

    #[test]
    fn u_lambda_agrees_with_kottwitz_on_all_rows() {
        for kind in [TRDKind::Irreducible, TRDKind::SplitPair] {
            let shape = TRDShape::new(kind);
            for rep in shape.class_representatives() {
                let u = u_lambda_via_omega(&shape, &rep).unwrap();
                assert_eq!(u, kottwitz_class(&rep), "{kind:?}, λ = {rep:?}");
            }
        }
    }

    #[test]
    fn packet_table_irreducible() {
        let rows = packet_table(&TRDShape::new(TRDKind::Irreducible)).unwrap();
        assert_eq!(rows.len(), 2);

        assert_eq!(rows[0].rho_label, "(1)");
        assert_eq!(rows[0].x_lambda, ApartmentPoint::zero(2));
        assert_eq!(rows[0].subsystem, adjoint_positive_roots());
        assert_eq!(rows[0].u_class, 1);
        assert_eq!(rows[0].quotient_label.to_string(), "GSpin_5");
        assert_eq!(rows[0].inner_form_label, "GSpin_5(k)");

        assert_eq!(rows[1].rho_label, "(-1)");
        assert_eq!(rows[1].x_lambda, qpt(&[(1, 2), (1, 2)]));
        assert_eq!(rows[1].subsystem, vec![vec![1, -1], vec![1, 1]]);
        assert_eq!(rows[1].u_class, -1);
        assert_eq!(rows[1].quotient_label.to_string(), "^2GSpin_4");
        assert_eq!(rows[1].inner_form_label, "GSpin_{4,1}(k)");
    }

    #[test]
    fn packet_table_split_pair() {
        let rows = packet_table(&TRDShape::new(TRDKind::SplitPair)).unwrap();
        assert_eq!(rows.len(), 4);

        assert_eq!(rows[0].rho_label, "(1,1)");
        assert_eq!(rows[0].quotient_label.to_string(), "GSpin_5");
        assert_eq!(rows[0].u_class, 1);

        assert_eq!(rows[1].rho_label, "(-1,-1)");
        assert_eq!(rows[1].x_lambda, qpt(&[(1, 2), (1, 2)]));
        assert_eq!(rows[1].subsystem, vec![vec![1, -1], vec![1, 1]]);
        assert_eq!(rows[1].u_class, 1);
        assert_eq!(rows[1].quotient_label.to_string(), "GSpin_4");
        assert_eq!(rows[1].inner_form_label, "GSpin_5(k)");

        assert_eq!(rows[2].rho_label, "(-1,1)");
        assert_eq!(rows[2].x_lambda, qpt(&[(1, 2), (0, 1)]));
        assert_eq!(rows[2].subsystem, vec![vec![0, 1]]);
        assert_eq!(rows[2].u_class, -1);
        assert_eq!(rows[2].quotient_label.to_string(), "(^2GSpin_2xGSpin_3)/GL1");
        assert_eq!(rows[2].inner_form_label, "GSpin_{4,1}(k)");

        assert_eq!(rows[3].rho_label, "(1,-1)");
        assert_eq!(rows[3].x_lambda, qpt(&[(0, 1), (1, 2)]));
        assert_eq!(rows[3].subsystem, vec![vec![1, 0]]);
        assert_eq!(rows[3].u_class, -1);
        assert_eq!(rows[3].quotient_label.to_string(), "(^2GSpin_2xGSpin_3)/GL1");
    }

    #[test]
    fn packet_rows_are_fixed_points() {
        for kind in [TRDKind::Irreducible, TRDKind::SplitPair] {
            let shape = TRDShape::new(kind);
            for (row, rep) in
                packet_table(&shape).unwrap().iter().zip(shape.class_representatives())
            {
                let sigma = AffineWeylElement::new(shape.w_ad.clone(), rep);
                assert_eq!(sigma.act(&row.x_lambda).unwrap(), row.x_lambda);
            }
        }
    }

    #[test]
    fn dual_torus_irreducible() {
        let shape = TRDShape::new(TRDKind::Irreducible);
        let s = dual_torus_element(&shape, false, 3, &[1]).unwrap();
        assert_eq!(s.modulus, 80);
        assert_eq!(s.entries, vec![1, 3, 27, 9]);
        // τ with exponent divisible by q² + 1 = 10 lies in F₉.
        assert_eq!(
            dual_torus_element(&shape, false, 3, &[10]),
            Err(DrError::ConstraintViolation(
                "τ must lie outside F_{q²} (exponent divisible by q²+1)".into()
            ))
        );
    }

    #[test]
    fn dual_torus_split_pair() {
        let shape = TRDShape::new(TRDKind::SplitPair);
        // q = 3: exponents mod 8; norms (1+q)a mod 8 must agree.
        let s = dual_torus_element(&shape, false, 3, &[1, 5]).unwrap();
        assert_eq!(s.modulus, 8);
        assert_eq!(s.entries, vec![1, 5, 7, 3]); // (τ₁, τ₂, τ₂³, τ₁³)
        let s2 = dual_torus_element(&shape, true, 3, &[1, 5]).unwrap();
        assert_eq!(s2.entries, vec![5, 1, 3, 7]);

        // τ₁ ∈ F_q (exponent divisible by q + 1 = 4).
        assert!(matches!(
            dual_torus_element(&shape, false, 3, &[4, 5]),
            Err(DrError::ConstraintViolation(_))
        ));
        // Unequal norms: (1+3)·1 = 4 ≠ (1+3)·2 = 0 mod 8.
        assert!(matches!(
            dual_torus_element(&shape, false, 3, &[1, 2]),
            Err(DrError::ConstraintViolation(_))
        ));
        // τ₁ = τ₂.
        assert!(matches!(
            dual_torus_element(&shape, false, 3, &[1, 1]),
            Err(DrError::ConstraintViolation(_))
        ));
        // τ₁ = τ₂^q: a₁ = 3, a₂ = 1.
        assert!(matches!(
            dual_torus_element(&shape, false, 3, &[3, 1]),
            Err(DrError::ConstraintViolation(_))
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn two_routes_agree_on_arbitrary_cocharacters(
                a in -4i128..5, b in -4i128..5,
                kind in prop_oneof![Just(TRDKind::Irreducible), Just(TRDKind::SplitPair)],
            ) {
                let shape = TRDShape::new(kind);
                let u = u_lambda_via_omega(&shape, &[a, b]).unwrap();
                prop_assert_eq!(u, kottwitz_class(&[a, b]));
            }

            #[test]
            fn kottwitz_class_is_a_homomorphism(
                a in -6i128..7, b in -6i128..7, c in -6i128..7, d in -6i128..7,
            ) {
                let lhs = kottwitz_class(&[a + c, b + d]);
                let rhs = kottwitz_class(&[a, b]) * kottwitz_class(&[c, d]);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
