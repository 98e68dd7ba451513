//! Affine Weyl group machinery on the apartment.
//!
//! Elements act on `𝒜 = X∨ ⊗ ℝ` as `x ↦ A·x + λ` with an integral
//! finite part `A` (an element of the finite Weyl group) and an integral
//! translation `λ`. Affine roots are pairs (gradient, constant) viewed as
//! affine functionals `x ↦ ⟨a, x⟩ + c`. Everything is exact: points have
//! rational coordinates, group elements are integer matrices plus integer
//! translation vectors.
//!
//! The module provides:
//! - group actions, fixed points of elliptic elements, and the root
//!   subsystem attached to a point of the apartment;
//! - longest elements of finite (spherical) reflection subgroups and the
//!   derived involutions `v[α, J]`;
//! - the stabilizer of the fundamental alcove (diagram automorphisms and
//!   central translations) and the generator sets it produces for the
//!   four parahoric cases used downstream;
//! - the decomposition of an extended affine Weyl element into an
//!   alcove-stabilizing part and a reflection-group part.

use crate::lattice::{q, rational_solve_int, IMat, Q};
use num_traits::{Signed, Zero};
use std::collections::{HashSet, VecDeque};
use thiserror::Error;

/// Errors from affine Weyl computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AffWeylError {
    /// Vector or matrix dimensions do not match the ambient rank.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// `1 − A` is singular, so the element has no unique fixed point.
    #[error("finite part is not elliptic: 1 - A is singular")]
    NotElliptic,
    /// The reflection group generated by the given roots is not finite.
    #[error("reflection group is not finite (spherical) within the search cap")]
    NotSpherical,
    /// The subset is outside the supported stabilizer-computation catalog.
    #[error("no valid stabilizer generator set for the given subset")]
    UnsupportedTheta,
}

/// A point of the apartment with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApartmentPoint {
    pub coords: Vec<Q>,
}

impl ApartmentPoint {
    pub fn new(coords: Vec<Q>) -> Self {
        ApartmentPoint { coords }
    }

    pub fn zero(rank: usize) -> Self {
        ApartmentPoint { coords: vec![Q::zero(); rank] }
    }

    /// Point with the given integer coordinates.
    pub fn from_ints(v: &[i128]) -> Self {
        ApartmentPoint { coords: v.iter().map(|&x| q(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// An affine functional `x ↦ ⟨gradient, x⟩ + constant` whose gradient is
/// a root of the ambient finite root system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub gradient: Vec<i128>,
    pub constant: i128,
}

impl AffineRoot {
    pub fn new(gradient: Vec<i128>, constant: i128) -> Self {
        AffineRoot { gradient, constant }
    }

    pub fn eval(&self, p: &ApartmentPoint) -> Q {
        assert_eq!(self.gradient.len(), p.dim(), "affine root / point dimension mismatch");
        self.gradient
            .iter()
            .zip(&p.coords)
            .map(|(&a, x)| q(a) * x)
            .sum::<Q>()
            + q(self.constant)
    }

    pub fn negated(&self) -> Self {
        AffineRoot {
            gradient: self.gradient.iter().map(|&a| -a).collect(),
            constant: -self.constant,
        }
    }
}

/// An element of the extended affine Weyl group: `x ↦ finite·x + translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeylElement {
    pub finite: IMat,
    pub translation: Vec<i128>,
}

impl AffineWeylElement {
    pub fn new(finite: IMat, translation: Vec<i128>) -> Self {
        assert_eq!(finite.nrows, finite.ncols, "finite part must be square");
        assert_eq!(finite.nrows, translation.len(), "translation length must match rank");
        AffineWeylElement { finite, translation }
    }

    pub fn identity(rank: usize) -> Self {
        AffineWeylElement { finite: IMat::identity(rank), translation: vec![0; rank] }
    }

    /// Pure translation `x ↦ x + λ`.
    pub fn from_translation(lambda: &[i128]) -> Self {
        AffineWeylElement {
            finite: IMat::identity(lambda.len()),
            translation: lambda.to_vec(),
        }
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.iter().all(|&t| t == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.finite.is_identity()
    }

    /// Apply the element to an apartment point.
    pub fn act(&self, p: &ApartmentPoint) -> Result<ApartmentPoint, AffWeylError> {
        if p.dim() != self.rank() {
            return Err(AffWeylError::DimensionMismatch { expected: self.rank(), got: p.dim() });
        }
        let mut out = self.finite.mul_vec_q(&p.coords);
        for (o, &t) in out.iter_mut().zip(&self.translation) {
            *o += q(t);
        }
        Ok(ApartmentPoint::new(out))
    }

    /// Apply the element to an integral cocharacter.
    pub fn act_lattice(&self, v: &[i128]) -> Vec<i128> {
        let mut out = self.finite.mul_vec(v);
        for (o, &t) in out.iter_mut().zip(&self.translation) {
            *o += t;
        }
        out
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in composition");
        let finite = self.finite.mul(&other.finite);
        let mut translation = self.finite.mul_vec(&other.translation);
        for (t, &s) in translation.iter_mut().zip(&self.translation) {
            *t += s;
        }
        AffineWeylElement { finite, translation }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let ainv = self.finite.inverse_unimodular();
        let translation = ainv.mul_vec(&self.translation).iter().map(|&t| -t).collect();
        AffineWeylElement { finite: ainv, translation }
    }

    pub fn pow(&self, k: u32) -> AffineWeylElement {
        let mut out = AffineWeylElement::identity(self.rank());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// Pullback action on an affine functional: `(g·f)(x) = f(g⁻¹·x)`.
    pub fn act_affine_root(&self, r: &AffineRoot) -> AffineRoot {
        let inv = self.finite.inverse_unimodular();
        // New gradient: (A⁻¹)ᵀ · a; new constant: c − ⟨a, A⁻¹·λ⟩.
        let gradient = inv.transpose().mul_vec(&r.gradient);
        let shift: i128 = r
            .gradient
            .iter()
            .zip(inv.mul_vec(&self.translation))
            .map(|(&a, t)| a * t)
            .sum();
        AffineRoot { gradient, constant: r.constant - shift }
    }

    /// Flattened integer key for hashing and deduplication.
    fn key(&self) -> Vec<i128> {
        let mut k = Vec::with_capacity(self.rank() * (self.rank() + 1));
        for i in 0..self.finite.nrows {
            k.extend(self.finite.row(i));
        }
        k.extend(self.translation.iter().copied());
        k
    }
}

/// A finite root system living on the apartment, with a fixed assignment
/// of coroots (in apartment coordinates) to roots. The context also
/// records a basis for the central direction (the common kernel of all
/// root gradients on the cocharacter side) and the characters that cut
/// that direction out.
#[derive(Debug, Clone)]
pub struct AffineContext {
    pub rank: usize,
    /// (root gradient in X-coordinates, coroot in X∨-coordinates) pairs.
    pub pairs: Vec<(Vec<i128>, Vec<i128>)>,
    /// Cocharacter basis of the central direction.
    pub central: Vec<Vec<i128>>,
    /// Characters vanishing on all coroots, cutting out the central part.
    pub central_chars: Vec<Vec<i128>>,
}

impl AffineContext {
    /// The rank-2 adjoint system of type B₂: roots ±e₁±e₂, ±e₁, ±e₂ with
    /// adjoint coroots (short roots e_i pair with 2e_i*). No central
    /// direction.
    pub fn so5_adjoint() -> Self {
        let mut pairs = Vec::new();
        for s in [1i128, -1] {
            pairs.push((vec![s, -s], vec![s, -s])); // ±(e1 − e2)
            pairs.push((vec![s, s], vec![s, s])); // ±(e1 + e2)
            pairs.push((vec![s, 0], vec![2 * s, 0])); // ±e1
            pairs.push((vec![0, s], vec![0, 2 * s])); // ±e2
        }
        AffineContext { rank: 2, pairs, central: vec![], central_chars: vec![] }
    }

    /// The rank-(n+1) spin-similitude system of type B_n in coordinates
    /// (e₀, e₁, …, e_n): roots ±e_i±e_j and ±e_i (i, j ≥ 1) where short
    /// roots pair with 2e_i* − e₀* and sums with e_i* + e_j* − e₀*. The
    /// central direction is e₀*.
    pub fn gspin_odd(n: usize) -> Self {
        let rank = n + 1;
        let unit = |i: usize, s: i128| -> Vec<i128> {
            let mut v = vec![0i128; rank];
            v[i] = s;
            v
        };
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for s in [1i128, -1] {
                    // ±(e_i − e_j), coroot ±(e_i* − e_j*)
                    let mut a = unit(i, s);
                    a[j] = -s;
                    let av = a.clone();
                    pairs.push((a, av));
                    // ±(e_i + e_j), coroot ±(e_i* + e_j* − e₀*)
                    let mut a = unit(i, s);
                    a[j] = s;
                    let mut av = a.clone();
                    av[0] = -s;
                    pairs.push((a, av));
                }
            }
        }
        for i in 1..=n {
            for s in [1i128, -1] {
                // ±e_i, coroot ±(2e_i* − e₀*)
                let a = unit(i, s);
                let mut av = unit(i, 2 * s);
                av[0] = -s;
                pairs.push((a, av));
            }
        }
        AffineContext {
            rank,
            pairs,
            central: vec![unit(0, 1)],
            central_chars: vec![unit(0, 1)],
        }
    }

    pub fn coroot_of(&self, gradient: &[i128]) -> Option<&Vec<i128>> {
        self.pairs.iter().find(|(a, _)| a == gradient).map(|(_, av)| av)
    }

    pub fn is_root(&self, gradient: &[i128]) -> bool {
        self.pairs.iter().any(|(a, _)| a == gradient)
    }

    /// The affine reflection in the zero set of the given affine root:
    /// `x ↦ x − (⟨a, x⟩ + c)·a∨`.
    pub fn reflection(&self, r: &AffineRoot) -> AffineWeylElement {
        let av = self
            .coroot_of(&r.gradient)
            .unwrap_or_else(|| panic!("gradient {:?} is not a root of the context", r.gradient));
        let mut finite = IMat::identity(self.rank);
        for i in 0..self.rank {
            for j in 0..self.rank {
                finite[(i, j)] -= av[i] * r.gradient[j];
            }
        }
        let translation = av.iter().map(|&c| -r.constant * c).collect();
        AffineWeylElement { finite, translation }
    }

    /// All roots whose functional takes integer values at `p` (pullback
    /// of the reductive-quotient subsystem), in the order given.
    pub fn positive_gradients(&self) -> Vec<Vec<i128>> {
        // "Positive" = lexicographically positive; only used for alcove
        // addresses, where any half-system works.
        self.pairs
            .iter()
            .map(|(a, _)| a.clone())
            .filter(|a| a.iter().find(|&&x| x != 0).map(|&x| x > 0).unwrap_or(false))
            .collect()
    }
}

/// The roots among `roots` taking integer values at `p`, order-preserving.
pub fn subsystem_at(p: &ApartmentPoint, roots: &[Vec<i128>]) -> Vec<Vec<i128>> {
    roots
        .iter()
        .filter(|a| {
            assert_eq!(a.len(), p.dim(), "root / point dimension mismatch");
            a.iter()
                .zip(&p.coords)
                .map(|(&c, x)| q(c) * x)
                .sum::<Q>()
                .is_integer()
        })
        .cloned()
        .collect()
}

/// The unique fixed point of an elliptic element: solves `(1 − A)·x = λ`.
pub fn fixed_point(g: &AffineWeylElement) -> Result<ApartmentPoint, AffWeylError> {
    let n = g.rank();
    let mut m = IMat::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] -= g.finite[(i, j)];
        }
    }
    if m.det() == 0 {
        return Err(AffWeylError::NotElliptic);
    }
    let x = rational_solve_int(&m, &g.translation).ok_or(AffWeylError::NotElliptic)?;
    let p = ApartmentPoint::new(x);
    debug_assert_eq!(g.act(&p).unwrap(), p);
    Ok(p)
}

const GROUP_CAP: usize = 200_000;

/// Breadth-first closure of a generating set of affine Weyl elements.
/// Deterministic order: identity first, then by word length and
/// generator index. Errors with `NotSpherical` if the group exceeds the
/// internal cap.
pub fn generated_group(gens: &[AffineWeylElement]) -> Result<Vec<AffineWeylElement>, AffWeylError> {
    let rank = gens.first().map_or(0, |g| g.rank());
    let id = AffineWeylElement::identity(rank);
    let mut seen: HashSet<Vec<i128>> = HashSet::new();
    seen.insert(id.key());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h.key()) {
                if out.len() >= GROUP_CAP {
                    return Err(AffWeylError::NotSpherical);
                }
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

/// The longest element of the reflection group generated by `j`: the
/// unique `t` with `t² = 1` sending `j` to `−j` (as affine functionals).
pub fn longest_element(
    ctx: &AffineContext,
    j: &[AffineRoot],
) -> Result<AffineWeylElement, AffWeylError> {
    if j.is_empty() {
        return Ok(AffineWeylElement::identity(ctx.rank));
    }
    let gens: Vec<AffineWeylElement> = j.iter().map(|r| ctx.reflection(r)).collect();
    let group = generated_group(&gens)?;
    let neg: HashSet<AffineRoot> = j.iter().map(|r| r.negated()).collect();
    let mut found = None;
    for t in &group {
        if !t.compose(t).is_identity() {
            continue;
        }
        if j.iter().all(|r| neg.contains(&t.act_affine_root(r))) {
            assert!(found.is_none(), "longest element is not unique");
            found = Some(t.clone());
        }
    }
    Ok(found.expect("finite reflection group must have a longest element"))
}

/// The involution `v[α, J] = u·t` where `u` is the longest element of
/// the group generated by `J ∪ {α}` and `t` the longest element for `J`.
pub fn v_element(
    ctx: &AffineContext,
    alpha: &AffineRoot,
    j: &[AffineRoot],
) -> Result<AffineWeylElement, AffWeylError> {
    let mut ja = j.to_vec();
    if !ja.contains(alpha) {
        ja.push(alpha.clone());
    }
    let u = longest_element(ctx, &ja)?;
    let t = longest_element(ctx, j)?;
    let v = u.compose(&t);
    // When v fixes J setwise it must be an involution; verify.
    let jset: HashSet<AffineRoot> = j.iter().cloned().collect();
    if j.iter().all(|r| jset.contains(&v.act_affine_root(r))) {
        assert!(v.compose(&v).is_identity(), "v[α, J] with v·J = J must be an involution");
    }
    Ok(v)
}

/// The stabilizer of the fundamental alcove of a simple affine base:
/// diagram automorphisms plus translations in the central direction.
#[derive(Debug, Clone)]
pub struct OmegaGroup {
    pub generators: Vec<AffineWeylElement>,
    /// Human-readable relation satisfied by the generators.
    pub relation: String,
}

impl OmegaGroup {
    /// All elements obtainable as ±1 powers products — only used for
    /// small checks; the group may be infinite (central translations),
    /// so this returns generators and their inverses.
    pub fn generator_closure(&self) -> Vec<AffineWeylElement> {
        let mut out = vec![];
        for g in &self.generators {
            out.push(g.clone());
            out.push(g.inverse());
        }
        out
    }
}

fn finite_weyl_group(ctx: &AffineContext) -> Result<Vec<AffineWeylElement>, AffWeylError> {
    let gens: Vec<AffineWeylElement> = ctx
        .positive_gradients()
        .iter()
        .map(|a| ctx.reflection(&AffineRoot::new(a.clone(), 0)))
        .collect();
    generated_group(&gens)
}

/// Compute the stabilizer of the fundamental alcove of the base `pi`.
///
/// Candidate finite parts range over the finite Weyl group; for each
/// that permutes the gradients of `pi`, the translation is solved from
/// the constants (central coordinates normalized to zero) and kept when
/// integral. A diagram automorphism is retained as a generator only if
/// its square is the identity or a single central translation step; the
/// stabilizer of the alcove in the abstract extended group can be larger,
/// but those extra automorphisms are not realized in the groups whose
/// buildings these bases describe. If no retained automorphism reaches
/// the central translation, the primitive central translation is added
/// as a generator.
pub fn omega_group(ctx: &AffineContext, pi: &[AffineRoot]) -> Result<OmegaGroup, AffWeylError> {
    let wo = finite_weyl_group(ctx)?;
    let piset: HashSet<AffineRoot> = pi.iter().cloned().collect();
    let gradients: Vec<&Vec<i128>> = pi.iter().map(|r| &r.gradient).collect();
    let mut autos: Vec<AffineWeylElement> = Vec::new();
    for w in &wo {
        if w.finite.is_identity() {
            continue;
        }
        // Pullback gradient action: a ↦ (A⁻¹)ᵀ a.
        let grad_t = w.finite.inverse_unimodular().transpose();
        let images: Vec<Vec<i128>> = gradients.iter().map(|a| grad_t.mul_vec(a)).collect();
        let perm: Option<Vec<usize>> = images
            .iter()
            .map(|im| gradients.iter().position(|a| *a == im))
            .collect();
        let Some(perm) = perm else { continue };
        let mut used = HashSet::new();
        if !perm.iter().all(|&p| used.insert(p)) {
            continue;
        }
        // Solve ⟨a_{π(i)}, λ⟩ = c_i − c_{π(i)}, λ central part zero.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (i, &pi_i) in perm.iter().enumerate() {
            rows.push(pi[pi_i].gradient.clone());
            rhs.push(pi[i].constant - pi[pi_i].constant);
        }
        for c in &ctx.central_chars {
            rows.push(c.clone());
            rhs.push(0);
        }
        let m = IMat::from_rows(&rows);
        let Some(sol) = rational_solve_int(&m, &rhs) else { continue };
        if !sol.iter().all(|x| x.is_integer()) {
            continue;
        }
        let lambda: Vec<i128> = sol.iter().map(|x| x.to_integer()).collect();
        let omega = AffineWeylElement::new(w.finite.clone(), lambda);
        if pi.iter().all(|r| piset.contains(&omega.act_affine_root(r))) {
            autos.push(omega);
        }
    }
    // Keep automorphisms whose square is at most one central step.
    let central_ok = |v: &[i128]| -> bool {
        v.iter().all(|&x| x == 0)
            || ctx
                .central
                .iter()
                .any(|c| *v == *c || v.iter().zip(c).all(|(&a, &b)| a == -b))
    };
    let accepted: Vec<AffineWeylElement> = autos
        .into_iter()
        .filter(|g| {
            let sq = g.compose(g);
            sq.finite.is_identity() && central_ok(&sq.translation)
        })
        .collect();
    let reaches_central = accepted.iter().any(|g| {
        let sq = g.compose(g);
        !sq.translation.iter().all(|&x| x == 0)
    });
    let mut generators = accepted;
    let mut relation = if generators.is_empty() {
        String::from("central translations only")
    } else if reaches_central {
        String::from("omega^2 = T(central)")
    } else {
        String::from("omega^2 = 1")
    };
    if !reaches_central {
        if let Some(c) = ctx.central.first() {
            generators.push(AffineWeylElement::from_translation(c));
            if relation == "central translations only" {
                relation = String::from("T(central) only");
            }
        }
    }
    Ok(OmegaGroup { generators, relation })
}

/// A generating set for the normalizer-stabilizer of `Θ` inside the
/// extended affine Weyl group: the `v[α, Θ]` involutions for the simple
/// affine roots outside `Θ`, together with the minimal powers of the
/// alcove-stabilizer generators that preserve `Θ`.
#[derive(Debug, Clone)]
pub struct SThetaGenerators {
    /// (α, v[α, Θ]) for each α in the base but outside Θ.
    pub v_elements: Vec<(AffineRoot, AffineWeylElement)>,
    /// Contribution of the alcove stabilizer (a diagram automorphism
    /// preserving Θ, or a central translation).
    pub omega_part: Vec<AffineWeylElement>,
}

pub fn s_theta(
    ctx: &AffineContext,
    pi: &[AffineRoot],
    theta: &[AffineRoot],
) -> Result<SThetaGenerators, AffWeylError> {
    let theta_set: HashSet<AffineRoot> = theta.iter().cloned().collect();
    assert!(
        theta.iter().all(|t| pi.contains(t)) && theta.len() < pi.len(),
        "theta must be a proper subset of the base"
    );
    let preserves_theta = |g: &AffineWeylElement| -> bool {
        theta.iter().all(|r| theta_set.contains(&g.act_affine_root(r)))
    };
    let mut v_elements = Vec::new();
    for alpha in pi.iter().filter(|a| !theta_set.contains(a)) {
        let v = v_element(ctx, alpha, theta)?;
        if !preserves_theta(&v) {
            return Err(AffWeylError::UnsupportedTheta);
        }
        v_elements.push((alpha.clone(), v));
    }
    let omega = omega_group(ctx, pi)?;
    let mut omega_part = Vec::new();
    for g in &omega.generators {
        let mut p = g.clone();
        let mut ok = false;
        for _ in 0..4 {
            if preserves_theta(&p) {
                ok = true;
                break;
            }
            p = g.compose(&p);
        }
        if !ok {
            return Err(AffWeylError::UnsupportedTheta);
        }
        omega_part.push(p);
    }
    Ok(SThetaGenerators { v_elements, omega_part })
}

/// A generic interior point of the fundamental alcove of `pi` (central
/// coordinates zero): a weighted average of the alcove's vertices chosen
/// so that no root functional takes an integer value there.
pub fn alcove_interior_point(
    ctx: &AffineContext,
    pi: &[AffineRoot],
) -> Result<ApartmentPoint, AffWeylError> {
    let mut vertices: Vec<Vec<Q>> = Vec::new();
    for skip in 0..pi.len() {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (i, r) in pi.iter().enumerate() {
            if i == skip {
                continue;
            }
            rows.push(r.gradient.clone());
            rhs.push(-r.constant);
        }
        for c in &ctx.central_chars {
            rows.push(c.clone());
            rhs.push(0);
        }
        let m = IMat::from_rows(&rows);
        let v = rational_solve_int(&m, &rhs)
            .unwrap_or_else(|| panic!("base walls must intersect in a vertex"));
        vertices.push(v);
    }
    for base in [2i128, 3, 5, 7] {
        let mut weight = q(1);
        let mut total = Q::zero();
        let mut acc = vec![Q::zero(); ctx.rank];
        for v in &vertices {
            for (a, x) in acc.iter_mut().zip(v) {
                *a += weight * x;
            }
            total += weight;
            weight *= q(base);
        }
        let p = ApartmentPoint::new(acc.into_iter().map(|x| x / total).collect());
        let generic = ctx.pairs.iter().all(|(a, _)| {
            let val: Q = a.iter().zip(&p.coords).map(|(&c, x)| q(c) * x).sum();
            !val.is_integer()
        });
        let interior = pi.iter().all(|r| r.eval(&p).is_positive());
        if generic && interior {
            return Ok(p);
        }
    }
    panic!("could not find a generic interior point of the alcove");
}

fn alcove_address(ctx: &AffineContext, p: &ApartmentPoint) -> Vec<i128> {
    ctx.positive_gradients()
        .iter()
        .map(|a| {
            let val: Q = a.iter().zip(&p.coords).map(|(&c, x)| q(c) * x).sum();
            assert!(!val.is_integer(), "alcove address of a non-generic point");
            val.floor().to_integer()
        })
        .collect()
}

/// Whether two generic points lie in the same alcove.
pub fn same_alcove(ctx: &AffineContext, p: &ApartmentPoint, r: &ApartmentPoint) -> bool {
    alcove_address(ctx, p) == alcove_address(ctx, r)
}

/// Decompose `g = ω ∘ w°` with `ω` stabilizing the fundamental alcove of
/// `pi` and `w°` in the reflection group generated by the walls of `pi`.
/// `ω` is found by walking the alcove `g·C` back to `C` through walls.
pub fn omega_decompose(
    ctx: &AffineContext,
    pi: &[AffineRoot],
    g: &AffineWeylElement,
) -> Result<(AffineWeylElement, AffineWeylElement), AffWeylError> {
    let p0 = alcove_interior_point(ctx, pi)?;
    let mut p = g.act(&p0)?;
    let mut acc = AffineWeylElement::identity(ctx.rank);
    let mut steps = 0usize;
    loop {
        let neg = pi.iter().find(|r| r.eval(&p).is_negative());
        match neg {
            None => break,
            Some(r) => {
                let s = ctx.reflection(r);
                p = s.act(&p)?;
                acc = s.compose(&acc);
                steps += 1;
                assert!(steps < 100_000, "alcove walk did not terminate");
            }
        }
    }
    let omega = acc.compose(g);
    // ω stabilizes the alcove, hence permutes its walls.
    let piset: HashSet<AffineRoot> = pi.iter().cloned().collect();
    assert!(
        pi.iter().all(|r| piset.contains(&omega.act_affine_root(r))),
        "alcove-stabilizing part must permute the base"
    );
    let wcirc = omega.inverse().compose(g);
    debug_assert_eq!(&omega.compose(&wcirc), g);
    Ok((omega, wcirc))
}

/// Walk outward from the fundamental alcove until an alcove whose
/// closure contains `x` is found; returns the reflection-group element
/// carrying the fundamental alcove there (breadth-first, so the gallery
/// is shortest and, among shortest, first in generator order).
pub fn alcove_containing(
    ctx: &AffineContext,
    pi: &[AffineRoot],
    x: &ApartmentPoint,
) -> Result<AffineWeylElement, AffWeylError> {
    let in_closure = |g: &AffineWeylElement| -> bool {
        let y = g.inverse().act(x).unwrap();
        pi.iter().all(|r| !r.eval(&y).is_negative())
    };
    let id = AffineWeylElement::identity(ctx.rank);
    if in_closure(&id) {
        return Ok(id);
    }
    let gens: Vec<AffineWeylElement> = pi.iter().map(|r| ctx.reflection(r)).collect();
    let mut seen: HashSet<Vec<i128>> = HashSet::new();
    seen.insert(id.key());
    let mut queue = VecDeque::from([id]);
    let mut visited = 0usize;
    while let Some(g) = queue.pop_front() {
        visited += 1;
        assert!(visited < 100_000, "point is too far from the fundamental alcove");
        for s in &gens {
            let h = g.compose(s);
            if seen.insert(h.key()) {
                if in_closure(&h) {
                    return Ok(h);
                }
                queue.push_back(h);
            }
        }
    }
    unreachable!("breadth-first alcove search exhausted a finite frontier");
}

/// Reflections through all affine hyperplanes containing `x`; generates
/// the isotropy reflection group of `x`.
pub fn stabilizer_reflections(ctx: &AffineContext, x: &ApartmentPoint) -> Vec<AffineWeylElement> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (a, _) in &ctx.pairs {
        let val: Q = a.iter().zip(&x.coords).map(|(&c, y)| q(c) * y).sum();
        if val.is_integer() {
            let r = AffineRoot::new(a.clone(), -val.to_integer());
            let s = ctx.reflection(&r);
            if seen.insert(s.key()) {
                out.push(s);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// Catalog bases
// ---------------------------------------------------------------------

fn e(rank: usize, i: usize, s: i128) -> Vec<i128> {
    let mut v = vec![0i128; rank];
    v[i] = s;
    v
}

/// Simple affine base for the rank-2 adjoint B₂ system:
/// `{1 − e₁ − e₂, e₁ − e₂, e₂}`.
pub fn base_so5() -> (AffineContext, Vec<AffineRoot>) {
    let ctx = AffineContext::so5_adjoint();
    let pi = vec![
        AffineRoot::new(vec![-1, -1], 1),
        AffineRoot::new(vec![1, -1], 0),
        AffineRoot::new(vec![0, 1], 0),
    ];
    (ctx, pi)
}

/// The base Π⁺ for the split odd spin-similitude group of rank n = 2m+2:
/// `{1 − e₁ − e₂, e₁ − e₂, …, e_{n−1} − e_n, e_n}`.
pub fn base_pi_plus(m: usize) -> (AffineContext, Vec<AffineRoot>) {
    let n = 2 * m + 2;
    let ctx = AffineContext::gspin_odd(n);
    let rank = n + 1;
    let mut pi = Vec::new();
    let mut a0 = e(rank, 1, -1);
    a0[2] = -1;
    pi.push(AffineRoot::new(a0, 1));
    for i in 1..n {
        let mut a = e(rank, i, 1);
        a[i + 1] = -1;
        pi.push(AffineRoot::new(a, 0));
    }
    pi.push(AffineRoot::new(e(rank, n, 1), 0));
    (ctx, pi)
}

/// The base Π⁻ built from the alternative simple system
/// `{e₃ − e₄, e₄ − e₁, e₁ − e₂, e₂}` of the rank-4 split group:
/// `{1 − e₃ − e₄, e₃ − e₄, e₄ − e₁, e₁ − e₂, e₂}`.
pub fn base_pi_minus() -> (AffineContext, Vec<AffineRoot>) {
    let ctx = AffineContext::gspin_odd(4);
    let rank = 5;
    let mut a0 = e(rank, 3, -1);
    a0[4] = -1;
    let mut a2 = e(rank, 4, 1);
    a2[1] = -1;
    let mut a1 = e(rank, 3, 1);
    a1[4] = -1;
    let mut a3 = e(rank, 1, 1);
    a3[2] = -1;
    let pi = vec![
        AffineRoot::new(a0, 1),
        AffineRoot::new(a1, 0),
        AffineRoot::new(a2, 0),
        AffineRoot::new(a3, 0),
        AffineRoot::new(e(rank, 2, 1), 0),
    ];
    (ctx, pi)
}

/// The base Π† of the rank-5 inner form:
/// `{1 − e₅, e₅ − e₁, e₁ − e₂, e₂ − e₃, e₃ − e₄, e₄}`.
pub fn base_pi_dagger() -> (AffineContext, Vec<AffineRoot>) {
    let ctx = AffineContext::gspin_odd(5);
    let rank = 6;
    let mut pi = vec![AffineRoot::new(e(rank, 5, -1), 1)];
    let chain = [5usize, 1, 2, 3, 4];
    for w in chain.windows(2) {
        let mut a = e(rank, w[0], 1);
        a[w[1]] = -1;
        pi.push(AffineRoot::new(a, 0));
    }
    pi.push(AffineRoot::new(e(rank, 4, 1), 0));
    (ctx, pi)
}

/// The base Π‡ of the rank-3 inner form:
/// `{1 − e₁, e₁ − e₂, e₂ − e₃, e₃}`.
pub fn base_pi_ddagger() -> (AffineContext, Vec<AffineRoot>) {
    let ctx = AffineContext::gspin_odd(3);
    let rank = 4;
    let mut pi = vec![AffineRoot::new(e(rank, 1, -1), 1)];
    for i in 1..3 {
        let mut a = e(rank, i, 1);
        a[i + 1] = -1;
        pi.push(AffineRoot::new(a, 0));
    }
    pi.push(AffineRoot::new(e(rank, 3, 1), 0));
    (ctx, pi)
}

/// Indices removed from each base to form the parahoric subset Θ.
pub fn theta_removed_indices(case: ParahoricCase, m: usize) -> Vec<usize> {
    match case {
        ParahoricCase::Plus => vec![0, 2 * m],
        ParahoricCase::Minus => vec![2, 4],
        ParahoricCase::Dagger => vec![1, 5],
        ParahoricCase::DoubleDagger => vec![0, 2],
    }
}

/// The four parahoric cases used downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParahoricCase {
    Plus,
    Minus,
    Dagger,
    DoubleDagger,
}

/// Base and Θ for a parahoric case (the `m` parameter only affects the
/// `Plus` case; the others are at their fixed ranks).
pub fn parahoric_base(case: ParahoricCase, m: usize) -> (AffineContext, Vec<AffineRoot>, Vec<AffineRoot>) {
    let (ctx, pi) = match case {
        ParahoricCase::Plus => base_pi_plus(m),
        ParahoricCase::Minus => base_pi_minus(),
        ParahoricCase::Dagger => base_pi_dagger(),
        ParahoricCase::DoubleDagger => base_pi_ddagger(),
    };
    let removed = theta_removed_indices(case, m);
    let theta: Vec<AffineRoot> = pi
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, r)| r.clone())
        .collect();
    (ctx, pi, theta)
}
