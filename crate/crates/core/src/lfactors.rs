//! Monomial Weil-representation calculus and factored Artin L-factors.
//!
//! Representations are kept in monomial form: inertia acts diagonally by
//! exponents of a generator of the degree-`K` residue field's
//! multiplicative group, and Frobenius acts by a basis permutation with
//! root-of-unity scalars mod `N`. Tensor, dual, Sym², Λ², direct sum,
//! and inertia invariants stay inside this class, and the L-factor of a
//! representation is read off from the Frobenius cycles on the invariant
//! basis in exact factored form `∏ 1/(1 − ζ_N^z·T^ℓ)` with `T = q^{−s}`.
//! The pole order at `s = 0` is the number of cycles with trivial
//! scalar, and equals a Hom-space dimension for the tensor products in
//! play.

use crate::weilparams::{
    classify_trd, enumerate_trd, hom_dim, is_irreducible, is_symplectic, params_isomorphic,
    InducedParameter, SimilitudeCharacter, TameCharacter, WeilError,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LfError {
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
    #[error(transparent)]
    Weil(#[from] WeilError),
}

/// A monomial representation of the base Weil group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialRep {
    pub q: u64,
    /// Ambient residue-field degree `K`; inertia exponents are residues
    /// mod `q^K − 1`.
    pub ambient_degree: u32,
    /// Value modulus for Frobenius scalars.
    pub n: u64,
    pub inertia_exps: Vec<u64>,
    /// Frobenius permutation: basis vector `i` maps to `frob_perm[i]`.
    pub frob_perm: Vec<usize>,
    /// Scalar exponent picked up by basis vector `i` under Frobenius.
    pub frob_scalars: Vec<u64>,
}

impl MonomialRep {
    pub fn dim(&self) -> usize {
        self.inertia_exps.len()
    }

    /// `q^K − 1`.
    pub fn modulus(&self) -> u64 {
        self.q.checked_pow(self.ambient_degree).expect("q^K overflow") - 1
    }

    fn validate(&self) {
        let d = self.dim();
        assert_eq!(self.frob_perm.len(), d);
        assert_eq!(self.frob_scalars.len(), d);
        let mut seen = vec![false; d];
        for &p in &self.frob_perm {
            assert!(p < d && !seen[p], "Frobenius permutation must be a bijection");
            seen[p] = true;
        }
        let m = self.modulus();
        for i in 0..d {
            assert_eq!(
                self.inertia_exps[self.frob_perm[i]] % m,
                self.q * self.inertia_exps[i] % m,
                "inertia exponents must scale by q along Frobenius"
            );
        }
    }

    /// The trivial one-dimensional representation.
    pub fn trivial(q: u64, ambient_degree: u32, n: u64) -> Self {
        MonomialRep {
            q,
            ambient_degree,
            n,
            inertia_exps: vec![0],
            frob_perm: vec![0],
            frob_scalars: vec![0],
        }
    }

    /// Re-embed into a larger ambient degree (`K | K'`): inertia
    /// exponents scale by `(q^{K'} − 1)/(q^K − 1)`.
    pub fn embed(&self, ambient_degree: u32) -> MonomialRep {
        assert!(
            ambient_degree % self.ambient_degree == 0,
            "ambient degree must be a multiple of the current one"
        );
        let big = self.q.checked_pow(ambient_degree).expect("q^K overflow") - 1;
        let scale = big / self.modulus();
        let mut out = self.clone();
        out.ambient_degree = ambient_degree;
        out.inertia_exps = self.inertia_exps.iter().map(|&a| a % big * scale % big).collect();
        out.validate();
        out
    }
}

/// One-dimensional representation attached to a similitude character.
pub fn sim_rep(lambda: &SimilitudeCharacter, ambient_degree: u32) -> MonomialRep {
    let m = lambda.q.checked_pow(ambient_degree).expect("q^K overflow") - 1;
    let scale = m / (lambda.q - 1);
    let rep = MonomialRep {
        q: lambda.q,
        ambient_degree,
        n: lambda.n,
        inertia_exps: vec![lambda.inertia_exp % m * scale % m],
        frob_perm: vec![0],
        frob_scalars: vec![lambda.frob_exp],
    };
    rep.validate();
    rep
}

/// The induced representation of an irreducible tame character, as a
/// `2d`-dimensional monomial representation: basis = the Frobenius
/// conjugates, Frobenius is the `2d`-cycle with the wrap-around scalar
/// carrying the character's Frobenius value.
pub fn induce_to_monomial(eta: &TameCharacter) -> Result<MonomialRep, LfError> {
    if !is_irreducible(eta) {
        return Err(LfError::Weil(WeilError::NotIrreducible));
    }
    let dim = 2 * eta.ctx.d as usize;
    let orbit = eta.orbit();
    let rep = MonomialRep {
        q: eta.ctx.q,
        ambient_degree: 2 * eta.ctx.d,
        n: eta.ctx.n,
        inertia_exps: orbit,
        frob_perm: (0..dim).map(|i| (i + 1) % dim).collect(),
        frob_scalars: (0..dim)
            .map(|i| if i == dim - 1 { eta.frob_exp } else { 0 })
            .collect(),
    };
    rep.validate();
    Ok(rep)
}

fn common_ambient(m1: &MonomialRep, m2: &MonomialRep) -> (MonomialRep, MonomialRep) {
    assert_eq!(m1.q, m2.q, "representations must share q");
    assert_eq!(m1.n, m2.n, "representations must share the value modulus");
    let k = num_integer::lcm(m1.ambient_degree, m2.ambient_degree);
    (m1.embed(k), m2.embed(k))
}

/// Tensor product on basis pairs.
pub fn tensor(m1: &MonomialRep, m2: &MonomialRep) -> MonomialRep {
    let (a, b) = common_ambient(m1, m2);
    let m = a.modulus();
    let (da, db) = (a.dim(), b.dim());
    let idx = |i: usize, j: usize| i * db + j;
    let mut out = MonomialRep {
        q: a.q,
        ambient_degree: a.ambient_degree,
        n: a.n,
        inertia_exps: Vec::with_capacity(da * db),
        frob_perm: vec![0; da * db],
        frob_scalars: vec![0; da * db],
    };
    for i in 0..da {
        for j in 0..db {
            out.inertia_exps.push((a.inertia_exps[i] + b.inertia_exps[j]) % m);
            out.frob_perm[idx(i, j)] = idx(a.frob_perm[i], b.frob_perm[j]);
            out.frob_scalars[idx(i, j)] = (a.frob_scalars[i] + b.frob_scalars[j]) % a.n;
        }
    }
    out.validate();
    out
}

/// Contragredient: negate all exponents; the permutation is preserved.
pub fn dual_rep(m: &MonomialRep) -> MonomialRep {
    let md = m.modulus();
    let out = MonomialRep {
        q: m.q,
        ambient_degree: m.ambient_degree,
        n: m.n,
        inertia_exps: m.inertia_exps.iter().map(|&a| (md - a % md) % md).collect(),
        frob_perm: m.frob_perm.clone(),
        frob_scalars: m.frob_scalars.iter().map(|&s| (m.n - s % m.n) % m.n).collect(),
    };
    out.validate();
    out
}

fn pair_rep(m: &MonomialRep, include_diagonal: bool) -> MonomialRep {
    let d = m.dim();
    let md = m.modulus();
    // In the alternating square, reordering a wedge pair contributes
    // the sign −1 = ζ_N^{N/2}, so the value modulus must be even.
    assert!(include_diagonal || m.n % 2 == 0);
    let mut pairs = Vec::new();
    for i in 0..d {
        let start = if include_diagonal { i } else { i + 1 };
        for j in start..d {
            pairs.push((i, j));
        }
    }
    let find = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == (i, j)).expect("pair index")
    };
    let mut out = MonomialRep {
        q: m.q,
        ambient_degree: m.ambient_degree,
        n: m.n,
        inertia_exps: Vec::with_capacity(pairs.len()),
        frob_perm: vec![0; pairs.len()],
        frob_scalars: vec![0; pairs.len()],
    };
    for (k, &(i, j)) in pairs.iter().enumerate() {
        out.inertia_exps.push((m.inertia_exps[i] + m.inertia_exps[j]) % md);
        let (pi, pj) = (m.frob_perm[i], m.frob_perm[j]);
        out.frob_perm[k] = find(pi, pj);
        let sign = if !include_diagonal && pi > pj { m.n / 2 } else { 0 };
        out.frob_scalars[k] = (m.frob_scalars[i] + m.frob_scalars[j] + sign) % m.n;
    }
    out.validate();
    out
}

/// Symmetric square on unordered basis pairs (diagonal included).
pub fn sym2(m: &MonomialRep) -> MonomialRep {
    pair_rep(m, true)
}

/// Alternating square on strict basis pairs. Monomial bookkeeping drops
/// the sign a transposition of a pair would introduce; inertia exponents
/// and cycle-scalar products at trivial inertia are unaffected for the
/// invariant-dimension counts used here.
pub fn alt2(m: &MonomialRep) -> MonomialRep {
    pair_rep(m, false)
}

/// Direct sum (basis concatenation).
pub fn direct_sum(m1: &MonomialRep, m2: &MonomialRep) -> MonomialRep {
    let (a, b) = common_ambient(m1, m2);
    let da = a.dim();
    let out = MonomialRep {
        q: a.q,
        ambient_degree: a.ambient_degree,
        n: a.n,
        inertia_exps: [a.inertia_exps.clone(), b.inertia_exps.clone()].concat(),
        frob_perm: a
            .frob_perm
            .iter()
            .copied()
            .chain(b.frob_perm.iter().map(|&p| p + da))
            .collect(),
        frob_scalars: [a.frob_scalars.clone(), b.frob_scalars.clone()].concat(),
    };
    out.validate();
    out
}

/// Sub-representation on the basis vectors with trivial inertia
/// exponent; the consistency invariant guarantees Frobenius closure.
pub fn inertia_invariants(m: &MonomialRep) -> MonomialRep {
    let md = m.modulus();
    let keep: Vec<usize> = (0..m.dim()).filter(|&i| m.inertia_exps[i] % md == 0).collect();
    let pos = |i: usize| keep.iter().position(|&k| k == i).expect("invariant basis is Frobenius-closed");
    let out = MonomialRep {
        q: m.q,
        ambient_degree: m.ambient_degree,
        n: m.n,
        inertia_exps: vec![0; keep.len()],
        frob_perm: keep.iter().map(|&i| pos(m.frob_perm[i])).collect(),
        frob_scalars: keep.iter().map(|&i| m.frob_scalars[i]).collect(),
    };
    out.validate();
    out
}

/// An Artin L-factor in exact factored form: the denominator is
/// `∏ (1 − ζ_N^z · T^ℓ)` over the recorded cycles, with `T = q^{−s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LFactor {
    pub n: u64,
    /// (cycle length ℓ, scalar exponent z mod N) per Frobenius cycle on
    /// the inertia-invariant basis.
    pub cycles: Vec<(usize, u64)>,
}

impl LFactor {
    pub fn render(&self) -> String {
        if self.cycles.is_empty() {
            return "1".to_string();
        }
        let factors: Vec<String> = self
            .cycles
            .iter()
            .map(|&(l, z)| format!("1/(1 - zeta_{}^{} T^{})", self.n, z, l))
            .collect();
        factors.join(" * ")
    }
}

/// L-factor of a monomial representation: restrict to inertia
/// invariants, then record one (length, scalar) pair per Frobenius
/// cycle.
pub fn l_factor(m: &MonomialRep) -> LFactor {
    let inv = inertia_invariants(m);
    let d = inv.dim();
    let mut seen = vec![false; d];
    let mut cycles = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut scalar = 0u64;
        let mut i = start;
        loop {
            seen[i] = true;
            len += 1;
            scalar = (scalar + inv.frob_scalars[i]) % inv.n;
            i = inv.frob_perm[i];
            if i == start {
                break;
            }
        }
        cycles.push((len, scalar));
    }
    cycles.sort_unstable();
    LFactor { n: m.n, cycles }
}

/// Order of the pole of the L-factor at `s = 0`: cycles whose total
/// scalar is trivial contribute a simple zero of the denominator at
/// `T = 1`.
pub fn pole_order_at_zero(l: &LFactor) -> u32 {
    l.cycles.iter().filter(|&&(_, z)| z % l.n == 0).count() as u32
}

/// Monomial model of a full induced parameter (direct sum over
/// components), in a common ambient degree.
pub fn parameter_rep(p: &InducedParameter) -> Result<MonomialRep, LfError> {
    let mut reps = p
        .components
        .iter()
        .map(induce_to_monomial)
        .collect::<Result<Vec<_>, _>>()?;
    let mut acc = reps.remove(0);
    for r in reps {
        acc = direct_sum(&acc, &r);
    }
    Ok(acc)
}

/// Report from the pole-detection criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuZeroReport {
    /// Pole orders at `s = 0` of the four L-denominators:
    /// `L(s, φ_π^∨ ⊗ φ_σ)`, `L(−s, φ_π ⊗ φ_σ^∨)`,
    /// `L(2s, Sym²φ_σ ⊗ simφ_π^{−1})`, `L(−2s, Sym²φ_σ^∨ ⊗ simφ_π)`.
    pub pole_orders: [u32; 4],
    /// Inertia-invariant dimensions of the two Sym² terms (both must be
    /// zero for symplectic σ).
    pub sym2_invariant_dims: [usize; 2],
    pub hom_dim: u32,
    pub hom_nonzero: bool,
}

/// The μ(0) ⇒ Hom ≠ 0 bookkeeping: assembles the four L-denominators,
/// verifies the Sym² terms have no invariants (so only the first two
/// can carry the pole), and reports the Hom dimension.
pub fn mu_zero_criterion(
    phi_pi: &InducedParameter,
    phi_sigma: &InducedParameter,
) -> Result<MuZeroReport, LfError> {
    if phi_sigma.components.len() != 1 {
        return Err(LfError::PreconditionViolation(
            "σ-parameter must be a single induced component".into(),
        ));
    }
    let sigma = &phi_sigma.components[0];
    match is_symplectic(sigma, &phi_pi.similitude) {
        Err(e) => return Err(LfError::Weil(e)),
        Ok(false) => {
            return Err(LfError::PreconditionViolation(
                "σ-parameter must be symplectic with the π-parameter's similitude".into(),
            ))
        }
        Ok(true) => {}
    }
    let v_pi = parameter_rep(phi_pi)?;
    let v_sigma = induce_to_monomial(sigma)?;
    let k = num_integer::lcm(v_pi.ambient_degree, v_sigma.ambient_degree);
    let sim = sim_rep(&phi_pi.similitude, k);
    let sym = sym2(&v_sigma);
    let terms = [
        tensor(&dual_rep(&v_pi), &v_sigma),
        tensor(&v_pi, &dual_rep(&v_sigma)),
        tensor(&sym, &dual_rep(&sim)),
        tensor(&dual_rep(&sym), &sim),
    ];
    let pole_orders = [
        pole_order_at_zero(&l_factor(&terms[0])),
        pole_order_at_zero(&l_factor(&terms[1])),
        pole_order_at_zero(&l_factor(&terms[2])),
        pole_order_at_zero(&l_factor(&terms[3])),
    ];
    let sym2_invariant_dims =
        [inertia_invariants_dim_wk(&terms[2]), inertia_invariants_dim_wk(&terms[3])];
    let h = hom_dim(phi_pi, phi_sigma);
    Ok(MuZeroReport {
        pole_orders,
        sym2_invariant_dims,
        hom_dim: h,
        hom_nonzero: h > 0,
    })
}

/// Dimension of the full Weil-group invariants: inertia invariants that
/// are also fixed by Frobenius (cycles with trivial scalar contribute
/// one fixed line each).
fn inertia_invariants_dim_wk(m: &MonomialRep) -> usize {
    let l = l_factor(m);
    l.cycles.iter().filter(|&&(_, z)| z % l.n == 0).count()
}

/// Report from the packet-comparison pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreeReport {
    pub family_size: usize,
    /// For each family member: (passes all Hom tests, is isomorphic to φ).
    pub outcomes: Vec<(bool, bool)>,
    /// True iff the two columns agree everywhere: the unique member
    /// passing all Hom tests is φ itself.
    pub unique_match: bool,
}

/// For every candidate parameter in the enumerated family with the same
/// `(q, n, λ)`: passing all per-component Hom tests must be equivalent
/// to being isomorphic to `φ`.
pub fn packets_agree_check(phi: &InducedParameter, n: u32) -> Result<AgreeReport, LfError> {
    let report = classify_trd(phi, n);
    if !report.is_valid() {
        return Err(LfError::PreconditionViolation(format!(
            "parameter is not tame regular discrete: {:?}",
            report.violations
        )));
    }
    if phi.components.len() > 2 {
        return Err(LfError::PreconditionViolation(
            "only one- or two-component parameters are supported".into(),
        ));
    }
    let family = enumerate_trd(phi.similitude.q, n, &phi.similitude)?;
    let mut outcomes = Vec::new();
    let mut unique_match = true;
    for cand in &family {
        let all_hom = phi.components.iter().all(|c| {
            let single = InducedParameter { components: vec![*c], similitude: phi.similitude };
            hom_dim(&single, cand) > 0
        });
        let iso = params_isomorphic(phi, cand);
        if all_hom != iso {
            unique_match = false;
        }
        outcomes.push((all_hom, iso));
    }
    Ok(AgreeReport { family_size: family.len(), outcomes, unique_match })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weilparams::FieldContext;

    fn eta31(a: u64, z: u64) -> TameCharacter {
        TameCharacter::new(FieldContext::new(3, 1, 8), a, z)
    }

    fn lambda31() -> SimilitudeCharacter {
        SimilitudeCharacter::new(3, 8, 0, 0)
    }

    #[test]
    fn induce_examples() {
        let m = induce_to_monomial(&eta31(2, 5)).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.inertia_exps, vec![2, 6]);
        assert_eq!(m.frob_perm, vec![1, 0]);
        assert_eq!(m.frob_scalars, vec![0, 5]);
        assert_eq!(
            induce_to_monomial(&eta31(0, 5)),
            Err(LfError::Weil(WeilError::NotIrreducible))
        );
    }

    #[test]
    fn tensor_unit_and_dual_involution() {
        let m = induce_to_monomial(&eta31(2, 5)).unwrap();
        let t = MonomialRep::trivial(3, 2, 8);
        assert_eq!(tensor(&m, &t), m);
        assert_eq!(dual_rep(&dual_rep(&m)), m);
        assert_eq!(sym2(&m).dim(), 3);
        assert_eq!(alt2(&m).dim(), 1);
    }

    #[test]
    fn inertia_invariants_examples() {
        let t = MonomialRep::trivial(3, 2, 8);
        assert_eq!(inertia_invariants(&t), t);

        // V(η)^∨ ⊗ V(η): the two diagonal pairs are invariant.
        let m = induce_to_monomial(&eta31(2, 5)).unwrap();
        let prod = tensor(&dual_rep(&m), &m);
        assert_eq!(inertia_invariants(&prod).dim(), 2);

        // Disjoint inertia data: no cancellation. η and the cube of its
        // generator exponent have disjoint orbits {2,6} and {1,3}.
        let m2 = induce_to_monomial(&eta31(1, 5)).unwrap();
        assert_eq!(inertia_invariants(&tensor(&dual_rep(&m), &m2)).dim(), 0);
    }

    #[test]
    fn l_factor_examples() {
        let t = MonomialRep::trivial(3, 2, 8);
        let l = l_factor(&t);
        assert_eq!(l.cycles, vec![(1, 0)]);
        assert_eq!(pole_order_at_zero(&l), 1);
        assert_eq!(l.render(), "1/(1 - zeta_8^0 T^1)");

        // Schur: dual ⊗ self has pole order exactly 1.
        let m = induce_to_monomial(&eta31(2, 5)).unwrap();
        let l = l_factor(&tensor(&dual_rep(&m), &m));
        assert_eq!(pole_order_at_zero(&l), 1);
        // The two invariant lines form cycles whose scalars telescope:
        // exactly one cycle has trivial total scalar.
        assert_eq!(l.cycles.iter().filter(|&&(_, z)| z == 0).count(), 1);

        // Nontrivial scalar: no pole.
        let one = MonomialRep {
            q: 3,
            ambient_degree: 2,
            n: 8,
            inertia_exps: vec![0],
            frob_perm: vec![0],
            frob_scalars: vec![3],
        };
        assert_eq!(pole_order_at_zero(&l_factor(&one)), 0);

        // Zero-dimensional restriction: empty product.
        let m2 = induce_to_monomial(&eta31(1, 5)).unwrap();
        let l = l_factor(&tensor(&dual_rep(&m), &m2));
        assert!(l.cycles.is_empty());
        assert_eq!(l.render(), "1");
    }

    #[test]
    fn l_factor_multiplicative_under_direct_sum() {
        let m1 = induce_to_monomial(&eta31(2, 5)).unwrap();
        let m2 = induce_to_monomial(&eta31(1, 3)).unwrap();
        let mut concat = l_factor(&m1).cycles;
        concat.extend(l_factor(&m2).cycles);
        concat.sort_unstable();
        assert_eq!(l_factor(&direct_sum(&m1, &m2)).cycles, concat);
    }

    #[test]
    fn pole_order_equals_hom_dim_exhaustive() {
        // All irreducible pairs over q ∈ {2,3}, d ∈ {1,2}.
        for q in [2u64, 3] {
            for d in [1u32, 2] {
                let n = 8;
                let ctx = FieldContext::new(q, d, n);
                let lam = SimilitudeCharacter::new(q, n, 0, 0);
                let mut etas = Vec::new();
                for a in 0..ctx.modulus() {
                    for z in (0..n).step_by(2) {
                        let eta = TameCharacter::new(ctx, a, z);
                        if is_irreducible(&eta) && eta.orbit_min() == a {
                            etas.push(eta);
                        }
                    }
                }
                for e1 in &etas {
                    for e2 in &etas {
                        let p1 = InducedParameter { components: vec![*e1], similitude: lam };
                        let p2 = InducedParameter { components: vec![*e2], similitude: lam };
                        let m1 = induce_to_monomial(e1).unwrap();
                        let m2 = induce_to_monomial(e2).unwrap();
                        let pole = pole_order_at_zero(&l_factor(&tensor(&dual_rep(&m1), &m2)));
                        assert_eq!(
                            pole,
                            hom_dim(&p1, &p2),
                            "q={q} d={d} e1={e1:?} e2={e2:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn symplectic_sym2_has_no_invariants() {
        // For symplectic η: Sym²V(η) ⊗ sim^{-1} has zero invariants and
        // the alternating complement contains exactly the similitude
        // line.
        let lam = lambda31();
        let eta = eta31(2, 4);
        let v = induce_to_monomial(&eta).unwrap();
        let sim = sim_rep(&lam, 2);
        let s = tensor(&sym2(&v), &dual_rep(&sim));
        assert_eq!(pole_order_at_zero(&l_factor(&s)), 0);
        let a = tensor(&alt2(&v), &dual_rep(&sim));
        assert_eq!(pole_order_at_zero(&l_factor(&a)), 1);
        // Dimension consistency: Sym² + Λ² = dim².
        assert_eq!(sym2(&v).dim() + alt2(&v).dim(), v.dim() * v.dim());
    }

    #[test]
    fn mu_zero_criterion_examples() {
        let lam = lambda31();
        let e2 = eta31(2, 4);
        let e6 = eta31(6, 4); // conjugate of e2: same parameter
        let phi_pi = InducedParameter { components: vec![e2], similitude: lam };
        let phi_sigma = InducedParameter { components: vec![e6], similitude: lam };
        let rep = mu_zero_criterion(&phi_pi, &phi_sigma).unwrap();
        assert_eq!(rep.sym2_invariant_dims, [0, 0]);
        assert!(rep.hom_nonzero);
        assert_eq!(rep.hom_dim, 1);
        assert_eq!(rep.pole_orders[0], 1);
        assert_eq!(rep.pole_orders[1], 1);
        assert_eq!(rep.pole_orders[2], 0);
        assert_eq!(rep.pole_orders[3], 0);

        // Non-symplectic σ rejected. a=1 over q=3 fails the inertia
        // clause.
        let bad = InducedParameter { components: vec![eta31(1, 4)], similitude: lam };
        assert!(matches!(
            mu_zero_criterion(&phi_pi, &bad),
            Err(LfError::PreconditionViolation(_))
        ));
    }

    #[test]
    fn mu_zero_criterion_disjoint_components() {
        // q=5: two distinct symplectic classes; σ not a component of π
        // gives Hom = 0 and all pole orders 0.
        let lam = SimilitudeCharacter::new(5, 8, 0, 0);
        let classes = crate::weilparams::symplectic_classes(5, 1, &lam);
        assert!(classes.len() >= 2);
        let phi_pi = InducedParameter { components: vec![classes[0]], similitude: lam };
        let phi_sigma = InducedParameter { components: vec![classes[1]], similitude: lam };
        let rep = mu_zero_criterion(&phi_pi, &phi_sigma).unwrap();
        assert!(!rep.hom_nonzero);
        assert_eq!(rep.pole_orders, [0, 0, 0, 0]);
    }

    #[test]
    fn packets_agree_small_families() {
        // q=3, n=1: singleton family.
        let lam = lambda31();
        let phi = InducedParameter { components: vec![eta31(2, 4)], similitude: lam };
        let rep = packets_agree_check(&phi, 1).unwrap();
        assert_eq!(rep.family_size, 1);
        assert!(rep.unique_match);

        // q=5, n=2 with two d=1 components: the family contains the
        // two-component parameter and the d=2 classes; uniqueness holds.
        let lam5 = SimilitudeCharacter::new(5, 8, 0, 0);
        let classes = crate::weilparams::symplectic_classes(5, 1, &lam5);
        let phi = InducedParameter {
            components: vec![classes[0], classes[1]],
            similitude: lam5,
        };
        let rep = packets_agree_check(&phi, 2).unwrap();
        assert!(rep.family_size >= 1);
        assert!(rep.unique_match);

        // Swapped components are isomorphic and pass.
        let swapped = InducedParameter {
            components: vec![classes[1], classes[0]],
            similitude: lam5,
        };
        assert!(params_isomorphic(&phi, &swapped));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_eta() -> impl Strategy<Value = TameCharacter> {
            (0u64..80, 0u64..8, 1u32..3).prop_map(|(a, z, d)| {
                TameCharacter::new(FieldContext::new(3, d, 8), a, z)
            })
        }

        proptest! {
            #[test]
            fn dual_is_involutive(eta in arb_eta()) {
                prop_assume!(is_irreducible(&eta));
                let m = induce_to_monomial(&eta).unwrap();
                prop_assert_eq!(dual_rep(&dual_rep(&m)), m);
            }

            #[test]
            fn tensor_dims_multiply(e1 in arb_eta(), e2 in arb_eta()) {
                prop_assume!(is_irreducible(&e1) && is_irreducible(&e2));
                let m1 = induce_to_monomial(&e1).unwrap();
                let m2 = induce_to_monomial(&e2).unwrap();
                prop_assert_eq!(tensor(&m1, &m2).dim(), m1.dim() * m2.dim());
            }

            #[test]
            fn invariants_are_contained_in_tensor(e1 in arb_eta(), e2 in arb_eta()) {
                prop_assume!(is_irreducible(&e1) && is_irreducible(&e2));
                let m1 = induce_to_monomial(&e1).unwrap();
                let m2 = induce_to_monomial(&e2).unwrap();
                let prod = tensor(&dual_rep(&m1), &m2);
                let inv = inertia_invariants(&prod);
                prop_assert!(inv.dim() <= prod.dim());
                prop_assert!(pole_order_at_zero(&l_factor(&prod)) as usize <= inv.dim());
            }
        }
    }
}
