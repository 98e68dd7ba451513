//! Tame characters of unramified Weil groups as exponent arithmetic.
//!
//! A tame character of the degree-`2d` unramified Weil group is modeled
//! by two residues: an inertia exponent (a character of the multiplicative
//! group of the residue field of degree `2d`, i.e. a residue mod
//! `q^{2d} − 1`) and a Frobenius value (a root-of-unity exponent mod an
//! even modulus `N`). Similitude characters of the base Weil group carry
//! a Frobenius-invariant inertia part (mod `q − 1`) plus a Frobenius
//! value.
//!
//! On top of this model the module provides Frobenius conjugation,
//! irreducibility of the induced representation, the symplectic-with-
//! prescribed-similitude test (with an independent brute-force matrix
//! oracle), classification and enumeration of the discrete parameters
//! built from such characters, unramified self-dual twist counting, and
//! Mackey-style Hom dimensions.

use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeilError {
    #[error("character is not irreducible (the Frobenius orbit of the inertia exponent is degenerate)")]
    NotIrreducible,
    #[error("search space too large: {value} exceeds the guard {limit}")]
    TooLarge { value: u128, limit: u128 },
    #[error("field contexts are incompatible: {0}")]
    ContextMismatch(String),
}

/// Ambient data for a tame character: residue field size `q`, half-degree
/// `d` (the character lives on the degree-`2d` unramified extension), and
/// the even modulus `N` for root-of-unity values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldContext {
    pub q: u64,
    pub d: u32,
    pub n: u64,
}

impl FieldContext {
    pub fn new(q: u64, d: u32, n: u64) -> Self {
        assert!(q >= 2, "q must be at least 2");
        assert!(d >= 1, "degree parameter must be positive");
        assert!(n >= 2 && n % 2 == 0, "value modulus must be even");
        FieldContext { q, d, n }
    }

    /// `q^{2d} − 1`, the order of the tame inertia quotient.
    pub fn modulus(&self) -> u64 {
        self.q.checked_pow(2 * self.d).expect("q^{2d} overflow") - 1
    }
}

/// A tame character of the degree-`2d` unramified Weil group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameCharacter {
    pub ctx: FieldContext,
    /// Character of the tame inertia quotient, as a residue mod `q^{2d} − 1`.
    pub inertia_exp: u64,
    /// Value on the degree-`2d` Frobenius, as a residue mod `N`.
    pub frob_exp: u64,
}

impl TameCharacter {
    pub fn new(ctx: FieldContext, inertia_exp: u64, frob_exp: u64) -> Self {
        TameCharacter {
            ctx,
            inertia_exp: inertia_exp % ctx.modulus(),
            frob_exp: frob_exp % ctx.n,
        }
    }

    /// Inertia exponents of the `2d` Frobenius conjugates, in order.
    pub fn orbit(&self) -> Vec<u64> {
        let m = self.ctx.modulus();
        let mut out = Vec::with_capacity(2 * self.ctx.d as usize);
        let mut a = self.inertia_exp;
        for _ in 0..2 * self.ctx.d {
            out.push(a);
            a = a * self.ctx.q % m;
        }
        out
    }

    /// Smallest inertia exponent in the Frobenius orbit (canonical
    /// representative of the isomorphism class of the induction).
    pub fn orbit_min(&self) -> u64 {
        self.orbit().into_iter().min().unwrap()
    }
}

/// A tame similitude character of the base Weil group: Frobenius-invariant
/// inertia part (mod `q − 1`) plus a Frobenius value (mod `N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimilitudeCharacter {
    pub q: u64,
    pub n: u64,
    /// Residue mod `q − 1`.
    pub inertia_exp: u64,
    /// Value on Frobenius, mod `N`.
    pub frob_exp: u64,
}

impl SimilitudeCharacter {
    pub fn new(q: u64, n: u64, inertia_exp: u64, frob_exp: u64) -> Self {
        assert!(n >= 2 && n % 2 == 0, "value modulus must be even");
        let im = if q > 2 { inertia_exp % (q - 1) } else { 0 };
        SimilitudeCharacter { q, n, inertia_exp: im, frob_exp: frob_exp % n }
    }
}

/// A direct sum of inductions of tame characters with a common
/// similitude character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedParameter {
    pub components: Vec<TameCharacter>,
    pub similitude: SimilitudeCharacter,
}

impl InducedParameter {
    /// Total dimension: `Σ 2·d_i`.
    pub fn dim(&self) -> u32 {
        self.components.iter().map(|c| 2 * c.ctx.d).sum()
    }
}

/// Conjugate by the `i`-th power of Frobenius: inertia exponent scales
/// by `q^i`; the Frobenius value (central in the model) is unchanged.
pub fn frob_conjugate(eta: &TameCharacter, i: i64) -> TameCharacter {
    let period = 2 * eta.ctx.d as i64;
    let k = i.rem_euclid(period) as u32;
    let m = eta.ctx.modulus();
    let mut a = eta.inertia_exp;
    for _ in 0..k {
        a = a * eta.ctx.q % m;
    }
    TameCharacter { ctx: eta.ctx, inertia_exp: a, frob_exp: eta.frob_exp }
}

/// Whether the induction of `η` to the base Weil group is irreducible:
/// the `2d` Frobenius conjugates must be pairwise distinct.
pub fn is_irreducible(eta: &TameCharacter) -> bool {
    let orbit = eta.orbit();
    let mut sorted = orbit.clone();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == orbit.len()
}

/// Restriction of a similitude character to the degree-`2d` subgroup:
/// the inertia part lifts through the norm-compatible embedding (scale
/// by `(q^{2d} − 1)/(q − 1)`); the Frobenius value is the value on the
/// `2d`-th Frobenius power.
pub fn restrict_similitude(lambda: &SimilitudeCharacter, ctx: &FieldContext) -> TameCharacter {
    assert_eq!(lambda.q, ctx.q, "similitude character must share q");
    assert_eq!(lambda.n, ctx.n, "similitude character must share the value modulus");
    let m = ctx.modulus();
    let scale = m / (ctx.q - 1);
    TameCharacter::new(
        *ctx,
        lambda.inertia_exp % m * scale % m,
        2 * ctx.d as u64 % ctx.n * lambda.frob_exp % ctx.n,
    )
}

/// Whether the induction of `η` is symplectic with similitude `λ`:
/// the product `η · η^{Frob^d}` must equal `λ` restricted (inertia and
/// Frobenius-value clauses) and the value of `η` on the `2d`-th
/// Frobenius must be minus the value of `λ` on the `d`-th.
pub fn is_symplectic(eta: &TameCharacter, lambda: &SimilitudeCharacter) -> Result<bool, WeilError> {
    if !is_irreducible(eta) {
        return Err(WeilError::NotIrreducible);
    }
    let ctx = eta.ctx;
    let m = ctx.modulus();
    let n = ctx.n;
    let r = restrict_similitude(lambda, &ctx);
    let qd = ctx.q.checked_pow(ctx.d).expect("q^d overflow") % m;
    let inertia_ok = eta.inertia_exp * (1 + qd) % m == r.inertia_exp;
    let product_ok = 2 * eta.frob_exp % n == r.frob_exp;
    let sign_ok =
        eta.frob_exp == (ctx.d as u64 * lambda.frob_exp + n / 2) % n;
    Ok(inertia_ok && product_ok && sign_ok)
}

/// Independent brute-force check of the symplectic condition: build the
/// `2d × 2d` monomial matrices of the induced representation (inertia
/// acts diagonally by the conjugate exponents; Frobenius is the cycle
/// with the wrap-around scalar) and search for a nondegenerate
/// alternating form `J` with `φ(w)ᵀ J φ(w) = λ(w)·J` for all `w`.
///
/// Regularity forces any such `J` to be monomial, so the search ranges
/// over fixed-point-free involutions of the basis with exponent
/// propagation around the Frobenius cycle.
pub fn symplectic_oracle(
    eta: &TameCharacter,
    lambda: &SimilitudeCharacter,
) -> Result<bool, WeilError> {
    if !is_irreducible(eta) {
        return Err(WeilError::NotIrreducible);
    }
    let ctx = eta.ctx;
    let dim = 2 * ctx.d as usize;
    let m = ctx.modulus();
    let n = ctx.n as i64;
    let orbit = eta.orbit();
    let r = restrict_similitude(lambda, &ctx);
    // Frobenius permutation i ↦ i + 1 with scalar η(Frob^{2d}) at wrap.
    let p = |i: usize| (i + 1) % dim;
    let scalar = |i: usize| if i == dim - 1 { eta.frob_exp as i64 } else { 0 };
    // Candidate supports: fixed-point-free involutions σ with the inertia
    // compatibility a_k + a_{σ(k)} ≡ r_in. Regularity makes σ(k) unique
    // if it exists at all.
    let mut sigma = vec![usize::MAX; dim];
    for k in 0..dim {
        for l in 0..dim {
            if (orbit[k] + orbit[l]) % m == r.inertia_exp {
                if sigma[k] != usize::MAX {
                    return Err(WeilError::ContextMismatch(
                        "inertia pairing is not unique; character not regular".into(),
                    ));
                }
                sigma[k] = l;
            }
        }
    }
    if sigma.iter().any(|&l| l == usize::MAX) || (0..dim).any(|k| sigma[sigma[k]] != k) {
        return Ok(false);
    }
    if (0..dim).any(|k| sigma[k] == k) {
        // A fixed point would need a symmetric diagonal entry: not
        // alternating.
        return Ok(false);
    }
    // Frobenius equivariance needs σ to commute with the cycle.
    if (0..dim).any(|k| sigma[p(k)] != p(sigma[k])) {
        return Ok(false);
    }
    // Solve for exponents x_k of J_{k,σ(k)} mod N:
    //   x_k ≡ x_{p(k)} + s_k + s_{σ(k)} − λ(Frob)   (Frobenius step)
    //   x_{σ(k)} ≡ x_k + N/2                        (alternating)
    let mut x = vec![None::<i64>; dim];
    x[0] = Some(0);
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..dim {
            // Frobenius relation between x_k and x_{p(k)}.
            let c = (scalar(k) + scalar(sigma[k]) - lambda.frob_exp as i64).rem_euclid(n);
            match (x[k], x[p(k)]) {
                (Some(a), None) => {
                    x[p(k)] = Some((a - c).rem_euclid(n));
                    changed = true;
                }
                (None, Some(b)) => {
                    x[k] = Some((b + c).rem_euclid(n));
                    changed = true;
                }
                (Some(a), Some(b)) => {
                    if a != (b + c).rem_euclid(n) {
                        return Ok(false);
                    }
                }
                (None, None) => {}
            }
            // Alternating relation between x_k and x_{σ(k)}.
            match (x[k], x[sigma[k]]) {
                (Some(a), None) => {
                    x[sigma[k]] = Some((a + n / 2).rem_euclid(n));
                    changed = true;
                }
                (None, Some(b)) => {
                    x[k] = Some((b + n / 2).rem_euclid(n));
                    changed = true;
                }
                (Some(a), Some(b)) => {
                    if b != (a + n / 2).rem_euclid(n) {
                        return Ok(false);
                    }
                }
                (None, None) => {}
            }
        }
    }
    Ok(x.iter().all(|v| v.is_some()))
}

/// Report from the discrete-parameter classification: empty violation
/// list means the parameter is a valid tame regular discrete parameter
/// of the stated dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrdReport {
    pub violations: Vec<String>,
}

impl TrdReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Whether two tame characters of equal degree induce isomorphic
/// representations: same Frobenius value and inertia exponents in the
/// same Frobenius orbit.
pub fn induced_isomorphic(a: &TameCharacter, b: &TameCharacter) -> bool {
    a.ctx == b.ctx && a.frob_exp == b.frob_exp && a.orbit().contains(&b.inertia_exp)
}

/// Classify a parameter as tame regular discrete of dimension `2n`:
/// degrees must sum to `n`, every component must be irreducible and
/// symplectic with the common similitude, and no two components of
/// equal degree may be Frobenius-conjugate.
pub fn classify_trd(param: &InducedParameter, n: u32) -> TrdReport {
    let mut violations = Vec::new();
    let total: u32 = param.components.iter().map(|c| c.ctx.d).sum();
    if total != n {
        violations.push(format!("component degrees sum to {total}, expected {n}"));
    }
    for (i, c) in param.components.iter().enumerate() {
        if c.ctx.q != param.similitude.q || c.ctx.n != param.similitude.n {
            violations.push(format!("component {} has an incompatible field context", i + 1));
            continue;
        }
        match is_symplectic(c, &param.similitude) {
            Err(WeilError::NotIrreducible) => {
                violations.push(format!("component {} is not irreducible", i + 1));
            }
            Err(e) => violations.push(format!("component {}: {e}", i + 1)),
            Ok(false) => violations.push(format!(
                "component {} is not symplectic with the given similitude",
                i + 1
            )),
            Ok(true) => {}
        }
    }
    for i in 0..param.components.len() {
        for j in (i + 1)..param.components.len() {
            let (a, b) = (&param.components[i], &param.components[j]);
            if a.ctx.d == b.ctx.d && induced_isomorphic(a, b) {
                violations.push(format!(
                    "components {} and {} are Frobenius-conjugate",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    TrdReport { violations }
}

/// Whether two parameters are isomorphic: same similitude and the same
/// multiset of component classes (orbit representative, Frobenius value,
/// degree).
pub fn params_isomorphic(p1: &InducedParameter, p2: &InducedParameter) -> bool {
    if p1.similitude != p2.similitude {
        return false;
    }
    let key = |p: &InducedParameter| {
        let mut v: Vec<(u32, u64, u64)> =
            p.components.iter().map(|c| (c.ctx.d, c.orbit_min(), c.frob_exp)).collect();
        v.sort_unstable();
        v
    };
    key(p1) == key(p2)
}

const ENUM_GUARD: u128 = 10_000_000;

/// All valid degree-`d` component classes for the given `q` and `λ`,
/// one canonical (orbit-minimal) representative each, sorted.
pub fn symplectic_classes(q: u64, d: u32, lambda: &SimilitudeCharacter) -> Vec<TameCharacter> {
    let ctx = FieldContext::new(q, d, lambda.n);
    let z = (d as u64 * lambda.frob_exp + lambda.n / 2) % lambda.n;
    let mut out = Vec::new();
    for a in 0..ctx.modulus() {
        let eta = TameCharacter::new(ctx, a, z);
        if is_irreducible(&eta)
            && eta.orbit_min() == a
            && is_symplectic(&eta, lambda) == Ok(true)
        {
            out.push(eta);
        }
    }
    out
}

/// Integer partitions of `n` into positive parts, non-increasing.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `k`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in start..=n.saturating_sub(k) {
            prefix.push(i);
            rec(i + 1, n, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Enumerate all tame regular discrete parameters of dimension `2n`
/// over `q` with similitude `λ`, one representative per isomorphism
/// class. Guarded by `q^{2n} ≤ 10⁷`.
pub fn enumerate_trd(
    q: u64,
    n: u32,
    lambda: &SimilitudeCharacter,
) -> Result<Vec<InducedParameter>, WeilError> {
    let size = (q as u128).pow(2 * n);
    if size > ENUM_GUARD {
        return Err(WeilError::TooLarge { value: size, limit: ENUM_GUARD });
    }
    let mut by_degree: HashMap<u32, Vec<TameCharacter>> = HashMap::new();
    let mut out = Vec::new();
    for partition in partitions(n) {
        // Multiplicity of each degree in the partition.
        let mut mult: Vec<(u32, usize)> = Vec::new();
        for &d in &partition {
            match mult.last_mut() {
                Some((deg, k)) if *deg == d => *k += 1,
                _ => mult.push((d, 1)),
            }
        }
        for (d, _) in &mult {
            by_degree
                .entry(*d)
                .or_insert_with(|| symplectic_classes(q, *d, lambda));
        }
        // Choose pairwise-distinct classes for repeated degrees.
        let mut selections: Vec<Vec<TameCharacter>> = vec![vec![]];
        for (d, k) in &mult {
            let pool = &by_degree[d];
            let mut next = Vec::new();
            for sel in &selections {
                for subset in subsets(pool.len(), *k) {
                    let mut sel2 = sel.clone();
                    sel2.extend(subset.iter().map(|&i| pool[i]));
                    next.push(sel2);
                }
            }
            selections = next;
        }
        for components in selections {
            out.push(InducedParameter { components, similitude: *lambda });
        }
    }
    Ok(out)
}

/// Count unramified self-dual twist classes of the induction of `η`:
/// twists `χ` of order dividing `4d`, modulo twists of order dividing
/// `2d` (which do not change the parameter), such that the twisted
/// parameter is isomorphic to its dual twisted back by the similitude.
/// Returns 0 or 2; when 2, the two twisted parameters are verified to
/// be non-isomorphic.
pub fn count_self_dual_twists(
    eta: &TameCharacter,
    lambda: &SimilitudeCharacter,
) -> Result<u32, WeilError> {
    if !is_irreducible(eta) {
        return Err(WeilError::NotIrreducible);
    }
    let ctx = eta.ctx;
    let n = ctx.n;
    let fourd = 4 * ctx.d as u64;
    if n % fourd != 0 {
        return Err(WeilError::ContextMismatch(format!(
            "value modulus {n} must be divisible by 4d = {fourd} to host the twists"
        )));
    }
    let m = ctx.modulus();
    let r = restrict_similitude(lambda, &ctx);
    // Twist class k ∈ {0, 1}: χ(Frob) = ζ^{k·N/4d}; restriction to the
    // degree-2d subgroup shifts the Frobenius value by 2d·k·N/4d = k·N/2.
    let mut passing = Vec::new();
    for k in 0..2u64 {
        let twisted = TameCharacter::new(ctx, eta.inertia_exp, (eta.frob_exp + k * n / 2) % n);
        // Dual-then-similitude partner of the twisted character.
        let partner = TameCharacter::new(
            ctx,
            (m + r.inertia_exp % m - twisted.inertia_exp % m) % m,
            (n + r.frob_exp - twisted.frob_exp % n) % n,
        );
        if induced_isomorphic(&twisted, &partner) {
            passing.push(twisted);
        }
    }
    if passing.len() == 2 {
        assert!(
            !induced_isomorphic(&passing[0], &passing[1]),
            "the two twist classes must be non-isomorphic"
        );
    }
    Ok(passing.len() as u32)
}

/// `dim Hom` between two induced parameters over the base Weil group,
/// by the Mackey count: one per component pair of equal degree whose
/// characters are Frobenius-conjugate with equal Frobenius values.
pub fn hom_dim(p1: &InducedParameter, p2: &InducedParameter) -> u32 {
    let mut total = 0;
    for a in &p1.components {
        for b in &p2.components {
            if a.ctx.d == b.ctx.d && induced_isomorphic(a, b) {
                total += 1;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx31() -> FieldContext {
        FieldContext::new(3, 1, 8)
    }

    /// Trivial-on-inertia similitude with λ(Frob) = 1 (exponent 0).
    fn lambda31() -> SimilitudeCharacter {
        SimilitudeCharacter::new(3, 8, 0, 0)
    }

    #[test]
    fn frob_conjugate_examples() {
        let eta = TameCharacter::new(ctx31(), 2, 3);
        assert_eq!(frob_conjugate(&eta, 1).inertia_exp, 6);
        assert_eq!(frob_conjugate(&eta, 2), eta);
        let zero = TameCharacter::new(ctx31(), 0, 3);
        for i in 0..5 {
            assert_eq!(frob_conjugate(&zero, i).inertia_exp, 0);
        }
        // ℤ-action: i then j equals i + j.
        for a in 0..8 {
            let eta = TameCharacter::new(ctx31(), a, 0);
            for i in -3i64..4 {
                for j in -3i64..4 {
                    assert_eq!(
                        frob_conjugate(&frob_conjugate(&eta, i), j),
                        frob_conjugate(&eta, i + j)
                    );
                }
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&TameCharacter::new(ctx31(), 2, 0)));
        assert!(!is_irreducible(&TameCharacter::new(ctx31(), 0, 0)));
        assert!(!is_irreducible(&TameCharacter::new(ctx31(), 4, 0)));
    }

    #[test]
    fn restrict_similitude_examples() {
        let triv = SimilitudeCharacter::new(3, 8, 0, 0);
        let r = restrict_similitude(&triv, &ctx31());
        assert_eq!((r.inertia_exp, r.frob_exp), (0, 0));

        let l = SimilitudeCharacter::new(3, 8, 1, 0);
        assert_eq!(restrict_similitude(&l, &ctx31()).inertia_exp, 4);

        let l = SimilitudeCharacter::new(3, 8, 0, 1);
        assert_eq!(restrict_similitude(&l, &ctx31()).frob_exp, 2);
    }

    #[test]
    fn symplectic_examples() {
        let l = lambda31();
        // Sign clause pins the Frobenius value to N/2 = 4.
        assert_eq!(is_symplectic(&TameCharacter::new(ctx31(), 2, 4), &l), Ok(true));
        assert_eq!(is_symplectic(&TameCharacter::new(ctx31(), 6, 4), &l), Ok(true));
        assert_eq!(is_symplectic(&TameCharacter::new(ctx31(), 1, 4), &l), Ok(false));
        // Wrong sign: frob value d·λ(Frob) = 0 instead of 4.
        assert_eq!(is_symplectic(&TameCharacter::new(ctx31(), 2, 0), &l), Ok(false));
        // Precondition.
        assert_eq!(
            is_symplectic(&TameCharacter::new(ctx31(), 0, 4), &l),
            Err(WeilError::NotIrreducible)
        );
    }

    #[test]
    fn symplectic_is_conjugation_stable() {
        for q in [2u64, 3] {
            for d in [1u32, 2] {
                let n = 8 * d as u64;
                let l = SimilitudeCharacter::new(q, n, 0, 2);
                let ctx = FieldContext::new(q, d, n);
                for a in 0..ctx.modulus() {
                    for z in 0..n {
                        let eta = TameCharacter::new(ctx, a, z);
                        if !is_irreducible(&eta) {
                            continue;
                        }
                        let s = is_symplectic(&eta, &l).unwrap();
                        for i in 0..2 * d as i64 {
                            assert_eq!(
                                is_symplectic(&frob_conjugate(&eta, i), &l).unwrap(),
                                s,
                                "q={q} d={d} a={a} z={z} i={i}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_matches_predicate_exhaustively_d1() {
        for q in [2u64, 3] {
            let n = 8;
            for li in 0..q.saturating_sub(1).max(1) {
                for lf in 0..n {
                    let l = SimilitudeCharacter::new(q, n, li, lf);
                    let ctx = FieldContext::new(q, 1, n);
                    for a in 0..ctx.modulus() {
                        for z in 0..n {
                            let eta = TameCharacter::new(ctx, a, z);
                            if !is_irreducible(&eta) {
                                continue;
                            }
                            assert_eq!(
                                symplectic_oracle(&eta, &l),
                                is_symplectic(&eta, &l),
                                "q={q} λ=({li},{lf}) a={a} z={z}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classify_trd_examples() {
        let l = lambda31();
        let e2 = TameCharacter::new(ctx31(), 2, 4);
        let e1 = TameCharacter::new(ctx31(), 1, 4);
        // Two non-conjugate symplectic components: need a second class.
        // Over q=3, d=1 only {2,6} is symplectic, so use q=5 for a
        // genuinely valid two-component example.
        let l5 = SimilitudeCharacter::new(5, 8, 0, 0);
        let c5 = symplectic_classes(5, 1, &l5);
        assert!(c5.len() >= 2, "need two classes over q=5: {c5:?}");
        let p = InducedParameter { components: vec![c5[0], c5[1]], similitude: l5 };
        assert!(classify_trd(&p, 2).is_valid());

        // Conjugate components violate regularity.
        let p = InducedParameter {
            components: vec![e2, frob_conjugate(&e2, 1)],
            similitude: l,
        };
        let report = classify_trd(&p, 2);
        assert!(report.violations.iter().any(|v| v.contains("Frobenius-conjugate")));

        // Degree sum violation.
        let p = InducedParameter { components: vec![e2], similitude: l };
        assert!(classify_trd(&p, 2)
            .violations
            .iter()
            .any(|v| v.contains("sum")));

        // Non-symplectic component flagged.
        let p = InducedParameter { components: vec![e1, e2], similitude: l };
        assert!(classify_trd(&p, 2)
            .violations
            .iter()
            .any(|v| v.contains("not symplectic")));
    }

    #[test]
    fn enumerate_trd_examples() {
        let l = lambda31();
        let fam = enumerate_trd(3, 1, &l).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].components[0].orbit_min(), 2);

        // q=2, n=1: single orbit {1,2}; inertia clause a·3 ≡ 0 mod 3
        // always holds, so exactly one class.
        let l2 = SimilitudeCharacter::new(2, 8, 0, 0);
        assert_eq!(enumerate_trd(2, 1, &l2).unwrap().len(), 1);

        // Guard.
        assert!(matches!(
            enumerate_trd(101, 4, &l),
            Err(WeilError::TooLarge { .. })
        ));
    }

    #[test]
    fn enumerate_matches_brute_force_count() {
        // Independent count at q=3, n=1: orbit-minimal a with the
        // predicate true.
        let l = lambda31();
        let brute = (0..8u64)
            .filter(|&a| {
                let eta = TameCharacter::new(ctx31(), a, 4);
                is_irreducible(&eta)
                    && eta.orbit_min() == a
                    && is_symplectic(&eta, &l) == Ok(true)
            })
            .count();
        assert_eq!(enumerate_trd(3, 1, &l).unwrap().len(), brute);
    }

    #[test]
    fn self_dual_twist_counts() {
        let l = lambda31();
        // Symplectic η → 2 classes (trivial and the order-4 twist).
        let eta = TameCharacter::new(ctx31(), 2, 4);
        assert_eq!(count_self_dual_twists(&eta, &l), Ok(2));
        // η whose inertia pairing never matches the similitude → 0.
        let eta = TameCharacter::new(ctx31(), 1, 4);
        assert_eq!(count_self_dual_twists(&eta, &l), Ok(0));
    }

    #[test]
    fn hom_dim_examples() {
        let l = lambda31();
        let e2 = TameCharacter::new(ctx31(), 2, 4);
        let e1 = TameCharacter::new(ctx31(), 1, 4);
        let p2 = InducedParameter { components: vec![e2], similitude: l };
        let p1 = InducedParameter { components: vec![e1], similitude: l };
        assert_eq!(hom_dim(&p2, &p2), 1);
        assert_eq!(hom_dim(&p1, &p2), 0);
        let both = InducedParameter { components: vec![e1, e2], similitude: l };
        assert_eq!(hom_dim(&both, &p2), 1);
        // Multiplicity-freeness: Hom(p, p) = number of components.
        assert_eq!(hom_dim(&both, &both), 2);
        // Conjugate representative induces the same parameter.
        let p2c = InducedParameter {
            components: vec![frob_conjugate(&e2, 1)],
            similitude: l,
        };
        assert_eq!(hom_dim(&p2, &p2c), 1);
        assert!(params_isomorphic(&p2, &p2c));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn conjugation_has_period_2d(a in 0u64..80, z in 0u64..8, d in 1u32..3) {
                let ctx = FieldContext::new(3, d, 8);
                let eta = TameCharacter::new(ctx, a, z);
                prop_assert_eq!(frob_conjugate(&eta, 2 * d as i64), eta);
            }

            #[test]
            fn orbit_min_is_conjugation_invariant(a in 0u64..80, i in -5i64..6) {
                let ctx = FieldContext::new(3, 2, 8);
                let eta = TameCharacter::new(ctx, a, 0);
                prop_assert_eq!(frob_conjugate(&eta, i).orbit_min(), eta.orbit_min());
            }

            #[test]
            fn oracle_matches_predicate_d2_sampled(a in 0u64..80, z in 0u64..8, lf in 0u64..8) {
                let ctx = FieldContext::new(3, 2, 8);
                let l = SimilitudeCharacter::new(3, 8, 0, lf);
                let eta = TameCharacter::new(ctx, a, z);
                prop_assume!(is_irreducible(&eta));
                prop_assert_eq!(symplectic_oracle(&eta, &l), is_symplectic(&eta, &l));
            }
        }
    }
}
