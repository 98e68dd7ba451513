//! The two-parameter affine Hecke algebra of type Ã₁.
//!
//! Basis elements are indexed by the alternating words of the infinite
//! dihedral group (optionally tensored with powers of an invertible
//! central generator), with the quadratic relations
//! `T_i² = (q_i − 1)T_i + q_i`. Principal-series representations are
//! realized by an explicit 2×2 family validated against the relation
//! oracle; reducibility, complementary-series intervals, and the
//! Plancherel point masses are computed in exact arithmetic over the
//! real quadratic field generated by `√(q₁q₂)`. Floating point appears
//! only in the sampled unit-circle irreducibility sweeps.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub type Q = Ratio<i128>;

fn q(n: i128) -> Q {
    Ratio::from_integer(n)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeckeError {
    #[error("word length exceeds the bound {0}")]
    LengthOverflow(usize),
    #[error(transparent)]
    Dual(#[from] crate::dualcent::DcError),
}

/// Exact element of `ℚ(√rad)`: `rat + coef·√rad`. Perfect-square
/// radicands fold into the rational part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub rat: Q,
    pub coef: Q,
    pub rad: u64,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl Quad {
    pub fn new(rat: Q, coef: Q, rad: u64) -> Self {
        let s = isqrt(rad);
        if s * s == rad {
            Quad { rat: rat + coef * q(s as i128), coef: Q::zero(), rad }
        } else if coef.is_zero() {
            Quad { rat, coef, rad }
        } else {
            Quad { rat, coef, rad }
        }
    }

    pub fn from_q(rat: Q, rad: u64) -> Self {
        Quad { rat, coef: Q::zero(), rad }
    }

    pub fn from_int(n: i128, rad: u64) -> Self {
        Self::from_q(q(n), rad)
    }

    pub fn sqrt_rad(rad: u64) -> Self {
        Self::new(Q::zero(), Q::one(), rad)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef.is_zero()
    }

    fn check(&self, other: &Quad) {
        assert!(
            self.rad == other.rad || self.coef.is_zero() || other.coef.is_zero(),
            "mixed radicands"
        );
    }

    fn rad_join(&self, other: &Quad) -> u64 {
        if self.coef.is_zero() {
            other.rad
        } else {
            self.rad
        }
    }

    pub fn add(&self, other: &Quad) -> Quad {
        self.check(other);
        Quad { rat: self.rat + other.rat, coef: self.coef + other.coef, rad: self.rad_join(other) }
    }

    pub fn sub(&self, other: &Quad) -> Quad {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Quad {
        Quad { rat: -self.rat, coef: -self.coef, rad: self.rad }
    }

    pub fn mul(&self, other: &Quad) -> Quad {
        self.check(other);
        let rad = self.rad_join(other);
        let d = q(rad as i128);
        Quad {
            rat: self.rat * other.rat + self.coef * other.coef * d,
            coef: self.rat * other.coef + self.coef * other.rat,
            rad,
        }
    }

    pub fn inv(&self) -> Quad {
        let d = q(self.rad as i128);
        let norm = self.rat * self.rat - self.coef * self.coef * d;
        assert!(!norm.is_zero(), "division by zero in the quadratic field");
        Quad { rat: self.rat / norm, coef: -self.coef / norm, rad: self.rad }
    }

    pub fn div(&self, other: &Quad) -> Quad {
        self.mul(&other.inv())
    }

    /// Sign of the real value `rat + coef·√rad`.
    pub fn sign(&self) -> i8 {
        let (a, b) = (self.rat, self.coef);
        if b.is_zero() {
            return if a.is_zero() { 0 } else if a.is_positive() { 1 } else { -1 };
        }
        if a.is_zero() {
            return if b.is_positive() { 1 } else { -1 };
        }
        match (a.is_positive(), b.is_positive()) {
            (true, true) => 1,
            (false, false) => -1,
            _ => {
                // Compare |a| with |b|√rad exactly.
                let lhs = a * a;
                let rhs = b * b * q(self.rad as i128);
                let big_a = lhs > rhs;
                if a.is_positive() {
                    if big_a { 1 } else { -1 }
                } else if big_a {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn lt(&self, other: &Quad) -> bool {
        self.sub(other).sign() < 0
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: Q| *r.numer() as f64 / *r.denom() as f64;
        f(self.rat) + f(self.coef) * (self.rad as f64).sqrt()
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "{}*sqrt({})", self.coef, self.rad)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rat, self.coef, self.rad)
        }
    }
}

/// The algebra: parameters, optional central generator, and a length
/// bound for basis words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeA1Tilde {
    pub q1: u64,
    pub q2: u64,
    pub central: bool,
    pub length_bound: usize,
}

impl HeckeA1Tilde {
    pub fn new(q1: u64, q2: u64) -> Self {
        HeckeA1Tilde { q1, q2, central: false, length_bound: 64 }
    }

    pub fn with_central(mut self) -> Self {
        self.central = true;
        self
    }

    fn param(&self, gen: u8) -> Q {
        q(if gen == 1 { self.q1 } else { self.q2 } as i128)
    }
}

/// Basis word: power of the central generator and an alternating word
/// `s_start s_other s_start …` of the given length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    pub central_pow: i64,
    pub start: u8,
    pub len: usize,
}

impl Word {
    pub fn identity() -> Self {
        Word { central_pow: 0, start: 0, len: 0 }
    }

    pub fn generator(gen: u8) -> Self {
        assert!(gen == 1 || gen == 2);
        Word { central_pow: 0, start: gen, len: 1 }
    }

    pub fn alternating(start: u8, len: usize) -> Self {
        assert!(len == 0 || start == 1 || start == 2);
        Word { central_pow: 0, start: if len == 0 { 0 } else { start }, len }
    }

    fn last(&self) -> Option<u8> {
        if self.len == 0 {
            None
        } else if self.len % 2 == 1 {
            Some(self.start)
        } else {
            Some(3 - self.start)
        }
    }

    fn gens(&self) -> Vec<u8> {
        (0..self.len)
            .map(|k| if k % 2 == 0 { self.start } else { 3 - self.start })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.central_pow != 0 {
            parts.push(format!("Tc^{}", self.central_pow));
        }
        for g in self.gens() {
            parts.push(format!("T{g}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Linear combination of basis words with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    pub coeffs: BTreeMap<Word, Q>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement { coeffs: BTreeMap::new() }
    }

    pub fn basis(w: Word) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w, Q::one());
        HeckeElement { coeffs }
    }

    pub fn one() -> Self {
        Self::basis(Word::identity())
    }

    pub fn scaled(&self, c: Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HeckeElement { coeffs: self.coeffs.iter().map(|(w, x)| (*w, *x * c)).collect() }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            let e = out.entry(*w).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                out.remove(w);
            }
        }
        HeckeElement { coeffs: out }
    }
}

fn times_generator(
    alg: &HeckeA1Tilde,
    el: &HeckeElement,
    gen: u8,
) -> Result<HeckeElement, HeckeError> {
    let mut out = HeckeElement::zero();
    for (w, c) in &el.coeffs {
        if w.last() == Some(gen) {
            // T_{w' s} T_s = (q − 1) T_{w' s} + q T_{w'}.
            let p = alg.param(gen);
            let shorter = Word {
                central_pow: w.central_pow,
                start: if w.len == 1 { 0 } else { w.start },
                len: w.len - 1,
            };
            out = out.add(&HeckeElement::basis(*w).scaled(*c * (p - Q::one())));
            out = out.add(&HeckeElement::basis(shorter).scaled(*c * p));
        } else {
            let longer = Word {
                central_pow: w.central_pow,
                start: if w.len == 0 { gen } else { w.start },
                len: w.len + 1,
            };
            if longer.len > alg.length_bound {
                return Err(HeckeError::LengthOverflow(alg.length_bound));
            }
            out = out.add(&HeckeElement::basis(longer).scaled(*c));
        }
    }
    Ok(out)
}

/// Product in the algebra: bilinear extension of the length-additive
/// concatenation and quadratic-relation rewrites.
pub fn multiply(
    alg: &HeckeA1Tilde,
    a: &HeckeElement,
    b: &HeckeElement,
) -> Result<HeckeElement, HeckeError> {
    let mut out = HeckeElement::zero();
    for (w, c) in &b.coeffs {
        assert!(w.central_pow == 0 || alg.central, "central generator not enabled");
        let mut acc = a.scaled(*c);
        if w.central_pow != 0 {
            acc = HeckeElement {
                coeffs: acc
                    .coeffs
                    .into_iter()
                    .map(|(mut u, x)| {
                        u.central_pow += w.central_pow;
                        (u, x)
                    })
                    .collect(),
            };
        }
        for g in w.gens() {
            acc = times_generator(alg, &acc, g)?;
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Principal series attached to an exact parameter ξ in `ℚ(√(q₁q₂))`:
/// `π_ξ(T_1) = [[q₁, 1], [0, −1]]`, `π_ξ(T_2) = [[−1, 0], [b, q₂]]`
/// with `b = z + q₁q₂/z + q₁ + q₂` and `z = ξ·√(q₁q₂)`.
#[derive(Debug, Clone)]
pub struct PrincipalSeries {
    pub q1: u64,
    pub q2: u64,
    pub xi: Quad,
    pub b: Quad,
}

pub fn principal_series(alg: &HeckeA1Tilde, xi: Quad) -> PrincipalSeries {
    assert!(!xi.is_zero(), "parameter must be nonzero");
    let d = alg.q1 * alg.q2;
    let z = xi.mul(&Quad::sqrt_rad(d));
    let b = z
        .add(&Quad::from_int(d as i128, d).div(&z))
        .add(&Quad::from_int((alg.q1 + alg.q2) as i128, d));
    PrincipalSeries { q1: alg.q1, q2: alg.q2, xi, b }
}

impl PrincipalSeries {
    pub fn t1(&self) -> [[Quad; 2]; 2] {
        let d = self.q1 * self.q2;
        [
            [Quad::from_int(self.q1 as i128, d), Quad::from_int(1, d)],
            [Quad::from_int(0, d), Quad::from_int(-1, d)],
        ]
    }

    pub fn t2(&self) -> [[Quad; 2]; 2] {
        let d = self.q1 * self.q2;
        [
            [Quad::from_int(-1, d), Quad::from_int(0, d)],
            [self.b, Quad::from_int(self.q2 as i128, d)],
        ]
    }
}

/// Exact 2×2 matrix product over the quadratic field.
pub fn mat_mul(a: &[[Quad; 2]; 2], b: &[[Quad; 2]; 2]) -> [[Quad; 2]; 2] {
    let mut out = [[Quad::from_int(0, a[0][0].rad); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        }
    }
    out
}

/// Exact reducibility test: the two generator images share an
/// eigenvector. Each generator has eigenvalues `{q_i, −1}`; the four
/// candidate common eigenvectors reduce to the conditions `b = 0` or
/// `b = (q₁+1)(q₂+1)`, but the check below works directly with the
/// eigenvectors.
pub fn is_reducible(ps: &PrincipalSeries) -> bool {
    let d = ps.q1 * ps.q2;
    let t2 = ps.t2();
    // Eigenvectors of T_1: (1, 0) for q₁ and (1, −(q₁+1)) for −1.
    let candidates = [
        [Quad::from_int(1, d), Quad::from_int(0, d)],
        [Quad::from_int(1, d), Quad::from_int(-(ps.q1 as i128 + 1), d)],
    ];
    candidates.iter().any(|v| {
        let w = [
            t2[0][0].mul(&v[0]).add(&t2[0][1].mul(&v[1])),
            t2[1][0].mul(&v[0]).add(&t2[1][1].mul(&v[1])),
        ];
        // Collinearity: v0·w1 − v1·w0 = 0.
        v[0].mul(&w[1]).sub(&v[1].mul(&w[0])).is_zero()
    })
}

/// Floating-point reducibility residual for a complex parameter: the
/// minimal non-collinearity of a T_1 eigenvector with its T_2 image,
/// relative to the matrix scale.
pub fn reducibility_residual(q1: u64, q2: u64, xi: Complex64) -> f64 {
    let d = (q1 * q2) as f64;
    let z = xi * d.sqrt();
    let b = z + d / z + Complex64::new((q1 + q2) as f64, 0.0);
    let t2 = [
        [Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0)],
        [b, Complex64::new(q2 as f64, 0.0)],
    ];
    let scale = 1.0 + b.norm() + q2 as f64;
    let mut best = f64::INFINITY;
    for v in [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(1.0, 0.0), Complex64::new(-(q1 as f64) - 1.0, 0.0)],
    ] {
        let w = [t2[0][0] * v[0] + t2[0][1] * v[1], t2[1][0] * v[0] + t2[1][1] * v[1]];
        let res = (v[0] * w[1] - v[1] * w[0]).norm() / scale;
        best = best.min(res);
    }
    best
}

/// Closed interval data for the complementary series, with exact surd
/// endpoints.
#[derive(Debug, Clone)]
pub struct Interval {
    pub lo: Quad,
    pub hi: Quad,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    /// Empty as a set (for the half-open shapes used here this is
    /// `hi ≤ lo`).
    pub fn is_empty(&self) -> bool {
        !self.lo.lt(&self.hi)
    }
}

/// The two complementary-series intervals `(1, √(q₁q₂)]` and
/// `[−√(q₂/q₁), −1)`, after normalizing `q₂ ≥ q₁ ≥ 1`.
pub fn complementary_series(q1: u64, q2: u64) -> (Interval, Interval) {
    let (q1, q2) = (q1.min(q2), q1.max(q2));
    let d = q1 * q2;
    let first = Interval {
        lo: Quad::from_int(1, d),
        hi: Quad::sqrt_rad(d),
        lo_open: true,
        hi_open: false,
    };
    // √(q₂/q₁) = √(q₁q₂)/q₁.
    let second = Interval {
        lo: Quad::new(Q::zero(), -Ratio::new(1, q1 as i128), d),
        hi: Quad::from_int(-1, d),
        lo_open: false,
        hi_open: true,
    };
    (first, second)
}

/// The two Plancherel point masses, as exact rationals.
pub fn plancherel_masses(q1: u64, q2: u64) -> (Q, Q) {
    let (q1, q2) = (q1.min(q2) as i128, q1.max(q2) as i128);
    let denom = (q1 + 1) * (q2 + 1);
    (Ratio::new(q1 * q2 - 1, denom), Ratio::new(q2 - q1, denom))
}

/// Existence of two complementary series, cross-validated against the
/// interval and mass computations.
pub fn two_complementary_series(q1: u64, q2: u64) -> bool {
    let ans = q1 != q2;
    let (_, second) = complementary_series(q1, q2);
    debug_assert_eq!(!second.is_empty(), ans);
    debug_assert_eq!(plancherel_masses(q1, q2).1.is_zero(), !ans);
    ans
}

/// Report on the generalized-principal-series reducibility for a
/// parahoric case: the two wall parameters, the special parameter
/// values, the masses, and the conclusion flag.
#[derive(Debug, Clone)]
pub struct ReducibilityReport {
    pub p_a: u64,
    pub p_b: u64,
    pub unequal: bool,
    pub special_points: (Quad, Quad),
    pub masses: (Q, Q),
    pub two_complementary: bool,
    /// True iff a unique positive reducibility point exists; withheld
    /// (false) for equal parameters.
    pub unique_positive_point: bool,
}

/// Assemble a report from an explicit parameter pair.
pub fn reducibility_report_from_pair(p_a: u64, p_b: u64) -> ReducibilityReport {
    let (q1, q2) = (p_a.min(p_b), p_a.max(p_b));
    let d = q1 * q2;
    let special = (
        Quad::sqrt_rad(d),
        Quad::new(Q::zero(), -Ratio::new(1, q1 as i128), d),
    );
    ReducibilityReport {
        p_a,
        p_b,
        unequal: p_a != p_b,
        special_points: special,
        masses: plancherel_masses(q1, q2),
        two_complementary: two_complementary_series(q1, q2),
        unique_positive_point: p_a != p_b,
    }
}

/// Pull the wall parameters for a parahoric case from the dual-side
/// catalog and assemble the report.
pub fn reducibility_report(
    case: crate::affweyl::ParahoricCase,
    m: usize,
    q: u64,
) -> Result<ReducibilityReport, HeckeError> {
    let (p_a, p_b) = crate::dualcent::wall_pair(case, m, q)?;
    let report = reducibility_report_from_pair(p_a, p_b);
    assert!(report.unequal, "catalog wall parameters are always unequal");
    Ok(report)
}
