//! Exact integer-lattice linear algebra.
//!
//! Everything here is exact: matrices over `i128`, rationals as
//! `Ratio<i128>`. Ranks in this crate never exceed 8 and entries stay
//! tiny, so no arbitrary-precision integers are needed; debug builds
//! will catch any overflow.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Q = Ratio<i128>;

/// Shorthand for an integer rational.
pub fn q(n: i128) -> Q {
    Ratio::from_integer(n)
}

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IMat {
    pub nrows: usize,
    pub ncols: usize,
    data: Vec<i128>,
}

impl IMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IMat { nrows, ncols, data: vec![0; nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IMat { nrows, ncols, data: rows.concat() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<i128>]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, |c| c.len());
        assert!(cols.iter().all(|c| c.len() == nrows), "ragged columns");
        let mut m = Self::zeros(nrows, ncols);
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec<i128> {
        self.data[i * self.ncols..(i + 1) * self.ncols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<i128> {
        (0..self.nrows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> IMat {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = Self::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(self.ncols, v.len(), "dimension mismatch");
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn mul_vec_q(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.ncols, v.len(), "dimension mismatch");
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| q(self[(i, j)]) * v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols && *self == Self::identity(self.nrows)
    }

    /// Determinant by fraction-free rational elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.nrows, self.ncols, "det of non-square matrix");
        let n = self.nrows;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| q(self[(i, j)])).collect())
            .collect();
        let mut det = Q::one();
        for k in 0..n {
            let piv = (k..n).find(|&i| !a[i][k].is_zero());
            let Some(piv) = piv else { return 0 };
            if piv != k {
                a.swap(piv, k);
                det = -det;
            }
            det *= a[k][k];
            let pivot = a[k][k];
            for i in k + 1..n {
                let f = a[i][k] / pivot;
                for j in k..n {
                    let s = a[k][j];
                    a[i][j] = a[i][j] - f * s;
                }
            }
        }
        assert!(det.is_integer());
        det.to_integer()
    }

    /// Inverse of a unimodular matrix; panics if not unimodular.
    pub fn inverse_unimodular(&self) -> IMat {
        let inv = self
            .rational_inverse()
            .expect("matrix is singular, expected unimodular");
        let mut out = Self::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                assert!(inv[i][j].is_integer(), "matrix is not unimodular");
                out[(i, j)] = inv[i][j].to_integer();
            }
        }
        out
    }

    /// Exact inverse over the rationals, if square and nonsingular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<Q>>> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| q(self[(i, j)]))
                    .chain((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }))
                    .collect()
            })
            .collect();
        for k in 0..n {
            let piv = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(piv, k);
            let pivot = a[k][k];
            for j in 0..2 * n {
                a[k][j] /= pivot;
            }
            for i in 0..n {
                if i != k && !a[i][k].is_zero() {
                    let f = a[i][k];
                    for j in 0..2 * n {
                        let s = a[k][j];
                        a[i][j] = a[i][j] - f * s;
                    }
                }
            }
        }
        Some((0..n).map(|i| a[i][n..].to_vec()).collect())
    }

    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Q>> = (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| q(self[(i, j)])).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.ncols {
            if let Some(piv) = (rank..self.nrows).find(|&i| !a[i][col].is_zero()) {
                a.swap(piv, rank);
                let pivot = a[rank][col];
                for i in rank + 1..self.nrows {
                    if !a[i][col].is_zero() {
                        let f = a[i][col] / pivot;
                        for j in col..self.ncols {
                            let s = a[rank][j];
                            a[i][j] = a[i][j] - f * s;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.ncols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.ncols + j]
    }
}

impl fmt::Display for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Free `ℤ`-lattice with a labeled ordered basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FreeLattice {
    pub rank: usize,
    pub basis_labels: Vec<String>,
}

impl FreeLattice {
    pub fn new(basis_labels: Vec<String>) -> Self {
        let rank = basis_labels.len();
        let mut seen = basis_labels.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), rank, "basis labels must be pairwise distinct");
        FreeLattice { rank, basis_labels }
    }

    pub fn from_labels(labels: &[&str]) -> Self {
        Self::new(labels.iter().map(|s| s.to_string()).collect())
    }

    /// Standard lattice `ℤ^n` with labels `x0..x{n-1}`.
    pub fn standard(n: usize) -> Self {
        Self::new((0..n).map(|i| format!("x{i}")).collect())
    }
}

/// Homomorphism between free lattices, as an integer matrix acting on
/// column coordinate vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeMap {
    pub domain: FreeLattice,
    pub codomain: FreeLattice,
    pub matrix: IMat,
}

impl LatticeMap {
    pub fn new(domain: FreeLattice, codomain: FreeLattice, matrix: IMat) -> Self {
        assert_eq!(matrix.nrows, codomain.rank, "matrix rows must match codomain rank");
        assert_eq!(matrix.ncols, domain.rank, "matrix cols must match domain rank");
        LatticeMap { domain, codomain, matrix }
    }

    pub fn apply(&self, v: &[i128]) -> Vec<i128> {
        self.matrix.mul_vec(v)
    }
}

/// Smith normal form: returns `(U, D, V)` with `U·M·V = D`, `U` and `V`
/// unimodular, `D` diagonal with each diagonal entry dividing the next.
pub fn smith_normal_form(m: &IMat) -> (IMat, IMat, IMat) {
    let (nr, nc) = (m.nrows, m.ncols);
    let mut b = m.clone();
    let mut u = IMat::identity(nr);
    let mut v = IMat::identity(nc);

    // Elementary operations, mirrored into the transforms.
    let swap_rows = |b: &mut IMat, u: &mut IMat, r1: usize, r2: usize| {
        for j in 0..b.ncols {
            let t = b[(r1, j)];
            b[(r1, j)] = b[(r2, j)];
            b[(r2, j)] = t;
        }
        for j in 0..u.ncols {
            let t = u[(r1, j)];
            u[(r1, j)] = u[(r2, j)];
            u[(r2, j)] = t;
        }
    };
    let swap_cols = |b: &mut IMat, v: &mut IMat, c1: usize, c2: usize| {
        for i in 0..b.nrows {
            let t = b[(i, c1)];
            b[(i, c1)] = b[(i, c2)];
            b[(i, c2)] = t;
        }
        for i in 0..v.nrows {
            let t = v[(i, c1)];
            v[(i, c1)] = v[(i, c2)];
            v[(i, c2)] = t;
        }
    };
    // row[dst] += c * row[src]
    let add_row = |b: &mut IMat, u: &mut IMat, dst: usize, src: usize, c: i128| {
        for j in 0..b.ncols {
            let s = b[(src, j)];
            b[(dst, j)] += c * s;
        }
        for j in 0..u.ncols {
            let s = u[(src, j)];
            u[(dst, j)] += c * s;
        }
    };
    // col[dst] += c * col[src]
    let add_col = |b: &mut IMat, v: &mut IMat, dst: usize, src: usize, c: i128| {
        for i in 0..b.nrows {
            let s = b[(i, src)];
            b[(i, dst)] += c * s;
        }
        for i in 0..v.nrows {
            let s = v[(i, src)];
            v[(i, dst)] += c * s;
        }
    };
    let negate_row = |b: &mut IMat, u: &mut IMat, r: usize| {
        for j in 0..b.ncols {
            b[(r, j)] = -b[(r, j)];
        }
        for j in 0..u.ncols {
            u[(r, j)] = -u[(r, j)];
        }
    };

    for k in 0..nr.min(nc) {
        'pivot: loop {
            // Find a minimal-magnitude nonzero pivot in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in k..nr {
                for j in k..nc {
                    if b[(i, j)] != 0
                        && best.map_or(true, |(bi, bj)| b[(i, j)].abs() < b[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivot };
            if pi != k {
                swap_rows(&mut b, &mut u, k, pi);
            }
            if pj != k {
                swap_cols(&mut b, &mut v, k, pj);
            }
            if b[(k, k)] < 0 {
                negate_row(&mut b, &mut u, k);
            }
            // Clear the pivot column and row.
            let mut clean = true;
            for i in k + 1..nr {
                if b[(i, k)] != 0 {
                    let d = b[(i, k)].div_euclid(b[(k, k)]);
                    add_row(&mut b, &mut u, i, k, -d);
                    if b[(i, k)] != 0 {
                        clean = false;
                    }
                }
            }
            for j in k + 1..nc {
                if b[(k, j)] != 0 {
                    let d = b[(k, j)].div_euclid(b[(k, k)]);
                    add_col(&mut b, &mut v, j, k, -d);
                    if b[(k, j)] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let mut offender = None;
            'scan: for i in k + 1..nr {
                for j in k + 1..nc {
                    if b[(i, j)] % b[(k, k)] != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    add_row(&mut b, &mut u, k, i, 1);
                    continue 'pivot;
                }
                None => break 'pivot,
            }
        }
    }
    debug_assert_eq!(u.mul(m).mul(&v), b);
    (u, b, v)
}

/// Finite abelian group presented by invariant factors (each ≥ 2, each
/// dividing the next) together with one canonical lattice representative
/// per element.
#[derive(Clone, Debug)]
pub struct FinAbGroup {
    /// Invariant factors `d_1 | d_2 | …`, all ≥ 2. Factor-1 entries are
    /// dropped; the trivial group has an empty list.
    pub invariant_factors: Vec<i128>,
    /// Canonical element codes (Smith coordinates, one residue per
    /// invariant factor, lexicographic order) with their representative
    /// vectors in the original lattice basis.
    pub representatives: Vec<(Vec<i128>, Vec<i128>)>,
    /// Smith row transform: original coordinates → Smith coordinates.
    u: IMat,
    /// Inverse of `u`.
    u_inv: IMat,
    /// Rows of the Smith form carrying each invariant factor.
    torsion_rows: Vec<usize>,
    /// Rows of the Smith form where the quotient is free (factor 0).
    free_rows: Vec<usize>,
}

impl FinAbGroup {
    pub fn order(&self) -> i128 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Code of the class of `v` in the torsion quotient, or `None` when
    /// the class of `v` has infinite order (nonzero free part).
    pub fn class_of(&self, v: &[i128]) -> Option<Vec<i128>> {
        let y = self.u.mul_vec(v);
        if self.free_rows.iter().any(|&i| y[i] != 0) {
            return None;
        }
        Some(
            self.torsion_rows
                .iter()
                .zip(&self.invariant_factors)
                .map(|(&i, &d)| y[i].rem_euclid(d))
                .collect(),
        )
    }

    /// Canonical lattice representative of the class of `v`.
    pub fn reduce(&self, v: &[i128]) -> Option<Vec<i128>> {
        let code = self.class_of(v)?;
        Some(self.representative(&code))
    }

    /// Canonical representative for an element code.
    pub fn representative(&self, code: &[i128]) -> Vec<i128> {
        assert_eq!(code.len(), self.invariant_factors.len());
        let mut y = vec![0i128; self.u.nrows];
        for ((&i, &d), &c) in self.torsion_rows.iter().zip(&self.invariant_factors).zip(code) {
            y[i] = c.rem_euclid(d);
        }
        self.u_inv.mul_vec(&y)
    }
}

/// Torsion part of `L / im(M)` with canonical coset representatives.
///
/// Representatives are the lexicographically-least non-negative vectors
/// in Smith coordinates, pulled back to the original basis.
pub fn quotient_torsion(l: &FreeLattice, m: &LatticeMap) -> FinAbGroup {
    assert_eq!(&m.codomain, l, "map codomain must be the quotiented lattice");
    let (u, d, _v) = smith_normal_form(&m.matrix);
    let u_inv = u.inverse_unimodular();
    let r = d.nrows.min(d.ncols);
    let mut torsion_rows = Vec::new();
    let mut invariant_factors = Vec::new();
    let mut free_rows = Vec::new();
    for i in 0..d.nrows {
        let di = if i < r { d[(i, i)] } else { 0 };
        match di {
            0 => free_rows.push(i),
            1 => {}
            _ => {
                torsion_rows.push(i);
                invariant_factors.push(di);
            }
        }
    }
    let mut group = FinAbGroup {
        invariant_factors,
        representatives: Vec::new(),
        u,
        u_inv,
        torsion_rows,
        free_rows,
    };
    // Enumerate all element codes lexicographically.
    let mut codes = vec![vec![]];
    for &d in &group.invariant_factors {
        codes = codes
            .into_iter()
            .flat_map(|c: Vec<i128>| {
                (0..d).map(move |x| {
                    let mut c2 = c.clone();
                    c2.push(x);
                    c2
                })
            })
            .collect();
    }
    group.representatives = codes
        .into_iter()
        .map(|c| {
            let rep = group.representative(&c);
            (c, rep)
        })
        .collect();
    group
}

/// Exact rational linear solve `M·x = v`; returns a particular solution
/// (free variables set to zero) or `None` when no solution exists.
pub fn rational_solve(m: &IMat, v: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(m.nrows, v.len(), "dimension mismatch");
    let (nr, nc) = (m.nrows, m.ncols);
    let mut a: Vec<Vec<Q>> = (0..nr)
        .map(|i| {
            (0..nc)
                .map(|j| q(m[(i, j)]))
                .chain(std::iter::once(v[i]))
                .collect()
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..nc {
        if row >= nr {
            break;
        }
        if let Some(piv) = (row..nr).find(|&i| !a[i][col].is_zero()) {
            a.swap(piv, row);
            let pivot = a[row][col];
            for j in col..=nc {
                a[row][j] /= pivot;
            }
            for i in 0..nr {
                if i != row && !a[i][col].is_zero() {
                    let f = a[i][col];
                    for j in col..=nc {
                        let s = a[row][j];
                        a[i][j] = a[i][j] - f * s;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
        }
    }
    // Inconsistent rows?
    for i in row..nr {
        if !a[i][nc].is_zero() {
            return None;
        }
    }
    let mut x = vec![Q::zero(); nc];
    for &(r, c) in &pivots {
        x[c] = a[r][nc];
    }
    Some(x)
}

/// Convenience: solve with an integer right-hand side.
pub fn rational_solve_int(m: &IMat, v: &[i128]) -> Option<Vec<Q>> {
    let vq: Vec<Q> = v.iter().map(|&x| q(x)).collect();
    rational_solve(m, &vq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IMat) {
        let (u, d, v) = smith_normal_form(m);
        assert_eq!(u.mul(m).mul(&v), d, "U·M·V = D");
        assert!(u.det().abs() == 1, "U unimodular");
        assert!(v.det().abs() == 1, "V unimodular");
        for i in 0..d.nrows {
            for j in 0..d.ncols {
                if i != j {
                    assert_eq!(d[(i, j)], 0, "D diagonal");
                }
            }
        }
        let r = d.nrows.min(d.ncols);
        for i in 0..r.saturating_sub(1) {
            let (a, b) = (d[(i, i)], d[(i + 1, i + 1)]);
            if a == 0 {
                assert_eq!(b, 0, "zeros trail");
            } else {
                assert_eq!(b % a, 0, "divisibility chain");
            }
        }
    }

    #[test]
    fn snf_identity() {
        let m = IMat::identity(2);
        let (u, d, v) = smith_normal_form(&m);
        assert_eq!(d, IMat::identity(2));
        assert!(u.is_identity() && v.is_identity());
    }

    #[test]
    fn snf_already_diagonal() {
        let m = IMat::from_rows(&[vec![2, 0], vec![0, 2]]);
        let (_, d, _) = smith_normal_form(&m);
        assert_eq!(d, IMat::from_rows(&[vec![2, 0], vec![0, 2]]));
        check_snf(&m);
    }

    #[test]
    fn snf_rotation_difference() {
        // 1 - w for the rotation w(e1*) = e2*, w(e2*) = -e1*.
        let m = IMat::from_rows(&[vec![1, 1], vec![-1, 1]]);
        let (_, d, _) = smith_normal_form(&m);
        assert_eq!(d[(0, 0)], 1);
        assert_eq!(d[(1, 1)], 2);
        check_snf(&m);
    }

    #[test]
    fn snf_known_example() {
        let m = IMat::from_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let (_, d, _) = smith_normal_form(&m);
        assert_eq!(
            (d[(0, 0)], d[(1, 1)], d[(2, 2)], d[(3, 3)]),
            (1, 3, 21, 0)
        );
        check_snf(&m);
    }

    #[test]
    fn snf_rectangular() {
        check_snf(&IMat::from_rows(&[vec![2, 4, 4]]));
        check_snf(&IMat::from_rows(&[vec![2], vec![4], vec![6]]));
        check_snf(&IMat::zeros(3, 2));
    }

    #[test]
    fn quotient_mod2_squared() {
        // L = ℤ², M = 2·I: quotient (ℤ/2)² with four classes.
        let l = FreeLattice::from_labels(&["e1*", "e2*"]);
        let m = LatticeMap::new(l.clone(), l.clone(), IMat::from_rows(&[vec![2, 0], vec![0, 2]]));
        let g = quotient_torsion(&l, &m);
        assert_eq!(g.invariant_factors, vec![2, 2]);
        assert_eq!(g.order(), 4);
        assert_eq!(g.representatives.len(), 4);
        // All four residue classes hit, idempotent reduction.
        let mut seen = std::collections::HashSet::new();
        for (code, rep) in &g.representatives {
            assert_eq!(g.class_of(rep).as_ref(), Some(code));
            assert_eq!(g.reduce(rep).as_ref(), Some(rep));
            seen.insert((rep[0].rem_euclid(2), rep[1].rem_euclid(2)));
        }
        assert_eq!(seen.len(), 4);
        // e1* and e2* are distinct classes here.
        assert_ne!(g.class_of(&[1, 0]), g.class_of(&[0, 1]));
    }

    #[test]
    fn quotient_rotation() {
        // M = 1 - w for the order-4 rotation: quotient ℤ/2 with e1* ≡ e2*.
        let l = FreeLattice::from_labels(&["e1*", "e2*"]);
        let m = LatticeMap::new(l.clone(), l.clone(), IMat::from_rows(&[vec![1, 1], vec![-1, 1]]));
        let g = quotient_torsion(&l, &m);
        assert_eq!(g.invariant_factors, vec![2]);
        assert_eq!(g.class_of(&[1, 0]), g.class_of(&[0, 1]));
        assert_ne!(g.class_of(&[1, 0]), g.class_of(&[0, 0]));
    }

    #[test]
    fn quotient_trivial() {
        let l = FreeLattice::from_labels(&["a", "b"]);
        let m = LatticeMap::new(l.clone(), l.clone(), IMat::identity(2));
        let g = quotient_torsion(&l, &m);
        assert!(g.is_trivial());
        assert_eq!(g.representatives.len(), 1);
    }

    #[test]
    fn quotient_with_free_part() {
        // ℤ² / ⟨(2,0)⟩ = ℤ/2 ⊕ ℤ; torsion part ℤ/2, vectors with nonzero
        // free coordinate are not torsion classes.
        let l = FreeLattice::from_labels(&["a", "b"]);
        let m = LatticeMap::new(
            FreeLattice::from_labels(&["t"]),
            l.clone(),
            IMat::from_rows(&[vec![2], vec![0]]),
        );
        let g = quotient_torsion(&l, &m);
        assert_eq!(g.invariant_factors, vec![2]);
        assert!(g.class_of(&[1, 0]).is_some());
        assert!(g.class_of(&[0, 1]).is_none());
    }

    #[test]
    fn solve_identity() {
        let m = IMat::identity(2);
        assert_eq!(rational_solve_int(&m, &[1, 0]), Some(vec![q(1), q(0)]));
    }

    #[test]
    fn solve_half_half() {
        let m = IMat::from_rows(&[vec![1, 1], vec![-1, 1]]);
        let x = rational_solve_int(&m, &[1, 0]).unwrap();
        assert_eq!(x, vec![Q::new(1, 2), Q::new(1, 2)]);
        assert_eq!(m.mul_vec_q(&x), vec![q(1), q(0)]);
    }

    #[test]
    fn solve_no_solution() {
        let m = IMat::zeros(2, 2);
        assert_eq!(rational_solve_int(&m, &[1, 0]), None);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IMat::from_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse_unimodular();
        assert!(m.mul(&inv).is_identity());
    }
}
