//! The two-parameter affine Hecke algebra: basis-word multiplication
//! with quadratic rewrites, exact principal-series reducibility at the
//! quadratic-surd special points, complementary-series intervals, and
//! Plancherel point masses.
//!
//! Run with: `cargo run --example hecke_reducibility`

use depthzero::affweyl::ParahoricCase;
use depthzero::hecke::{
    complementary_series, is_reducible, multiply, plancherel_masses, principal_series,
    reducibility_report, two_complementary_series, HeckeA1Tilde, HeckeElement, Quad, Word,
};
use num_rational::Ratio;
use num_traits::Zero;

fn main() {
    let alg = HeckeA1Tilde::new(3, 27);
    let t1 = HeckeElement::basis(Word::generator(1));
    let t2 = HeckeElement::basis(Word::generator(2));
    let sq = multiply(&alg, &t1, &t1).unwrap();
    println!("T1*T1 has {} terms (quadratic rewrite)", sq.coeffs.len());
    let t12 = multiply(&alg, &t1, &t2).unwrap();
    let r = multiply(&alg, &t12, &t2).unwrap();
    for (w, c) in &r.coeffs {
        println!("  (T1 T2) T2 term: {c} * {w}");
    }

    for (q1, q2) in [(3u64, 3u64), (3, 27), (9, 729)] {
        let a = HeckeA1Tilde::new(q1, q2);
        let d = q1 * q2;
        let sp1 = Quad::sqrt_rad(d);
        let sp2 = Quad::new(Ratio::zero(), -Ratio::new(1, q1 as i128), d);
        println!(
            "(q1,q2)=({q1},{q2}): reducible at {sp1} -> {}, at {sp2} -> {}, at 2 -> {}",
            is_reducible(&principal_series(&a, sp1)),
            is_reducible(&principal_series(&a, sp2)),
            is_reducible(&principal_series(&a, Quad::from_int(2, d))),
        );
        let (m1, m2) = plancherel_masses(q1, q2);
        let (first, second) = complementary_series(q1, q2);
        println!(
            "  masses ({m1}, {m2}); second series empty: {}; two series: {}",
            second.is_empty(),
            two_complementary_series(q1, q2)
        );
        println!("  first complementary interval: ({}, {}]", first.lo, first.hi);
    }

    // Wall parameters pulled from the centralizer catalog.
    for case in [ParahoricCase::Minus, ParahoricCase::Dagger] {
        let r = reducibility_report(case, 1, 3).unwrap();
        println!(
            "case {case:?}: wall parameters ({}, {}), unique positive reducibility point: {}",
            r.p_a, r.p_b, r.unique_positive_point
        );
    }
}
