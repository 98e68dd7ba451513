//! Involution generator sets on the apartment: for each parahoric case,
//! the wall involutions `v[alpha, Theta]` normalizing the wall set, and
//! the alcove-stabilizer contribution `nu` with `nu^2` a central
//! translation.
//!
//! Run with: `cargo run --example affine_involutions`

use depthzero::affweyl::{omega_group, parahoric_base, s_theta, ParahoricCase};

fn main() {
    for (case, m) in [
        (ParahoricCase::Plus, 1usize),
        (ParahoricCase::Minus, 1),
        (ParahoricCase::Dagger, 1),
        (ParahoricCase::DoubleDagger, 1),
    ] {
        let (ctx, pi, theta) = parahoric_base(case, m);
        println!("case {case:?} (m={m}): base of {} walls, theta of {}", pi.len(), theta.len());
        let gens = s_theta(&ctx, &pi, &theta).unwrap();
        for (alpha, v) in &gens.v_elements {
            let square = v.compose(v);
            println!(
                "  v[{:?}{:+}]: involution={} translation part {:?}",
                alpha.gradient,
                alpha.constant,
                square.finite.is_identity() && square.translation.iter().all(|&t| t == 0),
                v.translation,
            );
        }
        let omega = omega_group(&ctx, &pi).unwrap();
        for nu in &omega.generators {
            let sq = nu.compose(nu);
            println!(
                "  stabilizer generator nu: nu^2 translates by {:?}",
                sq.translation
            );
        }
    }
}
