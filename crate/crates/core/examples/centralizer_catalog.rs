//! Centralizer root systems of dual-torus elements over a finite field:
//! for each catalog case, search for field-element exponents whose
//! vanishing root set matches the expected type, count the twisted
//! Frobenius orbits, and derive the Hecke parameter `q^{|I+|}`.
//!
//! Run with: `cargo run --example centralizer_catalog`

use depthzero::dualcent::{
    all_rows, certified_centralizer, frob_orbit_count, hecke_parameter, TauParams,
};

fn main() {
    let q = 3;
    for label in all_rows() {
        let row = certified_centralizer(label, q).unwrap();
        let params = match row.params {
            TauParams::Irreducible { a } => format!("a={a}"),
            TauParams::Split { b1, b2 } => format!("b1={b1}, b2={b2}"),
        };
        println!(
            "{label}: exponents {params}, type {} with {} positive roots, {} Frobenius orbit(s), parameter {}{}",
            row.data.cartan_type,
            row.data.positive_i.len(),
            frob_orbit_count(&row.data),
            hecke_parameter(&row.data, q).unwrap(),
            if row.rejected.is_empty() {
                String::new()
            } else {
                format!(" ({} unlucky candidates skipped)", row.rejected.len())
            }
        );
    }
}
