//! Root-datum presets and structural identities: the similitude-group
//! catalog, duality between a diagonal quotient and a product subgroup,
//! and center connectedness of the pushout presentation.
//!
//! Run with: `cargo run --example root_data`

use depthzero::rootdatum::{build_preset, center, dual, same_coordinates, GroupLabel};

fn main() {
    for label in [
        GroupLabel::GSp(2),
        GroupLabel::GSpinOdd(2),
        GroupLabel::SpinSpinQuot { m: 1, n: 2 },
        GroupLabel::TildeSpinQuot { m: 1, n: 2 },
        GroupLabel::GsoGspCirc { m: 1, n: 2 },
    ] {
        let rd = build_preset(label).unwrap();
        let c = center(&rd);
        println!(
            "{label}: rank {}, {} simple roots, center connected: {}",
            rd.rank(),
            rd.simple_roots.len(),
            c.is_connected
        );
    }

    for m in [1usize, 2] {
        for n in [1usize, 2] {
            let quot = build_preset(GroupLabel::SpinSpinQuot { m, n }).unwrap();
            let prod = build_preset(GroupLabel::GsoGspCirc { m, n }).unwrap();
            println!(
                "(m,n)=({m},{n}): dual of the quotient matches the product subgroup: {}",
                same_coordinates(&dual(&quot), &prod)
            );
            let tilde = build_preset(GroupLabel::TildeSpinQuot { m, n }).unwrap();
            println!(
                "(m,n)=({m},{n}): pushout presentation has connected center: {}",
                center(&tilde).is_connected
            );
        }
    }
}
