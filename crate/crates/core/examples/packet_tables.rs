//! Build the full packet tables: component-group characters, fixed
//! points on the apartment, facet root subsystems, inner-form signs,
//! reductive-quotient labels, and the dual-torus diagonal patterns.
//!
//! Run with: `cargo run --example packet_tables`

use depthzero::cli::{cmd_packets, RunConfig};
use depthzero::drpackets::{component_group, packet_table, TRDKind, TRDShape};

fn main() {
    for kind in [TRDKind::Irreducible, TRDKind::SplitPair] {
        let shape = TRDShape::new(kind);
        let group = component_group(&shape);
        println!(
            "{kind:?}: component group with invariant factors {:?} ({} packet members)",
            group.invariant_factors,
            group.order()
        );
        for row in packet_table(&shape).unwrap() {
            println!(
                "  rho={} x=({}) u={} quotient={} inner form={}",
                row.rho_label,
                row.x_lambda
                    .coords
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                row.u_class,
                row.quotient_over_residue_field(),
                row.inner_form_label,
            );
        }
    }
    println!();
    // The same data as the golden-checked markdown emission.
    let emission = cmd_packets(&RunConfig::default(), None).expect("golden files match");
    println!("{}", emission.markdown);
}
