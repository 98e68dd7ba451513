//! Tame-character arithmetic: irreducibility, symplecticity against a
//! similitude character, classification of discrete parameters, and
//! exhaustive enumeration at a small residue field.
//!
//! Run with: `cargo run --example classify_parameters`

use depthzero::weilparams::{
    classify_trd, enumerate_trd, is_irreducible, is_symplectic, symplectic_classes, FieldContext,
    InducedParameter, SimilitudeCharacter, TameCharacter,
};

fn main() {
    let q = 3;
    let n = 8;
    let lambda = SimilitudeCharacter::new(q, n, 0, 0);

    let ctx = FieldContext::new(q, 1, n);
    for a in 0..ctx.modulus() {
        let eta = TameCharacter::new(ctx, a, 4);
        println!(
            "eta(a={a}): irreducible={} symplectic={:?}",
            is_irreducible(&eta),
            is_symplectic(&eta, &lambda)
        );
    }

    for d in [1u32, 2] {
        let classes = symplectic_classes(q, d, &lambda);
        println!(
            "degree-{d} symplectic classes: {:?}",
            classes.iter().map(|c| (c.inertia_exp, c.frob_exp)).collect::<Vec<_>>()
        );
    }

    for dim in [1u32, 2] {
        let family = enumerate_trd(q, dim, &lambda).unwrap();
        println!("dimension-{} discrete classes: {}", 2 * dim, family.len());
        for phi in &family {
            let report = classify_trd(phi, dim);
            assert!(report.is_valid());
            let comps: Vec<String> = phi
                .components
                .iter()
                .map(|c| format!("(d={}, i={}, f={})", c.ctx.d, c.orbit_min(), c.frob_exp))
                .collect();
            println!("  {}", comps.join(" + "));
        }
    }

    // A deliberately invalid parameter: two Frobenius-conjugate pieces.
    let e = TameCharacter::new(ctx, 2, 4);
    let bad = InducedParameter { components: vec![e, e], similitude: lambda };
    println!("violations for a doubled component: {:?}", classify_trd(&bad, 2).violations);
}
