//! Artin L-factors of monomial Weil representations: tensor with the
//! dual, restrict to inertia invariants, factor over Frobenius cycles,
//! and read the pole order at the origin — which matches the Hom-space
//! dimension. Includes the Sym²-term pole bookkeeping.
//!
//! Run with: `cargo run --example l_factors`

use depthzero::lfactors::{
    dual_rep, induce_to_monomial, l_factor, mu_zero_criterion, pole_order_at_zero, tensor,
};
use depthzero::weilparams::{
    hom_dim, symplectic_classes, FieldContext, InducedParameter, SimilitudeCharacter,
    TameCharacter,
};

fn main() {
    let q = 3;
    let n = 8;
    let lambda = SimilitudeCharacter::new(q, n, 0, 0);
    let ctx = FieldContext::new(q, 2, n);
    let eta = TameCharacter::new(ctx, 8, 4);
    let eta2 = TameCharacter::new(ctx, 16, 4);

    for (a, b) in [(eta, eta), (eta, eta2)] {
        let (ra, rb) = (induce_to_monomial(&a).unwrap(), induce_to_monomial(&b).unwrap());
        let l = l_factor(&tensor(&dual_rep(&ra), &rb));
        let pa = InducedParameter { components: vec![a], similitude: lambda };
        let pb = InducedParameter { components: vec![b], similitude: lambda };
        println!(
            "L(eta1^dual x eta2) for inertia ({}, {}): {}",
            a.inertia_exp,
            b.inertia_exp,
            l.render()
        );
        println!(
            "  pole order {} = Hom dimension {}",
            pole_order_at_zero(&l),
            hom_dim(&pa, &pb)
        );
    }

    // Full pole-criterion report for a symplectic pair.
    let sigma = symplectic_classes(q, 2, &lambda)[0];
    let phi_pi = InducedParameter { components: vec![sigma], similitude: lambda };
    let phi_sigma = phi_pi.clone();
    let report = mu_zero_criterion(&phi_pi, &phi_sigma).unwrap();
    println!(
        "pole orders {:?}, Sym2 invariant dims {:?}, Hom = {} (nonzero: {})",
        report.pole_orders, report.sym2_invariant_dims, report.hom_dim, report.hom_nonzero
    );
}
