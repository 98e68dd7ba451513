//! The packet-agreement pipeline: for each enumerated discrete
//! parameter, verify that the unique member of its family passing every
//! per-component Hom test is the parameter itself — pole orders of
//! paired L-factors standing in for Hom spaces.
//!
//! Run with: `cargo run --example packet_agreement`

use depthzero::lfactors::packets_agree_check;
use depthzero::weilparams::{enumerate_trd, SimilitudeCharacter};

fn main() {
    let lambda = SimilitudeCharacter::new(3, 8, 0, 0);
    for n in [1u32, 2] {
        let family = enumerate_trd(3, n, &lambda).unwrap();
        println!("dimension {}: {} classes", 2 * n, family.len());
        for phi in &family {
            if phi.components.len() > 2 {
                continue;
            }
            let report = packets_agree_check(phi, n).unwrap();
            let matches = report.outcomes.iter().filter(|(h, _)| *h).count();
            println!(
                "  phi with {} component(s): {} Hom-match(es) in a family of {}, unique match: {}",
                phi.components.len(),
                matches,
                report.family_size,
                report.unique_match
            );
            assert!(report.unique_match);
        }
    }
}
