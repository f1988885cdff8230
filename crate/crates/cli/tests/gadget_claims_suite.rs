//! Every standard gadget's attached claims, evaluated through the claims
//! runner: everything under caps must pass, nothing may fail.

use atlas_cli::claims::run_gadget_claims;
use atlas_cli::config::Config;
use atlas_cli::corpus::standard_gadgets;

#[test]
fn all_standard_gadget_claims_hold() {
    let config = Config::untimed();
    let mut evaluated = 0usize;
    let mut skipped = 0usize;
    for (name, gadget) in standard_gadgets() {
        let report = run_gadget_claims(&gadget, &config);
        for claim in &report.claims {
            match claim.status.as_str() {
                "pass" => evaluated += 1,
                "skipped-cap" => skipped += 1,
                other => panic!("{name}: claim `{}` -> {other}", claim.description),
            }
        }
    }
    println!("gadget claims: {evaluated} passed, {skipped} skipped above caps");
    assert!(evaluated >= 80, "only {evaluated} claims evaluated");
}
