//! Validating a finite family of soft sets as a topology, under both order
//! profiles, with concrete witnesses for every failed axiom.
//!
//! Run with `cargo run --example topology_validation`.

use ivhfss::fixtures;
use ivhfss::interval::OrderProfile;

fn main() {
    // The bundled `example_3_5` workspace carries a three-parameter context,
    // the sets F_A and G_B, and the family tau = {phi, E, F_A, G_B}.
    let ws = fixtures::load("example_3_5").unwrap();
    let family = ws.family("tau").unwrap();

    print!("members of tau:");
    for (name, _) in family.members() {
        print!(" {name}");
    }
    println!("\n");

    // A topology must contain the null and absolute sets and be closed under
    // pairwise intersection and union, up to soft equality of the profile.
    // This family is a topology under the rank profile but not under the
    // componentwise profile — the same data, two different verdicts.
    for profile in OrderProfile::ALL {
        let report = family.validate(profile);
        println!(
            "validate(tau) under the {profile} profile: {}",
            if report.is_valid() {
                "valid"
            } else {
                "invalid"
            }
        );
        for violation in &report.violations {
            println!(
                "  {} fails for ({})",
                violation.axiom.as_str(),
                violation.operands.join(", ")
            );
            if let Some(nearest) = &violation.nearest {
                println!(
                    "  the witness first differs from member {} at ({}, {}):",
                    nearest.member, nearest.parameter, nearest.object
                );
            }
            for line in violation.witness.to_string().lines() {
                println!("    {line}");
            }
        }
        println!();
    }

    // The closed sets are the member complements; `phi` and `E` trade
    // places, every other name gains a `^C` suffix.
    println!("closed sets of tau:");
    for (name, _) in family.closed_members() {
        println!("  {name}");
    }
}
