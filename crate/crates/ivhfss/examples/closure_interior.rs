//! Closure and interior of a soft set inside a finite topology.
//!
//! Run with `cargo run --example closure_interior`.

use ivhfss::fixtures;
use ivhfss::interval::OrderProfile::{Componentwise, RankSelect};

fn main() {
    let ws = fixtures::load("example_3_5").unwrap();
    let family = ws.family("tau").unwrap();

    // The closure folds intersections over every closed set containing the
    // target; the absolute set always qualifies, so the fold is never empty.
    let target = ws.resolve_set("I_C").unwrap();
    println!("I_C:\n{target}");
    let closure = family.closure(&target, Componentwise);
    println!("closure of I_C under the componentwise profile:\n{closure}");
    println!(
        "that closure is itself closed: {}",
        family.is_closed(&closure, Componentwise)
    );
    println!();

    // The interior folds unions over every member contained in the target.
    // Here exactly one non-trivial member fits inside, so the interior is
    // that open member under both profiles.
    let target = ws.resolve_set("I_C_interior").unwrap();
    println!("second target:\n{target}");
    for profile in [Componentwise, RankSelect] {
        let interior = family.interior(&target, profile);
        println!("interior under the {profile} profile:\n{interior}");
        println!(
            "equal to the open member G_B: {}",
            interior.equals(&ws.resolve_set("G_B").unwrap().normalize(), profile)
        );
        println!();
    }

    // Open and closed are membership tests against the family and its
    // complements, up to soft equality of the active profile.
    let g_b = ws.resolve_set("G_B").unwrap();
    println!("G_B is open (rank): {}", family.is_open(&g_b, RankSelect));
    println!(
        "G_B^C is closed (rank): {}",
        family.is_closed(&g_b.complement(), RankSelect)
    );
}
