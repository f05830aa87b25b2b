//! Soft points, point membership, and neighborhood systems.
//!
//! Run with `cargo run --example points_neighborhoods`.

use ivhfss::fixtures;
use ivhfss::interval::OrderProfile::Componentwise;
use ivhfss::topology::SoftPoint;

fn main() {
    // In the bundled `example_3_19_to_3_26` workspace, the set F_A is null
    // everywhere except at parameter e2 — exactly the shape of a soft point.
    let ws = fixtures::load("example_3_19_to_3_26").unwrap();
    let family = ws.family("tau").unwrap();
    let f_a = ws.resolve_set("F_A").unwrap();

    let point = SoftPoint::from_soft_set(&f_a).expect("F_A is a soft point");
    println!("F_A is the soft point at parameter {}", point.parameter());
    println!("its carrier:\n{}", point.carrier());

    // Membership: the point's carrier must sit inside the set.
    let g_b = ws.resolve_set("G_B").unwrap();
    println!(
        "the point belongs to G_B (componentwise): {}",
        point.is_in(&g_b, Componentwise)
    );
    println!();

    // A set I is a neighborhood of the point when some open member G of the
    // family satisfies point ∈ G ⊆ I. The witness member is reported.
    let i_c = ws.resolve_set("I_C").unwrap();
    match family.is_nbd_of_point(&i_c, &point, Componentwise) {
        Some(witness) => println!("I_C is a neighborhood of the point via {witness}"),
        None => println!("I_C is not a neighborhood of the point"),
    }
    println!();

    // The neighborhood system classifies a whole candidate pool at once. The
    // default pool is the family members plus their complements.
    println!("neighborhood system over the default pool:");
    let pool = family.default_pool();
    for entry in family.nbd_system(&point, &pool, Componentwise) {
        match entry.witness {
            Some(witness) => println!("  {}: neighborhood (witness {witness})", entry.name),
            None => println!("  {}: not a neighborhood", entry.name),
        }
    }
    println!();

    // Neighborhoods of whole sets work the same way: an open member must fit
    // between the inner set and the candidate.
    let h_a = ws.resolve_set("H_A").unwrap();
    match family.is_nbd_of_set(&i_c, &h_a, Componentwise) {
        Some(witness) => println!("I_C is a neighborhood of H_A via {witness}"),
        None => println!("I_C is not a neighborhood of the set H_A"),
    }
    match family.is_nbd_of_set(&i_c, &g_b, Componentwise) {
        Some(witness) => println!("I_C is a neighborhood of G_B via {witness}"),
        None => println!("I_C is not a neighborhood of the set G_B"),
    }
}
