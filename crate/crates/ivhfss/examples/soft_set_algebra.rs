//! Soft sets over a finite universe and parameter set: construction, raw
//! supports, union/intersection, complement, and the subset order.
//!
//! Run with `cargo run --example soft_set_algebra`.

use ivhfss::element::hfe;
use ivhfss::interval::OrderProfile::{Componentwise, RankSelect};
use ivhfss::soft_set::{Context, SoftSet, SoftSetError};

fn main() {
    // Two houses judged under three parameters. Every soft set over this
    // context shares the same object/parameter indices.
    let context = Context::new(
        vec!["h1".into(), "h2".into()],
        vec!["cheap".into(), "modern".into(), "quiet".into()],
    )
    .unwrap();

    // A soft set maps each parameter of its support to one hesitant element
    // per object. Parameters left out are simply outside the support.
    let mut builder = SoftSet::builder(&context);
    builder
        .set_cell("cheap", "h1", hfe(&[("0.6", "0.8"), ("0.2", "0.7")]))
        .unwrap()
        .set_cell("cheap", "h2", hfe(&[("0.1", "0.4")]))
        .unwrap()
        .set_cell("modern", "h1", hfe(&[("0.3", "0.5")]))
        .unwrap()
        .set_cell("modern", "h2", hfe(&[("0.5", "0.9"), ("0.4", "0.6")]))
        .unwrap();
    let f = builder.finish().unwrap();

    let mut builder = SoftSet::builder(&context);
    builder
        .set_cell("modern", "h1", hfe(&[("0.4", "0.7")]))
        .unwrap()
        .set_cell("modern", "h2", hfe(&[("0.3", "0.5")]))
        .unwrap()
        .set_cell("quiet", "h1", hfe(&[("0.8", "0.9")]))
        .unwrap()
        .set_cell("quiet", "h2", hfe(&[("0.2", "0.3"), ("0.1", "0.9")]))
        .unwrap();
    let g = builder.finish().unwrap();

    println!("F (support {:?}):\n{f}", f.support());
    println!("G (support {:?}):\n{g}", g.support());

    // Union and intersection follow the raw supports: the union covers the
    // union of the supports, the intersection their overlap. Cells present
    // on both sides combine under the chosen profile.
    let union = f.union(&g, Componentwise).unwrap();
    println!("F ∪ G (componentwise):\n{union}");
    let meet = f.intersection(&g, RankSelect).unwrap();
    println!("F ∩ G (rank):\n{meet}");

    // Intersecting sets whose supports do not overlap is an error rather
    // than an empty set.
    let mut builder = SoftSet::builder(&context);
    builder
        .set_cell("quiet", "h1", hfe(&[("0.5", "0.5")]))
        .unwrap()
        .set_cell("quiet", "h2", hfe(&[("0.5", "0.5")]))
        .unwrap();
    let quiet_only = builder.finish().unwrap();
    match f.intersection(&quiet_only, Componentwise) {
        Err(SoftSetError::EmptyIntersection) => {
            println!("F ∩ (quiet-only set): rejected, supports are disjoint\n")
        }
        other => println!("unexpected: {other:?}\n"),
    }

    // The complement normalizes first (missing rows become null cells) and
    // then mirrors every interval.
    println!("Fᶜ:\n{}", f.complement());

    // The subset order compares supports and then cells under the profile.
    println!(
        "F ⊆ F∪G (componentwise): {}",
        f.is_subset(&union, Componentwise)
    );
    println!(
        "F∪G ⊆ F (componentwise): {}",
        union.is_subset(&f, Componentwise)
    );
    println!(
        "null ⊆ F normalized:     {}",
        SoftSet::null(&context).is_subset(&f.normalize(), Componentwise)
    );
}
