//! Interval-valued hesitant elements: canonical form, optimistic extension,
//! profile-dependent joins and meets, ring operations, and scores.
//!
//! Run with `cargo run --example hesitant_elements`.

use ivhfss::element::HesitantElement;
use ivhfss::interval::OrderProfile::{Componentwise, RankSelect};

fn main() {
    // An element collects the plausible membership intervals of one object.
    // Construction puts the intervals into canonical ascending rank order.
    let a = HesitantElement::parse(&[("0.5", "0.7"), ("0.1", "0.4"), ("0.3", "0.6")]).unwrap();
    let b = HesitantElement::parse(&[("0.2", "0.8"), ("0.6", "0.9")]).unwrap();
    println!("a = {a}");
    println!("b = {b}");
    println!();

    // Elements of different lengths are compared after an optimistic
    // extension: the shorter one is padded by repeating its highest-ranked
    // interval.
    println!("b extended to match a: {}", b.extend_to(a.len()));
    println!();

    // Joins and meets are positionwise after extension. The componentwise
    // profile takes endpoint max/min; the rank profile keeps whichever whole
    // interval ranks higher/lower.
    println!("a ∨ b (componentwise) = {}", a.join(&b, Componentwise));
    println!("a ∨ b (rank)          = {}", a.join(&b, RankSelect));
    println!("a ∧ b (componentwise) = {}", a.meet(&b, Componentwise));
    println!("a ∧ b (rank)          = {}", a.meet(&b, RankSelect));
    println!();

    // Ring sum and product combine every pair of intervals and keep the
    // results as one element (duplicates included).
    println!("a ⊕ b = {}", a.ring_sum(&b));
    println!("a ⊗ b = {}", a.ring_product(&b));
    println!();

    // The score interval averages the endpoints; complements mirror every
    // interval and keep the canonical order.
    println!("score(a) = {}", a.score());
    println!("score(b) = {}", b.score());
    println!("aᶜ = {}", a.complement());
    println!();

    // Order and equivalence are profile-dependent too. Under the rank
    // profile an element padded with copies of its maximum is equivalent to
    // the original.
    let padded = a.extend_to(5);
    println!("a ≼ b (componentwise): {}", a.leq(&b, Componentwise));
    println!("a ≼ b (rank):          {}", a.leq(&b, RankSelect));
    println!(
        "a ≈ a-padded (componentwise): {}",
        a.equiv(&padded, Componentwise)
    );
    println!(
        "a ≈ a-padded (rank):          {}",
        a.equiv(&padded, RankSelect)
    );
}
