//! Ranking closed subintervals of [0, 1] by possibility degree.
//!
//! Run with `cargo run --example interval_ranking`.

use ivhfss::interval::UnitInterval;

fn main() {
    let a = UnitInterval::parse("0.2", "0.7").unwrap();
    let b = UnitInterval::parse("0.4", "0.5").unwrap();
    let c = UnitInterval::parse("0.6", "0.8").unwrap();

    // The possibility degree p(x ≥ y) is an exact rational in [0, 1]
    // measuring how strongly x exceeds y; 1/2 means the two are rank-tied.
    println!("p({a} ≥ {b}) = {}", a.possibility_geq(&b));
    println!("p({b} ≥ {a}) = {}", b.possibility_geq(&a));
    println!("p({a} ≥ {c}) = {}", a.possibility_geq(&c));
    println!();

    // The two directions always sum to exactly 1 — there is no rounding
    // anywhere, every endpoint is a rational number.
    let total = a.possibility_geq(&b) + b.possibility_geq(&a);
    println!("p(a ≥ b) + p(b ≥ a) = {total}");
    println!();

    // `rank_compare` is the total order induced by the possibility degree:
    // higher endpoint sum wins, with lexicographic tie-breaking, so that
    // p(x ≥ y) ≥ 1/2 exactly when x ranks at least as high as y.
    let mut intervals = vec![c.clone(), a.clone(), b.clone()];
    intervals.sort_by(|x, y| x.rank_compare(y));
    print!("ascending rank:");
    for interval in &intervals {
        print!(" {interval}");
    }
    println!();

    // Joins and meets under the two profiles. The componentwise profile
    // combines endpoints; the rank profile selects one of the operands whole.
    use ivhfss::interval::OrderProfile::{Componentwise, RankSelect};
    println!();
    println!(
        "componentwise join of {a} and {b}: {}",
        a.join(&b, Componentwise)
    );
    println!(
        "componentwise meet of {a} and {b}: {}",
        a.meet(&b, Componentwise)
    );
    println!(
        "rank-select join of {a} and {b}: {}",
        a.join(&b, RankSelect)
    );

    // Complements mirror an interval around the center of [0, 1].
    println!();
    println!("complement of {a} is {}", a.complement());
}
