//! The bundled workspace corpus: small, hand-checked data sets used by the
//! test suite and runnable examples, and convenient inputs for the CLI.
//!
//! Each fixture is a complete workspace document (see [`crate::workspace`]).
//! The corpus is part of the public contract — downstream code may rely on
//! these names and their contents staying stable:
//!
//! | name                   | contents                                                        |
//! |------------------------|-----------------------------------------------------------------|
//! | `example_2_7`          | one two-object set `F` with hesitant cells                      |
//! | `example_3_2`          | `F_A`/`G_A`, equal up to optimistic padding                     |
//! | `prop_3_3`             | `F_A`/`G_B`/`H_C` with partial supports, distributivity data     |
//! | `example_3_5`          | `F_A`/`G_B` plus topology `tau` and comparison pair `tau1`/`tau2`; closure set `I_C`, interior set `I_C_interior` |
//! | `example_3_19_to_3_26` | soft-point set `F_A`, topology `tau` over `G_B`, neighborhood candidates `I_C`/`H_A` |

use crate::workspace::Workspace;

/// A two-object, one-parameter workspace with a single hesitant set `F`.
pub const EXAMPLE_2_7: &str = include_str!("../fixtures/example_2_7.json");

/// Two sets `F_A` and `G_A` that differ only by repeated intervals.
pub const EXAMPLE_3_2: &str = include_str!("../fixtures/example_3_2.json");

/// Three sets with staggered supports used for distributivity checks.
pub const PROP_3_3: &str = include_str!("../fixtures/prop_3_3.json");

/// The running topology example: `tau = [phi, E, F_A, G_B]`, a coarser/finer
/// pair `tau1`/`tau2`, a closure input `I_C`, and an interior input
/// `I_C_interior`.
pub const EXAMPLE_3_5: &str = include_str!("../fixtures/example_3_5.json");

/// The soft-point and neighborhood corpus: point carrier `F_A`, topology
/// `tau = [phi, E, G_B]`, and candidates `I_C` and `H_A`.
pub const EXAMPLE_3_19_TO_3_26: &str = include_str!("../fixtures/example_3_19_to_3_26.json");

/// All fixtures as `(name, document)` pairs, in corpus order.
pub const ALL: &[(&str, &str)] = &[
    ("example_2_7", EXAMPLE_2_7),
    ("example_3_2", EXAMPLE_3_2),
    ("prop_3_3", PROP_3_3),
    ("example_3_5", EXAMPLE_3_5),
    ("example_3_19_to_3_26", EXAMPLE_3_19_TO_3_26),
];

/// Parses the named fixture. `None` for unknown names; parsing itself cannot
/// fail — the corpus is validated by the test suite.
pub fn load(name: &str) -> Option<Workspace> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, document)| {
        Workspace::parse_str(document).expect("bundled fixtures are valid workspace documents")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for (name, _) in ALL {
            let ws = load(name).unwrap();
            assert!(
                !ws.sets().is_empty(),
                "fixture {name} should declare at least one set"
            );
        }
        assert!(load("unknown").is_none());
    }
}
