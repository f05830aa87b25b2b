//! Interval-valued hesitant fuzzy soft sets and the finite topologies built from them.
//!
//! The crate models decision data in which every (parameter, object) pair carries a
//! *hesitant* collection of candidate membership intervals inside `[0, 1]`. All
//! arithmetic is exact: endpoints are arbitrary-precision rationals, never floats,
//! so set algebra, topology validation, and closure/interior computations are
//! reproducible bit for bit.
//!
//! The layers build on each other:
//!
//! * [`interval`] — closed subintervals of the unit interval, the possibility
//!   degree `p(a >= b)`, and the total rank order derived from it.
//! * [`element`] — [`HesitantElement`]: a nonempty multiset of intervals kept in
//!   canonical rank order, with join/meet/ring operations and comparisons under
//!   two order profiles.
//! * [`soft_set`] — [`SoftSet`]: a table of hesitant elements indexed by
//!   parameters and objects of a shared [`Context`], with union, intersection,
//!   complement, and subset/equality predicates.
//! * [`topology`] — named families of soft sets: topology validation with
//!   per-axiom violation reports, closure and interior operators, soft points,
//!   and neighbourhood queries.
//! * [`workspace`] — the JSON file format tying everything together, plus the
//!   bundled fixture corpus.
//! * [`cli`] — the `ivhfss` command-line front end over workspace files.
//!
//! Start with the runnable examples (`cargo run -p ivhfss --example <name>`):
//!
//! * `interval_ranking` — possibility degrees and the rank order.
//! * `hesitant_elements` — canonical form, extension, join/meet, ring ops, score.
//! * `soft_set_algebra` — union/intersection/complement and the subset preorder.
//! * `topology_validation` — validating a family and reading violation reports.
//! * `closure_interior` — closed sets, closure, and interior.
//! * `points_neighborhoods` — soft points and neighbourhood systems.
//! * `workspace_files` — parsing and rendering workspace JSON documents.

pub mod cli;
pub mod element;
pub mod fixtures;
pub mod interval;
pub mod rational;
pub mod render;
pub mod soft_set;
pub mod topology;
pub mod workspace;

pub use element::HesitantElement;
pub use interval::{NonNegInterval, OrderProfile, UnitInterval};
pub use soft_set::{Context, SoftSet};
pub use topology::{Comparability, Family, SoftPoint, TopologyReport, Violation};
pub use workspace::{Workspace, WorkspaceError};
