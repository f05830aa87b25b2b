//! Hesitant collections of membership intervals.
//!
//! A [`HesitantElement`] is a nonempty multiset of [`UnitInterval`]s kept in
//! canonical form: sorted ascending by the rank order. Duplicates are kept —
//! `{[0.2, 0.5]}` and `{[0.2, 0.5], [0.2, 0.5]}` are distinct written forms,
//! and it is the comparison predicates (not the storage) that identify them.
//!
//! Binary operations on elements of different lengths first apply the
//! *optimistic extension*: the shorter element is padded by repeating its
//! maximal (last) interval until the lengths agree. Join, meet, and the
//! comparison predicates then proceed position by position on the extended
//! lists.
//!
//! Positionwise joins and meets under the componentwise profile can produce a
//! list that is no longer rank-ascending (see `join_can_require_resorting` in
//! the tests), so every constructor and operation re-canonicalises its result.
//! That re-sort is the root cause of the componentwise profile's lattice-law
//! failures documented in the acceptance suite; the rank profile never needs
//! it (a positionwise max/min of two ascending lists in a total order is
//! ascending).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::interval::{IntervalError, OrderProfile, UnitInterval};

/// Error produced when a hesitant element cannot be formed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElementError {
    /// The interval list was empty; hesitant elements are nonempty.
    #[error("hesitant element must contain at least one interval")]
    Empty,
    /// An interval literal was invalid.
    #[error(transparent)]
    Interval(#[from] IntervalError),
}

/// A nonempty multiset of unit intervals in canonical (rank-ascending) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HesitantElement {
    intervals: Vec<UnitInterval>,
}

impl HesitantElement {
    /// Builds an element from intervals in any order, canonicalising them.
    pub fn new(mut intervals: Vec<UnitInterval>) -> Result<Self, ElementError> {
        if intervals.is_empty() {
            return Err(ElementError::Empty);
        }
        intervals.sort();
        Ok(HesitantElement { intervals })
    }

    /// Builds an element from endpoint literal pairs (see [`crate::rational`]).
    pub fn parse(pairs: &[(&str, &str)]) -> Result<Self, ElementError> {
        let intervals = pairs
            .iter()
            .map(|(lo, hi)| UnitInterval::parse(lo, hi))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(intervals)
    }

    /// The element with the single interval `[0, 0]`.
    pub fn null() -> Self {
        HesitantElement {
            intervals: vec![UnitInterval::zero()],
        }
    }

    /// The element with the single interval `[1, 1]`.
    pub fn absolute() -> Self {
        HesitantElement {
            intervals: vec![UnitInterval::one()],
        }
    }

    /// The intervals in canonical ascending rank order.
    pub fn intervals(&self) -> &[UnitInterval] {
        &self.intervals
    }

    /// The number of intervals (always at least one).
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Always false; present for clippy's `len`-without-`is_empty` lint.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when every interval is `[0, 0]`.
    pub fn is_null(&self) -> bool {
        self.intervals.iter().all(|iv| *iv == UnitInterval::zero())
    }

    /// True when every interval is `[1, 1]`.
    pub fn is_absolute(&self) -> bool {
        self.intervals.iter().all(|iv| *iv == UnitInterval::one())
    }

    /// The optimistic extension: pads with copies of the maximal (last)
    /// interval until the length is at least `len`. Never shortens.
    pub fn extend_to(&self, len: usize) -> Self {
        let mut intervals = self.intervals.clone();
        let last = intervals.last().expect("nonempty invariant").clone();
        while intervals.len() < len {
            intervals.push(last.clone());
        }
        HesitantElement { intervals }
    }

    /// Extends both operands to their common length.
    fn aligned(&self, other: &HesitantElement) -> (HesitantElement, HesitantElement) {
        let len = self.len().max(other.len());
        (self.extend_to(len), other.extend_to(len))
    }

    /// The complement: each interval complemented, then re-canonicalised.
    pub fn complement(&self) -> Self {
        let mut intervals: Vec<UnitInterval> = self
            .intervals
            .iter()
            .map(UnitInterval::complement)
            .collect();
        intervals.sort();
        HesitantElement { intervals }
    }

    /// The positionwise join after optimistic extension, re-canonicalised.
    pub fn join(&self, other: &HesitantElement, profile: OrderProfile) -> Self {
        let (a, b) = self.aligned(other);
        let mut intervals: Vec<UnitInterval> = a
            .intervals
            .iter()
            .zip(&b.intervals)
            .map(|(x, y)| x.join(y, profile))
            .collect();
        intervals.sort();
        HesitantElement { intervals }
    }

    /// The positionwise meet after optimistic extension, re-canonicalised.
    pub fn meet(&self, other: &HesitantElement, profile: OrderProfile) -> Self {
        let (a, b) = self.aligned(other);
        let mut intervals: Vec<UnitInterval> = a
            .intervals
            .iter()
            .zip(&b.intervals)
            .map(|(x, y)| x.meet(y, profile))
            .collect();
        intervals.sort();
        HesitantElement { intervals }
    }

    /// The ring sum: all pairwise `[a + b - ab]` combinations, deduplicated.
    pub fn ring_sum(&self, other: &HesitantElement) -> Self {
        self.cartesian(other, |a, b| {
            let lower = a.lower() + b.lower() - a.lower() * b.lower();
            let upper = a.upper() + b.upper() - a.upper() * b.upper();
            UnitInterval::new(lower, upper).expect("ring sum stays within [0, 1]")
        })
    }

    /// The ring product: all pairwise `[a * b]` combinations, deduplicated.
    pub fn ring_product(&self, other: &HesitantElement) -> Self {
        self.cartesian(other, |a, b| {
            UnitInterval::new(a.lower() * b.lower(), a.upper() * b.upper())
                .expect("ring product stays within [0, 1]")
        })
    }

    fn cartesian(
        &self,
        other: &HesitantElement,
        combine: impl Fn(&UnitInterval, &UnitInterval) -> UnitInterval,
    ) -> HesitantElement {
        let mut intervals = Vec::with_capacity(self.len() * other.len());
        for a in &self.intervals {
            for b in &other.intervals {
                intervals.push(combine(a, b));
            }
        }
        intervals.sort();
        intervals.dedup();
        HesitantElement { intervals }
    }

    /// The score: the exact average of the intervals.
    pub fn score(&self) -> UnitInterval {
        let mut acc = crate::interval::NonNegInterval::zero();
        for interval in &self.intervals {
            acc.add_unit(interval);
        }
        let factor = BigRational::new(BigInt::one(), BigInt::from(self.len()));
        acc.scaled(&factor)
            .to_unit()
            .expect("average of unit intervals is a unit interval")
    }

    /// Whether `self <= other` under the profile: after optimistic extension,
    /// every position of `self` is at most the matching position of `other`
    /// (endpointwise for `componentwise`; possibility degree at least `1/2`
    /// for `rank`).
    pub fn leq(&self, other: &HesitantElement, profile: OrderProfile) -> bool {
        let (a, b) = self.aligned(other);
        a.intervals
            .iter()
            .zip(&b.intervals)
            .all(|(x, y)| match profile {
                OrderProfile::Componentwise => x.componentwise_leq(y),
                OrderProfile::RankSelect => {
                    y.possibility_geq(x) >= BigRational::new(1.into(), 2.into())
                }
            })
    }

    /// Whether the elements are equivalent under the profile (`leq` both
    /// ways). Under `componentwise` this identifies exactly the elements that
    /// agree position by position after extension; under `rank` it also
    /// identifies positions whose intervals merely tie in rank.
    pub fn equiv(&self, other: &HesitantElement, profile: OrderProfile) -> bool {
        self.leq(other, profile) && other.leq(self, profile)
    }

    /// The first position (after extension to the common length) at which the
    /// two elements are not equivalent under the profile, if any. Used for
    /// witness reporting.
    pub fn first_difference(
        &self,
        other: &HesitantElement,
        profile: OrderProfile,
    ) -> Option<usize> {
        let (a, b) = self.aligned(other);
        a.intervals
            .iter()
            .zip(&b.intervals)
            .position(|(x, y)| match profile {
                OrderProfile::Componentwise => x != y,
                OrderProfile::RankSelect => x.endpoint_sum() != y.endpoint_sum(),
            })
    }
}

impl fmt::Display for HesitantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, interval) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{interval}")?;
        }
        f.write_str("}")
    }
}

/// Convenience used by tests and examples: parses literals, panicking on
/// malformed input.
#[doc(hidden)]
pub fn hfe(pairs: &[(&str, &str)]) -> HesitantElement {
    HesitantElement::parse(pairs).expect("literal hesitant element")
}
