//! Closed subintervals of `[0, 1]` with exact rational endpoints.
//!
//! Two pieces of structure matter downstream:
//!
//! 1. The **possibility degree** [`UnitInterval::possibility_geq`]: the degree
//!    to which one interval is at least another. It always satisfies
//!    `p(a >= b) + p(b >= a) = 1` exactly.
//! 2. The **rank order** ([`Ord`] on [`UnitInterval`]): the total order induced
//!    by the possibility degree, `a <= b` iff `p(b >= a) >= 1/2`, with the ties
//!    (`p = 1/2` both ways, i.e. equal endpoint sums) broken by the lower
//!    endpoint. Hesitant elements store their intervals ascending in this
//!    order, and the `rank` order profile compares elements through it.
//!
//! One consequence shapes the algebra further up: complementation reverses the
//! rank order *between* tie classes (it negates the endpoint sum) but
//! *preserves* it within a tie class, because for intervals of equal sum the
//! smaller lower endpoint also has the larger upper endpoint, and complementing
//! swaps the roles of the endpoints. No tie-break based only on the endpoints
//! can make complementation order-reversing everywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::{parse_rational, render_rational, NumberParseError};

/// Which order structure governs element comparisons, joins, and meets.
///
/// * [`Componentwise`](OrderProfile::Componentwise) compares and combines
///   intervals endpoint by endpoint: `a <= b` iff both endpoints of `a` are at
///   most the matching endpoints of `b`; joins take endpoint-wise maxima and
///   meets endpoint-wise minima. This is a partial order on intervals.
/// * [`RankSelect`](OrderProfile::RankSelect) uses the total rank order: `a <=
///   b` iff `p(b >= a) >= 1/2`; joins select the higher-ranked interval whole
///   and meets the lower-ranked one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderProfile {
    /// Endpoint-by-endpoint comparisons and min/max combinations.
    Componentwise,
    /// Possibility-degree ranking; join/meet select a whole interval.
    RankSelect,
}

impl OrderProfile {
    /// Both profiles, in the order they are reported.
    pub const ALL: [OrderProfile; 2] = [OrderProfile::Componentwise, OrderProfile::RankSelect];

    /// The surface name used by the CLI and in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            OrderProfile::Componentwise => "componentwise",
            OrderProfile::RankSelect => "rank",
        }
    }
}

impl fmt::Display for OrderProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Error produced when an order profile name is not recognised.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown order profile {name:?}: expected \"componentwise\" or \"rank\"")]
pub struct ProfileParseError {
    /// The offending name, verbatim.
    pub name: String,
}

impl FromStr for OrderProfile {
    type Err = ProfileParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "componentwise" => Ok(OrderProfile::Componentwise),
            "rank" => Ok(OrderProfile::RankSelect),
            other => Err(ProfileParseError {
                name: other.to_owned(),
            }),
        }
    }
}

/// Error produced when two endpoints do not form a subinterval of `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    /// An endpoint literal could not be read.
    #[error(transparent)]
    Number(#[from] NumberParseError),
    /// An endpoint lies outside `[0, 1]`.
    #[error("endpoint {endpoint} lies outside [0, 1]")]
    OutOfRange {
        /// Canonical rendering of the offending endpoint.
        endpoint: String,
    },
    /// The lower endpoint exceeds the upper endpoint.
    #[error("inverted interval [{lower}, {upper}]: lower endpoint exceeds upper")]
    Inverted {
        /// Canonical rendering of the lower endpoint.
        lower: String,
        /// Canonical rendering of the upper endpoint.
        upper: String,
    },
}

/// A closed subinterval `[lower, upper]` of the unit interval, with exact
/// rational endpoints. Degenerate intervals (`lower == upper`) are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitInterval {
    lower: BigRational,
    upper: BigRational,
}

impl UnitInterval {
    /// Builds an interval, validating `0 <= lower <= upper <= 1`.
    pub fn new(lower: BigRational, upper: BigRational) -> Result<Self, IntervalError> {
        let zero = BigRational::zero();
        let one = BigRational::one();
        for endpoint in [&lower, &upper] {
            if *endpoint < zero || *endpoint > one {
                return Err(IntervalError::OutOfRange {
                    endpoint: render_rational(endpoint),
                });
            }
        }
        if lower > upper {
            return Err(IntervalError::Inverted {
                lower: render_rational(&lower),
                upper: render_rational(&upper),
            });
        }
        Ok(UnitInterval { lower, upper })
    }

    /// Builds an interval from two numeric literals (see [`crate::rational`]).
    pub fn parse(lower: &str, upper: &str) -> Result<Self, IntervalError> {
        Self::new(parse_rational(lower)?, parse_rational(upper)?)
    }

    /// The degenerate interval `[0, 0]`.
    pub fn zero() -> Self {
        UnitInterval {
            lower: BigRational::zero(),
            upper: BigRational::zero(),
        }
    }

    /// The degenerate interval `[1, 1]`.
    pub fn one() -> Self {
        UnitInterval {
            lower: BigRational::one(),
            upper: BigRational::one(),
        }
    }

    /// The lower endpoint.
    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    /// The upper endpoint.
    pub fn upper(&self) -> &BigRational {
        &self.upper
    }

    /// The width `upper - lower`.
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// The endpoint sum `lower + upper`, the primary rank key.
    pub fn endpoint_sum(&self) -> BigRational {
        &self.lower + &self.upper
    }

    /// The complement `[1 - upper, 1 - lower]`.
    pub fn complement(&self) -> Self {
        UnitInterval {
            lower: BigRational::one() - &self.upper,
            upper: BigRational::one() - &self.lower,
        }
    }

    /// The possibility degree `p(self >= other)`.
    ///
    /// For intervals with positive total width this is
    /// `max(1 - max((other.upper - self.lower) / (width(self) + width(other)), 0), 0)`.
    /// When both intervals are degenerate points the formula is indeterminate
    /// and the degree is `1`, `1/2`, or `0` according to the point comparison.
    ///
    /// The result always lies in `[0, 1]` and satisfies
    /// `p(a >= b) + p(b >= a) = 1`.
    pub fn possibility_geq(&self, other: &UnitInterval) -> BigRational {
        let denom = self.width() + other.width();
        if denom.is_zero() {
            return match self.lower.cmp(&other.lower) {
                Ordering::Greater => BigRational::one(),
                Ordering::Equal => BigRational::new(1.into(), 2.into()),
                Ordering::Less => BigRational::zero(),
            };
        }
        let ratio = (&other.upper - &self.lower) / denom;
        let inner = ratio.max(BigRational::zero());
        (BigRational::one() - inner).max(BigRational::zero())
    }

    /// The rank order: `Less` iff `p(other >= self) > 1/2`, with exact ties
    /// (`p = 1/2`, i.e. equal endpoint sums) broken by the lower endpoint.
    ///
    /// This is the same as [`Ord::cmp`]; the named method exists for call
    /// sites where `rank_compare` reads better than `cmp`.
    pub fn rank_compare(&self, other: &UnitInterval) -> Ordering {
        self.cmp(other)
    }

    /// The join of two intervals under the given profile.
    pub fn join(&self, other: &UnitInterval, profile: OrderProfile) -> Self {
        match profile {
            OrderProfile::Componentwise => UnitInterval {
                lower: (&self.lower).max(&other.lower).clone(),
                upper: (&self.upper).max(&other.upper).clone(),
            },
            OrderProfile::RankSelect => {
                if self.cmp(other) == Ordering::Less {
                    other.clone()
                } else {
                    self.clone()
                }
            }
        }
    }

    /// The meet of two intervals under the given profile.
    pub fn meet(&self, other: &UnitInterval, profile: OrderProfile) -> Self {
        match profile {
            OrderProfile::Componentwise => UnitInterval {
                lower: (&self.lower).min(&other.lower).clone(),
                upper: (&self.upper).min(&other.upper).clone(),
            },
            OrderProfile::RankSelect => {
                if self.cmp(other) == Ordering::Greater {
                    other.clone()
                } else {
                    self.clone()
                }
            }
        }
    }

    /// Componentwise comparison: both endpoints of `self` at most those of
    /// `other`.
    pub fn componentwise_leq(&self, other: &UnitInterval) -> bool {
        self.lower <= other.lower && self.upper <= other.upper
    }
}

impl PartialOrd for UnitInterval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UnitInterval {
    /// Lexicographic on `(lower + upper, lower, upper)`.
    ///
    /// The first key realises the possibility-degree ranking: for any two
    /// intervals, `p(a >= b) >= 1/2` iff `sum(a) >= sum(b)` (including the
    /// degenerate case). The remaining keys are an arbitrary but fixed
    /// tie-break making the order total, so equal order means equal interval.
    fn cmp(&self, other: &Self) -> Ordering {
        self.endpoint_sum()
            .cmp(&other.endpoint_sum())
            .then_with(|| self.lower.cmp(&other.lower))
            .then_with(|| self.upper.cmp(&other.upper))
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            render_rational(&self.lower),
            render_rational(&self.upper)
        )
    }
}

/// A closed interval with nonnegative rational endpoints, not confined to
/// `[0, 1]`. Used as the accumulator when averaging unit intervals (score
/// computations), where intermediate sums may exceed `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonNegInterval {
    lower: BigRational,
    upper: BigRational,
}

impl NonNegInterval {
    /// The additive identity `[0, 0]`.
    pub fn zero() -> Self {
        NonNegInterval {
            lower: BigRational::zero(),
            upper: BigRational::zero(),
        }
    }

    /// Adds a unit interval endpoint-wise.
    pub fn add_unit(&mut self, interval: &UnitInterval) {
        self.lower += interval.lower();
        self.upper += interval.upper();
    }

    /// Scales both endpoints by a nonnegative factor.
    pub fn scaled(&self, factor: &BigRational) -> Self {
        NonNegInterval {
            lower: &self.lower * factor,
            upper: &self.upper * factor,
        }
    }

    /// The lower endpoint.
    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    /// The upper endpoint.
    pub fn upper(&self) -> &BigRational {
        &self.upper
    }

    /// Reinterprets as a unit interval if both endpoints lie in `[0, 1]`.
    pub fn to_unit(&self) -> Option<UnitInterval> {
        UnitInterval::new(self.lower.clone(), self.upper.clone()).ok()
    }
}

impl fmt::Display for NonNegInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            render_rational(&self.lower),
            render_rational(&self.upper)
        )
    }
}
