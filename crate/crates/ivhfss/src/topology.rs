//! Finite families of soft sets as candidate topologies.
//!
//! A [`Family`] is an ordered, named collection of soft sets over one context,
//! stored **normalized** (full support) so that all comparisons are
//! like-for-like and every pairwise intersection is defined. Validation
//! checks the three topology axioms — contains the null set, contains the
//! absolute set, closed under pairwise meets and joins — with membership
//! always judged up to soft equality of the active profile, never syntactic
//! identity: computed joins are routinely padded variants of members.
//!
//! [`closure`](Family::closure) and [`interior`](Family::interior) are folds
//! over the closed sets (member complements) and the members respectively;
//! they do not require the family to validate. That keeps them total, matching
//! the way the worked examples compute closures without re-deriving validity,
//! but it also means their classical postconditions (`F ⊆ cl(F)`, `cl(F)` is
//! closed) are *properties to test*, not guarantees — under the componentwise
//! profile both can fail because a componentwise meet of two supersets of `F`
//! need not remain a superset of `F` once its cells are re-canonicalized (see
//! the regression tests at the bottom of this file).

use std::fmt;
use std::sync::Arc;

use crate::interval::OrderProfile;
use crate::soft_set::{Context, SoftSet};

/// A topology axiom, as named in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// The family must contain the null set `φ̃`.
    ContainsPhi,
    /// The family must contain the absolute set `Ẽ`.
    ContainsE,
    /// The family must contain every pairwise intersection of members.
    MeetClosed,
    /// The family must contain every pairwise union of members.
    JoinClosed,
}

impl Axiom {
    /// The surface name used in reports and machine output.
    pub fn as_str(self) -> &'static str {
        match self {
            Axiom::ContainsPhi => "contains-phi",
            Axiom::ContainsE => "contains-E",
            Axiom::MeetClosed => "meet-closed",
            Axiom::JoinClosed => "join-closed",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The best-agreeing member for a violation witness, and the first cell (in
/// parameter-major order) where it differs from the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearestCell {
    /// Name of the member that agrees with the witness longest.
    pub member: String,
    /// Parameter name of the first differing cell.
    pub parameter: String,
    /// Object name of the first differing cell.
    pub object: String,
}

/// One failed axiom instance.
#[derive(Debug, Clone)]
pub struct Violation {
    /// Which axiom failed.
    pub axiom: Axiom,
    /// The member names whose combination exposed the failure (empty for the
    /// membership axioms).
    pub operands: Vec<String>,
    /// The set that should have been a member but is not.
    pub witness: SoftSet,
    /// Where the witness differs from the member that matches it longest;
    /// `None` only for a family with no members at all.
    pub nearest: Option<NearestCell>,
}

/// The outcome of validating a family against the topology axioms.
#[derive(Debug, Clone)]
pub struct TopologyReport {
    /// The profile the check was run under.
    pub profile: OrderProfile,
    /// All violations, in deterministic order: membership axioms first, then
    /// pairs in member order (meet before join for each pair).
    pub violations: Vec<Violation>,
}

impl TopologyReport {
    /// Whether the family satisfies all axioms.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// How two families relate under containment up to soft equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparability {
    /// Mutual containment.
    Equal,
    /// Every member of the first family occurs in the second.
    Coarser,
    /// Every member of the second family occurs in the first.
    Finer,
    /// Neither containment holds.
    Incomparable,
}

impl Comparability {
    /// The surface name used in output.
    pub fn as_str(self) -> &'static str {
        match self {
            Comparability::Equal => "equal",
            Comparability::Coarser => "coarser",
            Comparability::Finer => "finer",
            Comparability::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Comparability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Error produced when a family cannot be formed or combined.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    /// A member belongs to a different context than the family.
    #[error("family members must share the family's context")]
    ContextMismatch,
    /// Two members carry the same name.
    #[error("duplicate member name {name:?}")]
    DuplicateMember {
        /// The repeated name.
        name: String,
    },
    /// An intersection of zero families was requested.
    #[error("intersecting topologies requires at least one family")]
    NoFamilies,
}

/// A named entry in a neighborhood-system classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbdEntry {
    /// The candidate's name.
    pub name: String,
    /// The first open member witnessing the neighborhood relation, if any;
    /// `Some` means the candidate is a neighborhood.
    pub witness: Option<String>,
}

/// An ordered, named family of normalized soft sets over one context.
#[derive(Debug, Clone)]
pub struct Family {
    context: Arc<Context>,
    members: Vec<(String, SoftSet)>,
}

/// The display name for the complement of a member: `phi` and `E` swap, any
/// other name gains a `^C` suffix.
pub fn complement_name(name: &str) -> String {
    match name {
        "phi" => "E".to_owned(),
        "E" => "phi".to_owned(),
        other => format!("{other}^C"),
    }
}

impl Family {
    /// Builds a family, normalizing every member. Names must be distinct and
    /// members must share the context.
    pub fn new(
        context: &Arc<Context>,
        members: Vec<(String, SoftSet)>,
    ) -> Result<Family, FamilyError> {
        let mut normalized = Vec::with_capacity(members.len());
        for (i, (name, set)) in members.iter().enumerate() {
            if set.context() != context {
                return Err(FamilyError::ContextMismatch);
            }
            if members[..i].iter().any(|(n, _)| n == name) {
                return Err(FamilyError::DuplicateMember { name: name.clone() });
            }
            normalized.push((name.clone(), set.normalize()));
        }
        Ok(Family {
            context: Arc::clone(context),
            members: normalized,
        })
    }

    /// The indiscrete family `{phi, E}`.
    pub fn indiscrete(context: &Arc<Context>) -> Family {
        Family {
            context: Arc::clone(context),
            members: vec![
                ("phi".to_owned(), SoftSet::null(context)),
                ("E".to_owned(), SoftSet::absolute(context)),
            ],
        }
    }

    /// The owning context.
    pub fn context(&self) -> &Arc<Context> {
        &self.context
    }

    /// The members, in declaration order (normalized).
    pub fn members(&self) -> &[(String, SoftSet)] {
        &self.members
    }

    /// The member with the given name, if present.
    pub fn get(&self, name: &str) -> Option<&SoftSet> {
        self.members
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, set)| set)
    }

    fn assert_same_context(&self, set: &SoftSet) {
        assert!(
            set.context() == &self.context,
            "soft set passed to a family over a different context"
        );
    }

    /// The member name equal (under the profile) to the given normalized set,
    /// if any.
    fn member_matching(&self, set: &SoftSet, profile: OrderProfile) -> Option<&str> {
        self.members
            .iter()
            .find(|(_, m)| m.equals(set, profile))
            .map(|(n, _)| n.as_str())
    }

    /// The member agreeing with `witness` on the longest parameter-major
    /// prefix of cells, with the first cell where they differ.
    fn nearest(&self, witness: &SoftSet, profile: OrderProfile) -> Option<NearestCell> {
        let objects = self.context.objects().len();
        let mut best: Option<(usize, NearestCell)> = None;
        for (name, member) in &self.members {
            let Some((p, o)) = witness.first_cell_difference(member, profile) else {
                continue; // equal to a member: not a meaningful "nearest"
            };
            let linear = p * objects + o;
            if best.as_ref().is_none_or(|(b, _)| linear > *b) {
                best = Some((
                    linear,
                    NearestCell {
                        member: name.clone(),
                        parameter: self.context.parameters()[p].clone(),
                        object: self.context.objects()[o].clone(),
                    },
                ));
            }
        }
        best.map(|(_, cell)| cell)
    }

    /// Checks the topology axioms, reporting every violation with a concrete
    /// witness. Membership is judged up to soft equality of the profile.
    pub fn validate(&self, profile: OrderProfile) -> TopologyReport {
        let mut violations = Vec::new();
        let mut require_member = |witness: SoftSet, axiom: Axiom, operands: Vec<String>| {
            if self.member_matching(&witness, profile).is_none() {
                let nearest = self.nearest(&witness, profile);
                violations.push(Violation {
                    axiom,
                    operands,
                    witness,
                    nearest,
                });
            }
        };

        require_member(SoftSet::null(&self.context), Axiom::ContainsPhi, vec![]);
        require_member(SoftSet::absolute(&self.context), Axiom::ContainsE, vec![]);
        for i in 0..self.members.len() {
            for j in (i + 1)..self.members.len() {
                let (name_i, member_i) = &self.members[i];
                let (name_j, member_j) = &self.members[j];
                let operands = vec![name_i.clone(), name_j.clone()];
                let meet = member_i
                    .intersection(member_j, profile)
                    .expect("normalized members have full support");
                require_member(meet, Axiom::MeetClosed, operands.clone());
                let join = member_i
                    .union(member_j, profile)
                    .expect("normalized members share a context");
                require_member(join, Axiom::JoinClosed, operands);
            }
        }
        TopologyReport {
            profile,
            violations,
        }
    }

    /// The complements of the members, in member order. Names swap `phi`/`E`
    /// and append `^C` otherwise.
    pub fn closed_members(&self) -> Vec<(String, SoftSet)> {
        self.members
            .iter()
            .map(|(name, set)| (complement_name(name), set.complement()))
            .collect()
    }

    /// Whether the (normalized) set is soft-equal to some member.
    pub fn is_open(&self, set: &SoftSet, profile: OrderProfile) -> bool {
        self.assert_same_context(set);
        self.member_matching(&set.normalize(), profile).is_some()
    }

    /// Whether the set's complement is open.
    pub fn is_closed(&self, set: &SoftSet, profile: OrderProfile) -> bool {
        self.is_open(&set.complement(), profile)
    }

    /// The closure: the fold of intersections of all closed sets containing
    /// the (normalized) set, seeded with the absolute set.
    pub fn closure(&self, set: &SoftSet, profile: OrderProfile) -> SoftSet {
        self.assert_same_context(set);
        let normalized = set.normalize();
        let mut acc = SoftSet::absolute(&self.context);
        for (_, closed) in self.closed_members() {
            if normalized.is_subset(&closed, profile) {
                acc = acc
                    .intersection(&closed, profile)
                    .expect("full-support operands");
            }
        }
        acc
    }

    /// The interior: the fold of unions of all members contained in the
    /// (normalized) set, seeded with the null set.
    pub fn interior(&self, set: &SoftSet, profile: OrderProfile) -> SoftSet {
        self.assert_same_context(set);
        let normalized = set.normalize();
        let mut acc = SoftSet::null(&self.context);
        for (_, member) in &self.members {
            if member.is_subset(&normalized, profile) {
                acc = acc.union(member, profile).expect("shared context");
            }
        }
        acc
    }

    fn contained_in(&self, other: &Family, profile: OrderProfile) -> bool {
        self.members
            .iter()
            .all(|(_, m)| other.member_matching(m, profile).is_some())
    }

    /// Containment comparison of two families over the same context.
    pub fn compare(
        &self,
        other: &Family,
        profile: OrderProfile,
    ) -> Result<Comparability, FamilyError> {
        if self.context != other.context {
            return Err(FamilyError::ContextMismatch);
        }
        Ok(
            match (
                self.contained_in(other, profile),
                other.contained_in(self, profile),
            ) {
                (true, true) => Comparability::Equal,
                (true, false) => Comparability::Coarser,
                (false, true) => Comparability::Finer,
                (false, false) => Comparability::Incomparable,
            },
        )
    }

    /// The members of the first family present (up to soft equality) in every
    /// other family. Names come from the first family.
    pub fn intersect(families: &[&Family], profile: OrderProfile) -> Result<Family, FamilyError> {
        let (first, rest) = families.split_first().ok_or(FamilyError::NoFamilies)?;
        if rest.iter().any(|f| f.context != first.context) {
            return Err(FamilyError::ContextMismatch);
        }
        let members = first
            .members
            .iter()
            .filter(|(_, m)| rest.iter().all(|f| f.member_matching(m, profile).is_some()))
            .cloned()
            .collect();
        Ok(Family {
            context: Arc::clone(&first.context),
            members,
        })
    }

    /// The default candidate pool: the members followed by those member
    /// complements whose derived name is not already taken.
    pub fn default_pool(&self) -> Vec<(String, SoftSet)> {
        let mut pool = self.members.clone();
        for (name, member) in &self.members {
            let cname = complement_name(name);
            if !pool.iter().any(|(n, _)| n == &cname) {
                pool.push((cname, member.complement()));
            }
        }
        pool
    }

    /// All soft points arising as single-parameter restrictions of the
    /// default pool, labelled `parameter(set-name)`.
    pub fn point_pool(&self) -> Vec<(String, SoftPoint)> {
        let mut points = Vec::new();
        for (name, set) in self.default_pool() {
            for parameter in self.context.parameters() {
                let restricted = set
                    .restrict_to_parameter(parameter)
                    .expect("parameter comes from the context");
                if let Some(point) = SoftPoint::from_soft_set(&restricted) {
                    points.push((format!("{parameter}({name})"), point));
                }
            }
        }
        points
    }

    /// Whether `candidate` is a neighborhood of the point: some member `G`
    /// has the point in it and sits inside `candidate`. Returns the first
    /// such member name, in member order.
    pub fn is_nbd_of_point(
        &self,
        candidate: &SoftSet,
        point: &SoftPoint,
        profile: OrderProfile,
    ) -> Option<&str> {
        self.assert_same_context(candidate);
        let bound = candidate.normalize();
        self.members
            .iter()
            .find(|(_, g)| point.is_in(g, profile) && g.is_subset(&bound, profile))
            .map(|(name, _)| name.as_str())
    }

    /// Classifies each named candidate as a neighborhood of the point or not.
    pub fn nbd_system(
        &self,
        point: &SoftPoint,
        candidates: &[(String, SoftSet)],
        profile: OrderProfile,
    ) -> Vec<NbdEntry> {
        candidates
            .iter()
            .map(|(name, candidate)| NbdEntry {
                name: name.clone(),
                witness: self
                    .is_nbd_of_point(candidate, point, profile)
                    .map(str::to_owned),
            })
            .collect()
    }

    /// Whether `candidate` is a neighborhood of the soft set `inner`: some
    /// member `G` satisfies `inner ⊆ G ⊆ candidate`. Returns the first such
    /// member name.
    pub fn is_nbd_of_set(
        &self,
        candidate: &SoftSet,
        inner: &SoftSet,
        profile: OrderProfile,
    ) -> Option<&str> {
        self.assert_same_context(candidate);
        self.assert_same_context(inner);
        let bound = candidate.normalize();
        let inner = inner.normalize();
        self.members
            .iter()
            .find(|(_, g)| inner.is_subset(g, profile) && g.is_subset(&bound, profile))
            .map(|(name, _)| name.as_str())
    }
}

/// A soft set that is non-null at exactly one parameter.
#[derive(Debug, Clone)]
pub struct SoftPoint {
    carrier: SoftSet,
    parameter: usize,
}

impl SoftPoint {
    /// Recognizes a soft point: after normalization, exactly one parameter
    /// row contains a non-null cell.
    pub fn from_soft_set(set: &SoftSet) -> Option<SoftPoint> {
        let normalized = set.normalize();
        let context = Arc::clone(normalized.context());
        let mut non_null = (0..context.parameters().len()).filter(|&p| {
            (0..context.objects().len())
                .any(|o| !normalized.cell_at(p, o).expect("full support").is_null())
        });
        let parameter = non_null.next()?;
        if non_null.next().is_some() {
            return None;
        }
        Some(SoftPoint {
            carrier: normalized,
            parameter,
        })
    }

    /// The parameter at which the point lives.
    pub fn parameter(&self) -> &str {
        &self.carrier.context().parameters()[self.parameter]
    }

    /// The underlying normalized soft set.
    pub fn carrier(&self) -> &SoftSet {
        &self.carrier
    }

    /// Whether the point belongs to the set: its carrier is contained in the
    /// normalized set under the profile.
    pub fn is_in(&self, set: &SoftSet, profile: OrderProfile) -> bool {
        if set.has_full_support() {
            self.carrier.is_subset(set, profile)
        } else {
            self.carrier.is_subset(&set.normalize(), profile)
        }
    }
}
