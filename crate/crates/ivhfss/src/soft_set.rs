//! Interval-valued hesitant fuzzy soft sets over a shared context.
//!
//! A [`Context`] fixes the universe of objects and the full parameter set. A
//! [`SoftSet`] assigns a [`HesitantElement`] to every (parameter, object) pair
//! for the parameters in its *support*; parameters outside the support carry
//! no information until [`SoftSet::normalize`] extends them with null cells.
//!
//! Support conventions follow the source definitions closely:
//!
//! * [`union`](SoftSet::union) and [`intersection`](SoftSet::intersection)
//!   work on the raw supports (`A ∪ B` / `A ∩ B`); an intersection of sets
//!   with disjoint supports is an error, not an empty set.
//! * [`complement`](SoftSet::complement) normalizes first — the complement of
//!   a missing parameter is an all-`[1,1]` row, so the support must be made
//!   explicit.
//! * [`is_subset`](SoftSet::is_subset) and [`equals`](SoftSet::equals) compare
//!   raw supports and never normalize implicitly; the topology layer maintains
//!   normalized members so that its comparisons are always like-for-like.

use std::fmt;
use std::sync::Arc;

use crate::element::{ElementError, HesitantElement};
use crate::interval::OrderProfile;

/// Error produced when a context cannot be formed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContextError {
    /// The universe has no objects.
    #[error("universe must contain at least one object")]
    EmptyUniverse,
    /// The parameter set is empty.
    #[error("parameter set must contain at least one parameter")]
    EmptyParameters,
    /// An object or parameter name is the empty string.
    #[error("names must be nonempty strings")]
    BlankName,
    /// An object name occurs twice in the universe.
    #[error("duplicate object name {name:?}")]
    DuplicateObject {
        /// The repeated name.
        name: String,
    },
    /// A parameter name occurs twice.
    #[error("duplicate parameter name {name:?}")]
    DuplicateParameter {
        /// The repeated name.
        name: String,
    },
}

/// The shared frame of discernment: an ordered universe of objects and an
/// ordered full parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    objects: Vec<String>,
    parameters: Vec<String>,
}

impl Context {
    /// Builds a context, validating that both name lists are nonempty,
    /// distinct, and free of blank names.
    pub fn new(objects: Vec<String>, parameters: Vec<String>) -> Result<Arc<Self>, ContextError> {
        if objects.is_empty() {
            return Err(ContextError::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(ContextError::EmptyParameters);
        }
        for name in objects.iter().chain(&parameters) {
            if name.is_empty() {
                return Err(ContextError::BlankName);
            }
        }
        for (i, name) in objects.iter().enumerate() {
            if objects[..i].contains(name) {
                return Err(ContextError::DuplicateObject { name: name.clone() });
            }
        }
        for (i, name) in parameters.iter().enumerate() {
            if parameters[..i].contains(name) {
                return Err(ContextError::DuplicateParameter { name: name.clone() });
            }
        }
        Ok(Arc::new(Context {
            objects,
            parameters,
        }))
    }

    /// The universe, in declaration order.
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    /// The full parameter set, in declaration order.
    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    /// The index of an object name, if declared.
    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|n| n == name)
    }

    /// The index of a parameter name, if declared.
    pub fn parameter_index(&self, name: &str) -> Option<usize> {
        self.parameters.iter().position(|n| n == name)
    }
}

/// Error produced by soft-set construction and algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SoftSetError {
    /// The operands belong to different contexts.
    #[error("operands belong to different contexts")]
    ContextMismatch,
    /// A parameter name is not declared in the context.
    #[error("unknown parameter {name:?}")]
    UnknownParameter {
        /// The unresolved name.
        name: String,
    },
    /// An object name is not declared in the context.
    #[error("unknown object {name:?}")]
    UnknownObject {
        /// The unresolved name.
        name: String,
    },
    /// The same cell was assigned twice.
    #[error("duplicate cell ({parameter}, {object})")]
    DuplicateCell {
        /// Parameter name of the repeated cell.
        parameter: String,
        /// Object name of the repeated cell.
        object: String,
    },
    /// A declared parameter row does not cover every object.
    #[error(
        "missing cell ({parameter}, {object}): a parameter in the support must map every object"
    )]
    MissingCell {
        /// Parameter whose row is incomplete.
        parameter: String,
        /// Object with no assigned element.
        object: String,
    },
    /// No parameter carries any cells.
    #[error("soft set must have nonempty support")]
    EmptySupport,
    /// Intersection of soft sets whose supports are disjoint.
    #[error("intersection undefined: the operand supports are disjoint")]
    EmptyIntersection,
    /// An element inside a cell was invalid.
    #[error(transparent)]
    Element(#[from] ElementError),
}

/// An interval-valued hesitant fuzzy soft set: for each parameter in its
/// support, a total row of hesitant elements over the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftSet {
    context: Arc<Context>,
    /// Indexed by parameter; `Some(row)` holds one element per object.
    rows: Vec<Option<Vec<HesitantElement>>>,
}

impl SoftSet {
    fn uniform(context: &Arc<Context>, cell: HesitantElement) -> Self {
        let row = vec![cell; context.objects.len()];
        SoftSet {
            context: Arc::clone(context),
            rows: vec![Some(row); context.parameters.len()],
        }
    }

    /// The null soft set `φ̃`: full support, every cell `{[0,0]}`.
    pub fn null(context: &Arc<Context>) -> Self {
        Self::uniform(context, HesitantElement::null())
    }

    /// The absolute soft set `Ẽ`: full support, every cell `{[1,1]}`.
    pub fn absolute(context: &Arc<Context>) -> Self {
        Self::uniform(context, HesitantElement::absolute())
    }

    /// Starts building a soft set cell by cell.
    pub fn builder(context: &Arc<Context>) -> SoftSetBuilder {
        SoftSetBuilder {
            context: Arc::clone(context),
            rows: vec![None; context.parameters.len()],
        }
    }

    /// The owning context.
    pub fn context(&self) -> &Arc<Context> {
        &self.context
    }

    /// The parameter names in the support, in context order.
    pub fn support(&self) -> Vec<&str> {
        self.context
            .parameters
            .iter()
            .zip(&self.rows)
            .filter(|(_, row)| row.is_some())
            .map(|(name, _)| name.as_str())
            .collect()
    }

    /// Whether every parameter is in the support.
    pub fn has_full_support(&self) -> bool {
        self.rows.iter().all(Option::is_some)
    }

    /// The cell at a (parameter, object) index pair, if the parameter is in
    /// the support. Panics on out-of-range indices.
    pub fn cell_at(&self, parameter: usize, object: usize) -> Option<&HesitantElement> {
        self.rows[parameter].as_ref().map(|row| &row[object])
    }

    /// The cell for named parameter and object, if both are declared and the
    /// parameter is in the support.
    pub fn cell(&self, parameter: &str, object: &str) -> Option<&HesitantElement> {
        let p = self.context.parameter_index(parameter)?;
        let o = self.context.object_index(object)?;
        self.cell_at(p, o)
    }

    /// Extends the support to the full parameter set, filling missing rows
    /// with null cells.
    pub fn normalize(&self) -> SoftSet {
        let null_row = || vec![HesitantElement::null(); self.context.objects.len()];
        SoftSet {
            context: Arc::clone(&self.context),
            rows: self
                .rows
                .iter()
                .map(|row| Some(row.clone().unwrap_or_else(null_row)))
                .collect(),
        }
    }

    /// The complement: normalizes first, then complements every cell.
    pub fn complement(&self) -> SoftSet {
        let normalized = self.normalize();
        SoftSet {
            context: Arc::clone(&self.context),
            rows: normalized
                .rows
                .into_iter()
                .map(|row| row.map(|cells| cells.iter().map(HesitantElement::complement).collect()))
                .collect(),
        }
    }

    fn merge(
        &self,
        other: &SoftSet,
        keep_single: bool,
        combine: impl Fn(&HesitantElement, &HesitantElement) -> HesitantElement,
    ) -> Result<SoftSet, SoftSetError> {
        if self.context != other.context {
            return Err(SoftSetError::ContextMismatch);
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| match (a, b) {
                (Some(ra), Some(rb)) => {
                    Some(ra.iter().zip(rb).map(|(x, y)| combine(x, y)).collect())
                }
                (Some(ra), None) if keep_single => Some(ra.clone()),
                (None, Some(rb)) if keep_single => Some(rb.clone()),
                _ => None,
            })
            .collect::<Vec<_>>();
        if rows.iter().all(Option::is_none) {
            return Err(SoftSetError::EmptyIntersection);
        }
        Ok(SoftSet {
            context: Arc::clone(&self.context),
            rows,
        })
    }

    /// The union `F ∪̃ G`: support `A ∪ B`; joined cells on the common part,
    /// rows copied verbatim where only one operand is defined.
    pub fn union(&self, other: &SoftSet, profile: OrderProfile) -> Result<SoftSet, SoftSetError> {
        self.merge(other, true, |x, y| x.join(y, profile))
    }

    /// The intersection `F ∩̃ G`: support `A ∩ B` with met cells.
    ///
    /// Errors with [`SoftSetError::EmptyIntersection`] when the supports are
    /// disjoint — the definition requires `A ∩ B ≠ φ`.
    pub fn intersection(
        &self,
        other: &SoftSet,
        profile: OrderProfile,
    ) -> Result<SoftSet, SoftSetError> {
        self.merge(other, false, |x, y| x.meet(y, profile))
    }

    /// Whether `self ⊆ other`: the raw support of `self` is contained in that
    /// of `other`, and on it every cell of `self` is `leq` the matching cell.
    ///
    /// Sets over different contexts are never comparable (returns false).
    /// No normalization is applied; normalize both sides first to compare
    /// modulo missing parameters.
    pub fn is_subset(&self, other: &SoftSet, profile: OrderProfile) -> bool {
        if self.context != other.context {
            return false;
        }
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| match (a, b) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(ra), Some(rb)) => ra.iter().zip(rb).all(|(x, y)| x.leq(y, profile)),
            })
    }

    /// Soft equality: subset both ways — equal supports and cellwise
    /// equivalent elements under the profile.
    pub fn equals(&self, other: &SoftSet, profile: OrderProfile) -> bool {
        self.is_subset(other, profile) && other.is_subset(self, profile)
    }

    /// The first cell, in parameter-major then object order, at which the two
    /// sets (compared after normalization) are not equivalent under the
    /// profile. `None` means the normalized sets are equivalent cellwise.
    pub fn first_cell_difference(
        &self,
        other: &SoftSet,
        profile: OrderProfile,
    ) -> Option<(usize, usize)> {
        if self.context != other.context {
            return Some((0, 0));
        }
        let a = self.normalize();
        let b = other.normalize();
        for p in 0..self.context.parameters.len() {
            let (ra, rb) = (a.rows[p].as_ref().unwrap(), b.rows[p].as_ref().unwrap());
            for o in 0..self.context.objects.len() {
                if !ra[o].equiv(&rb[o], profile) {
                    return Some((p, o));
                }
            }
        }
        None
    }

    /// The normalized restriction to a single parameter: that parameter keeps
    /// its (normalized) row, every other parameter receives null cells.
    /// Returns `None` for an undeclared parameter name.
    pub fn restrict_to_parameter(&self, parameter: &str) -> Option<SoftSet> {
        let p = self.context.parameter_index(parameter)?;
        let normalized = self.normalize();
        let rows = (0..self.context.parameters.len())
            .map(|i| {
                if i == p {
                    normalized.rows[i].clone()
                } else {
                    Some(vec![HesitantElement::null(); self.context.objects.len()])
                }
            })
            .collect();
        Some(SoftSet {
            context: Arc::clone(&self.context),
            rows,
        })
    }

    /// Iterates the populated cells in parameter-major, object-minor order.
    pub fn cells(&self) -> impl Iterator<Item = (&str, &str, &HesitantElement)> {
        self.rows.iter().enumerate().flat_map(move |(p, row)| {
            row.iter().flat_map(move |cells| {
                cells.iter().enumerate().map(move |(o, element)| {
                    (
                        self.context.parameters[p].as_str(),
                        self.context.objects[o].as_str(),
                        element,
                    )
                })
            })
        })
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, row) in self.rows.iter().enumerate() {
            let Some(cells) = row else { continue };
            write!(f, "{}:", self.context.parameters[p])?;
            for (o, element) in cells.iter().enumerate() {
                if o > 0 {
                    f.write_str(";")?;
                }
                write!(f, " {} -> {element}", self.context.objects[o])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Cell-by-cell constructor for [`SoftSet`].
#[derive(Debug, Clone)]
pub struct SoftSetBuilder {
    context: Arc<Context>,
    rows: Vec<Option<Vec<Option<HesitantElement>>>>,
}

impl SoftSetBuilder {
    /// Assigns one cell. Each (parameter, object) pair may be assigned once.
    pub fn set_cell(
        &mut self,
        parameter: &str,
        object: &str,
        element: HesitantElement,
    ) -> Result<&mut Self, SoftSetError> {
        let p = self.context.parameter_index(parameter).ok_or_else(|| {
            SoftSetError::UnknownParameter {
                name: parameter.to_owned(),
            }
        })?;
        let o = self
            .context
            .object_index(object)
            .ok_or_else(|| SoftSetError::UnknownObject {
                name: object.to_owned(),
            })?;
        let row = self.rows[p].get_or_insert_with(|| vec![None; self.context.objects.len()]);
        if row[o].is_some() {
            return Err(SoftSetError::DuplicateCell {
                parameter: parameter.to_owned(),
                object: object.to_owned(),
            });
        }
        row[o] = Some(element);
        Ok(self)
    }

    /// Finishes the set: every declared parameter row must be total over the
    /// universe, and at least one row must exist.
    pub fn finish(self) -> Result<SoftSet, SoftSetError> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (p, row) in self.rows.into_iter().enumerate() {
            match row {
                None => rows.push(None),
                Some(cells) => {
                    let mut complete = Vec::with_capacity(cells.len());
                    for (o, cell) in cells.into_iter().enumerate() {
                        match cell {
                            Some(element) => complete.push(element),
                            None => {
                                return Err(SoftSetError::MissingCell {
                                    parameter: self.context.parameters[p].clone(),
                                    object: self.context.objects[o].clone(),
                                })
                            }
                        }
                    }
                    rows.push(Some(complete));
                }
            }
        }
        if rows.iter().all(Option::is_none) {
            return Err(SoftSetError::EmptySupport);
        }
        Ok(SoftSet {
            context: self.context,
            rows,
        })
    }
}
