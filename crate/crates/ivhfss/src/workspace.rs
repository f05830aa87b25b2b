//! The on-disk workspace format: a JSON document declaring one context, named
//! soft sets, and named topologies (member-name lists).
//!
//! ```json
//! {
//!   "universe": ["h1", "h2"],
//!   "parameters": ["e1", "e2"],
//!   "sets": {
//!     "F_A": { "e1": { "h1": [["0.3", "0.8"]], "h2": [["0.1", "0.4"]] } }
//!   },
//!   "topologies": { "tau": ["phi", "E", "F_A"] }
//! }
//! ```
//!
//! Endpoints are decimal/fraction **strings**, never JSON numbers, so parsing
//! is exact. A set lists only the parameters in its support; listed rows must
//! be total over the universe. The names `phi` and `E` are reserved for the
//! null and absolute sets: topologies may reference them freely, and the
//! `sets` table may not redeclare them.
//!
//! Errors fall into three categories, surfaced verbatim in CLI diagnostics:
//! `ParseError` for a document that is not JSON of the right shape,
//! `SchemaError` for name-level problems (unknown/duplicate/reserved names,
//! empty elements, partial rows, empty support), and `ValueError` for bad
//! endpoints (malformed literal, outside `[0,1]`, or inverted). Duplicate keys
//! inside JSON objects are detected — the maps are deserialized as ordered
//! entry lists, not last-key-wins — and reported as `SchemaError`s.

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use serde::de::{Deserialize, Deserializer, MapAccess, Visitor};
use serde_json::{Map, Value};

use crate::element::{ElementError, HesitantElement};
use crate::interval::UnitInterval;
use crate::rational::render_rational;
use crate::soft_set::{Context, SoftSet, SoftSetError};
use crate::topology::Family;

/// Why a workspace document was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WorkspaceError {
    /// The document is not well-formed JSON of the expected shape.
    #[error("ParseError: {message}")]
    Parse {
        /// Human-readable cause.
        message: String,
    },
    /// The document is shaped correctly but violates a naming or totality
    /// rule.
    #[error("SchemaError: {message}")]
    Schema {
        /// Human-readable cause.
        message: String,
    },
    /// An interval endpoint is malformed, outside `[0,1]`, or inverted.
    #[error("ValueError: {message}")]
    Value {
        /// Human-readable cause.
        message: String,
    },
}

fn schema(message: String) -> WorkspaceError {
    WorkspaceError::Schema { message }
}

/// A JSON object deserialized as an ordered entry list, keeping duplicate
/// keys visible for later validation.
struct KeyedSeq<T>(Vec<(String, T)>);

impl<T> Default for KeyedSeq<T> {
    fn default() -> Self {
        KeyedSeq(Vec::new())
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for KeyedSeq<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct KeyedSeqVisitor<T>(PhantomData<T>);

        impl<'de, T: Deserialize<'de>> Visitor<'de> for KeyedSeqVisitor<T> {
            type Value = KeyedSeq<T>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a JSON object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut entries = Vec::new();
                while let Some(entry) = map.next_entry::<String, T>()? {
                    entries.push(entry);
                }
                Ok(KeyedSeq(entries))
            }
        }

        deserializer.deserialize_map(KeyedSeqVisitor(PhantomData))
    }
}

impl<T> KeyedSeq<T> {
    /// Rejects duplicate keys, naming the first repeated one.
    fn reject_duplicates(&self, what: &str) -> Result<(), WorkspaceError> {
        for (i, (key, _)) in self.0.iter().enumerate() {
            if self.0[..i].iter().any(|(earlier, _)| earlier == key) {
                return Err(schema(format!("duplicate {what} {key:?}")));
            }
        }
        Ok(())
    }
}

type RawRow = KeyedSeq<Vec<(String, String)>>;
type RawSet = KeyedSeq<RawRow>;

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(default)]
    sets: KeyedSeq<RawSet>,
    #[serde(default)]
    topologies: KeyedSeq<Vec<String>>,
}

/// A parsed workspace: one context, named soft sets (raw supports preserved,
/// cells canonicalized), and named topologies as member-name lists.
#[derive(Debug, Clone)]
pub struct Workspace {
    context: Arc<Context>,
    sets: Vec<(String, SoftSet)>,
    topologies: Vec<(String, Vec<String>)>,
}

impl Workspace {
    /// Assembles a workspace from already-built parts, enforcing the same
    /// naming rules as [`Workspace::parse_str`].
    pub fn new(
        context: &Arc<Context>,
        sets: Vec<(String, SoftSet)>,
        topologies: Vec<(String, Vec<String>)>,
    ) -> Result<Workspace, WorkspaceError> {
        for (i, (name, set)) in sets.iter().enumerate() {
            if name == "phi" || name == "E" {
                return Err(schema(format!("set name {name:?} is reserved")));
            }
            if sets[..i].iter().any(|(earlier, _)| earlier == name) {
                return Err(schema(format!("duplicate set name {name:?}")));
            }
            if set.context() != context {
                return Err(schema(format!(
                    "set {name:?} was built over a different context"
                )));
            }
        }
        for (i, (name, members)) in topologies.iter().enumerate() {
            if topologies[..i].iter().any(|(earlier, _)| earlier == name) {
                return Err(schema(format!("duplicate topology name {name:?}")));
            }
            for (j, member) in members.iter().enumerate() {
                let declared = member == "phi"
                    || member == "E"
                    || sets.iter().any(|(set_name, _)| set_name == member);
                if !declared {
                    return Err(schema(format!(
                        "topology {name:?} references unknown set {member:?}"
                    )));
                }
                if members[..j].iter().any(|earlier| earlier == member) {
                    return Err(schema(format!(
                        "topology {name:?} lists member {member:?} twice"
                    )));
                }
            }
        }
        Ok(Workspace {
            context: Arc::clone(context),
            sets,
            topologies,
        })
    }

    /// Parses a JSON workspace document.
    pub fn parse_str(document: &str) -> Result<Workspace, WorkspaceError> {
        let raw: RawWorkspace =
            serde_json::from_str(document).map_err(|e| WorkspaceError::Parse {
                message: e.to_string(),
            })?;
        let context =
            Context::new(raw.universe, raw.parameters).map_err(|e| schema(e.to_string()))?;

        raw.sets.reject_duplicates("set name")?;
        let mut sets = Vec::with_capacity(raw.sets.0.len());
        for (name, raw_set) in raw.sets.0 {
            if name == "phi" || name == "E" {
                return Err(schema(format!("set name {name:?} is reserved")));
            }
            let set = build_set(&context, &name, raw_set)?;
            sets.push((name, set));
        }

        raw.topologies.reject_duplicates("topology name")?;
        let topologies = raw.topologies.0;
        Workspace::new(&context, sets, topologies)
    }

    /// The shared context.
    pub fn context(&self) -> &Arc<Context> {
        &self.context
    }

    /// The declared sets, in document order.
    pub fn sets(&self) -> &[(String, SoftSet)] {
        &self.sets
    }

    /// The declared topologies, in document order.
    pub fn topologies(&self) -> &[(String, Vec<String>)] {
        &self.topologies
    }

    /// Resolves a set name: `phi` and `E` yield the null and absolute sets,
    /// anything else looks up the declared table. `None` for unknown names.
    pub fn resolve_set(&self, name: &str) -> Option<SoftSet> {
        match name {
            "phi" => Some(SoftSet::null(&self.context)),
            "E" => Some(SoftSet::absolute(&self.context)),
            _ => self
                .sets
                .iter()
                .find(|(set_name, _)| set_name == name)
                .map(|(_, set)| set.clone()),
        }
    }

    /// Builds the named topology as a [`Family`]. `None` for unknown names.
    pub fn family(&self, name: &str) -> Option<Family> {
        let (_, member_names) = self
            .topologies
            .iter()
            .find(|(topology_name, _)| topology_name == name)?;
        let members = member_names
            .iter()
            .map(|member| {
                let set = self
                    .resolve_set(member)
                    .expect("workspace construction checked referential integrity");
                (member.clone(), set)
            })
            .collect();
        Some(Family::new(&self.context, members).expect("members share the workspace context"))
    }

    /// Renders the workspace back to a JSON value in the file schema, with
    /// canonical cells and raw supports.
    pub fn to_json_value(&self) -> Value {
        let mut root = Map::new();
        root.insert(
            "universe".to_owned(),
            Value::Array(
                self.context
                    .objects()
                    .iter()
                    .map(|o| Value::String(o.clone()))
                    .collect(),
            ),
        );
        root.insert(
            "parameters".to_owned(),
            Value::Array(
                self.context
                    .parameters()
                    .iter()
                    .map(|p| Value::String(p.clone()))
                    .collect(),
            ),
        );
        let mut sets = Map::new();
        for (name, set) in &self.sets {
            sets.insert(name.clone(), soft_set_to_json(set));
        }
        root.insert("sets".to_owned(), Value::Object(sets));
        let mut topologies = Map::new();
        for (name, members) in &self.topologies {
            topologies.insert(
                name.clone(),
                Value::Array(members.iter().map(|m| Value::String(m.clone())).collect()),
            );
        }
        root.insert("topologies".to_owned(), Value::Object(topologies));
        Value::Object(root)
    }

    /// The JSON document for [`Workspace::to_json_value`], pretty-printed.
    pub fn to_json_string(&self) -> String {
        let mut rendered = serde_json::to_string_pretty(&self.to_json_value())
            .expect("workspace values contain no non-serializable data");
        rendered.push('\n');
        rendered
    }
}

fn bad_cell(set: &str, parameter: &str, object: &str, error: SoftSetError) -> WorkspaceError {
    let located = format!("set {set:?}, parameter {parameter:?}, object {object:?}: {error}");
    match error {
        SoftSetError::Element(ElementError::Interval(_)) => {
            WorkspaceError::Value { message: located }
        }
        _ => schema(located),
    }
}

fn build_set(
    context: &Arc<Context>,
    name: &str,
    raw_set: RawSet,
) -> Result<SoftSet, WorkspaceError> {
    raw_set.reject_duplicates(&format!("parameter in set {name:?}"))?;
    let mut builder = SoftSet::builder(context);
    for (parameter, row) in raw_set.0 {
        row.reject_duplicates(&format!(
            "object under parameter {parameter:?} in set {name:?}"
        ))?;
        for (object, pairs) in row.0 {
            let borrowed: Vec<(&str, &str)> = pairs
                .iter()
                .map(|(lower, upper)| (lower.as_str(), upper.as_str()))
                .collect();
            let element = HesitantElement::parse(&borrowed)
                .map_err(|e| bad_cell(name, &parameter, &object, SoftSetError::Element(e)))?;
            builder
                .set_cell(&parameter, &object, element)
                .map_err(|e| bad_cell(name, &parameter, &object, e))?;
        }
    }
    builder
        .finish()
        .map_err(|e| schema(format!("set {name:?}: {e}")))
}

/// Renders a soft set in the file schema: parameter → object → interval
/// pairs, with canonical decimal-string endpoints. Only support rows appear.
pub fn soft_set_to_json(set: &SoftSet) -> Value {
    let context = set.context();
    let mut parameters = Map::new();
    for parameter in set.support() {
        let mut row = Map::new();
        for object in context.objects() {
            let cell = set.cell(parameter, object).expect("support rows are total");
            row.insert(object.clone(), element_to_json(cell));
        }
        parameters.insert(parameter.to_owned(), Value::Object(row));
    }
    Value::Object(parameters)
}

/// Renders one hesitant element as an array of `[lower, upper]` string pairs.
pub fn element_to_json(element: &HesitantElement) -> Value {
    Value::Array(element.intervals().iter().map(interval_to_json).collect())
}

fn interval_to_json(interval: &UnitInterval) -> Value {
    Value::Array(vec![
        Value::String(render_rational(interval.lower())),
        Value::String(render_rational(interval.upper())),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::hfe;
    use crate::interval::OrderProfile::{Componentwise, RankSelect};

    const SMALL: &str = r#"{
        "universe": ["h1", "h2"],
        "parameters": ["e1", "e2"],
        "sets": {
            "F_A": {
                "e1": { "h1": [["0.6", "0.8"], ["0.2", "0.7"]], "h2": [["0.1", "0.4"]] }
            }
        },
        "topologies": { "tau": ["phi", "E", "F_A"] }
    }"#;

    #[test]
    fn parses_a_document_and_canonicalizes_cells() {
        let ws = Workspace::parse_str(SMALL).unwrap();
        assert_eq!(ws.context().objects(), ["h1", "h2"]);
        assert_eq!(ws.context().parameters(), ["e1", "e2"]);
        let f = ws.resolve_set("F_A").unwrap();
        assert_eq!(f.support(), vec!["e1"]);
        // Written as {[0.6,0.8],[0.2,0.7]} but stored in canonical order.
        assert_eq!(
            f.cell("e1", "h1").unwrap(),
            &hfe(&[("0.2", "0.7"), ("0.6", "0.8")])
        );
        let family = ws.family("tau").unwrap();
        assert!(family.validate(RankSelect).is_valid());
        assert!(ws.resolve_set("nope").is_none());
        assert!(ws.family("nope").is_none());
    }

    #[test]
    fn reserved_names_resolve_without_declaration() {
        let ws = Workspace::parse_str(SMALL).unwrap();
        let phi = ws.resolve_set("phi").unwrap();
        let e = ws.resolve_set("E").unwrap();
        assert!(phi.equals(&SoftSet::null(ws.context()), Componentwise));
        assert!(e.equals(&SoftSet::absolute(ws.context()), Componentwise));
    }

    fn expect_schema(document: &str, needle: &str) {
        match Workspace::parse_str(document) {
            Err(WorkspaceError::Schema { message }) => {
                assert!(
                    message.contains(needle),
                    "message {message:?} should mention {needle:?}"
                );
            }
            other => panic!("expected SchemaError mentioning {needle:?}, got {other:?}"),
        }
    }

    #[test]
    fn redeclaring_a_reserved_name_is_a_schema_error() {
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "phi": { "e1": { "h1": [["0", "0"]] } } }
            }"#,
            "reserved",
        );
    }

    #[test]
    fn duplicate_keys_are_schema_errors_not_last_wins() {
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": {
                    "F": { "e1": { "h1": [["0.1", "0.2"]] } },
                    "F": { "e1": { "h1": [["0.3", "0.4"]] } }
                }
            }"#,
            "duplicate set name",
        );
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1", "e2"],
                "sets": {
                    "F": {
                        "e1": { "h1": [["0.1", "0.2"]] },
                        "e1": { "h1": [["0.3", "0.4"]] }
                    }
                }
            }"#,
            "duplicate parameter",
        );
        expect_schema(
            r#"{
                "universe": ["h1", "h2"], "parameters": ["e1"],
                "sets": {
                    "F": { "e1": { "h1": [["0.1", "0.2"]], "h1": [["0.3", "0.4"]] } }
                }
            }"#,
            "duplicate object",
        );
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "topologies": { "tau": ["phi", "E"], "tau": ["phi", "E"] }
            }"#,
            "duplicate topology name",
        );
    }

    #[test]
    fn referential_and_totality_problems_are_schema_errors() {
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "F": { "e9": { "h1": [["0.1", "0.2"]] } } }
            }"#,
            "e9",
        );
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "F": { "e1": { "h9": [["0.1", "0.2"]] } } }
            }"#,
            "h9",
        );
        // A listed row must cover the whole universe.
        expect_schema(
            r#"{
                "universe": ["h1", "h2"], "parameters": ["e1"],
                "sets": { "F": { "e1": { "h1": [["0.1", "0.2"]] } } }
            }"#,
            "F",
        );
        // A set must have at least one support row.
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "F": {} }
            }"#,
            "F",
        );
        // An element must have at least one interval.
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "F": { "e1": { "h1": [] } } }
            }"#,
            "h1",
        );
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "topologies": { "tau": ["phi", "E", "ghost"] }
            }"#,
            "ghost",
        );
        expect_schema(
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "topologies": { "tau": ["phi", "phi"] }
            }"#,
            "twice",
        );
        expect_schema(
            r#"{ "universe": ["h1", "h1"], "parameters": ["e1"] }"#,
            "h1",
        );
    }

    #[test]
    fn bad_endpoints_are_value_errors() {
        let inverted = r#"{
            "universe": ["h1"], "parameters": ["e1"],
            "sets": { "F": { "e1": { "h1": [["0.8", "0.2"]] } } }
        }"#;
        assert!(matches!(
            Workspace::parse_str(inverted),
            Err(WorkspaceError::Value { .. })
        ));
        let out_of_range = r#"{
            "universe": ["h1"], "parameters": ["e1"],
            "sets": { "F": { "e1": { "h1": [["0.5", "1.2"]] } } }
        }"#;
        assert!(matches!(
            Workspace::parse_str(out_of_range),
            Err(WorkspaceError::Value { .. })
        ));
        let malformed_number = r#"{
            "universe": ["h1"], "parameters": ["e1"],
            "sets": { "F": { "e1": { "h1": [["zero", "0.5"]] } } }
        }"#;
        assert!(matches!(
            Workspace::parse_str(malformed_number),
            Err(WorkspaceError::Value { .. })
        ));
    }

    #[test]
    fn shape_problems_are_parse_errors() {
        for document in [
            "not json at all",
            r#"{ "universe": ["h1"] }"#,
            r#"{ "universe": ["h1"], "parameters": ["e1"], "extra": 1 }"#,
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "F": { "e1": { "h1": [["0.1", "0.2", "0.3"]] } } }
            }"#,
            r#"{
                "universe": ["h1"], "parameters": ["e1"],
                "sets": { "F": { "e1": { "h1": [[0.1, 0.2]] } } }
            }"#,
        ] {
            assert!(
                matches!(
                    Workspace::parse_str(document),
                    Err(WorkspaceError::Parse { .. })
                ),
                "expected ParseError for {document}"
            );
        }
    }

    #[test]
    fn round_trips_through_json() {
        let ws = Workspace::parse_str(SMALL).unwrap();
        let rendered = ws.to_json_string();
        let reparsed = Workspace::parse_str(&rendered).unwrap();
        assert_eq!(ws.sets().len(), reparsed.sets().len());
        for ((name_a, set_a), (name_b, set_b)) in ws.sets().iter().zip(reparsed.sets()) {
            assert_eq!(name_a, name_b);
            assert!(set_a.equals(set_b, Componentwise));
        }
        assert_eq!(ws.topologies(), reparsed.topologies());
        // Rendering is canonical, so a second round trip is byte-identical.
        assert_eq!(rendered, reparsed.to_json_string());
    }

    #[test]
    fn fractional_endpoints_survive_round_trips() {
        let document = r#"{
            "universe": ["h1"], "parameters": ["e1"],
            "sets": { "F": { "e1": { "h1": [["1/3", "2/3"], ["0.25", "0.5"]] } } }
        }"#;
        let ws = Workspace::parse_str(document).unwrap();
        let rendered = ws.to_json_string();
        assert!(rendered.contains("1/3"), "kept exact thirds: {rendered}");
        assert!(
            rendered.contains("0.25"),
            "decimal denominators render as decimals"
        );
        let reparsed = Workspace::parse_str(&rendered).unwrap();
        assert!(ws.sets()[0].1.equals(&reparsed.sets()[0].1, Componentwise));
    }

    #[test]
    fn programmatic_construction_checks_names() {
        let ws = Workspace::parse_str(SMALL).unwrap();
        let ctx = Arc::clone(ws.context());
        let f = ws.resolve_set("F_A").unwrap();
        assert!(matches!(
            Workspace::new(&ctx, vec![("E".into(), f.clone())], vec![]),
            Err(WorkspaceError::Schema { .. })
        ));
        assert!(matches!(
            Workspace::new(
                &ctx,
                vec![("F".into(), f.clone())],
                vec![("tau".into(), vec!["phi".into(), "G".into()])]
            ),
            Err(WorkspaceError::Schema { .. })
        ));
        let ok = Workspace::new(
            &ctx,
            vec![("F".into(), f)],
            vec![("tau".into(), vec!["phi".into(), "E".into(), "F".into()])],
        )
        .unwrap();
        assert!(ok.family("tau").unwrap().validate(RankSelect).is_valid());
    }
}
