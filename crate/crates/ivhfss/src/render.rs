//! Shared rendering helpers for the command-line surface: indented text
//! blocks for soft sets and violation reports, plus the JSON fragments used
//! by machine-format output.
//!
//! Machine output must be byte-deterministic for a fixed input and flag set;
//! everything here builds `serde_json` maps in a fixed insertion order and
//! relies on canonical rational rendering for endpoints.

use serde_json::{Map, Value};

use crate::rational::render_rational;
use crate::soft_set::SoftSet;
use crate::topology::Violation;
use crate::workspace::soft_set_to_json;

/// Renders a soft set as indented text, one line per support parameter.
pub fn set_text(set: &SoftSet, indent: usize) -> String {
    let pad = " ".repeat(indent);
    let mut rendered = String::new();
    for line in set.to_string().lines() {
        rendered.push_str(&pad);
        rendered.push_str(line);
        rendered.push('\n');
    }
    rendered
}

/// Renders one violation as an indented text block naming the axiom, the
/// operands, the nearest member with its first differing cell, and the
/// witness set.
pub fn violation_text(violation: &Violation) -> String {
    let mut rendered = format!("violation: {}", violation.axiom);
    if !violation.operands.is_empty() {
        rendered.push_str(&format!(" ({})", violation.operands.join(", ")));
    }
    rendered.push('\n');
    if let Some(nearest) = &violation.nearest {
        rendered.push_str(&format!(
            "  nearest: {} at ({}, {})\n",
            nearest.member, nearest.parameter, nearest.object
        ));
    }
    rendered.push_str("  witness:\n");
    rendered.push_str(&set_text(&violation.witness, 4));
    rendered
}

/// The machine form of a violation list.
pub fn violations_to_json(violations: &[Violation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|violation| {
                let mut map = Map::new();
                map.insert(
                    "axiom".to_owned(),
                    Value::String(violation.axiom.as_str().to_owned()),
                );
                map.insert(
                    "operands".to_owned(),
                    Value::Array(
                        violation
                            .operands
                            .iter()
                            .map(|name| Value::String(name.clone()))
                            .collect(),
                    ),
                );
                let nearest = match &violation.nearest {
                    Some(nearest) => {
                        let mut cell = Map::new();
                        cell.insert("member".to_owned(), Value::String(nearest.member.clone()));
                        cell.insert(
                            "parameter".to_owned(),
                            Value::String(nearest.parameter.clone()),
                        );
                        cell.insert("object".to_owned(), Value::String(nearest.object.clone()));
                        Value::Object(cell)
                    }
                    None => Value::Null,
                };
                map.insert("nearest".to_owned(), nearest);
                map.insert("witness".to_owned(), soft_set_to_json(&violation.witness));
                Value::Object(map)
            })
            .collect(),
    )
}

/// The per-cell score table as text: one line per support parameter.
pub fn score_text(set: &SoftSet) -> String {
    let context = set.context();
    let mut rendered = String::new();
    for parameter in set.support() {
        rendered.push_str(parameter);
        rendered.push(':');
        for (i, object) in context.objects().iter().enumerate() {
            if i > 0 {
                rendered.push(';');
            }
            let score = set
                .cell(parameter, object)
                .expect("support rows are total")
                .score();
            rendered.push_str(&format!(" {object} -> {score}"));
        }
        rendered.push('\n');
    }
    rendered
}

/// The per-cell score table in machine form: parameter → object → `[l, u]`.
pub fn score_json(set: &SoftSet) -> Value {
    let context = set.context();
    let mut parameters = Map::new();
    for parameter in set.support() {
        let mut row = Map::new();
        for object in context.objects() {
            let score = set
                .cell(parameter, object)
                .expect("support rows are total")
                .score();
            row.insert(
                object.clone(),
                Value::Array(vec![
                    Value::String(render_rational(score.lower())),
                    Value::String(render_rational(score.upper())),
                ]),
            );
        }
        parameters.insert(parameter.to_owned(), Value::Object(row));
    }
    Value::Object(parameters)
}
