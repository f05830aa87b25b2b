//! Reading and writing workspace documents: the JSON format shared by the
//! library, the command-line tool, and the bundled fixtures.
//!
//! Run with `cargo run --example workspace_files`.

use ivhfss::fixtures;
use ivhfss::workspace::Workspace;

fn main() {
    // A workspace declares one context, any number of named soft sets, and
    // named topologies listing their members. Interval endpoints are decimal
    // or fraction strings — they parse to exact rationals.
    let document = r#"{
        "universe": ["h1", "h2"],
        "parameters": ["e1", "e2"],
        "sets": {
            "F": {
                "e1": {
                    "h1": [["0.6", "0.8"], ["0.2", "0.7"]],
                    "h2": [["1/3", "2/3"]]
                }
            },
            "G": {
                "e1": {
                    "h1": [["0.7", "0.9"]],
                    "h2": [["0.4", "0.8"]]
                },
                "e2": {
                    "h1": [["0.1", "0.2"]],
                    "h2": [["0", "0.5"]]
                }
            }
        },
        "topologies": {
            "tau": ["phi", "E", "G"]
        }
    }"#;

    let ws = Workspace::parse_str(document).unwrap();
    println!(
        "parsed a workspace over {:?} × {:?}",
        ws.context().objects(),
        ws.context().parameters()
    );

    // Sets resolve by name; `phi` and `E` are always available without being
    // declared. Cells come back canonicalized (ascending rank order).
    let f = ws.resolve_set("F").unwrap();
    println!("F:\n{f}");
    println!("phi resolves too:\n{}", ws.resolve_set("phi").unwrap());

    // Topologies resolve into families ready for validation and queries.
    let family = ws.family("tau").unwrap();
    println!(
        "tau has {} members and validates: {}",
        family.members().len(),
        family
            .validate(ivhfss::interval::OrderProfile::Componentwise)
            .is_valid()
    );
    println!();

    // Rendering is deterministic: canonical cells, support rows only, keys
    // in declaration order. Parse ∘ render is the identity on the parse.
    let rendered = ws.to_json_string();
    let reparsed = Workspace::parse_str(&rendered).unwrap();
    println!(
        "render/parse round trip preserves the sets: {}",
        reparsed.sets().len() == ws.sets().len()
    );
    println!();

    // Rejections are classified: ParseError for malformed documents,
    // SchemaError for naming/totality problems, ValueError for bad endpoints.
    let broken = [
        r#"{"universe": ["h1"], "parameters"#,
        r#"{"universe": ["h1"], "parameters": ["e1"],
            "sets": {"phi": {"e1": {"h1": [["0", "0"]]}}}, "topologies": {}}"#,
        r#"{"universe": ["h1"], "parameters": ["e1"],
            "sets": {"F": {"e1": {"h1": [["0.9", "0.2"]]}}}, "topologies": {}}"#,
    ];
    for document in broken {
        println!("rejected: {}", Workspace::parse_str(document).unwrap_err());
    }
    println!();

    // The same format ships as a bundled fixture corpus.
    println!("bundled fixtures:");
    for (name, _) in fixtures::ALL {
        println!("  {name}");
    }
}
