//! The command-line surface: workspace loading, subcommand dispatch, and
//! text/machine output.
//!
//! Every invocation names a workspace file (`--workspace FILE`), an order
//! profile (`--profile componentwise|rank`, default `componentwise`), and a
//! format (`--format text|machine`). The profile is always echoed — as the
//! first output line in text mode, as the `profile` field in machine mode —
//! because almost every result is profile-dependent.
//!
//! Exit status: `0` for true/valid results, `1` for false/invalid results
//! (with diagnostics on stdout), `2` for errors (diagnostics on stderr):
//! unreadable or invalid workspace files, unknown names, arguments that must
//! be soft points but are not, and intersections with disjoint supports.
//!
//! Machine output is a single JSON line with fields `profile`, `result`, and
//! optionally `witness` and `violations`, byte-deterministic for a fixed
//! input and flag set. Errors are never written as machine output; they go
//! to stderr as plain text regardless of `--format`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::interval::OrderProfile;
use crate::render::{score_json, score_text, set_text, violation_text, violations_to_json};
use crate::soft_set::SoftSet;
use crate::topology::{Comparability, Family, SoftPoint};
use crate::workspace::{soft_set_to_json, Workspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    /// Endpoint-wise max/min joins and meets.
    Componentwise,
    /// Whole-interval selection by possibility-degree rank.
    Rank,
}

impl From<ProfileArg> for OrderProfile {
    fn from(arg: ProfileArg) -> OrderProfile {
        match arg {
            ProfileArg::Componentwise => OrderProfile::Componentwise,
            ProfileArg::Rank => OrderProfile::RankSelect,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Human-readable lines.
    Text,
    /// One deterministic JSON document.
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "ivhfss",
    version,
    about = "Interval-valued hesitant fuzzy soft sets and their finite topologies"
)]
struct Cli {
    /// Path to the workspace JSON document.
    #[arg(long, global = true, value_name = "FILE")]
    workspace: Option<PathBuf>,

    /// Order semantics for joins, meets, and comparisons.
    #[arg(long, global = true, value_enum, default_value_t = ProfileArg::Componentwise)]
    profile: ProfileArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the topology axioms for a named family.
    Validate { topology: String },
    /// Print the canonical form of a set.
    Canon { set: String },
    /// Print the complement of a set.
    Complement { set: String },
    /// Print the union of two sets.
    Union { left: String, right: String },
    /// Print the intersection of two sets.
    Intersect { left: String, right: String },
    /// Test whether the first set is contained in the second.
    Subset { left: String, right: String },
    /// Test whether two sets are soft-equal.
    Equal { left: String, right: String },
    /// Print the per-cell score intervals of a set.
    Score { set: String },
    /// Print the closure of a set in a topology.
    Closure { topology: String, set: String },
    /// Print the interior of a set in a topology.
    Interior { topology: String, set: String },
    /// List the closed sets (member complements) of a topology.
    ClosedSets { topology: String },
    /// Compare two topologies by containment.
    Compare { left: String, right: String },
    /// Recognize a set as a soft point and report its parameter.
    Point { set: String },
    /// Test whether a soft point belongs to a set.
    In { point: String, set: String },
    /// Test whether a set is a neighborhood of a soft point.
    Nbd {
        topology: String,
        set: String,
        point: String,
    },
    /// Classify members and their complements as neighborhoods of a point.
    NbdSystem { topology: String, point: String },
    /// Test whether the first set is a neighborhood of the second.
    NbdOfSet {
        topology: String,
        candidate: String,
        inner: String,
    },
}

/// What a command produced: an exit code plus stdout/stderr payloads.
struct Rendered {
    exit: i32,
    out: String,
    err: String,
}

impl Rendered {
    fn ok(exit: i32, out: String) -> Rendered {
        Rendered {
            exit,
            out,
            err: String::new(),
        }
    }
}

/// Runs the CLI against explicit arguments and output sinks, returning the
/// exit code. `main` is a thin wrapper over this; tests call it directly.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(parse_error) => {
            use clap::error::ErrorKind;
            let rendered = parse_error.render().to_string();
            return match parse_error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok(rendered) => {
            let _ = out.write_all(rendered.out.as_bytes());
            let _ = err.write_all(rendered.err.as_bytes());
            rendered.exit
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<Rendered, String> {
    let path = cli
        .workspace
        .ok_or("--workspace FILE is required".to_owned())?;
    let document = fs::read_to_string(&path)
        .map_err(|e| format!("cannot read workspace file {}: {e}", path.display()))?;
    let ws = Workspace::parse_str(&document).map_err(|e| e.to_string())?;
    let profile = OrderProfile::from(cli.profile);
    let format = cli.format;

    match &cli.command {
        Command::Validate { topology } => {
            let family = get_family(&ws, topology)?;
            let report = family.validate(profile);
            let valid = report.is_valid();
            let exit = i32::from(!valid);
            Ok(match format {
                FormatArg::Text => {
                    let mut out = profile_line(profile);
                    out.push_str(if valid { "valid\n" } else { "invalid\n" });
                    for violation in &report.violations {
                        out.push_str(&violation_text(violation));
                    }
                    Rendered::ok(exit, out)
                }
                FormatArg::Machine => {
                    let result = Value::String(if valid { "valid" } else { "invalid" }.to_owned());
                    let violations = (!report.violations.is_empty())
                        .then(|| violations_to_json(&report.violations));
                    Rendered::ok(exit, machine_doc(profile, result, None, violations))
                }
            })
        }
        Command::Canon { set } => {
            let set = get_set(&ws, set)?;
            Ok(set_output(profile, format, &set))
        }
        Command::Complement { set } => {
            let set = get_set(&ws, set)?;
            Ok(set_output(profile, format, &set.complement()))
        }
        Command::Union { left, right } => {
            let left = get_set(&ws, left)?;
            let right = get_set(&ws, right)?;
            let union = left.union(&right, profile).map_err(|e| e.to_string())?;
            Ok(set_output(profile, format, &union))
        }
        Command::Intersect { left, right } => {
            let left = get_set(&ws, left)?;
            let right = get_set(&ws, right)?;
            let intersection = left
                .intersection(&right, profile)
                .map_err(|e| e.to_string())?;
            Ok(set_output(profile, format, &intersection))
        }
        Command::Subset { left, right } => {
            let left = get_set(&ws, left)?;
            let right = get_set(&ws, right)?;
            Ok(bool_output(
                profile,
                format,
                left.is_subset(&right, profile),
                None,
            ))
        }
        Command::Equal { left, right } => {
            let left = get_set(&ws, left)?;
            let right = get_set(&ws, right)?;
            Ok(bool_output(
                profile,
                format,
                left.equals(&right, profile),
                None,
            ))
        }
        Command::Score { set } => {
            let set = get_set(&ws, set)?;
            Ok(match format {
                FormatArg::Text => Rendered::ok(0, profile_line(profile) + &score_text(&set)),
                FormatArg::Machine => {
                    Rendered::ok(0, machine_doc(profile, score_json(&set), None, None))
                }
            })
        }
        Command::Closure { topology, set } => {
            let family = get_family(&ws, topology)?;
            let set = get_set(&ws, set)?;
            let result = family.closure(&set, profile);
            Ok(fold_output(profile, format, &family, topology, &result))
        }
        Command::Interior { topology, set } => {
            let family = get_family(&ws, topology)?;
            let set = get_set(&ws, set)?;
            let result = family.interior(&set, profile);
            Ok(fold_output(profile, format, &family, topology, &result))
        }
        Command::ClosedSets { topology } => {
            let family = get_family(&ws, topology)?;
            let closed = family.closed_members();
            Ok(match format {
                FormatArg::Text => {
                    let mut out = profile_line(profile);
                    for (name, set) in &closed {
                        let _ = writeln!(out, "{name}:");
                        out.push_str(&set_text(set, 2));
                    }
                    Rendered::ok(0, out)
                }
                FormatArg::Machine => {
                    let mut result = Map::new();
                    for (name, set) in &closed {
                        result.insert(name.clone(), soft_set_to_json(set));
                    }
                    Rendered::ok(0, machine_doc(profile, Value::Object(result), None, None))
                }
            })
        }
        Command::Compare { left, right } => {
            let left = get_family(&ws, left)?;
            let right = get_family(&ws, right)?;
            let relation = left.compare(&right, profile).map_err(|e| e.to_string())?;
            let exit = i32::from(relation == Comparability::Incomparable);
            Ok(match format {
                FormatArg::Text => {
                    Rendered::ok(exit, profile_line(profile) + relation.as_str() + "\n")
                }
                FormatArg::Machine => Rendered::ok(
                    exit,
                    machine_doc(
                        profile,
                        Value::String(relation.as_str().to_owned()),
                        None,
                        None,
                    ),
                ),
            })
        }
        Command::Point { set } => {
            let name = set;
            let set = get_set(&ws, name)?;
            let point = SoftPoint::from_soft_set(&set);
            let exit = i32::from(point.is_none());
            Ok(match format {
                FormatArg::Text => {
                    let body = match &point {
                        Some(point) => format!("soft point at parameter {}\n", point.parameter()),
                        None => "not a soft point\n".to_owned(),
                    };
                    Rendered::ok(exit, profile_line(profile) + &body)
                }
                FormatArg::Machine => {
                    let result = match &point {
                        Some(point) => Value::String(point.parameter().to_owned()),
                        None => Value::Null,
                    };
                    Rendered::ok(exit, machine_doc(profile, result, None, None))
                }
            })
        }
        Command::In { point, set } => {
            let point = get_point(&ws, point)?;
            let set = get_set(&ws, set)?;
            Ok(bool_output(
                profile,
                format,
                point.is_in(&set, profile),
                None,
            ))
        }
        Command::Nbd {
            topology,
            set,
            point,
        } => {
            let family = get_family(&ws, topology)?;
            let set = get_set(&ws, set)?;
            let point = get_point(&ws, point)?;
            let witness = family.is_nbd_of_point(&set, &point, profile);
            Ok(bool_output(profile, format, witness.is_some(), witness))
        }
        Command::NbdSystem { topology, point } => {
            let family = get_family(&ws, topology)?;
            let point = get_point(&ws, point)?;
            let pool = family.default_pool();
            let entries = family.nbd_system(&point, &pool, profile);
            Ok(match format {
                FormatArg::Text => {
                    let mut out = profile_line(profile);
                    for entry in &entries {
                        match &entry.witness {
                            Some(witness) => {
                                let _ = writeln!(
                                    out,
                                    "{}: neighborhood (witness {witness})",
                                    entry.name
                                );
                            }
                            None => {
                                let _ = writeln!(out, "{}: not a neighborhood", entry.name);
                            }
                        }
                    }
                    Rendered::ok(0, out)
                }
                FormatArg::Machine => {
                    let result = Value::Array(
                        entries
                            .iter()
                            .map(|entry| {
                                let mut map = Map::new();
                                map.insert("name".to_owned(), Value::String(entry.name.clone()));
                                map.insert(
                                    "witness".to_owned(),
                                    match &entry.witness {
                                        Some(witness) => Value::String(witness.clone()),
                                        None => Value::Null,
                                    },
                                );
                                Value::Object(map)
                            })
                            .collect(),
                    );
                    Rendered::ok(0, machine_doc(profile, result, None, None))
                }
            })
        }
        Command::NbdOfSet {
            topology,
            candidate,
            inner,
        } => {
            let family = get_family(&ws, topology)?;
            let candidate = get_set(&ws, candidate)?;
            let inner = get_set(&ws, inner)?;
            let witness = family.is_nbd_of_set(&candidate, &inner, profile);
            Ok(bool_output(profile, format, witness.is_some(), witness))
        }
    }
}

fn get_set(ws: &Workspace, name: &str) -> Result<SoftSet, String> {
    ws.resolve_set(name)
        .ok_or_else(|| format!("UnknownName: no set named {name:?} in the workspace"))
}

fn get_family(ws: &Workspace, name: &str) -> Result<Family, String> {
    ws.family(name)
        .ok_or_else(|| format!("UnknownName: no topology named {name:?} in the workspace"))
}

fn get_point(ws: &Workspace, name: &str) -> Result<SoftPoint, String> {
    let set = get_set(ws, name)?;
    SoftPoint::from_soft_set(&set).ok_or_else(|| format!("set {name:?} is not a soft point"))
}

fn profile_line(profile: OrderProfile) -> String {
    format!("profile: {profile}\n")
}

/// Builds the machine JSON line: `profile`, `result`, then optional
/// `witness` and `violations`, always in that order.
fn machine_doc(
    profile: OrderProfile,
    result: Value,
    witness: Option<Value>,
    violations: Option<Value>,
) -> String {
    let mut map = Map::new();
    map.insert(
        "profile".to_owned(),
        Value::String(profile.as_str().to_owned()),
    );
    map.insert("result".to_owned(), result);
    if let Some(witness) = witness {
        map.insert("witness".to_owned(), witness);
    }
    if let Some(violations) = violations {
        map.insert("violations".to_owned(), violations);
    }
    let mut rendered = serde_json::to_string(&Value::Object(map))
        .expect("machine documents contain no non-serializable data");
    rendered.push('\n');
    rendered
}

fn set_output(profile: OrderProfile, format: FormatArg, set: &SoftSet) -> Rendered {
    match format {
        FormatArg::Text => Rendered::ok(0, profile_line(profile) + &set_text(set, 0)),
        FormatArg::Machine => {
            Rendered::ok(0, machine_doc(profile, soft_set_to_json(set), None, None))
        }
    }
}

fn bool_output(
    profile: OrderProfile,
    format: FormatArg,
    value: bool,
    witness: Option<&str>,
) -> Rendered {
    let exit = i32::from(!value);
    match format {
        FormatArg::Text => {
            let body = match witness {
                Some(witness) => format!("true (witness {witness})\n"),
                None if value => "true\n".to_owned(),
                None => "false\n".to_owned(),
            };
            Rendered::ok(exit, profile_line(profile) + &body)
        }
        FormatArg::Machine => Rendered::ok(
            exit,
            machine_doc(
                profile,
                Value::Bool(value),
                witness.map(|w| Value::String(w.to_owned())),
                None,
            ),
        ),
    }
}

/// Output for closure/interior: the fold result, plus a validity warning
/// when the family fails the axioms under the active profile (stderr in text
/// mode, a `violations` field in machine mode).
fn fold_output(
    profile: OrderProfile,
    format: FormatArg,
    family: &Family,
    topology_name: &str,
    result: &SoftSet,
) -> Rendered {
    let report = family.validate(profile);
    match format {
        FormatArg::Text => {
            let err = if report.is_valid() {
                String::new()
            } else {
                format!(
                    "warning: topology {topology_name:?} fails validation under the {profile} profile; the fold is computed anyway\n"
                )
            };
            Rendered {
                exit: 0,
                out: profile_line(profile) + &set_text(result, 0),
                err,
            }
        }
        FormatArg::Machine => {
            let violations =
                (!report.violations.is_empty()).then(|| violations_to_json(&report.violations));
            Rendered::ok(
                0,
                machine_doc(profile, soft_set_to_json(result), None, violations),
            )
        }
    }
}
