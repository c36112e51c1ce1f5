//! Batch command front end over JSON files.
//!
//! Five commands share one configuration shape: a monoid spec file, an input
//! file, a seed, a trial count, and an output path. All randomness flows from
//! the single seed through named sub-streams, so identical seed and inputs
//! produce byte-identical output files. Each command prints a human-readable
//! table to standard output and writes the full JSON result to the output
//! path when one is given.
//!
//! Exit code contract: 0 when every verdict and property passes, 1 on a
//! mathematical failure (a false identity verdict, a sample that fails its
//! decider, a regularity gap), 2 on an input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::Error;
use crate::green::{self, Relation};
use crate::idempotent::IdempotentPoint;
use crate::lie;
use crate::linalg::Matrix;
use crate::monoid::MonoidFamily;
use crate::suite;

/// Parsed command-line configuration; the seed fully determines all
/// randomized behavior of a run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub monoid_path: Option<PathBuf>,
    pub input_path: Option<PathBuf>,
    pub seed: u64,
    pub trials: usize,
    pub out_path: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Dims,
    Classify,
    Verify,
    Sample,
    Regularity,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Math(#[from] Error),
}

/// What a command produced: the JSON document, the table for standard
/// output, and whether every mathematical verdict passed.
pub struct CommandReport {
    pub json: serde_json::Value,
    pub table: String,
    pub math_ok: bool,
}

fn load_monoid(config: &RunConfig) -> Result<MonoidFamily, CliError> {
    let path = config
        .monoid_path
        .as_ref()
        .ok_or_else(|| CliError::Input("this command needs --monoid".into()))?;
    load_json(path)
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))
}

fn load_input<T: serde::de::DeserializeOwned>(config: &RunConfig) -> Result<T, CliError> {
    let path = config
        .input_path
        .as_ref()
        .ok_or_else(|| CliError::Input("this command needs --in".into()))?;
    load_json(path)
}

/// Dimension reports for a list of idempotents, one JSON object per input.
/// The exit status reflects the two identity verdicts of every report.
pub fn cmd_dims(config: &RunConfig) -> Result<CommandReport, CliError> {
    let family = load_monoid(config)?;
    let inputs: Vec<Matrix> = load_input(config)?;
    let mut reports = Vec::new();
    for (index, matrix) in inputs.into_iter().enumerate() {
        let point = IdempotentPoint::new(&family, matrix)
            .map_err(|e| CliError::Input(format!("input {index}: {e}")))?;
        let report = lie::dimension_report(&family, &point)
            .map_err(|e| CliError::Input(format!("input {index}: {e}")))?;
        reports.push(report);
    }
    let math_ok = reports.iter().all(|r| r.additivity && r.correspondence);
    let mut table = String::from(
        "idx rank dim_G dim_C dim_Cl dim_Cr dim_E_L dim_E_R dim_E_D dim_Gl dim_Gr verdicts\n",
    );
    for (i, r) in reports.iter().enumerate() {
        let verdicts = if r.additivity && r.correspondence { "ok" } else { "FAIL" };
        writeln!(
            table,
            "{i:3} {:4} {:5} {:5} {:6} {:6} {:7} {:7} {:7} {:6} {:6} {verdicts}",
            r.idempotent.rank(),
            r.group,
            r.centralizer,
            r.left_centralizer,
            r.right_centralizer,
            r.l_class_idempotents,
            r.r_class_idempotents,
            r.d_class_idempotents,
            r.range_orbit,
            r.nullspace_orbit,
        )
        .expect("writing to a string");
    }
    Ok(CommandReport { json: serde_json::to_value(&reports)?, table, math_ok })
}

#[derive(Serialize)]
struct ClassifyRow {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_witness: Option<Matrix>,
}

/// L/R/H/D verdicts for pairs of members, with the conjugating witness for
/// D where one is found. Membership failures are reported per pair rather
/// than aborting the batch.
pub fn cmd_classify(config: &RunConfig) -> Result<CommandReport, CliError> {
    let family = load_monoid(config)?;
    let pairs: Vec<(Matrix, Matrix)> = load_input(config)?;
    let mut rows = Vec::new();
    let mut math_ok = true;
    for (index, (a, b)) in pairs.iter().enumerate() {
        let verdicts = (|| -> Result<(bool, bool, Option<Matrix>), Error> {
            let l = green::l_related(&family, a, b)?;
            let r = green::r_related(&family, a, b)?;
            let witness = green::d_related_witness(
                &family,
                a,
                b,
                config.trials.max(1),
                config.seed.wrapping_add(index as u64),
            )?;
            Ok((l, r, witness.map(|w| w.matrix().clone())))
        })();
        match verdicts {
            Ok((l, r, witness)) => {
                let d = witness.is_some();
                // L or R forces D; a miss here is a decider failure.
                if (l || r) && !d {
                    math_ok = false;
                }
                rows.push(ClassifyRow {
                    index,
                    error: None,
                    l: Some(l),
                    r: Some(r),
                    h: Some(l && r),
                    d: Some(d),
                    d_witness: witness,
                });
            }
            Err(e) => rows.push(ClassifyRow {
                index,
                error: Some(e.to_string()),
                l: None,
                r: None,
                h: None,
                d: None,
                d_witness: None,
            }),
        }
    }
    let mut table = String::from("idx  L      R      H      D\n");
    for row in &rows {
        match &row.error {
            Some(e) => writeln!(table, "{:3}  error: {e}", row.index).expect("writing to a string"),
            None => writeln!(
                table,
                "{:3}  {:5}  {:5}  {:5}  {:5}",
                row.index,
                row.l.unwrap(),
                row.r.unwrap(),
                row.h.unwrap(),
                row.d.unwrap()
            )
            .expect("writing to a string"),
        }
    }
    Ok(CommandReport { json: serde_json::to_value(&rows)?, table, math_ok })
}

/// Runs the property suite on the given monoid (or the built-in families)
/// and reports one pass/fail line per property.
pub fn cmd_verify(config: &RunConfig) -> Result<CommandReport, CliError> {
    let families = match &config.monoid_path {
        Some(_) => vec![load_monoid(config)?],
        None => suite::builtin_families(),
    };
    let results = suite::run_suite(&families, config.trials, config.seed);
    let math_ok = results.iter().all(|r| r.passed);
    let mut table = String::new();
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        let detail = r.detail.as_deref().unwrap_or("");
        writeln!(table, "{status}  {:40} trials={} {detail}", r.name, r.trials)
            .expect("writing to a string");
    }
    Ok(CommandReport { json: serde_json::to_value(&results)?, table, math_ok })
}

#[derive(Deserialize)]
struct SampleRequest {
    element: Matrix,
    relation: Relation,
    #[serde(default)]
    count: Option<usize>,
}

#[derive(Serialize)]
struct SampleRow {
    index: usize,
    relation: Relation,
    samples: Vec<Matrix>,
    /// Every sample re-checked against the decider for its relation.
    all_verified: bool,
}

fn sample_label(relation: Relation) -> &'static str {
    match relation {
        Relation::L => "L",
        Relation::R => "R",
        Relation::H => "H",
        Relation::D => "D",
    }
}

/// Samples Green classes of the input elements, re-verifying every sample
/// with the matching decider.
pub fn cmd_sample(config: &RunConfig) -> Result<CommandReport, CliError> {
    let family = load_monoid(config)?;
    let requests: Vec<SampleRequest> = load_input(config)?;
    let mut rows = Vec::new();
    let mut math_ok = true;
    for (index, request) in requests.iter().enumerate() {
        let element = family
            .element(request.element.clone())
            .map_err(|e| CliError::Input(format!("input {index}: {e}")))?;
        let count = request.count.unwrap_or(config.trials);
        let seed = config.seed.wrapping_add(index as u64);
        let samples = green::sample_class(&family, &element, request.relation, count, seed)
            .map_err(|e| CliError::Input(format!("input {index}: {e}")))?;
        let mut all_verified = true;
        for s in &samples {
            let ok = match request.relation {
                Relation::L => green::l_related(&family, element.matrix(), s.matrix())?,
                Relation::R => green::r_related(&family, element.matrix(), s.matrix())?,
                Relation::H => green::h_related(&family, element.matrix(), s.matrix())?,
                Relation::D => green::d_related(
                    &family,
                    element.matrix(),
                    s.matrix(),
                    config.trials.max(1),
                    seed,
                )?,
            };
            all_verified &= ok;
        }
        math_ok &= all_verified;
        rows.push(SampleRow {
            index,
            relation: request.relation,
            samples: samples.into_iter().map(|s| s.into_matrix()).collect(),
            all_verified,
        });
    }
    let mut table = String::from("idx relation samples verified\n");
    for row in &rows {
        writeln!(
            table,
            "{:3} {:8} {:7} {}",
            row.index,
            sample_label(row.relation),
            row.samples.len(),
            if row.all_verified { "ok" } else { "FAIL" }
        )
        .expect("writing to a string");
    }
    Ok(CommandReport { json: serde_json::to_value(&rows)?, table, math_ok })
}

/// Regularity spot check of the monoid: samples members and verifies a
/// witness `x` with `a*x*a = a` for each. Anything short of 100% is a
/// mathematical failure, since every other decision procedure leans on the
/// standing regularity assumption.
pub fn cmd_regularity(config: &RunConfig) -> Result<CommandReport, CliError> {
    let family = load_monoid(config)?;
    let report = family.spot_check_regularity(config.trials, config.seed);
    let math_ok = report.all_regular();
    let table = format!(
        "trials={} regular={} verified={} -> {}\n",
        report.trials,
        report.regular,
        report.verified,
        if math_ok { "ok" } else { "FAIL" }
    );
    Ok(CommandReport {
        json: json!({
            "trials": report.trials,
            "regular": report.regular,
            "verified": report.verified,
            "all_regular": math_ok,
        }),
        table,
        math_ok,
    })
}

/// Executes a command end to end: prints the table, writes the JSON file,
/// and maps the outcome onto the exit-code contract.
pub fn run(command: CommandKind, config: &RunConfig) -> i32 {
    let result = match command {
        CommandKind::Dims => cmd_dims(config),
        CommandKind::Classify => cmd_classify(config),
        CommandKind::Verify => cmd_verify(config),
        CommandKind::Sample => cmd_sample(config),
        CommandKind::Regularity => cmd_regularity(config),
    };
    match result {
        Ok(report) => {
            print!("{}", report.table);
            if let Some(path) = &config.out_path {
                let mut text = match serde_json::to_string_pretty(&report.json) {
                    Ok(text) => text,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                };
                text.push('\n');
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            if report.math_ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
