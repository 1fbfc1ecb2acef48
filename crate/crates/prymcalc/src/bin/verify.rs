//! Check runner: executes the registered verifications and reports
//! pass/fail per check.
//!
//! Usage: verify [PATTERN] [--format text|json] [--config FILE]
//!               [--range N] [--dump-matrices]
//!
//! Exit status: 0 all selected checks pass, 1 some check failed,
//! 2 usage or configuration error.

use prymcalc::localforms::dump_matrices;
use prymcalc::report;
use prymcalc::varieties::builtin_presentations;
use std::process::ExitCode;

const USAGE: &str =
    "usage: verify [PATTERN] [--format text|json] [--config FILE] [--range N] [--dump-matrices]";

enum Format {
    Text,
    Json,
}

struct Args {
    pattern: String,
    format: Format,
    config: Option<String>,
    /// integer scan radius for the extremum-window checks
    range: i64,
    dump_matrices: bool,
}

fn parse_args() -> Result<Args, String> {
    let mut args = Args {
        pattern: "*".to_string(),
        format: Format::Text,
        config: None,
        range: 5,
        dump_matrices: false,
    };
    let mut positional = Vec::new();
    let mut it = std::env::args().skip(1);
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--format" => match it.next().as_deref() {
                Some("text") => args.format = Format::Text,
                Some("json") => args.format = Format::Json,
                Some(other) => return Err(format!("unknown format {other:?}")),
                None => return Err("--format needs a value".to_string()),
            },
            "--config" => match it.next() {
                Some(path) => args.config = Some(path),
                None => return Err("--config needs a path".to_string()),
            },
            "--range" => match it.next().map(|v| v.parse::<i64>()) {
                Some(Ok(n)) if n >= 1 => args.range = n,
                Some(_) => return Err("--range needs a positive integer".to_string()),
                None => return Err("--range needs a value".to_string()),
            },
            "--dump-matrices" => args.dump_matrices = true,
            "--help" | "-h" => return Err(String::new()),
            other if other.starts_with('-') => return Err(format!("unknown flag {other}")),
            other => positional.push(other.to_string()),
        }
    }
    match positional.len() {
        0 => {}
        1 => args.pattern = positional.remove(0),
        _ => return Err("at most one PATTERN is accepted".to_string()),
    }
    Ok(args)
}

fn main() -> ExitCode {
    let args = match parse_args() {
        Ok(a) => a,
        Err(msg) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            eprintln!("{USAGE}");
            return ExitCode::from(2);
        }
    };

    let geometry = match &args.config {
        None => builtin_presentations(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {path}: {e}");
                    return ExitCode::from(2);
                }
            };
            let parsed = match prymcalc::config::parse(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {path}: {e}");
                    return ExitCode::from(2);
                }
            };
            match parsed.into_geometry() {
                Ok(g) => g,
                Err(msg) => {
                    eprintln!("error: {path}: {msg}");
                    return ExitCode::from(2);
                }
            }
        }
    };

    let report = match report::run_with_scan(&geometry, &args.pattern, args.range) {
        Some(r) => r,
        None => {
            eprintln!(
                "error: no registered check matches pattern {:?}",
                args.pattern
            );
            eprintln!("{USAGE}");
            return ExitCode::from(2);
        }
    };

    match args.format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }

    if args.dump_matrices {
        match dump_matrices() {
            Ok(text) => print!("{text}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }

    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
