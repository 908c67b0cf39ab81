//! Command-line front end. Every subcommand takes the form as the
//! coefficient triple `--form f2,f1,f0` (the x², xy, y² coefficients, in
//! that order), prints a deterministic JSON payload to stdout, and reports
//! errors as `{"error": name, "detail": text}` on stderr.
//!
//! Exit codes: 0 success, 1 invalid/reducible/degenerate form, 2 empty
//! result, 3 precondition violation, 4 internal verification failure
//! (never expected to occur).

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_integer::Integer;
use serde_json::{json, Value};

use bqf::automorphism::{from_conic_point, is_automorphism};
use bqf::census::{census, enumerate_reps, enumerate_reps_box, verify_essential, write_census_csv};
use bqf::conic::{param_point, ConicKind, SlopeParam};
use bqf::error::Error;
use bqf::form::{Form, Representation};
use bqf::json::{
    census_summary_value, class_name, conic_point_value, essential_report_value, form_value,
    integer_value, line_value, matrix_value, parse_bigint, parse_form, parse_int_pair,
    parse_rational_quad, representations_value, transport_value,
};
use bqf::quadric::{line_through, QuadricPoint};
use bqf::transporter::transport;

#[derive(Parser)]
#[command(name = "bqf", version, about = "Exact arithmetic for integral binary quadratic forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a form and report its discriminant invariants
    Classify {
        /// Coefficient triple f2,f1,f0
        #[arg(long)]
        form: String,
    },
    /// List integer representations of a value
    Represent {
        #[arg(long)]
        form: String,
        /// The value to represent
        #[arg(long)]
        h: String,
        /// Coordinate box |x|,|y| ≤ B (required for indefinite forms)
        #[arg(long = "box")]
        box_bound: Option<u64>,
    },
    /// Construct the automorphism carrying one representation to another
    Transport {
        #[arg(long)]
        form: String,
        /// First representation x,y
        #[arg(long)]
        rep1: String,
        /// Second representation u,v with f(u,v) = f(x,y)
        #[arg(long)]
        rep2: String,
    },
    /// Census of representable values |h| ≤ z
    Census {
        #[arg(long)]
        form: String,
        #[arg(long)]
        z: u64,
        /// Coordinate box for indefinite sweeps
        #[arg(long = "box")]
        box_bound: Option<u64>,
        /// Record h = 0 as a representable value
        #[arg(long)]
        include_zero: bool,
        /// Write the per-value table as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include the multiplicity column in the CSV
        #[arg(long)]
        multiplicity: bool,
    },
    /// Transport-check every ordered pair of equal-value representations
    VerifyEssential {
        #[arg(long)]
        form: String,
        #[arg(long)]
        z: u64,
        #[arg(long = "box")]
        box_bound: Option<u64>,
    },
    /// Rational line on f(x1,x2) = f(x3,x4) through a rational point
    Line {
        #[arg(long)]
        form: String,
        /// Point x1,x2,x3,x4; entries may be rationals like 1/2
        #[arg(long)]
        point: String,
    },
    /// Automorphism built from a chord-slope parameter p/q
    Automorphism {
        #[arg(long)]
        form: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let payload = json!({ "error": e.code_name(), "detail": e.to_string() });
            eprintln!("{}", serde_json::to_string_pretty(&payload).unwrap());
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegenerateForm | Error::ReducibleForm | Error::InvalidInput(_) => 1,
        _ => 3,
    }
}

fn emit(payload: &Value) {
    println!("{}", serde_json::to_string_pretty(payload).unwrap());
}

fn load_form(arg: &str) -> Result<Form, Error> {
    let f = parse_form(arg)?;
    if !f.is_primitive() {
        eprintln!(
            "warning: form {arg} is imprimitive (gcd {}); constructions proceed unchanged",
            f.f2.gcd(&f.f1).gcd(&f.f0)
        );
    }
    Ok(f)
}

fn all_checks_pass(payload: &Value, key: &str) -> bool {
    payload[key]
        .as_object()
        .map(|checks| checks.values().all(|v| v.as_bool() == Some(true)))
        .unwrap_or(false)
}

fn execute(command: Command) -> Result<u8, Error> {
    match command {
        Command::Classify { form } => {
            let f = load_form(&form)?;
            f.require_irreducible()?;
            emit(&json!({
                "form": form_value(&f),
                "class": class_name(f.classify()),
                "discriminant": integer_value(&f.discriminant()),
                "four_delta": integer_value(&f.four_delta()),
                "irreducible": true,
                "primitive": f.is_primitive(),
            }));
            Ok(0)
        }
        Command::Represent { form, h, box_bound } => {
            let f = load_form(&form)?;
            f.require_irreducible()?;
            let h = parse_bigint(&h)?;
            let reps = match box_bound {
                Some(b) => enumerate_reps_box(&f, &h, b),
                None if f.classify().is_definite() => enumerate_reps(&f, &h)?,
                None => return Err(Error::MissingBox),
            };
            emit(&json!({
                "form": form_value(&f),
                "h": integer_value(&h),
                "box": box_bound,
                "count": reps.len(),
                "representations": representations_value(&reps),
            }));
            Ok(if reps.is_empty() { 2 } else { 0 })
        }
        Command::Transport { form, rep1, rep2 } => {
            let f = load_form(&form)?;
            let (x, y) = parse_int_pair(&rep1)?;
            let (u, v) = parse_int_pair(&rep2)?;
            let r1 = Representation::new(&f, x, y);
            let r2 = Representation::new(&f, u, v);
            let t = transport(&f, &r1, &r2)?;
            let payload = transport_value(&f, &r1, &r2, &t);
            let ok = all_checks_pass(&payload, "checks");
            emit(&payload);
            Ok(if ok { 0 } else { 4 })
        }
        Command::Census { form, z, box_bound, include_zero, csv, multiplicity } => {
            let f = load_form(&form)?;
            f.require_irreducible()?;
            let c = census(&f, z, box_bound, include_zero)?;
            if let Some(path) = csv {
                let file = File::create(&path).map_err(|e| {
                    Error::InvalidInput(format!("cannot write CSV to {}: {e}", path.display()))
                })?;
                let mut out = BufWriter::new(file);
                write_census_csv(&c, multiplicity, &mut out)
                    .map_err(|e| Error::InvalidInput(format!("CSV write failed: {e}")))?;
            }
            emit(&census_summary_value(&c));
            Ok(if c.count() == 0 { 2 } else { 0 })
        }
        Command::VerifyEssential { form, z, box_bound } => {
            let f = load_form(&form)?;
            let report = verify_essential(&f, z, box_bound)?;
            emit(&essential_report_value(&report));
            Ok(if report.failures.is_empty() { 0 } else { 4 })
        }
        Command::Line { form, point } => {
            let f = load_form(&form)?;
            let [x1, x2, x3, x4] = parse_rational_quad(&point)?;
            let p = QuadricPoint::new(x1, x2, x3, x4);
            let line = line_through(&f, &p)?;
            let payload = line_value(&f, &line);
            let ok = payload["verified"].as_bool() == Some(true);
            emit(&payload);
            Ok(if ok { 0 } else { 4 })
        }
        Command::Automorphism { form, p, q } => {
            let f = load_form(&form)?;
            let slope = SlopeParam::new(parse_bigint(&p)?, parse_bigint(&q)?)?;
            let kind = ConicKind::for_form(&f)?;
            let pt = param_point(&f.four_delta(), kind, &slope)?;
            let matrix = from_conic_point(&f, &pt)?;
            let payload = json!({
                "form": form_value(&f),
                "four_delta": integer_value(&f.four_delta()),
                "slope": [integer_value(slope.p()), integer_value(slope.q())],
                "conic_point": conic_point_value(&pt),
                "matrix": matrix_value(&matrix),
                "checks": {
                    "det_one": matrix.det() == num_rational::BigRational::from_integer(1.into()),
                    "preserves_form": is_automorphism(&f, &matrix),
                },
            });
            let ok = all_checks_pass(&payload, "checks");
            emit(&payload);
            Ok(if ok { 0 } else { 4 })
        }
    }
}
