use std::fs;
use std::path::Path;

use serde::Serialize;
use symbases::search::{ScanError, ScanOptions, ScanSpec};
use symbases::{
    analyze, brute_force_cover_with_ceiling, compute_h0, cover, cover_profile, enumerate_all,
    enumerate_symmetric, find_generation, is_symmetric, meure_applicable, reflect_generation,
    search_extremal_with_ceiling, symmetrize_even, symmetrize_odd, Basis64, BasisShape, Error,
    Family, FamilyKind, Generation64,
};

use crate::args::{BasisInput, Cli, Command, Kind, Mode, OutputFormat, Parity};
use crate::render::{key_values, resolve_format, Output, Style};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;
pub const EXIT_CAP: u8 = 4;
pub const EXIT_COUNTEREXAMPLE: u8 = 5;
pub const EXIT_TOO_LARGE: u8 = 6;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_overflow() => EXIT_OVERFLOW,
            Error::TooLarge { .. } => EXIT_TOO_LARGE,
            Error::NotRepresentable { .. } => EXIT_FAILURE,
            _ => EXIT_INVALID,
        };
        let message = match &e {
            Error::NotIncreasing { .. } => format!("NotIncreasing: {e}"),
            Error::NotStartingAtOne(_) => format!("NotStartingAtOne: {e}"),
            Error::NonPositive(_) => format!("NonPositive: {e}"),
            Error::BadParameter(_) => format!("BadParameter: {e}"),
            Error::TooLarge { .. } => format!("TooLarge: {e}"),
            _ => e.to_string(),
        };
        Self { code, message }
    }
}

impl From<ScanError> for CliError {
    fn from(e: ScanError) -> Self {
        match e {
            ScanError::Basis(inner) => inner.into(),
            other => CliError {
                code: EXIT_FAILURE,
                message: other.to_string(),
            },
        }
    }
}

type Outcome = Result<(Output, u8), CliError>;

#[derive(Serialize)]
struct CoverOut<'a> {
    basis: &'a Basis64,
    h: u32,
    cover: u64,
}

#[derive(Serialize)]
struct GenerationOut<'a> {
    basis: &'a Basis64,
    x: u64,
    h: u32,
    #[serde(flatten)]
    generation: &'a Generation64,
}

#[derive(Serialize)]
struct SymmetryOut<'a> {
    basis: &'a Basis64,
    k: usize,
    symmetric: bool,
    differences: Vec<u64>,
    meure_applicable: bool,
}

#[derive(Serialize)]
struct SymmetrizeOut<'a> {
    half: &'a Basis64,
    parity: &'static str,
    basis: Basis64,
}

#[derive(Serialize)]
struct ReflectOut<'a> {
    basis: &'a Basis64,
    x: u64,
    h0: u32,
    source: Generation64,
    reflected: Generation64,
}

#[derive(Serialize)]
struct FamilyOut {
    kind: FamilyKind,
    p: u64,
    basis: Basis64,
}

fn coefficients_text(g: &Generation64) -> String {
    g.coefficients()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn on_basis(command: &Command, basis: &Basis64, style: Style) -> Outcome {
    match command {
        Command::Cover { h, .. } => {
            let n = cover(basis, *h)?;
            let out = CoverOut {
                basis,
                h: *h,
                cover: n,
            };
            Ok((Output::new(&out, n.to_string()), EXIT_OK))
        }
        Command::BruteCover { h, ceiling, .. } => {
            let n = brute_force_cover_with_ceiling(basis, *h, *ceiling)?;
            let out = CoverOut {
                basis,
                h: *h,
                cover: n,
            };
            Ok((Output::new(&out, n.to_string()), EXIT_OK))
        }
        Command::Profile { h_max, .. } => {
            let profile = cover_profile(basis, *h_max)?;
            let mut table = format!(
                "{}  {}  {}",
                style.key("h"),
                style.key("cover"),
                style.key("saturated")
            );
            for row in &profile.rows {
                table.push_str(&format!("\n{}  {}  {}", row.h, row.cover, row.saturated));
            }
            Ok((Output::new(&profile, table), EXIT_OK))
        }
        Command::Generation { x, h, .. } => {
            let g = find_generation(basis, *x, *h)?;
            let table = key_values(
                style,
                &[
                    ("value", g.value().to_string()),
                    ("weight", g.weight().to_string()),
                    ("coefficients", coefficients_text(&g)),
                ],
            );
            let out = GenerationOut {
                basis,
                x: *x,
                h: *h,
                generation: &g,
            };
            Ok((Output::new(&out, table), EXIT_OK))
        }
        Command::Symmetry { .. } => {
            let out = SymmetryOut {
                basis,
                k: basis.k(),
                symmetric: is_symmetric(basis),
                differences: basis.differences(),
                meure_applicable: meure_applicable(basis),
            };
            let diffs = out
                .differences
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let table = key_values(
                style,
                &[
                    ("basis", basis.to_string()),
                    ("symmetric", out.symmetric.to_string()),
                    ("differences", diffs),
                    ("meure_applicable", out.meure_applicable.to_string()),
                ],
            );
            Ok((Output::new(&out, table), EXIT_OK))
        }
        Command::Symmetrize { parity, .. } => {
            let (full, name) = match parity {
                Parity::Odd => (symmetrize_odd(basis)?, "odd"),
                Parity::Even => (symmetrize_even(basis)?, "even"),
            };
            let table = full.to_string();
            let out = SymmetrizeOut {
                half: basis,
                parity: name,
                basis: full,
            };
            Ok((Output::new(&out, table), EXIT_OK))
        }
        Command::Reflect { x, .. } => {
            let h0 = compute_h0(basis)?;
            let source = find_generation(basis, *x, h0)?;
            let reflected = reflect_generation(basis, &source, h0)?;
            let table = key_values(
                style,
                &[
                    ("h0", h0.to_string()),
                    (
                        "source",
                        format!("{} = [{}]", source.value(), coefficients_text(&source)),
                    ),
                    (
                        "reflected",
                        format!(
                            "{} = [{}]",
                            reflected.value(),
                            coefficients_text(&reflected)
                        ),
                    ),
                ],
            );
            let out = ReflectOut {
                basis,
                x: *x,
                h0,
                source,
                reflected,
            };
            Ok((Output::new(&out, table), EXIT_OK))
        }
        Command::Analyze { cap, .. } => {
            let r = analyze(basis, *cap)?;
            let h1 = match r.h1 {
                Some(h) => h.to_string(),
                None => "not found within cap".to_string(),
            };
            let verdict = if r.counterexample {
                style.alert("true")
            } else {
                "false".to_string()
            };
            let table = key_values(
                style,
                &[
                    ("basis", r.basis.to_string()),
                    ("k", r.k.to_string()),
                    ("symmetric", r.symmetric.to_string()),
                    ("h0", r.h0.to_string()),
                    ("h1", h1),
                    ("theorem_bound", r.theorem_bound.to_string()),
                    ("conjecture_holds", r.conjecture_holds.to_string()),
                    ("counterexample", verdict),
                ],
            );
            let code = if r.h1_found { EXIT_OK } else { EXIT_CAP };
            Ok((Output::new(&r, table), code))
        }
        _ => unreachable!("not a per-basis command"),
    }
}

fn basis_input(command: &Command) -> Option<&BasisInput> {
    match command {
        Command::Cover { input, .. }
        | Command::Profile { input, .. }
        | Command::Generation { input, .. }
        | Command::BruteCover { input, .. }
        | Command::Symmetry { input }
        | Command::Symmetrize { input, .. }
        | Command::Reflect { input, .. }
        | Command::Analyze { input, .. } => Some(input),
        _ => None,
    }
}

#[derive(Serialize)]
struct LineError<'a> {
    basis: &'a str,
    error: String,
}

fn run_file(command: &Command, path: &Path, style: Style) -> Result<u8, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_INVALID,
        message: format!("{}: {e}", path.display()),
    })?;
    let mut code = EXIT_OK;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let result = Basis64::parse(line)
            .map_err(CliError::from)
            .and_then(|b| on_basis(command, &b, style));
        match result {
            Ok((out, c)) => {
                println!("{}", out.json);
                first_failure(&mut code, c);
            }
            Err(e) => {
                let rec = LineError {
                    basis: line,
                    error: e.message,
                };
                println!("{}", serde_json::to_string(&rec).expect("serializes"));
                first_failure(&mut code, e.code);
            }
        }
    }
    Ok(code)
}

// A batch exits with the code of its first failing line.
fn first_failure(code: &mut u8, c: u8) {
    if *code == EXIT_OK {
        *code = c;
    }
}

fn emit(out: &Output, format: OutputFormat) {
    println!("{}", out.render(format));
}

fn shape(mode: Mode) -> BasisShape {
    match mode {
        Mode::Symmetric => BasisShape::Symmetric,
        Mode::All => BasisShape::All,
    }
}

fn usize_flag(value: u64, name: &str) -> Result<usize, CliError> {
    usize::try_from(value).map_err(|_| CliError {
        code: EXIT_INVALID,
        message: format!("--{name} {value} is too large"),
    })
}

pub fn run(cli: Cli) -> Result<u8, CliError> {
    let format = resolve_format(cli.format);
    let style = Style::detect();
    let command = cli.command;

    if let Some(input) = basis_input(&command) {
        if let Some(path) = &input.basis_file {
            return run_file(&command, path, style);
        }
        let text = input.basis.as_deref().expect("clap requires one input");
        let basis = Basis64::parse(text)?;
        let (out, code) = on_basis(&command, &basis, style)?;
        emit(&out, format);
        return Ok(code);
    }

    match command {
        Command::Family { kind, p } => {
            let kind = match kind {
                Kind::A5 => FamilyKind::A5,
                Kind::A9 => FamilyKind::A9,
                Kind::A10 => FamilyKind::A10,
            };
            let basis: Basis64 = Family::new(kind, p)?.basis()?;
            let table = basis.to_string();
            emit(&Output::new(&FamilyOut { kind, p, basis }, table), format);
            Ok(EXIT_OK)
        }
        Command::Enumerate { k, ak_max, mode } => {
            let k = usize_flag(k, "k")?;
            let bases: Vec<String> = match mode {
                Mode::Symmetric => enumerate_symmetric(k, ak_max)
                    .map(|b| b.to_string())
                    .collect(),
                Mode::All => enumerate_all(k, ak_max).map(|b| b.to_string()).collect(),
            };
            match format {
                OutputFormat::Table => bases.iter().for_each(|b| println!("{b}")),
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string(&bases).expect("serializes"))
                }
                OutputFormat::Jsonl => bases
                    .iter()
                    .for_each(|b| println!("{}", serde_json::to_string(b).expect("serializes"))),
            }
            Ok(EXIT_OK)
        }
        Command::Scan {
            k,
            ak_max,
            cap,
            mode,
            out,
            resume,
            threads,
            stop_after,
        } => {
            let spec = ScanSpec::new(usize_flag(k, "k")?, ak_max, cap, shape(mode))?;
            let options = ScanOptions {
                out,
                resume,
                threads: usize_flag(threads, "threads")?,
                stop_after,
            };
            let outcome = symbases::run_scan(&spec, &options)?;
            let s = &outcome.summary;
            eprintln!(
                "scanned {} bases ({}) with k = {}, a_k <= {}: {} counterexamples, {} errors{}",
                s.scanned,
                match s.mode {
                    BasisShape::Symmetric => "symmetric",
                    BasisShape::All => "all",
                },
                s.k,
                s.ak_max,
                s.counterexamples,
                s.errors,
                if outcome.complete {
                    ""
                } else {
                    " (stopped early)"
                },
            );
            for b in &outcome.counterexample_bases {
                eprintln!("counterexample: {b}");
            }
            Ok(if s.counterexamples > 0 {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            })
        }
        Command::Extremal {
            h,
            k,
            ak_ceiling,
            candidate_ceiling,
        } => {
            let k = usize_flag(k, "k")?;
            let r = search_extremal_with_ceiling::<u64>(h, k, ak_ceiling, candidate_ceiling)?;
            let mut table = key_values(
                style,
                &[
                    ("h", r.h.to_string()),
                    ("k", r.k.to_string()),
                    ("ak_ceiling", r.ak_ceiling.to_string()),
                    ("n_star", r.n_star.to_string()),
                ],
            );
            for w in &r.witnesses {
                table.push_str(&format!("\n{}", w));
            }
            emit(&Output::new(&r, table), format);
            Ok(EXIT_OK)
        }
        _ => unreachable!("per-basis commands handled above"),
    }
}
