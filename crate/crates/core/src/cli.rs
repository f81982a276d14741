//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain failure, 2 I/O or parse error, 3 growth
//! stuck with no compatible insertion (witness written), 4 oracle cap
//! exceeded.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::ccg_engine::fixed_point;
use crate::cycle::Ccg;
use crate::document::MapDocument;
use crate::error::Error;
use crate::export;
use crate::four_colour::{four_colour_from_labelling, FaceColouring};
use crate::growth::Grower;
use crate::labelling::{closure_labellings, hamiltonian_ccgs, labelling_from_ccg, EdgeLabelling};
use crate::map::{validate_cubic, CubicMap};
use crate::oracle::{check_conjecture_1, check_conjecture_2, oracle_even_two_factors, ConjectureReport, OracleCap};
use crate::rotation::{colour_rotation_map, RotationMap};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_IO: u8 = 2;
pub const EXIT_STUCK: u8 = 3;
pub const EXIT_CAP: u8 = 4;

/// Witness path used by `grow` when `--out` is not given.
pub const DEFAULT_WITNESS: &str = "ccgmap-witness.json";

#[derive(Debug, Parser)]
#[command(name = "ccgmap", version, about = "Grow cubic planar maps and track their cycle groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check that the input is a cubic map with a consistent face structure.
    Validate,
    /// Close the seed under successors; report groups, labellings, Hamiltonian cycles.
    Enumerate,
    /// Insert edges at random, re-enumerating after every step.
    Grow,
    /// Compare the closure with brute force and test the face-pair property.
    Check,
    /// Four-colour the faces of a map document or a rotation map.
    #[command(name = "four-colour")]
    FourColour,
    /// Write the map as JSON or DOT.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Map document (or rotation map, for four-colour).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Number of insertions for `grow`.
    #[arg(long, global = true, default_value_t = 1)]
    pub iterations: usize,
    /// RNG seed for `grow`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest edge count the oracles accept; defaults to CCG_ORACLE_CAP, then 45.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// JSON-lines trace file for `grow`.
    #[arg(long, global = true)]
    pub trace: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file: results, final map, export or witness.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn cap(&self) -> OracleCap {
        self.cap.map(OracleCap).unwrap_or_else(OracleCap::from_env)
    }
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Failure { code: EXIT_IO, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedMatrix(_) => EXIT_IO,
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::NoCompatibleInsertion(_) => EXIT_STUCK,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = std::result::Result<u8, Failure>;

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cfg = &cli.config;
    let result = match cli.command {
        Command::Validate => cmd_validate(cfg, out),
        Command::Enumerate => cmd_enumerate(cfg, out, err),
        Command::Grow => cmd_grow(cfg, out),
        Command::Check => cmd_check(cfg, out),
        Command::FourColour => cmd_four_colour(cfg, out),
        Command::Export => cmd_export(cfg, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(cfg: &RunConfig) -> std::result::Result<String, Failure> {
    let path = cfg.input.as_ref().ok_or_else(|| Failure::io("--input is required"))?;
    fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn load_map(cfg: &RunConfig) -> std::result::Result<(MapDocument, CubicMap), Failure> {
    let doc = MapDocument::from_json(&read_input(cfg)?)?;
    let map = doc.to_map()?;
    Ok((doc, map))
}

fn load_with_seed(cfg: &RunConfig) -> std::result::Result<(CubicMap, Ccg), Failure> {
    let (doc, map) = load_map(cfg)?;
    let report = validate_cubic(&map);
    if !report.is_valid() {
        return Err(Error::InvalidMap(report).into());
    }
    let seed = doc.seed_ccg(&map)?.ok_or_else(|| Failure::io("input has no \"cycles\" field"))?;
    Ok((map, seed))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn emit(cfg: &RunConfig, out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    match &cfg.out {
        Some(path) => write_file(path, text),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::io(e.to_string())),
    }
}

fn say(out: &mut dyn Write, line: impl std::fmt::Display) -> std::result::Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::io(e.to_string()))
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn cmd_validate(cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    let (_, map) = load_map(cfg)?;
    let report = validate_cubic(&map);
    say(out, &report)?;
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_DOMAIN })
}

#[derive(Serialize)]
struct Enumeration<'a> {
    ccgs: &'a [Ccg],
    labellings: &'a [EdgeLabelling],
    hamiltonian: Vec<Ccg>,
}

fn cmd_enumerate(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let (map, seed) = load_with_seed(cfg)?;
    let ccgs = fixed_point(&map, &seed)?;
    let labellings = closure_labellings(&map, &ccgs)?;
    let hamiltonian = match hamiltonian_ccgs(&map, &ccgs) {
        Ok(h) => h,
        Err(Error::NoHamiltonian) => {
            let _ = writeln!(err, "warning: {}", Error::NoHamiltonian);
            Vec::new()
        }
        Err(e) => return Err(e.into()),
    };
    say(
        out,
        format!(
            "{}, {} Hamiltonian, {}",
            plural(ccgs.len(), "CCG"),
            hamiltonian.len(),
            plural(labellings.len(), "labelling")
        ),
    )?;
    if let Some(path) = &cfg.out {
        let body = Enumeration { ccgs: &ccgs, labellings: &labellings, hamiltonian };
        write_file(path, &(serde_json::to_string_pretty(&body).expect("serializes") + "\n"))?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct StuckWitness<'a> {
    error: String,
    step: usize,
    map: MapDocument,
    ccgs: &'a [Ccg],
}

fn cmd_grow(cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    let (map, seed) = load_with_seed(cfg)?;
    let mut trace = match &cfg.trace {
        Some(path) => Some(BufWriter::new(
            File::create(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
        )),
        None => None,
    };
    let mut grower = Grower::new(map, seed, cfg.seed)?;
    let mut record = |step: &crate::growth::GrowthStep, out: &mut dyn Write| -> std::result::Result<(), Failure> {
        if let Some(t) = trace.as_mut() {
            writeln!(t, "{}", step.to_json_line())
                .and_then(|_| t.flush())
                .map_err(|e| Failure::io(e.to_string()))?;
        }
        say(
            out,
            format!(
                "step {}: {} vertices, {} edges, {}, {} Hamiltonian, {}",
                step.step,
                step.map.vertex_count(),
                step.map.edge_count(),
                plural(step.ccgs.len(), "CCG"),
                step.hamiltonian_count(),
                plural(step.labellings.len(), "labelling")
            ),
        )
    };
    record(grower.current(), out)?;
    for _ in 0..cfg.iterations {
        match grower.advance() {
            Ok(step) => record(step, out)?,
            Err(e @ Error::NoCompatibleInsertion(_)) => {
                let cur = grower.current();
                let witness = StuckWitness {
                    error: e.to_string(),
                    step: cur.step,
                    map: MapDocument::from_map(&cur.map, Some(&cur.seed)),
                    ccgs: &cur.ccgs,
                };
                let path = cfg.out.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_WITNESS));
                write_file(&path, &(serde_json::to_string_pretty(&witness).expect("serializes") + "\n"))?;
                return Err(Failure { code: EXIT_STUCK, message: format!("{e}; witness in {}", path.display()) });
            }
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(path) = &cfg.out {
        let cur = grower.current();
        write_file(path, &(export::to_json(&cur.map, Some(&cur.seed)) + "\n"))?;
    }
    Ok(EXIT_OK)
}

fn cmd_check(cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    let (map, seed) = load_with_seed(cfg)?;
    let cap = cfg.cap();
    cap.check(&map)?;
    let reports: Vec<ConjectureReport> = vec![check_conjecture_1(&map, &seed, cap)?, check_conjecture_2(&map, cap)?];
    for r in &reports {
        say(out, r)?;
    }
    if reports.iter().all(ConjectureReport::holds) {
        return Ok(EXIT_OK);
    }
    if let Some(path) = &cfg.out {
        let refuted: Vec<_> = reports.iter().filter(|r| !r.holds()).collect();
        write_file(path, &(serde_json::to_string_pretty(&refuted).expect("serializes") + "\n"))?;
    }
    Ok(EXIT_DOMAIN)
}

fn cmd_four_colour(cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    let text = read_input(cfg)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::io(e.to_string()))?;
    let colouring: FaceColouring = if value.get("rotations").is_some() {
        let rmap = RotationMap::from_json(&text)?;
        colour_rotation_map(&rmap, cfg.cap())?.original
    } else {
        let doc = MapDocument::from_json(&text)?;
        let map = doc.to_map()?;
        let seed = match doc.seed_ccg(&map)? {
            Some(s) => s,
            None => oracle_even_two_factors(&map, cfg.cap())?
                .into_iter()
                .next()
                .ok_or_else(|| Failure { code: EXIT_DOMAIN, message: "map has no even 2-factor".into() })?,
        };
        four_colour_from_labelling(&map, &labelling_from_ccg(&map, &seed)?)?
    };
    emit(cfg, out, &(serde_json::to_string(&colouring).expect("serializes") + "\n"))?;
    Ok(EXIT_OK)
}

fn cmd_export(cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    let (doc, map) = load_map(cfg)?;
    let seed = doc.seed_ccg(&map)?;
    let text = match cfg.format {
        Format::Json => export::to_json(&map, seed.as_ref()) + "\n",
        Format::Dot => {
            let lab = seed.as_ref().map(|s| labelling_from_ccg(&map, s)).transpose()?;
            export::to_dot(&map, seed.as_ref(), lab.as_ref())?
        }
    };
    emit(cfg, out, &text)?;
    Ok(EXIT_OK)
}
