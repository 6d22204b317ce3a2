//! Command-line front end: surface ingestion, subcommand dispatch, JSON
//! emission, and SVG wall plots.
//!
//! Exit codes: 0 the requested statement is proved, 1 the hypothesis fails
//! (a mathematically meaningful outcome, not an error), 2 bad input.

mod plot;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tiltwalls_core::koseki::{koseki_constant, SurfaceData};
use tiltwalls_core::ratstr::{format_rat, parse_rat};
use tiltwalls_core::vanishing::{make_certificate, verify_certificate};
use tiltwalls_core::walls::{
    chamber_bound, enumerate_destabilizers, wall_between, BetaWindow, ScanBounds,
    DEFAULT_SCAN_CAP,
};
use tiltwalls_core::{CharVector, Error, Rat};

#[derive(Parser)]
#[command(name = "tiltwalls", version, about = "Tilt-stability walls, chamber bounds, and vanishing certificates on polarized surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the support constant C of a surface as {"C": "p/q"}
    Koseki {
        /// Surface description (JSON)
        surface: PathBuf,
    },
    /// Generate, verify, and print a vanishing certificate
    Vanishing {
        /// Surface description (JSON)
        surface: PathBuf,
        /// Slice parameter as p/q, default 1/2
        #[arg(long, value_name = "p/q")]
        beta: Option<String>,
    },
    /// Print the wall locus between two classes
    Wall {
        #[arg(long, value_name = "r,c,2d[,e]", allow_hyphen_values = true)]
        v: String,
        #[arg(long, value_name = "r,c,2d[,e]", allow_hyphen_values = true)]
        w: String,
        /// Support constant
        #[arg(long = "C", value_name = "p/q")]
        c: String,
        /// Degree of the polarization
        #[arg(long = "H2", value_name = "n")]
        h2: i64,
    },
    /// Enumerate destabilizer candidates for a class within search bounds
    Scan {
        #[arg(long, value_name = "r,c,2d[,e]", allow_hyphen_values = true)]
        v: String,
        /// Surface description (JSON); supplies C and H^2
        surface: PathBuf,
        #[arg(long, value_name = "n")]
        max_rank: i64,
        #[arg(long, value_name = "n")]
        max_c: i64,
        #[arg(long = "max-2d", value_name = "n")]
        max_two_d: i64,
        /// Drop the quotient-discriminant filter (keep only the subobject one)
        #[arg(long)]
        no_quotient_filter: bool,
    },
    /// Draw the pairwise walls of a list of classes as an SVG
    Plot {
        /// Semicolon-separated characters, each r,c,2d[,e]
        #[arg(long, value_name = "r,c,2d[;...]", allow_hyphen_values = true)]
        chars: String,
        /// Surface description (JSON); supplies C, H^2, and the window shading
        surface: PathBuf,
        #[arg(short, long, value_name = "file.svg")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Koseki { surface } => {
            let s = load_surface(&surface)?;
            let c = koseki_constant(&s).map_err(|e| e.to_string())?;
            println!("{}", serde_json::json!({ "C": format_rat(&c) }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Vanishing { surface, beta } => {
            let s = load_surface(&surface)?;
            let beta = beta
                .map(|b| parse_rat(&b).map_err(|e| e.to_string()))
                .transpose()?;
            match make_certificate(&s, beta) {
                Ok(cert) => {
                    if !verify_certificate(&cert) {
                        return Err("generated certificate failed its own audit".into());
                    }
                    println!("{}", serde_json::to_string(&cert).expect("certificate serializes"));
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::NoCertificate(window)) => {
                    let window = serde_json::to_string(&window).expect("window serializes");
                    println!("{{\"certificate\":null,\"window\":{window}}}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Wall { v, w, c, h2 } => {
            let v = parse_char(&v)?;
            let w = parse_char(&w)?;
            let c_x = parse_nonneg_rat(&c)?;
            if h2 < 1 {
                return Err("H2 must be at least 1".into());
            }
            let wall = wall_between::<Rat>(&v, &w, &c_x, h2).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&wall).expect("locus serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { v, surface, max_rank, max_c, max_two_d, no_quotient_filter } => {
            let s = load_surface(&surface)?;
            let v = parse_char(&v)?;
            let c_x = koseki_constant(&s).map_err(|e| e.to_string())?;
            let bounds = ScanBounds::new(max_rank, max_c, max_two_d);
            let found = enumerate_destabilizers(
                &v,
                &BetaWindow::unbounded(),
                &c_x,
                s.h2,
                &bounds,
                !no_quotient_filter,
                scan_cap()?,
            )
            .map_err(|e| e.to_string())?;
            // reference bound at the large-volume slice beta = 0, when defined
            let bound = match chamber_bound::<Rat>(&v, &Rat::zero(), &c_x, s.h2) {
                Ok(b) => format!("\"{}\"", format_rat(&b)),
                Err(_) => "null".into(),
            };
            let candidates = serde_json::to_string(&found).expect("candidates serialize");
            println!("{{\"candidates\":{candidates},\"chamber_bound_alpha2\":{bound}}}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Plot { chars, surface, out } => {
            let list = parse_chars(&chars)?;
            let s = load_surface(&surface)?;
            let svg = plot::render(&list, &s)?;
            std::fs::write(&out, svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_surface(path: &Path) -> Result<SurfaceData, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_char(text: &str) -> Result<CharVector, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(format!("character {text:?} must have the form r,c,2d or r,c,2d,e"));
    }
    let nums = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad integer {p:?} in character {text:?}"))
        })
        .collect::<Result<Vec<i64>, String>>()?;
    Ok(CharVector::new(nums[0], nums[1], nums[2], nums.get(3).copied()))
}

fn parse_chars(text: &str) -> Result<Vec<CharVector>, String> {
    if text.trim().is_empty() {
        return Err("at least one character is required".into());
    }
    text.split(';').map(parse_char).collect()
}

fn parse_nonneg_rat(text: &str) -> Result<Rat, String> {
    let value = parse_rat(text).map_err(|e| e.to_string())?;
    if value < Rat::zero() {
        return Err(format!("constant must be nonnegative, got {text}"));
    }
    Ok(value)
}

fn scan_cap() -> Result<u64, String> {
    match std::env::var("TILTWALLS_SCAN_CAP") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("TILTWALLS_SCAN_CAP must be an unsigned integer, got {text:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SCAN_CAP),
        Err(e) => Err(format!("TILTWALLS_SCAN_CAP: {e}")),
    }
}
