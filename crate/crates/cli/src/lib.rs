//! Argument parsing and command dispatch for the `trigrid` binary.
//!
//! [`run`] writes to caller-supplied streams and returns the exit code, so
//! every command can be exercised in-process.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use trigrid::billiards::BilliardsSystem;
use trigrid::enumerate::{describe, records_csv, with_threads, Check};
use trigrid::plabic::dual;
use trigrid::polygon::{glue, parse_polygon};
use trigrid::{enumerate_polyiamonds, render_svg, verify_suite, GridPolygon, Mode, Pane, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_THEOREM: i32 = 2;
pub const EXIT_CONJECTURE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "trigrid",
    version,
    about = "Billiards permutations of triangular-grid polygons",
    after_help = "Exit codes: 0 clean, 1 input error, 2 a proved inequality failed, \
                  3 perim >= 4*cyc - 2 failed.\n\n\
                  CSV columns: hash,area,perim,cyc,cycle_type,area_slack,perim_slack,conjecture_slack\n\
                  where area_slack = area - (6cyc - 6), perim_slack = perim - (7cyc - 3)/2 and \
                  conjecture_slack = perim - (4cyc - 2); cycle_type is space separated."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Fixed,
    Free,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Fixed => Mode::Fixed,
            ModeArg::Free => Mode::Free,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the billiards report of a polygon file as json.
    Analyze {
        input: PathBuf,
        /// Include the dual plabic graph.
        #[arg(long)]
        plabic: bool,
        /// 1-based canonical boundary index that receives label 1.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        start_pane: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every simply connected polyiamond up to an area.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_area: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Free)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        report: ReportFormat,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every inequality on all free polyiamonds up to an area.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_area: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        report: ReportFormat,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a polygon and its trajectories as SVG.
    Render {
        input: PathBuf,
        /// Overlay the dual plabic graph.
        #[arg(long)]
        plabic: bool,
        #[arg(long, value_parser = positive_f64)]
        scale: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Join two polygons along one boundary pane each and print the union.
    Glue {
        first: PathBuf,
        second: PathBuf,
        /// Pane of the first polygon: a 1-based boundary index or a pane like H(0,-1).
        #[arg(long)]
        pane1: String,
        /// Pane of the second polygon, in the same syntax.
        #[arg(long)]
        pane2: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure that maps to exit code 1.
#[derive(Debug)]
pub struct InputError(pub String);

fn read_polygon(path: &Path) -> Result<GridPolygon, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_polygon(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Resolve a pane selector against a polygon's canonical labelling.
pub fn select_pane(p: &GridPolygon, selector: &str) -> Result<Pane, InputError> {
    if let Ok(k) = selector.trim().parse::<usize>() {
        if k == 0 || k > p.perim() {
            return Err(InputError(format!("boundary index {k} out of range 1..={}", p.perim())));
        }
        return Ok(p.boundary()[k - 1]);
    }
    selector.parse::<Pane>().map_err(|e| InputError(e.to_string()))
}

#[derive(Serialize)]
struct TrajectoryJson {
    size: usize,
    labels: Vec<usize>,
    length2: usize,
    is_triangular: bool,
    triangle_orientation: trigrid::billiards::TriangleOrientation,
    triangular_intersections: usize,
    shoreline_ks: Option<Vec<i64>>,
}

/// The analysis document printed by `analyze`. Labels are 1-based and start
/// at canonical boundary index `start` (0-based).
pub fn analysis_json(p: &GridPolygon, start: usize, plabic: bool) -> Result<serde_json::Value, InputError> {
    let n = p.perim();
    if start >= n {
        return Err(InputError(format!("start pane {} out of range 1..={n}", start + 1)));
    }
    let sys = BilliardsSystem::analyze(p).map_err(|e| InputError(e.to_string()))?;
    let report = sys.report();
    let perm = sys.permutation().relabeled_from(start);
    let relabel = |l: usize| (l - 1 + n - start) % n + 1;
    let trajectories: Vec<TrajectoryJson> = report
        .cycles
        .iter()
        .map(|c| TrajectoryJson {
            size: c.size,
            labels: c.labels.iter().map(|&l| relabel(l)).collect(),
            length2: c.length2,
            is_triangular: c.is_triangular,
            triangle_orientation: c.triangle_orientation,
            triangular_intersections: c.triangular_intersections,
            shoreline_ks: c.shoreline_ks.clone(),
        })
        .collect();
    let boundary: Vec<String> = (0..n).map(|k| p.boundary()[(start + k) % n].to_string()).collect();
    let mut doc = json!({
        "n": n,
        "area": report.area,
        "cyc": report.cyc,
        "permutation": perm.to_string(),
        "cycles": perm.cycles_one_based(),
        "cycle_type": report.cycle_type,
        "alpha": report.alpha,
        "boundary": boundary,
        "trajectories": trajectories,
        "slacks": report.slacks,
        "primitive": p.is_primitive(),
        "hexagon_tree": p.is_tree_of_unit_hexagons(),
    });
    if plabic {
        let g = dual(p);
        let trips = g.trip_permutation().map_err(|e| InputError(e.to_string()))?;
        let graph: serde_json::Value = serde_json::from_str(&g.to_json()).expect("graph json is valid");
        doc["plabic"] = json!({
            "graph": graph,
            "trip_permutation": trips.relabeled_from(start).to_string(),
        });
    }
    Ok(doc)
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<(), InputError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| InputError(format!("stdout: {e}"))),
    }
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// Execute a parsed command; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, InputError> {
    match &cli.command {
        Command::Analyze {
            input,
            plabic,
            start_pane,
            out: path,
        } => {
            let p = read_polygon(input)?;
            let start = start_pane.map_or(0, |s| s as usize - 1);
            let doc = analysis_json(&p, start, *plabic)?;
            emit(out, path, &pretty(&doc))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            max_area,
            mode,
            report,
            threads,
            out: path,
        } => {
            let mode = Mode::from(*mode);
            let max = *max_area as usize;
            let records = with_threads(threads.map(|t| t as usize), || {
                use rayon::prelude::*;
                enumerate_polyiamonds(max, mode)
                    .par_iter()
                    .map(|p| (describe(p, mode), p.to_file().cells))
                    .collect::<Vec<_>>()
            });
            let text = match report {
                ReportFormat::Csv => records_csv(&records.iter().map(|r| r.0.clone()).collect::<Vec<_>>()),
                ReportFormat::Json => {
                    let mut counts = std::collections::BTreeMap::new();
                    for (r, _) in &records {
                        *counts.entry(r.area).or_insert(0usize) += 1;
                    }
                    let polygons: Vec<_> = records
                        .iter()
                        .map(|(r, cells)| json!({"record": r, "cells": cells}))
                        .collect();
                    pretty(&json!({
                        "max_area": max,
                        "mode": mode,
                        "counts": counts,
                        "polygons": polygons,
                    }))
                }
            };
            emit(out, path, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_area,
            report,
            threads,
            out: path,
        } => {
            let max = *max_area as usize;
            let rep = with_threads(threads.map(|t| t as usize), || verify_suite(max));
            let text = match report {
                ReportFormat::Csv => rep.to_csv(),
                ReportFormat::Json => {
                    let mut s = rep.summary_json();
                    s.push('\n');
                    s
                }
            };
            emit(out, path, &text)?;
            let code = rep.exit_code();
            if let Some(f) = rep.first_failure() {
                let _ = writeln!(err, "violation: {f}");
                let _ = writeln!(err, "cells: {}", json!(f.violation.cells));
            }
            for v in rep.violations_of(Check::PerimConjecture) {
                let _ = writeln!(err, "counterexample to perim >= 4cyc - 2: {} {}", v.hash, json!(v.cells));
            }
            Ok(match code {
                0 => EXIT_OK,
                2 => EXIT_THEOREM,
                _ => EXIT_CONJECTURE,
            })
        }
        Command::Render {
            input,
            plabic,
            scale,
            out: path,
        } => {
            let p = read_polygon(input)?;
            let mut opts = RenderOptions {
                show_plabic: *plabic,
                ..RenderOptions::default()
            };
            if let Some(s) = scale {
                opts.scale = *s;
            }
            let svg = render_svg(&p, &opts).map_err(|e| InputError(e.to_string()))?;
            emit(out, path, &svg)?;
            Ok(EXIT_OK)
        }
        Command::Glue {
            first,
            second,
            pane1,
            pane2,
            out: path,
        } => {
            let a = read_polygon(first)?;
            let b = read_polygon(second)?;
            let p1 = select_pane(&a, pane1)?;
            let p2 = select_pane(&b, pane2)?;
            let u = glue(&a, p1, &b, p2).map_err(|e| InputError(e.to_string()))?;
            emit(out, path, &u.to_file().to_json())?;
            Ok(EXIT_OK)
        }
    }
}
