//! Command-line front end: build, count, verify and export.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad arguments,
//! 3 resource cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use cyclohedra::complex::{classify_surface, euler, is_connected, pseudomanifold, CellComplex};
use cyclohedra::export::{complex_dot, complex_json, poset_dot, poset_json};
use cyclohedra::moduli::{build_complex_with, strata_census_with, Budget, Space};
use cyclohedra::nc::{nc_a_counts, nc_b_counts_with, MAX_NC_B};
use cyclohedra::nested::{building_set_count, chamber_count, tubing_poset, ArrangementDescriptor, Diagram};
use cyclohedra::poset::{associahedron, cyclohedron, h_vector, FacePoset};
use cyclohedra::report::{run, VerifyOptions, SUITES};
use cyclohedra::{Error, Result};

#[derive(Parser)]
#[command(name = "cyclohedra", version, about = "Associahedra, cyclohedra and the moduli spaces they tile")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolytopeKind {
    Assoc,
    Cyclo,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    M0,
    Z,
    Cover,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum NcType {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArrangementArg {
    Linear,
    Affine,
}

#[derive(Subcommand)]
enum Command {
    /// Face poset of K_n or W_n.
    Polytope {
        kind: PolytopeKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fvector: bool,
        #[arg(long)]
        hvector: bool,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Cell complex of a moduli space.
    Moduli {
        space: SpaceArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum)]
        export: Option<Format>,
        /// Raise the size cap for this space (also CYCLOHEDRA_CAP_M, _Z, _COVER).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Product strata of Z̄ⁿ from codim-k minimal elements.
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Tubing poset of a path or cycle diagram.
    Tubing {
        diagram: DiagramArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fvector: bool,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Chamber and building-set counts of a braid arrangement.
    Arrangement {
        kind: ArrangementArg,
        #[arg(long)]
        n: usize,
        /// Report the codim-k building-set count instead of chambers.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Non-crossing partition counts by rank, as JSON.
    Nc {
        kind: NcType,
        #[arg(long)]
        n: usize,
        /// Raise the type-B size cap (also CYCLOHEDRA_CAP_NCB).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run verification suites and print the JSON report.
    Verify {
        /// Suite to run; repeatable. `none` runs nothing.
        #[arg(long)]
        suite: Vec<String>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
    },
}

fn env_cap(var: &str) -> Result<Option<usize>> {
    match std::env::var(var) {
        Ok(v) => v.parse().map(Some).map_err(|_| Error::OutOfRange(format!("{var} must be an integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn budget(cap: Option<usize>, space: Space) -> Result<Budget> {
    let mut b = Budget::default();
    if let Some(c) = env_cap("CYCLOHEDRA_CAP_M")? {
        b.max_m = c;
    }
    if let Some(c) = env_cap("CYCLOHEDRA_CAP_Z")? {
        b.max_z = c;
    }
    if let Some(c) = env_cap("CYCLOHEDRA_CAP_COVER")? {
        b.max_cover = c;
    }
    if let Some(c) = cap {
        match space {
            Space::M => b.max_m = c,
            Space::Z => b.max_z = c,
            Space::Cover => b.max_cover = c,
        }
    }
    Ok(b)
}

fn print_poset(p: &FacePoset, fvector: bool, hvector: bool, export: Option<Format>) {
    match export {
        Some(Format::Json) => println!("{}", poset_json(p)),
        Some(Format::Dot) => print!("{}", poset_dot(p)),
        None => {}
    }
    if hvector {
        println!("{}", h_vector(&p.f_vector()));
    }
    if fvector || (!hvector && export.is_none()) {
        println!("{}", p.f_vector());
    }
}

fn print_stats(c: &CellComplex) {
    let counts: Vec<String> = c.cell_counts().iter().map(u64::to_string).collect();
    println!("cells [{}]", counts.join(","));
    println!("euler {}", euler(c));
    println!("pseudomanifold {}", pseudomanifold(c));
    match c.top_dim {
        0 => println!("type point"),
        1 if is_connected(c) && pseudomanifold(c) => println!("type circle"),
        2 => match classify_surface(c) {
            Ok(s) => println!("type {s}"),
            Err(e) => println!("type not determined ({e})"),
        },
        _ => println!("type not determined"),
    }
}

fn execute(command: Command) -> Result<bool> {
    match command {
        Command::Polytope { kind, n, fvector, hvector, export } => {
            let p = match kind {
                PolytopeKind::Assoc => associahedron(n)?,
                PolytopeKind::Cyclo => cyclohedron(n)?,
            };
            print_poset(&p, fvector, hvector, export);
        }
        Command::Moduli { space, n, stats, export, cap } => {
            let space = match space {
                SpaceArg::M0 => Space::M,
                SpaceArg::Z => Space::Z,
                SpaceArg::Cover => Space::Cover,
            };
            let c = build_complex_with(space, n, &budget(cap, space)?)?;
            match export {
                Some(Format::Json) => println!("{}", complex_json(&c)),
                Some(Format::Dot) => print!("{}", complex_dot(&c)),
                None => {}
            }
            if stats || export.is_none() {
                print_stats(&c);
            }
        }
        Command::Strata { n, k, cap } => {
            let strata = strata_census_with(n, k, &budget(cap, Space::Z)?)?;
            let rows: Vec<serde_json::Value> = strata
                .iter()
                .map(|s| {
                    let surface = (s.complex.top_dim == 2).then(|| classify_surface(&s.complex).ok().map(|t| t.to_string()));
                    serde_json::json!({
                        "labels": s.labels,
                        "cells": s.cell_counts(),
                        "euler": euler(&s.complex),
                        "surface": surface.flatten(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string(&rows).expect("plain data"));
        }
        Command::Tubing { diagram, n, fvector, export } => {
            let d = match diagram {
                DiagramArg::Path => Diagram::path(n)?,
                DiagramArg::Cycle => Diagram::cycle(n)?,
            };
            print_poset(&tubing_poset(&d), fvector, false, export);
        }
        Command::Arrangement { kind, n, k } => {
            let a = match kind {
                ArrangementArg::Linear => ArrangementDescriptor::linear(n),
                ArrangementArg::Affine => ArrangementDescriptor::affine(n),
            };
            match k {
                Some(k) => println!("{}", building_set_count(&a, k)?),
                None => println!("{}", chamber_count(&a)?),
            }
        }
        Command::Nc { kind, n, cap } => {
            let (name, counts) = match kind {
                NcType::A => ("A", nc_a_counts(n)?),
                NcType::B => {
                    let cap = match cap {
                        Some(c) => c,
                        None => env_cap("CYCLOHEDRA_CAP_NCB")?.unwrap_or(MAX_NC_B),
                    };
                    ("B", nc_b_counts_with(n, cap)?)
                }
            };
            let total: u64 = counts.iter().sum();
            let doc = serde_json::json!({ "type": name, "n": n, "counts": counts, "total": total });
            println!("{}", serde_json::to_string(&doc).expect("plain data"));
        }
        Command::Verify { suite, max_n, seed } => {
            if let Some(bad) = suite.iter().find(|s| *s != "none" && !SUITES.contains(&s.as_str())) {
                return Err(Error::OutOfRange(format!("unknown suite {bad:?}; expected one of {}", SUITES.join(", "))));
            }
            let report = run(&VerifyOptions { suites: suite, max_n, seed });
            println!("{}", report.to_json());
            for e in report.entries.iter().filter(|e| !e.pass) {
                eprintln!("FAIL {}/{}: expected {}, got {}", e.suite, e.name, e.target, e.computed);
            }
            return Ok(report.pass);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::Budget { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
