use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lukfri::generate::{generate, Mode};
use lukfri::oracle::{self, LatticeGrid};
use lukfri::{
    check_feasibility, compute_index_sets, enumerate_candidates, solve, solve_unpruned, LogSumExp,
    MaxCoordinate, Objective, SolveOptions, SolveReport, StageTimings, SumCoordinates, DEFAULT_CAP,
};

use crate::instance_file::{load, InstanceFile};
use crate::report::{
    candidate_entry, check_text, enumerate_text, index_sets_entry, solve_text, to_json,
    vacuous_entry, verify_text, CheckReportFile, EnumerateReportFile, SolveReportFile,
    VerifyReportFile, DISPLAY_PRECISION,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_DISAGREE: u8 = 4;

/// Log-sum-exp minimization over max-Lukasiewicz fuzzy relational
/// inequalities.
#[derive(Debug, Parser)]
#[command(name = "lukfri", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide feasibility and print the index sets J(i).
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find the exact minimizer of the objective.
    Solve(SolveArgs),
    /// List every candidate x(e) with its selector.
    Enumerate {
        path: PathBuf,
        #[command(flatten)]
        cap: CapArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check the solver against exhaustive lattice search.
    Verify {
        path: PathBuf,
        /// Largest lattice grid to search.
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        limit: u64,
        #[arg(long, value_enum, default_value_t = ObjectiveKind::Lse)]
        objective: ObjectiveKind,
        #[command(flatten)]
        cap: CapArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a random instance.
    Generate {
        m: usize,
        n: usize,
        #[arg(long, conflicts_with = "infeasible")]
        feasible: bool,
        #[arg(long)]
        infeasible: bool,
        #[arg(long)]
        seed: u64,
        /// Exponent on the threshold scale; above 1 enlarges J(i).
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        /// Output file (default: standard output).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Time the solver stages over repeated runs.
    Bench {
        path: PathBuf,
        #[arg(long, default_value_t = 10)]
        repeat: u32,
        #[arg(long, value_enum, default_value_t = ObjectiveKind::Lse)]
        objective: ObjectiveKind,
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        cap: CapArg,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t = ObjectiveKind::Lse)]
    pub objective: ObjectiveKind,
    /// Skip dominance pruning; report only the optimum.
    #[arg(long)]
    pub no_prune: bool,
    #[command(flatten)]
    pub cap: CapArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Enumerate candidates on all cores.
    #[arg(long)]
    pub parallel: bool,
    /// Include stage timings in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct CapArg {
    /// Largest |E| to enumerate.
    #[arg(long = "cap", env = "FRI_CAP", default_value_t = DEFAULT_CAP)]
    pub value: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveKind {
    Lse,
    Max,
    Sum,
}

impl ObjectiveKind {
    pub fn objective(self) -> &'static dyn Objective {
        match self {
            ObjectiveKind::Lse => &LogSumExp,
            ObjectiveKind::Max => &MaxCoordinate,
            ObjectiveKind::Sum => &SumCoordinates,
        }
    }
}

/// Exit status for an error that escaped a command.
pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<lukfri::Error>() {
        Some(lukfri::Error::CapExceeded { .. }) | Some(lukfri::Error::GridTooLarge { .. }) => {
            EXIT_CAP
        }
        Some(lukfri::Error::Infeasible { .. }) => EXIT_INFEASIBLE,
        _ => EXIT_INPUT,
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Check { path, format } => cmd_check(&path, format, out),
        Command::Solve(args) => cmd_solve(&args, out),
        Command::Enumerate { path, cap, format } => cmd_enumerate(&path, cap.value, format, out),
        Command::Verify {
            path,
            limit,
            objective,
            cap,
            format,
        } => cmd_verify(&path, limit, objective, cap.value, format, out),
        Command::Generate {
            m,
            n,
            feasible: _,
            infeasible,
            seed,
            density,
            output,
        } => {
            let mode = if infeasible {
                Mode::Infeasible
            } else {
                Mode::Feasible
            };
            cmd_generate(m, n, mode, seed, density, output.as_deref(), out)
        }
        Command::Bench {
            path,
            repeat,
            objective,
            no_prune,
            parallel,
            cap,
        } => cmd_bench(&path, repeat, objective, no_prune, parallel, cap.value, out),
    }
}

pub fn cmd_check(path: &Path, format: Format, out: &mut dyn Write) -> Result<u8> {
    let (file, inst) = load(path)?;
    let idx = compute_index_sets(&inst);
    let verdict = check_feasibility(&inst);
    let report = CheckReportFile {
        name: file.name,
        feasible: verdict.feasible,
        empty_rows: verdict.empty_rows.iter().map(|i| i + 1).collect(),
        vacuous_rows: vacuous_entry(&idx),
        index_sets: index_sets_entry(&idx),
        e_size: if verdict.feasible {
            idx.selector_count().and_then(|s| u64::try_from(s).ok())
        } else {
            Some(0)
        },
        maximum_solution: verdict.maximum_solution.map(|p| p.into_inner()),
    };
    emit(out, format, &report, check_text)?;
    Ok(if report.feasible {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    })
}

fn run_solver(
    inst: &lukfri::Instance,
    objective: ObjectiveKind,
    no_prune: bool,
    options: &SolveOptions,
) -> Result<SolveReport> {
    let f = objective.objective();
    let report = if no_prune {
        solve_unpruned(inst, f, options)?
    } else {
        solve(inst, f, options)?
    };
    Ok(report)
}

pub fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> Result<u8> {
    let (file, inst) = load(&args.path)?;
    let options = SolveOptions {
        cap: args.cap.value,
        parallel: args.parallel,
    };
    let report = run_solver(&inst, args.objective, args.no_prune, &options)?;
    let file_report =
        SolveReportFile::new(file.name, &report, args.objective.objective(), args.timings);
    emit(out, args.format, &file_report, solve_text)?;
    Ok(if file_report.feasible {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    })
}

pub fn cmd_enumerate(path: &Path, cap: u64, format: Format, out: &mut dyn Write) -> Result<u8> {
    let (file, inst) = load(path)?;
    let idx = compute_index_sets(&inst);
    let space = enumerate_candidates(&inst, &idx, Some(cap))?;
    let report = EnumerateReportFile {
        name: file.name,
        e_size: space.len(),
        candidates: space.iter().map(|c| candidate_entry(&c, None)).collect(),
        display_precision: DISPLAY_PRECISION,
    };
    emit(out, format, &report, enumerate_text)?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    path: &Path,
    limit: u64,
    objective: ObjectiveKind,
    cap: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8> {
    let (file, inst) = load(path)?;
    let grid = LatticeGrid::build(&inst);
    let grid_points = match grid.total_points() {
        Some(s) if s <= u128::from(limit) => s as u64,
        size => return Err(lukfri::Error::GridTooLarge { size, limit }.into()),
    };
    let f = objective.objective();
    let solved = solve(
        &inst,
        f,
        &SolveOptions {
            cap,
            parallel: false,
        },
    )?;
    let oracle_minimal = sorted(
        oracle::brute_force_minimal(&inst, limit)?
            .into_iter()
            .map(|p| p.into_inner())
            .collect(),
    );
    let oracle_best = oracle::brute_force_optimum(&inst, f, limit)?;
    let solver_minimal = sorted(
        solved
            .minimal_solutions
            .iter()
            .map(|c| c.point.coords().to_vec())
            .collect(),
    );
    let solver_value = solved.optimal_value.map(|v| v.value());
    let oracle_value = oracle_best.map(|(_, v)| v.value());
    let report = VerifyReportFile {
        name: file.name,
        feasible: solved.verdict.feasible,
        grid_points,
        objective: f.name().to_string(),
        minimal_set_agrees: solver_minimal == oracle_minimal,
        optimum_agrees: solver_value == oracle_value,
        solver_minimal,
        oracle_minimal,
        solver_value,
        oracle_value,
        display_precision: DISPLAY_PRECISION,
    };
    emit(out, format, &report, verify_text)?;
    Ok(if report.agrees() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    })
}

fn sorted(mut pts: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    pts.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    pts
}

pub fn cmd_generate(
    m: usize,
    n: usize,
    mode: Mode,
    seed: u64,
    density: f64,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8> {
    let inst = generate(m, n, mode, seed, density)?;
    let kind = match mode {
        Mode::Feasible => "feasible",
        Mode::Infeasible => "infeasible",
    };
    let name = format!("generated-{kind}-{m}x{n}-seed{seed}");
    let text = InstanceFile::from_instance(&inst, Some(name)).to_json();
    match output {
        Some(p) => {
            std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_bench(
    path: &Path,
    repeat: u32,
    objective: ObjectiveKind,
    no_prune: bool,
    parallel: bool,
    cap: u64,
    out: &mut dyn Write,
) -> Result<u8> {
    let (_, inst) = load(path)?;
    let options = SolveOptions { cap, parallel };
    let runs = repeat.max(1);
    let mut sum = StageTimings::default();
    let mut fastest = Duration::MAX;
    let mut last = None;
    for _ in 0..runs {
        let r = run_solver(&inst, objective, no_prune, &options)?;
        let t = r.timings;
        sum.feasibility += t.feasibility;
        sum.enumeration += t.enumeration;
        sum.pruning += t.pruning;
        sum.selection += t.selection;
        fastest = fastest.min(t.total());
        last = Some(r);
    }
    let r = last.expect("at least one run");
    let mean = |d: Duration| d.as_secs_f64() / f64::from(runs);
    writeln!(out, "runs: {runs}")?;
    writeln!(out, "|E| = {}", r.candidates_enumerated)?;
    writeln!(out, "minimal solutions: {}", r.minimal_solutions.len())?;
    writeln!(out, "mean feasibility (s): {:.6}", mean(sum.feasibility))?;
    writeln!(out, "mean enumeration (s): {:.6}", mean(sum.enumeration))?;
    writeln!(out, "mean pruning (s): {:.6}", mean(sum.pruning))?;
    writeln!(out, "mean selection (s): {:.6}", mean(sum.selection))?;
    writeln!(out, "mean total (s): {:.6}", mean(sum.total()))?;
    writeln!(out, "fastest total (s): {:.6}", fastest.as_secs_f64())?;
    Ok(if r.verdict.feasible {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    })
}

fn emit<T: serde::Serialize>(
    out: &mut dyn Write,
    format: Format,
    value: &T,
    text: fn(&T) -> String,
) -> Result<()> {
    let s = match format {
        Format::Text => text(value),
        Format::Structured => to_json(value),
    };
    out.write_all(s.as_bytes())?;
    Ok(())
}
