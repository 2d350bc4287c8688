use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use edgespace_core::infinite::{generator, window, Generator, GENERATOR_NAMES};
use edgespace_core::spaces::{cut_space_basis, cycle_space_basis, membership, SpaceTag};
use edgespace_core::verify::{self, Report, StudyMode, DEFAULT_SAMPLES, PADDED_SEARCH_DEPTH};
use edgespace_core::{Basis, Bounds, EdgeSet, Error};

use crate::graphfile::{parse_edge_list, parse_set_file, GraphFile, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {err}")]
    Parse { path: String, err: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for usage, parse and input errors, 3 for a disconnected graph, 4 when a
    /// brute-force bound is exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Disconnected(_)) => 3,
            CliError::Core(Error::BoundExceeded { .. }) => 4,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "edgespace",
    version,
    about = "Cycle and cut spaces of finite graphs and of windows of infinite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Experiment {
    DualityFinite,
    CorFinite,
    CeBond,
    CeCtop,
    CeCalg,
    FanGrowth,
    Padded,
    EndDegree,
    TheoremWindow,
}

fn parse_space(s: &str) -> std::result::Result<SpaceTag, String> {
    s.parse()
}

fn parse_generator(s: &str) -> std::result::Result<String, String> {
    if generator(s).is_some() {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown generator '{s}', expected one of {}",
            GENERATOR_NAMES.join(", ")
        ))
    }
}

fn parse_mode(s: &str) -> std::result::Result<StudyMode, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print bases and dimensions of the cycle and cut spaces.
    Spaces {
        input: PathBuf,
        /// One of C_fin, C_top, C_alg, B, B_fin, B_sk.
        #[arg(long, value_parser = parse_space)]
        space: Option<SpaceTag>,
    },
    /// Decide membership of an edge set and audit it against all bonds and circuits.
    Check {
        input: PathBuf,
        /// Edge ids (`1,2,3`) or a file of `d` lines. Defaults to the file's `d` lines.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_parser = parse_space, default_value = "C_fin")]
        space: SpaceTag,
        /// Require the enumeration audit; fail with exit 4 when it exceeds the bound.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Write the window of radius `r` of a catalogued generator.
    Generate {
        #[arg(long, value_parser = parse_generator)]
        generator: String,
        #[arg(long)]
        radius: usize,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment and print one verdict line per check.
    Verify {
        #[arg(long, value_enum)]
        experiment: Experiment,
        /// `a..b` (inclusive) or a comma list. For `padded`, the radii of `S`.
        #[arg(long)]
        radii: Option<String>,
        /// Write the JSON report here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Graph file for the finite experiments.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_generator)]
        generator: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// `fans` or `linkages`, for fan_growth.
        #[arg(long, value_parser = parse_mode)]
        mode: Option<StudyMode>,
        /// Distinguished set for cor_finite and theorem_window.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// How many radii past S the padded search tries.
        #[arg(long, default_value_t = PADDED_SEARCH_DEPTH)]
        depth: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<GraphFile> {
    GraphFile::parse(&read(path)?).map_err(|err| CliError::Parse {
        path: path.display().to_string(),
        err,
    })
}

fn write_to(path: &Path, text: &str, out: &mut dyn Write) -> Result<()> {
    if path == Path::new("-") {
        out.write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "-".into(),
                source,
            })
    } else {
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

fn set_arg(arg: Option<&str>, fallback: &EdgeSet) -> Result<EdgeSet> {
    match arg {
        None => Ok(fallback.clone()),
        Some(s) if Path::new(s).is_file() => {
            parse_set_file(&read(Path::new(s))?).map_err(CliError::Usage)
        }
        Some(s) => parse_edge_list(s).map_err(CliError::Usage),
    }
}

/// `a..b` inclusive, `a..=b`, or comma separated.
pub fn parse_radii(s: &str) -> std::result::Result<Vec<usize>, String> {
    let bad = || format!("radii '{s}' must look like 3..7 or 3,5,7");
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn line(out: &mut dyn Write, text: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", text.as_ref()).map_err(|source| CliError::Io {
        path: "-".into(),
        source,
    })
}

fn ids(s: &EdgeSet) -> String {
    s.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_basis(out: &mut dyn Write, label: &str, b: &Basis) -> Result<()> {
    line(out, format!("{label} dimension {}", b.dim()))?;
    for v in b.vectors() {
        line(out, format!("  {}", ids(v)))?;
    }
    Ok(())
}

/// Runs `cli`, writing to `out`. Returns the exit code for completed commands.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let bounds = Bounds::from_env().map_err(CliError::Usage)?;
    match &cli.command {
        Command::Spaces { input, space } => cmd_spaces(&load(input)?, *space, out),
        Command::Check {
            input,
            set,
            space,
            exhaustive,
        } => {
            let file = load(input)?;
            let d = set_arg(set.as_deref(), &file.distinguished)?;
            cmd_check(&file, &d, *space, *exhaustive, &bounds, out)
        }
        Command::Generate {
            generator: name,
            radius,
            out: path,
        } => {
            let text = cmd_generate(name, *radius)?;
            match path {
                Some(p) => write_to(p, &text, out)?,
                None => write_to(Path::new("-"), &text, out)?,
            }
            Ok(0)
        }
        Command::Verify { .. } => cmd_verify(&cli.command, &bounds, out),
    }
}

fn cmd_spaces(file: &GraphFile, space: Option<SpaceTag>, out: &mut dyn Write) -> Result<i32> {
    let g = &file.graph;
    g.require_connected()?;
    let tags = match space {
        Some(t) => vec![t],
        None => vec![SpaceTag::CFin, SpaceTag::B],
    };
    for t in tags {
        let collapsed = t.finite_collapse();
        let basis = if collapsed == SpaceTag::CFin {
            cycle_space_basis(g)?
        } else {
            cut_space_basis(g)?
        };
        let label = if collapsed == t {
            t.to_string()
        } else {
            format!("{t} (finite graph: equals {collapsed})")
        };
        print_basis(out, &label, &basis)?;
    }
    Ok(0)
}

fn cmd_check(
    file: &GraphFile,
    d: &EdgeSet,
    space: SpaceTag,
    exhaustive: bool,
    bounds: &Bounds,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = &file.graph;
    g.check_edges(d)?;
    let m = membership(space, g, d)?;
    let verdict = if m.member { "member" } else { "not a member" };
    line(out, format!("set {{{}}}: {verdict} of {space}", ids(d)))?;
    line(
        out,
        format!(
            "certificate {}",
            serde_json::to_string(&m.certificate).expect("serializable")
        ),
    )?;
    if let Some(note) = &m.note {
        line(out, format!("note {note}"))?;
    }
    if g.vertex_count() > bounds.vertices && !exhaustive {
        line(
            out,
            format!(
                "audit skipped: {} vertices exceed the bound {}",
                g.vertex_count(),
                bounds.vertices
            ),
        )?;
        return Ok(0);
    }
    let ctx = verify::FiniteContext::new(g, bounds)?;
    let mask = ctx.mask(d);
    for (name, audit, count) in [
        ("bonds", ctx.audit_cuts(mask), ctx.bonds.len()),
        ("circuits", ctx.audit_cycles(mask), ctx.circuits.len()),
    ] {
        let text = match &audit.odd_minimal {
            None => format!("orthogonal to all {count} {name}"),
            Some(w) => format!("meets {name} oddly, e.g. {{{}}} (of {count})", ids(w)),
        };
        line(out, text)?;
    }
    let report = verify::verify_minimal_orthogonality_finite(g, d, bounds)?;
    for c in &report.checks {
        let status = if c.verdict.is_fail() {
            "FAILS"
        } else {
            "holds"
        };
        line(out, format!("{status} {}", c.name))?;
    }
    Ok(if report.has_failures() { 1 } else { 0 })
}

/// Canonical file text of the radius-`r` window of the named generator.
pub fn cmd_generate(name: &str, r: usize) -> Result<String> {
    let gen = generator(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown generator '{name}', expected one of {}",
            GENERATOR_NAMES.join(", ")
        ))
    })?;
    let w = window(&*gen, r);
    let d = if gen.has_distinguished() {
        w.distinguished(&*gen)
    } else {
        EdgeSet::new()
    };
    Ok(GraphFile::new(format!("{name}_r{r}"), w.graph, d).serialize())
}

fn gen_or(name: &Option<String>, default: &str) -> Box<dyn Generator> {
    generator(name.as_deref().unwrap_or(default)).expect("validated by the argument parser")
}

fn cmd_verify(cmd: &Command, bounds: &Bounds, out: &mut dyn Write) -> Result<i32> {
    let Command::Verify {
        experiment,
        radii,
        json,
        input,
        generator: gname,
        k,
        mode,
        set,
        seed,
        samples,
        depth,
    } = cmd
    else {
        unreachable!("called with a verify command")
    };
    let radii_or = |default: std::ops::RangeInclusive<usize>| -> Result<Vec<usize>> {
        match radii {
            Some(s) => parse_radii(s).map_err(CliError::Usage),
            None => Ok(default.collect()),
        }
    };
    let input_file = || -> Result<GraphFile> {
        let path = input
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("--input is required for {experiment:?}")))?;
        load(path)
    };
    let report: Report = match experiment {
        Experiment::DualityFinite => verify::verify_duality_finite(&input_file()?.graph, bounds)?,
        Experiment::CorFinite => {
            let file = input_file()?;
            let d = match set {
                Some(_) => Some(set_arg(set.as_deref(), &EdgeSet::new())?),
                None if !file.distinguished.is_empty() => Some(file.distinguished.clone()),
                None => None,
            };
            let mut r = verify::orthogonality_report(&file.graph, d.as_ref(), bounds, *seed)?;
            let peel = verify::peel_sweep(&file.graph, bounds, *samples, *seed)?;
            r.checks.extend(peel.checks);
            r
        }
        Experiment::CeBond => verify::verify_counterexample_bond(&radii_or(3..=7)?, bounds)?,
        Experiment::CeCtop => verify::verify_counterexample_ctop(&radii_or(3..=8)?, bounds)?,
        Experiment::CeCalg => verify::verify_counterexample_calg(&radii_or(3..=8)?, bounds)?,
        Experiment::FanGrowth => {
            let gen = gen_or(gname, "clique_chain");
            verify::fan_growth_study(
                &*gen,
                k.unwrap_or(3),
                &radii_or(3..=8)?,
                mode.unwrap_or(StudyMode::Fans),
            )?
        }
        Experiment::Padded => {
            let gen = gen_or(gname, "clique_chain");
            verify::padded_study(&*gen, 0, k.unwrap_or(3), &radii_or(1..=3)?, *depth)?
        }
        Experiment::EndDegree => {
            verify::end_degree_estimate(&*gen_or(gname, "ladder"), 0, &radii_or(2..=8)?)?
        }
        Experiment::TheoremWindow => {
            let gen = gen_or(gname, "grid_NZ");
            let d = match set {
                Some(s) => Some(set_arg(Some(s), &EdgeSet::new())?),
                None if gen.has_distinguished() => None,
                None => Some(verify::default_probe_set(&*gen)),
            };
            verify::verify_theorem_window(&*gen, d.as_ref(), &radii_or(3..=5)?, bounds)?
        }
    };
    let fails = report.checks.iter().filter(|c| c.verdict.is_fail()).count();
    line(
        out,
        format!(
            "experiment {}: {} checks, {fails} failing",
            report.experiment,
            report.checks.len()
        ),
    )?;
    out.write_all(report.summary().as_bytes())
        .map_err(|source| CliError::Io {
            path: "-".into(),
            source,
        })?;
    if let Some(path) = json {
        write_to(path, &format!("{}\n", report.to_json()), out)?;
    }
    Ok(if fails > 0 { 1 } else { 0 })
}
