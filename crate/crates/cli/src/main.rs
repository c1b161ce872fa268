use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use salvetti::complex::{
    build_complex, build_delta_map, build_inclusion_map, build_projection_map, chain_map_to_json, complex_from_json,
    complex_to_json, FiltrationStep, MuConvention,
};
use salvetti::homology::homology_all;
use salvetti::verify::{run_campaign, CampaignSpec, Suite, VerificationReport};
use salvetti::weyl::{GenSet, WeylContext, WeylType, DEFAULT_MAX_ORDER};
use serde_json::json;

#[derive(Parser)]
#[command(name = "salvetti", version, about = "Salvetti and toric complexes of Weyl groups, with exact integer homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the supported Weyl types with their group orders.
    ListTypes {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u128,
    },
    /// Build a complex or chain map and write it as JSON.
    Build {
        /// Type tag such as `B3` or `A~2`.
        #[arg(value_name = "TYPE")]
        kind: String,
        #[arg(value_enum)]
        object: Object,
        /// Required generators of a filtration stage, or the added set of a step.
        #[arg(long, alias = "added", default_value = "")]
        require: String,
        /// Base of a filtration step.
        #[arg(long, default_value = "")]
        base: String,
        /// The generator `x` of a filtration step, e.g. `s2`.
        #[arg(long)]
        next: Option<String>,
        #[arg(long, default_value = "index")]
        mu_convention: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integer homology of a complex file.
    Homology {
        file: PathBuf,
        /// Print JSON instead of a table.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification campaign.
    Verify {
        /// Repeatable; defaults to the standard list.
        #[arg(long = "type", value_name = "TYPE")]
        types: Vec<String>,
        /// Suite name or letter `a`..`g`; repeatable; defaults to all.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value = "index")]
        mu_convention: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u128,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a saved verification report.
    Report { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Salvetti,
    Toric,
    Filtration,
    Inclusion,
    Projection,
    Delta,
}

/// Bad input (exit 2) versus a mathematical failure (exit 1).
enum Failure {
    Usage(anyhow::Error),
    Math(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn classify(e: salvetti::Error) -> Failure {
    use salvetti::Error as E;
    match e {
        E::BoundarySquareNonzero { .. } | E::NotAChainMap { .. } | E::NotExact(_) | E::SubgroupOrderMismatch { .. } => {
            Failure::Math(e.into())
        }
        e => Failure::Usage(e.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("failure: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn say(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => say(&format!("{text}\n")),
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::ListTypes { max_order } => {
            for t in WeylType::catalogue() {
                let order = if t.affine { t.finite_part().group_order() } else { t.group_order() };
                let note = if order > max_order { "  (above bound)" } else { "" };
                let what = if t.affine { "toric, |W0|" } else { "salvetti, |W|" };
                say(&format!("{:<5} {what} = {order}{note}\n", t.to_string()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Build { kind, object, require, base, next, mu_convention, max_order, out } => {
            let kind: WeylType = kind.parse().map_err(classify)?;
            let mu: MuConvention = mu_convention.parse().map_err(classify)?;
            let require: GenSet = require.parse().map_err(classify)?;
            let base: GenSet = base.parse().map_err(classify)?;
            let ctx = WeylContext::with_bound(kind, max_order).map_err(classify)?;
            let all = ctx.generators();
            let text = match object {
                Object::Salvetti | Object::Toric | Object::Filtration => {
                    match object {
                        Object::Salvetti if kind.affine => bail_usage(format!("{kind} is affine; build its toric complex"))?,
                        Object::Toric if !kind.affine => bail_usage(format!("{kind} is finite; build its Salvetti complex"))?,
                        _ => {}
                    }
                    let required = if matches!(object, Object::Filtration) { require } else { GenSet::EMPTY };
                    let c = build_complex(&ctx, all, required, mu).map_err(classify)?;
                    complex_to_json(&c, Some(&ctx.group))
                }
                Object::Inclusion | Object::Projection | Object::Delta => {
                    let next = next.ok_or_else(|| anyhow!("--next is required for chain maps"))?;
                    let next: GenSet = next.parse().map_err(classify)?;
                    if next.len() != 1 {
                        bail_usage("--next takes exactly one generator".into())?;
                    }
                    let x = next.iter().next().expect("one generator");
                    let step = FiltrationStep::new(all, base, require, x).map_err(classify)?;
                    let part = |g, r| build_complex(&ctx, g, r, mu).map(Arc::new).map_err(classify);
                    let map = match object {
                        Object::Inclusion => {
                            build_inclusion_map(&step, &part(step.kernel_generators(), step.base)?, &part(all, step.required())?)
                        }
                        Object::Projection => {
                            Ok(build_projection_map(&part(all, step.required())?, &part(all, step.quotient_required())?))
                        }
                        _ => build_delta_map(&ctx, &step, &part(all, step.quotient_required())?, &part(step.kernel_generators(), step.base)?, mu),
                    }
                    .map_err(classify)?;
                    map.check_chain_map().map_err(classify)?;
                    chain_map_to_json(&map, Some(&ctx.group))
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology { file, json, out } => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let c = complex_from_json(&text).map_err(classify)?;
            let groups = homology_all(&c);
            let rendered = if json {
                let value = json!({
                    "schema": "salvetti-homology/v1",
                    "torsion_free": groups.iter().all(|g| g.is_torsion_free()),
                    "degrees": groups.iter().map(|g| json!({
                        "degree": g.degree,
                        "betti": g.betti,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                serde_json::to_string_pretty(&value).context("serialising homology")?
            } else {
                let mut s = format!("{:>6}  {:>6}  {:>6}  {}\n", "degree", "cells", "betti", "group");
                for g in &groups {
                    s.push_str(&format!("{:>6}  {:>6}  {:>6}  {}\n", g.degree, c.dim(g.degree), g.betti, g));
                }
                s.trim_end().to_string()
            };
            emit(out.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { types, suites, mu_convention, max_order, jobs, out } => {
            let mut spec = CampaignSpec { mu: mu_convention.parse().map_err(classify)?, jobs, max_order, ..Default::default() };
            if !types.is_empty() {
                spec.types = types.iter().map(|t| t.parse()).collect::<Result<_, _>>().map_err(classify)?;
            }
            if !suites.is_empty() {
                spec.suites = suites.iter().map(|s| s.parse::<Suite>()).collect::<Result<_, _>>().map_err(classify)?;
            }
            let report = run_campaign(&spec).map_err(classify)?;
            say(&report.render());
            if let Some(p) = out {
                fs::write(&p, report.to_json()).with_context(|| format!("cannot write {}", p.display()))?;
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Report { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let report = VerificationReport::from_json(&text).map_err(classify)?;
            say(&report.render());
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn bail_usage(msg: String) -> Result<(), Failure> {
    Err(Failure::Usage(anyhow!(msg)))
}
