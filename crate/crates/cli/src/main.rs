mod args;
mod output;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use motive_shapes::generators::{
    involution_variety_decomposition, involution_variety_shape, projective_space_shape,
    transfer_decomposition_case1, transfer_decomposition_case2, upper_case1, upper_case2,
    weil_transfer_shape,
};
use motive_shapes::grid::Grid;
use motive_shapes::serial::shape_from_document;
use motive_shapes::solver::{
    case1_tiles, case2_tiles, exhaustive_tilings, greedy_peel, obstruction_divisibility,
    obstruction_ratio, SolverConfig,
};
use motive_shapes::verify::{self, Check, Verdict};
use motive_shapes::{Error, Params, Shape, Tile};
use serde_json::{json, Value};

use args::{Cli, Command, Format, GridKind, ParamArgs, ShapeKind, Theorem, TileSet};
use output::{emit, shape_json, stats_json};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path} is not valid JSON: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_bound() => EXIT_BOUND,
            CliError::Core(Error::Inconsistent(_) | Error::Nondeterministic(_)) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = SolverConfig {
        cap: cli.cap,
        rank_bound: cli.rank_bound,
    };
    match run(&cli, &config) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("mshape: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn params(args: &ParamArgs) -> Result<Params, CliError> {
    Ok(Params::new(args.p, args.n)?)
}

/// Returns whether the command passed.
fn run(cli: &Cli, config: &SolverConfig) -> CliResult {
    match &cli.command {
        Command::Shape { kind, params: p } => cmd_shape(*kind, params(p)?, cli.format),
        Command::Grid {
            decomposition,
            params: p,
        } => cmd_grid(*decomposition, params(p)?, cli.format),
        Command::Decompose {
            params: p,
            target,
            input,
            tiles,
        } => {
            let params = params(p)?;
            let target = match input {
                Some(path) => read_shape(&path.display().to_string())?,
                None => build_shape(*target, params.degree())?,
            };
            cmd_decompose(params, target, *tiles, config, cli.format)
        }
        Command::Verify { theorem, params: p } => {
            cmd_verify(check_of(*theorem), params(p)?, config, cli.format)
        }
        Command::Sweep {
            p,
            n_max,
            max_degree,
        } => cmd_sweep(p, *n_max, *max_degree, config, cli.format),
    }
}

fn read_shape(path: &str) -> Result<Shape, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_string(),
        source,
    })?;
    Ok(shape_from_document(&value)?)
}

fn build_shape(kind: ShapeKind, degree: u64) -> motive_shapes::Result<Shape> {
    match kind {
        ShapeKind::Proj => projective_space_shape(degree),
        ShapeKind::Weil => weil_transfer_shape(degree),
        ShapeKind::Upper1 => upper_case1(degree),
        ShapeKind::Upper2 => upper_case2(degree),
        ShapeKind::My => involution_variety_shape(degree),
    }
}

fn kind_name(kind: ShapeKind) -> &'static str {
    match kind {
        ShapeKind::Proj => "proj",
        ShapeKind::Weil => "weil",
        ShapeKind::Upper1 => "upper1",
        ShapeKind::Upper2 => "upper2",
        ShapeKind::My => "my",
    }
}

fn check_of(theorem: Theorem) -> Check {
    match theorem {
        Theorem::Main1 => Check::TransferCase1,
        Theorem::Main2 => Check::TransferCase2,
        Theorem::Main3 => Check::InvolutionVariety,
        Theorem::Lemma => Check::UpperDichotomy,
        Theorem::Identity => Check::ClosingIdentity,
        Theorem::Proposition => Check::IsotropicCounts,
    }
}

fn cmd_shape(kind: ShapeKind, params: Params, format: Format) -> CliResult {
    let shape = build_shape(kind, params.degree())?;
    match format {
        Format::Structured => emit(&json!({
            "params": params,
            "kind": kind_name(kind),
            "shape": shape_json(&shape),
            "stats": stats_json(&shape),
        })),
        Format::Text => {
            println!("{} {params}", kind_name(kind));
            match shape.letters() {
                Some(letters) => println!("{letters}"),
                None => println!("{shape}"),
            }
            for r in shape.records() {
                println!("  {:>4} {} {}", r.0, r.1, r.2);
            }
            println!("{}", shape.stats());
        }
    }
    Ok(true)
}

fn cmd_grid(kind: GridKind, params: Params, format: Format) -> CliResult {
    let degree = params.degree();
    let (name, grid) = match kind {
        GridKind::M => (
            "M",
            Grid::from_decomposition(&transfer_decomposition_case1(degree)?),
        ),
        GridKind::Second => (
            "second",
            Grid::from_decomposition(&transfer_decomposition_case2(degree)?),
        ),
        GridKind::Third => (
            "third",
            Grid::from_decomposition(&involution_variety_decomposition(degree)?),
        ),
        GridKind::ShapeR => ("shapeR", Grid::weil_lines(degree)?),
    };
    let total: Shape = grid.column_totals();
    match format {
        Format::Structured => emit(&json!({
            "params": params,
            "grid": {
                "decomposition": name,
                "rows": grid.row_records(),
                "total": shape_json(&total),
            },
            "stats": stats_json(&total),
        })),
        Format::Text => {
            println!("{name} {params}");
            print!("{}", grid.render());
            println!("total: {total}");
            println!("{}", total.stats());
        }
    }
    Ok(true)
}

fn cmd_decompose(
    params: Params,
    target: Shape,
    set: TileSet,
    config: &SolverConfig,
    format: Format,
) -> CliResult {
    let degree = params.degree();
    let (set_name, tiles): (&str, Vec<Tile>) = match set {
        TileSet::Case1 => ("case1", case1_tiles(degree)?),
        TileSet::Case2 => ("case2", case2_tiles(degree)?),
    };
    let greedy = match greedy_peel(&target, &tiles) {
        Ok(t) => Ok(t),
        Err(e @ Error::Stuck { .. }) => Err(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    let all = exhaustive_tilings(&target, &tiles, config)?;
    let capped = all.len() >= config.cap;
    let divisibility = obstruction_divisibility(&target, &tiles);
    let ratios: Vec<(String, Option<String>)> = tiles
        .iter()
        .enumerate()
        .map(|(i, tile)| {
            let companions: Vec<Tile> = tiles
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| t.clone())
                .collect();
            let reason = match obstruction_ratio(&target, tile, &companions) {
                motive_shapes::solver::RatioVerdict::Excluded(why) => Some(why),
                motive_shapes::solver::RatioVerdict::NotExcluded => None,
            };
            (tile.name().to_string(), reason)
        })
        .collect();
    let tilable = greedy.is_ok() || !all.is_empty();

    match format {
        Format::Structured => emit(&json!({
            "params": params,
            "decomposition": {
                "tiles": set_name,
                "target": shape_json(&target),
                "tile_shapes": tiles
                    .iter()
                    .map(|t| json!({"name": t.name(), "shape": shape_json(t.shape())}))
                    .collect::<Vec<_>>(),
                "tilable": tilable,
                "greedy": match &greedy {
                    Ok(t) => json!({"tiling": t}),
                    Err(why) => json!({"failure": why}),
                },
                "exhaustive": {
                    "count": all.len(),
                    "capped": capped,
                    "tilings": all,
                },
                "obstructions": {
                    "divisibility": {
                        "possible": divisibility.possible,
                        "summary": divisibility.to_string(),
                    },
                    "ratio": ratios
                        .iter()
                        .map(|(name, why)| json!({"tile": name, "excluded": why.is_some(), "reason": why}))
                        .collect::<Vec<_>>(),
                },
            },
        })),
        Format::Text => {
            println!("decompose {params} tiles={set_name}");
            println!("target: {target}");
            for t in &tiles {
                let shown = t.shape().letters().unwrap_or_else(|| t.shape().to_string());
                println!("tile {}: {shown}", t.name());
            }
            match &greedy {
                Ok(t) => println!("greedy: {t}"),
                Err(why) => println!("greedy: {why}"),
            }
            let suffix = if capped { " (cap reached)" } else { "" };
            println!("exhaustive: {} tiling(s){suffix}", all.len());
            for t in &all {
                println!("  {t}");
            }
            println!("divisibility: {divisibility}");
            for (name, why) in &ratios {
                match why {
                    Some(why) => println!("ratio {name}: excluded, {why}"),
                    None => println!("ratio {name}: not excluded"),
                }
            }
        }
    }
    if !tilable {
        eprintln!("mshape: target is not tilable by {set_name}");
    }
    Ok(tilable)
}

fn cmd_verify(check: Check, params: Params, config: &SolverConfig, format: Format) -> CliResult {
    let report = verify::verify(check, params, config)?;
    match format {
        Format::Structured => emit(&json!({
            "params": params,
            "report": report,
        })),
        Format::Text => {
            println!("{check} {params}: {}", report.verdict);
            for d in &report.details {
                println!("  {d}");
            }
        }
    }
    Ok(report.verdict != Verdict::Fail)
}

fn cmd_sweep(
    primes: &[u64],
    n_max: u32,
    max_degree: u64,
    config: &SolverConfig,
    format: Format,
) -> CliResult {
    let report = verify::sweep(primes, n_max, max_degree, config)?;
    for notice in &report.notices {
        eprintln!("mshape: {notice}");
    }
    match format {
        Format::Structured => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    let outcomes: serde_json::Map<String, Value> = row
                        .outcomes
                        .iter()
                        .map(|(check, o)| (check.name().to_string(), json!(o)))
                        .collect();
                    json!({"params": row.params, "outcomes": outcomes})
                })
                .collect();
            emit(&json!({
                "params": {"p": primes, "n_max": n_max, "max_degree": max_degree},
                "report": {"rows": rows, "notices": report.notices},
            }));
        }
        Format::Text => {
            for row in &report.rows {
                let cells: Vec<String> = row
                    .outcomes
                    .iter()
                    .map(|(check, o)| match o {
                        verify::CheckOutcome::Verdict { verdict } => format!("{check}={verdict}"),
                        verify::CheckOutcome::Skipped { .. } => format!("{check}=skipped"),
                    })
                    .collect();
                println!("{}  {}", row.params, cells.join(" "));
            }
            println!("{} instance(s)", report.rows.len());
        }
    }
    Ok(!report.failed())
}
