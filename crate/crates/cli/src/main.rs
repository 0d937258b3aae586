use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use isolat_core::asymptotics::{self, RatioBand};
use isolat_core::boundary::edge_boundary;
use isolat_core::checks::{run_checks, CheckConfig};
use isolat_core::exact::exact_table;
use isolat_core::hull::vertex_hull_volume;
use isolat_core::zonotope::{ehrhart, lattice_point_count, lattice_points};
use isolat_core::{build_zonotope, validate_generators, Error, GeneratorSet, SearchConfig};

const BUDGET_VAR: &str = "ISOLAT_BUDGET";

#[derive(Parser)]
#[command(
    name = "isolat",
    version,
    about = "Isoperimetry on Cayley graphs of Z^d"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem JSON; read from stdin when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    t_max: Option<u64>,
    #[arg(long, global = true)]
    n_max: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// With `exact`: emit (n, optimum, bound) triples instead of the table.
    #[arg(long, global = true)]
    plot_data: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Zonotope volume, facets, Ehrhart polynomial and dilate sizes.
    Analyze,
    /// Exact minimum edge boundary table.
    Exact,
    /// Edge boundary of Z(t) against the asymptotic bound.
    Compare,
    /// Seeded property suite.
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemSpec {
    dim: usize,
    generators: Vec<Vec<i64>>,
    #[serde(default)]
    options: Options,
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Options {
    t_max: Option<u64>,
    #[serde(alias = "N_max")]
    n_max: Option<usize>,
    /// Coordinate range of the random sets used by `check`.
    radius: Option<i64>,
    tolerances: Option<Tolerances>,
    seed: Option<u64>,
    format: Option<Format>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Tolerances {
    ratio_low: f64,
    ratio_high: f64,
}

enum Failure {
    Usage(String),
    Core(Error),
    Input(String),
    Property(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Core(Error::BudgetExceeded { .. } | Error::InfeasibleEnumeration { .. }) => 3,
            Failure::Core(Error::UpperBoundChainViolated { .. }) => 4,
            Failure::Core(_) | Failure::Input(_) => 2,
            Failure::Property(_) => 5,
        }
    }

    fn report(&self) -> Value {
        match self {
            Failure::Usage(m) => json!({"error": "Usage", "message": m}),
            Failure::Core(e) => json!({"error": e.kind(), "message": e.to_string()}),
            Failure::Input(m) => json!({"error": "InvalidInput", "message": m}),
            Failure::Property(v) => v.clone(),
        }
    }
}

/// A parsed and validated run.
struct Run {
    u: GeneratorSet,
    t_max: Option<u64>,
    n_max: usize,
    seed: u64,
    radius: i64,
    band: RatioBand,
    format: Option<Format>,
    plot_data: bool,
    budget: Option<u64>,
}

fn load(cli: &Cli) -> Result<Run, Failure> {
    let text = match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let spec: ProblemSpec =
        serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
    let u = validate_generators(spec.dim, &spec.generators)?;
    let opts = spec.options;
    let band = match opts.tolerances {
        Some(t) if t.ratio_low <= t.ratio_high => RatioBand {
            lo: t.ratio_low,
            hi: t.ratio_high,
        },
        Some(_) => return Err(Failure::Input("ratio_low exceeds ratio_high".into())),
        None => RatioBand::default(),
    };
    let radius = opts.radius.unwrap_or(10);
    if radius < 0 {
        return Err(Failure::Input("radius must be nonnegative".into()));
    }
    let budget =
        match std::env::var(BUDGET_VAR) {
            Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| {
                Failure::Usage(format!("{BUDGET_VAR} must be a nonnegative integer"))
            })?),
            Err(_) => None,
        };
    Ok(Run {
        u,
        t_max: cli.t_max.or(opts.t_max),
        n_max: cli.n_max.or(opts.n_max).unwrap_or(10),
        seed: cli.seed.or(opts.seed).unwrap_or(42),
        radius,
        band,
        format: cli.format.or(opts.format),
        plot_data: cli.plot_data,
        budget,
    })
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn analyze(run: &Run) -> Result<String, Failure> {
    let t_max = run.t_max.unwrap_or(5);
    let z = build_zonotope(&run.u)?;
    let poly = ehrhart(&z)?;
    let counts = (0..=t_max)
        .map(|t| Ok((t, lattice_point_count(&z, t)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    if run.format == Some(Format::Csv) {
        let mut out = String::from("t,points\n");
        for (t, c) in counts {
            out.push_str(&format!("{t},{c}\n"));
        }
        return Ok(out);
    }
    let unit = lattice_points(&z, 1)?;
    let report = json!({
        "dim": run.u.dim(),
        "generators": run.u.as_slice(),
        "volume": z.volume().to_string(),
        "facet_count": z.facet_count(),
        "facets": z.facets(),
        "ehrhart": {
            "coefficients": poly.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "polynomial": poly.to_string(),
        },
        "points": counts.iter().map(|(t, c)| json!({"t": t, "count": c})).collect::<Vec<_>>(),
        "unit_dilate_boundary": edge_boundary(&unit, &run.u)?,
        "vertex_hull_volume": vertex_hull_volume(&run.u)?.to_string(),
    });
    Ok(to_json(&report))
}

fn exact(run: &Run) -> Result<String, Failure> {
    let mut cfg = SearchConfig {
        n_max: run.n_max,
        ..SearchConfig::default()
    };
    if let Some(b) = run.budget {
        cfg.node_budget = b;
    }
    let table = exact_table(&run.u, run.n_max, &cfg)?;
    let csv = run.format == Some(Format::Csv);
    if run.plot_data {
        let points = asymptotics::plot_data(&run.u, &table)?;
        if !csv {
            return Ok(to_json(&points));
        }
        let mut out = String::from("n,optimum,bound\n");
        for p in points {
            out.push_str(&format!("{},{},{}\n", p.n, p.optimum, p.bound.format(12)));
        }
        return Ok(out);
    }
    if csv {
        let mut out = String::from("n,optimum\n");
        for (n, e) in &table.entries {
            out.push_str(&format!("{n},{}\n", e.optimum));
        }
        return Ok(out);
    }
    Ok(to_json(&table))
}

fn compare(run: &Run) -> Result<String, Failure> {
    let rows = asymptotics::compare_report(&run.u, run.t_max.unwrap_or(20))?;
    if run.format == Some(Format::Json) {
        let band = asymptotics::upper_half_band_report(&rows, run.band);
        return Ok(to_json(&json!({"rows": rows, "band": band})));
    }
    Ok(asymptotics::to_csv(&rows))
}

fn check(run: &Run) -> Result<String, Failure> {
    let cfg = CheckConfig {
        seed: run.seed,
        coord_range: run.radius,
        t_max: run.t_max.unwrap_or(3),
        ..CheckConfig::default()
    };
    let report = run_checks(&run.u, &cfg)?;
    if !report.all_passed() {
        let failures: Vec<_> = report.failures().cloned().collect();
        return Err(Failure::Property(json!({
            "error": "PropertyFailed",
            "properties": failures,
        })));
    }
    if run.format == Some(Format::Json) {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    for p in &report.properties {
        out.push_str(&format!("PASS {} {}/{}\n", p.name, p.passed, p.total));
    }
    Ok(out)
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let run = load(cli)?;
    match cli.command {
        Command::Analyze => analyze(&run),
        Command::Exact => exact(&run),
        Command::Compare => compare(&run),
        Command::Check => check(&run),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match execute(&cli).and_then(|text| emit(&cli, &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!(
                "{}",
                serde_json::to_string(&f.report()).expect("serializable")
            );
            ExitCode::from(f.code())
        }
    }
}
