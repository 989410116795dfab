use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mixdim::bounds::bounds_report_with;
use mixdim::dims::{self, DimOptions, ItemUniverse};
use mixdim::enumerate::connected_graphs_of_order;
use mixdim::tables::{self, TableOptions, TableRow};
use mixdim::torus::{torus_theorem_check, Resolution, TorusReport};
use mixdim::{encode_graph6, parse_graph6, Error, FamilySpec, Graph};

#[derive(Parser)]
#[command(name = "mixdim", version, about = "Mixed metric dimension and its lower bounds")]
struct Cli {
    /// Worker threads for parallel commands (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact metric, edge metric and mixed metric dimension.
    Dims {
        #[command(flatten)]
        input: Input,
        /// Wall-clock limit per dimension, in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// The seven lower bounds, optionally with the exact mixed dimension.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// All connected graphs on five vertices against the reference table.
    TableOrder5 {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Named graphs against the reference table.
    TableSelected {
        /// Skip exact dimensions for the 36-vertex graphs.
        #[arg(long)]
        skip_large: bool,
        /// Wall-clock limit per graph for exact dimensions, in seconds.
        #[arg(long, default_value_t = tables::DEFAULT_TIME_LIMIT.as_secs())]
        time_limit: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check the size-four mixed resolving sets of tori C_m x C_n.
    Torus {
        #[arg(long, requires = "n", conflicts_with = "max")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        /// Check every pair 3 <= m, n <= MAX.
        #[arg(long)]
        max: Option<usize>,
        /// Also compute the exact mixed dimension (tori up to 64 vertices).
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the input graph(s) in graph6 format.
    Graph6 {
        #[command(flatten)]
        input: Input,
    },
    /// List connected graphs of a given order in graph6, one per line.
    Enumerate {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// A graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// A file with one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A generated graph, e.g. `torus:3,4` or `gen_petersen:5,2`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Md,
}

impl Input {
    fn graphs(&self) -> anyhow::Result<Vec<(String, Graph)>> {
        if let Some(s) = &self.graph6 {
            return Ok(vec![(s.trim().to_string(), parse_graph6(s)?)]);
        }
        if let Some(s) = &self.family {
            let spec: FamilySpec = s.parse()?;
            return Ok(vec![(spec.to_string(), spec.generate()?)]);
        }
        let path = self.file.as_ref().expect("clap enforces one input");
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| Ok((l.to_string(), parse_graph6(l)?)))
            .collect()
    }
}

fn render(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for row in rows {
                let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
        }
        Format::Md => {
            let _ = writeln!(out, "| {} |", header.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
            for row in rows {
                let _ = writeln!(out, "| {} |", row.join(" | "));
            }
        }
    }
    out
}

/// Quotes fields holding commas, such as `torus:3,4`.
fn csv_field(f: &str) -> String {
    if f.contains(',') || f.contains('"') {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

fn deadline(secs: Option<u64>) -> Option<Instant> {
    secs.map(|s| Instant::now() + Duration::from_secs(s))
}

fn timed(result: mixdim::Result<dims::Dimension>) -> anyhow::Result<String> {
    match result {
        Ok(d) => Ok(d.value.to_string()),
        Err(Error::TimedOut) => Ok("timeout".into()),
        Err(e) => Err(e.into()),
    }
}

fn cmd_dims(input: &Input, time_limit: Option<u64>, format: Format) -> anyhow::Result<String> {
    let mut rows = Vec::new();
    for (label, g) in input.graphs()? {
        let plain = DimOptions { deadline: deadline(time_limit), ..Default::default() };
        let beta = timed(dims::dimension(&g, ItemUniverse::Vertex, &plain))?;
        let plain = DimOptions { deadline: deadline(time_limit), ..Default::default() };
        let beta_e = timed(dims::dimension(&g, ItemUniverse::Edge, &plain))?;
        let mixed = DimOptions { deadline: deadline(time_limit), ..DimOptions::structural() };
        let beta_m = timed(dims::dimension(&g, ItemUniverse::Mixed, &mixed))?;
        rows.push(vec![label, g.order().to_string(), g.size().to_string(), beta, beta_e, beta_m]);
    }
    Ok(render(format, &["graph", "n", "m", "beta", "betaE", "betaM"], &rows))
}

fn cmd_bounds(input: &Input, exact: bool, time_limit: Option<u64>, format: Format) -> anyhow::Result<String> {
    let mut header = vec!["graph", "n", "m", "L1", "L2", "L3", "L4", "N1", "N2", "N3"];
    if exact {
        header.push("betaM");
    }
    let mut rows = Vec::new();
    for (label, g) in input.graphs()? {
        let (report, beta_m) = match bounds_report_with(&g, exact, deadline(time_limit)) {
            Ok(r) => {
                let bm = r.exact.map(|e| e.beta_m.value.to_string());
                (r, bm)
            }
            Err(Error::TimedOut) => (bounds_report_with(&g, false, None)?, Some("timeout".into())),
            Err(e) => return Err(e.into()),
        };
        let mut row = vec![label, report.n.to_string(), report.m.to_string()];
        row.extend(report.values().iter().map(|b| b.to_string()));
        row.extend(beta_m);
        rows.push(row);
    }
    Ok(render(format, &header, &rows))
}

fn render_table(format: Format, rows: &[TableRow]) -> String {
    match format {
        Format::Csv => tables::render_csv(rows),
        Format::Md => tables::render_markdown(rows),
    }
}

fn summary_lines(format: Format, lines: &[String]) -> String {
    let prefix = if format == Format::Csv { "# " } else { "" };
    let mut out = String::from("\n");
    for l in lines {
        let _ = writeln!(out, "{prefix}{l}");
    }
    out
}

fn cmd_table_order5(format: Format) -> anyhow::Result<String> {
    let table = tables::order5_table(&TableOptions::default())?;
    let mut out = render_table(format, &table.rows);
    let mut lines = vec![format!("matched {}/{} rows", table.matched, table.rows.len())];
    lines.extend(tables::render_diffs(&table.rows, &table.diffs).lines().map(String::from));
    out.push_str(&summary_lines(format, &lines));
    Ok(out)
}

fn cmd_table_selected(skip_large: bool, time_limit: u64, format: Format) -> anyhow::Result<String> {
    let opts = TableOptions {
        time_limit: Duration::from_secs(time_limit),
        exact_max_order: skip_large.then_some(35),
    };
    let table = tables::selected_table(&opts)?;
    let mut out = render_table(format, &table.rows);
    let mut lines = vec![format!("{} cell(s) differ from the reference", table.diffs.len())];
    lines.extend(tables::render_diffs(&table.rows, &table.diffs).lines().map(String::from));
    out.push_str(&summary_lines(format, &lines));
    Ok(out)
}

fn torus_row(r: &TorusReport) -> Vec<String> {
    let coords: Vec<String> = r.case.coords.iter().map(|(i, j)| format!("({i} {j})")).collect();
    let check = match &r.resolution {
        Resolution::Valid => "valid".to_string(),
        Resolution::Collision(x, y) => format!("collision {x:?} {y:?}"),
    };
    vec![
        r.case.m.to_string(),
        r.case.n.to_string(),
        r.case.parity.to_string(),
        coords.join(" "),
        check,
        r.n1.to_string(),
        r.exact.map_or_else(String::new, |b| b.to_string()),
        if r.confirms_four() { "4".into() } else { "FAIL".into() },
    ]
}

fn cmd_torus(
    m: Option<usize>,
    n: Option<usize>,
    max: Option<usize>,
    exact: bool,
    format: Format,
) -> anyhow::Result<(String, bool)> {
    let pairs: Vec<(usize, usize)> = match (m, n, max) {
        (Some(m), Some(n), None) => vec![(m, n)],
        (None, None, Some(max)) => {
            if max < 3 {
                return Err(Error::InvalidInput(format!("--max must be at least 3, got {max}")).into());
            }
            (3..=max).flat_map(|m| (3..=max).map(move |n| (m, n))).collect()
        }
        _ => bail!(Error::InvalidInput("give either --m and --n, or --max".into())),
    };
    let reports = pairs
        .iter()
        .map(|&(m, n)| torus_theorem_check(m, n, exact))
        .collect::<mixdim::Result<Vec<_>>>()?;
    let ok = reports.iter().all(TorusReport::confirms_four);
    let rows: Vec<Vec<String>> = reports.iter().map(torus_row).collect();
    let header = ["m", "n", "case", "candidate", "check", "N1", "betaM", "verdict"];
    Ok((render(format, &header, &rows), ok))
}

fn cmd_enumerate(order: usize) -> anyhow::Result<String> {
    let mut out = String::new();
    for g in connected_graphs_of_order(order)? {
        out.push_str(&encode_graph6(&g)?);
        out.push('\n');
    }
    Ok(out)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let out = match cli.command {
        Command::Dims { input, time_limit, format } => cmd_dims(&input, time_limit, format)?,
        Command::Bounds { input, exact, time_limit, format } => cmd_bounds(&input, exact, time_limit, format)?,
        Command::TableOrder5 { format } => cmd_table_order5(format)?,
        Command::TableSelected { skip_large, time_limit, format } => {
            cmd_table_selected(skip_large, time_limit, format)?
        }
        Command::Torus { m, n, max, exact, format } => {
            let (out, ok) = cmd_torus(m, n, max, exact, format)?;
            print!("{out}");
            if !ok {
                eprintln!("error: a torus candidate failed verification");
                return Ok(ExitCode::from(2));
            }
            return Ok(ExitCode::SUCCESS);
        }
        Command::Graph6 { input } => {
            let mut out = String::new();
            for (_, g) in input.graphs()? {
                out.push_str(&encode_graph6(&g)?);
                out.push('\n');
            }
            out
        }
        Command::Enumerate { order } => cmd_enumerate(order)?,
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Disconnected(..) | Error::Infeasible { .. } | Error::LpInfeasible { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
