mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use report::{compress_ranges, table, Report};
use tqft_cert::blocks::{
    admissible_colorings, block_dimension, block_dimension_exhaustive, tadpole_basis, ColoredGraph,
    Level,
};
use tqft_cert::certify::{certify_level, InfinitenessCertificate};
use tqft_cert::orbits::{count_orbits, enumerate_orbits, h2_bounds};
use tqft_cert::veech::{
    classify_sl2, flat_surface, lattice_certificate, multitwist_matrices, ConfigurationGraph,
    SL2Mat,
};
use tqft_cert::Error;

/// Exact certificates for quantum representations of mapping class groups,
/// Thurston-Veech data and simple-closed-curve orbit counts.
#[derive(Debug, Parser)]
#[command(name = "tqft-cert", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Print only summary lines in table mode.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Infiniteness certificates for a level `p` or an inclusive range `a..b`.
    Certify { range: String },
    /// Conformal-block dimension of a named graph or a graph in text form.
    Blocks {
        /// `tadpole`, `theta`, `dumbbell`, `long-dumbbell`, `theta-tail`, or
        /// `vertices=n; edges=u-v,...; tails=v:color,...`.
        graph: String,
        #[arg(long)]
        level: u32,
        /// Tail color for `tadpole` and `theta-tail`.
        #[arg(long)]
        tail: Option<u32>,
    },
    /// Perron data, classification and flat surface of a configuration graph.
    Veech {
        /// `A:n`, `D:n`, `E:n`, `cycle:n`, `star:n`, `affine-D:n`, `affine-E:n`,
        /// or `c=m; d=k; inter=(i,j,count),...; mult=...`.
        graph: Option<String>,
        /// Intersections `(i,j,count),...` (1-based), instead of GRAPH.
        #[arg(long)]
        inter: Option<String>,
        /// Multiplicities, `c` curves first.
        #[arg(long)]
        mult: Option<String>,
    },
    /// Orbit types of simple closed curves on the surface of genus `g` with `n` punctures.
    Orbits {
        g: u32,
        n: u32,
        /// Count with labeled punctures (pure mapping class group).
        #[arg(long)]
        labeled: bool,
    },
}

/// Exit status 2 for bad input, 3 for a failed internal consistency check.
#[derive(Debug)]
enum Failure {
    Input(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } | Error::NotUnimodular { .. } => {
                Failure::Invariant(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Output {
    report: Report,
    table: String,
    summary: String,
}

fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let num = |t: &str, pos: usize| {
        t.trim().parse::<u64>().map_err(|_| {
            Failure::Input(format!(
                "parse error at position {pos} near `{t}`: expected a level"
            ))
        })
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => {
            let (b, off) = match b.strip_prefix('=') {
                Some(rest) => (rest, a.len() + 3),
                None => (b, a.len() + 2),
            };
            (num(a, 0)?, num(b, off)?)
        }
        None => {
            let p = num(s, 0)?;
            (p, p)
        }
    };
    if a == 0 || a > b {
        return Err(Failure::Input(format!(
            "invalid level range `{s}`: need 1 ≤ a ≤ b"
        )));
    }
    Ok((a, b))
}

fn certify(range: &str) -> Result<Output, Failure> {
    let (a, b) = parse_range(range)?;
    let certs: Vec<InfinitenessCertificate> = (a..=b).map(certify_level).collect();
    let uncertified: Vec<u64> = certs
        .iter()
        .filter(|c| !c.is_certified())
        .map(|c| c.p)
        .collect();
    let certified: Vec<u64> = certs
        .iter()
        .filter(|c| c.is_certified())
        .map(|c| c.p)
        .collect();
    let records: Vec<Value> = certs
        .iter()
        .map(|c| serde_json::to_value(c.record()).unwrap())
        .collect();
    let mut report = Report::new(
        &format!("certify {range}"),
        json!({ "from": a, "to": b }),
        json!({
            "certificates": records,
            "summary": { "certified": certified, "uncertified": uncertified },
        }),
    );
    for c in &certs {
        report
            .notes
            .extend(c.notes().into_iter().map(|n| format!("p = {}: {n}", c.p)));
    }
    report
        .notes
        .push("the four-punctured sphere is outside the scope of these certificates".into());

    let rows: Vec<Vec<String>> = certs
        .iter()
        .map(|c| {
            let rec = c.record();
            let detail = match (&rec.odd_part, &rec.ell, &rec.failed) {
                (Some(q), _, _) => format!(
                    "odd part {q}, boundary color {}",
                    rec.boundary_color.unwrap()
                ),
                (_, Some(ell), _) => {
                    let sig = rec.signature.unwrap();
                    format!("ell {ell}, signature ({}, {})", sig[0], sig[1])
                }
                (_, _, Some(f)) => f.join("; "),
                _ => String::new(),
            };
            vec![c.p.to_string(), rec.route, detail]
        })
        .collect();
    let summary = format!(
        "certified {} of {} levels; uncertified: {{{}}}",
        certified.len(),
        certs.len(),
        compress_ranges(&uncertified)
    );
    Ok(Output {
        table: table(&["p", "route", "detail"], &rows),
        summary,
        report,
    })
}

/// Exhaustive enumeration is only attempted below this many assignments.
const ENUMERATION_LIMIT: u64 = 2_000_000;

fn blocks(text: &str, p: u32, tail: Option<u32>) -> Result<Output, Failure> {
    let level = Level::new(p)?;
    let graph = match ColoredGraph::named(text.trim(), tail) {
        Some(g) => g,
        None => text.parse::<ColoredGraph>()?,
    };
    let dim = block_dimension(&graph, level)?;
    let space = (level.colors().len() as u64).checked_pow(graph.edges().len() as u32);
    let mut results = json!({
        "graph": graph.to_string(),
        "level": level,
        "dimension": dim,
    });
    let mut lines = vec![format!("graph: {graph}"), format!("level: {p}")];
    if space.is_some_and(|s| s <= ENUMERATION_LIMIT) {
        let colorings = admissible_colorings(&graph, level)?;
        let exhaustive = block_dimension_exhaustive(&graph, level)?;
        if exhaustive != dim {
            return Err(Failure::Invariant(format!(
                "dimension routes disagree: frontier {dim}, enumeration {exhaustive}"
            )));
        }
        results["dimension_exhaustive"] = json!(exhaustive);
        results["basis"] = json!(colorings);
    }
    if graph.vertex_count() == 1 && graph.edges() == [(0, 0)] {
        let loops = tadpole_basis(graph.tails()[0].1, level)?;
        lines.push(format!(
            "loop colors: {}",
            loops
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
        results["loop_colors"] = json!(loops);
    }
    let report = Report::new(
        &format!("blocks {text}"),
        json!({ "graph": text, "level": p, "tail": tail }),
        results,
    );
    Ok(Output {
        table: lines.join("\n"),
        summary: format!("dimension {dim}"),
        report,
    })
}

fn matrix_json(m: &SL2Mat) -> Value {
    json!([[m.a, m.b], [m.c, m.d]])
}

fn veech(graph: Option<&str>, inter: Option<&str>, mult: Option<&str>) -> Result<Output, Failure> {
    let text = match (graph, inter) {
        (Some(g), None) => g.to_string(),
        (None, Some(i)) => match mult {
            Some(m) => format!("inter={i}; mult={m}"),
            None => format!("inter={i}"),
        },
        (Some(_), Some(_)) => {
            return Err(Failure::Input(
                "give either GRAPH or --inter, not both".into(),
            ))
        }
        (None, None) => return Err(Failure::Input("missing GRAPH or --inter".into())),
    };
    let g: ConfigurationGraph = text.parse().map_err(|e: Error| match e {
        Error::Parse { .. } => Failure::Input(format!("{e} in `{text}`")),
        other => other.into(),
    })?;
    let lattice = lattice_certificate(&g)?;
    let surface = flat_surface(&g)?;
    let mu = lattice.perron.mu;
    if lattice.perron.residual > lattice.perron.tolerance * mu
        || lattice.perron.v.iter().any(|&x| x <= 0.0)
    {
        return Err(Failure::Invariant(
            "Perron vector failed its residual or positivity check".into(),
        ));
    }
    let (dt_c, dt_d) = multitwist_matrices(mu);
    let product = dt_c.mul(&dt_d);
    let product_inv = dt_c.mul(&dt_d.inverse());
    let results = json!({
        "graph": g.to_string(),
        "perron": lattice.perron,
        "class": lattice.class,
        "veech_index": lattice.veech_index,
        "teichmuller_curve_by_mu": lattice.teichmuller_curve_by_mu,
        "multitwists": {
            "dt_c": { "matrix": matrix_json(&dt_c), "class": classify_sl2(&dt_c) },
            "dt_d": { "matrix": matrix_json(&dt_d), "class": classify_sl2(&dt_d) },
            "dt_c_dt_d": { "trace": product.trace(), "class": classify_sl2(&product) },
            "dt_c_dt_d_inv": { "trace": product_inv.trace(), "class": classify_sl2(&product_inv) },
        },
        "flat_surface": {
            "rectangles": surface.rectangles,
            "gluings": surface.gluings,
            "total_area": surface.total_area,
        },
    });
    let mut report = Report::new(&format!("veech {text}"), json!({ "graph": text }), results);
    if lattice.veech_index.is_none() {
        report.notes.push(
            "non-unit multiplicities: the graph taxonomy does not decide the Veech index".into(),
        );
    }
    let class = serde_json::to_value(lattice.class).unwrap();
    let index = match lattice.veech_index {
        Some(i) => serde_json::to_value(i)
            .unwrap()
            .as_str()
            .unwrap()
            .to_string(),
        None => "undecided".into(),
    };
    let v: Vec<String> = lattice.perron.v.iter().map(|x| format!("{x:.6}")).collect();
    let lines = [
        format!("graph: {g}"),
        format!("mu: {mu:.12}"),
        format!("v: ({})", v.join(", ")),
        format!("class: {}", class.as_str().unwrap()),
        format!("veech index: {index}"),
        format!(
            "rectangles: {}, total area {:.9}",
            surface.rectangles.len(),
            surface.total_area
        ),
    ];
    Ok(Output {
        table: lines.join("\n"),
        summary: format!("mu = {mu:.12}, {}", class.as_str().unwrap()),
        report,
    })
}

/// Orbit lists are printed only up to this many labeled punctures.
const LIST_LIMIT: u32 = 12;

fn orbits(g: u32, n: u32, labeled: bool) -> Result<Output, Failure> {
    let count = count_orbits(g, n, labeled)?;
    let bounds = h2_bounds(g, n)?;
    let mut results = json!({
        "count": count,
        "count_labeled": count_orbits(g, n, true)?,
        "count_unlabeled": count_orbits(g, n, false)?,
        "h2_bounds": bounds,
    });
    let mut lines = vec![format!("N = {count}")];
    let mut report_notes = Vec::new();
    if !labeled || n <= LIST_LIMIT {
        let list = enumerate_orbits(g, n, labeled)?;
        if list.len() as u64 != count {
            return Err(Failure::Invariant(format!(
                "orbit enumeration found {} types, closed form gives {count}",
                list.len()
            )));
        }
        lines.extend(list.iter().map(|c| format!("  {c}")));
        results["orbits"] = json!(list.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    } else {
        report_notes.push(format!(
            "orbit list omitted above {LIST_LIMIT} labeled punctures"
        ));
    }
    lines.push(format!(
        "H2 bounds: ({}, {})",
        bounds.lower_rank, bounds.upper_bound
    ));
    if !bounds.upper_bound_valid {
        report_notes.push("the H2 upper bound is established only for genus at least 4".into());
    }
    if bounds.nonvanishing {
        report_notes.push("nonvanishing of H2 assumes p sufficiently divisible".into());
    }
    let mut report = Report::new(
        &format!("orbits {g} {n}"),
        json!({ "g": g, "n": n, "labeled": labeled }),
        results,
    );
    report.notes = report_notes;
    Ok(Output {
        table: lines.join("\n"),
        summary: format!(
            "N = {count}, H2 bounds ({}, {})",
            bounds.lower_rank, bounds.upper_bound
        ),
        report,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Certify { range } => certify(range),
        Command::Blocks { graph, level, tail } => blocks(graph, *level, *tail),
        Command::Veech { graph, inter, mult } => {
            veech(graph.as_deref(), inter.as_deref(), mult.as_deref())
        }
        Command::Orbits { g, n, labeled } => orbits(*g, *n, *labeled),
    };
    match out {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => out.report.to_json(),
                Format::Table if cli.quiet => out.summary,
                Format::Table => {
                    let mut lines = vec![out.table];
                    lines.extend(out.report.notes.iter().map(|n| format!("note: {n}")));
                    lines.push(out.summary);
                    lines.join("\n")
                }
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(3)
        }
    }
}
