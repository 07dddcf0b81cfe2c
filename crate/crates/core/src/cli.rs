//! Command-line front end. `run` is the whole program; the binary only forwards
//! `argv` and the standard streams.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::ingest::{corpus_stats, load_corpus, CleanCorpus, CorpusFormat, EntityRegistry};
use crate::level::Level;
use crate::metrics::{full_report, maximal_cliques, ClusteringConvention, MetricsOptions, MetricsReport, Parallelism};
use crate::netbuild::{
    build_graph, write_node_csv, AffiliationMode, BuildConfig, CollabGraph, EdgeWeightPolicy, YearWindow,
};
use crate::report::{
    authorship_distribution, clique_overlaps, export_graph, strongest_links, top_entities, DistributionAxis,
    ExportFormat, RankedTable,
};
use crate::temporal::{growth_rates, period_compare, yearly_series, Period};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "collabnet",
    version,
    about = "Multi-level collaboration network analysis of publication metadata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CorpusArgs {
    /// Corpus file (.jsonl or .csv)
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Alias map CSV: level,alias,canonical
    #[arg(long, value_name = "PATH")]
    aliases: Option<PathBuf>,
    /// Institute to country CSV: institute,country
    #[arg(long, value_name = "PATH")]
    countries: Option<PathBuf>,
    /// Country to region CSV: country,region (defaults to the bundled table)
    #[arg(long, value_name = "PATH")]
    regions: Option<PathBuf>,
    /// Affiliations of multi-affiliation authors to project: all or first
    #[arg(long, default_value = "all", value_parser = parse_affiliation_mode)]
    affiliations: AffiliationMode,
}

#[derive(Args, Debug, Clone)]
struct SeriesArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, default_value = "country")]
    level: Level,
    #[arg(long, default_value = "per-publication")]
    policy: EdgeWeightPolicy,
}

#[derive(Args, Debug, Clone)]
struct GraphArgs {
    #[command(flatten)]
    series: SeriesArgs,
    #[arg(long, value_name = "YEAR")]
    from: Option<i32>,
    #[arg(long, value_name = "YEAR")]
    to: Option<i32>,
    /// Keep entities without any collaboration as isolated nodes
    #[arg(long)]
    include_isolates: bool,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Output format; the accepted set depends on the subcommand
    #[arg(long)]
    format: Option<String>,
    /// Output file (standard output when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Corpus summary counts
    Stats {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a graph and print its size (json) or node attributes (csv)
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Whole-network structural measures
    Metrics {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "defined")]
        clustering: ClusteringConvention,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Entities ranked by total collaborations
    Top {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 10)]
        top: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Strongest links by weight
    Links {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 10)]
        top: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Maximal cliques and nodes shared between them
    Cliques {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 3)]
        min_size: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-year active nodes, unique links and weight
    Series {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Network measures per labelled period (LABEL=FROM-TO)
    Periods {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long = "period", value_name = "LABEL=FROM-TO", required = true, value_parser = parse_period)]
        periods: Vec<Period>,
        /// Allow overlapping periods
        #[arg(long)]
        cumulative: bool,
        #[arg(long, default_value = "defined")]
        clustering: ClusteringConvention,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Growth of mean yearly collaborations between two periods
    Growth {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, value_name = "FROM-TO")]
        early: YearWindow,
        #[arg(long, value_name = "FROM-TO")]
        recent: YearWindow,
        #[arg(long, default_value_t = 1)]
        min_total: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Distribution of authors, institutes or countries per publication
    Dist {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value = "authors")]
        axis: DistributionAxis,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write the graph as csv (edge list), dot or graphml
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_affiliation_mode(s: &str) -> Result<AffiliationMode, String> {
    match s {
        "all" => Ok(AffiliationMode::All),
        "first" => Ok(AffiliationMode::First),
        _ => Err(format!("expected all or first, got {s:?}")),
    }
}

fn parse_period(s: &str) -> Result<Period, String> {
    let (label, window) = s
        .split_once('=')
        .ok_or_else(|| format!("expected LABEL=FROM-TO, got {s:?}"))?;
    Ok(Period::new(label.trim(), window.parse::<YearWindow>()?))
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn data(e: impl std::fmt::Display) -> Self {
        CliError::Data(e.to_string())
    }
}

fn open(path: &Path) -> Result<File, CliError> {
    File::open(path).map_err(|e| CliError::Data(format!("cannot open {}: {e}", path.display())))
}

fn load_registry(args: &CorpusArgs) -> Result<EntityRegistry, CliError> {
    let mut builder = EntityRegistry::builder();
    if let Some(p) = &args.aliases {
        builder = builder.load_aliases(BufReader::new(open(p)?)).map_err(CliError::data)?;
    }
    if let Some(p) = &args.countries {
        builder = builder
            .load_institute_countries(BufReader::new(open(p)?))
            .map_err(CliError::data)?;
    }
    builder = match &args.regions {
        Some(p) => builder.load_regions(BufReader::new(open(p)?)),
        None => builder.with_default_regions(),
    }
    .map_err(CliError::data)?;
    builder.build().map_err(CliError::data)
}

struct Loaded {
    corpus: CleanCorpus,
    registry: EntityRegistry,
}

fn load(args: &CorpusArgs, err: &mut dyn Write) -> Result<Loaded, CliError> {
    let registry = load_registry(args)?;
    let file = open(&args.input)?;
    let corpus = load_corpus(BufReader::new(file), CorpusFormat::from_path(&args.input), &registry)
        .map_err(|e| CliError::Data(format!("{}: {e}", args.input.display())))?;
    for row in &corpus.row_errors {
        let _ = writeln!(
            err,
            "warning: {} line {}: {}",
            args.input.display(),
            row.line,
            row.message
        );
    }
    Ok(Loaded { corpus, registry })
}

fn graph_for(args: &GraphArgs, err: &mut dyn Write) -> Result<CollabGraph, CliError> {
    let loaded = load(&args.series.corpus, err)?;
    let window = match (args.from, args.to) {
        (None, None) => None,
        (from, to) => {
            let from = from.unwrap_or(i32::MIN);
            let to = to.unwrap_or(i32::MAX);
            Some(YearWindow::new(from, to).map_err(|e| CliError::Usage(e.to_string()))?)
        }
    };
    let config = BuildConfig::new(args.series.level)
        .window(window)
        .policy(args.series.policy)
        .include_isolates(args.include_isolates)
        .affiliations(args.series.corpus.affiliations);
    let mut g = build_graph(&loaded.corpus.records, &config);
    g.annotate_regions(&loaded.registry);
    Ok(g)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Fmt {
    Json,
    Csv,
    Table,
    Dot,
    Graphml,
}

fn pick_format(output: &OutputArgs, allowed: &[&str], default: &str) -> Result<Fmt, CliError> {
    let name = output.format.as_deref().unwrap_or(default);
    if !allowed.contains(&name) {
        return Err(CliError::Usage(format!(
            "format {name:?} not supported here (expected one of: {})",
            allowed.join(", ")
        )));
    }
    Ok(match name {
        "json" => Fmt::Json,
        "csv" => Fmt::Csv,
        "table" => Fmt::Table,
        "dot" => Fmt::Dot,
        _ => Fmt::Graphml,
    })
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(value).map_err(CliError::data)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn csv_bytes<F>(header: &[&str], fill: F) -> Result<Vec<u8>, CliError>
where
    F: FnOnce(&mut csv::Writer<&mut Vec<u8>>) -> Result<(), csv::Error>,
{
    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        w.write_record(header).map_err(CliError::data)?;
        fill(&mut w).map_err(CliError::data)?;
        w.flush().map_err(CliError::data)?;
    }
    Ok(buf)
}

fn ranked_csv(table: &RankedTable, links: bool) -> Result<Vec<u8>, CliError> {
    let header: &[&str] = if links {
        &["rank", "source", "target", "weight"]
    } else {
        &["rank", "entity", "total_collaborations", "collaborator_count"]
    };
    csv_bytes(header, |w| {
        for r in &table.rows {
            let rank = r.rank.to_string();
            let total = r.total_collaborations.to_string();
            if links {
                w.write_record([&rank, &r.entity, r.partner.as_deref().unwrap_or(""), &total])?;
            } else {
                let cnt = r.collaborator_count.unwrap_or(0).to_string();
                w.write_record([&rank, &r.entity, &total, &cnt])?;
            }
        }
        Ok(())
    })
}

fn percent(x: f64) -> String {
    format!("{:.1}%", x * 100.0)
}

fn metrics_table(r: &MetricsReport) -> Vec<u8> {
    let sizes: Vec<String> = r.component_sizes.iter().map(usize::to_string).collect();
    let lines = [
        ("Density (binary)", percent(r.density_binary)),
        ("Density (weighted)", percent(r.density_weighted)),
        ("Connectedness", percent(r.connectedness)),
        ("Clustering coefficient", percent(r.clustering_avg)),
        ("Components", r.component_count.to_string()),
        ("Component sizes", sizes.join(" ")),
        ("Giant component size", r.giant_size.to_string()),
        ("Average distance", format!("{:.2}", r.average_distance)),
        ("Degree centralization", percent(r.centralization_degree)),
        ("Closeness centralization", percent(r.centralization_closeness)),
        ("Betweenness centralization", percent(r.centralization_betweenness)),
    ];
    let mut out = String::new();
    for (k, v) in lines {
        out.push_str(&format!("{k:<28}{v}\n"));
    }
    out.into_bytes()
}

#[derive(Serialize)]
struct BuildSummary {
    level: Level,
    window: Option<YearWindow>,
    policy: EdgeWeightPolicy,
    nodes: usize,
    edges: usize,
    total_weight: u64,
}

#[derive(Serialize)]
struct StatsOutput {
    #[serde(flatten)]
    summary: crate::ingest::CorpusSummary,
    merges: crate::ingest::MergeStats,
    inference: crate::ingest::InferenceStats,
    row_errors: usize,
    flagged_rows: usize,
}

#[derive(Serialize)]
struct CliqueOutput {
    min_size: usize,
    count: usize,
    cliques: Vec<crate::metrics::Clique>,
    overlaps: Vec<crate::report::CliqueOverlap>,
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(Vec<u8>, Option<PathBuf>), CliError> {
    let par = Parallelism::from_env();
    let (bytes, out) = match command {
        Command::Stats { corpus, output } => {
            pick_format(&output, &["json"], "json")?;
            let loaded = load(&corpus, err)?;
            let c = &loaded.corpus;
            let stats = StatsOutput {
                summary: corpus_stats(&c.records),
                merges: c.merges,
                inference: c.inference,
                row_errors: c.row_errors.len(),
                flagged_rows: c.flags.len(),
            };
            (json(&stats)?, output.out)
        }
        Command::Build { graph, output } => {
            let fmt = pick_format(&output, &["json", "csv"], "json")?;
            let g = graph_for(&graph, err)?;
            let bytes = if fmt == Fmt::Csv {
                let mut buf = Vec::new();
                write_node_csv(&g, &mut buf).map_err(CliError::data)?;
                buf
            } else {
                let s = g.summary();
                json(&BuildSummary {
                    level: g.level(),
                    window: g.window(),
                    policy: g.policy(),
                    nodes: s.nodes,
                    edges: s.edges,
                    total_weight: s.total_weight,
                })?
            };
            (bytes, output.out)
        }
        Command::Metrics {
            graph,
            clustering,
            output,
        } => {
            let fmt = pick_format(&output, &["json", "table"], "json")?;
            let g = graph_for(&graph, err)?;
            let options = MetricsOptions::default()
                .with_clustering(clustering)
                .with_parallelism(par);
            let report = full_report(&g, &options).map_err(CliError::data)?;
            let bytes = if fmt == Fmt::Table {
                metrics_table(&report)
            } else {
                json(&report)?
            };
            (bytes, output.out)
        }
        Command::Top { graph, top, output } => {
            let fmt = pick_format(&output, &["json", "csv"], "json")?;
            if top == 0 {
                return Err(CliError::Usage("--top must be at least 1".into()));
            }
            let table = top_entities(&graph_for(&graph, err)?, top);
            let bytes = if fmt == Fmt::Csv {
                ranked_csv(&table, false)?
            } else {
                json(&table)?
            };
            (bytes, output.out)
        }
        Command::Links { graph, top, output } => {
            let fmt = pick_format(&output, &["json", "csv"], "json")?;
            if top == 0 {
                return Err(CliError::Usage("--top must be at least 1".into()));
            }
            let table = strongest_links(&graph_for(&graph, err)?, top);
            let bytes = if fmt == Fmt::Csv {
                ranked_csv(&table, true)?
            } else {
                json(&table)?
            };
            (bytes, output.out)
        }
        Command::Cliques {
            graph,
            min_size,
            output,
        } => {
            pick_format(&output, &["json"], "json")?;
            if min_size < 3 {
                return Err(CliError::Usage("--min-size must be at least 3".into()));
            }
            let g = graph_for(&graph, err)?;
            let cliques = maximal_cliques(&g, min_size, par).map_err(CliError::data)?;
            let overlaps = clique_overlaps(&cliques);
            let out = CliqueOutput {
                min_size,
                count: cliques.len(),
                cliques,
                overlaps,
            };
            (json(&out)?, output.out)
        }
        Command::Series { series, output } => {
            let fmt = pick_format(&output, &["json", "csv"], "json")?;
            let loaded = load(&series.corpus, err)?;
            let s = yearly_series(&loaded.corpus.records, series.level, series.policy);
            let bytes = if fmt == Fmt::Csv {
                csv_bytes(&["year", "active_nodes", "unique_links", "weight_sum"], |w| {
                    for r in &s.rows {
                        w.write_record([
                            r.year.to_string(),
                            r.active_nodes.to_string(),
                            r.unique_links.to_string(),
                            r.weight_sum.to_string(),
                        ])?;
                    }
                    Ok(())
                })?
            } else {
                json(&s)?
            };
            (bytes, output.out)
        }
        Command::Periods {
            series,
            periods,
            cumulative,
            clustering,
            output,
        } => {
            pick_format(&output, &["json"], "json")?;
            let loaded = load(&series.corpus, err)?;
            let options = MetricsOptions::default()
                .with_clustering(clustering)
                .with_parallelism(par);
            let cmp = period_compare(
                &loaded.corpus.records,
                series.level,
                &periods,
                series.policy,
                cumulative,
                &options,
            )
            .map_err(|e| CliError::Usage(e.to_string()))?;
            (json(&cmp)?, output.out)
        }
        Command::Growth {
            series,
            early,
            recent,
            min_total,
            output,
        } => {
            let fmt = pick_format(&output, &["json", "csv"], "json")?;
            let loaded = load(&series.corpus, err)?;
            let table = growth_rates(
                &loaded.corpus.records,
                series.level,
                early,
                recent,
                series.policy,
                min_total,
            )
            .map_err(|e| CliError::Usage(e.to_string()))?;
            let bytes = if fmt == Fmt::Csv {
                csv_bytes(&["entity", "growth", "av_recent", "av_early"], |w| {
                    for r in &table.rows {
                        w.write_record([
                            r.entity.clone(),
                            r.growth.to_string(),
                            r.av_recent.to_string(),
                            r.av_early.to_string(),
                        ])?;
                    }
                    Ok(())
                })?
            } else {
                json(&table)?
            };
            (bytes, output.out)
        }
        Command::Dist { corpus, axis, output } => {
            let fmt = pick_format(&output, &["json", "csv"], "json")?;
            let loaded = load(&corpus, err)?;
            let table = authorship_distribution(&loaded.corpus.records, axis);
            let bytes = if fmt == Fmt::Csv {
                csv_bytes(&["count", "publications", "share"], |w| {
                    for r in &table.rows {
                        w.write_record([r.count.to_string(), r.publications.to_string(), r.share.to_string()])?;
                    }
                    Ok(())
                })?
            } else {
                json(&table)?
            };
            (bytes, output.out)
        }
        Command::Export { graph, output } => {
            let fmt = pick_format(&output, &["csv", "dot", "graphml"], "dot")?;
            let g = graph_for(&graph, err)?;
            let format = match fmt {
                Fmt::Csv => ExportFormat::EdgeCsv,
                Fmt::Dot => ExportFormat::Dot,
                _ => ExportFormat::Graphml,
            };
            (export_graph(&g, format), output.out)
        }
    };
    Ok((bytes, out))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code:
/// 0 on success, 1 on usage errors, 2 on data errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok((bytes, None)) => match out.write_all(&bytes).and_then(|_| out.flush()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: writing output: {e}");
                EXIT_DATA
            }
        },
        Ok((bytes, Some(path))) => match std::fs::write(&path, bytes) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                EXIT_DATA
            }
        },
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DATA
        }
    }
}
