use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use talentgraph::eval::{evaluate_graph, EvalOptions, GoldLabels, TopKMetric};
use talentgraph::graph::{build_graph, KnowledgeGraph, NodeKind, ScoringConfig};
use talentgraph::intermediate::{emit_intermediate, load_intermediate_with, IntermediateDocument};
use talentgraph::lexicon::{load_sentiment_gazetteer, load_skill_lexicon, SkillLexicon};
use talentgraph::parser::{
    parse_resume_with, DurationOptions, ParseOptions, ResumeRecord, YearMonth,
};
use talentgraph::query::{execute, explain, parse_query, Query, RankedResult};
use talentgraph::stats::{compute_stats, graph_stats};

#[derive(Parser)]
#[command(
    name = "talentgraph",
    version,
    about = "Resume knowledge graph builder and skill search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    HitRate,
    PrecisionAtK,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a directory of .txt resumes (or an intermediate JSON document) into a graph file.
    Ingest {
        input: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        gazetteer: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Duration bonus factor.
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        /// Duration cap in months.
        #[arg(long, default_value_t = 120)]
        cap: u32,
        /// Also write the intermediate document here.
        #[arg(long)]
        intermediate: Option<PathBuf>,
        /// Reference month (YYYY-MM) for open-ended ranges such as "2021 - Present".
        #[arg(long)]
        present: Option<YearMonth>,
    },
    /// Run a skill query against a graph file.
    Query {
        graph: PathBuf,
        query: String,
        /// Alias dictionary; defaults to the canonical skill names in the graph.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Per-term breakdown of one jobseeker's score.
    Explain {
        graph: PathBuf,
        jobseeker: String,
        query: String,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Write a graph in another format.
    Export {
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corpus statistics for a resume directory or a graph file.
    Stats {
        input: PathBuf,
        /// Required when INPUT is a resume directory.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Score a graph against gold labels.
    Eval {
        graph: PathBuf,
        gold: PathBuf,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Descriptions scoring above this are positive.
        #[arg(long, default_value_t = 0.0)]
        threshold: f64,
        #[arg(long, value_enum, default_value = "hit-rate")]
        metric: Metric,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_lexicon(path: &Path) -> Result<SkillLexicon> {
    load_skill_lexicon(&read(path)?).with_context(|| format!("loading lexicon {}", path.display()))
}

fn read_graph(path: &Path) -> Result<KnowledgeGraph> {
    KnowledgeGraph::from_json(&read(path)?)
        .with_context(|| format!("loading graph {}", path.display()))
}

fn lexicon_for(graph: &KnowledgeGraph, path: Option<&Path>) -> Result<SkillLexicon> {
    match path {
        Some(p) => read_lexicon(p),
        None => Ok(SkillLexicon::from_canonicals(
            graph
                .nodes_of(NodeKind::Skill)
                .map(|(id, attrs)| (id.key.clone(), attrs.category.clone().unwrap_or_default())),
        )),
    }
}

fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn resume_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "txt") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Parses every `.txt` resume in `dir`, in file-name order, seeding ids 1, 2, ...
fn parse_dir(
    dir: &Path,
    lexicon: &SkillLexicon,
    options: &ParseOptions,
) -> Result<Vec<ResumeRecord>> {
    let files = resume_files(dir)?;
    if files.is_empty() {
        eprintln!("warning: no .txt resumes in {}", dir.display());
    }
    let mut records = Vec::with_capacity(files.len());
    for (i, path) in files.iter().enumerate() {
        let seed = u32::try_from(i + 1)?;
        let (record, report) = parse_resume_with(&read(path)?, lexicon, seed, options)
            .with_context(|| format!("parsing {}", path.display()))?;
        for d in &report.diagnostics {
            eprintln!("{}: {:?}: {}", path.display(), d.kind, d.message);
        }
        records.push(record);
    }
    Ok(records)
}

fn render_results(query: &Query, results: &[RankedResult]) -> String {
    let mut out = format!("query: {query}\n");
    if results.is_empty() {
        out.push_str("no matching candidates\n");
        return out;
    }
    for (rank, r) in results.iter().enumerate() {
        let skills: Vec<String> = r
            .per_skill
            .iter()
            .map(|s| format!("{}={:.3} ({:.1}y)", s.skill, s.strength, s.years))
            .collect();
        out.push_str(&format!(
            "{:>3}. {:<28} {:<20} {:>8.4}  {}\n",
            rank + 1,
            r.jobseeker_id,
            r.name,
            r.total_score,
            skills.join(", ")
        ));
    }
    out
}

#[derive(Serialize)]
struct QueryOutput<'a> {
    query: &'a Query,
    results: &'a [RankedResult],
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest {
            input,
            lexicon,
            gazetteer,
            out,
            lambda,
            cap,
            intermediate,
            present,
        } => {
            let lex = read_lexicon(&lexicon)?;
            let gaz = load_sentiment_gazetteer(&read(&gazetteer)?)
                .with_context(|| format!("loading gazetteer {}", gazetteer.display()))?;
            for scope in gaz.unknown_scopes(&lex) {
                eprintln!("warning: gazetteer scope `{scope}` is not a lexicon skill");
            }
            let durations = DurationOptions { present };
            let records = if input.is_dir() {
                let options = ParseOptions {
                    duration: durations,
                    ..ParseOptions::default()
                };
                parse_dir(&input, &lex, &options)?
            } else {
                let doc = IntermediateDocument::from_json(&read(&input)?).with_context(|| {
                    format!("loading intermediate document {}", input.display())
                })?;
                load_intermediate_with(&doc, &durations)?
            };
            if let Some(path) = intermediate {
                write_output(Some(&path), &emit_intermediate(&records)?.to_json())?;
            }
            let config = ScoringConfig {
                duration_bonus_factor: lambda,
                duration_cap_months: cap,
            };
            let graph = build_graph(&records, &lex, &gaz, config)?;
            write_output(Some(&out), &graph.to_json())?;
            eprintln!(
                "ingested {} resumes: {} nodes, {} edges",
                records.len(),
                graph.nodes().len(),
                graph.edges().len()
            );
        }
        Command::Query {
            graph,
            query,
            lexicon,
            format,
        } => {
            let graph = read_graph(&graph)?;
            let lex = lexicon_for(&graph, lexicon.as_deref())?;
            let query = parse_query(&query, &lex)?;
            let results = execute(&query, &graph);
            let text = match format {
                Format::Table => render_results(&query, &results),
                Format::Json => to_json(&QueryOutput {
                    query: &query,
                    results: &results,
                })?,
            };
            write_output(None, &text)?;
        }
        Command::Explain {
            graph,
            jobseeker,
            query,
            lexicon,
            format,
        } => {
            let graph = read_graph(&graph)?;
            let lex = lexicon_for(&graph, lexicon.as_deref())?;
            let query = parse_query(&query, &lex)?;
            let ex = explain(&jobseeker, &query, &graph)?;
            let text =
                match format {
                    Format::Json => to_json(&ex)?,
                    Format::Table => {
                        let mut out = format!(
                            "{} ({}) total {:.4}, {}\n",
                            ex.jobseeker_id,
                            ex.name,
                            ex.total_score,
                            if ex.passes_filter {
                                "passes filter"
                            } else {
                                "filtered out"
                            }
                        );
                        for t in &ex.terms {
                            out.push_str(&format!(
                            "  {}: mean {:.4} + bonus {:.4} = {:.4}; {} projects, {:.1} years{}\n",
                            t.term,
                            t.sentiment_mean,
                            t.duration_bonus,
                            t.strength,
                            t.projects.len(),
                            t.years,
                            t.failure.as_ref().map(|f| format!(" [{f}]")).unwrap_or_default()
                        ));
                            for p in &t.projects {
                                let words: Vec<String> = p
                                    .keywords
                                    .iter()
                                    .map(|(w, h)| format!("{w} {:.2}x{}", h.weight, h.occurrences))
                                    .collect();
                                out.push_str(&format!(
                                    "    {} {} @ {}: score {:.4}, {} months [{}]\n",
                                    p.project,
                                    p.title,
                                    p.organization,
                                    p.score,
                                    p.duration_months,
                                    words.join(", ")
                                ));
                            }
                        }
                        out
                    }
                };
            write_output(None, &text)?;
        }
        Command::Export { graph, format, out } => {
            let graph = read_graph(&graph)?;
            let text = match format {
                ExportFormat::Json => graph.to_json(),
                ExportFormat::Dot => graph.to_dot(),
                ExportFormat::Csv => graph.to_edges_csv(),
            };
            write_output(out.as_deref(), &text)?;
        }
        Command::Stats {
            input,
            lexicon,
            format,
        } => {
            let stats = if input.is_dir() {
                let Some(lexicon) = lexicon else {
                    bail!("--lexicon is required when the input is a resume directory");
                };
                let lex = read_lexicon(&lexicon)?;
                compute_stats(&parse_dir(&input, &lex, &ParseOptions::default())?, &lex)
            } else {
                graph_stats(&read_graph(&input)?)
            };
            let text = match format {
                Format::Table => stats.to_string(),
                Format::Json => to_json(&stats)?,
            };
            write_output(None, &text)?;
        }
        Command::Eval {
            graph,
            gold,
            lexicon,
            threshold,
            metric,
            format,
        } => {
            let graph = read_graph(&graph)?;
            let lex = lexicon_for(&graph, lexicon.as_deref())?;
            let gold = GoldLabels::from_json(&read(&gold)?)?;
            let options = EvalOptions {
                sentiment_threshold: threshold,
                ranking_metric: match metric {
                    Metric::HitRate => TopKMetric::HitRate,
                    Metric::PrecisionAtK => TopKMetric::PrecisionAtK,
                },
            };
            let report = evaluate_graph(&graph, &gold, &lex, &options)?;
            let text = match format {
                Format::Table => report.to_string(),
                Format::Json => to_json(&report)?,
            };
            write_output(None, &text)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
