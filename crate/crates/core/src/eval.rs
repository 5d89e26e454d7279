//! Evaluation against labeled fixtures: skill extraction, description sentiment
//! and top-k ranking.
//!
//! Conventions for empty denominators: precision of an empty prediction set is
//! 1, recall against an empty gold set is 1, and F1 is 0 when both precision and
//! recall are 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{KnowledgeGraph, NodeId, NodeKind};
use crate::lexicon::SkillLexicon;
use crate::query::{parse_query, rank_all, QueryError};

pub const GOLD_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("key sets differ: missing from predictions {missing_predicted:?}, missing from gold {missing_gold:?}")]
    KeyMismatch {
        missing_predicted: Vec<String>,
        missing_gold: Vec<String>,
    },
    #[error("no queries to evaluate")]
    EmptyQuerySet,
    #[error("k must be at least 1")]
    InvalidK,
    #[error("gold labels reference unknown {kind} `{key}`")]
    UnknownReference { kind: &'static str, key: String },
    #[error("gold query `{query}`: {source}")]
    Query { query: String, source: QueryError },
    #[error("gold file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SentimentClass {
    Positive,
    Neutral,
}

/// A description is positive when its score exceeds `threshold`.
pub fn classify(score: f64, threshold: f64) -> SentimentClass {
    if score > threshold {
        SentimentClass::Positive
    } else {
        SentimentClass::Neutral
    }
}

/// Gold-label fixture file.
///
/// `skills` is keyed by jobseeker id, `sentiment` by project key
/// (`<jobseeker id>#<n>`), `queries` by query string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldLabels {
    pub schema_version: u32,
    #[serde(default)]
    pub skills: BTreeMap<String, BTreeSet<String>>,
    #[serde(default)]
    pub sentiment: BTreeMap<String, SentimentClass>,
    #[serde(default)]
    pub queries: BTreeMap<String, BTreeSet<String>>,
}

impl GoldLabels {
    pub fn from_json(source: &str) -> Result<Self, EvalError> {
        let gold: Self =
            serde_json::from_str(source).map_err(|e| EvalError::Format(e.to_string()))?;
        if gold.schema_version != GOLD_SCHEMA_VERSION {
            return Err(EvalError::Format(format!(
                "unsupported schema_version {}",
                gold.schema_version
            )));
        }
        Ok(gold)
    }
}

fn same_keys<A, B>(
    predicted: &BTreeMap<String, A>,
    gold: &BTreeMap<String, B>,
) -> Result<(), EvalError> {
    let missing_predicted: Vec<String> = gold
        .keys()
        .filter(|k| !predicted.contains_key(*k))
        .cloned()
        .collect();
    let missing_gold: Vec<String> = predicted
        .keys()
        .filter(|k| !gold.contains_key(*k))
        .cloned()
        .collect();
    if missing_predicted.is_empty() && missing_gold.is_empty() {
        Ok(())
    } else {
        Err(EvalError::KeyMismatch {
            missing_predicted,
            missing_gold,
        })
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        1.0
    } else {
        num as f64 / den as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtractionMetrics {
    pub true_positives: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

fn f1(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

/// Micro-averaged over all (resume, skill) pairs.
pub fn extraction_metrics(
    predicted: &BTreeMap<String, BTreeSet<String>>,
    gold: &BTreeMap<String, BTreeSet<String>>,
) -> Result<ExtractionMetrics, EvalError> {
    same_keys(predicted, gold)?;
    let (mut tp, mut fp, mut fn_) = (0, 0, 0);
    for (key, g) in gold {
        let p = &predicted[key];
        tp += p.intersection(g).count();
        fp += p.difference(g).count();
        fn_ += g.difference(p).count();
    }
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, tp + fn_);
    Ok(ExtractionMetrics {
        true_positives: tp,
        false_positives: fp,
        false_negatives: fn_,
        precision,
        recall,
        f1: f1(precision, recall),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SentimentMetrics {
    pub total: usize,
    pub correct: usize,
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
}

/// Binary classification counts with `Positive` as the positive class.
pub fn sentiment_metrics(
    predicted: &BTreeMap<String, SentimentClass>,
    gold: &BTreeMap<String, SentimentClass>,
) -> Result<SentimentMetrics, EvalError> {
    use SentimentClass::*;
    same_keys(predicted, gold)?;
    let (mut tp, mut fp, mut fn_, mut tn) = (0, 0, 0, 0);
    for (key, g) in gold {
        match (predicted[key], *g) {
            (Positive, Positive) => tp += 1,
            (Positive, Neutral) => fp += 1,
            (Neutral, Positive) => fn_ += 1,
            (Neutral, Neutral) => tn += 1,
        }
    }
    let total = gold.len();
    Ok(SentimentMetrics {
        total,
        correct: tp + tn,
        accuracy: if total == 0 {
            1.0
        } else {
            (tp + tn) as f64 / total as f64
        },
        precision: ratio(tp, tp + fp),
        recall: ratio(tp, tp + fn_),
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopKMetric {
    /// Fraction of queries with at least one relevant id in the top k.
    #[default]
    HitRate,
    /// Mean fraction of the top k slots holding a relevant id.
    PrecisionAtK,
}

pub fn topk_accuracy(
    rankings: &BTreeMap<String, Vec<String>>,
    gold: &BTreeMap<String, BTreeSet<String>>,
    k: usize,
    metric: TopKMetric,
) -> Result<f64, EvalError> {
    if k == 0 {
        return Err(EvalError::InvalidK);
    }
    if gold.is_empty() {
        return Err(EvalError::EmptyQuerySet);
    }
    same_keys(rankings, gold)?;
    let per_query = gold.iter().map(|(q, relevant)| {
        let hits = rankings[q]
            .iter()
            .take(k)
            .filter(|id| relevant.contains(*id))
            .count();
        match metric {
            TopKMetric::HitRate => f64::from(u8::from(hits > 0)),
            TopKMetric::PrecisionAtK => hits as f64 / k as f64,
        }
    });
    Ok(per_query.sum::<f64>() / gold.len() as f64)
}

pub const REPORTED_K: [usize; 3] = [3, 5, 10];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub extraction: Option<ExtractionMetrics>,
    pub sentiment: Option<SentimentMetrics>,
    pub ranking_metric: TopKMetric,
    /// `(k, value)` for k in 3, 5, 10.
    pub ranking: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub sentiment_threshold: f64,
    pub ranking_metric: TopKMetric,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            sentiment_threshold: 0.0,
            ranking_metric: TopKMetric::HitRate,
        }
    }
}

/// Scores a built graph against gold labels. Empty label groups are skipped.
pub fn evaluate_graph(
    graph: &KnowledgeGraph,
    gold: &GoldLabels,
    lexicon: &SkillLexicon,
    options: &EvalOptions,
) -> Result<EvalReport, EvalError> {
    let extraction = if gold.skills.is_empty() {
        None
    } else {
        let skills = graph.skills_by_jobseeker();
        let predicted = gold
            .skills
            .keys()
            .map(|js| {
                skills
                    .get(js.as_str())
                    .map(|set| (js.clone(), set.iter().map(|s| s.to_string()).collect()))
                    .ok_or_else(|| EvalError::UnknownReference {
                        kind: "jobseeker",
                        key: js.clone(),
                    })
            })
            .collect::<Result<BTreeMap<_, _>, _>>()?;
        Some(extraction_metrics(&predicted, &gold.skills)?)
    };

    let sentiment = if gold.sentiment.is_empty() {
        None
    } else {
        let predicted = gold
            .sentiment
            .keys()
            .map(|p| {
                graph
                    .node(&NodeId::new(NodeKind::Project, p.clone()))
                    .map(|n| {
                        (
                            p.clone(),
                            classify(n.score.unwrap_or(0.0), options.sentiment_threshold),
                        )
                    })
                    .ok_or_else(|| EvalError::UnknownReference {
                        kind: "project",
                        key: p.clone(),
                    })
            })
            .collect::<Result<BTreeMap<_, _>, _>>()?;
        Some(sentiment_metrics(&predicted, &gold.sentiment)?)
    };

    let mut ranking = Vec::new();
    if !gold.queries.is_empty() {
        let mut rankings = BTreeMap::new();
        for (q, relevant) in &gold.queries {
            if let Some(id) = relevant
                .iter()
                .find(|id| !graph.contains(&NodeId::jobseeker(id.as_str())))
            {
                return Err(EvalError::UnknownReference {
                    kind: "jobseeker",
                    key: id.clone(),
                });
            }
            let query = parse_query(q, lexicon).map_err(|source| EvalError::Query {
                query: q.clone(),
                source,
            })?;
            let ids = rank_all(&query, graph)
                .into_iter()
                .map(|r| r.jobseeker_id)
                .collect();
            rankings.insert(q.clone(), ids);
        }
        for k in REPORTED_K {
            ranking.push((
                k,
                topk_accuracy(&rankings, &gold.queries, k, options.ranking_metric)?,
            ));
        }
    }

    Ok(EvalReport {
        extraction,
        sentiment,
        ranking_metric: options.ranking_metric,
        ranking,
    })
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pct = |v: f64| format!("{:.1}%", v * 100.0);
        let rule = "+-------------------------+-------------------+";
        let section = |f: &mut fmt::Formatter<'_>, title: &str| -> fmt::Result {
            writeln!(f, "{rule}")?;
            writeln!(f, "| {title:^43} |")?;
            writeln!(f, "{rule}")
        };
        let row = |f: &mut fmt::Formatter<'_>, name: &str, value: String| -> fmt::Result {
            writeln!(f, "| {name:<23} | {value:>17} |")
        };
        if let Some(m) = &self.extraction {
            section(f, "Skill Extraction Accuracy")?;
            row(f, "Precision", pct(m.precision))?;
            row(f, "Recall", pct(m.recall))?;
            row(f, "F1-Score", pct(m.f1))?;
        }
        if let Some(m) = &self.sentiment {
            section(f, "Sentiment Analysis Accuracy")?;
            row(f, "Accuracy", pct(m.accuracy))?;
            row(f, "Precision", pct(m.precision))?;
            row(f, "Recall", pct(m.recall))?;
        }
        if !self.ranking.is_empty() {
            section(f, "Graph-based Ranking Performance")?;
            let unit = match self.ranking_metric {
                TopKMetric::HitRate => "Accuracy",
                TopKMetric::PrecisionAtK => "Precision",
            };
            for (k, v) in &self.ranking {
                row(
                    f,
                    &format!("Top {k} Relevant Resumes"),
                    format!("{} {unit}", pct(*v)),
                )?;
            }
        }
        writeln!(f, "{rule}")
    }
}
