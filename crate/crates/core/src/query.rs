//! Skill query language and ranking.
//!
//! Grammar (case-insensitive):
//!
//! ```text
//! query  := [ "top" [ N ] ] term { "," term } [ "candidates" ]
//! term   := skill [ range ]
//! range  := A "-" B      years, inclusive on both ends, A <= B
//!         | A "+"        at least A years
//! ```
//!
//! `skill` is any alias known to the lexicon. Terms are conjunctive; results are
//! ranked by the sum of jobseeker-skill strengths over the query's skills, ties
//! broken by jobseeker id.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{KnowledgeGraph, NodeId, SkillStrength};
use crate::lexicon::SkillLexicon;
use crate::scoring::KeywordHit;

pub const DEFAULT_TOP_K: usize = 10;

static TOP: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)^top\b\s*(?:(\d+)\b)?\s*").unwrap());
static CANDIDATES: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)\s*\bcandidates?\s*$").unwrap());
static RANGE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^(.+?)\s+(-?\d+(?:\.\d+)?)\s*(?:-|–|to)\s*(-?\d+(?:\.\d+)?)$").unwrap()
});
static AT_LEAST: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^(.+?)\s+(-?\d+(?:\.\d+)?)\s*\+$").unwrap());

#[derive(Debug, Error, PartialEq)]
pub enum QueryError {
    #[error("empty query")]
    Empty,
    #[error("empty term at position {0}")]
    EmptyTerm(usize),
    #[error("unknown skill `{0}`")]
    UnknownSkill(String),
    #[error("invalid range in `{term}`: {reason}")]
    Range { term: String, reason: String },
    #[error("skill `{0}` appears in more than one term")]
    DuplicateSkill(String),
    #[error("top-k must be a positive integer")]
    InvalidTopK,
    #[error("jobseeker `{0}` not found")]
    JobseekerNotFound(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryTerm {
    pub skill: String,
    pub min_years: Option<f64>,
    pub max_years: Option<f64>,
}

impl QueryTerm {
    pub fn new(skill: impl Into<String>) -> Self {
        Self {
            skill: skill.into(),
            min_years: None,
            max_years: None,
        }
    }

    pub fn between(skill: impl Into<String>, min: f64, max: f64) -> Self {
        Self {
            skill: skill.into(),
            min_years: Some(min),
            max_years: Some(max),
        }
    }

    /// Why `strength` fails this term, if it does.
    pub fn failure(&self, strength: &SkillStrength) -> Option<String> {
        if !strength.linked {
            return Some(format!("no {} experience", self.skill));
        }
        let years = strength.years();
        if let Some(min) = self.min_years.filter(|&m| years < m) {
            return Some(format!("{years} years of {} is below {min}", self.skill));
        }
        if let Some(max) = self.max_years.filter(|&m| years > m) {
            return Some(format!("{years} years of {} is above {max}", self.skill));
        }
        None
    }
}

impl fmt::Display for QueryTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.min_years, self.max_years) {
            (Some(a), Some(b)) => write!(f, "{} {a}-{b}", self.skill),
            (Some(a), None) => write!(f, "{} {a}+", self.skill),
            (None, Some(b)) => write!(f, "{} 0-{b}", self.skill),
            (None, None) => write!(f, "{}", self.skill),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub terms: Vec<QueryTerm>,
    pub top_k: usize,
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top {} ", self.top_k)?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn parse_years(term: &str, raw: &str) -> Result<f64, QueryError> {
    let v: f64 = raw.parse().map_err(|_| QueryError::Range {
        term: term.to_string(),
        reason: format!("`{raw}` is not a number"),
    })?;
    if v < 0.0 {
        return Err(QueryError::Range {
            term: term.to_string(),
            reason: "negative years".into(),
        });
    }
    Ok(v)
}

fn normalize<'a>(lexicon: &'a SkillLexicon, phrase: &str) -> Result<&'a str, QueryError> {
    lexicon
        .normalize_skill(phrase)
        .ok_or_else(|| QueryError::UnknownSkill(phrase.trim().to_string()))
}

fn parse_term(term: &str, lexicon: &SkillLexicon) -> Result<QueryTerm, QueryError> {
    if let Some(skill) = lexicon.normalize_skill(term) {
        return Ok(QueryTerm::new(skill));
    }
    if let Some(c) = RANGE.captures(term) {
        let min = parse_years(term, &c[2])?;
        let max = parse_years(term, &c[3])?;
        if min > max {
            return Err(QueryError::Range {
                term: term.to_string(),
                reason: format!("{min} > {max}"),
            });
        }
        return Ok(QueryTerm::between(normalize(lexicon, &c[1])?, min, max));
    }
    if let Some(c) = AT_LEAST.captures(term) {
        let min = parse_years(term, &c[2])?;
        return Ok(QueryTerm {
            skill: normalize(lexicon, &c[1])?.to_string(),
            min_years: Some(min),
            max_years: None,
        });
    }
    let last = term.split_whitespace().last().unwrap_or_default();
    if term.split_whitespace().count() > 1 && last.chars().any(|c| c.is_ascii_digit()) {
        return Err(QueryError::Range {
            term: term.to_string(),
            reason: format!("`{last}` is not of the form A-B or A+"),
        });
    }
    Err(QueryError::UnknownSkill(term.to_string()))
}

pub fn parse_query(input: &str, lexicon: &SkillLexicon) -> Result<Query, QueryError> {
    let mut rest = input.trim();
    let mut top_k = DEFAULT_TOP_K;
    if let Some(c) = TOP.captures(rest) {
        if let Some(n) = c.get(1) {
            top_k = n.as_str().parse().map_err(|_| QueryError::InvalidTopK)?;
            if top_k == 0 {
                return Err(QueryError::InvalidTopK);
            }
        }
        rest = &rest[c.get(0).unwrap().end()..];
    }
    let rest = CANDIDATES.replace(rest, "");
    if rest.trim().is_empty() {
        return Err(QueryError::Empty);
    }

    let mut terms = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in rest.split(',').enumerate() {
        let raw = raw.trim();
        if raw.is_empty() {
            return Err(QueryError::EmptyTerm(i + 1));
        }
        let term = parse_term(raw, lexicon)?;
        if !seen.insert(term.skill.clone()) {
            return Err(QueryError::DuplicateSkill(term.skill));
        }
        terms.push(term);
    }
    Ok(Query { terms, top_k })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkillScore {
    pub skill: String,
    pub strength: f64,
    pub years: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedResult {
    pub jobseeker_id: String,
    pub name: String,
    /// Sum of the per-skill strengths.
    pub total_score: f64,
    pub per_skill: Vec<SkillScore>,
}

/// Descending score, then ascending jobseeker id.
pub fn rank_order(a: &RankedResult, b: &RankedResult) -> Ordering {
    b.total_score
        .total_cmp(&a.total_score)
        .then_with(|| a.jobseeker_id.cmp(&b.jobseeker_id))
}

fn strength_or_unlinked(graph: &KnowledgeGraph, js: &str, skill: &str) -> SkillStrength {
    graph.skill_strength(js, skill).unwrap_or(SkillStrength {
        sentiment_mean: 0.0,
        duration_bonus: 0.0,
        support_count: 0,
        months_sum: 0,
        linked: false,
    })
}

/// All jobseekers satisfying every term, fully ranked (no truncation).
pub fn rank_all(query: &Query, graph: &KnowledgeGraph) -> Vec<RankedResult> {
    let mut results: Vec<RankedResult> = graph
        .jobseeker_ids()
        .filter_map(|js| {
            let mut per_skill = Vec::with_capacity(query.terms.len());
            for term in &query.terms {
                let s = strength_or_unlinked(graph, js, &term.skill);
                if term.failure(&s).is_some() {
                    return None;
                }
                per_skill.push(SkillScore {
                    skill: term.skill.clone(),
                    strength: s.total(),
                    years: s.years(),
                });
            }
            Some(RankedResult {
                jobseeker_id: js.to_string(),
                name: graph
                    .node(&NodeId::jobseeker(js))
                    .map(|n| n.label.clone())
                    .unwrap_or_default(),
                total_score: per_skill.iter().map(|p| p.strength).sum(),
                per_skill,
            })
        })
        .collect();
    results.sort_by(rank_order);
    results
}

pub fn execute(query: &Query, graph: &KnowledgeGraph) -> Vec<RankedResult> {
    let mut results = rank_all(query, graph);
    results.truncate(query.top_k);
    results
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectEvidence {
    pub project: String,
    pub title: String,
    pub organization: String,
    pub duration_months: u32,
    pub score: f64,
    /// Per-keyword contributions to `score`.
    pub keywords: BTreeMap<String, KeywordHit>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermExplanation {
    pub term: QueryTerm,
    pub sentiment_mean: f64,
    pub duration_bonus: f64,
    pub strength: f64,
    pub support_count: u64,
    pub months_sum: u64,
    pub years: f64,
    pub satisfied: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub projects: Vec<ProjectEvidence>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Explanation {
    pub jobseeker_id: String,
    pub name: String,
    pub total_score: f64,
    /// Whether every term is satisfied, i.e. the jobseeker appears in the full ranking.
    pub passes_filter: bool,
    pub duration_bonus_factor: f64,
    pub duration_cap_months: u32,
    pub terms: Vec<TermExplanation>,
}

/// Per-term breakdown of a jobseeker's score for `query`.
pub fn explain(
    jobseeker_id: &str,
    query: &Query,
    graph: &KnowledgeGraph,
) -> Result<Explanation, QueryError> {
    let node = graph
        .node(&NodeId::jobseeker(jobseeker_id))
        .ok_or_else(|| QueryError::JobseekerNotFound(jobseeker_id.to_string()))?;
    let terms: Vec<TermExplanation> = query
        .terms
        .iter()
        .map(|term| {
            let s = strength_or_unlinked(graph, jobseeker_id, &term.skill);
            let failure = term.failure(&s);
            let projects = graph
                .supporting_projects(jobseeker_id, &term.skill)
                .into_iter()
                .map(|(project, score)| {
                    let attrs = graph.node(&NodeId::project(project.clone()));
                    ProjectEvidence {
                        title: attrs.map(|a| a.label.clone()).unwrap_or_default(),
                        organization: graph.project_org(&project).unwrap_or_default().to_string(),
                        duration_months: attrs.and_then(|a| a.duration_months).unwrap_or(0),
                        keywords: attrs.map(|a| a.keywords.clone()).unwrap_or_default(),
                        project,
                        score,
                    }
                })
                .collect();
            TermExplanation {
                term: term.clone(),
                sentiment_mean: s.sentiment_mean,
                duration_bonus: s.duration_bonus,
                strength: s.total(),
                support_count: s.support_count,
                months_sum: s.months_sum,
                years: s.years(),
                satisfied: failure.is_none(),
                failure,
                projects,
            }
        })
        .collect();
    Ok(Explanation {
        jobseeker_id: jobseeker_id.to_string(),
        name: node.label.clone(),
        total_score: terms.iter().map(|t| t.strength).sum(),
        passes_filter: terms.iter().all(|t| t.satisfied),
        duration_bonus_factor: graph.config().duration_bonus_factor,
        duration_cap_months: graph.config().duration_cap_months,
        terms,
    })
}
