//! The demo's operations as plain functions over strings, so they run and test natively.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use talentgraph::graph::{build_graph, ScoringConfig};
use talentgraph::parser::{extract_skills, parse_resume, Diagnostic, ResumeRecord};
use talentgraph::query::{execute, explain, parse_query, Explanation, Query, RankedResult};
use talentgraph::scoring::score_for_skills;
use talentgraph::{load_sentiment_gazetteer, load_skill_lexicon};

pub const SAMPLE_LEXICON: &str = include_str!("../../../fixtures/lexicon.jsonl");
pub const SAMPLE_GAZETTEER: &str = include_str!("../../../fixtures/gazetteer.jsonl");
pub const SAMPLE_RESUMES: [&str; 6] = [
    include_str!("../../../fixtures/resumes/01-jane-doe.txt"),
    include_str!("../../../fixtures/resumes/02-arjun-mehta.txt"),
    include_str!("../../../fixtures/resumes/03-maria-garcia.txt"),
    include_str!("../../../fixtures/resumes/04-li-wei.txt"),
    include_str!("../../../fixtures/resumes/05-sam-okafor.txt"),
    include_str!("../../../fixtures/resumes/06-priya-nair.txt"),
];

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("demo output serializes")
}

#[derive(Serialize)]
struct Parsed {
    record: ResumeRecord,
    diagnostics: Vec<Diagnostic>,
}

pub fn parse(text: &str, lexicon: &str) -> Result<String, String> {
    let lex = load_skill_lexicon(lexicon).map_err(|e| e.to_string())?;
    let (record, report) = parse_resume(text, &lex, 1).map_err(|e| e.to_string())?;
    Ok(json(&Parsed {
        record,
        diagnostics: report.diagnostics,
    }))
}

#[derive(Deserialize)]
pub struct RankRequest {
    pub resumes: Vec<String>,
    pub query: String,
    pub lexicon: String,
    pub gazetteer: String,
    #[serde(default = "default_lambda")]
    pub lambda: f64,
    #[serde(default = "default_cap")]
    pub cap: u32,
}

fn default_lambda() -> f64 {
    ScoringConfig::default().duration_bonus_factor
}

fn default_cap() -> u32 {
    ScoringConfig::default().duration_cap_months
}

#[derive(Serialize)]
struct Ranked {
    query: Query,
    results: Vec<RankedResult>,
    explanations: Vec<Explanation>,
    skipped: Vec<String>,
}

/// Builds a graph from the request's resumes and ranks them. Empty resumes are skipped.
pub fn rank(request: &str) -> Result<String, String> {
    let req: RankRequest = serde_json::from_str(request).map_err(|e| e.to_string())?;
    let lex = load_skill_lexicon(&req.lexicon).map_err(|e| e.to_string())?;
    let gaz = load_sentiment_gazetteer(&req.gazetteer).map_err(|e| e.to_string())?;
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (i, text) in req.resumes.iter().enumerate() {
        match parse_resume(text, &lex, i as u32 + 1) {
            Ok((r, _)) => records.push(r),
            Err(e) => skipped.push(format!("resume {}: {e}", i + 1)),
        }
    }
    let config = ScoringConfig {
        duration_bonus_factor: req.lambda,
        duration_cap_months: req.cap,
    };
    let graph = build_graph(&records, &lex, &gaz, config).map_err(|e| e.to_string())?;
    let query = parse_query(&req.query, &lex).map_err(|e| e.to_string())?;
    let results = execute(&query, &graph);
    let explanations = results
        .iter()
        .map(|r| explain(&r.jobseeker_id, &query, &graph).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(json(&Ranked {
        query,
        results,
        explanations,
        skipped,
    }))
}

#[derive(Serialize)]
struct WordScore {
    word: String,
    weight: f64,
    occurrences: u32,
}

#[derive(Serialize)]
struct Scored {
    weight: f64,
    skills: BTreeSet<String>,
    matched_occurrences: u32,
    words: Vec<WordScore>,
}

/// Scores a project description with per-keyword contributions.
pub fn score(details: &str, lexicon: &str, gazetteer: &str) -> Result<String, String> {
    let lex = load_skill_lexicon(lexicon).map_err(|e| e.to_string())?;
    let gaz = load_sentiment_gazetteer(gazetteer).map_err(|e| e.to_string())?;
    let skills = extract_skills(details, &lex);
    let s = score_for_skills(details, &skills, &gaz);
    Ok(json(&Scored {
        weight: s.weight,
        matched_occurrences: s.matched_occurrences,
        words: s
            .hits
            .into_iter()
            .map(|(word, h)| WordScore {
                word,
                weight: h.weight,
                occurrences: h.occurrences,
            })
            .collect(),
        skills,
    }))
}
