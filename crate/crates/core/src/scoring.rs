//! Sentiment weight of a project description.
//!
//! The score is the occurrence-weighted mean of gazetteer weights over the
//! description's matched words; words without a gazetteer entry do not count.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::lexicon::SentimentGazetteer;
use crate::text::Tokenizer;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeywordHit {
    pub weight: f64,
    pub occurrences: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescriptionScore {
    /// In `[0, 1]`; 0 when nothing matched.
    pub weight: f64,
    pub matched_occurrences: u32,
    pub distinct_keywords: u32,
    /// Per-keyword contributions, sorted by keyword.
    pub hits: BTreeMap<String, KeywordHit>,
}

impl DescriptionScore {
    fn from_hits(hits: BTreeMap<String, KeywordHit>) -> Self {
        let matched_occurrences: u32 = hits.values().map(|h| h.occurrences).sum();
        // summed in keyword order so word order cannot perturb the result
        let sum: f64 = hits
            .values()
            .map(|h| h.weight * f64::from(h.occurrences))
            .sum();
        let weight = if matched_occurrences == 0 {
            0.0
        } else {
            (sum / f64::from(matched_occurrences)).clamp(0.0, 1.0)
        };
        Self {
            weight,
            matched_occurrences,
            distinct_keywords: hits.len() as u32,
            hits,
        }
    }
}

/// Scores `details`, resolving skill-scoped gazetteer entries against `skill`.
pub fn score_description(
    details: &str,
    skill: Option<&str>,
    gazetteer: &SentimentGazetteer,
) -> DescriptionScore {
    let skills: BTreeSet<String> = skill.into_iter().map(str::to_string).collect();
    score_for_skills(details, &skills, gazetteer)
}

/// Scores a description that mentions every skill in `skills`. Each mentioned
/// skill receives this one score; see [`SentimentGazetteer::lookup_for_skills`].
pub fn score_for_skills(
    details: &str,
    skills: &BTreeSet<String>,
    gazetteer: &SentimentGazetteer,
) -> DescriptionScore {
    let mut hits: BTreeMap<String, KeywordHit> = BTreeMap::new();
    for token in Tokenizer::plain().tokenize(details) {
        if let Some(hit) = hits.get_mut(&token) {
            hit.occurrences += 1;
            continue;
        }
        if let Some(weight) = gazetteer.lookup_for_skills(&token, skills) {
            hits.insert(
                token,
                KeywordHit {
                    weight,
                    occurrences: 1,
                },
            );
        }
    }
    DescriptionScore::from_hits(hits)
}
