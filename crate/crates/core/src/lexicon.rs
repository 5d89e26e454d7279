//! Skill dictionary with alias normalization, and the skill-sentiment gazetteer.
//!
//! Both files use the same container format: either JSON Lines (one object per
//! line; blank lines and lines starting with `#` are ignored) or a single JSON
//! array of objects. Skill records carry `canonical`, `category` and `aliases`;
//! gazetteer records carry `keyword`, `class`, `weight` and an optional `skill`.
//! All strings are case-folded to lowercase on load.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::text::{Tokenizer, DEFAULT_STOP_WORDS};

#[derive(Debug, Error, PartialEq)]
pub enum LexiconError {
    #[error("{locator}: {message}")]
    Format { locator: String, message: String },
    #[error("alias `{alias}` claimed by both `{first}` and `{second}`")]
    AliasConflict {
        alias: String,
        first: String,
        second: String,
    },
    #[error("canonical skill `{0}` declared twice")]
    DuplicateCanonical(String),
    #[error("{locator}: weight {weight} outside [0, 1]")]
    WeightRange { locator: String, weight: f64 },
    #[error("{locator}: duplicate gazetteer entry for keyword `{keyword}`")]
    DuplicateKeyword { locator: String, keyword: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkillEntry {
    pub canonical: String,
    pub category: String,
    #[serde(default)]
    pub aliases: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentimentEntry {
    pub keyword: String,
    pub class: String,
    pub weight: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skill: Option<String>,
}

fn fold(s: &str) -> String {
    s.split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

/// Parses a JSONL or JSON-array document into records, tagging each with a locator.
fn read_records<T: DeserializeOwned>(source: &str) -> Result<Vec<(String, T)>, LexiconError> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('[') {
        let values: Vec<serde_json::Value> =
            serde_json::from_str(source).map_err(|e| LexiconError::Format {
                locator: format!("line {}", e.line()),
                message: e.to_string(),
            })?;
        return values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let locator = format!("record {}", i + 1);
                serde_json::from_value(v)
                    .map(|r| (locator.clone(), r))
                    .map_err(|e| LexiconError::Format {
                        locator,
                        message: e.to_string(),
                    })
            })
            .collect();
    }
    source
        .lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        })
        .map(|(i, l)| {
            let locator = format!("line {}", i + 1);
            serde_json::from_str(l)
                .map(|r| (locator.clone(), r))
                .map_err(|e| LexiconError::Format {
                    locator,
                    message: e.to_string(),
                })
        })
        .collect()
}

fn write_jsonl<T: Serialize>(records: impl Iterator<Item = T>) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(&r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Canonical skills, categories and the alias index used for normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct SkillLexicon {
    entries: BTreeMap<String, SkillEntry>,
    alias_index: BTreeMap<String, String>,
    tokenizer: Tokenizer,
    // alias token sequence joined by a single space -> canonical
    phrases: HashMap<String, String>,
    max_phrase_tokens: usize,
}

impl Default for SkillLexicon {
    fn default() -> Self {
        Self::from_entries(Vec::new()).expect("empty lexicon is valid")
    }
}

impl SkillLexicon {
    pub fn from_entries(entries: Vec<SkillEntry>) -> Result<Self, LexiconError> {
        Self::build(entries.into_iter().map(|e| (String::new(), e)).collect())
    }

    /// A lexicon whose only aliases are the canonical names themselves.
    pub fn from_canonicals<I, S, C>(skills: I) -> Self
    where
        I: IntoIterator<Item = (S, C)>,
        S: AsRef<str>,
        C: AsRef<str>,
    {
        let entries = skills
            .into_iter()
            .map(|(s, c)| SkillEntry {
                canonical: s.as_ref().to_string(),
                category: c.as_ref().to_string(),
                aliases: BTreeSet::new(),
            })
            .collect();
        Self::from_entries(entries).expect("distinct canonicals cannot conflict")
    }

    fn build(records: Vec<(String, SkillEntry)>) -> Result<Self, LexiconError> {
        let mut entries = BTreeMap::new();
        let mut alias_index: BTreeMap<String, String> = BTreeMap::new();
        for (locator, raw) in records {
            let canonical = fold(&raw.canonical);
            if canonical.is_empty() {
                return Err(LexiconError::Format {
                    locator,
                    message: "empty canonical".into(),
                });
            }
            let mut aliases: BTreeSet<String> = raw
                .aliases
                .iter()
                .map(|a| fold(a))
                .filter(|a| !a.is_empty())
                .collect();
            aliases.insert(canonical.clone());
            for alias in &aliases {
                if let Some(other) = alias_index.get(alias) {
                    if *other != canonical {
                        return Err(LexiconError::AliasConflict {
                            alias: alias.clone(),
                            first: other.clone(),
                            second: canonical,
                        });
                    }
                }
            }
            if entries.contains_key(&canonical) {
                return Err(LexiconError::DuplicateCanonical(canonical));
            }
            for alias in &aliases {
                alias_index.insert(alias.clone(), canonical.clone());
            }
            entries.insert(
                canonical.clone(),
                SkillEntry {
                    canonical,
                    category: raw.category.trim().to_lowercase(),
                    aliases,
                },
            );
        }

        let protected: BTreeSet<String> = alias_index
            .keys()
            .flat_map(|a| a.split_whitespace())
            .filter(|w| w.chars().any(|c| !c.is_alphanumeric()))
            .map(str::to_string)
            .collect();
        let tokenizer = Tokenizer::new(
            protected.iter().map(String::as_str),
            DEFAULT_STOP_WORDS.iter().copied(),
        );
        let mut lexicon = Self {
            entries,
            alias_index,
            tokenizer,
            phrases: HashMap::new(),
            max_phrase_tokens: 0,
        };
        lexicon.index_phrases();
        Ok(lexicon)
    }

    fn index_phrases(&mut self) {
        self.phrases.clear();
        self.max_phrase_tokens = 0;
        for (alias, canonical) in &self.alias_index {
            let tokens = self.tokenizer.tokenize(alias);
            if tokens.is_empty() {
                continue;
            }
            self.max_phrase_tokens = self.max_phrase_tokens.max(tokens.len());
            self.phrases.insert(tokens.join(" "), canonical.clone());
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &SkillEntry> {
        self.entries.values()
    }

    pub fn alias_index(&self) -> &BTreeMap<String, String> {
        &self.alias_index
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, canonical: &str) -> Option<&SkillEntry> {
        self.entries.get(canonical)
    }

    pub fn category(&self, canonical: &str) -> Option<&str> {
        self.entries.get(canonical).map(|e| e.category.as_str())
    }

    /// Tokenizer that keeps this lexicon's punctuated aliases (`c++`) intact.
    pub fn tokenizer(&self) -> &Tokenizer {
        &self.tokenizer
    }

    /// Replaces the stop-word list used for tokenizing text and aliases.
    pub fn with_stop_words<S>(mut self, stop_words: S) -> Self
    where
        S: IntoIterator,
        S::Item: AsRef<str>,
    {
        self.tokenizer = self.tokenizer.with_stop_words(stop_words);
        self.index_phrases();
        self
    }

    /// Case-folded, whitespace-trimmed alias lookup.
    pub fn normalize_skill(&self, phrase: &str) -> Option<&str> {
        self.alias_index.get(&fold(phrase)).map(String::as_str)
    }

    /// Canonical skills mentioned in `tokens`, matching multi-word aliases longest first.
    pub(crate) fn match_tokens(&self, tokens: &[String]) -> BTreeSet<String> {
        let mut found = BTreeSet::new();
        let mut i = 0;
        while i < tokens.len() {
            let longest = self.max_phrase_tokens.min(tokens.len() - i);
            let hit = (1..=longest).rev().find_map(|n| {
                self.phrases
                    .get(&tokens[i..i + n].join(" "))
                    .map(|c| (n, c))
            });
            match hit {
                Some((n, canonical)) => {
                    found.insert(canonical.clone());
                    i += n;
                }
                None => i += 1,
            }
        }
        found
    }

    pub fn to_jsonl(&self) -> String {
        write_jsonl(self.entries.values())
    }
}

pub fn load_skill_lexicon(source: &str) -> Result<SkillLexicon, LexiconError> {
    SkillLexicon::build(read_records(source)?)
}

/// Free function form of [`SkillLexicon::normalize_skill`].
pub fn normalize_skill<'a>(phrase: &str, lexicon: &'a SkillLexicon) -> Option<&'a str> {
    lexicon.normalize_skill(phrase)
}

/// Positive keywords with weights in `[0, 1]`, optionally scoped to one skill.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SentimentGazetteer {
    entries: Vec<SentimentEntry>,
    index: HashMap<String, Vec<usize>>,
}

impl SentimentGazetteer {
    pub fn from_entries(entries: Vec<SentimentEntry>) -> Result<Self, LexiconError> {
        Self::build(
            entries
                .into_iter()
                .enumerate()
                .map(|(i, e)| (format!("entry {}", i + 1), e))
                .collect(),
        )
    }

    fn build(records: Vec<(String, SentimentEntry)>) -> Result<Self, LexiconError> {
        let mut entries: Vec<SentimentEntry> = Vec::with_capacity(records.len());
        let mut seen = BTreeSet::new();
        for (locator, raw) in records {
            let keyword = raw.keyword.trim().to_lowercase();
            if keyword.is_empty() || !keyword.chars().all(char::is_alphanumeric) {
                return Err(LexiconError::Format {
                    locator,
                    message: format!("keyword `{}` is not a single token", raw.keyword),
                });
            }
            if !(0.0..=1.0).contains(&raw.weight) {
                return Err(LexiconError::WeightRange {
                    locator,
                    weight: raw.weight,
                });
            }
            let skill = raw.skill.as_deref().map(fold).filter(|s| !s.is_empty());
            if !seen.insert((keyword.clone(), skill.clone())) {
                return Err(LexiconError::DuplicateKeyword { locator, keyword });
            }
            entries.push(SentimentEntry {
                keyword,
                class: raw.class.trim().to_string(),
                weight: raw.weight,
                skill,
            });
        }
        entries.sort_by(|a, b| (&a.keyword, &a.skill).cmp(&(&b.keyword, &b.skill)));
        let mut index: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            index.entry(e.keyword.clone()).or_default().push(i);
        }
        Ok(Self { entries, index })
    }

    pub fn entries(&self) -> &[SentimentEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries_for(&self, keyword: &str) -> impl Iterator<Item = &SentimentEntry> {
        self.index
            .get(keyword)
            .into_iter()
            .flatten()
            .map(|&i| &self.entries[i])
    }

    /// Weight of `keyword` for `skill`: a skill-scoped entry wins over a scope-free one.
    pub fn lookup(&self, keyword: &str, skill: Option<&str>) -> Option<f64> {
        let mut free = None;
        for e in self.entries_for(keyword) {
            match (&e.skill, skill) {
                (Some(scope), Some(s)) if scope == s => return Some(e.weight),
                (None, _) => free = Some(e.weight),
                _ => {}
            }
        }
        free
    }

    /// Weight of `keyword` for a description that mentions all of `skills`.
    ///
    /// The strongest entry scoped to any mentioned skill wins; otherwise the
    /// scope-free entry applies. With zero or one skill this is [`Self::lookup`].
    pub fn lookup_for_skills(&self, keyword: &str, skills: &BTreeSet<String>) -> Option<f64> {
        let mut scoped: Option<f64> = None;
        let mut free = None;
        for e in self.entries_for(keyword) {
            match &e.skill {
                Some(scope) if skills.contains(scope) => {
                    scoped = Some(scoped.map_or(e.weight, |w| w.max(e.weight)));
                }
                None => free = Some(e.weight),
                _ => {}
            }
        }
        scoped.or(free)
    }

    /// Scopes that do not name a canonical skill of `lexicon`.
    pub fn unknown_scopes(&self, lexicon: &SkillLexicon) -> BTreeSet<String> {
        self.entries
            .iter()
            .filter_map(|e| e.skill.as_ref())
            .filter(|s| lexicon.get(s).is_none())
            .cloned()
            .collect()
    }

    pub fn to_jsonl(&self) -> String {
        write_jsonl(self.entries.iter())
    }
}

pub fn load_sentiment_gazetteer(source: &str) -> Result<SentimentGazetteer, LexiconError> {
    SentimentGazetteer::build(read_records(source)?)
}

pub fn lookup_sentiment(
    keyword: &str,
    skill: Option<&str>,
    gazetteer: &SentimentGazetteer,
) -> Option<f64> {
    gazetteer.lookup(keyword, skill)
}
