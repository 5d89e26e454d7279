//! Shared fixtures, a random corpus generator and a brute-force reference model
//! of graph construction and ranking, written without the library's scoring code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use talentgraph::graph::{EdgeKind, NodeKind};
use talentgraph::lexicon::{
    load_sentiment_gazetteer, load_skill_lexicon, SentimentEntry, SkillEntry,
};
use talentgraph::parser::{parse_resume, ExperienceEntry, ResumeRecord};
use talentgraph::{SentimentGazetteer, SkillLexicon};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture_lexicon() -> SkillLexicon {
    load_skill_lexicon(&fs::read_to_string(fixtures_dir().join("lexicon.jsonl")).unwrap()).unwrap()
}

pub fn fixture_gazetteer() -> SentimentGazetteer {
    load_sentiment_gazetteer(&fs::read_to_string(fixtures_dir().join("gazetteer.jsonl")).unwrap())
        .unwrap()
}

/// Resume texts in file-name order.
pub fn fixture_texts() -> Vec<(String, String)> {
    let mut files: Vec<PathBuf> = fs::read_dir(fixtures_dir().join("resumes"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "txt"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(p).unwrap())
        })
        .collect()
}

pub fn fixture_records(lexicon: &SkillLexicon) -> Vec<ResumeRecord> {
    fixture_texts()
        .iter()
        .enumerate()
        .map(|(i, (_, text))| parse_resume(text, lexicon, i as u32 + 1).unwrap().0)
        .collect()
}

const FILLER: &[&str] = &[
    "built", "service", "system", "platform", "data", "users", "api", "fast", "work", "module",
    "plus", "machine", "web", "boot",
];
const ORGS: &[&str] = &["acme", "globex", "initech", "umbrella", "hooli"];

fn random_case<R: Rng>(rng: &mut R, word: &str) -> String {
    match rng.gen_range(0..3) {
        0 => word.to_uppercase(),
        1 => {
            let mut c = word.chars();
            c.next()
                .map(|f| f.to_uppercase().chain(c).collect())
                .unwrap_or_default()
        }
        _ => word.to_string(),
    }
}

/// Whitespace-separated words drawn from skill aliases, gazetteer keywords and filler.
pub fn random_details<R: Rng>(
    rng: &mut R,
    lexicon: &SkillLexicon,
    gazetteer: &SentimentGazetteer,
    max_words: usize,
) -> String {
    let aliases: Vec<&String> = lexicon.alias_index().keys().collect();
    let keywords: Vec<&str> = gazetteer
        .entries()
        .iter()
        .map(|e| e.keyword.as_str())
        .collect();
    let n = rng.gen_range(0..=max_words);
    let words: Vec<String> = (0..n)
        .map(|_| {
            let w: &str = match rng.gen_range(0..3) {
                0 => aliases.choose(rng).unwrap(),
                1 => keywords.choose(rng).unwrap(),
                _ => FILLER.choose(rng).unwrap(),
            };
            random_case(rng, w)
        })
        .collect();
    words.join(" ")
}

pub fn random_record<R: Rng>(
    rng: &mut R,
    id: &str,
    lexicon: &SkillLexicon,
    gazetteer: &SentimentGazetteer,
) -> ResumeRecord {
    let canonicals: Vec<String> = lexicon.entries().map(|e| e.canonical.clone()).collect();
    let declared = (0..rng.gen_range(0..4))
        .map(|_| canonicals.choose(rng).unwrap().clone())
        .collect();
    let experiences = (0..rng.gen_range(0..5))
        .map(|_| ExperienceEntry {
            organization: ORGS.choose(rng).unwrap().to_string(),
            project_title: String::new(),
            duration_raw: String::new(),
            duration_months: rng.gen_range(0..150),
            details: random_details(rng, lexicon, gazetteer, 14),
        })
        .collect();
    ResumeRecord {
        jobseeker_id: id.to_string(),
        name: format!("Person {id}"),
        declared_skills: declared,
        experiences,
    }
}

pub fn random_corpus<R: Rng>(
    rng: &mut R,
    n: usize,
    lexicon: &SkillLexicon,
    gazetteer: &SentimentGazetteer,
) -> Vec<ResumeRecord> {
    (0..n)
        .map(|i| random_record(rng, &format!("js-{i:02}"), lexicon, gazetteer))
        .collect()
}

/// Reference model of graph construction over whitespace-separated text.
///
/// Works from the raw entry lists only; supports texts whose words are separated
/// by whitespace with no attached punctuation, which is what the generator emits.
pub struct Reference {
    aliases: BTreeMap<Vec<String>, String>,
    keywords: Vec<SentimentEntry>,
    pub lambda: f64,
    pub cap: u64,
    pub nodes: BTreeSet<(NodeKind, String)>,
    /// (kind, from, to) -> (weight sum, support count, months sum)
    pub edges: BTreeMap<(EdgeKind, String, String), (f64, u64, u64)>,
    pub project_scores: BTreeMap<String, f64>,
}

impl Reference {
    pub fn new(skills: &[SkillEntry], keywords: &[SentimentEntry], lambda: f64, cap: u64) -> Self {
        let mut aliases = BTreeMap::new();
        for s in skills {
            for a in s.aliases.iter().chain(std::iter::once(&s.canonical)) {
                let words: Vec<String> = a.split_whitespace().map(str::to_lowercase).collect();
                aliases.insert(words, s.canonical.clone());
            }
        }
        Self {
            aliases,
            keywords: keywords.to_vec(),
            lambda,
            cap,
            nodes: BTreeSet::new(),
            edges: BTreeMap::new(),
            project_scores: BTreeMap::new(),
        }
    }

    pub fn mentioned(&self, text: &str) -> BTreeSet<String> {
        let words: Vec<String> = text.split_whitespace().map(str::to_lowercase).collect();
        let longest = self.aliases.keys().map(Vec::len).max().unwrap_or(0);
        let mut found = BTreeSet::new();
        let mut i = 0;
        'outer: while i < words.len() {
            for n in (1..=longest.min(words.len() - i)).rev() {
                if let Some(c) = self.aliases.get(&words[i..i + n]) {
                    found.insert(c.clone());
                    i += n;
                    continue 'outer;
                }
            }
            i += 1;
        }
        found
    }

    /// Occurrence-weighted mean of matched keyword weights.
    pub fn score(&self, text: &str, skills: &BTreeSet<String>) -> f64 {
        let mut sum = 0.0;
        let mut n = 0u32;
        for word in text.split_whitespace().map(str::to_lowercase) {
            let matching: Vec<&SentimentEntry> =
                self.keywords.iter().filter(|e| e.keyword == word).collect();
            let scoped = matching
                .iter()
                .filter(|e| e.skill.as_ref().is_some_and(|s| skills.contains(s)))
                .map(|e| e.weight)
                .fold(None, |acc: Option<f64>, w| {
                    Some(acc.map_or(w, |a| a.max(w)))
                });
            let free = matching
                .iter()
                .find(|e| e.skill.is_none())
                .map(|e| e.weight);
            if let Some(w) = scoped.or(free) {
                sum += w;
                n += 1;
            }
        }
        if n == 0 {
            0.0
        } else {
            sum / f64::from(n)
        }
    }

    fn observe(&mut self, kind: EdgeKind, from: &str, to: &str, weight: f64, months: u64) {
        let e = self
            .edges
            .entry((kind, from.to_string(), to.to_string()))
            .or_insert((0.0, 0, 0));
        e.0 += weight;
        e.1 += 1;
        e.2 += months;
    }

    pub fn add(&mut self, r: &ResumeRecord) {
        let js = &r.jobseeker_id;
        self.nodes.insert((NodeKind::JobSeeker, js.clone()));
        for s in &r.declared_skills {
            self.nodes.insert((NodeKind::Skill, s.clone()));
            self.edges
                .entry((EdgeKind::JobseekerSkill, js.clone(), s.clone()))
                .or_insert((0.0, 0, 0));
        }
        for (i, e) in r.experiences.iter().enumerate() {
            let project = format!("{js}#{}", i + 1);
            let skills = self.mentioned(&e.details);
            let score = self.score(&e.details, &skills);
            self.project_scores.insert(project.clone(), score);
            self.nodes
                .insert((NodeKind::Organization, e.organization.clone()));
            self.nodes.insert((NodeKind::Project, project.clone()));
            self.observe(EdgeKind::JobseekerProject, js, &project, 0.0, 0);
            self.observe(EdgeKind::ProjectOrg, &project, &e.organization, 0.0, 0);
            for s in &skills {
                self.nodes.insert((NodeKind::Skill, s.clone()));
                self.observe(EdgeKind::SkillProject, s, &project, score, 0);
                self.observe(
                    EdgeKind::JobseekerSkill,
                    js,
                    s,
                    score,
                    u64::from(e.duration_months),
                );
                self.observe(EdgeKind::OrgSkill, &e.organization, s, score, 0);
            }
        }
    }

    fn mean(&self, kind: EdgeKind, from: &str, to: &str) -> f64 {
        match self.edges.get(&(kind, from.to_string(), to.to_string())) {
            Some(&(sum, n, _)) if n > 0 => sum / n as f64,
            _ => 0.0,
        }
    }

    pub fn months(&self, js: &str, skill: &str) -> Option<u64> {
        self.edges
            .get(&(EdgeKind::JobseekerSkill, js.to_string(), skill.to_string()))
            .map(|e| e.2)
    }

    pub fn strength(&self, js: &str, skill: &str) -> f64 {
        let months = self.months(js, skill).unwrap_or(0);
        self.mean(EdgeKind::JobseekerSkill, js, skill)
            + self.lambda * months.min(self.cap) as f64 / self.cap as f64
    }

    pub fn org_strength(&self, org: &str, skill: &str) -> f64 {
        self.mean(EdgeKind::OrgSkill, org, skill)
    }

    pub fn of_kind(&self, kind: NodeKind) -> Vec<String> {
        self.nodes
            .iter()
            .filter(|(k, _)| *k == kind)
            .map(|(_, key)| key.clone())
            .collect()
    }

    /// Filters on (min, max) years per skill, ranks by summed strength then id.
    pub fn rank(
        &self,
        terms: &[(String, Option<f64>, Option<f64>)],
        top_k: usize,
    ) -> Vec<(String, f64)> {
        let mut out = Vec::new();
        for js in self.of_kind(NodeKind::JobSeeker) {
            let mut total = 0.0;
            let mut ok = true;
            for (skill, min, max) in terms {
                let Some(months) = self.months(&js, skill) else {
                    ok = false;
                    break;
                };
                let years = months as f64 / 12.0;
                if min.is_some_and(|m| years < m) || max.is_some_and(|m| years > m) {
                    ok = false;
                    break;
                }
                total += self.strength(&js, skill);
            }
            if ok {
                out.push((js, total));
            }
        }
        out.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
        out.truncate(top_k);
        out
    }
}

pub fn reference_for(
    records: &[ResumeRecord],
    lexicon: &SkillLexicon,
    gazetteer: &SentimentGazetteer,
    lambda: f64,
    cap: u64,
) -> Reference {
    let skills: Vec<SkillEntry> = lexicon.entries().cloned().collect();
    let mut r = Reference::new(&skills, gazetteer.entries(), lambda, cap);
    for rec in records {
        r.add(rec);
    }
    r
}
