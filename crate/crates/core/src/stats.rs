//! Corpus statistics, computable from parsed records or from a built graph.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeKind, KnowledgeGraph, NodeId, NodeKind};
use crate::lexicon::SkillLexicon;
use crate::parser::{extract_skills, ResumeRecord};

pub const UNCATEGORIZED: &str = "uncategorized";

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub resume_count: usize,
    pub distinct_skills: usize,
    /// Skills per resume: declared skills plus skills mentioned in project details.
    pub avg_skills_per_resume: f64,
    pub avg_projects_per_resume: f64,
    /// Distinct observed skills per category.
    pub skills_per_category: BTreeMap<String, usize>,
}

impl CorpusStats {
    fn from_parts<'a>(
        skill_sets: impl Iterator<Item = BTreeSet<String>>,
        project_counts: impl Iterator<Item = usize>,
        category: impl Fn(&str) -> Option<&'a str>,
    ) -> Self {
        let mut resume_count = 0;
        let mut skill_total = 0;
        let mut all = BTreeSet::new();
        for set in skill_sets {
            resume_count += 1;
            skill_total += set.len();
            all.extend(set);
        }
        let project_total: usize = project_counts.sum();
        let mean = |total: usize| {
            if resume_count == 0 {
                0.0
            } else {
                total as f64 / resume_count as f64
            }
        };
        let mut skills_per_category = BTreeMap::new();
        for s in &all {
            *skills_per_category
                .entry(category(s).unwrap_or(UNCATEGORIZED).to_string())
                .or_insert(0) += 1;
        }
        Self {
            resume_count,
            distinct_skills: all.len(),
            avg_skills_per_resume: mean(skill_total),
            avg_projects_per_resume: mean(project_total),
            skills_per_category,
        }
    }
}

pub fn compute_stats(records: &[ResumeRecord], lexicon: &SkillLexicon) -> CorpusStats {
    let skill_sets = records.iter().map(|r| {
        let mut set = r.declared_skills.clone();
        for e in &r.experiences {
            set.extend(extract_skills(&e.details, lexicon));
        }
        set
    });
    CorpusStats::from_parts(
        skill_sets,
        records.iter().map(|r| r.experiences.len()),
        |s| lexicon.category(s),
    )
}

pub fn graph_stats(graph: &KnowledgeGraph) -> CorpusStats {
    let by_js = graph.skills_by_jobseeker();
    let skill_sets = by_js
        .values()
        .map(|set| set.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>());
    let project_counts = graph.nodes_of(NodeKind::JobSeeker).map(|(id, _)| {
        graph
            .edges_from(EdgeKind::JobseekerProject, &id.key)
            .count()
    });
    CorpusStats::from_parts(skill_sets, project_counts, |s| {
        graph
            .node(&NodeId::skill(s))
            .and_then(|n| n.category.as_deref())
    })
}

impl std::fmt::Display for CorpusStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "resumes                  {}", self.resume_count)?;
        writeln!(f, "distinct skills          {}", self.distinct_skills)?;
        writeln!(
            f,
            "avg skills per resume    {:.2}",
            self.avg_skills_per_resume
        )?;
        writeln!(
            f,
            "avg projects per resume  {:.2}",
            self.avg_projects_per_resume
        )?;
        for (cat, n) in &self.skills_per_category {
            writeln!(f, "  {cat:<24}{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::ExperienceEntry;

    fn rec(id: &str, skills: &[&str], projects: usize) -> ResumeRecord {
        ResumeRecord {
            jobseeker_id: id.into(),
            name: String::new(),
            declared_skills: skills.iter().map(|s| s.to_string()).collect(),
            experiences: (0..projects)
                .map(|_| ExperienceEntry {
                    organization: "o".into(),
                    project_title: String::new(),
                    duration_raw: String::new(),
                    duration_months: 0,
                    details: String::new(),
                })
                .collect(),
        }
    }

    #[test]
    fn averages() {
        let lex = SkillLexicon::default();
        let s = compute_stats(&[rec("a", &[], 1), rec("b", &[], 3)], &lex);
        assert_eq!(s.avg_projects_per_resume, 2.0);
        assert_eq!(s.resume_count, 2);
    }

    #[test]
    fn empty_corpus_is_zero() {
        assert_eq!(
            compute_stats(&[], &SkillLexicon::default()),
            CorpusStats::default()
        );
        assert_eq!(
            graph_stats(&KnowledgeGraph::default()),
            CorpusStats::default()
        );
    }

    #[test]
    fn twelve_skills_each() {
        let names: Vec<String> = (0..24).map(|i| format!("skill{i:02}")).collect();
        let lex = SkillLexicon::from_canonicals(
            names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.as_str(), if i % 2 == 0 { "even" } else { "odd" })),
        );
        let first: Vec<&str> = names[..12].iter().map(String::as_str).collect();
        let second: Vec<&str> = names[12..].iter().map(String::as_str).collect();
        let s = compute_stats(&[rec("a", &first, 2), rec("b", &second, 2)], &lex);
        assert_eq!(s.distinct_skills, 24);
        assert_eq!(s.avg_skills_per_resume, 12.0);
        assert_eq!(s.skills_per_category["even"], 12);
        assert_eq!(s.skills_per_category["odd"], 12);
    }
}
