//! Sentiment-weighted knowledge graph of jobseekers, skills, organizations and projects.
//!
//! Edge weights are stored as `(sum, count)` accumulators, so every derived
//! mean is independent of ingestion order and two graphs merge by addition.

mod persist;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::{SentimentGazetteer, SkillLexicon};
use crate::parser::{extract_skills, ResumeRecord};
use crate::scoring::{score_for_skills, KeywordHit};

pub use persist::{GraphFile, GRAPH_FORMAT, GRAPH_FORMAT_VERSION};

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("jobseeker `{0}` already ingested")]
    DuplicateJobseeker(String),
    #[error("node not found: {0}")]
    NotFound(NodeId),
    #[error("invalid scoring config: {0}")]
    Config(String),
    #[error("scoring configs differ: {0:?} vs {1:?}")]
    ConfigMismatch(ScoringConfig, ScoringConfig),
    #[error("graph file {path}: {message}")]
    Format { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    JobSeeker,
    Skill,
    Organization,
    Project,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId {
    pub kind: NodeKind,
    pub key: String,
}

impl NodeId {
    pub fn new(kind: NodeKind, key: impl Into<String>) -> Self {
        Self {
            kind,
            key: key.into(),
        }
    }

    pub fn jobseeker(key: impl Into<String>) -> Self {
        Self::new(NodeKind::JobSeeker, key)
    }

    pub fn skill(key: impl Into<String>) -> Self {
        Self::new(NodeKind::Skill, key)
    }

    pub fn org(key: impl Into<String>) -> Self {
        Self::new(NodeKind::Organization, key)
    }

    pub fn project(key: impl Into<String>) -> Self {
        Self::new(NodeKind::Project, key)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.key)
    }
}

/// Projects are never unified across resumes: the key is the jobseeker id plus a 1-based ordinal.
pub fn project_key(jobseeker_id: &str, ordinal: usize) -> String {
    format!("{jobseeker_id}#{ordinal}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EdgeKind {
    SkillProject,
    JobseekerSkill,
    OrgSkill,
    JobseekerProject,
    ProjectOrg,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 5] = [
        EdgeKind::SkillProject,
        EdgeKind::JobseekerSkill,
        EdgeKind::OrgSkill,
        EdgeKind::JobseekerProject,
        EdgeKind::ProjectOrg,
    ];

    /// `(from, to)` node kinds.
    pub fn endpoints(self) -> (NodeKind, NodeKind) {
        use NodeKind::*;
        match self {
            EdgeKind::SkillProject => (Skill, Project),
            EdgeKind::JobseekerSkill => (JobSeeker, Skill),
            EdgeKind::OrgSkill => (Organization, Skill),
            EdgeKind::JobseekerProject => (JobSeeker, Project),
            EdgeKind::ProjectOrg => (Project, Organization),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Accumulator {
    pub weight_sum: f64,
    pub support_count: u64,
    /// Only non-zero on `JOBSEEKER_SKILL` edges.
    pub months_sum: u64,
}

impl Accumulator {
    pub fn mean(&self) -> f64 {
        if self.support_count == 0 {
            0.0
        } else {
            self.weight_sum / self.support_count as f64
        }
    }

    fn observe(&mut self, weight: f64, months: u32) {
        self.weight_sum += weight;
        self.support_count += 1;
        self.months_sum += u64::from(months);
    }

    fn absorb(&mut self, other: &Accumulator) {
        self.weight_sum += other.weight_sum;
        self.support_count += other.support_count;
        self.months_sum += other.months_sum;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    pub kind: EdgeKind,
    pub from: String,
    pub to: String,
}

impl EdgeKey {
    pub fn new(kind: EdgeKind, from: impl Into<String>, to: impl Into<String>) -> Self {
        Self {
            kind,
            from: from.into(),
            to: to.into(),
        }
    }

    pub fn from_node(&self) -> NodeId {
        NodeId::new(self.kind.endpoints().0, self.from.clone())
    }

    pub fn to_node(&self) -> NodeId {
        NodeId::new(self.kind.endpoints().1, self.to.clone())
    }
}

/// Display attributes; which fields are set depends on the node kind.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct NodeAttrs {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_months: Option<u32>,
    /// Sentiment score of the project description.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
    /// Gazetteer keywords behind `score`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub keywords: BTreeMap<String, KeywordHit>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoringConfig {
    /// Weight of the duration bonus added to jobseeker-skill strength.
    pub duration_bonus_factor: f64,
    /// Months at which the duration bonus saturates.
    pub duration_cap_months: u32,
}

impl Default for ScoringConfig {
    fn default() -> Self {
        Self {
            duration_bonus_factor: 0.5,
            duration_cap_months: 120,
        }
    }
}

impl ScoringConfig {
    pub fn validate(&self) -> Result<(), GraphError> {
        if !self.duration_bonus_factor.is_finite() || self.duration_bonus_factor < 0.0 {
            return Err(GraphError::Config(format!(
                "duration_bonus_factor must be finite and >= 0, got {}",
                self.duration_bonus_factor
            )));
        }
        if self.duration_cap_months == 0 {
            return Err(GraphError::Config(
                "duration_cap_months must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn duration_bonus(&self, months: u64) -> f64 {
        let cap = u64::from(self.duration_cap_months);
        self.duration_bonus_factor * months.min(cap) as f64 / cap as f64
    }
}

/// Decomposition of a jobseeker-skill strength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkillStrength {
    pub sentiment_mean: f64,
    pub duration_bonus: f64,
    pub support_count: u64,
    pub months_sum: u64,
    /// Whether a `JOBSEEKER_SKILL` edge exists at all.
    pub linked: bool,
}

impl SkillStrength {
    pub fn total(&self) -> f64 {
        self.sentiment_mean + self.duration_bonus
    }

    pub fn years(&self) -> f64 {
        self.months_sum as f64 / 12.0
    }
}

#[derive(Default, Debug, Clone, PartialEq)]
pub struct KnowledgeGraph {
    config: ScoringConfig,
    nodes: BTreeMap<NodeId, NodeAttrs>,
    edges: BTreeMap<EdgeKey, Accumulator>,
}

impl KnowledgeGraph {
    pub fn new(config: ScoringConfig) -> Result<Self, GraphError> {
        config.validate()?;
        Ok(Self {
            config,
            ..Self::default()
        })
    }

    pub fn config(&self) -> &ScoringConfig {
        &self.config
    }

    pub fn nodes(&self) -> &BTreeMap<NodeId, NodeAttrs> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeMap<EdgeKey, Accumulator> {
        &self.edges
    }

    pub fn node(&self, id: &NodeId) -> Option<&NodeAttrs> {
        self.nodes.get(id)
    }

    pub fn contains(&self, id: &NodeId) -> bool {
        self.nodes.contains_key(id)
    }

    pub fn edge(&self, kind: EdgeKind, from: &str, to: &str) -> Option<&Accumulator> {
        self.edges.get(&EdgeKey::new(kind, from, to))
    }

    pub fn nodes_of(&self, kind: NodeKind) -> impl Iterator<Item = (&NodeId, &NodeAttrs)> {
        self.nodes.iter().filter(move |(id, _)| id.kind == kind)
    }

    pub fn edges_of(&self, kind: EdgeKind) -> impl Iterator<Item = (&EdgeKey, &Accumulator)> {
        self.edges.iter().filter(move |(k, _)| k.kind == kind)
    }

    /// Edges of `kind` leaving the node keyed `from`.
    pub fn edges_from(
        &self,
        kind: EdgeKind,
        from: &str,
    ) -> impl Iterator<Item = (&EdgeKey, &Accumulator)> {
        let start = EdgeKey::new(kind, from, "");
        let from = from.to_string();
        self.edges
            .range(start..)
            .take_while(move |(k, _)| k.kind == kind && k.from == from)
    }

    pub fn jobseeker_ids(&self) -> impl Iterator<Item = &str> {
        self.nodes_of(NodeKind::JobSeeker)
            .map(|(id, _)| id.key.as_str())
    }

    fn ensure_node(&mut self, id: NodeId, attrs: impl FnOnce() -> NodeAttrs) {
        self.nodes.entry(id).or_insert_with(attrs);
    }

    fn ensure_skill(&mut self, skill: &str, lexicon: &SkillLexicon) {
        self.ensure_node(NodeId::skill(skill), || NodeAttrs {
            label: skill.to_string(),
            category: lexicon.category(skill).map(str::to_string),
            ..NodeAttrs::default()
        });
    }

    fn edge_mut(&mut self, kind: EdgeKind, from: &str, to: &str) -> &mut Accumulator {
        self.edges.entry(EdgeKey::new(kind, from, to)).or_default()
    }

    /// Ingests one parsed resume.
    ///
    /// 1. jobseeker node, plus skill nodes and (empty) jobseeker-skill edges for declared skills;
    /// 2. per experience, organization and project nodes linked to the jobseeker;
    /// 3. the description score goes on the skill-project edge of every skill it mentions;
    /// 4. the same score and the project duration accumulate on the jobseeker-skill edge;
    /// 5. the same score accumulates on the organization-skill edge;
    /// 6. accumulated months feed the duration bonus when strengths are read.
    pub fn add_resume(
        &mut self,
        record: &ResumeRecord,
        lexicon: &SkillLexicon,
        gazetteer: &SentimentGazetteer,
    ) -> Result<(), GraphError> {
        let js = record.jobseeker_id.as_str();
        let js_node = NodeId::jobseeker(js);
        if self.nodes.contains_key(&js_node) {
            return Err(GraphError::DuplicateJobseeker(js.to_string()));
        }
        self.nodes.insert(
            js_node,
            NodeAttrs {
                label: record.name.clone(),
                ..NodeAttrs::default()
            },
        );
        for skill in &record.declared_skills {
            self.ensure_skill(skill, lexicon);
            self.edge_mut(EdgeKind::JobseekerSkill, js, skill);
        }

        for (i, exp) in record.experiences.iter().enumerate() {
            let org = exp.organization.as_str();
            let project = project_key(js, i + 1);
            let mentioned = extract_skills(&exp.details, lexicon);
            let scored = score_for_skills(&exp.details, &mentioned, gazetteer);
            let score = scored.weight;

            self.ensure_node(NodeId::org(org), || NodeAttrs {
                label: org.to_string(),
                ..NodeAttrs::default()
            });
            self.nodes.insert(
                NodeId::project(project.clone()),
                NodeAttrs {
                    label: exp.project_title.clone(),
                    duration: Some(exp.duration_raw.clone()),
                    duration_months: Some(exp.duration_months),
                    score: Some(score),
                    keywords: scored.hits,
                    ..NodeAttrs::default()
                },
            );
            self.edge_mut(EdgeKind::JobseekerProject, js, &project)
                .observe(0.0, 0);
            self.edge_mut(EdgeKind::ProjectOrg, &project, org)
                .observe(0.0, 0);

            for skill in &mentioned {
                self.ensure_skill(skill, lexicon);
                self.edge_mut(EdgeKind::SkillProject, skill, &project)
                    .observe(score, 0);
                self.edge_mut(EdgeKind::JobseekerSkill, js, skill)
                    .observe(score, exp.duration_months);
                self.edge_mut(EdgeKind::OrgSkill, org, skill)
                    .observe(score, 0);
            }
        }
        Ok(())
    }

    fn require(&self, id: NodeId) -> Result<(), GraphError> {
        if self.nodes.contains_key(&id) {
            Ok(())
        } else {
            Err(GraphError::NotFound(id))
        }
    }

    pub fn skill_strength(
        &self,
        jobseeker: &str,
        skill: &str,
    ) -> Result<SkillStrength, GraphError> {
        self.require(NodeId::jobseeker(jobseeker))?;
        self.require(NodeId::skill(skill))?;
        let acc = self.edge(EdgeKind::JobseekerSkill, jobseeker, skill);
        let a = acc.copied().unwrap_or_default();
        Ok(SkillStrength {
            sentiment_mean: a.mean(),
            duration_bonus: self.config.duration_bonus(a.months_sum),
            support_count: a.support_count,
            months_sum: a.months_sum,
            linked: acc.is_some(),
        })
    }

    /// Mean skill-project score plus the capped duration bonus.
    pub fn jobseeker_skill_strength(
        &self,
        jobseeker: &str,
        skill: &str,
    ) -> Result<f64, GraphError> {
        self.skill_strength(jobseeker, skill).map(|s| s.total())
    }

    /// Mean of all skill-project scores accumulated at `org` for `skill`.
    pub fn org_skill_strength(&self, org: &str, skill: &str) -> Result<f64, GraphError> {
        self.require(NodeId::org(org))?;
        self.require(NodeId::skill(skill))?;
        Ok(self
            .edge(EdgeKind::OrgSkill, org, skill)
            .map_or(0.0, Accumulator::mean))
    }

    pub fn skill_years(&self, jobseeker: &str, skill: &str) -> Result<f64, GraphError> {
        self.skill_strength(jobseeker, skill).map(|s| s.years())
    }

    /// Projects of `jobseeker` linked to `skill`, with their scores.
    pub fn supporting_projects(&self, jobseeker: &str, skill: &str) -> Vec<(String, f64)> {
        self.edges_from(EdgeKind::JobseekerProject, jobseeker)
            .filter_map(|(k, _)| {
                self.edge(EdgeKind::SkillProject, skill, &k.to)
                    .map(|a| (k.to.clone(), a.mean()))
            })
            .collect()
    }

    /// Organization of a project, via its `PROJECT_ORG` edge.
    pub fn project_org(&self, project: &str) -> Option<&str> {
        self.edges_from(EdgeKind::ProjectOrg, project)
            .next()
            .map(|(k, _)| k.to.as_str())
    }

    /// Adds `other` into `self`. Both must share a config and have disjoint jobseekers.
    pub fn merge_from(&mut self, other: &KnowledgeGraph) -> Result<(), GraphError> {
        if self.config != other.config {
            return Err(GraphError::ConfigMismatch(self.config, other.config));
        }
        if let Some(dup) = other
            .jobseeker_ids()
            .find(|id| self.contains(&NodeId::jobseeker(*id)))
        {
            return Err(GraphError::DuplicateJobseeker(dup.to_string()));
        }
        for (id, attrs) in &other.nodes {
            self.nodes
                .entry(id.clone())
                .or_insert_with(|| attrs.clone());
        }
        for (key, acc) in &other.edges {
            self.edges.entry(key.clone()).or_default().absorb(acc);
        }
        Ok(())
    }

    /// Distinct skills per jobseeker (jobseeker-skill edges).
    pub fn skills_by_jobseeker(&self) -> BTreeMap<&str, BTreeSet<&str>> {
        let mut out: BTreeMap<&str, BTreeSet<&str>> = self
            .jobseeker_ids()
            .map(|id| (id, BTreeSet::new()))
            .collect();
        for (k, _) in self.edges_of(EdgeKind::JobseekerSkill) {
            out.entry(k.from.as_str())
                .or_default()
                .insert(k.to.as_str());
        }
        out
    }
}

/// Builds a graph from `records` in order.
pub fn build_graph(
    records: &[ResumeRecord],
    lexicon: &SkillLexicon,
    gazetteer: &SentimentGazetteer,
    config: ScoringConfig,
) -> Result<KnowledgeGraph, GraphError> {
    let mut graph = KnowledgeGraph::new(config)?;
    for r in records {
        graph.add_resume(r, lexicon, gazetteer)?;
    }
    Ok(graph)
}

pub fn merge(a: &KnowledgeGraph, b: &KnowledgeGraph) -> Result<KnowledgeGraph, GraphError> {
    let mut out = a.clone();
    out.merge_from(b)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{load_sentiment_gazetteer, load_skill_lexicon};
    use crate::parser::ExperienceEntry;

    fn lex() -> SkillLexicon {
        load_skill_lexicon(
            r#"{"canonical":"c++","category":"programming languages","aliases":["cpp"]}
{"canonical":"java","category":"programming languages"}
{"canonical":"python","category":"scripting languages"}"#,
        )
        .unwrap()
    }

    fn gaz() -> SentimentGazetteer {
        load_sentiment_gazetteer(
            r#"{"keyword":"scalability","class":"t","weight":0.9}
{"keyword":"robust","class":"t","weight":0.5}
{"keyword":"lead","class":"m","weight":0.7}
{"keyword":"debugging","class":"t","weight":0.3}"#,
        )
        .unwrap()
    }

    fn exp(org: &str, months: u32, details: &str) -> ExperienceEntry {
        ExperienceEntry {
            organization: org.into(),
            project_title: format!("{org} project"),
            duration_raw: format!("{months} months"),
            duration_months: months,
            details: details.into(),
        }
    }

    fn record(id: &str, skills: &[&str], experiences: Vec<ExperienceEntry>) -> ResumeRecord {
        ResumeRecord {
            jobseeker_id: id.into(),
            name: id.to_uppercase(),
            declared_skills: skills.iter().map(|s| s.to_string()).collect(),
            experiences,
        }
    }

    fn build(records: &[ResumeRecord]) -> KnowledgeGraph {
        let mut g = KnowledgeGraph::default();
        for r in records {
            g.add_resume(r, &lex(), &gaz()).unwrap();
        }
        g
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn single_jobseeker_single_project() {
        let g = build(&[record(
            "js1",
            &["c++"],
            vec![exp("acme", 12, "robust c++ code")],
        )]);
        assert_eq!(g.nodes().len(), 4);
        let kinds: BTreeSet<EdgeKind> = g.edges().keys().map(|k| k.kind).collect();
        assert_eq!(
            kinds,
            [
                EdgeKind::SkillProject,
                EdgeKind::JobseekerSkill,
                EdgeKind::OrgSkill,
                EdgeKind::JobseekerProject,
                EdgeKind::ProjectOrg
            ]
            .into()
        );
        assert_eq!(
            g.node(&NodeId::skill("c++")).unwrap().category.as_deref(),
            Some("programming languages")
        );
    }

    #[test]
    fn shared_skill_node() {
        let g = build(&[
            record("js1", &["c++"], vec![exp("acme", 12, "cpp")]),
            record("js2", &["c++"], vec![exp("globex", 6, "c++")]),
        ]);
        assert_eq!(g.nodes_of(NodeKind::Skill).count(), 1);
        assert_eq!(g.edges_of(EdgeKind::JobseekerSkill).count(), 2);
    }

    #[test]
    fn project_without_skill_mentions() {
        let g = build(&[record(
            "js1",
            &["java"],
            vec![exp("acme", 12, "robust work")],
        )]);
        assert_eq!(g.edges_of(EdgeKind::SkillProject).count(), 0);
        let acc = g.edge(EdgeKind::JobseekerSkill, "js1", "java").unwrap();
        assert_eq!(acc.support_count, 0);
        assert_eq!(acc.weight_sum, 0.0);
        assert_eq!(g.jobseeker_skill_strength("js1", "java").unwrap(), 0.0);
        assert_eq!(g.org_skill_strength("acme", "java").unwrap(), 0.0);
    }

    #[test]
    fn strength_is_mean_plus_bonus() {
        // scores 0.7 (scalability+robust) and 0.5 (robust), no months
        let g = build(&[record(
            "js1",
            &[],
            vec![
                exp("acme", 0, "java scalability robust"),
                exp("acme", 0, "java robust"),
            ],
        )]);
        assert!(close(
            g.jobseeker_skill_strength("js1", "java").unwrap(),
            0.6
        ));

        let g = build(&[record(
            "js1",
            &[],
            vec![exp("a", 120, "python lead debugging scalability lead")],
        )]);
        // (0.7 + 0.3 + 0.9 + 0.7) / 4 = 0.65, bonus 0.5 * 120/120
        assert!(close(
            g.jobseeker_skill_strength("js1", "python").unwrap(),
            1.15
        ));
        assert!(close(g.skill_years("js1", "python").unwrap(), 10.0));
    }

    #[test]
    fn bonus_saturates_at_cap() {
        let cfg = ScoringConfig::default();
        assert_eq!(cfg.duration_bonus(0), 0.0);
        assert!(close(cfg.duration_bonus(60), 0.25));
        assert!(close(cfg.duration_bonus(120), 0.5));
        assert!(close(cfg.duration_bonus(500), 0.5));
    }

    #[test]
    fn org_strength_averages_projects() {
        let g = build(&[
            record("js1", &[], vec![exp("acme", 1, "java scalability")]),
            record("js2", &[], vec![exp("acme", 1, "java debugging")]),
        ]);
        assert!(close(g.org_skill_strength("acme", "java").unwrap(), 0.6));
    }

    #[test]
    fn missing_nodes_are_not_found() {
        let g = build(&[record("js1", &["java"], vec![])]);
        assert!(matches!(
            g.jobseeker_skill_strength("nobody", "java"),
            Err(GraphError::NotFound(_))
        ));
        assert!(matches!(
            g.skill_years("js1", "rust"),
            Err(GraphError::NotFound(_))
        ));
        assert!(matches!(
            g.org_skill_strength("acme", "java"),
            Err(GraphError::NotFound(_))
        ));
    }

    #[test]
    fn duplicate_ingestion_is_rejected_without_side_effects() {
        let r = record("js1", &["java"], vec![exp("acme", 3, "java")]);
        let mut g = build(std::slice::from_ref(&r));
        let before = g.clone();
        assert_eq!(
            g.add_resume(&r, &lex(), &gaz()).unwrap_err(),
            GraphError::DuplicateJobseeker("js1".into())
        );
        assert_eq!(g, before);
    }

    #[test]
    fn merge_identity_and_conflicts() {
        let a = build(&[record(
            "js1",
            &["java"],
            vec![exp("acme", 3, "java robust")],
        )]);
        assert_eq!(merge(&a, &KnowledgeGraph::default()).unwrap(), a);
        assert!(matches!(
            merge(&a, &a),
            Err(GraphError::DuplicateJobseeker(_))
        ));
        let other = KnowledgeGraph::new(ScoringConfig {
            duration_bonus_factor: 1.0,
            duration_cap_months: 60,
        })
        .unwrap();
        assert!(matches!(
            merge(&a, &other),
            Err(GraphError::ConfigMismatch(..))
        ));
    }

    #[test]
    fn invalid_config() {
        for cfg in [
            ScoringConfig {
                duration_bonus_factor: -1.0,
                duration_cap_months: 1,
            },
            ScoringConfig {
                duration_bonus_factor: f64::NAN,
                duration_cap_months: 1,
            },
            ScoringConfig {
                duration_bonus_factor: 0.5,
                duration_cap_months: 0,
            },
        ] {
            assert!(matches!(
                KnowledgeGraph::new(cfg),
                Err(GraphError::Config(_))
            ));
        }
    }
}
