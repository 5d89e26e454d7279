//! Graph file format (JSON) plus DOT and CSV exports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{
    Accumulator, EdgeKey, EdgeKind, GraphError, KnowledgeGraph, NodeAttrs, NodeId, NodeKind,
    ScoringConfig,
};

pub const GRAPH_FORMAT: &str = "talentgraph-graph";
pub const GRAPH_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileConfig {
    #[serde(flatten)]
    pub scoring: ScoringConfig,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileNode {
    pub kind: NodeKind,
    pub key: String,
    #[serde(flatten)]
    pub attrs: NodeAttrs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileEdge {
    pub kind: EdgeKind,
    pub from: String,
    pub to: String,
    pub weight_sum: f64,
    pub support_count: u64,
    pub months_sum: u64,
}

/// On-disk layout of a [`KnowledgeGraph`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub format: String,
    pub version: u32,
    pub config: FileConfig,
    pub nodes: Vec<FileNode>,
    pub edges: Vec<FileEdge>,
}

fn format_err(path: impl Into<String>, message: impl Into<String>) -> GraphError {
    GraphError::Format {
        path: path.into(),
        message: message.into(),
    }
}

impl KnowledgeGraph {
    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            format: GRAPH_FORMAT.to_string(),
            version: GRAPH_FORMAT_VERSION,
            config: FileConfig {
                scoring: self.config,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            },
            nodes: self
                .nodes
                .iter()
                .map(|(id, attrs)| FileNode {
                    kind: id.kind,
                    key: id.key.clone(),
                    attrs: attrs.clone(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(k, a)| FileEdge {
                    kind: k.kind,
                    from: k.from.clone(),
                    to: k.to.clone(),
                    weight_sum: a.weight_sum,
                    support_count: a.support_count,
                    months_sum: a.months_sum,
                })
                .collect(),
        }
    }

    pub fn from_file(file: GraphFile) -> Result<Self, GraphError> {
        if file.format != GRAPH_FORMAT {
            return Err(format_err(
                "format",
                format!("expected `{GRAPH_FORMAT}`, got `{}`", file.format),
            ));
        }
        if file.version != GRAPH_FORMAT_VERSION {
            return Err(format_err(
                "version",
                format!("unsupported version {}", file.version),
            ));
        }
        file.config
            .scoring
            .validate()
            .map_err(|e| format_err("config", e.to_string()))?;

        let mut nodes = BTreeMap::new();
        for (i, n) in file.nodes.into_iter().enumerate() {
            let id = NodeId::new(n.kind, n.key);
            if nodes.insert(id.clone(), n.attrs).is_some() {
                return Err(format_err(
                    format!("nodes[{i}]"),
                    format!("duplicate node {id}"),
                ));
            }
        }
        let mut edges = BTreeMap::new();
        for (i, e) in file.edges.into_iter().enumerate() {
            let path = format!("edges[{i}]");
            let key = EdgeKey::new(e.kind, e.from, e.to);
            for end in [key.from_node(), key.to_node()] {
                if !nodes.contains_key(&end) {
                    return Err(format_err(path, format!("dangling endpoint {end}")));
                }
            }
            if !e.weight_sum.is_finite() || e.weight_sum < 0.0 {
                return Err(format_err(path, "weight_sum must be finite and >= 0"));
            }
            if e.support_count == 0 && e.weight_sum != 0.0 {
                return Err(format_err(
                    path,
                    "weight_sum must be 0 when support_count is 0",
                ));
            }
            let acc = Accumulator {
                weight_sum: e.weight_sum,
                support_count: e.support_count,
                months_sum: e.months_sum,
            };
            if edges.insert(key.clone(), acc).is_some() {
                return Err(format_err(
                    path,
                    format!("duplicate {:?} edge {} -> {}", key.kind, key.from, key.to),
                ));
            }
        }
        Ok(Self {
            config: file.config.scoring,
            nodes,
            edges,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(source: &str) -> Result<Self, GraphError> {
        let file: GraphFile = serde_json::from_str(source)
            .map_err(|e| format_err(format!("line {}", e.line()), e.to_string()))?;
        Self::from_file(file)
    }

    /// Graphviz rendering; edge labels show the mean weight and support count.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph talentgraph {\n  rankdir=LR;\n");
        let shape = |k: NodeKind| match k {
            NodeKind::JobSeeker => "box",
            NodeKind::Skill => "ellipse",
            NodeKind::Organization => "house",
            NodeKind::Project => "note",
        };
        let id = |n: &NodeId| format!("{:?}:{}", n.kind, n.key).replace('"', "\\\"");
        for (n, attrs) in &self.nodes {
            let label = if attrs.label.is_empty() {
                &n.key
            } else {
                &attrs.label
            };
            let _ = writeln!(
                out,
                "  \"{}\" [shape={}, label=\"{}\"];",
                id(n),
                shape(n.kind),
                label.replace('"', "\\\"")
            );
        }
        for (k, a) in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{:?} {:.3} (n={})\"];",
                id(&k.from_node()),
                id(&k.to_node()),
                k.kind,
                a.mean(),
                a.support_count
            );
        }
        out.push_str("}\n");
        out
    }

    /// One row per edge: `kind,from,to,weight_sum,support_count,months_sum,mean`.
    pub fn to_edges_csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("kind,from,to,weight_sum,support_count,months_sum,mean\n");
        for (k, a) in &self.edges {
            let kind = serde_json::to_value(k.kind).expect("edge kind serializes");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                kind.as_str().unwrap_or_default(),
                quote(&k.from),
                quote(&k.to),
                a.weight_sum,
                a.support_count,
                a.months_sum,
                a.mean()
            );
        }
        out
    }

    /// Distinct edge kinds present, for quick structural summaries.
    pub fn edge_kinds(&self) -> BTreeSet<EdgeKind> {
        self.edges.keys().map(|k| k.kind).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> KnowledgeGraph {
        let mut g = KnowledgeGraph::default();
        g.nodes.insert(
            NodeId::jobseeker("js1"),
            NodeAttrs {
                label: "Jane".into(),
                ..Default::default()
            },
        );
        g.nodes.insert(
            NodeId::skill("c++"),
            NodeAttrs {
                label: "c++".into(),
                category: Some("programming languages".into()),
                ..Default::default()
            },
        );
        g.edges.insert(
            EdgeKey::new(EdgeKind::JobseekerSkill, "js1", "c++"),
            Accumulator {
                weight_sum: 0.1 + 0.2,
                support_count: 2,
                months_sum: 30,
            },
        );
        g
    }

    #[test]
    fn json_round_trip_is_exact() {
        let g = tiny();
        let back = KnowledgeGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(
            back.edge(EdgeKind::JobseekerSkill, "js1", "c++")
                .unwrap()
                .weight_sum,
            0.1 + 0.2
        );
    }

    #[test]
    fn rejects_dangling_and_duplicate_edges() {
        let mut file = tiny().to_file();
        file.edges[0].to = "java".into();
        let err = KnowledgeGraph::from_file(file).unwrap_err();
        assert!(
            matches!(err, GraphError::Format { ref path, .. } if path == "edges[0]"),
            "{err}"
        );

        let mut file = tiny().to_file();
        file.edges.push(file.edges[0].clone());
        assert!(KnowledgeGraph::from_file(file).is_err());

        let mut file = tiny().to_file();
        file.version = 99;
        assert!(KnowledgeGraph::from_file(file).is_err());

        let mut file = tiny().to_file();
        file.edges[0].support_count = 0;
        assert!(KnowledgeGraph::from_file(file).is_err());
    }

    #[test]
    fn config_is_recorded() {
        let json = tiny().to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["config"]["duration_bonus_factor"], 0.5);
        assert_eq!(v["config"]["duration_cap_months"], 120);
        assert_eq!(v["config"]["tool_version"], env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn csv_and_dot_exports() {
        let g = tiny();
        let csv = g.to_edges_csv();
        assert_eq!(
            csv.lines().nth(1).unwrap(),
            "JOBSEEKER_SKILL,js1,c++,0.30000000000000004,2,30,0.15000000000000002"
        );
        assert!(g.to_dot().contains("\"JobSeeker:js1\" -> \"Skill:c++\""));
    }
}
