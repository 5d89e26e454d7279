//! Resume parsing into a sentiment-weighted skill knowledge graph, with skill
//! queries and ranking.
//!
//! The pipeline: [`parser::parse_resume`] turns plain text into a
//! [`parser::ResumeRecord`]; [`graph::KnowledgeGraph::add_resume`] folds records
//! into the graph, weighting skill-project edges with [`scoring`] against a
//! [`lexicon::SentimentGazetteer`]; [`query::execute`] filters and ranks
//! jobseekers.

pub mod eval;
pub mod graph;
pub mod intermediate;
pub mod lexicon;
pub mod parser;
pub mod query;
pub mod scoring;
pub mod stats;
pub mod text;

pub use graph::{build_graph, KnowledgeGraph, ScoringConfig};
pub use lexicon::{load_sentiment_gazetteer, load_skill_lexicon, SentimentGazetteer, SkillLexicon};
pub use parser::{parse_resume, ResumeRecord};
pub use query::{execute, explain, parse_query, Query};
