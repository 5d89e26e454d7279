mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use talentgraph::graph::{build_graph, EdgeKind, KnowledgeGraph, NodeKind, ScoringConfig};
use talentgraph::parser::ResumeRecord;

const TOL: f64 = 1e-9;

fn assert_matches_reference(graph: &KnowledgeGraph, reference: &Reference) {
    let nodes: Vec<(NodeKind, String)> = graph
        .nodes()
        .keys()
        .map(|id| (id.kind, id.key.clone()))
        .collect();
    let expected: Vec<(NodeKind, String)> = reference.nodes.iter().cloned().collect();
    assert_eq!(nodes, expected);

    assert_eq!(graph.edges().len(), reference.edges.len());
    for (key, acc) in graph.edges() {
        let &(sum, count, months) = reference
            .edges
            .get(&(key.kind, key.from.clone(), key.to.clone()))
            .unwrap_or_else(|| panic!("unexpected edge {key:?}"));
        assert!(
            (acc.weight_sum - sum).abs() <= TOL,
            "{key:?}: {} vs {sum}",
            acc.weight_sum
        );
        assert_eq!(
            (acc.support_count, acc.months_sum),
            (count, months),
            "{key:?}"
        );
    }
    for js in reference.of_kind(NodeKind::JobSeeker) {
        for skill in reference.of_kind(NodeKind::Skill) {
            let got = graph.jobseeker_skill_strength(&js, &skill).unwrap();
            let want = reference.strength(&js, &skill);
            assert!((got - want).abs() <= TOL, "{js}/{skill}: {got} vs {want}");
        }
    }
    for org in reference.of_kind(NodeKind::Organization) {
        for skill in reference.of_kind(NodeKind::Skill) {
            let got = graph.org_skill_strength(&org, &skill).unwrap();
            assert!((got - reference.org_strength(&org, &skill)).abs() <= TOL);
        }
    }
    for (project, score) in &reference.project_scores {
        let node = graph
            .node(&talentgraph::graph::NodeId::project(project.clone()))
            .unwrap();
        assert!((node.score.unwrap() - score).abs() <= TOL);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_corpora_match_reference(seed in any::<u64>(), n in 0usize..=10, lambda in 0.0f64..2.0, cap in 1u32..200) {
        let lex = fixture_lexicon();
        let gaz = fixture_gazetteer();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let records = random_corpus(&mut rng, n, &lex, &gaz);
        let config = ScoringConfig { duration_bonus_factor: lambda, duration_cap_months: cap };
        let graph = build_graph(&records, &lex, &gaz, config).unwrap();
        let reference = reference_for(&records, &lex, &gaz, lambda, u64::from(cap));
        assert_matches_reference(&graph, &reference);
    }
}

#[test]
fn fixture_corpus_matches_reference() {
    let lex = fixture_lexicon();
    let gaz = fixture_gazetteer();
    let records = fixture_records(&lex);
    // The reference model splits on whitespace only; strip the punctuation the
    // parser leaves in details so both see the same words.
    let cleaned: Vec<ResumeRecord> = records
        .iter()
        .cloned()
        .map(|mut r| {
            for e in &mut r.experiences {
                e.details = e
                    .details
                    .split_whitespace()
                    .map(|w| w.trim_end_matches(['.', ',']))
                    .collect::<Vec<_>>()
                    .join(" ");
            }
            r
        })
        .collect();
    let graph = build_graph(&cleaned, &lex, &gaz, ScoringConfig::default()).unwrap();
    assert_matches_reference(&graph, &reference_for(&cleaned, &lex, &gaz, 0.5, 120));
    let original = build_graph(&records, &lex, &gaz, ScoringConfig::default()).unwrap();
    assert_eq!(original, graph);
}

fn strengths(graph: &KnowledgeGraph) -> Vec<f64> {
    let skills: Vec<&str> = graph
        .nodes_of(NodeKind::Skill)
        .map(|(id, _)| id.key.as_str())
        .collect();
    let mut out = Vec::new();
    for js in graph.jobseeker_ids() {
        for s in &skills {
            out.push(graph.jobseeker_skill_strength(js, s).unwrap());
        }
    }
    for (id, _) in graph.nodes_of(NodeKind::Organization) {
        for s in &skills {
            out.push(graph.org_skill_strength(&id.key, s).unwrap());
        }
    }
    out
}

#[test]
fn every_ingestion_order_of_the_fixture_agrees() {
    let lex = fixture_lexicon();
    let gaz = fixture_gazetteer();
    let records = fixture_records(&lex);
    assert_eq!(records.len(), 6);
    let base = build_graph(&records, &lex, &gaz, ScoringConfig::default()).unwrap();
    let base_strengths = strengths(&base);
    let mut count = 0;
    permute(
        &mut (0..records.len()).collect::<Vec<_>>(),
        0,
        &mut |order| {
            let shuffled: Vec<ResumeRecord> = order.iter().map(|&i| records[i].clone()).collect();
            let g = build_graph(&shuffled, &lex, &gaz, ScoringConfig::default()).unwrap();
            assert_eq!(g.nodes(), base.nodes());
            for (a, b) in strengths(&g).iter().zip(&base_strengths) {
                assert!((a - b).abs() <= TOL);
            }
            count += 1;
        },
    );
    assert_eq!(count, 720);
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[test]
fn sampled_orders_of_a_larger_corpus_agree() {
    let lex = fixture_lexicon();
    let gaz = fixture_gazetteer();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut records = random_corpus(&mut rng, 25, &lex, &gaz);
    let base = strengths(&build_graph(&records, &lex, &gaz, ScoringConfig::default()).unwrap());
    for _ in 0..50 {
        records.shuffle(&mut rng);
        let s = strengths(&build_graph(&records, &lex, &gaz, ScoringConfig::default()).unwrap());
        for (a, b) in s.iter().zip(&base) {
            assert!((a - b).abs() <= TOL);
        }
    }
}

#[test]
fn edge_kinds_connect_the_declared_node_kinds() {
    let lex = fixture_lexicon();
    let gaz = fixture_gazetteer();
    let g = build_graph(&fixture_records(&lex), &lex, &gaz, ScoringConfig::default()).unwrap();
    for key in g.edges().keys() {
        let (from, to) = key.kind.endpoints();
        assert!(g.contains(&key.from_node()) && g.contains(&key.to_node()));
        assert_eq!((key.from_node().kind, key.to_node().kind), (from, to));
    }
    assert_eq!(g.edge_kinds().len(), EdgeKind::ALL.len());
}
