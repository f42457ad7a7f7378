//! Certification that every MTN graph of an order has a linkless torus
//! embedding among the supplied diagrams.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::torus::{LinkWitness, TorusDiagram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The embedding at this index is linkless.
    Linkless { embedding: usize },
    /// Every matching embedding links; the first one's first link is shown.
    Linked {
        embedding: usize,
        witness: LinkWitness,
    },
    /// No supplied embedding has an isomorphic underlying graph.
    Unmatched,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationEntry {
    pub graph: Graph,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub entries: Vec<CertificationEntry>,
    /// Embeddings whose graph matches none of the MTN graphs.
    pub unused_embeddings: Vec<usize>,
}

impl CertificationReport {
    /// Every MTN graph matched an embedding and that embedding is linkless.
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e.outcome, Outcome::Linkless { .. }))
    }

    /// `names[i]` labels embedding `i` in the output.
    pub fn render(&self, names: &[String]) -> String {
        let name = |i: usize| {
            names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("#{}", i + 1))
        };
        let mut out = String::new();
        for e in &self.entries {
            let g6 = e.graph.to_graph6();
            let _ = match &e.outcome {
                Outcome::Linkless { embedding } => {
                    writeln!(out, "PASS {g6} linkless embedding {}", name(*embedding))
                }
                Outcome::Linked { embedding, witness } => {
                    writeln!(
                        out,
                        "FAIL {g6} embedding {} links {witness}",
                        name(*embedding)
                    )
                }
                Outcome::Unmatched => writeln!(out, "FAIL {g6} no embedding supplied"),
            };
        }
        for &i in &self.unused_embeddings {
            let _ = writeln!(out, "NOTE embedding {} matches no MTN graph", name(i));
        }
        let passed = self
            .entries
            .iter()
            .filter(|e| matches!(e.outcome, Outcome::Linkless { .. }))
            .count();
        let _ = writeln!(
            out,
            "certified {passed}/{} {}",
            self.entries.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

pub fn certify_order(mtn_graphs: &[Graph], embeddings: &[TorusDiagram]) -> CertificationReport {
    let forms: Vec<_> = embeddings
        .iter()
        .map(|d| d.graph().canonical_form())
        .collect();
    let linkless: Vec<Vec<LinkWitness>> = embeddings.par_iter().map(|d| d.find_links()).collect();
    let entries = mtn_graphs
        .iter()
        .map(|g| {
            let cf = g.canonical_form();
            let matching: Vec<usize> = (0..embeddings.len()).filter(|&i| forms[i] == cf).collect();
            let outcome = if let Some(&i) = matching.iter().find(|&&i| linkless[i].is_empty()) {
                Outcome::Linkless { embedding: i }
            } else if let Some(&i) = matching.first() {
                Outcome::Linked {
                    embedding: i,
                    witness: linkless[i][0].clone(),
                }
            } else {
                Outcome::Unmatched
            };
            CertificationEntry { graph: *g, outcome }
        })
        .collect();
    let mtn_forms: Vec<_> = mtn_graphs.iter().map(Graph::canonical_form).collect();
    let unused_embeddings = (0..embeddings.len())
        .filter(|&i| !mtn_forms.contains(&forms[i]))
        .collect();
    CertificationReport {
        entries,
        unused_embeddings,
    }
}
