//! Claim-Proof documents showing that no route uses every edge exactly once.

use super::{eulerian_status, EulerianStatus, GraphError, Multigraph};
use crate::proof::{ProofDocument, StepKind, QED_MARK};

/// Words used for the setting, its vertices and its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    pub title: String,
    pub setting: String,
    pub place: String,
    pub places: String,
    pub passage: String,
    pub passages: String,
}

impl Vocabulary {
    pub fn generic() -> Self {
        Vocabulary {
            title: "No Eulerian trail".into(),
            setting: "the layout".into(),
            place: "location".into(),
            places: "locations".into(),
            passage: "connection".into(),
            passages: "connections".into(),
        }
    }

    /// Land masses joined by bridges.
    pub fn bridges() -> Self {
        Vocabulary {
            title: "The bridge problem".into(),
            setting: "the city".into(),
            place: "land mass".into(),
            places: "land masses".into(),
            passage: "bridge".into(),
            passages: "bridges".into(),
        }
    }

    /// Rooms (and the outside) joined by doorways and windows.
    pub fn floor_plan() -> Self {
        Vocabulary {
            title: "The cat and the mouse".into(),
            setting: "the house".into(),
            place: "room".into(),
            places: "rooms".into(),
            passage: "doorway or window".into(),
            passages: "doorways and windows".into(),
        }
    }
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn list(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [a, b] => format!("{a} and {b}"),
        [init @ .., last] => format!("{}, and {last}", init.join(", ")),
    }
}

/// Proof that `g` has no trail containing every edge, by degree parity.
///
/// Only defined when [`eulerian_status`] is `NoTrail`. Step order: claim,
/// model, vertex/edge counts, reduction to trails, the parity lemma, the odd
/// vertices, the contradiction, and the end mark.
pub fn impossibility_proof(g: &Multigraph, words: &Vocabulary) -> Result<ProofDocument, GraphError> {
    let odd = match eulerian_status(g)? {
        EulerianStatus::NoTrail { odd } => odd,
        other => return Err(GraphError::NotImpossible(other.describe(g))),
    };
    let degrees = g.degrees();
    let Vocabulary { setting, place, places, passage, passages, .. } = words;

    let mut doc = ProofDocument::new(words.title.clone());
    doc.push(
        StepKind::Claim,
        format!("There is no route through {setting} that passes through every {passage} exactly once."),
    );
    doc.push(
        StepKind::Model,
        format!(
            "Model {setting} as a graph: draw one vertex for each {place} and one edge for each {passage}, \
             joining the vertices of the two {places} it connects."
        ),
    );
    doc.push(
        StepKind::Count,
        format!(
            "Call this graph G. Then G has {} and {}.",
            plural(g.vertex_count(), "vertex", "vertices"),
            plural(g.edge_count(), "edge", "edges")
        ),
    );
    doc.push(
        StepKind::Reduction,
        format!(
            "A route that passes through every {passage} exactly once is a trail in G containing every edge of G, \
             so it is enough to show that no trail in G contains every edge of G."
        ),
    );
    doc.push(
        StepKind::Lemma,
        "In a trail T, every vertex other than the first and the last touches an even number of edges of T: \
         each time T passes through such a vertex it arrives along one edge and leaves along another, unused one.",
    );
    let names: Vec<String> = odd.iter().map(|v| g.name(*v).to_string()).collect();
    let degs: Vec<String> = odd.iter().map(|v| degrees[v.0].to_string()).collect();
    doc.push(
        StepKind::Observation,
        format!(
            "The {places} {} touch {} {passages} respectively, all odd numbers, so {} of G {} odd degree, more than two.",
            list(&names),
            list(&degs),
            plural(odd.len(), "vertex", "vertices"),
            if odd.len() == 1 { "has" } else { "have" }
        ),
    );
    doc.push(
        StepKind::Contradiction,
        format!(
            "Suppose a trail T contained every edge of G. Then each vertex touches as many edges of T as it has in G, \
             so by the lemma all {} odd vertices would have to be the first or the last vertex of T. \
             A trail has only two ends, which is a contradiction. Hence no trail in G contains every edge, \
             and no route passes through every {passage} exactly once.",
            odd.len()
        ),
    );
    doc.push(StepKind::Qed, QED_MARK);
    Ok(doc)
}
