//! Verified mathematics for two introductory writing assignments: exact
//! poker-hand counts over generalized decks, Eulerian trail analysis of
//! multigraphs, Claim-Proof document generation, and rubric scoring.
//!
//! - [`deck`]: cards, deck parameters, exact binomials
//! - [`hands`]: categories, classification, closed-form counts, the winner rule
//! - [`oracle`]: exhaustive enumeration used to check the closed forms
//! - [`graphs`]: multigraphs, Euler's criterion, trail construction, impossibility proofs
//! - [`rubric`]: point and trait rubrics, mark sheets, score reports
//! - [`proof`]: the Claim-Proof document type shared by hands and graphs

pub mod deck;
pub mod graphs;
pub mod hands;
pub mod oracle;
pub mod proof;
pub mod rational;
pub mod rubric;

pub use deck::{binomial, make_deck, parse_card, parse_hand, render_card, AceRule, Card, DeckError, DeckSpec, Hand};
pub use graphs::{
    degree_map, eulerian_status, find_trail, impossibility_proof, parse_graph, EulerianStatus, GraphError, Multigraph,
    Trail, TrailSearch, Vocabulary,
};
pub use hands::{
    classify, classify_with_wilds, combinatorial_proof, count_category, determine_winner, probability, Classification,
    Entry, HandCategory, HandError, Outcome, WinnerReport,
};
pub use oracle::{tally_all, verify_closed_forms, Enumerator, OracleError, Tally, VerificationReport};
pub use proof::{ProofDocument, ProofStep, StepKind};
pub use rational::Probability;
pub use rubric::{load_rubric, parse_marks, score, HalfPoints, MarkSheet, Rubric, RubricError, ScoreReport};
