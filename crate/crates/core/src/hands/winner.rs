//! The lowest-probability-wins rule.

use super::{probability, HandCategory, HandError};
use crate::deck::DeckSpec;
use crate::rational::Probability;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub category: HandCategory,
}

impl Entry {
    pub fn new(name: impl Into<String>, category: HandCategory) -> Self {
        Entry { name: name.into(), category }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedEntry {
    pub name: String,
    pub category: HandCategory,
    pub probability: Probability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Winner(String),
    /// Every player sharing the minimal probability, sorted by name.
    Tie(Vec<String>),
    /// All entries hold hands that cannot occur in the deck.
    NoWinner,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinnerReport {
    pub outcome: Outcome,
    /// Possible hands, rarest first; ties broken by name then category.
    pub ranking: Vec<RankedEntry>,
    /// Entries whose category has probability zero, sorted by name.
    pub impossible: Vec<Entry>,
}

impl WinnerReport {
    /// One-line verdict, e.g. `Bond wins (3744/2598960 < 5108/2598960 < 10200/2598960)`.
    pub fn summary(&self) -> String {
        let chain = || {
            let mut out = String::new();
            for (i, e) in self.ranking.iter().enumerate() {
                if i > 0 {
                    let prev = &self.ranking[i - 1].probability;
                    out.push_str(if *prev == e.probability { " = " } else { " < " });
                }
                out.push_str(&e.probability.exact_text());
            }
            out
        };
        let mut line = match &self.outcome {
            Outcome::Winner(name) => format!("{name} wins ({})", chain()),
            Outcome::Tie(names) => format!("Tie between {} ({})", join_names(names), chain()),
            Outcome::NoWinner => "No winner: no player holds a hand that can occur in this deck".to_string(),
        };
        if !self.impossible.is_empty() {
            let list = self
                .impossible
                .iter()
                .map(|e| format!("{} ({})", e.name, e.category))
                .collect::<Vec<_>>()
                .join(", ");
            line.push_str(&format!("; impossible in this deck: {list}"));
        }
        line
    }
}

fn join_names(names: &[String]) -> String {
    match names {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

/// Applies the rule that the rarest hand wins.
///
/// Result is independent of the order of `entries`.
pub fn determine_winner(entries: &[Entry], spec: &DeckSpec) -> Result<WinnerReport, HandError> {
    if entries.is_empty() {
        return Err(HandError::NoEntries);
    }
    let mut ranking = Vec::with_capacity(entries.len());
    let mut impossible = Vec::new();
    for entry in entries {
        let p = probability(entry.category, spec)?;
        if p.is_zero() {
            impossible.push(entry.clone());
        } else {
            ranking.push(RankedEntry { name: entry.name.clone(), category: entry.category, probability: p });
        }
    }
    ranking.sort_by(|a, b| {
        a.probability
            .cmp(&b.probability)
            .then_with(|| a.name.cmp(&b.name))
            .then_with(|| a.category.cmp(&b.category))
    });
    impossible.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.category.cmp(&b.category)));

    let outcome = match ranking.first() {
        None => Outcome::NoWinner,
        Some(best) => {
            let mut tied: Vec<String> = ranking
                .iter()
                .take_while(|e| e.probability == best.probability)
                .map(|e| e.name.clone())
                .collect();
            if tied.len() == 1 {
                Outcome::Winner(tied.remove(0))
            } else {
                tied.dedup();
                Outcome::Tie(tied)
            }
        }
    };
    Ok(WinnerReport { outcome, ranking, impossible })
}
