//! Hand categories, classification, exact counts and the lowest-probability
//! winner rule.

mod closed_form;
mod eval;
mod winner;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::deck::{Card, DeckSpec, Hand};

pub use closed_form::{combinatorial_proof, count_category, probability, CountFormula, Expr, Factor, Term};
pub use winner::{determine_winner, Entry, Outcome, RankedEntry, WinnerReport};

pub(crate) use eval::evaluate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HandError {
    #[error("hand contains a wild card; use classify_with_wilds")]
    WildPresent,
    #[error("card {0:?} does not belong to a deck of {1}")]
    CardNotInDeck(Card, DeckSpec),
    #[error("closed-form counts need a wild-free deck (this deck has {0} wilds); use the enumeration oracle")]
    UnsupportedWilds(u32),
    #[error("no players were given")]
    NoEntries,
    #[error("unknown hand category {0:?}")]
    UnknownCategory(String),
}

/// The ten categories, declared strongest first.
///
/// The derived `Ord` follows declaration order, so a *smaller* category is
/// the *stronger* one: `RoyalFlush < StraightFlush < ... < HighCard`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HandCategory {
    RoyalFlush,
    StraightFlush,
    FourOfAKind,
    FullHouse,
    Flush,
    Straight,
    ThreeOfAKind,
    TwoPair,
    Pair,
    HighCard,
}

impl HandCategory {
    pub const ALL: [HandCategory; 10] = [
        HandCategory::RoyalFlush,
        HandCategory::StraightFlush,
        HandCategory::FourOfAKind,
        HandCategory::FullHouse,
        HandCategory::Flush,
        HandCategory::Straight,
        HandCategory::ThreeOfAKind,
        HandCategory::TwoPair,
        HandCategory::Pair,
        HandCategory::HighCard,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_stronger_than(self, other: HandCategory) -> bool {
        self < other
    }

    /// The stronger of two categories.
    pub fn best(self, other: HandCategory) -> HandCategory {
        self.min(other)
    }

    /// Kebab-case name used on the command line and in reports.
    pub fn slug(self) -> &'static str {
        match self {
            HandCategory::RoyalFlush => "royal-flush",
            HandCategory::StraightFlush => "straight-flush",
            HandCategory::FourOfAKind => "four-of-a-kind",
            HandCategory::FullHouse => "full-house",
            HandCategory::Flush => "flush",
            HandCategory::Straight => "straight",
            HandCategory::ThreeOfAKind => "three-of-a-kind",
            HandCategory::TwoPair => "two-pair",
            HandCategory::Pair => "pair",
            HandCategory::HighCard => "high-card",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HandCategory::RoyalFlush => "Royal Flush",
            HandCategory::StraightFlush => "Straight Flush",
            HandCategory::FourOfAKind => "Four of a Kind",
            HandCategory::FullHouse => "Full House",
            HandCategory::Flush => "Flush",
            HandCategory::Straight => "Straight",
            HandCategory::ThreeOfAKind => "Three of a Kind",
            HandCategory::TwoPair => "Two Pair",
            HandCategory::Pair => "Pair",
            HandCategory::HighCard => "High Card",
        }
    }

    /// Name with an indefinite article, for prose.
    pub fn with_article(self) -> String {
        match self {
            HandCategory::TwoPair => "two pair".to_string(),
            HandCategory::HighCard => "a high-card hand".to_string(),
            c => format!("a {}", c.name().to_lowercase()),
        }
    }
}

impl fmt::Display for HandCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for HandCategory {
    type Err = HandError;

    /// Accepts the kebab-case slug, snake_case, or the spaced display name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .trim()
            .chars()
            .map(|c| if c == '_' || c == ' ' { '-' } else { c.to_ascii_lowercase() })
            .collect();
        HandCategory::ALL
            .into_iter()
            .find(|c| c.slug() == norm)
            .ok_or_else(|| HandError::UnknownCategory(s.to_string()))
    }
}

/// Result of classifying a hand that may contain wilds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub category: HandCategory,
    /// Set when the best substitution is five cards of one value. That hand
    /// has no category of its own and is reported as four of a kind.
    pub five_of_a_kind: bool,
}

fn split_hand(hand: &Hand, spec: &DeckSpec) -> Result<(Vec<(u8, u8)>, usize), HandError> {
    let mut naturals = Vec::with_capacity(5);
    let mut wilds = 0;
    for card in hand.cards() {
        match *card {
            Card::Natural { value, suit } => {
                if value == 0 || u32::from(value) > spec.values() || suit == 0 || u32::from(suit) > spec.suits() {
                    return Err(HandError::CardNotInDeck(*card, *spec));
                }
                naturals.push((value, suit));
            }
            Card::Wild(index) => {
                if index == 0 || u32::from(index) > spec.wilds() {
                    return Err(HandError::CardNotInDeck(*card, *spec));
                }
                wilds += 1;
            }
        }
    }
    Ok((naturals, wilds))
}

/// Category of a wild-free hand: the strongest category whose definition it meets.
pub fn classify(hand: &Hand, spec: &DeckSpec) -> Result<HandCategory, HandError> {
    let (naturals, wilds) = split_hand(hand, spec)?;
    if wilds > 0 {
        return Err(HandError::WildPresent);
    }
    Ok(evaluate(&naturals, 0, spec).category)
}

/// Best category reachable by replacing every wild with any natural card.
///
/// Substitutes may duplicate cards already held. Hands without wilds give
/// the same answer as [`classify`].
pub fn classify_with_wilds(hand: &Hand, spec: &DeckSpec) -> Result<Classification, HandError> {
    let (naturals, wilds) = split_hand(hand, spec)?;
    Ok(evaluate(&naturals, wilds, spec))
}
