//! Cards, generalized decks and exact binomial arithmetic.
//!
//! A deck has `values` distinct values ordered `1..=values` (the top value
//! plays the role of the ace), `suits` suits, and `wilds` extra jokers. The
//! standard deck is 13 values by 4 suits with no wilds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Number of cards in a hand.
pub const HAND_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeckError {
    #[error("deck must have at least one value")]
    NoValues,
    #[error("deck must have at least one suit")]
    NoSuits,
    #[error("deck has {size} cards; at least {HAND_SIZE} are needed to deal a hand")]
    TooSmall { size: u64 },
    #[error("deck has {values} values; at most {max} are supported")]
    TooManyValues { values: u32, max: u32 },
    #[error("deck has {suits} suits; at most {max} are supported")]
    TooManySuits { suits: u32, max: u32 },
    #[error("deck has {wilds} wilds; at most {max} are supported")]
    TooManyWilds { wilds: u32, max: u32 },
    #[error("unknown card token {0:?}")]
    UnknownToken(String),
    #[error("card {token:?} is out of range: {reason}")]
    OutOfRange { token: String, reason: String },
    #[error("a hand needs exactly {HAND_SIZE} cards, got {0}")]
    WrongHandSize(usize),
    #[error("card {0} appears more than once in the hand")]
    DuplicateCard(String),
}

/// Whether the top value may also play below value 1 in a straight (the wheel).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AceRule {
    #[default]
    Both,
    HighOnly,
}

impl FromStr for AceRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "both" => Ok(AceRule::Both),
            "high" | "high-only" | "high_only" => Ok(AceRule::HighOnly),
            other => Err(format!("unknown ace rule {other:?} (expected both|high)")),
        }
    }
}

impl fmt::Display for AceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AceRule::Both => "both",
            AceRule::HighOnly => "high",
        })
    }
}

/// Parameters of a generalized deck.
///
/// Construct with [`DeckSpec::new`] or [`DeckSpec::standard`]; both guarantee
/// the invariants every other operation relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeckSpec {
    values: u32,
    suits: u32,
    wilds: u32,
    ace_rule: AceRule,
}

impl DeckSpec {
    /// Values and suits are stored in `u8`.
    pub const MAX_VALUES: u32 = 255;
    pub const MAX_SUITS: u32 = 255;

    pub fn new(values: u32, suits: u32, wilds: u32, ace_rule: AceRule) -> Result<Self, DeckError> {
        if values == 0 {
            return Err(DeckError::NoValues);
        }
        if suits == 0 {
            return Err(DeckError::NoSuits);
        }
        if values > Self::MAX_VALUES {
            return Err(DeckError::TooManyValues { values, max: Self::MAX_VALUES });
        }
        if suits > Self::MAX_SUITS {
            return Err(DeckError::TooManySuits { suits, max: Self::MAX_SUITS });
        }
        if wilds > u32::from(u16::MAX) {
            return Err(DeckError::TooManyWilds { wilds, max: u32::from(u16::MAX) });
        }
        let size = u64::from(values) * u64::from(suits) + u64::from(wilds);
        if size < HAND_SIZE as u64 {
            return Err(DeckError::TooSmall { size });
        }
        Ok(DeckSpec { values, suits, wilds, ace_rule })
    }

    /// 13 values, 4 suits, no wilds, wheel allowed.
    pub fn standard() -> Self {
        DeckSpec { values: 13, suits: 4, wilds: 0, ace_rule: AceRule::Both }
    }

    pub fn values(&self) -> u32 {
        self.values
    }

    pub fn suits(&self) -> u32 {
        self.suits
    }

    pub fn wilds(&self) -> u32 {
        self.wilds
    }

    pub fn ace_rule(&self) -> AceRule {
        self.ace_rule
    }

    pub fn natural_count(&self) -> u64 {
        u64::from(self.values) * u64::from(self.suits)
    }

    pub fn size(&self) -> u64 {
        self.natural_count() + u64::from(self.wilds)
    }

    /// Number of distinct 5-card hands, `C(size, 5)`.
    pub fn hand_count(&self) -> BigUint {
        binomial(self.size(), HAND_SIZE as i64)
    }

    /// True for the 13x4 layout, where cards use rank/suit letters.
    pub fn uses_standard_names(&self) -> bool {
        self.values == 13 && self.suits == 4
    }

    /// Number of distinct value sets that form a straight.
    ///
    /// Runs are `lo..=lo+4` for `lo` in `1..=V-4`, plus the wheel
    /// `{1,2,3,4,V}` under [`AceRule::Both`]. With `V = 5` the wheel is the
    /// same set as `1..=5` and is not counted twice.
    pub fn straight_runs(&self) -> u32 {
        let v = self.values;
        if v < 5 {
            return 0;
        }
        match self.ace_rule {
            AceRule::HighOnly => v - 4,
            AceRule::Both if v == 5 => 1,
            AceRule::Both => v - 3,
        }
    }
}

impl Default for DeckSpec {
    fn default() -> Self {
        DeckSpec::standard()
    }
}

impl fmt::Display for DeckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} values x {} suits", self.values, self.suits)?;
        if self.wilds > 0 {
            write!(f, " + {} wild", self.wilds)?;
            if self.wilds > 1 {
                f.write_str("s")?;
            }
        }
        write!(f, ", ace rule {}", self.ace_rule)
    }
}

/// A single card. Natural values and suits are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Card {
    Natural { value: u8, suit: u8 },
    Wild(u16),
}

impl Card {
    pub fn natural(value: u8, suit: u8) -> Self {
        Card::Natural { value, suit }
    }

    pub fn is_wild(&self) -> bool {
        matches!(self, Card::Wild(_))
    }

    fn check(&self, spec: &DeckSpec, token: &str) -> Result<(), DeckError> {
        let out_of_range = |reason: String| DeckError::OutOfRange { token: token.to_string(), reason };
        match *self {
            Card::Natural { value, suit } => {
                if value == 0 || u32::from(value) > spec.values() {
                    return Err(out_of_range(format!("value {value} not in 1..={}", spec.values())));
                }
                if suit == 0 || u32::from(suit) > spec.suits() {
                    return Err(out_of_range(format!("suit {suit} not in 1..={}", spec.suits())));
                }
            }
            Card::Wild(index) => {
                if index == 0 || u32::from(index) > spec.wilds() {
                    return Err(out_of_range(format!("wild {index} not in 1..={}", spec.wilds())));
                }
            }
        }
        Ok(())
    }
}

const RANK_NAMES: [&str; 13] = ["2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K", "A"];
const SUIT_NAMES: [char; 4] = ['C', 'D', 'H', 'S'];

/// All `V·S` natural cards in value-major order, followed by the wilds.
pub fn make_deck(spec: &DeckSpec) -> Vec<Card> {
    let mut cards = Vec::with_capacity(spec.size() as usize);
    for value in 1..=spec.values() {
        for suit in 1..=spec.suits() {
            cards.push(Card::natural(value as u8, suit as u8));
        }
    }
    cards.extend((1..=spec.wilds()).map(|i| Card::Wild(i as u16)));
    cards
}

/// Parses one card token.
///
/// Accepted forms (case-insensitive): `10S`, `AS`, `7d` for 13-value decks;
/// `v<value>s<suit>` for any deck; `W<index>` for wilds.
pub fn parse_card(text: &str, spec: &DeckSpec) -> Result<Card, DeckError> {
    let token = text.trim();
    let upper = token.to_ascii_uppercase();
    let unknown = || DeckError::UnknownToken(token.to_string());

    let card = if let Some(rest) = upper.strip_prefix('W') {
        Card::Wild(parse_index(rest).ok_or_else(unknown)?)
    } else if let Some(rest) = upper.strip_prefix('V') {
        let (value, suit) = rest.split_once('S').ok_or_else(unknown)?;
        let value = parse_index(value).ok_or_else(unknown)?;
        let suit = parse_index(suit).ok_or_else(unknown)?;
        let value = u8::try_from(value).map_err(|_| DeckError::OutOfRange {
            token: token.to_string(),
            reason: format!("value {value} not in 1..={}", spec.values()),
        })?;
        let suit = u8::try_from(suit).map_err(|_| DeckError::OutOfRange {
            token: token.to_string(),
            reason: format!("suit {suit} not in 1..={}", spec.suits()),
        })?;
        Card::natural(value, suit)
    } else {
        let mut chars = upper.chars();
        let suit_char = chars.next_back().ok_or_else(unknown)?;
        let rank = chars.as_str();
        let value = RANK_NAMES
            .iter()
            .position(|r| *r == rank || (rank == "T" && *r == "10"))
            .ok_or_else(unknown)?;
        let suit = SUIT_NAMES.iter().position(|s| *s == suit_char).ok_or_else(unknown)?;
        if spec.values() != 13 {
            return Err(DeckError::OutOfRange {
                token: token.to_string(),
                reason: format!("rank letters need a 13-value deck; use v<value>s<suit> for {} values", spec.values()),
            });
        }
        Card::natural(value as u8 + 1, suit as u8 + 1)
    };
    card.check(spec, token)?;
    Ok(card)
}

fn parse_index(digits: &str) -> Option<u16> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Inverse of [`parse_card`]: rank letters for the 13x4 deck, `v<k>s<k>` otherwise.
pub fn render_card(card: &Card, spec: &DeckSpec) -> String {
    match *card {
        Card::Natural { value, suit } if spec.uses_standard_names() => {
            format!("{}{}", RANK_NAMES[usize::from(value) - 1], SUIT_NAMES[usize::from(suit) - 1])
        }
        Card::Natural { value, suit } => format!("v{value}s{suit}"),
        Card::Wild(index) => format!("W{index}"),
    }
}

/// Five distinct cards, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hand([Card; HAND_SIZE]);

impl Hand {
    pub fn new(cards: &[Card]) -> Result<Self, DeckError> {
        let mut sorted: [Card; HAND_SIZE] =
            cards.try_into().map_err(|_| DeckError::WrongHandSize(cards.len()))?;
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(DeckError::DuplicateCard(format!("{:?}", w[0])));
        }
        Ok(Hand(sorted))
    }

    pub fn cards(&self) -> &[Card; HAND_SIZE] {
        &self.0
    }

    pub fn wild_count(&self) -> usize {
        self.0.iter().filter(|c| c.is_wild()).count()
    }

    pub fn render(&self, spec: &DeckSpec) -> String {
        self.0.iter().map(|c| render_card(c, spec)).collect::<Vec<_>>().join(" ")
    }
}

/// Parses five whitespace-separated card tokens.
pub fn parse_hand(text: &str, spec: &DeckSpec) -> Result<Hand, DeckError> {
    let cards = text
        .split_whitespace()
        .map(|t| parse_card(t, spec))
        .collect::<Result<Vec<_>, _>>()?;
    Hand::new(&cards).map_err(|e| match e {
        DeckError::DuplicateCard(_) => {
            let dup = cards.iter().find(|c| cards.iter().filter(|d| d == c).count() > 1);
            DeckError::DuplicateCard(dup.map(|c| render_card(c, spec)).unwrap_or_default())
        }
        other => other,
    })
}

/// `C(n, r)`, exact. Zero when `r < 0` or `r > n`.
pub fn binomial(n: u64, r: i64) -> BigUint {
    if r < 0 || r as u64 > n {
        return BigUint::default();
    }
    let r = (r as u64).min(n - r as u64);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
