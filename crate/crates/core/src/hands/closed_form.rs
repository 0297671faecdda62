//! Closed-form counts as explicit products of binomials.
//!
//! Each category's count is kept as a [`CountFormula`] so the same object is
//! evaluated for [`count_category`] and rendered for [`combinatorial_proof`];
//! the proof can never disagree with the number it justifies.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::{HandCategory, HandError};
use crate::deck::{binomial, DeckSpec, HAND_SIZE};
use crate::proof::{ProofDocument, StepKind, QED_MARK};
use crate::rational::Probability;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// `C(n, r)`
    Choose(u64, u64),
    Pow(Box<Expr>, u32),
    Sub(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn choose(n: impl Into<u64>, r: u64) -> Expr {
        Expr::Choose(n.into(), r)
    }

    fn pow(self, exp: u32) -> Expr {
        Expr::Pow(Box::new(self), exp)
    }

    fn minus(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }

    pub fn eval(&self) -> BigInt {
        match self {
            Expr::Choose(n, r) => BigInt::from(binomial(*n, *r as i64)),
            Expr::Pow(base, exp) => num_traits::pow(base.eval(), *exp as usize),
            Expr::Sub(a, b) => a.eval() - b.eval(),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Choose(n, r) => write!(f, "C({n},{r})"),
            Expr::Pow(base, exp) => write!(f, "{base}^{exp}"),
            Expr::Sub(a, b) => write!(f, "({a} \u{2212} {b})"),
        }
    }
}

/// One choice in a counting argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub reason: String,
    pub expr: Expr,
}

/// A product of factors; the formula is the sum of its terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub reason: Option<String>,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn eval(&self) -> BigInt {
        self.factors.iter().map(|f| f.expr.eval()).product()
    }

    pub fn product_text(&self) -> String {
        self.factors.iter().map(|f| f.expr.to_string()).collect::<Vec<_>>().join("\u{00B7}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountFormula {
    pub category: HandCategory,
    pub terms: Vec<Term>,
}

impl CountFormula {
    pub fn for_category(category: HandCategory, spec: &DeckSpec) -> Result<Self, HandError> {
        if spec.wilds() > 0 {
            return Err(HandError::UnsupportedWilds(spec.wilds()));
        }
        let v = u64::from(spec.values());
        let s = u64::from(spec.suits());
        let runs = u64::from(spec.straight_runs());
        let factor = |reason: &str, expr: Expr| Factor { reason: reason.to_string(), expr };
        let single = |factors: Vec<Factor>| vec![Term { reason: None, factors }];
        let any_suit_each = |cards: u32| Expr::choose(s, 1).pow(cards);

        use HandCategory::*;
        let terms = match category {
            RoyalFlush if v >= 5 => single(vec![factor("choose the suit", Expr::choose(s, 1))]),
            RoyalFlush => single(vec![
                factor("choose the top run of five consecutive values (there is none)", Expr::choose(0u64, 1)),
                factor("choose the suit", Expr::choose(s, 1)),
            ]),
            StraightFlush => single(vec![
                factor("choose a run of five consecutive values other than the top run", Expr::choose(runs.saturating_sub(1), 1)),
                factor("choose the suit", Expr::choose(s, 1)),
            ]),
            FourOfAKind => {
                let mut terms = vec![Term {
                    reason: (s >= 5).then(|| "four cards of one value and a fifth card of another value".to_string()),
                    factors: vec![
                        factor("choose the value of the four", Expr::choose(v, 1)),
                        factor("choose the suits of the four", Expr::choose(s, 4)),
                        factor("choose the value of the fifth card", Expr::choose(v.saturating_sub(1), 1)),
                        factor("choose the suit of the fifth card", Expr::choose(s, 1)),
                    ],
                }];
                if s >= 5 {
                    terms.push(Term {
                        reason: Some("five cards of a single value, which is grouped with four of a kind".to_string()),
                        factors: vec![
                            factor("choose the value", Expr::choose(v, 1)),
                            factor("choose the five suits", Expr::choose(s, 5)),
                        ],
                    });
                }
                terms
            }
            FullHouse => single(vec![
                factor("choose the value of the triple", Expr::choose(v, 1)),
                factor("choose the suits of the triple", Expr::choose(s, 3)),
                factor("choose the value of the pair", Expr::choose(v.saturating_sub(1), 1)),
                factor("choose the suits of the pair", Expr::choose(s, 2)),
            ]),
            Flush => single(vec![
                factor("choose the suit", Expr::choose(s, 1)),
                factor(
                    "choose five distinct values that do not form a run of five consecutive values",
                    Expr::choose(v, 5).minus(Expr::choose(runs, 1)),
                ),
            ]),
            Straight => single(vec![
                factor("choose the run of five consecutive values", Expr::choose(runs, 1)),
                factor("choose a suit for each card, excluding the choices where all five suits agree", any_suit_each(5).minus(Expr::choose(s, 1))),
            ]),
            ThreeOfAKind => single(vec![
                factor("choose the value of the triple", Expr::choose(v, 1)),
                factor("choose the suits of the triple", Expr::choose(s, 3)),
                factor("choose two further distinct values", Expr::choose(v.saturating_sub(1), 2)),
                factor("choose a suit for each of those two cards", any_suit_each(2)),
            ]),
            TwoPair => single(vec![
                factor("choose the two values that are paired", Expr::choose(v, 2)),
                factor("choose the suits of each pair", Expr::choose(s, 2).pow(2)),
                factor("choose the value of the fifth card", Expr::choose(v.saturating_sub(2), 1)),
                factor("choose the suit of the fifth card", Expr::choose(s, 1)),
            ]),
            Pair => single(vec![
                factor("choose the value of the pair", Expr::choose(v, 1)),
                factor("choose the suits of the pair", Expr::choose(s, 2)),
                factor("choose three further distinct values", Expr::choose(v.saturating_sub(1), 3)),
                factor("choose a suit for each of those three cards", any_suit_each(3)),
            ]),
            HighCard => single(vec![
                factor(
                    "choose five distinct values that do not form a run of five consecutive values",
                    Expr::choose(v, 5).minus(Expr::choose(runs, 1)),
                ),
                factor("choose a suit for each card, excluding the choices where all five suits agree", any_suit_each(5).minus(Expr::choose(s, 1))),
            ]),
        };
        Ok(CountFormula { category, terms })
    }

    pub fn eval(&self) -> BigUint {
        let total: BigInt = self.terms.iter().map(Term::eval).sum();
        match total.into_parts() {
            (Sign::Minus, _) => unreachable!("closed forms are sums of non-negative products"),
            (_, magnitude) => magnitude,
        }
    }
}

/// Number of 5-card hands in `category`, by closed form. Wild-free decks only.
pub fn count_category(category: HandCategory, spec: &DeckSpec) -> Result<BigUint, HandError> {
    Ok(CountFormula::for_category(category, spec)?.eval())
}

/// `count_category / C(V·S, 5)`.
pub fn probability(category: HandCategory, spec: &DeckSpec) -> Result<Probability, HandError> {
    let count = count_category(category, spec)?;
    Ok(Probability::new(count, spec.hand_count()))
}

fn definition(category: HandCategory, spec: &DeckSpec) -> String {
    let v = spec.values();
    let top = if spec.uses_standard_names() {
        "10, J, Q, K and A".to_string()
    } else {
        format!("{} through {v}", v.saturating_sub(4).max(1))
    };
    let straight_note = match (spec.ace_rule(), v) {
        (crate::deck::AceRule::Both, 6..) => format!(
            " The top value {v} may also sit below 1, so {{1, 2, 3, 4, {v}}} is a run; no other run wraps around."
        ),
        _ => String::new(),
    };
    match category {
        HandCategory::RoyalFlush => format!("A royal flush is the top five values, {top}, all in one suit."),
        HandCategory::StraightFlush => format!(
            "A straight flush is five consecutive values in one suit that is not a royal flush.{straight_note}"
        ),
        HandCategory::FourOfAKind => "Four of a kind is four cards of one value together with any fifth card.".to_string(),
        HandCategory::FullHouse => "A full house is three cards of one value and two cards of a second value.".to_string(),
        HandCategory::Flush => "A flush is five cards of one suit that are not five consecutive values.".to_string(),
        HandCategory::Straight => format!(
            "A straight is five consecutive values that are not all in one suit.{straight_note}"
        ),
        HandCategory::ThreeOfAKind => {
            "Three of a kind is three cards of one value and two cards of two further, different values.".to_string()
        }
        HandCategory::TwoPair => {
            "Two pair is two cards of one value, two cards of a second value and a fifth card of a third value.".to_string()
        }
        HandCategory::Pair => "A pair is two cards of one value and three cards of three further, different values.".to_string(),
        HandCategory::HighCard => {
            "A high-card hand is any hand that falls in none of the nine categories above it.".to_string()
        }
    }
}

fn deck_phrase(spec: &DeckSpec) -> String {
    format!(
        "a {}-card deck with {} values and {} suit{}",
        spec.size(),
        spec.values(),
        spec.suits(),
        if spec.suits() == 1 { "" } else { "s" }
    )
}

/// Claim-Proof document for the count and probability of `category`.
///
/// The claim states the count and the probability; the proof names every
/// choice as a binomial, multiplies them, and divides by `C(V·S, 5)`.
pub fn combinatorial_proof(category: HandCategory, spec: &DeckSpec) -> Result<ProofDocument, HandError> {
    let formula = CountFormula::for_category(category, spec)?;
    let count = formula.eval();
    let total = spec.hand_count();
    let prob = Probability::new(count.clone(), total.clone());
    let n = spec.size();

    let mut doc = ProofDocument::new(format!("{}: count and probability", category.name()));
    doc.push(
        StepKind::Claim,
        format!(
            "In {}, exactly {count} of the C({n},{HAND_SIZE}) = {total} five-card hands are {}. \
             The probability of being dealt {} is {}.",
            deck_phrase(spec),
            category.with_article(),
            category.with_article(),
            prob.exact_text(),
        ),
    );
    doc.push(StepKind::Definition, definition(category, spec));
    doc.push(
        StepKind::Definition,
        "C(n,r) is the number of r-element subsets of an n-element set, and C(n,r) = n!/((n\u{2212}r)!\u{00B7}r!).",
    );

    let multi = formula.terms.len() > 1;
    for (i, term) in formula.terms.iter().enumerate() {
        if let Some(reason) = &term.reason {
            let lead = if multi { format!("Case {}: ", i + 1) } else { String::new() };
            doc.push(StepKind::Observation, format!("{lead}{reason}."));
        }
        for factor in &term.factors {
            let mut reason = factor.reason.clone();
            if let Some(first) = reason.get_mut(0..1) {
                first.make_ascii_uppercase();
            }
            doc.push(StepKind::Computation, format!("{reason}: {} = {}.", factor.expr, factor.expr.eval()));
        }
        doc.push(
            StepKind::Computation,
            format!("{} = {}", term.product_text(), term.eval()),
        );
    }
    if multi {
        let sum = formula.terms.iter().map(|t| t.eval().to_string()).collect::<Vec<_>>().join(" + ");
        doc.push(StepKind::Computation, format!("{sum} = {count}"));
    }
    if count.is_zero() {
        doc.push(StepKind::Observation, format!("One of the choices above is impossible in this deck, so no hand is {}.", category.with_article()));
    }
    doc.push(
        StepKind::Computation,
        format!(
            "Each of the C({n},{HAND_SIZE}) = {total} hands is equally likely, so the probability is {}.",
            prob.exact_text()
        ),
    );
    doc.push(
        StepKind::Conclusion,
        format!(
            "Therefore {count} hands are {}, with probability {} \u{2248} {}.",
            category.with_article(),
            prob.reduced_text(),
            prob.decimal_text()
        ),
    );
    doc.push(StepKind::Qed, QED_MARK);
    debug_assert!(total >= BigUint::one());
    Ok(doc)
}
