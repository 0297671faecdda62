//! Exhaustive enumeration of every 5-card hand of a deck.
//!
//! This is the ground truth the closed forms are checked against. Hands are
//! visited as index combinations `i0 < i1 < i2 < i3 < i4` over [`make_deck`]
//! order. Work is split by the first index across threads; since tallies are
//! plain sums the result does not depend on the thread count.

use std::fmt::{self, Write as _};
use std::num::NonZeroUsize;
use std::thread;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::deck::{make_deck, Card, DeckSpec};
use crate::hands::{count_category, evaluate, HandCategory, HandError};

pub const DEFAULT_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumerating this deck needs {required} hands, above the cap of {cap}")]
    CapExceeded { required: BigUint, cap: u64 },
    #[error(transparent)]
    Hand(#[from] HandError),
}

/// Hand counts per category from a full enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    counts: [u64; 10],
    /// Hands whose best reading is five of one value (counted as four of a kind).
    pub five_of_a_kind: u64,
}

impl Tally {
    pub fn get(&self, category: HandCategory) -> u64 {
        self.counts[category.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (HandCategory, u64)> + '_ {
        HandCategory::ALL.into_iter().map(|c| (c, self.get(c)))
    }

    fn merge(&mut self, other: &Tally) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.five_of_a_kind += other.five_of_a_kind;
    }
}

/// Enumeration settings: hand-count cap and worker threads.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    pub cap: u64,
    pub threads: NonZeroUsize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { cap: DEFAULT_CAP, threads: thread::available_parallelism().unwrap_or(NonZeroUsize::MIN) }
    }
}

impl Enumerator {
    pub fn single_threaded() -> Self {
        Enumerator { threads: NonZeroUsize::MIN, ..Default::default() }
    }

    pub fn with_threads(mut self, threads: NonZeroUsize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Classifies every hand of the deck; wild hands take their best substitution.
    pub fn tally(&self, spec: &DeckSpec) -> Result<Tally, OracleError> {
        let required = spec.hand_count();
        if required > BigUint::from(self.cap) {
            return Err(OracleError::CapExceeded { required, cap: self.cap });
        }
        let cards: Vec<Option<(u8, u8)>> = make_deck(spec)
            .into_iter()
            .map(|c| match c {
                Card::Natural { value, suit } => Some((value, suit)),
                Card::Wild(_) => None,
            })
            .collect();
        let firsts = cards.len().saturating_sub(4);
        let workers = self.threads.get().min(firsts.max(1));

        if workers == 1 {
            let mut tally = Tally::default();
            for first in 0..firsts {
                tally_from(&cards, first, spec, &mut tally);
            }
            return Ok(tally);
        }

        let partials: Vec<Tally> = thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let cards = &cards;
                    scope.spawn(move || {
                        let mut tally = Tally::default();
                        for first in (w..firsts).step_by(workers) {
                            tally_from(cards, first, spec, &mut tally);
                        }
                        tally
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
        });
        let mut tally = Tally::default();
        for part in &partials {
            tally.merge(part);
        }
        Ok(tally)
    }

    /// Compares every closed form with the enumeration. Wild-free decks only.
    pub fn verify_closed_forms(&self, spec: &DeckSpec) -> Result<VerificationReport, OracleError> {
        if spec.wilds() > 0 {
            return Err(HandError::UnsupportedWilds(spec.wilds()).into());
        }
        let tally = self.tally(spec)?;
        let rows = HandCategory::ALL
            .into_iter()
            .map(|category| {
                let closed_form = count_category(category, spec)?;
                let oracle = tally.get(category);
                let pass = closed_form.to_u64() == Some(oracle);
                Ok(VerificationRow { category, closed_form, oracle, pass })
            })
            .collect::<Result<Vec<_>, HandError>>()?;
        Ok(VerificationReport { spec: *spec, rows, total: tally.total(), expected_total: spec.hand_count() })
    }
}

/// All hands whose lowest card index is `first`.
fn tally_from(cards: &[Option<(u8, u8)>], first: usize, spec: &DeckSpec, tally: &mut Tally) {
    let n = cards.len();
    let mut naturals = [(0u8, 0u8); 5];
    let mut record = |idx: [usize; 5]| {
        let mut len = 0;
        for &i in &idx {
            if let Some(card) = cards[i] {
                naturals[len] = card;
                len += 1;
            }
        }
        let result = evaluate(&naturals[..len], 5 - len, spec);
        tally.counts[result.category.index()] += 1;
        if result.five_of_a_kind {
            tally.five_of_a_kind += 1;
        }
    };
    let i0 = first;
    for i1 in i0 + 1..n - 3 {
        for i2 in i1 + 1..n - 2 {
            for i3 in i2 + 1..n - 1 {
                for i4 in i3 + 1..n {
                    record([i0, i1, i2, i3, i4]);
                }
            }
        }
    }
}

/// Exhaustive tally with default settings.
pub fn tally_all(spec: &DeckSpec) -> Result<Tally, OracleError> {
    Enumerator::default().tally(spec)
}

/// Closed forms against the exhaustive tally, with default settings.
pub fn verify_closed_forms(spec: &DeckSpec) -> Result<VerificationReport, OracleError> {
    Enumerator::default().verify_closed_forms(spec)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRow {
    pub category: HandCategory,
    pub closed_form: BigUint,
    pub oracle: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: DeckSpec,
    pub rows: Vec<VerificationRow>,
    pub total: u64,
    pub expected_total: BigUint,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass) && BigUint::from(self.total) == self.expected_total
    }

    /// `category,closed_form,oracle,status` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("category,closed_form,oracle,status\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", r.category, r.closed_form, r.oracle, status(r.pass));
        }
        out
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Groups digits in threes: `2598960` -> `2,598,960`.
pub fn with_separators(n: &impl ToString) -> String {
    let digits = n.to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Closed forms vs exhaustive enumeration ({})", self.spec)?;
        writeln!(f, "{:<16} {:>14} {:>14}  status", "category", "closed form", "enumeration")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<16} {:>14} {:>14}  {}",
                r.category.slug(),
                with_separators(&r.closed_form),
                with_separators(&r.oracle),
                status(r.pass)
            )?;
        }
        write!(
            f,
            "total {} of C({},5) = {} hands: {}",
            with_separators(&self.total),
            self.spec.size(),
            with_separators(&self.expected_total),
            status(self.passed())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::AceRule;

    #[test]
    fn one_hand_deck() {
        let spec = DeckSpec::new(5, 1, 0, AceRule::Both).unwrap();
        let tally = tally_all(&spec).unwrap();
        assert_eq!(tally.total(), 1);
        assert_eq!(tally.get(HandCategory::RoyalFlush), 1);
        assert_eq!(tally.get(HandCategory::StraightFlush), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let err = Enumerator::default().with_cap(1000).tally(&DeckSpec::standard()).unwrap_err();
        assert_eq!(err, OracleError::CapExceeded { required: BigUint::from(2_598_960u32), cap: 1000 });
        assert!(err.to_string().contains("2598960"));
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let spec = DeckSpec::new(8, 3, 1, AceRule::Both).unwrap();
        let one = Enumerator::single_threaded().tally(&spec).unwrap();
        for threads in [2, 3, 7, 64] {
            let many = Enumerator::default().with_threads(NonZeroUsize::new(threads).unwrap()).tally(&spec).unwrap();
            assert_eq!(one, many, "{threads} threads");
        }
    }

    #[test]
    fn small_decks_verify() {
        let spec = DeckSpec::new(7, 3, 0, AceRule::Both).unwrap();
        let report = verify_closed_forms(&spec).unwrap();
        assert!(report.passed(), "{report}");
        let zero = report.rows.iter().find(|r| r.category == HandCategory::FourOfAKind).unwrap();
        assert_eq!(zero.oracle, 0);
    }

    #[test]
    fn wild_decks_cannot_be_verified() {
        let spec = DeckSpec::new(6, 2, 1, AceRule::Both).unwrap();
        assert!(matches!(verify_closed_forms(&spec), Err(OracleError::Hand(HandError::UnsupportedWilds(1)))));
    }

    #[test]
    fn csv_layout() {
        let spec = DeckSpec::new(5, 1, 0, AceRule::Both).unwrap();
        let csv = verify_closed_forms(&spec).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("category,closed_form,oracle,status"));
        assert_eq!(lines.next(), Some("royal-flush,1,1,PASS"));
        assert_eq!(lines.count(), 9);
    }

    #[test]
    fn separators() {
        assert_eq!(with_separators(&2_598_960u32), "2,598,960");
        assert_eq!(with_separators(&999u32), "999");
        assert_eq!(with_separators(&1000u32), "1,000");
        assert_eq!(with_separators(&0u32), "0");
    }
}
