use crate::deck::{AceRule, DeckSpec};

use super::{Classification, HandCategory};

/// Best category for `naturals` plus `wilds` free cards, `naturals.len() + wilds == 5`.
///
/// Works on value/suit histograms so it is constant time per hand. With
/// `wilds == 0` this is plain classification.
pub(crate) fn evaluate(naturals: &[(u8, u8)], wilds: usize, spec: &DeckSpec) -> Classification {
    debug_assert_eq!(naturals.len() + wilds, 5);
    let v = spec.values();
    let n = naturals.len();
    let k = wilds as u32;
    let plain = |category| Classification { category, five_of_a_kind: false };

    if n == 0 {
        return if v >= 5 {
            plain(HandCategory::RoyalFlush)
        } else {
            Classification { category: HandCategory::FourOfAKind, five_of_a_kind: true }
        };
    }

    let mut values = [0u8; 5];
    for (slot, &(value, _)) in values.iter_mut().zip(naturals) {
        *slot = value;
    }
    let values = &mut values[..n];
    values.sort_unstable();

    let first_suit = naturals[0].1;
    let same_suit = naturals.iter().all(|&(_, s)| s == first_suit);

    let mut distinct = 0u32;
    let mut max_mult = 0u32;
    let mut pairs = 0u32;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && values[j] == values[i] {
            j += 1;
        }
        let mult = (j - i) as u32;
        distinct += 1;
        max_mult = max_mult.max(mult);
        if mult == 2 {
            pairs += 1;
        }
        i = j;
    }
    let all_distinct = distinct as usize == n;

    let lo = u32::from(values[0]);
    let hi = u32::from(values[n - 1]);
    let fits_top = v >= 5 && all_distinct && lo + 4 >= v;
    let fits_lower = v >= 6 && all_distinct && hi.saturating_sub(4).max(1) <= lo.min(v - 5);
    // With five values the wheel is the same set as the top run.
    let fits_wheel = spec.ace_rule() == AceRule::Both
        && v >= 6
        && all_distinct
        && values.iter().all(|&x| x <= 4 || u32::from(x) == v);

    if same_suit && fits_top {
        return plain(HandCategory::RoyalFlush);
    }
    if same_suit && (fits_lower || fits_wheel) {
        return plain(HandCategory::StraightFlush);
    }
    if max_mult + k >= 4 {
        return Classification { category: HandCategory::FourOfAKind, five_of_a_kind: max_mult + k >= 5 };
    }
    // Two values and no four: 3+2 as dealt, or 2+2 plus one wild.
    if distinct == 2 {
        return plain(HandCategory::FullHouse);
    }
    if same_suit {
        return plain(HandCategory::Flush);
    }
    if fits_top || fits_lower || fits_wheel {
        return plain(HandCategory::Straight);
    }
    if max_mult + k >= 3 {
        return plain(HandCategory::ThreeOfAKind);
    }
    if k == 0 && pairs == 2 {
        return plain(HandCategory::TwoPair);
    }
    if max_mult + k >= 2 {
        return plain(HandCategory::Pair);
    }
    plain(HandCategory::HighCard)
}
