use claimproof_core::rubric::{LEVEL_LABELS, Mark};
use claimproof_core::{load_rubric, parse_marks, score, HalfPoints, MarkSheet, Rubric};
use proptest::prelude::*;

const POKER: &str = include_str!("../fixtures/poker.rubric");
const WRITING: &str = include_str!("../fixtures/writing.rubric");

fn poker() -> Rubric {
    load_rubric(POKER).unwrap()
}

#[test]
fn poker_rubric_shape() {
    let Rubric::Point(r) = poker() else { panic!("point rubric expected") };
    assert_eq!(r.maximum, 100);
    let sections: Vec<(&str, u32)> = r
        .sections
        .iter()
        .map(|s| (s.name.as_str(), s.criteria.iter().map(|c| c.max_points()).sum()))
        .collect();
    assert_eq!(sections, vec![("Abstract", 10), ("Introduction", 30), ("Main Results", 50), ("Conclusion", 10)]);
    let main = &r.sections[2];
    assert!(main.criteria.iter().all(|c| c.multiplier == 5));
    assert_eq!(main.criteria.iter().map(|c| c.points).collect::<Vec<_>>(), vec![2, 3, 4, 1]);
}

#[test]
fn writing_rubric_has_three_traits() {
    let Rubric::Trait(r) = load_rubric(WRITING).unwrap() else { panic!("trait rubric expected") };
    let names: Vec<&str> = r.traits.iter().map(|t| t.name.as_str()).collect();
    assert_eq!(names, vec!["Assignment Requirements", "Reasoning (proof)", "Quality of Details"]);
    assert_eq!(r.maximum(), 15);
    assert_eq!(LEVEL_LABELS, ["Does not meet (1)", "Attempted (2)", "Approaches (3)", "Meets (4)", "Exceeds (5)"]);
}

#[test]
fn fixtures_round_trip_as_text() {
    assert_eq!(poker().to_string(), POKER);
    assert_eq!(load_rubric(WRITING).unwrap().to_string(), WRITING);
}

#[test]
fn poker_full_zero_and_one_dropped_point() {
    let r = poker();
    assert_eq!(score(&r, &MarkSheet::full(&r)).unwrap().total, HalfPoints::whole(100));
    assert_eq!(score(&r, &MarkSheet::zero(&r)).unwrap().total, HalfPoints(0));

    let text = include_str!("../fixtures/poker_full.marks").replace(
        "award \"Accurately find probability\" 3",
        "award \"Accurately find probability\" 2",
    );
    let report = score(&r, &parse_marks(&text).unwrap()).unwrap();
    assert_eq!(report.total, HalfPoints::whole(95));
    assert_eq!(report.lines[2].awarded, HalfPoints::whole(45));
}

#[test]
fn shipped_mark_sheets() {
    let r = poker();
    let full = score(&r, &parse_marks(include_str!("../fixtures/poker_full.marks")).unwrap()).unwrap();
    assert_eq!(full.total, HalfPoints::whole(100));
    let sample = score(&r, &parse_marks(include_str!("../fixtures/poker_sample.marks")).unwrap()).unwrap();
    // 9.5 + 25 + (9 + 14 + 15.5 + 5) + 7
    assert_eq!(sample.total.to_string(), "85");
    let writing = load_rubric(WRITING).unwrap();
    let w = score(&writing, &parse_marks(include_str!("../fixtures/writing_sample.marks")).unwrap()).unwrap();
    assert_eq!((w.total, w.maximum), (HalfPoints::whole(10), HalfPoints::whole(15)));
}

/// Random valid mark sheet for the poker rubric: (criterion, points, awarded half points).
fn arb_awards() -> impl Strategy<Value = Vec<u32>> {
    let Rubric::Point(r) = poker() else { unreachable!() };
    let limits: Vec<u32> = r.criteria().map(|c| c.points * 2).collect();
    limits.into_iter().map(|max| 0..=max).collect::<Vec<_>>()
}

fn sheet_from(awards: &[u32]) -> MarkSheet {
    let Rubric::Point(r) = poker() else { unreachable!() };
    r.criteria().zip(awards).fold(MarkSheet::new(), |s, (c, a)| s.award(&c.description, HalfPoints(*a)))
}

proptest! {
    #[test]
    fn score_is_bounded_and_monotone(awards in arb_awards(), bump in 0usize..13) {
        let r = poker();
        let base = score(&r, &sheet_from(&awards)).unwrap();
        prop_assert!(base.total <= base.maximum);
        let mut higher = awards.clone();
        let limit = {
            let Rubric::Point(p) = &r else { unreachable!() };
            p.criteria().nth(bump).unwrap().points * 2
        };
        if higher[bump] < limit {
            higher[bump] += 1;
            let raised = score(&r, &sheet_from(&higher)).unwrap();
            prop_assert!(raised.total > base.total);
        }
    }

    #[test]
    fn serialized_rubrics_reload(points in prop::collection::vec((1u32..10, 1u32..6), 1..8), name in "[A-Za-z \"]{1,20}") {
        let mut text = format!("rubric point \"{}\" max={}\nsection \"S\"\n",
            name.replace('"', "\\\""),
            points.iter().map(|(p, m)| p * m).sum::<u32>());
        for (i, (p, m)) in points.iter().enumerate() {
            text.push_str(&format!("criterion \"c{i}\" points={p} x{m}\n"));
        }
        let r = load_rubric(&text).unwrap();
        prop_assert_eq!(load_rubric(&r.to_string()).unwrap(), r);
    }
}

#[test]
fn mark_sheet_builders() {
    let sheet = MarkSheet::new().award("a", HalfPoints(1)).level("t", 3);
    let marks: Vec<&Mark> = sheet.marks().collect();
    assert_eq!(marks.len(), 2);
}
