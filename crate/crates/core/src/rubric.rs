//! Grading rubrics and score reports.
//!
//! Two shapes are supported: point rubrics (sections of criteria worth a
//! number of points, optionally repeated `xN` times) and trait rubrics
//! (traits rated on five named levels). Awards are tracked in half points so
//! that partial credit of 0.5 stays exact.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RubricError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("criteria add up to {actual} points but the rubric declares max={declared}")]
    MaximumMismatch { declared: u32, actual: u32 },
    #[error("missing marks for: {}", .0.join(", "))]
    MissingMarks(Vec<String>),
    #[error("line {line}: no criterion or trait named {name:?} in this rubric")]
    UnknownMark { line: usize, name: String },
    #[error("line {line}: {name:?} is marked more than once")]
    DuplicateMark { line: usize, name: String },
    #[error("line {line}: {message}")]
    OutOfRange { line: usize, message: String },
}

/// A non-negative score in units of half a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfPoints(pub u32);

impl HalfPoints {
    pub fn whole(points: u32) -> Self {
        HalfPoints(points * 2)
    }
}

impl std::ops::Add for HalfPoints {
    type Output = HalfPoints;
    fn add(self, rhs: Self) -> Self {
        HalfPoints(self.0 + rhs.0)
    }
}

impl std::ops::Mul<u32> for HalfPoints {
    type Output = HalfPoints;
    fn mul(self, rhs: u32) -> Self {
        HalfPoints(self.0 * rhs)
    }
}

impl std::iter::Sum for HalfPoints {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(HalfPoints(0), |a, b| a + b)
    }
}

impl fmt::Display for HalfPoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 / 2)?;
        if self.0 % 2 == 1 {
            f.write_str(".5")?;
        }
        Ok(())
    }
}

impl FromStr for HalfPoints {
    type Err = String;

    /// `3`, `2.5`, `2.0`; anything finer than a half point is rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("{s:?} is not a score in steps of 0.5");
        let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
        if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: u32 = whole.parse().map_err(|_| bad())?;
        let half = match frac.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        whole.checked_mul(2).map(|w| HalfPoints(w + half)).ok_or_else(bad)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criterion {
    pub description: String,
    pub points: u32,
    /// How many times the criterion is applied (the `x5` on per-result rows).
    pub multiplier: u32,
}

impl Criterion {
    pub fn max_points(&self) -> u32 {
        self.points * self.multiplier
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub criteria: Vec<Criterion>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRubric {
    pub name: String,
    pub maximum: u32,
    pub sections: Vec<Section>,
}

impl PointRubric {
    pub fn criteria(&self) -> impl Iterator<Item = &Criterion> {
        self.sections.iter().flat_map(|s| &s.criteria)
    }
}

pub const LEVEL_LABELS: [&str; 5] =
    ["Does not meet (1)", "Attempted (2)", "Approaches (3)", "Meets (4)", "Exceeds (5)"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trait {
    pub name: String,
    /// Descriptor for levels 1 through 5.
    pub levels: [String; 5],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraitRubric {
    pub name: String,
    pub traits: Vec<Trait>,
}

impl TraitRubric {
    pub fn maximum(&self) -> u32 {
        5 * self.traits.len() as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rubric {
    Point(PointRubric),
    Trait(TraitRubric),
}

impl Rubric {
    pub fn name(&self) -> &str {
        match self {
            Rubric::Point(r) => &r.name,
            Rubric::Trait(r) => &r.name,
        }
    }

    pub fn maximum(&self) -> u32 {
        match self {
            Rubric::Point(r) => r.maximum,
            Rubric::Trait(r) => r.maximum(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    text: String,
    quoted: bool,
}

fn tokenize(line: &str, number: usize) -> Result<Vec<Token>, RubricError> {
    let mut tokens = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '#' {
            break;
        } else if c == '"' {
            chars.next();
            let mut text = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some('\\') => match chars.next() {
                        Some(escaped) => text.push(escaped),
                        None => break,
                    },
                    Some(ch) => text.push(ch),
                    None => {
                        return Err(RubricError::Syntax { line: number, message: "unterminated quoted string".into() })
                    }
                }
            }
            tokens.push(Token { text, quoted: true });
        } else {
            let mut text = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '"' {
                    break;
                }
                text.push(ch);
                chars.next();
            }
            tokens.push(Token { text, quoted: false });
        }
    }
    Ok(tokens)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Joins a run of bare words or takes a single quoted token.
fn name_from(tokens: &[Token]) -> Option<String> {
    match tokens {
        [] => None,
        [single] => Some(single.text.clone()),
        many if many.iter().all(|t| !t.quoted) => {
            Some(many.iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

fn keyed_number(token: &Token, key: &str) -> Option<u32> {
    if token.quoted {
        return None;
    }
    token.text.strip_prefix(key)?.parse().ok()
}

/// Parses a rubric file.
///
/// ```text
/// rubric point "<name>" max=<int>
/// section "<name>"
/// criterion "<description>" points=<n> [x<multiplier>]
///
/// rubric trait "<name>"
/// trait "<name>"
/// level <1-5> "<descriptor>"      (five lines, levels 1..5 in order)
/// ```
pub fn load_rubric(text: &str) -> Result<Rubric, RubricError> {
    enum Partial {
        None,
        Point(PointRubric),
        Trait(TraitRubric, Vec<(String, Vec<String>)>),
    }
    let mut partial = Partial::None;
    let mut seen = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens = tokenize(raw, line)?;
        let syntax = |message: &str| RubricError::Syntax { line, message: message.to_string() };
        let Some(head) = tokens.first() else { continue };
        let rest = &tokens[1..];
        match (head.text.as_str(), &mut partial) {
            ("rubric", Partial::None) => match rest.first().map(|t| t.text.as_str()) {
                Some("point") => {
                    let (max, name) = rest[1..].split_last().ok_or_else(|| syntax("expected `rubric point <name> max=<int>`"))?;
                    let maximum = keyed_number(max, "max=").ok_or_else(|| syntax("expected max=<int> at the end of the line"))?;
                    let name = name_from(name).ok_or_else(|| syntax("missing rubric name"))?;
                    partial = Partial::Point(PointRubric { name, maximum, sections: Vec::new() });
                }
                Some("trait") => {
                    let name = name_from(&rest[1..]).ok_or_else(|| syntax("missing rubric name"))?;
                    partial = Partial::Trait(TraitRubric { name, traits: Vec::new() }, Vec::new());
                }
                _ => return Err(syntax("expected `rubric point ...` or `rubric trait ...`")),
            },
            ("rubric", _) => return Err(syntax("only one rubric per file")),
            (_, Partial::None) => return Err(syntax("file must start with a `rubric` line")),
            ("section", Partial::Point(r)) => {
                let name = name_from(rest).ok_or_else(|| syntax("missing section name"))?;
                r.sections.push(Section { name, criteria: Vec::new() });
            }
            ("criterion", Partial::Point(r)) => {
                let section = r.sections.last_mut().ok_or_else(|| syntax("criterion before any section"))?;
                let (desc, options) = match rest {
                    [desc, options @ ..] if desc.quoted => (desc, options),
                    _ => return Err(syntax("expected a quoted criterion description")),
                };
                let (points, multiplier) = match options {
                    [p] => (keyed_number(p, "points="), Some(1)),
                    [p, m] => (keyed_number(p, "points="), keyed_number(m, "x")),
                    _ => (None, None),
                };
                let (Some(points), Some(multiplier)) = (points, multiplier) else {
                    return Err(syntax("expected points=<n> and an optional x<multiplier>"));
                };
                if multiplier == 0 {
                    return Err(syntax("multiplier must be at least 1"));
                }
                if !seen.insert(desc.text.clone()) {
                    return Err(syntax(&format!("criterion {:?} appears twice", desc.text)));
                }
                section.criteria.push(Criterion { description: desc.text.clone(), points, multiplier });
            }
            ("trait", Partial::Trait(_, traits)) => {
                let name = name_from(rest).ok_or_else(|| syntax("missing trait name"))?;
                if !seen.insert(name.clone()) {
                    return Err(syntax(&format!("trait {name:?} appears twice")));
                }
                traits.push((name, Vec::new()));
            }
            ("level", Partial::Trait(_, traits)) => {
                let (_, levels) = traits.last_mut().ok_or_else(|| syntax("level before any trait"))?;
                let [number, desc] = rest else {
                    return Err(syntax("expected `level <k> \"<descriptor>\"`"));
                };
                let expected = levels.len() + 1;
                if number.text.parse::<usize>().ok() != Some(expected) || expected > 5 {
                    return Err(syntax(&format!("expected level {expected}")));
                }
                levels.push(desc.text.clone());
            }
            (other, _) => return Err(syntax(&format!("unexpected {other:?}"))),
        }
    }

    match partial {
        Partial::None => Err(RubricError::Syntax { line: 0, message: "empty rubric".into() }),
        Partial::Point(r) => {
            let actual = r.criteria().map(Criterion::max_points).sum();
            if actual != r.maximum {
                return Err(RubricError::MaximumMismatch { declared: r.maximum, actual });
            }
            Ok(Rubric::Point(r))
        }
        Partial::Trait(mut r, traits) => {
            for (name, levels) in traits {
                let count = levels.len();
                let levels: [String; 5] = levels.try_into().map_err(|_| RubricError::Syntax {
                    line: 0,
                    message: format!("trait {name:?} has {count} levels; five are required"),
                })?;
                r.traits.push(Trait { name, levels });
            }
            Ok(Rubric::Trait(r))
        }
    }
}

impl fmt::Display for Rubric {
    /// Canonical file form; [`load_rubric`] reads it back unchanged.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rubric::Point(r) => {
                writeln!(f, "rubric point {} max={}", quote(&r.name), r.maximum)?;
                for s in &r.sections {
                    writeln!(f, "section {}", quote(&s.name))?;
                    for c in &s.criteria {
                        write!(f, "criterion {} points={}", quote(&c.description), c.points)?;
                        if c.multiplier != 1 {
                            write!(f, " x{}", c.multiplier)?;
                        }
                        writeln!(f)?;
                    }
                }
            }
            Rubric::Trait(r) => {
                writeln!(f, "rubric trait {}", quote(&r.name))?;
                for t in &r.traits {
                    writeln!(f, "trait {}", quote(&t.name))?;
                    for (i, level) in t.levels.iter().enumerate() {
                        writeln!(f, "level {} {}", i + 1, quote(level))?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mark {
    /// One value applied to every repetition, or one value per repetition.
    Award { criterion: String, values: Vec<HalfPoints> },
    Level { trait_name: String, level: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MarkSheet {
    marks: Vec<(usize, Mark)>,
}

impl MarkSheet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn award(mut self, criterion: &str, value: HalfPoints) -> Self {
        let line = self.marks.len() + 1;
        self.marks.push((line, Mark::Award { criterion: criterion.to_string(), values: vec![value] }));
        self
    }

    pub fn award_each(mut self, criterion: &str, values: Vec<HalfPoints>) -> Self {
        let line = self.marks.len() + 1;
        self.marks.push((line, Mark::Award { criterion: criterion.to_string(), values }));
        self
    }

    pub fn level(mut self, trait_name: &str, level: u8) -> Self {
        let line = self.marks.len() + 1;
        self.marks.push((line, Mark::Level { trait_name: trait_name.to_string(), level }));
        self
    }

    pub fn marks(&self) -> impl Iterator<Item = &Mark> {
        self.marks.iter().map(|(_, m)| m)
    }

    /// Every criterion at full points, or every trait at level 5.
    pub fn full(rubric: &Rubric) -> Self {
        Self::uniform(rubric, None)
    }

    /// Every criterion at zero, or every trait at level 1.
    pub fn zero(rubric: &Rubric) -> Self {
        Self::uniform(rubric, Some(0))
    }

    fn uniform(rubric: &Rubric, value: Option<u32>) -> Self {
        match rubric {
            Rubric::Point(r) => r.criteria().fold(MarkSheet::new(), |sheet, c| {
                sheet.award(&c.description, HalfPoints::whole(value.unwrap_or(c.points)))
            }),
            Rubric::Trait(r) => r
                .traits
                .iter()
                .fold(MarkSheet::new(), |sheet, t| sheet.level(&t.name, if value.is_some() { 1 } else { 5 })),
        }
    }
}

/// Parses `award "<criterion>" <value> [<value> ...]` and `level "<trait>" <1-5>` lines.
pub fn parse_marks(text: &str) -> Result<MarkSheet, RubricError> {
    let mut sheet = MarkSheet::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens = tokenize(raw, line)?;
        let syntax = |message: String| RubricError::Syntax { line, message };
        match tokens.as_slice() {
            [] => {}
            [kw, name, values @ ..] if kw.text == "award" && !values.is_empty() => {
                let values = values
                    .iter()
                    .map(|v| v.text.parse::<HalfPoints>().map_err(&syntax))
                    .collect::<Result<Vec<_>, _>>()?;
                sheet.marks.push((line, Mark::Award { criterion: name.text.clone(), values }));
            }
            [kw, name, level] if kw.text == "level" => {
                let level = level
                    .text
                    .parse::<u8>()
                    .map_err(|_| syntax(format!("{:?} is not a level", level.text)))?;
                sheet.marks.push((line, Mark::Level { trait_name: name.text.clone(), level }));
            }
            _ => return Err(syntax("expected `award \"<criterion>\" <value>...` or `level \"<trait>\" <1-5>`".into())),
        }
    }
    Ok(sheet)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreLine {
    /// Section name for point rubrics, trait name for trait rubrics.
    pub name: String,
    pub awarded: HalfPoints,
    pub maximum: HalfPoints,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreReport {
    pub rubric: String,
    pub lines: Vec<ScoreLine>,
    pub total: HalfPoints,
    pub maximum: HalfPoints,
}

/// Totals a mark sheet against a rubric. Every criterion or trait must be
/// marked exactly once.
pub fn score(rubric: &Rubric, marks: &MarkSheet) -> Result<ScoreReport, RubricError> {
    let mut by_name: HashMap<&str, (usize, &Mark)> = HashMap::new();
    for (line, mark) in &marks.marks {
        let name = match mark {
            Mark::Award { criterion, .. } => criterion.as_str(),
            Mark::Level { trait_name, .. } => trait_name.as_str(),
        };
        if by_name.insert(name, (*line, mark)).is_some() {
            return Err(RubricError::DuplicateMark { line: *line, name: name.to_string() });
        }
    }

    let mut lines = Vec::new();
    let mut missing = Vec::new();
    match rubric {
        Rubric::Point(r) => {
            for section in &r.sections {
                let mut awarded = HalfPoints(0);
                for c in &section.criteria {
                    let Some((line, mark)) = by_name.remove(c.description.as_str()) else {
                        missing.push(c.description.clone());
                        continue;
                    };
                    let Mark::Award { values, .. } = mark else {
                        return Err(RubricError::UnknownMark { line, name: c.description.clone() });
                    };
                    let limit = HalfPoints::whole(c.points);
                    if let Some(bad) = values.iter().find(|v| **v > limit) {
                        return Err(RubricError::OutOfRange {
                            line,
                            message: format!("{bad} awarded for {:?}, worth at most {}", c.description, c.points),
                        });
                    }
                    awarded = awarded
                        + match values.len() {
                            1 => values[0] * c.multiplier,
                            n if n == c.multiplier as usize => values.iter().copied().sum(),
                            n => {
                                return Err(RubricError::OutOfRange {
                                    line,
                                    message: format!(
                                        "{:?} needs 1 or {} values, got {n}",
                                        c.description, c.multiplier
                                    ),
                                })
                            }
                        };
                }
                let maximum = HalfPoints::whole(section.criteria.iter().map(Criterion::max_points).sum());
                lines.push(ScoreLine { name: section.name.clone(), awarded, maximum });
            }
        }
        Rubric::Trait(r) => {
            for t in &r.traits {
                let Some((line, mark)) = by_name.remove(t.name.as_str()) else {
                    missing.push(t.name.clone());
                    continue;
                };
                let Mark::Level { level, .. } = mark else {
                    return Err(RubricError::UnknownMark { line, name: t.name.clone() });
                };
                if !(1..=5).contains(level) {
                    return Err(RubricError::OutOfRange {
                        line,
                        message: format!("level {level} for {:?} is outside 1..5", t.name),
                    });
                }
                lines.push(ScoreLine {
                    name: t.name.clone(),
                    awarded: HalfPoints::whole(u32::from(*level)),
                    maximum: HalfPoints::whole(5),
                });
            }
        }
    }
    if let Some((name, (line, _))) = by_name.into_iter().min_by_key(|(_, (line, _))| *line) {
        return Err(RubricError::UnknownMark { line, name: name.to_string() });
    }
    if !missing.is_empty() {
        return Err(RubricError::MissingMarks(missing));
    }
    let total = lines.iter().map(|l| l.awarded).sum();
    Ok(ScoreReport { rubric: rubric.name().to_string(), lines, total, maximum: HalfPoints::whole(rubric.maximum()) })
}

impl fmt::Display for ScoreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rubric)?;
        let width = self.lines.iter().map(|l| l.name.chars().count()).max().unwrap_or(0).max(5);
        for l in &self.lines {
            writeln!(f, "  {:<width$}  {:>5} / {}", l.name, l.awarded.to_string(), l.maximum)?;
        }
        write!(f, "  {:<width$}  {:>5} / {}", "Total", self.total.to_string(), self.maximum)
    }
}
