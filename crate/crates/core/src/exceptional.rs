//! Static answer sheet for nilpotent orbits of the exceptional simple
//! groups: for each orbit (by its standard label) the verdict on whether
//! the intersection of the orbit with the nilradical of a Borel is
//! guaranteed to contain a smooth irreducible component.
//!
//! Three verdicts are possible. `GuaranteedSmooth` covers the orbits
//! obtained by induction from classical Levi data or settled by the
//! explicit minimal-orbit analysis; `Unknown` covers the orbits the
//! underlying criterion does not reach (rigid orbits and a few induced
//! only through exceptional Levis) — explicitly an open question, never a
//! negative result; `NoSmooth` is the one proved negative case, the
//! 6-dimensional minimal orbit of G2, whose intersection is irreducible
//! and singular.
//!
//! Labels are normalized before lookup: whitespace is dropped, Unicode
//! tildes and primes collapse to ASCII (`Ã1` → `~A1`, `′` → `'`), and
//! summands of a sum are sorted so `A1+2A2` and `2A2+A1` name the same
//! orbit, including inside parenthesized groups like `(A1+A3)'`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The five exceptional simple group types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExcType {
    G2,
    F4,
    E6,
    E7,
    E8,
}

pub const EXC_TYPES: [ExcType; 5] =
    [ExcType::G2, ExcType::F4, ExcType::E6, ExcType::E7, ExcType::E8];

impl fmt::Display for ExcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExcType::G2 => "G2",
            ExcType::F4 => "F4",
            ExcType::E6 => "E6",
            ExcType::E7 => "E7",
            ExcType::E8 => "E8",
        })
    }
}

impl FromStr for ExcType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G2" => Ok(ExcType::G2),
            "F4" => Ok(ExcType::F4),
            "E6" => Ok(ExcType::E6),
            "E7" => Ok(ExcType::E7),
            "E8" => Ok(ExcType::E8),
            other => Err(Error::Label(format!(
                "unknown exceptional type {other:?} (expected G2, F4, E6, E7, or E8)"
            ))),
        }
    }
}

/// Verdict on the existence of a smooth orbital piece for an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// A smooth component is guaranteed by the encoded criteria.
    GuaranteedSmooth,
    /// The criteria do not decide this orbit; genuinely open, not negative.
    Unknown,
    /// Proven: every component is singular (only the minimal G2 orbit).
    NoSmooth,
}

/// Full answer for one query.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub group: ExcType,
    /// Canonical label as listed in the orbit table.
    pub label: String,
    pub verdict: Verdict,
    /// Which criterion produced the verdict.
    pub source: String,
}

const G2_ORBITS: [&str; 5] = ["0", "A1", "~A1", "G2(a1)", "G2"];

const F4_ORBITS: [&str; 16] = [
    "0", "A1", "~A1", "A1+~A1", "A2", "~A2", "A2+~A1", "B2", "~A2+A1",
    "C3(a1)", "F4(a3)", "B3", "C3", "F4(a2)", "F4(a1)", "F4",
];

const E6_ORBITS: [&str; 21] = [
    "0", "A1", "2A1", "3A1", "A2", "A2+A1", "2A2", "A2+2A1", "A3",
    "2A2+A1", "A3+A1", "D4(a1)", "A4", "D4", "A4+A1", "A5", "D5(a1)",
    "E6(a3)", "D5", "E6(a1)", "E6",
];

const E7_ORBITS: [&str; 45] = [
    "0", "A1", "2A1", "(3A1)''", "(3A1)'", "A2", "4A1", "A2+A1",
    "A2+2A1", "A3", "2A2", "A2+3A1", "(A3+A1)''", "2A2+A1", "(A3+A1)'",
    "D4(a1)", "A3+2A1", "D4", "D4(a1)+A1", "A3+A2", "A4", "A3+A2+A1",
    "(A5)''", "D4+A1", "A4+A1", "D5(a1)", "A4+A2", "(A5)'", "A5+A1",
    "D5(a1)+A1", "D6(a2)", "E6(a3)", "D5", "E7(a5)", "A6", "D5+A1",
    "D6(a1)", "E7(a4)", "D6", "E6(a1)", "E6", "E7(a3)", "E7(a2)",
    "E7(a1)", "E7",
];

const E8_ORBITS: [&str; 70] = [
    "0", "A1", "2A1", "3A1", "4A1", "A2", "A2+A1", "A2+2A1", "A2+3A1",
    "A3", "2A2", "2A2+A1", "A3+A1", "D4(a1)", "D4", "2A2+2A1", "A3+2A1",
    "D4(a1)+A1", "A3+A2", "A4", "A3+A2+A1", "D4+A1", "D4(a1)+A2",
    "A4+A1", "2A3", "D5(a1)", "A4+2A1", "A4+A2", "A5", "D5(a1)+A1",
    "A4+A2+A1", "D4+A2", "E6(a3)", "D5", "A4+A3", "A5+A1", "D5(a1)+A2",
    "D6(a2)", "E6(a3)+A1", "E7(a5)", "D5+A1", "E8(a7)", "A6", "D6(a1)",
    "A6+A1", "E7(a4)", "E6(a1)", "D5+A2", "D6", "E6", "D7(a2)", "A7",
    "E6(a1)+A1", "E7(a3)", "E8(b6)", "D7(a1)", "E6+A1", "E7(a2)",
    "E8(a6)", "D7", "E8(b5)", "E7(a1)", "E8(a5)", "E8(b4)", "E7",
    "E8(a4)", "E8(a3)", "E8(a2)", "E8(a1)", "E8",
];

/// Orbits the encoded criteria do not decide, spelled exactly as in the
/// source lists (some use a different summand order than the orbit
/// tables; normalization reconciles them).
const G2_UNDECIDED: [&str; 0] = [];

const F4_UNDECIDED: [&str; 5] = ["A1", "~A1", "A1+~A1", "A2+~A1", "~A2+A1"];

const E6_UNDECIDED: [&str; 3] = ["A1", "3A1", "2A2+A1"];

const E7_UNDECIDED: [&str; 10] = [
    // Rigid orbits.
    "A1", "2A1", "(3A1)'", "4A1", "A2+2A1", "A1+2A2", "(A1+A3)'",
    // Induced, but only through Levi data the criterion does not cover.
    "A2+A1", "A3+2A1", "A5+A1",
];

const E8_UNDECIDED: [&str; 26] = [
    // Rigid orbits.
    "A1", "2A1", "3A1", "4A1", "A2+A1", "A2+2A1", "A2+3A1", "2A2+A1",
    "A3+A1", "2A2+2A1", "A3+2A1", "D4(a1)+A1", "A3+A2+A1", "2A3",
    "D5(a1)+A2", "A5+A1", "A4+A3",
    // Induced, but only through Levi data the criterion does not cover.
    "A3", "D4+A1", "A4+A1", "D5(a1)", "D5(a1)+A1", "E6(a3)+A1",
    "E7(a5)", "D5+A1", "E6+A1",
];

/// All orbit labels of the given type, in the conventional order.
pub fn orbit_labels(group: ExcType) -> &'static [&'static str] {
    match group {
        ExcType::G2 => &G2_ORBITS,
        ExcType::F4 => &F4_ORBITS,
        ExcType::E6 => &E6_ORBITS,
        ExcType::E7 => &E7_ORBITS,
        ExcType::E8 => &E8_ORBITS,
    }
}

fn undecided(group: ExcType) -> &'static [&'static str] {
    match group {
        ExcType::G2 => &G2_UNDECIDED,
        ExcType::F4 => &F4_UNDECIDED,
        ExcType::E6 => &E6_UNDECIDED,
        ExcType::E7 => &E7_UNDECIDED,
        ExcType::E8 => &E8_UNDECIDED,
    }
}

/// Canonical forms (as listed in the orbit tables) of the labels with
/// verdict `Unknown`.
pub fn unresolved_labels(group: ExcType) -> Vec<&'static str> {
    let universe = orbit_labels(group);
    undecided(group)
        .iter()
        .map(|u| {
            let n = normalize_label(u);
            universe
                .iter()
                .find(|entry| normalize_label(entry) == n)
                .copied()
                .expect("every undecided label names a listed orbit")
        })
        .collect()
}

/// Canonical comparison form of an orbit label: whitespace removed,
/// typographic tildes and primes folded to ASCII, and summands of every
/// sum (top level and inside parentheses) sorted.
pub fn normalize_label(label: &str) -> String {
    let mut s: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    s = s
        .replace(['\u{2032}', '\u{2019}'], "'") // right single quote
        .replace("A\u{0303}", "~A") // combining tilde
        .replace('\u{00c3}', "~A"); // precomposed A-tilde
    sort_sums(&s)
}

/// Splits at top-level `+`, normalizes each summand's parenthesized
/// groups recursively, sorts, and rejoins.
fn sort_sums(s: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' if depth == 0 => {
                parts.push(normalize_groups(&s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(normalize_groups(&s[start..]));
    if parts.len() > 1 {
        parts.sort();
    }
    parts.join("+")
}

/// Normalizes the interior of each balanced parenthesized group.
fn normalize_groups(part: &str) -> String {
    let Some(open) = part.find('(') else {
        return part.to_string();
    };
    let mut depth = 0usize;
    let mut close = None;
    for (i, ch) in part.char_indices().skip(open) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    close = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    let Some(close) = close else {
        return part.to_string(); // unbalanced; leave as-is
    };
    format!(
        "{}({}){}",
        &part[..open],
        sort_sums(&part[open + 1..close]),
        normalize_groups(&part[close + 1..])
    )
}

/// Verdict for one orbit of one exceptional type. The label is matched
/// against the embedded orbit table after normalization; an unknown label
/// is a `Label` error.
pub fn smooth_ov_verdict(group: ExcType, label: &str) -> Result<VerdictRecord> {
    let n = normalize_label(label);
    let universe = orbit_labels(group);
    let canonical = universe
        .iter()
        .find(|entry| normalize_label(entry) == n)
        .copied()
        .ok_or_else(|| {
            Error::Label(format!(
                "{label:?} does not name a nilpotent orbit of type {group}"
            ))
        })?;
    let is_undecided = undecided(group)
        .iter()
        .any(|u| normalize_label(u) == n);
    let (verdict, source) = if group == ExcType::G2 && canonical == "A1" {
        (
            Verdict::NoSmooth,
            "minimal-orbit analysis (G2): irreducible and singular".to_string(),
        )
    } else if is_undecided {
        (Verdict::Unknown, format!("exclusion list ({group})"))
    } else {
        (Verdict::GuaranteedSmooth, "induction criterion".to_string())
    };
    Ok(VerdictRecord {
        group,
        label: canonical.to_string(),
        verdict,
        source,
    })
}
