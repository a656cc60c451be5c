//! Integer partitions viewed as Young diagrams.
//!
//! Conventions: a partition is a weakly decreasing sequence of positive
//! integers; the empty partition is allowed. Diagrams are drawn in English
//! notation (row 1 on top, rows left-justified), and the *j*-th column
//! length of `p` is the *j*-th part of the dual partition `p*`, i.e.
//! `p*_j = #{i : p_i >= j}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which bilinear form a nilpotent element is asked to preserve.
///
/// The parity ("admissibility") condition on Jordan types:
/// * `Orthogonal` (symmetric form): every even part occurs an even number
///   of times;
/// * `Symplectic` (alternating form): every odd part occurs an even number
///   of times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Orthogonal,
    Symplectic,
}

impl FormKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FormKind::Orthogonal => "orthogonal",
            FormKind::Symplectic => "symplectic",
        }
    }
}

impl std::str::FromStr for FormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "orthogonal" | "o" => Ok(FormKind::Orthogonal),
            "symplectic" | "s" | "sp" => Ok(FormKind::Symplectic),
            other => Err(Error::Parse(format!(
                "unknown form kind {other:?}; expected \"orthogonal\" or \"symplectic\""
            ))),
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A partition of a nonnegative integer, kept weakly decreasing with all
/// parts positive. Serialized as a bare JSON array of parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Row length, 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// How many times `v` occurs as a part.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// The dual (conjugate) partition: `dual_j = #{i : p_i >= j}`.
    pub fn dual(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols as u32)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Column lengths, left to right (the parts of the dual).
    pub fn columns(&self) -> Vec<u32> {
        self.dual().parts
    }

    /// Column lengths padded with a single trailing zero when the column
    /// count has the wrong parity for `kind`: orthogonal constructions
    /// consume an odd number of columns, symplectic ones an even number.
    pub fn padded_columns(&self, kind: FormKind) -> Vec<u32> {
        let mut cols = self.columns();
        let want_odd = kind == FormKind::Orthogonal;
        if (cols.len() % 2 == 1) != want_odd {
            cols.push(0);
        }
        cols
    }

    /// Parity condition for being the Jordan type of a nilpotent element
    /// preserving a form of the given kind.
    pub fn is_admissible(&self, kind: FormKind) -> bool {
        let bad_parity = match kind {
            FormKind::Orthogonal => 0, // even parts need even multiplicity
            FormKind::Symplectic => 1, // odd parts need even multiplicity
        };
        let mut distinct = self.parts.clone();
        distinct.dedup();
        distinct
            .iter()
            .filter(|&&v| v % 2 == bad_parity)
            .all(|&v| self.multiplicity(v).is_multiple_of(2))
    }

    /// Places the diagrams side by side, columns of `self` first. Requires
    /// the last column of `self` to be at least the first column of `other`
    /// so the glued columns are again weakly decreasing.
    pub fn juxtapose(&self, other: &Partition) -> Result<Partition> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let left = self.columns();
        let right = other.columns();
        let (last, first) = (*left.last().unwrap(), right[0]);
        if last < first {
            return Err(Error::ConcatenationOrder(format!(
                "last column of {self} has length {last} < first column length {first} of {other}"
            )));
        }
        let mut cols = left;
        cols.extend(right);
        Ok(Partition { parts: cols }.dual())
    }

    /// `sum_j C(dual_j, 2)`: the dimension of the fixed-flag fiber of the
    /// nilpotent with this Jordan type (half the codimension of its orbit
    /// in the nilpotent cone of gl_n).
    pub fn springer_fiber_dimension(&self) -> u64 {
        self.dual()
            .parts
            .iter()
            .map(|&c| (c as u64) * (c as u64 - 1) / 2)
            .sum()
    }

    /// Dominance order on partitions of equal size: all prefix sums of
    /// `self` are at least those of `other`.
    ///
    /// Panics if the sizes differ; dominance only compares partitions of
    /// the same integer.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(
            self.size(),
            other.size(),
            "dominance compares partitions of the same integer"
        );
        let rows = self.rows().max(other.rows());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..rows {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Whether `(r, c)` (0-based) is a box of the diagram.
    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        (c as u32) < self.part(r)
    }

    /// Set difference of diagrams as a box list, if `other`'s diagram is
    /// contained in `self`'s.
    pub fn diagram_difference(&self, other: &Partition) -> Option<Vec<(usize, usize)>> {
        if other.rows() > self.rows() {
            return None;
        }
        let mut boxes = Vec::new();
        for r in 0..self.rows() {
            let (big, small) = (self.part(r), other.part(r));
            if small > big {
                return None;
            }
            for c in small..big {
                boxes.push((r, c as usize));
            }
        }
        Some(boxes)
    }

    /// The diagram as rows of `#`, one string per row.
    pub fn to_ascii(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "#".repeat(p as usize))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses "5,4,4,2,2" (empty string = empty partition).
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let mut p = max.min(remaining);
        while p >= 1 {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle for juxtaposition: paint both diagrams into a
    /// boolean grid, columns of the first then columns of the second, and
    /// read off row lengths.
    fn grid_juxtapose(a: &Partition, b: &Partition) -> Partition {
        let ca = a.columns();
        let cb = b.columns();
        let height = ca
            .iter()
            .chain(cb.iter())
            .copied()
            .max()
            .unwrap_or(0) as usize;
        let mut grid = vec![vec![false; ca.len() + cb.len()]; height];
        for (j, &h) in ca.iter().chain(cb.iter()).enumerate() {
            for row in grid.iter_mut().take(h as usize) {
                row[j] = true;
            }
        }
        let mut parts: Vec<u32> = grid
            .iter()
            .map(|row| row.iter().filter(|&&b| b).count() as u32)
            .collect();
        parts.retain(|&x| x > 0);
        Partition::new(parts).unwrap()
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn dual_values() {
        assert_eq!(p(&[2, 2, 1, 1]).dual(), p(&[4, 2]));
        assert_eq!(p(&[5, 4, 4, 2, 2]).dual(), p(&[5, 5, 3, 3, 1]));
        assert_eq!(p(&[5, 5, 4, 1, 1]).dual(), p(&[5, 3, 3, 3, 2]));
        assert_eq!(p(&[4]).dual(), p(&[1, 1, 1, 1]));
        assert_eq!(Partition::empty().dual(), Partition::empty());
    }

    #[test]
    fn dual_is_involutive_small() {
        for n in 0..=12 {
            for q in partitions_of(n) {
                assert_eq!(q.dual().dual(), q);
            }
        }
    }

    #[test]
    fn admissibility_cases() {
        use FormKind::*;
        // every even part with even multiplicity
        assert!(p(&[5, 4, 4, 2, 2]).is_admissible(Orthogonal));
        assert!(!p(&[5, 4, 2, 2]).is_admissible(Orthogonal));
        assert!(p(&[3, 1]).is_admissible(Orthogonal));
        // every odd part with even multiplicity
        assert!(p(&[5, 5, 4, 1, 1]).is_admissible(Symplectic));
        assert!(!p(&[3, 1]).is_admissible(Symplectic));
        assert!(p(&[2, 2, 1, 1]).is_admissible(Symplectic));
        assert!(p(&[2, 2, 1, 1]).is_admissible(Orthogonal));
        assert!(Partition::empty().is_admissible(Orthogonal));
        assert!(Partition::empty().is_admissible(Symplectic));
    }

    #[test]
    fn padded_columns_parity() {
        assert_eq!(
            p(&[2, 2, 1, 1]).padded_columns(FormKind::Orthogonal),
            vec![4, 2, 0]
        );
        assert_eq!(
            p(&[2, 2, 1, 1]).padded_columns(FormKind::Symplectic),
            vec![4, 2]
        );
        assert_eq!(
            p(&[5, 4, 4, 2, 2]).padded_columns(FormKind::Orthogonal),
            vec![5, 5, 3, 3, 1]
        );
        assert_eq!(
            p(&[5, 5, 4, 1, 1]).padded_columns(FormKind::Symplectic),
            vec![5, 3, 3, 3, 2, 0]
        );
    }

    #[test]
    fn juxtapose_matches_grid_oracle_frozen_cases() {
        // Frozen from the grid oracle, e.g. columns (5) ++ (5,3) glue to
        // column lengths (5,5,3), whose diagram has rows (3,3,3,2,2).
        let cases = [
            (p(&[1, 1, 1, 1, 1]), p(&[2, 2, 2, 1, 1]), p(&[3, 3, 3, 2, 2])),
            (p(&[3, 3, 3, 3, 1]), p(&[2, 2, 1, 1]), p(&[5, 5, 4, 4, 1])),
            (p(&[2, 2, 1]), p(&[2, 2]), p(&[4, 4, 1])),
        ];
        for (a, b, expected) in cases {
            assert_eq!(grid_juxtapose(&a, &b), expected, "oracle self-check");
            assert_eq!(a.juxtapose(&b).unwrap(), expected, "{a} ++ {b}");
        }
    }

    #[test]
    fn juxtapose_exhaustive_against_oracle() {
        let pool: Vec<Partition> = (0..=6).flat_map(partitions_of).collect();
        for a in &pool {
            for b in &pool {
                let ok = a.is_empty()
                    || b.is_empty()
                    || a.columns().last().unwrap() >= &b.columns()[0];
                match a.juxtapose(b) {
                    Ok(j) => {
                        assert!(ok);
                        assert_eq!(j, grid_juxtapose(a, b));
                        assert_eq!(j.size(), a.size() + b.size());
                    }
                    Err(Error::ConcatenationOrder(_)) => assert!(!ok),
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }

    #[test]
    fn juxtapose_column_condition_violation() {
        let err = p(&[1, 1]).juxtapose(&p(&[2, 2, 2])).unwrap_err();
        assert!(matches!(err, Error::ConcatenationOrder(_)));
    }

    #[test]
    fn juxtapose_is_associative_when_defined() {
        let pool: Vec<Partition> = (1..=5).flat_map(partitions_of).collect();
        for a in &pool {
            for b in &pool {
                for c in &pool {
                    let left = a.juxtapose(b).and_then(|ab| ab.juxtapose(c));
                    let right = b.juxtapose(c).and_then(|bc| a.juxtapose(&bc));
                    if let (Ok(l), Ok(r)) = (&left, &right) {
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn springer_fiber_dimension_values() {
        assert_eq!(p(&[2, 2, 1, 1]).springer_fiber_dimension(), 7);
        assert_eq!(p(&[1, 1, 1, 1]).springer_fiber_dimension(), 6);
        assert_eq!(p(&[4]).springer_fiber_dimension(), 0);
        assert_eq!(Partition::empty().springer_fiber_dimension(), 0);
    }

    #[test]
    fn dominance_basics() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])));
        assert!(p(&[4]).dominates(&p(&[1, 1, 1, 1])));
    }

    #[test]
    fn partitions_of_counts() {
        // 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn parse_round_trip() {
        let q = parse_partition("5, 4,4,2,2").unwrap();
        assert_eq!(q, p(&[5, 4, 4, 2, 2]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(parse_partition("2,3").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn serde_as_bare_array() {
        let q = p(&[2, 2, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[2,2,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    prop_compose! {
        fn arb_partition()(mut parts in proptest::collection::vec(1u32..9, 0..9)) -> Partition {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        }
    }

    proptest! {
        #[test]
        fn prop_dual_involution(q in arb_partition()) {
            prop_assert_eq!(q.dual().dual(), q);
        }

        #[test]
        fn prop_dual_preserves_size(q in arb_partition()) {
            prop_assert_eq!(q.dual().size(), q.size());
        }

        #[test]
        fn prop_dominance_dualizes_reversed(a in arb_partition(), b in arb_partition()) {
            if a.size() == b.size() && a.dominates(&b) {
                prop_assert!(b.dual().dominates(&a.dual()));
            }
        }
    }
}
