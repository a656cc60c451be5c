//! Standard Young tableaux and domino tableaux.
//!
//! A standard tableau on n boxes is the familiar object: entries 1..n,
//! rows and columns strictly increasing. We use it as a chain of diagrams:
//! the "prefix shape" at i is the set of boxes with entry at most i.
//!
//! A domino tableau on n boxes has entries 0..floor(n/2): the entry 0
//! appears exactly once, in the top-left box, iff n is odd; every other
//! entry appears exactly twice, in two adjacent boxes (a horizontal or
//! vertical domino); rows and columns are weakly increasing. Prefix shapes
//! are defined the same way, and a tableau is *admissible* for a form kind
//! when every prefix shape satisfies that kind's parity condition.
//!
//! The two central operations:
//!
//! * **concatenation** `d1 + d2`: keep the columns of `d1`, append the
//!   columns of `d2` with all entries shifted up by `floor(n1/2)`. Defined
//!   when `n2` is even and the last column of `d1` is at least as long as
//!   the first column of `d2`.
//! * **canonical construction**: every admissible shape has a
//!   distinguished admissible tableau, built by concatenating elementary
//!   blocks `d(n, k)` read off consecutive pairs of its column lengths.

use std::fmt;

use num::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{FormKind, Partition};

/// Display helper: rows as comma-separated entries, rows joined by ';'.
macro_rules! fmt_rows_display {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let rows: Vec<String> = self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            f.write_str(&rows.join(";"))
        }
    };
}

// ---------------------------------------------------------------------------
// standard tableaux
// ---------------------------------------------------------------------------

/// A standard Young tableau: entries 1..n, each once, rows and columns
/// strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::InvalidTableau("row lengths not weakly decreasing".into()))?;
        let n = shape.size();
        let mut seen = vec![false; n as usize + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n {
                    return Err(Error::InvalidTableau(format!(
                        "entry {e} outside 1..{n}"
                    )));
                }
                if seen[e as usize] {
                    return Err(Error::InvalidTableau(format!("entry {e} repeated")));
                }
                seen[e as usize] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("row not strictly increasing".into()));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r - 1][c] >= rows[r][c] {
                    return Err(Error::InvalidTableau(
                        "column not strictly increasing".into(),
                    ));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn n(&self) -> u32 {
        self.shape.size()
    }

    /// Boxes holding entries `<= i`, as a diagram.
    pub fn prefix_shape(&self, i: u32) -> Partition {
        let parts: Vec<u32> = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e <= i).count() as u32)
            .filter(|&l| l > 0)
            .collect();
        Partition::new(parts).expect("prefix rows of a tableau are weakly decreasing")
    }

    /// The full chain `empty = shape_0 ⊂ ... ⊂ shape_n = shape`.
    pub fn shape_chain(&self) -> Vec<Partition> {
        (0..=self.n()).map(|i| self.prefix_shape(i)).collect()
    }

    /// Entries read row by row, left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rows as digit strings (entries concatenated without separators);
    /// only sensible while all entries are single digits.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    pub fn to_ascii(&self) -> String {
        ascii_grid(&self.rows)
    }
}

impl fmt::Display for StandardTableau {
    fmt_rows_display!();
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau[{self}]")
    }
}

/// All standard tableaux of the given shape, sorted by reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let rows_template: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut filled: Vec<Vec<u32>> = rows_template.iter().map(|&l| vec![0; l]).collect();
    let mut lengths = vec![0usize; rows_template.len()];
    let mut out = Vec::new();
    fn rec(
        entry: u32,
        n: u32,
        template: &[usize],
        lengths: &mut [usize],
        filled: &mut [Vec<u32>],
        out: &mut Vec<StandardTableau>,
    ) {
        if entry > n {
            let rows = filled.to_vec();
            out.push(StandardTableau {
                shape: Partition::new(template.iter().map(|&l| l as u32).collect()).unwrap(),
                rows,
            });
            return;
        }
        for r in 0..template.len() {
            let c = lengths[r];
            if c < template[r] && (r == 0 || lengths[r - 1] > c) {
                filled[r][c] = entry;
                lengths[r] += 1;
                rec(entry + 1, n, template, lengths, filled, out);
                lengths[r] -= 1;
            }
        }
    }
    rec(1, n, &rows_template, &mut lengths, &mut filled, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Number of standard tableaux of the given shape, by the hook length
/// formula: `n! / prod(hooks)`.
pub fn standard_count(shape: &Partition) -> BigUint {
    let n = shape.size();
    let dual = shape.dual();
    let mut numer = BigUint::from(1u32);
    for i in 1..=n {
        numer *= BigUint::from(i);
    }
    let mut denom = BigUint::from(1u32);
    for r in 0..shape.rows() {
        for c in 0..shape.part(r) as usize {
            let hook = (shape.part(r) as usize - c) + (dual.part(c) as usize - r) - 1;
            denom *= BigUint::from(hook);
        }
    }
    numer / denom
}

// ---------------------------------------------------------------------------
// domino tableaux
// ---------------------------------------------------------------------------

/// A domino tableau; see the module documentation for the exact rules.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DominoTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl DominoTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::InvalidTableau("row lengths not weakly decreasing".into()))?;
        let n = shape.size();
        let m = n / 2;

        // Position map entry -> boxes.
        let mut positions: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m as usize + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e > m {
                    return Err(Error::InvalidTableau(format!(
                        "entry {e} exceeds floor(n/2) = {m}"
                    )));
                }
                positions[e as usize].push((r, c));
            }
        }
        if n % 2 == 1 {
            if positions[0] != vec![(0, 0)] {
                return Err(Error::InvalidTableau(
                    "odd size needs the entry 0 exactly once, in the top-left box".into(),
                ));
            }
        } else if !positions[0].is_empty() {
            return Err(Error::InvalidTableau("entry 0 forbidden for even size".into()));
        }
        for e in 1..=m as usize {
            let p = &positions[e];
            if p.len() != 2 {
                return Err(Error::InvalidTableau(format!(
                    "entry {e} appears {} times, expected 2",
                    p.len()
                )));
            }
            if !adjacent(p[0], p[1]) {
                return Err(Error::InvalidTableau(format!(
                    "the two boxes of entry {e} are not adjacent"
                )));
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau("row not weakly increasing".into()));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r - 1][c] > rows[r][c] {
                    return Err(Error::InvalidTableau(
                        "column not weakly increasing".into(),
                    ));
                }
            }
        }
        let t = DominoTableau { shape, rows };
        // Monotonicity makes every prefix a diagram; double-check cheaply.
        debug_assert!(t.shape_chain().windows(2).all(|w| w[1]
            .diagram_difference(&w[0])
            .is_some()));
        Ok(t)
    }

    pub fn empty() -> Self {
        DominoTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of boxes.
    pub fn n(&self) -> u32 {
        self.shape.size()
    }

    /// Largest entry, `floor(n/2)`.
    pub fn max_entry(&self) -> u32 {
        self.n() / 2
    }

    /// Columns, top to bottom, left to right.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.shape.part(0) as usize;
        (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .filter(|row| c < row.len())
                    .map(|row| row[c])
                    .collect()
            })
            .collect()
    }

    fn from_columns(cols: Vec<Vec<u32>>) -> Result<Self> {
        let height = cols.iter().map(Vec::len).max().unwrap_or(0);
        let rows: Vec<Vec<u32>> = (0..height)
            .map(|r| {
                cols.iter()
                    .filter(|col| r < col.len())
                    .map(|col| col[r])
                    .collect()
            })
            .collect();
        DominoTableau::new(rows)
    }

    /// Boxes holding entries `<= i`, as a diagram.
    pub fn prefix_shape(&self, i: u32) -> Partition {
        let parts: Vec<u32> = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e <= i).count() as u32)
            .filter(|&l| l > 0)
            .collect();
        Partition::new(parts).expect("prefix rows of a tableau are weakly decreasing")
    }

    /// The chain of prefix shapes for `i = 0..=max_entry`. For odd size the
    /// first element is the single box holding 0; for even size it is empty.
    pub fn shape_chain(&self) -> Vec<Partition> {
        (0..=self.max_entry()).map(|i| self.prefix_shape(i)).collect()
    }

    /// Admissible for `kind`: every prefix shape satisfies the parity
    /// condition of `kind`.
    pub fn is_admissible(&self, kind: FormKind) -> bool {
        self.shape_chain().iter().all(|s| s.is_admissible(kind))
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rows as digit strings; only sensible while all entries are single
    /// digits.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    pub fn to_ascii(&self) -> String {
        ascii_grid(&self.rows)
    }

    /// Concatenation: columns of `self`, then columns of `other` with
    /// entries shifted by `floor(n1/2)`. The empty tableau is neutral on
    /// both sides; otherwise `other` must have even size and the column
    /// condition must hold.
    pub fn concat(&self, other: &DominoTableau) -> Result<DominoTableau> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if !other.n().is_multiple_of(2) {
            return Err(Error::Parity(format!(
                "right operand must have even size, got {}",
                other.n()
            )));
        }
        let left = self.columns();
        let right = other.columns();
        let (last, first) = (left.last().unwrap().len(), right[0].len());
        if last < first {
            return Err(Error::ConcatenationOrder(format!(
                "last column of left operand has length {last} < first column length {first}"
            )));
        }
        let shift = self.n() / 2;
        let mut cols = left;
        cols.extend(
            right
                .into_iter()
                .map(|col| col.into_iter().map(|e| e + shift).collect()),
        );
        // The shift pushes every right entry above every left entry, and the
        // right operand has no 0, so the glued grid is again a valid tableau.
        DominoTableau::from_columns(cols)
    }

    /// The unique standard tableau whose shape chain interleaves this
    /// tableau's: each domino is split into its two boxes, the one whose
    /// removal leaves a diagram coming last. Concretely the left/top box of
    /// domino i gets the smaller entry (2i-1, 2i for even size; 2i, 2i+1
    /// for odd size, with 1 in the 0-box).
    pub fn refine_to_standard(&self) -> StandardTableau {
        let n = self.n();
        let odd = n % 2 == 1;
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|row| vec![0; row.len()])
            .collect();
        if odd {
            rows[0][0] = 1;
        }
        for i in 1..=self.max_entry() {
            let mut boxes: Vec<(usize, usize)> = Vec::new();
            for (r, row) in self.rows.iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if e == i {
                        boxes.push((r, c));
                    }
                }
            }
            boxes.sort(); // row-major: left box of a horizontal domino,
                          // top box of a vertical one, comes first
            let (first, second) = if odd { (2 * i, 2 * i + 1) } else { (2 * i - 1, 2 * i) };
            rows[boxes[0].0][boxes[0].1] = first;
            rows[boxes[1].0][boxes[1].1] = second;
        }
        StandardTableau::new(rows).expect("refinement of a valid domino tableau is standard")
    }
}

impl fmt::Display for DominoTableau {
    fmt_rows_display!();
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominoTableau[{self}]")
    }
}

fn adjacent(a: (usize, usize), b: (usize, usize)) -> bool {
    let dr = a.0.abs_diff(b.0);
    let dc = a.1.abs_diff(b.1);
    dr + dc == 1
}

fn ascii_grid(rows: &[Vec<u32>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|e| format!("{e:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses "0,3;1,4" into rows (entries ',', rows ';'), then validates.
pub fn parse_domino(s: &str) -> Result<DominoTableau> {
    DominoTableau::new(parse_rows(s)?)
}

/// Parses the same row syntax into a standard tableau.
pub fn parse_standard(s: &str) -> Result<StandardTableau> {
    StandardTableau::new(parse_rows(s)?)
}

fn parse_rows(s: &str) -> Result<Vec<Vec<u32>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect()
        })
        .collect()
}

/// The elementary block `d(n, k)`: shape `(2^k, 1^(n-2k))`, horizontal
/// dominoes 1..k in the first k rows, then vertical dominoes down the first
/// column (preceded by the 0-box when n is odd, which forces k = 0).
///
/// `k = 0` is allowed for every n >= 0; `k >= 1` requires n even.
pub fn elementary_block(n: u32, k: u32) -> Result<DominoTableau> {
    if 2 * k > n {
        return Err(Error::Range(format!("k = {k} too large for n = {n}")));
    }
    if k >= 1 && !n.is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "d({n}, {k}) with k >= 1 needs even n"
        )));
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 1..=k {
        rows.push(vec![i, i]);
    }
    let m = n / 2;
    if n % 2 == 1 {
        rows.push(vec![0]);
    }
    for i in (k + 1)..=m {
        rows.push(vec![i]);
        rows.push(vec![i]);
    }
    if rows.is_empty() {
        return Ok(DominoTableau::empty());
    }
    DominoTableau::new(rows)
}

/// The canonical admissible tableau of an admissible shape: concatenate
/// elementary blocks read off the (parity-padded) column lengths — for an
/// orthogonal shape `d(c1, 0) + d(c2+c3, c3) + d(c4+c5, c5) + ...`, for a
/// symplectic shape `d(c1+c2, c2) + d(c3+c4, c4) + ...`.
pub fn canonical_admissible(shape: &Partition, kind: FormKind) -> Result<DominoTableau> {
    if !shape.is_admissible(kind) {
        return Err(Error::Admissibility(format!(
            "{shape} is not {kind}-admissible"
        )));
    }
    let cols = shape.padded_columns(kind);
    let mut terms: Vec<DominoTableau> = Vec::new();
    let mut pairs_from = 0;
    if kind == FormKind::Orthogonal {
        terms.push(elementary_block(cols[0], 0)?);
        pairs_from = 1;
    }
    for pair in cols[pairs_from..].chunks(2) {
        // Admissibility makes every pair sum even, so these blocks exist.
        terms.push(elementary_block(pair[0] + pair[1], pair[1])?);
    }
    let mut acc = DominoTableau::empty();
    for t in terms {
        acc = acc.concat(&t)?;
    }
    debug_assert_eq!(acc.shape(), shape);
    debug_assert!(acc.is_admissible(kind));
    Ok(acc)
}

/// Predicted number of irreducible components of the orbital variety
/// attached to an admissible tableau's flag stratum: 2 when the form is
/// orthogonal and the size is even, otherwise 1.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentPrediction {
    pub count: u8,
    pub reason: String,
}

pub fn predicted_component_count(shape: &Partition, kind: FormKind) -> Result<ComponentPrediction> {
    if !shape.is_admissible(kind) {
        return Err(Error::Admissibility(format!(
            "{shape} is not {kind}-admissible"
        )));
    }
    let n = shape.size();
    let (count, reason) = if kind == FormKind::Orthogonal && n.is_multiple_of(2) {
        (
            2,
            "orthogonal form on an even-dimensional space: the special \
             orthogonal group has two flag-variety components"
                .to_string(),
        )
    } else {
        (1, "symplectic form or odd dimension".to_string())
    };
    Ok(ComponentPrediction { count, reason })
}

/// All domino tableaux of the given shape, optionally keeping only those
/// admissible for `kind`. Sorted by reading word.
pub fn enumerate_domino(shape: &Partition, kind: Option<FormKind>) -> Vec<DominoTableau> {
    let n = shape.size();
    let template: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut filled: Vec<Vec<u32>> = template.iter().map(|&l| vec![0; l]).collect();
    let mut lengths = vec![0usize; template.len()];

    // Admissibility is a condition on every prefix shape, so pruning a
    // partial filling whose current shape fails it is sound.
    let prefix_ok = |lengths: &[usize]| -> bool {
        let Some(kind) = kind else { return true };
        let parts: Vec<u32> = lengths
            .iter()
            .map(|&l| l as u32)
            .filter(|&l| l > 0)
            .collect();
        Partition::new(parts).map(|p| p.is_admissible(kind)).unwrap_or(false)
    };

    let mut out = Vec::new();
    struct Ctx<'a> {
        template: &'a [usize],
        m: u32,
        prefix_ok: &'a dyn Fn(&[usize]) -> bool,
    }
    fn rec(entry: u32, ctx: &Ctx, lengths: &mut [usize], filled: &mut [Vec<u32>], out: &mut Vec<Vec<Vec<u32>>>) {
        if entry > ctx.m {
            if lengths.iter().zip(ctx.template).all(|(&l, &t)| l == t) {
                out.push(filled.to_vec());
            }
            return;
        }
        // Horizontal domino in row r.
        for r in 0..ctx.template.len() {
            let c = lengths[r];
            if c + 2 <= ctx.template[r] && (r == 0 || lengths[r - 1] >= c + 2) {
                filled[r][c] = entry;
                filled[r][c + 1] = entry;
                lengths[r] += 2;
                if (ctx.prefix_ok)(lengths) {
                    rec(entry + 1, ctx, lengths, filled, out);
                }
                lengths[r] -= 2;
            }
        }
        // Vertical domino in rows r, r+1 at column c.
        for r in 0..ctx.template.len().saturating_sub(1) {
            let c = lengths[r];
            if lengths[r + 1] == c && c < ctx.template[r + 1] && (r == 0 || lengths[r - 1] > c) {
                filled[r][c] = entry;
                filled[r + 1][c] = entry;
                lengths[r] += 1;
                lengths[r + 1] += 1;
                if (ctx.prefix_ok)(lengths) {
                    rec(entry + 1, ctx, lengths, filled, out);
                }
                lengths[r] -= 1;
                lengths[r + 1] -= 1;
            }
        }
    }

    if n % 2 == 1 {
        if template.is_empty() {
            return Vec::new();
        }
        filled[0][0] = 0;
        lengths[0] = 1;
        if !prefix_ok(&lengths) {
            return Vec::new();
        }
    }
    let ctx = Ctx {
        template: &template,
        m: n / 2,
        prefix_ok: &prefix_ok,
    };
    let mut raw = Vec::new();
    rec(1, &ctx, &mut lengths, &mut filled, &mut raw);
    for rows in raw {
        let t = DominoTableau::new(rows).expect("enumerated filling is valid");
        debug_assert!(kind.is_none_or(|k| t.is_admissible(k)));
        out.push(t);
    }
    out.sort_by_key(|t| t.reading_word());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dom(s: &str) -> DominoTableau {
        parse_domino(s).unwrap()
    }

    // -- standard tableaux --------------------------------------------------

    #[test]
    fn standard_validation() {
        assert!(parse_standard("1,2;3,4").is_ok());
        assert!(parse_standard("1,3;2,4").is_ok());
        assert!(parse_standard("2,1;3,4").is_err()); // row not increasing
        assert!(parse_standard("1,2;2,3").is_err()); // repeated entry
        assert!(parse_standard("1,4;2,3").is_err()); // column not increasing
        assert!(parse_standard("1;2,3").is_err()); // ragged upward
    }

    #[test]
    fn standard_enumeration_counts_match_hooks() {
        for n in 0..=7u32 {
            for shape in partitions_of(n) {
                let listed = enumerate_standard(&shape).len();
                let counted = standard_count(&shape);
                assert_eq!(
                    BigUint::from(listed),
                    counted,
                    "shape {shape}"
                );
            }
        }
    }

    #[test]
    fn standard_count_frozen_values() {
        assert_eq!(standard_count(&part(&[2, 2, 1, 1])), BigUint::from(9u32));
        assert_eq!(standard_count(&part(&[2, 1])), BigUint::from(2u32));
        assert_eq!(standard_count(&part(&[3, 2])), BigUint::from(5u32));
        assert_eq!(standard_count(&part(&[1, 1, 1, 1, 1])), BigUint::from(1u32));
        assert_eq!(standard_count(&Partition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn standard_enumeration_is_sorted_and_valid() {
        let list = enumerate_standard(&part(&[2, 2, 1]));
        let words: Vec<_> = list.iter().map(|t| t.reading_word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        for t in &list {
            StandardTableau::new(t.rows().to_vec()).unwrap();
        }
    }

    #[test]
    fn standard_prefix_chain() {
        let t = parse_standard("1,3;2,4").unwrap();
        let chain = t.shape_chain();
        assert_eq!(chain[0], Partition::empty());
        assert_eq!(chain[1], part(&[1]));
        assert_eq!(chain[2], part(&[1, 1]));
        assert_eq!(chain[3], part(&[2, 1]));
        assert_eq!(chain[4], part(&[2, 2]));
    }

    // -- domino tableaux: validation -----------------------------------------

    #[test]
    fn domino_validation() {
        assert!(parse_domino("1,1;2,2").is_ok());
        assert!(parse_domino("1,2;1,2").is_ok());
        assert!(parse_domino("0,1,1;2,2").is_ok());
        // entry 0 in even size
        assert!(parse_domino("0,1,1,2").is_err());
        // 0 not at top-left
        assert!(parse_domino("1,0;1,2,2").is_err());
        // non-adjacent pair
        assert!(parse_domino("1,2;2,1").is_err());
        // an entry appearing once
        assert!(parse_domino("1,1;2,3,3").is_err());
        // weakly decreasing row
        assert!(parse_domino("2,1;1,2").is_err());
    }

    #[test]
    fn domino_prefix_chain_and_admissibility() {
        let d = dom("1,1;2,2;3;3");
        assert_eq!(
            d.shape_chain(),
            vec![Partition::empty(), part(&[2]), part(&[2, 2]), part(&[2, 2, 1, 1])]
        );
        // prefix (2) has an even part with odd multiplicity: not orthogonal
        assert!(!d.is_admissible(FormKind::Orthogonal));
        assert!(d.is_admissible(FormKind::Symplectic));

        let d2 = dom("1,3;1,3;2;2");
        assert_eq!(
            d2.shape_chain(),
            vec![
                Partition::empty(),
                part(&[1, 1]),
                part(&[1, 1, 1, 1]),
                part(&[2, 2, 1, 1])
            ]
        );
        assert!(d2.is_admissible(FormKind::Symplectic));
        assert!(d2.is_admissible(FormKind::Orthogonal));
    }

    // -- domino tableaux: enumeration oracle ---------------------------------

    /// Independent oracle: enumerate all tilings of the diagram into
    /// dominoes (plus the forced 0-box for odd sizes) by pairing the first
    /// free cell with a neighbor, then try all assignments of 1..m to the
    /// dominoes and keep those the validator accepts.
    fn oracle_enumerate(shape: &Partition, kind: Option<FormKind>) -> Vec<DominoTableau> {
        let cells: Vec<(usize, usize)> = (0..shape.rows())
            .flat_map(|r| (0..shape.part(r) as usize).map(move |c| (r, c)))
            .collect();
        let n = cells.len();
        let mut tilings: Vec<Vec<((usize, usize), (usize, usize))>> = Vec::new();
        let mut used = vec![false; n];
        if n % 2 == 1 {
            // 0 occupies the first cell; the validator rejects any filling
            // that would have needed it elsewhere.
            used[0] = true;
        }
        fn tile(
            cells: &[(usize, usize)],
            used: &mut Vec<bool>,
            acc: &mut Vec<((usize, usize), (usize, usize))>,
            out: &mut Vec<Vec<((usize, usize), (usize, usize))>>,
        ) {
            let Some(first) = used.iter().position(|&u| !u) else {
                out.push(acc.clone());
                return;
            };
            used[first] = true;
            let (r, c) = cells[first];
            for (j, &(r2, c2)) in cells.iter().enumerate() {
                if !used[j] && adjacent((r, c), (r2, c2)) {
                    used[j] = true;
                    acc.push(((r, c), (r2, c2)));
                    tile(cells, used, acc, out);
                    acc.pop();
                    used[j] = false;
                }
            }
            used[first] = false;
        }
        tile(&cells, &mut used, &mut Vec::new(), &mut tilings);

        let m = n / 2;
        let mut found = Vec::new();
        for tiling in tilings {
            // All assignments of entries 1..m to the dominoes.
            let mut perm: Vec<u32> = (1..=m as u32).collect();
            permute(&mut perm, 0, &mut |p| {
                let mut rows: Vec<Vec<u32>> =
                    (0..shape.rows()).map(|r| vec![0; shape.part(r) as usize]).collect();
                for (d, &(a, b)) in tiling.iter().enumerate() {
                    rows[a.0][a.1] = p[d];
                    rows[b.0][b.1] = p[d];
                }
                if let Ok(t) = DominoTableau::new(rows) {
                    if kind.map_or(true, |k| t.is_admissible(k)) && !found.contains(&t) {
                        found.push(t);
                    }
                }
            });
        }
        found.sort_by_key(|t| t.reading_word());
        found
    }

    fn permute(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn domino_enumeration_matches_oracle() {
        for shape in [
            part(&[2, 2]),
            part(&[2, 2, 1, 1]),
            part(&[3, 1]),
            part(&[2, 1, 1, 1]),
            part(&[3, 3]),
            part(&[2, 2, 2]),
            part(&[4, 2]),
            part(&[3, 2]),
        ] {
            for kind in [None, Some(FormKind::Orthogonal), Some(FormKind::Symplectic)] {
                let fast = enumerate_domino(&shape, kind);
                let slow = oracle_enumerate(&shape, kind);
                assert_eq!(fast, slow, "shape {shape}, kind {kind:?}");
            }
        }
    }

    #[test]
    fn domino_enumeration_frozen_counts() {
        // Oracle-frozen values.
        assert_eq!(enumerate_domino(&part(&[2, 2, 1, 1]), None).len(), 3);
        assert_eq!(
            enumerate_domino(&part(&[2, 2, 1, 1]), Some(FormKind::Symplectic)).len(),
            3
        );
        // In the orthogonal case the vertical-domino fillings survive the
        // prefix checks ((1,1) and (1,1,1,1) have no even parts) while the
        // horizontal-first filling dies at prefix (2).
        assert_eq!(
            enumerate_domino(&part(&[2, 2, 1, 1]), Some(FormKind::Orthogonal)).len(),
            2
        );
        assert_eq!(enumerate_domino(&part(&[2, 2]), None).len(), 2);
        assert_eq!(
            enumerate_domino(&part(&[2, 2]), Some(FormKind::Orthogonal)).len(),
            1
        );
        assert_eq!(enumerate_domino(&part(&[1, 1, 1, 1]), None).len(), 1);
        assert_eq!(enumerate_domino(&part(&[3, 1]), None).len(), 1);
    }

    #[test]
    fn the_three_tableaux_of_2211() {
        let list = enumerate_domino(&part(&[2, 2, 1, 1]), Some(FormKind::Symplectic));
        let expected = [dom("1,1;2,2;3;3"), dom("1,2;1,2;3;3"), dom("1,3;1,3;2;2")];
        for e in &expected {
            assert!(list.contains(e), "missing {e}");
        }
        assert_eq!(list.len(), 3);
    }

    // -- elementary blocks ----------------------------------------------------

    #[test]
    fn elementary_block_layouts() {
        assert_eq!(elementary_block(8, 3).unwrap(), dom("1,1;2,2;3,3;4;4"));
        assert_eq!(elementary_block(6, 3).unwrap(), dom("1,1;2,2;3,3"));
        assert_eq!(elementary_block(4, 1).unwrap(), dom("1,1;2;2"));
        assert_eq!(elementary_block(2, 0).unwrap(), dom("1;1"));
        assert_eq!(elementary_block(5, 0).unwrap(), dom("0;1;1;2;2"));
        assert_eq!(elementary_block(0, 0).unwrap(), DominoTableau::empty());
        assert!(matches!(elementary_block(5, 1), Err(Error::Parity(_))));
        assert!(matches!(elementary_block(4, 3), Err(Error::Range(_))));
    }

    // -- concatenation --------------------------------------------------------

    #[test]
    fn concat_worked_example() {
        // (0,1,1;2,3,5;2,3,5;4,6,6;4) + (1,1;2,2;3;3) shifts the right
        // entries by 6 and glues columns.
        let left = dom("0,1,1;2,3,5;2,3,5;4,6,6;4");
        let right = dom("1,1;2,2;3;3");
        let result = left.concat(&right).unwrap();
        assert_eq!(result, dom("0,1,1,7,7;2,3,5,8,8;2,3,5,9;4,6,6,9;4"));
    }

    #[test]
    fn concat_neutral_and_errors() {
        let d = dom("1,1;2;2");
        assert_eq!(d.concat(&DominoTableau::empty()).unwrap(), d);
        assert_eq!(DominoTableau::empty().concat(&d).unwrap(), d);
        // odd right operand
        let odd = dom("0;1;1");
        assert!(matches!(d.concat(&odd), Err(Error::Parity(_))));
        // column condition: last column of (1;1) has length 2... use a
        // genuinely short left column instead.
        let narrow = dom("1,1"); // columns (1,1)
        let tall = dom("1;1"); // first column length 2
        assert!(matches!(
            narrow.concat(&tall),
            Err(Error::ConcatenationOrder(_))
        ));
    }

    #[test]
    fn concat_is_associative_on_elementary_blocks() {
        let a = elementary_block(5, 0).unwrap();
        let b = elementary_block(8, 3).unwrap();
        let c = elementary_block(4, 1).unwrap();
        let left = a.concat(&b).unwrap().concat(&c).unwrap();
        let right = a.concat(&b.concat(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn concat_shape_matches_juxtaposition() {
        let a = elementary_block(5, 0).unwrap();
        let b = elementary_block(8, 3).unwrap();
        let d = a.concat(&b).unwrap();
        assert_eq!(d.shape(), &a.shape().juxtapose(b.shape()).unwrap());
    }

    // -- canonical construction ------------------------------------------------

    #[test]
    fn canonical_orthogonal_worked_example() {
        // Shape (5,4,4,2,2), columns (5,5,3,3,1):
        // d(5,0) + d(5+3,3) + d(3+1,1).
        let d = canonical_admissible(&part(&[5, 4, 4, 2, 2]), FormKind::Orthogonal).unwrap();
        assert_eq!(
            d.row_strings(),
            vec!["03377", "1448", "1558", "26", "26"]
        );
        assert!(d.is_admissible(FormKind::Orthogonal));
    }

    #[test]
    fn canonical_symplectic_worked_example() {
        // Shape (5,5,4,1,1), columns (5,3,3,3,2) padded to (5,3,3,3,2,0):
        // d(8,3) + d(6,3) + d(2,0).
        let d = canonical_admissible(&part(&[5, 5, 4, 1, 1]), FormKind::Symplectic).unwrap();
        assert_eq!(
            d.row_strings(),
            vec!["11558", "22668", "3377", "4", "4"]
        );
        assert!(d.is_admissible(FormKind::Symplectic));
    }

    #[test]
    fn canonical_2211_symplectic() {
        // Columns (4,2): d(6,2) = (1,1;2,2;3;3).
        let d = canonical_admissible(&part(&[2, 2, 1, 1]), FormKind::Symplectic).unwrap();
        assert_eq!(d, dom("1,1;2,2;3;3"));
    }

    #[test]
    fn canonical_rejects_inadmissible() {
        assert!(matches!(
            canonical_admissible(&part(&[3, 1]), FormKind::Symplectic),
            Err(Error::Admissibility(_))
        ));
        assert!(matches!(
            canonical_admissible(&part(&[2, 1]), FormKind::Orthogonal),
            Err(Error::Admissibility(_))
        ));
    }

    #[test]
    fn canonical_all_admissible_shapes_up_to_12() {
        for n in 0..=12u32 {
            for shape in partitions_of(n) {
                for kind in [FormKind::Orthogonal, FormKind::Symplectic] {
                    match canonical_admissible(&shape, kind) {
                        Ok(d) => {
                            assert!(shape.is_admissible(kind));
                            assert_eq!(d.shape(), &shape);
                            assert!(d.is_admissible(kind), "{shape} {kind}");
                        }
                        Err(Error::Admissibility(_)) => {
                            assert!(!shape.is_admissible(kind));
                        }
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    // -- refinement --------------------------------------------------------------

    #[test]
    fn refine_even_and_odd() {
        // Even size: dominoes i -> (2i-1, 2i).
        let d = dom("1,1;2,2;3;3");
        let t = d.refine_to_standard();
        assert_eq!(t.row_strings(), vec!["12", "34", "5", "6"]);
        // Odd size: 0 -> 1, dominoes i -> (2i, 2i+1).
        let d2 = dom("0;1;1;2;2");
        let t2 = d2.refine_to_standard();
        assert_eq!(t2.row_strings(), vec!["1", "2", "3", "4", "5"]);
        // Vertical dominoes split top-first.
        let d3 = dom("1,2;1,2;3;3");
        let t3 = d3.refine_to_standard();
        assert_eq!(t3.row_strings(), vec!["13", "24", "5", "6"]);
    }

    #[test]
    fn refine_chain_interleaves() {
        for shape in [part(&[2, 2, 1, 1]), part(&[3, 3]), part(&[3, 2, 1, 1, 1])] {
            for d in enumerate_domino(&shape, None) {
                let t = d.refine_to_standard();
                let n = d.n();
                // Prefix shapes agree where they must: shape at 2i+parity in
                // the refinement equals shape at i in the tableau.
                for i in 0..=d.max_entry() {
                    let at = if n % 2 == 0 { 2 * i } else { 2 * i + 1 };
                    assert_eq!(t.prefix_shape(at.min(n)), d.prefix_shape(i));
                }
            }
        }
    }

    // -- component count prediction ------------------------------------------------

    #[test]
    fn component_count_rules() {
        let two = predicted_component_count(&part(&[2, 2, 1, 1]), FormKind::Orthogonal).unwrap();
        assert_eq!(two.count, 2);
        let one_sp = predicted_component_count(&part(&[2, 2, 1, 1]), FormKind::Symplectic).unwrap();
        assert_eq!(one_sp.count, 1);
        let one_odd = predicted_component_count(&part(&[5, 4, 4, 2, 2]), FormKind::Orthogonal).unwrap();
        assert_eq!(one_odd.count, 1);
        assert!(predicted_component_count(&part(&[3, 1]), FormKind::Symplectic).is_err());
    }

    #[test]
    fn serde_shapes() {
        let d = dom("1,1;2;2");
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["shape"], serde_json::json!([2, 1, 1]));
        assert_eq!(v["rows"], serde_json::json!([[1, 1], [2], [2]]));
    }
}
