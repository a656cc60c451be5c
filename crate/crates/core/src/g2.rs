//! Exact model of the 14-dimensional simple Lie algebra of type G2 over
//! the rationals, built from literal structure-constant data: the six
//! positive roots, the Cartan pairing table, and the 12×12 matrix `N` of
//! root-vector structure constants. The bracket is assembled from that
//! data by the standard three-case rule, and everything downstream —
//! the adjoint matrix of an upper-triangular nilpotent, its exact rank,
//! the polynomial equations of the minimal nilpotent stratum and of a
//! distinguished 4-dimensional subvariety, and Jacobian smooth/singular
//! tests — is computed with exact rational arithmetic.
//!
//! Ranks of the adjoint matrix classify the nilpotent strata: the only
//! possible values are 0, 6, 8, 10, 12, and rank equals the dimension of
//! the conjugation orbit. Grid and random-sample classifiers re-verify
//! the advertised equivalences point by point and report histograms.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num::{BigRational, FromPrimitive, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Rationals};

pub const DIM: usize = 14;

/// Possible ranks of the adjoint matrix of an element of the nilradical;
/// each is the dimension of the corresponding nilpotent orbit.
pub const ORBIT_RANKS: [usize; 5] = [0, 6, 8, 10, 12];

/// Positive roots as (a, b) meaning a·(short simple) + b·(long simple),
/// in the fixed order used everywhere in this module.
pub const POSITIVE_ROOTS: [(i64, i64); 6] =
    [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];

/// `(⟨γ_i, short⟩, ⟨γ_i, long⟩)` for the i-th positive root: the
/// coefficients of the coroot element `h_i` on the dual Cartan basis.
pub const CARTAN_PAIRING: [(i64, i64); 6] =
    [(2, -3), (-1, 2), (-1, 3), (1, 0), (1, -1), (0, 1)];

/// Root-vector structure constants `N[idx(γ)][idx(δ)]`, where labels
/// -6..-1, 1..6 map to indices 0..11. Positions with `γ + δ = 0` (the
/// antidiagonal) are holes — the bracket never reads them there, because
/// that case is handled by the coroot rule — and are stored as 0.
const N: [[i64; 12]; 12] = [
    [0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, -1],
    [0, 0, 0, 3, 0, 3, -2, 0, 2, 0, -1, -1],
    [0, 0, -3, 0, 0, -2, -3, 1, 0, 2, 0, 1],
    [0, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1],
    [0, 0, -3, 2, 1, 0, 0, 0, -3, -2, 1, 0],
    [0, -1, 2, 3, 0, 0, 0, -1, -2, 3, 0, 0],
    [-1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0],
    [-1, 0, -2, 0, -1, 3, 2, 0, 0, 3, 0, 0],
    [1, 1, 0, -2, 0, 2, -3, 0, -3, 0, 0, 0],
    [1, 0, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0],
    [0, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0],
];

/// Root label (−6..−1, 1..6) of a basis index, `None` for the two Cartan
/// basis vectors. Basis order: root vectors for −γ_6..−γ_1, the two
/// Cartan duals, then root vectors for γ_1..γ_6.
fn basis_label(b: usize) -> Option<i32> {
    match b {
        0..=5 => Some(b as i32 - 6),
        8..=13 => Some(b as i32 - 7),
        _ => None,
    }
}

fn label_basis(l: i32) -> usize {
    debug_assert!((1..=6).contains(&l.abs()));
    if l < 0 {
        (l + 6) as usize
    } else {
        (l + 7) as usize
    }
}

fn n_index(l: i32) -> usize {
    if l < 0 {
        (l + 6) as usize
    } else {
        (l + 5) as usize
    }
}

fn root_vec(l: i32) -> (i64, i64) {
    let (a, b) = POSITIVE_ROOTS[(l.unsigned_abs() - 1) as usize];
    if l > 0 {
        (a, b)
    } else {
        (-a, -b)
    }
}

fn root_label(v: (i64, i64)) -> Option<i32> {
    for (i, &(a, b)) in POSITIVE_ROOTS.iter().enumerate() {
        if v == (a, b) {
            return Some(i as i32 + 1);
        }
        if v == (-a, -b) {
            return Some(-(i as i32) - 1);
        }
    }
    None
}

/// The structure constant for a pair of root labels: `None` when the
/// roots are opposite (the table has a hole there), otherwise the literal
/// matrix entry (0 when the sum is not a root).
pub fn structure_constant(gamma: i32, delta: i32) -> Option<i64> {
    if gamma + delta == 0 {
        return None;
    }
    Some(N[n_index(gamma)][n_index(delta)])
}

/// Human-readable basis vector name, e.g. `e(-g6)`, `h(short)`, `e(g3)`.
pub fn basis_name(b: usize) -> String {
    match basis_label(b) {
        Some(l) if l < 0 => format!("e(-g{})", -l),
        Some(l) => format!("e(g{l})"),
        None if b == 6 => "h(short)".to_string(),
        None => "h(long)".to_string(),
    }
}

/// Bracket of two basis vectors as a sparse integer vector
/// `[(basis index, coefficient)]`, assembled from the literal tables:
/// root vectors multiply through `N`, opposite root vectors produce the
/// coroot combination from the pairing table, and Cartan elements act by
/// the root's coordinate.
pub fn bracket_basis(i: usize, j: usize) -> Vec<(usize, i64)> {
    match (basis_label(i), basis_label(j)) {
        (None, None) => Vec::new(),
        (None, Some(l)) => {
            let (a, b) = root_vec(l);
            let c = if i == 6 { a } else { b };
            if c == 0 {
                Vec::new()
            } else {
                vec![(j, c)]
            }
        }
        (Some(l), None) => {
            let (a, b) = root_vec(l);
            let c = if j == 6 { a } else { b };
            if c == 0 {
                Vec::new()
            } else {
                vec![(i, -c)]
            }
        }
        (Some(g), Some(d)) => {
            if g + d == 0 {
                // [e_γ, e_{-γ}] = h_γ for positive γ; antisymmetric.
                let pos = g.max(d);
                let sign = if g > 0 { 1 } else { -1 };
                let (pa, pb) = CARTAN_PAIRING[(pos - 1) as usize];
                let mut out = Vec::new();
                if pa != 0 {
                    out.push((6, sign * pa));
                }
                if pb != 0 {
                    out.push((7, sign * pb));
                }
                out
            } else {
                let (ga, gb) = root_vec(g);
                let (da, db) = root_vec(d);
                match root_label((ga + da, gb + db)) {
                    Some(s) => {
                        let c = N[n_index(g)][n_index(d)];
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(label_basis(s), c)]
                        }
                    }
                    None => Vec::new(),
                }
            }
        }
    }
}

/// Bilinear extension of the basis bracket to integer coordinate vectors.
pub fn bracket_vectors(u: &[i64; DIM], v: &[i64; DIM]) -> [i64; DIM] {
    let mut out = [0i64; DIM];
    for (i, &ui) in u.iter().enumerate() {
        if ui == 0 {
            continue;
        }
        for (j, &vj) in v.iter().enumerate() {
            if vj == 0 {
                continue;
            }
            for (k, c) in bracket_basis(i, j) {
                out[k] += ui * vj * c;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// nilpotent elements of the nilradical and their adjoint matrices
// ---------------------------------------------------------------------------

/// An element `Σ x_i e(g_i)` of the nilradical, with exact rational
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Nilpotent {
    pub coeffs: [BigRational; 6],
}

impl G2Nilpotent {
    pub fn new(coeffs: [BigRational; 6]) -> Self {
        G2Nilpotent { coeffs }
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        G2Nilpotent {
            coeffs: c.map(|v| BigRational::from_i64(v).unwrap()),
        }
    }

    /// Parses six comma-separated rationals, e.g. `0,1/2,0,0,-3,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let f = Rationals;
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected 6 comma-separated coordinates, got {}",
                parts.len()
            )));
        }
        let mut coeffs = core::array::from_fn::<_, 6, _>(|_| BigRational::zero());
        for (c, p) in coeffs.iter_mut().zip(&parts) {
            *c = f.parse(p)?;
        }
        Ok(G2Nilpotent { coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn render(&self) -> String {
        let cells: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        cells.join(",")
    }
}

/// Sparse symbolic adjoint matrix assembled once from the bracket:
/// entries `(row, col, coefficient, variable index 1..6)` meaning the
/// matrix of `[x, ·]` has `coefficient · x_var` added at `(row, col)`.
fn assembled_entries() -> &'static Vec<(usize, usize, i64, usize)> {
    static CELL: OnceLock<Vec<(usize, usize, i64, usize)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for var in 1..=6usize {
            let i = label_basis(var as i32);
            for j in 0..DIM {
                for (k, c) in bracket_basis(i, j) {
                    out.push((k, j, c, var));
                }
            }
        }
        out
    })
}

/// The matrix the adjoint action was originally tabulated as, kept as
/// literal `(row, col, coefficient, variable)` data and used as a golden
/// cross-check of the assembled bracket.
pub fn displayed_adjoint_entries() -> &'static [(usize, usize, i64, usize)] {
    &[
        (1, 0, -1, 2),
        (2, 0, -1, 3),
        (2, 1, -1, 1),
        (3, 0, 1, 4),
        (3, 2, 2, 1),
        (4, 0, 1, 5),
        (4, 3, 3, 1),
        (5, 1, 1, 4),
        (5, 2, -2, 3),
        (5, 3, -1, 2),
        (6, 1, 1, 5),
        (6, 2, 1, 4),
        (6, 3, -1, 3),
        (6, 4, -1, 2),
        (6, 5, 2, 1),
        (7, 0, 1, 6),
        (7, 1, -1, 5),
        (7, 3, 3, 3),
        (7, 4, 2, 2),
        (7, 5, -3, 1),
        (8, 2, 1, 5),
        (8, 3, -2, 4),
        (8, 4, -1, 3),
        (8, 6, -1, 1),
        (9, 1, 1, 6),
        (9, 5, 3, 3),
        (9, 7, -1, 2),
        (10, 2, 1, 6),
        (10, 5, 2, 4),
        (10, 6, -1, 3),
        (10, 7, -1, 3),
        (10, 8, 1, 2),
        (10, 9, -1, 1),
        (11, 3, -1, 6),
        (11, 5, -1, 5),
        (11, 6, -2, 4),
        (11, 7, -1, 4),
        (11, 8, 2, 3),
        (11, 10, -2, 1),
        (12, 4, -1, 6),
        (12, 6, -3, 5),
        (12, 7, -1, 5),
        (12, 8, -3, 4),
        (12, 11, 3, 1),
        (13, 6, -3, 6),
        (13, 7, -2, 6),
        (13, 9, -1, 5),
        (13, 10, -3, 4),
        (13, 11, 3, 3),
        (13, 12, 1, 2),
    ]
}

fn entries_to_matrix(
    entries: &[(usize, usize, i64, usize)],
    x: &G2Nilpotent,
) -> Matrix<Rationals> {
    let f = Rationals;
    let mut m = Matrix::zero(f, DIM, DIM);
    for &(r, c, co, var) in entries {
        let add = BigRational::from_i64(co).unwrap() * &x.coeffs[var - 1];
        let cur = m.get(r, c).clone();
        m.set(r, c, cur + add);
    }
    m
}

/// The 14×14 matrix of `[x, ·]` on the fixed basis, assembled from the
/// structure-constant tables.
pub fn adjoint_matrix(x: &G2Nilpotent) -> Matrix<Rationals> {
    entries_to_matrix(assembled_entries(), x)
}

/// The same matrix evaluated from the literal tabulated entries.
pub fn displayed_adjoint_matrix(x: &G2Nilpotent) -> Matrix<Rationals> {
    entries_to_matrix(displayed_adjoint_entries(), x)
}

/// Exact rank of the adjoint matrix = dimension of the conjugation orbit.
/// Always one of [`ORBIT_RANKS`].
pub fn orbit_rank(x: &G2Nilpotent) -> usize {
    let r = adjoint_matrix(x).rank();
    assert!(
        ORBIT_RANKS.contains(&r),
        "internal invariant: adjoint rank {r} outside {ORBIT_RANKS:?}"
    );
    r
}

/// Conventional name of the orbit with the given adjoint rank.
pub fn orbit_dimension_label(rank: usize) -> &'static str {
    match rank {
        0 => "zero orbit",
        6 => "minimal orbit",
        8 => "next-to-minimal orbit",
        10 => "subregular orbit",
        12 => "regular orbit",
        _ => "not an orbit dimension",
    }
}

// ---------------------------------------------------------------------------
// polynomial equations and Jacobian tests
// ---------------------------------------------------------------------------

/// Sparse polynomial in the six nilradical coordinates with rational
/// coefficients; exponents are stored per-variable.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    terms: BTreeMap<[u8; 6], BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(coefficient, exponent vector)` terms.
    pub fn from_integer_terms(terms: &[(i64, [u8; 6])]) -> Self {
        let mut map = BTreeMap::new();
        for &(c, e) in terms {
            if c != 0 {
                let entry = map
                    .entry(e)
                    .or_insert_with(BigRational::zero);
                *entry += BigRational::from_i64(c).unwrap();
            }
        }
        map.retain(|_, v: &mut BigRational| !v.is_zero());
        Poly { terms: map }
    }

    pub fn eval(&self, x: &G2Nilpotent) -> BigRational {
        let mut acc = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (e, xi) in exps.iter().zip(&x.coeffs) {
                for _ in 0..*e {
                    term *= xi;
                }
            }
            acc += term;
        }
        acc
    }

    /// Partial derivative with respect to variable `i` (0-based).
    pub fn partial(&self, i: usize) -> Poly {
        let mut map = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = *exps;
            e[i] -= 1;
            let c = coeff * BigRational::from_u8(exps[i]).unwrap();
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, v: &mut BigRational| !v.is_zero());
        Poly { terms: map }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (exps, coeff) in &self.terms {
            let mut factors = Vec::new();
            if !coeff.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(coeff.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

/// The four polynomials cutting the minimal nilpotent stratum out of the
/// nilradical: `x1`, `x2·x4 − x3²`, `x3·x5 + x4²`, `x2·x5 + x3·x4`.
pub fn minimal_orbit_polys() -> &'static [Poly] {
    static CELL: OnceLock<Vec<Poly>> = OnceLock::new();
    CELL.get_or_init(|| {
        vec![
            Poly::from_integer_terms(&[(1, [1, 0, 0, 0, 0, 0])]),
            Poly::from_integer_terms(&[
                (1, [0, 1, 0, 1, 0, 0]),
                (-1, [0, 0, 2, 0, 0, 0]),
            ]),
            Poly::from_integer_terms(&[
                (1, [0, 0, 1, 0, 1, 0]),
                (1, [0, 0, 0, 2, 0, 0]),
            ]),
            Poly::from_integer_terms(&[
                (1, [0, 1, 0, 0, 1, 0]),
                (1, [0, 0, 1, 1, 0, 0]),
            ]),
        ]
    })
}

/// The two polynomials cutting the distinguished 4-dimensional subvariety
/// whose nonzero locus with `(x1, x3) ≠ (0, 0)` is a smooth component of
/// the next-to-minimal stratum: `x2` and `3x4² + 4x3·x5 − 4x1·x6`.
pub fn smooth_component_polys() -> &'static [Poly] {
    static CELL: OnceLock<Vec<Poly>> = OnceLock::new();
    CELL.get_or_init(|| {
        vec![
            Poly::from_integer_terms(&[(1, [0, 1, 0, 0, 0, 0])]),
            Poly::from_integer_terms(&[
                (3, [0, 0, 0, 2, 0, 0]),
                (4, [0, 0, 1, 0, 1, 0]),
                (-4, [1, 0, 0, 0, 0, 1]),
            ]),
        ]
    })
}

/// True iff `x ≠ 0` and all four minimal-stratum polynomials vanish;
/// equivalent to `orbit_rank(x) == 6`.
pub fn in_minimal_orbit(x: &G2Nilpotent) -> bool {
    !x.is_zero() && minimal_orbit_polys().iter().all(|p| p.eval(x).is_zero())
}

/// True iff both polynomials of the distinguished subvariety vanish
/// (its closure, including 0).
pub fn on_smooth_component_closure(x: &G2Nilpotent) -> bool {
    smooth_component_polys().iter().all(|p| p.eval(x).is_zero())
}

/// True iff `x` lies on the smooth locus of the distinguished subvariety:
/// on its closure and `(x1, x3) ≠ (0, 0)`; equivalent to adjoint rank 8
/// there.
pub fn in_smooth_component(x: &G2Nilpotent) -> bool {
    on_smooth_component_closure(x)
        && !(x.coeffs[0].is_zero() && x.coeffs[2].is_zero())
}

/// Exact rank of the Jacobian matrix of `polys` at `x`. The point must
/// satisfy every equation; otherwise `Domain` is returned.
pub fn jacobian_rank(polys: &[Poly], x: &G2Nilpotent) -> Result<usize> {
    for (i, p) in polys.iter().enumerate() {
        let v = p.eval(x);
        if !v.is_zero() {
            return Err(Error::Domain(format!(
                "point {} does not satisfy equation {i} ({} = {v})",
                x.render(),
                p.render()
            )));
        }
    }
    let f = Rationals;
    let m = Matrix::from_fn(f, polys.len(), 6, |i, j| polys[i].partial(j).eval(x));
    Ok(m.rank())
}

// ---------------------------------------------------------------------------
// classification sweeps
// ---------------------------------------------------------------------------

/// Default bound on the grid radius; see [`classify_grid`].
pub const DEFAULT_MAX_GRID: i64 = 3;

fn grid_limit() -> i64 {
    std::env::var("SPRINGERKIT_MAX_GRID")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_GRID)
}

/// Outcome of a pointwise classification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub source: String,
    pub points: u64,
    /// (adjoint rank, number of points) sorted by rank.
    pub rank_histogram: Vec<(usize, u64)>,
    /// Human-readable descriptions of violated equivalences; empty on
    /// success.
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The per-point checks shared by both sweeps: rank in the allowed set,
/// rank 6 iff the minimal-stratum equations hold, and on the
/// distinguished subvariety rank ≤ 8 with equality iff `(x1, x3) ≠ 0`.
fn classify_point(
    x: &G2Nilpotent,
    rank_x: &G2Nilpotent,
    hist: &mut BTreeMap<usize, u64>,
    failures: &mut Vec<String>,
) {
    let r = adjoint_matrix(rank_x).rank();
    *hist.entry(r).or_insert(0) += 1;
    if !ORBIT_RANKS.contains(&r) {
        failures.push(format!("rank {r} outside {ORBIT_RANKS:?} at {}", x.render()));
    }
    if in_minimal_orbit(x) != (r == 6) {
        failures.push(format!(
            "rank-6/minimal-equations mismatch at {} (rank {r})",
            x.render()
        ));
    }
    if on_smooth_component_closure(x) {
        if r > 8 {
            failures.push(format!(
                "rank {r} > 8 on the distinguished subvariety at {}",
                x.render()
            ));
        }
        if (r == 8) != in_smooth_component(x) {
            failures.push(format!(
                "rank-8/smooth-locus mismatch at {} (rank {r})",
                x.render()
            ));
        }
    }
}

/// Classifies every integer point with coordinates in `[-radius, radius]`
/// (`(2·radius+1)^6` points). Guarded by [`DEFAULT_MAX_GRID`], which the
/// environment variable `SPRINGERKIT_MAX_GRID` overrides.
pub fn classify_grid(radius: i64) -> Result<ClassificationReport> {
    if radius < 0 {
        return Err(Error::Range("negative grid radius".into()));
    }
    let limit = grid_limit();
    if radius > limit {
        return Err(Error::Scale(format!(
            "grid radius {radius} exceeds {limit} \
             (set SPRINGERKIT_MAX_GRID to override)"
        )));
    }
    let mut hist = BTreeMap::new();
    let mut failures = Vec::new();
    let mut coords = [-radius; 6];
    let mut points = 0u64;
    loop {
        let x = G2Nilpotent::from_i64(coords);
        classify_point(&x, &x, &mut hist, &mut failures);
        points += 1;
        let mut pos = 6;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] <= radius {
                break;
            }
            coords[pos] = -radius;
            if pos == 0 {
                pos = usize::MAX; // signal done
                break;
            }
        }
        if pos == usize::MAX {
            break;
        }
    }
    Ok(ClassificationReport {
        source: format!("integer grid, radius {radius}"),
        points,
        rank_histogram: hist.into_iter().collect(),
        failures,
    })
}

/// Classifies `points` random rational points (numerators in [-12, 12],
/// denominators in [1, 8]), seeded deterministically. The rank is
/// computed after clearing denominators — the adjoint matrix is linear in
/// x, so scaling by a nonzero constant does not change its rank — while
/// the polynomial equivalences are evaluated at the original rational
/// point.
pub fn classify_random(points: u64, seed: u64) -> Result<ClassificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hist = BTreeMap::new();
    let mut failures = Vec::new();
    for _ in 0..points {
        let mut coeffs = core::array::from_fn::<_, 6, _>(|_| BigRational::zero());
        let mut denom_lcm = num::BigInt::one();
        for c in coeffs.iter_mut() {
            let num = rng.gen_range(-12i64..=12);
            let den = rng.gen_range(1i64..=8);
            *c = BigRational::new(num.into(), den.into());
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let x = G2Nilpotent::new(coeffs);
        let scale = BigRational::from_integer(denom_lcm);
        let cleared = G2Nilpotent::new(core::array::from_fn(|i| {
            &x.coeffs[i] * &scale
        }));
        classify_point(&x, &cleared, &mut hist, &mut failures);
    }
    Ok(ClassificationReport {
        source: format!("{points} random rational points, seed {seed}"),
        points,
        rank_histogram: hist.into_iter().collect(),
        failures,
    })
}
