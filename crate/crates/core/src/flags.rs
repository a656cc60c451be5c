//! Complete flags over a small prime field stabilized by a nilpotent
//! matrix, enumerated by streaming rather than collection: the number of
//! flags grows roughly like q^(n(n-1)/2), so visitors receive flags one at
//! a time and only keep what they need.
//!
//! The enumeration exploits nilpotency: a line `V_{i+1}/V_i` of the
//! quotient is stabilized by the induced map iff it lies in the kernel of
//! that map (a nonzero eigenvalue is impossible), so the children of a
//! partial chain are exactly the lines of `preimage(x, V_i) / V_i`, each
//! produced once with a canonical representative — no deduplication pass.
//!
//! Labelling maps attach tableaux to flags through Jordan types of
//! subquotients:
//!
//! * [`syt_label`]: the standard tableau whose prefix shapes are the types
//!   of x on nested "centered" subquotients `V_{b_i}/V_{a_i}`;
//! * [`domino_label`]: the domino tableau read off the types of x on
//!   `V_{n-i}/V_i`; steps drop two boxes at a time, and the step is a
//!   domino for the flags of interest (isotropic ones in particular).
//!
//! For a space with a bilinear form, [`sigma`] reverses a flag through
//! orthogonal complements, isotropic flags are the fixed points, and
//! [`iota`] swaps the two Lagrangian extensions of `V_{m-1}` in an
//! even-dimensional orthogonal space.

use std::collections::{BTreeMap, HashMap, HashSet};

use num::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{induced_on_quotient, Field, Matrix, PrimeField, Subspace};
use crate::models::{skew_adjoint_model, standard_nilpotent, NilpotentModel};
use crate::partitions::{FormKind, Partition};
use crate::tableaux::{enumerate_domino, elementary_block, DominoTableau, StandardTableau};

pub type FMatrix = Matrix<PrimeField>;
pub type FSubspace = Subspace<PrimeField>;

/// Fields this module agrees to enumerate over.
pub const MAX_MODULUS: u64 = 5;
/// Default ambient-dimension guard; see [`flag_scale_limit`].
pub const DEFAULT_MAX_N: usize = 8;

/// The ambient-dimension guard, overridable through the environment
/// variable `SPRINGERKIT_MAX_N` for callers who know what they are asking.
pub fn flag_scale_limit() -> usize {
    std::env::var("SPRINGERKIT_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn check_scale(n: usize, q: u64) -> Result<()> {
    let limit = flag_scale_limit();
    if n > limit {
        return Err(Error::Scale(format!(
            "dimension {n} exceeds the flag enumeration guard {limit} \
             (set SPRINGERKIT_MAX_N to override)"
        )));
    }
    if q > MAX_MODULUS {
        return Err(Error::Scale(format!(
            "modulus {q} exceeds {MAX_MODULUS}; flag enumeration is meant for tiny fields"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// flags
// ---------------------------------------------------------------------------

/// A complete flag `0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_n = F^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Flag {
    spaces: Vec<FSubspace>,
}

impl Flag {
    /// Validates dimensions and containments.
    pub fn new(spaces: Vec<FSubspace>) -> Result<Self> {
        if spaces.is_empty() {
            return Err(Error::Subspace("a flag needs at least V_0".into()));
        }
        let n = spaces.len() - 1;
        for (i, s) in spaces.iter().enumerate() {
            if s.dim() != i || s.ambient() != n {
                return Err(Error::Subspace(format!(
                    "V_{i} has dimension {} in ambient {}, expected {i} in {n}",
                    s.dim(),
                    s.ambient()
                )));
            }
            if i > 0 && !s.contains(&spaces[i - 1]) {
                return Err(Error::Subspace(format!("V_{} not inside V_{i}", i - 1)));
            }
        }
        Ok(Flag { spaces })
    }

    fn from_chain_unchecked(spaces: Vec<FSubspace>) -> Self {
        Flag { spaces }
    }

    pub fn ambient(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, i: usize) -> &FSubspace {
        &self.spaces[i]
    }

    pub fn spaces(&self) -> &[FSubspace] {
        &self.spaces
    }

    pub fn is_stable_under(&self, x: &FMatrix) -> bool {
        self.spaces
            .iter()
            .all(|s| s.contains(&s.image_under(x)))
    }

    /// Applies an invertible matrix to every subspace.
    pub fn transform(&self, g: &FMatrix) -> Flag {
        Flag {
            spaces: self.spaces.iter().map(|s| s.image_under(g)).collect(),
        }
    }

    /// One line per proper subspace: `V_i: row; row; ...`.
    pub fn render(&self) -> String {
        let mut out = Vec::new();
        for (i, s) in self.spaces.iter().enumerate() {
            if i == 0 || i == self.ambient() {
                continue;
            }
            let rows: Vec<String> = s
                .basis_rows()
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                    format!("({})", cells.join(","))
                })
                .collect();
            out.push(format!("V_{i} = <{}>", rows.join(", ")));
        }
        out.join("; ")
    }
}

/// Canonical representatives (first nonzero coefficient 1, lexicographic
/// coefficient order) of the lines of `within / sub`. Each line of the
/// quotient is hit exactly once.
fn lines_mod(sub: &FSubspace, within: &FSubspace) -> Vec<Vec<u64>> {
    let reps = sub
        .complement_in(within)
        .expect("lines_mod caller guarantees containment");
    let field = *within.field();
    let q = field.modulus();
    let d = reps.len();
    let ambient = within.ambient();
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; d];
    for lead in 0..d {
        // coeffs[lead] = 1, later coordinates range over all of F_q.
        for c in coeffs.iter_mut() {
            *c = 0;
        }
        coeffs[lead] = 1;
        loop {
            let mut v = vec![0u64; ambient];
            for (c, rep) in coeffs.iter().zip(&reps).skip(lead) {
                if *c != 0 {
                    for (vj, rj) in v.iter_mut().zip(rep) {
                        *vj = field.add(vj, &field.mul(c, rj));
                    }
                }
            }
            out.push(v);
            // Odometer over positions lead+1..d.
            let mut pos = d;
            loop {
                if pos == lead + 1 {
                    pos = 0; // signal done
                    break;
                }
                pos -= 1;
                coeffs[pos] += 1;
                if coeffs[pos] < q {
                    break;
                }
                coeffs[pos] = 0;
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

/// Streams every x-stable complete flag to `visitor`, returning how many
/// there were. `x` must be nilpotent and small enough for the scale guard.
pub fn for_each_xstable_flag(x: &FMatrix, mut visitor: impl FnMut(&Flag)) -> Result<u64> {
    let n = x.ncols();
    assert_eq!(x.nrows(), n, "square matrix expected");
    let field = *x.field();
    check_scale(n, field.modulus())?;
    x.jordan_type()?; // rejects non-nilpotent input
    let mut chain = vec![FSubspace::zero(field, n)];
    let mut count = 0u64;
    fn rec(
        x: &FMatrix,
        n: usize,
        chain: &mut Vec<FSubspace>,
        visitor: &mut impl FnMut(&Flag),
        count: &mut u64,
    ) {
        let cur = chain.last().unwrap().clone();
        if cur.dim() == n {
            let flag = Flag::from_chain_unchecked(chain.clone());
            visitor(&flag);
            *count += 1;
            return;
        }
        let pre = cur.preimage_under(x);
        for v in lines_mod(&cur, &pre) {
            chain.push(cur.extended_by(&v));
            rec(x, n, chain, visitor, count);
            chain.pop();
        }
    }
    rec(x, n, &mut chain, &mut visitor, &mut count);
    Ok(count)
}

/// Collects the x-stable flags; only for inputs known to be small.
pub fn collect_xstable_flags(x: &FMatrix) -> Result<Vec<Flag>> {
    let mut out = Vec::new();
    for_each_xstable_flag(x, |f| out.push(f.clone()))?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// flags and bilinear forms
// ---------------------------------------------------------------------------

/// The flag `j -> (V_{n-j})^perp`; isotropic flags are its fixed points.
pub fn sigma(flag: &Flag, gram: &FMatrix) -> Flag {
    let n = flag.ambient();
    Flag {
        spaces: (0..=n).map(|j| flag.space(n - j).perp(gram)).collect(),
    }
}

pub fn is_isotropic_flag(flag: &Flag, gram: &FMatrix) -> bool {
    sigma(flag, gram) == *flag
}

/// The value of the form on a vector against itself.
fn quad(gram: &FMatrix, v: &[u64]) -> u64 {
    let f = *gram.field();
    let gv = gram.apply(v);
    v.iter()
        .zip(&gv)
        .fold(0u64, |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
}

/// Streams every isotropic x-stable complete flag of the model (which must
/// carry a form). A flag is isotropic when `sigma` fixes it; the
/// enumeration builds the half chain `V_0 ⊂ ... ⊂ V_m` with isotropic
/// lines stabilized by the induced maps and completes by complements,
/// which is automatically x-stable because x is skew-adjoint.
pub fn for_each_isotropic_xstable_flag(
    model: &NilpotentModel<PrimeField>,
    mut visitor: impl FnMut(&Flag),
) -> Result<u64> {
    let x = &model.x;
    let gram = model
        .gram
        .as_ref()
        .ok_or_else(|| Error::Model("isotropic enumeration needs a form".into()))?;
    let kind = model
        .kind
        .ok_or_else(|| Error::Model("isotropic enumeration needs a form kind".into()))?;
    let n = x.ncols();
    let field = *x.field();
    check_scale(n, field.modulus())?;
    model.validate()?;
    let m = n / 2;

    struct Ctx<'a> {
        x: &'a FMatrix,
        gram: &'a FMatrix,
        orthogonal: bool,
        n: usize,
        m: usize,
    }
    fn rec(
        ctx: &Ctx,
        chain: &mut Vec<FSubspace>,
        visitor: &mut impl FnMut(&Flag),
        count: &mut u64,
    ) {
        let cur = chain.last().unwrap().clone();
        if cur.dim() == ctx.m {
            let mut spaces = chain.clone();
            for j in (ctx.m + 1)..=ctx.n {
                let s = spaces[ctx.n - j].perp(ctx.gram);
                debug_assert!(s.contains(&s.image_under(ctx.x)));
                spaces.push(s);
            }
            let flag = Flag::from_chain_unchecked(spaces);
            debug_assert!(flag.is_stable_under(ctx.x));
            visitor(&flag);
            *count += 1;
            return;
        }
        let pre = cur.preimage_under(ctx.x).intersect(&cur.perp(ctx.gram));
        for v in lines_mod(&cur, &pre) {
            if ctx.orthogonal && quad(ctx.gram, &v) != 0 {
                continue;
            }
            chain.push(cur.extended_by(&v));
            rec(ctx, chain, visitor, count);
            chain.pop();
        }
    }

    let ctx = Ctx {
        x,
        gram,
        orthogonal: kind == FormKind::Orthogonal,
        n,
        m,
    };
    let mut chain = vec![FSubspace::zero(field, n)];
    let mut count = 0u64;
    rec(&ctx, &mut chain, &mut visitor, &mut count);
    Ok(count)
}

pub fn collect_isotropic_flags(model: &NilpotentModel<PrimeField>) -> Result<Vec<Flag>> {
    let mut out = Vec::new();
    for_each_isotropic_xstable_flag(model, |f| out.push(f.clone()))?;
    Ok(out)
}

/// Replaces the Lagrangian member `V_m` of an isotropic flag in an
/// even-dimensional orthogonal space by the other isotropic line of
/// `(V_{m-1})^perp / V_{m-1}`. Fixed-point free and involutive.
pub fn iota(flag: &Flag, gram: &FMatrix) -> Result<Flag> {
    let n = flag.ambient();
    if !n.is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "iota needs an even-dimensional space, got {n}"
        )));
    }
    if gram != &gram.transpose() {
        return Err(Error::Model("iota needs a symmetric form".into()));
    }
    if !is_isotropic_flag(flag, gram) {
        return Err(Error::Subspace("iota needs an isotropic flag".into()));
    }
    let m = n / 2;
    let w = flag.space(m - 1);
    let perp = w.perp(gram);
    let isotropic: Vec<Vec<u64>> = lines_mod(w, &perp)
        .into_iter()
        .filter(|v| quad(gram, v) == 0)
        .collect();
    // W^perp/W is a split 2-dimensional quadratic space (it contains the
    // line V_m/W), so it has exactly two isotropic lines.
    assert_eq!(
        isotropic.len(),
        2,
        "internal invariant: two Lagrangian extensions"
    );
    let mut spaces = flag.spaces.clone();
    for v in isotropic {
        let candidate = w.extended_by(&v);
        if &candidate != flag.space(m) {
            spaces[m] = candidate;
            let out = Flag { spaces };
            debug_assert!(is_isotropic_flag(&out, gram));
            return Ok(out);
        }
    }
    unreachable!("one of the two isotropic lines differs from V_m")
}

// ---------------------------------------------------------------------------
// labels
// ---------------------------------------------------------------------------

/// The standard tableau of an x-stable flag: entry j goes in the box by
/// which the type of x on `V_{b}/V_{a}` grows, where `(a, b)` sweep
/// inward as `(floor(i/2), n - ceil(i/2))`.
pub fn syt_label(x: &FMatrix, flag: &Flag) -> Result<StandardTableau> {
    let n = flag.ambient();
    let mut shapes = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let i = n - j;
        let (a, b) = (i / 2, n - i.div_ceil(2));
        let q = induced_on_quotient(x, flag.space(a), flag.space(b))?;
        shapes.push(q.jordan_type()?);
    }
    let mut rows: Vec<Vec<u32>> = shapes
        .last()
        .unwrap()
        .parts()
        .iter()
        .map(|&p| vec![0; p as usize])
        .collect();
    for j in 1..=n {
        let diff = shapes[j]
            .diagram_difference(&shapes[j - 1])
            .expect("centered subquotient shapes are nested");
        assert_eq!(diff.len(), 1, "internal invariant: one box per step");
        rows[diff[0].0][diff[0].1] = j as u32;
    }
    Ok(StandardTableau::new(rows).expect("nested one-box chain fills a standard tableau"))
}

/// The domino tableau of an x-stable flag, read off the types of x on the
/// centered quotients `V_{n-i}/V_i`. Errors with `NotDomino` when some
/// step drops two non-adjacent boxes — this genuinely happens for special
/// isotropic flags (the domino property only holds on a dense sublocus),
/// so callers enumerating all flags must treat `NotDomino` as data, not
/// as a bug.
pub fn domino_label(x: &FMatrix, flag: &Flag) -> Result<DominoTableau> {
    let n = flag.ambient();
    let m = n / 2;
    let mut shapes = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let i = m - k;
        let q = induced_on_quotient(x, flag.space(i), flag.space(n - i))?;
        shapes.push(q.jordan_type()?);
    }
    let mut rows: Vec<Vec<u32>> = shapes
        .last()
        .unwrap()
        .parts()
        .iter()
        .map(|&p| vec![0; p as usize])
        .collect();
    if n % 2 == 1 {
        let first = &shapes[0];
        if first.parts() != [1] {
            return Err(Error::NotDomino(format!(
                "innermost shape {first} is not a single box"
            )));
        }
        // rows[0][0] is already 0.
    } else if !shapes[0].is_empty() {
        return Err(Error::NotDomino(format!(
            "innermost shape {} is not empty",
            shapes[0]
        )));
    }
    for k in 1..=m {
        let diff = shapes[k]
            .diagram_difference(&shapes[k - 1])
            .expect("centered subquotient shapes are nested");
        if diff.len() != 2 {
            return Err(Error::NotDomino(format!(
                "step {k} adds {} boxes",
                diff.len()
            )));
        }
        let (a, b) = (diff[0], diff[1]);
        if a.0.abs_diff(b.0) + a.1.abs_diff(b.1) != 1 {
            return Err(Error::NotDomino(format!(
                "step {k} adds non-adjacent boxes ({},{}) and ({},{})",
                a.0, a.1, b.0, b.1
            )));
        }
        rows[a.0][a.1] = k as u32;
        rows[b.0][b.1] = k as u32;
    }
    DominoTableau::new(rows)
}

// ---------------------------------------------------------------------------
// kernel flag set and counting oracle
// ---------------------------------------------------------------------------

/// All complete flags refining the kernel chain
/// `0 ⊂ ker x ⊂ ker x^2 ⊂ ...`; every such flag is x-stable, and their
/// number is the product of the full flag counts of the chain's quotients.
pub fn kernel_flag_set(x: &FMatrix) -> Result<Vec<Flag>> {
    let n = x.ncols();
    let field = *x.field();
    check_scale(n, field.modulus())?;
    x.jordan_type()?;
    let mut boundaries = vec![FSubspace::zero(field, n)];
    let mut power = Matrix::identity(field, n);
    while boundaries.last().unwrap().dim() < n {
        power = power.mul(x);
        boundaries.push(Subspace::kernel_of(&power));
    }
    let mut out = Vec::new();
    fn rec(
        boundaries: &[FSubspace],
        target: usize,
        chain: &mut Vec<FSubspace>,
        out: &mut Vec<Flag>,
    ) {
        let cur = chain.last().unwrap().clone();
        if cur.dim() == boundaries.last().unwrap().dim() {
            out.push(Flag::from_chain_unchecked(chain.clone()));
            return;
        }
        let goal = &boundaries[target];
        if cur.dim() == goal.dim() {
            rec(boundaries, target + 1, chain, out);
            return;
        }
        for v in lines_mod(&cur, goal) {
            chain.push(cur.extended_by(&v));
            rec(boundaries, target, chain, out);
            chain.pop();
        }
    }
    let mut chain = vec![boundaries[0].clone()];
    rec(&boundaries, 1, &mut chain, &mut out);
    Ok(out)
}

/// Number of complete flags of a d-dimensional space over F_q:
/// `prod_{i=1..d} (q^i - 1)/(q - 1)`.
pub fn full_flag_count(d: usize, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut acc = BigUint::from(1u32);
    let mut qi = one.clone();
    for _ in 1..=d {
        qi *= &q;
        acc *= (&qi - &one) / (&q - &one);
    }
    acc
}

/// Counts x-stable complete flags for a standard nilpotent of the given
/// Jordan type by an independent recursion: sum over the lines of `ker x`
/// of the count for the quotient type, memoized on the type. No echelon
/// chains are built, so this is a genuine cross-check of the enumerator.
pub fn count_xstable_flags(shape: &Partition, q: u64) -> Result<BigUint> {
    let field = PrimeField::new(q)?;
    check_scale(shape.size() as usize, q)?;
    let mut memo: HashMap<Vec<u32>, BigUint> = HashMap::new();
    fn count(
        shape: &Partition,
        field: PrimeField,
        memo: &mut HashMap<Vec<u32>, BigUint>,
    ) -> BigUint {
        if shape.is_empty() {
            return BigUint::from(1u32);
        }
        if let Some(c) = memo.get(shape.parts()) {
            return c.clone();
        }
        let n = shape.size() as usize;
        let model = standard_nilpotent(field, shape);
        let ker = Subspace::kernel_of(&model.x);
        let zero = Subspace::zero(field, n);
        let full = Subspace::full(field, n);
        let mut total = BigUint::from(0u32);
        for v in lines_mod(&zero, &ker) {
            let line = zero.extended_by(&v);
            let quotient = induced_on_quotient(&model.x, &line, &full)
                .expect("kernel lines are x-stable");
            let t = quotient
                .jordan_type()
                .expect("quotient of a nilpotent is nilpotent");
            total += count(&t, field, memo);
        }
        memo.insert(shape.parts().to_vec(), total.clone());
        total
    }
    Ok(count(shape, field, &mut memo))
}

// ---------------------------------------------------------------------------
// fiber censuses
// ---------------------------------------------------------------------------

/// Histogram of a labelling map over a flag enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct FiberCensus {
    pub shape: Partition,
    pub q: u64,
    pub total: u64,
    /// Label (as `row;row` text) -> number of flags with that label.
    pub fibers: Vec<(String, u64)>,
    /// Flags whose subquotient chain is not a domino chain (possible for
    /// special isotropic flags; always 0 for the one-box labelling).
    pub unlabeled: u64,
}

/// Enumerates all x-stable flags of the standard nilpotent of `shape` and
/// groups them by standard-tableau label.
pub fn syt_fiber_census(shape: &Partition, q: u64) -> Result<FiberCensus> {
    let field = PrimeField::new(q)?;
    let model = standard_nilpotent(field, shape);
    let mut fibers: BTreeMap<String, u64> = BTreeMap::new();
    let total = for_each_xstable_flag(&model.x, |f| {
        let t = syt_label(&model.x, f).expect("x-stable flags always have a standard label");
        *fibers.entry(t.to_string()).or_insert(0) += 1;
    })?;
    Ok(FiberCensus {
        shape: shape.clone(),
        q,
        total,
        fibers: fibers.into_iter().collect(),
        unlabeled: 0,
    })
}

/// Enumerates all isotropic x-stable flags of the skew-adjoint model of
/// `shape` and groups them by domino-tableau label.
pub fn domino_fiber_census(shape: &Partition, kind: FormKind, q: u64) -> Result<FiberCensus> {
    let field = PrimeField::new(q)?;
    let model = skew_adjoint_model(field, shape, kind)?;
    let mut fibers: BTreeMap<String, u64> = BTreeMap::new();
    let mut unlabeled = 0u64;
    let total = for_each_isotropic_xstable_flag(&model, |f| {
        match domino_label(&model.x, f) {
            Ok(d) => *fibers.entry(d.to_string()).or_insert(0) += 1,
            // Special flags can fall outside the dense locus where the
            // subquotient chain moves by dominoes.
            Err(Error::NotDomino(_)) => unlabeled += 1,
            Err(e) => panic!("unexpected labelling failure: {e}"),
        }
    })?;
    Ok(FiberCensus {
        shape: shape.clone(),
        q,
        total,
        fibers: fibers.into_iter().collect(),
        unlabeled,
    })
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct AssertionOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn outcome(name: &str, pass: bool, detail: String) -> AssertionOutcome {
    AssertionOutcome {
        name: name.to_string(),
        pass,
        detail,
    }
}

/// Report of the six-dimensional symplectic worked example; see
/// [`sp6_suite`].
#[derive(Debug, Clone, Serialize)]
pub struct Sp6Report {
    pub q: u64,
    pub flag_count: usize,
    pub label_census: Vec<(String, usize)>,
    /// Flags outside the dense labelled locus (non-domino chains).
    pub unlabeled: usize,
    pub assertions: Vec<AssertionOutcome>,
}

impl Sp6Report {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }
}

/// Checks, over F_q, the full anatomy of the isotropic x-stable flags for
/// the symplectic nilpotent of type (2,2,1,1) on a 6-dimensional space:
///
/// 1. the label set is exactly the three admissible domino tableaux;
/// 2. three explicit closed conditions Z_1, Z_2, Z_3 cover all flags, and
///    Z_2, Z_3 split along the two isotropic lines L_1, L_2 of `im x`
///    under the descended form `chi(x u, x v) = omega(u, x v)`;
/// 3. each label's fiber sits inside its Z;
/// 4. the two halves of Z_2 are disjoint, while the halves of Z_3 meet
///    exactly in the flags with `V_2 = im x` (and do meet);
/// 5. an explicit involution h of the space — symplectic, commuting with
///    x, swapping L_1 and L_2 — swaps the corresponding halves.
pub fn sp6_suite(q: u64) -> Result<Sp6Report> {
    let field = PrimeField::new(q)?;
    let shape = Partition::new(vec![2, 2, 1, 1]).unwrap();
    let model = skew_adjoint_model(field, &shape, FormKind::Symplectic)?;
    let x = &model.x;
    let gram = model.gram.as_ref().unwrap();
    let n = 6usize;

    let full = Subspace::full(field, n);
    let zero = Subspace::zero(field, n);
    let im_x = full.image_under(x);
    let ker_x = Subspace::kernel_of(x);

    // chi on im x: chi(w1, w2) = omega(u1, w2) for any u1 with x u1 = w1.
    let chi_isotropic_lines: Vec<FSubspace> = lines_mod(&zero, &im_x)
        .into_iter()
        .filter(|w| {
            let u = x.solve(w).expect("w is in the image of x");
            let gw = gram.apply(w);
            let val = u
                .iter()
                .zip(&gw)
                .fold(0u64, |acc, (a, b)| field.add(&acc, &field.mul(a, b)));
            val == 0
        })
        .map(|w| zero.extended_by(&w))
        .collect();
    if chi_isotropic_lines.len() != 2 {
        return Err(Error::Model(format!(
            "expected two chi-isotropic lines in im x, found {}",
            chi_isotropic_lines.len()
        )));
    }
    let (l1, l2) = (&chi_isotropic_lines[0], &chi_isotropic_lines[1]);

    let flags = collect_isotropic_flags(&model)?;
    let mut label_census: BTreeMap<String, usize> = BTreeMap::new();
    let mut labels: Vec<Option<String>> = Vec::with_capacity(flags.len());
    let mut unlabeled = 0usize;
    for f in &flags {
        match domino_label(x, f) {
            Ok(d) => {
                let key = d.to_string();
                *label_census.entry(key.clone()).or_insert(0) += 1;
                labels.push(Some(key));
            }
            Err(Error::NotDomino(_)) => {
                unlabeled += 1;
                labels.push(None);
            }
            Err(e) => return Err(e),
        }
    }

    let d1 = elementary_block(6, 2).unwrap(); // 1,1;2,2;3;3
    let d2 = crate::tableaux::parse_domino("1,3;1,3;2;2").unwrap();
    let d3 = crate::tableaux::parse_domino("1,2;1,2;3;3").unwrap();

    let z1 = |f: &Flag| f.space(3).contains(&im_x) && ker_x.contains(f.space(3));
    let z2 = |f: &Flag| f.space(1).contains(&f.space(5).image_under(x));
    let z3 = |f: &Flag| {
        ker_x.contains(f.space(2)) && f.space(2).contains(&f.space(4).image_under(x))
    };
    let z2_half = |f: &Flag, l: &FSubspace| z2(f) && f.space(1) == l;
    let z3_half = |f: &Flag, l: &FSubspace| z3(f) && f.space(2).contains(l);

    let mut assertions = Vec::new();

    // 1. Label set.
    let expected_labels: HashSet<String> =
        [d1.to_string(), d2.to_string(), d3.to_string()].into();
    let got_labels: HashSet<String> = label_census.keys().cloned().collect();
    assertions.push(outcome(
        "labels are exactly the three admissible tableaux",
        got_labels == expected_labels
            && [&d1, &d2, &d3]
                .iter()
                .all(|d| d.is_admissible(FormKind::Symplectic)),
        format!("census: {label_census:?}"),
    ));

    // 2. Cover.
    let uncovered = flags
        .iter()
        .find(|f| !(z1(f) || z2(f) || z3(f)));
    assertions.push(outcome(
        "Z_1, Z_2, Z_3 cover every isotropic x-stable flag",
        uncovered.is_none(),
        uncovered.map_or_else(|| format!("{} flags covered", flags.len()), |f| f.render()),
    ));
    let z2_split_bad = flags
        .iter()
        .find(|f| z2(f) != (z2_half(f, l1) || z2_half(f, l2)));
    assertions.push(outcome(
        "Z_2 is the union of its two halves",
        z2_split_bad.is_none(),
        z2_split_bad.map_or_else(String::new, |f| f.render()),
    ));
    let z3_split_bad = flags
        .iter()
        .find(|f| z3(f) != (z3_half(f, l1) || z3_half(f, l2)));
    assertions.push(outcome(
        "Z_3 is the union of its two halves",
        z3_split_bad.is_none(),
        z3_split_bad.map_or_else(String::new, |f| f.render()),
    ));

    // 3. Fibers inside their Z.
    let fiber_ok = |key: &DominoTableau, z: &dyn Fn(&Flag) -> bool| {
        flags
            .iter()
            .zip(&labels)
            .filter(|(_, l)| l.as_deref() == Some(key.to_string().as_str()))
            .all(|(f, _)| z(f))
    };
    assertions.push(outcome(
        "each fiber lies in its closed condition",
        fiber_ok(&d1, &z1) && fiber_ok(&d2, &z2) && fiber_ok(&d3, &z3),
        String::new(),
    ));

    // 4. Intersections.
    let z2_overlap = flags.iter().find(|f| z2_half(f, l1) && z2_half(f, l2));
    assertions.push(outcome(
        "the halves of Z_2 are disjoint",
        z2_overlap.is_none(),
        z2_overlap.map_or_else(String::new, |f| f.render()),
    ));
    let mut z3_meet_ok = true;
    let mut z3_meet_count = 0usize;
    for f in &flags {
        let both = z3_half(f, l1) && z3_half(f, l2);
        let expected = z3(f) && *f.space(2) == im_x;
        if both != expected {
            z3_meet_ok = false;
        }
        if both {
            z3_meet_count += 1;
        }
    }
    assertions.push(outcome(
        "the halves of Z_3 meet exactly where V_2 = im x, nontrivially",
        z3_meet_ok && z3_meet_count > 0,
        format!("{z3_meet_count} flags in the intersection"),
    ));

    // 5. The swapping involution h: exchange the paired length-2 blocks
    // (coordinates 0,1 <-> 2,3), identity on the paired 1-blocks.
    let h = Matrix::from_fn(field, n, n, |i, j| {
        let hi = match i {
            0 => 2,
            1 => 3,
            2 => 0,
            3 => 1,
            other => other,
        };
        if j == hi {
            1
        } else {
            0
        }
    });
    let h_ok = h.mul(&h) == Matrix::identity(field, n)
        && h.transpose().mul(gram).mul(&h) == *gram
        && h.mul(x) == x.mul(&h)
        && &l1.image_under(&h) == l2;
    let set_image = |pred: &dyn Fn(&Flag) -> bool| -> HashSet<Flag> {
        flags
            .iter()
            .filter(|f| pred(f))
            .map(|f| f.transform(&h))
            .collect()
    };
    let set_of = |pred: &dyn Fn(&Flag) -> bool| -> HashSet<Flag> {
        flags.iter().filter(|f| pred(f)).cloned().collect()
    };
    let swap_ok = set_image(&|f| z2_half(f, l1)) == set_of(&|f| z2_half(f, l2))
        && set_image(&|f| z3_half(f, l1)) == set_of(&|f| z3_half(f, l2));
    assertions.push(outcome(
        "an explicit symplectic involution commuting with x swaps the halves",
        h_ok && swap_ok,
        format!("h involutive/symplectic/commuting: {h_ok}, swaps halves: {swap_ok}"),
    ));

    Ok(Sp6Report {
        q,
        flag_count: flags.len(),
        label_census: label_census.into_iter().collect(),
        unlabeled,
        assertions,
    })
}

/// Report of the column-split containment checks; see
/// [`split_containment_suite`].
#[derive(Debug, Clone, Serialize)]
pub struct SplitContainmentReport {
    pub shape: Partition,
    pub l1: usize,
    pub q: u64,
    /// The elementary block (n2, k2) formed by the columns past `l1`.
    pub tail_block: (u32, u32),
    /// Number of left-factor tableaux d1 whose concatenations were tested.
    pub left_labels: usize,
    pub flags_checked: u64,
    /// Flags whose label matched some d1 + d(n2, k2).
    pub labeled_flags: u64,
    pub per_label: Vec<(String, u64)>,
    pub counterexample: Option<String>,
}

impl SplitContainmentReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// For a Jordan type whose columns past `l1` form an elementary block
/// shape `(2^k2, 1^(n2-2k2))`, every x-stable flag labeled by any
/// concatenation `d1 + d(n2, k2)` must satisfy, with `m2 = n2/2`:
///
/// * `x^l1(V_{n-m2}) = V_{m2}`,
/// * `V_{n-m2} = (x^l1)^{-1}(V_{m2})`,
/// * `im(x^{l1+1}) ⊆ V_{m2} ⊆ ker x ∩ im(x^l1)`.
///
/// Verified over F_q by exhaustive enumeration; any violation is returned
/// as a counterexample.
pub fn split_containment_suite(shape: &Partition, l1: usize, q: u64) -> Result<SplitContainmentReport> {
    let cols = shape.columns();
    if l1 > cols.len() {
        return Err(Error::Range(format!(
            "l1 = {l1} exceeds the column count {}",
            cols.len()
        )));
    }
    let tail = &cols[l1..];
    if tail.len() > 2 {
        return Err(Error::Range(format!(
            "columns past l1 = {l1} must form at most two columns, got {}",
            tail.len()
        )));
    }
    let n2: u32 = tail.iter().sum();
    if !n2.is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "columns past l1 = {l1} hold {n2} boxes; an even number is required"
        )));
    }
    let k2 = tail.get(1).copied().unwrap_or(0);
    let m2 = (n2 / 2) as usize;
    let d2 = elementary_block(n2, k2)?;

    let left_shape = Partition::new(cols[..l1].to_vec())
        .expect("columns are weakly decreasing")
        .dual();
    let mut wanted: HashMap<String, u64> = HashMap::new();
    let left_tableaux = enumerate_domino(&left_shape, None);
    let left_count = if left_shape.is_empty() { 1 } else { left_tableaux.len() };
    if left_shape.is_empty() {
        wanted.insert(d2.to_string(), 0);
    } else {
        for d1 in &left_tableaux {
            let d = d1.concat(&d2)?;
            wanted.insert(d.to_string(), 0);
        }
    }

    let field = PrimeField::new(q)?;
    let model = standard_nilpotent(field, shape);
    let x = &model.x;
    let n = shape.size() as usize;
    let xl = x.pow(l1);
    let full = Subspace::full(field, n);
    let im_l = full.image_under(&xl);
    let im_l1 = full.image_under(&xl.mul(x));
    let ker_x = Subspace::kernel_of(x);

    let mut counterexample: Option<String> = None;
    let mut labeled: u64 = 0;
    let flags_checked = for_each_xstable_flag(x, |f| {
        let key = match domino_label(x, f) {
            Ok(d) => d.to_string(),
            Err(_) => return, // not a domino-labeled flag
        };
        let Some(count) = wanted.get_mut(&key) else {
            return;
        };
        *count += 1;
        labeled += 1;
        if counterexample.is_some() {
            return;
        }
        let v_m2 = f.space(m2);
        let v_top = f.space(n - m2);
        let image_ok = &v_top.image_under(&xl) == v_m2;
        let preimage_ok = &v_m2.preimage_under(&xl) == v_top;
        let chain_ok = v_m2.contains(&im_l1)
            && ker_x.contains(v_m2)
            && im_l.contains(v_m2);
        if !(image_ok && preimage_ok && chain_ok) {
            counterexample = Some(format!(
                "label {key}: image/preimage/chain = \
                 {image_ok}/{preimage_ok}/{chain_ok} at {}",
                f.render()
            ));
        }
    })?;

    Ok(SplitContainmentReport {
        shape: shape.clone(),
        l1,
        q,
        tail_block: (n2, k2),
        left_labels: left_count,
        flags_checked,
        labeled_flags: labeled,
        per_label: wanted.into_iter().collect(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::tableaux::{enumerate_standard, parse_domino, standard_count};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lines_cover_projective_space_once() {
        let f = PrimeField::new(3).unwrap();
        let zero = Subspace::zero(f, 3);
        let full = Subspace::full(f, 3);
        let lines = lines_mod(&zero, &full);
        assert_eq!(lines.len(), 13); // (3^3 - 1)/2
        let spans: HashSet<FSubspace> =
            lines.iter().map(|v| zero.extended_by(v)).collect();
        assert_eq!(spans.len(), 13);
    }

    #[test]
    fn flag_counts_match_counting_oracle() {
        for n in 0..=4u32 {
            for shape in partitions_of(n) {
                let field = PrimeField::new(3).unwrap();
                let model = standard_nilpotent(field, &shape);
                let enumerated = for_each_xstable_flag(&model.x, |_| {}).unwrap();
                let counted = count_xstable_flags(&shape, 3).unwrap();
                assert_eq!(BigUint::from(enumerated), counted, "shape {shape}");
            }
        }
    }

    #[test]
    fn zero_map_flag_count_is_q_factorial() {
        // x = 0 stabilizes everything: [4]_3! = 1*4*13*40 = 2080.
        let counted = count_xstable_flags(&part(&[1, 1, 1, 1]), 3).unwrap();
        assert_eq!(counted, BigUint::from(2080u32));
        assert_eq!(full_flag_count(4, 3), BigUint::from(2080u32));
    }

    #[test]
    fn syt_census_fibers_match_tableaux() {
        for n in 0..=4u32 {
            for shape in partitions_of(n) {
                let census = syt_fiber_census(&shape, 3).unwrap();
                let expected: Vec<String> = enumerate_standard(&shape)
                    .iter()
                    .map(|t| t.to_string())
                    .collect();
                let got: Vec<String> =
                    census.fibers.iter().map(|(k, _)| k.clone()).collect();
                let mut expected_sorted = expected.clone();
                expected_sorted.sort();
                assert_eq!(got, expected_sorted, "shape {shape}");
                assert!(census.fibers.iter().all(|&(_, c)| c > 0));
                assert_eq!(
                    census.fibers.len(),
                    usize::try_from(standard_count(&shape).clone()).unwrap_or(usize::MAX),
                );
            }
        }
    }

    #[test]
    fn syt_label_example_column_tableau() {
        // x = 0: every flag is labeled by the single-column tableau.
        let field = PrimeField::new(3).unwrap();
        let x = FMatrix::zero(field, 3, 3);
        let flags = collect_xstable_flags(&x).unwrap();
        for f in &flags {
            let t = syt_label(&x, f).unwrap();
            assert_eq!(t.row_strings(), vec!["1", "2", "3"]);
        }
    }

    #[test]
    fn kernel_flags_product_structure() {
        let field = PrimeField::new(3).unwrap();
        let shape = part(&[2, 2, 1, 1]);
        let model = standard_nilpotent(field, &shape);
        let k = kernel_flag_set(&model.x).unwrap();
        // Product of full flag counts over the kernel-chain quotients:
        // dual = (4, 2), so [4]_3! * [2]_3! = 2080 * 4.
        assert_eq!(k.len(), 8320);
        for f in k.iter().take(50) {
            assert!(f.is_stable_under(&model.x));
        }
        // All distinct.
        let set: HashSet<&Flag> = k.iter().collect();
        assert_eq!(set.len(), k.len());
    }

    #[test]
    fn isotropic_flags_are_sigma_fixed() {
        let field = PrimeField::new(3).unwrap();
        for (shape, kind) in [
            (part(&[2, 2, 1, 1]), FormKind::Symplectic),
            (part(&[2, 2]), FormKind::Orthogonal),
            (part(&[3, 1, 1]), FormKind::Orthogonal),
            (part(&[2, 2]), FormKind::Symplectic),
        ] {
            let model = skew_adjoint_model(field, &shape, kind).unwrap();
            let gram = model.gram.as_ref().unwrap();
            let count = for_each_isotropic_xstable_flag(&model, |f| {
                assert!(is_isotropic_flag(f, gram));
                assert!(f.is_stable_under(&model.x));
            })
            .unwrap();
            assert!(count > 0, "{shape} {kind}");
        }
    }

    #[test]
    fn sigma_preserves_label_chains() {
        // For a skew-adjoint x, sigma maps x-stable flags to x-stable flags
        // and preserves the centered quotient types (hence domino labels).
        let field = PrimeField::new(3).unwrap();
        let model = skew_adjoint_model(field, &part(&[2, 2]), FormKind::Symplectic).unwrap();
        let x = &model.x;
        let gram = model.gram.as_ref().unwrap();
        let flags = collect_xstable_flags(x).unwrap();
        for f in &flags {
            let sf = sigma(f, gram);
            assert!(sf.is_stable_under(x));
            let a = domino_label(x, f);
            let b = domino_label(x, &sf);
            match (a, b) {
                (Ok(da), Ok(db)) => assert_eq!(da, db),
                (Err(Error::NotDomino(_)), Err(Error::NotDomino(_))) => {}
                (a, b) => panic!("asymmetric labels: {a:?} vs {b:?}"),
            }
            assert_eq!(sigma(&sf, gram), *f, "sigma is an involution");
        }
    }

    #[test]
    fn iota_involution_without_fixed_points() {
        let field = PrimeField::new(3).unwrap();
        let model = skew_adjoint_model(field, &part(&[2, 2]), FormKind::Orthogonal).unwrap();
        let x = &model.x;
        let gram = model.gram.as_ref().unwrap();
        let flags = collect_isotropic_flags(&model).unwrap();
        assert!(!flags.is_empty());
        for f in &flags {
            let g = iota(f, gram).unwrap();
            assert_ne!(&g, f, "iota is fixed-point free");
            assert_eq!(iota(&g, gram).unwrap(), *f, "iota is an involution");
            assert!(g.is_stable_under(x), "iota preserves x-stability");
            // Only V_m changes, so the label chain is untouched.
            assert_eq!(
                domino_label(x, f).unwrap(),
                domino_label(x, &g).unwrap()
            );
        }
    }

    #[test]
    fn iota_preconditions() {
        let field = PrimeField::new(3).unwrap();
        // Odd dimension.
        let odd = skew_adjoint_model(field, &part(&[3]), FormKind::Orthogonal).unwrap();
        let odd_flags = collect_isotropic_flags(&odd).unwrap();
        assert!(matches!(
            iota(&odd_flags[0], odd.gram.as_ref().unwrap()),
            Err(Error::Parity(_))
        ));
        // Antisymmetric form.
        let sp = skew_adjoint_model(field, &part(&[2, 2]), FormKind::Symplectic).unwrap();
        let sp_flags = collect_isotropic_flags(&sp).unwrap();
        assert!(matches!(
            iota(&sp_flags[0], sp.gram.as_ref().unwrap()),
            Err(Error::Model(_))
        ));
        // Non-isotropic flag.
        let o = skew_adjoint_model(field, &part(&[2, 2]), FormKind::Orthogonal).unwrap();
        let all = collect_xstable_flags(&o.x).unwrap();
        let gram = o.gram.as_ref().unwrap();
        let non_iso = all.iter().find(|f| !is_isotropic_flag(f, gram)).unwrap();
        assert!(matches!(iota(non_iso, gram), Err(Error::Subspace(_))));
    }

    #[test]
    fn domino_census_labels_are_admissible() {
        let field_cases = [
            (part(&[2, 2, 1, 1]), FormKind::Symplectic),
            (part(&[2, 2]), FormKind::Orthogonal),
            (part(&[3, 1, 1]), FormKind::Orthogonal),
        ];
        for (shape, kind) in field_cases {
            let census = domino_fiber_census(&shape, kind, 3).unwrap();
            assert!(census.total > 0);
            for (key, count) in &census.fibers {
                let d = parse_domino(key).unwrap();
                assert!(d.is_admissible(kind), "{shape} {kind}: label {key}");
                assert!(*count > 0);
            }
            // Labels of isotropic flags exhaust the admissible tableaux.
            let expected: Vec<String> = enumerate_domino(&shape, Some(kind))
                .iter()
                .map(|d| d.to_string())
                .collect();
            let mut got: Vec<String> =
                census.fibers.iter().map(|(k, _)| k.clone()).collect();
            got.sort();
            let mut expected = expected;
            expected.sort();
            assert_eq!(got, expected, "{shape} {kind}");
        }
    }

    #[test]
    fn scale_guard_rejects_large_inputs() {
        let field = PrimeField::new(3).unwrap();
        let x = FMatrix::zero(field, 9, 9);
        assert!(matches!(
            for_each_xstable_flag(&x, |_| {}),
            Err(Error::Scale(_))
        ));
        assert!(matches!(
            count_xstable_flags(&part(&[9]), 3),
            Err(Error::Scale(_))
        ));
        assert!(PrimeField::new(7).is_ok());
        let x7 = FMatrix::zero(PrimeField::new(7).unwrap(), 2, 2);
        assert!(matches!(
            for_each_xstable_flag(&x7, |_| {}),
            Err(Error::Scale(_))
        ));
    }

    #[test]
    fn sp6_suite_passes_at_q3() {
        let report = sp6_suite(3).unwrap();
        assert!(report.passed(), "{:#?}", report.assertions);
        assert_eq!(report.label_census.len(), 3);
    }

    #[test]
    fn split_containment_small_cases() {
        for (shape, l1) in [
            (part(&[2, 2, 1, 1]), 1usize),
            (part(&[2, 2, 1, 1]), 0),
            (part(&[3, 1]), 1),
            (part(&[2, 2]), 0),
            (part(&[1, 1]), 0),
            (part(&[2, 1, 1]), 0),
        ] {
            let report = split_containment_suite(&shape, l1, 3).unwrap();
            assert!(report.passed(), "{shape} l1={l1}: {:?}", report.counterexample);
            assert!(report.labeled_flags > 0, "{shape} l1={l1} labeled no flags");
        }
    }

    #[test]
    fn split_containment_rejects_bad_splits() {
        // Tail of three columns.
        assert!(matches!(
            split_containment_suite(&part(&[3, 3]), 0, 3),
            Err(Error::Range(_))
        ));
        // Odd tail size.
        assert!(matches!(
            split_containment_suite(&part(&[2, 1]), 1, 3),
            Err(Error::Parity(_))
        ));
    }
}
