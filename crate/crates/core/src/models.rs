//! Concrete nilpotent matrices with a prescribed Jordan type, optionally
//! skew-adjoint for an explicit orthogonal or symplectic form, and the
//! orbit-dimension machinery built on them.
//!
//! The skew-adjoint construction pairs equal-sized Jordan blocks two at a
//! time: a pair `(e_1..e_v, f_1..f_v)` carries the hyperbolic pairing
//! `ω(e_i, f_j) = (-1)^i [i+j = v+1]`, and a leftover single block (its
//! multiplicity was odd, so admissibility forces the part's parity to be
//! "good" for the form) carries `ω(e_i, e_j) = (-1)^i [i+j = v+1]` on its
//! own. Pairing first matters over small finite fields: it keeps induced
//! forms on subquotients split, so isotropic vectors exist where the
//! geometry expects them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{restricted_to, induced_on_quotient, Field, Matrix, Rationals, Subspace};
use crate::partitions::{FormKind, Partition};

/// A nilpotent matrix together with its Jordan type and, when built for a
/// form-preserving group, the Gram matrix it is skew-adjoint for.
#[derive(Clone, Debug)]
pub struct NilpotentModel<F: Field> {
    pub x: Matrix<F>,
    pub jordan: Partition,
    pub gram: Option<Matrix<F>>,
    pub kind: Option<FormKind>,
}

impl<F: Field> NilpotentModel<F> {
    pub fn dim(&self) -> usize {
        self.x.nrows()
    }

    /// Re-checks every invariant the constructors promise: the Jordan type
    /// round-trips, and when a form is present it is nondegenerate, has the
    /// right (anti)symmetry, and `x` is skew-adjoint for it.
    pub fn validate(&self) -> Result<()> {
        let jt = self.x.jordan_type()?;
        if jt != self.jordan {
            return Err(Error::Model(format!(
                "jordan type {jt} does not match recorded {}",
                self.jordan
            )));
        }
        if let (Some(g), Some(kind)) = (&self.gram, self.kind) {
            let f = self.x.field().clone();
            let n = self.dim();
            if g.rank() != n {
                return Err(Error::Model("degenerate gram matrix".into()));
            }
            let gt = g.transpose();
            let expected = match kind {
                FormKind::Orthogonal => g.clone(),
                FormKind::Symplectic => g.scale(&f.from_i64(-1)),
            };
            if gt != expected {
                return Err(Error::Model(format!(
                    "gram matrix has the wrong symmetry for a {kind} form"
                )));
            }
            // x^T G + G x = 0
            let skew = self.x.transpose().mul(g).add(&g.mul(&self.x));
            if !skew.is_zero() {
                return Err(Error::Model("x is not skew-adjoint for the form".into()));
            }
        }
        Ok(())
    }
}

/// Block-diagonal nilpotent in Jordan form: one upper-shift block per part.
pub fn standard_nilpotent<F: Field>(field: F, shape: &Partition) -> NilpotentModel<F> {
    let n = shape.size() as usize;
    let mut x = Matrix::zero(field.clone(), n, n);
    let mut offset = 0usize;
    for &p in shape.parts() {
        for i in 0..(p as usize - 1) {
            x.set(offset + i, offset + i + 1, field.one());
        }
        offset += p as usize;
    }
    NilpotentModel {
        x,
        jordan: shape.clone(),
        gram: None,
        kind: None,
    }
}

/// Skew-adjoint model for an admissible Jordan type; see the module
/// documentation for the block layout. Blocks are laid out value by value
/// in decreasing order, pairs before the odd single.
pub fn skew_adjoint_model<F: Field>(
    field: F,
    shape: &Partition,
    kind: FormKind,
) -> Result<NilpotentModel<F>> {
    if !shape.is_admissible(kind) {
        return Err(Error::Admissibility(format!(
            "{shape} is not {kind}-admissible"
        )));
    }
    let n = shape.size() as usize;
    let mut x = Matrix::zero(field.clone(), n, n);
    let mut g = Matrix::zero(field.clone(), n, n);
    let eps: i64 = match kind {
        FormKind::Orthogonal => 1,
        FormKind::Symplectic => -1,
    };

    let shift_block = |x: &mut Matrix<F>, start: usize, v: usize| {
        for i in 0..v.saturating_sub(1) {
            x.set(start + i, start + i + 1, field.one());
        }
    };
    // Sign (-1)^i for 1-based i.
    let sign = |i: usize| if i % 2 == 1 { -1i64 } else { 1 };

    let mut offset = 0usize;
    let mut values: Vec<u32> = shape.parts().to_vec();
    values.dedup();
    for &value in &values {
        let v = value as usize;
        let mult = shape.multiplicity(value);
        for _ in 0..mult / 2 {
            // Paired blocks: e-basis at offset, f-basis at offset + v.
            shift_block(&mut x, offset, v);
            shift_block(&mut x, offset + v, v);
            for i in 1..=v {
                let j = v + 1 - i;
                let s = sign(i);
                g.set(offset + i - 1, offset + v + j - 1, field.from_i64(s));
                g.set(offset + v + j - 1, offset + i - 1, field.from_i64(eps * s));
            }
            offset += 2 * v;
        }
        if mult % 2 == 1 {
            // A lone block: admissibility guarantees its length has the
            // parity that makes the one-block form consistent.
            let good = match kind {
                FormKind::Orthogonal => value % 2 == 1,
                FormKind::Symplectic => value % 2 == 0,
            };
            if !good {
                return Err(Error::Admissibility(format!(
                    "part {value} has odd multiplicity in {shape}"
                )));
            }
            shift_block(&mut x, offset, v);
            for i in 1..=v {
                let j = v + 1 - i;
                g.set(offset + i - 1, offset + j - 1, field.from_i64(sign(i)));
            }
            offset += v;
        }
    }

    let model = NilpotentModel {
        x,
        jordan: shape.clone(),
        gram: Some(g),
        kind: Some(kind),
    };
    model.validate()?;
    Ok(model)
}

/// Which group's orbit dimension to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    /// The full general linear group: `dim orbit = rank of ad(x)` on all
    /// n x n matrices.
    GeneralLinear,
    /// The isometry group of the model's form: `ad(x)` restricted to the
    /// Lie algebra `{y : y^T G + G y = 0}`.
    FormPreserving,
}

/// Orbit dimension as the rank of `y -> [x, y]` on the chosen Lie algebra.
pub fn orbit_dim<F: Field>(model: &NilpotentModel<F>, ambient: Ambient) -> Result<u64> {
    let f = model.x.field().clone();
    let n = model.dim();
    let basis: Vec<Matrix<F>> = match ambient {
        Ambient::GeneralLinear => {
            let mut b = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut e = Matrix::zero(f.clone(), n, n);
                    e.set(i, j, f.one());
                    b.push(e);
                }
            }
            b
        }
        Ambient::FormPreserving => {
            let g = model.gram.as_ref().ok_or_else(|| {
                Error::Model("form-preserving orbit dimension needs a gram matrix".into())
            })?;
            form_preserving_basis(g)
        }
    };
    // Columns: vectorized commutators [x, b].
    let cols: Vec<Vec<F::Elem>> = basis
        .iter()
        .map(|b| {
            let c = model.x.commutator(b);
            let mut v = Vec::with_capacity(n * n);
            for i in 0..n {
                v.extend(c.row(i).iter().cloned());
            }
            v
        })
        .collect();
    let m = Matrix::from_rows(f, cols)?; // rank is transpose-invariant
    Ok(m.rank() as u64)
}

/// A basis of the Lie algebra `{y : y^T G + G y = 0}` of the form with
/// Gram matrix `G`, as a list of matrices (kernel of the linear system on
/// the n^2 coordinates of y).
pub fn form_preserving_basis<F: Field>(g: &Matrix<F>) -> Vec<Matrix<F>> {
    let f = g.field().clone();
    let n = g.nrows();
    // Condition (a, b): sum_k y_ka G_kb + sum_k G_ak y_kb = 0, so the
    // coefficient of y_ij is [j = a] G_ib + [j = b] G_ai.
    let system = Matrix::from_fn(f.clone(), n * n, n * n, |row, col| {
        let (a, b) = (row / n, row % n);
        let (i, j) = (col / n, col % n);
        let mut v = f.zero();
        if j == a {
            v = f.add(&v, g.get(i, b));
        }
        if j == b {
            v = f.add(&v, g.get(a, i));
        }
        v
    });
    system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(f.clone(), n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct LeviBlock {
    pub size: u32,
    pub orbit: Partition,
}

/// A Levi datum: diagonal block sizes and a nilpotent orbit in each.
#[derive(Debug, Clone, Serialize)]
pub struct LeviData {
    pub blocks: Vec<LeviBlock>,
}

impl LeviData {
    pub fn new(blocks: Vec<LeviBlock>) -> Result<Self> {
        for b in &blocks {
            if b.orbit.size() != b.size {
                return Err(Error::Model(format!(
                    "orbit {} does not fit block of size {}",
                    b.orbit, b.size
                )));
            }
        }
        if blocks.is_empty() {
            return Err(Error::Model("levi datum needs at least one block".into()));
        }
        Ok(LeviData { blocks })
    }

    pub fn total(&self) -> u32 {
        self.blocks.iter().map(|b| b.size).sum()
    }

    /// `dim n_P`: number of strictly-upper block coordinates.
    pub fn nilradical_dim(&self) -> u64 {
        let sizes: Vec<u64> = self.blocks.iter().map(|b| b.size as u64).collect();
        let mut d = 0;
        for i in 0..sizes.len() {
            for j in (i + 1)..sizes.len() {
                d += sizes[i] * sizes[j];
            }
        }
        d
    }
}

/// Result of randomized induced-orbit sampling.
#[derive(Debug, Clone, Serialize)]
pub struct InducedSample {
    pub jordan: Partition,
    /// `dim O_L + 2 dim n_P`, the dimension the induced orbit must have.
    pub expected_dim: u64,
    /// General-linear orbit dimension of the sampled type.
    pub observed_dim: u64,
    pub dim_matches: bool,
    pub trials: u32,
    pub seed: u64,
}

/// `n^2 - sum(dual_j^2)`: closed form for the general-linear orbit
/// dimension of a Jordan type.
pub fn gl_orbit_dim_formula(shape: &Partition) -> u64 {
    let n = shape.size() as u64;
    let sq: u64 = shape.dual().parts().iter().map(|&c| (c as u64) * (c as u64)).sum();
    n * n - sq
}

/// Closed form for the orbit dimension in the isometry Lie algebra of an
/// admissible type: `dim g - z` with
/// `z = (sum(dual_j^2) ± #{odd parts}) / 2` (+ symplectic, - orthogonal).
pub fn form_orbit_dim_formula(shape: &Partition, kind: FormKind) -> Result<u64> {
    if !shape.is_admissible(kind) {
        return Err(Error::Admissibility(format!(
            "{shape} is not {kind}-admissible"
        )));
    }
    let n = shape.size() as u64;
    let sq: u64 = shape.dual().parts().iter().map(|&c| (c as u64) * (c as u64)).sum();
    let odd = shape.parts().iter().filter(|&&p| p % 2 == 1).count() as u64;
    let (dim_g, z) = match kind {
        FormKind::Symplectic => (n * (n + 1) / 2, (sq + odd) / 2),
        FormKind::Orthogonal => (n * n.saturating_sub(1) / 2, (sq - odd) / 2),
    };
    Ok(dim_g - z)
}

/// Samples the induced orbit: block-diagonal representatives of the Levi
/// orbits plus random integers in the strictly-upper block region, Jordan
/// type computed exactly over the rationals, keeping the dominance-largest
/// type seen. The true induced type dominates every sample, so if the
/// expected dimension is reached the answer is certain.
pub fn induced_orbit_sample(levi: &LeviData, trials: u32, seed: u64) -> InducedSample {
    let f = Rationals;
    let n = levi.total() as usize;
    let mut x0 = Matrix::zero(f, n, n);
    let mut offset = 0usize;
    let mut block_of = vec![0usize; n];
    for (bi, b) in levi.blocks.iter().enumerate() {
        let inner = standard_nilpotent(f, &b.orbit);
        for i in 0..b.size as usize {
            block_of[offset + i] = bi;
            for j in 0..b.size as usize {
                x0.set(offset + i, offset + j, inner.x.get(i, j).clone());
            }
        }
        offset += b.size as usize;
    }

    let expected_dim: u64 = levi
        .blocks
        .iter()
        .map(|b| gl_orbit_dim_formula(&b.orbit))
        .sum::<u64>()
        + 2 * levi.nilradical_dim();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Partition> = None;
    for t in 0..trials {
        let amp = 1 + (t as i64) / 4; // widen the entry range as trials go
        let mut y = x0.clone();
        for i in 0..n {
            for j in 0..n {
                if block_of[i] < block_of[j] {
                    let e: i64 = rng.gen_range(-amp..=amp);
                    y.set(i, j, Rationals.from_i64(e));
                }
            }
        }
        let jt = y
            .jordan_type()
            .expect("block-triangular with nilpotent diagonal is nilpotent");
        best = match best {
            None => Some(jt),
            Some(b) if jt.dominates(&b) => Some(jt),
            keep => keep,
        };
    }
    let jordan = best.expect("at least one trial");
    let observed_dim = gl_orbit_dim_formula(&jordan);
    InducedSample {
        dim_matches: observed_dim == expected_dim,
        expected_dim,
        observed_dim,
        trials,
        seed,
        jordan,
    }
}

/// Splits the columns of a Jordan type along an x-stable subspace: for any
/// x-stable `M ⊆ im(x^l1)`, the Jordan type of x on `(x^l1)^{-1}(M)/M` is
/// the first `l1` columns of the type of x, and the type of x on
/// `im(x^l1)` is the rest. Returns that pair, computed from the actual
/// subquotients.
pub fn split_by_columns<F: Field>(
    model: &NilpotentModel<F>,
    l1: usize,
    m: &Subspace<F>,
) -> Result<(Partition, Partition)> {
    let x = &model.x;
    if m.ambient() != x.ncols() {
        return Err(Error::Subspace("ambient dimension mismatch".into()));
    }
    if !m.contains(&m.image_under(x)) {
        return Err(Error::Subspace("subspace is not x-stable".into()));
    }
    let xl = x.pow(l1);
    let image = Subspace::full(x.field().clone(), x.ncols()).image_under(&xl);
    if !image.contains(m) {
        return Err(Error::Subspace(format!(
            "subspace not contained in im(x^{l1})"
        )));
    }
    let pre = m.preimage_under(&xl);
    let upper = induced_on_quotient(x, m, &pre)?;
    let lower = restricted_to(x, &image)?;
    Ok((upper.jordan_type()?, lower.jordan_type()?))
}

/// The partition formed by columns `0..l1` of `shape`, and the one formed
/// by the remaining columns. The expected value of [`split_by_columns`].
pub fn column_split(shape: &Partition, l1: usize) -> (Partition, Partition) {
    let cols = shape.columns();
    let take = l1.min(cols.len());
    let left = Partition::new(cols[..take].to_vec()).expect("columns are weakly decreasing");
    let right = Partition::new(cols[take..].to_vec()).expect("columns are weakly decreasing");
    (left.dual(), right.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::partitions::partitions_of;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn standard_nilpotent_round_trip() {
        for n in 0..=8u32 {
            for shape in partitions_of(n) {
                let m = standard_nilpotent(Rationals, &shape);
                assert_eq!(m.x.jordan_type().unwrap(), shape);
            }
        }
    }

    #[test]
    fn skew_adjoint_models_validate() {
        for n in 0..=8u32 {
            for shape in partitions_of(n) {
                for kind in [FormKind::Orthogonal, FormKind::Symplectic] {
                    if !shape.is_admissible(kind) {
                        assert!(skew_adjoint_model(Rationals, &shape, kind).is_err());
                        continue;
                    }
                    let m = skew_adjoint_model(Rationals, &shape, kind).unwrap();
                    m.validate().unwrap();
                    assert_eq!(m.jordan, shape);
                    let m3 = skew_adjoint_model(PrimeField::new(3).unwrap(), &shape, kind)
                        .unwrap();
                    m3.validate().unwrap();
                }
            }
        }
    }

    #[test]
    fn gl_orbit_dim_matches_formula() {
        for n in 0..=5u32 {
            for shape in partitions_of(n) {
                let m = standard_nilpotent(Rationals, &shape);
                let rank = orbit_dim(&m, Ambient::GeneralLinear).unwrap();
                assert_eq!(rank, gl_orbit_dim_formula(&shape), "shape {shape}");
            }
        }
    }

    #[test]
    fn form_orbit_dim_matches_formula() {
        for n in 0..=6u32 {
            for shape in partitions_of(n) {
                for kind in [FormKind::Orthogonal, FormKind::Symplectic] {
                    if !shape.is_admissible(kind) {
                        continue;
                    }
                    let m = skew_adjoint_model(Rationals, &shape, kind).unwrap();
                    let rank = orbit_dim(&m, Ambient::FormPreserving).unwrap();
                    assert_eq!(
                        rank,
                        form_orbit_dim_formula(&shape, kind).unwrap(),
                        "shape {shape} kind {kind}"
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_dim_frozen_values() {
        let shape = part(&[2, 2, 1, 1]);
        let gl = standard_nilpotent(Rationals, &shape);
        assert_eq!(orbit_dim(&gl, Ambient::GeneralLinear).unwrap(), 16);
        // Symplectic: dim sp_6 = 21, centralizer (20 + 2)/2 = 11, orbit 10.
        let sp = skew_adjoint_model(Rationals, &shape, FormKind::Symplectic).unwrap();
        assert_eq!(orbit_dim(&sp, Ambient::FormPreserving).unwrap(), 10);
    }

    #[test]
    fn orbit_dims_are_even() {
        for n in 0..=8u32 {
            for shape in partitions_of(n) {
                assert_eq!(gl_orbit_dim_formula(&shape) % 2, 0, "gl, {shape}");
                for kind in [FormKind::Orthogonal, FormKind::Symplectic] {
                    if shape.is_admissible(kind) {
                        assert_eq!(
                            form_orbit_dim_formula(&shape, kind).unwrap() % 2,
                            0,
                            "{kind}, {shape}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn form_preserving_basis_dimension() {
        // dim so_n = n(n-1)/2, dim sp_n = n(n+1)/2.
        let o = skew_adjoint_model(Rationals, &part(&[3, 1]), FormKind::Orthogonal).unwrap();
        assert_eq!(form_preserving_basis(o.gram.as_ref().unwrap()).len(), 6);
        let s = skew_adjoint_model(Rationals, &part(&[2, 2]), FormKind::Symplectic).unwrap();
        assert_eq!(form_preserving_basis(s.gram.as_ref().unwrap()).len(), 10);
    }

    fn levi(blocks: &[(u32, &[u32])]) -> LeviData {
        LeviData::new(
            blocks
                .iter()
                .map(|&(size, orbit)| LeviBlock {
                    size,
                    orbit: part(orbit),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn induced_orbit_row_sum_oracle() {
        // Independent expected values: the induced type is the padded
        // row-wise sum of the block types (checked against the dimension
        // identity in each case below).
        let cases: Vec<(LeviData, Partition)> = vec![
            (levi(&[(2, &[1, 1]), (2, &[1, 1])]), part(&[2, 2])),
            (levi(&[(3, &[2, 1]), (2, &[2])]), part(&[4, 1])),
            (levi(&[(2, &[1, 1]), (1, &[1]), (2, &[2])]), part(&[4, 1])),
            (levi(&[(3, &[3]), (3, &[1, 1, 1])]), part(&[4, 1, 1])),
            (levi(&[(4, &[2, 2]), (2, &[1, 1])]), part(&[3, 3])),
        ];
        for (l, expected) in cases {
            let sample = induced_orbit_sample(&l, 48, 7);
            assert_eq!(sample.jordan, expected, "levi {l:?}");
            assert!(sample.dim_matches, "levi {l:?}");
            // Row-sum self-check.
            let rows = l.blocks.iter().map(|b| b.orbit.rows()).max().unwrap();
            let summed: Vec<u32> = (0..rows)
                .map(|r| l.blocks.iter().map(|b| b.orbit.part(r)).sum())
                .collect();
            assert_eq!(Partition::new(summed).unwrap(), expected);
        }
    }

    #[test]
    fn richardson_orbits_are_dual_of_block_sizes() {
        // All-trivial Levi orbits induce the dual of the sorted size list.
        for sizes in [vec![3u32, 2, 1], vec![2, 2], vec![4, 3], vec![1, 1, 1, 1]] {
            let l = LeviData::new(
                sizes
                    .iter()
                    .map(|&s| LeviBlock {
                        size: s,
                        orbit: Partition::new(vec![1; s as usize]).unwrap(),
                    })
                    .collect(),
            )
            .unwrap();
            let mut sorted = sizes.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let expected = Partition::new(sorted).unwrap().dual();
            let sample = induced_orbit_sample(&l, 48, 11);
            assert_eq!(sample.jordan, expected, "sizes {sizes:?}");
            assert!(sample.dim_matches);
        }
    }

    #[test]
    fn induced_sampling_is_deterministic() {
        let l = levi(&[(3, &[2, 1]), (2, &[2])]);
        let a = induced_orbit_sample(&l, 24, 5);
        let b = induced_orbit_sample(&l, 24, 5);
        assert_eq!(a.jordan, b.jordan);
        let c = induced_orbit_sample(&l, 24, 6);
        assert_eq!(a.jordan, c.jordan); // same orbit from another seed
    }

    #[test]
    fn levi_validation() {
        assert!(LeviData::new(vec![LeviBlock {
            size: 3,
            orbit: part(&[2]),
        }])
        .is_err());
        assert!(LeviData::new(vec![]).is_err());
    }

    #[test]
    fn split_by_columns_matches_column_split() {
        for n in 0..=10u32 {
            for shape in partitions_of(n) {
                let model = standard_nilpotent(Rationals, &shape);
                let x = &model.x;
                let full = Subspace::full(Rationals, n as usize);
                let nilpotency = shape.part(0) as usize;
                for l1 in 0..=nilpotency {
                    let expected = column_split(&shape, l1);
                    // M ranges over 0 and the images im(x^j), j >= l1.
                    let mut candidates =
                        vec![Subspace::zero(Rationals, n as usize)];
                    for j in l1..=nilpotency {
                        candidates.push(full.image_under(&x.pow(j)));
                    }
                    candidates.dedup();
                    for m in candidates {
                        let (a, b) = split_by_columns(&model, l1, &m).unwrap();
                        assert_eq!(
                            (a, b),
                            expected.clone(),
                            "shape {shape}, l1 {l1}, dim M {}",
                            m.dim()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn split_rejects_bad_subspaces() {
        let shape = part(&[3, 1]);
        let model = standard_nilpotent(Rationals, &shape);
        // Not contained in im(x^2): the whole space.
        let full = Subspace::full(Rationals, 4);
        assert!(matches!(
            split_by_columns(&model, 2, &full),
            Err(Error::Subspace(_))
        ));
        // Not x-stable: span(e2) with x(e2) = e1.
        let e2 = vec![
            Rationals.from_i64(0),
            Rationals.from_i64(1),
            Rationals.from_i64(0),
            Rationals.from_i64(0),
        ];
        let line = Subspace::spanned_by(Rationals, &[e2], 4).unwrap();
        assert!(matches!(
            split_by_columns(&model, 1, &line),
            Err(Error::Subspace(_))
        ));
    }

    #[test]
    fn column_split_examples() {
        assert_eq!(
            column_split(&part(&[3]), 1),
            (part(&[1]), part(&[2]))
        );
        assert_eq!(
            column_split(&part(&[3, 1]), 1),
            (part(&[1, 1]), part(&[2]))
        );
        assert_eq!(
            column_split(&part(&[2, 2, 1, 1]), 1),
            (part(&[1, 1, 1, 1]), part(&[1, 1]))
        );
        assert_eq!(column_split(&part(&[2, 2]), 0), (Partition::empty(), part(&[2, 2])));
        assert_eq!(column_split(&part(&[2, 2]), 5), (part(&[2, 2]), Partition::empty()));
    }
}
