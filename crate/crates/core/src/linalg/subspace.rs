//! Subspaces of F^n in canonical form.
//!
//! A subspace stores the reduced row echelon basis of its row space, with
//! zero rows dropped. RREF bases are unique, so `==` and hashing compare
//! subspaces, not presentations. A useful consequence of uniqueness: if
//! `S ⊆ T` then the pivot set of `S` is contained in the pivot set of `T`,
//! which yields canonical complements below.

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F: Field> {
    /// RREF, no zero rows; `basis.ncols()` is the ambient dimension.
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn spanned_by(field: F, vectors: &[Vec<F::Elem>], ambient: usize) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::Subspace(format!(
                "vector length differs from ambient dimension {ambient}"
            )));
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, vectors.to_vec())?;
        Ok(Subspace::from_matrix_rows(&m, ambient))
    }

    /// Row space of `m` (which must have `ambient` columns, unless it has
    /// no rows at all — an empty row list cannot carry a column count).
    pub fn from_matrix_rows(m: &Matrix<F>, ambient: usize) -> Self {
        assert!(m.nrows() == 0 || m.ncols() == ambient);
        let f = m.field().clone();
        let (e, pivots) = m.rref();
        let rows: Vec<Vec<F::Elem>> = (0..pivots.len()).map(|i| e.row(i).to_vec()).collect();
        let basis = if rows.is_empty() {
            Matrix::zero(f, 0, ambient)
        } else {
            Matrix::from_rows(f, rows).expect("echelon rows are rectangular")
        };
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.ncols()
    }

    /// The canonical (RREF) basis, one row per basis vector.
    pub fn basis_matrix(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<F::Elem>> {
        self.basis.rows_vec()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace: subtracts the unique combination of
    /// basis rows matching `v` on the pivot coordinates. The result is zero
    /// iff `v` lies in the subspace.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient(), "ambient mismatch");
        let f = self.field().clone();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&v[p]) {
                let c = v[p].clone();
                for j in p..v.len() {
                    let t = f.mul(&c, self.basis.get(row, j));
                    v[j] = f.sub(&v[j], &t);
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        self.reduce(v.to_vec()).iter().all(|x| f.is_zero(x))
    }

    pub fn contains(&self, other: &Subspace<F>) -> bool {
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    /// The subspace spanned by this one and `v`.
    pub fn extended_by(&self, v: &[F::Elem]) -> Subspace<F> {
        let mut rows = self.basis_rows();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(self.field().clone(), rows).expect("rectangular");
        Subspace::from_matrix_rows(&m, self.ambient())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        let m = Matrix::from_rows(self.field().clone(), rows).expect("rectangular");
        Subspace::from_matrix_rows(&m, self.ambient())
    }

    /// Intersection, via the kernel of the stacked coefficient system: a
    /// vector in both row spaces is `x^T A = y^T B`, so `(x, y)` runs over
    /// the kernel of the `ambient x (dim A + dim B)` matrix `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        let f = self.field().clone();
        let (a, b) = (self.dim(), other.dim());
        let coeff = Matrix::from_fn(f.clone(), self.ambient(), a + b, |i, j| {
            if j < a {
                self.basis.get(j, i).clone()
            } else {
                f.neg(other.basis.get(j - a, i))
            }
        });
        let vectors: Vec<Vec<F::Elem>> = coeff
            .kernel_basis()
            .into_iter()
            .map(|xy| {
                // v = sum x_i * (row i of A)
                let mut v = vec![f.zero(); self.ambient()];
                for (i, x) in xy[..a].iter().enumerate() {
                    for (vj, bj) in v.iter_mut().zip(self.basis.row(i)) {
                        let t = f.mul(x, bj);
                        *vj = f.add(vj, &t);
                    }
                }
                v
            })
            .collect();
        Subspace::spanned_by(f, &vectors, self.ambient()).expect("lengths match")
    }

    /// Image under the linear map `m` (columns acting on the left:
    /// `v -> m v` for column vectors, i.e. rows map through `m^T`).
    pub fn image_under(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.ncols(), self.ambient(), "map domain mismatch");
        let rows: Vec<Vec<F::Elem>> = (0..self.dim())
            .map(|i| m.apply(self.basis.row(i)))
            .collect();
        Subspace::spanned_by(m.field().clone(), &rows, m.nrows()).expect("lengths match")
    }

    /// Preimage `{v : m v in self}` of this subspace under `m`, computed as
    /// the projection to the first block of the kernel of `[m | -B^T]`.
    pub fn preimage_under(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.nrows(), self.ambient(), "map codomain mismatch");
        let f = self.field().clone();
        let n = m.ncols();
        let d = self.dim();
        let coeff = Matrix::from_fn(f.clone(), self.ambient(), n + d, |i, j| {
            if j < n {
                m.get(i, j).clone()
            } else {
                f.neg(self.basis.get(j - n, i))
            }
        });
        let vectors: Vec<Vec<F::Elem>> = coeff
            .kernel_basis()
            .into_iter()
            .map(|vt| vt[..n].to_vec())
            .collect();
        Subspace::spanned_by(f, &vectors, n).expect("lengths match")
    }

    /// Kernel of `m` as a subspace of its domain.
    pub fn kernel_of(m: &Matrix<F>) -> Subspace<F> {
        let vectors = m.kernel_basis();
        Subspace::spanned_by(m.field().clone(), &vectors, m.ncols()).expect("lengths match")
    }

    /// Orthogonal complement with respect to the bilinear form with Gram
    /// matrix `gram`: `{w : v^T gram w = 0 for all v in self}`.
    pub fn perp(&self, gram: &Matrix<F>) -> Subspace<F> {
        assert_eq!(gram.nrows(), self.ambient(), "gram size mismatch");
        assert_eq!(gram.ncols(), self.ambient(), "gram size mismatch");
        Subspace::kernel_of(&self.basis.mul(gram))
    }

    /// Canonical representatives, modulo `self`, of a basis of `sup/self`:
    /// the rows of `sup`'s RREF basis whose pivots are not pivots of
    /// `self`. Requires (and checks) `self ⊆ sup`.
    pub fn complement_in(&self, sup: &Subspace<F>) -> Result<Vec<Vec<F::Elem>>> {
        if !sup.contains(self) {
            return Err(Error::Subspace(
                "complement_in requires containment".into(),
            ));
        }
        Ok((0..sup.dim())
            .filter(|&i| !self.pivots.contains(&sup.pivots[i]))
            .map(|i| sup.basis.row(i).to_vec())
            .collect())
    }

    /// Coordinates of `v` in the row basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        // RREF makes this a read-off: coefficient of row i is v[pivot_i],
        // provided the reduction leaves nothing behind.
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// The matrix of the map induced by `x` on `sup/sub`, written in the basis
/// of canonical complement representatives. Checks that `sub ⊆ sup` and
/// that `x` stabilizes both.
pub fn induced_on_quotient<F: Field>(
    x: &Matrix<F>,
    sub: &Subspace<F>,
    sup: &Subspace<F>,
) -> Result<Matrix<F>> {
    let f = x.field().clone();
    let n = x.ncols();
    assert_eq!(x.nrows(), n, "square matrix expected");
    if sub.ambient() != n || sup.ambient() != n {
        return Err(Error::Subspace("ambient dimension mismatch".into()));
    }
    let reps = sub.complement_in(sup)?;
    if !sub.contains(&sub.image_under(x)) || !sup.contains(&sup.image_under(x)) {
        return Err(Error::Subspace(
            "subquotient requires x-stable subspaces".into(),
        ));
    }
    let k = reps.len();
    // Solve sup-membership for each image vector: x*rep_t = (combination of
    // sub basis and reps); the matrix of the quotient map keeps only the
    // rep coefficients.
    let mut stacked_rows = sub.basis_rows();
    stacked_rows.extend(reps.iter().cloned());
    let stacked = Matrix::from_rows(f.clone(), stacked_rows)?.transpose();
    let images: Vec<Vec<F::Elem>> = reps.iter().map(|r| x.apply(r)).collect();
    let sols = stacked
        .solve_many(&images)
        .ok_or_else(|| Error::Subspace("image left the subquotient".into()))?;
    let sub_dim = sub.dim();
    Ok(Matrix::from_fn(f, k, k, |i, j| {
        // Column j: coefficients of x*rep_j; entry i: coefficient of rep_i.
        sols[j][sub_dim + i].clone()
    }))
}

/// Matrix of `x` restricted to an `x`-stable subspace `w`, in `w`'s
/// canonical basis.
pub fn restricted_to<F: Field>(x: &Matrix<F>, w: &Subspace<F>) -> Result<Matrix<F>> {
    let zero = Subspace::zero(x.field().clone(), x.ncols());
    induced_on_quotient(x, &zero, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn rat_space(rows: &[&[i64]], ambient: usize) -> Subspace<Rationals> {
        let vectors: Vec<Vec<_>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect())
            .collect();
        Subspace::spanned_by(Rationals, &vectors, ambient).unwrap()
    }

    #[test]
    fn canonical_equality() {
        let a = rat_space(&[&[1, 1, 0], &[0, 0, 1]], 3);
        let b = rat_space(&[&[2, 2, 2], &[0, 0, 5], &[1, 1, 3]], 3);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn containment_and_membership() {
        let s = rat_space(&[&[1, 0, 1], &[0, 1, 1]], 3);
        assert!(s.contains_vector(&[
            Rationals.from_i64(1),
            Rationals.from_i64(-1),
            Rationals.from_i64(0)
        ]));
        assert!(!s.contains_vector(&[
            Rationals.from_i64(1),
            Rationals.from_i64(0),
            Rationals.from_i64(0)
        ]));
        let line = rat_space(&[&[1, 1, 2]], 3);
        assert!(s.contains(&line));
        assert!(!line.contains(&s));
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        let a = rat_space(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        let b = rat_space(&[&[0, 1, 0, 0], &[0, 0, 1, 0]], 4);
        let s = a.sum(&b);
        let i = a.intersect(&b);
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&[
            Rationals.from_i64(0),
            Rationals.from_i64(1),
            Rationals.from_i64(0),
            Rationals.from_i64(0)
        ]));
        // dim(A) + dim(B) = dim(A+B) + dim(A∩B)
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
    }

    #[test]
    fn pivot_monotonicity_under_containment() {
        // S ⊆ T implies pivots(S) ⊆ pivots(T): spot-check over F_3 with
        // random-ish spans.
        let f = PrimeField::new(3).unwrap();
        let t = Subspace::spanned_by(
            f,
            &[vec![1, 2, 0, 1], vec![0, 1, 1, 1], vec![0, 0, 1, 2]],
            4,
        )
        .unwrap();
        for rows in [
            vec![vec![1, 2, 0, 1]],
            vec![vec![1, 0, 1, 2]],
            vec![vec![1, 2, 0, 1], vec![0, 1, 0, 2]],
        ] {
            let s = Subspace::spanned_by(f, &rows, 4).unwrap();
            if t.contains(&s) {
                assert!(s.pivots().iter().all(|p| t.pivots().contains(p)));
            }
        }
    }

    #[test]
    fn image_preimage_kernel() {
        // x = nilpotent single Jordan block on F^3: e3 -> e2 -> e1 -> 0
        let x = Matrix::from_i64_rows(Rationals, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let full = Subspace::full(Rationals, 3);
        let img = full.image_under(&x);
        assert_eq!(img.dim(), 2);
        let ker = Subspace::kernel_of(&x);
        assert_eq!(ker.dim(), 1);
        assert!(img.contains(&ker));
        let pre = ker.preimage_under(&x);
        assert_eq!(pre.dim(), 2);
        assert_eq!(pre, img); // x^{-1}(ker x) = span(e1, e2) = im x here
    }

    #[test]
    fn perp_against_symplectic_gram() {
        // Standard symplectic form on F^4: ω(e1, e3) = 1, ω(e2, e4) = 1.
        let g = Matrix::from_i64_rows(
            Rationals,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]],
        );
        let line = rat_space(&[&[1, 0, 0, 0]], 4);
        let p = line.perp(&g);
        assert_eq!(p.dim(), 3);
        assert!(p.contains(&line)); // isotropic line
        let zero = Subspace::zero(Rationals, 4);
        assert_eq!(zero.perp(&g).dim(), 4);
    }

    #[test]
    fn complement_and_coordinates() {
        let small = rat_space(&[&[1, 0, 0, 1]], 4);
        let big = rat_space(&[&[1, 0, 0, 1], &[0, 1, 0, 2], &[0, 0, 1, 3]], 4);
        let reps = small.complement_in(&big).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(small.complement_in(&small).unwrap().is_empty());
        assert!(big.complement_in(&small).is_err());
        let v = vec![
            Rationals.from_i64(1),
            Rationals.from_i64(1),
            Rationals.from_i64(0),
            Rationals.from_i64(3),
        ];
        let coords = big.coordinates(&v).unwrap();
        assert_eq!(coords.len(), 3);
    }

    #[test]
    fn induced_quotient_map_jordan() {
        // x with Jordan type (3): on F^3/ker(x) ≅ span{e2, e3} the induced
        // map is a size-2 Jordan block.
        let x = Matrix::from_i64_rows(Rationals, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let ker = Subspace::kernel_of(&x);
        let full = Subspace::full(Rationals, 3);
        let q = induced_on_quotient(&x, &ker, &full).unwrap();
        assert_eq!(q.jordan_type().unwrap().parts(), &[2]);
        let r = restricted_to(&x, &full.image_under(&x)).unwrap();
        assert_eq!(r.jordan_type().unwrap().parts(), &[2]);
    }

    #[test]
    fn induced_quotient_rejects_unstable() {
        let x = Matrix::from_i64_rows(Rationals, &[&[0, 1], &[0, 0]]);
        let bad = rat_space(&[&[0, 1]], 2); // x(e2) = e1 not in span(e2)
        let full = Subspace::full(Rationals, 2);
        assert!(induced_on_quotient(&x, &bad, &full).is_err());
    }
}
