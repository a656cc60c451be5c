//! Dense matrices over an abstract [`Field`], with exact Gaussian
//! elimination as the single primitive everything else reduces to.
//!
//! Shape mismatches in arithmetic are programming errors and panic;
//! mathematical failure modes (non-nilpotent input to a Jordan type,
//! unsolvable systems) are reported through `Result`/`Option`.

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    /// Row-major.
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, nrows: usize, ncols: usize) -> Self {
        let data = vec![field.zero(); nrows * ncols];
        Matrix {
            field,
            nrows,
            ncols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_fn(field: F, nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            nrows,
            ncols,
            data,
        }
    }

    /// Builds from rows, checking they all have the same length.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Parse("ragged rows in matrix".into()));
        }
        Ok(Matrix {
            field,
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and embedded integer data.
    pub fn from_i64_rows(field: F, rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix::from_fn(field.clone(), rows.len(), ncols, |i, j| {
            field.from_i64(rows[i][j])
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<F::Elem>> {
        (0..self.nrows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.field.clone(), self.ncols, self.nrows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        Matrix::from_fn(self.field.clone(), self.nrows, self.ncols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        Matrix::from_fn(self.field.clone(), self.nrows, self.ncols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Matrix::from_fn(self.field.clone(), self.nrows, self.ncols, |i, j| {
            self.field.mul(c, self.get(i, j))
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let f = &self.field;
        Matrix::from_fn(self.field.clone(), self.nrows, other.ncols, |i, j| {
            let mut acc = f.zero();
            for k in 0..self.ncols {
                let t = f.mul(self.get(i, k), other.get(k, j));
                acc = f.add(&acc, &t);
            }
            acc
        })
    }

    /// `self` to the `k`-th power (square matrices; `pow(0)` is the identity).
    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.nrows, self.ncols, "pow needs a square matrix");
        let mut acc = Matrix::identity(self.field.clone(), self.nrows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies to a column vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let f = &self.field;
        (0..self.nrows)
            .map(|i| {
                let mut acc = f.zero();
                for (j, x) in v.iter().enumerate() {
                    let t = f.mul(self.get(i, j), x);
                    acc = f.add(&acc, &t);
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Reduced row echelon form and the pivot columns, in order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(pr) = (r..m.nrows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.ncols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.nrows {
                if i != r && !f.is_zero(m.get(i, c)) {
                    let factor = m.get(i, c).clone();
                    for j in c..m.ncols {
                        let t = f.mul(&factor, m.get(r, j));
                        let v = f.sub(m.get(i, j), &t);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{v : self * v = 0}`, one vector per
    /// free column of the echelon form, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (e, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.ncols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for &fc in &free_cols {
            let mut v = vec![f.zero(); self.ncols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(e.get(row, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.solve_many(&[b.to_vec()]).map(|mut v| v.pop().unwrap())
    }

    /// Solves `self * x_k = b_k` for several right-hand sides with a single
    /// elimination; `None` if any system is inconsistent.
    pub fn solve_many(&self, bs: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
        let f = &self.field;
        let k = bs.len();
        for b in bs {
            assert_eq!(b.len(), self.nrows, "rhs length mismatch");
        }
        let aug = Matrix::from_fn(
            f.clone(),
            self.nrows,
            self.ncols + k,
            |i, j| {
                if j < self.ncols {
                    self.get(i, j).clone()
                } else {
                    bs[j - self.ncols][i].clone()
                }
            },
        );
        let (e, pivots) = aug.rref();
        // Inconsistent iff some pivot lands in the right block.
        if pivots.iter().any(|&c| c >= self.ncols) {
            return None;
        }
        let mut out = vec![vec![f.zero(); self.ncols]; k];
        for (row, &pc) in pivots.iter().enumerate() {
            for t in 0..k {
                out[t][pc] = e.get(row, self.ncols + t).clone();
            }
        }
        Some(out)
    }

    /// Jordan type of a nilpotent square matrix: the partition whose dual
    /// records the kernel-dimension increments of successive powers.
    /// Errors if the kernel chain stabilizes below full dimension (the
    /// matrix has a nonzero eigenvalue somewhere).
    pub fn jordan_type(&self) -> Result<Partition> {
        assert_eq!(self.nrows, self.ncols, "jordan type needs a square matrix");
        let n = self.nrows;
        if n == 0 {
            return Ok(Partition::empty());
        }
        let mut increments = Vec::new();
        let mut power = Matrix::identity(self.field.clone(), n);
        let mut prev_kdim = 0usize;
        loop {
            power = power.mul(self);
            let kdim = n - power.rank();
            let inc = kdim - prev_kdim;
            if inc == 0 {
                return Err(Error::Nilpotency(format!(
                    "kernel chain stabilized at dimension {kdim} of {n}"
                )));
            }
            increments.push(inc as u32);
            prev_kdim = kdim;
            if kdim == n {
                break;
            }
        }
        // Increments are weakly decreasing for a genuine nilpotent, so this
        // is a valid partition; its dual has the Jordan block sizes.
        let cols = Partition::new(increments)
            .expect("kernel increments of a nilpotent are weakly decreasing");
        Ok(cols.dual())
    }

    /// Rows rendered through the field, for display and JSON.
    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.field.render(self.get(i, j))).collect())
            .collect()
    }

    pub fn from_string_grid(field: F, grid: &[Vec<String>]) -> Result<Self> {
        let rows = grid
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }

    /// Plain text block with aligned columns.
    pub fn to_ascii(&self) -> String {
        let grid = self.to_string_grid();
        let mut widths = vec![0usize; self.ncols];
        for row in &grid {
            for (j, cell) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell.len());
            }
        }
        grid.iter()
            .map(|row| {
                let cells: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(j, cell)| format!("{cell:>width$}", width = widths[j]))
                    .collect();
                format!("[ {} ]", cells.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    #[test]
    fn rref_and_rank_rationals() {
        let m = Matrix::from_i64_rows(Rationals, &[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let (e, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rank(), 2);
        // Echelon rows: (1, 0, -1), (0, 1, 2), (0, 0, 0).
        assert_eq!(e.to_string_grid()[0], vec!["1", "0", "-1"]);
        assert_eq!(e.to_string_grid()[1], vec!["0", "1", "2"]);
        assert_eq!(e.to_string_grid()[2], vec!["0", "0", "0"]);
    }

    #[test]
    fn rank_over_prime_field_can_drop() {
        // det = 10, zero mod 5 but not mod 3.
        let m3 = Matrix::from_i64_rows(PrimeField::new(3).unwrap(), &[&[1, 2], &[3, 16]]);
        let m5 = Matrix::from_i64_rows(PrimeField::new(5).unwrap(), &[&[1, 2], &[3, 16]]);
        assert_eq!(m3.rank(), 2);
        assert_eq!(m5.rank(), 1);
    }

    #[test]
    fn kernel_basis_is_in_kernel() {
        let m = Matrix::from_i64_rows(Rationals, &[&[1, 2, 3], &[4, 5, 6]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).iter().all(|x| Rationals.is_zero(x)));
        }
        // Zero-row matrix: kernel is everything.
        let z = Matrix::<Rationals>::zero(Rationals, 0, 4);
        assert_eq!(z.kernel_basis().len(), 4);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Rationals;
        let m = Matrix::from_i64_rows(f, &[&[1, 1], &[1, -1], &[2, 0]]);
        let b = vec![f.from_i64(3), f.from_i64(1), f.from_i64(4)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        let bad = vec![f.from_i64(3), f.from_i64(1), f.from_i64(5)];
        assert!(m.solve(&bad).is_none());
    }

    #[test]
    fn jordan_type_of_block_matrices() {
        // Single nilpotent Jordan block of size 4.
        let f = Rationals;
        let m = Matrix::from_fn(f, 4, 4, |i, j| {
            if j == i + 1 {
                Rationals.one()
            } else {
                Rationals.zero()
            }
        });
        assert_eq!(m.jordan_type().unwrap().parts(), &[4]);
        // Zero matrix.
        let z = Matrix::<Rationals>::zero(Rationals, 3, 3);
        assert_eq!(z.jordan_type().unwrap().parts(), &[1, 1, 1]);
        // Empty matrix.
        let e = Matrix::<Rationals>::zero(Rationals, 0, 0);
        assert!(e.jordan_type().unwrap().is_empty());
    }

    #[test]
    fn jordan_type_rejects_non_nilpotent() {
        let m = Matrix::identity(Rationals, 2);
        assert!(matches!(m.jordan_type(), Err(Error::Nilpotency(_))));
    }

    #[test]
    fn string_grid_round_trip() {
        let f = Rationals;
        let m = Matrix::from_rows(
            f,
            vec![vec![f.parse("1/2").unwrap(), f.from_i64(-3)]],
        )
        .unwrap();
        let grid = m.to_string_grid();
        assert_eq!(grid, vec![vec!["1/2".to_string(), "-3".to_string()]]);
        let back = Matrix::from_string_grid(f, &grid).unwrap();
        assert_eq!(back, m);
    }
}
