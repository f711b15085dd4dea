use num_traits::Zero;

use super::echelon::Echelon;
use super::rational::Rational;
use super::sparse::SparseVec;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A linear map `Q^cols -> Q^rows`; column `j` is the image of the `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.support_bound() <= rows));
        LinearMap {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// From a dense row-major matrix.
    pub fn from_dense(rows: usize, cols: usize, m: &[Vec<Rational>]) -> Self {
        assert_eq!(m.len(), rows);
        let columns = (0..cols)
            .map(|j| SparseVec::from_pairs((0..rows).map(|i| (i, m[i][j].clone()))))
            .collect();
        LinearMap {
            rows,
            cols,
            columns,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            columns: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            rows: n,
            cols: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.columns[j].get(i)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                m[i][j] = x.clone();
            }
        }
        m
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert!(
            v.support_bound() <= self.cols,
            "vector exceeds source dimension"
        );
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out = out.add_scaled(c, &self.columns[j]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.rows != self.cols {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(LinearMap {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("adding maps of different shapes".into()));
        }
        Ok(LinearMap {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scaled(&self, c: &Rational) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                cols[i].push((j, x.clone()));
            }
        }
        LinearMap {
            rows: self.cols,
            cols: self.rows,
            columns: cols.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.columns.iter().cloned().collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn kernel(&self) -> Subspace {
        let n = self.rows;
        let mut e = Echelon::new();
        for (j, c) in self.columns.iter().enumerate() {
            e.insert(c.concat(n, &SparseVec::unit(j)));
        }
        let kernel_rows: Vec<SparseVec> = e
            .rows()
            .filter(|r| r.first().unwrap().0 >= n)
            .map(|r| r.slice(n, n + self.cols))
            .collect();
        Subspace::span(self.cols, kernel_rows)
    }

    /// `{v : self(v) ∈ target}`.
    pub fn preimage(&self, target: &Subspace) -> Result<Subspace> {
        if target.ambient() != self.rows {
            return Err(Error::Dimension(
                "preimage target lives in a different space".into(),
            ));
        }
        let q = target.quotient_basis();
        Ok(q.projection.compose(self)?.kernel())
    }

    /// Restriction to `source`, expressed in the canonical basis coordinates of `source`.
    pub fn restrict(&self, source: &Subspace) -> Result<LinearMap> {
        if source.ambient() != self.cols {
            return Err(Error::Dimension(
                "restriction to a subspace of another space".into(),
            ));
        }
        Ok(LinearMap {
            rows: self.rows,
            cols: source.dim(),
            columns: source.basis().iter().map(|b| self.apply(b)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    /// Two-sided inverse of a square invertible map.
    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.cols;
        if self.rows != n {
            return None;
        }
        let t = self.transpose();
        let e = Echelon::from_rows((0..n).map(|i| t.columns[i].concat(n, &SparseVec::unit(i))));
        if e.rank() != n || e.pivots().any(|p| p >= n) {
            return None;
        }
        let rows: Vec<SparseVec> = e.rows().map(|r| r.slice(n, 2 * n)).collect();
        Some(LinearMap::from_columns(n, rows).transpose())
    }

    /// Some `x` with `self(x) = v`, if `v` lies in the image.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let n = self.rows;
        let e = Echelon::from_rows(
            self.columns
                .iter()
                .enumerate()
                .map(|(j, c)| c.concat(n, &SparseVec::unit(j))),
        );
        let r = e.reduce(&v.concat(n, &SparseVec::new()));
        if r.iter().any(|(i, _)| i < n) {
            return None;
        }
        Some(r.slice(n, n + self.cols).neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn inverse_of_shear() {
        let a = LinearMap::from_dense(2, 2, &[vec![int(1), int(2)], vec![int(0), int(1)]]);
        let b = a.inverse().unwrap();
        assert_eq!(a.compose(&b).unwrap(), LinearMap::identity(2));
        assert!(
            LinearMap::from_dense(2, 2, &[vec![int(1), int(2)], vec![int(2), int(4)]])
                .inverse()
                .is_none()
        );
    }

    #[test]
    fn solve_on_singular_map() {
        let a = LinearMap::from_dense(2, 2, &[vec![int(1), int(2)], vec![int(2), int(4)]]);
        let x = a.solve(&v(&[3, 6])).unwrap();
        assert_eq!(a.apply(&x), v(&[3, 6]));
        assert!(a.solve(&v(&[1, 0])).is_none());
    }

    #[test]
    fn kernel_of_zero_map() {
        assert_eq!(LinearMap::zero(3, 2).kernel(), Subspace::full(2));
    }

    #[test]
    fn kernel_of_identity() {
        assert!(LinearMap::identity(4).kernel().is_zero());
    }

    #[test]
    fn preimage_of_zero() {
        let f = LinearMap::from_dense(1, 2, &[vec![int(1), int(1)]]);
        let pre = f.preimage(&Subspace::zero(1)).unwrap();
        assert_eq!(pre, Subspace::span(2, [v(&[1, -1])]));
    }

    #[test]
    fn restrict_and_compose() {
        let f = LinearMap::from_dense(2, 2, &[vec![int(0), int(1)], vec![int(1), int(0)]]);
        let s = Subspace::span(2, [v(&[1, 1])]);
        let r = f.restrict(&s).unwrap();
        assert_eq!(r.column(0), &v(&[1, 1]));
        assert_eq!(f.compose(&f).unwrap(), LinearMap::identity(2));
        assert!(f.compose(&LinearMap::zero(3, 1)).is_err());
    }
}
