use num_traits::Zero;

use super::echelon::Echelon;
use super::linmap::LinearMap;
use super::rational::Rational;
use super::sparse::SparseVec;
use crate::error::{Error, Result};

/// A subspace of `Q^ambient`, held in canonical reduced row echelon form.
///
/// Two subspaces compare equal exactly when their canonical bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

/// Complement coordinates for a quotient `ambient / S`.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    /// Ambient indices whose unit vectors form a basis of a complement of `S`.
    pub complement: Vec<usize>,
    /// Map `ambient -> complement coordinates` killing `S`.
    pub projection: LinearMap,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(SparseVec::unit).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(ambient: usize, vectors: I) -> Self {
        let e = Echelon::from_rows(vectors.into_iter().inspect(|v| {
            assert!(
                v.support_bound() <= ambient,
                "vector exceeds ambient dimension {ambient}"
            )
        }));
        Subspace {
            ambient,
            basis: e.into_rows(),
        }
    }

    pub fn span_dense(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        Subspace::span(ambient, vectors.iter().map(|v| SparseVec::from_dense(v)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis rows (reduced echelon form, sorted by pivot).
    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.first().unwrap().0).collect()
    }

    fn echelon(&self) -> Echelon {
        Echelon::from_rows(self.basis.iter().cloned())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Reduces `v` against the canonical basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for row in &self.basis {
            let (p, _) = row.first().unwrap();
            let c = out.get(p);
            if !c.is_zero() {
                out = out.add_scaled(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_pairs(
            self.basis
                .iter()
                .enumerate()
                .map(|(k, row)| (k, v.get(row.first().unwrap().0))),
        ))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v.clone());
        }
        Ok(Subspace {
            ambient: self.ambient,
            basis: e.into_rows(),
        })
    }

    /// Intersection by the Zassenhaus construction on `[a | a]` and `[b | 0]` rows.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut e = Echelon::new();
        for a in &self.basis {
            e.insert(a.concat(n, a));
        }
        for b in &other.basis {
            e.insert(b.clone());
        }
        let rows = e
            .rows()
            .filter(|r| r.first().unwrap().0 >= n)
            .map(|r| r.slice(n, 2 * n));
        Ok(Subspace::span(n, rows.collect::<Vec<_>>()))
    }

    /// Complement spanned by the non-pivot unit vectors, with the projection onto it.
    pub fn quotient_basis(&self) -> QuotientBasis {
        let order: Vec<usize> = (0..self.ambient).collect();
        self.quotient_basis_by_priority(&order)
    }

    /// Like [`Subspace::quotient_basis`], but pivots are chosen by `priority`
    /// (a permutation of the ambient indices, most preferred pivot first).
    pub fn quotient_basis_by_priority(&self, priority: &[usize]) -> QuotientBasis {
        let n = self.ambient;
        assert_eq!(priority.len(), n);
        let mut rank = vec![0usize; n];
        for (k, &i) in priority.iter().enumerate() {
            rank[i] = k;
        }
        let e = Echelon::from_rows(self.basis.iter().map(|v| v.map_indices(|i| rank[i])));
        let mut complement: Vec<usize> = (0..n)
            .filter(|&k| !e.is_pivot(k))
            .map(|k| priority[k])
            .collect();
        complement.sort_unstable();
        let mut slot = vec![usize::MAX; n];
        for (c, &i) in complement.iter().enumerate() {
            slot[i] = c;
        }
        let columns = (0..n)
            .map(|i| {
                let r = e.reduce(&SparseVec::unit(rank[i]));
                r.map_indices(|k| slot[priority[k]])
            })
            .collect();
        QuotientBasis {
            complement,
            projection: LinearMap::from_columns(n - self.dim(), columns),
        }
    }

    /// Basis whose leading entries (by `priority`, most preferred first) are distinct.
    /// Returned as `(leading index, vector)` pairs sorted by increasing priority rank of
    /// the leading index reversed, so that the least preferred leads come first.
    pub fn basis_by_priority(&self, priority: &[usize]) -> Vec<(usize, SparseVec)> {
        let n = self.ambient;
        let mut rank = vec![0usize; n];
        for (k, &i) in priority.iter().enumerate() {
            rank[i] = k;
        }
        let e = Echelon::from_rows(self.basis.iter().map(|v| v.map_indices(|i| rank[i])));
        let mut out: Vec<(usize, SparseVec)> = e
            .into_rows()
            .into_iter()
            .map(|r| {
                (
                    priority[r.first().unwrap().0],
                    r.map_indices(|k| priority[k]),
                )
            })
            .collect();
        out.reverse();
        out
    }

    /// Image of the subspace under an index embedding into a larger ambient space.
    pub fn embed(&self, ambient: usize, f: impl Fn(usize) -> usize) -> Subspace {
        Subspace::span(
            ambient,
            self.basis
                .iter()
                .map(|v| v.map_indices(&f))
                .collect::<Vec<_>>(),
        )
    }
}
