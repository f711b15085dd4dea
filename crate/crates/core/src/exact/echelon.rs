use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::sparse::SparseVec;

/// Incrementally maintained reduced row echelon form.
///
/// Pivots are the smallest nonzero index of each row; every row is normalized to
/// pivot value one and has zeros in the pivot columns of all other rows. The
/// final state depends only on the row space, never on insertion order.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec>>(rows: I) -> Self {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Rows ordered by pivot.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.rows.values()
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows.into_values().collect()
    }

    /// Reduces `v` modulo the row space: the result has zeros in every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter(|(i, _)| self.rows.contains_key(i))
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut out = v.clone();
        for (p, c) in hits {
            out = out.add_scaled(&-c, &self.rows[&p]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coefficients of `v` in terms of the rows (keyed by pivot), if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<(usize, Rational)>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            v.iter()
                .filter(|(i, _)| self.rows.contains_key(i))
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        )
    }

    /// Inserts `v`; returns the new pivot if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce(&v);
        let (p, lead) = match r.first() {
            Some((p, c)) => (p, c.clone()),
            None => return None,
        };
        let r = if lead.is_one() {
            r
        } else {
            r.scaled(&(Rational::one() / lead))
        };
        let touched: Vec<usize> = self
            .rows
            .iter()
            .filter(|(_, row)| !row.get(p).is_zero())
            .map(|(k, _)| *k)
            .collect();
        for k in touched {
            let row = self.rows.get_mut(&k).unwrap();
            let c = row.get(p);
            *row = row.add_scaled(&-c, &r);
        }
        self.rows.insert(p, r);
        Some(p)
    }
}

/// Reduced row echelon form of a dense matrix: returns the nonzero echelon rows and pivot columns.
pub fn rref(matrix: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = matrix.first().map_or(0, |r| r.len());
    let e = Echelon::from_rows(matrix.iter().map(|r| SparseVec::from_dense(r)));
    let pivots: Vec<usize> = e.pivots().collect();
    let rows = e
        .into_rows()
        .into_iter()
        .map(|r| r.to_dense(ncols))
        .collect();
    (rows, pivots)
}
