use crate::exact::{Echelon, LinearMap, SparseVec, Subspace};
use crate::leibniz::disjoint_names;
use crate::verdict::{render_vec, Verdict};
use crate::{Error, Result};

/// A finite-dimensional associative algebra, not necessarily unital:
/// `table[i][j]` is `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAlgebra {
    name: String,
    names: Vec<String>,
    table: Vec<Vec<SparseVec>>,
}

impl AssocAlgebra {
    pub fn new(
        name: &str,
        names: Vec<String>,
        entries: Vec<(usize, usize, SparseVec)>,
    ) -> Result<Self> {
        let n = names.len();
        let mut table = vec![vec![SparseVec::new(); n]; n];
        for (i, j, v) in entries {
            if i >= n || j >= n || v.support_bound() > n {
                return Err(Error::Dimension(format!(
                    "product entry ({i}, {j}) out of range for dimension {n}"
                )));
            }
            table[i][j] = table[i][j].add(&v);
        }
        Ok(AssocAlgebra {
            name: name.to_string(),
            names,
            table,
        })
    }

    pub fn from_table(name: &str, names: Vec<String>, table: Vec<Vec<SparseVec>>) -> Result<Self> {
        let n = names.len();
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.support_bound() > n))
        {
            return Err(Error::Dimension(format!(
                "product table does not match dimension {n}"
            )));
        }
        Ok(AssocAlgebra {
            name: name.to_string(),
            names,
            table,
        })
    }

    pub fn zero_product(name: &str, names: Vec<String>) -> Self {
        let n = names.len();
        AssocAlgebra {
            name: name.to_string(),
            names,
            table: vec![vec![SparseVec::new(); n]; n],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn entries(&self) -> Vec<(usize, usize, &SparseVec)> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled_assign(&(x * y), &self.table[i][j]);
            }
        }
        out
    }

    pub fn check_assoc(&self) -> Verdict {
        let n = self.dim();
        let mut v = Verdict::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let lhs = self.mul(&self.mul(&x, &y), &z);
                    let rhs = self.mul(&x, &self.mul(&y, &z));
                    v.compare(
                        "associativity",
                        &[&self.names[i], &self.names[j], &self.names[k]],
                        &lhs,
                        &rhs,
                        &self.names,
                    );
                }
            }
        }
        v
    }

    pub fn check_morphism(&self, f: &LinearMap, other: &AssocAlgebra) -> Verdict {
        let mut v = Verdict::new();
        if f.cols() != self.dim() || f.rows() != other.dim() {
            v.fail(
                "dimension",
                &[],
                format!("{}x{}", f.rows(), f.cols()),
                format!("{}x{}", other.dim(), self.dim()),
            );
            return v;
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = f.apply(&self.table[i][j]);
                let rhs = other.mul(f.column(i), f.column(j));
                v.compare(
                    "morphism",
                    &[&self.names[i], &self.names[j]],
                    &lhs,
                    &rhs,
                    other.names(),
                );
            }
        }
        v
    }

    /// Span of all products `a b` with `a ∈ x`, `b ∈ y`.
    pub fn product_span(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let mut e = Echelon::new();
        for a in x.basis() {
            for b in y.basis() {
                e.insert(self.mul(a, b));
            }
        }
        Subspace::span(self.dim(), e.into_rows())
    }

    pub fn is_subalgebra(&self, sub: &Subspace) -> bool {
        sub.contains_subspace(&self.product_span(sub, sub))
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        let all = Subspace::full(self.dim());
        sub.contains_subspace(&self.product_span(&all, sub))
            && sub.contains_subspace(&self.product_span(sub, &all))
    }

    /// Restriction to a subalgebra (basis: the subspace's canonical basis), with the inclusion.
    pub fn subalgebra(
        &self,
        sub: &Subspace,
        name: &str,
        names: Vec<String>,
    ) -> Result<(AssocAlgebra, LinearMap)> {
        if !self.is_subalgebra(sub) || names.len() != sub.dim() {
            return Err(Error::Input("not a subalgebra".into()));
        }
        let basis = sub.basis();
        let table = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| sub.coordinates(&self.mul(a, b)).unwrap())
                    .collect()
            })
            .collect();
        Ok((
            AssocAlgebra::from_table(name, names, table)?,
            LinearMap::from_columns(self.dim(), basis.to_vec()),
        ))
    }

    pub fn render(&self, v: &SparseVec) -> String {
        render_vec(v, &self.names)
    }
}

/// Names for the basis of `b ⊕ a`.
pub(crate) fn pair_names(b: &[String], a: &[String]) -> Vec<String> {
    disjoint_names(b, a)
}
