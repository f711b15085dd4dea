use crate::exact::{Echelon, LinearMap, SparseVec, Subspace};
use crate::verdict::{render_vec, Verdict};
use crate::{Error, Result};

/// A finite-dimensional Leibniz algebra given by structure constants:
/// `table[i][j]` is `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    name: String,
    names: Vec<String>,
    table: Vec<Vec<SparseVec>>,
}

impl LeibnizAlgebra {
    /// Builds an algebra from sparse entries `(i, j, [e_i, e_j])`; omitted brackets are zero.
    /// Repeated `(i, j)` pairs are summed.
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
                    "bracket entry ({i}, {j}) out of range for dimension {n}"
                )));
            }
            table[i][j] = table[i][j].add(&v);
        }
        Ok(LeibnizAlgebra {
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
                "bracket table does not match dimension {n}"
            )));
        }
        Ok(LeibnizAlgebra {
            name: name.to_string(),
            names,
            table,
        })
    }

    pub fn abelian(name: &str, names: Vec<String>) -> Self {
        let n = names.len();
        LeibnizAlgebra {
            name: name.to_string(),
            names,
            table: vec![vec![SparseVec::new(); n]; n],
        }
    }

    pub fn zero(name: &str) -> Self {
        LeibnizAlgebra::abelian(name, Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> Self {
        LeibnizAlgebra {
            name: name.to_string(),
            ..self.clone()
        }
    }

    pub fn with_names(&self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        LeibnizAlgebra {
            names,
            ..self.clone()
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// Nonzero structure constants in row-major order.
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

    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled_assign(&(x * y), &self.table[i][j]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|r| r.iter().all(SparseVec::is_zero))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i].neg()))
    }

    /// `[[x,y],z] = [x,[y,z]] + [[x,z],y]` over all basis triples.
    pub fn check_leibniz(&self) -> Verdict {
        let n = self.dim();
        let mut v = Verdict::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let lhs = self.bracket(&self.bracket(&x, &y), &z);
                    let rhs = self
                        .bracket(&x, &self.bracket(&y, &z))
                        .add(&self.bracket(&self.bracket(&x, &z), &y));
                    v.compare(
                        "leibniz",
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

    /// Antisymmetry and the Leibniz identity (which is the Jacobi identity in the antisymmetric case).
    pub fn check_lie(&self) -> Verdict {
        let n = self.dim();
        let mut v = Verdict::new();
        for i in 0..n {
            for j in 0..n {
                v.compare(
                    "antisymmetry",
                    &[&self.names[i], &self.names[j]],
                    &self.table[i][j],
                    &self.table[j][i].neg(),
                    &self.names,
                );
            }
        }
        v.merge(self.check_leibniz());
        v
    }

    /// Whether `f: self → other` preserves brackets.
    pub fn check_morphism(&self, f: &LinearMap, other: &LeibnizAlgebra) -> Verdict {
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
                let rhs = other.bracket(f.column(i), f.column(j));
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

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &Subspace) -> Subspace {
        let n = self.dim();
        let mut e = Echelon::from_rows(gens.basis().iter().cloned());
        let mut frontier: Vec<SparseVec> = e.rows().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for k in 0..n {
                    let ek = SparseVec::unit(k);
                    for w in [self.bracket(v, &ek), self.bracket(&ek, v)] {
                        if e.insert(w.clone()).is_some() {
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        Subspace::span(n, e.into_rows())
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        self.ideal_closure(sub) == *sub
    }

    pub fn is_subalgebra(&self, sub: &Subspace) -> bool {
        sub.basis().iter().all(|a| {
            sub.basis()
                .iter()
                .all(|b| sub.contains(&self.bracket(a, b)))
        })
    }

    /// Restriction to a subalgebra, with the inclusion map. Basis: the subspace's canonical basis.
    pub fn subalgebra(
        &self,
        sub: &Subspace,
        name: &str,
        names: Vec<String>,
    ) -> Result<(LeibnizAlgebra, LinearMap)> {
        if !self.is_subalgebra(sub) || names.len() != sub.dim() {
            return Err(Error::Input("not a subalgebra".into()));
        }
        let basis = sub.basis();
        let table = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| sub.coordinates(&self.bracket(a, b)).unwrap())
                    .collect()
            })
            .collect();
        let alg = LeibnizAlgebra::from_table(name, names, table)?;
        Ok((alg, LinearMap::from_columns(self.dim(), basis.to_vec())))
    }

    /// Quotient by an ideal, with the canonical complement basis and the projection.
    pub fn quotient(&self, ideal: &Subspace, name: &str) -> Result<(LeibnizAlgebra, LinearMap)> {
        if !self.is_ideal(ideal) {
            return Err(Error::Input(
                "quotient by a subspace that is not an ideal".into(),
            ));
        }
        let qb = ideal.quotient_basis();
        let proj = qb.projection;
        let names = qb
            .complement
            .iter()
            .map(|&i| self.names[i].clone())
            .collect();
        let table = qb
            .complement
            .iter()
            .map(|&i| {
                qb.complement
                    .iter()
                    .map(|&j| proj.apply(&self.table[i][j]))
                    .collect()
            })
            .collect();
        Ok((LeibnizAlgebra::from_table(name, names, table)?, proj))
    }

    /// The ideal generated by all squares `[x, x]`.
    pub fn squares_ideal(&self) -> Subspace {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i..n {
                gens.push(self.table[i][j].add(&self.table[j][i]));
            }
        }
        self.ideal_closure(&Subspace::span(n, gens))
    }

    /// The universal Lie quotient.
    pub fn liezation(&self) -> Result<Liezation> {
        let ideal = self.squares_ideal();
        let (lie, projection) = self.quotient(&ideal, &format!("Liez({})", self.name))?;
        Ok(Liezation {
            lie,
            projection,
            ideal,
        })
    }

    /// Direct sum `self ⊕ other` (basis of `self` first).
    pub fn direct_sum(&self, other: &LeibnizAlgebra, name: &str) -> LeibnizAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut table = vec![vec![SparseVec::new(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = self.table[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[n + i][n + j] = other.table[i][j].shifted(n);
            }
        }
        let names = disjoint_names(&self.names, &other.names);
        LeibnizAlgebra {
            name: name.to_string(),
            names,
            table,
        }
    }

    pub fn render(&self, v: &SparseVec) -> String {
        render_vec(v, &self.names)
    }
}

/// Basis names for a direct sum: kept as they are unless they collide.
pub fn disjoint_names(a: &[String], b: &[String]) -> Vec<String> {
    let clash = a.iter().any(|x| b.contains(x));
    if clash {
        a.iter()
            .map(|x| format!("{x}'"))
            .chain(b.iter().cloned())
            .collect()
    } else {
        a.iter().chain(b.iter()).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Liezation {
    pub lie: LeibnizAlgebra,
    pub projection: LinearMap,
    pub ideal: Subspace,
}
