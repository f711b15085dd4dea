use super::action::LeibnizAction;
use super::algebra::LeibnizAlgebra;
use crate::exact::{LinearMap, SparseVec};
use crate::verdict::Verdict;
use crate::{Error, Result};

/// A representation of a Leibniz algebra on `K^dim`: `left[i]` is `m ↦ [p_i, m]` and
/// `right[i]` is `m ↦ [m, p_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizRep {
    pub algebra: LeibnizAlgebra,
    names: Vec<String>,
    left: Vec<LinearMap>,
    right: Vec<LinearMap>,
}

impl LeibnizRep {
    pub fn new(
        algebra: LeibnizAlgebra,
        names: Vec<String>,
        left: Vec<LinearMap>,
        right: Vec<LinearMap>,
    ) -> Result<Self> {
        let (n, m) = (algebra.dim(), names.len());
        let square = |f: &LinearMap| f.rows() == m && f.cols() == m;
        if left.len() != n || right.len() != n || !left.iter().chain(&right).all(square) {
            return Err(Error::Dimension(
                "representation matrices do not match".into(),
            ));
        }
        Ok(LeibnizRep {
            algebra,
            names,
            left,
            right,
        })
    }

    pub fn zero(algebra: LeibnizAlgebra, names: Vec<String>) -> Self {
        let (n, m) = (algebra.dim(), names.len());
        LeibnizRep {
            algebra,
            names,
            left: vec![LinearMap::zero(m, m); n],
            right: vec![LinearMap::zero(m, m); n],
        }
    }

    /// The algebra acting on itself by brackets.
    pub fn adjoint(p: &LeibnizAlgebra) -> Self {
        let n = p.dim();
        let left = (0..n)
            .map(|i| {
                LinearMap::from_columns(n, (0..n).map(|j| p.basis_bracket(i, j).clone()).collect())
            })
            .collect();
        let right = (0..n)
            .map(|i| {
                LinearMap::from_columns(n, (0..n).map(|j| p.basis_bracket(j, i).clone()).collect())
            })
            .collect();
        LeibnizRep {
            algebra: p.clone(),
            names: p.names().to_vec(),
            left,
            right,
        }
    }

    pub fn with_names(self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        LeibnizRep { names, ..self }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn left(&self, i: usize) -> &LinearMap {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &LinearMap {
        &self.right[i]
    }

    /// Matrix of `m ↦ [p, m]`.
    pub fn left_of(&self, p: &SparseVec) -> LinearMap {
        combine(&self.left, p, self.dim())
    }

    /// Matrix of `m ↦ [m, p]`.
    pub fn right_of(&self, p: &SparseVec) -> LinearMap {
        combine(&self.right, p, self.dim())
    }

    pub fn act_left(&self, p: &SparseVec, m: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in p.iter() {
            out.add_scaled_assign(c, &self.left[i].apply(m));
        }
        out
    }

    pub fn act_right(&self, m: &SparseVec, p: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in p.iter() {
            out.add_scaled_assign(c, &self.right[i].apply(m));
        }
        out
    }

    /// The three representation axioms over basis elements.
    pub fn check_rep(&self) -> Verdict {
        let p = &self.algebra;
        let mut v = Verdict::new();
        for k in 0..self.dim() {
            let m = SparseVec::unit(k);
            for i in 0..p.dim() {
                for j in 0..p.dim() {
                    let (a, b) = (SparseVec::unit(i), SparseVec::unit(j));
                    let ab = p.bracket(&a, &b);
                    let tuple = [
                        self.names[k].as_str(),
                        p.names()[i].as_str(),
                        p.names()[j].as_str(),
                    ];
                    // [m,[a,b]] = [[m,a],b] - [[m,b],a]
                    let lhs = self.act_right(&m, &ab);
                    let rhs = self
                        .act_right(&self.act_right(&m, &a), &b)
                        .sub(&self.act_right(&self.act_right(&m, &b), &a));
                    v.compare("rep (m,p,p)", &tuple, &lhs, &rhs, &self.names);
                    // [a,[m,b]] = [[a,m],b] - [[a,b],m]
                    let lhs = self.act_left(&a, &self.act_right(&m, &b));
                    let rhs = self
                        .act_right(&self.act_left(&a, &m), &b)
                        .sub(&self.act_left(&ab, &m));
                    v.compare("rep (p,m,p)", &tuple, &lhs, &rhs, &self.names);
                    // [a,[b,m]] = [[a,b],m] - [[a,m],b]
                    let lhs = self.act_left(&a, &self.act_left(&b, &m));
                    let rhs = self
                        .act_left(&ab, &m)
                        .sub(&self.act_right(&self.act_left(&a, &m), &b));
                    v.compare("rep (p,p,m)", &tuple, &lhs, &rhs, &self.names);
                }
            }
        }
        v
    }

    /// The action of the algebra on `M` viewed as an abelian Leibniz algebra.
    pub fn as_action(&self) -> LeibnizAction {
        let m = LeibnizAlgebra::abelian("M", self.names.clone());
        let n = self.algebra.dim();
        let left = (0..n)
            .map(|i| {
                (0..self.dim())
                    .map(|k| self.left[i].column(k).clone())
                    .collect()
            })
            .collect();
        let right = (0..self.dim())
            .map(|k| (0..n).map(|i| self.right[i].column(k).clone()).collect())
            .collect();
        LeibnizAction::new(self.algebra.clone(), m, left, right)
            .expect("dimensions checked at construction")
    }

    /// `M ⊕ p` with `M` an abelian ideal (basis of `M` first). Not checked.
    pub fn split_extension(&self) -> LeibnizAlgebra {
        let act = self.as_action();
        let names = super::algebra::disjoint_names(act.target.names(), act.actor.names());
        let (nm, np) = (self.dim(), self.algebra.dim());
        let mut entries = Vec::new();
        for k in 0..nm {
            for i in 0..np {
                entries.push((k, nm + i, self.right[i].column(k).clone()));
                entries.push((nm + i, k, self.left[i].column(k).clone()));
            }
        }
        for i in 0..np {
            for j in 0..np {
                entries.push((nm + i, nm + j, self.algebra.basis_bracket(i, j).shifted(nm)));
            }
        }
        LeibnizAlgebra::new("M⋊p", names, entries).expect("indices in range")
    }

    /// Recovers a representation from a Leibniz structure on `M ⊕ p` (first `m` coordinates) in which
    /// `M` is an abelian ideal and `p` a subalgebra.
    pub fn from_split_extension(alg: &LeibnizAlgebra, m: usize, p: LeibnizAlgebra) -> Result<Self> {
        let np = alg.dim() - m;
        if p.dim() != np {
            return Err(Error::Dimension("split extension dimensions".into()));
        }
        let in_m = |v: &SparseVec| v.support_bound() <= m;
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let v = alg.basis_bracket(a, b);
                let ok = match (a < m, b < m) {
                    (true, true) => v.is_zero(),
                    (false, false) => *v == p.basis_bracket(a - m, b - m).shifted(m),
                    _ => in_m(v),
                };
                if !ok {
                    return Err(Error::Input(
                        "not a split extension by an abelian ideal".into(),
                    ));
                }
            }
        }
        let left = (0..np)
            .map(|i| {
                LinearMap::from_columns(
                    m,
                    (0..m)
                        .map(|k| alg.basis_bracket(m + i, k).clone())
                        .collect(),
                )
            })
            .collect();
        let right = (0..np)
            .map(|i| {
                LinearMap::from_columns(
                    m,
                    (0..m)
                        .map(|k| alg.basis_bracket(k, m + i).clone())
                        .collect(),
                )
            })
            .collect();
        LeibnizRep::new(p, alg.names()[..m].to_vec(), left, right)
    }

    /// `M ⊕ N` (basis of `self` first).
    pub fn direct_sum(&self, other: &LeibnizRep) -> Result<LeibnizRep> {
        if self.algebra != other.algebra {
            return Err(Error::Input(
                "direct sum of representations of different algebras".into(),
            ));
        }
        let (a, b) = (self.dim(), other.dim());
        let block = |x: &LinearMap, y: &LinearMap| {
            let cols = x
                .columns()
                .iter()
                .cloned()
                .chain(y.columns().iter().map(|c| c.shifted(a)))
                .collect();
            LinearMap::from_columns(a + b, cols)
        };
        let left = self
            .left
            .iter()
            .zip(&other.left)
            .map(|(x, y)| block(x, y))
            .collect();
        let right = self
            .right
            .iter()
            .zip(&other.right)
            .map(|(x, y)| block(x, y))
            .collect();
        let names = super::algebra::disjoint_names(&self.names, &other.names);
        LeibnizRep::new(self.algebra.clone(), names, left, right)
    }

    /// The same representation in the basis given by the columns of the invertible `change`.
    pub fn conjugate(&self, change: &LinearMap) -> Result<LeibnizRep> {
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Input("change of basis is not invertible".into()))?;
        let conj = |f: &LinearMap| inv.compose(&f.compose(change).unwrap()).unwrap();
        let left = self.left.iter().map(conj).collect();
        let right = self.right.iter().map(conj).collect();
        LeibnizRep::new(self.algebra.clone(), self.names.clone(), left, right)
    }

    /// Whether `f: self → other` commutes with both actions.
    pub fn check_morphism(&self, f: &LinearMap, other: &LeibnizRep) -> Verdict {
        let mut v = Verdict::new();
        for i in 0..self.algebra.dim() {
            for k in 0..self.dim() {
                let m = SparseVec::unit(k);
                let tuple = [self.algebra.names()[i].as_str(), self.names[k].as_str()];
                v.compare(
                    "left action",
                    &tuple,
                    &f.apply(&self.left[i].apply(&m)),
                    &other.left[i].apply(&f.apply(&m)),
                    other.names(),
                );
                v.compare(
                    "right action",
                    &tuple,
                    &f.apply(&self.right[i].apply(&m)),
                    &other.right[i].apply(&f.apply(&m)),
                    other.names(),
                );
            }
        }
        v
    }
}

pub(crate) fn combine(maps: &[LinearMap], coeffs: &SparseVec, dim: usize) -> LinearMap {
    let mut out = LinearMap::zero(dim, dim);
    for (i, c) in coeffs.iter() {
        out = out.add(&maps[i].scaled(c)).expect("same shape");
    }
    out
}
