use super::algebra::{disjoint_names, LeibnizAlgebra};
use crate::exact::{LinearMap, SparseVec, Subspace};
use crate::verdict::Verdict;
use crate::{Error, Result};

/// An action of `actor` (p) on `target` (q): `left[i][j] = [p_i, q_j]`, `right[j][i] = [q_j, p_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAction {
    pub actor: LeibnizAlgebra,
    pub target: LeibnizAlgebra,
    left: Vec<Vec<SparseVec>>,
    right: Vec<Vec<SparseVec>>,
}

impl LeibnizAction {
    pub fn new(
        actor: LeibnizAlgebra,
        target: LeibnizAlgebra,
        left: Vec<Vec<SparseVec>>,
        right: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let (np, nq) = (actor.dim(), target.dim());
        let ok_left = left.len() == np
            && left
                .iter()
                .all(|r| r.len() == nq && r.iter().all(|v| v.support_bound() <= nq));
        let ok_right = right.len() == nq
            && right
                .iter()
                .all(|r| r.len() == np && r.iter().all(|v| v.support_bound() <= nq));
        if !ok_left || !ok_right {
            return Err(Error::Dimension(
                "action tables do not match the algebras".into(),
            ));
        }
        Ok(LeibnizAction {
            actor,
            target,
            left,
            right,
        })
    }

    pub fn zero(actor: LeibnizAlgebra, target: LeibnizAlgebra) -> Self {
        let (np, nq) = (actor.dim(), target.dim());
        LeibnizAction {
            left: vec![vec![SparseVec::new(); nq]; np],
            right: vec![vec![SparseVec::new(); np]; nq],
            actor,
            target,
        }
    }

    /// The bracket action of `p` on itself.
    pub fn adjoint(p: &LeibnizAlgebra) -> Self {
        let n = p.dim();
        let left = (0..n)
            .map(|i| (0..n).map(|j| p.basis_bracket(i, j).clone()).collect())
            .collect();
        let right = (0..n)
            .map(|j| (0..n).map(|i| p.basis_bracket(j, i).clone()).collect())
            .collect();
        LeibnizAction {
            actor: p.clone(),
            target: p.clone(),
            left,
            right,
        }
    }

    /// The action of `p` on an ideal by restricting the bracket. Returns the ideal as an algebra,
    /// its inclusion, and the action.
    pub fn on_ideal(
        p: &LeibnizAlgebra,
        ideal: &Subspace,
        name: &str,
        names: Vec<String>,
    ) -> Result<(LinearMap, Self)> {
        if !p.is_ideal(ideal) {
            return Err(Error::Input("subspace is not an ideal".into()));
        }
        let (q, incl) = p.subalgebra(ideal, name, names)?;
        let basis = ideal.basis();
        let left = (0..p.dim())
            .map(|i| {
                basis
                    .iter()
                    .map(|b| {
                        ideal
                            .coordinates(&p.bracket(&SparseVec::unit(i), b))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let right = basis
            .iter()
            .map(|b| {
                (0..p.dim())
                    .map(|i| {
                        ideal
                            .coordinates(&p.bracket(b, &SparseVec::unit(i)))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        Ok((
            incl,
            LeibnizAction {
                actor: p.clone(),
                target: q,
                left,
                right,
            },
        ))
    }

    pub fn left_table(&self) -> &[Vec<SparseVec>] {
        &self.left
    }

    pub fn right_table(&self) -> &[Vec<SparseVec>] {
        &self.right
    }

    /// `[p, q]`.
    pub fn act_left(&self, p: &SparseVec, q: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in p.iter() {
            for (j, y) in q.iter() {
                out.add_scaled_assign(&(x * y), &self.left[i][j]);
            }
        }
        out
    }

    /// `[q, p]`.
    pub fn act_right(&self, q: &SparseVec, p: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, y) in q.iter() {
            for (i, x) in p.iter() {
                out.add_scaled_assign(&(x * y), &self.right[j][i]);
            }
        }
        out
    }

    /// The bracket on `q ⊕ p` without checking anything.
    fn semidirect_table(&self) -> Vec<Vec<SparseVec>> {
        let (nq, np) = (self.target.dim(), self.actor.dim());
        let n = nq + np;
        let mut table = vec![vec![SparseVec::new(); n]; n];
        for a in 0..nq {
            for b in 0..nq {
                table[a][b] = self.target.basis_bracket(a, b).clone();
            }
            for i in 0..np {
                table[a][nq + i] = self.right[a][i].clone();
                table[nq + i][a] = self.left[i][a].clone();
            }
        }
        for i in 0..np {
            for j in 0..np {
                table[nq + i][nq + j] = self.actor.basis_bracket(i, j).shifted(nq);
            }
        }
        table
    }

    /// The Leibniz identity over the six patterns mixing both algebras.
    pub fn check_action(&self) -> Verdict {
        let nq = self.target.dim();
        let names = disjoint_names(self.target.names(), self.actor.names());
        let alg = LeibnizAlgebra::from_table("", names.clone(), self.semidirect_table()).unwrap();
        let n = alg.dim();
        let kind = |i: usize| if i < nq { 'q' } else { 'p' };
        let mut v = Verdict::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let pattern: String = [kind(i), kind(j), kind(k)].iter().collect();
                    if pattern == "qqq" || pattern == "ppp" {
                        continue;
                    }
                    let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let lhs = alg.bracket(&alg.bracket(&x, &y), &z);
                    let rhs = alg
                        .bracket(&x, &alg.bracket(&y, &z))
                        .add(&alg.bracket(&alg.bracket(&x, &z), &y));
                    v.compare(
                        &format!("action ({pattern})"),
                        &[&names[i], &names[j], &names[k]],
                        &lhs,
                        &rhs,
                        &names,
                    );
                }
            }
        }
        v
    }

    /// `q ⋊ p` on `q ⊕ p` (basis of `q` first).
    pub fn semidirect(&self) -> Result<LeibnizAlgebra> {
        let verdict = self.check_action();
        if let Some(w) = verdict.witnesses.first() {
            return Err(Error::Axiom {
                stage: "check_action".into(),
                detail: w.to_string(),
            });
        }
        let names = disjoint_names(self.target.names(), self.actor.names());
        LeibnizAlgebra::from_table(
            &format!("{}⋊{}", self.target.name(), self.actor.name()),
            names,
            self.semidirect_table(),
        )
    }
}
