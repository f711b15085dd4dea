use super::assoc::{pair_names, AssocAlgebra};
use crate::exact::{LinearMap, SparseVec};
use crate::verdict::Verdict;
use crate::{Error, Result};

/// A crossed module of associative algebras `ρ: B → A`, with `left[i][j] = a_i b_j` and
/// `right[j][i] = b_j a_i` in `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocXMod {
    pub b: AssocAlgebra,
    pub a: AssocAlgebra,
    pub rho: LinearMap,
    left: Vec<Vec<SparseVec>>,
    right: Vec<Vec<SparseVec>>,
}

impl AssocXMod {
    pub fn new(
        b: AssocAlgebra,
        a: AssocAlgebra,
        rho: LinearMap,
        left: Vec<Vec<SparseVec>>,
        right: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let (nb, na) = (b.dim(), a.dim());
        let ok = rho.cols() == nb
            && rho.rows() == na
            && left.len() == na
            && left
                .iter()
                .all(|r| r.len() == nb && r.iter().all(|v| v.support_bound() <= nb))
            && right.len() == nb
            && right
                .iter()
                .all(|r| r.len() == na && r.iter().all(|v| v.support_bound() <= nb));
        if !ok {
            return Err(Error::Dimension(
                "crossed module data does not match the algebras".into(),
            ));
        }
        Ok(AssocXMod {
            b,
            a,
            rho,
            left,
            right,
        })
    }

    /// `(A, A, id)` with multiplication as action.
    pub fn identity(a: &AssocAlgebra) -> Self {
        let n = a.dim();
        let left = (0..n)
            .map(|i| (0..n).map(|j| a.basis_product(i, j).clone()).collect())
            .collect();
        let right = (0..n)
            .map(|j| (0..n).map(|i| a.basis_product(j, i).clone()).collect())
            .collect();
        AssocXMod {
            b: a.clone(),
            a: a.clone(),
            rho: LinearMap::identity(n),
            left,
            right,
        }
    }

    pub fn left_table(&self) -> &[Vec<SparseVec>] {
        &self.left
    }

    pub fn right_table(&self) -> &[Vec<SparseVec>] {
        &self.right
    }

    /// `a · b`.
    pub fn act_left(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled_assign(&(x * y), &self.left[i][j]);
            }
        }
        out
    }

    /// `b · a`.
    pub fn act_right(&self, b: &SparseVec, a: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, y) in b.iter() {
            for (i, x) in a.iter() {
                out.add_scaled_assign(&(x * y), &self.right[j][i]);
            }
        }
        out
    }

    fn semidirect_table(&self) -> Vec<Vec<SparseVec>> {
        let (nb, na) = (self.b.dim(), self.a.dim());
        let n = nb + na;
        let mut table = vec![vec![SparseVec::new(); n]; n];
        for j in 0..nb {
            for k in 0..nb {
                table[j][k] = self.b.basis_product(j, k).clone();
            }
            for i in 0..na {
                table[j][nb + i] = self.right[j][i].clone();
                table[nb + i][j] = self.left[i][j].clone();
            }
        }
        for i in 0..na {
            for k in 0..na {
                table[nb + i][nb + k] = self.a.basis_product(i, k).shifted(nb);
            }
        }
        table
    }

    /// `B ⋊ A` with `(b,a)(b',a') = (bb' + ab' + ba', aa')`, basis of `B` first. Not checked.
    pub fn semidirect_unchecked(&self) -> AssocAlgebra {
        let names = pair_names(self.b.names(), self.a.names());
        AssocAlgebra::from_table(
            &format!("{}⋊{}", self.b.name(), self.a.name()),
            names,
            self.semidirect_table(),
        )
        .unwrap()
    }

    /// Associativity of both algebras and of the action, ρ multiplicative,
    /// equivariance and the Peiffer identities.
    pub fn check_xmod(&self) -> Verdict {
        let mut v = Verdict::new();
        for (stage, sub) in [("B: ", self.b.check_assoc()), ("A: ", self.a.check_assoc())] {
            for mut w in sub.witnesses.clone() {
                w.identity = format!("{stage}{}", w.identity);
                v.witnesses.push(w);
            }
            v.checked += sub.checked;
        }
        // the action axioms are the mixed associativity instances of the semidirect product
        let sd = self.semidirect_unchecked();
        let nb = self.b.dim();
        let kind = |i: usize| if i < nb { 'b' } else { 'a' };
        for i in 0..sd.dim() {
            for j in 0..sd.dim() {
                for k in 0..sd.dim() {
                    let pattern: String = [kind(i), kind(j), kind(k)].iter().collect();
                    if pattern == "bbb" || pattern == "aaa" {
                        continue;
                    }
                    let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let lhs = sd.mul(&sd.mul(&x, &y), &z);
                    let rhs = sd.mul(&x, &sd.mul(&y, &z));
                    let n = sd.names();
                    v.compare(
                        &format!("action ({pattern})"),
                        &[&n[i], &n[j], &n[k]],
                        &lhs,
                        &rhs,
                        n,
                    );
                }
            }
        }
        v.merge(self.b.check_morphism(&self.rho, &self.a));
        let rho = |x: &SparseVec| self.rho.apply(x);
        let (an, bn) = (self.a.names(), self.b.names());
        for j in 0..nb {
            let bj = SparseVec::unit(j);
            for i in 0..self.a.dim() {
                let ai = SparseVec::unit(i);
                let t = [an[i].as_str(), bn[j].as_str()];
                v.compare(
                    "equivariance ρ(ab)",
                    &t,
                    &rho(&self.act_left(&ai, &bj)),
                    &self.a.mul(&ai, &rho(&bj)),
                    an,
                );
                v.compare(
                    "equivariance ρ(ba)",
                    &t,
                    &rho(&self.act_right(&bj, &ai)),
                    &self.a.mul(&rho(&bj), &ai),
                    an,
                );
            }
            for k in 0..nb {
                let bk = SparseVec::unit(k);
                let t = [bn[j].as_str(), bn[k].as_str()];
                let mid = self.b.mul(&bj, &bk);
                v.compare(
                    "peiffer ρ(b1)b2",
                    &t,
                    &self.act_left(&rho(&bj), &bk),
                    &mid,
                    bn,
                );
                v.compare(
                    "peiffer b1ρ(b2)",
                    &t,
                    &self.act_right(&bj, &rho(&bk)),
                    &mid,
                    bn,
                );
            }
        }
        v
    }

    pub fn check_morphism(&self, phi: &LinearMap, psi: &LinearMap, other: &AssocXMod) -> Verdict {
        let mut v = self.b.check_morphism(phi, &other.b);
        v.merge(self.a.check_morphism(psi, &other.a));
        if !v.is_pass() {
            return v;
        }
        for j in 0..self.b.dim() {
            let bj = SparseVec::unit(j);
            let bn = &self.b.names()[j];
            v.compare(
                "ψρ = ρ'φ",
                &[bn],
                &psi.apply(&self.rho.apply(&bj)),
                &other.rho.apply(&phi.apply(&bj)),
                other.a.names(),
            );
            for i in 0..self.a.dim() {
                let ai = SparseVec::unit(i);
                let t = [self.a.names()[i].as_str(), bn.as_str()];
                let lhs = phi.apply(&self.act_left(&ai, &bj));
                v.compare(
                    "φ(ab) = ψ(a)φ(b)",
                    &t,
                    &lhs,
                    &other.act_left(&psi.apply(&ai), &phi.apply(&bj)),
                    other.b.names(),
                );
                let lhs = phi.apply(&self.act_right(&bj, &ai));
                v.compare(
                    "φ(ba) = φ(b)ψ(a)",
                    &t,
                    &lhs,
                    &other.act_right(&phi.apply(&bj), &psi.apply(&ai)),
                    other.b.names(),
                );
            }
        }
        v
    }

    /// `(B ⋊ A, A, σ, τ)` with `σ(b,a) = a`, `τ(b,a) = ρ(b) + a`.
    pub fn to_cat1(&self) -> Result<Cat1Assoc> {
        let verdict = self.check_xmod();
        if let Some(w) = verdict.witnesses.first() {
            return Err(Error::Axiom {
                stage: "check_xmod".into(),
                detail: w.to_string(),
            });
        }
        let total = self.semidirect_unchecked();
        let (nb, na) = (self.b.dim(), self.a.dim());
        let sigma = LinearMap::from_columns(
            na,
            (0..nb)
                .map(|_| SparseVec::new())
                .chain((0..na).map(SparseVec::unit))
                .collect(),
        );
        let tau = LinearMap::from_columns(
            na,
            (0..nb)
                .map(|j| self.rho.column(j).clone())
                .chain((0..na).map(SparseVec::unit))
                .collect(),
        );
        let incl =
            LinearMap::from_columns(nb + na, (0..na).map(|i| SparseVec::unit(nb + i)).collect());
        Ok(Cat1Assoc {
            total,
            base: self.a.clone(),
            incl,
            sigma,
            tau,
        })
    }
}

/// A cat¹-algebra: `incl: base → total` and retractions `σ, τ: total → base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat1Assoc {
    pub total: AssocAlgebra,
    pub base: AssocAlgebra,
    pub incl: LinearMap,
    pub sigma: LinearMap,
    pub tau: LinearMap,
}

impl Cat1Assoc {
    /// Morphism conditions, CAs1 and CAs2.
    pub fn check_cat1(&self) -> Verdict {
        let mut v = self.base.check_morphism(&self.incl, &self.total);
        v.merge(self.total.check_morphism(&self.sigma, &self.base));
        v.merge(self.total.check_morphism(&self.tau, &self.base));
        if !v.is_pass() {
            return v;
        }
        for i in 0..self.base.dim() {
            let e = SparseVec::unit(i);
            let name = [self.base.names()[i].as_str()];
            v.compare(
                "CAs1 σ|A0 = id",
                &name,
                &self.sigma.apply(self.incl.column(i)),
                &e,
                self.base.names(),
            );
            v.compare(
                "CAs1 τ|A0 = id",
                &name,
                &self.tau.apply(self.incl.column(i)),
                &e,
                self.base.names(),
            );
        }
        let (ks, kt) = (self.sigma.kernel(), self.tau.kernel());
        for x in ks.basis() {
            for y in kt.basis() {
                let zero = SparseVec::new();
                let (rx, ry) = (self.total.render(x), self.total.render(y));
                v.compare(
                    "CAs2 Ker σ Ker τ = 0",
                    &[&rx, &ry],
                    &self.total.mul(x, y),
                    &zero,
                    self.total.names(),
                );
                v.compare(
                    "CAs2 Ker τ Ker σ = 0",
                    &[&ry, &rx],
                    &self.total.mul(y, x),
                    &zero,
                    self.total.names(),
                );
            }
        }
        v
    }

    /// `τ|: Ker σ → base` with the induced action, and the inclusion of `Ker σ`.
    pub fn to_xmod(&self) -> Result<(AssocXMod, LinearMap)> {
        let verdict = self.check_cat1();
        if let Some(w) = verdict.witnesses.first() {
            return Err(Error::Axiom {
                stage: "check_cat1".into(),
                detail: w.to_string(),
            });
        }
        let ks = self.sigma.kernel();
        let names: Vec<String> = ks.basis().iter().map(|b| self.total.render(b)).collect();
        let (b, incl_k) =
            self.total
                .subalgebra(&ks, &format!("Ker σ({})", self.total.name()), names)?;
        let na = self.base.dim();
        let left = (0..na)
            .map(|i| {
                ks.basis()
                    .iter()
                    .map(|k| {
                        ks.coordinates(&self.total.mul(self.incl.column(i), k))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let right = ks
            .basis()
            .iter()
            .map(|k| {
                (0..na)
                    .map(|i| {
                        ks.coordinates(&self.total.mul(k, self.incl.column(i)))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let rho = self.tau.compose(&incl_k)?;
        Ok((
            AssocXMod::new(b, self.base.clone(), rho, left, right)?,
            incl_k,
        ))
    }
}

/// `cat1_to_xmod(xmod_to_cat1(x)) ≅ x` through `(b, 0) ↦ b` and the identity on `A`.
pub fn assoc_xmod_round_trip(x: &AssocXMod) -> Result<Verdict> {
    let c = x.to_cat1()?;
    let mut v = c.check_cat1();
    let (y, incl) = c.to_xmod()?;
    let nb = x.b.dim();
    let phi = LinearMap::from_columns(
        nb,
        incl.columns().iter().map(|col| col.slice(0, nb)).collect(),
    );
    if phi.rows() != phi.cols() || !phi.is_injective() {
        v.fail(
            "isomorphism",
            &[],
            format!("rank {}", phi.rank()),
            format!("dim {nb}"),
        );
        return Ok(v);
    }
    v.merge(y.check_morphism(&phi, &LinearMap::identity(x.a.dim()), x));
    Ok(v)
}

/// `xmod_to_cat1(cat1_to_xmod(c)) ≅ c` through `(k, a) ↦ k + incl(a)`.
pub fn cat1_assoc_round_trip(c: &Cat1Assoc) -> Result<Verdict> {
    let (x, incl_k) = c.to_xmod()?;
    let d = x.to_cat1()?;
    let nk = x.b.dim();
    let cols = (0..d.total.dim())
        .map(|i| {
            if i < nk {
                incl_k.column(i).clone()
            } else {
                c.incl.column(i - nk).clone()
            }
        })
        .collect();
    let iso = LinearMap::from_columns(c.total.dim(), cols);
    let mut v = Verdict::new();
    if iso.rows() != iso.cols() || !iso.is_injective() {
        v.fail(
            "isomorphism",
            &[],
            format!("rank {}", iso.rank()),
            format!("dim {}", c.total.dim()),
        );
        return Ok(v);
    }
    v.merge(d.total.check_morphism(&iso, &c.total));
    for i in 0..d.total.dim() {
        let e = SparseVec::unit(i);
        let name = [d.total.names()[i].as_str()];
        v.compare(
            "σ ∘ iso = σ'",
            &name,
            &c.sigma.apply(&iso.apply(&e)),
            &d.sigma.apply(&e),
            c.base.names(),
        );
        v.compare(
            "τ ∘ iso = τ'",
            &name,
            &c.tau.apply(&iso.apply(&e)),
            &d.tau.apply(&e),
            c.base.names(),
        );
    }
    for i in 0..c.base.dim() {
        v.compare(
            "iso ∘ incl' = incl",
            &[&c.base.names()[i]],
            &iso.apply(d.incl.column(i)),
            c.incl.column(i),
            c.total.names(),
        );
    }
    Ok(v)
}
