use crate::exact::{Echelon, LinearMap, SparseVec, Subspace};
use crate::leibniz::{LeibnizAction, LeibnizAlgebra};
use crate::verdict::Verdict;
use crate::{Error, Result};

/// A Leibniz crossed module `η: q → p` with an action of `p` on `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizXMod {
    pub eta: LinearMap,
    pub action: LeibnizAction,
}

impl LeibnizXMod {
    pub fn new(eta: LinearMap, action: LeibnizAction) -> Result<Self> {
        if eta.cols() != action.target.dim() || eta.rows() != action.actor.dim() {
            return Err(Error::Dimension(
                "boundary map does not match the algebras".into(),
            ));
        }
        Ok(LeibnizXMod { eta, action })
    }

    pub fn q(&self) -> &LeibnizAlgebra {
        &self.action.target
    }

    pub fn p(&self) -> &LeibnizAlgebra {
        &self.action.actor
    }

    /// `(p, p, id)` with the adjoint action.
    pub fn identity(p: &LeibnizAlgebra) -> Self {
        LeibnizXMod {
            eta: LinearMap::identity(p.dim()),
            action: LeibnizAction::adjoint(p),
        }
    }

    /// `(0, p, 0)`.
    pub fn zero_on(p: &LeibnizAlgebra) -> Self {
        let q = LeibnizAlgebra::zero("0");
        LeibnizXMod {
            eta: LinearMap::zero(p.dim(), 0),
            action: LeibnizAction::zero(p.clone(), q),
        }
    }

    /// The inclusion of an ideal, acted on by the ambient bracket.
    pub fn ideal_inclusion(
        p: &LeibnizAlgebra,
        ideal: &Subspace,
        name: &str,
        names: Vec<String>,
    ) -> Result<Self> {
        let (incl, action) = LeibnizAction::on_ideal(p, ideal, name, names)?;
        Ok(LeibnizXMod { eta: incl, action })
    }

    /// Both algebras, the action, η as a morphism, equivariance and the Peiffer identities.
    pub fn check_xmod(&self) -> Verdict {
        let (q, p) = (self.q(), self.p());
        let mut v = Verdict::new();
        for (stage, sub) in [
            ("q: ", q.check_leibniz()),
            ("p: ", p.check_leibniz()),
            ("", self.action.check_action()),
        ] {
            for mut w in sub.witnesses.clone() {
                w.identity = format!("{stage}{}", w.identity);
                v.witnesses.push(w);
            }
            v.checked += sub.checked;
        }
        v.merge(q.check_morphism(&self.eta, p));
        let eta = |x: &SparseVec| self.eta.apply(x);
        for j in 0..q.dim() {
            let qj = SparseVec::unit(j);
            for i in 0..p.dim() {
                let pi = SparseVec::unit(i);
                let t = [p.names()[i].as_str(), q.names()[j].as_str()];
                v.compare(
                    "equivariance η[p,q]",
                    &t,
                    &eta(&self.action.act_left(&pi, &qj)),
                    &p.bracket(&pi, &eta(&qj)),
                    p.names(),
                );
                v.compare(
                    "equivariance η[q,p]",
                    &t,
                    &eta(&self.action.act_right(&qj, &pi)),
                    &p.bracket(&eta(&qj), &pi),
                    p.names(),
                );
            }
            for k in 0..q.dim() {
                let qk = SparseVec::unit(k);
                let t = [q.names()[j].as_str(), q.names()[k].as_str()];
                let mid = q.bracket(&qj, &qk);
                v.compare(
                    "peiffer [η(q1),q2]",
                    &t,
                    &self.action.act_left(&eta(&qj), &qk),
                    &mid,
                    q.names(),
                );
                v.compare(
                    "peiffer [q1,η(q2)]",
                    &t,
                    &self.action.act_right(&qj, &eta(&qk)),
                    &mid,
                    q.names(),
                );
            }
        }
        v
    }

    /// `(q ⋊ p, p, s, t)` with `s(q,p) = p`, `t(q,p) = η(q) + p`.
    pub fn to_cat1(&self) -> Result<Cat1Leibniz> {
        let total = self.action.semidirect()?;
        let (nq, np) = (self.q().dim(), self.p().dim());
        let s = LinearMap::from_columns(
            np,
            (0..nq)
                .map(|_| SparseVec::new())
                .chain((0..np).map(SparseVec::unit))
                .collect(),
        );
        let t = LinearMap::from_columns(
            np,
            (0..nq)
                .map(|j| self.eta.column(j).clone())
                .chain((0..np).map(SparseVec::unit))
                .collect(),
        );
        let incl =
            LinearMap::from_columns(nq + np, (0..np).map(|i| SparseVec::unit(nq + i)).collect());
        Ok(Cat1Leibniz {
            total,
            base: self.p().clone(),
            incl,
            s,
            t,
        })
    }

    /// Checks that `(phi, psi)` is a morphism from `self` to `other`.
    pub fn check_morphism(&self, phi: &LinearMap, psi: &LinearMap, other: &LeibnizXMod) -> Verdict {
        let mut v = self.q().check_morphism(phi, other.q());
        v.merge(self.p().check_morphism(psi, other.p()));
        if !v.is_pass() {
            return v;
        }
        for j in 0..self.q().dim() {
            let qj = SparseVec::unit(j);
            v.compare(
                "ψη = η'φ",
                &[&self.q().names()[j]],
                &psi.apply(&self.eta.apply(&qj)),
                &other.eta.apply(&phi.apply(&qj)),
                other.p().names(),
            );
            for i in 0..self.p().dim() {
                let pi = SparseVec::unit(i);
                let t = [self.p().names()[i].as_str(), self.q().names()[j].as_str()];
                let lhs = phi.apply(&self.action.act_left(&pi, &qj));
                let rhs = other.action.act_left(&psi.apply(&pi), &phi.apply(&qj));
                v.compare("φ[p,q] = [ψp,φq]", &t, &lhs, &rhs, other.q().names());
                let lhs = phi.apply(&self.action.act_right(&qj, &pi));
                let rhs = other.action.act_right(&phi.apply(&qj), &psi.apply(&pi));
                v.compare("φ[q,p] = [φq,ψp]", &t, &lhs, &rhs, other.q().names());
            }
        }
        v
    }

    /// Lie crossed module `(Liez(q)/[q,p]_x, Liez(p), η̄)`, with the projections from `self`.
    pub fn xliez(&self) -> Result<XLiez> {
        let (q, p) = (self.q(), self.p());
        let (nq, np) = (q.dim(), p.dim());
        let act = &self.action;
        // generators: squares of q and the symmetrized action
        let mut gens = Vec::new();
        for a in 0..nq {
            for b in a..nq {
                gens.push(q.basis_bracket(a, b).add(q.basis_bracket(b, a)));
            }
            for i in 0..np {
                gens.push(act.left_table()[i][a].add(&act.right_table()[a][i]));
            }
        }
        let mut e = Echelon::from_rows(gens);
        let mut frontier: Vec<SparseVec> = e.rows().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                let mut images = Vec::new();
                for k in 0..nq {
                    let ek = SparseVec::unit(k);
                    images.push(q.bracket(v, &ek));
                    images.push(q.bracket(&ek, v));
                }
                for i in 0..np {
                    let pi = SparseVec::unit(i);
                    images.push(act.act_left(&pi, v));
                    images.push(act.act_right(v, &pi));
                }
                for w in images {
                    if e.insert(w.clone()).is_some() {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        let ideal_q = Subspace::span(nq, e.into_rows());
        let lz = p.liezation()?;
        let (h, proj_q) = q.quotient(&ideal_q, &format!("Liez({})/[q,p]x", q.name()))?;
        let g = lz.lie.clone();
        let proj_p = lz.projection.clone();
        // induced maps are well defined only if the kernels are respected
        for k in ideal_q.basis() {
            if !lz.ideal.contains(&self.eta.apply(k)) {
                return Err(Error::Inconsistent(
                    "η does not descend to the liezation".into(),
                ));
            }
        }
        for s in lz.ideal.basis() {
            for j in 0..nq {
                let qj = SparseVec::unit(j);
                if !ideal_q.contains(&act.act_left(s, &qj))
                    || !ideal_q.contains(&act.act_right(&qj, s))
                {
                    return Err(Error::Inconsistent(
                        "squares of p act nontrivially modulo [q,p]x".into(),
                    ));
                }
            }
        }
        let hq = ideal_q.quotient_basis().complement;
        let gp = lz.ideal.quotient_basis().complement;
        let eta_bar = LinearMap::from_columns(
            g.dim(),
            hq.iter()
                .map(|&j| proj_p.apply(self.eta.column(j)))
                .collect(),
        );
        let left = gp
            .iter()
            .map(|&i| {
                hq.iter()
                    .map(|&j| proj_q.apply(&act.left_table()[i][j]))
                    .collect()
            })
            .collect();
        let right = hq
            .iter()
            .map(|&j| {
                gp.iter()
                    .map(|&i| proj_q.apply(&act.right_table()[j][i]))
                    .collect()
            })
            .collect();
        let action = LeibnizAction::new(g, h, left, right)?;
        let xmod = LeibnizXMod::new(eta_bar, action)?;
        Ok(XLiez {
            xmod,
            proj_q,
            proj_p,
            ideal_q,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XLiez {
    pub xmod: LeibnizXMod,
    pub proj_q: LinearMap,
    pub proj_p: LinearMap,
    pub ideal_q: Subspace,
}

/// A cat¹-Leibniz algebra: `incl: base → total` and retractions `s, t: total → base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat1Leibniz {
    pub total: LeibnizAlgebra,
    pub base: LeibnizAlgebra,
    pub incl: LinearMap,
    pub s: LinearMap,
    pub t: LinearMap,
}

impl Cat1Leibniz {
    /// Morphism conditions, the retraction identities (CLb1) and the kernel condition (CLb2).
    pub fn check_cat1(&self) -> Verdict {
        let mut v = self.base.check_morphism(&self.incl, &self.total);
        v.merge(self.total.check_morphism(&self.s, &self.base));
        v.merge(self.total.check_morphism(&self.t, &self.base));
        if !v.is_pass() {
            return v;
        }
        for i in 0..self.base.dim() {
            let e = SparseVec::unit(i);
            let name = [self.base.names()[i].as_str()];
            v.compare(
                "CLb1 s|p0 = id",
                &name,
                &self.s.apply(self.incl.column(i)),
                &e,
                self.base.names(),
            );
            v.compare(
                "CLb1 t|p0 = id",
                &name,
                &self.t.apply(self.incl.column(i)),
                &e,
                self.base.names(),
            );
        }
        let (ks, kt) = (self.s.kernel(), self.t.kernel());
        for a in ks.basis() {
            for b in kt.basis() {
                let names = self.total.names();
                let zero = SparseVec::new();
                let (ra, rb) = (self.total.render(a), self.total.render(b));
                v.compare(
                    "CLb2 [Ker s, Ker t] = 0",
                    &[&ra, &rb],
                    &self.total.bracket(a, b),
                    &zero,
                    names,
                );
                v.compare(
                    "CLb2 [Ker t, Ker s] = 0",
                    &[&rb, &ra],
                    &self.total.bracket(b, a),
                    &zero,
                    names,
                );
            }
        }
        v
    }

    /// `t|: Ker s → base`, with the action induced by the bracket. Also returns the inclusion
    /// of `Ker s` (in its canonical basis) into the total algebra.
    pub fn to_xmod(&self) -> Result<(LeibnizXMod, LinearMap)> {
        let verdict = self.check_cat1();
        if let Some(w) = verdict.witnesses.first() {
            return Err(Error::Axiom {
                stage: "check_cat1".into(),
                detail: w.to_string(),
            });
        }
        let ks = self.s.kernel();
        let names: Vec<String> = ks.basis().iter().map(|b| self.total.render(b)).collect();
        let (q, incl_k) =
            self.total
                .subalgebra(&ks, &format!("Ker s({})", self.total.name()), names)?;
        let np = self.base.dim();
        let left = (0..np)
            .map(|i| {
                ks.basis()
                    .iter()
                    .map(|k| {
                        ks.coordinates(&self.total.bracket(self.incl.column(i), k))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let right = ks
            .basis()
            .iter()
            .map(|k| {
                (0..np)
                    .map(|i| {
                        ks.coordinates(&self.total.bracket(k, self.incl.column(i)))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let action = LeibnizAction::new(self.base.clone(), q, left, right)?;
        let eta = self.t.compose(&incl_k)?;
        Ok((LeibnizXMod::new(eta, action)?, incl_k))
    }
}

/// Verifies that `cat1_to_xmod(xmod_to_cat1(x))` is isomorphic to `x` through the canonical
/// coordinates `(q, 0) ↦ q` and the identity on `p`.
pub fn xmod_round_trip(x: &LeibnizXMod) -> Result<Verdict> {
    let c = x.to_cat1()?;
    let mut v = c.check_cat1();
    let (y, incl) = c.to_xmod()?;
    let nq = x.q().dim();
    // Ker s = q ⊕ 0, so the kernel inclusion identifies y.q with x.q
    let phi = LinearMap::from_columns(
        nq,
        incl.columns().iter().map(|col| col.slice(0, nq)).collect(),
    );
    if !phi.is_injective() || phi.rows() != phi.cols() {
        v.fail(
            "isomorphism",
            &[],
            format!("rank {}", phi.rank()),
            format!("dim {nq}"),
        );
        return Ok(v);
    }
    v.merge(y.check_morphism(&phi, &LinearMap::identity(x.p().dim()), x));
    Ok(v)
}

/// Verifies that `xmod_to_cat1(cat1_to_xmod(c))` is isomorphic to `c` through `(k, p) ↦ k + incl(p)`.
pub fn cat1_round_trip(c: &Cat1Leibniz) -> Result<Verdict> {
    let (x, incl_k) = c.to_xmod()?;
    let d = x.to_cat1()?;
    let nk = x.q().dim();
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
            "s ∘ iso = s'",
            &name,
            &c.s.apply(&iso.apply(&e)),
            &d.s.apply(&e),
            c.base.names(),
        );
        v.compare(
            "t ∘ iso = t'",
            &name,
            &c.t.apply(&iso.apply(&e)),
            &d.t.apply(&e),
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
