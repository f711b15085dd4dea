//! The category LM of linear maps `M → g`: objects and their tensor product, Lie objects and
//! crossed modules of Lie objects, and the passage from Leibniz algebras and Leibniz crossed
//! modules. Enveloping algebras in LM and the comparison with `XUL` live in the submodules.

mod envelope;
mod theta;

pub use envelope::{lm_algebra, lm_xmod_envelope, u_lm, LMAlgebra, LMAssocXMod, ULM};
pub use theta::{theta, theta_check, Theta};

use crate::exact::{LinearMap, SparseVec};
use crate::leibniz::{disjoint_names, LeibnizAlgebra};
use crate::verdict::Verdict;
use crate::xmod::LeibnizXMod;
use crate::{Error, Result};

/// An object `α: M → g` of LM, with named bases of both spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMObject {
    pub bottom: Vec<String>,
    pub top: Vec<String>,
    pub alpha: LinearMap,
}

impl LMObject {
    pub fn new(bottom: Vec<String>, top: Vec<String>, alpha: LinearMap) -> Result<Self> {
        if alpha.cols() != bottom.len() || alpha.rows() != top.len() {
            return Err(Error::Dimension(format!(
                "map is {}x{} for an object {} → {}",
                alpha.rows(),
                alpha.cols(),
                bottom.len(),
                top.len()
            )));
        }
        Ok(LMObject { bottom, top, alpha })
    }

    pub fn zero() -> Self {
        LMObject {
            bottom: Vec::new(),
            top: Vec::new(),
            alpha: LinearMap::zero(0, 0),
        }
    }
}

fn tensor_names(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

/// `(M⊗h) ⊕ (g⊗N) → g⊗h` with `m⊗h ↦ α(m)⊗h` and `g⊗n ↦ g⊗β(n)`. Tensor coordinates are
/// row-major: `u_i⊗v_j` has index `i·dim V + j`.
pub fn lm_tensor(x: &LMObject, y: &LMObject) -> LMObject {
    let (nm, ng) = (x.bottom.len(), x.top.len());
    let (nn, nh) = (y.bottom.len(), y.top.len());
    let mut cols = Vec::with_capacity(nm * nh + ng * nn);
    for i in 0..nm {
        for j in 0..nh {
            cols.push(SparseVec::from_pairs(
                x.alpha
                    .column(i)
                    .iter()
                    .map(|(k, c)| (k * nh + j, c.clone())),
            ));
        }
    }
    for k in 0..ng {
        for l in 0..nn {
            cols.push(SparseVec::from_pairs(
                y.alpha
                    .column(l)
                    .iter()
                    .map(|(j, c)| (k * nh + j, c.clone())),
            ));
        }
    }
    let mut bottom = tensor_names(&x.bottom, &y.top);
    bottom.extend(tensor_names(&x.top, &y.bottom));
    LMObject {
        bottom,
        top: tensor_names(&x.top, &y.top),
        alpha: LinearMap::from_columns(ng * nh, cols),
    }
}

/// A Lie object `α: M → g`: `g` is a Lie algebra, `M` a right `g`-representation and `α` is
/// equivariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMLieObject {
    pub g: LeibnizAlgebra,
    /// Basis names of `M`.
    pub names: Vec<String>,
    pub alpha: LinearMap,
    /// `right[i]`: `m ↦ [m, g_i]`.
    pub right: Vec<LinearMap>,
}

impl LMLieObject {
    pub fn new(
        g: LeibnizAlgebra,
        names: Vec<String>,
        alpha: LinearMap,
        right: Vec<LinearMap>,
    ) -> Result<Self> {
        let m = names.len();
        let square = |f: &LinearMap| f.rows() == m && f.cols() == m;
        if alpha.rows() != g.dim()
            || alpha.cols() != m
            || right.len() != g.dim()
            || !right.iter().all(square)
        {
            return Err(Error::Dimension("Lie object data do not match".into()));
        }
        Ok(LMLieObject {
            g,
            names,
            alpha,
            right,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn object(&self) -> LMObject {
        LMObject {
            bottom: self.names.clone(),
            top: self.g.names().to_vec(),
            alpha: self.alpha.clone(),
        }
    }

    /// `m ↦ [m, x]`.
    pub fn right_of(&self, x: &SparseVec) -> LinearMap {
        crate::leibniz::rep_combine(&self.right, x, self.dim())
    }

    pub fn act(&self, m: &SparseVec, x: &SparseVec) -> SparseVec {
        self.right_of(x).apply(m)
    }

    /// Lie axioms of `g`, the right representation identity and equivariance of `α`.
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        v.merge_as(self.g.name(), self.g.check_lie());
        let (g, n) = (&self.g, self.dim());
        let gn = g.names();
        for k in 0..n {
            let m = SparseVec::unit(k);
            for i in 0..g.dim() {
                let gi = SparseVec::unit(i);
                let mi = self.right[i].apply(&m);
                v.compare(
                    "α[m,g] = [αm,g]",
                    &[&self.names[k], &gn[i]],
                    &self.alpha.apply(&mi),
                    &g.bracket(&self.alpha.apply(&m), &gi),
                    gn,
                );
                for j in 0..g.dim() {
                    let gj = SparseVec::unit(j);
                    let lhs = self.act(&m, &g.bracket(&gi, &gj));
                    let rhs = self.right[j]
                        .apply(&mi)
                        .sub(&self.act(&self.right[j].apply(&m), &gi));
                    v.compare(
                        "[m,[g,g']] = [[m,g],g'] − [[m,g'],g]",
                        &[&self.names[k], &gn[i], &gn[j]],
                        &lhs,
                        &rhs,
                        &self.names,
                    );
                }
            }
        }
        v
    }
}

fn lift_map(maps: &[SparseVec], rows: usize) -> LinearMap {
    LinearMap::from_columns(rows, maps.to_vec())
}

/// `p → Liez(p)` with `g = Liez(p)` acting on `p` through lifts: `[m, x̄] = [m, x]`.
pub fn leibniz_to_lm(p: &LeibnizAlgebra) -> Result<LMLieObject> {
    let lz = p.liezation()?;
    let n = p.dim();
    for s in lz.ideal.basis() {
        for k in 0..n {
            if !p.bracket(&SparseVec::unit(k), s).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "{} does not act trivially on the right",
                    p.render(s)
                )));
            }
        }
    }
    let lifts = lz.ideal.quotient_basis().complement;
    let right = lifts
        .iter()
        .map(|&i| {
            lift_map(
                &(0..n)
                    .map(|k| p.basis_bracket(k, i).clone())
                    .collect::<Vec<_>>(),
                n,
            )
        })
        .collect();
    let obj = LMLieObject::new(lz.lie, p.names().to_vec(), lz.projection, right)?;
    if let Some(w) = obj.check().witnesses.first() {
        return Err(Error::Inconsistent(format!(
            "Lie object of a Leibniz algebra: {w}"
        )));
    }
    Ok(obj)
}

/// A crossed module of Lie objects `(ϱ₁, ϱ₂): (N → h) → (M → g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMLieXMod {
    /// `ϱ₂: h → g` with the action of `g` on `h`.
    pub top: LeibnizXMod,
    /// `β: N → h` with the right action of `h` on `N`.
    pub n: LMLieObject,
    /// `α: M → g` with the right action of `g` on `M`.
    pub m: LMLieObject,
    pub rho1: LinearMap,
    /// `g_on_n[i]`: `n ↦ [n, g_i]`.
    pub g_on_n: Vec<LinearMap>,
    /// `xi[j]`: `m ↦ ξ(m, h_j)`.
    pub xi: Vec<LinearMap>,
}

impl LMLieXMod {
    pub fn new(
        top: LeibnizXMod,
        n: LMLieObject,
        m: LMLieObject,
        rho1: LinearMap,
        g_on_n: Vec<LinearMap>,
        xi: Vec<LinearMap>,
    ) -> Result<Self> {
        let (h, g) = (top.q(), top.p());
        let (nn, nm) = (n.dim(), m.dim());
        let ok = n.g == *h
            && m.g == *g
            && rho1.rows() == nm
            && rho1.cols() == nn
            && g_on_n.len() == g.dim()
            && g_on_n.iter().all(|f| f.rows() == nn && f.cols() == nn)
            && xi.len() == h.dim()
            && xi.iter().all(|f| f.rows() == nn && f.cols() == nm);
        if !ok {
            return Err(Error::Dimension(
                "crossed module data in LM do not match".into(),
            ));
        }
        Ok(LMLieXMod {
            top,
            n,
            m,
            rho1,
            g_on_n,
            xi,
        })
    }

    pub fn h(&self) -> &LeibnizAlgebra {
        self.top.q()
    }

    pub fn g(&self) -> &LeibnizAlgebra {
        self.top.p()
    }

    /// `m ↦ ξ(m, x)`.
    pub fn xi_of(&self, x: &SparseVec) -> LinearMap {
        let (nn, nm) = (self.n.dim(), self.m.dim());
        let mut out = LinearMap::zero(nn, nm);
        for (j, c) in x.iter() {
            out = out.add(&self.xi[j].scaled(c)).expect("same shape");
        }
        out
    }

    /// `n ↦ [n, x]` for `x ∈ g`.
    pub fn g_on_n_of(&self, x: &SparseVec) -> LinearMap {
        crate::leibniz::rep_combine(&self.g_on_n, x, self.n.dim())
    }

    /// The semidirect Lie object `N ⊕ M → h ⋊ g` with
    /// `[(n,m),(h,g)] = ([n,h] + [n,g] + ξ(m,h), [m,g])`.
    pub fn semidirect(&self) -> Result<LMLieObject> {
        let total = self.top.action.semidirect()?;
        let (nn, nm) = (self.n.dim(), self.m.dim());
        let (nh, ng) = (self.h().dim(), self.g().dim());
        let names = disjoint_names(&self.n.names, &self.m.names);
        let alpha = LinearMap::from_columns(
            nh + ng,
            (0..nn)
                .map(|k| self.n.alpha.column(k).clone())
                .chain((0..nm).map(|k| self.m.alpha.column(k).shifted(nh)))
                .collect(),
        );
        let mut right = Vec::with_capacity(nh + ng);
        for j in 0..nh {
            let cols = (0..nn)
                .map(|k| self.n.right[j].column(k).clone())
                .chain((0..nm).map(|k| self.xi[j].column(k).clone()))
                .collect();
            right.push(LinearMap::from_columns(nn + nm, cols));
        }
        for i in 0..ng {
            let cols = (0..nn)
                .map(|k| self.g_on_n[i].column(k).clone())
                .chain((0..nm).map(|k| self.m.right[i].column(k).shifted(nn)))
                .collect();
            right.push(LinearMap::from_columns(nn + nm, cols));
        }
        LMLieObject::new(total, names, alpha, right)
    }

    /// The crossed-module axioms of `ϱ₂`, the Lie objects `N → h` and `M → g`, the compatibility
    /// of the actions, the identities of `ξ`, the conditions on `ϱ₁`, commutativity of the square
    /// and the Lie object axioms of the semidirect product.
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        let (h, g) = (self.h(), self.g());
        let act = &self.top.action;
        v.merge_as("crossed module", self.top.check_xmod());
        v.merge_as(h.name(), h.check_lie());
        v.merge_as("N", self.n.check());
        v.merge_as("M", self.m.check());
        let (hn, gn) = (h.names(), g.names());
        let (nn_names, nm_names) = (&self.n.names, &self.m.names);
        for j in 0..h.dim() {
            let hj = SparseVec::unit(j);
            for i in 0..g.dim() {
                let gi = SparseVec::unit(i);
                v.compare(
                    "[g,h] = −[h,g]",
                    &[&gn[i], &hn[j]],
                    &act.act_left(&gi, &hj),
                    &act.act_right(&hj, &gi).neg(),
                    hn,
                );
            }
        }
        for k in 0..self.n.dim() {
            let n = SparseVec::unit(k);
            let bn = self.n.alpha.apply(&n);
            for i in 0..g.dim() {
                let gi = SparseVec::unit(i);
                let ng = self.g_on_n[i].apply(&n);
                let t = [nn_names[k].as_str(), gn[i].as_str()];
                v.compare(
                    "β[n,g] = [βn,g]",
                    &t,
                    &self.n.alpha.apply(&ng),
                    &act.act_right(&bn, &gi),
                    hn,
                );
                v.compare(
                    "ϱ₁[n,g] = [ϱ₁n,g]",
                    &t,
                    &self.rho1.apply(&ng),
                    &self.m.act(&self.rho1.apply(&n), &gi),
                    nm_names,
                );
                for i2 in 0..g.dim() {
                    let g2 = SparseVec::unit(i2);
                    let lhs = self.g_on_n_of(&g.bracket(&gi, &g2)).apply(&n);
                    let rhs = self.g_on_n[i2]
                        .apply(&ng)
                        .sub(&self.g_on_n[i].apply(&self.g_on_n[i2].apply(&n)));
                    v.compare(
                        "[n,[g,g']] = [[n,g],g'] − [[n,g'],g]",
                        &[&nn_names[k], &gn[i], &gn[i2]],
                        &lhs,
                        &rhs,
                        nn_names,
                    );
                }
                for j in 0..h.dim() {
                    let hj = SparseVec::unit(j);
                    let lhs = self.g_on_n[i].apply(&self.n.right[j].apply(&n));
                    let rhs = self.n.right[j]
                        .apply(&ng)
                        .add(&self.n.act(&n, &act.act_right(&hj, &gi)));
                    v.compare(
                        "[[n,h],g] = [[n,g],h] + [n,[h,g]]",
                        &[&nn_names[k], &hn[j], &gn[i]],
                        &lhs,
                        &rhs,
                        nn_names,
                    );
                }
            }
            for j in 0..h.dim() {
                let hj = SparseVec::unit(j);
                let nh = self.n.right[j].apply(&n);
                let t = [nn_names[k].as_str(), hn[j].as_str()];
                v.compare(
                    "[n,h] = ξ(ϱ₁n,h)",
                    &t,
                    &nh,
                    &self.xi[j].apply(&self.rho1.apply(&n)),
                    nn_names,
                );
                v.compare(
                    "[n,h] = [n,ϱ₂h]",
                    &t,
                    &nh,
                    &self.g_on_n_of(&self.top.eta.apply(&hj)).apply(&n),
                    nn_names,
                );
            }
            v.compare(
                "αϱ₁ = ϱ₂β",
                &[&nn_names[k]],
                &self.m.alpha.apply(&self.rho1.apply(&n)),
                &self.top.eta.apply(&bn),
                gn,
            );
        }
        for k in 0..self.m.dim() {
            let m = SparseVec::unit(k);
            let am = self.m.alpha.apply(&m);
            for j in 0..h.dim() {
                let hj = SparseVec::unit(j);
                let x = self.xi[j].apply(&m);
                let t = [nm_names[k].as_str(), hn[j].as_str()];
                v.compare(
                    "β(ξ(m,h)) = [α(m),h]",
                    &t,
                    &self.n.alpha.apply(&x),
                    &act.act_left(&am, &hj),
                    hn,
                );
                v.compare(
                    "ϱ₁(ξ(m,h)) = [m,ϱ₂(h)]",
                    &t,
                    &self.rho1.apply(&x),
                    &self.m.act(&m, &self.top.eta.apply(&hj)),
                    nm_names,
                );
                for i in 0..g.dim() {
                    let gi = SparseVec::unit(i);
                    let lhs = self.g_on_n[i].apply(&x);
                    let rhs = self.xi[j]
                        .apply(&self.m.right[i].apply(&m))
                        .add(&self.xi_of(&act.act_right(&hj, &gi)).apply(&m));
                    v.compare(
                        "[ξ(m,h),g] = ξ([m,g],h) + ξ(m,[h,g])",
                        &[&nm_names[k], &hn[j], &gn[i]],
                        &lhs,
                        &rhs,
                        nn_names,
                    );
                }
                for j2 in 0..h.dim() {
                    let h2 = SparseVec::unit(j2);
                    let lhs = self.xi_of(&h.bracket(&hj, &h2)).apply(&m);
                    let rhs = self.n.right[j2]
                        .apply(&x)
                        .sub(&self.n.right[j].apply(&self.xi[j2].apply(&m)));
                    v.compare(
                        "ξ(m,[h,h']) = [ξ(m,h),h'] − [ξ(m,h'),h]",
                        &[&nm_names[k], &hn[j], &hn[j2]],
                        &lhs,
                        &rhs,
                        nn_names,
                    );
                }
            }
        }
        match self.semidirect() {
            Ok(s) => v.merge_as("semidirect", s.check()),
            Err(e) => v.fail("semidirect product", &[], e.to_string(), String::new()),
        }
        v
    }
}

/// `(q, p, η)` as the square `q → p` over `Liez(q)/[q,p]_x → Liez(p)`.
pub fn xmod_to_lm(x: &LeibnizXMod) -> Result<LMLieXMod> {
    if let Some(w) = x.check_xmod().witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_xmod".into(),
            detail: w.to_string(),
        });
    }
    let (q, p) = (x.q(), x.p());
    let (nq, np) = (q.dim(), p.dim());
    let act = &x.action;
    let xl = x.xliez()?;
    let lz = p.liezation()?;
    let m = leibniz_to_lm(p)?;
    let lift_h = xl.ideal_q.quotient_basis().complement;
    let lift_g = lz.ideal.quotient_basis().complement;
    // lifts are independent of choices when kernels act trivially
    for k in xl.ideal_q.basis() {
        for a in 0..nq {
            if !q.bracket(&SparseVec::unit(a), k).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "[q,p]x acts on q: {}",
                    q.render(k)
                )));
            }
        }
        for i in 0..np {
            if !act.act_left(&SparseVec::unit(i), k).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "[q,p]x receives p: {}",
                    q.render(k)
                )));
            }
        }
    }
    for s in lz.ideal.basis() {
        for a in 0..nq {
            if !act.act_right(&SparseVec::unit(a), s).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "squares of p act on q: {}",
                    p.render(s)
                )));
            }
        }
    }
    let h_right = lift_h
        .iter()
        .map(|&j| {
            lift_map(
                &(0..nq)
                    .map(|a| q.basis_bracket(a, j).clone())
                    .collect::<Vec<_>>(),
                nq,
            )
        })
        .collect();
    let n = LMLieObject::new(
        xl.xmod.q().clone(),
        q.names().to_vec(),
        xl.proj_q.clone(),
        h_right,
    )?;
    let g_on_n = lift_g
        .iter()
        .map(|&i| {
            lift_map(
                &(0..nq)
                    .map(|a| act.right_table()[a][i].clone())
                    .collect::<Vec<_>>(),
                nq,
            )
        })
        .collect();
    let xi = lift_h
        .iter()
        .map(|&j| {
            lift_map(
                &(0..np)
                    .map(|i| act.left_table()[i][j].clone())
                    .collect::<Vec<_>>(),
                nq,
            )
        })
        .collect();
    let out = LMLieXMod::new(xl.xmod, n, m, x.eta.clone(), g_on_n, xi)?;
    if let Some(w) = out.check().witnesses.first() {
        return Err(Error::Inconsistent(format!(
            "crossed module in LM of a Leibniz crossed module: {w}"
        )));
    }
    Ok(out)
}
