//! Representations of Leibniz crossed modules and left modules over truncated associative crossed
//! modules, together with the functors between them.
//!
//! Module structures follow the convention of [`crate::envelope::ULModule`]: words act letter by
//! letter from the left end, so every structure map is a morphism into an opposite algebra. The
//! endomorphism crossed module is built accordingly, with all products reversed.

use crate::envelope::{module_to_rep, rep_to_module, word_action, ULModule};
use crate::exact::{format_rational, LinearMap, SparseVec, Subspace};
use crate::leibniz::LeibnizRep;
use crate::verdict::{render_vec, Verdict};
use crate::xmod::{AssocAlgebra, AssocXMod, LeibnizXMod};
use crate::xul::TruncAssocXMod;
use crate::{Error, Result};

pub(crate) fn show(f: &LinearMap) -> String {
    let rows: Vec<String> = f
        .to_dense()
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(format_rational).collect::<Vec<_>>().join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn compose(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.compose(g).expect("composable maps")
}

fn combine(maps: &[LinearMap], coeffs: &SparseVec, rows: usize, cols: usize) -> LinearMap {
    let mut out = LinearMap::zero(rows, cols);
    for (i, c) in coeffs.iter() {
        out = out.add(&maps[i].scaled(c)).expect("maps of equal shape");
    }
    out
}

fn compare_maps(v: &mut Verdict, identity: &str, tuple: &[&str], lhs: &LinearMap, rhs: &LinearMap) {
    if lhs == rhs {
        v.checked += 1;
    } else {
        v.fail(identity, tuple, show(lhs), show(rhs));
    }
}

/// Row-major coordinates of a matrix.
fn flatten(f: &LinearMap) -> SparseVec {
    let c = f.cols();
    SparseVec::from_pairs(
        f.columns()
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, x)| (i * c + j, x.clone()))),
    )
}

fn unflatten(v: &SparseVec, rows: usize, cols: usize) -> LinearMap {
    let mut columns = vec![Vec::new(); cols];
    for (k, x) in v.iter() {
        columns[k % cols].push((k / cols, x.clone()));
    }
    LinearMap::from_columns(
        rows,
        columns.into_iter().map(SparseVec::from_pairs).collect(),
    )
}

/// `[[a, b], [0, c]]` on `X ⊕ Y` for `a: X → X`, `b: Y → X`, `c: Y → Y`.
fn block(a: &LinearMap, b: &LinearMap, c: &LinearMap) -> LinearMap {
    let x = a.rows();
    let cols = a
        .columns()
        .iter()
        .cloned()
        .chain(
            b.columns()
                .iter()
                .zip(c.columns())
                .map(|(u, w)| u.concat(x, w)),
        )
        .collect();
    LinearMap::from_columns(x + c.rows(), cols)
}

/// An abelian crossed module: a linear map `bottom → top`, with zero products and trivial actions.
/// It stands for `(N, M, μ)` on the Leibniz side and for `(V, W, δ)` on the associative side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianXMod {
    pub bottom: Vec<String>,
    pub top: Vec<String>,
    pub map: LinearMap,
}

impl AbelianXMod {
    pub fn new(bottom: Vec<String>, top: Vec<String>, map: LinearMap) -> Result<Self> {
        if map.cols() != bottom.len() || map.rows() != top.len() {
            return Err(Error::Dimension(format!(
                "map is {}x{}, spaces have dimensions {} and {}",
                map.rows(),
                map.cols(),
                bottom.len(),
                top.len()
            )));
        }
        Ok(AbelianXMod { bottom, top, map })
    }

    pub fn zero(bottom: Vec<String>, top: Vec<String>) -> Self {
        let map = LinearMap::zero(top.len(), bottom.len());
        AbelianXMod { bottom, top, map }
    }

    pub fn bottom_dim(&self) -> usize {
        self.bottom.len()
    }

    pub fn top_dim(&self) -> usize {
        self.top.len()
    }

    /// `f_top ∘ δ = δ' ∘ f_bottom`.
    pub fn check_morphism(
        &self,
        f_bottom: &LinearMap,
        f_top: &LinearMap,
        other: &AbelianXMod,
    ) -> Verdict {
        let mut v = Verdict::new();
        let ok = f_bottom.cols() == self.bottom_dim()
            && f_bottom.rows() == other.bottom_dim()
            && f_top.cols() == self.top_dim()
            && f_top.rows() == other.top_dim();
        if !ok {
            v.fail("shape", &[], "morphism".into(), "spaces".into());
            return v;
        }
        compare_maps(
            &mut v,
            "f_W δ = δ' f_V",
            &[],
            &compose(f_top, &self.map),
            &compose(&other.map, f_bottom),
        );
        v
    }
}

/// The endomorphism crossed module of `(V, W, δ)`: bottom `Hom(W, V)`, top the pairs `(α, β)` with
/// `βδ = δα`, boundary `Γ(d) = (dδ, δd)`. Products are reversed:
/// `(α,β)(α',β') = (α'α, β'β)`, `d d' = d'δd`, `(α,β)·d = dβ`, `d·(α,β) = αd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoXMod {
    pub space: AbelianXMod,
    /// The top as a subspace of `End(V) ⊕ End(W)` in row-major coordinates.
    pub top: Subspace,
    pub xmod: AssocXMod,
}

pub fn endo_xmod(space: &AbelianXMod) -> Result<EndoXMod> {
    let (nv, nw) = (space.bottom_dim(), space.top_dim());
    let delta = &space.map;
    let (sa, sb) = (nv * nv, nw * nw);
    let constraint: Vec<SparseVec> = (0..sa + sb)
        .map(|k| {
            if k < sa {
                flatten(&compose(delta, &unflatten(&SparseVec::unit(k), nv, nv))).neg()
            } else {
                flatten(&compose(
                    &unflatten(&SparseVec::unit(k - sa), nw, nw),
                    delta,
                ))
            }
        })
        .collect();
    let top = LinearMap::from_columns(nw * nv, constraint).kernel();
    let pairs: Vec<(LinearMap, LinearMap)> =
        top.basis().iter().map(|v| split_pair(v, nv, nw)).collect();
    let top_coords = |a: &LinearMap, b: &LinearMap| -> Result<SparseVec> {
        top.coordinates(&flatten(a).concat(sa, &flatten(b)))
            .ok_or_else(|| Error::Inconsistent("product leaves the endomorphism pairs".into()))
    };

    let bottom_names: Vec<String> = (0..nv * nw)
        .map(|k| format!("{}<-{}", space.bottom[k / nw], space.top[k % nw]))
        .collect();
    let hom = |k: usize| unflatten(&SparseVec::unit(k), nv, nw);
    let bottom_table: Vec<Vec<SparseVec>> = (0..nv * nw)
        .map(|i| {
            (0..nv * nw)
                .map(|j| flatten(&compose(&hom(j), &compose(delta, &hom(i)))))
                .collect()
        })
        .collect();
    let top_table = pairs
        .iter()
        .map(|(a, b)| {
            pairs
                .iter()
                .map(|(a2, b2)| top_coords(&compose(a2, a), &compose(b2, b)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let top_names: Vec<String> = (0..pairs.len()).map(|k| format!("e{k}")).collect();
    let bottom_alg = AssocAlgebra::from_table("Hom(W,V)", bottom_names, bottom_table)?;
    let top_alg = AssocAlgebra::from_table("End(V,W,δ)", top_names, top_table)?;
    let gamma_cols = (0..nv * nw)
        .map(|k| top_coords(&compose(&hom(k), delta), &compose(delta, &hom(k))))
        .collect::<Result<Vec<_>>>()?;
    let gamma = LinearMap::from_columns(pairs.len(), gamma_cols);
    let left = pairs
        .iter()
        .map(|(_, b)| {
            (0..nv * nw)
                .map(|j| flatten(&compose(&hom(j), b)))
                .collect()
        })
        .collect();
    let right = (0..nv * nw)
        .map(|j| {
            pairs
                .iter()
                .map(|(a, _)| flatten(&compose(a, &hom(j))))
                .collect()
        })
        .collect();
    let xmod = AssocXMod::new(bottom_alg, top_alg, gamma, left, right)?;
    Ok(EndoXMod {
        space: space.clone(),
        top,
        xmod,
    })
}

fn split_pair(v: &SparseVec, nv: usize, nw: usize) -> (LinearMap, LinearMap) {
    let sa = nv * nv;
    (
        unflatten(&v.slice(0, sa), nv, nv),
        unflatten(&v.slice(sa, sa + nw * nw), nw, nw),
    )
}

impl EndoXMod {
    /// `Γ(d) = (dδ, δd)`.
    pub fn gamma(&self, d: &LinearMap) -> (LinearMap, LinearMap) {
        (compose(d, &self.space.map), compose(&self.space.map, d))
    }

    pub fn contains_pair(&self, alpha: &LinearMap, beta: &LinearMap) -> bool {
        self.top
            .contains(&flatten(alpha).concat(self.space.bottom_dim().pow(2), &flatten(beta)))
    }

    /// The top basis element `k` as a pair of maps.
    pub fn top_pair(&self, k: usize) -> (LinearMap, LinearMap) {
        split_pair(
            &self.top.basis()[k],
            self.space.bottom_dim(),
            self.space.top_dim(),
        )
    }

    /// Crossed-module axioms of the associative data, and `Γ` landing in the top.
    pub fn check(&self) -> Verdict {
        let mut v = self.xmod.check_xmod();
        let (nv, nw) = (self.space.bottom_dim(), self.space.top_dim());
        for k in 0..nv * nw {
            let (a, b) = self.gamma(&unflatten(&SparseVec::unit(k), nv, nw));
            if self.contains_pair(&a, &b) {
                v.checked += 1;
            } else {
                v.fail(
                    "Γ(d) ∈ End(V,W,δ)",
                    &[&self.xmod.b.names()[k]],
                    show(&a),
                    show(&b),
                );
            }
        }
        v
    }
}

/// A representation of a Leibniz crossed module `η: q → p` on `(N, M, μ)`: actions of `p` on `N`
/// and `M`, and bilinear maps `ξ₁: q × M → N`, `ξ₂: M × q → N`. `q` acts on `N` and `M` through `η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizXModRep {
    pub xmod: LeibnizXMod,
    /// `μ: N → M`.
    pub abelian: AbelianXMod,
    pub on_n: LeibnizRep,
    pub on_m: LeibnizRep,
    /// `xi1[j] = ξ₁(q_j, -): M → N`.
    pub xi1: Vec<LinearMap>,
    /// `xi2[j] = ξ₂(-, q_j): M → N`.
    pub xi2: Vec<LinearMap>,
}

impl LeibnizXModRep {
    pub fn new(
        xmod: LeibnizXMod,
        abelian: AbelianXMod,
        on_n: LeibnizRep,
        on_m: LeibnizRep,
        xi1: Vec<LinearMap>,
        xi2: Vec<LinearMap>,
    ) -> Result<Self> {
        let (nn, nm) = (abelian.bottom_dim(), abelian.top_dim());
        let xi_ok = |xs: &[LinearMap]| {
            xs.len() == xmod.q().dim() && xs.iter().all(|f| f.rows() == nn && f.cols() == nm)
        };
        if on_n.algebra != *xmod.p() || on_m.algebra != *xmod.p() {
            return Err(Error::Input(
                "actions are not by the top algebra of the crossed module".into(),
            ));
        }
        if on_n.dim() != nn || on_m.dim() != nm || !xi_ok(&xi1) || !xi_ok(&xi2) {
            return Err(Error::Dimension(
                "representation data does not match (N, M, μ)".into(),
            ));
        }
        Ok(LeibnizXModRep {
            xmod,
            abelian,
            on_n,
            on_m,
            xi1,
            xi2,
        })
    }

    /// Zero actions and zero `ξ`'s.
    pub fn zero(xmod: &LeibnizXMod, abelian: &AbelianXMod) -> Self {
        let (nn, nm) = (abelian.bottom_dim(), abelian.top_dim());
        let xi = vec![LinearMap::zero(nn, nm); xmod.q().dim()];
        LeibnizXModRep {
            xmod: xmod.clone(),
            abelian: abelian.clone(),
            on_n: LeibnizRep::zero(xmod.p().clone(), abelian.bottom.clone()),
            on_m: LeibnizRep::zero(xmod.p().clone(), abelian.top.clone()),
            xi1: xi.clone(),
            xi2: xi,
        }
    }

    /// `N = q`, `M = p`, `μ = η`, with the crossed-module action and `ξ`'s given by brackets.
    pub fn tautological(xmod: &LeibnizXMod) -> Result<Self> {
        let (q, p) = (xmod.q(), xmod.p());
        let (nq, np) = (q.dim(), p.dim());
        let on_m = LeibnizRep::adjoint(p);
        let act = &xmod.action;
        let left = (0..np)
            .map(|i| {
                LinearMap::from_columns(
                    nq,
                    (0..nq)
                        .map(|k| act.act_left(&SparseVec::unit(i), &SparseVec::unit(k)))
                        .collect(),
                )
            })
            .collect();
        let right = (0..np)
            .map(|i| {
                LinearMap::from_columns(
                    nq,
                    (0..nq)
                        .map(|k| act.act_right(&SparseVec::unit(k), &SparseVec::unit(i)))
                        .collect(),
                )
            })
            .collect();
        let on_n = LeibnizRep::new(p.clone(), q.names().to_vec(), left, right)?;
        let xi1 = (0..nq)
            .map(|j| {
                LinearMap::from_columns(
                    nq,
                    (0..np)
                        .map(|m| act.act_right(&SparseVec::unit(j), &SparseVec::unit(m)))
                        .collect(),
                )
            })
            .collect();
        let xi2 = (0..nq)
            .map(|j| {
                LinearMap::from_columns(
                    nq,
                    (0..np)
                        .map(|m| act.act_left(&SparseVec::unit(m), &SparseVec::unit(j)))
                        .collect(),
                )
            })
            .collect();
        let abelian = AbelianXMod::new(q.names().to_vec(), p.names().to_vec(), xmod.eta.clone())?;
        LeibnizXModRep::new(xmod.clone(), abelian, on_n, on_m, xi1, xi2)
    }

    pub fn xi1_of(&self, q: &SparseVec) -> LinearMap {
        combine(
            &self.xi1,
            q,
            self.abelian.bottom_dim(),
            self.abelian.top_dim(),
        )
    }

    pub fn xi2_of(&self, q: &SparseVec) -> LinearMap {
        combine(
            &self.xi2,
            q,
            self.abelian.bottom_dim(),
            self.abelian.top_dim(),
        )
    }

    fn eta_q(&self, j: usize) -> &SparseVec {
        self.xmod.eta.column(j)
    }

    /// The same data in the bases given by the columns of the invertible `change_n`, `change_m`.
    pub fn conjugate(&self, change_n: &LinearMap, change_m: &LinearMap) -> Result<Self> {
        let inv_n = change_n
            .inverse()
            .ok_or_else(|| Error::Input("change of basis of N is not invertible".into()))?;
        let inv_m = change_m
            .inverse()
            .ok_or_else(|| Error::Input("change of basis of M is not invertible".into()))?;
        let mu = compose(&inv_m, &compose(&self.abelian.map, change_n));
        let abelian = AbelianXMod::new(self.abelian.bottom.clone(), self.abelian.top.clone(), mu)?;
        let xi = |f: &LinearMap| compose(&inv_n, &compose(f, change_m));
        LeibnizXModRep::new(
            self.xmod.clone(),
            abelian,
            self.on_n.conjugate(change_n)?,
            self.on_m.conjugate(change_m)?,
            self.xi1.iter().map(xi).collect(),
            self.xi2.iter().map(xi).collect(),
        )
    }

    /// The crossed-module axioms, the representation axioms of `N` and `M`, and the identities
    /// LbEQ1–2, LbM1a–LbM5b on basis tuples.
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        for (prefix, sub) in [
            ("crossed module", self.xmod.check_xmod()),
            ("N", self.on_n.check_rep()),
            ("M", self.on_m.check_rep()),
        ] {
            v.merge_as(prefix, sub);
        }
        let (q, p) = (self.xmod.q(), self.xmod.p());
        let mu = &self.abelian.map;
        let (n_names, m_names) = (&self.abelian.bottom, &self.abelian.top);
        let (on_n, on_m) = (&self.on_n, &self.on_m);
        let act = &self.xmod.action;
        let unit = SparseVec::unit;

        for i in 0..p.dim() {
            for k in 0..n_names.len() {
                let n = unit(k);
                let t = [p.names()[i].as_str(), n_names[k].as_str()];
                v.compare(
                    "LbEQ1",
                    &t,
                    &mu.apply(&on_n.left(i).apply(&n)),
                    &on_m.left(i).apply(&mu.apply(&n)),
                    m_names,
                );
                v.compare(
                    "LbEQ2",
                    &t,
                    &mu.apply(&on_n.right(i).apply(&n)),
                    &on_m.right(i).apply(&mu.apply(&n)),
                    m_names,
                );
            }
        }
        for j in 0..q.dim() {
            let (x1, x2, eq) = (&self.xi1[j], &self.xi2[j], self.eta_q(j));
            for k in 0..m_names.len() {
                let m = unit(k);
                let t = [q.names()[j].as_str(), m_names[k].as_str()];
                v.compare(
                    "LbM1a",
                    &t,
                    &mu.apply(&x2.apply(&m)),
                    &on_m.act_right(&m, eq),
                    m_names,
                );
                v.compare(
                    "LbM1b",
                    &t,
                    &mu.apply(&x1.apply(&m)),
                    &on_m.act_left(eq, &m),
                    m_names,
                );
            }
            for k in 0..n_names.len() {
                let n = unit(k);
                let t = [q.names()[j].as_str(), n_names[k].as_str()];
                v.compare(
                    "LbM2a",
                    &t,
                    &x2.apply(&mu.apply(&n)),
                    &on_n.act_right(&n, eq),
                    n_names,
                );
                v.compare(
                    "LbM2b",
                    &t,
                    &x1.apply(&mu.apply(&n)),
                    &on_n.act_left(eq, &n),
                    n_names,
                );
            }
        }
        for i in 0..p.dim() {
            let (pl_n, pr_n, pl_m, pr_m) =
                (on_n.left(i), on_n.right(i), on_m.left(i), on_m.right(i));
            for j in 0..q.dim() {
                let pq = act.act_left(&unit(i), &unit(j));
                let qp = act.act_right(&unit(j), &unit(i));
                let (x1, x2) = (&self.xi1[j], &self.xi2[j]);
                for k in 0..m_names.len() {
                    let m = unit(k);
                    let t = [
                        p.names()[i].as_str(),
                        q.names()[j].as_str(),
                        m_names[k].as_str(),
                    ];
                    let x2m = x2.apply(&m);
                    let x1m = x1.apply(&m);
                    v.compare(
                        "LbM3a",
                        &t,
                        &self.xi2_of(&pq).apply(&m),
                        &x2.apply(&pr_m.apply(&m)).sub(&pr_n.apply(&x2m)),
                        n_names,
                    );
                    v.compare(
                        "LbM3b",
                        &t,
                        &self.xi1_of(&pq).apply(&m),
                        &x2.apply(&pl_m.apply(&m)).sub(&pl_n.apply(&x2m)),
                        n_names,
                    );
                    v.compare(
                        "LbM3c",
                        &t,
                        &self.xi2_of(&qp).apply(&m),
                        &pr_n.apply(&x2m).sub(&x2.apply(&pr_m.apply(&m))),
                        n_names,
                    );
                    v.compare(
                        "LbM3d",
                        &t,
                        &self.xi1_of(&qp).apply(&m),
                        &pr_n.apply(&x1m).sub(&x1.apply(&pr_m.apply(&m))),
                        n_names,
                    );
                    v.compare(
                        "LbM5a",
                        &t,
                        &x1.apply(&pl_m.apply(&m)),
                        &x1.apply(&pr_m.apply(&m)).neg(),
                        n_names,
                    );
                    v.compare(
                        "LbM5b",
                        &t,
                        &pl_n.apply(&x1m),
                        &pl_n.apply(&x2m).neg(),
                        n_names,
                    );
                }
            }
        }
        for j in 0..q.dim() {
            for l in 0..q.dim() {
                let qq = q.basis_bracket(j, l);
                let (eqj, eql) = (self.eta_q(j), self.eta_q(l));
                for k in 0..m_names.len() {
                    let m = unit(k);
                    let t = [
                        q.names()[j].as_str(),
                        q.names()[l].as_str(),
                        m_names[k].as_str(),
                    ];
                    v.compare(
                        "LbM4a",
                        &t,
                        &self.xi2_of(qq).apply(&m),
                        &on_n
                            .act_right(&self.xi2[j].apply(&m), eql)
                            .sub(&on_n.act_right(&self.xi2[l].apply(&m), eqj)),
                        n_names,
                    );
                    v.compare(
                        "LbM4b",
                        &t,
                        &self.xi1_of(qq).apply(&m),
                        &on_n
                            .act_right(&self.xi1[j].apply(&m), eql)
                            .sub(&on_n.act_left(eqj, &self.xi2[l].apply(&m))),
                        n_names,
                    );
                }
            }
        }
        v
    }

    /// Whether `(f_n, f_m): self → other` commutes with `μ`, both actions and both `ξ`'s.
    pub fn check_morphism(
        &self,
        f_n: &LinearMap,
        f_m: &LinearMap,
        other: &LeibnizXModRep,
    ) -> Verdict {
        let mut v = self.abelian.check_morphism(f_n, f_m, &other.abelian);
        if !v.is_pass() {
            return v;
        }
        v.merge(self.on_n.check_morphism(f_n, &other.on_n));
        v.merge(self.on_m.check_morphism(f_m, &other.on_m));
        for j in 0..self.xmod.q().dim() {
            let t = [self.xmod.q().names()[j].as_str()];
            compare_maps(
                &mut v,
                "ξ₁ equivariance",
                &t,
                &compose(f_n, &self.xi1[j]),
                &compose(&other.xi1[j], f_m),
            );
            compare_maps(
                &mut v,
                "ξ₂ equivariance",
                &t,
                &compose(f_n, &self.xi2[j]),
                &compose(&other.xi2[j], f_m),
            );
        }
        v
    }
}

pub fn check_xmod_rep(r: &LeibnizXModRep) -> Verdict {
    r.check()
}

/// A left module over a truncated crossed module of associative algebras `(B, A, ρ)` with values
/// in the endomorphism crossed module of `(V, W, δ)`: `φ: B → Hom(W, V)` and `ψ = (ψ_V, ψ_W)`
/// on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModLeftModule {
    pub source: TruncAssocXMod,
    pub target: AbelianXMod,
    /// `φ` on `source.b_basis`.
    pub phi: Vec<LinearMap>,
    pub psi_v: ULModule,
    pub psi_w: ULModule,
}

impl PartialEq for TruncAssocXMod {
    fn eq(&self, other: &Self) -> bool {
        self.cat1.xmod == other.cat1.xmod
            && self.ambient == other.ambient
            && self.b_basis == other.b_basis
            && self.report_degree == other.report_degree
    }
}

impl Eq for TruncAssocXMod {}

impl XModLeftModule {
    /// `φ` of an element of `B`, `None` outside `B`.
    pub fn phi_of(&self, b: &SparseVec) -> Option<LinearMap> {
        let c = self.source.b_coordinates(b)?;
        Some(combine(
            &self.phi,
            &c,
            self.target.bottom_dim(),
            self.target.top_dim(),
        ))
    }

    pub fn psi_of(&self, a: &SparseVec) -> (LinearMap, LinearMap) {
        (self.psi_v.psi_of(a), self.psi_w.psi_of(a))
    }

    /// `ψ_V`, `ψ_W` are modules, `ψ` lands in `End(V,W,δ)`, `ψρ = Γφ`, and `φ` is compatible with
    /// both actions and with the product of `B`, for all instances within the report degree.
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        let u = &self.source;
        let base = &u.a().carrier;
        let (nv, nw) = (self.target.bottom_dim(), self.target.top_dim());
        let shapes = self.phi.len() == u.b_basis.len()
            && self.phi.iter().all(|f| f.rows() == nv && f.cols() == nw)
            && self.psi_v.dim() == nv
            && self.psi_w.dim() == nw;
        if !shapes {
            v.fail(
                "shape",
                &[],
                format!("{} maps on B", self.phi.len()),
                format!("{} basis elements", u.b_basis.len()),
            );
            return v;
        }
        v.merge(self.psi_v.check_module(base));
        v.merge(self.psi_w.check_module(base));
        let delta = &self.target.map;
        let d = u.report_degree;
        let a_names: Vec<String> = base
            .basis()
            .iter()
            .map(|w| w.render(base.names()))
            .collect();
        let b_names: Vec<String> = u
            .b_basis
            .iter()
            .map(|(_, b)| render_vec(b, &ambient_names(u)))
            .collect();
        let a_low: Vec<usize> = (0..base.dim())
            .filter(|&i| base.fdeg_of_basis(i) <= d)
            .collect();

        for &i in &a_low {
            let (al, be) = (&self.psi_v.psi[i], &self.psi_w.psi[i]);
            compare_maps(
                &mut v,
                "ψ(a) ∈ End(V,W,δ)",
                &[&a_names[i]],
                &compose(delta, al),
                &compose(be, delta),
            );
        }
        for (k, (e, b)) in u.b_basis.iter().enumerate() {
            if *e > d {
                continue;
            }
            let (al, be) = self.psi_of(&u.t_bar.apply(b));
            let phi = &self.phi[k];
            compare_maps(
                &mut v,
                "ψρ = Γφ (V)",
                &[&b_names[k]],
                &al,
                &compose(phi, delta),
            );
            compare_maps(
                &mut v,
                "ψρ = Γφ (W)",
                &[&b_names[k]],
                &be,
                &compose(delta, phi),
            );
            for &i in &a_low {
                let a = SparseVec::unit(i);
                let t = [b_names[k].as_str(), a_names[i].as_str()];
                if let Some(ba) = u.act_right(b, &a) {
                    self.compare_phi(
                        &mut v,
                        "φ(ba) = φ(b)ψ(a)",
                        &t,
                        &ba,
                        &compose(&self.psi_v.psi[i], phi),
                    );
                }
                if let Some(ab) = u.act_left(&a, b) {
                    self.compare_phi(
                        &mut v,
                        "φ(ab) = ψ(a)φ(b)",
                        &t,
                        &ab,
                        &compose(phi, &self.psi_w.psi[i]),
                    );
                }
            }
            for (l, (e2, b2)) in u.b_basis.iter().enumerate() {
                if e + e2 > d {
                    continue;
                }
                let Some(prod) = u.ambient.try_mul(b, b2) else {
                    continue;
                };
                let rhs = compose(&self.phi[l], &compose(delta, phi));
                self.compare_phi(
                    &mut v,
                    "φ(bb') = φ(b)φ(b')",
                    &[&b_names[k], &b_names[l]],
                    &prod,
                    &rhs,
                );
            }
        }
        v
    }

    fn compare_phi(
        &self,
        v: &mut Verdict,
        identity: &str,
        tuple: &[&str],
        x: &SparseVec,
        rhs: &LinearMap,
    ) {
        match self.phi_of(x) {
            Some(lhs) => compare_maps(v, identity, tuple, &lhs, rhs),
            None => v.fail(identity, tuple, "outside B".into(), show(rhs)),
        }
    }

    /// Whether `(f_v, f_w): self → other` is a morphism of modules over the same crossed module.
    pub fn check_morphism(
        &self,
        f_v: &LinearMap,
        f_w: &LinearMap,
        other: &XModLeftModule,
    ) -> Verdict {
        let mut v = self.target.check_morphism(f_v, f_w, &other.target);
        if self.source != other.source {
            v.fail(
                "same crossed module",
                &[],
                "source".into(),
                "other source".into(),
            );
        }
        if !v.is_pass() {
            return v;
        }
        v.merge(self.psi_v.check_morphism(f_v, &other.psi_v));
        v.merge(self.psi_w.check_morphism(f_w, &other.psi_w));
        for (k, (e, _)) in self.source.b_basis.iter().enumerate() {
            if *e > self.source.report_degree {
                continue;
            }
            let t = format!("B basis {k}");
            compare_maps(
                &mut v,
                "f_V φ(b) = φ'(b) f_W",
                &[&t],
                &compose(f_v, &self.phi[k]),
                &compose(&other.phi[k], f_w),
            );
        }
        v
    }

    /// The same module in the bases given by the columns of the invertible `change_v`, `change_w`.
    pub fn conjugate(&self, change_v: &LinearMap, change_w: &LinearMap) -> Result<Self> {
        let inv_v = change_v
            .inverse()
            .ok_or_else(|| Error::Input("change of basis of V is not invertible".into()))?;
        let inv_w = change_w
            .inverse()
            .ok_or_else(|| Error::Input("change of basis of W is not invertible".into()))?;
        let conj = |m: &ULModule, inv: &LinearMap, ch: &LinearMap| ULModule {
            names: m.names.clone(),
            psi: m
                .psi
                .iter()
                .map(|f| compose(inv, &compose(f, ch)))
                .collect(),
        };
        let map = compose(&inv_w, &compose(&self.target.map, change_v));
        Ok(XModLeftModule {
            source: self.source.clone(),
            target: AbelianXMod::new(self.target.bottom.clone(), self.target.top.clone(), map)?,
            phi: self
                .phi
                .iter()
                .map(|f| compose(&inv_v, &compose(f, change_w)))
                .collect(),
            psi_v: conj(&self.psi_v, &inv_v, change_v),
            psi_w: conj(&self.psi_w, &inv_w, change_w),
        })
    }
}

fn ambient_names(u: &TruncAssocXMod) -> Vec<String> {
    u.ambient
        .basis()
        .iter()
        .map(|w| w.render(u.ambient.names()))
        .collect()
}

/// Generator actions on `N ⊕ M`: `(q,p)_l(n,m) = ([q,n] + [p,n] + ξ₁(q,m), [p,m])` and
/// `(q,p)_r(n,m) = ([n,q] + [n,p] + ξ₂(m,q), [m,p])`, in the generator order of `UL(q⋊p)`.
fn phi_generators(r: &LeibnizXModRep) -> Vec<LinearMap> {
    let (nq, np) = (r.xmod.q().dim(), r.xmod.p().dim());
    let (nn, nm) = (r.abelian.bottom_dim(), r.abelian.top_dim());
    let zero_m = LinearMap::zero(nm, nm);
    let zero_nm = LinearMap::zero(nn, nm);
    let left = (0..nq)
        .map(|j| block(&r.on_n.left_of(r.eta_q(j)), &r.xi1[j], &zero_m))
        .chain((0..np).map(|i| block(r.on_n.left(i), &zero_nm, r.on_m.left(i))));
    let right = (0..nq)
        .map(|j| block(&r.on_n.right_of(r.eta_q(j)), &r.xi2[j], &zero_m))
        .chain((0..np).map(|i| block(r.on_n.right(i), &zero_nm, r.on_m.right(i))));
    left.collect::<Vec<_>>().into_iter().chain(right).collect()
}

/// The module over `XUL` of a representation: `ψ` from the actions of `p`, and `φ` from the word
/// action of `Φ` on `N ⊕ M`, restricted to `B` and read off as maps `M → N`.
pub fn rep_to_xmodule(r: &LeibnizXModRep, u: &TruncAssocXMod) -> Result<XModLeftModule> {
    if r.xmod != u.cat1.xmod {
        return Err(Error::Input(
            "representation of a different crossed module".into(),
        ));
    }
    if let Some(w) = r.check().witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_xmod_rep".into(),
            detail: w.to_string(),
        });
    }
    let psi_v = rep_to_module(&r.on_n, u.a()).map_err(|e| e.at("module N"))?;
    let psi_w = rep_to_module(&r.on_m, u.a()).map_err(|e| e.at("module M"))?;
    let (nn, nm) = (r.abelian.bottom_dim(), r.abelian.top_dim());
    let dim = nn + nm;
    let gens = phi_generators(r);
    let total = &u.cat1.total.carrier;
    for rel in total.relations() {
        let mut acc = LinearMap::zero(dim, dim);
        for (w, c) in rel.terms() {
            acc = acc.add(&word_action(&gens, w, dim).scaled(c))?;
        }
        if !acc.is_zero() {
            return Err(Error::Inconsistent(format!(
                "relation {} acts as {}",
                rel.render(total.names()),
                show(&acc)
            )));
        }
    }
    let on_total: Vec<LinearMap> = total
        .basis()
        .iter()
        .map(|w| word_action(&gens, w, dim))
        .collect();
    let total_names: Vec<String> = total
        .basis()
        .iter()
        .map(|w| w.render(total.names()))
        .collect();
    for x in u.x_ideal.basis() {
        let acc = combine(&on_total, x, dim, dim);
        if !acc.is_zero() {
            return Err(Error::Inconsistent(format!(
                "{} in 𝒳 acts as {}",
                render_vec(x, &total_names),
                show(&acc)
            )));
        }
    }
    let on_ambient: Vec<LinearMap> = u
        .ambient
        .basis()
        .iter()
        .map(|w| word_action(&gens, w, dim))
        .collect();
    let mut phi = Vec::with_capacity(u.b_basis.len());
    for (_, b) in &u.b_basis {
        let full = combine(&on_ambient, b, dim, dim);
        let cols: Vec<SparseVec> = (nn..dim).map(|j| full.column(j).clone()).collect();
        if cols.iter().any(|c| c.iter().any(|(i, _)| i >= nn)) {
            return Err(Error::Inconsistent(format!(
                "{} does not map M into N",
                render_vec(b, &ambient_names(u))
            )));
        }
        phi.push(LinearMap::from_columns(nn, cols));
    }
    let module = XModLeftModule {
        source: u.clone(),
        target: r.abelian.clone(),
        phi,
        psi_v,
        psi_w,
    };
    if let Some(w) = module.check().witnesses.first() {
        return Err(Error::Inconsistent(w.to_string()));
    }
    Ok(module)
}

/// The representation of a module: actions from `ψ` on degree-one generators,
/// `ξ₁(q,m) = φ((q,0)_l)(m)` and `ξ₂(m,q) = φ((q,0)_r)(m)`.
pub fn xmodule_to_rep(m: &XModLeftModule) -> Result<LeibnizXModRep> {
    let u = &m.source;
    let xmod = u.cat1.xmod.clone();
    let (nq, n) = (xmod.q().dim(), xmod.q().dim() + xmod.p().dim());
    let on_n = module_to_rep(&m.psi_v, u.a())?;
    let on_m = module_to_rep(&m.psi_w, u.a())?;
    let xi = |g: usize| {
        m.phi_of(u.ambient.generator(g))
            .ok_or_else(|| Error::Inconsistent("a q-letter is not in B".into()))
    };
    let xi1 = (0..nq).map(xi).collect::<Result<Vec<_>>>()?;
    let xi2 = (0..nq).map(|j| xi(n + j)).collect::<Result<Vec<_>>>()?;
    let r = LeibnizXModRep::new(xmod, m.target.clone(), on_n, on_m, xi1, xi2)?;
    if let Some(w) = r.check().witnesses.first() {
        return Err(Error::Inconsistent(format!(
            "module at report degree {} gives no representation: {w}",
            u.report_degree
        )));
    }
    Ok(r)
}
