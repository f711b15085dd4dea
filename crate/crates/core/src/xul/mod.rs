//! The enveloping crossed module of associative algebras `(Ker ŪL(s), UL(p), ŪL(t)|)` of a
//! Leibniz crossed module, computed at a working degree and reported at a lower one.

use crate::envelope::{ul, ul_map, ULAlgebra};
use crate::exact::{Echelon, LinearMap, SparseVec, Subspace};
use crate::free::{induced_map, subspace_product, words_up_to, TruncQuotAlgebra};
use crate::leibniz::LeibnizAlgebra;
use crate::verdict::{render_vec, Status, Verdict};
use crate::xmod::{Cat1Leibniz, LeibnizXMod};
use crate::{Error, Result};

/// `UL` applied to the cat¹-Leibniz algebra `(q⋊p, p, s, t)`.
#[derive(Clone, Debug)]
pub struct EnvelopedCat1 {
    pub xmod: LeibnizXMod,
    pub leibniz: Cat1Leibniz,
    pub total: ULAlgebra,
    pub base: ULAlgebra,
    pub s: LinearMap,
    pub t: LinearMap,
    pub ker_s: Subspace,
    pub ker_t: Subspace,
}

pub fn envelope_cat1(x: &LeibnizXMod, degree: usize, slack: usize) -> Result<EnvelopedCat1> {
    if let Some(w) = x.check_xmod().witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_xmod".into(),
            detail: w.to_string(),
        });
    }
    let leibniz = x.to_cat1().map_err(|e| e.at("semidirect"))?;
    let total = ul(&leibniz.total, degree, slack).map_err(|e| e.at("ul"))?;
    let base = ul(&leibniz.base, degree, slack).map_err(|e| e.at("ul"))?;
    let s = ul_map(&leibniz.s, &total, &base).map_err(|e| e.at("induced_map s"))?;
    let t = ul_map(&leibniz.t, &total, &base).map_err(|e| e.at("induced_map t"))?;
    let (ker_s, ker_t) = (s.kernel(), t.kernel());
    Ok(EnvelopedCat1 {
        xmod: x.clone(),
        leibniz,
        total,
        base,
        s,
        t,
        ker_s,
        ker_t,
    })
}

impl EnvelopedCat1 {
    fn is_q_letter(&self, g: usize) -> bool {
        let n = self.total.p.dim();
        g % n < self.xmod.q().dim()
    }

    /// Span of the classes of words of length at most `d` with at least one letter from `q`.
    pub fn q_word_span(&self, d: usize) -> Result<Subspace> {
        let alg = &self.total.carrier;
        let mut e = Echelon::new();
        for w in words_up_to(alg.ngens(), d.min(alg.degree())) {
            if w.letters().iter().any(|&g| self.is_q_letter(g)) {
                e.insert(alg.reduce_word(&w)?);
            }
        }
        Ok(Subspace::span(alg.dim(), e.into_rows()))
    }

    /// `Ker UL(s) ∩ F_d`.
    pub fn kernel_part(&self, d: usize) -> Subspace {
        self.total.carrier.filtration_part(&self.ker_s, d)
    }

    /// Images of the generators of `UL(q⋊p)` under a Leibniz map `total → base`.
    fn generator_images(&self, f: &LinearMap) -> Vec<SparseVec> {
        let n = self.total.p.dim();
        (0..n)
            .map(|k| self.base.left_gen(f.column(k)))
            .chain((0..n).map(|k| self.base.right_gen(f.column(k))))
            .collect()
    }
}

/// Smallest subspace containing `sub` and closed under multiplication by generators on both
/// sides, wherever the product stays within the truncation.
pub(crate) fn close_ideal(alg: &TruncQuotAlgebra, sub: Subspace) -> Result<Subspace> {
    let mut current = sub;
    loop {
        let mut e = Echelon::from_rows(current.basis().iter().cloned());
        for (d, v) in alg.filtration_basis(&current) {
            if d >= alg.degree() {
                continue;
            }
            for g in alg.generators() {
                e.insert(alg.mul(g, &v)?);
                e.insert(alg.mul(&v, g)?);
            }
        }
        if e.rank() == current.dim() {
            return Ok(current);
        }
        current = Subspace::span(alg.dim(), e.into_rows());
    }
}

fn basis_names(alg: &TruncQuotAlgebra) -> Vec<String> {
    alg.basis().iter().map(|w| w.render(alg.names())).collect()
}

/// A crossed module of associative algebras read off a truncated algebra `total` with two
/// algebra maps `s, t: total → base` and a common section: `ambient = total / 𝒳` with
/// `𝒳 = Ker s·Ker t + Ker t·Ker s`, `B = Ker s̄`, `A = base`, `ρ = t̄|_B`.
#[derive(Clone, Debug)]
pub struct QuotientXMod {
    /// `𝒳` inside `total`.
    pub x_ideal: Subspace,
    pub ambient: TruncQuotAlgebra,
    pub projection: LinearMap,
    pub base: TruncQuotAlgebra,
    pub s_bar: LinearMap,
    pub t_bar: LinearMap,
    /// The section `base → ambient`.
    pub embed: LinearMap,
    pub b: Subspace,
    /// Filtration-adapted basis of `B`, as `(fdeg, vector)`.
    pub b_basis: Vec<(usize, SparseVec)>,
    /// `ρ` on `b_basis`.
    pub rho: LinearMap,
    pub report_degree: usize,
    /// `dim Ker s ∩ F_k` in `total` for `k ≤ report_degree`.
    pub kernel_dims: Vec<usize>,
    b_solver: Echelon,
}

/// Generator images are given for `s`, `t` (in `base`) and for the section (in `total`).
#[allow(clippy::too_many_arguments)]
pub fn quotient_xmod(
    total: &TruncQuotAlgebra,
    base: &TruncQuotAlgebra,
    ker_s: &Subspace,
    ker_t: &Subspace,
    s_images: &[SparseVec],
    t_images: &[SparseVec],
    embed_images: &[SparseVec],
    report_degree: usize,
) -> Result<QuotientXMod> {
    if report_degree + 2 > total.degree() {
        return Err(Error::Input(format!(
            "report degree {report_degree} needs working degree at least {}",
            report_degree + 2
        )));
    }
    let st = subspace_product(ker_s, ker_t, total).map_err(|e| e.at("kernel products"))?;
    let ts = subspace_product(ker_t, ker_s, total).map_err(|e| e.at("kernel products"))?;
    let x_ideal =
        close_ideal(total, st.span.sum(&ts.span)?).map_err(|e| e.at("kernel products"))?;
    let (ambient, projection) = total.quotient(&x_ideal).map_err(|e| e.at("quotient"))?;
    let s_bar = induced_map(&ambient, base, s_images).map_err(|e| e.at("quotient map s"))?;
    let t_bar = induced_map(&ambient, base, t_images).map_err(|e| e.at("quotient map t"))?;
    let images: Vec<SparseVec> = embed_images.iter().map(|v| projection.apply(v)).collect();
    let embed = induced_map(base, &ambient, &images).map_err(|e| e.at("embedding"))?;
    let b = s_bar.kernel();
    let b_basis = ambient.filtration_basis(&b);
    let rho = LinearMap::from_columns(
        base.dim(),
        b_basis.iter().map(|(_, v)| t_bar.apply(v)).collect(),
    );
    let amb = ambient.dim();
    let b_solver = Echelon::from_rows(
        b_basis
            .iter()
            .enumerate()
            .map(|(k, (_, v))| v.concat(amb, &SparseVec::unit(k))),
    );
    let kernel_dims = (0..=report_degree)
        .map(|k| total.filtration_part(ker_s, k).dim())
        .collect();
    Ok(QuotientXMod {
        x_ideal,
        ambient,
        projection,
        base: base.clone(),
        s_bar,
        t_bar,
        embed,
        b,
        b_basis,
        rho,
        report_degree,
        kernel_dims,
        b_solver,
    })
}

impl QuotientXMod {
    /// Filtration-adapted basis of `B ∩ F_d`.
    pub fn b_part(&self, d: usize) -> Vec<&SparseVec> {
        self.b_basis
            .iter()
            .filter(|(e, _)| *e <= d)
            .map(|(_, v)| v)
            .collect()
    }

    /// Coordinates of `v` in `b_basis`, if `v ∈ B`.
    pub fn b_coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let n = self.ambient.dim();
        let r = self.b_solver.reduce(&v.concat(n, &SparseVec::new()));
        if r.iter().any(|(i, _)| i < n) {
            return None;
        }
        Some(r.slice(n, n + self.b_basis.len()).neg())
    }

    /// `dim B ∩ F_k` for `k = 0..=d`.
    pub fn b_dims(&self, d: usize) -> Vec<usize> {
        (0..=d).map(|k| self.b_part(k).len()).collect()
    }

    /// `dim F_k` of the ambient quotient for `k = 0..=d`.
    pub fn ambient_dims(&self, d: usize) -> Vec<usize> {
        (0..=d).map(|k| self.ambient.filtration_dim(k)).collect()
    }

    /// `a · b` for `a ∈ A`, `b ∈ B`, if the product lies within the report degree.
    pub fn act_left(&self, a: &SparseVec, b: &SparseVec) -> Option<SparseVec> {
        if self.base.fdeg(a) + self.ambient.fdeg(b) > self.report_degree {
            return None;
        }
        self.ambient.try_mul(&self.embed.apply(a), b)
    }

    pub fn act_right(&self, b: &SparseVec, a: &SparseVec) -> Option<SparseVec> {
        if self.base.fdeg(a) + self.ambient.fdeg(b) > self.report_degree {
            return None;
        }
        self.ambient.try_mul(b, &self.embed.apply(a))
    }

    /// Per filtration degree up to the report degree: ambient dimension, `dim B ∩ F_k` and
    /// `dim Ker s ∩ F_k`.
    pub fn profile(&self) -> Vec<[usize; 3]> {
        let d = self.report_degree;
        let (amb, bd) = (self.ambient_dims(d), self.b_dims(d));
        (0..=d)
            .map(|k| [amb[k], bd[k], self.kernel_dims[k]])
            .collect()
    }

    /// The cat¹ conditions and the crossed-module identities on filtration bases, for every
    /// instance whose total degree is at most the report degree.
    pub fn check(&self) -> Verdict {
        let d = self.report_degree;
        let amb = &self.ambient;
        let base = &self.base;
        let (an, bn) = (basis_names(amb), basis_names(base));
        let mut v = Verdict::new();
        let a_idx: Vec<usize> = (0..base.dim())
            .filter(|&k| base.fdeg_of_basis(k) <= d)
            .collect();
        for &k in &a_idx {
            let a = SparseVec::unit(k);
            let e = self.embed.apply(&a);
            v.compare("CAs1 s̄|A = id", &[&bn[k]], &self.s_bar.apply(&e), &a, &bn);
            v.compare("CAs1 t̄|A = id", &[&bn[k]], &self.t_bar.apply(&e), &a, &bn);
        }
        let ker_t = amb.filtration_basis(&self.t_bar.kernel());
        let bs: Vec<(usize, &SparseVec)> = self
            .b_basis
            .iter()
            .filter(|(e, _)| *e <= d)
            .map(|(e, x)| (*e, x))
            .collect();
        let show = |x: &SparseVec| render_vec(x, &an);
        for &(db, b) in &bs {
            for (_, k) in ker_t.iter().filter(|(e, _)| db + e <= d) {
                let (sb, sk) = (show(b), show(k));
                v.compare(
                    "CAs2 Ker s̄·Ker t̄ = 0",
                    &[&sb, &sk],
                    &amb.mul(b, k).unwrap(),
                    &SparseVec::new(),
                    &an,
                );
                v.compare(
                    "CAs2 Ker t̄·Ker s̄ = 0",
                    &[&sk, &sb],
                    &amb.mul(k, b).unwrap(),
                    &SparseVec::new(),
                    &an,
                );
            }
        }
        for &(db, b) in &bs {
            let rb = self.t_bar.apply(b);
            let sb = show(b);
            for &(_, c) in bs.iter().filter(|(e, _)| db + e <= d) {
                let sc = show(c);
                let bc = amb.mul(b, c).unwrap();
                let rc = self.t_bar.apply(c);
                v.compare(
                    "ρ(b1b2) = ρ(b1)ρ(b2)",
                    &[&sb, &sc],
                    &self.t_bar.apply(&bc),
                    &base.mul(&rb, &rc).unwrap(),
                    &bn,
                );
                v.compare(
                    "ρ(b1)b2 = b1b2",
                    &[&sb, &sc],
                    &amb.mul(&self.embed.apply(&rb), c).unwrap(),
                    &bc,
                    &an,
                );
                v.compare(
                    "b1ρ(b2) = b1b2",
                    &[&sb, &sc],
                    &amb.mul(b, &self.embed.apply(&rc)).unwrap(),
                    &bc,
                    &an,
                );
            }
            for &k in a_idx.iter().filter(|&&k| db + base.fdeg_of_basis(k) <= d) {
                let a = SparseVec::unit(k);
                let (ab, ba) = (
                    self.act_left(&a, b).unwrap(),
                    self.act_right(b, &a).unwrap(),
                );
                let t = [bn[k].as_str(), sb.as_str()];
                v.compare("ab ∈ B", &t, &self.s_bar.apply(&ab), &SparseVec::new(), &bn);
                v.compare("ba ∈ B", &t, &self.s_bar.apply(&ba), &SparseVec::new(), &bn);
                v.compare(
                    "ρ(ab) = aρ(b)",
                    &t,
                    &self.t_bar.apply(&ab),
                    &base.mul(&a, &rb).unwrap(),
                    &bn,
                );
                v.compare(
                    "ρ(ba) = ρ(b)a",
                    &t,
                    &self.t_bar.apply(&ba),
                    &base.mul(&rb, &a).unwrap(),
                    &bn,
                );
            }
        }
        v
    }
}

/// The crossed module `(Ker ŪL(s), UL(p), ŪL(t)|)` of a Leibniz crossed module. `B` is a
/// non-unital ideal of the ambient quotient `ŪL(q⋊p)`.
#[derive(Clone, Debug)]
pub struct TruncAssocXMod {
    pub cat1: EnvelopedCat1,
    pub core: QuotientXMod,
}

impl std::ops::Deref for TruncAssocXMod {
    type Target = QuotientXMod;

    fn deref(&self) -> &QuotientXMod {
        &self.core
    }
}

pub fn xul(
    x: &LeibnizXMod,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<TruncAssocXMod> {
    if report_degree + 2 > degree {
        return Err(Error::Input(format!(
            "report degree {report_degree} needs working degree at least {}",
            report_degree + 2
        )));
    }
    let cat1 = envelope_cat1(x, degree, slack)?;
    let alg = &cat1.total.carrier;
    let (nq, np) = (x.q().dim(), x.p().dim());
    let n = nq + np;
    let embed: Vec<SparseVec> = (0..np)
        .map(|i| alg.generator(nq + i).clone())
        .chain((0..np).map(|i| alg.generator(n + nq + i).clone()))
        .collect();
    let core = quotient_xmod(
        alg,
        &cat1.base.carrier,
        &cat1.ker_s,
        &cat1.ker_t,
        &cat1.generator_images(&cat1.leibniz.s),
        &cat1.generator_images(&cat1.leibniz.t),
        &embed,
        report_degree,
    )?;
    Ok(TruncAssocXMod { cat1, core })
}

impl TruncAssocXMod {
    pub fn a(&self) -> &ULAlgebra {
        &self.cat1.base
    }

    pub fn degree(&self) -> usize {
        self.ambient.degree()
    }

    pub fn slack(&self) -> usize {
        self.ambient.slack()
    }

    /// Recomputes the construction with one more unit of slack and one more working degree and
    /// compares the profiles.
    pub fn certificate(&self) -> Result<Certificate> {
        let (deg, slack, d) = (self.degree(), self.slack(), self.report_degree);
        let x = &self.cat1.xmod;
        let more_slack = xul(x, deg, slack + 1, d)?;
        let more_degree = xul(x, deg + 1, slack, d)?;
        let carriers = [&self.cat1.total, &self.cat1.base]
            .iter()
            .all(|u| u.carrier.stabilized());
        Ok(Certificate {
            degree: deg,
            slack,
            report_degree: d,
            profile: self.profile(),
            more_slack: more_slack.profile(),
            more_degree: more_degree.profile(),
            carriers_stabilized: carriers,
        })
    }
}

/// Evidence that a truncated result does not change when slack or working degree grows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub degree: usize,
    pub slack: usize,
    pub report_degree: usize,
    pub profile: Vec<[usize; 3]>,
    pub more_slack: Vec<[usize; 3]>,
    pub more_degree: Vec<[usize; 3]>,
    pub carriers_stabilized: bool,
}

impl Certificate {
    pub fn is_stable(&self) -> bool {
        self.carriers_stabilized
            && self.profile == self.more_slack
            && self.profile == self.more_degree
    }
}

/// A verdict together with its stabilization evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl Report {
    pub fn status(&self) -> Status {
        if !self.verdict.is_pass() {
            Status::Fail
        } else if !self.certificate.is_stable() {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }
}

/// Builds the construction, checks it and certifies it.
pub fn xul_check(
    x: &LeibnizXMod,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<(TruncAssocXMod, Report)> {
    let t = xul(x, degree, slack, report_degree)?;
    let verdict = t.check();
    let certificate = t.certificate()?;
    Ok((
        t,
        Report {
            verdict,
            certificate,
        },
    ))
}

/// Both sides of the description of `Ker UL(s)` by words with a letter from `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma41 {
    pub report_degree: usize,
    pub word_span: Subspace,
    pub kernel_part: Subspace,
}

impl Lemma41 {
    pub fn verdict(&self) -> Verdict {
        let mut v = Verdict::new();
        let d = self.report_degree.to_string();
        if self.word_span == self.kernel_part {
            v.checked += 1;
        } else {
            v.fail(
                "span of q-words = Ker UL(s) ∩ F_d",
                &[&d],
                format!("dim {}", self.word_span.dim()),
                format!("dim {}", self.kernel_part.dim()),
            );
        }
        v
    }
}

/// Only `UL(q⋊p)` and `UL(s)` are involved, both exact up to the working degree, so any
/// `report_degree ≤ degree` is allowed.
pub fn lemma41(
    x: &LeibnizXMod,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<Lemma41> {
    if report_degree > degree {
        return Err(Error::Input(format!(
            "report degree {report_degree} exceeds working degree {degree}"
        )));
    }
    let cat1 = envelope_cat1(x, degree, slack)?;
    Ok(Lemma41 {
        report_degree,
        word_span: cat1.q_word_span(report_degree)?,
        kernel_part: cat1.kernel_part(report_degree),
    })
}

/// The subspace equality together with a certificate comparing dimensions of both sides at
/// `(D, S)`, `(D, S+1)` and `(D+1, S)`.
pub fn lemma41_check(
    x: &LeibnizXMod,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<Report> {
    let d = report_degree;
    let profile = |deg: usize, s: usize| -> Result<(Vec<[usize; 3]>, bool)> {
        let cat1 = envelope_cat1(x, deg, s)?;
        let mut rows = Vec::new();
        for k in 0..=d {
            rows.push([
                cat1.total.carrier.filtration_dim(k),
                cat1.q_word_span(k)?.dim(),
                cat1.kernel_part(k).dim(),
            ]);
        }
        Ok((
            rows,
            cat1.total.carrier.stabilized() && cat1.base.carrier.stabilized(),
        ))
    };
    let verdict = lemma41(x, degree, slack, d)?.verdict();
    let (p0, st) = profile(degree, slack)?;
    let (p1, _) = profile(degree, slack + 1)?;
    let (p2, _) = profile(degree + 1, slack)?;
    Ok(Report {
        verdict,
        certificate: Certificate {
            degree,
            slack,
            report_degree: d,
            profile: p0,
            more_slack: p1,
            more_degree: p2,
            carriers_stabilized: st,
        },
    })
}

/// For `(p, p, id)`: `t̄|_B` against `π∘UL(ε)` with `ε(p) = (p, 0)`.
///
/// `B` has no unit, so the comparison is with the augmentation ideal `UL(p)^+`: `t̄ ∘ π UL(ε)` is
/// the identity on all of `UL(p)`, `π UL(ε)` maps `UL(p)^+` into `B`, `π UL(ε) ∘ t̄` is the identity
/// on `B`, and `(t̄|_B, id)` respects the actions.
pub fn prop42_check(
    p: &LeibnizAlgebra,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<Report> {
    let d = report_degree;
    let (t, mut report) = xul_check(&LeibnizXMod::identity(p), degree, slack, d)?;
    let (amb, base) = (&t.ambient, &t.a().carrier);
    let np = p.dim();
    let n = 2 * np;
    let images: Vec<SparseVec> = (0..np)
        .map(|i| amb.generator(i).clone())
        .chain((0..np).map(|i| amb.generator(n + i).clone()))
        .collect();
    let eps = induced_map(base, amb, &images).map_err(|e| e.at("embedding ε"))?;
    let (an, bn) = (basis_names(amb), basis_names(base));
    let mut v = Verdict::new();
    for k in (0..base.dim()).filter(|&k| base.fdeg_of_basis(k) <= d) {
        let a = SparseVec::unit(k);
        let e = eps.apply(&a);
        v.compare("t̄∘πUL(ε) = id", &[&bn[k]], &t.t_bar.apply(&e), &a, &bn);
        if &a != base.unit() {
            v.compare(
                "πUL(ε)(UL(p)^+) ⊆ B",
                &[&bn[k]],
                &t.s_bar.apply(&e),
                &SparseVec::new(),
                &bn,
            );
        }
    }
    for b in t.b_part(d) {
        let sb = render_vec(b, &an);
        v.compare(
            "πUL(ε)∘t̄ = id on B",
            &[&sb],
            &eps.apply(&t.t_bar.apply(b)),
            b,
            &an,
        );
        for k in (0..base.dim()).filter(|&k| base.fdeg_of_basis(k) + amb.fdeg(b) <= d) {
            let a = SparseVec::unit(k);
            let tb = t.t_bar.apply(b);
            let tpl = [sb.as_str(), bn[k].as_str()];
            v.compare(
                "φ(ba) = φ(b)ψ(a)",
                &tpl,
                &t.t_bar.apply(&t.act_right(b, &a).unwrap()),
                &base.mul(&tb, &a).unwrap(),
                &bn,
            );
            v.compare(
                "φ(ab) = ψ(a)φ(b)",
                &tpl,
                &t.t_bar.apply(&t.act_left(&a, b).unwrap()),
                &base.mul(&a, &tb).unwrap(),
                &bn,
            );
        }
    }
    let bd = t.b_dims(d);
    for k in 0..=d {
        let want = base.filtration_dim(k) - 1;
        if bd[k] == want {
            v.checked += 1;
        } else {
            v.fail(
                "dim B ∩ F_k = dim UL(p)_{≤k} − 1",
                &[&k.to_string()],
                bd[k].to_string(),
                want.to_string(),
            );
        }
    }
    report.verdict.merge(v);
    Ok(report)
}

/// For `(0, p, 0)`: `B` vanishes and the ambient algebra is `UL(p)` itself.
pub fn embedding_squares_check(
    p: &LeibnizAlgebra,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<Report> {
    let d = report_degree;
    let (t, mut report) = xul_check(&LeibnizXMod::zero_on(p), degree, slack, d)?;
    let base = &t.a().carrier;
    let mut v = Verdict::new();
    let bd = t.b_dims(degree);
    let zero_b = bd[degree] == 0;
    if zero_b {
        v.checked += 1;
    } else {
        v.fail("B = 0", &[], format!("dim {}", bd[degree]), "0".into());
    }
    let iso = t.ambient.dim() == base.dim()
        && t.ambient.filtration_dims() == base.filtration_dims()
        && t.s_bar.compose(&t.embed)? == LinearMap::identity(base.dim())
        && t.embed.compose(&t.s_bar)? == LinearMap::identity(base.dim())
        && t.t_bar == t.s_bar;
    if iso {
        v.checked += 1;
    } else {
        v.fail(
            "A = UL(p)",
            &[],
            format!("dim {}", t.ambient.dim()),
            format!("dim {}", base.dim()),
        );
    }
    report.verdict.merge(v);
    Ok(report)
}

/// `XUL(φ, ψ)`: the induced maps on ambient algebras and on `UL(p)`.
pub fn xul_morphism(
    src: &TruncAssocXMod,
    dst: &TruncAssocXMod,
    phi: &LinearMap,
    psi: &LinearMap,
) -> Result<(LinearMap, LinearMap)> {
    let (x, y) = (&src.cat1.xmod, &dst.cat1.xmod);
    if let Some(w) = x.check_morphism(phi, psi, y).witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_morphism".into(),
            detail: w.to_string(),
        });
    }
    let (nq, np) = (x.q().dim(), x.p().dim());
    let (mq, mp) = (y.q().dim(), y.p().dim());
    let m = mq + mp;
    let total: Vec<SparseVec> = (0..nq)
        .map(|j| phi.column(j).clone())
        .chain((0..np).map(|i| psi.column(i).shifted(mq)))
        .collect();
    let gen_image = |v: &SparseVec, offset: usize| {
        let mut out = SparseVec::new();
        for (k, c) in v.iter() {
            out.add_scaled_assign(c, dst.ambient.generator(offset + k));
        }
        out
    };
    let images: Vec<SparseVec> = total
        .iter()
        .map(|v| gen_image(v, 0))
        .chain(total.iter().map(|v| gen_image(v, m)))
        .collect();
    let f = induced_map(&src.ambient, &dst.ambient, &images).map_err(|e| e.at("ambient map"))?;
    let g = ul_map(psi, src.a(), dst.a()).map_err(|e| e.at("UL(ψ)"))?;
    Ok((f, g))
}

/// Crossed-module morphism conditions for `(f|_B, g)` up to the smaller report degree.
pub fn check_xul_morphism(
    src: &TruncAssocXMod,
    dst: &TruncAssocXMod,
    f: &LinearMap,
    g: &LinearMap,
) -> Verdict {
    let d = src.report_degree.min(dst.report_degree);
    let (an, bn) = (basis_names(&dst.ambient), basis_names(&dst.a().carrier));
    let sa = &src.a().carrier;
    let mut v = Verdict::new();
    for b in src.b_part(d) {
        let fb = f.apply(b);
        let sb = render_vec(b, &basis_names(&src.ambient));
        v.compare(
            "φ(B) ⊆ B'",
            &[&sb],
            &dst.s_bar.apply(&fb),
            &SparseVec::new(),
            &bn,
        );
        v.compare(
            "ψρ = ρ'φ",
            &[&sb],
            &g.apply(&src.t_bar.apply(b)),
            &dst.t_bar.apply(&fb),
            &bn,
        );
        for k in (0..sa.dim()).filter(|&k| sa.fdeg_of_basis(k) + src.ambient.fdeg(b) <= d) {
            let a = SparseVec::unit(k);
            let ga = dst.embed.apply(&g.apply(&a));
            let sk = sa.basis()[k].render(sa.names());
            let tpl = [sb.as_str(), sk.as_str()];
            let lhs = f.apply(&src.act_right(b, &a).unwrap());
            v.compare(
                "φ(ba) = φ(b)ψ(a)",
                &tpl,
                &lhs,
                &dst.ambient.mul(&fb, &ga).unwrap(),
                &an,
            );
            let lhs = f.apply(&src.act_left(&a, b).unwrap());
            v.compare(
                "φ(ab) = ψ(a)φ(b)",
                &tpl,
                &lhs,
                &dst.ambient.mul(&ga, &fb).unwrap(),
                &an,
            );
        }
    }
    v
}
