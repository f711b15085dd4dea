//! The comparison map `θ` from `XUL(q, p, η)` to the classical crossed module associated with the
//! enveloping crossed module in LM of `(q, p, η)`.
//!
//! On generators `θ(x_r) = x̄` in `h⋊g` and `θ(x_l) = −(1⊗x)`. The sign on the left letters is
//! forced by the relation `y_r x_l + y_l x_l`.

use super::envelope::{lm_xmod_envelope, LMAlgebra, LMAssocXMod};
use super::xmod_to_lm;
use crate::envelope::ULAlgebra;
use crate::exact::{LinearMap, SparseVec, Subspace};
use crate::free::{induced_map, TruncQuotAlgebra};
use crate::verdict::{render_vec, Verdict};
use crate::xmod::LeibnizXMod;
use crate::xul::{xul, Certificate, QuotientXMod, Report, TruncAssocXMod};
use crate::Result;

#[derive(Clone, Debug)]
pub struct Theta {
    pub xul: TruncAssocXMod,
    pub lm: LMAssocXMod,
    /// `UL(q⋊p)` to the presented algebra of `q⊕p → h⋊g`.
    pub total: LinearMap,
    /// `UL(p)` to the presented algebra of `p → Liez(p)`.
    pub base: LinearMap,
    /// The induced map of the quotients by `𝒳` and `𝒳' ⊕ 𝒴'`.
    pub quotient: LinearMap,
}

fn generator_images(u: &ULAlgebra, e: &LMAlgebra) -> Vec<SparseVec> {
    let n = u.p.dim();
    let left = (0..n).map(|k| e.bottom_letter(&SparseVec::unit(k)).neg());
    let right = (0..n).map(|k| e.top_letter(e.object.alpha.column(k)));
    left.chain(right).collect()
}

fn names(alg: &TruncQuotAlgebra) -> Vec<String> {
    alg.basis().iter().map(|w| w.render(alg.names())).collect()
}

pub fn theta(x: &LeibnizXMod, degree: usize, slack: usize, report_degree: usize) -> Result<Theta> {
    let t = xul(x, degree, slack, report_degree).map_err(|e| e.at("xul"))?;
    let l = xmod_to_lm(x).map_err(|e| e.at("xmod_to_lm"))?;
    let y =
        lm_xmod_envelope(&l, degree, slack, report_degree).map_err(|e| e.at("lm_xmod_envelope"))?;
    let images = generator_images(&t.cat1.total, &y.total);
    let total =
        induced_map(&t.cat1.total.carrier, &y.total.alg, &images).map_err(|e| e.at("theta"))?;
    let base = induced_map(
        &t.cat1.base.carrier,
        &y.base.alg,
        &generator_images(&t.cat1.base, &y.base),
    )
    .map_err(|e| e.at("theta on the base"))?;
    let projected: Vec<SparseVec> = images.iter().map(|v| y.projection.apply(v)).collect();
    let quotient =
        induced_map(&t.ambient, &y.ambient, &projected).map_err(|e| e.at("theta on classes"))?;
    Ok(Theta {
        xul: t,
        lm: y,
        total,
        base,
        quotient,
    })
}

/// Records whether `f` maps `F_k` of `src` bijectively onto `F_k` of `dst` for `k ≤ d`.
fn filtered_bijection(
    v: &mut Verdict,
    id: &str,
    f: &LinearMap,
    src: &TruncQuotAlgebra,
    dst: &TruncQuotAlgebra,
    d: usize,
) {
    for k in 0..=d {
        let (ns, nd) = (src.filtration_dim(k), dst.filtration_dim(k));
        let image = Subspace::span(
            dst.dim(),
            (0..ns).map(|i| f.column(i).clone()).collect::<Vec<_>>(),
        );
        let inside = image.basis().iter().all(|w| dst.fdeg(w) <= k);
        let k_s = k.to_string();
        if ns == nd && image.dim() == nd && inside {
            v.checked += 1;
        } else {
            v.fail(
                id,
                &[&k_s],
                format!("dim {ns} → rank {} (inside F_k: {inside})", image.dim()),
                format!("dim {nd}"),
            );
        }
    }
}

impl Theta {
    /// `θ` is a bijection on filtration parts up to the report degree and sends `𝒳` onto
    /// `𝒳' + 𝒴'`; the induced map of quotients restricts to a bijection `B → B'`, commutes with
    /// `s̄`, `t̄` and the sections, preserves the unit and the actions.
    pub fn check(&self) -> Verdict {
        let mut v = Verdict::new();
        let (t, y) = (&self.xul, &self.lm);
        let d = t.report_degree;
        let (tot, tot2) = (&t.cat1.total.carrier, &y.total.alg);
        let (base, base2) = (&t.cat1.base.carrier, &y.base.alg);
        let (amb, amb2) = (&t.ambient, &y.ambient);
        let (n1, n2) = (names(amb), names(amb2));
        let (bn1, bn2) = (names(base), names(base2));
        filtered_bijection(
            &mut v,
            "θ: F_k UL(q⋊p) ≅ F_k",
            &self.total,
            tot,
            tot2,
            tot.degree(),
        );
        filtered_bijection(
            &mut v,
            "θ: F_k UL(p) ≅ F_k",
            &self.base,
            base,
            base2,
            base.degree(),
        );
        filtered_bijection(
            &mut v,
            "θ̄: F_k ≅ F_k on classes",
            &self.quotient,
            amb,
            amb2,
            d,
        );
        let image = Subspace::span(
            tot2.dim(),
            t.x_ideal
                .basis()
                .iter()
                .map(|b| self.total.apply(b))
                .collect::<Vec<_>>(),
        );
        for b in t.x_ideal.basis() {
            let w = self.total.apply(b);
            let tn = names(tot);
            v.compare(
                "θ(𝒳) ⊆ 𝒳' + 𝒴'",
                &[&render_vec(b, &tn)],
                &y.x_ideal.reduce(&w),
                &SparseVec::new(),
                &names(tot2),
            );
        }
        if image == y.x_ideal {
            v.checked += 1;
        } else {
            v.fail(
                "θ(𝒳) = 𝒳' + 𝒴'",
                &[],
                format!("dim {}", image.dim()),
                format!("dim {}", y.x_ideal.dim()),
            );
        }
        for (u, u2, name) in [(tot, tot2, "UL(q⋊p)"), (base, base2, "UL(p)")] {
            let f = if name == "UL(p)" {
                &self.base
            } else {
                &self.total
            };
            v.compare(
                "θ(1) = 1",
                &[name],
                &f.apply(u.unit()),
                u2.unit(),
                &names(u2),
            );
        }
        v.compare(
            "θ̄(1) = 1",
            &[],
            &self.quotient.apply(amb.unit()),
            amb2.unit(),
            &n2,
        );
        self.check_morphism(&mut v, t, y, &n1, &n2, &bn1, &bn2);
        v
    }

    #[allow(clippy::too_many_arguments)]
    fn check_morphism(
        &self,
        v: &mut Verdict,
        t: &QuotientXMod,
        y: &QuotientXMod,
        n1: &[String],
        n2: &[String],
        bn1: &[String],
        bn2: &[String],
    ) {
        let d = t.report_degree;
        let (th, tb) = (&self.quotient, &self.base);
        let bs = t.b_part(d);
        let b_image = Subspace::span(
            y.ambient.dim(),
            bs.iter().map(|b| th.apply(b)).collect::<Vec<_>>(),
        );
        let b2 = y.b_part(d).len();
        if b_image.dim() == bs.len()
            && bs.len() == b2
            && b_image.basis().iter().all(|w| y.b.contains(w))
        {
            v.checked += 1;
        } else {
            v.fail(
                "θ̄: B ∩ F_d ≅ B' ∩ F_d",
                &[],
                format!("rank {} of {}", b_image.dim(), bs.len()),
                format!("dim {b2}"),
            );
        }
        for i in (0..t.ambient.dim()).filter(|&i| t.ambient.fdeg_of_basis(i) <= d) {
            let e = SparseVec::unit(i);
            let te = th.apply(&e);
            v.compare(
                "s̄'θ̄ = θs̄",
                &[&n1[i]],
                &y.s_bar.apply(&te),
                &tb.apply(&t.s_bar.apply(&e)),
                bn2,
            );
            v.compare(
                "t̄'θ̄ = θt̄",
                &[&n1[i]],
                &y.t_bar.apply(&te),
                &tb.apply(&t.t_bar.apply(&e)),
                bn2,
            );
        }
        let a_idx: Vec<usize> = (0..t.base.dim())
            .filter(|&k| t.base.fdeg_of_basis(k) <= d)
            .collect();
        for &k in &a_idx {
            let a = SparseVec::unit(k);
            v.compare(
                "θ̄ι = ι'θ",
                &[&bn1[k]],
                &th.apply(&t.embed.apply(&a)),
                &y.embed.apply(&tb.apply(&a)),
                n2,
            );
        }
        let bs_deg: Vec<(usize, &SparseVec)> = t
            .b_basis
            .iter()
            .filter(|(e, _)| *e <= d)
            .map(|(e, b)| (*e, b))
            .collect();
        for &(db, b) in &bs_deg {
            let sb = render_vec(b, n1);
            let tbv = th.apply(b);
            for &k in a_idx.iter().filter(|&&k| db + t.base.fdeg_of_basis(k) <= d) {
                let a = SparseVec::unit(k);
                let ta = tb.apply(&a);
                let tup = [bn1[k].as_str(), sb.as_str()];
                v.compare(
                    "θ̄(ab) = θ(a)θ̄(b)",
                    &tup,
                    &th.apply(&t.act_left(&a, b).unwrap()),
                    &y.act_left(&ta, &tbv).unwrap(),
                    n2,
                );
                v.compare(
                    "θ̄(ba) = θ̄(b)θ(a)",
                    &tup,
                    &th.apply(&t.act_right(b, &a).unwrap()),
                    &y.act_right(&tbv, &ta).unwrap(),
                    n2,
                );
            }
            for &(_, c) in bs_deg.iter().filter(|(e, _)| db + e <= d) {
                let lhs = th.apply(&t.ambient.mul(b, c).unwrap());
                let rhs = y.ambient.mul(&tbv, &th.apply(c)).unwrap();
                v.compare(
                    "θ̄(bb') = θ̄(b)θ̄(b')",
                    &[&sb, &render_vec(c, n1)],
                    &lhs,
                    &rhs,
                    n2,
                );
            }
        }
    }

    /// The LM certificate, with the stability of the XUL side folded into `carriers_stabilized`.
    pub fn certificate(&self) -> Result<Certificate> {
        let mut c = self.lm.certificate()?;
        let other = self.xul.certificate()?;
        c.carriers_stabilized &= other.is_stable();
        Ok(c)
    }
}

/// Builds both sides, checks `θ`, the LM identities and both classical crossed modules, and
/// certifies the result.
pub fn theta_check(
    x: &LeibnizXMod,
    degree: usize,
    slack: usize,
    report_degree: usize,
) -> Result<(Theta, Report)> {
    let th = theta(x, degree, slack, report_degree)?;
    let mut verdict = th.check();
    verdict.merge_as("LM", th.lm.check());
    verdict.merge_as("XUL", th.xul.check());
    let certificate = th.certificate()?;
    Ok((
        th,
        Report {
            verdict,
            certificate,
        },
    ))
}
