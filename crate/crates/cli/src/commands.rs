//! The subcommands. Each returns a finished [`Report`]; errors become failed reports.

use std::path::Path;

use crossmod::envelope::{u_lie, ul};
use crossmod::free::TruncQuotAlgebra;
use crossmod::leibniz::LeibnizAlgebra;
use crossmod::lm::{leibniz_to_lm, lm_algebra, lm_xmod_envelope, theta_check, u_lm, xmod_to_lm};
use crossmod::verdict::Verdict;
use crossmod::xmod::LeibnizXMod;
use crossmod::xrep::{check_xmod_rep, rep_to_xmodule, xmodule_to_rep};
use crossmod::xul::{
    embedding_squares_check, lemma41_check, prop42_check, xul, xul_check, Certificate,
};
use crossmod::{Error, Result};

use crate::format::{b_labels, dump, to_json, Loader, Object};
use crate::report::{Basis, Parameters, Report};

/// Truncation parameters shared by the pipeline commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub degree: usize,
    pub slack: usize,
    pub report_degree: usize,
}

impl Degrees {
    /// `report_degree` defaults to `degree − 2`.
    pub fn new(degree: usize, slack: usize, report_degree: Option<usize>) -> Self {
        Degrees {
            degree,
            slack,
            report_degree: report_degree.unwrap_or(degree.saturating_sub(2)),
        }
    }

    fn params(&self, with_report: bool) -> Parameters {
        Parameters {
            degree: self.degree,
            slack: self.slack,
            report_degree: with_report.then_some(self.report_degree),
        }
    }
}

fn run(command: &str, path: &Path, body: impl FnOnce(&mut Report) -> Result<()>) -> Report {
    let mut r = Report::new(command, &path.display().to_string());
    match body(&mut r) {
        Ok(()) => r.finish(),
        Err(e) => r.failed(&e),
    }
}

fn want_leibniz(obj: Object) -> Result<LeibnizAlgebra> {
    match obj {
        Object::Leibniz(p) => Ok(p),
        other => Err(Error::Input(format!(
            "expected a leibniz_algebra, found {}",
            other.kind()
        ))),
    }
}

fn want_xmod(obj: Object) -> Result<LeibnizXMod> {
    match obj {
        Object::XMod(x) => Ok(x),
        other => Err(Error::Input(format!(
            "expected a leibniz_xmod, found {}",
            other.kind()
        ))),
    }
}

fn words(alg: &TruncQuotAlgebra) -> Vec<String> {
    alg.basis().iter().map(|w| w.render(alg.names())).collect()
}

/// The axiom suite matching the file's kind. `kind` must agree with the file when given.
pub fn check(path: &Path, kind: Option<&str>) -> Report {
    run("check", path, |r| {
        let obj = Loader::load(path)?;
        if let Some(k) = kind {
            if k != obj.kind() {
                return Err(Error::Input(format!(
                    "file holds a {}, not a {k}",
                    obj.kind()
                )));
            }
        }
        let v = match &obj {
            Object::Leibniz(p) => p.check_leibniz(),
            Object::Assoc(a) => a.check_assoc(),
            Object::Rep(rep) => {
                let mut v = Verdict::new();
                v.merge_as(rep.algebra.name(), rep.algebra.check_leibniz());
                v.merge(rep.check_rep());
                v
            }
            Object::XMod(x) => x.check_xmod(),
            Object::AssocXMod(x) => x.check_xmod(),
            Object::XModRep(rep) => check_xmod_rep(rep),
            Object::Module(m) => {
                r.parameters = Some(Parameters {
                    degree: m.source.degree(),
                    slack: m.source.slack(),
                    report_degree: Some(m.source.report_degree),
                });
                m.check()
            }
        };
        r.verdict(&v);
        Ok(())
    })
}

fn ul_profile(p: &LeibnizAlgebra, degree: usize, slack: usize) -> Result<(Vec<[usize; 3]>, bool)> {
    let u = ul(p, degree, slack)?;
    let lz = p.liezation()?;
    let g = u_lie(&lz.lie, degree, slack)?;
    let rows = (0..=degree)
        .map(|k| {
            let below = if k == 0 { 0 } else { g.filtration_dim(k - 1) };
            [
                u.carrier.filtration_dim(k),
                g.filtration_dim(k),
                below * p.dim(),
            ]
        })
        .collect();
    Ok((rows, u.carrier.stabilized() && g.stabilized()))
}

/// `UL(p)` up to degree `D`, compared degree by degree with `U(Liez p) ⊕ U(Liez p)⊗p`.
pub fn ul_cmd(path: &Path, deg: Degrees, dump_basis: bool) -> Report {
    run("ul", path, |r| {
        let p = want_leibniz(Loader::load(path)?)?;
        r.parameters = Some(deg.params(false));
        let (d, s) = (deg.degree, deg.slack);
        let u = ul(&p, d, s)?;
        r.dims("UL(p)", u.carrier.filtration_dims());
        let (profile, stabilized) = ul_profile(&p, d, s)?;
        for (k, row) in profile.iter().enumerate() {
            r.record(
                "dim UL(p) = dim U(g) + dim p · dim U(g)_{≤k−1}",
                Some(k),
                row[0],
                row[1] + row[2],
            );
        }
        let cut = |rows: Vec<[usize; 3]>| rows.into_iter().take(d + 1).collect::<Vec<_>>();
        r.certificate(&Certificate {
            degree: d,
            slack: s,
            report_degree: d,
            profile,
            more_slack: ul_profile(&p, d, s + 1)?.0,
            more_degree: cut(ul_profile(&p, d + 1, s)?.0),
            carriers_stabilized: stabilized,
        });
        if dump_basis {
            r.bases.push(Basis {
                name: "UL(p)".into(),
                elements: words(&u.carrier),
            });
        }
        Ok(())
    })
}

/// `XUL(q, p, η)` with its identities and certificate.
pub fn xul_cmd(path: &Path, deg: Degrees, dump_basis: bool) -> Report {
    run("xul", path, |r| {
        let x = want_xmod(Loader::load(path)?)?;
        r.parameters = Some(deg.params(true));
        let (t, rep) = xul_check(&x, deg.degree, deg.slack, deg.report_degree)?;
        let d = deg.report_degree;
        r.dims("ambient", t.ambient_dims(d));
        r.dims("B", t.b_dims(d));
        r.dims("UL(p)", (0..=d).map(|k| t.base.filtration_dim(k)).collect());
        r.verdict(&rep.verdict);
        r.certificate(&rep.certificate);
        if dump_basis {
            r.bases.push(Basis {
                name: "ambient".into(),
                elements: words(&t.ambient),
            });
            r.bases.push(Basis {
                name: "B".into(),
                elements: b_labels(&t),
            });
        }
        Ok(())
    })
}

/// The LM picture: for an algebra its enveloping object, for a crossed module its enveloping
/// crossed module in LM.
pub fn lm_cmd(path: &Path, deg: Degrees, dump_basis: bool) -> Report {
    run("lm", path, |r| {
        match Loader::load(path)? {
            Object::Leibniz(p) => {
                r.parameters = Some(deg.params(false));
                let l = leibniz_to_lm(&p)?;
                r.verdict(&l.check());
                let u = u_lm(&l, deg.degree, deg.slack)?;
                r.verdict(&u.check());
                let explicit = u.associated_algebra()?;
                let presented = lm_algebra(&l, deg.degree, deg.slack)?;
                let split = presented.split_dims(deg.degree);
                r.dims("U(g)", split.iter().map(|s| s.1).collect());
                r.dims("U(g)⊗M", split.iter().map(|s| s.0).collect());
                for k in 0..=deg.degree {
                    r.record(
                        "A ⊕ R: explicit = presented",
                        Some(k),
                        explicit.filtration_dim(k),
                        presented.alg.filtration_dim(k),
                    );
                }
                r.record(
                    "U(g) = top of U in LM",
                    None,
                    u.top.dim(),
                    split[deg.degree].1,
                );
                if dump_basis {
                    r.bases.push(Basis {
                        name: "A ⊕ R".into(),
                        elements: words(&presented.alg),
                    });
                }
            }
            Object::XMod(x) => {
                r.parameters = Some(deg.params(true));
                let l = xmod_to_lm(&x)?;
                let y = lm_xmod_envelope(&l, deg.degree, deg.slack, deg.report_degree)?;
                let d = deg.report_degree;
                r.dims("ambient", y.ambient_dims(d));
                r.dims("B", y.b_dims(d));
                let kd = y.kernel_dims(d);
                r.dims("Ker Ū(s₁)", kd.iter().map(|k| k.0).collect());
                r.dims("Ker Ū(s₂)", kd.iter().map(|k| k.1).collect());
                for k in 0..=d {
                    r.record(
                        "B = Ker Ū(s₁) ⊕ Ker Ū(s₂)",
                        Some(k),
                        y.b_dims(d)[k],
                        kd[k].0 + kd[k].1,
                    );
                }
                r.verdict(&y.check());
                r.certificate(&y.certificate()?);
                if dump_basis {
                    r.bases.push(Basis {
                        name: "ambient".into(),
                        elements: words(&y.ambient),
                    });
                    r.bases.push(Basis {
                        name: "B".into(),
                        elements: b_labels(&y),
                    });
                }
            }
            other => {
                return Err(Error::Input(format!(
                    "lm takes a leibniz_algebra or leibniz_xmod, not {}",
                    other.kind()
                )))
            }
        }
        Ok(())
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Lemma41,
    Prop42,
    Thm5,
    Theta,
    Squares,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Lemma41 => "lemma41",
            Theorem::Prop42 => "prop42",
            Theorem::Thm5 => "thm5",
            Theorem::Theta => "theta",
            Theorem::Squares => "squares",
        }
    }
}

/// Runs one of the verification suites.
pub fn verify(theorem: Theorem, path: &Path, deg: Degrees) -> Report {
    run(&format!("verify {}", theorem.name()), path, |r| {
        let obj = Loader::load(path)?;
        let (d, s, rd) = (deg.degree, deg.slack, deg.report_degree);
        if theorem != Theorem::Thm5 {
            r.parameters = Some(deg.params(true));
        }
        let report = match theorem {
            Theorem::Lemma41 => lemma41_check(&want_xmod(obj)?, d, s, rd)?,
            Theorem::Prop42 => prop42_check(&want_leibniz(obj)?, d, s, rd)?,
            Theorem::Squares => embedding_squares_check(&want_leibniz(obj)?, d, s, rd)?,
            Theorem::Theta => theta_check(&want_xmod(obj)?, d, s, rd)?.1,
            Theorem::Thm5 => return thm5(r, obj, deg),
        };
        r.verdict(&report.verdict);
        r.certificate(&report.certificate);
        Ok(())
    })
}

/// Representation to module and back, or module to representation and back.
fn thm5(r: &mut Report, obj: Object, deg: Degrees) -> Result<()> {
    let mut v = Verdict::new();
    match obj {
        Object::XModRep(rep) => {
            r.parameters = Some(deg.params(true));
            let u = xul(&rep.xmod, deg.degree, deg.slack, deg.report_degree)?;
            let m = rep_to_xmodule(&rep, &u)?;
            v.merge_as("module", m.check());
            let back = xmodule_to_rep(&m)?;
            if back == rep {
                v.checked += 1;
            } else {
                v.fail(
                    "rep → module → rep is the identity",
                    &[],
                    "different data".into(),
                    "input".into(),
                );
            }
            r.certificate(&u.certificate()?);
        }
        Object::Module(m) => {
            let u = &m.source;
            r.parameters = Some(Parameters {
                degree: u.degree(),
                slack: u.slack(),
                report_degree: Some(u.report_degree),
            });
            v.merge_as("module", m.check());
            let rep = xmodule_to_rep(&m)?;
            v.merge_as("representation", check_xmod_rep(&rep));
            let back = rep_to_xmodule(&rep, u)?;
            if back == *m {
                v.checked += 1;
            } else {
                v.fail(
                    "module → rep → module is the identity",
                    &[],
                    "different data".into(),
                    "input".into(),
                );
            }
            r.certificate(&u.certificate()?);
        }
        other => {
            return Err(Error::Input(format!(
                "thm5 takes an xmod_rep or xmod_module, not {}",
                other.kind()
            )))
        }
    }
    r.verdict(&v);
    Ok(())
}

/// The module over `XUL` of a representation file, as a module file.
pub fn module_file(path: &Path, deg: Degrees) -> Result<String> {
    let rep = match Loader::load(path)? {
        Object::XModRep(rep) => rep,
        other => {
            return Err(Error::Input(format!(
                "expected an xmod_rep, found {}",
                other.kind()
            )))
        }
    };
    let u = xul(&rep.xmod, deg.degree, deg.slack, deg.report_degree)?;
    let m = rep_to_xmodule(&rep, &u)?;
    Ok(to_json(&dump(&Object::Module(Box::new(m)))))
}

/// The canonical form of a file, with references inlined.
pub fn canonical(path: &Path) -> Result<String> {
    Ok(to_json(&dump(&Loader::load(path)?)))
}
