//! The universal enveloping algebra of a Leibniz algebra and its modules.

use crate::exact::{LinearMap, SparseVec};
use crate::free::{induced_map, NCPoly, TruncQuotAlgebra, Word};
use crate::leibniz::{LeibnizAlgebra, LeibnizRep};
use crate::verdict::Verdict;
use crate::{Error, Result};

/// Generators `x_l` for every basis element, followed by every `x_r`.
pub fn ul_generator_names(p: &LeibnizAlgebra) -> Vec<String> {
    p.names()
        .iter()
        .map(|x| format!("{x}_l"))
        .chain(p.names().iter().map(|x| format!("{x}_r")))
        .collect()
}

fn linear(v: &SparseVec, offset: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for (k, c) in v.iter() {
        out.add_term(Word::letter(offset + k), c.clone());
    }
    out
}

/// The defining relations for every ordered pair of basis elements `(x, y)`:
/// `x_r y_r − y_r x_r − [x,y]_r`, `x_l y_r − y_r x_l − [x,y]_l`, `y_r x_l + y_l x_l`.
pub fn ul_relations(p: &LeibnizAlgebra) -> Vec<NCPoly> {
    let n = p.dim();
    let (l, r) = (|i: usize| i, |i: usize| n + i);
    let word = |a: usize, b: usize| NCPoly::monomial(Word(vec![a, b]), crate::exact::one());
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let br = p.basis_bracket(x, y);
            out.push(word(r(x), r(y)).sub(&word(r(y), r(x))).sub(&linear(br, n)));
            out.push(word(l(x), r(y)).sub(&word(r(y), l(x))).sub(&linear(br, 0)));
            out.push(word(r(y), l(x)).add(&word(l(y), l(x))));
        }
    }
    out
}

/// `UL(p)` truncated at degree `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ULAlgebra {
    pub p: LeibnizAlgebra,
    pub carrier: TruncQuotAlgebra,
}

pub fn ul(p: &LeibnizAlgebra, degree: usize, slack: usize) -> Result<ULAlgebra> {
    if let Some(w) = p.check_leibniz().witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_leibniz".into(),
            detail: w.to_string(),
        });
    }
    if degree < 2 {
        return Err(Error::Input("UL needs working degree at least 2".into()));
    }
    let carrier =
        TruncQuotAlgebra::presented(ul_generator_names(p), ul_relations(p), degree, slack)?;
    Ok(ULAlgebra {
        p: p.clone(),
        carrier,
    })
}

impl ULAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn degree(&self) -> usize {
        self.carrier.degree()
    }

    /// Class of `x_l` for `x ∈ p`.
    pub fn left_gen(&self, x: &SparseVec) -> SparseVec {
        combine(self.carrier.generators(), x, 0)
    }

    /// Class of `x_r` for `x ∈ p`.
    pub fn right_gen(&self, x: &SparseVec) -> SparseVec {
        combine(self.carrier.generators(), x, self.p.dim())
    }
}

fn combine(gens: &[SparseVec], x: &SparseVec, offset: usize) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, c) in x.iter() {
        out.add_scaled_assign(c, &gens[offset + k]);
    }
    out
}

/// `U(g)` of a Lie algebra, truncated: generators are the basis of `g`, relations `xy − yx − [x,y]`.
pub fn u_lie(g: &LeibnizAlgebra, degree: usize, slack: usize) -> Result<TruncQuotAlgebra> {
    if let Some(w) = g.check_lie().witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_lie".into(),
            detail: w.to_string(),
        });
    }
    let n = g.dim();
    let mut rels = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut r = NCPoly::monomial(Word(vec![x, y]), crate::exact::one());
            r.add_term(Word(vec![y, x]), -crate::exact::one());
            rels.push(r.sub(&linear(g.basis_bracket(x, y), 0)));
        }
    }
    TruncQuotAlgebra::presented(g.names().to_vec(), rels, degree.max(2), slack)
        .map(|a| a.truncate(degree))
}

/// A module structure on `K^dim` given on the class basis. Words act letter by letter from the
/// left end, so `ψ(ab) = ψ(b) ∘ ψ(a)` as maps on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ULModule {
    pub names: Vec<String>,
    pub psi: Vec<LinearMap>,
}

impl ULModule {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// `ψ` of an arbitrary class.
    pub fn psi_of(&self, v: &SparseVec) -> LinearMap {
        let mut out = LinearMap::zero(self.dim(), self.dim());
        for (i, c) in v.iter() {
            out = out
                .add(&self.psi[i].scaled(c))
                .expect("square maps of equal size");
        }
        out
    }

    /// Unit acts as the identity and `ψ(b_i b_j) = ψ(b_j) ∘ ψ(b_i)` for every recorded product.
    pub fn check_module(&self, alg: &TruncQuotAlgebra) -> Verdict {
        let mut v = Verdict::new();
        let m = self.dim();
        if self.psi.len() != alg.dim() || self.psi.iter().any(|f| f.rows() != m || f.cols() != m) {
            v.fail(
                "shape",
                &[],
                format!("{} maps", self.psi.len()),
                format!("{} classes", alg.dim()),
            );
            return v;
        }
        let show = |f: &LinearMap| {
            format!(
                "{:?}",
                f.to_dense()
                    .iter()
                    .map(|r| r
                        .iter()
                        .map(crate::exact::format_rational)
                        .collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            )
        };
        let id = LinearMap::identity(m);
        let unit = self.psi_of(alg.unit());
        if unit != id {
            v.fail("unit", &["1"], show(&unit), show(&id));
        } else {
            v.checked += 1;
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let Some(prod) = alg.basis_product(i, j) else {
                    continue;
                };
                let lhs = self.psi_of(prod);
                let rhs = self.psi[j].compose(&self.psi[i]).expect("square maps");
                v.checked += 1;
                if lhs != rhs {
                    let names = alg.names();
                    let (a, b) = (alg.basis()[i].render(names), alg.basis()[j].render(names));
                    v.fail("multiplicativity", &[&a, &b], show(&lhs), show(&rhs));
                    v.checked -= 1;
                }
            }
        }
        v
    }

    /// Whether `f: self → other` intertwines the two module structures on every class.
    pub fn check_morphism(&self, f: &LinearMap, other: &ULModule) -> Verdict {
        let mut v = Verdict::new();
        for (i, (a, b)) in self.psi.iter().zip(&other.psi).enumerate() {
            let lhs = f.compose(a).expect("shapes");
            let rhs = b.compose(f).expect("shapes");
            v.checked += 1;
            if lhs != rhs {
                v.checked -= 1;
                v.fail(
                    "module morphism",
                    &[&format!("class {i}")],
                    format!("{:?}", lhs.to_dense()),
                    format!("{:?}", rhs.to_dense()),
                );
            }
        }
        v
    }
}

/// Action of a word: letters applied from the left end.
pub(crate) fn word_action(gens: &[LinearMap], w: &Word, dim: usize) -> LinearMap {
    let mut acc = LinearMap::identity(dim);
    for &x in w.letters() {
        acc = gens[x].compose(&acc).expect("square maps");
    }
    acc
}

/// Extends generator actions to a module over a presented truncated algebra, checking that every
/// defining relation acts as zero and that the result is multiplicative.
pub fn extend_to_module(
    alg: &TruncQuotAlgebra,
    names: Vec<String>,
    gens: &[LinearMap],
) -> Result<ULModule> {
    let dim = names.len();
    for r in alg.relations() {
        let mut total = LinearMap::zero(dim, dim);
        for (w, c) in r.terms() {
            total = total.add(&word_action(gens, w, dim).scaled(c))?;
        }
        if !total.is_zero() {
            return Err(Error::Inconsistent(format!(
                "relation {} does not act as zero",
                r.render(alg.names())
            )));
        }
    }
    let psi = alg
        .basis()
        .iter()
        .map(|w| word_action(gens, w, dim))
        .collect();
    let module = ULModule { names, psi };
    let v = module.check_module(alg);
    if let Some(w) = v.witnesses.first() {
        return Err(Error::Inconsistent(w.to_string()));
    }
    Ok(module)
}

/// `x_l ↦ [x, -]`, `x_r ↦ [-, x]`.
pub fn rep_to_module(rep: &LeibnizRep, ul: &ULAlgebra) -> Result<ULModule> {
    if rep.algebra != ul.p {
        return Err(Error::Input("representation of a different algebra".into()));
    }
    if let Some(w) = rep.check_rep().witnesses.first() {
        return Err(Error::Axiom {
            stage: "check_rep".into(),
            detail: w.to_string(),
        });
    }
    let n = ul.p.dim();
    let gens: Vec<LinearMap> = (0..n)
        .map(|i| rep.left(i).clone())
        .chain((0..n).map(|i| rep.right(i).clone()))
        .collect();
    extend_to_module(&ul.carrier, rep.names().to_vec(), &gens)
}

/// Restriction to the generators.
pub fn module_to_rep(module: &ULModule, ul: &ULAlgebra) -> Result<LeibnizRep> {
    let n = ul.p.dim();
    let left = (0..n)
        .map(|i| module.psi_of(ul.carrier.generator(i)))
        .collect();
    let right = (0..n)
        .map(|i| module.psi_of(ul.carrier.generator(n + i)))
        .collect();
    LeibnizRep::new(ul.p.clone(), module.names.clone(), left, right)
}

/// The algebra map `UL(f): UL(p) → UL(p')` induced by a Leibniz morphism `f`.
pub fn ul_map(f: &LinearMap, src: &ULAlgebra, dst: &ULAlgebra) -> Result<LinearMap> {
    let (n, m) = (src.p.dim(), dst.p.dim());
    if f.cols() != n || f.rows() != m {
        return Err(Error::Dimension(
            "morphism does not match the algebras".into(),
        ));
    }
    let images: Vec<SparseVec> = (0..n)
        .map(|i| dst.left_gen(f.column(i)))
        .chain((0..n).map(|i| dst.right_gen(f.column(i))))
        .collect();
    induced_map(&src.carrier, &dst.carrier, &images)
}
