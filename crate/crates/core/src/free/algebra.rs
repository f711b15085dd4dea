use super::layers::Layers;
use super::word::{NCPoly, TruncTensorAlgebra, Word};
use crate::exact::{Echelon, LinearMap, SparseVec, Subspace};
use crate::{Error, Result};

/// A finite-dimensional truncation of a filtered unital algebra.
///
/// Coordinates are indexed by `basis`, a list of words sorted canonically whose
/// classes form a basis; the filtration degree of basis element `i` is the length
/// of `basis[i]`, so `F_d` is the span of a prefix of the basis. Products are
/// recorded for every basis pair whose filtration degrees add up to at most `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncQuotAlgebra {
    names: Vec<String>,
    degree: usize,
    basis: Vec<Word>,
    prefix: Vec<usize>,
    generators: Vec<SparseVec>,
    unit: SparseVec,
    table: Vec<Vec<SparseVec>>,
    relations: Vec<NCPoly>,
    slack: usize,
    stabilized: bool,
}

/// Selects the canonical basis words of the degree-`d` part of `Q_n`: words are scanned by
/// increasing length and, within a length, by decreasing lexicographic order, and kept when
/// their class is independent of the classes kept so far.
fn standard_words(layers: &mut Layers, d: usize, n: usize) -> Vec<(Word, SparseVec)> {
    let mut e = Echelon::new();
    let mut kept = Vec::new();
    for len in 0..=d {
        for (w, v) in layers.classes_of_length(len, n).into_iter().rev() {
            if e.insert(v.clone()).is_some() {
                kept.push((w, v));
            }
        }
    }
    kept.sort_by(|a, b| a.0.cmp(&b.0));
    kept
}

fn prefix_dims(basis: &[Word], degree: usize) -> Vec<usize> {
    (0..=degree)
        .map(|d| basis.iter().take_while(|w| w.len() <= d).count())
        .collect()
}

impl TruncQuotAlgebra {
    /// The algebra `T/I` on the given generators, where `I` is the two-sided ideal generated
    /// by `relations`, computed at degree `degree` with the given slack.
    pub fn presented(
        names: Vec<String>,
        relations: Vec<NCPoly>,
        degree: usize,
        slack: usize,
    ) -> Result<Self> {
        let g = names.len();
        for r in &relations {
            if r.degree() > degree {
                return Err(Error::Input(format!(
                    "relation of degree {} exceeds working degree {}",
                    r.degree(),
                    degree
                )));
            }
            if r.terms().any(|(w, _)| w.letters().iter().any(|&x| x >= g)) {
                return Err(Error::Input("relation uses an unknown generator".into()));
            }
        }
        let n = degree + slack;
        let mut layers = Layers::new(g, &relations);
        let kept = standard_words(&mut layers, degree, n);
        let stabilized = {
            let next = standard_words(&mut layers, degree, n + 1);
            next.len() == kept.len()
        };
        let qn = layers.dim(n);
        let nb = kept.len();
        let solver = Echelon::from_rows(
            kept.iter()
                .enumerate()
                .map(|(i, (_, v))| v.concat(qn, &SparseVec::unit(i))),
        );
        let solve = |v: &SparseVec| -> Result<SparseVec> {
            let r = solver.reduce(v);
            if r.iter().any(|(i, _)| i < qn) {
                return Err(Error::Inconsistent(
                    "class outside the truncated span".into(),
                ));
            }
            Ok(r.slice(qn, qn + nb).neg())
        };
        let basis: Vec<Word> = kept.iter().map(|(w, _)| w.clone()).collect();
        let prefix = prefix_dims(&basis, degree);
        let unit = solve(&layers.class(&Word::empty(), n))?;
        let generators = if degree == 0 {
            vec![SparseVec::new(); g]
        } else {
            (0..g)
                .map(|x| solve(&layers.class(&Word::letter(x), n)))
                .collect::<Result<Vec<_>>>()?
        };
        // classes of basis words at the levels they are needed as right factors
        let mut shifted: Vec<Vec<SparseVec>> = Vec::with_capacity(degree + 1);
        for a in 0..=degree {
            shifted.push(
                basis
                    .iter()
                    .map(|w| {
                        if w.len() + a <= degree {
                            layers.class(w, n - a)
                        } else {
                            SparseVec::new()
                        }
                    })
                    .collect(),
            );
        }
        let mut table = Vec::with_capacity(nb);
        for bi in &basis {
            let a = bi.len();
            let limit = prefix[degree - a];
            let mut row = Vec::with_capacity(limit);
            for v in &shifted[a][..limit] {
                row.push(solve(&layers.left_word(bi, v, n - a))?);
            }
            table.push(row);
        }
        Ok(TruncQuotAlgebra {
            names,
            degree,
            basis,
            prefix,
            generators,
            unit,
            table,
            relations,
            slack,
            stabilized,
        })
    }

    /// The truncated free algebra, viewed as a quotient by the zero ideal.
    pub fn tensor(t: &TruncTensorAlgebra) -> Result<Self> {
        Self::presented(t.names().to_vec(), Vec::new(), t.degree(), 0)
    }

    /// Assembles an algebra from explicit structure constants. `table[i][j]` must be given for every
    /// `j` below the dimension of `F_{degree - fdeg(i)}`. Associativity and unitality are checked.
    pub fn from_table(
        names: Vec<String>,
        degree: usize,
        basis: Vec<Word>,
        generators: Vec<SparseVec>,
        unit: SparseVec,
        table: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        if !basis.windows(2).all(|p| p[0] < p[1]) || basis.iter().any(|w| w.len() > degree) {
            return Err(Error::Input(
                "basis words must be distinct, sorted and within the degree".into(),
            ));
        }
        let prefix = prefix_dims(&basis, degree);
        if table.len() != basis.len() {
            return Err(Error::Dimension("multiplication table size".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != prefix[degree - basis[i].len()] {
                return Err(Error::Dimension(format!("multiplication table row {i}")));
            }
        }
        let alg = TruncQuotAlgebra {
            names,
            degree,
            basis,
            prefix,
            generators,
            unit,
            table,
            relations: Vec::new(),
            slack: 0,
            stabilized: true,
        };
        for i in 0..alg.dim() {
            let e = SparseVec::unit(i);
            if alg.mul(&alg.unit, &e)? != e || alg.mul(&e, &alg.unit)? != e {
                return Err(Error::Axiom {
                    stage: "unit".into(),
                    detail: format!("basis element {i}"),
                });
            }
        }
        if let Some((i, j, k)) = alg.associativity_failure() {
            return Err(Error::Axiom {
                stage: "associativity".into(),
                detail: format!("basis triple ({i},{j},{k})"),
            });
        }
        Ok(alg)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    /// Whether the truncated algebra is unchanged when the slack grows by one.
    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn generator(&self, x: usize) -> &SparseVec {
        &self.generators[x]
    }

    pub fn generators(&self) -> &[SparseVec] {
        &self.generators
    }

    pub fn fdeg_of_basis(&self, i: usize) -> usize {
        self.basis[i].len()
    }

    /// Smallest `d` with `v ∈ F_d` (zero for the zero vector).
    pub fn fdeg(&self, v: &SparseVec) -> usize {
        v.iter()
            .map(|(i, _)| self.basis[i].len())
            .max()
            .unwrap_or(0)
    }

    /// `dim F_d`.
    pub fn filtration_dim(&self, d: usize) -> usize {
        self.prefix[d.min(self.degree)]
    }

    pub fn filtration_dims(&self) -> Vec<usize> {
        self.prefix.clone()
    }

    /// Basis indices ordered by pivot preference: higher filtration degree first, then smaller word.
    pub fn priority(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.dim()).collect();
        p.sort_by(|&a, &b| {
            self.basis[b]
                .len()
                .cmp(&self.basis[a].len())
                .then_with(|| self.basis[a].0.cmp(&self.basis[b].0))
        });
        p
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        self.table[i].get(j)
    }

    pub fn try_mul(&self, a: &SparseVec, b: &SparseVec) -> Option<SparseVec> {
        if a.is_zero() || b.is_zero() {
            return Some(SparseVec::new());
        }
        if self.fdeg(a) + self.fdeg(b) > self.degree {
            return None;
        }
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled_assign(&(x * y), &self.table[i][j]);
            }
        }
        Some(out)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> Result<SparseVec> {
        self.try_mul(a, b).ok_or_else(|| {
            Error::Dimension(format!(
                "product of filtration degrees {} and {} exceeds truncation degree {}",
                self.fdeg(a),
                self.fdeg(b),
                self.degree
            ))
        })
    }

    /// Class of a word of length at most the degree.
    pub fn reduce_word(&self, w: &Word) -> Result<SparseVec> {
        if w.len() > self.degree {
            return Err(Error::Dimension(format!(
                "word of length {} above degree {}",
                w.len(),
                self.degree
            )));
        }
        let mut acc = self.unit.clone();
        for &x in w.letters() {
            let g = self
                .generators
                .get(x)
                .ok_or_else(|| Error::Input(format!("unknown generator {x}")))?;
            acc = self.mul(&acc, g)?;
        }
        Ok(acc)
    }

    pub fn reduce_poly(&self, p: &NCPoly) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            out.add_scaled_assign(c, &self.reduce_word(w)?);
        }
        Ok(out)
    }

    /// The projection from the truncated tensor algebra onto classes.
    pub fn reduce_map(&self) -> Result<LinearMap> {
        let t = TruncTensorAlgebra::new(self.names.clone(), self.degree);
        let cols = t
            .words()
            .iter()
            .map(|w| self.reduce_word(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearMap::from_columns(self.dim(), cols))
    }

    /// First basis triple (by index) at which associativity fails, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = self.basis[i].len() + self.basis[j].len() + self.basis[k].len();
                    if d > self.degree {
                        continue;
                    }
                    let (a, b, c) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let lhs = self.mul(&self.mul(&a, &b).unwrap(), &c).unwrap();
                    let rhs = self.mul(&a, &self.mul(&b, &c).unwrap()).unwrap();
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Basis of `sub` adapted to the filtration, as `(fdeg, vector)` pairs with
    /// increasing filtration degree.
    pub fn filtration_basis(&self, sub: &Subspace) -> Vec<(usize, SparseVec)> {
        let mut out: Vec<(usize, SparseVec)> = sub
            .basis_by_priority(&self.priority())
            .into_iter()
            .map(|(lead, v)| (self.basis[lead].len(), v))
            .collect();
        out.sort_by_key(|(d, _)| *d);
        out
    }

    /// `sub ∩ F_d`.
    pub fn filtration_part(&self, sub: &Subspace, d: usize) -> Subspace {
        Subspace::span(
            self.dim(),
            self.filtration_basis(sub)
                .into_iter()
                .filter(|(e, _)| *e <= d)
                .map(|(_, v)| v)
                .collect::<Vec<_>>(),
        )
    }

    /// Quotient by a two-sided ideal `ideal` (given as a subspace of classes). The new basis consists
    /// of the old basis words not chosen as pivots, where longer and then lexicographically smaller
    /// words are preferred as pivots; the returned map is the projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(TruncQuotAlgebra, LinearMap)> {
        if ideal.ambient() != self.dim() {
            return Err(Error::Dimension("ideal lives in a different space".into()));
        }
        let qb = ideal.quotient_basis_by_priority(&self.priority());
        let proj = qb.projection;
        let keep = qb.complement;
        let basis: Vec<Word> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let prefix = prefix_dims(&basis, self.degree);
        let table = keep
            .iter()
            .map(|&i| {
                let limit = prefix[self.degree - self.basis[i].len()];
                keep[..limit]
                    .iter()
                    .map(|&j| proj.apply(&self.table[i][j]))
                    .collect()
            })
            .collect();
        let alg = TruncQuotAlgebra {
            names: self.names.clone(),
            degree: self.degree,
            basis,
            prefix,
            generators: self.generators.iter().map(|g| proj.apply(g)).collect(),
            unit: proj.apply(&self.unit),
            table,
            relations: self.relations.clone(),
            slack: self.slack,
            stabilized: self.stabilized,
        };
        Ok((alg, proj))
    }

    /// Truncation to a lower degree.
    pub fn truncate(&self, degree: usize) -> TruncQuotAlgebra {
        let degree = degree.min(self.degree);
        let nb = self.prefix[degree];
        let basis = self.basis[..nb].to_vec();
        let prefix = prefix_dims(&basis, degree);
        let table = (0..nb)
            .map(|i| self.table[i][..prefix[degree - basis[i].len()]].to_vec())
            .collect();
        TruncQuotAlgebra {
            names: self.names.clone(),
            degree,
            basis,
            prefix,
            generators: if degree == 0 {
                vec![SparseVec::new(); self.ngens()]
            } else {
                self.generators.clone()
            },
            unit: self.unit.clone(),
            table,
            relations: self.relations.clone(),
            slack: self.slack,
            stabilized: self.stabilized,
        }
    }
}

/// The algebra map `src → dst` determined by the images of the generators.
///
/// Checks that every defining relation of `src` is sent to zero and that the resulting
/// linear map is multiplicative on every recorded basis product.
pub fn induced_map(
    src: &TruncQuotAlgebra,
    dst: &TruncQuotAlgebra,
    images: &[SparseVec],
) -> Result<LinearMap> {
    if images.len() != src.ngens() {
        return Err(Error::Dimension(format!(
            "{} generator images for {} generators",
            images.len(),
            src.ngens()
        )));
    }
    if dst.degree() < src.degree() {
        return Err(Error::Dimension(
            "target truncated below source degree".into(),
        ));
    }
    for (x, im) in images.iter().enumerate() {
        if im.support_bound() > dst.dim() || dst.fdeg(im) > 1 {
            return Err(Error::Input(format!(
                "image of generator {} must have filtration degree at most 1",
                src.names()[x]
            )));
        }
    }
    let eval = |w: &Word| -> Result<SparseVec> {
        let mut acc = dst.unit().clone();
        for &x in w.letters() {
            acc = dst.mul(&acc, &images[x])?;
        }
        Ok(acc)
    };
    for r in src.relations() {
        let mut v = SparseVec::new();
        for (w, c) in r.terms() {
            v.add_scaled_assign(c, &eval(w)?);
        }
        if !v.is_zero() {
            return Err(Error::NotHomomorphism(format!(
                "relation {} is not sent to zero",
                r.render(src.names())
            )));
        }
    }
    let cols = src.basis().iter().map(&eval).collect::<Result<Vec<_>>>()?;
    let f = LinearMap::from_columns(dst.dim(), cols);
    for (x, g) in src.generators().iter().enumerate() {
        if f.apply(g) != images[x] {
            return Err(Error::NotHomomorphism(format!(
                "generator {} is not respected",
                src.names()[x]
            )));
        }
    }
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let Some(p) = src.basis_product(i, j) else {
                continue;
            };
            let lhs = f.apply(p);
            let rhs = dst.mul(f.column(i), f.column(j))?;
            if lhs != rhs {
                return Err(Error::NotHomomorphism(format!(
                    "product {} · {} is not respected",
                    src.basis()[i].render(src.names()),
                    src.basis()[j].render(src.names())
                )));
            }
        }
    }
    Ok(f)
}

/// Span of products of two subspaces, with the degree up to which it is certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpan {
    pub span: Subspace,
    pub boundary_degree: usize,
}

/// Span of `a·b` over filtration-adapted bases of `a_sub` and `b_sub` with total degree at most the truncation.
pub fn subspace_product(
    a_sub: &Subspace,
    b_sub: &Subspace,
    alg: &TruncQuotAlgebra,
) -> Result<ProductSpan> {
    if a_sub.ambient() != alg.dim() || b_sub.ambient() != alg.dim() {
        return Err(Error::Dimension(
            "subspaces must live in the algebra".into(),
        ));
    }
    let fa = alg.filtration_basis(a_sub);
    let fb = alg.filtration_basis(b_sub);
    let mut e = Echelon::new();
    for (da, va) in &fa {
        for (db, vb) in &fb {
            if da + db <= alg.degree() {
                e.insert(alg.mul(va, vb)?);
            }
        }
    }
    Ok(ProductSpan {
        span: Subspace::span(alg.dim(), e.into_rows()),
        boundary_degree: alg.degree().saturating_sub(1),
    })
}

/// A truncated two-sided ideal of the free algebra, as a subspace of the
/// degree-`≤ degree` coordinate space in canonical word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncIdeal {
    pub relations: Vec<NCPoly>,
    pub degree: usize,
    pub slack: usize,
    pub span: Subspace,
    pub stabilized: bool,
}

fn ideal_at(layers: &mut Layers, t: &TruncTensorAlgebra, n: usize) -> Subspace {
    let words = t.words();
    let qn = layers.dim(n);
    let cols = words.iter().map(|w| layers.class(w, n)).collect();
    LinearMap::from_columns(qn, cols).kernel()
}

/// The part of degree at most `degree` of the span of all `u·r·v` with total degree at most `degree + slack`.
pub fn ideal_span(
    names: &[String],
    relations: &[NCPoly],
    degree: usize,
    slack: usize,
) -> Result<TruncIdeal> {
    if let Some(r) = relations.iter().find(|r| r.degree() > degree) {
        return Err(Error::Input(format!(
            "relation of degree {} exceeds working degree {}",
            r.degree(),
            degree
        )));
    }
    let t = TruncTensorAlgebra::new(names.to_vec(), degree);
    let mut layers = Layers::new(names.len(), relations);
    let span = ideal_at(&mut layers, &t, degree + slack);
    let next = ideal_at(&mut layers, &t, degree + slack + 1);
    Ok(TruncIdeal {
        relations: relations.to_vec(),
        degree,
        slack,
        stabilized: next == span,
        span,
    })
}
