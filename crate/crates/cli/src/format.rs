//! JSON file formats. Scalars are rational strings (`"n"` or `"n/d"` in lowest terms); vectors
//! and maps are sparse, keyed by basis names, with omitted entries zero.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use crossmod::envelope::extend_to_module;
use crossmod::exact::{format_rational, parse_rational, LinearMap, SparseVec};
use crossmod::leibniz::{LeibnizAction, LeibnizAlgebra, LeibnizRep};
use crossmod::verdict::render_vec;
use crossmod::xmod::{AssocAlgebra, AssocXMod, LeibnizXMod};
use crossmod::xrep::{AbelianXMod, LeibnizXModRep, XModLeftModule};
use crossmod::xul::xul;
use crossmod::{Error, Result};
use serde::{Deserialize, Serialize};

/// A vector: basis name to coefficient.
pub type Vector = BTreeMap<String, String>;
/// A linear map: source basis name to image vector.
pub type Map = BTreeMap<String, Vector>;

/// One value of a bilinear table: `f(left, right) = value`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub left: String,
    pub right: String,
    pub value: Vector,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBody {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RepBody {
    pub algebra: Ref,
    pub module: Vec<String>,
    /// `[p, m]`.
    #[serde(default)]
    pub left: Vec<Entry>,
    /// `[m, p]`.
    #[serde(default)]
    pub right: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct XModBody {
    pub q: Ref,
    pub p: Ref,
    pub eta: Map,
    /// `[p, q]`.
    #[serde(default)]
    pub left: Vec<Entry>,
    /// `[q, p]`.
    #[serde(default)]
    pub right: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AssocXModBody {
    pub b: Ref,
    pub a: Ref,
    pub rho: Map,
    /// `a b`.
    #[serde(default)]
    pub left: Vec<Entry>,
    /// `b a`.
    #[serde(default)]
    pub right: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Actions {
    #[serde(default)]
    pub left: Vec<Entry>,
    #[serde(default)]
    pub right: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct XModRepBody {
    pub xmod: Ref,
    pub n: Vec<String>,
    pub m: Vec<String>,
    pub mu: Map,
    pub on_n: Actions,
    pub on_m: Actions,
    /// `ξ₁(q, m)`.
    #[serde(default)]
    pub xi1: Vec<Entry>,
    /// `ξ₂(m, q)`.
    #[serde(default)]
    pub xi2: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ModuleBody {
    pub xmod: Ref,
    pub degree: usize,
    pub slack: usize,
    pub report_degree: usize,
    pub n: Vec<String>,
    pub m: Vec<String>,
    pub mu: Map,
    /// `ψ` on `N` and `M`, keyed by generators of `UL(p)`.
    pub psi_n: BTreeMap<String, Map>,
    pub psi_m: BTreeMap<String, Map>,
    /// `φ: M → N`, keyed by the labels of the basis of `B`.
    pub phi: BTreeMap<String, Map>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum File {
    LeibnizAlgebra(AlgebraBody),
    AssocAlgebra(AlgebraBody),
    LeibnizRep(RepBody),
    LeibnizXmod(XModBody),
    AssocXmod(AssocXModBody),
    XmodRep(XModRepBody),
    XmodModule(ModuleBody),
}

/// A nested file, inline or by a path relative to the referring file.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum Ref {
    Path { path: String },
    Inline(Box<File>),
}

/// A loaded object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Leibniz(LeibnizAlgebra),
    Assoc(AssocAlgebra),
    Rep(LeibnizRep),
    XMod(LeibnizXMod),
    AssocXMod(AssocXMod),
    XModRep(LeibnizXModRep),
    Module(Box<XModLeftModule>),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Leibniz(_) => "leibniz_algebra",
            Object::Assoc(_) => "assoc_algebra",
            Object::Rep(_) => "leibniz_rep",
            Object::XMod(_) => "leibniz_xmod",
            Object::AssocXMod(_) => "assoc_xmod",
            Object::XModRep(_) => "xmod_rep",
            Object::Module(_) => "xmod_module",
        }
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn index(names: &[String]) -> Result<HashMap<&str, usize>> {
    let mut out = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.as_str(), i).is_some() {
            return Err(parse_err(format!("duplicate basis name {n:?}")));
        }
    }
    Ok(out)
}

fn lookup(idx: &HashMap<&str, usize>, name: &str, what: &str) -> Result<usize> {
    idx.get(name)
        .copied()
        .ok_or_else(|| parse_err(format!("unknown {what} basis element {name:?}")))
}

fn read_vector(v: &Vector, names: &[String], what: &str) -> Result<SparseVec> {
    let idx = index(names)?;
    let mut pairs = Vec::with_capacity(v.len());
    for (k, c) in v {
        pairs.push((lookup(&idx, k, what)?, parse_rational(c)?));
    }
    Ok(SparseVec::from_pairs(pairs))
}

fn write_vector(v: &SparseVec, names: &[String]) -> Vector {
    v.iter()
        .map(|(i, c)| (names[i].clone(), format_rational(c)))
        .collect()
}

fn read_map(m: &Map, src: &[String], dst: &[String], what: &str) -> Result<LinearMap> {
    let idx = index(src)?;
    let mut cols = vec![SparseVec::new(); src.len()];
    for (k, v) in m {
        cols[lookup(&idx, k, what)?] = read_vector(v, dst, what)?;
    }
    Ok(LinearMap::from_columns(dst.len(), cols))
}

fn write_map(f: &LinearMap, src: &[String], dst: &[String]) -> Map {
    (0..f.cols())
        .filter(|&j| !f.column(j).is_zero())
        .map(|j| (src[j].clone(), write_vector(f.column(j), dst)))
        .collect()
}

/// `table[i][j] = f(left_i, right_j)`.
fn read_table(
    entries: &[Entry],
    left: &[String],
    right: &[String],
    value: &[String],
    what: &str,
) -> Result<Vec<Vec<SparseVec>>> {
    let (li, ri) = (index(left)?, index(right)?);
    let mut table = vec![vec![SparseVec::new(); right.len()]; left.len()];
    let mut seen = vec![vec![false; right.len()]; left.len()];
    for e in entries {
        let (i, j) = (lookup(&li, &e.left, what)?, lookup(&ri, &e.right, what)?);
        if std::mem::replace(&mut seen[i][j], true) {
            return Err(parse_err(format!(
                "{what}: duplicate entry ({}, {})",
                e.left, e.right
            )));
        }
        table[i][j] = read_vector(&e.value, value, what)?;
    }
    Ok(table)
}

fn write_table(
    table: &[Vec<SparseVec>],
    left: &[String],
    right: &[String],
    value: &[String],
) -> Vec<Entry> {
    let mut out = Vec::new();
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                out.push(Entry {
                    left: left[i].clone(),
                    right: right[j].clone(),
                    value: write_vector(v, value),
                });
            }
        }
    }
    out
}

/// Per-row operators from a table: `ops[i]` sends `right_j` to `table[i][j]`.
fn rows_as_maps(table: &[Vec<SparseVec>], dim: usize) -> Vec<LinearMap> {
    table
        .iter()
        .map(|row| LinearMap::from_columns(dim, row.clone()))
        .collect()
}

/// Per-column operators: `ops[j]` sends `left_i` to `table[i][j]`.
fn cols_as_maps(table: &[Vec<SparseVec>], ncols: usize, dim: usize) -> Vec<LinearMap> {
    (0..ncols)
        .map(|j| LinearMap::from_columns(dim, table.iter().map(|row| row[j].clone()).collect()))
        .collect()
}

fn maps_as_rows(ops: &[LinearMap]) -> Vec<Vec<SparseVec>> {
    ops.iter().map(|f| f.columns().to_vec()).collect()
}

fn maps_as_cols(ops: &[LinearMap], nrows: usize) -> Vec<Vec<SparseVec>> {
    (0..nrows)
        .map(|i| ops.iter().map(|f| f.column(i).clone()).collect())
        .collect()
}

fn transpose_table(t: &[Vec<SparseVec>], ncols: usize) -> Vec<Vec<SparseVec>> {
    (0..ncols)
        .map(|j| t.iter().map(|row| row[j].clone()).collect())
        .collect()
}

fn check_dim(body: &AlgebraBody) -> Result<()> {
    if body.dim != body.basis.len() {
        return Err(Error::Dimension(format!(
            "{}: dim {} but {} basis names",
            body.name,
            body.dim,
            body.basis.len()
        )));
    }
    index(&body.basis).map(|_| ())
}

/// Reads files and resolves references relative to the referring file.
pub struct Loader;

impl Loader {
    pub fn read(path: &Path) -> Result<File> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn load(path: &Path) -> Result<Object> {
        let file = Self::read(path)?;
        load_file(&file, path.parent().unwrap_or(Path::new(".")))
    }
}

pub fn parse(text: &str) -> Result<File> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

fn resolve(r: &Ref, dir: &Path) -> Result<(File, PathBuf)> {
    match r {
        Ref::Inline(f) => Ok(((**f).clone(), dir.to_path_buf())),
        Ref::Path { path } => {
            let p = dir.join(path);
            let f = Loader::read(&p)?;
            Ok((f, p.parent().unwrap_or(Path::new(".")).to_path_buf()))
        }
    }
}

fn load_ref(r: &Ref, dir: &Path) -> Result<Object> {
    let (f, d) = resolve(r, dir)?;
    load_file(&f, &d)
}

fn leibniz_ref(r: &Ref, dir: &Path) -> Result<LeibnizAlgebra> {
    match load_ref(r, dir)? {
        Object::Leibniz(a) => Ok(a),
        other => Err(Error::Input(format!(
            "expected a leibniz_algebra, found {}",
            other.kind()
        ))),
    }
}

fn assoc_ref(r: &Ref, dir: &Path) -> Result<AssocAlgebra> {
    match load_ref(r, dir)? {
        Object::Assoc(a) => Ok(a),
        other => Err(Error::Input(format!(
            "expected an assoc_algebra, found {}",
            other.kind()
        ))),
    }
}

fn xmod_ref(r: &Ref, dir: &Path) -> Result<LeibnizXMod> {
    match load_ref(r, dir)? {
        Object::XMod(x) => Ok(x),
        other => Err(Error::Input(format!(
            "expected a leibniz_xmod, found {}",
            other.kind()
        ))),
    }
}

fn read_rep(
    p: &LeibnizAlgebra,
    module: &[String],
    acts: &Actions,
    what: &str,
) -> Result<LeibnizRep> {
    let left = read_table(&acts.left, p.names(), module, module, what)?;
    let right = read_table(&acts.right, module, p.names(), module, what)?;
    LeibnizRep::new(
        p.clone(),
        module.to_vec(),
        rows_as_maps(&left, module.len()),
        cols_as_maps(&right, p.dim(), module.len()),
    )
}

fn write_rep(r: &LeibnizRep) -> Actions {
    let (p, m) = (r.algebra.names(), r.names());
    let left: Vec<LinearMap> = (0..r.algebra.dim()).map(|i| r.left(i).clone()).collect();
    let right: Vec<LinearMap> = (0..r.algebra.dim()).map(|i| r.right(i).clone()).collect();
    Actions {
        left: write_table(&maps_as_rows(&left), p, m, m),
        right: write_table(&maps_as_cols(&right, m.len()), m, p, m),
    }
}

pub fn load_file(file: &File, dir: &Path) -> Result<Object> {
    match file {
        File::LeibnizAlgebra(b) => {
            check_dim(b)?;
            let t = read_table(&b.entries, &b.basis, &b.basis, &b.basis, &b.name)?;
            Ok(Object::Leibniz(LeibnizAlgebra::from_table(
                &b.name,
                b.basis.clone(),
                t,
            )?))
        }
        File::AssocAlgebra(b) => {
            check_dim(b)?;
            let t = read_table(&b.entries, &b.basis, &b.basis, &b.basis, &b.name)?;
            Ok(Object::Assoc(AssocAlgebra::from_table(
                &b.name,
                b.basis.clone(),
                t,
            )?))
        }
        File::LeibnizRep(r) => {
            let p = leibniz_ref(&r.algebra, dir)?;
            index(&r.module)?;
            let acts = Actions {
                left: r.left.clone(),
                right: r.right.clone(),
            };
            Ok(Object::Rep(read_rep(
                &p,
                &r.module,
                &acts,
                "representation",
            )?))
        }
        File::LeibnizXmod(x) => {
            let (q, p) = (leibniz_ref(&x.q, dir)?, leibniz_ref(&x.p, dir)?);
            let eta = read_map(&x.eta, q.names(), p.names(), "eta")?;
            let left = read_table(&x.left, p.names(), q.names(), q.names(), "action")?;
            let right = read_table(&x.right, q.names(), p.names(), q.names(), "action")?;
            Ok(Object::XMod(LeibnizXMod::new(
                eta,
                LeibnizAction::new(p, q, left, right)?,
            )?))
        }
        File::AssocXmod(x) => {
            let (b, a) = (assoc_ref(&x.b, dir)?, assoc_ref(&x.a, dir)?);
            let rho = read_map(&x.rho, b.names(), a.names(), "rho")?;
            let left = read_table(&x.left, a.names(), b.names(), b.names(), "action")?;
            let right = read_table(&x.right, b.names(), a.names(), b.names(), "action")?;
            Ok(Object::AssocXMod(AssocXMod::new(b, a, rho, left, right)?))
        }
        File::XmodRep(r) => {
            let x = xmod_ref(&r.xmod, dir)?;
            let abelian =
                AbelianXMod::new(r.n.clone(), r.m.clone(), read_map(&r.mu, &r.n, &r.m, "mu")?)?;
            let on_n = read_rep(x.p(), &r.n, &r.on_n, "action on N")?;
            let on_m = read_rep(x.p(), &r.m, &r.on_m, "action on M")?;
            let qn = x.q().names();
            let xi1 = read_table(&r.xi1, qn, &r.m, &r.n, "xi1")?;
            let xi2 = read_table(&r.xi2, &r.m, qn, &r.n, "xi2")?;
            let xi1 = rows_as_maps(&xi1, r.n.len());
            let xi2 = cols_as_maps(&xi2, qn.len(), r.n.len());
            Ok(Object::XModRep(LeibnizXModRep::new(
                x, abelian, on_n, on_m, xi1, xi2,
            )?))
        }
        File::XmodModule(m) => {
            let x = xmod_ref(&m.xmod, dir)?;
            let u = xul(&x, m.degree, m.slack, m.report_degree)?;
            let target =
                AbelianXMod::new(m.n.clone(), m.m.clone(), read_map(&m.mu, &m.n, &m.m, "mu")?)?;
            let alg = &u.a().carrier;
            let gens = |psi: &BTreeMap<String, Map>,
                        names: &[String],
                        what: &str|
             -> Result<Vec<LinearMap>> {
                let idx = index(alg.names())?;
                let mut out = vec![LinearMap::zero(names.len(), names.len()); alg.ngens()];
                for (g, f) in psi {
                    out[lookup(&idx, g, what)?] = read_map(f, names, names, what)?;
                }
                Ok(out)
            };
            let psi_v = extend_to_module(alg, m.n.clone(), &gens(&m.psi_n, &m.n, "psi_n")?)?;
            let psi_w = extend_to_module(alg, m.m.clone(), &gens(&m.psi_m, &m.m, "psi_m")?)?;
            let labels = b_labels(&u);
            let idx = index(&labels)?;
            let mut phi = vec![LinearMap::zero(m.n.len(), m.m.len()); labels.len()];
            for (k, f) in &m.phi {
                phi[lookup(&idx, k, "B")?] = read_map(f, &m.m, &m.n, "phi")?;
            }
            Ok(Object::Module(Box::new(XModLeftModule {
                source: u,
                target,
                phi,
                psi_v,
                psi_w,
            })))
        }
    }
}

/// Labels of the basis of `B`, as linear combinations of class-basis words.
pub fn b_labels(u: &crossmod::xul::QuotientXMod) -> Vec<String> {
    let names: Vec<String> = u
        .ambient
        .basis()
        .iter()
        .map(|w| w.render(u.ambient.names()))
        .collect();
    u.b_basis
        .iter()
        .map(|(_, b)| render_vec(b, &names))
        .collect()
}

fn algebra_body(name: &str, names: &[String], table: Vec<Vec<SparseVec>>) -> AlgebraBody {
    AlgebraBody {
        name: name.to_string(),
        dim: names.len(),
        basis: names.to_vec(),
        entries: write_table(&table, names, names, names),
    }
}

fn leibniz_file(a: &LeibnizAlgebra) -> File {
    let n = a.dim();
    let table = (0..n)
        .map(|i| (0..n).map(|j| a.basis_bracket(i, j).clone()).collect())
        .collect();
    File::LeibnizAlgebra(algebra_body(a.name(), a.names(), table))
}

fn assoc_file(a: &AssocAlgebra) -> File {
    let n = a.dim();
    let table = (0..n)
        .map(|i| (0..n).map(|j| a.basis_product(i, j).clone()).collect())
        .collect();
    File::AssocAlgebra(algebra_body(a.name(), a.names(), table))
}

fn inline(f: File) -> Ref {
    Ref::Inline(Box::new(f))
}

fn xmod_body(x: &LeibnizXMod) -> XModBody {
    let (q, p) = (x.q(), x.p());
    XModBody {
        q: inline(leibniz_file(q)),
        p: inline(leibniz_file(p)),
        eta: write_map(&x.eta, q.names(), p.names()),
        left: write_table(x.action.left_table(), p.names(), q.names(), q.names()),
        right: write_table(x.action.right_table(), q.names(), p.names(), q.names()),
    }
}

/// The canonical file of an object, with every reference inlined.
pub fn dump(obj: &Object) -> File {
    match obj {
        Object::Leibniz(a) => leibniz_file(a),
        Object::Assoc(a) => assoc_file(a),
        Object::Rep(r) => {
            let acts = write_rep(r);
            File::LeibnizRep(RepBody {
                algebra: inline(leibniz_file(&r.algebra)),
                module: r.names().to_vec(),
                left: acts.left,
                right: acts.right,
            })
        }
        Object::XMod(x) => File::LeibnizXmod(xmod_body(x)),
        Object::AssocXMod(x) => File::AssocXmod(AssocXModBody {
            b: inline(assoc_file(&x.b)),
            a: inline(assoc_file(&x.a)),
            rho: write_map(&x.rho, x.b.names(), x.a.names()),
            left: write_table(x.left_table(), x.a.names(), x.b.names(), x.b.names()),
            right: write_table(x.right_table(), x.b.names(), x.a.names(), x.b.names()),
        }),
        Object::XModRep(r) => {
            let (n, m) = (&r.abelian.bottom, &r.abelian.top);
            let qn = r.xmod.q().names();
            let xi1 = maps_as_rows(&r.xi1);
            let xi2 = transpose_table(&maps_as_rows(&r.xi2), m.len());
            File::XmodRep(XModRepBody {
                xmod: inline(File::LeibnizXmod(xmod_body(&r.xmod))),
                n: n.clone(),
                m: m.clone(),
                mu: write_map(&r.abelian.map, n, m),
                on_n: write_rep(&r.on_n),
                on_m: write_rep(&r.on_m),
                xi1: write_table(&xi1, qn, m, n),
                xi2: write_table(&xi2, m, qn, n),
            })
        }
        Object::Module(md) => {
            let u = &md.source;
            let (n, m) = (&md.target.bottom, &md.target.top);
            let alg = &u.a().carrier;
            let psi = |module: &crossmod::envelope::ULModule,
                       names: &[String]|
             -> BTreeMap<String, Map> {
                (0..alg.ngens())
                    .map(|g| {
                        (
                            alg.names()[g].clone(),
                            write_map(&module.psi_of(alg.generator(g)), names, names),
                        )
                    })
                    .filter(|(_, f)| !f.is_empty())
                    .collect()
            };
            let labels = b_labels(u);
            File::XmodModule(ModuleBody {
                xmod: inline(File::LeibnizXmod(xmod_body(&u.cat1.xmod))),
                degree: u.degree(),
                slack: u.slack(),
                report_degree: u.report_degree,
                n: n.clone(),
                m: m.clone(),
                mu: write_map(&md.target.map, n, m),
                psi_n: psi(&md.psi_v, n),
                psi_m: psi(&md.psi_w, m),
                phi: md
                    .phi
                    .iter()
                    .zip(&labels)
                    .map(|(f, l)| (l.clone(), write_map(f, m, n)))
                    .filter(|(_, f)| !f.is_empty())
                    .collect(),
            })
        }
    }
}

pub fn to_json(file: &File) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("files serialize");
    s.push('\n');
    s
}
