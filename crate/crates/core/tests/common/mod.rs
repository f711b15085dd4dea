#![allow(dead_code)]

use crossmod::exact::{int, Echelon, LinearMap, Rational, SparseVec, Subspace};
use crossmod::free::{words_up_to, NCPoly, TruncTensorAlgebra};
use crossmod::leibniz::LeibnizAlgebra;

pub fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn vecq(xs: &[i64]) -> SparseVec {
    SparseVec::from_dense(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>())
}

pub fn mat(rows: &[&[i64]]) -> LinearMap {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    let dense: Vec<Vec<Rational>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| int(x)).collect())
        .collect();
    LinearMap::from_dense(r, c, &dense)
}

/// One-dimensional abelian.
pub fn a1() -> LeibnizAlgebra {
    LeibnizAlgebra::abelian("A1", names(&["x"]))
}

/// `[a,a] = b`.
pub fn l2() -> LeibnizAlgebra {
    LeibnizAlgebra::new("L2", names(&["a", "b"]), vec![(0, 0, SparseVec::unit(1))]).unwrap()
}

/// The non-abelian two-dimensional Lie algebra: `[x,y] = x`.
pub fn r2() -> LeibnizAlgebra {
    LeibnizAlgebra::new(
        "R2",
        names(&["x", "y"]),
        vec![(0, 1, vecq(&[1, 0])), (1, 0, vecq(&[-1, 0]))],
    )
    .unwrap()
}

/// `[e,e] = e`, which is not Leibniz.
pub fn ee() -> LeibnizAlgebra {
    LeibnizAlgebra::new("E", names(&["e"]), vec![(0, 0, SparseVec::unit(0))]).unwrap()
}

/// Brute force: span every u·r·v inside T_{≤n}, then keep the part of degree at most d.
pub fn oracle_ideal(g: usize, relations: &[NCPoly], d: usize, n: usize) -> Subspace {
    let big = TruncTensorAlgebra::new((0..g).map(|i| format!("g{i}")).collect(), n);
    let words = words_up_to(g, n);
    let mut e = Echelon::new();
    for r in relations {
        for u in &words {
            if u.len() + r.degree() > n {
                continue;
            }
            let ur = NCPoly::monomial(u.clone(), int(1)).mul(r);
            for v in &words {
                if u.len() + r.degree() + v.len() > n {
                    continue;
                }
                e.insert(
                    big.coordinates(&ur.mul(&NCPoly::monomial(v.clone(), int(1))))
                        .unwrap(),
                );
            }
        }
    }
    let low = TruncTensorAlgebra::new(big.names().to_vec(), d).dim();
    let whole = Subspace::span(big.dim(), e.into_rows());
    let bottom = Subspace::span(big.dim(), (0..low).map(SparseVec::unit).collect::<Vec<_>>());
    let cut = whole.intersect(&bottom).unwrap();
    Subspace::span(low, cut.basis().to_vec())
}

/// Brute-force dimension of the truncated quotient `T_{≤d} / (W_n ∩ T_{≤d})`.
pub fn oracle_quotient_dim(g: usize, relations: &[NCPoly], d: usize, n: usize) -> usize {
    let t = TruncTensorAlgebra::new((0..g).map(|i| format!("g{i}")).collect(), d);
    t.dim() - oracle_ideal(g, relations, d, n).dim()
}
