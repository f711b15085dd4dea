mod common;

use common::*;
use crossmod::exact::{int, LinearMap, SparseVec, Subspace};
use crossmod::leibniz::{LeibnizAction, LeibnizAlgebra, LeibnizRep};
use proptest::prelude::*;

#[test]
fn leibniz_identity_on_small_algebras() {
    assert!(a1().check_leibniz().is_pass());
    assert!(l2().check_leibniz().is_pass());
    assert!(r2().check_lie().is_pass());
    let v = ee().check_leibniz();
    assert_eq!(v.witnesses.len(), 1);
    let w = &v.witnesses[0];
    assert_eq!(w.tuple, ["e", "e", "e"]);
    assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("e", "2*e"));
}

#[test]
fn liezation_examples() {
    let r = r2().liezation().unwrap();
    assert_eq!(r.lie, r2().renamed("Liez(R2)"));
    assert_eq!(r.projection.to_dense(), LinearMap::identity(2).to_dense());
    let l = l2().liezation().unwrap();
    assert_eq!(l.lie.dim(), 1);
    assert!(l.lie.is_abelian());
    assert_eq!(l.ideal, Subspace::span(2, vec![SparseVec::unit(1)]));
    assert_eq!(l.projection.kernel(), l.ideal);
    let a = a1().liezation().unwrap();
    assert_eq!(a.lie.dim(), 1);
    assert!(a.lie.is_abelian());
}

#[test]
fn actions() {
    assert!(LeibnizAction::zero(l2(), r2()).check_action().is_pass());
    let ideal = Subspace::span(2, vec![SparseVec::unit(1)]);
    let (incl, act) = LeibnizAction::on_ideal(&l2(), &ideal, "B", names(&["b"])).unwrap();
    assert_eq!(incl.rank(), 1);
    assert!(act.check_action().is_pass());
    let bad = LeibnizAction::new(
        a1(),
        a1().with_names(names(&["q"])),
        vec![vec![SparseVec::unit(0)]],
        vec![vec![SparseVec::unit(0)]],
    )
    .unwrap();
    let v = bad.check_action();
    assert!(!v.is_pass());
    let w = v
        .witnesses
        .iter()
        .find(|w| w.identity == "action (ppq)")
        .expect("pattern (p,p,q) fails");
    assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("0", "2*q"));
    assert!(bad.semidirect().is_err());
}

#[test]
fn semidirect_products() {
    let direct = LeibnizAction::zero(l2(), a1()).semidirect().unwrap();
    assert_eq!(direct, a1().direct_sum(&l2(), "A1⋊L2"));
    let adj = LeibnizAction::adjoint(&l2()).semidirect().unwrap();
    assert_eq!(adj.dim(), 4);
    assert!(adj.check_leibniz().is_pass());
    let trivial = LeibnizAction::zero(l2(), LeibnizAlgebra::zero("0"))
        .semidirect()
        .unwrap();
    assert_eq!(trivial.renamed("L2"), l2());
}

fn a1_rep(lambda: i64, rho: i64) -> LeibnizRep {
    LeibnizRep::new(
        a1(),
        names(&["m"]),
        vec![mat(&[&[lambda]])],
        vec![mat(&[&[rho]])],
    )
    .unwrap()
}

#[test]
fn representation_axioms() {
    assert!(LeibnizRep::zero(l2(), names(&["u", "v"]))
        .check_rep()
        .is_pass());
    assert!(a1_rep(0, 1).check_rep().is_pass());
    let bad = a1_rep(1, 1).check_rep();
    assert_eq!(bad.witnesses.len(), 1);
    assert_eq!(bad.witnesses[0].identity, "rep (p,p,m)");
    assert!(LeibnizRep::adjoint(&l2()).check_rep().is_pass());
    assert!(LeibnizRep::adjoint(&r2()).check_rep().is_pass());
}

#[test]
fn split_extension_round_trip() {
    let rep = LeibnizRep::adjoint(&r2());
    let ext = rep.split_extension();
    assert!(ext.check_leibniz().is_pass());
    let back = LeibnizRep::from_split_extension(&ext, 2, r2())
        .unwrap()
        .with_names(names(&["x", "y"]));
    assert_eq!(back, rep);
}

fn small_matrix(n: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(-1i64..=1, n * n).prop_map(move |xs| {
        let rows: Vec<Vec<_>> = xs
            .chunks(n)
            .map(|c| c.iter().map(|&x| int(x)).collect())
            .collect();
        LinearMap::from_dense(n, n, &rows)
    })
}

fn random_rep() -> impl Strategy<Value = LeibnizRep> {
    (prop_oneof![Just(a1()), Just(l2()), Just(r2())], 1usize..=2).prop_flat_map(|(p, m)| {
        let n = p.dim();
        (
            prop::collection::vec(small_matrix(m), n),
            prop::collection::vec(small_matrix(m), n),
        )
            .prop_map(move |(l, r)| {
                LeibnizRep::new(p.clone(), (0..m).map(|k| format!("m{k}")).collect(), l, r).unwrap()
            })
    })
}

/// A right module over an abelian algebra, symmetrized or made antisymmetric.
fn valid_leibniz() -> impl Strategy<Value = LeibnizAlgebra> {
    (small_matrix(2), any::<bool>()).prop_map(|(r, sym)| {
        let left = if sym {
            r.scaled(&int(-1))
        } else {
            LinearMap::zero(2, 2)
        };
        LeibnizRep::new(a1(), names(&["u", "v"]), vec![left], vec![r])
            .unwrap()
            .split_extension()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rep_iff_split_extension_is_leibniz(rep in random_rep()) {
        prop_assert_eq!(rep.check_rep().is_pass(), rep.split_extension().check_leibniz().is_pass());
    }

    #[test]
    fn left_bracket_with_squares_vanishes(alg in valid_leibniz()) {
        prop_assert!(alg.check_leibniz().is_pass());
        for x in 0..alg.dim() {
            let sq = alg.basis_bracket(x, x).clone();
            for m in 0..alg.dim() {
                prop_assert!(alg.bracket(&SparseVec::unit(m), &sq).is_zero());
            }
        }
    }

    #[test]
    fn liezation_is_lie(alg in valid_leibniz()) {
        let l = alg.liezation().unwrap();
        prop_assert!(l.lie.check_lie().is_pass());
        prop_assert!(alg.check_morphism(&l.projection, &l.lie).is_pass());
        prop_assert_eq!(l.projection.rank(), l.lie.dim());
    }
}
