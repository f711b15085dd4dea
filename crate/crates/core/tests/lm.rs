mod common;

use common::*;
use crossmod::exact::{int, LinearMap, Rational, SparseVec, Subspace};
use crossmod::free::{induced_map, NCPoly, TruncQuotAlgebra, Word};
use crossmod::leibniz::{LeibnizAlgebra, LeibnizRep};
use crossmod::lm::{
    leibniz_to_lm, lm_algebra, lm_tensor, lm_xmod_envelope, theta_check, u_lm, xmod_to_lm,
    LMLieObject, LMObject,
};
use crossmod::verdict::Status;
use crossmod::xmod::LeibnizXMod;
use crossmod::xul::xul;
use crossmod::Error;
use proptest::prelude::*;

fn b_in_l2() -> LeibnizXMod {
    LeibnizXMod::ideal_inclusion(
        &l2(),
        &Subspace::span(2, [SparseVec::unit(1)]),
        "B",
        names(&["b'"]),
    )
    .unwrap()
}

fn obj(bottom: &[&str], top: &[&str], alpha: LinearMap) -> LMObject {
    LMObject::new(names(bottom), names(top), alpha).unwrap()
}

#[test]
fn tensor_products() {
    let one = obj(&["m"], &["g"], mat(&[&[1]]));
    let t = lm_tensor(&one, &one);
    assert_eq!(t.bottom.len(), 2);
    assert_eq!(t.alpha, mat(&[&[1, 1]]));

    // (0 → g) ⊗ (N → h): only g⊗N survives and the map is 1⊗β
    let x = obj(&[], &["g1", "g2"], LinearMap::zero(2, 0));
    let y = obj(&["n"], &["h"], mat(&[&[3]]));
    let t = lm_tensor(&x, &y);
    assert_eq!(t.bottom, names(&["g1⊗n", "g2⊗n"]));
    assert_eq!(t.alpha, mat(&[&[3, 0], &[0, 3]]));

    let t = lm_tensor(&one, &LMObject::zero());
    assert!(t.bottom.is_empty() && t.top.is_empty());
}

#[test]
fn leibniz_algebras_as_lie_objects() {
    let r = leibniz_to_lm(&r2()).unwrap();
    assert_eq!(r.alpha, LinearMap::identity(2));
    assert_eq!(r.g, r2().liezation().unwrap().lie);
    for i in 0..2 {
        let adj = LinearMap::from_columns(
            2,
            (0..2).map(|k| r2().basis_bracket(k, i).clone()).collect(),
        );
        assert_eq!(r.right[i], adj);
    }

    let l = leibniz_to_lm(&l2()).unwrap();
    assert_eq!(l.g.dim(), 1);
    assert_eq!(l.alpha, mat(&[&[1, 0]]));
    // a·ā = b, b·ā = 0
    assert_eq!(l.right[0], mat(&[&[0, 0], &[1, 0]]));
    assert!(l.check().is_pass());
}

#[test]
fn crossed_modules_in_lm() {
    let z = xmod_to_lm(&LeibnizXMod::zero_on(&a1())).unwrap();
    assert_eq!(z.n.dim(), 0);
    assert_eq!(z.h().dim(), 0);
    for x in [
        LeibnizXMod::identity(&a1()),
        LeibnizXMod::identity(&l2()),
        b_in_l2(),
        LeibnizXMod::identity(&r2()),
    ] {
        let l = xmod_to_lm(&x).unwrap();
        let v = l.check();
        assert!(v.is_pass(), "{:?}", v.witnesses.first());
        assert!(v.checked > 0);
    }
}

#[test]
fn enveloping_object_of_a1() {
    let l = leibniz_to_lm(&a1()).unwrap();
    let u = u_lm(&l, 2, 1).unwrap();
    assert_eq!(u.bottom_dim(), 2);
    assert_eq!(u.top.dim(), 3);
    assert!(u.check().is_pass());
    let e = u.associated_algebra().unwrap();
    let p = lm_algebra(&l, 2, 1).unwrap();
    assert_eq!(e.filtration_dims(), p.alg.filtration_dims());
    assert_eq!(p.split_dims(2), vec![(0, 1), (1, 2), (2, 3)]);
}

/// `dim U(A1)_{≤D}` by counting monomials `x^k`, `k ≤ D`.
fn poly_dim(d: usize) -> usize {
    d + 1
}

#[test]
fn enveloping_object_dimensions() {
    let l = leibniz_to_lm(&a1()).unwrap();
    for d in 1..=4 {
        let u = u_lm(&l, d, 1).unwrap();
        assert_eq!(u.top.dim(), poly_dim(d));
        assert_eq!(u.bottom_dim(), poly_dim(d - 1));
        assert!(u.check().is_pass());
    }
    let zero = LMLieObject::new(
        LeibnizAlgebra::zero("0"),
        names(&["m", "n"]),
        LinearMap::zero(0, 2),
        vec![],
    )
    .unwrap();
    let u = u_lm(&zero, 3, 1).unwrap();
    assert_eq!((u.top.dim(), u.bottom_dim()), (1, 2));
    assert!(u.map.is_zero());
    let v = u.check();
    assert!(v.is_pass() && v.checked > 0);
}

#[test]
fn right_action_on_l2_object() {
    let u = u_lm(&leibniz_to_lm(&l2()).unwrap(), 2, 1).unwrap();
    // top basis 1, ā; bottom u_i⊗m_k at 2i + k with m = a, b
    assert_eq!(u.bottom_names(), names(&["1⊗a", "1⊗b", "a⊗a", "a⊗b"]));
    let abar = SparseVec::unit(0);
    assert_eq!(
        u.right_lie(&SparseVec::unit(0), &abar).unwrap(),
        vecq(&[0, 1, 1, 0])
    );
    assert_eq!(
        u.right_lie(&SparseVec::unit(1), &abar).unwrap(),
        vecq(&[0, 0, 0, 1])
    );
    assert!(u.right_lie(&SparseVec::unit(2), &abar).is_none());
    // α(1⊗a) = ā, α(1⊗b) = 0
    assert_eq!(u.map.column(0), &vecq(&[0, 1]));
    assert!(u.map.column(1).is_zero());
    assert!(u.check().is_pass());
}

/// `U(g)` from a relation list written out here, with `xy − yx − [x,y]` for every ordered pair.
fn direct_u(g: &LeibnizAlgebra, d: usize) -> TruncQuotAlgebra {
    let n = g.dim();
    let mut rels = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let mut r = NCPoly::monomial(Word(vec![x, y]), int(1));
            r.add_term(Word(vec![y, x]), int(-1));
            for (k, c) in g.basis_bracket(x, y).iter() {
                r.add_term(Word(vec![k]), -c.clone());
            }
            rels.push(r);
        }
    }
    TruncQuotAlgebra::presented(g.names().to_vec(), rels, d, 2).unwrap()
}

#[test]
fn top_of_enveloping_object_is_plain_enveloping_algebra() {
    for p in [a1(), l2(), r2()] {
        let l = leibniz_to_lm(&p).unwrap();
        let u = u_lm(&l, 3, 1).unwrap();
        let direct = direct_u(&l.g, 3);
        assert_eq!(u.top.filtration_dims(), direct.filtration_dims());
        let f = induced_map(&u.top, &direct, direct.generators()).unwrap();
        assert_eq!(f.rank(), direct.dim());
    }
}

/// The explicit and the presented associated algebra agree: same filtration, and the map
/// sending letters to letters is an isomorphism.
fn two_routes(l: &LMLieObject, d: usize) {
    let u = u_lm(l, d, 1).unwrap();
    assert!(u.check().is_pass());
    let explicit = u.associated_algebra().unwrap();
    let presented = lm_algebra(l, d, 1).unwrap();
    assert_eq!(explicit.filtration_dims(), presented.alg.filtration_dims());
    let f = induced_map(&presented.alg, &explicit, explicit.generators()).unwrap();
    assert_eq!(f.rank(), explicit.dim());
    let top: usize = u.top.dim();
    assert_eq!(presented.split_dims(d)[d], (u.bottom_dim(), top));
}

#[test]
fn associated_algebras_two_routes() {
    for p in [a1(), l2(), r2()] {
        two_routes(&leibniz_to_lm(&p).unwrap(), 3);
    }
    // (a, r)(a', r') = (α(a)a' + ar' + ra', rr') on the A1 object: (1⊗x)(1⊗x) = x⊗x
    let u = u_lm(&leibniz_to_lm(&a1()).unwrap(), 2, 1).unwrap();
    let e = u.associated_algebra().unwrap();
    let m = e.generator(1).clone();
    let mm = e.mul(&m, &m).unwrap();
    let xm = e.mul(e.generator(0), &m).unwrap();
    assert_eq!(mm, xm);
    assert_eq!(
        e.basis().iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        vec![vec![], vec![0], vec![1], vec![0, 0], vec![0, 1]]
    );
    assert!(e.associativity_failure().is_none());
}

#[test]
fn sign_of_left_letters() {
    // θ(x_l) = +(1⊗x) does not respect the relation y_r x_l + y_l x_l
    let x = LeibnizXMod::identity(&a1());
    let t = xul(&x, 3, 1, 1).unwrap();
    let y = lm_xmod_envelope(&xmod_to_lm(&x).unwrap(), 3, 1, 1).unwrap();
    let n = t.cat1.total.p.dim();
    let images = |sign: i64| -> Vec<SparseVec> {
        let left = (0..n).map(|k| {
            y.total
                .bottom_letter(&SparseVec::unit(k))
                .scaled(&int(sign))
        });
        let right = (0..n).map(|k| y.total.top_letter(y.total.object.alpha.column(k)));
        left.chain(right).collect()
    };
    assert!(induced_map(&t.cat1.total.carrier, &y.total.alg, &images(-1)).is_ok());
    assert!(matches!(
        induced_map(&t.cat1.total.carrier, &y.total.alg, &images(1)),
        Err(Error::NotHomomorphism(_))
    ));
}

#[test]
fn top_row_is_liezation_of_semidirect_product() {
    for x in [
        LeibnizXMod::identity(&a1()),
        LeibnizXMod::identity(&l2()),
        b_in_l2(),
        LeibnizXMod::zero_on(&l2()),
    ] {
        let l = xmod_to_lm(&x).unwrap();
        let lz = x.to_cat1().unwrap().total.liezation().unwrap();
        assert_eq!(l.h().dim() + l.g().dim(), lz.lie.dim());
        assert_eq!(l.semidirect().unwrap().g.dim(), lz.lie.dim());
    }
    // for Lie input the projections are identities
    let l = xmod_to_lm(&LeibnizXMod::identity(&r2())).unwrap();
    assert_eq!(l.n.alpha, LinearMap::identity(2));
    assert_eq!(l.m.alpha, LinearMap::identity(2));
    assert_eq!(l.rho1, LinearMap::identity(2));
}

#[test]
fn broken_lm_crossed_module_is_rejected() {
    let mut l = xmod_to_lm(&LeibnizXMod::identity(&a1())).unwrap();
    assert!(l.check().is_pass());
    l.xi[0] = mat(&[&[1]]);
    l.n.right[0] = mat(&[&[1]]);
    let v = l.check();
    assert!(!v.is_pass());
    match lm_xmod_envelope(&l, 3, 1, 1) {
        Err(Error::Axiom { stage, .. }) => assert_eq!(stage, "check_lm_xmod"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn envelope_with_zero_bottom_row() {
    let l = xmod_to_lm(&LeibnizXMod::zero_on(&a1())).unwrap();
    let y = lm_xmod_envelope(&l, 4, 2, 2).unwrap();
    assert_eq!(y.kernel_dims(2), vec![(0, 0); 3]);
    assert!(y.b.is_zero());
    let u = u_lm(&l.m, 4, 2).unwrap();
    assert_eq!(y.base.split_dims(4)[4], (u.bottom_dim(), u.top.dim()));
    assert_eq!(
        y.ambient.filtration_dims(),
        u.associated_algebra().unwrap().filtration_dims()
    );
    let v = y.check();
    assert!(v.is_pass(), "{:?}", v.witnesses.first());

    let zero = xmod_to_lm(&LeibnizXMod::zero_on(&LeibnizAlgebra::zero("0"))).unwrap();
    let y = lm_xmod_envelope(&zero, 2, 1, 0).unwrap();
    assert_eq!(y.associated_xmod().ambient.dim(), 1);
    assert!(y.associated_xmod().b.is_zero());
    assert!(y.check().is_pass());
}

#[test]
fn envelope_of_identity_on_a1() {
    let l = xmod_to_lm(&LeibnizXMod::identity(&a1())).unwrap();
    let y = lm_xmod_envelope(&l, 4, 2, 1).unwrap();
    let v = y.check_lm();
    assert!(v.is_pass(), "{:?}", v.witnesses.first());
    assert!(v.checked > 0);
    let v = y.check_ideals();
    assert!(v.is_pass(), "{:?}", v.witnesses.first());
    assert!(v.checked > 2);
    assert!(y.associated_xmod().check().is_pass());
    // Ker Ū(s₁), Ker Ū(s₂) in degree 1: 1⊗n and h
    assert_eq!(y.kernel_dims(1), vec![(0, 0), (1, 1)]);
    let (ys, xs) = y.ideal_parts();
    assert!(!ys.is_zero() && !xs.is_zero());
    let c = y.certificate().unwrap();
    assert!(c.is_stable(), "{c:?}");
}

#[test]
fn theta_on_abelian_base() {
    let x = LeibnizXMod::zero_on(&a1());
    let (th, r) = theta_check(&x, 4, 2, 2).unwrap();
    assert_eq!(
        r.status(),
        Status::Pass,
        "{:?}",
        r.verdict.witnesses.first()
    );
    // UL(A1) in degree ≤ 2 is 5-dimensional: 3 from U(g) and 2 from U(g)⊗p
    assert_eq!(th.xul.ambient_dims(2)[2], 5);
    assert_eq!(th.lm.base.split_dims(2)[2], (poly_dim(1), poly_dim(2)));
    assert_eq!(th.lm.ambient.filtration_dim(2), 5);
    assert_eq!(
        th.quotient.apply(th.xul.ambient.unit()),
        *th.lm.ambient.unit()
    );
}

#[test]
fn theta_on_identity_of_a1() {
    let x = LeibnizXMod::identity(&a1());
    let (th, r) = theta_check(&x, 3, 2, 1).unwrap();
    assert_eq!(
        r.status(),
        Status::Pass,
        "{:?}",
        r.verdict.witnesses.first()
    );
    let n = th.xul.ambient.filtration_dim(1);
    assert_eq!(n, 5);
    let cols: Vec<SparseVec> = (0..n).map(|i| th.quotient.column(i).clone()).collect();
    assert_eq!(LinearMap::from_columns(th.lm.ambient.dim(), cols).rank(), n);
    // θ sends every basis vector of 𝒳 into 𝒳' + 𝒴'
    assert!(th
        .xul
        .x_ideal
        .basis()
        .iter()
        .all(|b| th.lm.x_ideal.contains(&th.total.apply(b))));
}

#[test]
fn theta_on_corpus() {
    let corpus = [
        (LeibnizXMod::zero_on(&a1()), 4, 2),
        (LeibnizXMod::zero_on(&l2()), 3, 1),
        (LeibnizXMod::identity(&a1()), 4, 2),
        (LeibnizXMod::identity(&l2()), 3, 1),
        (b_in_l2(), 3, 1),
        (b_in_l2(), 4, 2),
    ];
    for (x, deg, d) in corpus {
        let (_, r) = theta_check(&x, deg, 2, d).unwrap();
        assert_eq!(
            r.status(),
            Status::Pass,
            "{:?} {:?}",
            r.verdict.witnesses.first(),
            r.certificate
        );
        assert!(r.verdict.checked > 0);
    }
}

fn small(n: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(-1i64..=1, n * n).prop_map(move |xs| {
        let rows: Vec<Vec<_>> = xs
            .chunks(n)
            .map(|c| c.iter().map(|&x| int(x)).collect())
            .collect();
        LinearMap::from_dense(n, n, &rows)
    })
}

fn rect(r: usize, c: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(-2i64..=2, r * c).prop_map(move |xs| {
        let rows: Vec<Vec<_>> = (0..r)
            .map(|i| (0..c).map(|j| int(xs[i * c + j])).collect())
            .collect();
        LinearMap::from_dense(r, c, &rows)
    })
}

fn object() -> impl Strategy<Value = LMObject> {
    (0usize..=3, 0usize..=3).prop_flat_map(|(m, g)| {
        rect(g, m).prop_map(move |a| {
            LMObject::new(
                (0..m).map(|i| format!("m{i}")).collect(),
                (0..g).map(|i| format!("g{i}")).collect(),
                a,
            )
            .unwrap()
        })
    })
}

/// A right module over `A1`, symmetrized or made antisymmetric.
fn valid_leibniz() -> impl Strategy<Value = LeibnizAlgebra> {
    (small(2), any::<bool>()).prop_map(|(r, sym)| {
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

/// Kronecker product of dense matrices.
fn kron(a: &LinearMap, b: &LinearMap) -> Vec<Vec<Rational>> {
    let (da, db) = (a.to_dense(), b.to_dense());
    let mut out = vec![vec![int(0); a.cols() * b.cols()]; a.rows() * b.rows()];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[i * b.rows() + k][j * b.cols() + l] = &da[i][j] * &db[k][l];
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tensor_matches_kronecker(x in object(), y in object()) {
        let t = lm_tensor(&x, &y);
        let (m, g, n, h) = (x.bottom.len(), x.top.len(), y.bottom.len(), y.top.len());
        prop_assert_eq!(t.bottom.len(), m * h + g * n);
        prop_assert_eq!(t.top.len(), g * h);
        let left = kron(&x.alpha, &LinearMap::identity(h));
        let right = kron(&LinearMap::identity(g), &y.alpha);
        let dense = t.alpha.to_dense();
        for r in 0..g * h {
            for c in 0..m * h {
                prop_assert_eq!(&dense[r][c], &left[r][c]);
            }
            for c in 0..g * n {
                prop_assert_eq!(&dense[r][m * h + c], &right[r][c]);
            }
        }
    }

    #[test]
    fn random_lie_objects_two_routes(p in valid_leibniz()) {
        let l = leibniz_to_lm(&p).unwrap();
        prop_assert!(l.check().is_pass());
        two_routes(&l, 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn theta_on_random_abelian_crossed_modules(p in valid_leibniz()) {
        let (_, r) = theta_check(&LeibnizXMod::zero_on(&p), 3, 1, 1).unwrap();
        prop_assert!(r.verdict.is_pass(), "{:?}", r.verdict.witnesses.first());
    }
}
