mod common;

use std::sync::OnceLock;

use common::*;
use crossmod::exact::{int, LinearMap, SparseVec, Subspace};
use crossmod::leibniz::LeibnizRep;
use crossmod::xmod::LeibnizXMod;
use crossmod::xrep::{
    check_xmod_rep, endo_xmod, rep_to_xmodule, xmodule_to_rep, AbelianXMod, LeibnizXModRep,
};
use crossmod::xul::{xul, TruncAssocXMod};
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

fn id_a1() -> LeibnizXMod {
    LeibnizXMod::identity(&a1())
}

fn line(mu: i64) -> AbelianXMod {
    AbelianXMod::new(names(&["n"]), names(&["m"]), mat(&[&[mu]])).unwrap()
}

fn a1_on(name: &str, lambda: i64, rho: i64) -> LeibnizRep {
    LeibnizRep::new(
        a1(),
        names(&[name]),
        vec![mat(&[&[lambda]])],
        vec![mat(&[&[rho]])],
    )
    .unwrap()
}

/// Over `(A1, A1, id)` on `N = M = K`: actions `λ`, `ρ` on both levels, `ξ₁ = x1`, `ξ₂ = x2`.
fn line_rep(mu: i64, lambda: i64, rho: i64, x1: i64, x2: i64) -> LeibnizXModRep {
    LeibnizXModRep::new(
        id_a1(),
        line(mu),
        a1_on("n", lambda, rho),
        a1_on("m", lambda, rho),
        vec![mat(&[&[x1]])],
        vec![mat(&[&[x2]])],
    )
    .unwrap()
}

/// `[m,a] = m`, `[a,m] = 0`, `ξ₂(m,a) = m`, `ξ₁ = 0`.
fn right_rep() -> LeibnizXModRep {
    line_rep(1, 0, 1, 0, 1)
}

/// Nonzero left actions: `[a,m] = m`, `[m,a] = -m`, `ξ₁(a,m) = m`, `ξ₂(m,a) = -m`.
fn symmetric_rep() -> LeibnizXModRep {
    line_rep(1, 1, -1, 1, -1)
}

fn xul_a1() -> &'static TruncAssocXMod {
    static U: OnceLock<TruncAssocXMod> = OnceLock::new();
    U.get_or_init(|| xul(&id_a1(), 4, 2, 2).unwrap())
}

#[test]
fn endomorphism_crossed_modules() {
    let zero = endo_xmod(&AbelianXMod::zero(vec![], vec![])).unwrap();
    assert_eq!((zero.xmod.b.dim(), zero.xmod.a.dim()), (0, 0));
    assert!(zero.check().is_pass());

    let id = endo_xmod(&line(1)).unwrap();
    assert_eq!((id.xmod.b.dim(), id.xmod.a.dim()), (1, 1));
    let (alpha, beta) = id.top_pair(0);
    assert_eq!(alpha, beta);
    assert_eq!(id.gamma(&mat(&[&[3]])), (mat(&[&[3]]), mat(&[&[3]])));
    assert!(id.contains_pair(&mat(&[&[2]]), &mat(&[&[2]])));
    assert!(!id.contains_pair(&mat(&[&[2]]), &mat(&[&[1]])));
    let v = id.check();
    assert!(v.is_pass() && v.checked > 0);

    let flat = endo_xmod(&AbelianXMod::zero(names(&["v"]), names(&["w1", "w2"]))).unwrap();
    assert_eq!(flat.xmod.a.dim(), 5);
    assert!(flat.xmod.rho.is_zero());
    assert!(flat.check().is_pass());

    // βδ = δα with δ = (1 0): β = α11, α12 = 0, α21 and α22 free.
    let proj =
        endo_xmod(&AbelianXMod::new(names(&["v1", "v2"]), names(&["w"]), mat(&[&[1, 0]])).unwrap())
            .unwrap();
    assert_eq!(proj.xmod.a.dim(), 3);
    assert!(proj.check().is_pass());
}

#[test]
fn fourteen_identities_on_examples() {
    let zero = LeibnizXModRep::zero(
        &id_a1(),
        &AbelianXMod::new(names(&["n1", "n2"]), names(&["m"]), mat(&[&[1, -1]])).unwrap(),
    );
    assert!(check_xmod_rep(&zero).is_pass());
    for x in [
        LeibnizXMod::identity(&l2()),
        b_in_l2(),
        LeibnizXMod::zero_on(&r2()),
    ] {
        let z = LeibnizXModRep::zero(&x, &AbelianXMod::zero(names(&["n"]), names(&["m1", "m2"])));
        assert!(check_xmod_rep(&z).is_pass());
    }

    let v = check_xmod_rep(&right_rep());
    assert!(v.is_pass(), "{:?}", v.witnesses.first());
    assert!(v.checked >= 14);
    assert!(check_xmod_rep(&symmetric_rep()).is_pass());

    let broken = line_rep(0, 0, 1, 0, 1);
    let v = check_xmod_rep(&broken);
    assert_eq!(v.first_identity(), Some("LbM1a"));
    let w = &v.witnesses[0];
    assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("0", "m"));
}

#[test]
fn tautological_representations_pass() {
    for x in [
        id_a1(),
        LeibnizXMod::identity(&l2()),
        LeibnizXMod::identity(&r2()),
        b_in_l2(),
        LeibnizXMod::zero_on(&l2()),
    ] {
        let r = LeibnizXModRep::tautological(&x).unwrap();
        let v = check_xmod_rep(&r);
        assert!(v.is_pass(), "{:?}", v.witnesses.first());
    }
}

#[test]
fn zero_representation_gives_zero_phi() {
    let u = xul(&id_a1(), 3, 1, 1).unwrap();
    let r = LeibnizXModRep::zero(&id_a1(), &line(1));
    let m = rep_to_xmodule(&r, &u).unwrap();
    assert!(m.phi.iter().all(LinearMap::is_zero));
    let base = &u.a().carrier;
    for (i, w) in base.basis().iter().enumerate() {
        let expect = if w.is_empty() {
            LinearMap::identity(1)
        } else {
            LinearMap::zero(1, 1)
        };
        assert_eq!(m.psi_of(&SparseVec::unit(i)), (expect.clone(), expect));
    }
    assert!(m.check().is_pass());
    assert_eq!(xmodule_to_rep(&m).unwrap(), r);
}

#[test]
fn degree_one_kernel_classes() {
    let u = xul(&id_a1(), 3, 1, 1).unwrap();
    let m = rep_to_xmodule(&right_rep(), &u).unwrap();
    // Ambient generators: (q,0)_l, (0,p)_l, (q,0)_r, (0,p)_r.
    let (q_l, q_r) = (u.ambient.generator(0), u.ambient.generator(2));
    assert_eq!(m.phi_of(q_r).unwrap(), mat(&[&[1]]));
    assert_eq!(m.phi_of(q_l).unwrap(), mat(&[&[0]]));
    assert!(m.phi_of(u.ambient.generator(3)).is_none());

    for b in u.b_part(1) {
        let (alpha, beta) = m.psi_of(&u.t_bar.apply(b));
        let phi = m.phi_of(b).unwrap();
        assert_eq!(alpha, phi.compose(&m.target.map).unwrap());
        assert_eq!(beta, m.target.map.compose(&phi).unwrap());
    }
    let v = m.check();
    assert!(v.is_pass() && v.checked > 0);
}

#[test]
fn failing_data_is_rejected() {
    let u = xul(&id_a1(), 3, 1, 1).unwrap();
    match rep_to_xmodule(&line_rep(0, 0, 1, 0, 1), &u) {
        Err(Error::Axiom { stage, detail }) => {
            assert_eq!(stage, "check_xmod_rep");
            assert!(detail.starts_with("LbM1a"));
        }
        other => panic!("unexpected {other:?}"),
    }
    let other = xul(&LeibnizXMod::zero_on(&a1()), 3, 1, 1).unwrap();
    assert!(matches!(
        rep_to_xmodule(&right_rep(), &other),
        Err(Error::Input(_))
    ));
}

fn round_trip(r: &LeibnizXModRep, u: &TruncAssocXMod) {
    let m = rep_to_xmodule(r, u).unwrap();
    let v = m.check();
    assert!(v.is_pass(), "{:?}", v.witnesses.first());
    let back = xmodule_to_rep(&m).unwrap();
    assert_eq!(&back, r);
    assert_eq!(rep_to_xmodule(&back, u).unwrap(), m);
}

#[test]
fn corpus_round_trips() {
    let u = xul_a1();
    for r in [
        right_rep(),
        symmetric_rep(),
        LeibnizXModRep::tautological(&id_a1()).unwrap(),
    ] {
        round_trip(&r, u);
    }
    for (x, deg, d) in [
        (LeibnizXMod::identity(&l2()), 3, 1),
        (b_in_l2(), 3, 1),
        (LeibnizXMod::zero_on(&a1()), 4, 2),
    ] {
        let u = xul(&x, deg, 1, d).unwrap();
        round_trip(&LeibnizXModRep::tautological(&x).unwrap(), &u);
        round_trip(&LeibnizXModRep::zero(&x, &line(1)), &u);
    }
}

#[test]
fn checkers_agree_on_perturbations() {
    let u = xul_a1();
    let good = rep_to_xmodule(&right_rep(), u).unwrap();
    for k in 0..good.phi.len() {
        let mut bad = good.clone();
        bad.phi[k] = bad.phi[k].add(&mat(&[&[1]])).unwrap();
        if bad.check().is_pass() {
            continue;
        }
        let recovered = xmodule_to_rep(&bad)
            .ok()
            .and_then(|r| rep_to_xmodule(&r, u).ok());
        assert_ne!(recovered.as_ref(), Some(&bad), "basis element {k}");
    }
    let mut bad = good.clone();
    bad.phi[0] = bad.phi[0].add(&mat(&[&[1]])).unwrap();
    assert!(!bad.check().is_pass());
}

#[test]
fn morphisms_correspond() {
    let u = xul_a1();
    let r = symmetric_rep();
    let m = rep_to_xmodule(&r, u).unwrap();
    let (cn, cm) = (mat(&[&[2]]), mat(&[&[-3]]));
    let other = r.conjugate(&cn, &cm).unwrap();
    assert!(check_xmod_rep(&other).is_pass());
    assert!(other.check_morphism(&cn, &cm, &r).is_pass());
    let mo = rep_to_xmodule(&other, u).unwrap();
    assert_eq!(mo, m.conjugate(&cn, &cm).unwrap());
    let v = mo.check_morphism(&cn, &cm, &m);
    assert!(v.is_pass() && v.checked > 0);

    let (zn, zm) = (mat(&[&[0]]), mat(&[&[0]]));
    assert!(r.check_morphism(&zn, &zm, &other).is_pass());
    assert!(m.check_morphism(&zn, &zm, &mo).is_pass());

    // Commutes with μ but not with ξ₂.
    let wrong = (mat(&[&[1]]), mat(&[&[1]]));
    let target = line_rep(1, 0, 1, 0, 1);
    assert!(!r.check_morphism(&wrong.0, &wrong.1, &target).is_pass());
    let mt = rep_to_xmodule(&target, u).unwrap();
    assert!(!m.check_morphism(&wrong.0, &wrong.1, &mt).is_pass());
}

/// All data over `(A1, A1, id)` on `N = M = K` with entries in `{-1, 0, 1}`, keeping the passing
/// ones with a nonzero left action on `M` and nonzero `ξ₁`.
fn lbm5_candidates() -> Vec<LeibnizXModRep> {
    let mut found = Vec::new();
    for code in 0..3usize.pow(7) {
        let digit = |k: u32| (code / 3usize.pow(k) % 3) as i64 - 1;
        let (mu, ln, rn, lm, rm, x1, x2) = (
            digit(0),
            digit(1),
            digit(2),
            digit(3),
            digit(4),
            digit(5),
            digit(6),
        );
        let on_n = LeibnizRep::new(
            a1(),
            names(&["n"]),
            vec![mat(&[&[ln]])],
            vec![mat(&[&[rn]])],
        )
        .unwrap();
        let on_m = LeibnizRep::new(
            a1(),
            names(&["m"]),
            vec![mat(&[&[lm]])],
            vec![mat(&[&[rm]])],
        )
        .unwrap();
        let r = LeibnizXModRep::new(
            id_a1(),
            line(mu),
            on_n,
            on_m,
            vec![mat(&[&[x1]])],
            vec![mat(&[&[x2]])],
        )
        .unwrap();
        if lm != 0 && x1 != 0 && check_xmod_rep(&r).is_pass() {
            found.push(r);
        }
    }
    found
}

#[test]
fn search_for_mixed_left_actions() {
    let found = lbm5_candidates();
    println!(
        "LbM5 search over (A1, A1, id), dim N = dim M = 1: {} examples with nonzero left action",
        found.len()
    );
    let u = xul_a1();
    for r in &found {
        round_trip(r, u);
    }
    assert!(found.contains(&symmetric_rep()));
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

fn unit_upper(n: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |xs| {
        let rows: Vec<Vec<_>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        int(if i == j {
                            1
                        } else if j > i {
                            xs[i * n + j]
                        } else {
                            0
                        })
                    })
                    .collect()
            })
            .collect();
        LinearMap::from_dense(n, n, &rows)
    })
}

/// Over `(A1, A1, id)` with `N = M = K²` and `μ` invertible, the identities force
/// `ξ₁ = μ⁻¹λ_M`, `ξ₂ = μ⁻¹ρ_M` and `N` the pull-back of `M` along `μ`; `M` is symmetric or
/// antisymmetric.
fn random_rep() -> impl Strategy<Value = LeibnizXModRep> {
    (
        small(2),
        any::<bool>(),
        unit_upper(2),
        unit_upper(2),
        unit_upper(2),
    )
        .prop_map(|(rho, sym, mu, cn, cm)| {
            let lambda = if sym {
                rho.scaled(&int(-1))
            } else {
                LinearMap::zero(2, 2)
            };
            let inv = mu.inverse().unwrap();
            let pull = |f: &LinearMap| inv.compose(&f.compose(&mu).unwrap()).unwrap();
            let on_m = LeibnizRep::new(
                a1(),
                names(&["m1", "m2"]),
                vec![lambda.clone()],
                vec![rho.clone()],
            )
            .unwrap();
            let on_n = LeibnizRep::new(
                a1(),
                names(&["n1", "n2"]),
                vec![pull(&lambda)],
                vec![pull(&rho)],
            )
            .unwrap();
            let abelian = AbelianXMod::new(names(&["n1", "n2"]), names(&["m1", "m2"]), mu).unwrap();
            let xi1 = inv.compose(&lambda).unwrap();
            let xi2 = inv.compose(&rho).unwrap();
            let r =
                LeibnizXModRep::new(id_a1(), abelian, on_n, on_m, vec![xi1], vec![xi2]).unwrap();
            r.conjugate(&cn, &cm).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_endomorphism_crossed_modules(nv in 0usize..=2, nw in 0usize..=2, xs in prop::collection::vec(-1i64..=1, 4)) {
        let rows: Vec<Vec<_>> = (0..nw).map(|i| (0..nv).map(|j| int(xs[i * 2 + j])).collect()).collect();
        let delta = LinearMap::from_dense(nw, nv, &rows);
        let bottom = (0..nv).map(|i| format!("v{i}")).collect();
        let top = (0..nw).map(|i| format!("w{i}")).collect();
        let e = endo_xmod(&AbelianXMod::new(bottom, top, delta).unwrap()).unwrap();
        prop_assert!(e.check().is_pass());
    }

    #[test]
    fn random_representations_round_trip(r in random_rep()) {
        prop_assert!(check_xmod_rep(&r).is_pass());
        let u = xul_a1();
        let m = rep_to_xmodule(&r, u).unwrap();
        prop_assert!(m.check().is_pass());
        let back = xmodule_to_rep(&m).unwrap();
        prop_assert_eq!(&back, &r);
    }

    #[test]
    fn random_modules_give_representations(r in random_rep(), cv in unit_upper(2), cw in unit_upper(2)) {
        let u = xul_a1();
        let m = rep_to_xmodule(&r, u).unwrap().conjugate(&cv, &cw).unwrap();
        prop_assert!(m.check().is_pass());
        let back = xmodule_to_rep(&m).unwrap();
        prop_assert!(check_xmod_rep(&back).is_pass());
        prop_assert_eq!(rep_to_xmodule(&back, u).unwrap(), m);
    }

    #[test]
    fn perturbed_representations(r in random_rep(), which in 0usize..2, i in 0usize..2, j in 0usize..2, c in prop_oneof![Just(-1i64), Just(1)]) {
        let mut bad = r.clone();
        let bump = LinearMap::from_dense(2, 2, &(0..2).map(|a| (0..2).map(|b| int(if (a, b) == (i, j) { c } else { 0 })).collect()).collect::<Vec<_>>());
        let slot = if which == 0 { &mut bad.xi1[0] } else { &mut bad.xi2[0] };
        *slot = slot.add(&bump).unwrap();
        let passes = check_xmod_rep(&bad).is_pass();
        let built = rep_to_xmodule(&bad, xul_a1());
        prop_assert_eq!(passes, built.is_ok());
        prop_assert!(!passes);
    }
}
