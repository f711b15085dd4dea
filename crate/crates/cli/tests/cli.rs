use std::path::{Path, PathBuf};
use std::process::Command;

use crossmod::exact::{LinearMap, Rational, SparseVec};
use crossmod::leibniz::{LeibnizAlgebra, LeibnizRep};
use crossmod::xmod::LeibnizXMod;
use crossmod_cli::commands::{self, Degrees, Theorem};
use crossmod_cli::format::{dump, load_file, parse, to_json, Loader, Object};
use crossmod_cli::report::Status;
use proptest::prelude::*;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn corpus_files() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(corpus(""))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_crossmod"))
        .args(args)
        .current_dir(corpus(""))
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn files_round_trip() {
    let mut loaded = 0;
    for p in corpus_files() {
        let Ok(obj) = Loader::load(&p) else { continue };
        let text = to_json(&dump(&obj));
        let again = load_file(&parse(&text).unwrap(), Path::new(".")).unwrap();
        assert_eq!(again, obj, "{}", p.display());
        assert_eq!(to_json(&dump(&again)), text);
        loaded += 1;
    }
    assert!(loaded >= 25);
}

#[test]
fn check_exit_codes() {
    let cases = [
        ("l2.json", 0),
        ("a1.json", 0),
        ("e_idempotent.json", 1),
        ("bad_rational.json", 2),
        ("rep_a1_right.json", 0),
        ("rep_a1_bad.json", 1),
        ("id_l2.json", 0),
        ("b_in_l2.json", 0),
        ("bad_eta_l2.json", 1),
        ("id_nil2.json", 0),
        ("xrep_right.json", 0),
        ("xrep_mu0.json", 1),
        ("module_right.json", 0),
    ];
    for (f, code) in cases {
        let r = commands::check(&corpus(f), None);
        assert_eq!(r.exit_code, code, "{f}: {:?}", r.witnesses.first());
        if code == 1 {
            assert!(!r.witnesses.is_empty());
        }
    }
    let r = commands::check(&corpus("e_idempotent.json"), None);
    assert_eq!(r.witnesses[0].tuple, ["e", "e", "e"]);
    assert_eq!(
        (r.witnesses[0].lhs.as_str(), r.witnesses[0].rhs.as_str()),
        ("e", "2*e")
    );
    let r = commands::check(&corpus("xrep_mu0.json"), None);
    assert_eq!(r.witnesses[0].identity, "LbM1a");
    assert_eq!(
        commands::check(&corpus("l2.json"), Some("leibniz_xmod")).exit_code,
        2
    );
    assert_eq!(commands::check(&corpus("missing.json"), None).exit_code, 2);
}

#[test]
fn malformed_files_are_input_errors() {
    let dir = std::env::temp_dir().join(format!("crossmod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        r#"{"kind":"leibniz_algebra","name":"X","dim":2,"basis":["a"],"entries":[]}"#,
        r#"{"kind":"leibniz_algebra","name":"X","dim":1,"basis":["a"],"entries":[{"left":"a","right":"z","value":{}}]}"#,
        r#"{"kind":"leibniz_algebra","name":"X","dim":1,"basis":["a"],"entries":[{"left":"a","right":"a","value":{"a":"2/4"}}]}"#,
        r#"{"kind":"leibniz_algebra","name":"X","dim":2,"basis":["a","a"]}"#,
        r#"{"kind":"lie_algebra","name":"X","dim":0,"basis":[]}"#,
        r#"{"kind":"leibniz_xmod","q":{"path":"nowhere.json"},"p":{"path":"nowhere.json"},"eta":{}}"#,
        r#"{"kind":"leibniz_xmod","q":{"path":"a.json"},"p":{"path":"a.json"},"eta":{"a":{"b":"1"}}}"#,
        "not json",
    ];
    std::fs::write(
        dir.join("a.json"),
        r#"{"kind":"leibniz_algebra","name":"A","dim":1,"basis":["a"]}"#,
    )
    .unwrap();
    for (i, text) in cases.iter().enumerate() {
        let p = dir.join(format!("case{i}.json"));
        std::fs::write(&p, text).unwrap();
        let r = commands::check(&p, None);
        assert_eq!(r.exit_code, 2, "case {i}: {:?}", r.error);
        assert!(r.error.is_some());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ul_of_a1() {
    let r = commands::ul_cmd(&corpus("a1.json"), Degrees::new(3, 2, None), true);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.dimensions[0].by_degree, vec![1, 3, 5, 7]);
    assert_eq!(r.bases[0].elements.len(), 7);
    assert!(r.certificates[0].stable);
}

#[test]
fn xul_of_identity_on_a1() {
    let r = commands::xul_cmd(&corpus("id_a1.json"), Degrees::new(4, 2, Some(2)), false);
    assert_eq!(r.status, Status::Pass);
    let dims = |name: &str| {
        r.dimensions
            .iter()
            .find(|d| d.name == name)
            .unwrap()
            .by_degree
            .clone()
    };
    // B is the augmentation ideal of UL(A1): one less than dim UL(A1)_{≤2} = 5
    assert_eq!(dims("B"), vec![0, 2, 4]);
    assert_eq!(dims("UL(p)"), vec![1, 3, 5]);
    assert!(r.certificates[0].stable);
}

#[test]
fn xul_rejects_non_crossed_module() {
    let r = commands::xul_cmd(
        &corpus("bad_eta_l2.json"),
        Degrees::new(3, 2, Some(1)),
        false,
    );
    assert_eq!(r.exit_code, 1);
    assert_eq!(r.stage.as_deref(), Some("check_xmod"));
    assert!(!r.witnesses.is_empty());
    let r = commands::xul_cmd(&corpus("id_a1.json"), Degrees::new(3, 2, Some(2)), false);
    assert_eq!(r.exit_code, 2);
}

#[test]
fn lm_reports() {
    let r = commands::lm_cmd(&corpus("a1.json"), Degrees::new(2, 1, None), false);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.dimensions[0].by_degree, vec![1, 2, 3]);
    assert_eq!(r.dimensions[1].by_degree, vec![0, 1, 2]);
    let r = commands::lm_cmd(&corpus("id_a1.json"), Degrees::new(3, 2, Some(1)), true);
    assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses.first());
    // the dumped basis of B covers the working degree: dim UL(A1)_{≤3} − 1
    assert_eq!(r.bases[1].elements.len(), 6);
    assert_eq!(
        commands::lm_cmd(
            &corpus("rep_a1_right.json"),
            Degrees::new(3, 2, None),
            false
        )
        .exit_code,
        2
    );
}

#[test]
fn verify_suites() {
    let cases = [
        (Theorem::Lemma41, "id_a1.json", 3, Some(2)),
        (Theorem::Prop42, "a1.json", 4, Some(2)),
        (Theorem::Squares, "l2.json", 3, Some(1)),
        (Theorem::Thm5, "xrep_right.json", 3, Some(1)),
        (Theorem::Thm5, "xrep_tautological_l2.json", 3, Some(1)),
        (Theorem::Thm5, "module_right.json", 0, None),
        (Theorem::Theta, "zero_a1.json", 4, Some(2)),
    ];
    for (t, f, d, rd) in cases {
        let r = commands::verify(t, &corpus(f), Degrees::new(d, 2, rd));
        assert_eq!(
            r.status,
            Status::Pass,
            "{} {f}: {:?} {:?}",
            t.name(),
            r.witnesses.first(),
            r.error
        );
        assert!(r.checked > 0);
        assert!(!r.certificates.is_empty());
    }
    let r = commands::verify(
        Theorem::Thm5,
        &corpus("xrep_mu0.json"),
        Degrees::new(3, 2, Some(1)),
    );
    assert_eq!(r.exit_code, 1);
    assert_eq!(r.stage.as_deref(), Some("check_xmod_rep"));
    assert_eq!(
        commands::verify(
            Theorem::Prop42,
            &corpus("id_a1.json"),
            Degrees::new(4, 2, Some(2))
        )
        .exit_code,
        2
    );
}

#[test]
fn module_files_reload() {
    let text =
        commands::module_file(&corpus("xrep_right.json"), Degrees::new(3, 2, Some(1))).unwrap();
    let m = load_file(&parse(&text).unwrap(), Path::new(".")).unwrap();
    let Object::Module(m) = m else {
        panic!("not a module")
    };
    assert!(m.check().is_pass());
    let on_disk = Loader::load(&corpus("module_right.json")).unwrap();
    assert_eq!(Object::Module(m), on_disk);
}

#[test]
fn binary_exit_codes_and_determinism() {
    assert_eq!(bin(&["check", "l2.json"]).0, 0);
    assert_eq!(bin(&["check", "e_idempotent.json"]).0, 1);
    assert_eq!(bin(&["check", "bad_rational.json"]).0, 2);
    let (code, out) = bin(&["ul", "a1.json", "--degree", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimensions"][0]["by_degree"][3], 7);
    assert_eq!(v["status"], "pass");
    let (code, out) = bin(&[
        "xul",
        "bad_eta_l2.json",
        "-D",
        "3",
        "-d",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["stage"], "check_xmod");
    let args = [
        "verify",
        "theta",
        "id_a1.json",
        "-D",
        "3",
        "-d",
        "1",
        "--format",
        "json",
    ];
    let first = bin(&args);
    assert_eq!(first.0, 0);
    assert_eq!(bin(&args), first);
    let dumped = bin(&["dump", "id_l2.json"]);
    assert_eq!(dumped.0, 0);
    assert_eq!(
        load_file(&parse(&dumped.1).unwrap(), Path::new(".")).unwrap(),
        Loader::load(&corpus("id_l2.json")).unwrap()
    );
}

fn small(n: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec((-3i64..=3, 1i64..=3), n * n).prop_map(move |xs| {
        let rows: Vec<Vec<Rational>> = xs
            .chunks(n)
            .map(|c| {
                c.iter()
                    .map(|&(a, b)| Rational::new(a.into(), b.into()))
                    .collect()
            })
            .collect();
        LinearMap::from_dense(n, n, &rows)
    })
}

/// Split extensions of right `A1`-modules, which are always Leibniz algebras.
fn leibniz() -> impl Strategy<Value = LeibnizAlgebra> {
    small(2).prop_map(|r| {
        let a1 = LeibnizAlgebra::abelian("A1", vec!["x".into()]);
        LeibnizRep::new(
            a1,
            vec!["u".into(), "v".into()],
            vec![LinearMap::zero(2, 2)],
            vec![r],
        )
        .unwrap()
        .split_extension()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_algebras_round_trip(p in leibniz()) {
        for obj in [Object::Leibniz(p.clone()), Object::XMod(LeibnizXMod::identity(&p)), Object::XMod(LeibnizXMod::zero_on(&p))] {
            let text = to_json(&dump(&obj));
            let back = load_file(&parse(&text).unwrap(), Path::new(".")).unwrap();
            prop_assert_eq!(&back, &obj);
            prop_assert_eq!(to_json(&dump(&back)), text);
        }
    }

    #[test]
    fn rationals_survive_files(a in -50i64..50, b in 1i64..50) {
        let q = Rational::new(a.into(), b.into());
        let p = LeibnizAlgebra::new("Q", vec!["e".into()], vec![(0, 0, SparseVec::single(0, q.clone()))]).unwrap();
        let back = load_file(&parse(&to_json(&dump(&Object::Leibniz(p)))).unwrap(), Path::new(".")).unwrap();
        let Object::Leibniz(back) = back else { panic!() };
        prop_assert_eq!(back.basis_bracket(0, 0).get(0), q);
    }
}
