use qhalg::algebra::build_algebra;
use qhalg::fixtures;
use qhalg::formats::*;
use qhalg::modules::{is_isomorphic, IsoConfig, Module};
use qhalg::Error;

const NAMES: &[&str] = &[
    "schur_a2",
    "schur_a3",
    "example_eg",
    "pp_a2",
    "pp_a3",
    "aus_trunc_2",
    "aus_trunc_3",
    "cex_auslander",
    "kq_a3",
    "semisimple_3",
    "trunc_3",
];

#[test]
fn algebra_files_round_trip() {
    for name in NAMES {
        let p = fixtures::presentation(name).unwrap();
        let f = AlgebraFile::from_presentation(&p);
        let text = f.to_json();
        let back = AlgebraFile::parse(&text).unwrap();
        assert_eq!(back, f, "{name}");
        assert_eq!(back.to_presentation().unwrap(), p, "{name}");
        assert_eq!(back.digest(), f.digest());
    }
}

#[test]
fn algebra_file_errors() {
    let bad = r#"{"name":"x","vertices":["1"],"arrows":[],"relations":[],"extra":1}"#;
    assert!(matches!(AlgebraFile::parse(bad), Err(Error::Parse(_))));
    let bad = r#"{"name":"x","vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
                  "relations":[[{"coeff":"1/0","path":["a"]}]]}"#;
    assert!(AlgebraFile::parse(bad).unwrap().to_presentation().is_err());
    let ok = r#"{"name":"x","vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}"#;
    let p = AlgebraFile::parse(ok).unwrap().to_presentation().unwrap();
    assert_eq!(build_algebra(&p, 8).unwrap().dim(), 3);
}

#[test]
fn module_files_round_trip() {
    let p = fixtures::presentation("example_eg").unwrap();
    let f = AlgebraFile::from_presentation(&p);
    let a = build_algebra(&p, 16).unwrap();
    for v in 0..3 {
        let m = Module::projective(a.clone(), v);
        let mf = ModuleFile::from_module(&f, &m).unwrap();
        let back = ModuleFile::parse(&mf.to_json()).unwrap().to_module(&f, &a).unwrap();
        assert!(is_isomorphic(&m, &back, &IsoConfig::default()));
    }
    let other = AlgebraFile::from_presentation(&fixtures::presentation("kq_a3").unwrap());
    let mf = ModuleFile::from_module(&f, &Module::simple(a.clone(), 0)).unwrap();
    assert!(mf.to_module(&other, &a).is_err());
}

#[test]
fn dot_output() {
    let dot = to_dot(&fixtures::presentation("pp_a3").unwrap());
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 4);
    let nodes = dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("->")).count();
    assert_eq!(nodes, 3);
    assert!(dot.contains("/* relations:"));
}
