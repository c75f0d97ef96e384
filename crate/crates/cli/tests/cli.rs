use std::process::{Command, Output};

use serde_json::Value;

fn qhalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhalg"))
        .args(args)
        .env_remove("QH_SEED")
        .output()
        .expect("runs")
}

fn report(args: &[&str]) -> Value {
    let out = qhalg(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error(args: &[&str]) -> (i32, Value) {
    let out = qhalg(args);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    (out.status.code().unwrap(), v["error"].clone())
}

#[test]
fn chain_classifies_example_orders() {
    let r = report(&["chain", "--fixture", "example_eg", "--order", "1,2,3", "--kind", "right-strong"]);
    assert_eq!(r["command"], "chain");
    assert_eq!(r["result"]["heredity"], true);
    assert_eq!(r["result"]["right_strong"], true);
    assert_eq!(r["result"]["left_strong"], false);
    assert_eq!(r["result"]["kind"]["satisfied"], true);
    assert_eq!(r["result"]["agree"], true);

    let r = report(&["chain", "--fixture", "example_eg", "--order", "2,1,3"]);
    assert_eq!(r["result"]["agree"], true);
    assert_eq!(r["result"]["right_strong"], false);
    assert_eq!(r["result"]["left_strong"], true);
}

#[test]
fn chain_on_schur_algebra_agrees_with_subcategories() {
    for order in ["1,2,3", "3,2,1", "2,3,1"] {
        let r = report(&["chain", "--fixture", "schur_a3", "--order", order]);
        assert_eq!(r["result"]["agree"], true, "{order}");
        assert_eq!(r["result"]["right_strong"], false, "{order}");
    }
    let r = report(&["chain", "--fixture", "schur_a3", "--order", "1,2,3"]);
    assert_eq!(r["result"]["heredity"], true);
}

#[test]
fn search_on_counterexample_finds_nothing() {
    let r = report(&["search", "--fixture", "cex_auslander", "--kind", "strong"]);
    assert_eq!(r["result"]["examined"], 720);
    assert_eq!(r["result"]["count"], 0);
}

#[test]
fn gl2_builds_both_sides() {
    let r = report(&["gl2", "--fixture", "cex_auslander"]);
    assert_eq!(r["result"]["certificate"]["right_strong"], true);
    let r = report(&["gl2", "--fixture", "cex_auslander", "--left"]);
    assert_eq!(r["result"]["certificate"]["left_strong"], true);
    let (code, e) = error(&["gl2", "--fixture", "example_eg"]);
    assert_eq!(code, 3);
    assert_eq!(e["kind"], "global-dimension-too-large");
}

#[test]
fn dot_lists_arrows() {
    let out = qhalg(&["dot", "--fixture", "pp_a3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches(" -> ").count(), 4);
}

#[test]
fn input_errors_exit_2() {
    let (code, e) = error(&["chain", "--fixture", "example_eg", "--order", "1,9"]);
    assert_eq!(code, 2);
    assert_eq!(e["kind"], "unknown-vertex");
    let (code, _) = error(&["chain", "--fixture", "example_eg", "--order", "1,1,2"]);
    assert_eq!(code, 2);
    let (code, e) = error(&["info", "--fixture", "no_such_thing"]);
    assert_eq!(code, 2);
    assert_eq!(e["kind"], "unknown-fixture");
    let (code, _) = error(&["info", "--algebra", "/nonexistent.qalg.json"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_reproducible() {
    let args = ["auslander", "--fixture", "trunc_3"];
    assert_eq!(qhalg(&args).stdout, qhalg(&args).stdout);
    let r = report(&["info", "--fixture", "pp_a2", "--timing"]);
    assert!(r.get("timing_ms").is_some());
    let r = report(&["info", "--fixture", "pp_a2"]);
    assert!(r.get("timing_ms").is_none());
}

#[test]
fn seed_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qhalg"))
        .args(["info", "--fixture", "schur_a2"])
        .env("QH_SEED", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    let out = Command::new(env!("CARGO_BIN_EXE_qhalg"))
        .args(["info", "--fixture", "schur_a2"])
        .env("QH_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn info_reports_global_dimension() {
    for name in ["schur_a2", "cex_auslander"] {
        let r = report(&["info", "--fixture", name]);
        assert_eq!(r["result"]["global_dimension"]["kind"], "Finite", "{name}");
        assert_eq!(r["result"]["global_dimension"]["value"], 2, "{name}");
    }
    let r = report(&["info", "--fixture", "pp_a2"]);
    assert_eq!(r["result"]["dim"], 4);
    assert_eq!(r["result"]["global_dimension"]["kind"], "Infinite");
    assert_eq!(report(&["info", "--fixture", "schur_a2"])["result"]["dim"], 5);
}

#[test]
fn algebra_file_input() {
    let dir = std::env::temp_dir().join(format!("qhalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.qalg.json");
    std::fs::write(
        &path,
        r#"{"name":"a2","vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}"#,
    )
    .unwrap();
    let r = report(&["info", "--algebra", path.to_str().unwrap()]);
    assert_eq!(r["result"]["dim"], 3);
    let r = report(&["iyama", "--algebra", path.to_str().unwrap()]);
    assert_eq!(r["result"]["corner_recovery"], true);
    std::fs::remove_dir_all(&dir).ok();
}
