mod common;

use std::process::{Command, Output};

use serde_json::Value;

use common::data;

fn orbcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbcoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

fn json(args: &[&str]) -> Value {
    let out = orbcoh(args);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    })
}

#[test]
fn sectors_json_for_lens_space() {
    let v = json(&["sectors", &path("s3_mod_z3.toml"), "--format", "json"]);
    let sectors = v["sectors"].as_array().unwrap();
    let iotas: Vec<&str> = sectors
        .iter()
        .map(|s| s["iota"].as_str().unwrap())
        .collect();
    assert_eq!(iotas, ["0", "1/3", "2/3"]);
    assert_eq!(sectors[1]["model"], "S^1");
    let ranks: Vec<(String, u64)> = v["multisectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| (m["labels"].to_string(), m["rank_e"].as_u64().unwrap()))
        .collect();
    assert!(ranks.contains(&(r#"["1","1","1"]"#.into(), 0)));
    assert!(ranks.contains(&(r#"["2","2","2"]"#.into(), 2)));
}

#[test]
fn sectors_json_for_weighted_example() {
    let v = json(&[
        "sectors",
        &path("wps_122333_circle.json"),
        "--format",
        "json",
    ]);
    let rows: Vec<(String, String, String)> = v["sectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            (
                s["label"].as_str().unwrap().into(),
                s["model"].as_str().unwrap().into(),
                s["iota"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert!(rows.contains(&("1/3".into(), "P(3,3,3) x S^1".into(), "5/3".into())));
    assert!(rows.contains(&("2/3".into(), "P(3,3,3) x S^1".into(), "4/3".into())));
    assert!(rows.contains(&("1/2".into(), "P(2,2) x S^1".into(), "2".into())));
}

#[test]
fn cohomology_series() {
    let v = json(&["cohomology", &path("s3_mod_z3.json"), "--format", "json"]);
    assert_eq!(
        v["poincare_polynomial"],
        "1 + t^{2/3} + t^{4/3} + t^{5/3} + t^{7/3} + t^3"
    );
    let table = String::from_utf8(orbcoh(&["cohomology", &path("s3_mod_z3.toml")]).stdout).unwrap();
    assert!(table.contains("1 + t^{2/3} + t^{4/3} + t^{5/3} + t^{7/3} + t^3"));
}

#[test]
fn table_and_json_agree_on_sectors() {
    for input in [
        "s3_mod_z3.toml",
        "wps_122333_circle.toml",
        "s3_mod_z3_raw.toml",
    ] {
        let v = json(&["sectors", &path(input), "--format", "json"]);
        let table = String::from_utf8(orbcoh(&["sectors", &path(input)]).stdout).unwrap();
        for s in v["sectors"].as_array().unwrap() {
            let label = s["label"].as_str().unwrap();
            let iota = s["iota"].as_str().unwrap();
            assert!(
                table.lines().any(|l| {
                    let cols: Vec<&str> = l.split_whitespace().collect();
                    cols.first() == Some(&label) && cols.contains(&iota)
                }),
                "{input}: no table row for sector {label} with shift {iota}"
            );
        }
    }
}

#[test]
fn toml_and_json_inputs_give_same_reports() {
    for stem in ["s3_mod_z3", "wps_122333_circle", "corrupted_raw"] {
        for command in ["sectors", "cohomology", "verify"] {
            let a = orbcoh(&[command, &path(&format!("{stem}.toml")), "--format", "json"]);
            let b = orbcoh(&[command, &path(&format!("{stem}.json")), "--format", "json"]);
            assert_eq!(a.stdout, b.stdout, "{stem} {command}");
            assert_eq!(a.status.code(), b.status.code());
        }
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| orbcoh(args).status.code().unwrap();
    assert_eq!(code(&["ring", &path("s3_mod_z3.toml")]), 0);
    assert_eq!(code(&["ring", &path("wps_122333_circle.toml")]), 5);
    assert_eq!(
        code(&[
            "ring",
            &path("wps_122333_circle.toml"),
            "--oracle",
            &path("wps_122333_oracle.toml")
        ]),
        0
    );
    assert_eq!(code(&["verify", &path("corrupted_raw.toml")]), 4);
    assert_eq!(code(&["verify", &path("wps_122333_circle.toml")]), 0);
    assert_eq!(code(&["sectors", &path("does_not_exist.toml")]), 1);
    assert_eq!(code(&["sectors"]), 2);
    assert_eq!(code(&["sectors", &path("s3.toml"), "--format", "yaml"]), 2);
}

#[test]
fn malformed_input_is_validation_error() {
    let dir = std::env::temp_dir().join(format!("orbcoh-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(
        &bad,
        "version = 1\nkind = \"wps_circle\"\nweights = [2, 4]\n",
    )
    .unwrap();
    let out = orbcoh(&["sectors", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("share the factor 2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ring_reports_missing_entries_and_template() {
    let v = json(&["ring", &path("wps_122333_circle.toml"), "--format", "json"]);
    let missing: Vec<(String, String)> = v["missing"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| {
            (
                m["multisector"].to_string(),
                m["monomial"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert_eq!(
        missing,
        [
            (r#"["1/3","1/3","1/3"]"#.to_string(), "1⊗s".to_string()),
            (r#"["2/3","2/3","2/3"]"#.to_string(), "h⊗s".to_string()),
        ]
    );
    let table =
        String::from_utf8(orbcoh(&["ring", &path("wps_122333_circle.toml")]).stdout).unwrap();
    assert!(table.contains("[[euler_oracle]]"));
}

#[test]
fn ring_products_of_lens_space() {
    let v = json(&["ring", &path("s3_mod_z3.toml"), "--format", "json"]);
    let find = |l: &str, r: &str| {
        v["products"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["left"] == l && p["right"] == r)
            .unwrap_or_else(|| panic!("no row {l} * {r}"))
            .clone()
    };
    assert_eq!(
        find("1@1", "1@1")["result"],
        serde_json::json!([["1@2", "1"]])
    );
    assert_eq!(find("1@1", "1@2")["result"], serde_json::json!([]));
    assert_eq!(
        find("1@1", "s@2")["result"],
        serde_json::json!([["v@0", "1"]])
    );
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("orbcoh-out-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("report.json");
    let direct = orbcoh(&["verify", &path("s3_mod_z3.toml"), "--format", "json"]);
    let written = orbcoh(&[
        "verify",
        &path("s3_mod_z3.toml"),
        "--format",
        "json",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(written.stdout.is_empty());
    assert_eq!(written.status.code(), direct.status.code());
    assert_eq!(std::fs::read(&target).unwrap(), direct.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_names_failures_on_tampered_atlas() {
    let v = json(&["verify", &path("corrupted_raw.toml"), "--format", "json"]);
    assert_eq!(v["passed"], false);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(
        failed.contains(&"poincare duality dimensions"),
        "{failed:?}"
    );
    assert!(failed.contains(&"shift-sum identity"), "{failed:?}");
}
