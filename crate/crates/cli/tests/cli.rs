use std::path::PathBuf;
use std::process::{Command, Output};

use partible_cli::ProfileJson;
use partible_core::ShiftOperator;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn partible(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partible"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn profile_examples() {
    let o = partible(&[
        "profile",
        "--operator",
        data("apery.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["d"], 3);
    assert_eq!(j["nondegenerate"], true);

    let j = json(&partible(&[
        "profile",
        "--operator",
        data("delannoy.json").to_str().unwrap(),
    ]));
    assert_eq!(j["d"], 1);
    assert_eq!(j["nondegenerate"], true);

    let j = json(&partible(&[
        "profile",
        "--operator",
        data("sigma-minus-1.json").to_str().unwrap(),
    ]));
    assert_eq!(j["roots"], serde_json::json!([0]));
    assert_eq!(j["nondegenerate"], false);
}

#[test]
fn profile_round_trip() {
    for file in [
        "apery.json",
        "apery_signed.json",
        "delannoy.json",
        "delannoy_z1.json",
        "sigma-minus-1.json",
    ] {
        let path = data(file);
        let o = partible(&["profile", "--operator", path.to_str().unwrap()]);
        let parsed: ProfileJson = serde_json::from_str(&stdout(&o)).unwrap();
        let op = ShiftOperator::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parsed.to_profile().unwrap(), op.profile(), "{file}");
    }
}

#[test]
fn malformed_operator_is_an_input_error() {
    let dir = std::env::temp_dir().join(format!("partible-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"order\": 1,\n  \"coeffs\": [\"k\" \"1\"]\n}").unwrap();
    let o = partible(&["profile", "--operator", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let bad_coeff = dir.join("bad_coeff.json");
    std::fs::write(
        &bad_coeff,
        r#"{"order": 1, "coeffs": ["k +", "1"], "field": "Q"}"#,
    )
    .unwrap();
    let o = partible(&["profile", "--operator", bad_coeff.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column"), "{}", stderr(&o));

    let o = partible(&[
        "profile",
        "--operator",
        dir.join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_and_gamma() {
    let apery = data("apery.json");
    let j = json(&partible(&[
        "reduce",
        "--operator",
        apery.to_str().unwrap(),
        "--power",
        "3",
    ]));
    assert_eq!(j["u"]["1"], "0");
    assert_eq!(j["v"]["0"], "-1/8");

    let sm1 = data("sigma-minus-1.json");
    let j = json(&partible(&[
        "reduce",
        "--operator",
        sm1.to_str().unwrap(),
        "--poly",
        "1",
    ]));
    assert_eq!(j["x"], "-k");
    assert_eq!(j["summable"], true);

    let o = partible(&[
        "reduce",
        "--operator",
        sm1.to_str().unwrap(),
        "--power",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let j = json(&partible(&[
        "gamma",
        "--operator",
        data("delannoy.json").to_str().unwrap(),
    ]));
    assert_eq!(j["gamma"], "-1/2");
    let j = json(&partible(&["gamma", "--operator", sm1.to_str().unwrap()]));
    assert_eq!(j["partible"], false);
}

#[test]
fn constants_tables() {
    let j = json(&partible(&[
        "constants",
        "--family",
        "apery",
        "--r-max",
        "2",
        "--json",
    ]));
    let rows: Vec<(u64, String)> = j["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["r"].as_u64().unwrap(),
                e["c"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![(0, "1".into()), (1, "0".into()), (2, "1".into())]
    );

    let j = json(&partible(&[
        "constants",
        "--family",
        "delannoy_number",
        "--r-max",
        "1",
        "--json",
    ]));
    assert_eq!(j["entries"][1]["c"], "13");

    let o = partible(&[
        "constants",
        "--family",
        "delannoy_poly",
        "--r-max",
        "0",
        "--json",
    ]);
    let c = json(&o)["entries"][0]["c"].as_str().unwrap().to_string();
    let parsed = partible_core::poly::parse_poly(&c).unwrap().coeff(0);
    assert_eq!(
        parsed,
        partible_core::FieldElement::from(1) / partible_core::FieldElement::z()
    );

    let j = json(&partible(&[
        "constants",
        "--family",
        "delannoy_poly",
        "--r-max",
        "1",
        "--z",
        "1",
        "--json",
    ]));
    assert_eq!(j["entries"][1]["c"], "13");

    let text = stdout(&partible(&[
        "constants",
        "--family",
        "apery",
        "--r-max",
        "2",
    ]));
    assert!(text.contains("denominator support"));

    let o = partible(&["constants", "--family", "catalan", "--r-max", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("catalan"));
}

#[test]
fn json_output_is_stable() {
    let args = [
        "constants",
        "--family",
        "apery_signed",
        "--r-max",
        "6",
        "--json",
    ];
    assert_eq!(stdout(&partible(&args)), stdout(&partible(&args)));
}

fn reports(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn verify_sweeps_pass() {
    let o = partible(&[
        "verify", "--family", "apery", "--r-max", "5", "--p-max", "100",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = reports(&o);
    assert_eq!(rows.len(), 6 * 23);
    assert!(rows.iter().all(|r| r["pass"] == true && r["e"] == 3));

    let o = partible(&[
        "verify",
        "--family",
        "apery_signed",
        "--r-max",
        "3",
        "--p-max",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = partible(&[
        "verify",
        "--family",
        "delannoy_poly",
        "--r-max",
        "3",
        "--p-max",
        "50",
        "--z",
        "1",
        "2",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows = reports(&o);
    assert!(rows
        .iter()
        .all(|r| r["z"].as_i64().unwrap() % r["p"].as_i64().unwrap() != 0));
}

#[test]
fn verify_jobs_do_not_change_output() {
    let base = [
        "verify",
        "--family",
        "delannoy_number",
        "--r-max",
        "3",
        "--p-max",
        "60",
    ];
    let one = partible(&[&base[..], &["--jobs", "1"]].concat());
    let four = partible(&[&base[..], &["--jobs", "4"]].concat());
    let strip = |o: &Output| {
        reports(o)
            .into_iter()
            .map(|mut r| {
                r.as_object_mut().unwrap().remove("elapsed_us");
                r
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn verify_summary_and_input_errors() {
    let o = partible(&[
        "verify",
        "--family",
        "apery",
        "--r-max",
        "1",
        "--p-max",
        "30",
        "--summary",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total: 16/16 passed"), "{}", stdout(&o));

    let o = partible(&[
        "verify",
        "--family",
        "delannoy_poly",
        "--r-max",
        "1",
        "--p-max",
        "30",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = partible(&[
        "verify", "--family", "nope", "--r-max", "1", "--p-max", "30",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = partible(&["verify", "--family", "apery"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guess_examples() {
    let o = partible(&[
        "guess",
        "--terms",
        data("apery-terms.json").to_str().unwrap(),
        "--order",
        "2",
        "--deg",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let op = ShiftOperator::from_json(&stdout(&o)).unwrap();
    assert_eq!(op, partible_core::sequences::apery_operator());

    let o = partible(&[
        "guess",
        "--terms",
        data("powers-of-2.json").to_str().unwrap(),
        "--order",
        "1",
        "--deg",
        "0",
    ]);
    let op = ShiftOperator::from_json(&stdout(&o)).unwrap();
    assert_eq!(op.to_file().coeffs, vec!["-2".to_string(), "1".to_string()]);

    let o = partible(&[
        "guess",
        "--terms",
        data("noise.json").to_str().unwrap(),
        "--order",
        "1",
        "--deg",
        "1",
    ]);
    assert_eq!(stdout(&o).trim(), "none");

    let o = partible(&[
        "guess",
        "--terms",
        data("powers-of-2.json").to_str().unwrap(),
        "--order",
        "2",
        "--deg",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("insufficient terms"));
}
