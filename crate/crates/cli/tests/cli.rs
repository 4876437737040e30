use std::process::{Command, Output};

use serde_json::Value;

fn compsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compsum"))
        .args(args)
        .env_remove("COMPSUM_SEED")
        .output()
        .expect("compsum binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON document per line"))
        .collect()
}

#[test]
fn sum_prints_bare_rationals() {
    for (args, expected) in [
        (["--n", "3", "--l", "3", "--k", "3"], "1/36"),
        (["--n", "2", "--l", "1", "--k", "1"], "1/2"),
        (["--n", "4", "--l", "2", "--k", "5"], "0"),
    ] {
        let mut full = vec!["sum"];
        full.extend(args);
        let out = compsum(&full);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), expected);
    }
    let latex = compsum(&[
        "sum", "--n", "3", "--l", "3", "--k", "3", "--format", "latex",
    ]);
    assert_eq!(stdout(&latex).trim(), "\\frac{1}{36}");
}

#[test]
fn poly_formats() {
    let json = json_lines(&compsum(&["poly", "--n", "2"])).remove(0);
    assert_eq!(json["n"], 2);
    assert_eq!(
        json["poly"]["terms"][0],
        serde_json::json!({"u": 1, "v": 0, "c": "1/2"})
    );
    assert_eq!(json["normalizer"], "4");
    assert_eq!(json["factors"]["q"], serde_json::json!([0, 1]));

    let text = stdout(&compsum(&["poly", "--n", "1", "--format", "text"]));
    assert_eq!(text.lines().next(), Some("P_1 = u + v"));

    let latex = stdout(&compsum(&["poly", "--n", "2", "--format", "latex"]));
    assert!(latex.contains("(u+v)(u+v+1) + u"), "{latex}");
    assert!(latex.contains("q_1 = 1"), "{latex}");
}

#[test]
fn poly_routes_print_the_same_polynomial() {
    let poly = |route: &str| {
        json_lines(&compsum(&["poly", "--n", "9", "--route", route])).remove(0)["poly"].clone()
    };
    let recurrence = poly("recurrence");
    assert_eq!(recurrence, poly("brute"));
    assert_eq!(recurrence, poly("factored"));
}

#[test]
fn verify_examples() {
    let out = compsum(&["verify", "--n-max", "10", "--checks", "theorem1"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l["pass"] == Value::Bool(true)));

    let out = compsum(&["verify", "--n-max", "6", "--checks", "eq1,eq2,pn0v"]);
    assert_eq!(out.status.code(), Some(0));
    // Three identities for each of the 21 pairs 1 <= l <= n <= 6, in (n, l) order.
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 63);
    let eq1: Vec<(u64, u64)> = lines
        .iter()
        .filter(|l| l["identity"] == "eq1")
        .map(|l| (l["n"].as_u64().unwrap(), l["l"].as_u64().unwrap()))
        .collect();
    let mut sorted = eq1.clone();
    sorted.sort();
    assert_eq!(eq1, sorted);

    let out = compsum(&["verify", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_text_format() {
    let out = compsum(&[
        "verify", "--n-max", "3", "--checks", "qr", "--format", "text",
    ]);
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS qr_sum")), "{text}");
    let latex = compsum(&["verify", "--n-max", "3", "--format", "latex"]);
    assert_eq!(latex.status.code(), Some(2));
}

#[test]
fn series_examples() {
    let out = compsum(&[
        "series", "--alpha", "1/2", "--beta", "1/3", "--gamma", "1/5", "--order", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["match"], Value::Bool(true));

    let out = compsum(&[
        "series", "--alpha", "-1", "--beta", "1/2", "--gamma", "1/7", "--order", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_lines(&out).remove(0);
    assert_eq!(doc["match"], Value::Bool(true));
    let hyper = doc["hypergeometric"]["coeffs"].as_array().unwrap();
    assert!(hyper[..2].iter().all(|c| c != "0"));
    assert!(hyper[2..].iter().all(|c| c == "0"));

    let out = compsum(&[
        "series", "--alpha", "1", "--beta", "1", "--gamma", "3", "--order", "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("inadmissible"), "{err}");
}

#[test]
fn bench_rows() {
    let out = compsum(&["bench", "--n-max", "11"]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r["equal"] == Value::Bool(true)));
    assert_eq!(rows[10]["compositions"], 1024);

    let one = json_lines(&compsum(&["bench", "--n-max", "1"]));
    assert_eq!(one.len(), 1);
    assert_eq!(one[0]["compositions"], 1);
}

#[test]
fn bruteforce_cap_is_a_flag() {
    let out = compsum(&[
        "sum",
        "--n",
        "6",
        "--l",
        "2",
        "--k",
        "1",
        "--bruteforce-cap",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = compsum(&[
        "verify",
        "--n-max",
        "8",
        "--checks",
        "theorem1",
        "--bruteforce-cap",
        "4",
    ]);
    let lines = json_lines(&out);
    assert_eq!(lines[3]["routes"].as_array().unwrap().len(), 3);
    assert_eq!(lines[4]["routes"].as_array().unwrap().len(), 2);
}
