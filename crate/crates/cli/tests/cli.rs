use olympiad_cli::{run, Outcome};
use serde_json::{json, Value};

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["olympiad"];
    argv.extend_from_slice(args);
    let Outcome { code, output } = run(argv, &mut std::io::sink());
    let value = serde_json::from_str(&output).unwrap_or_else(|e| panic!("{e}: {output}"));
    (code, value)
}

fn with_input(args: &[&str], input: &Value) -> (i32, Value) {
    let text = input.to_string();
    let mut all = args.to_vec();
    all.extend(["--inline", &text]);
    call(&all)
}

#[test]
fn pebbles_single_color() {
    let (code, out) = call(&[
        "pebbles",
        "solve",
        "--inline",
        r#"{"n":1,"color_of":[0,0,0,0]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["pile_a"], json!([1, 4]));
    assert_eq!(out["pile_b"], json!([2, 3]));
}

#[test]
fn pebbles_round_trip() {
    for seed in 0..20 {
        let seed = seed.to_string();
        let (_, coloring) = call(&["pebbles", "gen", "--n", "5", "--seed", &seed]);
        let (code, solved) = with_input(&["pebbles", "solve"], &coloring);
        assert_eq!(code, 0);
        let (code, verdict) = with_input(&["pebbles", "verify"], &solved);
        assert_eq!(code, 0, "{verdict}");
        assert_eq!(verdict["ok"], true);
    }
}

#[test]
fn pebbles_verify_rejects_bad_piles() {
    let claim = json!({ "n": 2, "color_of": [0, 0, 0, 0, 1, 1, 1, 1], "pile_a": [1, 2, 3, 4], "pile_b": [5, 6, 7, 8] });
    let (code, out) = with_input(&["pebbles", "verify"], &claim);
    assert_eq!(code, 1);
    assert_eq!(out["ok"], false);
    assert!(out["violations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|v| v["kind"] == "unequal_sums"));
}

#[test]
fn pebbles_oracle_refuses_large_n() {
    let (_, coloring) = call(&["pebbles", "gen", "--n", "6"]);
    let (code, out) = with_input(&["pebbles", "oracle"], &coloring);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "refused");
}

#[test]
fn cablecar_oracle() {
    let (code, out) = call(&["cablecar", "oracle", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out["min_k"], 3);
}

#[test]
fn cablecar_extremal_pair_has_no_common_link() {
    let (code, pair) = call(&["cablecar", "construct", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(pair["a"]["cars"].as_array().unwrap().len(), 12);
    let (code, out) = with_input(&["cablecar", "common"], &pair);
    assert_eq!(code, 0);
    assert_eq!(out["common"], Value::Null);
    assert_eq!(out["guaranteed"], false);
}

#[test]
fn cablecar_common_at_threshold() {
    let (_, a) = call(&["cablecar", "gen", "--n", "3", "--k", "7", "--seed", "1"]);
    let (_, b) = call(&["cablecar", "gen", "--n", "3", "--k", "7", "--seed", "2"]);
    let (code, out) = with_input(&["cablecar", "common"], &json!({ "a": a, "b": b }));
    assert_eq!(code, 0);
    assert_eq!(out["guaranteed"], true);
    let pair = out["common"].as_array().unwrap();
    for config in [&a, &b] {
        let (_, linked) = with_input(&["cablecar", "linked"], config);
        assert!(linked["pairs"].as_array().unwrap().contains(&json!(pair)));
        assert_eq!(linked["component_count"], 2);
    }
}

#[test]
fn cablecar_validate() {
    let (code, _) = with_input(
        &["cablecar", "validate"],
        &json!({ "n": 2, "cars": [[0, 2], [1, 3]] }),
    );
    assert_eq!(code, 0);
    let (code, out) = with_input(
        &["cablecar", "validate"],
        &json!({ "n": 2, "cars": [[0, 3], [1, 2]] }),
    );
    assert_eq!(code, 1);
    assert_eq!(out["violations"][0]["kind"], "order_reversed");
    let (code, out) = with_input(
        &["cablecar", "linked"],
        &json!({ "n": 2, "cars": [[0, 3], [1, 2]] }),
    );
    assert_eq!(code, 2, "{out}");
}

#[test]
fn sepline_round_trip_both_modes() {
    for mode in ["grid", "rejection"] {
        for (n, seed) in [("2", "0"), ("40", "1"), ("300", "2")] {
            let (code, points) =
                call(&["sepline", "gen", "--n", n, "--seed", seed, "--mode", mode]);
            assert_eq!(code, 0);
            let (code, solved) = with_input(&["sepline", "solve"], &points);
            assert_eq!(code, 0);
            for key in ["points", "anchor", "normal", "margin"] {
                assert!(solved.get(key).is_some(), "{key}");
            }
            let (code, report) = with_input(&["sepline", "verify"], &solved);
            assert_eq!(code, 0, "{report}");
            assert!(report["margin"].as_f64().unwrap() >= report["bound"].as_f64().unwrap());
        }
    }
}

#[test]
fn sepline_verify_rejects_one_sided_line() {
    let claim =
        json!({ "points": [[0.0, 0.0], [1.0, 0.0]], "anchor": [5.0, 0.0], "normal": [1.0, 0.0] });
    let (code, out) = with_input(&["sepline", "verify"], &claim);
    assert_eq!(code, 1);
    assert_eq!(out["valid"], false);
}

#[test]
fn sepline_rejects_close_points() {
    let (code, out) = with_input(
        &["sepline", "solve"],
        &json!({ "points": [[0.0, 0.0], [0.5, 0.0]] }),
    );
    assert_eq!(code, 2);
    assert!(out["error"]["message"].as_str().unwrap().contains("points"));
}

#[test]
fn sepline_lemma() {
    let input = json!({ "points": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]], "rect": { "x": 0.0, "y": 0.0, "width": 1.0, "height": 1.0 } });
    let (code, out) = with_input(&["sepline", "lemma"], &input);
    assert_eq!(code, 0);
    assert_eq!(out["count"], 3);
    assert_eq!(out["bound"], 20.0);
}

#[test]
fn deck_commands() {
    let (code, out) = call(&["deck", "check", "--inline", r#"{"values":[1,2]}"#]);
    assert_eq!(code, 1);
    assert_eq!(out["failing_pair"], json!([0, 1]));

    let (code, out) = call(&["deck", "check", "--inline", r#"{"values":["7","7","7"]}"#]);
    assert_eq!(code, 0);
    assert_eq!(out["values"], json!(["7", "7", "7"]));

    let (code, out) = call(&[
        "deck",
        "witness",
        "--i",
        "0",
        "--j",
        "1",
        "--inline",
        r#"{"values":[4,4]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["witness"].as_array().unwrap().len(), 1);

    let (code, out) = call(&["deck", "search", "--n", "3", "--max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out["candidates"], json!([]));

    let (code, out) = call(&["deck", "search", "--n", "9", "--max", "6"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "refused");
}

#[test]
fn geometry_commands() {
    let (code, out) = call(&["geometry", "verify", "--alpha", "20", "--beta", "25"]);
    assert_eq!(code, 0);
    assert!(out["check"]["residual"].as_f64().unwrap() < 1e-9);

    let (code, out) = call(&["geometry", "verify", "--alpha", "50", "--beta", "20"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "infeasible");

    let (code, out) = call(&["geometry", "sweep", "--samples", "25", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.as_array().unwrap().len(), 25);
}

#[test]
fn ineq_commands() {
    let (code, lhs) = call(&["ineq", "expand", "--side", "lhs"]);
    assert_eq!(code, 0);
    let terms = lhs.as_array().unwrap();
    assert_eq!(terms.len(), 20);
    let rst = terms.iter().find(|t| t["monomial"] == "r s t").unwrap();
    assert_eq!(rst["coefficient"], "22");

    let (_, rhs) = call(&["ineq", "expand", "--side", "rhs"]);
    let u3 = rhs
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["monomial"] == "u^3")
        .unwrap()
        .clone();
    assert_eq!(u3["coefficient"], "64");

    let (code, out) = call(&["ineq", "dominate"]);
    assert_eq!(code, 0);
    assert_eq!(out["dominated"], true);

    let (code, out) = call(&["ineq", "sample", "--count", "5000", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out["below_one"], 5000);
}

#[test]
fn schema_lookup() {
    let (code, out) = call(&["schema", "pebbles.solve"]);
    assert_eq!(code, 0);
    for field in ["n", "color_of"] {
        assert!(out["input"]["properties"].get(field).is_some());
    }
    let (code, out) = call(&["schema", "sepline.solve"]);
    assert_eq!(code, 0);
    for field in ["points", "anchor", "normal", "margin"] {
        assert!(out["output"]["properties"].get(field).is_some(), "{field}");
    }
    let (code, out) = call(&["schema", "nosuch"]);
    assert_eq!(code, 2);
    assert!(out.get("error").is_some());
}

#[test]
fn malformed_input_names_the_field() {
    let (code, out) = call(&[
        "pebbles",
        "solve",
        "--inline",
        r#"{"n":1,"color_of":[0,0,"x",0]}"#,
    ]);
    assert_eq!(code, 2);
    assert!(out["error"]["message"]
        .as_str()
        .unwrap()
        .contains("color_of[2]"));

    let (code, out) = call(&["pebbles", "solve", "--inline", r#"{"n":1}"#]);
    assert_eq!(code, 2);
    assert!(out["error"]["message"]
        .as_str()
        .unwrap()
        .contains("color_of"));

    let (code, _) = call(&["pebbles", "solve", "--inline", "not json"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["pebbles", "solve", "--bogus"][..],
        &["nosuch"],
        &["pebbles", "gen"],
        &["ineq", "expand", "--side", "middle"],
        &["pebbles", "solve", "--inline", "{}", "--input", "x.json"],
    ] {
        let (code, out) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(out["error"]["kind"], "usage");
    }
}

#[test]
fn file_input_and_output() {
    let dir = std::env::temp_dir().join(format!("olympiad-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("coloring.json");
    let output = dir.join("solved.json");
    std::fs::write(&input, r#"{"n":2,"color_of":[0,1,1,0,0,1,1,0]}"#).unwrap();
    let argv = [
        "olympiad",
        "pebbles",
        "solve",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output.to_str().unwrap(),
    ];
    let outcome = run(argv, &mut std::io::sink());
    assert_eq!(
        outcome,
        Outcome {
            code: 0,
            output: String::new()
        }
    );
    let solved: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(solved["pile_a"].as_array().unwrap().len(), 4);

    let (code, _) = call(&[
        "pebbles",
        "solve",
        "--input",
        dir.join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_arguments_give_identical_output() {
    for args in [
        &[
            "sepline",
            "gen",
            "--n",
            "50",
            "--seed",
            "9",
            "--mode",
            "rejection",
        ][..],
        &["geometry", "sweep", "--samples", "10", "--seed", "4"],
        &["selftest", "--seed", "7", "--quick"],
    ] {
        let mut argv = vec!["olympiad"];
        argv.extend_from_slice(args);
        assert_eq!(
            run(&argv, &mut std::io::sink()),
            run(&argv, &mut std::io::sink())
        );
    }
}

#[test]
fn search_candidates_stream_to_diagnostics() {
    let mut diag = Vec::new();
    let outcome = run(
        ["olympiad", "deck", "search", "--n", "2", "--max", "5"],
        &mut diag,
    );
    assert_eq!(outcome.code, 0);
    assert!(diag.is_empty());
}

#[test]
fn help_exits_zero() {
    let outcome = run(["olympiad", "--help"], &mut std::io::sink());
    assert_eq!(outcome.code, 0);
    assert!(outcome.output.contains("pebbles"));
}
