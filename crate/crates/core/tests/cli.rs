use std::process::{Command, Output};

use serde_json::Value;

fn widthk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_widthk"))
        .args(args)
        .env_remove("WIDTHK_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = widthk(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn stat_des_on_worked_example() {
    let v = json(&["stat", "--perm", "4136572", "--widths", "2,3", "--stat", "des"]);
    assert_eq!(v["counts"]["des"], 3);
    assert_eq!(v["des_multiset"], serde_json::json!([1, 4, 5]));
}

#[test]
fn stat_all_on_worked_example() {
    let v = json(&["stat", "--perm", "4136572", "--widths", "2,3"]);
    assert_eq!(v["counts"], serde_json::json!({"des": 3, "inv": 5, "exc": 4, "maj": 6}));
    assert_eq!(v["inv"], serde_json::json!([[1, 3], [1, 7], [3, 7], [4, 7], [5, 7]]));
}

#[test]
fn stat_maj_and_trivial_inv() {
    let o = widthk(&["stat", "--perm", "4136572", "--widths", "2,3", "--stat", "maj"]);
    assert_eq!(stdout(&o).lines().last(), Some("maj 6"));
    let v = json(&["stat", "--perm", "123", "--widths", "1", "--stat", "inv"]);
    assert_eq!(v["counts"]["inv"], 0);
}

#[test]
fn gf_closed_and_brute_agree() {
    let v = json(&["gf", "--n", "6", "--stat", "des", "--width", "3", "--method", "all"]);
    assert_eq!(v["agree"], true);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    for r in results {
        assert_eq!(r["poly"]["terms"], serde_json::json!([[0, 90], [1, 270], [2, 270], [3, 90]]));
    }
}

#[test]
fn gf_recursion_matches_brute() {
    let v = json(&["gf", "--n", "6", "--stat", "des", "--width", "1", "--avoid", "312", "--method", "all"]);
    assert_eq!(v["agree"], true);
    let methods: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["brute", "recursion"]);
}

#[test]
fn gf_empty_class_is_zero() {
    let o = widthk(&["gf", "--n", "5", "--stat", "des", "--width", "1", "--avoid", "123,321"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "brute: 0\n");
}

#[test]
fn gf_csv_rows() {
    let o = widthk(&["--format", "csv", "gf", "--n", "3", "--width", "1"]);
    assert_eq!(stdout(&o), "method,exponent,coefficient\nbrute,0,1\nbrute,1,4\nbrute,2,1\n");
}

#[test]
fn gf_inapplicable_method_exits_2() {
    let o = widthk(&["gf", "--n", "5", "--width", "1", "--avoid", "2413", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not applicable"));
}

#[test]
fn gtable_matches_printed_rows() {
    let o = widthk(&["gtable", "--n", "6,8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("G_{6,3} = 720 = 720"));
    assert!(out.contains("G_{6,4} = 180·q^-2·A_2(q)^2 = 180q^-2 + 360q^-1 + 180"));
    assert!(out.contains("G_{8,6} = 1120·q^-4·A_3(q)^2"));
    assert_eq!(out.lines().count(), 5 + 7);
}

#[test]
fn gtable_json_coefficients_are_exact() {
    let o = widthk(&["--format", "json", "gtable", "--n", "6"]);
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[1]["poly"]["terms"], serde_json::json!([[0, 180], [1, 360], [2, 180]]));
    assert_eq!(rows[1]["shape"], serde_json::json!({"coeff": 180, "shift": 0, "eulerian": 2, "power": 2}));
}

#[test]
fn tpoly_outputs() {
    assert_eq!(stdout(&widthk(&["tpoly", "--n", "3", "--avoid", "321"])), "1 + 2t1 + 2t1t2\n");
    let o = widthk(&["--format", "csv", "tpoly", "--n", "2"]);
    assert_eq!(stdout(&o), "t1,coefficient\n0,1\n1,1\n");
}

#[test]
fn avoid_counts() {
    assert_eq!(stdout(&widthk(&["avoid", "--n", "4", "--patterns", "312"])), "14\n");
    assert_eq!(stdout(&widthk(&["avoid", "--n", "6", "--patterns", "132,231"])), "32\n");
    assert_eq!(stdout(&widthk(&["avoid", "--n", "3", "--patterns", ""])), "6\n");
    let v = json(&["avoid", "--n", "3", "--patterns", "123,132", "--list"]);
    assert_eq!(v["count"], 4);
    assert_eq!(v["perms"], serde_json::json!([[2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]));
}

#[test]
fn verify_suites_exit_zero() {
    for (suite, nmax) in [("theorem", "8"), ("conjecture", "9"), ("duality", "6")] {
        let o = widthk(&["--format", "json", "verify", "--suite", suite, "--nmax", nmax]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        for line in stdout(&o).lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["suite"], suite);
            assert_ne!(v["status"], "mismatch");
        }
    }
}

#[test]
fn verify_table_flags_label_as_informational() {
    let o = widthk(&["--format", "json", "verify", "--suite", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.iter().filter(|r| r["status"] == "verified").count(), 20);
    let info: Vec<&Value> = reports.iter().filter(|r| r["status"] == "informational").collect();
    assert_eq!(info.len(), 1);
    assert_eq!(info[0]["notes"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["stat", "--perm", "1224"][..],
        &["stat", "--perm", "123", "--widths", "0"],
        &["gf", "--n", "4"],
        &["gf", "--n", "4", "--width", "4"],
        &["avoid", "--n", "11", "--patterns", "312"],
        &["tpoly", "--n", "9"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--suite", "theorem", "--nmax", "11"],
        &["gtable", "--n", "1"],
        &["--format", "xml", "avoid", "--n", "3"],
        &[],
    ] {
        assert_eq!(widthk(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn env_cap_override() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_widthk"))
            .args(["avoid", "--n", "6", "--patterns", "312"])
            .env("WIDTHK_MAX_N", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(2));
    assert_eq!(run("6").status.code(), Some(0));
    assert_eq!(run("six").status.code(), Some(2));
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_widthk"))
            .args(["--format", "json", "gtable", "--n", "8"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn cache_dir_persists_recursions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let args = ["--cache-dir", path, "gf", "--n", "9", "--width", "2", "--avoid", "312", "--method", "recursion"];
    let first = widthk(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(dir.path().join("recursions.json").exists());
    let second = widthk(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first), stdout(&widthk(&args[2..])));
}
