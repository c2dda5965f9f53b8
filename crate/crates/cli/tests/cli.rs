use std::process::{Command, Output};

fn tkc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tkc"))
        .args(args)
        .output()
        .expect("spawn tkc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_row(args: &[&str]) -> String {
    let o = tkc(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    stdout(&o).lines().nth(1).unwrap().to_owned()
}

#[test]
fn invariants_rows() {
    assert_eq!(
        csv_row(&["invariants", "8", "3", "--format", "csv"]),
        "8,3,even,-,-,2,24,7,2,8"
    );
    assert_eq!(
        csv_row(&["invariants", "7", "5", "--format", "csv"]),
        "7,5,odd,A,4,3,34,12,3,14"
    );
    assert_eq!(
        csv_row(&["invariants", "25", "9", "--format", "csv"]),
        "25,9,odd,B,11,5,226,96,5,100"
    );
    // Orientation and sign do not change the knot.
    assert_eq!(
        csv_row(&["invariants", "-5", "-7", "--format", "csv"]),
        "7,5,odd,A,4,3,34,12,3,14"
    );
    assert_eq!(
        csv_row(&["invariants", "3", "8", "--format", "csv"]),
        "8,3,even,-,-,2,24,7,2,8"
    );
    assert_eq!(
        csv_row(&["invariants", "1", "9", "--format", "csv"]),
        "9,1,-,-,-,0,0,0,0,0"
    );
}

#[test]
fn invariants_text_and_json() {
    let o = tkc(&["invariants", "2", "3"]);
    let text = stdout(&o);
    assert!(text.contains("crosscap       1"));
    assert!(text.contains("upper_bound    1 (rounded down"));

    let o = tkc(&["invariants", "25", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["boundary_slope"], "226");
    assert_eq!(v[0]["input"], "25:9");
}

#[test]
fn invariants_handle_big_parameters() {
    let p = "100000000000000000000000000000000000001";
    let o = tkc(&["invariants", p, "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["p"], "2");
    assert_eq!(v[0]["q"], p);
    assert_eq!(v[0]["crosscap"], "1");
}

#[test]
fn bad_input_exits_1() {
    for args in [
        &["invariants", "4", "6"][..],
        &["invariants", "0", "3"],
        &["invariants", "x", "3"],
        &["nxy", "7", "9"],
        &["nxy", "4", "6"],
        &["cf", "4", "6"],
        &["sum", "8:3", "4:6"],
        &["sum", "83"],
        &["sweep", "1", "9"],
        &["verify", "bogus", "10"],
        &["verify", "all", "10", "--k-min", "3", "--k-max", "2"],
        &["frobnicate"],
        &[],
    ] {
        let o = tkc(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(tkc(&["--help"]).status.code(), Some(0));
    assert_eq!(tkc(&["--version"]).status.code(), Some(0));
}

#[test]
fn nxy_trace() {
    let o = tkc(&["nxy", "226", "625"]);
    let text = stdout(&o);
    assert!(text.contains("cf      [0,2,1,3,3,1,3,1,2]"));
    assert!(text.contains("b       [0,0,1,3,0,1,3,0,2]"));
    assert!(text.contains("sigma   10"));
    assert!(text.trim_end().ends_with("N       5"));

    let o = tkc(&["nxy", "7", "9"]);
    assert!(stderr(&o).contains("even first argument"));
}

#[test]
fn cf_table() {
    let text = stdout(&tkc(&["cf", "34", "49"]));
    assert!(text.starts_with("34/49 = [0,1,2,3,1,3]\n"));
    let last: Vec<&str> = text.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(last, ["5", "3", "34", "49"]);
    assert_eq!(
        stdout(&tkc(&["cf", "5", "1"])).lines().next(),
        Some("5/1 = [5]")
    );
}

#[test]
fn sum_totals() {
    let total = |args: &[&str]| stdout(&tkc(args)).lines().last().unwrap().to_owned();
    assert_eq!(total(&["sum", "8:3", "7:5"]), "total 5");
    assert_eq!(total(&["sum", "2:3"]), "total 1");
    assert_eq!(total(&["sum", "8:3", "1:5"]), "total 2");
    assert_eq!(total(&["sum", "-3:2", "3:-2"]), "total 2");
}

#[test]
fn sweep_small() {
    let o = tkc(&["sweep", "2", "2"]);
    assert_eq!(
        stdout(&o),
        "p,q,parity,type,witness_x,crosscap,boundary_slope,genus,gamma,upper_bound\n"
    );
    let o = tkc(&["sweep", "--max-p", "2", "--max-q", "2", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), "[]");

    let text = stdout(&tkc(&["sweep", "25", "9"]));
    assert!(text.contains("\n8,3,even,-,-,2,24,7,2,8\n"));
    assert!(text.contains("\n7,5,odd,A,4,3,34,12,3,14\n"));
    assert!(text.contains("\n25,9,odd,B,11,5,226,96,5,100\n"));
}

#[test]
fn sweep_rows_are_sorted_and_unique() {
    let text = stdout(&tkc(&["sweep", "40", "40"]));
    let keys: Vec<(u64, u64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(',').map(|v| v.parse::<u64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    // T(p,q) and T(q,p) collapse to one row.
    assert!(keys.contains(&(7, 5)) && !keys.contains(&(5, 7)));
    assert!(keys.contains(&(2, 3)) && !keys.contains(&(3, 2)));
}

#[test]
fn sweep_csv_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("s.csv");
    let json_path = dir.path().join("s.json");
    for (path, fmt) in [(&csv_path, "csv"), (&json_path, "json")] {
        let o = tkc(&[
            "sweep",
            "30",
            "20",
            "--out",
            path.to_str().unwrap(),
            "--format",
            fmt,
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let json: Vec<serde_json::Map<String, serde_json::Value>> =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), json.len());
    for (row, obj) in rows.iter().zip(&json) {
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        assert_eq!(keys, header);
        let values: Vec<&str> = obj.values().map(|v| v.as_str().unwrap()).collect();
        assert_eq!(values.join(","), *row);
    }
}

#[test]
fn sweep_unwritable_path_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let o = tkc(&["sweep", "5", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_sequential_matches_parallel() {
    let a = tkc(&["sweep", "60", "60"]).stdout;
    let b = tkc(&["sweep", "60", "60", "--sequential"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn verify_passes_and_reports_sections() {
    let o = tkc(&["verify", "oracle", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let o = tkc(&[
        "verify", "--suite", "delta3", "--max-p", "30", "--k-min", "-2", "--k-max", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("suite delta3 max_p 30 k in [-2, 2]"));
    assert!(text.trim_end().lines().last().unwrap().starts_with("PASS:"));
}
