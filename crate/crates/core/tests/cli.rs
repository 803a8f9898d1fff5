use std::process::Command;

fn bch(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bch"))
        .args(args)
        .output()
        .expect("run bch binary");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn coeff_prints_reduced_rationals() {
    assert_eq!(bch(&["coeff", "AB"]), (0, "1/2\n".into(), String::new()));
    assert_eq!(bch(&["coeff", "A"]).1, "1\n");
    assert_eq!(bch(&["coeff", "ABA"]).1, "-1/6\n");
    assert_eq!(bch(&["coeff", "--blocks", "2,1", "--bfirst"]).1, "1/12\n");
}

#[test]
fn coeff_word_and_blocks_forms_match() {
    for (word, blocks, flag) in [
        ("BBA", "2,1", "--bfirst"),
        ("AABAB", "2,1,1,1", "--afirst"),
        ("ABBBAAB", "1,3,2,1", "--afirst"),
        ("BABBAAAB", "1,1,2,3,1", "--bfirst"),
    ] {
        let a = bch(&["coeff", word]);
        let b = bch(&["coeff", "--blocks", blocks, flag]);
        assert_eq!(a, b, "{word}");
        let a = bch(&["coeff", word, "--format", "json"]);
        let b = bch(&["coeff", "--blocks", blocks, flag, "--format", "json"]);
        assert_eq!(a, b, "{word} json");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bch(&["coeff", "ABC"]).0, 2);
    assert_eq!(bch(&["coeff"]).0, 2);
    assert_eq!(bch(&["coeff", "--blocks", "2,0"]).0, 2);
    assert_eq!(bch(&["frobnicate"]).0, 2);
    assert_eq!(bch(&["table", "0"]).0, 2);
    assert_eq!(bch(&["coeff", "AB", "--backend", "32"]).0, 2);
    assert_eq!(bch(&["--help"]).0, 0);
}

#[test]
fn forced_backend_out_of_range_exits_three() {
    let (code, out, err) = bch(&["coeff", "--blocks", "10,9", "--backend", "64"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("--backend 128"), "{err}");

    let (code, _, err) = bch(&["table", "31", "--backend", "128"]);
    assert_eq!(code, 3);
    assert!(err.contains("--backend big"), "{err}");

    let (code, _, err) = bch(&["bench", "19", "--backend", "64"]);
    assert_eq!(code, 3);
    assert!(err.contains("--backend 128"), "{err}");
}

#[test]
fn auto_handles_degrees_beyond_fixed_widths() {
    let (code, out, _) = bch(&["coeff", "--blocks", "10,9"]);
    assert_eq!(code, 0);
    let big = bch(&["coeff", "--blocks", "10,9", "--backend", "big"]);
    assert_eq!(out, big.1);
}

#[test]
fn dn_output() {
    assert_eq!(bch(&["dn", "13"]).1, "d_13 = 210, 13! d_13 = 1307674368000\n");
    let (_, tsv, _) = bch(&["dn", "5", "--all", "--format", "tsv"]);
    assert_eq!(tsv, "n\td_n\tdenominator\n1\t1\t1\n2\t1\t2\n3\t2\t12\n4\t1\t24\n5\t6\t720\n");
}

#[test]
fn table_tsv_rows() {
    let (code, out, err) = bch(&["table", "3", "--format", "tsv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tpartition\tnumerator\tdenominator");
    assert_eq!(lines.len(), 7);
    assert!(lines.contains(&"3\t2,1\t1\t12"));
    assert!(err.starts_with("6 partitions, coefficient phase"), "{err}");

    let (_, out, _) = bch(&["table", "1"]);
    assert_eq!(out, "n\tpartition\tnumerator\tdenominator\n1\t1\t1\t1\n");
}

#[test]
fn table_row_counts() {
    for (n, rows) in [(5, 18), (12, 271), (19, 2086), (20, 2713)] {
        let (code, out, _) = bch(&["table", &n.to_string()]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count() - 1, rows, "table {n}");
    }
}

#[test]
fn table_json_schema() {
    let (code, out, _) = bch(&["table", "20", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2713);
    assert_eq!(rows[4], serde_json::json!({"n": 3, "parts": [2, 1], "num": 1, "den": 12}));
    for row in rows {
        let obj = row.as_object().unwrap();
        assert_eq!(obj.len(), 4);
        assert!(obj["den"].is_number() && obj["num"].is_number());
    }
}

#[test]
fn table_to_file_with_threads() {
    let dir = tempfile::tempdir().unwrap();
    let serial = dir.path().join("serial.tsv");
    let parallel = dir.path().join("parallel.tsv");
    assert_eq!(bch(&["table", "14", "--out", serial.to_str().unwrap()]).0, 0);
    assert_eq!(
        bch(&["table", "14", "--threads", "3", "--out", parallel.to_str().unwrap()]).0,
        0
    );
    let a = std::fs::read(&serial).unwrap();
    assert_eq!(a, std::fs::read(&parallel).unwrap());
    assert!(!a.contains(&b'\r'));
}

#[test]
fn dynkin_output() {
    let (code, out, _) = bch(&["dynkin", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1/4 [AB]\n-1/4 [BA]\n");
    assert_eq!(bch(&["dynkin", "1"]).1, "1 [A]\n1 [B]\n");
    assert_eq!(bch(&["dynkin", "30"]).0, 2);
}

#[test]
fn verify_passes_and_catches_faults() {
    let (code, out, _) = bch(&["verify", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("all checks passed\n"));
    assert_eq!(bch(&["verify", "1"]).0, 0);

    let (code, out, err) = bch(&["verify", "4", "--inject-fault", "diagonal"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  oracle equivalence"));
    assert!(err.contains("word A: expected 1, got 2"), "{err}");
}

#[test]
fn bench_reports_partition_count() {
    let (code, out, _) = bch(&["bench", "12", "--repetitions", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("partitions: 271\n"), "{out}");
    assert!(out.contains("min: ") && out.contains("median: "));
    let (_, out, _) = bch(&["bench", "20", "--backend", "128", "--repetitions", "1"]);
    assert!(out.contains("partitions: 2713\n"), "{out}");
}
