//! End-to-end runs of the privword binary: formats, round trips, exit codes.

use std::process::{Command, Output};

use privword_cli::output::ProfileDoc;

fn privword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_privword"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_ternary_example() {
    let out = privword(&["analyze", "--word", "0120", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["privileged_count"], 5);
    assert_eq!(doc["palindromic_count"], 4);
    assert_eq!(doc["is_rich"], false);
    assert_eq!(doc["is_c_poor"], true);
    assert_eq!(doc["counting_law_ok"], true);
}

#[test]
fn analyze_non_rich_binary_word() {
    let out = privword(&["analyze", "--word", "11010011", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["is_rich"], false);
    assert!(doc["witness"].is_string());
}

#[test]
fn analyze_empty_word_needs_flag() {
    let out = privword(&["analyze", "--word", ""]);
    assert_eq!(out.status.code(), Some(2));

    let out = privword(&["analyze", "--word", "", "--allow-empty", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["privileged_count"], 1);
    assert_eq!(doc["palindromic_count"], 1);
    assert_eq!(doc["closed_count"], 1);

    // tables render ε with the configurable token
    let out = privword(&["analyze", "--word", "", "--allow-empty", "--eps-token", "<e>"]);
    assert!(stdout(&out).contains("<e>"));
}

#[test]
fn analyze_reads_files_line_by_line() {
    let dir = std::env::temp_dir().join(format!("privword-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("words.txt");
    std::fs::write(&path, "0120\n11010011\n").unwrap();
    let out = privword(&["analyze", "--file", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs.as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn profile_json_round_trips() {
    let out = privword(&[
        "profile", "--source", "fibonacci", "--nmax", "24", "--format", "json", "--workers", "2",
    ]);
    assert!(out.status.success());
    let doc = ProfileDoc::from_json(&stdout(&out)).unwrap();
    assert_eq!(doc.name, "fibonacci");
    assert_eq!(doc.kind, "privileged");
    assert_eq!(doc.valid_to, 24);
    let profile = doc.to_profile().unwrap();
    for n in 0..=24usize {
        assert_eq!(profile.counts[n], if n % 2 == 0 { 1 } else { 2 });
    }
    // document → profile → document is the identity
    assert_eq!(ProfileDoc::new("fibonacci", &profile), doc);
}

#[test]
fn profile_csv_round_trips() {
    let out = privword(&["profile", "--source", "tm", "--nmax", "16", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (counts, exact) = ProfileDoc::rows_from_csv(&text).unwrap();
    assert_eq!(counts.len(), 17);
    assert!(exact.iter().all(|&e| e));
    assert_eq!(counts[14], 0); // first even vanishing length of tm
}

#[test]
fn profile_of_literal_word() {
    let out = privword(&[
        "profile", "--word", "0110", "--nmax", "4", "--property", "palindrome", "--format", "csv",
    ]);
    assert!(out.status.success());
    let (counts, _) = ProfileDoc::rows_from_csv(&stdout(&out)).unwrap();
    assert_eq!(counts, vec![1, 2, 1, 0, 1]);
}

#[test]
fn profile_check_gates_exit_code() {
    let out = privword(&[
        "profile", "--source", "fibonacci", "--nmax", "40", "--check", "jsp", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = privword(&[
        "profile", "--source", "periodic:,0001", "--nmax", "40", "--check", "jsp", "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1), "failed check must exit 1");
}

#[test]
fn profile_episturmian_letters() {
    let out = privword(&[
        "profile", "--source", "episturmian:abc", "--nmax", "12", "--format", "csv",
    ]);
    assert!(out.status.success());
    let (counts, exact) = ProfileDoc::rows_from_csv(&stdout(&out)).unwrap();
    assert!(exact.iter().all(|&e| e));
    for (n, &c) in counts.iter().enumerate() {
        assert_eq!(c, if n % 2 == 0 { 1 } else { 3 }, "n={n}");
    }
}

#[test]
fn tm_table_values() {
    let out = privword(&["tm-table", "--nmax", "10", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,count\n2,2\n4,2\n6,4\n8,8\n10,8\n");

    let out = privword(&["tm-table", "--nmax", "7"]);
    assert_eq!(out.status.code(), Some(2), "odd nmax is a usage error");
}

#[test]
fn scan_gaps_finds_none_for_sturmian() {
    let out = privword(&[
        "scan-gaps", "--source", "fibonacci", "--from", "1", "--to", "60", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["runs"].as_array().unwrap().len(), 0);
}

#[test]
fn scan_gaps_letter_power_tail() {
    let out = privword(&[
        "scan-gaps", "--source", "periodic:,0001", "--from", "1", "--to", "20", "--property",
        "letter-power", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "from,to\n4,20\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(privword(&["analyze"]).status.code(), Some(2));
    assert_eq!(privword(&["profile", "--source", "nope", "--nmax", "4"]).status.code(), Some(2));
    assert_eq!(privword(&["profile", "--nmax", "4"]).status.code(), Some(2));
    assert_eq!(privword(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        privword(&["analyze", "--word", "012", "--alphabet", "01"]).status.code(),
        Some(2)
    );
}

#[test]
fn declared_alphabet_fixes_symbol_order() {
    // over the declared alphabet "210", the word 0120 is still analyzed the
    // same way (the classes are permutation invariant)
    let out = privword(&[
        "analyze", "--word", "0120", "--alphabet", "210", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["privileged_count"], 5);
    assert_eq!(doc["is_c_poor"], true);
}

#[test]
fn output_file_writing() {
    let dir = std::env::temp_dir().join(format!("privword-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("profile.csv");
    let out = privword(&[
        "profile", "--source", "fibonacci", "--nmax", "8", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let (counts, _) = ProfileDoc::rows_from_csv(&text).unwrap();
    assert_eq!(counts, vec![1, 2, 1, 2, 1, 2, 1, 2, 1]);
    std::fs::remove_dir_all(&dir).unwrap();
}
