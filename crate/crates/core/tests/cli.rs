//! Runs the `zzh` binary. JSON output for n <= 6 is compared against files
//! in tests/golden; set ZZH_BLESS=1 to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

fn zzh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zzh"))
        .args(args)
        .env_remove("ZZH_MAX_N")
        .output()
        .expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases = Vec::new();
    let mut add = |name: String, args: &[&str]| {
        let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        v.extend(["--format".into(), "json".into()]);
        cases.push((name, v));
    };
    for n in 1..=6 {
        let ns = n.to_string();
        add(format!("hstar_n{n}"), &["hstar", "--n", &ns, "--method", "all"]);
        add(format!("enumerate_n{n}"), &["enumerate", "--n", &ns, "--stats"]);
        add(format!("ehrhart_n{n}"), &["ehrhart", "--n", &ns, "--max-m", "8"]);
        add(format!("flags_n{n}"), &["flags", "--n", &ns]);
        add(format!("shelling_n{n}"), &["shelling", "--n", &ns, "--verify"]);
        add(format!("verify_n{n}"), &["verify", "--n", &ns, "--depth", "full"]);
    }
    add("euler_30".into(), &["euler", "--max", "30"]);
    add("swap_table_6".into(), &["swap-table", "--max", "6"]);
    add("chain_map_phi".into(), &["chain-map", "--n", "7", "--sizes", "{3,6}", "--chain", "{1,3,7} < {1,3,4,5,6,7}"]);
    add("chain_map_psi".into(), &["chain-map", "--n", "7", "--sizes", "{3,6}", "--perm", "3726451"]);
    cases
}

#[test]
fn golden_json_outputs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("ZZH_BLESS").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in golden_cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = zzh(&args);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let path = dir.join(format!("{name}.json"));
        if bless {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if expected != stdout(&out) {
            mismatches.push(name);
        }
    }
    assert!(mismatches.is_empty(), "golden mismatch: {mismatches:?}");
}

#[test]
fn documented_examples() {
    let o = zzh(&["hstar", "--n", "4", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("1 + 3t + t^2").count(), 4);

    let o = zzh(&["euler", "--max", "7"]);
    assert_eq!(stdout(&o), "1 1 1 2 5 16 61 272\n");

    let o = zzh(&["shelling", "--n", "4", "--verify"]);
    let text = stdout(&o);
    assert!(text.contains("order: 3412,2413,2314,1423,1324"), "{text}");
    assert!(text.contains("valid: true"));
    assert!(text.contains("attachments: 0,1,1,1,2"));

    let o = zzh(&["chain-map", "--n", "7", "--sizes", "{3,6}", "--chain", "{1,3,7} < {1,3,4,5,6,7}"]);
    assert_eq!(stdout(&o), "3726451\n");
}

#[test]
fn exit_codes() {
    assert_eq!(zzh(&["hstar"]).status.code(), Some(1));
    assert_eq!(zzh(&["hstar", "--n", "4", "--method", "magic"]).status.code(), Some(1));
    assert_eq!(zzh(&["chain-map", "--n", "4", "--sizes", "{2}", "--perm", "1234"]).status.code(), Some(1));
    assert_eq!(zzh(&["enumerate", "--n", "13"]).status.code(), Some(3));
    assert_eq!(zzh(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# 1324 too early\n3412\n1324\n2413\n2314\n1423\n").unwrap();
    let o = zzh(&["shelling", "--order-file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("position 2"));

    let incomplete = dir.path().join("short.txt");
    std::fs::write(&incomplete, "3412\n2413\n").unwrap();
    assert_eq!(zzh(&["shelling", "--order-file", incomplete.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn guards_can_be_lifted() {
    let o = zzh(&["swap-table", "--max", "13", "--force", "--threads", "2"]);
    assert_eq!(o.status.code(), Some(0));

    let o = Command::new(env!("CARGO_BIN_EXE_zzh"))
        .args(["shelling", "--n", "8"])
        .env("ZZH_MAX_N", "11")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1385);

    let o = Command::new(env!("CARGO_BIN_EXE_zzh"))
        .args(["enumerate", "--n", "5"])
        .env("ZZH_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_file_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = zzh(&["ehrhart", "--n", "4", "--max-m", "3", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,m,points\n4,0,1\n4,1,8\n4,2,31\n4,3,85\n");

    let o = zzh(&["hstar", "--n", "4", "--method", "swap", "--format", "csv"]);
    assert_eq!(stdout(&o), "method,k,coefficient\nswap,0,1\nswap,1,3\nswap,2,1\n");
}

#[test]
fn verify_reports_are_byte_identical() {
    let a = zzh(&["verify", "--n", "6", "--format", "json", "--threads", "1"]);
    let b = zzh(&["verify", "--n", "6", "--format", "json", "--threads", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
