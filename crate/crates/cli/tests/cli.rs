use std::process::{Command, Output};

fn cyop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cy2_of_32() {
    let o = cyop(&["cy2", "32", "--order", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "PASS");
}

#[test]
fn printed_130_quartic_fails_cy2() {
    let o = cyop(&["cy2", "130/pullback", "--order", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn seq_values() {
    assert_eq!(stdout(&cyop(&["seq", "60", "-n", "1"])).trim(), "8");
    let o = cyop(&["seq", "32-Zudilin", "-n", "1", "--as-printed"]);
    assert_eq!(stdout(&o).trim(), "-12");
    assert!(!o.stderr.is_empty(), "erratum warning on stderr");
}

#[test]
fn zeta4_small() {
    let o = cyop(&["zeta4", "-n", "1", "--digits", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("13/12"), "{text}");
    assert!(text.contains("1.0823232337"), "{text}");
}

#[test]
fn json_output_parses() {
    let o = cyop(&["--json", "ct188", "-n", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(cyop(&["seq", "nope", "-n", "1"]).status.code(), Some(2));
    assert_eq!(cyop(&["frobenius"]).status.code(), Some(2));
    assert_eq!(cyop(&["cy2", "T^4 - x*(T+1)^3*(T+2)", "--order", "4"]).status.code(), Some(1));
}

#[test]
fn verify_all_is_deterministic() {
    let a = cyop(&["--json", "verify", "--all"]);
    let b = cyop(&["--json", "verify", "--all"]);
    let c = cyop(&["--json", "verify", "--all", "--parallel"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["reports"].as_array().map(Vec::len), Some(51));
}
