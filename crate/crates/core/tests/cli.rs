//! The command line, driven in-process.

use amoeba_forcing::cli::run;

fn ok(args: &[&str]) -> String {
    let (code, out) = run(args.iter().copied());
    assert_eq!(code, 0, "{args:?}: {out}");
    out.trim_end().to_string()
}

#[test]
fn single_operations() {
    assert_eq!(ok(&["canon", "00,01"]), "0");
    assert_eq!(ok(&["measure", "00,010"]), "3/8");
    assert_eq!(ok(&["label", "4|00,010"]), "0,2,0");
    assert_eq!(ok(&["densify", "3|00"]), "00,010,1010");
    assert_eq!(ok(&["densify", "--mode", "app", "2|-"]), "4|000,010,100");
    assert_eq!(ok(&["window", "4|00,010"]), "n=2 stem=3/8 penult=1/4 tail=0");
    assert_eq!(ok(&["enum", "91"]), "12");
    assert_eq!(ok(&["code", "12"]), "91");
    assert_eq!(ok(&["bstep", ";const:0", "0,0,10;const:0", "2"]), "[3/2^2, 4/2^2)");
}

#[test]
fn embed_uses_the_freeze_depth() {
    assert_eq!(ok(&["embed", "00"]), "3|00");
    assert_eq!(ok(&["embed", "-"]), "2|-");
}

#[test]
fn failures_and_usage_errors() {
    let (code, out) = run(["canon", "0,2"]);
    assert_eq!(code, 2);
    assert!(out.contains("0,2"), "{out}");
    assert_eq!(run(["label", "2|-"]).0, 1);
    assert_eq!(run(["frobnicate"]).0, 2);
    assert_eq!(run(["check", "nope"]).0, 2);
}

#[test]
fn json_mode_adds_a_summary() {
    let out = ok(&["--format", "json", "measure", "00,010"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"values\":{\"measure\":\"3/8\"}"));
    assert!(lines[1].starts_with("{\"summary\":"));
}

#[test]
fn check_reports_are_seeded() {
    let a = ok(&["--seed", "5", "check", "coding"]);
    assert_eq!(a, ok(&["--seed", "5", "check", "coding"]));
    assert!(a.ends_with("seed 5"), "{a}");
    assert!(a.lines().skip(1).all(|l| l.contains(" pass ") || l.starts_with("summary")), "{a}");
}
