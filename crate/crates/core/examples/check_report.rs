//! Drive the command line in-process: one operation and one seeded suite.

use amoeba_forcing::cli::run;

fn main() {
    let (code, out) = run(["label", "4|00,010"]);
    print!("label (exit {code}): {out}");
    let (code, out) = run(["--seed", "7", "check", "meet"]);
    print!("check meet (exit {code}):\n{out}");
    let (code, out) = run(["--format", "json", "measure", "00,010"]);
    print!("json (exit {code}):\n{out}");
}
