//! Every example builds and runs cleanly.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: &[&str] = &["clopen_algebra", "stem_embedding", "cohen_labels", "null_coding", "aux_posets", "check_report"];

#[test]
fn examples_run() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("Cargo.toml");
    for name in EXAMPLES {
        let out = Command::new(env!("CARGO"))
            .args(["run", "--quiet", "--example", name, "--manifest-path"])
            .arg(&manifest)
            .output()
            .expect("cargo runs");
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
