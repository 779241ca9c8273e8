#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Case {
    pub field: String,
    pub norm: String,
    pub expr: String,
}

/// Reads `field norm | expression` lines, skipping comments.
pub fn corpus() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("corpus.txt")).expect("corpus present");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (cfg, expr) = l
                .split_once('|')
                .expect("'|' separates config and expression");
            let mut cfg = cfg.split_whitespace();
            Case {
                field: cfg.next().expect("field").to_string(),
                norm: cfg.next().expect("norm").to_string(),
                expr: expr.trim().to_string(),
            }
        })
        .collect()
}

pub fn cli(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_grassbanach"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

/// Runs the whole corpus in one format; each entry contributes its stdout
/// verbatim, or `error <code>: <stderr>` on failure.
pub fn run_corpus(format: &str) -> String {
    let mut out = String::new();
    for c in corpus() {
        let o = cli(
            &[
                "eval", &c.expr, "--field", &c.field, "--norm", &c.norm, "--format", format,
            ],
            None,
        );
        if o.status.success() {
            out += &String::from_utf8(o.stdout).unwrap();
        } else {
            out += &format!(
                "error {}: {}",
                o.status.code().unwrap_or(-1),
                String::from_utf8_lossy(&o.stderr)
            );
        }
    }
    out
}

/// Golden output for a format; rewritten first when `UPDATE_GOLDEN` is set.
pub fn golden(format: &str) -> String {
    let path = golden_dir().join(format!("corpus.{format}"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, run_corpus(format)).unwrap();
    }
    std::fs::read_to_string(path).expect("golden file present")
}
