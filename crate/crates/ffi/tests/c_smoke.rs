//! Compiles `smoke.c` against the generated header and the static library
//! and runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

/// `target/<profile>/deps`, where cargo leaves the library built for this
/// test run.
fn deps_dir() -> PathBuf {
    std::env::current_exe().unwrap().parent().map(Path::to_path_buf).unwrap()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib = deps_dir().join("libserpentine_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available");
    assert!(status.success(), "compilation failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "c smoke test ok\n");
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/serpentine.h")).unwrap();
    for name in [
        "serp_run",
        "serp_report_json",
        "serp_tableau_parse",
        "serp_last_error",
        "typedef struct SerpTableau SerpTableau",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
