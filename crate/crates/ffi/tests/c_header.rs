//! Compiles and runs a small C program against the generated header and the
//! static library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "holometric.h"

int main(void) {
    const char *text =
        "[algebra]\nbasis = A, B, C\n[brackets]\n\"A,B\" = B\n\"A,C\" = -C\n";
    HmSpec *spec = NULL;
    if (hm_spec_parse(text, &spec) != HM_STATUS_OK) return 1;
    char *cls = NULL;
    if (hm_spec_classify(spec, &cls) != HM_STATUS_OK) return 2;
    int ok = strcmp(cls, "SOL") == 0;
    hm_string_free(cls);
    hm_spec_free(spec);
    if (hm_spec_parse("[brackets]\n", &spec) != HM_STATUS_PARSE_ERROR) return 3;
    if (hm_last_error() == NULL) return 4;
    printf("%s\n", ok ? "SOL" : "?");
    return ok ? 0 : 5;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // the test binary lives in target/<profile>/deps; the static library one level up
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libholometric_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built, skipping", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let bin = dir.path().join("main");
    let status = Command::new(cc)
        .arg(&src)
        .arg("-std=c99")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "SOL");
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
