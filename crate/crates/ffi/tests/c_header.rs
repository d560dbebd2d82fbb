//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "mubasis.h"

int main(void) {
    const char *polys[4] = {"s", "t", "s*t", "1"};
    MbImplicit *h = NULL;
    MbStatus st = mb_implicitize_surface(polys, 4, 0, &h);
    if (st != MB_STATUS_OK) {
        fprintf(stderr, "%s: %s\n", mb_status_str(st), mb_last_error());
        return 1;
    }
    printf("%s|%u|%u\n", mb_implicit_text(h, MB_FRAME_ORIGINAL), mb_implicit_k(h), mb_implicit_degree(h));
    mb_implicit_free(h);

    const char *bad[2] = {"s", "1"};
    st = mb_implicitize_curve(bad, 2, 0, &h);
    printf("%d|%s\n", (int)st, h == NULL ? "null" : "set");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/<test binary>
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let lib = target_dir().join("libmubasis_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let work = std::env::temp_dir().join(format!("mubasis-ffi-c-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let exe = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x*y - z*w|1|2\n3|null\n");
    std::fs::remove_dir_all(work).unwrap();
}
