//! Compiles `tests/c/smoke.c` against the generated header and the static
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // <target>/<profile>/deps/<this test>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib_dir = target_dir();
    assert!(
        lib_dir.join("libsimson_ffi.a").exists(),
        "static library missing in {}",
        lib_dir.display()
    );
    let out = tempfile_path("simson_smoke");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(lib_dir.join("libsimson_ffi.a"))
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler is required for this test (set CC)");
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(
        run.status.success(),
        "smoke program failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/simson.h")).unwrap();
    for name in [
        "simson_tolerance_default",
        "simson_last_error_message",
        "simson_polygon_from_vertices",
        "simson_polygon_equidistant",
        "simson_polygon_construct",
        "simson_polygon_free",
        "simson_polygon_len",
        "simson_polygon_vertex",
        "simson_polygon_simson_point",
        "simson_polygon_find_point",
        "simson_polygon_verify",
        "simson_string_free",
        "simson_approx_optimal",
        "simson_miquel_point",
        "typedef struct SimsonPolygonHandle SimsonPolygonHandle;",
        "SIMSON_STATUS_NOT_FOUND = 4",
        "#define SIMSON_CHECK_ALL",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}
