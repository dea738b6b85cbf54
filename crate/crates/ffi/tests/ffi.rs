use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use lierep_ffi::*;

fn parse(s: &str) -> *mut LierepAlgebra {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { lierep_algebra_parse(text.as_ptr(), &mut g) }, LierepStatus::Ok);
    g
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { lierep_string_free(p) };
    s
}

fn last_error() -> String {
    let p = lierep_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn invariants() {
    let g = parse("A1+C^4");
    let mut v = 0u64;
    unsafe {
        assert_eq!(lierep_algebra_mu(g, &mut v), LierepStatus::Ok);
        assert_eq!(v, 5);
        assert_eq!(lierep_algebra_dim(g, &mut v), LierepStatus::Ok);
        assert_eq!(v, 7);
        assert_eq!(lierep_algebra_alpha(g, &mut v), LierepStatus::Ok);
        assert_eq!(v, 5);
        let mut s = ptr::null_mut();
        assert_eq!(lierep_algebra_to_string(g, &mut s), LierepStatus::Ok);
        assert_eq!(take_string(s), "A1+C^4");
        lierep_algebra_free(g);
    }
    let e8 = parse("E8");
    unsafe {
        assert_eq!(lierep_algebra_alpha(e8, &mut v), LierepStatus::AlphaUnavailable);
        lierep_algebra_free(e8);
    }
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lierep_nilbound(6, 3, &mut s) }, LierepStatus::Ok);
    assert_eq!(take_string(s), "41");
    assert_eq!(unsafe { lierep_nilbound(3, 4, &mut s) }, LierepStatus::InvalidArgument);
}

#[test]
fn errors() {
    let text = CString::new("A1+").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { lierep_algebra_parse(text.as_ptr(), &mut g) }, LierepStatus::Parse);
    assert!(g.is_null());
    assert!(last_error().contains("position 3"));
    assert_eq!(
        unsafe { lierep_algebra_parse(ptr::null(), &mut g) },
        LierepStatus::NullPointer
    );
    let bytes = [0xffu8, 0];
    assert_eq!(
        unsafe { lierep_algebra_parse(bytes.as_ptr().cast(), &mut g) },
        LierepStatus::InvalidUtf8
    );
    let g2 = parse("G2");
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { lierep_rep_construct(g2, &mut r) }, LierepStatus::Unsupported);
    unsafe {
        lierep_algebra_free(g2);
        lierep_algebra_free(ptr::null_mut());
        lierep_rep_free(ptr::null_mut());
        lierep_string_free(ptr::null_mut());
    }
}

#[test]
fn representation_round_trip() {
    let g = parse("A2+B2+C^3");
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(lierep_rep_construct(g, &mut r), LierepStatus::Ok);
        let mut n = 0usize;
        assert_eq!(lierep_rep_degree(r, &mut n), LierepStatus::Ok);
        assert_eq!(n, 8);
        let mut s = ptr::null_mut();
        assert_eq!(lierep_rep_to_json(r, &mut s), LierepStatus::Ok);
        let json = take_string(s);
        let text = CString::new(json.clone()).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(lierep_rep_from_json(text.as_ptr(), &mut back), LierepStatus::Ok);
        let (mut hom, mut ker) = (false, 7usize);
        assert_eq!(lierep_rep_verify(back, &mut hom, &mut ker), LierepStatus::Ok);
        assert!(hom);
        assert_eq!(ker, 0);

        let broken = CString::new(json.replacen("\"degree\":8", "\"degree\":9", 1)).unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(lierep_rep_from_json(broken.as_ptr(), &mut none), LierepStatus::Format);
        lierep_rep_free(back);
        lierep_rep_free(r);
        lierep_algebra_free(g);
    }
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/lierep.h");
    for name in [
        "lierep_algebra_parse",
        "lierep_algebra_free",
        "lierep_algebra_mu",
        "lierep_rep_construct",
        "lierep_rep_verify",
        "lierep_rep_to_json",
        "lierep_string_free",
        "lierep_last_error",
        "LIEREP_STATUS_UNSUPPORTED",
        "typedef struct LierepRep LierepRep;",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("liblierep_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(out.stdout, b"ok\n");
}
