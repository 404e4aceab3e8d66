use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use absorb_ffi::*;

fn ok(s: AbsorbStatus) {
    if s != AbsorbStatus::Ok {
        let msg = unsafe { CStr::from_ptr(absorb_last_error()) };
        panic!("{s:?}: {}", msg.to_string_lossy());
    }
}

unsafe fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
    absorb_string_free(s);
    v
}

#[test]
fn z8_round_trip() {
    unsafe {
        let spec = CString::new("Z8").unwrap();
        let mut ring = ptr::null_mut();
        ok(absorb_ring_parse(spec.as_ptr(), &mut ring));
        assert_eq!(absorb_ring_cardinality(ring), 8);

        let mut m = ptr::null_mut();
        ok(absorb_module_regular(ring, &mut m));
        assert_eq!(absorb_module_width(m), 1);
        let mut count = 0;
        ok(absorb_module_submodule_count(m, &mut count));
        assert_eq!(count, 4);

        let four = [4u32];
        let mut n = ptr::null_mut();
        ok(absorb_submodule_generated(m, four.as_ptr(), 1, &mut n));
        assert_eq!(absorb_submodule_len(n), 2);
        let mut holds = false;
        for (p, want) in [("c2a", true), ("classical-prime", false), ("2abs", true), ("prime", false)] {
            let p = CString::new(p).unwrap();
            ok(absorb_submodule_is(n, p.as_ptr(), &mut holds));
            assert_eq!(holds, want);
        }
        absorb_submodule_free(n);

        let mut zero = ptr::null_mut();
        ok(absorb_module_submodule_at(m, 0, &mut zero));
        assert_eq!(absorb_submodule_len(zero), 1);
        absorb_submodule_free(zero);

        let mut json = ptr::null_mut();
        ok(absorb_classify_json(m, &mut json));
        let v = take(json);
        assert_eq!(v["minimal_c2a"][0], "(4)");
        assert_eq!(v["submodules"].as_array().unwrap().len(), 3);

        absorb_module_free(m);
        absorb_ring_free(ring);
    }
}

#[test]
fn product_ring_and_inline_module() {
    unsafe {
        let moduli = [2u32, 3];
        let mut ring = ptr::null_mut();
        ok(absorb_ring_new(moduli.as_ptr(), 2, &mut ring));
        assert_eq!(absorb_ring_cardinality(ring), 6);
        absorb_ring_free(ring);

        let spec = CString::new("Z4").unwrap();
        ok(absorb_ring_parse(spec.as_ptr(), &mut ring));
        let orders = CString::new("2,4").unwrap();
        let mut m = ptr::null_mut();
        ok(absorb_module_parse(ring, orders.as_ptr(), &mut m));
        assert_eq!(absorb_module_cardinality(m), 8);
        assert_eq!(absorb_module_width(m), 2);
        absorb_module_free(m);
        absorb_ring_free(ring);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut ring = ptr::null_mut();
        let bad = CString::new("Q7").unwrap();
        assert_eq!(absorb_ring_parse(bad.as_ptr(), &mut ring), AbsorbStatus::Parse);
        assert!(ring.is_null());
        assert!(!absorb_last_error().is_null());

        assert_eq!(absorb_ring_parse(ptr::null(), &mut ring), AbsorbStatus::NullPointer);
        let zero = [0u32];
        assert_eq!(absorb_ring_new(zero.as_ptr(), 1, &mut ring), AbsorbStatus::InvalidInput);

        let spec = CString::new("Z6").unwrap();
        ok(absorb_ring_parse(spec.as_ptr(), &mut ring));
        assert!(absorb_last_error().is_null());
        let mut m = ptr::null_mut();
        ok(absorb_module_regular(ring, &mut m));
        let mut whole = ptr::null_mut();
        ok(absorb_module_submodule_at(m, 3, &mut whole));
        let c2a = CString::new("c2a").unwrap();
        let mut holds = false;
        assert_eq!(absorb_submodule_is(whole, c2a.as_ptr(), &mut holds), AbsorbStatus::Improper);
        let nope = CString::new("nope").unwrap();
        assert_eq!(absorb_submodule_is(whole, nope.as_ptr(), &mut holds), AbsorbStatus::Parse);
        let mut out = ptr::null_mut();
        assert_eq!(absorb_module_submodule_at(m, 4, &mut out), AbsorbStatus::OutOfRange);
        let mod4 = CString::new("4").unwrap();
        let mut bad_m = ptr::null_mut();
        assert_ne!(absorb_module_parse(ring, mod4.as_ptr(), &mut bad_m), AbsorbStatus::Ok);

        absorb_submodule_free(whole);
        absorb_module_free(m);
        absorb_ring_free(ring);
        absorb_ring_free(ptr::null_mut());
        absorb_string_free(ptr::null_mut());
        assert_eq!(absorb_ring_cardinality(ptr::null()), 0);
    }
}

#[test]
fn search_and_verify() {
    unsafe {
        let (l, r) = (CString::new("c2a").unwrap(), CString::new("classical-prime").unwrap());
        let mut out = ptr::null_mut();
        let mut found = false;
        ok(absorb_search_json(l.as_ptr(), r.as_ptr(), 8, &mut out, &mut found));
        assert!(found);
        let v = take(out);
        assert_eq!(v["outcome"], "witness");
        assert_eq!(v["instance"]["ring"], "Z4");

        let suites = CString::new("T-MAIN,T-MIN").unwrap();
        let mut passed = false;
        ok(absorb_verify_json(suites.as_ptr(), 8, &mut out, &mut passed));
        assert!(passed);
        let v = take(out);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["suites"].as_array().unwrap().len(), 2);

        let bad = CString::new("T-NOPE").unwrap();
        assert_eq!(absorb_verify_json(bad.as_ptr(), 8, &mut out, &mut passed), AbsorbStatus::Parse);
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = format!("{dir}/include/absorb.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["absorb_ring_new", "absorb_classify_json", "absorb_string_free", "ABSORB_STATUS_OK"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(out) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping compile check");
        return;
    };
    assert!(out.status.success());
    let src = std::env::temp_dir().join(format!("absorb_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"absorb.h\"\n\
         int main(void) {\n\
           AbsorbRing *r = NULL;\n\
           AbsorbStatus s = absorb_ring_parse(\"Z8\", &r);\n\
           absorb_ring_free(r);\n\
           return s == ABSORB_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}
