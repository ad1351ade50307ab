use std::ffi::{CStr, CString};
use std::ptr;

use ldend_ffi::*;

const P2: &str = r#"{"class":"pre_lie","dim":2,"ops":{"circ":[[1,1,1,"1"],[1,2,2,"1"]]}}"#;
const N2: &str = r#"{"dim":2,"ops":{"circ":[[1,2,1,"1"],[2,1,2,"1"]]}}"#;
const RB2: &str = r#"{"rows":2,"cols":2,"entries":[[1,2,"1"]]}"#;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut libc::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ldend_string_free(s);
    out
}

unsafe fn algebra(json: &str) -> *mut LdendAlgebra {
    let mut a = ptr::null_mut();
    assert_eq!(
        ldend_algebra_from_json(c(json).as_ptr(), &mut a),
        LdendStatus::Ok
    );
    a
}

#[test]
fn round_trip_and_check() {
    unsafe {
        let a = algebra(P2);
        assert_eq!(ldend_algebra_dim(a), 2);
        let mut s = ptr::null_mut();
        assert_eq!(ldend_algebra_to_json(a, &mut s), LdendStatus::Ok);
        assert_eq!(format!("{}\n", P2), take(s));

        let mut report = ptr::null_mut();
        assert_eq!(
            ldend_check_class(a, c("pre_lie").as_ptr(), &mut report),
            LdendStatus::Ok
        );
        assert!(take(report).contains("\"passed\":true"));
        ldend_algebra_free(a);

        let n2 = algebra(N2);
        let mut report = ptr::null_mut();
        assert_eq!(
            ldend_check_class(n2, c("pre_lie").as_ptr(), &mut report),
            LdendStatus::CheckFailed
        );
        assert!(take(report).contains("\"indices\":[1,2,1]"));
        // the report is optional
        assert_eq!(
            ldend_check_class(n2, c("pre_lie").as_ptr(), ptr::null_mut()),
            LdendStatus::CheckFailed
        );
        ldend_algebra_free(n2);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(
            ldend_algebra_from_json(c("{").as_ptr(), &mut a),
            LdendStatus::Malformed
        );
        assert!(a.is_null());
        let msg = CStr::from_ptr(ldend_last_error()).to_str().unwrap();
        assert!(msg.contains("invalid JSON"), "{msg}");

        assert_eq!(
            ldend_algebra_from_json(ptr::null(), &mut a),
            LdendStatus::NullArgument
        );
        assert_eq!(
            ldend_algebra_from_json(c(P2).as_ptr(), ptr::null_mut()),
            LdendStatus::NullArgument
        );

        let p2 = algebra(P2);
        assert_eq!(
            ldend_check_class(p2, c("nope").as_ptr(), ptr::null_mut()),
            LdendStatus::Unknown
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            ldend_derive(p2, c("nope").as_ptr(), &mut out),
            LdendStatus::Unknown
        );
        // success clears the message
        assert_eq!(
            ldend_check_class(p2, c("pre_lie").as_ptr(), ptr::null_mut()),
            LdendStatus::Ok
        );
        assert!(ldend_last_error().is_null());
        ldend_algebra_free(p2);

        ldend_algebra_free(ptr::null_mut());
        ldend_string_free(ptr::null_mut());
    }
}

#[test]
fn rota_baxter_induce_and_derive() {
    unsafe {
        let p2 = algebra(P2);
        let mut rb = ptr::null_mut();
        assert_eq!(
            ldend_map_from_json(c(RB2).as_ptr(), &mut rb),
            LdendStatus::Ok
        );
        assert_eq!(
            ldend_check_rota_baxter(rb, p2, ptr::null_mut()),
            LdendStatus::Ok
        );

        let mut ld = ptr::null_mut();
        assert_eq!(
            ldend_induce_from_rota_baxter(rb, p2, &mut ld),
            LdendStatus::Ok
        );
        assert_eq!(
            ldend_check_class(ld, c("l_dendriform").as_ptr(), ptr::null_mut()),
            LdendStatus::Ok
        );
        let mut v = ptr::null_mut();
        assert_eq!(
            ldend_derive(ld, c("vertical").as_ptr(), &mut v),
            LdendStatus::Ok
        );
        assert_eq!(
            ldend_check_class(v, c("pre_lie").as_ptr(), ptr::null_mut()),
            LdendStatus::Ok
        );

        let mut id = ptr::null_mut();
        let id_json = r#"{"rows":2,"cols":2,"entries":[[1,1,"1"],[2,2,"1"]]}"#;
        assert_eq!(
            ldend_map_from_json(c(id_json).as_ptr(), &mut id),
            LdendStatus::Ok
        );
        let mut bad = ptr::null_mut();
        assert_eq!(
            ldend_induce_from_rota_baxter(id, p2, &mut bad),
            LdendStatus::Precondition
        );

        for h in [p2, ld, v] {
            ldend_algebra_free(h);
        }
        ldend_map_free(rb);
        ldend_map_free(id);
    }
}

#[test]
fn residuals() {
    unsafe {
        let p2 = algebra(P2);
        let mut r = ptr::null_mut();
        let e12 = r#"{"dim":2,"rank":2,"entries":[[1,2,"1"]]}"#;
        assert_eq!(
            ldend_tensor2_from_json(c(e12).as_ptr(), &mut r),
            LdendStatus::Ok
        );
        let mut res = ptr::null_mut();
        assert_eq!(
            ldend_residual(p2, r, c("eq-2.9").as_ptr(), &mut res),
            LdendStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(ldend_tensor3_to_json(res, &mut s), LdendStatus::Ok);
        let text = take(s);
        // −r12∘r13 leaves e1∘e1 ⊗ e2 ⊗ e2; the other two terms vanish
        assert_eq!(
            text,
            "{\"dim\":2,\"entries\":[[1,2,2,\"-1\"]],\"rank\":3}\n"
        );
        assert_eq!(ldend_tensor3_support(res), 1);

        let mut missing = ptr::null_mut();
        assert_eq!(
            ldend_residual(p2, r, c("eq-4.8").as_ptr(), &mut missing),
            LdendStatus::Unknown
        );
        ldend_tensor3_free(res);
        ldend_tensor2_free(r);
        ldend_algebra_free(p2);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/ldend.h");
    for name in [
        "ldend_last_error",
        "ldend_string_free",
        "ldend_algebra_from_json",
        "ldend_algebra_to_json",
        "ldend_algebra_dim",
        "ldend_algebra_free",
        "ldend_map_from_json",
        "ldend_map_free",
        "ldend_tensor2_from_json",
        "ldend_tensor2_free",
        "ldend_tensor3_to_json",
        "ldend_tensor3_support",
        "ldend_tensor3_free",
        "ldend_check_class",
        "ldend_derive",
        "ldend_residual",
        "ldend_check_rota_baxter",
        "ldend_induce_from_rota_baxter",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name}");
    }
    assert!(header.contains("LDEND_STATUS_CHECK_FAILED = 1"));
}
