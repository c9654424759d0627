use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use surflink_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { sl_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sl_last_error_message()) }.to_str().unwrap().to_owned()
}

fn family(f: u8, k: u32, l: u32, e: [i8; 3]) -> *mut SlBraid {
    let mut b = ptr::null_mut();
    let st = unsafe { sl_braid_family(f as c_char, k, l, e.as_ptr(), false, &mut b) };
    assert_eq!(st, SlStatus::SlOk, "{}", last_error());
    b
}

fn twisted(b: *const SlBraid, n: i64) -> *mut SlLink {
    let mut l = ptr::null_mut();
    assert_eq!(unsafe { sl_link_new_full_twist(b, n, &mut l) }, SlStatus::SlOk);
    l
}

#[test]
fn parse_and_print() {
    let text = CString::new("1,1,-3").unwrap();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { sl_braid_parse(text.as_ptr(), 4, &mut b) }, SlStatus::SlOk);
    let mut strands = 0;
    assert_eq!(unsafe { sl_braid_strands(b, &mut strands) }, SlStatus::SlOk);
    assert_eq!(strands, 4);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sl_braid_to_string(b, &mut s) }, SlStatus::SlOk);
    assert_eq!(take_string(s), "s1^2 s3^-1");
    unsafe { sl_braid_free(b) };
}

#[test]
fn parse_errors_map_to_codes() {
    let mut b = ptr::null_mut();
    let text = CString::new("s5").unwrap();
    assert_eq!(unsafe { sl_braid_parse(text.as_ptr(), 3, &mut b) }, SlStatus::SlGeneratorOutOfRange);
    assert!(last_error().contains("out of range"));
    assert!(b.is_null());
    let text = CString::new("s1 ??").unwrap();
    assert_eq!(unsafe { sl_braid_parse(text.as_ptr(), 3, &mut b) }, SlStatus::SlSyntax);
    assert_eq!(unsafe { sl_braid_parse(ptr::null(), 3, &mut b) }, SlStatus::SlNullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { sl_braid_parse(bad.as_ptr() as *const c_char, 3, &mut b) }, SlStatus::SlInvalidUtf8);
    let mut s = 0;
    assert_eq!(unsafe { sl_braid_strands(ptr::null(), &mut s) }, SlStatus::SlNullPointer);
}

#[test]
fn non_commuting_pair_is_rejected() {
    let (s1, s2) = (CString::new("s1").unwrap(), CString::new("s2").unwrap());
    let (mut a, mut b, mut l) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(sl_braid_parse(s1.as_ptr(), 3, &mut a), SlStatus::SlOk);
        assert_eq!(sl_braid_parse(s2.as_ptr(), 3, &mut b), SlStatus::SlOk);
        assert_eq!(sl_link_new(a, b, &mut l), SlStatus::SlNonCommuting);
        sl_braid_free(a);
        sl_braid_free(b);
    }
}

#[test]
fn x_family_invariants() {
    let b = family(b'X', 1, 1, [1, 1, 1]);
    let l = twisted(b, 1);
    let (mut n, mut t, mut bound) = (0usize, 0i64, 0u64);
    unsafe {
        assert_eq!(sl_link_component_count(l, &mut n), SlStatus::SlOk);
        assert_eq!(n, 4);
        assert_eq!(sl_link_tlk(l, 0, 1, 2, &mut t), SlStatus::SlOk);
        assert_eq!(t, 0);
        assert_eq!(sl_link_tlk(l, 1, 2, 0, &mut t), SlStatus::SlOk);
        assert_eq!(t, 1);
        assert_eq!(sl_link_triple_point_bound(l, &mut bound), SlStatus::SlOk);
        assert_eq!(bound, 16);
        assert_eq!(sl_link_tlk(l, 0, 1, 9, &mut t), SlStatus::SlIndexOutOfRange);
        let mut v = 0i64;
        assert_eq!(sl_link_lk(l, 2, 0, 1, &mut v), SlStatus::SlInvalidArgument);
        sl_link_free(l);
        sl_braid_free(b);
    }
}

#[test]
fn q_family_verdict_and_report() {
    let b = family(b'Q', 3, 0, [1, 1, 1]);
    let l = twisted(b, 1);
    let (mut kind, mut rank) = (SlVerdict::SlInconclusive, 0usize);
    let mut d = 9u8;
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(sl_link_abelian_verdict(l, 0, 0, 0, &mut kind, &mut rank), SlStatus::SlOk);
        assert_eq!((kind, rank), (SlVerdict::SlAbelian, 3));
        assert_eq!(sl_link_dlk(l, 0, 1, &mut d), SlStatus::SlOk);
        assert_eq!(d, 1);
        assert_eq!(sl_link_report_json(l, false, &mut json), SlStatus::SlOk);
    }
    let json = take_string(json);
    assert!(json.contains("\"schema\": 1"));
    assert!(json.contains("\"kind\": \"words\""));
    unsafe {
        sl_link_free(l);
        sl_braid_free(b);
    }
}

#[test]
fn unknown_family_is_reported() {
    let mut b = ptr::null_mut();
    let st = unsafe { sl_braid_family(b'W' as c_char, 1, 1, ptr::null(), false, &mut b) };
    assert_eq!(st, SlStatus::SlInvalidFamily);
    assert!(last_error().contains('W'));
}

#[test]
fn genus_and_constructions() {
    let mut ok = false;
    unsafe {
        assert_eq!(sl_genus_feasible([1u64, 1, 1, 1].as_ptr(), 4, &mut ok), SlStatus::SlOk);
        assert!(ok);
        assert_eq!(sl_genus_feasible([0u64, 0].as_ptr(), 2, &mut ok), SlStatus::SlOk);
        assert!(!ok);
        assert_eq!(sl_genus_feasible(ptr::null(), 2, &mut ok), SlStatus::SlNullPointer);
    }
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sl_construct_json(1, 5, true, &mut json) }, SlStatus::SlOk);
    let text = take_string(json);
    assert!(text.contains("\"total_genus\": 7"), "{text}");
    assert_eq!(unsafe { sl_construct_json(2, 5, false, &mut json) }, SlStatus::SlInvalidArgument);
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/surflink.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["sl_braid_parse", "sl_link_abelian_verdict", "sl_construct_json", "SL_NON_COMMUTING"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(out) = Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c", header]).output()
    else {
        eprintln!("no C compiler found; skipping syntax check");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
