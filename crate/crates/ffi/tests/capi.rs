use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use kneser_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(kneser_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn octahedron_betti_through_handle() {
    let mut h: *mut KneserComplex = ptr::null_mut();
    unsafe {
        assert_eq!(kneser_complex_new_kneser(2, 0, &mut h), KneserStatus::Ok);
        assert_eq!(kneser_complex_vertex_count(h), 6);
        let mut edges = 0;
        assert_eq!(kneser_complex_count_simplices(h, 1, &mut edges), KneserStatus::Ok);
        assert_eq!(edges, 12);
        let mut b = [u64::MAX; 4];
        assert_eq!(kneser_complex_betti(h, 3, 3, 0, b.as_mut_ptr(), b.len()), KneserStatus::Ok);
        assert_eq!(b, [0, 0, 1, 0]);
        kneser_complex_free(h);
    }
    assert_eq!(last_error(), "");
}

#[test]
fn kg21_is_wedge_of_four_spheres() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(kneser_complex_new(2, 5, 2, &mut h), KneserStatus::Ok);
        let mut b = [0u64; 4];
        assert_eq!(kneser_complex_betti(h, 2, 3, 0, b.as_mut_ptr(), 4), KneserStatus::Ok);
        assert_eq!(b, [0, 0, 4, 0]);
        kneser_complex_free(h);
    }
}

#[test]
fn errors_are_reported() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(kneser_complex_new(3, 2, 4, &mut h), KneserStatus::InvalidInput);
        assert!(h.is_null());
        assert!(last_error().contains("invalid input"));

        assert_eq!(kneser_complex_new(2, 4, 2, ptr::null_mut()), KneserStatus::NullPointer);

        assert_eq!(kneser_complex_new(2, 4, 2, &mut h), KneserStatus::Ok);
        let mut b = [0u64; 2];
        assert_eq!(kneser_complex_betti(h, 2, 3, 0, b.as_mut_ptr(), 2), KneserStatus::BufferTooSmall);
        assert_eq!(kneser_complex_betti(h, 4, 1, 0, b.as_mut_ptr(), 2), KneserStatus::InvalidInput);
        assert_eq!(kneser_complex_betti(h, 2, 1, 3, b.as_mut_ptr(), 2), KneserStatus::ResourceCap);
        assert!(last_error().contains("max_simplices"));
        kneser_complex_free(h);
        kneser_complex_free(ptr::null_mut());
        assert_eq!(kneser_complex_vertex_count(ptr::null()), 0);
    }
}

#[test]
fn bounds() {
    let mut v = 0u64;
    unsafe {
        assert_eq!(kneser_bigdim_bound(4, 2, &mut v), KneserStatus::Ok);
        assert_eq!(v, 45);
        assert_eq!(kneser_bigdim_bound(2, 2, &mut v), KneserStatus::InvalidInput);
        assert_eq!(kneser_smalldim_bound(7, 29, 9, &mut v), KneserStatus::Ok);
        assert_eq!(v, 812);
        let (mut c, mut num, mut den) = (0i64, 0u64, 0u64);
        assert_eq!(kneser_connectivity_bound(4, 1, &mut c, &mut num, &mut den), KneserStatus::Ok);
        assert_eq!((c, num, den), (11, 126, 5));
        assert_eq!(
            kneser_connectivity_bound(4, 1, ptr::null_mut(), &mut num, &mut den),
            KneserStatus::NullPointer
        );
        assert_eq!(kneser_bigdim_bound(40, 60, &mut v), KneserStatus::Overflow);
    }
}

#[test]
fn certificate_rank() {
    let mut r = 0u64;
    unsafe {
        assert_eq!(kneser_certificate_rank(3, 7, 2, &mut r), KneserStatus::Ok);
        assert_eq!(r, 7);
        assert_eq!(kneser_certificate_rank(2, 7, 2, &mut r), KneserStatus::InvalidInput);
    }
}

#[test]
fn header_is_current_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/kneser.h");
    let text = std::fs::read_to_string(&header).expect("header generated by build.rs");
    for sym in [
        "kneser_last_error",
        "kneser_complex_new",
        "kneser_complex_new_kneser",
        "kneser_complex_free",
        "kneser_complex_vertex_count",
        "kneser_complex_count_simplices",
        "kneser_complex_betti",
        "kneser_bigdim_bound",
        "kneser_smalldim_bound",
        "kneser_connectivity_bound",
        "kneser_certificate_rank",
        "typedef struct KneserComplex KneserComplex",
        "KNESER_STATUS_RESOURCE_CAP = 3",
    ] {
        assert!(text.contains(sym), "header lacks {sym}");
    }
    // a syntax check needs a C compiler; skip quietly when there is none
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"])
        .arg(&header)
        .output()
    else {
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
