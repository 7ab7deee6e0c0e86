use super::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn last() -> String {
    CStr::from_ptr(wq_last_error()).to_string_lossy().into_owned()
}

#[test]
fn session_and_report_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        let cfg = cstr("type = \"A\"\nrank = 1\ns = [1]\n");
        assert_eq!(wq_session_new(cfg.as_ptr(), &mut s), WqStatus::Ok);
        assert_eq!(wq_session_set_seed(s, 5), WqStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(wq_run(s, cstr("root-system").as_ptr(), &mut r), WqStatus::Ok);
        let json = CStr::from_ptr(wq_report_json(r)).to_str().unwrap();
        assert!(json.contains("\"seed\": 5"));
        assert!(CStr::from_ptr(wq_report_text(r)).to_str().unwrap().contains("PASS"));
        assert_eq!(wq_report_failed(r), 0);
        let (mut p, mut f) = (0usize, 0usize);
        assert_eq!(wq_report_counts(r, &mut p, &mut f, ptr::null_mut()), WqStatus::Ok);
        assert_eq!((p, f), (1, 0));
        wq_report_free(r);
        wq_session_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(wq_session_new(cstr("type = \"A\"\nrank = x\n").as_ptr(), &mut s), WqStatus::Config);
        assert!(s.is_null());
        assert!(last().contains("line 2"), "{}", last());
        assert_eq!(wq_session_new(ptr::null(), &mut s), WqStatus::NullPointer);
        assert_eq!(wq_session_new(cstr("type = \"A\"\nrank = 1\n").as_ptr(), &mut s), WqStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(wq_run(s, cstr("nope").as_ptr(), &mut r), WqStatus::UnknownCommand);
        assert!(r.is_null());
        assert_eq!(wq_run(ptr::null(), cstr("all").as_ptr(), &mut r), WqStatus::NullPointer);
        assert_eq!(wq_report_failed(ptr::null()), -1);
        assert!(wq_report_json(ptr::null()).is_null());
        wq_session_free(s);
        wq_session_free(ptr::null_mut());
        wq_report_free(ptr::null_mut());
    }
}

#[test]
fn qbinom_matches_core() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(wq_qbinom(4, 2, 1, 1, &mut out), WqStatus::Ok);
        let got = CStr::from_ptr(out).to_str().unwrap().to_string();
        wq_string_free(out);
        let expect = qbinom(4, 2, SubscriptedQ::new(1, 1)).unwrap().to_string();
        assert_eq!(got, expect);
        assert_eq!(wq_qbinom(2, 3, 1, 1, &mut out), WqStatus::Arithmetic);
        assert!(out.is_null());
        assert_eq!(wq_qbinom(2, 1, 0, 1, &mut out), WqStatus::Arithmetic);
    }
}

#[test]
fn header_declares_the_abi() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/wq.h")).unwrap();
    for name in ["wq_session_new", "wq_run", "wq_report_json", "wq_report_free", "wq_qbinom", "wq_last_error", "WQ_STATUS_OK", "WqSession"] {
        assert!(h.contains(name), "{} missing from header", name);
    }
}
