use tqft_cert::certify::{certify_level, odd_part, CertificateRecord, Route};

#[test]
fn large_odd_part_takes_the_burau_route() {
    for p in 1..=400u64 {
        let cert = certify_level(p);
        if odd_part(p) >= 7 {
            assert_eq!(cert.route_name(), "odd_burau", "p = {p}");
        } else {
            assert_ne!(cert.route_name(), "odd_burau", "p = {p}");
        }
    }
}

#[test]
fn even_route_needs_four_dividing_p() {
    for p in 1..=400u64 {
        let cert = certify_level(p);
        if let Route::EvenCoxeter(_) = cert.route {
            assert_eq!(p % 4, 0, "p = {p}");
            assert!(p >= 16);
        }
    }
}

#[test]
fn uncertified_levels_explain_themselves() {
    for p in 1..=200u64 {
        let cert = certify_level(p);
        let record = cert.record();
        let text = serde_json::to_string(&record).unwrap();
        let back: CertificateRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, record);
        if !cert.is_certified() {
            assert!(!record.failed.unwrap_or_default().is_empty(), "p = {p}");
        }
    }
}
