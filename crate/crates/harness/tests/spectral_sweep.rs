use enoao_core::spectral::ADR_POINTS;
use enoao_core::{Params64, Scheme, SchemeOrder};
use enoao_harness::adr_sweep;
use enoao_harness::run::write_adr;

#[test]
fn upwind_sweep_follows_its_closed_form() {
    let rows = adr_sweep(Scheme::Upwind(SchemeOrder::Order5), Params64::default(), ADR_POINTS).unwrap();
    assert_eq!(rows.len(), ADR_POINTS / 2 + 1);
    for r in &rows {
        assert!((r.re_adr - r.re_analytic).abs() <= 1e-3, "re at {}", r.kappa);
        assert!((r.im_adr - r.im_analytic).abs() <= 1e-3, "im at {}", r.kappa);
    }
}

#[test]
fn zero_wavenumber_row_vanishes() {
    for scheme in Scheme::BENCHMARK_SET {
        let rows = adr_sweep(scheme, Params64::default(), ADR_POINTS).unwrap();
        assert_eq!((rows[0].kappa, rows[0].re_adr, rows[0].im_adr), (0.0, 0.0, 0.0), "{scheme}");
    }
}

#[test]
fn one_file_per_scheme() {
    let dir = tempfile::tempdir().unwrap();
    for scheme in Scheme::BENCHMARK_SET {
        let rows = adr_sweep(scheme, Params64::default(), 16).unwrap();
        let path = write_adr(dir.path(), scheme, &rows).unwrap();
        let text = std::fs::read_to_string(path).unwrap();
        assert_eq!(text.lines().next(), Some("kappa,re_analytic,im_analytic,re_adr,im_adr"));
        assert_eq!(text.lines().count(), 10);
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 6);
}

#[test]
fn eno_ao5_sweep_is_dissipative() {
    let rows = adr_sweep(Scheme::EnoAo(SchemeOrder::Order5), Params64::default(), ADR_POINTS).unwrap();
    let worst = rows.iter().max_by(|a, b| a.im_adr.total_cmp(&b.im_adr)).unwrap();
    assert!(worst.im_adr <= 0.0, "Im k' = {:e} at k = {}", worst.im_adr, worst.kappa);
}
