//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them.

use std::process::Command;
use std::time::{Duration, Instant};

use higgs_betti::closed_forms::{
    binomial_extra, bivariate_route, corollary_closed_form, lemma_closed, lemma_direct,
    residue_combination, BinomialRoute,
};
use higgs_betti::cohomology::{bg_series, sym_oracle, sym_series};
use higgs_betti::series::{rat, TruncSeries};
use higgs_betti::strata::{
    d_max, invariant_part_series, kirwan_monotonicity_check, moduli_series, semistable_series,
    stratum_difference, stratum_space_series, Violation,
};
use higgs_betti::{Determinant, ModuliSpec, SurfaceSpec};

const DETS: [Determinant; 2] = [Determinant::Fixed, Determinant::NonFixed];

fn report(id: u32, title: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("[PASS] AC{id:02} {title}: {detail}"),
        Err(detail) => {
            println!("[FAIL] AC{id:02} {title}: {detail}");
            panic!("AC{id:02} failed: {detail}");
        }
    }
}

fn surface(g: u32) -> SurfaceSpec {
    SurfaceSpec::new(g).unwrap()
}

fn all_equal(routes: &[(&str, TruncSeries)]) -> Result<(), String> {
    let (n0, s0) = &routes[0];
    for (n, s) in &routes[1..] {
        if let Some(k) = s0.first_mismatch(s) {
            return Err(format!("{n0} vs {n} differ at k={k}: {} vs {}", s0.coeff(k), s.coeff(k)));
        }
    }
    Ok(())
}

#[test]
fn ac01_genus_two_anchor_via_cli() {
    let result = (|| {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_higgs-betti"))
            .args(["betti", "-g", "2", "--degree", "1", "--determinant", "fixed"])
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if !out.status.success() {
            return Err(format!("exit status {:?}", out.status.code()));
        }
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        let row = text
            .lines()
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .find(|cols| cols.first() == Some(&"5"))
            .ok_or("no row for k=5")?;
        if row.get(1) != Some(&"34") {
            return Err(format!("row k=5 reads {row:?}"));
        }
        if elapsed >= Duration::from_secs(1) {
            return Err(format!("took {elapsed:?}"));
        }
        Ok(format!("b_5 = 34 in {elapsed:?}"))
    })();
    report(1, "genus-2 degree-1 fixed b_5 = 34", result);
}

#[test]
fn ac02_classifying_space_anchor() {
    let b5 = bg_series(surface(2), Determinant::Fixed, 10).coeff(5);
    let result = if b5 == rat(4) {
        Ok("b_5(BG) = 4".to_string())
    } else {
        Err(format!("b_5(BG) = {b5}"))
    };
    report(2, "genus-2 SU(2) gauge group b_5 = 4", result);
}

#[test]
fn ac03_stratified_equals_closed_form() {
    let start = Instant::now();
    let result = (|| {
        for g in 2..=6u32 {
            let n = 6 * g as usize + 10;
            for det in DETS {
                let spec = ModuliSpec::new(g, 0, det, n).unwrap();
                let stratified = semistable_series(&spec).map_err(|e| e.to_string())?;
                let closed = corollary_closed_form(surface(g), det, n);
                all_equal(&[("stratified", stratified), ("closed", closed)])
                    .map_err(|e| format!("g={g} {det}: {e}"))?;
            }
        }
        let elapsed = start.elapsed();
        if elapsed >= Duration::from_secs(30) {
            return Err(format!("took {elapsed:?}"));
        }
        Ok(format!("g=2..6, both determinants, N=6g+10, in {elapsed:?}"))
    })();
    report(3, "stratified sum equals closed form (degree 0)", result);
}

#[test]
fn ac04_lemma_four_way_agreement() {
    let result = (|| {
        for g in 2..=8u32 {
            let s = surface(g);
            let n = 4 * g as usize + 12;
            let routes = [
                ("direct", lemma_direct(s, n)),
                ("closed", lemma_closed(s, n)),
                ("residues", residue_combination(s, n)),
                ("bivariate", bivariate_route(s, n)),
            ];
            all_equal(&routes).map_err(|e| format!("g={g}: {e}"))?;
            if g == 2 {
                let t6 = TruncSeries::monomial(rat(1), 6, n);
                if routes[0].1 != t6 {
                    return Err(format!("g=2 gives {}", routes[0].1));
                }
            }
        }
        Ok("g=2..8 at N=4g+12; g=2 is exactly t^6".to_string())
    })();
    report(4, "direct = closed = residues = bivariate", result);
}

#[test]
fn ac05_binomial_identity() {
    let result = (|| {
        for g in 2..=10u32 {
            let s = surface(g);
            let n = 6 * g as usize;
            all_equal(&[
                ("direct", binomial_extra(s, BinomialRoute::Direct, n)),
                ("closed", binomial_extra(s, BinomialRoute::Closed, n)),
            ])
            .map_err(|e| format!("g={g}: {e}"))?;
        }
        Ok("g=2..10".to_string())
    })();
    report(5, "binomial term direct = closed", result);
}

#[test]
fn ac06_macdonald_matches_enumeration() {
    let result = (|| {
        for g in 2..=4u32 {
            let s = surface(g);
            for n in 0..=12usize {
                let gf = sym_series(s, n, 2 * n);
                let oracle = sym_oracle(s, n);
                all_equal(&[("macdonald", gf.clone()), ("enumeration", oracle)])
                    .map_err(|e| format!("g={g} n={n}: {e}"))?;
                if n <= 2 * g as usize - 2 {
                    for k in 0..=2 * n {
                        if gf.coeff(k) != gf.coeff(2 * n - k) {
                            return Err(format!("g={g} n={n}: b_{k} != b_{}", 2 * n - k));
                        }
                    }
                }
            }
        }
        Ok("g=2..4, n=0..12; palindromic for n <= 2g-2".to_string())
    })();
    report(6, "MacDonald series equals enumeration oracle", result);
}

fn every_spec(genera: std::ops::RangeInclusive<u32>) -> Vec<ModuliSpec> {
    let mut out = Vec::new();
    for g in genera {
        for de in 0..=1u8 {
            for det in DETS {
                out.push(ModuliSpec::with_default_truncation(g, de, det).unwrap());
            }
        }
    }
    out
}

fn label(spec: &ModuliSpec) -> String {
    format!("g={} d_E={} {}", spec.genus(), spec.degree(), spec.determinant())
}

#[test]
fn ac07_series_of_spaces_are_nonnegative_integral() {
    let result = (|| {
        let mut count = 0;
        for spec in every_spec(2..=5) {
            let l = label(&spec);
            semistable_series(&spec)
                .and_then(|s| s.betti_numbers("semistable"))
                .map_err(|e| format!("{l}: {e}"))?;
            moduli_series(&spec)
                .and_then(|s| s.betti_numbers("moduli"))
                .map_err(|e| format!("{l}: {e}"))?;
            for d in 0..=d_max(&spec) {
                stratum_space_series(&spec, d)
                    .and_then(|s| s.betti_numbers("X_d"))
                    .map_err(|e| format!("{l} X_{d}: {e}"))?;
                count += 1;
            }
        }
        Ok(format!("g=2..5, four variants, {count} stratum spaces"))
    })();
    report(7, "nonnegative integer Betti numbers", result);
}

#[test]
fn ac08_telescoping() {
    let result = (|| {
        for spec in every_spec(2..=5) {
            let mut acc = semistable_series(&spec).map_err(|e| e.to_string())?;
            for d in 1..=d_max(&spec) {
                acc = &acc + &stratum_difference(&spec, d).map_err(|e| e.to_string())?;
            }
            let bg = bg_series(spec.surface(), spec.determinant(), spec.truncation());
            all_equal(&[("telescoped", acc), ("BG", bg)]).map_err(|e| format!("{}: {e}", label(&spec)))?;
        }
        Ok("g=2..5, four variants".to_string())
    })();
    report(8, "semistable + sum of stratum differences = P(BG)", result);
}

#[test]
fn ac09_finite_support_in_degree_one() {
    let result = (|| {
        let mut g2_top = None;
        for g in 2..=4u32 {
            let n = 12 * g as usize - 8;
            let bound = 12 * g as usize - 12;
            for det in DETS {
                let spec = ModuliSpec::new(g, 1, det, n).unwrap();
                let p = moduli_series(&spec).map_err(|e| e.to_string())?;
                if let Some(k) = (bound + 1..=n).find(|&k| p.coeff(k) != rat(0)) {
                    return Err(format!("g={g} {det}: b_{k} = {}", p.coeff(k)));
                }
                if g == 2 && det == Determinant::Fixed {
                    g2_top = p.top_degree();
                }
            }
        }
        if g2_top != Some(6) {
            return Err(format!("g=2 fixed top degree {g2_top:?}"));
        }
        Ok("b_k = 0 for k > 12g-12, g=2..4; g=2 fixed top degree 6".to_string())
    })();
    report(9, "degree-one moduli series are finitely supported", result);
}

#[test]
fn ac10_kirwan_monotonicity() {
    let result = (|| {
        for g in 2..=5u32 {
            for de in 0..=1u8 {
                let spec = ModuliSpec::with_default_truncation(g, de, Determinant::NonFixed).unwrap();
                let m = kirwan_monotonicity_check(&spec).map_err(|e| e.to_string())?;
                if let Some(v) = m.violations.first() {
                    return Err(format!("{}: d={} k={} {} > {}", label(&spec), v.d, v.degree, v.before, v.after));
                }
            }
        }
        let spec = ModuliSpec::with_default_truncation(2, 1, Determinant::Fixed).unwrap();
        let m = kirwan_monotonicity_check(&spec).map_err(|e| e.to_string())?;
        let expected = vec![Violation {
            d: 1,
            degree: 5,
            before: 34.into(),
            after: 4.into(),
        }];
        if m.violations != expected {
            return Err(format!("fixed g=2 d_E=1 violations {:?}", m.violations));
        }
        Ok("non-fixed g=2..5 monotone; fixed g=2 d_E=1 violates only at k=5 (34 > 4)".to_string())
    })();
    report(10, "Betti monotonicity along the stratification", result);
}

#[test]
fn ac11_invariant_part_bound() {
    let result = (|| {
        for g in 2..=5u32 {
            for de in 0..=1u8 {
                let spec = ModuliSpec::with_default_truncation(g, de, Determinant::Fixed).unwrap();
                let inv = invariant_part_series(&spec).map_err(|e| e.to_string())?;
                let bg = bg_series(spec.surface(), Determinant::Fixed, spec.truncation());
                for k in 0..=spec.truncation() {
                    if inv.coeff(k) > bg.coeff(k) {
                        return Err(format!(
                            "{}: k={k} invariant {} > P(BG) {}",
                            label(&spec),
                            inv.coeff(k),
                            bg.coeff(k)
                        ));
                    }
                }
            }
        }
        Ok("fixed determinant, g=2..5, both degrees".to_string())
    })();
    report(11, "invariant part bounded by P(BG)", result);
}
