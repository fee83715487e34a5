//! The three report formats, plus the full verification run.

use higgs_betti::report::{BettiReport, Format, Route};
use higgs_betti::strata::moduli_series;
use higgs_betti::verify::verify;
use higgs_betti::{Determinant, ModuliSpec};

fn main() -> higgs_betti::Result<()> {
    let spec = ModuliSpec::with_default_truncation(2, 1, Determinant::Fixed)?;
    let report = BettiReport {
        spec,
        series: moduli_series(&spec)?,
        route: Route::Moduli,
        checks: verify(&spec),
    };
    for format in [Format::Table, Format::Csv, Format::Json] {
        println!("{}", report.render(format));
    }
    assert_eq!(BettiReport::from_json(&report.to_json())?, report);
    Ok(())
}
