//! The stratified sum and the closed rational form agree term by term.

use higgs_betti::closed_forms::corollary_closed_form;
use higgs_betti::strata::semistable_series;
use higgs_betti::{Determinant, ModuliSpec};

fn main() -> higgs_betti::Result<()> {
    let genus = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for det in [Determinant::Fixed, Determinant::NonFixed] {
        let spec = ModuliSpec::with_default_truncation(genus, 0, det)?;
        let stratified = semistable_series(&spec)?;
        let closed = corollary_closed_form(spec.surface(), det, spec.truncation());
        println!("g={genus} {det}");
        println!("  stratified: {stratified}");
        println!("  closed:     {closed}");
        match stratified.first_mismatch(&closed) {
            None => println!("  agree up to t^{}", spec.truncation()),
            Some(k) => println!("  differ at t^{k}"),
        }
    }
    Ok(())
}
