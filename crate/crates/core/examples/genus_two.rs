//! Betti numbers of the genus-2 moduli spaces in degree 1.

use higgs_betti::strata::moduli_series;
use higgs_betti::{Determinant, ModuliSpec};

fn main() -> higgs_betti::Result<()> {
    for det in [Determinant::Fixed, Determinant::NonFixed] {
        let spec = ModuliSpec::with_default_truncation(2, 1, det)?;
        let betti = moduli_series(&spec)?.betti_numbers("moduli")?;
        let shown: Vec<String> = betti.iter().map(ToString::to_string).collect();
        println!("{det:>9}: {}", shown.join(" "));
    }
    Ok(())
}
