//! Betti numbers grow along the stratification for the full group but not
//! for fixed determinant, where anti-invariant classes die.

use higgs_betti::strata::{invariant_part_series, kirwan_monotonicity_check};
use higgs_betti::{Determinant, ModuliSpec};

fn main() -> higgs_betti::Result<()> {
    for g in 2..=4 {
        for de in 0..=1 {
            for det in [Determinant::NonFixed, Determinant::Fixed] {
                let spec = ModuliSpec::with_default_truncation(g, de, det)?;
                let m = kirwan_monotonicity_check(&spec)?;
                print!("g={g} d_E={de} {det:>9}: ");
                match m.violations.first() {
                    None => println!("monotone"),
                    Some(v) => println!(
                        "{} drops, first at d={} k={} ({} > {})",
                        m.violations.len(),
                        v.d,
                        v.degree,
                        v.before,
                        v.after
                    ),
                }
            }
        }
    }

    let spec = ModuliSpec::with_default_truncation(2, 0, Determinant::Fixed)?;
    println!("\ninvariant part, g=2 d_E=0: {}", invariant_part_series(&spec)?);
    Ok(())
}
