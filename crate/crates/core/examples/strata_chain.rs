//! Equivariant series of each space in the stratification, converging to the
//! classifying space.

use higgs_betti::cohomology::bg_series;
use higgs_betti::report::{Format, StrataReport};
use higgs_betti::strata::{stratum_chain, visible_strata};
use higgs_betti::{Determinant, ModuliSpec};

fn main() -> higgs_betti::Result<()> {
    let spec = ModuliSpec::new(2, 0, Determinant::NonFixed, 14)?;
    for idx in visible_strata(&spec) {
        println!("stratum d={} shifts by t^{}, n={}", idx.d, idx.shift(), idx.n);
    }
    let chain = stratum_chain(&spec)?;
    let bg = bg_series(spec.surface(), spec.determinant(), spec.truncation());
    print!("{}", StrataReport::new(spec, &chain, &bg).render(Format::Table));
    Ok(())
}
