//! The shifted symmetric-product sum from four directions: direct summation, its closed form, the
//! residue decomposition and coefficient extraction from a bivariate series.

use higgs_betti::closed_forms::{
    bivariate_route, lemma_closed, lemma_direct, residue_piece, ResidueLabel,
};
use higgs_betti::SurfaceSpec;

fn main() -> higgs_betti::Result<()> {
    let s = SurfaceSpec::new(3)?;
    let n = 24;
    for label in ResidueLabel::ALL {
        let piece = residue_piece(s, label, n);
        println!("{label:<14} {}", piece.value);
    }
    println!();
    println!("direct     {}", lemma_direct(s, n));
    println!("closed     {}", lemma_closed(s, n));
    println!("bivariate  {}", bivariate_route(s, n));
    Ok(())
}
