//! Poincaré polynomials of symmetric products of a curve and of their
//! unramified covers.

use higgs_betti::cohomology::{anti_invariant_dim, sym_cover_series, sym_oracle, sym_series};
use higgs_betti::SurfaceSpec;

fn main() -> higgs_betti::Result<()> {
    let s = SurfaceSpec::new(3)?;
    for n in 0..=2 * s.genus() as usize - 2 {
        let p = sym_series(s, n, 2 * n);
        assert_eq!(p, sym_oracle(s, n));
        println!("S^{n}    {p}");
        println!(
            "S~^{n}   {}   (anti-invariant b_{n} = {})",
            sym_cover_series(s, n, 2 * n)?,
            anti_invariant_dim(s, n)?
        );
    }
    Ok(())
}
