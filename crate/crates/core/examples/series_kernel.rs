//! Exact truncated power series: inversion, rational expansion and a
//! bivariate coefficient.

use higgs_betti::cohomology::macdonald_generating_function;
use higgs_betti::series::{expand_rational, Poly, TruncSeries};
use higgs_betti::SurfaceSpec;

fn main() -> higgs_betti::Result<()> {
    // 1/((1-t^2)(1-t^4)) counts partitions into parts 2 and 4.
    let den = &Poly::from_ints(&[1, 0, -1]) * &Poly::from_ints(&[1, 0, 0, 0, -1]);
    println!("{}", expand_rational(&Poly::one(), &den, 16)?);

    let a = TruncSeries::from_ints(&[2, 1, -3], 8);
    println!("1/({a}) = {}", a.inv()?);

    let s = SurfaceSpec::new(2)?;
    let gf = macdonald_generating_function(s, 4, 8);
    println!("[x^2] MacDonald = {}", gf.x_coeff(2)?);
    Ok(())
}
