//! Symbolic powers of coordinate subspaces, by vanishing order and by
//! differentiation.

use nullkit::monomial::{symbolic_power_member, symbolic_power_member_by_derivatives};
use nullkit::parse::parse_polynomial;
use nullkit::PolyRing;

fn main() -> nullkit::Result<()> {
    let ring = PolyRing::new(&["x", "y", "z"])?;
    let p = parse_polynomial("x^2*z + x*y^2 + y^3*z^4", &ring)?;
    for (support, r) in [
        (vec![0, 1], 2),
        (vec![0, 1], 3),
        (vec![1, 2], 1),
        (vec![2], 1),
    ] {
        println!(
            "{p} in I_{support:?}^<{r}>: {} / {}",
            symbolic_power_member(&p, &support, r),
            symbolic_power_member_by_derivatives(&p, &support, r)?
        );
    }
    Ok(())
}
