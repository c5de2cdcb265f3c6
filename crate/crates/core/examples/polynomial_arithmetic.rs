//! Parsing, exact arithmetic and homogenization.

use nullkit::parse::parse_polynomial;
use nullkit::PolyRing;

fn main() -> nullkit::Result<()> {
    let ring = PolyRing::new(&["x", "y"])?;
    let f = parse_polynomial("(x + 1/2*y)^2 - x*y", &ring)?;
    let g = parse_polynomial("x - y", &ring)?;

    println!("f       = {f}");
    println!("f * g   = {}", f.checked_mul(&g)?);
    println!("df/dy   = {}", f.partial_derivative(1)?);

    let h = f.checked_sub(&g)?;
    let hom = h.homogenize(h.total_degree())?;
    println!("h       = {h}");
    println!("H       = {hom}  (in {:?})", hom.ring().names());
    println!("H(T0=1) = {}", hom.dehomogenize()?);
    Ok(())
}
