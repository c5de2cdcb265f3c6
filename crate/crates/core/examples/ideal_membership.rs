//! Membership with cofactors, by Gröbner reduction and by a degree-bounded
//! Macaulay matrix.

use nullkit::groebner::{macaulay_member, Ideal};
use nullkit::parse::parse_polynomial;
use nullkit::PolyRing;

fn main() -> nullkit::Result<()> {
    let ring = PolyRing::new(&["x", "y"])?;
    let f1 = parse_polynomial("x^2 - y", &ring)?;
    let f2 = parse_polynomial("x*y - 1", &ring)?;
    let ideal = Ideal::new(&ring, vec![f1, f2])?;

    let p = parse_polynomial("x^3 - 1", &ring)?;
    let (member, cofactors) = ideal.member(&p)?;
    println!("{p} in J: {member}");
    if let Some(c) = cofactors {
        println!("  = ({})*f1 + ({})*f2", c[0], c[1]);
    }
    for cap in 2..=4 {
        println!(
            "  Macaulay at degree {cap}: {}",
            macaulay_member(&p, &ideal, cap)?
        );
    }

    let q = parse_polynomial("x + y", &ring)?;
    println!("{q} in J: {}", ideal.contains(&q)?);
    println!("{q} in sqrt(J): {}", ideal.radical_contains(&q)?);
    Ok(())
}
