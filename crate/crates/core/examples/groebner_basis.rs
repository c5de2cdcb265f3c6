//! Reduced Gröbner bases under different term orders.

use nullkit::groebner::Ideal;
use nullkit::parse::parse_polynomial;
use nullkit::{MonomialOrder, PolyRing};

fn main() -> nullkit::Result<()> {
    let ring = PolyRing::new(&["x", "y", "z"])?;
    let gens = ["x^2 + y*z - 2", "y^2 + x*z - 3", "x*y + z^2 - 5"]
        .iter()
        .map(|s| parse_polynomial(s, &ring))
        .collect::<nullkit::Result<Vec<_>>>()?;
    let ideal = Ideal::new(&ring, gens)?;

    for order in ["grevlex", "lex"] {
        let order: MonomialOrder = order.parse()?;
        let gb = ideal.groebner_basis(&order)?;
        println!("{order:?}: {} elements", gb.basis.len());
        for g in &gb.basis {
            println!("  {}", g.to_string_with(&order));
        }
    }
    Ok(())
}
