//! Generators of the multiplier-type ideals `I_l` of a monomial ideal.

use nullkit::monomial::{multiplier_ideal_generators, MonomialIdeal, MultiplierIdealQuery};

fn main() -> nullkit::Result<()> {
    let j = MonomialIdeal::from_exponents(&[vec![2, 0], vec![0, 3]])?;
    let names = j.ring().names().to_vec();
    for level in 1..=3 {
        let q = MultiplierIdealQuery::new(j.clone(), level)?;
        let gens = multiplier_ideal_generators(&q, q.default_cap())?;
        let shown: Vec<String> = gens
            .iter()
            .map(|g| g.display_with(&names).to_string())
            .collect();
        println!("I_{level}(J) = ({})", shown.join(", "));
    }
    Ok(())
}
