//! Seeded random corpora of monomial ideals.

use nullkit::monomial::MonomialIdeal;
use nullkit::verify::{generate_corpus, GeneratorSpec};

fn main() -> nullkit::Result<()> {
    let affine = generate_corpus(&GeneratorSpec::monomial(5, 7))?;
    for inst in &affine {
        let j = MonomialIdeal::from_polynomials(&inst.generators)?;
        println!("{}: {j}", inst.name().unwrap_or("?"));
    }
    let projective = generate_corpus(&GeneratorSpec::projective(3, 7))?;
    for inst in &projective {
        print!("{}", inst.to_file_string());
    }
    Ok(())
}
