//! Integral closure membership: facet inequalities against an explicit
//! power `x^{ku} in J^{kl}`.

use nullkit::monomial::{closure_power_witness, integral_closure_member, MonomialIdeal};
use nullkit::Monomial;

fn main() -> nullkit::Result<()> {
    let j = MonomialIdeal::from_exponents(&[vec![3, 0], vec![0, 2]])?;
    println!("J = {j}");
    for u in [vec![1, 1], vec![2, 1], vec![3, 0], vec![1, 2]] {
        let m = Monomial::new(u.clone());
        let facet = integral_closure_member(&m, &j, 1)?;
        let power = closure_power_witness(&m, &j, 1)?;
        print!("x^{u:?}: facet test {facet}");
        match power {
            Some(w) => println!(", x^({} u) divisible by generators {:?}", w.k, w.counts),
            None => println!(", no power lands in J^k"),
        }
    }
    Ok(())
}
