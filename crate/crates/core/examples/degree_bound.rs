//! The degree inequality `sum r_i d^{dim Z_i} <= d^n` for monomial ideals
//! of projective space.

use nullkit::monomial::{check_degree_bound, MonomialIdeal};
use nullkit::{Monomial, PolyRing};

fn main() -> nullkit::Result<()> {
    let ring = PolyRing::new(&["T0", "T1", "T2"])?;
    let cases: Vec<(Vec<Vec<u32>>, u32)> = vec![
        (vec![vec![0, 1, 0]], 1),
        (vec![vec![0, 2, 0], vec![0, 0, 2]], 2),
        (vec![vec![0, 3, 0], vec![0, 0, 3]], 3),
        (vec![vec![2, 1, 0], vec![0, 3, 0], vec![1, 0, 2]], 3),
    ];
    for (exps, d) in cases {
        let j = MonomialIdeal::new(&ring, exps.into_iter().map(Monomial::new).collect())?;
        let rep = check_degree_bound(&j, d)?;
        println!("J = {j}, d = {d}");
        for z in &rep.data {
            println!(
                "  center {:?} r = {} dim = {}",
                z.support, z.coefficient, z.dimension
            );
        }
        let tag = if rep.is_equality() { " (equality)" } else { "" };
        println!("  {} <= {}{tag}", rep.lhs, rep.rhs);
    }
    Ok(())
}
