//! Newton polyhedron and distinguished data of a monomial ideal.

use nullkit::monomial::{distinguished_data, newton_polyhedron, MonomialIdeal};

fn main() -> nullkit::Result<()> {
    let j = MonomialIdeal::from_exponents(&[
        vec![4, 0, 0],
        vec![1, 2, 0],
        vec![0, 0, 3],
        vec![0, 5, 1],
    ])?;
    println!("J = {j}");

    let np = newton_polyhedron(&j)?;
    println!("vertices: {:?}", np.vertices);
    for f in &np.facets {
        let kind = if f.bounded { "bounded" } else { "coordinate" };
        println!("  {:?} . u >= {}  ({kind})", f.normal, f.offset);
    }

    let names = j.ring().names();
    for d in distinguished_data(&j)? {
        let center: Vec<&str> = d.support.iter().map(|&i| names[i].as_str()).collect();
        println!(
            "center {{{} = 0}}  r = {}  dim = {}",
            center.join(" = "),
            d.coefficient,
            d.dimension
        );
    }
    Ok(())
}
