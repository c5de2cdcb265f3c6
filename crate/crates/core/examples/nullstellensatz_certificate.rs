//! Minimal-degree Nullstellensatz certificates and the classical bounds.

use nullkit::nullstellensatz::{
    gb_trace_certificate, homogenization_bridge, minimal_certificate_degree, CertificateProblem,
};
use nullkit::parse::parse_polynomial;
use nullkit::PolyRing;

fn main() -> nullkit::Result<()> {
    let ring = PolyRing::new(&["x", "y"])?;
    let gens = ["x^3", "x*y^2 - 1"]
        .iter()
        .map(|s| parse_polynomial(s, &ring))
        .collect::<nullkit::Result<Vec<_>>>()?;
    let p = CertificateProblem::from_generators(gens)?;

    let report = minimal_certificate_degree(&p, p.default_cap(), 10_000)?;
    println!(
        "minimal degree {:?}, d^n = {}",
        report.minimal_degree, report.bound_kollar
    );
    println!("per degree: {:?}", report.solvable);
    if let Some(c) = &report.certificate {
        for (k, g) in c.to_strings().iter().enumerate() {
            println!("  g{} = {g}", k + 1);
        }
    }

    let trace = gb_trace_certificate(&p)?;
    println!(
        "Gröbner trace certificate reaches degree {}",
        trace.achieved_degree
    );

    let d = report.minimal_degree.expect("zero-free system");
    let bridged = homogenization_bridge(&p, d, 10_000)?.expect("T0^D in the homogenized ideal");
    println!(
        "projective form at degree {d} dehomogenizes to degree {}",
        bridged.achieved_degree
    );
    Ok(())
}
