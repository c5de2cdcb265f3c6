//! Skoda, local Nullstellensatz and Briançon-Skoda inclusions on one ideal.

use nullkit::monomial::{
    check_brianconskoda, check_local_nullstellensatz, check_skoda, MonomialIdeal,
};
use nullkit::parse::{emit_report, Format, Report};

fn main() -> nullkit::Result<()> {
    let j = MonomialIdeal::from_exponents(&[vec![3, 0, 1], vec![1, 2, 0], vec![0, 1, 3]])?;
    let p = j.generators().len().min(j.arity()) as u32;

    let mut report = Report::new(j.to_string());
    for k in 1..=3 {
        report.push(check_skoda(&j, p + k - 1, k)?);
    }
    report
        .records
        .extend(check_local_nullstellensatz(&j, p, &[1, 2])?);
    // below min(m, n) the inclusion may fail; such failures are flagged
    report
        .records
        .extend(check_local_nullstellensatz(&j, 1, &[])?);
    report.push(check_brianconskoda(&j)?);
    print!("{}", emit_report(&report, Format::Text));
    Ok(())
}
