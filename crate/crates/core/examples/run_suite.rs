//! Running a verification suite from code.

use nullkit::parse::{emit_suite, Format};
use nullkit::verify::{run_suite, Suite, SuiteConfig};

fn main() -> nullkit::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "example-2.3".into());
    let suite: Suite = name.parse()?;
    let report = run_suite(&SuiteConfig::new(suite).with_seed(42))?;
    print!("{}", emit_suite(&report, Format::Text));
    Ok(())
}
