//! Runs the acceptance suite over a chosen field, e.g. `-- Fp:5`.

use hopflab::linalg::FieldSpec;
use hopflab::suite::{run_suite, SuiteConfig};

fn main() -> hopflab::Result<()> {
    let field = match std::env::args().nth(1) {
        Some(s) => s.parse::<FieldSpec>()?,
        None => FieldSpec::Rationals,
    };
    let mut cfg = SuiteConfig::new(field);
    cfg.only = (1..=14).collect();
    let report = run_suite(&cfg);
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
