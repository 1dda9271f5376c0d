//! Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

use hopflab::linalg::FieldSpec;
use hopflab::report::Status;
use hopflab::suite::{run_suite, SuiteConfig};

fn main() {
    let fields = [FieldSpec::Rationals, FieldSpec::prime(7).expect("7 is prime")];
    let mut ok = true;
    for f in fields {
        let mut cfg = SuiteConfig::new(f);
        // Criterion 15 reruns the others, so only the primary field pays for it.
        if f != FieldSpec::Rationals {
            cfg.only = (1..=14).collect();
        }
        let report = run_suite(&cfg);
        println!("field {f}");
        for c in &report.criteria {
            let tag = if c.status == Status::Fail { "FAIL" } else { "PASS" };
            println!("{tag} criterion {:>2}: {}", c.id, c.title);
            for x in c.report.failures() {
                println!("     {}: {} witness={:?}", x.name, x.detail, x.witness);
            }
        }
        ok &= report.passed();
    }
    if !ok {
        std::process::exit(1);
    }
}
