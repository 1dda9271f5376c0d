//! Exports catalog entries to JSON, reads them back and verifies the result.

use hopflab::catalog::{entry, ENTRIES};
use hopflab::io;
use hopflab::linalg::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::Rationals;
    let dir = std::env::temp_dir().join("hopflab-json-example");
    std::fs::create_dir_all(&dir)?;
    for info in ENTRIES {
        let e = entry(info.name, f, &f.int(2))?;
        let path = dir.join(format!("{}.json", info.name));
        std::fs::write(&path, io::to_string(&e.payload))?;
        let back = io::load(&path)?;
        println!("{:<22} {:<13} round trip verifies: {}", info.name, back.kind(), back.verify().passed());
    }
    let sigma = std::fs::read_to_string(dir.join("sigma_t.json"))?;
    println!("\nsigma_t.json:\n{sigma}");
    Ok(())
}
