// Runs every check and prints a one-line summary per section.

use ovoid::report::full_report;
use ovoid::EnumOptions;

pub fn run() -> ovoid::Result<()> {
    let r = full_report(&EnumOptions::default(), 1);
    let line = |name: &str, pass: usize, total: usize| println!("{name:<16} {pass}/{total}");
    line("ovoid codes", r.ovoid_codes.iter().filter(|c| c.matches).count(), r.ovoid_codes.len());
    line("weight tables", r.tables.iter().filter(|c| c.matches).count(), r.tables.len());
    line("parameters", r.examples.iter().filter(|c| c.matches).count(), r.examples.len());
    line("dual distance", r.dual_distances.iter().filter(|c| c.matches).count(), r.dual_distances.len());
    line("geometry", r.geometry.iter().filter(|c| c.matches).count(), r.geometry.len());
    line("lemmas", r.lemmas.iter().filter(|c| c.pass).count(), r.lemmas.len());
    line("structure", r.structure.iter().filter(|c| c.pass).count(), r.structure.len());
    line("bounds", r.bounds.iter().filter(|c| c.pass).count(), r.bounds.len());
    println!("overall: {}", if r.pass { "pass" } else { "FAIL" });
    if !r.pass {
        return Err(ovoid::Error::InvalidParameters("report has failing checks".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
