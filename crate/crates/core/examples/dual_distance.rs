// Dual minimum distance of the ternary subfield codes over GF(9), one per class of a.

use ovoid::report::{elliptic_code, prime_subfield_code, select_a, ASelector};
use ovoid::ExtField;

pub fn run() -> ovoid::Result<()> {
    let f = ExtField::new(3, 2)?;
    for sel in [ASelector::Irreducible, ASelector::Reducible, ASelector::Quarter] {
        let a = select_a(&f, sel)?;
        let sub = prime_subfield_code(&elliptic_code(&f, a)?)?;
        let dd = sub.dual_min_distance_upto(5)?;
        println!(
            "{sel:?} a = {:?}: dual code [{}, {}, {dd}]",
            f.coeffs(a),
            sub.length(),
            sub.length() - sub.dimension()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
