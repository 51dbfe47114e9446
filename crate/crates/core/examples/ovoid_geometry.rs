// Elliptic quadrics and the Tits ovoid in PG(3, q), with cap checks.

use ovoid::geometry::{elliptic_quadric, is_cap, tits_ovoid};
use ovoid::ExtField;

pub fn run() -> ovoid::Result<()> {
    let f = ExtField::new(3, 1)?;
    for a in 0..f.size() {
        let set = elliptic_quadric(&f, a)?;
        let cap = is_cap(&set);
        println!(
            "q = 3, a = {a}: {} points, {} ({:?})",
            set.len(),
            if cap.is_cap() { "cap" } else { "not a cap" },
            f.quadratic_root_test(a)
        );
        if let Some([i, j, k]) = cap.witness {
            println!("  collinear: {:?} {:?} {:?}", set.points()[i], set.points()[j], set.points()[k]);
        }
    }

    let f8 = ExtField::new(2, 3)?;
    let tits = tits_ovoid(&f8)?;
    println!("Tits ovoid over GF(8): {} points, cap = {}", tits.len(), is_cap(&tits).is_cap());
    print!("first points:\n{}", tits.export_lines().lines().take(3).collect::<Vec<_>>().join("\n"));
    println!();
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
