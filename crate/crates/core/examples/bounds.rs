// Griesmer bound for ovoid codes and the sphere-packing bound for the duals
// of their subfield codes.

use ovoid::predict::{griesmer_length, sphere_packing_max_d};

pub fn run() -> ovoid::Result<()> {
    for q in [3u64, 4, 5, 8, 9, 16] {
        let (n, d) = (q * q + 1, q * q - q);
        println!("q = {q:>2}: [{n}, 4, {d}] vs Griesmer length {}", griesmer_length(q, 4, d));
    }
    for (p, m) in [(2u32, 2u32), (2, 3), (3, 2), (5, 2)] {
        let n = (p as u64).pow(2 * m) + 1;
        let k = n - (3 * m as u64 + 1);
        println!("p = {p}, m = {m}: dual [{n}, {k}] has d at most {}", sphere_packing_max_d(p, n, k));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
