// Exhaustive weight enumeration of an ovoid code and of its binary subfield code.

use ovoid::report::{elliptic_code, prime_subfield_code, select_a, ASelector};
use ovoid::{EnumOptions, ExtField};

pub fn run() -> ovoid::Result<()> {
    let f = ExtField::new(2, 3)?;
    let a = select_a(&f, ASelector::Irreducible)?;
    let code = elliptic_code(&f, a)?;
    let opts = EnumOptions::default();

    let dist = code.weight_distribution(&opts)?;
    println!("[{}, {}] code over GF(8)", code.length(), code.dimension());
    for (w, c) in dist.iter() {
        println!("  A_{w} = {c}");
    }

    let sub = prime_subfield_code(&code)?;
    let dist = sub.weight_distribution(&opts)?;
    println!(
        "binary subfield code: [{}, {}, {}]",
        sub.length(),
        sub.dimension(),
        dist.min_nonzero_weight().unwrap_or(0)
    );
    for (w, c) in dist.iter() {
        println!("  A_{w} = {c}");
    }
    println!("total {} = 2^{}", dist.total(), sub.dimension());
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
