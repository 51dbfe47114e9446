// Subfield codes over GF(4) and GF(2) of the GF(16) ovoid code, and the
// trace description of their codewords.

use ovoid::report::{elliptic_code, select_a, ASelector};
use ovoid::subfield::verify_basis_independence;
use ovoid::{ExtField, SubfieldContext};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> ovoid::Result<()> {
    let f = ExtField::new(2, 4)?;
    let code = elliptic_code(&f, select_a(&f, ASelector::Irreducible)?)?;

    for s in [2, 1] {
        let ctx = SubfieldContext::new(&f, s)?;
        let sub = ctx.expand(&code)?;
        println!(
            "over GF({}): {} rows, dimension {}",
            ctx.small().size(),
            sub.generator().rows(),
            sub.dimension()
        );
        let word = ctx.trace_oracle(&code, &[1, 0, 0, 2])?;
        println!("  Tr(m G) for m = (1,0,0,x) starts {:?}, in code: {}", &word[..8], sub.contains(&word));
        let subcode = ctx.subfield_subcode(&code)?;
        println!("  subfield subcode dimension {}", subcode.dimension());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = SubfieldContext::random(&f, 1, &mut rng)?;
    let b = SubfieldContext::random(&f, 1, &mut rng)?;
    println!("two random bases give the same code: {}", verify_basis_independence(&code, &a, &b)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
