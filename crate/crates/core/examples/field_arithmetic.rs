// Arithmetic in GF(9) and the trace down to GF(3).

use ovoid::ExtField;

pub fn run() -> ovoid::Result<()> {
    let f = ExtField::new(3, 2)?;
    println!("GF(9) with modulus {:?} (low degree first)", f.modulus());

    let g = f.primitive();
    let x = f.from_coeffs(&[1, 2])?;
    let y = f.from_coeffs(&[0, 1])?;
    println!("g = {g:?}, x = {x:?}, y = {y:?}");
    println!("x + y = {:?}", &x + &y);
    println!("x * y = {:?}", &x * &y);
    println!("x / y = {:?}", x.try_div(&y)?);
    println!("x^-1  = {:?}", x.inv()?);

    for e in f.elements() {
        let log = f.log(e.value()).map_or("-".to_string(), |l| l.to_string());
        println!(
            "{:>8}  log {log:>2}  trace {}  eta {:>2}",
            format!("{:?}", e.coeffs()),
            e.absolute_trace().value(),
            e.quadratic_character()?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
