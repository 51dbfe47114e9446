// Predicted weight distributions next to exhaustive enumeration.

use ovoid::predict::{predict_table, ParamPoint, Table};
use ovoid::report::check_table;
use ovoid::EnumOptions;

pub fn run() -> ovoid::Result<()> {
    let opts = EnumOptions::default();
    let points = [
        (Table::T1, ParamPoint::new(2, 3)),
        (Table::T2, ParamPoint::new(3, 2)),
        (Table::T3, ParamPoint::new(3, 2)),
        (Table::T4, ParamPoint::new(3, 2)),
        (Table::T5, ParamPoint::new(3, 3)),
        (Table::T6, ParamPoint::tits(1)),
    ];
    for (table, at) in points {
        let predicted = predict_table(table, at)?;
        println!("{} at p = {}, m = {}: dimension {}", table.name(), at.p, at.m, predicted.dimension);
        for (w, c) in predicted.distribution.iter() {
            println!("  {w:>5} {c}");
        }
        let claim = check_table(table, at, None, &opts);
        println!("  enumeration agrees: {}", claim.matches);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
