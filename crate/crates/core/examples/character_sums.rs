// Exact quadratic Gauss and Weil sums in Z[zeta_p] against their closed forms.

use ovoid::charsum::{
    count_eta_trace_classes, eta_trace_closed_form, gauss_sum_closed_form, gauss_sum_quadratic,
    verify_lemma6, weil_sum_quadratic,
};
use ovoid::ExtField;

pub fn run() -> ovoid::Result<()> {
    for (p, m) in [(3, 1), (3, 2), (5, 1), (7, 2)] {
        let f = ExtField::new(p, m)?;
        let g = gauss_sum_quadratic(&f)?;
        let sq = g.mul(&g)?;
        println!(
            "GF({p}^{m}): G = {:.4} (closed form {:.4}), G^2 = {:?}",
            g.embed_complex(),
            gauss_sum_closed_form(p, m),
            sq.as_integer()
        );
    }

    let f = ExtField::new(5, 1)?;
    let w = weil_sum_quadratic(&f, 2, 1, 3)?;
    println!("sum of chi(2x^2+x+3) over GF(5) = {:.4}, matches closed form: {}", w.embed_complex(), verify_lemma6(&f, 2, 1, 3)?);

    let f = ExtField::new(3, 2)?;
    let counted = count_eta_trace_classes(&f)?;
    println!("eta/trace class counts over GF(9): {counted:?}");
    println!("closed form agrees: {}", counted == eta_trace_closed_form(3, 2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> ovoid::Result<()> {
    run()
}
