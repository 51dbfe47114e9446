//! Closed-form weight distributions of the ovoid codes and their subfield
//! codes, evaluated exactly at a parameter point, plus Griesmer and
//! sphere-packing checks.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::code::WeightDistribution;
use crate::error::{Error, Result};

/// Subfield-code weight tables.
///
/// * `T1`: p = 2, elliptic quadric.
/// * `T2`: odd p, x^2+x+a irreducible.
/// * `T3`: odd p, x^2+x+a reducible with a != 1/4.
/// * `T4`, `T5`: odd p, a = 1/4, for even and odd m.
/// * `T6`: Tits ovoid over GF(2^(2e+1)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Table {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl Table {
    pub const ALL: [Table; 6] = [Table::T1, Table::T2, Table::T3, Table::T4, Table::T5, Table::T6];

    pub fn name(self) -> &'static str {
        match self {
            Table::T1 => "T1",
            Table::T2 => "T2",
            Table::T3 => "T3",
            Table::T4 => "T4",
            Table::T5 => "T5",
            Table::T6 => "T6",
        }
    }
}

impl std::str::FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Table::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown table {s:?}")))
    }
}

/// A field size q = p^m. Tits points use p = 2 and m = 2e + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub p: u32,
    pub m: u32,
}

impl ParamPoint {
    pub fn new(p: u32, m: u32) -> Self {
        ParamPoint { p, m }
    }

    pub fn tits(e: u32) -> Self {
        ParamPoint { p: 2, m: 2 * e + 1 }
    }
}

/// A closed form evaluated at one point, with equal weights merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedDistribution {
    pub source: String,
    pub params: ParamPoint,
    pub dimension: u32,
    pub distribution: WeightDistribution,
}

/// i^e when it is real.
pub fn i_power_real(e: u64) -> Option<i128> {
    match e % 4 {
        0 => Some(1),
        2 => Some(-1),
        _ => None,
    }
}

fn pw(b: i128, e: u32) -> i128 {
    b.pow(e)
}

fn half(x: i128, what: &str) -> Result<i128> {
    if x % 2 == 0 {
        Ok(x / 2)
    } else {
        Err(Error::InvalidParameters(format!("{what} is not an even integer")))
    }
}

fn real_unit(e: u64, at: ParamPoint) -> Result<i128> {
    i_power_real(e).ok_or_else(|| Error::NonRealClosedForm(format!("i^{e} at p={}, m={}", at.p, at.m)))
}

fn assemble(
    source: &str,
    params: ParamPoint,
    dimension: u32,
    length: i128,
    rows: &[(i128, i128)],
) -> Result<PredictedDistribution> {
    let mut distribution = WeightDistribution::default();
    for &(w, c) in rows {
        if !(0..=length).contains(&w) || c < 0 {
            return Err(Error::InvalidParameters(format!(
                "{source} at p={}, m={} evaluates to row ({w}, {c})",
                params.p, params.m
            )));
        }
        distribution.add(w as usize, u64::try_from(c).map_err(|_| Error::Overflow("multiplicity"))?);
    }
    Ok(PredictedDistribution {
        source: source.to_string(),
        params,
        dimension,
        distribution,
    })
}

fn check_size(p: u32, m: u32) -> Result<()> {
    let q = (p as u64).checked_pow(m);
    if m == 0 || q.is_none_or(|q| q > 1 << 20) {
        return Err(Error::InvalidParameters(format!("p^m out of range for p={p}, m={m}")));
    }
    Ok(())
}

/// 1 + (q^2 - q)(q^2 + 1) z^(q^2 - q) + (q - 1)(q^2 + 1) z^(q^2).
pub fn predict_ovoid_code(q: u32) -> Result<PredictedDistribution> {
    if q <= 2 || q > 1 << 20 {
        return Err(Error::InvalidParameters(format!("ovoid codes need 2 < q, got {q}")));
    }
    let q = q as i128;
    let rows = [(0, 1), (q * q - q, (q * q - q) * (q * q + 1)), (q * q, (q - 1) * (q * q + 1))];
    assemble("ovoid", ParamPoint::new(q as u32, 1), 4, q * q + 1, &rows)
}

pub fn predict_table(table: Table, at: ParamPoint) -> Result<PredictedDistribution> {
    let ParamPoint { p, m } = at;
    check_size(p, m)?;
    let mismatch = |why: &str| Err(Error::InvalidParameters(format!("{} does not apply: {why}", table.name())));
    match table {
        Table::T1 | Table::T6 if p != 2 => return mismatch("needs p = 2"),
        Table::T2 | Table::T3 | Table::T4 | Table::T5 if p == 2 => return mismatch("needs odd p"),
        Table::T6 if m % 2 == 0 || m < 3 => return mismatch("needs q = 2^(2e+1) with e >= 1"),
        Table::T4 if m % 2 == 1 => return mismatch("needs even m"),
        Table::T5 if m % 2 == 0 => return mismatch("needs odd m"),
        _ if m < 2 => return mismatch("needs m > 1"),
        _ => {}
    }
    let pi = p as i128;
    let n = pw(pi, 2 * m) + 1;
    let (dimension, rows) = match table {
        Table::T1 => {
            let (a, b) = (pw(2, 2 * m - 1), pw(2, m - 1));
            let rows = vec![
                (0, 1),
                (pw(2, 2 * m), 1),
                (a, 2 * (pw(2, 2 * m) - 1)),
                (a - b, pw(2, 2 * m) * (b - 1)),
                (a + b, pw(2, 2 * m) * (b - 1)),
                (a - b + 1, pw(2, 3 * m - 1)),
                (a + b + 1, pw(2, 3 * m - 1)),
            ];
            (3 * m + 1, rows)
        }
        Table::T2 | Table::T3 => {
            let s = if table == Table::T2 { 1 } else { -1 };
            let (a, b) = (pw(pi, 2 * m - 1), pw(pi, m - 1));
            let rows = vec![
                (0, 1),
                (pw(pi, 2 * m), pi - 1),
                (a * (pi - 1), pi * (pw(pi, 2 * m) - 1)),
                ((a + s * b) * (pi - 1), pw(pi, 2 * m) * (b - 1)),
                (a * (pi - 1) - s * b, pw(pi, 2 * m) * (b - 1) * (pi - 1)),
                ((a + s * b) * (pi - 1) + 1, pw(pi, 3 * m - 1) * (pi - 1)),
                (a * (pi - 1) - s * b + 1, pw(pi, 3 * m - 1) * (pi - 1) * (pi - 1)),
            ];
            (3 * m + 1, rows)
        }
        Table::T4 => {
            let eps = real_unit((p as u64 - 1) * m as u64 / 2, at)?;
            let h = pw(pi, m / 2) * eps;
            let g = pw(pi, (3 * m - 2) / 2) * eps;
            let (a, pm, pm1) = (pw(pi, 2 * m - 1), pw(pi, m), pw(pi, m - 1));
            let pm_1 = pi - 1;
            let rows = vec![
                (0, 1),
                (pw(pi, 2 * m), pm_1),
                (a * pm_1, (pm - 1) * (pw(pi, 2 * m) + pi)),
                (a * pm_1 + 1, pw(pi, 2 * m) * (pm - 1) * pm_1),
                (pm1 * pm_1 * (pm + h), half(a - pm - pm_1 * g, "T4 multiplicity")?),
                (pm1 * pm_1 * (pm + h) + 1, half(pm_1 * (a + g), "T4 multiplicity")?),
                (pm1 * (pm * pm_1 - h), half(pm_1 * (a - pm - pm_1 * g), "T4 multiplicity")?),
                (pm1 * (pm * pm_1 - h) + 1, half(pm_1 * pm_1 * (a + g), "T4 multiplicity")?),
                (pm1 * pm_1 * (pm - h), half(a - pm + pm_1 * g, "T4 multiplicity")?),
                (pm1 * pm_1 * (pm - h) + 1, half(pm_1 * (a - g), "T4 multiplicity")?),
                (pm1 * (pm * pm_1 + h), half(pm_1 * (a - pm + pm_1 * g), "T4 multiplicity")?),
                (pm1 * (pm * pm_1 + h) + 1, half(pm_1 * pm_1 * (a - g), "T4 multiplicity")?),
            ];
            (3 * m + 1, rows)
        }
        Table::T5 => {
            let eps = real_unit((p as u64 - 1) * (m as u64 + 1) / 2, at)?;
            let r = pw(pi, (3 * m - 1) / 2);
            let s = pw(pi, (m - 1) / 2);
            let (a, pm, pm1) = (pw(pi, 2 * m - 1), pw(pi, m), pw(pi, m - 1));
            let pm_1 = pi - 1;
            let side = half(pm * (pm1 - 1) * pm_1, "T5 multiplicity")?;
            let side1 = half(a * pm_1 * pm_1, "T5 multiplicity")?;
            let rows = vec![
                (0, 1),
                (pw(pi, 2 * m), pm_1),
                (a * pm_1, pm * (pm1 - 1) * (pw(pi, m + 1) - pi + 1) + pi * (pw(pi, 2 * m) - 1)),
                (a * pm_1 + 1, a * pm_1 * (pw(pi, m + 1) - pi + 1)),
                (r * (s * pm_1 - eps), side),
                (r * (s * pm_1 - eps) + 1, side1),
                (r * (s * pm_1 + eps), side),
                (r * (s * pm_1 + eps) + 1, side1),
            ];
            (3 * m + 1, rows)
        }
        Table::T6 => {
            let e = (m - 1) / 2;
            let (a, b) = (pw(2, 4 * e + 1), pw(2, 2 * e));
            let rows = vec![
                (0, 1),
                (pw(2, 4 * e + 2), 1),
                (a, 2 * (pw(2, 4 * e + 2) - 1)),
                (a + b, pw(2, 4 * e + 2) * (b - 1)),
                (a - b, pw(2, 4 * e + 2) * (b - 1)),
                (a + b + 1, pw(2, 6 * e + 2)),
                (a - b + 1, pw(2, 6 * e + 2)),
            ];
            (6 * e + 4, rows)
        }
    };
    assemble(table.name(), at, dimension, n, &rows)
}

/// Class of the elliptic-quadric parameter a for odd q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AClass {
    Irreducible,
    Reducible,
    QuarterEven,
    QuarterOdd,
}

/// Minimum distance of the p-ary subfield code for each class of a.
pub fn predict_concluding_min_distance(p: u32, m: u32, class: AClass) -> Result<u64> {
    if p.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic);
    }
    check_size(p, m)?;
    let p = p as u64;
    let base = p.pow(2 * m - 1) * (p - 1);
    let pm1 = p.pow(m - 1);
    match (class, m % 2) {
        (AClass::Irreducible, _) => Ok(base - pm1),
        (AClass::Reducible, _) => Ok(base - pm1 * (p - 1)),
        (AClass::QuarterEven, 0) => Ok(base - pm1 * (p - 1) * p.pow(m / 2)),
        (AClass::QuarterOdd, 1) => Ok(base - pm1 * p.pow(m.div_ceil(2))),
        _ => Err(Error::InvalidParameters(format!("{class:?} does not match the parity of m = {m}"))),
    }
}

/// sum over i < k of ceil(d / q^i).
pub fn griesmer_length(q: u64, k: u32, d: u64) -> u64 {
    let mut total = 0u64;
    let mut qi = 1u64;
    for _ in 0..k {
        total += d.div_ceil(qi);
        qi = qi.saturating_mul(q);
    }
    total
}

pub fn meets_griesmer(q: u64, n: u64, k: u32, d: u64) -> bool {
    n == griesmer_length(q, k, d)
}

/// Largest d with p^(n-k) >= sum over i <= (d-1)/2 of (p-1)^i C(n, i),
/// never above the Singleton bound n - k + 1.
pub fn sphere_packing_max_d(p: u32, n: u64, k: u64) -> u64 {
    assert!(k <= n, "dimension exceeds length");
    let room = BigUint::from(p).pow((n - k) as u32);
    let mut ball = BigUint::from(1u32);
    let mut term = BigUint::from(1u32);
    let mut t = 0u64;
    while t < n {
        // term_(t+1) = term_t * (p-1) * (n-t) / (t+1)
        term = term * (p - 1) * (n - t) / (t + 1);
        let next = &ball + &term;
        if next > room {
            break;
        }
        ball = next;
        t += 1;
    }
    (2 * t + 2).min(n - k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(d: &PredictedDistribution) -> Vec<(usize, u64)> {
        d.distribution.to_pairs()
    }

    #[test]
    fn ovoid_code_forms() {
        assert_eq!(pairs(&predict_ovoid_code(4).unwrap()), vec![(0, 1), (12, 204), (16, 51)]);
        assert_eq!(pairs(&predict_ovoid_code(8).unwrap()), vec![(0, 1), (56, 3640), (64, 455)]);
        for q in [3u32, 4, 5, 7, 8, 9, 16, 27] {
            assert_eq!(predict_ovoid_code(q).unwrap().distribution.total(), (q as u128).pow(4));
        }
        assert!(predict_ovoid_code(2).is_err());
    }

    #[test]
    fn table_substitutions() {
        let t1 = predict_table(Table::T1, ParamPoint::new(2, 2)).unwrap();
        assert_eq!(
            pairs(&t1),
            vec![(0, 1), (6, 16), (7, 32), (8, 30), (10, 16), (11, 32), (16, 1)]
        );
        let t6 = predict_table(Table::T6, ParamPoint::tits(1)).unwrap();
        assert_eq!(
            pairs(&t6),
            vec![(0, 1), (28, 192), (29, 256), (32, 126), (36, 192), (37, 256), (64, 1)]
        );
        let t2 = predict_table(Table::T2, ParamPoint::new(3, 2)).unwrap();
        assert_eq!(t2.distribution.min_nonzero_weight(), Some(51));
        assert_eq!(t2.distribution.total(), 2187);
    }

    #[test]
    fn totals_match_dimension() {
        let mut points = Vec::new();
        for m in 2..=8 {
            points.push((Table::T1, ParamPoint::new(2, m)));
        }
        for p in [3u32, 5, 7, 11] {
            for m in 2..=5 {
                if (p as u64).pow(m) > 1 << 20 {
                    continue;
                }
                points.push((Table::T2, ParamPoint::new(p, m)));
                points.push((Table::T3, ParamPoint::new(p, m)));
                let t = if m % 2 == 0 { Table::T4 } else { Table::T5 };
                points.push((t, ParamPoint::new(p, m)));
            }
        }
        for e in 1..=4 {
            points.push((Table::T6, ParamPoint::tits(e)));
        }
        for (t, at) in points {
            let d = predict_table(t, at).unwrap();
            assert_eq!(d.distribution.total(), (at.p as u128).pow(d.dimension), "{t:?} {at:?}");
            assert_eq!(d.distribution.count(0), 1);
        }
    }

    #[test]
    fn tables_two_and_three_mirror_each_other() {
        for (p, m) in [(3, 2), (3, 3), (5, 2), (7, 2), (3, 4)] {
            let at = ParamPoint::new(p, m);
            let t2 = predict_table(Table::T2, at).unwrap().distribution;
            let t3 = predict_table(Table::T3, at).unwrap().distribution;
            assert_eq!(t2.total(), t3.total());
            let (p, m) = (p as usize, m);
            let b = p.pow(m - 1);
            let a = p.pow(2 * m - 1) * (p - 1);
            // The rows shifted by +-p^(m-1) trade places under the sign swap.
            assert_eq!(t2.count(a + b * (p - 1)), t3.count(a - b * (p - 1)));
            assert_eq!(t2.count(a - b), t3.count(a + b));
            assert_eq!(t2.count(a - b + 1), t3.count(a + b + 1));
            assert_eq!(t2.count(a), t3.count(a));
        }
    }

    #[test]
    fn table_parameter_checks() {
        assert!(predict_table(Table::T1, ParamPoint::new(3, 2)).is_err());
        assert!(predict_table(Table::T2, ParamPoint::new(2, 2)).is_err());
        assert!(predict_table(Table::T4, ParamPoint::new(3, 3)).is_err());
        assert!(predict_table(Table::T5, ParamPoint::new(3, 2)).is_err());
        assert!(predict_table(Table::T6, ParamPoint::new(2, 4)).is_err());
        assert!(predict_table(Table::T6, ParamPoint::new(2, 1)).is_err());
        assert!(predict_table(Table::T2, ParamPoint::new(3, 1)).is_err());
        assert_eq!("t4".parse::<Table>().unwrap(), Table::T4);
        assert!("T7".parse::<Table>().is_err());
    }

    #[test]
    fn concluding_minimum_distances() {
        assert_eq!(predict_concluding_min_distance(3, 2, AClass::Irreducible).unwrap(), 51);
        assert_eq!(predict_concluding_min_distance(3, 2, AClass::Reducible).unwrap(), 48);
        assert_eq!(predict_concluding_min_distance(3, 2, AClass::QuarterEven).unwrap(), 36);
        assert_eq!(predict_concluding_min_distance(3, 3, AClass::QuarterOdd).unwrap(), 405);
        assert!(predict_concluding_min_distance(3, 3, AClass::QuarterEven).is_err());
        assert!(predict_concluding_min_distance(2, 2, AClass::Irreducible).is_err());
        for (p, m) in [(3, 2), (3, 3), (5, 2), (3, 4)] {
            let at = ParamPoint::new(p, m);
            let cases = [
                (Table::T2, AClass::Irreducible),
                (Table::T3, AClass::Reducible),
                if m % 2 == 0 { (Table::T4, AClass::QuarterEven) } else { (Table::T5, AClass::QuarterOdd) },
            ];
            for (t, class) in cases {
                let d = predict_table(t, at).unwrap().distribution.min_nonzero_weight().unwrap();
                assert_eq!(d as u64, predict_concluding_min_distance(p, m, class).unwrap());
            }
        }
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_length(4, 4, 12), 17);
        assert_eq!(griesmer_length(8, 4, 56), 65);
        assert_eq!(griesmer_length(5, 1, 7), 7);
        for q in [3u64, 4, 5, 7, 8, 9, 16] {
            assert!(meets_griesmer(q, q * q + 1, 4, q * q - q));
        }
        assert!(!meets_griesmer(4, 18, 4, 12));
    }

    #[test]
    fn sphere_packing_examples() {
        assert_eq!(sphere_packing_max_d(2, 17, 10), 4);
        assert_eq!(sphere_packing_max_d(3, 82, 75), 4);
        assert_eq!(sphere_packing_max_d(2, 9, 9), 1);
        // Hamming [7,4] is perfect with d = 3; the bound allows 4.
        assert_eq!(sphere_packing_max_d(2, 7, 4), 4);
        // Repetition code [5,1]: Singleton caps at 5.
        assert_eq!(sphere_packing_max_d(2, 5, 1), 5);
    }

    #[test]
    fn imaginary_powers() {
        assert_eq!(i_power_real(0), Some(1));
        assert_eq!(i_power_real(2), Some(-1));
        assert_eq!(i_power_real(6), Some(-1));
        assert_eq!(i_power_real(3), None);
    }
}
