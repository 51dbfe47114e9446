//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::time::Instant;

use ovoid::charsum;
use ovoid::code::EnumOptions;
use ovoid::field::ExtField;
use ovoid::predict::{self, ParamPoint, Table};
use ovoid::report::{self, ASelector};
use ovoid::LinearCode;

const SEED: u64 = 20_190_601;
/// Relative tolerance of the numeric Gauss-sum comparison.
const GAUSS_TOL: f64 = 1e-6;

type Check = Result<(), String>;
type Criterion = fn(&mut Shared) -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Measurements shared by later criteria.
#[derive(Default)]
struct Shared {
    /// (q, n, k, d) of every enumerated ovoid code.
    ovoid_params: Vec<(u64, u64, u32, u64)>,
    /// (p, n, k) of every enumerated subfield code from the weight tables.
    table_codes: Vec<(u32, u64, u64)>,
    /// Enumerations whose total differed from p^k.
    bad_totals: Vec<String>,
}

fn opts() -> EnumOptions {
    EnumOptions::default()
}

fn table_code(table: Table, at: ParamPoint) -> Result<LinearCode, String> {
    let code = match report::table_selector(table) {
        None => report::tits_code((at.m - 1) / 2),
        Some(sel) => {
            let f = ExtField::new(at.p, at.m).map_err(|e| e.to_string())?;
            let a = report::select_a(&f, sel).map_err(|e| e.to_string())?;
            report::elliptic_code(&f, a)
        }
    };
    code.and_then(|c| report::prime_subfield_code(&c)).map_err(|e| e.to_string())
}

fn check_tables(shared: &mut Shared, points: &[(Table, ParamPoint)]) -> Check {
    for &(table, at) in points {
        let claim = report::check_table(table, at, None, &opts());
        ensure(claim.matches, || {
            format!("{} at p={}, m={}: {:?}", table.name(), at.p, at.m, claim.error)
        })?;
        let code = table_code(table, at)?;
        let k = code.dimension() as u32;
        let total = claim.enumerated.as_ref().map_or(0, |d| d.total());
        if total != (at.p as u128).pow(k) {
            shared.bad_totals.push(format!("{} p={} m={}: {total}", table.name(), at.p, at.m));
        }
        shared.table_codes.push((at.p, code.length() as u64, k as u64));
    }
    Ok(())
}

fn c1(shared: &mut Shared) -> Check {
    let mut claims = Vec::new();
    for (p, m) in [(2u32, 2u32), (2, 3), (3, 2), (2, 4)] {
        let f = ExtField::new(p, m).map_err(|e| e.to_string())?;
        let a = report::select_a(&f, ASelector::Irreducible).map_err(|e| e.to_string())?;
        claims.push(report::check_ovoid_code(p, m, a, &opts()));
    }
    claims.push(report::check_tits_code(1, &opts()));
    for c in &claims {
        ensure(c.matches, || format!("{} {:?}: {:?}", c.table, c.params, c.error))?;
        let q = c.params.q.unwrap() as u64;
        let dist = c.enumerated.as_ref().unwrap();
        if dist.total() != (q as u128).pow(4) {
            shared.bad_totals.push(format!("{} q={q}: {}", c.table, dist.total()));
        }
        let d = dist.min_nonzero_weight().unwrap() as u64;
        shared.ovoid_params.push((q, q * q + 1, 4, d));
    }
    Ok(())
}

fn c2(shared: &mut Shared) -> Check {
    let pts: Vec<_> = (2..=5).map(|m| (Table::T1, ParamPoint::new(2, m))).collect();
    check_tables(shared, &pts)
}

fn c3(shared: &mut Shared) -> Check {
    let mut pts = Vec::new();
    for (p, m) in [(3, 2), (3, 3), (5, 2)] {
        pts.push((Table::T2, ParamPoint::new(p, m)));
        pts.push((Table::T3, ParamPoint::new(p, m)));
    }
    check_tables(shared, &pts)
}

fn c4(shared: &mut Shared) -> Check {
    let pts = [
        (Table::T4, ParamPoint::new(3, 2)),
        (Table::T4, ParamPoint::new(5, 2)),
        (Table::T5, ParamPoint::new(3, 3)),
    ];
    check_tables(shared, &pts)
}

fn c5(shared: &mut Shared) -> Check {
    check_tables(shared, &[(Table::T6, ParamPoint::tits(1)), (Table::T6, ParamPoint::tits(2))])
}

fn c6(_: &mut Shared) -> Check {
    let expected = [
        (2, 2, [17, 7, 6, 10, 4]),
        (2, 3, [65, 10, 28, 55, 4]),
        (3, 2, [82, 7, 51, 75, 4]),
    ];
    for (p, m, exp) in expected {
        let claim = report::check_example(p, m, exp, &opts());
        ensure(claim.matches, || format!("p={p}, m={m}: measured {:?}", claim.measured))?;
    }
    Ok(())
}

fn c7(_: &mut Shared) -> Check {
    for (sel, want) in [
        (ASelector::Irreducible, 4),
        (ASelector::Reducible, 3),
        (ASelector::Quarter, 3),
    ] {
        let claim = report::check_dual_distance(3, 2, sel, want);
        ensure(claim.matches, || format!("{sel:?}: measured {:?}", claim.measured))?;
    }
    Ok(())
}

fn c8(_: &mut Shared) -> Check {
    for (p, m) in [(3u32, 1u32), (2, 2), (5, 1), (2, 3), (3, 2)] {
        let claims = report::check_geometry(p, m, &opts()).map_err(|e| e.to_string())?;
        let q = p.pow(m);
        ensure(claims.len() == q as usize, || format!("q={q}: {} values of a", claims.len()))?;
        for c in &claims {
            ensure(c.matches, || {
                format!("q={q}, a={:?}: cap={} but [{}, {}, {:?}]", c.a, c.is_cap, c.n, c.k, c.d)
            })?;
        }
        ensure(claims.iter().any(|c| c.is_cap) && claims.iter().any(|c| !c.is_cap), || {
            format!("q={q}: caps and non-caps do not both occur")
        })?;
    }
    Ok(())
}

fn small_odd_fields(limit: u64) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for p in [3u32, 5, 7] {
        for m in 1..=4u32 {
            if (p as u64).pow(m) <= limit {
                v.push((p, m));
            }
        }
    }
    v
}

fn c9(_: &mut Shared) -> Check {
    let lemma = |l: u32, p: u32, m: u32| -> Check {
        let r = report::check_lemma(l, p, m, SEED);
        ensure(r.pass, || format!("lemma {l} at p={p}, m={m}: {:?}", r.error))
    };
    for (p, m) in small_odd_fields(2401) {
        lemma(5, p, m)?;
        let f = ExtField::new(p, m).map_err(|e| e.to_string())?;
        let g = charsum::gauss_sum_quadratic(&f).map_err(|e| e.to_string())?.embed_complex();
        let want = charsum::gauss_sum_closed_form(p, m);
        let rel = (g - want).norm() / want.norm();
        ensure(rel <= GAUSS_TOL, || format!("Gauss sum at p={p}, m={m}: {g} vs {want}"))?;
        lemma(11, p, m)?;
    }
    for (p, m) in small_odd_fields(343) {
        lemma(6, p, m)?;
    }
    for (p, m) in small_odd_fields(729) {
        lemma(7, p, m)?;
        lemma(8, p, m)?;
        let f = ExtField::new(p, m).map_err(|e| e.to_string())?;
        let quarter = f.quarter().map_err(|e| e.to_string())?;
        for a in (0..f.size()).filter(|&a| a != quarter) {
            let ok = charsum::verify_eta_shift(&f, a).map_err(|e| e.to_string())?;
            ensure(ok, || format!("eta shift at p={p}, m={m}, a={a}"))?;
        }
    }
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23] {
        for m in 1..=8 {
            let ok = charsum::verify_parity_lemmas(p, m).map_err(|e| e.to_string())?;
            ensure(ok, || format!("parity at p={p}, m={m}"))?;
        }
    }
    Ok(())
}

fn c10(shared: &mut Shared) -> Check {
    for s in report::structure_sweep(SEED) {
        ensure(s.pass, || format!("{} on {}: {:?}", s.check, s.field, s.error))?;
    }
    ensure(shared.bad_totals.is_empty(), || format!("sum of A_w != q^k: {:?}", shared.bad_totals))?;
    ensure(!shared.ovoid_params.is_empty() && !shared.table_codes.is_empty(), || {
        "earlier criteria produced no measurements".into()
    })?;
    for &(q, n, k, d) in &shared.ovoid_params {
        ensure(predict::meets_griesmer(q, n, k, d), || format!("Griesmer fails for [{n}, {k}, {d}]_{q}"))?;
    }
    for &(p, n, k) in &shared.table_codes {
        let d = predict::sphere_packing_max_d(p, n, n - k);
        ensure(d == 4, || format!("dual [{n}, {}]_{p}: sphere-packing bound {d}", n - k))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("ovoid code weight distributions", c1),
        ("binary subfield codes (T1)", c2),
        ("odd subfield codes, a != 1/4 (T2, T3)", c3),
        ("odd subfield codes, a = 1/4 (T4, T5)", c4),
        ("Tits subfield codes (T6)", c5),
        ("example code parameters", c6),
        ("dual-distance contrast at q = 9", c7),
        ("cap iff ovoid-code parameters", c8),
        ("character-sum and parity lemmas", c9),
        ("structural properties and bounds", c10),
    ];
    let mut shared = Shared::default();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f(&mut shared);
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
