//! Dense polynomials over a prime field GF(p), coefficients stored low-to-high.
//!
//! Only what field construction needs: reduction, modular products and powers,
//! gcd, and Rabin's irreducibility test.

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

#[inline]
pub(crate) fn mul_mod_p(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod_p(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let mut result = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod_p(result, base, p);
        }
        base = mul_mod_p(base, base, p);
        e >>= 1;
    }
    result
}

/// Remainder of `a` modulo `f` (f nonzero).
pub(crate) fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = degree(f).expect("modulus must be nonzero");
    let lead_inv = inv_mod_p(f[df], p);
    while let Some(dr) = degree(&r) {
        if dr < df {
            break;
        }
        let factor = mul_mod_p(r[dr], lead_inv, p);
        let shift = dr - df;
        for (i, &fc) in f[..=df].iter().enumerate() {
            let sub = mul_mod_p(factor, fc, p);
            let slot = &mut r[shift + i];
            *slot = (*slot + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    let p64 = p as u64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_mod(base: &[u32], mut e: u128, f: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, f, p);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod(&b, &b, f, p);
        }
    }
    rem(&result, f, p)
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out: Vec<u32> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rabin's test: monic `f` of degree n is irreducible over GF(p) iff
/// x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = match degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(rem(&x, f, p));
    for k in 1..=n {
        let next = pow_mod(&frob[k - 1], p as u128, f, p);
        frob.push(next);
    }
    if frob[n] != rem(&x, f, p) {
        return false;
    }
    for r in prime_factors(n as u64) {
        let k = n / r as usize;
        let g = gcd(f, &sub(&frob[k], &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(f: &[u32], p: u32) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x as u64 + c as u64) % p as u64;
            }
            acc == 0
        })
    }

    #[test]
    fn low_degree_irreducibility_matches_root_search() {
        // Degrees 2 and 3 are irreducible iff rootless.
        for p in [2u32, 3, 5] {
            for deg in 2..=3usize {
                let count = p.pow(deg as u32);
                for v in 0..count {
                    let mut f: Vec<u32> = (0..deg).map(|i| (v / p.pow(i as u32)) % p).collect();
                    f.push(1);
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn quartic_product_of_quadratics_is_reducible() {
        // (x^2+x+1)^2 = x^4 + x^2 + 1 over GF(2): rootless but reducible.
        assert!(!has_root(&[1, 0, 1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn gcd_and_rem_basics() {
        // x^2 - 1 = (x-1)(x+1) over GF(5); gcd with x - 1 is x - 1 (up to unit).
        let g = gcd(&[4, 0, 1], &[4, 1], 5);
        assert_eq!(degree(&g), Some(1));
        assert_eq!(rem(&[1, 2, 3], &[1, 1], 5), vec![2]);
    }
}
