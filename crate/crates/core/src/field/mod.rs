//! Exact arithmetic in GF(p^n).
//!
//! A field element is stored as the integer `sum c_i p^i` of its coefficient
//! vector in the polynomial basis `{1, x, ..., x^(n-1)}` modulo the field's
//! monic irreducible modulus. [`ExtField`] owns the log/antilog, Zech and
//! trace tables; the raw `u32` API on it is what the hot loops use.
//! [`FieldElement`] is the checked, field-carrying value type.

mod basis;
pub(crate) mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use basis::Basis;

use crate::error::{Error, Result};

/// Default ceiling on p^n.
pub const DEFAULT_MAX_FIELD_SIZE: u64 = 1 << 20;

/// Hard ceiling: tables are indexed by `u32` and sized q.
const ABSOLUTE_MAX_FIELD_SIZE: u64 = 1 << 26;

const NO_LOG: u32 = u32::MAX;

/// Serializable field description, e.g. `{"p":2,"n":3,"modulus":[1,1,0,1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub n: u32,
    /// Coefficients low-to-high, monic, length n + 1.
    pub modulus: Vec<u32>,
}

struct FieldData {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: u32,
    /// exp[k] = primitive^k, doubled so that exp[a + b] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[d] = log(1 + primitive^d), or NO_LOG when that sum is zero.
    zech: Vec<u32>,
    trace: Vec<u32>,
}

/// The finite field GF(p^n). Cheap to clone; immutable once built.
#[derive(Clone)]
pub struct ExtField {
    inner: Arc<FieldData>,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p(), self.n(), self.inner.modulus)
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for ExtField {}

impl ExtField {
    /// GF(p^n) with the lexicographically least monic irreducible modulus.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::with_limit(p, n, DEFAULT_MAX_FIELD_SIZE)
    }

    pub fn with_limit(p: u32, n: u32, limit: u64) -> Result<Self> {
        check_size(p, n, limit)?;
        let modulus = least_irreducible(p, n);
        Ok(Self::build(p, modulus))
    }

    /// GF(p)[x]/(modulus) for a caller-chosen monic irreducible modulus.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        let n = modulus.len().saturating_sub(1) as u32;
        check_size(p, n, DEFAULT_MAX_FIELD_SIZE)?;
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { value: c, p });
        }
        if modulus.last() != Some(&1) || !poly::is_irreducible(modulus, p) {
            return Err(Error::BadModulus(modulus.to_vec()));
        }
        Ok(Self::build(p, modulus.to_vec()))
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Self> {
        let field = Self::with_modulus(desc.p, &desc.modulus)?;
        if field.n() != desc.n {
            return Err(Error::BadModulus(desc.modulus.clone()));
        }
        Ok(field)
    }

    fn build(p: u32, modulus: Vec<u32>) -> Self {
        let n = (modulus.len() - 1) as u32;
        let q = p.pow(n);
        let qm1 = (q - 1) as usize;
        let primitive = least_primitive(p, n, &modulus);

        let mut exp = vec![0u32; 2 * qm1.max(1)];
        let mut log = vec![NO_LOG; q as usize];
        let gen = value_to_coeffs(p, n, primitive);
        let mut cur = vec![1u32];
        for k in 0..qm1 {
            let v = coeffs_to_value(p, &cur);
            exp[k] = v;
            log[v as usize] = k as u32;
            cur = poly::mul_mod(&cur, &gen, &modulus, p);
        }
        for k in qm1..2 * qm1 {
            exp[k] = exp[k - qm1];
        }

        let zech = if p != 2 && n > 1 {
            (0..qm1)
                .map(|d| {
                    let s = increment_constant(p, exp[d]);
                    if s == 0 {
                        NO_LOG
                    } else {
                        log[s as usize]
                    }
                })
                .collect()
        } else {
            Vec::new()
        };

        let mut data = FieldData {
            p,
            n,
            q,
            modulus,
            primitive,
            exp,
            log,
            zech,
            trace: Vec::new(),
        };
        data.trace = build_trace_table(&data);
        ExtField {
            inner: Arc::new(data),
        }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn n(&self) -> u32 {
        self.inner.n
    }

    /// Number of elements p^n.
    pub fn size(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p(),
            n: self.n(),
            modulus: self.inner.modulus.clone(),
        }
    }

    pub fn primitive_value(&self) -> u32 {
        self.inner.primitive
    }

    pub fn primitive(&self) -> FieldElement {
        self.element(self.inner.primitive)
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.n == 1
    }

    /// Wraps a raw value. Panics if `value >= q`.
    pub fn element(&self, value: u32) -> FieldElement {
        assert!(value < self.size(), "value {value} outside GF({})", self.size());
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.n() as usize {
            return Err(Error::Dimension(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.n()
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p()) {
            return Err(Error::CoefficientOutOfRange { value: c, p: self.p() });
        }
        Ok(self.element(coeffs_to_value(self.p(), coeffs)))
    }

    /// Coefficient vector of a raw value, length n.
    pub fn coeffs(&self, value: u32) -> Vec<u32> {
        value_to_coeffs(self.p(), self.n(), value)
    }

    /// All elements in value order (0, 1, ..., q-1).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |v| self.element(v))
    }

    // ---- raw arithmetic on values ----

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let d = &*self.inner;
        if d.p == 2 {
            return a ^ b;
        }
        if d.n == 1 {
            let s = a + b;
            return if s >= d.p { s - d.p } else { s };
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let qm1 = d.q - 1;
        let la = d.log[a as usize];
        let lb = d.log[b as usize];
        let diff = if lb >= la { lb - la } else { lb + qm1 - la };
        let z = d.zech[diff as usize];
        if z == NO_LOG {
            0
        } else {
            d.exp[(la + z) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let d = &*self.inner;
        if d.p == 2 || a == 0 {
            return a;
        }
        if d.n == 1 {
            return d.p - a;
        }
        let half = (d.q - 1) / 2;
        d.exp[(d.log[a as usize] + half) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.inner;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = &*self.inner;
        let qm1 = d.q - 1;
        let l = d.log[a as usize];
        Some(d.exp[((qm1 - l) % qm1) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// a^e; negative exponents invert. 0^0 = 1, 0^e = 0 for e > 0.
    pub fn pow(&self, a: u32, e: i64) -> Option<u32> {
        if a == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Equal => Some(1),
                std::cmp::Ordering::Greater => Some(0),
                std::cmp::Ordering::Less => None,
            };
        }
        let d = &*self.inner;
        let qm1 = (d.q - 1) as i128;
        let l = d.log[a as usize] as i128;
        let k = (l * (e as i128)).rem_euclid(qm1);
        Some(d.exp[k as usize])
    }

    /// Discrete logarithm base the cached primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inner.log[a as usize])
    }

    pub fn exp(&self, k: u64) -> u32 {
        let qm1 = (self.size() - 1) as u64;
        self.inner.exp[(k % qm1) as usize]
    }

    /// Embeds the prime-field integer `c` (reduced mod p).
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p() as i64) as u32
    }

    /// x^(p^k).
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let qm1 = (self.size() - 1) as u64;
        let mut e = 1u64;
        for _ in 0..k % self.n() {
            e = e * self.p() as u64 % qm1;
        }
        let l = self.inner.log[a as usize] as u64;
        self.inner.exp[(l * e % qm1) as usize]
    }

    /// Absolute trace Tr_{p^n/p}(a) as an integer in [0, p).
    #[inline]
    pub fn trace(&self, a: u32) -> u32 {
        self.inner.trace[a as usize]
    }

    /// Relative trace onto the subfield GF(p^s): sum of a^(p^(s i)), i < n/s.
    pub fn relative_trace(&self, a: u32, s: u32) -> Result<u32> {
        self.check_divisor(s)?;
        let mut acc = 0u32;
        let mut x = a;
        for _ in 0..self.n() / s {
            acc = self.add(acc, x);
            x = self.frobenius(x, s);
        }
        Ok(acc)
    }

    pub fn check_divisor(&self, s: u32) -> Result<()> {
        if s == 0 || !self.n().is_multiple_of(s) {
            return Err(Error::NotADivisor { s, n: self.n() });
        }
        Ok(())
    }

    /// Membership in GF(p^s): y^(p^s) = y.
    pub fn in_subfield(&self, a: u32, s: u32) -> bool {
        self.frobenius(a, s) == a
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, a: u32) -> Result<i8> {
        if self.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        Ok(match self.log(a) {
            None => 0,
            Some(l) if l % 2 == 0 => 1,
            Some(_) => -1,
        })
    }

    /// Classifies x^2 + x + a over this field.
    pub fn quadratic_root_test(&self, a: u32) -> RootClass {
        if self.p() == 2 {
            // x^2 + x + a has a root iff Tr(a) = 0; derivative 1 rules out double roots.
            return if self.trace(a) == 1 {
                RootClass::Irreducible
            } else {
                RootClass::ReducibleDistinct
            };
        }
        let four = self.from_int(4);
        let disc = self.sub(1, self.mul(four, a));
        match self.quadratic_character(disc).expect("odd characteristic") {
            0 => RootClass::ReducibleDouble,
            1 => RootClass::ReducibleDistinct,
            _ => RootClass::Irreducible,
        }
    }

    /// 4^{-1} in odd characteristic.
    pub fn quarter(&self) -> Result<u32> {
        if self.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        Ok(self.inv(self.from_int(4)).expect("4 is a unit in odd characteristic"))
    }

    pub(crate) fn same_field(&self, other: &ExtField) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: format!("{self:?}"),
                right: format!("{other:?}"),
            })
        }
    }
}

/// Factorization type of x^2 + x + a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    Irreducible,
    ReducibleDistinct,
    ReducibleDouble,
}

fn check_size(p: u32, n: u32, limit: u64) -> Result<()> {
    if !poly::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let limit = limit.min(ABSOLUTE_MAX_FIELD_SIZE);
    match (p as u64).checked_pow(n) {
        Some(q) if q <= limit => Ok(()),
        _ => Err(Error::FieldTooLarge { p, n, limit }),
    }
}

pub(crate) fn coeffs_to_value(p: u32, coeffs: &[u32]) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

pub(crate) fn value_to_coeffs(p: u32, n: u32, mut value: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let c = value % p;
            value /= p;
            c
        })
        .collect()
}

/// value + 1 (only the constant coefficient changes).
fn increment_constant(p: u32, value: u32) -> u32 {
    if value % p == p - 1 {
        value - (p - 1)
    } else {
        value + 1
    }
}

/// Scans monic degree-n polynomials by the integer value of their lower
/// coefficients (the leading coefficient dominates the order).
fn least_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = p.pow(n);
    for v in 0..count {
        let mut f = value_to_coeffs(p, n, v);
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn least_primitive(p: u32, n: u32, modulus: &[u32]) -> u32 {
    let q = p.pow(n) as u64;
    if q == 2 {
        return 1;
    }
    let factors = poly::prime_factors(q - 1);
    for v in 1..q as u32 {
        let g = value_to_coeffs(p, n, v);
        let full = factors.iter().all(|&r| {
            let h = poly::pow_mod(&g, ((q - 1) / r) as u128, modulus, p);
            h != [1]
        });
        if full {
            return v;
        }
    }
    unreachable!("the multiplicative group is cyclic")
}

fn build_trace_table(d: &FieldData) -> Vec<u32> {
    let p = d.p;
    let n = d.n;
    let q = d.q;
    let qm1 = (q - 1) as u64;
    // Tr(x^i) for the polynomial basis, then extend linearly.
    let basis_trace: Vec<u32> = (0..n)
        .map(|i| {
            let b = p.pow(i);
            let mut acc = 0u32;
            let mut e = 1u64;
            for _ in 0..n {
                let l = d.log[b as usize] as u64;
                let term = d.exp[(l * e % qm1.max(1)) as usize];
                acc = raw_add(p, n, acc, term);
                e = e * p as u64 % qm1.max(1);
            }
            debug_assert!(acc < p, "trace must land in the prime field");
            acc
        })
        .collect();
    (0..q)
        .map(|v| {
            let mut t = 0u64;
            let mut rest = v;
            for &bt in &basis_trace {
                t += (rest % p) as u64 * bt as u64;
                rest /= p;
            }
            (t % p as u64) as u32
        })
        .collect()
}

/// Digit-wise addition, used before the Zech table exists.
fn raw_add(p: u32, n: u32, a: u32, b: u32) -> u32 {
    let x = value_to_coeffs(p, n, a);
    let y = value_to_coeffs(p, n, b);
    let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
    coeffs_to_value(p, &s)
}

/// An element together with the field it lives in.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: ExtField,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@GF({})", self.coeffs(), self.field.size())
    }
}

impl FieldElement {
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn with(&self, value: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.field.same_field(&rhs.field)?;
        Ok(self.with(self.field.add(self.value, rhs.value)))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.field.same_field(&rhs.field)?;
        Ok(self.with(self.field.sub(self.value, rhs.value)))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.field.same_field(&rhs.field)?;
        Ok(self.with(self.field.mul(self.value, rhs.value)))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.field.same_field(&rhs.field)?;
        let v = self
            .field
            .div(self.value, rhs.value)
            .ok_or(Error::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn inv(&self) -> Result<Self> {
        let v = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let v = self.field.pow(self.value, e).ok_or(Error::DivisionByZero)?;
        Ok(self.with(v))
    }

    /// Absolute trace, returned as an element of the same field lying in GF(p).
    pub fn absolute_trace(&self) -> Self {
        self.with(self.field.trace(self.value))
    }

    pub fn relative_trace(&self, s: u32) -> Result<Self> {
        Ok(self.with(self.field.relative_trace(self.value, s)?))
    }

    pub fn quadratic_character(&self) -> Result<i8> {
        self.field.quadratic_character(self.value)
    }

    pub fn quadratic_root_test(&self) -> RootClass {
        self.field.quadratic_root_test(self.value)
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).expect("field mismatch")
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$try(&rhs).expect("field mismatch")
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_moduli() {
        assert_eq!(ExtField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(ExtField::new(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(ExtField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(ExtField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(ExtField::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn least_irreducible_matches_brute_force_scan() {
        // Independent scan: for degree 2 and 3 irreducible == rootless.
        for (p, n) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let brute = (0..p.pow(n))
                .map(|v| {
                    let mut f = value_to_coeffs(p, n, v);
                    f.push(1);
                    f
                })
                .find(|f| {
                    (0..p).all(|x| {
                        let mut acc = 0u64;
                        for &c in f.iter().rev() {
                            acc = (acc * x as u64 + c as u64) % p as u64;
                        }
                        acc != 0
                    })
                })
                .unwrap();
            assert_eq!(ExtField::new(p, n).unwrap().modulus(), brute.as_slice());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(ExtField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(ExtField::new(2, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(ExtField::new(2, 21), Err(Error::FieldTooLarge { .. })));
        assert!(ExtField::with_limit(2, 21, 1 << 21).is_ok());
        assert!(matches!(
            ExtField::with_modulus(2, &[1, 0, 1]),
            Err(Error::BadModulus(_))
        ));
    }

    #[test]
    fn gf4_arithmetic() {
        let f = ExtField::new(2, 2).unwrap();
        let w = f.element(2);
        assert_eq!((&w * &w).coeffs(), vec![1, 1]);
        assert_eq!(&w * &f.one(), w);
        let g3 = ExtField::new(3, 1).unwrap();
        assert_eq!(g3.element(2).inv().unwrap().value(), 2);
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn cross_field_arithmetic_is_rejected() {
        let a = ExtField::new(3, 2).unwrap();
        let b = ExtField::with_modulus(3, &[2, 2, 1]).unwrap();
        let c = ExtField::new(3, 2).unwrap();
        assert!(matches!(
            a.one().try_add(&b.one()),
            Err(Error::FieldMismatch { .. })
        ));
        // Two constructions of the same descriptor are the same field.
        assert!(a.one().try_add(&c.one()).is_ok());
    }

    #[test]
    fn primitive_has_full_order() {
        for (p, n) in [(2u32, 1u32), (2, 4), (3, 2), (5, 2), (2, 5), (3, 3), (7, 1)] {
            let f = ExtField::new(p, n).unwrap();
            let g = f.primitive_value();
            let q = f.size();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1u32;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len() as u32, q - 1);
            // Least such element.
            for v in 1..g {
                let order = (1..q).find(|&k| f.pow(v, k as i64) == Some(1)).unwrap();
                assert!(order < q - 1, "{v} precedes {g} but has full order");
            }
        }
        // GF(9) mod x^2+1: x has order 4, x+1 is primitive.
        assert_eq!(ExtField::new(3, 2).unwrap().primitive_value(), 4);
    }

    #[test]
    fn traces() {
        let f4 = ExtField::new(2, 2).unwrap();
        assert_eq!(f4.trace(0), 0);
        assert_eq!(f4.trace(2), 1);
        let f9 = ExtField::new(3, 2).unwrap();
        assert_eq!(f9.trace(1), 2);
        // GF(16) -> GF(4): x + x^4, always lands in GF(4).
        let f16 = ExtField::new(2, 4).unwrap();
        for x in 0..16 {
            let t = f16.relative_trace(x, 2).unwrap();
            assert_eq!(t, f16.add(x, f16.pow(x, 4).unwrap()));
            assert!(f16.in_subfield(t, 2));
            assert_eq!(f16.relative_trace(x, 4).unwrap(), x);
            assert_eq!(f16.relative_trace(x, 1).unwrap(), f16.trace(x));
            // Transitivity: Tr_{4/2}(t) = t + t^2 for t in GF(4).
            assert_eq!(f16.add(t, f16.mul(t, t)), f16.trace(x));
        }
        assert_eq!(
            f16.relative_trace(3, 3).unwrap_err(),
            Error::NotADivisor { s: 3, n: 4 }
        );
    }

    #[test]
    fn quadratic_character_values() {
        let f9 = ExtField::new(3, 2).unwrap();
        let f3 = ExtField::new(3, 1).unwrap();
        assert_eq!(f9.quadratic_character(1).unwrap(), 1);
        assert_eq!(f9.quadratic_character(f9.neg(1)).unwrap(), 1);
        assert_eq!(f3.quadratic_character(2).unwrap(), -1);
        assert_eq!(
            ExtField::new(2, 2).unwrap().quadratic_character(1),
            Err(Error::EvenCharacteristic)
        );
    }

    #[test]
    fn root_test_examples() {
        let f5 = ExtField::new(5, 1).unwrap();
        assert_eq!(f5.quadratic_root_test(0), RootClass::ReducibleDistinct);
        assert_eq!(
            f5.quadratic_root_test(f5.quarter().unwrap()),
            RootClass::ReducibleDouble
        );
        let f4 = ExtField::new(2, 2).unwrap();
        assert_eq!(f4.quadratic_root_test(2), RootClass::Irreducible);
    }

    #[test]
    fn descriptor_roundtrip_json() {
        let f = ExtField::new(2, 3).unwrap();
        let json = serde_json::to_string(&f.descriptor()).unwrap();
        assert_eq!(json, r#"{"p":2,"n":3,"modulus":[1,1,0,1]}"#);
        let back: FieldDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(ExtField::from_descriptor(&back).unwrap(), f);
    }
}
