//! Exact character sums in Z[zeta_p] and checks of the quadratic Gauss and
//! Weil sum evaluations, the eta-shift identities, and the eta/trace counts.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{ExtField, RootClass};

/// Element of Z[zeta_p] in the basis zeta^0, ..., zeta^(p-2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    c: Vec<i64>,
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        CycInt {
            p,
            c: vec![0; p as usize - 1],
        }
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        let mut z = Self::zero(p);
        z.c[0] = n;
        z
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// zeta^k.
    pub fn zeta_pow(p: u32, k: u64) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[(k % p as u64) as usize] = 1;
        Self::from_exponent_counts(p, &counts).expect("unit counts cannot overflow")
    }

    /// sum_j counts[j] zeta^j for j < p, reduced with zeta^(p-1) = -(1 + ... + zeta^(p-2)).
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Result<Self> {
        if counts.len() != p as usize {
            return Err(Error::Dimension(format!("{} exponent counts for p = {p}", counts.len())));
        }
        let top = counts[p as usize - 1];
        let c = counts[..p as usize - 1]
            .iter()
            .map(|&x| x.checked_sub(top).ok_or(Error::Overflow("cyclotomic reduction")))
            .collect::<Result<_>>()?;
        Ok(CycInt { p, c })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c
    }

    /// The rational integer this equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.c[1..].iter().all(|&x| x == 0).then_some(self.c[0])
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::CyclotomicMismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("cyclotomic add")))
            .collect::<Result<_>>()?;
        Ok(CycInt { p: self.p, c })
    }

    pub fn neg(&self) -> Result<CycInt> {
        let c = self
            .c
            .iter()
            .map(|&a| a.checked_neg().ok_or(Error::Overflow("cyclotomic neg")))
            .collect::<Result<_>>()?;
        Ok(CycInt { p: self.p, c })
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.add(&other.neg()?)
    }

    pub fn scale(&self, k: i64) -> Result<CycInt> {
        let c = self
            .c
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow("cyclotomic scale")))
            .collect::<Result<_>>()?;
        Ok(CycInt { p: self.p, c })
    }

    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let p = self.p as usize;
        let mut counts = vec![0i64; p];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow("cyclotomic mul"))?;
                let slot = &mut counts[(i + j) % p];
                *slot = slot.checked_add(t).ok_or(Error::Overflow("cyclotomic mul"))?;
            }
        }
        Self::from_exponent_counts(self.p, &counts)
    }

    /// Image under zeta_p -> exp(2 pi i / p).
    pub fn embed_complex(&self) -> Complex64 {
        self.c
            .iter()
            .enumerate()
            .map(|(j, &x)| Complex64::from_polar(x as f64, 2.0 * PI * j as f64 / self.p as f64))
            .sum()
    }
}

fn odd_field(field: &ExtField) -> Result<()> {
    if field.p() == 2 {
        Err(Error::EvenCharacteristic)
    } else {
        Ok(())
    }
}

/// chi(x) = zeta^Tr(x) for the canonical additive character.
pub fn additive_character(field: &ExtField, x: u32) -> CycInt {
    CycInt::zeta_pow(field.p(), field.trace(x) as u64)
}

/// sum of weight * chi(x) over the given terms.
pub fn additive_sum<I>(field: &ExtField, terms: I) -> Result<CycInt>
where
    I: IntoIterator<Item = (i64, u32)>,
{
    let mut counts = vec![0i64; field.p() as usize];
    for (w, x) in terms {
        let slot = &mut counts[field.trace(x) as usize];
        *slot = slot.checked_add(w).ok_or(Error::Overflow("character sum"))?;
    }
    CycInt::from_exponent_counts(field.p(), &counts)
}

/// sum over x of chi(a x).
pub fn additive_orthogonality_sum(field: &ExtField, a: u32) -> Result<CycInt> {
    additive_sum(field, (0..field.size()).map(|x| (1, field.mul(a, x))))
}

/// G(eta, chi) = sum over nonzero x of eta(x) chi(x).
pub fn gauss_sum_quadratic(field: &ExtField) -> Result<CycInt> {
    odd_field(field)?;
    let terms = (1..field.size()).map(|x| (field.quadratic_character(x).unwrap() as i64, x));
    additive_sum(field, terms)
}

/// sum over c of chi(a2 c^2 + a1 c + a0).
pub fn weil_sum_quadratic(field: &ExtField, a2: u32, a1: u32, a0: u32) -> Result<CycInt> {
    odd_field(field)?;
    if a2 == 0 {
        return Err(Error::InvalidParameters("leading coefficient must be nonzero".into()));
    }
    let f = field;
    let terms = (0..f.size()).map(|c| {
        let v = f.add(f.add(f.mul(a2, f.mul(c, c)), f.mul(a1, c)), a0);
        (1, v)
    });
    additive_sum(field, terms)
}

/// (-1)^(m-1) i^(((p-1)/2)^2 m) sqrt(q) as a complex number.
pub fn gauss_sum_closed_form(p: u32, m: u32) -> Complex64 {
    let sign = if (m - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let half = (p as u64 - 1) / 2;
    let e = (half * half * m as u64) % 4;
    let unit = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ][e as usize];
    let sqrt_q = (p as f64).powf(m as f64 / 2.0);
    unit * sign * sqrt_q
}

/// Relative tolerance for the numeric sign check of the Gauss sum.
pub const GAUSS_SUM_TOLERANCE: f64 = 1e-6;

/// Exact check G^2 = eta(-1) q, and numeric check of the closed form.
pub fn verify_lemma5(field: &ExtField) -> Result<bool> {
    odd_field(field)?;
    let g = gauss_sum_quadratic(field)?;
    let q = field.size() as i64;
    let eta_minus_one = field.quadratic_character(field.neg(1))? as i64;
    let exact = g.mul(&g)? == CycInt::from_int(field.p(), eta_minus_one * q);
    let expected = gauss_sum_closed_form(field.p(), field.n());
    let numeric = (g.embed_complex() - expected).norm() <= GAUSS_SUM_TOLERANCE * expected.norm();
    Ok(exact && numeric)
}

/// Weil sum against chi(a0 - a1^2 (4 a2)^(-1)) eta(a2) G, compared exactly.
pub fn verify_lemma6(field: &ExtField, a2: u32, a1: u32, a0: u32) -> Result<bool> {
    let direct = weil_sum_quadratic(field, a2, a1, a0)?;
    let f = field;
    let four_a2 = f.mul(f.from_int(4), a2);
    let shift = f.sub(a0, f.mul(f.mul(a1, a1), f.inv(four_a2).unwrap()));
    let eta = f.quadratic_character(a2)? as i64;
    let closed = additive_character(f, shift).mul(&gauss_sum_quadratic(f)?.scale(eta)?)?;
    Ok(direct == closed)
}

/// eta(a - 1/4) = (-1)^((q+1)/2) when x^2+x+a is irreducible and
/// (-1)^((q-1)/2) when it splits with a != 1/4.
pub fn verify_eta_shift(field: &ExtField, a: u32) -> Result<bool> {
    odd_field(field)?;
    let quarter = field.quarter()?;
    let q = field.size() as u64;
    let exponent = match field.quadratic_root_test(a) {
        RootClass::Irreducible => q.div_ceil(2),
        RootClass::ReducibleDistinct => (q - 1) / 2,
        RootClass::ReducibleDouble => {
            return Err(Error::InvalidParameters("a = 1/4 is covered by neither identity".into()))
        }
    };
    let expected = if exponent % 2 == 0 { 1 } else { -1 };
    Ok(field.quadratic_character(field.sub(a, quarter))? == expected)
}

/// ((p-1)/2)^2 m + (q+1)/2 is odd.
pub fn parity_odd_holds(p: u32, m: u32) -> Result<bool> {
    let (half, q) = parity_terms(p, m)?;
    Ok((half + q.div_ceil(2)) % 2 == 1)
}

/// ((p-1)/2)^2 m + (q-1)/2 is even.
pub fn parity_even_holds(p: u32, m: u32) -> Result<bool> {
    let (half, q) = parity_terms(p, m)?;
    Ok((half + (q - 1) / 2) % 2 == 0)
}

fn parity_terms(p: u32, m: u32) -> Result<(u128, u128)> {
    if p.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic);
    }
    let h = (p as u128 - 1) / 2;
    let q = (p as u128).checked_pow(m).ok_or(Error::Overflow("p^m"))?;
    Ok((h * h * m as u128, q))
}

pub fn verify_parity_lemmas(p: u32, m: u32) -> Result<bool> {
    Ok(parity_odd_holds(p, m)? && parity_even_holds(p, m)?)
}

/// Sizes of the four classes of nonzero w by eta(w) and whether Tr(w) = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EtaTraceCounts {
    pub square_trace_zero: i128,
    pub square_trace_nonzero: i128,
    pub nonsquare_trace_zero: i128,
    pub nonsquare_trace_nonzero: i128,
}

pub fn count_eta_trace_classes(field: &ExtField) -> Result<EtaTraceCounts> {
    odd_field(field)?;
    let mut c = EtaTraceCounts {
        square_trace_zero: 0,
        square_trace_nonzero: 0,
        nonsquare_trace_zero: 0,
        nonsquare_trace_nonzero: 0,
    };
    for w in 1..field.size() {
        let slot = match (field.quadratic_character(w)? == 1, field.trace(w) == 0) {
            (true, true) => &mut c.square_trace_zero,
            (true, false) => &mut c.square_trace_nonzero,
            (false, true) => &mut c.nonsquare_trace_zero,
            (false, false) => &mut c.nonsquare_trace_nonzero,
        };
        *slot += 1;
    }
    Ok(c)
}

/// Closed forms for the four counts. For even m the factor i^((p-1)m/2) is
/// real because (p-1)m/2 is even.
pub fn eta_trace_closed_form(p: u32, m: u32) -> Result<EtaTraceCounts> {
    if p.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic);
    }
    let (p, mi) = (p as i128, m as i128);
    let pm1 = p.checked_pow(m - 1).ok_or(Error::Overflow("p^(m-1)"))?;
    if m % 2 == 1 {
        return Ok(EtaTraceCounts {
            square_trace_zero: (pm1 - 1) / 2,
            square_trace_nonzero: pm1 * (p - 1) / 2,
            nonsquare_trace_zero: (pm1 - 1) / 2,
            nonsquare_trace_nonzero: pm1 * (p - 1) / 2,
        });
    }
    let e = (p - 1) * mi / 2;
    let eps = crate::predict::i_power_real(e as u64)
        .ok_or_else(|| Error::NonRealClosedForm(format!("i^{e} at p={p}, m={m}")))?;
    let h = p.pow(m / 2 - 1) * eps;
    Ok(EtaTraceCounts {
        square_trace_zero: (pm1 - 1 - (p - 1) * h) / 2,
        square_trace_nonzero: (p - 1) * (pm1 + h) / 2,
        nonsquare_trace_zero: (pm1 - 1 + (p - 1) * h) / 2,
        nonsquare_trace_nonzero: (p - 1) * (pm1 - h) / 2,
    })
}

pub fn verify_lemma11(field: &ExtField) -> Result<bool> {
    Ok(count_eta_trace_classes(field)? == eta_trace_closed_form(field.p(), field.n())?)
}

/// psi_j(x) = exp(2 pi i j log(x) / (q-1)) for nonzero x, via the primitive element.
pub fn multiplicative_character(field: &ExtField, j: u64, x: u32) -> Option<Complex64> {
    let l = field.log(x)? as u64;
    let qm1 = field.size() as u64 - 1;
    let angle = 2.0 * PI * ((j % qm1) * l % qm1) as f64 / qm1 as f64;
    Some(Complex64::from_polar(1.0, angle))
}

/// sum over nonzero x of psi_j(x).
pub fn multiplicative_orthogonality_sum(field: &ExtField, j: u64) -> Complex64 {
    (1..field.size())
        .map(|x| multiplicative_character(field, j, x).unwrap())
        .sum()
}
