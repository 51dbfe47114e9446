use rand::Rng;

use super::ExtField;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// A basis of GF(p^n) over its subfield GF(p^s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    field: ExtField,
    sub_degree: u32,
    elems: Vec<u32>,
}

impl Basis {
    /// Validates that `elems` has n/s members and a nonsingular trace Gram
    /// matrix, which for a separable extension is equivalent to independence.
    pub fn new(field: &ExtField, sub_degree: u32, elems: Vec<u32>) -> Result<Self> {
        field.check_divisor(sub_degree)?;
        let m = (field.n() / sub_degree) as usize;
        if elems.len() != m || elems.iter().any(|&e| e >= field.size()) {
            return Err(Error::NotABasis);
        }
        let basis = Basis {
            field: field.clone(),
            sub_degree,
            elems,
        };
        if basis.gram().rank() != m {
            return Err(Error::NotABasis);
        }
        Ok(basis)
    }

    /// {1, g, g^2, ..., g^(m-1)} for the field's primitive element g. A
    /// primitive element has degree m over every subfield, so this is a basis.
    pub fn polynomial(field: &ExtField, sub_degree: u32) -> Result<Self> {
        field.check_divisor(sub_degree)?;
        let m = field.n() / sub_degree;
        let g = field.primitive_value();
        let elems = (0..m as i64).map(|i| field.pow(g, i).unwrap()).collect();
        Self::new(field, sub_degree, elems)
    }

    pub fn random<R: Rng>(field: &ExtField, sub_degree: u32, rng: &mut R) -> Result<Self> {
        field.check_divisor(sub_degree)?;
        let m = (field.n() / sub_degree) as usize;
        loop {
            let elems = (0..m).map(|_| rng.gen_range(0..field.size())).collect();
            if let Ok(b) = Self::new(field, sub_degree, elems) {
                return Ok(b);
            }
        }
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn sub_degree(&self) -> u32 {
        self.sub_degree
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// G[i][j] = Tr(a_i a_j) onto the subfield.
    pub fn gram(&self) -> Mat {
        let f = &self.field;
        let rows: Vec<Vec<u32>> = self
            .elems
            .iter()
            .map(|&a| {
                self.elems
                    .iter()
                    .map(|&b| f.relative_trace(f.mul(a, b), self.sub_degree).unwrap())
                    .collect()
            })
            .collect();
        Mat::from_rows_with_cols(f, &rows, self.elems.len()).unwrap()
    }

    /// The unique basis {b_j} with Tr(a_i b_j) = delta_ij: b = a . G^{-1}.
    pub fn dual(&self) -> Basis {
        let f = &self.field;
        let ginv = self.gram().inverse().expect("validated basis has invertible Gram matrix");
        let m = self.elems.len();
        let elems = (0..m)
            .map(|j| {
                (0..m).fold(0u32, |acc, k| f.add(acc, f.mul(ginv.get(k, j), self.elems[k])))
            })
            .collect();
        Basis {
            field: f.clone(),
            sub_degree: self.sub_degree,
            elems,
        }
    }

    /// Coordinates of `x` over the subfield: a_i = Tr(x b_i) with b the dual basis.
    pub fn coordinates(&self, x: u32) -> Vec<u32> {
        let f = &self.field;
        self.dual()
            .elems
            .iter()
            .map(|&b| f.relative_trace(f.mul(x, b), self.sub_degree).unwrap())
            .collect()
    }
}
