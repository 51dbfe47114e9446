//! Subfield codes: expansion of a generator over a basis of GF(p^n) / GF(p^s),
//! the trace description of the same code, and the subfield subcode.

use std::collections::HashSet;

use rand::Rng;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Basis, ExtField};
use crate::linalg::{random_invertible, Mat};

/// A tower GF(p^n) / GF(p^s) with an expansion basis and its trace dual.
///
/// The subfield is kept as a standalone field so codes over it enumerate over
/// p^s symbols. `embed` maps its values into the big field, `lift` goes back.
#[derive(Debug, Clone)]
pub struct SubfieldContext {
    big: ExtField,
    small: ExtField,
    basis: Basis,
    dual: Basis,
    embed: Vec<u32>,
    lift: Vec<u32>,
}

const NOT_IN_SUBFIELD: u32 = u32::MAX;

impl SubfieldContext {
    /// Context with the polynomial basis {1, g, g^2, ...} of the primitive element.
    pub fn new(big: &ExtField, s: u32) -> Result<Self> {
        Self::with_basis(Basis::polynomial(big, s)?)
    }

    pub fn random<R: Rng>(big: &ExtField, s: u32, rng: &mut R) -> Result<Self> {
        Self::with_basis(Basis::random(big, s, rng)?)
    }

    pub fn with_basis(basis: Basis) -> Result<Self> {
        let big = basis.field().clone();
        let s = basis.sub_degree();
        let small = ExtField::new(big.p(), s)?;
        let embed = embedding(&small, &big);
        let mut lift = vec![NOT_IN_SUBFIELD; big.size() as usize];
        for (v, &e) in embed.iter().enumerate() {
            lift[e as usize] = v as u32;
        }
        let dual = basis.dual();
        Ok(SubfieldContext {
            big,
            small,
            basis,
            dual,
            embed,
            lift,
        })
    }

    pub fn big(&self) -> &ExtField {
        &self.big
    }

    pub fn small(&self) -> &ExtField {
        &self.small
    }

    pub fn sub_degree(&self) -> u32 {
        self.basis.sub_degree()
    }

    /// Extension degree n/s of the tower.
    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dual_basis(&self) -> &Basis {
        &self.dual
    }

    pub fn embed(&self, v: u32) -> u32 {
        self.embed[v as usize]
    }

    /// Small-field value of a big-field element lying in the subfield.
    pub fn lift(&self, v: u32) -> Option<u32> {
        match self.lift[v as usize] {
            NOT_IN_SUBFIELD => None,
            x => Some(x),
        }
    }

    /// Relative trace to the subfield, as a small-field value.
    pub fn trace(&self, v: u32) -> u32 {
        let t = self.big.relative_trace(v, self.sub_degree()).expect("degree checked by basis");
        self.lift[t as usize]
    }

    fn check_code(&self, code: &LinearCode) -> Result<()> {
        self.big.same_field(code.field())
    }

    /// Replaces each generator entry g_ij by the column (Tr(g_ij a_1), ..., Tr(g_ij a_m)).
    /// Keeps all k*m rows; row l of block i is (Tr(g_i1 a_l), ..., Tr(g_in a_l)).
    pub fn expand(&self, code: &LinearCode) -> Result<LinearCode> {
        self.check_code(code)?;
        let g = code.generator();
        let f = &self.big;
        let mut rows = Vec::with_capacity(g.rows() * self.degree());
        for i in 0..g.rows() {
            for &a in self.basis.elements() {
                rows.push(g.row(i).iter().map(|&x| self.trace(f.mul(x, a))).collect());
            }
        }
        Ok(LinearCode::new(Mat::from_rows_with_cols(&self.small, &rows, g.cols())?))
    }

    /// Coordinate j is Tr(sum_i a_i g_ij) for the message (a_1, ..., a_k) over the big field.
    pub fn trace_oracle(&self, code: &LinearCode, message: &[u32]) -> Result<Vec<u32>> {
        self.check_code(code)?;
        let word = code.encode(message)?;
        Ok(word.into_iter().map(|x| self.trace(x)).collect())
    }

    /// Checks that the trace images of all messages form exactly the expanded code.
    pub fn verify_trace_representation(&self, code: &LinearCode, budget_log2: u32) -> Result<bool> {
        let k = code.generator().rows();
        let q = self.big.size() as u128;
        let total = q.checked_pow(k as u32).filter(|&t| budget_log2 >= 128 || t <= 1u128 << budget_log2);
        let total = total.ok_or(Error::BudgetExceeded {
            p: self.big.size(),
            k,
            budget_log2,
        })?;
        let mut oracle: HashSet<Vec<u32>> = HashSet::new();
        let mut msg = vec![0u32; k];
        for _ in 0..total {
            oracle.insert(self.trace_oracle(code, &msg)?);
            increment(&mut msg, self.big.size());
        }
        let expanded = self.expand(code)?;
        let words = expanded.codewords(budget_log2)?;
        Ok(words.len() == oracle.len() && words.iter().all(|w| oracle.contains(w)))
    }

    /// Subfield subcode: codewords of `code` with every coordinate in GF(p^s),
    /// as a code over the standalone subfield.
    ///
    /// With a_1 = 1, an element c lies in the subfield iff Tr(c b_r) = 0 for
    /// r >= 2, b the dual basis. Writing each message symbol over the basis
    /// turns these conditions into a linear system over the subfield.
    pub fn subfield_subcode(&self, code: &LinearCode) -> Result<LinearCode> {
        self.check_code(code)?;
        let f = &self.big;
        let alphas = self.basis.elements();
        if alphas[0] != 1 {
            return Err(Error::InvalidParameters("subfield subcode needs a basis starting with 1".into()));
        }
        let betas = self.dual.elements();
        let g = code.basis();
        let (k, n, m) = (g.rows(), g.cols(), self.degree());
        // Unknown u_(i,t) is the t-th coordinate of message symbol i.
        let unknowns: Vec<(usize, u32)> = (0..k).flat_map(|i| alphas.iter().map(move |&a| (i, a))).collect();
        let mut constraints = Vec::with_capacity(n * (m - 1));
        for j in 0..n {
            for &b in &betas[1..] {
                constraints.push(
                    unknowns
                        .iter()
                        .map(|&(i, a)| self.trace(f.mul(f.mul(a, g.get(i, j)), b)))
                        .collect::<Vec<u32>>(),
                );
            }
        }
        let system = Mat::from_rows_with_cols(&self.small, &constraints, unknowns.len())?;
        let solutions = system.kernel_basis();
        let sf = &self.small;
        let mut rows = Vec::with_capacity(solutions.rows());
        for r in 0..solutions.rows() {
            let u = solutions.row(r);
            let row: Vec<u32> = (0..n)
                .map(|j| {
                    unknowns.iter().zip(u).fold(0u32, |acc, (&(i, a), &uv)| {
                        sf.add(acc, sf.mul(uv, self.trace(f.mul(f.mul(a, g.get(i, j)), betas[0]))))
                    })
                })
                .collect();
            rows.push(row);
        }
        Ok(LinearCode::new(Mat::from_rows_with_cols(sf, &rows, n)?))
    }
}

/// Images of the small field's elements under the least root of its modulus.
fn embedding(small: &ExtField, big: &ExtField) -> Vec<u32> {
    let modulus = small.modulus();
    let eval = |x: u32| {
        modulus
            .iter()
            .rev()
            .fold(0u32, |acc, &c| big.add(big.mul(acc, x), big.from_int(c as i64)))
    };
    let theta = (0..big.size())
        .find(|&x| eval(x) == 0)
        .expect("a subfield modulus splits in the extension");
    (0..small.size())
        .map(|v| {
            small
                .coeffs(v)
                .iter()
                .rev()
                .fold(0u32, |acc, &c| big.add(big.mul(acc, theta), big.from_int(c as i64)))
        })
        .collect()
}

fn increment(msg: &mut [u32], q: u32) {
    for d in msg.iter_mut() {
        *d += 1;
        if *d < q {
            return;
        }
        *d = 0;
    }
}

/// Expansions over two bases of the same tower give the same code.
pub fn verify_basis_independence(
    code: &LinearCode,
    ctx1: &SubfieldContext,
    ctx2: &SubfieldContext,
) -> Result<bool> {
    if ctx1.big != ctx2.big || ctx1.sub_degree() != ctx2.sub_degree() {
        return Err(Error::InvalidParameters("contexts describe different towers".into()));
    }
    Ok(ctx1.expand(code)?.same_code(&ctx2.expand(code)?))
}

/// Expanding T*G for a random invertible T gives the same code as expanding G.
pub fn verify_generator_independence(code: &LinearCode, ctx: &SubfieldContext, seed: u64) -> Result<bool> {
    let g = code.generator();
    let t = random_invertible(code.field(), g.rows(), seed);
    let other = LinearCode::new(t.mul(g)?);
    Ok(ctx.expand(code)?.same_code(&ctx.expand(&other)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::EnumOptions;
    use crate::geometry::{elliptic_quadric, tits_ovoid};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn quadric_code(p: u32, n: u32) -> LinearCode {
        let f = ExtField::new(p, n).unwrap();
        let a = (0..f.size())
            .find(|&a| f.quadratic_root_test(a) == crate::field::RootClass::Irreducible)
            .unwrap();
        LinearCode::from_point_set(&elliptic_quadric(&f, a).unwrap())
    }

    #[test]
    fn embedding_is_a_field_homomorphism() {
        for (p, n, s) in [(2, 4, 2), (3, 2, 1), (2, 6, 3), (2, 6, 2), (3, 4, 2)] {
            let big = ExtField::new(p, n).unwrap();
            let ctx = SubfieldContext::new(&big, s).unwrap();
            let sm = ctx.small().clone();
            for a in 0..sm.size() {
                assert!(big.in_subfield(ctx.embed(a), s));
                assert_eq!(ctx.lift(ctx.embed(a)), Some(a));
                for b in 0..sm.size() {
                    assert_eq!(ctx.embed(sm.add(a, b)), big.add(ctx.embed(a), ctx.embed(b)));
                    assert_eq!(ctx.embed(sm.mul(a, b)), big.mul(ctx.embed(a), ctx.embed(b)));
                }
            }
        }
    }

    #[test]
    fn expansion_over_the_field_itself_is_identity() {
        let c = quadric_code(2, 2);
        let ctx = SubfieldContext::new(c.field(), 2).unwrap();
        let e = ctx.expand(&c).unwrap();
        assert!(e.same_code(&c));
    }

    #[test]
    fn known_dimensions() {
        let c = quadric_code(2, 2);
        let ctx = SubfieldContext::new(c.field(), 1).unwrap();
        let e = ctx.expand(&c).unwrap();
        assert_eq!(e.generator().rows(), 8);
        assert_eq!((e.length(), e.dimension()), (17, 7));

        let f8 = ExtField::new(2, 3).unwrap();
        let t = LinearCode::from_point_set(&tits_ovoid(&f8).unwrap());
        let e = SubfieldContext::new(&f8, 1).unwrap().expand(&t).unwrap();
        assert_eq!((e.length(), e.dimension()), (65, 10));
    }

    #[test]
    fn trace_oracle_spans_the_expanded_code() {
        for (p, n, s) in [(2, 2, 1), (3, 2, 1), (2, 4, 2)] {
            let c = quadric_code(p, n);
            let ctx = SubfieldContext::new(c.field(), s).unwrap();
            assert!(ctx.verify_trace_representation(&c, 18).unwrap());
        }
        let c = quadric_code(2, 2);
        let ctx = SubfieldContext::new(c.field(), 1).unwrap();
        assert_eq!(ctx.trace_oracle(&c, &[0; 4]).unwrap(), vec![0; 17]);
        assert!(ctx.trace_oracle(&c, &[0; 3]).is_err());
    }

    #[test]
    fn oracle_matches_quadratic_form_description() {
        let f = ExtField::new(3, 2).unwrap();
        let a = 5;
        let c = LinearCode::from_point_set(&elliptic_quadric(&f, a).unwrap());
        let ctx = SubfieldContext::new(&f, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let msg: Vec<u32> = (0..4).map(|_| rng.gen_range(0..9)).collect();
            let (u, v, w, h) = (msg[0], msg[1], msg[2], msg[3]);
            let word = ctx.trace_oracle(&c, &msg).unwrap();
            let mut j = 0;
            for x in 0..9 {
                for y in 0..9 {
                    let g = [
                        f.mul(u, x),
                        f.mul(v, y),
                        f.mul(w, f.mul(x, x)),
                        f.mul(w, f.mul(x, y)),
                        f.mul(w, f.mul(a, f.mul(y, y))),
                    ]
                    .into_iter()
                    .fold(0, |acc, t| f.add(acc, t));
                    let expected = (f.trace(g) + f.trace(h)) % 3;
                    assert_eq!(word[j], expected);
                    j += 1;
                }
            }
            assert_eq!(word[81], f.trace(w));
        }
    }

    #[test]
    fn basis_and_generator_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (p, n, s) in [(3, 2, 1), (2, 2, 1), (2, 4, 2)] {
            let c = quadric_code(p, n);
            let base = SubfieldContext::new(c.field(), s).unwrap();
            for seed in 0..5 {
                let other = SubfieldContext::random(c.field(), s, &mut rng).unwrap();
                assert!(verify_basis_independence(&c, &base, &other).unwrap());
                assert!(verify_generator_independence(&c, &other, seed).unwrap());
            }
            assert!(verify_basis_independence(&c, &base, &base).unwrap());
        }
    }

    #[test]
    fn permutation_transfers() {
        let c = quadric_code(3, 2);
        let ctx = SubfieldContext::new(c.field(), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut perm: Vec<usize> = (0..82).collect();
        for i in (1..82).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let lhs = ctx.expand(&c.permute(&perm).unwrap()).unwrap();
        let rhs = ctx.expand(&c).unwrap().permute(&perm).unwrap();
        assert!(lhs.same_code(&rhs));
    }

    #[test]
    fn subfield_scalars_preserve_subfield_weights() {
        let c = quadric_code(2, 4);
        let ctx = SubfieldContext::new(c.field(), 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let n = c.length();
        let scalars: Vec<u32> = (0..n).map(|_| ctx.embed(rng.gen_range(1..4))).collect();
        let ident: Vec<usize> = (0..n).collect();
        let scaled = c.apply_monomial(&ident, &scalars).unwrap();
        let opts = EnumOptions::default();
        let a = ctx.expand(&c).unwrap().weight_distribution(&opts).unwrap();
        let b = ctx.expand(&scaled).unwrap().weight_distribution(&opts).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subfield_subcode_examples() {
        let c = quadric_code(2, 2);
        let ctx = SubfieldContext::new(c.field(), 1).unwrap();
        let sub = ctx.subfield_subcode(&c).unwrap();
        assert!(sub.dimension() <= 4);
        assert_ne!(sub.dimension(), ctx.expand(&c).unwrap().dimension());
        // Brute force: keep codewords of C with all coordinates in GF(2).
        let mut count = 0u64;
        let mut msg = vec![0u32; 4];
        for _ in 0..256 {
            let w = c.encode(&msg).unwrap();
            if w.iter().all(|&x| x < 2) {
                count += 1;
                assert!(sub.contains(&w));
            }
            increment(&mut msg, 4);
        }
        assert_eq!(count, 1 << sub.dimension());

        let same = SubfieldContext::new(c.field(), 2).unwrap();
        assert!(same.subfield_subcode(&c).unwrap().same_code(&c));

        let zero = LinearCode::new(Mat::zeros(c.field(), 1, 5));
        assert_eq!(ctx.subfield_subcode(&zero).unwrap().dimension(), 0);
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let c = quadric_code(2, 2);
        let other = ExtField::new(2, 3).unwrap();
        let ctx = SubfieldContext::new(&other, 1).unwrap();
        assert!(ctx.expand(&c).is_err());
    }
}
