//! Point sets in PG(3, q): elliptic quadrics, Tits ovoids, cap checks, and
//! the generator matrix whose columns are the points.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::linalg::Mat;

/// A point of PG(3, q), normalized so its last nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([u32; 4]);

impl ProjPoint {
    pub fn new(field: &ExtField, coords: [u32; 4]) -> Result<Self> {
        Self::normalized(field, coords)
            .ok_or_else(|| Error::InvalidParameters("the zero vector is not a projective point".into()))
    }

    fn normalized(field: &ExtField, mut c: [u32; 4]) -> Option<Self> {
        let last = c.iter().rposition(|&v| v != 0)?;
        let inv = field.inv(c[last])?;
        for v in &mut c {
            *v = field.mul(*v, inv);
        }
        Some(ProjPoint(c))
    }

    pub fn coords(&self) -> [u32; 4] {
        self.0
    }
}

/// Ordered set of distinct points; the order fixes the column order of codes.
#[derive(Debug, Clone)]
pub struct PointSet {
    field: ExtField,
    points: Vec<ProjPoint>,
    index: HashMap<ProjPoint, usize>,
}

impl PointSet {
    pub fn new(field: &ExtField, points: Vec<ProjPoint>) -> Result<Self> {
        let mut index = HashMap::with_capacity(points.len());
        for (i, &pt) in points.iter().enumerate() {
            if index.insert(pt, i).is_some() {
                return Err(Error::InvalidParameters(format!("duplicate point {:?}", pt.0)));
            }
        }
        Ok(PointSet {
            field: field.clone(),
            points,
            index,
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, pt: &ProjPoint) -> Option<usize> {
        self.index.get(pt).copied()
    }

    /// One point per line, each coordinate as its coefficient array.
    pub fn export_lines(&self) -> String {
        let mut out = String::new();
        for pt in &self.points {
            let coords: Vec<Vec<u32>> = pt.0.iter().map(|&v| self.field.coeffs(v)).collect();
            out.push_str(&serde_json::to_string(&coords).expect("plain integers serialize"));
            out.push('\n');
        }
        out
    }

    pub fn parse_lines(field: &ExtField, text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let coords: Vec<Vec<u32>> = serde_json::from_str(line)
                .map_err(|e| Error::InvalidParameters(format!("bad point line {line:?}: {e}")))?;
            if coords.len() != 4 {
                return Err(Error::Dimension(format!("point with {} coordinates", coords.len())));
            }
            let mut raw = [0u32; 4];
            for (slot, c) in raw.iter_mut().zip(&coords) {
                *slot = field.from_coeffs(c)?.value();
            }
            points.push(ProjPoint::new(field, raw)?);
        }
        Self::new(field, points)
    }
}

/// Affine part in (x, y) value order, then the special point (0,0,1,0).
fn quadric_like<F>(field: &ExtField, third: F) -> Result<PointSet>
where
    F: Fn(u32, u32) -> u32,
{
    let q = field.size();
    let mut points = Vec::with_capacity((q * q + 1) as usize);
    for x in 0..q {
        for y in 0..q {
            points.push(ProjPoint([x, y, third(x, y), 1]));
        }
    }
    points.push(ProjPoint([0, 0, 1, 0]));
    PointSet::new(field, points)
}

/// {(x, y, x^2 + xy + a y^2, 1)} together with (0, 0, 1, 0). Any `a` is
/// accepted; only irreducible x^2 + x + a yields an ovoid.
pub fn elliptic_quadric(field: &ExtField, a: u32) -> Result<PointSet> {
    if field.size() <= 2 {
        return Err(Error::InvalidParameters("elliptic quadric needs q > 2".into()));
    }
    if a >= field.size() {
        return Err(Error::CoefficientOutOfRange { value: a, p: field.size() });
    }
    let f = field;
    quadric_like(field, |x, y| {
        let xx = f.mul(x, x);
        let xy = f.mul(x, y);
        let ayy = f.mul(a, f.mul(y, y));
        f.add(f.add(xx, xy), ayy)
    })
}

/// {(x, y, x^s + xy + y^(s+2), 1)} with s = 2^(e+1), plus (0, 0, 1, 0), over GF(2^(2e+1)).
pub fn tits_ovoid(field: &ExtField) -> Result<PointSet> {
    let n = field.n();
    if field.p() != 2 || n.is_multiple_of(2) || n < 3 {
        return Err(Error::InvalidParameters(format!(
            "Tits ovoid needs GF(2^(2e+1)) with e >= 1, got GF({}^{})",
            field.p(),
            n
        )));
    }
    let e = (n - 1) / 2;
    let sigma = 1i64 << (e + 1);
    let f = field;
    quadric_like(field, |x, y| {
        let xs = f.pow(x, sigma).unwrap();
        let ys2 = f.pow(y, sigma + 2).unwrap();
        f.add(f.add(xs, f.mul(x, y)), ys2)
    })
}

/// Result of a cap check; `witness` is the lexicographically least collinear triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapCheck {
    pub witness: Option<[usize; 3]>,
}

impl CapCheck {
    pub fn is_cap(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks that no three points are collinear. For each pair (i, j) the q+1
/// points of their line are looked up; any hit k > j is a collinear triple.
pub fn is_cap(set: &PointSet) -> CapCheck {
    let f = set.field();
    let q = f.size();
    let pts = set.points();
    for i in 0..pts.len() {
        let a = pts[i].0;
        for j in i + 1..pts.len() {
            let b = pts[j].0;
            let mut best: Option<usize> = None;
            for t in 1..q {
                let c = [
                    f.add(a[0], f.mul(t, b[0])),
                    f.add(a[1], f.mul(t, b[1])),
                    f.add(a[2], f.mul(t, b[2])),
                    f.add(a[3], f.mul(t, b[3])),
                ];
                if let Some(pt) = ProjPoint::normalized(f, c) {
                    if let Some(k) = set.position(&pt) {
                        if k > j && best.is_none_or(|bk| k < bk) {
                            best = Some(k);
                        }
                    }
                }
            }
            if let Some(k) = best {
                return CapCheck {
                    witness: Some([i, j, k]),
                };
            }
        }
    }
    CapCheck { witness: None }
}

/// Rank-based collinearity of three points (rank of the 3 x 4 matrix < 3).
pub fn collinear(field: &ExtField, a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    let m = Mat::from_rows(field, &[a.0.to_vec(), b.0.to_vec(), c.0.to_vec()]).unwrap();
    m.rank() < 3
}

/// The 4 x |S| matrix whose columns are the points, in set order.
pub fn generator_from_points(set: &PointSet) -> Mat {
    let f = set.field();
    let n = set.len();
    let mut m = Mat::zeros(f, 4, n);
    for (j, pt) in set.points().iter().enumerate() {
        for r in 0..4 {
            m.set(r, j, pt.0[r]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_cap(set: &PointSet) -> Option<[usize; 3]> {
        let pts = set.points();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for k in j + 1..pts.len() {
                    if collinear(set.field(), &pts[i], &pts[j], &pts[k]) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    #[test]
    fn normalization_is_canonical() {
        let f = ExtField::new(5, 1).unwrap();
        let a = ProjPoint::new(&f, [1, 2, 3, 4]).unwrap();
        let b = ProjPoint::new(&f, [2, 4, 1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords()[3], 1);
        assert!(ProjPoint::new(&f, [0, 0, 0, 0]).is_err());
    }

    #[test]
    fn small_sets() {
        let f = ExtField::new(3, 1).unwrap();
        let two = PointSet::new(
            &f,
            vec![ProjPoint([0, 0, 0, 1]), ProjPoint([0, 0, 1, 0])],
        )
        .unwrap();
        assert!(is_cap(&two).is_cap());
        let line = PointSet::new(
            &f,
            vec![
                ProjPoint([0, 0, 0, 1]),
                ProjPoint([0, 0, 1, 0]),
                ProjPoint([0, 0, 1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(is_cap(&line).witness, Some([0, 1, 2]));
        assert!(PointSet::new(&f, vec![ProjPoint([0, 0, 0, 1]); 2]).is_err());
    }

    #[test]
    fn elliptic_quadric_gf4_is_cap() {
        let f = ExtField::new(2, 2).unwrap();
        let a = (0..4).find(|&a| f.trace(a) == 1).unwrap();
        let s = elliptic_quadric(&f, a).unwrap();
        assert_eq!(s.len(), 17);
        assert_eq!(s.points().last().unwrap().coords(), [0, 0, 1, 0]);
        assert!(is_cap(&s).is_cap());
        let g = generator_from_points(&s);
        assert_eq!((g.rows(), g.cols()), (4, 17));
        assert_eq!(g.rank(), 4);
    }

    #[test]
    fn quarter_in_gf3_is_not_a_cap() {
        let f = ExtField::new(3, 1).unwrap();
        let s = elliptic_quadric(&f, f.quarter().unwrap()).unwrap();
        assert_eq!(s.len(), 10);
        let check = is_cap(&s);
        assert!(!check.is_cap());
        assert_eq!(check.witness, brute_force_cap(&s));
    }

    #[test]
    fn line_search_agrees_with_triple_search() {
        for (p, n) in [(3u32, 1u32), (2, 2), (5, 1)] {
            let f = ExtField::new(p, n).unwrap();
            for a in 0..f.size() {
                let s = elliptic_quadric(&f, a).unwrap();
                assert_eq!(s.len() as u32, f.size() * f.size() + 1);
                assert_eq!(is_cap(&s).witness, brute_force_cap(&s), "q={} a={a}", f.size());
            }
        }
    }

    #[test]
    fn elliptic_quadric_gf9() {
        let f = ExtField::new(3, 2).unwrap();
        let a = (0..9)
            .find(|&a| f.quadratic_root_test(a) == crate::field::RootClass::Irreducible)
            .unwrap();
        assert!(is_cap(&elliptic_quadric(&f, a).unwrap()).is_cap());
    }

    #[test]
    fn tits_gf8() {
        let f = ExtField::new(2, 3).unwrap();
        let t = tits_ovoid(&f).unwrap();
        assert_eq!(t.len(), 65);
        assert!(is_cap(&t).is_cap());
        assert_eq!(brute_force_cap(&t), None);
        assert_eq!(generator_from_points(&t).rank(), 4);
        assert!(tits_ovoid(&ExtField::new(2, 2).unwrap()).is_err());
        assert!(tits_ovoid(&ExtField::new(2, 1).unwrap()).is_err());
        assert!(tits_ovoid(&ExtField::new(3, 3).unwrap()).is_err());
    }

    #[test]
    fn rejects_tiny_fields() {
        let f = ExtField::new(2, 1).unwrap();
        assert!(elliptic_quadric(&f, 1).is_err());
    }

    #[test]
    fn export_roundtrip() {
        let f = ExtField::new(2, 2).unwrap();
        let s = elliptic_quadric(&f, 2).unwrap();
        let text = s.export_lines();
        assert_eq!(text.lines().next().unwrap(), "[[0,0],[0,0],[0,0],[1,0]]");
        let back = PointSet::parse_lines(&f, &text).unwrap();
        assert_eq!(back.points(), s.points());
    }

    #[test]
    fn singleton_generator() {
        let f = ExtField::new(3, 1).unwrap();
        let s = PointSet::new(&f, vec![ProjPoint([1, 0, 0, 0])]).unwrap();
        let g = generator_from_points(&s);
        assert_eq!((g.rows(), g.cols()), (4, 1));
    }
}
