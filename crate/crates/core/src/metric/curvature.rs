//! The Riemann tensor with its sectional and Ricci contractions.
//! Convention: `R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_{[x,y]} z`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{span_basis, unit_vector, vec_sub, CMatrix, Gr, Vector};
use crate::metric::{levi_civita, ConnectionTable, QuadraticForm};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurvatureTensor {
    dim: usize,
    r: Vec<Gr>,
}

/// A basis triple `(i, j, k)` standing for `R(e_i, e_j) e_k`.
pub type Triple = (usize, usize, usize);

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim
    }

    /// Component `l` of `R(e_i, e_j) e_k`.
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> &Gr {
        &self.r[self.idx(i, j, k) + l]
    }

    /// `R(e_i, e_j) e_k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Vector {
        let s = self.idx(i, j, k);
        self.r[s..s + self.dim].to_vec()
    }

    /// `R(x, y) z`, trilinear extension.
    pub fn apply(&self, x: &[Gr], y: &[Gr], z: &[Gr]) -> Vector {
        let n = self.dim;
        let mut out = vec![Gr::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let w = &xy * zk;
                    let s = self.idx(i, j, k);
                    for (l, o) in out.iter_mut().enumerate() {
                        let c = &self.r[s + l];
                        if !c.is_zero() {
                            *o += &(&w * c);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Zero::is_zero)
    }

    fn triples(&self) -> impl Iterator<Item = Triple> {
        let n = self.dim;
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    /// First triple with a nonzero value.
    pub fn first_nonzero(&self) -> Option<Triple> {
        self.triples()
            .find(|&(i, j, k)| self.get(i, j, k).iter().any(|x| !x.is_zero()))
    }

    /// First triple violating `R(x,y)z = −R(y,x)z`.
    pub fn antisymmetry_witness(&self) -> Option<Triple> {
        self.triples().find(|&(i, j, k)| {
            let a = self.get(i, j, k);
            let b = self.get(j, i, k);
            a.iter().zip(&b).any(|(p, q)| !(p + q).is_zero())
        })
    }

    /// First triple violating `R(x,y)z + R(y,z)x + R(z,x)y = 0`.
    pub fn bianchi_witness(&self) -> Option<Triple> {
        self.triples().find(|&(i, j, k)| {
            let (a, b, c) = (self.get(i, j, k), self.get(j, k, i), self.get(k, i, j));
            (0..self.dim).any(|l| !(&(&a[l] + &b[l]) + &c[l]).is_zero())
        })
    }

    /// First `(i, j, k, l)` violating `q(R(x,y)z, w) = −q(R(x,y)w, z)`.
    pub fn metric_skew_witness(&self, q: &QuadraticForm) -> Option<(usize, usize, usize, usize)> {
        let n = self.dim;
        for (i, j, k) in self.triples() {
            for w in k..n {
                let a = q.eval_unchecked(&self.get(i, j, k), &unit_vector(n, w));
                let b = q.eval_unchecked(&self.get(i, j, w), &unit_vector(n, k));
                if !(&a + &b).is_zero() {
                    return Some((i, j, k, w));
                }
            }
        }
        None
    }
}

pub fn curvature(g: &LieAlgebra, conn: &ConnectionTable) -> Result<CurvatureTensor> {
    let n = g.dim();
    if conn.dim() != n {
        return Err(Error::WrongDimension {
            expected: n,
            found: conn.dim(),
        });
    }
    let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut r = Vec::with_capacity(n * n * n * n);
    for i in 0..n {
        for j in 0..n {
            let bracket = g.bracket_basis(i, j);
            for k in 0..n {
                let a = conn.nabla(&e[i], &conn.get(j, k));
                let b = conn.nabla(&e[j], &conn.get(i, k));
                let c = conn.nabla(&bracket, &e[k]);
                r.extend(vec_sub(&vec_sub(&a, &b), &c));
            }
        }
    }
    Ok(CurvatureTensor { dim: n, r })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Sectional {
    Value(Gr),
    DegeneratePlane,
}

/// `K(x,y) = q(R(x,y)y, x) / (q(x,x) q(y,y) − q(x,y)²)`.
pub fn sectional_curvature(
    q: &QuadraticForm,
    r: &CurvatureTensor,
    x: &[Gr],
    y: &[Gr],
) -> Result<Sectional> {
    let n = q.dim();
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    if span_basis(n, &[x.to_vec(), y.to_vec()]).len() < 2 {
        return Err(Error::DependentVectors);
    }
    let (xx, yy, xy) = (q.eval(x, x)?, q.eval(y, y)?, q.eval(x, y)?);
    let denom = &(&xx * &yy) - &(&xy * &xy);
    if denom.is_zero() {
        return Ok(Sectional::DegeneratePlane);
    }
    let num = q.eval(&r.apply(x, y, y), x)?;
    Ok(Sectional::Value(&num / &denom))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstantCurvature {
    Constant(Gr),
    /// The triple `(i, j, k)` where `R(e_i,e_j)e_k ≠ k(q(e_j,e_k)e_i − q(e_i,e_k)e_j)`.
    NotConstant { witness: Triple },
}

impl ConstantCurvature {
    pub fn is_flat(&self) -> bool {
        matches!(self, ConstantCurvature::Constant(k) if k.is_zero())
    }

    pub fn value(&self) -> Option<&Gr> {
        match self {
            ConstantCurvature::Constant(k) => Some(k),
            ConstantCurvature::NotConstant { .. } => None,
        }
    }
}

impl fmt::Display for ConstantCurvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstantCurvature::Constant(k) => write!(f, "Constant({k})"),
            ConstantCurvature::NotConstant { .. } => write!(f, "NotConstant"),
        }
    }
}

/// `k(q(y,z)x − q(x,z)y)` on basis vectors.
fn model_tensor(q: &QuadraticForm, k: &Gr, (i, j, l): Triple) -> Vector {
    let n = q.dim();
    let mut out = vec![Gr::zero(); n];
    out[i] += &(k * q.entry(j, l));
    out[j] -= &(k * q.entry(i, l));
    out
}

/// Tests `R(x,y)z = k(q(y,z)x − q(x,z)y)` over all basis triples. The
/// candidate `k` is the sectional curvature of the first nondegenerate
/// coordinate plane `(e_i, e_j)`, `i < j`, in lexicographic order.
pub fn constant_curvature(g: &LieAlgebra, q: &QuadraticForm) -> Result<ConstantCurvature> {
    let conn = levi_civita(g, q)?;
    let r = curvature(g, &conn)?;
    constant_curvature_of(q, &r)
}

pub fn constant_curvature_of(q: &QuadraticForm, r: &CurvatureTensor) -> Result<ConstantCurvature> {
    q.require_nondegenerate()?;
    let n = q.dim();
    let k = candidate_k(q, r)?;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if r.get(i, j, l) != model_tensor(q, &k, (i, j, l)) {
                    return Ok(ConstantCurvature::NotConstant { witness: (i, j, l) });
                }
            }
        }
    }
    Ok(ConstantCurvature::Constant(k))
}

fn candidate_k(q: &QuadraticForm, r: &CurvatureTensor) -> Result<Gr> {
    let n = q.dim();
    for i in 0..n {
        for j in i + 1..n {
            if let Sectional::Value(k) =
                sectional_curvature(q, r, &unit_vector(n, i), &unit_vector(n, j))?
            {
                return Ok(k);
            }
        }
    }
    // no nondegenerate coordinate plane: read k off the first nonzero slot of
    // the unit model tensor
    let one = Gr::from_int(1);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let model = model_tensor(q, &one, (i, j, l));
                let actual = r.get(i, j, l);
                if let Some(m) = (0..n).find(|&m| !model[m].is_zero()) {
                    return Ok(&actual[m] / &model[m]);
                }
            }
        }
    }
    Ok(Gr::zero())
}

/// `Ric(x, y) = tr(z ↦ R(z, x) y)`.
pub fn ricci(r: &CurvatureTensor) -> QuadraticForm {
    let n = r.dim();
    let mut gram = CMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            gram[(a, b)] = (0..n).map(|l| r.component(l, a, b, l)).sum();
        }
    }
    QuadraticForm::new(gram).expect("Ricci tensor of a Levi-Civita connection is symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::standard::{abelian3, heis, sl2, sol};
    use num_traits::One;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gr::from_int(x)).collect()
    }

    fn tensor(g: &LieAlgebra, q: &QuadraticForm) -> CurvatureTensor {
        curvature(g, &levi_civita(g, q).unwrap()).unwrap()
    }

    fn sol_form() -> QuadraticForm {
        QuadraticForm::from_entries(3, &[(0, 0, Gr::one()), (1, 2, Gr::one())]).unwrap()
    }

    fn heis_form() -> QuadraticForm {
        QuadraticForm::from_entries(3, &[(0, 2, Gr::one()), (1, 1, Gr::one())]).unwrap()
    }

    #[test]
    fn flat_solvable_metrics() {
        assert!(tensor(&sol(), &sol_form()).is_zero());
        assert!(tensor(&heis(), &heis_form()).is_zero());
        assert_eq!(
            constant_curvature(&heis(), &heis_form()).unwrap(),
            ConstantCurvature::Constant(Gr::zero())
        );
    }

    #[test]
    fn bi_invariant_curvature() {
        let g = sl2();
        let r = tensor(&g, &g.killing_form());
        let quarter = Gr::ratio(-1, 4);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let expect: Vector = g
                        .bracket(&g.bracket_basis(i, j), &unit_vector(3, k))
                        .unwrap()
                        .iter()
                        .map(|x| x * &quarter)
                        .collect();
                    assert_eq!(r.get(i, j, k), expect);
                }
            }
        }
    }

    #[test]
    fn sl2_sectional_curvatures() {
        let g = sl2();
        let q = g.killing_form();
        let r = tensor(&g, &q);
        let k = Sectional::Value(Gr::ratio(-1, 8));
        assert_eq!(sectional_curvature(&q, &r, &v(&[0, 1, 0]), &v(&[0, 0, 1])).unwrap(), k);
        assert_eq!(sectional_curvature(&q, &r, &v(&[1, 0, 0]), &v(&[0, 1, 1])).unwrap(), k);
        assert_eq!(
            constant_curvature(&g, &q).unwrap(),
            ConstantCurvature::Constant(Gr::ratio(-1, 8))
        );
    }

    #[test]
    fn degenerate_and_dependent_planes() {
        let r = tensor(&sol(), &sol_form());
        assert_eq!(
            sectional_curvature(&sol_form(), &r, &v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(),
            Sectional::DegeneratePlane
        );
        assert!(matches!(
            sectional_curvature(&sol_form(), &r, &v(&[1, 0, 0]), &v(&[2, 0, 0])),
            Err(Error::DependentVectors)
        ));
    }

    #[test]
    fn heis_with_nonisotropic_center_is_not_constant() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        let res = constant_curvature(&heis(), &q).unwrap();
        let ConstantCurvature::NotConstant { witness: (i, j, l) } = res else {
            panic!("expected NotConstant, got {res}");
        };
        // the witness really violates the identity for the extracted k
        let r = tensor(&heis(), &q);
        let k = candidate_k(&q, &r).unwrap();
        assert_ne!(r.get(i, j, l), model_tensor(&q, &k, (i, j, l)));
    }

    #[test]
    fn ricci_contractions() {
        assert!(ricci(&tensor(&sol(), &sol_form())).is_zero());
        let g = sl2();
        let b = g.killing_form();
        assert_eq!(ricci(&tensor(&g, &b)), b.scale(&Gr::ratio(-1, 4)));
        let q = QuadraticForm::from_entries(
            3,
            &[(0, 1, Gr::one()), (2, 2, Gr::i()), (0, 0, Gr::from_int(3))],
        )
        .unwrap();
        assert!(ricci(&tensor(&abelian3(), &q)).is_zero());
    }

    #[test]
    fn symmetries_on_nonflat_metric() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        let r = tensor(&heis(), &q);
        assert!(!r.is_zero());
        assert_eq!(r.antisymmetry_witness(), None);
        assert_eq!(r.bianchi_witness(), None);
        assert_eq!(r.metric_skew_witness(&q), None);
    }

    #[test]
    fn no_nondegenerate_coordinate_plane() {
        // all principal 2×2 minors vanish, determinant −4
        let q = QuadraticForm::new(CMatrix::from_ints(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1]]))
            .unwrap();
        assert!(q.is_nondegenerate());
        let g = sl2();
        let res = constant_curvature(&g, &q).unwrap();
        // only the Killing-proportional metrics are bi-invariant; here we just
        // need a deterministic verdict that agrees with a direct check
        let r = tensor(&g, &q);
        match res {
            ConstantCurvature::Constant(k) => {
                for i in 0..3 {
                    for j in 0..3 {
                        for l in 0..3 {
                            assert_eq!(r.get(i, j, l), model_tensor(&q, &k, (i, j, l)));
                        }
                    }
                }
            }
            ConstantCurvature::NotConstant { .. } => {}
        }
        assert_eq!(
            constant_curvature(&abelian3(), &q).unwrap(),
            ConstantCurvature::Constant(Gr::zero())
        );
    }
}
