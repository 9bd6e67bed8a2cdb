use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{dot, CMatrix, Gr, Vector};

/// Symmetric complex bilinear form given by its Gram matrix, with the
/// determinant cached as the nondegeneracy certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    gram: CMatrix,
    det: Gr,
}

impl QuadraticForm {
    pub fn new(gram: CMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if let Some((i, j)) = gram.first_asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        let det = gram.determinant()?;
        Ok(Self { gram, det })
    }

    /// Form from sparse entries `g(e_i, e_j) = value`; the symmetric partner
    /// is filled in.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Gr)]) -> Result<Self> {
        let mut gram = CMatrix::zeros(dim, dim);
        for (i, j, x) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::InvalidArgument(format!("entry ({i}, {j}) out of range")));
            }
            gram[(*i, *j)] = x.clone();
            gram[(*j, *i)] = x.clone();
        }
        Self::new(gram)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &CMatrix {
        &self.gram
    }

    pub fn determinant(&self) -> &Gr {
        &self.det
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det.is_zero()
    }

    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::DegenerateForm)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero()
    }

    pub fn eval(&self, x: &[Gr], y: &[Gr]) -> Result<Gr> {
        Ok(dot(x, &self.gram.mul_vec(y)?))
    }

    pub(crate) fn eval_unchecked(&self, x: &[Gr], y: &[Gr]) -> Gr {
        self.eval(x, y).expect("vector length matches the form")
    }

    pub fn norm(&self, x: &[Gr]) -> Result<Gr> {
        self.eval(x, x)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Gr {
        &self.gram[(i, j)]
    }

    /// Lowers an index: the covector `g(x, ·)`.
    pub fn flat(&self, x: &[Gr]) -> Result<Vector> {
        self.gram.mul_vec(x)
    }

    /// Form induced on the span of `basis` (Gram matrix in that basis).
    pub fn restrict(&self, basis: &[Vector]) -> Result<QuadraticForm> {
        let m = basis.len();
        let mut gram = CMatrix::zeros(m, m);
        for a in 0..m {
            for b in a..m {
                let v = self.eval(&basis[a], &basis[b])?;
                gram[(b, a)] = v.clone();
                gram[(a, b)] = v;
            }
        }
        QuadraticForm::new(gram)
    }

    pub fn scale(&self, s: &Gr) -> QuadraticForm {
        QuadraticForm::new(self.gram.scale(s)).expect("scaling preserves symmetry")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn rejects_asymmetric() {
        let g = CMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(matches!(QuadraticForm::new(g), Err(Error::NotSymmetric(0, 1))));
    }

    #[test]
    fn nondegeneracy_certificate() {
        let q = QuadraticForm::from_entries(3, &[(0, 2, Gr::one()), (1, 1, Gr::one())]).unwrap();
        assert_eq!(q.determinant(), &Gr::from_int(-1));
        assert!(q.is_nondegenerate());
        let d = QuadraticForm::from_entries(2, &[(0, 0, Gr::one())]).unwrap();
        assert!(matches!(d.require_nondegenerate(), Err(Error::DegenerateForm)));
    }

    #[test]
    fn restriction() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        let plane = vec![
            vec![Gr::one(), Gr::i(), Gr::zero()],
            vec![Gr::one(), -Gr::i(), Gr::zero()],
        ];
        let r = q.restrict(&plane).unwrap();
        assert_eq!(r.gram(), &CMatrix::from_ints(&[&[0, 2], &[2, 0]]));
    }
}
