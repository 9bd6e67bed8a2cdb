//! Finite-dimensional complex Lie algebras given by structure constants.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    coordinates_in, is_zero_vec, kernel, span_basis, vec_scale, CMatrix, Gr, Vector,
};
use crate::metric::QuadraticForm;

/// Structure constants `c^k_{ij}` with `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
///
/// Construction enforces antisymmetry. The Jacobi identity is not enforced so
/// that corrupted tables can still be inspected; use [`LieAlgebra::jacobi_defect`]
/// or [`LieAlgebra::check_jacobi`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    constants: Vec<Gr>,
}

/// The four 3-dimensional unimodular complex Lie algebras.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum AlgebraClass {
    #[serde(rename = "ABELIAN_C3")]
    AbelianC3,
    #[serde(rename = "HEIS")]
    Heis,
    #[serde(rename = "SOL")]
    Sol,
    #[serde(rename = "SL2")]
    Sl2,
}

impl AlgebraClass {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraClass::AbelianC3 => "ABELIAN_C3",
            AlgebraClass::Heis => "HEIS",
            AlgebraClass::Sol => "SOL",
            AlgebraClass::Sl2 => "SL2",
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ABELIAN_C3" => Ok(AlgebraClass::AbelianC3),
            "HEIS" => Ok(AlgebraClass::Heis),
            "SOL" => Ok(AlgebraClass::Sol),
            "SL2" => Ok(AlgebraClass::Sl2),
            other => Err(Error::InvalidArgument(format!("unknown algebra class `{other}`"))),
        }
    }
}

impl LieAlgebra {
    /// `constants[(i * n + j) * n + k] = c^k_{ij}`.
    pub fn new(names: Vec<String>, constants: Vec<Gr>) -> Result<Self> {
        let n = names.len();
        if constants.len() != n * n * n {
            return Err(Error::LengthMismatch {
                expected: n * n * n,
                found: constants.len(),
            });
        }
        let alg = Self { names, constants };
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if alg.c(i, j, k) != &-alg.c(j, i, k) {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn abelian(names: &[&str]) -> Self {
        let n = names.len();
        Self {
            names: names.iter().map(|s| s.to_string()).collect(),
            constants: vec![Gr::zero(); n * n * n],
        }
    }

    /// Builds a table from the listed brackets `[e_i, e_j] = v`; all others
    /// vanish. The antisymmetric partner is filled in.
    pub fn from_brackets(names: &[&str], brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut alg = Self::abelian(names);
        let n = alg.dim();
        for (i, j, v) in brackets {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            if *i >= n || *j >= n {
                return Err(Error::InvalidArgument(format!("basis index out of range: ({i}, {j})")));
            }
            if i == j && !is_zero_vec(v) {
                return Err(Error::NotAntisymmetric { i: *i, j: *j, k: 0 });
            }
            for (k, x) in v.iter().enumerate() {
                alg.set(*i, *j, k, x.clone());
            }
        }
        Ok(alg)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    fn c(&self, i: usize, j: usize, k: usize) -> &Gr {
        &self.constants[self.idx(i, j, k)]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, value: Gr) {
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.constants[b] = -&value;
        self.constants[a] = value;
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: &[&str]) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.names = names.iter().map(|s| s.to_string()).collect();
        Ok(self)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Gr {
        self.c(i, j, k)
    }

    pub fn constants(&self) -> &[Gr] {
        &self.constants
    }

    /// Copy with `c^k_{ij}` replaced (and `c^k_{ji}` set to its negative).
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: Gr) -> Result<Self> {
        let n = self.dim();
        if i >= n || j >= n || k >= n {
            return Err(Error::InvalidArgument(format!("index ({i}, {j}, {k}) out of range")));
        }
        if i == j {
            return Err(Error::NotAntisymmetric { i, j, k });
        }
        let mut out = self.clone();
        out.set(i, j, k, value);
        Ok(out)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim()).map(|k| self.c(i, j, k).clone()).collect()
    }

    fn check_len(&self, v: &[Gr]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    pub fn bracket(&self, x: &[Gr], y: &[Gr]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Gr], y: &[Gr]) -> Vector {
        let n = self.dim();
        let mut out = vec![Gr::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &(&w * c);
                    }
                }
            }
        }
        out
    }

    /// Jacobiator `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let e = |a: usize| crate::linalg::unit_vector(self.dim(), a);
        let t1 = self.bracket_unchecked(&self.bracket_basis(i, j), &e(k));
        let t2 = self.bracket_unchecked(&self.bracket_basis(j, k), &e(i));
        let t3 = self.bracket_unchecked(&self.bracket_basis(k, i), &e(j));
        t1.iter()
            .zip(&t2)
            .zip(&t3)
            .map(|((a, b), c)| &(a + b) + c)
            .collect()
    }

    /// First basis triple `i < j < k` violating Jacobi, with the violation.
    pub fn jacobi_witness(&self) -> Option<((usize, usize, usize), Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v = self.jacobiator(i, j, k);
                    if !is_zero_vec(&v) {
                        return Some(((i, j, k), v));
                    }
                }
            }
        }
        None
    }

    /// Largest `max(|re|, |im|)` over all Jacobiator coefficients; zero
    /// exactly when the table defines a Lie algebra.
    pub fn jacobi_defect(&self) -> BigRational {
        let n = self.dim();
        let mut worst = BigRational::zero();
        // the Jacobiator is alternating, so i < j < k suffices
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for x in self.jacobiator(i, j, k) {
                        let m = x.max_norm();
                        if m > worst {
                            worst = m;
                        }
                    }
                }
            }
        }
        worst
    }

    pub fn check_jacobi(&self) -> Result<()> {
        match self.jacobi_witness() {
            Some(((i, j, k), _)) => Err(Error::NotLieAlgebra(i, j, k)),
            None => Ok(()),
        }
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Gr]) -> Result<CMatrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += &(xi * c);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> CMatrix {
        self.ad(&crate::linalg::unit_vector(self.dim(), i))
            .expect("basis vector has the right length")
    }

    pub fn killing_matrix(&self) -> CMatrix {
        let n = self.dim();
        let ads: Vec<CMatrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut b = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                b[(j, i)] = t.clone();
                b[(i, j)] = t;
            }
        }
        b
    }

    /// `B(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing_form(&self) -> QuadraticForm {
        QuadraticForm::new(self.killing_matrix()).expect("Killing form is symmetric")
    }

    /// Row-reduced basis of `[A, B]` for subspaces given by bases.
    pub fn bracket_span(&self, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
        let brackets: Vec<Vector> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .map(|(x, y)| self.bracket_unchecked(x, y))
            .collect();
        span_basis(self.dim(), &brackets)
    }

    fn full_basis(&self) -> Vec<Vector> {
        (0..self.dim())
            .map(|i| crate::linalg::unit_vector(self.dim(), i))
            .collect()
    }

    /// Dimensions of `𝒟⁰ ⊇ 𝒟¹ ⊇ …`, ending at the first zero term or the
    /// first term equal to its predecessor.
    pub fn derived_series(&self) -> Vec<usize> {
        self.series(|cur| self.bracket_span(cur, cur))
    }

    /// Dimensions of `𝒞⁰ = 𝔤, 𝒞^{k+1} = [𝔤, 𝒞^k]`, same stopping rule.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = self.full_basis();
        self.series(|cur| self.bracket_span(&full, cur))
    }

    fn series(&self, step: impl Fn(&[Vector]) -> Vec<Vector>) -> Vec<usize> {
        let mut current = self.full_basis();
        let mut dims = vec![current.len()];
        while !current.is_empty() {
            let next = step(&current);
            let d = next.len();
            dims.push(d);
            if d == current.len() {
                break;
            }
            current = next;
        }
        dims
    }

    pub fn derived_algebra(&self) -> Vec<Vector> {
        let full = self.full_basis();
        self.bracket_span(&full, &full)
    }

    /// Basis of `{x : [x, y] = 0 for all y}`.
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim();
        // rows indexed by (j, k), columns by i: Σ_i x_i c^k_{ij} = 0
        let mut m = CMatrix::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m[(j * n + k, i)] = self.c(i, j, k).clone();
                }
            }
        }
        kernel(&m)
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last() == Some(&0)
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim() > 0
            && !self
                .killing_matrix()
                .determinant()
                .expect("square")
                .is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    /// Classification of 3-dimensional unimodular algebras by basis-free
    /// invariants.
    pub fn classify_3d_unimodular(&self) -> Result<AlgebraClass> {
        if self.dim() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                found: self.dim(),
            });
        }
        self.check_jacobi()?;
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(if self.is_semisimple() {
            AlgebraClass::Sl2
        } else if self.is_abelian() {
            AlgebraClass::AbelianC3
        } else if self.is_nilpotent() {
            AlgebraClass::Heis
        } else {
            AlgebraClass::Sol
        })
    }

    /// Same algebra in the basis `f_a = Σ_i P_{ia} e_i` (columns of `p`).
    pub fn change_basis(&self, p: &CMatrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::ShapeMismatch {
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", p.rows(), p.cols()),
            });
        }
        let p_inv = p.inverse()?;
        let cols: Vec<Vector> = (0..n).map(|a| p.column(a)).collect();
        let mut constants = vec![Gr::zero(); n * n * n];
        for a in 0..n {
            for b in a + 1..n {
                let br = p_inv.mul_vec(&self.bracket_unchecked(&cols[a], &cols[b]))?;
                for (k, x) in br.into_iter().enumerate() {
                    constants[(b * n + a) * n + k] = -&x;
                    constants[(a * n + b) * n + k] = x;
                }
            }
        }
        Ok(LieAlgebra {
            names: self.names.clone(),
            constants,
        })
    }

    /// Whether the span of `basis` is closed under the bracket.
    pub fn is_subalgebra(&self, basis: &[Vector]) -> bool {
        let span = span_basis(self.dim(), basis);
        basis.iter().all(|x| {
            basis
                .iter()
                .all(|y| coordinates_in(&span, &self.bracket_unchecked(x, y)).is_some())
        })
    }

    /// Whether the span of `basis` is an ideal.
    pub fn is_ideal(&self, basis: &[Vector]) -> bool {
        let span = span_basis(self.dim(), basis);
        self.full_basis().iter().all(|x| {
            basis
                .iter()
                .all(|y| coordinates_in(&span, &self.bracket_unchecked(x, y)).is_some())
        })
    }

    /// The subalgebra spanned by the (independent) vectors `basis`, with its
    /// structure constants expressed in that basis.
    pub fn subalgebra(&self, basis: &[Vector], names: &[&str]) -> Result<LieAlgebra> {
        if names.len() != basis.len() {
            return Err(Error::LengthMismatch {
                expected: basis.len(),
                found: names.len(),
            });
        }
        for v in basis {
            self.check_len(v)?;
        }
        if span_basis(self.dim(), basis).len() != basis.len() {
            return Err(Error::DependentVectors);
        }
        let m = basis.len();
        let mut constants = vec![Gr::zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let br = self.bracket_unchecked(&basis[a], &basis[b]);
                let coords = coordinates_in(basis, &br).ok_or(Error::NotSubalgebra)?;
                for (k, x) in coords.into_iter().enumerate() {
                    constants[(a * m + b) * m + k] = x;
                }
            }
        }
        LieAlgebra::new(names.iter().map(|s| s.to_string()).collect(), constants)
    }

    /// Index of a basis label.
    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Formats a coordinate vector as a linear combination of basis labels.
    pub fn format_vector(&self, v: &[Gr]) -> String {
        crate::dsl::format_lincomb(&self.names, v)
    }

    /// Scaled basis vector `s·e_i`.
    pub fn scaled_basis(&self, i: usize, s: &Gr) -> Vector {
        vec_scale(&crate::linalg::unit_vector(self.dim(), i), s)
    }
}

/// Standard algebras used across the crate and its tests.
pub mod standard {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gr::from_int(x)).collect()
    }

    /// `(H, E, F)` with `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H`.
    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            &["H", "E", "F"],
            &[(0, 1, v(&[0, 2, 0])), (0, 2, v(&[0, 0, -2])), (1, 2, v(&[1, 0, 0]))],
        )
        .expect("valid table")
    }

    /// `(X', Y, Z)` with `[Y, Z] = X'`.
    pub fn heis() -> LieAlgebra {
        LieAlgebra::from_brackets(&["X'", "Y", "Z"], &[(1, 2, v(&[1, 0, 0]))]).expect("valid table")
    }

    /// `(Y, Z, T)` with `[Y, Z] = Z`, `[Y, T] = −T`.
    pub fn sol() -> LieAlgebra {
        LieAlgebra::from_brackets(
            &["Y", "Z", "T"],
            &[(0, 1, v(&[0, 1, 0])), (0, 2, v(&[0, 0, -1]))],
        )
        .expect("valid table")
    }

    pub fn abelian3() -> LieAlgebra {
        LieAlgebra::abelian(&["e1", "e2", "e3"])
    }

    /// `so(3)`: `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
    pub fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            &["e1", "e2", "e3"],
            &[(0, 1, v(&[0, 0, 1])), (1, 2, v(&[1, 0, 0])), (2, 0, v(&[0, 1, 0]))],
        )
        .expect("valid table")
    }

    /// `ℂ ⊕ sl(2,ℂ)` on `(C, H, E, F)`.
    pub fn c_plus_sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            &["C", "H", "E", "F"],
            &[
                (1, 2, v(&[0, 0, 2, 0])),
                (1, 3, v(&[0, 0, 0, -2])),
                (2, 3, v(&[0, 1, 0, 0])),
            ],
        )
        .expect("valid table")
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;
    use num_traits::One;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gr::from_int(x)).collect()
    }

    #[test]
    fn brackets_of_catalog_algebras() {
        let h = heis();
        assert_eq!(h.bracket(&v(&[0, 1, 0]), &v(&[0, 0, 1])).unwrap(), v(&[1, 0, 0]));
        let s = sol();
        assert_eq!(s.bracket(&v(&[1, 0, 0]), &v(&[0, 0, 1])).unwrap(), v(&[0, 0, -1]));
        let x = vec![Gr::complex(1, 2, 3, 1), Gr::i(), Gr::from_int(-2)];
        assert!(is_zero_vec(&sl2().bracket(&x, &x).unwrap()));
        assert!(s.bracket(&v(&[1, 0]), &v(&[0, 1, 0])).is_err());
    }

    #[test]
    fn jacobi_defects() {
        assert!(sl2().jacobi_defect().is_zero());
        assert!(so3().jacobi_defect().is_zero());
        // [X', Z] = Z: Jacobi on (X', Y, Z) gives [[X',Y],Z] + [[Y,Z],X'] + [[Z,X'],Y]
        // = 0 + [X',X'] + [−Z, Y] = [Y, Z] = X' ≠ 0
        let bad = heis().with_constant(0, 2, 2, Gr::one()).unwrap();
        assert_eq!(bad.jacobi_defect(), BigRational::one());
        assert_eq!(bad.jacobi_witness().unwrap().1, v(&[1, 0, 0]));
        assert!(matches!(bad.check_jacobi(), Err(Error::NotLieAlgebra(0, 1, 2))));
    }

    #[test]
    fn adjoint_matrices() {
        assert!(heis().ad(&v(&[1, 0, 0])).unwrap().is_zero());
        let d = CMatrix::diag(&[Gr::zero(), Gr::one(), Gr::from_int(-1)]);
        assert_eq!(sol().ad(&v(&[1, 0, 0])).unwrap(), d);
        assert!(sl2().ad(&v(&[0, 0, 0])).unwrap().is_zero());
    }

    #[test]
    fn killing_forms() {
        let b = sl2().killing_matrix();
        assert_eq!(b, CMatrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert!(abelian3().killing_matrix().is_zero());
        assert!(heis().killing_matrix().is_zero());
    }

    #[test]
    fn series() {
        assert_eq!(heis().derived_series(), vec![3, 1, 0]);
        assert_eq!(sol().derived_series(), vec![3, 2, 0]);
        assert_eq!(sl2().derived_series(), vec![3, 3]);
        assert_eq!(heis().lower_central_series(), vec![3, 1, 0]);
        assert_eq!(sol().lower_central_series(), vec![3, 2, 2]);
        assert_eq!(abelian3().derived_series(), vec![3, 0]);
    }

    #[test]
    fn centers() {
        assert_eq!(heis().center(), vec![v(&[1, 0, 0])]);
        assert_eq!(abelian3().center().len(), 3);
        assert!(sl2().center().is_empty());
        let c = c_plus_sl2().center();
        assert_eq!(c, vec![v(&[1, 0, 0, 0])]);
        for x in heis().center() {
            assert!(heis().ad(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn structural_predicates() {
        let s = sol();
        assert!(s.is_unimodular() && s.is_solvable() && !s.is_nilpotent());
        assert!(heis().is_nilpotent());
        assert!(sl2().is_semisimple() && !sl2().is_solvable());
        assert!(!c_plus_sl2().is_semisimple());
    }

    #[test]
    fn classification() {
        assert_eq!(heis().classify_3d_unimodular().unwrap(), AlgebraClass::Heis);
        assert_eq!(sol().classify_3d_unimodular().unwrap(), AlgebraClass::Sol);
        assert_eq!(sl2().classify_3d_unimodular().unwrap(), AlgebraClass::Sl2);
        assert_eq!(so3().classify_3d_unimodular().unwrap(), AlgebraClass::Sl2);
        assert_eq!(abelian3().classify_3d_unimodular().unwrap(), AlgebraClass::AbelianC3);
        // affine algebra ⊕ ℂ: [a, b] = b is not unimodular
        let aff = LieAlgebra::from_brackets(&["a", "b", "c"], &[(0, 1, v(&[0, 1, 0]))]).unwrap();
        assert!(matches!(aff.classify_3d_unimodular(), Err(Error::NotUnimodular)));
        assert!(matches!(
            c_plus_sl2().classify_3d_unimodular(),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn conjugated_sl2_still_classifies() {
        let p = CMatrix::from_rows(vec![
            vec![Gr::one(), Gr::ratio(1, 2), Gr::i()],
            vec![Gr::from_int(2), Gr::zero(), Gr::one()],
            vec![Gr::complex(0, 1, -1, 3), Gr::one(), Gr::from_int(3)],
        ])
        .unwrap();
        let c = sl2().change_basis(&p).unwrap();
        assert_ne!(c, sl2());
        assert!(c.jacobi_defect().is_zero());
        assert_eq!(c.classify_3d_unimodular().unwrap(), AlgebraClass::Sl2);
    }

    #[test]
    fn subalgebras() {
        let g = c_plus_sl2();
        let sl = vec![v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])];
        assert!(g.is_subalgebra(&sl) && g.is_ideal(&sl));
        let sub = g.subalgebra(&sl, &["H", "E", "F"]).unwrap();
        assert_eq!(sub, sl2());
        let not_closed = vec![v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])];
        assert!(!g.is_subalgebra(&not_closed));
        assert!(matches!(
            g.subalgebra(&not_closed, &["E", "F"]),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn antisymmetry_enforced() {
        let mut consts = vec![Gr::zero(); 8];
        consts[1] = Gr::one(); // c^1_{00}
        assert!(LieAlgebra::new(vec!["a".into(), "b".into()], consts).is_err());
    }
}
