//! Exact Gaussian-rational linear algebra, with a small floating mode for
//! square roots that have no exact value.

mod cfloat;
mod matrix;
mod poly;
mod scalar;

pub use cfloat::{CFloat, DEFAULT_TOL};
pub use matrix::{
    coordinates_in, dot, is_zero_vec, kernel, solve_linear, span_basis, unit_vector, vec_add,
    vec_scale, vec_sub, CMatrix, LinearSolution, Rref, Vector,
};
pub use poly::{CPoly, PolyMatrix};
pub use scalar::{GaussianRational, Gr};

use num_traits::One;

use crate::error::{Error, Result};

fn require_square(a: &CMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Monic minimal polynomial, found as the first linear dependency among
/// `I, A, A², …` (flattened to vectors).
pub fn min_poly(a: &CMatrix) -> Result<CPoly> {
    require_square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(CPoly::constant(Gr::one()));
    }
    let mut powers: Vec<Vector> = vec![CMatrix::identity(n).entries().to_vec()];
    let mut current = CMatrix::identity(n);
    for _ in 1..=n {
        current = current.try_mul(a)?;
        let target = current.entries().to_vec();
        let basis = CMatrix::from_columns(n * n, &powers)?;
        if let LinearSolution::Solved { x, .. } = solve_linear(&basis, &target)? {
            // A^k = Σ x_j A^j  ⟹  p = x^k − Σ x_j x^j
            let mut coeffs: Vec<Gr> = x.iter().map(|c| -c).collect();
            coeffs.push(Gr::one());
            return Ok(CPoly::new(coeffs));
        }
        powers.push(target);
    }
    unreachable!("Cayley–Hamilton bounds the degree by n")
}

/// `Aⁿ = 0` for an `n×n` matrix.
pub fn is_nilpotent_matrix(a: &CMatrix) -> Result<bool> {
    require_square(a)?;
    Ok(a.pow(a.rows() as u32)?.is_zero())
}

/// Diagonalisable over ℂ, i.e. the minimal polynomial is squarefree.
pub fn is_semisimple_matrix(a: &CMatrix) -> Result<bool> {
    Ok(min_poly(a)?.is_squarefree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn jordan(eig: i64, n: usize) -> CMatrix {
        let mut m = CMatrix::identity(n).scale(&Gr::from_int(eig));
        for i in 0..n - 1 {
            m[(i, i + 1)] = Gr::one();
        }
        m
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(
            min_poly(&CMatrix::identity(3)).unwrap().to_string(),
            "x - 1"
        );
        assert_eq!(min_poly(&jordan(0, 3)).unwrap().to_string(), "x^3");
        let d = CMatrix::diag(&[Gr::one(), Gr::from_int(-1)]);
        assert_eq!(min_poly(&d).unwrap().to_string(), "x^2 - 1");
    }

    #[test]
    fn min_poly_annihilates() {
        let a = CMatrix::from_rows(vec![
            vec![Gr::from_int(2), Gr::i(), Gr::zero()],
            vec![Gr::zero(), Gr::from_int(2), Gr::zero()],
            vec![Gr::ratio(1, 3), Gr::zero(), Gr::from_int(-1)],
        ])
        .unwrap();
        let p = min_poly(&a).unwrap();
        assert!(p.eval_matrix(&a).unwrap().is_zero());
        assert_eq!(p.leading(), Some(&Gr::one()));
    }

    #[test]
    fn nilpotency() {
        let strict = CMatrix::from_ints(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        assert!(is_nilpotent_matrix(&strict).unwrap());
        assert!(!is_nilpotent_matrix(&CMatrix::identity(3)).unwrap());
        // N e₂ = e₁, N e₃ = −e₂
        let n = CMatrix::from_ints(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]]);
        assert!(is_nilpotent_matrix(&n).unwrap());
        assert!(!is_semisimple_matrix(&n).unwrap());
    }

    #[test]
    fn semisimplicity() {
        let d = CMatrix::diag(&[Gr::one(), Gr::zero(), Gr::from_int(-1)]);
        assert!(is_semisimple_matrix(&d).unwrap());
        assert!(!is_semisimple_matrix(&jordan(0, 2)).unwrap());
        assert!(!is_semisimple_matrix(&jordan(1, 2)).unwrap());
        // rotation generator has eigenvalues ±i
        let r = CMatrix::from_ints(&[&[0, -1], &[1, 0]]);
        assert!(is_semisimple_matrix(&r).unwrap());
    }

    #[test]
    fn non_square_rejected() {
        let a = CMatrix::zeros(2, 3);
        assert!(min_poly(&a).is_err());
        assert!(is_nilpotent_matrix(&a).is_err());
    }
}
