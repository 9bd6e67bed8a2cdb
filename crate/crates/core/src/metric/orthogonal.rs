//! The orthogonal Lie algebra `so(q)` and the stabilisers of vectors inside it.
//!
//! Also here: adapted bases built from isotropic lines, and the one-parameter
//! unipotent group that preserves the anti-diagonal form.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    is_zero_vec, kernel, solve_linear, span_basis, vec_scale, vec_sub, CFloat, CMatrix, CPoly,
    Gr, LinearSolution, PolyMatrix, Vector, DEFAULT_TOL,
};
use crate::metric::QuadraticForm;

/// Unknowns are the entries of `A` in row-major order.
fn matrix_from_unknowns(n: usize, x: &[Gr]) -> CMatrix {
    CMatrix::from_rows(x.chunks(n).map(<[Gr]>::to_vec).collect()).expect("square")
}

/// Rows of the linear system `Aᵀ G + G A = 0` in the entries of `A`.
fn skew_equations(gram: &CMatrix) -> CMatrix {
    let n = gram.rows();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            // (AᵀG + GA)_{ij} = Σ_k A_{ki} G_{kj} + G_{ik} A_{kj}
            let mut row = vec![Gr::zero(); n * n];
            for k in 0..n {
                row[k * n + i] += &gram[(k, j)];
                row[k * n + j] += &gram[(i, k)];
            }
            rows.push(row);
        }
    }
    CMatrix::from_rows(rows).expect("uniform rows")
}

/// Basis of `so(q) = {A : q(Au, v) + q(u, Av) = 0}`.
pub fn skew_algebra(q: &QuadraticForm) -> Result<Vec<CMatrix>> {
    q.require_nondegenerate()?;
    let n = q.dim();
    Ok(kernel(&skew_equations(q.gram()))
        .iter()
        .map(|x| matrix_from_unknowns(n, x))
        .collect())
}

/// Basis of `{A ∈ so(q) : A v = 0 for every given v}`.
pub fn stabilizer_in_skew(q: &QuadraticForm, vectors: &[Vector]) -> Result<Vec<CMatrix>> {
    q.require_nondegenerate()?;
    let n = q.dim();
    let mut system = skew_equations(q.gram());
    for v in vectors {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![Gr::zero(); n * n];
            for (k, vk) in v.iter().enumerate() {
                row[i * n + k] = vk.clone();
            }
            rows.push(row);
        }
        system = system.vstack(&CMatrix::from_rows(rows)?)?;
    }
    Ok(kernel(&system)
        .iter()
        .map(|x| matrix_from_unknowns(n, x))
        .collect())
}

/// The two isotropic directions of a nondegenerate 2-dimensional form, as
/// coordinate vectors normalised so the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq)]
pub enum IsotropicLines {
    Exact([Vector; 2]),
    /// The discriminant has no Gaussian-rational square root.
    Approx([Vec<CFloat>; 2]),
}

fn normalise_exact(v: Vector) -> Vector {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero direction");
    let inv = lead.inv().expect("nonzero");
    vec_scale(&v, &inv)
}

fn normalise_float(v: [CFloat; 2]) -> Vec<CFloat> {
    let lead = if v[0].abs() > DEFAULT_TOL { v[0] } else { v[1] };
    v.iter().map(|&x| x / lead).collect()
}

pub fn isotropic_lines(q2: &QuadraticForm) -> Result<IsotropicLines> {
    if q2.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: q2.dim(),
        });
    }
    if !q2.is_nondegenerate() {
        return Err(Error::DegenerateRestriction);
    }
    let (a, b, c) = (q2.entry(0, 0), q2.entry(0, 1), q2.entry(1, 1));
    if a.is_zero() {
        // a x² + 2b xy + c y² = y(2b x + c y)
        let second = vec![-c, &Gr::from_int(2) * b];
        return Ok(IsotropicLines::Exact([
            vec![Gr::one(), Gr::zero()],
            normalise_exact(second),
        ]));
    }
    // x/y = (−b ± √(b² − ac)) / a
    let disc = &(b * b) - &(a * c);
    match disc.sqrt() {
        Some(s) => Ok(IsotropicLines::Exact([
            normalise_exact(vec![&(-b) + &s, a.clone()]),
            normalise_exact(vec![&(-b) - &s, a.clone()]),
        ])),
        None => {
            let (af, bf) = (a.to_cfloat(), b.to_cfloat());
            let s = disc.to_cfloat().sqrt();
            Ok(IsotropicLines::Approx([
                normalise_float([-bf + s, af]),
                normalise_float([-bf - s, af]),
            ]))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdaptedKind {
    /// `e1` isotropic; gram `[[0,0,1],[0,1,0],[1,0,0]]`.
    Unipotent,
    /// `e1` of norm 1; gram `[[1,0,0],[0,0,1],[0,1,0]]`.
    Semisimple,
}

impl AdaptedKind {
    /// Gram matrix of an adapted basis of this kind.
    pub fn target_gram(self) -> CMatrix {
        match self {
            AdaptedKind::Unipotent => CMatrix::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
            AdaptedKind::Semisimple => CMatrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AdaptedVectors {
    Exact([Vector; 3]),
    /// Normalisation needed an irrational square root.
    Approx([Vec<CFloat>; 3]),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdaptedBasis {
    pub kind: AdaptedKind,
    pub vectors: AdaptedVectors,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum RootPolicy {
    ExactOnly,
    AllowFloat,
}

fn qf(q: &QuadraticForm, x: &[CFloat], y: &[CFloat]) -> CFloat {
    let n = q.dim();
    let mut acc = CFloat::zero();
    for (i, &xi) in x.iter().enumerate().take(n) {
        for (j, &yj) in y.iter().enumerate().take(n) {
            let g = q.entry(i, j);
            if !g.is_zero() {
                acc = acc + g.to_cfloat() * xi * yj;
            }
        }
    }
    acc
}

fn to_float(v: &[Gr]) -> Vec<CFloat> {
    v.iter().map(Gr::to_cfloat).collect()
}

impl AdaptedBasis {
    pub fn is_exact(&self) -> bool {
        matches!(self.vectors, AdaptedVectors::Exact(_))
    }

    /// Largest deviation of the pairwise products from the adapted gram
    /// matrix (exactly 0 for an exact basis that satisfies the relations).
    pub fn residual(&self, q: &QuadraticForm) -> f64 {
        let target = self.kind.target_gram();
        let floats: [Vec<CFloat>; 3] = match &self.vectors {
            AdaptedVectors::Exact(vs) => {
                let p = CMatrix::from_columns(3, vs).expect("3-vectors");
                let gram = &(&p.transpose() * q.gram()) * &p;
                return if gram == target { 0.0 } else { f64::INFINITY };
            }
            AdaptedVectors::Approx(vs) => vs.clone(),
        };
        let mut worst: f64 = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                let d = qf(q, &floats[a], &floats[b]) - target[(a, b)].to_cfloat();
                worst = worst.max(d.abs());
            }
        }
        worst
    }
}

/// Completes `e1` (of norm 0 or 1) to an adapted basis of a 3-dimensional
/// nondegenerate form.
pub fn build_adapted_basis(
    q: &QuadraticForm,
    e1: &[Gr],
    policy: RootPolicy,
) -> Result<AdaptedBasis> {
    if q.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: q.dim(),
        });
    }
    q.require_nondegenerate()?;
    if e1.len() != 3 {
        return Err(Error::LengthMismatch {
            expected: 3,
            found: e1.len(),
        });
    }
    if is_zero_vec(e1) {
        return Err(Error::InvalidArgument("e1 must be nonzero".into()));
    }
    let norm = q.norm(e1)?;
    // e1^⊥ = ker(g(e1, ·))
    let perp = kernel(&CMatrix::from_rows(vec![q.flat(e1)?])?);
    if norm.is_zero() {
        unipotent_basis(q, e1, &perp, policy)
    } else if norm.is_one() {
        semisimple_basis(q, e1, &perp, policy)
    } else {
        Err(Error::BadNorm(norm.to_string()))
    }
}

fn unipotent_basis(
    q: &QuadraticForm,
    e1: &[Gr],
    perp: &[Vector],
    policy: RootPolicy,
) -> Result<AdaptedBasis> {
    // a vector of e1^⊥ outside ℂe1 has nonzero norm
    let w = perp
        .iter()
        .find(|w| span_basis(3, &[e1.to_vec(), (*w).clone()]).len() == 2)
        .cloned()
        .expect("e1^⊥ is 2-dimensional");
    let c = q.norm(&w)?;
    debug_assert!(!c.is_zero());
    // v with g(v, e1) = 1, then strip its e2-component and fix its norm
    let LinearSolution::Solved { x: v, .. } =
        solve_linear(&CMatrix::from_rows(vec![q.flat(e1)?])?, &[Gr::one()])?
    else {
        unreachable!("g(e1, ·) is a nonzero functional")
    };
    let v = vec_sub(&v, &vec_scale(&w, &(&q.eval(&v, &w)? / &c)));
    let lambda = &q.norm(&v)? * &Gr::ratio(1, 2);
    let e3 = vec_sub(&v, &vec_scale(e1, &lambda));
    let vectors = match c.sqrt() {
        Some(root) => {
            let e2 = vec_scale(&w, &root.inv().expect("nonzero root"));
            AdaptedVectors::Exact([e1.to_vec(), e2, e3])
        }
        None if policy == RootPolicy::AllowFloat => {
            let root = c.to_cfloat().sqrt();
            let e2 = to_float(&w).into_iter().map(|x| x / root).collect();
            AdaptedVectors::Approx([to_float(e1), e2, to_float(&e3)])
        }
        None => return Err(Error::NoExactRoot(c.to_string())),
    };
    Ok(AdaptedBasis {
        kind: AdaptedKind::Unipotent,
        vectors,
    })
}

fn semisimple_basis(
    q: &QuadraticForm,
    e1: &[Gr],
    perp: &[Vector],
    policy: RootPolicy,
) -> Result<AdaptedBasis> {
    let plane = q.restrict(perp)?;
    let combine = |l: &[Gr]| -> Vector {
        (0..3)
            .map(|i| &(&l[0] * &perp[0][i]) + &(&l[1] * &perp[1][i]))
            .collect()
    };
    let vectors = match isotropic_lines(&plane)? {
        IsotropicLines::Exact([l2, l3]) => {
            let (f2, f3) = (combine(&l2), combine(&l3));
            let s = q.eval(&f2, &f3)?;
            let e3 = vec_scale(&f3, &s.inv().ok_or(Error::DegenerateRestriction)?);
            AdaptedVectors::Exact([e1.to_vec(), f2, e3])
        }
        IsotropicLines::Approx(_) if policy == RootPolicy::ExactOnly => {
            let disc = plane.determinant().clone();
            return Err(Error::NoExactRoot((-disc).to_string()));
        }
        IsotropicLines::Approx([l2, l3]) => {
            let (p0, p1) = (to_float(&perp[0]), to_float(&perp[1]));
            let combine_f =
                |l: &[CFloat]| -> Vec<CFloat> { (0..3).map(|i| l[0] * p0[i] + l[1] * p1[i]).collect() };
            let (f2, f3) = (combine_f(&l2), combine_f(&l3));
            let s = qf(q, &f2, &f3);
            let e3 = f3.iter().map(|&x| x / s).collect();
            AdaptedVectors::Approx([to_float(e1), f2, e3])
        }
    };
    Ok(AdaptedBasis {
        kind: AdaptedKind::Semisimple,
        vectors,
    })
}

/// `L_t = [[1, t, −t²/2], [0, 1, −t], [0, 0, 1]]` for a polynomial parameter `t`.
pub fn unipotent_isotropy_matrix(t: &CPoly) -> PolyMatrix {
    let one = CPoly::constant(Gr::one());
    let zero = CPoly::zero();
    let half_sq = (t * t).scale(&Gr::ratio(-1, 2));
    PolyMatrix::from_rows(vec![
        vec![one.clone(), t.clone(), half_sq],
        vec![zero.clone(), one.clone(), -t],
        vec![zero.clone(), zero, one],
    ])
    .expect("3x3")
}

/// Generator `N = dL_t/dt |_{t=0}`: `N e₂ = e₁`, `N e₃ = −e₂`.
pub fn unipotent_generator() -> CMatrix {
    unipotent_isotropy_matrix(&CPoly::x()).coefficient(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gv(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gr::from_int(x)).collect()
    }

    fn anti_diag() -> QuadraticForm {
        QuadraticForm::new(AdaptedKind::Unipotent.target_gram()).unwrap()
    }

    #[test]
    fn so_dimensions() {
        for n in 2..=4 {
            let q = QuadraticForm::new(CMatrix::identity(n)).unwrap();
            let basis = skew_algebra(&q).unwrap();
            assert_eq!(basis.len(), n * (n - 1) / 2);
            for a in &basis {
                let lhs = &(&a.transpose() * q.gram()) + &(q.gram() * a);
                assert!(lhs.is_zero());
            }
        }
        assert_eq!(skew_algebra(&anti_diag()).unwrap().len(), 3);
    }

    #[test]
    fn vector_stabilisers() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        assert_eq!(stabilizer_in_skew(&q, &[gv(&[1, 0, 0])]).unwrap().len(), 1);
        let null = vec![Gr::one(), Gr::i(), Gr::zero()];
        assert_eq!(stabilizer_in_skew(&q, &[null]).unwrap().len(), 1);
        assert_eq!(
            stabilizer_in_skew(&q, &[gv(&[1, 0, 0]), gv(&[0, 1, 0])]).unwrap().len(),
            0
        );
    }

    fn assert_same_lines(lines: IsotropicLines, expected: [Vector; 2]) {
        let IsotropicLines::Exact([a, b]) = lines else {
            panic!("expected exact lines");
        };
        assert!(
            (a == expected[0] && b == expected[1]) || (a == expected[1] && b == expected[0]),
            "{a:?} {b:?}"
        );
    }

    #[test]
    fn isotropic_line_examples() {
        let hyperbolic = QuadraticForm::new(CMatrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        assert_same_lines(isotropic_lines(&hyperbolic).unwrap(), [gv(&[1, 0]), gv(&[0, 1])]);
        let euclid = QuadraticForm::new(CMatrix::identity(2)).unwrap();
        assert_same_lines(
            isotropic_lines(&euclid).unwrap(),
            [vec![Gr::one(), Gr::i()], vec![Gr::one(), -Gr::i()]],
        );
        let lorentz = QuadraticForm::new(CMatrix::from_ints(&[&[1, 0], &[0, -1]])).unwrap();
        assert_same_lines(isotropic_lines(&lorentz).unwrap(), [gv(&[1, 1]), gv(&[1, -1])]);
        let degenerate = QuadraticForm::new(CMatrix::from_ints(&[&[1, 1], &[1, 1]])).unwrap();
        assert!(matches!(isotropic_lines(&degenerate), Err(Error::DegenerateRestriction)));
    }

    #[test]
    fn irrational_isotropic_lines_fall_back_to_floats() {
        // x² − 2y² = 0
        let q = QuadraticForm::new(CMatrix::from_ints(&[&[1, 0], &[0, -2]])).unwrap();
        let IsotropicLines::Approx(lines) = isotropic_lines(&q).unwrap() else {
            panic!("√2 is irrational");
        };
        for l in lines {
            let v = l[0] * l[0] - CFloat::new(2.0, 0.0).unwrap() * l[1] * l[1];
            assert!(v.abs() < DEFAULT_TOL);
        }
    }

    #[test]
    fn adapted_basis_unipotent() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        let e1 = vec![Gr::one(), Gr::i(), Gr::zero()];
        let b = build_adapted_basis(&q, &e1, RootPolicy::ExactOnly).unwrap();
        assert_eq!(b.kind, AdaptedKind::Unipotent);
        assert!(b.is_exact());
        assert_eq!(b.residual(&q), 0.0);
    }

    #[test]
    fn adapted_basis_already_adapted() {
        let q = anti_diag();
        let b = build_adapted_basis(&q, &gv(&[1, 0, 0]), RootPolicy::ExactOnly).unwrap();
        assert_eq!(
            b.vectors,
            AdaptedVectors::Exact([gv(&[1, 0, 0]), gv(&[0, 1, 0]), gv(&[0, 0, 1])])
        );
    }

    #[test]
    fn adapted_basis_semisimple() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        let b = build_adapted_basis(&q, &gv(&[0, 0, 1]), RootPolicy::ExactOnly).unwrap();
        assert_eq!(b.kind, AdaptedKind::Semisimple);
        assert_eq!(b.residual(&q), 0.0);
    }

    #[test]
    fn adapted_basis_errors_and_float_mode() {
        let q = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        assert!(matches!(
            build_adapted_basis(&q, &gv(&[1, 1, 0]), RootPolicy::AllowFloat),
            Err(Error::BadNorm(_))
        ));
        // e1^⊥ contains (0,0,1) with norm 2 under diag(1,1,2)
        let q2 = QuadraticForm::new(CMatrix::diag(&[Gr::one(), Gr::one(), Gr::from_int(2)])).unwrap();
        let e1 = vec![Gr::one(), Gr::i(), Gr::zero()];
        assert!(matches!(
            build_adapted_basis(&q2, &e1, RootPolicy::ExactOnly),
            Err(Error::NoExactRoot(_))
        ));
        let b = build_adapted_basis(&q2, &e1, RootPolicy::AllowFloat).unwrap();
        assert!(!b.is_exact());
        assert!(b.residual(&q2) < DEFAULT_TOL);
        // semisimple case needing √2 in e1^⊥
        let q3 = QuadraticForm::new(CMatrix::diag(&[Gr::one(), Gr::one(), Gr::from_int(-2)])).unwrap();
        let b = build_adapted_basis(&q3, &gv(&[1, 0, 0]), RootPolicy::AllowFloat).unwrap();
        assert!(!b.is_exact());
        assert!(b.residual(&q3) < DEFAULT_TOL);
    }

    #[test]
    fn unipotent_family() {
        let l0 = unipotent_isotropy_matrix(&CPoly::zero());
        assert_eq!(l0.eval(&Gr::zero()), CMatrix::identity(3));
        let l = unipotent_isotropy_matrix(&CPoly::x());
        let expected = CMatrix::from_rows(vec![
            vec![Gr::one(), Gr::one(), Gr::ratio(-1, 2)],
            vec![Gr::zero(), Gr::one(), Gr::from_int(-1)],
            vec![Gr::zero(), Gr::zero(), Gr::one()],
        ])
        .unwrap();
        assert_eq!(l.eval(&Gr::one()), expected);
        assert_eq!(
            unipotent_generator(),
            CMatrix::from_ints(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]])
        );
    }
}
