//! Homogeneous models `G/I`: a Lie algebra, an isotropy subalgebra, a
//! complement standing in for the quotient, and an optional form on it.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{
    coordinates_in, is_nilpotent_matrix, is_semisimple_matrix, kernel, span_basis, unit_vector,
    CMatrix, Gr, Vector,
};
use crate::metric::{LeftInvariantMetric, QuadraticForm};

/// Type of a one-dimensional isotropy, read off its action on the quotient.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum IsotropyType {
    /// Nilpotent induced action.
    Unipotent,
    /// Diagonalizable induced action.
    Semisimple,
    Mixed,
}

impl IsotropyType {
    pub fn as_str(self) -> &'static str {
        match self {
            IsotropyType::Unipotent => "UNIPOTENT",
            IsotropyType::Semisimple => "SEMISIMPLE",
            IsotropyType::Mixed => "MIXED",
        }
    }
}

impl fmt::Display for IsotropyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IsotropyType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "UNIPOTENT" => Ok(IsotropyType::Unipotent),
            "SEMISIMPLE" => Ok(IsotropyType::Semisimple),
            "MIXED" => Ok(IsotropyType::Mixed),
            _ => Err(Error::InvalidArgument(format!("unknown isotropy type `{s}`"))),
        }
    }
}

/// Basis of `{a : [a, W] ⊆ W}` and whether it is closed under the bracket.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stabilizer {
    pub basis: Vec<Vector>,
    pub bracket_closed: bool,
}

impl Stabilizer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Rows spanning the annihilator of `span(w)` in the dual space.
fn annihilator(dim: usize, w: &[Vector]) -> Vec<Vector> {
    if w.is_empty() {
        return (0..dim).map(|i| unit_vector(dim, i)).collect();
    }
    kernel(&CMatrix::from_rows(w.to_vec()).expect("uniform rows"))
}

/// `{a ∈ 𝒢 : [a, w] ∈ W for every w ∈ W}`.
pub fn stabilizer_of_subspace(g: &LieAlgebra, w: &[Vector]) -> Result<Stabilizer> {
    let n = g.dim();
    if let Some(bad) = w.iter().find(|v| v.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let w = span_basis(n, w);
    let ann = annihilator(n, &w);
    // [a, w] = −ad(w) a, so the conditions are φ(ad(w) a) = 0 for φ ⊥ W
    let mut rows = Vec::new();
    for wk in &w {
        let adw = g.ad(wk)?;
        for phi in &ann {
            let row: Vector = (0..n)
                .map(|j| (0..n).map(|i| &phi[i] * &adw[(i, j)]).sum())
                .collect();
            rows.push(row);
        }
    }
    let basis = if rows.is_empty() {
        (0..n).map(|i| unit_vector(n, i)).collect()
    } else {
        kernel(&CMatrix::from_rows(rows)?)
    };
    let bracket_closed = g.is_subalgebra(&basis);
    Ok(Stabilizer {
        basis,
        bracket_closed,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousModel {
    algebra: LieAlgebra,
    isotropy: Vec<Vector>,
    complement: Vec<Vector>,
    quotient_form: Option<QuadraticForm>,
    /// Inverse of the matrix with columns `isotropy ++ complement`.
    to_adapted: CMatrix,
}

impl HomogeneousModel {
    /// Model with the complement spanned by the first standard basis
    /// vectors independent of the isotropy.
    pub fn new(algebra: LieAlgebra, isotropy: Vec<Vector>) -> Result<Self> {
        let n = algebra.dim();
        let mut spanned = isotropy.clone();
        let mut complement = Vec::new();
        for i in 0..n {
            let e = unit_vector(n, i);
            spanned.push(e.clone());
            if span_basis(n, &spanned).len() == spanned.len() {
                complement.push(e);
            } else {
                spanned.pop();
            }
        }
        Self::with_complement(algebra, isotropy, complement)
    }

    pub fn with_complement(
        algebra: LieAlgebra,
        isotropy: Vec<Vector>,
        complement: Vec<Vector>,
    ) -> Result<Self> {
        let n = algebra.dim();
        for v in isotropy.iter().chain(&complement) {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        if span_basis(n, &isotropy).len() != isotropy.len() {
            return Err(Error::DependentVectors);
        }
        if !algebra.is_subalgebra(&isotropy) {
            return Err(Error::NotSubalgebra);
        }
        let all: Vec<Vector> = isotropy.iter().chain(&complement).cloned().collect();
        if all.len() != n || span_basis(n, &all).len() != n {
            return Err(Error::NotComplement);
        }
        let to_adapted = CMatrix::from_columns(n, &all)?.inverse()?;
        Ok(Self {
            algebra,
            isotropy,
            complement,
            quotient_form: None,
            to_adapted,
        })
    }

    /// Attaches a nondegenerate form on the complement basis. Invariance is
    /// not required here; see [`HomogeneousModel::check_invariance`].
    pub fn with_form(mut self, q: QuadraticForm) -> Result<Self> {
        if q.dim() != self.quotient_dim() {
            return Err(Error::WrongDimension {
                expected: self.quotient_dim(),
                found: q.dim(),
            });
        }
        q.require_nondegenerate()?;
        self.quotient_form = Some(q);
        Ok(self)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn isotropy(&self) -> &[Vector] {
        &self.isotropy
    }

    pub fn complement(&self) -> &[Vector] {
        &self.complement
    }

    pub fn quotient_form(&self) -> Option<&QuadraticForm> {
        self.quotient_form.as_ref()
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    /// Components of `v` along the complement, i.e. its class modulo 𝓘.
    pub fn project(&self, v: &[Gr]) -> Result<Vector> {
        let coords = self.to_adapted.mul_vec(v)?;
        Ok(coords[self.isotropy.len()..].to_vec())
    }

    fn in_isotropy(&self, v: &[Gr]) -> bool {
        self.project(v).is_ok_and(|c| c.iter().all(Zero::is_zero))
    }

    /// Matrix of `ad(y)` acting on `𝒢/𝓘` in the complement basis.
    pub fn induced_ad(&self, y: &[Gr]) -> Result<CMatrix> {
        if y.len() != self.algebra.dim() {
            return Err(Error::LengthMismatch {
                expected: self.algebra.dim(),
                found: y.len(),
            });
        }
        if !self.in_isotropy(y) {
            return Err(Error::NotInIsotropy);
        }
        for u in &self.isotropy {
            if !self.in_isotropy(&self.algebra.bracket(y, u)?) {
                return Err(Error::NotSubalgebraInvariant);
            }
        }
        let columns = self
            .complement
            .iter()
            .map(|c| self.project(&self.algebra.bracket(y, c)?))
            .collect::<Result<Vec<_>>>()?;
        CMatrix::from_columns(self.quotient_dim(), &columns)
    }

    /// Induced actions of all isotropy basis vectors.
    pub fn induced_ads(&self) -> Result<Vec<CMatrix>> {
        self.isotropy.iter().map(|y| self.induced_ad(y)).collect()
    }

    pub fn isotropy_type(&self) -> Result<IsotropyType> {
        if self.isotropy.len() != 1 {
            return Err(Error::WrongIsotropyDimension(self.isotropy.len()));
        }
        let a = self.induced_ad(&self.isotropy[0])?;
        Ok(if is_nilpotent_matrix(&a)? {
            IsotropyType::Unipotent
        } else if is_semisimple_matrix(&a)? {
            IsotropyType::Semisimple
        } else {
            IsotropyType::Mixed
        })
    }

    /// Basis of the symmetric `S` with `AᵀS + SA = 0` for every induced action `A`.
    pub fn invariant_forms(&self) -> Result<Vec<CMatrix>> {
        let m = self.quotient_dim();
        // unknowns: s_ab for a ≤ b
        let slots: Vec<(usize, usize)> = (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
        let slot = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            slots.iter().position(|&s| s == (a, b)).expect("slot")
        };
        let mut rows = Vec::new();
        for a_mat in self.induced_ads()? {
            for i in 0..m {
                for j in i..m {
                    // (AᵀS + SA)_ij = Σ_k A_ki S_kj + S_ik A_kj
                    let mut row = vec![Gr::zero(); slots.len()];
                    for k in 0..m {
                        row[slot(k, j)] += &a_mat[(k, i)];
                        row[slot(i, k)] += &a_mat[(k, j)];
                    }
                    rows.push(row);
                }
            }
        }
        let solutions = if rows.is_empty() {
            (0..slots.len()).map(|s| unit_vector(slots.len(), s)).collect()
        } else {
            kernel(&CMatrix::from_rows(rows)?)
        };
        Ok(solutions
            .iter()
            .map(|x| {
                let mut s = CMatrix::zeros(m, m);
                for (idx, &(a, b)) in slots.iter().enumerate() {
                    s[(a, b)] = x[idx].clone();
                    s[(b, a)] = x[idx].clone();
                }
                s
            })
            .collect())
    }

    /// Whether the quotient form is invariant under every induced action.
    pub fn check_invariance(&self) -> Result<bool> {
        let q = self.quotient_form.as_ref().ok_or(Error::MissingForm)?;
        let s = q.gram();
        Ok(self
            .induced_ads()?
            .iter()
            .all(|a| (&(&a.transpose() * s) + &(s * a)).is_zero()))
    }

    /// Stabilizer of a subspace `W ⊇ 𝓘`.
    pub fn subalgebra_stabilizing(&self, w: &[Vector]) -> Result<Stabilizer> {
        let n = self.algebra.dim();
        let w_basis = span_basis(n, w);
        if self
            .isotropy
            .iter()
            .any(|u| coordinates_in(&w_basis, u).is_none())
        {
            return Err(Error::IsotropyNotContained);
        }
        stabilizer_of_subspace(&self.algebra, w)
    }

    /// For a semisimple isotropy: whether `𝒢` has a nontrivial center.
    pub fn center_check_semisimple_isotropy(&self) -> Result<bool> {
        match self.isotropy_type()? {
            IsotropyType::Semisimple => Ok(!self.algebra.center().is_empty()),
            other => Err(Error::WrongIsotropyType(other.to_string())),
        }
    }

    /// The complement as a Lie algebra, when it is a subalgebra; it then acts
    /// simply transitively near the base point.
    pub fn complement_algebra(&self) -> Result<LieAlgebra> {
        let names = self.complement_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.algebra.subalgebra(&self.complement, &refs)
    }

    /// Names of the complement vectors: the basis label when a vector is a
    /// basis vector, `u1`, `u2`, ... otherwise.
    pub fn complement_names(&self) -> Vec<String> {
        self.complement
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let label = self.algebra.format_vector(v);
                if crate::dsl::is_label(&label) {
                    label
                } else {
                    format!("u{}", k + 1)
                }
            })
            .collect()
    }

    /// Left-invariant metric induced on a subalgebra complement.
    pub fn complement_metric(&self) -> Result<LeftInvariantMetric> {
        let q = self.quotient_form.clone().ok_or(Error::MissingForm)?;
        LeftInvariantMetric::new(self.complement_algebra()?, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::standard::{c_plus_sl2, heis, sl2};
    use crate::metric::unipotent_generator;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gr::from_int(x)).collect()
    }

    /// `(X', Y, Z, T)`: `[Y,Z] = Z`, `[Y,T] = −T`, `[T,Z] = X'`.
    fn c_semidirect_heis() -> LieAlgebra {
        LieAlgebra::from_brackets(
            &["X'", "Y", "Z", "T"],
            &[
                (1, 2, v(&[0, 0, 1, 0])),
                (1, 3, v(&[0, 0, 0, -1])),
                (3, 2, v(&[1, 0, 0, 0])),
            ],
        )
        .unwrap()
    }

    fn c_heis_model() -> HomogeneousModel {
        HomogeneousModel::with_complement(
            c_semidirect_heis(),
            vec![v(&[0, 1, 0, 0])],
            vec![v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])],
        )
        .unwrap()
    }

    fn heis_stabilizer_model() -> HomogeneousModel {
        HomogeneousModel::new(heis(), vec![v(&[0, 1, 0])]).unwrap()
    }

    #[test]
    fn induced_ad_examples() {
        let m = c_heis_model();
        let a = m.induced_ad(&v(&[0, 1, 0, 0])).unwrap();
        assert_eq!(a, CMatrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
        assert!(m.induced_ad(&v(&[0, 0, 0, 0])).unwrap().is_zero());
        let h = heis_stabilizer_model();
        assert_eq!(h.complement(), &[v(&[1, 0, 0]), v(&[0, 0, 1])]);
        assert_eq!(
            h.induced_ad(&v(&[0, 1, 0])).unwrap(),
            CMatrix::from_ints(&[&[0, 1], &[0, 0]])
        );
        assert!(matches!(m.induced_ad(&v(&[0, 0, 1, 0])), Err(Error::NotInIsotropy)));
    }

    #[test]
    fn construction_errors() {
        // span{Z, T} is not closed: [T, Z] = X'
        assert!(matches!(
            HomogeneousModel::new(c_semidirect_heis(), vec![v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]),
            Err(Error::NotSubalgebra)
        ));
        assert!(matches!(
            HomogeneousModel::with_complement(
                sl2(),
                vec![v(&[1, 0, 0])],
                vec![v(&[1, 1, 0]), v(&[0, 1, 0])]
            ),
            Err(Error::NotComplement)
        ));
        let m = HomogeneousModel::new(sl2(), vec![v(&[1, 0, 0])]).unwrap();
        assert!(matches!(
            m.with_form(QuadraticForm::new(CMatrix::identity(3)).unwrap()),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn isotropy_types() {
        assert_eq!(c_heis_model().isotropy_type().unwrap(), IsotropyType::Semisimple);
        assert_eq!(heis_stabilizer_model().isotropy_type().unwrap(), IsotropyType::Unipotent);
        // [Y, A] = A, [Y, B] = A + B: a Jordan block with eigenvalue 1
        let g = LieAlgebra::from_brackets(
            &["Y", "A", "B"],
            &[(0, 1, v(&[0, 1, 0])), (0, 2, v(&[0, 1, 1]))],
        )
        .unwrap();
        let m = HomogeneousModel::new(g, vec![v(&[1, 0, 0])]).unwrap();
        assert_eq!(m.isotropy_type().unwrap(), IsotropyType::Mixed);
        let trivial = HomogeneousModel::new(sl2(), vec![]).unwrap();
        assert!(matches!(trivial.isotropy_type(), Err(Error::WrongIsotropyDimension(0))));
    }

    #[test]
    fn isotropy_type_is_scale_invariant() {
        for s in [Gr::from_int(-3), Gr::i(), Gr::complex(2, 3, -1, 5)] {
            let y: Vector = vec![Gr::zero(), s.clone(), Gr::zero(), Gr::zero()];
            let m = HomogeneousModel::new(c_semidirect_heis(), vec![y]).unwrap();
            assert_eq!(m.isotropy_type().unwrap(), IsotropyType::Semisimple);
            let m = HomogeneousModel::new(heis(), vec![vec![Gr::zero(), s, Gr::zero()]]).unwrap();
            assert_eq!(m.isotropy_type().unwrap(), IsotropyType::Unipotent);
        }
    }

    #[test]
    fn invariant_form_spaces() {
        let trivial = HomogeneousModel::new(sl2(), vec![]).unwrap();
        assert_eq!(trivial.invariant_forms().unwrap().len(), 6);

        let forms = c_heis_model().invariant_forms().unwrap();
        assert_eq!(forms.len(), 2);
        let a = CMatrix::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        for s in &forms {
            assert!((&(&a.transpose() * s) + &(s * &a)).is_zero());
            assert!(s[(0, 1)].is_zero() && s[(1, 1)].is_zero() && s[(2, 2)].is_zero());
        }

        // an isotropy acting on the quotient by N
        let g = LieAlgebra::from_brackets(
            &["Y", "A", "B", "C"],
            &[(0, 2, v(&[0, 1, 0, 0])), (0, 3, v(&[0, 0, -1, 0]))],
        )
        .unwrap();
        let m = HomogeneousModel::new(g, vec![v(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(m.induced_ad(&v(&[1, 0, 0, 0])).unwrap(), unipotent_generator());
        let forms = m.invariant_forms().unwrap();
        assert_eq!(forms.len(), 2);
        let q = CMatrix::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let with_q = m.with_form(QuadraticForm::new(q).unwrap()).unwrap();
        assert!(with_q.check_invariance().unwrap());
    }

    #[test]
    fn invariance_checks() {
        let s = CMatrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let m = c_heis_model();
        assert!(matches!(m.check_invariance(), Err(Error::MissingForm)));
        assert!(m.clone().with_form(QuadraticForm::new(s).unwrap()).unwrap().check_invariance().unwrap());
        let id = QuadraticForm::new(CMatrix::identity(3)).unwrap();
        assert!(!m.with_form(id.clone()).unwrap().check_invariance().unwrap());
        let trivial = HomogeneousModel::new(sl2(), vec![]).unwrap().with_form(id).unwrap();
        assert!(trivial.check_invariance().unwrap());
    }

    #[test]
    fn stabilizers() {
        let m = c_heis_model();
        let w = vec![v(&[0, 1, 0, 0]), v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])];
        let h = m.subalgebra_stabilizing(&w).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(h.bracket_closed);
        assert_eq!(span_basis(4, &h.basis), span_basis(4, &w));

        let all: Vec<Vector> = (0..4).map(|i| unit_vector(4, i)).collect();
        assert_eq!(m.subalgebra_stabilizing(&all).unwrap().dim(), 4);
        assert!(matches!(
            m.subalgebra_stabilizing(&[v(&[1, 0, 0, 0])]),
            Err(Error::IsotropyNotContained)
        ));

        let central = stabilizer_of_subspace(&c_plus_sl2(), &[v(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(central.dim(), 4);
    }

    #[test]
    fn center_checks() {
        assert!(c_heis_model().center_check_semisimple_isotropy().unwrap());
        assert!(matches!(
            heis_stabilizer_model().center_check_semisimple_isotropy(),
            Err(Error::WrongIsotropyType(_))
        ));
    }

    #[test]
    fn complement_metric_on_sl2_factor() {
        let mut gram = CMatrix::zeros(3, 3);
        gram[(0, 0)] = Gr::from_int(8);
        gram[(1, 2)] = Gr::from_int(4);
        gram[(2, 1)] = Gr::from_int(4);
        let m = HomogeneousModel::with_complement(
            c_plus_sl2(),
            vec![v(&[1, 1, 0, 0])],
            vec![v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])],
        )
        .unwrap()
        .with_form(QuadraticForm::new(gram).unwrap())
        .unwrap();
        assert!(m.check_invariance().unwrap());
        let metric = m.complement_metric().unwrap();
        assert_eq!(metric.algebra.names(), &["H", "E", "F"]);
        assert_eq!(metric.constant_curvature().unwrap().value(), Some(&Gr::ratio(-1, 8)));
    }
}
