//! Built-in catalog of metric Lie algebras and homogeneous models from the
//! three-dimensional classification. Each entry records its expected properties.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::dsl::SpecFile;
use crate::error::{Error, Result};
use crate::lie::{standard, LieAlgebra};
use crate::linalg::{span_basis, Gr, Vector};
use crate::metric::QuadraticForm;
use crate::model::HomogeneousModel;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: LieAlgebra,
    /// A metric on the algebra, or the quotient form when `model` is set.
    pub form: Option<QuadraticForm>,
    pub model: Option<HomogeneousModel>,
    /// Property assertions in the canonical `[expected]` syntax.
    pub expected: BTreeMap<String, String>,
}

impl CatalogEntry {
    fn new(id: &str, algebra: LieAlgebra, form: QuadraticForm) -> Self {
        Self {
            id: id.to_string(),
            algebra,
            form: Some(form),
            model: None,
            expected: BTreeMap::new(),
        }
    }

    fn model(id: &str, model: HomogeneousModel) -> Self {
        Self {
            id: id.to_string(),
            algebra: model.algebra().clone(),
            form: model.quotient_form().cloned(),
            model: Some(model),
            expected: BTreeMap::new(),
        }
    }

    fn expect(mut self, key: &str, value: &str) -> Self {
        self.expected.insert(key.to_string(), value.to_string());
        self
    }

    /// The entry as a `.liealg` document.
    pub fn to_spec(&self) -> SpecFile {
        let mut spec = SpecFile::new(&self.id, self.algebra.clone());
        spec.form = self.form.clone();
        spec.expected = self.expected.clone();
        if let Some(m) = &self.model {
            for (k, y) in m.isotropy().iter().enumerate() {
                let key = if m.isotropy().len() == 1 {
                    "generator".to_string()
                } else {
                    format!("generator{}", k + 1)
                };
                spec.isotropy.insert(key, y.clone());
            }
            spec.complement = Some(m.complement().to_vec());
        }
        spec
    }

    pub fn from_spec(spec: &SpecFile) -> Result<Self> {
        let model = if spec.has_model() {
            Some(spec.model()?)
        } else {
            None
        };
        Ok(Self {
            id: spec.name.clone(),
            algebra: spec.algebra.clone(),
            form: spec.form.clone(),
            model,
            expected: spec.expected.clone(),
        })
    }

    /// Copy with `c^k_{ij}` shifted by `delta` (and `c^k_{ji}` by `−delta`).
    /// Isotropy data is kept when it still defines a model.
    pub fn with_mutated_constant(&self, i: usize, j: usize, k: usize, delta: &Gr) -> Result<Self> {
        let value = self.algebra.structure_constant(i, j, k) + delta;
        let algebra = self.algebra.with_constant(i, j, k, value)?;
        let model = match &self.model {
            None => None,
            Some(m) => {
                let rebuilt = HomogeneousModel::with_complement(
                    algebra.clone(),
                    m.isotropy().to_vec(),
                    m.complement().to_vec(),
                )?;
                Some(match m.quotient_form() {
                    Some(q) => rebuilt.with_form(q.clone())?,
                    None => rebuilt,
                })
            }
        };
        Ok(Self {
            algebra,
            model,
            ..self.clone()
        })
    }
}

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Gr::from_int(x)).collect()
}

fn form(dim: usize, entries: &[(usize, usize, i64)]) -> QuadraticForm {
    let entries: Vec<(usize, usize, Gr)> = entries
        .iter()
        .map(|&(i, j, x)| (i, j, Gr::from_int(x)))
        .collect();
    QuadraticForm::from_entries(dim, &entries).expect("valid gram")
}

/// Parameters `(c, m, k, β)` of the four-dimensional extensions of `heis`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamExtension {
    pub c: Gr,
    pub m: Gr,
    pub k: Gr,
    pub beta: Gr,
}

impl ParamExtension {
    pub fn new(c: Gr, m: Gr, k: Gr, beta: Gr) -> Self {
        Self { c, m, k, beta }
    }

    /// `c = 0`, `k = −β²`, with the given `m`.
    pub fn flat_case(beta: Gr, m: Gr) -> Self {
        let k = -&(&beta * &beta);
        Self::new(Gr::zero(), m, k, beta)
    }
}

/// `(X', Y, Z, T)` with `[Y,Z] = X'`, `[T,X'] = cX'`,
/// `[T,Z] = mX' + (c+β)Z + kY` and `[T,Y] = Z − βY`.
pub fn build_param_extension(p: &ParamExtension) -> LieAlgebra {
    let zero = Gr::zero;
    let c_beta = &p.c + &p.beta;
    LieAlgebra::from_brackets(
        &["X'", "Y", "Z", "T"],
        &[
            (1, 2, v(&[1, 0, 0, 0])),
            (3, 0, vec![p.c.clone(), zero(), zero(), zero()]),
            (3, 2, vec![p.m.clone(), p.k.clone(), c_beta, zero()]),
            (3, 1, vec![zero(), -&p.beta, Gr::one(), zero()]),
        ],
    )
    .expect("valid table")
}

/// The family as a model: isotropy `ℂY`, complement `(X', Z, T)` carrying
/// the form `q(X',T) = q(Z,Z) = 1`.
pub fn param_extension_model(p: &ParamExtension) -> HomogeneousModel {
    HomogeneousModel::with_complement(
        build_param_extension(p),
        vec![v(&[0, 1, 0, 0])],
        vec![v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])],
    )
    .and_then(|m| m.with_form(form(3, &[(0, 2, 1), (1, 1, 1)])))
    .expect("valid model")
}

/// For `c = 0`, `k = −β²`: whether `span{X', Z − βY, T}` is a Heisenberg
/// algebra whose center is spanned by `X'`.
pub fn check_heis_span(p: &ParamExtension) -> Result<bool> {
    if !p.c.is_zero() || !(&p.k + &(&p.beta * &p.beta)).is_zero() {
        return Err(Error::Precondition("need c = 0 and k + β² = 0".into()));
    }
    let g = build_param_extension(p);
    let basis = vec![
        v(&[1, 0, 0, 0]),
        vec![Gr::zero(), -&p.beta, Gr::one(), Gr::zero()],
        v(&[0, 0, 0, 1]),
    ];
    if span_basis(4, &basis).len() != 3 || !g.is_subalgebra(&basis) {
        return Ok(false);
    }
    let h = g.subalgebra(&basis, &["X'", "Z-bY", "T"])?;
    if h.classify_3d_unimodular().ok() != Some(crate::lie::AlgebraClass::Heis) {
        return Ok(false);
    }
    let center = h.center();
    Ok(center.len() == 1 && span_basis(3, &center) == span_basis(3, &[v(&[1, 0, 0])]))
}

/// `(X', Y, Z, T)` with `[Y,Z] = Z`, `[Y,T] = −T`.
pub fn c_times_sol() -> LieAlgebra {
    LieAlgebra::from_brackets(
        &["X'", "Y", "Z", "T"],
        &[(1, 2, v(&[0, 0, 1, 0])), (1, 3, v(&[0, 0, 0, -1]))],
    )
    .expect("valid table")
}

/// `c_times_sol` with additionally `[T,Z] = X'`.
pub fn c_semidirect_heis() -> LieAlgebra {
    LieAlgebra::from_brackets(
        &["X'", "Y", "Z", "T"],
        &[
            (1, 2, v(&[0, 0, 1, 0])),
            (1, 3, v(&[0, 0, 0, -1])),
            (3, 2, v(&[1, 0, 0, 0])),
        ],
    )
    .expect("valid table")
}

/// `c_times_sol` with additionally `[T,X'] = T`: `Y` and `X'` act on
/// `(Z, T)` by `diag(1, −1)` and `diag(0, −1)`.
pub fn c2_semidirect_c2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        &["X'", "Y", "Z", "T"],
        &[
            (1, 2, v(&[0, 0, 1, 0])),
            (1, 3, v(&[0, 0, 0, -1])),
            (3, 0, v(&[0, 0, 0, 1])),
        ],
    )
    .expect("valid table")
}

/// Isotropy `ℂY` with complement `(X', Z, T)` and `q(X',X') = q(Z,T) = 1`.
fn semisimple_isotropy_model(g: LieAlgebra) -> HomogeneousModel {
    HomogeneousModel::with_complement(
        g,
        vec![v(&[0, 1, 0, 0])],
        vec![v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])],
    )
    .and_then(|m| m.with_form(form(3, &[(0, 0, 1), (1, 2, 1)])))
    .expect("valid model")
}

/// `ℂ ⊕ sl2` with isotropy `ℂ(C + H)` and `q(H,H) = a`, `q(E,F) = b` on `(H, E, F)`.
pub fn c_sl2_diagonal_model(a: &Gr, b: &Gr) -> Result<HomogeneousModel> {
    let q = QuadraticForm::from_entries(3, &[(0, 0, a.clone()), (1, 2, b.clone())])?;
    HomogeneousModel::with_complement(
        standard::c_plus_sl2(),
        vec![v(&[1, 1, 0, 0])],
        vec![v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])],
    )?
    .with_form(q)
}

/// Parameter point used for the catalog copy of the `heis` extension family.
pub fn default_param_extension() -> ParamExtension {
    ParamExtension::flat_case(Gr::one(), Gr::one())
}

pub fn build_catalog() -> Vec<CatalogEntry> {
    let killing_sl2 = form(3, &[(0, 0, 8), (1, 2, 4)]);
    let c_times_sl2 = HomogeneousModel::with_complement(
        standard::c_plus_sl2(),
        vec![v(&[0, 1, 0, 0])],
        vec![v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])],
    )
    .and_then(|m| m.with_form(form(3, &[(0, 0, 1), (1, 2, 1)])))
    .expect("valid model");

    vec![
        CatalogEntry::new("flat_c3", LieAlgebra::abelian(&["e1", "e2", "e3"]), form(3, &[(0, 0, 1), (1, 1, 1), (2, 2, 1)]))
            .expect("class", "ABELIAN_C3")
            .expect("constcurv", "0")
            .expect("flat", "true")
            .expect("nilpotent", "true")
            .expect("solvable", "true")
            .expect("unimodular", "true")
            .expect("center_dim", "3"),
        CatalogEntry::new("heis3", standard::heis(), form(3, &[(0, 2, 1), (1, 1, 1)]))
            .expect("class", "HEIS")
            .expect("constcurv", "0")
            .expect("flat", "true")
            .expect("nilpotent", "true")
            .expect("solvable", "true")
            .expect("unimodular", "true")
            .expect("center_dim", "1")
            .expect("derived_series", "3, 1, 0")
            .expect("lower_central_series", "3, 1, 0"),
        CatalogEntry::new("sol3", standard::sol(), form(3, &[(0, 0, 1), (1, 2, 1)]))
            .expect("class", "SOL")
            .expect("constcurv", "0")
            .expect("flat", "true")
            .expect("nilpotent", "false")
            .expect("solvable", "true")
            .expect("unimodular", "true")
            .expect("center_dim", "0")
            .expect("derived_series", "3, 2, 0"),
        CatalogEntry::new("sl2", standard::sl2(), killing_sl2)
            .expect("class", "SL2")
            .expect("constcurv", "-1/8")
            .expect("flat", "false")
            .expect("semisimple", "true")
            .expect("solvable", "false")
            .expect("unimodular", "true")
            .expect("center_dim", "0")
            .expect("derived_series", "3, 3"),
        CatalogEntry::model(
            "c_sl2_diagonal",
            c_sl2_diagonal_model(&Gr::from_int(8), &Gr::from_int(4)).expect("valid model"),
        )
        .expect("isotropy_type", "SEMISIMPLE")
        .expect("invariant_forms_dim", "2")
        .expect("center_dim", "1")
        .expect("constcurv", "-1/8"),
        CatalogEntry::model(
            "c_sl2_diagonal_general",
            c_sl2_diagonal_model(&Gr::from_int(1), &Gr::from_int(3)).expect("valid model"),
        )
        .expect("isotropy_type", "SEMISIMPLE")
        .expect("invariant_forms_dim", "2"),
        CatalogEntry::model("c_times_sl2", c_times_sl2)
            .expect("isotropy_type", "SEMISIMPLE")
            .expect("invariant_forms_dim", "2")
            .expect("center_dim", "1"),
        CatalogEntry::model("c_times_sol", semisimple_isotropy_model(c_times_sol()))
            .expect("isotropy_type", "SEMISIMPLE")
            .expect("invariant_forms_dim", "2")
            .expect("center_dim", "1")
            .expect("solvable", "true"),
        CatalogEntry::model("c_semidirect_heis", semisimple_isotropy_model(c_semidirect_heis()))
            .expect("isotropy_type", "SEMISIMPLE")
            .expect("invariant_forms_dim", "2")
            .expect("center_dim", "1")
            .expect("solvable", "true"),
        CatalogEntry::model("c2_semidirect_c2", semisimple_isotropy_model(c2_semidirect_c2()))
            .expect("isotropy_type", "SEMISIMPLE")
            .expect("invariant_forms_dim", "2")
            .expect("center_dim", "0")
            .expect("solvable", "true"),
        CatalogEntry::model("heis_extension", param_extension_model(&default_param_extension()))
            .expect("isotropy_type", "UNIPOTENT")
            .expect("invariant_forms_dim", "2")
            .expect("solvable", "true"),
    ]
}

/// Looks up an entry by id.
pub fn find<'a>(catalog: &'a [CatalogEntry], id: &str) -> Option<&'a CatalogEntry> {
    catalog.iter().find(|e| e.id == id)
}
