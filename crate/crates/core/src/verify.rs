//! Verification suite over the catalog, producing a flat pass/fail report.
//!
//! Exact checks compare Gaussian rationals for equality; only the Möbius
//! invariance spot check uses floating point and a tolerance. Randomised
//! checks draw from a ChaCha stream derived from the report seed, one stream
//! per fragment, so a fixed seed always yields the same report.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{
    build_catalog, build_param_extension, check_heis_span, find, param_extension_model,
    CatalogEntry, ParamExtension,
};
use crate::error::{Error, Result};
use crate::lie::{AlgebraClass, LieAlgebra};
use crate::linalg::{unit_vector, CMatrix, CPoly, Gr, PolyMatrix, Vector};
use crate::metric::{
    build_adapted_basis, sectional_curvature, skew_algebra, stabilizer_in_skew,
    unipotent_generator, unipotent_isotropy_matrix, AdaptedKind, ConstantCurvature,
    LeftInvariantMetric, QuadraticForm, RootPolicy, Sectional,
};
use crate::model::IsotropyType;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const MOBIUS_SAMPLES: usize = 1000;
pub const CONJUGATIONS: usize = 1000;
pub const FAMILY_SAMPLES: usize = 100;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub witness: Option<String>,
    pub value: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyReport {
    fn from_checks(seed: u64, checks: Vec<Check>) -> Self {
        let pass = checks.iter().filter(|c| c.passed()).count();
        let fail = checks.len() - pass;
        Self {
            seed,
            checks,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks whose id starts with `prefix`.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id.starts_with(prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Accumulates checks for one fragment.
#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn record(&mut self, id: impl Into<String>, ok: bool, witness: Option<String>, value: Option<String>) {
        self.0.push(Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
            value,
        });
    }

    fn value(&mut self, id: impl Into<String>, ok: bool, value: impl ToString) {
        self.record(id, ok, None, Some(value.to_string()));
    }

    fn flag(&mut self, id: impl Into<String>, ok: bool) {
        self.record(id, ok, None, None);
    }

    fn error(&mut self, id: impl Into<String>, e: &Error) {
        self.record(id, false, witness_of(e), Some(format!("error: {e}")));
    }
}

fn triple((i, j, k): (usize, usize, usize)) -> String {
    format!("({i}, {j}, {k})")
}

fn witness_of(e: &Error) -> Option<String> {
    match e {
        Error::NotLieAlgebra(i, j, k) | Error::NotAntisymmetric { i, j, k } => {
            Some(triple((*i, *j, *k)))
        }
        _ => None,
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A Gaussian rational with small numerators and denominators.
pub fn random_gr(rng: &mut impl Rng) -> Gr {
    Gr::complex(
        rng.gen_range(-3..=3),
        rng.gen_range(1..=2),
        rng.gen_range(-3..=3),
        rng.gen_range(1..=2),
    )
}

/// A random invertible `n×n` Gaussian-rational matrix.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> CMatrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| random_gr(rng)).collect()).collect();
        let m = CMatrix::from_rows(rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// The left-invariant metric an entry describes: its algebra and form, or
/// for a model the complement subalgebra with the quotient form.
pub fn entry_metric(entry: &CatalogEntry) -> Option<Result<LeftInvariantMetric>> {
    let q = entry.form.clone()?;
    match &entry.model {
        None => Some(LeftInvariantMetric::new(entry.algebra.clone(), q)),
        Some(m) => m
            .algebra()
            .is_subalgebra(m.complement())
            .then(|| m.complement_metric()),
    }
}

fn series_text(s: &[usize]) -> String {
    s.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

/// Actual value of one `[expected]` property, with a witness where useful.
pub fn evaluate_property(entry: &CatalogEntry, key: &str) -> Result<(String, Option<String>)> {
    let g = &entry.algebra;
    let plain = |s: String| Ok((s, None));
    match key {
        "class" => plain(g.classify_3d_unimodular()?.to_string()),
        "center_dim" => plain(g.center().len().to_string()),
        "derived_series" => plain(series_text(&g.derived_series())),
        "lower_central_series" => plain(series_text(&g.lower_central_series())),
        "nilpotent" => plain(g.is_nilpotent().to_string()),
        "solvable" => plain(g.is_solvable().to_string()),
        "semisimple" => plain(g.is_semisimple().to_string()),
        "unimodular" => plain(g.is_unimodular().to_string()),
        "isotropy_type" | "invariant_forms_dim" => {
            let m = entry
                .model
                .as_ref()
                .ok_or_else(|| Error::InvalidArgument("entry has no isotropy".into()))?;
            if key == "isotropy_type" {
                plain(m.isotropy_type()?.to_string())
            } else {
                plain(m.invariant_forms()?.len().to_string())
            }
        }
        "constcurv" | "flat" => {
            let metric = entry_metric(entry).ok_or(Error::MissingForm)??;
            let cc = metric.constant_curvature()?;
            let witness = match &cc {
                ConstantCurvature::NotConstant { witness } => Some(triple(*witness)),
                ConstantCurvature::Constant(_) => metric.curvature.first_nonzero().map(triple),
            };
            let text = if key == "flat" {
                cc.is_flat().to_string()
            } else {
                match &cc {
                    ConstantCurvature::Constant(k) => k.to_string(),
                    ConstantCurvature::NotConstant { .. } => "NotConstant".to_string(),
                }
            };
            Ok((text, witness))
        }
        _ => Err(Error::InvalidArgument(format!("unknown expectation `{key}`"))),
    }
}

/// One check per `[expected]` record of the entry, with ids `<entry>.expected.<key>`.
pub fn check_expectations(entry: &CatalogEntry) -> Vec<Check> {
    let mut out = Checks::default();
    for (key, expected) in &entry.expected {
        let id = format!("{}.expected.{key}", entry.id);
        match evaluate_property(entry, key) {
            Ok((actual, witness)) => {
                let ok = &actual == expected;
                out.record(id, ok, if ok { None } else { witness }, Some(actual));
            }
            Err(e) => out.error(id, &e),
        }
    }
    out.0
}

/// Jacobi, form, connection, curvature and invariance checks for one entry.
fn structural_checks(entry: &CatalogEntry, out: &mut Checks) {
    let id = &entry.id;
    let g = &entry.algebra;
    let defect = g.jacobi_defect();
    out.record(
        format!("{id}.jacobi"),
        defect.is_zero(),
        g.jacobi_witness().map(|(t, _)| triple(t)),
        Some(defect.to_string()),
    );
    if let Some(q) = &entry.form {
        out.flag(format!("{id}.form_nondegenerate"), q.is_nondegenerate());
    }
    if let Some(m) = &entry.model {
        out.flag(format!("{id}.isotropy_closed"), g.is_subalgebra(m.isotropy()));
        match m.induced_ads() {
            Ok(_) => out.flag(format!("{id}.induced_ad"), true),
            Err(e) => out.error(format!("{id}.induced_ad"), &e),
        }
        if m.quotient_form().is_some() {
            match m.check_invariance() {
                Ok(ok) => out.flag(format!("{id}.invariance"), ok),
                Err(e) => out.error(format!("{id}.invariance"), &e),
            }
        }
    }
    match entry_metric(entry) {
        None => {}
        Some(Err(e)) => out.error(format!("{id}.metric"), &e),
        Some(Ok(metric)) => {
            let conn = &metric.connection;
            let r = &metric.curvature;
            let w = conn.torsion_witness(&metric.algebra);
            out.record(format!("{id}.torsion_free"), w.is_none(), w.map(|(i, j)| format!("({i}, {j})")), None);
            let w = conn.metric_witness(&metric.form);
            out.record(format!("{id}.metric_compatible"), w.is_none(), w.map(triple), None);
            let w = r.antisymmetry_witness();
            out.record(format!("{id}.curvature_antisymmetric"), w.is_none(), w.map(triple), None);
            let w = r.bianchi_witness();
            out.record(format!("{id}.first_bianchi"), w.is_none(), w.map(triple), None);
            let w = r.metric_skew_witness(&metric.form);
            out.record(
                format!("{id}.curvature_metric_skew"),
                w.is_none(),
                w.map(|(i, j, k, l)| format!("({i}, {j}, {k}, {l})")),
                None,
            );
        }
    }
}

fn fragment_catalog(catalog: &[CatalogEntry], out: &mut Checks) {
    for entry in catalog {
        structural_checks(entry, out);
        out.0.extend(check_expectations(entry));
    }
}

/// Flatness against solvability over the unimodular three-dimensional entries.
fn fragment_unimodular_flatness(catalog: &[CatalogEntry], out: &mut Checks) {
    let entries: Vec<&CatalogEntry> = catalog
        .iter()
        .filter(|e| e.model.is_none() && e.expected.contains_key("class"))
        .collect();
    let mut mismatch = None;
    for e in &entries {
        let id = format!("unimodular_flatness.{}", e.id);
        let Some(metric) = entry_metric(e) else { continue };
        let cc = metric.and_then(|m| m.constant_curvature().map(|cc| (cc, m.curvature.first_nonzero())));
        match cc {
            Ok((cc, first_nonzero)) => {
                let semisimple = e.expected.get("class").map(String::as_str) == Some("SL2");
                let ok = match &cc {
                    ConstantCurvature::Constant(k) => semisimple != k.is_zero(),
                    ConstantCurvature::NotConstant { .. } => false,
                };
                let witness = match &cc {
                    ConstantCurvature::NotConstant { witness } => Some(triple(*witness)),
                    _ if !ok => first_nonzero.map(triple),
                    _ => None,
                };
                out.record(id, ok, witness, Some(cc.to_string()));
                if cc.is_flat() != e.algebra.is_solvable() && mismatch.is_none() {
                    mismatch = Some(e.id.clone());
                }
            }
            Err(err) => {
                out.error(id, &err);
                mismatch.get_or_insert_with(|| e.id.clone());
            }
        }
    }
    out.record(
        "unimodular_flatness.flat_iff_solvable",
        !entries.is_empty() && mismatch.is_none(),
        mismatch,
        Some(format!("{} entries", entries.len())),
    );
}

/// Sectional curvature of the Killing metric on several planes.
fn fragment_sl2_sectional(catalog: &[CatalogEntry], out: &mut Checks) {
    let Some(entry) = find(catalog, "sl2") else { return };
    let metric = match entry_metric(entry) {
        Some(Ok(m)) => m,
        Some(Err(e)) => return out.error("sl2.sectional", &e),
        None => return out.error("sl2.sectional", &Error::MissingForm),
    };
    let v = |xs: [i64; 3]| -> Vector { xs.iter().map(|&x| Gr::from_int(x)).collect() };
    let planes = [
        ("E,F", v([0, 1, 0]), v([0, 0, 1])),
        ("H,E+F", v([1, 0, 0]), v([0, 1, 1])),
        ("H+E,F", v([1, 1, 0]), v([0, 0, 1])),
        ("E+F,E-F", v([0, 1, 1]), v([0, 1, -1])),
    ];
    let target = Gr::ratio(-1, 8);
    let mut matching = 0;
    for (name, x, y) in planes {
        let id = format!("sl2.sectional.{name}");
        match sectional_curvature(&metric.form, &metric.curvature, &x, &y) {
            Ok(Sectional::Value(k)) => {
                matching += usize::from(k == target);
                out.value(id, k == target, &k);
            }
            Ok(Sectional::DegeneratePlane) => out.value(id, false, "degenerate plane"),
            Err(e) => out.error(id, &e),
        }
    }
    out.value("sl2.sectional.constant", matching >= 3, format!("{matching} planes at {target}"));
}

/// The class is unchanged under random changes of basis.
fn fragment_classification(catalog: &[CatalogEntry], seed: u64, out: &mut Checks) {
    for (n, entry) in catalog
        .iter()
        .filter(|e| e.model.is_none() && e.expected.contains_key("class"))
        .enumerate()
    {
        let expected: Option<AlgebraClass> = entry.expected["class"].parse().ok();
        let id = format!("classification.{}", entry.id);
        let base = entry.algebra.classify_3d_unimodular();
        match &base {
            Ok(c) => out.value(id.clone(), Some(*c) == expected, c),
            Err(e) => out.error(id.clone(), e),
        }
        let Ok(base) = base else { continue };
        let mut rng = rng_for(seed, 100 + n as u64);
        let mut failure = None;
        for trial in 0..CONJUGATIONS {
            let p = random_invertible(&mut rng, entry.algebra.dim());
            let conj = entry.algebra.change_basis(&p).and_then(|g| g.classify_3d_unimodular());
            if conj.ok() != Some(base) {
                failure = Some(format!("conjugation #{trial}: {p}"));
                break;
            }
        }
        out.record(
            format!("{id}.conjugations"),
            failure.is_none(),
            failure,
            Some(format!("{CONJUGATIONS} conjugations")),
        );
    }
}

fn v4(xs: [i64; 4]) -> Vector {
    xs.iter().map(|&x| Gr::from_int(x)).collect()
}

fn classify_span(g: &LieAlgebra, basis: &[Vector], names: &[&str]) -> Result<AlgebraClass> {
    g.subalgebra(basis, names)?.classify_3d_unimodular()
}

/// Bracket tables of the semisimple-isotropy models and the `heis` extensions.
fn fragment_isotropy_tables(catalog: &[CatalogEntry], seed: u64, out: &mut Checks) {
    let (x, y, z, t) = (v4([1, 0, 0, 0]), v4([0, 1, 0, 0]), v4([0, 0, 1, 0]), v4([0, 0, 0, 1]));
    let cases = [("case1", "c_times_sol", 1), ("case2", "c_semidirect_heis", 1), ("case3", "c2_semidirect_c2", 0)];
    for (case, entry_id, center) in cases {
        let Some(entry) = find(catalog, entry_id) else { continue };
        let g = &entry.algebra;
        let prefix = format!("semisimple_isotropy.{case}");
        out.record(
            format!("{prefix}.jacobi"),
            g.jacobi_defect().is_zero(),
            g.jacobi_witness().map(|(w, _)| triple(w)),
            None,
        );
        let dim = g.center().len();
        out.value(format!("{prefix}.center_dim"), dim == center, dim);
        if let Some(m) = &entry.model {
            match m.isotropy_type() {
                Ok(ty) => out.value(format!("{prefix}.isotropy_type"), ty == IsotropyType::Semisimple, ty),
                Err(e) => out.error(format!("{prefix}.isotropy_type"), &e),
            }
            let weights = CMatrix::diag(&[Gr::zero(), Gr::one(), -Gr::one()]);
            match m.induced_ad(&y) {
                Ok(a) => out.value(format!("{prefix}.weights"), a == weights, &a),
                Err(e) => out.error(format!("{prefix}.weights"), &e),
            }
        }
        let x_central = g.bracket_span(std::slice::from_ref(&x), &[x.clone(), y.clone(), z.clone(), t.clone()]).is_empty();
        match case {
            "case1" => {
                out.flag(format!("{prefix}.x_central"), x_central);
                let c = classify_span(g, &[y.clone(), z.clone(), t.clone()], &["Y", "Z", "T"]);
                out.flag(format!("{prefix}.sol_subalgebra"), c.ok() == Some(AlgebraClass::Sol));
            }
            "case2" => {
                out.flag(format!("{prefix}.x_central"), x_central);
                let span = [x.clone(), z.clone(), t.clone()];
                let heis = g.is_ideal(&span)
                    && classify_span(g, &span, &["X'", "Z", "T"]).ok() == Some(AlgebraClass::Heis);
                out.flag(format!("{prefix}.heis_ideal"), heis);
            }
            _ => out.flag(format!("{prefix}.center_trivial"), g.center().is_empty()),
        }
    }

    if let Some(entry) = find(catalog, "heis_extension") {
        match entry.model.as_ref().map(|m| m.isotropy_type()) {
            Some(Ok(ty)) => out.value("heis_family.catalog_isotropy", ty == IsotropyType::Unipotent, ty),
            Some(Err(e)) => out.error("heis_family.catalog_isotropy", &e),
            None => out.flag("heis_family.catalog_isotropy", false),
        }
    }

    let zero = ParamExtension::new(Gr::zero(), Gr::zero(), Gr::zero(), Gr::zero());
    let ad_t = build_param_extension(&zero).ad_basis(3);
    let order = [0, 2, 1];
    let restricted: Vec<Vec<Gr>> = order
        .iter()
        .map(|&r| order.iter().map(|&c| ad_t[(r, c)].clone()).collect())
        .collect();
    let restricted = CMatrix::from_rows(restricted).expect("3x3");
    out.value(
        "heis_family.origin_ad_t",
        restricted == CMatrix::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        &restricted,
    );

    let mut rng = rng_for(seed, 200);
    let mut jacobi_failure = None;
    let mut isotropy_failure = None;
    for n in 0..FAMILY_SAMPLES {
        let p = ParamExtension::new(random_gr(&mut rng), random_gr(&mut rng), random_gr(&mut rng), random_gr(&mut rng));
        let label = || format!("#{n}: c={}, m={}, k={}, beta={}", p.c, p.m, p.k, p.beta);
        if jacobi_failure.is_none() && !build_param_extension(&p).jacobi_defect().is_zero() {
            jacobi_failure = Some(label());
        }
        let m = param_extension_model(&p);
        let ok = m.isotropy_type().ok() == Some(IsotropyType::Unipotent)
            && m.check_invariance().unwrap_or(false)
            && m.induced_ad(&y).ok() == Some(unipotent_generator());
        if isotropy_failure.is_none() && !ok {
            isotropy_failure = Some(label());
        }
    }
    let samples = format!("{FAMILY_SAMPLES} parameter points");
    out.record("heis_family.jacobi", jacobi_failure.is_none(), jacobi_failure, Some(samples.clone()));
    out.record("heis_family.unipotent", isotropy_failure.is_none(), isotropy_failure, Some(samples));

    // ad(T)X' = cX' + Z is not a derivation
    let g = build_param_extension(&crate::catalog::default_param_extension());
    let corrupted = g.with_constant(3, 0, 2, Gr::one()).expect("index in range");
    let defect = corrupted.jacobi_defect();
    out.record(
        "heis_family.corruption_detected",
        !defect.is_zero(),
        corrupted.jacobi_witness().map(|(w, _)| triple(w)),
        Some(defect.to_string()),
    );
}

fn fragment_heis_span(out: &mut Checks) {
    for (name, beta) in [("0", Gr::zero()), ("1", Gr::one()), ("i", Gr::i()), ("3/2", Gr::ratio(3, 2))] {
        let id = format!("heis_span.beta={name}");
        match check_heis_span(&ParamExtension::flat_case(beta, Gr::one())) {
            Ok(ok) => out.flag(id, ok),
            Err(e) => out.error(id, &e),
        }
    }
}

fn fragment_isotropy_bounds(out: &mut Checks) {
    let q = QuadraticForm::new(CMatrix::identity(3)).expect("symmetric");
    let dims = |vs: &[Vector]| stabilizer_in_skew(&q, vs).map(|b| b.len());
    let norm1 = unit_vector(3, 0);
    let norm0 = vec![Gr::one(), Gr::i(), Gr::zero()];
    let cases: [(&str, Result<usize>, usize); 4] = [
        ("isotropy.so_dim", skew_algebra(&q).map(|b| b.len()), 3),
        ("isotropy.stabilizer_norm1", dims(std::slice::from_ref(&norm1)), 1),
        ("isotropy.stabilizer_norm0", dims(&[norm0]), 1),
        ("isotropy.stabilizer_plane", dims(&[norm1, unit_vector(3, 1)]), 0),
    ];
    for (id, got, want) in cases {
        match got {
            Ok(d) => out.value(id, d == want, d),
            Err(e) => out.error(id, &e),
        }
    }
}

fn fragment_unipotent(out: &mut Checks) {
    let q = AdaptedKind::Unipotent.target_gram();
    let qp = PolyMatrix::from_matrix(&q);
    let l = unipotent_isotropy_matrix(&CPoly::x());
    let identity = l
        .transpose()
        .try_mul(&qp)
        .and_then(|a| a.try_mul(&l))
        .and_then(|a| a.try_sub(&qp));
    match identity {
        Ok(d) => out.flag("unipotent.group_identity", d.is_zero()),
        Err(e) => out.error("unipotent.group_identity", &e),
    }
    let n = unipotent_generator();
    out.value(
        "unipotent.generator_identity",
        (&(&n.transpose() * &q) + &(&q * &n)).is_zero(),
        &n,
    );
    out.flag("unipotent.generator_derivative", l.coefficient(1) == n);

    let euclid = QuadraticForm::new(CMatrix::identity(3)).expect("symmetric");
    for (id, e1) in [
        ("adapted.unipotent", vec![Gr::one(), Gr::i(), Gr::zero()]),
        ("adapted.semisimple", unit_vector(3, 2)),
    ] {
        match build_adapted_basis(&euclid, &e1, RootPolicy::ExactOnly) {
            Ok(b) => out.value(id, b.is_exact() && b.residual(&euclid) == 0.0, b.residual(&euclid)),
            Err(e) => out.error(id, &e),
        }
    }
}

/// Outcome of the numeric Möbius invariance check.
#[derive(Clone, Copy, PartialEq, Debug, Serialize)]
pub struct MobiusOutcome {
    pub samples: usize,
    pub max_residual: f64,
    pub resampled: usize,
}

/// Relative defect of `dz₁dz₂/(z₁−z₂)²` under `z ↦ (az+b)/(cz+d)`:
/// `|w₁′ w₂′/(w₁−w₂)² − 1/(z₁−z₂)²| · |z₁−z₂|²`. `None` when a point is
/// too close to the pole or the two points nearly coincide.
pub fn mobius_residual(m: [Complex64; 4], z1: Complex64, z2: Complex64) -> Option<f64> {
    let [a, b, c, d] = m;
    let det = a * d - b * c;
    let (p1, p2) = (c * z1 + d, c * z2 + d);
    if (z1 - z2).norm() < 1e-6 || p1.norm() < 1e-6 || p2.norm() < 1e-6 {
        return None;
    }
    let (w1, w2) = ((a * z1 + b) / p1, (a * z2 + b) / p2);
    let (dw1, dw2) = (det / (p1 * p1), det / (p2 * p2));
    let lhs = dw1 * dw2 / ((w1 - w2) * (w1 - w2));
    let rhs = 1.0 / ((z1 - z2) * (z1 - z2));
    Some((lhs - rhs).norm() * (z1 - z2).norm_sqr())
}

fn random_point(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

/// Samples random `SL(2,ℂ)` matrices and point pairs; returns the largest residual.
pub fn mobius_invariance_check(samples: usize, seed: u64, tol: f64) -> Result<MobiusOutcome> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let mut rng = rng_for(seed, 300);
    let mut max_residual: f64 = 0.0;
    let mut resampled = 0;
    let mut taken = 0;
    while taken < samples {
        let a = loop {
            let a = random_point(&mut rng);
            if a.norm() >= 0.5 {
                break a;
            }
        };
        let (b, c) = (random_point(&mut rng), random_point(&mut rng));
        let d = (1.0 + b * c) / a;
        let (z1, z2) = (random_point(&mut rng), random_point(&mut rng));
        match mobius_residual([a, b, c, d], z1, z2) {
            Some(r) => {
                max_residual = max_residual.max(r);
                taken += 1;
            }
            None => resampled += 1,
        }
    }
    Ok(MobiusOutcome {
        samples,
        max_residual,
        resampled,
    })
}

fn fragment_mobius(seed: u64, tol: f64, out: &mut Checks) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (z1, z2) = (Complex64::new(0.3, -1.2), Complex64::new(-0.7, 0.4));
    for (id, m) in [
        ("mobius.identity", [one, zero, zero, one]),
        ("mobius.translation", [one, one, zero, one]),
    ] {
        let r = mobius_residual(m, z1, z2).unwrap_or(f64::INFINITY);
        out.value(id, r <= 1e-15, format!("{r:e}"));
    }
    match mobius_invariance_check(MOBIUS_SAMPLES, seed, tol) {
        Ok(o) => out.value("mobius.random", o.max_residual < tol, format!("{:e}", o.max_residual)),
        Err(e) => out.error("mobius.random", &e),
    }
}

/// Runs every fragment against `catalog`.
pub fn verify_catalog(catalog: &[CatalogEntry], seed: u64, tol: f64) -> Result<VerifyReport> {
    if catalog.is_empty() {
        return Err(Error::EmptyCatalog);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    // fragments are independent; run them in parallel and concatenate in a fixed order
    let parts: Vec<Vec<Check>> = std::thread::scope(|s| {
        let jobs: Vec<Box<dyn FnOnce() -> Vec<Check> + Send + '_>> = vec![
            Box::new(|| run(|o| fragment_catalog(catalog, o))),
            Box::new(|| run(|o| fragment_unimodular_flatness(catalog, o))),
            Box::new(|| run(|o| fragment_sl2_sectional(catalog, o))),
            Box::new(|| run(|o| fragment_classification(catalog, seed, o))),
            Box::new(|| run(|o| fragment_isotropy_tables(catalog, seed, o))),
            Box::new(|| run(fragment_heis_span)),
            Box::new(|| run(fragment_isotropy_bounds)),
            Box::new(|| run(fragment_unipotent)),
            Box::new(|| run(|o| fragment_mobius(seed, tol, o))),
        ];
        let handles: Vec<_> = jobs.into_iter().map(|job| s.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification fragment panicked"))
            .collect()
    });
    Ok(VerifyReport::from_checks(seed, parts.into_iter().flatten().collect()))
}

fn run(f: impl FnOnce(&mut Checks)) -> Vec<Check> {
    let mut out = Checks::default();
    f(&mut out);
    out.0
}

/// Full suite over the built-in catalog.
pub fn verify_all(seed: u64, tol: f64) -> Result<VerifyReport> {
    verify_catalog(&build_catalog(), seed, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let report = verify_all(DEFAULT_SEED, DEFAULT_TOL).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(report.summary.pass, report.checks.len());
    }

    #[test]
    fn empty_catalog_is_an_error() {
        assert!(matches!(verify_catalog(&[], 1, DEFAULT_TOL), Err(Error::EmptyCatalog)));
    }

    #[test]
    fn mobius_examples() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let z = (Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.25));
        assert_eq!(mobius_residual([one, zero, zero, one], z.0, z.1), Some(0.0));
        assert!(mobius_residual([one, one, zero, one], z.0, z.1).unwrap() <= 1e-15);
        assert_eq!(mobius_residual([one, zero, zero, one], z.0, z.0), None);
        let o = mobius_invariance_check(MOBIUS_SAMPLES, 42, DEFAULT_TOL).unwrap();
        assert!(o.max_residual < 1e-9, "{o:?}");
        assert!(mobius_invariance_check(0, 42, DEFAULT_TOL).is_err());
        assert!(mobius_invariance_check(10, 42, 0.0).is_err());
    }

    #[test]
    fn expectations_report_mismatch() {
        let mut catalog = build_catalog();
        let sol = catalog.iter_mut().find(|e| e.id == "sol3").unwrap();
        sol.expected.insert("class".into(), "HEIS".into());
        let checks = check_expectations(sol);
        let class = checks.iter().find(|c| c.id == "sol3.expected.class").unwrap();
        assert!(!class.passed());
        assert_eq!(class.value.as_deref(), Some("SOL"));
    }
}
