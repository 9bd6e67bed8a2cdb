//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always print; the process
//! exits nonzero when any criterion fails.

use std::path::PathBuf;
use std::process::Command;

use holometric::catalog::{build_catalog, find, CatalogEntry};
use holometric::dsl::{parse, serialize};
use holometric::metric::{constant_curvature, ConstantCurvature};
use holometric::verify::{entry_metric, verify_all, verify_catalog, VerifyReport, DEFAULT_TOL};
use holometric::Gr;
use num_traits::{One, Zero};

type Outcome = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All checks under `prefix` pass, and there is at least `min` of them.
fn all_pass(report: &VerifyReport, prefix: &str, min: usize) -> Outcome {
    let checks: Vec<_> = report.with_prefix(prefix).collect();
    ensure(checks.len() >= min, || format!("{} checks under `{prefix}`, expected {min}", checks.len()))?;
    match checks.iter().find(|c| !c.passed()) {
        Some(c) => Err(format!("{} failed: value {:?} witness {:?}", c.id, c.value, c.witness)),
        None => Ok(()),
    }
}

fn value_of(report: &VerifyReport, id: &str) -> Result<String, String> {
    let c = report.get(id).ok_or_else(|| format!("missing check {id}"))?;
    ensure(c.passed(), || format!("{id} failed"))?;
    c.value.clone().ok_or_else(|| format!("{id} has no value"))
}

fn unimodular_curvatures(report: &VerifyReport) -> Outcome {
    for id in ["flat_c3", "heis3", "sol3"] {
        let v = value_of(report, &format!("{id}.expected.constcurv"))?;
        ensure(v == "0", || format!("{id}: {v}"))?;
    }
    let v = value_of(report, "sl2.expected.constcurv")?;
    ensure(v != "0" && v != "NotConstant", || format!("sl2: {v}"))?;
    all_pass(report, "unimodular_flatness.flat_iff_solvable", 1)?;
    // independently of the report, straight from the metric
    let catalog = build_catalog();
    for id in ["flat_c3", "heis3", "sol3", "sl2"] {
        let e = find(&catalog, id).unwrap();
        let q = e.form.as_ref().unwrap();
        let k = constant_curvature(&e.algebra, q).map_err(|e| e.to_string())?;
        let ConstantCurvature::Constant(k) = k else {
            return Err(format!("{id} not constant"));
        };
        ensure(k.is_zero() == e.algebra.is_solvable(), || format!("{id}: k = {k}"))?;
    }
    Ok(())
}

fn sl2_sectional(report: &VerifyReport) -> Outcome {
    let values: Vec<_> = report
        .with_prefix("sl2.sectional.")
        .filter(|c| c.id != "sl2.sectional.constant" && c.passed())
        .filter_map(|c| c.value.clone())
        .collect();
    ensure(values.len() >= 3 && values.iter().all(|v| v == "-1/8"), || format!("{values:?}"))?;
    all_pass(report, "sl2.sectional.constant", 1)
}

fn isotropy_tables(report: &VerifyReport) -> Outcome {
    for (case, center) in [("case1", "1"), ("case2", "1"), ("case3", "0")] {
        all_pass(report, &format!("semisimple_isotropy.{case}.jacobi"), 1)?;
        let v = value_of(report, &format!("semisimple_isotropy.{case}.center_dim"))?;
        ensure(v == center, || format!("{case} center {v}"))?;
        let v = value_of(report, &format!("semisimple_isotropy.{case}.isotropy_type"))?;
        ensure(v == "SEMISIMPLE", || format!("{case} isotropy {v}"))?;
    }
    all_pass(report, "heis_family.jacobi", 1)?;
    all_pass(report, "heis_family.unipotent", 1)?;
    all_pass(report, "heis_family.catalog_isotropy", 1)
}

fn connection_identities(report: &VerifyReport) -> Outcome {
    let catalog = build_catalog();
    let with_metric: Vec<&CatalogEntry> = catalog.iter().filter(|e| entry_metric(e).is_some()).collect();
    ensure(with_metric.len() >= 4, || "too few metrics".into())?;
    for e in with_metric {
        for check in ["torsion_free", "metric_compatible", "curvature_antisymmetric", "first_bianchi", "curvature_metric_skew"] {
            all_pass(report, &format!("{}.{check}", e.id), 1)?;
        }
    }
    Ok(())
}

fn fault_injection() -> Outcome {
    let catalog = build_catalog();
    let sol = find(&catalog, "sol3").unwrap();
    let n = sol.algebra.dim();
    let slots: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect();
    ensure(slots.len() == 9, || "expected 9 slots".into())?;
    for (i, j, k) in slots {
        let mutated = sol.with_mutated_constant(i, j, k, &Gr::one()).map_err(|e| e.to_string())?;
        let report = verify_catalog(&[mutated], 42, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let caught = report
            .failures()
            .any(|c| c.witness.as_deref().is_some_and(|w| w.starts_with('(')));
        ensure(caught, || format!("slot ({i}, {j}, {k}) not caught with a witness"))?;
    }
    Ok(())
}

fn tooling() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog");
    let mut count = 0;
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        if path.extension().is_none_or(|x| x != "liealg") {
            continue;
        }
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let spec = parse(&text).map_err(|e| format!("{}:{e}", path.display()))?;
        ensure(parse(&serialize(&spec)).as_ref() == Ok(&spec), || format!("{} round trip", path.display()))?;
        count += 1;
    }
    ensure(count > 0, || "no shipped files".into())?;

    let bin = env!("CARGO_BIN_EXE_holometric");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = std::thread::scope(|s| {
        let a = s.spawn(|| run(&["verify-paper", "--seed", "42", "--json"]));
        let b = s.spawn(|| run(&["verify-paper", "--seed", "42", "--json"]));
        (a.join().unwrap(), b.join().unwrap())
    });
    let (a, b) = (a?, b?);
    ensure(a.status.code() == Some(0), || "verify-paper did not exit 0".into())?;
    ensure(a.stdout == b.stdout, || "verify-paper --json differs between runs".into())?;
    for (args, code) in [
        (&["classify", "catalog/sol3.liealg"][..], 0),
        (&["classify", "catalog/missing.liealg"][..], 1),
        (&["no-such-command"][..], 2),
    ] {
        let got = run(args)?.status.code();
        ensure(got == Some(code), || format!("{args:?} exited {got:?}, expected {code}"))?;
    }
    Ok(())
}

fn main() {
    let report = verify_all(42, DEFAULT_TOL).expect("suite runs");
    let criteria: Vec<Criterion> = vec![
        ("flat unimodular metrics and flat iff solvable", Box::new(|| unimodular_curvatures(&report))),
        ("sl2 Killing metric has sectional curvature -1/8 on 3+ planes", Box::new(|| sl2_sectional(&report))),
        ("classification stable under 1000 basis conjugations", Box::new(|| all_pass(&report, "classification.", 8))),
        ("semisimple-isotropy tables and the unipotent family", Box::new(|| isotropy_tables(&report))),
        ("span{X', Z - bY, T} is Heisenberg with center X'", Box::new(|| all_pass(&report, "heis_span.", 4))),
        ("isotropy dimension bounds", Box::new(|| all_pass(&report, "isotropy.", 4))),
        ("unipotent isotropy preserves the anti-diagonal form", Box::new(|| {
            all_pass(&report, "unipotent.group_identity", 1)?;
            all_pass(&report, "unipotent.generator_identity", 1)
        })),
        ("Mobius invariance of dz1 dz2 / (z1 - z2)^2", Box::new(|| all_pass(&report, "mobius.", 3))),
        ("Levi-Civita and curvature identities on every catalog metric", Box::new(|| connection_identities(&report))),
        ("every sol3 slot mutation is caught with a witness", Box::new(fault_injection)),
        ("file round trips, deterministic JSON, exit codes", Box::new(tooling)),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
