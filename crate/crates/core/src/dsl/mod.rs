//! The `.liealg` text format.
//!
//! ```text
//! # Heisenberg algebra with an isotropic center
//! [algebra]
//! name = heis3
//! dim = 3
//! basis = X', Y, Z
//!
//! [brackets]
//! "Y,Z" = X'
//!
//! [form]
//! "X',Z" = 1
//! "Y,Y" = 1
//!
//! [expected]
//! class = HEIS
//! constcurv = 0
//! ```
//!
//! Omitted brackets and form entries are zero. `[isotropy]` lists generator
//! expressions under arbitrary keys plus an optional `complement` key holding
//! a comma-separated basis of a complement. When `[isotropy]` is present the
//! form is the quotient form, keyed by complement names: the basis label for
//! a complement vector that is a basis vector, `u1`, `u2`, ... otherwise.
//! `[expected]` holds property
//! assertions checked by [`crate::verify::check_expectations`].

mod expr;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

pub use expr::{format_lincomb, is_label, parse_lincomb, parse_scalar};

use crate::error::{ParseError, ParseErrorKind};
use crate::lie::{AlgebraClass, LieAlgebra};
use crate::linalg::{CMatrix, Gr, Vector};
use crate::metric::QuadraticForm;
use crate::model::{HomogeneousModel, IsotropyType};

type PResult<T> = std::result::Result<T, ParseError>;

/// Section names in canonical order.
const SECTIONS: [&str; 5] = ["algebra", "brackets", "form", "isotropy", "expected"];

/// Keys allowed in `[expected]`.
pub const EXPECTED_KEYS: [&str; 12] = [
    "center_dim",
    "class",
    "constcurv",
    "derived_series",
    "flat",
    "invariant_forms_dim",
    "isotropy_type",
    "lower_central_series",
    "nilpotent",
    "semisimple",
    "solvable",
    "unimodular",
];

/// Parsed contents of a `.liealg` file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecFile {
    pub name: String,
    pub algebra: LieAlgebra,
    pub form: Option<QuadraticForm>,
    /// Isotropy generators keyed by their name in the file.
    pub isotropy: BTreeMap<String, Vector>,
    pub complement: Option<Vec<Vector>>,
    /// Canonicalised property assertions.
    pub expected: BTreeMap<String, String>,
}

impl SpecFile {
    pub fn new(name: &str, algebra: LieAlgebra) -> Self {
        Self {
            name: name.to_string(),
            algebra,
            form: None,
            isotropy: BTreeMap::new(),
            complement: None,
            expected: BTreeMap::new(),
        }
    }

    pub fn has_model(&self) -> bool {
        !self.isotropy.is_empty() || self.complement.is_some()
    }

    /// The homogeneous model described by `[isotropy]`, with the form read
    /// as the quotient form on the complement basis.
    pub fn model(&self) -> crate::Result<HomogeneousModel> {
        let isotropy: Vec<Vector> = self.isotropy.values().cloned().collect();
        let model = match &self.complement {
            Some(c) => HomogeneousModel::with_complement(self.algebra.clone(), isotropy, c.clone())?,
            None => HomogeneousModel::new(self.algebra.clone(), isotropy)?,
        };
        match &self.form {
            Some(q) => model.with_form(q.clone()),
            None => Ok(model),
        }
    }
}

struct Entry {
    line: usize,
    key: Key,
    key_col: usize,
    value: String,
    value_col: usize,
}

enum Key {
    Bare(String),
    Pair(String, String, usize),
}

fn perr<T>(line: usize, col: usize, kind: ParseErrorKind) -> PResult<T> {
    Err(ParseError::new(line, col, kind))
}

/// Drops a trailing comment; `#` inside a quoted key does not start one.
fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

/// Column (1-based, in chars) of byte offset `b` in `s`.
fn col_of(s: &str, b: usize) -> usize {
    s[..b].chars().count() + 1
}

fn parse_key(raw: &str, line: usize, col: usize) -> PResult<Key> {
    if let Some(inner) = raw.strip_prefix('"') {
        let Some(inner) = inner.strip_suffix('"') else {
            return perr(line, col, ParseErrorKind::Syntax("unterminated quoted key".into()));
        };
        let Some((a, b)) = inner.split_once(',') else {
            return perr(line, col, ParseErrorKind::Syntax("quoted key must be a pair \"a,b\"".into()));
        };
        let comma_col = col + 1 + a.chars().count();
        let (a, b) = (a.trim(), b.trim());
        for l in [a, b] {
            if !is_label(l) {
                return perr(line, col + 1, ParseErrorKind::Syntax(format!("`{l}` is not a label")));
            }
        }
        Ok(Key::Pair(a.to_string(), b.to_string(), comma_col + 1))
    } else if raw.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && raw.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
    {
        Ok(Key::Bare(raw.to_string()))
    } else {
        perr(line, col, ParseErrorKind::Syntax(format!("malformed key `{raw}`")))
    }
}

/// Splits the text into sections of `key = value` entries.
fn split_sections(text: &str) -> PResult<BTreeMap<&'static str, (usize, Vec<Entry>)>> {
    let mut sections: BTreeMap<&'static str, (usize, Vec<Entry>)> = BTreeMap::new();
    let mut current: Option<&'static str> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw_line);
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let start_col = col_of(content, lead);
        if let Some(rest) = trimmed.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return perr(line, start_col, ParseErrorKind::Syntax("expected `]`".into()));
            };
            let name = name.trim();
            let Some(&known) = SECTIONS.iter().find(|s| **s == name) else {
                return perr(line, start_col, ParseErrorKind::Syntax(format!("unknown section [{name}]")));
            };
            if sections.contains_key(known) {
                return perr(line, start_col, ParseErrorKind::DuplicateKey(format!("[{name}]")));
            }
            sections.insert(known, (line, Vec::new()));
            current = Some(known);
            continue;
        }
        let Some(section) = current else {
            return perr(line, start_col, ParseErrorKind::Syntax("entry outside of a section".into()));
        };
        let Some(eq) = content.find('=') else {
            return perr(line, start_col, ParseErrorKind::Syntax("expected `key = value`".into()));
        };
        let key = parse_key(content[..eq].trim(), line, start_col)?;
        let after = &content[eq + 1..];
        let vlead = after.len() - after.trim_start().len();
        let mut value = after.trim();
        let mut value_col = col_of(content, eq + 1 + vlead);
        if value.len() >= 2 && value.starts_with('"') && value.ends_with('"') {
            value = &value[1..value.len() - 1];
            value_col += 1;
        }
        sections.get_mut(section).expect("section opened").1.push(Entry {
            line,
            key,
            key_col: start_col,
            value: value.to_string(),
            value_col,
        });
    }
    Ok(sections)
}

fn bare_key<'e>(e: &'e Entry, section: &str) -> PResult<&'e str> {
    match &e.key {
        Key::Bare(k) => Ok(k),
        Key::Pair(..) => perr(
            e.line,
            e.key_col,
            ParseErrorKind::Syntax(format!("[{section}] keys are bare identifiers")),
        ),
    }
}

/// Resolves a pair key to ordered basis indices.
fn pair_key(e: &Entry, names: &[String]) -> PResult<(usize, usize)> {
    let Key::Pair(a, b, b_col) = &e.key else {
        return perr(e.line, e.key_col, ParseErrorKind::Syntax("expected a quoted pair key \"a,b\"".into()));
    };
    let find = |l: &str, col: usize| match names.iter().position(|n| n == l) {
        Some(k) => Ok(k),
        None => perr(e.line, col, ParseErrorKind::UndeclaredLabel(l.to_string())),
    };
    Ok((find(a, e.key_col + 1)?, find(b, *b_col)?))
}

struct Header {
    name: String,
    basis: Vec<String>,
}

fn parse_header(line: usize, entries: &[Entry]) -> PResult<Header> {
    let mut seen = BTreeMap::new();
    for e in entries {
        let k = bare_key(e, "algebra")?;
        if !["name", "dim", "basis"].contains(&k) {
            return perr(e.line, e.key_col, ParseErrorKind::Syntax(format!("unknown key `{k}` in [algebra]")));
        }
        if seen.insert(k.to_string(), e).is_some() {
            return perr(e.line, e.key_col, ParseErrorKind::DuplicateKey(k.to_string()));
        }
    }
    let Some(basis_entry) = seen.get("basis") else {
        return perr(line, 1, ParseErrorKind::Invalid("[algebra] needs a `basis` key".into()));
    };
    let mut basis: Vec<String> = Vec::new();
    let mut offset = 0;
    for part in basis_entry.value.split(',') {
        let label = part.trim();
        let col = basis_entry.value_col + offset + (part.len() - part.trim_start().len());
        offset += part.chars().count() + 1;
        if !is_label(label) {
            return perr(basis_entry.line, col, ParseErrorKind::Syntax(format!("`{label}` is not a valid label")));
        }
        if basis.iter().any(|b| b == label) {
            return perr(basis_entry.line, col, ParseErrorKind::DuplicateKey(label.to_string()));
        }
        basis.push(label.to_string());
    }
    if let Some(e) = seen.get("dim") {
        match e.value.trim().parse::<usize>() {
            Ok(d) if d == basis.len() => {}
            Ok(d) => {
                return perr(e.line, e.value_col, ParseErrorKind::Invalid(format!(
                    "dim = {d} but {} basis labels are declared",
                    basis.len()
                )))
            }
            Err(_) => return perr(e.line, e.value_col, ParseErrorKind::Syntax("dim must be a nonnegative integer".into())),
        }
    }
    let name = seen.get("name").map_or_else(String::new, |e| e.value.clone());
    Ok(Header { name, basis })
}

/// Canonical text of an `[expected]` value, or a reason it is malformed.
fn canonical_expected(key: &str, value: &str) -> Result<String, String> {
    let value = value.trim();
    let boolean = || match value {
        "true" | "false" => Ok(value.to_string()),
        _ => Err(format!("`{key}` must be true or false")),
    };
    let series = || {
        value
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map(|v| v.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
            .map_err(|_| format!("`{key}` must be a comma-separated list of integers"))
    };
    match key {
        "class" => value
            .parse::<AlgebraClass>()
            .map(|c| c.to_string())
            .map_err(|_| "class must be one of ABELIAN_C3, HEIS, SOL, SL2".to_string()),
        "isotropy_type" => value
            .parse::<IsotropyType>()
            .map(|t| t.to_string())
            .map_err(|_| "isotropy_type must be UNIPOTENT, SEMISIMPLE or MIXED".to_string()),
        "constcurv" if value == "NotConstant" => Ok(value.to_string()),
        "constcurv" => parse_scalar(value)
            .map(|s| s.to_string())
            .map_err(|_| "constcurv must be a scalar or NotConstant".to_string()),
        "center_dim" | "invariant_forms_dim" => value
            .parse::<usize>()
            .map(|d| d.to_string())
            .map_err(|_| format!("`{key}` must be a nonnegative integer")),
        "derived_series" | "lower_central_series" => series(),
        "flat" | "nilpotent" | "semisimple" | "solvable" | "unimodular" => boolean(),
        _ => Err(format!("unknown expectation `{key}`")),
    }
}

/// Parses `.liealg` text.
pub fn parse(text: &str) -> PResult<SpecFile> {
    let sections = split_sections(text)?;
    let Some((alg_line, alg_entries)) = sections.get("algebra") else {
        let last = text.lines().count().max(1);
        return perr(last, 1, ParseErrorKind::MissingSection("algebra".into()));
    };
    let header = parse_header(*alg_line, alg_entries)?;
    let names = header.basis;
    let n = names.len();

    let mut constants = vec![Gr::zero(); n * n * n];
    if let Some((_, entries)) = sections.get("brackets") {
        let mut seen = BTreeMap::new();
        for e in entries {
            let (i, j) = pair_key(e, &names)?;
            if seen.insert((i.min(j), i.max(j)), ()).is_some() {
                return perr(e.line, e.key_col, ParseErrorKind::DuplicateKey(format!("{},{}", names[i], names[j])));
            }
            let v = expr::lincomb_at(&e.value, e.line, e.value_col, &names)?;
            if i == j {
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                return perr(e.line, e.key_col, ParseErrorKind::Invalid(format!(
                    "[{0},{0}] must vanish",
                    names[i]
                )));
            }
            for (k, x) in v.into_iter().enumerate() {
                constants[(j * n + i) * n + k] = -&x;
                constants[(i * n + j) * n + k] = x;
            }
        }
    }
    let algebra = LieAlgebra::new(names.clone(), constants).expect("antisymmetric by construction");

    let mut isotropy = BTreeMap::new();
    let mut complement = None;
    if let Some((_, entries)) = sections.get("isotropy") {
        for e in entries {
            let k = bare_key(e, "isotropy")?;
            if isotropy.contains_key(k) || (k == "complement" && complement.is_some()) {
                return perr(e.line, e.key_col, ParseErrorKind::DuplicateKey(k.to_string()));
            }
            if k == "complement" {
                let mut vectors = Vec::new();
                let mut offset = 0;
                for part in e.value.split(',') {
                    vectors.push(expr::lincomb_at(part, e.line, e.value_col + offset, &names)?);
                    offset += part.chars().count() + 1;
                }
                complement = Some(vectors);
            } else {
                let v = expr::lincomb_at(&e.value, e.line, e.value_col, &names)?;
                isotropy.insert(k.to_string(), v);
            }
        }
    }

    // in a model the form lives on the complement, keyed by complement names
    let model_names = match sections.get("isotropy") {
        Some((line, _)) if sections.contains_key("form") => {
            let iso: Vec<Vector> = isotropy.values().cloned().collect();
            let model = match &complement {
                Some(c) => HomogeneousModel::with_complement(algebra.clone(), iso, c.clone()),
                None => HomogeneousModel::new(algebra.clone(), iso),
            };
            match model {
                Ok(m) => Some(m.complement_names()),
                Err(err) => return perr(*line, 1, ParseErrorKind::Invalid(err.to_string())),
            }
        }
        _ => None,
    };

    let form = match sections.get("form") {
        None => None,
        Some((_, entries)) => {
            let form_names = match &model_names {
                Some(m) => m,
                None => &names,
            };
            let m = form_names.len();
            let mut gram = CMatrix::zeros(m, m);
            let mut seen = BTreeMap::new();
            for e in entries {
                let (i, j) = pair_key(e, form_names)?;
                if seen.insert((i.min(j), i.max(j)), ()).is_some() {
                    return perr(e.line, e.key_col, ParseErrorKind::DuplicateKey(format!("{},{}", form_names[i], form_names[j])));
                }
                let s = expr::scalar_at(&e.value, e.line, e.value_col, &names)?;
                gram[(i, j)] = s.clone();
                gram[(j, i)] = s;
            }
            Some(QuadraticForm::new(gram).expect("symmetric by construction"))
        }
    };

    let mut expected = BTreeMap::new();
    if let Some((_, entries)) = sections.get("expected") {
        for e in entries {
            let k = bare_key(e, "expected")?;
            if expected.contains_key(k) {
                return perr(e.line, e.key_col, ParseErrorKind::DuplicateKey(k.to_string()));
            }
            let value = canonical_expected(k, &e.value).map_err(|m| {
                let kind = if EXPECTED_KEYS.contains(&k) {
                    ParseErrorKind::Invalid(m)
                } else {
                    ParseErrorKind::Syntax(m)
                };
                ParseError::new(e.line, e.value_col, kind)
            })?;
            expected.insert(k.to_string(), value);
        }
    }

    Ok(SpecFile {
        name: header.name,
        algebra,
        form,
        isotropy,
        complement,
        expected,
    })
}

/// Canonical text: fixed section order, keys sorted, scalars in lowest terms.
pub fn serialize(spec: &SpecFile) -> String {
    let names = spec.algebra.names();
    let n = names.len();
    let pair = |i: usize, j: usize| format!("\"{},{}\"", names[i], names[j]);
    let mut out = String::new();

    out.push_str("[algebra]\n");
    writeln!(out, "basis = {}", names.join(", ")).unwrap();
    writeln!(out, "dim = {n}").unwrap();
    if !spec.name.is_empty() {
        writeln!(out, "name = {}", spec.name).unwrap();
    }

    let brackets: BTreeMap<String, String> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, spec.algebra.bracket_basis(i, j)))
        .filter(|(_, _, v)| v.iter().any(|x| !x.is_zero()))
        .map(|(i, j, v)| (pair(i, j), format_lincomb(names, &v)))
        .collect();
    if !brackets.is_empty() {
        out.push_str("\n[brackets]\n");
        for (k, v) in &brackets {
            writeln!(out, "{k} = {v}").unwrap();
        }
    }

    if let Some(q) = &spec.form {
        out.push_str("\n[form]\n");
        let form_names = match spec.has_model().then(|| spec.model()) {
            Some(Ok(m)) => m.complement_names(),
            _ => names.to_vec(),
        };
        let pair = |i: usize, j: usize| format!("\"{},{}\"", form_names[i], form_names[j]);
        let m = q.dim();
        let entries: BTreeMap<String, String> = (0..m)
            .flat_map(|i| (i..m).map(move |j| (i, j)))
            .filter(|&(i, j)| !q.entry(i, j).is_zero())
            .map(|(i, j)| (pair(i, j), q.entry(i, j).to_string()))
            .collect();
        for (k, v) in &entries {
            writeln!(out, "{k} = {v}").unwrap();
        }
    }

    if spec.has_model() {
        out.push_str("\n[isotropy]\n");
        let mut entries: BTreeMap<&str, String> = spec
            .isotropy
            .iter()
            .map(|(k, v)| (k.as_str(), format_lincomb(names, v)))
            .collect();
        if let Some(c) = &spec.complement {
            let parts: Vec<String> = c.iter().map(|v| format_lincomb(names, v)).collect();
            entries.insert("complement", parts.join(", "));
        }
        for (k, v) in &entries {
            writeln!(out, "{k} = {v}").unwrap();
        }
    }

    if !spec.expected.is_empty() {
        out.push_str("\n[expected]\n");
        for (k, v) in &spec.expected {
            writeln!(out, "{k} = {v}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::standard::heis;
    use num_traits::One;

    const HEIS: &str = "\
# Heisenberg algebra
[algebra]
name = heis3
dim = 3
basis = X, Y, Z

[brackets]
\"Y,Z\" = \"X\"   # central X

[form]
\"X,Z\" = 1
\"Y,Y\" = 1
";

    #[test]
    fn parses_heis() {
        let s = parse(HEIS).unwrap();
        assert_eq!(s.name, "heis3");
        assert_eq!(s.algebra, heis().with_names(&["X", "Y", "Z"]).unwrap());
        let q = s.form.as_ref().unwrap();
        assert!(q.entry(0, 2).is_one() && q.entry(2, 0).is_one());
        assert!(s.isotropy.is_empty() && s.expected.is_empty());
    }

    #[test]
    fn round_trip() {
        let s = parse(HEIS).unwrap();
        let text = serialize(&s);
        assert_eq!(parse(&text).unwrap(), s);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
        // no optional sections beyond what was given
        assert!(!text.contains("[isotropy]") && !text.contains("[expected]"));
    }

    #[test]
    fn reversed_key_is_negated() {
        let s = parse("[algebra]\nbasis = A, B\n[brackets]\n\"B,A\" = A\n").unwrap();
        assert_eq!(s.algebra.bracket_basis(0, 1), vec![-Gr::one(), Gr::zero()]);
        assert_eq!(serialize(&s).lines().nth(5), Some("\"A,B\" = -A"));
    }

    #[test]
    fn complex_form_entry() {
        let s = parse("[algebra]\nbasis = X\n[form]\n\"X,X\" = \"1/2 + i\"\n").unwrap();
        assert_eq!(s.form.unwrap().entry(0, 0), &Gr::complex(1, 2, 1, 1));
    }

    #[test]
    fn scalars_are_canonicalised() {
        let s = parse("[algebra]\nbasis = X\n[form]\n\"X,X\" = 2/4\n").unwrap();
        assert!(serialize(&s).contains("\"X,X\" = 1/2"));
    }

    #[test]
    fn undeclared_label_is_located() {
        let e = parse("[algebra]\nbasis = X, Y\n[brackets]\n\"X,Y\" = W\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndeclaredLabel("W".into()));
        assert_eq!((e.line, e.col), (4, 9));
        let e = parse("[algebra]\nbasis = X, Y\n[brackets]\n\"X,W\" = X\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndeclaredLabel("W".into()));
        assert_eq!((e.line, e.col), (4, 4));
    }

    #[test]
    fn parse_errors() {
        let missing = parse("[form]\n").unwrap_err();
        assert_eq!(missing.kind, ParseErrorKind::MissingSection("algebra".into()));
        let dup = parse("[algebra]\nbasis = X, Y\n[brackets]\n\"X,Y\" = X\n\"Y,X\" = Y\n").unwrap_err();
        assert!(matches!(dup.kind, ParseErrorKind::DuplicateKey(_)));
        assert_eq!(dup.line, 5);
        let bad = parse("[algebra]\nbasis = X\n[form]\n\"X,X\" = 1/0\n").unwrap_err();
        assert!(matches!(bad.kind, ParseErrorKind::MalformedScalar(_)));
        let label_in_form = parse("[algebra]\nbasis = X\n[form]\n\"X,X\" = X\n").unwrap_err();
        assert!(matches!(label_in_form.kind, ParseErrorKind::MalformedScalar(_)));
        assert!(parse("[algebra]\nbasis = X, X\n").is_err());
        assert!(parse("[algebra]\nbasis = X, i\n").is_err());
        assert!(parse("[algebra]\ndim = 3\nbasis = X\n").is_err());
        assert!(parse("[algebra]\nbasis = X\n[nonsense]\n").is_err());
        assert!(parse("basis = X\n").is_err());
        assert!(parse("[algebra]\nbasis = X, Y\n[brackets]\n\"X,X\" = Y\n").is_err());
        assert!(parse("[algebra]\nbasis = X\n[expected]\nclass = FOO\n").is_err());
        assert!(parse("[algebra]\nbasis = X\n[expected]\ncolour = red\n").is_err());
    }

    #[test]
    fn isotropy_and_expected_round_trip() {
        let text = "\
[algebra]
basis = C, H, E, F
[brackets]
\"H,E\" = 2E
\"H,F\" = -2 F
\"E,F\" = H
[form]
\"H,H\" = 8
\"E,F\" = 4
[isotropy]
complement = H, E, F
gen = C + H
[expected]
isotropy_type = SEMISIMPLE
derived_series = 4,3
constcurv = -2/16
";
        let s = parse(text).unwrap();
        assert_eq!(s.isotropy.len(), 1);
        assert_eq!(s.complement.as_ref().unwrap().len(), 3);
        assert_eq!(s.expected["constcurv"], "-1/8");
        assert_eq!(s.expected["derived_series"], "4, 3");
        let again = parse(&serialize(&s)).unwrap();
        assert_eq!(again, s);
    }
}
