//! Scalar and linear-combination expressions over the Gaussian rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{ParseError, ParseErrorKind};
use crate::linalg::{is_zero_vec, unit_vector, vec_add, vec_scale, vec_sub, Gr, Vector};

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

/// Whether `s` is a legal basis label: `[A-Za-z_][A-Za-z0-9_']*`, except `i`.
pub fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && s != "i"
}

/// Evaluated expression: a scalar or a coordinate vector.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Value {
    Scalar(Gr),
    Vector(Vector),
}

pub(crate) struct ExprParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    labels: &'a [String],
}

impl<'a> ExprParser<'a> {
    /// Tokenises `src`, which starts at column `col0` of `line`.
    pub(crate) fn new(src: &str, line: usize, col0: usize, labels: &'a [String]) -> PResult<Self> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut p = 0;
        while p < chars.len() {
            let c = chars[p];
            let col = col0 + p;
            if c.is_whitespace() {
                p += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = p;
                while p < chars.len() && chars[p].is_ascii_digit() {
                    p += 1;
                }
                let digits: String = chars[start..p].iter().collect();
                toks.push((Tok::Num(digits.parse().expect("ascii digits")), col));
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = p;
                while p < chars.len()
                    && (chars[p].is_ascii_alphanumeric() || chars[p] == '_' || chars[p] == '\'')
                {
                    p += 1;
                }
                toks.push((Tok::Ident(chars[start..p].iter().collect()), col));
                continue;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' | '·' => Tok::Star,
                '/' => Tok::Slash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(ParseError::new(
                        line,
                        col,
                        ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
                    ))
                }
            };
            toks.push((tok, col));
            p += 1;
        }
        Ok(Self {
            toks,
            pos: 0,
            line,
            end_col: col0 + chars.len(),
            labels,
        })
    }

    fn err<T>(&self, col: usize, kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError::new(self.line, col, kind))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(_, c)| c)
    }

    /// Parses the whole input as one expression.
    pub(crate) fn parse_all(mut self) -> PResult<Value> {
        if self.toks.is_empty() {
            return self.err(self.end_col, ParseErrorKind::Syntax("empty expression".into()));
        }
        let v = self.expr()?;
        if self.pos < self.toks.len() {
            return self.err(self.col(), ParseErrorKind::Syntax("unexpected trailing input".into()));
        }
        Ok(v)
    }

    fn expr(&mut self) -> PResult<Value> {
        let mut acc = self.term()?;
        loop {
            let col = self.col();
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.add(acc, rhs, negate, col)?;
        }
    }

    fn term(&mut self) -> PResult<Value> {
        let mut acc = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.mul(acc, rhs, col)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.div(acc, rhs, col)?;
                }
                // implicit multiplication: `1/2 i`, `2 X`, `(1 + i) Y`
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    let rhs = self.primary()?;
                    acc = self.mul(acc, rhs, col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<Value> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(match self.unary()? {
                    Value::Scalar(s) => Value::Scalar(-s),
                    Value::Vector(v) => Value::Vector(v.iter().map(|x| -x).collect()),
                })
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> PResult<Value> {
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return self.err(col, ParseErrorKind::Syntax("unexpected end of expression".into()));
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Value::Scalar(Gr::from(BigRational::from_integer(n)))),
            Tok::Ident(name) if name == "i" => Ok(Value::Scalar(Gr::i())),
            Tok::Ident(name) => match self.labels.iter().position(|l| *l == name) {
                Some(k) => Ok(Value::Vector(unit_vector(self.labels.len(), k))),
                None => self.err(col, ParseErrorKind::UndeclaredLabel(name)),
            },
            Tok::LParen => {
                let v = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err(self.col(), ParseErrorKind::Syntax("expected `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => self.err(col, ParseErrorKind::Syntax("expected a number, `i`, a label or `(`".into())),
        }
    }

    fn add(&self, a: Value, b: Value, negate: bool, col: usize) -> PResult<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => {
                Ok(Value::Scalar(if negate { &x - &y } else { &x + &y }))
            }
            (Value::Vector(x), Value::Vector(y)) => Ok(Value::Vector(if negate {
                vec_sub(&x, &y)
            } else {
                vec_add(&x, &y)
            })),
            _ => self.err(
                col,
                ParseErrorKind::Syntax("cannot add a scalar and a basis combination".into()),
            ),
        }
    }

    fn mul(&self, a: Value, b: Value, col: usize) -> PResult<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(s), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(s)) => {
                Ok(Value::Vector(vec_scale(&v, &s)))
            }
            (Value::Vector(_), Value::Vector(_)) => self.err(
                col,
                ParseErrorKind::Syntax("cannot multiply two basis vectors".into()),
            ),
        }
    }

    fn div(&self, a: Value, b: Value, col: usize) -> PResult<Value> {
        let Value::Scalar(d) = b else {
            return self.err(col, ParseErrorKind::Syntax("cannot divide by a basis vector".into()));
        };
        let Some(inv) = d.inv() else {
            return self.err(col, ParseErrorKind::MalformedScalar("division by zero".into()));
        };
        Ok(match a {
            Value::Scalar(x) => Value::Scalar(&x * &inv),
            Value::Vector(v) => Value::Vector(vec_scale(&v, &inv)),
        })
    }
}

/// Parses a scalar expression such as `-1/2 + 3/4 i`.
pub fn parse_scalar(src: &str) -> Result<Gr, ParseError> {
    scalar_at(src, 1, 1, &[])
}

pub(crate) fn scalar_at(src: &str, line: usize, col0: usize, labels: &[String]) -> PResult<Gr> {
    match ExprParser::new(src, line, col0, labels)?.parse_all()? {
        Value::Scalar(s) => Ok(s),
        Value::Vector(_) => Err(ParseError::new(
            line,
            col0,
            ParseErrorKind::MalformedScalar("expected a scalar, found a basis combination".into()),
        )),
    }
}

/// Parses a linear combination of `labels`, such as `2 X - (1 + i) Y`.
/// The scalar `0` denotes the zero vector.
pub fn parse_lincomb(src: &str, labels: &[String]) -> Result<Vector, ParseError> {
    lincomb_at(src, 1, 1, labels)
}

pub(crate) fn lincomb_at(src: &str, line: usize, col0: usize, labels: &[String]) -> PResult<Vector> {
    match ExprParser::new(src, line, col0, labels)?.parse_all()? {
        Value::Vector(v) => Ok(v),
        Value::Scalar(s) if s.is_zero() => Ok(vec![Gr::zero(); labels.len()]),
        Value::Scalar(_) => Err(ParseError::new(
            line,
            col0,
            ParseErrorKind::Syntax("expected a combination of basis labels".into()),
        )),
    }
}

/// Coefficient text placed in front of a label, with the sign split off.
fn coefficient_text(c: &Gr) -> (bool, String) {
    let negative = c.re() < &BigRational::zero()
        || (c.re().is_zero() && c.im() < &BigRational::zero());
    let c = if negative { -c } else { c.clone() };
    let text = if c.is_one() {
        String::new()
    } else if c.is_real() || c.re().is_zero() {
        format!("{c} ")
    } else {
        format!("({c}) ")
    };
    (negative, text)
}

/// Formats `Σ v_k names[k]`, e.g. `X' - 1/2 Y + (1 + i) Z`; the zero vector is `0`.
pub fn format_lincomb(names: &[String], v: &[Gr]) -> String {
    if is_zero_vec(v) {
        return "0".to_string();
    }
    let mut out = String::new();
    for (name, c) in names.iter().zip(v).filter(|(_, c)| !c.is_zero()) {
        let (negative, coeff) = coefficient_text(c);
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&coeff);
        out.push_str(name);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn scalar_grammar() {
        assert_eq!(parse_scalar("1/2 + i").unwrap(), Gr::complex(1, 2, 1, 1));
        assert_eq!(parse_scalar("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_scalar("-1 - 3/4 i").unwrap(), Gr::complex(-1, 1, -3, 4));
        assert_eq!(parse_scalar("(1 + i) * (1 - i)").unwrap(), Gr::from_int(2));
        assert_eq!(parse_scalar("i i").unwrap(), Gr::from_int(-1));
        assert_eq!(parse_scalar("--3").unwrap(), Gr::from_int(3));
        assert_eq!(parse_scalar("1/(2i)").unwrap(), Gr::complex(0, 1, -1, 2));
    }

    #[test]
    fn scalar_display_round_trips() {
        for s in ["0", "3/2", "i", "-i", "1/2 i", "1/2 + i", "-1 - 3/4 i", "-7/3 + 2/5 i"] {
            assert_eq!(parse_scalar(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn scalar_errors_carry_columns() {
        let e = parse_scalar("1/0").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedScalar(_)));
        assert_eq!(e.col, 2);
        let e = parse_scalar("1 + $").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("(1").is_err());
        assert!(matches!(
            parse_scalar("W").unwrap_err().kind,
            ParseErrorKind::UndeclaredLabel(_)
        ));
    }

    #[test]
    fn lincombs() {
        let names = labels(&["X'", "Y", "Z"]);
        assert_eq!(
            parse_lincomb("2 X' - (1 + i) Z", &names).unwrap(),
            vec![Gr::from_int(2), Gr::zero(), Gr::complex(-1, 1, -1, 1)]
        );
        assert_eq!(parse_lincomb("0", &names).unwrap(), vec![Gr::zero(); 3]);
        assert_eq!(parse_lincomb("Y/2", &names).unwrap()[1], Gr::ratio(1, 2));
        assert!(parse_lincomb("Y Z", &names).is_err());
        assert!(parse_lincomb("1 + Y", &names).is_err());
        assert!(parse_lincomb("3", &names).is_err());
        let e = parse_lincomb("X' + W", &names).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndeclaredLabel("W".into()));
        assert_eq!(e.col, 6);
    }

    #[test]
    fn format_round_trips() {
        let names = labels(&["A", "B", "C", "D"]);
        let cases = [
            vec![Gr::one(), Gr::from_int(-1), Gr::zero(), Gr::zero()],
            vec![Gr::ratio(-1, 2), Gr::i(), Gr::complex(1, 1, 1, 2), -Gr::i()],
            vec![Gr::zero(), Gr::zero(), Gr::complex(-1, 3, -2, 1), Gr::complex(0, 1, -5, 2)],
            vec![Gr::zero(); 4],
        ];
        for v in cases {
            let text = format_lincomb(&names, &v);
            assert_eq!(parse_lincomb(&text, &names).unwrap(), v, "{text}");
        }
        assert_eq!(
            format_lincomb(&names, &[Gr::one(), Gr::from_int(-1), Gr::ratio(1, 2), Gr::complex(1, 1, 1, 1)]),
            "A - B + 1/2 C + (1 + i) D"
        );
    }

    #[test]
    fn label_rule() {
        assert!(is_label("X'"));
        assert!(is_label("e_1"));
        assert!(!is_label("i"));
        assert!(!is_label("1X"));
        assert!(!is_label("X-Y"));
    }
}
