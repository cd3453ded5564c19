//! Polynomial text syntax.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`) is rejected, and so are decimal literals.

use num_bigint::BigInt;

use crate::polycore::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    NonRational(String),
}

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}", self.describe())]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn describe(&self) -> String {
        match &self.kind {
            ParseErrorKind::Syntax(m) => format!("syntax error at position {}: {}", self.pos, m),
            ParseErrorKind::UnknownVariable(v) => {
                format!("unknown variable `{}` at position {}", v, self.pos)
            }
            ParseErrorKind::NonRational(t) => {
                format!("non-rational coefficient `{}` at position {}", t, self.pos)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        pos,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'.') {
                    j += 1;
                }
                return Err(ParseError {
                    pos: start,
                    kind: ParseErrorKind::NonRational(text[start..j].to_string()),
                });
            }
            out.push((Tok::Int(text[start..i].parse().unwrap()), start));
        } else if c == '.' {
            return Err(ParseError {
                pos: i,
                kind: ParseErrorKind::NonRational(".".into()),
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(syntax(i, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Identifiers occurring in `text`, sorted and deduplicated.
pub fn infer_variables(text: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = lex(text)?
        .into_iter()
        .filter_map(|(t, _)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    Ok(names)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else {
                match self.peek() {
                    Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                        return Err(syntax(self.here(), "implicit multiplication is not allowed"));
                    }
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| syntax(at, "exponent too large"))?;
                    if self.peek() == Some(&Tok::Op('^')) {
                        return Err(syntax(self.here(), "chained exponents are ambiguous; use parentheses"));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(syntax(at, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if self.eat('/') {
                    let at2 = self.here();
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            den = d;
                        }
                        Some(Tok::Int(_)) => return Err(syntax(at2, "zero denominator")),
                        _ => return Err(syntax(at2, "`/` is only allowed inside a rational literal p/q")),
                    }
                }
                Ok(Polynomial::constant(self.n(), Rational::from_bigints(num, den)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::monomial(Monomial::var(self.n(), i))),
                    None => Err(ParseError {
                        pos: at,
                        kind: ParseErrorKind::UnknownVariable(name),
                    }),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.here(), "expected `)`"));
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(syntax(at, format!("unexpected `{c}`"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses `text` as a polynomial in the given ordered variables.
pub fn parse_polynomial(text: &str, variables: &[String]) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    if variables.is_empty() {
        return Err(syntax(0, "at least one variable is required"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars: variables,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn reads_simple_polynomial() {
        let p = parse_polynomial("x^2*y + 3*y^3", &names(&["x", "y"])).unwrap();
        let want = Polynomial::from_terms(
            2,
            vec![(vec![2, 1], Rational::one()), (vec![0, 3], Rational::from(3))],
        );
        assert_eq!(p, want);
    }

    #[test]
    fn reads_example_with_parentheses() {
        let p = parse_polynomial("x^9+y^10+z^11+(x+y)*x^3*y^3*z^3", &names(&["x", "y", "z"])).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.coeff(&Monomial::new(vec![4, 3, 3])), Rational::one());
        assert_eq!(p.coeff(&Monomial::new(vec![3, 4, 3])), Rational::one());
    }

    #[test]
    fn cancellation_gives_zero() {
        assert!(parse_polynomial("x - x", &names(&["x"])).unwrap().is_zero());
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let p = parse_polynomial("-3/6*x^2 + -(x)", &names(&["x"])).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![2])), Rational::new(-1, 2));
        assert_eq!(p.coeff(&Monomial::new(vec![1])), Rational::from(-1));
    }

    #[test]
    fn errors_carry_positions() {
        let v = names(&["x", "y"]);
        let e = parse_polynomial("x + 2x", &v).unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_polynomial("x + w", &v).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        assert_eq!(e.pos, 4);
        let e = parse_polynomial("1.5*x", &v).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NonRational(_)));
        assert!(parse_polynomial("(x+y", &v).is_err());
        assert!(parse_polynomial("x^", &v).is_err());
        assert!(parse_polynomial("x/y", &v).is_err());
    }

    #[test]
    fn infers_sorted_identifiers() {
        assert_eq!(infer_variables("z^2 + u*v + u").unwrap(), names(&["u", "v", "z"]));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -20i64..20, 1i64..6), 0..6).prop_map(|ts| {
            Polynomial::from_terms(
                3,
                ts.into_iter()
                    .map(|((a, b, c), p, q)| (vec![a, b, c], Rational::new(p, q))),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let v = names(&["x", "y", "z"]);
            let s = p.to_string_with(&v);
            let back = parse_polynomial(&s, &v).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string_with(&v), s);
        }
    }
}
