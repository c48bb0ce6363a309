//! Reading and printing polynomials in the variable `s`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! vector := '['? expr (',' expr)* ']'?
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 's' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants. Juxtaposition such as
//! `2s` is rejected; write `2*s`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::polyvec::PolyVec;

const MAX_EXPONENT: u32 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigUint),
    Var,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    /// Division with the offset of the `/` for error reporting.
    Div(Box<PolyExpr>, Box<PolyExpr>, usize),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    pub fn eval<F: Field>(&self, field: &F) -> Result<Poly<F::Elem>> {
        Ok(match self {
            PolyExpr::Int(v) => Poly::constant(field.from_bigint(&v.clone().into())),
            PolyExpr::Var => Poly::s(field),
            PolyExpr::Neg(e) => e.eval(field)?.neg(field),
            PolyExpr::Add(a, b) => a.eval(field)?.add(&b.eval(field)?, field),
            PolyExpr::Sub(a, b) => a.eval(field)?.sub(&b.eval(field)?, field),
            PolyExpr::Mul(a, b) => a.eval(field)?.mul(&b.eval(field)?, field),
            PolyExpr::Div(a, b, pos) => {
                let divisor = b.eval(field)?;
                let c = match divisor.degree() {
                    Some(0) => field.inv(&divisor.coeffs()[0]),
                    _ => None,
                };
                let Some(inv) = c else {
                    return Err(Error::Parse {
                        position: *pos,
                        message: "division is only allowed by a nonzero constant".into(),
                    });
                };
                a.eval(field)?.scale(&inv, field)
            }
            PolyExpr::Pow(base, k) => {
                let b = base.eval(field)?;
                let mut acc = Poly::one(field);
                for _ in 0..*k {
                    acc = acc.mul(&b, field);
                }
                acc
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigUint),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Ident(name), pos));
        } else if "+-*/^(),[]".contains(c) {
            out.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(Error::Parse {
                position: pos,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |&(_, p)| p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            if self.eat('*') {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = PolyExpr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr> {
        if self.eat('-') {
            Ok(PolyExpr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<PolyExpr> {
        let base = self.atom()?;
        let expr = if self.eat('^') {
            match self.peek() {
                Some(Tok::Int(k)) => {
                    let k = match u32::try_from(k.clone()) {
                        Ok(k) if k <= MAX_EXPONENT => k,
                        _ => return self.err(format!("exponent exceeds {MAX_EXPONENT}")),
                    };
                    self.i += 1;
                    PolyExpr::Pow(Box::new(base), k)
                }
                _ => return self.err("exponent must be a nonnegative integer"),
            }
        } else {
            base
        };
        match self.peek() {
            Some(Tok::Int(_) | Tok::Ident(_) | Tok::Sym('(')) => {
                self.err("implicit multiplication is not supported; use `*`")
            }
            _ => Ok(expr),
        }
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.i += 1;
                Ok(PolyExpr::Int(v))
            }
            Some(Tok::Ident(name)) if name == "s" => {
                self.i += 1;
                Ok(PolyExpr::Var)
            }
            Some(Tok::Ident(name)) => self.err(format!("unknown variable `{name}`; only `s` is allowed")),
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Sym(',')) | None => self.err("empty component"),
            Some(Tok::Sym(c)) => self.err(format!("unexpected `{c}`")),
        }
    }
}

/// Parses a single polynomial expression.
pub fn parse_expr(text: &str) -> Result<PolyExpr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        i: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn parse_poly<F: Field>(field: &F, text: &str) -> Result<Poly<F::Elem>> {
    parse_expr(text)?.eval(field)
}

/// Parses a comma-separated list of polynomials, optionally enclosed in
/// brackets, into a row vector.
pub fn parse_vector<F: Field>(field: &F, text: &str) -> Result<PolyVec<F::Elem>> {
    let mut p = Parser {
        toks: tokenize(text)?,
        i: 0,
        end: text.len(),
    };
    let bracketed = p.eat('[');
    let mut entries = Vec::new();
    loop {
        entries.push(p.expr()?.eval(field)?);
        if !p.eat(',') {
            break;
        }
    }
    if bracketed && !p.eat(']') {
        return p.err("expected `]`");
    }
    if p.i < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    PolyVec::row(entries)
}

/// Prints `p` with descending powers, e.g. `s^3+1`, `-1/2*s^2+s`, `0`.
pub fn format_poly<F: Field>(field: &F, p: &Poly<F::Elem>) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if crate::field::Scalar::is_zero(c) {
            continue;
        }
        let mut text = field.format(c);
        let negative = text.starts_with('-');
        if negative {
            text.remove(0);
        }
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let var = match k {
            0 => String::new(),
            1 => "s".to_string(),
            _ => format!("s^{k}"),
        };
        match (text.as_str(), var.is_empty()) {
            (_, true) => out.push_str(&text),
            ("1", false) => out.push_str(&var),
            (_, false) => {
                out.push_str(&text);
                out.push('*');
                out.push_str(&var);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_vector<F: Field>(field: &F, v: &PolyVec<F::Elem>) -> String {
    let parts: Vec<String> = v.entries().iter().map(|p| format_poly(field, p)).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Residue};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn parse_err(text: &str) -> (usize, String) {
        match parse_vector(&Rationals, text) {
            Err(Error::Parse { position, message }) => (position, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn running_example_vector() {
        let v = parse_vector(&Rationals, "2+s+s^4, 3+s^2+s^4, 6+2*s^3+s^4").unwrap();
        let expect =
            PolyVec::row_from_i64s(&Rationals, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]]).unwrap();
        assert_eq!(v, expect);
        assert_eq!(parse_vector(&Rationals, "[2+s+s^4,3+s^2+s^4,6+2*s^3+s^4]").unwrap(), expect);
    }

    #[test]
    fn grammar_cases() {
        let v = parse_vector(&Rationals, "0").unwrap();
        assert_eq!(v.len(), 1);
        assert!(v.is_zero());
        let v = parse_vector(&Rationals, "1/2 + s, -s").unwrap();
        assert_eq!(v.entry(0).coeffs()[0], BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_poly(&Rationals, "(s+1)^2 - 2*s").unwrap(), Poly::from_i64s(&Rationals, &[1, 0, 1]));
        assert_eq!(parse_poly(&Rationals, "-s^2").unwrap(), Poly::from_i64s(&Rationals, &[0, 0, -1]));
        assert_eq!(parse_poly(&Rationals, "(2*s+4)/2").unwrap(), Poly::from_i64s(&Rationals, &[2, 1]));
        let gf = PrimeField::new(7).unwrap();
        assert_eq!(parse_poly(&gf, "1/2").unwrap(), Poly::constant(Residue(4)));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_err("2s").0, 1);
        assert!(parse_err("2s").1.contains("implicit"));
        assert!(parse_err("x+1").1.contains("unknown variable"));
        assert_eq!(parse_err("s, , 1"), (3, "empty component".into()));
        assert!(parse_err("s^-1").1.contains("nonnegative"));
        assert!(parse_err("1/s").1.contains("constant"));
        assert!(parse_err("1/0").1.contains("constant"));
        assert!(parse_err("(s+1").1.contains("`)`"));
        assert!(parse_err("s $ 1").1.contains("unexpected character"));
        assert!(parse_err("").1.contains("empty"));
    }

    #[test]
    fn formatting() {
        let f = |c: &[i64]| format_poly(&Rationals, &Poly::from_i64s(&Rationals, c));
        assert_eq!(f(&[1, 0, 0, 1]), "s^3+1");
        assert_eq!(f(&[0, 0, 3]), "3*s^2");
        assert_eq!(f(&[9, -12, -1]), "-s^2-12*s+9");
        assert_eq!(f(&[]), "0");
        let half = Poly::new(vec![Rationals.zero(), BigRational::new(1.into(), 2.into())]);
        assert_eq!(format_poly(&Rationals, &half), "1/2*s");
        let w = PolyVec::row_from_i64s(&Rationals, &[&[0, 1], &[0, 0, 1], &[1, 0, 0, 1]]).unwrap();
        assert_eq!(format_vector(&Rationals, &w), "[s, s^2, s^3+1]");
    }

    fn rational() -> impl Strategy<Value = BigRational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(
            entries in prop::collection::vec(prop::collection::vec(rational(), 0..6), 1..5)
        ) {
            let v = PolyVec::row(entries.into_iter().map(Poly::new).collect()).unwrap();
            let text = format_vector(&Rationals, &v);
            prop_assert_eq!(parse_vector(&Rationals, &text).unwrap(), v);
        }

        #[test]
        fn print_then_parse_mod_p(
            entries in prop::collection::vec(prop::collection::vec(0u64..101, 0..6), 1..5)
        ) {
            let gf = PrimeField::new(101).unwrap();
            let v = PolyVec::row(entries.into_iter().map(|c| Poly::new(c.into_iter().map(Residue).collect())).collect()).unwrap();
            prop_assert_eq!(parse_vector(&gf, &format_vector(&gf, &v)).unwrap(), v);
        }
    }
}
