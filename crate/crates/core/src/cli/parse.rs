//! Polynomial expressions: a signed sum of terms, each term a product of an
//! optional coefficient (`3`, `-3/2`) and powers of variables (`x^2*y`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::kernel::{Field, Monomial, Poly, PolyRing, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the input, 0-based.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.pos + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Lexer {
    chars: Vec<(usize, char)>,
    at: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        Lexer { chars: src.chars().enumerate().collect(), at: 0 }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&mut self) -> usize {
        self.skip_ws();
        self.chars.get(self.at).map_or(self.chars.len(), |&(p, _)| p)
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn err<T>(&mut self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), message: message.into() })
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.at;
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return None;
        }
        let s: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.at;
        let first = self.chars.get(self.at).map(|&(_, c)| c)?;
        if !(first.is_alphabetic() || first == '_') {
            return None;
        }
        while self.chars.get(self.at).is_some_and(|&(_, c)| c.is_alphanumeric() || c == '_') {
            self.at += 1;
        }
        Some(self.chars[start..self.at].iter().map(|&(_, c)| c).collect())
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial<F: Field>(text: &str, ring: &PolyRing<F>) -> Result<Poly<F::Elem>, ParseError> {
    let mut lx = Lexer::new(text);
    if lx.peek().is_none() {
        return lx.err("empty polynomial");
    }
    let mut acc = Poly::zero();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            Some('+') if !first => lx.bump(),
            Some('-') => {
                lx.bump();
                negative = true;
            }
            Some('+') => lx.bump(),
            None if first => return lx.err("empty polynomial"),
            _ if first => {}
            Some(c) => return lx.err(format!("expected '+' or '-', found '{c}'")),
            None => break,
        }
        let (coeff, mono) = parse_term(&mut lx, ring)?;
        let mut c = coeff;
        if negative {
            c = c.neg();
        }
        if !c.is_zero() {
            acc = acc.add(&Poly::monomial(c, mono));
        }
        first = false;
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}

fn parse_term<F: Field>(lx: &mut Lexer, ring: &PolyRing<F>) -> Result<(F::Elem, Monomial), ParseError> {
    let field = ring.field();
    let mut coeff = field.one();
    let mut exps = vec![0u32; ring.nvars()];
    let mut expect_factor = true;
    while expect_factor {
        let start = lx.pos();
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = lx.digits().expect("digit seen");
                let mut den = BigInt::one();
                if lx.peek() == Some('/') {
                    lx.bump();
                    let at = lx.pos();
                    den = match lx.digits() {
                        Some(d) => d,
                        None => return Err(ParseError { pos: at, message: "expected a denominator after '/'".into() }),
                    };
                    if den.is_zero() {
                        return Err(ParseError { pos: at, message: "division by zero".into() });
                    }
                }
                let Some(v) = field.from_ratio(&num, &den) else {
                    return Err(ParseError {
                        pos: start,
                        message: format!("division by zero in {}", field.describe()),
                    });
                };
                coeff = coeff.mul(&v);
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = lx.ident().expect("identifier seen");
                let Some(k) = ring.vars().iter().position(|v| *v == name) else {
                    return Err(ParseError { pos: start, message: format!("unknown variable '{name}'") });
                };
                let mut e = 1u32;
                if lx.peek() == Some('^') {
                    lx.bump();
                    let at = lx.pos();
                    e = match lx.digits().and_then(|d| u32::try_from(d).ok()) {
                        Some(v) if v > 0 => v,
                        _ => return Err(ParseError { pos: at, message: "malformed exponent: expected a positive integer".into() }),
                    };
                }
                exps[k] = exps[k]
                    .checked_add(e)
                    .ok_or(ParseError { pos: start, message: "exponent overflow".into() })?;
            }
            Some(c) => return lx.err(format!("unexpected '{c}'")),
            None => return lx.err("unexpected end of input"),
        }
        expect_factor = lx.peek() == Some('*');
        if expect_factor {
            lx.bump();
        }
    }
    Ok((coeff, Monomial::from_exponents(&exps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn simple_terms() {
        let r = ring();
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!(parse_polynomial("x^2", &r).unwrap(), x.mul(&x));
        let p = parse_polynomial("-3/2*x*y + y^2", &r).unwrap();
        let c = BigRational::new((-3).into(), 2.into());
        assert_eq!(p, x.mul(&y).scale(&c).add(&y.mul(&y)));
        assert_eq!(parse_polynomial("  x *y-y * x ", &r).unwrap(), Poly::zero());
        assert_eq!(parse_polynomial("3", &r).unwrap(), Poly::constant(BigRational::from_integer(3.into()), 2));
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        let e = parse_polynomial("x + w", &r).unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(e.message.contains("'w'"));
        assert!(e.to_string().starts_with("column 5"));
        assert!(parse_polynomial("x^", &r).unwrap_err().message.contains("exponent"));
        assert!(parse_polynomial("x^0", &r).unwrap_err().message.contains("exponent"));
        assert!(parse_polynomial("1/0*x", &r).unwrap_err().message.contains("division by zero"));
        assert!(parse_polynomial("x y", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
        assert!(parse_polynomial("x +", &r).is_err());
    }

    #[test]
    fn prime_field_denominators() {
        let r = PolyRing::new(PrimeField::new(5).unwrap(), vec!["x".into()]).unwrap();
        let p = parse_polynomial("1/2*x", &r).unwrap();
        assert_eq!(r.fmt_poly(&p), "3*x");
        assert!(parse_polynomial("1/5*x", &r).unwrap_err().message.contains("division by zero"));
    }

    #[test]
    fn display_round_trip() {
        let r = ring();
        for s in ["x^2 + 2*x*y + y^2", "-3/2*x*y + y^2", "x - 3*y", "0"] {
            let p = parse_polynomial(s, &r).unwrap();
            assert_eq!(r.fmt_poly(&p), s);
        }
    }
}
