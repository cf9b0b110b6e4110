//! Text syntax for polynomials.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*'? factor)*
//! factor   := rational | var ('^' uint)? | '(' expr ')' ('^' uint)?
//! rational := int ('/' uint)?
//! var      := letter digit*
//! ```
//!
//! Juxtaposed letters are separate variables, so `xy` reads as `x*y`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ParseError, PolyError};
use crate::poly::{Exponents, Monomial, Polynomial, Rational, VarId};

/// A polynomial kept as the formal sum produced by distributing every
/// product, without collecting like terms.
///
/// `x*(y + z) + x*y` has three formal terms but two canonical ones.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExpandedForm {
    terms: Vec<Monomial>,
}

impl ExpandedForm {
    pub fn from_terms(terms: Vec<Monomial>) -> Self {
        ExpandedForm { terms }
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        ExpandedForm {
            terms: p.terms().to_vec(),
        }
    }

    /// Distributes a product of polynomials formally.
    pub fn product(factors: &[Polynomial]) -> Self {
        let mut acc = ExpandedForm::one();
        for f in factors {
            acc = acc.mul(&ExpandedForm::from_polynomial(f));
        }
        acc
    }

    fn one() -> Self {
        ExpandedForm {
            terms: alloc::vec![Monomial::constant(Rational::one()).expect("nonzero")],
        }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn concat(mut self, other: ExpandedForm) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn mul(&self, other: &ExpandedForm) -> ExpandedForm {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.mul(b));
            }
        }
        ExpandedForm { terms }
    }

    fn neg(self) -> Self {
        ExpandedForm {
            terms: self.terms.iter().map(Monomial::neg).collect(),
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().cloned())
    }
}

/// Number of monomials in the formal expansion. Fails on the zero polynomial.
pub fn count_expanded_monomials(form: &ExpandedForm) -> Result<usize, PolyError> {
    if form.is_empty() || form.to_polynomial().is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(form.len())
}

pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    Ok(parse_expanded(input)?.to_polynomial())
}

pub fn parse_expanded(input: &str) -> Result<ExpandedForm, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: input.len(),
    };
    let form = parser.expr()?;
    if let Some(t) = parser.peek() {
        return Err(syntax(t.offset, "unexpected token"));
    }
    Ok(form)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn syntax(offset: usize, message: &str) -> ParseError {
    ParseError::Syntax {
        offset,
        message: String::from(message),
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = input[start..i]
                    .parse::<BigInt>()
                    .map_err(|_| syntax(start, "bad integer"))?;
                out.push(Token {
                    tok: Tok::Int(n),
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Var(String::from(&input[start..i])),
                    offset: start,
                });
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let found = input[start..].chars().next().unwrap_or('?');
                return Err(ParseError::UnknownToken {
                    offset: start,
                    found,
                });
            }
        };
        out.push(Token { tok, offset: start });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|t| &t.tok) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ExpandedForm, ParseError> {
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.concat(self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.concat(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ExpandedForm, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.factor()?);
                continue;
            }
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ExpandedForm, ParseError> {
        let offset = self.offset();
        let Some(token) = self.peek().cloned() else {
            return Err(syntax(offset, "unexpected end of input"));
        };
        self.pos += 1;
        match token.tok {
            Tok::Int(n) => {
                let mut value = Rational::from_integer(n);
                if self.eat(&Tok::Slash) {
                    let at = self.offset();
                    match self.peek().map(|t| t.tok.clone()) {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= Rational::from_integer(d);
                        }
                        Some(Tok::Int(_)) => return Err(syntax(at, "zero denominator")),
                        _ => return Err(syntax(at, "expected denominator")),
                    }
                }
                Ok(match Monomial::constant(value) {
                    Ok(m) => ExpandedForm::from_terms(alloc::vec![m]),
                    Err(_) => ExpandedForm::default(),
                })
            }
            Tok::Var(name) => {
                let v = VarId::new(&name).map_err(|_| syntax(offset, "bad variable"))?;
                let e = self.exponent()?;
                let m = Monomial::new(Rational::one(), Exponents::var(v, e)).expect("nonzero");
                Ok(ExpandedForm::from_terms(alloc::vec![m]))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                let e = self.exponent()?;
                let mut acc = ExpandedForm::one();
                for _ in 0..e {
                    acc = acc.mul(&inner);
                }
                Ok(acc)
            }
            _ => Err(syntax(offset, "expected a number, variable or '('")),
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let at = self.offset();
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Minus) => Err(ParseError::NegativeExponent { offset: at }),
            Some(Tok::Int(n)) => {
                self.pos += 1;
                u32::try_from(n).map_err(|_| syntax(at, "exponent too large"))
            }
            _ => Err(syntax(at, "expected exponent")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn implicit_products() {
        assert_eq!(
            parse_polynomial("xy + 2x^2y").unwrap(),
            parse_polynomial("x*y + 2*x^2*y").unwrap()
        );
        assert_eq!(parse_polynomial("x2").unwrap().to_string(), "x2");
        assert_eq!(parse_polynomial("1/2x").unwrap().to_string(), "1/2*x");
        assert_eq!(
            parse_polynomial("(x+1)^2").unwrap().to_string(),
            "x^2 + 2*x + 1"
        );
        assert_eq!(parse_polynomial("-zx^2").unwrap().to_string(), "-x^2*z");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_polynomial("x^-2"),
            Err(ParseError::NegativeExponent { offset: 2 })
        );
        assert_eq!(
            parse_polynomial("x + $"),
            Err(ParseError::UnknownToken {
                offset: 4,
                found: '$'
            })
        );
        assert_eq!(parse_polynomial("x +").unwrap_err().offset(), 3);
        assert_eq!(parse_polynomial("(x").unwrap_err().offset(), 2);
        assert_eq!(parse_polynomial("x)").unwrap_err().offset(), 1);
        assert_eq!(parse_polynomial("1/0").unwrap_err().offset(), 2);
    }

    #[test]
    fn formal_counts() {
        let form = parse_expanded("z*y + (x*y + z^2)*(x*y^2 + x^2*z + y*z^2)").unwrap();
        assert_eq!(count_expanded_monomials(&form), Ok(7));
        assert_eq!(form.to_polynomial().num_terms(), 6);
        let two = parse_expanded("(x+y)*(z+w) + (x-y)*(z-w+x)").unwrap();
        assert_eq!(count_expanded_monomials(&two), Ok(10));
        let zero = parse_expanded("x - x").unwrap();
        assert_eq!(
            count_expanded_monomials(&zero),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(
            count_expanded_monomials(&parse_expanded("0").unwrap()),
            Err(PolyError::ZeroPolynomial)
        );
    }
}
