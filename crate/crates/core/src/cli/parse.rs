//! Polynomial expressions.
//!
//! Grammar, whitespace allowed between tokens:
//!
//! ```text
//! expr     := sign? term (sign term)*
//! sign     := '+' | '-'
//! term     := coeff ('*' monomial)? | monomial
//! coeff    := integer | '[' integer (',' integer)* ']'
//! monomial := 'x' ('^' integer)?
//! ```
//!
//! Integers are reduced into the prime subfield. A bracketed vector lists the
//! residues of an `F_{p^e}` element, constant coordinate first; entries must
//! lie in `[0, p)` and there may be at most `e` of them. Exponents may come in
//! any order and repeated exponents add up.

use std::collections::BTreeMap;

use crate::criterion::DEFAULT_DENSE_CAP;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FqElem};
use crate::poly::Poly;

/// Source text together with the polynomial it denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub poly: Poly,
}

impl PolyExpr {
    pub fn parse(text: &str, field: &FieldSpec) -> Result<Self> {
        Ok(Self {
            source: text.to_string(),
            poly: parse_poly(text, field)?,
        })
    }

    /// The canonical form, which parses back to the same polynomial.
    pub fn canonical(&self) -> String {
        self.poly.to_string()
    }
}

pub fn parse_poly(text: &str, field: &FieldSpec) -> Result<Poly> {
    let mut parser = Parser::new(text, field);
    parser.expr()
}

/// Coefficient list `c0,c1,...,ck`, constant term first. Entries are integers
/// or bracketed residue vectors.
pub fn parse_coeff_list(text: &str, field: &FieldSpec) -> Result<Poly> {
    let mut parser = Parser::new(text, field);
    let mut coeffs = vec![parser.signed_coeff()?];
    while parser.eat(',') {
        coeffs.push(parser.signed_coeff()?);
    }
    parser.expect_end()?;
    Ok(Poly::new(field, coeffs))
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    field: &'a FieldSpec,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, field: &'a FieldSpec) -> Self {
        Self {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            field,
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
        }
    }

    fn integer(&mut self) -> Result<u128> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        self.text[start..self.pos].parse::<u128>().or_else(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }

    fn coeff(&mut self) -> Result<FqElem> {
        if self.eat('[') {
            let start = self.pos;
            let mut residues = Vec::new();
            loop {
                let v = self.integer()?;
                residues.push(u64::try_from(v).unwrap_or(u64::MAX));
                if self.eat(']') {
                    break;
                }
                if !self.eat(',') {
                    return self.error("expected ',' or ']'");
                }
            }
            self.field.from_residues(&residues).map_err(|e| match e {
                Error::CoefficientOutOfField(msg) => {
                    Error::CoefficientOutOfField(format!("at position {start}: {msg}"))
                }
                other => other,
            })
        } else {
            let v = self.integer()?;
            Ok(self.field.from_u64((v % self.field.p() as u128) as u64))
        }
    }

    fn signed_coeff(&mut self) -> Result<FqElem> {
        let negate = self.eat('-');
        let c = self.coeff()?;
        Ok(if negate { self.field.neg(c) } else { c })
    }

    fn monomial(&mut self) -> Result<usize> {
        if !self.eat('x') {
            return self.error("expected 'x'");
        }
        if !self.eat('^') {
            return Ok(1);
        }
        let start = self.pos;
        let e = self.integer()?;
        if e >= DEFAULT_DENSE_CAP as u128 {
            self.pos = start;
            return self.error(format!("exponent {e} is too large"));
        }
        Ok(e as usize)
    }

    fn term(&mut self) -> Result<(usize, FqElem)> {
        match self.peek() {
            Some(b'x') => Ok((self.monomial()?, self.field.one())),
            Some(b'[') | Some(b'0'..=b'9') => {
                let c = self.coeff()?;
                if self.eat('*') {
                    Ok((self.monomial()?, c))
                } else {
                    Ok((0, c))
                }
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let f = self.field;
        let mut terms: BTreeMap<usize, FqElem> = BTreeMap::new();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (exp, mut c) = self.term()?;
            if negate {
                c = f.neg(c);
            }
            let slot = terms.entry(exp).or_insert(FqElem::ZERO);
            *slot = f.add(*slot, c);
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        self.expect_end()?;
        let degree = terms.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![FqElem::ZERO; degree + 1];
        for (exp, c) in terms {
            coeffs[exp] = c;
        }
        Ok(Poly::new(f, coeffs))
    }
}
