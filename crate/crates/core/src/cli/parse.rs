//! Recursive-descent parser for ring elements.
//!
//! ```text
//! element := sign? term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' exponent)?
//! atom    := integer | identifier | 'zeta(' posint ')' | '(' element ')'
//! exponent:= '-'? digits | '(' '-'? digits ')'
//! ```
//!
//! An identifier names a ring variable or a field parameter. `/` divides
//! exactly. Positions in errors are byte offsets into the input.

use num_bigint::BigInt;

use crate::coeff::FieldDescriptor;
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::ring::{exact_divide, format_element, Ring, RingElement, RingExt};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|&(_, c)| c).collect();
            toks.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            toks.push((
                Tok::Ident(bytes[start..i].iter().map(|&(_, c)| c).collect()),
                pos,
            ));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(Error::Syntax {
                position: pos,
                expected: format!("a number, identifier or operator, found `{c}`"),
            });
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("`{c}`")))
        }
    }

    fn syntax(&self, expected: &str) -> Error {
        Error::Syntax {
            position: self.pos(),
            expected: expected.to_string(),
        }
    }

    fn element(&mut self) -> Result<RingElement> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingElement> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.pos();
                self.bump();
                let divisor = self.unary()?;
                if divisor.is_zero() {
                    return Err(Error::DivisionByZero.context(format!("parse (position {pos})")));
                }
                acc = exact_divide(&acc, &divisor)
                    .map_err(|e| e.context(format!("parse (position {pos})")))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RingElement> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let pos = self.pos();
        let Tok::Int(n) = self.bump() else {
            return Err(Error::Syntax {
                position: pos,
                expected: "an integer exponent".into(),
            });
        };
        let n = i64::try_from(n).map_err(|_| Error::Syntax {
            position: pos,
            expected: "an exponent that fits in 64 bits".into(),
        })?;
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<RingElement> {
        let start = self.pos();
        let first = self.at;
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let k = self.exponent()?;
        if k >= 0 {
            let k = u32::try_from(k).map_err(|_| Error::Syntax {
                position: start,
                expected: "a smaller exponent".into(),
            })?;
            return Ok(base.pow(k));
        }
        let inverse = base.unit_inverse().ok_or_else(|| {
            let name = match &self.toks[first].0 {
                Tok::Ident(s)
                    if self
                        .ring
                        .variable_index(s)
                        .is_some_and(|i| base == self.ring.var(i)) =>
                {
                    s.clone()
                }
                _ => format_element(&base),
            };
            Error::ExponentDomain {
                variable: name,
                exponent: k,
                position: start,
            }
        })?;
        Ok(inverse.pow(k.unsigned_abs() as u32))
    }

    fn atom(&mut self) -> Result<RingElement> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(self
                .ring
                .constant(self.ring.field().from_rational(&n.into()))),
            Tok::Sym('(') => {
                let e = self.element()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) if name == "zeta" && *self.peek() == Tok::Sym('(') => {
                self.bump();
                let order_pos = self.pos();
                let Tok::Int(m) = self.bump() else {
                    return Err(Error::Syntax {
                        position: order_pos,
                        expected: "a positive root-of-unity order".into(),
                    });
                };
                self.expect(')')?;
                let m = u64::try_from(m)
                    .ok()
                    .filter(|&m| m > 0)
                    .ok_or(Error::Syntax {
                        position: order_pos,
                        expected: "a positive root-of-unity order".into(),
                    })?;
                let z = self
                    .ring
                    .field()
                    .zeta(m, 1)
                    .ok_or_else(|| Error::UnknownSymbol {
                        symbol: format!("zeta({m})"),
                        position: pos,
                    })?;
                Ok(self.ring.constant(z))
            }
            Tok::Ident(name) => self.symbol(&name, pos),
            _ => Err(Error::Syntax {
                position: pos,
                expected: "a number, identifier or `(`".into(),
            }),
        }
    }

    fn symbol(&self, name: &str, pos: usize) -> Result<RingElement> {
        if let Some(i) = self.ring.variable_index(name) {
            return Ok(self.ring.var(i));
        }
        let field: &FieldDescriptor = self.ring.field();
        if let Some(c) = field.parameter_index(name).and_then(|i| field.param(i)) {
            return Ok(self.ring.constant(c));
        }
        Err(Error::UnknownSymbol {
            symbol: name.to_string(),
            position: pos,
        })
    }
}

/// Parses `text` as an element of `ring`.
pub fn parse_element(text: &str, ring: &Ring) -> Result<RingElement> {
    let lexer = lex(text)?;
    let mut p = Parser {
        toks: lexer.toks,
        at: 0,
        ring,
    };
    if *p.peek() == Tok::End {
        return Err(p.syntax("an element"));
    }
    let e = p.element()?;
    if *p.peek() != Tok::End {
        return Err(p.syntax("an operator or end of input"));
    }
    Ok(e)
}

/// Builds σ from entries `variable -> coefficient * monomial`, one per
/// ring variable in any order.
pub fn parse_sigma(entries: &[String], ring: &Ring) -> Result<Endomorphism> {
    let mut images: Vec<Option<RingElement>> = vec![None; ring.nvars()];
    for entry in entries {
        let (lhs, rhs) = entry.split_once("->").ok_or_else(|| {
            Error::Config(format!(
                "sigma entry `{entry}` is not of the form `x -> c*m`"
            ))
        })?;
        let name = lhs.trim();
        let i = ring.variable_index(name).ok_or_else(|| {
            Error::Config(format!(
                "sigma entry `{entry}` names unknown variable `{name}`"
            ))
        })?;
        if images[i].is_some() {
            return Err(Error::Config(format!("sigma gives `{name}` twice")));
        }
        let image =
            parse_element(rhs, ring).map_err(|e| e.context(format!("sigma entry `{entry}`")))?;
        images[i] = Some(image);
    }
    let images: Vec<RingElement> = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            img.ok_or_else(|| {
                Error::Config(format!("sigma has no image for `{}`", ring.variables()[i]))
            })
        })
        .collect::<Result<_>>()?;
    Endomorphism::from_images(ring, &images)
}
