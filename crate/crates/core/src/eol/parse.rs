//! Concrete syntax for event-order formulae.
//!
//! Operators: `.` ordered conjunction, `.< g .>` between-guard, `.]` guard
//! until, `.[` guard after, `.^w` the omega split, `!` negation, `&`/`|`
//! boolean connectives, `T` the trivially satisfied formula. Precedence,
//! loosest first: `.^w`, then `.]`/`.[`, then `|`, then `&`, then the
//! `.`/`.<` chain (right-associative), then `!`. `T` and event names are
//! atoms; names follow `[A-Za-z0-9_]+` with `T` reserved.
//!
//! Input is parsed shape-first and then checked against the stratification:
//! negation only inside simple formulae, between-guards simple, guard
//! operands simple, omega only at the top with an interval right-hand side.

use crate::eol::ast::{EolFormula, GComplexEol, IComplexEol, InfiniteEol, SimpleEol};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Top,
    Not,
    And,
    Or,
    Dot,
    BetweenOpen,
    BetweenClose,
    GuardUntil,
    GuardAfter,
    Omega,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '!' => {
                out.push((Tok::Not, i));
                i += 1;
            }
            '&' => {
                out.push((Tok::And, i));
                i += 1;
            }
            '|' => {
                out.push((Tok::Or, i));
                i += 1;
            }
            '.' => {
                let (tok, width) = match bytes.get(i + 1) {
                    Some(b'<') => (Tok::BetweenOpen, 2),
                    Some(b'>') => (Tok::BetweenClose, 2),
                    Some(b']') => (Tok::GuardUntil, 2),
                    Some(b'[') => (Tok::GuardAfter, 2),
                    Some(b'^') => {
                        if bytes.get(i + 2) == Some(&b'w') {
                            (Tok::Omega, 3)
                        } else {
                            return Err(Error::FormulaSyntax {
                                pos: i,
                                message: "expected `.^w`".into(),
                            });
                        }
                    }
                    _ => (Tok::Dot, 1),
                };
                out.push((tok, i));
                i += width;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = if word == "T" {
                    Tok::Top
                } else {
                    Tok::Ident(word.to_string())
                };
                out.push((tok, start));
            }
            _ => {
                return Err(Error::FormulaSyntax {
                    pos: i,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

/// Shape tree before stratification.
#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Top,
    Event(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Ordered(Box<Expr>, Box<Expr>),
    Between(Box<Expr>, Box<Expr>, Box<Expr>),
    GuardUntil(Box<Expr>, Box<Expr>),
    GuardAfter(Box<Expr>, Box<Expr>),
    Omega(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn formula(&mut self) -> Result<Expr, Error> {
        let head = self.guards()?;
        if self.peek() == Some(&Tok::Omega) {
            self.bump();
            let cycle = self.guards()?;
            if self.peek() == Some(&Tok::Omega) {
                return Err(Error::FormulaSyntax {
                    pos: self.here(),
                    message: "chained `.^w`".into(),
                });
            }
            Ok(Expr::Omega(Box::new(head), Box::new(cycle)))
        } else {
            Ok(head)
        }
    }

    fn guards(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.or()?;
        loop {
            match self.peek() {
                Some(Tok::GuardUntil) => {
                    self.bump();
                    let body = self.guards()?;
                    lhs = Expr::GuardUntil(Box::new(lhs), Box::new(body));
                    return Ok(lhs);
                }
                Some(Tok::GuardAfter) => {
                    self.bump();
                    let guard = self.or()?;
                    lhs = Expr::GuardAfter(Box::new(lhs), Box::new(guard));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn or(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            let rhs = self.and()?;
            lhs = Expr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.chain()?;
        while self.peek() == Some(&Tok::And) {
            self.bump();
            let rhs = self.chain()?;
            lhs = Expr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn chain(&mut self) -> Result<Expr, Error> {
        let lhs = self.unary()?;
        match self.peek() {
            Some(Tok::Dot) => {
                self.bump();
                let rhs = self.chain()?;
                Ok(Expr::Ordered(Box::new(lhs), Box::new(rhs)))
            }
            Some(Tok::BetweenOpen) => {
                self.bump();
                let guard = self.or()?;
                if self.peek() != Some(&Tok::BetweenClose) {
                    return Err(Error::FormulaSyntax {
                        pos: self.here(),
                        message: "expected `.>`".into(),
                    });
                }
                self.bump();
                let rhs = self.chain()?;
                Ok(Expr::Between(Box::new(lhs), Box::new(guard), Box::new(rhs)))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Expr, Error> {
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Expr, Error> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Top) => Ok(Expr::Top),
            Some(Tok::Ident(name)) => Ok(Expr::Event(name)),
            Some(Tok::LParen) => {
                let inner = self.formula()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::FormulaSyntax {
                        pos: self.here(),
                        message: "expected `)`".into(),
                    });
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(Error::FormulaSyntax {
                pos,
                message: "expected an event, `T`, `!`, or `(`".into(),
            }),
        }
    }
}

fn to_simple(e: &Expr) -> Result<SimpleEol, Error> {
    match e {
        Expr::Top => Ok(SimpleEol::Top),
        Expr::Event(n) => Ok(SimpleEol::Event(n.clone())),
        Expr::Not(a) => Ok(SimpleEol::Not(Box::new(to_simple(a)?))),
        Expr::And(a, b) => Ok(SimpleEol::And(
            Box::new(to_simple(a)?),
            Box::new(to_simple(b)?),
        )),
        Expr::Or(a, b) => Ok(SimpleEol::Or(
            Box::new(to_simple(a)?),
            Box::new(to_simple(b)?),
        )),
        _ => Err(Error::Stratification("not a simple formula".into())),
    }
}

fn to_icomplex(e: &Expr) -> Result<IComplexEol, Error> {
    // Prefer the simple layer when the subtree fits it.
    if let Ok(s) = to_simple(e) {
        return Ok(IComplexEol::Simple(s));
    }
    match e {
        Expr::Ordered(a, b) => Ok(IComplexEol::Ordered(
            Box::new(to_icomplex(a)?),
            Box::new(to_icomplex(b)?),
        )),
        Expr::Between(a, g, b) => {
            let guard = to_simple(g).map_err(|_| {
                Error::Stratification("the between-guard must be a simple formula".into())
            })?;
            Ok(IComplexEol::Between {
                first: Box::new(to_icomplex(a)?),
                guard,
                second: Box::new(to_icomplex(b)?),
            })
        }
        Expr::And(a, b) => Ok(IComplexEol::And(
            Box::new(to_icomplex(a)?),
            Box::new(to_icomplex(b)?),
        )),
        Expr::Or(a, b) => Ok(IComplexEol::Or(
            Box::new(to_icomplex(a)?),
            Box::new(to_icomplex(b)?),
        )),
        Expr::Not(_) => Err(Error::Stratification(
            "negation applies only to simple formulae".into(),
        )),
        Expr::GuardUntil(_, _) | Expr::GuardAfter(_, _) => Err(Error::Stratification(
            "`.]`/`.[` cannot occur inside an interval formula".into(),
        )),
        Expr::Omega(_, _) => Err(Error::Stratification(
            "`.^w` may appear only at the top of a formula".into(),
        )),
        Expr::Top | Expr::Event(_) => unreachable!("covered by to_simple"),
    }
}

fn to_gcomplex(e: &Expr) -> Result<GComplexEol, Error> {
    match e {
        Expr::GuardUntil(g, body) => {
            let guard = to_simple(g).map_err(|_| {
                Error::Stratification("the `.]` guard must be a simple formula".into())
            })?;
            Ok(GComplexEol::GuardUntil {
                guard,
                body: Box::new(to_gcomplex(body)?),
            })
        }
        Expr::GuardAfter(body, g) => {
            let guard = to_simple(g).map_err(|_| {
                Error::Stratification("the `.[` guard must be a simple formula".into())
            })?;
            Ok(GComplexEol::GuardAfter {
                body: Box::new(to_gcomplex(body)?),
                guard,
            })
        }
        Expr::Omega(_, _) => Err(Error::Stratification(
            "`.^w` may appear only at the top of a formula".into(),
        )),
        other => Ok(GComplexEol::Interval(to_icomplex(other)?)),
    }
}

/// Parses an event-order formula, enforcing stratification.
pub fn parse_eol(text: &str) -> Result<EolFormula, Error> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let expr = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(Error::FormulaSyntax {
            pos: p.here(),
            message: "trailing input after formula".into(),
        });
    }
    match expr {
        Expr::Omega(head, cycle) => {
            let head = to_gcomplex(&head)?;
            let cycle = to_icomplex(&cycle).map_err(|e| match e {
                Error::Stratification(_) => Error::Stratification(
                    "the right-hand side of `.^w` must be an interval formula".into(),
                ),
                other => other,
            })?;
            Ok(EolFormula::Infinite(InfiniteEol::new(head, cycle)))
        }
        other => Ok(EolFormula::GComplex(to_gcomplex(&other)?)),
    }
}

/// Parses a formula that must be infinite (`.^w` at the top).
pub fn parse_infinite(text: &str) -> Result<InfiniteEol, Error> {
    match parse_eol(text)? {
        EolFormula::Infinite(xi) => Ok(xi),
        EolFormula::GComplex(_) => Err(Error::Stratification(
            "expected an infinite formula (`.^w` at the top)".into(),
        )),
    }
}
