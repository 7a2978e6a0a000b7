//! LTL formulae: concrete syntax, parsing, and exact evaluation over lasso
//! executions.
//!
//! Concrete syntax: `atom`, `true`, `!p`, `p & q`, `p | q`, `p -> q`,
//! `p <-> q`, `X p`, `p U q`, `F p`, `G p`, parentheses. Precedence:
//! unary > `U` > `&` > `|` > `->` > `<->`; `U` and `->` associate to the
//! right. `->` and `<->` are expanded at parse time.
//!
//! Atoms name either a declared state label (true at positions whose state
//! carries the label) or an action of the model (true at positions entered by
//! that action; position 0 has no incoming action).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::model::{LassoExecution, TransitionSystem};
use crate::search;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LtlFormula {
    True,
    Atom(String),
    Not(Box<LtlFormula>),
    And(Box<LtlFormula>, Box<LtlFormula>),
    Or(Box<LtlFormula>, Box<LtlFormula>),
    Next(Box<LtlFormula>),
    Until(Box<LtlFormula>, Box<LtlFormula>),
    Eventually(Box<LtlFormula>),
    Globally(Box<LtlFormula>),
}

impl LtlFormula {
    pub fn not(f: LtlFormula) -> LtlFormula {
        LtlFormula::Not(Box::new(f))
    }

    pub fn atom(name: &str) -> LtlFormula {
        LtlFormula::Atom(name.to_string())
    }

    pub fn nesting_depth(&self) -> usize {
        use LtlFormula::*;
        match self {
            True | Atom(_) => 0,
            Not(a) | Next(a) | Eventually(a) | Globally(a) => 1 + a.nesting_depth(),
            And(a, b) | Or(a, b) | Until(a, b) => 1 + a.nesting_depth().max(b.nesting_depth()),
        }
    }
}

impl fmt::Display for LtlFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Precedence-aware printer; output re-parses to the same AST.
        fn go(t: &LtlFormula, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
            use LtlFormula::*;
            let prec = match t {
                True | Atom(_) => 5,
                Not(_) | Next(_) | Eventually(_) | Globally(_) => 4,
                Until(_, _) => 3,
                And(_, _) => 2,
                Or(_, _) => 1,
            };
            let need = prec < parent;
            if need {
                write!(f, "(")?;
            }
            match t {
                True => write!(f, "true")?,
                Atom(a) => write!(f, "{a}")?,
                Not(a) => {
                    write!(f, "!")?;
                    go(a, f, 5)?;
                }
                Next(a) => {
                    write!(f, "X ")?;
                    go(a, f, 5)?;
                }
                Eventually(a) => {
                    write!(f, "F ")?;
                    go(a, f, 5)?;
                }
                Globally(a) => {
                    write!(f, "G ")?;
                    go(a, f, 5)?;
                }
                Until(a, b) => {
                    go(a, f, 4)?;
                    write!(f, " U ")?;
                    go(b, f, 3)?;
                }
                And(a, b) => {
                    go(a, f, 3)?;
                    write!(f, " & ")?;
                    go(b, f, 2)?;
                }
                Or(a, b) => {
                    go(a, f, 2)?;
                    write!(f, " | ")?;
                    go(b, f, 1)?;
                }
            }
            if need {
                write!(f, ")")?;
            }
            Ok(())
        }
        go(self, f, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Next,
    Until,
    Eventually,
    Globally,
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
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((Tok::Implies, i));
                    i += 2;
                } else {
                    return Err(Error::FormulaSyntax {
                        pos: i,
                        message: "expected `->`".into(),
                    });
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    out.push((Tok::Iff, i));
                    i += 3;
                } else {
                    return Err(Error::FormulaSyntax {
                        pos: i,
                        message: "expected `<->`".into(),
                    });
                }
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Tok::True,
                    "X" => Tok::Next,
                    "U" => Tok::Until,
                    "F" => Tok::Eventually,
                    "G" => Tok::Globally,
                    _ => Tok::Ident(word.to_string()),
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

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Error> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::FormulaSyntax {
                pos: self.here(),
                message: format!("expected {what}"),
            })
        }
    }

    fn iff(&mut self) -> Result<LtlFormula, Error> {
        let mut lhs = self.implies()?;
        while self.peek() == Some(&Tok::Iff) {
            self.bump();
            let rhs = self.implies()?;
            let fwd = LtlFormula::Or(Box::new(LtlFormula::not(lhs.clone())), Box::new(rhs.clone()));
            let back = LtlFormula::Or(Box::new(LtlFormula::not(rhs)), Box::new(lhs));
            lhs = LtlFormula::And(Box::new(fwd), Box::new(back));
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<LtlFormula, Error> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Implies) {
            self.bump();
            let rhs = self.implies()?;
            Ok(LtlFormula::Or(Box::new(LtlFormula::not(lhs)), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<LtlFormula, Error> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            let rhs = self.and()?;
            lhs = LtlFormula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<LtlFormula, Error> {
        let mut lhs = self.until()?;
        while self.peek() == Some(&Tok::And) {
            self.bump();
            let rhs = self.until()?;
            lhs = LtlFormula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn until(&mut self) -> Result<LtlFormula, Error> {
        let lhs = self.unary()?;
        if self.peek() == Some(&Tok::Until) {
            self.bump();
            let rhs = self.until()?;
            Ok(LtlFormula::Until(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<LtlFormula, Error> {
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(LtlFormula::not(self.unary()?))
            }
            Some(Tok::Next) => {
                self.bump();
                Ok(LtlFormula::Next(Box::new(self.unary()?)))
            }
            Some(Tok::Eventually) => {
                self.bump();
                Ok(LtlFormula::Eventually(Box::new(self.unary()?)))
            }
            Some(Tok::Globally) => {
                self.bump();
                Ok(LtlFormula::Globally(Box::new(self.unary()?)))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<LtlFormula, Error> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::True) => Ok(LtlFormula::True),
            Some(Tok::Ident(name)) => Ok(LtlFormula::Atom(name)),
            Some(Tok::LParen) => {
                let inner = self.iff()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::FormulaSyntax {
                pos,
                message: "expected an atom, `true`, or `(`".into(),
            }),
        }
    }
}

pub fn parse_ltl(text: &str) -> Result<LtlFormula, Error> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let formula = p.iff()?;
    if p.pos != p.toks.len() {
        return Err(Error::FormulaSyntax {
            pos: p.here(),
            message: "trailing input after formula".into(),
        });
    }
    Ok(formula)
}

/// How an atom name resolves against a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AtomKind {
    Action(crate::model::ActionId),
    Label,
}

fn resolve_atom(ts: &TransitionSystem, name: &str) -> Result<AtomKind, Error> {
    let as_action = ts.action_id(name);
    let as_label = ts.has_label_name(name);
    match (as_action, as_label) {
        (Some(_), true) => Err(Error::AmbiguousAtom(name.to_string())),
        (Some(a), false) => Ok(AtomKind::Action(a)),
        (None, true) => Ok(AtomKind::Label),
        (None, false) => Err(Error::UnresolvableAtom(name.to_string())),
    }
}

/// Exact satisfaction of `phi` on the infinite word denoted by `sigma`.
///
/// Every subformula is tabulated over the lasso quotient: positions
/// `0 ..= l+m` with the successor of `l+m` looping back to `l+1` (the
/// incoming action distinguishes position `l` from position `l+m`, so both
/// are kept). Until is solved as a least fixpoint over that finite graph.
pub fn eval_ltl(
    ts: &TransitionSystem,
    phi: &LtlFormula,
    sigma: &LassoExecution,
) -> Result<bool, Error> {
    let l = sigma.stem_len();
    let m = sigma.cycle_len();
    let n = l + m + 1;
    let succ = |p: usize| if p + 1 < n { p + 1 } else { l + 1 };

    fn table(
        ts: &TransitionSystem,
        phi: &LtlFormula,
        sigma: &LassoExecution,
        n: usize,
        succ: &dyn Fn(usize) -> usize,
        memo: &mut BTreeMap<LtlFormula, Vec<bool>>,
    ) -> Result<Vec<bool>, Error> {
        if let Some(t) = memo.get(phi) {
            return Ok(t.clone());
        }
        use LtlFormula::*;
        let t = match phi {
            True => vec![true; n],
            Atom(name) => {
                let kind = resolve_atom(ts, name)?;
                (0..n)
                    .map(|p| match kind {
                        AtomKind::Action(a) => p >= 1 && sigma.action_into(p) == a,
                        AtomKind::Label => ts
                            .labels_of(sigma.state_at(p))
                            .is_some_and(|ls| ls.contains(name)),
                    })
                    .collect()
            }
            Not(a) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                ta.iter().map(|b| !b).collect()
            }
            And(a, b) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                let tb = table(ts, b, sigma, n, succ, memo)?;
                ta.iter().zip(&tb).map(|(x, y)| *x && *y).collect()
            }
            Or(a, b) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                let tb = table(ts, b, sigma, n, succ, memo)?;
                ta.iter().zip(&tb).map(|(x, y)| *x || *y).collect()
            }
            Next(a) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                (0..n).map(|p| ta[succ(p)]).collect()
            }
            Until(a, b) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                let tb = table(ts, b, sigma, n, succ, memo)?;
                let mut t = vec![false; n];
                loop {
                    let mut changed = false;
                    for p in (0..n).rev() {
                        let v = tb[p] || (ta[p] && t[succ(p)]);
                        if v != t[p] {
                            t[p] = v;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                t
            }
            Eventually(a) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                let mut t = vec![false; n];
                loop {
                    let mut changed = false;
                    for p in (0..n).rev() {
                        let v = ta[p] || t[succ(p)];
                        if v != t[p] {
                            t[p] = v;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                t
            }
            Globally(a) => {
                let ta = table(ts, a, sigma, n, succ, memo)?;
                let mut t = vec![true; n];
                loop {
                    let mut changed = false;
                    for p in (0..n).rev() {
                        let v = ta[p] && t[succ(p)];
                        if v != t[p] {
                            t[p] = v;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                t
            }
        };
        memo.insert(phi.clone(), t.clone());
        Ok(t)
    }

    let mut memo = BTreeMap::new();
    let t = table(ts, phi, sigma, n, &succ, &mut memo)?;
    Ok(t[0])
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Holds,
    Violated(LassoExecution),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Checks `phi` against every enumerated lasso of `ts`, returning the first
/// violating lasso in enumeration order. The verdict is relative to the set
/// of elementary lassos.
pub fn check_model(
    ts: &TransitionSystem,
    phi: &LtlFormula,
    cap: usize,
) -> Result<Verdict, Error> {
    for lasso in search::enumerate_lassos(ts, cap)? {
        if !eval_ltl(ts, phi, &lasso)? {
            return Ok(Verdict::Violated(lasso));
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{lasso_over_word, lasso_over_word_in};

    #[test]
    fn parses_globally_implication() {
        let phi = parse_ltl("G (B2 -> F E2)").unwrap();
        // Sugar expands: G (!B2 | F E2)
        assert_eq!(phi.to_string(), "G (!B2 | F E2)");
        let reparsed = parse_ltl(&phi.to_string()).unwrap();
        assert_eq!(phi, reparsed);
    }

    #[test]
    fn parses_true() {
        assert_eq!(parse_ltl("true").unwrap(), LtlFormula::True);
    }

    #[test]
    fn until_is_right_associative() {
        let phi = parse_ltl("a U b U c").unwrap();
        let want = parse_ltl("a U (b U c)").unwrap();
        assert_eq!(phi, want);
        assert_eq!(phi, parse_ltl(&phi.to_string()).unwrap());
    }

    #[test]
    fn reports_syntax_position() {
        match parse_ltl("a & & b") {
            Err(Error::FormulaSyntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn elevator_counterexample_word_violates_response() {
        let (ts, sigma) = lasso_over_word_in(&["E2"], &["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        let phi = parse_ltl("G (B2 -> F E2)").unwrap();
        assert!(!eval_ltl(&ts, &phi, &sigma).unwrap());
    }

    #[test]
    fn serviced_variant_satisfies_response() {
        let (ts, sigma) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "E2", "B0", "E0"]);
        let phi = parse_ltl("G (B2 -> F E2)").unwrap();
        assert!(eval_ltl(&ts, &phi, &sigma).unwrap());

        let (ts2, sigma2) = lasso_over_word(&["E0"], &["B2", "E2", "B1", "E1"]);
        assert!(eval_ltl(&ts2, &phi, &sigma2).unwrap());
    }

    #[test]
    fn true_holds_everywhere() {
        let (ts, sigma) = lasso_over_word(&[], &["a"]);
        assert!(eval_ltl(&ts, &LtlFormula::True, &sigma).unwrap());
    }

    #[test]
    fn label_atom_reads_state_labels() {
        let ts = crate::model::parse_model("state s0 { p }; init s0; s0 -a-> s0;").unwrap();
        let s0 = ts.state_id("s0").unwrap();
        let a = ts.action_id("a").unwrap();
        let sigma = LassoExecution::new(
            &ts,
            s0,
            vec![],
            vec![crate::model::Step { action: a, target: s0 }],
        )
        .unwrap();
        assert!(eval_ltl(&ts, &parse_ltl("G p").unwrap(), &sigma).unwrap());
        assert!(matches!(
            eval_ltl(&ts, &parse_ltl("G q").unwrap(), &sigma),
            Err(Error::UnresolvableAtom(_))
        ));
    }

    #[test]
    fn ambiguous_atom_is_rejected() {
        let ts = crate::model::parse_model("state s0 { a }; init s0; s0 -a-> s0;").unwrap();
        let s0 = ts.state_id("s0").unwrap();
        let a = ts.action_id("a").unwrap();
        let sigma = LassoExecution::new(
            &ts,
            s0,
            vec![],
            vec![crate::model::Step { action: a, target: s0 }],
        )
        .unwrap();
        assert!(matches!(
            eval_ltl(&ts, &parse_ltl("F a").unwrap(), &sigma),
            Err(Error::AmbiguousAtom(_))
        ));
    }

    #[test]
    fn next_distinguishes_positions() {
        let (ts, sigma) = lasso_over_word(&["a"], &["b"]);
        assert!(eval_ltl(&ts, &parse_ltl("X a").unwrap(), &sigma).unwrap());
        assert!(eval_ltl(&ts, &parse_ltl("X X b").unwrap(), &sigma).unwrap());
        assert!(!eval_ltl(&ts, &parse_ltl("X b").unwrap(), &sigma).unwrap());
        // Action atoms are false at position 0.
        assert!(!eval_ltl(&ts, &parse_ltl("a").unwrap(), &sigma).unwrap());
    }

    #[test]
    fn until_on_lasso() {
        let (ts, sigma) = lasso_over_word(&["a", "a", "b"], &["c"]);
        assert!(eval_ltl(&ts, &parse_ltl("!b U b").unwrap(), &sigma).unwrap());
        assert!(!eval_ltl(&ts, &parse_ltl("a U b").unwrap(), &sigma).unwrap());
        assert!(eval_ltl(&ts, &parse_ltl("X (a U b)").unwrap(), &sigma).unwrap());
    }
}
