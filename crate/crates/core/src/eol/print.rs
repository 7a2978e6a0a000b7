//! Text form of event-order formulae; output re-parses to the same AST.

use std::fmt;

use crate::eol::ast::{EolFormula, GComplexEol, IComplexEol, InfiniteEol, SimpleEol};

// Precedence levels used for parenthesization, loosest to tightest:
// 0 omega operand, 1 guards, 2 or, 3 and, 4 chain, 5 unary/atom.

fn simple(f: &mut fmt::Formatter<'_>, s: &SimpleEol, parent: u8) -> fmt::Result {
    let prec = match s {
        SimpleEol::Top | SimpleEol::Event(_) => 5,
        SimpleEol::Not(_) => 5,
        SimpleEol::And(_, _) => 3,
        SimpleEol::Or(_, _) => 2,
    };
    let need = prec < parent;
    if need {
        write!(f, "(")?;
    }
    match s {
        SimpleEol::Top => write!(f, "T")?,
        SimpleEol::Event(e) => write!(f, "{e}")?,
        SimpleEol::Not(a) => {
            write!(f, "!")?;
            simple(f, a, 5)?;
        }
        SimpleEol::And(a, b) => {
            simple(f, a, 4)?;
            write!(f, " & ")?;
            simple(f, b, 3)?;
        }
        SimpleEol::Or(a, b) => {
            simple(f, a, 3)?;
            write!(f, " | ")?;
            simple(f, b, 2)?;
        }
    }
    if need {
        write!(f, ")")?;
    }
    Ok(())
}

fn icomplex(f: &mut fmt::Formatter<'_>, psi: &IComplexEol, parent: u8) -> fmt::Result {
    let prec = match psi {
        IComplexEol::Simple(s) => {
            return simple(f, s, parent);
        }
        IComplexEol::Ordered(_, _) | IComplexEol::Between { .. } => 4,
        IComplexEol::And(_, _) => 3,
        IComplexEol::Or(_, _) => 2,
    };
    let need = prec < parent;
    if need {
        write!(f, "(")?;
    }
    match psi {
        IComplexEol::Simple(_) => unreachable!(),
        IComplexEol::Ordered(a, b) => {
            icomplex(f, a, 5)?;
            write!(f, " . ")?;
            icomplex(f, b, 4)?;
        }
        IComplexEol::Between { first, guard, second } => {
            icomplex(f, first, 5)?;
            write!(f, " .< ")?;
            simple(f, guard, 2)?;
            write!(f, " .> ")?;
            icomplex(f, second, 4)?;
        }
        IComplexEol::And(a, b) => {
            icomplex(f, a, 4)?;
            write!(f, " & ")?;
            icomplex(f, b, 3)?;
        }
        IComplexEol::Or(a, b) => {
            icomplex(f, a, 3)?;
            write!(f, " | ")?;
            icomplex(f, b, 2)?;
        }
    }
    if need {
        write!(f, ")")?;
    }
    Ok(())
}

fn gcomplex(f: &mut fmt::Formatter<'_>, theta: &GComplexEol, parent: u8) -> fmt::Result {
    match theta {
        GComplexEol::Interval(psi) => icomplex(f, psi, parent),
        GComplexEol::GuardUntil { guard, body } => {
            let need = 1 < parent;
            if need {
                write!(f, "(")?;
            }
            simple(f, guard, 2)?;
            write!(f, " .] ")?;
            gcomplex(f, body, 1)?;
            if need {
                write!(f, ")")?;
            }
            Ok(())
        }
        GComplexEol::GuardAfter { body, guard } => {
            let need = 1 < parent;
            if need {
                write!(f, "(")?;
            }
            gcomplex(f, body, 2)?;
            write!(f, " .[ ")?;
            simple(f, guard, 2)?;
            if need {
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for SimpleEol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        simple(f, self, 0)
    }
}

impl fmt::Display for IComplexEol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        icomplex(f, self, 0)
    }
}

impl fmt::Display for GComplexEol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        gcomplex(f, self, 0)
    }
}

impl fmt::Display for InfiniteEol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.head {
            GComplexEol::Interval(psi) => icomplex(f, psi, 1)?,
            guarded => {
                write!(f, "(")?;
                gcomplex(f, guarded, 0)?;
                write!(f, ")")?;
            }
        }
        write!(f, " .^w (")?;
        icomplex(f, &self.cycle, 0)?;
        write!(f, ")")
    }
}

impl fmt::Display for EolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EolFormula::Infinite(xi) => xi.fmt(f),
            EolFormula::GComplex(theta) => theta.fmt(f),
        }
    }
}
