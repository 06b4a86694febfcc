//! A small term language for lattice identities.
//!
//! ```text
//! stmt  := term ("=" | "<=") term
//! term  := or
//! or    := and ("|" and)*
//! and   := unary ("&" unary)*
//! unary := "!" unary | atom
//! atom  := var | "0" | "1" | "(" term ")"
//! ```
//!
//! `∧ ∨ ¬ ≤ ⊥ ⊤` are accepted as aliases of `& | ! <= 0 1`. The same term is
//! interpreted in a subspace lattice (meet, span, orthocomplement) or in a
//! Boolean algebra of sets (intersection, union, complement).

mod check;
mod lexer;
mod parser;
mod structure;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use check::{check, check_assignment, CheckReport, Counterexample, Verdict, EXHAUSTIVE_LIMIT_BITS};
pub use parser::{parse, parse_term};
pub use structure::{eval_term, holds, Assignment, Element, Structure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("unexpected character {found:?} at position {position}")]
    Lex { position: usize, found: char },
    #[error("expected {} at position {position}, found {found}", expected.join(" or "))]
    Parse {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
}

impl SyntaxError {
    /// 1-based character column of the offending token.
    pub fn position(&self) -> usize {
        match self {
            SyntaxError::Lex { position, .. } | SyntaxError::Parse { position, .. } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Bottom,
    Top,
    Not(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(t: Term) -> Term {
        Term::Not(Box::new(t))
    }

    pub fn and(l: Term, r: Term) -> Term {
        Term::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Term, r: Term) -> Term {
        Term::Or(Box::new(l), Box::new(r))
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Var(v) => {
                out.insert(v);
            }
            Term::Bottom | Term::Top => {}
            Term::Not(t) => t.collect_vars(out),
            Term::And(l, r) | Term::Or(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Or(..) => 1,
            Term::And(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Bottom => f.write_str("0"),
            Term::Top => f.write_str("1"),
            Term::Not(t) => {
                f.write_str("!")?;
                t.fmt_at(f, 3)
            }
            // left-associative: only the right operand needs parentheses at equal precedence
            Term::And(l, r) => {
                l.fmt_at(f, 2)?;
                f.write_str(" & ")?;
                r.fmt_at(f, 3)
            }
            Term::Or(l, r) => {
                l.fmt_at(f, 1)?;
                f.write_str(" | ")?;
                r.fmt_at(f, 2)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    Leq,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityStatement {
    pub lhs: Term,
    pub rhs: Term,
    pub relation: Relation,
}

impl IdentityStatement {
    pub fn vars(&self) -> BTreeSet<&str> {
        let mut out = self.lhs.vars();
        out.extend(self.rhs.vars());
        out
    }
}

impl fmt::Display for IdentityStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Equal => "=",
            Relation::Leq => "<=",
        };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

impl std::str::FromStr for IdentityStatement {
    type Err = SyntaxError;
    fn from_str(s: &str) -> Result<Self, SyntaxError> {
        parse(s)
    }
}

/// Statements from a file body: one per line, `#` starts a comment.
pub fn parse_statements(text: &str) -> Result<Vec<(usize, IdentityStatement)>, (usize, SyntaxError)> {
    text.lines()
        .enumerate()
        .filter_map(|(k, line)| {
            let body = line.split('#').next().unwrap_or("");
            (!body.trim().is_empty()).then(|| parse(body).map(|s| (k + 1, s)).map_err(|e| (k + 1, e)))
        })
        .collect()
}
