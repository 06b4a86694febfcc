use super::lexer::{lex, Spanned, Tok};
use super::{IdentityStatement, Relation, SyntaxError, Term};

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let (position, tok) = &self.toks[self.at];
        SyntaxError::Parse {
            position: *position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            left = Term::or(left, self.and()?);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Term, SyntaxError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            left = Term::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Term, SyntaxError> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Term::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Term, SyntaxError> {
        match self.peek().clone() {
            Tok::Var(v) => {
                self.bump();
                Ok(Term::Var(v))
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Bottom)
            }
            Tok::One => {
                self.bump();
                Ok(Term::Top)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.term()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["\"&\"", "\"|\"", "\")\""]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&["variable", "\"0\"", "\"1\"", "\"!\"", "\"(\""])),
        }
    }
}

/// Parses `lhs = rhs` or `lhs <= rhs`.
pub fn parse(text: &str) -> Result<IdentityStatement, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let lhs = p.term()?;
    let relation = match p.peek() {
        Tok::Eq => Relation::Equal,
        Tok::Leq => Relation::Leq,
        _ => return Err(p.error(&["\"&\"", "\"|\"", "\"=\"", "\"<=\""])),
    };
    p.bump();
    let rhs = p.term()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["\"&\"", "\"|\"", "end of input"]));
    }
    Ok(IdentityStatement { lhs, rhs, relation })
}

/// Parses a bare term.
pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let t = p.term()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["\"&\"", "\"|\"", "end of input"]));
    }
    Ok(t)
}
