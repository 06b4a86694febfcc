use super::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Var(String),
    Zero,
    One,
    Not,
    And,
    Or,
    LParen,
    RParen,
    Eq,
    Leq,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Var(v) => format!("variable {v:?}"),
            Tok::Zero => "\"0\"".into(),
            Tok::One => "\"1\"".into(),
            Tok::Not => "\"!\"".into(),
            Tok::And => "\"&\"".into(),
            Tok::Or => "\"|\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::Eq => "\"=\"".into(),
            Tok::Leq => "\"<=\"".into(),
            Tok::End => "end of input".into(),
        }
    }
}

/// Token with its 1-based character column.
pub(crate) type Spanned = (usize, Tok);

pub(crate) fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = k + 1;
        let single = match c {
            '0' | '⊥' => Some(Tok::Zero),
            '1' | '⊤' => Some(Tok::One),
            '!' | '¬' => Some(Tok::Not),
            '&' | '∧' => Some(Tok::And),
            '|' | '∨' => Some(Tok::Or),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '=' => Some(Tok::Eq),
            '≤' => Some(Tok::Leq),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((pos, tok));
            k += 1;
        } else if c.is_whitespace() {
            k += 1;
        } else if c == '<' {
            if chars.get(k + 1) != Some(&'=') {
                return Err(SyntaxError::Lex {
                    position: pos,
                    found: c,
                });
            }
            out.push((pos, Tok::Leq));
            k += 2;
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((pos, Tok::Var(chars[start..k].iter().collect())));
        } else {
            return Err(SyntaxError::Lex {
                position: pos,
                found: c,
            });
        }
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}
