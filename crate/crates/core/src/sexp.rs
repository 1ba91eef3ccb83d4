//! A small s-expression reader that keeps source positions.
//!
//! Atoms are maximal runs of characters other than whitespace, parentheses,
//! `;` and `"`. A `;` starts a comment running to the end of the line.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::{ParseError, ParseErrorKind};

/// 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, pos) | Sexp::List(_, pos) => *pos,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(a, _) => Some(a),
            Sexp::List(..) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items, _) => Some(items),
            Sexp::Atom(..) => None,
        }
    }

    /// The head atom of a non-empty list whose first element is an atom.
    pub fn head(&self) -> Option<&str> {
        self.as_list()?.first()?.as_atom()
    }
}

struct Reader<'a> {
    chars: core::iter::Peekable<core::str::Chars<'a>>,
    pos: Pos,
}

impl Reader<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Option<Sexp>, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        match self.chars.peek() {
            None => Ok(None),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Err(ParseError::new(start, ParseErrorKind::Unclosed)),
                        Some(')') => {
                            self.bump();
                            return Ok(Some(Sexp::List(items, start)));
                        }
                        Some(_) => items.push(self.read()?.expect("input remains")),
                    }
                }
            }
            Some(')') => Err(ParseError::new(start, ParseErrorKind::UnexpectedClose)),
            Some('"') => Err(ParseError::new(start, ParseErrorKind::UnexpectedChar('"'))),
            Some(_) => {
                let mut atom = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | ';' | '"') {
                        break;
                    }
                    atom.push(c);
                    self.bump();
                }
                Ok(Some(Sexp::Atom(atom, start)))
            }
        }
    }
}

/// Reads every top-level form.
pub fn read_all(text: &str) -> Result<Vec<Sexp>, ParseError> {
    let mut reader = Reader { chars: text.chars().peekable(), pos: Pos { line: 1, column: 1 } };
    let mut out = Vec::new();
    while let Some(sexp) = reader.read()? {
        out.push(sexp);
    }
    Ok(out)
}

/// Reads exactly one top-level form.
pub fn read_one(text: &str) -> Result<Sexp, ParseError> {
    let mut reader = Reader { chars: text.chars().peekable(), pos: Pos { line: 1, column: 1 } };
    let Some(sexp) = reader.read()? else {
        return Err(ParseError::new(reader.pos, ParseErrorKind::Empty));
    };
    reader.skip_trivia();
    if reader.chars.peek().is_some() {
        return Err(ParseError::new(reader.pos, ParseErrorKind::TrailingInput));
    }
    Ok(sexp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_comments() {
        let forms = read_all("; header\n(a (b c))\n  d").unwrap();
        assert_eq!(forms.len(), 2);
        assert_eq!(forms[0].pos(), Pos { line: 2, column: 1 });
        assert_eq!(forms[1], Sexp::Atom("d".into(), Pos { line: 3, column: 3 }));
        let inner = &forms[0].as_list().unwrap()[1];
        assert_eq!(inner.pos(), Pos { line: 2, column: 4 });
        assert_eq!(inner.head(), Some("b"));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(read_one("(some italian").unwrap_err().kind, ParseErrorKind::Unclosed);
        assert_eq!(read_one(")").unwrap_err().kind, ParseErrorKind::UnexpectedClose);
        assert_eq!(read_one("  ").unwrap_err().kind, ParseErrorKind::Empty);
        let err = read_one("(a)\n (b)").unwrap_err();
        assert_eq!((err.kind, err.pos), (ParseErrorKind::TrailingInput, Pos { line: 2, column: 2 }));
    }
}
