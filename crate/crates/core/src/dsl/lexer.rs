use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

/// Byte range plus the 1-based line and column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub column: u32,
}

impl SourceSpan {
    pub fn join(self, other: SourceSpan) -> SourceSpan {
        SourceSpan {
            end: other.end.max(self.end),
            ..self
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Colon,
    Comma,
    /// `(*)`
    Tensor,
    /// `=>`
    Arrow,
    /// `==`
    EqEq,
    Eq,
    Gt,
    Semi,
    Newline,
    Eof,
    /// Any byte sequence the grammar has no use for.
    Unknown(char),
}

impl Tok {
    pub fn describe(&self) -> String {
        use alloc::format;
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Tensor => "`(*)`".into(),
            Tok::Arrow => "`=>`".into(),
            Tok::EqEq => "`==`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Gt => "`>`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
            Tok::Unknown(c) => format!("unexpected character {c:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Splits `src` into tokens. Never fails: stray characters become
/// [`Tok::Unknown`] and are reported by the parser.
pub fn lex(src: &str) -> Vec<Token> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1u32, 1u32);
    while i < bytes.len() {
        let start = i;
        let span_at = |end: usize| SourceSpan {
            start,
            end,
            line,
            column: col,
        };
        let b = bytes[i];
        let (tok, len) = match b {
            b'\n' => (Tok::Newline, 1),
            b' ' | b'\t' | b'\r' => {
                i += 1;
                col += 1;
                continue;
            }
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let v = BigUint::parse_bytes(&bytes[i..j], 10).unwrap_or_default();
                (Tok::Int(v), j - i)
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                (Tok::Ident(String::from(&src[i..j])), j - i)
            }
            b'(' if bytes[i..].starts_with(b"(*)") => (Tok::Tensor, 3),
            b'=' if bytes[i..].starts_with(b"=>") => (Tok::Arrow, 2),
            b'=' if bytes[i..].starts_with(b"==") => (Tok::EqEq, 2),
            b'=' => (Tok::Eq, 1),
            b'+' => (Tok::Plus, 1),
            b'-' => (Tok::Minus, 1),
            b'*' => (Tok::Star, 1),
            b'^' => (Tok::Caret, 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'{' => (Tok::LBrace, 1),
            b'}' => (Tok::RBrace, 1),
            b':' => (Tok::Colon, 1),
            b',' => (Tok::Comma, 1),
            b'>' => (Tok::Gt, 1),
            b';' => (Tok::Semi, 1),
            _ => {
                let c = src[i..].chars().next().unwrap_or('\u{fffd}');
                (Tok::Unknown(c), c.len_utf8())
            }
        };
        out.push(Token {
            tok: tok.clone(),
            span: span_at(i + len),
        });
        i += len;
        if tok == Tok::Newline {
            line += 1;
            col = 1;
        } else {
            col += src[start..i].chars().count() as u32;
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan {
            start: bytes.len(),
            end: bytes.len(),
            line,
            column: col,
        },
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<Tok> {
        lex(s).into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn tokens() {
        assert_eq!(
            kinds("DC (*) Dpt => {DC:1} # note"),
            alloc::vec![
                Tok::Ident("DC".into()),
                Tok::Tensor,
                Tok::Ident("Dpt".into()),
                Tok::Arrow,
                Tok::LBrace,
                Tok::Ident("DC".into()),
                Tok::Colon,
                Tok::Int(1u32.into()),
                Tok::RBrace,
                Tok::Eof
            ]
        );
    }

    #[test]
    fn positions() {
        let t = lex("1 +\n  L^2");
        let l = &t[3];
        assert_eq!(l.tok, Tok::Ident("L".into()));
        assert_eq!((l.span.line, l.span.column, l.span.start), (2, 3, 6));
    }

    #[test]
    fn unicode_is_unknown() {
        let t = lex("λ");
        assert_eq!(t[0].tok, Tok::Unknown('λ'));
        assert_eq!(t[0].span.end, 'λ'.len_utf8());
    }
}
