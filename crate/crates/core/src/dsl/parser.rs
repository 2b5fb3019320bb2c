//! Recursive descent with one token of lookahead inside expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | 'L' ['^' INT] | ATOM ['(*)' ATOM]
//!         | 'Sym2' '(' expr ')' | 'Hilb2' '(' INT ',' expr ')'
//!         | '(' expr ')' | ledger
//! ledger := '{' [ATOM ':' INT (',' ATOM ':' INT)*] '}'
//! rule   := expr '=>' ledger
//! ```

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use super::ast::{LedgerEntry, Node, NodeKind, Statement, Stmt};
use super::lexer::{lex, SourceSpan, Tok, Token};
use crate::sod::Verdict;

/// Deepest nesting of parentheses, braces and `Sym2(...)` accepted.
pub const MAX_DEPTH: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: Vec<String>,
    pub found: String,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.span)?;
        if let Some(m) = &self.message {
            return write!(f, "{m} (at {})", self.found);
        }
        match self.expected.as_slice() {
            [] => write!(f, "unexpected {}", self.found),
            [one] => write!(f, "expected {one}, found {}", self.found),
            many => write!(f, "expected one of {}, found {}", many.join(", "), self.found),
        }
    }
}

impl core::error::Error for ParseError {}

const RESERVED: [&str; 3] = ["L", "Sym2", "Hilb2"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
    /// Bracket nesting; newlines are insignificant inside brackets.
    nest: usize,
    /// Treat every newline as whitespace (single-expression mode).
    newline_ws: bool,
}

impl Parser {
    fn new(src: &str, newline_ws: bool) -> Self {
        Parser {
            toks: lex(src),
            pos: 0,
            depth: 0,
            nest: 0,
            newline_ws,
        }
    }

    fn skip_newlines(&mut self) {
        if self.newline_ws || self.nest > 0 {
            while self.toks[self.pos].tok == Tok::Newline {
                self.pos += 1;
            }
        }
    }

    fn peek(&mut self) -> &Token {
        self.skip_newlines();
        &self.toks[self.pos]
    }

    /// Token after the next one, on the same line.
    fn peek2(&mut self) -> &Tok {
        self.skip_newlines();
        let i = (self.pos + 1).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Token {
        self.skip_newlines();
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&mut self, expected: &[&str]) -> ParseError {
        let t = self.peek().clone();
        ParseError {
            span: t.span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
            message: None,
        }
    }

    fn error_msg(&mut self, message: &str) -> ParseError {
        let mut e = self.error(&[]);
        e.message = Some(message.to_string());
        e
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error_msg("expression nested too deeply"));
        }
        Ok(())
    }

    fn open(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        let t = self.expect(tok, what)?;
        self.nest += 1;
        Ok(t)
    }

    fn close(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        let t = self.expect(tok, what)?;
        self.nest -= 1;
        Ok(t)
    }

    fn atom_name(&mut self) -> Result<(String, SourceSpan), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(ref s) if !RESERVED.contains(&s.as_str()) => {
                self.bump();
                Ok((s.clone(), t.span))
            }
            _ => Err(self.error(&["atom name"])),
        }
    }

    fn int(&mut self) -> Result<(BigUint, SourceSpan), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(v) => {
                self.bump();
                Ok((v, t.span))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<(u32, SourceSpan), ParseError> {
        let at = self.peek().clone();
        let (v, span) = self.int()?;
        let v = u32::try_from(&v).map_err(|_| ParseError {
            span: at.span,
            expected: Vec::new(),
            found: at.tok.describe(),
            message: Some(alloc::format!("{what} too large")),
        })?;
        Ok((v, span))
    }

    fn signed_int(&mut self) -> Result<(BigInt, SourceSpan), ParseError> {
        let neg = self.peek().tok == Tok::Minus;
        let first = if neg { Some(self.bump().span) } else { None };
        let (v, span) = self.int()?;
        let v = BigInt::from(v);
        Ok(if neg { (-v, first.unwrap().join(span)) } else { (v, span) })
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let start = self.peek().span;
        let mut terms = Vec::new();
        let mut neg = false;
        if self.peek().tok == Tok::Minus {
            self.bump();
            neg = true;
        }
        terms.push((neg, self.term()?));
        loop {
            let neg = match self.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            terms.push((neg, self.term()?));
        }
        let span = start.join(terms.last().map(|(_, t)| t.span).unwrap_or(start));
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Node::new(NodeKind::Sum(terms), span))
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut factors = alloc::vec![self.factor()?];
        while self.peek().tok == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        let span = factors[0].span.join(factors[factors.len() - 1].span);
        Ok(Node::new(NodeKind::Product(factors), span))
    }

    fn factor(&mut self) -> Result<Node, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(v) => {
                self.bump();
                Ok(Node::new(NodeKind::IntLit(v), t.span))
            }
            Tok::Ident(ref s) if s == "L" => {
                self.bump();
                if self.peek().tok == Tok::Caret {
                    self.bump();
                    let (k, span) = self.small_int("exponent")?;
                    return Ok(Node::new(NodeKind::LPow(k), t.span.join(span)));
                }
                Ok(Node::new(NodeKind::LPow(1), t.span))
            }
            Tok::Ident(ref s) if s == "Sym2" => {
                self.bump();
                self.enter()?;
                self.open(Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                let end = self.close(Tok::RParen, "`)`")?;
                self.depth -= 1;
                Ok(Node::new(NodeKind::Sym2(Box::new(inner)), t.span.join(end.span)))
            }
            Tok::Ident(ref s) if s == "Hilb2" => {
                self.bump();
                self.enter()?;
                self.open(Tok::LParen, "`(`")?;
                let (n, _) = self.small_int("dimension")?;
                self.expect(Tok::Comma, "`,`")?;
                let inner = self.expr()?;
                let end = self.close(Tok::RParen, "`)`")?;
                self.depth -= 1;
                Ok(Node::new(
                    NodeKind::Hilb2(n, Box::new(inner)),
                    t.span.join(end.span),
                ))
            }
            Tok::Ident(ref s) => {
                self.bump();
                if self.peek().tok == Tok::Tensor {
                    self.bump();
                    let (b, span) = self.atom_name()?;
                    return Ok(Node::new(NodeKind::Tensor(s.clone(), b), t.span.join(span)));
                }
                Ok(Node::new(NodeKind::Atom(s.clone()), t.span))
            }
            Tok::LParen => {
                self.enter()?;
                self.open(Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.close(Tok::RParen, "`)`")?;
                self.depth -= 1;
                Ok(inner)
            }
            Tok::LBrace => self.ledger(),
            _ => Err(self.error(&["integer", "`L`", "atom", "`Sym2`", "`Hilb2`", "`(`", "`{`"])),
        }
    }

    fn ledger(&mut self) -> Result<Node, ParseError> {
        let open = self.open(Tok::LBrace, "`{`")?;
        let mut entries = Vec::new();
        if self.peek().tok != Tok::RBrace {
            loop {
                let (name, span) = self.atom_name()?;
                self.expect(Tok::Colon, "`:`")?;
                let (mult, end) = self.int()?;
                entries.push(LedgerEntry {
                    name,
                    mult,
                    span: span.join(end),
                });
                match self.peek().tok {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RBrace => break,
                    _ => return Err(self.error(&["`,`", "`}`"])),
                }
            }
        }
        let close = self.close(Tok::RBrace, "`}`")?;
        Ok(Node::new(
            NodeKind::LedgerLiteral(entries),
            open.span.join(close.span),
        ))
    }

    fn rule_or_expr(&mut self) -> Result<Node, ParseError> {
        let lhs = self.expr()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            let rhs = self.ledger()?;
            let span = lhs.span.join(rhs.span);
            return Ok(Node::new(NodeKind::RuleDef(Box::new(lhs), Box::new(rhs)), span));
        }
        Ok(lhs)
    }

    fn ident_is(&mut self, word: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == word)
    }

    fn keyword(&mut self, word: &str) -> Result<Token, ParseError> {
        if self.ident_is(word) {
            Ok(self.bump())
        } else {
            let w = alloc::format!("`{word}`");
            Err(self.error(&[w.as_str()]))
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let start = self.peek().span;
        let head_is_word = matches!(self.peek2(), Tok::Ident(_) | Tok::Int(_) | Tok::Minus);
        let stmt = if self.ident_is("order") && head_is_word {
            self.bump();
            let mut atoms = alloc::vec![self.atom_name()?.0];
            while self.peek().tok == Tok::Gt {
                self.bump();
                atoms.push(self.atom_name()?.0);
            }
            Stmt::Order(atoms)
        } else if self.ident_is("hh0") && head_is_word {
            self.bump();
            let (a, _) = self.atom_name()?;
            self.expect(Tok::Eq, "`=`")?;
            Stmt::DeclareHh0(a, self.int()?.0)
        } else if self.ident_is("euler") && head_is_word {
            self.bump();
            let (a, _) = self.atom_name()?;
            self.expect(Tok::Eq, "`=`")?;
            Stmt::DeclareEuler(a, self.signed_int()?.0)
        } else if self.ident_is("expect") && *self.peek2() != Tok::Arrow {
            self.bump();
            let invariant = matches!(&self.peek().tok, Tok::Ident(s) if s == "hh0" || s == "euler")
                && *self.peek2() == Tok::LParen;
            if invariant {
                let which = self.bump();
                self.enter()?;
                self.open(Tok::LParen, "`(`")?;
                let e = self.expr()?;
                self.close(Tok::RParen, "`)`")?;
                self.depth -= 1;
                self.expect(Tok::EqEq, "`==`")?;
                match which.tok {
                    Tok::Ident(ref s) if s == "hh0" => Stmt::ExpectHh0(e, self.int()?.0),
                    _ => Stmt::ExpectEuler(e, self.signed_int()?.0),
                }
            } else {
                let a = self.expr()?;
                self.expect(Tok::EqEq, "`==`")?;
                Stmt::ExpectEqual(a, self.expr()?)
            }
        } else if self.ident_is("obstruction") && *self.peek2() != Tok::Arrow {
            self.bump();
            let candidate = self.expr()?;
            self.keyword("in")?;
            let ambient = self.expr()?;
            let expect = if self.ident_is("expect") {
                self.bump();
                if self.ident_is("OBSTRUCTED") {
                    self.bump();
                    Some(Verdict::Obstructed)
                } else if self.ident_is("INCONCLUSIVE") {
                    self.bump();
                    Some(Verdict::Inconclusive)
                } else {
                    return Err(self.error(&["`OBSTRUCTED`", "`INCONCLUSIVE`"]));
                }
            } else {
                None
            };
            Stmt::Obstruction {
                candidate,
                ambient,
                expect,
            }
        } else {
            let lhs = self.expr()?;
            self.expect(Tok::Arrow, "`=>`")?;
            let rhs = self.ledger()?;
            Stmt::Rule { lhs, rhs }
        };
        let end = self.toks[self.pos.saturating_sub(1)].span;
        match self.peek().tok {
            Tok::Newline | Tok::Semi | Tok::Eof => {}
            _ => return Err(self.error(&["end of line", "`;`"])),
        }
        Ok(Statement {
            stmt,
            span: start.join(end),
        })
    }
}

/// Parses one expression, ledger or rule. Newlines count as whitespace.
pub fn parse(input: &str) -> Result<Node, ParseError> {
    let mut p = Parser::new(input, true);
    let node = p.rule_or_expr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(node)
}

/// Parses a check script: statements separated by newlines or `;`.
pub fn parse_script(input: &str) -> Result<Vec<Statement>, ParseError> {
    let mut p = Parser::new(input, false);
    let mut out = Vec::new();
    loop {
        while matches!(p.peek().tok, Tok::Newline | Tok::Semi) {
            p.bump_raw();
        }
        if p.peek().tok == Tok::Eof {
            return Ok(out);
        }
        out.push(p.statement()?);
    }
}

impl Parser {
    fn bump_raw(&mut self) {
        if self.toks[self.pos].tok != Tok::Eof {
            self.pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(s: &str) -> NodeKind {
        parse(s).unwrap().kind
    }

    #[test]
    fn examples() {
        match kind("1 + L + L^2") {
            NodeKind::Sum(ts) => {
                assert_eq!(ts.len(), 3);
                assert_eq!(ts[2].1.kind, NodeKind::LPow(2));
            }
            k => panic!("{k:?}"),
        }
        match kind("{DSym2C:1, DC:8, Dpt:26}") {
            NodeKind::LedgerLiteral(es) => {
                assert_eq!(es.len(), 3);
                assert_eq!(es[2].name, "Dpt");
                assert_eq!(es[2].mult, 26u32.into());
            }
            k => panic!("{k:?}"),
        }
        match kind("Sym2(DC) => {DSym2C:1, DC:1}") {
            NodeKind::RuleDef(l, _) => assert!(matches!(l.kind, NodeKind::Sym2(_))),
            k => panic!("{k:?}"),
        }
        assert_eq!(kind("DC (*) Dpt"), NodeKind::Tensor("DC".into(), "Dpt".into()));
        assert_eq!(kind("{}"), NodeKind::LedgerLiteral(Vec::new()));
        assert!(matches!(kind("-L^2*F"), NodeKind::Sum(ref t) if t[0].0));
        assert!(matches!(kind("Hilb2(3, X)"), NodeKind::Hilb2(3, _)));
    }

    #[test]
    fn precedence() {
        match kind("1 + 2*L^3") {
            NodeKind::Sum(ts) => match &ts[1].1.kind {
                NodeKind::Product(fs) => assert_eq!(fs[1].kind, NodeKind::LPow(3)),
                k => panic!("{k:?}"),
            },
            k => panic!("{k:?}"),
        }
    }

    #[test]
    fn errors_carry_position() {
        let e = parse("1 +\n  * L").unwrap_err();
        assert_eq!((e.span.line, e.span.column), (2, 3));
        assert!(e.expected.iter().any(|x| x == "atom"));
        assert_eq!(e.found, "`*`");
        assert!(parse("L^99999999999").unwrap_err().message.is_some());
        assert!(parse("{DC:1,}").is_err());
        assert!(parse("L (*) X").is_err());
        assert!(parse("Sym2 X").is_err());
        assert!(parse("(1").is_err());
        assert!(parse("").is_err());
        assert!(parse("1 2").is_err());
    }

    #[test]
    fn nesting_limit() {
        let deep = "(".repeat(MAX_DEPTH + 10) + "1" + &")".repeat(MAX_DEPTH + 10);
        let e = parse(&deep).unwrap_err();
        assert!(e.message.unwrap().contains("nested"));
        let ok = "(".repeat(MAX_DEPTH) + "1" + &")".repeat(MAX_DEPTH);
        assert!(parse(&ok).is_ok());
    }

    #[test]
    fn scripts() {
        let src = "# rules\norder DX > DC > Dpt\nDX => {DC:1, Dpt:4}; hh0 DC = 2\n\
                   expect hh0(Sym2({Dpt:10})) == 65\nexpect euler(Hilb2(3, X)) == 88\n\
                   euler X = -16\nobstruction {Dpt:56} in Sym2({Dpt:10}) expect INCONCLUSIVE\n\
                   expect Sym2(1 + L) == 1 + L +\n  L^2\n";
        let err = parse_script(src).unwrap_err();
        // a dangling `+` at the end of a line is an error outside brackets
        assert_eq!(err.span.line, 8);
        let src = src.replace("+\n  L^2", "+ L^2");
        let stmts = parse_script(&src).unwrap();
        assert_eq!(stmts.len(), 8);
        assert!(matches!(stmts[0].stmt, Stmt::Order(ref v) if v.len() == 3));
        assert!(matches!(stmts[1].stmt, Stmt::Rule { .. }));
        assert!(matches!(stmts[2].stmt, Stmt::DeclareHh0(..)));
        assert!(matches!(stmts[5].stmt, Stmt::DeclareEuler(_, ref v) if *v == BigInt::from(-16)));
        assert!(matches!(
            stmts[6].stmt,
            Stmt::Obstruction {
                expect: Some(Verdict::Inconclusive),
                ..
            }
        ));
        assert_eq!(stmts[3].span.line, 4);
    }

    #[test]
    fn brackets_span_lines_in_scripts() {
        let stmts = parse_script("expect {DC:1,\n Dpt:2} == {Dpt:2, DC:1}").unwrap();
        assert_eq!(stmts.len(), 1);
    }
}
