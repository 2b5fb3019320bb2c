use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::lexer::SourceSpan;
use crate::sod::Verdict;

/// A syntax tree node. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Node {
    pub kind: NodeKind,
    pub span: SourceSpan,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Node {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub name: String,
    pub mult: BigUint,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    IntLit(BigUint),
    /// `L^k`; a bare `L` is `LPow(1)`.
    LPow(u32),
    Atom(String),
    Sym2(Box<Node>),
    /// `Hilb2(n, x)` for `x` of dimension `n`.
    Hilb2(u32, Box<Node>),
    Tensor(String, String),
    /// Signed summands; the first sign is `false` unless the sum starts
    /// with a unary minus.
    Sum(Vec<(bool, Node)>),
    Product(Vec<Node>),
    LedgerLiteral(Vec<LedgerEntry>),
    RuleDef(Box<Node>, Box<Node>),
}

impl Node {
    pub fn new(kind: NodeKind, span: SourceSpan) -> Self {
        Node { kind, span }
    }

    /// True when the subtree contains a ledger literal or a tensor; such
    /// expressions evaluate to ledgers, everything else to motives.
    pub fn is_ledger_sort(&self) -> bool {
        match &self.kind {
            NodeKind::LedgerLiteral(_) | NodeKind::Tensor(..) => true,
            NodeKind::IntLit(_) | NodeKind::LPow(_) | NodeKind::Atom(_) => false,
            NodeKind::Sym2(e) | NodeKind::Hilb2(_, e) => e.is_ledger_sort(),
            NodeKind::Sum(ts) => ts.iter().any(|(_, t)| t.is_ledger_sort()),
            NodeKind::Product(fs) => fs.iter().any(Node::is_ledger_sort),
            NodeKind::RuleDef(..) => true,
        }
    }
}

/// One line of a check script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    /// `lhs => {ledger}`
    Rule { lhs: Node, rhs: Node },
    /// `order A > B > C`, largest first.
    Order(Vec<String>),
    /// `hh0 A = 3`
    DeclareHh0(String, BigUint),
    /// `euler A = -16`
    DeclareEuler(String, num_bigint::BigInt),
    /// `expect a == b`
    ExpectEqual(Node, Node),
    /// `expect hh0(x) == 65`
    ExpectHh0(Node, BigUint),
    /// `expect euler(x) == 88`
    ExpectEuler(Node, num_bigint::BigInt),
    /// `obstruction x in y [expect OBSTRUCTED|INCONCLUSIVE]`
    Obstruction {
        candidate: Node,
        ambient: Node,
        expect: Option<Verdict>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub stmt: Stmt,
    pub span: SourceSpan,
}
