//! A small text language for motives, ledgers and decomposition rules, and
//! declarative check scripts built from it (`.mot` and `.sod` files).
//!
//! Expressions containing a ledger literal `{A:1, B:2}` or a tensor
//! `A (*) B` evaluate to ledgers; all others evaluate to motives.

mod ast;
mod eval;
mod lexer;
mod parser;
mod print;

pub use ast::{LedgerEntry, Node, NodeKind, Statement, Stmt};
pub use eval::{
    eval, eval_ledger, eval_motive, run_script, run_statement, CheckOutcome, Env, EvalError,
    ScriptError, Value,
};
pub use lexer::SourceSpan;
pub use parser::{parse, parse_script, ParseError, MAX_DEPTH};
pub use print::{print_ast, print_ledger, print_motive};
