//! Evaluation of expressions and check scripts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::ast::{Node, NodeKind, Statement, Stmt};
use super::lexer::SourceSpan;
use super::parser::{parse_script, ParseError};
use super::print::{print_ast, print_ledger, print_motive};
use crate::motive::{self, Motive};
use crate::sod::{self, Ledger, RuleTable, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub span: SourceSpan,
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

impl core::error::Error for EvalError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptError {
    Parse(ParseError),
    Eval(EvalError),
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptError::Parse(e) => write!(f, "parse error at {e}"),
            ScriptError::Eval(e) => write!(f, "error at {e}"),
        }
    }
}

impl core::error::Error for ScriptError {}

fn err(span: SourceSpan, message: impl fmt::Display) -> EvalError {
    EvalError {
        span,
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Motive(Motive),
    Ledger(Ledger),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Motive(m) => f.write_str(&print_motive(m)),
            Value::Ledger(l) => f.write_str(&print_ledger(l)),
        }
    }
}

/// Rules and per-atom invariants a script accumulates.
#[derive(Debug, Clone)]
pub struct Env {
    pub rules: RuleTable,
    pub hh0: BTreeMap<String, BigInt>,
    pub euler: BTreeMap<String, BigInt>,
}

impl Default for Env {
    /// Standard tensor and `Sym2` rules; `hh0(Dpt) = 1`.
    fn default() -> Self {
        let mut hh0 = BTreeMap::new();
        hh0.insert(String::from("Dpt"), BigInt::one());
        Env {
            rules: RuleTable::standard(),
            hh0,
            euler: BTreeMap::new(),
        }
    }
}

/// Evaluates with sort inference: ledger literals and tensors make a
/// ledger, everything else is a motive.
pub fn eval(node: &Node, env: &Env) -> Result<Value, EvalError> {
    if node.is_ledger_sort() {
        eval_ledger(node, env).map(|l| Value::Ledger(env.rules.normalize(&l)))
    } else {
        eval_motive(node).map(Value::Motive)
    }
}

pub fn eval_motive(node: &Node) -> Result<Motive, EvalError> {
    let span = node.span;
    match &node.kind {
        NodeKind::IntLit(v) => Ok(Motive::term(
            BigInt::from(v.clone()),
            motive::Monomial::unit(),
        )),
        NodeKind::LPow(k) => Ok(Motive::lefschetz(*k)),
        NodeKind::Atom(a) => Motive::atom(a).map_err(|e| err(span, e)),
        NodeKind::Sym2(e) => motive::sym2_class(&eval_motive(e)?).map_err(|e| err(span, e)),
        NodeKind::Hilb2(n, e) => {
            motive::hilbert_square_class(&eval_motive(e)?, *n).map_err(|e| err(span, e))
        }
        NodeKind::Sum(terms) => {
            let mut acc = Motive::zero();
            for (neg, t) in terms {
                let v = eval_motive(t)?;
                acc = if *neg { acc - v } else { acc + v };
            }
            Ok(acc)
        }
        NodeKind::Product(fs) => {
            let mut acc = Motive::one();
            for f in fs {
                acc = acc * eval_motive(f)?;
            }
            Ok(acc)
        }
        NodeKind::Tensor(..) | NodeKind::LedgerLiteral(_) | NodeKind::RuleDef(..) => {
            Err(err(span, "expected a motive expression, found a ledger"))
        }
    }
}

fn literal(node: &Node) -> Result<Ledger, EvalError> {
    let NodeKind::LedgerLiteral(entries) = &node.kind else {
        return Err(err(node.span, "expected a ledger literal"));
    };
    let mut out = Ledger::new();
    for e in entries {
        if entries.iter().filter(|x| x.name == e.name).count() > 1 {
            return Err(err(e.span, format!("atom {} listed twice", e.name)));
        }
        out.add(&e.name, e.mult.clone());
    }
    Ok(out)
}

pub fn eval_ledger(node: &Node, env: &Env) -> Result<Ledger, EvalError> {
    let span = node.span;
    let rules = &env.rules;
    match &node.kind {
        NodeKind::LedgerLiteral(_) => literal(node),
        NodeKind::Atom(a) => Ok(Ledger::single(a, 1u32)),
        NodeKind::Tensor(a, b) => rules
            .tensor_rule(a, b)
            .cloned()
            .ok_or_else(|| err(span, format!("unresolved pair: no rule for {a} (*) {b}"))),
        NodeKind::Sym2(e) => {
            let inner = rules.normalize(&eval_ledger(e, env)?);
            sod::sym2_of_ledger(&inner, rules).map_err(|e| err(span, e))
        }
        NodeKind::Hilb2(n, e) => {
            let inner = rules.normalize(&eval_ledger(e, env)?);
            sod::hilb2_ledger(&inner, *n as u64, rules).map_err(|e| err(span, e))
        }
        NodeKind::Sum(terms) => {
            let mut acc = Ledger::new();
            for (neg, t) in terms {
                let v = eval_ledger(t, env)?;
                acc = if *neg {
                    sod::ledger_subtract(&rules.normalize(&acc), &rules.normalize(&v))
                        .map_err(|e| err(t.span, e))?
                } else {
                    acc.plus(&v)
                };
            }
            Ok(acc)
        }
        NodeKind::Product(fs) => {
            let mut scale = BigUint::one();
            let mut ledger: Option<Ledger> = None;
            for f in fs {
                match &f.kind {
                    NodeKind::IntLit(v) => scale *= v,
                    _ if ledger.is_none() => ledger = Some(eval_ledger(f, env)?),
                    _ => return Err(err(f.span, "ledgers can only be multiplied by integers")),
                }
            }
            let l = ledger.ok_or_else(|| err(span, "expected a ledger, found an integer"))?;
            Ok(l.scale(&scale))
        }
        NodeKind::IntLit(_) => Err(err(span, "expected a ledger, found an integer")),
        NodeKind::LPow(_) => Err(err(span, "L has no meaning in a ledger")),
        NodeKind::RuleDef(..) => Err(err(span, "a rule is not a value")),
    }
}

/// Outcome of one `expect` or `obstruction` statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub line: u32,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn hh0_of(node: &Node, env: &Env) -> Result<BigInt, EvalError> {
    let l = env.rules.normalize(&eval_ledger(node, env)?);
    sod::additive_invariant(&l, &env.hh0).map_err(|e| err(node.span, e))
}

fn apply_rule(lhs: &Node, rhs: &Node, env: &mut Env) -> Result<(), EvalError> {
    let rhs = literal(rhs)?;
    match &lhs.kind {
        NodeKind::Atom(a) => env.rules.set_atom_rule(a, rhs).map_err(|e| err(lhs.span, e)),
        NodeKind::Tensor(a, b) => {
            env.rules.set_tensor(a, b, rhs);
            Ok(())
        }
        NodeKind::Sym2(inner) => match &inner.kind {
            NodeKind::Atom(a) => {
                env.rules.set_sym2(a, rhs);
                Ok(())
            }
            _ => Err(err(inner.span, "Sym2 rules apply to a single atom")),
        },
        _ => Err(err(
            lhs.span,
            "a rule's left side must be an atom, Sym2(atom) or atom (*) atom",
        )),
    }
}

/// Runs one statement, returning a check outcome for `expect` and
/// `obstruction` lines.
pub fn run_statement(s: &Statement, env: &mut Env) -> Result<Option<CheckOutcome>, EvalError> {
    let line = s.span.line;
    let outcome = |name: String, expected: String, computed: String, pass: bool| {
        Some(CheckOutcome {
            line,
            name,
            expected,
            computed,
            pass,
        })
    };
    Ok(match &s.stmt {
        Stmt::Rule { lhs, rhs } => {
            apply_rule(lhs, rhs, env)?;
            None
        }
        Stmt::Order(atoms) => {
            env.rules
                .set_order(atoms.clone())
                .map_err(|e| err(s.span, e))?;
            None
        }
        Stmt::DeclareHh0(a, v) => {
            env.hh0.insert(a.clone(), BigInt::from(v.clone()));
            None
        }
        Stmt::DeclareEuler(a, v) => {
            env.euler.insert(a.clone(), v.clone());
            None
        }
        Stmt::ExpectEqual(a, b) => {
            let name = format!("{} == {}", print_ast(a), print_ast(b));
            let (va, vb) = if a.is_ledger_sort() || b.is_ledger_sort() {
                let n = |x: &Node| -> Result<Value, EvalError> {
                    Ok(Value::Ledger(env.rules.normalize(&eval_ledger(x, env)?)))
                };
                (n(a)?, n(b)?)
            } else {
                (Value::Motive(eval_motive(a)?), Value::Motive(eval_motive(b)?))
            };
            let pass = va == vb;
            outcome(name, vb.to_string(), va.to_string(), pass)
        }
        Stmt::ExpectHh0(e, v) => {
            let got = hh0_of(e, env)?;
            let want = BigInt::from(v.clone());
            outcome(
                format!("hh0({})", print_ast(e)),
                want.to_string(),
                got.to_string(),
                got == want,
            )
        }
        Stmt::ExpectEuler(e, want) => {
            let m = eval_motive(e)?;
            let values = motive::with_sym2_euler(&env.euler);
            let got = m.specialize(&values).map_err(|x| err(e.span, x))?;
            outcome(
                format!("euler({})", print_ast(e)),
                want.to_string(),
                got.to_string(),
                &got == want,
            )
        }
        Stmt::Obstruction {
            candidate,
            ambient,
            expect,
        } => {
            let c = hh0_of(candidate, env)?;
            let a = hh0_of(ambient, env)?;
            let verdict = if c > a {
                Verdict::Obstructed
            } else {
                Verdict::Inconclusive
            };
            let rel = if c > a { ">" } else { "<=" };
            let computed = format!("{verdict} ({c} {rel} {a})");
            let expected = expect.map_or(verdict, |v| v);
            outcome(
                format!("obstruction {} in {}", print_ast(candidate), print_ast(ambient)),
                expected.to_string(),
                computed,
                expected == verdict,
            )
        }
    })
}

/// Parses and runs a whole script with the default environment.
pub fn run_script(src: &str) -> Result<Vec<CheckOutcome>, ScriptError> {
    let stmts = parse_script(src).map_err(ScriptError::Parse)?;
    let mut env = Env::default();
    let mut out = Vec::new();
    for s in &stmts {
        if let Some(o) = run_statement(s, &mut env).map_err(ScriptError::Eval)? {
            out.push(o);
        }
    }
    Ok(out)
}
