use alloc::format;
use alloc::string::{String, ToString};

use super::ast::{Node, NodeKind};
use crate::motive::Motive;
use crate::sod::Ledger;

/// Canonical text of a motive: monomials ascending, constants first.
pub fn print_motive(m: &Motive) -> String {
    m.to_string()
}

/// Canonical text of a ledger: `{A:1, B:2}` with names in byte order.
pub fn print_ledger(l: &Ledger) -> String {
    l.to_string()
}

fn needs_parens(n: &Node) -> bool {
    matches!(n.kind, NodeKind::Sum(_) | NodeKind::Product(_))
}

fn wrapped(n: &Node) -> String {
    if needs_parens(n) {
        format!("({})", print_ast(n))
    } else {
        print_ast(n)
    }
}

/// Text for a syntax tree; parsing it back gives an equal tree.
pub fn print_ast(n: &Node) -> String {
    match &n.kind {
        NodeKind::IntLit(v) => v.to_string(),
        NodeKind::LPow(1) => String::from("L"),
        NodeKind::LPow(k) => format!("L^{k}"),
        NodeKind::Atom(a) => a.clone(),
        NodeKind::Sym2(e) => format!("Sym2({})", print_ast(e)),
        NodeKind::Hilb2(k, e) => format!("Hilb2({k}, {})", print_ast(e)),
        NodeKind::Tensor(a, b) => format!("{a} (*) {b}"),
        NodeKind::Sum(terms) => {
            let mut s = String::new();
            for (i, (neg, t)) in terms.iter().enumerate() {
                let body = if matches!(t.kind, NodeKind::Sum(_)) {
                    format!("({})", print_ast(t))
                } else {
                    print_ast(t)
                };
                match (i, neg) {
                    (0, true) => s.push('-'),
                    (0, false) => {}
                    (_, true) => s.push_str(" - "),
                    (_, false) => s.push_str(" + "),
                }
                s.push_str(&body);
            }
            s
        }
        NodeKind::Product(fs) => fs.iter().map(wrapped).collect::<alloc::vec::Vec<_>>().join("*"),
        NodeKind::LedgerLiteral(es) => {
            let inner: alloc::vec::Vec<String> =
                es.iter().map(|e| format!("{}:{}", e.name, e.mult)).collect();
            format!("{{{}}}", inner.join(", "))
        }
        NodeKind::RuleDef(l, r) => format!("{} => {}", print_ast(l), print_ast(r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parser::parse;
    use crate::motive::{class_of_pn, Motive};

    #[test]
    fn examples() {
        let m = Motive::one() + Motive::lefschetz(1).scale(&2.into()) + Motive::lefschetz(2);
        assert_eq!(print_motive(&m), "1 + 2*L + L^2");
        assert_eq!(print_ledger(&Ledger::from_pairs([("Dpt", 65)])), "{Dpt:65}");
        assert_eq!(print_ledger(&Ledger::new()), "{}");
        assert_eq!(print_motive(&class_of_pn(0)), "1");
    }

    #[test]
    fn ast_round_trip() {
        for s in [
            "1 + L + L^2",
            "-(A + B)*C - (1 - L)",
            "Sym2(DC) => {DSym2C:1, DC:1}",
            "Hilb2(3, X) - Sym2(X)",
            "2*(DC (*) Dpt) + {}",
            "((A*B)*C)",
        ] {
            let a = parse(s).unwrap();
            let printed = print_ast(&a);
            assert_eq!(parse(&printed).unwrap(), a, "{s} -> {printed}");
        }
    }
}
