//! The golden suite run by `verify-all`: ten groups of named checks.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigUint;
use quadflip_core::dsl::{self, Env};
use quadflip_core::fano::{self, Family, FanoParams};
use quadflip_core::hodge::{self, HodgeDiamond};
use quadflip_core::motive::{self, class_of_pn, Motive};
use quadflip_core::sod::{self, Ledger, RuleTable, Verdict};

use crate::builtins::Builtins;
use crate::formats::DiamondFile;
use crate::oracles;
use crate::report::{CheckReport, Provenance};

pub const DEGREE2_SURFACE_SOD: &str = include_str!("../examples/degree2-surface.sod");
pub const TWO_QUADRICS_SOD: &str = include_str!("../examples/two-quadrics-5fold.sod");
pub const QUARTIC_DOUBLE_SOLID_MOT: &str = include_str!("../examples/quartic-double-solid.mot");

#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub reports: Vec<CheckReport>,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

pub const TITLES: [&str; 10] = [
    "Hilbert square of the quartic double solid",
    "surface of lines obstruction",
    "degree 2 del Pezzo surface count",
    "conjecture consistency for odd n",
    "codimension identities",
    "Gr(2,5) dimension table",
    "line splittings",
    "tautological squares on the plane",
    "motivic flip identity",
    "oracle and parser properties",
];

fn load(b: &Builtins, name: &str, tag: &str, out: &mut Vec<CheckReport>) -> Option<DiamondFile> {
    match b.get(name) {
        Ok(f) => Some(f),
        Err(e) => {
            out.push(CheckReport::verdict(
                format!("{tag} load {name}"),
                name,
                "valid diamond",
                format!("error: {e}"),
                false,
                Provenance::Trivial,
            ));
            None
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn c1(b: &Builtins) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let Some(x) = load(b, "quartic-double-solid", "c1", &mut out) else {
        return out;
    };
    let h = match hodge::hilbert_square(&x.diamond) {
        Ok(h) => h,
        Err(e) => {
            out.push(CheckReport::verdict("c1 hilb2", "", "diamond", e.to_string(), false, Provenance::Trivial));
            return out;
        }
    };
    let inputs = "quartic-double-solid";
    out.push(CheckReport::new(
        "c1 hilb2 column",
        inputs,
        "1 2 4 104 4 2 1",
        join(&h.column()),
        Provenance::Literature,
    ));
    out.push(CheckReport::new("c1 hilb2 hh0", inputs, 118, h.hh0(), Provenance::Literature));
    // Euler characteristic through the Grothendieck ring
    let e = x.diamond.euler();
    let mut values = BTreeMap::new();
    values.insert("X".to_string(), e);
    let via_motive = motive::hilbert_square_class(&Motive::atom("X").expect("valid"), x.diamond.dim())
        .and_then(|m| m.specialize(&motive::with_sym2_euler(&values)));
    out.push(CheckReport::new(
        "c1 hilb2 euler, diamond vs motive",
        inputs,
        h.euler(),
        via_motive.map_or_else(|e| format!("error: {e}"), |v| v.to_string()),
        Provenance::Derived,
    ));
    out
}

fn verdict_line(c: &BigUint, a: &BigUint, v: Verdict) -> String {
    let rel = if c > a { ">" } else { "<=" };
    format!("{v} ({c} {rel} {a})")
}

fn c2(b: &Builtins) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let (Some(x), Some(f)) = (
        load(b, "quartic-double-solid", "c2", &mut out),
        load(b, "f1-quartic-double-solid", "c2", &mut out),
    ) else {
        return out;
    };
    let f_hh0 = f.diamond.hh0();
    out.push(CheckReport::new(
        "c2 hh0 surface of lines",
        "f1-quartic-double-solid",
        222,
        &f_hh0,
        Provenance::Literature,
    ));
    if let Ok(h) = hodge::hilbert_square(&x.diamond) {
        let v = sod::embedding_obstruction(&f_hh0, &h);
        out.push(CheckReport::verdict(
            "c2 embedding obstruction",
            "f1-quartic-double-solid in hilb2(quartic-double-solid)",
            "OBSTRUCTED (222 > 118)",
            verdict_line(&f_hh0, &h.hh0(), v),
            v == Verdict::Obstructed,
            Provenance::Literature,
        ));
    }
    out
}

fn c3(b: &Builtins) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let rules = RuleTable::standard();
    let list = vec!["Dpt"; 10];
    let inputs = "10 exceptional objects";
    match sod::sym2_ledger(&list, &rules) {
        Ok(l) => {
            out.push(CheckReport::new("c3 sym2 ledger total", inputs, 65, l.total(), Provenance::Literature));
            out.push(CheckReport::new(
                "c3 sym2 ledger total formula",
                inputs,
                10 * 9 / 2 + 2 * 10,
                l.total(),
                Provenance::Derived,
            ));
            let grouped = sod::sym2_of_ledger(&Ledger::single("Dpt", 10u32), &rules);
            out.push(CheckReport::new(
                "c3 sym2 list loop vs grouped",
                inputs,
                &l,
                grouped.map_or_else(|e| format!("error: {e}"), |g| g.to_string()),
                Provenance::Derived,
            ));
            let v = sod::obstruction_by_hh0(&BigUint::from(56u32), &l.total());
            out.push(CheckReport::verdict(
                "c3 56 lines vs 65 objects",
                inputs,
                "INCONCLUSIVE (56 <= 65)",
                verdict_line(&BigUint::from(56u32), &l.total(), v),
                v == Verdict::Inconclusive,
                Provenance::Literature,
            ));
        }
        Err(e) => out.push(CheckReport::verdict("c3 sym2 ledger", inputs, "ledger", e.to_string(), false, Provenance::Trivial)),
    }
    if let Some(s) = load(b, "dp2-surface", "c3", &mut out) {
        let h = hodge::hilbert_square(&s.diamond).map(|h| h.hh0());
        out.push(CheckReport::new(
            "c3 hh0 hilb2 dp2-surface",
            "dp2-surface",
            65,
            h.map_or_else(|e| format!("error: {e}"), |v| v.to_string()),
            Provenance::Derived,
        ));
    }
    out.extend(script_reports("c3 degree2-surface.sod", DEGREE2_SURFACE_SOD));
    out
}

fn script_reports(name: &str, src: &str) -> Vec<CheckReport> {
    match dsl::run_script(src) {
        Ok(outcomes) => {
            let failed: Vec<String> = outcomes
                .iter()
                .filter(|o| !o.pass)
                .map(|o| format!("line {}: {}", o.line, o.name))
                .collect();
            vec![CheckReport::verdict(
                name,
                name.rsplit(' ').next().unwrap_or(name),
                format!("{} checks pass", outcomes.len()),
                if failed.is_empty() {
                    format!("{} checks pass", outcomes.len())
                } else {
                    format!("failing: {}", failed.join("; "))
                },
                failed.is_empty() && !outcomes.is_empty(),
                Provenance::Derived,
            )]
        }
        Err(e) => vec![CheckReport::verdict(name, "", "script runs", e.to_string(), false, Provenance::Trivial)],
    }
}

fn c4() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for row in sod::conjecture_consistency(15) {
        let name = format!("c4 hilb2 = fano + pencil, n = {}", row.n);
        if !row.in_range {
            out.push(CheckReport::verdict(
                format!("c4 n = {} skipped", row.n),
                format!("n = {}", row.n),
                "outside n >= 5",
                "outside n >= 5",
                row.n < 5,
                Provenance::Derived,
            ));
            continue;
        }
        out.push(CheckReport::new(name, format!("n = {}", row.n), &row.hilb2, &row.sum, Provenance::Derived));
    }
    let (fano5, _) = sod::fano_conjecture_ledger(5);
    let pencil5 = sod::pencil_conjecture_ledger(5);
    out.push(CheckReport::new(
        "c4 n = 5 copies of D(C)",
        "n = 5",
        "8 = 2 + 6",
        format!(
            "{} = {} + {}",
            fano5.get("DC") + pencil5.get("DC"),
            fano5.get("DC"),
            pencil5.get("DC")
        ),
        Provenance::Literature,
    ));
    out.push(CheckReport::new(
        "c4 n = 5 exceptional objects",
        "n = 5",
        "26 = 2 + 24",
        format!(
            "{} = {} + {}",
            fano5.get("Dpt") + pencil5.get("Dpt"),
            fano5.get("Dpt"),
            pencil5.get("Dpt")
        ),
        Provenance::Literature,
    ));
    out.extend(script_reports("c4 two-quadrics-5fold.sod", TWO_QUADRICS_SOD));
    out
}

fn c5() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for family in [Family::Cubic, Family::TwoQuadrics, Family::Gr25] {
        let grid = fano::codim_grid(family);
        let failing: Vec<String> = grid
            .iter()
            .filter(|r| !r.pass())
            .map(|r| format!("(n={}, k={})", r.params.n, r.params.k))
            .collect();
        let checks: usize = grid.iter().map(|r| r.checks.len()).sum();
        out.push(CheckReport::verdict(
            format!("c5 codim grid {}", family.name()),
            format!("{} cases", grid.len()),
            format!("{checks} identities hold"),
            if failing.is_empty() {
                format!("{checks} identities hold")
            } else {
                format!("failing at {}", failing.join(" "))
            },
            failing.is_empty() && !grid.is_empty(),
            Provenance::Derived,
        ));
    }
    for family in [Family::Cubic, Family::TwoQuadrics] {
        let mut bad = Vec::new();
        for k in 0..=6u32 {
            for c in fano::symbolic_identities(family, k).unwrap_or_default() {
                if !c.pass() {
                    bad.push(format!("k={k} {}: {} vs {}", c.name, c.lhs, c.rhs));
                }
            }
        }
        out.push(CheckReport::verdict(
            format!("c5 symbolic identities {}", family.name()),
            "k = 0..6, polynomials in n",
            "all equal",
            if bad.is_empty() { "all equal".to_string() } else { bad.join("; ") },
            bad.is_empty(),
            Provenance::Derived,
        ));
    }
    let closed = |k: u32| -> String {
        (2..=6u32)
            .filter_map(|n| fano::gr25_identities(n, k).ok())
            .flat_map(|cs| cs.into_iter().filter(|c| c.name == "codim formula closed form"))
            .map(|c| format!("{}", c.lhs))
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push(CheckReport::new("c5 gr25 k = 0 gives 2n - 3", "n = 2..6", "1 3 5 7 9", closed(0), Provenance::Literature));
    out.push(CheckReport::new("c5 gr25 k = 1 gives 3n - 11", "n = 4..6", "1 4 7", closed(1), Provenance::Literature));
    out
}

fn show(v: Option<u32>) -> String {
    v.map_or_else(|| "empty".to_string(), |d| d.to_string())
}

pub fn gr25_row_text(n: u32) -> String {
    match fano::gr25_row(n) {
        Ok(r) => format!("({}, {}, {}, {})", show(r.f1), show(r.f2_sigma), show(r.f2_tau), show(r.f3)),
        Err(e) => format!("error: {e}"),
    }
}

fn c6() -> Vec<CheckReport> {
    let expected = [
        "(0, empty, empty, empty)",
        "(2, empty, empty, empty)",
        "(4, 1, 0, empty)",
        "(6, 4, 3, 0)",
        "(8, 7, 6, 4)",
    ];
    let mut out = Vec::new();
    for (n, want) in (2..=6u32).zip(expected) {
        out.push(CheckReport::new(
            format!("c6 gr25 row dim X = {n}"),
            "F1, F2 sigma, F2 tau, F3",
            want,
            gr25_row_text(n),
            Provenance::Literature,
        ));
    }
    let regimes: Vec<String> = (2..=6u32)
        .map(|n| {
            FanoParams::new(Family::Gr25, n, 2)
                .map(|p| fano::emptiness_threshold(p).to_string())
                .unwrap_or_else(|e| e.to_string())
        })
        .collect();
    out.push(CheckReport::new(
        "c6 gr25 k = 2 regimes",
        "dim X = 2..6",
        "isomorphism isomorphism isomorphism disjoint-union disjoint-union",
        regimes.join(" "),
        Provenance::Literature,
    ));
    out
}

fn c7() -> Vec<CheckReport> {
    let counts: Vec<usize> = (2..=30).map(|n| fano::enumerate_line_splittings(n).len()).collect();
    let want: Vec<usize> = (2..=30).map(|n| if n == 2 { 1 } else { 2 }).collect();
    let brute_agrees = (2..=30).all(|n| fano::brute_force_line_splittings(n, -10) == fano::enumerate_line_splittings(n));
    let restriction_ok = (2..=30u32).all(|n| {
        fano::enumerate_line_splittings(n)
            .iter()
            .all(|s| fano::hilb2_normal_restriction(s).as_ref() == Some(&fano::expected_hilb2_restriction(n)))
    });
    let shapes_ok = (2..=30u32).all(|n| {
        fano::enumerate_line_splittings(n)
            .iter()
            .all(|s| s.rank() == (n - 1) as usize && s.total_degree() == n as i64 - 3)
    });
    vec![
        CheckReport::new("c7 number of splitting types", "n = 2..30", join(&want), join(&counts), Provenance::Literature),
        CheckReport::new("c7 rank n-1 and degree n-3", "n = 2..30", true, shapes_ok, Provenance::Trivial),
        CheckReport::new("c7 brute force over [-10, 1]", "n = 2..30", true, brute_agrees, Provenance::Derived),
        CheckReport::new("c7 hilb2 restriction O(-1)^2 + O^(2n-4)", "n = 2..30", true, restriction_ok, Provenance::Literature),
    ]
}

fn c8() -> Vec<CheckReport> {
    (-1..=1)
        .map(|d| {
            let rows = fano::verify_taut_splitting(d, -5..=5).unwrap_or_default();
            let bundle = fano::tautological_square(d).map_or_else(String::new, |s| s.to_string());
            let bad: Vec<String> = rows.iter().filter(|r| !r.pass()).map(|r| format!("m={}", r.m)).collect();
            CheckReport::verdict(
                format!("c8 O({d})^[2] = {bundle}"),
                "m = -5..5",
                "11 twists agree, H^1 = 0",
                if bad.is_empty() && rows.len() == 11 {
                    "11 twists agree, H^1 = 0".to_string()
                } else {
                    format!("failing at {}", bad.join(" "))
                },
                bad.is_empty() && rows.len() == 11,
                Provenance::Literature,
            )
        })
        .collect()
}

fn c9() -> Vec<CheckReport> {
    let f = Motive::atom("F").expect("valid");
    let x = Motive::atom("X").expect("valid");
    let mut derivation = true;
    let mut diagonal = true;
    for r in 0..=5u32 {
        for s in 0..=5u32 {
            let x_prime = &x - &motive::flip_difference(&f, r, s);
            let lhs = &x + &(&f * &class_of_pn(r)) * &(class_of_pn(s) - Motive::one());
            let rhs = &x_prime + &(&f * &class_of_pn(s)) * &(class_of_pn(r) - Motive::one());
            derivation &= lhs == rhs;
        }
        diagonal &= motive::flip_difference(&f, r, r).is_zero();
    }
    let sym_p1 = motive::sym2_class(&class_of_pn(1)).map_or_else(|e| e.to_string(), |m| m.to_string());
    let p2_hilb = motive::hilbert_square_class(&class_of_pn(2), 2)
        .ok()
        .and_then(|m| m.l_coefficients())
        .map_or_else(|| "not a polynomial in L".to_string(), |c| join(&c));
    vec![
        CheckReport::new("c9 flip derivation", "r, s = 0..5", true, derivation, Provenance::Derived),
        CheckReport::new("c9 flip_difference(F, r, r) = 0", "r = 0..5", true, diagonal, Provenance::Trivial),
        CheckReport::new("c9 Sym2 [P1] = [P2]", "[P1]", class_of_pn(2), sym_p1, Provenance::Trivial),
        CheckReport::new("c9 [P2^[2]] coefficients", "[P2]", "1 2 3 2 1", p2_hilb, Provenance::Literature),
    ]
    .into_iter()
    .chain(script_reports("c9 quartic-double-solid.mot", QUARTIC_DOUBLE_SOLID_MOT))
    .collect()
}

fn c10() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let curves_ok = (0..=4).all(|g| {
        let c = HodgeDiamond::curve(g);
        hodge::sym2(&c) == oracles::sym2_signed_basis(&c)
    });
    out.push(CheckReport::new("c10 sym2 oracle, curves", "genus 0..4", true, curves_ok, Provenance::Derived));

    let mut rng = oracles::rng(0x5eed);
    let diamonds: Vec<HodgeDiamond> = (0..50).map(|_| oracles::small_diamond(&mut rng)).collect();
    let random_ok = diamonds.iter().filter(|a| hodge::sym2(a) == oracles::sym2_signed_basis(a)).count();
    out.push(CheckReport::new("c10 sym2 oracle, random", "50 diamonds, total <= 8", 50, random_ok, Provenance::Derived));
    let split_ok = diamonds.iter().all(|a| {
        let square = hodge::kunneth(a, a);
        let (s, t) = (hodge::sym2(a), hodge::alt2(a));
        let n = 2 * a.dim() as i64;
        (0..=n).all(|p| (0..=n).all(|q| s.get(p, q) + t.get(p, q) == square.get(p, q)))
    });
    out.push(CheckReport::new("c10 sym2 + alt2 = kunneth", "50 diamonds", true, split_ok, Provenance::Derived));

    let env = Env::default();
    let mut trips = 0;
    for _ in 0..1000 {
        let m = oracles::motive(&mut rng);
        let ok_m = dsl::parse(&dsl::print_motive(&m))
            .ok()
            .and_then(|n| dsl::eval_motive(&n).ok())
            .is_some_and(|back| back == m);
        let l = oracles::ledger(&mut rng);
        let ok_l = dsl::parse(&dsl::print_ledger(&l))
            .ok()
            .and_then(|n| dsl::eval_ledger(&n, &env).ok())
            .is_some_and(|back| back == l);
        trips += usize::from(ok_m && ok_l);
    }
    out.push(CheckReport::new("c10 parser round trip", "1000 motives and 1000 ledgers", 1000, trips, Provenance::Trivial));

    let mut crashes = 0;
    let hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    for _ in 0..10_000 {
        let s = oracles::fuzz_input(&mut rng, 4096);
        let r = catch_unwind(AssertUnwindSafe(|| {
            let _ = dsl::parse(&s);
            let _ = dsl::parse_script(&s);
        }));
        crashes += usize::from(r.is_err());
    }
    std::panic::set_hook(hook);
    out.push(CheckReport::new("c10 parser fuzz crashes", "10^4 inputs <= 4 KiB", 0, crashes, Provenance::Trivial));
    out
}

pub fn run_criterion(id: u8, b: &Builtins) -> Criterion {
    let reports = match id {
        1 => c1(b),
        2 => c2(b),
        3 => c3(b),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        _ => Vec::new(),
    };
    Criterion {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or(""),
        reports,
    }
}

pub fn run_all(b: &Builtins) -> Vec<Criterion> {
    (1..=10).map(|id| run_criterion(id, b)).collect()
}
