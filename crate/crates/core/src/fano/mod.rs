//! Fano schemes of planes on del Pezzo varieties of degree 3, 4 and 5:
//! expected dimensions, emptiness regimes, the dimension identities behind
//! the flips of Hilbert schemes of quadrics, flip shapes and the resulting
//! decomposition counts.
//!
//! The formulas are written once over [`Ring`], so the same code evaluates
//! at an integer `n` and as a polynomial in `n`.

mod poly;
mod splitting;

pub use poly::{Poly, Ring};
pub use splitting::{
    brute_force_line_splittings, enumerate_line_splittings, expected_hilb2_restriction, h_p1,
    h_p1xp1, h_p2, h_p2_split, hilb2_normal_restriction, tautological_square,
    verify_taut_splitting, Splitting, TautRow,
};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::sod::Ledger;
use crate::util::binomial_i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("k = {k} exceeds n = {n}")]
    KAboveN { n: u32, k: u32 },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("linear sections of Gr(2,5) have dimension 2..=6, got {0}")]
    Gr25OutOfRange(u32),
    #[error("degree {0} is outside 1..=9")]
    DegreeOutOfRange(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Cubic hypersurface in `P^{n+1}`.
    Cubic,
    /// Complete intersection of two quadrics in `P^{n+2}`.
    TwoQuadrics,
    /// Linear section of `Gr(2,5) ⊂ P^9`.
    Gr25,
}

impl Family {
    pub fn degree(self) -> u32 {
        match self {
            Family::Cubic => 3,
            Family::TwoQuadrics => 4,
            Family::Gr25 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Cubic => "cubic",
            Family::TwoQuadrics => "two-quadrics",
            Family::Gr25 => "gr25",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "cubic" => Some(Family::Cubic),
            "two-quadrics" | "quadrics" => Some(Family::TwoQuadrics),
            "gr25" => Some(Family::Gr25),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `X` of dimension `n` in the given family, and the quadric dimension `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FanoParams {
    pub family: Family,
    pub n: u32,
    pub k: u32,
}

impl FanoParams {
    pub fn new(family: Family, n: u32, k: u32) -> Result<Self, FanoError> {
        if n == 0 {
            return Err(FanoError::ZeroDimension);
        }
        if k > n {
            return Err(FanoError::KAboveN { n, k });
        }
        if family == Family::Gr25 && !(2..=6).contains(&n) {
            return Err(FanoError::Gr25OutOfRange(n));
        }
        Ok(FanoParams { family, n, k })
    }
}

fn c(n: i64, k: i64) -> i64 {
    binomial_i64(n, k)
}

/// Expected dimension of the Fano scheme of `j`-planes on a cubic.
pub fn cubic_fano_dim<R: Ring>(n: R, j: i64) -> R {
    R::from_i64(j + 1) * (n + R::from_i64(1 - j)) - R::from_i64(c(j + 3, 3))
}

/// Expected dimension of the Fano scheme of `j`-planes on an intersection of
/// two quadrics.
pub fn two_quadrics_fano_dim<R: Ring>(n: R, j: i64) -> R {
    R::from_i64(j + 1) * (n + R::from_i64(2 - j)) - R::from_i64(2 * c(j + 2, 2))
}

/// Rows `F_1, F_2^σ, F_2^τ, F_3` for `dim X = 2..=6`; `None` is empty.
const GR25_TABLE: [[Option<u32>; 5]; 4] = [
    [Some(0), Some(2), Some(4), Some(6), Some(8)],
    [None, None, Some(1), Some(4), Some(7)],
    [None, None, Some(0), Some(3), Some(6)],
    [None, None, None, Some(0), Some(4)],
];

/// Dimensions of the Fano schemes of a linear section of `Gr(2,5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gr25Row {
    pub n: u32,
    pub f1: Option<u32>,
    pub f2_sigma: Option<u32>,
    pub f2_tau: Option<u32>,
    pub f3: Option<u32>,
}

impl Gr25Row {
    /// `F_2` is the disjoint union of its σ- and τ-components.
    pub fn f2_is_disjoint_union(&self) -> bool {
        self.f2_sigma.is_some() && self.f2_tau.is_some()
    }
}

pub fn gr25_row(n: u32) -> Result<Gr25Row, FanoError> {
    if !(2..=6).contains(&n) {
        return Err(FanoError::Gr25OutOfRange(n));
    }
    let i = (n - 2) as usize;
    Ok(Gr25Row {
        n,
        f1: GR25_TABLE[0][i],
        f2_sigma: GR25_TABLE[1][i],
        f2_tau: GR25_TABLE[2][i],
        f3: GR25_TABLE[3][i],
    })
}

/// Dimension of a Fano scheme of planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanoDim {
    /// Value of the expected-dimension formula; negative means empty.
    Expected(i64),
    /// Table value, `None` when empty.
    Table(Option<u32>),
    /// Table values of the σ and τ components.
    Split {
        sigma: Option<u32>,
        tau: Option<u32>,
    },
}

impl FanoDim {
    pub fn is_empty(&self) -> bool {
        match *self {
            FanoDim::Expected(d) => d < 0,
            FanoDim::Table(d) => d.is_none(),
            FanoDim::Split { sigma, tau } => sigma.is_none() && tau.is_none(),
        }
    }

    /// The largest component dimension, if nonempty.
    pub fn value(&self) -> Option<i64> {
        match *self {
            FanoDim::Expected(d) => (d >= 0).then_some(d),
            FanoDim::Table(d) => d.map(i64::from),
            FanoDim::Split { sigma, tau } => sigma.max(tau).map(i64::from),
        }
    }
}

impl fmt::Display for FanoDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u32>| match v {
            Some(d) => format!("{d}"),
            None => String::from("empty"),
        };
        match *self {
            FanoDim::Expected(d) if d < 0 => write!(f, "{d} (empty)"),
            FanoDim::Expected(d) => write!(f, "{d}"),
            FanoDim::Table(d) => f.write_str(&show(d)),
            FanoDim::Split { sigma, tau } => {
                write!(f, "sigma {} / tau {}", show(sigma), show(tau))
            }
        }
    }
}

/// Dimension of the Fano scheme of `j`-planes on `X`.
pub fn expected_dim_fano(family: Family, n: u32, j: u32) -> Result<FanoDim, FanoError> {
    let (ni, ji) = (n as i64, j as i64);
    Ok(match family {
        Family::Cubic => FanoDim::Expected(cubic_fano_dim(ni, ji)),
        Family::TwoQuadrics => FanoDim::Expected(two_quadrics_fano_dim(ni, ji)),
        Family::Gr25 => {
            let row = gr25_row(n)?;
            match j {
                0 => FanoDim::Table(Some(n)),
                1 => FanoDim::Table(row.f1),
                2 => FanoDim::Split {
                    sigma: row.f2_sigma,
                    tau: row.f2_tau,
                },
                3 => FanoDim::Table(row.f3),
                _ => FanoDim::Table(None),
            }
        }
    })
}

/// What happens to the Hilbert scheme `G_k(X)` of `k`-dimensional quadrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `F_k` and `F_{k+1}` nonempty: a genuine standard flip.
    Flip,
    /// `F_{k+1}` empty: the flip degenerates to an isomorphism with the
    /// bundle side.
    Isomorphism,
    /// The bundle side is empty, hence so is `G_k`.
    Empty,
    /// Linear sections of `Gr(2,5)` at `k = 2` with `F_3` nonempty: `G_2`
    /// splits into two components and there is no flip.
    DisjointUnion,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Flip => "flip",
            Regime::Isomorphism => "isomorphism",
            Regime::Empty => "empty",
            Regime::DisjointUnion => "disjoint-union",
        })
    }
}

/// Classifies `(n, k)` by the emptiness thresholds. All comparisons are
/// cleared of denominators.
pub fn emptiness_threshold(p: FanoParams) -> Regime {
    let (n, k) = (p.n as i64, p.k as i64);
    match p.family {
        Family::Cubic => {
            // F_k empty iff n < k + (k+3)(k+2)/6 - 1
            if 6 * n < 6 * k + (k + 3) * (k + 2) - 6 {
                Regime::Empty
            // F_{k+1} empty iff n < k + (k+4)(k+3)/6
            } else if 6 * n < 6 * k + (k + 4) * (k + 3) {
                Regime::Isomorphism
            } else {
                Regime::Flip
            }
        }
        Family::TwoQuadrics => {
            // OGr(k+2) empty iff n < k - 1 + (k+3)/2
            if 2 * n < 3 * k + 1 {
                Regime::Empty
            } else if n < 2 * k + 2 {
                Regime::Isomorphism
            } else {
                Regime::Flip
            }
        }
        Family::Gr25 => {
            let row = gr25_row(p.n).expect("validated by FanoParams");
            match p.k {
                0 if row.f1.is_some() => Regime::Flip,
                1 if row.f2_sigma.is_some() => Regime::Flip,
                2 if row.f3.is_some() => Regime::DisjointUnion,
                _ => Regime::Isomorphism,
            }
        }
    }
}

/// One side-by-side comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check<R> {
    pub name: String,
    pub lhs: R,
    pub rhs: R,
}

impl<R: PartialEq> Check<R> {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check<R>(name: &str, lhs: R, rhs: R) -> Check<R> {
    Check {
        name: String::from(name),
        lhs,
        rhs,
    }
}

/// Dimension chain for the cubic: `Y' = P(Q_{k+1})` over `F_k`, and
/// `Z' = F_{k,k+1}`, a `P^{k+1}`-bundle over `F_{k+1}`.
pub fn cubic_identities<R: Ring>(n: R, k: i64) -> Vec<Check<R>> {
    let r = |v: i64| R::from_i64(v);
    let dim_fk = cubic_fano_dim(n.clone(), k);
    let dim_fk1 = cubic_fano_dim(n.clone(), k + 1);
    let dim_y = dim_fk.clone() + n.clone() - r(k);
    let dim_z = dim_fk1.clone() + r(k + 1);
    let rank = r(c(k + 3, 2));
    let z_first = r(k + 2) * (n.clone() - r(k)) - r(c(k + 4, 3)) + r(k + 1);
    let z_second =
        r(k + 1) * (n.clone() + r(1 - k)) - r(c(k + 3, 3)) + (n.clone() - r(k)) - r(c(k + 3, 2));
    alloc::vec![
        check("dim Z' rewritten", z_first.clone(), z_second),
        check("dim Z' from F_{k+1}", dim_z.clone(), z_first),
        check("codim Z' = rank Sym2 U", dim_y - dim_z, rank),
        check(
            "h0 N_{P/X} = dim F_{k+1}",
            r(k + 2) * (n - r(k)) - r(c(k + 4, 3)),
            dim_fk1,
        ),
    ]
}

/// Dimension chain for two quadrics: `Y' = OGr(k+2, 𝔔)` over the pencil and
/// `Z' = F_{k+1} × P¹`.
pub fn two_quadrics_identities<R: Ring>(n: R, k: i64) -> Vec<Check<R>> {
    let r = |v: i64| R::from_i64(v);
    let dim_fk1 = two_quadrics_fano_dim(n.clone(), k + 1);
    let base = r(k + 2) * (n.clone() - r(k) + r(1));
    let dim_y = base.clone() - r(c(k + 3, 2)) + r(1);
    let dim_z = dim_fk1.clone() + r(1);
    let rank = r(c(k + 3, 2));
    let z_first = base.clone() - r(2 * c(k + 3, 2)) + r(1);
    let z_second = base.clone() - r(c(k + 3, 2)) + r(1) - r(c(k + 3, 2));
    alloc::vec![
        check("dim Z' rewritten", z_first.clone(), z_second),
        check("dim Z' from F_{k+1}", dim_z.clone(), z_first),
        check("codim Z' = rank Sym2 U", dim_y - dim_z, rank),
        check(
            "h0 N_{P/X} = dim F_{k+1}",
            base - r(2 * c(k + 3, 2)),
            dim_fk1,
        ),
    ]
}

/// `h^0` of the normal bundle of `Gr(2,5) ∩ P(W)` restricted to a σ-plane
/// of dimension `k+1`, from the Borel–Weil–Bott value `(k+1)(k+2)(k+3)/3`
/// and `2-k` copies of `O(2)`.
pub fn gr25_sigma_h0(k: i64) -> i64 {
    (k + 1) * (k + 2) * (k + 3) / 3 + (2 - k) * c(k + 3, 2)
}

/// Same for a τ-plane: `O(1) ⊕ O(2)^2`.
pub fn gr25_tau_h0(k: i64) -> i64 {
    (k + 2) + 2 * c(k + 3, 2)
}

/// Table-driven checks for linear sections of `Gr(2,5)`.
pub fn gr25_identities(n: u32, k: u32) -> Result<Vec<Check<i64>>, FanoError> {
    let row = gr25_row(n)?;
    let (ni, ki) = (n as i64, k as i64);
    let sigma = match k {
        0 => row.f1,
        1 => row.f2_sigma,
        2 => row.f3,
        _ => None,
    };
    let tau = match k {
        0 => row.f1,
        1 => row.f2_tau,
        _ => None,
    };
    let ambient = (ni - ki + 2) * (ki + 2);
    let mut out = Vec::new();
    if let Some(fs) = sigma.map(i64::from) {
        if k <= 1 {
            let rhs = (ni - ki - 2) * (ki + 2) + 4 - c(ki + 3, 2);
            out.push(check("dim Z' = codim formula", fs + 1 - ki, rhs));
            let closed = if k == 0 { 2 * ni - 3 } else { 3 * ni - 11 };
            out.push(check("codim formula closed form", rhs, closed));
        }
        out.push(check("sigma smoothness", fs, ambient - gr25_sigma_h0(ki)));
    }
    if let Some(ft) = tau.map(i64::from) {
        out.push(check("tau smoothness", ft, ambient - gr25_tau_h0(ki)));
    }
    if k == 1 {
        if let (Some(s), Some(t)) = (row.f2_sigma, row.f2_tau) {
            out.push(check("equidimensional", s as i64, t as i64 + 1));
        }
    }
    Ok(out)
}

/// Integer checks at `p`, with whether the flip regime applies there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimReport {
    pub params: FanoParams,
    pub regime: Regime,
    pub checks: Vec<Check<i64>>,
}

impl CodimReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }
}

pub fn verify_codim_identity(p: FanoParams) -> Result<CodimReport, FanoError> {
    let (n, k) = (p.n as i64, p.k as i64);
    let checks = match p.family {
        Family::Cubic => cubic_identities(n, k),
        Family::TwoQuadrics => two_quadrics_identities(n, k),
        Family::Gr25 => gr25_identities(p.n, p.k)?,
    };
    Ok(CodimReport {
        params: p,
        regime: emptiness_threshold(p),
        checks,
    })
}

/// The checks as polynomials in `n` for fixed `k`.
pub fn symbolic_identities(family: Family, k: u32) -> Option<Vec<Check<Poly>>> {
    let n = Poly::var();
    match family {
        Family::Cubic => Some(cubic_identities(n, k as i64)),
        Family::TwoQuadrics => Some(two_quadrics_identities(n, k as i64)),
        Family::Gr25 => None,
    }
}

/// Grid `k ∈ [0, 6]`, `n ∈ [max(k,1), 30]` for cubics and two quadrics; the
/// whole table domain for `Gr(2,5)` (`k ∈ {0,1,2}` where `F_{k+1}` exists).
pub fn codim_grid(family: Family) -> Vec<CodimReport> {
    let mut out = Vec::new();
    match family {
        Family::Cubic | Family::TwoQuadrics => {
            for k in 0..=6u32 {
                for n in k.max(1)..=30 {
                    let p = FanoParams::new(family, n, k).expect("in range");
                    out.push(verify_codim_identity(p).expect("formula families"));
                }
            }
        }
        Family::Gr25 => {
            for k in 0..=2u32 {
                for n in 2..=6u32 {
                    let p = FanoParams::new(family, n, k).expect("in range");
                    let report = verify_codim_identity(p).expect("in table");
                    if !report.checks.is_empty() {
                        out.push(report);
                    }
                }
            }
        }
    }
    out
}

/// `(r, s)` of a standard flip with centre a `P^r`-bundle over `F` and
/// flipped centre a `P^s`-bundle; `s = -1` marks an empty flipped centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipShape {
    pub r: i64,
    pub s: i64,
    pub base_label: String,
}

impl FlipShape {
    pub fn is_degenerate(&self) -> bool {
        self.s < 0
    }

    /// Copies of `D(F)` in the complement of `D(X')` inside `D(X)`.
    pub fn sod_copies(&self) -> i64 {
        self.r - self.s
    }
}

fn fk1_label(k: u32) -> String {
    format!("F{}", k + 1)
}

/// Shapes per component of `F_{k+1}`. Degenerate regimes carry `s = -1`.
pub fn flip_shape(p: FanoParams) -> Vec<FlipShape> {
    let k = p.k as i64;
    let r = c(k + 3, 2) - 1;
    let regime = emptiness_threshold(p);
    let one = |s: i64, label: String| alloc::vec![FlipShape { r, s, base_label: label }];
    if regime != Regime::Flip {
        return one(-1, fk1_label(p.k));
    }
    match p.family {
        Family::Cubic => one(k + 1, fk1_label(p.k)),
        Family::TwoQuadrics => one(1, fk1_label(p.k)),
        Family::Gr25 => match p.k {
            0 => one(1, fk1_label(0)),
            _ => alloc::vec![
                FlipShape {
                    r,
                    s: 0,
                    base_label: String::from("F2sigma"),
                },
                FlipShape {
                    r,
                    s: 1,
                    base_label: String::from("F2tau"),
                },
            ],
        },
    }
}

/// Decomposition of `D(G_k(X))` by component counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SodCounts {
    pub regime: Regime,
    /// `D(bundle side)` plus `r - s` copies of `D(F_{k+1})` per component.
    pub primary: Ledger,
    /// Cubics only: the bundle side `P(Q_{k+1})` expanded into `n - k + 1`
    /// copies of `D(F_k)`.
    pub alternative: Option<Ledger>,
}

fn bundle_atom(family: Family) -> &'static str {
    match family {
        Family::Cubic => "D_PQ",
        Family::TwoQuadrics => "D_OGr",
        Family::Gr25 => "D_GrW",
    }
}

pub fn sod_counts(p: FanoParams) -> SodCounts {
    let regime = emptiness_threshold(p);
    let mut primary = Ledger::new();
    if regime == Regime::Empty {
        return SodCounts {
            regime,
            primary,
            alternative: None,
        };
    }
    primary.add(bundle_atom(p.family), 1u32.into());
    if regime == Regime::Flip {
        for shape in flip_shape(p) {
            let name = format!("D_{}", shape.base_label);
            primary.add(&name, (shape.sod_copies() as u64).into());
        }
    }
    let alternative = (p.family == Family::Cubic).then(|| {
        let mut alt = Ledger::new();
        alt.add(&format!("D_F{}", p.k), ((p.n - p.k + 1) as u64).into());
        for (name, m) in primary.iter() {
            if name != bundle_atom(p.family) {
                alt.add(name, m.clone());
            }
        }
        alt
    });
    SodCounts {
        regime,
        primary,
        alternative,
    }
}

/// One row of the classification of del Pezzo varieties by degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeClassEntry {
    pub degree: u32,
    pub description: &'static str,
}

const DEGREE_TABLE: [&str; 9] = [
    "sextic hypersurface in P(1^n, 2, 3) avoiding the singular points",
    "double cover of P^n branched over a quartic hypersurface",
    "cubic hypersurface in P^{n+1}",
    "complete intersection of two quadrics in P^{n+2}",
    "linear section of Gr(2,5) in P^9 (Pluecker), 2 <= dim X <= 6",
    "linear section of (P^1)^3 in P^7 or of (P^2)^2 in P^8 (Segre)",
    "del Pezzo surface of degree 7, or P^3 blown up at a point",
    "P^3, or a del Pezzo surface of degree 8",
    "P^2",
];

pub fn degree_classification(d: i64) -> Result<DegreeClassEntry, FanoError> {
    if !(1..=9).contains(&d) {
        return Err(FanoError::DegreeOutOfRange(d));
    }
    Ok(DegreeClassEntry {
        degree: d as u32,
        description: DEGREE_TABLE[(d - 1) as usize],
    })
}
