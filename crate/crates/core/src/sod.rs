//! Ledgers of semiorthogonal decompositions: the multiset of component
//! categories, forgetting order and gluing.
//!
//! Components are opaque named atoms. A [`RuleTable`] says how symmetric
//! squares and tensor products of atoms decompose, and how an atom may be
//! replaced by a finer ledger.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::hodge::HodgeDiamond;
use crate::util::binomial_i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SodError {
    #[error("atom {0} does not occur in the ledger")]
    AtomAbsent(String),
    #[error("cannot subtract: {atom} has multiplicity {have}, need {need}")]
    NegativeMultiplicity {
        atom: String,
        have: BigUint,
        need: BigUint,
    },
    #[error("unresolved pair: no rule for Sym2({0})")]
    UnresolvedSym2(String),
    #[error("unresolved pair: no rule for {0} (*) {1}")]
    UnresolvedTensor(String, String),
    #[error("no value assigned to atom {0}")]
    Unassigned(String),
    #[error("rule {lhs} => ... uses {rhs}, which is not below {lhs} in the declared order")]
    NotDecreasing { lhs: String, rhs: String },
    #[error("atom {0} appears twice in the order")]
    RepeatedInOrder(String),
    #[error("Hilbert square ledger needs n >= 2, got {0}")]
    DimensionTooSmall(u64),
    #[error("hh0 {given} declared for {atom} disagrees with its diamond ({from_diamond})")]
    InconsistentInvariant {
        atom: String,
        given: BigUint,
        from_diamond: BigUint,
    },
}

/// Multiset of component atoms. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Ledger {
    atoms: BTreeMap<String, BigUint>,
}

impl Ledger {
    pub fn new() -> Self {
        Ledger::default()
    }

    pub fn single(name: &str, mult: impl Into<BigUint>) -> Self {
        let mut out = Ledger::new();
        out.add(name, mult.into());
        out
    }

    pub fn from_pairs<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, u64)>,
    {
        let mut out = Ledger::new();
        for (name, mult) in pairs {
            out.add(name, BigUint::from(mult));
        }
        out
    }

    pub fn add(&mut self, name: &str, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.atoms.entry(name.to_string()).or_default() += mult;
    }

    pub fn get(&self, name: &str) -> BigUint {
        self.atoms.get(name).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Entries sorted by name.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &BigUint)> {
        self.atoms.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn total(&self) -> BigUint {
        self.atoms.values().sum()
    }

    pub fn scale(&self, k: &BigUint) -> Ledger {
        if k.is_zero() {
            return Ledger::new();
        }
        Ledger {
            atoms: self.atoms.iter().map(|(a, m)| (a.clone(), m * k)).collect(),
        }
    }

    pub fn plus(&self, other: &Ledger) -> Ledger {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn extend(&mut self, other: &Ledger) {
        for (a, m) in &other.atoms {
            self.add(a, m.clone());
        }
    }

    fn remove(&mut self, name: &str) -> Option<BigUint> {
        self.atoms.remove(name)
    }
}

impl fmt::Display for Ledger {
    /// `{DC:8, DSym2C:1, Dpt:26}`, names in byte order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, m)) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}:{m}")?;
        }
        f.write_str("}")
    }
}

pub fn ledger_equal(a: &Ledger, b: &Ledger) -> bool {
    a == b
}

/// Pointwise difference; fails if any multiplicity would go negative.
pub fn ledger_subtract(a: &Ledger, b: &Ledger) -> Result<Ledger, SodError> {
    let mut out = a.clone();
    for (name, need) in &b.atoms {
        let have = a.get(name);
        if &have < need {
            return Err(SodError::NegativeMultiplicity {
                atom: name.clone(),
                have,
                need: need.clone(),
            });
        }
        let left = have - need;
        out.remove(name);
        out.add(name, left);
    }
    Ok(out)
}

/// Replace every copy of `atom` by `replacement`.
pub fn substitute(ledger: &Ledger, atom: &str, replacement: &Ledger) -> Result<Ledger, SodError> {
    let mut out = ledger.clone();
    let mult = out
        .remove(atom)
        .ok_or_else(|| SodError::AtomAbsent(atom.to_string()))?;
    out.extend(&replacement.scale(&mult));
    Ok(out)
}

/// `Σ mult · value`.
pub fn additive_invariant(
    ledger: &Ledger,
    assignment: &BTreeMap<String, BigInt>,
) -> Result<BigInt, SodError> {
    let mut total = BigInt::zero();
    for (a, m) in &ledger.atoms {
        let v = assignment
            .get(a)
            .ok_or_else(|| SodError::Unassigned(a.clone()))?;
        total += v * BigInt::from(m.clone());
    }
    Ok(total)
}

/// Per-atom hh0 values, optionally backed by a Hodge diamond.
#[derive(Debug, Clone, Default)]
pub struct AtomInvariants {
    hh0: BTreeMap<String, BigUint>,
}

impl AtomInvariants {
    pub fn new() -> Self {
        Self::default()
    }

    /// Attach an hh0 value, a diamond, or both (which must then agree).
    pub fn declare(
        &mut self,
        atom: &str,
        hh0: Option<BigUint>,
        diamond: Option<&HodgeDiamond>,
    ) -> Result<(), SodError> {
        let from_diamond = diamond.map(HodgeDiamond::hh0);
        let value = match (hh0, from_diamond) {
            (Some(given), Some(d)) if given != d => {
                return Err(SodError::InconsistentInvariant {
                    atom: atom.to_string(),
                    given,
                    from_diamond: d,
                })
            }
            (Some(v), _) | (None, Some(v)) => v,
            (None, None) => return Ok(()),
        };
        self.hh0.insert(atom.to_string(), value);
        Ok(())
    }

    pub fn get(&self, atom: &str) -> Option<&BigUint> {
        self.hh0.get(atom)
    }

    pub fn assignment(&self) -> BTreeMap<String, BigInt> {
        self.hh0
            .iter()
            .map(|(k, v)| (k.clone(), BigInt::from(v.clone())))
            .collect()
    }
}

/// Decomposition rules for symmetric squares, tensor products and atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleTable {
    sym2: BTreeMap<String, Ledger>,
    tensor: BTreeMap<(String, String), Ledger>,
    atoms: BTreeMap<String, Ledger>,
    /// Well-order, largest first.
    order: Vec<String>,
}

fn pair_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl RuleTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `DC (*) Dpt = DC`, `Dpt (*) Dpt = Dpt`, `Sym2(DC) = {DSym2C, DC}`,
    /// `Sym2(Dpt) = {Dpt:2}`.
    pub fn standard() -> Self {
        let mut t = RuleTable::new();
        t.set_tensor("DC", "Dpt", Ledger::single("DC", 1u32));
        t.set_tensor("Dpt", "Dpt", Ledger::single("Dpt", 1u32));
        t.set_sym2("DC", Ledger::from_pairs([("DSym2C", 1), ("DC", 1)]));
        t.set_sym2("Dpt", Ledger::single("Dpt", 2u32));
        t
    }

    pub fn set_sym2(&mut self, atom: &str, rhs: Ledger) {
        self.sym2.insert(atom.to_string(), rhs);
    }

    pub fn set_tensor(&mut self, a: &str, b: &str, rhs: Ledger) {
        self.tensor.insert(pair_key(a, b), rhs);
    }

    pub fn sym2_rule(&self, atom: &str) -> Option<&Ledger> {
        self.sym2.get(atom)
    }

    pub fn tensor_rule(&self, a: &str, b: &str) -> Option<&Ledger> {
        self.tensor.get(&pair_key(a, b))
    }

    pub fn order(&self) -> &[String] {
        &self.order
    }

    fn rank(&self, atom: &str) -> Option<usize> {
        self.order.iter().position(|a| a == atom)
    }

    fn check_decreasing(&self, lhs: &str, rhs: &Ledger) -> Result<(), SodError> {
        let top = self.rank(lhs);
        for (a, _) in rhs.iter() {
            match (top, self.rank(a)) {
                (Some(l), Some(r)) if r > l => {}
                _ => {
                    return Err(SodError::NotDecreasing {
                        lhs: lhs.to_string(),
                        rhs: a.to_string(),
                    })
                }
            }
        }
        Ok(())
    }

    /// Declare the well-order, largest first. Existing atom rules must
    /// still decrease under it.
    pub fn set_order(&mut self, order: Vec<String>) -> Result<(), SodError> {
        for (i, a) in order.iter().enumerate() {
            if order[..i].contains(a) {
                return Err(SodError::RepeatedInOrder(a.clone()));
            }
        }
        let previous = core::mem::replace(&mut self.order, order);
        for (lhs, rhs) in &self.atoms {
            if let Err(e) = self.check_decreasing(lhs, rhs) {
                self.order = previous;
                return Err(e);
            }
        }
        Ok(())
    }

    /// `lhs => rhs`, accepted only if every atom of `rhs` is below `lhs`.
    pub fn set_atom_rule(&mut self, lhs: &str, rhs: Ledger) -> Result<(), SodError> {
        self.check_decreasing(lhs, &rhs)?;
        self.atoms.insert(lhs.to_string(), rhs);
        Ok(())
    }

    pub fn atom_rule(&self, atom: &str) -> Option<&Ledger> {
        self.atoms.get(atom)
    }

    /// One rewrite step: expand the largest atom that has a rule.
    pub fn step(&self, ledger: &Ledger) -> Option<Ledger> {
        let target = self
            .order
            .iter()
            .find(|a| self.atoms.contains_key(*a) && !ledger.get(a).is_zero())?;
        substitute(ledger, target, &self.atoms[target]).ok()
    }

    /// Apply atom rules until none applies.
    pub fn normalize(&self, ledger: &Ledger) -> Ledger {
        let mut cur = ledger.clone();
        // each step expands an atom into strictly smaller ones, so one pass
        // down the order reaches the normal form
        for atom in &self.order {
            if let Some(rhs) = self.atoms.get(atom) {
                if let Ok(next) = substitute(&cur, atom, rhs) {
                    cur = next;
                }
            }
        }
        cur
    }
}

/// Multiset-order comparison under `order` (largest first): true when
/// `after` is obtained from `before` by replacing some atoms with finitely
/// many strictly smaller ones.
pub fn multiset_decreases(before: &Ledger, after: &Ledger, order: &[String]) -> bool {
    if before == after {
        return false;
    }
    let rank = |a: &str| order.iter().position(|o| o == a);
    // the largest atom whose multiplicity differs must have dropped
    let mut names: Vec<&str> = before.iter().map(|(a, _)| a).collect();
    names.extend(after.iter().map(|(a, _)| a));
    names.sort();
    names.dedup();
    let mut best: Option<(usize, &str)> = None;
    for n in names {
        if before.get(n) == after.get(n) {
            continue;
        }
        let Some(r) = rank(n) else { return false };
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, n));
        }
    }
    match best {
        Some((_, n)) => before.get(n) > after.get(n),
        None => false,
    }
}

fn sym2_of(atom: &str, rules: &RuleTable) -> Result<Ledger, SodError> {
    rules
        .sym2_rule(atom)
        .cloned()
        .ok_or_else(|| SodError::UnresolvedSym2(atom.to_string()))
}

fn tensor_of(a: &str, b: &str, rules: &RuleTable) -> Result<Ledger, SodError> {
    rules
        .tensor_rule(a, b)
        .cloned()
        .ok_or_else(|| SodError::UnresolvedTensor(a.to_string(), b.to_string()))
}

/// `Σ_i Sym²A_i + Σ_{i<j} A_i ⊗ A_j` over an ordered component list.
pub fn sym2_ledger(components: &[&str], rules: &RuleTable) -> Result<Ledger, SodError> {
    let mut out = Ledger::new();
    for (i, a) in components.iter().enumerate() {
        out.extend(&sym2_of(a, rules)?);
        for b in &components[i + 1..] {
            out.extend(&tensor_of(a, b, rules)?);
        }
    }
    Ok(out)
}

/// The same sum grouped by multiplicity: `m·Sym²A + C(m,2)·A⊗A` for each
/// atom and `m_A·m_B·A⊗B` for each pair. Scales to large multiplicities.
pub fn sym2_of_ledger(components: &Ledger, rules: &RuleTable) -> Result<Ledger, SodError> {
    let entries: Vec<(&str, &BigUint)> = components.iter().collect();
    let mut out = Ledger::new();
    for (i, &(a, m)) in entries.iter().enumerate() {
        out.extend(&sym2_of(a, rules)?.scale(m));
        if *m > BigUint::from(1u32) {
            let pairs = m * (m - 1u32) / 2u32;
            out.extend(&tensor_of(a, a, rules)?.scale(&pairs));
        }
        for &(b, m2) in &entries[i + 1..] {
            out.extend(&tensor_of(a, b, rules)?.scale(&(m * m2)));
        }
    }
    Ok(out)
}

/// `Sym²(components) + (n-2)·components`, the ledger of `X^[2]`.
pub fn hilb2_ledger(components: &Ledger, n: u64, rules: &RuleTable) -> Result<Ledger, SodError> {
    if n < 2 {
        return Err(SodError::DimensionTooSmall(n));
    }
    let mut out = sym2_of_ledger(components, rules)?;
    out.extend(&components.scale(&BigUint::from(n - 2)));
    Ok(out)
}

/// `{DC:1, Dpt:n-1}`: a curve and `n-1` exceptional objects, the
/// decomposition of an odd-dimensional intersection of two quadrics.
pub fn two_quadrics_components(n: u64) -> Ledger {
    let mut out = Ledger::single("DC", 1u32);
    out.add("Dpt", BigUint::from(n.saturating_sub(1)));
    out
}

/// Ledger template for the Fano scheme of maximal planes:
/// `{DSym2C:1, DC:n-3, Dpt:C(n-4,2)+2(n-4)}`, with negative counts clamped
/// to zero. The flag is false below `n = 5`, where the template is not
/// claimed.
pub fn fano_conjecture_ledger(n: u64) -> (Ledger, bool) {
    let n = n as i64;
    let mut out = Ledger::single("DSym2C", 1u32);
    out.add("DC", BigUint::from((n - 3).max(0) as u64));
    let pts = binomial_i64(n - 4, 2) + (2 * (n - 4)).max(0);
    out.add("Dpt", BigUint::from(pts as u64));
    (out, n >= 5)
}

/// `{DC:n+1, Dpt:(n-1)(n+1)}`.
pub fn pencil_conjecture_ledger(n: u64) -> Ledger {
    let mut out = Ledger::single("DC", n + 1);
    out.add("Dpt", BigUint::from(n.saturating_sub(1)) * (n + 1));
    out
}

/// `{DCl0:n+1, DS:(n-1)(n+1)/2}` over the opaque atoms of the quadric
/// fibration side.
pub fn clifford_conjecture_ledger(n: u64) -> Ledger {
    let mut out = Ledger::single("DCl0", n + 1);
    out.add("DS", BigUint::from(n.saturating_sub(1)) * (n + 1) / 2u32);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyRow {
    pub n: u64,
    pub hilb2: Ledger,
    pub sum: Ledger,
    pub in_range: bool,
    pub equal: bool,
}

/// Compares the Hilbert-square ledger with the sum of the two conjectural
/// pieces for odd `n` from 3 up to `n_odd_max`.
pub fn conjecture_consistency(n_odd_max: u64) -> Vec<ConsistencyRow> {
    let rules = RuleTable::standard();
    (3..=n_odd_max)
        .step_by(2)
        .map(|n| {
            let hilb2 = hilb2_ledger(&two_quadrics_components(n), n, &rules)
                .expect("standard rules resolve DC and Dpt");
            let (fano, in_range) = fano_conjecture_ledger(n);
            let sum = fano.plus(&pencil_conjecture_ledger(n));
            let equal = hilb2 == sum;
            ConsistencyRow {
                n,
                hilb2,
                sum,
                in_range,
                equal,
            }
        })
        .collect()
}

/// Outcome of comparing hh0 of a candidate component with the ambient
/// category. The comparison can only ever rule an embedding out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

pub fn obstruction_by_hh0(candidate: &BigUint, ambient: &BigUint) -> Verdict {
    if candidate > ambient {
        Verdict::Obstructed
    } else {
        Verdict::Inconclusive
    }
}

pub fn embedding_obstruction(candidate: &BigUint, ambient: &HodgeDiamond) -> Verdict {
    obstruction_by_hh0(candidate, &ambient.hh0())
}
