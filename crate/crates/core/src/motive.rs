//! A fragment of the Grothendieck ring of varieties: integer polynomials in
//! the Lefschetz class `L` over free commuting atoms.
//!
//! The atom `pt` is the unit and is absorbed on construction. Atoms carry no
//! relations; every geometric identity is an explicit operation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::util::choose2_signed;

/// The unit atom.
pub const POINT: &str = "pt";

/// Prefix under which the symmetric square of atom `g` is named.
pub const SYM2_PREFIX: &str = "Sym2";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("invalid atom name {0:?}")]
    InvalidAtom(String),
    #[error("blowup codimension must be at least 2, got {0}")]
    CodimTooSmall(u32),
    #[error("Hilbert square needs dimension at least 1")]
    ZeroDimension,
    #[error("Sym2 is only defined on sums of L^i*g with g a single atom or 1; found term {0}")]
    OutsideSym2Fragment(String),
    #[error("no value assigned to atom {0}")]
    Unassigned(String),
}

/// Names reserved by the text language.
pub fn is_reserved(name: &str) -> bool {
    matches!(name, "L" | "Sym2" | "Hilb2")
}

/// `[A-Za-z][A-Za-z0-9_]*`, not reserved.
pub fn is_valid_atom(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !is_reserved(name)
}

/// A monomial `L^l · a_1 · … · a_m` with the atoms kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    atoms: Vec<String>,
    l: u32,
}

impl Monomial {
    pub fn new<I, S>(l: u32, atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut atoms: Vec<String> = atoms
            .into_iter()
            .map(Into::into)
            .filter(|a| a != POINT)
            .collect();
        atoms.sort();
        Monomial { atoms, l }
    }

    pub fn unit() -> Self {
        Monomial { atoms: Vec::new(), l: 0 }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn l_power(&self) -> u32 {
        self.l
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        atoms.sort();
        Monomial {
            atoms,
            l: self.l + other.l,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.atoms.is_empty() && self.l == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !core::mem::replace(&mut first, false) {
                f.write_str("*")
            } else {
                Ok(())
            }
        };
        match self.l {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("L")?;
            }
            k => {
                sep(f)?;
                write!(f, "L^{k}")?;
            }
        }
        for a in &self.atoms {
            sep(f)?;
            f.write_str(a)?;
        }
        if self.is_unit() {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Element of the ring fragment. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Motive {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Motive {
    pub fn zero() -> Self {
        Motive::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(BigInt::from(c), Monomial::unit())
    }

    pub fn term(coeff: BigInt, m: Monomial) -> Self {
        let mut out = Motive::zero();
        out.add_term(m, coeff);
        out
    }

    /// `L^i`.
    pub fn lefschetz(i: u32) -> Self {
        Self::term(BigInt::one(), Monomial::new::<_, String>(i, []))
    }

    /// The class of a named generator.
    pub fn atom(name: &str) -> Result<Self, MotiveError> {
        if name == POINT {
            return Ok(Self::one());
        }
        if !is_valid_atom(name) {
            return Err(MotiveError::InvalidAtom(name.to_string()));
        }
        Ok(Self::term(BigInt::one(), Monomial::new(0, [name])))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficients of `1, L, L^2, …` for an atom-free element.
    pub fn l_coefficients(&self) -> Option<Vec<BigInt>> {
        if self.terms.keys().any(|m| !m.atoms.is_empty()) {
            return None;
        }
        let top = self.terms.keys().map(|m| m.l).max();
        Some(match top {
            None => Vec::new(),
            Some(top) => (0..=top)
                .map(|i| self.coefficient(&Monomial::new::<_, String>(i, [])))
                .collect(),
        })
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, c: &BigInt) -> Motive {
        if c.is_zero() {
            return Motive::zero();
        }
        Motive {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiply every term by `L^i`.
    pub fn shift(&self, i: u32) -> Motive {
        Motive {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    (
                        Monomial {
                            atoms: m.atoms.clone(),
                            l: m.l + i,
                        },
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Ring homomorphism to `Z` sending `L ↦ 1` and each atom to its value.
    pub fn specialize(&self, values: &BTreeMap<String, BigInt>) -> Result<BigInt, MotiveError> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for a in &m.atoms {
                v *= values
                    .get(a)
                    .ok_or_else(|| MotiveError::Unassigned(a.clone()))?;
            }
            total += v;
        }
        Ok(total)
    }
}

/// Extends an Euler-characteristic assignment with `Sym2g ↦ e(e+1)/2` for
/// every assigned `g` that has no explicit `Sym2g` entry.
pub fn with_sym2_euler(values: &BTreeMap<String, BigInt>) -> BTreeMap<String, BigInt> {
    let mut out = values.clone();
    for (name, e) in values {
        let key = sym2_atom_name(name);
        out.entry(key).or_insert_with(|| e * (e + 1) / 2);
    }
    out
}

pub fn sym2_atom_name(name: &str) -> String {
    let mut s = String::from(SYM2_PREFIX);
    s.push_str(name);
    s
}

impl Add<&Motive> for &Motive {
    type Output = Motive;
    fn add(self, rhs: &Motive) -> Motive {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Motive> for &Motive {
    type Output = Motive;
    fn sub(self, rhs: &Motive) -> Motive {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Motive> for &Motive {
    type Output = Motive;
    fn mul(self, rhs: &Motive) -> Motive {
        let mut out = Motive::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Motive {
    type Output = Motive;
    fn neg(self) -> Motive {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Motive> for Motive {
            type Output = Motive;
            fn $f(self, rhs: Motive) -> Motive {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Motive> for Motive {
            type Output = Motive;
            fn $f(self, rhs: &Motive) -> Motive {
                (&self).$f(rhs)
            }
        }
        impl $tr<Motive> for &Motive {
            type Output = Motive;
            fn $f(self, rhs: Motive) -> Motive {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Motive {
    type Output = Motive;
    fn neg(self) -> Motive {
        -&self
    }
}

impl fmt::Display for Motive {
    /// Canonical text form, e.g. `1 + 2*L + L^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_unit() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `[P^n] = 1 + L + … + L^n`.
pub fn class_of_pn(n: u32) -> Motive {
    let mut out = Motive::zero();
    for i in 0..=n {
        out.add_term(Monomial::new::<_, String>(i, []), BigInt::one());
    }
    out
}

/// `[Z]([P^{c-1}] - 1)`, the exceptional contribution; meaningful for `c >= 1`.
fn exceptional_correction(z: &Motive, c: u32) -> Motive {
    z * &(class_of_pn(c.saturating_sub(1)) - Motive::one())
}

/// `[Bl_Z X] = [X] + [Z]([P^{c-1}] - 1)`.
pub fn blowup_class(x: &Motive, z: &Motive, c: u32) -> Result<Motive, MotiveError> {
    if c < 2 {
        return Err(MotiveError::CodimTooSmall(c));
    }
    Ok(x + &exceptional_correction(z, c))
}

/// `[X] - [X'] = [F]([P^r] - [P^s])` for a standard flip of shape `(r, s)`.
pub fn flip_difference(f: &Motive, r: u32, s: u32) -> Motive {
    f * &(class_of_pn(r) - class_of_pn(s))
}

/// `Sym^2` on the fragment of sums `c·L^i·g`, `g` an atom or 1.
pub fn sym2_class(x: &Motive) -> Result<Motive, MotiveError> {
    let parts: Vec<(&Monomial, &BigInt)> = x.terms.iter().collect();
    let mut out = Motive::zero();
    for (i, &(m, c)) in parts.iter().enumerate() {
        if m.atoms.len() > 1 {
            return Err(MotiveError::OutsideSym2Fragment(
                Motive::term(c.clone(), m.clone()).to_string(),
            ));
        }
        // Sym²(cA) = c·Sym²A + C(c,2)·A², C(c,2) generalised to c < 0
        let sym_m = Monomial {
            atoms: m.atoms.iter().map(|g| sym2_atom_name(g)).collect(),
            l: 2 * m.l,
        };
        out.add_term(sym_m, c.clone());
        out.add_term(m.times(m), choose2_signed(c));
        for &(m2, c2) in &parts[i + 1..] {
            out.add_term(m.times(m2), c * c2);
        }
    }
    Ok(out)
}

/// `[X^[2]] = Sym²[X] + ([P^{n-1}] - 1)[X]` for `X` of dimension `n`.
pub fn hilbert_square_class(x: &Motive, n: u32) -> Result<Motive, MotiveError> {
    if n == 0 {
        return Err(MotiveError::ZeroDimension);
    }
    Ok(sym2_class(x)? + exceptional_correction(x, n))
}
