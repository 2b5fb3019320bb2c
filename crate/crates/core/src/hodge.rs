//! Hodge diamonds and the operations that build new ones from old:
//! Künneth products, Tate twists, graded symmetric squares, projective
//! bundles, blowups and Hilbert squares.
//!
//! Entries are arbitrary precision. A diamond built through the raw
//! constructors carries no symmetry guarantee; [`HodgeDiamond::validate`]
//! checks Hodge symmetry and Serre duality and marks the table geometric.
//! Tate twists are raw on purpose, since Serre duality is relative to the
//! dimension and a twist moves the table off-centre.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest dimension stored as a dense `(dim+1)^2` grid.
const DENSE_MAX_DIM: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("entry h^{{{p},{q}}} lies outside a diamond of dimension {dim}")]
    EntryOutOfRange { p: u32, q: u32, dim: u32 },
    #[error("entry h^{{{p},{q}}} given more than once")]
    DuplicateEntry { p: u32, q: u32 },
    #[error("Hodge symmetry fails: h^{{{p},{q}}} != h^{{{q},{p}}}")]
    NotHodgeSymmetric { p: u32, q: u32 },
    #[error("Serre duality fails at h^{{{p},{q}}} in dimension {dim}")]
    NotSerreDual { p: u32, q: u32, dim: u32 },
    #[error("dimension mismatch: center of dimension {center} and codimension {codim} in a variety of dimension {total}")]
    DimensionMismatch { total: u32, center: u32, codim: u32 },
    #[error("blowup codimension must be at least 2, got {0}")]
    CodimTooSmall(u32),
    #[error("projective bundle rank must be positive")]
    ZeroRank,
    #[error("the Hilbert square of a point is not modeled")]
    PointHilbertSquare,
}

#[derive(Debug, Clone)]
enum Grid {
    Dense { side: usize, cells: Vec<BigUint> },
    Sparse(BTreeMap<(u32, u32), BigUint>),
}

impl Grid {
    fn zero(dim: u32) -> Self {
        if dim <= DENSE_MAX_DIM {
            let side = dim as usize + 1;
            Grid::Dense {
                side,
                cells: alloc::vec![BigUint::zero(); side * side],
            }
        } else {
            Grid::Sparse(BTreeMap::new())
        }
    }

    fn get(&self, p: u32, q: u32) -> Option<&BigUint> {
        match self {
            Grid::Dense { side, cells } => cells.get(p as usize * side + q as usize),
            Grid::Sparse(map) => map.get(&(p, q)),
        }
    }

    fn add(&mut self, p: u32, q: u32, value: &BigUint) {
        if value.is_zero() {
            return;
        }
        match self {
            Grid::Dense { side, cells } => cells[p as usize * *side + q as usize] += value,
            Grid::Sparse(map) => *map.entry((p, q)).or_default() += value,
        }
    }

    fn nonzero(&self) -> Vec<(u32, u32, &BigUint)> {
        match self {
            Grid::Dense { side, cells } => cells
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| ((i / side) as u32, (i % side) as u32, v))
                .collect(),
            Grid::Sparse(map) => map
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(&(p, q), v)| (p, q, v))
                .collect(),
        }
    }
}

/// Bigraded table `h^{p,q}` of a smooth projective variety of complex
/// dimension `dim`, supported on `0 <= p, q <= dim`.
#[derive(Debug, Clone)]
pub struct HodgeDiamond {
    dim: u32,
    grid: Grid,
    geometric: bool,
}

impl PartialEq for HodgeDiamond {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.grid.nonzero() == other.grid.nonzero()
    }
}

impl Eq for HodgeDiamond {}

impl HodgeDiamond {
    /// The all-zero table of the given dimension.
    pub fn zero(dim: u32) -> Self {
        HodgeDiamond {
            dim,
            grid: Grid::zero(dim),
            geometric: false,
        }
    }

    /// Raw table from `(p, q, value)` triples. Omitted entries are zero.
    pub fn from_entries<I>(dim: u32, entries: I) -> Result<Self, HodgeError>
    where
        I: IntoIterator<Item = (u32, u32, BigUint)>,
    {
        let mut out = HodgeDiamond::zero(dim);
        let mut seen = alloc::collections::BTreeSet::new();
        for (p, q, value) in entries {
            if p > dim || q > dim {
                return Err(HodgeError::EntryOutOfRange { p, q, dim });
            }
            if !seen.insert((p, q)) {
                return Err(HodgeError::DuplicateEntry { p, q });
            }
            out.grid.add(p, q, &value);
        }
        Ok(out)
    }

    /// Convenience wrapper over [`from_entries`](Self::from_entries) for small tables.
    pub fn from_u64s(dim: u32, entries: &[(u32, u32, u64)]) -> Result<Self, HodgeError> {
        Self::from_entries(dim, entries.iter().map(|&(p, q, v)| (p, q, BigUint::from(v))))
    }

    pub fn point() -> Self {
        Self::projective_space(0)
    }

    pub fn projective_space(n: u32) -> Self {
        let mut out = HodgeDiamond::zero(n);
        for p in 0..=n {
            out.grid.add(p, p, &BigUint::one());
        }
        out.geometric = true;
        out
    }

    /// Smooth projective curve of genus `g`.
    pub fn curve(genus: u64) -> Self {
        let g = BigUint::from(genus);
        let mut out = HodgeDiamond::zero(1);
        out.grid.add(0, 0, &BigUint::one());
        out.grid.add(1, 1, &BigUint::one());
        out.grid.add(1, 0, &g);
        out.grid.add(0, 1, &g);
        out.geometric = true;
        out
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `h^{p,q}`, zero outside the support square.
    pub fn get(&self, p: i64, q: i64) -> BigUint {
        if p < 0 || q < 0 || p > self.dim as i64 || q > self.dim as i64 {
            return BigUint::zero();
        }
        self.grid.get(p as u32, q as u32).cloned().unwrap_or_default()
    }

    /// Nonzero entries, sorted lexicographically by `(p, q)`.
    pub fn entries(&self) -> Vec<(u32, u32, BigUint)> {
        self.grid
            .nonzero()
            .into_iter()
            .map(|(p, q, v)| (p, q, v.clone()))
            .collect()
    }

    pub fn is_geometric(&self) -> bool {
        self.geometric
    }

    /// Checks Hodge symmetry and Serre duality; on success the table is
    /// marked geometric.
    pub fn validate(mut self) -> Result<Self, HodgeError> {
        let n = self.dim as i64;
        for (p, q, v) in self.grid.nonzero() {
            if self.get(q as i64, p as i64) != *v {
                return Err(HodgeError::NotHodgeSymmetric { p, q });
            }
            if self.get(n - p as i64, n - q as i64) != *v {
                return Err(HodgeError::NotSerreDual { p, q, dim: self.dim });
            }
        }
        self.geometric = true;
        Ok(self)
    }

    /// The centre vertical strip `h^{0,0}, h^{1,1}, ..., h^{n,n}`.
    pub fn column(&self) -> Vec<BigUint> {
        (0..=self.dim as i64).map(|p| self.get(p, p)).collect()
    }

    /// Sum of the `(p, p)` entries; the dimension of `HH_0` by HKR.
    pub fn hh0(&self) -> BigUint {
        self.column().into_iter().sum()
    }

    /// Alternating sum `Σ (-1)^{p+q} h^{p,q}`.
    pub fn euler(&self) -> BigInt {
        self.grid.nonzero().into_iter().fold(BigInt::zero(), |acc, (p, q, v)| {
            let v = BigInt::from(v.clone());
            if (p + q) % 2 == 0 {
                acc + v
            } else {
                acc - v
            }
        })
    }

    /// Total dimension of cohomology.
    pub fn betti_total(&self) -> BigUint {
        self.grid.nonzero().into_iter().map(|(_, _, v)| v).sum()
    }

    /// Adds `other`, shifted by `(shift, shift)`, into `self`. The caller
    /// guarantees the shifted support fits.
    fn accumulate(&mut self, other: &HodgeDiamond, shift: u32) {
        for (p, q, v) in other.grid.nonzero() {
            self.grid.add(p + shift, q + shift, v);
        }
        self.geometric = false;
    }
}

impl fmt::Display for HodgeDiamond {
    /// Diamond layout, top row `h^{n,n}`, bottom row `h^{0,0}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::string::{String, ToString};
        let n = self.dim as i64;
        let rows: Vec<Vec<String>> = (0..=2 * n)
            .rev()
            .map(|degree| {
                let lo = (degree - n).max(0);
                let hi = degree.min(n);
                (lo..=hi)
                    .rev()
                    .map(|p| self.get(p, degree - p).to_string())
                    .collect()
            })
            .collect();
        let width = rows
            .iter()
            .flat_map(|r| r.iter().map(|s| s.len()))
            .max()
            .unwrap_or(1);
        let longest = rows.iter().map(|r| r.len()).max().unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            let pad = (longest - row.len()) * (width + 1);
            let mut line = String::new();
            line.extend(core::iter::repeat_n(' ', pad));
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    line.extend(core::iter::repeat_n(' ', width + 2));
                }
                line.extend(core::iter::repeat_n(' ', width - cell.len()));
                line.push_str(cell);
            }
            if i + 1 < rows.len() {
                writeln!(f, "{}", line.trim_end())?;
            } else {
                write!(f, "{}", line.trim_end())?;
            }
        }
        Ok(())
    }
}

/// Hodge table of a product: bigraded convolution.
pub fn kunneth(a: &HodgeDiamond, b: &HodgeDiamond) -> HodgeDiamond {
    let mut out = HodgeDiamond::zero(a.dim + b.dim);
    let bs = b.grid.nonzero();
    for (p1, q1, x) in a.grid.nonzero() {
        for &(p2, q2, y) in &bs {
            out.grid.add(p1 + p2, q1 + q2, &(x * y));
        }
    }
    out.geometric = a.geometric && b.geometric;
    out
}

/// Shift by `(i, i)`, landing in dimension `dim + i`. The result is raw.
pub fn tate_twist(a: &HodgeDiamond, i: u32) -> HodgeDiamond {
    let mut out = HodgeDiamond::zero(a.dim + i);
    out.accumulate(a, i);
    out.geometric = i == 0 && a.geometric;
    out
}

fn square_part(a: &HodgeDiamond, symmetric: bool) -> HodgeDiamond {
    let mut out = HodgeDiamond::zero(2 * a.dim);
    let cells = a.grid.nonzero();
    for (i, &(p1, q1, x)) in cells.iter().enumerate() {
        // equal bidegrees: Sym^2 on even classes, Λ^2 on odd ones (and the
        // other way round for the anti-invariant part)
        let even = (p1 + q1) % 2 == 0;
        let plus = even == symmetric;
        let pair = if plus {
            x * (x + 1u32) / 2u32
        } else {
            x * (x - 1u32) / 2u32
        };
        out.grid.add(2 * p1, 2 * q1, &pair);
        for &(p2, q2, y) in &cells[i + 1..] {
            out.grid.add(p1 + p2, q1 + q2, &(x * y));
        }
    }
    out
}

/// Graded symmetric square: `Z/2`-coinvariants of `H ⊗ H` under the swap
/// with Koszul sign.
pub fn sym2(a: &HodgeDiamond) -> HodgeDiamond {
    let mut out = square_part(a, true);
    out.geometric = a.geometric;
    out
}

/// The anti-invariant complement of [`sym2`] inside `kunneth(a, a)`.
pub fn alt2(a: &HodgeDiamond) -> HodgeDiamond {
    square_part(a, false)
}

/// `H*(X^[2]) = Sym² H*(X) ⊕ ⊕_{i=1}^{n-1} H*(X)(i)` for `X` of dimension `n >= 1`.
pub fn hilbert_square(a: &HodgeDiamond) -> Result<HodgeDiamond, HodgeError> {
    if a.dim == 0 {
        return Err(HodgeError::PointHilbertSquare);
    }
    let mut out = sym2(a);
    for i in 1..a.dim {
        out.accumulate(a, i);
    }
    out.geometric = false;
    Ok(out)
}

/// Projectivisation of a rank `rank` bundle over `base`.
pub fn projective_bundle(base: &HodgeDiamond, rank: u32) -> Result<HodgeDiamond, HodgeError> {
    if rank == 0 {
        return Err(HodgeError::ZeroRank);
    }
    let mut out = HodgeDiamond::zero(base.dim + rank - 1);
    for i in 0..rank {
        out.accumulate(base, i);
    }
    Ok(out)
}

/// Blowup of `total` along a smooth `center` of codimension `codim`.
pub fn blowup(
    total: &HodgeDiamond,
    center: &HodgeDiamond,
    codim: u32,
) -> Result<HodgeDiamond, HodgeError> {
    if codim < 2 {
        return Err(HodgeError::CodimTooSmall(codim));
    }
    if center.dim + codim != total.dim {
        return Err(HodgeError::DimensionMismatch {
            total: total.dim,
            center: center.dim,
            codim,
        });
    }
    let mut out = total.clone();
    for i in 1..codim {
        out.accumulate(center, i);
    }
    Ok(out)
}

/// Direct sum of two tables of the same dimension.
pub fn direct_sum(a: &HodgeDiamond, b: &HodgeDiamond) -> Result<HodgeDiamond, HodgeError> {
    if a.dim != b.dim {
        return Err(HodgeError::DimensionMismatch {
            total: a.dim,
            center: b.dim,
            codim: 0,
        });
    }
    let mut out = a.clone();
    out.accumulate(b, 0);
    Ok(out)
}

pub fn hh0(a: &HodgeDiamond) -> BigUint {
    a.hh0()
}
