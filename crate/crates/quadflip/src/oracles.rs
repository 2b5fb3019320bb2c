//! Reference computations that share no code with the core routines they
//! check, and seeded generators for randomized checks.

use num_bigint::{BigInt, BigUint};
use quadflip_core::hodge::HodgeDiamond;
use quadflip_core::motive::{Monomial, Motive};
use quadflip_core::Ledger;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank over Q by fraction-free elimination; entries stay small because each
/// row is divided by its content.
pub fn rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        for i in 0..rows {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            for j in 0..cols {
                m[i][j] = m[i][j] * a - m[r][j] * b;
            }
            let g = m[i].iter().fold(0i64, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Symmetric square by linear algebra: expand `H` into an explicit basis,
/// build the signed swap `x ⊗ y ↦ (-1)^{|x||y|} y ⊗ x` on each bidegree of
/// `H ⊗ H`, and count `+1`-eigenvectors as `dim − rank(σ − 1)`.
/// Meant for total dimension up to a few dozen.
pub fn sym2_signed_basis(a: &HodgeDiamond) -> HodgeDiamond {
    let mut basis: Vec<(u32, u32)> = Vec::new();
    for (p, q, v) in a.entries() {
        let v = u64::try_from(v).expect("small diamond");
        basis.extend(std::iter::repeat_n((p, q), v as usize));
    }
    let n = basis.len();
    let mut out = Vec::new();
    for bp in 0..=2 * a.dim() {
        for bq in 0..=2 * a.dim() {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| basis[i].0 + basis[j].0 == bp && basis[i].1 + basis[j].1 == bq)
                .collect();
            if pairs.is_empty() {
                continue;
            }
            let d = pairs.len();
            let mut m = vec![vec![0i64; d]; d];
            for (col, &(i, j)) in pairs.iter().enumerate() {
                let odd = |k: usize| (basis[k].0 + basis[k].1) % 2 == 1;
                let sign = if odd(i) && odd(j) { -1 } else { 1 };
                let row = pairs.iter().position(|&x| x == (j, i)).expect("swap stays in bidegree");
                m[row][col] += sign;
                m[col][col] -= 1;
            }
            let plus = d - rank(m);
            if plus > 0 {
                out.push((bp, bq, plus as u64));
            }
        }
    }
    HodgeDiamond::from_u64s(2 * a.dim(), &out).expect("support fits")
}

/// A raw table of dimension at most 3 with total dimension at most 8.
pub fn small_diamond(rng: &mut impl Rng) -> HodgeDiamond {
    let dim = rng.gen_range(0..=3u32);
    let mut budget = rng.gen_range(1..=8u64);
    let mut entries = std::collections::BTreeMap::new();
    while budget > 0 {
        let p = rng.gen_range(0..=dim);
        let q = rng.gen_range(0..=dim);
        let v = rng.gen_range(1..=budget);
        *entries.entry((p, q)).or_insert(0) += v;
        budget -= v;
    }
    let entries: Vec<(u32, u32, u64)> = entries.into_iter().map(|((p, q), v)| (p, q, v)).collect();
    HodgeDiamond::from_u64s(dim, &entries).expect("in range")
}

const ATOMS: [&str; 6] = ["F", "X", "C", "Sym2C", "pt", "D_F1"];
const LEDGER_ATOMS: [&str; 5] = ["DC", "Dpt", "DSym2C", "D_PQ", "A"];

fn big_coeff(rng: &mut impl Rng) -> BigInt {
    if rng.gen_bool(0.2) {
        BigInt::from(rng.gen::<i128>())
    } else {
        BigInt::from(rng.gen_range(-9i64..=9))
    }
}

pub fn motive(rng: &mut impl Rng) -> Motive {
    let mut m = Motive::zero();
    for _ in 0..rng.gen_range(0..6) {
        let atoms: Vec<&str> = (0..rng.gen_range(0..4))
            .map(|_| *ATOMS.choose(rng).expect("nonempty"))
            .collect();
        m.add_term(Monomial::new(rng.gen_range(0..6), atoms), big_coeff(rng));
    }
    m
}

pub fn ledger(rng: &mut impl Rng) -> Ledger {
    let mut l = Ledger::new();
    for _ in 0..rng.gen_range(0..5) {
        let a = LEDGER_ATOMS.choose(rng).expect("nonempty");
        l.add(a, BigUint::from(rng.gen::<u64>()) * rng.gen::<u64>());
    }
    l
}

/// Random bytes of length up to `max_len`, decoded lossily.
pub fn fuzz_input(rng: &mut impl Rng, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    let bytes: Vec<u8> = if rng.gen_bool(0.5) {
        (0..len).map(|_| rng.gen()).collect()
    } else {
        // bias towards the language's own characters
        const ALPHABET: &[u8] = b"0123456789LSymHilb2XCpt(){}:,+-*^=>#; \n";
        (0..len).map(|_| *ALPHABET.choose(rng).expect("nonempty")).collect()
    };
    String::from_utf8_lossy(&bytes).into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_curve_square() {
        let s = sym2_signed_basis(&HodgeDiamond::curve(1));
        assert_eq!(s.get(1, 1), BigUint::from(2u32));
        assert_eq!(s.get(2, 0), BigUint::from(0u32));
        assert_eq!(s.get(1, 0), BigUint::from(1u32));
    }

    #[test]
    fn generators_are_seeded() {
        let a: Vec<String> = (0..5).map(|_| motive(&mut rng(7)).to_string()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut r = rng(1);
        for _ in 0..100 {
            assert!(small_diamond(&mut r).betti_total() <= BigUint::from(8u32));
        }
    }
}
