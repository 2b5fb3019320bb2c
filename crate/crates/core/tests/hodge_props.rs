use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use quadflip_core::hodge::{self, HodgeDiamond};

/// Tables with Hodge symmetry and Serre duality: every cell takes the value
/// of the least member of its orbit.
fn symmetric_diamond(max_dim: u32, max_entry: u64) -> impl Strategy<Value = HodgeDiamond> {
    (0..=max_dim).prop_flat_map(move |n| {
        let cells = ((n + 1) * (n + 1)) as usize;
        prop::collection::vec(0..=max_entry, cells).prop_map(move |raw| {
            let mut entries = Vec::new();
            for p in 0..=n {
                for q in 0..=n {
                    let rep = [(p, q), (q, p), (n - p, n - q), (n - q, n - p)]
                        .into_iter()
                        .min()
                        .unwrap();
                    let v = raw[(rep.0 * (n + 1) + rep.1) as usize];
                    if v > 0 {
                        entries.push((p, q, v));
                    }
                }
            }
            HodgeDiamond::from_u64s(n, &entries).unwrap()
        })
    })
}

fn raw_diamond(max_dim: u32, max_entry: u64) -> impl Strategy<Value = HodgeDiamond> {
    (0..=max_dim).prop_flat_map(move |n| {
        let cells = ((n + 1) * (n + 1)) as usize;
        prop::collection::vec(0..=max_entry, cells).prop_map(move |raw| {
            let entries: Vec<(u32, u32, u64)> = raw
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(i, &v)| (i as u32 / (n + 1), i as u32 % (n + 1), v))
                .collect();
            HodgeDiamond::from_u64s(n, &entries).unwrap()
        })
    })
}

fn diagonal_only(a: &HodgeDiamond) -> bool {
    a.entries().iter().all(|(p, q, _)| p == q)
}

fn is_hodge_symmetric(a: &HodgeDiamond) -> bool {
    a.entries().iter().all(|(p, q, v)| a.get(*q as i64, *p as i64) == *v)
}

fn is_serre_dual(a: &HodgeDiamond) -> bool {
    let n = a.dim() as i64;
    a.entries()
        .iter()
        .all(|(p, q, v)| a.get(n - *p as i64, n - *q as i64) == *v)
}

/// Rank over Q by fraction-free elimination.
fn rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0i64, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
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

/// Builds `H ⊗ H` on an explicit basis, writes down the signed swap
/// `x ⊗ y ↦ (-1)^{|x||y|} y ⊗ x` bidegree by bidegree, and counts its
/// `+1`-eigenvectors as `dim − rank(σ − 1)`.
fn sym2_oracle(a: &HodgeDiamond) -> HodgeDiamond {
    let mut basis: Vec<(u32, u32)> = Vec::new();
    for (p, q, v) in a.entries() {
        let v: u64 = v.try_into().unwrap();
        for _ in 0..v {
            basis.push((p, q));
        }
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
            let index = |i: usize, j: usize| pairs.iter().position(|&x| x == (i, j)).unwrap();
            let d = pairs.len();
            let mut m = vec![vec![0i64; d]; d];
            for (col, &(i, j)) in pairs.iter().enumerate() {
                let deg_i = basis[i].0 + basis[i].1;
                let deg_j = basis[j].0 + basis[j].1;
                let sign = if deg_i % 2 == 1 && deg_j % 2 == 1 { -1 } else { 1 };
                m[index(j, i)][col] += sign;
                m[col][col] -= 1;
            }
            let plus = d - rank(m);
            if plus > 0 {
                out.push((bp, bq, plus as u64));
            }
        }
    }
    HodgeDiamond::from_u64s(2 * a.dim(), &out).unwrap()
}

#[test]
fn sym2_matches_oracle_on_curves() {
    for g in 0..=4 {
        let c = HodgeDiamond::curve(g);
        assert_eq!(hodge::sym2(&c), sym2_oracle(&c), "genus {g}");
    }
}

#[test]
fn oracle_sanity() {
    // Sym² of an elliptic curve is a ruled surface over it
    let e = sym2_oracle(&HodgeDiamond::curve(1));
    assert_eq!(e.get(1, 0), BigUint::from(1u32));
    assert_eq!(e.get(1, 1), BigUint::from(2u32));
    assert_eq!(e.get(2, 0), BigUint::from(0u32));
    assert_eq!(sym2_oracle(&HodgeDiamond::projective_space(1)), HodgeDiamond::projective_space(2));
}

fn small_total() -> impl Strategy<Value = HodgeDiamond> {
    raw_diamond(3, 3).prop_filter("total at most 8", |a| a.betti_total() <= BigUint::from(8u32))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn sym2_matches_oracle_on_small_diamonds(a in small_total()) {
        prop_assert_eq!(hodge::sym2(&a), sym2_oracle(&a));
    }
}

proptest! {
    #[test]
    fn kunneth_commutes(a in raw_diamond(3, 5), b in raw_diamond(3, 5)) {
        prop_assert_eq!(hodge::kunneth(&a, &b), hodge::kunneth(&b, &a));
    }

    #[test]
    fn point_is_kunneth_unit(a in raw_diamond(4, 9)) {
        prop_assert_eq!(hodge::kunneth(&a, &HodgeDiamond::point()), a);
    }

    #[test]
    fn sym2_plus_alt2_is_square(a in raw_diamond(4, 20)) {
        let square = hodge::kunneth(&a, &a);
        let s = hodge::sym2(&a);
        let t = hodge::alt2(&a);
        for p in 0..=2 * a.dim() as i64 {
            for q in 0..=2 * a.dim() as i64 {
                prop_assert_eq!(s.get(p, q) + t.get(p, q), square.get(p, q));
            }
        }
    }

    #[test]
    fn symmetry_is_preserved(a in symmetric_diamond(4, 6)) {
        prop_assert!(a.clone().validate().is_ok());
        prop_assert!(is_hodge_symmetric(&hodge::sym2(&a)));
        if a.dim() > 0 {
            let h = hodge::hilbert_square(&a).unwrap();
            prop_assert_eq!(h.dim(), 2 * a.dim());
            prop_assert!(is_serre_dual(&h));
            prop_assert!(is_hodge_symmetric(&h));
        }
    }

    #[test]
    fn hh0_is_supermultiplicative(a in raw_diamond(3, 6), b in raw_diamond(3, 6)) {
        let prod = hodge::kunneth(&a, &b).hh0();
        let bound = a.hh0() * b.hh0();
        prop_assert!(prod >= bound);
        if diagonal_only(&a) || diagonal_only(&b) {
            prop_assert_eq!(prod, bound);
        }
    }

    #[test]
    fn euler_of_hilbert_square(a in symmetric_diamond(4, 12)) {
        prop_assume!(a.dim() > 0);
        let e = a.euler();
        let n = BigInt::from(a.dim());
        let expected = &e * (&e + 1) / 2 + (n - 1) * &e;
        prop_assert_eq!(hodge::hilbert_square(&a).unwrap().euler(), expected);
    }

    #[test]
    fn projective_bundle_of_point_is_projective_space(r in 1u32..20) {
        prop_assert_eq!(
            hodge::projective_bundle(&HodgeDiamond::point(), r).unwrap(),
            HodgeDiamond::projective_space(r - 1)
        );
    }
}

#[test]
fn example_diamonds_stay_serre_dual() {
    let qds = HodgeDiamond::from_u64s(
        3,
        &[(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1), (1, 2, 10), (2, 1, 10)],
    )
    .unwrap()
    .validate()
    .unwrap();
    let mut examples = vec![qds, HodgeDiamond::projective_space(3)];
    examples.extend((0..5).map(HodgeDiamond::curve));
    for x in &examples {
        let h = hodge::hilbert_square(x).unwrap();
        assert!(is_serre_dual(&h) && is_hodge_symmetric(&h));
    }
}
