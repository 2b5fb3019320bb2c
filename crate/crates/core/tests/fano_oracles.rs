use proptest::prelude::*;
use quadflip_core::fano::{
    self, brute_force_line_splittings, enumerate_line_splittings, expected_hilb2_restriction,
    hilb2_normal_restriction, Family, FanoDim, FanoParams, Poly, Regime, Ring, Splitting,
};

/// Independent of the library search: every non-increasing sequence of
/// length `n - 1` in `[lo, 1]` with sum `n - 3`, bounded from both sides.
fn splittings_oracle(n: u32, lo: i64) -> Vec<Vec<i64>> {
    fn walk(prefix: &mut Vec<i64>, len: usize, target: i64, lo: i64, out: &mut Vec<Vec<i64>>) {
        let sum: i64 = prefix.iter().sum();
        let left = (len - prefix.len()) as i64;
        if left == 0 {
            if sum == target {
                out.push(prefix.clone());
            }
            return;
        }
        let top = prefix.last().copied().unwrap_or(1);
        for a in (lo..=top).rev() {
            let max_rest = a * (left - 1);
            let min_rest = lo * (left - 1);
            if sum + a + max_rest < target || sum + a + min_rest > target {
                continue;
            }
            prefix.push(a);
            walk(prefix, len, target, lo, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(&mut Vec::new(), (n - 1) as usize, n as i64 - 3, lo, &mut out);
    out.sort();
    out
}

#[test]
fn line_splittings_against_oracles() {
    for n in 2..=30u32 {
        let found = enumerate_line_splittings(n);
        let expected_types = if n == 2 { 1 } else { 2 };
        assert_eq!(found.len(), expected_types, "n = {n}");
        for s in &found {
            assert_eq!(s.rank(), (n - 1) as usize);
            assert_eq!(s.total_degree(), n as i64 - 3);
        }
        assert_eq!(brute_force_line_splittings(n, -10), found, "n = {n}");
        let mut mine: Vec<Vec<i64>> = found.iter().map(|s| s.degrees().to_vec()).collect();
        mine.sort();
        assert_eq!(splittings_oracle(n, -10), mine, "n = {n}");
        for s in &found {
            assert_eq!(hilb2_normal_restriction(s).unwrap(), expected_hilb2_restriction(n));
        }
    }
    assert_eq!(enumerate_line_splittings(2), vec![Splitting::new(vec![-1])]);
}

/// `h^0(O(a,b))` on `P¹ × P¹` by counting bihomogeneous monomials, `h^2`
/// by Serre duality with `ω = O(-2,-2)`, `h^1` from `χ = (a+1)(b+1)`.
fn h_quadric(a: i64, b: i64) -> [i64; 3] {
    let h0 = |a: i64, b: i64| ((0..=a).count() * (0..=b).count()) as i64;
    let (h0, h2) = (h0(a, b), h0(-2 - a, -2 - b));
    [h0, h0 + h2 - (a + 1) * (b + 1), h2]
}

/// Same on `P²`: monomials of degree `e` in three variables, `ω = O(-3)`.
fn h_plane(e: i64) -> [i64; 3] {
    let h0 = |e: i64| (0..=e).map(|i| (0..=e - i).count() as i64).sum::<i64>();
    let (h0, h2) = (h0(e), h0(-3 - e));
    [h0, h0 + h2 - (e + 1) * (e + 2) / 2, h2]
}

#[test]
fn tautological_squares_on_the_plane() {
    for d in -1..=1 {
        let bundle = fano::tautological_square(d).unwrap();
        let rows = fano::verify_taut_splitting(d, -5..=5).unwrap();
        assert_eq!(rows.len(), 11);
        for row in rows {
            assert!(row.pass(), "d={d} m={}", row.m);
            let q = h_quadric(row.m + d, row.m);
            let p = bundle.degrees().iter().fold([0; 3], |acc, &a| {
                let h = h_plane(a + row.m);
                [acc[0] + h[0], acc[1] + h[1], acc[2] + h[2]]
            });
            assert_eq!(q, p, "d={d} m={}", row.m);
            assert_eq!(row.kunneth, q);
            assert_eq!(q[1], 0);
        }
    }
    assert!(fano::tautological_square(2).is_none());
}

#[test]
fn codim_grids_pass() {
    for family in [Family::Cubic, Family::TwoQuadrics, Family::Gr25] {
        let grid = fano::codim_grid(family);
        assert!(!grid.is_empty());
        for r in &grid {
            assert!(r.pass(), "{:?}: {:?}", r.params, r.checks);
        }
    }
    for family in [Family::Cubic, Family::TwoQuadrics] {
        for k in 0..=6 {
            for c in fano::symbolic_identities(family, k).unwrap() {
                assert!(c.pass(), "{family:?} k={k} {}: {} vs {}", c.name, c.lhs, c.rhs);
            }
        }
    }
}

#[test]
fn gr25_closed_forms() {
    for n in 2..=6u32 {
        let row = fano::gr25_row(n).unwrap();
        if let Some(f1) = row.f1 {
            assert_eq!(f1 as i64 + 1, 2 * n as i64 - 3, "n = {n}");
        }
        if let Some(f2) = row.f2_sigma {
            assert_eq!(f2 as i64, 3 * n as i64 - 11, "n = {n}");
        }
    }
}

#[test]
fn gr25_table_rows() {
    let rows: Vec<(Option<u32>, Option<u32>, Option<u32>, Option<u32>)> = (2..=6)
        .map(|n| {
            let r = fano::gr25_row(n).unwrap();
            (r.f1, r.f2_sigma, r.f2_tau, r.f3)
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            (Some(0), None, None, None),
            (Some(2), None, None, None),
            (Some(4), Some(1), Some(0), None),
            (Some(6), Some(4), Some(3), Some(0)),
            (Some(8), Some(7), Some(6), Some(4)),
        ]
    );
    let regime = |n, k| fano::emptiness_threshold(FanoParams::new(Family::Gr25, n, k).unwrap());
    assert_eq!(regime(5, 2), Regime::DisjointUnion);
    assert_eq!(regime(6, 2), Regime::DisjointUnion);
    assert_eq!(regime(4, 2), Regime::Isomorphism);
    assert_eq!(regime(4, 1), Regime::Flip);
    assert!(fano::gr25_row(7).is_err());
}

#[test]
fn cubic_points_give_x_itself() {
    for n in 1..=40u32 {
        assert_eq!(
            fano::expected_dim_fano(Family::Cubic, n, 0).unwrap(),
            FanoDim::Expected(n as i64)
        );
    }
}

#[test]
fn flip_shapes_are_oriented() {
    for family in [Family::Cubic, Family::TwoQuadrics] {
        for k in 0..=6 {
            for n in k.max(1)..=30 {
                let p = FanoParams::new(family, n, k).unwrap();
                for s in fano::flip_shape(p) {
                    if !s.is_degenerate() {
                        assert!(s.r >= s.s, "{p:?}");
                    }
                }
            }
        }
    }
    for n in 2..=6 {
        for k in 0..=n.min(3) {
            for s in fano::flip_shape(FanoParams::new(Family::Gr25, n, k).unwrap()) {
                assert!(s.is_degenerate() || s.r >= s.s);
            }
        }
    }
}

proptest! {
    #[test]
    fn poly_ring_matches_evaluation(
        a in prop::collection::vec(-20i64..20, 0..5),
        b in prop::collection::vec(-20i64..20, 0..5),
        x in -50i64..50,
    ) {
        let mk = |cs: &[i64]| {
            let mut p = Poly::from_i64(0);
            let mut pow = Poly::from_i64(1);
            for &c in cs {
                p = p + Poly::from_i64(c) * pow.clone();
                pow = pow * Poly::var();
            }
            p
        };
        let (pa, pb) = (mk(&a), mk(&b));
        prop_assert_eq!((pa.clone() * pb.clone()).eval(x), pa.eval(x) * pb.eval(x));
        prop_assert_eq!((pa.clone() - pb.clone()).eval(x), pa.eval(x) - pb.eval(x));
    }
}
