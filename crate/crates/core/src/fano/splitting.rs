//! Splitting types of normal bundles of lines, and the tautological bundles
//! `O(d)^[2]` on `ℓ^[2] ≅ P²` checked through their cohomology.

use alloc::vec::Vec;
use core::fmt;

/// A split bundle `⊕ O(a_i)`, degrees kept in descending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Splitting(Vec<i64>);

impl Splitting {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Splitting(degrees)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn count(&self, degree: i64) -> usize {
        self.0.iter().filter(|&&a| a == degree).count()
    }
}

impl fmt::Display for Splitting {
    /// `O(1)^2 + O + O(-1)`; the zero bundle prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let a = self.0[i];
            let run = self.0[i..].iter().take_while(|&&b| b == a).count();
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if a == 0 {
                f.write_str("O")?;
            } else {
                write!(f, "O({a})")?;
            }
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Normal bundles of a line in a del Pezzo variety of dimension `n >= 2`:
/// rank `n-1`, degree `n-3`, every summand of degree at most 1. The deficits
/// `1 - a_i` are nonnegative and sum to 2, so they form `{1,1}` or `{2}`.
pub fn enumerate_line_splittings(n: u32) -> Vec<Splitting> {
    if n < 2 {
        return Vec::new();
    }
    let rank = (n - 1) as usize;
    let mut out = Vec::new();
    // deficit pattern {1,1}
    if rank >= 2 {
        let mut d = alloc::vec![1; rank - 2];
        d.extend([0, 0]);
        out.push(Splitting::new(d));
    }
    // deficit pattern {2}
    let mut d = alloc::vec![1; rank - 1];
    d.push(-1);
    out.push(Splitting::new(d));
    out.sort();
    out
}

/// Exhaustive search over multisets of `n-1` integers in `[lo, 1]` with sum
/// `n-3`. Independent of the deficit argument; used as an oracle.
pub fn brute_force_line_splittings(n: u32, lo: i64) -> Vec<Splitting> {
    if n < 2 {
        return Vec::new();
    }
    let rank = (n - 1) as usize;
    let target = n as i64 - 3;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rank);
    fn go(
        cur: &mut Vec<i64>,
        rank: usize,
        max: i64,
        lo: i64,
        sum: i64,
        target: i64,
        out: &mut Vec<Splitting>,
    ) {
        if cur.len() == rank {
            if sum == target {
                out.push(Splitting::new(cur.clone()));
            }
            return;
        }
        let left = (rank - cur.len()) as i64;
        let mut a = max;
        while a >= lo {
            // entries are non-increasing, so the rest contribute at most a each
            if sum + a * left < target {
                break;
            }
            cur.push(a);
            go(cur, rank, a, lo, sum + a, target, out);
            cur.pop();
            a -= 1;
        }
    }
    go(&mut cur, rank, 1, lo, 0, target, &mut out);
    out.sort();
    out
}

/// `O(d)^[2]` on `P²` for a line bundle `O(d)` on `P¹`, `d ∈ {-1, 0, 1}`.
pub fn tautological_square(d: i64) -> Option<Splitting> {
    match d {
        1 => Some(Splitting::new(alloc::vec![0, 0])),
        0 => Some(Splitting::new(alloc::vec![0, -1])),
        -1 => Some(Splitting::new(alloc::vec![-1, -1])),
        _ => None,
    }
}

/// Applies `(-)^[2]` summand by summand.
pub fn hilb2_normal_restriction(normal: &Splitting) -> Option<Splitting> {
    let mut out = Vec::new();
    for &a in normal.degrees() {
        out.extend_from_slice(tautological_square(a)?.degrees());
    }
    Some(Splitting::new(out))
}

/// `O(-1)^2 + O^{2n-4}`.
pub fn expected_hilb2_restriction(n: u32) -> Splitting {
    let mut d = alloc::vec![0; 2 * n as usize - 4];
    d.extend([-1, -1]);
    Splitting::new(d)
}

/// `(h^0, h^1)` of `O(e)` on `P¹`.
pub fn h_p1(e: i64) -> [i64; 2] {
    [(e + 1).max(0), (-e - 1).max(0)]
}

/// `(h^0, h^1, h^2)` of `O(e)` on `P²`.
pub fn h_p2(e: i64) -> [i64; 3] {
    let h0 = if e >= 0 { (e + 1) * (e + 2) / 2 } else { 0 };
    let h2 = if e <= -3 { (-e - 1) * (-e - 2) / 2 } else { 0 };
    [h0, 0, h2]
}

/// Cohomology of `O(a, b)` on `P¹ × P¹` by Künneth.
pub fn h_p1xp1(a: i64, b: i64) -> [i64; 3] {
    let x = h_p1(a);
    let y = h_p1(b);
    [x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1]]
}

/// Cohomology of a split bundle twisted by `O(m)` on `P²`.
pub fn h_p2_split(bundle: &Splitting, m: i64) -> [i64; 3] {
    bundle.degrees().iter().fold([0; 3], |acc, &a| {
        let h = h_p2(a + m);
        [acc[0] + h[0], acc[1] + h[1], acc[2] + h[2]]
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TautRow {
    pub d: i64,
    pub m: i64,
    /// Künneth side, `O(m+d, m)` on `P¹ × P¹`.
    pub kunneth: [i64; 3],
    /// Claimed split bundle twisted by `O(m)` on `P²`.
    pub split: [i64; 3],
}

impl TautRow {
    pub fn pass(&self) -> bool {
        self.kunneth == self.split && self.kunneth[1] == 0
    }
}

/// One row per twist `m` in `window`. `None` if `d` has no claimed splitting.
pub fn verify_taut_splitting(
    d: i64,
    window: core::ops::RangeInclusive<i64>,
) -> Option<Vec<TautRow>> {
    let bundle = tautological_square(d)?;
    Some(
        window
            .map(|m| TautRow {
                d,
                m,
                kunneth: h_p1xp1(m + d, m),
                split: h_p2_split(&bundle, m),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn line_splitting_examples() {
        let s3 = enumerate_line_splittings(3);
        assert_eq!(s3, vec![Splitting::new(vec![0, 0]), Splitting::new(vec![1, -1])]);
        assert_eq!(s3[0].to_string(), "O^2");
        assert_eq!(s3[1].to_string(), "O(1) + O(-1)");
        let s2 = enumerate_line_splittings(2);
        assert_eq!(s2, vec![Splitting::new(vec![-1])]);
        let s5 = enumerate_line_splittings(5);
        assert_eq!(s5[0].to_string(), "O(1)^2 + O^2");
        assert_eq!(s5[1].to_string(), "O(1)^3 + O(-1)");
    }

    #[test]
    fn brute_force_agrees() {
        for n in 2..=12 {
            assert_eq!(enumerate_line_splittings(n), brute_force_line_splittings(n, -10), "n={n}");
        }
    }

    #[test]
    fn restriction_examples() {
        for n in 2..=8 {
            for t in enumerate_line_splittings(n) {
                assert_eq!(hilb2_normal_restriction(&t).unwrap(), expected_hilb2_restriction(n));
            }
        }
        assert_eq!(expected_hilb2_restriction(2).to_string(), "O(-1)^2");
        assert_eq!(hilb2_normal_restriction(&Splitting::new(vec![2])), None);
    }

    #[test]
    fn taut_examples() {
        let r = verify_taut_splitting(1, 0..=0).unwrap();
        assert_eq!(r[0].kunneth[0], 2);
        assert_eq!(r[0].split[0], 2);
        let r = verify_taut_splitting(0, 0..=0).unwrap();
        assert_eq!((r[0].kunneth[0], r[0].split[0]), (1, 1));
        for row in verify_taut_splitting(-1, -1..=0).unwrap() {
            assert_eq!(row.kunneth, [0, 0, 0]);
            assert!(row.pass());
        }
        let r = verify_taut_splitting(-1, -2..=-2).unwrap();
        assert_eq!(r[0].kunneth, [0, 0, 2]);
        assert!(r[0].pass());
        assert!(verify_taut_splitting(2, 0..=0).is_none());
    }

    #[test]
    fn wrong_claim_is_caught() {
        // O(1)^[2] is not O(1) + O(-1): the twist by O(-1) separates them
        let wrong = Splitting::new(vec![1, -1]);
        let m = -1;
        assert_ne!(h_p1xp1(m + 1, m), h_p2_split(&wrong, m));
    }
}
