//! Integer polynomials in one variable, enough to state the dimension
//! formulas once and evaluate them either at a number or symbolically.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

/// The operations the dimension formulas need.
pub trait Ring:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Ring for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

/// Coefficients of `1, n, n^2, …` with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(Vec<i64>);

impl Poly {
    /// The variable `n`.
    pub fn var() -> Self {
        Poly(alloc::vec![0, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * n + c)
    }

    fn trimmed(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Poly(v)
    }
}

impl Ring for Poly {
    fn from_i64(v: i64) -> Self {
        Poly::trimmed(alloc::vec![v])
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        let v = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0))
            .collect();
        Poly::trimmed(v)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        let v = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) - rhs.0.get(i).unwrap_or(&0))
            .collect();
        Poly::trimmed(v)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Poly::default();
        }
        let mut v = alloc::vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::trimmed(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("n")?,
                (1, _) => write!(f, "{a}n")?,
                (_, 1) => write!(f, "n^{i}")?,
                _ => write!(f, "{a}n^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic() {
        let n = Poly::var();
        let p = (n.clone() + Poly::from_i64(1)) * (n.clone() - Poly::from_i64(1));
        assert_eq!(p.coeffs(), &[-1, 0, 1]);
        assert_eq!(p.eval(5), 24);
        assert_eq!((p.clone() - p).coeffs(), &[] as &[i64]);
        assert_eq!((Poly::from_i64(2) * n - Poly::from_i64(3)).to_string(), "2n - 3");
    }
}
