use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(n, k)` over arbitrary precision integers.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalised `C(c, 2) = c(c-1)/2`, valid for negative `c` as well.
pub fn choose2_signed(c: &BigInt) -> BigInt {
    c * (c - BigInt::one()) / BigInt::from(2)
}

/// `C(n, k)` for small machine integers; zero when `k < 0` or `k > n`, and
/// zero for negative `n` as well (the clamped convention used by the ledgers).
pub fn binomial_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial_i64(7, 3), 35);
        assert_eq!(binomial_i64(-1, 2), 0);
        assert_eq!(choose2_signed(&BigInt::from(-1)), BigInt::from(1));
        assert_eq!(choose2_signed(&BigInt::from(4)), BigInt::from(6));
    }
}
