//! The correction factor `d_n` and the common denominator `n! * d_n` of all
//! degree-`n` BCH coefficients.

use num_bigint::BigUint;
use num_traits::One;

/// `d_n` together with the full denominator `n! * d_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorInfo {
    pub n: u32,
    pub d_n: BigUint,
    pub common: BigUint,
}

impl DenominatorInfo {
    pub fn new(n: u32) -> Self {
        let d_n = compute_dn(n);
        let common = factorial(n) * &d_n;
        Self { n, d_n, common }
    }
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(mut n: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut sum = 0;
    while n > 0 {
        sum += n % p;
        n /= p;
    }
    sum
}

/// All primes strictly below `n`, by a sieve of Eratosthenes.
pub fn primes_below(n: u32) -> Vec<u32> {
    let n = n as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n];
    let mut primes = Vec::new();
    for i in 2..n {
        if composite[i] {
            continue;
        }
        primes.push(i as u32);
        let mut j = i * i;
        while j < n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// `d_n = prod_{p < n prime} p^t` where `t` is the largest exponent with
/// `p^t <= s_p(n)`.
pub fn compute_dn(n: u32) -> BigUint {
    assert!(n >= 1, "degree must be positive");
    let mut d = BigUint::one();
    for p in primes_below(n) {
        let s = digit_sum(u64::from(n), u64::from(p));
        let mut power = u64::from(p);
        while power <= s {
            d *= p;
            power *= u64::from(p);
        }
    }
    d
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// The smallest common denominator `n! * d_n` of the degree-`n` coefficients.
///
/// Narrowing to a fixed-width backend happens in [`crate::backend`].
pub fn common_denominator(n: u32) -> BigUint {
    factorial(n) * compute_dn(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Digit sum via greedy subtraction of the largest power, independent of
    /// the divmod loop above.
    fn digit_sum_greedy(n: u64, p: u64) -> u64 {
        let mut rest = n;
        let mut sum = 0;
        while rest > 0 {
            let mut power = 1;
            while power * p <= rest {
                power *= p;
            }
            rest -= power;
            sum += 1;
        }
        sum
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(5, 2), 2);
        assert_eq!(digit_sum(9, 3), 1);
        assert_eq!(digit_sum(13, 5), 5);
        assert_eq!(digit_sum_greedy(13, 5), 5);
    }

    #[test]
    fn digit_sum_matches_greedy() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for n in 1..500 {
                assert_eq!(digit_sum(n, p), digit_sum_greedy(n, p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn digit_sum_is_identity_for_large_base() {
        for n in 1..50 {
            assert_eq!(digit_sum(n, n + 1), n);
            assert_eq!(digit_sum(n, 97), n);
        }
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_below(2), Vec::<u32>::new());
        assert_eq!(primes_below(3), vec![2]);
        assert_eq!(primes_below(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_below(19), vec![2, 3, 5, 7, 11, 13, 17]);
    }

    #[test]
    fn dn_examples() {
        assert_eq!(compute_dn(1), BigUint::from(1u32));
        assert_eq!(compute_dn(13), BigUint::from(210u32));
        assert_eq!(compute_dn(25), BigUint::from(546u32));
    }

    #[test]
    fn common_denominator_examples() {
        assert_eq!(common_denominator(1), BigUint::from(1u32));
        assert_eq!(common_denominator(3), BigUint::from(12u32));
        assert_eq!(common_denominator(5), BigUint::from(720u32));
        let info = DenominatorInfo::new(5);
        assert_eq!(info.common, factorial(5) * &info.d_n);
    }
}
