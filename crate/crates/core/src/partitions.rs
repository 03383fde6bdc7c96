//! Counting partitions by their number of distinct part sizes.
//!
//! `nu2` is computed two independent ways: a divisor-convolution formula over
//! a [`SieveTable`], and brute-force enumeration over part-size pairs. The
//! two routes must agree exactly; tests and the acceptance suite hold them
//! against each other.

use crate::arith::SieveTable;
use crate::error::{Error, Result};

/// Default ceiling for the brute-force enumerators.
pub const DEFAULT_BRUTE_FORCE_BOUND: u64 = 5000;

/// The convolution is O(N) per call; refuse anything past this rather than
/// approximate.
pub const MAX_CONVOLUTION_N: u64 = 1_000_000;

/// A partition with exactly two part sizes: `count_larger` copies of
/// `larger` followed by `count_smaller` copies of `smaller`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartitionTwoSizes {
    pub larger: u64,
    pub smaller: u64,
    pub count_larger: u64,
    pub count_smaller: u64,
}

impl PartitionTwoSizes {
    pub fn total(&self) -> u64 {
        self.larger * self.count_larger + self.smaller * self.count_smaller
    }
}

fn check_bound(n: u64, bound: u64, what: &str) -> Result<()> {
    if n > bound {
        return Err(Error::Resource(format!(
            "{what}: N={n} exceeds the brute-force bound {bound}"
        )));
    }
    Ok(())
}

/// All partitions of `n` with exactly two part sizes, in lexicographic
/// (larger, smaller, count_larger) order.
pub fn enumerate_two_size_partitions(n: u64) -> Result<Vec<PartitionTwoSizes>> {
    enumerate_two_size_partitions_with_bound(n, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn enumerate_two_size_partitions_with_bound(
    n: u64,
    bound: u64,
) -> Result<Vec<PartitionTwoSizes>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_two_size_partitions: n must be >= 1".into()));
    }
    check_bound(n, bound, "enumerate_two_size_partitions")?;
    let mut out = Vec::new();
    for larger in 2..n {
        for count_larger in 1..=(n - 1) / larger {
            let rem = n - count_larger * larger;
            // smaller runs over divisors of rem below `larger`
            let mut d = 1;
            while d * d <= rem {
                if rem % d == 0 {
                    if d < larger {
                        out.push(PartitionTwoSizes {
                            larger,
                            smaller: d,
                            count_larger,
                            count_smaller: rem / d,
                        });
                    }
                    let e = rem / d;
                    if e != d && e < larger {
                        out.push(PartitionTwoSizes {
                            larger,
                            smaller: e,
                            count_larger,
                            count_smaller: d,
                        });
                    }
                }
                d += 1;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of divisors of `x` that are `<= cap`.
fn divisors_leq(x: u64, cap: u64) -> u64 {
    let mut count = 0;
    let mut d = 1;
    while d * d <= x {
        if x % d == 0 {
            if d <= cap {
                count += 1;
            }
            let e = x / d;
            if e != d && e <= cap {
                count += 1;
            }
        }
        d += 1;
    }
    count
}

/// Number of partitions of `n` with exactly `k` distinct part sizes, by
/// direct enumeration over part-value subsets with multiplicities.
pub fn nu_k_bruteforce(n: u64, k: u64) -> Result<u64> {
    nu_k_bruteforce_with_bound(n, k, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn nu_k_bruteforce_with_bound(n: u64, k: u64, bound: u64) -> Result<u64> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("nu_k: n and k must be >= 1".into()));
    }
    check_bound(n, bound, "nu_k_bruteforce")?;
    // the k distinct values alone already sum to at least 1 + 2 + ... + k
    if k * (k + 1) / 2 > n {
        return Ok(0);
    }
    fn rec(remaining: u64, max_val: u64, k_left: u64) -> u64 {
        if k_left == 1 {
            return divisors_leq(remaining, max_val);
        }
        let min_tail = (k_left - 1) * k_left / 2;
        let mut total = 0;
        let mut v = k_left; // needs k_left - 1 distinct values below it
        while v <= max_val && v + min_tail <= remaining {
            let mut used = v;
            while used + min_tail <= remaining {
                total += rec(remaining - used, v - 1, k_left - 1);
                used += v;
            }
            v += 1;
        }
        total
    }
    Ok(rec(n, n, k))
}

/// `sum_{k=1}^{N-1} sigma0(k) * sigma0(N-k)`.
pub fn divisor_convolution(n: u64, table: &SieveTable) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("divisor_convolution: n must be >= 2".into()));
    }
    if n > MAX_CONVOLUTION_N {
        return Err(Error::Resource(format!(
            "divisor_convolution: N={n} exceeds the budget {MAX_CONVOLUTION_N}"
        )));
    }
    if table.limit() < n - 1 {
        return Err(Error::Precondition(format!(
            "divisor_convolution({n}) needs a sieve to {}, have {}",
            n - 1,
            table.limit()
        )));
    }
    let s0 = table.sigma0_raw();
    let mut sum: u64 = 0;
    for k in 1..n {
        let term = u64::from(s0[k as usize]) * u64::from(s0[(n - k) as usize]);
        sum = sum
            .checked_add(term)
            .ok_or_else(|| Error::Arithmetic(format!("divisor_convolution({n}) overflows u64")))?;
    }
    Ok(sum)
}

/// Closed formula for the two-part-size count:
/// `nu2(N) = (conv(N) - sigma1(N) + sigma0(N)) / 2`.
pub fn nu2_formula(n: u64, table: &SieveTable) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("nu2_formula: n must be >= 2".into()));
    }
    if table.limit() < n {
        return Err(Error::Precondition(format!(
            "nu2_formula({n}) needs a sieve to {n}, have {}",
            table.limit()
        )));
    }
    let conv = divisor_convolution(n, table)?;
    let bracket = conv
        .checked_add(u64::from(table.sigma0(n)))
        .ok_or_else(|| Error::Arithmetic(format!("nu2_formula({n}) overflows u64")))?
        .checked_sub(table.sigma1(n))
        .ok_or_else(|| {
            Error::Invariant(format!(
                "nu2_formula({n}): convolution + sigma0 < sigma1; sieve is corrupt"
            ))
        })?;
    if bracket % 2 != 0 {
        return Err(Error::Invariant(format!(
            "nu2_formula({n}): pre-division quantity {bracket} is odd; sieve is corrupt"
        )));
    }
    Ok(bracket / 2)
}
