//! Factorization, divisor-function sieves, and sum-of-two-squares predicates.
//!
//! Everything here is exact 64-bit arithmetic: sums and products that could
//! exceed `u64` go through checked operations and surface as
//! [`Error::Arithmetic`] instead of wrapping.

use crate::error::{Error, Result};
use std::io::{Read, Write};

/// Prime-exponent decomposition of a natural number.
///
/// Primes are strictly increasing and every exponent is at least 1; the empty
/// list is the factorization of 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The (prime, exponent) list in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// sigma0: number of positive divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// sigma1: sum of positive divisors, `prod (1 + p + ... + p^e)`.
    pub fn divisor_sum(&self) -> Result<u64> {
        let overflow = || Error::Arithmetic(format!("divisor_sum({}) overflows u64", self.n));
        let mut acc: u64 = 1;
        for &(p, e) in &self.factors {
            let mut term: u64 = 1;
            let mut power: u64 = 1;
            for _ in 0..e {
                power = power.checked_mul(p).ok_or_else(overflow)?;
                term = term.checked_add(power).ok_or_else(overflow)?;
            }
            acc = acc.checked_mul(term).ok_or_else(overflow)?;
        }
        Ok(acc)
    }

    /// All positive divisors, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = out.clone();
            let mut power = 1u64;
            for _ in 0..e {
                power *= p;
                out.extend(prev.iter().map(|d| d * power));
            }
        }
        out.sort_unstable();
        out
    }

    /// Number-theoretic criterion: n is a sum of two squares (zero allowed)
    /// iff every prime factor congruent to 3 mod 4 occurs to an even power.
    pub fn is_sum_of_two_squares(&self) -> bool {
        self.factors
            .iter()
            .all(|&(p, e)| p % 4 != 3 || e % 2 == 0)
    }
}

/// Trial-division factorization. Exact for any `1 <= n < 2^63`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Domain("factorize: n must be >= 1".into()));
    }
    if n > i64::MAX as u64 {
        return Err(Error::Domain("factorize: n must be < 2^63".into()));
    }
    let mut m = n;
    let mut factors = Vec::new();
    let push = |factors: &mut Vec<(u64, u32)>, m: &mut u64, p: u64| {
        if *m % p == 0 {
            let mut e = 0u32;
            while *m % p == 0 {
                *m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    };
    push(&mut factors, &mut m, 2);
    push(&mut factors, &mut m, 3);
    let mut p = 5u64;
    // candidates 6k +/- 1
    while p * p <= m {
        push(&mut factors, &mut m, p);
        push(&mut factors, &mut m, p + 2);
        p += 6;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// True iff `n = a^2 + b^2` for some integers `a, b >= 0`, decided by the
/// prime-factor criterion.
pub fn is_sum_of_two_squares(n: u64) -> Result<bool> {
    Ok(factorize(n)?.is_sum_of_two_squares())
}

/// Same predicate by exhaustive search over `a <= b`; the independent route.
pub fn is_sum_of_two_squares_search(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("is_sum_of_two_squares: n must be >= 1".into()));
    }
    let mut a = 0u64;
    while 2 * a * a <= n {
        if is_perfect_square(n - a * a) {
            return Ok(true);
        }
        a += 1;
    }
    Ok(false)
}

/// Stricter variant requiring `a, b >= 1`, exposed for experimentation.
pub fn is_sum_of_two_positive_squares(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("is_sum_of_two_squares: n must be >= 1".into()));
    }
    let mut a = 1u64;
    while 2 * a * a <= n {
        if is_perfect_square(n - a * a) {
            return Ok(true);
        }
        a += 1;
    }
    Ok(false)
}

/// Limits for sieve construction.
#[derive(Debug, Clone, Copy)]
pub struct SieveConfig {
    /// Hard cap on the sieve limit.
    pub max_limit: u64,
    /// Budget for the construction's peak allocation, in bytes.
    pub memory_budget: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            max_limit: 100_000_000,
            memory_budget: 4 << 30,
        }
    }
}

// sigma0 (u32) + sigma1 (u64) + transient smallest-prime-power array (u64)
const SIEVE_BYTES_PER_ENTRY: u64 = 20;

const SIEVE_MAGIC: &[u8; 12] = b"pcl-sieve-1\n";

/// Precomputed sigma0 and sigma1 on `1..=limit`.
///
/// Immutable once built; share freely across threads.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    sigma0: Vec<u32>,
    sigma1: Vec<u64>,
}

impl SieveTable {
    pub fn build(limit: u64) -> Result<Self> {
        Self::build_with_config(limit, &SieveConfig::default())
    }

    /// Linear sieve over smallest prime powers; O(limit) time.
    pub fn build_with_config(limit: u64, cfg: &SieveConfig) -> Result<Self> {
        if limit == 0 {
            return Err(Error::Domain("sieve limit must be >= 1".into()));
        }
        if limit > cfg.max_limit {
            return Err(Error::Resource(format!(
                "sieve limit {} exceeds configured maximum {}",
                limit, cfg.max_limit
            )));
        }
        let need = (limit + 1).saturating_mul(SIEVE_BYTES_PER_ENTRY);
        if need > cfg.memory_budget {
            return Err(Error::Resource(format!(
                "sieve to {} needs ~{} bytes, over the {}-byte budget",
                limit, need, cfg.memory_budget
            )));
        }

        let n = limit as usize;
        let mut sigma0 = vec![0u32; n + 1];
        let mut sigma1 = vec![0u64; n + 1];
        // spf_pow[i] = p^e where p is the smallest prime factor of i and
        // p^e || i; 0 marks "not yet seen", i.e. prime when reached.
        let mut spf_pow = vec![0u64; n + 1];
        let mut primes: Vec<u64> = Vec::new();
        sigma0[1] = 1;
        sigma1[1] = 1;
        spf_pow[1] = 1;
        let overflow = |v: u64| Error::Arithmetic(format!("sigma1({v}) overflows u64"));

        for i in 2..=n {
            if spf_pow[i] == 0 {
                primes.push(i as u64);
                spf_pow[i] = i as u64;
                sigma0[i] = 2;
                sigma1[i] = 1u64
                    .checked_add(i as u64)
                    .ok_or_else(|| overflow(i as u64))?;
            }
            for &p in &primes {
                let ip = match (i as u64).checked_mul(p) {
                    Some(ip) if ip <= limit => ip,
                    _ => break,
                };
                let j = ip as usize;
                if (i as u64) % p == 0 {
                    let q = spf_pow[i] * p;
                    spf_pow[j] = q;
                    if q == ip {
                        // prime power: extend sigma of i = p^(e-1)
                        sigma0[j] = sigma0[i] + 1;
                        sigma1[j] = sigma1[i].checked_add(ip).ok_or_else(|| overflow(ip))?;
                    } else {
                        let m = (ip / q) as usize;
                        sigma0[j] = sigma0[q as usize] * sigma0[m];
                        sigma1[j] = sigma1[q as usize]
                            .checked_mul(sigma1[m])
                            .ok_or_else(|| overflow(ip))?;
                    }
                    break;
                } else {
                    spf_pow[j] = p;
                    sigma0[j] = sigma0[i] * 2;
                    sigma1[j] = sigma1[i]
                        .checked_mul(p + 1)
                        .ok_or_else(|| overflow(ip))?;
                }
            }
        }

        Ok(SieveTable {
            limit,
            sigma0,
            sigma1,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Number of divisors of `n`. Panics if `n` is outside `1..=limit`.
    #[inline]
    pub fn sigma0(&self, n: u64) -> u32 {
        assert!(n >= 1 && n <= self.limit, "sigma0({n}) outside sieve");
        self.sigma0[n as usize]
    }

    /// Sum of divisors of `n`. Panics if `n` is outside `1..=limit`.
    #[inline]
    pub fn sigma1(&self, n: u64) -> u64 {
        assert!(n >= 1 && n <= self.limit, "sigma1({n}) outside sieve");
        self.sigma1[n as usize]
    }

    /// Raw sigma0 slice indexed by n (entry 0 unused).
    pub(crate) fn sigma0_raw(&self) -> &[u32] {
        &self.sigma0
    }

    /// Versioned binary dump: magic, limit, sigma0 array, sigma1 array.
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(SIEVE_MAGIC)?;
        w.write_all(&self.limit.to_le_bytes())?;
        let mut buf = Vec::with_capacity(self.sigma0.len().saturating_sub(1) * 4);
        for v in &self.sigma0[1..] {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        w.write_all(&buf)?;
        buf.clear();
        for v in &self.sigma1[1..] {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        w.write_all(&buf)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let bad = |what: &str| Error::Format(format!("sieve dump: {what}"));
        let mut magic = [0u8; SIEVE_MAGIC.len()];
        r.read_exact(&mut magic)
            .map_err(|_| bad("missing or truncated magic"))?;
        if &magic != SIEVE_MAGIC {
            return Err(bad("unrecognized magic string"));
        }
        let mut limit_bytes = [0u8; 8];
        r.read_exact(&mut limit_bytes)
            .map_err(|_| bad("truncated header"))?;
        let limit = u64::from_le_bytes(limit_bytes);
        if limit == 0 {
            return Err(bad("limit must be >= 1"));
        }
        let n = limit as usize;
        let mut raw0 = vec![0u8; n * 4];
        r.read_exact(&mut raw0)
            .map_err(|_| bad("truncated sigma0 array"))?;
        let mut raw1 = vec![0u8; n * 8];
        r.read_exact(&mut raw1)
            .map_err(|_| bad("truncated sigma1 array"))?;
        let mut trailing = [0u8; 1];
        if r.read(&mut trailing)? != 0 {
            return Err(bad("trailing bytes after arrays"));
        }
        let mut sigma0 = Vec::with_capacity(n + 1);
        sigma0.push(0);
        sigma0.extend(raw0.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())));
        let mut sigma1 = Vec::with_capacity(n + 1);
        sigma1.push(0);
        sigma1.extend(raw1.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())));
        if sigma0[1] != 1 || sigma1[1] != 1 {
            return Err(bad("corrupt arrays: sigma(1) != 1"));
        }
        Ok(SieveTable {
            limit,
            sigma0,
            sigma1,
        })
    }
}
