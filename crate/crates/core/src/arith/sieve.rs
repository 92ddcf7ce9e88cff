//! Linear sieve for μ, φ and the totient summatory Φ.

use crate::{Error, Result};

/// Immutable tables of μ(n), φ(n) and Φ(n) = Σ_{m≤n} φ(m) for 1 ≤ n ≤ bound.
///
/// Shareable across threads; every consumer treats it as read-only.
#[derive(Debug, Clone)]
pub struct SieveTables {
    bound: u64,
    mobius: Vec<i8>,
    totient: Vec<u64>,
    summatory: Vec<u64>,
}

/// Builds the tables with a linear (Euler) sieve.
///
/// Φ is accumulated in u64 with overflow checking; a bound large enough to
/// overflow (Φ(n) ~ 0.304 n²) is reported as a capacity error.
pub fn build_sieves(bound: u64) -> Result<SieveTables> {
    if bound == 0 {
        return Err(Error::Parameter("sieve bound must be >= 1".into()));
    }
    let n = usize::try_from(bound).map_err(|_| Error::Capacity(format!("bound {bound}")))?;
    if n > (1 << 33) {
        return Err(Error::Capacity(format!(
            "sieve bound {bound} exceeds supported table size"
        )));
    }

    let mut mobius = vec![0i8; n + 1];
    let mut totient = vec![0u64; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    let mut composite = vec![false; n + 1];

    mobius[1] = 1;
    totient[1] = 1;
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mobius[i] = -1;
            totient[i] = (i - 1) as u64;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mobius[ip] = 0;
                totient[ip] = totient[i] * p as u64;
                break;
            }
            mobius[ip] = -mobius[i];
            totient[ip] = totient[i] * (p - 1) as u64;
        }
    }

    let mut summatory = vec![0u64; n + 1];
    let mut acc: u64 = 0;
    for i in 1..=n {
        acc = acc
            .checked_add(totient[i])
            .ok_or_else(|| Error::Capacity(format!("Phi({i}) overflows u64")))?;
        summatory[i] = acc;
    }

    Ok(SieveTables {
        bound,
        mobius,
        totient,
        summatory,
    })
}

impl SieveTables {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// μ(n); panics if n is out of 1..=bound.
    pub fn mobius(&self, n: u64) -> i8 {
        self.mobius[n as usize]
    }

    /// φ(n); panics if n is out of 1..=bound.
    pub fn totient(&self, n: u64) -> u64 {
        self.totient[n as usize]
    }

    /// Φ(n) for integer n in 0..=bound (Φ(0) = 0).
    pub fn summatory_at(&self, n: u64) -> u64 {
        if n == 0 {
            0
        } else {
            self.summatory[n as usize]
        }
    }
}

/// Φ(⌊r⌋) for real r with 1 ≤ r ≤ bound.
pub fn totient_summatory(tables: &SieveTables, r: f64) -> Result<u64> {
    if !(r >= 1.0) {
        return Err(Error::OutOfRange(format!("r = {r} must be >= 1")));
    }
    if r > tables.bound as f64 {
        return Err(Error::OutOfRange(format!(
            "r = {r} exceeds sieve bound {}",
            tables.bound
        )));
    }
    Ok(tables.summatory_at(r.floor() as u64))
}

/// Trial-division primality check; independent of the sieve so it also works
/// just past the table bound.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
