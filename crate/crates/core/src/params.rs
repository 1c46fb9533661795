use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// An odd prime `p` and exponent `n >= 1`; the degree is `N = p^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    p: u64,
    n: u32,
    #[serde(rename = "N")]
    degree: u64,
}

impl Params {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidExponent(n));
        }
        let degree = p.checked_pow(n).ok_or(Error::DegreeOverflow { p, n })?;
        Ok(Params { p, n, degree })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `N = p^n`, always odd.
    pub fn degree(&self) -> u64 {
        self.degree
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={} N={}", self.p, self.n, self.degree)
    }
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
