//! Exact integer combinatorics: Pascal binomials, factorials, and brute-force
//! subset enumeration. No floating point.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Row `n` of Pascal's triangle, built by the additive recursion.
pub fn pascal_row(n: u64) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    pascal_row(n).swap_remove(k as usize)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, m| acc * m)
}

/// `n! / (parts[0]! * parts[1]! * ...)`, where the parts must sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> BigUint {
    assert_eq!(parts.iter().sum::<u64>(), n, "parts must sum to n");
    parts
        .iter()
        .fold(factorial(n), |acc, k| acc / factorial(*k))
}

/// Largest set size accepted by [`count_disjoint_subset_pairs`].
pub const MAX_ENUMERATION_SIZE: u64 = 20;

/// Counts ordered pairs `(S, T)` of disjoint `i`-subsets of an `n`-set by
/// walking every bitmask.
pub fn count_disjoint_subset_pairs(n: u64, i: u64) -> u64 {
    assert!(n <= MAX_ENUMERATION_SIZE, "enumeration only for n <= 20");
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let subsets: Vec<u32> = (0..=full)
        .filter(|m| u64::from(m.count_ones()) == i)
        .collect();
    let mut count = 0u64;
    for s in &subsets {
        let rest = full & !s;
        // walk the submasks of the complement
        let mut t = rest;
        loop {
            if u64::from(t.count_ones()) == i {
                count += 1;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
    }
    count
}
