//! Independent oracles. Nothing here calls into the coders it checks.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Minimum weighted path length over every full binary tree whose leaves
/// carry `weights`, by exhaustive split enumeration.
pub fn brute_force_min_cost(weights: &[u64]) -> u64 {
    if weights.len() <= 1 {
        return 0;
    }
    let n = weights.len();
    let total: u64 = weights.iter().sum();
    let mut best = u64::MAX;
    // every nonempty proper subset containing element 0 (avoids mirror pairs)
    for mask in 1u32..(1 << n) - 1 {
        if mask & 1 == 0 {
            continue;
        }
        let (a, b): (Vec<u64>, Vec<u64>) = {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (i, &w) in weights.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a.push(w)
                } else {
                    b.push(w)
                }
            }
            (a, b)
        };
        best = best.min(brute_force_min_cost(&a) + brute_force_min_cost(&b) + total);
    }
    best
}

/// Same optimum, but over codes: a lone symbol still needs a one-bit
/// codeword.
pub fn brute_force_min_code_cost(weights: &[u64]) -> u64 {
    match weights {
        [w] => *w,
        _ => brute_force_min_cost(weights),
    }
}

/// Shortest, then smallest, dyadic interval inside `[low, high)`, found by
/// trying every bit string in order of length then value.
pub fn brute_force_codeword(low: &BigRational, high: &BigRational, max_len: u32) -> Option<String> {
    for len in 0..=max_len {
        let denom = BigInt::one() << len;
        for k in 0u64..(1u64 << len) {
            let a = BigRational::new(BigInt::from(k), denom.clone());
            let b = BigRational::new(BigInt::from(k + 1), denom.clone());
            if &a >= low && &b <= high {
                return Some((0..len).rev().map(|i| if k >> i & 1 == 1 { '1' } else { '0' }).collect());
            }
        }
    }
    None
}

/// Exact check of `H <= W/total < H + 1` where H is the entropy of `counts`
/// and W the weighted code length, rewritten as integer inequalities:
/// `total^total <= 2^W * prod c^c < 2^total * total^total`.
pub fn entropy_bounds_exact(counts: &[u64], weighted_len: u64) -> (bool, bool) {
    let total: u64 = counts.iter().sum();
    let t_pow = BigUint::from(total).pow(total as u32);
    let prod = counts
        .iter()
        .fold(BigUint::one(), |acc, &c| acc * BigUint::from(c).pow(c as u32));
    let lhs = (BigUint::one() << weighted_len) * prod;
    let lower = t_pow <= lhs;
    let upper = lhs < (BigUint::one() << total) * t_pow;
    (lower, upper)
}

/// Information content `-sum log2 p(s)` of `msg` under `counts`.
pub fn information_bits(msg: &[u16], counts: &std::collections::HashMap<u16, u64>) -> f64 {
    let total: u64 = counts.values().sum();
    msg.iter()
        .map(|s| -((counts[s] as f64) / total as f64).log2())
        .sum()
}

/// A random alphabet of `k` distinct symbols with random positive weights.
pub fn random_alphabet(r: &mut ChaCha8Rng, k: usize, max_weight: u64) -> Vec<(u16, u64)> {
    let mut syms = std::collections::BTreeSet::new();
    while syms.len() < k {
        syms.insert(r.random::<u16>());
    }
    syms.into_iter().map(|s| (s, r.random_range(1..=max_weight))).collect()
}

/// Draws `len` symbols i.i.d. proportional to the weights.
pub fn sample(r: &mut ChaCha8Rng, alphabet: &[(u16, u64)], len: usize) -> Vec<u16> {
    let total: u64 = alphabet.iter().map(|a| a.1).sum();
    let mut cum = Vec::with_capacity(alphabet.len());
    let mut acc = 0;
    for a in alphabet {
        acc += a.1;
        cum.push(acc);
    }
    (0..len)
        .map(|_| {
            let x = r.random_range(0..total);
            alphabet[cum.partition_point(|&c| c <= x)].0
        })
        .collect()
}

/// Message lengths spread log-uniformly over `0..=max`, always including
/// both ends.
pub fn random_length(r: &mut ChaCha8Rng, i: usize, max: usize) -> usize {
    match i {
        0 => 0,
        1 => max,
        _ => {
            let e: f64 = r.random_range(0.0..(max as f64 + 1.0).ln());
            (e.exp() as usize - 1).min(max)
        }
    }
}
