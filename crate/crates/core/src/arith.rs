//! Integer helpers for exponent bookkeeping modulo `2^n - 1`.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `value` modulo `modulus`, via the extended Euclidean algorithm.
pub fn mod_inverse(value: u64, modulus: u64) -> Result<u64> {
    let g = gcd(value % modulus.max(1), modulus);
    if modulus <= 1 || g != 1 {
        return Err(Error::NoModularInverse { value, modulus, gcd: g });
    }
    let (mut r0, mut r1) = (modulus as i128, (value % modulus) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    Ok(t0.rem_euclid(modulus as i128) as u64)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= v {
        if v.is_multiple_of(p) {
            out.push(p);
            while v.is_multiple_of(p) {
                v /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if v > 1 {
        out.push(v);
    }
    out
}

pub fn euler_phi(v: u64) -> u64 {
    prime_factors(v).iter().fold(v, |acc, p| acc / p * (p - 1))
}

/// The units of `Z/mZ`, ascending.
pub fn units(m: u64) -> Vec<u64> {
    (1..m.max(2)).filter(|&d| gcd(d, m) == 1).collect()
}

/// Representative of `e` in `[1, m]` for `e > 0`; zero stays zero.
///
/// This is the exponent rule for functions on GF(2^n) with `m = 2^n - 1`:
/// `x^e` and `x^{e'}` agree everywhere iff both are positive and congruent mod `m`.
pub fn reduce_positive(e: u64, m: u64) -> u64 {
    if e == 0 {
        0
    } else {
        (e - 1) % m + 1
    }
}
