//! Arithmetic modulo the Mersenne prime `2^61 - 1`, used to filter
//! candidates before exact verification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::poly::Rat;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn pow(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

pub fn from_i64(v: i64) -> u64 {
    v.rem_euclid(P as i64) as u64
}

fn from_bigint(v: &BigInt) -> u64 {
    v.mod_floor(&BigInt::from(P)).to_u64().expect("reduced below P")
}

/// Image of a rational, or `None` when the denominator vanishes mod `P`.
pub fn from_rat(r: &Rat) -> Option<u64> {
    let den = from_bigint(r.denom());
    if den.is_zero() {
        return None;
    }
    Some(mul(from_bigint(r.numer()), pow(den, P - 2)))
}

/// Deterministic pseudo-random residues (SplitMix64).
pub fn sample_points(count: usize, seed: u64) -> Vec<u64> {
    let mut state = seed;
    (0..count)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            (z ^ (z >> 31)) % P
        })
        .collect()
}
