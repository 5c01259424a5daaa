//! The pairing function `<x, y> = (x+y+1)(x+y+2)/2 + y` and its
//! partial inverse. The image misses exactly the numbers `T(n) - 1`
//! where `T(n) = n(n+1)/2`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `T(n) = n(n+1)/2`.
fn triangular(n: &BigUint) -> BigUint {
    (n * (n + 1u32)) >> 1
}

pub fn pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    triangular(&(s + 1u32)) + y
}

pub fn pair_u64(x: u64, y: u64) -> BigUint {
    pair(&BigUint::from(x), &BigUint::from(y))
}

/// Largest `n` with `T(n) <= z`.
fn triangular_root(z: &BigUint) -> BigUint {
    // n = floor((sqrt(8z+1) - 1) / 2)
    let r = ((z << 3u32) + 1u32).sqrt();
    (r - 1u32) >> 1
}

pub fn unpair(z: &BigUint) -> Result<(BigUint, BigUint)> {
    if z.is_zero() {
        return Err(Error::NotInPairImage(z.clone()));
    }
    // z = T(s+1) + y with 0 <= y <= s
    let n = triangular_root(z);
    let y = z - triangular(&n);
    let s = &n - BigUint::one();
    if y > s {
        return Err(Error::NotInPairImage(z.clone()));
    }
    let x = s - &y;
    Ok((x, y))
}

pub fn in_pair_image(z: &BigUint) -> bool {
    unpair(z).is_ok()
}
