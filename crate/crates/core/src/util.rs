use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

/// Uniform integer in `[0, bound)`. Panics on a zero bound.
pub fn uniform_below<R: Rng + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    if let Some(b) = bound.to_u64() {
        return BigUint::from(rng.gen_range(0..b));
    }
    let bits = bound.bits();
    let words = bits.div_ceil(32) as usize;
    let excess = (words as u64 * 32 - bits) as u32;
    loop {
        let mut digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
        if let Some(top) = digits.last_mut() {
            *top >>= excess;
        }
        let candidate = BigUint::new(digits);
        if &candidate < bound {
            return candidate;
        }
    }
}

/// `2^e` as a big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::from(1u32) << e
}
