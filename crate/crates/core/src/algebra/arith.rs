//! Carry arithmetic `⌊(s+t)/m⌋` and the telescoping identities built on it.

use crate::error::{Error, Result};

/// `⌊(s + t)/m⌋`. For reduced inputs `0 <= s, t < m` this is 0 or 1.
pub fn carry(s: u64, t: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NonPositiveModulus);
    }
    Ok(carry_unchecked(s, t, m))
}

#[inline]
pub(crate) fn carry_unchecked(s: u64, t: u64, m: u64) -> u64 {
    ((s as u128 + t as u128) / m as u128) as u64
}

/// Both sides of `⌊(s + t mod r)/r⌋ = ⌊(s+t)/r⌋ - ⌊t/r⌋`.
pub fn carry_shift_identity(s: u64, t: u64, r: u64) -> Result<(i128, i128)> {
    let lhs = carry(s, t % r, r)? as i128;
    let rhs = carry(s, t, r)? as i128 - (t / r) as i128;
    Ok((lhs, rhs))
}

/// Both sides of the alternating carry telescoping identity for the
/// `2l+1` naturals `a[0..=2l]` (so `a[0]` is `a_1`). Evaluated term by term,
/// without using the shift identity.
pub fn telescoping_identity(a: &[u64], r: u64) -> Result<(i128, i128)> {
    if r == 0 {
        return Err(Error::NonPositiveModulus);
    }
    if a.len() % 2 == 0 {
        return Err(Error::IndexOutOfRange(format!(
            "need an odd number of values, got {}",
            a.len()
        )));
    }
    let l = a.len() / 2;
    // 1-based access matching a_1, ..., a_{2l+1}
    let at = |i: usize| a[i - 1];
    let fl = |x: u64, y: u64| carry_unchecked(x, y, r) as i128;
    let rem = |x: u64, y: u64| (x + y) % r;

    let mut lhs = 0i128;
    for i in 1..=l {
        let upper: i128 = (i + 1..=l).map(|j| fl(at(2 * j + 1), at(2 * j))).product();
        let middle = fl(at(2 * i + 1), rem(at(2 * i), at(2 * i - 1)))
            - fl(rem(at(2 * i + 1), at(2 * i)), at(2 * i - 1));
        let lower: i128 = (1..i).map(|j| fl(at(2 * j), at(2 * j - 1))).product();
        lhs += upper * middle * lower;
    }
    let odd_pairs: i128 = (1..=l).map(|j| fl(at(2 * j + 1), at(2 * j))).product();
    let even_pairs: i128 = (1..=l).map(|j| fl(at(2 * j), at(2 * j - 1))).product();
    Ok((lhs, odd_pairs - even_pairs))
}
