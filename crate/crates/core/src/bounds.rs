//! Closed-form bounds on dual-graph diameters and component counts.

use crate::error::{Error, Result};

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// Diameter bounds for a `k`-connected graph with `s` vertices and `t`
/// edges: `⌊(s-2)/k⌋ + 1` and `⌊t/k⌋`.
pub fn menger_diameter_bounds(s: u64, t: u64, k: u64) -> Result<(u64, u64)> {
    if k == 0 || s < k + 1 {
        return Err(invalid(format!("need k >= 1 and s >= k + 1, got s = {s}, k = {k}")));
    }
    Ok(((s - 2) / k + 1, t / k))
}

/// `k^c`: at most this many components when the ideal is generated in degree
/// at most `k` and has height `c`.
pub fn component_bound_by_degree(k: u64, c: u32) -> Result<u128> {
    if k == 0 || c == 0 {
        return Err(invalid(format!("need k, c >= 1, got k = {k}, c = {c}")));
    }
    (k as u128).checked_pow(c).ok_or_else(|| invalid("bound overflows 128 bits".into()))
}

/// `Σ_{i=0}^{r} C(c+i-1, i)`: at most this many components for a height-`c`
/// ideal whose quotient is Cohen–Macaulay of regularity `r`.
pub fn component_bound_by_regularity(c: u64, r: u64) -> Result<u128> {
    if c == 0 {
        return Err(invalid("need c >= 1".into()));
    }
    (0..=r).try_fold(0u128, |acc, i| {
        binomial(c + i - 1, i)
            .and_then(|b| acc.checked_add(b))
            .ok_or_else(|| invalid("bound overflows 128 bits".into()))
    })
}

/// Larman's bound `2^{n-c-3} · n` on the dual-graph diameter of a height-`c`
/// squarefree monomial ideal in `n` variables.
pub fn larman_bound(n: u64, c: u64) -> Result<u128> {
    let e = n
        .checked_sub(c + 3)
        .ok_or_else(|| invalid(format!("need n - c - 3 >= 0, got n = {n}, c = {c}")))?;
    1u128
        .checked_shl(e as u32)
        .filter(|_| e < 120)
        .and_then(|p| p.checked_mul(n as u128))
        .ok_or_else(|| invalid("bound overflows 128 bits".into()))
}

/// `d^c - 2` for an unmixed ideal of height `c` generated in degree `d`.
pub fn degree_diameter_bound(d: u64, c: u32) -> Result<u128> {
    if d < 2 || c < 2 {
        return Err(invalid(format!("need d >= 2 and c >= 2, got d = {d}, c = {c}")));
    }
    (d as u128)
        .checked_pow(c)
        .map(|p| p - 2)
        .ok_or_else(|| invalid("bound overflows 128 bits".into()))
}
