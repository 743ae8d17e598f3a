//! Macaulay representation arithmetic: the greedy binomial expansion, the
//! lower operator used in the hyperplane restriction bound, the p-fold
//! shifted bound and the combinatorial inequality behind the main argument.

use num::BigUint;
use num::{One, Zero};

/// `binom(a, b)` with the convention that it is 0 when `a < 0` or `a < b`.
pub fn binom(a: i64, b: u32) -> BigUint {
    if a < 0 || (a as u64) < b as u64 {
        return BigUint::zero();
    }
    let a = a as u64;
    let b = (b as u64).min(a - b as u64);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..b {
        num *= BigUint::from(a - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// The `d`'th Macaulay representation of `c`: coefficients `(k_d, ..., k_1)`,
/// strictly decreasing, chosen greedily from the top and padded with
/// zero-valued terms so the array always has length `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    pub c: BigUint,
    pub d: u32,
    pub coeffs: Vec<u64>,
}

impl MacaulayRep {
    /// Re-sums the binomials; equals `c` by construction.
    pub fn value(&self) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(idx, &k)| binom(k as i64, self.d - idx as u32))
            .sum()
    }
}

/// Largest `k <= cap` with `binom(k, j) <= rem`.
fn greedy_coefficient(rem: &BigUint, j: u32, cap: Option<u64>) -> u64 {
    // grow an upper bound, then binary search
    let mut hi = cap.unwrap_or_else(|| {
        let mut h = j as u64 + 1;
        while binom(h as i64, j) <= *rem {
            h *= 2;
        }
        h
    });
    let mut lo = 0u64;
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if binom(mid as i64, j) <= *rem {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

pub fn macaulay_rep(c: &BigUint, d: u32) -> MacaulayRep {
    assert!(d >= 1, "d must be positive");
    let mut rem = c.clone();
    let mut coeffs = Vec::with_capacity(d as usize);
    let mut cap: Option<u64> = None;
    for j in (1..=d).rev() {
        let k = greedy_coefficient(&rem, j, cap);
        rem -= binom(k as i64, j);
        cap = Some(k.saturating_sub(1));
        coeffs.push(k);
    }
    debug_assert!(rem.is_zero(), "greedy expansion must be exact");
    MacaulayRep {
        c: c.clone(),
        d,
        coeffs,
    }
}

/// `c_<d>`: each Macaulay coefficient lowered by one before re-summing.
pub fn macaulay_lower(c: &BigUint, d: u32) -> BigUint {
    shifted_bound(c, d, 1)
}

/// The p-fold shifted bound: each Macaulay coefficient lowered by `p`.
/// `p = 0` returns `c`.
pub fn shifted_bound(c: &BigUint, d: u32, p: u64) -> BigUint {
    let rep = macaulay_rep(c, d);
    rep.coeffs
        .iter()
        .enumerate()
        .map(|(idx, &k)| binom(k as i64 - p as i64, d - idx as u32))
        .sum()
}

/// Macaulay growth: the largest admissible next value of a Hilbert function,
/// `sum binom(k_j + 1, j + 1)` over the representation of `c`.
pub fn macaulay_growth(c: &BigUint, d: u32) -> BigUint {
    let rep = macaulay_rep(c, d);
    rep.coeffs
        .iter()
        .enumerate()
        .map(|(idx, &k)| binom(k as i64 + 1, d - idx as u32 + 1))
        .sum()
}

/// The key inequality of the restriction argument: if
/// `c_H <= (c_H)_<d> + (c - c_H)_<d-1>` then `c_H <= c_<d>`.
/// For `d = 1` the `<d-1>` operator is the identity.
pub fn lemma_green_inequality(c: &BigUint, c_h: &BigUint, d: u32) -> bool {
    assert!(c_h <= c);
    let diff = c - c_h;
    let lowered_diff = if d == 1 {
        diff.clone()
    } else {
        macaulay_lower(&diff, d - 1)
    };
    let hypothesis = *c_h <= macaulay_lower(c_h, d) + lowered_diff;
    if !hypothesis {
        return true;
    }
    *c_h <= macaulay_lower(c, d)
}

/// Macaulay's growth condition: `hf[0] = 1` and
/// `hf[d+1] <= growth(hf[d], d)` for every `d >= 1`.
pub fn is_o_sequence(hf: &[u64]) -> bool {
    if hf.first() != Some(&1) {
        return false;
    }
    for d in 1..hf.len().saturating_sub(1) {
        let bound = macaulay_growth(&BigUint::from(hf[d]), d as u32);
        if BigUint::from(hf[d + 1]) > bound {
            return false;
        }
    }
    true
}
