//! Maximal sums of squared block sizes per separability class.
//!
//! The tight functions are exact integer maxima of `sum N_l^2` over the
//! corresponding partition classes; the `*_upper` functions are the simpler
//! closed forms obtained by dropping the integer structure.

use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tuples::is_valid;

/// Lemma-1 shape of the optimal (w,h) diagram: `k` full rows of width `w`,
/// one row of `u`, and `v` singletons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WhDecomposition {
    pub k: u32,
    pub u: u32,
    pub v: u32,
}

impl WhDecomposition {
    pub fn new(n: u32, w: u32, h: u32) -> Result<Self> {
        check_tuple(n, w, h)?;
        if w == 1 {
            // only the all-singleton diagram; k full rows of width 1 would
            // divide by zero below
            return Ok(Self { k: 0, u: 1, v: n - 1 });
        }
        let k = (n - h) / (w - 1);
        if k == h {
            // every row is full (n = h w); the closed form would report a
            // unit partial row cancelled by v = -1
            return Ok(Self { k: h - 1, u: w, v: 0 });
        }
        let u = n - h + 1 - (w - 1) * k;
        let v = h - k - 1;
        Ok(Self { k, u, v })
    }
}

/// `s` full blocks of width `w` plus a remainder block `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WidthDecomposition {
    pub s: u32,
    pub t: u32,
}

impl WidthDecomposition {
    pub fn new(n: u32, w: u32) -> Result<Self> {
        check_width(n, w)?;
        let s = n / w;
        Ok(Self { s, t: n - s * w })
    }
}

fn check_tuple(n: u32, w: u32, h: u32) -> Result<()> {
    if is_valid(n, w, h) {
        Ok(())
    } else {
        Err(Error::InvalidTuple { n, w, h })
    }
}

fn check_width(n: u32, w: u32) -> Result<()> {
    if n >= 1 && (1..=n).contains(&w) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "w",
            value: w.into(),
            n,
        })
    }
}

fn check_height(n: u32, h: u32) -> Result<()> {
    if n >= 1 && (1..=n).contains(&h) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "h",
            value: h.into(),
            n,
        })
    }
}

fn check_rank(n: u32, r: i32) -> Result<()> {
    if is_valid_rank(n, r) {
        Ok(())
    } else {
        Err(Error::InvalidRank { n, r })
    }
}

fn sq(x: u32) -> Result<u64> {
    u64::from(x)
        .checked_mul(u64::from(x))
        .ok_or(Error::Overflow("square"))
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("sum"))
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("product"))
}

/// Maximal `sum N_l^2` over partitions of `n` with width at most `w` and
/// height at least `h`.
pub fn f_wh(n: u32, w: u32, h: u32) -> Result<u64> {
    let WhDecomposition { k, u, v } = WhDecomposition::new(n, w, h)?;
    if w == 1 {
        return Ok(n.into());
    }
    add(add(mul(k.into(), sq(w)?)?, sq(u)?)?, v.into())
}

/// [`f_wh`] after moving `(w,h)` into the realizable domain:
/// `w <- min(w, n+1-h)`, then `h <- max(h, ceil(n/w))`.
pub fn f_wh_clamped(n: u32, w: u32, h: u32) -> Result<u64> {
    check_width(n, w)?;
    check_height(n, h)?;
    let w = w.min(n - h + 1);
    let h = h.max(n.div_ceil(w));
    f_wh(n, w, h)
}

/// `w(N-h) + N`, the simplified (w,h) bound.
pub fn f_wh_upper(n: u32, w: u32, h: u32) -> Result<u64> {
    check_tuple(n, w, h)?;
    add(mul(w.into(), (n - h).into())?, n.into())
}

/// Gain over the shot-noise limit, `F - N`.
pub fn quantum_advantage(f: f64, n: u32) -> f64 {
    f - f64::from(n)
}

/// Tight bound for w-producible states, `s w^2 + t^2`.
pub fn f_width(n: u32, w: u32) -> Result<u64> {
    let WidthDecomposition { s, t } = WidthDecomposition::new(n, w)?;
    add(mul(s.into(), sq(w)?)?, sq(t)?)
}

/// `wN`.
pub fn f_width_upper(n: u32, w: u32) -> Result<u64> {
    check_width(n, w)?;
    mul(w.into(), n.into())
}

/// Tight bound for h-separable states, `(N+1-h)^2 + h - 1`.
pub fn f_height(n: u32, h: u32) -> Result<u64> {
    check_height(n, h)?;
    let top = u64::from(n - h) + 1;
    let top_sq = top.checked_mul(top).ok_or(Error::Overflow("f_height"))?;
    add(top_sq, u64::from(h) - 1)
}

/// Tight bound for states of Dyson rank at most `r`.
///
/// For odd `N+r` the optimum is a single full row of width `(N+r+1)/2`. For
/// even `N+r` the general expression also covers `N+r = 4` (where it equals
/// `N+4`); two diagrams with a pair of equal wide rows beat it at
/// `N+r = 10` (rows 4,4) and `N+r = 16` (rows 6,6).
pub fn f_rank(n: u32, r: i32) -> Result<u64> {
    check_rank(n, r)?;
    let n = i128::from(n);
    let r = i128::from(r);
    let s = n + r;
    let value = if s % 2 != 0 {
        (s + 1) * (s + 1) / 4 + (n - r - 1) / 2
    } else if s == 10 && n >= 8 {
        34 - r
    } else if s == 16 && n >= 12 {
        76 - r
    } else {
        s * s / 4 + (n - r) / 2 + 2
    };
    u64::try_from(value).map_err(|_| Error::Overflow("f_rank"))
}

/// Simplified rank bound `((N+r)^2 - 1)/4 + N`, replaced by `N+4` at
/// `N+r = 4` where the expression would undercut the tight value.
pub fn f_rank_upper(n: u32, r: i32) -> Result<RBig> {
    check_rank(n, r)?;
    let n = i128::from(n);
    let s = n + i128::from(r);
    let num = if s == 4 { 4 * (n + 4) } else { s * s - 1 + 4 * n };
    Ok(RBig::from_parts(IBig::from(num), UBig::from(4u8)))
}

pub fn is_valid_rank(n: u32, r: i32) -> bool {
    if n == 0 {
        return false;
    }
    let n = i64::from(n);
    let r = i64::from(r);
    if n == 1 {
        return r == 0;
    }
    r.abs() < n && r.abs() != n - 2
}

/// Attainable Dyson ranks for `n` particles, ascending.
pub fn valid_ranks(n: u32) -> Vec<i32> {
    if n == 0 {
        return Vec::new();
    }
    let m = n as i32 - 1;
    (-m..=m).filter(|&r| is_valid_rank(n, r)).collect()
}

/// Smallest attainable rank at or above `r`, if any.
pub fn valid_rank_at_or_above(n: u32, r: i32) -> Option<i32> {
    let m = n as i32 - 1;
    (r.max(-m)..=m).find(|&x| is_valid_rank(n, x))
}
