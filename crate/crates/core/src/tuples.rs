//! The (w,h) tuple domain for fixed N and counts of tuple classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::is_valid_rank;
use crate::error::{Error, Result};

/// A realizable (width, height) class for `n` particles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TupleClass {
    pub n: u32,
    pub w: u32,
    pub h: u32,
}

impl TupleClass {
    pub fn new(n: u32, w: u32, h: u32) -> Result<Self> {
        if is_valid(n, w, h) {
            Ok(Self { n, w, h })
        } else {
            Err(Error::InvalidTuple { n, w, h })
        }
    }

    pub fn rank(&self) -> i32 {
        self.w as i32 - self.h as i32
    }
}

impl fmt::Display for TupleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.w, self.h)
    }
}

/// Whether some partition of `n` has width exactly `w` and height exactly `h`:
/// `ceil(n/w) <= h <= n+1-w`.
pub fn is_valid(n: u32, w: u32, h: u32) -> bool {
    n >= 1 && w >= 1 && h >= 1 && w <= n && n.div_ceil(w) <= h && h - 1 <= n - w
}

/// Every valid tuple, ordered by `w` then `h`.
pub fn all_tuples(n: u32) -> Vec<TupleClass> {
    (1..=n)
        .flat_map(|w| (n.div_ceil(w)..=n - w + 1).map(move |h| TupleClass { n, w, h }))
        .collect()
}

fn ceil_sum(n: u32, range: impl Iterator<Item = u32>) -> u64 {
    range.map(|x| u64::from(n.div_ceil(x))).sum()
}

/// Number of tuples with width at most `w`: `w(2N-w+3)/2 - sum ceil(N/w_i)`.
pub fn count_width_leq(n: u32, w: u32) -> Result<u64> {
    if !(1..=n).contains(&w) {
        return Err(Error::Domain {
            what: "w",
            value: w.into(),
            n,
        });
    }
    let (n64, w64) = (u64::from(n), u64::from(w));
    Ok(w64 * (2 * n64 - w64 + 3) / 2 - ceil_sum(n, 1..=w))
}

/// Number of tuples with height at least `h`:
/// `(N-h+4)(N-h+1)/2 - sum ceil(N/h_i)`.
pub fn count_height_geq(n: u32, h: u32) -> Result<u64> {
    if !(1..=n).contains(&h) {
        return Err(Error::Domain {
            what: "h",
            value: h.into(),
            n,
        });
    }
    let d = u64::from(n - h);
    Ok((d + 4) * (d + 1) / 2 - ceil_sum(n, h..=n))
}

/// Number of tuples with Dyson rank at most `r`, by direct enumeration.
pub fn count_rank_leq(n: u32, r: i32) -> Result<u64> {
    if !is_valid_rank(n, r) {
        return Err(Error::InvalidRank { n, r });
    }
    Ok(all_tuples(n).iter().filter(|t| t.rank() <= r).count() as u64)
}

/// Smallest width `w` with `w(w - r) >= n`, i.e. `ceil((sqrt(r^2+4n)+r)/2)`.
fn min_width_for_rank(n: u32, r: i32) -> i64 {
    let (n, r) = (i64::from(n), i64::from(r));
    let disc = (r * r + 4 * n) as u64;
    let mut w = ((disc.isqrt() as i64 + r) / 2).max(1);
    while w > 1 && (w - 1) * (w - 1 - r) >= n {
        w -= 1;
    }
    while w * (w - r) < n {
        w += 1;
    }
    w
}

/// Closed-form rank count, available at `r = 1-N` and for `3-N <= r <= N-3`:
/// `N + r - 1 + sum_{r_i=3-N}^{r} (floor((N+1+r_i)/2) - ceil((sqrt(r_i^2+4N)+r_i)/2))`.
pub fn count_rank_leq_closed(n: u32, r: i32) -> Option<u64> {
    if !is_valid_rank(n, r) {
        return None;
    }
    let ni = n as i64;
    let ri = i64::from(r);
    if ri == 1 - ni {
        return Some(1);
    }
    if ri < 3 - ni || ri > ni - 3 {
        return None;
    }
    let mut total = ni + ri - 1;
    for x in (3 - ni)..=ri {
        total += (ni + 1 + x).div_euclid(2) - min_width_for_rank(n, x as i32);
    }
    u64::try_from(total).ok()
}

/// Count of tuples satisfying `pred`; the enumeration reference for the
/// closed forms above.
pub fn count_where(n: u32, pred: impl Fn(&TupleClass) -> bool) -> u64 {
    all_tuples(n).iter().filter(|t| pred(t)).count() as u64
}
