//! Spin-squeezing floors for each separability class.
//!
//! A state whose largest block structure is bounded by a QFI limit `f`
//! satisfies `xi^2 >= 2N / (f + 2N)`. The floors are necessary conditions for
//! membership in the class; the underlying inequality is only asymptotically
//! attainable, and only when every block has more than one particle.

use dashu::integer::IBig;
use dashu::rational::RBig;
use serde::Serialize;

use crate::bounds::{f_rank_upper, f_wh_upper, is_valid_rank};
use crate::error::{Error, Result};
use crate::tuples::is_valid;

/// Squeezing coefficient on both scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezingValue {
    pub linear: f64,
    pub db: f64,
}

impl SqueezingValue {
    pub fn from_linear(linear: f64) -> Result<Self> {
        if !(linear > 0.0 && linear.is_finite()) {
            return Err(Error::Measurement(format!("xi^2 must be positive, got {linear}")));
        }
        Ok(Self {
            linear,
            db: linear_to_db(linear),
        })
    }

    pub fn from_db(db: f64) -> Result<Self> {
        Self::from_linear(db_to_linear(db))
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

fn int(x: u64) -> RBig {
    RBig::from(IBig::from(x))
}

/// `2N / (f + 2N)`.
pub fn xi2_floor_from_f(f: u64, n: u32) -> RBig {
    xi2_floor_from_rational(&int(f), n)
}

pub fn xi2_floor_from_rational(f: &RBig, n: u32) -> RBig {
    let two_n = int(2 * u64::from(n));
    &two_n / (f + &two_n)
}

/// `2N / (w(N-h) + 3N)`.
pub fn xi2_floor_wh_simple(n: u32, w: u32, h: u32) -> Result<RBig> {
    Ok(xi2_floor_from_f(f_wh_upper(n, w, h)?, n))
}

/// `1 / (1 + w/2)`.
pub fn xi2_floor_w(w: u32) -> Result<RBig> {
    if w == 0 {
        return Err(Error::Domain {
            what: "w",
            value: 0,
            n: 0,
        });
    }
    Ok(RBig::from(2u8) / int(u64::from(w) + 2))
}

/// `2N / ((N-h+1)^2 + h - 1 + 2N)`.
pub fn xi2_floor_h(n: u32, h: u32) -> Result<RBig> {
    Ok(xi2_floor_from_f(crate::bounds::f_height(n, h)?, n))
}

/// `8N / ((N+r)^2 + 12N - 1)`, with the `N+r = 4` corner taken from the
/// rank bound `N+4` so the floor never undercuts the tight one.
pub fn xi2_floor_r(n: u32, r: i32) -> Result<RBig> {
    if !is_valid_rank(n, r) {
        return Err(Error::InvalidRank { n, r });
    }
    Ok(xi2_floor_from_rational(&f_rank_upper(n, r)?, n))
}

/// Tight (w,h) floor built on the exact maximum.
pub fn xi2_floor_wh(n: u32, w: u32, h: u32) -> Result<RBig> {
    if !is_valid(n, w, h) {
        return Err(Error::InvalidTuple { n, w, h });
    }
    Ok(xi2_floor_from_f(crate::bounds::f_wh(n, w, h)?, n))
}
