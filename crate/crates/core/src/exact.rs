//! Exact decimal and rational helpers.
//!
//! Measured values enter as decimal strings and are held as exact rationals.
//! The only inexact step is the dB conversion, which is evaluated once at
//! [`DB_WORKING_DIGITS`] and rounded to [`DB_SIGNIFICANT_DIGITS`].

use std::str::FromStr;

use dashu::float::DBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::error::{Error, Result};

/// Significant digits kept when converting a dB value to linear scale.
pub const DB_SIGNIFICANT_DIGITS: usize = 30;
const DB_WORKING_DIGITS: usize = 45;

fn dbig_to_rbig(x: &DBig) -> RBig {
    let repr = x.repr();
    let sig = repr.significand().clone();
    let exp = repr.exponent();
    if exp >= 0 {
        RBig::from(sig * IBig::from(10u8).pow(exp as usize))
    } else {
        RBig::from_parts(sig, UBig::from(10u8).pow((-exp) as usize))
    }
}

fn parse_dbig(s: &str) -> Result<DBig> {
    let t = s.trim();
    let plain = !t.is_empty()
        && t.chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    if !plain {
        return Err(Error::Decimal(s.to_string()));
    }
    DBig::from_str(t).map_err(|_| Error::Decimal(s.to_string()))
}

/// Parses a plain decimal literal (`40.4`, `-4.5`, `1e-3`) into an exact rational.
pub fn parse_decimal(s: &str) -> Result<RBig> {
    Ok(dbig_to_rbig(&parse_dbig(s)?))
}

/// `10^(db/10)` rounded to [`DB_SIGNIFICANT_DIGITS`] significant digits.
pub fn db_to_linear(db: &str) -> Result<RBig> {
    let x = parse_dbig(db)?.with_precision(DB_WORKING_DIGITS).value();
    let ten = DBig::from(10u8).with_precision(DB_WORKING_DIGITS).value();
    let y = (x / &ten * ten.ln()).exp();
    Ok(dbig_to_rbig(
        &y.with_precision(DB_SIGNIFICANT_DIGITS).value(),
    ))
}

/// Formats a rational as an exact decimal when it terminates, else as `p/q`.
pub fn format_rational(x: &RBig) -> String {
    let den = x.denominator().clone();
    let mut rest = den.clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    let two = UBig::from(2u8);
    let five = UBig::from(5u8);
    while (&rest % &two) == UBig::ZERO {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five) == UBig::ZERO {
        rest /= &five;
        fives += 1;
    }
    if rest != UBig::ONE {
        return format!("{}/{}", x.numerator(), den);
    }
    let digits = twos.max(fives);
    let scale = UBig::from(10u8).pow(digits);
    let scaled = x.numerator() * IBig::from(&scale / &den);
    if digits == 0 {
        return scaled.to_string();
    }
    let negative = scaled < IBig::ZERO;
    let mag = if negative { -scaled } else { scaled }.to_string();
    let padded = format!("{mag:0>width$}", width = digits + 1);
    let (int, frac) = padded.split_at(padded.len() - digits);
    format!("{}{int}.{frac}", if negative { "-" } else { "" })
}

pub fn rational(num: i64, den: u64) -> RBig {
    RBig::from_parts(IBig::from(num), UBig::from(den))
}

/// Smallest integer strictly greater than `x`.
pub fn next_int_above(x: &RBig) -> IBig {
    x.floor() + IBig::ONE
}
