//! Exact scalar arithmetic.
//!
//! Every quantity in this crate (endpoints, measures, diameters, bound
//! values) is a [`Rational`]. There is no floating point anywhere on the
//! computation path; decimals only appear when rendering output.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact fraction, always in lowest terms with positive denominator
/// (enforced by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand for `num/den` from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, an integer, or an exact decimal like `"0.25"` / `"-1.5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {t:?}"),
    };
    if t.is_empty() {
        return Err(err("empty number"));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let (sign, ip_digits) = match ip.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, ip.strip_prefix('+').unwrap_or(ip)),
        };
        let ip_digits = if ip_digits.is_empty() { "0" } else { ip_digits };
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("bad decimal"));
        }
        let whole: BigInt = ip_digits.parse().map_err(|_| err("bad decimal"))?;
        let frac: BigInt = fp.parse().map_err(|_| err("bad decimal"))?;
        let scale = BigInt::from(10).pow(fp.len() as u32);
        let value = Rational::new(whole * &scale + frac, scale);
        return Ok(if sign < 0 { -value } else { value });
    }
    let n: BigInt = t.parse().map_err(|_| err("bad integer"))?;
    Ok(Rational::from_integer(n))
}

/// Renders as `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal rendering with `places` digits, rounded half away
/// from zero. Used for SVG coordinates and `--decimal` output; byte-stable
/// for identical inputs.
pub fn decimal_string(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    // round half up on the absolute value
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let whole = &rounded / &scale;
    let frac = &rounded % &scale;
    let sign = if r.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>width$}", width = places as usize)
    }
}

/// Smallest integer `k` with `k >= r`, as a `Rational`.
pub fn ceil_rational(r: &Rational) -> Rational {
    Rational::from_integer(r.ceil().to_integer())
}
