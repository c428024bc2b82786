//! Arbitrary-precision rational scalars.
//!
//! `Rat` is the exact scalar type used everywhere in this crate. It is a
//! reduced fraction of arbitrary-precision integers, so arithmetic never
//! overflows and never rounds. The helpers here cover the two conversions
//! the rest of the crate needs: small literals and the `p/q` string form
//! used by the text formats.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: a reduced `BigInt` fraction with positive
/// denominator (both normalizations are maintained by `num-rational`).
pub type Rat = num_rational::BigRational;

/// The rational `n/1`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `num/den`. Panics if `den == 0` (callers pass literals).
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational literal with zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p` when the denominator is one, else `p/q`.
///
/// This is the canonical scalar form in definition files, JSON output and
/// error messages; [`parse_rat`] accepts exactly the strings it produces.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        let mut s = x.numer().to_string();
        s.push('/');
        s.push_str(&x.denom().to_string());
        s
    }
}

/// Parses `p` or `p/q` (optionally signed) into a rational.
///
/// Returns `None` for anything else: empty input, embedded spaces, a zero
/// denominator, or trailing characters.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num_str.parse().ok()?;
    let den: BigInt = den_str.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// True when `x` is a nonnegative integer small enough for `usize`.
pub fn as_usize(x: &Rat) -> Option<usize> {
    if !x.denom().is_one() || x.numer().is_negative() {
        return None;
    }
    let digits = x.numer().to_string();
    digits.parse().ok()
}
