//! The universal exact scalar: an arbitrary-precision reduced fraction.
//!
//! `num_rational::BigRational` already maintains the two invariants every
//! caller relies on — positive denominator and fully reduced terms — so the
//! crate uses it directly and adds the parsing and formatting conventions
//! shared by the file formats and JSON reports.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::NumericsError;

pub type Rational = BigRational;

/// Shorthand constructor used pervasively in tests and report builders.
///
/// Panics on a zero denominator; use [`parse_rational`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// 10^k as a big integer.
pub fn pow10(k: u64) -> BigInt {
    BigInt::from(10u32).pow(u32::try_from(k).expect("digit position fits in u32"))
}

/// Canonical report form: always `numerator/denominator`, base 10.
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q`, an integer literal, or a plain decimal literal such as
/// `-0.25`. Whitespace around the value is ignored.
pub fn parse_rational(input: &str) -> Result<Rational, NumericsError> {
    let s = input.trim();
    let err = || NumericsError::ParseRational {
        input: input.to_string(),
    };
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) || int_digits.is_empty() {
            return Err(err());
        }
        let scale = pow10(frac_part.len() as u64);
        let whole: BigInt = int_digits.parse().map_err(|_| err())?;
        let frac: BigInt = frac_part.parse().map_err(|_| err())?;
        let magnitude = whole * &scale + frac;
        let signed = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

/// True when the denominator is a power of two.
pub fn is_dyadic(q: &Rational) -> bool {
    let mut d = q.denom().clone();
    let two = BigInt::from(2);
    while d.is_even() {
        d /= &two;
    }
    d.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parses_fraction_integer_and_decimal_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-1/3").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(" 0.110001 ").unwrap(), rat(110_001, 1_000_000));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "1/0", "a", "1.2.3", "1.", ".5", "--2", "1//2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn arithmetic_stays_reduced_with_positive_denominator() {
        let a = rat(6, -8);
        assert_eq!(a, rat(-3, 4));
        assert!(a.denom().is_positive());
        let b = rat(1, 6) + rat(1, 3);
        assert_eq!(b, rat(1, 2));
        let c = rat(2, 3) * rat(9, 4);
        assert_eq!(c, rat(3, 2));
        assert_eq!(num_integer::gcd(c.numer().clone(), c.denom().clone()), BigInt::one());
    }

    #[test]
    fn report_form_always_carries_the_denominator() {
        assert_eq!(rational_string(&rat(5, 1)), "5/1");
        assert_eq!(rational_string(&rat(-1, 3)), "-1/3");
        assert_eq!(rational_string(&Rational::zero()), "0/1");
    }

    #[test]
    fn dyadic_detection() {
        assert!(is_dyadic(&rat(3, 8)));
        assert!(is_dyadic(&rat(5, 1)));
        assert!(!is_dyadic(&rat(1, 3)));
        assert!(!is_dyadic(&rat(1, 6)));
    }
}
