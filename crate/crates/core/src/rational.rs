//! Exact rational helpers: parsing of integer, decimal and `p/q` text, and
//! canonical `p/q` rendering.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"7"`, `"-2.125"`, `".5"` or `"3/4"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let token = text.trim();
    if token.is_empty() {
        return Err(Error::parse(text, "empty value"));
    }
    if let Some((num, den)) = token.split_once('/') {
        let p = parse_integer(num.trim(), token)?;
        let q = parse_integer(den.trim(), token)?;
        if q.is_zero() {
            return Err(Error::parse(token, "zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        let (negative, whole) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(Error::parse(token, "no digits"));
        }
        if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::parse(token, "not a decimal number"));
        }
        let digits = format!("{whole}{frac}");
        let mantissa: BigInt = digits
            .parse()
            .map_err(|_| Error::parse(token, "not a decimal number"))?;
        let scale = num::pow(BigInt::from(10), frac.len());
        let value = Rational::new(mantissa, scale);
        return Ok(if negative { -value } else { value });
    }
    Ok(Rational::from_integer(parse_integer(token, token)?))
}

fn parse_integer(digits: &str, token: &str) -> Result<BigInt> {
    let body = digits.strip_prefix(['-', '+']).unwrap_or(digits);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(token, "not a number"));
    }
    digits
        .parse()
        .map_err(|_| Error::parse(token, "not a number"))
}

/// Canonical `p/q` form with `q > 0` and the fraction reduced; integers keep `/1`.
pub fn to_fraction_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Short form: integers render without a denominator.
pub fn to_short_string(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        to_fraction_string(value)
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(value: &Rational) -> Rational {
    value.abs()
}

pub fn is_probability(value: &Rational) -> bool {
    !value.is_negative() && *value <= Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_three_forms() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-9").unwrap(), int(-9));
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-2.125").unwrap(), ratio(-17, 8));
        assert_eq!(parse_rational(".25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("16/6").unwrap(), ratio(8, 3));
        assert_eq!(parse_rational(" -3/4 ").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn decimals_are_exact() {
        // 0.1 has no finite binary expansion; the parse must stay exact.
        let tenth = parse_rational("0.1").unwrap();
        assert_eq!(&tenth + &tenth + &tenth, ratio(3, 10));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "1/0", "1.2.3", "--1", "3/", "1e3", "."] {
            match parse_rational(bad) {
                Err(Error::Parse { .. }) => {}
                other => panic!("{bad:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn fraction_strings() {
        assert_eq!(to_fraction_string(&ratio(16, 6)), "8/3");
        assert_eq!(to_fraction_string(&int(5)), "5/1");
        assert_eq!(to_fraction_string(&ratio(1, -2)), "-1/2");
        assert_eq!(to_short_string(&int(-9)), "-9");
    }
}
