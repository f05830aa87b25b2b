//! Exact parsing and rendering of rational numbers.
//!
//! Workspace files and CLI output exchange numbers as strings so that no value
//! ever passes through floating point. Three input shapes are accepted:
//!
//! * integers: `0`, `1`
//! * finite decimals: `0.3`, `0.75`, `1.0`
//! * fractions: `1/3`, `7/10`
//!
//! Rendering inverts parsing canonically: integers print bare, rationals whose
//! reduced denominator is of the form `2^i * 5^j` print as the shortest exact
//! decimal, and everything else prints as a reduced fraction `p/q`. Every value
//! round-trips: `parse(render(x)) == x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Error produced when a numeric literal cannot be read exactly.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberParseError {
    /// The literal is not one of the accepted shapes.
    #[error("malformed number {literal:?}: expected an integer, a finite decimal like \"0.3\", or a fraction like \"1/3\"")]
    Malformed {
        /// The offending literal, verbatim.
        literal: String,
    },
    /// A fraction literal has denominator zero.
    #[error("malformed number {literal:?}: denominator is zero")]
    ZeroDenominator {
        /// The offending literal, verbatim.
        literal: String,
    },
}

fn malformed(s: &str) -> NumberParseError {
    NumberParseError::Malformed {
        literal: s.to_owned(),
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<BigInt>().ok()
}

/// Parses a numeric literal into an exact rational.
///
/// Accepts optional leading `-` on integers and decimals, and on the numerator
/// of a fraction. Whitespace is not accepted: callers trim before parsing if
/// their surface syntax allows it.
pub fn parse_rational(s: &str) -> Result<BigRational, NumberParseError> {
    if let Some((num, den)) = s.split_once('/') {
        let (neg, num) = match num.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, num),
        };
        let num = parse_digits(num).ok_or_else(|| malformed(s))?;
        let den = parse_digits(den).ok_or_else(|| malformed(s))?;
        if den.is_zero() {
            return Err(NumberParseError::ZeroDenominator {
                literal: s.to_owned(),
            });
        }
        let value = BigRational::new(num, den);
        return Ok(if neg { -value } else { value });
    }

    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let value = if let Some((int_part, frac_part)) = body.split_once('.') {
        let int = parse_digits(int_part).ok_or_else(|| malformed(s))?;
        // The fractional digits are validated separately so "1." and ".5" are
        // rejected rather than silently read as "1" and "0.5".
        let frac = parse_digits(frac_part).ok_or_else(|| malformed(s))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        BigRational::new(int * &scale + frac, scale)
    } else {
        BigRational::from_integer(parse_digits(body).ok_or_else(|| malformed(s))?)
    };
    Ok(if neg { -value } else { value })
}

/// Strips all factors of `p` from `n`, returning how many were removed.
fn strip_factor(n: &mut BigInt, p: u32) -> u32 {
    let p = BigInt::from(p);
    let mut count = 0;
    while (&*n % &p).is_zero() && !n.is_zero() {
        *n /= &p;
        count += 1;
    }
    count
}

/// Renders an exact rational in its canonical string form.
///
/// * integers: `0`, `1`, `-2`
/// * denominators of the form `2^i * 5^j`: the shortest exact decimal (`0.3`,
///   `0.75`, `-0.05`)
/// * anything else: a reduced fraction (`1/3`, `29/30`)
pub fn render_rational(value: &BigRational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }

    let mut rest = value.denom().clone();
    let twos = strip_factor(&mut rest, 2);
    let fives = strip_factor(&mut rest, 5);
    if !rest.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }

    // Scale to an integer over 10^digits, where digits = max(twos, fives).
    let digits = twos.max(fives);
    let scale = BigInt::from(10u32).pow(digits) / value.denom();
    let scaled = (value.numer() * scale).abs();
    let body = scaled.to_string();
    let body = if body.len() as u32 <= digits {
        format!("0.{}{}", "0".repeat(digits as usize - body.len()), body)
    } else {
        let split = body.len() - digits as usize;
        format!("{}.{}", &body[..split], &body[split..])
    };
    if value.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}
