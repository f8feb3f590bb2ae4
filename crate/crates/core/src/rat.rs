//! Arbitrary-precision rational coefficients.
//!
//! `Rat` is `num_rational::BigRational`: always stored reduced with positive
//! denominator, so equality is structural and arithmetic is exact.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

/// Canonical `p/q` string (`p` alone when the denominator is 1).
pub fn to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// gcd of the numerators over lcm of the denominators, with the sign of
/// `lead`; used to normalize generator scalings.
pub fn content<'a>(coeffs: impl Iterator<Item = &'a Rat>, lead: &Rat) -> Rat {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        num_gcd = num_integer::Integer::gcd(&num_gcd, &c.numer().abs());
        den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
    }
    if num_gcd.is_zero() {
        return Rat::one();
    }
    let mut c = Rat::new(num_gcd, den_lcm);
    if lead.is_negative() {
        c = -c;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(to_string(&r), "-3/2");
        assert_eq!(parse("-3/2"), Some(r));
        assert_eq!(parse("7"), Some(rat_i(7)));
        assert_eq!(parse("1/0"), None);
    }

    #[test]
    fn content_normalizes_to_primitive() {
        let coeffs = [rat(4, 3), rat(-2, 9), rat_i(6)];
        let c = content(coeffs.iter(), &coeffs[0]);
        assert_eq!(c, rat(2, 9));
        for x in &coeffs {
            let r = x / &c;
            assert!(r.denom().is_one());
        }
    }
}
