//! Exact scalar arithmetic over the rationals.
//!
//! Every coefficient in the library is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `(-1)^i`.
pub fn sign(i: u32) -> Rational {
    if i % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `(-1)^i * 4^i` as a rational.
pub fn signed_pow4(i: u32) -> Rational {
    let mut v = BigInt::from(1);
    for _ in 0..i {
        v *= -4;
    }
    Rational::from_integer(v)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return int(0);
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Deterministic `p/q` rendering; integers drop the denominator.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_row() {
        let row: Vec<Rational> = (0..=4).map(|k| binomial(4, k)).collect();
        assert_eq!(row, vec![int(1), int(4), int(6), int(4), int(1)]);
    }

    #[test]
    fn signed_pow4_alternates() {
        assert_eq!(signed_pow4(0), int(1));
        assert_eq!(signed_pow4(1), int(-4));
        assert_eq!(signed_pow4(2), int(16));
        assert_eq!(signed_pow4(3), int(-64));
    }

    #[test]
    fn render_forms() {
        assert_eq!(render(&rat(3, 1)), "3");
        assert_eq!(render(&rat(-1, 2)), "-1/2");
    }
}
