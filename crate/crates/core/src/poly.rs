//! Dense univariate polynomials over the rationals.
//!
//! Invariant: the leading coefficient is nonzero unless the polynomial is
//! zero (empty coefficient vector).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{int, rat, render, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly { coeffs: vec![c] }.trimmed()
    }

    /// `c * t^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![int(0); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::monomial(int(1), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Poly { coeffs }.trimmed()
    }

    /// Integer shorthand: `Poly::from_ints(&[1, -2])` is `1 - 2t`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| int(0))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplicity of the root `t = 0`.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Quotient by `t^k`. Panics unless `t^k` divides `self`.
    pub fn div_t_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(self.order_at_zero() >= k, "not divisible by t^{k}");
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `self * t^k`.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![int(0); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Synthetic division by `t - root`; returns `(quotient, remainder)`.
    pub fn div_linear(&self, root: &Rational) -> (Poly, Rational) {
        if self.is_zero() {
            return (Poly::zero(), int(0));
        }
        let n = self.coeffs.len();
        let mut q = vec![int(0); n - 1];
        let mut carry = int(0);
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Poly::from_coeffs(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of the root `t = root`.
    pub fn order_at(&self, root: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut ord = 0;
        loop {
            let (q, r) = p.div_linear(root);
            if !r.is_zero() {
                return ord;
            }
            ord += 1;
            p = q;
            if p.is_zero() {
                return ord;
            }
        }
    }

    /// Quotient by `(t - root)^k`. Panics unless the division is exact.
    pub fn div_linear_pow(&self, root: &Rational, k: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..k {
            let (q, r) = p.div_linear(root);
            assert!(r.is_zero(), "not divisible by (t - {root})^{k}");
            p = q;
        }
        p
    }

    /// `self * (t - 1)^k`.
    pub fn mul_linear_pow_at_one(&self, k: usize) -> Poly {
        let mut p = self.clone();
        let lin = Poly::from_ints(&[-1, 1]);
        for _ in 0..k {
            p = &p * &lin;
        }
        p
    }

    /// Composition `self(other)`.
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Coefficients in the `(2t-1)`-power basis: returns `d` with
    /// `self = sum d[i] * (2t-1)^i`.
    pub fn to_shifted_basis(&self) -> Vec<Rational> {
        // substitute t = (s+1)/2 and read off powers of s
        let sub = Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)]);
        self.compose(&sub).coeffs
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    /// Terms in descending degree, e.g. `2*t^2 - 3*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c < &int(0);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", render(&abs))?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_degree() {
        let p = Poly::from_ints(&[-1, 2]); // 2t - 1
        let sq = &p * &p;
        assert_eq!(sq, Poly::from_ints(&[1, -4, 4]));
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn div_linear_exact() {
        // (t-1)^2 (t+3)
        let p = &(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-1, 1])) * &Poly::from_ints(&[3, 1]);
        assert_eq!(p.order_at(&int(1)), 2);
        assert_eq!(p.div_linear_pow(&int(1), 2), Poly::from_ints(&[3, 1]));
    }

    #[test]
    fn shifted_basis_roundtrip() {
        let p = Poly::from_ints(&[5, -3, 7]);
        let d = p.to_shifted_basis();
        let s = Poly::from_ints(&[-1, 2]);
        let mut back = Poly::zero();
        let mut pw = Poly::one();
        for c in &d {
            back = &back + &pw.scale(c);
            pw = &pw * &s;
        }
        assert_eq!(back, p);
    }

    #[test]
    fn display_descending() {
        let p = Poly::from_coeffs(vec![int(1), int(-3), int(2)]);
        assert_eq!(p.to_string(), "2*t^2 - 3*t + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_coeffs(vec![int(0), rat(1, 2)]).to_string(), "1/2*t");
    }
}
