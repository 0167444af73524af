//! The coefficient ring `A = F[t, 1/t, 1/(t-1)]`.
//!
//! An element is kept in the canonical form `num(t) / (t^a * (t-1)^b)` with
//! `num` coprime to both `t` and `t-1`. Equality is syntactic after
//! reduction. The order-3 automorphism sends `t` to `1 - 1/t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::poly::Poly;
use crate::rational::{binomial, int, sign, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElem {
    num: Poly,
    pow_t: u32,
    pow_tm1: u32,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem {
            num: Poly::zero(),
            pow_t: 0,
            pow_tm1: 0,
        }
    }

    pub fn one() -> Self {
        RingElem::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RingElem::from_poly(Poly::constant(c))
    }

    pub fn t() -> Self {
        RingElem::from_poly(Poly::t())
    }

    /// `t - 1`.
    pub fn tm1() -> Self {
        RingElem::from_poly(Poly::from_ints(&[-1, 1]))
    }

    /// `t' = 1 - 1/t = (t-1)/t`.
    pub fn t_prime() -> Self {
        RingElem::t().prime(1)
    }

    /// `t'' = 1/(1-t)`.
    pub fn t_prime2() -> Self {
        RingElem::t().prime(2)
    }

    pub fn from_poly(num: Poly) -> Self {
        RingElem {
            num,
            pow_t: 0,
            pow_tm1: 0,
        }
        .normalized()
    }

    /// `num * t^et * (t-1)^etm1` with signed exponents.
    pub fn from_signed(num: Poly, et: i64, etm1: i64) -> Self {
        let mut num = num;
        let mut pow_t = 0u32;
        let mut pow_tm1 = 0u32;
        if et >= 0 {
            num = num.mul_t_pow(et as usize);
        } else {
            pow_t = (-et) as u32;
        }
        if etm1 >= 0 {
            let tm1 = Poly::from_ints(&[-1, 1]);
            for _ in 0..etm1 {
                num = &num * &tm1;
            }
        } else {
            pow_tm1 = (-etm1) as u32;
        }
        RingElem {
            num,
            pow_t,
            pow_tm1,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            return RingElem::zero();
        }
        let k = (self.num.order_at_zero() as u32).min(self.pow_t);
        if k > 0 {
            self.num = self.num.div_t_pow(k as usize);
            self.pow_t -= k;
        }
        let m = (self.num.order_at(&int(1)) as u32).min(self.pow_tm1);
        if m > 0 {
            self.num = self.num.div_linear_pow(&int(1), m as usize);
            self.pow_tm1 -= m;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn pow_t(&self) -> u32 {
        self.pow_t
    }

    pub fn pow_tm1(&self) -> u32 {
        self.pow_tm1
    }

    /// True when the element is a polynomial in `t`.
    pub fn is_polynomial(&self) -> bool {
        self.pow_t == 0 && self.pow_tm1 == 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RingElem {
            num: self.num.scale(c),
            pow_t: self.pow_t,
            pow_tm1: self.pow_tm1,
        }
        .normalized()
    }

    /// Multiplicative inverse, defined only for units of `A`: nonzero
    /// elements of the form `c * t^i * (t-1)^j`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // strip the two permitted linear factors from the numerator
        let i = self.num.order_at_zero();
        let rest = self.num.div_t_pow(i);
        let j = rest.order_at(&int(1));
        let rest = rest.div_linear_pow(&int(1), j);
        if rest.degree() != Some(0) {
            return None;
        }
        let c = rest.coeff(0);
        // (c t^i (t-1)^j / (t^a (t-1)^b))^-1 = (1/c) t^(a-i) (t-1)^(b-j)
        let num = Poly::monomial(int(1) / c, self.pow_t as usize)
            .mul_linear_pow_at_one(self.pow_tm1 as usize);
        Some(RingElem::from_signed(num, -(i as i64), -(j as i64)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = RingElem::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The automorphism `t -> 1 - 1/t` applied `k` times.
    pub fn prime(&self, k: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..(k % 3) {
            out = out.prime_once();
        }
        out
    }

    fn prime_once(&self) -> Self {
        if self.is_zero() {
            return RingElem::zero();
        }
        // num((t-1)/t) = N(t)/t^n with N(t) = sum c_i (t-1)^i t^(n-i);
        // (t')^a (t'-1)^b = (-1)^b (t-1)^a t^(-a-b)
        let n = self.num.degree().unwrap();
        let tm1 = Poly::from_ints(&[-1, 1]);
        let mut big_n = Poly::zero();
        let mut tm1_pow = Poly::one();
        for i in 0..=n {
            let term = tm1_pow.scale(&self.num.coeff(i)).mul_t_pow(n - i);
            big_n = &big_n + &term;
            tm1_pow = &tm1_pow * &tm1;
        }
        let signed = if self.pow_tm1 % 2 == 1 { -&big_n } else { big_n };
        RingElem::from_signed(
            signed,
            self.pow_t as i64 + self.pow_tm1 as i64 - n as i64,
            -(self.pow_t as i64),
        )
    }

    /// Exact evaluation; `None` when `x` hits a pole (0 or 1 with a
    /// denominator present).
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let mut den = int(1);
        if self.pow_t > 0 {
            if x.is_zero() {
                return None;
            }
            for _ in 0..self.pow_t {
                den *= x;
            }
        }
        if self.pow_tm1 > 0 {
            let xm1 = x - int(1);
            if xm1.is_zero() {
                return None;
            }
            for _ in 0..self.pow_tm1 {
                den *= &xm1;
            }
        }
        Some(self.num.eval(x) / den)
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        let a = self.pow_t.max(rhs.pow_t);
        let b = self.pow_tm1.max(rhs.pow_tm1);
        let lift = |e: &RingElem| {
            RingElem::from_signed(
                e.num.clone(),
                (a - e.pow_t) as i64,
                (b - e.pow_tm1) as i64,
            )
            .num
        };
        RingElem {
            num: &lift(self) + &lift(rhs),
            pow_t: a,
            pow_tm1: b,
        }
        .normalized()
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            num: -&self.num,
            pow_t: self.pow_t,
            pow_tm1: self.pow_tm1,
        }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        RingElem {
            num: &self.num * &rhs.num,
            pow_t: self.pow_t + rhs.pow_t,
            pow_tm1: self.pow_tm1 + rhs.pow_tm1,
        }
        .normalized()
    }
}

impl fmt::Display for RingElem {
    /// `(2*t^2 - 3*t + 1)/(t^1*(t-1)^2)`; plain polynomial when there is
    /// no denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pow_t == 0 && self.pow_tm1 == 0 {
            return write!(f, "{}", self.num);
        }
        let mut den = String::new();
        if self.pow_t > 0 {
            den.push_str(&format!("t^{}", self.pow_t));
        }
        if self.pow_tm1 > 0 {
            if !den.is_empty() {
                den.push('*');
            }
            den.push_str(&format!("(t-1)^{}", self.pow_tm1));
        }
        write!(f, "({})/({})", self.num, den)
    }
}

/// Coordinates in the basis `{1} U {t^i, (t')^i, (t'')^i : i >= 1}` of `A`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CanonExpansion {
    pub c0: Rational,
    pub t_part: BTreeMap<u32, Rational>,
    pub tp_part: BTreeMap<u32, Rational>,
    pub tpp_part: BTreeMap<u32, Rational>,
}

fn insert_nonzero(map: &mut BTreeMap<u32, Rational>, i: u32, v: Rational) {
    if v.is_zero() {
        return;
    }
    let entry = map.entry(i).or_insert_with(|| int(0));
    *entry += v;
    if entry.is_zero() {
        map.remove(&i);
    }
}

impl CanonExpansion {
    pub fn is_zero(&self) -> bool {
        self.c0.is_zero()
            && self.t_part.is_empty()
            && self.tp_part.is_empty()
            && self.tpp_part.is_empty()
    }
}

impl RingElem {
    /// Unique coordinates in the basis `{1, t^i, (t')^i, (t'')^i}`.
    ///
    /// Partial fractions over the two linear factors, then
    /// `1/t = 1 - t'` (binomial expansion for higher powers) and
    /// `1/(t-1) = -t''`.
    pub fn canon_expand(&self) -> CanonExpansion {
        let a = self.pow_t as usize;
        let b = self.pow_tm1 as usize;

        // Laurent coefficients alpha_i of t^-i at t=0: Taylor of
        // num/(t-1)^b to order a-1, where 1/(t-1)^b = (-1)^b sum C(b-1+k,k) t^k.
        let mut alphas = vec![int(0); a + 1]; // alphas[i], i = 1..=a
        if a > 0 {
            let mut series = vec![int(0); a];
            if b == 0 {
                series[0] = int(1);
            } else {
                for (k, s) in series.iter_mut().enumerate() {
                    *s = binomial((b + k) as u32 - 1, k as u32) * sign(b as u32);
                }
            }
            for i in 1..=a {
                // coefficient of t^(a-i) in num * series
                let target = a - i;
                let mut c = int(0);
                for k in 0..=target {
                    c += self.num.coeff(k) * &series[target - k];
                }
                alphas[i] = c;
            }
        }

        // Laurent coefficients beta_j of (t-1)^-j at t=1: Taylor of
        // num(1+s)/(1+s)^a, where (1+s)^-a = sum (-1)^k C(a-1+k,k) s^k.
        let mut betas = vec![int(0); b + 1];
        if b > 0 {
            let shifted = self.num.compose(&Poly::from_ints(&[1, 1]));
            let mut series = vec![int(0); b];
            for (k, s) in series.iter_mut().enumerate() {
                *s = if a == 0 {
                    if k == 0 {
                        int(1)
                    } else {
                        int(0)
                    }
                } else {
                    binomial((a + k) as u32 - 1, k as u32) * sign(k as u32)
                };
            }
            for j in 1..=b {
                let target = b - j;
                let mut c = int(0);
                for k in 0..=target {
                    c += shifted.coeff(k) * &series[target - k];
                }
                betas[j] = c;
            }
        }

        // polynomial part = self - sum alpha_i t^-i - sum beta_j (t-1)^-j
        let mut rest = self.clone();
        for (i, alpha) in alphas.iter().enumerate().skip(1) {
            let term = RingElem::from_signed(Poly::constant(alpha.clone()), -(i as i64), 0);
            rest = &rest - &term;
        }
        for (j, beta) in betas.iter().enumerate().skip(1) {
            let term = RingElem::from_signed(Poly::constant(beta.clone()), 0, -(j as i64));
            rest = &rest - &term;
        }
        debug_assert!(rest.is_polynomial(), "partial fractions left a remainder");

        let mut out = CanonExpansion {
            c0: rest.num.coeff(0),
            ..Default::default()
        };
        if let Some(d) = rest.num.degree() {
            for i in 1..=d {
                insert_nonzero(&mut out.t_part, i as u32, rest.num.coeff(i));
            }
        }
        // t^-i = (1 - t')^i = sum_k C(i,k) (-1)^k (t')^k
        for (i, alpha) in alphas.iter().enumerate().skip(1) {
            if alpha.is_zero() {
                continue;
            }
            out.c0 += alpha;
            for k in 1..=i {
                let c = binomial(i as u32, k as u32) * sign(k as u32) * alpha;
                insert_nonzero(&mut out.tp_part, k as u32, c);
            }
        }
        // (t-1)^-j = (-1)^j (t'')^j
        for (j, beta) in betas.iter().enumerate().skip(1) {
            insert_nonzero(&mut out.tpp_part, j as u32, sign(j as u32) * beta);
        }
        out
    }
}

/// Inverse of [`RingElem::canon_expand`].
pub fn reassemble(e: &CanonExpansion) -> RingElem {
    let mut out = RingElem::constant(e.c0.clone());
    for (&i, c) in &e.t_part {
        out = &out + &RingElem::from_poly(Poly::monomial(c.clone(), i as usize));
    }
    let tp = RingElem::t_prime();
    for (&i, c) in &e.tp_part {
        out = &out + &tp.pow(i).scale(c);
    }
    let tpp = RingElem::t_prime2();
    for (&i, c) in &e.tpp_part {
        out = &out + &tpp.pow(i).scale(c);
    }
    out
}

/// The subspaces occurring in the three direct-sum splittings of `A`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubspaceKind {
    /// `F[v]` (constants allowed).
    Full,
    /// `(1-v) F[v]`: polynomial in `v` vanishing at `v = 1`.
    VanishAtOne,
    /// `v F[v]`: polynomial in `v` with no constant term.
    NoConstant,
}

/// Variables `t`, `t'`, `t''` indexed 0, 1, 2.
fn part<'a>(e: &'a CanonExpansion, var: u8) -> &'a BTreeMap<u32, Rational> {
    match var {
        0 => &e.t_part,
        1 => &e.tp_part,
        _ => &e.tpp_part,
    }
}

/// True iff `elem` lies in the subspace of kind `kind` in the variable
/// `t`, `t'`, or `t''` (var = 0, 1, 2).
pub fn in_subspace(elem: &RingElem, var: u8, kind: SubspaceKind) -> bool {
    let e = elem.canon_expand();
    for other in 0..3u8 {
        if other != var && !part(&e, other).is_empty() {
            return false;
        }
    }
    let own = part(&e, var);
    match kind {
        SubspaceKind::Full => true,
        SubspaceKind::VanishAtOne => {
            let at_one: Rational = own.values().fold(e.c0.clone(), |acc, c| acc + c);
            at_one.is_zero()
        }
        SubspaceKind::NoConstant => e.c0.is_zero(),
    }
}

/// Slot layout of the splitting `ds:A(frame)`: variable index and kind per
/// component.
pub fn frame_slots(frame: u8) -> [(u8, SubspaceKind); 3] {
    let k = frame % 3;
    [
        (k, SubspaceKind::Full),
        ((k + 1) % 3, SubspaceKind::VanishAtOne),
        ((k + 2) % 3, SubspaceKind::NoConstant),
    ]
}

fn monomials_in_var(var: u8, coeffs: &BTreeMap<u32, Rational>, c0: &Rational) -> RingElem {
    let base = match var {
        0 => RingElem::t(),
        1 => RingElem::t_prime(),
        _ => RingElem::t_prime2(),
    };
    let mut out = RingElem::constant(c0.clone());
    for (&i, c) in coeffs {
        out = &out + &base.pow(i).scale(c);
    }
    out
}

/// The unique splitting of `a` along `ds:A(frame)` (frame 0, 1, or 2).
/// Components come back in slot order per [`frame_slots`].
pub fn split_frame(a: &RingElem, frame: u8) -> (RingElem, RingElem, RingElem) {
    let e = a.canon_expand();
    let slots = frame_slots(frame);
    let (full_var, _) = slots[0];
    let (vanish_var, _) = slots[1];
    let (noconst_var, _) = slots[2];

    let vanish_part = part(&e, vanish_var);
    let at_one: Rational = vanish_part.values().fold(int(0), |acc, c| acc + c);

    let full_c0 = &e.c0 + &at_one;
    let full = monomials_in_var(full_var, part(&e, full_var), &full_c0);
    let vanish = monomials_in_var(vanish_var, vanish_part, &-at_one);
    let noconst = monomials_in_var(noconst_var, part(&e, noconst_var), &int(0));
    (full, vanish, noconst)
}
