//! The Onsager subalgebra and its primed images: the sequences a_n, b_n,
//! the operators G and H, the three bases (ab, xyz, delta), coordinate
//! extraction, transitions between bases, and structure-constant oracles.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::loop_alg::{bracket, offending_grid_entries, std_gen, GeneratorId, LoopElem, GRID_COLS, GRID_ROWS};
use crate::poly::Poly;
use crate::rational::{int, rat, render, signed_pow4, Rational};
use crate::report::Report;
use crate::ring::RingElem;

/// `p_i = (2t-1)^i`, with the convention `p_{-1} = p_{-2} = 0`.
pub fn p_pow(i: i64) -> Poly {
    if i < 0 {
        return Poly::zero();
    }
    let base = Poly::from_ints(&[-1, 2]);
    let mut acc = Poly::one();
    for _ in 0..i {
        acc = &acc * &base;
    }
    acc
}

fn elem3(f: Poly, g: Poly, h: Poly) -> LoopElem {
    LoopElem::new(
        RingElem::from_poly(f),
        RingElem::from_poly(g),
        RingElem::from_poly(h),
    )
}

/// `G = [x12, [x03, .]]` in closed coordinate form.
pub fn op_g(u: &LoopElem) -> LoopElem {
    let t = RingElem::t();
    let tm1 = RingElem::tm1();
    let p1 = RingElem::from_poly(Poly::from_ints(&[-1, 2])); // 2t - 1
    let m4 = int(-4);
    LoopElem::new(
        (&p1 * &u.f).scale(&m4),
        (&(&(&t * &u.f) + &(&tm1 * &u.g)) - &(&t * &u.h)).scale(&m4),
        (&(&(&tm1 * &u.f) - &(&tm1 * &u.g)) + &(&t * &u.h)).scale(&m4),
    )
}

/// `H = [x03, [x12, .]]` in closed coordinate form.
pub fn op_h(u: &LoopElem) -> LoopElem {
    let p1 = RingElem::from_poly(Poly::from_ints(&[-1, 2]));
    let m4 = int(-4);
    LoopElem::new(
        (&u.g - &u.h).scale(&m4),
        (&p1 * &u.g).scale(&m4),
        (&p1 * &u.h).scale(&m4),
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeqKind {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeqMode {
    Recursive,
    Closed,
}

/// Closed form of `a_n` / `b_n`, with negative indices mapped to zero
/// (the convention `a_{-1} = b_{-2} = 0`).
pub fn ab_closed(kind: SeqKind, n: i64) -> LoopElem {
    if n < 0 {
        return LoopElem::zero();
    }
    let t = Poly::t();
    let tm1 = Poly::from_ints(&[-1, 1]);
    if n % 2 == 0 {
        let i = n / 2;
        let s = signed_pow4(i as u32);
        // a_{2i} = s(p_i, t p_{i-1}, (t-1) p_{i-1}); b_{2i} = s(p_{i-1}, t p_i, (t-1) p_i)
        let (pf, pg) = match kind {
            SeqKind::A => (p_pow(i), p_pow(i - 1)),
            SeqKind::B => (p_pow(i - 1), p_pow(i)),
        };
        elem3(pf.scale(&s), (&t * &pg).scale(&s), (&tm1 * &pg).scale(&s))
    } else {
        let i = (n - 1) / 2;
        // a_{2i+1} = 2(-1)^{i+1} 4^i (p_i, t p_i, (1-t) p_i); b_{2i+1} = -a_{2i+1}
        let mut c = -int(2) * signed_pow4(i as u32);
        if kind == SeqKind::B {
            c = -c;
        }
        let p = p_pow(i);
        elem3(
            p.scale(&c),
            (&t * &p).scale(&c),
            (&Poly::from_ints(&[1, -1]) * &p).scale(&c),
        )
    }
}

/// The sequences `a_n`, `b_n` of the Onsager subalgebra, by bracket
/// recursion or by closed form, at any prime level.
pub fn seq_ab(kind: SeqKind, n: u32, mode: SeqMode, prime_level: u8) -> LoopElem {
    let base = match mode {
        SeqMode::Closed => ab_closed(kind, n as i64),
        SeqMode::Recursive => {
            let a0 = std_gen(GeneratorId::new(1, 2).unwrap());
            let b0 = std_gen(GeneratorId::new(0, 3).unwrap());
            let mut cur = match kind {
                SeqKind::A => a0.clone(),
                SeqKind::B => b0.clone(),
            };
            // odd step brackets with one generator, even step with the other
            for m in 1..=n {
                cur = match (kind, m % 2) {
                    (SeqKind::A, 1) => bracket(&b0, &cur),
                    (SeqKind::A, _) => bracket(&a0, &cur),
                    (SeqKind::B, 1) => bracket(&a0, &cur),
                    (SeqKind::B, _) => bracket(&b0, &cur),
                };
            }
            cur
        }
    };
    base.prime(prime_level as u32)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum XyzKind {
    X,
    Y,
    Z,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum XyzMode {
    Combination,
    Closed,
}

fn xyz_closed(kind: XyzKind, i: u32) -> LoopElem {
    let i = i as i64;
    match kind {
        XyzKind::X => {
            let c = signed_pow4(i as u32);
            elem3((&p_pow(i) - &p_pow(i - 2)).scale(&c), Poly::zero(), Poly::zero())
        }
        XyzKind::Y => {
            let c = signed_pow4(i as u32 + 1);
            let p = &p_pow(i) - &p_pow(i - 1);
            elem3(Poly::zero(), (&Poly::t() * &p).scale(&c), Poly::zero())
        }
        XyzKind::Z => {
            let c = signed_pow4(i as u32 + 1);
            let p = &p_pow(i) + &p_pow(i - 1);
            elem3(
                Poly::zero(),
                Poly::zero(),
                (&Poly::from_ints(&[1, -1]) * &p).scale(&c),
            )
        }
    }
}

/// The x12-, x23-, x31-like basis elements of the Onsager subalgebra.
pub fn seq_xyz(kind: XyzKind, i: u32, mode: XyzMode, prime_level: u8) -> LoopElem {
    let base = match mode {
        XyzMode::Closed => xyz_closed(kind, i),
        XyzMode::Combination => {
            let n = i as i64;
            let ab = ab_closed;
            use SeqKind::{A, B};
            match kind {
                // x_i = a_{2i} + 4 b_{2i-2}
                XyzKind::X => &ab(A, 2 * n) + &ab(B, 2 * n - 2).scale(&int(4)),
                // y_i = a_{2i+1} + 2 a_{2i} + 4 a_{2i-1} - 2 b_{2i}
                XyzKind::Y => &(&(&ab(A, 2 * n + 1) + &ab(A, 2 * n).scale(&int(2)))
                    + &ab(A, 2 * n - 1).scale(&int(4)))
                    - &ab(B, 2 * n).scale(&int(2)),
                // z_i = a_{2i+1} + 2 a_{2i} - 4 a_{2i-1} + 2 b_{2i}
                XyzKind::Z => &(&(&ab(A, 2 * n + 1) + &ab(A, 2 * n).scale(&int(2)))
                    - &ab(A, 2 * n - 1).scale(&int(4)))
                    + &ab(B, 2 * n).scale(&int(2)),
            }
        }
    };
    base.prime(prime_level as u32)
}

/// Basis vectors `x(x)p_i`, `y(x)t p_i`, `z(x)(1-t) p_i`.
pub fn delta_vec(kind: XyzKind, i: u32, prime_level: u8) -> LoopElem {
    let p = p_pow(i as i64);
    let base = match kind {
        XyzKind::X => elem3(p, Poly::zero(), Poly::zero()),
        XyzKind::Y => elem3(Poly::zero(), &Poly::t() * &p, Poly::zero()),
        XyzKind::Z => elem3(Poly::zero(), Poly::zero(), &Poly::from_ints(&[1, -1]) * &p),
    };
    base.prime(prime_level as u32)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Ab,
    Xyz,
    Delta,
}

/// Basis slot. The first three belong to the ab basis (elements a_{2i},
/// b_{2i}, a_{2i+1}), the last three to both xyz and delta.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Slot {
    AEven,
    BEven,
    AOdd,
    X,
    Y,
    Z,
}

impl Slot {
    pub fn name(&self) -> &'static str {
        match self {
            Slot::AEven => "a_even",
            Slot::BEven => "b_even",
            Slot::AOdd => "a_odd",
            Slot::X => "x",
            Slot::Y => "y",
            Slot::Z => "z",
        }
    }

    pub fn in_basis(&self, basis: Basis) -> bool {
        match basis {
            Basis::Ab => matches!(self, Slot::AEven | Slot::BEven | Slot::AOdd),
            _ => matches!(self, Slot::X | Slot::Y | Slot::Z),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse coordinates of an element in one of the three bases of a
/// (possibly primed) Onsager subalgebra. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coords {
    pub basis: Basis,
    pub prime_level: u8,
    pub entries: BTreeMap<(Slot, u32), Rational>,
}

impl Coords {
    pub fn new(basis: Basis, prime_level: u8) -> Self {
        Coords {
            basis,
            prime_level,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, slot: Slot, i: i64, c: Rational) {
        if i < 0 || c.is_zero() {
            return;
        }
        debug_assert!(slot.in_basis(self.basis));
        let e = self.entries.entry((slot, i as u32)).or_insert_with(|| int(0));
        *e += c;
        if e.is_zero() {
            self.entries.remove(&(slot, i as u32));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Coords::new(self.basis, self.prime_level);
        if c.is_zero() {
            return out;
        }
        for ((s, i), v) in &self.entries {
            out.entries.insert((*s, *i), v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    /// Largest index present in any slot, if nonempty.
    pub fn top_index(&self) -> Option<u32> {
        self.entries.keys().map(|&(_, i)| i).max()
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((s, i), c) in &self.entries {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}[{}]", render(c), s, i)?;
        }
        Ok(())
    }
}

impl Serialize for Coords {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a BTreeMap<(Slot, u32), Rational>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                let mut seq = ser.serialize_seq(Some(self.0.len()))?;
                for ((s, i), c) in self.0 {
                    seq.serialize_element(&(s.name(), i, render(c)))?;
                }
                seq.end()
            }
        }
        let mut st = ser.serialize_struct("Coords", 3)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("prime_level", &self.prime_level)?;
        st.serialize_field("entries", &Entries(&self.entries))?;
        st.end()
    }
}

#[derive(Debug, Error)]
pub enum OnsagerError {
    #[error("element is not in the prime-level-{level} Onsager subalgebra; nonzero grid entries outside its column: {cells:?}")]
    NotInSubalgebra {
        level: u8,
        cells: Vec<(String, String)>,
    },
}

/// The basis vector named by a coordinate slot.
pub fn basis_elem(basis: Basis, slot: Slot, i: u32, prime_level: u8) -> LoopElem {
    match (basis, slot) {
        (Basis::Ab, Slot::AEven) => seq_ab(SeqKind::A, 2 * i, SeqMode::Closed, prime_level),
        (Basis::Ab, Slot::BEven) => seq_ab(SeqKind::B, 2 * i, SeqMode::Closed, prime_level),
        (Basis::Ab, Slot::AOdd) => seq_ab(SeqKind::A, 2 * i + 1, SeqMode::Closed, prime_level),
        (Basis::Xyz, Slot::X) => seq_xyz(XyzKind::X, i, XyzMode::Closed, prime_level),
        (Basis::Xyz, Slot::Y) => seq_xyz(XyzKind::Y, i, XyzMode::Closed, prime_level),
        (Basis::Xyz, Slot::Z) => seq_xyz(XyzKind::Z, i, XyzMode::Closed, prime_level),
        (Basis::Delta, Slot::X) => delta_vec(XyzKind::X, i, prime_level),
        (Basis::Delta, Slot::Y) => delta_vec(XyzKind::Y, i, prime_level),
        (Basis::Delta, Slot::Z) => delta_vec(XyzKind::Z, i, prime_level),
        _ => panic!("slot {slot:?} does not belong to basis {basis:?}"),
    }
}

/// Reassemble a coordinate vector into a loop element.
pub fn reassemble_coords(c: &Coords) -> LoopElem {
    let mut acc = LoopElem::zero();
    for ((slot, i), v) in &c.entries {
        acc = &acc + &basis_elem(c.basis, *slot, *i, c.prime_level).scale(v);
    }
    acc
}

/// Exact coordinates of `u` in the requested basis of the prime-level-k
/// Onsager subalgebra.
pub fn coords(u: &LoopElem, basis: Basis, prime_level: u8) -> Result<Coords, OnsagerError> {
    let bad = offending_grid_entries(u, prime_level);
    if !bad.is_empty() {
        return Err(OnsagerError::NotInSubalgebra {
            level: prime_level,
            cells: bad
                .into_iter()
                .map(|(r, c)| (GRID_ROWS[r].to_string(), GRID_COLS[c].to_string()))
                .collect(),
        });
    }
    // rotate back to level 0, where components are polynomial in t
    let v = u.prime((3 - prime_level as u32) % 3);
    debug_assert!(v.f.is_polynomial() && v.g.is_polynomial() && v.h.is_polynomial());
    let pf = v.f.num().clone();
    // g in t F[t], h in (1-t) F[t]
    let pg = if v.g.is_zero() {
        Poly::zero()
    } else {
        v.g.num().div_t_pow(1)
    };
    let ph = if v.h.is_zero() {
        Poly::zero()
    } else {
        let (q, r) = v.h.num().div_linear(&int(1));
        debug_assert!(r.is_zero());
        -&q
    };
    // delta coordinates: expand each part in powers of (2t-1)
    let mut cx = pf.to_shifted_basis().to_vec();
    let mut cy = pg.to_shifted_basis().to_vec();
    let mut cz = ph.to_shifted_basis().to_vec();
    let n = cx.len().max(cy.len()).max(cz.len());
    cx.resize(n, int(0));
    cy.resize(n, int(0));
    cz.resize(n, int(0));

    let mut out = Coords::new(basis, prime_level);
    match basis {
        Basis::Delta => {
            for i in 0..n {
                out.add(Slot::X, i as i64, cx[i].clone());
                out.add(Slot::Y, i as i64, cy[i].clone());
                out.add(Slot::Z, i as i64, cz[i].clone());
            }
        }
        Basis::Ab => {
            // top-down triangular solve against the delta expansions of
            // a_{2m}, b_{2m}, a_{2m+1}
            for m in (0..n).rev() {
                let s = signed_pow4(m as u32);
                let c_odd = -(&cy[m] + &cz[m]) / (&s * int(4));
                let c_b = &cy[m] / &s + &c_odd * int(2);
                let c_a = &cx[m] / &s + &c_odd * int(2);
                if m >= 1 {
                    // a_{2m} contributes s(dY[m-1] - dZ[m-1]); b_{2m} contributes s dX[m-1]
                    cx[m - 1] -= &c_b * &s;
                    cy[m - 1] -= &c_a * &s;
                    cz[m - 1] += &c_a * &s;
                }
                out.add(Slot::AEven, m as i64, c_a);
                out.add(Slot::BEven, m as i64, c_b);
                out.add(Slot::AOdd, m as i64, c_odd);
            }
        }
        Basis::Xyz => {
            // per-slot triangular solves
            for m in (0..n).rev() {
                let s = signed_pow4(m as u32);
                let sig = signed_pow4(m as u32 + 1);
                // x_m = s(dX[m] - dX[m-2])
                let xi = &cx[m] / &s;
                if m >= 2 {
                    cx[m - 2] += &xi * &s;
                }
                // y_m = sig(dY[m] - dY[m-1]); z_m = sig(dZ[m] + dZ[m-1])
                let eta = &cy[m] / &sig;
                if m >= 1 {
                    cy[m - 1] += &eta * &sig;
                }
                let zeta = &cz[m] / &sig;
                if m >= 1 {
                    cz[m - 1] -= &zeta * &sig;
                }
                out.add(Slot::X, m as i64, xi);
                out.add(Slot::Y, m as i64, eta);
                out.add(Slot::Z, m as i64, zeta);
            }
        }
    }
    Ok(out)
}

/// Expansion of one basis vector of `from` in the basis `to`, as a list of
/// (slot, index, coefficient) terms; negative indices are dropped by the
/// caller via [`Coords::add`].
fn basis_vec_expansion(from: Basis, to: Basis, slot: Slot, i: i64) -> Vec<(Slot, i64, Rational)> {
    use Slot::*;
    match (from, to) {
        (a, b) if a == b => vec![(slot, i, int(1))],
        (Basis::Xyz, Basis::Ab) => match slot {
            X => vec![(AEven, i, int(1)), (BEven, i - 1, int(4))],
            Y => vec![
                (AOdd, i, int(1)),
                (AEven, i, int(2)),
                (AOdd, i - 1, int(4)),
                (BEven, i, int(-2)),
            ],
            Z => vec![
                (AOdd, i, int(1)),
                (AEven, i, int(2)),
                (AOdd, i - 1, int(-4)),
                (BEven, i, int(2)),
            ],
            _ => panic!("slot {slot:?} not in xyz basis"),
        },
        (Basis::Ab, Basis::Xyz) => match slot {
            AEven => {
                let mut v = Vec::new();
                let mut k = 0i64;
                while i - 2 * k >= 0 {
                    let c = Rational::from_integer(num_bigint::BigInt::from(16).pow(k as u32));
                    v.push((X, i - 2 * k, c.clone()));
                    v.push((Y, i - 2 * k - 1, c.clone()));
                    v.push((Z, i - 2 * k - 1, -&c));
                    v.push((Y, i - 2 * k - 2, &c * int(-4)));
                    v.push((Z, i - 2 * k - 2, &c * int(-4)));
                    k += 1;
                }
                v
            }
            BEven => {
                let mut v = Vec::new();
                let mut k = 0i64;
                while i - 2 * k >= 0 {
                    let c = Rational::from_integer(num_bigint::BigInt::from(16).pow(k as u32));
                    v.push((Y, i - 2 * k, &c * rat(-1, 4)));
                    v.push((Z, i - 2 * k, &c * rat(1, 4)));
                    v.push((X, i - 2 * k - 1, &c * int(-4)));
                    v.push((Y, i - 2 * k - 1, c.clone()));
                    v.push((Z, i - 2 * k - 1, c));
                    k += 1;
                }
                v
            }
            AOdd => {
                let mut v = vec![(Y, i, rat(1, 2)), (Z, i, rat(1, 2))];
                for (s, j, c) in basis_vec_expansion(Basis::Ab, Basis::Xyz, AEven, i) {
                    v.push((s, j, &c * int(-2)));
                }
                v
            }
            _ => panic!("slot {slot:?} not in ab basis"),
        },
        (Basis::Xyz, Basis::Delta) => {
            let s = signed_pow4(i as u32);
            let sig = signed_pow4(i as u32 + 1);
            match slot {
                X => vec![(X, i, s.clone()), (X, i - 2, -&s)],
                Y => vec![(Y, i, sig.clone()), (Y, i - 1, -&sig)],
                Z => vec![(Z, i, sig.clone()), (Z, i - 1, sig)],
                _ => panic!("slot {slot:?} not in xyz basis"),
            }
        }
        (Basis::Delta, Basis::Xyz) => match slot {
            X => (0..=i / 2)
                .map(|j| {
                    let e = (i - 2 * j) as u32;
                    (X, i - 2 * j, int(1) / signed_pow4(e))
                })
                .collect(),
            Y => (0..=i)
                .map(|j| (Y, j, int(1) / signed_pow4(j as u32 + 1)))
                .collect(),
            Z => (0..=i)
                .map(|j| {
                    let c = crate::rational::sign(i as u32 + 1) / signed_pow4(j as u32 + 1)
                        * crate::rational::sign(j as u32 + 1);
                    (Z, j, c)
                })
                .collect(),
            _ => panic!("slot {slot:?} not in delta basis"),
        },
        (Basis::Ab, Basis::Delta) => {
            let s = signed_pow4(i as u32);
            match slot {
                AEven => vec![(X, i, s.clone()), (Y, i - 1, s.clone()), (Z, i - 1, -&s)],
                BEven => vec![(X, i - 1, s.clone()), (Y, i, s.clone()), (Z, i, -&s)],
                AOdd => {
                    let c = &s * int(-2);
                    vec![(X, i, c.clone()), (Y, i, c.clone()), (Z, i, c)]
                }
                _ => panic!("slot {slot:?} not in ab basis"),
            }
        }
        (Basis::Delta, Basis::Ab) => {
            // expand each xyz term of the delta vector by the xyz -> ab map
            let mut v = Vec::new();
            for (s1, j, c1) in basis_vec_expansion(Basis::Delta, Basis::Xyz, slot, i) {
                if j < 0 {
                    continue;
                }
                for (s2, k, c2) in basis_vec_expansion(Basis::Xyz, Basis::Ab, s1, j) {
                    v.push((s2, k, &c1 * &c2));
                }
            }
            v
        }
        _ => unreachable!(),
    }
}

/// Change of basis by the explicit transition formulas.
pub fn transition(c: &Coords, to_basis: Basis) -> Coords {
    let mut out = Coords::new(to_basis, c.prime_level);
    for ((slot, i), v) in &c.entries {
        for (s, j, coef) in basis_vec_expansion(c.basis, to_basis, *slot, *i as i64) {
            out.add(s, j, &coef * v);
        }
    }
    out
}

fn oracle_coords(basis: Basis, terms: &[(Slot, i64, i64)]) -> Coords {
    let mut c = Coords::new(basis, 0);
    for &(s, i, v) in terms {
        c.add(s, i, int(v));
    }
    c
}

/// Structure constants of the ab basis: the bracket of two basis vectors
/// as ab coordinates.
pub fn bracket_oracle_ab(s: Slot, i: i64, t_slot: Slot, j: i64) -> Coords {
    use Slot::*;
    assert!(i >= 0 && j >= 0, "indices must be nonnegative");
    let c = |terms: &[(Slot, i64, i64)]| oracle_coords(Basis::Ab, terms);
    match (s, t_slot) {
        (AEven, AEven) => {
            if i == 0 && j >= 1 {
                c(&[(AOdd, j - 1, 4)])
            } else if j == 0 && i >= 1 {
                c(&[(AOdd, i - 1, -4)])
            } else {
                c(&[])
            }
        }
        (BEven, AEven) => {
            if j == 0 {
                c(&[(AOdd, i, 1)])
            } else if i == 0 {
                c(&[(AOdd, j, 1)])
            } else {
                c(&[(AOdd, i + j, 1), (AOdd, i + j - 2, -16)])
            }
        }
        (AEven, BEven) => bracket_oracle_ab(t_slot, j, s, i).neg(),
        (BEven, BEven) => {
            if i >= 1 && j == 0 {
                c(&[(AOdd, i - 1, 4)])
            } else if i == 0 && j >= 1 {
                c(&[(AOdd, j - 1, -4)])
            } else {
                c(&[])
            }
        }
        (AEven, AOdd) => {
            if i == 0 {
                c(&[(AEven, j + 1, 1)])
            } else {
                c(&[(AEven, i + j + 1, 1), (BEven, i + j, 4)])
            }
        }
        (AOdd, AEven) => bracket_oracle_ab(t_slot, j, s, i).neg(),
        (AOdd, BEven) => {
            if j == 0 {
                c(&[(BEven, i + 1, 1)])
            } else {
                c(&[(BEven, i + j + 1, 1), (AEven, i + j, 4)])
            }
        }
        (BEven, AOdd) => bracket_oracle_ab(t_slot, j, s, i).neg(),
        (AOdd, AOdd) => c(&[]),
        _ => panic!("slots {s:?}, {t_slot:?} not in ab basis"),
    }
}

/// Structure constants of the xyz basis.
pub fn bracket_oracle_xyz(s: Slot, i: i64, t_slot: Slot, j: i64) -> Coords {
    use Slot::*;
    assert!(i >= 0 && j >= 0, "indices must be nonnegative");
    let c = |terms: &[(Slot, i64, i64)]| oracle_coords(Basis::Xyz, terms);
    match (s, t_slot) {
        (X, X) | (Y, Y) | (Z, Z) => c(&[]),
        (X, Y) => match (i, j) {
            (0, 0) => c(&[(X, 1, 1), (Y, 0, 2), (X, 0, -4)]),
            (1, 0) => c(&[(X, 2, 1), (Y, 1, 2), (X, 1, -4), (Y, 0, -8), (X, 0, 16)]),
            (_, 0) => c(&[(X, i + 1, 1), (Y, i, 2), (X, i, -4), (Y, i - 1, -8)]),
            (0 | 1, _) => c(&[(X, i + j + 1, 1), (Y, i + j, 2)]),
            _ => c(&[
                (X, i + j + 1, 1),
                (Y, i + j, 2),
                (X, i + j - 1, -16),
                (Y, i + j - 2, -32),
            ]),
        },
        (X, Z) => match (i, j) {
            (0, 0) => c(&[(X, 1, 1), (Z, 0, -2), (X, 0, 4)]),
            (1, 0) => c(&[(X, 2, 1), (Z, 1, -2), (X, 1, 4), (Z, 0, -8), (X, 0, 16)]),
            (_, 0) => c(&[(X, i + 1, 1), (Z, i, -2), (X, i, 4), (Z, i - 1, -8)]),
            (0 | 1, _) => c(&[(X, i + j + 1, 1), (Z, i + j, -2)]),
            _ => c(&[
                (X, i + j + 1, 1),
                (Z, i + j, -2),
                (X, i + j - 1, -16),
                (Z, i + j - 2, 32),
            ]),
        },
        (Y, Z) => match (i, j) {
            (0, 0) => c(&[(Z, 1, 1), (Y, 1, -1)]),
            (_, 0) => c(&[(Z, i + 1, 1), (Y, i + 1, -1), (Z, i, 4), (Y, i, -4)]),
            (0, _) => c(&[(Z, j + 1, 1), (Y, j + 1, -1), (Z, j, -4), (Y, j, 4)]),
            _ => c(&[
                (Z, i + j + 1, 1),
                (Y, i + j + 1, -1),
                (Z, i + j - 1, -16),
                (Y, i + j - 1, 16),
            ]),
        },
        (Y, X) | (Z, X) | (Z, Y) => bracket_oracle_xyz(t_slot, j, s, i).neg(),
        _ => panic!("slots {s:?}, {t_slot:?} not in xyz basis"),
    }
}

/// Structure constants of the delta basis.
pub fn bracket_oracle_delta(s: Slot, i: i64, t_slot: Slot, j: i64) -> Coords {
    use Slot::*;
    assert!(i >= 0 && j >= 0, "indices must be nonnegative");
    let c = |terms: &[(Slot, i64, i64)]| oracle_coords(Basis::Delta, terms);
    match (s, t_slot) {
        (X, X) | (Y, Y) | (Z, Z) => c(&[]),
        (X, Y) => c(&[(X, i + j, 1), (X, i + j + 1, 1), (Y, i + j, 2)]),
        (X, Z) => c(&[(X, i + j + 1, 1), (X, i + j, -1), (Z, i + j, -2)]),
        (Y, Z) => c(&[
            (Y, i + j, 1),
            (Y, i + j + 1, -1),
            (Z, i + j, 1),
            (Z, i + j + 1, 1),
        ]),
        (Y, X) | (Z, X) | (Z, Y) => bracket_oracle_delta(t_slot, j, s, i).neg(),
        _ => panic!("slots {s:?}, {t_slot:?} not in delta basis"),
    }
}

/// Rebuild the xyz basis elements up to `max_i` from the bottom three by
/// bracketing alone, checking every recursion identity (including both
/// alternatives where two are available) against the closed forms.
pub fn reconstruct_xyz(max_i: u32) -> Report {
    assert!(max_i >= 2);
    let mut rep = Report::new();
    let closed = |k: XyzKind, i: u32| seq_xyz(k, i, XyzMode::Closed, 0);
    let x12 = std_gen(GeneratorId::new(1, 2).unwrap());
    let x03 = std_gen(GeneratorId::new(0, 3).unwrap());
    let x0 = x12.clone();
    let y0 = &(&bracket(&x03, &x12) + &x12.scale(&int(2))) - &x03.scale(&int(2));
    let z0 = &(&bracket(&x03, &x12) + &x12.scale(&int(2))) + &x03.scale(&int(2));
    rep.check_eq("x0 = x12", x0.clone(), closed(XyzKind::X, 0));
    rep.check_eq("y0 seed", y0.clone(), closed(XyzKind::Y, 0));
    rep.check_eq("z0 seed", z0.clone(), closed(XyzKind::Z, 0));
    rep.check_eq(
        "x03 = (z0 - y0)/4",
        (&z0 - &y0).scale(&rat(1, 4)),
        x03.clone(),
    );

    let mut xs = vec![x0];
    let mut ys = vec![y0.clone()];
    let mut zs = vec![z0.clone()];

    // x1 by both given expressions
    let x1a = &(&bracket(&xs[0], &y0) - &y0.scale(&int(2))) + &xs[0].scale(&int(4));
    let x1b = &(&bracket(&xs[0], &z0) + &z0.scale(&int(2))) - &xs[0].scale(&int(4));
    rep.check_eq("x1 two forms agree", x1a.clone(), x1b);
    rep.check_eq("x1 = closed", x1a.clone(), closed(XyzKind::X, 1));
    xs.push(x1a);

    // y1, z1 from x1 and the bottom row
    let common = &(&(&xs[1].scale(&int(2)) + &y0.scale(&int(2))) - &z0.scale(&int(2)))
        + &(&bracket(&xs[1], &y0).scale(&rat(1, 4)) - &bracket(&xs[1], &z0).scale(&rat(1, 4)));
    let half_yz = bracket(&y0, &z0).scale(&rat(1, 2));
    let y1 = &common - &half_yz;
    let z1 = &common + &half_yz;
    rep.check_eq("y1 = closed", y1.clone(), closed(XyzKind::Y, 1));
    rep.check_eq("z1 = closed", z1.clone(), closed(XyzKind::Z, 1));
    ys.push(y1);
    zs.push(z1);

    // x2 by both given expressions
    let x2a = &(&(&bracket(&xs[1], &y0) - &ys[1].scale(&int(2))) + &xs[1].scale(&int(4)))
        + &(&y0.scale(&int(8)) - &xs[0].scale(&int(16)));
    let x2b = &(&(&bracket(&xs[1], &z0) + &zs[1].scale(&int(2))) - &xs[1].scale(&int(4)))
        + &(&z0.scale(&int(8)) - &xs[0].scale(&int(16)));
    rep.check_eq("x2 two forms agree", x2a.clone(), x2b);
    rep.check_eq("x2 = closed", x2a.clone(), closed(XyzKind::X, 2));
    xs.push(x2a);

    for i in 2..=max_i as usize {
        // y_i, z_i from x_i and previous rows
        let common = &xs[i].scale(&int(2))
            + &(&bracket(&xs[i], &y0).scale(&rat(1, 4)) - &bracket(&xs[i], &z0).scale(&rat(1, 4)));
        let yi = &common - &bracket(&ys[i - 1], &z0).scale(&rat(1, 2));
        let zi = &common + &bracket(&y0, &zs[i - 1]).scale(&rat(1, 2));
        rep.check_eq(format!("y{i} = closed"), yi.clone(), closed(XyzKind::Y, i as u32));
        rep.check_eq(format!("z{i} = closed"), zi.clone(), closed(XyzKind::Z, i as u32));
        ys.push(yi);
        zs.push(zi);
        if i == max_i as usize {
            break;
        }
        // x_{i+1} by both given expressions
        let xa = &(&(&bracket(&xs[i], &y0) - &ys[i].scale(&int(2))) + &xs[i].scale(&int(4)))
            + &ys[i - 1].scale(&int(8));
        let xb = &(&(&bracket(&xs[i], &z0) + &zs[i].scale(&int(2))) - &xs[i].scale(&int(4)))
            + &zs[i - 1].scale(&int(8));
        rep.check_eq(format!("x{} two forms agree", i + 1), xa.clone(), xb);
        rep.check_eq(
            format!("x{} = closed", i + 1),
            xa.clone(),
            closed(XyzKind::X, i as u32 + 1),
        );
        xs.push(xa);
    }
    rep
}

/// Whether `v` is a componentwise ring multiple of `u` or vice versa
/// (all 2x2 minors of the component matrix vanish).
fn a_proportional(u: &LoopElem, v: &LoopElem) -> bool {
    let minors = [
        &(&u.f * &v.g) - &(&u.g * &v.f),
        &(&u.g * &v.h) - &(&u.h * &v.g),
        &(&u.h * &v.f) - &(&u.f * &v.h),
    ];
    minors.iter().all(|m| m.is_zero())
}

/// Basis of the filtration subspace spanned by `a_n` and `b_n`:
/// `[a_n, b_n]` for even n (independent), `[a_n]` for odd n (`b_n = -a_n`).
pub fn u_space_basis(n: u32) -> Vec<LoopElem> {
    let a = seq_ab(SeqKind::A, n, SeqMode::Closed, 0);
    let b = seq_ab(SeqKind::B, n, SeqMode::Closed, 0);
    if n % 2 == 1 {
        assert!(!a.is_zero());
        assert_eq!(&a + &b, LoopElem::zero());
        vec![a]
    } else {
        assert!(!a_proportional(&a, &b), "a_n, b_n unexpectedly dependent");
        vec![a, b]
    }
}
