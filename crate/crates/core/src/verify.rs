//! Named verification suites. Each suite sweeps one family of identities
//! at a configurable depth and returns a [`Report`] with one check per
//! identity instance.

use crate::loop_alg::{
    bracket, decompose_nine, decompose_x, grid_entry_member, is_like, is_like_definitional,
    sample_elem, std_gen, verify_tetra_relations, GeneratorId, LoopElem,
};
use crate::onsager::{
    basis_elem, bracket_oracle_ab, bracket_oracle_delta, bracket_oracle_xyz, coords, op_g, op_h,
    p_pow, reassemble_coords, reconstruct_xyz, seq_ab, seq_xyz, transition, Basis, Coords,
    SeqKind, SeqMode, Slot, XyzKind, XyzMode,
};
use crate::rational::int;
use crate::report::Report;
use crate::ring::RingElem;

pub const SUITES: [&str; 10] = [
    "tetra",
    "sequences",
    "operators",
    "ab-table",
    "xyz-table",
    "delta-table",
    "transitions",
    "grid",
    "appendix",
    "all",
];

/// Run a suite by name. `max` bounds indices for sequence/table sweeps.
pub fn run_suite(name: &str, max: u32) -> Option<Report> {
    let rep = match name {
        "tetra" => suite_tetra(),
        "sequences" => suite_sequences(max),
        "operators" => suite_operators(max),
        "ab-table" => suite_table(Basis::Ab, max / 2),
        "xyz-table" => suite_table(Basis::Xyz, max / 2),
        "delta-table" => suite_table(Basis::Delta, max / 2),
        "transitions" => suite_transitions(max),
        "grid" => suite_grid(max),
        "appendix" => suite_appendix(max),
        "all" => {
            let mut rep = Report::new();
            for s in SUITES.iter().take(SUITES.len() - 1) {
                rep.extend(run_suite(s, max).unwrap());
            }
            rep
        }
        _ => return None,
    };
    Some(rep)
}

pub fn suite_tetra() -> Report {
    verify_tetra_relations()
}

/// Recursive vs closed sequences at all prime levels, xyz combination vs
/// closed, likeness of the xyz vectors, and the odd-index collapse
/// `b_{2i+1} = -a_{2i+1} != 0`.
pub fn suite_sequences(max: u32) -> Report {
    let mut rep = Report::new();
    for kind in [SeqKind::A, SeqKind::B] {
        for n in 0..=max {
            for level in 0..3u8 {
                rep.check_eq(
                    format!("seq {kind:?} n={n} level={level} recursive=closed"),
                    seq_ab(kind, n, SeqMode::Recursive, level),
                    seq_ab(kind, n, SeqMode::Closed, level),
                );
            }
        }
    }
    for i in 0..=max / 2 {
        let a = seq_ab(SeqKind::A, 2 * i + 1, SeqMode::Closed, 0);
        let b = seq_ab(SeqKind::B, 2 * i + 1, SeqMode::Closed, 0);
        rep.record(
            format!("b_{}+a_{}=0, a nonzero", 2 * i + 1, 2 * i + 1),
            (&a + &b).is_zero() && !a.is_zero(),
            (&a + &b).to_string(),
            "0 (with a != 0)",
        );
    }
    let pairs = [
        (XyzKind::X, (1u8, 2u8)),
        (XyzKind::Y, (2, 3)),
        (XyzKind::Z, (3, 1)),
    ];
    for (kind, (gi, gj)) in pairs {
        for i in 0..=max / 2 {
            let closed = seq_xyz(kind, i, XyzMode::Closed, 0);
            rep.check_eq(
                format!("xyz {kind:?} i={i} combination=closed"),
                seq_xyz(kind, i, XyzMode::Combination, 0),
                closed.clone(),
            );
            let id = GeneratorId::new(gi, gj).unwrap();
            rep.record(
                format!("{kind:?}_{i} is x{gi}{gj}-like (both tests)"),
                is_like(id, &closed) && is_like_definitional(id, &closed),
                closed.to_string(),
                format!("x{gi}{gj}-like"),
            );
        }
    }
    rep
}

/// G and H closed forms against the defining double brackets.
pub fn suite_operators(samples: u32) -> Report {
    let mut rep = Report::new();
    let x12 = std_gen(GeneratorId::new(1, 2).unwrap());
    let x03 = std_gen(GeneratorId::new(0, 3).unwrap());
    for seed in 0..samples as u64 {
        let u = sample_elem(seed);
        rep.check_eq(
            format!("G formula seed={seed}"),
            op_g(&u),
            bracket(&x12, &bracket(&x03, &u)),
        );
        rep.check_eq(
            format!("H formula seed={seed}"),
            op_h(&u),
            bracket(&x03, &bracket(&x12, &u)),
        );
    }
    rep
}

fn basis_slots(basis: Basis) -> &'static [Slot] {
    match basis {
        Basis::Ab => &[Slot::AEven, Slot::BEven, Slot::AOdd],
        _ => &[Slot::X, Slot::Y, Slot::Z],
    }
}

/// A structure-constant table against direct brackets, all slot pairs,
/// indices up to `max`.
pub fn suite_table(basis: Basis, max: u32) -> Report {
    let mut rep = Report::new();
    for &s in basis_slots(basis) {
        for &t in basis_slots(basis) {
            for i in 0..=max as i64 {
                for j in 0..=max as i64 {
                    let direct = bracket(
                        &basis_elem(basis, s, i as u32, 0),
                        &basis_elem(basis, t, j as u32, 0),
                    );
                    let expect = coords(&direct, basis, 0).expect("bracket stays in subalgebra");
                    let got = match basis {
                        Basis::Ab => bracket_oracle_ab(s, i, t, j),
                        Basis::Xyz => bracket_oracle_xyz(s, i, t, j),
                        Basis::Delta => bracket_oracle_delta(s, i, t, j),
                    };
                    rep.check_eq(format!("{basis:?} [{s}[{i}], {t}[{j}]]"), got, expect);
                }
            }
        }
    }
    rep
}

/// All six transition directions against extraction, plus round trips.
pub fn suite_transitions(max: u32) -> Report {
    let mut rep = Report::new();
    let bases = [Basis::Ab, Basis::Xyz, Basis::Delta];
    for from in bases {
        for to in bases {
            if from == to {
                continue;
            }
            for &slot in basis_slots(from) {
                for i in 0..=max {
                    let mut c = Coords::new(from, 0);
                    c.add(slot, i as i64, int(1));
                    let via_formula = transition(&c, to);
                    let via_extraction = coords(&reassemble_coords(&c), to, 0).unwrap();
                    rep.check_eq(
                        format!("{from:?}->{to:?} {slot}[{i}]"),
                        via_formula.clone(),
                        via_extraction,
                    );
                    rep.check_eq(
                        format!("{from:?}->{to:?}->{from:?} {slot}[{i}] round trip"),
                        transition(&via_formula, from),
                        c,
                    );
                }
            }
        }
    }
    // mixed random coords round-trip through all three bases
    for seed in 0..4u64 {
        for from in bases {
            let mut c = Coords::new(from, 0);
            let mut s = seed;
            for &slot in basis_slots(from) {
                for i in 0..=max.min(6) {
                    s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                    c.add(slot, i as i64, int(((s >> 33) as i64 % 7) - 3));
                }
            }
            let (b1, b2) = match from {
                Basis::Ab => (Basis::Xyz, Basis::Delta),
                Basis::Xyz => (Basis::Delta, Basis::Ab),
                Basis::Delta => (Basis::Ab, Basis::Xyz),
            };
            let cycled = transition(&transition(&transition(&c, b1), b2), from);
            rep.check_eq(format!("cycle {from:?} seed {seed}"), cycled, c.clone());
        }
    }
    rep
}

/// Nine-way decomposition: sums, memberships, linearity, and row
/// consistency on deterministic samples.
pub fn suite_grid(samples: u32) -> Report {
    let mut rep = Report::new();
    for seed in 0..samples as u64 {
        let u = sample_elem(seed);
        let grid = decompose_nine(&u);
        rep.check_eq(format!("grid total seed={seed}"), grid.total(), u.clone());
        let (a, b, c) = decompose_x(&u);
        rep.check_eq(format!("grid row X12 seed={seed}"), grid.row_sum(0), a);
        rep.check_eq(format!("grid row X23 seed={seed}"), grid.row_sum(1), b);
        rep.check_eq(format!("grid row X31 seed={seed}"), grid.row_sum(2), c);
        let mut members = true;
        for r in 0..3 {
            for col in 0..3 {
                members &= grid_entry_member(&grid.entries[r][col], r, col);
            }
        }
        rep.record(
            format!("grid memberships seed={seed}"),
            members,
            if members { "all in subspace" } else { "subspace violation" },
            "all in subspace",
        );
        // linearity against a second sample
        let v = sample_elem(seed + 1000);
        let gv = decompose_nine(&v);
        let gsum = decompose_nine(&(&u + &v));
        let mut linear = true;
        for r in 0..3 {
            for col in 0..3 {
                linear &= gsum.entries[r][col] == &grid.entries[r][col] + &gv.entries[r][col];
            }
        }
        rep.record(
            format!("grid linearity seed={seed}"),
            linear,
            if linear { "additive" } else { "not additive" },
            "additive",
        );
    }
    rep
}

/// Primed closed forms of the sequences, built independently from powers
/// of `2t'-1` and `2t''-1`, against `seq_ab`/`seq_xyz` at levels 1 and 2.
pub fn suite_appendix(max: u32) -> Report {
    let mut rep = Report::new();
    let one = RingElem::one();
    for level in 1..=2u8 {
        // the level's variable v (= t' or t''), built from scratch
        let v = if level == 1 {
            RingElem::t_prime()
        } else {
            RingElem::t_prime2()
        };
        // q_i = (2v - 1)^i with q_{-1} = q_{-2} = 0
        let q = |i: i64| -> RingElem {
            if i < 0 {
                RingElem::zero()
            } else {
                (&v.scale(&int(2)) - &one).pow(i as u32)
            }
        };
        let s4 = |i: i64| crate::rational::signed_pow4(i as u32);
        for i in 0..=(max / 2) as i64 {
            // a'_{2i} -> (-1)^i 4^i ((v-1) q_{i-1}, q_i, v q_{i-1}), cycled per level
            let tri = |c0: RingElem, c1: RingElem, c2: RingElem| {
                // one application of ' sends (f,g,h) to (h',f',g'); two send
                // it to (g'',h'',f''). c0,c1,c2 are the substituted h,f,g.
                if level == 1 {
                    LoopElem::new(c0, c1, c2)
                } else {
                    LoopElem::new(c2, c0, c1)
                }
            };
            let a2i = tri(
                (&(&v - &one) * &q(i - 1)).scale(&s4(i)),
                q(i).scale(&s4(i)),
                (&v * &q(i - 1)).scale(&s4(i)),
            );
            rep.check_eq(
                format!("appendix a_{} level {level}", 2 * i),
                seq_ab(SeqKind::A, 2 * i as u32, SeqMode::Closed, level),
                a2i,
            );
            let b2i = tri(
                (&(&v - &one) * &q(i)).scale(&s4(i)),
                q(i - 1).scale(&s4(i)),
                (&v * &q(i)).scale(&s4(i)),
            );
            rep.check_eq(
                format!("appendix b_{} level {level}", 2 * i),
                seq_ab(SeqKind::B, 2 * i as u32, SeqMode::Closed, level),
                b2i,
            );
            let c = int(-2) * s4(i);
            let a2i1 = tri(
                (&(&one - &v) * &q(i)).scale(&c),
                q(i).scale(&c),
                (&v * &q(i)).scale(&c),
            );
            rep.check_eq(
                format!("appendix a_{} level {level}", 2 * i + 1),
                seq_ab(SeqKind::A, 2 * i as u32 + 1, SeqMode::Closed, level),
                a2i1,
            );
            // primed xyz closed forms
            let sig = |i: i64| crate::rational::signed_pow4(i as u32 + 1);
            let xi = tri(
                RingElem::zero(),
                (&q(i) - &q(i - 2)).scale(&s4(i)),
                RingElem::zero(),
            );
            rep.check_eq(
                format!("appendix x_{i} level {level}"),
                seq_xyz(XyzKind::X, i as u32, XyzMode::Closed, level),
                xi,
            );
            let yi = tri(
                RingElem::zero(),
                RingElem::zero(),
                (&v * &(&q(i) - &q(i - 1))).scale(&sig(i)),
            );
            rep.check_eq(
                format!("appendix y_{i} level {level}"),
                seq_xyz(XyzKind::Y, i as u32, XyzMode::Closed, level),
                yi,
            );
            let zi = tri(
                (&(&one - &v) * &(&q(i) + &q(i - 1))).scale(&sig(i)),
                RingElem::zero(),
                RingElem::zero(),
            );
            rep.check_eq(
                format!("appendix z_{i} level {level}"),
                seq_xyz(XyzKind::Z, i as u32, XyzMode::Closed, level),
                zi,
            );
        }
    }
    // the p_i algebra relations used throughout
    for i in 0..=max as i64 {
        let two_t = crate::poly::Poly::from_ints(&[0, 2]);
        rep.check_eq(
            format!("2t p_{i} = p_{i} + p_{}", i + 1),
            &two_t * &p_pow(i),
            &p_pow(i) + &p_pow(i + 1),
        );
    }
    // reconstruction lemma
    rep.extend(reconstruct_xyz(max.max(2).min(8)));
    rep
}
