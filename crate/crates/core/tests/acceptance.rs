//! Acceptance gate: one check per criterion, each printing a single
//! pass/fail line. Run with `--nocapture` to see the lines directly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tetrabox_core::loop_alg::{
    bracket, decompose_nine, decompose_x, grid_entry_member, is_in_onsager, is_like,
    is_like_definitional, std_gen, verify_tetra_relations, GeneratorId, LoopElem,
};
use tetrabox_core::onsager::{
    reconstruct_xyz, seq_ab, seq_xyz, Basis, SeqKind, SeqMode, XyzKind, XyzMode,
};
use tetrabox_core::poly::Poly;
use tetrabox_core::rational::int;
use tetrabox_core::ring::RingElem;
use tetrabox_core::verify::run_suite;

fn verdict(n: u32, what: &str, pass: bool) {
    println!(
        "ACCEPTANCE {n}: {what} ... {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {n} failed: {what}");
}

fn rand_ring(rng: &mut ChaCha8Rng, max_deg: usize, max_pole: i64) -> RingElem {
    let coeffs: Vec<i64> = (0..=rng.gen_range(0..=max_deg)).map(|_| rng.gen_range(-9..=9)).collect();
    RingElem::from_signed(
        Poly::from_ints(&coeffs),
        -rng.gen_range(0..=max_pole),
        -rng.gen_range(0..=max_pole),
    )
}

fn rand_loop(rng: &mut ChaCha8Rng, max_deg: usize, max_pole: i64) -> LoopElem {
    LoopElem::new(
        rand_ring(rng, max_deg, max_pole),
        rand_ring(rng, max_deg, max_pole),
        rand_ring(rng, max_deg, max_pole),
    )
}

#[test]
fn criterion_01_tetra_relations() {
    let rep = verify_tetra_relations();
    // 12 antisymmetry + 24 ordered sl2-type + 6 Dolan-Grady, plus the
    // three opposite-pair commutator images
    let antisym = rep.checks.iter().filter(|c| c.name.starts_with("antisym")).count();
    let ordered = rep.checks.iter().filter(|c| c.name.starts_with("sl2 rel")).count();
    let dg = rep.checks.iter().filter(|c| c.name.starts_with("dolan-grady")).count();
    verdict(
        1,
        "tetrahedron relations (12 antisymmetry, 24 ordered, 6 Dolan-Grady)",
        rep.all_pass() && antisym == 12 && ordered == 24 && dg == 6,
    );
}

#[test]
fn criterion_02_sequences() {
    let mut pass = true;
    for kind in [SeqKind::A, SeqKind::B] {
        for n in 0..=20u32 {
            for level in 0..3u8 {
                pass &= seq_ab(kind, n, SeqMode::Recursive, level)
                    == seq_ab(kind, n, SeqMode::Closed, level);
            }
        }
    }
    // the independently built primed closed forms (levels 1, 2)
    pass &= run_suite("appendix", 20).unwrap().all_pass();
    verdict(2, "seq_ab recursive = closed for n <= 20 at levels 0-2", pass);
}

#[test]
fn criterion_03_operators() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xABCD_0003);
    let x12 = std_gen(GeneratorId::new(1, 2).unwrap());
    let x03 = std_gen(GeneratorId::new(0, 3).unwrap());
    let mut pass = true;
    for _ in 0..50 {
        let u = rand_loop(&mut rng, 6, 3);
        pass &= tetrabox_core::onsager::op_g(&u) == bracket(&x12, &bracket(&x03, &u));
        pass &= tetrabox_core::onsager::op_h(&u) == bracket(&x03, &bracket(&x12, &u));
    }
    verdict(3, "G/H coordinate formulas equal double brackets on 50 random elements", pass);
}

#[test]
fn criterion_04_tables() {
    // the worked tables of a_2i, b_2i, a_{2i+1}, b_{2i+1} for i <= 4,
    // entered literally
    let p = |i: i64| {
        let mut acc = Poly::one();
        for _ in 0..i {
            acc = &acc * &Poly::from_ints(&[-1, 2]);
        }
        acc
    };
    let t = Poly::t;
    let tm1 = || Poly::from_ints(&[-1, 1]);
    let omt = || Poly::from_ints(&[1, -1]); // 1 - t
    let le = |f: Poly, g: Poly, h: Poly, c: i64| {
        LoopElem::new(
            RingElem::from_poly(f.scale(&int(c))),
            RingElem::from_poly(g.scale(&int(c))),
            RingElem::from_poly(h.scale(&int(c))),
        )
    };
    // (value, kind, n)
    let table: Vec<(LoopElem, SeqKind, u32)> = vec![
        (le(Poly::one(), Poly::zero(), Poly::zero(), 1), SeqKind::A, 0),
        (le(Poly::zero(), t(), tm1(), 1), SeqKind::B, 0),
        (le(p(1), t(), tm1(), -4), SeqKind::A, 2),
        (le(Poly::one(), &t() * &p(1), &tm1() * &p(1), -4), SeqKind::B, 2),
        (le(p(2), &t() * &p(1), &tm1() * &p(1), 16), SeqKind::A, 4),
        (le(p(1), &t() * &p(2), &tm1() * &p(2), 16), SeqKind::B, 4),
        (le(p(3), &t() * &p(2), &tm1() * &p(2), -64), SeqKind::A, 6),
        (le(p(2), &t() * &p(3), &tm1() * &p(3), -64), SeqKind::B, 6),
        (le(p(4), &t() * &p(3), &tm1() * &p(3), 256), SeqKind::A, 8),
        (le(p(3), &t() * &p(4), &tm1() * &p(4), 256), SeqKind::B, 8),
        (le(Poly::one(), t(), omt(), -2), SeqKind::A, 1),
        (le(Poly::one(), t(), omt(), 2), SeqKind::B, 1),
        (le(p(1), &t() * &p(1), &omt() * &p(1), 8), SeqKind::A, 3),
        (le(p(1), &t() * &p(1), &omt() * &p(1), -8), SeqKind::B, 3),
        (le(p(2), &t() * &p(2), &omt() * &p(2), -32), SeqKind::A, 5),
        (le(p(2), &t() * &p(2), &omt() * &p(2), 32), SeqKind::B, 5),
        (le(p(3), &t() * &p(3), &omt() * &p(3), 128), SeqKind::A, 7),
        (le(p(3), &t() * &p(3), &omt() * &p(3), -128), SeqKind::B, 7),
        (le(p(4), &t() * &p(4), &omt() * &p(4), -512), SeqKind::A, 9),
        (le(p(4), &t() * &p(4), &omt() * &p(4), 512), SeqKind::B, 9),
    ];
    let mut pass = true;
    for (expect, kind, n) in table {
        pass &= seq_ab(kind, n, SeqMode::Closed, 0) == expect;
        pass &= seq_ab(kind, n, SeqMode::Recursive, 0) == expect;
    }
    verdict(4, "worked sequence tables (i <= 4) reproduced entry-for-entry", pass);
}

#[test]
fn criterion_05_structure_constants() {
    let pass = [Basis::Ab, Basis::Xyz, Basis::Delta].into_iter().all(|b| {
        let name = match b {
            Basis::Ab => "ab-table",
            Basis::Xyz => "xyz-table",
            Basis::Delta => "delta-table",
        };
        // run_suite halves max for tables; 16 -> index bound 8
        run_suite(name, 16).unwrap().all_pass()
    });
    verdict(5, "all three bracket tables equal direct brackets for i,j <= 8", pass);
}

#[test]
fn criterion_06_transitions() {
    let pass = run_suite("transitions", 12).unwrap().all_pass();
    verdict(6, "six transition maps and round trips for indices <= 12", pass);
}

#[test]
fn criterion_07_direct_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xABCD_0007);
    let mut pass = true;
    for _ in 0..100 {
        let u = rand_loop(&mut rng, 5, 2);
        let grid = decompose_nine(&u);
        pass &= grid.total() == u;
        let (a, b, c) = decompose_x(&u);
        pass &= grid.row_sum(0) == a && grid.row_sum(1) == b && grid.row_sum(2) == c;
        for r in 0..3 {
            for col in 0..3 {
                pass &= grid_entry_member(&grid.entries[r][col], r, col);
            }
        }
        // columns give the O/O'/O'' split
        let mut colsum = LoopElem::zero();
        for k in 0..3u8 {
            let col = grid.col_sum(k as usize);
            pass &= is_in_onsager(&col, k);
            colsum = &colsum + &col;
        }
        pass &= colsum == u;
    }
    verdict(7, "nine-way decomposition sums, memberships, rows, columns (100 random)", pass);
}

#[test]
fn criterion_08_likeness() {
    // which generator each basis family is like, per prime level
    let like_of = |kind: XyzKind, level: u8| -> GeneratorId {
        let base = match kind {
            XyzKind::X => (1, 2),
            XyzKind::Y => (2, 3),
            XyzKind::Z => (3, 1),
        };
        let mut id = GeneratorId::new(base.0, base.1).unwrap();
        for _ in 0..level {
            id = id.rotated();
        }
        id
    };
    let mut pass = true;
    for kind in [XyzKind::X, XyzKind::Y, XyzKind::Z] {
        for level in 0..3u8 {
            let id = like_of(kind, level);
            for i in 0..=12u32 {
                let u = seq_xyz(kind, i, XyzMode::Closed, level);
                pass &= is_like(id, &u);
                pass &= is_like_definitional(id, &u);
            }
        }
    }
    verdict(8, "likeness (structural + definitional) of all basis vectors, i <= 12", pass);
}

#[test]
fn criterion_09_reconstruction() {
    let rep = reconstruct_xyz(8);
    for f in rep.failures() {
        eprintln!("  reconstruct failure: {}", f.name);
    }
    verdict(9, "recursive reconstruction of x_i, y_i, z_i up to i = 8", rep.all_pass());
}

#[test]
fn criterion_10_jacobi_and_automorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xABCD_000A);
    let mut pass = true;
    for _ in 0..100 {
        let u = rand_loop(&mut rng, 4, 2);
        let v = rand_loop(&mut rng, 4, 2);
        let w = rand_loop(&mut rng, 4, 2);
        let cyc = &(&bracket(&u, &bracket(&v, &w)) + &bracket(&v, &bracket(&w, &u)))
            + &bracket(&w, &bracket(&u, &v));
        pass &= cyc.is_zero();
        pass &= bracket(&u, &v).prime(1) == bracket(&u.prime(1), &v.prime(1));
        pass &= u.prime(1).prime(1).prime(1) == u;
    }
    for id in GeneratorId::all_ordered() {
        pass &= std_gen(id.rotated()) == std_gen(id).prime(1);
    }
    verdict(10, "Jacobi, order-3 bracket automorphism, generator commuting square", pass);
}
