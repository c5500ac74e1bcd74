//! Built-in verification suite: each criterion checks a known value or
//! classification end to end and reports one pass/fail line. The CLI exposes
//! the suite as `farey selftest`; the `acceptance` integration test asserts
//! every criterion.

use std::fmt::Write as _;
use std::time::Instant;

use crate::complex::{build_complex, genus_and_cusps, Pair};
use crate::frieze::{
    count_friezes_brute_force, count_friezes_formula, frieze_from_path, realize_quiddity,
    semiregular_from_cyclic_quiddity, tiling_from_paths, FriezeKind,
};
use crate::lifting::{
    is_strongly_contractible, lift_frieze, lift_tiling_positive, Congruence, LiftOutcome,
    Obstruction,
};
use crate::paths::{itinerary, lift_path, make_twisted, path_from_itinerary, Path, TwistedPath};
use crate::ring::{make_ring, Elem, Ring, RingDescriptor, UnitSubgroup};
use crate::util::SplitMix64;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{:<5}{:<30}{} ({} ms){}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.millis,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(" - {}", self.detail)
            }
        )
    }
}

pub const CRITERIA: [&str; 10] = [
    "AC1", "AC2", "AC3", "AC4", "AC5", "AC6", "AC7", "AC8", "AC9", "AC10",
];

pub fn run_one(id: &str) -> Option<CriterionResult> {
    match id {
        "AC1" => Some(criterion_1_e_diameters()),
        "AC2" => Some(criterion_2_f_diameters()),
        "AC3" => Some(criterion_3_surfaces()),
        "AC4" => Some(criterion_4_cusps()),
        "AC5" => Some(criterion_5_counting_all()),
        "AC6" => Some(criterion_6_counting_regular()),
        "AC7" => Some(criterion_7_reference_arrays()),
        "AC8" => Some(criterion_8_lifting_decisions()),
        "AC9" => Some(criterion_9_positive_tilings()),
        "AC10" => Some(criterion_10_property_suites()),
        _ => None,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|id| run_one(id).expect("known criterion"))
        .collect()
}

fn gf(p: u64, poly: &[u64]) -> Ring {
    make_ring(&RingDescriptor::Quotient {
        base: Box::new(RingDescriptor::Zmod { n: p }),
        poly: poly.to_vec(),
    })
    .expect("valid field descriptor")
}

fn product(ns: &[u64]) -> Ring {
    make_ring(&RingDescriptor::Product {
        factors: ns.iter().map(|&n| RingDescriptor::Zmod { n }).collect(),
    })
    .expect("valid product descriptor")
}

/// Ring set shared by the diameter criteria, with the diameters the
/// classification theorems assign to `E_R` and `F_R`.
fn diameter_ring_set() -> Vec<(String, Ring, u32, u32)> {
    let mut out: Vec<(String, Ring, u32, u32)> = Vec::new();
    for n in 2..=16u64 {
        let e = match n {
            2 => 1,
            3 | 4 => 2,
            _ => 3,
        };
        // Stated expectation: F_R has diameter 1 for Z/2 and Z/3, 2 for
        // direct products of Z/2, Z/3, Z/4 (up to isomorphism: N = 4, 6,
        // 12), else 3. Note Z/12 = Z/4 x Z/3 computes to 3: without a Z/2
        // factor the product argument fails (determinant signs couple
        // across components), so this expectation is kept verbatim and the
        // sub-item reports the discrepancy.
        let f = match n {
            2 | 3 => 1,
            4 | 6 | 12 => 2,
            _ => 3,
        };
        out.push((format!("z{n}"), Ring::zmod(n), e, f));
    }
    out.push(("gf4".into(), gf(2, &[1, 1, 1]), 3, 3));
    out.push(("gf8".into(), gf(2, &[1, 1, 0, 1]), 3, 3));
    out.push(("gf9".into(), gf(3, &[1, 0, 1]), 3, 3));
    out.push(("z2xz3".into(), product(&[2, 3]), 3, 2));
    // Z/3 x Z/3 computes to 3, like Z/12 above; expectation kept verbatim.
    out.push(("z3xz3".into(), product(&[3, 3]), 3, 2));
    out.push(("z4xz2".into(), product(&[4, 2]), 3, 2));
    out.push(("z2^2".into(), product(&[2, 2]), 2, 2));
    out.push(("z2^3".into(), product(&[2, 2, 2]), 2, 2));
    out.push(("z2^4".into(), product(&[2, 2, 2, 2]), 2, 2));
    out
}

fn criterion_1_e_diameters() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();
    for (name, ring, expect_e, _) in diameter_ring_set() {
        let c = build_complex(&ring, &UnitSubgroup::trivial(&ring)).unwrap();
        let got = c.diameter().unwrap();
        if got != expect_e {
            let _ = write!(failures, "[{name}: expected {expect_e}, got {got}]");
        }
    }
    let millis = start.elapsed().as_millis();
    let within_time = millis < 60_000;
    CriterionResult {
        id: "AC1",
        name: "E_R diameter classification",
        passed: failures.is_empty() && within_time,
        detail: if within_time {
            failures
        } else {
            format!("{failures}[exceeded 60 s budget]")
        },
        millis,
    }
}

fn criterion_2_f_diameters() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();
    for (name, ring, _, expect_f) in diameter_ring_set() {
        let c = build_complex(&ring, &UnitSubgroup::pm_one(&ring)).unwrap();
        let got = c.diameter().unwrap();
        if got != expect_f {
            let _ = write!(failures, "[{name}: expected {expect_f}, got {got}]");
        }
    }
    CriterionResult {
        id: "AC2",
        name: "F_R diameter classification",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}

fn criterion_3_surfaces() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();
    let mut cases: Vec<(String, Ring, bool)> = (2..=12u64)
        .map(|n| (format!("z{n}"), Ring::zmod(n), true))
        .collect();
    cases.push(("gf4".into(), gf(2, &[1, 1, 1]), false));
    cases.push(("z2xz2".into(), product(&[2, 2]), false));
    // Stated expectation retained verbatim; note that Z/2 x Z/3 is ring-
    // isomorphic to Z/6, whose complex is asserted to be a surface above.
    cases.push(("z2xz3".into(), product(&[2, 3]), false));
    for (name, ring, expect) in cases {
        let c = build_complex(&ring, &UnitSubgroup::pm_one(&ring)).unwrap();
        let got = c.is_surface_complex().unwrap();
        if got != expect {
            let _ = write!(failures, "[{name}: expected {expect}, got {got}]");
        }
    }
    CriterionResult {
        id: "AC3",
        name: "surface classification",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}

fn criterion_4_cusps() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();
    for n in 2..=12u64 {
        let (_, cusps) = genus_and_cusps(n);
        let ring = Ring::zmod(n);
        let c = build_complex(&ring, &UnitSubgroup::pm_one(&ring)).unwrap();
        if c.vertex_count() as u64 != cusps {
            let _ = write!(
                failures,
                "[N={n}: cusps {cusps} vs {} vertices]",
                c.vertex_count()
            );
        }
    }
    if genus_and_cusps(5).1 != 12 {
        let _ = write!(failures, "[N=5 cusps != 12]");
    }
    if genus_and_cusps(2) != (0, 3) {
        let _ = write!(failures, "[N=2 != (0,3)]");
    }
    CriterionResult {
        id: "AC4",
        name: "cusp counts match vertices",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}

fn counting_rings() -> Vec<(u64, Ring)> {
    vec![
        (2, Ring::zmod(2)),
        (3, Ring::zmod(3)),
        (4, gf(2, &[1, 1, 1])),
        (5, Ring::zmod(5)),
    ]
}

fn criterion_counting(kind: FriezeKind) -> (bool, String, u128) {
    let start = Instant::now();
    let mut failures = String::new();
    for (q, ring) in counting_rings() {
        for n in 2..=6u32 {
            let formula = count_friezes_formula(&ring, n, kind).unwrap();
            let brute = count_friezes_brute_force(&ring, n, kind, 50_000_000).unwrap();
            if formula != brute {
                let _ = write!(
                    failures,
                    "[q={q} n={n}: formula {formula} vs brute {brute}]"
                );
            }
        }
    }
    let millis = start.elapsed().as_millis();
    let ok = failures.is_empty() && millis < 300_000;
    (ok, failures, millis)
}

fn criterion_5_counting_all() -> CriterionResult {
    let (passed, detail, millis) = criterion_counting(FriezeKind::All);
    CriterionResult {
        id: "AC5",
        name: "tame frieze enumeration",
        passed,
        detail,
        millis,
    }
}

fn criterion_6_counting_regular() -> CriterionResult {
    let (passed, detail, millis) = criterion_counting(FriezeKind::Regular);
    CriterionResult {
        id: "AC6",
        name: "regular frieze enumeration",
        passed,
        detail,
        millis,
    }
}

fn e_twisted(ring: &Ring, pts: &[(i64, i64)]) -> TwistedPath {
    let verts = pts
        .iter()
        .map(|&(a, b)| (ring.int(a), ring.int(b)))
        .collect();
    make_twisted(Path::new(ring, &UnitSubgroup::trivial(ring), verts).unwrap()).unwrap()
}

const Z5_FRIEZE_GRID: &str = "\
0 0 0 0 0 0 0 0 0 0
 1 1 1 1 1 1 1 1 1
4 1 3 3 1 4 2 2 4 1
 3 2 3 2 3 2 3 2 3
0 0 0 0 0 0 0 0 0 0";

const INTEGER_FRIEZE_GRID: &str = "\
0 0 0 0 0 0 0 0 0 0
 1 1 1 1 1 1 1 1 1
1 3 1 2 2 1 3 1 2 2
 2 2 1 3 1 2 2 1 3
1 1 1 1 1 1 1 1 1 1
 0 0 0 0 0 0 0 0 0";

fn z5_tiling_rendered() -> String {
    let rows = [
        "2 0 3 1 4 2 0 3 1 4 2",
        "1 3 0 2 4 1 3 0 2 4 1",
        "2 2 2 2 2 2 2 2 2 2 2",
    ];
    (0..12).map(|i| rows[i % 3]).collect::<Vec<_>>().join("\n")
}

/// Reference 12x12 integer window: the frieze strip repeats along
/// diagonals with alternating signs, so each band carries one frieze row.
fn integer_tiling_expected(i: i64, j: i64) -> i64 {
    const Q: [i64; 5] = [1, 3, 1, 2, 2];
    const L: [i64; 5] = [2, 2, 1, 3, 1];
    let d = i - j;
    let b = d.rem_euclid(5);
    let k = (d - b) / 5;
    let base = match b {
        0 => 0,
        1 => 1,
        2 => Q[j.rem_euclid(5) as usize],
        3 => L[j.rem_euclid(5) as usize],
        _ => 1,
    };
    if k.rem_euclid(2) == 0 {
        base
    } else {
        -base
    }
}

fn criterion_7_reference_arrays() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();

    // (a) The width-4 twist-2 frieze over Z/5 from its lifted path, with the
    // extension entry above the zero row.
    let z5 = Ring::zmod(5);
    let pm = UnitSubgroup::pm_one(&z5);
    let fpath = Path::new(
        &z5,
        &pm,
        [(2, 0), (2, 3), (1, 2), (0, 1), (4, 0)]
            .iter()
            .map(|&(a, b)| (z5.int(a), z5.int(b)))
            .collect(),
    )
    .unwrap();
    let lifted = lift_path(&fpath, &(z5.int(2), z5.int(0))).unwrap();
    let twisted = make_twisted(lifted).unwrap();
    let frieze = frieze_from_path(&twisted).unwrap();
    if frieze.render_diamond(8, 26) != Z5_FRIEZE_GRID {
        let _ = write!(failures, "[7a: frieze grid mismatch]");
    }
    if frieze.entry(8, 9) != z5.int(4) {
        let _ = write!(failures, "[7a: extension entry above frieze != 4]");
    }

    // (b) The tiling window over Z/5 from the two closed paths.
    let gamma = e_twisted(&z5, &[(1, 0), (1, 1), (3, 4), (1, 0)]);
    let delta = e_twisted(&z5, &[(1, 2), (3, 2), (0, 2), (2, 2), (4, 2), (1, 2)]);
    let window = tiling_from_paths(&gamma, &delta, (1, 12), (2, 12)).unwrap();
    if window.render() != z5_tiling_rendered() {
        let _ = write!(failures, "[7b: tiling window mismatch]");
    }

    // (c) The width-5 positive integer frieze from its quiddity sequence.
    let z = Ring::integers();
    let seq: Vec<Elem> = [1, 3, 1, 2, 2].iter().map(|&e| z.int(e)).collect();
    let integer_frieze = realize_quiddity(&z, &seq).unwrap();
    if integer_frieze.width() != 5 || !integer_frieze.is_regular() {
        let _ = write!(failures, "[7c: wrong width or regularity]");
    }
    if integer_frieze.render_diamond(2, 20) != INTEGER_FRIEZE_GRID {
        let _ = write!(failures, "[7c: frieze grid mismatch]");
    }

    // (d) Its extension: sign-alternating diagonal strips on a 12x12 window.
    let ext = integer_frieze.extension_window((0, 11), (0, 11));
    let mut expected = String::new();
    let mut got = String::new();
    for i in 0..12i64 {
        for j in 0..12i64 {
            let _ = write!(expected, "{} ", integer_tiling_expected(i, j));
            let _ = write!(got, "{} ", z.format_elem(ext.get(i, j)));
        }
        expected.push('\n');
        got.push('\n');
    }
    if expected != got {
        let _ = write!(failures, "[7d: extension window mismatch]");
    }

    CriterionResult {
        id: "AC7",
        name: "reference array reproduction",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}

/// Enumerates all semiregular friezes of the given width over a finite ring
/// via quiddity tuples.
fn semiregular_friezes(ring: &Ring, n: usize) -> Vec<crate::frieze::Frieze> {
    let elems = ring.elements().unwrap();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let entries: Vec<Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
        if let Some(f) = semiregular_from_cyclic_quiddity(ring, &entries).unwrap() {
            out.push(f);
        }
        let mut k = 0;
        loop {
            if k == n {
                break 'outer;
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    out
}

fn criterion_8_lifting_decisions() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();

    // Known non-liftable friezes.
    let z6 = Ring::zmod(6);
    let torus_frieze = semiregular_from_cyclic_quiddity(&z6, &[2, 4, 2, 4].map(|e| z6.int(e)))
        .unwrap()
        .unwrap();
    match lift_frieze(&torus_frieze) {
        Ok(LiftOutcome::NotLiftable(Obstruction::NotContractible)) => {}
        other => {
            let _ = write!(
                failures,
                "[torus frieze: expected non-contractible, got {other:?}]"
            );
        }
    }
    let z5 = Ring::zmod(5);
    let twist2 =
        frieze_from_path(&e_twisted(&z5, &[(2, 0), (2, 3), (1, 2), (0, 1), (4, 0)])).unwrap();
    match lift_frieze(&twist2) {
        Ok(LiftOutcome::NotLiftable(Obstruction::NotClosed { twist })) if twist == z5.int(2) => {}
        other => {
            let _ = write!(
                failures,
                "[twist-2 frieze: expected twist-2 obstruction, got {other:?}]"
            );
        }
    }

    // Every semiregular frieze of width <= 5 over Z/2 and Z/3 lifts, with
    // the lift reducing entrywise to the original.
    for q in [2u64, 3] {
        let ring = Ring::zmod(q);
        let cong = Congruence::new(q);
        for n in 2..=5usize {
            for f in semiregular_friezes(&ring, n) {
                match lift_frieze(&f) {
                    Ok(LiftOutcome::Lifted(lifted)) => {
                        for j in 0..(2 * n as i64) {
                            for d in 0..=n as i64 {
                                if cong.reduce_elem(&lifted.entry(j + d, j)) != f.entry(j + d, j) {
                                    let _ = write!(
                                        failures,
                                        "[q={q} n={n}: lift does not reduce entrywise]"
                                    );
                                }
                            }
                        }
                    }
                    other => {
                        let _ = write!(failures, "[q={q} n={n}: expected lift, got {other:?}]");
                    }
                }
            }
        }
    }

    // Exhaustive width <= 5 over Z/4: the lifting decision agrees with the
    // independent closed + strongly-contractible criterion.
    let z4 = Ring::zmod(4);
    let pm4 = UnitSubgroup::pm_one(&z4);
    for n in 2..=5usize {
        for f in semiregular_friezes(&z4, n) {
            let lift_ok = matches!(lift_frieze(&f), Ok(LiftOutcome::Lifted(_)));
            let path = f.generating_path();
            let closed = z4.is_one(path.twist()) || *path.twist() == z4.minus_one();
            let indep = closed && {
                let projected = path.path().project(&pm4).unwrap();
                is_strongly_contractible(&projected).unwrap().0
            };
            if lift_ok != indep {
                let _ = write!(failures, "[z4 n={n}: decision mismatch]");
            }
        }
    }

    CriterionResult {
        id: "AC8",
        name: "frieze lifting decisions",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}

/// Deterministic random twisted path: a random walk closed up by a shortest
/// return path in the complex.
fn random_closed_twisted(
    c: &crate::complex::FareyComplex,
    rng: &mut SplitMix64,
    walk: usize,
) -> TwistedPath {
    let n = c.vertex_count();
    loop {
        let mut ids = vec![rng.below(n as u64) as usize];
        for _ in 0..walk {
            let nbrs = c.out_neighbors(*ids.last().unwrap());
            ids.push(nbrs[rng.below(nbrs.len() as u64) as usize]);
        }
        // Close with a BFS shortest path back to the start.
        let target = ids[0];
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut queue = std::collections::VecDeque::from([*ids.last().unwrap()]);
        prev[*ids.last().unwrap()] = Some(usize::MAX);
        while let Some(u) = queue.pop_front() {
            if u == target {
                break;
            }
            for &v in c.out_neighbors(u) {
                if prev[v].is_none() {
                    prev[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        let mut back = vec![target];
        while let Some(p) = prev[*back.last().unwrap()] {
            if p == usize::MAX {
                break;
            }
            back.push(p);
        }
        back.reverse();
        // back runs from the walk end to the start vertex.
        if back.len() <= 1 && ids.len() > 1 && ids[0] != *ids.last().unwrap() {
            continue;
        }
        ids.extend(back.into_iter().skip(1));
        let verts: Vec<Pair> = ids.iter().map(|&i| c.vertex(i).clone()).collect();
        let path = Path::new(c.ring(), c.units(), verts).unwrap();
        if path.len() >= 1 {
            if let Ok(t) = make_twisted(path) {
                return t;
            }
        }
    }
}

fn criterion_9_positive_tilings() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();
    let mut rng = SplitMix64::new(0xFA11_0FF5);
    for n in [3u64, 5, 7] {
        let ring = Ring::zmod(n);
        let trivial = UnitSubgroup::trivial(&ring);
        let c = build_complex(&ring, &trivial).unwrap();
        let cong = Congruence::new(n);
        for trial in 0..25 {
            let gamma = random_closed_twisted(&c, &mut rng, 3 + (trial % 3));
            let delta = random_closed_twisted(&c, &mut rng, 3 + (trial % 4));
            let rows = (0i64, 6i64);
            let cols = (0i64, 6i64);
            let lifted = lift_tiling_positive(&gamma, &delta, rows, cols).unwrap();
            for i in 0..=6 {
                for j in 0..=6 {
                    let Elem::Int(v) = lifted.get(i, j) else {
                        let _ = write!(failures, "[N={n}#{trial}: non-integer entry]");
                        continue;
                    };
                    if *v < num_bigint::BigInt::from(1) {
                        let _ = write!(failures, "[N={n}#{trial}: entry < 1]");
                    }
                }
            }
            if !lifted.is_tame().unwrap() || !lifted.is_sl2() {
                let _ = write!(failures, "[N={n}#{trial}: lift not tame]");
            }
            let reduced = cong.reduce_window(&lifted);
            let direct = tiling_from_paths(&gamma, &delta, rows, cols).unwrap();
            if reduced != direct {
                let _ = write!(failures, "[N={n}#{trial}: reduction mismatch]");
            }
        }
    }
    CriterionResult {
        id: "AC9",
        name: "positive tiling lifts",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}

fn criterion_10_property_suites() -> CriterionResult {
    let start = Instant::now();
    let mut failures = String::new();

    // Itinerary round trips, exhaustive over E_{Z/3} paths of length <= 4.
    let z3 = Ring::zmod(3);
    let trivial = UnitSubgroup::trivial(&z3);
    let c = build_complex(&z3, &trivial).unwrap();
    let mut stack: Vec<Vec<usize>> = (0..c.vertex_count()).map(|v| vec![v]).collect();
    let mut count = 0usize;
    while let Some(ids) = stack.pop() {
        if ids.len() >= 3 {
            let verts: Vec<Pair> = ids.iter().map(|&i| c.vertex(i).clone()).collect();
            let p = Path::new(&z3, &trivial, verts).unwrap();
            let its = itinerary(&p).unwrap();
            let rebuilt =
                path_from_itinerary(&z3, (&p.vertices()[0], &p.vertices()[1]), &its).unwrap();
            if rebuilt != p {
                let _ = write!(failures, "[itinerary round trip failed]");
            }
            count += 1;
        }
        if ids.len() <= 4 {
            for &nxt in c.out_neighbors(*ids.last().unwrap()) {
                let mut next = ids.clone();
                next.push(nxt);
                stack.push(next);
            }
        }
    }
    if count == 0 {
        let _ = write!(failures, "[no paths enumerated]");
    }

    // Dodgson condensation on 1000 random integer 3x3 matrices.
    let z = Ring::integers();
    let mut rng = SplitMix64::new(0xD0D6_5001);
    for _ in 0..1000 {
        let m: Vec<Vec<Elem>> = (0..3)
            .map(|_| (0..3).map(|_| z.int(rng.range_i64(-20, 20))).collect())
            .collect();
        let det2 = |a: &Elem, b: &Elem, c2: &Elem, d: &Elem| z.sub(&z.mul(a, d), &z.mul(b, c2));
        let det3 = {
            let m0 = det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
            let m1 = det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
            let m2 = det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
            z.add(
                &z.sub(&z.mul(&m[0][0], &m0), &z.mul(&m[0][1], &m1)),
                &z.mul(&m[0][2], &m2),
            )
        };
        let lhs = z.mul(&m[1][1], &det3);
        let tl = det2(&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
        let br = det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
        let tr = det2(&m[0][1], &m[0][2], &m[1][1], &m[1][2]);
        let bl = det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
        if lhs != z.sub(&z.mul(&tl, &br), &z.mul(&tr, &bl)) {
            let _ = write!(failures, "[Dodgson identity failed]");
        }
    }

    // Recurrence uniqueness on 100 random tame windows: extraction through
    // different minor columns/rows agrees and satisfies the relations.
    let mut rng = SplitMix64::new(0x7A3E);
    for trial in 0..100 {
        let n = [4u64, 5, 6, 7][trial % 4];
        let ring = Ring::zmod(n);
        let trivial_n = UnitSubgroup::trivial(&ring);
        let cx = build_complex(&ring, &trivial_n).unwrap();
        let gamma = random_closed_twisted(&cx, &mut rng, 3);
        let delta = random_closed_twisted(&cx, &mut rng, 4);
        let w = tiling_from_paths(&gamma, &delta, (0, 5), (0, 5)).unwrap();
        let (rows, cols) = w.recurrences().unwrap();
        // Re-extract against the opposite edge of the window.
        let w2 = tiling_from_paths(&gamma, &delta, (0, 5), (2, 7)).unwrap();
        let (rows2, _) = w2.recurrences().unwrap();
        if rows != rows2 {
            let _ = write!(failures, "[recurrences differ across columns]");
        }
        let w3 = tiling_from_paths(&gamma, &delta, (2, 7), (0, 5)).unwrap();
        let (_, cols3) = w3.recurrences().unwrap();
        if cols != cols3 {
            let _ = write!(failures, "[recurrences differ across rows]");
        }
    }

    // Contractibility ground truth on F_6.
    let z6 = Ring::zmod(6);
    let pm6 = UnitSubgroup::pm_one(&z6);
    let contractible = Path::new(
        &z6,
        &pm6,
        [
            (3, 2),
            (1, 1),
            (1, 0),
            (2, 1),
            (3, 1),
            (1, 4),
            (1, 3),
            (3, 2),
        ]
        .iter()
        .map(|&(a, b)| (z6.int(a), z6.int(b)))
        .collect(),
    )
    .unwrap();
    let noncontractible = Path::new(
        &z6,
        &pm6,
        [(1, 0), (0, 1), (1, 4), (2, 3), (3, 2), (4, 1), (1, 0)]
            .iter()
            .map(|&(a, b)| (z6.int(a), z6.int(b)))
            .collect(),
    )
    .unwrap();
    if !is_strongly_contractible(&contractible).unwrap().0 {
        let _ = write!(failures, "[sample gamma should be contractible]");
    }
    if is_strongly_contractible(&noncontractible).unwrap().0 {
        let _ = write!(failures, "[sample delta should not be contractible]");
    }

    CriterionResult {
        id: "AC10",
        name: "property suites",
        passed: failures.is_empty(),
        detail: failures,
        millis: start.elapsed().as_millis(),
    }
}
