//! Lifting from `Z/NZ` to `Z`: matrices, paths, tiling windows, and friezes,
//! together with the strong-contractibility decision procedure on closed
//! paths in `F_N` that governs which friezes lift.
//!
//! Strong contractibility permits exactly two elementary homotopies on a
//! closed path: removal of a spur `<v,u,v> -> <v>` (E1) and deformation over
//! a triangular face `<u,v,w> -> <u,w>` (E2). Moves are searched exhaustively
//! (they strictly decrease length, with memoisation on the
//! rotation-insensitive word), and a successful reduction is recorded as a
//! [`ReductionTrace`] that is replayed in reverse to construct lifts.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::json;
use thiserror::Error;

use crate::complex::{edge_det, orbit_canonical, Pair, SL2Matrix};
use crate::frieze::{frieze_from_path, path_from_frieze, Frieze, FriezeError, TilingWindow};
use crate::paths::{lift_path, make_twisted, Path, PathError, TwistedPath};
use crate::ring::{egcd_bigint, Elem, Ring, RingError, UnitSubgroup};
use crate::util::egcd_i128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("ring error: {0}")]
    Ring(#[from] RingError),
    #[error("path error: {0}")]
    Path(#[from] PathError),
    #[error("frieze error: {0}")]
    Frieze(#[from] FriezeError),
    #[error("this operation requires a ring of the form Z/NZ")]
    NotZmod,
    #[error("path is not closed")]
    NotClosed,
    #[error("path is not strongly contractible")]
    NotContractible,
    #[error("contractibility search exceeded budget of {0} states")]
    BudgetExceeded(u64),
    #[error("frieze is not semiregular")]
    NotSemiregular,
    #[error("matrix entries do not reduce as expected")]
    BadMatrix,
}

/// The reduction data for `Z -> Z/NZ`: the entrywise maps on pairs, matrices,
/// windows, and friezes.
#[derive(Debug, Clone)]
pub struct Congruence {
    n: u64,
    integers: Ring,
    modular: Ring,
}

impl Congruence {
    pub fn new(n: u64) -> Congruence {
        Congruence {
            n,
            integers: Ring::integers(),
            modular: Ring::zmod(n),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn modular_ring(&self) -> &Ring {
        &self.modular
    }

    pub fn integer_ring(&self) -> &Ring {
        &self.integers
    }

    pub fn reduce_elem(&self, e: &Elem) -> Elem {
        match e {
            Elem::Int(v) => {
                let m = v.mod_floor_u64(self.n);
                Elem::Residue(m)
            }
            _ => panic!("expected an integer element"),
        }
    }

    pub fn reduce_pair(&self, p: &Pair) -> Pair {
        (self.reduce_elem(&p.0), self.reduce_elem(&p.1))
    }

    /// `rho` on `F`-vertices: reduce and take the `{1,-1}`-orbit minimum.
    pub fn reduce_pair_pm(&self, p: &Pair) -> Pair {
        let pm = UnitSubgroup::pm_one(&self.modular);
        orbit_canonical(&self.modular, &pm, &self.reduce_pair(p))
    }

    /// `theta` on matrices.
    pub fn reduce_matrix(&self, m: &SL2Matrix) -> SL2Matrix {
        SL2Matrix::new(
            &self.modular,
            self.reduce_elem(&m.a),
            self.reduce_elem(&m.b),
            self.reduce_elem(&m.c),
            self.reduce_elem(&m.d),
        )
        .expect("reduction preserves the determinant")
    }

    /// `Theta` on windows.
    pub fn reduce_window(&self, w: &TilingWindow) -> TilingWindow {
        let (i0, i1) = w.row_range();
        let (j0, j1) = w.col_range();
        let entries = (i0..=i1)
            .map(|i| (j0..=j1).map(|j| self.reduce_elem(w.get(i, j))).collect())
            .collect();
        TilingWindow::from_entries(&self.modular, i0, j0, entries).expect("same shape")
    }

    /// Reduces an integer path vertexwise, keeping the unit-group flavour.
    pub fn reduce_path(&self, p: &Path, units: &UnitSubgroup) -> Result<Path, PathError> {
        let verts = p.vertices().iter().map(|v| self.reduce_pair(v)).collect();
        Path::new(&self.modular, units, verts)
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, n: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, n: u64) -> u64 {
        let m = self % BigInt::from(n);
        let m = if m.is_negative() {
            m + BigInt::from(n)
        } else {
            m
        };
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

fn residue(e: &Elem) -> u64 {
    match e {
        Elem::Residue(r) => *r,
        _ => panic!("expected a residue element"),
    }
}

/// Lifts a matrix in `SL2(Z/NZ)` to one in `SL2(Z)` that reduces to it
/// entrywise: pick a coprime integer bottom row in the right congruence
/// class, complete it to determinant 1, and shift the top row within its
/// solution lattice to the right class.
pub fn lift_matrix(m: &SL2Matrix) -> Result<SL2Matrix, LiftError> {
    let cong = match m.ring().descriptor() {
        crate::ring::RingDescriptor::Zmod { n } => Congruence::new(n),
        _ => return Err(LiftError::NotZmod),
    };
    let n = cong.modulus() as i128;
    let (a, b) = (residue(&m.a) as i128, residue(&m.b) as i128);
    let (c, d) = (residue(&m.c) as i128, residue(&m.d) as i128);
    // Coprime representatives of the bottom row.
    let (cc, dd) = if c % n == 0 {
        // gcd(N, d) = 1 because the bottom row is unimodular mod N.
        (n, d)
    } else {
        let mut t = 0;
        loop {
            let cand = d + t * n;
            if egcd_i128(c, cand).0 == 1 {
                break (c, cand);
            }
            t += 1;
        }
    };
    let (g, u, v) = egcd_i128(cc, dd);
    debug_assert_eq!(g, 1);
    // (x, y) = (v, -u) satisfies x*dd - y*cc = 1.
    let (x, y) = (v, -u);
    // Top row = (x, y) + t (cc, dd) with t recovering the class of (a, b).
    let t = (((a - x) * u + (b - y) * v) % n + n) % n;
    let top = (x + t * cc, y + t * dd);
    let z = Ring::integers();
    let lifted = SL2Matrix::new(
        &z,
        Elem::Int(BigInt::from(top.0)),
        Elem::Int(BigInt::from(top.1)),
        Elem::Int(BigInt::from(cc)),
        Elem::Int(BigInt::from(dd)),
    )
    .map_err(|_| LiftError::BadMatrix)?;
    debug_assert_eq!(cong.reduce_matrix(&lifted), *m);
    Ok(lifted)
}

fn bigint(e: &Elem) -> &BigInt {
    match e {
        Elem::Int(v) => v,
        _ => panic!("expected an integer element"),
    }
}

/// Deterministic coprime integer pair reducing to the residues `(r, s)`
/// modulo `N`, preferring small entries.
fn lift_vertex_coprime(n: u64, r: u64, s: u64) -> (i64, i64) {
    let (n, r, s) = (n as i64, r as i64, s as i64);
    if r == 0 {
        // s is a unit mod N, so gcd(N, s) = 1.
        if s == 1 {
            return (0, 1);
        }
        return (n, s);
    }
    if s == 0 {
        if r == 1 {
            return (1, 0);
        }
        return (r, n);
    }
    let mut k = 0;
    loop {
        let cand = s + k * n;
        if egcd_i128(r as i128, cand as i128).0 == 1 {
            return (r, cand);
        }
        k += 1;
    }
}

/// Lifts a finite path in `E_N` to a path in `E_Z` whose vertices `(a_i, b_i)`
/// have `b_i > 0` and strictly decreasing slopes `a_i/b_i` inside `(-1, 1)`.
pub fn lift_path_positive(path: &Path) -> Result<Path, LiftError> {
    if !path.units().is_trivial() {
        return Err(LiftError::Path(PathError::NotInTrivialUnits));
    }
    let n = match path.ring().descriptor() {
        crate::ring::RingDescriptor::Zmod { n } => n,
        _ => return Err(LiftError::NotZmod),
    };
    let z = Ring::integers();
    let n_big = BigInt::from(n);

    // Starting vertex: b_0 > 0, -1 < a_0/b_0 < 1, correct residues.
    let (r, s) = (
        residue(&path.vertices()[0].0),
        residue(&path.vertices()[0].1),
    );
    let (a0, mut b0) = lift_vertex_coprime(n, r, s);
    // Enlarge the denominator (within its residue class) until the slope
    // constraint holds and coprimality is restored.
    while b0 <= a0.abs() || egcd_i128(a0 as i128, b0 as i128).0 != 1 {
        b0 += n as i64;
    }
    let mut verts: Vec<Pair> = vec![(Elem::Int(BigInt::from(a0)), Elem::Int(BigInt::from(b0)))];

    for step in 1..=path.len() {
        let (a, b) = {
            let v = verts.last().unwrap();
            (bigint(&v.0).clone(), bigint(&v.1).clone())
        };
        let target = &path.vertices()[step];
        let (t1, t2) = (
            BigInt::from(residue(&target.0)),
            BigInt::from(residue(&target.1)),
        );
        // Base solution of a*y - b*x = 1.
        let (p, q) = egcd_bigint(&a, &b);
        let (x0, y0) = (-q.clone(), p.clone());
        // Slide to the residue class of the target: (x, y) = (x0, y0) + t (a, b).
        let t = {
            let tt = (&t1 - &x0) * &p + (&t2 - &y0) * &q;
            let m = &tt % &n_big;
            if m.is_negative() {
                m + &n_big
            } else {
                m
            }
        };
        let x = &x0 + &t * &a;
        let y = &y0 + &t * &b;
        // (c, d) = (x, y) + k N (a, b), with the least k giving d > 0 and
        // c + d > 0 (so the slope stays above -1; it is below a/b exactly).
        let ceil_div = |num: &BigInt, den: &BigInt| -> BigInt {
            // Smallest k with num + k*den > 0, for den > 0.
            let target = -num;
            let mut q = &target / den;
            if &q * den <= target {
                q += 1;
            }
            q
        };
        let stride_d = &n_big * &b;
        let stride_cd = &n_big * (&a + &b);
        let k1 = ceil_div(&y, &stride_d);
        let k2 = ceil_div(&(&x + &y), &stride_cd);
        let k = k1.max(k2);
        let c = &x + &k * &n_big * &a;
        let d = &y + &k * &n_big * &b;
        debug_assert!(d.is_positive());
        debug_assert!((&c + &d).is_positive());
        debug_assert_eq!(&a * &d - &b * &c, BigInt::one());
        verts.push((Elem::Int(c), Elem::Int(d)));
    }
    let lifted = Path::new(&z, &UnitSubgroup::trivial(&z), verts)?;
    debug_assert_eq!(
        Congruence::new(n)
            .reduce_path(&lifted, &UnitSubgroup::trivial(&Ring::zmod(n)))
            .unwrap(),
        *path
    );
    Ok(lifted)
}

/// Lifts a window of the tiling built from two twisted paths over `E_N` to a
/// positive integer window: both paths are lifted with positive denominators
/// and the row path is shifted by `(a, b) -> (a + N b, b)` so that every
/// entry `b_i d_j (a_i/b_i - c_j/d_j)` is strictly positive.
pub fn lift_tiling_positive(
    gamma: &TwistedPath,
    delta: &TwistedPath,
    rows: (i64, i64),
    cols: (i64, i64),
) -> Result<TilingWindow, LiftError> {
    let ring = gamma.ring().clone();
    let n = match ring.descriptor() {
        crate::ring::RingDescriptor::Zmod { n } => n,
        _ => return Err(LiftError::NotZmod),
    };
    let z = Ring::integers();
    let trivial_n = UnitSubgroup::trivial(&ring);
    let n_big = BigInt::from(n);

    let gamma_seg = Path::new(&ring, &trivial_n, gamma.unfold(rows.0, rows.1))?;
    let delta_seg = Path::new(&ring, &trivial_n, delta.unfold(cols.0, cols.1))?;
    let gamma_lift = lift_path_positive(&gamma_seg)?;
    let delta_lift = lift_path_positive(&delta_seg)?;

    let shifted: Vec<(BigInt, BigInt)> = gamma_lift
        .vertices()
        .iter()
        .map(|(a, b)| {
            let (a, b) = (bigint(a), bigint(b));
            (a + &n_big * b, b.clone())
        })
        .collect();
    let entries: Vec<Vec<Elem>> = shifted
        .iter()
        .map(|(a, b)| {
            delta_lift
                .vertices()
                .iter()
                .map(|(c, d)| {
                    let val = a * bigint(d) - b * bigint(c);
                    debug_assert!(val.is_positive());
                    Elem::Int(val)
                })
                .collect()
        })
        .collect();
    Ok(TilingWindow::from_entries(&z, rows.0, cols.0, entries)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    /// Spur removal `<v,u,v> -> <v>`.
    E1,
    /// Deformation over a triangular face `<u,v,w> -> <u,w>`.
    E2,
}

/// One elementary homotopy, recorded against the word it was applied to:
/// the word is rotated left by `rotation`, and the move then acts at the
/// fixed frame positions (tip at 1 for E1, middle at 1 for E2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub rotation: usize,
    pub removed: Pair,
}

/// A sequence of elementary homotopies reducing a closed path to a point;
/// replaying it backwards from a lifted point rebuilds a lifted path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub moves: Vec<Move>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn to_json(&self, ring: &Ring) -> serde_json::Value {
        json!(self
            .moves
            .iter()
            .map(|m| {
                json!({
                    "kind": match m.kind { MoveKind::E1 => "E1", MoveKind::E2 => "E2" },
                    "rotation": m.rotation,
                    "removed": format!(
                        "{}/{}",
                        ring.format_elem(&m.removed.0),
                        ring.format_elem(&m.removed.1)
                    ),
                })
            })
            .collect::<Vec<_>>())
    }
}

fn rotate_left<T: Clone>(w: &[T], r: usize) -> Vec<T> {
    let r = r % w.len();
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[r..]);
    out.extend_from_slice(&w[..r]);
    out
}

fn rotate_right<T: Clone>(w: &[T], r: usize) -> Vec<T> {
    let r = r % w.len();
    rotate_left(w, w.len() - r)
}

fn canonical_rotation(w: &[Pair]) -> Vec<Pair> {
    (0..w.len())
        .map(|r| rotate_left(w, r))
        .min()
        .expect("nonempty word")
}

struct ContractSearch<'a> {
    ring: &'a Ring,
    units: UnitSubgroup,
    budget: u64,
    visited: u64,
    failed: std::collections::HashSet<Vec<Pair>>,
}

impl<'a> ContractSearch<'a> {
    fn adjacent(&self, u: &Pair, v: &Pair) -> bool {
        u != v && self.units.contains(&edge_det(self.ring, u, v))
    }

    /// Applies the move in its rotated frame; the result stays rotated.
    fn apply(&self, word: &[Pair], mv: &Move) -> Option<Vec<Pair>> {
        let w = rotate_left(word, mv.rotation);
        let len = w.len();
        match mv.kind {
            MoveKind::E1 => {
                if len == 2 {
                    if w[1] != mv.removed {
                        return None;
                    }
                    return Some(vec![w[0].clone()]);
                }
                if len < 3 || w[1] != mv.removed || w[0] != w[2] {
                    return None;
                }
                let mut out = Vec::with_capacity(len - 2);
                out.push(w[0].clone());
                out.extend_from_slice(&w[3..]);
                Some(out)
            }
            MoveKind::E2 => {
                if len < 3 || w[1] != mv.removed {
                    return None;
                }
                if !(self.adjacent(&w[0], &w[1])
                    && self.adjacent(&w[1], &w[2 % len])
                    && self.adjacent(&w[0], &w[2 % len]))
                {
                    return None;
                }
                let mut out = Vec::with_capacity(len - 1);
                out.push(w[0].clone());
                out.extend_from_slice(&w[2..]);
                Some(out)
            }
        }
    }

    fn search(&mut self, word: &[Pair]) -> Result<Option<Vec<Move>>, LiftError> {
        if word.len() == 1 {
            return Ok(Some(Vec::new()));
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(LiftError::BudgetExceeded(self.budget));
        }
        let canon = canonical_rotation(word);
        if self.failed.contains(&canon) {
            return Ok(None);
        }
        let len = word.len();
        for kind in [MoveKind::E1, MoveKind::E2] {
            for rotation in 0..len {
                let removed = word[(rotation + 1) % len].clone();
                let mv = Move {
                    kind,
                    rotation,
                    removed,
                };
                if let Some(next) = self.apply(word, &mv) {
                    if let Some(mut tail) = self.search(&next)? {
                        let mut moves = vec![mv];
                        moves.append(&mut tail);
                        return Ok(Some(moves));
                    }
                }
            }
        }
        self.failed.insert(canon);
        Ok(None)
    }
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// Decides strong contractibility of a closed path in `F_R`, returning a
/// witnessing reduction on success. The search is complete: moves strictly
/// decrease length, failed words are memoised up to rotation, and a `false`
/// answer means no move sequence reaches a point.
pub fn is_strongly_contractible(path: &Path) -> Result<(bool, Option<ReductionTrace>), LiftError> {
    is_strongly_contractible_with_budget(path, DEFAULT_SEARCH_BUDGET)
}

pub fn is_strongly_contractible_with_budget(
    path: &Path,
    budget: u64,
) -> Result<(bool, Option<ReductionTrace>), LiftError> {
    if !path.is_closed() {
        return Err(LiftError::NotClosed);
    }
    let ring = path.ring().clone();
    let word: Vec<Pair> = path.vertices()[..path.len().max(1)].to_vec();
    let mut search = ContractSearch {
        ring: &ring,
        units: UnitSubgroup::pm_one(&ring),
        budget,
        visited: 0,
        failed: std::collections::HashSet::new(),
    };
    match search.search(&word)? {
        Some(moves) => Ok((true, Some(ReductionTrace { moves }))),
        None => Ok((false, None)),
    }
}

/// Neighbour of the `F_Z` vertex `(a, b)` lifting the `F_N` vertex `target`,
/// chosen deterministically (least valid lattice shift).
fn adjacent_lift(cong: &Congruence, at: &Pair, target: &Pair) -> Pair {
    let n_big = BigInt::from(cong.modulus());
    let (a, b) = (bigint(&at.0).clone(), bigint(&at.1).clone());
    let (p, q) = egcd_bigint(&a, &b);
    // a*y0 - b*x0 = 1.
    let (x0, y0) = (-q.clone(), p.clone());
    let modular = cong.modular_ring().clone();
    let reduced_at = cong.reduce_pair(at);
    for sign in [1i64, -1] {
        let t = (
            modular.mul(&modular.int(sign), &target.0),
            modular.mul(&modular.int(sign), &target.1),
        );
        // Need det(reduced_at, t) = 1 mod N for the +-lattice to reach t.
        if !modular.is_one(&edge_det(&modular, &reduced_at, &t)) {
            continue;
        }
        let (t1, t2) = (BigInt::from(residue(&t.0)), BigInt::from(residue(&t.1)));
        let k = {
            let kk = (&t1 - &x0) * &p + (&t2 - &y0) * &q;
            let m = &kk % &n_big;
            if m.is_negative() {
                m + &n_big
            } else {
                m
            }
        };
        let x = &x0 + &k * &a;
        let y = &y0 + &k * &b;
        let z = Ring::integers();
        let pm = UnitSubgroup::pm_one(&z);
        let lift = orbit_canonical(&z, &pm, &(Elem::Int(x), Elem::Int(y)));
        debug_assert_eq!(cong.reduce_pair_pm(&lift), *target);
        return lift;
    }
    unreachable!("target is adjacent in F_N, so one sign class lifts");
}

/// The two `F_Z` vertices completing the edge `(u, v)` to a triangle are the
/// mediants `(u0 +- v0, u1 +- v1)`.
fn mediants(u: &Pair, v: &Pair) -> [Pair; 2] {
    let z = Ring::integers();
    let pm = UnitSubgroup::pm_one(&z);
    let plus = (
        Elem::Int(bigint(&u.0) + bigint(&v.0)),
        Elem::Int(bigint(&u.1) + bigint(&v.1)),
    );
    let minus = (
        Elem::Int(bigint(&u.0) - bigint(&v.0)),
        Elem::Int(bigint(&u.1) - bigint(&v.1)),
    );
    [
        orbit_canonical(&z, &pm, &plus),
        orbit_canonical(&z, &pm, &minus),
    ]
}

/// Lifts a strongly contractible closed path in `F_N` to a closed path in
/// `F_Z`: the reduction trace is replayed in reverse from a lifted point,
/// re-inserting a spur tip (E1) or the matching mediant of the lifted edge
/// (E2) at each step. For `N = 2` both mediants match and the sum mediant is
/// taken.
pub fn lift_closed_path(path: &Path) -> Result<Path, LiftError> {
    lift_closed_path_with_budget(path, DEFAULT_SEARCH_BUDGET)
}

pub fn lift_closed_path_with_budget(path: &Path, budget: u64) -> Result<Path, LiftError> {
    let n = match path.ring().descriptor() {
        crate::ring::RingDescriptor::Zmod { n } => n,
        _ => return Err(LiftError::NotZmod),
    };
    let cong = Congruence::new(n);
    let (ok, trace) = is_strongly_contractible_with_budget(path, budget)?;
    if !ok {
        return Err(LiftError::NotContractible);
    }
    let trace = trace.expect("trace accompanies success");

    // Forward replay to find the final point (and validate the trace).
    let ring = path.ring().clone();
    let search = ContractSearch {
        ring: &ring,
        units: UnitSubgroup::pm_one(&ring),
        budget,
        visited: 0,
        failed: std::collections::HashSet::new(),
    };
    let mut word: Vec<Pair> = path.vertices()[..path.len().max(1)].to_vec();
    let mut stages: Vec<Vec<Pair>> = vec![word.clone()];
    for mv in &trace.moves {
        word = search
            .apply(&word, mv)
            .expect("trace replays on its own path");
        stages.push(word.clone());
    }
    debug_assert_eq!(word.len(), 1);

    // Lift the final point.
    let z = Ring::integers();
    let pm_z = UnitSubgroup::pm_one(&z);
    let (r, s) = (residue(&word[0].0), residue(&word[0].1));
    let (a, b) = lift_vertex_coprime(n, r, s);
    let point = orbit_canonical(
        &z,
        &pm_z,
        &(Elem::Int(BigInt::from(a)), Elem::Int(BigInt::from(b))),
    );
    let mut lifted: Vec<Pair> = vec![point];

    // Reverse replay: expand in the rotated frame, then undo the rotation.
    for (mv, pre_word) in trace.moves.iter().rev().zip(stages.iter().rev().skip(1)) {
        let mut expanded: Vec<Pair> = Vec::with_capacity(lifted.len() + 2);
        match mv.kind {
            MoveKind::E1 => {
                let anchor = lifted[0].clone();
                // `removed` is already a canonical F_N vertex.
                let tip = adjacent_lift(&cong, &anchor, &mv.removed);
                if pre_word.len() == 2 {
                    expanded.push(anchor.clone());
                    expanded.push(tip);
                } else {
                    expanded.push(anchor.clone());
                    expanded.push(tip);
                    expanded.push(anchor);
                    expanded.extend_from_slice(&lifted[1..]);
                }
            }
            MoveKind::E2 => {
                let u = lifted[0].clone();
                let w = lifted[1 % lifted.len()].clone();
                let target = mv.removed.clone();
                let [m_plus, m_minus] = mediants(&u, &w);
                let pick = if cong.reduce_pair_pm(&m_plus) == target {
                    m_plus
                } else {
                    debug_assert_eq!(cong.reduce_pair_pm(&m_minus), target);
                    m_minus
                };
                expanded.push(u);
                expanded.push(pick);
                expanded.extend_from_slice(&lifted[1..]);
            }
        }
        lifted = rotate_right(&expanded, mv.rotation);
    }

    let mut verts = lifted.clone();
    if path.len() >= 1 {
        verts.push(lifted[0].clone());
    }
    let out = Path::new(&z, &pm_z, verts)?;
    // rho(lift) = path, positionally.
    debug_assert!(out
        .vertices()
        .iter()
        .zip(path.vertices())
        .all(|(l, v)| cong.reduce_pair_pm(l) == *v));
    Ok(out)
}

/// Why a frieze failed to lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// The corresponding path is not closed in `F_N`: its twist is not `+-1`.
    NotClosed { twist: Elem },
    /// The corresponding closed path is not strongly contractible.
    NotContractible,
}

#[derive(Debug, Clone)]
pub enum LiftOutcome {
    Lifted(Frieze),
    NotLiftable(Obstruction),
}

/// Decides whether a tame semiregular frieze over `Z/NZ` lifts to a tame
/// frieze over `Z` of the same width, and constructs the lift when it does:
/// the corresponding path must be a strongly contractible closed path in
/// `F_N`.
pub fn lift_frieze(f: &Frieze) -> Result<LiftOutcome, LiftError> {
    lift_frieze_with_budget(f, DEFAULT_SEARCH_BUDGET)
}

pub fn lift_frieze_with_budget(f: &Frieze, budget: u64) -> Result<LiftOutcome, LiftError> {
    let ring = f.ring().clone();
    let n = match ring.descriptor() {
        crate::ring::RingDescriptor::Zmod { n } => n,
        _ => return Err(LiftError::NotZmod),
    };
    if !f.is_semiregular() {
        return Err(LiftError::NotSemiregular);
    }
    let gamma = path_from_frieze(f)?;
    let twist = gamma.twist().clone();
    if !ring.is_one(&twist) && twist != ring.minus_one() {
        return Ok(LiftOutcome::NotLiftable(Obstruction::NotClosed { twist }));
    }
    // Project to F_N; the endpoints now agree exactly.
    let pm = UnitSubgroup::pm_one(&ring);
    let projected = gamma.path().project(&pm)?;
    debug_assert!(projected.is_closed());
    let (ok, _) = is_strongly_contractible_with_budget(&projected, budget)?;
    if !ok {
        return Ok(LiftOutcome::NotLiftable(Obstruction::NotContractible));
    }
    let lifted_f = lift_closed_path_with_budget(&projected, budget)?;
    // Lift from F_Z to E_Z starting at the canonical representative.
    let start = lifted_f.vertices()[0].clone();
    let lifted_e = lift_path(&lifted_f, &start)?;
    let twisted = make_twisted(lifted_e)?;
    let result = frieze_from_path(&twisted)?;

    // Entrywise verification over a window covering both periods.
    let cong = Congruence::new(n);
    let span = lcm(f.period(), 2 * f.width()) as i64;
    for j in -1..=span {
        for d in 0..=f.width() as i64 {
            let reduced = cong.reduce_elem(&result.entry(j + d, j));
            assert_eq!(
                reduced,
                f.entry(j + d, j),
                "lift verification failed at ({}, {})",
                j + d,
                j
            );
        }
    }
    Ok(LiftOutcome::Lifted(result))
}

fn lcm(a: usize, b: usize) -> usize {
    a / crate::util::gcd_u64(a as u64, b as u64) as usize * b
}
