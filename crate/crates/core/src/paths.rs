//! Finite and twisted-periodic paths in Farey complexes.
//!
//! A path stores the unit group of its ambient complex: trivial units mean a
//! path in `E_R`, whose vertices are literal unimodular pairs; otherwise the
//! vertices are canonical orbit representatives. Bi-infinite paths are never
//! materialised: a [`TwistedPath`] records a finite path whose endpoints
//! differ by a unit `lambda`, which encodes the bi-infinite extension
//! `v_{i+n} = lambda^{(-1)^i} v_i`.

use serde_json::json;
use thiserror::Error;

use crate::complex::{edge_det, orbit_canonical, Pair, SL2Matrix};
use crate::ring::{Elem, Ring, RingError, UnitSubgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("ring error: {0}")]
    Ring(#[from] RingError),
    #[error("a path needs at least one vertex")]
    Empty,
    #[error("vertex {0} is not unimodular")]
    NotUnimodular(usize),
    #[error("no directed edge between consecutive vertices {0} and {1}")]
    NotAnEdge(usize, usize),
    #[error("path too short: length {0} is below the required {1}")]
    PathTooShort(usize, usize),
    #[error("operation requires a path in E_R (trivial units)")]
    NotInTrivialUnits,
    #[error("initial lift does not cover the first path vertex")]
    InvalidInitialLift,
    #[error("endpoints are not equivalent under any unit")]
    NotEquivalentEndpoints,
    #[error("paths live over different rings or unit groups")]
    ComplexMismatch,
}

/// A finite path `v_0 -> v_1 -> ... -> v_n` in a Farey complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    ring: Ring,
    units: UnitSubgroup,
    verts: Vec<Pair>,
}

impl Path {
    /// Validates and canonicalises a vertex sequence.
    pub fn new(ring: &Ring, units: &UnitSubgroup, verts: Vec<Pair>) -> Result<Path, PathError> {
        if verts.is_empty() {
            return Err(PathError::Empty);
        }
        let verts: Vec<Pair> = verts
            .iter()
            .map(|p| orbit_canonical(ring, units, p))
            .collect();
        for (i, v) in verts.iter().enumerate() {
            if !ring.is_unimodular(&v.0, &v.1) {
                return Err(PathError::NotUnimodular(i));
            }
        }
        for i in 1..verts.len() {
            if !units.contains(&edge_det(ring, &verts[i - 1], &verts[i])) {
                return Err(PathError::NotAnEdge(i - 1, i));
            }
        }
        Ok(Path {
            ring: ring.clone(),
            units: units.clone(),
            verts,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn units(&self) -> &UnitSubgroup {
        &self.units
    }

    pub fn vertices(&self) -> &[Pair] {
        &self.verts
    }

    /// Number of edges. Paths always hold at least one vertex, so there is
    /// no empty state to expose.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn first(&self) -> &Pair {
        self.verts.first().expect("nonempty")
    }

    pub fn last(&self) -> &Pair {
        self.verts.last().expect("nonempty")
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    /// Projects an `E_R` path to `F_{R,U}` under the covering map.
    pub fn project(&self, units: &UnitSubgroup) -> Result<Path, PathError> {
        if !self.units.is_trivial() {
            return Err(PathError::NotInTrivialUnits);
        }
        Path::new(&self.ring, units, self.verts.clone())
    }

    pub fn format_vertices(&self) -> Vec<String> {
        self.verts
            .iter()
            .map(|(a, b)| format!("{}/{}", self.ring.format_elem(a), self.ring.format_elem(b)))
            .collect()
    }

    pub fn to_json(&self, twist: Option<&Elem>) -> serde_json::Value {
        json!({
            "ring": self.ring.descriptor(),
            "units": self.units.elems().iter().map(|e| self.ring.format_elem(e)).collect::<Vec<_>>(),
            "vertices": self.format_vertices(),
            "twist": twist.map(|t| self.ring.format_elem(t)),
        })
    }
}

/// The itinerary `e_i = a_{i-1} b_{i+1} - b_{i-1} a_{i+1}` of a path in
/// `E_R`, defined on interior indices `i = 1, ..., n-1`.
pub fn itinerary(path: &Path) -> Result<Vec<Elem>, PathError> {
    if !path.units.is_trivial() {
        return Err(PathError::NotInTrivialUnits);
    }
    if path.len() < 2 {
        return Err(PathError::PathTooShort(path.len(), 2));
    }
    let r = &path.ring;
    Ok((1..path.len())
        .map(|i| edge_det(r, &path.verts[i - 1], &path.verts[i + 1]))
        .collect())
}

/// Unique path through `start_edge` whose itinerary equals `entries`,
/// produced by the forward recurrence `v_{i+1} = e_i v_i - v_{i-1}`.
pub fn path_from_itinerary(
    ring: &Ring,
    start_edge: (&Pair, &Pair),
    entries: &[Elem],
) -> Result<Path, PathError> {
    let trivial = UnitSubgroup::trivial(ring);
    let mut verts = vec![start_edge.0.clone(), start_edge.1.clone()];
    for e in entries {
        let prev = &verts[verts.len() - 2];
        let cur = &verts[verts.len() - 1];
        let next = (
            ring.sub(&ring.mul(e, &cur.0), &prev.0),
            ring.sub(&ring.mul(e, &cur.1), &prev.1),
        );
        verts.push(next);
    }
    Path::new(ring, &trivial, verts)
}

/// Lifts a path from `F_{R,U}` to `E_R` starting at `lift_of_v0`.
///
/// At each step the unique next-vertex lift with edge determinant exactly 1
/// is chosen, so the result is deterministic and a genuine `E_R` path.
pub fn lift_path(path: &Path, lift_of_v0: &Pair) -> Result<Path, PathError> {
    let r = &path.ring;
    if orbit_canonical(r, &path.units, lift_of_v0) != path.verts[0] {
        return Err(PathError::InvalidInitialLift);
    }
    let trivial = UnitSubgroup::trivial(r);
    let mut verts = vec![lift_of_v0.clone()];
    for next in &path.verts[1..] {
        let cur = verts.last().unwrap();
        let det = edge_det(r, cur, next);
        let mu = r.inverse(&det).map_err(PathError::Ring)?;
        verts.push((r.mul(&mu, &next.0), r.mul(&mu, &next.1)));
    }
    Path::new(r, &trivial, verts)
}

/// A path whose endpoints are equivalent: `v_n = twist * v_0` (exactly for
/// `E_R` paths, as orbits otherwise). Encodes the bi-infinite path with
/// `v_{i+n} = twist^{(-1)^i} v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedPath {
    path: Path,
    twist: Elem,
}

/// Wraps a path whose final vertex is `lambda * v_0` for a unit `lambda`.
/// The least such unit in canonical element order is recorded as the twist
/// (for `E_R` paths it is unique).
pub fn make_twisted(path: Path) -> Result<TwistedPath, PathError> {
    if path.len() < 1 {
        return Err(PathError::PathTooShort(path.len(), 1));
    }
    let r = path.ring.clone();
    let candidates: Vec<Elem> = if r.is_finite() {
        UnitSubgroup::full(&r)
            .map_err(PathError::Ring)?
            .elems()
            .to_vec()
    } else {
        vec![r.minus_one(), r.one()]
    };
    let v0 = path.first().clone();
    let vn = path.last().clone();
    for lam in candidates {
        let scaled = (r.mul(&lam, &v0.0), r.mul(&lam, &v0.1));
        let image = orbit_canonical(&r, &path.units, &scaled);
        if image == vn {
            return Ok(TwistedPath { path, twist: lam });
        }
    }
    Err(PathError::NotEquivalentEndpoints)
}

impl TwistedPath {
    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn twist(&self) -> &Elem {
        &self.twist
    }

    pub fn ring(&self) -> &Ring {
        self.path.ring()
    }

    /// Period length `n` of the underlying finite path.
    pub fn window_len(&self) -> usize {
        self.path.len()
    }

    pub fn is_closed(&self) -> bool {
        self.path.ring().is_one(&self.twist)
    }

    /// Semiclosed: endpoints differ by `-1`.
    pub fn is_semiclosed(&self) -> bool {
        self.twist == self.path.ring().minus_one()
    }

    /// Vertex of the bi-infinite extension at an arbitrary index.
    pub fn vertex_at(&self, i: i64) -> Pair {
        let r = self.path.ring();
        let n = self.path.len() as i64;
        let base = i.rem_euclid(n);
        let mut cur = self.path.verts[base as usize].clone();
        let mut idx = base;
        let lam = &self.twist;
        let lam_inv = r.inverse(lam).expect("twist is a unit");
        while idx < i {
            // v_{idx+n} = lam^{(-1)^idx} v_idx
            let factor = if idx % 2 == 0 { lam } else { &lam_inv };
            cur = (r.mul(factor, &cur.0), r.mul(factor, &cur.1));
            idx += n;
        }
        while idx > i {
            // v_{idx-n} = lam^{-(-1)^{idx-n}} v_idx
            let down = idx - n;
            let factor = if down % 2 == 0 { &lam_inv } else { lam };
            cur = (r.mul(factor, &cur.0), r.mul(factor, &cur.1));
            idx = down;
        }
        if self.path.units.is_trivial() {
            cur
        } else {
            orbit_canonical(r, &self.path.units, &cur)
        }
    }

    /// Explicit vertices of the bi-infinite extension on `[i_min, i_max]`.
    pub fn unfold(&self, i_min: i64, i_max: i64) -> Vec<Pair> {
        assert!(i_min <= i_max);
        (i_min..=i_max).map(|i| self.vertex_at(i)).collect()
    }

    /// The `n` cyclic itinerary entries `e_1, ..., e_n` of the bi-infinite
    /// extension of an `E_R` twisted path.
    pub fn cyclic_itinerary(&self) -> Result<Vec<Elem>, PathError> {
        if !self.path.units.is_trivial() {
            return Err(PathError::NotInTrivialUnits);
        }
        let r = self.path.ring();
        let n = self.path.len() as i64;
        Ok((1..=n)
            .map(|i| edge_det(r, &self.vertex_at(i - 1), &self.vertex_at(i + 1)))
            .collect())
    }

    /// `SL2(R)`-translate whose first edge is the standard `(1,0) -> (0,1)`.
    pub fn to_standard_edge(&self) -> Result<TwistedPath, PathError> {
        if !self.path.units.is_trivial() {
            return Err(PathError::NotInTrivialUnits);
        }
        let r = self.path.ring();
        let v0 = &self.path.verts[0];
        let v1 = &self.path.verts[1];
        // Columns v0 and v1 form the matrix sending the standard edge here.
        let m = SL2Matrix::new(r, v0.0.clone(), v1.0.clone(), v0.1.clone(), v1.1.clone())
            .expect("edge determinant is 1");
        let inv = m.inverse();
        let verts = self.path.verts.iter().map(|p| inv.apply_pair(p)).collect();
        let path = Path::new(r, &UnitSubgroup::trivial(r), verts)?;
        Ok(TwistedPath {
            path,
            twist: self.twist.clone(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.path.to_json(Some(&self.twist))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_complex, FareyComplex};
    use crate::util::SplitMix64;

    fn e_path(ring: &Ring, pts: &[(i64, i64)]) -> Path {
        let verts = pts
            .iter()
            .map(|&(a, b)| (ring.int(a), ring.int(b)))
            .collect();
        Path::new(ring, &UnitSubgroup::trivial(ring), verts).unwrap()
    }

    /// Deterministic random walk of the given length in a built complex.
    fn random_path(c: &FareyComplex, rng: &mut SplitMix64, len: usize) -> Path {
        let mut ids = vec![rng.below(c.vertex_count() as u64) as usize];
        for _ in 0..len {
            let cur = *ids.last().unwrap();
            let nbrs = c.out_neighbors(cur);
            ids.push(nbrs[rng.below(nbrs.len() as u64) as usize]);
        }
        let verts = ids.iter().map(|&i| c.vertex(i).clone()).collect();
        Path::new(c.ring(), c.units(), verts).unwrap()
    }

    #[test]
    fn itinerary_single_entry() {
        let z7 = Ring::zmod(7);
        let p = e_path(&z7, &[(1, 0), (0, 1), (-1, 3)]);
        assert_eq!(itinerary(&p).unwrap(), vec![z7.int(3)]);
        let short = e_path(&z7, &[(1, 0), (0, 1)]);
        assert!(matches!(
            itinerary(&short),
            Err(PathError::PathTooShort(1, 2))
        ));
    }

    #[test]
    fn itinerary_fan_over_integers() {
        let z = Ring::integers();
        // Path built from itinerary (1, 2) starting at the standard edge.
        let p = path_from_itinerary(
            &z,
            (&(z.int(1), z.int(0)), &(z.int(0), z.int(1))),
            &[z.int(1), z.int(2)],
        )
        .unwrap();
        assert_eq!(
            p.vertices(),
            &[
                (z.int(1), z.int(0)),
                (z.int(0), z.int(1)),
                (z.int(-1), z.int(1)),
                (z.int(-2), z.int(1)),
            ]
        );
        assert_eq!(itinerary(&p).unwrap(), vec![z.int(1), z.int(2)]);
    }

    #[test]
    fn itinerary_satisfies_three_term_recurrence() {
        let z6 = Ring::zmod(6);
        let trivial = UnitSubgroup::trivial(&z6);
        let c = build_complex(&z6, &trivial).unwrap();
        let mut rng = SplitMix64::new(7);
        for _ in 0..50 {
            let p = random_path(&c, &mut rng, 5);
            let its = itinerary(&p).unwrap();
            for (i, e) in its.iter().enumerate() {
                let i = i + 1;
                let (prev, cur, next) =
                    (&p.vertices()[i - 1], &p.vertices()[i], &p.vertices()[i + 1]);
                assert_eq!(z6.add(&prev.0, &next.0), z6.mul(e, &cur.0));
                assert_eq!(z6.add(&prev.1, &next.1), z6.mul(e, &cur.1));
            }
        }
    }

    #[test]
    fn itinerary_is_sl2_invariant() {
        let z7 = Ring::zmod(7);
        let trivial = UnitSubgroup::trivial(&z7);
        let c = build_complex(&z7, &trivial).unwrap();
        let mut rng = SplitMix64::new(11);
        for _ in 0..50 {
            let p = random_path(&c, &mut rng, 4);
            // Random SL2 matrix via a transporter between random edges.
            let q = random_path(&c, &mut rng, 1);
            let e1 = (
                c.vertex_id(&q.vertices()[0]).unwrap(),
                c.vertex_id(&q.vertices()[1]).unwrap(),
            );
            let q2 = random_path(&c, &mut rng, 1);
            let e2 = (
                c.vertex_id(&q2.vertices()[0]).unwrap(),
                c.vertex_id(&q2.vertices()[1]).unwrap(),
            );
            let m = c.edge_transporter(e1, e2);
            let moved = Path::new(
                &z7,
                &trivial,
                p.vertices().iter().map(|v| m.apply_pair(v)).collect(),
            )
            .unwrap();
            assert_eq!(itinerary(&p).unwrap(), itinerary(&moved).unwrap());
        }
    }

    #[test]
    fn itinerary_sl2_invariance_exhaustive_z3() {
        // Every path of length <= 4 in E_{Z/3} against every matrix that
        // moves the standard edge to some directed edge.
        let z3 = Ring::zmod(3);
        let trivial = UnitSubgroup::trivial(&z3);
        let c = build_complex(&z3, &trivial).unwrap();
        let std_edge = (
            c.vertex_id(&(z3.int(1), z3.int(0))).unwrap(),
            c.vertex_id(&(z3.int(0), z3.int(1))).unwrap(),
        );
        let mut matrices = Vec::new();
        for u in 0..c.vertex_count() {
            for &v in c.out_neighbors(u) {
                matrices.push(c.edge_transporter(std_edge, (u, v)));
            }
        }
        let mut stack: Vec<Vec<usize>> = (0..c.vertex_count()).map(|v| vec![v]).collect();
        while let Some(ids) = stack.pop() {
            if ids.len() >= 3 {
                let verts: Vec<Pair> = ids.iter().map(|&i| c.vertex(i).clone()).collect();
                let p = Path::new(&z3, &trivial, verts).unwrap();
                let its = itinerary(&p).unwrap();
                for m in &matrices {
                    let moved = Path::new(
                        &z3,
                        &trivial,
                        p.vertices().iter().map(|v| m.apply_pair(v)).collect(),
                    )
                    .unwrap();
                    assert_eq!(itinerary(&moved).unwrap(), its);
                }
            }
            if ids.len() <= 4 {
                for &nxt in c.out_neighbors(*ids.last().unwrap()) {
                    let mut next = ids.clone();
                    next.push(nxt);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn path_from_itinerary_round_trip() {
        let z6 = Ring::zmod(6);
        let edge = ((z6.int(1), z6.int(0)), (z6.int(0), z6.int(1)));
        assert_eq!(
            path_from_itinerary(&z6, (&edge.0, &edge.1), &[])
                .unwrap()
                .len(),
            1
        );
        // entries (e) -> third vertex (-1, e).
        let p = path_from_itinerary(&z6, (&edge.0, &edge.1), &[z6.int(4)]).unwrap();
        assert_eq!(p.vertices()[2], (z6.int(-1), z6.int(4)));

        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let len = 2 + rng.below(4) as usize;
            let entries: Vec<Elem> = (0..len).map(|_| z6.int(rng.below(6) as i64)).collect();
            let p = path_from_itinerary(&z6, (&edge.0, &edge.1), &entries).unwrap();
            assert_eq!(itinerary(&p).unwrap(), entries);
        }
    }

    #[test]
    fn lift_path_examples() {
        let z5 = Ring::zmod(5);
        let pm = UnitSubgroup::pm_one(&z5);
        let fpath = Path::new(
            &z5,
            &pm,
            vec![(z5.int(1), z5.int(0)), (z5.int(0), z5.int(1))],
        )
        .unwrap();
        let lifted = lift_path(&fpath, &(z5.int(1), z5.int(0))).unwrap();
        assert_eq!(
            lifted.vertices(),
            &[(z5.int(1), z5.int(0)), (z5.int(0), z5.int(1))]
        );
        assert!(matches!(
            lift_path(&fpath, &(z5.int(0), z5.int(1))),
            Err(PathError::InvalidInitialLift)
        ));
    }

    #[test]
    fn lifts_differ_by_alternating_unit() {
        // The lifts of a path starting from lambda * v_0 are the twisted
        // translates lambda^{(-1)^i} (a_i, b_i) of the base lift.
        let z5 = Ring::zmod(5);
        let full = UnitSubgroup::full(&z5).unwrap();
        let c = build_complex(&z5, &full).unwrap();
        let mut rng = SplitMix64::new(23);
        for _ in 0..20 {
            let p = random_path(&c, &mut rng, 4);
            let v0 = p.vertices()[0].clone();
            let lift1 = lift_path(&p, &v0).unwrap();
            for lam in full.elems() {
                let lam_inv = z5.inverse(lam).unwrap();
                let start = (z5.mul(lam, &v0.0), z5.mul(lam, &v0.1));
                let lift2 = lift_path(&p, &start).unwrap();
                for (i, (u, v)) in lift1.vertices().iter().zip(lift2.vertices()).enumerate() {
                    let factor = if i % 2 == 0 { lam } else { &lam_inv };
                    assert_eq!(*v, (z5.mul(factor, &u.0), z5.mul(factor, &u.1)));
                }
            }
        }
    }

    #[test]
    fn projection_inverts_lift() {
        let z7 = Ring::zmod(7);
        let pm = UnitSubgroup::pm_one(&z7);
        let c = build_complex(&z7, &pm).unwrap();
        let mut rng = SplitMix64::new(5);
        for _ in 0..100 {
            let p = random_path(&c, &mut rng, 5);
            let lift = lift_path(&p, &p.vertices()[0]).unwrap();
            assert_eq!(lift.project(&pm).unwrap(), p);
        }
    }

    #[test]
    fn lift_set_matches_unit_count() {
        // Lemma-style dichotomy: the lifts of a path are exactly the
        // twisted translates, one per unit.
        let z5 = Ring::zmod(5);
        let full = UnitSubgroup::full(&z5).unwrap();
        let c = build_complex(&z5, &full).unwrap();
        let mut rng = SplitMix64::new(17);
        let p = random_path(&c, &mut rng, 4);
        let v0 = &p.vertices()[0];
        let mut lifts = Vec::new();
        for lam in full.elems() {
            let start = (z5.mul(lam, &v0.0), z5.mul(lam, &v0.1));
            lifts.push(lift_path(&p, &start).unwrap());
        }
        lifts.sort_by(|a, b| a.vertices().cmp(b.vertices()));
        lifts.dedup();
        assert_eq!(lifts.len(), full.len());
    }

    #[test]
    fn twisted_examples() {
        let z5 = Ring::zmod(5);
        // Closed path (itinerary 0, 2, 0): twist 1.
        let closed = e_path(&z5, &[(1, 0), (0, 1), (4, 0), (3, 4), (1, 0)]);
        assert!(z5.is_one(make_twisted(closed).unwrap().twist()));
        // Semiclosed path: twist -1.
        let semi = e_path(&z5, &[(1, 0), (0, 1), (-1, 0)]);
        let t = make_twisted(semi).unwrap();
        assert!(t.is_semiclosed());

        // The twist-2 path 2/0 -> 2/3 -> 1/2 -> 0/1 -> 4/0 in F_5.
        let pm = UnitSubgroup::pm_one(&z5);
        let twisted2 = Path::new(
            &z5,
            &pm,
            vec![
                (z5.int(2), z5.int(0)),
                (z5.int(2), z5.int(3)),
                (z5.int(1), z5.int(2)),
                (z5.int(0), z5.int(1)),
                (z5.int(4), z5.int(0)),
            ],
        )
        .unwrap();
        let t = make_twisted(twisted2).unwrap();
        assert_eq!(*t.twist(), z5.int(2));

        let open = e_path(&z5, &[(1, 0), (0, 1)]);
        assert!(matches!(
            make_twisted(open),
            Err(PathError::NotEquivalentEndpoints)
        ));
    }

    #[test]
    fn unfold_windows() {
        let z5 = Ring::zmod(5);
        let closed = e_path(&z5, &[(1, 0), (0, 1), (4, 0), (3, 4), (1, 0)]);
        let t = make_twisted(closed.clone()).unwrap();
        assert_eq!(t.unfold(0, 4), closed.vertices());

        // Twist-2 path on F_5: v_8 = -v_0 = v_0 as orbits, so
        // period 8 downstairs; the E_5 lift only closes after 16 steps.
        let pm = UnitSubgroup::pm_one(&z5);
        let twisted2 = Path::new(
            &z5,
            &pm,
            vec![
                (z5.int(2), z5.int(0)),
                (z5.int(2), z5.int(3)),
                (z5.int(1), z5.int(2)),
                (z5.int(0), z5.int(1)),
                (z5.int(4), z5.int(0)),
            ],
        )
        .unwrap();
        let t = make_twisted(twisted2).unwrap();
        assert_eq!(*t.twist(), z5.int(2));
        assert_eq!(t.vertex_at(8), t.vertex_at(0));
        assert_ne!(t.vertex_at(4), t.vertex_at(0));

        let lifted = make_twisted(e_path(&z5, &[(2, 0), (2, 3), (1, 2), (0, 1), (4, 0)])).unwrap();
        assert_ne!(lifted.vertex_at(8), lifted.vertex_at(0));
        assert_eq!(lifted.vertex_at(16), lifted.vertex_at(0));

        // Semiclosed: v_{2n} = v_0.
        let semi = make_twisted(e_path(&z5, &[(1, 0), (0, 1), (-1, 0)])).unwrap();
        assert_eq!(semi.vertex_at(4), semi.vertex_at(0));
    }

    #[test]
    fn unfold_respects_recurrence() {
        let z5 = Ring::zmod(5);
        let lifted = e_path(&z5, &[(2, 0), (2, 3), (1, 2), (0, 1), (4, 0)]);
        let t = make_twisted(lifted).unwrap();
        let window = t.unfold(-8, 8);
        let its = t.cyclic_itinerary().unwrap();
        let n = t.window_len() as i64;
        for i in -7..8i64 {
            let e = &its[((i - 1).rem_euclid(n)) as usize];
            // Cyclic entries repeat only up to unit squares, so recompute
            // the true entry and check the recurrence it defines.
            let e_true = edge_det(&z5, &t.vertex_at(i - 1), &t.vertex_at(i + 1));
            let prev = &window[(i + 8 - 1) as usize];
            let cur = &window[(i + 8) as usize];
            let next = &window[(i + 8 + 1) as usize];
            assert_eq!(z5.add(&prev.0, &next.0), z5.mul(&e_true, &cur.0));
            assert_eq!(z5.add(&prev.1, &next.1), z5.mul(&e_true, &cur.1));
            if i >= 1 && i <= n {
                assert_eq!(*e, e_true);
            }
        }
    }

    #[test]
    fn standard_edge_normalisation() {
        let z7 = Ring::zmod(7);
        // SL2 image of the closed path with itinerary (0, 2, 0).
        let m = SL2Matrix::new(&z7, z7.int(2), z7.int(1), z7.int(3), z7.int(2)).unwrap();
        let base = e_path(&z7, &[(1, 0), (0, 1), (6, 0), (5, 6), (1, 0)]);
        let p = Path::new(
            &z7,
            &UnitSubgroup::trivial(&z7),
            base.vertices().iter().map(|v| m.apply_pair(v)).collect(),
        )
        .unwrap();
        let t = make_twisted(p).unwrap();
        let s = t.to_standard_edge().unwrap();
        assert_eq!(s.path().vertices()[0], (z7.int(1), z7.int(0)));
        assert_eq!(s.path().vertices()[1], (z7.int(0), z7.int(1)));
        assert_eq!(s.twist(), t.twist());
        assert_eq!(s.cyclic_itinerary().unwrap(), t.cyclic_itinerary().unwrap());
    }
}
