//! Farey complexes of rings: directed graphs on unit-orbits of unimodular
//! pairs, with faces when `-1` lies in the unit group.
//!
//! `E_R` is the complex with trivial units (vertices are the unimodular pairs
//! themselves); `F_R` is the one for units `{1, -1}`. A vertex of a general
//! complex is the orbit `U(a,b)`, stored as the lexicographically least pair
//! in the orbit so that vertex identity is deterministic.

use std::collections::{HashMap, HashSet, VecDeque};

use serde_json::json;
use thiserror::Error;

use crate::ring::{Elem, Ring, RingError, UnitSubgroup};

/// A vertex representative: an ordered pair of ring elements.
pub type Pair = (Elem, Elem);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("ring error: {0}")]
    Ring(#[from] RingError),
    #[error("vertex count would exceed the configured cap of {0}")]
    RingTooLarge(u64),
    #[error("complex is disconnected, which signals a bug for valid inputs")]
    DisconnectedComplex,
    #[error("faces are undefined because -1 is not in the unit group")]
    FacesUndefined,
    #[error("unsupported export format: {0}")]
    UnsupportedFormat(String),
    #[error("OFF export requires a surface complex")]
    NotASurface,
    #[error("vertex is not in the complex: {0}")]
    UnknownVertex(String),
    #[error("matrix determinant is not 1")]
    NotUnimodularMatrix,
}

/// Determinant `ad - bc` of the ordered vertex pair `(a,b), (c,d)`.
pub fn edge_det(ring: &Ring, u: &Pair, v: &Pair) -> Elem {
    ring.sub(&ring.mul(&u.0, &v.1), &ring.mul(&u.1, &v.0))
}

/// Canonical representative of the orbit `U(a, b)`.
///
/// Finite rings take the lexicographic minimum over the orbit. Over `Z` with
/// units `{1,-1}` the sign is normalised to `b > 0`, or `a > 0` when `b = 0`.
pub fn orbit_canonical(ring: &Ring, units: &UnitSubgroup, pair: &Pair) -> Pair {
    if units.is_trivial() {
        return pair.clone();
    }
    if !ring.is_finite() {
        let zero = ring.zero();
        let neg = (ring.neg(&pair.0), ring.neg(&pair.1));
        let flip = if pair.1 == zero {
            pair.0 > zero
        } else {
            pair.1 > zero
        };
        return if flip { pair.clone() } else { neg };
    }
    units
        .elems()
        .iter()
        .map(|lam| (ring.mul(lam, &pair.0), ring.mul(lam, &pair.1)))
        .min()
        .expect("unit group is nonempty")
}

/// A matrix in `SL2(R)`, acting on vertices by `x/y -> (ax+by)/(cx+dy)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SL2Matrix {
    ring: Ring,
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
}

impl SL2Matrix {
    pub fn new(ring: &Ring, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<Self, ComplexError> {
        let det = ring.sub(&ring.mul(&a, &d), &ring.mul(&b, &c));
        if !ring.is_one(&det) {
            return Err(ComplexError::NotUnimodularMatrix);
        }
        Ok(SL2Matrix {
            ring: ring.clone(),
            a,
            b,
            c,
            d,
        })
    }

    pub fn identity(ring: &Ring) -> Self {
        SL2Matrix {
            ring: ring.clone(),
            a: ring.one(),
            b: ring.zero(),
            c: ring.zero(),
            d: ring.one(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn mul(&self, other: &SL2Matrix) -> SL2Matrix {
        let r = &self.ring;
        SL2Matrix {
            ring: r.clone(),
            a: r.add(&r.mul(&self.a, &other.a), &r.mul(&self.b, &other.c)),
            b: r.add(&r.mul(&self.a, &other.b), &r.mul(&self.b, &other.d)),
            c: r.add(&r.mul(&self.c, &other.a), &r.mul(&self.d, &other.c)),
            d: r.add(&r.mul(&self.c, &other.b), &r.mul(&self.d, &other.d)),
        }
    }

    pub fn inverse(&self) -> SL2Matrix {
        let r = &self.ring;
        SL2Matrix {
            ring: r.clone(),
            a: self.d.clone(),
            b: r.neg(&self.b),
            c: r.neg(&self.c),
            d: self.a.clone(),
        }
    }

    pub fn pow(&self, mut k: u64) -> SL2Matrix {
        let mut acc = SL2Matrix::identity(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Image of the pair `(x, y)` without orbit reduction.
    pub fn apply_pair(&self, p: &Pair) -> Pair {
        let r = &self.ring;
        (
            r.add(&r.mul(&self.a, &p.0), &r.mul(&self.b, &p.1)),
            r.add(&r.mul(&self.c, &p.0), &r.mul(&self.d, &p.1)),
        )
    }
}

/// The Farey complex of a finite ring with a chosen unit group.
#[derive(Debug, Clone)]
pub struct FareyComplex {
    ring: Ring,
    units: UnitSubgroup,
    verts: Vec<Pair>,
    index: HashMap<Pair, usize>,
    out: Vec<Vec<usize>>,
    edge_set: HashSet<(usize, usize)>,
    faces: Vec<[usize; 3]>,
}

pub const DEFAULT_VERTEX_CAP: u64 = 1_000_000;

/// Builds the Farey complex of a finite ring.
pub fn build_complex(ring: &Ring, units: &UnitSubgroup) -> Result<FareyComplex, ComplexError> {
    build_complex_with_cap(ring, units, DEFAULT_VERTEX_CAP)
}

pub fn build_complex_with_cap(
    ring: &Ring,
    units: &UnitSubgroup,
    cap: u64,
) -> Result<FareyComplex, ComplexError> {
    let size = ring.size().ok_or(RingError::InfiniteRing)?;
    if size
        .checked_mul(size)
        .is_none_or(|pairs| pairs > cap.saturating_mul(units.len() as u64))
    {
        return Err(ComplexError::RingTooLarge(cap));
    }
    let elems = ring.elements()?;
    let mut verts: Vec<Pair> = Vec::new();
    let mut seen: HashSet<Pair> = HashSet::new();
    for a in &elems {
        for b in &elems {
            let p = (a.clone(), b.clone());
            if ring.is_unimodular(a, b) {
                let canon = orbit_canonical(ring, units, &p);
                if seen.insert(canon.clone()) {
                    verts.push(canon);
                }
            }
        }
    }
    verts.sort();
    if verts.len() as u64 > cap {
        return Err(ComplexError::RingTooLarge(cap));
    }
    let index: HashMap<Pair, usize> = verts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut out = vec![Vec::new(); verts.len()];
    let mut edge_set = HashSet::new();
    for (i, u) in verts.iter().enumerate() {
        for (j, v) in verts.iter().enumerate() {
            if i != j && units.contains(&edge_det(ring, u, v)) {
                out[i].push(j);
                edge_set.insert((i, j));
            }
        }
    }
    let mut complex = FareyComplex {
        ring: ring.clone(),
        units: units.clone(),
        verts,
        index,
        out,
        edge_set,
        faces: Vec::new(),
    };
    complex.faces = complex.compute_faces()?;
    Ok(complex)
}

impl FareyComplex {
    /// Faces exist only when `-1` is in the unit group. They are images of
    /// the faces of `F_R` (the `{1,-1}` complex) under the quotient map, with
    /// the faces of `F_R` itself being its mutually adjacent triples.
    fn compute_faces(&self) -> Result<Vec<[usize; 3]>, ComplexError> {
        if !self.units.has_minus_one() {
            return Ok(Vec::new());
        }
        let pm = UnitSubgroup::pm_one(&self.ring);
        let mut faces: Vec<[usize; 3]> = Vec::new();
        let mut seen = HashSet::new();
        if self.units == pm {
            for u in 0..self.verts.len() {
                for &v in &self.out[u] {
                    if v <= u {
                        continue;
                    }
                    for &w in &self.out[v] {
                        if w <= v || !self.edge_set.contains(&(u, w)) {
                            continue;
                        }
                        faces.push([u, v, w]);
                    }
                }
            }
        } else {
            let base = build_complex(&self.ring, &pm)?;
            for face in &base.faces {
                let mut ids = face.map(|i| {
                    let canon = orbit_canonical(&self.ring, &self.units, &base.verts[i]);
                    self.index[&canon]
                });
                ids.sort_unstable();
                if seen.insert(ids) {
                    faces.push(ids);
                }
            }
        }
        faces.sort_unstable();
        Ok(faces)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn units(&self) -> &UnitSubgroup {
        &self.units
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> &[Pair] {
        &self.verts
    }

    pub fn vertex(&self, i: usize) -> &Pair {
        &self.verts[i]
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn out_neighbors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn directed_edge_count(&self) -> usize {
        self.edge_set.len()
    }

    /// True when directed edges come in inverse pairs (`-1` in units).
    pub fn is_undirected(&self) -> bool {
        self.units.has_minus_one()
    }

    pub fn vertex_id(&self, p: &Pair) -> Option<usize> {
        self.index
            .get(&orbit_canonical(&self.ring, &self.units, p))
            .copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_set.contains(&(u, v))
    }

    pub fn format_vertex(&self, i: usize) -> String {
        let (a, b) = &self.verts[i];
        format!("{}/{}", self.ring.format_elem(a), self.ring.format_elem(b))
    }

    /// Applies a matrix to a vertex (graph automorphism).
    pub fn apply_matrix(&self, m: &SL2Matrix, i: usize) -> usize {
        let image = m.apply_pair(&self.verts[i]);
        self.vertex_id(&image).expect("action preserves vertices")
    }

    /// Matrix sending the directed edge `1/0 -> 0/1` to the given edge, built
    /// from the edge representatives: columns `det^{-1} * u` and `v`.
    pub fn edge_to_standard(&self, u: usize, v: usize) -> SL2Matrix {
        let r = &self.ring;
        let (a, b) = &self.verts[u];
        let (c, d) = &self.verts[v];
        let lam = edge_det(r, self.vertex(u), self.vertex(v));
        let lam_inv = r.inverse(&lam).expect("edge determinant is a unit");
        SL2Matrix::new(
            r,
            r.mul(&lam_inv, a),
            c.clone(),
            r.mul(&lam_inv, b),
            d.clone(),
        )
        .expect("determinant is 1 by construction")
    }

    /// Matrix `A` with `A * e1 = e2` for directed edges `e1`, `e2`.
    pub fn edge_transporter(&self, e1: (usize, usize), e2: (usize, usize)) -> SL2Matrix {
        let to_e2 = self.edge_to_standard(e2.0, e2.1);
        let from_e1 = self.edge_to_standard(e1.0, e1.1).inverse();
        to_e2.mul(&from_e1)
    }

    /// Maximum over ordered vertex pairs of the shortest directed-path length.
    pub fn diameter(&self) -> Result<u32, ComplexError> {
        let n = self.verts.len();
        let mut best = 0u32;
        let mut dist = vec![u32::MAX; n];
        for src in 0..n {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            let mut reached = 1usize;
            while let Some(u) = queue.pop_front() {
                for &v in &self.out[u] {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        reached += 1;
                        best = best.max(dist[v]);
                        queue.push_back(v);
                    }
                }
            }
            if reached != n {
                return Err(ComplexError::DisconnectedComplex);
            }
        }
        Ok(best)
    }

    /// Undirected edges `{u, v}` with `u < v` (defined when `-1` is a unit).
    fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .edge_set
            .iter()
            .filter(|(u, v)| u < v)
            .copied()
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Checks the two surface-complex axioms, returning the first violation:
    /// every edge lies on one or two faces, and the faces around each vertex
    /// connect any two of its edges through a sequence of distinct
    /// neighbours.
    pub fn surface_violation(&self) -> Result<Option<SurfaceViolation>, ComplexError> {
        if !self.units.has_minus_one() {
            return Err(ComplexError::FacesUndefined);
        }
        let mut face_count: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &self.faces {
            for (x, y) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                *face_count.entry((x, y)).or_insert(0) += 1;
            }
        }
        for edge in self.undirected_edges() {
            let count = face_count.get(&edge).copied().unwrap_or(0);
            if count == 0 || count > 2 {
                return Ok(Some(SurfaceViolation::EdgeFaceCount { edge, count }));
            }
        }
        // Link connectivity at each vertex: neighbours are linked when they
        // span a face with the vertex.
        for w in 0..self.verts.len() {
            let neighbors: Vec<usize> = self.out[w]
                .iter()
                .copied()
                .filter(|&v| self.edge_set.contains(&(v, w)))
                .collect();
            if neighbors.len() < 2 {
                continue;
            }
            let pos: HashMap<usize, usize> =
                neighbors.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let mut link: Vec<Vec<usize>> = vec![Vec::new(); neighbors.len()];
            for f in &self.faces {
                if let Some(k) = f.iter().position(|&x| x == w) {
                    let x = f[(k + 1) % 3];
                    let y = f[(k + 2) % 3];
                    if let (Some(&ix), Some(&iy)) = (pos.get(&x), pos.get(&y)) {
                        link[ix].push(iy);
                        link[iy].push(ix);
                    }
                }
            }
            let mut seen = vec![false; neighbors.len()];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(u) = queue.pop_front() {
                for &v in &link[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            if let Some(bad) = seen.iter().position(|s| !s) {
                return Ok(Some(SurfaceViolation::LinkNotConnected {
                    vertex: w,
                    from: neighbors[0],
                    to: neighbors[bad],
                }));
            }
        }
        Ok(None)
    }

    pub fn is_surface_complex(&self) -> Result<bool, ComplexError> {
        Ok(self.surface_violation()?.is_none())
    }

    pub fn export(&self, format: ExportFormat) -> Result<String, ComplexError> {
        match format {
            ExportFormat::Dot => Ok(self.export_dot()),
            ExportFormat::Json => Ok(self.export_json()),
            ExportFormat::Off => self.export_off(),
        }
    }

    fn export_dot(&self) -> String {
        let mut s = String::new();
        if self.is_undirected() {
            s.push_str("graph farey {\n");
            for (u, v) in self.undirected_edges() {
                s.push_str(&format!(
                    "  \"{}\" -- \"{}\";\n",
                    self.format_vertex(u),
                    self.format_vertex(v)
                ));
            }
        } else {
            s.push_str("digraph farey {\n");
            let mut edges: Vec<_> = self.edge_set.iter().copied().collect();
            edges.sort_unstable();
            for (u, v) in edges {
                s.push_str(&format!(
                    "  \"{}\" -> \"{}\";\n",
                    self.format_vertex(u),
                    self.format_vertex(v)
                ));
            }
        }
        s.push_str("}\n");
        s
    }

    fn export_json(&self) -> String {
        let edges: Vec<[usize; 2]> = if self.is_undirected() {
            self.undirected_edges()
                .iter()
                .map(|&(u, v)| [u, v])
                .collect()
        } else {
            let mut e: Vec<_> = self.edge_set.iter().copied().collect();
            e.sort_unstable();
            e.into_iter().map(|(u, v)| [u, v]).collect()
        };
        let value = json!({
            "ring": self.ring.descriptor(),
            "units": self.units.elems().iter().map(|e| self.ring.format_elem(e)).collect::<Vec<_>>(),
            "vertices": (0..self.verts.len()).map(|i| self.format_vertex(i)).collect::<Vec<_>>(),
            "edges": edges,
            "faces": self.faces,
        });
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    /// OFF mesh. Vertices are placed on the integer moment curve, which is
    /// deterministic and keeps faces non-degenerate; no geometric embedding
    /// of the surface is attempted.
    fn export_off(&self) -> Result<String, ComplexError> {
        if self.surface_violation()?.is_some() {
            return Err(ComplexError::NotASurface);
        }
        let v = self.verts.len();
        let f = self.faces.len();
        let e = self.undirected_edges().len();
        let mut s = format!("OFF\n{v} {f} {e}\n");
        for i in 0..v {
            let x = i as i64;
            s.push_str(&format!("{} {} {}\n", x, x * x, x * x * x));
        }
        for face in &self.faces {
            s.push_str(&format!("3 {} {} {}\n", face[0], face[1], face[2]));
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Off,
}

impl std::str::FromStr for ExportFormat {
    type Err = ComplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "off" => Ok(ExportFormat::Off),
            other => Err(ComplexError::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceViolation {
    /// An edge incident to zero or more than two faces.
    EdgeFaceCount { edge: (usize, usize), count: usize },
    /// Two edges at `vertex` that no fan of faces connects.
    LinkNotConnected {
        vertex: usize,
        from: usize,
        to: usize,
    },
}

/// Image of an `E_R` vertex under the covering map onto `F_{R,U}`.
pub fn covering_map(ring: &Ring, units: &UnitSubgroup, v: &Pair) -> Pair {
    orbit_canonical(ring, units, v)
}

/// Genus and cusp count of the modular surface attached to level `N`,
/// evaluated exactly: for `N > 2`,
/// `genus = 1 + N^2(N-6)/24 * prod(1 - 1/p^2)` and
/// `cusps = N^2/2 * prod(1 - 1/p^2)` over primes `p | N`; `N = 2` is the
/// special case `(0, 3)`.
pub fn genus_and_cusps(n: u64) -> (i64, u64) {
    assert!(n >= 2, "level must be at least 2");
    if n == 2 {
        return (0, 3);
    }
    // m = N^2 * prod (1 - 1/p^2), an integer since p^2 | N^2.
    let mut m = (n as i128) * (n as i128);
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            m = m / (p as i128 * p as i128) * (p as i128 * p as i128 - 1);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        m = m / (rest as i128 * rest as i128) * (rest as i128 * rest as i128 - 1);
    }
    let cusps = m / 2;
    let genus_num = (n as i128 - 6) * m;
    debug_assert_eq!(genus_num % 24, 0);
    let genus = 1 + genus_num / 24;
    (genus as i64, cusps as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingDescriptor};

    fn zmod(n: u64) -> Ring {
        Ring::zmod(n)
    }

    fn f4() -> Ring {
        make_ring(&RingDescriptor::Quotient {
            base: Box::new(RingDescriptor::Zmod { n: 2 }),
            poly: vec![1, 1, 1],
        })
        .unwrap()
    }

    fn e_complex(n: u64) -> FareyComplex {
        let r = zmod(n);
        build_complex(&r, &UnitSubgroup::trivial(&r)).unwrap()
    }

    fn f_complex(n: u64) -> FareyComplex {
        let r = zmod(n);
        build_complex(&r, &UnitSubgroup::pm_one(&r)).unwrap()
    }

    #[test]
    fn e_z2_is_complete_on_three_vertices() {
        let c = e_complex(2);
        assert_eq!(c.vertex_count(), 3);
        for i in 0..3 {
            assert_eq!(c.out_neighbors(i).len(), 2);
        }
        assert_eq!(c.diameter().unwrap(), 1);
    }

    #[test]
    fn f5_is_icosahedron() {
        let c = f_complex(5);
        assert_eq!(c.vertex_count(), 12);
        for i in 0..c.vertex_count() {
            assert_eq!(c.out_neighbors(i).len(), 5);
        }
        assert_eq!(c.faces().len(), 20);
        assert_eq!(c.diameter().unwrap(), 3);
    }

    #[test]
    fn f4_is_octahedron() {
        let c = f_complex(4);
        assert_eq!(c.vertex_count(), 6);
        for i in 0..c.vertex_count() {
            assert_eq!(c.out_neighbors(i).len(), 4);
        }
        assert_eq!(c.faces().len(), 8);
        assert_eq!(c.diameter().unwrap(), 2);
    }

    #[test]
    fn regular_with_degree_ring_size() {
        for c in [e_complex(5), e_complex(6), f_complex(7), f_complex(8)] {
            let size = c.ring().size().unwrap() as usize;
            let mut indeg = vec![0usize; c.vertex_count()];
            for u in 0..c.vertex_count() {
                assert_eq!(c.out_neighbors(u).len(), size);
                for &v in c.out_neighbors(u) {
                    indeg[v] += 1;
                }
            }
            assert!(indeg.iter().all(|&d| d == size));
            if c.is_undirected() {
                for u in 0..c.vertex_count() {
                    for &v in c.out_neighbors(u) {
                        assert!(c.has_edge(v, u));
                    }
                }
            }
        }
    }

    #[test]
    fn apply_matrix_examples() {
        let c = f_complex(5);
        let r = c.ring().clone();
        let id = SL2Matrix::identity(&r);
        for i in 0..c.vertex_count() {
            assert_eq!(c.apply_matrix(&id, i), i);
        }
        // (0 -1; 1 0) maps 1/0 to 0/1.
        let m = SL2Matrix::new(&r, r.int(0), r.int(-1), r.int(1), r.int(0)).unwrap();
        let one_zero = c.vertex_id(&(r.int(1), r.int(0))).unwrap();
        let zero_one = c.vertex_id(&(r.int(0), r.int(1))).unwrap();
        assert_eq!(c.apply_matrix(&m, one_zero), zero_one);
        // (1 1; 0 1) maps 0/1 to 1/1.
        let m = SL2Matrix::new(&r, r.int(1), r.int(1), r.int(0), r.int(1)).unwrap();
        let one_one = c.vertex_id(&(r.int(1), r.int(1))).unwrap();
        assert_eq!(c.apply_matrix(&m, zero_one), one_one);
    }

    #[test]
    fn action_respects_composition_and_kernel() {
        let c = f_complex(5);
        let r = c.ring().clone();
        let m1 = SL2Matrix::new(&r, r.int(1), r.int(2), r.int(0), r.int(1)).unwrap();
        let m2 = SL2Matrix::new(&r, r.int(0), r.int(-1), r.int(1), r.int(3)).unwrap();
        let prod = m1.mul(&m2);
        for i in 0..c.vertex_count() {
            assert_eq!(
                c.apply_matrix(&prod, i),
                c.apply_matrix(&m1, c.apply_matrix(&m2, i))
            );
        }
        // diag(lambda, lambda) with lambda^2 = 1 fixes every vertex: lambda = 4 over Z/5.
        let lam = r.int(4);
        let scalar = SL2Matrix::new(&r, lam.clone(), r.int(0), r.int(0), lam).unwrap();
        for i in 0..c.vertex_count() {
            assert_eq!(c.apply_matrix(&scalar, i), i);
        }
    }

    #[test]
    fn edge_transporter_moves_edges() {
        let c = f_complex(7);
        // Deterministic scan over a spread of edge pairs.
        let mut edges = Vec::new();
        for u in 0..c.vertex_count() {
            for &v in c.out_neighbors(u) {
                edges.push((u, v));
            }
        }
        let mut rng = crate::util::SplitMix64::new(700);
        for _ in 0..100 {
            let e1 = edges[rng.below(edges.len() as u64) as usize];
            let e2 = edges[rng.below(edges.len() as u64) as usize];
            let m = c.edge_transporter(e1, e2);
            assert_eq!(c.apply_matrix(&m, e1.0), e2.0);
            assert_eq!(c.apply_matrix(&m, e1.1), e2.1);
        }
        // Same edge: fixes both endpoints.
        let e = edges[0];
        let m = c.edge_transporter(e, e);
        assert_eq!(c.apply_matrix(&m, e.0), e.0);
        assert_eq!(c.apply_matrix(&m, e.1), e.1);
    }

    #[test]
    fn covering_map_examples() {
        let r = zmod(5);
        let pm = UnitSubgroup::pm_one(&r);
        assert_eq!(
            covering_map(&r, &pm, &(r.int(4), r.int(0))),
            (r.int(1), r.int(0))
        );
        let orbit = covering_map(&r, &pm, &(r.int(2), r.int(3)));
        assert_eq!(orbit, covering_map(&r, &pm, &(r.int(3), r.int(2))));
    }

    #[test]
    fn covering_fibers_have_unit_group_size() {
        let r = zmod(5);
        for units in [UnitSubgroup::pm_one(&r), UnitSubgroup::full(&r).unwrap()] {
            let e = build_complex(&r, &UnitSubgroup::trivial(&r)).unwrap();
            let f = build_complex(&r, &units).unwrap();
            let mut fiber: HashMap<usize, usize> = HashMap::new();
            for v in e.vertices() {
                let id = f.vertex_id(v).unwrap();
                *fiber.entry(id).or_insert(0) += 1;
            }
            assert_eq!(fiber.len(), f.vertex_count());
            assert!(fiber.values().all(|&k| k == units.len()));
        }
    }

    #[test]
    fn covering_map_is_equivariant() {
        let r = zmod(7);
        let pm = UnitSubgroup::pm_one(&r);
        let e = build_complex(&r, &UnitSubgroup::trivial(&r)).unwrap();
        let f = build_complex(&r, &pm).unwrap();
        let m = SL2Matrix::new(&r, r.int(2), r.int(1), r.int(3), r.int(2)).unwrap();
        for i in 0..e.vertex_count() {
            let down_then_act = f.apply_matrix(&m, f.vertex_id(e.vertex(i)).unwrap());
            let act_then_down = f.vertex_id(&m.apply_pair(e.vertex(i))).unwrap();
            assert_eq!(down_then_act, act_then_down);
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(e_complex(2).diameter().unwrap(), 1);
        assert_eq!(e_complex(4).diameter().unwrap(), 2);
        assert_eq!(e_complex(5).diameter().unwrap(), 3);
        let z2xz3 = make_ring(&RingDescriptor::Product {
            factors: vec![RingDescriptor::Zmod { n: 2 }, RingDescriptor::Zmod { n: 3 }],
        })
        .unwrap();
        let f = build_complex(&z2xz3, &UnitSubgroup::pm_one(&z2xz3)).unwrap();
        assert_eq!(f.diameter().unwrap(), 2);
    }

    #[test]
    fn surface_examples() {
        assert!(f_complex(6).is_surface_complex().unwrap());
        let f4ring = f4();
        let c = build_complex(&f4ring, &UnitSubgroup::pm_one(&f4ring)).unwrap();
        assert!(!c.is_surface_complex().unwrap());
        let z2xz2 = make_ring(&RingDescriptor::Product {
            factors: vec![RingDescriptor::Zmod { n: 2 }, RingDescriptor::Zmod { n: 2 }],
        })
        .unwrap();
        let c = build_complex(&z2xz2, &UnitSubgroup::pm_one(&z2xz2)).unwrap();
        assert!(!c.is_surface_complex().unwrap());
        // Faces undefined without -1 in the units (char != 2).
        let c = e_complex(5);
        assert_eq!(c.is_surface_complex(), Err(ComplexError::FacesUndefined));
    }

    #[test]
    fn genus_and_cusps_values() {
        assert_eq!(genus_and_cusps(2), (0, 3));
        assert_eq!(genus_and_cusps(5), (0, 12));
        assert_eq!(genus_and_cusps(6), (1, 12));
        // Cusps match vertex counts of the built complexes.
        for n in 2..=12 {
            let (_, cusps) = genus_and_cusps(n);
            assert_eq!(f_complex(n).vertex_count() as u64, cusps, "N = {n}");
        }
    }

    #[test]
    fn export_formats() {
        let c = f_complex(2);
        let off = c.export(ExportFormat::Off).unwrap();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("3 1 3"));

        let e3 = e_complex(3);
        let dot = e3.export(ExportFormat::Dot).unwrap();
        assert!(dot.starts_with("digraph"));
        assert_eq!(e3.vertex_count(), 8);

        let json_out = e3.export(ExportFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json_out).unwrap();
        assert_eq!(v["faces"].as_array().unwrap().len(), 0);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 8);

        // Exports are deterministic.
        assert_eq!(json_out, e3.export(ExportFormat::Json).unwrap());
        assert!(e3.export(ExportFormat::Off).is_err());
    }

    #[test]
    fn vertex_cap() {
        let r = zmod(13);
        let err = build_complex_with_cap(&r, &UnitSubgroup::trivial(&r), 10).unwrap_err();
        assert!(matches!(err, ComplexError::RingTooLarge(10)));
    }
}
