//! Exact arithmetic in finite commutative rings with identity, plus the
//! integers (used only by the lifting pipeline).
//!
//! Supported rings: `Z/NZ`, quotients `(Z/NZ)[x]/(m(x))` with unit leading
//! coefficient (covers the finite fields `GF(p^k)` when `m` is irreducible,
//! and rings such as `Z[i]/NZ[i]` via `x^2+1`), finite direct products, and
//! `Z` itself with arbitrary-precision entries.
//!
//! Elements are stored in canonical form (residues in `[0, N)`, polynomial
//! payloads reduced below the modulus degree, tuples of canonical elements),
//! so they can be hashed, ordered, and used as graph keys. All values are
//! immutable and all operations are pure.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::util::{egcd_i128, gcd_u64, inv_mod_u64};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("element {0} is not a unit")]
    NotAUnit(String),
    #[error("generator {0} is not a unit")]
    NonUnitGenerator(String),
    #[error("operation requires a finite ring")]
    InfiniteRing,
    #[error("element does not belong to the ring: {0}")]
    ForeignElement(String),
    #[error("cannot parse element from {0:?}")]
    ParseElement(String),
}

/// Serializable description of a ring, as accepted by the CLI and config
/// files: `{"type":"zmod","n":5}`, `{"type":"quotient","base":{...},"poly":[1,1,1]}`
/// (coefficients low-to-high), `{"type":"product","factors":[...]}`,
/// `{"type":"integers"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum RingDescriptor {
    Zmod {
        n: u64,
    },
    Quotient {
        base: Box<RingDescriptor>,
        poly: Vec<u64>,
    },
    Product {
        factors: Vec<RingDescriptor>,
    },
    Integers,
}

#[derive(Debug, PartialEq, Eq)]
enum RingRepr {
    /// Integers modulo `n`, `n >= 2`.
    Zmod {
        n: u64,
    },
    /// `(Z/base)[x]` modulo `modulus` (coefficients low-to-high, unit leading
    /// coefficient, degree >= 1). Elements are coefficient vectors of length
    /// `modulus.len() - 1`.
    ///
    /// Irreducibility of the modulus is *not* checked: `GF(q)` correctness is
    /// the caller's responsibility, since rings like `Z[i]/3Z[i]` legitimately
    /// use moduli that are reducible over some bases.
    Quotient {
        base: u64,
        modulus: Vec<u64>,
    },
    Product {
        factors: Vec<Ring>,
    },
    Integers,
}

/// Handle to a ring; cheap to clone, structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring(Arc<RingRepr>);

/// Canonical element payload. Ordering and hashing operate on the canonical
/// form, so two elements are equal iff their payloads are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Residue(u64),
    Poly(Vec<u64>),
    Tuple(Vec<Elem>),
    Int(BigInt),
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.name())
    }
}

/// Builds a ring from a descriptor, validating its invariants.
pub fn make_ring(descriptor: &RingDescriptor) -> Result<Ring, RingError> {
    match descriptor {
        RingDescriptor::Zmod { n } => {
            if *n < 2 {
                return Err(RingError::InvalidDescriptor(format!(
                    "zmod modulus must be >= 2, got {n}"
                )));
            }
            if *n > (1 << 31) {
                return Err(RingError::InvalidDescriptor(format!(
                    "zmod modulus too large: {n}"
                )));
            }
            Ok(Ring(Arc::new(RingRepr::Zmod { n: *n })))
        }
        RingDescriptor::Quotient { base, poly } => {
            let base_n = match base.as_ref() {
                RingDescriptor::Zmod { n } => *n,
                other => {
                    return Err(RingError::InvalidDescriptor(format!(
                        "quotient base must be a zmod ring, got {other:?}"
                    )))
                }
            };
            if base_n < 2 {
                return Err(RingError::InvalidDescriptor(
                    "quotient base modulus must be >= 2".into(),
                ));
            }
            let mut modulus: Vec<u64> = poly.iter().map(|c| c % base_n).collect();
            while matches!(modulus.last(), Some(0)) {
                modulus.pop();
            }
            if modulus.len() < 2 {
                return Err(RingError::InvalidDescriptor(
                    "quotient modulus must have degree >= 1".into(),
                ));
            }
            let lead = *modulus.last().unwrap();
            if inv_mod_u64(lead, base_n).is_none() {
                return Err(RingError::InvalidDescriptor(format!(
                    "quotient modulus must have a unit leading coefficient, got {lead} mod {base_n}"
                )));
            }
            Ok(Ring(Arc::new(RingRepr::Quotient {
                base: base_n,
                modulus,
            })))
        }
        RingDescriptor::Product { factors } => {
            if factors.len() < 2 {
                return Err(RingError::InvalidDescriptor(
                    "product needs at least two factors".into(),
                ));
            }
            let factors = factors
                .iter()
                .map(|d| {
                    if matches!(d, RingDescriptor::Integers) {
                        Err(RingError::InvalidDescriptor(
                            "product factors must be finite rings".into(),
                        ))
                    } else {
                        make_ring(d)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Ring(Arc::new(RingRepr::Product { factors })))
        }
        RingDescriptor::Integers => Ok(Ring(Arc::new(RingRepr::Integers))),
    }
}

impl Ring {
    pub fn integers() -> Ring {
        Ring(Arc::new(RingRepr::Integers))
    }

    pub fn zmod(n: u64) -> Ring {
        make_ring(&RingDescriptor::Zmod { n }).expect("valid modulus")
    }

    pub fn descriptor(&self) -> RingDescriptor {
        match &*self.0 {
            RingRepr::Zmod { n } => RingDescriptor::Zmod { n: *n },
            RingRepr::Quotient { base, modulus } => RingDescriptor::Quotient {
                base: Box::new(RingDescriptor::Zmod { n: *base }),
                poly: modulus.clone(),
            },
            RingRepr::Product { factors } => RingDescriptor::Product {
                factors: factors.iter().map(|r| r.descriptor()).collect(),
            },
            RingRepr::Integers => RingDescriptor::Integers,
        }
    }

    pub fn name(&self) -> String {
        match &*self.0 {
            RingRepr::Zmod { n } => format!("Z/{n}Z"),
            RingRepr::Quotient { base, modulus } => {
                format!("(Z/{base}Z)[x]/({})", poly_to_string(modulus))
            }
            RingRepr::Product { factors } => factors
                .iter()
                .map(|f| f.name())
                .collect::<Vec<_>>()
                .join(" x "),
            RingRepr::Integers => "Z".into(),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(&*self.0, RingRepr::Integers)
    }

    /// Number of elements, `None` for the integers.
    pub fn size(&self) -> Option<u64> {
        match &*self.0 {
            RingRepr::Zmod { n } => Some(*n),
            RingRepr::Quotient { base, modulus } => {
                let deg = (modulus.len() - 1) as u32;
                base.checked_pow(deg)
            }
            RingRepr::Product { factors } => factors
                .iter()
                .try_fold(1u64, |acc, f| f.size().and_then(|s| acc.checked_mul(s))),
            RingRepr::Integers => None,
        }
    }

    /// Additive order of 1 (0 for the integers).
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            RingRepr::Zmod { n } => *n,
            RingRepr::Quotient { base, .. } => *base,
            RingRepr::Product { factors } => factors
                .iter()
                .map(|f| f.characteristic())
                .fold(1, |a, b| a / gcd_u64(a, b) * b),
            RingRepr::Integers => 0,
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            RingRepr::Zmod { .. } => Elem::Residue(0),
            RingRepr::Quotient { modulus, .. } => Elem::Poly(vec![0; modulus.len() - 1]),
            RingRepr::Product { factors } => {
                Elem::Tuple(factors.iter().map(|f| f.zero()).collect())
            }
            RingRepr::Integers => Elem::Int(BigInt::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        match &*self.0 {
            RingRepr::Zmod { n } => Elem::Residue(1 % n),
            RingRepr::Quotient { base, modulus } => {
                let mut v = vec![0; modulus.len() - 1];
                v[0] = 1 % base;
                Elem::Poly(v)
            }
            RingRepr::Product { factors } => Elem::Tuple(factors.iter().map(|f| f.one()).collect()),
            RingRepr::Integers => Elem::Int(BigInt::one()),
        }
    }

    pub fn minus_one(&self) -> Elem {
        self.neg(&self.one())
    }

    /// Embeds a small integer (the image of `k` under `Z -> R`).
    pub fn int(&self, k: i64) -> Elem {
        match &*self.0 {
            RingRepr::Zmod { n } => Elem::Residue((k.rem_euclid(*n as i64)) as u64),
            RingRepr::Quotient { base, modulus } => {
                let mut v = vec![0; modulus.len() - 1];
                v[0] = k.rem_euclid(*base as i64) as u64;
                Elem::Poly(v)
            }
            RingRepr::Product { factors } => {
                Elem::Tuple(factors.iter().map(|f| f.int(k)).collect())
            }
            RingRepr::Integers => Elem::Int(BigInt::from(k)),
        }
    }

    /// True if `x` is a canonical element of this ring.
    pub fn contains(&self, x: &Elem) -> bool {
        match (&*self.0, x) {
            (RingRepr::Zmod { n }, Elem::Residue(r)) => r < n,
            (RingRepr::Quotient { base, modulus }, Elem::Poly(v)) => {
                v.len() == modulus.len() - 1 && v.iter().all(|c| c < base)
            }
            (RingRepr::Product { factors }, Elem::Tuple(t)) => {
                t.len() == factors.len() && factors.iter().zip(t).all(|(f, c)| f.contains(c))
            }
            (RingRepr::Integers, Elem::Int(_)) => true,
            _ => false,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (RingRepr::Zmod { n }, Elem::Residue(x), Elem::Residue(y)) => {
                Elem::Residue((x + y) % n)
            }
            (RingRepr::Quotient { base, .. }, Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(x.iter().zip(y).map(|(p, q)| (p + q) % base).collect())
            }
            (RingRepr::Product { factors }, Elem::Tuple(x), Elem::Tuple(y)) => Elem::Tuple(
                factors
                    .iter()
                    .zip(x.iter().zip(y))
                    .map(|(f, (p, q))| f.add(p, q))
                    .collect(),
            ),
            (RingRepr::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            _ => panic!("element does not belong to {}", self.name()),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (RingRepr::Zmod { n }, Elem::Residue(x)) => Elem::Residue((n - x) % n),
            (RingRepr::Quotient { base, .. }, Elem::Poly(x)) => {
                Elem::Poly(x.iter().map(|c| (base - c) % base).collect())
            }
            (RingRepr::Product { factors }, Elem::Tuple(x)) => {
                Elem::Tuple(factors.iter().zip(x).map(|(f, c)| f.neg(c)).collect())
            }
            (RingRepr::Integers, Elem::Int(x)) => Elem::Int(-x),
            _ => panic!("element does not belong to {}", self.name()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (RingRepr::Zmod { n }, Elem::Residue(x), Elem::Residue(y)) => {
                Elem::Residue((x * y) % n)
            }
            (RingRepr::Quotient { base, modulus }, Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(poly_mulmod(x, y, modulus, *base))
            }
            (RingRepr::Product { factors }, Elem::Tuple(x), Elem::Tuple(y)) => Elem::Tuple(
                factors
                    .iter()
                    .zip(x.iter().zip(y))
                    .map(|(f, (p, q))| f.mul(p, q))
                    .collect(),
            ),
            (RingRepr::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            _ => panic!("element does not belong to {}", self.name()),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    /// All elements in canonical (sorted) order. Errors on the integers.
    pub fn elements(&self) -> Result<Vec<Elem>, RingError> {
        let mut out = match &*self.0 {
            RingRepr::Zmod { n } => (0..*n).map(Elem::Residue).collect::<Vec<_>>(),
            RingRepr::Quotient { base, modulus } => {
                let deg = modulus.len() - 1;
                let mut out = Vec::new();
                let mut v = vec![0u64; deg];
                loop {
                    out.push(Elem::Poly(v.clone()));
                    let mut i = 0;
                    loop {
                        if i == deg {
                            return Ok(sorted(out));
                        }
                        v[i] += 1;
                        if v[i] < *base {
                            break;
                        }
                        v[i] = 0;
                        i += 1;
                    }
                }
            }
            RingRepr::Product { factors } => {
                let parts = factors
                    .iter()
                    .map(|f| f.elements())
                    .collect::<Result<Vec<_>, _>>()?;
                let mut out = vec![Vec::new()];
                for part in &parts {
                    let mut next = Vec::with_capacity(out.len() * part.len());
                    for prefix in &out {
                        for e in part {
                            let mut p = prefix.clone();
                            p.push(e.clone());
                            next.push(p);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Elem::Tuple).collect()
            }
            RingRepr::Integers => return Err(RingError::InfiniteRing),
        };
        out.sort();
        Ok(out)
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        match (&*self.0, a) {
            (RingRepr::Zmod { n }, Elem::Residue(x)) => gcd_u64(*x, *n) == 1,
            (RingRepr::Product { factors }, Elem::Tuple(t)) => {
                factors.iter().zip(t).all(|(f, c)| f.is_unit(c))
            }
            (RingRepr::Integers, Elem::Int(x)) => x.abs() == BigInt::one(),
            (RingRepr::Quotient { .. }, _) => self.inverse_search(a).is_some(),
            _ => panic!("element does not belong to {}", self.name()),
        }
    }

    pub fn inverse(&self, a: &Elem) -> Result<Elem, RingError> {
        match (&*self.0, a) {
            (RingRepr::Zmod { n }, Elem::Residue(x)) => inv_mod_u64(*x, *n)
                .map(Elem::Residue)
                .ok_or_else(|| RingError::NotAUnit(self.format_elem(a))),
            (RingRepr::Product { factors }, Elem::Tuple(t)) => {
                let inv = factors
                    .iter()
                    .zip(t)
                    .map(|(f, c)| f.inverse(c))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| RingError::NotAUnit(self.format_elem(a)))?;
                Ok(Elem::Tuple(inv))
            }
            (RingRepr::Integers, Elem::Int(x)) => {
                if x.abs() == BigInt::one() {
                    Ok(a.clone())
                } else {
                    Err(RingError::NotAUnit(self.format_elem(a)))
                }
            }
            (RingRepr::Quotient { .. }, _) => self
                .inverse_search(a)
                .ok_or_else(|| RingError::NotAUnit(self.format_elem(a))),
            _ => Err(RingError::ForeignElement(format!("{a:?}"))),
        }
    }

    fn inverse_search(&self, a: &Elem) -> Option<Elem> {
        let one = self.one();
        self.elements()
            .ok()?
            .into_iter()
            .find(|y| self.mul(a, y) == one)
    }

    /// Finite ring in which every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        match self.elements() {
            Ok(elems) => elems.iter().all(|e| self.is_zero(e) || self.is_unit(e)),
            Err(_) => false,
        }
    }

    /// Decides whether `(a, b)` is a unimodular pair (`aR + bR = R`) and, if
    /// so, produces a witness `(x, y)` with `ax + by = 1`.
    pub fn unimodular_witness(&self, a: &Elem, b: &Elem) -> Option<(Elem, Elem)> {
        match (&*self.0, a, b) {
            (RingRepr::Zmod { n }, Elem::Residue(p), Elem::Residue(q)) => {
                let (g, u, v) = egcd_i128(*p as i128, *q as i128);
                // g = gcd(a, b); the pair is unimodular iff gcd(g, n) = 1.
                let g_mod = (g % *n as i128) as u64;
                let s = inv_mod_u64(g_mod % n, *n)?;
                let n_i = *n as i128;
                let x = (((u % n_i + n_i) % n_i) as u64 * s) % n;
                let y = (((v % n_i + n_i) % n_i) as u64 * s) % n;
                Some((Elem::Residue(x), Elem::Residue(y)))
            }
            (RingRepr::Product { factors }, Elem::Tuple(pa), Elem::Tuple(pb)) => {
                let mut xs = Vec::with_capacity(factors.len());
                let mut ys = Vec::with_capacity(factors.len());
                for (f, (ca, cb)) in factors.iter().zip(pa.iter().zip(pb)) {
                    let (x, y) = f.unimodular_witness(ca, cb)?;
                    xs.push(x);
                    ys.push(y);
                }
                Some((Elem::Tuple(xs), Elem::Tuple(ys)))
            }
            (RingRepr::Integers, Elem::Int(p), Elem::Int(q)) => {
                let g = gcd_bigint(p, q);
                if g != BigInt::one() {
                    return None;
                }
                let (x, y) = egcd_bigint(p, q);
                Some((Elem::Int(x), Elem::Int(y)))
            }
            (RingRepr::Quotient { .. }, _, _) => {
                // Exhaustive: tabulate b*y once, then scan x.
                let elems = self.elements().ok()?;
                let one = self.one();
                let mut by: HashMap<Elem, Elem> = HashMap::new();
                for y in &elems {
                    by.entry(self.mul(b, y)).or_insert_with(|| y.clone());
                }
                for x in &elems {
                    let need = self.sub(&one, &self.mul(a, x));
                    if let Some(y) = by.get(&need) {
                        return Some((x.clone(), y.clone()));
                    }
                }
                None
            }
            _ => panic!("elements do not belong to {}", self.name()),
        }
    }

    pub fn is_unimodular(&self, a: &Elem, b: &Elem) -> bool {
        self.unimodular_witness(a, b).is_some()
    }

    pub fn format_elem(&self, e: &Elem) -> String {
        match (&*self.0, e) {
            (RingRepr::Zmod { .. }, Elem::Residue(r)) => r.to_string(),
            (RingRepr::Quotient { .. }, Elem::Poly(v)) => poly_to_string(v),
            (RingRepr::Product { factors }, Elem::Tuple(t)) => {
                let inner = factors
                    .iter()
                    .zip(t)
                    .map(|(f, c)| f.format_elem(c))
                    .collect::<Vec<_>>()
                    .join(",");
                format!("({inner})")
            }
            (RingRepr::Integers, Elem::Int(x)) => x.to_string(),
            _ => panic!("element does not belong to {}", self.name()),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem, RingError> {
        let s = s.trim();
        let err = || RingError::ParseElement(s.to_string());
        match &*self.0 {
            RingRepr::Zmod { n } => {
                let v: i64 = s.parse().map_err(|_| err())?;
                Ok(Elem::Residue(v.rem_euclid(*n as i64) as u64))
            }
            RingRepr::Quotient { base, modulus } => {
                let coeffs = parse_poly(s, *base).ok_or_else(err)?;
                Ok(Elem::Poly(poly_reduce(&coeffs, modulus, *base)))
            }
            RingRepr::Product { factors } => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(err)?;
                let parts = split_top_level(inner, ',');
                if parts.len() != factors.len() {
                    return Err(err());
                }
                let comps = factors
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.parse_elem(p))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Elem::Tuple(comps))
            }
            RingRepr::Integers => {
                let v: BigInt = s.parse().map_err(|_| err())?;
                Ok(Elem::Int(v))
            }
        }
    }
}

/// Splits `s` at `sep` occurrences that are not nested inside parentheses.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort();
    v
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// `(x, y)` with `a*x + b*y = gcd(a, b)`.
pub fn egcd_bigint(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    if b.is_zero() {
        if a.is_negative() {
            (BigInt::from(-1), BigInt::zero())
        } else {
            (BigInt::one(), BigInt::zero())
        }
    } else {
        let (x, y) = egcd_bigint(b, &(a % b));
        (y.clone(), x - (a / b) * y)
    }
}

fn poly_to_string(v: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn parse_poly(s: &str, base: u64) -> Option<Vec<u64>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut coeffs: Vec<u64> = Vec::new();
    for term in s.split('+') {
        let (coeff, power) = if let Some(rest) = term.strip_suffix('x') {
            let c = if rest.is_empty() {
                1
            } else {
                rest.parse().ok()?
            };
            (c, 1usize)
        } else if let Some(idx) = term.find("x^") {
            let c: u64 = if idx == 0 {
                1
            } else {
                term[..idx].parse().ok()?
            };
            let k: usize = term[idx + 2..].parse().ok()?;
            (c, k)
        } else {
            (term.parse().ok()?, 0usize)
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = (coeffs[power] + coeff) % base;
    }
    Some(coeffs)
}

/// Remainder of `v` modulo `modulus` over `Z/base`, padded to degree-many
/// coefficients. The leading coefficient of `modulus` is a unit by invariant.
fn poly_reduce(v: &[u64], modulus: &[u64], base: u64) -> Vec<u64> {
    let deg = modulus.len() - 1;
    let lead_inv = inv_mod_u64(modulus[deg], base).expect("unit leading coefficient");
    let mut work: Vec<u64> = v.iter().map(|c| c % base).collect();
    while work.len() > deg {
        let k = work.len() - 1;
        let factor = (work[k] * lead_inv) % base;
        if factor != 0 {
            for (i, m_i) in modulus.iter().enumerate() {
                let idx = k - deg + i;
                let sub = (factor * m_i) % base;
                work[idx] = (work[idx] + base - sub) % base;
            }
        }
        work.pop();
    }
    work.resize(deg, 0);
    work
}

fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], base: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![0; modulus.len() - 1];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % base;
        }
    }
    poly_reduce(&prod, modulus, base)
}

/// A subgroup of the unit group `R^x`, stored as a sorted element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSubgroup {
    ring: Ring,
    elems: Vec<Elem>,
}

impl UnitSubgroup {
    /// `{1}`.
    pub fn trivial(ring: &Ring) -> UnitSubgroup {
        UnitSubgroup {
            ring: ring.clone(),
            elems: vec![ring.one()],
        }
    }

    /// `{1, -1}` (collapses to `{1}` in characteristic 2).
    pub fn pm_one(ring: &Ring) -> UnitSubgroup {
        let mut elems = vec![ring.one(), ring.minus_one()];
        elems.sort();
        elems.dedup();
        UnitSubgroup {
            ring: ring.clone(),
            elems,
        }
    }

    /// The full unit group `R^x` of a finite ring.
    pub fn full(ring: &Ring) -> Result<UnitSubgroup, RingError> {
        if !ring.is_finite() {
            // Units of Z are just {1, -1}; no enumeration needed.
            return Ok(UnitSubgroup::pm_one(ring));
        }
        let elems = ring
            .elements()?
            .into_iter()
            .filter(|e| ring.is_unit(e))
            .collect();
        Ok(UnitSubgroup {
            ring: ring.clone(),
            elems,
        })
    }

    /// Closure of `generators` under multiplication and inverse, joined with
    /// `{1}`.
    pub fn generated(ring: &Ring, generators: &[Elem]) -> Result<UnitSubgroup, RingError> {
        for g in generators {
            if !ring.is_unit(g) {
                return Err(RingError::NonUnitGenerator(ring.format_elem(g)));
            }
        }
        let mut elems = vec![ring.one()];
        let mut frontier: Vec<Elem> = generators.to_vec();
        // Inverses come for free in a finite group; for Z the only unit
        // generators are +-1, which are self-inverse.
        while let Some(g) = frontier.pop() {
            if elems.contains(&g) {
                continue;
            }
            let products: Vec<Elem> = elems.iter().map(|e| ring.mul(e, &g)).collect();
            elems.push(g);
            for p in products {
                if !elems.contains(&p) {
                    frontier.push(p);
                }
            }
        }
        elems.sort();
        elems.dedup();
        Ok(UnitSubgroup {
            ring: ring.clone(),
            elems,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: &Elem) -> bool {
        self.elems.binary_search(e).is_ok()
    }

    pub fn has_minus_one(&self) -> bool {
        self.contains(&self.ring.minus_one())
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }
}
