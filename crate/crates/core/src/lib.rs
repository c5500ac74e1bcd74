//! Farey complexes of finite commutative rings, the path/frieze/SL2-tiling
//! correspondences they carry, and lifting of friezes and tilings from
//! `Z/NZ` to `Z`.
//!
//! The complex of a ring `R` with unit group `U` has the `U`-orbits of
//! unimodular pairs as vertices and a directed edge `a/b -> c/d` whenever
//! `ad - bc` lies in `U`. Paths in these complexes classify tame friezes and
//! SL2-tilings: a pair of twisted paths generates a tiling through
//! `m_{i,j} = a_i d_j - b_i c_j`, and a single twisted path of length `n`
//! generates a width-`n` semiregular frieze. On top of that correspondence
//! sit the enumeration formulas over finite fields and the lifting theory:
//! every tame tiling over `Z/NZ` lifts to a positive integer tiling, while a
//! frieze lifts exactly when its path is a strongly contractible closed path.
//!
//! Everything is exact: residue and polynomial arithmetic for finite rings,
//! arbitrary-precision integers on the `Z` side. All values are immutable
//! after construction and all operations are pure, so types can be shared
//! freely across threads.

pub mod complex;
pub mod frieze;
pub mod lifting;
pub mod paths;
pub mod ring;
pub mod selftest;
pub mod util;

pub use complex::{build_complex, genus_and_cusps, FareyComplex, SL2Matrix};
pub use frieze::{frieze_from_path, tiling_from_paths, Frieze, TilingWindow};
pub use lifting::{is_strongly_contractible, lift_frieze, Congruence, LiftOutcome};
pub use paths::{make_twisted, Path, TwistedPath};
pub use ring::{make_ring, Elem, Ring, RingDescriptor, RingError, UnitSubgroup};
