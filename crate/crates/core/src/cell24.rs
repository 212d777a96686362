//! Combinatorics of the ideal hyperbolic 24-cell.
//!
//! Sides are the 24 sign vectors in {−1, 0, +1}⁴ with exactly two nonzero
//! entries. They are indexed 0–23: first by the support pair, in the order
//! (1,2) (1,3) (2,3) (1,4) (2,4) (3,4), then by the nonzero signs in the
//! order (+,+) (+,−) (−,+) (−,−). The derived `Ord` on [`SideVector`] is
//! this order.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{QSqrt2, Vec4E};

pub const SIDE_COUNT: usize = 24;
pub const GROUP_COUNT: usize = 6;

/// Support positions of each side group, in group order.
pub const GROUP_SUPPORT: [(usize, usize); GROUP_COUNT] =
    [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];

const SIGN_ORDER: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("{0:?} is not a side sign vector")]
    NotASide([i8; 4]),
    #[error("sides {0} and {1} do not meet in a ridge")]
    NotARidge(SideVector, SideVector),
    #[error("sides {0}, {1}, {2} do not meet in a codimension-3 face")]
    NotACodim3Face(SideVector, SideVector, SideVector),
}

/// One of the 24 sides, identified by the center of its bounding sphere.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SideVector(u8);

impl SideVector {
    pub fn all() -> impl Iterator<Item = SideVector> {
        (0..SIDE_COUNT as u8).map(SideVector)
    }

    pub fn from_index(i: usize) -> Option<SideVector> {
        (i < SIDE_COUNT).then_some(SideVector(i as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_signs(signs: [i8; 4]) -> Result<SideVector, CellError> {
        let nonzero: Vec<usize> = (0..4).filter(|&p| signs[p] != 0).collect();
        if nonzero.len() != 2 || signs.iter().any(|s| s.abs() > 1) {
            return Err(CellError::NotASide(signs));
        }
        let pair = (nonzero[0], nonzero[1]);
        let group = GROUP_SUPPORT.iter().position(|&g| g == pair).unwrap();
        let order = SIGN_ORDER
            .iter()
            .position(|&s| s == (signs[pair.0], signs[pair.1]))
            .unwrap();
        Ok(SideVector((group * 4 + order) as u8))
    }

    pub fn signs(self) -> [i8; 4] {
        let (p, q) = GROUP_SUPPORT[self.group()];
        let (sp, sq) = SIGN_ORDER[self.index() % 4];
        let mut v = [0i8; 4];
        v[p] = sp;
        v[q] = sq;
        v
    }

    pub fn group(self) -> usize {
        self.index() / 4
    }

    pub fn support(self) -> (usize, usize) {
        GROUP_SUPPORT[self.group()]
    }

    /// Two distinct sides meet iff they share exactly one nonzero position
    /// with equal sign and their remaining nonzero positions differ.
    pub fn intersects(self, other: SideVector) -> bool {
        if self == other {
            return false;
        }
        let s = self.signs();
        let t = other.signs();
        let shared: Vec<usize> = (0..4).filter(|&p| s[p] != 0 && s[p] == t[p]).collect();
        if shared.len() != 1 {
            return false;
        }
        let p = shared[0];
        let rest_s = (0..4).find(|&q| q != p && s[q] != 0);
        let rest_t = (0..4).find(|&q| q != p && t[q] != 0);
        rest_s != rest_t
    }

    /// Componentwise product with a diagonal ±1 matrix.
    pub fn apply_diag(self, diag: [i8; 4]) -> SideVector {
        let s = self.signs();
        SideVector::from_signs(std::array::from_fn(|i| s[i] * diag[i])).unwrap()
    }

    pub fn center(self) -> Vec4E {
        Vec4E::from_integers(self.signs().map(i64::from))
    }
}

pub fn sides_intersect(s: SideVector, t: SideVector) -> bool {
    s.intersects(t)
}

fn fmt_sign(x: i8) -> &'static str {
    match x {
        1 => "+1",
        -1 => "-1",
        _ => "0",
    }
}

impl fmt::Display for SideVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.signs();
        write!(
            f,
            "S({},{},{},{})",
            fmt_sign(s[0]),
            fmt_sign(s[1]),
            fmt_sign(s[2]),
            fmt_sign(s[3])
        )
    }
}

impl Serialize for SideVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.signs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SideVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let signs = <[i8; 4]>::deserialize(deserializer)?;
        SideVector::from_signs(signs).map_err(serde::de::Error::custom)
    }
}

/// An ideal vertex on the sphere at infinity.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum IdealVertex {
    /// `±e_position`
    Axis { position: usize, sign: i8 },
    /// `(±½, ±½, ±½, ±½)`
    Half([i8; 4]),
}

impl IdealVertex {
    pub fn all() -> Vec<IdealVertex> {
        let mut out = Vec::with_capacity(24);
        for position in 0..4 {
            for sign in [1, -1] {
                out.push(IdealVertex::Axis { position, sign });
            }
        }
        for bits in 0..16u8 {
            out.push(IdealVertex::Half(std::array::from_fn(|i| {
                if bits >> (3 - i) & 1 == 0 {
                    1
                } else {
                    -1
                }
            })));
        }
        out
    }

    pub fn coords(&self) -> Vec4E {
        match *self {
            IdealVertex::Axis { position, sign } => {
                let mut v = [0i64; 4];
                v[position] = sign.into();
                Vec4E::from_integers(v)
            }
            IdealVertex::Half(signs) => {
                crate::exact::ExactVec(signs.map(|s| QSqrt2::from_parts(s.into(), 2, 0, 1)))
            }
        }
    }

    pub fn lies_on(&self, side: SideVector) -> bool {
        let s = side.signs();
        match *self {
            IdealVertex::Axis { position, sign } => s[position] == sign,
            IdealVertex::Half(v) => (0..4).all(|p| s[p] == 0 || s[p] == v[p]),
        }
    }
}

pub fn vertex_on_side(v: &IdealVertex, s: SideVector) -> bool {
    v.lies_on(s)
}

/// A codimension-2 face, stored as a sorted pair of sides.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Ridge(SideVector, SideVector);

impl Ridge {
    pub fn new(s: SideVector, t: SideVector) -> Result<Ridge, CellError> {
        if !s.intersects(t) {
            return Err(CellError::NotARidge(s, t));
        }
        Ok(if s < t { Ridge(s, t) } else { Ridge(t, s) })
    }

    pub fn sides(&self) -> [SideVector; 2] {
        [self.0, self.1]
    }

    pub fn contains(&self, s: SideVector) -> bool {
        self.0 == s || self.1 == s
    }

    /// The side other than `s`; `s` must belong to the ridge.
    pub fn other(&self, s: SideVector) -> SideVector {
        if self.0 == s {
            self.1
        } else {
            self.0
        }
    }
}

/// A codimension-3 face, stored as a sorted triple of sides.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Codim3Face([SideVector; 3]);

impl Codim3Face {
    pub fn new(s: SideVector, t: SideVector, u: SideVector) -> Result<Codim3Face, CellError> {
        if !(s.intersects(t) && s.intersects(u) && t.intersects(u)) {
            return Err(CellError::NotACodim3Face(s, t, u));
        }
        let mut v = [s, t, u];
        v.sort();
        Ok(Codim3Face(v))
    }

    pub fn sides(&self) -> [SideVector; 3] {
        self.0
    }

    pub fn ridges(&self) -> [Ridge; 3] {
        let [a, b, c] = self.0;
        [Ridge(a, b), Ridge(a, c), Ridge(b, c)]
    }
}

/// All 96 ridges in sorted order.
pub fn all_ridges() -> &'static [Ridge] {
    static RIDGES: OnceLock<Vec<Ridge>> = OnceLock::new();
    RIDGES.get_or_init(|| {
        let mut out = Vec::new();
        for s in SideVector::all() {
            for t in SideVector::all().filter(|&t| t > s) {
                if let Ok(r) = Ridge::new(s, t) {
                    out.push(r);
                }
            }
        }
        out
    })
}

/// All 96 codimension-3 faces in sorted order.
pub fn all_codim3_faces() -> &'static [Codim3Face] {
    static FACES: OnceLock<Vec<Codim3Face>> = OnceLock::new();
    FACES.get_or_init(|| {
        let mut out = Vec::new();
        for &Ridge(s, t) in all_ridges() {
            for u in SideVector::all().filter(|&u| u > t) {
                if let Ok(f) = Codim3Face::new(s, t, u) {
                    out.push(f);
                }
            }
        }
        out
    })
}
