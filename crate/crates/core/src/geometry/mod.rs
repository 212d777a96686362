//! Placement of the dual diagram in R³ ∪ {∞}.
//!
//! Each side of the 24-cell becomes a ball centred at the image of its
//! radially projected centre under the Möbius map φ: S³ → R³ ∪ {∞}. Ridge
//! cycles are drawn as straight chords between the centres of the balls of
//! their two sides.

mod svg;

pub use svg::{render_svg, write_svg, RenderOptions, PALETTE};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cell24::{SideVector, SIDE_COUNT};
use crate::exact::{QSqrt2, Vec3E, Vec4E};
use crate::handles::{self, HandleCycle, HandleError};
use crate::pairing::{PairingScheme, SideLabel};

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("segment from {from} to {to} has coincident endpoints")]
    DegenerateSegment { from: SideVector, to: SideVector },
    #[error("radius must be positive, got {0}")]
    BadRadius(String),
    #[error(transparent)]
    Handles(#[from] HandleError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramPoint {
    Finite(Vec3E),
    Infinity,
}

impl DiagramPoint {
    pub fn finite(&self) -> Option<&Vec3E> {
        match self {
            DiagramPoint::Finite(v) => Some(v),
            DiagramPoint::Infinity => None,
        }
    }
}

impl fmt::Display for DiagramPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramPoint::Finite(v) => write!(f, "{v}"),
            DiagramPoint::Infinity => write!(f, "∞"),
        }
    }
}

/// The side centre pushed out to S³: `s/|s|` with `|s|² = 2`.
pub fn radial_project(s: SideVector) -> Vec4E {
    s.center().scale(&QSqrt2::inv_sqrt2())
}

/// `φ(x) = e₄ + 2(x − e₄)/|x − e₄|²`, with the vanishing last coordinate
/// dropped. The pole `e₄` goes to ∞.
pub fn mobius_phi(x: &Vec4E) -> DiagramPoint {
    let e4 = Vec4E::from_integers([0, 0, 0, 1]);
    let d = x - &e4;
    let n = d.norm_sq();
    if n.is_zero() {
        return DiagramPoint::Infinity;
    }
    let s = QSqrt2::from_integer(2) / n;
    let y = &e4 + &d.scale(&s);
    debug_assert!(y[3].is_zero(), "input off the unit sphere");
    DiagramPoint::Finite(crate::exact::ExactVec([
        y[0].clone(),
        y[1].clone(),
        y[2].clone(),
    ]))
}

/// Centre of the ball of side `s`. Never ∞: no side centre projects to the
/// pole.
pub fn ball_center(s: SideVector) -> Vec3E {
    match mobius_phi(&radial_project(s)) {
        DiagramPoint::Finite(v) => v,
        DiagramPoint::Infinity => unreachable!("side centres avoid the pole"),
    }
}

pub fn default_radius() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(8))
}

/// Parse `p/q` or an integer into a positive rational.
pub fn parse_radius(s: &str) -> Result<BigRational, GeometryError> {
    let bad = || GeometryError::BadRadius(s.to_string());
    let r: BigRational = match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    if !r.is_positive() {
        return Err(bad());
    }
    Ok(r)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ball {
    pub side: SideVector,
    pub label: SideLabel,
    pub center: Vec3E,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BallLayout {
    balls: Vec<Ball>,
    radius: BigRational,
}

impl BallLayout {
    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn ball(&self, s: SideVector) -> &Ball {
        &self.balls[s.index()]
    }

    pub fn center(&self, s: SideVector) -> &Vec3E {
        &self.balls[s.index()].center
    }

    pub fn radius(&self) -> &BigRational {
        &self.radius
    }

    pub fn radius_exact(&self) -> QSqrt2 {
        QSqrt2::from_rational(self.radius.clone())
    }
}

pub fn ball_layout(scheme: &PairingScheme, radius: BigRational) -> BallLayout {
    let balls = SideVector::all()
        .map(|side| Ball {
            side,
            label: scheme.label(side),
            center: ball_center(side),
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(balls.len(), SIDE_COUNT);
    BallLayout { balls, radius }
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaneClass {
    XY,
    XZ,
    YZ,
    Special,
}

impl PlaneClass {
    pub const ALL: [PlaneClass; 4] = [
        PlaneClass::XY,
        PlaneClass::XZ,
        PlaneClass::YZ,
        PlaneClass::Special,
    ];

    /// Index of the coordinate that vanishes on the plane.
    pub fn normal_axis(self) -> Option<usize> {
        match self {
            PlaneClass::XY => Some(2),
            PlaneClass::XZ => Some(1),
            PlaneClass::YZ => Some(0),
            PlaneClass::Special => None,
        }
    }

    /// The two in-plane coordinate indices, in drawing order.
    pub fn axes(self) -> Option<(usize, usize)> {
        match self {
            PlaneClass::XY => Some((0, 1)),
            PlaneClass::XZ => Some((0, 2)),
            PlaneClass::YZ => Some((1, 2)),
            PlaneClass::Special => None,
        }
    }

    pub fn contains(self, p: &Vec3E) -> bool {
        match self.normal_axis() {
            Some(i) => p[i].is_zero(),
            None => true,
        }
    }
}

impl fmt::Display for PlaneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlaneClass::XY => "xy",
            PlaneClass::XZ => "xz",
            PlaneClass::YZ => "yz",
            PlaneClass::Special => "special",
        })
    }
}

impl FromStr for PlaneClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "xy" => Ok(PlaneClass::XY),
            "xz" => Ok(PlaneClass::XZ),
            "yz" => Ok(PlaneClass::YZ),
            "special" => Ok(PlaneClass::Special),
            _ => Err(format!("unknown plane {s:?}")),
        }
    }
}

pub fn classify_plane(cycle: &HandleCycle, layout: &BallLayout) -> PlaneClass {
    let sides = cycle.sides();
    [PlaneClass::XY, PlaneClass::XZ, PlaneClass::YZ]
        .into_iter()
        .find(|p| sides.iter().all(|&s| p.contains(layout.center(s))))
        .unwrap_or(PlaneClass::Special)
}

/// A point on a ball boundary. Exact when the chord length lies in Q(√2),
/// which holds for chords between the twelve balls off the axes but not for
/// chords reaching an axis ball.
#[derive(Clone, PartialEq, Debug)]
pub struct AttachPoint {
    pub approx: [f64; 3],
    pub exact: Option<Vec3E>,
}

/// One chord of a cycle: from the carried side's ball to the acted side's
/// ball, entering the 1-handle at `entry`.
#[derive(Clone, PartialEq, Debug)]
pub struct Segment {
    pub from: SideVector,
    pub to: SideVector,
    pub direction: Vec3E,
    pub length: Option<QSqrt2>,
    pub exit: AttachPoint,
    pub entry: AttachPoint,
}

fn scaled_point(c: &Vec3E, d: &Vec3E, len: Option<&QSqrt2>, t: &QSqrt2) -> AttachPoint {
    let exact = len.map(|l| c + &d.scale(&(t / l)));
    let approx = match &exact {
        Some(p) => p.to_f64(),
        None => {
            let c = c.to_f64();
            let d = d.to_f64();
            let l = d.iter().map(|x| x * x).sum::<f64>().sqrt();
            let t = t.to_f64();
            std::array::from_fn(|i| c[i] + t * d[i] / l)
        }
    };
    AttachPoint { approx, exact }
}

pub fn segment(
    layout: &BallLayout,
    from: SideVector,
    to: SideVector,
) -> Result<Segment, GeometryError> {
    let (a, b) = (layout.center(from), layout.center(to));
    let direction = b - a;
    if direction.is_zero() {
        return Err(GeometryError::DegenerateSegment { from, to });
    }
    let length = direction.norm_sq().sqrt();
    let r = layout.radius_exact();
    Ok(Segment {
        from,
        to,
        exit: scaled_point(a, &direction, length.as_ref(), &r),
        entry: scaled_point(b, &direction, length.as_ref(), &(-&r)),
        direction,
        length,
    })
}

/// Chords of a cycle in traversal order.
pub fn segment_layout(
    cycle: &HandleCycle,
    layout: &BallLayout,
) -> Result<Vec<Segment>, GeometryError> {
    cycle
        .steps()
        .iter()
        .map(|s| segment(layout, s.carried(), s.acted))
        .collect()
}

#[derive(Clone, PartialEq, Debug)]
pub struct SceneCycle {
    pub cycle: HandleCycle,
    pub label: String,
    pub plane: PlaneClass,
    pub color: &'static str,
    pub segments: Vec<Segment>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct DiagramScene {
    pub code: String,
    pub layout: BallLayout,
    pub cycles: Vec<SceneCycle>,
    /// One triangle of ball centres per codimension-3 face.
    pub triangles: Vec<[SideVector; 3]>,
}

impl DiagramScene {
    /// Balls and no cycles.
    pub fn empty(scheme: &PairingScheme, radius: BigRational) -> DiagramScene {
        DiagramScene {
            code: scheme.code().to_string(),
            layout: ball_layout(scheme, radius),
            cycles: Vec::new(),
            triangles: Vec::new(),
        }
    }

    pub fn cycles_in(&self, plane: PlaneClass) -> impl Iterator<Item = &SceneCycle> {
        self.cycles.iter().filter(move |c| c.plane == plane)
    }
}

/// Colors go to cycles in canonical order within each plane class.
pub fn scene(scheme: &PairingScheme, radius: BigRational) -> Result<DiagramScene, GeometryError> {
    let layout = ball_layout(scheme, radius);
    let mut used: BTreeMap<PlaneClass, usize> = BTreeMap::new();
    let mut cycles = Vec::new();
    for cycle in handles::cycles(scheme)? {
        let plane = classify_plane(&cycle, &layout);
        let n = used.entry(plane).or_insert(0);
        let color = PALETTE[*n % PALETTE.len()];
        *n += 1;
        cycles.push(SceneCycle {
            label: handles::ridge_label(scheme, &cycle.start()),
            segments: segment_layout(&cycle, &layout)?,
            cycle,
            plane,
            color,
        });
    }
    let triangles = handles::codim3_classes(scheme)?
        .iter()
        .flat_map(|o| o.members.iter().map(|f| f.sides()))
        .collect();
    Ok(DiagramScene {
        code: scheme.code().to_string(),
        layout,
        cycles,
        triangles,
    })
}
