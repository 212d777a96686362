//! Framing transport. An offset point rides alongside each chord; at each
//! 1-handle both the chord's entry point and the offset point go through the
//! identifying map, and the difference, made transverse to the next chord,
//! is the new offset direction.
//!
//! The loop certifies a planar framing when the offset comes back to its
//! starting direction. Every attaching map preserves planes through the
//! origin, so an offset starting in the plane spanned by the origin and the
//! first chord stays in the corresponding plane of every later chord.

use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{attaching_map, FramingError, MobiusWord};
use crate::exact::{ExactVec, QSqrt2, Vec3E};
use crate::geometry::{self, AttachPoint, BallLayout, PlaneClass};
use crate::handles::{self, HandleCycle};
use crate::pairing::{PairingScheme, Step};

pub const CLOSURE_TOLERANCE: f64 = 1e-9;

/// Field operations shared by exact and floating transport.
pub trait Scalar: Clone + fmt::Debug + Send + Sync {
    const EXACT: bool;
    fn zero() -> Self;
    fn from_exact(x: &QSqrt2) -> Self;
    /// Floats embed in the float scalar only.
    fn from_f64(x: f64) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sign(&self) -> i32;
    fn to_f64(&self) -> f64;
    /// Factor bringing a nonzero vector to unit size: Euclidean for floats,
    /// the max norm for exact values so no square root is needed.
    fn unit_scale(v: &[Self; 3]) -> Self;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn zero() -> Self {
        0.0
    }
    fn from_exact(x: &QSqrt2) -> Self {
        x.to_f64()
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(x)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> i32 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn unit_scale(v: &[f64; 3]) -> f64 {
        1.0 / v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

impl Scalar for QSqrt2 {
    const EXACT: bool = true;
    fn zero() -> Self {
        QSqrt2::zero()
    }
    fn from_exact(x: &QSqrt2) -> Self {
        x.clone()
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> i32 {
        QSqrt2::sign(self)
    }
    fn to_f64(&self) -> f64 {
        QSqrt2::to_f64(self)
    }
    fn unit_scale(v: &[QSqrt2; 3]) -> QSqrt2 {
        ExactVec(v.clone())
            .max_abs()
            .invert()
            .expect("nonzero vector")
    }
}

type V<S> = [S; 3];

pub(crate) fn dot<S: Scalar>(a: &V<S>, b: &V<S>) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

fn add<S: Scalar>(a: &V<S>, b: &V<S>) -> V<S> {
    std::array::from_fn(|i| a[i].add(&b[i]))
}

fn sub<S: Scalar>(a: &V<S>, b: &V<S>) -> V<S> {
    std::array::from_fn(|i| a[i].sub(&b[i]))
}

fn scale<S: Scalar>(a: &V<S>, s: &S) -> V<S> {
    std::array::from_fn(|i| a[i].mul(s))
}

fn cross<S: Scalar>(a: &V<S>, b: &V<S>) -> V<S> {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

fn is_zero<S: Scalar>(a: &V<S>) -> bool {
    a.iter().all(|x| x.sign() == 0)
}

/// Component of `v` orthogonal to `d`.
fn perp<S: Scalar>(v: &V<S>, d: &V<S>) -> V<S> {
    let t = dot(v, d).div(&dot(d, d));
    sub(v, &scale(d, &t))
}

fn unit<S: Scalar>(v: &V<S>) -> Option<V<S>> {
    if S::EXACT {
        if is_zero(v) {
            return None;
        }
    } else {
        let n = dot(v, v).to_f64();
        if n.is_nan() || n <= 1e-300 {
            return None;
        }
    }
    Some(scale(v, &S::unit_scale(v)))
}

fn to_f64v<S: Scalar>(v: &V<S>) -> [f64; 3] {
    std::array::from_fn(|i| v[i].to_f64())
}

fn euclid_unit(v: [f64; 3]) -> [f64; 3] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SideTag {
    Above,
    Below,
    InPlaneLeft,
    InPlaneRight,
}

impl fmt::Display for SideTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideTag::Above => "above",
            SideTag::Below => "below",
            SideTag::InPlaneLeft => "in-plane-left",
            SideTag::InPlaneRight => "in-plane-right",
        })
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttachConvention {
    /// Where the chord meets the ball boundary.
    Segment,
    /// `c + r·e`, with `e` the signed coordinate axis closest to the
    /// direction back along the chord.
    Axis,
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransportMethod {
    Offset,
    Differential,
}

fn sign_tag(s: i32, pos: SideTag, neg: SideTag) -> Option<SideTag> {
    match s {
        1 => Some(pos),
        -1 => Some(neg),
        _ => None,
    }
}

/// Which side of the chord with direction `d` the normal `n` points to.
/// Special cycles use the global z sign; planar cycles use the in-plane
/// sign against the left normal of `d`, falling back to the out-of-plane
/// sign for normals leaving the plane.
pub fn side_tag<S: Scalar>(n: &V<S>, d: &V<S>, plane: PlaneClass) -> SideTag {
    let (i, j) = plane.axes().unwrap_or((0, 1));
    // left normal of d within the plane is (-d_j, d_i)
    let in_plane = n[i].mul(&d[j].neg()).add(&n[j].mul(&d[i]));
    let by_plane = sign_tag(in_plane.sign(), SideTag::InPlaneLeft, SideTag::InPlaneRight);
    let k = plane.normal_axis().unwrap_or(2);
    let by_height = sign_tag(n[k].sign(), SideTag::Above, SideTag::Below);
    match plane {
        PlaneClass::Special => by_height.or(by_plane),
        _ => by_plane.or(by_height),
    }
    .unwrap_or(SideTag::Above)
}

/// One chord and the 1-handle at its end.
#[derive(Clone, Debug)]
pub struct TransportLeg<S> {
    pub direction: V<S>,
    /// Where the chord enters the ball at its end.
    pub entry: V<S>,
    pub map: MobiusWord,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: Option<Step>,
    pub entry: [f64; 3],
    pub exit: [f64; 3],
    /// Unit offset direction after the map, transverse to the next chord.
    pub normal: [f64; 3],
    pub tag: SideTag,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FramingTrace {
    pub plane: PlaneClass,
    pub convention: AttachConvention,
    pub method: TransportMethod,
    pub epsilon: f64,
    pub exact: bool,
    pub initial_tag: SideTag,
    pub initial_normal: [f64; 3],
    pub steps: Vec<TraceStep>,
    /// Distance between the final unit normal and `holonomy_sign` times the
    /// initial one.
    pub closure_error: f64,
    pub line_preserved: bool,
    pub holonomy_sign: i8,
    pub closes: bool,
}

impl FramingTrace {
    pub fn side_sequence(&self) -> Vec<SideTag> {
        self.steps.iter().map(|s| s.tag).collect()
    }
}

/// Offset transport along explicit legs, starting from normal `n0` at the
/// start of the first chord.
pub fn trace_legs<S: Scalar>(
    legs: &[TransportLeg<S>],
    epsilon: &S,
    n0: &V<S>,
    plane: PlaneClass,
    method: TransportMethod,
) -> Result<FramingTrace, FramingError> {
    let first = legs.first().ok_or(FramingError::EmptyCycle)?;
    let start =
        unit(&perp(n0, &first.direction)).ok_or(FramingError::OffsetDegenerate { step: 0 })?;
    let initial_tag = side_tag(&start, &first.direction, plane);
    let mut n = start.clone();
    let mut steps = Vec::with_capacity(legs.len());
    for (i, leg) in legs.iter().enumerate() {
        let next = &legs[(i + 1) % legs.len()].direction;
        let fp = leg
            .map
            .apply(&leg.entry)
            .ok_or(FramingError::Pole { step: i })?;
        let w: V<S> = match method {
            TransportMethod::Offset => {
                let q = add(&leg.entry, &scale(&n, epsilon));
                let fq = leg.map.apply(&q).ok_or(FramingError::Pole { step: i })?;
                sub(&fq, &fp)
            }
            TransportMethod::Differential => {
                let m = leg.map.differential(to_f64v(&leg.entry))?;
                let v = to_f64v(&n);
                let mv: [f64; 3] = std::array::from_fn(|r| (0..3).map(|c| m[r][c] * v[c]).sum());
                let w: Option<Vec<S>> = mv.iter().map(|&x| S::from_f64(x)).collect();
                let w = w.ok_or(FramingError::NotExact)?;
                std::array::from_fn(|r| w[r].clone())
            }
        };
        n = unit(&perp(&w, next)).ok_or(FramingError::OffsetDegenerate { step: i })?;
        steps.push(TraceStep {
            step: None,
            entry: to_f64v(&leg.entry),
            exit: to_f64v(&fp),
            normal: euclid_unit(to_f64v(&n)),
            tag: side_tag(&n, next, plane),
        });
    }
    let dotp = dot(&n, &start).sign();
    let holonomy_sign: i8 = if dotp < 0 { -1 } else { 1 };
    let a = euclid_unit(to_f64v(&n));
    let b = euclid_unit(to_f64v(&start));
    let closure_error = (0..3)
        .map(|i| (a[i] - f64::from(holonomy_sign) * b[i]).powi(2))
        .sum::<f64>()
        .sqrt();
    let line_preserved = if S::EXACT && method == TransportMethod::Offset {
        is_zero(&cross(&n, &start))
    } else {
        closure_error <= CLOSURE_TOLERANCE
    };
    Ok(FramingTrace {
        plane,
        convention: AttachConvention::Segment,
        method,
        epsilon: epsilon.to_f64(),
        exact: S::EXACT && method == TransportMethod::Offset,
        initial_tag,
        initial_normal: b,
        steps,
        closure_error,
        line_preserved,
        holonomy_sign,
        closes: line_preserved && holonomy_sign == 1,
    })
}

fn attach_points(
    cycle: &HandleCycle,
    layout: &BallLayout,
    convention: AttachConvention,
) -> Result<Vec<(Vec3E, AttachPoint)>, FramingError> {
    let r = layout.radius_exact();
    cycle
        .steps()
        .iter()
        .map(|s| {
            let seg = geometry::segment(layout, s.carried(), s.acted)?;
            let entry = match convention {
                AttachConvention::Segment => seg.entry.clone(),
                AttachConvention::Axis => {
                    let back = -&seg.direction;
                    let m = back.max_abs();
                    let j = (0..3).find(|&j| back[j].abs() == m).expect("nonzero");
                    let mut e = Vec3E::zero();
                    e.0[j] = if back[j].sign() > 0 { r.clone() } else { -&r };
                    let p = layout.center(s.acted) + &e;
                    AttachPoint {
                        approx: p.to_f64(),
                        exact: Some(p),
                    }
                }
            };
            Ok((seg.direction, entry))
        })
        .collect()
}

fn build_legs<S: Scalar>(
    scheme: &PairingScheme,
    cycle: &HandleCycle,
    points: &[(Vec3E, AttachPoint)],
) -> Option<Vec<TransportLeg<S>>> {
    cycle
        .steps()
        .iter()
        .zip(points)
        .map(|(s, (d, p))| {
            let entry: V<S> = if S::EXACT {
                p.exact.as_ref()?.0.clone().map(|x| S::from_exact(&x))
            } else {
                let v: Option<Vec<S>> = p.approx.iter().map(|&x| S::from_f64(x)).collect();
                let v = v?;
                std::array::from_fn(|i| v[i].clone())
            };
            Some(TransportLeg {
                direction: d.0.clone().map(|x| S::from_exact(&x)),
                entry,
                map: attaching_map(scheme.kpart(s.step.letter)),
            })
        })
        .collect()
}

/// Candidate transverse normals at the start of the first chord: the normal
/// in the plane through the origin and the chord, then the binormal.
fn initial_candidates(cycle: &HandleCycle, layout: &BallLayout) -> (Vec3E, Vec<Vec3E>) {
    let s = &cycle.steps()[0];
    let a = layout.center(s.carried());
    let b = layout.center(s.acted);
    let d = b - a;
    let mid = (a + b).scale(&QSqrt2::from_parts(1, 2, 0, 1));
    let t = mid.dot(&d) / d.norm_sq();
    let radial = &mid - &d.scale(&t);
    let bi = d.cross(&radial);
    let out = vec![radial.clone(), -&radial, bi.clone(), -&bi];
    (d, out)
}

/// Side tag of the outward normal in the plane through the origin and the
/// cycle's first chord.
pub fn radial_tag(cycle: &HandleCycle, layout: &BallLayout) -> SideTag {
    let (d, cands) = initial_candidates(cycle, layout);
    side_tag(&cands[0].0, &d.0, geometry::classify_plane(cycle, layout))
}

fn trace_cycle<S: Scalar>(
    scheme: &PairingScheme,
    cycle: &HandleCycle,
    layout: &BallLayout,
    epsilon: &BigRational,
    initial: SideTag,
    convention: AttachConvention,
    method: TransportMethod,
) -> Result<FramingTrace, FramingError> {
    let plane = geometry::classify_plane(cycle, layout);
    let points = attach_points(cycle, layout, convention)?;
    let legs: Vec<TransportLeg<S>> =
        build_legs(scheme, cycle, &points).ok_or(FramingError::NotExact)?;
    let (d, cands) = initial_candidates(cycle, layout);
    let n0 = cands
        .iter()
        .find(|c| !c.is_zero() && side_tag(&c.0, &d.0, plane) == initial)
        .ok_or(FramingError::InitialTagUnavailable(initial))?;
    let n0: V<S> = n0.0.clone().map(|x| S::from_exact(&x));
    let eps = S::from_exact(&QSqrt2::from_rational(epsilon.clone()));
    let mut t = trace_legs(&legs, &eps, &n0, plane, method)?;
    t.convention = convention;
    for (rec, s) in t.steps.iter_mut().zip(cycle.steps()) {
        rec.step = Some(s.step);
    }
    Ok(t)
}

/// Offset transport around a cycle. Runs in Q(√2) when every attachment
/// point is exact and in floating point otherwise.
pub fn trace_parallel(
    scheme: &PairingScheme,
    cycle: &HandleCycle,
    layout: &BallLayout,
    epsilon: &BigRational,
    initial: SideTag,
    convention: AttachConvention,
) -> Result<FramingTrace, FramingError> {
    let m = TransportMethod::Offset;
    match trace_cycle::<QSqrt2>(scheme, cycle, layout, epsilon, initial, convention, m) {
        Err(FramingError::NotExact) => {
            trace_cycle::<f64>(scheme, cycle, layout, epsilon, initial, convention, m)
        }
        other => other,
    }
}

/// Transport by the differential of each attaching map, as a cross-check.
pub fn trace_differential(
    scheme: &PairingScheme,
    cycle: &HandleCycle,
    layout: &BallLayout,
    initial: SideTag,
    convention: AttachConvention,
) -> Result<FramingTrace, FramingError> {
    let zero = BigRational::from_integer(0.into());
    trace_cycle::<f64>(
        scheme,
        cycle,
        layout,
        &zero,
        initial,
        convention,
        TransportMethod::Differential,
    )
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub face: String,
    pub plane: PlaneClass,
    pub initial_tag: SideTag,
    pub side_sequence: Vec<SideTag>,
    pub holonomy_sign: i8,
    pub exact: bool,
    /// Largest closure error over the offsets tried.
    pub closure_error: f64,
    pub stable_under_epsilon: bool,
    /// Side sequence and holonomy sign agree under the axis convention.
    /// Reported, not required: on diagonal chords the axis point is a
    /// tie-break and can flip the in-plane sign.
    pub conventions_agree: bool,
    pub axis_closure_error: f64,
    pub differential_agrees: bool,
    pub certified: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FramingCertificate {
    pub criterion: String,
    pub cycles: Vec<CycleCertificate>,
    pub certified: bool,
}

pub const CRITERION: &str = "offset transported around the cycle returns to its initial \
direction (line preserved, sign +1) for offsets r/4, r/8, r/16; this formalization of a \
planar framing is this tool's own";

fn certify(
    scheme: &PairingScheme,
    cycle: &HandleCycle,
    layout: &BallLayout,
) -> Result<CycleCertificate, FramingError> {
    let r = layout.radius().clone();
    let initial = radial_tag(cycle, layout);
    let offsets: Vec<BigRational> = [4, 8, 16]
        .iter()
        .map(|&k| &r / BigRational::from_integer(k.into()))
        .collect();
    let traces = offsets
        .iter()
        .map(|e| trace_parallel(scheme, cycle, layout, e, initial, AttachConvention::Segment))
        .collect::<Result<Vec<_>, _>>()?;
    let base = &traces[0];
    let verdict = |t: &FramingTrace| (t.side_sequence(), t.holonomy_sign);
    let stable = traces
        .iter()
        .all(|t| verdict(t) == verdict(base) && t.closes == base.closes);
    let axis = trace_parallel(
        scheme,
        cycle,
        layout,
        &offsets[1],
        initial,
        AttachConvention::Axis,
    )?;
    let diff = trace_differential(scheme, cycle, layout, initial, AttachConvention::Segment)?;
    let closes = traces.iter().all(|t| t.closes);
    let conventions_agree = verdict(&axis) == verdict(base);
    let differential_agrees = verdict(&diff) == verdict(base) && diff.closes == base.closes;
    Ok(CycleCertificate {
        face: handles::ridge_label(scheme, &cycle.start()),
        plane: base.plane,
        initial_tag: initial,
        side_sequence: base.side_sequence(),
        holonomy_sign: base.holonomy_sign,
        exact: traces.iter().all(|t| t.exact),
        closure_error: traces.iter().map(|t| t.closure_error).fold(0.0, f64::max),
        stable_under_epsilon: stable,
        conventions_agree,
        axis_closure_error: axis.closure_error,
        differential_agrees,
        certified: closes && stable && differential_agrees,
    })
}

/// Certificate over all canonical cycles; cycles are traced in parallel.
pub fn planar_framing_certificate(
    scheme: &PairingScheme,
    radius: &BigRational,
) -> Result<FramingCertificate, FramingError> {
    let layout = geometry::ball_layout(scheme, radius.clone());
    let cycles = handles::cycles(scheme)?;
    let certs = cycles
        .par_iter()
        .map(|c| certify(scheme, c, &layout))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FramingCertificate {
        criterion: CRITERION.to_string(),
        certified: certs.iter().all(|c| c.certified),
        cycles: certs,
    })
}
