//! Attaching diffeomorphisms of the 1-handles and framing transport around
//! the 2-handles.
//!
//! Conjugating a k-part by φ gives a map of R³ ∪ {∞}: the first three
//! diagonal entries act as coordinate reflections and a −1 in the last entry
//! contributes inversion in the unit sphere. All such maps commute, so every
//! word reduces to a normal form.

mod trace;

pub use trace::{
    planar_framing_certificate, radial_tag, side_tag, trace_differential, trace_legs,
    trace_parallel, AttachConvention, CycleCertificate, FramingCertificate, FramingTrace, Scalar,
    SideTag, TraceStep, TransportLeg, TransportMethod, CLOSURE_TOLERANCE,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactVec, QSqrt2, Vec3E};
use crate::geometry::{DiagramPoint, GeometryError};
use crate::handles::HandleError;
use crate::pairing::KPart;

#[derive(Debug, Error)]
pub enum FramingError {
    #[error("sphere passes through the inversion centre")]
    SphereThroughPole,
    #[error("differential undefined at the inversion centre")]
    PoleDifferential,
    #[error("map hits the inversion centre at step {step}")]
    Pole { step: usize },
    #[error("transported offset became parallel to the next segment at step {step}")]
    OffsetDegenerate { step: usize },
    #[error("attachment point is not exact in Q(√2)")]
    NotExact,
    #[error("no transverse normal with initial side {0:?}")]
    InitialTagUnavailable(SideTag),
    #[error("transport needs at least one leg")]
    EmptyCycle,
    #[error(transparent)]
    Handles(#[from] HandleError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Generator {
    Rx,
    Ry,
    Rz,
    Inv,
    Ant,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A composition of coordinate reflections and unit-sphere inversion.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct MobiusWord {
    linear: [i8; 3],
    inversion: bool,
}

impl MobiusWord {
    pub fn identity() -> MobiusWord {
        MobiusWord {
            linear: [1; 3],
            inversion: false,
        }
    }

    pub fn generator(g: Generator) -> MobiusWord {
        let mut w = MobiusWord::identity();
        match g {
            Generator::Rx => w.linear[0] = -1,
            Generator::Ry => w.linear[1] = -1,
            Generator::Rz => w.linear[2] = -1,
            Generator::Ant => w.linear = [-1; 3],
            Generator::Inv => w.inversion = true,
        }
        w
    }

    pub fn from_generators(word: &[Generator]) -> MobiusWord {
        word.iter().fold(MobiusWord::identity(), |w, &g| {
            w.compose(MobiusWord::generator(g))
        })
    }

    pub fn compose(self, other: MobiusWord) -> MobiusWord {
        MobiusWord {
            linear: std::array::from_fn(|i| self.linear[i] * other.linear[i]),
            inversion: self.inversion != other.inversion,
        }
    }

    pub fn linear(&self) -> [i8; 3] {
        self.linear
    }

    pub fn has_inversion(&self) -> bool {
        self.inversion
    }

    /// Reflections, then `Inv`, then `Ant`; three reflections are `Ant`.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        let all = self.linear == [-1; 3];
        if !all {
            for (i, g) in [Generator::Rx, Generator::Ry, Generator::Rz]
                .into_iter()
                .enumerate()
            {
                if self.linear[i] == -1 {
                    out.push(g);
                }
            }
        }
        if self.inversion {
            out.push(Generator::Inv);
        }
        if all {
            out.push(Generator::Ant);
        }
        out
    }

    /// Apply to a finite point; `None` at the inversion centre.
    pub fn apply<S: Scalar>(&self, p: &[S; 3]) -> Option<[S; 3]> {
        let q = if self.inversion {
            let n = trace::dot(p, p);
            if n.sign() == 0 {
                return None;
            }
            p.clone().map(|x| x.div(&n))
        } else {
            p.clone()
        };
        let mut out = q;
        for (x, &l) in out.iter_mut().zip(&self.linear) {
            if l == -1 {
                *x = x.neg();
            }
        }
        Some(out)
    }

    pub fn evaluate(&self, p: &DiagramPoint) -> DiagramPoint {
        match p {
            DiagramPoint::Infinity if self.inversion => DiagramPoint::Finite(Vec3E::zero()),
            DiagramPoint::Infinity => DiagramPoint::Infinity,
            DiagramPoint::Finite(v) => match self.apply(&v.0) {
                Some(q) => DiagramPoint::Finite(ExactVec(q)),
                None => DiagramPoint::Infinity,
            },
        }
    }

    /// Image of the sphere with the given centre and radius.
    pub fn sphere_image(
        &self,
        center: &Vec3E,
        radius: &QSqrt2,
    ) -> Result<(Vec3E, QSqrt2), FramingError> {
        let (c, r) = if self.inversion {
            let k = center.norm_sq() - radius * radius;
            if k.is_zero() {
                return Err(FramingError::SphereThroughPole);
            }
            let inv = k.invert().expect("nonzero");
            (center.scale(&inv), (radius * &inv).abs())
        } else {
            (center.clone(), radius.clone())
        };
        let linear = MobiusWord {
            linear: self.linear,
            inversion: false,
        };
        let c = linear.apply(&c.0).expect("no inversion");
        Ok((ExactVec(c), r))
    }

    /// Jacobian at `p`, row-major.
    pub fn differential(&self, p: [f64; 3]) -> Result<[[f64; 3]; 3], FramingError> {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        if self.inversion {
            let n = p.iter().map(|x| x * x).sum::<f64>();
            if n == 0.0 {
                return Err(FramingError::PoleDifferential);
            }
            for (i, row) in m.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    *x = (*x - 2.0 * p[i] * p[j] / n) / n;
                }
            }
        }
        for (i, row) in m.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x *= f64::from(self.linear[i]);
            }
        }
        Ok(m)
    }

    /// `(x,y,z) ↦ (-x, y, z)` style formula.
    pub fn formula(&self) -> String {
        let comps: Vec<String> = ["x", "y", "z"]
            .iter()
            .zip(&self.linear)
            .map(|(v, &l)| {
                let sign = if l == -1 { "-" } else { "" };
                if self.inversion {
                    format!("{sign}{v}/(x²+y²+z²)")
                } else {
                    format!("{sign}{v}")
                }
            })
            .collect();
        format!("(x,y,z) ↦ ({})", comps.join(", "))
    }
}

impl fmt::Display for MobiusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generators();
        if g.is_empty() {
            return f.write_str("Id");
        }
        let names: Vec<String> = g.iter().map(Generator::to_string).collect();
        f.write_str(&names.join("∘"))
    }
}

impl FromStr for MobiusWord {
    type Err = String;
    fn from_str(s: &str) -> Result<MobiusWord, String> {
        if s.trim() == "Id" {
            return Ok(MobiusWord::identity());
        }
        let gens = s
            .split('∘')
            .map(|g| match g.trim() {
                "Rx" => Ok(Generator::Rx),
                "Ry" => Ok(Generator::Ry),
                "Rz" => Ok(Generator::Rz),
                "Inv" => Ok(Generator::Inv),
                "Ant" => Ok(Generator::Ant),
                other => Err(format!("unknown generator {other:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MobiusWord::from_generators(&gens))
    }
}

impl Serialize for MobiusWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MobiusWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `φ ∘ k ∘ φ⁻¹`.
pub fn attaching_map(k: KPart) -> MobiusWord {
    let d = k.diag();
    MobiusWord {
        linear: [d[0], d[1], d[2]],
        inversion: d[3] == -1,
    }
}

pub fn evaluate(map: &MobiusWord, p: &DiagramPoint) -> DiagramPoint {
    map.evaluate(p)
}

pub fn sphere_image(
    map: &MobiusWord,
    center: &DiagramPoint,
    radius: &QSqrt2,
) -> Result<(Vec3E, QSqrt2), FramingError> {
    match center {
        DiagramPoint::Finite(c) => map.sphere_image(c, radius),
        DiagramPoint::Infinity => Err(FramingError::SphereThroughPole),
    }
}

pub fn differential(map: &MobiusWord, p: [f64; 3]) -> Result<[[f64; 3]; 3], FramingError> {
    map.differential(p)
}
