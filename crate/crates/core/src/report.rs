//! JSON report records. Field order is fixed by the struct definitions and
//! floats go through serde_json's shortest round-trip formatting, so equal
//! inputs produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::cell24::SideVector;
use crate::framing::{self, FramingCertificate, FramingError, MobiusWord};
use crate::geometry::{self, PlaneClass};
use crate::handles::{self, HandleSummary, ValidityReport};
use crate::pairing::{CodeError, KPart, PairingScheme};

pub const SCHEMA: &str = "cell24-kirby/1";

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PairingRow {
    pub letter: char,
    pub domain: SideVector,
    pub image: SideVector,
    pub domain_label: String,
    pub image_label: String,
    pub kpart: KPart,
    pub attaching_map: MobiusWord,
}

impl PairingRow {
    /// `e: S(0,+1,+1,0) → S(0,-1,-1,0), k(-1,-1,-1,+1)`
    pub fn line(&self) -> String {
        format!(
            "{}: {} → {}, {}",
            self.letter, self.domain, self.image, self.kpart
        )
    }
}

pub fn pairing_rows(scheme: &PairingScheme) -> Vec<PairingRow> {
    scheme
        .pairings()
        .iter()
        .map(|p| PairingRow {
            letter: p.letter.lower(),
            domain: p.domain,
            image: p.image,
            domain_label: scheme.label(p.domain).to_string(),
            image_label: scheme.label(p.image).to_string(),
            kpart: p.kpart,
            attaching_map: framing::attaching_map(p.kpart),
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleRow {
    pub face: String,
    pub plane: PlaneClass,
    pub cycle: String,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct PlaneCounts {
    pub xy: usize,
    pub xz: usize,
    pub yz: usize,
    pub special: usize,
}

impl PlaneCounts {
    pub fn add(&mut self, p: PlaneClass) {
        match p {
            PlaneClass::XY => self.xy += 1,
            PlaneClass::XZ => self.xz += 1,
            PlaneClass::YZ => self.yz += 1,
            PlaneClass::Special => self.special += 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HandleSection {
    pub summary: HandleSummary,
    pub planes: PlaneCounts,
    pub cycles: Vec<CycleRow>,
    pub codim3: Vec<String>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecordError {
    Parse { error: CodeError, message: String },
    Framing { message: String },
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub code: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<RecordError>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairings: Option<Vec<PairingRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validity: Option<ValidityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handles: Option<HandleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framing: Option<FramingCertificate>,
}

/// Which report sections to compute.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Sections {
    pub pairings: bool,
    pub handles: bool,
    pub framing: bool,
}

impl Sections {
    pub const ALL: Sections = Sections {
        pairings: true,
        handles: true,
        framing: true,
    };
    pub const NONE: Sections = Sections {
        pairings: false,
        handles: false,
        framing: false,
    };
}

impl ReportRecord {
    fn bare(code: &str) -> ReportRecord {
        ReportRecord {
            schema: SCHEMA.to_string(),
            id: None,
            line: None,
            code: code.to_string(),
            error: None,
            orientable: None,
            pairings: None,
            validity: None,
            handles: None,
            framing: None,
        }
    }

    pub fn parse_failure(code: &str, error: CodeError) -> ReportRecord {
        ReportRecord {
            error: Some(RecordError::Parse {
                message: error.to_string(),
                error,
            }),
            ..ReportRecord::bare(code)
        }
    }

    /// Validity is always computed. Handle and framing sections are only
    /// filled for schemes that pass validation.
    pub fn build(scheme: &PairingScheme, sections: Sections) -> ReportRecord {
        let mut rec = ReportRecord::bare(scheme.code());
        rec.orientable = Some(scheme.is_orientable());
        if sections.pairings {
            rec.pairings = Some(pairing_rows(scheme));
        }
        let validity = handles::validate(scheme);
        let valid = validity.valid;
        rec.validity = Some(validity);
        if !valid {
            return rec;
        }
        if sections.handles {
            rec.handles = handle_section(scheme).ok();
        }
        if sections.framing {
            match framing::planar_framing_certificate(scheme, &geometry::default_radius()) {
                Ok(c) => rec.framing = Some(c),
                Err(e) => rec.error = Some(framing_error(e)),
            }
        }
        rec
    }

    pub fn from_code(code: &str, sections: Sections) -> ReportRecord {
        match PairingScheme::parse(code) {
            Ok(s) => ReportRecord::build(&s, sections),
            Err(e) => ReportRecord::parse_failure(code, e),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.error.is_none() && self.validity.as_ref().is_some_and(|v| v.valid)
    }
}

fn framing_error(e: FramingError) -> RecordError {
    RecordError::Framing {
        message: e.to_string(),
    }
}

pub fn handle_section(scheme: &PairingScheme) -> Result<HandleSection, handles::HandleError> {
    let summary = handles::summary(scheme)?;
    let layout = geometry::ball_layout(scheme, geometry::default_radius());
    let mut planes = PlaneCounts::default();
    let cycles = handles::cycles(scheme)?
        .iter()
        .map(|c| {
            let plane = geometry::classify_plane(c, &layout);
            planes.add(plane);
            CycleRow {
                face: handles::ridge_label(scheme, &c.start()),
                plane,
                cycle: c.render(scheme),
            }
        })
        .collect();
    let codim3 = handles::codim3_classes(scheme)?
        .iter()
        .map(|o| o.render(scheme))
        .collect();
    Ok(HandleSection {
        summary,
        planes,
        cycles,
        codim3,
    })
}
