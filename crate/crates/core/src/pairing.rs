//! Six-character side-pairing codes and the twelve transformations they
//! encode.
//!
//! Each character fixes the diagonal reflection part (the *k-part*) shared by
//! the two transformations of one side group. The remaining reflection part
//! is reflection in the image side; it fixes every side orthogonal to the
//! image side, so combinatorially each transformation acts on sides as its
//! k-part.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cell24::{SideVector, GROUP_COUNT, GROUP_SUPPORT, SIDE_COUNT};

pub const CODE_LENGTH: usize = 6;
pub const CODE_ALPHABET: &str = "123456789ABCDEF";

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum CodeError {
    #[error("code must have {CODE_LENGTH} characters, got {0}")]
    BadLength(usize),
    #[error("bad character {ch:?} at position {position}")]
    BadCharacter { ch: char, position: usize },
    #[error("character {ch:?} at position {position} fixes a side of its group")]
    FixedSideCharacter { ch: char, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("{step} cannot act on {side}: the face would leave the polytope")]
    NotIncident { step: Step, side: SideVector },
}

/// Diagonal ±1 matrix; a composition of reflections in coordinate planes.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct KPart([i8; 4]);

impl KPart {
    pub fn new(diag: [i8; 4]) -> Option<KPart> {
        diag.iter().all(|d| d.abs() == 1).then_some(KPart(diag))
    }

    /// Character `n` (hex digit 1–F) negates coordinate `i` iff bit `i` of
    /// `n` is set.
    pub fn from_char(ch: char) -> Option<KPart> {
        if !ch.is_ascii_digit() && !ch.is_ascii_uppercase() {
            return None;
        }
        let n = ch.to_digit(16).filter(|&n| n != 0)?;
        Some(KPart(std::array::from_fn(|i| {
            if n >> i & 1 == 1 {
                -1
            } else {
                1
            }
        })))
    }

    pub fn to_char(self) -> char {
        let n: u32 = (0..4).filter(|&i| self.0[i] == -1).map(|i| 1 << i).sum();
        std::char::from_digit(n, 16)
            .map(|c| c.to_ascii_uppercase())
            .unwrap_or('0')
    }

    pub fn diag(self) -> [i8; 4] {
        self.0
    }

    pub fn apply(self, side: SideVector) -> SideVector {
        side.apply_diag(self.0)
    }

    pub fn determinant(self) -> i8 {
        self.0.iter().product()
    }

    /// Restriction to the support of a side group.
    fn restricted(self, group: usize) -> (i8, i8) {
        let (p, q) = GROUP_SUPPORT[group];
        (self.0[p], self.0[q])
    }
}

impl fmt::Display for KPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .0
            .iter()
            .map(|&d| if d == 1 { "+1" } else { "-1" })
            .collect();
        write!(f, "k({})", s.join(","))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
}

impl Letter {
    pub const ALL: [Letter; 12] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
        Letter::H,
        Letter::I,
        Letter::J,
        Letter::K,
        Letter::L,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn group(self) -> usize {
        self.index() / 2
    }

    pub fn lower(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn upper(self) -> char {
        (b'A' + self as u8) as char
    }

    pub fn from_char(c: char) -> Option<Letter> {
        let i = (c.to_ascii_lowercase() as u32).checked_sub('a' as u32)? as usize;
        Letter::ALL.get(i).copied()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lower())
    }
}

/// A transformation letter, possibly inverted.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Step {
    pub letter: Letter,
    pub inverse: bool,
}

impl Step {
    pub fn forward(letter: Letter) -> Step {
        Step {
            letter,
            inverse: false,
        }
    }

    pub fn backward(letter: Letter) -> Step {
        Step {
            letter,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Step {
        Step {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.letter)
        } else {
            write!(f, "{}", self.letter)
        }
    }
}

impl FromStr for Step {
    type Err = String;
    fn from_str(s: &str) -> Result<Step, String> {
        let (body, inverse) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let mut chars = body.chars();
        match (chars.next().and_then(Letter::from_char), chars.next()) {
            (Some(letter), None) => Ok(Step { letter, inverse }),
            _ => Err(format!("not a step: {s:?}")),
        }
    }
}

/// Display label of a side: the capital of the letter that pairs it, primed
/// on the image side.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SideLabel {
    pub letter: Letter,
    pub primed: bool,
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter.upper())?;
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl FromStr for SideLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<SideLabel, String> {
        let mut chars = s.chars();
        let letter = chars
            .next()
            .filter(char::is_ascii_uppercase)
            .and_then(Letter::from_char);
        let rest: String = chars.collect();
        let primed = match rest.as_str() {
            "" => false,
            "'" | "′" => true,
            _ => return Err(format!("not a side label: {s:?}")),
        };
        letter
            .map(|letter| SideLabel { letter, primed })
            .ok_or_else(|| format!("not a side label: {s:?}"))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Pairing {
    pub letter: Letter,
    pub domain: SideVector,
    pub image: SideVector,
    pub kpart: KPart,
}

/// The decoded side pairing of one code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairingScheme {
    code: String,
    pairings: [Pairing; 12],
    labels: [SideLabel; SIDE_COUNT],
}

impl PairingScheme {
    pub fn parse(code: &str) -> Result<PairingScheme, CodeError> {
        let chars: Vec<char> = code.chars().collect();
        if chars.len() != CODE_LENGTH {
            return Err(CodeError::BadLength(chars.len()));
        }
        let mut kparts = [KPart([1; 4]); GROUP_COUNT];
        for (position, &ch) in chars.iter().enumerate() {
            kparts[position] =
                KPart::from_char(ch).ok_or(CodeError::BadCharacter { ch, position })?;
        }
        for (position, k) in kparts.iter().enumerate() {
            if k.restricted(position) == (1, 1) {
                return Err(CodeError::FixedSideCharacter {
                    ch: chars[position],
                    position,
                });
            }
        }

        let mut pairings = Vec::with_capacity(12);
        let mut labels = [None; SIDE_COUNT];
        for (group, &kpart) in kparts.iter().enumerate() {
            let group_sides: Vec<SideVector> =
                SideVector::all().filter(|s| s.group() == group).collect();
            for letter in [Letter::ALL[2 * group], Letter::ALL[2 * group + 1]] {
                // least unused side of the group, in sign order
                let domain = *group_sides
                    .iter()
                    .find(|s| labels[s.index()].is_none())
                    .expect("group has an unused side");
                let image = kpart.apply(domain);
                debug_assert!(image != domain && labels[image.index()].is_none());
                labels[domain.index()] = Some(SideLabel {
                    letter,
                    primed: false,
                });
                labels[image.index()] = Some(SideLabel {
                    letter,
                    primed: true,
                });
                pairings.push(Pairing {
                    letter,
                    domain,
                    image,
                    kpart,
                });
            }
        }
        Ok(PairingScheme {
            code: code.to_string(),
            pairings: pairings.try_into().expect("twelve pairings"),
            labels: labels.map(|l| l.expect("every side labelled")),
        })
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn pairings(&self) -> &[Pairing; 12] {
        &self.pairings
    }

    pub fn pairing(&self, letter: Letter) -> &Pairing {
        &self.pairings[letter.index()]
    }

    pub fn label(&self, side: SideVector) -> SideLabel {
        self.labels[side.index()]
    }

    pub fn side_with_label(&self, label: SideLabel) -> SideVector {
        let p = self.pairing(label.letter);
        if label.primed {
            p.image
        } else {
            p.domain
        }
    }

    /// The step that carries `side` off itself: the letter whose domain it
    /// is, or the inverse of the letter whose image it is.
    pub fn step_from(&self, side: SideVector) -> Step {
        let label = self.label(side);
        Step {
            letter: label.letter,
            inverse: label.primed,
        }
    }

    /// Source and target sides of a step.
    pub fn step_sides(&self, step: Step) -> (SideVector, SideVector) {
        let p = self.pairing(step.letter);
        if step.inverse {
            (p.image, p.domain)
        } else {
            (p.domain, p.image)
        }
    }

    pub fn kpart(&self, letter: Letter) -> KPart {
        self.pairing(letter).kpart
    }

    /// Combinatorial action of a step on a side incident to its source.
    pub fn apply(&self, step: Step, side: SideVector) -> Result<SideVector, ActionError> {
        let (source, target) = self.step_sides(step);
        if side == source {
            return Ok(target);
        }
        let moved = self.kpart(step.letter).apply(side);
        if moved.intersects(target) {
            Ok(moved)
        } else {
            Err(ActionError::NotIncident { step, side })
        }
    }

    /// +1 iff the pairing preserves orientation: det(r)·det(k) with r a
    /// single reflection.
    pub fn orientation_character(&self, letter: Letter) -> i8 {
        -self.kpart(letter).determinant()
    }

    pub fn is_orientable(&self) -> bool {
        Letter::ALL
            .iter()
            .all(|&l| self.orientation_character(l) == 1)
    }
}

impl FromStr for PairingScheme {
    type Err = CodeError;
    fn from_str(s: &str) -> Result<Self, CodeError> {
        PairingScheme::parse(s)
    }
}

impl fmt::Display for PairingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

pub fn parse_code(code: &str) -> Result<PairingScheme, CodeError> {
    PairingScheme::parse(code)
}
