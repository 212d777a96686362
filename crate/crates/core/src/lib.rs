//! Handle decompositions and Kirby diagrams for hyperbolic 4-manifolds
//! built from side pairings of the ideal 24-cell.
//!
//! A six-character code decodes to a [`PairingScheme`]. From it the crate
//! computes the face classes that give the handles, places the dual diagram
//! in R³ with exact Q(√2) coordinates, renders SVG panels and certifies the
//! framing of every 2-handle by transporting a parallel offset around it.
//!
//! ```
//! use cell24_kirby::{handles, parse_code};
//! let scheme = parse_code("1477B8").unwrap();
//! let s = handles::summary(&scheme).unwrap();
//! assert_eq!(s.euler, 1);
//! assert!(scheme.is_orientable());
//! ```

pub mod cell24;
pub mod census;
pub mod exact;
pub mod framing;
pub mod geometry;
pub mod handles;
pub mod pairing;
pub mod report;

pub use cell24::{Codim3Face, Ridge, SideVector};
pub use exact::{QSqrt2, Vec3E, Vec4E};
pub use framing::{attaching_map, planar_framing_certificate, MobiusWord};
pub use geometry::{ball_layout, classify_plane, scene, PlaneClass};
pub use handles::{cycles, summary, validate, HandleCycle};
pub use pairing::{parse_code, CodeError, KPart, PairingScheme};
pub use report::ReportRecord;
