//! Handle decomposition of the quotient: codimension 1, 2 and 3 face
//! classes under the side-pairing action.
//!
//! One 0-handle comes from the interior of the polytope, one 1-handle from
//! each pair of sides, one 2-handle from each ridge class and one 3-handle
//! from each codimension-3 class. There are no 4-handles since every vertex
//! is ideal.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cell24::{all_codim3_faces, all_ridges, Codim3Face, Ridge, SideVector};
use crate::pairing::{ActionError, PairingScheme, SideLabel, Step};

pub const RIDGE_CYCLE_LENGTH: usize = 4;
pub const CODIM3_ORBIT_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum HandleError {
    #[error("ridge cycle of {ridge} has length {length}, expected {RIDGE_CYCLE_LENGTH}")]
    CycleNotClosed { ridge: String, length: usize },
    #[error("orbit of {face} has {size} members, expected {expected}")]
    OrbitSizeMismatch {
        face: String,
        size: usize,
        expected: usize,
    },
    #[error("{side} is not a side of {face}")]
    NotOnFace { side: String, face: String },
    #[error("{0}")]
    Action(String),
}

impl From<ActionError> for HandleError {
    fn from(e: ActionError) -> Self {
        HandleError::Action(e.to_string())
    }
}

/// A face together with the scheme labels of its sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledFace {
    sides: Vec<SideVector>,
    labels: Vec<SideLabel>,
}

impl LabeledFace {
    pub fn new(scheme: &PairingScheme, sides: &[SideVector]) -> LabeledFace {
        let mut sides = sides.to_vec();
        sides.sort();
        let mut labels: Vec<SideLabel> = sides.iter().map(|&s| scheme.label(s)).collect();
        labels.sort();
        LabeledFace { sides, labels }
    }

    pub fn ridge(scheme: &PairingScheme, r: &Ridge) -> LabeledFace {
        LabeledFace::new(scheme, &r.sides())
    }

    pub fn codim3(scheme: &PairingScheme, f: &Codim3Face) -> LabeledFace {
        LabeledFace::new(scheme, &f.sides())
    }

    pub fn sides(&self) -> &[SideVector] {
        &self.sides
    }

    pub fn labels(&self) -> &[SideLabel] {
        &self.labels
    }
}

impl fmt::Display for LabeledFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str("∩")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn ridge_label(scheme: &PairingScheme, r: &Ridge) -> String {
    LabeledFace::ridge(scheme, r).to_string()
}

pub fn codim3_label(scheme: &PairingScheme, f: &Codim3Face) -> String {
    LabeledFace::codim3(scheme, f).to_string()
}

/// One arrow of a ridge cycle: `step` acts on the `acted` side of `face`.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleStep {
    pub face: Ridge,
    pub acted: SideVector,
    pub step: Step,
}

impl CycleStep {
    /// The side of `face` carried along by the step.
    pub fn carried(&self) -> SideVector {
        self.face.other(self.acted)
    }
}

/// An ordered ridge cycle; the last step returns to the first face.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HandleCycle {
    steps: Vec<CycleStep>,
}

impl HandleCycle {
    pub fn steps(&self) -> &[CycleStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self) -> Ridge {
        self.steps[0].face
    }

    pub fn faces(&self) -> Vec<Ridge> {
        self.steps.iter().map(|s| s.face).collect()
    }

    pub fn face_set(&self) -> BTreeSet<Ridge> {
        self.steps.iter().map(|s| s.face).collect()
    }

    /// Every side appearing on some face of the cycle.
    pub fn sides(&self) -> BTreeSet<SideVector> {
        self.steps.iter().flat_map(|s| s.face.sides()).collect()
    }

    pub fn is_closed(&self, scheme: &PairingScheme) -> bool {
        match self.steps.last() {
            Some(last) => advance(scheme, last.face, last.acted)
                .map(|(next, _)| next == self.start())
                .unwrap_or(false),
            None => false,
        }
    }

    /// `A∩C -a-> A'∩D -d-> ... -> A∩C`
    pub fn render(&self, scheme: &PairingScheme) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out += &format!("{} -{}-> ", ridge_label(scheme, &s.face), s.step);
        }
        out += &ridge_label(scheme, &self.start());
        out
    }
}

/// Act on one side of a ridge. Returns the next ridge and the carried side's
/// image, which is the side acted on next.
fn advance(
    scheme: &PairingScheme,
    face: Ridge,
    acted: SideVector,
) -> Result<(Ridge, SideVector), HandleError> {
    let step = scheme.step_from(acted);
    let target = scheme.apply(step, acted)?;
    let carried = scheme.apply(step, face.other(acted))?;
    let next = Ridge::new(target, carried).map_err(|e| HandleError::Action(e.to_string()))?;
    Ok((next, carried))
}

pub fn codim1_classes(scheme: &PairingScheme) -> Vec<(SideVector, SideVector)> {
    scheme
        .pairings()
        .iter()
        .map(|p| (p.domain, p.image))
        .collect()
}

/// Follow the ridge cycle through `start`, acting first on `first_acted`.
pub fn ridge_cycle(
    scheme: &PairingScheme,
    start: Ridge,
    first_acted: SideVector,
) -> Result<HandleCycle, HandleError> {
    if !start.contains(first_acted) {
        return Err(HandleError::NotOnFace {
            side: scheme.label(first_acted).to_string(),
            face: ridge_label(scheme, &start),
        });
    }
    let mut steps = Vec::new();
    let (mut face, mut acted) = (start, first_acted);
    // the action permutes (ridge, side) pairs, so the walk returns in at
    // most 192 steps
    for _ in 0..2 * all_ridges().len() {
        steps.push(CycleStep {
            face,
            acted,
            step: scheme.step_from(acted),
        });
        (face, acted) = advance(scheme, face, acted)?;
        if face == start {
            break;
        }
    }
    if face != start || steps.len() != RIDGE_CYCLE_LENGTH {
        return Err(HandleError::CycleNotClosed {
            ridge: ridge_label(scheme, &start),
            length: steps.len(),
        });
    }
    Ok(HandleCycle { steps })
}

/// The cycle through `ridge` in canonical form: based at the smallest face
/// of the class, in the direction whose second face is smaller.
pub fn canonical_cycle(scheme: &PairingScheme, ridge: Ridge) -> Result<HandleCycle, HandleError> {
    let any = ridge_cycle(scheme, ridge, ridge.sides()[0])?;
    let base = *any.face_set().first().expect("nonempty cycle");
    let [s, t] = base.sides();
    let forward = ridge_cycle(scheme, base, s)?;
    let backward = ridge_cycle(scheme, base, t)?;
    Ok(if backward.steps[1].face < forward.steps[1].face {
        backward
    } else {
        forward
    })
}

/// All ridge cycles in canonical form, ordered by base face.
pub fn cycles(scheme: &PairingScheme) -> Result<Vec<HandleCycle>, HandleError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &r in all_ridges() {
        if seen.contains(&r) {
            continue;
        }
        let c = canonical_cycle(scheme, r)?;
        seen.extend(c.faces());
        out.push(c);
    }
    Ok(out)
}

/// Ridge classes by orbit closure, independent of cycle traversal.
pub fn codim2_classes(scheme: &PairingScheme) -> Result<Vec<Vec<Ridge>>, HandleError> {
    orbits(
        all_ridges(),
        |r| {
            r.sides()
                .into_iter()
                .map(|s| advance(scheme, *r, s).map(|(n, _)| (scheme.step_from(s), n)))
                .collect()
        },
        RIDGE_CYCLE_LENGTH,
        |r| ridge_label(scheme, r),
    )
    .map(|os| os.into_iter().map(|(m, _)| m).collect())
}

fn act_on_codim3(
    scheme: &PairingScheme,
    face: &Codim3Face,
    acted: SideVector,
) -> Result<(Step, Codim3Face), HandleError> {
    let step = scheme.step_from(acted);
    let [a, b, c] = face.sides().map(|s| scheme.apply(step, s));
    let next = Codim3Face::new(a?, b?, c?).map_err(|e| HandleError::Action(e.to_string()))?;
    Ok((step, next))
}

/// A codimension-3 class with a chain through its members for display.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FaceOrbit {
    pub members: Vec<Codim3Face>,
    pub start: Codim3Face,
    pub path: Vec<(Step, Codim3Face)>,
}

impl FaceOrbit {
    pub fn render(&self, scheme: &PairingScheme) -> String {
        let mut out = codim3_label(scheme, &self.start);
        for (step, f) in &self.path {
            out += &format!(" -{}-> {}", step, codim3_label(scheme, f));
        }
        out
    }
}

pub fn codim3_classes(scheme: &PairingScheme) -> Result<Vec<FaceOrbit>, HandleError> {
    let neighbours = |f: &Codim3Face| -> Result<Vec<(Step, Codim3Face)>, HandleError> {
        f.sides()
            .into_iter()
            .map(|s| act_on_codim3(scheme, f, s))
            .collect()
    };
    let classes = orbits(all_codim3_faces(), neighbours, CODIM3_ORBIT_SIZE, |f| {
        codim3_label(scheme, f)
    })?;
    classes
        .into_iter()
        .map(|(members, edges)| {
            let start = members[0];
            let path = chain(start, members.len(), &edges).unwrap_or_else(|| {
                // spanning-tree order when no simple chain exists
                bfs_tree(start, &edges)
            });
            Ok(FaceOrbit {
                members,
                start,
                path,
            })
        })
        .collect()
}

type Edges<T> = Vec<(T, Step, T)>;

/// Breadth-first orbit closure. Returns each orbit's sorted members with
/// every edge found, in discovery order.
fn orbits<T, N, L>(
    universe: &[T],
    neighbours: N,
    expected: usize,
    label: L,
) -> Result<Vec<(Vec<T>, Edges<T>)>, HandleError>
where
    T: Copy + Ord,
    N: Fn(&T) -> Result<Vec<(Step, T)>, HandleError>,
    L: Fn(&T) -> String,
{
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &root in universe {
        if seen.contains(&root) {
            continue;
        }
        let mut members = BTreeSet::from([root]);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for (step, y) in neighbours(&x)? {
                edges.push((x, step, y));
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        if members.len() != expected {
            return Err(HandleError::OrbitSizeMismatch {
                face: label(&root),
                size: members.len(),
                expected,
            });
        }
        seen.extend(members.iter().copied());
        out.push((members.into_iter().collect(), edges));
    }
    Ok(out)
}

/// A path visiting every member once, by backtracking; orbits are tiny.
fn chain<T: Copy + Ord>(start: T, size: usize, edges: &Edges<T>) -> Option<Vec<(Step, T)>> {
    fn go<T: Copy + Ord>(
        at: T,
        size: usize,
        edges: &Edges<T>,
        visited: &mut BTreeSet<T>,
        path: &mut Vec<(Step, T)>,
    ) -> bool {
        if visited.len() == size {
            return true;
        }
        for &(x, step, y) in edges {
            if x == at && !visited.contains(&y) {
                visited.insert(y);
                path.push((step, y));
                if go(y, size, edges, visited, path) {
                    return true;
                }
                path.pop();
                visited.remove(&y);
            }
        }
        false
    }
    let mut visited = BTreeSet::from([start]);
    let mut path = Vec::new();
    go(start, size, edges, &mut visited, &mut path).then_some(path)
}

fn bfs_tree<T: Copy + Ord>(start: T, edges: &Edges<T>) -> Vec<(Step, T)> {
    let mut reached = BTreeSet::from([start]);
    let mut out = Vec::new();
    for &(_, step, y) in edges {
        if reached.insert(y) {
            out.push((step, y));
        }
    }
    out
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HandleCounts {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub h3: usize,
    pub h4: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HandleSummary {
    pub counts: HandleCounts,
    pub euler: i64,
    pub orientable: bool,
}

pub fn summary(scheme: &PairingScheme) -> Result<HandleSummary, HandleError> {
    let counts = HandleCounts {
        h0: 1,
        h1: codim1_classes(scheme).len(),
        h2: codim2_classes(scheme)?.len(),
        h3: codim3_classes(scheme)?.len(),
        h4: 0,
    };
    let c = [counts.h0, counts.h1, counts.h2, counts.h3, counts.h4];
    let euler = c
        .iter()
        .enumerate()
        .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum();
    Ok(HandleSummary {
        counts,
        euler,
        orientable: scheme.is_orientable(),
    })
}

/// Outcome of the combinatorial validity checks. These conditions are
/// necessary for a manifold quotient; they are not claimed sufficient.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub failure: Option<HandleError>,
}

pub fn validate(scheme: &PairingScheme) -> ValidityReport {
    let check = || -> Result<(), HandleError> {
        for &r in all_ridges() {
            ridge_cycle(scheme, r, r.sides()[0])?;
        }
        codim2_classes(scheme)?;
        codim3_classes(scheme)?;
        Ok(())
    };
    match check() {
        Ok(()) => ValidityReport {
            valid: true,
            failure: None,
        },
        Err(e) => ValidityReport {
            valid: false,
            failure: Some(e),
        },
    }
}
