//! Independent oracles shared by the integration and acceptance tests. Label
//! and action logic here is rebuilt from the transcribed listings, never from
//! the library's own decoder.

#![allow(dead_code)]

pub mod golden;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use cell24_kirby::exact::QSqrt2;
use cell24_kirby::handles::HandleCycle;
use cell24_kirby::pairing::PairingScheme;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const ALPHABET: &[u8] = b"123456789ABCDEF";

/// `0`, `±1/√2`, `±1±√2`.
pub fn qs(s: &str) -> QSqrt2 {
    match s {
        "0" => QSqrt2::zero(),
        "1/√2" => QSqrt2::from_parts(0, 1, 1, 2),
        "-1/√2" => QSqrt2::from_parts(0, 1, -1, 2),
        _ => {
            let (a, rest) = if let Some(r) = s.strip_prefix('-') {
                (-1, r)
            } else {
                (1, s)
            };
            let rest = rest.strip_prefix('1').expect("leading 1");
            let b = match rest {
                "+√2" => 1,
                "-√2" => -1,
                _ => panic!("unexpected entry {s}"),
            };
            QSqrt2::from_parts(a, 1, b, 1)
        }
    }
}

/// The only label typo in the cycle tables: a lowercase `i'`.
pub fn fix_label_typos(row: &str) -> (String, usize) {
    let n = row.matches("i'").count();
    (row.replace("i'", "I'"), n)
}

pub type Face = BTreeSet<String>;

/// A table row: faces joined by steps. Closed rows repeat the first face.
pub fn parse_row(row: &str) -> (Vec<Face>, Vec<String>) {
    let toks: Vec<&str> = row.split(' ').collect();
    let mut faces = vec![];
    let mut steps = vec![];
    for (i, t) in toks.iter().enumerate() {
        if i % 2 == 0 {
            faces.push(t.split('∩').map(str::to_string).collect());
        } else {
            steps.push(t.to_string());
        }
    }
    (faces, steps)
}

fn invert_step(s: &str) -> String {
    match s.strip_suffix("^-1") {
        Some(l) => l.to_string(),
        None => format!("{s}^-1"),
    }
}

pub type Edge = (Face, String, Face);

/// Undirected labelled edges; two simple cycles agree up to rotation,
/// reversal and basepoint iff these sets agree.
pub fn edge_set(faces: &[Face], steps: &[String]) -> BTreeSet<Edge> {
    steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let f = faces[i].clone();
            let g = faces[(i + 1) % faces.len()].clone();
            let fwd = (f.clone(), s.clone(), g.clone());
            let back = (g, invert_step(s), f);
            fwd.min(back)
        })
        .collect()
}

pub fn closed_row_edges(row: &str) -> BTreeSet<Edge> {
    let (mut faces, steps) = parse_row(row);
    assert_eq!(faces.first(), faces.last(), "row does not close: {row}");
    faces.pop();
    edge_set(&faces, &steps)
}

pub fn cycle_edges(scheme: &PairingScheme, c: &HandleCycle) -> BTreeSet<Edge> {
    let faces: Vec<Face> = c
        .steps()
        .iter()
        .map(|s| {
            s.face
                .sides()
                .iter()
                .map(|&x| scheme.label(x).to_string())
                .collect()
        })
        .collect();
    let steps: Vec<String> = c.steps().iter().map(|s| s.step.to_string()).collect();
    edge_set(&faces, &steps)
}

/// Labels, pairings and k-parts rebuilt from a listing.
pub struct ListingOracle {
    pub side_of: HashMap<String, [i8; 4]>,
    pub kpart: HashMap<char, [i8; 4]>,
}

impl ListingOracle {
    pub fn new(rows: &[golden::ListingRow]) -> ListingOracle {
        let mut side_of = HashMap::new();
        let mut kpart = HashMap::new();
        for &(l, d, i, k) in rows {
            let up = l.to_ascii_uppercase();
            side_of.insert(up.to_string(), d);
            side_of.insert(format!("{up}'"), i);
            kpart.insert(l, k);
        }
        ListingOracle { side_of, kpart }
    }

    pub fn label_of(&self, s: [i8; 4]) -> String {
        self.side_of
            .iter()
            .find(|(_, &v)| v == s)
            .map(|(k, _)| k.clone())
            .expect("every side labelled")
    }

    /// Image of a face under one step, or None if the step is not allowed
    /// from it.
    pub fn act(&self, face: &Face, step: &str) -> Option<Face> {
        let (letter, inverse) = match step.strip_suffix("^-1") {
            Some(l) => (l, true),
            None => (step, false),
        };
        let ch = letter.chars().next()?;
        let up = ch.to_ascii_uppercase().to_string();
        let (src, dst) = if inverse {
            (format!("{up}'"), up)
        } else {
            (up.clone(), format!("{up}'"))
        };
        if !face.contains(&src) {
            return None;
        }
        let k = self.kpart[&ch];
        let target = self.side_of[&dst];
        let mut out = Face::new();
        out.insert(dst.clone());
        for l in face.iter().filter(|l| **l != src) {
            let s = self.side_of[l];
            let t: [i8; 4] = std::array::from_fn(|i| s[i] * k[i]);
            if !intersects(t, target) {
                return None;
            }
            out.insert(self.label_of(t));
        }
        Some(out)
    }

    /// Every step of a row maps the face before it to the face after it.
    pub fn check_row(&self, row: &str) -> Result<(), String> {
        let (faces, steps) = parse_row(row);
        for (i, s) in steps.iter().enumerate() {
            match self.act(&faces[i], s) {
                Some(g) if g == faces[i + 1] => {}
                got => {
                    return Err(format!(
                        "step {i} ({s}) of {row}: expected {:?}, got {got:?}",
                        faces[i + 1]
                    ))
                }
            }
        }
        Ok(())
    }
}

/// Two sides meet iff their centres are at 60°, i.e. dot product 1.
pub fn intersects(s: [i8; 4], t: [i8; 4]) -> bool {
    (0..4)
        .map(|i| i32::from(s[i]) * i32::from(t[i]))
        .sum::<i32>()
        == 1
}

pub fn all_sides() -> Vec<[i8; 4]> {
    let mut out = vec![];
    for (i, j) in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)] {
        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut v = [0i8; 4];
            v[i] = a;
            v[j] = b;
            out.push(v);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeOutcome {
    BadLength,
    BadCharacter(usize),
    FixedSide(usize),
    Parsed,
}

/// Parse outcome predicted from the encoding rules alone.
pub fn expected_parse(code: &str) -> CodeOutcome {
    let chars: Vec<char> = code.chars().collect();
    if chars.len() != 6 {
        return CodeOutcome::BadLength;
    }
    for (p, c) in chars.iter().enumerate() {
        if !c.is_ascii() || !ALPHABET.contains(&(*c as u8)) {
            return CodeOutcome::BadCharacter(p);
        }
    }
    let supports = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
    for (p, c) in chars.iter().enumerate() {
        let n = c.to_digit(16).unwrap();
        let (i, j) = supports[p];
        if n & (1 << i) == 0 && n & (1 << j) == 0 {
            return CodeOutcome::FixedSide(p);
        }
    }
    CodeOutcome::Parsed
}

/// Side pairing rebuilt from a code: k-part per group, first domain the
/// (+,+) side, second domain the least side not yet used.
pub struct CodeOracle {
    pub partner: HashMap<[i8; 4], [i8; 4]>,
    pub kpart_of: HashMap<[i8; 4], [i8; 4]>,
}

impl CodeOracle {
    pub fn new(code: &str) -> CodeOracle {
        let sides = all_sides();
        let mut partner = HashMap::new();
        let mut kpart_of = HashMap::new();
        for (g, c) in code.chars().enumerate() {
            let n = c.to_digit(16).unwrap();
            let k: [i8; 4] = std::array::from_fn(|i| if n & (1 << i) != 0 { -1 } else { 1 });
            let group = &sides[4 * g..4 * g + 4];
            let mut used = HashSet::new();
            for _ in 0..2 {
                let d = *group.iter().find(|s| !used.contains(*s)).unwrap();
                let im: [i8; 4] = std::array::from_fn(|i| d[i] * k[i]);
                used.insert(d);
                used.insert(im);
                partner.insert(d, im);
                partner.insert(im, d);
                kpart_of.insert(d, k);
                kpart_of.insert(im, k);
            }
        }
        CodeOracle { partner, kpart_of }
    }

    /// Faces reachable in one step: pick a side of the face, carry it to its
    /// partner and the rest by the k-part.
    fn neighbours(&self, face: &BTreeSet<[i8; 4]>) -> Result<Vec<BTreeSet<[i8; 4]>>, ()> {
        let mut out = vec![];
        for &s in face {
            let p = self.partner[&s];
            let k = self.kpart_of[&s];
            let mut next = BTreeSet::new();
            next.insert(p);
            for &t in face.iter().filter(|&&t| t != s) {
                let kt: [i8; 4] = std::array::from_fn(|i| t[i] * k[i]);
                if !intersects(kt, p) {
                    return Err(());
                }
                next.insert(kt);
            }
            out.push(next);
        }
        Ok(out)
    }

    /// BFS orbits of faces with `n` sides, or None if some step leaves the
    /// polytope.
    pub fn orbits(&self, n: usize) -> Option<Vec<BTreeSet<BTreeSet<[i8; 4]>>>> {
        let faces = faces_of_size(n);
        let mut seen = BTreeSet::new();
        let mut out = vec![];
        for f in faces {
            if seen.contains(&f) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut q = VecDeque::from([f.clone()]);
            seen.insert(f.clone());
            while let Some(x) = q.pop_front() {
                for y in self.neighbours(&x).ok()? {
                    if seen.insert(y.clone()) {
                        q.push_back(y);
                    }
                }
                orbit.insert(x);
            }
            out.push(orbit);
        }
        Some(out)
    }

    pub fn valid(&self) -> bool {
        match (self.orbits(2), self.orbits(3)) {
            (Some(r), Some(t)) => r.iter().all(|o| o.len() == 4) && t.iter().all(|o| o.len() == 8),
            _ => false,
        }
    }
}

pub fn faces_of_size(n: usize) -> Vec<BTreeSet<[i8; 4]>> {
    let sides = all_sides();
    let mut out = vec![];
    let mut pick = |idx: &[usize]| {
        let f: Vec<[i8; 4]> = idx.iter().map(|&i| sides[i]).collect();
        if f.iter()
            .enumerate()
            .all(|(a, x)| f[a + 1..].iter().all(|y| intersects(*x, *y)))
        {
            out.push(f.into_iter().collect());
        }
    };
    for i in 0..24 {
        for j in i + 1..24 {
            if n == 2 {
                pick(&[i, j]);
                continue;
            }
            for k in j + 1..24 {
                pick(&[i, j, k]);
            }
        }
    }
    out
}

pub fn random_code(rng: &mut StdRng) -> String {
    (0..6)
        .map(|_| ALPHABET[rng.random_range(0..ALPHABET.len())] as char)
        .collect()
}

/// `count` distinct codes that pass validation, drawn from a seeded stream.
pub fn random_valid_codes(seed: u64, count: usize) -> Vec<String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    while out.len() < count {
        let code = random_code(&mut rng);
        if !seen.insert(code.clone()) {
            continue;
        }
        let Ok(sc) = PairingScheme::parse(&code) else {
            continue;
        };
        if cell24_kirby::handles::validate(&sc).valid {
            out.push(code);
        }
    }
    out
}

pub fn signs_to_labels(scheme: &PairingScheme, f: &BTreeSet<[i8; 4]>) -> BTreeSet<String> {
    f.iter()
        .map(|&s| {
            let sv = cell24_kirby::SideVector::from_signs(s).unwrap();
            scheme.label(sv).to_string()
        })
        .collect()
}

pub fn histogram<T: Ord + Clone>(items: impl IntoIterator<Item = T>) -> BTreeMap<T, usize> {
    let mut m = BTreeMap::new();
    for x in items {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}
