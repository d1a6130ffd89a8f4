//! Canonical path classes.
//!
//! A path from `0` to `i` is summarised by the couple `(α a±, β c±)`: `α`
//! unit ("outer") steps in one direction followed by `β` chord ("inner")
//! steps in one direction. Any walk collapses to such a couple without
//! getting longer ([`reduce_walk`]), and the couples that can be shortest
//! fall into six families indexed by `t` ([`canonical_classes`]).

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::params::CirculantParams;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

impl Direction {
    fn symbol(self) -> char {
        match self {
            Direction::Clockwise => '+',
            Direction::Counterclockwise => '-',
        }
    }
}

/// Step counts and directions of an "outer steps, then inner steps" path.
///
/// A zero-count segment always carries [`Direction::Clockwise`], so two
/// shapes describing the same couple compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PathShape {
    outer_count: u64,
    outer_dir: Direction,
    inner_count: u64,
    inner_dir: Direction,
}

impl PathShape {
    pub fn new(outer_count: u64, outer_dir: Direction, inner_count: u64, inner_dir: Direction) -> Self {
        let canon = |count, dir| if count == 0 { Direction::Clockwise } else { dir };
        PathShape {
            outer_count,
            outer_dir: canon(outer_count, outer_dir),
            inner_count,
            inner_dir: canon(inner_count, inner_dir),
        }
    }

    pub fn empty() -> Self {
        PathShape::new(0, Direction::Clockwise, 0, Direction::Clockwise)
    }

    pub fn outer_count(&self) -> u64 {
        self.outer_count
    }

    pub fn outer_dir(&self) -> Direction {
        self.outer_dir
    }

    pub fn inner_count(&self) -> u64 {
        self.inner_count
    }

    pub fn inner_dir(&self) -> Direction {
        self.inner_dir
    }

    pub fn len(&self) -> u64 {
        self.outer_count + self.inner_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertex reached from `0`.
    pub fn endpoint(&self, p: &CirculantParams) -> u64 {
        let n = p.n();
        let outer = signed_offset(self.outer_count % n, self.outer_dir, n);
        let inner = signed_offset(mul_mod(self.inner_count, p.s(), n), self.inner_dir, n);
        (outer + inner) % n
    }
}

impl fmt::Display for PathShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seg = |count: u64, letter: char, dir: Direction| {
            if count == 0 {
                "0".to_string()
            } else {
                format!("{count}{letter}{}", dir.symbol())
            }
        };
        write!(
            f,
            "({}, {})",
            seg(self.outer_count, 'a', self.outer_dir),
            seg(self.inner_count, 'c', self.inner_dir)
        )
    }
}

fn signed_offset(magnitude_mod_n: u64, dir: Direction, n: u64) -> u64 {
    match dir {
        Direction::Clockwise => magnitude_mod_n,
        Direction::Counterclockwise => (n - magnitude_mod_n) % n,
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// The six canonical families, in tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    P1,
    P2,
    P1t,
    P2t,
    P3t,
    P4t,
}

impl Family {
    pub fn is_t_indexed(self) -> bool {
        !matches!(self, Family::P1 | Family::P2)
    }
}

/// A canonical path class: a [`PathShape`] tagged with its family and `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PathClass {
    pub shape: PathShape,
    pub family: Family,
    pub t: Option<u64>,
}

impl PathClass {
    pub fn len(&self) -> u64 {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    /// Ordering key used to pick a representative among equal-length classes.
    pub fn rank_key(&self) -> (u64, Family, u64) {
        (self.len(), self.family, self.t.unwrap_or(0))
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t {
            Some(t) => write!(f, "{:?}[t={t}] {}", self.family, self.shape),
            None => write!(f, "{:?} {}", self.family, self.shape),
        }
    }
}

/// Quotients and remainders of `i`, `tn + i` and `tn - i` by `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueDecomposition {
    pub t: u64,
    pub q: u64,
    pub r: u64,
    pub q_t: u64,
    pub r_t: u64,
    pub qbar_t: u64,
    pub rbar_t: u64,
}

impl ResidueDecomposition {
    /// Requires `i < n` and `t >= 1` so that `tn - i` is nonnegative.
    pub fn new(p: &CirculantParams, i: u64, t: u64) -> Self {
        debug_assert!(i < p.n() && t >= 1);
        let (n, s) = (p.n(), p.s());
        let fwd = t * n + i;
        let back = t * n - i;
        ResidueDecomposition {
            t,
            q: i / s,
            r: i % s,
            q_t: fwd / s,
            r_t: fwd % s,
            qbar_t: back / s,
            rbar_t: back % s,
        }
    }
}

use Direction::{Clockwise as Cw, Counterclockwise as Ccw};

/// Lazily yields the `2 + 4 * (s / gcd(n, s))` canonical classes of `i`.
/// `i` must already be range-checked.
pub(crate) fn class_iter(p: &CirculantParams, i: u64) -> impl Iterator<Item = PathClass> + '_ {
    let (n, s) = (p.n(), p.s());
    let (q, r) = (i / s, i % s);
    let base = [
        PathClass { shape: PathShape::new(r, Cw, q, Cw), family: Family::P1, t: None },
        PathClass { shape: PathShape::new(s - r, Ccw, q + 1, Cw), family: Family::P2, t: None },
    ];
    let indexed = (1..=p.t_max()).flat_map(move |t| {
        let fwd = t * n + i;
        let back = t * n - i;
        let (q_t, r_t) = (fwd / s, fwd % s);
        let (qb, rb) = (back / s, back % s);
        let at = Some(t);
        [
            PathClass { shape: PathShape::new(r_t, Cw, q_t, Cw), family: Family::P1t, t: at },
            PathClass { shape: PathShape::new(s - r_t, Ccw, q_t + 1, Cw), family: Family::P2t, t: at },
            PathClass { shape: PathShape::new(rb, Ccw, qb, Ccw), family: Family::P3t, t: at },
            PathClass { shape: PathShape::new(s - rb, Cw, qb + 1, Ccw), family: Family::P4t, t: at },
        ]
    });
    base.into_iter().chain(indexed)
}

/// All canonical classes of vertex `i`: `P1`, `P2`, then `P1t..P4t` for each
/// `t` in `1..=s/gcd(n,s)`.
pub fn canonical_classes(p: &CirculantParams, i: u64) -> Result<Vec<PathClass>> {
    p.check_vertex(i)?;
    Ok(class_iter(p, i).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepKind {
    Outer,
    Inner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub kind: StepKind,
    pub dir: Direction,
}

/// Vertex sequence of a shape walked from `0`, outer steps first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedPath {
    pub vertices: Vec<u64>,
    pub steps: Vec<Step>,
    /// `false` when some vertex repeats, i.e. the class realizes as a walk.
    pub is_genuine_path: bool,
}

impl RealizedPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for RealizedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (step, v) in self.steps.iter().zip(&self.vertices[1..]) {
            let letter = match step.kind {
                StepKind::Outer => 'a',
                StepKind::Inner => 'c',
            };
            write!(f, " ->{letter}{} {v}", step.dir.symbol())?;
        }
        Ok(())
    }
}

/// Walks `shape` from `0` and checks that it lands on `i`.
pub fn realize_path(p: &CirculantParams, shape: &PathShape, i: u64) -> Result<RealizedPath> {
    p.check_vertex(i)?;
    if shape.endpoint(p) != i {
        return Err(Error::InconsistentClass { class: shape.to_string(), vertex: i });
    }
    let (n, s) = (p.n(), p.s());
    let len = shape.len() as usize;
    let mut vertices = Vec::with_capacity(len + 1);
    let mut steps = Vec::with_capacity(len);
    let mut at = 0u64;
    vertices.push(at);
    let segments = [
        (StepKind::Outer, shape.outer_count, shape.outer_dir, 1),
        (StepKind::Inner, shape.inner_count, shape.inner_dir, s),
    ];
    for (kind, count, dir, stride) in segments {
        let delta = signed_offset(stride, dir, n);
        for _ in 0..count {
            at = (at + delta) % n;
            vertices.push(at);
            steps.push(Step { kind, dir });
        }
    }
    let mut seen = HashSet::with_capacity(vertices.len());
    let is_genuine_path = vertices.iter().all(|v| seen.insert(*v));
    Ok(RealizedPath { vertices, steps, is_genuine_path })
}

/// Step counts of an arbitrary walk from `0`, in any order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WalkSpec {
    pub plus_outer: u64,
    pub minus_outer: u64,
    pub plus_inner: u64,
    pub minus_inner: u64,
}

impl WalkSpec {
    pub fn len(&self) -> u64 {
        self.plus_outer + self.minus_outer + self.plus_inner + self.minus_inner
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn endpoint(&self, p: &CirculantParams) -> u64 {
        let n = p.n();
        let up = self.plus_outer % n + mul_mod(self.plus_inner, p.s(), n);
        let down = self.minus_outer % n + mul_mod(self.minus_inner, p.s(), n);
        (up % n + n - down % n) % n
    }
}

/// Cancels opposing steps: the result keeps the net outer and net inner
/// counts, each in the direction of the larger side, and is never longer
/// than the walk.
pub fn reduce_walk(w: &WalkSpec) -> PathShape {
    let net = |plus: u64, minus: u64| {
        if plus >= minus {
            (plus - minus, Cw)
        } else {
            (minus - plus, Ccw)
        }
    };
    let (outer, outer_dir) = net(w.plus_outer, w.minus_outer);
    let (inner, inner_dir) = net(w.plus_inner, w.minus_inner);
    PathShape::new(outer, outer_dir, inner, inner_dir)
}

/// `k` such that a path `i -> j` translates to a path `0 -> k`.
pub fn translate_endpoints(p: &CirculantParams, i: u64, j: u64) -> Result<u64> {
    p.check_vertex(i)?;
    p.check_vertex(j)?;
    Ok(if i < j { j - i } else { p.n() - i + j } % p.n())
}

/// `P(i, j) ≈ Q(k, l)`: both translate to the same `0 -> m` path and agree on
/// length, outer count, inner count and directions.
pub fn classes_equivalent(
    p: &CirculantParams,
    a: &PathShape,
    a_ends: (u64, u64),
    b: &PathShape,
    b_ends: (u64, u64),
) -> bool {
    let ka = translate_endpoints(p, a_ends.0, a_ends.1);
    let kb = translate_endpoints(p, b_ends.0, b_ends.1);
    match (ka, kb) {
        (Ok(ka), Ok(kb)) => ka == kb && a == b,
        _ => false,
    }
}
