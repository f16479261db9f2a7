//! Problem instances, solutions and their JSON file format.
//!
//! Every file is an envelope `{"kind": ..., "data": ..., "annotations": ...}`.
//! Rationals are written as strings `"p/q"` (or `"p"`), lines as their three
//! canonical integer coefficients.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::geom::{self, Line, Point, TurnMeasure};

/// A named invariant violation; `code()` is the machine-readable reason.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error("point {0} duplicates an earlier point")]
    DuplicatePoint(usize),
    #[error("segment {0} has identical endpoints")]
    DegenerateSegment(usize),
    #[error("line {0} duplicates an earlier line")]
    DuplicateLine(usize),
    #[error("{len} role tags for {points} points")]
    AnnotationLength { points: usize, len: usize },
    #[error("clause {0} must have exactly two literals")]
    ClauseArity(usize),
    #[error("clause {0} uses one variable twice")]
    ClauseRepeatsVariable(usize),
    #[error("literal {literal} in clause {clause} names no variable")]
    LiteralOutOfRange { clause: usize, literal: i64 },
    #[error("variable {variable} occurs {count} times, expected 3")]
    OccurrenceCount { variable: usize, count: usize },
    #[error("variable {0} occurs with a single sign")]
    UniformSigns(usize),
    #[error("expected 3n = 2m, got n = {n}, m = {m}")]
    CountMismatch { n: usize, m: usize },
    #[error("vertex {vertex} has degree {degree}; graph is not cubic")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge {0} is a loop or repeats an earlier edge")]
    NotSimple(usize),
    #[error("edge {0} names a vertex out of range")]
    VertexOutOfRange(usize),
    #[error("marked edge is not an edge of the graph")]
    MarkedEdgeMissing,
    #[error("tour needs at least two vertices")]
    TourTooShort,
    #[error("tour vertices {0} and its successor coincide")]
    TourRepeatsVertex(usize),
    #[error("file kind {found:?} where {expected:?} was expected")]
    WrongKind { expected: String, found: String },
}

impl ValidationError {
    pub fn code(&self) -> &'static str {
        use ValidationError::*;
        match self {
            DuplicatePoint(_) => "duplicate-point",
            DegenerateSegment(_) => "degenerate-segment",
            DuplicateLine(_) => "duplicate-line",
            AnnotationLength { .. } => "annotation-length",
            ClauseArity(_) => "clause-arity",
            ClauseRepeatsVariable(_) => "clause-repeats-variable",
            LiteralOutOfRange { .. } => "literal-out-of-range",
            OccurrenceCount { .. } => "occurrence-count",
            UniformSigns(_) => "uniform-signs",
            CountMismatch { .. } => "count-mismatch",
            NotCubic { .. } => "not-cubic",
            NotSimple(_) => "not-simple",
            VertexOutOfRange(_) => "vertex-out-of-range",
            MarkedEdgeMissing => "marked-edge-missing",
            TourTooShort => "tour-too-short",
            TourRepeatsVertex(_) => "tour-repeats-vertex",
            WrongKind { .. } => "wrong-kind",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Annotations {
    /// One role tag per point, e.g. `"v2^3"`, `"c1"`, `"cluster:a"`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub roles: Vec<String>,
    /// Free-form derived quantities recorded by a builder.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub meta: Value,
}

impl Annotations {
    pub fn is_empty(&self) -> bool {
        self.roles.is_empty() && self.meta.is_null()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSetInstance {
    pub points: Vec<Point>,
    pub annotations: Annotations,
}

impl PointSetInstance {
    pub fn new(points: Vec<Point>) -> Self {
        PointSetInstance { points, annotations: Annotations::default() }
    }

    pub fn with_roles(points: Vec<Point>, roles: Vec<String>) -> Self {
        PointSetInstance { points, annotations: Annotations { roles, meta: Value::Null } }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        let mut seen = HashSet::new();
        for (i, p) in self.points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(ValidationError::DuplicatePoint(i));
            }
        }
        let roles = &self.annotations.roles;
        if !roles.is_empty() && roles.len() != self.points.len() {
            return Err(ValidationError::AnnotationLength { points: self.points.len(), len: roles.len() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SegmentSetInstance {
    pub segments: Vec<(Point, Point)>,
}

impl SegmentSetInstance {
    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        match self.segments.iter().position(|(s, t)| s == t) {
            Some(i) => Err(ValidationError::DegenerateSegment(i)),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct LineSetInstance {
    pub lines: Vec<Line>,
}

impl LineSetInstance {
    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        let mut seen = HashSet::new();
        for (i, l) in self.lines.iter().enumerate() {
            if !seen.insert(l) {
                return Err(ValidationError::DuplicateLine(i));
            }
        }
        Ok(())
    }
}

/// A literal: `+v` or `-v` for variable `v` in `1..=n`.
pub type Literal = i64;

/// E3-Occ-Max-E2-SAT: two literals per clause, three occurrences per
/// variable, never all of one sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatInstance {
    pub n: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl SatInstance {
    pub fn new(n: usize, clauses: Vec<[Literal; 2]>) -> Self {
        SatInstance { n, clauses: clauses.into_iter().map(|c| c.to_vec()).collect() }
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        let mut count = vec![0usize; self.n + 1];
        let mut positive = vec![0usize; self.n + 1];
        for (j, c) in self.clauses.iter().enumerate() {
            if c.len() != 2 {
                return Err(ValidationError::ClauseArity(j));
            }
            for &lit in c {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > self.n {
                    return Err(ValidationError::LiteralOutOfRange { clause: j, literal: lit });
                }
                count[v] += 1;
                if lit > 0 {
                    positive[v] += 1;
                }
            }
            if c[0].abs() == c[1].abs() {
                return Err(ValidationError::ClauseRepeatsVariable(j));
            }
        }
        for v in 1..=self.n {
            if count[v] != 3 {
                return Err(ValidationError::OccurrenceCount { variable: v, count: count[v] });
            }
            if positive[v] == 0 || positive[v] == 3 {
                return Err(ValidationError::UniformSigns(v));
            }
        }
        if 3 * self.n != 2 * self.m() {
            return Err(ValidationError::CountMismatch { n: self.n, m: self.m() });
        }
        Ok(())
    }

    /// Number of clauses satisfied by `assignment` (indexed by variable − 1).
    pub fn satisfied(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|c| c.iter().any(|&l| literal_true(l, assignment)))
            .count()
    }

    /// Maximum satisfiable clause count by enumerating all assignments.
    pub fn max_satisfied(&self) -> (usize, Vec<bool>) {
        let mut best = (0, vec![false; self.n]);
        for mask in 0u64..(1u64 << self.n) {
            let g: Vec<bool> = (0..self.n).map(|i| mask >> i & 1 == 1).collect();
            let w = self.satisfied(&g);
            if w > best.0 {
                best = (w, g);
            }
        }
        best
    }
}

pub fn literal_true(lit: Literal, assignment: &[bool]) -> bool {
    let v = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        v
    } else {
        !v
    }
}

/// A cubic graph with one edge that a Hamiltonian circuit must use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicGraphInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub marked_edge: (usize, usize),
}

impl CubicGraphInstance {
    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        let mut degree = vec![0usize; self.n];
        let mut seen = HashSet::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u >= self.n || v >= self.n {
                return Err(ValidationError::VertexOutOfRange(i));
            }
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return Err(ValidationError::NotSimple(i));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some((vertex, &d)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(ValidationError::NotCubic { vertex, degree: d });
        }
        let (s, t) = self.marked_edge;
        if !seen.contains(&(s.min(t), s.max(t))) {
            return Err(ValidationError::MarkedEdgeMissing);
        }
        Ok(())
    }
}

/// A chosen family of covering objects plus what it covers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverSolution<T> {
    pub chosen: Vec<T>,
    /// Sorted indices of covered input elements.
    pub covered: Vec<usize>,
    /// True only when an exact solver finished its search.
    pub optimal: bool,
}

impl<T> CoverSolution<T> {
    pub fn size(&self) -> usize {
        self.chosen.len()
    }
}

/// A closed polygonal chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tour {
    pub vertices: Vec<Point>,
}

impl Tour {
    pub fn new(vertices: Vec<Point>) -> std::result::Result<Tour, ValidationError> {
        let t = Tour { vertices };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        let n = self.vertices.len();
        if n < 2 {
            return Err(ValidationError::TourTooShort);
        }
        for i in 0..n {
            if self.vertices[i] == self.vertices[(i + 1) % n] {
                return Err(ValidationError::TourRepeatsVertex(i));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Turn at every vertex, in order.
    pub fn turns(&self) -> Vec<TurnMeasure> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let prev = &self.vertices[(i + n - 1) % n];
                let next = &self.vertices[(i + 1) % n];
                geom::turn(prev, &self.vertices[i], next).expect("tour vertices validated distinct")
            })
            .collect()
    }

    /// Maximal straight runs: the number of vertices with a nonzero turn.
    /// A doubled segment `a→b→a` has two reversals and so two links.
    pub fn links(&self) -> usize {
        self.turns().iter().filter(|t| !t.is_zero()).count()
    }

    pub fn max_turn(&self) -> TurnMeasure {
        self.turns().into_iter().max().expect("tour has vertices")
    }

    pub fn reversed(&self) -> Tour {
        let mut v = self.vertices.clone();
        v.reverse();
        Tour { vertices: v }
    }

    pub fn rotated(&self, k: usize) -> Tour {
        let mut v = self.vertices.clone();
        let n = v.len();
        v.rotate_left(k % n);
        Tour { vertices: v }
    }
}

/// `matrix[i][j]` is true iff point `i` lies on line `j`.
pub fn incidence(points: &[Point], lines: &[Line]) -> Vec<Vec<bool>> {
    points.iter().map(|p| lines.iter().map(|l| l.contains(p)).collect()).collect()
}

/// Indices of points covered by at least one of `lines`.
pub fn covered_by_lines(points: &[Point], lines: &[Line]) -> Vec<usize> {
    (0..points.len()).filter(|&i| lines.iter().any(|l| l.contains(&points[i]))).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Points(PointSetInstance),
    Segments(SegmentSetInstance),
    Lines(LineSetInstance),
    Sat(SatInstance),
    CubicGraph(CubicGraphInstance),
    Tour(Tour),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Points(_) => "points",
            Instance::Segments(_) => "segments",
            Instance::Lines(_) => "lines",
            Instance::Sat(_) => "sat",
            Instance::CubicGraph(_) => "cubic-graph",
            Instance::Tour(_) => "tour",
        }
    }

    pub fn validate(&self) -> std::result::Result<(), ValidationError> {
        match self {
            Instance::Points(p) => p.validate(),
            Instance::Segments(s) => s.validate(),
            Instance::Lines(l) => l.validate(),
            Instance::Sat(s) => s.validate(),
            Instance::CubicGraph(g) => g.validate(),
            Instance::Tour(t) => t.validate(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    kind: String,
    data: Value,
    #[serde(default, skip_serializing_if = "Annotations::is_empty")]
    annotations: Annotations,
}

#[derive(Serialize, Deserialize)]
struct PointsData {
    points: Vec<Point>,
}

pub fn to_json(instance: &Instance) -> Result<String> {
    let (data, annotations) = match instance {
        Instance::Points(p) => (
            serde_json::to_value(PointsData { points: p.points.clone() })?,
            p.annotations.clone(),
        ),
        Instance::Segments(s) => (serde_json::to_value(s)?, Annotations::default()),
        Instance::Lines(l) => (serde_json::to_value(l)?, Annotations::default()),
        Instance::Sat(s) => (serde_json::to_value(s)?, Annotations::default()),
        Instance::CubicGraph(g) => (serde_json::to_value(g)?, Annotations::default()),
        Instance::Tour(t) => (serde_json::to_value(t)?, Annotations::default()),
    };
    let env = Envelope { kind: instance.kind().to_string(), data, annotations };
    let mut s = serde_json::to_string_pretty(&env)?;
    s.push('\n');
    Ok(s)
}

/// Parses and validates an instance. When `expected` is given the file kind
/// must match it.
pub fn from_json(text: &str, expected: Option<&str>) -> Result<Instance> {
    let env: Envelope = serde_json::from_str(text)?;
    if let Some(k) = expected {
        if k != env.kind {
            return Err(ValidationError::WrongKind { expected: k.to_string(), found: env.kind }.into());
        }
    }
    let inst = match env.kind.as_str() {
        "points" => {
            let d: PointsData = serde_json::from_value(env.data)?;
            Instance::Points(PointSetInstance { points: d.points, annotations: env.annotations })
        }
        "segments" => Instance::Segments(serde_json::from_value(env.data)?),
        "lines" => Instance::Lines(serde_json::from_value(env.data)?),
        "sat" => Instance::Sat(serde_json::from_value(env.data)?),
        "cubic-graph" => Instance::CubicGraph(serde_json::from_value(env.data)?),
        "tour" => Instance::Tour(serde_json::from_value(env.data)?),
        other => {
            return Err(Error::InvalidArgument(format!("unknown instance kind {other:?}")));
        }
    };
    inst.validate()?;
    Ok(inst)
}

pub fn load_instance(path: impl AsRef<Path>, expected: Option<&str>) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text, expected)
}

pub fn save_instance(instance: &Instance, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(instance)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{line_through, ratio};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn sat_validation_reasons() {
        let fig4 = SatInstance::new(2, vec![[1, 2], [-1, 2], [-1, -2]]);
        assert!(fig4.validate().is_ok());
        let twice = SatInstance::new(2, vec![[1, 2], [-1, 2], [-2, 2]]);
        assert_eq!(twice.validate().unwrap_err().code(), "clause-repeats-variable");
        let short = SatInstance::new(2, vec![[1, 2], [-1, 2], [-2, -2]]);
        assert!(short.validate().is_err());
        let under = SatInstance { n: 2, clauses: vec![vec![1, 2], vec![-1, 2], vec![-1, 1]] };
        assert!(under.validate().is_err());
        let uniform = SatInstance::new(2, vec![[1, 2], [1, -2], [1, -2]]);
        assert_eq!(uniform.validate().unwrap_err().code(), "uniform-signs");
        let four = SatInstance::new(2, vec![[1, 2], [-1, 2], [-1, -2], [1, -2]]);
        assert_eq!(four.validate().unwrap_err().code(), "occurrence-count");
    }

    #[test]
    fn cubic_validation_reasons() {
        let k4 = CubicGraphInstance {
            n: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            marked_edge: (0, 1),
        };
        assert!(k4.validate().is_ok());
        let mut c4 = k4.clone();
        c4.edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        assert_eq!(c4.validate().unwrap_err().code(), "not-cubic");
        let mut unmarked = k4.clone();
        unmarked.marked_edge = (0, 0);
        assert_eq!(unmarked.validate().unwrap_err().code(), "marked-edge-missing");
    }

    #[test]
    fn incidence_examples() {
        let pts = [p(0, 0), p(1, 1), p(2, 2), p(5, 0)];
        let l = line_through(&pts[0], &pts[1]).unwrap();
        let m = incidence(&pts, &[l]);
        assert_eq!(m.iter().map(|r| r[0]).collect::<Vec<_>>(), vec![true, true, true, false]);
    }

    #[test]
    fn json_round_trip_keeps_rationals_exact() {
        let mut inst = PointSetInstance::with_roles(
            vec![Point::new(ratio(1, 3), ratio(-7, 2)), p(4, 0)],
            vec!["v1^1".into(), "c1".into()],
        );
        inst.annotations.meta = serde_json::json!({"seed": 3});
        let text = to_json(&Instance::Points(inst.clone())).unwrap();
        assert!(text.contains("\"1/3\"") && text.contains("\"-7/2\""));
        let back = from_json(&text, Some("points")).unwrap();
        assert_eq!(back, Instance::Points(inst));
        assert!(from_json(&text, Some("sat")).is_err());
    }

    #[test]
    fn json_rejects_bad_rationals() {
        let text = r#"{"kind":"points","data":{"points":[["2/4","0"]]}}"#;
        assert!(matches!(from_json(text, None), Err(Error::Json(_))));
        let text = r#"{"kind":"points","data":{"points":[["1/0","0"]]}}"#;
        assert!(from_json(text, None).is_err());
        let dup = r#"{"kind":"points","data":{"points":[["1","0"],["1","0"]]}}"#;
        match from_json(dup, None) {
            Err(Error::Validation(v)) => assert_eq!(v.code(), "duplicate-point"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_canonical_line_rejected() {
        let text = r#"{"kind":"lines","data":{"lines":[["2","-2","0"]]}}"#;
        assert!(from_json(text, None).is_err());
        let text = r#"{"kind":"lines","data":{"lines":[["1","-1","0"]]}}"#;
        assert!(from_json(text, None).is_ok());
    }

    #[test]
    fn tour_links_conventions() {
        let sq = Tour::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        assert_eq!(sq.links(), 4);
        let doubled = Tour::new(vec![p(0, 0), p(3, 0)]).unwrap();
        assert_eq!(doubled.links(), 2);
        // collinear continuation merges into one link
        let merged = Tour::new(vec![p(0, 0), p(1, 0), p(2, 0), p(1, 1)]).unwrap();
        assert_eq!(merged.links(), 3);
        assert!(Tour::new(vec![p(0, 0)]).is_err());
        assert!(Tour::new(vec![p(0, 0), p(0, 0), p(1, 1)]).is_err());
    }
}
