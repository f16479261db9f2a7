//! Exact rational plane geometry.
//!
//! Coordinates are arbitrary-precision rationals, lines carry a canonical
//! integer representative, and turning angles are ordered through an exact
//! signed squared cosine so that no comparison ever touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("rational {0:?} is not in lowest terms with a positive denominator")]
    NotReduced(String),
}

/// Parses the strict `"p/q"` / `"p"` form. Unreduced input and
/// non-positive denominators are rejected rather than silently normalized.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, RationalParseError> {
    let malformed = || RationalParseError::Malformed(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| malformed())?;
    let den = match den {
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| malformed())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    if den.is_negative() || !num.gcd(&den).is_one() {
        return Err(RationalParseError::NotReduced(s.to_string()));
    }
    Ok(Rational::new_raw(num, den))
}

/// A point with exact rational coordinates. Ordering is lexicographic by
/// `(x, y)`, which is the greedy tie-break order for point candidates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }

    pub fn sub(&self, o: &Point) -> (Rational, Rational) {
        (&self.x - &o.x, &self.y - &o.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let x = parse_rational(&x).map_err(serde::de::Error::custom)?;
        let y = parse_rational(&y).map_err(serde::de::Error::custom)?;
        Ok(Point::new(x, y))
    }
}

/// The line `a·x + b·y = c` in canonical form: integer coefficients with
/// `gcd(|a|,|b|,|c|) = 1` and the first nonzero of `(a, b)` positive.
/// Two `Line` values are equal iff they describe the same geometric line.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// Normalizes arbitrary rational coefficients.
    pub fn from_coefficients(a: &Rational, b: &Rational, c: &Rational) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = Rational::from_integer(l);
        let (mut a, mut b, mut c) = (
            (a * &scale).to_integer(),
            (b * &scale).to_integer(),
            (c * &scale).to_integer(),
        );
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        let lead = if a.is_zero() { &b } else { &a };
        if lead.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Line> {
        Line::from_coefficients(&rat(a), &rat(b), &rat(c))
    }

    /// Line through `p` with direction `(dx, dy)`.
    pub fn through_with_direction(p: &Point, dx: &Rational, dy: &Rational) -> Result<Line> {
        // normal (dy, -dx)
        let a = dy.clone();
        let b = -dx.clone();
        let c = &a * &p.x + &b * &p.y;
        Line::from_coefficients(&a, &b, &c)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn coefficients(&self) -> (Rational, Rational, Rational) {
        (
            Rational::from_integer(self.a.clone()),
            Rational::from_integer(self.b.clone()),
            Rational::from_integer(self.c.clone()),
        )
    }

    /// Signed residual `a·x + b·y − c`; zero iff `p` is on the line.
    pub fn side(&self, p: &Point) -> Rational {
        let (a, b, c) = self.coefficients();
        a * &p.x + b * &p.y - c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side(p).is_zero()
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_parallel(&self, o: &Line) -> bool {
        (&self.a * &o.b - &o.a * &self.b).is_zero()
    }

    /// A direction vector along the line.
    pub fn direction(&self) -> (Rational, Rational) {
        (
            Rational::from_integer(self.b.clone()),
            Rational::from_integer(-self.a.clone()),
        )
    }

    /// `y` as a function of `x`; `None` for vertical lines.
    pub fn y_at(&self, x: &Rational) -> Option<Rational> {
        if self.is_vertical() {
            return None;
        }
        let (a, b, c) = self.coefficients();
        Some((c - a * x) / b)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x + {}y = {}]", self.a, self.b, self.c)
    }
}

impl Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string(), self.c.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coeffs = <[String; 3]>::deserialize(d)?;
        let mut parsed = Vec::with_capacity(3);
        for c in &coeffs {
            parsed.push(parse_rational(c).map_err(serde::de::Error::custom)?);
        }
        let line = Line::from_coefficients(&parsed[0], &parsed[1], &parsed[2])
            .map_err(serde::de::Error::custom)?;
        let canonical = [line.a.to_string(), line.b.to_string(), line.c.to_string()];
        if canonical != coeffs {
            return Err(serde::de::Error::custom(format!(
                "line {coeffs:?} is not in canonical form {canonical:?}"
            )));
        }
        Ok(line)
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(Error::DegenerateLine);
    }
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = &a * &p.x + &b * &p.y;
    Line::from_coefficients(&a, &b, &c)
}

/// Twice the signed area of `pqr`; positive for a left turn.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Rational {
    let (ux, uy) = q.sub(p);
    let (vx, vy) = r.sub(p);
    ux * vy - uy * vx
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    orientation(p, q, r).is_zero()
}

/// True iff `p` lies on the closed segment `[s, t]`.
pub fn on_segment(p: &Point, s: &Point, t: &Point) -> bool {
    if !collinear(s, t, p) {
        return false;
    }
    let within = |a: &Rational, b: &Rational, v: &Rational| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        lo <= v && v <= hi
    };
    within(&s.x, &t.x, &p.x) && within(&s.y, &t.y, &p.y)
}

/// All distinct lines through at least two of `points`, in canonical order.
pub fn candidate_lines(points: &[Point]) -> Vec<Line> {
    let mut lines = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if let Ok(l) = line_through(&points[i], &points[j]) {
                lines.push(l);
            }
        }
    }
    lines.sort();
    lines.dedup();
    lines
}

pub fn intersect(l1: &Line, l2: &Line) -> Option<Point> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return None;
    }
    let x = &l1.c * &l2.b - &l2.c * &l1.b;
    let y = &l1.a * &l2.c - &l2.a * &l1.c;
    Some(Point::new(
        Rational::new(x, det.clone()),
        Rational::new(y, det),
    ))
}

/// Kind of a turn, distinguishing the two collinear extremes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TurnKind {
    /// The path continues straight on; turn 0.
    Straight,
    /// The path doubles back; turn π.
    Reversal,
    Proper,
}

/// The turning angle at the middle of three points, `π − ∠p1p2p3`.
///
/// Ordering uses the signed squared cosine of the interior angle, which is a
/// strictly increasing function of the turn on `[0, π]`. The radian value is
/// display-only.
#[derive(Clone)]
pub struct TurnMeasure {
    key: Rational,
    kind: TurnKind,
    radians: f64,
}

impl TurnMeasure {
    /// Builds the measure from the interior-angle dot and cross products and
    /// the squared lengths of the two arms.
    fn from_products(dot: Rational, cross: Rational, norms: Rational) -> TurnMeasure {
        let mut key = &dot * &dot / &norms;
        if dot.is_negative() {
            key = -key;
        }
        let kind = if cross.is_zero() {
            if dot.is_negative() {
                TurnKind::Straight
            } else {
                TurnKind::Reversal
            }
        } else {
            TurnKind::Proper
        };
        let interior = to_f64(&cross).abs().atan2(to_f64(&dot));
        let radians = match kind {
            TurnKind::Straight => 0.0,
            TurnKind::Reversal => std::f64::consts::PI,
            TurnKind::Proper => std::f64::consts::PI - interior,
        };
        TurnMeasure { key, kind, radians }
    }

    pub fn zero() -> TurnMeasure {
        TurnMeasure { key: -Rational::one(), kind: TurnKind::Straight, radians: 0.0 }
    }

    pub fn pi() -> TurnMeasure {
        TurnMeasure { key: Rational::one(), kind: TurnKind::Reversal, radians: std::f64::consts::PI }
    }

    pub fn right_angle() -> TurnMeasure {
        TurnMeasure { key: Rational::zero(), kind: TurnKind::Proper, radians: std::f64::consts::FRAC_PI_2 }
    }

    pub fn kind(&self) -> TurnKind {
        self.kind
    }

    pub fn radians(&self) -> f64 {
        self.radians
    }

    /// Signed squared cosine of the interior angle.
    pub fn key(&self) -> &Rational {
        &self.key
    }

    pub fn is_zero(&self) -> bool {
        self.kind == TurnKind::Straight
    }

    /// `sin²` of the turning angle, exact.
    pub fn sin_squared(&self) -> Rational {
        Rational::one() - self.key.abs()
    }

    /// True iff the turn is at most π/2.
    pub fn is_at_most_right(&self) -> bool {
        !self.key.is_positive()
    }

    /// Exact certificate that the turn is at most `bound` radians, using
    /// `turn ≤ tan(turn)` below π/2. A `false` result is inconclusive only
    /// when the turn is within a cubic term of the bound.
    pub fn certify_at_most(&self, bound: &Rational) -> bool {
        if bound.is_negative() {
            return false;
        }
        match self.kind {
            TurnKind::Straight => true,
            _ if !self.key.is_negative() => *bound >= pi_upper(),
            _ => {
                // tan² = (1 − cos²) / cos²
                let cos2 = self.key.abs();
                let sin2 = Rational::one() - &cos2;
                sin2 <= bound * bound * cos2
            }
        }
    }

    /// Exact certificate that the turn is at least `bound` radians, using
    /// `sin(turn) ≤ turn`.
    pub fn certify_at_least(&self, bound: &Rational) -> bool {
        if !bound.is_positive() {
            return true;
        }
        match self.kind {
            TurnKind::Straight => false,
            _ if !self.key.is_negative() => *bound <= ratio(157, 100),
            _ => self.sin_squared() >= bound * bound,
        }
    }
}

/// For `#[serde(serialize_with)]` on rational fields.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// A rational strictly above π.
pub fn pi_upper() -> Rational {
    ratio(355, 113)
}

/// A rational strictly below π.
pub fn pi_lower() -> Rational {
    ratio(3_141_592_653, 1_000_000_000)
}

impl PartialEq for TurnMeasure {
    fn eq(&self, o: &Self) -> bool {
        self.key == o.key
    }
}
impl Eq for TurnMeasure {}
impl PartialOrd for TurnMeasure {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for TurnMeasure {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key.cmp(&o.key)
    }
}

impl fmt::Debug for TurnMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Turn({:.12} rad, {:?})", self.radians, self.kind)
    }
}

impl Serialize for TurnMeasure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TurnMeasure", 3)?;
        st.serialize_field("signed_cos2", &format_rational(&self.key))?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("radians", &self.radians)?;
        st.end()
    }
}

pub fn turn(p1: &Point, p2: &Point, p3: &Point) -> Result<TurnMeasure> {
    if p1 == p2 || p2 == p3 {
        return Err(Error::CoincidentPoints);
    }
    let (ux, uy) = p1.sub(p2);
    let (vx, vy) = p3.sub(p2);
    let dot = &ux * &vx + &uy * &vy;
    let cross = &ux * &vy - &uy * &vx;
    let norms = (&ux * &ux + &uy * &uy) * (&vx * &vx + &vy * &vy);
    Ok(TurnMeasure::from_products(dot, cross, norms))
}

/// Turn measure for integer vectors: `u = p1 − p2`, `v = p3 − p2`.
pub fn turn_from_int_vectors(u: (i64, i64), v: (i64, i64)) -> TurnMeasure {
    let dot = u.0 as i128 * v.0 as i128 + u.1 as i128 * v.1 as i128;
    let cross = u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128;
    let nu = u.0 as i128 * u.0 as i128 + u.1 as i128 * u.1 as i128;
    let nv = v.0 as i128 * v.0 as i128 + v.1 as i128 * v.1 as i128;
    TurnMeasure::from_products(
        Rational::from_integer(BigInt::from(dot)),
        Rational::from_integer(BigInt::from(cross)),
        Rational::from_integer(BigInt::from(nu) * BigInt::from(nv)),
    )
}

/// Smallest nonzero turning angle over all ordered triples of distinct,
/// non-collinear points.
pub fn min_nonzero_turn(points: &[Point]) -> Result<TurnMeasure> {
    let mut best: Option<TurnMeasure> = None;
    let n = points.len();
    for mid in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                if i == mid || j == mid || collinear(&points[i], &points[mid], &points[j]) {
                    continue;
                }
                // turn is symmetric in the two ends
                let t = turn(&points[i], &points[mid], &points[j])?;
                if best.as_ref().is_none_or(|b| t < *b) {
                    best = Some(t);
                }
            }
        }
    }
    best.ok_or(Error::AllCollinear)
}
