//! A smooth monotone curve around a point set whose sampled points force
//! small-turn tours to follow lines through the set.
//!
//! Layout: a lower half circle from `a` to `b`, then a staircase up the
//! right side alternating vertical segments and pieces of every line of the
//! set, a horizontal top, and a mirrored staircase down the left side.
//! Corners are rounded by circular arcs sampled at `t + 1` points, with `n`
//! extra points on each adjacent segment right next to the arc.

use serde::Serialize;

use crate::cover::{line_incidences, lines_cover_all};
use crate::error::{Error, Result};
use crate::geom::{collinear, min_nonzero_turn, pi_lower, rat, ratio, to_f64, Line, Point, Rational, TurnMeasure};
use crate::instance::{PointSetInstance, Tour};

type V = (f64, f64);

#[derive(Debug, Clone)]
pub struct CurveParams {
    pub mu: u32,
    pub delta: Rational,
    pub t_cap: u64,
}

impl Default for CurveParams {
    fn default() -> Self {
        CurveParams { mu: 1, delta: ratio(1, 100), t_cap: 100_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurveTag {
    Source { index: usize },
    Arc { arc: usize, index: usize },
    Segment { segment: usize, index: usize },
}

#[derive(Debug, Clone)]
enum Carrier {
    Vertical(Rational),
    Horizontal(Rational),
    Sloped(Rational, Rational),
}

impl Carrier {
    fn snap(&self, p: V, q: &Quantum) -> Point {
        match self {
            Carrier::Vertical(x) => Point::new(x.clone(), q.snap(p.1)),
            Carrier::Horizontal(y) => Point::new(q.snap(p.0), y.clone()),
            Carrier::Sloped(s, b) => {
                let x = q.snap(p.0);
                let y = s * &x + b;
                Point::new(x, y)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainSegment {
    /// `vertical`, `top`, or `line:<index into lines>`.
    pub kind: String,
    pub from: Point,
    pub to: Point,
    /// Curve positions of its `2n` samples.
    pub first: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArcDescriptor {
    pub center: Point,
    pub radius: f64,
    /// Signed sweep in radians, positive counterclockwise.
    pub sweep: f64,
    /// Curve position of its first of `t + 1` points.
    pub first: usize,
    /// Segments before and after.
    pub segments: (usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveInstance {
    pub source: Vec<Point>,
    /// Rotation `(cos, sin)` applied to the source so no line is vertical.
    pub rotation: (Point, bool),
    /// The rotated source, as it appears in the point set.
    pub base: Vec<Point>,
    pub lines: Vec<Line>,
    pub alpha_p: TurnMeasure,
    pub alpha: f64,
    pub mu: u32,
    pub s: usize,
    pub t: u64,
    pub theta: f64,
    pub scaled: bool,
    #[serde(serialize_with = "crate::geom::serialize_rational")]
    pub delta: Rational,
    pub segments: Vec<ChainSegment>,
    pub arcs: Vec<ArcDescriptor>,
    /// Samples along the closed curve, starting mid half circle and running
    /// counterclockwise.
    pub curve: Vec<Point>,
    pub tags: Vec<CurveTag>,
    /// Per line: (right piece, left piece) segment indices.
    pub pieces: Vec<(usize, usize)>,
}

impl CurveInstance {
    pub fn n(&self) -> usize {
        self.base.len()
    }

    /// Source points first, then the curve samples.
    pub fn points(&self) -> Vec<Point> {
        self.base.iter().chain(self.curve.iter()).cloned().collect()
    }

    pub fn all_tags(&self) -> Vec<CurveTag> {
        (0..self.n()).map(|index| CurveTag::Source { index }).chain(self.tags.iter().cloned()).collect()
    }

    pub fn to_instance(&self) -> PointSetInstance {
        let roles = self
            .all_tags()
            .iter()
            .map(|t| match t {
                CurveTag::Source { index } => format!("p:{index}"),
                CurveTag::Arc { arc, index } => format!("arc:{arc}:{index}"),
                CurveTag::Segment { segment, index } => format!("seg:{segment}:{index}"),
            })
            .collect();
        let mut inst = PointSetInstance::with_roles(self.points(), roles);
        inst.annotations.meta = serde_json::json!({
            "lines": self.lines.len(), "alpha_p": self.alpha_p.radians(), "alpha": self.alpha,
            "mu": self.mu, "s": self.s, "t": self.t, "theta": self.theta, "scaled": self.scaled,
        });
        inst
    }

    /// Bound `(1+δ)·factor·θ`, rounded down to a rational.
    pub fn theta_bound(&self, factor: u64) -> Rational {
        (rat(1) + &self.delta) * rat(factor as i64) * pi_lower() / rat(self.t as i64)
    }

    pub fn rotate(&self, p: &Point) -> Point {
        rotate(p, &self.rotation.0)
    }
}

fn rotate(p: &Point, cs: &Point) -> Point {
    Point::new(&cs.x * &p.x - &cs.y * &p.y, &cs.y * &p.x + &cs.x * &p.y)
}

// `(cos, sin)` of a rational rotation from the tangent half-angle `u`
fn pythagorean(u: &Rational) -> Point {
    let one = rat(1);
    let d = &one + u * u;
    Point::new((&one - u * u) / &d, rat(2) * u / &d)
}

struct Quantum {
    bits: i32,
}

impl Quantum {
    fn new(scale: f64) -> Quantum {
        Quantum { bits: 44 - scale.max(1.0).log2().ceil() as i32 }
    }

    fn snap(&self, v: f64) -> Rational {
        let k = (v * 2f64.powi(self.bits)).round() as i128;
        let num = Rational::from_integer(k.into());
        if self.bits >= 0 {
            num / Rational::from_integer(num_bigint::BigInt::from(1) << self.bits as usize)
        } else {
            num * Rational::from_integer(num_bigint::BigInt::from(1) << (-self.bits) as usize)
        }
    }
}

fn near_int(x: f64) -> Option<f64> {
    let r = x.round();
    ((x - r).abs() < 1e-9 * x.abs().max(1.0)).then_some(r)
}

/// `⌈9 n^(2+μ) π / α_P⌉`, reading near-integers as exact.
pub fn t_formula(n: usize, mu: u32, alpha_p: f64) -> u64 {
    let r = std::f64::consts::PI / alpha_p;
    let r = near_int(r).unwrap_or(r);
    let v = 9.0 * (n as f64).powi(2 + mu as i32) * r;
    near_int(v).unwrap_or_else(|| v.ceil()) as u64
}

pub fn s_formula(lines: usize) -> usize {
    2 * lines + 2 * (lines + 1) + 1
}

fn sub(a: V, b: V) -> V {
    (a.0 - b.0, a.1 - b.1)
}
fn norm(a: V) -> f64 {
    a.0.hypot(a.1)
}
fn unit(a: V) -> V {
    let l = norm(a);
    (a.0 / l, a.1 / l)
}
fn pf(p: &Point) -> V {
    p.to_f64()
}

struct ArcPlan {
    p_in: Point,
    p_out: Point,
    inner: Vec<Point>,
    before: Vec<Point>,
    after: Vec<Point>,
    center: Point,
    radius: f64,
    sweep: f64,
}

pub fn build_minmax_instance(points: &[Point], params: &CurveParams) -> Result<CurveInstance> {
    let n = points.len();
    if params.mu < 1 {
        return Err(Error::InvalidArgument("mu must be at least 1".into()));
    }
    PointSetInstance::new(points.to_vec()).validate().map_err(Error::Validation)?;
    if n < 3 || (2..n).all(|i| collinear(&points[0], &points[1], &points[i])) {
        return Err(Error::AllCollinear);
    }
    let alpha_p = min_nonzero_turn(points)?;

    // rational rotations keep every angle; find one with no vertical line
    let mut rotation = (Point::new(rat(1), rat(0)), false);
    let mut base = points.to_vec();
    let mut lines: Vec<Line> = line_incidences(&base).into_iter().map(|(l, _)| l).collect();
    let mut q = 2;
    while lines.iter().any(|l| l.is_vertical()) {
        let cs = pythagorean(&ratio(1, q));
        base = points.iter().map(|p| rotate(p, &cs)).collect();
        lines = line_incidences(&base).into_iter().map(|(l, _)| l).collect();
        rotation = (cs, true);
        q += 1;
    }

    let alpha = alpha_p.radians() / (n as f64).powi(params.mu as i32);
    let t_full = t_formula(n, params.mu, alpha_p.radians());
    let (t, scaled) = if t_full > params.t_cap { (params.t_cap, true) } else { (t_full, false) };
    let theta = std::f64::consts::PI / t as f64;
    let nl = lines.len();
    let s = s_formula(nl);

    // y = σx + β per line
    let slope: Vec<(Rational, Rational)> = lines
        .iter()
        .map(|l| {
            let (a, b, c) = l.coefficients();
            (-&a / &b, &c / &b)
        })
        .collect();
    let value = |i: usize, x: &Rational| &slope[i].0 * x + &slope[i].1;

    let mut xs: Vec<Rational> = base.iter().map(|p| p.x.clone()).collect();
    for i in 0..nl {
        for j in i + 1..nl {
            if let Some(p) = crate::geom::intersect(&lines[i], &lines[j]) {
                xs.push(p.x);
            }
        }
    }
    let x_min = xs.iter().min().unwrap().clone();
    let x_max = xs.iter().max().unwrap().clone();
    let span = (&x_max - &x_min).max(rat(1));
    let x_r = &x_max + &span;
    let x_l = &x_min - &span;
    let r_at = |j: usize| &x_r + &span * rat((nl - j) as i64);
    let l_at = |j: usize| &x_l - &span * rat((nl - j) as i64);

    let mut right: Vec<usize> = (0..nl).collect();
    right.sort_by(|&i, &j| (&slope[i].0, &slope[i].1).cmp(&(&slope[j].0, &slope[j].1)));
    let mut left: Vec<usize> = (0..nl).collect();
    left.sort_by(|&i, &j| slope[j].0.cmp(&slope[i].0).then(slope[i].1.cmp(&slope[j].1)));

    let mut ys: Vec<Rational> = base.iter().map(|p| p.y.clone()).collect();
    for j in 0..=nl {
        for i in 0..nl {
            ys.push(value(i, &r_at(j)));
            ys.push(value(i, &l_at(j)));
        }
    }
    let y0 = ys.iter().min().unwrap() - &span;
    let h = ys.iter().max().unwrap() + &span;

    // corners W_0 = b .. W_s = a and the carrier of each segment
    let mut w: Vec<Point> = vec![Point::new(r_at(0), y0.clone())];
    let mut carriers: Vec<(Carrier, String)> = vec![];
    for (j, &li) in right.iter().enumerate() {
        let x0 = r_at(j);
        let x1 = r_at(j + 1);
        carriers.push((Carrier::Vertical(x0.clone()), "vertical".into()));
        w.push(Point::new(x0.clone(), value(li, &x0)));
        carriers.push((Carrier::Sloped(slope[li].0.clone(), slope[li].1.clone()), format!("line:{li}")));
        w.push(Point::new(x1.clone(), value(li, &x1)));
    }
    carriers.push((Carrier::Vertical(x_r.clone()), "vertical".into()));
    w.push(Point::new(x_r.clone(), h.clone()));
    carriers.push((Carrier::Horizontal(h.clone()), "top".into()));
    w.push(Point::new(x_l.clone(), h.clone()));
    for (j, &li) in left.iter().enumerate().rev() {
        let x0 = l_at(j + 1);
        let x1 = l_at(j);
        carriers.push((Carrier::Vertical(x0.clone()), "vertical".into()));
        w.push(Point::new(x0.clone(), value(li, &x0)));
        carriers.push((Carrier::Sloped(slope[li].0.clone(), slope[li].1.clone()), format!("line:{li}")));
        w.push(Point::new(x1.clone(), value(li, &x1)));
    }
    carriers.push((Carrier::Vertical(l_at(0)), "vertical".into()));
    w.push(Point::new(l_at(0), y0.clone()));
    debug_assert_eq!(carriers.len(), s);

    // verticals must climb on the right and descend on the left
    for j in 0..s {
        if let Carrier::Vertical(_) = carriers[j].0 {
            let up = w[j + 1].y > w[j].y;
            if up != (j <= 2 * nl) {
                return Err(Error::Construction(format!("vertical segment {j} runs the wrong way")));
            }
        }
    }

    let scale = xs.iter().chain(ys.iter()).map(|v| to_f64(v).abs()).fold(to_f64(&span), f64::max) + to_f64(&span) * (2 * nl + 2) as f64;
    let quantum = Quantum::new(scale);
    let wf: Vec<V> = w.iter().map(pf).collect();
    let len: Vec<f64> = (0..s).map(|j| norm(sub(wf[j + 1], wf[j]))).collect();
    let dist = |i: usize, rho: f64| rho * theta * i as f64 / (10 * n) as f64;

    let mut plans: Vec<ArcPlan> = vec![];
    for j in 1..s {
        let u = unit(sub(wf[j], wf[j - 1]));
        let v = unit(sub(wf[j + 1], wf[j]));
        let cross = u.0 * v.1 - u.1 * v.0;
        let dot = u.0 * v.0 + u.1 * v.1;
        let phi = cross.abs().atan2(dot);
        let tl = len[j - 1].min(len[j]) / 4.0;
        let rho = tl / (phi / 2.0).tan();
        let side = cross.signum();
        let pin = (wf[j].0 - tl * u.0, wf[j].1 - tl * u.1);
        let pout = (wf[j].0 + tl * v.0, wf[j].1 + tl * v.1);
        let normal = (-u.1 * side, u.0 * side);
        let c = (pin.0 + rho * normal.0, pin.1 + rho * normal.1);
        let start = (pin.1 - c.1).atan2(pin.0 - c.0);
        let sweep = side * phi;
        let inner = (1..t)
            .map(|k| {
                let a = start + sweep * k as f64 / t as f64;
                Point::new(quantum.snap(c.0 + rho * a.cos()), quantum.snap(c.1 + rho * a.sin()))
            })
            .collect();
        let before = (1..=n).rev().map(|i| carriers[j - 1].0.snap((pin.0 - dist(i, rho) * u.0, pin.1 - dist(i, rho) * u.1), &quantum)).collect();
        let after = (1..=n).map(|i| carriers[j].0.snap((pout.0 + dist(i, rho) * v.0, pout.1 + dist(i, rho) * v.1), &quantum)).collect();
        plans.push(ArcPlan {
            p_in: carriers[j - 1].0.snap(pin, &quantum),
            p_out: carriers[j].0.snap(pout, &quantum),
            inner,
            before,
            after,
            center: Point::new(quantum.snap(c.0), quantum.snap(c.1)),
            radius: rho,
            sweep,
        });
    }
    // the half circle: from a round the bottom to b
    {
        let a = &w[s];
        let b = &w[0];
        let center = Point::new((&a.x + &b.x) / rat(2), y0.clone());
        let rho = to_f64(&(&b.x - &a.x)) / 2.0;
        let c = pf(&center);
        let inner = (1..t)
            .map(|k| {
                let ang = std::f64::consts::PI * (1.0 + k as f64 / t as f64);
                Point::new(quantum.snap(c.0 + rho * ang.cos()), quantum.snap(c.1 + rho * ang.sin()))
            })
            .collect();
        let up = |i: usize, p: &Point| Point::new(p.x.clone(), &p.y + quantum.snap(dist(i, rho)));
        plans.push(ArcPlan {
            p_in: a.clone(),
            p_out: b.clone(),
            inner,
            before: (1..=n).rev().map(|i| up(i, a)).collect(),
            after: (1..=n).map(|i| up(i, b)).collect(),
            center,
            radius: rho,
            sweep: std::f64::consts::PI,
        });
    }

    // lay out: segment j samples, then the arc at its end
    let mut curve = vec![];
    let mut tags = vec![];
    let mut segments = vec![];
    let mut arcs = vec![];
    for j in 0..s {
        let prev = if j == 0 { s - 1 } else { j - 1 };
        let first = curve.len();
        for (i, p) in plans[prev].after.iter().chain(plans[j].before.iter()).enumerate() {
            curve.push(p.clone());
            tags.push(CurveTag::Segment { segment: j, index: i });
        }
        segments.push(ChainSegment { kind: carriers[j].1.clone(), from: w[j].clone(), to: w[j + 1].clone(), first });
        let plan = &plans[j];
        let first = curve.len();
        let pts = std::iter::once(&plan.p_in).chain(plan.inner.iter()).chain(std::iter::once(&plan.p_out));
        for (i, p) in pts.enumerate() {
            curve.push(p.clone());
            tags.push(CurveTag::Arc { arc: j, index: i });
        }
        arcs.push(ArcDescriptor { center: plan.center.clone(), radius: plan.radius, sweep: plan.sweep, first, segments: (j, (j + 1) % s) });
    }
    // start mid half circle
    let shift = arcs[s - 1].first + t as usize / 2;
    let m = curve.len();
    curve.rotate_left(shift);
    tags.rotate_left(shift);
    let re = |i: usize| (i + m - shift) % m;
    for sg in &mut segments {
        sg.first = re(sg.first);
    }
    for a in &mut arcs {
        a.first = re(a.first);
    }

    let mut pieces = vec![(usize::MAX, usize::MAX); nl];
    for (j, &li) in right.iter().enumerate() {
        pieces[li].0 = 2 * j + 1;
    }
    for (j, &li) in left.iter().enumerate() {
        pieces[li].1 = 4 * nl + 1 - 2 * j;
    }

    Ok(CurveInstance {
        source: points.to_vec(),
        rotation,
        base,
        lines,
        alpha_p,
        alpha,
        mu: params.mu,
        s,
        t,
        theta,
        scaled,
        delta: params.delta.clone(),
        segments,
        arcs,
        curve,
        tags,
        pieces,
    })
}

/// `∠poq ≤ atan(bound)`, certified exactly.
fn angle_at_most(o: &Point, p: &Point, q: &Point, bound: &Rational) -> bool {
    let (ax, ay) = p.sub(o);
    let (bx, by) = q.sub(o);
    let dot = &ax * &bx + &ay * &by;
    if dot <= rat(0) {
        return false;
    }
    let cross = &ax * &by - &ay * &bx;
    &cross * &cross <= bound * bound * &dot * &dot
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveChecks {
    pub s_formula: bool,
    pub point_count: bool,
    pub distinct: bool,
    pub monotone: bool,
    pub theta_property: bool,
    pub sub_arcs: bool,
}

impl CurveChecks {
    pub fn all(&self) -> bool {
        self.s_formula && self.point_count && self.distinct && self.monotone && self.theta_property && self.sub_arcs
    }
}

pub fn curve_checks(c: &CurveInstance) -> CurveChecks {
    let n = c.n();
    let t = c.t as usize;
    let m = c.curve.len();
    let at = |i: usize| &c.curve[i % m];
    let s_formula = c.s == s_formula(c.lines.len()) && c.segments.len() == c.s && c.arcs.len() == c.s;
    let point_count = n + m == n + c.s * (t + 1 + 2 * n);
    let all = c.points();
    let distinct = all.iter().collect::<std::collections::HashSet<_>>().len() == all.len();

    // the upper chain b → a never moves right, the half circle a → b always does
    let half = &c.arcs[c.s - 1];
    let b_pos = c.segments[0].first;
    let upper = (half.first + m - b_pos) % m;
    let monotone = (0..upper).all(|i| at(b_pos + i + 1).x <= at(b_pos + i).x) && (0..t).all(|i| at(half.first + i + 1).x > at(half.first + i).x);

    let bound = c.theta_bound(1);
    let theta_property = c.arcs.iter().all(|a| {
        let f = a.first;
        let p_in = at(f);
        let p_out = at(f + t);
        (1..=n).all(|i| {
            let q_in = at(f + m - i);
            let q_out = at(f + t + i);
            (1..=t).all(|k| angle_at_most(at(f + k), p_in, q_in, &bound)) && (0..t).all(|k| angle_at_most(at(f + k), p_out, q_out, &bound))
        })
    });
    let sub_arcs = c.arcs.iter().all(|a| (0..t).all(|k| angle_at_most(&a.center, at(a.first + k), at(a.first + k + 1), &bound)));
    CurveChecks { s_formula, point_count, distinct, monotone, theta_property, sub_arcs }
}

#[derive(Debug, Clone, Serialize)]
pub struct MinmaxTour {
    pub tour: Tour,
    /// Rounds in tour order: color and the line shortcut taken, if any.
    pub rounds: Vec<(usize, Option<usize>)>,
    pub max_turn: TurnMeasure,
    pub bound_ok: bool,
    pub shortcuts_straight: bool,
    pub hamiltonian: bool,
}

struct Round {
    color: usize,
    line: Option<usize>,
    before: Vec<usize>,
    after: Vec<usize>,
}

/// One round per cover line plus a final sweep. Curve point `i` has color
/// `i mod (k+1)`; the round for line `ℓ` visits its color up to the right
/// piece of `ℓ`, runs along `ℓ` through the set, and resumes at the left
/// piece. The sweep picks up everything skipped.
pub fn lines_to_minmax_tour(cover: &[Line], c: &CurveInstance) -> Result<MinmaxTour> {
    let mut ids: Vec<usize> = vec![];
    for l in cover {
        let (a, b, cc) = l.coefficients();
        let img = if c.rotation.1 {
            // a rotated line is a·R⁻¹p: rotate the normal the same way
            let nrm = c.rotate(&Point::new(a, b));
            Line::from_coefficients(&nrm.x, &nrm.y, &cc)?
        } else {
            l.clone()
        };
        let id = c.lines.iter().position(|x| *x == img).ok_or_else(|| Error::InvalidArgument(format!("{l:?} is not a line through two points of the set")))?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    let chosen: Vec<Line> = ids.iter().map(|&i| c.lines[i].clone()).collect();
    if !lines_cover_all(&c.base, &chosen) {
        return Err(Error::InvalidArgument("lines do not cover the point set".into()));
    }
    let k = ids.len();
    let m = c.curve.len();
    let colors = k + 1;
    let mut taken = vec![false; m];
    let mut rounds = vec![];
    for (r, &li) in ids.iter().enumerate() {
        let color = r + 1;
        let (sr, sl) = c.pieces[li];
        let right_end = c.segments[sr].first + 2 * c.n() - 1;
        let left_start = c.segments[sl].first;
        let before: Vec<usize> = (0..=right_end).filter(|i| i % colors == color).collect();
        let after: Vec<usize> = (left_start..m).filter(|i| i % colors == color).collect();
        for &i in before.iter().chain(after.iter()) {
            taken[i] = true;
        }
        rounds.push(Round { color, line: Some(li), before, after });
    }
    rounds.insert(0, Round { color: 0, line: None, before: (0..m).filter(|&i| !taken[i]).collect(), after: vec![] });

    let first = |r: &Round| *r.before.first().unwrap();
    let last = |r: &Round| *r.after.last().or(r.before.last()).unwrap();
    let gap = |a: &Round, b: &Round| m - last(a) + first(b);
    let order = round_order(&rounds, k + 3, &gap);

    let mut verts = vec![];
    let mut seen_source = vec![false; c.n()];
    let mut shortcut_positions = vec![];
    for &r in &order {
        let round = &rounds[r];
        verts.extend(round.before.iter().map(|&i| c.curve[i].clone()));
        if let Some(li) = round.line {
            let mut on: Vec<usize> = (0..c.n()).filter(|&i| !seen_source[i] && c.lines[li].contains(&c.base[i])).collect();
            on.sort_by(|&i, &j| c.base[j].x.cmp(&c.base[i].x));
            for i in on {
                seen_source[i] = true;
                shortcut_positions.push(verts.len());
                verts.push(c.base[i].clone());
            }
        }
        verts.extend(round.after.iter().map(|&i| c.curve[i].clone()));
    }
    let tour = Tour::new(verts).map_err(Error::Validation)?;
    let all = c.points();
    let hamiltonian = tour.len() == all.len() && {
        let a: std::collections::HashSet<&Point> = tour.vertices.iter().collect();
        a.len() == all.len() && all.iter().all(|p| a.contains(p))
    };
    let turns = tour.turns();
    let shortcuts_straight = shortcut_positions.iter().all(|&i| turns[i].is_zero());
    let max_turn = turns.iter().max().unwrap().clone();
    let bound_ok = max_turn.certify_at_most(&c.theta_bound(k as u64 + 2));
    let rounds = order.iter().map(|&r| (rounds[r].color, rounds[r].line)).collect();
    Ok(MinmaxTour { tour, rounds, max_turn, bound_ok, shortcuts_straight, hamiltonian })
}

/// A cyclic round order, sweep first, whose seams skip at most `limit`
/// curve steps; falls back to the order with the smallest worst seam.
fn round_order(rounds: &[Round], limit: usize, gap: &dyn Fn(&Round, &Round) -> usize) -> Vec<usize> {
    fn go(rounds: &[Round], order: &mut Vec<usize>, used: &mut [bool], worst: usize, best: &mut (usize, Vec<usize>), limit: usize, gap: &dyn Fn(&Round, &Round) -> usize) {
        if worst >= best.0 || best.0 <= limit {
            return;
        }
        let last = *order.last().unwrap();
        if order.len() == rounds.len() {
            let w = worst.max(gap(&rounds[last], &rounds[order[0]]));
            if w < best.0 {
                *best = (w, order.clone());
            }
            return;
        }
        for r in 1..rounds.len() {
            if used[r] {
                continue;
            }
            used[r] = true;
            order.push(r);
            go(rounds, order, used, worst.max(gap(&rounds[last], &rounds[r])), best, limit, gap);
            order.pop();
            used[r] = false;
        }
    }
    let mut best = (usize::MAX, (0..rounds.len()).collect());
    let mut used = vec![false; rounds.len()];
    go(rounds, &mut vec![0], &mut used, 0, &mut best, limit, gap);
    best.1
}
