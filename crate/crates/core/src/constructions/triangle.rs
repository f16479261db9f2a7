//! Three shrunken copies of a point set placed along the edges of a
//! triangle, so a line cover of size k becomes a covering tour of 3k links.

use rand::Rng;
use serde::Serialize;

use crate::cover::{lines_cover_all, point_on_line};
use crate::error::{Error, Result};
use num_traits::Signed;

use crate::geom::{intersect, line_through, rat, ratio, serialize_rational, Line, Point, Rational};
use crate::instance::{PointSetInstance, Tour};
use crate::rng;
use crate::tour::validate_covering_tour;

pub const CLUSTERS: [&str; 3] = ["a", "b", "c"];

/// `p ↦ (x + λy − cx)·s, (y − cy)·s·ε`: shear off vertical pairs, squash
/// slopes, shrink into the small box.
#[derive(Debug, Clone, Serialize)]
pub struct Normalizer {
    #[serde(serialize_with = "serialize_rational")]
    pub lambda: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub eps: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub scale: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub cx: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub cy: Rational,
}

impl Normalizer {
    pub fn apply(&self, p: &Point) -> Point {
        let x = &p.x + &self.lambda * &p.y - &self.cx;
        let y = (&p.y - &self.cy) * &self.eps;
        Point::new(x * &self.scale, y * &self.scale)
    }
}

#[derive(Debug, Clone)]
pub struct TriangleInstance {
    pub source: Vec<Point>,
    /// Cluster a, then b, then c; each a copy of the source in order.
    pub points: PointSetInstance,
    /// a', b', c'.
    pub outer: [Point; 3],
    /// Cluster centers a, b, c: midpoints of a'b', b'c', c'a'.
    pub centers: [Point; 3],
    /// Half edge vectors, counterclockwise.
    pub frames: [(Rational, Rational); 3],
    pub normalizer: Normalizer,
    pub radius: Rational,
    /// Cluster directions must satisfy sin(angle to edge) ≤ this, which is
    /// below sin 1°.
    pub spread_sin: Rational,
}

impl TriangleInstance {
    pub fn n(&self) -> usize {
        self.source.len()
    }

    pub fn cluster(&self, x: usize) -> &[Point] {
        let n = self.n();
        &self.points.points[x * n..(x + 1) * n]
    }

    pub fn place(&self, x: usize, p: &Point) -> Point {
        let q = self.normalizer.apply(p);
        let (ex, ey) = &self.frames[x];
        let c = &self.centers[x];
        Point::new(&c.x + &q.x * ex - &q.y * ey, &c.y + &q.x * ey + &q.y * ex)
    }

    pub fn place_line(&self, x: usize, l: &Line) -> Result<Line> {
        let p = point_on_line(l);
        let (dx, dy) = l.direction();
        let q = Point::new(&p.x + dx, &p.y + dy);
        line_through(&self.place(x, &p), &self.place(x, &q))
    }
}

fn outer_triangle() -> [Point; 3] {
    // 97/56 ≈ √3
    [Point::from_ints(0, 0), Point::from_ints(2, 0), Point::new(rat(1), ratio(97, 56))]
}

fn normalizer(points: &[Point], lambda: Rational) -> Option<Normalizer> {
    let sheared: Vec<(Rational, Rational)> = points.iter().map(|p| (&p.x + &lambda * &p.y, p.y.clone())).collect();
    let mut steep = rat(0);
    for i in 0..sheared.len() {
        for j in i + 1..sheared.len() {
            let dx = &sheared[j].0 - &sheared[i].0;
            let dy = &sheared[j].1 - &sheared[i].1;
            if dx == rat(0) {
                return None;
            }
            steep = steep.max((dy / dx).abs());
        }
    }
    let one = rat(1);
    let eps = if &steep * rat(200) > one { ratio(1, 200) / &steep } else { one.clone() };
    let min = |f: &dyn Fn(&(Rational, Rational)) -> Rational| sheared.iter().map(f).min().unwrap();
    let max = |f: &dyn Fn(&(Rational, Rational)) -> Rational| sheared.iter().map(f).max().unwrap();
    let cx = (min(&|p| p.0.clone()) + max(&|p| p.0.clone())) / rat(2);
    let cy = (min(&|p| p.1.clone()) + max(&|p| p.1.clone())) / rat(2);
    let half = (max(&|p| p.0.clone()) - &cx).max((max(&|p| p.1.clone()) - &cy) * &eps);
    let scale = if half == rat(0) { one } else { ratio(1, 400) / half };
    Some(Normalizer { lambda, eps, scale, cx, cy })
}

pub fn build_triangle_instance(points: &[Point], seed: u64) -> Result<TriangleInstance> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument("need at least two points".into()));
    }
    PointSetInstance::new(points.to_vec()).validate().map_err(Error::Validation)?;
    let outer = outer_triangle();
    let mid = |p: &Point, q: &Point| Point::new((&p.x + &q.x) / rat(2), (&p.y + &q.y) / rat(2));
    let half = |p: &Point, q: &Point| ((&q.x - &p.x) / rat(2), (&q.y - &p.y) / rat(2));
    let centers = [mid(&outer[0], &outer[1]), mid(&outer[1], &outer[2]), mid(&outer[2], &outer[0])];
    let frames = [half(&outer[0], &outer[1]), half(&outer[1], &outer[2]), half(&outer[2], &outer[0])];
    let mut rng = rng::stream(seed, "triangle");
    for attempt in 0..200 {
        let lambda = if attempt == 0 { rat(0) } else { ratio(rng.gen_range(-50..=50), rng.gen_range(1..=20)) };
        let Some(normalizer) = normalizer(points, lambda) else { continue };
        let mut tri = TriangleInstance {
            source: points.to_vec(),
            points: PointSetInstance::new(vec![]),
            outer: outer.clone(),
            centers: centers.clone(),
            frames: frames.clone(),
            normalizer,
            radius: ratio(1, 100),
            spread_sin: ratio(1, 58),
        };
        let mut q = vec![];
        let mut roles = vec![];
        for (x, name) in CLUSTERS.iter().enumerate() {
            for (i, p) in points.iter().enumerate() {
                q.push(tri.place(x, p));
                roles.push(format!("{name}:{i}"));
            }
        }
        tri.points = PointSetInstance::with_roles(q, roles);
        if check_triangle(&tri).is_ok() {
            return Ok(tri);
        }
    }
    Err(Error::Construction(format!("no valid placement found, seed {seed}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangleChecks {
    pub in_disks: bool,
    pub spread_ok: bool,
    pub inter_cluster_pairs_only: bool,
}

impl TriangleChecks {
    pub fn all(&self) -> bool {
        self.in_disks && self.spread_ok && self.inter_cluster_pairs_only
    }
}

pub fn triangle_checks(tri: &TriangleInstance) -> TriangleChecks {
    let r2 = &tri.radius * &tri.radius;
    let s2 = &tri.spread_sin * &tri.spread_sin;
    let in_disks = (0..3).all(|x| {
        let c = &tri.centers[x];
        tri.cluster(x).iter().all(|p| {
            let (dx, dy) = p.sub(c);
            &dx * &dx + &dy * &dy <= r2
        })
    });
    let spread_ok = (0..3).all(|x| {
        let (ex, ey) = &tri.frames[x];
        let cl = tri.cluster(x);
        (0..cl.len()).all(|i| {
            (i + 1..cl.len()).all(|j| {
                let (dx, dy) = cl[j].sub(&cl[i]);
                let cross = &dx * ey - &dy * ex;
                let norms = (&dx * &dx + &dy * &dy) * (ex * ex + ey * ey);
                &cross * &cross <= &s2 * norms
            })
        })
    });
    let n = tri.n();
    let all = &tri.points.points;
    let inter_cluster_pairs_only = (0..all.len()).all(|i| {
        (i + 1..all.len()).filter(|&j| j / n != i / n).all(|j| {
            let l = line_through(&all[i], &all[j]).expect("distinct points");
            all.iter().filter(|p| l.contains(p)).count() == 2
        })
    });
    TriangleChecks { in_disks, spread_ok, inter_cluster_pairs_only }
}

fn check_triangle(tri: &TriangleInstance) -> Result<()> {
    let c = triangle_checks(tri);
    if c.all() {
        Ok(())
    } else {
        Err(Error::Construction(format!("triangle checks failed: {c:?}")))
    }
}

/// Cycles through the clusters once per cover line; the tour vertices are
/// the crossings of consecutive cluster copies of the lines.
pub fn lines_to_covering_tour(lines: &[Line], tri: &TriangleInstance) -> Result<Tour> {
    if lines.is_empty() || !lines_cover_all(&tri.source, lines) {
        return Err(Error::InvalidArgument("lines do not cover the point set".into()));
    }
    let mut seq = vec![];
    for l in lines {
        for x in 0..3 {
            seq.push(tri.place_line(x, l)?);
        }
    }
    let m = seq.len();
    let verts = (0..m)
        .map(|j| intersect(&seq[j], &seq[(j + 1) % m]).ok_or_else(|| Error::Construction("parallel consecutive lines".into())))
        .collect::<Result<Vec<_>>>()?;
    let tour = Tour::new(verts).map_err(Error::Validation)?;
    let check = validate_covering_tour(&tour, &tri.points.points);
    if !check.covers_all || check.links != 3 * lines.len() {
        return Err(Error::Construction(format!("tour check failed: {check:?}")));
    }
    Ok(tour)
}
