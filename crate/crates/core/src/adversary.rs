//! Worst-case instances for greedy stabbing: the bipartite graph G_k drawn
//! between two horizontal lines, as segments and as full lines.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{greedy_cover_lines_by_points, greedy_cover_points_by_lines, greedy_cover_segments_by_points, line_stab_candidates, points_stab_all_lines, points_stab_all_segments};
use crate::error::{Error, Result};
use crate::geom::{line_through, rat, Line, Point, Rational};
use crate::instance::{LineSetInstance, PointSetInstance, SegmentSetInstance};

type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BVertex {
    /// Degree class `i`: this vertex belongs to B_i.
    pub block: usize,
    pub neighbors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteAdversary {
    pub k: usize,
    /// B vertices, blocks B_2 .. B_k in order.
    pub b: Vec<BVertex>,
    /// `(a, b)` pairs.
    pub edges: Vec<(usize, usize)>,
}

pub fn expected_b_size(k: usize) -> usize {
    (2..=k).map(|i| k / i).sum()
}

pub fn expected_edge_count(k: usize) -> usize {
    (2..=k).map(|i| (k / i) * i).sum()
}

pub fn build_gk(k: usize) -> Result<BipartiteAdversary> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let mut b = Vec::new();
    let mut edges = Vec::new();
    for i in 2..=k {
        for j in 0..k / i {
            let idx = b.len();
            let neighbors: Vec<usize> = (j * i..(j + 1) * i).collect();
            edges.extend(neighbors.iter().map(|&a| (a, idx)));
            b.push(BVertex { block: i, neighbors });
        }
    }
    Ok(BipartiteAdversary { k, b, edges })
}

fn a_point(a: usize) -> Point {
    Point::from_ints(a as i64, 1)
}

/// A at `(a, 1)`, B vertex `j` at `(j, 0)`.
pub fn embed_segments(g: &BipartiteAdversary) -> SegmentSetInstance {
    let segments = g.edges.iter().map(|&(a, b)| (a_point(a), Point::from_ints(b as i64, 0))).collect();
    SegmentSetInstance { segments }
}

fn to_big(q: &Q) -> Rational {
    Rational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Offsets 0, then ±p/q with |p/q| < 1/4 by increasing denominator.
fn offsets() -> impl Iterator<Item = Q> {
    std::iter::once(Q::zero()).chain((5i128..).flat_map(|d| {
        (1..d).filter(move |&p| 4 * p < d && num_integer::gcd(p, d) == 1).flat_map(move |p| [Q::new(p, d), Q::new(-p, d)])
    }))
}

/// Abscissa on y = 0 of each B vertex such that the drawn lines satisfy P1.
/// Each new vertex avoids the marks: the feet on y = 0 of lines from its A
/// neighbours through every existing off-carrier crossing.
pub fn place_b_for_lines(g: &BipartiteAdversary) -> Result<Vec<Rational>> {
    let mut placed: Vec<Q> = Vec::new();
    // existing lines as (a, foot on y = 0)
    let mut lines: Vec<(i128, Q)> = Vec::new();
    let mut crossings: Vec<(Q, Q)> = Vec::new();
    let a_xs: HashSet<Q> = (0..g.k).map(|a| Q::from_integer(a as i128)).collect();
    for (j, bv) in g.b.iter().enumerate() {
        let mut marks: HashSet<Q> = a_xs.clone();
        marks.extend(placed.iter().cloned());
        for &a in &bv.neighbors {
            let a = Q::from_integer(a as i128);
            for (x, y) in &crossings {
                marks.insert(a + (x - a) / (Q::one() - y));
            }
        }
        let x = offsets()
            .take(100_000)
            .map(|d| Q::from_integer(j as i128) + d)
            .find(|x| !marks.contains(x))
            .ok_or_else(|| Error::Construction(format!("no free position for B vertex {j}")))?;
        for &a in &bv.neighbors {
            let a = a as i128;
            // x(y) = foot + (a - foot) * y
            let slope_new = Q::from_integer(a) - x;
            for (a2, foot2) in &lines {
                if *a2 == a {
                    continue;
                }
                let slope_old = Q::from_integer(*a2) - foot2;
                if slope_new == slope_old {
                    continue;
                }
                let y = (foot2 - x) / (slope_new - slope_old);
                if y.is_zero() || y == Q::one() {
                    continue;
                }
                crossings.push((x + slope_new * y, y));
            }
        }
        for &a in &bv.neighbors {
            lines.push((a as i128, x));
        }
        placed.push(x);
    }
    Ok(placed.iter().map(to_big).collect())
}

/// Property P1: every crossing off the carriers y = 0 and y = 1 lies on
/// exactly two lines. Checked by grouping all pairwise intersections.
pub fn verify_p1(lines: &[Line]) -> bool {
    let (points, sets) = line_stab_candidates(lines);
    points.iter().zip(&sets).all(|(p, s)| p.y == rat(0) || p.y == rat(1) || s.len() <= 2)
}

pub fn embed_lines(g: &BipartiteAdversary) -> Result<LineSetInstance> {
    let xs = place_b_for_lines(g)?;
    let lines: Vec<Line> = g
        .edges
        .iter()
        .map(|&(a, b)| line_through(&a_point(a), &Point::new(xs[b].clone(), rat(0))))
        .collect::<Result<_>>()?;
    if !verify_p1(&lines) {
        return Err(Error::Construction("line embedding violates P1".into()));
    }
    Ok(LineSetInstance { lines })
}

/// Indices of `b` vertices hit, in selection order, or None when greedy
/// picked a point that is not a B vertex of the segment drawing.
pub fn segment_trace_blocks(g: &BipartiteAdversary, chosen: &[Point]) -> Option<Vec<usize>> {
    chosen
        .iter()
        .map(|p| {
            if p.y != rat(0) || !p.x.is_integer() {
                return None;
            }
            let j: usize = p.x.to_integer().try_into().ok()?;
            g.b.get(j).map(|v| v.block)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioRow {
    pub k: usize,
    pub greedy_segments: usize,
    pub greedy_lines: Option<usize>,
    pub witness: usize,
    pub ratio: f64,
    pub ln_bound: f64,
    /// Greedy on segments took every B vertex, blocks B_k first.
    pub block_order: bool,
    pub witness_valid: bool,
}

impl RatioRow {
    pub fn bound_holds(&self) -> bool {
        // integers against ln(k+1) - 2; the margin dwarfs rounding
        self.greedy_segments as f64 >= self.ln_bound * self.witness as f64
            && self.greedy_lines.is_none_or(|g| g as f64 >= self.ln_bound * self.witness as f64)
    }
}

/// One row per k. Line instances are built only for `k <= lines_max`.
pub fn greedy_ratio_experiment(k_min: usize, k_max: usize, lines_max: usize) -> Result<Vec<RatioRow>> {
    if k_min < 2 || k_min > k_max {
        return Err(Error::InvalidArgument(format!("need 2 <= k_min <= k_max, got {k_min}..{k_max}")));
    }
    (k_min..=k_max).into_par_iter().map(|k| ratio_row(k, k <= lines_max)).collect()
}

pub fn ratio_row(k: usize, with_lines: bool) -> Result<RatioRow> {
    let g = build_gk(k)?;
    let segs = embed_segments(&g);
    let sol = greedy_cover_segments_by_points(&segs.segments);
    let witness: Vec<Point> = (0..k).map(a_point).collect();
    let mut witness_valid = points_stab_all_segments(&segs.segments, &witness);
    let block_order = match segment_trace_blocks(&g, &sol.chosen) {
        Some(blocks) => blocks.len() == g.b.len() && blocks.windows(2).all(|w| w[0] >= w[1]),
        None => false,
    };
    let greedy_lines = if with_lines {
        let lines = embed_lines(&g)?;
        witness_valid &= points_stab_all_lines(&lines.lines, &witness);
        Some(greedy_cover_lines_by_points(&lines.lines).size())
    } else {
        None
    };
    Ok(RatioRow {
        k,
        greedy_segments: sol.size(),
        greedy_lines,
        witness: k,
        ratio: sol.size() as f64 / k as f64,
        ln_bound: ((k + 1) as f64).ln() - 2.0,
        block_order,
        witness_valid,
    })
}

pub fn rows_to_csv(rows: &[RatioRow]) -> String {
    let mut out = String::from("k,greedy_segments,greedy_lines,witness,ratio,ln_bound\n");
    for r in rows {
        let gl = r.greedy_lines.map(|g| g.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{},{:.6},{:.6}\n", r.k, r.greedy_segments, gl, r.witness, r.ratio, r.ln_bound));
    }
    out
}

/// Shear `x' = x + λy` with the smallest λ ≥ 0 leaving no line vertical.
pub fn shear_for(lines: &[Line]) -> i64 {
    // a x + b y = c becomes a x' + (b - λa) y = c
    (0i64..)
        .find(|&lam| lines.iter().all(|l| l.b() - l.a() * BigInt::from(lam) != BigInt::zero()))
        .expect("finitely many bad shears")
}

pub fn shear_line(l: &Line, lam: i64) -> Line {
    let (a, b, c) = l.coefficients();
    Line::from_coefficients(&a, &(b - &a * rat(lam)), &c).expect("shear keeps a line")
}

pub fn shear_point(p: &Point, lam: i64) -> Point {
    Point::new(&p.x + &p.y * rat(lam), p.y.clone())
}

/// Line y = m x + q becomes point (m, -q), after shearing if needed.
/// Returns the dual points and the shear used.
pub fn dualize(l: &LineSetInstance) -> (PointSetInstance, i64) {
    let lam = shear_for(&l.lines);
    let points = l
        .lines
        .iter()
        .map(|line| {
            let (a, b, c) = shear_line(line, lam).coefficients();
            Point::new(-&a / &b, -&c / &b)
        })
        .collect();
    (PointSetInstance::new(points), lam)
}

/// Dual line of a primal point (after the same shear): the point (x0, y0)
/// maps to y = x0 X - y0.
pub fn dual_line_of_point(p: &Point, lam: i64) -> Line {
    let s = shear_point(p, lam);
    Line::from_coefficients(&s.x, &rat(-1), &s.y).expect("b = -1")
}

/// Greedy sizes on the primal line instance and on its dual point instance.
pub fn dual_greedy_sizes(l: &LineSetInstance) -> (usize, usize) {
    let (dual, _) = dualize(l);
    (greedy_cover_lines_by_points(&l.lines).size(), greedy_cover_points_by_lines(&dual.points).size())
}
