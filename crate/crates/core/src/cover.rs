//! Greedy and exact solvers for the four covering problems.
//!
//! Greedy ties are broken toward the lexicographically smallest candidate
//! (canonical line coefficients, or point coordinates), so every trace is
//! reproducible. Exact solvers are branch and bound over bitmasks and return
//! the incumbent flagged non-optimal when their node budget runs out.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::{intersect, line_through, on_segment, rat, Line, Point, Rational};
use crate::instance::CoverSolution;

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    /// Branch-and-bound nodes before giving up.
    pub node_cap: u64,
    /// Largest accepted input (points, or lines for the dual problem).
    pub max_elements: usize,
}

impl ExactOptions {
    pub fn for_points() -> Self {
        ExactOptions { node_cap: 20_000_000, max_elements: 24 }
    }

    pub fn for_lines() -> Self {
        ExactOptions { node_cap: 20_000_000, max_elements: 20 }
    }

    pub fn with_max_elements(mut self, n: usize) -> Self {
        self.max_elements = n;
        self
    }
}

/// Lazy greedy set cover. `sets` are in tie-break priority order; returns
/// the selected set indices in selection order. Stops once nothing more can
/// be covered, or after `budget` selections.
pub(crate) fn greedy_select(sets: &[Vec<usize>], n_elems: usize, budget: Option<usize>) -> Vec<usize> {
    let mut covered = vec![false; n_elems];
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        sets.iter().enumerate().filter(|(_, s)| !s.is_empty()).map(|(i, s)| (s.len(), Reverse(i))).collect();
    let mut chosen = Vec::new();
    while let Some((stored, Reverse(i))) = heap.pop() {
        if budget.is_some_and(|b| chosen.len() >= b) {
            break;
        }
        let actual = sets[i].iter().filter(|&&e| !covered[e]).count();
        if actual == 0 {
            continue;
        }
        if actual < stored {
            heap.push((actual, Reverse(i)));
            continue;
        }
        chosen.push(i);
        for &e in &sets[i] {
            covered[e] = true;
        }
    }
    chosen
}

/// Candidate lines of `points` with the sorted indices of the points on each.
pub fn line_incidences(points: &[Point]) -> Vec<(Line, Vec<usize>)> {
    let mut map: HashMap<Line, Vec<usize>> = HashMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if let Ok(l) = line_through(&points[i], &points[j]) {
                let e = map.entry(l).or_default();
                e.push(i);
                e.push(j);
            }
        }
    }
    let mut out: Vec<(Line, Vec<usize>)> = map
        .into_iter()
        .map(|(l, mut v)| {
            v.sort_unstable();
            v.dedup();
            (l, v)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// A line through `p` that avoids every other point of `points`.
pub fn isolated_point_line(p: &Point, points: &[Point]) -> Line {
    for k in 0i64.. {
        // directions (1, k) then (k, 1) ... eventually avoid the finite set
        for (dx, dy) in [(1, k), (k, 1), (1, -k), (-k, 1)] {
            if (dx, dy) == (0, 0) {
                continue;
            }
            let l = Line::through_with_direction(p, &rat(dx), &rat(dy)).expect("nonzero direction");
            if points.iter().all(|q| q == p || !l.contains(q)) {
                return l;
            }
        }
    }
    unreachable!()
}

fn lines_solution(points: &[Point], chosen: Vec<Line>, optimal: bool) -> CoverSolution<Line> {
    let covered = crate::instance::covered_by_lines(points, &chosen);
    CoverSolution { chosen, covered, optimal }
}

pub fn greedy_cover_points_by_lines(points: &[Point]) -> CoverSolution<Line> {
    if points.len() == 1 {
        let l = isolated_point_line(&points[0], points);
        return lines_solution(points, vec![l], false);
    }
    let cands = line_incidences(points);
    let sets: Vec<Vec<usize>> = cands.iter().map(|(_, s)| s.clone()).collect();
    let chosen = greedy_select(&sets, points.len(), None).into_iter().map(|i| cands[i].0.clone()).collect();
    lines_solution(points, chosen, false)
}

pub fn greedy_max_coverage(points: &[Point], k: usize) -> CoverSolution<Line> {
    if k == 0 || points.is_empty() {
        return lines_solution(points, vec![], false);
    }
    if points.len() == 1 {
        return greedy_cover_points_by_lines(points);
    }
    let cands = line_incidences(points);
    let sets: Vec<Vec<usize>> = cands.iter().map(|(_, s)| s.clone()).collect();
    let chosen = greedy_select(&sets, points.len(), Some(k)).into_iter().map(|i| cands[i].0.clone()).collect();
    lines_solution(points, chosen, false)
}

fn mask_of(set: &[usize]) -> u128 {
    set.iter().fold(0u128, |m, &e| m | 1u128 << e)
}

fn check_size(n: usize, opts: &ExactOptions) -> Result<()> {
    if n > opts.max_elements || n > 128 {
        return Err(Error::CapExceeded(format!(
            "exact solver accepts at most {} elements, got {n}",
            opts.max_elements.min(128)
        )));
    }
    Ok(())
}

/// Minimum set cover by branch and bound over `masks` (in priority order).
/// Returns chosen indices (sorted) and whether the search completed.
pub(crate) fn exact_set_cover(masks: &[u128], universe: u128, incumbent: Vec<usize>, node_cap: u64) -> (Vec<usize>, bool) {
    struct Search<'a> {
        masks: &'a [u128],
        universe: u128,
        best: Vec<usize>,
        nodes: u64,
        cap: u64,
        aborted: bool,
        stack: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, covered: u128) {
            if self.aborted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                self.aborted = true;
                return;
            }
            let open = self.universe & !covered;
            if open == 0 {
                if self.stack.len() < self.best.len() {
                    self.best = self.stack.clone();
                }
                return;
            }
            let max_gain = self.masks.iter().map(|m| (m & open).count_ones()).max().unwrap_or(0);
            if max_gain == 0 {
                return;
            }
            let need = open.count_ones().div_ceil(max_gain) as usize;
            if self.stack.len() + need >= self.best.len() {
                return;
            }
            let p = open.trailing_zeros();
            let mut branches: Vec<(u32, usize)> = self
                .masks
                .iter()
                .enumerate()
                .filter(|(_, m)| *m >> p & 1 == 1)
                .map(|(i, m)| ((m & open).count_ones(), i))
                .collect();
            branches.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            for (_, i) in branches {
                self.stack.push(i);
                self.go(covered | self.masks[i]);
                self.stack.pop();
            }
        }
    }
    let mut s = Search { masks, universe, best: incumbent, nodes: 0, cap: node_cap, aborted: false, stack: vec![] };
    s.go(0);
    let mut best = s.best;
    best.sort_unstable();
    (best, !s.aborted)
}

/// Maximum coverage with at most `k` sets. Returns chosen indices and whether
/// the search completed.
pub(crate) fn exact_max_cover(masks: &[u128], universe: u128, k: usize, incumbent: Vec<usize>, node_cap: u64) -> (Vec<usize>, bool) {
    struct Search<'a> {
        masks: &'a [u128],
        universe: u128,
        k: usize,
        best: Vec<usize>,
        best_val: u32,
        nodes: u64,
        cap: u64,
        aborted: bool,
        stack: Vec<usize>,
    }
    impl Search<'_> {
        fn value(&self, sel: &[usize]) -> u32 {
            (sel.iter().fold(0u128, |m, &i| m | self.masks[i]) & self.universe).count_ones()
        }
        // `banned`: points no future line may contain
        fn go(&mut self, covered: u128, banned: u128) {
            if self.aborted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                self.aborted = true;
                return;
            }
            let cur = (covered & self.universe).count_ones();
            if cur > self.best_val {
                self.best_val = cur;
                self.best = self.stack.clone();
            }
            let left = self.k - self.stack.len();
            let open = self.universe & !covered & !banned;
            if left == 0 || open == 0 {
                return;
            }
            let mut gains: Vec<u32> = self
                .masks
                .iter()
                .filter(|m| *m & banned == 0)
                .map(|m| (m & open).count_ones())
                .filter(|&g| g > 0)
                .collect();
            gains.sort_unstable_by(|a, b| b.cmp(a));
            let optimistic: u32 = gains.iter().take(left).sum();
            if cur + optimistic.min(open.count_ones()) <= self.best_val {
                return;
            }
            let p = open.trailing_zeros();
            let mut branches: Vec<(u32, usize)> = self
                .masks
                .iter()
                .enumerate()
                .filter(|(_, m)| *m >> p & 1 == 1 && *m & banned == 0)
                .map(|(i, m)| ((m & open).count_ones(), i))
                .collect();
            branches.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            for (_, i) in branches {
                self.stack.push(i);
                self.go(covered | self.masks[i], banned);
                self.stack.pop();
            }
            // no chosen line passes through p
            self.go(covered, banned | 1u128 << p);
        }
    }
    let mut s = Search {
        masks,
        universe,
        k,
        best: vec![],
        best_val: 0,
        nodes: 0,
        cap: node_cap,
        aborted: false,
        stack: vec![],
    };
    s.best_val = s.value(&incumbent);
    s.best = incumbent;
    s.go(0, 0);
    let mut best = s.best;
    best.sort_unstable();
    (best, !s.aborted)
}

pub fn exact_cover_points_by_lines(points: &[Point], opts: &ExactOptions) -> Result<CoverSolution<Line>> {
    check_size(points.len(), opts)?;
    if points.len() <= 1 {
        let mut sol = greedy_cover_points_by_lines(points);
        sol.optimal = true;
        return Ok(sol);
    }
    let cands = line_incidences(points);
    let masks: Vec<u128> = cands.iter().map(|(_, s)| mask_of(s)).collect();
    let sets: Vec<Vec<usize>> = cands.iter().map(|(_, s)| s.clone()).collect();
    let incumbent = greedy_select(&sets, points.len(), None);
    let universe = mask_of(&(0..points.len()).collect::<Vec<_>>());
    let (best, done) = exact_set_cover(&masks, universe, incumbent, opts.node_cap);
    let chosen = best.into_iter().map(|i| cands[i].0.clone()).collect();
    Ok(lines_solution(points, chosen, done))
}

pub fn exact_max_coverage(points: &[Point], k: usize, opts: &ExactOptions) -> Result<CoverSolution<Line>> {
    check_size(points.len(), opts)?;
    if k == 0 || points.is_empty() {
        return Ok(lines_solution(points, vec![], true));
    }
    if points.len() == 1 {
        return exact_cover_points_by_lines(points, opts);
    }
    let cands = line_incidences(points);
    let masks: Vec<u128> = cands.iter().map(|(_, s)| mask_of(s)).collect();
    let sets: Vec<Vec<usize>> = cands.iter().map(|(_, s)| s.clone()).collect();
    let incumbent = greedy_select(&sets, points.len(), Some(k));
    let universe = mask_of(&(0..points.len()).collect::<Vec<_>>());
    let (best, done) = exact_max_cover(&masks, universe, k, incumbent, opts.node_cap);
    let chosen = best.into_iter().map(|i| cands[i].0.clone()).collect();
    Ok(lines_solution(points, chosen, done))
}

// ---------------------------------------------------------------------------
// Stabbing lines and segments with points.

/// Exact point key with a small-integer fast path. Fast keys are
/// `(x_num, y_num, den)` reduced with `den > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
enum PointKey {
    Small(i128, i128, i128),
    Big(Point),
}

impl PointKey {
    fn to_point(&self) -> Point {
        match self {
            PointKey::Small(x, y, d) => Point::new(
                Rational::new(BigInt::from(*x), BigInt::from(*d)),
                Rational::new(BigInt::from(*y), BigInt::from(*d)),
            ),
            PointKey::Big(p) => p.clone(),
        }
    }
}

const SMALL_LIMIT: i64 = 1 << 30;

fn small_coeffs(l: &Line) -> Option<(i128, i128, i128)> {
    let f = |b: &BigInt| b.to_i64().filter(|v| v.abs() < SMALL_LIMIT).map(|v| v as i128);
    Some((f(l.a())?, f(l.b())?, f(l.c())?))
}

fn small_point(p: &Point) -> Option<(i128, i128, i128)> {
    let d = p.x.denom().lcm(p.y.denom());
    let x = (&p.x * Rational::from_integer(d.clone())).to_integer();
    let y = (&p.y * Rational::from_integer(d.clone())).to_integer();
    let f = |b: &BigInt| b.to_i64().filter(|v| v.abs() < SMALL_LIMIT).map(|v| v as i128);
    Some((f(&x)?, f(&y)?, f(&d)?))
}

fn reduce3(x: i128, y: i128, d: i128) -> (i128, i128, i128) {
    let (x, y, d) = if d < 0 { (-x, -y, -d) } else { (x, y, d) };
    let g = x.gcd(&y).gcd(&d);
    (x / g, y / g, d / g)
}

/// Line with optional small coefficients for the fast path.
struct Carrier {
    line: Line,
    small: Option<(i128, i128, i128)>,
}

impl Carrier {
    fn new(line: Line) -> Self {
        let small = small_coeffs(&line);
        Carrier { line, small }
    }
}

fn intersection_key(l1: &Carrier, l2: &Carrier) -> Option<PointKey> {
    if let (Some((a1, b1, c1)), Some((a2, b2, c2))) = (l1.small, l2.small) {
        let det = a1 * b2 - a2 * b1;
        if det == 0 {
            return None;
        }
        let (x, y, d) = reduce3(c1 * b2 - c2 * b1, a1 * c2 - a2 * c1, det);
        return Some(PointKey::Small(x, y, d));
    }
    intersect(&l1.line, &l2.line).map(PointKey::Big)
}

impl PointKey {
    fn cmp_value(&self, o: &PointKey) -> std::cmp::Ordering {
        match (self, o) {
            (PointKey::Small(x1, y1, d1), PointKey::Small(x2, y2, d2)) => {
                (x1 * d2).cmp(&(x2 * d1)).then((y1 * d2).cmp(&(y2 * d1)))
            }
            _ => self.to_point().cmp(&o.to_point()),
        }
    }
}

type Keyed = (Vec<PointKey>, Vec<Vec<usize>>);

fn sort_candidates(map: HashMap<PointKey, Vec<usize>>) -> Keyed {
    let mut cands: Vec<(PointKey, Vec<usize>)> = map
        .into_iter()
        .map(|(k, mut v)| {
            v.sort_unstable();
            v.dedup();
            (k, v)
        })
        .collect();
    cands.sort_by(|a, b| a.0.cmp_value(&b.0));
    cands.into_iter().unzip()
}

fn to_points((keys, sets): Keyed) -> (Vec<Point>, Vec<Vec<usize>>) {
    (keys.iter().map(PointKey::to_point).collect(), sets)
}

/// Candidate stabbing points for lines: every pairwise intersection, plus one
/// point on each line that meets no other line.
pub fn line_stab_candidates(lines: &[Line]) -> (Vec<Point>, Vec<Vec<usize>>) {
    to_points(line_stab_keys(lines))
}

fn line_stab_keys(lines: &[Line]) -> Keyed {
    let carriers: Vec<Carrier> = lines.iter().cloned().map(Carrier::new).collect();
    let mut map: HashMap<PointKey, Vec<usize>> = HashMap::new();
    let mut touched = vec![false; lines.len()];
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(k) = intersection_key(&carriers[i], &carriers[j]) {
                let e = map.entry(k).or_default();
                e.push(i);
                e.push(j);
                touched[i] = true;
                touched[j] = true;
            }
        }
    }
    for (i, l) in lines.iter().enumerate() {
        if !touched[i] {
            map.entry(PointKey::Big(point_on_line(l))).or_default().push(i);
        }
    }
    sort_candidates(map)
}

/// Some point on `l`.
pub fn point_on_line(l: &Line) -> Point {
    let (a, b, c) = l.coefficients();
    if b.is_zero() {
        Point::new(c / a, rat(0))
    } else {
        Point::new(rat(0), c / b)
    }
}

fn stab_solution(chosen: Vec<Point>, contains: impl Fn(&Point, usize) -> bool, n: usize, optimal: bool) -> CoverSolution<Point> {
    let covered = (0..n).filter(|&i| chosen.iter().any(|p| contains(p, i))).collect();
    CoverSolution { chosen, covered, optimal }
}

pub fn greedy_cover_lines_by_points(lines: &[Line]) -> CoverSolution<Point> {
    let (cands, sets) = line_stab_keys(lines);
    let chosen: Vec<Point> = greedy_select(&sets, lines.len(), None).into_iter().map(|i| cands[i].to_point()).collect();
    stab_solution(chosen, |p, i| lines[i].contains(p), lines.len(), false)
}

pub fn exact_cover_lines_by_points(lines: &[Line], opts: &ExactOptions) -> Result<CoverSolution<Point>> {
    check_size(lines.len(), opts)?;
    let (cands, sets) = line_stab_candidates(lines);
    let masks: Vec<u128> = sets.iter().map(|s| mask_of(s)).collect();
    let incumbent = greedy_select(&sets, lines.len(), None);
    let universe = mask_of(&(0..lines.len()).collect::<Vec<_>>());
    let (best, done) = exact_set_cover(&masks, universe, incumbent, opts.node_cap);
    let chosen = best.into_iter().map(|i| cands[i].clone()).collect();
    Ok(stab_solution(chosen, |p, i| lines[i].contains(p), lines.len(), done))
}

/// Is the small-key point within the closed bounding box of the segment?
fn small_within(key: (i128, i128, i128), s: (i128, i128, i128), t: (i128, i128, i128)) -> bool {
    // compare a/b with c/d for positive b, d
    let between = |v: i128, vd: i128, a: i128, ad: i128, b: i128, bd: i128| {
        let ge_a = v * ad >= a * vd;
        let le_b = v * bd <= b * vd;
        let ge_b = v * bd >= b * vd;
        let le_a = v * ad <= a * vd;
        (ge_a && le_b) || (ge_b && le_a)
    };
    between(key.0, key.2, s.0, s.2, t.0, t.2) && between(key.1, key.2, s.1, s.2, t.1, t.2)
}

/// Candidate stabbing points for segments: endpoints and pairwise
/// intersections lying on both segments.
pub fn segment_stab_candidates(segments: &[(Point, Point)]) -> (Vec<Point>, Vec<Vec<usize>>) {
    to_points(segment_stab_keys(segments))
}

fn segment_stab_keys(segments: &[(Point, Point)]) -> Keyed {
    let carriers: Vec<Carrier> = segments
        .iter()
        .map(|(s, t)| Carrier::new(line_through(s, t).expect("validated segment")))
        .collect();
    let ends: Vec<Option<((i128, i128, i128), (i128, i128, i128))>> =
        segments.iter().map(|(s, t)| Some((small_point(s)?, small_point(t)?))).collect();
    let key_of = |p: &Point| match small_point(p) {
        Some((x, y, d)) => {
            let (x, y, d) = reduce3(x, y, d);
            PointKey::Small(x, y, d)
        }
        None => PointKey::Big(p.clone()),
    };
    let mut map: HashMap<PointKey, Vec<usize>> = HashMap::new();
    for (i, (s, t)) in segments.iter().enumerate() {
        map.entry(key_of(s)).or_default().push(i);
        map.entry(key_of(t)).or_default().push(i);
    }
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            if carriers[i].line == carriers[j].line {
                // overlapping collinear segments share endpoints
                let (si, ti) = &segments[i];
                let (sj, tj) = &segments[j];
                for (p, owner) in [(si, j), (ti, j), (sj, i), (tj, i)] {
                    let (s, t) = &segments[owner];
                    if on_segment(p, s, t) {
                        map.entry(key_of(p)).or_default().push(owner);
                    }
                }
                continue;
            }
            if let (Some((a1, b1, c1)), Some((a2, b2, c2)), Some((si, ti)), Some((sj, tj))) =
                (carriers[i].small, carriers[j].small, ends[i], ends[j])
            {
                // reject outside crossings before paying for the gcd
                let det = a1 * b2 - a2 * b1;
                if det == 0 {
                    continue;
                }
                let sg = det.signum();
                let raw = ((c1 * b2 - c2 * b1) * sg, (a1 * c2 - a2 * c1) * sg, det * sg);
                if !(small_within(raw, si, ti) && small_within(raw, sj, tj)) {
                    continue;
                }
            }
            let Some(key) = intersection_key(&carriers[i], &carriers[j]) else { continue };
            let inside = match (&key, ends[i], ends[j]) {
                (PointKey::Small(x, y, d), Some((si, ti)), Some((sj, tj))) => {
                    small_within((*x, *y, *d), si, ti) && small_within((*x, *y, *d), sj, tj)
                }
                _ => {
                    let p = key.to_point();
                    on_segment(&p, &segments[i].0, &segments[i].1) && on_segment(&p, &segments[j].0, &segments[j].1)
                }
            };
            if inside {
                let e = map.entry(key).or_default();
                e.push(i);
                e.push(j);
            }
        }
    }
    sort_candidates(map)
}

pub fn greedy_cover_segments_by_points(segments: &[(Point, Point)]) -> CoverSolution<Point> {
    let (cands, sets) = segment_stab_keys(segments);
    let chosen: Vec<Point> = greedy_select(&sets, segments.len(), None).into_iter().map(|i| cands[i].to_point()).collect();
    stab_solution(chosen, |p, i| on_segment(p, &segments[i].0, &segments[i].1), segments.len(), false)
}

/// Harmonic-style bound `ln n + 1` used to sanity-check greedy ratios.
pub fn greedy_bound(n: usize) -> f64 {
    (n.max(1) as f64).ln() + 1.0
}

/// Re-verifies that `lines` cover every point.
pub fn lines_cover_all(points: &[Point], lines: &[Line]) -> bool {
    points.iter().all(|p| lines.iter().any(|l| l.contains(p)))
}

pub fn points_stab_all_lines(lines: &[Line], points: &[Point]) -> bool {
    lines.iter().all(|l| points.iter().any(|p| l.contains(p)))
}

pub fn points_stab_all_segments(segments: &[(Point, Point)], points: &[Point]) -> bool {
    segments.iter().all(|(s, t)| points.iter().any(|p| on_segment(p, s, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn square() -> Vec<Point> {
        vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
    }

    #[test]
    fn greedy_points_examples() {
        let five: Vec<Point> = (0..5).map(|i| p(i, 2 * i)).collect();
        assert_eq!(greedy_cover_points_by_lines(&five).size(), 1);
        let sq = greedy_cover_points_by_lines(&square());
        assert_eq!(sq.size(), 2);
        assert_eq!(sq.covered, vec![0, 1, 2, 3]);
        let single = greedy_cover_points_by_lines(&[p(3, 4)]);
        assert_eq!(single.size(), 1);
        assert!(single.chosen[0].contains(&p(3, 4)));
    }

    #[test]
    fn greedy_tie_break_is_lexicographic() {
        let sol = greedy_cover_points_by_lines(&square());
        let mut cands = crate::geom::candidate_lines(&square());
        cands.sort();
        assert_eq!(sol.chosen[0], cands[0]);
    }

    #[test]
    fn exact_points_examples() {
        let five: Vec<Point> = (0..5).map(|i| p(i, 2 * i)).collect();
        let o = ExactOptions::for_points();
        assert_eq!(exact_cover_points_by_lines(&five, &o).unwrap().size(), 1);
        let sq = exact_cover_points_by_lines(&square(), &o).unwrap();
        assert_eq!(sq.size(), 2);
        assert!(sq.optimal);
        let big: Vec<Point> = (0..30).map(|i| p(i, i * i)).collect();
        assert!(matches!(exact_cover_points_by_lines(&big, &o), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn exact_cap_flags_incumbent() {
        let pts: Vec<Point> = (0..12).map(|i| p(i, i * i % 7 + i)).collect();
        let o = ExactOptions { node_cap: 2, max_elements: 24 };
        let sol = exact_cover_points_by_lines(&pts, &o).unwrap();
        assert!(!sol.optimal);
        assert!(lines_cover_all(&pts, &sol.chosen));
    }

    #[test]
    fn max_coverage_examples() {
        let o = ExactOptions::for_points();
        let sq = square();
        assert_eq!(exact_max_coverage(&sq, 0, &o).unwrap().covered.len(), 0);
        assert_eq!(greedy_max_coverage(&sq, 0).covered.len(), 0);
        assert_eq!(exact_max_coverage(&sq, 2, &o).unwrap().covered.len(), 4);
        assert_eq!(exact_max_coverage(&sq, 5, &o).unwrap().covered.len(), 4);
        assert_eq!(exact_max_coverage(&sq, 1, &o).unwrap().covered.len(), 2);
    }

    #[test]
    fn lines_by_points_examples() {
        let concurrent = vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(1, 1, 0).unwrap(),
        ];
        let g = greedy_cover_lines_by_points(&concurrent);
        assert_eq!(g.chosen, vec![p(0, 0)]);
        let o = ExactOptions::for_lines();
        assert_eq!(exact_cover_lines_by_points(&concurrent, &o).unwrap().size(), 1);
        let parallel = vec![Line::from_ints(1, 0, 0).unwrap(), Line::from_ints(1, 0, 1).unwrap()];
        let g = greedy_cover_lines_by_points(&parallel);
        assert_eq!(g.size(), 2);
        assert!(points_stab_all_lines(&parallel, &g.chosen));
        assert_eq!(exact_cover_lines_by_points(&parallel, &o).unwrap().size(), 2);
    }

    #[test]
    fn big_coefficients_take_the_slow_path() {
        let huge = BigInt::from(1u64 << 40);
        let l1 = Line::from_coefficients(
            &Rational::from_integer(huge.clone()),
            &rat(1),
            &rat(0),
        )
        .unwrap();
        let l2 = Line::from_ints(1, -1, 0).unwrap();
        let l3 = Line::from_ints(0, 1, 0).unwrap();
        let g = greedy_cover_lines_by_points(&[l1, l2, l3]);
        assert_eq!(g.chosen, vec![p(0, 0)]);
    }

    #[test]
    fn segments_by_points() {
        // an X and a far-away segment
        let segs = vec![
            (p(0, 0), p(2, 2)),
            (p(0, 2), p(2, 0)),
            (p(5, 5), p(6, 5)),
        ];
        let g = greedy_cover_segments_by_points(&segs);
        assert_eq!(g.size(), 2);
        assert_eq!(g.chosen[0], p(1, 1));
        assert!(points_stab_all_segments(&segs, &g.chosen));
        // supporting lines cross outside both segments: no shared stab point
        let apart = vec![(p(0, 0), p(1, 0)), (p(3, -1), p(3, 1))];
        assert_eq!(greedy_cover_segments_by_points(&apart).size(), 2);
        // collinear overlap shares a point
        let overlap = vec![(p(0, 0), p(4, 0)), (p(2, 0), p(6, 0))];
        assert_eq!(greedy_cover_segments_by_points(&overlap).size(), 1);
        let frac = vec![(Point::new(ratio(1, 2), rat(0)), Point::new(ratio(1, 2), rat(3)))];
        assert_eq!(greedy_cover_segments_by_points(&frac).size(), 1);
    }
}
