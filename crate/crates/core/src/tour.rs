//! Exhaustive solvers and validators for tours through a point set.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{on_segment, turn, Point, TurnMeasure};
use crate::instance::Tour;

pub const MINMAX_CAP: usize = 9;
pub const MINLINK_CAP: usize = 12;

/// Exact turn at every ordered triple of distinct indices, plus a rank that
/// orders turns so the permutation search compares integers.
struct TurnTable {
    n: usize,
    measures: Vec<Option<TurnMeasure>>,
    rank: Vec<u32>,
    radians: Vec<f64>,
}

impl TurnTable {
    fn new(points: &[Point]) -> Result<Self> {
        let n = points.len();
        let mut measures = vec![None; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i != j && j != k {
                        measures[(i * n + j) * n + k] = Some(turn(&points[i], &points[j], &points[k])?);
                    }
                }
            }
        }
        let mut keys: Vec<&TurnMeasure> = measures.iter().flatten().collect();
        keys.sort();
        keys.dedup();
        let rank = measures
            .iter()
            .map(|m| m.as_ref().map_or(0, |m| keys.binary_search(&m).expect("present") as u32))
            .collect();
        let radians = measures.iter().map(|m| m.as_ref().map_or(0.0, |m| m.radians())).collect();
        Ok(TurnTable { n, measures, rank, radians })
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }
}

fn check_points(points: &[Point], min: usize, cap: usize) -> Result<()> {
    if points.len() < min {
        return Err(Error::InvalidArgument(format!("need at least {min} points, got {}", points.len())));
    }
    if points.len() > cap {
        return Err(Error::CapExceeded(format!("{} points exceed the cap of {cap}", points.len())));
    }
    for i in 0..points.len() {
        if points[i + 1..].contains(&points[i]) {
            return Err(Error::CoincidentPoints);
        }
    }
    Ok(())
}

fn tour_of(points: &[Point], order: &[usize]) -> Tour {
    Tour { vertices: order.iter().map(|&i| points[i].clone()).collect() }
}

/// Visits every circular order of `0..n` once: index 0 first, and the second
/// vertex smaller than the last. `f` gets complete orders.
fn for_each_circular_order(n: usize, prune: &mut dyn FnMut(&[usize]) -> bool, f: &mut dyn FnMut(&[usize])) {
    fn rec(order: &mut Vec<usize>, used: &mut [bool], prune: &mut dyn FnMut(&[usize]) -> bool, f: &mut dyn FnMut(&[usize])) {
        let n = used.len();
        if order.len() == n {
            if n < 3 || order[1] < order[n - 1] {
                f(order);
            }
            return;
        }
        for v in 1..n {
            if used[v] {
                continue;
            }
            order.push(v);
            if !prune(order) {
                used[v] = true;
                rec(order, used, prune, f);
                used[v] = false;
            }
            order.pop();
        }
    }
    let mut used = vec![false; n];
    used[0] = true;
    rec(&mut vec![0], &mut used, prune, f);
}

/// Tour minimizing the largest turn, exact.
pub fn brute_minmax_turn_tour(points: &[Point], cap: usize) -> Result<(Tour, TurnMeasure)> {
    check_points(points, 3, cap)?;
    let t = TurnTable::new(points)?;
    let n = points.len();
    let mut best: Option<Vec<usize>> = None;
    // interior turns of a prefix are final
    let prefix_max = |o: &[usize]| {
        (1..o.len().saturating_sub(1)).map(|i| t.rank[t.idx(o[i - 1], o[i], o[i + 1])]).max().unwrap_or(0)
    };
    let bound = std::cell::Cell::new(u32::MAX);
    for_each_circular_order(
        n,
        &mut |o| prefix_max(o) >= bound.get(),
        &mut |o| {
            let m = (0..n).map(|i| t.rank[t.idx(o[(i + n - 1) % n], o[i], o[(i + 1) % n])]).max().unwrap();
            if m < bound.get() {
                bound.set(m);
                best = Some(o.to_vec());
            }
        },
    );
    let order = best.expect("at least one order");
    let tour = tour_of(points, &order);
    let m = (0..n)
        .map(|i| t.measures[t.idx(order[(i + n - 1) % n], order[i], order[(i + 1) % n])].clone().unwrap())
        .max()
        .unwrap();
    Ok((tour, m))
}

#[derive(Debug, Clone, Serialize)]
pub struct MinSumResult {
    pub tour: Tour,
    pub sum: f64,
    /// Bound on the accumulated floating-point error of `sum`.
    pub error_bound: f64,
}

pub fn sum_error_bound(n: usize) -> f64 {
    // each turn within a few ulps of pi, plus one rounding per addition
    (n as f64) * 8.0 * f64::EPSILON * PI * 2.0
}

/// Tour minimizing the total turn. Turns are summed in floating point; two
/// orders whose sums differ by less than the error bound count as tied and
/// the first one found is kept.
pub fn brute_minsum_turn_tour(points: &[Point], cap: usize) -> Result<MinSumResult> {
    check_points(points, 3, cap)?;
    let t = TurnTable::new(points)?;
    let n = points.len();
    let eps = sum_error_bound(n);
    let best_sum = std::cell::Cell::new(f64::INFINITY);
    let mut best: Vec<usize> = vec![];
    let prefix_sum = |o: &[usize]| {
        (1..o.len().saturating_sub(1)).map(|i| t.radians[t.idx(o[i - 1], o[i], o[i + 1])]).sum::<f64>()
    };
    for_each_circular_order(
        n,
        &mut |o| prefix_sum(o) > best_sum.get() + eps,
        &mut |o| {
            let s: f64 = (0..n).map(|i| t.radians[t.idx(o[(i + n - 1) % n], o[i], o[(i + 1) % n])]).sum();
            if s < best_sum.get() - eps {
                best_sum.set(s);
                best = o.to_vec();
            }
        },
    );
    Ok(MinSumResult { tour: tour_of(points, &best), sum: best_sum.get(), error_bound: eps })
}

#[derive(Debug, Clone, Serialize)]
pub struct MinLinkResult {
    pub tour: Tour,
    pub links: usize,
    pub optimal: bool,
}

/// Drops vertices where the tour goes straight on. Coverage and link count
/// are unchanged.
pub fn compress_straight(tour: &Tour) -> Tour {
    let mut v = tour.vertices.clone();
    loop {
        let n = v.len();
        if n <= 2 {
            break;
        }
        let straight = (0..n).find(|&i| turn(&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n]).is_ok_and(|t| t.is_zero()));
        match straight {
            Some(i) => {
                v.remove(i);
            }
            None => break,
        }
    }
    Tour { vertices: v }
}

/// Spanning tour with fewest links. Since straight-through vertices can be
/// dropped, the optimum equals the fewest vertices of any covering circular
/// order, found by iterative deepening on that count. `node_cap` bounds the
/// search; on exhaustion the compressed Hamiltonian order is returned
/// flagged as not optimal.
pub fn brute_minlink_spanning_tour(points: &[Point], cap: usize, node_cap: u64) -> Result<MinLinkResult> {
    check_points(points, 2, cap.min(128))?;
    let n = points.len();
    let mut seg = vec![0u128; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                seg[i * n + j] = (0..n).filter(|&q| on_segment(&points[q], &points[i], &points[j])).fold(0u128, |m, q| m | 1 << q);
            }
        }
    }
    let all: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };

    struct Search<'a> {
        n: usize,
        seg: &'a [u128],
        all: u128,
        size: usize,
        path: Vec<usize>,
        nodes: u64,
        cap: u64,
        aborted: bool,
    }
    impl Search<'_> {
        fn go(&mut self, covered: u128) -> bool {
            self.nodes += 1;
            if self.nodes > self.cap {
                self.aborted = true;
                return false;
            }
            let len = self.path.len();
            let last = self.path[len - 1];
            let start = self.path[0];
            if len == self.size {
                if self.size >= 3 && self.path[1] > self.path[len - 1] {
                    return false;
                }
                return covered | self.seg[last * self.n + start] == self.all;
            }
            let open = self.all & !covered;
            let segments_left = (self.size - len + 1) as u32;
            let mut gain = 0;
            for i in start..self.n {
                for j in i + 1..self.n {
                    gain = gain.max((self.seg[i * self.n + j] & open).count_ones());
                }
            }
            if open.count_ones() > segments_left * gain {
                return false;
            }
            for v in start + 1..self.n {
                if self.path.contains(&v) {
                    continue;
                }
                self.path.push(v);
                let found = self.go(covered | self.seg[last * self.n + v]);
                if found {
                    return true;
                }
                self.path.pop();
                if self.aborted {
                    return false;
                }
            }
            false
        }
    }

    let mut s = Search { n, seg: &seg, all, size: 2, path: vec![], nodes: 0, cap: node_cap, aborted: false };
    for size in 2..=n {
        s.size = size;
        for start in 0..n {
            s.path = vec![start];
            if s.go(1u128 << start) {
                let tour = tour_of(points, &s.path);
                let links = tour.links();
                return Ok(MinLinkResult { tour, links, optimal: true });
            }
            if s.aborted {
                let tour = compress_straight(&Tour { vertices: points.to_vec() });
                let links = tour.links();
                return Ok(MinLinkResult { tour, links, optimal: false });
            }
        }
    }
    unreachable!("the Hamiltonian order always covers")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringCheck {
    pub links: usize,
    pub covers_all: bool,
}

pub fn validate_covering_tour(chain: &Tour, points: &[Point]) -> CoveringCheck {
    let v = &chain.vertices;
    let n = v.len();
    let covers_all = points.iter().all(|p| (0..n).any(|i| on_segment(p, &v[i], &v[(i + 1) % n])));
    CoveringCheck { links: chain.links(), covers_all }
}

pub fn is_obtuse(t: &Tour) -> bool {
    t.turns().iter().all(|m| m.is_at_most_right())
}
