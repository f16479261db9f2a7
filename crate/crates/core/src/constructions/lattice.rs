//! Smallest turn between lattice points in an N×N grid.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{ratio, turn_from_int_vectors, TurnMeasure};

#[derive(Debug, Clone, Serialize)]
pub struct LatticeRow {
    pub n: u32,
    pub min_turn: TurnMeasure,
    /// `(a, b, c)` realizing the minimum, turn taken at `b`.
    pub witness: [(i64, i64); 3],
    pub bound_ok: bool,
}

// signed cos² of the interior angle as a fraction, smaller = straighter
#[derive(Clone, Copy)]
struct Key {
    num: i128,
    den: i128,
    u: (i64, i64),
    v: (i64, i64),
}

impl Key {
    fn cmp(&self, o: &Key) -> Ordering {
        (self.num * o.den).cmp(&(o.num * self.den)).then_with(|| (self.u, self.v).cmp(&(o.u, o.v)))
    }
}

fn fits(n: i64, a: i64, b: i64) -> bool {
    let lo = 0.min(a).min(b);
    let hi = 0.max(a).max(b);
    hi - lo <= n
}

/// Exact minimum nonzero turn over ordered triples `a, b, c` of grid points
/// in `[0, N]²`. Enumerates the arm vectors `a − b` and `c − b`; a pair is
/// realizable iff each coordinate spread of `{0, u, v}` is at most N.
pub fn lattice_min_turn(n: u32) -> Result<(TurnMeasure, [(i64, i64); 3])> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let n = n as i64;
    let vecs: Vec<(i64, i64)> = (-n..=n).flat_map(|x| (-n..=n).map(move |y| (x, y))).filter(|&v| v != (0, 0)).collect();
    let best = vecs
        .par_iter()
        .filter_map(|&u| {
            let mut best: Option<Key> = None;
            for &v in &vecs {
                if !fits(n, u.0, v.0) || !fits(n, u.1, v.1) {
                    continue;
                }
                let dot = (u.0 * v.0 + u.1 * v.1) as i128;
                let cross = (u.0 * v.1 - u.1 * v.0) as i128;
                if cross == 0 {
                    continue;
                }
                let den = ((u.0 * u.0 + u.1 * u.1) * (v.0 * v.0 + v.1 * v.1)) as i128;
                let num = if dot < 0 { -dot * dot } else { dot * dot };
                let k = Key { num, den, u, v };
                if best.as_ref().is_none_or(|b| k.cmp(b) == Ordering::Less) {
                    best = Some(k);
                }
            }
            best
        })
        .reduce_with(|a, b| if b.cmp(&a) == Ordering::Less { b } else { a })
        .ok_or_else(|| Error::InvalidArgument("no non-collinear triple".into()))?;
    let (u, v) = (best.u, best.v);
    let bx = 0.max(-u.0).max(-v.0);
    let by = 0.max(-u.1).max(-v.1);
    let witness = [(bx + u.0, by + u.1), (bx, by), (bx + v.0, by + v.1)];
    Ok((turn_from_int_vectors(u, v), witness))
}

pub fn lattice_row(n: u32) -> Result<LatticeRow> {
    let (min_turn, witness) = lattice_min_turn(n)?;
    let bound = ratio(1, 3 * (n as i64) * (n as i64));
    let bound_ok = min_turn.certify_at_least(&bound);
    Ok(LatticeRow { n, min_turn, witness, bound_ok })
}

pub fn lattice_rows_to_csv(rows: &[LatticeRow]) -> String {
    let mut out = String::from("N,min_turn_num,min_turn_denom_bound,bound_ok\n");
    for r in rows {
        out += &format!("{},{:.12e},{},{}\n", r.n, r.min_turn.radians(), 3 * r.n * r.n, r.bound_ok);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{collinear, turn, Point};

    fn naive(n: i64) -> TurnMeasure {
        let pts: Vec<Point> = (0..=n).flat_map(|x| (0..=n).map(move |y| Point::from_ints(x, y))).collect();
        let mut best: Option<TurnMeasure> = None;
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    if a == b || b == c || a == c || collinear(a, b, c) {
                        continue;
                    }
                    let t = turn(a, b, c).unwrap();
                    if best.as_ref().is_none_or(|m| t < *m) {
                        best = Some(t);
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn unit_square_gives_right_angle() {
        let (t, _) = lattice_min_turn(1).unwrap();
        assert_eq!(t, TurnMeasure::right_angle());
    }

    #[test]
    fn matches_triple_enumeration() {
        for n in 1..=4 {
            let (t, w) = lattice_min_turn(n).unwrap();
            assert_eq!(t, naive(n as i64), "N={n}");
            let p = |q: (i64, i64)| Point::from_ints(q.0, q.1);
            assert_eq!(turn(&p(w[0]), &p(w[1]), &p(w[2])).unwrap(), t);
            assert!(w.iter().all(|q| (0..=n as i64).contains(&q.0) && (0..=n as i64).contains(&q.1)));
        }
    }

    #[test]
    fn shrinks_with_n() {
        let mut last = lattice_min_turn(1).unwrap().0;
        for n in 2..=8 {
            let t = lattice_min_turn(n).unwrap().0;
            assert!(t <= last);
            last = t;
        }
    }
}
