//! Hamiltonian circuits through a marked edge as spanning tours: vertex
//! points on a circle, one edge point inside each edge segment.

use rand::Rng;

use crate::cover::line_incidences;
use crate::error::{Error, Result};
use crate::geom::{collinear, rat, ratio, Point, Rational};
use crate::instance::{CubicGraphInstance, PointSetInstance, Tour};
use crate::rng;
use crate::tour::validate_covering_tour;

pub const HAM_GUARD: usize = 16;

pub fn k4(marked: (usize, usize)) -> CubicGraphInstance {
    let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    CubicGraphInstance { n: 4, edges, marked_edge: marked }
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 joined by rungs.
pub fn prism(marked: (usize, usize)) -> CubicGraphInstance {
    let edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    CubicGraphInstance { n: 6, edges, marked_edge: marked }
}

pub fn petersen(marked: (usize, usize)) -> CubicGraphInstance {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    CubicGraphInstance { n: 10, edges, marked_edge: marked }
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![vec![]; n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    adj
}

fn guard(n: usize) -> Result<()> {
    if n > HAM_GUARD {
        return Err(Error::CapExceeded(format!("{n} vertices, backtracking guard is {HAM_GUARD}")));
    }
    Ok(())
}

/// Hamiltonian path from `s` to `t`, or `None` after exhausting the search.
pub fn find_ham_path(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Result<Option<Vec<usize>>> {
    guard(n)?;
    if s >= n || t >= n || s == t {
        return Err(Error::InvalidArgument("bad path endpoints".into()));
    }
    let adj = adjacency(n, edges);
    let mut used = vec![false; n];
    used[s] = true;
    // t may only come last
    used[t] = true;
    let mut path = vec![s];
    let done = |p: &[usize]| adj[*p.last().unwrap()].contains(&t);
    if extend_to(&adj, n - 1, &mut path, &mut used, &done) {
        path.push(t);
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn extend_to(adj: &[Vec<usize>], len: usize, path: &mut Vec<usize>, used: &mut [bool], done: &dyn Fn(&[usize]) -> bool) -> bool {
    if path.len() == len {
        return done(path);
    }
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        if extend_to(adj, len, path, used, done) {
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

/// Hamiltonian circuit of `g` using the marked edge, listed from one end of
/// that edge to the other.
pub fn find_ham_circuit_with_edge(g: &CubicGraphInstance) -> Result<Option<Vec<usize>>> {
    g.validate().map_err(Error::Validation)?;
    guard(g.n)?;
    let adj = adjacency(g.n, &g.edges);
    let (u, v) = g.marked_edge;
    let mut used = vec![false; g.n];
    used[u] = true;
    used[v] = true;
    let mut path = vec![u, v];
    let done = |p: &[usize]| adj[*p.last().unwrap()].contains(&u);
    Ok(extend_to(&adj, g.n, &mut path, &mut used, &done).then_some(path))
}

#[derive(Debug, Clone)]
pub struct SpanningInstance {
    pub graph: CubicGraphInstance,
    /// G': the marked edge removed, `s'` and `t'` appended.
    pub n_prime: usize,
    pub edges_prime: Vec<(usize, usize)>,
    pub s_prime: usize,
    pub t_prime: usize,
    /// Vertex points first, then one edge point per edge of G'.
    pub points: PointSetInstance,
}

impl SpanningInstance {
    pub fn edge_point(&self, e: usize) -> &Point {
        &self.points.points[self.n_prime + e]
    }

    pub fn vertex_point(&self, v: usize) -> &Point {
        &self.points.points[v]
    }
}

fn circle_point(i: usize, count: usize) -> Point {
    let u = ratio(2 * i as i64 - (count as i64 + 1), count as i64 + 2);
    let one = rat(1);
    let d = &one + &u * &u;
    Point::new((&one - &u * &u) / &d, (rat(2) * &u) / &d)
}

pub fn build_spanning_instance(g: &CubicGraphInstance, seed: u64) -> Result<SpanningInstance> {
    g.validate().map_err(Error::Validation)?;
    let (a, b) = g.marked_edge;
    let n_prime = g.n + 2;
    let (s_prime, t_prime) = (g.n, g.n + 1);
    let mut edges_prime: Vec<(usize, usize)> = g.edges.iter().copied().filter(|&(x, y)| (x.min(y), x.max(y)) != (a.min(b), a.max(b))).collect();
    edges_prime.push((s_prime, a));
    edges_prime.push((t_prime, b));

    let mut pts: Vec<Point> = (1..=n_prime).map(|i| circle_point(i, n_prime)).collect();
    let mut roles: Vec<String> = (0..n_prime).map(|v| format!("v:{v}")).collect();
    let mut rng = rng::stream(seed, "spanning");
    for (e, &(x, y)) in edges_prime.iter().enumerate() {
        let mut placed = None;
        for _ in 0..1000 {
            let q: i64 = rng.gen_range(4..=60);
            let p: i64 = rng.gen_range(q / 4..=3 * q / 4).max(1);
            let lam: Rational = ratio(p, q);
            let (px, py) = (&pts[x], &pts[y]);
            let cand = Point::new(&px.x + &lam * (&py.x - &px.x), &px.y + &lam * (&py.y - &px.y));
            let clash = (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| !(i == x.min(y) && j == x.max(y)) && collinear(&pts[i], &pts[j], &cand)));
            if !clash {
                placed = Some(cand);
                break;
            }
        }
        pts.push(placed.ok_or_else(|| Error::Construction(format!("edge point {e} not placeable, seed {seed}")))?);
        roles.push(format!("e:{}-{}", x, y));
    }
    let inst = SpanningInstance { graph: g.clone(), n_prime, edges_prime, s_prime, t_prime, points: PointSetInstance::with_roles(pts, roles) };
    validate_spanning(&inst)?;
    Ok(inst)
}

/// Exhaustive check: the only lines through three or more points are the
/// edge triples.
pub fn validate_spanning(inst: &SpanningInstance) -> Result<()> {
    let pts = &inst.points.points;
    let mut want: Vec<Vec<usize>> = inst
        .edges_prime
        .iter()
        .enumerate()
        .map(|(e, &(x, y))| {
            let mut t = vec![x, y, inst.n_prime + e];
            t.sort_unstable();
            t
        })
        .collect();
    want.sort();
    let mut got: Vec<Vec<usize>> = line_incidences(pts).into_iter().map(|(_, s)| s).filter(|s| s.len() >= 3).collect();
    got.sort();
    if got != want {
        return Err(Error::Construction("unexpected collinear points".into()));
    }
    Ok(())
}

/// Tour along the Hamiltonian path, then through the unused edge points
/// back to `s'`.
pub fn hampath_to_spanning_tour(path: &[usize], inst: &SpanningInstance) -> Result<Tour> {
    let n = inst.n_prime;
    let mut seen = vec![false; n];
    let ok_shape = path.len() == n && path[0] == inst.s_prime && path[n - 1] == inst.t_prime && path.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true));
    if !ok_shape {
        return Err(Error::InvalidArgument("not a Hamiltonian s'-t' path".into()));
    }
    let mut used = vec![false; inst.edges_prime.len()];
    for w in path.windows(2) {
        let e = inst
            .edges_prime
            .iter()
            .position(|&(x, y)| (x, y) == (w[0], w[1]) || (y, x) == (w[0], w[1]))
            .ok_or_else(|| Error::InvalidArgument(format!("{}-{} is not an edge", w[0], w[1])))?;
        used[e] = true;
    }
    let mut verts: Vec<Point> = path.iter().map(|&v| inst.vertex_point(v).clone()).collect();
    verts.extend((0..used.len()).filter(|&e| !used[e]).map(|e| inst.edge_point(e).clone()));
    let tour = Tour::new(verts).map_err(Error::Validation)?;
    let check = validate_covering_tour(&tour, &inst.points.points);
    let m = inst.graph.edges.len();
    if !check.covers_all || check.links != m + 2 {
        return Err(Error::Construction(format!("tour has {} links, covers {}", check.links, check.covers_all)));
    }
    Ok(tour)
}
