//! Point gadget for E3-Occ-Max-E2-SAT: four points per variable and one per
//! clause, with line sets translated to and from truth assignments.

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::cover::{exact_cover_points_by_lines, exact_max_coverage, isolated_point_line, line_incidences, ExactOptions};
use crate::error::{Error, Result};
use crate::geom::{intersect, line_through, Line, Point, Rational};
use crate::instance::{covered_by_lines, Annotations, PointSetInstance, SatInstance};
use crate::rng;

/// Index pairs of the four allowed lines per variable, 0-based:
/// e12, e34, e13, e24.
pub const E12: (usize, usize) = (0, 1);
pub const E34: (usize, usize) = (2, 3);
pub const E13: (usize, usize) = (0, 2);
pub const E24: (usize, usize) = (1, 3);

/// Clause point `clause` lies on the line through variable points `r` and
/// `s` of variable `var` (all 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub clause: usize,
    pub var: usize,
    pub r: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GadgetLayout {
    pub sat: SatInstance,
    pub var_points: Vec<[Point; 4]>,
    pub clause_points: Vec<Point>,
    pub triples: Vec<Triple>,
}

impl GadgetLayout {
    pub fn n(&self) -> usize {
        self.var_points.len()
    }

    pub fn m(&self) -> usize {
        self.clause_points.len()
    }

    /// Variable points first (4 per variable), then clause points.
    pub fn points(&self) -> Vec<Point> {
        self.var_points.iter().flat_map(|v| v.iter().cloned()).chain(self.clause_points.iter().cloned()).collect()
    }

    pub fn var_index(&self, var: usize, r: usize) -> usize {
        4 * var + r
    }

    pub fn clause_index(&self, j: usize) -> usize {
        4 * self.n() + j
    }

    pub fn e(&self, var: usize, r: usize, s: usize) -> Line {
        line_through(&self.var_points[var][r], &self.var_points[var][s]).expect("distinct variable points")
    }

    pub fn allowed(&self, var: usize) -> [Line; 4] {
        [E12, E34, E13, E24].map(|(r, s)| self.e(var, r, s))
    }

    pub fn roles(&self) -> Vec<String> {
        let mut roles = Vec::new();
        for i in 0..self.n() {
            for r in 0..4 {
                roles.push(format!("var:{}:{}", i + 1, r + 1));
            }
        }
        roles.extend((0..self.m()).map(|j| format!("clause:{}", j + 1)));
        roles
    }

    pub fn to_instance(&self, seed: u64) -> PointSetInstance {
        PointSetInstance {
            points: self.points(),
            annotations: Annotations {
                roles: self.roles(),
                meta: json!({ "sat": self.sat, "seed": seed, "triples": self.triples }),
            },
        }
    }

    /// Rebuilds the layout from a saved gadget instance.
    pub fn from_instance(inst: &PointSetInstance) -> Result<GadgetLayout> {
        let sat: SatInstance = serde_json::from_value(inst.annotations.meta.get("sat").cloned().unwrap_or_default())
            .map_err(|_| Error::InvalidArgument("gadget instance lacks its SAT annotation".into()))?;
        sat.validate()?;
        let (n, m) = (sat.n, sat.m());
        if inst.points.len() != 4 * n + m {
            return Err(Error::InvalidArgument("gadget point count does not match its SAT annotation".into()));
        }
        let var_points = (0..n).map(|i| std::array::from_fn(|r| inst.points[4 * i + r].clone())).collect();
        let clause_points = inst.points[4 * n..].to_vec();
        let triples = prescribed_triples(&sat);
        let layout = GadgetLayout { sat, var_points, clause_points, triples };
        validate_layout(&layout)?;
        Ok(layout)
    }
}

/// The three prescribed collinear triples of every variable.
pub fn prescribed_triples(sat: &SatInstance) -> Vec<Triple> {
    let mut out = Vec::new();
    for var in 0..sat.n {
        let occ: Vec<(usize, bool)> = sat
            .clauses
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().filter(|l| l.unsigned_abs() as usize == var + 1).map(move |&l| (j, l > 0)))
            .collect();
        let pos: Vec<usize> = occ.iter().filter(|o| o.1).map(|o| o.0).collect();
        let neg: Vec<usize> = occ.iter().filter(|o| !o.1).map(|o| o.0).collect();
        let pairs = if pos.len() == 2 {
            [(pos[0], E12), (pos[1], E34), (neg[0], E13)]
        } else {
            [(neg[0], E13), (neg[1], E24), (pos[0], E12)]
        };
        out.extend(pairs.iter().map(|&(clause, (r, s))| Triple { clause, var, r, s }));
    }
    out
}

/// Exactly the prescribed triples are collinear; no four points collinear.
pub fn validate_layout(layout: &GadgetLayout) -> Result<()> {
    let pts = layout.points();
    for i in 0..pts.len() {
        if pts[i + 1..].contains(&pts[i]) {
            return Err(Error::Construction(format!("gadget point {i} repeats")));
        }
    }
    let mut expected: Vec<Vec<usize>> = layout
        .triples
        .iter()
        .map(|t| {
            let mut v = vec![layout.var_index(t.var, t.r), layout.var_index(t.var, t.s), layout.clause_index(t.clause)];
            v.sort_unstable();
            v
        })
        .collect();
    expected.sort();
    let mut found: Vec<Vec<usize>> = line_incidences(&pts).into_iter().map(|(_, s)| s).filter(|s| s.len() >= 3).collect();
    found.sort();
    if found != expected {
        return Err(Error::Construction("gadget has unprescribed collinearities".into()));
    }
    Ok(())
}

fn random_coord<R: Rng>(rng: &mut R, lo: i64, span: i64) -> Rational {
    let d = rng.gen_range(1..=3i64);
    Rational::new(BigInt::from(lo * d + rng.gen_range(0..=span * d)), BigInt::from(d))
}

pub const RESAMPLE_BUDGET: usize = 2000;

pub fn build_gadget(sat: &SatInstance, seed: u64) -> Result<(PointSetInstance, GadgetLayout)> {
    sat.validate()?;
    let triples = prescribed_triples(sat);
    let mut rng = rng::stream(seed, "gadget");
    for _ in 0..RESAMPLE_BUDGET {
        let var_points: Vec<[Point; 4]> = (0..sat.n)
            .map(|i| std::array::from_fn(|_| Point::new(random_coord(&mut rng, 40 * i as i64, 16), random_coord(&mut rng, 0, 16))))
            .collect();
        let Some(clause_points) = clause_points(sat.m(), &var_points, &triples) else { continue };
        let layout = GadgetLayout { sat: sat.clone(), var_points, clause_points, triples: triples.clone() };
        if validate_layout(&layout).is_ok() {
            return Ok((layout.to_instance(seed), layout));
        }
    }
    Err(Error::Construction(format!("no valid gadget placement within {RESAMPLE_BUDGET} samples for seed {seed}")))
}

fn clause_points(m: usize, var_points: &[[Point; 4]], triples: &[Triple]) -> Option<Vec<Point>> {
    (0..m)
        .map(|j| {
            let lines: Vec<Line> = triples
                .iter()
                .filter(|t| t.clause == j)
                .map(|t| line_through(&var_points[t.var][t.r], &var_points[t.var][t.s]).ok())
                .collect::<Option<_>>()?;
            intersect(&lines[0], &lines[1])
        })
        .collect()
}

/// c1 = v1 ∨ v2, c2 = ¬v1 ∨ v2, c3 = ¬v1 ∨ ¬v2.
pub fn figure_instance() -> SatInstance {
    SatInstance::new(2, vec![[1, 2], [-1, 2], [-1, -2]])
}

/// Random valid instance with `n` variables (n even).
pub fn random_sat(n: usize, seed: u64) -> Result<SatInstance> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("n must be positive and even, got {n}")));
    }
    let mut rng = rng::stream(seed, "sat");
    loop {
        let mut lits: Vec<i64> = Vec::new();
        for v in 1..=n as i64 {
            let neg = rng.gen_range(0..3);
            let two_pos = rng.gen_bool(0.5);
            for o in 0..3 {
                let positive = if two_pos { o != neg } else { o == neg };
                lits.push(if positive { v } else { -v });
            }
        }
        rand::seq::SliceRandom::shuffle(lits.as_mut_slice(), &mut rng);
        let clauses: Vec<[i64; 2]> = lits.chunks(2).map(|c| [c[0], c[1]]).collect();
        let sat = SatInstance::new(n, clauses);
        if sat.validate().is_ok() {
            return Ok(sat);
        }
    }
}

pub fn assignment_to_lines(g: &[bool], layout: &GadgetLayout) -> Vec<Line> {
    (0..layout.n())
        .flat_map(|i| {
            let [a, b] = if g[i] { [E12, E34] } else { [E13, E24] };
            [layout.e(i, a.0, a.1), layout.e(i, b.0, b.1)]
        })
        .collect()
}

pub fn is_canonical(lines: &[Line], layout: &GadgetLayout) -> bool {
    (0..layout.n()).all(|i| {
        let li: Vec<&Line> = lines.iter().filter(|l| layout.var_points[i].iter().any(|p| l.contains(p))).collect();
        let [e12, e34, e13, e24] = layout.allowed(i);
        match li.as_slice() {
            [] => true,
            [l] => [&e12, &e34, &e13, &e24].contains(l),
            [a, b] => {
                let pair = |x: &Line, y: &Line| (*a == x && *b == y) || (*a == y && *b == x);
                pair(&e12, &e34) || pair(&e13, &e24)
            }
            _ => false,
        }
    })
}

/// Working state of canonicalization: line slots and the map f from points
/// to slots.
struct Mapping<'a> {
    layout: &'a GadgetLayout,
    points: Vec<Point>,
    slots: Vec<Option<Line>>,
    f: Vec<Option<usize>>,
}

impl<'a> Mapping<'a> {
    fn new(lines: &[Line], layout: &'a GadgetLayout) -> Self {
        let points = layout.points();
        let mut slots: Vec<Option<Line>> = Vec::new();
        for l in lines {
            if !slots.iter().flatten().any(|x| x == l) {
                slots.push(Some(l.clone()));
            }
        }
        let f = points.iter().map(|p| slots.iter().position(|l| l.as_ref().is_some_and(|l| l.contains(p)))).collect();
        Mapping { layout, points, slots, f }
    }

    fn var_of(&self, p: usize) -> Option<usize> {
        (p < 4 * self.layout.n()).then_some(p / 4)
    }

    fn mapped_to(&self, slot: usize) -> Vec<usize> {
        (0..self.points.len()).filter(|&p| self.f[p] == Some(slot)).collect()
    }

    /// 0, 1 or 2 by the mapped variable points.
    fn slot_type(&self, slot: usize) -> usize {
        let vars: Vec<usize> = self.mapped_to(slot).into_iter().filter_map(|p| self.var_of(p)).collect();
        if vars.is_empty() {
            0
        } else if (0..vars.len()).any(|a| (a + 1..vars.len()).any(|b| vars[a] == vars[b])) {
            2
        } else {
            1
        }
    }

    /// Slots with a variable point of `var` mapped to them.
    fn lf(&self, var: usize) -> Vec<usize> {
        let mut s: Vec<usize> = (0..4).filter_map(|r| self.f[4 * var + r]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    fn add(&mut self, line: Line) -> usize {
        if let Some(i) = self.slots.iter().position(|l| l.as_ref() == Some(&line)) {
            return i;
        }
        self.slots.push(Some(line));
        self.slots.len() - 1
    }

    fn remove(&mut self, slot: usize) {
        self.slots[slot] = None;
        for x in self.f.iter_mut() {
            if *x == Some(slot) {
                *x = None;
            }
        }
    }

    fn mapped_count(&self) -> usize {
        self.f.iter().flatten().count()
    }

    /// Merge pairs of type-1 lines of one variable until |L_i^f| <= 2.
    fn step1(&mut self) {
        for var in 0..self.layout.n() {
            while self.lf(var).len() > 2 {
                let ones: Vec<usize> = self.lf(var).into_iter().filter(|&s| self.slot_type(s) == 1).collect();
                let [s1, s2] = [ones[0], ones[1]];
                let own = |m: &Self, s: usize| m.mapped_to(s).into_iter().find(|&p| m.var_of(p) == Some(var)).unwrap();
                let (p1, p2) = (own(self, s1), own(self, s2));
                let others: Vec<usize> =
                    self.mapped_to(s1).into_iter().chain(self.mapped_to(s2)).filter(|&p| p != p1 && p != p2).collect();
                let keep_line = match others.as_slice() {
                    [] => None,
                    [o] => Some(self.slots[self.f[*o].unwrap()].clone().unwrap()),
                    [a, b] => Some(line_through(&self.points[*a], &self.points[*b]).unwrap()),
                    _ => unreachable!("type-1 lines carry at most one other point"),
                };
                let merged = line_through(&self.points[p1], &self.points[p2]).unwrap();
                self.remove(s1);
                self.remove(s2);
                let t = self.add(merged);
                self.f[p1] = Some(t);
                self.f[p2] = Some(t);
                if let Some(l) = keep_line {
                    let t = self.add(l);
                    for o in others {
                        self.f[o] = Some(t);
                    }
                }
            }
        }
    }

    /// Type-0 lines: drop if nothing is mapped, else turn them about their
    /// single mapped clause point off every variable point.
    fn step2(&mut self) {
        let var_pts: Vec<Point> = self.points[..4 * self.layout.n()].to_vec();
        for s in 0..self.slots.len() {
            if self.slots[s].is_none() || self.slot_type(s) != 0 {
                continue;
            }
            let mapped = self.mapped_to(s);
            let line = self.slots[s].clone().unwrap();
            match mapped.as_slice() {
                [] => self.slots[s] = None,
                [c] => {
                    if var_pts.iter().any(|p| line.contains(p)) {
                        let mut avoid = var_pts.clone();
                        avoid.push(self.points[*c].clone());
                        let rotated = isolated_point_line(&self.points[*c], &avoid);
                        self.slots[s] = None;
                        let t = self.add(rotated);
                        self.f[*c] = Some(t);
                    }
                }
                // two clause points: no variable point is on their line
                _ => {}
            }
        }
    }

    /// Replace each type-1 line by e_i^{r,s} with v_i^s unmapped.
    fn step3(&mut self) {
        while let Some(s) = (0..self.slots.len()).find(|&s| self.slots[s].is_some() && self.slot_type(s) == 1) {
            let mapped = self.mapped_to(s);
            let p_r = *mapped.iter().find(|&&p| self.var_of(p).is_some()).unwrap();
            let var = p_r / 4;
            let p_s = (4 * var..4 * var + 4).find(|&q| q != p_r && self.f[q].is_none()).expect("some variable point is unmapped");
            self.remove(s);
            let t = self.add(line_through(&self.points[p_r], &self.points[p_s]).unwrap());
            self.f[p_r] = Some(t);
            self.f[p_s] = Some(t);
        }
    }

    /// Swap e14 / e23 selections for allowed ones.
    fn step4(&mut self) {
        for var in 0..self.layout.n() {
            let e14 = self.layout.e(var, 0, 3);
            let e23 = self.layout.e(var, 1, 2);
            let lf = self.lf(var);
            let bad: Vec<usize> = lf.iter().copied().filter(|&s| self.slots[s] == Some(e14.clone()) || self.slots[s] == Some(e23.clone())).collect();
            if bad.is_empty() {
                continue;
            }
            let base = 4 * var;
            match lf.len() {
                1 => {
                    self.remove(bad[0]);
                    let t = self.add(self.layout.e(var, E12.0, E12.1));
                    self.f[base + E12.0] = Some(t);
                    self.f[base + E12.1] = Some(t);
                }
                _ => {
                    for &s in &bad {
                        self.remove(s);
                    }
                    for (r, s) in [E12, E34] {
                        let t = self.add(self.layout.e(var, r, s));
                        self.f[base + r] = Some(t);
                        self.f[base + s] = Some(t);
                    }
                }
            }
        }
    }

    /// Sorted lines, minus any line whose points are all covered by the
    /// others. Removing such lines keeps the set canonical and makes a second
    /// pass a no-op.
    fn lines(&self) -> Vec<Line> {
        let mut out: Vec<Line> = self.slots.iter().flatten().cloned().collect();
        out.sort();
        out.dedup();
        let mut i = 0;
        while i < out.len() {
            let redundant = self
                .points
                .iter()
                .filter(|p| out[i].contains(p))
                .all(|p| out.iter().enumerate().any(|(j, l)| j != i && l.contains(p)));
            if redundant {
                out.remove(i);
            } else {
                i += 1;
            }
        }
        out
    }
}

/// Transforms `lines` into a canonical set no larger and covering no fewer
/// points. Output is sorted.
pub fn canonicalize(lines: &[Line], layout: &GadgetLayout) -> Vec<Line> {
    let mut m = Mapping::new(lines, layout);
    let before = m.mapped_count();
    m.step1();
    m.step2();
    m.step3();
    m.step4();
    debug_assert!(m.mapped_count() >= before);
    m.lines()
}

/// Canonical line set completed to a matching pair for every variable. Free
/// lines (touching no variable point) are dropped first, then each
/// incomplete variable takes the pair covering more clause points.
pub fn complete_canonical(lines: &[Line], layout: &GadgetLayout) -> Vec<Line> {
    let canon = canonicalize(lines, layout);
    let pts = layout.points();
    let mut out = Vec::new();
    for i in 0..layout.n() {
        let li: Vec<&Line> = canon.iter().filter(|l| layout.var_points[i].iter().any(|p| l.contains(p))).collect();
        let [e12, e34, e13, e24] = layout.allowed(i);
        let truthy = li.iter().any(|l| **l == e12 || **l == e34);
        let falsy = li.iter().any(|l| **l == e13 || **l == e24);
        let pick_true = if truthy != falsy {
            truthy
        } else {
            let gain = |a: &Line, b: &Line| pts[4 * layout.n()..].iter().filter(|p| a.contains(p) || b.contains(p)).count();
            gain(&e12, &e34) >= gain(&e13, &e24)
        };
        if pick_true {
            out.extend([e12, e34]);
        } else {
            out.extend([e13, e24]);
        }
    }
    out
}

/// Assignment read off a line set. When `|lines| <= 2n` it satisfies at
/// least `covered(lines) - 4n` clauses.
pub fn lines_to_assignment(lines: &[Line], layout: &GadgetLayout) -> Vec<bool> {
    let done = complete_canonical(lines, layout);
    (0..layout.n()).map(|i| done.contains(&layout.e(i, E12.0, E12.1))).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub w_star: usize,
    pub x_star: usize,
    pub k_star: usize,
    pub exact_completed: bool,
    /// covered(assignment_to_lines(g)) = 4n + sat(g) for every g
    pub direct_all: bool,
    pub max_cover_identity: bool,
    pub min_cover_bound: bool,
    pub clauses_from_cover: bool,
    /// The assignment read off a minimum cover satisfies at least
    /// m - 2(k* - 2n) clauses.
    pub min_cover_assignment: bool,
    pub x_le_4n_plus_m: bool,
    pub x_lt_5w: bool,
    pub counterexample: Option<String>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.exact_completed
            && self.direct_all
            && self.max_cover_identity
            && self.min_cover_bound
            && self.clauses_from_cover
            && self.min_cover_assignment
            && self.x_le_4n_plus_m
            && self.x_lt_5w
    }
}

pub fn verify_sat_lemmas(sat: &SatInstance, seed: u64) -> Result<LemmaReport> {
    if sat.n > 4 {
        return Err(Error::CapExceeded(format!("brute force is limited to n <= 4, got {}", sat.n)));
    }
    let (inst, layout) = build_gadget(sat, seed)?;
    let pts = inst.points;
    let (n, m) = (sat.n, sat.m());
    let (w_star, _) = sat.max_satisfied();
    let opts = ExactOptions::for_points();
    let maxcov = exact_max_coverage(&pts, 2 * n, &opts)?;
    let cover = exact_cover_points_by_lines(&pts, &opts)?;
    let x_star = maxcov.covered.len();
    let k_star = cover.size();
    let mut counterexample = None;

    let mut direct_all = true;
    for mask in 0u64..1 << n {
        let g: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let got = covered_by_lines(&pts, &assignment_to_lines(&g, &layout)).len();
        if got != 4 * n + sat.satisfied(&g) {
            direct_all = false;
            counterexample.get_or_insert(format!("assignment {g:?} covers {got} points"));
        }
    }
    let clauses_from_cover = (0..=m).all(|w| k_star > 2 * n + (m - w) / 2 || w_star >= w);
    let g = lines_to_assignment(&cover.chosen, &layout);
    // k* <= 2n + floor((m - w)/2)  iff  w <= m - 2(k* - 2n)
    let promised = m as i64 - 2 * (k_star as i64 - 2 * n as i64);
    let min_cover_assignment = sat.satisfied(&g) as i64 >= promised.min(m as i64);
    if !min_cover_assignment {
        counterexample.get_or_insert(format!("minimum cover gives assignment {g:?}"));
    }
    Ok(LemmaReport {
        n,
        m,
        seed,
        w_star,
        x_star,
        k_star,
        exact_completed: maxcov.optimal && cover.optimal,
        direct_all,
        max_cover_identity: x_star == 4 * n + w_star,
        min_cover_bound: k_star <= 2 * n + (m - w_star).div_ceil(2),
        clauses_from_cover,
        min_cover_assignment,
        x_le_4n_plus_m: x_star <= 4 * n + m,
        x_lt_5w: x_star < 5 * w_star,
        counterexample,
    })
}
