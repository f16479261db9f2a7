use std::collections::HashSet;

use linecover::adversary::{dual_line_of_point, dualize};
use linecover::constructions::triangle::{build_triangle_instance, triangle_checks};
use linecover::cover::{exact_cover_points_by_lines, greedy_cover_points_by_lines, lines_cover_all, ExactOptions};
use linecover::geom::{collinear, turn, Line, Point};
use linecover::instance::{LineSetInstance, Tour};
use linecover::tour::{brute_minlink_spanning_tour, brute_minmax_turn_tour, brute_minsum_turn_tour, validate_covering_tour};
use proptest::prelude::*;

fn point_set(min: usize, max: usize, side: i64) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::hash_set((0..=side, 0..=side), min..=max).prop_map(|s| {
        let mut v: Vec<(i64, i64)> = s.into_iter().collect();
        v.sort();
        v.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect()
    })
}

fn sum_of(t: &Tour) -> f64 {
    t.turns().iter().map(|m| m.radians()).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn objectives_ignore_rotation_and_reversal(pts in point_set(3, 6, 5), k in 0usize..6) {
        let (t, m) = brute_minmax_turn_tour(&pts, 9).unwrap();
        prop_assert_eq!(t.max_turn(), m.clone());
        prop_assert_eq!(t.reversed().max_turn(), m.clone());
        prop_assert_eq!(t.rotated(k).max_turn(), m);

        let s = brute_minsum_turn_tour(&pts, 9).unwrap();
        prop_assert!((sum_of(&s.tour) - s.sum).abs() <= s.error_bound);
        prop_assert!((sum_of(&s.tour.reversed()) - s.sum).abs() <= s.error_bound);
        prop_assert!((sum_of(&s.tour.rotated(k)) - s.sum).abs() <= s.error_bound);

        let l = brute_minlink_spanning_tour(&pts, 12, u64::MAX).unwrap();
        prop_assert!(l.links <= pts.len());
        for tour in [l.tour.clone(), l.tour.reversed(), l.tour.rotated(k)] {
            let check = validate_covering_tour(&tour, &pts);
            prop_assert!(check.covers_all);
            prop_assert_eq!(check.links, l.links);
        }
    }

    #[test]
    fn greedy_covers_and_exact_is_no_larger(pts in point_set(1, 12, 6)) {
        let g = greedy_cover_points_by_lines(&pts);
        prop_assert!(lines_cover_all(&pts, &g.chosen));
        prop_assert_eq!(g.covered.len(), pts.len());
        let e = exact_cover_points_by_lines(&pts, &ExactOptions::for_points()).unwrap();
        prop_assert!(lines_cover_all(&pts, &e.chosen));
        prop_assert!(e.size() <= g.size());
    }

    #[test]
    fn duality_keeps_incidence(raw in prop::collection::vec((-4i64..=4, -4i64..=4, -6i64..=6), 1..8), probes in point_set(1, 6, 4)) {
        let mut lines: Vec<Line> = raw.iter().filter_map(|&(a, b, c)| Line::from_ints(a, b, c).ok()).collect();
        lines.sort();
        lines.dedup();
        prop_assume!(!lines.is_empty());
        let (dual, lam) = dualize(&LineSetInstance { lines: lines.clone() });
        for p in &probes {
            let dl = dual_line_of_point(p, lam);
            for (l, q) in lines.iter().zip(&dual.points) {
                prop_assert_eq!(l.contains(p), dl.contains(q));
            }
        }
        // concurrency ↔ collinearity
        let uniq: HashSet<&Point> = dual.points.iter().collect();
        prop_assert_eq!(uniq.len(), lines.len());
    }

    #[test]
    fn triangle_invariants_hold(pts in point_set(2, 6, 8), seed in 0u64..50) {
        let tri = build_triangle_instance(&pts, seed).unwrap();
        prop_assert_eq!(tri.points.len(), 3 * pts.len());
        prop_assert!(triangle_checks(&tri).all());
    }

    #[test]
    fn turn_is_symmetric_in_its_ends(pts in point_set(3, 3, 6)) {
        prop_assume!(!collinear(&pts[0], &pts[1], &pts[2]));
        prop_assert_eq!(turn(&pts[0], &pts[1], &pts[2]).unwrap(), turn(&pts[2], &pts[1], &pts[0]).unwrap());
    }
}
