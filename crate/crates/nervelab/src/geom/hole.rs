//! The hole triangle of three pairwise-intersecting convex bodies with empty
//! common intersection.
//!
//! Three such bodies surround a unique bounded complement region (the hole).
//! The closure of its convex hull is a triangle whose corners lie one in each
//! pairwise intersection, and every convex set meeting all three pairwise
//! intersections (a lid) contains all three corners. This module computes
//! those corners exactly.
//!
//! Two routes:
//! - if every pairwise intersection is a single point, the corners are forced;
//! - otherwise the three hull boundaries are walked as an arrangement, the
//!   free arcs are stitched into loops, and the unique negatively oriented
//!   loop (complement kept on the right) is the hole boundary; its convex
//!   hull supplies the corners.
//!
//! Tangential contacts, overlapping edges and other non-transversal incidences
//! are reported as degenerate rather than guessed.

use super::{hull, intersect_nonempty, orient, ConvexBody, GeomError, Point, Rat};
use num_traits::Zero;

/// The three forced points of a hole: every lid contains all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleTriangle {
    /// point in A ∩ B
    pub p_star: Point,
    /// point in B ∩ C
    pub q_star: Point,
    /// point in C ∩ A
    pub r_star: Point,
    /// true when the hull of the hole had fewer than 3 distinct extreme points
    pub degenerate: bool,
}

impl HoleTriangle {
    pub fn points(&self) -> [&Point; 3] {
        [&self.p_star, &self.q_star, &self.r_star]
    }
}

/// Exact polygon of the common intersection of `bodies`, or `None` when empty.
/// Works by basic-point enumeration over the concatenated half-plane
/// representations; the result is compact because each body is.
pub fn intersection_polygon(bodies: &[&ConvexBody]) -> Option<ConvexBody> {
    let cons: Vec<_> = bodies.iter().flat_map(|b| b.hrep().to_vec()).collect();
    let mut pts: Vec<Point> = Vec::new();
    for i in 0..cons.len() {
        for j in (i + 1)..cons.len() {
            let (h, g) = (&cons[i], &cons[j]);
            let det = &h.a * &g.b - &h.b * &g.a;
            if det.is_zero() {
                continue;
            }
            let x = (&h.c * &g.b - &h.b * &g.c) / &det;
            let y = (&h.a * &g.c - &h.c * &g.a) / &det;
            let p = Point::new(x, y);
            if cons.iter().all(|c| c.contains(&p)) {
                pts.push(p);
            }
        }
    }
    if pts.is_empty() {
        return None;
    }
    Some(hull(&pts).expect("nonempty candidate set"))
}

/// The hole triangle of `a`, `b`, `c`.
///
/// Preconditions (checked): all pairwise intersections nonempty, triple
/// intersection empty. Errors with `NotAHole` otherwise.
pub fn hole_triangle(
    a: &ConvexBody,
    b: &ConvexBody,
    c: &ConvexBody,
) -> Result<HoleTriangle, GeomError> {
    let ab = intersection_polygon(&[a, b])
        .ok_or_else(|| GeomError::NotAHole("A and B are disjoint".into()))?;
    let bc = intersection_polygon(&[b, c])
        .ok_or_else(|| GeomError::NotAHole("B and C are disjoint".into()))?;
    let ca = intersection_polygon(&[c, a])
        .ok_or_else(|| GeomError::NotAHole("C and A are disjoint".into()))?;
    if intersect_nonempty(&[a.clone(), b.clone(), c.clone()]).is_some() {
        return Err(GeomError::NotAHole("triple intersection is nonempty".into()));
    }

    if ab.dim() == 0 && bc.dim() == 0 && ca.dim() == 0 {
        return Ok(HoleTriangle {
            p_star: ab.hull_ring()[0].clone(),
            q_star: bc.hull_ring()[0].clone(),
            r_star: ca.hull_ring()[0].clone(),
            degenerate: false,
        });
    }

    if a.dim() < 2 || b.dim() < 2 || c.dim() < 2 {
        return Err(GeomError::DegenerateArrangement(
            "mixed degenerate bodies with non-point pairwise intersections".into(),
        ));
    }

    let loops = free_boundary_loops([a, b, c])?;
    let mut holes: Vec<&Vec<Point>> = Vec::new();
    let mut outer = 0usize;
    for lp in &loops {
        if signed_area_twice(lp) < Rat::zero() {
            holes.push(lp);
        } else {
            outer += 1;
        }
    }
    if holes.len() != 1 || outer != 1 {
        return Err(GeomError::Invariant(format!(
            "expected one hole loop and one outer loop, found {} / {}",
            holes.len(),
            outer
        )));
    }
    let cl_k = hull(holes[0]).expect("hole loop has points");
    let ring = cl_k.hull_ring();
    if ring.len() > 3 {
        return Err(GeomError::Invariant(format!(
            "hole hull has {} extreme points",
            ring.len()
        )));
    }
    let pick = |x: &ConvexBody, y: &ConvexBody| -> Result<Point, GeomError> {
        ring.iter()
            .find(|v| x.contains_point(v) && y.contains_point(v))
            .cloned()
            .ok_or_else(|| GeomError::Invariant("hole hull misses a pairwise intersection".into()))
    };
    Ok(HoleTriangle {
        p_star: pick(a, b)?,
        q_star: pick(b, c)?,
        r_star: pick(c, a)?,
        degenerate: ring.len() < 3,
    })
}

/// Twice the signed area of a closed polyline.
fn signed_area_twice(poly: &[Point]) -> Rat {
    let mut acc = Rat::zero();
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        acc += p.cross(q);
    }
    acc
}

/// Position along a ring: edge index plus parameter within the edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct RingPos {
    edge: usize,
    t: Rat,
}

#[derive(Debug, Clone)]
struct Crossing {
    point: Point,
    /// positions on the two rings it belongs to, indexed by body
    pos: [Option<RingPos>; 3],
}

/// A maximal boundary piece of one ring between consecutive crossings.
#[derive(Debug, Clone)]
struct Arc {
    body: usize,
    from: usize, // crossing id
    to: usize,
    /// polyline of the arc excluding its crossing endpoints
    interior: Vec<Point>,
    sample: Point,
}

fn free_boundary_loops(bodies: [&ConvexBody; 3]) -> Result<Vec<Vec<Point>>, GeomError> {
    let rings: Vec<&[Point]> = bodies.iter().map(|b| b.hull_ring()).collect();
    let mut crossings: Vec<Crossing> = Vec::new();

    for i in 0..3 {
        for j in (i + 1)..3 {
            let found = ring_crossings(rings[i], rings[j])?;
            if found.is_empty() {
                return Err(GeomError::DegenerateArrangement(format!(
                    "boundaries of bodies {i} and {j} do not cross transversally"
                )));
            }
            for (pt, pos_i, pos_j) in found {
                let mut pos = [None, None, None];
                pos[i] = Some(pos_i);
                pos[j] = Some(pos_j);
                crossings.push(Crossing { point: pt, pos });
            }
        }
    }

    // split every ring at its crossings and classify the arcs
    let mut arcs: Vec<Arc> = Vec::new();
    for (body, ring) in rings.iter().enumerate() {
        let mut events: Vec<(RingPos, usize)> = crossings
            .iter()
            .enumerate()
            .filter_map(|(id, c)| c.pos[body].clone().map(|p| (p, id)))
            .collect();
        events.sort();
        if events.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(GeomError::DegenerateArrangement(
                "coincident crossing points on a ring".into(),
            ));
        }
        let m = events.len();
        for e in 0..m {
            let (start, sid) = &events[e];
            let (end, eid) = &events[(e + 1) % m];
            let interior = arc_interior(ring, start, end);
            let sample = match interior.first() {
                Some(v) => v.clone(),
                None => {
                    // same edge: exact midpoint between the two parameters
                    let half = Rat::new(1.into(), 2.into());
                    let t = (&start.t + &end.t) * half;
                    point_on_edge(ring, start.edge, &t)
                }
            };
            arcs.push(Arc {
                body,
                from: *sid,
                to: *eid,
                interior,
                sample,
            });
        }
    }

    // free arcs lie strictly outside both other bodies
    let mut free: Vec<Arc> = Vec::new();
    for arc in arcs {
        let mut inside = false;
        for (other, other_body) in bodies.iter().enumerate() {
            if other == arc.body {
                continue;
            }
            if on_boundary(other_body, &arc.sample) {
                return Err(GeomError::DegenerateArrangement(
                    "arc sample on another boundary".into(),
                ));
            }
            if other_body.contains_point(&arc.sample) {
                inside = true;
            }
        }
        if !inside {
            free.push(arc);
        }
    }

    // stitch: at every crossing on the union boundary there is exactly one
    // free outgoing arc
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); crossings.len()];
    for (k, arc) in free.iter().enumerate() {
        out_of[arc.from].push(k);
    }
    let mut seen = vec![false; free.len()];
    let mut loops: Vec<Vec<Point>> = Vec::new();
    for start in 0..free.len() {
        if seen[start] {
            continue;
        }
        let mut poly: Vec<Point> = Vec::new();
        let mut cur = start;
        loop {
            if seen[cur] {
                return Err(GeomError::Invariant("arc revisited before loop closed".into()));
            }
            seen[cur] = true;
            let arc = &free[cur];
            poly.push(crossings[arc.from].point.clone());
            poly.extend(arc.interior.iter().cloned());
            let nexts = &out_of[arc.to];
            if nexts.len() != 1 {
                return Err(GeomError::DegenerateArrangement(format!(
                    "{} free continuations at a crossing",
                    nexts.len()
                )));
            }
            cur = nexts[0];
            if cur == start {
                break;
            }
        }
        loops.push(poly);
    }
    Ok(loops)
}

/// Ring vertices strictly between two ring positions, in ring order.
/// Crossings sit in edge interiors, so passed vertices are never endpoints.
fn arc_interior(ring: &[Point], start: &RingPos, end: &RingPos) -> Vec<Point> {
    if start.edge == end.edge && start.t < end.t {
        return Vec::new();
    }
    let n = ring.len();
    let mut out = Vec::new();
    let mut e = (start.edge + 1) % n;
    loop {
        out.push(ring[e].clone());
        if e == end.edge {
            break;
        }
        e = (e + 1) % n;
        assert!(out.len() <= n, "arc interior longer than the ring");
    }
    out
}

fn point_on_edge(ring: &[Point], edge: usize, t: &Rat) -> Point {
    let n = ring.len();
    let p = &ring[edge];
    let q = &ring[(edge + 1) % n];
    p.add(&q.sub(p).scale(t))
}

fn on_boundary(body: &ConvexBody, p: &Point) -> bool {
    body.contains_point(p) && body.hrep().iter().any(|h| h.outer_slack(p).is_zero())
}

/// All transversal crossings between two rings; any non-transversal incidence
/// is degenerate.
#[allow(clippy::type_complexity)]
fn ring_crossings(
    r1: &[Point],
    r2: &[Point],
) -> Result<Vec<(Point, RingPos, RingPos)>, GeomError> {
    let mut out = Vec::new();
    let n1 = r1.len();
    let n2 = r2.len();
    for e1 in 0..n1 {
        let (p1, q1) = (&r1[e1], &r1[(e1 + 1) % n1]);
        for e2 in 0..n2 {
            let (p2, q2) = (&r2[e2], &r2[(e2 + 1) % n2]);
            let d1 = q1.sub(p1);
            let d2 = q2.sub(p2);
            let denom = d1.cross(&d2);
            if denom.is_zero() {
                // parallel: overlap would mean a shared segment
                if orient(p1, q1, p2).is_zero() && segments_overlap(p1, q1, p2, q2) {
                    return Err(GeomError::DegenerateArrangement(
                        "collinear overlapping edges".into(),
                    ));
                }
                continue;
            }
            let w = p2.sub(p1);
            let t = w.cross(&d2) / &denom;
            let s = w.cross(&d1) / &denom;
            let zero = Rat::zero();
            let one = Rat::from_integer(1.into());
            let t_in = t >= zero && t <= one;
            let s_in = s >= zero && s <= one;
            if !(t_in && s_in) {
                continue;
            }
            if t.is_zero() || t == one || s.is_zero() || s == one {
                return Err(GeomError::DegenerateArrangement(
                    "ring vertex on another boundary".into(),
                ));
            }
            let pt = p1.add(&d1.scale(&t));
            out.push((
                pt,
                RingPos { edge: e1, t: t.clone() },
                RingPos { edge: e2, t: s.clone() },
            ));
        }
    }
    Ok(out)
}

/// Overlap test for two collinear segments.
fn segments_overlap(p1: &Point, q1: &Point, p2: &Point, q2: &Point) -> bool {
    let d = q1.sub(p1);
    let proj = |p: &Point| d.dot(&p.sub(p1));
    let (a1, b1) = (proj(p1), proj(q1));
    let (a2, b2) = (proj(p2), proj(q2));
    let (lo1, hi1) = if a1 <= b1 { (a1, b1) } else { (b1, a1) };
    let (lo2, hi2) = if a2 <= b2 { (a2, b2) } else { (b2, a2) };
    lo1 < hi2 && lo2 < hi1
}

/// A random hole instance: three fat polygons, pairwise overlapping, with
/// empty triple intersection. Proposals are drawn around three fixed anchor
/// directions and rejected until the hole preconditions hold exactly.
pub fn random_hole_instance(rng: &mut crate::rng::Rng) -> [ConvexBody; 3] {
    // anchor centers at 120 degree spacing, coordinates on a 1/100 grid
    let centers: [(i64, i64); 3] = [(0, 280), (-242, -140), (242, -140)];
    loop {
        let mut bodies = Vec::with_capacity(3);
        for (cx, cy) in centers {
            let npts = rng.int_in(8, 14);
            let spread = rng.int_in(270, 380);
            let pts: Vec<Point> = (0..npts)
                .map(|_| {
                    let dx = rng.int_in(-spread, spread);
                    let dy = rng.int_in(-spread, spread);
                    Point::new(
                        crate::geom::ratio(cx + dx, 100),
                        crate::geom::ratio(cy + dy, 100),
                    )
                })
                .collect();
            bodies.push(hull(&pts).expect("nonempty proposal"));
        }
        let [a, b, c]: [ConvexBody; 3] = bodies.try_into().expect("three bodies");
        let pairwise = intersect_nonempty(&[a.clone(), b.clone()]).is_some()
            && intersect_nonempty(&[b.clone(), c.clone()]).is_some()
            && intersect_nonempty(&[c.clone(), a.clone()]).is_some();
        if !pairwise {
            continue;
        }
        if intersect_nonempty(&[a.clone(), b.clone(), c.clone()]).is_some() {
            continue;
        }
        if a.dim() == 2 && b.dim() == 2 && c.dim() == 2 {
            return [a, b, c];
        }
    }
}

/// A random lid: the hull of one random point from each pairwise
/// intersection plus a few noise points. Meets all three pairwise
/// intersections by construction.
pub fn random_lid(rng: &mut crate::rng::Rng, bodies: &[ConvexBody; 3]) -> ConvexBody {
    let [a, b, c] = bodies;
    let mut pts = vec![
        random_point_in(rng, &intersection_polygon(&[a, b]).expect("A meets B")),
        random_point_in(rng, &intersection_polygon(&[b, c]).expect("B meets C")),
        random_point_in(rng, &intersection_polygon(&[c, a]).expect("C meets A")),
    ];
    for _ in 0..rng.int_in(0, 3) {
        pts.push(Point::new(
            crate::geom::ratio(rng.int_in(-1500, 1500), 100),
            crate::geom::ratio(rng.int_in(-1500, 1500), 100),
        ));
    }
    hull(&pts).expect("lid has points")
}

/// A random point of a convex body: a random rational convex combination of
/// its extreme points.
fn random_point_in(rng: &mut crate::rng::Rng, body: &ConvexBody) -> Point {
    let ring = body.hull_ring();
    let weights: Vec<i64> = ring.iter().map(|_| rng.int_in(1, 100)).collect();
    let total: i64 = weights.iter().sum();
    let mut x = Rat::zero();
    let mut y = Rat::zero();
    for (p, w) in ring.iter().zip(&weights) {
        let lambda = crate::geom::ratio(*w, total);
        x += &p.x * &lambda;
        y += &p.y * &lambda;
    }
    Point::new(x, y)
}

/// Outcome of the seeded lid suite: `failures` counts instances where some
/// forced point escaped a lid or landed outside its pairwise intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LidSuiteReport {
    pub instances: usize,
    pub lids_per_instance: usize,
    pub failures: usize,
    pub degenerate_rejections: usize,
}

/// Runs the lid property suite: for each random hole, the computed corner
/// points must lie in their pairwise intersections and inside every random
/// lid, all exactly.
pub fn lid_suite(seed: u64, instances: usize, lids_per_instance: usize) -> LidSuiteReport {
    let mut rng = crate::rng::Rng::new(seed);
    let mut failures = 0;
    let mut degenerate_rejections = 0;
    let mut done = 0;
    while done < instances {
        let bodies = random_hole_instance(&mut rng);
        let ht = match hole_triangle(&bodies[0], &bodies[1], &bodies[2]) {
            Ok(ht) => ht,
            Err(GeomError::DegenerateArrangement(_)) => {
                degenerate_rejections += 1;
                continue;
            }
            Err(_) => {
                failures += 1;
                done += 1;
                continue;
            }
        };
        let [a, b, c] = &bodies;
        if !(a.contains_point(&ht.p_star) && b.contains_point(&ht.p_star)) {
            failures += 1;
        }
        if !(b.contains_point(&ht.q_star) && c.contains_point(&ht.q_star)) {
            failures += 1;
        }
        if !(c.contains_point(&ht.r_star) && a.contains_point(&ht.r_star)) {
            failures += 1;
        }
        for _ in 0..lids_per_instance {
            let lid = random_lid(&mut rng, &bodies);
            for p in ht.points() {
                if !lid.contains_point(p) {
                    failures += 1;
                }
            }
        }
        done += 1;
    }
    LidSuiteReport {
        instances,
        lids_per_instance,
        failures,
        degenerate_rejections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, Point};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> ConvexBody {
        hull(&[pt(a.0, a.1), pt(b.0, b.1)]).unwrap()
    }

    #[test]
    fn triangle_frame_hole() {
        let a = seg((0, 0), (2, 0));
        let b = seg((0, 0), (0, 2));
        let c = seg((2, 0), (0, 2));
        let ht = hole_triangle(&a, &b, &c).unwrap();
        assert_eq!(ht.p_star, pt(0, 0));
        assert_eq!(ht.q_star, pt(0, 2));
        assert_eq!(ht.r_star, pt(2, 0));
        assert!(!ht.degenerate);
    }

    #[test]
    fn translation_equivariance() {
        let v = pt(5, 7);
        let a = seg((0, 0), (2, 0)).translate(&v);
        let b = seg((0, 0), (0, 2)).translate(&v);
        let c = seg((2, 0), (0, 2)).translate(&v);
        let ht = hole_triangle(&a, &b, &c).unwrap();
        assert_eq!(ht.p_star, pt(5, 7));
        assert_eq!(ht.q_star, pt(5, 9));
        assert_eq!(ht.r_star, pt(7, 7));
    }

    #[test]
    fn not_a_hole_when_triple_meets() {
        let a = seg((0, 0), (2, 0));
        let b = seg((0, 0), (0, 2));
        let c = seg((0, 0), (2, 2));
        let err = hole_triangle(&a, &b, &c).unwrap_err();
        assert!(matches!(err, GeomError::NotAHole(_)));
    }

    #[test]
    fn fat_triangles_forming_hole() {
        // three long triangles around the unit triangle, pairwise overlapping
        let a = hull(&[pt(-1, -1), pt(9, -1), pt(4, 1)]).unwrap();
        let b = hull(&[pt(-1, -1), pt(-1, 9), pt(1, 4)]).unwrap();
        let c = hull(&[pt(9, -1), pt(-1, 9), pt(3, 3)]).unwrap();
        let ht = hole_triangle(&a, &b, &c).unwrap();
        for p in ht.points() {
            assert!(coverage_at_least_two(&[&a, &b, &c], p));
        }
        // the three points are in the right pairwise intersections
        assert!(a.contains_point(&ht.p_star) && b.contains_point(&ht.p_star));
        assert!(b.contains_point(&ht.q_star) && c.contains_point(&ht.q_star));
        assert!(c.contains_point(&ht.r_star) && a.contains_point(&ht.r_star));
    }

    fn coverage_at_least_two(bodies: &[&ConvexBody], p: &Point) -> bool {
        bodies.iter().filter(|b| b.contains_point(p)).count() >= 2
    }

    #[test]
    fn intersection_polygon_of_squares() {
        let a = hull(&[pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]).unwrap();
        let b = hull(&[pt(1, 1), pt(3, 1), pt(3, 3), pt(1, 3)]).unwrap();
        let i = intersection_polygon(&[&a, &b]).unwrap();
        assert_eq!(i.dim(), 2);
        assert_eq!(i.hull_ring().len(), 4);
        assert!(i.contains_point(&Point::new(rat(3) / rat(2), rat(3) / rat(2))));
    }

    #[test]
    fn intersection_polygon_empty() {
        let a = hull(&[pt(0, 0), pt(1, 0), pt(0, 1)]).unwrap();
        let b = hull(&[pt(5, 5), pt(6, 5), pt(5, 6)]).unwrap();
        assert!(intersection_polygon(&[&a, &b]).is_none());
    }

    #[test]
    fn lid_suite_smoke() {
        // tiny seeded run; the acceptance suite runs the full 200 x 20
        let report = lid_suite(0xC0FFEE, 5, 3);
        assert_eq!(report.failures, 0, "{report:?}");
    }
}
