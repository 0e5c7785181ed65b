//! Convex bodies: canonical hulls with exact half-plane representations.

use super::{orient, GeomError, HalfPlane, Point, Rat};
use num_traits::Zero;

/// A compact convex body: the convex hull of finitely many points.
///
/// `hull_ring` lists the extreme points in counter-clockwise order starting
/// from the lexicographically least one; `dim` is 0 for a point, 1 for a
/// segment, 2 otherwise. `hrep` is an exact half-plane representation whose
/// intersection equals the hull, including in the degenerate cases: a point
/// is pinned by 4 axis-aligned half-planes, a segment by its two line sides
/// plus two end caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexBody {
    generators: Vec<Point>,
    hull_ring: Vec<Point>,
    dim: usize,
    hrep: Vec<HalfPlane>,
}

impl ConvexBody {
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn hull_ring(&self) -> &[Point] {
        &self.hull_ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> &[HalfPlane] {
        &self.hrep
    }

    /// Closed containment: `p` satisfies every half-plane.
    pub fn contains_point(&self, p: &Point) -> bool {
        self.hrep.iter().all(|h| h.contains(p))
    }

    /// Body translated by the vector `v`.
    pub fn translate(&self, v: &Point) -> ConvexBody {
        let moved: Vec<Point> = self.generators.iter().map(|p| p.add(v)).collect();
        hull(&moved).expect("translate of a nonempty body")
    }
}

/// Canonical convex hull of a nonempty point set.
pub fn hull(points: &[Point]) -> Result<ConvexBody, GeomError> {
    if points.is_empty() {
        return Err(GeomError::EmptyPointSet);
    }
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort();
    sorted.dedup();

    let ring = monotone_chain(&sorted);
    let dim = match ring.len() {
        1 => 0,
        2 => 1,
        _ => 2,
    };
    let hrep = hrep_of_ring(&ring, dim);
    Ok(ConvexBody {
        generators: points.to_vec(),
        hull_ring: ring,
        dim,
        hrep,
    })
}

/// Andrew's monotone chain over a sorted, deduplicated point list.
/// Keeps only strictly extreme points; the ring comes out counter-clockwise
/// starting at the lexicographically least point.
fn monotone_chain(sorted: &[Point]) -> Vec<Point> {
    let n = sorted.len();
    if n == 1 {
        return vec![sorted[0].clone()];
    }
    if n == 2 {
        return vec![sorted[0].clone(), sorted[1].clone()];
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in sorted {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rat::zero()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rat::zero()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    // all input collinear: lower hull degenerates to the two extremes
    if lower.len() == 2 && upper.len() == 2 {
        return vec![sorted[0].clone(), sorted[n - 1].clone()];
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn hrep_of_ring(ring: &[Point], dim: usize) -> Vec<HalfPlane> {
    match dim {
        0 => {
            let p = &ring[0];
            let one = Rat::from_integer(1.into());
            vec![
                HalfPlane::new(one.clone(), Rat::zero(), p.x.clone()),
                HalfPlane::new(-one.clone(), Rat::zero(), -p.x.clone()),
                HalfPlane::new(Rat::zero(), one.clone(), p.y.clone()),
                HalfPlane::new(Rat::zero(), -one, -p.y.clone()),
            ]
        }
        1 => {
            let (p, q) = (&ring[0], &ring[1]);
            let d = q.sub(p);
            let n = Point::new(-d.y.clone(), d.x.clone());
            vec![
                // both sides of the supporting line
                HalfPlane::new(n.x.clone(), n.y.clone(), n.dot(p)),
                HalfPlane::new(-n.x.clone(), -n.y.clone(), -n.dot(p)),
                // end caps: d·x >= d·p and d·x <= d·q
                HalfPlane::new(-d.x.clone(), -d.y.clone(), -d.dot(p)),
                HalfPlane::new(d.x.clone(), d.y.clone(), d.dot(q)),
            ]
        }
        _ => {
            let k = ring.len();
            (0..k)
                .map(|i| HalfPlane::left_of_edge(&ring[i], &ring[(i + 1) % k]))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, ratio};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn triangle_hull() {
        let b = hull(&[pt(0, 0), pt(2, 0), pt(0, 2)]).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.hull_ring().len(), 3);
        assert_eq!(b.hull_ring()[0], pt(0, 0));
        assert!(b.contains_point(&Point::new(ratio(1, 2), ratio(1, 2))));
        assert!(!b.contains_point(&pt(2, 2)));
    }

    #[test]
    fn collinear_collapses_to_segment() {
        let b = hull(&[pt(0, 0), pt(1, 1), pt(2, 2)]).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.hull_ring(), &[pt(0, 0), pt(2, 2)]);
        assert!(b.contains_point(&pt(1, 1)));
        assert!(!b.contains_point(&pt(3, 3)));
        assert!(!b.contains_point(&pt(1, 0)));
    }

    #[test]
    fn duplicates_collapse_to_point() {
        let b = hull(&[pt(1, 1), pt(1, 1)]).unwrap();
        assert_eq!(b.dim(), 0);
        assert_eq!(b.hrep().len(), 4);
        assert!(b.contains_point(&pt(1, 1)));
        assert!(!b.contains_point(&pt(1, 2)));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(hull(&[]).unwrap_err(), GeomError::EmptyPointSet);
    }

    #[test]
    fn interior_points_dropped_from_ring() {
        let b = hull(&[pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(2, 2), pt(2, 0)]).unwrap();
        assert_eq!(b.hull_ring().len(), 4);
        assert_eq!(b.generators().len(), 6);
    }

    #[test]
    fn ring_starts_lexicographically_least_and_ccw() {
        let b = hull(&[pt(3, 1), pt(1, 3), pt(0, 0), pt(4, 4)]).unwrap();
        assert_eq!(b.hull_ring()[0], pt(0, 0));
        let r = b.hull_ring();
        for i in 0..r.len() {
            let o = orient(
                &r[i],
                &r[(i + 1) % r.len()],
                &r[(i + 2) % r.len()],
            );
            assert!(o > rat(0), "ring is strictly convex and CCW");
        }
    }

    #[test]
    fn hrep_matches_ring_membership() {
        let b = hull(&[pt(0, 0), pt(5, 1), pt(4, 6), pt(-1, 3)]).unwrap();
        for v in b.hull_ring() {
            assert!(b.contains_point(v));
        }
        assert!(b.contains_point(&pt(2, 2)));
        assert!(!b.contains_point(&pt(6, 6)));
    }

    #[test]
    fn segment_caps_work() {
        let b = hull(&[pt(0, 0), pt(4, 2)]).unwrap();
        assert!(b.contains_point(&pt(2, 1)));
        assert!(!b.contains_point(&pt(6, 3)));
        assert!(!b.contains_point(&pt(-2, -1)));
    }
}
