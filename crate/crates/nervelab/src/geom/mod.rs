//! Exact rational planar convex geometry.
//!
//! All coordinates are `BigRational`; every predicate is decided exactly.
//! Bodies are convex hulls of finite point sets and may be degenerate
//! (a single point or a segment). Each body carries both its canonical
//! vertex ring and an exact half-plane representation, and the two are
//! interchangeable: the intersection of the half-planes equals the hull.

mod body;
mod hole;
mod lp;

pub use body::{hull, ConvexBody};
pub use hole::{
    hole_triangle, intersection_polygon, lid_suite, random_hole_instance, random_lid,
    HoleTriangle, LidSuiteReport,
};
pub use lp::{feasible, Feasibility, LinearProgram, LpOutcome};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d == 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from a decimal integer string pair (numerator, denominator).
pub fn rat_from_strings(num: &str, den: &str) -> Result<Rat, GeomError> {
    let n: BigInt = num
        .parse()
        .map_err(|_| GeomError::BadRational(num.to_string()))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| GeomError::BadRational(den.to_string()))?;
    if d.is_zero() {
        return Err(GeomError::BadRational(format!("{num}/{den}")));
    }
    Ok(Rat::new(n, d))
}

/// Decimal string pair (numerator, denominator) of a rational, denominator positive.
pub fn rat_to_strings(r: &Rat) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}


#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("not a hole: {0}")]
    NotAHole(String),
    #[error("degenerate arrangement: {0}")]
    DegenerateArrangement(String),
    #[error("internal invariant failure: {0}")]
    Invariant(String),
    #[error("malformed rational: {0}")]
    BadRational(String),
}

/// A point of the rational plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, s: &Rat) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    /// Midpoint of two points.
    pub fn midpoint(a: &Point, b: &Point) -> Point {
        let half = ratio(1, 2);
        Point::new((&a.x + &b.x) * &half, (&a.y + &b.y) * &half)
    }

    pub fn dot(&self, other: &Point) -> Rat {
        &self.x * &other.x + &self.y * &other.y
    }

    /// Cross product of `self` and `other` as vectors.
    pub fn cross(&self, other: &Point) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of the triple (a, b, c): positive for counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Rat {
    b.sub(a).cross(&c.sub(a))
}

/// The closed half-plane { (x, y) : a·x + b·y <= c }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HalfPlane {
    /// Construct a·x + b·y <= c. Panics if (a, b) = (0, 0).
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "half-plane normal must be nonzero"
        );
        HalfPlane { a, b, c }
    }

    /// Value of the linear form at `p`.
    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y
    }

    /// Closed containment.
    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p) <= self.c
    }

    /// a·x + b·y - c. Positive exactly when `p` is strictly outside.
    pub fn outer_slack(&self, p: &Point) -> Rat {
        self.eval(p) - &self.c
    }

    /// Half-plane with the interior of a CCW ring on its inner side, for the
    /// directed edge p -> q.
    pub fn left_of_edge(p: &Point, q: &Point) -> Self {
        let d = q.sub(p);
        // interior (left of p->q): dy·x - dx·y <= dy·px - dx·py
        let c = &d.y * &p.x - &d.x * &p.y;
        HalfPlane::new(d.y, -d.x, c)
    }
}

/// Number of bodies in `family` containing `p` (closed containment).
pub fn coverage_count(family: &[ConvexBody], p: &Point) -> usize {
    family.iter().filter(|b| b.contains_point(p)).count()
}

/// A witness point in the common intersection of all `bodies`, or `None`
/// if the intersection is empty. Decided exactly on the concatenated
/// half-plane representations.
pub fn intersect_nonempty(bodies: &[ConvexBody]) -> Option<Point> {
    assert!(!bodies.is_empty(), "intersect_nonempty needs bodies");
    let constraints: Vec<HalfPlane> = bodies.iter().flat_map(|b| b.hrep().to_vec()).collect();
    match feasible(&constraints, None) {
        Feasibility::Feasible { witness } => Some(witness),
        Feasibility::Infeasible => None,
        other => unreachable!("pure feasibility cannot yield {other:?}"),
    }
}

/// Decides C ⊆ X ∪ Y exactly. On failure returns a witness point of C
/// outside both X and Y.
///
/// The complement of a convex body is the union of the open outer
/// half-planes of its facets, so C ⊄ X ∪ Y iff for some facet h of X and
/// facet g of Y the program
///   maximize t  s.t.  p ∈ C, outer_slack_h(p) >= t, outer_slack_g(p) >= t
/// has a strictly positive optimum.
pub fn cell_in_union_of_two(c: &ConvexBody, x: &ConvexBody, y: &ConvexBody) -> (bool, Option<Point>) {
    for h in x.hrep() {
        for g in y.hrep() {
            if let Some(witness) = escape_witness(c, h, g) {
                return (false, Some(witness));
            }
        }
    }
    (true, None)
}

/// Runs the slack program for one facet pair; `Some(point)` when the optimum
/// is strictly positive, i.e. part of `c` lies strictly outside both facets.
fn escape_witness(c: &ConvexBody, h: &HalfPlane, g: &HalfPlane) -> Option<Point> {
    // Variables (x, y, t); maximize t.
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(c.hrep().len() + 2);
    for hp in c.hrep() {
        rows.push((vec![hp.a.clone(), hp.b.clone(), Rat::zero()], hp.c.clone()));
    }
    // h.a·x + h.b·y - h.c >= t  ⇔  -h.a·x - h.b·y + t <= -h.c
    rows.push((vec![-h.a.clone(), -h.b.clone(), Rat::one()], -h.c.clone()));
    rows.push((vec![-g.a.clone(), -g.b.clone(), Rat::one()], -g.c.clone()));
    let objective = vec![Rat::zero(), Rat::zero(), Rat::one()];
    let lp = LinearProgram::new(3, rows, Some(objective));
    match lp.solve() {
        LpOutcome::Optimal { value, point } => {
            if value > Rat::zero() {
                Some(Point::new(point[0].clone(), point[1].clone()))
            } else {
                None
            }
        }
        // c compact: the program is always feasible (t very negative) and bounded.
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("slack program over a compact body is bounded"),
        LpOutcome::Feasible(_) => unreachable!("objective was supplied"),
    }
}
