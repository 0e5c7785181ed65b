//! Generators and exact verifiers for the convex-family constructions, and
//! the nerve bridge from geometry to red/blue cliques.
//!
//! Families are stored the way they serialize: a shared table of rational
//! points, per-body generator index lists, and labeled witness points. Every
//! family is validated at construction: each witness must lie in exactly the
//! bodies its label names, decided exactly.

use crate::geom::{
    cell_in_union_of_two, hull, intersect_nonempty, rat_from_strings, rat_to_strings, ratio,
    ConvexBody, Point, Rat,
};
use crate::redblue::{for_each_combination, FVector, RedBlueClique};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error)]
pub enum FamilyError {
    #[error("family parameter out of range: {0}")]
    BadParameter(String),
    #[error("witness {index} is covered by bodies {actual:?} but labeled {labeled:?}")]
    WitnessLabelMismatch {
        index: usize,
        actual: Vec<usize>,
        labeled: Vec<usize>,
    },
    #[error("{0}-subsets are expected to have empty intersection, found one that does not")]
    UnexpectedIntersection(usize),
    #[error("malformed family document: {0}")]
    BadDocument(String),
    #[error("geometry error: {0}")]
    Geometry(#[from] crate::geom::GeomError),
}

/// A labeled witness point: it lies in exactly the bodies in `label`.
#[derive(Debug, Clone)]
pub struct Witness {
    pub point_index: usize,
    pub label: BTreeSet<usize>,
}

/// An indexed family of convex bodies with labeled witness points.
/// Repeated bodies are allowed and count as distinct indices.
#[derive(Debug, Clone)]
pub struct ConvexFamily {
    pub name: String,
    pub points: Vec<Point>,
    pub body_generators: Vec<Vec<usize>>,
    pub witnesses: Vec<Witness>,
    bodies: Vec<ConvexBody>,
}

impl ConvexFamily {
    /// Build and validate. Every witness must be contained in exactly the
    /// bodies its label names.
    pub fn new(
        name: impl Into<String>,
        points: Vec<Point>,
        body_generators: Vec<Vec<usize>>,
        witnesses: Vec<Witness>,
    ) -> Result<Self, FamilyError> {
        let bodies: Vec<ConvexBody> = body_generators
            .iter()
            .map(|idx| {
                let gens: Vec<Point> = idx.iter().map(|&i| points[i].clone()).collect();
                hull(&gens)
            })
            .collect::<Result<_, _>>()?;
        let fam = ConvexFamily {
            name: name.into(),
            points,
            body_generators,
            witnesses,
            bodies,
        };
        fam.validate_witnesses()?;
        Ok(fam)
    }

    fn validate_witnesses(&self) -> Result<(), FamilyError> {
        for (i, w) in self.witnesses.iter().enumerate() {
            let p = &self.points[w.point_index];
            let actual: BTreeSet<usize> = self
                .bodies
                .iter()
                .enumerate()
                .filter(|(_, b)| b.contains_point(p))
                .map(|(j, _)| j)
                .collect();
            if actual != w.label {
                return Err(FamilyError::WitnessLabelMismatch {
                    index: i,
                    actual: actual.into_iter().collect(),
                    labeled: w.label.iter().copied().collect(),
                });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub fn bodies(&self) -> &[ConvexBody] {
        &self.bodies
    }

    pub fn witness_point(&self, w: &Witness) -> &Point {
        &self.points[w.point_index]
    }

    /// Common intersection over a subset of body indices.
    pub fn subset_intersects(&self, subset: &[usize]) -> Option<Point> {
        let sel: Vec<ConvexBody> = subset.iter().map(|&i| self.bodies[i].clone()).collect();
        intersect_nonempty(&sel)
    }

    /// All k-subsets of body indices with nonempty common intersection.
    pub fn intersecting_subsets(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_combination(self.len(), k, |s| {
            if self.subset_intersects(s).is_some() {
                out.push(s.to_vec());
            }
        });
        out
    }

    pub fn to_json(&self) -> String {
        let doc = FamilyDoc {
            name: self.name.clone(),
            points: self
                .points
                .iter()
                .map(|p| {
                    let (xn, xd) = rat_to_strings(&p.x);
                    let (yn, yd) = rat_to_strings(&p.y);
                    [[xn, xd], [yn, yd]]
                })
                .collect(),
            bodies: self.body_generators.clone(),
            witnesses: self
                .witnesses
                .iter()
                .map(|w| WitnessDoc {
                    point: w.point_index,
                    label: w.label.iter().copied().collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, FamilyError> {
        let doc: FamilyDoc =
            serde_json::from_str(s).map_err(|e| FamilyError::BadDocument(e.to_string()))?;
        let points: Vec<Point> = doc
            .points
            .iter()
            .map(|[[xn, xd], [yn, yd]]| {
                Ok(Point::new(
                    rat_from_strings(xn, xd)
                        .map_err(|e| FamilyError::BadDocument(e.to_string()))?,
                    rat_from_strings(yn, yd)
                        .map_err(|e| FamilyError::BadDocument(e.to_string()))?,
                ))
            })
            .collect::<Result<_, FamilyError>>()?;
        for b in &doc.bodies {
            for &i in b {
                if i >= points.len() {
                    return Err(FamilyError::BadDocument(format!(
                        "body references point {i} of {}",
                        points.len()
                    )));
                }
            }
        }
        for w in &doc.witnesses {
            if w.point >= points.len() {
                return Err(FamilyError::BadDocument(format!(
                    "witness references point {} of {}",
                    w.point,
                    points.len()
                )));
            }
        }
        ConvexFamily::new(
            doc.name,
            points,
            doc.bodies,
            doc.witnesses
                .into_iter()
                .map(|w| Witness {
                    point_index: w.point,
                    label: w.label.into_iter().collect(),
                })
                .collect(),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    name: String,
    points: Vec<[[String; 2]; 2]>,
    bodies: Vec<Vec<usize>>,
    witnesses: Vec<WitnessDoc>,
}

#[derive(Serialize, Deserialize)]
struct WitnessDoc {
    point: usize,
    label: Vec<usize>,
}

/// The red/blue clique of a family: a triple is red exactly when the three
/// bodies share a point, decided by exact feasibility.
pub fn compute_nerve(family: &ConvexFamily) -> RedBlueClique {
    let n = family.len();
    assert!(n >= 3, "nerve needs at least three bodies");
    let mut blue: Vec<[usize; 3]> = Vec::new();
    for_each_combination(n, 3, |s| {
        if family.subset_intersects(s).is_none() {
            blue.push([s[0], s[1], s[2]]);
        }
    });
    RedBlueClique::from_triples(n, &blue).expect("triples are valid")
}

/// Pinned coordinates of the twelve labeled points, scaled by 10^6: eleven
/// points on a circle of radius 5 at angles 90° + c·360/11 and a twelfth
/// obtained by a 60° rotation, rounded to rationals and re-verified exactly.
/// Each label lists the five bodies whose hulls the point generates.
const NINE_SETS_POINTS: [(&str, i64, i64); 12] = [
    ("01236", -4548160, 2077075),
    ("01356", -2703204, 4206268),
    ("01456", 0, 5000000),
    ("01458", 2703204, 4206268),
    ("02356", -4949107, -711574),
    ("02357", -1408663, -4797465),
    ("02478", 3778748, -3274304),
    ("02578", 1408663, -4797465),
    ("04578", 4949107, -711574),
    ("13468", 0, 8888354),
    ("14578", 4548160, 2077075),
    ("23567", -3778748, -3274304),
];

/// The nine-sets family: nine convex hulls over twelve labeled points such
/// that no point of the plane is 6-covered and no two bodies cover all the
/// 5-covered points.
pub fn nine_sets() -> Result<ConvexFamily, FamilyError> {
    let scale = ratio(1, 1_000_000);
    let points: Vec<Point> = NINE_SETS_POINTS
        .iter()
        .map(|(_, x, y)| {
            Point::new(
                Rat::from_integer((*x).into()) * &scale,
                Rat::from_integer((*y).into()) * &scale,
            )
        })
        .collect();
    let mut body_generators: Vec<Vec<usize>> = vec![Vec::new(); 9];
    let mut witnesses = Vec::new();
    for (i, (label, _, _)) in NINE_SETS_POINTS.iter().enumerate() {
        let mut set = BTreeSet::new();
        for ch in label.chars() {
            let b = ch.to_digit(10).unwrap() as usize;
            body_generators[b].push(i);
            set.insert(b);
        }
        witnesses.push(Witness {
            point_index: i,
            label: set,
        });
    }
    ConvexFamily::new("nine-sets", points, body_generators, witnesses)
}

/// Vertices of the regular k-gon of radius 5 centered at the origin,
/// starting at the top, rounded to rationals with denominator 10^6.
fn regular_polygon_points(k: usize) -> Vec<Point> {
    let scale = ratio(1, 1_000_000);
    (0..k)
        .map(|j| {
            let theta = std::f64::consts::PI * (0.5 + 2.0 * j as f64 / k as f64);
            let x = (5.0 * theta.cos() * 1e6).round() as i64;
            let y = (5.0 * theta.sin() * 1e6).round() as i64;
            Point::new(
                Rat::from_integer(x.into()) * &scale,
                Rat::from_integer(y.into()) * &scale,
            )
        })
        .collect()
}

/// The polygon construction over the regular k-gon: the k hulls of all
/// vertices but one and the k hulls of ceil(k/2) consecutive vertices.
/// Witnesses are the k polygon vertices, each omega-covered with
/// omega = k - 1 + ceil(k/2).
pub fn polygon_construction(k: usize) -> Result<ConvexFamily, FamilyError> {
    if k < 3 {
        return Err(FamilyError::BadParameter(format!(
            "polygon construction needs k >= 3, got {k}"
        )));
    }
    let points = regular_polygon_points(k);
    let window = k.div_ceil(2);
    let mut body_generators: Vec<Vec<usize>> = Vec::with_capacity(2 * k);
    for i in 0..k {
        body_generators.push((0..k).filter(|&j| j != i).collect());
    }
    for i in 0..k {
        body_generators.push((0..window).map(|t| (i + t) % k).collect());
    }
    let witnesses = (0..k)
        .map(|j| Witness {
            point_index: j,
            label: polygon_vertex_label(k, window, j),
        })
        .collect();
    ConvexFamily::new(format!("polygon-k{k}"), points, body_generators, witnesses)
}

fn polygon_vertex_label(k: usize, window: usize, j: usize) -> BTreeSet<usize> {
    let mut label: BTreeSet<usize> = (0..k).filter(|&i| i != j).collect();
    for i in 0..k {
        if (0..window).any(|t| (i + t) % k == j) {
            label.insert(k + i);
        }
    }
    label
}

/// Maximum coverage of the polygon construction.
pub fn polygon_omega(k: usize) -> usize {
    k - 1 + k.div_ceil(2)
}

/// The extended polygon construction for k in {5, 7}: one more copy each of
/// the two hulls missing the consecutive vertices 0 and 1, plus the edge
/// segment between them. Raises the maximum coverage by two.
pub fn extended_polygon(k: usize) -> Result<ConvexFamily, FamilyError> {
    if k != 5 && k != 7 {
        return Err(FamilyError::BadParameter(format!(
            "extension defined for k in {{5, 7}}, got {k}"
        )));
    }
    let base = polygon_construction(k)?;
    let mut body_generators = base.body_generators.clone();
    body_generators.push((0..k).filter(|&j| j != 0).collect());
    body_generators.push((0..k).filter(|&j| j != 1).collect());
    body_generators.push(vec![0, 1]);
    let copy_n0 = 2 * k;
    let copy_n1 = 2 * k + 1;
    let segment = 2 * k + 2;
    let window = k.div_ceil(2);
    let witnesses = (0..k)
        .map(|j| {
            let mut label = polygon_vertex_label(k, window, j);
            if j != 0 {
                label.insert(copy_n0);
            }
            if j != 1 {
                label.insert(copy_n1);
            }
            if j == 0 || j == 1 {
                label.insert(segment);
            }
            Witness {
                point_index: j,
                label,
            }
        })
        .collect();
    ConvexFamily::new(
        format!("extended-polygon-k{k}"),
        base.points,
        body_generators,
        witnesses,
    )
}

/// The triangle construction: over non-collinear P, Q, R, ceil(omega/2)
/// copies of segment PR and floor(omega/2) copies each of PQ and RQ; for
/// odd omega the single point Q joins the family.
pub fn triangle_construction(omega: usize) -> Result<ConvexFamily, FamilyError> {
    if omega < 2 {
        return Err(FamilyError::BadParameter(format!(
            "triangle construction needs omega >= 2, got {omega}"
        )));
    }
    let points = vec![
        Point::from_ints(0, 0), // P
        Point::from_ints(6, 0), // R
        Point::from_ints(0, 6), // Q
    ];
    let (ip, ir, iq) = (0usize, 1usize, 2usize);
    let half_up = omega.div_ceil(2);
    let half_down = omega / 2;
    let mut body_generators: Vec<Vec<usize>> = Vec::new();
    for _ in 0..half_up {
        body_generators.push(vec![ip, ir]);
    }
    for _ in 0..half_down {
        body_generators.push(vec![ip, iq]);
    }
    for _ in 0..half_down {
        body_generators.push(vec![ir, iq]);
    }
    if omega % 2 == 1 {
        body_generators.push(vec![iq]);
    }
    let pr: BTreeSet<usize> = (0..half_up).collect();
    let pq: BTreeSet<usize> = (half_up..half_up + half_down).collect();
    let rq: BTreeSet<usize> = (half_up + half_down..half_up + 2 * half_down).collect();
    let mut q_label: BTreeSet<usize> = pq.union(&rq).copied().collect();
    if omega % 2 == 1 {
        q_label.insert(half_up + 2 * half_down);
    }
    let witnesses = vec![
        Witness {
            point_index: ip,
            label: pr.union(&pq).copied().collect(),
        },
        Witness {
            point_index: ir,
            label: pr.union(&rq).copied().collect(),
        },
        Witness {
            point_index: iq,
            label: q_label,
        },
    ];
    ConvexFamily::new(
        format!("triangle-omega{omega}"),
        points,
        body_generators,
        witnesses,
    )
}

/// The 2k construction over the regular (2k-1)-gon: the 2k-1 hulls of k
/// consecutive vertices plus the hull of the edge midpoints (standing in
/// for the inscribed disk). Witnesses are the vertices and the midpoints;
/// every one of them is k-covered.
pub fn two_k(k: usize) -> Result<ConvexFamily, FamilyError> {
    if k < 2 {
        return Err(FamilyError::BadParameter(format!(
            "2k construction needs k >= 2, got {k}"
        )));
    }
    let m = 2 * k - 1;
    let vertices = regular_polygon_points(m);
    let mut points = vertices.clone();
    for j in 0..m {
        points.push(Point::midpoint(&vertices[j], &vertices[(j + 1) % m]));
    }
    let mut body_generators: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        body_generators.push((0..k).map(|t| (i + t) % m).collect());
    }
    body_generators.push((m..2 * m).collect());
    let disk = m;
    let mut witnesses = Vec::new();
    for j in 0..m {
        let label: BTreeSet<usize> = (0..m)
            .filter(|&i| (0..k).any(|t| (i + t) % m == j))
            .collect();
        witnesses.push(Witness {
            point_index: j,
            label,
        });
    }
    for j in 0..m {
        // midpoint of edge (j, j+1) lies in the windows containing both ends
        let mut label: BTreeSet<usize> = (0..m)
            .filter(|&i| {
                let covers = |v: usize| (0..k).any(|t| (i + t) % m == v);
                covers(j) && covers((j + 1) % m)
            })
            .collect();
        label.insert(disk);
        witnesses.push(Witness {
            point_index: m + j,
            label,
        });
    }
    ConvexFamily::new(format!("two-k{k}"), points, body_generators, witnesses)
}

/// Per-pair escape payload: the pair and a point outside both bodies.
#[derive(Debug, Clone)]
pub struct PairEscape {
    pub pair: (usize, usize),
    pub witness: Point,
}

/// Exactly verified counterexample report.
#[derive(Debug)]
pub struct VerificationReport {
    /// no (k+1)-subset of bodies has a common point
    pub max_cover_ok: bool,
    pub offending_subset: Option<Vec<usize>>,
    /// every witness is k-covered
    pub witnesses_covered: bool,
    /// every pair of bodies misses some witness, so no pair covers the
    /// k-covered points
    pub pair_coverage_fails: bool,
    pub pair_escapes: Vec<PairEscape>,
    /// no single body lies in every maximum clique
    pub single_transversal_absent: bool,
    pub fvector: FVector,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.max_cover_ok && self.witnesses_covered && self.pair_coverage_fails
    }
}

/// Checks the three counterexample properties at level k: bounded coverage,
/// k-covered witnesses, and per-pair escape witnesses.
pub fn verify_counterexample(family: &ConvexFamily, k: usize) -> VerificationReport {
    let n = family.len();
    let mut offending_subset = None;
    for_each_combination(n, k + 1, |s| {
        if offending_subset.is_none() && family.subset_intersects(s).is_some() {
            offending_subset = Some(s.to_vec());
        }
    });
    let max_cover_ok = offending_subset.is_none();

    let witnesses_covered = family.witnesses.iter().all(|w| {
        let p = family.witness_point(w);
        family.bodies().iter().filter(|b| b.contains_point(p)).count() >= k
    });

    let mut pair_escapes = Vec::new();
    let mut pair_coverage_fails = true;
    for x in 0..n {
        for y in (x + 1)..n {
            let escape = family.witnesses.iter().find(|w| {
                let p = family.witness_point(w);
                !family.bodies()[x].contains_point(p) && !family.bodies()[y].contains_point(p)
            });
            match escape {
                Some(w) => pair_escapes.push(PairEscape {
                    pair: (x, y),
                    witness: family.witness_point(w).clone(),
                }),
                None => pair_coverage_fails = false,
            }
        }
    }

    let single_transversal_absent = if max_cover_ok {
        let cliques = family.intersecting_subsets(k);
        !cliques.is_empty() && (0..n).all(|b| !cliques.iter().all(|c| c.contains(&b)))
    } else {
        false
    };

    let fvector = compute_nerve(family).f_vector();
    VerificationReport {
        max_cover_ok,
        offending_subset,
        witnesses_covered,
        pair_coverage_fails,
        pair_escapes,
        single_transversal_absent,
        fvector,
    }
}

/// True when the maximum cliques (the omega-subsets with a common point,
/// after checking that no (omega+1)-subset has one) share no body index.
pub fn verify_no_single_transversal(
    family: &ConvexFamily,
    omega: usize,
) -> Result<bool, FamilyError> {
    let n = family.len();
    let mut over = false;
    for_each_combination(n, omega + 1, |s| {
        if !over && family.subset_intersects(s).is_some() {
            over = true;
        }
    });
    if over {
        return Err(FamilyError::UnexpectedIntersection(omega + 1));
    }
    let cliques = family.intersecting_subsets(omega);
    if cliques.is_empty() {
        return Ok(false);
    }
    Ok((0..n).all(|b| !cliques.iter().all(|c| c.contains(&b))))
}

/// Region-level pair check: for every pair of bodies, some k-covered cell
/// (the intersection of a k-subset with a common point) escapes their
/// union. Stronger than the witness-level check.
pub fn verify_k_covered_region_pair_uncoverable(
    family: &ConvexFamily,
    k: usize,
) -> Result<bool, FamilyError> {
    let n = family.len();
    let mut over = false;
    for_each_combination(n, k + 1, |s| {
        if !over && family.subset_intersects(s).is_some() {
            over = true;
        }
    });
    if over {
        return Err(FamilyError::UnexpectedIntersection(k + 1));
    }
    let cells: Vec<Vec<usize>> = family.intersecting_subsets(k);
    let cell_bodies: Vec<ConvexBody> = cells.iter().map(|s| intersection_body(family, s)).collect();
    for x in 0..n {
        for y in (x + 1)..n {
            let mut escaped = false;
            for (cell, body) in cells.iter().zip(&cell_bodies) {
                // a cell through x or y cannot escape their union
                if cell.contains(&x) || cell.contains(&y) {
                    continue;
                }
                let (covered, _) =
                    cell_in_union_of_two(body, &family.bodies()[x], &family.bodies()[y]);
                if !covered {
                    escaped = true;
                    break;
                }
            }
            if !escaped {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The cell of a body subset as a convex body: the hull of the exact vertex
/// set of the intersection of their half-plane representations.
fn intersection_body(family: &ConvexFamily, subset: &[usize]) -> ConvexBody {
    let refs: Vec<&ConvexBody> = subset.iter().map(|&i| &family.bodies()[i]).collect();
    crate::geom::intersection_polygon(&refs).expect("cell subsets have a common point")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::coverage_count;

    #[test]
    fn nine_sets_shape() {
        let fam = nine_sets().unwrap();
        assert_eq!(fam.len(), 9);
        assert_eq!(fam.witnesses.len(), 12);
        // the witness labeled {0,1,2,3,6} is 5-covered
        let w = fam
            .witnesses
            .iter()
            .find(|w| w.label == [0usize, 1, 2, 3, 6].iter().copied().collect())
            .expect("label exists");
        let p = fam.witness_point(w).clone();
        assert_eq!(coverage_count(fam.bodies(), &p), 5);
    }

    #[test]
    fn nine_sets_nerve_f_vector() {
        let fam = nine_sets().unwrap();
        let nerve = compute_nerve(&fam);
        let f = nerve.f_vector();
        assert!(f.eq_mod_trailing_zeros(&[9, 36, 61, 45, 12, 0]), "{f}");
    }

    #[test]
    fn triangle_frame_nerve_single_blue() {
        // three segments forming a triangle frame: exactly one blue triple
        let points = vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(0, 2),
        ];
        let fam = ConvexFamily::new(
            "frame",
            points,
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            vec![],
        )
        .unwrap();
        let nerve = compute_nerve(&fam);
        assert_eq!(nerve.blue().edge_count(), 1);
    }

    #[test]
    fn disjoint_squares_nerve_all_blue() {
        let mut points = Vec::new();
        for c in 0..3i64 {
            let x = 10 * c;
            points.push(Point::from_ints(x, 0));
            points.push(Point::from_ints(x + 1, 0));
            points.push(Point::from_ints(x + 1, 1));
            points.push(Point::from_ints(x, 1));
        }
        let fam = ConvexFamily::new(
            "disjoint",
            points,
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11]],
            vec![],
        )
        .unwrap();
        let nerve = compute_nerve(&fam);
        assert_eq!(nerve.blue().edge_count(), 1);
    }

    #[test]
    fn polygon_construction_shapes() {
        for (k, omega, n) in [(3, 4, 6), (5, 7, 10), (8, 11, 16)] {
            let fam = polygon_construction(k).unwrap();
            assert_eq!(fam.len(), n, "k={k}");
            assert_eq!(polygon_omega(k), omega, "k={k}");
            for w in &fam.witnesses {
                assert_eq!(w.label.len(), omega);
            }
        }
        assert!(polygon_construction(2).is_err());
    }

    #[test]
    fn extended_polygon_shapes() {
        let fam5 = extended_polygon(5).unwrap();
        assert_eq!(fam5.len(), 13);
        for w in &fam5.witnesses {
            assert_eq!(w.label.len(), 9);
        }
        let fam7 = extended_polygon(7).unwrap();
        assert_eq!(fam7.len(), 17);
        for w in &fam7.witnesses {
            assert_eq!(w.label.len(), 12);
        }
        assert!(extended_polygon(4).is_err());
    }

    #[test]
    fn triangle_construction_shapes() {
        assert_eq!(triangle_construction(3).unwrap().len(), 5);
        assert_eq!(triangle_construction(6).unwrap().len(), 9);
        assert_eq!(triangle_construction(2).unwrap().len(), 3);
        assert!(triangle_construction(1).is_err());
        for omega in 2..=8 {
            let fam = triangle_construction(omega).unwrap();
            for w in &fam.witnesses {
                assert_eq!(w.label.len(), omega, "omega={omega}");
            }
        }
    }

    #[test]
    fn two_k_shapes_and_coverage() {
        for k in 2..=5 {
            let fam = two_k(k).unwrap();
            assert_eq!(fam.len(), 2 * k);
            for w in &fam.witnesses {
                assert_eq!(w.label.len(), k, "k={k}");
            }
        }
        assert!(two_k(1).is_err());
    }

    #[test]
    fn two_k_4_verifies() {
        let fam = two_k(4).unwrap();
        let report = verify_counterexample(&fam, 4);
        assert!(report.all_pass(), "{report:?}");
        assert!(report.single_transversal_absent);
    }

    #[test]
    fn identical_squares_fail_pair_check() {
        let points = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ];
        let sq = vec![0usize, 1, 2, 3];
        let k = 3;
        let fam = ConvexFamily::new(
            "copies",
            points,
            vec![sq.clone(), sq.clone(), sq.clone()],
            vec![Witness {
                point_index: 0,
                label: (0..k).collect(),
            }],
        )
        .unwrap();
        let report = verify_counterexample(&fam, k);
        assert!(report.max_cover_ok);
        assert!(report.witnesses_covered);
        assert!(!report.pair_coverage_fails);
    }

    #[test]
    fn no_single_transversal_examples() {
        let fam = polygon_construction(5).unwrap();
        assert!(verify_no_single_transversal(&fam, 7).unwrap());
        let tri = triangle_construction(6).unwrap();
        assert!(verify_no_single_transversal(&tri, 6).unwrap());
        // omega below the true maximum: error
        assert!(verify_no_single_transversal(&tri, 5).is_err());
    }

    #[test]
    fn shared_copies_have_single_transversal() {
        // identical squares plus one far square: every maximum clique uses
        // all the copies
        let omega = 3;
        let points = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
            Point::from_ints(50, 50),
            Point::from_ints(51, 50),
            Point::from_ints(51, 51),
            Point::from_ints(50, 51),
        ];
        let sq = vec![0usize, 1, 2, 3];
        let far = vec![4usize, 5, 6, 7];
        let fam = ConvexFamily::new(
            "copies-plus-far",
            points,
            vec![sq.clone(), sq.clone(), sq.clone(), far],
            vec![],
        )
        .unwrap();
        assert!(!verify_no_single_transversal(&fam, omega).unwrap());
    }

    #[test]
    fn family_json_round_trip() {
        let fam = triangle_construction(3).unwrap();
        let s = fam.to_json();
        let back = ConvexFamily::from_json(&s).unwrap();
        assert_eq!(back.len(), fam.len());
        assert_eq!(back.name, fam.name);
        assert_eq!(back.witnesses.len(), fam.witnesses.len());
        assert!(ConvexFamily::from_json("{}").is_err());
    }

    #[test]
    fn witness_validation_rejects_bad_labels() {
        let points = vec![Point::from_ints(0, 0), Point::from_ints(1, 0)];
        let err = ConvexFamily::new(
            "bad",
            points,
            vec![vec![0], vec![1]],
            vec![Witness {
                point_index: 0,
                label: [0usize, 1].into_iter().collect(),
            }],
        );
        assert!(matches!(err, Err(FamilyError::WitnessLabelMismatch { .. })));
    }
}
