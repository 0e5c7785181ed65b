//! Exact rational linear programming in up to three variables.
//!
//! Incremental algorithm: maintain the optimum of the constraints processed
//! so far; when a new constraint is violated, the optimum of the enlarged
//! system lies on its boundary, so substitute the boundary equation and
//! recurse one dimension lower. The implicit bounding box at +/- M is kept
//! symbolic (values are a + b*M for an arbitrarily large M), which makes
//! unboundedness an exact verdict rather than a threshold.

use super::{HalfPlane, Point, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// A value a + b*M where M is larger than any rational that occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Ext {
    fin: Rat,
    inf: Rat,
}

impl Ext {
    fn finite(r: Rat) -> Self {
        Ext {
            fin: r,
            inf: Rat::zero(),
        }
    }

    fn zero() -> Self {
        Ext::finite(Rat::zero())
    }

    fn pos_m() -> Self {
        Ext {
            fin: Rat::zero(),
            inf: Rat::one(),
        }
    }

    fn neg_m() -> Self {
        Ext {
            fin: Rat::zero(),
            inf: -Rat::one(),
        }
    }

    fn is_finite(&self) -> bool {
        self.inf.is_zero()
    }

    fn add(&self, other: &Ext) -> Ext {
        Ext {
            fin: &self.fin + &other.fin,
            inf: &self.inf + &other.inf,
        }
    }

    fn sub(&self, other: &Ext) -> Ext {
        Ext {
            fin: &self.fin - &other.fin,
            inf: &self.inf - &other.inf,
        }
    }

    fn scale(&self, s: &Rat) -> Ext {
        Ext {
            fin: &self.fin * s,
            inf: &self.inf * s,
        }
    }

    fn cmp(&self, other: &Ext) -> Ordering {
        self.inf
            .cmp(&other.inf)
            .then_with(|| self.fin.cmp(&other.fin))
    }
}

/// One constraint a . x <= b.
type Row = (Vec<Rat>, Rat);

/// Exact LP: maximize objective . x subject to rows, variables free.
pub struct LinearProgram {
    dims: usize,
    rows: Vec<Row>,
    objective: Option<Vec<Rat>>,
}

/// Outcome of a [`LinearProgram`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    /// Feasible, no objective supplied.
    Feasible(Vec<Rat>),
    /// Finite optimum attained at `point`.
    Optimal { value: Rat, point: Vec<Rat> },
    Unbounded,
}

/// Result of the 2-variable convenience wrapper [`feasible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Infeasible,
    Feasible { witness: Point },
    Optimal { optimum: Rat, optimizer: Point },
    Unbounded,
}

impl LinearProgram {
    /// `rows` are (coefficients, rhs) with coefficient length `dims`.
    pub fn new(dims: usize, rows: Vec<Row>, objective: Option<Vec<Rat>>) -> Self {
        assert!((1..=3).contains(&dims), "solver covers 1 to 3 variables");
        debug_assert!(rows.iter().all(|(a, _)| a.len() == dims));
        if let Some(obj) = &objective {
            assert_eq!(obj.len(), dims);
        }
        LinearProgram {
            dims,
            rows,
            objective,
        }
    }

    pub fn solve(&self) -> LpOutcome {
        let zero_obj = vec![Rat::zero(); self.dims];
        let obj = self.objective.as_deref().unwrap_or(&zero_obj);
        let order = shuffled_indices(self.rows.len());
        let rows: Vec<Row> = order.iter().map(|&i| self.rows[i].clone()).collect();
        match solve_rec(self.dims, &rows, obj) {
            None => LpOutcome::Infeasible,
            Some(cur) => {
                let value = dot_ext(obj, &cur);
                if self.objective.is_some() {
                    if !value.inf.is_zero() {
                        return LpOutcome::Unbounded;
                    }
                    let point = concretize(&cur, &rows);
                    LpOutcome::Optimal {
                        value: value.fin,
                        point,
                    }
                } else {
                    LpOutcome::Feasible(concretize(&cur, &rows))
                }
            }
        }
    }
}

/// Exact feasibility / optimization over half-planes in the plane.
/// With an objective (u, v) the form u*x + v*y is maximized.
pub fn feasible(constraints: &[HalfPlane], objective: Option<(Rat, Rat)>) -> Feasibility {
    let rows: Vec<Row> = constraints
        .iter()
        .map(|h| (vec![h.a.clone(), h.b.clone()], h.c.clone()))
        .collect();
    let lp = LinearProgram::new(2, rows, objective.map(|(u, v)| vec![u, v]));
    match lp.solve() {
        LpOutcome::Infeasible => Feasibility::Infeasible,
        LpOutcome::Unbounded => Feasibility::Unbounded,
        LpOutcome::Feasible(p) => Feasibility::Feasible {
            witness: Point::new(p[0].clone(), p[1].clone()),
        },
        LpOutcome::Optimal { value, point } => Feasibility::Optimal {
            optimum: value,
            optimizer: Point::new(point[0].clone(), point[1].clone()),
        },
    }
}

fn dot_ext(coeffs: &[Rat], xs: &[Ext]) -> Ext {
    let mut acc = Ext::zero();
    for (c, x) in coeffs.iter().zip(xs) {
        if !c.is_zero() {
            acc = acc.add(&x.scale(c));
        }
    }
    acc
}

fn solve_rec(d: usize, rows: &[Row], obj: &[Rat]) -> Option<Vec<Ext>> {
    if d == 1 {
        return solve_1d(rows, &obj[0]).map(|x| vec![x]);
    }
    let mut cur: Vec<Ext> = obj
        .iter()
        .map(|c| {
            if c.is_positive() {
                Ext::pos_m()
            } else if c.is_negative() {
                Ext::neg_m()
            } else {
                Ext::zero()
            }
        })
        .collect();
    for i in 0..rows.len() {
        let (a, b) = &rows[i];
        let lhs = dot_ext(a, &cur);
        if lhs.cmp(&Ext::finite(b.clone())) != Ordering::Greater {
            continue;
        }
        // optimum of the enlarged system lies on a . x = b
        let Some(j) = a.iter().position(|c| !c.is_zero()) else {
            // 0 <= b violated: constant infeasibility
            return None;
        };
        let aj = &a[j];
        // substitute x_j = (b - sum_{t != j} a_t x_t) / a_j into earlier rows
        let mut sub_rows: Vec<Row> = Vec::with_capacity(i);
        for (p, q) in &rows[..i] {
            let factor = &p[j] / aj;
            let coeffs: Vec<Rat> = (0..d)
                .filter(|&t| t != j)
                .map(|t| &p[t] - &factor * &a[t])
                .collect();
            let rhs = q - &factor * b;
            sub_rows.push((coeffs, rhs));
        }
        let ofactor = &obj[j] / aj;
        let sub_obj: Vec<Rat> = (0..d)
            .filter(|&t| t != j)
            .map(|t| &obj[t] - &ofactor * &a[t])
            .collect();
        let sub = solve_rec(d - 1, &sub_rows, &sub_obj)?;
        // lift back, inserting x_j
        let mut lifted: Vec<Ext> = Vec::with_capacity(d);
        let mut it = sub.into_iter();
        for t in 0..d {
            if t == j {
                lifted.push(Ext::zero()); // placeholder
            } else {
                lifted.push(it.next().expect("sub solution has d-1 coords"));
            }
        }
        let mut acc = Ext::finite(b.clone());
        for (t, x) in lifted.iter().enumerate() {
            if t != j && !a[t].is_zero() {
                acc = acc.sub(&x.scale(&a[t]));
            }
        }
        lifted[j] = acc.scale(&(Rat::one() / aj));
        cur = lifted;
    }
    Some(cur)
}

fn solve_1d(rows: &[Row], c: &Rat) -> Option<Ext> {
    let mut lo = Ext::neg_m();
    let mut hi = Ext::pos_m();
    for (a, b) in rows {
        let a = &a[0];
        if a.is_positive() {
            let bound = Ext::finite(b / a);
            if bound.cmp(&hi) == Ordering::Less {
                hi = bound;
            }
        } else if a.is_negative() {
            let bound = Ext::finite(b / a);
            if bound.cmp(&lo) == Ordering::Greater {
                lo = bound;
            }
        } else if b.is_negative() {
            return None;
        }
    }
    if lo.cmp(&hi) == Ordering::Greater {
        return None;
    }
    let zero = Ext::zero();
    let x = if c.is_positive() {
        hi
    } else if c.is_negative() {
        lo
    } else if lo.cmp(&zero) != Ordering::Greater && hi.cmp(&zero) != Ordering::Less {
        zero
    } else if lo.cmp(&zero) == Ordering::Greater {
        lo
    } else {
        hi
    };
    Some(x)
}

/// Replace the symbolic M by a concrete rational large enough that the point
/// still satisfies every row. Finite components pass through unchanged.
fn concretize(cur: &[Ext], rows: &[Row]) -> Vec<Rat> {
    if cur.iter().all(Ext::is_finite) {
        return cur.iter().map(|x| x.fin.clone()).collect();
    }
    let mut m0 = Rat::one();
    for (a, b) in rows {
        let mut u = Rat::zero(); // a . fin
        let mut v = Rat::zero(); // a . inf
        for (t, x) in cur.iter().enumerate() {
            u += &a[t] * &x.fin;
            v += &a[t] * &x.inf;
        }
        if v.is_negative() {
            let need = (u - b) / -v;
            if need > m0 {
                m0 = need;
            }
        }
    }
    m0 += Rat::one();
    cur.iter().map(|x| &x.fin + &x.inf * &m0).collect()
}

/// Deterministic pseudo-shuffle; identical inputs give identical orders.
fn shuffled_indices(n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    let mut state: u64 = 0x9e3779b97f4a7c15 ^ (n as u64);
    for i in (1..n).rev() {
        // splitmix64 step
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^= z >> 31;
        let j = (z % (i as u64 + 1)) as usize;
        idx.swap(i, j);
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, ratio};

    fn hp(a: i64, b: i64, c: i64) -> HalfPlane {
        HalfPlane::new(rat(a), rat(b), rat(c))
    }

    #[test]
    fn box_optimum() {
        // x <= 1, -x <= 0, y <= 1, -y <= 0, maximize x + y -> 2 at (1, 1)
        let cs = [hp(1, 0, 1), hp(-1, 0, 0), hp(0, 1, 1), hp(0, -1, 0)];
        match feasible(&cs, Some((rat(1), rat(1)))) {
            Feasibility::Optimal { optimum, optimizer } => {
                assert_eq!(optimum, rat(2));
                assert_eq!(optimizer, Point::from_ints(1, 1));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn contradictory_strip() {
        // x <= 0 and -x <= -1
        let cs = [hp(1, 0, 0), hp(-1, 0, -1)];
        assert_eq!(feasible(&cs, None), Feasibility::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        // y <= 0, -y <= 0, maximize x
        let cs = [hp(0, 1, 0), hp(0, -1, 0)];
        assert_eq!(feasible(&cs, Some((rat(1), rat(0)))), Feasibility::Unbounded);
    }

    #[test]
    fn witness_is_feasible() {
        let cs = [hp(1, 1, 4), hp(-1, 0, 0), hp(0, -1, 0), hp(1, -1, 1)];
        match feasible(&cs, None) {
            Feasibility::Feasible { witness } => {
                for h in &cs {
                    assert!(h.contains(&witness));
                }
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn fractional_optimum() {
        // maximize x subject to 2x + 3y <= 7, y >= 1/2, x <= 5y
        let cs = [
            HalfPlane::new(rat(2), rat(3), rat(7)),
            HalfPlane::new(rat(0), rat(-1), ratio(-1, 2)),
            HalfPlane::new(rat(1), rat(-5), rat(0)),
        ];
        match feasible(&cs, Some((rat(1), rat(0)))) {
            Feasibility::Optimal { optimum, optimizer } => {
                // best at intersection of 2x+3y=7 and x=5y: y=7/13, x=35/13
                assert_eq!(optimum, ratio(35, 13));
                assert_eq!(optimizer, Point::new(ratio(35, 13), ratio(7, 13)));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn three_variable_slack_program() {
        // maximize t with x in [0,1], t <= x, t <= 1 - x: optimum 1/2
        let rows = vec![
            (vec![rat(-1), rat(0)], rat(0)),
            (vec![rat(1), rat(0)], rat(1)),
            (vec![rat(-1), rat(1)], rat(0)),
            (vec![rat(1), rat(1)], rat(1)),
        ];
        let lp = LinearProgram::new(2, rows, Some(vec![rat(0), rat(1)]));
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, ratio(1, 2));
                assert_eq!(point[0], ratio(1, 2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn feasible_but_unbounded_region_gives_finite_witness() {
        // half plane x >= 3 only
        let cs = [hp(-1, 0, -3)];
        match feasible(&cs, None) {
            Feasibility::Feasible { witness } => {
                assert!(witness.x >= rat(3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_equality_pair() {
        // x + y <= 2 and -(x + y) <= -2 pins the line; maximize y with x >= 0: optimum 2
        let cs = [hp(1, 1, 2), hp(-1, -1, -2), hp(-1, 0, 0)];
        match feasible(&cs, Some((rat(0), rat(1)))) {
            Feasibility::Optimal { optimum, optimizer } => {
                assert_eq!(optimum, rat(2));
                assert_eq!(optimizer, Point::from_ints(0, 2));
            }
            other => panic!("{other:?}"),
        }
    }
}
