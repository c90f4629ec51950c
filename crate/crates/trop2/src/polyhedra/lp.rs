//! Exact two-phase primal simplex over the scalar field.
//!
//! Free variables are split into nonnegative pairs, every row gets a slack
//! or artificial variable, and pivoting follows Bland's rule, so the solver
//! terminates on every input without any numeric tolerance.

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LpOutcome<S> {
    Infeasible,
    Unbounded,
    Optimal { value: S, point: Vec<S> },
}

impl<S> LpOutcome<S> {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn optimal(self) -> Option<(S, Vec<S>)> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

const ITERATION_CAP: usize = 200_000;

struct Tableau<S> {
    rows: Vec<Vec<S>>,
    row0: Vec<S>,
    basis: Vec<usize>,
    width: usize,
}

impl<S: Scalar> Tableau<S> {
    fn rhs(&self, i: usize) -> &S {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = S::one() / self.rows[r][j].clone();
        for x in &mut self.rows[r] {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = self.rows[r].clone();
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][j].is_zero() {
                let factor = self.rows[i][j].clone();
                for (x, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        if !self.row0[j].is_zero() {
            let factor = self.row0[j].clone();
            for (x, p) in self.row0.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        self.basis[r] = j;
    }

    /// Bland's rule: entering column is the smallest index with a negative
    /// reduced cost; the leaving row minimizes the ratio, ties resolved by
    /// the smallest basis index. Returns false on an unbounded direction.
    fn run(&mut self) -> bool {
        for _ in 0..ITERATION_CAP {
            let Some(j) = (0..self.width).find(|&j| self.row0[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<usize> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                leave = Some(match leave {
                    None => i,
                    Some(best) => {
                        let cand = self.rhs(i).clone() / self.rows[i][j].clone();
                        let incumbent = self.rhs(best).clone() / self.rows[best][j].clone();
                        if cand < incumbent
                            || (cand == incumbent && self.basis[i] < self.basis[best])
                        {
                            i
                        } else {
                            best
                        }
                    }
                });
            }
            match leave {
                Some(r) => self.pivot(r, j),
                None => return false,
            }
        }
        panic!("simplex iteration cap exceeded");
    }

    fn column_value(&self, j: usize) -> S {
        match self.basis.iter().position(|&b| b == j) {
            Some(i) => self.rhs(i).clone(),
            None => S::zero(),
        }
    }
}

/// Maximizes `c·x` over `{x : A_le·x ≤ b_le, A_eq·x = b_eq}` with `x` free.
pub fn maximize<S: Scalar>(
    c: &[S],
    ineqs: &[(Vec<S>, S)],
    eqs: &[(Vec<S>, S)],
) -> LpOutcome<S> {
    let n = c.len();
    debug_assert!(ineqs.iter().chain(eqs).all(|(a, _)| a.len() == n));
    let n_slack = ineqs.len();
    let m = ineqs.len() + eqs.len();

    // columns: y+ (n) | y- (n) | slacks | artificials | rhs
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    let mut needs_artificial: Vec<bool> = Vec::with_capacity(m);
    for (idx, (a, b)) in ineqs.iter().chain(eqs.iter()).enumerate() {
        let is_eq = idx >= n_slack;
        let flip = b.is_negative();
        let sgn = |v: S| if flip { -v } else { v };
        let mut row = Vec::with_capacity(2 * n + n_slack + 1);
        for ai in a {
            row.push(sgn(ai.clone()));
        }
        for ai in a {
            row.push(sgn(-ai.clone()));
        }
        for s in 0..n_slack {
            row.push(if s == idx {
                sgn(S::one())
            } else {
                S::zero()
            });
        }
        row.push(sgn(b.clone()));
        rows.push(row);
        needs_artificial.push(is_eq || flip);
    }

    let art_start = 2 * n + n_slack;
    let n_art = needs_artificial.iter().filter(|&&x| x).count();
    let width = art_start + n_art;
    let mut basis = Vec::with_capacity(m);
    {
        let mut art = 0;
        for (idx, row) in rows.iter_mut().enumerate() {
            let rhs = row.pop().expect("rhs present");
            row.extend(std::iter::repeat(S::zero()).take(n_art));
            if needs_artificial[idx] {
                row[art_start + art] = S::one();
                basis.push(art_start + art);
                art += 1;
            } else {
                basis.push(2 * n + idx);
            }
            row.push(rhs);
        }
    }

    // phase one: maximize minus the sum of artificials
    let mut t = Tableau {
        rows,
        row0: vec![S::zero(); width + 1],
        basis,
        width,
    };
    for j in art_start..width {
        t.row0[j] = S::one();
    }
    for i in 0..t.rows.len() {
        if t.basis[i] >= art_start {
            for j in 0..=width {
                t.row0[j] = t.row0[j].clone() - t.rows[i][j].clone();
            }
        }
    }
    if !t.run() {
        unreachable!("phase-one objective is bounded");
    }
    if !t.row0[width].is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive leftover artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= art_start {
            match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    // delete artificial columns and install the real objective
    for row in &mut t.rows {
        row.drain(art_start..width);
    }
    t.width = art_start;
    let mut c_ext = vec![S::zero(); art_start];
    for (k, ck) in c.iter().enumerate() {
        c_ext[k] = ck.clone();
        c_ext[n + k] = -ck.clone();
    }
    t.row0 = c_ext.iter().map(|x| -x.clone()).collect();
    t.row0.push(S::zero());
    for i in 0..t.rows.len() {
        let cb = c_ext[t.basis[i]].clone();
        if !cb.is_zero() {
            for j in 0..=t.width {
                t.row0[j] = t.row0[j].clone() + cb.clone() * t.rows[i][j].clone();
            }
        }
    }

    if !t.run() {
        return LpOutcome::Unbounded;
    }
    let point = (0..n)
        .map(|k| t.column_value(k) - t.column_value(n + k))
        .collect();
    LpOutcome::Optimal {
        value: t.row0[t.width].clone(),
        point,
    }
}

/// Feasibility of `{x : A_le·x ≤ b_le, A_eq·x = b_eq}`.
pub fn feasible<S: Scalar>(n: usize, ineqs: &[(Vec<S>, S)], eqs: &[(Vec<S>, S)]) -> bool {
    maximize(&vec![S::zero(); n], ineqs, eqs).is_feasible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    fn row(a: &[i64], b: i64) -> (Vec<Rat>, Rat) {
        (rv(a), Rat::from_int(b))
    }

    #[test]
    fn detects_infeasibility() {
        // x >= 0 and x <= -1
        assert_eq!(
            maximize(&rv(&[0]), &[row(&[-1], 0), row(&[1], -1)], &[]),
            LpOutcome::Infeasible
        );
    }

    #[test]
    fn whole_space_is_feasible() {
        assert!(feasible::<Rat>(2, &[], &[]));
    }

    #[test]
    fn bounded_maximum() {
        let out = maximize(&rv(&[1]), &[row(&[1], 5), row(&[-1], 0)], &[]);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: Rat::from_int(5),
                point: rv(&[5]),
            }
        );
    }

    #[test]
    fn detects_unbounded() {
        assert_eq!(
            maximize(&rv(&[1]), &[row(&[-1], 0)], &[]),
            LpOutcome::Unbounded
        );
        assert_eq!(maximize(&rv(&[1]), &[], &[]), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_constraints() {
        let out = maximize(
            &rv(&[1, 0]),
            &[row(&[-1, 0], 0), row(&[0, -1], 0)],
            &[row(&[1, 1], 2)],
        );
        let (value, point) = out.optimal().unwrap();
        assert_eq!(value, Rat::from_int(2));
        assert_eq!(point, rv(&[2, 0]));
    }

    #[test]
    fn negative_rhs_needs_phase_one() {
        // x <= -3 and x >= -10, maximize x
        let out = maximize(&rv(&[1]), &[row(&[1], -3), row(&[-1], 10)], &[]);
        let (value, _) = out.optimal().unwrap();
        assert_eq!(value, Rat::from_int(-3));
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // classic degenerate instance that cycles under the naive pivot rule
        let c = vec![
            Rat::ratio(3, 4),
            Rat::from_int(-150),
            Rat::ratio(1, 50),
            Rat::from_int(-6),
        ];
        let ineqs = vec![
            (
                vec![
                    Rat::ratio(1, 4),
                    Rat::from_int(-60),
                    Rat::ratio(-1, 25),
                    Rat::from_int(9),
                ],
                Rat::from_int(0),
            ),
            (
                vec![
                    Rat::ratio(1, 2),
                    Rat::from_int(-90),
                    Rat::ratio(-1, 50),
                    Rat::from_int(3),
                ],
                Rat::from_int(0),
            ),
            (rv(&[0, 0, 1, 0]), Rat::from_int(1)),
            (rv(&[-1, 0, 0, 0]), Rat::from_int(0)),
            (rv(&[0, -1, 0, 0]), Rat::from_int(0)),
            (rv(&[0, 0, -1, 0]), Rat::from_int(0)),
            (rv(&[0, 0, 0, -1]), Rat::from_int(0)),
        ];
        let (value, point) = maximize(&c, &ineqs, &[]).optimal().unwrap();
        assert_eq!(value, Rat::ratio(1, 20));
        assert_eq!(point, vec![Rat::ratio(1, 25), Rat::from_int(0), Rat::from_int(1), Rat::from_int(0)]);
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let out = maximize(
            &rv(&[1, 1]),
            &[row(&[1, 0], 4), row(&[0, 1], 4)],
            &[row(&[1, 1], 3), row(&[2, 2], 6)],
        );
        let (value, point) = out.optimal().unwrap();
        assert_eq!(value, Rat::from_int(3));
        assert_eq!(point[0].clone() + point[1].clone(), Rat::from_int(3));
    }

    /// Feasibility oracle: Fourier-Motzkin elimination.
    fn fm_feasible(n: usize, ineqs: &[(Vec<Rat>, Rat)]) -> bool {
        let mut system: Vec<(Vec<Rat>, Rat)> = ineqs.to_vec();
        for var in (0..n).rev() {
            let mut lower = Vec::new(); // a'·x <= b' with coefficient < 0 (x >= ...)
            let mut upper = Vec::new();
            let mut rest = Vec::new();
            for (a, b) in system {
                let coef = a[var].clone();
                if coef.is_zero() {
                    rest.push((a, b));
                } else if coef.is_positive() {
                    upper.push((a, b));
                } else {
                    lower.push((a, b));
                }
            }
            for (al, bl) in &lower {
                for (au, bu) in &upper {
                    // scale so the var cancels: row_u/|cu| + row_l/|cl|
                    let cu = al[var].clone().abs();
                    let cl = au[var].clone().abs();
                    let a: Vec<Rat> = (0..n)
                        .map(|j| cu.clone() * au[j].clone() + cl.clone() * al[j].clone())
                        .collect();
                    debug_assert!(a[var].is_zero());
                    rest.push((a, cu.clone() * bu.clone() + cl.clone() * bl.clone()));
                }
            }
            system = rest;
        }
        system.iter().all(|(_, b)| !b.is_negative())
    }

    /// Feasibility oracle for systems known to be bounded: enumerate square
    /// subsystems and test their solutions against all constraints.
    fn vertex_feasible(n: usize, ineqs: &[(Vec<Rat>, Rat)]) -> bool {
        use crate::linalg;
        let m = ineqs.len();
        let mut subset = vec![0usize; n];
        fn rec(
            ineqs: &[(Vec<Rat>, Rat)],
            n: usize,
            m: usize,
            start: usize,
            depth: usize,
            subset: &mut Vec<usize>,
        ) -> bool {
            if depth == n {
                let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| ineqs[i].0.clone()).collect();
                let rhs: Vec<Rat> = subset.iter().map(|&i| ineqs[i].1.clone()).collect();
                if crate::linalg::rank(&rows) < n {
                    return false;
                }
                let x = linalg::solve(&rows, &rhs).expect("full rank");
                return ineqs
                    .iter()
                    .all(|(a, b)| linalg::dot(a, &x) <= *b);
            }
            (start..m).any(|i| {
                subset[depth] = i;
                rec(ineqs, n, m, i + 1, depth + 1, subset)
            })
        }
        rec(ineqs, n, m, 0, 0, &mut subset)
    }

    fn arb_system() -> impl Strategy<Value = (usize, Vec<(Vec<Rat>, Rat)>)> {
        (1usize..4)
            .prop_flat_map(|n| {
                let rows = proptest::collection::vec(
                    (
                        proptest::collection::vec(-4i64..5, n),
                        -6i64..7,
                    ),
                    1..8,
                );
                (Just(n), rows)
            })
            .prop_map(|(n, raw)| {
                let rows = raw
                    .into_iter()
                    .map(|(a, b)| (rv(&a), Rat::from_int(b)))
                    .collect();
                (n, rows)
            })
    }

    proptest! {
        #[test]
        fn feasibility_matches_fourier_motzkin((n, rows) in arb_system()) {
            prop_assert_eq!(feasible(n, &rows, &[]), fm_feasible(n, &rows));
        }

        #[test]
        fn feasibility_matches_vertex_oracle((n, rows) in arb_system()) {
            // box the system so a feasible instance has a vertex
            let mut boxed = rows.clone();
            for k in 0..n {
                let mut pos = vec![Rat::from_int(0); n];
                pos[k] = Rat::from_int(1);
                let mut neg = vec![Rat::from_int(0); n];
                neg[k] = Rat::from_int(-1);
                boxed.push((pos, Rat::from_int(1000)));
                boxed.push((neg, Rat::from_int(1000)));
            }
            prop_assert_eq!(feasible(n, &boxed, &[]), vertex_feasible(n, &boxed));
        }

        #[test]
        fn optima_are_feasible_and_tight((n, rows) in arb_system()) {
            let c: Vec<Rat> = (0..n).map(|k| Rat::from_int(if k % 2 == 0 { 1 } else { -1 })).collect();
            if let LpOutcome::Optimal { value, point } = maximize(&c, &rows, &[]) {
                for (a, b) in &rows {
                    prop_assert!(crate::linalg::dot(a, &point) <= *b);
                }
                prop_assert_eq!(crate::linalg::dot(&c, &point), value);
            }
        }
    }
}
