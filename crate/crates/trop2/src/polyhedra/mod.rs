//! Exact convex-polyhedra kernel in H-representation.
//!
//! A [`Polyhedron`] is a finite list of rational inequalities `a·x ≤ b` and
//! equalities `a·x = b`. Every derived query (feasibility, implied
//! equalities, affine dimension, relative-interior sampling, containment)
//! reduces to linear programs solved exactly by [`lp::maximize`].

pub mod lex;
pub mod lp;

use std::sync::OnceLock;

use crate::linalg;
use crate::scalar::Scalar;
use crate::{Error, Result};

pub use lp::{feasible, maximize, LpOutcome};

pub type Constraint<S> = (Vec<S>, S);

#[derive(Debug)]
pub struct Polyhedron<S: Scalar> {
    n: usize,
    ineqs: Vec<Constraint<S>>,
    eqs: Vec<Constraint<S>>,
    feasible: OnceLock<bool>,
    implicit: OnceLock<Vec<bool>>,
    dim: OnceLock<i64>,
}

impl<S: Scalar> Clone for Polyhedron<S> {
    fn clone(&self) -> Self {
        Polyhedron {
            n: self.n,
            ineqs: self.ineqs.clone(),
            eqs: self.eqs.clone(),
            feasible: self.feasible.clone(),
            implicit: self.implicit.clone(),
            dim: self.dim.clone(),
        }
    }
}

impl<S: Scalar> PartialEq for Polyhedron<S> {
    /// Syntactic comparison of the constraint lists; use [`Polyhedron::poly_equal`]
    /// for set equality.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ineqs == other.ineqs && self.eqs == other.eqs
    }
}

impl<S: Scalar> Eq for Polyhedron<S> {}

impl<S: Scalar> Polyhedron<S> {
    pub fn new(n: usize, ineqs: Vec<Constraint<S>>, eqs: Vec<Constraint<S>>) -> Result<Self> {
        for (a, _) in ineqs.iter().chain(&eqs) {
            if a.len() != n {
                return Err(Error::DimensionMismatch(a.len(), n));
            }
        }
        Ok(Polyhedron {
            n,
            ineqs,
            eqs,
            feasible: OnceLock::new(),
            implicit: OnceLock::new(),
            dim: OnceLock::new(),
        })
    }

    pub fn whole_space(n: usize) -> Self {
        Self::new(n, Vec::new(), Vec::new()).expect("no constraints to check")
    }

    pub fn from_ineqs(n: usize, ineqs: Vec<Constraint<S>>) -> Result<Self> {
        Self::new(n, ineqs, Vec::new())
    }

    pub fn single_point(x: &[S]) -> Self {
        let eqs = x
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut a = vec![S::zero(); x.len()];
                a[i] = S::one();
                (a, v.clone())
            })
            .collect();
        Self::new(x.len(), Vec::new(), eqs).expect("constraints built to size")
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn ineqs(&self) -> &[Constraint<S>] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[Constraint<S>] {
        &self.eqs
    }

    pub fn is_feasible(&self) -> bool {
        *self
            .feasible
            .get_or_init(|| lp::feasible(self.n, &self.ineqs, &self.eqs))
    }

    /// Maximizes `c·x` over the polyhedron.
    pub fn lp_max(&self, c: &[S]) -> LpOutcome<S> {
        lp::maximize(c, &self.ineqs, &self.eqs)
    }

    /// Mask of inequalities that hold with equality on the whole set.
    /// Meaningless (all false) for an empty polyhedron.
    pub fn implicit_mask(&self) -> &[bool] {
        self.implicit.get_or_init(|| {
            if !self.is_feasible() {
                return vec![false; self.ineqs.len()];
            }
            self.ineqs
                .iter()
                .map(|(a, b)| {
                    let neg: Vec<S> = a.iter().map(|x| -x.clone()).collect();
                    match self.lp_max(&neg) {
                        LpOutcome::Optimal { value, .. } => -value == *b,
                        _ => false,
                    }
                })
                .collect()
        })
    }

    /// Dimension of the affine hull; -1 for the empty set.
    pub fn affine_dim(&self) -> i64 {
        *self.dim.get_or_init(|| {
            if !self.is_feasible() {
                return -1;
            }
            let mask = self.implicit_mask();
            let normals: Vec<Vec<S>> = self
                .eqs
                .iter()
                .map(|(a, _)| a.clone())
                .chain(
                    self.ineqs
                        .iter()
                        .zip(mask)
                        .filter(|(_, &im)| im)
                        .map(|((a, _), _)| a.clone()),
                )
                .collect();
            self.n as i64 - linalg::rank(&normals) as i64
        })
    }

    /// Basis of the direction space of the affine hull.
    pub fn direction_basis(&self) -> Vec<Vec<S>> {
        if !self.is_feasible() {
            return Vec::new();
        }
        let mask = self.implicit_mask();
        let normals: Vec<Vec<S>> = self
            .eqs
            .iter()
            .map(|(a, _)| a.clone())
            .chain(
                self.ineqs
                    .iter()
                    .zip(mask)
                    .filter(|(_, &im)| im)
                    .map(|((a, _), _)| a.clone()),
            )
            .collect();
        linalg::nullspace_basis(&normals, self.n)
    }

    /// A rational point satisfying every non-implicit inequality strictly,
    /// found by maximizing a common slack clamped at 1.
    pub fn rel_int_point(&self) -> Result<Vec<S>> {
        if !self.is_feasible() {
            return Err(Error::EmptyPolyhedron);
        }
        let mask = self.implicit_mask().to_vec();
        let mut ineqs: Vec<Constraint<S>> = Vec::with_capacity(self.ineqs.len() + 1);
        for ((a, b), im) in self.ineqs.iter().zip(&mask) {
            let mut row = a.clone();
            row.push(if *im { S::zero() } else { S::one() });
            ineqs.push((row, b.clone()));
        }
        let mut slack_cap = vec![S::zero(); self.n];
        slack_cap.push(S::one());
        ineqs.push((slack_cap, S::one()));
        let eqs: Vec<Constraint<S>> = self
            .eqs
            .iter()
            .map(|(a, b)| {
                let mut row = a.clone();
                row.push(S::zero());
                (row, b.clone())
            })
            .collect();
        let mut c = vec![S::zero(); self.n];
        c.push(S::one());
        let (value, mut point) = lp::maximize(&c, &ineqs, &eqs)
            .optimal()
            .expect("slack objective is bounded and feasible");
        debug_assert!(value.is_positive(), "nonempty polyhedron has a relative interior point");
        point.truncate(self.n);
        Ok(point)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut ineqs = self.ineqs.clone();
        ineqs.extend(other.ineqs.iter().cloned());
        let mut eqs = self.eqs.clone();
        eqs.extend(other.eqs.iter().cloned());
        Self::new(self.n, ineqs, eqs)
    }

    /// Set containment `other ⊆ self` via one LP per constraint.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        if !other.is_feasible() {
            return Ok(true);
        }
        let valid_upper = |a: &[S], b: &S| match other.lp_max(a) {
            LpOutcome::Optimal { value, .. } => value <= *b,
            LpOutcome::Unbounded => false,
            LpOutcome::Infeasible => unreachable!("feasibility checked"),
        };
        for (a, b) in &self.ineqs {
            if !valid_upper(a, b) {
                return Ok(false);
            }
        }
        for (a, b) in &self.eqs {
            let neg: Vec<S> = a.iter().map(|x| -x.clone()).collect();
            if !valid_upper(a, b) || !valid_upper(&neg, &-b.clone()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn poly_equal(&self, other: &Self) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn contains_point(&self, x: &[S]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(x.len(), self.n));
        }
        Ok(self.ineqs.iter().all(|(a, b)| linalg::dot(a, x) <= *b)
            && self.eqs.iter().all(|(a, b)| linalg::dot(a, x) == *b))
    }

    /// Membership in the relative interior: non-implicit inequalities must
    /// hold strictly.
    pub fn rel_int_contains_point(&self, x: &[S]) -> Result<bool> {
        if !self.contains_point(x)? {
            return Ok(false);
        }
        let mask = self.implicit_mask();
        Ok(self
            .ineqs
            .iter()
            .zip(mask)
            .all(|((a, b), &im)| im || linalg::dot(a, x) < *b))
    }

    /// Indices of inequalities tight at a member point.
    pub fn tight_ineqs(&self, x: &[S]) -> Result<Vec<usize>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(x.len(), self.n));
        }
        Ok(self
            .ineqs
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| linalg::dot(a, x) == *b)
            .map(|(i, _)| i)
            .collect())
    }

    /// Image under `x ↦ x + v`.
    pub fn translate(&self, v: &[S]) -> Result<Self> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(v.len(), self.n));
        }
        let shift = |(a, b): &Constraint<S>| {
            let nb = b.clone() + linalg::dot(a, v);
            (a.clone(), nb)
        };
        Self::new(
            self.n,
            self.ineqs.iter().map(shift).collect(),
            self.eqs.iter().map(shift).collect(),
        )
    }

    /// Cone of directions leaving `x` inside the polyhedron: inequalities
    /// tight at `x` become homogeneous inequalities, equalities stay
    /// homogeneous equalities.
    pub fn tangent_cone(&self, x: &[S]) -> Result<Self> {
        if !self.contains_point(x)? {
            return Err(Error::Invalid(
                "tangent cone base point must lie in the polyhedron".into(),
            ));
        }
        let ineqs = self
            .ineqs
            .iter()
            .filter(|(a, b)| linalg::dot(a, x) == *b)
            .map(|(a, _)| (a.clone(), S::zero()))
            .collect();
        let eqs = self.eqs.iter().map(|(a, _)| (a.clone(), S::zero())).collect();
        Self::new(self.n, ineqs, eqs)
    }
}

/// Dimension of the Minkowski sum, `-1` when either summand is empty.
pub fn minkowski_dim<S: Scalar>(p: &Polyhedron<S>, q: &Polyhedron<S>) -> i64 {
    if !p.is_feasible() || !q.is_feasible() {
        return -1;
    }
    let mut dirs = p.direction_basis();
    dirs.extend(q.direction_basis());
    linalg::rank(&dirs) as i64
}

/// Product of a polyhedron in the t-coordinates with one in the
/// u-coordinates of `R^{2d}`, stored as the pair; coordinates are never
/// mixed across the two blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecePolyhedron<S: Scalar> {
    pub t_part: Polyhedron<S>,
    pub u_part: Polyhedron<S>,
}

impl<S: Scalar> PiecePolyhedron<S> {
    pub fn new(t_part: Polyhedron<S>, u_part: Polyhedron<S>) -> Result<Self> {
        if t_part.ambient_dim() != u_part.ambient_dim() {
            return Err(Error::DimensionMismatch(
                t_part.ambient_dim(),
                u_part.ambient_dim(),
            ));
        }
        Ok(PiecePolyhedron { t_part, u_part })
    }

    pub fn d(&self) -> usize {
        self.t_part.ambient_dim()
    }

    pub fn is_feasible(&self) -> bool {
        self.t_part.is_feasible() && self.u_part.is_feasible()
    }

    pub fn affine_dim(&self) -> i64 {
        if !self.is_feasible() {
            return -1;
        }
        self.t_part.affine_dim() + self.u_part.affine_dim()
    }

    pub fn contains_blocks(&self, t: &[S], u: &[S]) -> Result<bool> {
        Ok(self.t_part.contains_point(t)? && self.u_part.contains_point(u)?)
    }

    pub fn rel_int_contains_blocks(&self, t: &[S], u: &[S]) -> Result<bool> {
        Ok(self.t_part.rel_int_contains_point(t)? && self.u_part.rel_int_contains_point(u)?)
    }

    /// Product containment `other ⊆ self`.
    pub fn contains_piece(&self, other: &Self) -> Result<bool> {
        if !other.is_feasible() {
            return Ok(true);
        }
        Ok(self.t_part.contains(&other.t_part)? && self.u_part.contains(&other.u_part)?)
    }

    pub fn piece_equal(&self, other: &Self) -> Result<bool> {
        Ok(self.contains_piece(other)? && other.contains_piece(self)?)
    }

    pub fn intersect_blockwise(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.t_part.intersect(&other.t_part)?,
            self.u_part.intersect(&other.u_part)?,
        )
    }

    pub fn rel_int_blocks(&self) -> Result<(Vec<S>, Vec<S>)> {
        Ok((self.t_part.rel_int_point()?, self.u_part.rel_int_point()?))
    }
}
