//! Lex-polyhedra: finite intersections of halfspaces of the form
//! `⟨s, p⟩ ≤ q` where the pairing value and the bound `q` are rank-two
//! values compared lexicographically.

use crate::rank2::{pairing, ExponentVector, Rank2Value, TropPoint2};
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexHalfspace<S: Scalar> {
    pub s: ExponentVector,
    pub q: (S, S),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexPolyhedron<S: Scalar> {
    d: usize,
    halfspaces: Vec<LexHalfspace<S>>,
}

impl<S: Scalar> LexPolyhedron<S> {
    pub fn new(d: usize, halfspaces: Vec<LexHalfspace<S>>) -> Result<Self> {
        for hs in &halfspaces {
            if hs.s.dim() != d {
                return Err(Error::DimensionMismatch(hs.s.dim(), d));
            }
        }
        Ok(LexPolyhedron { d, halfspaces })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn halfspaces(&self) -> &[LexHalfspace<S>] {
        &self.halfspaces
    }

    /// Membership by direct lexicographic evaluation of every halfspace.
    pub fn lex_member(&self, p: &TropPoint2<S>) -> Result<bool> {
        if p.dim() != self.d {
            return Err(Error::DimensionMismatch(p.dim(), self.d));
        }
        for hs in &self.halfspaces {
            let value = pairing(&hs.s, p)?;
            let bound = Rank2Value::Finite(hs.q.0.clone(), hs.q.1.clone());
            if value > bound {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership via the split form of each halfspace: the first-coordinate
    /// inequality, plus the second-coordinate inequality conditional on the
    /// first being tight. Requires a finite point.
    pub fn lex_member_split(&self, p: &TropPoint2<S>) -> Result<bool> {
        if p.dim() != self.d {
            return Err(Error::DimensionMismatch(p.dim(), self.d));
        }
        let t = p
            .t_block()
            .ok_or_else(|| Error::Invalid("split membership needs a finite point".into()))?;
        let u = p.u_block().expect("finite point has both blocks");
        for hs in &self.halfspaces {
            let tv = hs.s.dot(&t);
            if tv > hs.q.0 {
                return Ok(false);
            }
            if tv == hs.q.0 && hs.s.dot(&u) > hs.q.1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
