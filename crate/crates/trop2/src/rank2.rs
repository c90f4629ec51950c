//! The rank-two tropical semifield and points over it.
//!
//! Values are lexicographically ordered pairs `(a, b)` of scalars together
//! with a single extra element [`Rank2Value::TropZero`] that is larger than
//! every pair. Tropical addition is the lexicographic minimum, tropical
//! multiplication is componentwise addition; `TropZero` is neutral for the
//! former and absorbing for the latter.

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Element of the rank-two min-plus semifield.
///
/// The derived order is exactly the semifield order: `Finite(a, b)` pairs
/// compare lexicographically and `TropZero` compares above everything.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Rank2Value<S> {
    Finite(S, S),
    TropZero,
}

impl<S: Scalar> Rank2Value<S> {
    /// Finite pair from machine integers.
    pub fn pair(a: i64, b: i64) -> Self {
        Rank2Value::Finite(S::from_int(a), S::from_int(b))
    }

    /// Neutral element of tropical multiplication, the pair `(0, 0)`.
    pub fn one() -> Self {
        Rank2Value::Finite(S::zero(), S::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Rank2Value::Finite(..))
    }

    /// Both components, when finite.
    pub fn components(&self) -> Option<(&S, &S)> {
        match self {
            Rank2Value::Finite(a, b) => Some((a, b)),
            Rank2Value::TropZero => None,
        }
    }

    /// First component, when finite.
    pub fn t_component(&self) -> Option<&S> {
        self.components().map(|(a, _)| a)
    }

    /// Second component, when finite.
    pub fn u_component(&self) -> Option<&S> {
        self.components().map(|(_, b)| b)
    }

    /// Tropical sum: the lexicographic minimum.
    pub fn trop_add(&self, rhs: &Self) -> Self {
        if self <= rhs {
            self.clone()
        } else {
            rhs.clone()
        }
    }

    /// Tropical product: componentwise addition, with `TropZero` absorbing.
    pub fn trop_mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Rank2Value::Finite(a, b), Rank2Value::Finite(c, d)) => {
                Rank2Value::Finite(a.clone() + c.clone(), b.clone() + d.clone())
            }
            _ => Rank2Value::TropZero,
        }
    }

    /// Tropical multiplicative inverse; `None` for `TropZero`.
    pub fn trop_inv(&self) -> Option<Self> {
        self.components()
            .map(|(a, b)| Rank2Value::Finite(-a.clone(), -b.clone()))
    }

    /// Integer tropical scaling `k ⊙ self = (k·a, k·b)`.
    ///
    /// `TropZero` stays `TropZero` for `k > 0`, becomes the neutral pair for
    /// `k = 0` and is rejected for `k < 0`.
    pub fn scale(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one());
        }
        match self {
            Rank2Value::Finite(a, b) => {
                let f = S::from_int(k);
                Ok(Rank2Value::Finite(f.clone() * a.clone(), f * b.clone()))
            }
            Rank2Value::TropZero if k > 0 => Ok(Rank2Value::TropZero),
            Rank2Value::TropZero => Err(Error::NegativeExponentAtTropZero(0)),
        }
    }
}

/// Integer exponent vector of a Laurent monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn new(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise difference; both vectors must share a dimension.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "exponent dimension mismatch");
        ExponentVector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Euclidean pairing with a scalar vector.
    pub fn dot<S: Scalar>(&self, x: &[S]) -> S {
        assert_eq!(self.dim(), x.len(), "exponent dimension mismatch");
        self.0
            .iter()
            .zip(x)
            .fold(S::zero(), |acc, (&s, xi)| acc + S::from_int(s) * xi.clone())
    }

    /// Coefficient row for the linear functional `x ↦ ⟨self, x⟩`.
    pub fn row<S: Scalar>(&self) -> Vec<S> {
        self.0.iter().map(|&s| S::from_int(s)).collect()
    }
}

impl std::fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Point whose coordinates are rank-two tropical values.
///
/// Coordinate `i` holds the pair `(p_{1i}, p_{2i})`; the first components of
/// all coordinates form the `t`-block of the point, the second components
/// the `u`-block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TropPoint2<S>(pub Vec<Rank2Value<S>>);

impl<S: Scalar> TropPoint2<S> {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(Rank2Value::is_finite)
    }

    /// Builds a finite point from separate `t` and `u` blocks.
    pub fn from_blocks(t: &[S], u: &[S]) -> Self {
        assert_eq!(t.len(), u.len(), "block length mismatch");
        TropPoint2(
            t.iter()
                .zip(u)
                .map(|(a, b)| Rank2Value::Finite(a.clone(), b.clone()))
                .collect(),
        )
    }

    /// First components of a finite point.
    pub fn t_block(&self) -> Option<Vec<S>> {
        self.0
            .iter()
            .map(|v| v.t_component().cloned())
            .collect()
    }

    /// Second components of a finite point.
    pub fn u_block(&self) -> Option<Vec<S>> {
        self.0
            .iter()
            .map(|v| v.u_component().cloned())
            .collect()
    }
}

/// Tropical pairing `⟨s, p⟩ = Σ_i s_i ⊙ p_i`.
///
/// A negative exponent on a `TropZero` coordinate has no value and is
/// rejected; a positive exponent on a `TropZero` coordinate absorbs the
/// whole sum; a zero exponent contributes the neutral pair regardless of the
/// coordinate.
pub fn pairing<S: Scalar>(s: &ExponentVector, p: &TropPoint2<S>) -> Result<Rank2Value<S>> {
    if s.dim() != p.dim() {
        return Err(Error::DimensionMismatch(s.dim(), p.dim()));
    }
    for (i, (&si, pi)) in s.0.iter().zip(&p.0).enumerate() {
        if si < 0 && !pi.is_finite() {
            return Err(Error::NegativeExponentAtTropZero(i));
        }
    }
    if s
        .0
        .iter()
        .zip(&p.0)
        .any(|(&si, pi)| si > 0 && !pi.is_finite())
    {
        return Ok(Rank2Value::TropZero);
    }
    let mut acc = Rank2Value::one();
    for (&si, pi) in s.0.iter().zip(&p.0) {
        if si != 0 {
            acc = acc.trop_mul(&pi.scale(si)?);
        }
    }
    Ok(acc)
}
