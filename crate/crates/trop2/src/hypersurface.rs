//! Tropical hypersurfaces of rank one and rank two.
//!
//! A rank-two tropical polynomial takes lexicographic minima of pair-valued
//! affine forms; its hypersurface is the locus where the minimum is attained
//! at least twice. The hypersurface is not a polyhedral complex in the
//! ordinary sense, but it decomposes into finitely many relatively open
//! pieces, each the product of a polyhedron in the first-component
//! coordinates with a polyhedron in the second-component coordinates. This
//! module enumerates support cells of rank-one hypersurfaces, builds that
//! decomposition, its Euclidean closure, and the star fans used when every
//! coefficient is free of the second parameter.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::polyhedra::lex::{LexHalfspace, LexPolyhedron};
use crate::polyhedra::{PiecePolyhedron, Polyhedron};
use crate::puiseux::PuiseuxLaurent;
use crate::rank2::{pairing, ExponentVector, Rank2Value, TropPoint2};
use crate::scalar::Scalar;
use crate::{Error, Result};

pub type SupportSet = BTreeSet<ExponentVector>;

/// Rank-one tropical Laurent polynomial `min_s (c_s + <s, x>)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TropPoly1<S: Scalar> {
    d: usize,
    coeffs: BTreeMap<ExponentVector, S>,
}

impl<S: Scalar> TropPoly1<S> {
    pub fn new<I>(d: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, S)>,
    {
        let map: BTreeMap<ExponentVector, S> = coeffs.into_iter().collect();
        for s in map.keys() {
            if s.dim() != d {
                return Err(Error::DimensionMismatch(s.dim(), d));
            }
        }
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(TropPoly1 { d, coeffs: map })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn coeff(&self, s: &ExponentVector) -> Option<&S> {
        self.coeffs.get(s)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &S)> {
        self.coeffs.iter()
    }

    /// Minimum value and the set of terms attaining it.
    pub fn eval(&self, x: &[S]) -> Result<(S, SupportSet)> {
        if x.len() != self.d {
            return Err(Error::DimensionMismatch(x.len(), self.d));
        }
        let mut best: Option<S> = None;
        let mut argmin = SupportSet::new();
        for (s, c) in &self.coeffs {
            let v = c.clone() + s.dot(x);
            match &best {
                Some(b) if v > *b => {}
                Some(b) if v == *b => {
                    argmin.insert(s.clone());
                }
                _ => {
                    best = Some(v);
                    argmin = SupportSet::from([s.clone()]);
                }
            }
        }
        Ok((best.expect("nonempty support"), argmin))
    }

    pub fn is_in_hypersurface(&self, x: &[S]) -> Result<bool> {
        Ok(self.eval(x)?.1.len() > 1)
    }
}

/// Rank-two tropical Laurent polynomial with pair-valued coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TropPoly2<S: Scalar> {
    d: usize,
    coeffs: BTreeMap<ExponentVector, Rank2Value<S>>,
}

/// Which component of the coefficient pairs to keep when projecting.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    T,
    U,
}

impl<S: Scalar> TropPoly2<S> {
    pub fn new<I>(d: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rank2Value<S>)>,
    {
        let map: BTreeMap<ExponentVector, Rank2Value<S>> = coeffs.into_iter().collect();
        for (s, c) in &map {
            if s.dim() != d {
                return Err(Error::DimensionMismatch(s.dim(), d));
            }
            if !c.is_finite() {
                return Err(Error::ZeroCoefficient(format!("term x^{s}")));
            }
        }
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(TropPoly2 { d, coeffs: map })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn coeff(&self, s: &ExponentVector) -> Option<&Rank2Value<S>> {
        self.coeffs.get(s)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rank2Value<S>)> {
        self.coeffs.iter()
    }

    /// Restriction to the terms in `keep`.
    pub fn restrict(&self, keep: &SupportSet) -> Result<Self> {
        Self::new(
            self.d,
            self.coeffs
                .iter()
                .filter(|(s, _)| keep.contains(*s))
                .map(|(s, c)| (s.clone(), c.clone())),
        )
    }
}

/// Coefficient-wise valuation of a Laurent polynomial over Puiseux
/// coefficients. Support is preserved; coefficients are nonzero by the
/// input invariant, so every valuation is finite.
pub fn tropicalize2<S: Scalar>(f: &PuiseuxLaurent<S>) -> TropPoly2<S> {
    TropPoly2::new(
        f.dim(),
        f.terms().map(|(s, gamma)| (s.clone(), gamma.val2())),
    )
    .expect("nonzero polynomial with nonzero coefficients")
}

/// Keeps one component of every coefficient pair.
pub fn project_poly<S: Scalar>(f: &TropPoly2<S>, axis: Axis) -> TropPoly1<S> {
    TropPoly1::new(
        f.d,
        f.coeffs.iter().map(|(s, c)| {
            let (t, u) = c.components().expect("finite coefficients only");
            (
                s.clone(),
                match axis {
                    Axis::T => t.clone(),
                    Axis::U => u.clone(),
                },
            )
        }),
    )
    .expect("projection keeps the support")
}

/// Tropical evaluation: the lex-minimum over all terms together with the
/// set of terms attaining it.
pub fn trop2_eval<S: Scalar>(
    f: &TropPoly2<S>,
    p: &TropPoint2<S>,
) -> Result<(Rank2Value<S>, SupportSet)> {
    if p.dim() != f.d {
        return Err(Error::DimensionMismatch(p.dim(), f.d));
    }
    let mut best: Option<Rank2Value<S>> = None;
    let mut argmin = SupportSet::new();
    for (s, c) in &f.coeffs {
        let v = c.trop_mul(&pairing(s, p)?);
        match &best {
            Some(b) if v > *b => {}
            Some(b) if v == *b => {
                argmin.insert(s.clone());
            }
            _ => {
                best = Some(v);
                argmin = SupportSet::from([s.clone()]);
            }
        }
    }
    Ok((best.expect("nonempty support"), argmin))
}

/// Membership in the rank-two hypersurface: the minimum is attained twice.
pub fn is_in_hypersurface2<S: Scalar>(f: &TropPoly2<S>, p: &TropPoint2<S>) -> Result<bool> {
    Ok(trop2_eval(f, p)?.1.len() > 1)
}

/// Support cell of a rank-one polynomial under its maximal label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportCell1<S: Scalar> {
    pub label: SupportSet,
    pub cell: Polyhedron<S>,
}

/// H-representation of the support cell of `sset`: the terms of `sset` are
/// equal and minimal. Inequality rows follow the support order of `f`,
/// skipping members of `sset`.
pub fn support_cell_polyhedron<S: Scalar>(f: &TropPoly1<S>, sset: &SupportSet) -> Polyhedron<S> {
    let s0 = sset.first().expect("nonempty support set");
    let c0 = f.coeff(s0).expect("label within support").clone();
    let mut eqs = Vec::new();
    for s in sset.iter().skip(1) {
        let c = f.coeff(s).expect("label within support");
        eqs.push((s.sub(s0).row::<S>(), c0.clone() - c.clone()));
    }
    let mut ineqs = Vec::new();
    for (s, c) in f.terms() {
        if !sset.contains(s) {
            ineqs.push((s0.sub(s).row::<S>(), c.clone() - c0.clone()));
        }
    }
    Polyhedron::new(f.dim(), ineqs, eqs).expect("rows sized to the ambient dimension")
}

/// The full label of the cell: `sset` plus every term whose inequality is
/// implicit on the cell.
fn maximal_label<S: Scalar>(f: &TropPoly1<S>, sset: &SupportSet, cell: &Polyhedron<S>) -> SupportSet {
    let mask = cell.implicit_mask();
    let mut label = sset.clone();
    let mut k = 0;
    for (s, _) in f.terms() {
        if !sset.contains(s) {
            if mask[k] {
                label.insert(s.clone());
            }
            k += 1;
        }
    }
    label
}

/// Enumerates every nonempty support cell, each under its unique maximal
/// label, sorted by (label size, label).
///
/// The search seeds with all singletons and pairs and grows discovered
/// labels one support vector at a time. This is exhaustive: any feasible
/// support set is a union of pairs inside it, every subset of a feasible
/// label is again feasible, and cells agree with the cells of their maximal
/// labels, so each cell is reached through a chain of single-element
/// extensions.
pub fn support_cells1<S: Scalar>(f: &TropPoly1<S>) -> Vec<SupportCell1<S>> {
    let supp = f.support();
    let mut cells: BTreeMap<SupportSet, Polyhedron<S>> = BTreeMap::new();
    let mut seen: BTreeSet<SupportSet> = BTreeSet::new();
    let mut queue: VecDeque<SupportSet> = VecDeque::new();

    let process = |cand: SupportSet,
                       cells: &mut BTreeMap<SupportSet, Polyhedron<S>>,
                       seen: &mut BTreeSet<SupportSet>,
                       queue: &mut VecDeque<SupportSet>| {
        if !seen.insert(cand.clone()) {
            return;
        }
        let cell = support_cell_polyhedron(f, &cand);
        if !cell.is_feasible() {
            return;
        }
        let label = maximal_label(f, &cand, &cell);
        if !cells.contains_key(&label) {
            let canonical = support_cell_polyhedron(f, &label);
            cells.insert(label.clone(), canonical);
            queue.push_back(label.clone());
        }
        seen.insert(label);
    };

    for s in &supp {
        process(
            SupportSet::from([s.clone()]),
            &mut cells,
            &mut seen,
            &mut queue,
        );
    }
    for (i, s) in supp.iter().enumerate() {
        for s2 in &supp[i + 1..] {
            process(
                SupportSet::from([s.clone(), s2.clone()]),
                &mut cells,
                &mut seen,
                &mut queue,
            );
        }
    }
    while let Some(label) = queue.pop_front() {
        for s in &supp {
            if !label.contains(s) {
                let mut cand = label.clone();
                cand.insert(s.clone());
                process(cand, &mut cells, &mut seen, &mut queue);
            }
        }
    }

    let mut out: Vec<SupportCell1<S>> = cells
        .into_iter()
        .map(|(label, cell)| SupportCell1 { label, cell })
        .collect();
    out.sort_by(|a, b| {
        (a.label.len(), &a.label).cmp(&(b.label.len(), &b.label))
    });
    out
}

/// Inclusion-maximal hypersurface cells: labels of size at least two that
/// are minimal under inclusion.
pub fn maximal_cells<S: Scalar>(cells: &[SupportCell1<S>]) -> Vec<&SupportCell1<S>> {
    let hyper: Vec<&SupportCell1<S>> = cells.iter().filter(|c| c.label.len() >= 2).collect();
    hyper
        .iter()
        .filter(|c| {
            !hyper
                .iter()
                .any(|o| o.label.len() < c.label.len() && o.label.is_subset(&c.label))
        })
        .copied()
        .collect()
}

/// The support cell as a lex-polyhedron: for `s` in the set and `s'` in the
/// support, `<s - s', p> ≤ val2(c_{s'}) - val2(c_s)` componentwise on the
/// bound; both directions for pairs within the set.
pub fn support_cell_lex<S: Scalar>(f: &TropPoly2<S>, sset: &SupportSet) -> Result<LexPolyhedron<S>> {
    for s in sset {
        if f.coeff(s).is_none() {
            return Err(Error::Invalid(format!("term x^{s} outside the support")));
        }
    }
    let mut halfspaces = Vec::new();
    for s in sset {
        let (c1, c2) = f.coeff(s).expect("checked").components().expect("finite");
        for (s2, c) in f.terms() {
            if s2 == s {
                continue;
            }
            let (d1, d2) = c.components().expect("finite");
            halfspaces.push(LexHalfspace {
                s: s.sub(s2),
                q: (d1.clone() - c1.clone(), d2.clone() - c2.clone()),
            });
        }
    }
    LexPolyhedron::new(f.dim(), halfspaces)
}

/// One piece of the rank-two decomposition: the product of the t-cell of
/// `t_label` with the u-cell of `u_label` computed from the restriction to
/// `t_label`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rank2Piece<S: Scalar> {
    pub t_label: SupportSet,
    pub u_label: SupportSet,
    pub piece: PiecePolyhedron<S>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rank2Decomposition<S: Scalar> {
    pub d: usize,
    pub pieces: Vec<Rank2Piece<S>>,
    /// Support cells of the t-projection, the rank-one complex underlying
    /// the decomposition.
    pub t_cells: Vec<SupportCell1<S>>,
}

impl<S: Scalar> Rank2Decomposition<S> {
    /// Indices of pieces whose relative interior product contains the point
    /// split into blocks.
    pub fn interior_pieces_containing(&self, t: &[S], u: &[S]) -> Result<Vec<usize>> {
        let mut hits = Vec::new();
        for (i, piece) in self.pieces.iter().enumerate() {
            if piece.piece.rel_int_contains_blocks(t, u)? {
                hits.push(i);
            }
        }
        Ok(hits)
    }

    /// Union membership over the closed pieces.
    pub fn closed_union_contains(&self, t: &[S], u: &[S]) -> Result<bool> {
        for piece in &self.pieces {
            if piece.piece.contains_blocks(t, u)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Decomposition of the hypersurface of `F` into block products: `T` runs
/// over the support cells of the t-projection, `S` over the support cells of
/// the u-projection of the restriction to `T`, keeping pairs with at least
/// two terms in `S`. A single-term polynomial has an empty hypersurface and
/// yields no pieces.
pub fn decompose2<S: Scalar>(f: &TropPoly2<S>) -> Rank2Decomposition<S> {
    let ft = project_poly(f, Axis::T);
    let t_cells = support_cells1(&ft);
    let mut pieces = Vec::new();
    for tc in &t_cells {
        if tc.label.len() < 2 {
            continue;
        }
        let restricted = f.restrict(&tc.label).expect("label within support");
        let fu = project_poly(&restricted, Axis::U);
        for uc in support_cells1(&fu) {
            if uc.label.len() < 2 {
                continue;
            }
            pieces.push(Rank2Piece {
                t_label: tc.label.clone(),
                u_label: uc.label,
                piece: PiecePolyhedron::new(tc.cell.clone(), uc.cell)
                    .expect("blocks share the ambient dimension"),
            });
        }
    }
    pieces.sort_by(|a, b| {
        (a.t_label.len(), &a.t_label, a.u_label.len(), &a.u_label).cmp(&(
            b.t_label.len(),
            &b.t_label,
            b.u_label.len(),
            &b.u_label,
        ))
    });
    Rank2Decomposition {
        d: f.d,
        pieces,
        t_cells,
    }
}

/// Tropicalizes and decomposes a Laurent polynomial over Puiseux
/// coefficients.
pub fn rank2_decompose<S: Scalar>(f: &PuiseuxLaurent<S>) -> Rank2Decomposition<S> {
    decompose2(&tropicalize2(f))
}

/// Closure of the hypersurface as a minimal list of closed block products:
/// the closed pieces, deduplicated, with pieces contained in another piece
/// removed.
pub fn closure2<S: Scalar>(dec: &Rank2Decomposition<S>) -> Result<Vec<PiecePolyhedron<S>>> {
    let mut unique: Vec<PiecePolyhedron<S>> = Vec::new();
    for piece in &dec.pieces {
        let mut fresh = true;
        for kept in &unique {
            if kept.piece_equal(&piece.piece)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            unique.push(piece.piece.clone());
        }
    }
    let mut keep = vec![true; unique.len()];
    for i in 0..unique.len() {
        for j in 0..unique.len() {
            if i != j && keep[j] && unique[j].contains_piece(&unique[i])? {
                keep[i] = false;
                break;
            }
        }
    }
    Ok(unique
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect())
}

/// Star of the cell labelled `label`: for every hypersurface cell containing
/// it (label contained in `label`), the cone of directions spanned at a
/// relative-interior point, listed by cell label.
pub fn star_of_cell<S: Scalar>(
    cells: &[SupportCell1<S>],
    label: &SupportSet,
) -> Result<Vec<(SupportSet, Polyhedron<S>)>> {
    let base = cells
        .iter()
        .find(|c| &c.label == label)
        .ok_or(Error::CellNotInComplex)?;
    let point = base.cell.rel_int_point()?;
    let mut cones = Vec::new();
    for c in cells {
        if c.label.len() >= 2 && c.label.is_subset(label) {
            cones.push((c.label.clone(), c.cell.tangent_cone(&point)?));
        }
    }
    Ok(cones)
}

/// Rank-two decomposition specialized to coefficients free of the second
/// parameter: rejects inputs whose coefficient valuations have a nonzero
/// second component. For such inputs the u-cells are exactly the star cones
/// of the t-cells.
pub fn kk_decompose<S: Scalar>(f: &PuiseuxLaurent<S>) -> Result<Rank2Decomposition<S>> {
    for (s, gamma) in f.terms() {
        match gamma.val2() {
            Rank2Value::Finite(_, u) if u.is_zero() => {}
            _ => {
                return Err(Error::CoefficientDependsOnU(format!(
                    "coefficient of x^{s} is {gamma}"
                )))
            }
        }
    }
    Ok(rank2_decompose(f))
}
