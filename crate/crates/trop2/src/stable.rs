//! Stable intersection of rank-one tropical hypersurfaces.
//!
//! The primary method perturbs the second hypersurface symbolically in the
//! second valuation parameter, intersects the two rank-two hypersurfaces
//! blockwise, and projects to the first block. A direct combinatorial
//! oracle (Minkowski-dimension filter on cell pairs) and an epsilon-translation
//! probe cross-check the result.

use crate::hypersurface::{
    maximal_cells, project_poly, rank2_decompose, support_cells1, tropicalize2, Axis, SupportSet,
    TropPoly1,
};
use crate::linalg;
use crate::polyhedra::{minkowski_dim, PiecePolyhedron, Polyhedron};
use crate::puiseux::{PuiseuxLaurent, PuiseuxPoly};
use crate::rank2::ExponentVector;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Witness that a rational slope is generic enough for the perturbation:
/// the weighted sum Σ sᵢ·βⁱ is nonzero for every checked vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaCertificate<S: Scalar> {
    pub beta: S,
    /// Vectors checked, paired with the nonzero value of Σ sᵢ·βⁱ.
    pub checked: Vec<(ExponentVector, S)>,
    pub all_nonzero: bool,
}

impl<S: Scalar> BetaCertificate<S> {
    /// Recomputes every weighted sum and compares with the stored values.
    pub fn verify(&self) -> bool {
        self.all_nonzero
            && self.checked.iter().all(|(s, value)| {
                let recomputed = beta_weight(s, &self.beta);
                !recomputed.is_zero() && recomputed == *value
            })
    }
}

/// Σ sᵢ·βⁱ with i starting at 1 for the first coordinate.
pub fn beta_weight<S: Scalar>(s: &ExponentVector, beta: &S) -> S {
    let mut acc = S::zero();
    let mut power = S::one();
    for i in 0..s.dim() {
        power = power * beta.clone();
        acc = acc + S::from_int(s.0[i]) * power.clone();
    }
    acc
}

fn beta_candidates<S: Scalar>() -> impl Iterator<Item = S> {
    let head = vec![
        S::from_int(2),
        S::from_int(3),
        S::ratio(5, 2),
        S::ratio(7, 3),
    ];
    head.into_iter().chain((4..).map(S::from_int))
}

/// Nonzero vectors the perturbation must separate: all support vectors and
/// all pairwise differences within the union of the supports.
fn vectors_to_check(supports: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut out = std::collections::BTreeSet::new();
    for s in supports {
        if !s.is_zero() {
            out.insert(s.clone());
        }
        for s2 in supports {
            let diff = s.sub(s2);
            if !diff.is_zero() {
                out.insert(diff);
            }
        }
    }
    out.into_iter().collect()
}

/// First candidate slope whose weighted sums are nonzero on every support
/// vector and difference. The constraint set is finite, so the scan
/// terminates.
pub fn choose_beta<S: Scalar>(supports: &[ExponentVector]) -> BetaCertificate<S> {
    let vectors = vectors_to_check(supports);
    for beta in beta_candidates::<S>() {
        if let Some(cert) = certify_beta(&beta, &vectors) {
            return cert;
        }
    }
    unreachable!("the candidate scan is infinite and the constraint set finite")
}

fn certify_beta<S: Scalar>(beta: &S, vectors: &[ExponentVector]) -> Option<BetaCertificate<S>> {
    let mut checked = Vec::with_capacity(vectors.len());
    for s in vectors {
        let value = beta_weight(s, beta);
        if value.is_zero() {
            return None;
        }
        checked.push((s.clone(), value));
    }
    Some(BetaCertificate {
        beta: beta.clone(),
        checked,
        all_nonzero: true,
    })
}

/// Certificate for a caller-supplied slope over the same vector set.
pub fn certify_beta_for<S: Scalar>(
    beta: &S,
    supports: &[ExponentVector],
) -> Result<BetaCertificate<S>> {
    if !beta.is_positive() {
        return Err(Error::Invalid(format!("beta must be positive, got {beta}")));
    }
    certify_beta(beta, &vectors_to_check(supports)).ok_or_else(|| {
        Error::Invalid(format!("beta {beta} has a vanishing weighted sum"))
    })
}

/// Substitutes x_k -> u^(β^k) x_k: the coefficient of x^s picks up the
/// factor u^(Σ sᵢ βⁱ). The support is unchanged.
pub fn u_perturb<S: Scalar>(g: &PuiseuxLaurent<S>, beta: &S) -> PuiseuxLaurent<S> {
    g.map_coeffs(|s, gamma| {
        let shift = PuiseuxPoly::monomial(S::one(), S::zero(), beta_weight(s, beta));
        Ok(gamma.mul(&shift))
    })
    .expect("multiplying by a monomial preserves nonzero coefficients")
}

/// (β, β², …, β^d)
fn beta_vector<S: Scalar>(d: usize, beta: &S) -> Vec<S> {
    let mut out = Vec::with_capacity(d);
    let mut power = S::one();
    for _ in 0..d {
        power = power * beta.clone();
        out.push(power.clone());
    }
    out
}

/// Checks that the hypersurface of the perturbed polynomial is the original
/// hypersurface translated by -(0,…,0; β,…,β^d): piece by piece, the labels
/// agree, the t-parts agree, and the u-parts agree after translating back.
pub fn perturb_translation_check<S: Scalar>(f: &PuiseuxLaurent<S>, beta: &S) -> Result<bool> {
    let dec = rank2_decompose(f);
    let dec_u = rank2_decompose(&u_perturb(f, beta));
    if dec.pieces.len() != dec_u.pieces.len() {
        return Ok(false);
    }
    let shift = beta_vector(f.dim(), beta);
    for (a, b) in dec.pieces.iter().zip(dec_u.pieces.iter()) {
        if a.t_label != b.t_label || a.u_label != b.u_label {
            return Ok(false);
        }
        if !a.piece.t_part.poly_equal(&b.piece.t_part)? {
            return Ok(false);
        }
        if !a.piece.u_part.poly_equal(&b.piece.u_part.translate(&shift)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StableMethod<S: Scalar> {
    Perturbation(BetaCertificate<S>),
    Direct,
}

impl<S: Scalar> StableMethod<S> {
    pub fn tag(&self) -> &'static str {
        match self {
            StableMethod::Perturbation(_) => "perturbation",
            StableMethod::Direct => "direct",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableResult<S: Scalar> {
    pub d: usize,
    pub method: StableMethod<S>,
    /// Deduplicated projected pieces in the first block.
    pub pieces: Vec<Polyhedron<S>>,
    /// Affine dimension of each piece, in order.
    pub dims: Vec<i64>,
    /// The block products in R^{2d} before projecting; empty for the
    /// direct method.
    pub intermediate: Vec<PiecePolyhedron<S>>,
}

/// Maximal hypersurface cell of a rank-one tropical polynomial together
/// with the direction space of its affine hull.
struct MaxCell<S: Scalar> {
    cell: Polyhedron<S>,
    directions: Polyhedron<S>,
}

/// Direction space of the support cell of `label`: the common kernel of
/// the difference vectors.
fn direction_space<S: Scalar>(d: usize, label: &SupportSet) -> Polyhedron<S> {
    let s0 = label.first().expect("nonempty label");
    let eqs: Vec<_> = label
        .iter()
        .skip(1)
        .map(|s| (s.sub(s0).row::<S>(), S::zero()))
        .collect();
    Polyhedron::new(d, Vec::new(), eqs).expect("rows sized to the ambient dimension")
}

fn rank1_max_cells<S: Scalar>(f: &PuiseuxLaurent<S>) -> Result<(TropPoly1<S>, Vec<MaxCell<S>>)> {
    for (s, gamma) in f.terms() {
        if !gamma.is_u_free() {
            return Err(Error::CoefficientDependsOnU(format!(
                "coefficient of x^{s} is {gamma}"
            )));
        }
    }
    let f1 = project_poly(&tropicalize2(f), Axis::T);
    let cells = support_cells1(&f1);
    let max = maximal_cells(&cells)
        .into_iter()
        .map(|c| MaxCell {
            cell: c.cell.clone(),
            directions: direction_space(f.dim(), &c.label),
        })
        .collect();
    Ok((f1, max))
}

fn dedupe_polyhedra<S: Scalar>(pieces: Vec<Polyhedron<S>>) -> Result<Vec<Polyhedron<S>>> {
    let mut unique: Vec<Polyhedron<S>> = Vec::new();
    for p in pieces {
        let mut fresh = true;
        for kept in &unique {
            if kept.poly_equal(&p)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            unique.push(p);
        }
    }
    Ok(unique)
}

fn finish_result<S: Scalar>(
    d: usize,
    method: StableMethod<S>,
    pieces: Vec<Polyhedron<S>>,
    intermediate: Vec<PiecePolyhedron<S>>,
) -> Result<StableResult<S>> {
    let pieces = dedupe_polyhedra(pieces)?;
    let dims = pieces.iter().map(|p| p.affine_dim()).collect();
    Ok(StableResult {
        d,
        method,
        pieces,
        dims,
        intermediate,
    })
}

/// Stable intersection by symbolic perturbation with an automatically
/// certified slope.
pub fn stable_intersection<S: Scalar>(
    f: &PuiseuxLaurent<S>,
    g: &PuiseuxLaurent<S>,
) -> Result<StableResult<S>> {
    let mut supports = f.support();
    supports.extend(g.support());
    let cert = choose_beta(&supports);
    stable_with_certificate(f, g, cert)
}

/// Stable intersection with a caller-chosen slope; the certificate is
/// recomputed and the slope rejected if any weighted sum vanishes.
pub fn stable_intersection_with_beta<S: Scalar>(
    f: &PuiseuxLaurent<S>,
    g: &PuiseuxLaurent<S>,
    beta: &S,
) -> Result<StableResult<S>> {
    let mut supports = f.support();
    supports.extend(g.support());
    let cert = certify_beta_for(beta, &supports)?;
    stable_with_certificate(f, g, cert)
}

/// The hypersurface of g perturbed by u^(β^k) substitutions is the
/// hypersurface of g translated by -(0; βvec). Closed maximal pieces are
/// P_S x L_S for f and P_T x (L_T - βvec) for the perturbed g; each pair
/// intersects blockwise, and the pair contributes its t-block whenever the
/// u-block is feasible.
fn stable_with_certificate<S: Scalar>(
    f: &PuiseuxLaurent<S>,
    g: &PuiseuxLaurent<S>,
    cert: BetaCertificate<S>,
) -> Result<StableResult<S>> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch(g.dim(), f.dim()));
    }
    let d = f.dim();
    let (_, cells_f) = rank1_max_cells(f)?;
    let (_, cells_g) = rank1_max_cells(g)?;
    let shift: Vec<S> = beta_vector(d, &cert.beta)
        .into_iter()
        .map(|x| -x)
        .collect();

    let mut pieces = Vec::new();
    let mut intermediate = Vec::new();
    for cf in &cells_f {
        for cg in &cells_g {
            let t_int = cf.cell.intersect(&cg.cell)?;
            if !t_int.is_feasible() {
                continue;
            }
            let u_int = cf.directions.intersect(&cg.directions.translate(&shift)?)?;
            if !u_int.is_feasible() {
                continue;
            }
            intermediate.push(PiecePolyhedron::new(t_int.clone(), u_int)?);
            pieces.push(t_int);
        }
    }
    finish_result(d, StableMethod::Perturbation(cert), pieces, intermediate)
}

/// Combinatorial oracle: a cell pair contributes its intersection exactly
/// when the Minkowski sum of the cells has full dimension.
pub fn direct_stable_intersection<S: Scalar>(
    f: &PuiseuxLaurent<S>,
    g: &PuiseuxLaurent<S>,
) -> Result<StableResult<S>> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch(g.dim(), f.dim()));
    }
    let d = f.dim();
    let (_, cells_f) = rank1_max_cells(f)?;
    let (_, cells_g) = rank1_max_cells(g)?;
    let mut pieces = Vec::new();
    for cf in &cells_f {
        for cg in &cells_g {
            if minkowski_dim(&cf.cell, &cg.cell) != d as i64 {
                continue;
            }
            let t_int = cf.cell.intersect(&cg.cell)?;
            if t_int.is_feasible() {
                pieces.push(t_int);
            }
        }
    }
    finish_result(d, StableMethod::Direct, pieces, Vec::new())
}

/// Set equality of two results: every piece of one has a set-equal piece in
/// the other.
pub fn results_agree<S: Scalar>(a: &StableResult<S>, b: &StableResult<S>) -> Result<bool> {
    for p in &a.pieces {
        let mut hit = false;
        for q in &b.pieces {
            if p.poly_equal(q)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    for q in &b.pieces {
        let mut hit = false;
        for p in &a.pieces {
            if p.poly_equal(q)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Translates the second hypersurface by ε·v for each listed ε and
/// intersects cell pairs exactly. Rejects directions lying in the Minkowski
/// span of any dimension-deficient cell pair, since the translated
/// intersections would not converge to the stable intersection along such v.
pub fn epsilon_limit_probe<S: Scalar>(
    f: &PuiseuxLaurent<S>,
    g: &PuiseuxLaurent<S>,
    v: &[S],
    epsilons: &[S],
) -> Result<Vec<(S, Vec<Polyhedron<S>>)>> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch(g.dim(), f.dim()));
    }
    let d = f.dim();
    if v.len() != d {
        return Err(Error::DimensionMismatch(v.len(), d));
    }
    let (_, cells_f) = rank1_max_cells(f)?;
    let (_, cells_g) = rank1_max_cells(g)?;

    for cf in &cells_f {
        for cg in &cells_g {
            if minkowski_dim(&cf.cell, &cg.cell) == d as i64 {
                continue;
            }
            let mut span = cf.cell.direction_basis();
            span.extend(cg.cell.direction_basis());
            let base_rank = linalg::rank(&span);
            span.push(v.to_vec());
            if linalg::rank(&span) == base_rank {
                return Err(Error::NonGenericDirection);
            }
        }
    }

    let mut out = Vec::with_capacity(epsilons.len());
    for eps in epsilons {
        let offset: Vec<S> = v.iter().map(|x| x.clone() * eps.clone()).collect();
        let mut pieces = Vec::new();
        for cf in &cells_f {
            for cg in &cells_g {
                let shifted = cg.cell.translate(&offset)?;
                let meet = cf.cell.intersect(&shifted)?;
                if meet.is_feasible() {
                    pieces.push(meet);
                }
            }
        }
        out.push((eps.clone(), dedupe_polyhedra(pieces)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersurface::is_in_hypersurface2;
    use crate::rank2::TropPoint2;
    use crate::Rat;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn pp(s: &str) -> PuiseuxPoly<Rat> {
        s.parse().unwrap()
    }

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    /// f = xy + x + y + 1
    fn cross() -> PuiseuxLaurent<Rat> {
        PuiseuxLaurent::new(
            2,
            vec![
                (ev(&[1, 1]), pp("1")),
                (ev(&[1, 0]), pp("1")),
                (ev(&[0, 1]), pp("1")),
                (ev(&[0, 0]), pp("1")),
            ],
        )
        .unwrap()
    }

    /// g = x + t y + t, a tropical line with apex (1, 0)
    fn line() -> PuiseuxLaurent<Rat> {
        PuiseuxLaurent::new(
            2,
            vec![
                (ev(&[1, 0]), pp("1")),
                (ev(&[0, 1]), pp("t")),
                (ev(&[0, 0]), pp("t")),
            ],
        )
        .unwrap()
    }

    #[test]
    fn beta_scan_skips_degenerate_slopes() {
        // difference (2,-1) kills beta=2 because 2*2 - 4 = 0
        let cert = choose_beta::<Rat>(&[ev(&[2, 0]), ev(&[0, 1])]);
        assert_eq!(cert.beta, Rat::from_int(3));
        assert!(cert.verify());

        let cert = choose_beta::<Rat>(&[ev(&[1, 1]), ev(&[1, 0]), ev(&[0, 1]), ev(&[0, 0])]);
        assert_eq!(cert.beta, Rat::from_int(2));
        assert!(cert.verify());
        assert!(cert.checked.iter().all(|(_, v)| !v.is_zero()));

        // single monomial: only the vector itself is checked
        let cert = choose_beta::<Rat>(&[ev(&[3, 1])]);
        assert_eq!(cert.beta, Rat::from_int(2));
        assert_eq!(cert.checked.len(), 1);

        assert!(certify_beta_for(&Rat::from_int(2), &[ev(&[2, 0]), ev(&[0, 1])]).is_err());
        assert!(certify_beta_for(&Rat::from_int(-1), &[ev(&[1, 0])]).is_err());
    }

    #[test]
    fn perturbation_multiplies_by_u_powers() {
        let beta = Rat::from_int(2);
        let gu = u_perturb(&line(), &beta);
        assert_eq!(gu.coeff(&ev(&[1, 0])).unwrap(), &pp("u^2"));
        assert_eq!(gu.coeff(&ev(&[0, 1])).unwrap(), &pp("t*u^4"));
        assert_eq!(gu.coeff(&ev(&[0, 0])).unwrap(), &pp("t"));

        let constant = PuiseuxLaurent::new(1, vec![(ev(&[0]), pp("7"))]).unwrap();
        assert_eq!(u_perturb(&constant, &beta), constant);

        let x1 = PuiseuxLaurent::new(1, vec![(ev(&[1]), pp("1"))]).unwrap();
        assert_eq!(
            u_perturb(&x1, &beta).coeff(&ev(&[1])).unwrap(),
            &pp("u^2")
        );

        // fractional slope gives fractional u-exponents
        let half = Rat::ratio(5, 2);
        let gu = u_perturb(&x1, &half);
        assert_eq!(gu.coeff(&ev(&[1])).unwrap(), &pp("u^(5/2)"));
    }

    #[test]
    fn translation_identity() {
        let beta = Rat::from_int(2);
        let f = PuiseuxLaurent::new(
            2,
            vec![
                (ev(&[1, 0]), pp("1")),
                (ev(&[0, 1]), pp("t")),
                (ev(&[0, 0]), pp("t^2")),
            ],
        )
        .unwrap();
        assert!(perturb_translation_check(&f, &beta).unwrap());

        let binomial =
            PuiseuxLaurent::new(2, vec![(ev(&[1, 0]), pp("1")), (ev(&[0, 1]), pp("1"))]).unwrap();
        assert!(perturb_translation_check(&binomial, &beta).unwrap());

        assert!(perturb_translation_check(&line(), &beta).unwrap());
        assert!(perturb_translation_check(&cross(), &Rat::ratio(5, 2)).unwrap());
    }

    #[test]
    fn cross_and_line_meet_stably_in_two_points() {
        let result = stable_intersection(&cross(), &line()).unwrap();
        assert_eq!(result.method.tag(), "perturbation");
        assert_eq!(result.pieces.len(), 2);
        assert_eq!(result.dims, vec![0, 0]);
        let mut found = [false, false];
        for p in &result.pieces {
            if p.contains_point(&rv(&[1, 0])).unwrap() {
                found[0] = true;
            }
            if p.contains_point(&rv(&[0, -1])).unwrap() {
                found[1] = true;
            }
        }
        assert_eq!(found, [true, true]);

        // the non-transverse overlap along the x-axis is filtered by the
        // u-block, leaving three zero-dimensional block products
        assert_eq!(result.intermediate.len(), 3);
        for piece in &result.intermediate {
            assert_eq!(piece.affine_dim(), 0);
        }
        let expected = [
            (rv(&[0, -1]), rv(&[0, -2])),
            (rv(&[1, 0]), rv(&[-2, 0])),
            (rv(&[1, 0]), rv(&[2, 0])),
        ];
        for (t, u) in &expected {
            assert!(
                result
                    .intermediate
                    .iter()
                    .any(|p| p.contains_blocks(t, u).unwrap()),
                "missing block product at ({t:?}, {u:?})"
            );
        }
    }

    #[test]
    fn direct_oracle_agrees_on_the_example() {
        let stable = stable_intersection(&cross(), &line()).unwrap();
        let direct = direct_stable_intersection(&cross(), &line()).unwrap();
        assert_eq!(direct.method.tag(), "direct");
        assert_eq!(direct.pieces.len(), 2);
        assert!(results_agree(&stable, &direct).unwrap());
    }

    #[test]
    fn beta_independence() {
        let a = stable_intersection_with_beta(&cross(), &line(), &Rat::from_int(2)).unwrap();
        let b = stable_intersection_with_beta(&cross(), &line(), &Rat::from_int(3)).unwrap();
        let c = stable_intersection_with_beta(&cross(), &line(), &Rat::ratio(5, 2)).unwrap();
        assert!(results_agree(&a, &b).unwrap());
        assert!(results_agree(&a, &c).unwrap());
        assert_eq!(a.pieces.len(), b.pieces.len());
    }

    #[test]
    fn self_intersection_collapses_to_the_apex() {
        let result = stable_intersection(&line(), &line()).unwrap();
        assert_eq!(result.pieces.len(), 1);
        assert_eq!(result.dims, vec![0]);
        assert!(result.pieces[0].contains_point(&rv(&[1, 0])).unwrap());

        let direct = direct_stable_intersection(&line(), &line()).unwrap();
        assert!(results_agree(&result, &direct).unwrap());
    }

    #[test]
    fn two_lines_in_general_position_meet_once() {
        // apex (0,0) and apex (1,0): one transverse crossing
        let other = PuiseuxLaurent::new(
            2,
            vec![
                (ev(&[1, 0]), pp("1")),
                (ev(&[0, 1]), pp("1")),
                (ev(&[0, 0]), pp("1")),
            ],
        )
        .unwrap();
        let result = stable_intersection(&other, &line()).unwrap();
        assert_eq!(result.pieces.len(), 1);
        assert_eq!(result.dims, vec![0]);
        let direct = direct_stable_intersection(&other, &line()).unwrap();
        assert!(results_agree(&result, &direct).unwrap());
    }

    #[test]
    fn pieces_lie_on_both_hypersurfaces() {
        let result = stable_intersection(&cross(), &line()).unwrap();
        let f1 = project_poly(&tropicalize2(&cross()), Axis::T);
        let g1 = project_poly(&tropicalize2(&line()), Axis::T);
        for p in &result.pieces {
            let x = p.rel_int_point().unwrap();
            assert!(f1.is_in_hypersurface(&x).unwrap());
            assert!(g1.is_in_hypersurface(&x).unwrap());
        }
    }

    #[test]
    fn u_dependent_coefficients_are_rejected() {
        let bad = PuiseuxLaurent::new(
            2,
            vec![(ev(&[1, 0]), pp("u")), (ev(&[0, 1]), pp("1"))],
        )
        .unwrap();
        assert!(matches!(
            stable_intersection(&bad, &line()),
            Err(Error::CoefficientDependsOnU(_))
        ));
    }

    #[test]
    fn epsilon_probe_converges_exactly() {
        let v = rv(&[1, 2]);
        let eps: Vec<Rat> = [(1, 2), (1, 4), (1, 8)]
            .iter()
            .map(|&(n, d)| Rat::ratio(n, d))
            .collect();
        let probe = epsilon_limit_probe(&cross(), &line(), &v, &eps).unwrap();
        assert_eq!(probe.len(), 3);
        let stable = stable_intersection(&cross(), &line()).unwrap();

        let mut trajectories: Vec<Vec<Vec<Rat>>> = Vec::new();
        for (_, pieces) in &probe {
            assert_eq!(pieces.len(), 2, "transverse after perturbation");
            let mut points: Vec<Vec<Rat>> = pieces
                .iter()
                .map(|p| {
                    assert_eq!(p.affine_dim(), 0);
                    p.rel_int_point().unwrap()
                })
                .collect();
            points.sort();
            trajectories.push(points);
        }
        // the trajectories are affine in ε, so extrapolating the last two
        // samples to ε = 0 recovers the stable points exactly
        for i in 0..2 {
            let a = &trajectories[1][i];
            let b = &trajectories[2][i];
            let limit: Vec<Rat> = a
                .iter()
                .zip(b)
                .map(|(x, y)| y.clone() + y.clone() - x.clone())
                .collect();
            assert!(
                stable
                    .pieces
                    .iter()
                    .any(|p| p.contains_point(&limit).unwrap()),
                "extrapolated limit {limit:?} is not a stable point"
            );
        }

        // ε = 0 recovers the raw intersection with its non-transverse segment
        let raw = epsilon_limit_probe(&cross(), &line(), &v, &[Rat::zero()]).unwrap();
        assert!(raw[0].1.iter().any(|p| p.affine_dim() == 1));

        // a direction inside the span of a deficient pair is rejected
        assert_eq!(
            epsilon_limit_probe(&cross(), &line(), &rv(&[1, 0]), &eps).err(),
            Some(Error::NonGenericDirection)
        );
    }

    fn random_instance(rng: &mut ChaCha8Rng, d: usize) -> PuiseuxLaurent<Rat> {
        loop {
            let n_terms = rng.gen_range(2..=5);
            let mut terms: Vec<(ExponentVector, PuiseuxPoly<Rat>)> = Vec::new();
            for _ in 0..n_terms {
                let s = ExponentVector::new((0..d).map(|_| rng.gen_range(-2..=2)).collect());
                if terms.iter().any(|(t, _)| *t == s) {
                    continue;
                }
                let a = rng.gen_range(-3..=3);
                let c = rng.gen_range(1..=9);
                terms.push((
                    s,
                    PuiseuxPoly::monomial(Rat::from_int(c), Rat::from_int(a), Rat::zero()),
                ));
            }
            if terms.len() >= 2 {
                return PuiseuxLaurent::new(d, terms).unwrap();
            }
        }
    }

    #[test]
    fn methods_agree_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for case in 0..20 {
            let d = 2 + (case % 2);
            let f = random_instance(&mut rng, d);
            let g = random_instance(&mut rng, d);
            let stable = stable_intersection(&f, &g).unwrap();
            let direct = direct_stable_intersection(&f, &g).unwrap();
            assert!(
                results_agree(&stable, &direct).unwrap(),
                "disagreement for f = {f}, g = {g}"
            );
            if let StableMethod::Perturbation(cert) = &stable.method {
                assert!(perturb_translation_check(&f, &cert.beta).unwrap());
            }
        }
    }

    #[test]
    fn intermediate_products_lie_in_both_closures() {
        // the block products live in the intersection of the closed
        // hypersurfaces; boundary products need not lie on the open
        // hypersurfaces themselves
        let beta = Rat::from_int(2);
        let dec_f = rank2_decompose(&cross());
        let dec_gu = rank2_decompose(&u_perturb(&line(), &beta));
        let result = stable_intersection_with_beta(&cross(), &line(), &beta).unwrap();
        for piece in &result.intermediate {
            let (t, u) = piece.rel_int_blocks().unwrap();
            assert!(dec_f.closed_union_contains(&t, &u).unwrap());
            assert!(dec_gu.closed_union_contains(&t, &u).unwrap());
        }

        // and at least the transverse products are genuine members
        let f2 = tropicalize2(&cross());
        let g2 = tropicalize2(&u_perturb(&line(), &beta));
        let members = result
            .intermediate
            .iter()
            .filter(|piece| {
                let (t, u) = piece.rel_int_blocks().unwrap();
                let p = TropPoint2::from_blocks(&t, &u);
                is_in_hypersurface2(&f2, &p).unwrap() && is_in_hypersurface2(&g2, &p).unwrap()
            })
            .count();
        assert!(members >= 2);
    }
}
