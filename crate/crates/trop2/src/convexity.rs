//! Rank-two tropical cones: sectors, covectors, covector cells, the
//! block-product decomposition, and the Goldfarb-Sit cube family.
//!
//! A rank-two tropical cone is the set of tropical combinations of finitely
//! many generators. Membership is decided by covectors: bipartite edge sets
//! recording which sectors of which generators contain a point. The cone
//! decomposes into products of rank-one covector cells, one factor per
//! valuation parameter, mirroring the hypersurface decomposition.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::polyhedra::lex::{LexHalfspace, LexPolyhedron};
use crate::polyhedra::{PiecePolyhedron, Polyhedron};
use crate::puiseux::PuiseuxPoly;
use crate::rank2::{ExponentVector, Rank2Value, TropPoint2};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Generators of a rank-two tropical cone, columns indexed by generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorMatrix<S: Scalar> {
    d: usize,
    gens: Vec<TropPoint2<S>>,
}

impl<S: Scalar> GeneratorMatrix<S> {
    pub fn new(d: usize, gens: Vec<TropPoint2<S>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Invalid("a cone needs at least one generator".into()));
        }
        for (j, g) in gens.iter().enumerate() {
            if g.dim() != d {
                return Err(Error::DimensionMismatch(g.dim(), d));
            }
            if g.0.iter().all(|c| !c.is_finite()) {
                return Err(Error::Invalid(format!(
                    "generator {} has no finite coordinate",
                    j + 1
                )));
            }
        }
        Ok(GeneratorMatrix { d, gens })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[TropPoint2<S>] {
        &self.gens
    }

    /// Cone over the polytope: a new leading coordinate pinned to (0,0).
    pub fn homogenize(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut coords = Vec::with_capacity(self.d + 1);
                coords.push(Rank2Value::one());
                coords.extend(g.0.iter().cloned());
                TropPoint2(coords)
            })
            .collect();
        GeneratorMatrix {
            d: self.d + 1,
            gens,
        }
    }
}

/// Bipartite edge set between coordinates `i` in [d] and generators `j`
/// in [n], both zero-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Covector {
    pub edges: BTreeSet<(usize, usize)>,
}

impl Covector {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> Self {
        Covector {
            edges: edges.into_iter().collect(),
        }
    }

    /// Every coordinate is matched to some generator.
    pub fn is_bounded(&self, d: usize) -> bool {
        (0..d).all(|i| self.edges.iter().any(|&(k, _)| k == i))
    }

    pub fn isolated_generators(&self, n: usize) -> Vec<usize> {
        (0..n)
            .filter(|j| !self.edges.iter().any(|&(_, k)| k == *j))
            .collect()
    }

    pub fn is_subset(&self, other: &Covector) -> bool {
        self.edges.is_subset(&other.edges)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Whether `p` lies in the `i`th sector of `v`: the `i`th entry of `v` is
/// finite and p_k - p_i ≤ v_k - v_i lexicographically for every finite v_k.
pub fn in_sector<S: Scalar>(p: &TropPoint2<S>, v: &TropPoint2<S>, i: usize) -> Result<bool> {
    if p.dim() != v.dim() {
        return Err(Error::DimensionMismatch(p.dim(), v.dim()));
    }
    let (vi1, vi2) = match v.0[i].components() {
        Some(c) => c,
        None => return Ok(false),
    };
    let (pi1, pi2) = p.0[i]
        .components()
        .ok_or_else(|| Error::Invalid("sector membership needs a finite point".into()))?;
    for k in 0..v.dim() {
        let (vk1, vk2) = match v.0[k].components() {
            Some(c) => c,
            None => continue,
        };
        let (pk1, pk2) = p.0[k]
            .components()
            .ok_or_else(|| Error::Invalid("sector membership needs a finite point".into()))?;
        let lhs = (pk1.clone() - pi1.clone(), pk2.clone() - pi2.clone());
        let rhs = (vk1.clone() - vi1.clone(), vk2.clone() - vi2.clone());
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edges (i, j) such that `p` lies in the `i`th sector of generator `j`.
pub fn covector_of_point<S: Scalar>(
    p: &TropPoint2<S>,
    v: &GeneratorMatrix<S>,
) -> Result<Covector> {
    if p.dim() != v.d {
        return Err(Error::DimensionMismatch(p.dim(), v.d));
    }
    let mut edges = BTreeSet::new();
    for (j, g) in v.gens.iter().enumerate() {
        for i in 0..v.d {
            if in_sector(p, g, i)? {
                edges.insert((i, j));
            }
        }
    }
    Ok(Covector { edges })
}

/// A finite point lies in the cone exactly when its covector matches every
/// coordinate to some generator.
pub fn is_in_cone<S: Scalar>(p: &TropPoint2<S>, v: &GeneratorMatrix<S>) -> Result<bool> {
    Ok(covector_of_point(p, v)?.is_bounded(v.d))
}

/// Lex-halfspace system of a covector: for each edge (i, j) and each finite
/// coordinate k of the generator, p_k - p_i ≤ v_k - v_i. Every generator
/// must carry at least one edge.
pub fn covector_cell<S: Scalar>(
    cov: &Covector,
    v: &GeneratorMatrix<S>,
) -> Result<LexPolyhedron<S>> {
    if let Some(&j) = cov.isolated_generators(v.n()).first() {
        return Err(Error::IsolatedGenerator(j + 1));
    }
    let mut halfspaces = Vec::new();
    for &(i, j) in &cov.edges {
        let g = &v.gens[j];
        let (vi1, vi2) = g.0[i]
            .components()
            .ok_or_else(|| Error::Invalid(format!("edge ({i},{j}) at an infinite entry")))?;
        for k in 0..v.d {
            if k == i {
                continue;
            }
            let (vk1, vk2) = match g.0[k].components() {
                Some(c) => c,
                None => continue,
            };
            let mut s = vec![0i64; v.d];
            s[k] = 1;
            s[i] = -1;
            halfspaces.push(LexHalfspace {
                s: ExponentVector::new(s),
                q: (vk1.clone() - vi1.clone(), vk2.clone() - vi2.clone()),
            });
        }
    }
    LexPolyhedron::new(v.d, halfspaces)
}

/// Rank-one generator columns; `None` marks an infinite entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankOneGenerators<S: Scalar> {
    d: usize,
    cols: Vec<Vec<Option<S>>>,
}

impl<S: Scalar> RankOneGenerators<S> {
    pub fn new(d: usize, cols: Vec<Vec<Option<S>>>) -> Result<Self> {
        for col in &cols {
            if col.len() != d {
                return Err(Error::DimensionMismatch(col.len(), d));
            }
            if col.iter().all(|c| c.is_none()) {
                return Err(Error::Invalid("generator with empty support".into()));
            }
        }
        if cols.is_empty() {
            return Err(Error::Invalid("a cone needs at least one generator".into()));
        }
        Ok(RankOneGenerators { d, cols })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    fn entry(&self, i: usize, j: usize) -> Option<&S> {
        self.cols[j][i].as_ref()
    }
}

/// H-representation of the rank-one covector cell: rows p_k - p_i ≤
/// v_k - v_i over the edges, finite k only, in edge-then-coordinate order.
pub fn covector_cell1<S: Scalar>(
    gens: &RankOneGenerators<S>,
    cov: &Covector,
) -> Result<Polyhedron<S>> {
    let mut ineqs = Vec::new();
    for &(i, j) in &cov.edges {
        let vi = gens
            .entry(i, j)
            .ok_or_else(|| Error::Invalid(format!("edge ({i},{j}) at an infinite entry")))?;
        for k in 0..gens.d {
            if k == i {
                continue;
            }
            let vk = match gens.entry(k, j) {
                Some(c) => c,
                None => continue,
            };
            let mut row = vec![S::zero(); gens.d];
            row[k] = S::one();
            row[i] = -S::one();
            ineqs.push((row, vk.clone() - vi.clone()));
        }
    }
    Polyhedron::new(gens.d, ineqs, Vec::new())
}

/// Rank-one covector of a finite point.
pub fn covector_of_point1<S: Scalar>(p: &[S], gens: &RankOneGenerators<S>) -> Result<Covector> {
    if p.len() != gens.d {
        return Err(Error::DimensionMismatch(p.len(), gens.d));
    }
    let mut edges = BTreeSet::new();
    for j in 0..gens.n() {
        for i in 0..gens.d {
            let vi = match gens.entry(i, j) {
                Some(c) => c,
                None => continue,
            };
            let inside = (0..gens.d).all(|k| match gens.entry(k, j) {
                None => true,
                Some(vk) => {
                    p[k].clone() - p[i].clone() <= vk.clone() - vi.clone()
                }
            });
            if inside {
                edges.insert((i, j));
            }
        }
    }
    Ok(Covector { edges })
}

/// Covector cell under its maximal label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CovectorCell1<S: Scalar> {
    pub covector: Covector,
    pub cell: Polyhedron<S>,
}

/// Adds every edge whose full sector-row system is valid on the cell.
fn maximal_covector<S: Scalar>(
    gens: &RankOneGenerators<S>,
    cov: &Covector,
    cell: &Polyhedron<S>,
) -> Covector {
    let mut out = cov.clone();
    for j in 0..gens.n() {
        for i in 0..gens.d {
            if out.edges.contains(&(i, j)) {
                continue;
            }
            let vi = match gens.entry(i, j) {
                Some(c) => c,
                None => continue,
            };
            let implied = (0..gens.d).all(|k| {
                if k == i {
                    return true;
                }
                let vk = match gens.entry(k, j) {
                    Some(c) => c,
                    None => return true,
                };
                let mut row = vec![S::zero(); gens.d];
                row[k] = S::one();
                row[i] = -S::one();
                match cell.lp_max(&row) {
                    crate::polyhedra::LpOutcome::Optimal { value, .. } => {
                        value <= vk.clone() - vi.clone()
                    }
                    _ => false,
                }
            });
            if implied {
                out.edges.insert((i, j));
            }
        }
    }
    out
}

/// Enumerates every nonempty covector cell of the sector arrangement,
/// each under its maximal covector, sorted by (edge count, edges).
///
/// Mirrors the support-cell search: cells of covector unions are
/// intersections of cells, subsets of feasible covectors stay feasible, so
/// single-edge seeds grown one edge at a time reach every cell.
pub fn covector_cells1<S: Scalar>(gens: &RankOneGenerators<S>) -> Vec<CovectorCell1<S>> {
    let mut all_edges = Vec::new();
    for j in 0..gens.n() {
        for i in 0..gens.d {
            if gens.entry(i, j).is_some() {
                all_edges.push((i, j));
            }
        }
    }

    let mut cells: BTreeMap<Covector, Polyhedron<S>> = BTreeMap::new();
    let mut seen: BTreeSet<Covector> = BTreeSet::new();
    let mut queue: VecDeque<Covector> = VecDeque::new();

    let process = |cand: Covector,
                   cells: &mut BTreeMap<Covector, Polyhedron<S>>,
                   seen: &mut BTreeSet<Covector>,
                   queue: &mut VecDeque<Covector>| {
        if !seen.insert(cand.clone()) {
            return;
        }
        let cell = covector_cell1(gens, &cand).expect("edges at finite entries");
        if !cell.is_feasible() {
            return;
        }
        let label = maximal_covector(gens, &cand, &cell);
        if !cells.contains_key(&label) {
            let canonical = covector_cell1(gens, &label).expect("edges at finite entries");
            cells.insert(label.clone(), canonical);
            queue.push_back(label.clone());
        }
        seen.insert(label);
    };

    for &e in &all_edges {
        process(
            Covector::new([e]),
            &mut cells,
            &mut seen,
            &mut queue,
        );
    }
    while let Some(label) = queue.pop_front() {
        for &e in &all_edges {
            if !label.edges.contains(&e) {
                let mut cand = label.clone();
                cand.edges.insert(e);
                process(cand, &mut cells, &mut seen, &mut queue);
            }
        }
    }

    // a label is some point's covector exactly when, besides being
    // row-maximal, it keeps an edge at every generator: each point sees an
    // argmax sector of each generator, and an uncovered generator means the
    // cell's interior points all carry strictly larger covectors
    let mut out: Vec<CovectorCell1<S>> = cells
        .into_iter()
        .filter(|(covector, _)| covector.isolated_generators(gens.n()).is_empty())
        .map(|(covector, cell)| CovectorCell1 { covector, cell })
        .collect();
    out.sort_by(|a, b| {
        (a.covector.len(), &a.covector).cmp(&(b.covector.len(), &b.covector))
    });
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConePiece<S: Scalar> {
    pub t_covector: Covector,
    pub u_covector: Covector,
    pub piece: PiecePolyhedron<S>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeDecomposition<S: Scalar> {
    pub d: usize,
    pub n: usize,
    pub pieces: Vec<ConePiece<S>>,
    /// Covector cells of the first-component projection of the generators.
    pub t_cells: Vec<CovectorCell1<S>>,
}

impl<S: Scalar> ConeDecomposition<S> {
    pub fn interior_pieces_containing(&self, t: &[S], u: &[S]) -> Result<Vec<usize>> {
        let mut hits = Vec::new();
        for (i, piece) in self.pieces.iter().enumerate() {
            if piece.piece.rel_int_contains_blocks(t, u)? {
                hits.push(i);
            }
        }
        Ok(hits)
    }
}

fn t_projection<S: Scalar>(v: &GeneratorMatrix<S>) -> RankOneGenerators<S> {
    let cols = v
        .gens
        .iter()
        .map(|g| {
            g.0.iter()
                .map(|c| c.components().map(|(t, _)| t.clone()))
                .collect()
        })
        .collect();
    RankOneGenerators::new(v.d, cols).expect("generators keep a finite coordinate")
}

/// u-components of the entries kept by the covector mask; everything
/// outside the mask becomes infinite.
fn masked_u_projection<S: Scalar>(
    v: &GeneratorMatrix<S>,
    mask: &Covector,
) -> Result<RankOneGenerators<S>> {
    let cols = v
        .gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            g.0.iter()
                .enumerate()
                .map(|(i, c)| {
                    if mask.edges.contains(&(i, j)) {
                        c.components().map(|(_, u)| u.clone())
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    RankOneGenerators::new(v.d, cols)
}

/// Decomposition of the cone into block products: T runs over covector
/// cells of the t-projection, S over covector cells of the u-projection of
/// the generators masked to T, keeping pairs whose inner covector matches
/// every coordinate.
pub fn cone_decompose<S: Scalar>(v: &GeneratorMatrix<S>) -> ConeDecomposition<S> {
    let t_cells = covector_cells1(&t_projection(v));
    let mut pieces = Vec::new();
    for tc in &t_cells {
        let masked = match masked_u_projection(v, &tc.covector) {
            Ok(m) => m,
            // a covector cell label touches every generator, so masking
            // cannot empty a column; guard anyway
            Err(_) => continue,
        };
        for uc in covector_cells1(&masked) {
            if !uc.covector.is_bounded(v.d) {
                continue;
            }
            pieces.push(ConePiece {
                t_covector: tc.covector.clone(),
                u_covector: uc.covector,
                piece: PiecePolyhedron::new(tc.cell.clone(), uc.cell)
                    .expect("blocks share the ambient dimension"),
            });
        }
    }
    pieces.sort_by(|a, b| {
        (
            a.t_covector.len(),
            &a.t_covector,
            a.u_covector.len(),
            &a.u_covector,
        )
            .cmp(&(
                b.t_covector.len(),
                &b.t_covector,
                b.u_covector.len(),
                &b.u_covector,
            ))
    });
    ConeDecomposition {
        d: v.d,
        n: v.n(),
        pieces,
        t_cells,
    }
}

/// Closure of the cone as closed block products, deduplicated.
pub fn cone_closure<S: Scalar>(dec: &ConeDecomposition<S>) -> Result<Vec<PiecePolyhedron<S>>> {
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
    Ok(unique)
}

/// Ordinary generators whose valuation image is the given point set:
/// coordinate (a, b) becomes the monomial t^a u^b, infinite coordinates
/// become zero.
pub fn monomial_lift<S: Scalar>(points: &[TropPoint2<S>]) -> Vec<Vec<PuiseuxPoly<S>>> {
    points
        .iter()
        .map(|p| {
            p.0.iter()
                .map(|c| match c.components() {
                    Some((a, b)) => PuiseuxPoly::monomial(S::one(), a.clone(), b.clone()),
                    None => PuiseuxPoly::zero(),
                })
                .collect()
        })
        .collect()
}

/// One inequality Σ coeff_i · x_i ≤ rhs with Puiseux entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GsRow<S: Scalar> {
    pub coeffs: Vec<PuiseuxPoly<S>>,
    pub rhs: PuiseuxPoly<S>,
}

impl<S: Scalar> GsRow<S> {
    fn holds_at(&self, x: &[PuiseuxPoly<S>]) -> (bool, bool) {
        let mut lhs = PuiseuxPoly::zero();
        for (c, xi) in self.coeffs.iter().zip(x) {
            lhs = lhs.add(&c.mul(xi));
        }
        let slack = self.rhs.sub(&lhs);
        if slack.is_zero() {
            (true, true)
        } else {
            (slack.leading_sign().expect("nonzero") > 0, false)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GsVertex<S: Scalar> {
    /// One choice per inequality pair; false picks the first row.
    pub choices: Vec<bool>,
    pub coords: Vec<PuiseuxPoly<S>>,
    pub val: TropPoint2<S>,
    pub tight_rows: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoldfarbSit<S: Scalar> {
    pub d: usize,
    /// 2d inequalities over the two-parameter field, paired as
    /// (2k, 2k+1) per variable: 0 ≤ x₁ ≤ t^(d-1), then for j = 2..d
    /// x_{j-1} ≤ u·x_j and x_j ≤ t^(d-j)·u.
    pub ordinary: Vec<GsRow<S>>,
    /// Valuation image: a lex-halfspace system (the vacuous upper bound on
    /// the first coordinate is dropped).
    pub rank2: LexPolyhedron<S>,
    /// Image after the substitutions u -> 1/2, then val: an ordinary
    /// polyhedron, a polytrope.
    pub rank1: Polyhedron<S>,
    pub vertices: Vec<GsVertex<S>>,
}

/// The cube family: 2d inequalities whose 2^d one-per-pair equality
/// choices each solve to a distinct feasible vertex with exactly d tight
/// rows. Vertices are exact monomial vectors.
pub fn goldfarb_sit<S: Scalar>(d: usize) -> Result<GoldfarbSit<S>> {
    if d < 2 {
        return Err(Error::Invalid(format!("cube dimension {d} is below 2")));
    }
    let one = || PuiseuxPoly::constant(S::one());
    let zero = PuiseuxPoly::<S>::zero();
    let tpow = |a: i64| PuiseuxPoly::monomial(S::one(), S::from_int(a), S::zero());
    let tu = |a: i64, b: i64| PuiseuxPoly::monomial(S::one(), S::from_int(a), S::from_int(b));

    let mut ordinary: Vec<GsRow<S>> = Vec::with_capacity(2 * d);
    // pair 1: 0 ≤ x₁ and x₁ ≤ t^(d-1)
    let mut row = vec![zero.clone(); d];
    row[0] = PuiseuxPoly::constant(-S::one());
    ordinary.push(GsRow {
        coeffs: row,
        rhs: zero.clone(),
    });
    let mut row = vec![zero.clone(); d];
    row[0] = one();
    ordinary.push(GsRow {
        coeffs: row,
        rhs: tpow(d as i64 - 1),
    });
    for j in 2..=d {
        // x_{j-1} - u·x_j ≤ 0
        let mut row = vec![zero.clone(); d];
        row[j - 2] = one();
        row[j - 1] = PuiseuxPoly::monomial(-S::one(), S::zero(), S::one());
        ordinary.push(GsRow {
            coeffs: row,
            rhs: zero.clone(),
        });
        // x_j ≤ t^(d-j)·u
        let mut row = vec![zero.clone(); d];
        row[j - 1] = one();
        ordinary.push(GsRow {
            coeffs: row,
            rhs: tu(d as i64 - j as i64, 1),
        });
    }

    // valuation image, with order reversal: x ≤ y on positives gives
    // val₂(x) ≥ val₂(y)
    let mut halfspaces = Vec::new();
    let unit = |k: usize, sign: i64| {
        let mut s = vec![0i64; d];
        s[k] = sign;
        ExponentVector::new(s)
    };
    halfspaces.push(LexHalfspace {
        s: unit(0, -1),
        q: (S::from_int(1 - d as i64), S::zero()),
    });
    for j in 2..=d {
        halfspaces.push(LexHalfspace {
            s: {
                let mut s = vec![0i64; d];
                s[j - 1] = 1;
                s[j - 2] = -1;
                ExponentVector::new(s)
            },
            q: (S::zero(), -S::one()),
        });
        halfspaces.push(LexHalfspace {
            s: unit(j - 1, -1),
            q: (S::from_int(j as i64 - d as i64), -S::one()),
        });
    }
    let rank2 = LexPolyhedron::new(d, halfspaces)?;

    // rank-one polytrope: first components of the lex system
    let mut ineqs = Vec::new();
    let mut urow = vec![S::zero(); d];
    urow[0] = -S::one();
    ineqs.push((urow, S::from_int(1 - d as i64)));
    for j in 2..=d {
        let mut row = vec![S::zero(); d];
        row[j - 1] = S::one();
        row[j - 2] = -S::one();
        ineqs.push((row, S::zero()));
        let mut row = vec![S::zero(); d];
        row[j - 1] = -S::one();
        ineqs.push((row, S::from_int(j as i64 - d as i64)));
    }
    let rank1 = Polyhedron::new(d, ineqs, Vec::new())?;

    // vertices by forward substitution: pair 1 fixes x₁, pair j fixes x_j
    // from x_{j-1} or from the monomial bound
    let mut vertices = Vec::with_capacity(1 << d);
    let u_inv = PuiseuxPoly::monomial(S::one(), S::zero(), -S::one());
    for mask in 0u32..(1 << d) {
        let choices: Vec<bool> = (0..d).map(|k| mask & (1 << k) != 0).collect();
        let mut coords: Vec<PuiseuxPoly<S>> = Vec::with_capacity(d);
        coords.push(if choices[0] {
            tpow(d as i64 - 1)
        } else {
            zero.clone()
        });
        for j in 2..=d {
            let next = if choices[j - 1] {
                tu(d as i64 - j as i64, 1)
            } else {
                u_inv.mul(&coords[j - 2])
            };
            coords.push(next);
        }

        let mut tight_rows = Vec::new();
        for (r, row) in ordinary.iter().enumerate() {
            let (holds, tight) = row.holds_at(&coords);
            if !holds {
                return Err(Error::Invalid(format!(
                    "infeasible vertex for choices {choices:?} at row {r}"
                )));
            }
            if tight {
                tight_rows.push(r);
            }
        }
        let val = TropPoint2(coords.iter().map(|c| c.val2()).collect());
        vertices.push(GsVertex {
            choices,
            coords,
            val,
            tight_rows,
        });
    }

    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if vertices[a].coords == vertices[b].coords {
                return Err(Error::Invalid(format!(
                    "coinciding vertices for choices {:?} and {:?}",
                    vertices[a].choices, vertices[b].choices
                )));
            }
        }
    }

    Ok(GoldfarbSit {
        d,
        ordinary,
        rank2,
        rank1,
        vertices,
    })
}
