//! JSON interchange for every object the command line reads or writes.
//!
//! Scalars serialize as canonical fraction strings ("p" or "p/q", positive
//! denominator, lowest terms); finite pair values as two-element arrays and
//! the infinite element as the string "inf". Points list their coordinates
//! as such pairs, so the external order is the interleaved one. Block
//! polyhedra keep the two blocks under separate keys instead of mixing
//! coordinates. Every serializer here has a parser that reconstructs an
//! equal in-memory object.

use serde_json::{json, Map, Value};

use crate::convexity::{
    ConeDecomposition, ConePiece, Covector, CovectorCell1, GeneratorMatrix, GoldfarbSit, GsRow,
    GsVertex,
};
use crate::hypersurface::{Rank2Decomposition, Rank2Piece, SupportCell1, SupportSet};
use crate::polyhedra::lex::{LexHalfspace, LexPolyhedron};
use crate::polyhedra::{PiecePolyhedron, Polyhedron};
use crate::puiseux::{PuiseuxLaurent, PuiseuxPoly};
use crate::rank2::{ExponentVector, Rank2Value, TropPoint2};
use crate::scalar::Scalar;
use crate::stable::{BetaCertificate, StableMethod, StableResult};
use crate::{Error, Result};

fn parse_err(what: &str, detail: &str) -> Error {
    Error::Parse(format!("{what}: {detail}"))
}

fn as_obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| parse_err(what, "expected an object"))
}

fn as_arr<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(what, "expected an array"))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| parse_err(what, "expected a string"))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(what, "expected a nonnegative integer"))
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| parse_err(what, "expected an integer"))
}

fn as_bool(v: &Value, what: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| parse_err(what, "expected a boolean"))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    m.get(key)
        .ok_or_else(|| parse_err(what, &format!("missing key \"{key}\"")))
}

pub fn rat_json<S: Scalar>(x: &S) -> Value {
    Value::String(x.to_string())
}

pub fn rat_from_json<S: Scalar>(v: &Value) -> Result<S> {
    let s = as_str(v, "rational")?;
    S::parse_rat(s).ok_or_else(|| parse_err("rational", &format!("cannot parse {s:?}")))
}

pub fn value2_json<S: Scalar>(v: &Rank2Value<S>) -> Value {
    match v.components() {
        Some((a, b)) => json!([rat_json(a), rat_json(b)]),
        None => Value::String("inf".into()),
    }
}

pub fn value2_from_json<S: Scalar>(v: &Value) -> Result<Rank2Value<S>> {
    if let Some(s) = v.as_str() {
        return if s == "inf" {
            Ok(Rank2Value::TropZero)
        } else {
            Err(parse_err("pair value", &format!("unknown token {s:?}")))
        };
    }
    let arr = as_arr(v, "pair value")?;
    if arr.len() != 2 {
        return Err(parse_err("pair value", "expected two components"));
    }
    Ok(Rank2Value::Finite(
        rat_from_json(&arr[0])?,
        rat_from_json(&arr[1])?,
    ))
}

pub fn point2_json<S: Scalar>(p: &TropPoint2<S>) -> Value {
    Value::Array(p.0.iter().map(value2_json).collect())
}

pub fn point2_from_json<S: Scalar>(v: &Value) -> Result<TropPoint2<S>> {
    let arr = as_arr(v, "point")?;
    Ok(TropPoint2(
        arr.iter().map(value2_from_json).collect::<Result<_>>()?,
    ))
}

pub fn expvec_json(s: &ExponentVector) -> Value {
    Value::Array(s.0.iter().map(|&x| json!(x)).collect())
}

pub fn expvec_from_json(v: &Value) -> Result<ExponentVector> {
    let arr = as_arr(v, "exponent vector")?;
    Ok(ExponentVector::new(
        arr.iter()
            .map(|x| as_i64(x, "exponent vector"))
            .collect::<Result<_>>()?,
    ))
}

fn support_set_json(s: &SupportSet) -> Value {
    Value::Array(s.iter().map(expvec_json).collect())
}

fn support_set_from_json(v: &Value) -> Result<SupportSet> {
    let arr = as_arr(v, "support set")?;
    arr.iter().map(expvec_from_json).collect()
}

fn row_json<S: Scalar>(row: &(Vec<S>, S)) -> Value {
    json!([
        Value::Array(row.0.iter().map(rat_json).collect()),
        rat_json(&row.1)
    ])
}

fn row_from_json<S: Scalar>(v: &Value) -> Result<(Vec<S>, S)> {
    let arr = as_arr(v, "constraint")?;
    if arr.len() != 2 {
        return Err(parse_err("constraint", "expected [coefficients, bound]"));
    }
    let coeffs = as_arr(&arr[0], "constraint coefficients")?
        .iter()
        .map(rat_from_json)
        .collect::<Result<_>>()?;
    Ok((coeffs, rat_from_json(&arr[1])?))
}

pub fn polyhedron_json<S: Scalar>(p: &Polyhedron<S>) -> Value {
    json!({
        "n": p.ambient_dim(),
        "le": Value::Array(p.ineqs().iter().map(row_json).collect()),
        "eq": Value::Array(p.eqs().iter().map(row_json).collect()),
    })
}

pub fn polyhedron_from_json<S: Scalar>(v: &Value) -> Result<Polyhedron<S>> {
    let m = as_obj(v, "polyhedron")?;
    let n = as_usize(get(m, "n", "polyhedron")?, "polyhedron dimension")?;
    let le = as_arr(get(m, "le", "polyhedron")?, "polyhedron inequalities")?
        .iter()
        .map(row_from_json)
        .collect::<Result<_>>()?;
    let eq = as_arr(get(m, "eq", "polyhedron")?, "polyhedron equalities")?
        .iter()
        .map(row_from_json)
        .collect::<Result<_>>()?;
    Polyhedron::new(n, le, eq)
}

pub fn piece_json<S: Scalar>(p: &PiecePolyhedron<S>) -> Value {
    json!({
        "Qt": polyhedron_json(&p.t_part),
        "Ru": polyhedron_json(&p.u_part),
    })
}

pub fn piece_from_json<S: Scalar>(v: &Value) -> Result<PiecePolyhedron<S>> {
    let m = as_obj(v, "block piece")?;
    PiecePolyhedron::new(
        polyhedron_from_json(get(m, "Qt", "block piece")?)?,
        polyhedron_from_json(get(m, "Ru", "block piece")?)?,
    )
}

pub fn lex_json<S: Scalar>(p: &LexPolyhedron<S>) -> Value {
    json!({
        "d": p.d(),
        "hs": Value::Array(
            p.halfspaces()
                .iter()
                .map(|h| json!({
                    "s": expvec_json(&h.s),
                    "q": json!([rat_json(&h.q.0), rat_json(&h.q.1)]),
                }))
                .collect(),
        ),
    })
}

pub fn lex_from_json<S: Scalar>(v: &Value) -> Result<LexPolyhedron<S>> {
    let m = as_obj(v, "lex polyhedron")?;
    let d = as_usize(get(m, "d", "lex polyhedron")?, "lex dimension")?;
    let hs = as_arr(get(m, "hs", "lex polyhedron")?, "lex halfspaces")?
        .iter()
        .map(|h| {
            let hm = as_obj(h, "lex halfspace")?;
            let q = as_arr(get(hm, "q", "lex halfspace")?, "lex bound")?;
            if q.len() != 2 {
                return Err(parse_err("lex bound", "expected two components"));
            }
            Ok(LexHalfspace {
                s: expvec_from_json(get(hm, "s", "lex halfspace")?)?,
                q: (rat_from_json(&q[0])?, rat_from_json(&q[1])?),
            })
        })
        .collect::<Result<_>>()?;
    LexPolyhedron::new(d, hs)
}

pub fn puiseux_json<S: Scalar>(p: &PuiseuxPoly<S>) -> Value {
    Value::Array(
        p.terms()
            .map(|((a, b), c)| {
                json!({
                    "c": rat_json(c),
                    "t": rat_json(a),
                    "u": rat_json(b),
                })
            })
            .collect(),
    )
}

pub fn puiseux_from_json<S: Scalar>(v: &Value) -> Result<PuiseuxPoly<S>> {
    let arr = as_arr(v, "coefficient")?;
    let terms = arr
        .iter()
        .map(|t| {
            let m = as_obj(t, "coefficient term")?;
            Ok((
                (
                    rat_from_json(get(m, "t", "coefficient term")?)?,
                    rat_from_json(get(m, "u", "coefficient term")?)?,
                ),
                rat_from_json(get(m, "c", "coefficient term")?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    PuiseuxPoly::new(terms)
}

pub fn laurent_json<S: Scalar>(f: &PuiseuxLaurent<S>) -> Value {
    json!({
        "d": f.dim(),
        "terms": Value::Array(
            f.terms()
                .map(|(s, gamma)| json!({
                    "s": expvec_json(s),
                    "coeff": puiseux_json(gamma),
                }))
                .collect(),
        ),
    })
}

pub fn laurent_from_json<S: Scalar>(v: &Value) -> Result<PuiseuxLaurent<S>> {
    let m = as_obj(v, "polynomial")?;
    let d = as_usize(get(m, "d", "polynomial")?, "polynomial dimension")?;
    let terms = as_arr(get(m, "terms", "polynomial")?, "polynomial terms")?
        .iter()
        .map(|t| {
            let tm = as_obj(t, "polynomial term")?;
            Ok((
                expvec_from_json(get(tm, "s", "polynomial term")?)?,
                puiseux_from_json(get(tm, "coeff", "polynomial term")?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    PuiseuxLaurent::new(d, terms)
}

pub fn gens_json<S: Scalar>(v: &GeneratorMatrix<S>) -> Value {
    json!({
        "d": v.d(),
        "gens": Value::Array(v.gens().iter().map(point2_json).collect()),
    })
}

pub fn gens_from_json<S: Scalar>(v: &Value) -> Result<GeneratorMatrix<S>> {
    let m = as_obj(v, "generators")?;
    let d = as_usize(get(m, "d", "generators")?, "generator dimension")?;
    let gens = as_arr(get(m, "gens", "generators")?, "generator list")?
        .iter()
        .map(point2_from_json)
        .collect::<Result<_>>()?;
    GeneratorMatrix::new(d, gens)
}

fn covector_json(c: &Covector) -> Value {
    Value::Array(
        c.edges
            .iter()
            .map(|&(i, j)| json!([i, j]))
            .collect(),
    )
}

fn covector_from_json(v: &Value) -> Result<Covector> {
    let arr = as_arr(v, "covector")?;
    let edges = arr
        .iter()
        .map(|e| {
            let pair = as_arr(e, "covector edge")?;
            if pair.len() != 2 {
                return Err(parse_err("covector edge", "expected [i, j]"));
            }
            Ok((
                as_usize(&pair[0], "covector edge")?,
                as_usize(&pair[1], "covector edge")?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Covector::new(edges))
}

pub fn decomposition_json<S: Scalar>(dec: &Rank2Decomposition<S>) -> Value {
    json!({
        "kind": "hypersurface",
        "d": dec.d,
        "pieces": Value::Array(
            dec.pieces
                .iter()
                .map(|p| json!({
                    "T": support_set_json(&p.t_label),
                    "S": support_set_json(&p.u_label),
                    "Qt": polyhedron_json(&p.piece.t_part),
                    "Ru": polyhedron_json(&p.piece.u_part),
                }))
                .collect(),
        ),
        "t_cells": Value::Array(
            dec.t_cells
                .iter()
                .map(|c| json!({
                    "label": support_set_json(&c.label),
                    "cell": polyhedron_json(&c.cell),
                }))
                .collect(),
        ),
    })
}

pub fn decomposition_from_json<S: Scalar>(v: &Value) -> Result<Rank2Decomposition<S>> {
    let m = as_obj(v, "decomposition")?;
    let d = as_usize(get(m, "d", "decomposition")?, "decomposition dimension")?;
    let pieces = as_arr(get(m, "pieces", "decomposition")?, "decomposition pieces")?
        .iter()
        .map(|p| {
            let pm = as_obj(p, "piece")?;
            Ok(Rank2Piece {
                t_label: support_set_from_json(get(pm, "T", "piece")?)?,
                u_label: support_set_from_json(get(pm, "S", "piece")?)?,
                piece: PiecePolyhedron::new(
                    polyhedron_from_json(get(pm, "Qt", "piece")?)?,
                    polyhedron_from_json(get(pm, "Ru", "piece")?)?,
                )?,
            })
        })
        .collect::<Result<_>>()?;
    let t_cells = as_arr(get(m, "t_cells", "decomposition")?, "decomposition cells")?
        .iter()
        .map(|c| {
            let cm = as_obj(c, "cell")?;
            Ok(SupportCell1 {
                label: support_set_from_json(get(cm, "label", "cell")?)?,
                cell: polyhedron_from_json(get(cm, "cell", "cell")?)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Rank2Decomposition { d, pieces, t_cells })
}

pub fn cone_decomposition_json<S: Scalar>(dec: &ConeDecomposition<S>) -> Value {
    json!({
        "kind": "cone",
        "d": dec.d,
        "n": dec.n,
        "pieces": Value::Array(
            dec.pieces
                .iter()
                .map(|p| json!({
                    "T": covector_json(&p.t_covector),
                    "S": covector_json(&p.u_covector),
                    "At": polyhedron_json(&p.piece.t_part),
                    "Bu": polyhedron_json(&p.piece.u_part),
                }))
                .collect(),
        ),
        "t_cells": Value::Array(
            dec.t_cells
                .iter()
                .map(|c| json!({
                    "covector": covector_json(&c.covector),
                    "cell": polyhedron_json(&c.cell),
                }))
                .collect(),
        ),
    })
}

pub fn cone_decomposition_from_json<S: Scalar>(v: &Value) -> Result<ConeDecomposition<S>> {
    let m = as_obj(v, "cone decomposition")?;
    let d = as_usize(get(m, "d", "cone decomposition")?, "cone dimension")?;
    let n = as_usize(get(m, "n", "cone decomposition")?, "generator count")?;
    let pieces = as_arr(get(m, "pieces", "cone decomposition")?, "cone pieces")?
        .iter()
        .map(|p| {
            let pm = as_obj(p, "cone piece")?;
            Ok(ConePiece {
                t_covector: covector_from_json(get(pm, "T", "cone piece")?)?,
                u_covector: covector_from_json(get(pm, "S", "cone piece")?)?,
                piece: PiecePolyhedron::new(
                    polyhedron_from_json(get(pm, "At", "cone piece")?)?,
                    polyhedron_from_json(get(pm, "Bu", "cone piece")?)?,
                )?,
            })
        })
        .collect::<Result<_>>()?;
    let t_cells = as_arr(get(m, "t_cells", "cone decomposition")?, "cone cells")?
        .iter()
        .map(|c| {
            let cm = as_obj(c, "cone cell")?;
            Ok(CovectorCell1 {
                covector: covector_from_json(get(cm, "covector", "cone cell")?)?,
                cell: polyhedron_from_json(get(cm, "cell", "cone cell")?)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ConeDecomposition {
        d,
        n,
        pieces,
        t_cells,
    })
}

fn certificate_json<S: Scalar>(cert: &BetaCertificate<S>) -> Value {
    json!({
        "beta": rat_json(&cert.beta),
        "checked": Value::Array(
            cert.checked
                .iter()
                .map(|(s, w)| json!({"s": expvec_json(s), "weight": rat_json(w)}))
                .collect(),
        ),
        "all_nonzero": cert.all_nonzero,
    })
}

fn certificate_from_json<S: Scalar>(v: &Value) -> Result<BetaCertificate<S>> {
    let m = as_obj(v, "certificate")?;
    let checked = as_arr(get(m, "checked", "certificate")?, "certificate checks")?
        .iter()
        .map(|c| {
            let cm = as_obj(c, "certificate check")?;
            Ok((
                expvec_from_json(get(cm, "s", "certificate check")?)?,
                rat_from_json(get(cm, "weight", "certificate check")?)?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(BetaCertificate {
        beta: rat_from_json(get(m, "beta", "certificate")?)?,
        checked,
        all_nonzero: as_bool(get(m, "all_nonzero", "certificate")?, "certificate flag")?,
    })
}

pub fn stable_result_json<S: Scalar>(r: &StableResult<S>) -> Value {
    let method = match &r.method {
        StableMethod::Perturbation(cert) => json!({
            "name": "perturbation",
            "certificate": certificate_json(cert),
        }),
        StableMethod::Direct => json!({"name": "direct"}),
    };
    json!({
        "kind": "stable",
        "d": r.d,
        "method": method,
        "pieces": Value::Array(r.pieces.iter().map(polyhedron_json).collect()),
        "dims": Value::Array(r.dims.iter().map(|&x| json!(x)).collect()),
        "intermediate": Value::Array(r.intermediate.iter().map(piece_json).collect()),
    })
}

pub fn stable_result_from_json<S: Scalar>(v: &Value) -> Result<StableResult<S>> {
    let m = as_obj(v, "stable result")?;
    let mm = as_obj(get(m, "method", "stable result")?, "stable method")?;
    let method = match as_str(get(mm, "name", "stable method")?, "stable method name")? {
        "perturbation" => StableMethod::Perturbation(certificate_from_json(get(
            mm,
            "certificate",
            "stable method",
        )?)?),
        "direct" => StableMethod::Direct,
        other => return Err(parse_err("stable method", &format!("unknown name {other:?}"))),
    };
    let pieces = as_arr(get(m, "pieces", "stable result")?, "stable pieces")?
        .iter()
        .map(polyhedron_from_json)
        .collect::<Result<_>>()?;
    let dims = as_arr(get(m, "dims", "stable result")?, "stable dims")?
        .iter()
        .map(|x| as_i64(x, "stable dims"))
        .collect::<Result<_>>()?;
    let intermediate = as_arr(get(m, "intermediate", "stable result")?, "stable blocks")?
        .iter()
        .map(piece_from_json)
        .collect::<Result<_>>()?;
    Ok(StableResult {
        d: as_usize(get(m, "d", "stable result")?, "stable dimension")?,
        method,
        pieces,
        dims,
        intermediate,
    })
}

pub fn gs_json<S: Scalar>(gs: &GoldfarbSit<S>) -> Value {
    json!({
        "kind": "gscube",
        "d": gs.d,
        "ordinary": Value::Array(
            gs.ordinary
                .iter()
                .map(|r| json!({
                    "coeffs": Value::Array(r.coeffs.iter().map(puiseux_json).collect()),
                    "rhs": puiseux_json(&r.rhs),
                }))
                .collect(),
        ),
        "rank2": lex_json(&gs.rank2),
        "rank1": polyhedron_json(&gs.rank1),
        "vertices": Value::Array(
            gs.vertices
                .iter()
                .map(|v| json!({
                    "choices": Value::Array(v.choices.iter().map(|&b| json!(b)).collect()),
                    "coords": Value::Array(v.coords.iter().map(puiseux_json).collect()),
                    "val": point2_json(&v.val),
                    "tight_rows": Value::Array(v.tight_rows.iter().map(|&r| json!(r)).collect()),
                }))
                .collect(),
        ),
    })
}

pub fn gs_from_json<S: Scalar>(v: &Value) -> Result<GoldfarbSit<S>> {
    let m = as_obj(v, "cube")?;
    let ordinary = as_arr(get(m, "ordinary", "cube")?, "cube rows")?
        .iter()
        .map(|r| {
            let rm = as_obj(r, "cube row")?;
            let coeffs = as_arr(get(rm, "coeffs", "cube row")?, "cube row coefficients")?
                .iter()
                .map(puiseux_from_json)
                .collect::<Result<_>>()?;
            Ok(GsRow {
                coeffs,
                rhs: puiseux_from_json(get(rm, "rhs", "cube row")?)?,
            })
        })
        .collect::<Result<_>>()?;
    let vertices = as_arr(get(m, "vertices", "cube")?, "cube vertices")?
        .iter()
        .map(|vx| {
            let vm = as_obj(vx, "cube vertex")?;
            let choices = as_arr(get(vm, "choices", "cube vertex")?, "vertex choices")?
                .iter()
                .map(|b| as_bool(b, "vertex choices"))
                .collect::<Result<_>>()?;
            let coords = as_arr(get(vm, "coords", "cube vertex")?, "vertex coordinates")?
                .iter()
                .map(puiseux_from_json)
                .collect::<Result<_>>()?;
            let tight_rows = as_arr(get(vm, "tight_rows", "cube vertex")?, "vertex rows")?
                .iter()
                .map(|r| as_usize(r, "vertex rows"))
                .collect::<Result<_>>()?;
            Ok(GsVertex {
                choices,
                coords,
                val: point2_from_json(get(vm, "val", "cube vertex")?)?,
                tight_rows,
            })
        })
        .collect::<Result<_>>()?;
    Ok(GoldfarbSit {
        d: as_usize(get(m, "d", "cube")?, "cube dimension")?,
        ordinary,
        rank2: lex_from_json(get(m, "rank2", "cube")?)?,
        rank1: polyhedron_from_json(get(m, "rank1", "cube")?)?,
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::{cone_decompose, goldfarb_sit};
    use crate::hypersurface::rank2_decompose;
    use crate::stable::{direct_stable_intersection, stable_intersection};
    use crate::{Rat, Value2};

    fn lp(d: usize, terms: &[(&[i64], &str)]) -> PuiseuxLaurent<Rat> {
        PuiseuxLaurent::new(
            d,
            terms
                .iter()
                .map(|(s, c)| (ExponentVector::new(s.to_vec()), c.parse().unwrap())),
        )
        .unwrap()
    }

    fn reparse<T, F>(v: &Value, parse: F) -> T
    where
        F: Fn(&Value) -> Result<T>,
    {
        let text = serde_json::to_string(v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        parse(&back).unwrap()
    }

    #[test]
    fn scalar_and_pair_round_trip() {
        for s in ["0", "7", "-3", "22/7", "-5/9"] {
            let x: Rat = Rat::parse_rat(s).unwrap();
            assert_eq!(rat_from_json::<Rat>(&rat_json(&x)).unwrap(), x);
        }
        let v = Value2::pair(3, -2);
        assert_eq!(value2_from_json::<Rat>(&value2_json(&v)).unwrap(), v);
        let z = Value2::TropZero;
        assert_eq!(value2_json(&z), Value::String("inf".into()));
        assert_eq!(value2_from_json::<Rat>(&value2_json(&z)).unwrap(), z);
        assert!(value2_from_json::<Rat>(&json!("nan")).is_err());
        assert!(rat_from_json::<Rat>(&json!("1/0")).is_err());
    }

    #[test]
    fn polyhedron_round_trip() {
        let p = Polyhedron::<Rat>::new(
            2,
            vec![(vec![Rat::from_int(1), Rat::from_int(-1)], Rat::ratio(1, 2))],
            vec![(vec![Rat::from_int(0), Rat::from_int(1)], Rat::from_int(3))],
        )
        .unwrap();
        assert_eq!(reparse(&polyhedron_json(&p), polyhedron_from_json::<Rat>), p);
    }

    #[test]
    fn polynomial_round_trip() {
        let f = lp(
            2,
            &[
                (&[1, 1], "1"),
                (&[1, 0], "t^(1/2)*u"),
                (&[0, -1], "t + 2*t*u^2"),
                (&[0, 0], "3"),
            ],
        );
        assert_eq!(reparse(&laurent_json(&f), laurent_from_json::<Rat>), f);
    }

    #[test]
    fn decomposition_round_trip() {
        let f = lp(2, &[(&[1, 0], "1"), (&[0, 1], "t"), (&[0, 0], "t^2*u")]);
        let dec = rank2_decompose(&f);
        assert_eq!(
            reparse(&decomposition_json(&dec), decomposition_from_json::<Rat>),
            dec
        );
    }

    #[test]
    fn stable_round_trip_both_methods() {
        let f = lp(
            2,
            &[(&[1, 1], "1"), (&[1, 0], "1"), (&[0, 1], "1"), (&[0, 0], "1")],
        );
        let g = lp(2, &[(&[1, 0], "1"), (&[0, 1], "t"), (&[0, 0], "t")]);
        let stable = stable_intersection(&f, &g).unwrap();
        assert_eq!(
            reparse(&stable_result_json(&stable), stable_result_from_json::<Rat>),
            stable
        );
        let direct = direct_stable_intersection(&f, &g).unwrap();
        assert_eq!(
            reparse(&stable_result_json(&direct), stable_result_from_json::<Rat>),
            direct
        );
    }

    #[test]
    fn cone_round_trip() {
        let v = GeneratorMatrix::new(
            1,
            vec![
                TropPoint2(vec![Value2::pair(-2, 0)]),
                TropPoint2(vec![Value2::pair(2, 1)]),
            ],
        )
        .unwrap()
        .homogenize();
        assert_eq!(reparse(&gens_json(&v), gens_from_json::<Rat>), v);
        let dec = cone_decompose(&v);
        assert_eq!(
            reparse(
                &cone_decomposition_json(&dec),
                cone_decomposition_from_json::<Rat>
            ),
            dec
        );
    }

    #[test]
    fn cube_round_trip() {
        let gs = goldfarb_sit::<Rat>(3).unwrap();
        assert_eq!(reparse(&gs_json(&gs), gs_from_json::<Rat>), gs);
    }

    #[test]
    fn malformed_inputs_are_reported() {
        assert!(polyhedron_from_json::<Rat>(&json!({"n": 2, "le": []})).is_err());
        assert!(laurent_from_json::<Rat>(&json!({"d": 1, "terms": [{"s": [0]}]})).is_err());
        assert!(gens_from_json::<Rat>(&json!({"d": 1, "gens": [["inf"]]})).is_err());
        let err = polyhedron_from_json::<Rat>(&json!([1, 2]));
        assert!(matches!(err, Err(Error::Parse(_))));
    }
}
