//! Write-only SVG rendering of planar decompositions, one panel per
//! valuation parameter. All geometry (clipping, vertex enumeration) is
//! exact; floating point appears only in the final mapping onto the
//! canvas, so the output is deterministic for a fixed input.

use std::fmt::Write as _;

use crate::convexity::ConeDecomposition;
use crate::hypersurface::Rank2Decomposition;
use crate::polyhedra::Polyhedron;
use crate::rank2::ExponentVector;
use crate::scalar::Scalar;
use crate::{Error, Result};

const PANEL: f64 = 340.0;
const MARGIN: f64 = 34.0;
const PALETTE: [&str; 6] = [
    "#4c78a8", "#f58518", "#54a24b", "#b279a2", "#e45756", "#72b7b2",
];

/// World window (xmin, xmax, ymin, ymax).
pub type BBox<S> = (S, S, S, S);

struct Shape {
    outline: Vec<(f64, f64)>,
    dim: i64,
    label: String,
    color: usize,
}

struct Panel {
    title: &'static str,
    shapes: Vec<Shape>,
}

fn box_polyhedron<S: Scalar>(bbox: &BBox<S>) -> Polyhedron<S> {
    let (xmin, xmax, ymin, ymax) = bbox;
    let rows = vec![
        (vec![-S::one(), S::zero()], -xmin.clone()),
        (vec![S::one(), S::zero()], xmax.clone()),
        (vec![S::zero(), -S::one()], -ymin.clone()),
        (vec![S::zero(), S::one()], ymax.clone()),
    ];
    Polyhedron::from_ineqs(2, rows).expect("rows sized to the plane")
}

/// Vertices of the polyhedron clipped to the window, computed exactly by
/// pairwise line intersection, then ordered by angle around the centroid.
fn clipped_outline<S: Scalar>(p: &Polyhedron<S>, bbox: &BBox<S>) -> Result<Vec<(f64, f64)>> {
    let clipped = p.intersect(&box_polyhedron(bbox))?;
    if !clipped.is_feasible() {
        return Ok(Vec::new());
    }
    let mut rows: Vec<(Vec<S>, S)> = clipped.eqs().to_vec();
    rows.extend(clipped.ineqs().iter().cloned());
    let mut verts: Vec<(S, S)> = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a, b) = &rows[i];
            let (c, d) = &rows[j];
            let det = a[0].clone() * c[1].clone() - a[1].clone() * c[0].clone();
            if det.is_zero() {
                continue;
            }
            let x = (b.clone() * c[1].clone() - a[1].clone() * d.clone()) / det.clone();
            let y = (a[0].clone() * d.clone() - b.clone() * c[0].clone()) / det;
            if clipped.contains_point(&[x.clone(), y.clone()])? {
                let v = (x, y);
                if !verts.contains(&v) {
                    verts.push(v);
                }
            }
        }
    }
    let mut out: Vec<(f64, f64)> = verts
        .iter()
        .map(|(x, y)| (to_f64(x), to_f64(y)))
        .collect();
    if out.len() > 2 {
        let cx = out.iter().map(|v| v.0).sum::<f64>() / out.len() as f64;
        let cy = out.iter().map(|v| v.1).sum::<f64>() / out.len() as f64;
        out.sort_by(|p, q| {
            let ap = (p.1 - cy).atan2(p.0 - cx);
            let aq = (q.1 - cy).atan2(q.0 - cx);
            ap.partial_cmp(&aq).expect("finite angles")
        });
    }
    Ok(out)
}

fn to_f64<S: Scalar>(x: &S) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Window enclosing a relative interior point and every finite coordinate
/// extreme of the listed polyhedra, padded by one unit.
fn auto_bbox<S: Scalar>(polys: &[&Polyhedron<S>]) -> BBox<S> {
    let mut seen: Vec<(S, S)> = Vec::new();
    for p in polys {
        if !p.is_feasible() {
            continue;
        }
        if let Ok(point) = p.rel_int_point() {
            seen.push((point[0].clone(), point[1].clone()));
        }
        for k in 0..2 {
            for sign in [S::one(), -S::one()] {
                let mut c = vec![S::zero(), S::zero()];
                c[k] = sign;
                if let crate::polyhedra::LpOutcome::Optimal { point, .. } = p.lp_max(&c) {
                    seen.push((point[0].clone(), point[1].clone()));
                }
            }
        }
    }
    let cap = S::from_int(20);
    let clamp = |v: S| {
        if v > cap {
            cap.clone()
        } else if v < -cap.clone() {
            -cap.clone()
        } else {
            v
        }
    };
    let mut xmin = S::from_int(-3);
    let mut xmax = S::from_int(3);
    let mut ymin = S::from_int(-3);
    let mut ymax = S::from_int(3);
    for (x, y) in seen {
        let x = clamp(x);
        let y = clamp(y);
        if x < xmin {
            xmin = x.clone();
        }
        if x > xmax {
            xmax = x;
        }
        if y < ymin {
            ymin = y.clone();
        }
        if y > ymax {
            ymax = y;
        }
    }
    (
        xmin - S::one(),
        xmax + S::one(),
        ymin - S::one(),
        ymax + S::one(),
    )
}

fn support_label(s: &std::collections::BTreeSet<ExponentVector>) -> String {
    let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn covector_label(c: &crate::convexity::Covector) -> String {
    let inner: Vec<String> = c.edges.iter().map(|(i, j)| format!("({i},{j})")).collect();
    format!("{{{}}}", inner.join(","))
}

fn render(panels: [Panel; 2], bboxf: (f64, f64, f64, f64)) -> String {
    let width = 2.0 * PANEL + 3.0 * MARGIN;
    let height = PANEL + 2.0 * MARGIN;
    let (xmin, xmax, ymin, ymax) = bboxf;
    let sx = PANEL / (xmax - xmin);
    let sy = PANEL / (ymax - ymin);
    let mapx = move |x: f64| (x - xmin) * sx;
    let mapy = move |y: f64| PANEL - (y - ymin) * sy;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\" font-family=\"sans-serif\">"
    );
    let _ = writeln!(
        out,
        "  <rect width=\"{width:.0}\" height=\"{height:.0}\" fill=\"white\"/>"
    );
    for (pi, panel) in panels.iter().enumerate() {
        let tx = MARGIN + pi as f64 * (PANEL + MARGIN);
        let _ = writeln!(out, "  <g transform=\"translate({tx:.1},{MARGIN:.1})\">");
        let _ = writeln!(
            out,
            "    <rect width=\"{PANEL:.0}\" height=\"{PANEL:.0}\" fill=\"none\" stroke=\"#333\"/>"
        );
        let _ = writeln!(
            out,
            "    <text x=\"4\" y=\"-8\" font-size=\"13\" fill=\"#333\">{}</text>",
            panel.title
        );
        // axes
        if xmin < 0.0 && xmax > 0.0 {
            let x0 = mapx(0.0);
            let _ = writeln!(
                out,
                "    <line class=\"axis\" x1=\"{x0:.2}\" y1=\"0\" x2=\"{x0:.2}\" y2=\"{PANEL:.0}\" stroke=\"#bbb\"/>"
            );
        }
        if ymin < 0.0 && ymax > 0.0 {
            let y0 = mapy(0.0);
            let _ = writeln!(
                out,
                "    <line class=\"axis\" x1=\"0\" y1=\"{y0:.2}\" x2=\"{PANEL:.0}\" y2=\"{y0:.2}\" stroke=\"#bbb\"/>"
            );
        }
        for shape in &panel.shapes {
            if shape.outline.is_empty() {
                continue;
            }
            let color = PALETTE[shape.color % PALETTE.len()];
            let pts: Vec<String> = shape
                .outline
                .iter()
                .map(|(x, y)| format!("{:.2},{:.2}", mapx(*x), mapy(*y)))
                .collect();
            match shape.dim {
                n if n >= 2 => {
                    // the piece is open: its boundary belongs to other
                    // pieces, so the outline is dashed
                    let _ = writeln!(
                        out,
                        "    <polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.18\" \
                         stroke=\"{color}\" stroke-dasharray=\"5,4\"/>",
                        pts.join(" ")
                    );
                }
                1 => {
                    let _ = writeln!(
                        out,
                        "    <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" \
                         stroke-width=\"2\"/>",
                        pts.join(" ")
                    );
                }
                _ => {
                    let (x, y) = shape.outline[0];
                    let _ = writeln!(
                        out,
                        "    <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"{color}\"/>",
                        mapx(x),
                        mapy(y)
                    );
                }
            }
            let cx = shape.outline.iter().map(|v| v.0).sum::<f64>() / shape.outline.len() as f64;
            let cy = shape.outline.iter().map(|v| v.1).sum::<f64>() / shape.outline.len() as f64;
            let _ = writeln!(
                out,
                "    <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\" fill=\"#222\">{}</text>",
                mapx(cx) + 4.0,
                mapy(cy) - 4.0,
                shape.label
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}

fn shapes_for<S: Scalar>(
    items: &[(&Polyhedron<S>, String)],
    bbox: &BBox<S>,
) -> Result<Vec<Shape>> {
    let mut shapes = Vec::new();
    for (idx, (poly, label)) in items.iter().enumerate() {
        let outline = clipped_outline(poly, bbox)?;
        if outline.is_empty() {
            continue;
        }
        shapes.push(Shape {
            outline,
            dim: poly.affine_dim(),
            label: label.clone(),
            color: idx,
        });
    }
    Ok(shapes)
}

/// Two-panel picture of a hypersurface decomposition: the rank-one cell
/// complex on the left, the second-block fibers of every piece on the
/// right.
pub fn svg_for_decomposition<S: Scalar>(
    dec: &Rank2Decomposition<S>,
    bbox: Option<BBox<S>>,
) -> Result<String> {
    if dec.d != 2 {
        return Err(Error::UnsupportedDimension(dec.d));
    }
    let mut polys: Vec<&Polyhedron<S>> = Vec::new();
    for c in &dec.t_cells {
        polys.push(&c.cell);
    }
    for p in &dec.pieces {
        polys.push(&p.piece.t_part);
        polys.push(&p.piece.u_part);
    }
    let bbox = bbox.unwrap_or_else(|| auto_bbox(&polys));

    let t_items: Vec<(&Polyhedron<S>, String)> = dec
        .t_cells
        .iter()
        .map(|c| (&c.cell, support_label(&c.label)))
        .collect();
    let u_items: Vec<(&Polyhedron<S>, String)> = dec
        .pieces
        .iter()
        .map(|p| (&p.piece.u_part, support_label(&p.u_label)))
        .collect();
    let panels = [
        Panel {
            title: "t-projection",
            shapes: shapes_for(&t_items, &bbox)?,
        },
        Panel {
            title: "u-fibers",
            shapes: shapes_for(&u_items, &bbox)?,
        },
    ];
    let bf = (
        to_f64(&bbox.0),
        to_f64(&bbox.1),
        to_f64(&bbox.2),
        to_f64(&bbox.3),
    );
    Ok(render(panels, bf))
}

/// Two-panel picture of a cone decomposition, covector labels on both
/// blocks.
pub fn svg_for_cone<S: Scalar>(
    dec: &ConeDecomposition<S>,
    bbox: Option<BBox<S>>,
) -> Result<String> {
    if dec.d != 2 {
        return Err(Error::UnsupportedDimension(dec.d));
    }
    let mut polys: Vec<&Polyhedron<S>> = Vec::new();
    for c in &dec.t_cells {
        polys.push(&c.cell);
    }
    for p in &dec.pieces {
        polys.push(&p.piece.t_part);
        polys.push(&p.piece.u_part);
    }
    let bbox = bbox.unwrap_or_else(|| auto_bbox(&polys));

    let t_items: Vec<(&Polyhedron<S>, String)> = dec
        .t_cells
        .iter()
        .map(|c| (&c.cell, covector_label(&c.covector)))
        .collect();
    let u_items: Vec<(&Polyhedron<S>, String)> = dec
        .pieces
        .iter()
        .map(|p| (&p.piece.u_part, covector_label(&p.u_covector)))
        .collect();
    let panels = [
        Panel {
            title: "t-projection",
            shapes: shapes_for(&t_items, &bbox)?,
        },
        Panel {
            title: "u-fibers",
            shapes: shapes_for(&u_items, &bbox)?,
        },
    ];
    let bf = (
        to_f64(&bbox.0),
        to_f64(&bbox.1),
        to_f64(&bbox.2),
        to_f64(&bbox.3),
    );
    Ok(render(panels, bf))
}
